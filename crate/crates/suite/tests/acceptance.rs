//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polargrass::exterior::{alternating_from_coordinates, decompose, satisfies_grassmannian};
use polargrass::field::{Field, FiniteField, Rationals, SigmaKind, Sign};
use polargrass::forms::{identity_matrix, symplectic_matrix};
use polargrass::polar::{
    gaussian_binomial, k2_matrix_lhs, kernel_criterion, verify_exhaustive, SubspaceEnumerator, TheoremContext,
    DEFAULT_ENUMERATION_BUDGET,
};
use polargrass::props::{base_change_instance, random_alternating, run_identity_suite, SuiteConfig};
use polargrass::tensor::DEFAULT_SIZE_CAP;
use polargrass::SesquilinearForm;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CONFIG_LIMIT: Duration = Duration::from_secs(60);
const SUITE_LIMIT: Duration = Duration::from_secs(30);
const SUITE_TRIALS: u64 = 1000;
const SUITE_DIM: usize = 4;
const RANDOM_INSTANCES: usize = 10_000;
const BASE_CHANGES: usize = 500;
const SEED: u64 = 2024;

struct Line {
    pass: bool,
    detail: String,
}

fn gf(p: u64) -> FiniteField {
    FiniteField::prime(p).unwrap()
}

fn gf4() -> FiniteField {
    FiniteField::quadratic(2, SigmaKind::Frobenius).unwrap()
}

fn symplectic<F: Field>(f: F, n: usize) -> SesquilinearForm<F> {
    SesquilinearForm::validated(f, &symplectic_matrix(&f, n), Sign::Minus).unwrap()
}

fn diagonal<F: Field>(f: F, n: usize) -> SesquilinearForm<F> {
    SesquilinearForm::validated(f, &identity_matrix(&f, n), Sign::Plus).unwrap()
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

struct Config {
    name: String,
    form: SesquilinearForm<FiniteField>,
    k: usize,
    expect: Option<(u64, u64)>,
}

fn criterion_one_configs() -> Vec<Config> {
    let cfg = |name: &str, form: &SesquilinearForm<FiniteField>, k, expect| Config {
        name: format!("{name} k={k}"),
        form: form.clone(),
        k,
        expect,
    };
    let mut out = vec![
        cfg("W(3,2)", &symplectic(gf(2), 4), 2, Some((35, 15))),
        cfg("W(3,3)", &symplectic(gf(3), 4), 2, Some((130, 40))),
        cfg("W(5,2)", &symplectic(gf(2), 6), 2, None),
        cfg("W(5,2)", &symplectic(gf(2), 6), 3, None),
        cfg("H(3,4)", &diagonal(gf4(), 4), 1, Some((85, 45))),
        cfg("H(3,4)", &diagonal(gf4(), 4), 2, Some((357, 27))),
    ];
    for p in [3, 5] {
        for n in [4, 5] {
            let q = diagonal(gf(p), n);
            let witt = q.witt_index().unwrap();
            for k in 1..=witt {
                out.push(cfg(&format!("sym I{n} GF({p})"), &q, k, None));
            }
        }
    }
    out.push(cfg("W(3,3) + radical", &symplectic(gf(3), 5), 2, None));
    out
}

/// Brute-force isotropy count: every pair of basis rows of every subspace.
fn isotropic_count(form: &SesquilinearForm<FiniteField>, k: usize) -> u64 {
    SubspaceEnumerator::new(*form.field(), form.dim(), k)
        .unwrap()
        .filter(|w| {
            let f = form.field();
            w.rows().iter().all(|a| w.rows().iter().all(|b| f.is_zero(&form.evaluate(a, b).unwrap())))
        })
        .count() as u64
}

fn criterion_1(configs: &[Config]) -> Line {
    let mut bad = Vec::new();
    let mut slowest = Duration::ZERO;
    for c in configs {
        let start = Instant::now();
        let r = verify_exhaustive(&c.form, c.k, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SIZE_CAP).unwrap();
        let took = start.elapsed();
        slowest = slowest.max(took);
        let q = c.form.field().order().unwrap();
        let expected_total = gaussian_binomial(c.form.dim(), c.k, q).unwrap() as u64;
        let (total, members) = c.expect.unwrap_or((expected_total, isotropic_count(&c.form, c.k)));
        let degenerate = !c.form.is_nondegenerate();
        let ok = r.passed()
            && r.enumerated == total
            && r.enumerated == expected_total
            && r.isotropic == members
            && r.main_zero == members
            && r.shortcut_checked != degenerate
            && took < CONFIG_LIMIT;
        if !ok {
            bad.push(format!("{} ({}/{} vs {total}/{members})", c.name, r.enumerated, r.isotropic));
        }
    }
    Line {
        pass: bad.is_empty(),
        detail: format!(
            "{} configurations, slowest {:.2}s (limit {}s){}",
            configs.len(),
            slowest.as_secs_f64(),
            CONFIG_LIMIT.as_secs(),
            failures_suffix(&bad)
        ),
    }
}

fn failures_suffix(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join(", "))
    }
}

fn main_vs_rewritten<F: Field>(form: &SesquilinearForm<F>, k: usize, x: &polargrass::Tensor<F>) -> bool {
    let ctx = TheoremContext::new(form, k).unwrap();
    ctx.theorem_lhs(x).unwrap().is_zero() == ctx.theorem_lhs_alt(x).unwrap().is_zero()
}

fn criterion_2() -> Line {
    let mut violations = 0;
    let mut checked = 0;
    let f = gf(2);
    let w = symplectic(f, 4);
    let elems = f.elements().unwrap();
    for code in 0..64usize {
        let coords: Vec<_> = (0..6).map(|i| elems[(code >> i) & 1]).collect();
        let x = alternating_from_coordinates(f, 4, 2, &coords).unwrap();
        checked += 1;
        violations += !main_vs_rewritten(&w, 2, &x) as usize;
    }
    let forms = [symplectic(gf(3), 4), diagonal(gf(3), 4), diagonal(gf4(), 4), symplectic(gf4(), 4)];
    let mut r = rng(2);
    for i in 0..RANDOM_INSTANCES {
        let form = &forms[i % forms.len()];
        let k = 2 + (i / forms.len()) % 2;
        let x = random_alternating(*form.field(), form.dim(), k, &mut r);
        checked += 1;
        violations += !main_vs_rewritten(form, k, &x) as usize;
    }
    Line { pass: violations == 0, detail: format!("{checked} tensors, {violations} violations") }
}

fn criterion_3(configs: &[Config]) -> Line {
    let mut violations = 0;
    let mut checked = 0;
    let mut forms = 0;
    for c in configs.iter().filter(|c| c.form.is_nondegenerate()) {
        forms += 1;
        let ctx = TheoremContext::new(&c.form, c.k).unwrap();
        for w in SubspaceEnumerator::new(*c.form.field(), c.form.dim(), c.k).unwrap() {
            let x = w.wedge().unwrap();
            checked += 1;
            violations += (ctx.theorem_lhs(&x).unwrap().is_zero() != ctx.nondeg_lhs(&x).unwrap().is_zero()) as usize;
        }
    }
    Line {
        pass: violations == 0,
        detail: format!("{forms} configurations, {checked} decomposable tensors, {violations} violations"),
    }
}

fn k2_chain_instances<F: Field>(forms: &[SesquilinearForm<F>], count: usize, r: &mut ChaCha8Rng) -> usize {
    (0..count)
        .filter(|i| {
            let form = &forms[i % forms.len()];
            let x = random_alternating(*form.field(), form.dim(), 2, r);
            let ctx = TheoremContext::new(form, 2).unwrap();
            ctx.theorem_lhs_alt(&x).unwrap() != k2_matrix_lhs(&x, form).unwrap()
        })
        .count()
}

fn criterion_4() -> Line {
    let per_field = RANDOM_INSTANCES / 5;
    let mut r = rng(4);
    let mut violations = 0;
    violations += k2_chain_instances(&[symplectic(gf(2), 4), symplectic(gf(2), 6)], per_field, &mut r);
    violations += k2_chain_instances(&[symplectic(gf(3), 4), diagonal(gf(3), 4), diagonal(gf(3), 5)], per_field, &mut r);
    violations += k2_chain_instances(&[diagonal(gf4(), 4), symplectic(gf4(), 4)], per_field, &mut r);
    violations += k2_chain_instances(&[diagonal(gf(5), 4), diagonal(gf(5), 5), symplectic(gf(5), 4)], per_field, &mut r);
    violations += k2_chain_instances(&[symplectic(Rationals, 4), diagonal(Rationals, 4)], per_field, &mut r);
    Line {
        pass: violations == 0,
        detail: format!("{} matrices over GF(2), GF(3), GF(4), GF(5), Q; {violations} unequal", 5 * per_field),
    }
}

fn criterion_5() -> Line {
    let config = SuiteConfig { dim: SUITE_DIM, trials: SUITE_TRIALS, inject_fault: false };
    let start = Instant::now();
    let mut failures = 0;
    let mut checks = 0;
    for (i, p) in [2, 3, 5].into_iter().enumerate() {
        let report = run_identity_suite(gf(p), &config, &mut rng(50 + i as u64)).unwrap();
        failures += report.failures();
        checks += report.checks.len();
    }
    let took = start.elapsed();
    Line {
        pass: failures == 0 && took < SUITE_LIMIT,
        detail: format!(
            "{checks} checks x {SUITE_TRIALS} trials over GF(2), GF(3), GF(5) at N={SUITE_DIM}, {failures} failures, {:.1}s (limit {}s)",
            took.as_secs_f64(),
            SUITE_LIMIT.as_secs()
        ),
    }
}

#[derive(Default)]
struct BaseChangeTally {
    literal: usize,
    scalar: usize,
    covariant: usize,
    vanishing: usize,
    wedge_rule: usize,
}

fn base_changes<F: Field>(f: F, tally: &mut BaseChangeTally, r: &mut ChaCha8Rng) {
    for i in 0..BASE_CHANGES {
        let k = 1 + i % 3;
        let o = base_change_instance(f, 4, k, r).unwrap();
        tally.literal += !o.literal as usize;
        tally.scalar += !o.scalar as usize;
        tally.covariant += !o.covariant as usize;
        tally.vanishing += !o.vanishing as usize;
        tally.wedge_rule += !o.wedge_rule as usize;
    }
}

fn criterion_6() -> Line {
    let mut t = BaseChangeTally::default();
    let mut r = rng(6);
    for p in [2, 3, 5] {
        base_changes(gf(p), &mut t, &mut r);
    }
    base_changes(gf4(), &mut t, &mut r);
    base_changes(Rationals, &mut t, &mut r);
    let total = 5 * BASE_CHANGES;
    Line {
        pass: t.literal == 0,
        detail: format!(
            "{total} base changes (N=4, k=1..3, GF(2), GF(3), GF(4), GF(5), Q): literal Xi_F.X_F = Xi_E.X_E fails {}; \
             covariant form fails {}, full contraction fails {}, vanishing fails {}, wedge rule fails {}",
            t.literal, t.covariant, t.scalar, t.vanishing, t.wedge_rule
        ),
    }
}

fn criterion_7() -> Line {
    let f = gf(2);
    let mut violations = 0;
    let mut pairs = 0;
    let mut included = 0;
    for k in [2, 3] {
        let subspaces: Vec<_> = SubspaceEnumerator::new(f, 4, k).unwrap().collect();
        for xs in &subspaces {
            for xis in &subspaces {
                let (inclusion, zero) = kernel_criterion(f, 4, xs.rows(), xis.rows()).unwrap();
                pairs += 1;
                included += inclusion as usize;
                violations += (inclusion != zero) as usize;
            }
        }
    }
    Line {
        pass: violations == 0,
        detail: format!("{pairs} pairs over GF(2)^4, k=2,3 ({included} with inclusion), {violations} violations"),
    }
}

fn criterion_8() -> Line {
    let mut round_trips = 0u128;
    let mut expected = 0u128;
    let mut bad = 0;
    for p in [2, 3] {
        let f = gf(p);
        for n in 1..=5 {
            for k in 1..=n {
                expected += gaussian_binomial(n, k, p).unwrap();
                for w in SubspaceEnumerator::new(f, n, k).unwrap() {
                    round_trips += 1;
                    bad += (decompose(&w.wedge().unwrap()).unwrap().as_ref() != Some(&w)) as usize;
                }
            }
        }
    }
    let f = gf(2);
    let elems = f.elements().unwrap();
    let mut grassmannian_bad = 0;
    for code in 0..64usize {
        let coords: Vec<_> = (0..6).map(|i| elems[(code >> i) & 1]).collect();
        let x = alternating_from_coordinates(f, 4, 2, &coords).unwrap();
        if x.is_zero() {
            continue;
        }
        grassmannian_bad += (satisfies_grassmannian(&x).unwrap() != decompose(&x).unwrap().is_some()) as usize;
    }
    Line {
        pass: bad == 0 && round_trips == expected && grassmannian_bad == 0,
        detail: format!(
            "{round_trips} RREF bases (N<=5, GF(2), GF(3)), {bad} round-trip failures; 63 nonzero tensors GF(2) N=4 k=2, {grassmannian_bad} disagreements"
        ),
    }
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let mut argv = vec!["polargrass"];
    argv.extend_from_slice(args);
    polargrass_cli::run(argv).stdout.into_bytes()
}

fn criterion_9() -> Line {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("../cli/tests/fixtures");
    let forms = fixtures.join("forms");
    let golden = fixtures.join("golden");
    let form = |name: &str| forms.join(format!("{name}.json")).display().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["--seed", "9", "verify", "--form", &form("sym5_5"), "--k", "2", "--mode", "sampled", "--samples", "500"],
        vec!["--seed", "9", "props", "--field", "2^2", "--n", "3", "--trials", "50"],
        vec!["--format", "json", "verify", "--form", &form("w5_2"), "--k", "3", "--threads", "0"],
        vec!["enumerate", "--form", &form("h3_4"), "--k", "2"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    let mut differing = Vec::new();
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = run_cli(&args);
        if first.is_empty() || first != run_cli(&args) {
            differing.push(args.join(" "));
        }
    }
    let mut golden_bad = Vec::new();
    let emitters = [("w3_2", "2"), ("w3_3", "2"), ("h3_4", "2"), ("sym4_3", "1")];
    for (name, k) in emitters {
        let out = run_cli(&["equations", "--form", &form(name), "--k", k]);
        let want = std::fs::read(golden.join(format!("equations_{name}_k{k}.txt"))).unwrap_or_default();
        if out != want {
            golden_bad.push(format!("equations_{name}_k{k}"));
        }
    }
    Line {
        pass: differing.is_empty() && golden_bad.is_empty(),
        detail: format!(
            "{} repeated invocations byte-identical: {}; {} equation fixtures match: {}{}",
            runs.len(),
            runs.len() - differing.len(),
            emitters.len(),
            emitters.len() - golden_bad.len(),
            failures_suffix(&[differing, golden_bad].concat())
        ),
    }
}

type Criterion<'a> = Box<dyn Fn() -> Line + 'a>;

fn main() -> ExitCode {
    let configs = criterion_one_configs();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("exhaustive theorem verification", Box::new(|| criterion_1(&configs))),
        ("main and rewritten equations vanish together", Box::new(criterion_2)),
        ("shortcut equation on non-degenerate forms", Box::new(|| criterion_3(&configs))),
        ("k=2 matrix chain", Box::new(criterion_4)),
        ("product identity suite", Box::new(criterion_5)),
        ("base change, literal statement", Box::new(criterion_6)),
        ("kernel criterion", Box::new(criterion_7)),
        ("exterior round trip", Box::new(criterion_8)),
        ("CLI determinism and golden equations", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let line = run();
        failed += !line.pass as usize;
        println!(
            "criterion {} {} {name}: {} [{:.1}s]",
            i + 1,
            if line.pass { "PASS" } else { "FAIL" },
            line.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
