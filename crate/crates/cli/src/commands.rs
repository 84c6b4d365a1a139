use std::time::Instant;

use polargrass::exterior::{k_subsets, plucker_relations, Subspace};
use polargrass::field::{Field, FieldSpec};
use polargrass::polar::{
    enumerate_subspaces, polar_grassmannian, verify_sampled, Mismatch, TheoremContext, VerificationReport,
    VerifyMode,
};
use polargrass::props::{run_identity_suite, SuiteConfig};
use polargrass::{SesquilinearForm, Tensor};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::formfile::ElemSyntax;
use crate::report::Report;

/// Process exit status of a finished command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    Mismatch = 1,
    Config = 2,
}

pub type CmdResult = Result<(Report, Status), String>;

fn verdict(report: &mut Report, pass: bool) -> Status {
    report.set("result", if pass { "PASS" } else { "FAIL" });
    if pass {
        Status::Pass
    } else {
        Status::Mismatch
    }
}

fn row_string<F: Field>(field: &F, row: &[F::Elem]) -> String {
    let parts: Vec<String> = row.iter().map(|a| field.elem_to_string(a)).collect();
    format!("[{}]", parts.join(","))
}

fn subspace_string<F: Field>(w: &Subspace<F>) -> String {
    let rows: Vec<String> = w.rows().iter().map(|r| row_string(w.field(), r)).collect();
    format!("<{}>", rows.join(" "))
}

fn entry_strings<F: Field>(field: &F, entries: &[(Vec<usize>, F::Elem)]) -> Vec<String> {
    entries
        .iter()
        .map(|(idx, v)| {
            let idx: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            format!("({})={}", idx.join(","), field.elem_to_string(v))
        })
        .collect()
}

/// Settings echoed into every report.
#[derive(Debug, Clone, Copy)]
pub struct Common {
    pub seed: u64,
    pub cap: usize,
}

fn header<F: Field>(report: &mut Report, form: &SesquilinearForm<F>, k: Option<usize>, common: &Common) {
    report.set("field", form.field().spec().to_string());
    report.set("N", form.dim());
    if let Some(k) = k {
        report.set("k", k);
    }
    report.set("epsilon", form.epsilon().to_string());
    report.set("seed", common.seed);
    report.set("cap", common.cap);
}

fn valid_or_config<F: Field>(form: &SesquilinearForm<F>) -> Result<(), String> {
    form.ensure_valid().map_err(|e| e.to_string())
}

pub fn info<F: ElemSyntax>(form: &SesquilinearForm<F>, common: &Common) -> CmdResult
where
    F::Elem: Send + Sync,
{
    let mut r = Report::new("info");
    header(&mut r, form, None, common);
    let d = form.diagnostics();
    r.set("reflexive", d.reflexive());
    r.set(
        "reflexivity_failures",
        d.reflexivity_failures.iter().map(|(i, j)| format!("({},{})", i + 1, j + 1)).collect::<Vec<_>>(),
    );
    r.set("trace_valued", d.trace_valued());
    r.set("trace_failures", d.trace_failures.iter().map(|i| format!("({0},{0})", i + 1)).collect::<Vec<_>>());
    let radical = form.radical();
    r.set("radical_dim", radical.rank());
    r.set("radical", radical.rows().iter().map(|row| row_string(form.field(), row)).collect::<Vec<_>>());
    r.set("nondegenerate", form.is_nondegenerate());
    let witt: Value = if form.field().order().is_some() && d.is_valid() {
        form.witt_index().map(Value::from).map_err(|e| e.to_string())?
    } else {
        Value::from("n/a")
    };
    r.set("witt_index", witt);
    let status = verdict(&mut r, d.is_valid());
    Ok((r, status))
}

fn mismatch_json<F: Field>(field: &F, m: &Mismatch<F>) -> Value {
    let basis: Vec<String> = m.rows.iter().map(|r| row_string(field, r)).collect();
    json!({
        "kind": m.kind.as_str(),
        "basis": basis,
        "lhs_entries": entry_strings(field, &m.lhs_entries),
        "gram_entries": entry_strings(field, &m.gram_entries),
    })
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyArgs {
    pub k: usize,
    pub mode: VerifyMode,
    pub budget: u128,
    pub threads: usize,
    pub timing: bool,
}

/// Exhaustive runs split the subspaces by RREF pivot pattern and merge the
/// partial reports in pattern order, so the output does not depend on the
/// number of workers.
fn exhaustive_parallel<F: ElemSyntax>(
    ctx: &TheoremContext<F>,
    threads: usize,
) -> polargrass::Result<VerificationReport<F>>
where
    F::Elem: Send + Sync,
{
    let form = ctx.form();
    let patterns = k_subsets(form.dim(), ctx.k());
    let run = || {
        patterns
            .par_iter()
            .map(|p| ctx.verify_patterns(vec![p.clone()]))
            .collect::<polargrass::Result<Vec<_>>>()
    };
    let parts = if threads == 1 {
        patterns.iter().map(|p| ctx.verify_patterns(vec![p.clone()])).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|_| polargrass::Error::InvalidForm("thread pool".into()))?
            .install(run)
    }?;
    let mut report = VerificationReport::empty(ctx, VerifyMode::Exhaustive);
    for part in parts {
        report.merge(part);
    }
    Ok(report)
}

pub fn verify<F: ElemSyntax>(form: &SesquilinearForm<F>, args: &VerifyArgs, common: &Common) -> CmdResult
where
    F::Elem: Send + Sync,
{
    valid_or_config(form)?;
    let field = *form.field();
    field.order().ok_or("verification enumerates subspaces and needs a finite field")?;
    let ctx = TheoremContext::with_cap(form, args.k, common.cap).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let mut report = match args.mode {
        VerifyMode::Exhaustive => {
            enumerate_subspaces(field, form.dim(), args.k, args.budget).map_err(|e| e.to_string())?;
            exhaustive_parallel(&ctx, args.threads).map_err(|e| e.to_string())?
        }
        VerifyMode::Sampled { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            verify_sampled(form, args.k, samples, common.cap, &mut rng).map_err(|e| e.to_string())?
        }
    };
    if args.timing {
        report.elapsed = Some(start.elapsed());
    }

    let mut r = Report::new("verify");
    header(&mut r, form, Some(args.k), common);
    r.set("mode", args.mode.label());
    if let VerifyMode::Sampled { samples } = args.mode {
        r.set("samples", samples);
    }
    r.set("subspaces", report.enumerated);
    r.set("isotropic", report.isotropic);
    r.set("main_equation_zero", report.main_zero);
    r.set("shortcut", if report.shortcut_checked { "compared" } else { "skipped (singular matrix)" });
    r.set("mismatch_count", report.mismatches.len());
    r.set("mismatches", report.mismatches.iter().map(|m| mismatch_json(&field, m)).collect::<Vec<_>>());
    if let Some(t) = report.elapsed {
        r.set("elapsed_ms", t.as_millis() as u64);
    }
    let status = verdict(&mut r, report.passed());
    Ok((r, status))
}

/// Membership verdict for one tensor read from a file.
pub fn verify_tensor<F: ElemSyntax>(form: &SesquilinearForm<F>, x: &Tensor<F>, common: &Common) -> CmdResult
where
    F::Elem: Send + Sync,
{
    valid_or_config(form)?;
    let ctx = TheoremContext::with_cap(form, x.degree(), common.cap).map_err(|e| e.to_string())?;
    let v = ctx.membership(x).map_err(|e| e.to_string())?;
    let mut r = Report::new("verify");
    header(&mut r, form, Some(x.degree()), common);
    r.set("mode", "tensor");
    r.set("grassmannian", v.grassmannian);
    r.set("main_equation_zero", v.main_zero);
    r.set("rewritten_equation_zero", v.rewritten_zero);
    r.set("shortcut_equation_zero", v.shortcut_zero.map_or(Value::from("n/a"), Value::from));
    r.set("member", v.is_member());
    r.set("subspace", v.subspace.as_ref().map_or(Value::from("not decomposable"), |w| subspace_string(w).into()));
    r.set("isotropic", v.oracle_isotropic.map_or(Value::from("n/a"), Value::from));
    let consistent = v.main_zero == v.rewritten_zero && v.oracle_agrees() != Some(false);
    let status = verdict(&mut r, consistent);
    Ok((r, status))
}

pub fn enumerate<F: ElemSyntax>(
    form: &SesquilinearForm<F>,
    k: usize,
    budget: u128,
    count_only: bool,
    common: &Common,
) -> CmdResult
where
    F::Elem: Send + Sync,
{
    valid_or_config(form)?;
    form.field().order().ok_or("enumeration needs a finite field")?;
    let listing = polar_grassmannian(form, k, budget).map_err(|e| e.to_string())?;
    let mut r = Report::new("enumerate");
    header(&mut r, form, Some(k), common);
    r.set("count", listing.members.len());
    if !count_only {
        r.set("members", listing.members.iter().map(subspace_string).collect::<Vec<_>>());
    }
    r.set("disagreements", listing.disagreements.iter().map(subspace_string).collect::<Vec<_>>());
    let status = verdict(&mut r, listing.disagreements.is_empty());
    Ok((r, status))
}

pub fn equations<F: ElemSyntax>(form: &SesquilinearForm<F>, k: usize, common: &Common) -> CmdResult
where
    F::Elem: Send + Sync,
{
    valid_or_config(form)?;
    let field = *form.field();
    let ctx = TheoremContext::with_cap(form, k, common.cap).map_err(|e| e.to_string())?;
    let relations = if k >= 2 {
        plucker_relations(field, form.dim(), k).map_err(|e| e.to_string())?
    } else {
        polargrass::EquationSet::new(field, form.dim(), k)
    };
    let polar = ctx.equations().map_err(|e| e.to_string())?;
    let mut r = Report::new("equations");
    header(&mut r, form, Some(k), common);
    r.set("grassmannian_relation_count", relations.len());
    r.set("grassmannian_relations", relations.polys().iter().map(|p| relations.format_poly(p)).collect::<Vec<_>>());
    r.set("polar_equation_count", polar.len());
    r.set("polar_equations", polar.polys().iter().map(|p| polar.format_poly(p)).collect::<Vec<_>>());
    Ok((r, Status::Pass))
}

pub fn props<F: Field>(field: F, n: usize, trials: u64, inject_fault: bool, seed: u64) -> CmdResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = SuiteConfig { dim: n, trials, inject_fault };
    let suite = run_identity_suite(field, &config, &mut rng).map_err(|e| e.to_string())?;
    let mut r = Report::new("props");
    r.set("field", FieldSpec::to_string(&field.spec()));
    r.set("N", n);
    r.set("trials", trials);
    r.set("seed", seed);
    let checks: Vec<Value> = suite
        .checks
        .iter()
        .map(|c| {
            let mut o = json!({
                "name": c.name,
                "instances": c.instances,
                "vacuous": c.vacuous,
                "failures": c.failures,
            });
            if let Some(first) = &c.first_failure {
                o["first_failure"] = Value::from(first.as_str());
            }
            o
        })
        .collect();
    r.set("checks", checks);
    let status = verdict(&mut r, suite.passed());
    Ok((r, status))
}
