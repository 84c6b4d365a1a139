//! Seeded randomized checks of the product identities: associativity of
//! p-products, units, pseudo-power laws, the transpose shift, cancellation
//! through a non-singular matrix, the vector factor rule, behaviour of
//! wedge and dual wedge tensors under change of basis, and the kernel
//! criterion for `Ξ ∘ X`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exterior::{alternating_from_coordinates, binomial, dual_wedge_tensor, wedge_tensor};
use crate::field::{Field, FieldSpec};
use crate::linalg::{self, Rows};
use crate::polar::kernel_criterion;
use crate::tensor::{unflatten, Tensor};

pub const MAX_SUITE_DIM: usize = 4;

/// Largest degree drawn for random tensors.
const MAX_DEGREE: usize = 4;

/// Per-instance work bound, in multiply-adds.
const WORK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub dim: usize,
    pub trials: u64,
    /// Perturbs one entry of every computed left-hand side, so every check
    /// must report failures. Used to test the reporting path.
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { dim: MAX_SUITE_DIM, trials: 1000, inject_fault: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub instances: u64,
    /// Implication checks whose premise did not hold.
    pub vacuous: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome { name, instances: 0, vacuous: 0, failures: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub field: FieldSpec,
    pub dim: usize,
    pub trials: u64,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }
}

pub fn random_tensor<F: Field, R: Rng + ?Sized>(field: F, n: usize, degree: usize, rng: &mut R) -> Tensor<F> {
    let len = n.pow(degree as u32);
    let data = (0..len).map(|_| field.random(rng)).collect();
    Tensor::from_entries(field, n, degree, data).expect("length matches")
}

pub fn random_rows<F: Field, R: Rng + ?Sized>(field: F, rows: usize, cols: usize, rng: &mut R) -> Rows<F> {
    (0..rows).map(|_| (0..cols).map(|_| field.random(rng)).collect()).collect()
}

pub fn random_matrix<F: Field, R: Rng + ?Sized>(field: F, n: usize, rng: &mut R) -> Tensor<F> {
    random_tensor(field, n, 2, rng)
}

/// Random invertible `n×n` matrix with its inverse.
pub fn random_invertible<F: Field, R: Rng + ?Sized>(field: F, n: usize, rng: &mut R) -> (Rows<F>, Rows<F>) {
    loop {
        let c = random_rows(field, n, n, rng);
        if let Some(inv) = linalg::inverse(&field, &c) {
            return (c, inv);
        }
    }
}

/// Random `k` linearly independent rows of length `n`.
pub fn random_independent<F: Field, R: Rng + ?Sized>(field: F, n: usize, k: usize, rng: &mut R) -> Rows<F> {
    loop {
        let rows = random_rows(field, k, n, rng);
        if linalg::rank(&field, &rows, n) == k {
            return rows;
        }
    }
}

/// Uniformly random alternating tensor (random Plücker coordinates).
pub fn random_alternating<F: Field, R: Rng + ?Sized>(field: F, n: usize, k: usize, rng: &mut R) -> Tensor<F> {
    let coords: Vec<F::Elem> = (0..binomial(n, k)).map(|_| field.random(rng)).collect();
    alternating_from_coordinates(field, n, k, &coords).expect("k <= n")
}

/// The defining sum of the p-product, one output entry at a time.
pub fn naive_p_product<F: Field>(x: &Tensor<F>, y: &Tensor<F>, p: usize) -> Result<Tensor<F>> {
    let field = *x.field();
    let n = x.dim();
    let (r, s) = (x.degree(), y.degree());
    if p > r || p > s {
        return Err(Error::ContractionTooLarge { p, left: r, right: s });
    }
    let inner = n.pow(p as u32);
    Tensor::from_fn(field, n, r + s - 2 * p, |idx| {
        let (i, j) = idx.split_at(r - p);
        let mut acc = field.zero();
        for h in 0..inner {
            let hs = unflatten(h, n, p);
            let xi: Vec<usize> = i.iter().chain(&hs).copied().collect();
            let yi: Vec<usize> = hs.iter().chain(j).copied().collect();
            acc = field.add(&acc, &field.mul(x.get(&xi), y.get(&yi)));
        }
        acc
    })
}

fn matrix_tensor<F: Field>(field: F, rows: &[Vec<F::Elem>]) -> Tensor<F> {
    Tensor::matrix(field, rows).expect("square")
}

/// `⊙^r A`, with `⊙⁰ A` the scalar 1.
fn power_or_unit<F: Field>(a: &Tensor<F>, r: usize) -> Result<Tensor<F>> {
    if r == 0 {
        Ok(Tensor::scalar(*a.field(), a.dim(), a.field().one()))
    } else {
        a.pseudo_power(r)
    }
}

/// Outcome of one random base change applied to a wedge `X` and a dual
/// wedge `Ξ`, with `X_F := (⊙ᵏC⁻¹) ∘ᵏ X_E` and `Ξ_F := Ξ_E ∘ᵏ (⊙ᵏC)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseChangeOutcome {
    /// `Ξ_F ∘ X_F = Ξ_E ∘ X_E` entrywise.
    pub literal: bool,
    /// `Ξ_F ∘ᵏ X_F = Ξ_E ∘ᵏ X_E` (full contraction).
    pub scalar: bool,
    /// `Ξ_F ∘ X_F = (⊙^{k-1}Cᵀ) ∘^{k-1} (Ξ_E ∘ X_E) ∘^{k-1} (⊙^{k-1}C⁻ᵀ)`.
    pub covariant: bool,
    /// `X_F` is the wedge of the coordinate rows in the new basis, and
    /// likewise `Ξ_F` for the functionals.
    pub wedge_rule: bool,
    /// `Ξ_E ∘ X_E = O` and `Ξ_F ∘ X_F = O` agree.
    pub vanishing: bool,
}

/// Draws `k` vectors, `k` functionals and an invertible `C` (columns are
/// the new basis in old coordinates) and compares both sides.
pub fn base_change_instance<F: Field, R: Rng + ?Sized>(
    field: F,
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<BaseChangeOutcome> {
    let xs = random_rows(field, k, n, rng);
    let xis = random_rows(field, k, n, rng);
    let (c, c_inv) = random_invertible(field, n, rng);
    base_change(field, n, &xs, &xis, &c, &c_inv)
}

pub fn base_change<F: Field>(
    field: F,
    n: usize,
    xs: &[Vec<F::Elem>],
    xis: &[Vec<F::Elem>],
    c: &[Vec<F::Elem>],
    c_inv: &[Vec<F::Elem>],
) -> Result<BaseChangeOutcome> {
    let k = xs.len();
    let x_e = wedge_tensor(field, n, xs)?;
    let xi_e = dual_wedge_tensor(field, n, xis)?;
    let ct = matrix_tensor(field, c);
    let cit = matrix_tensor(field, c_inv);
    let x_f = cit.pseudo_power(k)?.p_product(&x_e, k)?;
    let xi_f = xi_e.p_product(&ct.pseudo_power(k)?, k)?;

    // vector coordinates x ↦ C⁻¹x, functionals ξ ↦ ξC
    let xs_f: Rows<F> = xs.iter().map(|x| linalg::row_times(&field, x, &linalg::transpose_rows::<F>(c_inv))).collect();
    let xis_f: Rows<F> = xis.iter().map(|xi| linalg::row_times(&field, xi, c)).collect();
    let wedge_rule = wedge_tensor(field, n, &xs_f)? == x_f && dual_wedge_tensor(field, n, &xis_f)? == xi_f;

    let before = xi_e.compose(&x_e)?;
    let after = xi_f.compose(&x_f)?;
    let left = power_or_unit(&ct.transpose()?, k - 1)?;
    let right = power_or_unit(&matrix_tensor(field, &linalg::transpose_rows::<F>(c_inv)), k - 1)?;
    let moved = left.p_product(&before, k - 1)?.p_product(&right, k - 1)?;
    Ok(BaseChangeOutcome {
        literal: after == before,
        scalar: xi_f.p_product(&x_f, k)? == xi_e.p_product(&x_e, k)?,
        covariant: after == moved,
        wedge_rule,
        vanishing: after.is_zero() == before.is_zero(),
    })
}

struct Suite<'a, F: Field, R: Rng + ?Sized> {
    field: F,
    n: usize,
    fault: bool,
    rng: &'a mut R,
}

impl<F: Field, R: Rng + ?Sized> Suite<'_, F, R> {
    fn fits(&self, exponent: usize) -> bool {
        (self.n as u64).saturating_pow(exponent as u32) <= WORK
    }

    fn degree(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    fn tensor(&mut self, degree: usize) -> Tensor<F> {
        random_tensor(self.field, self.n, degree, self.rng)
    }

    fn matrix(&mut self) -> Tensor<F> {
        random_matrix(self.field, self.n, self.rng)
    }

    /// Left-hand sides pass through here so a fault can be injected.
    fn observed(&self, mut t: Tensor<F>) -> Tensor<F> {
        if self.fault {
            let idx = vec![0; t.degree()];
            let v = self.field.add(t.get(&idx), &self.field.one());
            t.set(&idx, v);
        }
        t
    }

    fn p_product_oracle(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let (r, s, p) = loop {
            let p = self.degree(0, MAX_DEGREE);
            let (r, s) = (self.degree(p.max(1), MAX_DEGREE), self.degree(p.max(1), MAX_DEGREE));
            if r + s - 2 * p <= MAX_DEGREE && self.fits(r + s - p) {
                break (r, s, p);
            }
        };
        let (x, y) = (self.tensor(r), self.tensor(s));
        let fast = self.observed(x.p_product(&y, p)?);
        out.record(fast == naive_p_product(&x, &y, p)?, || format!("r={r} s={s} p={p}"));
        Ok(())
    }

    fn associativity(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let (r, s, t, p, q) = loop {
            let (r, s, t) = (self.degree(1, MAX_DEGREE), self.degree(1, MAX_DEGREE), self.degree(1, MAX_DEGREE));
            let p = self.degree(0, r.min(s));
            let q = self.degree(0, t.min(s - p));
            let xy = r + s - 2 * p;
            let yz = s + t - 2 * q;
            if xy <= MAX_DEGREE
                && yz <= MAX_DEGREE
                && self.fits(r + s - p)
                && self.fits(xy + t - q)
                && self.fits(s + t - q)
                && self.fits(r + yz - p)
            {
                break (r, s, t, p, q);
            }
        };
        let (x, y, z) = (self.tensor(r), self.tensor(s), self.tensor(t));
        let lhs = self.observed(x.p_product(&y, p)?.p_product(&z, q)?);
        let rhs = x.p_product(&y.p_product(&z, q)?, p)?;
        out.record(lhs == rhs, || format!("deg X={r} Y={s} Z={t} p={p} q={q}"));
        Ok(())
    }

    fn identity_unit(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let r = self.degree(1, MAX_DEGREE);
        let x = self.tensor(r);
        let id = Tensor::identity(self.field, self.n)?;
        let left = self.observed(id.compose(&x)?);
        let ok = left == x && x.compose(&id)? == x;
        out.record(ok, || format!("deg X={r}"));
        Ok(())
    }

    fn power_additivity(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let (r, s) = loop {
            let (r, s) = (self.degree(1, 3), self.degree(1, 3));
            if self.fits(2 * (r + s)) {
                break (r, s);
            }
        };
        let a = self.matrix();
        let lhs = self.observed(a.pseudo_power(r)?.pseudo_product(&a.pseudo_power(s)?)?);
        out.record(lhs == a.pseudo_power(r + s)?, || format!("r={r} s={s}"));
        Ok(())
    }

    fn power_product(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let r = loop {
            let r = self.degree(1, 3);
            if self.fits(3 * r) {
                break r;
            }
        };
        let (a, b) = (self.matrix(), self.matrix());
        let lhs = self.observed(b.pseudo_power(r)?.p_product(&a.pseudo_power(r)?, r)?);
        out.record(lhs == b.compose(&a)?.pseudo_power(r)?, || format!("r={r}"));
        Ok(())
    }

    fn identity_power(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let (t, s) = loop {
            let t = self.degree(1, MAX_DEGREE);
            let s = self.degree(1, t);
            if self.fits(s + t) {
                break (t, s);
            }
        };
        let x = self.tensor(t);
        let unit = Tensor::identity(self.field, self.n)?.pseudo_power(s)?;
        let left = self.observed(unit.p_product(&x, s)?);
        let ok = left == x && x.p_product(&unit, s)? == x;
        out.record(ok, || format!("t={t} s={s}"));
        Ok(())
    }

    fn transpose_shift(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let t = loop {
            let t = self.degree(1, MAX_DEGREE);
            if self.fits(2 * t) {
                break t;
            }
        };
        let x = self.tensor(t);
        let a = self.matrix();
        let at = a.transpose()?;
        let first = self.observed(x.p_product(&a.pseudo_power(t)?, t)?);
        let second = at.pseudo_power(t)?.p_product(&x, t)?;
        let third = power_or_unit(&at, t - 1)?.p_product(&x, t - 1)?.compose(&a)?;
        out.record(first == second && second == third, || format!("t={t}"));
        Ok(())
    }

    /// Half the instances are built so that the premise holds: `X = W∘A⁻¹`
    /// with `W` vanishing on the slice `j` of its last index, and
    /// `Y = e_j ⊗ Y'`. The other half are unconstrained.
    fn nonsingular_cancellation(&mut self, out: &mut CheckOutcome, constructed: bool) -> Result<()> {
        let (t, s) = loop {
            let (t, s) = (self.degree(1, MAX_DEGREE), self.degree(1, MAX_DEGREE));
            if self.fits(2 * t) && self.fits(t + s - 1) {
                break (t, s);
            }
        };
        let (a_rows, a_inv) = random_invertible(self.field, self.n, self.rng);
        let a = matrix_tensor(self.field, &a_rows);
        let (x, y) = if constructed {
            let j = self.rng.gen_range(0..self.n);
            let mut w = self.tensor(t);
            for flat in 0..w.entries().len() {
                let idx = unflatten(flat, self.n, t);
                if idx[t - 1] == j {
                    w.set(&idx, self.field.zero());
                }
            }
            let x = w.compose(&matrix_tensor(self.field, &a_inv))?;
            let y = Tensor::unit_vector(self.field, self.n, j).tensor_product(&self.tensor(s - 1))?;
            (x, y)
        } else {
            (self.tensor(t), self.tensor(s))
        };
        let premise = self.observed(x.p_product(&a.pseudo_power(t)?, t)?.compose(&y)?).is_zero();
        if !premise {
            out.vacuous += 1;
        }
        let conclusion = x.compose(&a)?.compose(&y)?.is_zero();
        out.record(!premise || conclusion, || format!("t={t} s={s}"));
        Ok(())
    }

    fn vector_factor(&mut self, out: &mut CheckOutcome) -> Result<()> {
        let (r, s) = loop {
            let (r, s) = (self.degree(0, MAX_DEGREE - 1), self.degree(0, MAX_DEGREE - 1));
            if self.fits(r + s + 1) {
                break (r, s);
            }
        };
        let (x_big, y_big) = (self.tensor(r), self.tensor(s));
        let (x, y) = (self.tensor(1), self.tensor(1));
        let lhs = self.observed(x_big.tensor_product(&x)?.compose(&y.tensor_product(&y_big)?)?);
        let dot = x.compose(&y)?.scalar_value().cloned().expect("degree 0");
        out.record(lhs == x_big.tensor_product(&y_big)?.scale(&dot), || format!("r={r} s={s}"));
        Ok(())
    }

    fn rank(&mut self) -> usize {
        loop {
            let k = self.degree(1, self.n.min(3));
            if self.fits(2 * k + 1) {
                return k;
            }
        }
    }

    fn base_change(&mut self, checks: &mut [CheckOutcome]) -> Result<()> {
        let k = self.rank();
        let o = base_change_instance(self.field, self.n, k, self.rng)?;
        let fault = self.fault;
        let describe = || format!("k={k}");
        checks[0].record(o.wedge_rule && !fault, describe);
        checks[1].record(o.scalar && !fault, describe);
        checks[2].record(o.covariant && o.vanishing && !fault, describe);
        Ok(())
    }

    /// Half the instances take the vectors inside the common kernel of the
    /// functionals when it is large enough.
    fn kernel_criterion(&mut self, out: &mut CheckOutcome, constructed: bool) -> Result<()> {
        let k = self.rank();
        let xis = random_independent(self.field, self.n, k, self.rng);
        let kernel = linalg::kernel(&self.field, &xis, self.n);
        let xs = if constructed && kernel.len() >= k {
            loop {
                let coeffs = random_rows(self.field, k, kernel.len(), self.rng);
                let rows = linalg::mat_mul(&self.field, &coeffs, &kernel);
                if linalg::rank(&self.field, &rows, self.n) == k {
                    break rows;
                }
            }
        } else {
            random_independent(self.field, self.n, k, self.rng)
        };
        let (inclusion, product_zero) = kernel_criterion(self.field, self.n, &xs, &xis)?;
        out.record(inclusion == product_zero && !self.fault, || format!("k={k}"));
        Ok(())
    }
}

/// Runs every check `config.trials` times with parameters drawn from `rng`.
pub fn run_identity_suite<F: Field, R: Rng + ?Sized>(
    field: F,
    config: &SuiteConfig,
    rng: &mut R,
) -> Result<SuiteReport> {
    if config.dim == 0 || config.dim > MAX_SUITE_DIM {
        return Err(Error::SuiteDimension(config.dim));
    }
    let mut suite = Suite { field, n: config.dim, fault: config.inject_fault, rng };
    let mut checks: Vec<CheckOutcome> = [
        "p-product-vs-defining-sum",
        "associativity",
        "identity-is-unit",
        "pseudo-power-additivity",
        "pseudo-power-of-product",
        "identity-pseudo-power-is-unit",
        "transpose-shift",
        "nonsingular-cancellation",
        "vector-factor",
        "base-change-wedge-rule",
        "base-change-full-contraction",
        "base-change-covariance",
        "kernel-criterion",
    ]
    .into_iter()
    .map(CheckOutcome::new)
    .collect();
    for trial in 0..config.trials {
        let constructed = trial % 2 == 0;
        suite.p_product_oracle(&mut checks[0])?;
        suite.associativity(&mut checks[1])?;
        suite.identity_unit(&mut checks[2])?;
        suite.power_additivity(&mut checks[3])?;
        suite.power_product(&mut checks[4])?;
        suite.identity_power(&mut checks[5])?;
        suite.transpose_shift(&mut checks[6])?;
        suite.nonsingular_cancellation(&mut checks[7], constructed)?;
        suite.vector_factor(&mut checks[8])?;
        suite.base_change(&mut checks[9..12])?;
        suite.kernel_criterion(&mut checks[12], constructed)?;
    }
    Ok(SuiteReport { field: field.spec(), dim: config.dim, trials: config.trials, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Gf, Rationals, SigmaKind};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn config(dim: usize, trials: u64) -> SuiteConfig {
        SuiteConfig { dim, trials, inject_fault: false }
    }

    #[test]
    fn naive_oracle_small_cases() {
        let q = Rationals;
        let x = Tensor::matrix(q, &[vec![q.from_int(1), q.from_int(2)], vec![q.from_int(3), q.from_int(4)]]).unwrap();
        let id = Tensor::identity(q, 2).unwrap();
        assert_eq!(naive_p_product(&x, &id, 2).unwrap().scalar_value(), Some(&q.from_int(5)));
        assert_eq!(naive_p_product(&id, &x, 1).unwrap(), x);
    }

    #[test]
    fn suite_passes_over_small_fields() {
        for p in [2, 3, 5] {
            let f = FiniteField::prime(p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            let r = run_identity_suite(f, &config(3, 20), &mut rng).unwrap();
            assert!(r.passed(), "{:?}", r.checks);
        }
        let f = FiniteField::quadratic(2, SigmaKind::Frobenius).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(run_identity_suite(f, &config(2, 20), &mut rng).unwrap().passed());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(run_identity_suite(Rationals, &config(2, 10), &mut rng).unwrap().passed());
    }

    #[test]
    fn injected_fault_is_reported_by_every_check() {
        let f = FiniteField::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cfg = SuiteConfig { dim: 2, trials: 4, inject_fault: true };
        let r = run_identity_suite(f, &cfg, &mut rng).unwrap();
        assert!(!r.passed());
        for c in &r.checks {
            if c.name != "nonsingular-cancellation" {
                assert_eq!(c.failures, 4, "{}", c.name);
            }
        }
    }

    #[test]
    fn same_seed_same_report() {
        let f = FiniteField::prime(5).unwrap();
        let run = || run_identity_suite(f, &config(2, 10), &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(run(), run());
    }

    #[test]
    fn rejects_large_dimension() {
        let f = FiniteField::prime(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(run_identity_suite(f, &config(5, 1), &mut rng), Err(Error::SuiteDimension(5)));
    }

    #[test]
    fn constructed_cancellation_instances_are_not_vacuous() {
        let f = FiniteField::prime(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = run_identity_suite(f, &config(3, 40), &mut rng).unwrap();
        let c = r.checks.iter().find(|c| c.name == "nonsingular-cancellation").unwrap();
        assert!(c.instances - c.vacuous >= 20);
    }

    #[test]
    fn base_change_literal_statement_holds_for_vectors() {
        let f = FiniteField::prime(3).unwrap();
        let xs = vec![vec![Gf(1), Gf(2), Gf(0)]];
        let xis = vec![vec![Gf(0), Gf(1), Gf(1)]];
        let c = vec![vec![Gf(1), Gf(1), Gf(0)], vec![Gf(0), Gf(1), Gf(2)], vec![Gf(0), Gf(0), Gf(1)]];
        let ci = linalg::inverse(&f, &c).unwrap();
        let o = base_change(f, 3, &xs, &xis, &c, &ci).unwrap();
        assert!(o.literal && o.scalar && o.covariant && o.wedge_rule);
    }

    #[test]
    fn base_change_literal_statement_fails_for_planes() {
        // e1∧e2 against ξ = e2∧e3 under a shear; Ξ∘X ≠ O transforms by
        // conjugation rather than staying fixed.
        let f = FiniteField::prime(3).unwrap();
        let xs = vec![vec![Gf(1), Gf(0), Gf(0)], vec![Gf(0), Gf(1), Gf(0)]];
        let xis = vec![vec![Gf(0), Gf(1), Gf(0)], vec![Gf(0), Gf(0), Gf(1)]];
        let c = vec![vec![Gf(1), Gf(0), Gf(0)], vec![Gf(0), Gf(1), Gf(0)], vec![Gf(1), Gf(0), Gf(1)]];
        let ci = linalg::inverse(&f, &c).unwrap();
        let o = base_change(f, 3, &xs, &xis, &c, &ci).unwrap();
        assert!(!o.literal);
        assert!(o.scalar && o.covariant && o.wedge_rule && o.vanishing);
    }
}
