//! Membership in the polar Grassmannian through the tensor equation
//!
//! ```text
//! X^σ ∘ᵏ (⊙ᵏ M_f) ∘ X = O                      (main form)
//! (⊙^{k-1} M_f^σ) ∘^{k-1} X^σ ∘ M_f ∘ X = O     (rewritten form)
//! X^σ ∘ M_f ∘ X = O                             (non-degenerate shortcut)
//! ```
//!
//! together with the Grassmann–Plücker relations, and an exhaustive
//! checker comparing the equation against direct isotropy of every
//! `k`-subspace.
//!
//! The two first left-hand sides are related by `main = ε^{k-1} · rewritten`
//! (from `Mᵀ = ε·M^σ` applied to the `k-1` outer slots), so they always
//! vanish together.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exterior::{
    alternating_from_coordinates, decompose, dual_wedge_tensor, k_subsets, plucker_coordinates,
    wedge_tensor, EquationSet, PluckerIndex, PluckerRelations, QuadPoly, QuadTerm, Subspace,
};
use crate::field::{Field, FieldSpec, Sign};
use crate::forms::SesquilinearForm;
use crate::linalg::{self, Rows};
use crate::tensor::Tensor;

/// Default bound on the number of subspaces an exhaustive run may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1_000_000;

/// Gaussian binomial `[n choose k]_q`, `None` on overflow.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.checked_mul(q.checked_pow((n - i) as u32)?.checked_sub(1)?)?;
        den = den.checked_mul(q.checked_pow((i + 1) as u32)?.checked_sub(1)?)?;
    }
    Some(num / den)
}

/// Precomputed pieces of the equation for one form and one `k`.
#[derive(Debug, Clone)]
pub struct TheoremContext<F: Field> {
    form: SesquilinearForm<F>,
    k: usize,
    power: Tensor<F>,
    sigma_power: Tensor<F>,
    inverse_exists: bool,
    relations: PluckerRelations,
}

impl<F: Field> TheoremContext<F> {
    pub fn new(form: &SesquilinearForm<F>, k: usize) -> Result<Self> {
        Self::with_cap(form, k, crate::tensor::DEFAULT_SIZE_CAP)
    }

    pub fn with_cap(form: &SesquilinearForm<F>, k: usize, cap: usize) -> Result<Self> {
        let n = form.dim();
        if k == 0 || k > n {
            return Err(Error::RankOutOfRange { k, n });
        }
        let field = *form.field();
        let m = form.matrix().clone().with_cap(cap)?;
        let power = m.pseudo_power(k)?;
        let sigma_power = if k == 1 {
            // ⊙⁰ := 1
            Tensor::scalar(field, n, field.one()).with_cap(cap)?
        } else {
            m.apply_sigma().pseudo_power(k - 1)?
        };
        let inverse_exists = linalg::inverse(&field, &form.matrix_rows()).is_some();
        Ok(TheoremContext {
            form: form.clone(),
            k,
            power,
            sigma_power,
            inverse_exists,
            relations: PluckerRelations::new(n, k),
        })
    }

    pub fn form(&self) -> &SesquilinearForm<F> {
        &self.form
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `⊙ᵏ M_f`.
    pub fn power(&self) -> &Tensor<F> {
        &self.power
    }

    pub fn matrix_invertible(&self) -> bool {
        self.inverse_exists
    }

    /// The scalar `ε^{k-1}` with `theorem_lhs = ε^{k-1} · theorem_lhs_alt`.
    pub fn alt_factor(&self) -> Sign {
        self.form.epsilon().pow(self.k - 1)
    }

    fn check_input(&self, x: &Tensor<F>) -> Result<()> {
        if x.field() != self.form.field() {
            return Err(Error::FieldMismatch);
        }
        if x.dim() != self.form.dim() {
            return Err(Error::DimensionMismatch(self.form.dim(), x.dim()));
        }
        if x.degree() != self.k {
            return Err(Error::DegreeMismatch(alloc::format!(
                "expected degree {}, got {}",
                self.k,
                x.degree()
            )));
        }
        if !x.is_alternating() {
            return Err(Error::NotAlternating);
        }
        Ok(())
    }

    /// `Ξ = X^σ ∘ᵏ (⊙ᵏ M_f)`, the wedge of the functionals `x_r^σ M_f`.
    pub fn xi(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        self.check_input(x)?;
        x.apply_sigma().p_product(&self.power, self.k)
    }

    /// `X^σ ∘ᵏ (⊙ᵏ M_f) ∘ X`, of degree `2k - 2`.
    pub fn theorem_lhs(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        self.check_input(x)?;
        self.lhs_unchecked(x)
    }

    fn lhs_unchecked(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        x.apply_sigma().p_product(&self.power, self.k)?.compose(x)
    }

    /// `(⊙^{k-1} M_f^σ) ∘^{k-1} X^σ ∘ M_f ∘ X`.
    pub fn theorem_lhs_alt(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        self.check_input(x)?;
        self.alt_unchecked(x)
    }

    fn alt_unchecked(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        self.sigma_power
            .p_product(&x.apply_sigma(), self.k - 1)?
            .compose(self.form.matrix())?
            .compose(x)
    }

    /// `X^σ ∘ M_f ∘ X`; needs an invertible `M_f`.
    pub fn nondeg_lhs(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        if !self.inverse_exists {
            return Err(Error::Singular);
        }
        self.check_input(x)?;
        self.nondeg_unchecked(x)
    }

    fn nondeg_unchecked(&self, x: &Tensor<F>) -> Result<Tensor<F>> {
        x.apply_sigma().compose(self.form.matrix())?.compose(x)
    }

    pub fn satisfies_grassmannian(&self, x: &Tensor<F>) -> bool {
        self.k < 2 || self.relations.all_vanish(self.form.field(), &plucker_coordinates(x))
    }

    /// Full verdict for a nonzero alternating tensor of degree `k`.
    pub fn membership(&self, x: &Tensor<F>) -> Result<MembershipVerdict<F>> {
        self.check_input(x)?;
        if x.is_zero() {
            return Err(Error::ZeroTensor);
        }
        let main_zero = self.lhs_unchecked(x)?.is_zero();
        let rewritten_zero = self.alt_unchecked(x)?.is_zero();
        let shortcut_zero = if self.inverse_exists {
            Some(self.nondeg_unchecked(x)?.is_zero())
        } else {
            None
        };
        let subspace = decompose(x)?;
        let oracle_isotropic = subspace.as_ref().map(|w| self.form.is_totally_isotropic(w));
        Ok(MembershipVerdict {
            grassmannian: self.satisfies_grassmannian(x),
            main_zero,
            rewritten_zero,
            shortcut_zero,
            oracle_isotropic,
            subspace,
        })
    }

    /// Expands every entry of the main left-hand side as a quadratic
    /// polynomial in the Plücker variables (σ-twisted on the left factor
    /// when σ ≠ id). Zero and duplicate polynomials are dropped.
    pub fn equations(&self) -> Result<EquationSet<F>> {
        let field = *self.form.field();
        let n = self.form.dim();
        let index = PluckerIndex::new(n, self.k);
        let basis: Vec<Tensor<F>> = (0..index.len())
            .map(|a| {
                let mut coords = vec![field.zero(); index.len()];
                coords[a] = field.one();
                alternating_from_coordinates(field, n, self.k, &coords)
            })
            .collect::<Result<_>>()?;
        // E_a has entries in {0, ±1}, so (Σ x_a E_a)^σ = Σ σ(x_a) E_a.
        let xis: Vec<Tensor<F>> =
            basis.iter().map(|e| e.p_product(&self.power, self.k)).collect::<Result<_>>()?;
        let mut blocks = Vec::with_capacity(basis.len() * basis.len());
        for xi in &xis {
            for e in &basis {
                blocks.push(xi.compose(e)?);
            }
        }
        let entries = blocks.first().map_or(0, |b| b.entries().len());
        let conjugate = !field.sigma_is_identity();
        let mut set = EquationSet::new(field, n, self.k);
        for j in 0..entries {
            let terms = blocks
                .iter()
                .enumerate()
                .filter(|(_, b)| !field.is_zero(&b.entries()[j]))
                .map(|(ab, b)| QuadTerm {
                    left: ab / basis.len(),
                    right: ab % basis.len(),
                    coeff: b.entries()[j].clone(),
                })
                .collect();
            if let Some(p) = QuadPoly::normalized(&field, conjugate, terms) {
                set.push(p);
            }
        }
        Ok(set)
    }
}

/// Outcome of the membership test for one alternating tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipVerdict<F: Field> {
    pub grassmannian: bool,
    pub main_zero: bool,
    pub rewritten_zero: bool,
    /// Only when `M_f` is invertible.
    pub shortcut_zero: Option<bool>,
    /// Only when the tensor is decomposable.
    pub oracle_isotropic: Option<bool>,
    pub subspace: Option<Subspace<F>>,
}

impl<F: Field> MembershipVerdict<F> {
    /// Relations of 𝒢_k hold and the main equation vanishes.
    pub fn is_member(&self) -> bool {
        self.grassmannian && self.main_zero
    }

    /// Whether the equation agrees with direct isotropy of the decomposed
    /// subspace.
    pub fn oracle_agrees(&self) -> Option<bool> {
        self.oracle_isotropic.map(|iso| iso == self.is_member())
    }
}

pub fn theorem_lhs<F: Field>(x: &Tensor<F>, form: &SesquilinearForm<F>) -> Result<Tensor<F>> {
    TheoremContext::new(form, x.degree())?.theorem_lhs(x)
}

pub fn theorem_lhs_alt<F: Field>(x: &Tensor<F>, form: &SesquilinearForm<F>) -> Result<Tensor<F>> {
    TheoremContext::new(form, x.degree())?.theorem_lhs_alt(x)
}

pub fn nondeg_lhs<F: Field>(x: &Tensor<F>, form: &SesquilinearForm<F>) -> Result<Tensor<F>> {
    TheoremContext::new(form, x.degree())?.nondeg_lhs(x)
}

pub fn in_polar_grassmannian<F: Field>(
    x: &Tensor<F>,
    form: &SesquilinearForm<F>,
) -> Result<MembershipVerdict<F>> {
    TheoremContext::new(form, x.degree())?.membership(x)
}

/// `M_f^σ · X^σ · M_f · X` as plain matrix products, for an alternating
/// `N×N` matrix `X`.
pub fn k2_matrix_lhs<F: Field>(x: &Tensor<F>, form: &SesquilinearForm<F>) -> Result<Tensor<F>> {
    if x.degree() != 2 {
        return Err(Error::DegreeMismatch(alloc::format!("expected a matrix, got degree {}", x.degree())));
    }
    if !x.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let f = *form.field();
    let m = form.matrix_rows();
    let ms: Rows<F> = m.iter().map(|r| r.iter().map(|a| f.sigma(a)).collect()).collect();
    let xr = x.to_rows().expect("degree 2");
    let xs: Rows<F> = xr.iter().map(|r| r.iter().map(|a| f.sigma(a)).collect()).collect();
    let chain = linalg::mat_mul(&f, &linalg::mat_mul(&f, &linalg::mat_mul(&f, &ms, &xs), &m), &xr);
    Tensor::matrix(f, &chain)
}

/// Returns `(⟨x_1..x_k⟩ ⊆ ∩ Ker ξ_i, Ξ ∘ X = O)`. Both row sets must be
/// independent and of the same size.
pub fn kernel_criterion<F: Field>(
    field: F,
    n: usize,
    xs: &[Vec<F::Elem>],
    xis: &[Vec<F::Elem>],
) -> Result<(bool, bool)> {
    if xs.len() != xis.len() {
        return Err(Error::DegreeMismatch(alloc::format!("{} vectors vs {} functionals", xs.len(), xis.len())));
    }
    for rows in [xs, xis] {
        if linalg::rank(&field, rows, n) != rows.len() {
            return Err(Error::DependentRows);
        }
    }
    let inclusion = xis
        .iter()
        .all(|xi| xs.iter().all(|x| field.is_zero(&linalg::dot(&field, xi, x))));
    let x = wedge_tensor(field, n, xs)?;
    let big_xi = dual_wedge_tensor(field, n, xis)?;
    let product_zero = big_xi.compose(&x)?.is_zero();
    Ok((inclusion, product_zero))
}

/// Lazily yields every `k`-subspace of `F^n` once, as RREF bases grouped
/// by pivot pattern.
pub struct SubspaceEnumerator<F: Field> {
    field: F,
    elements: Vec<F::Elem>,
    n: usize,
    patterns: Vec<Vec<usize>>,
    pattern: usize,
    free: Vec<(usize, usize)>,
    code: u128,
    total: u128,
}

impl<F: Field> SubspaceEnumerator<F> {
    /// All `k`-subspaces.
    pub fn new(field: F, n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::RankOutOfRange { k, n });
        }
        Self::with_patterns(field, n, k_subsets(n, k))
    }

    /// Only the subspaces whose RREF pivots are one of `patterns`.
    pub fn with_patterns(field: F, n: usize, patterns: Vec<Vec<usize>>) -> Result<Self> {
        let elements = field.elements()?;
        let mut it = SubspaceEnumerator {
            field,
            elements,
            n,
            patterns,
            pattern: 0,
            free: Vec::new(),
            code: 0,
            total: 0,
        };
        it.load_pattern();
        Ok(it)
    }

    fn load_pattern(&mut self) {
        self.code = 0;
        self.free.clear();
        self.total = 0;
        let Some(pivots) = self.patterns.get(self.pattern) else {
            return;
        };
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.total = (self.elements.len() as u128).pow(self.free.len() as u32);
    }
}

impl<F: Field> Iterator for SubspaceEnumerator<F> {
    type Item = Subspace<F>;

    fn next(&mut self) -> Option<Subspace<F>> {
        while self.code >= self.total {
            if self.pattern >= self.patterns.len() {
                return None;
            }
            self.pattern += 1;
            self.load_pattern();
            if self.pattern >= self.patterns.len() {
                return None;
            }
        }
        let pivots = self.patterns[self.pattern].clone();
        let q = self.elements.len() as u128;
        let mut rows = vec![vec![self.field.zero(); self.n]; pivots.len()];
        for (r, &p) in pivots.iter().enumerate() {
            rows[r][p] = self.field.one();
        }
        let mut code = self.code;
        for &(r, c) in &self.free {
            rows[r][c] = self.elements[(code % q) as usize].clone();
            code /= q;
        }
        self.code += 1;
        Some(Subspace::from_rref_unchecked(self.field, self.n, rows, pivots))
    }
}

/// Every `k`-subspace of `F^n`, refusing runs over `budget` subspaces.
pub fn enumerate_subspaces<F: Field>(
    field: F,
    n: usize,
    k: usize,
    budget: u128,
) -> Result<SubspaceEnumerator<F>> {
    let q = field.order().ok_or(Error::InfiniteField)?;
    let count = gaussian_binomial(n, k, q).unwrap_or(u128::MAX);
    if count > budget {
        return Err(Error::BudgetExceeded { budget, needed: count });
    }
    SubspaceEnumerator::new(field, n, k)
}

/// Uniform random `k`-subspace by rejection on random `k×n` matrices.
pub fn random_subspace<F: Field, R: Rng + ?Sized>(field: F, n: usize, k: usize, rng: &mut R) -> Subspace<F> {
    loop {
        let rows: Rows<F> = (0..k).map(|_| (0..n).map(|_| field.random(rng)).collect()).collect();
        let w = Subspace::span(field, n, &rows).expect("rows have length n");
        if w.rank() == k {
            return w;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Exhaustive,
    Sampled { samples: u64 },
}

impl VerifyMode {
    pub fn label(&self) -> &'static str {
        match self {
            VerifyMode::Exhaustive => "exhaustive",
            VerifyMode::Sampled { .. } => "sampled",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchKind {
    /// Main equation and direct isotropy disagree.
    MainVsIsotropy,
    /// Main and rewritten left-hand sides do not vanish together.
    MainVsRewritten,
    /// Main and non-degenerate left-hand sides do not vanish together.
    MainVsShortcut,
    /// A wedge of a basis violates a Plücker relation.
    NotGrassmannian,
}

impl MismatchKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MismatchKind::MainVsIsotropy => "main-vs-isotropy",
            MismatchKind::MainVsRewritten => "main-vs-rewritten",
            MismatchKind::MainVsShortcut => "main-vs-shortcut",
            MismatchKind::NotGrassmannian => "not-grassmannian",
        }
    }
}

/// Witness for one disagreement.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch<F: Field> {
    pub kind: MismatchKind,
    pub rows: Rows<F>,
    /// Nonzero entries of the main left-hand side (first few).
    pub lhs_entries: Vec<(Vec<usize>, F::Elem)>,
    /// Nonzero `f(b_i, b_j)` over the basis rows (first few).
    pub gram_entries: Vec<(Vec<usize>, F::Elem)>,
}

const WITNESS_ENTRIES: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<F: Field> {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    pub epsilon: Sign,
    pub mode: VerifyMode,
    pub enumerated: u64,
    pub isotropic: u64,
    pub main_zero: u64,
    /// Whether the non-degenerate shortcut was compared (invertible `M_f`).
    pub shortcut_checked: bool,
    pub mismatches: Vec<Mismatch<F>>,
    /// Filled in by callers that own a clock.
    pub elapsed: Option<Duration>,
}

impl<F: Field> VerificationReport<F> {
    pub fn empty(ctx: &TheoremContext<F>, mode: VerifyMode) -> Self {
        VerificationReport {
            field: ctx.form.field().spec(),
            n: ctx.form.dim(),
            k: ctx.k,
            epsilon: ctx.form.epsilon(),
            mode,
            enumerated: 0,
            isotropic: 0,
            main_zero: 0,
            shortcut_checked: ctx.inverse_exists,
            mismatches: Vec::new(),
            elapsed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Appends the counts of `other`; order of merging is the order of
    /// mismatches in the result.
    pub fn merge(&mut self, other: VerificationReport<F>) {
        self.enumerated += other.enumerated;
        self.isotropic += other.isotropic;
        self.main_zero += other.main_zero;
        self.mismatches.extend(other.mismatches);
    }

    pub fn form_description(&self) -> String {
        alloc::format!("{} N={} eps={}", self.field, self.n, self.epsilon)
    }
}

impl<F: Field> TheoremContext<F> {
    /// Checks one subspace and folds the outcome into `report`.
    pub fn check_subspace(&self, w: &Subspace<F>, report: &mut VerificationReport<F>) -> Result<()> {
        let field = self.form.field();
        let x = w.wedge()?;
        let lhs = self.lhs_unchecked(&x)?;
        let main = lhs.is_zero();
        let iso = self.form.is_totally_isotropic(w);
        report.enumerated += 1;
        report.isotropic += iso as u64;
        report.main_zero += main as u64;

        let mut kinds = Vec::new();
        if main != iso {
            kinds.push(MismatchKind::MainVsIsotropy);
        }
        if self.alt_unchecked(&x)?.is_zero() != main {
            kinds.push(MismatchKind::MainVsRewritten);
        }
        if self.inverse_exists && self.nondeg_unchecked(&x)?.is_zero() != main {
            kinds.push(MismatchKind::MainVsShortcut);
        }
        if !self.satisfies_grassmannian(&x) {
            kinds.push(MismatchKind::NotGrassmannian);
        }
        for kind in kinds {
            let lhs_entries = lhs
                .nonzero_entries()
                .take(WITNESS_ENTRIES)
                .map(|(i, a)| (i, a.clone()))
                .collect();
            let mut gram_entries = Vec::new();
            for (i, a) in w.rows().iter().enumerate() {
                for (j, b) in w.rows().iter().enumerate() {
                    let v = self.form.evaluate(a, b)?;
                    if !field.is_zero(&v) && gram_entries.len() < WITNESS_ENTRIES {
                        gram_entries.push((vec![i, j], v));
                    }
                }
            }
            report.mismatches.push(Mismatch { kind, rows: w.rows().to_vec(), lhs_entries, gram_entries });
        }
        Ok(())
    }

    /// Exhaustive check over the subspaces with one of the given pivot
    /// patterns; the building block for partitioned runs.
    pub fn verify_patterns(&self, patterns: Vec<Vec<usize>>) -> Result<VerificationReport<F>> {
        let mut report = VerificationReport::empty(self, VerifyMode::Exhaustive);
        let it = SubspaceEnumerator::with_patterns(*self.form.field(), self.form.dim(), patterns)?;
        for w in it {
            self.check_subspace(&w, &mut report)?;
        }
        Ok(report)
    }
}

fn prepare<F: Field>(form: &SesquilinearForm<F>, k: usize, cap: usize) -> Result<TheoremContext<F>> {
    form.ensure_valid()?;
    form.field().order().ok_or(Error::InfiniteField)?;
    TheoremContext::with_cap(form, k, cap)
}

/// Checks every `k`-subspace: main equation ⇔ total isotropy, plus the
/// rewritten and non-degenerate forms.
pub fn verify_exhaustive<F: Field>(
    form: &SesquilinearForm<F>,
    k: usize,
    budget: u128,
    cap: usize,
) -> Result<VerificationReport<F>> {
    let ctx = prepare(form, k, cap)?;
    let it = enumerate_subspaces(*form.field(), form.dim(), k, budget)?;
    let mut report = VerificationReport::empty(&ctx, VerifyMode::Exhaustive);
    for w in it {
        ctx.check_subspace(&w, &mut report)?;
    }
    Ok(report)
}

/// As [`verify_exhaustive`] on `samples` uniformly drawn subspaces.
pub fn verify_sampled<F: Field, R: Rng + ?Sized>(
    form: &SesquilinearForm<F>,
    k: usize,
    samples: u64,
    cap: usize,
    rng: &mut R,
) -> Result<VerificationReport<F>> {
    let ctx = prepare(form, k, cap)?;
    let mut report = VerificationReport::empty(&ctx, VerifyMode::Sampled { samples });
    for _ in 0..samples {
        let w = random_subspace(*form.field(), form.dim(), k, rng);
        ctx.check_subspace(&w, &mut report)?;
    }
    Ok(report)
}

/// Totally isotropic `k`-subspaces, each double-checked against the
/// membership verdict of its wedge tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarListing<F: Field> {
    pub members: Vec<Subspace<F>>,
    /// Subspaces where the equation and direct isotropy disagree.
    pub disagreements: Vec<Subspace<F>>,
}

pub fn polar_grassmannian<F: Field>(
    form: &SesquilinearForm<F>,
    k: usize,
    budget: u128,
) -> Result<PolarListing<F>> {
    let ctx = prepare(form, k, crate::tensor::DEFAULT_SIZE_CAP)?;
    let mut listing = PolarListing { members: Vec::new(), disagreements: Vec::new() };
    for w in enumerate_subspaces(*form.field(), form.dim(), k, budget)? {
        let iso = form.is_totally_isotropic(&w);
        let verdict = ctx.membership(&w.wedge()?)?;
        if verdict.is_member() != iso || verdict.oracle_agrees() != Some(true) {
            listing.disagreements.push(w.clone());
        }
        if iso {
            listing.members.push(w);
        }
    }
    Ok(listing)
}
