//! Trace-valued (σ,ε)-sesquilinear forms `f(x, y) = Σ x_i^σ M_ij y_j`.
//!
//! σ acts on the left argument. A form is *reflexive* when
//! `Mᵀ = ε·M^σ` entrywise, and *trace-valued* when every `f(x, x)` lies in
//! `T = {t + ε·t^σ}`. Given reflexivity, the diagonal test is enough:
//! `f(xλ, xλ) = λ^σ f(x,x) λ` keeps `T` invariant and
//! `f(x+y, x+y) = f(x,x) + f(y,y) + (s + ε s^σ)` with `s = f(x,y)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exterior::Subspace;
use crate::field::{trace_subgroup, Field, Sign};
use crate::linalg::{self, Rows};
use crate::tensor::Tensor;

/// Default node budget for the Witt-index search.
pub const DEFAULT_WITT_BUDGET: u64 = 1_000_000;

/// Outcome of form validation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagnostics {
    /// 0-based `(i, j)` with `M_ji ≠ ε·σ(M_ij)`.
    pub reflexivity_failures: Vec<(usize, usize)>,
    /// 0-based diagonal positions outside the trace subgroup.
    pub trace_failures: Vec<usize>,
}

impl Diagnostics {
    pub fn reflexive(&self) -> bool {
        self.reflexivity_failures.is_empty()
    }

    pub fn trace_valued(&self) -> bool {
        self.trace_failures.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.reflexive() && self.trace_valued()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SesquilinearForm<F: Field> {
    field: F,
    matrix: Tensor<F>,
    epsilon: Sign,
    diagnostics: Diagnostics,
}

impl<F: Field> SesquilinearForm<F> {
    /// Wraps a Gram matrix and records its diagnostics. Invalid forms are
    /// accepted here; see [`SesquilinearForm::validated`].
    pub fn new(field: F, rows: &[Vec<F::Elem>], epsilon: Sign) -> Result<Self> {
        let matrix = Tensor::matrix(field, rows)?;
        let diagnostics = validate(&matrix, epsilon);
        Ok(SesquilinearForm { field, matrix, epsilon, diagnostics })
    }

    /// As [`SesquilinearForm::new`] but fails on an invalid form.
    pub fn validated(field: F, rows: &[Vec<F::Elem>], epsilon: Sign) -> Result<Self> {
        let form = Self::new(field, rows, epsilon)?;
        form.ensure_valid()?;
        Ok(form)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let d = &self.diagnostics;
        if d.is_valid() {
            return Ok(());
        }
        let mut why = Vec::new();
        if !d.reflexive() {
            why.push(format!("M^T != eps*M^sigma at {} positions", d.reflexivity_failures.len()));
        }
        if !d.trace_valued() {
            why.push(format!(
                "diagonal entries {:?} outside the trace subgroup",
                d.trace_failures.iter().map(|i| i + 1).collect::<Vec<_>>()
            ));
        }
        Err(Error::InvalidForm(why.join("; ")))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Tensor<F> {
        &self.matrix
    }

    pub fn matrix_rows(&self) -> Rows<F> {
        self.matrix.to_rows().expect("degree 2")
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn diagnostics(&self) -> &Diagnostics {
        &self.diagnostics
    }

    /// `f(x, y) = Σ σ(x_i) M_ij y_j`.
    pub fn evaluate(&self, x: &[F::Elem], y: &[F::Elem]) -> Result<F::Elem> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::DimensionMismatch(n, v.len()));
            }
        }
        Ok(self.eval_unchecked(x, y))
    }

    fn eval_unchecked(&self, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let n = self.dim();
        let m = self.matrix.entries();
        let mut acc = f.zero();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            let xs = f.sigma(xi);
            let row = &m[i * n..(i + 1) * n];
            acc = f.add(&acc, &f.mul(&xs, &linalg::dot(f, row, y)));
        }
        acc
    }

    /// `x^σ · M`, the functional `y ↦ f(x, y)`.
    pub fn functional(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let xs: Vec<F::Elem> = x.iter().map(|a| self.field.sigma(a)).collect();
        linalg::row_times(&self.field, &xs, &self.matrix_rows())
    }

    /// `{y : M y = 0}`.
    pub fn radical(&self) -> Subspace<F> {
        let n = self.dim();
        let basis = linalg::kernel(&self.field, &self.matrix_rows(), n);
        Subspace::span(self.field, n, &basis).expect("kernel vectors have length N")
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().rank() == 0
    }

    /// `{y : f(b, y) = 0 for every row b of W}`.
    pub fn perp(&self, w: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let rows: Rows<F> = w.rows().iter().map(|b| self.functional(b)).collect();
        let basis = if rows.is_empty() {
            Subspace::whole(self.field, n).rows().to_vec()
        } else {
            linalg::kernel(&self.field, &rows, n)
        };
        Subspace::span(self.field, n, &basis).expect("kernel vectors have length N")
    }

    /// `f(b_i, b_j) = 0` for all basis pairs, `i = j` included.
    pub fn is_totally_isotropic(&self, w: &Subspace<F>) -> bool {
        let rows = w.rows();
        rows.iter().all(|a| rows.iter().all(|b| self.field.is_zero(&self.eval_unchecked(a, b))))
    }

    /// Maximum rank of a totally isotropic subspace, with the default budget.
    pub fn witt_index(&self) -> Result<usize> {
        self.witt_index_with_budget(DEFAULT_WITT_BUDGET)
    }

    /// Depth-first search over totally isotropic subspaces, extending `W`
    /// by isotropic points of `W^⊥` outside `W`. Stops early once the
    /// bound `(N + dim rad)/2` is reached. `budget` limits the number of
    /// candidate points examined.
    pub fn witt_index_with_budget(&self, budget: u64) -> Result<usize> {
        let elements = self.field.elements()?;
        let n = self.dim();
        let bound = (n + self.radical().rank()) / 2;
        let mut search = WittSearch {
            form: self,
            elements,
            bound,
            best: 0,
            visited: BTreeSet::new(),
            budget,
            spent: 0,
        };
        search.explore(&Subspace::zero(self.field, n))?;
        Ok(search.best)
    }
}

/// Checks `Mᵀ = ε·M^σ` and the diagonal trace condition.
pub fn validate<F: Field>(matrix: &Tensor<F>, epsilon: Sign) -> Diagnostics {
    let f = matrix.field();
    let n = matrix.dim();
    let e = epsilon.to_elem(f);
    let mut d = Diagnostics::default();
    for i in 0..n {
        for j in 0..n {
            let lhs = matrix.get(&[j, i]);
            let rhs = f.mul(&e, &f.sigma(matrix.get(&[i, j])));
            if *lhs != rhs {
                d.reflexivity_failures.push((i, j));
            }
        }
    }
    let subgroup = trace_subgroup(f, epsilon).ok();
    for i in 0..n {
        let a = matrix.get(&[i, i]);
        let ok = match &subgroup {
            Some(t) => t.binary_search(a).is_ok(),
            None => f.trace_subgroup_contains(a, epsilon),
        };
        if !ok {
            d.trace_failures.push(i);
        }
    }
    d
}

/// Every projective point of the span of `basis`: coefficient vectors whose
/// first nonzero entry is 1.
pub(crate) fn projective_points<F: Field>(
    field: &F,
    elements: &[F::Elem],
    basis: &[Vec<F::Elem>],
    dim: usize,
) -> Vec<Vec<F::Elem>> {
    let m = basis.len();
    let q = elements.len();
    let mut out = Vec::new();
    for lead in 0..m {
        let free = m - lead - 1;
        let count = q.pow(free as u32);
        for mut code in 0..count {
            let mut v = basis[lead].clone();
            for b in &basis[lead + 1..] {
                let c = &elements[code % q];
                code /= q;
                if field.is_zero(c) {
                    continue;
                }
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = field.add(vi, &field.mul(c, bi));
                }
            }
            debug_assert_eq!(v.len(), dim);
            out.push(v);
        }
    }
    out
}

struct WittSearch<'a, F: Field> {
    form: &'a SesquilinearForm<F>,
    elements: Vec<F::Elem>,
    bound: usize,
    best: usize,
    visited: BTreeSet<Rows<F>>,
    budget: u64,
    spent: u64,
}

impl<F: Field> WittSearch<'_, F> {
    fn explore(&mut self, w: &Subspace<F>) -> Result<()> {
        self.best = self.best.max(w.rank());
        if self.best >= self.bound {
            return Ok(());
        }
        let f = *self.form.field();
        let n = self.form.dim();
        let perp = self.form.perp(w);
        for v in projective_points(&f, &self.elements, perp.rows(), n) {
            self.spent += 1;
            if self.spent > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget as u128,
                    needed: self.spent as u128,
                });
            }
            if !f.is_zero(&self.form.eval_unchecked(&v, &v)) || w.contains(&v) {
                continue;
            }
            let next = w.extend(&v);
            if !self.visited.insert(next.rows().to_vec()) {
                continue;
            }
            self.explore(&next)?;
            if self.best >= self.bound {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Standard symplectic Gram matrix on `2m` coordinates with hyperbolic
/// pairs `(e_1, e_2), (e_3, e_4), …`.
pub fn symplectic_matrix<F: Field>(field: &F, n: usize) -> Rows<F> {
    let mut rows = vec![vec![field.zero(); n]; n];
    for p in (0..n - n % 2).step_by(2) {
        rows[p][p + 1] = field.one();
        rows[p + 1][p] = field.neg(&field.one());
    }
    rows
}

pub fn identity_matrix<F: Field>(field: &F, n: usize) -> Rows<F> {
    (0..n).map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect()).collect()
}
