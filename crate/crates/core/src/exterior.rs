//! Plücker layer: subspaces in canonical form, wedge tensors of bases and
//! dual bases, the Grassmann–Plücker relations, and an independent
//! decomposability test through the kernel of `v ↦ v ∧ X`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Rows};
use crate::tensor::{has_repeat, Tensor};

/// Strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `idx` and reports whether an odd permutation was needed.
/// `None` when an index repeats.
pub fn sort_with_parity(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    if has_repeat(idx) {
        return None;
    }
    let inversions = idx
        .iter()
        .enumerate()
        .map(|(i, a)| idx[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    Some((sorted, inversions % 2 == 1))
}

/// Lookup table between increasing `k`-tuples and Plücker variable numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerIndex {
    n: usize,
    k: usize,
    tuples: Vec<Vec<usize>>,
    lookup: BTreeMap<Vec<usize>, usize>,
}

impl PluckerIndex {
    pub fn new(n: usize, k: usize) -> Self {
        let tuples = k_subsets(n, k);
        let lookup = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        PluckerIndex { n, k, tuples, lookup }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple(&self, var: usize) -> &[usize] {
        &self.tuples[var]
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Variable number of an increasing tuple.
    pub fn var(&self, tuple: &[usize]) -> Option<usize> {
        self.lookup.get(tuple).copied()
    }
}

/// A subspace of `F^N`, held as the RREF of a row basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    field: F,
    dim: usize,
    rows: Rows<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Span of arbitrary rows.
    pub fn span(field: F, dim: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(dim, r.len()));
        }
        let mut rows = rows.to_vec();
        let pivots = linalg::rref(&field, &mut rows, dim);
        Ok(Subspace { field, dim, rows, pivots })
    }

    /// Like [`Subspace::span`], but the rows must be independent.
    pub fn from_basis(field: F, dim: usize, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let s = Self::span(field, dim, rows)?;
        if s.rank() != rows.len() {
            return Err(Error::DependentRows);
        }
        Ok(s)
    }

    /// Wraps rows already known to be in RREF with the given pivots.
    pub(crate) fn from_rref_unchecked(field: F, dim: usize, rows: Rows<F>, pivots: Vec<usize>) -> Self {
        Subspace { field, dim, rows, pivots }
    }

    pub fn zero(field: F, dim: usize) -> Self {
        Subspace { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(field: F, dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { field.one() } else { field.zero() }).collect())
            .collect();
        Subspace { field, dim, rows, pivots: (0..dim).collect() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut m = self.rows.clone();
        m.push(v.to_vec());
        linalg::rank(&self.field, &m, self.dim) == self.rank()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// `self + ⟨v⟩`.
    pub fn extend(&self, v: &[F::Elem]) -> Self {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        let pivots = linalg::rref(&self.field, &mut rows, self.dim);
        Subspace { field: self.field, dim: self.dim, rows, pivots }
    }

    pub fn wedge(&self) -> Result<Tensor<F>> {
        wedge_tensor(self.field, self.dim, &self.rows)
    }
}

fn minors_tensor<F: Field>(field: F, n: usize, rows: &[Vec<F::Elem>]) -> Result<Tensor<F>> {
    let k = rows.len();
    if k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(n, r.len()));
    }
    let mut coords = BTreeMap::new();
    for cols in k_subsets(n, k) {
        let minor: Rows<F> =
            rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
        coords.insert(cols, linalg::determinant(&field, &minor));
    }
    Tensor::from_fn(field, n, k, |idx| match sort_with_parity(idx) {
        None => field.zero(),
        Some((sorted, odd)) => {
            let x = &coords[&sorted];
            if odd {
                field.neg(x)
            } else {
                x.clone()
            }
        }
    })
}

/// Alternating tensor of `x_1 ∧ … ∧ x_k` for the rows `x_r`: the entry at
/// an increasing tuple is the minor on those columns.
pub fn wedge_tensor<F: Field>(field: F, n: usize, rows: &[Vec<F::Elem>]) -> Result<Tensor<F>> {
    minors_tensor(field, n, rows)
}

/// Tensor `Ξ` of `ξ_1 ∧ … ∧ ξ_k` for functionals given by their
/// coordinates against the dual basis.
pub fn dual_wedge_tensor<F: Field>(field: F, n: usize, rows: &[Vec<F::Elem>]) -> Result<Tensor<F>> {
    minors_tensor(field, n, rows)
}

/// Coordinates of an alternating tensor at the increasing tuples.
pub fn plucker_coordinates<F: Field>(x: &Tensor<F>) -> Vec<F::Elem> {
    k_subsets(x.dim(), x.degree()).iter().map(|t| x.get(t).clone()).collect()
}

/// Alternating tensor with the given Plücker coordinates.
pub fn alternating_from_coordinates<F: Field>(
    field: F,
    n: usize,
    k: usize,
    coords: &[F::Elem],
) -> Result<Tensor<F>> {
    let index = PluckerIndex::new(n, k);
    if coords.len() != index.len() {
        return Err(Error::EntryCount { dim: n, degree: k, got: coords.len() });
    }
    Tensor::from_fn(field, n, k, |idx| match sort_with_parity(idx) {
        None => field.zero(),
        Some((sorted, odd)) => {
            let x = &coords[index.var(&sorted).expect("increasing tuple")];
            if odd {
                field.neg(x)
            } else {
                x.clone()
            }
        }
    })
}

/// One quadratic term `c · x_a^(σ) · x_b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadTerm<E> {
    pub left: usize,
    pub right: usize,
    pub coeff: E,
}

/// A quadratic form in Plücker variables. When `conjugate_left` is set the
/// left factor of each term is σ-twisted, so `(a, b)` and `(b, a)` are
/// different monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuadPoly<E> {
    pub conjugate_left: bool,
    pub terms: Vec<QuadTerm<E>>,
}

impl<E: Clone + Ord> QuadPoly<E> {
    /// Merges like terms, drops zero coefficients, sorts and scales to a
    /// leading coefficient of 1. Returns `None` for the zero polynomial.
    pub fn normalized<F: Field<Elem = E>>(field: &F, conjugate_left: bool, terms: Vec<QuadTerm<E>>) -> Option<Self> {
        let mut merged: BTreeMap<(usize, usize), E> = BTreeMap::new();
        for t in terms {
            let key = if conjugate_left || t.left <= t.right {
                (t.left, t.right)
            } else {
                (t.right, t.left)
            };
            let slot = merged.entry(key).or_insert_with(|| field.zero());
            *slot = field.add(slot, &t.coeff);
        }
        let mut terms: Vec<QuadTerm<E>> = merged
            .into_iter()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|((left, right), coeff)| QuadTerm { left, right, coeff })
            .collect();
        let lead = field.inv(&terms.first()?.coeff).expect("nonzero");
        for t in terms.iter_mut() {
            t.coeff = field.mul(&lead, &t.coeff);
        }
        Some(QuadPoly { conjugate_left, terms })
    }

    pub fn evaluate<F: Field<Elem = E>>(&self, field: &F, coords: &[E]) -> E {
        self.terms.iter().fold(field.zero(), |acc, t| {
            let left = if self.conjugate_left {
                field.sigma(&coords[t.left])
            } else {
                coords[t.left].clone()
            };
            field.add(&acc, &field.mul(&t.coeff, &field.mul(&left, &coords[t.right])))
        })
    }
}

/// A list of quadratic polynomials in the `C(N,k)` Plücker variables.
#[derive(Debug, Clone, PartialEq)]
pub struct EquationSet<F: Field> {
    field: F,
    index: PluckerIndex,
    polys: Vec<QuadPoly<F::Elem>>,
}

impl<F: Field> EquationSet<F> {
    pub fn new(field: F, n: usize, k: usize) -> Self {
        EquationSet { field, index: PluckerIndex::new(n, k), polys: Vec::new() }
    }

    /// Adds a polynomial unless it is zero or already present.
    pub fn push(&mut self, poly: QuadPoly<F::Elem>) -> bool {
        if poly.terms.is_empty() || self.polys.contains(&poly) {
            return false;
        }
        self.polys.push(poly);
        true
    }

    pub fn polys(&self) -> &[QuadPoly<F::Elem>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn index(&self) -> &PluckerIndex {
        &self.index
    }

    pub fn all_vanish(&self, coords: &[F::Elem]) -> bool {
        self.polys.iter().all(|p| self.field.is_zero(&p.evaluate(&self.field, coords)))
    }

    /// One polynomial in the text format, e.g.
    /// `+x[1,2]*x[3,4] -x[1,3]*x[2,4] +x[1,4]*x[2,3]`.
    pub fn format_poly(&self, poly: &QuadPoly<F::Elem>) -> String {
        let f = &self.field;
        let one = f.one();
        let minus_one = f.neg(&one);
        let mut out = String::new();
        for (i, t) in poly.terms.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            if t.coeff == one {
                out.push('+');
            } else if t.coeff == minus_one {
                out.push('-');
            } else {
                let _ = write!(out, "+{}*", f.display(&t.coeff));
            }
            self.write_var(&mut out, t.left);
            if poly.conjugate_left {
                out.push_str("^sigma");
            }
            out.push('*');
            self.write_var(&mut out, t.right);
        }
        out
    }

    fn write_var(&self, out: &mut String, var: usize) {
        out.push_str("x[");
        for (i, c) in self.index.tuple(var).iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", c + 1);
        }
        out.push(']');
    }
}

impl<F: Field> fmt::Display for EquationSet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polys {
            writeln!(f, "{}", self.format_poly(p))?;
        }
        Ok(())
    }
}

/// The Grassmann–Plücker relations with integer coefficients, before
/// reduction into a particular field. Each relation is a list of
/// `(sign, a, b)` meaning `±x_a·x_b`.
#[derive(Debug, Clone)]
pub struct PluckerRelations {
    index: PluckerIndex,
    relations: Vec<Vec<(i64, usize, usize)>>,
}

impl PluckerRelations {
    /// For every increasing `(k-1)`-tuple `I` and `(k+1)`-tuple `J`:
    /// `Σ_t (-1)^t x_{I ∪ j_t} x_{J \ j_t} = 0`. Trivial relations dropped.
    pub fn new(n: usize, k: usize) -> Self {
        let index = PluckerIndex::new(n, k);
        let mut relations = Vec::new();
        if k == 0 || k > n {
            return PluckerRelations { index, relations };
        }
        for i_tuple in k_subsets(n, k - 1) {
            for j_tuple in k_subsets(n, k + 1) {
                let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
                for (t, &jt) in j_tuple.iter().enumerate() {
                    let mut left = i_tuple.clone();
                    left.push(jt);
                    let Some((left, odd)) = sort_with_parity(&left) else {
                        continue;
                    };
                    let right: Vec<usize> = j_tuple.iter().copied().filter(|&j| j != jt).collect();
                    let a = index.var(&left).expect("increasing");
                    let b = index.var(&right).expect("increasing");
                    let mut sign = if t % 2 == 0 { 1 } else { -1 };
                    if odd {
                        sign = -sign;
                    }
                    *acc.entry((a.min(b), a.max(b))).or_default() += sign;
                }
                let rel: Vec<(i64, usize, usize)> =
                    acc.into_iter().filter(|(_, c)| *c != 0).map(|((a, b), c)| (c, a, b)).collect();
                if !rel.is_empty() {
                    relations.push(rel);
                }
            }
        }
        PluckerRelations { index, relations }
    }

    pub fn index(&self) -> &PluckerIndex {
        &self.index
    }

    pub fn raw(&self) -> &[Vec<(i64, usize, usize)>] {
        &self.relations
    }

    pub fn all_vanish<F: Field>(&self, field: &F, coords: &[F::Elem]) -> bool {
        self.relations.iter().all(|rel| {
            let v = rel.iter().fold(field.zero(), |acc, (c, a, b)| {
                let term = field.mul(&coords[*a], &coords[*b]);
                if *c == 1 {
                    field.add(&acc, &term)
                } else if *c == -1 {
                    field.sub(&acc, &term)
                } else {
                    field.add(&acc, &field.mul(&field.from_int(*c), &term))
                }
            });
            field.is_zero(&v)
        })
    }

    /// Reduces into `field`, normalizes and deduplicates.
    pub fn to_equations<F: Field>(&self, field: F) -> EquationSet<F> {
        let mut set = EquationSet::new(field, self.index.n, self.index.k);
        for rel in &self.relations {
            let terms = rel
                .iter()
                .map(|&(c, left, right)| QuadTerm { left, right, coeff: field.from_int(c) })
                .collect();
            if let Some(p) = QuadPoly::normalized(&field, false, terms) {
                set.push(p);
            }
        }
        set
    }
}

/// The Grassmann–Plücker relations for `k`-subspaces of `F^N`.
pub fn plucker_relations<F: Field>(field: F, n: usize, k: usize) -> Result<EquationSet<F>> {
    if k < 2 || k > n {
        return Err(Error::RankOutOfRange { k, n });
    }
    Ok(PluckerRelations::new(n, k).to_equations(field))
}

/// Do all Plücker relations vanish on `x`? Degrees 0 and 1 are always
/// decomposable.
pub fn satisfies_grassmannian<F: Field>(x: &Tensor<F>) -> Result<bool> {
    if !x.is_alternating() {
        return Err(Error::NotAlternating);
    }
    if x.degree() < 2 {
        return Ok(true);
    }
    let rel = PluckerRelations::new(x.dim(), x.degree());
    Ok(rel.all_vanish(x.field(), &plucker_coordinates(x)))
}

/// Matrix of `v ↦ v ∧ X`: one row per increasing `(k+1)`-tuple `J`, with
/// `(-1)^t x_{J \ j_t}` in column `j_t`.
fn wedge_map_rows<F: Field>(x: &Tensor<F>) -> Rows<F> {
    let field = x.field();
    let (n, k) = (x.dim(), x.degree());
    k_subsets(n, k + 1)
        .into_iter()
        .map(|j_tuple| {
            let mut row = vec![field.zero(); n];
            for (t, &jt) in j_tuple.iter().enumerate() {
                let rest: Vec<usize> = j_tuple.iter().copied().filter(|&j| j != jt).collect();
                let c = x.get(&rest).clone();
                row[jt] = if t % 2 == 0 { c } else { field.neg(&c) };
            }
            row
        })
        .collect()
}

/// `W = {v : v ∧ X = 0}`; returns `W` when `X` is a nonzero multiple of its
/// wedge tensor, `None` when `X` is not decomposable.
pub fn decompose<F: Field>(x: &Tensor<F>) -> Result<Option<Subspace<F>>> {
    if !x.is_alternating() {
        return Err(Error::NotAlternating);
    }
    if x.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let field = *x.field();
    let (n, k) = (x.dim(), x.degree());
    let basis = linalg::kernel(&field, &wedge_map_rows(x), n);
    if basis.len() != k {
        return Ok(None);
    }
    let w = Subspace::span(field, n, &basis)?;
    let wx = w.wedge()?;
    let Some(at) = x.entries().iter().position(|a| !field.is_zero(a)) else {
        return Err(Error::ZeroTensor);
    };
    let Some(inv) = field.inv(&wx.entries()[at]) else {
        return Ok(None);
    };
    let lambda = field.mul(&x.entries()[at], &inv);
    Ok((wx.scale(&lambda) == *x).then_some(w))
}
