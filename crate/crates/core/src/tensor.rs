//! Dense tensors of arbitrary degree and the product family built on them:
//! the p-product `X ∘ᵖ Y`, the tensor product `X ⊗ Y`, the pseudo-tensor
//! product `X ⊙ Y` and pseudo-tensor powers `⊙ʳA`.
//!
//! A tensor of degree `r` over dimension `N` stores `N^r` entries in
//! row-major order, first index slowest. Degree 0 is a scalar. Indices are
//! 0-based in this API; the text formats are 1-based.
//!
//! Every operation that allocates checks the entry count against a size
//! cap. The cap travels with the tensor and derived tensors inherit the
//! smaller cap of their operands.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;

/// Default bound on the number of entries of any tensor (2^27).
pub const DEFAULT_SIZE_CAP: usize = 1 << 27;

#[derive(Debug, Clone)]
pub struct Tensor<F: Field> {
    field: F,
    dim: usize,
    degree: usize,
    cap: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> PartialEq for Tensor<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.degree == other.degree
            && self.data == other.data
    }
}

impl<F: Field> Eq for Tensor<F> {}

/// `dim^degree`, or a size-cap error.
pub fn checked_len(dim: usize, degree: usize, cap: usize) -> Result<usize> {
    let too_big = Error::SizeCap { dim, degree, cap };
    let len = u32::try_from(degree)
        .ok()
        .and_then(|d| dim.checked_pow(d))
        .ok_or_else(|| too_big.clone())?;
    if len > cap {
        return Err(too_big);
    }
    Ok(len)
}

impl<F: Field> Tensor<F> {
    pub fn zeros(field: F, dim: usize, degree: usize) -> Result<Self> {
        Self::zeros_capped(field, dim, degree, DEFAULT_SIZE_CAP)
    }

    pub fn zeros_capped(field: F, dim: usize, degree: usize, cap: usize) -> Result<Self> {
        let len = checked_len(dim, degree, cap)?;
        Ok(Tensor { field, dim, degree, cap, data: vec![field.zero(); len] })
    }

    pub fn from_entries(field: F, dim: usize, degree: usize, data: Vec<F::Elem>) -> Result<Self> {
        let len = checked_len(dim, degree, DEFAULT_SIZE_CAP)?;
        if data.len() != len {
            return Err(Error::EntryCount { dim, degree, got: data.len() });
        }
        Ok(Tensor { field, dim, degree, cap: DEFAULT_SIZE_CAP, data })
    }

    /// Builds a tensor from a function of the (0-based) multi-index.
    pub fn from_fn(
        field: F,
        dim: usize,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> F::Elem,
    ) -> Result<Self> {
        let len = checked_len(dim, degree, DEFAULT_SIZE_CAP)?;
        let mut idx = vec![0usize; degree];
        let mut data = Vec::with_capacity(len);
        for flat in 0..len {
            unflatten_into(flat, dim, &mut idx);
            data.push(f(&idx));
        }
        Ok(Tensor { field, dim, degree, cap: DEFAULT_SIZE_CAP, data })
    }

    /// Degree-0 tensor holding `value`. `dim` is the ambient dimension N.
    pub fn scalar(field: F, dim: usize, value: F::Elem) -> Self {
        Tensor { field, dim, degree: 0, cap: DEFAULT_SIZE_CAP, data: vec![value] }
    }

    pub fn vector(field: F, entries: Vec<F::Elem>) -> Self {
        let dim = entries.len();
        Tensor { field, dim, degree: 1, cap: DEFAULT_SIZE_CAP, data: entries }
    }

    pub fn matrix(field: F, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Self::from_entries(field, n, 2, rows.iter().flatten().cloned().collect())
    }

    pub fn identity(field: F, dim: usize) -> Result<Self> {
        Self::from_fn(field, dim, 2, |i| if i[0] == i[1] { field.one() } else { field.zero() })
    }

    /// Unit vector `e_i` (0-based).
    pub fn unit_vector(field: F, dim: usize, i: usize) -> Self {
        let mut data = vec![field.zero(); dim];
        data[i] = field.one();
        Tensor::vector(field, data)
    }

    pub fn with_cap(mut self, cap: usize) -> Result<Self> {
        if self.data.len() > cap {
            return Err(Error::SizeCap { dim: self.dim, degree: self.degree, cap });
        }
        self.cap = cap;
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<F::Elem> {
        self.data
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.degree);
        idx.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn get(&self, idx: &[usize]) -> &F::Elem {
        &self.data[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: F::Elem) {
        let at = self.flat_index(idx);
        self.data[at] = value;
    }

    /// Value of a degree-0 tensor.
    pub fn scalar_value(&self) -> Option<&F::Elem> {
        (self.degree == 0).then(|| &self.data[0])
    }

    /// Rows of a degree-2 tensor.
    pub fn to_rows(&self) -> Option<Vec<Vec<F::Elem>>> {
        (self.degree == 2).then(|| self.data.chunks(self.dim.max(1)).map(<[_]>::to_vec).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    /// Nonzero entries with their multi-indices.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (Vec<usize>, &F::Elem)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, a)| !self.field.is_zero(a))
            .map(|(flat, a)| (unflatten(flat, self.dim, self.degree), a))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    fn derived_cap(&self, other: &Self) -> usize {
        self.cap.min(other.cap)
    }

    /// `X ∘ᵖ Y`: contracts the last `p` indices of `self` against the first
    /// `p` indices of `other`.
    pub fn p_product(&self, other: &Self, p: usize) -> Result<Self> {
        self.check_compatible(other)?;
        if p > self.degree || p > other.degree {
            return Err(Error::ContractionTooLarge { p, left: self.degree, right: other.degree });
        }
        let f = &self.field;
        let degree = self.degree + other.degree - 2 * p;
        let mut out = Self::zeros_capped(*f, self.dim, degree, self.derived_cap(other))?;
        let inner = self.dim.pow(p as u32);
        let cols = self.dim.pow((other.degree - p) as u32);
        for (row, x_row) in self.data.chunks(inner).enumerate() {
            let z_row = &mut out.data[row * cols..(row + 1) * cols];
            for (h, x) in x_row.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                let y_row = &other.data[h * cols..(h + 1) * cols];
                for (z, y) in z_row.iter_mut().zip(y_row) {
                    if !f.is_zero(y) {
                        *z = f.add(z, &f.mul(x, y));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `X ∘ Y`, the 1-product.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.p_product(other, 1)
    }

    /// `X ⊗ Y`, indices of `self` first.
    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        self.p_product(other, 0)
    }

    /// `X ⊙ Y` for even degrees `2u` and `2v`: entry
    /// `(i_1..i_u, j_1..j_v, i_{u+1}..i_{2u}, j_{v+1}..j_{2v})` is `x_i · y_j`.
    pub fn pseudo_product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        for d in [self.degree, other.degree] {
            if d % 2 == 1 {
                return Err(Error::OddDegree(d));
            }
        }
        let f = &self.field;
        let n = self.dim;
        let (u, v) = (self.degree / 2, other.degree / 2);
        let mut out =
            Self::zeros_capped(*f, n, self.degree + other.degree, self.derived_cap(other))?;
        let nu = n.pow(u as u32);
        let nv = n.pow(v as u32);
        for (a, x) in self.data.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            let (xh, xl) = (a / nu, a % nu);
            for (b, y) in other.data.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let (yh, yl) = (b / nv, b % nv);
                let at = ((xh * nv + yh) * nu + xl) * nv + yl;
                out.data[at] = f.mul(x, y);
            }
        }
        Ok(out)
    }

    /// `⊙ʳA` with `⊙¹A = A` and `⊙^{r+1}A = (⊙ʳA) ⊙ A`.
    pub fn pseudo_power(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroPower);
        }
        if self.degree % 2 == 1 {
            return Err(Error::OddDegree(self.degree));
        }
        checked_len(self.dim, self.degree * r, self.cap)?;
        let mut acc = self.clone();
        for _ in 1..r {
            acc = acc.pseudo_product(self)?;
        }
        Ok(acc)
    }

    /// Entrywise σ.
    pub fn apply_sigma(&self) -> Self {
        self.map(|a| self.field.sigma(a))
    }

    pub fn map(&self, mut g: impl FnMut(&F::Elem) -> F::Elem) -> Self {
        Tensor {
            field: self.field,
            dim: self.dim,
            degree: self.degree,
            cap: self.cap,
            data: self.data.iter().map(&mut g).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.map(|a| self.field.mul(c, a))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| self.field.neg(a))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Self, g: impl Fn(&F, &F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(alloc::format!(
                "{} vs {}",
                self.degree, other.degree
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| g(&self.field, a, b)).collect();
        Ok(Tensor { data, cap: self.derived_cap(other), ..self.clone() })
    }

    /// `Aᵀ` for a degree-2 tensor.
    pub fn transpose(&self) -> Result<Self> {
        if self.degree != 2 {
            return Err(Error::DegreeMismatch(alloc::format!(
                "transpose needs degree 2, got {}",
                self.degree
            )));
        }
        let n = self.dim;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        Ok(out)
    }

    /// Zero on every index tuple with a repeat, and negated by every
    /// transposition of two index positions.
    pub fn is_alternating(&self) -> bool {
        let f = &self.field;
        let k = self.degree;
        if k < 2 {
            return true;
        }
        let mut idx = vec![0usize; k];
        for (flat, a) in self.data.iter().enumerate() {
            unflatten_into(flat, self.dim, &mut idx);
            if has_repeat(&idx) {
                if !f.is_zero(a) {
                    return false;
                }
                continue;
            }
            // adjacent transpositions generate the symmetric group
            for s in 0..k - 1 {
                idx.swap(s, s + 1);
                let swapped = self.get(&idx);
                idx.swap(s, s + 1);
                if *swapped != f.neg(a) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn has_repeat(idx: &[usize]) -> bool {
    idx.iter().enumerate().any(|(i, a)| idx[i + 1..].contains(a))
}

fn unflatten_into(mut flat: usize, dim: usize, idx: &mut [usize]) {
    for slot in idx.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
}

/// Multi-index of a flat position.
pub fn unflatten(flat: usize, dim: usize, degree: usize) -> Vec<usize> {
    let mut idx = vec![0; degree];
    unflatten_into(flat, dim, &mut idx);
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Gf, Rationals, SigmaKind};
    use num_rational::BigRational;

    fn q_matrix(rows: &[[i64; 2]]) -> Tensor<Rationals> {
        let q = Rationals;
        let rows: Vec<Vec<BigRational>> =
            rows.iter().map(|r| r.iter().map(|&v| q.from_int(v)).collect()).collect();
        Tensor::matrix(q, &rows).unwrap()
    }

    #[test]
    fn identity_is_neutral_for_matrix_product() {
        let y = q_matrix(&[[1, 2], [3, 4]]);
        let i = Tensor::identity(Rationals, 2).unwrap();
        assert_eq!(i.compose(&y).unwrap(), y);
        assert_eq!(y.compose(&i).unwrap(), y);
    }

    #[test]
    fn orthogonal_unit_vectors_contract_to_zero() {
        let f = FiniteField::prime(5).unwrap();
        let x = Tensor::unit_vector(f, 2, 0);
        let y = Tensor::unit_vector(f, 2, 1);
        let z = x.compose(&y).unwrap();
        assert_eq!(z.degree(), 0);
        assert_eq!(z.scalar_value(), Some(&Gf(0)));
    }

    #[test]
    fn full_contraction_with_identity_is_trace() {
        let x = q_matrix(&[[1, 2], [3, 4]]);
        let i = Tensor::identity(Rationals, 2).unwrap();
        let z = x.p_product(&i, 2).unwrap();
        assert_eq!(z.scalar_value(), Some(&Rationals.from_int(5)));
    }

    #[test]
    fn p_product_rejects_large_p() {
        let x = q_matrix(&[[1, 2], [3, 4]]);
        let v = Tensor::unit_vector(Rationals, 2, 0);
        assert!(matches!(x.p_product(&v, 2), Err(Error::ContractionTooLarge { .. })));
    }

    #[test]
    fn mismatched_operands_rejected() {
        let a = Tensor::identity(FiniteField::prime(3).unwrap(), 2).unwrap();
        let b = Tensor::identity(FiniteField::prime(5).unwrap(), 2).unwrap();
        assert_eq!(a.p_product(&b, 1), Err(Error::FieldMismatch));
        let c = Tensor::identity(FiniteField::prime(3).unwrap(), 3).unwrap();
        assert_eq!(a.p_product(&c, 1), Err(Error::DimensionMismatch(2, 3)));
    }

    #[test]
    fn unit_tensor_product() {
        let f = FiniteField::prime(2).unwrap();
        let t = Tensor::unit_vector(f, 2, 0).tensor_product(&Tensor::unit_vector(f, 2, 1)).unwrap();
        assert_eq!(t.get(&[0, 1]), &Gf(1));
        assert_eq!(t.nonzero_entries().count(), 1);
    }

    #[test]
    fn tensor_product_with_zero_is_zero() {
        let f = FiniteField::prime(3).unwrap();
        let x = Tensor::identity(f, 3).unwrap();
        let z = Tensor::zeros(f, 3, 2).unwrap();
        assert!(x.tensor_product(&z).unwrap().is_zero());
    }

    #[test]
    fn pseudo_product_of_identities() {
        let f = FiniteField::prime(3).unwrap();
        let i = Tensor::identity(f, 2).unwrap();
        let ii = i.pseudo_product(&i).unwrap();
        for idx in (0..16).map(|flat| unflatten(flat, 2, 4)) {
            let expect = idx[0] == idx[2] && idx[1] == idx[3];
            assert_eq!(*ii.get(&idx) == Gf(1), expect, "{idx:?}");
        }
    }

    #[test]
    fn pseudo_product_of_matrix_units() {
        let f = FiniteField::prime(2).unwrap();
        let mut e11 = Tensor::zeros(f, 2, 2).unwrap();
        e11.set(&[0, 0], Gf(1));
        let mut e22 = Tensor::zeros(f, 2, 2).unwrap();
        e22.set(&[1, 1], Gf(1));
        let z = e11.pseudo_product(&e22).unwrap();
        let nz: Vec<_> = z.nonzero_entries().map(|(i, _)| i).collect();
        assert_eq!(nz, vec![vec![0, 1, 0, 1]]);
    }

    #[test]
    fn pseudo_product_rejects_odd_degree() {
        let f = FiniteField::prime(2).unwrap();
        let v = Tensor::unit_vector(f, 2, 0);
        let i = Tensor::identity(f, 2).unwrap();
        assert_eq!(v.pseudo_product(&i), Err(Error::OddDegree(1)));
    }

    #[test]
    fn pseudo_power_base_case_and_entry() {
        let a = q_matrix(&[[1, 2], [3, 4]]);
        assert_eq!(a.pseudo_power(1).unwrap(), a);
        let a2 = a.pseudo_power(2).unwrap();
        // (1,2,2,1) in 1-based terms
        assert_eq!(a2.get(&[0, 1, 1, 0]), &Rationals.from_int(6));
        assert_eq!(a.pseudo_power(0), Err(Error::ZeroPower));
    }

    #[test]
    fn pseudo_square_of_identity() {
        let f = FiniteField::prime(5).unwrap();
        let i2 = Tensor::identity(f, 3).unwrap().pseudo_power(2).unwrap();
        for flat in 0..81 {
            let idx = unflatten(flat, 3, 4);
            let expect = idx[0] == idx[2] && idx[1] == idx[3];
            assert_eq!(*i2.get(&idx) == Gf(1), expect);
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let f = FiniteField::prime(2).unwrap();
        assert!(matches!(Tensor::zeros(f, 64, 5), Err(Error::SizeCap { .. })));
        let m = Tensor::identity(f, 4).unwrap().with_cap(300).unwrap();
        assert!(matches!(m.pseudo_power(3), Err(Error::SizeCap { .. })));
        assert!(m.pseudo_power(2).is_ok());
    }

    #[test]
    fn sigma_on_gf4_vector() {
        let f = FiniteField::quadratic(2, SigmaKind::Frobenius).unwrap();
        let w = f.from_coeffs(&[0, 1]).unwrap();
        let v = Tensor::vector(f, vec![w, f.one()]);
        let s = v.apply_sigma();
        assert_eq!(s.entries(), &[f.from_coeffs(&[1, 1]).unwrap(), f.one()]);
        assert_eq!(s.apply_sigma(), v);
    }

    #[test]
    fn sigma_identity_is_noop() {
        let x = q_matrix(&[[1, 2], [3, 4]]);
        assert_eq!(x.apply_sigma(), x);
    }

    #[test]
    fn alternating_checks() {
        let f = FiniteField::prime(3).unwrap();
        let mut e11 = Tensor::zeros(f, 2, 2).unwrap();
        e11.set(&[0, 0], Gf(1));
        assert!(!e11.is_alternating());

        let mut w = Tensor::zeros(f, 3, 2).unwrap();
        w.set(&[0, 1], Gf(1));
        w.set(&[1, 0], Gf(2));
        assert!(w.is_alternating());

        // char 2: symmetric with zero diagonal is alternating
        let g = FiniteField::prime(2).unwrap();
        let mut s = Tensor::zeros(g, 3, 2).unwrap();
        s.set(&[0, 2], Gf(1));
        s.set(&[2, 0], Gf(1));
        assert!(s.is_alternating());
    }

    #[test]
    fn plumbing_identities() {
        let g = FiniteField::prime(2).unwrap();
        let i = Tensor::identity(g, 3).unwrap();
        assert_eq!(i.transpose().unwrap(), i);
        assert!(i.sub(&i).unwrap().is_zero());
        assert!(i.add(&i).unwrap().is_zero());
        assert!(Tensor::unit_vector(g, 3, 0).transpose().is_err());
        assert!(i.add(&Tensor::unit_vector(g, 3, 0)).is_err());
    }
}
