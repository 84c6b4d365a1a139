//! Gaussian elimination over a [`Field`]: RREF, rank, kernels, inverses
//! and determinants of small dense matrices stored as row vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

pub type Rows<F> = Vec<Vec<<F as Field>::Elem>>;

/// Brings `rows` into reduced row-echelon form in place, drops zero rows,
/// and returns the pivot columns.
pub fn rref<F: Field>(field: &F, rows: &mut Rows<F>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        for a in rows[r].iter_mut() {
            *a = field.mul(&inv, a);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                *a = field.sub(a, &field.mul(&factor, b));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m, ncols).len()
}

/// Basis of `{y : A y = 0}`, itself in RREF.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Rows<F> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = field.neg(&row[free]);
        }
        basis.push(v);
    }
    rref(field, &mut basis, ncols);
    basis
}

pub fn determinant<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> F::Elem {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(found) = (c..n).find(|&i| !field.is_zero(&m[i][c])) else {
            return field.zero();
        };
        if found != c {
            m.swap(c, found);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("pivot is nonzero");
        for i in c + 1..n {
            if field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = field.mul(&m[i][c], &inv);
            for j in c..n {
                let t = field.mul(&factor, &m[c][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
    }
    det
}

pub fn inverse<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> Option<Rows<F>> {
    let n = rows.len();
    let mut aug: Rows<F> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let pivots = rref(field, &mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<F: Field>(field: &F, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Rows<F> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(field.zero(), |acc, (x, brow)| field.add(&acc, &field.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn transpose_rows<F: Field>(rows: &[Vec<F::Elem>]) -> Rows<F> {
    let cols = rows.first().map_or(0, Vec::len);
    (0..cols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect()
}

/// `v · A` for a row vector `v`.
pub fn row_times<F: Field>(field: &F, v: &[F::Elem], a: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(a)
                .fold(field.zero(), |acc, (x, row)| field.add(&acc, &field.mul(x, &row[j])))
        })
        .collect()
}

pub fn dot<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}
