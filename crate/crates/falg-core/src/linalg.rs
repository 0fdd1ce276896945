//! Coordinate vectors, rational matrices, and exact linear solving.
//!
//! The kernel routine returns a canonical basis derived from the reduced
//! echelon form, so identical input produces identical output across runs
//! and platforms.

use serde::{Deserialize, Serialize};

use crate::error::{FalgError, Result};
use crate::rat::Rat;

/// A coordinate vector in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector(pub Vec<Rat>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rat::zero(); dim])
    }

    /// Standard basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Rat::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn add_scaled(&mut self, c: &Rat, other: &Vector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }
}

/// Dense rational matrix, row-major. Serialized as nested row arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Rat>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).clone()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rat>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(FalgError::Malformed {
                    field: "matrix",
                    reason: "ragged rows".into(),
                });
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| Rat::int(c)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector]) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map_or(0, Vector::dim);
        let mut m = Self::zero(nrows, ncols);
        for (j, v) in cols.iter().enumerate() {
            for i in 0..nrows {
                m.set(i, j, v.0[i].clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.cols {
            return Err(FalgError::DimensionMismatch {
                arg: "vector",
                expected: self.cols,
                got: v.dim(),
            });
        }
        let mut out = Vector::zero(self.rows);
        for r in 0..self.rows {
            let mut acc = Rat::zero();
            for c in 0..self.cols {
                let e = self.get(r, c);
                if !e.is_zero() && !v.0[c].is_zero() {
                    acc += e * &v.0[c];
                }
            }
            out.0[r] = acc;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(FalgError::DimensionMismatch {
                arg: "matrix",
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let cur = out.get(r, c) + a * b;
                        out.set(r, c, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = &*a - b;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    /// Reduced row-echelon form with the pivot column list. Gauss-Jordan
    /// elimination over exact rationals; no pivoting heuristics are needed,
    /// so the result is canonical for a given input.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(p, c).clone();
                    m.set(row, c, b);
                    m.set(p, c, a);
                }
            }
            let inv = m.get(row, col).recip().expect("pivot nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the exact null space. For each free column `f`,
    /// the basis vector has a 1 in slot `f` and `-rref[p][f]` in each pivot
    /// column; vectors are ordered by ascending free column.
    pub fn kernel(&self) -> Vec<Vector> {
        if self.rows == 0 {
            return (0..self.cols).map(|i| Vector::basis(self.cols, i)).collect();
        }
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = Vector::zero(self.cols);
            v.0[free] = Rat::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v.0[pcol] = -r.get(prow, free);
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `self * x = b`, or None when inconsistent.
    /// Free variables are set to zero, so the answer is canonical.
    pub fn solve(&self, b: &Vector) -> Result<Option<Vector>> {
        if b.dim() != self.rows {
            return Err(FalgError::DimensionMismatch {
                arg: "rhs",
                expected: self.rows,
                got: b.dim(),
            });
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b.0[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zero(self.cols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            x.0[pcol] = red.get(prow, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &Vector) -> bool {
    if v.is_zero() {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    Matrix::from_columns(basis)
        .solve(v)
        .map(|s| s.is_some())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_coordinate_projection() {
        // 1x2 matrix [1, 0] -> basis {(0,1)}
        let m = Matrix::from_int_rows(&[&[1, 0]]);
        assert_eq!(m.kernel(), vec![Vector::from_ints(&[0, 1])]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = Matrix::identity(3);
        assert!(m.kernel().is_empty());
    }

    #[test]
    fn kernel_of_empty_matrix_is_full_space() {
        let m = Matrix::zero(0, 3);
        assert_eq!(m.kernel().len(), 3);
        for (i, v) in m.kernel().iter().enumerate() {
            assert_eq!(*v, Vector::basis(3, i));
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        for v in &ker {
            assert!(m.apply(v).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&Vector::from_ints(&[3, 1])).unwrap().unwrap();
        assert_eq!(x, Vector::from_ints(&[2, 1]));

        let sing = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&Vector::from_ints(&[0, 1])).unwrap().is_none());
    }

    #[test]
    fn span_membership() {
        let b = vec![Vector::from_ints(&[1, 0, 1]), Vector::from_ints(&[0, 1, 0])];
        assert!(in_span(&b, &Vector::from_ints(&[2, 3, 2])));
        assert!(!in_span(&b, &Vector::from_ints(&[1, 0, 0])));
        assert!(in_span(&[], &Vector::zero(3)));
    }
}
