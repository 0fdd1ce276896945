//! Dense structure-constant tensors.
//!
//! `c[i][j][k]` is the coefficient of output basis element `k` in
//! (basis_a `i`) applied to (basis_b `j`). Entries are stored flat in
//! row-major order and serialized as nested arrays of `"p/q"` strings.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{FalgError, Result};
use crate::linalg::Vector;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearTensor {
    dim_a: usize,
    dim_b: usize,
    dim_out: usize,
    entries: Vec<Rat>,
}

impl BilinearTensor {
    pub fn zero(dim_a: usize, dim_b: usize, dim_out: usize) -> Self {
        BilinearTensor {
            dim_a,
            dim_b,
            dim_out,
            entries: vec![Rat::zero(); dim_a * dim_b * dim_out],
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim_b + j) * self.dim_out + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.entries[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Rat) {
        let idx = self.idx(i, j, k);
        self.entries[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    /// Output vector of a basis pair; the hot path for basis-level sweeps.
    pub fn basis_row(&self, i: usize, j: usize) -> &[Rat] {
        let start = self.idx(i, j, 0);
        &self.entries[start..start + self.dim_out]
    }

    pub fn apply_basis(&self, i: usize, j: usize) -> Vector {
        Vector(self.basis_row(i, j).to_vec())
    }

    /// The bilinear contraction sum over i, j of x_i y_j c[i][j][.].
    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.dim() != self.dim_a {
            return Err(FalgError::DimensionMismatch {
                arg: "x",
                expected: self.dim_a,
                got: x.dim(),
            });
        }
        if y.dim() != self.dim_b {
            return Err(FalgError::DimensionMismatch {
                arg: "y",
                expected: self.dim_b,
                got: y.dim(),
            });
        }
        let mut out = Vector::zero(self.dim_out);
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (k, c) in self.basis_row(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.0[k] += &coeff * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Contraction with a basis vector in the first slot.
    pub fn apply_basis_left(&self, i: usize, y: &Vector) -> Result<Vector> {
        if y.dim() != self.dim_b {
            return Err(FalgError::DimensionMismatch {
                arg: "y",
                expected: self.dim_b,
                got: y.dim(),
            });
        }
        let mut out = Vector::zero(self.dim_out);
        for (j, yj) in y.0.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (k, c) in self.basis_row(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out.0[k] += yj * c;
                }
            }
        }
        Ok(out)
    }

    fn to_nested(&self) -> Vec<Vec<Vec<Rat>>> {
        (0..self.dim_a)
            .map(|i| {
                (0..self.dim_b)
                    .map(|j| self.basis_row(i, j).to_vec())
                    .collect()
            })
            .collect()
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Rat>>>) -> Result<Self> {
        let dim_a = nested.len();
        let dim_b = nested.first().map_or(0, Vec::len);
        let dim_out = nested
            .first()
            .and_then(|r| r.first())
            .map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(dim_a * dim_b * dim_out);
        for row in &nested {
            if row.len() != dim_b {
                return Err(FalgError::Malformed {
                    field: "tensor",
                    reason: "ragged second index".into(),
                });
            }
            for cell in row {
                if cell.len() != dim_out {
                    return Err(FalgError::Malformed {
                        field: "tensor",
                        reason: "ragged third index".into(),
                    });
                }
                entries.extend(cell.iter().cloned());
            }
        }
        Ok(BilinearTensor {
            dim_a,
            dim_b,
            dim_out,
            entries,
        })
    }
}

impl Serialize for BilinearTensor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_nested().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BilinearTensor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let nested = Vec::<Vec<Vec<Rat>>>::deserialize(d)?;
        BilinearTensor::from_nested(nested).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_tensor_maps_to_zero() {
        let t = BilinearTensor::zero(2, 3, 2);
        let x = Vector::from_ints(&[5, -7]);
        let y = Vector::from_ints(&[1, 2, 3]);
        assert!(t.apply(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn identity_like_action_is_left_unit() {
        // c[i][0][k] = delta_{i,k}, dim_b = 1: the trivial action fixes x.
        let mut t = BilinearTensor::zero(3, 1, 3);
        for i in 0..3 {
            t.set(i, 0, i, Rat::one());
        }
        let x = Vector::from_ints(&[2, -1, 7]);
        let one = Vector::from_ints(&[1]);
        assert_eq!(t.apply(&x, &one).unwrap(), x);
    }

    #[test]
    fn dimension_mismatch_names_argument() {
        let t = BilinearTensor::zero(2, 2, 2);
        let bad = t.apply(&Vector::zero(3), &Vector::zero(2));
        match bad {
            Err(FalgError::DimensionMismatch { arg: "x", .. }) => {}
            other => panic!("expected x mismatch, got {other:?}"),
        }
        let bad = t.apply(&Vector::zero(2), &Vector::zero(1));
        match bad {
            Err(FalgError::DimensionMismatch { arg: "y", .. }) => {}
            other => panic!("expected y mismatch, got {other:?}"),
        }
    }

    #[test]
    fn nested_roundtrip() {
        let mut t = BilinearTensor::zero(2, 2, 2);
        t.set(0, 1, 1, Rat::frac(3, 4));
        let json = serde_json::to_string(&t).unwrap();
        let back: BilinearTensor = serde_json::from_str(&json).unwrap();
        assert_eq!(t, back);
    }
}
