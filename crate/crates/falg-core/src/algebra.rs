//! The algebra candidate type and its file schema.
//!
//! An `AlgebraData` is raw data: nothing about it is assumed to satisfy any
//! axiom. Verification is always explicit and lives in the checker modules.

use serde::{Deserialize, Serialize};

use crate::error::{FalgError, Result};
use crate::linalg::Vector;
use crate::tensor::BilinearTensor;

/// Coordinate frame metadata recorded by superdomain constructors. The
/// even/odd split of a derivation is defined relative to this frame.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordFrame {
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub truncation: usize,
}

/// Provenance metadata attached to constructed algebras.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub op: String,
    pub left: String,
    pub right: String,
}

/// One (super) F-algebra candidate as structure-constant data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraData {
    pub dimension: usize,
    pub basis: Vec<String>,
    pub unit: Vector,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<Vec<u8>>,
    pub product: BilinearTensor,
    pub bracket: BilinearTensor,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coords: Option<CoordFrame>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<Provenance>,
}

impl AlgebraData {
    pub fn new(
        basis: Vec<String>,
        unit: Vector,
        product: BilinearTensor,
        bracket: BilinearTensor,
    ) -> Result<Self> {
        let data = AlgebraData {
            dimension: basis.len(),
            basis,
            unit,
            parity: None,
            product,
            bracket,
            coords: None,
            provenance: None,
        };
        data.validate()?;
        Ok(data)
    }

    /// Shape and invariant checks on raw data. Degenerate dimension 0 is
    /// rejected; everything else is left to the axiom checkers.
    pub fn validate(&self) -> Result<()> {
        let n = self.dimension;
        if n == 0 {
            return Err(FalgError::ZeroDimension);
        }
        if self.basis.len() != n {
            return Err(FalgError::Malformed {
                field: "basis",
                reason: format!("{} labels for dimension {}", self.basis.len(), n),
            });
        }
        if self.unit.dim() != n {
            return Err(FalgError::DimensionMismatch {
                arg: "unit",
                expected: n,
                got: self.unit.dim(),
            });
        }
        for (name, t) in [("product", &self.product), ("bracket", &self.bracket)] {
            if t.dim_a() != n || t.dim_b() != n || t.dim_out() != n {
                return Err(FalgError::Malformed {
                    field: "tensor",
                    reason: format!(
                        "{name} tensor is {}x{}x{}, expected {n}x{n}x{n}",
                        t.dim_a(),
                        t.dim_b(),
                        t.dim_out()
                    ),
                });
            }
        }
        if let Some(p) = &self.parity {
            if p.len() != n {
                return Err(FalgError::BadParity);
            }
            if p.iter().any(|&b| b > 1) {
                return Err(FalgError::BadParity);
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dimension
    }

    /// Parity of a basis element; absent parity list means all even.
    pub fn parity_of(&self, i: usize) -> u8 {
        self.parity.as_ref().map_or(0, |p| p[i])
    }

    pub fn all_even(&self) -> bool {
        self.parity.as_ref().map_or(true, |p| p.iter().all(|&b| b == 0))
    }

    pub fn product_of(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.product.apply(x, y)
    }

    pub fn bracket_of(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.bracket.apply(x, y)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let data: AlgebraData = serde_json::from_str(s)?;
        data.validate()?;
        Ok(data)
    }
}
