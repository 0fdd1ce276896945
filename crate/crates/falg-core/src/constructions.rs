//! Direct sum and tensor product of F-algebras, together with the closed
//! forms for the Leibnizator and the Jacobi defect of a tensor product.
//!
//! Constructed algebras are returned raw and must be re-verified by the
//! caller; the constructions themselves only guarantee shape. The closed
//! forms are kept strictly separate from the brute-force evaluations they
//! are tested against, so each side can serve as the other's oracle.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraData, Provenance};
use crate::error::{FalgError, Result};
use crate::falgebra::{jacobi_sum, leibnizator, require_verified, verify_falgebra};
use crate::linalg::Vector;
use crate::rat::Rat;
use crate::report::VerificationReport;
use crate::tensor::BilinearTensor;

/// Index bookkeeping for a direct sum: left component indices come first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumDecomposition {
    pub left_dim: usize,
    pub right_dim: usize,
}

impl SumDecomposition {
    pub fn left(&self, i: usize) -> usize {
        i
    }

    pub fn right(&self, i: usize) -> usize {
        self.left_dim + i
    }

    pub fn total(&self) -> usize {
        self.left_dim + self.right_dim
    }

    /// Embed a pair of component vectors into the sum space.
    pub fn embed(&self, left: &Vector, right: &Vector) -> Vector {
        let mut out = Vector::zero(self.total());
        out.0[..self.left_dim].clone_from_slice(&left.0);
        out.0[self.left_dim..].clone_from_slice(&right.0);
        out
    }
}

/// Row-major index bookkeeping for a tensor product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDecomposition {
    pub left_dim: usize,
    pub right_dim: usize,
}

impl TensorDecomposition {
    pub fn pair_index(&self, i1: usize, i2: usize) -> usize {
        i1 * self.right_dim + i2
    }

    pub fn total(&self) -> usize {
        self.left_dim * self.right_dim
    }

    /// Outer product of component vectors as a vector in the tensor space.
    pub fn outer(&self, left: &Vector, right: &Vector) -> Vector {
        let mut out = Vector::zero(self.total());
        for (i1, a) in left.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (i2, b) in right.0.iter().enumerate() {
                if !b.is_zero() {
                    out.0[self.pair_index(i1, i2)] = a * b;
                }
            }
        }
        out
    }
}

fn even_verified(a: &AlgebraData, side: &'static str) -> Result<()> {
    if !a.all_even() {
        return Err(FalgError::Malformed {
            field: "parity",
            reason: format!("{side} factor must be purely even"),
        });
    }
    require_verified(a, side)
}

/// Componentwise product and bracket on the direct sum, with unit e1 (+) e2.
pub fn direct_sum(a: &AlgebraData, b: &AlgebraData) -> Result<(AlgebraData, SumDecomposition)> {
    even_verified(a, "left")?;
    even_verified(b, "right")?;
    let dec = SumDecomposition {
        left_dim: a.dim(),
        right_dim: b.dim(),
    };
    let n = dec.total();
    let mut product = BilinearTensor::zero(n, n, n);
    let mut bracket = BilinearTensor::zero(n, n, n);
    for (offset, alg) in [(0usize, a), (a.dim(), b)] {
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                for k in 0..alg.dim() {
                    let p = alg.product.get(i, j, k);
                    if !p.is_zero() {
                        product.set(offset + i, offset + j, offset + k, p.clone());
                    }
                    let br = alg.bracket.get(i, j, k);
                    if !br.is_zero() {
                        bracket.set(offset + i, offset + j, offset + k, br.clone());
                    }
                }
            }
        }
    }
    let basis = a
        .basis
        .iter()
        .map(|l| format!("{l}_1"))
        .chain(b.basis.iter().map(|l| format!("{l}_2")))
        .collect();
    let unit = dec.embed(&a.unit, &b.unit);
    let alg = AlgebraData::new(basis, unit, product, bracket)?;
    Ok((alg, dec))
}

/// Direct sum plus the checker verdict. The report carries the discrepancy
/// flag whenever the constructed bracket turns out antisymmetric, since the
/// componentwise formulas then disagree with the symmetric-bracket remark
/// attached to this construction.
pub fn direct_sum_checked(
    a: &AlgebraData,
    b: &AlgebraData,
) -> Result<(AlgebraData, SumDecomposition, VerificationReport)> {
    let (alg, dec) = direct_sum(a, b)?;
    let mut report = verify_falgebra(&alg)?;
    if report
        .check("bracket_antisymmetry")
        .is_some_and(|c| c.passed())
    {
        report = report.with_note(
            "direct-sum bracket is antisymmetric under the componentwise formulas, \
             contradicting the symmetric-bracket remark attached to this construction"
                .to_string(),
        );
    }
    Ok((alg, dec, report))
}

/// Product and bracket on the tensor product, on the row-major product basis:
/// (x1 (x) x2) o (y1 (x) y2) = (x1 o y1) (x) (x2 o y2) and
/// [x1 (x) x2, y1 (x) y2] = [x1,y1] (x) (x2 o y2) + (x1 o y1) (x) [x2,y2].
pub fn tensor_product(
    a: &AlgebraData,
    b: &AlgebraData,
) -> Result<(AlgebraData, TensorDecomposition)> {
    even_verified(a, "left")?;
    even_verified(b, "right")?;
    let dec = TensorDecomposition {
        left_dim: a.dim(),
        right_dim: b.dim(),
    };
    let n = dec.total();
    let mut product = BilinearTensor::zero(n, n, n);
    let mut bracket = BilinearTensor::zero(n, n, n);
    for i1 in 0..a.dim() {
        for i2 in 0..b.dim() {
            let i = dec.pair_index(i1, i2);
            for j1 in 0..a.dim() {
                for j2 in 0..b.dim() {
                    let j = dec.pair_index(j1, j2);
                    for k1 in 0..a.dim() {
                        let p1 = a.product.get(i1, j1, k1);
                        let b1 = a.bracket.get(i1, j1, k1);
                        if p1.is_zero() && b1.is_zero() {
                            continue;
                        }
                        for k2 in 0..b.dim() {
                            let p2 = b.product.get(i2, j2, k2);
                            let b2 = b.bracket.get(i2, j2, k2);
                            let k = dec.pair_index(k1, k2);
                            if !p1.is_zero() && !p2.is_zero() {
                                product.set(i, j, k, p1 * p2);
                            }
                            let mut br = Rat::zero();
                            if !b1.is_zero() && !p2.is_zero() {
                                br += b1 * p2;
                            }
                            if !p1.is_zero() && !b2.is_zero() {
                                br += p1 * b2;
                            }
                            if !br.is_zero() {
                                bracket.set(i, j, k, br);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut basis = Vec::with_capacity(n);
    for l1 in &a.basis {
        for l2 in &b.basis {
            basis.push(format!("{l1}*{l2}"));
        }
    }
    let unit = dec.outer(&a.unit, &b.unit);
    let alg = AlgebraData::new(basis, unit, product, bracket)?;
    Ok((alg, dec))
}

pub fn with_provenance(mut alg: AlgebraData, op: &str, left: &str, right: &str) -> AlgebraData {
    alg.provenance = Some(Provenance {
        op: op.to_string(),
        left: left.to_string(),
        right: right.to_string(),
    });
    alg
}

/// Closed form for the Leibnizator of a tensor product on pure tensors:
/// L1(x1,y1,z1) (x) (x2 o y2 o z2) + (x1 o y1 o z1) (x) L2(x2,y2,z2).
#[allow(clippy::too_many_arguments)]
pub fn tensor_leibnizator_rhs(
    a: &AlgebraData,
    b: &AlgebraData,
    x1: &Vector,
    y1: &Vector,
    z1: &Vector,
    x2: &Vector,
    y2: &Vector,
    z2: &Vector,
) -> Result<Vector> {
    let dec = TensorDecomposition {
        left_dim: a.dim(),
        right_dim: b.dim(),
    };
    let l1 = leibnizator(a, x1, y1, z1)?;
    let xyz2 = b.product_of(&b.product_of(x2, y2)?, z2)?;
    let xyz1 = a.product_of(&a.product_of(x1, y1)?, z1)?;
    let l2 = leibnizator(b, x2, y2, z2)?;
    Ok(dec.outer(&l1, &xyz2).add(&dec.outer(&xyz1, &l2)))
}

/// Brute-force Jacobi sum in the constructed tensor algebra. This is the
/// oracle side of the Jacobi-defect identity; it never looks at the closed
/// form.
pub fn jacobi_defect(
    a: &AlgebraData,
    b: &AlgebraData,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector> {
    let (tensor_alg, _) = tensor_product(a, b)?;
    jacobi_sum(&tensor_alg, x, y, z)
}

/// The six-term closed form for the Jacobi defect of a tensor product,
/// stated on pure tensors only.
#[allow(clippy::too_many_arguments)]
pub fn tensor_jacobi_rhs(
    a: &AlgebraData,
    b: &AlgebraData,
    x1: &Vector,
    y1: &Vector,
    z1: &Vector,
    x2: &Vector,
    y2: &Vector,
    z2: &Vector,
) -> Result<Vector> {
    let dec = TensorDecomposition {
        left_dim: a.dim(),
        right_dim: b.dim(),
    };
    let term = |u1: &Vector,
                v1: &Vector,
                w1: &Vector,
                u2: &Vector,
                v2: &Vector,
                w2: &Vector|
     -> Result<Vector> {
        // L1(u1,v1,w1) (x) (u2 o [v2, w2])
        let l1 = leibnizator(a, u1, v1, w1)?;
        let right = b.product_of(u2, &b.bracket_of(v2, w2)?)?;
        Ok(dec.outer(&l1, &right))
    };
    let coterm = |u1: &Vector,
                  v1: &Vector,
                  w1: &Vector,
                  u2: &Vector,
                  v2: &Vector,
                  w2: &Vector|
     -> Result<Vector> {
        // (u1 o [v1, w1]) (x) L2(u2,v2,w2)
        let left = a.product_of(u1, &a.bracket_of(v1, w1)?)?;
        let l2 = leibnizator(b, u2, v2, w2)?;
        Ok(dec.outer(&left, &l2))
    };
    let mut acc = term(x1, y1, z1, x2, y2, z2)?;
    acc = acc.add(&term(y1, z1, x1, y2, z2, x2)?);
    acc = acc.add(&term(z1, x1, y1, z2, x2, y2)?);
    acc = acc.add(&coterm(x1, y1, z1, x2, y2, z2)?);
    acc = acc.add(&coterm(y1, z1, x1, y2, z2, x2)?);
    acc = acc.add(&coterm(z1, x1, y1, z2, x2, y2)?);
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a2, a3, a3h};
    use crate::falgebra::is_poisson;

    #[test]
    fn direct_sum_shape_and_unit() {
        let (sum, dec) = direct_sum(&a2(), &a2()).unwrap();
        assert_eq!(sum.dim(), 4);
        assert_eq!(sum.unit, Vector::from_ints(&[1, 0, 1, 0]));
        assert_eq!(dec.right(0), 2);
    }

    #[test]
    fn direct_sum_componentwise_bracket() {
        // In A3h (+) A2, [x (+) 0, y (+) 0] = e1 (+) 0.
        let (sum, dec) = direct_sum(&a3h(), &a2()).unwrap();
        let x = dec.embed(&Vector::basis(3, 1), &Vector::zero(2));
        let y = dec.embed(&Vector::basis(3, 2), &Vector::zero(2));
        let expected = dec.embed(&Vector::basis(3, 0), &Vector::zero(2));
        assert_eq!(sum.bracket_of(&x, &y).unwrap(), expected);
    }

    #[test]
    fn direct_sum_discrepancy_flag() {
        let (_, _, report) = direct_sum_checked(&a3h(), &a3()).unwrap();
        assert!(report.check("bracket_antisymmetry").unwrap().passed());
        assert_eq!(report.notes.len(), 1);
    }

    #[test]
    fn tensor_of_zero_bracket_factors_has_zero_bracket() {
        let (t, _) = tensor_product(&a2(), &a2()).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.bracket.is_zero());
    }

    #[test]
    fn tensor_bracket_of_pure_tensors() {
        // [x (x) e, y (x) e] = [x,y] (x) (e o e) + (x o y) (x) [e,e] = e (x) e
        let (t, dec) = tensor_product(&a3h(), &a2()).unwrap();
        let xe = dec.outer(&Vector::basis(3, 1), &Vector::basis(2, 0));
        let ye = dec.outer(&Vector::basis(3, 2), &Vector::basis(2, 0));
        let ee = dec.outer(&Vector::basis(3, 0), &Vector::basis(2, 0));
        assert_eq!(t.bracket_of(&xe, &ye).unwrap(), ee);
    }

    #[test]
    fn unverified_inputs_rejected() {
        let mut broken = a3h();
        // Destroy antisymmetry.
        broken.bracket.set(2, 1, 0, Rat::one());
        assert!(matches!(
            tensor_product(&broken, &a2()),
            Err(FalgError::UnverifiedInput { side: "left", .. })
        ));
        assert!(matches!(
            direct_sum(&a2(), &broken),
            Err(FalgError::UnverifiedInput { side: "right", .. })
        ));
    }

    /// Executable identity: the Leibnizator of the constructed tensor
    /// algebra equals the closed form on every pure-tensor basis triple.
    #[test]
    fn tensor_leibnizator_identity_all_basis_triples() {
        for (a, b) in [(a3h(), a3h()), (a3h(), a3()), (a2(), a3h())] {
            let (t, dec) = tensor_product(&a, &b).unwrap();
            for x1 in 0..a.dim() {
                for x2 in 0..b.dim() {
                    for y1 in 0..a.dim() {
                        for y2 in 0..b.dim() {
                            for z1 in 0..a.dim() {
                                for z2 in 0..b.dim() {
                                    let (bx1, bx2) =
                                        (Vector::basis(a.dim(), x1), Vector::basis(b.dim(), x2));
                                    let (by1, by2) =
                                        (Vector::basis(a.dim(), y1), Vector::basis(b.dim(), y2));
                                    let (bz1, bz2) =
                                        (Vector::basis(a.dim(), z1), Vector::basis(b.dim(), z2));
                                    let lhs = leibnizator(
                                        &t,
                                        &dec.outer(&bx1, &bx2),
                                        &dec.outer(&by1, &by2),
                                        &dec.outer(&bz1, &bz2),
                                    )
                                    .unwrap();
                                    let rhs = tensor_leibnizator_rhs(
                                        &a, &b, &bx1, &by1, &bz1, &bx2, &by2, &bz2,
                                    )
                                    .unwrap();
                                    assert_eq!(lhs, rhs, "triple {:?}", (x1, x2, y1, y2, z1, z2));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_leibnizator_rhs_poisson_factors_vanish() {
        let (a, b) = (a2(), a3());
        for x1 in 0..a.dim() {
            for y1 in 0..a.dim() {
                for z1 in 0..a.dim() {
                    let rhs = tensor_leibnizator_rhs(
                        &a,
                        &b,
                        &Vector::basis(2, x1),
                        &Vector::basis(2, y1),
                        &Vector::basis(2, z1),
                        &Vector::basis(3, 0),
                        &Vector::basis(3, 1),
                        &Vector::basis(3, 2),
                    )
                    .unwrap();
                    assert!(rhs.is_zero());
                }
            }
        }
    }

    #[test]
    fn tensor_leibnizator_rhs_specific_value() {
        // a = A3h, b = A2: L1(x,y,y) (x) (e o e o e) = -2 (y (x) e)
        let (a, b) = (a3h(), a2());
        let dec = TensorDecomposition {
            left_dim: 3,
            right_dim: 2,
        };
        let e2 = Vector::basis(2, 0);
        let rhs = tensor_leibnizator_rhs(
            &a,
            &b,
            &Vector::basis(3, 1),
            &Vector::basis(3, 2),
            &Vector::basis(3, 2),
            &e2,
            &e2,
            &e2,
        )
        .unwrap();
        let expected = dec.outer(&Vector::basis(3, 2), &e2).scale(&Rat::int(-2));
        assert_eq!(rhs, expected);
    }

    #[test]
    fn jacobi_defect_vanishes_for_explained_factors() {
        // Both Poisson, and second factor abelian.
        for (a, b) in [(a2(), a3()), (a3h(), a2())] {
            let dec = TensorDecomposition {
                left_dim: a.dim(),
                right_dim: b.dim(),
            };
            for i in 0..dec.total() {
                for j in 0..dec.total() {
                    for k in 0..dec.total() {
                        let d = jacobi_defect(
                            &a,
                            &b,
                            &Vector::basis(dec.total(), i),
                            &Vector::basis(dec.total(), j),
                            &Vector::basis(dec.total(), k),
                        )
                        .unwrap();
                        assert!(d.is_zero());
                    }
                }
            }
        }
    }

    /// Executable identity: brute-force Jacobi defect equals the six-term
    /// closed form on every pure-tensor basis triple of A3h (x) A3h.
    #[test]
    fn jacobi_defect_matches_closed_form() {
        let a = a3h();
        let b = a3h();
        let dec = TensorDecomposition {
            left_dim: 3,
            right_dim: 3,
        };
        let mut saw_nonzero = false;
        for x1 in 0..3 {
            for x2 in 0..3 {
                for y1 in 0..3 {
                    for y2 in 0..3 {
                        for z1 in 0..3 {
                            for z2 in 0..3 {
                                let bx = (Vector::basis(3, x1), Vector::basis(3, x2));
                                let by = (Vector::basis(3, y1), Vector::basis(3, y2));
                                let bz = (Vector::basis(3, z1), Vector::basis(3, z2));
                                let lhs = jacobi_defect(
                                    &a,
                                    &b,
                                    &dec.outer(&bx.0, &bx.1),
                                    &dec.outer(&by.0, &by.1),
                                    &dec.outer(&bz.0, &bz.1),
                                )
                                .unwrap();
                                let rhs = tensor_jacobi_rhs(
                                    &a, &b, &bx.0, &by.0, &bz.0, &bx.1, &by.1, &bz.1,
                                )
                                .unwrap();
                                assert_eq!(lhs, rhs);
                                saw_nonzero |= !lhs.is_zero();
                            }
                        }
                    }
                }
            }
        }
        // A3h is neither Poisson nor abelian, so the defect must show up.
        assert!(saw_nonzero);
    }

    #[test]
    fn tensor_of_poisson_factors_is_poisson_falgebra() {
        let (t, _) = tensor_product(&a2(), &a3()).unwrap();
        let report = verify_falgebra(&t).unwrap();
        assert!(report.overall, "{}", report.summary());
        assert!(is_poisson(&t).unwrap().0);
    }

    #[test]
    fn tensor_with_abelian_factor_is_falgebra() {
        let (t, _) = tensor_product(&a3h(), &a2()).unwrap();
        let report = verify_falgebra(&t).unwrap();
        assert!(report.overall, "{}", report.summary());
        // Swapped order is covered by the bracket-linearity of the formulas.
        let (t2, _) = tensor_product(&a2(), &a3h()).unwrap();
        assert!(verify_falgebra(&t2).unwrap().overall);
    }

    #[test]
    fn a3h_squared_fails_jacobi_only() {
        let (t, _) = tensor_product(&a3h(), &a3h()).unwrap();
        let report = verify_falgebra(&t).unwrap();
        assert!(!report.overall);
        for check in &report.checks {
            if check.axiom_id == "jacobi" {
                assert!(!check.passed());
            } else {
                assert!(check.passed(), "{} unexpectedly failed", check.axiom_id);
            }
        }
    }

    #[test]
    fn constructed_units_are_two_sided_identities() {
        let (t, _) = tensor_product(&a3h(), &a3()).unwrap();
        let (s, _) = direct_sum(&a3h(), &a3()).unwrap();
        for alg in [&t, &s] {
            for i in 0..alg.dim() {
                let bi = Vector::basis(alg.dim(), i);
                assert_eq!(alg.product_of(&alg.unit, &bi).unwrap(), bi);
                assert_eq!(alg.product_of(&bi, &alg.unit).unwrap(), bi);
            }
        }
    }
}
