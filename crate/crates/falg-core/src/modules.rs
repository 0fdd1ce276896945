//! Modules over an F-algebra: the two Leibnizator-like obstructions, the
//! axiom checker, and the adjoint module.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::error::{FalgError, Result};
use crate::falgebra::{require_verified, BasisTables};
use crate::linalg::Vector;
use crate::rat::Rat;
use crate::report::{AxiomCheck, VerificationReport};
use crate::tensor::BilinearTensor;

/// Action data for a module over an F-algebra: a Lie action and an
/// associative action of the algebra on a vector space of dimension `vdim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleData {
    pub algebra: AlgebraData,
    pub vdim: usize,
    pub act_l: BilinearTensor,
    pub act_a: BilinearTensor,
}

impl ModuleData {
    pub fn validate(&self) -> Result<()> {
        self.algebra.validate()?;
        for (name, t) in [("act_l", &self.act_l), ("act_a", &self.act_a)] {
            if t.dim_a() != self.algebra.dim() || t.dim_b() != self.vdim || t.dim_out() != self.vdim
            {
                return Err(FalgError::Malformed {
                    field: "tensor",
                    reason: format!(
                        "{name} is {}x{}x{}, expected {}x{}x{}",
                        t.dim_a(),
                        t.dim_b(),
                        t.dim_out(),
                        self.algebra.dim(),
                        self.vdim,
                        self.vdim
                    ),
                });
            }
        }
        Ok(())
    }
}

/// X acting on itself: Lie action by bracket, associative action by product.
pub fn adjoint_module(a: &AlgebraData) -> Result<ModuleData> {
    require_verified(a, "algebra")?;
    Ok(ModuleData {
        algebra: a.clone(),
        vdim: a.dim(),
        act_l: a.bracket.clone(),
        act_a: a.product.clone(),
    })
}

/// The first module obstruction:
/// X l> (Y a> v) - [X,Y] a> v - Y a> (X l> v).
pub fn module_l_tilde(m: &ModuleData, x: &Vector, y: &Vector, v: &Vector) -> Result<Vector> {
    let t1 = m.act_l.apply(x, &m.act_a.apply(y, v)?)?;
    let t2 = m.act_a.apply(&m.algebra.bracket_of(x, y)?, v)?;
    let t3 = m.act_a.apply(y, &m.act_l.apply(x, v)?)?;
    Ok(t1.sub(&t2).sub(&t3))
}

/// The second module obstruction:
/// (X o Y) l> v - X a> (Y l> v) - Y a> (X l> v).
pub fn module_l_bar(m: &ModuleData, v: &Vector, x: &Vector, y: &Vector) -> Result<Vector> {
    let t1 = m.act_l.apply(&m.algebra.product_of(x, y)?, v)?;
    let t2 = m.act_a.apply(x, &m.act_l.apply(y, v)?)?;
    let t3 = m.act_a.apply(y, &m.act_l.apply(x, v)?)?;
    Ok(t1.sub(&t2).sub(&t3))
}

/// The five module axiom families, graded by the supplied parities (all-zero
/// parities give the plain case). `tables` must be built over the algebra.
///
/// The second obstruction law is checked in the form
///   lbar(Z a> v, X, Y) = -L(Z,X,Y) a> v + Z a> lbar(v, X, Y),
/// the sign of the Leibnizator term being the one under which the adjoint
/// module of every verified algebra is a module.
pub(crate) fn module_checks(
    tables: &BasisTables<'_>,
    vdim: usize,
    act_l: &BilinearTensor,
    act_a: &BilinearTensor,
    f_parity: &[u8],
    prefix: &str,
) -> Vec<AxiomCheck> {
    let alg = tables.alg;
    let fdim = alg.dim();
    let id = |name: &str| format!("{prefix}{name}");
    let sign = |i: usize, j: usize| f_parity[i] & f_parity[j] == 1;
    let signed = |v: Vector, neg: bool| if neg { v.neg() } else { v };

    let act = |t: &BilinearTensor, i: usize, v: &Vector| -> Vector {
        t.apply_basis_left(i, v).expect("validated dims")
    };
    let act_vec = |t: &BilinearTensor, x: &Vector, v: &Vector| -> Vector {
        t.apply(x, v).expect("validated dims")
    };

    let mut checks = Vec::new();

    // Lie module law: [X,Y] l> v = X l> (Y l> v) - (sign) Y l> (X l> v)
    checks.push(scan_fxv(fdim, vdim, &id("lie"), |i, j, k| {
        let vk = Vector::basis(vdim, k);
        let lhs = act_vec(act_l, tables.brak_basis(i, j), &vk);
        let t1 = act(act_l, i, &act(act_l, j, &vk));
        let t2 = signed(act(act_l, j, &act(act_l, i, &vk)), sign(i, j));
        lhs.sub(&t1).add(&t2)
    }));

    // Associative module law with the exact one-half factor.
    let half = Rat::frac(1, 2);
    checks.push(scan_fxv(fdim, vdim, &id("assoc"), |i, j, k| {
        let vk = Vector::basis(vdim, k);
        let lhs = act_vec(act_a, tables.prod_basis(i, j), &vk);
        let t1 = act(act_a, i, &act(act_a, j, &vk));
        let t2 = signed(act(act_a, j, &act(act_a, i, &vk)), sign(i, j));
        lhs.sub(&t1.add(&t2).scale(&half))
    }));

    // Unit action: e a> v = v.
    checks.push({
        let mut failed = None;
        for k in 0..vdim {
            let vk = Vector::basis(vdim, k);
            let r = act_vec(act_a, &alg.unit, &vk).sub(&vk);
            if !r.is_zero() {
                failed = Some(AxiomCheck::fail(&id("unit"), vec![k], r));
                break;
            }
        }
        failed.unwrap_or_else(|| AxiomCheck::pass(&id("unit")))
    });

    // First obstruction on basis tuples, with the graded sign.
    let ltilde = |i: usize, j: usize, vk: &Vector| -> Vector {
        let t1 = act(act_l, i, &act(act_a, j, vk));
        let t2 = act_vec(act_a, tables.brak_basis(i, j), vk);
        let t3 = signed(act(act_a, j, &act(act_l, i, vk)), sign(i, j));
        t1.sub(&t2).sub(&t3)
    };
    // Linear extension over a general first argument.
    let ltilde_left = |u: &Vector, j: usize, vk: &Vector| -> Vector {
        let mut out = Vector::zero(vdim);
        for (c, uc) in u.0.iter().enumerate() {
            if !uc.is_zero() {
                out.add_scaled(uc, &ltilde(c, j, vk));
            }
        }
        out
    };

    // ltilde(X o Y, Z, v) = X a> ltilde(Y,Z,v) + (sign) Y a> ltilde(X,Z,v)
    checks.push(scan_ffxv(fdim, vdim, &id("ltilde_law"), |i, j, k, l| {
        let vl = Vector::basis(vdim, l);
        let lhs = ltilde_left(tables.prod_basis(i, j), k, &vl);
        let t1 = act(act_a, i, &ltilde(j, k, &vl));
        let t2 = signed(act(act_a, j, &ltilde(i, k, &vl)), sign(i, j));
        lhs.sub(&t1).sub(&t2)
    }));

    // Second obstruction, graded.
    let lbar = |vk: &Vector, i: usize, j: usize| -> Vector {
        let t1 = act_vec(act_l, tables.prod_basis(i, j), vk);
        let t2 = act(act_a, i, &act(act_l, j, vk));
        let t3 = signed(act(act_a, j, &act(act_l, i, vk)), sign(i, j));
        t1.sub(&t2).sub(&t3)
    };

    // lbar(Z a> v, X, Y) = -L(Z,X,Y) a> v + Z a> lbar(v, X, Y)
    checks.push(scan_ffxv(fdim, vdim, &id("lbar_law"), |z, i, j, l| {
        let vl = Vector::basis(vdim, l);
        let lhs = lbar(&act(act_a, z, &vl), i, j);
        let t1 = act_vec(act_a, tables.leib_basis(z, i, j), &vl).neg();
        let t2 = act(act_a, z, &lbar(&vl, i, j));
        lhs.sub(&t1).sub(&t2)
    }));

    checks
}

fn scan_fxv(fdim: usize, vdim: usize, id: &str, f: impl Fn(usize, usize, usize) -> Vector) -> AxiomCheck {
    for i in 0..fdim {
        for j in 0..fdim {
            for k in 0..vdim {
                let r = f(i, j, k);
                if !r.is_zero() {
                    return AxiomCheck::fail(id, vec![i, j, k], r);
                }
            }
        }
    }
    AxiomCheck::pass(id)
}

fn scan_ffxv(
    fdim: usize,
    vdim: usize,
    id: &str,
    f: impl Fn(usize, usize, usize, usize) -> Vector,
) -> AxiomCheck {
    for i in 0..fdim {
        for j in 0..fdim {
            for k in 0..fdim {
                for l in 0..vdim {
                    let r = f(i, j, k, l);
                    if !r.is_zero() {
                        return AxiomCheck::fail(id, vec![i, j, k, l], r);
                    }
                }
            }
        }
    }
    AxiomCheck::pass(id)
}

/// Check the five module axiom families on all basis tuples.
pub fn verify_module(m: &ModuleData) -> Result<VerificationReport> {
    m.validate()?;
    require_verified(&m.algebra, "module algebra")?;
    let parity = vec![0u8; m.algebra.dim()];
    let tables = BasisTables::new(&m.algebra, parity.clone());
    let checks = module_checks(&tables, m.vdim, &m.act_l, &m.act_a, &parity, "module_");
    Ok(VerificationReport::from_checks(checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a2, a3, a3h};
    use crate::falgebra::leibnizator;

    #[test]
    fn adjoint_module_of_a2() {
        let m = adjoint_module(&a2()).unwrap();
        assert!(m.act_l.is_zero());
        assert_eq!(m.act_a, a2().product);
        assert!(verify_module(&m).unwrap().overall);
    }

    #[test]
    fn adjoint_modules_pass_for_catalog() {
        for a in [a2(), a3(), a3h()] {
            let m = adjoint_module(&a).unwrap();
            let report = verify_module(&m).unwrap();
            assert!(report.overall, "{}", report.summary());
        }
    }

    #[test]
    fn adjoint_ltilde_reduces_to_leibnizator() {
        for a in [a2(), a3(), a3h()] {
            let m = adjoint_module(&a).unwrap();
            let n = a.dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (x, y, v) =
                            (Vector::basis(n, i), Vector::basis(n, j), Vector::basis(n, k));
                        assert_eq!(
                            module_l_tilde(&m, &x, &y, &v).unwrap(),
                            leibnizator(&a, &x, &y, &v).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn adjoint_ltilde_value_on_a3h() {
        let m = adjoint_module(&a3h()).unwrap();
        let x = Vector::basis(3, 1);
        let y = Vector::basis(3, 2);
        assert_eq!(
            module_l_tilde(&m, &x, &y, &y).unwrap(),
            Vector::from_ints(&[0, 0, -2])
        );
    }

    #[test]
    fn adjoint_lbar_value_on_a3h() {
        // lbar(y, x, y) = (x o y) l> y - x a> [y, y] - y a> [x, y]
        //              = 0 - 0 - y o e = -y
        let m = adjoint_module(&a3h()).unwrap();
        let x = Vector::basis(3, 1);
        let y = Vector::basis(3, 2);
        assert_eq!(
            module_l_bar(&m, &y, &x, &y).unwrap(),
            Vector::from_ints(&[0, 0, -1])
        );
    }

    #[test]
    fn unit_acts_as_identity() {
        let m = adjoint_module(&a3h()).unwrap();
        for k in 0..3 {
            let v = Vector::basis(3, k);
            assert_eq!(m.act_a.apply(&m.algebra.unit, &v).unwrap(), v);
        }
    }

    #[test]
    fn zero_lie_action_kills_lbar() {
        let mut m = adjoint_module(&a3h()).unwrap();
        m.act_l = BilinearTensor::zero(3, 3, 3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (x, y, v) =
                        (Vector::basis(3, i), Vector::basis(3, j), Vector::basis(3, k));
                    assert!(module_l_bar(&m, &v, &x, &y).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn perturbed_adjoint_module_is_flagged() {
        let mut m = adjoint_module(&a3h()).unwrap();
        // Make x act on itself associatively with a spurious e component.
        let cur = m.act_a.get(1, 1, 0).clone();
        m.act_a.set(1, 1, 0, cur + Rat::one());
        let report = verify_module(&m).unwrap();
        assert!(!report.overall);
        // The damaged entry is x a> x, so the one-half law breaks first.
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.axiom_id.as_str())
            .collect();
        assert!(failing.contains(&"module_assoc"), "failing: {failing:?}");
    }

    #[test]
    fn constant_identity_action_with_zero_lie_action() {
        // act_a(b_i, v) = v for every basis element, act_l = 0, over A3:
        // ltilde(x, y, v) = -[x, y] a> v, which is -v at the bracket pair.
        let a = a3();
        let mut act_a = BilinearTensor::zero(3, 3, 3);
        for i in 0..3 {
            for j in 0..3 {
                act_a.set(i, j, j, Rat::one());
            }
        }
        let m = ModuleData {
            algebra: a,
            vdim: 3,
            act_l: BilinearTensor::zero(3, 3, 3),
            act_a,
        };
        let x = Vector::basis(3, 1);
        let y = Vector::basis(3, 2);
        let v = Vector::basis(3, 0);
        // [x, y] = x in A3, and x a> v = v under the constant encoding.
        assert_eq!(
            module_l_tilde(&m, &x, &y, &v).unwrap(),
            Vector::from_ints(&[-1, 0, 0])
        );
    }
}
