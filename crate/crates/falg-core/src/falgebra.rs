//! The Leibnizator, the axiom checker with witnesses, Poisson detection,
//! the Pois subalgebra, and homomorphism checking.
//!
//! Every identity here is multilinear over the field, so checking it on all
//! basis tuples is complete. All sweeps run in lexicographic basis order and
//! record the first failing tuple, which keeps reports deterministic.

use crate::algebra::AlgebraData;
use crate::error::{FalgError, Result};
use crate::linalg::{in_span, Matrix, Vector};
use crate::rat::Rat;
use crate::report::{AxiomCheck, VerificationReport};
use crate::tensor::BilinearTensor;

/// Sum over c of v_c * t[c][j][.]; contraction with a basis vector on the right.
pub(crate) fn contract_right_basis(t: &BilinearTensor, v: &Vector, j: usize) -> Vector {
    let mut out = Vector::zero(t.dim_out());
    for (c, vc) in v.0.iter().enumerate() {
        if vc.is_zero() {
            continue;
        }
        for (k, e) in t.basis_row(c, j).iter().enumerate() {
            if !e.is_zero() {
                out.0[k] += vc * e;
            }
        }
    }
    out
}

/// Precomputed basis-level tables for one algebra, with graded signs taken
/// from the supplied parity list. All-even parities reduce every sign to +1.
pub(crate) struct BasisTables<'a> {
    pub alg: &'a AlgebraData,
    pub parity: Vec<u8>,
    dim: usize,
    prod: Vec<Vector>,
    brak: Vec<Vector>,
    leib: Vec<Vector>,
}

impl<'a> BasisTables<'a> {
    pub fn new(alg: &'a AlgebraData, parity: Vec<u8>) -> Self {
        let dim = alg.dim();
        let prod: Vec<Vector> = (0..dim * dim)
            .map(|ij| alg.product.apply_basis(ij / dim, ij % dim))
            .collect();
        let brak: Vec<Vector> = (0..dim * dim)
            .map(|ij| alg.bracket.apply_basis(ij / dim, ij % dim))
            .collect();
        let mut tables = BasisTables {
            alg,
            parity,
            dim,
            prod,
            brak,
            leib: Vec::new(),
        };
        let mut leib = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    leib.push(tables.leibnizator_basis_raw(i, j, k));
                }
            }
        }
        tables.leib = leib;
        tables
    }

    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        if self.parity[i] & self.parity[j] == 1 {
            -1
        } else {
            1
        }
    }

    #[inline]
    pub fn prod_basis(&self, i: usize, j: usize) -> &Vector {
        &self.prod[i * self.dim + j]
    }

    #[inline]
    pub fn brak_basis(&self, i: usize, j: usize) -> &Vector {
        &self.brak[i * self.dim + j]
    }

    #[inline]
    pub fn leib_basis(&self, i: usize, j: usize, k: usize) -> &Vector {
        &self.leib[(i * self.dim + j) * self.dim + k]
    }

    fn signed(&self, v: Vector, sign: i8) -> Vector {
        if sign < 0 {
            v.neg()
        } else {
            v
        }
    }

    /// Graded Leibnizator on a basis triple, evaluated from the raw tensors:
    /// [b_i, b_j o b_k] - [b_i, b_j] o b_k - (sign) b_j o [b_i, b_k].
    fn leibnizator_basis_raw(&self, i: usize, j: usize, k: usize) -> Vector {
        let t1 = contract_right_basis_left(&self.alg.bracket, i, self.prod_basis(j, k));
        let t2 = contract_right_basis(&self.alg.product, self.brak_basis(i, j), k);
        let t3 = self
            .alg
            .product
            .apply_basis_left(j, self.brak_basis(i, k))
            .expect("validated dims");
        let t3 = self.signed(t3, self.sign(i, j));
        t1.sub(&t2).sub(&t3)
    }

    /// Leibnizator with a general vector in the first slot, by linearity.
    pub fn leib_left(&self, v: &Vector, j: usize, k: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (c, vc) in v.0.iter().enumerate() {
            if !vc.is_zero() {
                out.add_scaled(vc, self.leib_basis(c, j, k));
            }
        }
        out
    }

    /// Graded Jacobi sum on a basis triple.
    pub fn jacobi_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        let t1 = self.signed(
            contract_right_basis_left(&self.alg.bracket, i, self.brak_basis(j, k)),
            self.sign(i, k),
        );
        let t2 = self.signed(
            contract_right_basis_left(&self.alg.bracket, j, self.brak_basis(k, i)),
            self.sign(j, i),
        );
        let t3 = self.signed(
            contract_right_basis_left(&self.alg.bracket, k, self.brak_basis(i, j)),
            self.sign(k, j),
        );
        t1.add(&t2).add(&t3)
    }
}

/// [b_i, v]: contraction with a basis vector on the left.
pub(crate) fn contract_right_basis_left(t: &BilinearTensor, i: usize, v: &Vector) -> Vector {
    t.apply_basis_left(i, v).expect("validated dims")
}

/// The Leibnizator [x, z o w] - [x, z] o w - z o [x, w], evaluated with the
/// algebra's tensors. Trilinear in (x, z, w).
pub fn leibnizator(a: &AlgebraData, x: &Vector, z: &Vector, w: &Vector) -> Result<Vector> {
    let zw = a.product_of(z, w)?;
    let t1 = a.bracket_of(x, &zw)?;
    let xz = a.bracket_of(x, z)?;
    let t2 = a.product_of(&xz, w)?;
    let xw = a.bracket_of(x, w)?;
    let t3 = a.product_of(z, &xw)?;
    Ok(t1.sub(&t2).sub(&t3))
}

/// Brute-force Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]].
pub fn jacobi_sum(a: &AlgebraData, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    let t1 = a.bracket_of(x, &a.bracket_of(y, z)?)?;
    let t2 = a.bracket_of(y, &a.bracket_of(z, x)?)?;
    let t3 = a.bracket_of(z, &a.bracket_of(x, y)?)?;
    Ok(t1.add(&t2).add(&t3))
}

/// The six axiom families shared by the even and graded checkers, evaluated
/// with the signs implied by `parity`.
pub(crate) fn verify_structure(a: &AlgebraData, parity: Vec<u8>) -> VerificationReport {
    let dim = a.dim();
    let t = BasisTables::new(a, parity);
    let mut checks = Vec::with_capacity(6);

    // commutativity: b_i o b_j = (sign) b_j o b_i
    checks.push(scan2(dim, "commutativity", |i, j| {
        let rhs = t.prod_basis(j, i).clone();
        let rhs = if t.sign(i, j) < 0 { rhs.neg() } else { rhs };
        t.prod_basis(i, j).sub(&rhs)
    }));

    // associativity: (b_i o b_j) o b_k = b_i o (b_j o b_k)
    checks.push(scan3(dim, "associativity", |i, j, k| {
        let lhs = contract_right_basis(&a.product, t.prod_basis(i, j), k);
        let rhs = a
            .product
            .apply_basis_left(i, t.prod_basis(j, k))
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    // two-sided unit
    checks.push(scan1(dim, "unit", |i| {
        let bi = Vector::basis(dim, i);
        let left = contract_right_basis(&a.product, &a.unit, i).sub(&bi);
        if !left.is_zero() {
            return left;
        }
        a.product
            .apply(&bi, &a.unit)
            .expect("validated dims")
            .sub(&bi)
    }));

    // bracket antisymmetry: [b_i, b_j] + (sign) [b_j, b_i] = 0
    checks.push(scan2(dim, "bracket_antisymmetry", |i, j| {
        let rhs = t.brak_basis(j, i).clone();
        let rhs = if t.sign(i, j) < 0 { rhs.neg() } else { rhs };
        t.brak_basis(i, j).add(&rhs)
    }));

    // Jacobi identity
    checks.push(scan3(dim, "jacobi", |i, j, k| t.jacobi_basis(i, j, k)));

    // derivation law: L(b_i o b_j, b_k, b_l) = b_i o L(b_j,..) + (sign) b_j o L(b_i,..)
    checks.push(scan4(dim, "leibnizator_derivation", |i, j, k, l| {
        let lhs = t.leib_left(t.prod_basis(i, j), k, l);
        let r1 = a
            .product
            .apply_basis_left(i, t.leib_basis(j, k, l))
            .expect("validated dims");
        let mut r2 = a
            .product
            .apply_basis_left(j, t.leib_basis(i, k, l))
            .expect("validated dims");
        if t.sign(i, j) < 0 {
            r2 = r2.neg();
        }
        lhs.sub(&r1).sub(&r2)
    }));

    VerificationReport::from_checks(checks)
}

fn scan1(dim: usize, id: &str, f: impl Fn(usize) -> Vector) -> AxiomCheck {
    for i in 0..dim {
        let r = f(i);
        if !r.is_zero() {
            return AxiomCheck::fail(id, vec![i], r);
        }
    }
    AxiomCheck::pass(id)
}

fn scan2(dim: usize, id: &str, f: impl Fn(usize, usize) -> Vector) -> AxiomCheck {
    for i in 0..dim {
        for j in 0..dim {
            let r = f(i, j);
            if !r.is_zero() {
                return AxiomCheck::fail(id, vec![i, j], r);
            }
        }
    }
    AxiomCheck::pass(id)
}

fn scan3(dim: usize, id: &str, f: impl Fn(usize, usize, usize) -> Vector) -> AxiomCheck {
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let r = f(i, j, k);
                if !r.is_zero() {
                    return AxiomCheck::fail(id, vec![i, j, k], r);
                }
            }
        }
    }
    AxiomCheck::pass(id)
}

fn scan4(dim: usize, id: &str, f: impl Fn(usize, usize, usize, usize) -> Vector) -> AxiomCheck {
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
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

/// Check all six F-algebra axioms on basis tuples. Odd parities are rejected;
/// the graded case lives in the super checker.
pub fn verify_falgebra(a: &AlgebraData) -> Result<VerificationReport> {
    a.validate()?;
    if !a.all_even() {
        return Err(FalgError::Malformed {
            field: "parity",
            reason: "odd parities present; use the super checker".into(),
        });
    }
    Ok(verify_structure(a, vec![0; a.dim()]))
}

/// Poisson test: true iff the Leibnizator vanishes on all basis triples.
/// A false answer carries the first failing triple.
pub fn is_poisson(a: &AlgebraData) -> Result<(bool, Option<(Vec<usize>, Vector)>)> {
    a.validate()?;
    let t = BasisTables::new(a, vec![0; a.dim()]);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for k in 0..a.dim() {
                let l = t.leib_basis(i, j, k);
                if !l.is_zero() {
                    return Ok((false, Some((vec![i, j, k], l.clone()))));
                }
            }
        }
    }
    Ok((true, None))
}

pub struct PoisSubalgebra {
    pub basis: Vec<Vector>,
    pub closure_report: VerificationReport,
}

/// The subspace of elements whose Leibnizator vanishes in the first slot for
/// every basis pair, computed as an exact kernel, then re-verified for
/// closure under the product and the bracket.
pub fn pois_subalgebra(a: &AlgebraData) -> Result<PoisSubalgebra> {
    a.validate()?;
    let dim = a.dim();
    let t = BasisTables::new(a, vec![0; dim]);

    // Rows indexed by (j, k, coordinate); column i holds L(b_i, b_j, b_k).
    let mut m = Matrix::zero(dim * dim * dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let l = t.leib_basis(i, j, k);
                for (c, val) in l.0.iter().enumerate() {
                    if !val.is_zero() {
                        m.set((j * dim + k) * dim + c, i, val.clone());
                    }
                }
            }
        }
    }
    let basis = m.kernel();

    let mut checks = Vec::new();
    checks.push(scan_pairs_membership(
        &basis,
        "pois_closure_product",
        |p, q| a.product_of(p, q).expect("validated dims"),
    ));
    checks.push(scan_pairs_membership(
        &basis,
        "pois_closure_bracket",
        |p, q| a.bracket_of(p, q).expect("validated dims"),
    ));

    Ok(PoisSubalgebra {
        basis,
        closure_report: VerificationReport::from_checks(checks),
    })
}

fn scan_pairs_membership(
    basis: &[Vector],
    id: &str,
    f: impl Fn(&Vector, &Vector) -> Vector,
) -> AxiomCheck {
    for (p, vp) in basis.iter().enumerate() {
        for (q, vq) in basis.iter().enumerate() {
            let prod = f(vp, vq);
            if !in_span(basis, &prod) {
                return AxiomCheck::fail(id, vec![p, q], prod);
            }
        }
    }
    AxiomCheck::pass(id)
}

/// Check that the matrix phi is a homomorphism of F-algebras: it preserves
/// the unit, the product, and the bracket.
pub fn check_morphism(
    phi: &Matrix,
    src: &AlgebraData,
    dst: &AlgebraData,
) -> Result<VerificationReport> {
    src.validate()?;
    dst.validate()?;
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return Err(FalgError::Malformed {
            field: "matrix",
            reason: format!(
                "phi is {}x{}, expected {}x{}",
                phi.rows(),
                phi.cols(),
                dst.dim(),
                src.dim()
            ),
        });
    }
    let n = src.dim();
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();

    let mut checks = Vec::new();
    let unit_residual = phi.apply(&src.unit)?.sub(&dst.unit);
    checks.push(if unit_residual.is_zero() {
        AxiomCheck::pass("morphism_unit")
    } else {
        AxiomCheck::fail("morphism_unit", vec![], unit_residual)
    });

    checks.push(scan2(n, "morphism_product", |i, j| {
        let lhs = phi
            .apply(&src.product.apply_basis(i, j))
            .expect("validated dims");
        let rhs = dst
            .product
            .apply(&images[i], &images[j])
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    checks.push(scan2(n, "morphism_bracket", |i, j| {
        let lhs = phi
            .apply(&src.bracket.apply_basis(i, j))
            .expect("validated dims");
        let rhs = dst
            .bracket
            .apply(&images[i], &images[j])
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    Ok(VerificationReport::from_checks(checks))
}

/// Reject inputs that do not verify; used by every construction that
/// requires verified factors.
pub(crate) fn require_verified(a: &AlgebraData, side: &'static str) -> Result<()> {
    let report = verify_falgebra(a)?;
    if let Some(fail) = report.first_failure() {
        return Err(FalgError::UnverifiedInput {
            side,
            axiom: fail.axiom_id.clone(),
        });
    }
    Ok(())
}

/// Convenience for tests and the perturbation suites: add `delta` to one
/// tensor entry.
pub fn perturb_entry(
    a: &AlgebraData,
    which: PerturbTarget,
    i: usize,
    j: usize,
    k: usize,
    delta: Rat,
) -> AlgebraData {
    let mut out = a.clone();
    let t = match which {
        PerturbTarget::Product => &mut out.product,
        PerturbTarget::Bracket => &mut out.bracket,
    };
    let cur = t.get(i, j, k).clone();
    t.set(i, j, k, cur + delta);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbTarget {
    Product,
    Bracket,
}
