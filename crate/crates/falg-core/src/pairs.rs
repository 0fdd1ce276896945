//! Rinehart-style pairs: an F-algebra and a commutative algebra acting on
//! each other, plus the plain Lie-algebra variant.
//!
//! Graded evaluation: every axiom is checked on homogeneous basis tuples,
//! with a Koszul sign wherever two symbols are transposed relative to the
//! printed form of the law. All-even data reduces every sign to +1.
//!
//! The bracket/action compatibility defect
//!   hat(X,f,Y) = [X, f c> Y] - (X l> f) c> Y - f c> [X, Y]
//! is the quantity whose derivation law in f gates the pair verdict. The
//! same expression with the last sign flipped is also evaluated and
//! reported in the notes, never gated on; the two differ by 2 f c> [X,Y].

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::error::{FalgError, Result};
use crate::falgebra::{require_verified, verify_falgebra, BasisTables};
use crate::linalg::Vector;
use crate::modules::module_checks;
use crate::rat::Rat;
use crate::report::{AxiomCheck, VerificationReport};
use crate::superalg::SuperAlgebraData;
use crate::tensor::BilinearTensor;

/// An F-algebra / commutative-algebra pair candidate with its three actions:
/// `act_l`, `act_a`: F x C -> C, and `act_c`: C x F -> F.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairData {
    pub f_algebra: AlgebraData,
    pub c_algebra: AlgebraData,
    pub act_l: BilinearTensor,
    pub act_a: BilinearTensor,
    pub act_c: BilinearTensor,
}

/// A Lie-algebra / commutative-algebra pair candidate. Only the bracket of
/// `l_algebra` is consulted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LrPairData {
    pub l_algebra: AlgebraData,
    pub c_algebra: AlgebraData,
    pub act_l: BilinearTensor,
    pub act_c: BilinearTensor,
}

impl PairData {
    pub fn validate(&self) -> Result<()> {
        self.f_algebra.validate()?;
        self.c_algebra.validate()?;
        let (fd, cd) = (self.f_algebra.dim(), self.c_algebra.dim());
        check_shape("act_l", &self.act_l, fd, cd, cd)?;
        check_shape("act_a", &self.act_a, fd, cd, cd)?;
        check_shape("act_c", &self.act_c, cd, fd, fd)?;
        Ok(())
    }

    /// Forget the product-side structure: the Lie/commutative fragment of
    /// the pair data, whose axioms are a verbatim subset.
    pub fn forget_to_lrpair(&self) -> LrPairData {
        LrPairData {
            l_algebra: self.f_algebra.clone(),
            c_algebra: self.c_algebra.clone(),
            act_l: self.act_l.clone(),
            act_c: self.act_c.clone(),
        }
    }
}

fn check_shape(
    name: &'static str,
    t: &BilinearTensor,
    a: usize,
    b: usize,
    out: usize,
) -> Result<()> {
    if t.dim_a() != a || t.dim_b() != b || t.dim_out() != out {
        return Err(FalgError::Malformed {
            field: "tensor",
            reason: format!(
                "{name} is {}x{}x{}, expected {a}x{b}x{out}",
                t.dim_a(),
                t.dim_b(),
                t.dim_out()
            ),
        });
    }
    Ok(())
}

/// The displayed pair obstruction with the printed sign on its last term:
/// [X, f c> Y] - (X l> f) c> Y + f c> [X, Y]. Ungraded evaluation on
/// general vectors.
pub fn pair_l_hat(p: &PairData, x: &Vector, f: &Vector, y: &Vector) -> Result<Vector> {
    let fy = p.act_c.apply(f, y)?;
    let t1 = p.f_algebra.bracket_of(x, &fy)?;
    let xf = p.act_l.apply(x, f)?;
    let t2 = p.act_c.apply(&xf, y)?;
    let xy = p.f_algebra.bracket_of(x, y)?;
    let t3 = p.act_c.apply(f, &xy)?;
    Ok(t1.sub(&t2).add(&t3))
}

fn parities_of(a: &AlgebraData) -> Vec<u8> {
    a.parity.clone().unwrap_or_else(|| vec![0; a.dim()])
}

/// Verify an algebra as a suitable pair member: the graded checker when odd
/// parities are present, the plain one otherwise.
fn require_member_verified(a: &AlgebraData, side: &'static str) -> Result<()> {
    if a.all_even() {
        require_verified(a, side)
    } else {
        let s = SuperAlgebraData::new(a.clone())?;
        let report = crate::superalg::verify_super_falgebra(&s);
        match report.first_failure() {
            None => Ok(()),
            Some(fail) => Err(FalgError::UnverifiedInput {
                side,
                axiom: fail.axiom_id.clone(),
            }),
        }
    }
}

fn require_commutative_member(c: &AlgebraData, side: &'static str) -> Result<()> {
    if !c.bracket.is_zero() {
        return Err(FalgError::UnverifiedInput {
            side,
            axiom: "zero_bracket".into(),
        });
    }
    require_member_verified(c, side)
}

/// Check all F-R pair axiom families on basis tuples: the five module laws
/// for C as an F-module, the C-module law on F, the derivation law of the
/// compatibility defect, and the four compatibilities.
pub fn verify_frpair(p: &PairData) -> Result<VerificationReport> {
    p.validate()?;
    require_member_verified(&p.f_algebra, "f_algebra")?;
    require_commutative_member(&p.c_algebra, "c_algebra")?;

    let f_par = parities_of(&p.f_algebra);
    let c_par = parities_of(&p.c_algebra);
    let fdim = p.f_algebra.dim();
    let cdim = p.c_algebra.dim();
    let tables = BasisTables::new(&p.f_algebra, f_par.clone());

    let mut checks = module_checks(&tables, cdim, &p.act_l, &p.act_a, &f_par, "module_");

    let sign_ff = |i: usize, j: usize| f_par[i] & f_par[j] == 1;
    let sign_fc = |i: usize, j: usize| f_par[i] & c_par[j] == 1;
    let sign_cc = |i: usize, j: usize| c_par[i] & c_par[j] == 1;
    let signed = |v: Vector, neg: bool| if neg { v.neg() } else { v };

    let cprod =
        |f: usize, g: usize| -> Vector { p.c_algebra.product.apply_basis(f, g) };

    // (f . g) c> X = f c> (g c> X)
    checks.push(scan3(cdim, cdim, fdim, "c_module_assoc", |f, g, x| {
        let lhs = p
            .act_c
            .apply(&cprod(f, g), &Vector::basis(fdim, x))
            .expect("validated dims");
        let rhs = p
            .act_c
            .apply_basis_left(f, &p.act_c.apply_basis(g, x))
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    // hat(X, f, Y) with the minus sign: the compatibility defect.
    let hat_minus = |x: usize, f: usize, y: usize| -> Vector {
        let t1 = p
            .f_algebra
            .bracket
            .apply_basis_left(x, &p.act_c.apply_basis(f, y))
            .expect("validated dims");
        let t2 = p
            .act_c
            .apply(&p.act_l.apply_basis(x, f), &Vector::basis(fdim, y))
            .expect("validated dims");
        let t3 = signed(
            p.act_c
                .apply_basis_left(f, tables.brak_basis(x, y))
                .expect("validated dims"),
            sign_fc(x, f),
        );
        t1.sub(&t2).sub(&t3)
    };
    let hat_minus_left = |x: usize, w: &Vector, y: usize| -> Vector {
        let mut out = Vector::zero(fdim);
        for (c, wc) in w.0.iter().enumerate() {
            if !wc.is_zero() {
                out.add_scaled(wc, &hat_minus(x, c, y));
            }
        }
        out
    };

    // Derivation law of the defect in its middle slot:
    // hat(X, f.g, Y) = s(X,f) f c> hat(X,g,Y) + s(X,g) s(f,g) g c> hat(X,f,Y)
    checks.push(scan4(
        fdim,
        cdim,
        cdim,
        fdim,
        "lhat_derivation",
        |x, f, g, y| {
            let lhs = hat_minus_left(x, &cprod(f, g), y);
            let t1 = signed(
                p.act_c
                    .apply_basis_left(f, &hat_minus(x, g, y))
                    .expect("validated dims"),
                sign_fc(x, f),
            );
            let t2 = signed(
                p.act_c
                    .apply_basis_left(g, &hat_minus(x, f, y))
                    .expect("validated dims"),
                sign_fc(x, g) ^ sign_cc(f, g),
            );
            lhs.sub(&t1).sub(&t2)
        },
    ));

    // 1(a): the defect itself vanishes.
    checks.push(scan3(fdim, cdim, fdim, "compat_bracket_caction", |x, f, y| {
        hat_minus(x, f, y)
    }));

    // 1(b): X o (f c> Y) = 1/2 ((X a> f) c> Y + s(X,f) f c> (X o Y))
    let half = Rat::frac(1, 2);
    checks.push(scan3(fdim, cdim, fdim, "compat_product_caction", |x, f, y| {
        let lhs = p
            .f_algebra
            .product
            .apply_basis_left(x, &p.act_c.apply_basis(f, y))
            .expect("validated dims");
        let t1 = p
            .act_c
            .apply(&p.act_a.apply_basis(x, f), &Vector::basis(fdim, y))
            .expect("validated dims");
        let t2 = signed(
            p.act_c
                .apply_basis_left(f, tables.prod_basis(x, y))
                .expect("validated dims"),
            sign_fc(x, f),
        );
        lhs.sub(&t1.add(&t2).scale(&half))
    }));

    // 2(a): f . (X l> g) = (f c> X) l> g
    checks.push(scan3(cdim, fdim, cdim, "compat_dot_lie", |f, x, g| {
        let lhs = p
            .c_algebra
            .product
            .apply_basis_left(f, &p.act_l.apply_basis(x, g))
            .expect("validated dims");
        let rhs = p
            .act_l
            .apply(
                &p.act_c.apply_basis(f, x),
                &Vector::basis(cdim, g),
            )
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    // 2(b): f . (X a> g) = (f c> X) a> g
    checks.push(scan3(cdim, fdim, cdim, "compat_dot_assoc", |f, x, g| {
        let lhs = p
            .c_algebra
            .product
            .apply_basis_left(f, &p.act_a.apply_basis(x, g))
            .expect("validated dims");
        let rhs = p
            .act_a
            .apply(
                &p.act_c.apply_basis(f, x),
                &Vector::basis(cdim, g),
            )
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    let mut report = VerificationReport::from_checks(checks);

    // Reported, not gated: the printed-sign variant of the obstruction and
    // its derivation law. The variant adds 2 f c> [X,Y] to the defect.
    let hat_plus = |x: usize, f: usize, y: usize| -> Vector {
        let extra = signed(
            p.act_c
                .apply_basis_left(f, tables.brak_basis(x, y))
                .expect("validated dims"),
            sign_fc(x, f),
        )
        .scale(&Rat::int(2));
        hat_minus(x, f, y).add(&extra)
    };
    let mut plus_note = String::from("plus-sign obstruction variant derivation law: pass");
    'outer: for x in 0..fdim {
        for f in 0..cdim {
            for g in 0..cdim {
                for y in 0..fdim {
                    let mut lhs = Vector::zero(fdim);
                    for (c, wc) in cprod(f, g).0.iter().enumerate() {
                        if !wc.is_zero() {
                            lhs.add_scaled(wc, &hat_plus(x, c, y));
                        }
                    }
                    let t1 = signed(
                        p.act_c
                            .apply_basis_left(f, &hat_plus(x, g, y))
                            .expect("validated dims"),
                        sign_fc(x, f),
                    );
                    let t2 = signed(
                        p.act_c
                            .apply_basis_left(g, &hat_plus(x, f, y))
                            .expect("validated dims"),
                        sign_fc(x, g) ^ sign_cc(f, g),
                    );
                    if !lhs.sub(&t1).sub(&t2).is_zero() {
                        plus_note = format!(
                            "plus-sign obstruction variant derivation law: fail at ({x},{f},{g},{y})"
                        );
                        break 'outer;
                    }
                }
            }
        }
    }
    report = report.with_note(plus_note);
    Ok(report)
}

/// Check the Lie-Rinehart axiom families: the Lie-module law, the C-module
/// law, and the two compatibilities. The Lie-algebra and commutative-algebra
/// preconditions are enforced as errors.
pub fn verify_lrpair(p: &LrPairData) -> Result<VerificationReport> {
    p.l_algebra.validate()?;
    p.c_algebra.validate()?;
    let (ld, cd) = (p.l_algebra.dim(), p.c_algebra.dim());
    check_shape("act_l", &p.act_l, ld, cd, cd)?;
    check_shape("act_c", &p.act_c, cd, ld, ld)?;

    let l_par = parities_of(&p.l_algebra);
    let c_par = parities_of(&p.c_algebra);

    // Precondition: the bracket is a (graded) Lie bracket.
    let tables = BasisTables::new(&p.l_algebra, l_par.clone());
    for i in 0..ld {
        for j in 0..ld {
            let mut anti = tables.brak_basis(j, i).clone();
            if l_par[i] & l_par[j] == 0 {
                anti = anti.neg();
            }
            if tables.brak_basis(i, j).clone().sub(&anti) != Vector::zero(ld) {
                return Err(FalgError::UnverifiedInput {
                    side: "l_algebra",
                    axiom: "bracket_antisymmetry".into(),
                });
            }
            for k in 0..ld {
                if !tables.jacobi_basis(i, j, k).is_zero() {
                    return Err(FalgError::UnverifiedInput {
                        side: "l_algebra",
                        axiom: "jacobi".into(),
                    });
                }
            }
        }
    }
    require_commutative_member(&p.c_algebra, "c_algebra")?;

    let sign_ll = |i: usize, j: usize| l_par[i] & l_par[j] == 1;
    let sign_lc = |i: usize, j: usize| l_par[i] & c_par[j] == 1;
    let signed = |v: Vector, neg: bool| if neg { v.neg() } else { v };

    let mut checks = Vec::new();

    checks.push(scan3(ld, ld, cd, "lie_module", |i, j, k| {
        let fk = Vector::basis(cd, k);
        let lhs = p
            .act_l
            .apply(tables.brak_basis(i, j), &fk)
            .expect("validated dims");
        let t1 = p
            .act_l
            .apply_basis_left(i, &p.act_l.apply_basis(j, k))
            .expect("validated dims");
        let t2 = signed(
            p.act_l
                .apply_basis_left(j, &p.act_l.apply_basis(i, k))
                .expect("validated dims"),
            sign_ll(i, j),
        );
        lhs.sub(&t1).add(&t2)
    }));

    checks.push(scan3(cd, cd, ld, "c_module_assoc", |f, g, x| {
        let lhs = p
            .act_c
            .apply(
                &p.c_algebra.product.apply_basis(f, g),
                &Vector::basis(ld, x),
            )
            .expect("validated dims");
        let rhs = p
            .act_c
            .apply_basis_left(f, &p.act_c.apply_basis(g, x))
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    checks.push(scan3(ld, cd, ld, "compat_bracket_caction", |x, f, y| {
        let t1 = p
            .l_algebra
            .bracket
            .apply_basis_left(x, &p.act_c.apply_basis(f, y))
            .expect("validated dims");
        let t2 = p
            .act_c
            .apply(&p.act_l.apply_basis(x, f), &Vector::basis(ld, y))
            .expect("validated dims");
        let t3 = signed(
            p.act_c
                .apply_basis_left(f, tables.brak_basis(x, y))
                .expect("validated dims"),
            sign_lc(x, f),
        );
        t1.sub(&t2).sub(&t3)
    }));

    checks.push(scan3(cd, ld, cd, "compat_dot_lie", |f, x, g| {
        let lhs = p
            .c_algebra
            .product
            .apply_basis_left(f, &p.act_l.apply_basis(x, g))
            .expect("validated dims");
        let rhs = p
            .act_l
            .apply(
                &p.act_c.apply_basis(f, x),
                &Vector::basis(cd, g),
            )
            .expect("validated dims");
        lhs.sub(&rhs)
    }));

    Ok(VerificationReport::from_checks(checks))
}

fn scan3(
    d1: usize,
    d2: usize,
    d3: usize,
    id: &str,
    f: impl Fn(usize, usize, usize) -> Vector,
) -> AxiomCheck {
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..d3 {
                let r = f(i, j, k);
                if !r.is_zero() {
                    return AxiomCheck::fail(id, vec![i, j, k], r);
                }
            }
        }
    }
    AxiomCheck::pass(id)
}

fn scan4(
    d1: usize,
    d2: usize,
    d3: usize,
    d4: usize,
    id: &str,
    f: impl Fn(usize, usize, usize, usize) -> Vector,
) -> AxiomCheck {
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..d3 {
                for l in 0..d4 {
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

/// The pair with C equal to the F-algebra itself and all actions adjoint.
pub fn adjoint_pair(a: &AlgebraData) -> Result<PairData> {
    require_verified(a, "algebra")?;
    let mut c = a.clone();
    c.bracket = BilinearTensor::zero(a.dim(), a.dim(), a.dim());
    Ok(PairData {
        f_algebra: a.clone(),
        c_algebra: c,
        act_l: a.bracket.clone(),
        act_a: a.product.clone(),
        act_c: a.product.clone(),
    })
}

/// Caveat recorded alongside the rank-one vector-field pair: its associative
/// action is the basis-pointwise encoding of the constant identity action,
/// which is not linear in the algebra slot; composite-argument instances
/// evaluate through the bilinear proxy.
pub const TRIVIAL_ACTION_CAVEAT: &str =
    "act_a encodes the constant identity action pointwise on basis elements; \
     it is not linear in its first slot, and composite arguments evaluate \
     through the bilinear extension of the basis values";

/// Desk-scale vector-field pair: F is the two-dimensional algebra of
/// derivations of C = Q[t]/(t^3) spanned by t d/dt and t^2 d/dt, with the
/// rank-one product generated by t d/dt (the unit), the commutator bracket,
/// the honest derivation action as act_l, the constant identity action as
/// act_a, and module multiplication as act_c.
pub fn fmanifold_toy_pair() -> PairData {
    // C = Q[t]/(t^3), basis 1, t, t^2.
    let c = crate::superalg::truncated_poly_superdomain(3, 0)
        .expect("desk scale")
        .into_data();

    // F: basis a = t d/dt, b = t^2 d/dt; a o a = a, a o b = b, b o b = 0;
    // [a, b] = b.
    let mut product = BilinearTensor::zero(2, 2, 2);
    product.set(0, 0, 0, Rat::one());
    product.set(0, 1, 1, Rat::one());
    product.set(1, 0, 1, Rat::one());
    let mut bracket = BilinearTensor::zero(2, 2, 2);
    bracket.set(0, 1, 1, Rat::one());
    bracket.set(1, 0, 1, Rat::int(-1));
    let f = AlgebraData::new(
        vec!["t_ddt".into(), "t2_ddt".into()],
        Vector::basis(2, 0),
        product,
        bracket,
    )
    .expect("well formed");

    // act_l: the operator action. t d/dt: t -> t, t^2 -> 2 t^2.
    // t^2 d/dt: t -> t^2.
    let mut act_l = BilinearTensor::zero(2, 3, 3);
    act_l.set(0, 1, 1, Rat::one());
    act_l.set(0, 2, 2, Rat::int(2));
    act_l.set(1, 1, 2, Rat::one());

    // act_a: every basis vector field fixes every function.
    let mut act_a = BilinearTensor::zero(2, 3, 3);
    for i in 0..2 {
        for j in 0..3 {
            act_a.set(i, j, j, Rat::one());
        }
    }

    // act_c: module multiplication. t . a = b; t . b, t^2 . a, t^2 . b = 0.
    let mut act_c = BilinearTensor::zero(3, 2, 2);
    act_c.set(0, 0, 0, Rat::one());
    act_c.set(0, 1, 1, Rat::one());
    act_c.set(1, 0, 1, Rat::one());

    PairData {
        f_algebra: f,
        c_algebra: c,
        act_l,
        act_a,
        act_c,
    }
}
