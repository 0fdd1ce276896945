//! Super F-algebras: graded sign conventions, Grassmann and truncated
//! polynomial model algebras, derivation computation, and the coordinate
//! even/odd split of a derivation.

use crate::algebra::{AlgebraData, CoordFrame};
use crate::error::{FalgError, Result};
use crate::falgebra::verify_structure;
use crate::linalg::{Matrix, Vector};
use crate::rat::Rat;
use crate::report::VerificationReport;
use crate::tensor::BilinearTensor;

/// Desk-scale bound for exact dense solving over superdomain algebras.
pub const MAX_SUPER_DIM: usize = 64;

/// An algebra candidate with a validated parity structure: the parity list
/// is present, the unit is even, and both structure tensors are
/// parity-homogeneous. Graded sign rules are undefined without these, so
/// violations are hard errors rather than report entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperAlgebraData {
    data: AlgebraData,
}

impl SuperAlgebraData {
    pub fn new(data: AlgebraData) -> Result<Self> {
        data.validate()?;
        let parity = data.parity.as_ref().ok_or(FalgError::BadParity)?.clone();
        for (i, p) in data.unit.0.iter().enumerate() {
            if !p.is_zero() && parity[i] == 1 {
                return Err(FalgError::OddUnit);
            }
        }
        for (name, t) in [("product", &data.product), ("bracket", &data.bracket)] {
            for i in 0..data.dim() {
                for j in 0..data.dim() {
                    for k in 0..data.dim() {
                        if !t.get(i, j, k).is_zero()
                            && parity[k] != (parity[i] + parity[j]) % 2
                        {
                            return Err(FalgError::InhomogeneousTensor {
                                tensor: name,
                                i,
                                j,
                                k,
                            });
                        }
                    }
                }
            }
        }
        Ok(SuperAlgebraData { data })
    }

    pub fn data(&self) -> &AlgebraData {
        &self.data
    }

    pub fn into_data(self) -> AlgebraData {
        self.data
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn parity(&self) -> &[u8] {
        self.data.parity.as_ref().expect("validated")
    }

    pub fn coords(&self) -> Option<&CoordFrame> {
        self.data.coords.as_ref()
    }
}

/// Graded axiom checker. Same six axiom families and ids as the even
/// checker; signs come from the parity list, so a purely even candidate
/// yields the identical report.
pub fn verify_super_falgebra(a: &SuperAlgebraData) -> VerificationReport {
    verify_structure(a.data(), a.parity().to_vec())
}

/// Subsets of {0..n-1} ordered by (cardinality, lexicographic), with the
/// index lookup table. This is the canonical Grassmann monomial order.
fn subsets_by_degree(n: usize) -> Vec<Vec<usize>> {
    let mut subs: Vec<Vec<usize>> = (0..(1u32 << n))
        .map(|mask| (0..n).filter(|&b| (mask >> b) & 1 == 1).collect())
        .collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subs
}

/// Sign of merging two disjoint sorted monomials: parity of the number of
/// transpositions needed to sort the concatenation.
fn merge_sign(s: &[usize], t: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for &a in s {
        inversions += t.iter().filter(|&&b| b < a).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn monomial_label(power: usize, set: &[usize]) -> String {
    let mut parts = Vec::new();
    match power {
        0 => {}
        1 => parts.push("t".to_string()),
        p => parts.push(format!("t^{p}")),
    }
    for &i in set {
        parts.push(format!("theta{}", i + 1));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// The Grassmann algebra on n odd generators, with zero bracket. Basis
/// monomials are ordered by (degree, lexicographic); the product carries the
/// transposition-count sign.
pub fn grassmann_algebra(n: usize) -> Result<SuperAlgebraData> {
    if n > 6 {
        return Err(FalgError::SizeLimit(format!(
            "grassmann generator count {n} > 6"
        )));
    }
    truncated_poly_superdomain(1, n)
}

/// Desk model of the function algebra of a (1|n) superdomain: one even
/// coordinate t with t^m_trunc = 0 and n odd coordinates. Basis monomials
/// t^a theta_S are grouped by monomial (Grassmann order), ascending power
/// within each group. The coordinate frame is recorded for the even/odd
/// split.
pub fn truncated_poly_superdomain(m_trunc: usize, n: usize) -> Result<SuperAlgebraData> {
    if m_trunc == 0 {
        return Err(FalgError::SizeLimit("truncation order must be >= 1".into()));
    }
    let dim = (1usize << n) * m_trunc;
    if dim > MAX_SUPER_DIM {
        return Err(FalgError::SizeLimit(format!(
            "superdomain dimension {dim} > {MAX_SUPER_DIM}"
        )));
    }
    let subs = subsets_by_degree(n);
    // index = grassmann_index(S) * m_trunc + power
    let index_of = |g: usize, a: usize| g * m_trunc + a;
    let mut basis = Vec::with_capacity(dim);
    let mut parity = Vec::with_capacity(dim);
    for set in &subs {
        for a in 0..m_trunc {
            basis.push(monomial_label(a, set));
            parity.push((set.len() % 2) as u8);
        }
    }

    let mut product = BilinearTensor::zero(dim, dim, dim);
    for (g1, s1) in subs.iter().enumerate() {
        for (g2, s2) in subs.iter().enumerate() {
            if s1.iter().any(|i| s2.contains(i)) {
                continue;
            }
            let mut merged: Vec<usize> = s1.iter().chain(s2.iter()).copied().collect();
            let sign = merge_sign(s1, s2);
            merged.sort_unstable();
            let g_out = subs.iter().position(|s| *s == merged).expect("subset");
            for a1 in 0..m_trunc {
                for a2 in 0..m_trunc {
                    if a1 + a2 >= m_trunc {
                        continue;
                    }
                    product.set(
                        index_of(g1, a1),
                        index_of(g2, a2),
                        index_of(g_out, a1 + a2),
                        Rat::int(sign),
                    );
                }
            }
        }
    }

    let mut data = AlgebraData::new(
        basis,
        Vector::basis(dim, 0),
        product,
        BilinearTensor::zero(dim, dim, dim),
    )?;
    data.parity = Some(parity);
    data.coords = Some(CoordFrame {
        even: vec!["t".to_string()],
        odd: (1..=n).map(|i| format!("theta{i}")).collect(),
        truncation: m_trunc,
    });
    SuperAlgebraData::new(data)
}

/// Basis of the parity-homogeneous derivations of a graded-commutative
/// algebra: linear maps D with D(fg) = D(f) g + (-1)^{|D||f|} f D(g) on all
/// basis pairs, found by exact kernel solving. Even derivations come first;
/// within each parity the order is the canonical kernel order.
pub fn derivations(c: &SuperAlgebraData) -> Vec<(u8, Matrix)> {
    let dim = c.dim();
    let parity = c.parity();
    let mut out = Vec::new();
    for p in [0u8, 1u8] {
        // Unknowns: entries d[k][i] with parity(k) = parity(i) + p.
        let mut slots = Vec::new();
        for i in 0..dim {
            for k in 0..dim {
                if parity[k] == (parity[i] + p) % 2 {
                    slots.push((k, i));
                }
            }
        }
        let col_of = |k: usize, i: usize| slots.iter().position(|&s| s == (k, i));

        // One block of rows per basis pair (i, j): coordinates of
        // D(b_i o b_j) - D(b_i) o b_j - (-1)^{p |i|} b_i o D(b_j).
        let mut m = Matrix::zero(dim * dim * dim, slots.len());
        for i in 0..dim {
            for j in 0..dim {
                let row0 = (i * dim + j) * dim;
                let prod = c.data().product.apply_basis(i, j);
                // D(b_i o b_j) = sum_c prod_c D(b_c): unknown d[k][c] feeds row k.
                for (cc, coeff) in prod.0.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for k in 0..dim {
                        if let Some(col) = col_of(k, cc) {
                            let cur = m.get(row0 + k, col) + coeff;
                            m.set(row0 + k, col, cur);
                        }
                    }
                }
                // -D(b_i) o b_j: D(b_i) = sum_k d[k][i] b_k, then b_k o b_j.
                for k in 0..dim {
                    if let Some(col) = col_of(k, i) {
                        for (out_c, coeff) in
                            c.data().product.basis_row(k, j).iter().enumerate()
                        {
                            if !coeff.is_zero() {
                                let cur = m.get(row0 + out_c, col) - coeff;
                                m.set(row0 + out_c, col, cur);
                            }
                        }
                    }
                }
                // -(-1)^{p|i|} b_i o D(b_j)
                let sign = if p & parity[i] == 1 {
                    Rat::one()
                } else {
                    Rat::int(-1)
                };
                for k in 0..dim {
                    if let Some(col) = col_of(k, j) {
                        for (out_c, coeff) in
                            c.data().product.basis_row(i, k).iter().enumerate()
                        {
                            if !coeff.is_zero() {
                                let cur = m.get(row0 + out_c, col) + &(&sign * coeff);
                                m.set(row0 + out_c, col, cur);
                            }
                        }
                    }
                }
            }
        }

        for v in m.kernel() {
            let mut mat = Matrix::zero(dim, dim);
            for (idx, &(k, i)) in slots.iter().enumerate() {
                if !v.0[idx].is_zero() {
                    mat.set(k, i, v.0[idx].clone());
                }
            }
            out.push((p, mat));
        }
    }
    out
}

/// Graded Leibniz test for an arbitrary linear map of stated parity.
pub fn is_derivation(c: &SuperAlgebraData, d: &Matrix, d_parity: u8) -> bool {
    let dim = c.dim();
    let parity = c.parity();
    for i in 0..dim {
        for j in 0..dim {
            let prod = c.data().product.apply_basis(i, j);
            let lhs = d.apply(&prod).expect("square matrix");
            let di = d.column(i);
            let dj = d.column(j);
            let t1 = c
                .data()
                .product
                .apply(&di, &Vector::basis(dim, j))
                .expect("dims");
            let mut t2 = c
                .data()
                .product
                .apply_basis_left(i, &dj)
                .expect("dims");
            if d_parity & parity[i] == 1 {
                t2 = t2.neg();
            }
            if !lhs.sub(&t1).sub(&t2).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Graded commutator D D' - (-1)^{|D||D'|} D' D.
pub fn graded_commutator(d1: &Matrix, p1: u8, d2: &Matrix, p2: u8) -> Matrix {
    let a = d1.mul(d2).expect("square");
    let b = d2.mul(d1).expect("square");
    if p1 & p2 == 1 {
        a.add(&b)
    } else {
        a.sub(&b)
    }
}

/// The coordinate-direction split of a derivation-like map on a superdomain
/// algebra. The parts are named for the coordinate directions they
/// differentiate along, not for their operator parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSplit {
    pub even_part: Matrix,
    pub odd_part: Matrix,
}

/// Matrix of multiplication by the basis-coefficient vector f.
fn mult_operator(c: &SuperAlgebraData, f: &Vector) -> Matrix {
    let dim = c.dim();
    let mut m = Matrix::zero(dim, dim);
    for j in 0..dim {
        let col = c
            .data()
            .product
            .apply(f, &Vector::basis(dim, j))
            .expect("dims");
        for (k, v) in col.0.iter().enumerate() {
            if !v.is_zero() {
                m.set(k, j, v.clone());
            }
        }
    }
    m
}

/// Frame matrices of the coordinate directions d/dt and d/dtheta_i on a
/// superdomain built by `truncated_poly_superdomain`. These are formal
/// direction operators: function multiples of them are the coordinate
/// vector fields.
pub struct CoordinateFrame {
    pub ddt: Option<Matrix>,
    pub ddtheta: Vec<Matrix>,
    /// Basis index of the coordinate monomial t (when truncation >= 2).
    pub t_index: Option<usize>,
    /// Basis indices of the coordinate monomials theta_i.
    pub theta_indices: Vec<usize>,
    pub n_odd: usize,
}

pub fn coordinate_frame(c: &SuperAlgebraData) -> Result<CoordinateFrame> {
    let frame = c.coords().ok_or(FalgError::MissingCoordinateFrame)?;
    let m_trunc = frame.truncation;
    let n = frame.odd.len();
    let dim = c.dim();
    let subs = subsets_by_degree(n);
    let index_of = |g: usize, a: usize| g * m_trunc + a;

    // d/dt: t^a theta_S -> a t^{a-1} theta_S
    let ddt = if m_trunc >= 2 {
        let mut m = Matrix::zero(dim, dim);
        for (g, _) in subs.iter().enumerate() {
            for a in 1..m_trunc {
                m.set(index_of(g, a - 1), index_of(g, a), Rat::int(a as i64));
            }
        }
        Some(m)
    } else {
        None
    };

    // d/dtheta_i: left derivative, sign (-1)^{position of i in S}.
    let mut ddtheta = Vec::with_capacity(n);
    for gen in 0..n {
        let mut m = Matrix::zero(dim, dim);
        for (g, set) in subs.iter().enumerate() {
            let Some(pos) = set.iter().position(|&b| b == gen) else {
                continue;
            };
            let reduced: Vec<usize> = set
                .iter()
                .copied()
                .filter(|&b| b != gen)
                .collect();
            let g_out = subs.iter().position(|s| *s == reduced).expect("subset");
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            for a in 0..m_trunc {
                m.set(index_of(g_out, a), index_of(g, a), Rat::int(sign));
            }
        }
        ddtheta.push(m);
    }

    let t_index = (m_trunc >= 2).then(|| index_of(0, 1));
    let theta_indices = (0..n)
        .map(|gen| {
            let g = subs.iter().position(|s| s.as_slice() == [gen]).expect("subset");
            index_of(g, 0)
        })
        .collect();

    Ok(CoordinateFrame {
        ddt,
        ddtheta,
        t_index,
        theta_indices,
        n_odd: n,
    })
}

/// Split a map in the span of the coordinate vector fields into its d/dt
/// part and its d/dtheta part. Coefficient functions are read off the
/// images of the coordinate monomials and the result is checked by exact
/// reassembly; anything outside the span is an error.
pub fn split_derivation(c: &SuperAlgebraData, d: &Matrix) -> Result<DerivationSplit> {
    let dim = c.dim();
    if d.rows() != dim || d.cols() != dim {
        return Err(FalgError::DimensionMismatch {
            arg: "derivation",
            expected: dim,
            got: d.rows(),
        });
    }
    let frame = coordinate_frame(c)?;

    let even_part = match (&frame.ddt, frame.t_index) {
        (Some(ddt), Some(ti)) => {
            let coeff = d.column(ti);
            mult_operator(c, &coeff).mul(ddt).expect("square")
        }
        _ => Matrix::zero(dim, dim),
    };

    let mut odd_part = Matrix::zero(dim, dim);
    for (gen, &thi) in frame.theta_indices.iter().enumerate() {
        let coeff = d.column(thi);
        let part = mult_operator(c, &coeff)
            .mul(&frame.ddtheta[gen])
            .expect("square");
        odd_part = odd_part.add(&part);
    }

    if even_part.add(&odd_part) != *d {
        return Err(FalgError::NotInCoordinateSpan);
    }
    Ok(DerivationSplit { even_part, odd_part })
}

/// Coordinate vector field sum_mu X^mu d/dt + sum_i X^i d/dtheta_i as a
/// matrix, from its coefficient functions.
pub fn coordinate_field(
    c: &SuperAlgebraData,
    even_coeffs: &[Vector],
    odd_coeffs: &[Vector],
) -> Result<Matrix> {
    let frame = coordinate_frame(c)?;
    let dim = c.dim();
    let n_even = usize::from(frame.ddt.is_some());
    if even_coeffs.len() != n_even {
        return Err(FalgError::DimensionMismatch {
            arg: "even_coeffs",
            expected: n_even,
            got: even_coeffs.len(),
        });
    }
    if odd_coeffs.len() != frame.n_odd {
        return Err(FalgError::DimensionMismatch {
            arg: "odd_coeffs",
            expected: frame.n_odd,
            got: odd_coeffs.len(),
        });
    }
    let mut m = Matrix::zero(dim, dim);
    if let Some(ddt) = &frame.ddt {
        m = m.add(&mult_operator(c, &even_coeffs[0]).mul(ddt).expect("square"));
    }
    for (gen, coeff) in odd_coeffs.iter().enumerate() {
        m = m.add(
            &mult_operator(c, coeff)
                .mul(&frame.ddtheta[gen])
                .expect("square"),
        );
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falgebra::verify_falgebra;

    fn grassmann(n: usize) -> SuperAlgebraData {
        grassmann_algebra(n).unwrap()
    }

    #[test]
    fn grassmann_zero_is_ground_field() {
        let g = grassmann(0);
        assert_eq!(g.dim(), 1);
        assert!(verify_super_falgebra(&g).overall);
    }

    #[test]
    fn grassmann_two_relations() {
        let g = grassmann(2);
        assert_eq!(g.dim(), 4);
        assert_eq!(
            g.data().basis,
            vec!["1", "theta1", "theta2", "theta1*theta2"]
        );
        let th1 = Vector::basis(4, 1);
        let th2 = Vector::basis(4, 2);
        let th12 = Vector::basis(4, 3);
        assert_eq!(g.data().product_of(&th1, &th2).unwrap(), th12);
        assert_eq!(g.data().product_of(&th2, &th1).unwrap(), th12.neg());
        assert!(g.data().product_of(&th1, &th1).unwrap().is_zero());
    }

    #[test]
    fn grassmann_passes_super_checker() {
        for n in 0..=4 {
            let g = grassmann(n);
            let report = verify_super_falgebra(&g);
            assert!(report.overall, "n={n}:\n{}", report.summary());
        }
    }

    #[test]
    fn super_commutativity_signs_hold_on_all_pairs() {
        let g = grassmann(3);
        let d = g.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = g.data().product.apply_basis(i, j);
                let mut ji = g.data().product.apply_basis(j, i);
                if g.parity()[i] & g.parity()[j] == 1 {
                    ji = ji.neg();
                }
                assert_eq!(ij, ji);
            }
        }
    }

    #[test]
    fn purely_even_checker_agrees_with_even_checker() {
        // qq[t]/(t^3) with zero bracket, as a super algebra with even parity.
        let c = truncated_poly_superdomain(3, 0).unwrap();
        let super_report = verify_super_falgebra(&c);
        let even_report = verify_falgebra(c.data()).unwrap();
        assert_eq!(super_report.checks, even_report.checks);
        assert!(super_report.overall);
    }

    #[test]
    fn superdomain_2_1_products() {
        let c = truncated_poly_superdomain(2, 1).unwrap();
        assert_eq!(c.data().basis, vec!["1", "t", "theta1", "t*theta1"]);
        let t = Vector::basis(4, 1);
        let th = Vector::basis(4, 2);
        assert!(c.data().product_of(&t, &t).unwrap().is_zero());
        assert_eq!(c.data().product_of(&t, &th).unwrap(), Vector::basis(4, 3));
        assert!(verify_super_falgebra(&c).overall);
    }

    #[test]
    fn trunc_1_equals_grassmann() {
        let a = truncated_poly_superdomain(1, 2).unwrap();
        let g = grassmann(2);
        assert_eq!(a.data().product, g.data().product);
        assert_eq!(a.data().basis, g.data().basis);
        assert_eq!(a.parity(), g.parity());
    }

    #[test]
    fn odd_bracket_on_grassmann_line_is_super_falgebra() {
        // Lambda(theta) with [theta, theta] = 1: graded-symmetric diagonal
        // brackets are allowed on odd elements, and the whole structure
        // verifies.
        let mut data = grassmann(1).into_data();
        let mut bracket = BilinearTensor::zero(2, 2, 2);
        bracket.set(1, 1, 0, Rat::one());
        data.bracket = bracket;
        let s = SuperAlgebraData::new(data).unwrap();
        let report = verify_super_falgebra(&s);
        assert!(report.overall, "{}", report.summary());
    }

    #[test]
    fn inhomogeneous_tensor_rejected() {
        let mut data = grassmann(1).into_data();
        // theta o theta = theta mixes parities.
        data.product.set(1, 1, 1, Rat::one());
        assert!(matches!(
            SuperAlgebraData::new(data),
            Err(FalgError::InhomogeneousTensor { .. })
        ));
    }

    #[test]
    fn odd_unit_rejected() {
        let mut data = grassmann(1).into_data();
        data.unit = Vector::basis(2, 1);
        assert!(matches!(
            SuperAlgebraData::new(data),
            Err(FalgError::OddUnit)
        ));
    }

    #[test]
    fn derivations_of_grassmann_line() {
        // Lambda(theta): d/dtheta (odd) and theta d/dtheta (even).
        let g = grassmann(1);
        let ders = derivations(&g);
        assert_eq!(ders.len(), 2);
        assert_eq!(ders.iter().filter(|(p, _)| *p == 0).count(), 1);
        assert_eq!(ders.iter().filter(|(p, _)| *p == 1).count(), 1);
        for (p, d) in &ders {
            assert!(is_derivation(&g, d, *p));
        }
    }

    #[test]
    fn derivations_of_dual_numbers() {
        // qq[t]/(t^2): D(t t) = 2 t D(t) = 0 forces D(t) into span{t}.
        let c = truncated_poly_superdomain(2, 0).unwrap();
        let ders = derivations(&c);
        assert_eq!(ders.len(), 1);
        let (p, d) = &ders[0];
        assert_eq!(*p, 0);
        // t d/dt up to scale: kills 1, fixes t up to the kernel normalization.
        assert!(d.column(0).is_zero());
        assert!(!d.column(1).is_zero());
    }

    #[test]
    fn derivations_of_fat_point_dimension() {
        // qq[t]/(t^3): span{t d/dt, t^2 d/dt}.
        let c = truncated_poly_superdomain(3, 0).unwrap();
        assert_eq!(derivations(&c).len(), 2);
    }

    #[test]
    fn derivations_of_ground_field_vanish() {
        let c = grassmann(0);
        assert!(derivations(&c).is_empty());
    }

    #[test]
    fn derivations_close_under_graded_commutator() {
        for c in [
            grassmann(2),
            truncated_poly_superdomain(2, 1).unwrap(),
            truncated_poly_superdomain(3, 0).unwrap(),
        ] {
            let ders = derivations(&c);
            for (p1, d1) in &ders {
                for (p2, d2) in &ders {
                    let comm = graded_commutator(d1, *p1, d2, *p2);
                    assert!(is_derivation(&c, &comm, (p1 + p2) % 2));
                }
            }
        }
    }

    #[test]
    fn split_coordinate_fields() {
        let c = truncated_poly_superdomain(2, 1).unwrap();
        let dim = c.dim();
        let one = Vector::basis(dim, 0);
        let t = Vector::basis(dim, 1);
        let th = Vector::basis(dim, 2);

        // D = d/dt: even part is all of it.
        let ddt = coordinate_field(&c, &[one.clone()], &[Vector::zero(dim)]).unwrap();
        let split = split_derivation(&c, &ddt).unwrap();
        assert_eq!(split.even_part, ddt);
        assert!(split.odd_part.is_zero());

        // D = theta d/dt + t d/dtheta splits along the frame.
        let mixed = coordinate_field(&c, &[th.clone()], &[t.clone()]).unwrap();
        let split = split_derivation(&c, &mixed).unwrap();
        let even_expected = coordinate_field(&c, &[th], &[Vector::zero(dim)]).unwrap();
        let odd_expected = coordinate_field(&c, &[Vector::zero(dim)], &[t]).unwrap();
        assert_eq!(split.even_part, even_expected);
        assert_eq!(split.odd_part, odd_expected);
        assert_eq!(split.even_part.add(&split.odd_part), mixed);
    }

    #[test]
    fn split_rejects_maps_outside_coordinate_span() {
        let c = truncated_poly_superdomain(2, 1).unwrap();
        let mut m = Matrix::zero(4, 4);
        // Sends 1 to t: no coordinate field does that.
        m.set(1, 0, Rat::one());
        assert!(matches!(
            split_derivation(&c, &m),
            Err(FalgError::NotInCoordinateSpan)
        ));
    }

    #[test]
    fn split_reassembles_for_random_coordinate_fields() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let c = truncated_poly_superdomain(2, 2).unwrap();
        let dim = c.dim();
        for _ in 0..20 {
            let rand_vec = |rng: &mut rand_chacha::ChaCha8Rng| {
                Vector(
                    (0..dim)
                        .map(|_| Rat::int(rng.random_range(-2..=2)))
                        .collect(),
                )
            };
            let even = vec![rand_vec(&mut rng)];
            let odd = vec![rand_vec(&mut rng), rand_vec(&mut rng)];
            let d = coordinate_field(&c, &even, &odd).unwrap();
            let split = split_derivation(&c, &d).unwrap();
            assert_eq!(split.even_part.add(&split.odd_part), d);
        }
    }
}
