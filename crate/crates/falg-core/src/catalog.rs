//! Built-in algebras shared by the test suites, the CLI, and the search.

use crate::algebra::AlgebraData;
use crate::linalg::Vector;
use crate::rat::Rat;
use crate::tensor::BilinearTensor;

/// Names of the built-in algebras, in catalog order.
pub const CATALOG_NAMES: [&str; 3] = ["A2", "A3", "A3h"];

pub fn by_name(name: &str) -> Option<AlgebraData> {
    match name {
        "A2" => Some(a2()),
        "A3" => Some(a3()),
        "A3h" => Some(a3h()),
        _ => None,
    }
}

fn unital_product(dim: usize) -> BilinearTensor {
    let mut p = BilinearTensor::zero(dim, dim, dim);
    for j in 0..dim {
        p.set(0, j, j, Rat::one());
        p.set(j, 0, j, Rat::one());
    }
    p
}

/// Basis e, x with x o x = 0 and zero bracket.
pub fn a2() -> AlgebraData {
    AlgebraData::new(
        vec!["e".into(), "x".into()],
        Vector::basis(2, 0),
        unital_product(2),
        BilinearTensor::zero(2, 2, 2),
    )
    .expect("well formed")
}

/// Basis e, x, y; non-unit products vanish; [x, y] = x.
pub fn a3() -> AlgebraData {
    let mut bracket = BilinearTensor::zero(3, 3, 3);
    bracket.set(1, 2, 1, Rat::one());
    bracket.set(2, 1, 1, Rat::int(-1));
    AlgebraData::new(
        vec!["e".into(), "x".into(), "y".into()],
        Vector::basis(3, 0),
        unital_product(3),
        bracket,
    )
    .expect("well formed")
}

/// Basis e, x, y; non-unit products vanish; [x, y] = e. The smallest
/// non-Poisson instance in the catalog.
pub fn a3h() -> AlgebraData {
    let mut bracket = BilinearTensor::zero(3, 3, 3);
    bracket.set(1, 2, 0, Rat::one());
    bracket.set(2, 1, 0, Rat::int(-1));
    AlgebraData::new(
        vec!["e".into(), "x".into(), "y".into()],
        Vector::basis(3, 0),
        unital_product(3),
        bracket,
    )
    .expect("well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::falgebra::{is_poisson, leibnizator, verify_falgebra};

    #[test]
    fn catalog_algebras_verify() {
        for name in CATALOG_NAMES {
            let a = by_name(name).unwrap();
            let report = verify_falgebra(&a).unwrap();
            assert!(report.overall, "{name} failed:\n{}", report.summary());
            assert_eq!(report.checks.len(), 6);
        }
    }

    #[test]
    fn a3h_leibnizator_value() {
        // L(x, y, y) = [x, y o y] - [x, y] o y - y o [x, y] = -e o y - y o e = -2y
        let a = a3h();
        let x = Vector::basis(3, 1);
        let y = Vector::basis(3, 2);
        let l = leibnizator(&a, &x, &y, &y).unwrap();
        assert_eq!(l, Vector::from_ints(&[0, 0, -2]));
    }

    #[test]
    fn poisson_classification() {
        assert!(is_poisson(&a2()).unwrap().0);
        assert!(is_poisson(&a3()).unwrap().0);
        let (ok, witness) = is_poisson(&a3h()).unwrap();
        assert!(!ok);
        let (w, residual) = witness.unwrap();
        // First failing triple in lexicographic order is (x, x, y).
        assert_eq!(w, vec![1, 1, 2]);
        assert_eq!(residual, Vector::from_ints(&[0, -1, 0]));
    }
}
