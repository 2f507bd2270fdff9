mod common;

use common::*;
use num_bigint::BigInt;
use tori_core::alexpoly::{closure_alexander, AssociateClass};
use tori_core::swring::squared_symmetric;

#[test]
fn known_polynomials() {
    for (name, word, coeffs) in KNOT_CORPUS {
        let d = closure_alexander(&braid(word)).unwrap();
        assert_eq!(d, AssociateClass::new(univariate("t", coeffs)), "{name}: got {d}");
    }
}

#[test]
fn torres_symmetry_and_unit_value() {
    for (name, word, _) in KNOT_CORPUS {
        let d = closure_alexander(&braid(word)).unwrap();
        let p = d.poly();
        assert_eq!(AssociateClass::new(p.invert_all()), d, "{name}");
        let v = p.eval_at_one();
        assert!(v == BigInt::from(1) || v == BigInt::from(-1), "{name}: Δ(1) = {v}");
        let sym = squared_symmetric(&d).unwrap();
        assert_eq!(sym.invert_all(), sym, "{name}");
        assert_eq!(sym.eval_at_one(), BigInt::from(1), "{name}");
    }
}

#[test]
fn trefoil_symmetrized() {
    let d = closure_alexander(&braid("2: 1 1 1")).unwrap();
    assert_eq!(d.poly(), &univariate("t", &[1, -1, 1]));
    // symmetrization works at squared variables: t² − 1 + t⁻²
    let expected = tori_core::LaurentPoly::univariate("t", &[(2, 1), (0, -1), (-2, 1)]);
    assert_eq!(d.symmetrized().unwrap(), expected);
}

#[test]
fn mirror_images_share_the_polynomial() {
    for (name, word, _) in KNOT_CORPUS {
        let b = braid(word);
        let mirror = tori_core::BraidWord::new(b.strands(), b.letters().iter().map(|l| -l).collect()).unwrap();
        assert_eq!(closure_alexander(&mirror).unwrap(), closure_alexander(&b).unwrap(), "{name}");
    }
}
