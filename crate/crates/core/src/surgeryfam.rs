//! Torus-surgery families: the linear surgery formula and exact comparison
//! of the families it generates.
//!
//! A family `{p·A + q·B + r·C : p, q, r ∈ ℤ}` is stored as its generating
//! triple. Membership and equality reduce to integer linear algebra on
//! coefficient vectors.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::alexpoly::{Exponent, LaurentPoly};

/// Values of the reduced SW invariant at surgery coefficients `(1,0,0)`,
/// `(0,1,0)` and `(0,0,1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurgeryBasisTriple {
    #[serde(rename = "A")]
    pub a: LaurentPoly,
    #[serde(rename = "B")]
    pub b: LaurentPoly,
    #[serde(rename = "C")]
    pub c: LaurentPoly,
}

impl SurgeryBasisTriple {
    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> Self {
        SurgeryBasisTriple { a, b, c }
    }

    pub fn generators(&self) -> [&LaurentPoly; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// Variables of all three entries, in first-seen order.
    pub fn vars(&self) -> Vec<String> {
        let mut vars: Vec<String> = Vec::new();
        for p in self.generators() {
            for v in p.vars() {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        vars
    }
}

/// `p·A + q·B + r·C`.
pub fn mms_evaluate(tr: &SurgeryBasisTriple, p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>) -> LaurentPoly {
    let vars = tr.vars();
    let lift = |x: &LaurentPoly| x.over_vars(&vars).expect("union of variables");
    &(&lift(&tr.a).scale(&p.into()) + &lift(&tr.b).scale(&q.into())) + &lift(&tr.c).scale(&r.into())
}

/// Some integer `(p, q, r)` with `mms_evaluate(tr, p, q, r) = target`, or
/// `None` if there is none.
pub fn family_membership(tr: &SurgeryBasisTriple, target: &LaurentPoly) -> Option<[BigInt; 3]> {
    let mut vars = tr.vars();
    for v in target.vars() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    let lift = |x: &LaurentPoly| x.over_vars(&vars).expect("union of variables");
    let cols: Vec<LaurentPoly> = tr.generators().into_iter().map(lift).collect();
    let rhs = lift(target);
    let support: BTreeSet<Exponent> = cols
        .iter()
        .chain(std::iter::once(&rhs))
        .flat_map(|p| p.terms().map(|(e, _)| e.clone()).collect::<Vec<_>>())
        .collect();
    let matrix: Vec<Vec<BigInt>> = support.iter().map(|e| cols.iter().map(|p| p.coeff(e)).collect()).collect();
    let b: Vec<BigInt> = support.iter().map(|e| rhs.coeff(e)).collect();
    let x = solve_integer(&matrix, 3, &b)?;
    Some([x[0].clone(), x[1].clone(), x[2].clone()])
}

/// Integer solution of `M x = b` for an integer matrix with `k` columns, if
/// any.
///
/// Column operations by extended gcd bring `M` to column echelon form
/// `H = M U` with `U` unimodular; `H y = b` is then solved by forward
/// substitution and `x = U y`.
pub fn solve_integer(m: &[Vec<BigInt>], k: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows = m.len();
    assert_eq!(rows, b.len());
    assert!(m.iter().all(|r| r.len() == k), "ragged matrix");
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    // Column ops act on h (rows × k) and u (k × k) alike.
    let combine = |mat: &mut Vec<Vec<BigInt>>, c1: usize, c2: usize, a: &BigInt, bb: &BigInt, c: &BigInt, d: &BigInt| {
        // (col c1, col c2) ← (a·c1 + bb·c2, c·c1 + d·c2)
        for row in mat.iter_mut() {
            let x = row[c1].clone();
            let y = row[c2].clone();
            row[c1] = a * &x + bb * &y;
            row[c2] = c * &x + d * &y;
        }
    };

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next = 0;
    for r in 0..rows {
        if next == k {
            break;
        }
        for j in next + 1..k {
            if h[r][j].is_zero() {
                continue;
            }
            let x = h[r][next].clone();
            let y = h[r][j].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let (xg, yg) = (&x / &g, &y / &g);
            // [s, -y/g; t, x/g] has determinant 1
            let neg_yg = -yg;
            combine(&mut h, next, j, &s, &t, &neg_yg, &xg);
            combine(&mut u, next, j, &s, &t, &neg_yg, &xg);
        }
        if !h[r][next].is_zero() {
            pivots.push((r, next));
            next += 1;
        }
    }

    let mut y = vec![BigInt::zero(); k];
    let mut pivot_iter = pivots.iter().peekable();
    for r in 0..rows {
        let mut residual = b[r].clone();
        let solved = pivots.iter().take_while(|&&(pr, _)| pr < r).count();
        for j in 0..solved {
            residual -= &h[r][j] * &y[j];
        }
        match pivot_iter.peek() {
            Some(&&(pr, pc)) if pr == r => {
                let (q, rem) = residual.div_rem(&h[r][pc]);
                if !rem.is_zero() {
                    return None;
                }
                y[pc] = q;
                pivot_iter.next();
            }
            _ => {
                if !residual.is_zero() {
                    return None;
                }
            }
        }
    }
    Some((0..k).map(|i| (0..k).map(|j| &u[i][j] * &y[j]).sum()).collect())
}

/// Outcome of comparing two families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub equal: bool,
    /// A generator of one family lying outside the other.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<LaurentPoly>,
}

/// Whether the two triples generate the same family. Generators of `tr1`
/// are tested against `tr2` first, then the other way round.
pub fn family_equal(tr1: &SurgeryBasisTriple, tr2: &SurgeryBasisTriple) -> FamilyVerdict {
    let first_outside = |gens: &SurgeryBasisTriple, fam: &SurgeryBasisTriple| {
        gens.generators().into_iter().find(|g| family_membership(fam, g).is_none()).cloned()
    };
    match first_outside(tr1, tr2).or_else(|| first_outside(tr2, tr1)) {
        Some(w) => FamilyVerdict { equal: false, witness: Some(w) },
        None => FamilyVerdict { equal: true, witness: None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tf(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate("t_F", terms)
    }

    fn c_entry() -> LaurentPoly {
        tf(&[(2, 1), (0, -1), (-2, 1)]).pow(2)
    }

    fn t_fixture() -> SurgeryBasisTriple {
        SurgeryBasisTriple::new(LaurentPoly::constant(0), LaurentPoly::constant(0), c_entry())
    }

    fn t_prime_fixture() -> SurgeryBasisTriple {
        SurgeryBasisTriple::new(LaurentPoly::constant(0), LaurentPoly::one(), c_entry())
    }

    fn ints(v: [i64; 3]) -> [BigInt; 3] {
        v.map(BigInt::from)
    }

    #[test]
    fn evaluate_examples() {
        let t = t_fixture();
        assert_eq!(mms_evaluate(&t, 0, 0, 1), c_entry());
        for r in -3..=3 {
            assert_eq!(mms_evaluate(&t, 5, 7, r), c_entry().scale(&BigInt::from(r)));
        }
        let tp = t_prime_fixture();
        for k in -3..=3 {
            assert_eq!(mms_evaluate(&tp, 0, k, 1), &LaurentPoly::constant(k) + &c_entry());
        }
    }

    #[test]
    fn membership_examples() {
        let t = t_fixture();
        assert_eq!(family_membership(&t, &c_entry()), Some(ints([0, 0, 1])));
        assert_eq!(family_membership(&t, &LaurentPoly::one()), None);
        assert_eq!(family_membership(&t_prime_fixture(), &LaurentPoly::one()), Some(ints([0, 1, 0])));
        assert_eq!(family_membership(&t, &LaurentPoly::constant(0)), Some(ints([0, 0, 0])));
        // a variable outside the alphabet can only be reached by zero
        assert_eq!(family_membership(&t, &LaurentPoly::var("S")), None);
    }

    #[test]
    fn equality_examples() {
        let t = t_fixture();
        let tp = t_prime_fixture();
        assert_eq!(family_equal(&t, &t), FamilyVerdict { equal: true, witness: None });
        assert_eq!(family_equal(&t, &tp), FamilyVerdict { equal: false, witness: Some(LaurentPoly::one()) });
        assert_eq!(family_equal(&tp, &t), FamilyVerdict { equal: false, witness: Some(LaurentPoly::one()) });
        let a = tf(&[(1, 2), (-1, 2)]);
        let b = tf(&[(0, 3)]);
        let tr = SurgeryBasisTriple::new(a.clone(), b.clone(), a.clone());
        let permuted = SurgeryBasisTriple::new(tr.c.clone(), tr.b.clone(), tr.a.clone());
        assert!(family_equal(&tr, &permuted).equal);
    }

    #[test]
    fn gcd_requires_integer_combination() {
        // 2ℤ + 3ℤ = ℤ, but 4ℤ + 6ℤ = 2ℤ
        let one = LaurentPoly::one();
        let tr = SurgeryBasisTriple::new(one.scale(&2.into()), one.scale(&3.into()), LaurentPoly::constant(0));
        let x = family_membership(&tr, &one).unwrap();
        assert_eq!(mms_evaluate(&tr, x[0].clone(), x[1].clone(), x[2].clone()), one);
        let tr = SurgeryBasisTriple::new(one.scale(&4.into()), one.scale(&6.into()), LaurentPoly::constant(0));
        assert_eq!(family_membership(&tr, &one), None);
        assert!(family_membership(&tr, &one.scale(&2.into())).is_some());
    }

    #[test]
    fn triple_json() {
        let t = t_fixture();
        let v = serde_json::to_value(&t).unwrap();
        assert!(v.get("A").is_some() && v.get("B").is_some() && v.get("C").is_some());
        assert_eq!(serde_json::from_value::<SurgeryBasisTriple>(v).unwrap(), t);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((prop::collection::vec(-2i64..=2, 2), -5i64..=5), 0..5)
            .prop_map(|terms| LaurentPoly::from_terms(&["x", "y"], terms).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = SurgeryBasisTriple> {
        (arb_poly(), arb_poly(), arb_poly()).prop_map(|(a, b, c)| SurgeryBasisTriple::new(a, b, c))
    }

    fn arb_unimodular() -> impl Strategy<Value = [[i64; 3]; 3]> {
        // product of random elementary matrices and a permutation
        (prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..6), 0usize..6).prop_map(|(ops, perm)| {
            let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
            for (i, j, c) in ops {
                if i != j {
                    let row = m[j];
                    for (x, y) in m[i].iter_mut().zip(row) {
                        *x += c * y;
                    }
                }
            }
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let p = perms[perm];
            [m[p[0]], m[p[1]], m[p[2]]]
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_linear(tr in arb_triple(), a in prop::array::uniform3(-50i64..50), b in prop::array::uniform3(-50i64..50)) {
            let lhs = mms_evaluate(&tr, a[0] + b[0], a[1] + b[1], a[2] + b[2]);
            let rhs = &mms_evaluate(&tr, a[0], a[1], a[2]) + &mms_evaluate(&tr, b[0], b[1], b[2]);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn membership_round_trip(tr in arb_triple(), c in prop::array::uniform3(-20i64..20)) {
            let target = mms_evaluate(&tr, c[0], c[1], c[2]);
            let x = family_membership(&tr, &target).expect("member by construction");
            prop_assert_eq!(mms_evaluate(&tr, x[0].clone(), x[1].clone(), x[2].clone()), target);
        }

        #[test]
        fn equality_is_reflexive_and_symmetric(t1 in arb_triple(), t2 in arb_triple()) {
            prop_assert!(family_equal(&t1, &t1).equal);
            prop_assert_eq!(family_equal(&t1, &t2).equal, family_equal(&t2, &t1).equal);
        }

        #[test]
        fn equality_survives_unimodular_change(tr in arb_triple(), u in arb_unimodular()) {
            let row = |r: [i64; 3]| mms_evaluate(&tr, r[0], r[1], r[2]);
            let changed = SurgeryBasisTriple::new(row(u[0]), row(u[1]), row(u[2]));
            let v = family_equal(&tr, &changed);
            prop_assert!(v.equal, "{:?}", v.witness);
        }

        #[test]
        fn solver_agrees_with_brute_force(
            m in prop::collection::vec(prop::collection::vec(-4i64..=4, 2), 1..4),
            b in prop::collection::vec(-6i64..=6, 3),
        ) {
            let rows = m.len();
            let mb: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
            let bb: Vec<BigInt> = b[..rows].iter().map(|&x| BigInt::from(x)).collect();
            let found = solve_integer(&mb, 2, &bb);
            if let Some(x) = &found {
                for (r, row) in mb.iter().enumerate() {
                    let lhs: BigInt = row.iter().zip(x).map(|(a, b)| a * b).sum();
                    prop_assert_eq!(&lhs, &bb[r]);
                }
            }
            // any solution with small entries must have been found
            let mut exists = false;
            for x0 in -30i64..=30 {
                for x1 in -30i64..=30 {
                    if m.iter().zip(&b).all(|(row, &bv)| row[0] * x0 + row[1] * x1 == bv) {
                        exists = true;
                    }
                }
            }
            if exists {
                prop_assert!(found.is_some());
            }
        }
    }
}
