#![allow(dead_code)]

use tori_core::alexpoly::{associates, cofactor_determinant, LaurentPoly, PolyMatrix, Specialization};
use tori_core::braid::{parse_braid, BraidWord};

/// Braids whose closures are standard small knots, with their Alexander
/// polynomials as ascending coefficient lists.
pub const KNOT_CORPUS: &[(&str, &str, &[i64])] = &[
    ("3_1", "2: 1 1 1", &[1, -1, 1]),
    ("4_1", "3: 1 -2 1 -2", &[1, -3, 1]),
    ("5_1", "2: 1 1 1 1 1", &[1, -1, 1, -1, 1]),
    ("5_2", "3: 1 1 1 2 -1 2", &[2, -3, 2]),
    ("6_1", "4: 1 1 2 -1 -3 2 -3", &[2, -5, 2]),
    ("6_2", "3: 1 1 1 -2 1 -2", &[1, -3, 3, -3, 1]),
    ("6_3", "3: 1 1 -2 1 -2 -2", &[1, -3, 5, -3, 1]),
    ("7_1", "2: 1 1 1 1 1 1 1", &[1, -1, 1, -1, 1, -1, 1]),
    ("3_1#3_1", "3: 1 1 1 2 2 2", &[1, -2, 3, -2, 1]),
    ("8_19", "3: 1 2 1 2 1 2 1 2", &[1, -1, 0, 1, 0, -1, 1]),
];

/// Closures with at least three components.
pub const MANY_COMPONENT_LINKS: &[&str] = &[
    "3:",
    "3: 1 1 2 2",
    "3: 1 1 2 2 1 1",
    "3: 1 2 1 2 1 2",
    "3: 1 -2 1 -2 1 -2",
    "4: 1 1 2 2 3 3",
    "4: 1 1 -2 -2 3 3 1 1",
    "4: 2 2 1 1 3 3 2 2",
    "5: 1 1 2 2 3 3 4 4",
    "4: 1 2 1 2 1 2 3 3",
];

pub fn braid(s: &str) -> BraidWord {
    parse_braid(s).unwrap()
}

pub fn univariate(var: &str, ascending: &[i64]) -> LaurentPoly {
    let terms: Vec<(i64, i64)> = ascending.iter().enumerate().map(|(e, &c)| (e as i64, c)).collect();
    LaurentPoly::univariate(var, &terms)
}

fn entry(var: &str, terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::univariate(var, terms)
}

/// Reduced Burau matrix of one generator (1-based signed index) on `n`
/// strands, in the variable `var`.
pub fn reduced_burau_generator(n: usize, letter: i64, var: &str) -> PolyMatrix {
    let d = n - 1;
    let mut m = PolyMatrix::identity(d);
    let i = letter.unsigned_abs() as usize;
    let pos = letter > 0;
    if d == 1 {
        m[(0, 0)] = if pos { entry(var, &[(1, -1)]) } else { entry(var, &[(-1, -1)]) };
        return m;
    }
    let k = i - 1; // row of the −t entry
    if pos {
        m[(k, k)] = entry(var, &[(1, -1)]);
        if k > 0 {
            m[(k, k - 1)] = entry(var, &[(1, 1)]);
        }
        if k + 1 < d {
            m[(k, k + 1)] = LaurentPoly::one();
        }
    } else {
        m[(k, k)] = entry(var, &[(-1, -1)]);
        if k > 0 {
            m[(k, k - 1)] = LaurentPoly::one();
        }
        if k + 1 < d {
            m[(k, k + 1)] = entry(var, &[(-1, 1)]);
        }
    }
    m
}

pub fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.rows();
    let mut c = PolyMatrix::zeros(n, b.cols());
    for i in 0..n {
        for j in 0..b.cols() {
            let mut s = LaurentPoly::constant(0);
            for k in 0..a.cols() {
                s = s + &(&a[(i, k)] * &b[(k, j)]);
            }
            c[(i, j)] = s;
        }
    }
    c
}

/// Product of reduced Burau matrices along the word, left to right.
pub fn reduced_burau(b: &BraidWord, var: &str) -> PolyMatrix {
    let d = b.strands() - 1;
    let mut m = PolyMatrix::identity(d);
    for &l in b.letters() {
        m = mat_mul(&m, &reduced_burau_generator(b.strands(), l, var));
    }
    m
}

/// `det(I − x·M)` by cofactor expansion.
pub fn char_det(m: &PolyMatrix, x: &LaurentPoly) -> LaurentPoly {
    let d = m.rows();
    let mut a = PolyMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let id = if i == j { LaurentPoly::one() } else { LaurentPoly::constant(0) };
            a[(i, j)] = &id - &(x * &m[(i, j)]);
        }
    }
    cofactor_determinant(&a).unwrap()
}

/// Alexander polynomial of a knot closure from the reduced Burau matrix:
/// `det(I − B) = Δ·(1 + t + … + t^(n−1))`.
pub fn burau_knot_alexander(b: &BraidWord) -> LaurentPoly {
    let n = b.strands();
    if n == 1 {
        return LaurentPoly::one();
    }
    let det = char_det(&reduced_burau(b, "t"), &LaurentPoly::one());
    let geometric = univariate("t", &vec![1; n]);
    det.div_exact(&geometric).expect("Burau determinant divisible by 1 + … + t^(n−1)")
}

/// Two-variable polynomial of a knot closure together with its axis:
/// `det(I − τ·B(t))`, braid variable `t`, axis variable `tau`.
pub fn burau_axis_alexander(b: &BraidWord) -> LaurentPoly {
    if b.strands() == 1 {
        return LaurentPoly::one();
    }
    char_det(&reduced_burau(b, "t"), &LaurentPoly::var("tau"))
}

/// Associate equality up to a relabelling of the variables of `b` onto those
/// of `a` (both over the same number of variables).
pub fn associates_up_to_relabel(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let av = a.vars().to_vec();
    let bv = b.vars().to_vec();
    if av.len() != bv.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..av.len()).collect();
    loop {
        let mut sigma = Specialization::new(&av).unwrap();
        for (k, v) in bv.iter().enumerate() {
            sigma = sigma.map_to(v, &av[idx[k]], 1).unwrap();
        }
        if associates(a, &b.specialize(&sigma).unwrap()) {
            return true;
        }
        if !next_permutation(&mut idx) {
            return false;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
