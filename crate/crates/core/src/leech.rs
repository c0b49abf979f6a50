//! The Leech lattice Λ ⊂ ℤ²⁴ in the standard scaling (minimal vectors have
//! euclidean dot 32), with the negative definite form ⟨x,y⟩ = −x·y/8.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{int, row_basis, IntMatrix};
use crate::golay::{self, OmegaPoint, PointSet, INF};

/// Integer 24-tuple indexed by point index (index 23 is ∞). Coordinates of
/// every vector this crate handles are tiny, so `i64` is ample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeechVector(pub [i64; 24]);

impl LeechVector {
    pub fn zero() -> Self {
        LeechVector([0; 24])
    }

    /// ν_A: the indicator vector of A.
    pub fn nu(set: PointSet) -> Self {
        let mut v = [0; 24];
        for p in set.points() {
            v[p.index()] = 1;
        }
        LeechVector(v)
    }

    pub fn nu_point(p: u8) -> Self {
        Self::nu(PointSet::of(&[p]))
    }

    pub fn nu_omega() -> Self {
        LeechVector([1; 24])
    }

    pub fn scale(self, k: i64) -> Self {
        LeechVector(self.0.map(|x| k * x))
    }

    pub fn at(&self, p: OmegaPoint) -> i64 {
        self.0[p.index()]
    }

    pub fn dot(&self, other: &LeechVector) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Exact halving, if every coordinate is even.
    pub fn halve(&self) -> Option<Self> {
        self.0.iter().all(|x| x % 2 == 0).then(|| LeechVector(self.0.map(|x| x / 2)))
    }
}

impl Add for LeechVector {
    type Output = LeechVector;
    fn add(self, o: LeechVector) -> LeechVector {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(o.0) {
            *a += b;
        }
        LeechVector(v)
    }
}

impl Sub for LeechVector {
    type Output = LeechVector;
    fn sub(self, o: LeechVector) -> LeechVector {
        self + (-o)
    }
}

impl Neg for LeechVector {
    type Output = LeechVector;
    fn neg(self) -> LeechVector {
        LeechVector(self.0.map(|x| -x))
    }
}

impl fmt::Display for LeechVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            OmegaPoint::all().iter().map(|&p| format!("{}:{}", p, self.at(p))).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Congruence description of Λ: common parity m, the set where vᵢ ≡ m+2
/// (mod 4) is a Golay codeword, and Σvᵢ ≡ 4m (mod 8).
pub fn contains(v: &LeechVector) -> bool {
    let m = v.0[0].rem_euclid(2);
    if v.0.iter().any(|x| x.rem_euclid(2) != m) {
        return false;
    }
    let mut mask = 0u32;
    for (i, x) in v.0.iter().enumerate() {
        if x.rem_euclid(4) == m + 2 {
            mask |= 1 << i;
        }
    }
    if !golay::is_codeword(PointSet(mask)) {
        return false;
    }
    v.0.iter().sum::<i64>().rem_euclid(8) == 4 * m
}

/// ⟨v,w⟩ = −v·w/8 for members of Λ.
pub fn inner(v: &LeechVector, w: &LeechVector) -> Result<i64> {
    for x in [v, w] {
        if !contains(x) {
            return Err(Error::NotInLeech(x.to_string()));
        }
    }
    Ok(-v.dot(w) / 8)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    Zero,
    Lambda4(&'static str),
    Lambda6(&'static str),
    Other,
}

const LAMBDA4_SHAPES: [(&str, &[(i64, usize)]); 3] = [
    ("(±2^8,0^16)", &[(2, 8), (0, 16)]),
    ("(±3,±1^23)", &[(3, 1), (1, 23)]),
    ("(±4^2,0^22)", &[(4, 2), (0, 22)]),
];

const LAMBDA6_SHAPES: [(&str, &[(i64, usize)]); 4] = [
    ("(±2^12,0^12)", &[(2, 12), (0, 12)]),
    ("(±3^3,±1^21)", &[(3, 3), (1, 21)]),
    ("(±4,±2^8,0^15)", &[(4, 1), (2, 8), (0, 15)]),
    ("(±5,±1^23)", &[(5, 1), (1, 23)]),
];

fn abs_profile(v: &LeechVector) -> Vec<(i64, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for x in v.0 {
        *counts.entry(x.abs()).or_insert(0usize) += 1;
    }
    counts.into_iter().rev().collect()
}

/// Norm class of a member of Λ, with the coordinate shape checked against the
/// known lists for norms 4 and 6.
pub fn shape_class(v: &LeechVector) -> Result<ShapeClass> {
    if !contains(v) {
        return Err(Error::NotInLeech(v.to_string()));
    }
    let norm = v.dot(v) / 8;
    let profile = abs_profile(v);
    let lookup = |shapes: &[(&'static str, &[(i64, usize)])]| {
        shapes.iter().find(|(_, s)| profile == s.to_vec()).map(|(name, _)| *name)
    };
    let bad = || Error::UnexpectedShape { norm, shape: format!("{profile:?}") };
    match norm {
        0 => Ok(ShapeClass::Zero),
        4 => lookup(&LAMBDA4_SHAPES).map(ShapeClass::Lambda4).ok_or_else(bad),
        6 => lookup(&LAMBDA6_SHAPES).map(ShapeClass::Lambda6).ok_or_else(bad),
        _ => Ok(ShapeClass::Other),
    }
}

/// ℤ-basis of Λ (rows, HNF) generated by the 2ν_K and ν_Ω − 4ν_∞.
pub fn basis() -> &'static IntMatrix {
    static CELL: OnceLock<IntMatrix> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut rows: Vec<Vec<BigInt>> = golay::build_steiner()
            .octads()
            .iter()
            .map(|k| LeechVector::nu(k.set()).scale(2).0.iter().map(|&x| int(x)).collect())
            .collect();
        let special = LeechVector::nu_omega() - LeechVector::nu_point(INF).scale(4);
        rows.push(special.0.iter().map(|&x| int(x)).collect());
        row_basis(&IntMatrix::from_rows(24, &rows))
    })
}

/// Gram matrix ⟨bᵢ,bⱼ⟩ of [`basis`].
pub fn basis_gram() -> &'static IntMatrix {
    static CELL: OnceLock<IntMatrix> = OnceLock::new();
    CELL.get_or_init(|| {
        let b = basis();
        let raw = &(b * &b.transpose());
        let mut g = IntMatrix::zeros(24, 24);
        for i in 0..24 {
            for j in 0..24 {
                g.set(i, j, -raw.get(i, j) / 8);
            }
        }
        g
    })
}

/// Coordinates of `v` over [`basis`].
pub fn coordinates(v: &LeechVector) -> Result<Vec<BigInt>> {
    let b = basis();
    let mut rem: Vec<BigInt> = v.0.iter().map(|&x| int(x)).collect();
    let mut coeffs = vec![BigInt::zero(); b.rows()];
    for (i, c) in coeffs.iter_mut().enumerate() {
        let p = b.row(i).iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
        let piv = b.get(i, p);
        if !(&rem[p] % piv).is_zero() {
            return Err(Error::NotInLeech(v.to_string()));
        }
        *c = &rem[p] / piv;
        for (j, r) in rem.iter_mut().enumerate() {
            *r -= &*c * b.get(i, j);
        }
    }
    if rem.iter().any(|x| !x.is_zero()) {
        return Err(Error::NotInLeech(v.to_string()));
    }
    Ok(coeffs)
}

pub fn from_coordinates(c: &[BigInt]) -> LeechVector {
    let v = basis().transpose().mul_vec(c);
    let mut out = [0i64; 24];
    for (o, x) in out.iter_mut().zip(v) {
        *o = i64::try_from(x).expect("Leech coordinates fit in i64");
    }
    LeechVector(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn octad(pts: &[u8]) -> LeechVector {
        LeechVector::nu(PointSet::of(pts)).scale(2)
    }

    #[test]
    fn membership_examples() {
        assert!(contains(&octad(&[INF, 0, 1, 3, 12, 15, 21, 22])));
        let special = LeechVector::nu_omega() - LeechVector::nu_point(INF).scale(4);
        assert!(contains(&special));
        assert!(!contains(&octad(&[INF, 0, 1, 2, 3, 4, 5, 6])));
        assert!(!contains(&LeechVector::nu_point(0)));
    }

    #[test]
    fn inner_examples() {
        let k = octad(&[INF, 0, 1, 3, 12, 15, 21, 22]);
        assert_eq!(inner(&k, &k).unwrap(), -4);
        let v = LeechVector::nu_point(INF).scale(4) + LeechVector::nu_omega();
        assert_eq!(inner(&v, &v).unwrap(), -6);
        assert_eq!(inner(&LeechVector::zero(), &v).unwrap(), 0);
        assert!(inner(&LeechVector::nu_point(0), &v).is_err());
    }

    #[test]
    fn shape_examples() {
        let k = octad(&[INF, 0, 1, 3, 12, 15, 21, 22]);
        assert_eq!(shape_class(&k).unwrap(), ShapeClass::Lambda4("(±2^8,0^16)"));
        let special = LeechVector::nu_omega() - LeechVector::nu_point(INF).scale(4);
        assert_eq!(shape_class(&special).unwrap(), ShapeClass::Lambda4("(±3,±1^23)"));
        assert_eq!(shape_class(&LeechVector::zero()).unwrap(), ShapeClass::Zero);
        let six = LeechVector::nu_point(INF).scale(4) + LeechVector::nu_omega();
        assert_eq!(shape_class(&six).unwrap(), ShapeClass::Lambda6("(±5,±1^23)"));
    }

    #[test]
    fn basis_is_unimodular() {
        assert_eq!(basis().rows(), 24);
        assert_eq!(basis_gram().det(), int(1));
        for i in 0..24 {
            assert_eq!(basis_gram().get(i, i) % 2, int(0));
        }
        let v = octad(&[INF, 0, 1, 2, 3, 5, 14, 17]);
        assert_eq!(from_coordinates(&coordinates(&v).unwrap()), v);
    }

    fn member() -> impl Strategy<Value = LeechVector> {
        proptest::collection::vec(-3i64..=3, 24).prop_map(|c| {
            from_coordinates(&c.into_iter().map(int).collect::<Vec<_>>())
        })
    }

    proptest! {
        #[test]
        fn lattice_axioms(a in member(), b in member()) {
            prop_assert!(contains(&a));
            prop_assert!(contains(&(a + b)));
            prop_assert!(contains(&(a - b)));
            prop_assert!(contains(&-a));
            prop_assert_eq!(a.dot(&b) % 8, 0);
            prop_assert_eq!(a.dot(&a) % 16, 0);
        }
    }
}
