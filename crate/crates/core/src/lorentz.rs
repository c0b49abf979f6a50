//! L = Λ ⊥ U, the even unimodular lattice of signature (1,25).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{int, IntMatrix};
use crate::golay::{PointSet, INF};
use crate::leech::{self, LeechVector, ShapeClass};

/// λ + m·f + n·g with f² = g² = 0, f·g = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LorentzVector {
    pub lambda: LeechVector,
    pub m: i64,
    pub n: i64,
}

impl LorentzVector {
    pub fn new(lambda: LeechVector, m: i64, n: i64) -> Self {
        LorentzVector { lambda, m, n }
    }

    pub fn zero() -> Self {
        Self::new(LeechVector::zero(), 0, 0)
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(self.lambda.scale(k), k * self.m, k * self.n)
    }

    pub fn halve(&self) -> Option<Self> {
        let lambda = self.lambda.halve()?;
        (self.m % 2 == 0 && self.n % 2 == 0).then(|| Self::new(lambda, self.m / 2, self.n / 2))
    }

    pub fn is_integral(&self) -> bool {
        leech::contains(&self.lambda)
    }

    /// Coordinates over the basis of L: the Leech basis, then f, then g.
    pub fn coordinates(&self) -> Result<Vec<BigInt>> {
        let mut c = leech::coordinates(&self.lambda)?;
        c.push(int(self.m));
        c.push(int(self.n));
        Ok(c)
    }

    pub fn from_coordinates(c: &[BigInt]) -> Self {
        assert_eq!(c.len(), 26);
        let m = i64::try_from(&c[24]).expect("fits i64");
        let n = i64::try_from(&c[25]).expect("fits i64");
        Self::new(leech::from_coordinates(&c[..24]), m, n)
    }
}

impl Add for LorentzVector {
    type Output = LorentzVector;
    fn add(self, o: Self) -> Self {
        Self::new(self.lambda + o.lambda, self.m + o.m, self.n + o.n)
    }
}

impl Sub for LorentzVector {
    type Output = LorentzVector;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for LorentzVector {
    type Output = LorentzVector;
    fn neg(self) -> Self {
        Self::new(-self.lambda, -self.m, -self.n)
    }
}

impl fmt::Display for LorentzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.lambda, self.m, self.n)
    }
}

/// ⟨λ_a,λ_b⟩ + m_a n_b + n_a m_b. Both vectors must be integral; the Leech
/// part is −λ_a·λ_b/8.
pub fn bilinear(a: &LorentzVector, b: &LorentzVector) -> i64 {
    let d = a.lambda.dot(&b.lambda);
    debug_assert_eq!(d % 8, 0, "bilinear form on non-integral vectors");
    -d / 8 + a.m * b.n + a.n * b.m
}

/// Gram matrix of L over the basis used by [`LorentzVector::coordinates`];
/// determinant −1.
pub fn gram() -> &'static IntMatrix {
    static CELL: OnceLock<IntMatrix> = OnceLock::new();
    CELL.get_or_init(|| {
        let lg = leech::basis_gram();
        let mut g = IntMatrix::zeros(26, 26);
        for i in 0..24 {
            for j in 0..24 {
                g.set(i, j, lg.get(i, j).clone());
            }
        }
        g.set(24, 25, int(1));
        g.set(25, 24, int(1));
        g
    })
}

/// A vector (λ, 1, −1−⟨λ,λ⟩/2); always of square −2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeechRoot(LorentzVector);

impl LeechRoot {
    pub fn vector(&self) -> LorentzVector {
        self.0
    }

    pub fn lambda(&self) -> LeechVector {
        self.0.lambda
    }
}

pub fn leech_root(lambda: LeechVector) -> Result<LeechRoot> {
    let norm = leech::inner(&lambda, &lambda)?;
    Ok(LeechRoot(LorentzVector::new(lambda, 1, -1 - norm / 2)))
}

/// Pairing of two Leech roots, computed directly and cross-checked against
/// the rule (r,r′) = 0 when λ−λ′ ∈ Λ₄ and 1 when λ−λ′ ∈ Λ₆.
pub fn root_pairing(r: &LeechRoot, s: &LeechRoot) -> Result<i64> {
    let direct = bilinear(&r.0, &s.0);
    let rule = match leech::shape_class(&(r.lambda() - s.lambda()))? {
        ShapeClass::Zero => Some(-2),
        ShapeClass::Lambda4(_) => Some(0),
        ShapeClass::Lambda6(_) => Some(1),
        ShapeClass::Other => None,
    };
    match rule {
        Some(rule) if rule != direct => Err(Error::PairingMismatch { direct, rule }),
        _ => Ok(direct),
    }
}

/// ω = (0,0,1).
pub fn weyl_vector() -> LorentzVector {
    LorentzVector::new(LeechVector::zero(), 0, 1)
}

/// The root (2ν_K, 1, 1) of an octad K.
pub fn octad_root(k: PointSet) -> Result<LeechRoot> {
    leech_root(LeechVector::nu(k).scale(2))
}

/// 4ν_p + ν_Ω
pub fn special_lambda(p: u8) -> LeechVector {
    LeechVector::nu_point(p).scale(4) + LeechVector::nu_omega()
}

/// The ten roots x, z, y, r₀, x₀, x₁, …, x₅ spanning R, in that order.
pub fn r_generators() -> Vec<(&'static str, LeechRoot)> {
    let root = |l: LeechVector| leech_root(l).expect("named vector lies in Λ");
    let mut v = vec![
        ("x", root(special_lambda(INF))),
        ("z", root(LeechVector::zero())),
        ("y", root(special_lambda(0))),
        ("r0", root(LeechVector::nu(PointSet::of(&K_OCTADS[0])).scale(2))),
        ("x0", root(LeechVector::nu_point(INF).scale(4) + LeechVector::nu_point(0).scale(4))),
    ];
    let names = ["x1", "x2", "x3", "x4", "x5"];
    for (i, name) in names.iter().enumerate() {
        v.push((name, root(LeechVector::nu(PointSet::of(&K_OCTADS[i + 1])).scale(2))));
    }
    v
}

/// K₀, K₁, …, K₅.
pub const K_OCTADS: [[u8; 8]; 6] = [
    [INF, 1, 2, 3, 4, 6, 15, 18],
    [INF, 0, 1, 2, 3, 5, 14, 17],
    [INF, 0, 1, 2, 4, 13, 16, 22],
    [INF, 0, 1, 2, 6, 7, 19, 21],
    [INF, 0, 1, 2, 8, 11, 12, 18],
    [INF, 0, 1, 2, 9, 10, 15, 20],
];

/// θ = (x + y + x₀ + … + x₅)/2.
pub fn theta() -> LorentzVector {
    let gens = r_generators();
    let sum = gens
        .iter()
        .filter(|(n, _)| !matches!(*n, "z" | "r0"))
        .fold(LorentzVector::zero(), |acc, (_, r)| acc + r.vector());
    sum.halve().expect("θ is integral")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bilinear_examples() {
        let z = leech_root(LeechVector::zero()).unwrap().vector();
        assert_eq!(z, LorentzVector::new(LeechVector::zero(), 1, -1));
        assert_eq!(bilinear(&z, &z), -2);
        assert_eq!(bilinear(&weyl_vector(), &weyl_vector()), 0);
        let x = leech_root(special_lambda(INF)).unwrap().vector();
        let y = leech_root(special_lambda(0)).unwrap().vector();
        assert_eq!((x.m, x.n), (1, 2));
        assert_eq!(bilinear(&x, &y), 0);
        let xi = octad_root(PointSet::of(&K_OCTADS[1])).unwrap().vector();
        assert_eq!((xi.m, xi.n), (1, 1));
    }

    #[test]
    fn r_diagram() {
        let g = r_generators();
        let chain = ["x", "z", "y", "r0", "x0"];
        for (i, (a, ra)) in g.iter().enumerate() {
            assert_eq!(bilinear(&weyl_vector(), &ra.vector()), 1);
            for (j, (b, rb)) in g.iter().enumerate() {
                let expected = if i == j {
                    -2
                } else {
                    let pa = chain.iter().position(|c| c == a);
                    let pb = chain.iter().position(|c| c == b);
                    match (pa, pb) {
                        (Some(p), Some(q)) if p.abs_diff(q) == 1 => 1,
                        _ => 0,
                    }
                };
                assert_eq!(root_pairing(ra, rb).unwrap(), expected, "{a} {b}");
            }
        }
    }

    #[test]
    fn l_is_unimodular() {
        assert_eq!(gram().det(), int(-1));
        let t = theta();
        let c = t.coordinates().unwrap();
        assert_eq!(LorentzVector::from_coordinates(&c), t);
        let gc = gram().mul_vec(&c);
        let q: BigInt = c.iter().zip(&gc).map(|(a, b)| a * b).sum();
        assert_eq!(q, int(bilinear(&t, &t)));
    }

    proptest! {
        #[test]
        fn roots_have_square_minus_two(c in proptest::collection::vec(-3i64..=3, 24)) {
            let lambda = leech::from_coordinates(&c.into_iter().map(int).collect::<Vec<_>>());
            let r = leech_root(lambda).unwrap();
            prop_assert_eq!(bilinear(&r.vector(), &r.vector()), -2);
            prop_assert_eq!(bilinear(&weyl_vector(), &r.vector()), 1);
        }
    }
}
