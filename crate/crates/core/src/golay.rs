//! The Steiner system S(5,8,24) on Ω = P¹(F₂₃) and the binary Golay code.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Index used for the point ∞.
pub const INF: u8 = 23;

/// A point of P¹(F₂₃): `0..=22` are finite, `23` is ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OmegaPoint(u8);

impl OmegaPoint {
    pub const INFINITY: OmegaPoint = OmegaPoint(INF);

    pub fn new(index: u8) -> Self {
        assert!(index < 24, "point index out of range");
        OmegaPoint(index)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_infinity(self) -> bool {
        self.0 == INF
    }

    /// All 24 points in canonical order (∞ first).
    pub fn all() -> Vec<OmegaPoint> {
        std::iter::once(Self::INFINITY).chain((0..23).map(OmegaPoint)).collect()
    }

    fn sort_key(self) -> u8 {
        if self.0 == INF {
            0
        } else {
            self.0 + 1
        }
    }

    /// t ↦ t+1
    pub fn shift(self) -> Self {
        if self.0 == INF {
            self
        } else {
            OmegaPoint((self.0 + 1) % 23)
        }
    }

    /// t ↦ −1/t, with 0 ↔ ∞
    pub fn neg_inverse(self) -> Self {
        match self.0 {
            INF => OmegaPoint(0),
            0 => Self::INFINITY,
            t => {
                let inv = (1..23u32).find(|&s| (s * t as u32) % 23 == 1).expect("F23 is a field");
                OmegaPoint(((23 - inv) % 23) as u8)
            }
        }
    }
}

impl PartialOrd for OmegaPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OmegaPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for OmegaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "∞")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// A subset of Ω as a 24-bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PointSet(pub u32);

impl PointSet {
    pub const OMEGA: PointSet = PointSet((1 << 24) - 1);

    /// Builds a set from point indices (`INF` = 23 for ∞).
    pub fn of(indices: &[u8]) -> Self {
        PointSet(indices.iter().fold(0, |m, &i| {
            assert!(i < 24, "point index out of range");
            m | (1 << i)
        }))
    }

    pub fn from_points(points: &[OmegaPoint]) -> Self {
        PointSet(points.iter().fold(0, |m, p| m | (1 << p.0)))
    }

    /// Parses a comma-separated list such as `∞,0,1,3`; `inf` and `i` also
    /// denote ∞.
    pub fn parse(s: &str) -> Result<Self> {
        let mut m = 0u32;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i = match tok {
                "∞" | "inf" | "i" | "oo" => INF,
                t => t
                    .parse::<u8>()
                    .ok()
                    .filter(|&v| v < 23)
                    .ok_or_else(|| Error::Parse(format!("bad point '{t}'")))?,
            };
            m |= 1 << i;
        }
        Ok(PointSet(m))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: OmegaPoint) -> bool {
        self.0 >> p.0 & 1 == 1
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn sym_diff(self, other: PointSet) -> PointSet {
        PointSet(self.0 ^ other.0)
    }

    pub fn complement(self) -> PointSet {
        PointSet(!self.0 & Self::OMEGA.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Points in canonical order (∞ first).
    pub fn points(self) -> Vec<OmegaPoint> {
        OmegaPoint::all().into_iter().filter(|&p| self.contains(p)).collect()
    }

    pub fn map(self, f: impl Fn(OmegaPoint) -> OmegaPoint) -> PointSet {
        PointSet::from_points(&self.points().into_iter().map(f).collect::<Vec<_>>())
    }

    /// Sort key comparing the canonical point lists lexicographically.
    pub fn lex_key(self) -> Vec<u8> {
        self.points().into_iter().map(OmegaPoint::sort_key).collect()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An 8-element subset of Ω. Being in the Steiner system is checked by
/// [`is_octad`], not assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Octad(PointSet);

impl Octad {
    pub fn new(set: PointSet) -> Result<Self> {
        if set.len() != 8 {
            return Err(Error::Inconsistent(format!("{set} has {} points, not 8", set.len())));
        }
        Ok(Octad(set))
    }

    pub fn set(self) -> PointSet {
        self.0
    }

    pub fn points(self) -> Vec<OmegaPoint> {
        self.0.points()
    }
}

impl PartialOrd for Octad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Octad {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.lex_key().cmp(&other.0.lex_key())
    }
}

impl fmt::Display for Octad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug)]
pub struct SteinerSystem {
    octads: Vec<Octad>,
    index: HashSet<PointSet>,
}

impl SteinerSystem {
    pub fn octads(&self) -> &[Octad] {
        &self.octads
    }

    pub fn len(&self) -> usize {
        self.octads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.octads.is_empty()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.index.contains(&s)
    }
}

pub const BASE_OCTAD: [u8; 8] = [INF, 0, 1, 3, 12, 15, 21, 22];

/// Orbit of the base octad under ⟨t↦t+1, t↦−1/t⟩ = PSL(2,23), cached.
pub fn build_steiner() -> &'static SteinerSystem {
    static CELL: OnceLock<SteinerSystem> = OnceLock::new();
    CELL.get_or_init(|| {
        let base = PointSet::of(&BASE_OCTAD);
        let mut seen = HashSet::from([base]);
        let mut queue = VecDeque::from([base]);
        while let Some(k) = queue.pop_front() {
            for image in [k.map(OmegaPoint::shift), k.map(OmegaPoint::neg_inverse)] {
                if seen.insert(image) {
                    queue.push_back(image);
                }
            }
        }
        let mut octads: Vec<Octad> = seen.iter().map(|&s| Octad(s)).collect();
        octads.sort();
        SteinerSystem { octads, index: seen }
    })
}

pub fn is_octad(s: PointSet) -> bool {
    s.len() == 8 && build_steiner().contains(s)
}

/// All octads containing `s`, in canonical order.
pub fn octads_through(s: PointSet) -> Result<Vec<Octad>> {
    if s.len() > 5 {
        return Err(Error::TooManyPoints(s.len()));
    }
    Ok(build_steiner().octads().iter().copied().filter(|k| s.is_subset(k.set())).collect())
}

/// The Golay code: the F₂-span of the octads, 4096 words.
pub fn golay_code() -> &'static HashSet<u32> {
    static CELL: OnceLock<HashSet<u32>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut code = HashSet::from([0u32]);
        for k in build_steiner().octads() {
            let m = k.set().0;
            if !code.contains(&m) {
                let shifted: Vec<u32> = code.iter().map(|c| c ^ m).collect();
                code.extend(shifted);
            }
        }
        code
    })
}

pub fn is_codeword(s: PointSet) -> bool {
    golay_code().contains(&s.0)
}

/// Weight distribution of the Golay code.
pub fn weight_distribution() -> HashMap<usize, usize> {
    let mut d = HashMap::new();
    for c in golay_code() {
        *d.entry(c.count_ones() as usize).or_insert(0) += 1;
    }
    d
}

/// Number of 5-subsets of Ω lying in exactly one octad, out of C(24,5).
pub fn five_subset_coverage() -> (usize, usize) {
    let mut counts: HashMap<u32, u32> = HashMap::new();
    for k in build_steiner().octads() {
        let pts = k.points();
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    for d in c + 1..8 {
                        for e in d + 1..8 {
                            let s = PointSet::from_points(&[pts[a], pts[b], pts[c], pts[d], pts[e]]);
                            *counts.entry(s.0).or_insert(0) += 1;
                        }
                    }
                }
            }
        }
    }
    let unique = counts.values().filter(|&&c| c == 1).count();
    (unique, 42504)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn orbit_size_and_base() {
        let s = build_steiner();
        assert_eq!(s.len(), 759);
        assert!(is_octad(PointSet::of(&BASE_OCTAD)));
        assert!(is_octad(PointSet::of(&[INF, 0, 1, 2, 3, 5, 14, 17])));
        assert!(is_octad(PointSet::of(&[INF, 0, 1, 2, 8, 11, 12, 18])));
        assert!(!is_octad(PointSet::of(&[INF, 0, 1, 2, 3, 4, 5, 6])));
        assert!(!is_octad(PointSet::of(&[INF, 0, 1, 2, 3, 5, 14])));
    }

    #[test]
    fn octads_through_examples() {
        let k1 = octads_through(PointSet::of(&[INF, 0, 1, 2, 3])).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].set(), PointSet::of(&[INF, 0, 1, 2, 3, 5, 14, 17]));
        assert_eq!(octads_through(PointSet::default()).unwrap().len(), 759);
        assert_eq!(octads_through(PointSet::of(&[INF, 0])).unwrap().len(), 77);
        assert!(octads_through(PointSet::of(&[0, 1, 2, 3, 4, 5])).is_err());
    }

    #[test]
    fn steiner_property() {
        assert_eq!(five_subset_coverage(), (42504, 42504));
        let octads = build_steiner().octads();
        for (i, a) in octads.iter().enumerate() {
            for b in &octads[i + 1..] {
                assert!([0, 2, 4].contains(&a.set().intersection(b.set()).len()));
            }
        }
    }

    #[test]
    fn golay_code_weights() {
        let d = weight_distribution();
        assert_eq!(golay_code().len(), 4096);
        assert_eq!(d[&0], 1);
        assert_eq!(d[&8], 759);
        assert_eq!(d[&12], 2576);
        assert_eq!(d[&16], 759);
        assert_eq!(d[&24], 1);
    }

    #[test]
    fn parse_points() {
        assert_eq!(PointSet::parse("∞,0,1").unwrap(), PointSet::of(&[INF, 0, 1]));
        assert!(PointSet::parse("23").is_err());
        assert_eq!(PointSet::of(&[0, INF, 5]).to_string(), "{∞,0,5}");
    }

    proptest! {
        #[test]
        fn octad_images_under_generators(i in 0usize..759) {
            let k = build_steiner().octads()[i].set();
            prop_assert!(is_octad(k.map(OmegaPoint::shift)));
            prop_assert!(is_octad(k.map(OmegaPoint::neg_inverse)));
        }

        #[test]
        fn five_points_unique_octad(mask in proptest::sample::subsequence((0u8..24).collect::<Vec<_>>(), 5)) {
            let s = PointSet::of(&mask);
            prop_assert_eq!(octads_through(s).unwrap().len(), 1);
        }
    }
}
