//! Finite symplectic geometry of the sixteen 2-torsion points of a genus 2
//! Jacobian: theta divisors, tetrads, Weber hexads, and the dictionary from
//! the Kummer indexing to the pentahedral indexing.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

const FULL: u8 = 0b11_1111;

/// A 2-torsion point μ_α, α ⊂ {1..6} of even size modulo complement.
/// Stored as a bitmask (bit k−1 for k) in the canonical representative of
/// size 0 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoTorsion(u8);

impl TwoTorsion {
    pub const ZERO: TwoTorsion = TwoTorsion(0);

    /// Reduces any even subset (bitmask) to its canonical representative.
    pub fn from_mask(mask: u8) -> Self {
        let m = mask & FULL;
        assert!(m.count_ones() % 2 == 0, "2-torsion labels have even size");
        match m.count_ones() {
            4 => TwoTorsion(!m & FULL),
            6 => TwoTorsion(0),
            _ => TwoTorsion(m),
        }
    }

    /// μ_ij
    pub fn pair(i: u8, j: u8) -> Self {
        assert!((1..=6).contains(&i) && (1..=6).contains(&j) && i != j);
        Self::from_mask(1 << (i - 1) | 1 << (j - 1))
    }

    /// Parses `0` or a two-digit label such as `23`.
    pub fn parse(s: &str) -> Result<Self> {
        let b = s.as_bytes();
        match b {
            [b'0'] => Ok(Self::ZERO),
            [a @ b'1'..=b'6', c @ b'1'..=b'6'] if a != c => Ok(Self::pair(a - b'0', c - b'0')),
            _ => Err(Error::Parse(format!("bad 2-torsion label '{s}'"))),
        }
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// The 16 points: μ₀ then the 15 pairs in lexicographic order.
    pub fn all() -> Vec<TwoTorsion> {
        let mut v = vec![Self::ZERO];
        for i in 1..=6 {
            for j in i + 1..=6 {
                v.push(Self::pair(i, j));
            }
        }
        v
    }

    pub fn add(self, other: Self) -> Self {
        Self::from_mask(self.0 ^ other.0)
    }

    /// The label as a string, e.g. `"23"` or `"0"`.
    pub fn label(self) -> String {
        if self.0 == 0 {
            return "0".into();
        }
        (1..=6u8).filter(|k| self.0 >> (k - 1) & 1 == 1).map(|k| k.to_string()).collect()
    }
}

impl fmt::Display for TwoTorsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "μ{}", self.label())
    }
}

/// (μ_α, μ_β) = |α∩β| mod 2.
pub fn symplectic(a: TwoTorsion, b: TwoTorsion) -> u8 {
    ((a.0 & b.0).count_ones() % 2) as u8
}

/// Θ_β = Θ₀ + μ_β, labelled by β.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaDivisor(pub TwoTorsion);

impl ThetaDivisor {
    pub fn all() -> Vec<ThetaDivisor> {
        TwoTorsion::all().into_iter().map(ThetaDivisor).collect()
    }

    pub fn parse(s: &str) -> Result<Self> {
        TwoTorsion::parse(s).map(ThetaDivisor)
    }

    /// The six points on Θ_β.
    pub fn points(self) -> Vec<TwoTorsion> {
        TwoTorsion::all().into_iter().filter(|&a| theta_contains(self, a)).collect()
    }

    /// The odd-size label S with Θ_β = Θ_S, namely β + {6} (size 1 or 3).
    pub fn odd_label(self) -> u8 {
        let s = self.0 .0 ^ (1 << 5);
        if s.count_ones() == 5 {
            !s & FULL
        } else {
            s
        }
    }
}

impl fmt::Display for ThetaDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Θ{}", self.0.label())
    }
}

/// μ_α ∈ Θ_β ⇔ β+α ∈ {∅, 16, 26, 36, 46, 56}.
pub fn theta_contains(theta: ThetaDivisor, a: TwoTorsion) -> bool {
    let s = theta.0.add(a).0;
    s == 0 || (s.count_ones() == 2 && s & (1 << 5) != 0)
}

/// The odd partition S | S′ attached to Θ_β for β not of the form k6:
/// μ_γ ∈ Θ_β iff γ ⊂ S or γ ⊂ S′ (γ ≠ ∅). Returns every partition with
/// that property so that uniqueness can be checked.
pub fn odd_partitions(theta: ThetaDivisor) -> Vec<(u8, u8)> {
    let pts: HashSet<TwoTorsion> = theta.points().into_iter().collect();
    let mut out = Vec::new();
    for s in 0..=FULL {
        if s.count_ones() != 3 || s & 1 == 0 {
            continue;
        }
        let t = !s & FULL;
        let ok = TwoTorsion::all().into_iter().filter(|a| a.0 != 0).all(|a| {
            let inside = a.0 & !s == 0 || a.0 & !t == 0;
            inside == pts.contains(&a)
        });
        if ok {
            out.push((s, t));
        }
    }
    out
}

/// 2×2 matrix over F₂, stored as rows.
pub type BitMatrix = [[u8; 2]; 2];

fn mat_add(a: BitMatrix, b: BitMatrix) -> BitMatrix {
    [[a[0][0] ^ b[0][0], a[0][1] ^ b[0][1]], [a[1][0] ^ b[1][0], a[1][1] ^ b[1][1]]]
}

/// q₀ on V = F₂⁴ read through the rows ε = row 1, η = row 2: q₀ = ε·η.
pub fn q0(m: BitMatrix) -> u8 {
    (m[0][0] & m[1][0]) ^ (m[0][1] & m[1][1])
}

/// Polarization of [`q0`]: ε·η′ + η·ε′ with ε, η the rows.
pub fn v_form(m: BitMatrix, n: BitMatrix) -> u8 {
    let dot = |a: [u8; 2], b: [u8; 2]| (a[0] & b[0]) ^ (a[1] & b[1]);
    dot(m[0], n[1]) ^ dot(m[1], n[0])
}

/// The same polarization with ε, η read as the columns.
pub fn v_form_columns(m: BitMatrix, n: BitMatrix) -> u8 {
    let t = |a: BitMatrix| [[a[0][0], a[1][0]], [a[0][1], a[1][1]]];
    v_form(t(m), t(n))
}

/// ψ: J₂ → V, the linear map with μ12, μ34, μ16, μ45 sent to the four
/// elementary matrices.
pub fn psi(a: TwoTorsion) -> BitMatrix {
    let basis: [(TwoTorsion, BitMatrix); 4] = [
        (TwoTorsion::pair(1, 2), [[1, 0], [0, 0]]),
        (TwoTorsion::pair(3, 4), [[0, 1], [0, 0]]),
        (TwoTorsion::pair(1, 6), [[0, 0], [1, 0]]),
        (TwoTorsion::pair(4, 5), [[0, 0], [0, 1]]),
    ];
    for bits in 0u8..16 {
        let mut p = TwoTorsion::ZERO;
        let mut m = [[0; 2]; 2];
        for (k, (b, bm)) in basis.iter().enumerate() {
            if bits >> k & 1 == 1 {
                p = p.add(*b);
                m = mat_add(m, *bm);
            }
        }
        if p == a {
            return m;
        }
    }
    unreachable!("μ12, μ34, μ16, μ45 form a basis")
}

/// Theta characteristic of Θ_S for |S| odd: ψ(S + {1,3,5}).
pub fn theta_characteristic(s: u8) -> Result<BitMatrix> {
    if s & !FULL != 0 || s.count_ones() % 2 == 0 {
        return Err(Error::Inconsistent(format!("subset mask {s:#b} is not odd")));
    }
    Ok(psi(TwoTorsion::from_mask(s ^ 0b01_0101)))
}

/// The two printed 4×4 tables: 2-torsion points and theta divisors.
pub const MU_TABLE: [[&str; 4]; 4] =
    [["0", "45", "34", "35"], ["16", "23", "25", "24"], ["12", "36", "56", "46"], ["26", "13", "15", "14"]];
pub const THETA_TABLE: [[&str; 4]; 4] =
    [["12", "36", "56", "46"], ["26", "13", "15", "14"], ["0", "45", "34", "35"], ["16", "23", "25", "24"]];

/// Column k of the matrix [[1,1,0,0],[1,0,1,0]] (k = 1..4).
fn hutchinson_column(k: usize) -> [u8; 2] {
    [[1, 1], [1, 0], [0, 1], [0, 0]][k - 1]
}

/// Characteristic formed by the columns (a, b).
fn columns_matrix(a: [u8; 2], b: [u8; 2]) -> BitMatrix {
    [[a[0], b[0]], [a[1], b[1]]]
}

/// Hutchinson's construction for entry (a,b): the theta characteristic of
/// the theta-table entry, and ψ of the μ-table entry (columns reversed).
pub fn hutchinson(a: usize, b: usize) -> (BitMatrix, BitMatrix) {
    let theta = columns_matrix(hutchinson_column(a), hutchinson_column(b));
    let mu = columns_matrix(hutchinson_column(5 - a), hutchinson_column(5 - b));
    (theta, mu)
}

fn table_point(t: &[[&str; 4]; 4], a: usize, b: usize) -> TwoTorsion {
    TwoTorsion::parse(t[a][b]).expect("fixture labels are valid")
}

/// Checks every relation between the two printed tables: the incidence rule
/// (entry (ab) contains (cd) iff a = c or b = d, (ab) ≠ (cd)), Hutchinson's
/// column construction for both tables, and the U₁ + U₂ decomposition of the
/// μ-table. Returns the list of failures.
pub fn table_failures() -> Vec<String> {
    let mut bad = Vec::new();
    let u1 = [TwoTorsion::ZERO, TwoTorsion::pair(1, 6), TwoTorsion::pair(1, 2), TwoTorsion::pair(2, 6)];
    let u2 = [TwoTorsion::ZERO, TwoTorsion::pair(4, 5), TwoTorsion::pair(3, 4), TwoTorsion::pair(3, 5)];
    for a in 0..4 {
        for b in 0..4 {
            let mu = table_point(&MU_TABLE, a, b);
            if mu != u1[a].add(u2[b]) {
                bad.push(format!("μ-table ({},{}) is not U1+U2", a + 1, b + 1));
            }
            let theta = ThetaDivisor(table_point(&THETA_TABLE, a, b));
            for c in 0..4 {
                for d in 0..4 {
                    let expected = (a == c || b == d) && (a, b) != (c, d);
                    if theta_contains(theta, table_point(&MU_TABLE, c, d)) != expected {
                        bad.push(format!("incidence ({},{}) vs ({},{})", a + 1, b + 1, c + 1, d + 1));
                    }
                }
            }
            let (tc, pm) = hutchinson(a + 1, b + 1);
            if theta_characteristic(theta.odd_label()).ok() != Some(tc) {
                bad.push(format!("characteristic of {theta}"));
            }
            if psi(mu) != pm {
                bad.push(format!("ψ({mu})"));
            }
        }
    }
    bad
}

/// An affine plane of four points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tetrad(pub BTreeSet<TwoTorsion>);

impl Tetrad {
    /// Odd (Göpel) iff the underlying linear plane is totally isotropic.
    pub fn is_odd(&self) -> bool {
        let v: Vec<_> = self.0.iter().copied().collect();
        let u = v[0].add(v[1]);
        let w = v[0].add(v[2]);
        symplectic(u, w) == 0
    }
}

/// (odd, even) tetrads.
pub fn enumerate_tetrads() -> (Vec<Tetrad>, Vec<Tetrad>) {
    let pts = TwoTorsion::all();
    let mut all = BTreeSet::new();
    for &a in &pts {
        for &u in &pts[1..] {
            for &w in &pts[1..] {
                if u == w {
                    continue;
                }
                let t: BTreeSet<_> = [a, a.add(u), a.add(w), a.add(u).add(w)].into();
                all.insert(Tetrad(t));
            }
        }
    }
    all.into_iter().partition(Tetrad::is_odd)
}

pub fn is_affine_plane(points: &[TwoTorsion]) -> bool {
    let set: BTreeSet<_> = points.iter().copied().collect();
    set.len() == 4 && {
        let v: Vec<_> = set.iter().copied().collect();
        set.contains(&v[0].add(v[1]).add(v[2]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeberHexad(pub BTreeSet<TwoTorsion>);

impl WeberHexad {
    pub fn new(points: &[TwoTorsion]) -> Self {
        WeberHexad(points.iter().copied().collect())
    }
}

impl fmt::Display for WeberHexad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Symmetric sums of an odd and an even tetrad meeting in one point.
pub fn enumerate_weber_hexads() -> Vec<WeberHexad> {
    let (odd, even) = enumerate_tetrads();
    let mut out = BTreeSet::new();
    for o in &odd {
        for e in &even {
            if o.0.intersection(&e.0).count() == 1 {
                out.insert(WeberHexad(o.0.symmetric_difference(&e.0).copied().collect()));
            }
        }
    }
    out.into_iter().collect()
}

/// The hexad (μ₀, μ23, μ34, μ25, μ15, μ14).
pub fn standard_hexad() -> WeberHexad {
    WeberHexad::new(&["0", "23", "34", "25", "15", "14"].map(|s| TwoTorsion::parse(s).unwrap()))
}

/// The ten theta divisors listed for the standard hexad, in printed order.
pub const STANDARD_TEN: [&str; 10] = ["56", "46", "15", "14", "36", "16", "34", "23", "25", "26"];

/// 𝒜₁, …, 𝒜₅ for the standard hexad, in printed order.
pub const STANDARD_FIVE: [[&str; 4]; 5] = [
    ["56", "46", "15", "14"],
    ["14", "36", "16", "34"],
    ["23", "25", "56", "36"],
    ["23", "26", "34", "46"],
    ["26", "16", "25", "15"],
];

/// A permutation of the 16 points, as an index table into `TwoTorsion::all()`.
pub type PointPermutation = [u8; 16];

fn point_index(p: TwoTorsion) -> usize {
    TwoTorsion::all().iter().position(|&q| q == p).expect("valid point")
}

/// The 720 linear symplectic automorphisms of J₂, as point permutations.
pub fn symplectic_group() -> &'static Vec<PointPermutation> {
    static CELL: OnceLock<Vec<PointPermutation>> = OnceLock::new();
    CELL.get_or_init(|| {
        let pts = TwoTorsion::all();
        let basis = ["12", "34", "16", "45"].map(|s| TwoTorsion::parse(s).unwrap());
        // coordinates of every point over the basis
        let coords: Vec<u8> = pts
            .iter()
            .map(|&p| {
                (0u8..16)
                    .find(|bits| {
                        (0..4)
                            .filter(|k| bits >> k & 1 == 1)
                            .fold(TwoTorsion::ZERO, |acc, k| acc.add(basis[k]))
                            == p
                    })
                    .expect("basis spans")
            })
            .collect();
        let mut out = Vec::new();
        for code in 0u32..65536 {
            let images: [TwoTorsion; 4] =
                std::array::from_fn(|k| pts[(code >> (4 * k) & 15) as usize]);
            let map = |p: usize| {
                (0..4)
                    .filter(|k| coords[p] >> k & 1 == 1)
                    .fold(TwoTorsion::ZERO, |acc, k| acc.add(images[k]))
            };
            let perm: Vec<TwoTorsion> = (0..16).map(map).collect();
            if perm.iter().collect::<HashSet<_>>().len() != 16 {
                continue;
            }
            let preserves = (0..16)
                .all(|i| (0..16).all(|j| symplectic(perm[i], perm[j]) == symplectic(pts[i], pts[j])));
            if preserves {
                out.push(std::array::from_fn(|i| point_index(perm[i]) as u8));
            }
        }
        out
    })
}

/// 2⁴ ⋊ Sp(4,F₂): translations composed with the symplectic maps.
pub fn affine_symplectic_group() -> Vec<PointPermutation> {
    let pts = TwoTorsion::all();
    let mut out = Vec::with_capacity(16 * 720);
    for lin in symplectic_group() {
        for &t in &pts {
            out.push(std::array::from_fn(|i| point_index(pts[lin[i] as usize].add(t)) as u8));
        }
    }
    out
}

pub fn apply_permutation(g: &PointPermutation, h: &WeberHexad) -> WeberHexad {
    let pts = TwoTorsion::all();
    WeberHexad(h.0.iter().map(|&p| pts[g[point_index(p)] as usize]).collect())
}

/// Orbit size and stabilizer of `h` under the affine symplectic group,
/// with a flag telling whether the stabilizer acts on the six points
/// faithfully by even permutations.
pub fn hexad_orbit_data(h: &WeberHexad) -> (usize, usize, bool) {
    let group = affine_symplectic_group();
    let orbit: HashSet<WeberHexad> = group.iter().map(|g| apply_permutation(g, h)).collect();
    let pts: Vec<TwoTorsion> = h.0.iter().copied().collect();
    let all = TwoTorsion::all();
    let mut induced = HashSet::new();
    let mut stab = 0;
    let mut even = true;
    for g in &group {
        if apply_permutation(g, h) != *h {
            continue;
        }
        stab += 1;
        let perm: Vec<usize> = pts
            .iter()
            .map(|&p| pts.iter().position(|&q| q == all[g[point_index(p)] as usize]).unwrap())
            .collect();
        even &= permutation_parity(&perm) == 0;
        induced.insert(perm);
    }
    (orbit.len(), stab, even && induced.len() == stab)
}

fn permutation_parity(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut parity = 0;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        parity += len - 1;
    }
    parity % 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexadProfile {
    /// Theta divisors with exactly three hexad points, in canonical order.
    pub ten: Vec<ThetaDivisor>,
    /// The 4-subsets of `ten` covering every hexad point exactly twice.
    pub five_sets: Vec<BTreeSet<ThetaDivisor>>,
}

pub fn hexad_profile(h: &WeberHexad) -> Result<HexadProfile> {
    let mut ten = Vec::new();
    for theta in ThetaDivisor::all() {
        match h.0.iter().filter(|&&p| theta_contains(theta, p)).count() {
            3 => ten.push(theta),
            1 => {}
            k => return Err(Error::Inconsistent(format!("{theta} meets the hexad in {k} points"))),
        }
    }
    if ten.len() != 10 {
        return Err(Error::Inconsistent(format!("{} divisors meet the hexad thrice", ten.len())));
    }
    let mut five_sets = Vec::new();
    for mask in 0u16..1024 {
        if mask.count_ones() != 4 {
            continue;
        }
        let set: BTreeSet<ThetaDivisor> =
            (0..10).filter(|i| mask >> i & 1 == 1).map(|i| ten[i]).collect();
        let covers_twice = h
            .0
            .iter()
            .all(|&p| set.iter().filter(|&&t| theta_contains(t, p)).count() == 2);
        if covers_twice {
            five_sets.push(set);
        }
    }
    five_sets.sort();
    if five_sets.len() != 5 {
        return Err(Error::Inconsistent(format!("{} covering 4-sets", five_sets.len())));
    }
    for t in &ten {
        if five_sets.iter().filter(|s| s.contains(t)).count() != 2 {
            return Err(Error::Inconsistent(format!("{t} is not in exactly two sets")));
        }
    }
    Ok(HexadProfile { ten, five_sets })
}

/// A subset of the five faces {1..5}, as a bitmask (bit i−1 for face i).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSet(pub u8);

impl FaceSet {
    pub fn of(faces: &[u8]) -> Self {
        FaceSet(faces.iter().fold(0, |m, &f| m | 1 << (f - 1)))
    }

    pub fn faces(self) -> Vec<u8> {
        (1..=5).filter(|f| self.0 >> (f - 1) & 1 == 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self) -> FaceSet {
        FaceSet(!self.0 & 0b1_1111)
    }

    pub fn label(self) -> String {
        self.faces().iter().map(ToString::to_string).collect()
    }
}

/// Kummer labels of lines and nodes mapped to pentahedral edges and vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentahedralDictionary {
    pub lines: BTreeMap<TwoTorsion, FaceSet>,
    pub nodes: BTreeMap<TwoTorsion, FaceSet>,
}

/// Builds the dictionary for `h` with the five sets numbered as in
/// `numbering` (which must be the profile's family in some order).
pub fn pentahedral_dictionary(
    h: &WeberHexad,
    numbering: &[BTreeSet<ThetaDivisor>],
) -> Result<PentahedralDictionary> {
    let profile = hexad_profile(h)?;
    let mut given: Vec<_> = numbering.to_vec();
    given.sort();
    if given != profile.five_sets {
        return Err(Error::Inconsistent("numbering is not the hexad's five-set family".into()));
    }
    let mut lines = BTreeMap::new();
    for t in &profile.ten {
        let faces: Vec<u8> = (0..5).filter(|&i| numbering[i].contains(t)).map(|i| i as u8 + 1).collect();
        lines.insert(t.0, FaceSet::of(&faces));
    }
    let mut nodes = BTreeMap::new();
    for p in TwoTorsion::all().into_iter().filter(|p| !h.0.contains(p)) {
        let incident: Vec<FaceSet> = profile
            .ten
            .iter()
            .filter(|&&t| theta_contains(t, p))
            .map(|t| lines[&t.0])
            .collect();
        let union = FaceSet(incident.iter().fold(0, |m, f| m | f.0));
        let consistent = incident.len() == 3
            && union.len() == 3
            && incident.iter().all(|f| f.is_subset(union));
        if !consistent {
            return Err(Error::Inconsistent(format!("node {p} has incident edges {incident:?}")));
        }
        nodes.insert(p, union);
    }
    for face in 1..=5u8 {
        let f = FaceSet::of(&[face]);
        let nl = lines.values().filter(|e| f.is_subset(**e)).count();
        let nn = nodes.values().filter(|v| !f.is_subset(**v)).count();
        if nl != 4 || nn != 4 {
            return Err(Error::Inconsistent(format!("face {face} has {nl} lines, {nn} nodes")));
        }
    }
    Ok(PentahedralDictionary { lines, nodes })
}

pub fn standard_numbering() -> Vec<BTreeSet<ThetaDivisor>> {
    STANDARD_FIVE
        .iter()
        .map(|s| s.iter().map(|l| ThetaDivisor::parse(l).unwrap()).collect())
        .collect()
}

/// The dictionary for the standard hexad with the printed numbering.
pub fn standard_dictionary() -> &'static PentahedralDictionary {
    static CELL: OnceLock<PentahedralDictionary> = OnceLock::new();
    CELL.get_or_init(|| {
        pentahedral_dictionary(&standard_hexad(), &standard_numbering())
            .expect("standard hexad yields a consistent dictionary")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(s: &str) -> TwoTorsion {
        TwoTorsion::parse(s).unwrap()
    }

    #[test]
    fn symplectic_examples() {
        assert_eq!(symplectic(mu("12"), mu("23")), 1);
        assert_eq!(symplectic(mu("12"), mu("34")), 0);
        for a in TwoTorsion::all().into_iter().filter(|a| *a != TwoTorsion::ZERO) {
            assert!(TwoTorsion::all().into_iter().any(|b| symplectic(a, b) == 1));
        }
        assert_eq!(mu("12").add(mu("16")), mu("26"));
        assert_eq!(mu("12").add(mu("34")), mu("56"));
    }

    #[test]
    fn psi_is_symplectic_for_row_reading() {
        assert_eq!(psi(mu("12")), [[1, 0], [0, 0]]);
        assert_eq!(psi(mu("26")), mat_add(psi(mu("12")), psi(mu("16"))));
        let pts = TwoTorsion::all();
        let mut column_failures = 0;
        for (i, &a) in pts.iter().enumerate() {
            for &b in &pts[i + 1..] {
                assert_eq!(v_form(psi(a), psi(b)), symplectic(a, b), "{a} {b}");
                if v_form_columns(psi(a), psi(b)) != symplectic(a, b) {
                    column_failures += 1;
                }
            }
        }
        assert!(column_failures > 0);
    }

    #[test]
    fn theta_divisors() {
        for t in ThetaDivisor::all() {
            assert_eq!(t.points().len(), 6);
        }
        for p in TwoTorsion::all() {
            assert_eq!(ThetaDivisor::all().into_iter().filter(|&t| theta_contains(t, p)).count(), 6);
        }
        assert!(theta_contains(ThetaDivisor(mu("12")), mu("12")));
        assert_eq!(theta_characteristic(0b10_0011).unwrap(), [[1, 1], [1, 1]]);
        assert_eq!(theta_characteristic(0b1).unwrap(), psi(mu("35")));
        assert!(table_failures().is_empty(), "{:?}", table_failures());
    }

    #[test]
    fn odd_partitions_unique() {
        for t in ThetaDivisor::all() {
            let b = t.0.mask();
            let is_k6 = b.count_ones() == 2 && b & (1 << 5) != 0;
            if b != 0 && !is_k6 {
                assert_eq!(odd_partitions(t).len(), 1, "{t}");
                let (s, u) = odd_partitions(t)[0];
                assert!(s == t.odd_label() || u == t.odd_label());
            }
        }
    }

    #[test]
    fn tetrads_and_hexads() {
        let (odd, even) = enumerate_tetrads();
        assert_eq!((odd.len(), even.len()), (60, 80));
        let diagonal = Tetrad([mu("0"), mu("23"), mu("56"), mu("14")].into());
        assert!(odd.contains(&diagonal));
        for row in MU_TABLE {
            let t = Tetrad(row.iter().map(|s| mu(s)).collect());
            assert!(even.contains(&t));
        }
        let hexads = enumerate_weber_hexads();
        assert_eq!(hexads.len(), 192);
        assert!(hexads.contains(&standard_hexad()));
    }

    #[test]
    fn group_orders() {
        assert_eq!(symplectic_group().len(), 720);
        assert_eq!(affine_symplectic_group().len(), 11520);
        assert_eq!(hexad_orbit_data(&standard_hexad()), (192, 60, true));
    }

    #[test]
    fn standard_profile() {
        let p = hexad_profile(&standard_hexad()).unwrap();
        let ten: BTreeSet<_> = STANDARD_TEN.iter().map(|s| ThetaDivisor::parse(s).unwrap()).collect();
        assert_eq!(p.ten.iter().copied().collect::<BTreeSet<_>>(), ten);
        let mut expected = standard_numbering();
        expected.sort();
        assert_eq!(p.five_sets, expected);
        for set in standard_numbering() {
            let sum = set
                .iter()
                .map(|t| theta_characteristic(t.odd_label()).unwrap())
                .fold([[0; 2]; 2], mat_add);
            assert_eq!(sum, [[0, 0], [0, 0]]);
        }
    }

    #[test]
    fn dictionary() {
        let d = standard_dictionary();
        assert_eq!(d.lines[&mu("16")], FaceSet::of(&[2, 5]));
        assert_eq!(d.nodes[&mu("16")], FaceSet::of(&[1, 2, 5]));
        for (n, v) in &d.nodes {
            for (l, e) in &d.lines {
                assert_eq!(e.is_subset(*v), theta_contains(ThetaDivisor(*l), *n));
            }
        }
        let vertices: BTreeSet<_> = d.nodes.values().collect();
        let edges: BTreeSet<_> = d.lines.values().collect();
        assert_eq!((vertices.len(), edges.len()), (10, 10));
    }
}
