//! The Picard lattice S_H of the resolved Hessian quartic, built as the
//! orthogonal complement of T = ⟨R, θ⟩ in L, with its twenty nodal and line
//! classes.

pub mod expr;
pub mod pencils;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, solve_rational, IntMatrix, RatVector};
use crate::golay::{PointSet, INF};
use crate::lattices::{self, EmbeddedLattice};
use crate::lorentz::{self, bilinear, LeechRoot, LorentzVector};
use crate::weber::{self, FaceSet, ThetaDivisor, TwoTorsion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveKind {
    Node,
    Line,
}

/// N_α or T_β in the Kummer indexing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveName {
    pub kind: CurveKind,
    pub label: TwoTorsion,
}

pub const NODE_LABELS: [&str; 10] = ["16", "26", "36", "46", "56", "12", "13", "24", "35", "45"];
pub const LINE_LABELS: [&str; 10] = ["16", "26", "36", "46", "56", "14", "15", "23", "25", "34"];

impl CurveName {
    pub fn node(label: &str) -> Self {
        CurveName { kind: CurveKind::Node, label: TwoTorsion::parse(label).expect("valid label") }
    }

    pub fn line(label: &str) -> Self {
        CurveName { kind: CurveKind::Line, label: TwoTorsion::parse(label).expect("valid label") }
    }

    /// The ten nodes then the ten lines, in the fixed order used throughout.
    pub fn all() -> Vec<CurveName> {
        NODE_LABELS.iter().map(|l| Self::node(l)).chain(LINE_LABELS.iter().map(|l| Self::line(l))).collect()
    }

    pub fn index(self) -> usize {
        Self::all().iter().position(|&c| c == self).expect("every name is listed")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::UnknownName(s.to_string());
        let (kind, rest) = match s.chars().next() {
            Some('N') => (CurveKind::Node, &s[1..]),
            Some('T') => (CurveKind::Line, &s[1..]),
            _ => return Err(bad()),
        };
        let label = TwoTorsion::parse(rest).map_err(|_| bad())?;
        let c = CurveName { kind, label };
        Self::all().contains(&c).then_some(c).ok_or_else(bad)
    }

    /// Pentahedral label: a vertex (3 faces) for a node, an edge (2 faces)
    /// for a line.
    pub fn faces(self) -> FaceSet {
        let d = weber::standard_dictionary();
        match self.kind {
            CurveKind::Node => d.nodes[&self.label],
            CurveKind::Line => d.lines[&self.label],
        }
    }

    /// Enriques partner: the curve with the complementary face set.
    pub fn tau(self) -> CurveName {
        let target = self.faces().complement();
        let kind = match self.kind {
            CurveKind::Node => CurveKind::Line,
            CurveKind::Line => CurveKind::Node,
        };
        *Self::all()
            .iter()
            .find(|c| c.kind == kind && c.faces() == target)
            .expect("the dictionary is a bijection")
    }

    /// The curve with the given kind and pentahedral label.
    pub fn from_faces(kind: CurveKind, faces: FaceSet) -> CurveName {
        *Self::all()
            .iter()
            .find(|c| c.kind == kind && c.faces() == faces)
            .expect("the dictionary is a bijection")
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            CurveKind::Node => 'N',
            CurveKind::Line => 'T',
        };
        write!(f, "{k}{}", self.label.label())
    }
}

/// The octads K with N_α, T_β = (2ν_K, 1, 1).
pub fn curve_octad(c: CurveName) -> PointSet {
    let pts: [u8; 8] = match (c.kind, c.label.label().as_str()) {
        (CurveKind::Node, "45") => [INF, 0, 1, 3, 4, 11, 19, 20],
        (CurveKind::Node, "56") => [INF, 0, 1, 3, 6, 8, 10, 13],
        (CurveKind::Node, "24") => [INF, 0, 1, 3, 7, 9, 16, 18],
        (CurveKind::Node, "26") => [INF, 0, 1, 3, 12, 15, 21, 22],
        (CurveKind::Node, "36") => [INF, 0, 1, 4, 5, 7, 8, 15],
        (CurveKind::Node, "35") => [INF, 0, 1, 4, 6, 9, 12, 17],
        (CurveKind::Node, "46") => [INF, 0, 1, 4, 10, 14, 18, 21],
        (CurveKind::Node, "16") => [INF, 0, 1, 5, 6, 18, 20, 22],
        (CurveKind::Node, "13") => [INF, 0, 1, 6, 11, 14, 15, 16],
        (CurveKind::Node, "12") => [INF, 0, 1, 13, 15, 17, 18, 19],
        (CurveKind::Line, "16") => [INF, 0, 2, 3, 4, 8, 9, 21],
        (CurveKind::Line, "34") => [INF, 0, 2, 3, 6, 12, 16, 20],
        (CurveKind::Line, "14") => [INF, 0, 2, 3, 7, 11, 13, 15],
        (CurveKind::Line, "36") => [INF, 0, 2, 3, 10, 18, 19, 22],
        (CurveKind::Line, "26") => [INF, 0, 2, 4, 5, 6, 10, 11],
        (CurveKind::Line, "25") => [INF, 0, 2, 4, 7, 17, 18, 20],
        (CurveKind::Line, "15") => [INF, 0, 2, 4, 12, 14, 15, 19],
        (CurveKind::Line, "56") => [INF, 0, 2, 5, 15, 16, 18, 21],
        (CurveKind::Line, "46") => [INF, 0, 2, 6, 8, 15, 17, 22],
        (CurveKind::Line, "23") => [INF, 0, 2, 6, 9, 13, 14, 18],
        _ => unreachable!("CurveName values are validated on construction"),
    };
    PointSet::of(&pts)
}

pub fn curve_root(c: CurveName) -> LeechRoot {
    lorentz::octad_root(curve_octad(c)).expect("curve octads lie in Λ")
}

/// Combinatorial intersection number: −2 on the diagonal, 0 between
/// distinct curves of the same kind, and for a node μ_α and a line Θ_β,
/// 1 iff α+β ∈ {∅, 16, 26, 36, 46, 56}.
pub fn incidence_rule(a: CurveName, b: CurveName) -> i64 {
    if a == b {
        return -2;
    }
    match (a.kind, b.kind) {
        (CurveKind::Node, CurveKind::Line) => weber::theta_contains(ThetaDivisor(b.label), a.label) as i64,
        (CurveKind::Line, CurveKind::Node) => weber::theta_contains(ThetaDivisor(a.label), b.label) as i64,
        _ => 0,
    }
}

/// The incidence rule, cross-checked against the pairing of Leech roots.
pub fn incidence(a: CurveName, b: CurveName) -> Result<i64> {
    let rule = incidence_rule(a, b);
    let direct = lorentz::root_pairing(&curve_root(a), &curve_root(b))?;
    if rule != direct {
        return Err(Error::PairingMismatch { direct, rule });
    }
    Ok(rule)
}

pub fn nodes_on(line: CurveName) -> Vec<CurveName> {
    CurveName::all()
        .into_iter()
        .filter(|&n| n.kind == CurveKind::Node && incidence_rule(n, line) == 1)
        .collect()
}

pub fn lines_through(node: CurveName) -> Vec<CurveName> {
    CurveName::all()
        .into_iter()
        .filter(|&t| t.kind == CurveKind::Line && incidence_rule(node, t) == 1)
        .collect()
}

/// A rational class in S_H ⊗ ℚ, in coordinates over the fixed ℤ-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub coords: RatVector,
}

impl DivisorClass {
    pub fn zero() -> Self {
        DivisorClass { coords: RatVector::zeros(16) }
    }

    pub fn is_integral(&self) -> bool {
        self.coords.is_integral()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        DivisorClass { coords: self.coords.scale(k) }
    }

    pub fn times(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(int(k)))
    }

    pub fn div(&self, k: i64) -> Self {
        self.scale(&BigRational::new(BigInt::one(), int(k)))
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: &DivisorClass) -> DivisorClass {
        DivisorClass { coords: &self.coords + &o.coords }
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: &DivisorClass) -> DivisorClass {
        DivisorClass { coords: &self.coords - &o.coords }
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass { coords: -&self.coords }
    }
}

pub fn sum_classes<'a>(it: impl IntoIterator<Item = &'a DivisorClass>) -> DivisorClass {
    it.into_iter().fold(DivisorClass::zero(), |acc, c| &acc + c)
}

#[derive(Debug)]
pub struct PicardLattice {
    /// T = ⟨R, θ⟩.
    pub t: EmbeddedLattice,
    /// S_H = T⊥ with its HNF basis.
    pub sh: EmbeddedLattice,
    /// Indices (into `CurveName::all()`) of the 16 curves forming the basis.
    pub basis_curves: Vec<usize>,
    /// Gram matrix over the curve basis.
    pub gram: IntMatrix,
    /// Coordinates of all twenty curves over the curve basis.
    pub curve_coords: Vec<DivisorClass>,
}

/// Builds T and S_H and checks that the twenty curves lie in S_H and
/// generate it.
pub fn build_sh() -> Result<PicardLattice> {
    let mut t_gens: Vec<LorentzVector> = lorentz::r_generators().iter().map(|(_, r)| r.vector()).collect();
    t_gens.push(lorentz::theta());
    let t = lattices::span(&t_gens)?;
    let sh = lattices::orthogonal_complement(&t);
    let names = CurveName::all();
    let roots: Vec<LorentzVector> = names.iter().map(|&c| curve_root(c).vector()).collect();
    for (c, r) in names.iter().zip(&roots) {
        if t_gens.iter().any(|g| bilinear(g, r) != 0) {
            return Err(Error::Inconsistent(format!("{c} is not orthogonal to T")));
        }
    }
    let curve_span = lattices::span(&roots)?;
    if curve_span.basis != sh.basis {
        return Err(Error::Inconsistent("the twenty curves do not span T⊥".into()));
    }
    let full = IntMatrix::from_rows(
        20,
        &roots.iter().map(|a| roots.iter().map(|b| int(bilinear(a, b))).collect()).collect::<Vec<_>>(),
    );
    let disc = sh.det().abs();
    let basis_curves = first_unimodular_subset(&full, &disc)
        .ok_or_else(|| Error::Inconsistent("no 16 curves form a basis".into()))?;
    let gram = full.select_rows(&basis_curves).transpose().select_rows(&basis_curves);
    let mut curve_coords = Vec::new();
    for j in 0..20 {
        let rhs = RatVector::from_ints(&basis_curves.iter().map(|&i| full.get(i, j).clone()).collect::<Vec<_>>());
        let x = solve_rational(&gram, &rhs).ok_or(Error::Degenerate)?;
        if !x.is_integral() {
            return Err(Error::NotIntegral(format!("{} over the curve basis", names[j])));
        }
        curve_coords.push(DivisorClass { coords: x });
    }
    Ok(PicardLattice { t, sh, basis_curves, gram, curve_coords })
}

/// Lexicographically first 16-subset of the curves whose Gram determinant
/// has absolute value `disc`, i.e. a ℤ-basis of their span.
fn first_unimodular_subset(full: &IntMatrix, disc: &BigInt) -> Option<Vec<usize>> {
    fn rec(full: &IntMatrix, disc: &BigInt, start: usize, chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
        if chosen.len() == 16 {
            let g = full.select_rows(chosen).transpose().select_rows(chosen);
            return (g.det().abs() == *disc).then(|| chosen.clone());
        }
        let need = 16 - chosen.len();
        for i in start..=full.rows() - need {
            chosen.push(i);
            // prune: the chosen curves must stay linearly independent
            let g = full.select_rows(chosen).transpose().select_rows(chosen);
            if !g.det().is_zero() {
                if let Some(r) = rec(full, disc, i + 1, chosen) {
                    return Some(r);
                }
            }
            chosen.pop();
        }
        None
    }
    rec(full, disc, 0, &mut Vec::new())
}

/// The cached Picard lattice.
pub fn picard() -> &'static PicardLattice {
    static CELL: OnceLock<PicardLattice> = OnceLock::new();
    CELL.get_or_init(|| build_sh().expect("S_H construction succeeds"))
}

impl PicardLattice {
    pub fn dot(&self, a: &DivisorClass, b: &DivisorClass) -> BigRational {
        a.coords.form(&self.gram, &b.coords)
    }

    pub fn square(&self, a: &DivisorClass) -> BigRational {
        self.dot(a, a)
    }

    pub fn curve(&self, c: CurveName) -> &DivisorClass {
        &self.curve_coords[c.index()]
    }

    pub fn basis_names(&self) -> Vec<CurveName> {
        let all = CurveName::all();
        self.basis_curves.iter().map(|&i| all[i]).collect()
    }

    pub fn sum_of(&self, names: &[CurveName]) -> DivisorClass {
        sum_classes(names.iter().map(|&c| self.curve(c)))
    }

    /// 𝒩
    pub fn node_sum(&self) -> DivisorClass {
        self.sum_of(&CurveName::all()[..10])
    }

    /// 𝒯
    pub fn line_sum(&self) -> DivisorClass {
        self.sum_of(&CurveName::all()[10..])
    }

    /// 𝒯ᵢ: the four lines in face i.
    pub fn face_lines(&self, i: u8) -> DivisorClass {
        let f = FaceSet::of(&[i]);
        let names: Vec<_> =
            CurveName::all().into_iter().filter(|c| c.kind == CurveKind::Line && f.is_subset(c.faces())).collect();
        self.sum_of(&names)
    }

    /// 𝒩ᵢ: the four nodes whose vertex label avoids i.
    pub fn face_nodes(&self, i: u8) -> DivisorClass {
        let f = FaceSet::of(&[i]);
        let names: Vec<_> =
            CurveName::all().into_iter().filter(|c| c.kind == CurveKind::Node && !f.is_subset(c.faces())).collect();
        self.sum_of(&names)
    }

    /// (η_H, η_S) solved from 2η_H = 3η_S − 𝒯 and 2η_S = 3η_H − 𝒩, which
    /// give η_H = (3𝒩 + 2𝒯)/5 and η_S = (2𝒩 + 3𝒯)/5.
    pub fn hyperplane_classes(&self) -> Result<(DivisorClass, DivisorClass)> {
        let n = self.node_sum();
        let t = self.line_sum();
        let eta_h = (&n.times(3) + &t.times(2)).div(5);
        let eta_s = (&n.times(2) + &t.times(3)).div(5);
        for (name, c) in [("η_H", &eta_h), ("η_S", &eta_s)] {
            if !c.is_integral() {
                return Err(Error::NotIntegral(name.into()));
            }
        }
        Ok((eta_h, eta_s))
    }

    pub fn eta_h(&self) -> DivisorClass {
        self.hyperplane_classes().expect("hyperplane classes are integral").0
    }

    pub fn eta_s(&self) -> DivisorClass {
        self.hyperplane_classes().expect("hyperplane classes are integral").1
    }

    /// C_t = η_H − 2T_t − (the three nodes on T_t).
    pub fn conic(&self, line: CurveName) -> Result<DivisorClass> {
        if line.kind != CurveKind::Line {
            return Err(Error::UnknownName(format!("C{}", line.label.label())));
        }
        let nodes = self.sum_of(&nodes_on(line));
        Ok(&(&self.eta_h() - &self.curve(line).times(2)) - &nodes)
    }

    /// R_n = η_H − T − (the three nodes on T) − N_n for the line T = τ(N_n)
    /// opposite to the node.
    pub fn cubic(&self, node: CurveName) -> Result<DivisorClass> {
        if node.kind != CurveKind::Node {
            return Err(Error::UnknownName(format!("R{}", node.label.label())));
        }
        let t = node.tau();
        let nodes = self.sum_of(&nodes_on(t));
        Ok(&(&(&self.eta_h() - self.curve(t)) - &nodes) - self.curve(node))
    }

    /// Orthogonal projection of a vector of L onto S_H ⊗ ℚ.
    pub fn project(&self, v: &LorentzVector) -> DivisorClass {
        let all = CurveName::all();
        let rhs: Vec<BigInt> =
            self.basis_curves.iter().map(|&i| int(bilinear(v, &curve_root(all[i]).vector()))).collect();
        let x = solve_rational(&self.gram, &RatVector::from_ints(&rhs)).expect("Gram is nondegenerate");
        DivisorClass { coords: x }
    }

    /// ω′: the projection of the Weyl vector.
    pub fn weyl(&self) -> DivisorClass {
        self.project(&lorentz::weyl_vector())
    }

    /// The vector of L represented by an integral class.
    pub fn to_lorentz(&self, c: &DivisorClass) -> Option<LorentzVector> {
        let ints = c.coords.to_integers()?;
        let all = CurveName::all();
        let mut v = LorentzVector::zero();
        for (k, &i) in ints.iter().zip(&self.basis_curves) {
            let k = i64::try_from(k).ok()?;
            v = v + curve_root(all[i]).vector().scale(k);
        }
        Some(v)
    }

    /// Pairings of a class with the twenty curves.
    pub fn curve_pairings(&self, c: &DivisorClass) -> Vec<BigRational> {
        CurveName::all().into_iter().map(|n| self.dot(c, self.curve(n))).collect()
    }

    /// Expresses a class as a rational combination of the twenty curves by
    /// reading its basis coordinates.
    pub fn describe(&self, c: &DivisorClass) -> String {
        let names = self.basis_names();
        let mut parts = Vec::new();
        for (k, n) in c.coords.0.iter().zip(names) {
            if k.is_zero() {
                continue;
            }
            let sign = if k.is_negative() { "-" } else { "+" };
            let mag = k.abs();
            let coef = if mag.is_one() { String::new() } else { mag.to_string() };
            parts.push(format!("{sign}{coef}{n}"));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let s = parts.join("");
        s.strip_prefix('+').map(str::to_string).unwrap_or(s)
    }
}

/// The ten Enriques pairs {N, τ(N)} with their pentahedral edge label
/// (the edge of the line), and the graph on them defined by
/// U·U′ = (P·P′)/2 for the pulled-back classes P = N + τ(N).
pub fn enriques_quotient_graph() -> (Vec<FaceSet>, Vec<Vec<i64>>) {
    let pic = picard();
    let nodes: Vec<CurveName> = CurveName::all()[..10].to_vec();
    let labels: Vec<FaceSet> = nodes.iter().map(|n| n.tau().faces()).collect();
    let classes: Vec<DivisorClass> = nodes.iter().map(|&n| pic.curve(n) + pic.curve(n.tau())).collect();
    let two = BigRational::from_integer(int(2));
    let m = classes
        .iter()
        .map(|a| {
            classes
                .iter()
                .map(|b| {
                    let v = pic.dot(a, b) / &two;
                    assert!(v.is_integer(), "pairings of τ-invariant classes are even");
                    i64::try_from(v.to_integer()).expect("small")
                })
                .collect()
        })
        .collect();
    (labels, m)
}

/// (edge count, all degrees equal 3, girth) of the quotient graph.
pub fn petersen_data(adj: &[Vec<i64>]) -> (usize, bool, usize) {
    let n = adj.len();
    let edges: usize = (0..n).map(|i| (i + 1..n).filter(|&j| adj[i][j] == 1).count()).sum();
    let cubic = (0..n).all(|i| (0..n).filter(|&j| j != i && adj[i][j] == 1).count() == 3);
    let mut girth = usize::MAX;
    for s in 0..n {
        // breadth-first search for the shortest cycle through s
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if v == u || adj[u][v] != 1 {
                    continue;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    girth = girth.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    (edges, cubic, girth)
}

/// Nodes and lines in a face set, for display.
pub fn curve_set_label(names: &BTreeSet<CurveName>) -> String {
    let mut v: Vec<_> = names.iter().map(|c| c.index()).collect();
    v.sort();
    let all = CurveName::all();
    v.into_iter().map(|i| all[i].to_string()).collect::<Vec<_>>().join("+")
}

impl PartialOrd for CurveName {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CurveName {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::leech;

    #[test]
    fn curve_names() {
        assert_eq!(CurveName::all().len(), 20);
        assert_eq!(CurveName::parse("N16").unwrap(), CurveName::node("16"));
        assert!(CurveName::parse("N14").is_err());
        assert!(CurveName::parse("T12").is_err());
        assert_eq!(CurveName::node("16").tau(), CurveName::line("23"));
        assert_eq!(CurveName::line("16").faces(), FaceSet::of(&[2, 5]));
    }

    #[test]
    fn incidence_examples() {
        let n16 = CurveName::node("16");
        let lines: BTreeSet<_> = lines_through(n16).into_iter().collect();
        let expected: BTreeSet<_> = ["16", "14", "15"].iter().map(|l| CurveName::line(l)).collect();
        assert_eq!(lines, expected);
        assert_eq!(incidence(CurveName::node("45"), CurveName::line("16")).unwrap(), 0);
        assert_eq!(incidence(CurveName::node("12"), CurveName::node("13")).unwrap(), 0);
        for a in CurveName::all() {
            for b in CurveName::all() {
                assert_eq!(incidence(a, b).unwrap(), incidence_rule(a, b));
            }
        }
    }

    #[test]
    fn difference_shapes_follow_incidence() {
        for a in CurveName::all() {
            for b in CurveName::all() {
                if a == b {
                    continue;
                }
                let d = curve_root(a).lambda() - curve_root(b).lambda();
                let class = leech::shape_class(&d).unwrap();
                match incidence_rule(a, b) {
                    0 => assert!(matches!(class, leech::ShapeClass::Lambda4(_))),
                    1 => assert!(matches!(class, leech::ShapeClass::Lambda6(_))),
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn lattice_invariants() {
        let p = picard();
        assert_eq!(p.sh.rank(), 16);
        assert_eq!(p.sh.det().abs(), int(48));
        assert_eq!(p.gram.det().abs(), int(48));
        assert!(lattices::is_primitive(&p.t));
        assert!(lattices::is_primitive(&p.sh));
        for c in CurveName::all() {
            assert_eq!(p.square(p.curve(c)), rat(-2, 1));
        }
    }

    #[test]
    fn hyperplane_classes() {
        let p = picard();
        let (h, s) = p.hyperplane_classes().unwrap();
        assert_eq!(p.square(&h), rat(4, 1));
        assert_eq!(p.square(&s), rat(4, 1));
        assert_eq!(p.dot(&h, &s), rat(6, 1));
        for c in CurveName::all() {
            let expected = if c.kind == CurveKind::Node { 0 } else { 1 };
            assert_eq!(p.dot(&h, p.curve(c)), rat(expected, 1));
        }
        assert_eq!(&h + &s, &p.node_sum() + &p.line_sum());
    }

    #[test]
    fn conics_and_cubics() {
        let p = picard();
        for c in CurveName::all() {
            match c.kind {
                CurveKind::Line => {
                    let conic = p.conic(c).unwrap();
                    assert_eq!(p.square(&conic), rat(-2, 1));
                    assert_eq!(p.dot(&conic, p.curve(c)), rat(2, 1));
                }
                CurveKind::Node => assert_eq!(p.square(&p.cubic(c).unwrap()), rat(-2, 1)),
            }
        }
    }

    #[test]
    fn weyl_projection() {
        let p = picard();
        let w = p.weyl();
        assert_eq!(w, &p.node_sum() + &p.line_sum());
        assert_eq!(p.square(&w), rat(20, 1));
        let back = p.to_lorentz(&w).unwrap();
        assert_eq!(p.project(&back), w);
    }

    #[test]
    fn petersen() {
        let (labels, adj) = enriques_quotient_graph();
        for i in 0..10 {
            for j in 0..10 {
                if i != j {
                    let disjoint = labels[i].0 & labels[j].0 == 0;
                    assert_eq!(adj[i][j], disjoint as i64);
                }
            }
        }
        assert_eq!(petersen_data(&adj), (15, true, 5));
    }
}
