//! The named involutions of S_H, built from their action tables, and the
//! generator attached to each wall.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::isometry::{self, isometry_from_images, isometry_from_table, reflection, Isometry, DIM};
use super::walls::{walls, WallCase};
use crate::error::{Error, Result};
use crate::exact::{int, kernel_basis, rat, IntMatrix};
use crate::hessian::expr::{self, Env};
use crate::hessian::pencils::named_env;
use crate::hessian::{picard, CurveKind, CurveName, DivisorClass, PicardLattice};
use crate::lattices::gcd_of;
use crate::weber::FaceSet;

/// Enriques involution.
pub const TAU_TABLE: [(&str, &str); 10] = [
    ("N16", "T23"),
    ("N24", "T36"),
    ("N56", "T34"),
    ("N12", "T56"),
    ("N13", "T46"),
    ("N26", "T14"),
    ("N35", "T26"),
    ("N46", "T25"),
    ("N36", "T15"),
    ("N45", "T16"),
];

/// Projection from N16.
pub const P16_TABLE: [(&str, &str); 8] = [
    ("N56", "N24"),
    ("N13", "N12"),
    ("N35", "N46"),
    ("T25", "T26"),
    ("T36", "T34"),
    ("T56", "T46"),
    ("T23", "eH-N16-T23-N26-N45-N36"),
    ("N16", "C23"),
];

/// Involution of the skew lines T15, T23.
pub const SKEW_TABLE: [(&str, &str); 12] = [
    ("T16", "N26"),
    ("T14", "N45"),
    ("T36", "N56"),
    ("T34", "N24"),
    ("T15", "C15"),
    ("N36", "R36"),
    ("N16", "R16"),
    ("T23", "C23"),
    ("T25", "N13"),
    ("T56", "N35"),
    ("T26", "N12"),
    ("T46", "N46"),
];

/// Inversion of |F_{N12,T26}| with zero section N13.
pub const F_TABLE: [(&str, &str); 9] = [
    ("N16", "D1"),
    ("N26", "N56"),
    ("N36", "D3"),
    ("N12", "C56"),
    ("N24", "N45"),
    ("N35", "C26"),
    ("T15", "T23"),
    ("T26", "4eH-2(T26+T56)-T26-T15-T23-2(N16+N26+N36+N56+N12+N24+N35+N45)"),
    ("T56", "4eH-2(T26+T56)-T56-T15-T23-2(N16+N26+N36+N56+N12+N24+N35+N45)"),
];

/// The symmetric inversion g = f∘p35∘p12, image of every curve.
pub const G_TABLE: [(&str, &str); 20] = [
    ("N16", "D3"),
    ("N26", "N45"),
    ("N36", "D1"),
    ("N46", "N13"),
    ("N56", "N24"),
    ("N12", "N12"),
    ("N13", "N46"),
    ("N24", "N56"),
    ("N35", "N35"),
    ("N45", "N26"),
    ("T16", "T34"),
    ("T26", "G2"),
    ("T36", "T14"),
    ("T46", "T25"),
    ("T56", "G5"),
    ("T14", "T36"),
    ("T15", "T15"),
    ("T23", "T23"),
    ("T25", "T46"),
    ("T34", "T16"),
];

/// The (−6)-vector of the type 3 pencil |F_{T16,T14}|.
pub const PHI_ALPHA: &str = "2eH-2eS+2(T46+T25+T34+T36+T15)+(N36+N46+N56+N13+N24)";

/// A permutation of the five faces, as the images of 1..5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm5(pub [u8; 5]);

impl Perm5 {
    pub fn identity() -> Self {
        Perm5([1, 2, 3, 4, 5])
    }

    /// All 120 permutations in lexicographic order.
    pub fn all() -> Vec<Perm5> {
        let mut out = Vec::new();
        for code in 0..5u32.pow(5) {
            let d: Vec<u8> = (0..5).map(|k| (code / 5u32.pow(4 - k) % 5) as u8 + 1).collect();
            if (1..=5).all(|x| d.contains(&x)) {
                out.push(Perm5([d[0], d[1], d[2], d[3], d[4]]));
            }
        }
        out
    }

    pub fn parse(s: &str) -> Option<Self> {
        let d: Vec<u8> = s.bytes().map(|b| b.wrapping_sub(b'0')).collect();
        let mut seen = [false; 6];
        if d.len() != 5 || d.iter().any(|&x| !(1..=5).contains(&x) || std::mem::replace(&mut seen[x as usize], true)) {
            return None;
        }
        Some(Perm5([d[0], d[1], d[2], d[3], d[4]]))
    }

    pub fn apply(self, i: u8) -> u8 {
        self.0[(i - 1) as usize]
    }

    pub fn on_faces(self, f: FaceSet) -> FaceSet {
        FaceSet::of(&f.faces().into_iter().map(|i| self.apply(i)).collect::<Vec<_>>())
    }

    pub fn on_curve(self, c: CurveName) -> CurveName {
        CurveName::from_faces(c.kind, self.on_faces(c.faces()))
    }
}

impl fmt::Display for Perm5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s")?;
        for d in self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

pub fn pentahedral_symmetry(pic: &PicardLattice, s: Perm5) -> Result<Isometry> {
    let images: Vec<DivisorClass> = CurveName::all().into_iter().map(|c| pic.curve(s.on_curve(c)).clone()).collect();
    isometry_from_images(pic, &s.to_string(), &images)
}

/// Checks the printed τ table against the pentahedral dictionary and builds
/// the isometry.
pub fn enriques_tau(pic: &PicardLattice) -> Result<Isometry> {
    for (a, b) in TAU_TABLE {
        let (a, b) = (CurveName::parse(a)?, CurveName::parse(b)?);
        if a.tau() != b {
            return Err(Error::Inconsistent(format!("τ table: {a} ↦ {b}, dictionary gives {}", a.tau())));
        }
    }
    isometry_from_table(pic, "tau", &TAU_TABLE, &Env::new())
}

/// x ↦ x − 2(x·α)/α² α for a primitive (−6)-vector α.
pub fn reflection_phi(pic: &PicardLattice, name: &str, alpha: &DivisorClass) -> Result<Isometry> {
    if pic.square(alpha) != rat(-6, 1) {
        return Err(Error::Inconsistent(format!("{name}: α² = {}", pic.square(alpha))));
    }
    let ints = alpha.coords.to_integers().ok_or_else(|| Error::NotIntegral(name.into()))?;
    if gcd_of(&ints) != int(1) {
        return Err(Error::Inconsistent(format!("{name}: α is not primitive")));
    }
    reflection(pic, name, alpha)
}

/// Classes that may be contracted by a double cover: curves, conics, cubics.
pub fn candidate_curves(pic: &PicardLattice) -> Vec<(String, DivisorClass)> {
    let mut v: Vec<(String, DivisorClass)> =
        CurveName::all().into_iter().map(|c| (c.to_string(), pic.curve(c).clone())).collect();
    for c in CurveName::all() {
        match c.kind {
            CurveKind::Line => v.push((format!("C{}", c.label.label()), pic.conic(c).expect("line"))),
            CurveKind::Node => v.push((format!("R{}", c.label.label()), pic.cubic(c).expect("node"))),
        }
    }
    v
}

fn type1_fibre(pic: &PicardLattice, line: CurveName) -> DivisorClass {
    &pic.conic(line).expect("line") + pic.curve(line)
}

fn int_rows_of(classes: &[DivisorClass]) -> Option<IntMatrix> {
    let rows: Option<Vec<Vec<BigInt>>> = classes.iter().map(|c| c.coords.to_integers()).collect();
    Some(IntMatrix::from_rows(DIM, &rows?))
}

/// The linear map fixing each source/image pair, if the sources span and the
/// map is integral.
fn solve_map(pic: &PicardLattice, srcs: &[DivisorClass], dsts: &[DivisorClass]) -> Option<Isometry> {
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..srcs.len() {
        let mut trial: Vec<DivisorClass> = chosen.iter().map(|&k| srcs[k].clone()).collect();
        trial.push(srcs[i].clone());
        if int_rows_of(&trial)?.rank() == trial.len() {
            chosen.push(i);
        }
        if chosen.len() == DIM {
            break;
        }
    }
    if chosen.len() < DIM {
        return None;
    }
    let s = int_rows_of(&chosen.iter().map(|&k| srcs[k].clone()).collect::<Vec<_>>())?.transpose();
    let d = int_rows_of(&chosen.iter().map(|&k| dsts[k].clone()).collect::<Vec<_>>())?.transpose();
    let sinv = s.inverse_rational()?;
    let mut m = vec![0i64; DIM * DIM];
    for i in 0..DIM {
        for j in 0..DIM {
            let mut acc = num_rational::BigRational::zero();
            for k in 0..DIM {
                acc += num_rational::BigRational::from_integer(d.get(i, k).clone()) * &sinv[k].0[j];
            }
            if !acc.is_integer() {
                return None;
            }
            m[i * DIM + j] = acc.to_integer().to_i64()?;
        }
    }
    let iso = Isometry { name: String::new(), m };
    for (a, b) in srcs.iter().zip(dsts) {
        if iso.apply(a) != *b {
            return None;
        }
    }
    iso.preserves_gram(pic).then_some(iso)
}

/// Involutions fixing the fibre classes of the type 1 pencils of two lines,
/// permuting the curves they contract by a Gram-preserving involution, acting
/// as −1 on the orthogonal complement, and keeping ω′ ample. Returns all
/// solutions together with the contracted curve names.
pub fn cover_involutions(pic: &PicardLattice, t1: CurveName, t2: CurveName) -> (Vec<Isometry>, Vec<String>) {
    let f1 = type1_fibre(pic, t1);
    let f2 = type1_fibre(pic, t2);
    let cands = candidate_curves(pic);
    let contracted: Vec<(String, DivisorClass)> = cands
        .iter()
        .filter(|(_, c)| pic.dot(c, &f1).is_zero() && pic.dot(c, &f2).is_zero())
        .cloned()
        .collect();
    let mut span = vec![f1.clone(), f2.clone()];
    span.extend(contracted.iter().map(|(_, c)| c.clone()));
    let a = int_rows_of(&span).expect("integral classes");
    let pairing = &a * &pic.gram;
    let comp: Vec<DivisorClass> = kernel_basis(&pairing.transpose())
        .row_vecs()
        .into_iter()
        .map(|r| DivisorClass { coords: crate::exact::RatVector::from_ints(&r) })
        .collect();
    let n = contracted.len();
    let g: Vec<Vec<num_rational::BigRational>> =
        (0..n).map(|i| (0..n).map(|j| pic.dot(&contracted[i].1, &contracted[j].1)).collect()).collect();
    let mut perms = Vec::new();
    let mut p = vec![usize::MAX; n];
    fn rec(i: usize, p: &mut Vec<usize>, g: &[Vec<num_rational::BigRational>], out: &mut Vec<Vec<usize>>) {
        let n = p.len();
        if i == n {
            out.push(p.clone());
            return;
        }
        if p[i] != usize::MAX {
            return rec(i + 1, p, g, out);
        }
        for j in i..n {
            if p[j] != usize::MAX {
                continue;
            }
            p[i] = j;
            p[j] = i;
            let ok = (0..n).filter(|&k| p[k] != usize::MAX).all(|k| g[i][k] == g[j][p[k]] && g[j][k] == g[i][p[k]]);
            if ok {
                rec(i + 1, p, g, out);
            }
            p[i] = usize::MAX;
            p[j] = usize::MAX;
        }
    }
    rec(0, &mut p, &g, &mut perms);
    let weyl = pic.weyl();
    let mut out = Vec::new();
    for perm in perms {
        let mut srcs = vec![f1.clone(), f2.clone()];
        let mut dsts = vec![f1.clone(), f2.clone()];
        for (k, (_, c)) in contracted.iter().enumerate() {
            srcs.push(c.clone());
            dsts.push(contracted[perm[k]].1.clone());
        }
        for c in &comp {
            srcs.push(c.clone());
            dsts.push(c.times(-1));
        }
        if let Some(m) = solve_map(pic, &srcs, &dsts) {
            let w = m.apply(&weyl);
            if cands.iter().all(|(_, c)| pic.dot(&w, c) > rat(0, 1)) {
                out.push(m.named(format!("cover({t1},{t2})")));
            }
        }
    }
    (out, contracted.into_iter().map(|(n, _)| n).collect())
}

/// The involution attached to one wall.
#[derive(Clone, Debug)]
pub struct WallGenerator {
    pub name: String,
    pub case: WallCase,
    pub r1: DivisorClass,
    pub iso: Isometry,
    /// c with σ(ω′) = ω′ + c·r₁.
    pub push: i64,
}

/// The 240 symmetries, each with a name `sXXXXX` or `tau∘sXXXXX`.
#[derive(Clone, Debug)]
pub struct Group240 {
    pub elements: Vec<Isometry>,
    index: HashMap<Vec<i64>, usize>,
}

impl Group240 {
    pub fn find(&self, m: &Isometry) -> Option<&Isometry> {
        self.index.get(&m.m).map(|&i| &self.elements[i])
    }

    pub fn contains(&self, m: &Isometry) -> bool {
        self.index.contains_key(&m.m)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug)]
pub struct Catalog {
    pub tau: Isometry,
    pub symmetries: BTreeMap<Perm5, Isometry>,
    pub group: Group240,
    /// Size of the closure of {τ, s21345, s23451} under composition.
    pub closure_order: usize,
    pub p: BTreeMap<CurveName, Isometry>,
    pub p16_table: Isometry,
    pub skew_table: Isometry,
    pub phi: Isometry,
    pub f: Isometry,
    pub g: Isometry,
    /// f conjugated along with each g_j.
    pub f_conjugates: Vec<Isometry>,
    /// Ordered 1a, 2, 3a, 1b, 3b.
    pub wall_generators: Vec<WallGenerator>,
}

impl Catalog {
    /// Resolves a generator or symmetry name.
    pub fn lookup(&self, name: &str) -> Option<Isometry> {
        let name = name.trim();
        match name {
            "tau" | "τ" => return Some(self.tau.clone()),
            "id" => return Some(Isometry::identity()),
            "f" => return Some(self.f.clone()),
            _ => {}
        }
        if let Some(w) = self.wall_generators.iter().find(|w| w.name == name) {
            return Some(w.iso.clone());
        }
        if let Some(rest) = name.strip_prefix('s') {
            return Perm5::parse(rest).and_then(|s| self.symmetries.get(&s).cloned());
        }
        if let Some(j) = name.strip_prefix('f').and_then(|d| d.parse::<usize>().ok()) {
            return j.checked_sub(1).and_then(|j| self.f_conjugates.get(j).cloned());
        }
        None
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.wall_generators.iter().map(|w| w.name.clone()).collect()
    }
}

fn closure(gens: &[Isometry]) -> Vec<Isometry> {
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut out = vec![Isometry::identity()];
    seen.insert(Isometry::identity().m, ());
    let mut queue = VecDeque::from([Isometry::identity()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.m.clone(), ()).is_none() {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

pub fn build_catalog() -> Result<Catalog> {
    let pic = picard();
    let env = named_env(pic);
    let tau = enriques_tau(pic)?;
    let mut symmetries = BTreeMap::new();
    for s in Perm5::all() {
        symmetries.insert(s, pentahedral_symmetry(pic, s)?);
    }
    let mut elements = Vec::new();
    for (s, m) in &symmetries {
        elements.push(m.clone().named(s.to_string()));
    }
    for (s, m) in &symmetries {
        elements.push(tau.compose(m).named(format!("tau∘{s}")));
    }
    let index: HashMap<Vec<i64>, usize> = elements.iter().enumerate().map(|(i, m)| (m.m.clone(), i)).collect();
    let group = Group240 { elements, index };
    let gens = [
        tau.clone(),
        symmetries[&Perm5([2, 1, 3, 4, 5])].clone(),
        symmetries[&Perm5([2, 3, 4, 5, 1])].clone(),
    ];
    let closure_order = closure(&gens).len();

    let p16_table = isometry_from_table(pic, "p16", &P16_TABLE, &env)?;
    let n16 = CurveName::node("16");
    let mut p = BTreeMap::new();
    for n in CurveName::all().into_iter().filter(|c| c.kind == CurveKind::Node) {
        let s = Perm5::all()
            .into_iter()
            .find(|s| s.on_curve(n16) == n)
            .expect("S5 is transitive on vertices");
        let m = p16_table.conjugate_by(&symmetries[&s], pic).named(format!("p{}", n.label.label()));
        p.insert(n, m);
    }
    let skew_table = isometry_from_table(pic, "skew(T15,T23)", &SKEW_TABLE, &env)?;
    let alpha = expr::parse(pic, PHI_ALPHA)?;
    let phi = reflection_phi(pic, "phi", &alpha)?;
    let f = isometry_from_table(pic, "f", &F_TABLE, &env)?;
    let g = isometry_from_table(pic, "g", &G_TABLE, &env)?;

    let walls = walls();
    let weyl = pic.weyl();
    let mut one_a = Vec::new();
    for (j, w) in walls.one_a.iter().enumerate() {
        let iso = reflection_phi(pic, &format!("phi{}", j + 1), &w.wall.r1.times(3))?;
        one_a.push(WallGenerator { name: format!("phi{}", j + 1), case: WallCase::OneA, r1: w.wall.r1.clone(), iso, push: 15 });
    }
    let mut two = Vec::new();
    for w in &walls.two {
        let pat = super::walls::curve_pattern(&w.wall.root);
        let node = pat
            .iter()
            .find(|(c, v)| c.kind == CurveKind::Node && *v == 1)
            .map(|(c, _)| *c)
            .ok_or_else(|| Error::Inconsistent(format!("case 2 wall {} meets no node", w.support)))?;
        let iso = p[&node].clone();
        two.push(WallGenerator { name: iso.name.clone(), case: WallCase::Two, r1: w.wall.r1.clone(), iso, push: 4 });
    }
    let base = walls
        .three_a
        .iter()
        .find(|w| w.support == crate::golay::PointSet::of(&[5]))
        .ok_or_else(|| Error::Inconsistent("worked case 3a wall missing".into()))?;
    let mut three_a = Vec::new();
    let mut f_conjugates = Vec::new();
    for (j, w) in walls.three_a.iter().enumerate() {
        let h = group
            .elements
            .iter()
            .find(|h| h.apply(&base.wall.r1) == w.wall.r1)
            .ok_or_else(|| Error::Inconsistent(format!("no symmetry carries the worked 3a wall to {}", w.support)))?;
        let name = format!("g{}", j + 1);
        three_a.push(WallGenerator {
            name: name.clone(),
            case: WallCase::ThreeA,
            r1: w.wall.r1.clone(),
            iso: g.conjugate_by(h, pic).named(name),
            push: 12,
        });
        f_conjugates.push(f.conjugate_by(h, pic).named(format!("f{}", j + 1)));
    }
    let conj_tau = |x: &Isometry, name: String| tau.compose(x).compose(&tau).named(name);
    let one_b: Vec<WallGenerator> = one_a
        .iter()
        .enumerate()
        .map(|(j, w)| WallGenerator {
            name: format!("tphi{}", j + 1),
            case: WallCase::OneB,
            r1: tau.apply(&w.r1),
            iso: conj_tau(&w.iso, format!("tphi{}", j + 1)),
            push: 15,
        })
        .collect();
    let mut three_b = Vec::new();
    for w in &walls.three_b {
        let j = three_a
            .iter()
            .position(|a| tau.apply(&a.r1) == w.wall.r1)
            .ok_or_else(|| Error::Inconsistent(format!("3b wall {} is not a τ-image", w.support)))?;
        let name = format!("tg{}", j + 1);
        three_b.push(WallGenerator {
            name: name.clone(),
            case: WallCase::ThreeB,
            r1: w.wall.r1.clone(),
            iso: conj_tau(&three_a[j].iso, name),
            push: 12,
        });
    }
    let mut wall_generators = Vec::new();
    wall_generators.extend(one_a);
    wall_generators.extend(two);
    wall_generators.extend(three_a);
    wall_generators.extend(one_b);
    wall_generators.extend(three_b);
    for w in &wall_generators {
        if w.iso.apply(&w.r1) != w.r1.times(-1) || w.iso.apply(&weyl) != &weyl + &w.r1.times(w.push) {
            return Err(Error::Inconsistent(format!("{} does not cross its wall", w.name)));
        }
    }
    Ok(Catalog { tau, symmetries, group, closure_order, p, p16_table, skew_table, phi, f, g, f_conjugates, wall_generators })
}

pub fn catalog() -> &'static Catalog {
    static CELL: OnceLock<Catalog> = OnceLock::new();
    CELL.get_or_init(|| build_catalog().expect("generator tables are consistent"))
}

/// Rank of M − I: 1 for a reflection.
pub fn moved_rank(iso: &Isometry) -> usize {
    let mut m = iso.m.clone();
    for i in 0..DIM {
        m[i * DIM + i] -= 1;
    }
    IntMatrix::from_i64(&m.chunks(DIM).map(|r| r.to_vec()).collect::<Vec<_>>()).rank()
}

pub use isometry::discriminant_action;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::isometry::DiscriminantAction;

    #[test]
    fn perms() {
        let all = Perm5::all();
        assert_eq!(all.len(), 120);
        assert_eq!(all[0], Perm5::identity());
        assert_eq!(Perm5::parse("21345"), Some(Perm5([2, 1, 3, 4, 5])));
        assert_eq!(Perm5::parse("11345"), None);
        assert_eq!(Perm5::parse("1234"), None);
    }

    #[test]
    fn tau_and_symmetries() {
        let pic = picard();
        let c = catalog();
        assert!(c.tau.is_involution());
        assert_eq!(c.tau.apply(&pic.eta_h()), pic.eta_s());
        assert_eq!(c.group.len(), 240);
        assert_eq!(c.closure_order, 240);
        let w = pic.weyl();
        assert!(c.group.elements.iter().all(|m| m.apply(&w) == w));
        assert_eq!(discriminant_action(pic, &c.tau), DiscriminantAction::Minus);
    }

    #[test]
    fn projections() {
        let pic = picard();
        let c = catalog();
        assert_eq!(c.p[&CurveName::node("16")], c.p16_table);
        let img = expr::parse(pic, "2eH-2T23-N26-N45-N36-N16").unwrap();
        assert_eq!(c.p16_table.apply(&pic.eta_h()), img);
        assert_eq!(expr::parse(pic, "eH-N16-T23-N26-N45-N36").unwrap(), expr::parse(pic, "R16").unwrap());
        for m in c.p.values() {
            assert!(m.is_involution());
            assert_eq!(m.compose(&c.tau), c.tau.compose(m));
            assert_ne!(discriminant_action(pic, m), DiscriminantAction::Other);
        }
    }

    #[test]
    fn composite_identities() {
        let pic = picard();
        let c = catalog();
        let p = |n: &str| &c.p[&CurveName::node(n)];
        assert_eq!(c.skew_table, c.tau.compose(p("16")).compose(p("36")));
        let (sols, _) = cover_involutions(pic, CurveName::line("15"), CurveName::line("23"));
        assert_eq!(sols, vec![c.skew_table.clone()]);
        let (sols, _) = cover_involutions(pic, CurveName::line("15"), CurveName::line("25"));
        assert_eq!(sols, vec![p("56").clone()]);
        let (sols, _) = cover_involutions(pic, CurveName::line("26"), CurveName::line("56"));
        assert_eq!(sols.len(), 1);
        assert_eq!(p("35").compose(p("12")), c.tau.compose(&sols[0]));
        assert_eq!(c.g, c.f.compose(p("35")).compose(p("12")));
    }

    #[test]
    fn wall_generators() {
        let pic = picard();
        let c = catalog();
        assert_eq!(c.wall_generators.len(), 64);
        for w in &c.wall_generators {
            assert!(w.iso.is_involution(), "{}", w.name);
            assert_ne!(discriminant_action(pic, &w.iso), DiscriminantAction::Other, "{}", w.name);
        }
        assert_eq!(c.lookup("phi1").unwrap(), c.phi);
    }
}
