//! Leech roots r for which ⟨R, r⟩ is a root lattice of rank 11, and their
//! projections r₁ to S_H ⊗ ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{int, rat, IntMatrix};
use crate::golay::{self, OmegaPoint, PointSet, INF};
use crate::hessian::{picard, CurveName, DivisorClass};
use crate::lattices;
use crate::leech::{self, LeechVector};
use crate::lorentz::{self, bilinear, LeechRoot, LorentzVector, K_OCTADS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WallCase {
    Zero,
    OneA,
    OneB,
    Two,
    ThreeA,
    ThreeB,
}

impl fmt::Display for WallCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WallCase::Zero => "0",
            WallCase::OneA => "1a",
            WallCase::OneB => "1b",
            WallCase::Two => "2",
            WallCase::ThreeA => "3a",
            WallCase::ThreeB => "3b",
        })
    }
}

impl WallCase {
    /// Root type of ⟨R, r⟩.
    pub fn root_type(self) -> &'static str {
        match self {
            WallCase::Zero => "6A1+A5",
            WallCase::OneA | WallCase::OneB => "5A1+D6",
            WallCase::Two => "3A1+A3+A5",
            WallCase::ThreeA | WallCase::ThreeB => "4A1+A7",
        }
    }

    /// (r₁, r₁).
    pub fn r1_norm(self) -> BigRational {
        match self {
            WallCase::Zero => rat(-2, 1),
            WallCase::Two => rat(-1, 1),
            _ => rat(-2, 3),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WallRoot {
    pub case: WallCase,
    pub root: LeechRoot,
    /// Indices i ≥ 1 of the x_i with (r, x_i) = 1.
    pub x_indices: Vec<usize>,
    pub r1: DivisorClass,
}

const R_NAMES: [&str; 10] = ["x", "z", "y", "r0", "x0", "x1", "x2", "x3", "x4", "x5"];

/// Nonzero pairings of r with the generators of R.
pub fn r_pattern(r: &LeechRoot) -> Vec<(&'static str, i64)> {
    lorentz::r_generators()
        .iter()
        .zip(R_NAMES)
        .map(|((_, g), n)| (n, bilinear(&g.vector(), &r.vector())))
        .filter(|&(_, v)| v != 0)
        .collect()
}

/// e.g. "5A1+D6", components sorted by name.
pub fn format_root_type(t: &BTreeMap<String, usize>) -> String {
    t.iter()
        .map(|(k, &n)| if n == 1 { k.clone() } else { format!("{n}{k}") })
        .collect::<Vec<_>>()
        .join("+")
}

/// Root type of ⟨R, r⟩ by exhaustive root counting.
pub fn extended_root_type(r: &LeechRoot) -> BTreeMap<String, usize> {
    let mut gens: Vec<LorentzVector> = lorentz::r_generators().iter().map(|(_, g)| g.vector()).collect();
    gens.push(r.vector());
    let gram = IntMatrix::from_rows(
        gens.len(),
        &gens.iter().map(|a| gens.iter().map(|b| int(bilinear(a, b))).collect()).collect::<Vec<_>>(),
    );
    lattices::root_type(&gram)
}

/// The rational correction c with r₁ = r + c, c ∈ R ⊗ ℚ, as an integer
/// vector together with its denominator.
pub fn closed_form_correction(case: WallCase, x_indices: &[usize]) -> (LorentzVector, i64) {
    let g: BTreeMap<&str, LorentzVector> =
        lorentz::r_generators().iter().zip(R_NAMES).map(|((_, r), n)| (n, r.vector())).collect();
    let comb = |coefs: &[(&str, i64)]| coefs.iter().fold(LorentzVector::zero(), |acc, &(n, k)| acc + g[n].scale(k));
    let xi = |i: usize| g[["x1", "x2", "x3", "x4", "x5"][i - 1]];
    match case {
        WallCase::Zero => (LorentzVector::zero(), 1),
        WallCase::OneA => (comb(&[("x", 2), ("z", 4), ("y", 3), ("r0", 2), ("x0", 1)]), 3),
        WallCase::OneB => (comb(&[("x", 1), ("z", 2), ("y", 3), ("r0", 4), ("x0", 2)]), 3),
        WallCase::Two => (xi(x_indices[0]) + xi(x_indices[1]), 2),
        WallCase::ThreeA => (comb(&[("x", 1), ("z", 2), ("y", 3), ("r0", 4), ("x0", 5)]) + xi(x_indices[0]).scale(3), 6),
        WallCase::ThreeB => (comb(&[("x", 5), ("z", 4), ("y", 3), ("r0", 2), ("x0", 1)]) + xi(x_indices[0]).scale(3), 6),
    }
}

/// Assigns the case from the pairing pattern with R, confirms the root type
/// by counting, and checks the projection against the closed form.
pub fn classify_wall_root(r: &LeechRoot) -> Result<WallRoot> {
    let pat = r_pattern(r);
    if pat.iter().any(|&(_, v)| v != 1) {
        return Err(Error::Inconsistent(format!("pairings with R are not 0/1: {pat:?}")));
    }
    let names: Vec<&str> = pat.iter().map(|&(n, _)| n).collect();
    let x_indices: Vec<usize> =
        names.iter().filter_map(|n| n.strip_prefix('x').and_then(|d| d.parse().ok())).filter(|&i| i >= 1).collect();
    let case = match names.as_slice() {
        [] => WallCase::Zero,
        ["z"] => WallCase::OneA,
        ["r0"] => WallCase::OneB,
        [a, b] if a.starts_with('x') && b.starts_with('x') && x_indices.len() == 2 => WallCase::Two,
        ["x0", b] if b.starts_with('x') && x_indices.len() == 1 => WallCase::ThreeA,
        ["x", b] if b.starts_with('x') && x_indices.len() == 1 => WallCase::ThreeB,
        _ => return Err(Error::Inconsistent(format!("no case matches pattern {names:?}"))),
    };
    let rt = format_root_type(&extended_root_type(r));
    if rt != case.root_type() {
        return Err(Error::Inconsistent(format!("case {case}: root type {rt}")));
    }
    let pic = picard();
    let r1 = pic.project(&r.vector());
    if pic.square(&r1) != case.r1_norm() {
        return Err(Error::Inconsistent(format!("case {case}: r1² = {}", pic.square(&r1))));
    }
    // k·r₁ = k·r + correction must be orthogonal to T
    let (corr, k) = closed_form_correction(case, &x_indices);
    let kr1 = r.vector().scale(k) + corr;
    let mut t_gens: Vec<LorentzVector> = lorentz::r_generators().iter().map(|(_, g)| g.vector()).collect();
    t_gens.push(lorentz::theta());
    if t_gens.iter().any(|g| bilinear(g, &kr1) != 0) || pic.project(&kr1) != r1.times(k) {
        return Err(Error::Inconsistent(format!("case {case}: closed form of r1 disagrees")));
    }
    Ok(WallRoot { case, root: *r, x_indices, r1 })
}

/// Octads of the twelve case 1a roots, as listed.
pub const LISTED_ONE_A: [&str; 12] = [
    "∞,0,1,5,9,11,13,21",
    "∞,0,1,7,10,11,17,22",
    "∞,0,1,7,12,13,14,20",
    "∞,0,1,8,9,14,19,22",
    "∞,0,1,8,16,17,20,21",
    "∞,0,1,5,10,12,16,19",
    "∞,0,2,5,7,9,12,22",
    "∞,0,2,5,8,13,19,20",
    "∞,0,2,7,8,10,14,16",
    "∞,0,2,9,11,16,17,19",
    "∞,0,2,10,12,13,17,21",
    "∞,0,2,11,14,20,21,22",
];

/// The case 2 octad for the pair (x₁, x₂).
pub const LISTED_TWO_12: &str = "0,∞,6,7,10,12,15,18";

/// Points k of the case 3a roots ν_Ω − 4ν_k meeting x₁.
pub const LISTED_THREE_A_1: [u8; 3] = [5, 14, 17];

/// Octads of the case 3b roots meeting x₁.
pub const LISTED_THREE_B_1: [&str; 3] = [
    "0,5,9,12,13,14,17,19",
    "0,5,10,11,14,16,17,21",
    "0,5,7,8,14,17,20,22",
];

fn k_set(i: usize) -> PointSet {
    PointSet::of(&K_OCTADS[i])
}

fn pt(p: u8) -> OmegaPoint {
    OmegaPoint::new(p)
}

/// λ with the value 3 on `threes`, −1 on the rest of K and 1 off K.
fn signed_octad_vector(k: PointSet, threes: &[u8]) -> LeechVector {
    let mut v = [0i64; 24];
    for p in OmegaPoint::all() {
        v[p.index()] = if threes.contains(&(p.index() as u8)) {
            3
        } else if k.contains(p) {
            -1
        } else {
            1
        };
    }
    LeechVector(v)
}

/// A wall root together with the Leech data it was found from.
#[derive(Clone, Debug)]
pub struct Wall {
    pub wall: WallRoot,
    /// The octad K, or {k} for ν_Ω − 4ν_k.
    pub support: PointSet,
}

#[derive(Clone, Debug)]
pub struct WallEnumeration {
    pub one_a: Vec<Wall>,
    pub two: Vec<Wall>,
    pub three_a: Vec<Wall>,
    pub three_b: Vec<Wall>,
}

impl WallEnumeration {
    pub fn by_case(&self, case: WallCase) -> &[Wall] {
        match case {
            WallCase::OneA => &self.one_a,
            WallCase::Two => &self.two,
            WallCase::ThreeA => &self.three_a,
            WallCase::ThreeB => &self.three_b,
            _ => &[],
        }
    }
}

fn classified(lambda: LeechVector, support: PointSet, expect: WallCase) -> Result<Wall> {
    let root = lorentz::leech_root(lambda)?;
    let wall = classify_wall_root(&root)?;
    if wall.case != expect {
        return Err(Error::Inconsistent(format!("{support} expected case {expect}, got {}", wall.case)));
    }
    Ok(Wall { wall, support })
}

/// Exhaustive shape-constrained searches for cases 1a, 2, 3a and 3b, each
/// sorted by its octad (or point) in canonical order.
pub fn enumerate_wall_roots() -> Result<WallEnumeration> {
    let octads: Vec<PointSet> = golay::build_steiner().octads().iter().map(|o| o.set()).collect();
    let inter = |a: PointSet, i: usize| a.intersection(k_set(i)).len();
    let (inf, zero) = (pt(INF), pt(0));
    let mut one_a = Vec::new();
    let mut two = Vec::new();
    let mut three_b = Vec::new();
    for &k in &octads {
        if k.contains(inf) && k.contains(zero) {
            let i0 = k.intersection(k_set(0));
            if i0.len() == 2 && i0.contains(inf) {
                let j1 = i0.points().into_iter().find(|&p| p != inf).expect("two points");
                if (1..6).all(|i| inter(k, i) == 4 && k_set(i).contains(j1)) {
                    let lambda = signed_octad_vector(k, &[INF, 0, j1.index() as u8]);
                    if !leech::contains(&lambda) {
                        return Err(Error::NotInLeech(format!("case 1a vector for {k}")));
                    }
                    one_a.push(classified(lambda, k, WallCase::OneA)?);
                }
            }
            let sizes: Vec<usize> = (0..6).map(|i| inter(k, i)).collect();
            if sizes[0] == 4 && sizes[1..].iter().filter(|&&s| s == 2).count() == 2
                && sizes[1..].iter().all(|&s| s == 2 || s == 4)
            {
                two.push(classified(LeechVector::nu(k).scale(2), k, WallCase::Two)?);
            }
        }
        if k.contains(zero) && !k.contains(inf) && inter(k, 0) == 0 {
            let sizes: Vec<usize> = (1..6).map(|i| inter(k, i)).collect();
            if sizes.iter().filter(|&&s| s == 4).count() == 1 && sizes.iter().all(|&s| s == 2 || s == 4) {
                let lambda = signed_octad_vector(k, &[0]);
                three_b.push(classified(lambda, k, WallCase::ThreeB)?);
            }
        }
    }
    let mut three_a = Vec::new();
    for p in OmegaPoint::all() {
        if p == inf || p == zero {
            continue;
        }
        let member: Vec<usize> = (0..6).filter(|&i| k_set(i).contains(p)).collect();
        if member.len() == 1 && member[0] >= 1 {
            let lambda = LeechVector::nu_omega() - LeechVector::nu_point(p.index() as u8).scale(4);
            three_a.push(classified(lambda, PointSet::from_points(&[p]), WallCase::ThreeA)?);
        }
    }
    for list in [&mut one_a, &mut two, &mut three_a, &mut three_b] {
        list.sort_by_key(|w| w.support.lex_key());
    }
    Ok(WallEnumeration { one_a, two, three_a, three_b })
}

pub fn walls() -> &'static WallEnumeration {
    static CELL: OnceLock<WallEnumeration> = OnceLock::new();
    CELL.get_or_init(|| enumerate_wall_roots().expect("wall enumeration succeeds"))
}

/// The curves pairing nontrivially with r, as "name:value" items.
pub fn curve_pattern(r: &LeechRoot) -> Vec<(CurveName, i64)> {
    CurveName::all()
        .into_iter()
        .map(|c| (c, bilinear(&crate::hessian::curve_root(c).vector(), &r.vector())))
        .filter(|&(_, v)| v != 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessian::expr;

    #[test]
    fn counts() {
        let w = walls();
        assert_eq!((w.one_a.len(), w.two.len(), w.three_a.len(), w.three_b.len()), (12, 10, 15, 15));
    }

    #[test]
    fn curve_roots_are_case_zero() {
        for c in CurveName::all() {
            let w = classify_wall_root(&crate::hessian::curve_root(c)).unwrap();
            assert_eq!(w.case, WallCase::Zero);
            assert_eq!(&w.r1, picard().curve(c));
        }
    }

    #[test]
    fn worked_projections() {
        let p = picard();
        let w = walls();
        let k = PointSet::parse("∞,0,1,5,9,11,13,21").unwrap();
        let a = w.one_a.iter().find(|x| x.support == k).unwrap();
        let e = expr::parse(p, "1/15(-2TT + 2NN + 10(T36+T46+T15+T25+T34) + 5(N36+N46+N56+N13+N24))").unwrap();
        assert_eq!(a.wall.r1, e);
        let k = PointSet::parse("0,∞,6,7,10,12,15,18").unwrap();
        let b = w.two.iter().find(|x| x.support == k).unwrap();
        assert_eq!(b.wall.r1, expr::parse(p, "1/2(C16 - N45)").unwrap());
        assert_eq!(b.wall.x_indices, vec![1, 2]);
        let c = w.three_a.iter().find(|x| x.support == PointSet::of(&[5])).unwrap();
        let e = expr::parse(
            p,
            "1/2(N26+N45+N56+N24) - 1/3(N16+N36) + 1/3(N13+N46) + 2/3(T46+T25) + 1/3(T15+T23)",
        )
        .unwrap();
        assert_eq!(c.wall.r1, e);
    }
}
