use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Check;
use crate::autgroup::generators::{cover_involutions, moved_rank, pentahedral_symmetry, Perm5};
use crate::autgroup::isometry::height;
use crate::autgroup::reduce::random_words;
use crate::autgroup::walls::{
    self, curve_pattern, format_root_type, LISTED_ONE_A, LISTED_THREE_A_1, LISTED_THREE_B_1, LISTED_TWO_12,
};
use crate::autgroup::{catalog, discriminant_action, parse_word, reduce_height, DiscriminantAction, Isometry, WallCase};
use crate::exact::{int, IntMatrix};
use crate::golay::{self, PointSet, INF};
use crate::hessian::expr;
use crate::hessian::pencils::{self, named_env};
use crate::hessian::{self, curve_octad, curve_root, incidence_rule, picard, CurveKind, CurveName, DivisorClass, PicardLattice};
use crate::lattices::{self, FiniteQuadraticForm};
use crate::leech::{self, LeechVector, ShapeClass};
use crate::lorentz::{self, bilinear, LorentzVector, K_OCTADS};
use crate::weber::{self, ThetaDivisor, TwoTorsion};

fn join<T: ToString>(v: impl IntoIterator<Item = T>) -> String {
    v.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn golay() -> Vec<Check> {
    const LOC: &str = "golay";
    let mut v = Vec::new();
    let s = golay::build_steiner();
    v.push(Check::eq("golay.octads.count", 759, s.len(), "golay::build_steiner"));
    let (covered, unique) = golay::five_subset_coverage();
    v.push(Check::eq("golay.five-subsets.covered", 42504, covered, "golay::five_subset_coverage"));
    v.push(Check::eq("golay.five-subsets.unique", 42504, unique, "golay::five_subset_coverage"));
    let d = golay::weight_distribution();
    let mut weights: Vec<_> = d.into_iter().collect();
    weights.sort();
    v.push(Check::eq(
        "golay.code.weights",
        "0:1,8:759,12:2576,16:759,24:1",
        join(weights.iter().map(|(w, n)| format!("{w}:{n}"))),
        "golay::weight_distribution",
    ));
    let mut named: Vec<(String, PointSet)> = Vec::new();
    for (i, k) in K_OCTADS.iter().enumerate() {
        named.push((format!("K{i}"), PointSet::of(k)));
    }
    for c in CurveName::all() {
        named.push((c.to_string(), curve_octad(c)));
    }
    for s in LISTED_ONE_A.iter().chain([&LISTED_TWO_12]).chain(&LISTED_THREE_B_1) {
        named.push((s.to_string(), PointSet::parse(s).expect("listed octads parse")));
    }
    let bad: Vec<String> = named.iter().filter(|(_, k)| !golay::is_octad(*k)).map(|(n, _)| n.clone()).collect();
    v.push(Check::cond(
        "golay.named-octads",
        format!("{0}/{0}", named.len()),
        if bad.is_empty() { format!("{}/{}", named.len(), named.len()) } else { format!("missing {}", bad.join(" ")) },
        bad.is_empty(),
        LOC,
    ));
    v
}

pub fn leech(seed: u64) -> Vec<Check> {
    let mut v = Vec::new();
    let g = leech::basis_gram();
    v.push(Check::eq("leech.basis.det", 1, g.det(), "leech::basis_gram"));
    let even = (0..24).all(|i| g.get(i, i).is_even());
    v.push(Check::eq("leech.basis.even", true, even, "leech::basis_gram"));
    let octad = LeechVector::nu(PointSet::of(&golay::BASE_OCTAD)).scale(2);
    v.push(Check::eq("leech.norm.octad", -4, fmt_inner(&octad, &octad), "leech::inner"));
    let special = LeechVector::nu_omega() - LeechVector::nu_point(INF).scale(4);
    v.push(Check::eq("leech.norm.special", -4, fmt_inner(&special, &special), "leech::inner"));
    let six = LeechVector::nu_omega() + LeechVector::nu_point(INF).scale(4);
    v.push(Check::eq("leech.shape.six", "(±5,±1^23)", fmt_shape(&six), "leech::shape_class"));
    let non = LeechVector::nu(PointSet::of(&[INF, 0, 1, 2, 3, 4, 5, 6])).scale(2);
    v.push(Check::eq("leech.membership.non-octad", false, leech::contains(&non), "leech::contains"));
    // random integer combinations of the basis stay in Λ with even norms
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    const N: usize = 100;
    for _ in 0..N {
        let c: Vec<BigInt> = (0..24).map(|_| int(rng.gen_range(-3..=3))).collect();
        let a = leech::from_coordinates(&c);
        let back = leech::coordinates(&a).map(|x| x == c).unwrap_or(false);
        if leech::contains(&a) && back && a.dot(&a) % 16 == 0 {
            ok += 1;
        }
    }
    v.push(Check::eq("leech.random.closure", format!("{N}/{N}"), format!("{ok}/{N}"), "leech::contains"));
    v
}

fn fmt_inner(a: &LeechVector, b: &LeechVector) -> String {
    leech::inner(a, b).map(|x| x.to_string()).unwrap_or_else(|e| format!("error: {e}"))
}

fn fmt_shape(a: &LeechVector) -> String {
    match leech::shape_class(a) {
        Ok(ShapeClass::Lambda4(s)) | Ok(ShapeClass::Lambda6(s)) => s.to_string(),
        Ok(other) => format!("{other:?}"),
        Err(e) => format!("error: {e}"),
    }
}

fn gram_of(vs: &[LorentzVector]) -> IntMatrix {
    IntMatrix::from_rows(vs.len(), &vs.iter().map(|a| vs.iter().map(|b| int(bilinear(a, b))).collect()).collect::<Vec<_>>())
}

fn r_vectors() -> Vec<LorentzVector> {
    lorentz::r_generators().iter().map(|(_, r)| r.vector()).collect()
}

pub fn embedding() -> Vec<Check> {
    let mut v = Vec::new();
    v.push(Check::eq("embedding.L.det", -1, lorentz::gram().det(), "lorentz::gram"));
    let gens = lorentz::r_generators();
    let names: Vec<&str> = gens.iter().map(|(n, _)| *n).collect();
    // the A5 chain x–z–y–r0–x0 and five isolated x1..x5
    let chain = ["x", "z", "y", "r0", "x0"];
    let pos = |n: &str| chain.iter().position(|c| *c == n);
    let expected: Vec<Vec<i64>> = names
        .iter()
        .map(|a| {
            names
                .iter()
                .map(|b| match (a == b, pos(a), pos(b)) {
                    (true, _, _) => -2,
                    (false, Some(p), Some(q)) if p.abs_diff(q) == 1 => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let rv = r_vectors();
    let actual = gram_of(&rv).to_i64_rows();
    v.push(Check::cond(
        "embedding.R.gram",
        "diagram",
        if actual == expected { "diagram".to_string() } else { format!("{actual:?}") },
        actual == expected,
        "lorentz::r_generators",
    ));
    let weyl = lorentz::weyl_vector();
    let ones = rv.iter().all(|r| bilinear(&weyl, r) == 1);
    v.push(Check::eq("embedding.R.weyl-pairing", true, ones, "lorentz::weyl_vector"));
    let r = lattices::span(&rv).expect("R spans");
    v.push(Check::eq("embedding.R.rank", 10, r.rank(), "lattices::span"));
    let rt = lattices::root_type(&r.gram);
    v.push(Check::eq("embedding.R.root-type", "5A1+A5", format_root_type(&rt), "lattices::root_type"));
    v.push(Check::eq("embedding.R.roots", 40, lattices::roots_of_negative_definite(&r.gram).len(), "lattices::roots_of_negative_definite"));
    let pic = picard();
    let index2 = r.det().abs() / pic.t.det().abs();
    v.push(Check::eq("embedding.T.index-over-R", 2, index2.sqrt(), "lattices::span"));
    v.push(Check::eq("embedding.T.rank", 10, pic.t.rank(), "hessian::build_sh"));
    v.push(Check::eq("embedding.T.primitive", true, lattices::is_primitive(&pic.t), "lattices::is_primitive"));
    v
}

fn form_label(q: &FiniteQuadraticForm) -> String {
    let mut o = q.orders.clone();
    o.sort();
    join(o)
}

pub fn picard_suite() -> Vec<Check> {
    let pic = picard();
    let mut v = Vec::new();
    v.push(Check::eq("picard.SH.rank", 16, pic.sh.rank(), "hessian::build_sh"));
    v.push(Check::eq("picard.SH.det", 48, pic.sh.det().abs(), "hessian::build_sh"));
    v.push(Check::eq("picard.SH.primitive", true, lattices::is_primitive(&pic.sh), "lattices::is_primitive"));
    let sig = signature_counts(&pic.gram);
    v.push(Check::eq("picard.SH.signature", "(1,15)", sig, "hessian::PicardLattice"));
    let q_sh = lattices::discriminant_form(&pic.sh).expect("nondegenerate");
    let q_t = lattices::discriminant_form(&pic.t).expect("nondegenerate");
    v.push(Check::eq("picard.disc.order", 48, q_sh.order(), "lattices::discriminant_form"));
    v.push(Check::eq("picard.disc.invariants", "2,2,2,6", form_label(&q_sh), "lattices::discriminant_form"));
    v.push(Check::eq("picard.disc.q-SH-is-minus-q-T", true, lattices::fqf_isomorphic(&q_sh, &q_t.negate()), "lattices::fqf_isomorphic"));
    let model = lattices::discriminant_of_gram(&lattices::block_diagonal(&[
        lattices::standard_gram("A2(-2)").expect("A2(-2)"),
        lattices::standard_gram("U(2)").expect("U(2)"),
    ]))
    .expect("nondegenerate")
    .form;
    v.push(Check::eq("picard.disc.q-T-is-A2(-2)+U(2)", true, lattices::fqf_isomorphic(&q_t, &model), "lattices::fqf_isomorphic"));
    v.push(Check::eq("picard.disc.q-SH-is-A2(2)+U(2)", true, lattices::fqf_isomorphic(&q_sh, &model.negate()), "lattices::fqf_isomorphic"));
    let w = pic.weyl();
    v.push(Check::cond(
        "picard.weyl.projection",
        "NN+TT",
        if w == &pic.node_sum() + &pic.line_sum() { "NN+TT".into() } else { pic.describe(&w) },
        w == &pic.node_sum() + &pic.line_sum(),
        "hessian::PicardLattice::weyl",
    ));
    v.push(Check::eq("picard.weyl.square", 20, pic.square(&w), "hessian::PicardLattice::weyl"));
    let (h, s) = pic.hyperplane_classes().expect("hyperplane classes");
    v.push(Check::eq("picard.eta.squares", "4,4,6", format!("{},{},{}", pic.square(&h), pic.square(&s), pic.dot(&h, &s)), "hessian::PicardLattice::hyperplane_classes"));
    let ok = CurveName::all().into_iter().all(|c| {
        pic.dot(&h, pic.curve(c)) == BigRational::from_integer(int((c.kind == CurveKind::Line) as i64))
    });
    v.push(Check::eq("picard.eta.degrees", "lines 1, nodes 0", if ok { "lines 1, nodes 0" } else { "mismatch" }, "hessian::PicardLattice::hyperplane_classes"));
    v
}

/// "(1,n−1)" when ω′ is positive and ω′⊥ is negative definite, checked by
/// the signs of leading principal minors.
fn signature_counts(gram: &IntMatrix) -> String {
    let pic = picard();
    let w = pic.weyl();
    let ww = pic.square(&w);
    // project the basis onto w⊥ and test negative definiteness there
    let n = gram.rows();
    let basis: Vec<DivisorClass> = (0..n)
        .map(|i| {
            let e = DivisorClass { coords: crate::exact::RatVector::unit(n, i) };
            let k = pic.dot(&e, &w) / &ww;
            &e - &w.scale(&k)
        })
        .collect();
    // w⊥ has rank n−1; take n−1 independent projections
    let mut chosen: Vec<DivisorClass> = Vec::new();
    for b in basis {
        let mut trial = chosen.clone();
        trial.push(b);
        if gram_det(pic, &trial) != BigRational::zero() {
            chosen = trial;
        }
        if chosen.len() == n - 1 {
            break;
        }
    }
    let negative_definite = (1..=chosen.len()).all(|k| {
        let d = gram_det(pic, &chosen[..k]);
        if k % 2 == 1 { d.is_negative() } else { d.is_positive() }
    });
    if ww.is_positive() && negative_definite && chosen.len() == n - 1 {
        format!("(1,{})", n - 1)
    } else {
        "indefinite".into()
    }
}

fn gram_det(pic: &PicardLattice, vs: &[DivisorClass]) -> BigRational {
    let n = vs.len();
    let mut m: Vec<Vec<BigRational>> = vs.iter().map(|a| vs.iter().map(|b| pic.dot(a, b)).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &f * &m[c][k];
                m[r][k] -= t;
            }
        }
    }
    det
}

pub fn curves() -> Vec<Check> {
    let pic = picard();
    let mut v = Vec::new();
    let mut t_gens = r_vectors();
    t_gens.push(lorentz::theta());
    let orth = CurveName::all()
        .into_iter()
        .filter(|&c| t_gens.iter().all(|g| bilinear(g, &curve_root(c).vector()) == 0))
        .count();
    v.push(Check::eq("curves.orthogonal-to-T", "20/20", format!("{orth}/20"), "hessian::curve_root"));
    let roots: Vec<LorentzVector> = CurveName::all().into_iter().map(|c| curve_root(c).vector()).collect();
    let span = lattices::span(&roots).expect("curves span");
    v.push(Check::eq("curves.span.rank", 16, span.rank(), "lattices::span"));
    v.push(Check::eq("curves.span.index-in-SH", 1, (span.det().abs() / pic.sh.det().abs()).sqrt(), "hessian::build_sh"));
    v.push(Check::eq("curves.span.equals-SH", true, span.basis == pic.sh.basis, "hessian::build_sh"));
    let mut mismatches = 0;
    for (a, ra) in CurveName::all().into_iter().zip(&roots) {
        for (b, rb) in CurveName::all().into_iter().zip(&roots) {
            if bilinear(ra, rb) != incidence_rule(a, b) {
                mismatches += 1;
            }
        }
    }
    v.push(Check::eq("curves.gram-equals-incidence", 0, mismatches, "hessian::incidence"));
    let mut class_mismatches = 0;
    for a in CurveName::all() {
        for b in CurveName::all() {
            if pic.dot(pic.curve(a), pic.curve(b)) != BigRational::from_integer(int(incidence_rule(a, b))) {
                class_mismatches += 1;
            }
        }
    }
    v.push(Check::eq("curves.classes-equal-incidence", 0, class_mismatches, "hessian::PicardLattice::curve"));
    let (_, adj) = hessian::enriques_quotient_graph();
    let (edges, cubic, girth) = hessian::petersen_data(&adj);
    v.push(Check::eq("curves.petersen", "edges=15 cubic=true girth=5", format!("edges={edges} cubic={cubic} girth={girth}"), "hessian::petersen_data"));
    let degrees: BTreeSet<(usize, usize)> = CurveName::all()
        .into_iter()
        .map(|c| match c.kind {
            CurveKind::Node => (0, hessian::lines_through(c).len()),
            CurveKind::Line => (1, hessian::nodes_on(c).len()),
        })
        .collect();
    v.push(Check::eq("curves.incidence-degrees", "nodes 3, lines 3", describe_degrees(&degrees), "hessian::incidence_rule"));
    let tau_ok = CurveName::all().into_iter().all(|c| c.tau().tau() == c && c.tau().kind != c.kind);
    v.push(Check::eq("curves.tau-pairing", true, tau_ok, "hessian::CurveName::tau"));
    v
}

fn describe_degrees(d: &BTreeSet<(usize, usize)>) -> String {
    let of = |k| join(d.iter().filter(|(kind, _)| *kind == k).map(|(_, n)| n));
    format!("nodes {}, lines {}", of(0), of(1))
}

pub fn pencils_suite() -> Vec<Check> {
    let pic = picard();
    let mut v = Vec::new();
    for mut c in pencils::relation_checks(pic)
        .into_iter()
        .chain(pencils::norm_checks(pic))
        .chain(pencils::pencil_checks(pic))
    {
        c.id = format!("pencils.{}", c.id);
        v.push(c);
    }
    v
}

pub fn weber_suite() -> Vec<Check> {
    let mut v = Vec::new();
    let (odd, even) = weber::enumerate_tetrads();
    v.push(Check::eq("weber.tetrads", "odd=60 even=80", format!("odd={} even={}", odd.len(), even.len()), "weber::enumerate_tetrads"));
    let hexads = weber::enumerate_weber_hexads();
    v.push(Check::eq("weber.hexads", 192, hexads.len(), "weber::enumerate_weber_hexads"));
    let ten_everywhere = hexads.iter().all(|h| weber::hexad_profile(h).map(|p| p.ten.len() == 10).unwrap_or(false));
    v.push(Check::eq("weber.hexads.ten-divisors", true, ten_everywhere, "weber::hexad_profile"));
    v.push(Check::eq("weber.group.symplectic", 720, weber::symplectic_group().len(), "weber::symplectic_group"));
    v.push(Check::eq("weber.group.affine", 11520, weber::affine_symplectic_group().len(), "weber::affine_symplectic_group"));
    let h = weber::standard_hexad();
    let (orbit, stab, alternating) = weber::hexad_orbit_data(&h);
    v.push(Check::eq("weber.hexad.orbit", 192, orbit, "weber::hexad_orbit_data"));
    v.push(Check::eq("weber.hexad.stabilizer", 60, stab, "weber::hexad_orbit_data"));
    v.push(Check::eq("weber.hexad.stabilizer-even", true, alternating, "weber::hexad_orbit_data"));
    v.push(Check::eq("weber.tables", "", weber::table_failures().join(";"), "weber::table_failures"));
    match weber::hexad_profile(&h) {
        Ok(p) => {
            let ten: BTreeSet<ThetaDivisor> = weber::STANDARD_TEN.iter().map(|s| ThetaDivisor::parse(s).expect("label")).collect();
            let got: BTreeSet<ThetaDivisor> = p.ten.iter().copied().collect();
            v.push(Check::eq("weber.hexad.listed-ten", join(&ten), join(&got), "weber::hexad_profile"));
            let mut five = weber::standard_numbering();
            five.sort();
            let fmt = |s: &[BTreeSet<ThetaDivisor>]| s.iter().map(|x| format!("{{{}}}", join(x))).collect::<Vec<_>>().join("");
            v.push(Check::eq("weber.hexad.listed-five", fmt(&five), fmt(&p.five_sets), "weber::hexad_profile"));
        }
        Err(e) => v.push(Check::error("weber.hexad.profile", "ten divisors", e, "weber::hexad_profile")),
    }
    let d = weber::standard_dictionary();
    let mut mismatches = 0;
    for (n, vert) in &d.nodes {
        for (l, edge) in &d.lines {
            let node = CurveName { kind: CurveKind::Node, label: *n };
            let line = CurveName { kind: CurveKind::Line, label: *l };
            let transported = edge.is_subset(*vert) as i64;
            if transported != incidence_rule(node, line) || transported != lorentz::root_pairing(&curve_root(node), &curve_root(line)).unwrap_or(-1) {
                mismatches += 1;
            }
        }
    }
    v.push(Check::eq("weber.dictionary.incidence", 0, mismatches, "weber::standard_dictionary"));
    let bij = d.nodes.values().collect::<BTreeSet<_>>().len() == 10 && d.lines.values().collect::<BTreeSet<_>>().len() == 10;
    v.push(Check::eq("weber.dictionary.bijective", true, bij, "weber::pentahedral_dictionary"));
    let zero_node = d.nodes.contains_key(&TwoTorsion::ZERO);
    v.push(Check::eq("weber.dictionary.nodes-off-hexad", false, zero_node, "weber::pentahedral_dictionary"));
    v
}

/// v is primitive in S_H with v² = n and x ↦ x − 2(x·v)/n·v integral.
fn is_root(pic: &PicardLattice, c: &DivisorClass, n: i64) -> bool {
    primitive(c) && pic.square(c) == BigRational::from_integer(int(n)) && reflective(pic, c)
}

fn primitive(c: &DivisorClass) -> bool {
    c.coords.to_integers().map(|v| lattices::gcd_of(&v).is_one()).unwrap_or(false)
}

fn reflective(pic: &PicardLattice, c: &DivisorClass) -> bool {
    let n = pic.square(c);
    let two = BigRational::from_integer(int(2));
    CurveName::all().into_iter().all(|x| (&two * pic.dot(pic.curve(x), c) / &n).is_integer())
}

pub fn walls_suite() -> Vec<Check> {
    let pic = picard();
    let w = walls::walls();
    let mut v = Vec::new();
    v.push(Check::eq(
        "walls.counts",
        "1a=12 2=10 3a=15 3b=15",
        format!("1a={} 2={} 3a={} 3b={}", w.one_a.len(), w.two.len(), w.three_a.len(), w.three_b.len()),
        "autgroup::walls::enumerate_wall_roots",
    ));
    let listed: BTreeSet<String> = LISTED_ONE_A.iter().map(|s| PointSet::parse(s).expect("octad").to_string()).collect();
    let found: BTreeSet<String> = w.one_a.iter().map(|x| x.support.to_string()).collect();
    v.push(Check::eq("walls.1a.listed", join(&listed), join(&found), "autgroup::walls::enumerate_wall_roots"));
    let k12 = PointSet::parse(LISTED_TWO_12).expect("octad");
    let pair12: Vec<String> = w.two.iter().filter(|x| x.wall.x_indices == [1, 2]).map(|x| x.support.to_string()).collect();
    v.push(Check::eq("walls.2.listed-pair-1-2", k12, pair12.join(" "), "autgroup::walls::enumerate_wall_roots"));
    let pairs: BTreeSet<Vec<usize>> = w.two.iter().map(|x| x.wall.x_indices.clone()).collect();
    v.push(Check::eq("walls.2.one-per-pair", "10 pairs", format!("{} pairs", pairs.len()), "autgroup::walls::classify_wall_root"));
    let k3a: Vec<String> = w
        .three_a
        .iter()
        .filter(|x| x.wall.x_indices == [1])
        .map(|x| x.support.to_string())
        .collect();
    let want3a: Vec<String> = LISTED_THREE_A_1.iter().map(|&k| PointSet::of(&[k]).to_string()).collect();
    v.push(Check::eq("walls.3a.listed-x1", want3a.join(" "), k3a.join(" "), "autgroup::walls::enumerate_wall_roots"));
    let listed3b: BTreeSet<String> = LISTED_THREE_B_1.iter().map(|s| PointSet::parse(s).expect("octad").to_string()).collect();
    let found3b: BTreeSet<String> = w.three_b.iter().filter(|x| x.wall.x_indices == [1]).map(|x| x.support.to_string()).collect();
    v.push(Check::eq("walls.3b.listed-x1", join(&listed3b), join(&found3b), "autgroup::walls::enumerate_wall_roots"));
    for (case, label) in [(WallCase::OneA, "1a"), (WallCase::Two, "2"), (WallCase::ThreeA, "3a"), (WallCase::ThreeB, "3b")] {
        let norms: BTreeSet<String> = w.by_case(case).iter().map(|x| pic.square(&x.wall.r1).to_string()).collect();
        v.push(Check::eq(format!("walls.{label}.r1-norm"), case.r1_norm(), join(norms), "autgroup::walls::classify_wall_root"));
    }
    let ok1a = w.one_a.iter().all(|x| is_root(pic, &x.wall.r1.times(3), -6));
    v.push(Check::eq("walls.1a.3r1-is-(-6)-root", true, ok1a, "autgroup::walls"));
    let ok2 = w.two.iter().all(|x| is_root(pic, &x.wall.r1.times(2), -4));
    v.push(Check::eq("walls.2.2r1-is-(-4)-root", true, ok2, "autgroup::walls"));
    let ok3 = w.three_a.iter().all(|x| {
        let s = x.wall.r1.times(6);
        primitive(&s) && pic.square(&s) == BigRational::from_integer(int(-24)) && !reflective(pic, &s)
    });
    v.push(Check::eq("walls.3a.6r1-primitive-(-24)-not-reflective", true, ok3, "autgroup::walls"));
    let worked = [
        (
            "walls.worked.1a",
            &w.one_a,
            PointSet::parse(LISTED_ONE_A[0]).expect("octad"),
            "1/15(-2TT + 2NN + 10(T36+T46+T15+T25+T34) + 5(N36+N46+N56+N13+N24))",
        ),
        ("walls.worked.2", &w.two, k12, "1/2(C16 - N45)"),
        (
            "walls.worked.3a",
            &w.three_a,
            PointSet::of(&[5]),
            "1/2(N26+N45+N56+N24) - 1/3(N16+N36) + 1/3(N13+N46) + 2/3(T46+T25) + 1/3(T15+T23)",
        ),
    ];
    for (id, list, k, e) in worked {
        let want = expr::parse(pic, e).expect("expression parses");
        let got = list.iter().find(|x| x.support == k).map(|x| x.wall.r1.clone());
        let ok = got.as_ref() == Some(&want);
        let actual = match got {
            Some(_) if ok => e.to_string(),
            Some(g) => pic.describe(&g),
            None => "absent".into(),
        };
        v.push(Check::cond(id, e, actual, ok, "autgroup::walls::classify_wall_root"));
    }
    let target: BTreeMap<CurveName, i64> = ["N46", "N13", "T26", "T56"].iter().map(|n| (CurveName::parse(n).expect("curve"), 1)).collect();
    let hit = w.three_b.iter().find(|x| curve_pattern(&x.wall.root).into_iter().collect::<BTreeMap<_, _>>() == target);
    v.push(Check::cond(
        "walls.3b.alternate-zero-section",
        "pairs 1 with N46,N13,T26,T56",
        hit.map(|x| x.support.to_string()).unwrap_or_else(|| "absent".into()),
        hit.is_some(),
        "autgroup::walls::curve_pattern",
    ));
    let zero_ok = CurveName::all().into_iter().all(|c| {
        walls::classify_wall_root(&curve_root(c)).map(|x| x.case == WallCase::Zero && &x.r1 == pic.curve(c)).unwrap_or(false)
    });
    v.push(Check::eq("walls.0.curves", true, zero_ok, "autgroup::walls::classify_wall_root"));
    v
}

fn disc_ok(pic: &PicardLattice, m: &Isometry) -> bool {
    discriminant_action(pic, m) != DiscriminantAction::Other
}

pub fn generators_suite() -> Vec<Check> {
    let pic = picard();
    let cat = catalog();
    let env = named_env(pic);
    let weyl = pic.weyl();
    let mut v = Vec::new();
    let loc = "autgroup::generators";
    v.push(Check::eq("generators.tau.involution", true, cat.tau.is_involution(), "autgroup::generators::enriques_tau"));
    v.push(Check::eq("generators.tau.eta", true, cat.tau.apply(&pic.eta_h()) == pic.eta_s(), "autgroup::generators::enriques_tau"));
    v.push(Check::eq("generators.tau.discriminant", "-1", discriminant_action(pic, &cat.tau), "autgroup::isometry::discriminant_action"));
    v.push(Check::eq("generators.symmetries.order", 240, cat.group.len(), loc));
    v.push(Check::eq("generators.symmetries.closure", 240, cat.closure_order, loc));
    let fix = cat.group.elements.iter().all(|m| m.apply(&weyl) == weyl);
    v.push(Check::eq("generators.symmetries.fix-weyl", true, fix, loc));
    let p16 = expr::parse(pic, "2eH-2T23-N26-N45-N36-N16").expect("class");
    v.push(Check::eq("generators.p16.eta", true, cat.p16_table.apply(&pic.eta_h()) == p16, "autgroup::generators::P16_TABLE"));
    let counts = format!(
        "p={} phi={} g={} tphi={} tg={}",
        cat.p.len(),
        cat.wall_generators.iter().filter(|w| w.case == WallCase::OneA).count(),
        cat.wall_generators.iter().filter(|w| w.case == WallCase::ThreeA).count(),
        cat.wall_generators.iter().filter(|w| w.case == WallCase::OneB).count(),
        cat.wall_generators.iter().filter(|w| w.case == WallCase::ThreeB).count(),
    );
    v.push(Check::eq("generators.counts", "p=10 phi=12 g=15 tphi=12 tg=15", counts, loc));
    let all: Vec<&Isometry> = cat
        .p
        .values()
        .chain(cat.wall_generators.iter().map(|w| &w.iso))
        .chain([&cat.tau, &cat.phi, &cat.f, &cat.g])
        .chain(&cat.f_conjugates)
        .collect();
    let n = all.len();
    let gram = all.iter().filter(|m| m.preserves_gram(pic)).count();
    v.push(Check::eq("generators.all.gram", format!("{n}/{n}"), format!("{gram}/{n}"), "autgroup::isometry::Isometry::preserves_gram"));
    let inv = all.iter().filter(|m| m.is_involution()).count();
    v.push(Check::eq("generators.all.involution", format!("{n}/{n}"), format!("{inv}/{n}"), "autgroup::isometry::Isometry::is_involution"));
    let disc = all.iter().filter(|m| disc_ok(pic, m)).count();
    v.push(Check::eq("generators.all.discriminant-pm1", format!("{n}/{n}"), format!("{disc}/{n}"), "autgroup::isometry::discriminant_action"));
    for (case, label, push) in [
        (WallCase::OneA, "1a", 15),
        (WallCase::Two, "2", 4),
        (WallCase::ThreeA, "3a", 12),
        (WallCase::OneB, "1b", 15),
        (WallCase::ThreeB, "3b", 12),
    ] {
        let gens: Vec<_> = cat.wall_generators.iter().filter(|w| w.case == case).collect();
        let ok = gens
            .iter()
            .filter(|w| w.iso.apply(&w.r1) == w.r1.times(-1) && w.iso.apply(&weyl) == &weyl + &w.r1.times(push))
            .count();
        v.push(Check::eq(
            format!("generators.push.{label}"),
            format!("ω′+{push}r1 on {0}/{0}", gens.len()),
            format!("ω′+{push}r1 on {ok}/{}", gens.len()),
            loc,
        ));
    }
    let p = |n: &str| &cat.p[&CurveName::node(n)];
    v.push(Check::eq("generators.composite.skew-is-tau-p16-p36", true, cat.skew_table == cat.tau.compose(p("16")).compose(p("36")), "autgroup::generators::SKEW_TABLE"));
    let (sols, _) = cover_involutions(pic, CurveName::line("15"), CurveName::line("23"));
    v.push(Check::eq("generators.composite.skew-derived", "unique, equals table", describe_unique(&sols, &cat.skew_table), "autgroup::generators::cover_involutions"));
    let (sols, _) = cover_involutions(pic, CurveName::line("15"), CurveName::line("25"));
    v.push(Check::eq("generators.composite.two-pencils-is-p56", "unique, equals table", describe_unique(&sols, p("56")), "autgroup::generators::cover_involutions"));
    let (sols, _) = cover_involutions(pic, CurveName::line("26"), CurveName::line("56"));
    let rem = sols.len() == 1 && p("35").compose(p("12")) == cat.tau.compose(&sols[0]);
    v.push(Check::eq("generators.composite.p35-p12-is-tau-skew", true, rem, "autgroup::generators::cover_involutions"));
    v.push(Check::eq("generators.composite.g-is-f-p35-p12", true, cat.g == cat.f.compose(p("35")).compose(p("12")), "autgroup::generators::G_TABLE"));
    let commute = cat.p.values().all(|m| m.compose(&cat.tau) == cat.tau.compose(m));
    v.push(Check::eq("generators.composite.p-commutes-with-tau", true, commute, loc));
    let not_refl: Vec<usize> = cat.p.values().map(moved_rank).collect();
    let all_gt1 = not_refl.iter().all(|&r| r > 1);
    v.push(Check::cond("generators.p.not-reflection", "rank(p-1)>1", format!("rank(p-1)={}", join(not_refl.iter().collect::<BTreeSet<_>>())), all_gt1, "autgroup::generators::moved_rank"));
    let phi_rank = moved_rank(&cat.phi);
    v.push(Check::eq("generators.phi.reflection", 1, phi_rank, "autgroup::generators::moved_rank"));
    let f26 = cat.f.apply(pic.curve(CurveName::node("26"))) == *pic.curve(CurveName::node("56"));
    v.push(Check::eq("generators.f.N26", true, f26, "autgroup::generators::F_TABLE"));
    let g2 = cat.g.apply(pic.curve(CurveName::line("26"))) == env["G2"];
    v.push(Check::eq("generators.g.T26-is-G2", true, g2, "autgroup::generators::G_TABLE"));
    v.push(Check::eq("generators.g.discriminant", "-1", discriminant_action(pic, &cat.g), "autgroup::isometry::discriminant_action"));
    let base = walls::walls().three_a.iter().find(|x| x.support == PointSet::of(&[5])).expect("worked wall");
    let r1 = &base.wall.r1;
    let pair = pic.sum_of(&[CurveName::line("26"), CurveName::line("56")]);
    let six = &pair + &r1.times(6);
    v.push(Check::eq("generators.g.symmetric", true, cat.g.apply(&pair) == six, "autgroup::generators::G_TABLE"));
    v.push(Check::eq("generators.f.asymmetric", true, cat.f.apply(&pair) != six, "autgroup::generators::F_TABLE"));
    let d13 = &env["D1"] + &env["D3"];
    let want = &pic.sum_of(&[CurveName::node("16"), CurveName::node("36")]) + &r1.times(6);
    v.push(Check::eq("generators.f.D1-plus-D3", true, d13 == want, "autgroup::generators::F_TABLE"));
    v.push(Check::eq("generators.g.crosses-worked-wall", true, cat.g.apply(r1) == r1.times(-1) && cat.g.apply(&weyl) == &weyl + &r1.times(12), loc));
    let alpha = expr::parse(pic, crate::autgroup::generators::PHI_ALPHA).expect("α");
    v.push(Check::eq("generators.phi.alpha-root", true, is_root(pic, &alpha, -6), "autgroup::generators::reflection_phi"));
    let m_classes: Vec<DivisorClass> = ["C16", "C14", "N26", "N45", "C23", "T15", "N16", "N56", "N24", "T36", "T34", "N36", "N13", "N12", "N46", "N35", "T46", "T25"]
        .iter()
        .map(|s| expr::parse(pic, s).expect("class"))
        .collect();
    let orth = m_classes.iter().all(|c| pic.dot(c, &alpha).is_zero());
    let rank = IntMatrix::from_rows(
        16,
        &m_classes.iter().map(|c| c.coords.to_integers().expect("integral")).collect::<Vec<_>>(),
    )
    .rank();
    v.push(Check::eq("generators.phi.alpha-orthogonal-to-fibres", "orthogonal, rank 15", format!("{}, rank {rank}", if orth { "orthogonal" } else { "not orthogonal" }), "autgroup::generators::PHI_ALPHA"));
    let phi_first = cat.wall_generators.iter().find(|w| w.case == WallCase::OneA).map(|w| &w.iso);
    v.push(Check::eq("generators.phi.first-1a-wall", true, phi_first == Some(&cat.phi), loc));
    let k12 = PointSet::parse(LISTED_TWO_12).expect("octad");
    let idx = walls::walls().two.iter().position(|x| x.support == k12);
    let name = idx.and_then(|i| cat.wall_generators.iter().filter(|w| w.case == WallCase::Two).nth(i)).map(|w| w.name.clone());
    v.push(Check::eq("generators.p.listed-case-2-wall", "p45", name.unwrap_or_default(), loc));
    let s5: Vec<Isometry> = Perm5::all().into_iter().map(|s| pentahedral_symmetry(pic, s).expect("symmetry")).collect();
    let orbit = |x: &Isometry, by: &[Isometry]| -> BTreeSet<Vec<i64>> { by.iter().map(|s| x.conjugate_by(s, pic).m).collect() };
    let of_cases = |cs: &[WallCase]| -> BTreeSet<Vec<i64>> {
        cat.wall_generators.iter().filter(|w| cs.contains(&w.case)).map(|w| w.iso.m.clone()).collect()
    };
    let describe = |o: &BTreeSet<Vec<i64>>, target: &BTreeSet<Vec<i64>>, label: &str| {
        format!("{}, {}", o.len(), if o == target { format!("equals {label}") } else { "differs".into() })
    };
    let phis = of_cases(&[WallCase::OneA, WallCase::OneB]);
    v.push(Check::eq("generators.phi.S5-orbit", 12, orbit(&cat.phi, &s5).len(), loc));
    v.push(Check::eq("generators.phi.symmetry-orbit", "24, equals 1a+1b", describe(&orbit(&cat.phi, &cat.group.elements), &phis, "1a+1b"), loc));
    let gs = of_cases(&[WallCase::ThreeA, WallCase::ThreeB]);
    v.push(Check::eq("generators.g.symmetry-orbit", "30, equals 3a+3b", describe(&orbit(&cat.g, &cat.group.elements), &gs, "3a+3b"), loc));
    v
}

fn describe_unique(sols: &[Isometry], want: &Isometry) -> String {
    match sols {
        [one] if one == want => "unique, equals table".into(),
        [_] => "unique, differs".into(),
        _ => format!("{} solutions", sols.len()),
    }
}

pub fn reduce_suite(seed: u64) -> Vec<Check> {
    let pic = picard();
    let cat = catalog();
    let weyl = pic.weyl();
    let loc = "autgroup::reduce::reduce_height";
    let mut v = Vec::new();
    match parse_word(cat, "p16").and_then(|g| reduce_height(&g)) {
        Ok((r, res)) => {
            let got = format!("word={} heights={} residual={}", r.word.join(","), r.heights.join(","), if res.is_identity() { "id" } else { "other" });
            v.push(Check::eq("reduce.p16", "word=p16 heights=28,20 residual=id", got, loc));
        }
        Err(e) => v.push(Check::error("reduce.p16", "word=p16", e, loc)),
    }
    match parse_word(cat, "tau").and_then(|g| reduce_height(&g)) {
        Ok((r, _)) => v.push(Check::eq("reduce.tau", "word= residual=tau∘s12345", format!("word={} residual={}", r.word.join(","), r.residual.unwrap_or_default()), loc)),
        Err(e) => v.push(Check::error("reduce.tau", "empty word", e, loc)),
    }
    let group_h = cat.group.elements.iter().all(|m| height(pic, &weyl, m) == int(20));
    v.push(Check::eq("reduce.group-height-20", true, group_h, "autgroup::isometry::height"));
    const N: usize = 200;
    let words = random_words(seed, N, 12);
    let (mut terminated, mut in_group, mut bound, mut iff) = (0, 0, 0, 0);
    for w in &words {
        let Ok(g) = parse_word(cat, &w.join(",")) else { continue };
        let h = height(pic, &weyl, &g);
        if h >= int(20) {
            bound += 1;
        }
        if (h == int(20)) == cat.group.contains(&g) {
            iff += 1;
        }
        if let Ok((r, res)) = reduce_height(&g) {
            terminated += 1;
            if cat.group.contains(&res) && r.residual.is_some() {
                in_group += 1;
            }
        }
    }
    let frac = |k: usize| format!("{k}/{N}");
    v.push(Check::eq("reduce.random.terminates", frac(N), frac(terminated), loc));
    v.push(Check::eq("reduce.random.residual-in-group", frac(N), frac(in_group), loc));
    v.push(Check::eq("reduce.random.height-at-least-20", frac(N), frac(bound), "autgroup::isometry::height"));
    v.push(Check::eq("reduce.random.height-20-iff-group", frac(N), frac(iff), "autgroup::isometry::height"));
    v
}
