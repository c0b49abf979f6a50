use hessian_lattice::autgroup::isometry::height;
use hessian_lattice::autgroup::reduce::word_alphabet;
use hessian_lattice::autgroup::{catalog, parse_word, reduce_height};
use hessian_lattice::exact::{int, RatVector};
use hessian_lattice::hessian::{picard, DivisorClass};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = String> {
    let n = word_alphabet(catalog()).len();
    proptest::collection::vec(0..n, 1..=8).prop_map(|ix| {
        let a = word_alphabet(catalog());
        ix.into_iter().map(|i| a[i].clone()).collect::<Vec<_>>().join(",")
    })
}

fn class() -> impl Strategy<Value = DivisorClass> {
    proptest::collection::vec(-4i64..=4, 16).prop_map(|c| DivisorClass { coords: RatVector::from_i64(&c) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn words_are_isometries(w in word(), a in class(), b in class()) {
        let pic = picard();
        let g = parse_word(catalog(), &w).unwrap();
        prop_assert!(g.preserves_gram(pic));
        prop_assert_eq!(pic.dot(&g.apply(&a), &g.apply(&b)), pic.dot(&a, &b));
        prop_assert!(g.compose(&g.inverse(pic)).is_identity());
    }

    #[test]
    fn height_bounded_below_and_reduction_lands_in_group(w in word()) {
        let pic = picard();
        let cat = catalog();
        let g = parse_word(cat, &w).unwrap();
        let h = height(pic, &pic.weyl(), &g);
        prop_assert!(h >= int(20));
        prop_assert_eq!(h == int(20), cat.group.contains(&g));
        let (r, res) = reduce_height(&g).unwrap();
        prop_assert!(cat.group.contains(&res));
        prop_assert_eq!(r.heights.last().map(String::as_str), Some("20"));
        let hs: Vec<i64> = r.heights.iter().map(|s| s.parse().unwrap()).collect();
        prop_assert!(hs.windows(2).all(|p| p[1] < p[0]));
        // replaying the word on γ gives the residual
        let replay = r.word.iter().fold(g.clone(), |acc, n| cat.lookup(n).unwrap().compose(&acc));
        prop_assert_eq!(replay, res);
    }

    #[test]
    fn symmetries_commute_with_weyl(i in 0usize..240) {
        let pic = picard();
        let s = &catalog().group.elements[i];
        prop_assert_eq!(s.apply(&pic.weyl()), pic.weyl());
        prop_assert!(catalog().group.contains(&s.inverse(pic)));
    }
}
