//! Height reduction: compose with wall generators while (γω′, ω′) drops.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::generators::{catalog, Catalog};
use super::isometry::{height, Isometry, DIM};
use crate::error::{Error, Result};
use crate::hessian::picard;

/// Upper bound on descent steps; heights are integers bounded below by 20.
pub const MAX_STEPS: usize = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    /// Generators in the order they were applied.
    pub word: Vec<String>,
    /// Heights before the first step and after each step.
    pub heights: Vec<String>,
    /// Name of the residual in ⟨τ, S₅⟩, if it lies there.
    pub residual: Option<String>,
}

/// Parses a comma-separated word; `a,b,c` denotes a∘b∘c.
pub fn parse_word(cat: &Catalog, word: &str) -> Result<Isometry> {
    let mut acc = Isometry::identity();
    let mut names = Vec::new();
    for name in word.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let g = cat.lookup(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
        acc = acc.compose(&g);
        names.push(name.to_string());
    }
    Ok(acc.named(if names.is_empty() { "id".into() } else { names.join("∘") }))
}

/// Integer coordinates of ω′ and, per wall generator, the row vector
/// ω′ᵀ G σ, so that (σγω′, ω′) = row · (γω′).
struct HeightRows {
    w: Vec<i128>,
    rows: Vec<Vec<i128>>,
}

fn height_rows(cat: &Catalog) -> HeightRows {
    let pic = picard();
    let weyl = pic.weyl();
    let w: Vec<i128> = weyl
        .coords
        .to_integers()
        .expect("ω′ is integral")
        .iter()
        .map(|x| i128::try_from(x).expect("small"))
        .collect();
    let g = pic.gram.to_i64_rows();
    let u: Vec<i128> = (0..DIM).map(|j| (0..DIM).map(|i| w[i] * g[i][j] as i128).sum()).collect();
    let rows = cat
        .wall_generators
        .iter()
        .map(|s| (0..DIM).map(|j| (0..DIM).map(|i| u[i] * s.iso.m[i * DIM + j] as i128).sum()).collect())
        .collect();
    HeightRows { w, rows }
}

fn image_of_weyl(hr: &HeightRows, m: &Isometry) -> Vec<i128> {
    (0..DIM).map(|i| (0..DIM).map(|j| m.m[i * DIM + j] as i128 * hr.w[j]).sum()).collect()
}

/// Steepest descent over the wall generators; ties go to the first in the
/// fixed order 1a, 2, 3a, 1b, 3b.
pub fn reduce_height(gamma: &Isometry) -> Result<(Reduction, Isometry)> {
    let pic = picard();
    let cat = catalog();
    let hr = height_rows(cat);
    let mut current = gamma.clone();
    let mut h = height(pic, &pic.weyl(), &current);
    let mut word = Vec::new();
    let mut heights = vec![h.to_string()];
    for _ in 0..MAX_STEPS {
        let gw = image_of_weyl(&hr, &current);
        let mut best: Option<(BigInt, usize)> = None;
        for (i, row) in hr.rows.iter().enumerate() {
            let hi = BigInt::from(row.iter().zip(&gw).map(|(a, b)| a * b).sum::<i128>());
            if hi < h && best.as_ref().map_or(true, |(b, _)| hi < *b) {
                best = Some((hi, i));
            }
        }
        let Some((hi, i)) = best else {
            let residual = cat.group.find(&current).map(|m| m.name.clone());
            return Ok((Reduction { word, heights, residual }, current));
        };
        let g = &cat.wall_generators[i];
        current = g.iso.compose(&current);
        h = hi;
        word.push(g.name.clone());
        heights.push(h.to_string());
    }
    Err(Error::NoTermination(MAX_STEPS))
}

/// Symbols used for random words: every wall generator, τ and two
/// generators of S₅.
pub fn word_alphabet(cat: &Catalog) -> Vec<String> {
    let mut v = cat.generator_names();
    v.extend(["tau", "s21345", "s23451"].map(String::from));
    v
}

/// `count` words of length 1..=max_len drawn from a ChaCha8 stream.
pub fn random_words(seed: u64, count: usize, max_len: usize) -> Vec<Vec<String>> {
    let alphabet = word_alphabet(catalog());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())].clone()).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_projection() {
        let cat = catalog();
        let g = parse_word(cat, "p16").unwrap();
        let (r, res) = reduce_height(&g).unwrap();
        assert_eq!(r.word, vec!["p16"]);
        // p(ω′) = ω′ + 4r₁ with (ω′, r₁) = 2
        assert_eq!(r.heights, vec!["28", "20"]);
        assert!(res.is_identity());
    }

    #[test]
    fn symmetries_are_reduced() {
        let cat = catalog();
        let (r, _) = reduce_height(&parse_word(cat, "tau").unwrap()).unwrap();
        assert!(r.word.is_empty());
        assert_eq!(r.residual.as_deref(), Some("tau∘s12345"));
    }

    #[test]
    fn unknown_symbol() {
        assert!(matches!(parse_word(catalog(), "p16,q1"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn seeded_words_are_reproducible() {
        assert_eq!(random_words(7, 5, 12), random_words(7, 5, 12));
        assert_ne!(random_words(7, 5, 12), random_words(8, 5, 12));
    }
}
