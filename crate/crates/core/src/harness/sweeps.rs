use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, FactorizationWitness};
use crate::concordance::{defect_element, g4_upper_from_witness, psi};
use crate::{Error, Result};

/// Largest number of pairs an exhaustive defect sweep will enumerate.
pub const DEFECT_PAIR_BUDGET: usize = 4_000_000;

/// Every word of length `≤ max_len` over `σ_1^{±1}, …, σ_{n-1}^{±1}`,
/// shortest first, including non-reduced ones.
pub fn all_words(n: usize, max_len: usize) -> Result<Vec<BraidWord>> {
    if n == 0 {
        return Err(Error::NoStrands);
    }
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut words = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<i32>| {
                alphabet.iter().map(move |&v| {
                    let mut next = w.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
        words.extend(layer.iter().cloned());
    }
    words.into_iter().map(|l| BraidWord::new(n, l)).collect()
}

/// A uniformly random word of uniformly random length `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = if n < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) { i } else { -i }
            })
            .collect()
    };
    BraidWord::new(n.max(1), letters).expect("letters are in range")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectRow {
    pub a: BraidWord,
    pub b: BraidWord,
    pub g4_lower: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub strands: usize,
    pub max_len: usize,
    pub pairs: usize,
    pub bound: u64,
    pub max_observed: u64,
    /// Pairs attaining `max_observed`, at most ten.
    pub worst: Vec<DefectRow>,
    pub violations: Vec<DefectRow>,
}

/// Exhaustive check of `g₄-lower(Ψ(α) + Ψ(β) - Ψ(αβ)) ≤ 3n + 1`.
pub fn defect_sweep(n: usize, max_len: usize) -> Result<DefectReport> {
    let words = all_words(n, max_len)?;
    let pairs = words.len() * words.len();
    if pairs > DEFECT_PAIR_BUDGET {
        return Err(Error::InvalidParameter(format!(
            "{pairs} pairs exceed the sweep budget of {DEFECT_PAIR_BUDGET}"
        )));
    }
    let bound = 3 * n as u64 + 1;
    let values: Vec<u64> = (0..pairs)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (&words[k / words.len()], &words[k % words.len()]);
            let d = defect_element(a, b).expect("same strand count");
            d.signature().unsigned_abs().div_ceil(2)
        })
        .collect();
    let row = |k: usize| DefectRow {
        a: words[k / words.len()].clone(),
        b: words[k % words.len()].clone(),
        g4_lower: values[k],
    };
    let max_observed = values.iter().copied().max().unwrap_or(0);
    let worst = (0..pairs).filter(|&k| values[k] == max_observed).take(10).map(row).collect();
    let violations = (0..pairs).filter(|&k| values[k] > bound).map(row).collect();
    Ok(DefectReport { strands: n, max_len, pairs, bound, max_observed, worst, violations })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LipschitzRow {
    pub word: BraidWord,
    pub g4_lower: u64,
    /// `⌈ℓ/2⌉`.
    pub ceiling: u64,
    /// From the letter-by-letter witness.
    pub g4_upper: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LipschitzReport {
    pub strands: usize,
    pub samples: usize,
    pub max_len: usize,
    pub seed: u64,
    /// Largest `g4_lower - ⌈ℓ/2⌉` seen; never positive on a passing run.
    pub worst_margin: i64,
    pub worst: Option<LipschitzRow>,
    /// Rows with `g4_lower > ⌈ℓ/2⌉` or `g4_lower > g4_upper`.
    pub violations: Vec<LipschitzRow>,
}

/// Seeded random check of `g₄-lower(Ψ(α)) ≤ ⌈ℓ(α)/2⌉` together with the
/// trivial-witness upper bound.
pub fn lipschitz_sweep(n: usize, samples: usize, max_len: usize, seed: u64) -> Result<LipschitzReport> {
    if n == 0 {
        return Err(Error::NoStrands);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<BraidWord> = (0..samples).map(|_| random_word(&mut rng, n, max_len)).collect();
    let rows: Vec<LipschitzRow> = words
        .into_par_iter()
        .map(|word| {
            let g4_lower = psi(&word).signature().unsigned_abs().div_ceil(2);
            let g4_upper = g4_upper_from_witness(&word, &FactorizationWitness::letter_by_letter(&word))
                .expect("letter-by-letter witness is valid");
            LipschitzRow { ceiling: (word.len() as u64).div_ceil(2), word, g4_lower, g4_upper }
        })
        .collect();
    let margin = |r: &LipschitzRow| r.g4_lower as i64 - r.ceiling as i64;
    let worst = rows.iter().max_by_key(|r| margin(r)).cloned();
    let violations = rows.iter().filter(|r| margin(r) > 0 || r.g4_lower > r.g4_upper).cloned().collect();
    Ok(LipschitzReport {
        strands: n,
        samples,
        max_len,
        seed,
        worst_margin: worst.as_ref().map_or(0, margin),
        worst,
        violations,
    })
}
