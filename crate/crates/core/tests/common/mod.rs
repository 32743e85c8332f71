#![allow(dead_code)]

use braidknot::BraidWord;
use proptest::prelude::*;

pub fn w(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

pub fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let g = (n - 1) as i32;
    prop::collection::vec((1..=g, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i }), 0..=max_len)
}

pub fn word_in(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

/// A braid on 2 to `max_n` strands.
pub fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| word_in(n, max_len))
}

/// Every word of length `len` over the letters of `B_n`.
pub fn words_of_length(n: usize, len: usize) -> Vec<Vec<i32>> {
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}
