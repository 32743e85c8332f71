mod common;

use std::collections::HashMap;

use braidknot::braid::{
    argyle, component_count, equals, include, is_identity, knot_projection, parse_braid, permutation_of,
    sigma_of, NormalCoordinates,
};
use braidknot::BraidWord;
use common::{w, word, word_in, words_of_length};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

/// Reduced words in the free group `F_n`, letters `±1..±n`.
type FreeWord = Vec<i32>;

fn free_reduce(word: impl IntoIterator<Item = i32>) -> FreeWord {
    let mut out: FreeWord = Vec::new();
    for x in word {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn free_inverse(word: &[i32]) -> FreeWord {
    word.iter().rev().map(|x| -x).collect()
}

/// Artin's action of a single generator on `x_1..x_n`.
fn artin_letter(v: i32, n: usize) -> Vec<FreeWord> {
    let i = v.unsigned_abs() as i32;
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    let (a, b) = ((i - 1) as usize, i as usize);
    if v > 0 {
        images[a] = vec![i, i + 1, -i];
        images[b] = vec![i];
    } else {
        images[a] = vec![i + 1];
        images[b] = vec![-(i + 1), i, i + 1];
    }
    images
}

fn substitute(word: &[i32], images: &[FreeWord]) -> FreeWord {
    free_reduce(word.iter().flat_map(|&x| {
        let img = &images[x.unsigned_abs() as usize - 1];
        if x > 0 { img.clone() } else { free_inverse(img) }
    }))
}

/// Images of the free generators under the automorphism of the braid.
fn artin_action(a: &BraidWord) -> Vec<FreeWord> {
    let n = a.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|j| vec![j]).collect();
    for &v in a.letters() {
        let step = artin_letter(v, n);
        images = images.iter().map(|img| substitute(img, &step)).collect();
    }
    images
}

#[test]
fn word_problem_matches_free_group_action_exhaustively() {
    // Equal braids must have equal coordinates and vice versa, so the
    // partitions of all words of length <= 6 induced by the two maps agree.
    let mut by_artin: HashMap<Vec<FreeWord>, NormalCoordinates> = HashMap::new();
    let mut by_coords: HashMap<NormalCoordinates, Vec<FreeWord>> = HashMap::new();
    let mut total = 0;
    for len in 0..=6 {
        for letters in words_of_length(3, len) {
            let a = BraidWord::new(3, letters).unwrap();
            let artin = artin_action(&a);
            let coords = NormalCoordinates::of(&a);
            total += 1;
            if let Some(c) = by_artin.get(&artin) {
                assert_eq!(c, &coords, "same braid, different coordinates: {a}");
            } else {
                by_artin.insert(artin.clone(), coords.clone());
            }
            if let Some(art) = by_coords.get(&coords) {
                assert_eq!(art, &artin, "different braids, same coordinates: {a}");
            } else {
                by_coords.insert(coords, artin);
            }
        }
    }
    assert_eq!(total, 5461);
    assert_eq!(by_artin.len(), by_coords.len());
}

#[test]
fn braid_relations() {
    assert!(equals(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
    assert!(equals(&w(5, &[1, 3]), &w(5, &[3, 1])).unwrap());
    assert!(equals(&w(5, &[2, 4, -2]), &w(5, &[4])).unwrap());
    assert!(!equals(&w(2, &[1]), &BraidWord::identity(2)).unwrap());
    assert!(!equals(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
    assert!(equals(&w(3, &[1]), &w(4, &[1])).is_err());
}

#[test]
fn argyle_braid_swaps_blocks() {
    for n in 2..=3usize {
        let a = argyle(n, 1).unwrap();
        for letters in words_of_length(n, 3).into_iter().step_by(3) {
            let x = BraidWord::new(n, letters).unwrap();
            let moved = include(&x, 2 * n).unwrap().conjugate(&a.invert()).unwrap();
            let shifted = x.shifted(n, 2 * n).unwrap();
            assert_eq!(permutation_of(&moved), permutation_of(&shifted));
            assert!(equals(&moved, &shifted).unwrap(), "n = {n}, x = {x}");
        }
    }
}

#[test]
fn commutator_power_identity() {
    let words: Vec<BraidWord> = (0..=4)
        .flat_map(|len| words_of_length(3, len))
        .map(|l| BraidWord::new(3, l).unwrap())
        .collect();
    let mut checked = 0;
    for a in words.iter().step_by(7) {
        for d in words.iter().step_by(11) {
            let ad = a.conjugate(d).unwrap();
            if !is_identity(&BraidWord::commutator(a, &ad).unwrap()) {
                continue;
            }
            let c = BraidWord::commutator(a, d).unwrap();
            for p in 1..=4 {
                let lhs = c.power(p);
                let rhs = BraidWord::commutator(&a.power(p), d).unwrap();
                assert!(equals(&lhs, &rhs).unwrap(), "a = {a}, d = {d}, p = {p}");
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "only {checked} cases");
    // the worked example: Δ conjugates σ₁σ₂⁻¹ to its inverse
    let a = w(3, &[1, -2]);
    let d = w(3, &[1, 2, 1]);
    for p in 1..=6 {
        assert!(equals(&BraidWord::commutator(&a.power(p), &d).unwrap(), &a.power(2 * p)).unwrap());
    }
}

#[test]
fn writhe_is_additive_on_random_pairs() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..100 {
        let (a, b) = (word_in(4, 12), word_in(4, 12)).new_tree(&mut runner).unwrap().current();
        let sum: i64 = a.letters().iter().chain(b.letters()).map(|v| v.signum() as i64).sum();
        assert_eq!(a.compose(&b).unwrap().writhe(), sum);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_cancels(a in word(5, 12)) {
        prop_assert!(is_identity(&a.compose(&a.invert()).unwrap()));
        prop_assert!(is_identity(&a.invert().compose(&a).unwrap()));
    }

    #[test]
    fn text_round_trip(a in word(6, 15)) {
        let text = a.to_string();
        let back = parse_braid(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn permutation_is_a_homomorphism(a in word_in(5, 10), b in word_in(5, 10)) {
        let ab = permutation_of(&a.compose(&b).unwrap());
        prop_assert_eq!(ab, permutation_of(&a).then(&permutation_of(&b)));
        prop_assert_eq!(permutation_of(&a.mirror()), permutation_of(&a));
    }

    #[test]
    fn projection_gives_knots(a in word(6, 10)) {
        let k = knot_projection(&a);
        prop_assert_eq!(component_count(&k), 1);
        prop_assert_eq!(sigma_of(&a).len(), component_count(&a) - 1);
        prop_assert!(equals(&knot_projection(&k), &k).unwrap());
    }

    #[test]
    fn sigma_depends_only_on_permutation(a in word_in(4, 8), b in word_in(4, 8)) {
        if permutation_of(&a) == permutation_of(&b) {
            prop_assert_eq!(sigma_of(&a), sigma_of(&b));
        }
        // a and a·σ_i² always share a permutation
        let b = a.compose(&w(4, &[2, 2])).unwrap();
        prop_assert_eq!(sigma_of(&a), sigma_of(&b));
    }

    #[test]
    fn projection_commutes_with_inclusion(a in word(5, 10)) {
        let n = a.strands();
        let lhs = knot_projection(&include(&a, n + 1).unwrap());
        let rhs = include(&knot_projection(&a), n + 1)
            .unwrap()
            .compose(&BraidWord::generator(n + 1, n as i32).unwrap())
            .unwrap();
        prop_assert!(equals(&lhs, &rhs).unwrap());
    }

    #[test]
    fn equality_is_conjugation_stable(a in word_in(4, 8), c in word_in(4, 6)) {
        let ca = a.conjugate(&c).unwrap();
        prop_assert!(equals(&ca.conjugate(&c.invert()).unwrap(), &a).unwrap());
    }
}
