mod common;

use braidknot::braid::{include, norm_upper_bound, FactorizationWitness};
use braidknot::concordance::{
    commutator_representative, defect_element, g4_upper_from_witness, inequality_suite, psi,
    stable_signature_slope, ConcordanceExpr, KnotRep, OmegaValue, ProfileOptions,
};
use braidknot::{BraidWord, LaurentPoly};
use common::{w, word, word_in};
use num_bigint::BigInt;
use proptest::prelude::*;

fn opts() -> ProfileOptions {
    let mut o = ProfileOptions::default();
    o.omegas.truncate(4);
    o
}

#[test]
fn defect_of_inverse_pair_is_signature_free() {
    let k = defect_element(&w(2, &[1, 1, 1]), &w(2, &[-1, -1, -1])).unwrap();
    assert_eq!(k.signature(), 0);
}

#[test]
fn gamma_slope_is_two() {
    let s = stable_signature_slope(&w(4, &[1, 1, -3, -3]), 20).unwrap();
    assert!(s.signatures.iter().all(|x| x.abs() == 2), "{:?}", s.signatures);
}

#[test]
fn commutator_representative_example() {
    let c = commutator_representative(&w(2, &[1, 1, 1])).unwrap();
    assert_eq!(c, w(5, &[1, 1, 1, -2, -3, -4]));
}

#[test]
fn inequality_suite_on_small_words() {
    for a in [w(3, &[1]), w(3, &[1, -2]), w(3, &[2, 2, 1])] {
        for b in [w(3, &[-1]), w(3, &[2, 1]), w(3, &[1, 1, 1])] {
            let r = inequality_suite(&a, &b).unwrap();
            assert!(r.all_pass(), "{a}, {b}: {:?}", r.rows);
            assert_eq!(r.rows.iter().map(|x| x.bound).collect::<Vec<_>>(), vec![10, 30, 50]);
        }
    }
}

fn pow(p: &LaurentPoly, k: u32) -> LaurentPoly {
    (0..k).fold(LaurentPoly::one(), |acc, _| &acc * p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn concordance_sums_are_additive(
        terms in prop::collection::vec((word(4, 6), prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]), 1..=4)
    ) {
        let mut expr = ConcordanceExpr::new();
        let mut sig = 0;
        let mut det = BigInt::from(1);
        let mut delta = LaurentPoly::one();
        let mut omega = vec![0i64; 4];
        let mut omega_ok = true;
        for (a, m) in &terms {
            let k = psi(a);
            let p = k.profile(&opts()).unwrap();
            sig += m * p.signature;
            det *= num_traits::pow(p.determinant.clone(), m.unsigned_abs() as usize);
            delta = &delta * &pow(p.alexander.as_ref().unwrap(), m.unsigned_abs() as u32);
            for (slot, v) in omega.iter_mut().zip(p.omega_signatures.values()) {
                match v {
                    OmegaValue::Value(x) => *slot += m * x,
                    _ => omega_ok = false,
                }
            }
            expr.push(k, *m).unwrap();
        }
        let total = expr.realize().profile(&opts()).unwrap();
        prop_assert_eq!(total.signature, sig);
        prop_assert_eq!(total.determinant, det);
        prop_assert_eq!(total.alexander.unwrap(), delta.normalized());
        if omega_ok {
            let got: Vec<i64> = total.omega_signatures.values().filter_map(|v| v.value()).collect();
            prop_assert_eq!(got, omega);
        }
    }

    #[test]
    fn markov_moves_preserve_invariants(a in word(4, 6), c in word_in(4, 6), positive in any::<bool>()) {
        let k = psi(&a);
        let base = k.profile(&opts()).unwrap();
        let n = a.strands();
        if n == 4 {
            let conj = KnotRep::new(k.braid().conjugate(&c).unwrap()).unwrap();
            prop_assert!(conj.profile(&opts()).unwrap().same_invariants(&base));
        }
        let mut letters = k.braid().letters().to_vec();
        letters.push(if positive { n as i32 } else { -(n as i32) });
        let stab = KnotRep::new(BraidWord::new(n + 1, letters).unwrap()).unwrap();
        prop_assert!(stab.profile(&opts()).unwrap().same_invariants(&base));
    }

    #[test]
    fn psi_commutes_with_inclusion(a in word(4, 8)) {
        let lifted = psi(&include(&a, a.strands() + 1).unwrap());
        prop_assert!(lifted.profile(&opts()).unwrap().same_invariants(&psi(&a).profile(&opts()).unwrap()));
    }

    #[test]
    fn commutator_representative_keeps_profile(a in word(4, 6)) {
        let k = psi(&a);
        let c = commutator_representative(k.braid()).unwrap();
        prop_assert_eq!(c.writhe(), 0);
        let lhs = KnotRep::new(c).unwrap().profile(&opts()).unwrap();
        prop_assert!(lhs.same_invariants(&k.profile(&opts()).unwrap()));
        prop_assert!(commutator_representative(&w(3, &[1])).is_err());
    }

    #[test]
    fn lipschitz_and_witness_bounds(a in word(5, 14)) {
        let lower = psi(&a).profile(&ProfileOptions::minimal()).unwrap().g4_lower;
        prop_assert!(lower <= (a.len() as u64).div_ceil(2));
        let upper = g4_upper_from_witness(&a, &FactorizationWitness::letter_by_letter(&a)).unwrap();
        prop_assert!(lower <= upper);
    }

    #[test]
    fn defect_stays_below_quasimorphism_bound(a in word_in(3, 3), b in word_in(3, 3)) {
        let k = defect_element(&a, &b).unwrap();
        prop_assert!(k.profile(&ProfileOptions::minimal()).unwrap().g4_lower <= 10);
    }
}

#[test]
fn bounded_family_witnesses_dominate_lower_bounds() {
    let base = w(3, &[1, -2]);
    let d = w(3, &[1, 2, 1]);
    for p in 1..=20 {
        let target = base.power(p);
        let (_, wit) = norm_upper_bound(&base, p, Some(&d)).unwrap();
        let upper = g4_upper_from_witness(&target, &wit).unwrap();
        let lower = psi(&target).profile(&ProfileOptions::minimal()).unwrap().g4_lower;
        assert!(lower <= upper && upper <= 4, "p = {p}: {lower} <= {upper}");
    }
}
