use serde::{Deserialize, Serialize};

use super::{equals, BraidWord};
use crate::{Error, Result};

/// A braid written as a product of conjugates of single generators,
/// `∏ c_k σ_{i_k}^{±1} c_k⁻¹`.  The number of terms bounds the
/// biinvariant word norm from above.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationWitness {
    pub strands: usize,
    pub terms: Vec<(BraidWord, i32)>,
}

impl FactorizationWitness {
    pub fn empty(strands: usize) -> Self {
        Self { strands, terms: Vec::new() }
    }

    /// One term per letter, each with the empty conjugator.
    pub fn letter_by_letter(a: &BraidWord) -> Self {
        let terms = a.letters().iter().map(|&v| (BraidWord::identity(a.strands()), v)).collect();
        Self { strands: a.strands(), terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for (conj, v) in &self.terms {
            if conj.strands() != self.strands {
                return Err(Error::StrandMismatch { left: self.strands, right: conj.strands() });
            }
            if *v == 0 || v.unsigned_abs() as usize >= self.strands {
                return Err(Error::GeneratorOutOfRange { index: *v, strands: self.strands });
            }
            letters.extend_from_slice(conj.letters());
            letters.push(*v);
            letters.extend(conj.letters().iter().rev().map(|x| -x));
        }
        Ok(BraidWord::new(self.strands, letters)?.freely_reduced())
    }
}

pub fn verify_factorization(a: &BraidWord, w: &FactorizationWitness) -> bool {
    match w.evaluate() {
        Ok(product) => equals(a, &product).unwrap_or(false),
        Err(_) => false,
    }
}

/// `true` iff `a = [x₁,y₁]…[x_k,y_k]`, certifying `cl(a) ≤ k`.
pub fn verify_commutator_expression(a: &BraidWord, pairs: &[(BraidWord, BraidWord)]) -> bool {
    let mut product = BraidWord::identity(a.strands());
    for (x, y) in pairs {
        match BraidWord::commutator(x, y).and_then(|c| product.compose(&c)) {
            Ok(p) => product = p,
            Err(_) => return false,
        }
    }
    equals(a, &product).unwrap_or(false)
}

/// `true` iff `d a d⁻¹ = a⁻¹`.
pub fn is_inverse_conjugator(a: &BraidWord, d: &BraidWord) -> Result<bool> {
    a.check_same_group(d)?;
    equals(&a.conjugate(d)?, &a.invert())
}

/// Upper bound on `‖base^power‖` together with a verified witness.
///
/// Without a conjugator the witness is letter by letter.  When `d` conjugates
/// `base` to its inverse, `α^{2m} = (α^m d α^{-m}) d⁻¹`, which expands into
/// `2ℓ(d)` generator conjugates, plus `ℓ(base)` more terms for odd powers.
/// The shorter of the two witnesses is returned.
pub fn norm_upper_bound(
    base: &BraidWord,
    power: i64,
    inverse_conjugator: Option<&BraidWord>,
) -> Result<(usize, FactorizationWitness)> {
    let target = base.power(power);
    let mut best = FactorizationWitness::letter_by_letter(&target);

    if let Some(d) = inverse_conjugator {
        if !is_inverse_conjugator(base, d)? {
            return Err(Error::InvalidConjugator);
        }
        // d also conjugates base⁻¹ to its inverse, so negative powers reduce
        // to positive powers of the inverse.
        let alpha = if power < 0 { base.invert() } else { base.clone() };
        let half = (power.unsigned_abs() / 2) as i64;
        let alpha_half = alpha.power(half);

        let mut terms = Vec::with_capacity(2 * d.len() + alpha.len());
        for &v in d.letters() {
            terms.push((alpha_half.clone(), v));
        }
        let identity = BraidWord::identity(base.strands());
        for &v in d.invert().letters() {
            terms.push((identity.clone(), v));
        }
        if power.unsigned_abs() % 2 == 1 {
            for &v in alpha.letters() {
                terms.push((identity.clone(), v));
            }
        }
        let halved = FactorizationWitness { strands: base.strands(), terms };
        if halved.len() < best.len() {
            best = halved;
        }
    }

    if !verify_factorization(&target, &best) {
        return Err(Error::InvalidWitness);
    }
    Ok((best.len(), best))
}
