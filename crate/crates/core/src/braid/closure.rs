use super::perm::{cycle_decomposition, permutation_of};
use super::BraidWord;
use crate::{Error, Result};

/// Number of components of the closure, i.e. cycles of the permutation.
pub fn component_count(a: &BraidWord) -> usize {
    cycle_decomposition(&permutation_of(a)).len()
}

/// `σ_(α) = σ_{a_{2,1}-1} σ_{a_{3,1}-1} … σ_{a_{k,1}-1}` where `a_{j,1}` are
/// the minimal elements of the cycles of `α`, sorted.
///
/// Each letter joins the next cycle to the ones already merged, so
/// `α·σ_(α)` induces a single `n`-cycle.  Depends only on the permutation.
pub fn sigma_of(a: &BraidWord) -> BraidWord {
    let cycles = cycle_decomposition(&permutation_of(a));
    let letters = cycles.leaders().skip(1).map(|lead| (lead - 1) as i32).collect();
    BraidWord::from_letters_unchecked(a.strands(), letters)
}

/// The projection `π_n(α) = α·σ_(α)` onto braids whose closure is a knot.
pub fn knot_projection(a: &BraidWord) -> BraidWord {
    a.compose(&sigma_of(a)).expect("same strand count")
}

/// `ι: B_n → B_m`, the inclusion onto the first `n` strands.
pub fn include(a: &BraidWord, m: usize) -> Result<BraidWord> {
    if m < a.strands() {
        return Err(Error::InvalidParameter(format!(
            "cannot include B{} into B{m}",
            a.strands()
        )));
    }
    Ok(BraidWord::from_letters_unchecked(m, a.letters().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::equals;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_of(&BraidWord::identity(4)).letters(), &[1, 2, 3]);
        assert!(sigma_of(&w(2, &[1, 1, 1])).is_empty());
        // (12)(34): leaders 1, 3 → σ₂
        assert_eq!(sigma_of(&w(4, &[1, -3])).letters(), &[2]);
        assert!(sigma_of(&BraidWord::identity(1)).is_empty());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(knot_projection(&BraidWord::identity(3)).letters(), &[1, 2]);
        assert_eq!(knot_projection(&w(4, &[1, 1, -3, -3])).letters(), &[1, 1, -3, -3, 1, 2, 3]);
    }

    #[test]
    fn components() {
        assert_eq!(component_count(&w(3, &[1])), 2);
        assert_eq!(component_count(&BraidWord::identity(4)), 4);
        assert_eq!(component_count(&w(4, &[1, 2, 3])), 1);
        assert_eq!(component_count(&include(&w(2, &[1]), 4).unwrap()), 3);
    }

    #[test]
    fn inclusion() {
        assert_eq!(include(&w(2, &[1]), 4).unwrap(), w(4, &[1]));
        assert!(include(&w(3, &[1]), 2).is_err());
        let a = w(3, &[1, -2, 1, 1]);
        let lhs = knot_projection(&include(&a, 4).unwrap());
        let rhs = include(&knot_projection(&a), 4).unwrap().compose(&w(4, &[3])).unwrap();
        assert!(equals(&lhs, &rhs).unwrap());
    }
}
