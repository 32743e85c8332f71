//! Faithful word-problem solver.
//!
//! `B_n` acts on `ℤ^{2n}` through Dynnikov's piecewise-linear formulas for
//! integral laminations, in the form
//! `(a_1, b_1, …, a_n, b_n)`; `σ_i^{±1}` only touches `(a_i, b_i, a_{i+1}, b_{i+1})`.
//! The orbit map of the base point `(0, 1, 0, 1, …, 0, 1)` is injective, so two
//! words are equal in `B_n` iff they send the base point to the same vector.
//!
//! For `n ≤ 2` the group is abelian and the coordinates degenerate to the
//! writhe (`n = 2`) or to the empty vector (`n = 1`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedSub, Zero};
use serde::{Deserialize, Serialize};

use super::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalCoordinates {
    pub coordinates: Vec<BigInt>,
}

impl NormalCoordinates {
    pub fn identity(strands: usize) -> Self {
        match strands {
            0 | 1 => Self { coordinates: Vec::new() },
            2 => Self { coordinates: vec![BigInt::zero()] },
            n => Self { coordinates: base_point::<i64>(n).into_iter().map(BigInt::from).collect() },
        }
    }

    pub fn of(word: &BraidWord) -> Self {
        match word.strands() {
            0 | 1 => Self { coordinates: Vec::new() },
            2 => Self { coordinates: vec![BigInt::from(word.writhe())] },
            n => {
                // Coordinates stay small for most words; fall back to big
                // integers only when the i64 pass overflows.
                if let Some(c) = act_word::<i64>(base_point(n), word.letters()) {
                    return Self { coordinates: c.into_iter().map(BigInt::from).collect() };
                }
                let c = act_word::<BigInt>(base_point(n), word.letters())
                    .expect("big integer arithmetic does not overflow");
                Self { coordinates: c }
            }
        }
    }
}

impl fmt::Display for NormalCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coordinates.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

trait Coord: Clone + Ord + Zero + CheckedAdd + CheckedSub + From<i32> {}
impl<T: Clone + Ord + Zero + CheckedAdd + CheckedSub + From<i32>> Coord for T {}

fn base_point<T: Coord>(n: usize) -> Vec<T> {
    (0..n).flat_map(|_| [T::zero(), T::from(1)]).collect()
}

fn pos<T: Coord>(x: &T) -> T {
    if *x > T::zero() { x.clone() } else { T::zero() }
}

fn neg<T: Coord>(x: &T) -> T {
    if *x < T::zero() { x.clone() } else { T::zero() }
}

fn act_word<T: Coord>(mut c: Vec<T>, letters: &[i32]) -> Option<Vec<T>> {
    for &v in letters {
        act_letter(&mut c, v)?;
    }
    Some(c)
}

fn act_letter<T: Coord>(c: &mut [T], v: i32) -> Option<()> {
    let i = 2 * (v.unsigned_abs() as usize - 1);
    let (a1, b1, a2, b2) = (c[i].clone(), c[i + 1].clone(), c[i + 2].clone(), c[i + 3].clone());
    let add = |x: &T, y: &T| x.checked_add(y);
    let sub = |x: &T, y: &T| x.checked_sub(y);
    let (na1, nb1, na2, nb2);
    if v > 0 {
        // e = a1 - b1⁻ - a2 + b2⁺
        let e = add(&sub(&sub(&a1, &neg(&b1))?, &a2)?, &pos(&b2))?;
        na1 = add(&add(&a1, &pos(&b1))?, &pos(&sub(&pos(&b2), &e)?))?;
        nb1 = sub(&b2, &pos(&e))?;
        na2 = add(&add(&a2, &neg(&b2))?, &neg(&add(&neg(&b1), &e)?))?;
        nb2 = add(&b1, &pos(&e))?;
    } else {
        // f = a1 + b1⁻ - a2 - b2⁺
        let f = sub(&sub(&add(&a1, &neg(&b1))?, &a2)?, &pos(&b2))?;
        na1 = sub(&sub(&a1, &pos(&b1))?, &pos(&add(&pos(&b2), &f)?))?;
        nb1 = add(&b2, &neg(&f))?;
        na2 = sub(&sub(&a2, &neg(&b2))?, &neg(&sub(&neg(&b1), &f)?))?;
        nb2 = sub(&b1, &neg(&f))?;
    }
    c[i] = na1;
    c[i + 1] = nb1;
    c[i + 2] = na2;
    c[i + 3] = nb2;
    Some(())
}
