//! Braid groups `B_n` presented by Artin generators.
//!
//! A letter `v` stands for `σ_|v|` when `v > 0` and `σ_|v|⁻¹` when `v < 0`.
//! Braids are read left to right: the first letter acts first, both on strand
//! positions (see [`Permutation`]) and on normal coordinates.

mod closure;
mod dynnikov;
mod perm;
mod standard;
mod witness;
mod word;

pub use closure::{component_count, include, knot_projection, sigma_of};
pub use dynnikov::NormalCoordinates;
pub use perm::{cycle_decomposition, permutation_of, CycleDecomposition, Permutation};
pub use standard::{argyle, argyle_alt, displacement, displacement_violations, eta, garside};
pub use witness::{
    is_inverse_conjugator, norm_upper_bound, verify_commutator_expression, verify_factorization,
    FactorizationWitness,
};
pub use word::{parse_braid, BraidWord};

/// `true` iff `a` and `b` represent the same element of `B_n`.
pub fn equals(a: &BraidWord, b: &BraidWord) -> crate::Result<bool> {
    a.check_same_group(b)?;
    Ok(NormalCoordinates::of(a) == NormalCoordinates::of(b))
}

pub fn is_identity(a: &BraidWord) -> bool {
    NormalCoordinates::of(a) == NormalCoordinates::identity(a.strands())
}
