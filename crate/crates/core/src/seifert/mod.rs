//! Seifert matrices of braid closures and the concordance invariants read off
//! from them.
//!
//! Sign convention: `σ_i` is a positive crossing and the right-handed trefoil
//! `σ₁³` has signature `-2`.

mod alexander;
mod matrix;
mod omega;
mod signature;
mod torus;

pub use alexander::{
    alexander, alexander_genus_lower, genus3_upper, is_square, knot_determinant, seifert_polynomial,
};
pub use matrix::{seifert_matrix, IntMatrix, SeifertData};
pub use omega::{check_nondegenerate, lt_signature, tristram_matrix, OmegaPoint, DEFAULT_TOLERANCE};
pub use signature::{inertia, symmetric_determinant, symmetric_signature, Inertia};
pub use torus::{torus_lt_formula, torus_reference};

pub(crate) use torus::is_prime;

/// `sign(V + Vᵀ)`, computed exactly.
pub fn signature(sd: &SeifertData) -> i64 {
    symmetric_signature(&sd.matrix.symmetrized()).expect("V + Vᵀ is symmetric")
}

/// `sign(V + Vᵀ)` and `det(V + Vᵀ)` from a single exact diagonalization.
pub fn signature_and_determinant(sd: &SeifertData) -> (i64, num_bigint::BigInt) {
    let r = signature::reduce(&sd.matrix.symmetrized()).expect("V + Vᵀ is symmetric");
    (r.inertia.signature(), r.determinant)
}
