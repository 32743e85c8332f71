//! Braid-group arithmetic, knot closures and concordance invariants.
//!
//! The crate is organised bottom-up:
//!
//! * [`braid`] words in Artin generators, permutations, the knot projection
//!   `α ↦ ασ_(α)`, a faithful word-problem solver and factorization witnesses.
//! * [`poly`] integer Laurent polynomials.
//! * [`seifert`] Seifert matrices of braid closures and the invariants derived
//!   from them (signature, Levine–Tristram signatures, Alexander polynomial,
//!   determinant) together with closed-form torus-knot references.
//! * [`concordance`] the knot-closure map `Ψ_n`, connected sums, the defect
//!   element and four-ball genus certificates.
//! * [`harness`] family scans, sweeps, certificates, a content-addressed cache
//!   and the verification suite used by the `verify-paper` command.

pub mod braid;
pub mod concordance;
pub mod error;
pub mod harness;
pub mod poly;
pub mod seifert;
mod serde_util;

pub use braid::{BraidWord, CycleDecomposition, FactorizationWitness, NormalCoordinates, Permutation};
pub use concordance::{ConcordanceExpr, InvariantProfile, KnotRep};
pub use error::{Error, Result};
pub use poly::LaurentPoly;
pub use seifert::{OmegaPoint, SeifertData};
