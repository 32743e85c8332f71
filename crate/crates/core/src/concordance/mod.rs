//! The knot-closure map `Ψ_n: B_n → Conc(S³)`, arithmetic of concordance
//! classes through representatives, and four-ball genus certificates.

mod bounds;
mod profile;

pub use bounds::{
    commutator_representative, defect_element, g4_upper_from_witness, inequality_suite,
    stable_signature_slope, unbounded_norm_certificate, InequalityReport, InequalityRow, NormCertificate,
    NormCertificateRow, SignatureSlope,
};
pub use profile::{g4_lower, slice_obstructions, InvariantProfile, OmegaValue, ProfileOptions, SliceReport};

use serde::{Deserialize, Serialize};

use crate::braid::{component_count, knot_projection, BraidWord};
use crate::seifert::{seifert_matrix, SeifertData};
use crate::{Error, Result};

/// A braid whose closure is a knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidWord", into = "BraidWord")]
pub struct KnotRep {
    braid: BraidWord,
}

impl KnotRep {
    pub fn new(braid: BraidWord) -> Result<Self> {
        match component_count(&braid) {
            1 => Ok(Self { braid }),
            components => Err(Error::NotAKnot { components }),
        }
    }

    pub fn unknot() -> Self {
        Self { braid: BraidWord::identity(1) }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn seifert(&self) -> SeifertData {
        seifert_matrix(&self.braid)
    }

    pub fn profile(&self, opts: &ProfileOptions) -> Result<InvariantProfile> {
        InvariantProfile::compute(&self.seifert(), opts)
    }

    /// Exact signature `sign(V + Vᵀ)`.
    pub fn signature(&self) -> i64 {
        crate::seifert::signature(&self.seifert())
    }
}

impl TryFrom<BraidWord> for KnotRep {
    type Error = Error;

    fn try_from(braid: BraidWord) -> Result<Self> {
        Self::new(braid)
    }
}

impl From<KnotRep> for BraidWord {
    fn from(k: KnotRep) -> Self {
        k.braid
    }
}

/// `Ψ_n(α)`, represented by the closure of `α·σ_(α)`.
pub fn psi(a: &BraidWord) -> KnotRep {
    KnotRep { braid: knot_projection(a) }
}

/// `-K*`: the mirrored braid.  Orientation reversal does not change any of
/// the implemented invariants, so it is not tracked.
pub fn negate(k: &KnotRep) -> KnotRep {
    KnotRep { braid: k.braid.mirror() }
}

/// `K₁ # K₂` on `n₁ + n₂ - 1` strands, the last strand of the first braid
/// being identified with the first strand of the second.
pub fn connected_sum(k1: &KnotRep, k2: &KnotRep) -> KnotRep {
    let n1 = k1.braid.strands();
    let strands = n1 + k2.braid.strands() - 1;
    let mut letters = k1.braid.letters().to_vec();
    letters.extend(k2.braid.letters().iter().map(|&v| v.signum() * (v.abs() + n1 as i32 - 1)));
    KnotRep { braid: BraidWord::new(strands, letters).expect("indices stay below the strand count") }
}

/// A formal integer combination of knots, `Σ m_k [K_k]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConcordanceExpr {
    terms: Vec<(KnotRep, i64)>,
}

impl ConcordanceExpr {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `multiplicity · [k]`; a zero multiplicity is rejected.
    pub fn push(&mut self, k: KnotRep, multiplicity: i64) -> Result<()> {
        if multiplicity == 0 {
            return Err(Error::InvalidParameter("multiplicity must be nonzero".into()));
        }
        self.terms.push((k, multiplicity));
        Ok(())
    }

    pub fn with(mut self, k: KnotRep, multiplicity: i64) -> Result<Self> {
        self.push(k, multiplicity)?;
        Ok(self)
    }

    pub fn terms(&self) -> &[(KnotRep, i64)] {
        &self.terms
    }

    /// One knot representing the sum: `|m|` copies of `K` or of `-K*`.
    pub fn realize(&self) -> KnotRep {
        let mut acc = KnotRep::unknot();
        for (k, m) in &self.terms {
            let summand = if *m < 0 { negate(k) } else { k.clone() };
            for _ in 0..m.unsigned_abs() {
                acc = connected_sum(&acc, &summand);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn knot_reps() {
        assert!(KnotRep::new(w(2, &[1, 1, 1])).is_ok());
        assert_eq!(KnotRep::new(w(2, &[1, 1])), Err(Error::NotAKnot { components: 2 }));
        assert_eq!(psi(&w(4, &[1, 1, -3, -3])).braid().letters(), &[1, 1, -3, -3, 1, 2, 3]);
        assert_eq!(KnotRep::unknot().signature(), 0);
    }

    #[test]
    fn sums_and_negation() {
        let t = KnotRep::new(w(2, &[1, 1, 1])).unwrap();
        assert_eq!(t.signature(), -2);
        assert_eq!(negate(&t).signature(), 2);
        let s = connected_sum(&t, &t);
        assert_eq!(s.braid(), &w(3, &[1, 1, 1, 2, 2, 2]));
        assert_eq!(s.signature(), -4);
        assert_eq!(connected_sum(&KnotRep::unknot(), &t).braid(), t.braid());
        assert_eq!(connected_sum(&t, &negate(&t)).signature(), 0);
    }

    #[test]
    fn expressions() {
        let t = KnotRep::new(w(2, &[1, 1, 1])).unwrap();
        let e = ConcordanceExpr::new().with(t.clone(), 2).unwrap().with(t.clone(), -1).unwrap();
        assert_eq!(e.realize().signature(), -2);
        assert_eq!(e.realize().braid().strands(), 4);
        assert!(ConcordanceExpr::new().push(t, 0).is_err());
        assert_eq!(ConcordanceExpr::new().realize(), KnotRep::unknot());
    }

    #[test]
    fn serde_round_trip() {
        let k = psi(&w(3, &[1, -2, 1]));
        let json = serde_json::to_string(&k).unwrap();
        assert_eq!(serde_json::from_str::<KnotRep>(&json).unwrap(), k);
        let link = serde_json::to_string(&w(2, &[1, 1])).unwrap();
        assert!(serde_json::from_str::<KnotRep>(&link).is_err());
    }
}
