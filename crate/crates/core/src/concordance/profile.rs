use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::poly::LaurentPoly;
use crate::seifert::{
    alexander, alexander_genus_lower, genus3_upper, is_square, lt_signature, signature_and_determinant,
    OmegaPoint, SeifertData, DEFAULT_TOLERANCE,
};
use crate::{Error, Result};

/// Which invariants to compute and at what precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileOptions {
    pub omegas: Vec<OmegaPoint>,
    pub tolerance: f64,
    /// The Alexander polynomial costs `b₁ + 1` exact determinants; large
    /// scans that only need signatures switch it off.
    pub alexander: bool,
}

impl ProfileOptions {
    /// `ω = -1` and `ω_p` for the first eight odd primes.
    pub fn default_omegas() -> Vec<OmegaPoint> {
        std::iter::once(OmegaPoint::minus_one())
            .chain([3, 5, 7, 11, 13, 17, 19, 23].map(OmegaPoint::Prime))
            .collect()
    }

    /// Signature and determinant only.
    pub fn minimal() -> Self {
        Self { omegas: Vec::new(), tolerance: DEFAULT_TOLERANCE, alexander: false }
    }
}

impl Default for ProfileOptions {
    fn default() -> Self {
        Self { omegas: Self::default_omegas(), tolerance: DEFAULT_TOLERANCE, alexander: true }
    }
}

/// Outcome of one ω-signature evaluation.
///
/// Serializes as the integer, or as `"precision-failure"` / `"degenerate"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaValue {
    Value(i64),
    PrecisionFailure,
    Degenerate,
}

impl OmegaValue {
    pub fn value(&self) -> Option<i64> {
        match *self {
            OmegaValue::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl std::fmt::Display for OmegaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OmegaValue::Value(v) => write!(f, "{v}"),
            OmegaValue::PrecisionFailure => write!(f, "precision-failure"),
            OmegaValue::Degenerate => write!(f, "degenerate"),
        }
    }
}

impl Serialize for OmegaValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OmegaValue::Value(v) => s.serialize_i64(*v),
            other => s.collect_str(other),
        }
    }
}

impl<'de> Deserialize<'de> for OmegaValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(OmegaValue::Value(v)),
            Raw::Text(t) if t == "precision-failure" => Ok(OmegaValue::PrecisionFailure),
            Raw::Text(t) if t == "degenerate" => Ok(OmegaValue::Degenerate),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad omega value `{t}`"))),
        }
    }
}

/// Concordance invariants of a knot, in the field order of the flat record
/// used by reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub signature: i64,
    #[serde(with = "crate::serde_util::bigint_string")]
    pub determinant: BigInt,
    pub alexander: Option<LaurentPoly>,
    pub omega_signatures: BTreeMap<OmegaPoint, OmegaValue>,
    pub g4_lower: u64,
    pub g4_upper: Option<u64>,
    pub genus3_lower: Option<u64>,
    pub genus3_upper: u64,
}

impl InvariantProfile {
    pub fn compute(sd: &SeifertData, opts: &ProfileOptions) -> Result<Self> {
        sd.require_knot()?;
        let (signature, det) = signature_and_determinant(sd);
        let alexander = if opts.alexander { Some(alexander(sd)?) } else { None };
        let mut omega_signatures = BTreeMap::new();
        for &w in &opts.omegas {
            let value = match lt_signature(sd, w, opts.tolerance) {
                Ok(v) => OmegaValue::Value(v),
                Err(Error::PrecisionFailure { .. }) => OmegaValue::PrecisionFailure,
                Err(Error::DegenerateOmega { .. }) => OmegaValue::Degenerate,
                Err(e) => return Err(e),
            };
            omega_signatures.insert(w, value);
        }
        let mut profile = Self {
            signature,
            determinant: det.magnitude().clone().into(),
            genus3_lower: alexander.as_ref().map(alexander_genus_lower),
            alexander,
            omega_signatures,
            g4_lower: 0,
            g4_upper: None,
            genus3_upper: genus3_upper(sd)? as u64,
        };
        profile.g4_lower = g4_lower(&profile);
        Ok(profile)
    }

    /// Records an upper bound on `g₄` from a verified witness, keeping the
    /// smallest one seen.
    pub fn add_upper_bound(&mut self, bound: u64) {
        self.g4_upper = Some(self.g4_upper.map_or(bound, |b| b.min(bound)));
    }

    pub fn precision_failures(&self) -> usize {
        self.omega_signatures.values().filter(|v| **v == OmegaValue::PrecisionFailure).count()
    }

    /// Equality of the knot invariants, ignoring the bounds that depend on
    /// the braid presentation (`g4_upper`, `genus3_upper`).
    pub fn same_invariants(&self, other: &Self) -> bool {
        self.signature == other.signature
            && self.determinant == other.determinant
            && self.alexander == other.alexander
            && self.omega_signatures == other.omega_signatures
            && self.g4_lower == other.g4_lower
            && self.genus3_lower == other.genus3_lower
    }

    /// The same profile with every signature multiplied by `-1`.
    pub fn sign_flipped(&self) -> Self {
        let mut p = self.clone();
        p.signature = -p.signature;
        for v in p.omega_signatures.values_mut() {
            if let OmegaValue::Value(x) = v {
                *x = -*x;
            }
        }
        p
    }
}

/// Murasugi's bound `⌈|sign|/2⌉ ≤ g₄`.
pub fn g4_lower(p: &InvariantProfile) -> u64 {
    p.signature.unsigned_abs().div_ceil(2)
}

/// Sliceness obstructions found among the computed invariants.  An empty
/// report proves nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SliceReport {
    pub determinant_not_square: bool,
    pub signature_nonzero: bool,
    pub omega_nonzero: Vec<OmegaPoint>,
}

impl SliceReport {
    pub fn is_obstructed(&self) -> bool {
        self.determinant_not_square || self.signature_nonzero || !self.omega_nonzero.is_empty()
    }
}

pub fn slice_obstructions(p: &InvariantProfile) -> SliceReport {
    SliceReport {
        determinant_not_square: !is_square(&p.determinant),
        signature_nonzero: !p.signature.is_zero(),
        omega_nonzero: p
            .omega_signatures
            .iter()
            .filter(|(_, v)| v.value().is_some_and(|x| x != 0))
            .map(|(w, _)| *w)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::concordance::{connected_sum, negate, psi, KnotRep};

    fn knot(n: usize, l: &[i32]) -> KnotRep {
        KnotRep::new(BraidWord::new(n, l.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn trefoil_profile() {
        let p = knot(2, &[1, 1, 1]).profile(&ProfileOptions::default()).unwrap();
        assert_eq!(p.signature, -2);
        assert_eq!(p.determinant, 3.into());
        assert_eq!(p.alexander, Some(LaurentPoly::from_coeffs(0, [1, -1, 1])));
        assert_eq!(p.g4_lower, 1);
        assert_eq!((p.genus3_lower, p.genus3_upper), (Some(1), 1));
        assert_eq!(p.omega_signatures[&OmegaPoint::minus_one()], OmegaValue::Value(-2));
        assert_eq!(p.precision_failures(), 0);
        let r = slice_obstructions(&p);
        assert!(r.determinant_not_square && r.signature_nonzero && r.is_obstructed());
    }

    #[test]
    fn unknot_profile() {
        let p = psi(&BraidWord::identity(3)).profile(&ProfileOptions::default()).unwrap();
        assert_eq!(p.signature, 0);
        assert_eq!(p.determinant, 1.into());
        assert_eq!(p.alexander, Some(LaurentPoly::one()));
        assert!(p.omega_signatures.values().all(|v| *v == OmegaValue::Value(0)));
        assert!(!slice_obstructions(&p).is_obstructed());
    }

    #[test]
    fn slice_sum() {
        let t = knot(2, &[1, 1, 1]);
        let p = connected_sum(&t, &negate(&t)).profile(&ProfileOptions::default()).unwrap();
        assert_eq!(p.signature, 0);
        assert_eq!(p.determinant, 9.into());
        assert!(!slice_obstructions(&p).is_obstructed());
    }

    #[test]
    fn serialization() {
        let mut p = knot(2, &[1, 1, 1]).profile(&ProfileOptions::default()).unwrap();
        p.add_upper_bound(2);
        p.add_upper_bound(1);
        assert_eq!(p.g4_upper, Some(1));
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.starts_with(r#"{"signature":-2,"determinant":"3","alexander":"0:1 1:-1 2:1""#));
        assert!(json.contains(r#""-1":-2"#));
        let back: InvariantProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.sign_flipped().signature, 2);
    }

    #[test]
    fn omega_value_text() {
        let v: Vec<OmegaValue> = serde_json::from_str(r#"[3, "precision-failure", "degenerate"]"#).unwrap();
        assert_eq!(v, [OmegaValue::Value(3), OmegaValue::PrecisionFailure, OmegaValue::Degenerate]);
        assert!(serde_json::from_str::<OmegaValue>(r#""nope""#).is_err());
    }
}
