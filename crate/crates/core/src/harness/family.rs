use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::Cache;
use crate::braid::{component_count, eta, knot_projection, norm_upper_bound, BraidWord, NormalCoordinates};
use crate::concordance::{g4_upper_from_witness, InvariantProfile, ProfileOptions};
use crate::poly::LaurentPoly;
use crate::seifert::{seifert_matrix, signature, torus_lt_formula, torus_reference, OmegaPoint};
use crate::{Error, Result};

/// How the `p`-th braid of a family is turned into a closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PostMap {
    /// `Ψ_n(β^p)`.
    Psi,
    /// `Ψ_n(β^{2p})`.
    PsiEvenPowers,
    /// The closure of `β^p` itself, possibly a link.
    RawClosure,
}

/// Closed-form values the scan is compared against.  They are computed from
/// the torus-knot formulas, never from the Seifert pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reference {
    None,
    /// `T_{2p+1} # T_{2p-1}*`: determinant, Alexander polynomial and
    /// `ω_q`-signatures.
    TorusPair,
    /// `||sign| - slope·p| ≤ band`.
    LinearSignature { slope: i64, band: i64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: String,
    pub base: BraidWord,
    pub powers: (i64, i64),
    pub post_map: PostMap,
    pub options: ProfileOptions,
    /// Conjugates `base` to its inverse; enables the bounded-norm witness.
    pub inverse_conjugator: Option<BraidWord>,
    pub reference: Reference,
}

impl FamilySpec {
    pub fn new(name: &str, base: BraidWord, powers: (i64, i64)) -> Result<Self> {
        if powers.0 > powers.1 {
            return Err(Error::InvalidParameter(format!("empty power range {}..={}", powers.0, powers.1)));
        }
        Ok(Self {
            name: name.into(),
            base,
            powers,
            post_map: PostMap::Psi,
            options: ProfileOptions::default(),
            inverse_conjugator: None,
            reference: Reference::None,
        })
    }

    /// The families studied in the examples:
    ///
    /// * `gamma`: `Ψ₄(γ^p)`, `γ = σ₁²σ₃⁻²`;
    /// * `notorious`: `Ψ₃((σ₁σ₂⁻¹)^p)`;
    /// * `s1s3`: `Ψ₄((σ₁σ₃⁻¹)^p)`;
    /// * `alpha`: `Ψ₃(α^p)`, `α = σ₁⁻⁴σ₂σ₁²σ₂`;
    /// * `eta-<i>-<n>`: closures of `η_{i,n}^p`.
    pub fn named(name: &str, powers: (i64, i64)) -> Result<Self> {
        let w = |n: usize, l: &[i32]| BraidWord::new(n, l.to_vec());
        let mut spec = match name {
            "gamma" => {
                let mut s = Self::new(name, w(4, &[1, 1, -3, -3])?, powers)?;
                s.reference = Reference::TorusPair;
                s
            }
            "notorious" => {
                let mut s = Self::new(name, w(3, &[1, -2])?, powers)?;
                s.inverse_conjugator = Some(w(3, &[1, 2, 1])?);
                s
            }
            "s1s3" => {
                let mut s = Self::new(name, w(4, &[1, -3])?, powers)?;
                s.inverse_conjugator = Some(w(4, &[2, 1, 3, 2])?);
                s
            }
            "alpha" => {
                let mut s = Self::new(name, w(3, &[-1, -1, -1, -1, 2, 1, 1, 2])?, powers)?;
                s.reference = Reference::LinearSignature { slope: 2, band: 4 };
                s.options.alexander = false;
                s
            }
            other => {
                let parsed = other
                    .strip_prefix("eta-")
                    .and_then(|r| r.split_once('-'))
                    .and_then(|(i, n)| Some((i.parse::<usize>().ok()?, n.parse::<usize>().ok()?)));
                let Some((i, n)) = parsed else {
                    return Err(Error::InvalidParameter(format!(
                        "unknown family `{other}`; known: gamma, notorious, s1s3, alpha, eta-<i>-<n>"
                    )));
                };
                let mut s = Self::new(name, eta(i, n)?, powers)?;
                s.post_map = PostMap::RawClosure;
                s.reference = Reference::LinearSignature { slope: gg_value(i) as i64, band: n as i64 - 1 };
                s.options = ProfileOptions::minimal();
                s
            }
        };
        spec.name = name.into();
        Ok(spec)
    }

    fn exponent(&self, p: i64) -> i64 {
        match self.post_map {
            PostMap::PsiEvenPowers => 2 * p,
            _ => p,
        }
    }

    /// The braid whose closure is examined at power `p`.
    pub fn braid_at(&self, p: i64) -> BraidWord {
        let b = self.base.power(self.exponent(p));
        match self.post_map {
            PostMap::RawClosure => b,
            _ => knot_projection(&b),
        }
    }
}

/// `v(i)`: `i` for even `i`, `i - 1` for odd `i`.
pub fn gg_value(i: usize) -> usize {
    if i.is_multiple_of(2) { i } else { i - 1 }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusPairReference {
    #[serde(with = "crate::serde_util::bigint_string")]
    pub determinant: BigInt,
    pub alexander: LaurentPoly,
    /// `|torus_lt_formula(p, q)|` for each prime `q` in the options.
    pub omega_signatures: BTreeMap<OmegaPoint, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p: i64,
    pub length: usize,
    pub components: usize,
    /// Exact signature, also available for links.
    pub signature: i64,
    pub profile: Option<InvariantProfile>,
    pub torus_reference: Option<TorusPairReference>,
    pub expected_abs_signature: Option<i64>,
    /// `None` when no reference applies.
    pub pass: Option<bool>,
    pub error: Option<String>,
}

fn torus_pair_reference(p: i64, opts: &ProfileOptions) -> Result<TorusPairReference> {
    let n = u64::try_from(p).map_err(|_| Error::InvalidParameter("torus pair needs p >= 1".into()))?;
    let (a1, d1) = torus_reference(n)?;
    let (a2, d2) = torus_reference(n.saturating_sub(1))?;
    let mut omega_signatures = BTreeMap::new();
    for w in &opts.omegas {
        if let OmegaPoint::Prime(q) = *w {
            omega_signatures.insert(*w, torus_lt_formula(n, q as u64)?.abs());
        }
    }
    Ok(TorusPairReference { determinant: d1 * d2, alexander: (&a1 * &a2).normalized(), omega_signatures })
}

fn compare_torus_pair(profile: &InvariantProfile, r: &TorusPairReference) -> bool {
    let det_ok = profile.determinant == r.determinant;
    let alex_ok = profile.alexander.as_ref().is_none_or(|a| *a == r.alexander);
    let omega_ok = r.omega_signatures.iter().all(|(w, expected)| match profile.omega_signatures.get(w) {
        Some(v) => v.value().is_some_and(|x| x.abs() == *expected),
        None => true,
    });
    det_ok && alex_ok && omega_ok
}

fn cache_key(braid: &BraidWord, opts: &ProfileOptions) -> String {
    let coords = NormalCoordinates::of(braid);
    format!(
        "B{}|{}|profile|{}",
        braid.strands(),
        coords,
        serde_json::to_string(opts).expect("options serialize")
    )
}

fn profile_of(braid: &BraidWord, opts: &ProfileOptions, cache: Option<&Cache>) -> Result<InvariantProfile> {
    let key = cache_key(braid, opts);
    if let Some(hit) = cache.and_then(|c| c.get_json::<InvariantProfile>(&key)) {
        return Ok(hit);
    }
    let profile = InvariantProfile::compute(&seifert_matrix(braid), opts)?;
    if let Some(c) = cache {
        c.put_json(&key, &profile)?;
    }
    Ok(profile)
}

fn scan_row(spec: &FamilySpec, p: i64, cache: Option<&Cache>) -> ScanRow {
    let braid = spec.braid_at(p);
    let components = component_count(&braid);
    let mut row = ScanRow {
        p,
        length: braid.len(),
        components,
        signature: signature(&seifert_matrix(&braid)),
        profile: None,
        torus_reference: None,
        expected_abs_signature: None,
        pass: None,
        error: None,
    };

    if components == 1 {
        match profile_of(&braid, &spec.options, cache) {
            Ok(mut profile) => {
                let target = spec.base.power(spec.exponent(p));
                let witness = norm_upper_bound(&spec.base, spec.exponent(p), spec.inverse_conjugator.as_ref())
                    .and_then(|(_, w)| g4_upper_from_witness(&target, &w));
                match witness {
                    Ok(bound) => profile.add_upper_bound(bound),
                    Err(e) => row.error = Some(e.to_string()),
                }
                row.profile = Some(profile);
            }
            Err(e) => row.error = Some(e.to_string()),
        }
    }

    match spec.reference {
        Reference::None => {}
        Reference::TorusPair => match torus_pair_reference(p, &spec.options) {
            Ok(r) => {
                row.pass = row.profile.as_ref().map(|prof| compare_torus_pair(prof, &r));
                row.torus_reference = Some(r);
            }
            Err(e) => row.error = Some(e.to_string()),
        },
        Reference::LinearSignature { slope, band } => {
            let expected = slope * p;
            row.expected_abs_signature = Some(expected);
            row.pass = Some((row.signature.abs() - expected).abs() <= band);
        }
    }
    if row.profile.as_ref().is_some_and(|prof| prof.precision_failures() > 0) {
        row.pass = Some(false);
    }
    row
}

/// Evaluates the family at every power in range, in parallel.  Rows come back
/// in order of `p`; per-row failures are recorded in the row.
pub fn family_scan(spec: &FamilySpec, cache: Option<&Cache>) -> Result<Vec<ScanRow>> {
    let (lo, hi) = spec.powers;
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty power range {lo}..={hi}")));
    }
    Ok((lo..=hi).into_par_iter().map(|p| scan_row(spec, p, cache)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concordance::OmegaValue;

    #[test]
    fn named_families() {
        assert_eq!(FamilySpec::named("gamma", (1, 3)).unwrap().base.letters(), &[1, 1, -3, -3]);
        let e = FamilySpec::named("eta-3-4", (1, 2)).unwrap();
        assert_eq!(e.base.letters(), &[2, 1, 1, 2]);
        assert_eq!(e.post_map, PostMap::RawClosure);
        assert!(FamilySpec::named("eta-1-4", (1, 2)).is_err());
        assert!(FamilySpec::named("nope", (1, 2)).is_err());
        assert!(FamilySpec::named("gamma", (3, 1)).is_err());
        assert_eq!((gg_value(2), gg_value(3), gg_value(4), gg_value(5)), (2, 2, 4, 4));
    }

    #[test]
    fn gamma_rows_match_torus_formulas() {
        let rows = family_scan(&FamilySpec::named("gamma", (1, 4)).unwrap(), None).unwrap();
        for row in &rows {
            let p = row.p;
            let prof = row.profile.as_ref().unwrap();
            assert_eq!(prof.determinant, BigInt::from((2 * p + 1) * (2 * p - 1)));
            assert_eq!(row.pass, Some(true), "p = {p}");
            assert!(row.error.is_none());
        }
        assert_eq!(rows.iter().map(|r| r.p).collect::<Vec<_>>(), [1, 2, 3, 4]);
    }

    #[test]
    fn bounded_family_witness() {
        let rows = family_scan(&FamilySpec::named("s1s3", (1, 6)).unwrap(), None).unwrap();
        for row in rows {
            let prof = row.profile.unwrap();
            assert!(prof.g4_upper.unwrap() <= 5);
            assert!(prof.g4_lower <= prof.g4_upper.unwrap());
            assert_eq!(prof.omega_signatures[&OmegaPoint::minus_one()], OmegaValue::Value(prof.signature));
        }
    }

    #[test]
    fn link_rows() {
        let rows = family_scan(&FamilySpec::named("eta-2-3", (1, 3)).unwrap(), None).unwrap();
        assert!(rows.iter().all(|r| r.profile.is_none() && r.components == 3));
        assert_eq!(rows[0].expected_abs_signature, Some(2));
    }
}
