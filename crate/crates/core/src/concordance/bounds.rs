use num_rational::Rational64;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{connected_sum, negate, psi, KnotRep};
use crate::braid::{component_count, sigma_of, verify_factorization, BraidWord, FactorizationWitness};
use crate::{Error, Result};

/// `Ψ(α) + Ψ(β) - Ψ(αβ)`, realized as `K_α # K_β # -K*_{αβ}`.
pub fn defect_element(a: &BraidWord, b: &BraidWord) -> Result<KnotRep> {
    let ab = a.compose(b)?;
    Ok(connected_sum(&psi(a), &connected_sum(&psi(b), &negate(&psi(&ab)))))
}

/// Upper bound on `g₄(Ψ_n(α))` from a witness with `k` terms.
///
/// Removing the `k` crossings of the witness turns the closure of `α·σ_(α)`
/// into the closure of `σ_(α)`, a trivial link with `C` components.  The
/// resulting surface has `χ = C - k`, so its genus is `⌈(k - C + 1)/2⌉`.
pub fn g4_upper_from_witness(a: &BraidWord, w: &FactorizationWitness) -> Result<u64> {
    if w.strands != a.strands() || !verify_factorization(a, w) {
        return Err(Error::InvalidWitness);
    }
    let c = component_count(&sigma_of(a)) as i64;
    let k = w.len() as i64;
    Ok(((k - c + 1).max(0) as u64).div_ceil(2))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityRow {
    pub name: String,
    pub measured: u64,
    pub bound: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub strands: usize,
    pub rows: Vec<InequalityRow>,
}

impl InequalityReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Checks the consequences of `D_{Ψ_n} ≤ 3n + 1` on three elements, using
/// the signature lower bound for `g₄`:
///
/// * `Ψ(α) + Ψ(α⁻¹)` against `3n + 1`;
/// * `Ψ(βαβ⁻¹) - Ψ(α)` against `9n + 3`;
/// * `Ψ([α, β])` against `15n + 5`.
pub fn inequality_suite(a: &BraidWord, b: &BraidWord) -> Result<InequalityReport> {
    a.check_same_group(b)?;
    let n = a.strands() as u64;
    let g4 = |k: &KnotRep| k.signature().unsigned_abs().div_ceil(2);
    let elements = [
        ("inverse-sum", connected_sum(&psi(a), &psi(&a.invert())), 3 * n + 1),
        ("conjugation", connected_sum(&psi(&a.conjugate(b)?), &negate(&psi(a))), 9 * n + 3),
        ("commutator", psi(&BraidWord::commutator(a, b)?), 15 * n + 5),
    ];
    let rows = elements
        .into_iter()
        .map(|(name, k, bound)| {
            let measured = g4(&k);
            InequalityRow { name: name.into(), measured, bound, pass: measured <= bound }
        })
        .collect();
    Ok(InequalityReport { strands: a.strands(), rows })
}

/// `ι(α)·σ_n^{∓1}…σ_{n+|k|-1}^{∓1} ∈ B_{n+|k|}` with `k` the writhe; it has
/// writhe zero and the same closure as `α`.
pub fn commutator_representative(a: &BraidWord) -> Result<BraidWord> {
    let components = component_count(a);
    if components != 1 {
        return Err(Error::NotAKnot { components });
    }
    let k = a.writhe();
    let n = a.strands();
    let strands = n + k.unsigned_abs() as usize;
    let sign = -(k.signum() as i32);
    let mut letters = a.letters().to_vec();
    letters.extend((n..strands).map(|j| sign * j as i32));
    BraidWord::new(strands, letters)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureSlope {
    /// `sign(Ψ(α^p))` for `p = 1..=p_max`.
    pub signatures: Vec<i64>,
    /// `sign(Ψ(α^{p_max}))/p_max`.
    pub slope: Rational64,
}

/// Signatures of `Ψ_n(α^p)` for `p = 1..=p_max`, computed in parallel.
pub fn stable_signature_slope(a: &BraidWord, p_max: u32) -> Result<SignatureSlope> {
    if p_max == 0 {
        return Err(Error::InvalidParameter("p_max must be positive".into()));
    }
    let signatures: Vec<i64> = (1..=p_max as i64).into_par_iter().map(|p| psi(&a.power(p)).signature()).collect();
    let slope = Rational64::new(*signatures.last().unwrap(), p_max as i64);
    Ok(SignatureSlope { signatures, slope })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormCertificateRow {
    pub p: u32,
    pub g4_lower: u64,
    /// `⌈|slope|·p/2⌉ - (3n + 1)`.
    pub required: i64,
    /// `⌈ℓ(α)·p/2⌉`, the trivial-witness upper bound.
    pub lipschitz_ceiling: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormCertificate {
    pub slope: Rational64,
    pub rows: Vec<NormCertificateRow>,
}

impl NormCertificate {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// A nonzero slope with every row passing witnesses linear growth of
    /// `g₄(Ψ(α^p))`, hence of `‖α^p‖`.
    pub fn certifies_growth(&self) -> bool {
        *self.slope.numer() != 0 && self.all_pass()
    }
}

/// Checks `⌈|s|p/2⌉ - (3n+1) ≤ g₄-lower(Ψ(α^p)) ≤ ⌈ℓ(α)p/2⌉` for every
/// `p ≤ p_max`, with `s` the measured signature slope.
pub fn unbounded_norm_certificate(a: &BraidWord, p_max: u32) -> Result<NormCertificate> {
    let s = stable_signature_slope(a, p_max)?;
    let defect = 3 * a.strands() as i64 + 1;
    let abs_slope = s.slope.abs();
    let rows = s
        .signatures
        .iter()
        .zip(1..)
        .map(|(&sig, p)| {
            let g4_lower = sig.unsigned_abs().div_ceil(2);
            let required = (abs_slope * Rational64::from(p as i64) / 2).ceil().to_integer() - defect;
            let lipschitz_ceiling = (a.len() as u64 * p as u64).div_ceil(2);
            let pass = g4_lower as i64 >= required && g4_lower <= lipschitz_ceiling;
            NormCertificateRow { p, g4_lower, required, lipschitz_ceiling, pass }
        })
        .collect();
    Ok(NormCertificate { slope: s.slope, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::norm_upper_bound;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn defect_examples() {
        let id = BraidWord::identity(3);
        assert_eq!(defect_element(&id, &id).unwrap().signature(), 0);
        assert_eq!(defect_element(&w(2, &[1, 1, 1]), &w(2, &[-1, -1, -1])).unwrap().signature(), 0);
        assert!(defect_element(&id, &BraidWord::identity(2)).is_err());
    }

    #[test]
    fn witness_bounds() {
        let a = w(3, &[1, -2]);
        let d = w(3, &[1, 2, 1]);
        for p in 1..=12 {
            let (_, wit) = norm_upper_bound(&a, p, Some(&d)).unwrap();
            assert!(g4_upper_from_witness(&a.power(p), &wit).unwrap() <= 4);
        }
        let id = BraidWord::identity(4);
        assert_eq!(g4_upper_from_witness(&id, &FactorizationWitness::empty(4)).unwrap(), 0);
        let t = w(2, &[1, 1, 1]);
        assert_eq!(g4_upper_from_witness(&t, &FactorizationWitness::letter_by_letter(&t)).unwrap(), 1);
        assert_eq!(
            g4_upper_from_witness(&t, &FactorizationWitness::empty(2)),
            Err(Error::InvalidWitness)
        );
    }

    #[test]
    fn inequalities() {
        let r = inequality_suite(&w(3, &[1, 1, 1]), &w(3, &[2])).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.rows.iter().map(|r| r.bound).collect::<Vec<_>>(), [10, 30, 50]);
        let id = BraidWord::identity(3);
        let r = inequality_suite(&id, &id).unwrap();
        assert!(r.rows.iter().all(|r| r.measured == 0));
    }

    #[test]
    fn commutator_representatives() {
        let r = commutator_representative(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(r, w(5, &[1, 1, 1, -2, -3, -4]));
        assert_eq!(r.writhe(), 0);
        assert_eq!(KnotRep::new(r).unwrap().signature(), -2);
        assert_eq!(commutator_representative(&w(2, &[-1])).unwrap(), w(3, &[-1, 2]));
        let z = w(3, &[1, -2]);
        assert_eq!(commutator_representative(&z).unwrap(), z);
        assert!(commutator_representative(&w(2, &[1, 1])).is_err());
    }

    #[test]
    fn slopes() {
        // for 3 | p the closure of α^p has three components and Ψ adds σ₁σ₂;
        // Ψ₃(α³) is a trefoil
        let s = stable_signature_slope(&w(3, &[1, -2]), 20).unwrap();
        for (p, &x) in (1..).zip(&s.signatures) {
            assert_eq!(x == 0, p % 3 != 0, "p = {p}");
        }
        assert_eq!(s.slope, Rational64::from(0));
        let s = stable_signature_slope(&BraidWord::identity(3), 3).unwrap();
        assert_eq!(s.signatures, [0, 0, 0]);
        assert!(stable_signature_slope(&BraidWord::identity(3), 0).is_err());
        let c = unbounded_norm_certificate(&w(3, &[-1, -1, -1, -1, 2, 1, 1, 2]), 10).unwrap();
        assert!(c.certifies_growth());
    }
}
