use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::alexander::seifert_polynomial;
use super::signature::symmetric_determinant;
use super::torus::is_prime;
use super::SeifertData;
use crate::poly::LaurentPoly;
use crate::{Error, Result};

/// Relative threshold below which an eigenvalue's sign is not trusted.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A point `ω ≠ 1` on the unit circle.
///
/// `Prime(p)` is `ω_p = exp((p-1)πi/p)`, a primitive `p`-th root of unity.
/// `Angle(θ)` is `exp(iθ)` with `0 < θ < 2π`; `θ = π` is `ω = -1`.
///
/// Text form: `-1`, `w<p>` (e.g. `w7`), or `theta=<radians>`.
#[derive(Debug, Clone, Copy)]
pub enum OmegaPoint {
    Prime(u32),
    Angle(f64),
}

impl OmegaPoint {
    pub fn minus_one() -> Self {
        OmegaPoint::Angle(PI)
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::InvalidParameter(format!("ω_p needs an odd prime p, got {p}")));
        }
        Ok(OmegaPoint::Prime(p))
    }

    pub fn angle(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < 2.0 * PI) {
            return Err(Error::InvalidParameter(format!("angle {theta} is not in (0, 2π)")));
        }
        Ok(OmegaPoint::Angle(theta))
    }

    pub fn theta(&self) -> f64 {
        match *self {
            OmegaPoint::Prime(p) => (p - 1) as f64 * PI / p as f64,
            OmegaPoint::Angle(t) => t,
        }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta())
    }

    pub fn is_minus_one(&self) -> bool {
        matches!(self, OmegaPoint::Angle(t) if *t == PI)
    }

    fn key(&self) -> (u8, u64) {
        match *self {
            OmegaPoint::Angle(t) if t == PI => (0, 0),
            OmegaPoint::Prime(p) => (1, p as u64),
            OmegaPoint::Angle(t) => (2, t.to_bits()),
        }
    }
}

impl PartialEq for OmegaPoint {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for OmegaPoint {}

impl Hash for OmegaPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for OmegaPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OmegaPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (OmegaPoint::Angle(a), OmegaPoint::Angle(b)) if !self.is_minus_one() && !other.is_minus_one() => {
                a.total_cmp(b)
            }
            _ => self.key().cmp(&other.key()),
        }
    }
}

impl fmt::Display for OmegaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            _ if self.is_minus_one() => write!(f, "-1"),
            OmegaPoint::Prime(p) => write!(f, "w{p}"),
            OmegaPoint::Angle(t) => write!(f, "theta={t}"),
        }
    }
}

impl FromStr for OmegaPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-1" {
            return Ok(Self::minus_one());
        }
        if let Some(p) = s.strip_prefix('w') {
            let p = p.parse().map_err(|_| Error::InvalidParameter(format!("bad prime in `{s}`")))?;
            return Self::prime(p);
        }
        if let Some(t) = s.strip_prefix("theta=") {
            let t = t.parse().map_err(|_| Error::InvalidParameter(format!("bad angle in `{s}`")))?;
            return Self::angle(t);
        }
        Err(Error::InvalidParameter(format!("unrecognised omega `{s}`; use -1, w<p> or theta=<x>")))
    }
}

impl Serialize for OmegaPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OmegaPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, q);
        }
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    r
}

fn det_mod(mut m: Vec<Vec<u64>>, q: u64) -> u64 {
    let n = m.len();
    let mut det = 1;
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| m[r][k] != 0) else { return 0 };
        if r != k {
            m.swap(r, k);
            det = q - det;
        }
        det = mul_mod(det, m[k][k], q);
        let inv = pow_mod(m[k][k], q - 2, q);
        for i in k + 1..n {
            if m[i][k] == 0 {
                continue;
            }
            let f = mul_mod(m[i][k], inv, q);
            for j in k..n {
                let sub = mul_mod(f, m[k][j], q);
                m[i][j] = (m[i][j] + q - sub) % q;
            }
        }
    }
    det % q
}

/// Primes `q ≡ 1 (mod p)` just above `2^31`, so `F_q` contains `p`-th roots of unity.
fn splitting_primes(p: u64, count: usize) -> Vec<u64> {
    let start = (1u64 << 31) / (2 * p) + 1;
    (start..).map(|k| 2 * k * p + 1).filter(|&q| is_prime(q)).take(count).collect()
}

/// `det(V - ζVᵀ) mod q` for a primitive `p`-th root of unity `ζ ∈ F_q`.
fn det_at_root_mod(sd: &SeifertData, p: u64, q: u64) -> u64 {
    let zeta = (2..q).map(|g| pow_mod(g, (q - 1) / p, q)).find(|&z| z != 1).expect("q ≡ 1 mod p");
    let v = &sd.matrix;
    let n = v.size();
    let lift = |x: i64| x.rem_euclid(q as i64) as u64;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (lift(v.get(i, j)) + q - mul_mod(zeta, lift(v.get(j, i)), q)) % q)
                .collect()
        })
        .collect();
    det_mod(rows, q)
}

/// Certifies `det(V - ωVᵀ) ≠ 0`.
///
/// For `ω_p` the determinant vanishes iff `Φ_p` divides `det(V - tVᵀ)`; a
/// nonzero value modulo a prime `q ≡ 1 (mod p)` at a root of `Φ_p` rules this
/// out.  Only when several such residues vanish is the exact polynomial
/// consulted.  For other angles the exact polynomial is evaluated with a
/// rigorous error bound and must stay away from zero.
pub fn check_nondegenerate(sd: &SeifertData, omega: OmegaPoint) -> Result<()> {
    if sd.matrix.size() == 0 {
        return Ok(());
    }
    let degenerate = || Err(Error::DegenerateOmega { omega: omega.to_string() });
    match omega {
        _ if omega.is_minus_one() => {
            if symmetric_determinant(&sd.matrix.symmetrized())? == 0.into() {
                return degenerate();
            }
        }
        OmegaPoint::Prime(p) => {
            let p = p as u64;
            if splitting_primes(p, 3).into_iter().any(|q| det_at_root_mod(sd, p, q) != 0) {
                return Ok(());
            }
            let poly = seifert_polynomial(sd);
            if poly.is_zero() || poly.div_exact(&LaurentPoly::cyclotomic_prime(p)).is_some() {
                return degenerate();
            }
        }
        OmegaPoint::Angle(theta) => {
            let (re, im, err) = seifert_polynomial(sd).eval_unit_circle(theta);
            if re.hypot(im) <= err {
                return degenerate();
            }
        }
    }
    Ok(())
}

/// The Hermitian matrix `(1 - ω)V + (1 - ω̄)Vᵀ`.
pub fn tristram_matrix(sd: &SeifertData, omega: OmegaPoint) -> DMatrix<Complex64> {
    let v = &sd.matrix;
    let n = v.size();
    let w = omega.value();
    let one = Complex64::new(1.0, 0.0);
    DMatrix::from_fn(n, n, |i, j| (one - w) * v.get(i, j) as f64 + (one - w.conj()) * v.get(j, i) as f64)
}

/// Levine–Tristram signature at `ω`.
///
/// Eigenvalues come from a double-precision Hermitian eigensolver; each must
/// exceed `tolerance · ‖M‖₁` in absolute value or the call fails with
/// [`Error::PrecisionFailure`] instead of guessing.
pub fn lt_signature(sd: &SeifertData, omega: OmegaPoint, tolerance: f64) -> Result<i64> {
    if sd.matrix.size() == 0 {
        return Ok(0);
    }
    check_nondegenerate(sd, omega)?;
    let m = tristram_matrix(sd, omega);
    let norm = (0..m.ncols()).map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    let threshold = tolerance * norm.max(1.0);
    let eigen = m.symmetric_eigenvalues();
    let mut sig = 0;
    for &lambda in eigen.iter() {
        if lambda.abs() <= threshold {
            return Err(Error::PrecisionFailure {
                omega: omega.to_string(),
                magnitude: lambda.abs(),
                threshold,
            });
        }
        sig += if lambda > 0.0 { 1 } else { -1 };
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::seifert::{seifert_matrix, symmetric_signature};

    fn sd(n: usize, l: &[i32]) -> SeifertData {
        seifert_matrix(&BraidWord::new(n, l.to_vec()).unwrap())
    }

    #[test]
    fn omega_text() {
        for s in ["-1", "w3", "w11", "theta=0.5"] {
            assert_eq!(s.parse::<OmegaPoint>().unwrap().to_string(), s);
        }
        assert!("w4".parse::<OmegaPoint>().is_err());
        assert!("w2".parse::<OmegaPoint>().is_err());
        assert!("theta=0".parse::<OmegaPoint>().is_err());
        assert!("theta=7".parse::<OmegaPoint>().is_err());
        assert_eq!(OmegaPoint::angle(PI).unwrap(), OmegaPoint::minus_one());
    }

    #[test]
    fn omega_order() {
        let mut v = vec![
            OmegaPoint::Angle(1.0),
            OmegaPoint::Prime(5),
            OmegaPoint::minus_one(),
            OmegaPoint::Prime(3),
            OmegaPoint::Angle(0.5),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|w| w.to_string()).collect();
        assert_eq!(s, ["-1", "w3", "w5", "theta=0.5", "theta=1"]);
    }

    #[test]
    fn prime_roots_are_roots_of_unity() {
        for p in [3u32, 5, 7, 11] {
            let w = OmegaPoint::Prime(p).value();
            let z = w.powu(p);
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(pow_mod(3, 4, 7), 4);
        assert_eq!(det_mod(vec![vec![0, 1], vec![1, 0]], 7), 6);
        for q in splitting_primes(7, 3) {
            assert_eq!(q % 7, 1);
            assert!(is_prime(q));
        }
    }

    #[test]
    fn trefoil_signatures() {
        let t = sd(2, &[1, 1, 1]);
        assert_eq!(lt_signature(&t, OmegaPoint::minus_one(), DEFAULT_TOLERANCE).unwrap(), -2);
        assert_eq!(symmetric_signature(&t.matrix.symmetrized()).unwrap(), -2);
        // Δ = t² - t + 1 vanishes at exp(±iπ/3)
        assert!(matches!(
            lt_signature(&t, OmegaPoint::Angle(PI / 3.0), DEFAULT_TOLERANCE),
            Err(Error::DegenerateOmega { .. })
        ));
        assert_eq!(lt_signature(&t, OmegaPoint::Angle(0.5), DEFAULT_TOLERANCE).unwrap(), 0);
        assert_eq!(lt_signature(&t, OmegaPoint::Prime(3), DEFAULT_TOLERANCE).unwrap(), -2);
        assert_eq!(lt_signature(&sd(2, &[1]), OmegaPoint::Prime(3), DEFAULT_TOLERANCE).unwrap(), 0);
    }

    #[test]
    fn degenerate_prime_root() {
        // the closure of (σ₁σ₂)³ is the torus link T(3,3)
        let t33 = sd(3, &[1, 2, 1, 2, 1, 2]);
        let poly = seifert_polynomial(&t33);
        assert!(poly.div_exact(&LaurentPoly::cyclotomic_prime(3)).is_some());
        assert!(matches!(
            lt_signature(&t33, OmegaPoint::Prime(3), DEFAULT_TOLERANCE),
            Err(Error::DegenerateOmega { .. })
        ));
    }
}
