//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Sparse map from exponent to nonzero coefficient.
///
/// Serializes as the `exponent:coefficient` pair string of [`LaurentPoly::to_pairs`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `coeffs[k]` is the coefficient of `t^{low + k}`.
    pub fn from_coeffs<C: Into<BigInt>>(low: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(low + k as i64, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(t) ↦ p(t⁻¹)`.
    pub fn reciprocal(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Representative of `p` up to units `±t^k`: lowest exponent 0 and a
    /// positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exp() else { return Self::zero() };
        let p = self.shift(-lo);
        let lead_negative = p.terms.values().next_back().is_some_and(|c| c.is_negative());
        if lead_negative { -p } else { p }
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn associated(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn eval(&self, t: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 && !t.abs().is_one() {
                return None;
            }
            // t = ±1 when e < 0, so t^e = t^|e|
            acc += c * t.pow(e.unsigned_abs() as u32);
        }
        Some(acc)
    }

    /// Evaluation at `t = -1`, always integral.
    pub fn eval_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.is_odd() { -c } else { c.clone() })
            .sum()
    }

    /// Value at `e^{iθ}` with a rigorous bound on the floating-point error.
    ///
    /// Returns `(re, im, err)`: the true value lies within `err` of `re + i·im`.
    pub fn eval_unit_circle(&self, theta: f64) -> (f64, f64, f64) {
        const U: f64 = f64::EPSILON;
        let (mut re, mut im, mut err) = (0.0f64, 0.0f64, 0.0f64);
        let mut abs_sum = 0.0f64;
        for (&e, c) in &self.terms {
            let cf = bigint_to_f64(c);
            let angle = e as f64 * theta;
            // angle rounding plus cos/sin rounding, each within a few ulps
            let term_err = cf.abs() * (angle.abs() * U + 4.0 * U) + c_conversion_error(c);
            re += cf * angle.cos();
            im += cf * angle.sin();
            err += 2.0 * term_err;
            abs_sum += cf.abs();
        }
        // summation error
        err += 2.0 * (self.terms.len() as f64 + 1.0) * U * abs_sum;
        (re, im, err * 1.01 + f64::MIN_POSITIVE)
    }

    /// Exact remainder-free division; `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exp(), divisor.max_exp()) else { return None };
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(hi) = rem.max_exp() {
            let lo = rem.min_exp().unwrap();
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = rem.coeff(hi);
            let (q, r) = c.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let term = Self::monomial(hi - dhi, q);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }

    /// Cyclotomic polynomial `Φ_p = 1 + t + … + t^{p-1}` for prime `p`.
    pub fn cyclotomic_prime(p: u64) -> Self {
        Self::from_coeffs(0, (0..p).map(|_| 1))
    }

    /// Serialization as sorted `exponent:coefficient` pairs, e.g. `0:1 1:-1 2:1`.
    pub fn to_pairs(&self) -> String {
        self.terms.iter().map(|(e, c)| format!("{e}:{c}")).collect::<Vec<_>>().join(" ")
    }

    pub fn from_pairs(s: &str) -> Result<Self> {
        let mut p = Self::zero();
        for tok in s.split_whitespace() {
            let (e, c) = tok
                .split_once(':')
                .ok_or_else(|| Error::InvalidParameter(format!("bad polynomial term `{tok}`")))?;
            let e: i64 = e.parse().map_err(|_| Error::InvalidParameter(format!("bad exponent `{e}`")))?;
            let c: BigInt = c.parse().map_err(|_| Error::InvalidParameter(format!("bad coefficient `{c}`")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

fn bigint_to_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::INFINITY)
}

fn c_conversion_error(c: &BigInt) -> f64 {
    if c.bits() <= 53 { 0.0 } else { bigint_to_f64(c).abs() * f64::EPSILON }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_pairs())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Self::from_pairs(&s).map_err(serde::de::Error::custom)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_pairs(s)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &rhs.terms {
            p.add_term(e, c.clone());
        }
        p
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, c) in &rhs.terms {
            p.add_term(e, -c);
        }
        p
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `t^2 - t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            let show_coeff = !mag.is_one() || e == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}
