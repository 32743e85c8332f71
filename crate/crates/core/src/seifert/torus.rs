use num_bigint::BigInt;

use crate::poly::LaurentPoly;
use crate::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Alexander polynomial `Σ_{i=0}^{2n} (-1)^i t^{2n-i}` and determinant
/// `2n + 1` of the torus knot `T_{2n+1} = T(2, 2n+1)`.  `n = 0` is the unknot.
pub fn torus_reference(n: u64) -> Result<(LaurentPoly, BigInt)> {
    let degree = n.checked_mul(2).filter(|&d| d < i64::MAX as u64).ok_or_else(|| {
        Error::InvalidParameter(format!("torus index {n} is too large"))
    })?;
    let coeffs = (0..=degree).map(|i| if i % 2 == 0 { 1 } else { -1 });
    Ok((LaurentPoly::from_coeffs(0, coeffs), BigInt::from(degree) + 1))
}

/// `2 - 2(⌊n/p + 1/(2p)⌋ - ⌊n/p - 1/(2p)⌋)`, the `ω_p`-signature of
/// `T_{2n+1} # T_{2n-1}*` up to the global sign convention.
pub fn torus_lt_formula(n: u64, p: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::InvalidParameter("torus formula needs n >= 1".into()));
    }
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("torus formula needs an odd prime, got {p}")));
    }
    // n/p ± 1/(2p) = (2n ± 1)/(2p), both nonnegative
    let upper = (2 * n + 1) / (2 * p);
    let lower = (2 * n - 1) / (2 * p);
    Ok(2 - 2 * (upper - lower) as i64)
}
