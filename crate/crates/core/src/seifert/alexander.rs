use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::signature::symmetric_determinant;
use super::SeifertData;
use crate::poly::LaurentPoly;
use crate::{Error, Result};

/// Fraction-free Gaussian elimination; every division is exact.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { prev };
    if negate { -det } else { det }
}

/// `det(V - tVᵀ)` without normalization.
///
/// The entries have degree at most one, so the determinant is a polynomial of
/// degree at most `b₁`.  It is recovered from exact integer determinants at
/// `b₁ + 1` sample points by Newton interpolation.
pub fn seifert_polynomial(sd: &SeifertData) -> LaurentPoly {
    let v = &sd.matrix;
    let n = v.size();
    let points: Vec<i64> = (0..=n as i64).map(|k| if k % 2 == 0 { -k / 2 } else { k / 2 + 1 }).collect();
    let values: Vec<BigInt> = points
        .iter()
        .map(|&t| {
            let rows = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(v.get(i, j) - t * v.get(j, i))).collect())
                .collect();
            bareiss_determinant(rows)
        })
        .collect();
    interpolate(&points, &values)
}

fn interpolate(xs: &[i64], ys: &[BigInt]) -> LaurentPoly {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigInt::from(xs[i] - xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(denom);
        }
    }
    // Horner on the Newton form, coefficients lowest degree first
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let x = BigRational::from_integer(xs[i].into());
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n {
            if coeffs[d].is_zero() {
                continue;
            }
            next[d] -= &coeffs[d] * &x;
            if d + 1 < n {
                next[d + 1] += &coeffs[d];
            }
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    LaurentPoly::from_coeffs(0, coeffs.into_iter().map(|c| {
        debug_assert!(c.is_integer());
        c.to_integer()
    }))
}

/// Alexander polynomial `det(V - tVᵀ)`, normalized to lowest exponent 0 and
/// positive leading coefficient.
pub fn alexander(sd: &SeifertData) -> Result<LaurentPoly> {
    sd.require_knot()?;
    let delta = seifert_polynomial(sd).normalized();
    let at_one = delta.eval(&BigInt::one()).unwrap_or_default();
    if !at_one.abs().is_one() {
        return Err(Error::Inconsistent(format!("Alexander polynomial has Δ(1) = {at_one}")));
    }
    Ok(delta)
}

/// `|Δ(-1)| = |det(V + Vᵀ)|`.
pub fn knot_determinant(sd: &SeifertData) -> Result<BigInt> {
    sd.require_knot()?;
    Ok(symmetric_determinant(&sd.matrix.symmetrized())?.abs())
}

pub fn is_square(d: &BigInt) -> bool {
    if d.is_negative() {
        return false;
    }
    let r = d.sqrt();
    &r * &r == *d
}

/// `b₁/2`, the genus of the braid-closure Seifert surface.  For a knot `b₁` is even.
pub fn genus3_upper(sd: &SeifertData) -> Result<usize> {
    sd.require_knot()?;
    Ok(sd.betti() / 2)
}

/// `span(Δ)/2`, a lower bound for the three-genus.
pub fn alexander_genus_lower(delta: &LaurentPoly) -> u64 {
    (delta.span() / 2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::seifert::seifert_matrix;

    fn sd(n: usize, l: &[i32]) -> SeifertData {
        seifert_matrix(&BraidWord::new(n, l.to_vec()).unwrap())
    }

    #[test]
    fn bareiss() {
        let m = |r: &[&[i64]]| r.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
        assert_eq!(bareiss_determinant(m(&[&[0, 1], &[1, 0]])), (-1).into());
        assert_eq!(bareiss_determinant(m(&[&[2, 3, 1], &[4, 1, 5], &[0, 2, 7]])), (-82).into());
        assert_eq!(bareiss_determinant(m(&[&[1, 2], &[2, 4]])), 0.into());
        assert_eq!(bareiss_determinant(Vec::new()), 1.into());
    }

    #[test]
    fn interpolation() {
        let xs = [0, 1, -1, 2];
        let ys: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(3 * x * x * x - x + 5)).collect();
        assert_eq!(interpolate(&xs, &ys), LaurentPoly::from_coeffs(0, [5, -1, 0, 3]));
    }

    #[test]
    fn torus_knots() {
        assert_eq!(alexander(&sd(2, &[1])).unwrap(), LaurentPoly::one());
        assert_eq!(alexander(&sd(2, &[1, 1, 1])).unwrap(), LaurentPoly::from_coeffs(0, [1, -1, 1]));
        assert_eq!(
            alexander(&sd(2, &[1; 5])).unwrap(),
            LaurentPoly::from_coeffs(0, [1, -1, 1, -1, 1])
        );
        assert_eq!(knot_determinant(&sd(2, &[1, 1, 1])).unwrap(), 3.into());
        assert_eq!(knot_determinant(&sd(4, &[1, 1, -3, -3, 1, 2, 3])).unwrap(), 3.into());
    }

    #[test]
    fn links_rejected() {
        assert_eq!(alexander(&sd(2, &[1, 1])), Err(Error::NotAKnot { components: 2 }));
        assert!(knot_determinant(&sd(3, &[1])).is_err());
    }

    #[test]
    fn squares() {
        assert!(is_square(&9.into()));
        assert!(is_square(&1.into()));
        assert!(is_square(&0.into()));
        assert!(!is_square(&3.into()));
        assert!(!is_square(&(-4).into()));
        let big: BigInt = BigInt::from(10).pow(40) + 1;
        assert!(is_square(&(&big * &big)));
        assert!(!is_square(&(&big * &big + 1)));
    }

    #[test]
    fn genus_bounds() {
        let t = sd(2, &[1, 1, 1]);
        assert_eq!(genus3_upper(&t).unwrap(), 1);
        assert_eq!(alexander_genus_lower(&alexander(&t).unwrap()), 1);
        let u = sd(3, &[1, 2]);
        assert_eq!(genus3_upper(&u).unwrap(), 0);
        assert_eq!(alexander_genus_lower(&alexander(&u).unwrap()), 0);
    }
}
