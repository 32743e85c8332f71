use serde::{Deserialize, Serialize};

use super::family::gg_value;
use crate::braid::{eta, BraidWord};
use crate::concordance::psi;
use crate::seifert::{is_prime, lt_signature, seifert_matrix, signature, torus_lt_formula, OmegaPoint, DEFAULT_TOLERANCE};
use crate::{Error, Result};

/// `p₁ = 3` and `p_i` the smallest prime above `2·p₁⋯p_{i-1}`.
pub fn zinfty_primes(count: usize) -> Result<Vec<u64>> {
    let mut primes = Vec::with_capacity(count);
    let mut product: u64 = 1;
    for i in 0..count {
        let p = if i == 0 {
            3
        } else {
            let start = product
                .checked_mul(2)
                .ok_or_else(|| Error::InvalidParameter("prime sequence overflows u64".into()))?;
            (start + 1..).find(|&q| is_prime(q)).expect("primes are unbounded")
        };
        product = product
            .checked_mul(p)
            .ok_or_else(|| Error::InvalidParameter("prime sequence overflows u64".into()))?;
        primes.push(p);
    }
    Ok(primes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub i: usize,
    pub j: usize,
    /// `|sign_{ω_{p_{i+1}}}(Ψ₄(γ^{n_j}))|` from the Seifert pipeline.
    pub matrix_path: i64,
    pub formula_path: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZinftyCertificate {
    /// `p₁, …, p_{i_max+1}`.
    pub primes: Vec<u64>,
    /// `n_i = p₁⋯p_i` for `i = 1..=i_max`.
    pub n: Vec<u64>,
    /// `M[i][j] = torus_lt_formula(n_j, p_{i+1})`, indices from 1.
    pub matrix: Vec<Vec<i64>>,
    pub diagonal_ok: bool,
    pub above_diagonal_zero: bool,
    pub cross_checks: Vec<CrossCheck>,
}

impl ZinftyCertificate {
    /// Triangular with nonzero diagonal, and every cross-check agrees.
    pub fn holds(&self) -> bool {
        self.diagonal_ok
            && self.above_diagonal_zero
            && self.cross_checks.iter().all(|c| c.matrix_path == c.formula_path)
    }
}

/// `ω`-signature matrix of `Ψ₄(γ^{n_j})` against `ω_{p_{i+1}}`.  The formula
/// path is exact; entries with `i, j ≤ cross_check_max` are recomputed
/// through the Seifert pipeline.
pub fn zinfty_certificate(i_max: usize, cross_check_max: usize) -> Result<ZinftyCertificate> {
    if !(1..=4).contains(&i_max) {
        return Err(Error::InvalidParameter(format!("i_max must be in 1..=4, got {i_max}")));
    }
    if cross_check_max > 2 {
        return Err(Error::InvalidParameter("matrix cross-checks are limited to i, j <= 2".into()));
    }
    let primes = zinfty_primes(i_max + 1)?;
    let n: Vec<u64> = (1..=i_max).map(|i| primes[..i].iter().product()).collect();
    let mut matrix = vec![vec![0; i_max]; i_max];
    for i in 0..i_max {
        for j in 0..i_max {
            matrix[i][j] = torus_lt_formula(n[j], primes[i + 1])?;
        }
    }
    let diagonal_ok = (0..i_max).all(|i| matrix[i][i].abs() == 2);
    let above_diagonal_zero = (0..i_max).all(|i| (i + 1..i_max).all(|j| matrix[i][j] == 0));

    let gamma = BraidWord::new(4, vec![1, 1, -3, -3])?;
    let mut cross_checks = Vec::new();
    for j in 1..=cross_check_max.min(i_max) {
        let sd = psi(&gamma.power(n[j - 1] as i64)).seifert();
        for i in 1..=cross_check_max.min(i_max) {
            let omega = OmegaPoint::prime(primes[i] as u32)?;
            let matrix_path = lt_signature(&sd, omega, DEFAULT_TOLERANCE)?.abs();
            cross_checks.push(CrossCheck { i, j, matrix_path, formula_path: matrix[i - 1][j - 1].abs() });
        }
    }
    Ok(ZinftyCertificate { primes, n, matrix, diagonal_ok, above_diagonal_zero, cross_checks })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GgRow {
    pub i: usize,
    pub n: usize,
    pub p_max: u32,
    pub signature: i64,
    /// `|sign|/p_max`.
    pub estimate: f64,
    pub expected: usize,
    pub deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Homogenized signatures `|sign(closure(η_{i,n}^{p_max}))|/p_max` against
/// `v(i)`.
pub fn gg_homogenization_table(cases: &[(usize, usize)], p_max: u32, tolerance: f64) -> Result<Vec<GgRow>> {
    if p_max == 0 || p_max > 40 {
        return Err(Error::InvalidParameter(format!("p_max must be in 1..=40, got {p_max}")));
    }
    cases
        .iter()
        .map(|&(i, n)| {
            if !(2 <= i && i <= n && n <= 5) {
                return Err(Error::InvalidParameter(format!("need 2 <= i <= n <= 5, got ({i}, {n})")));
            }
            let sig = signature(&seifert_matrix(&eta(i, n)?.power(p_max as i64)));
            let estimate = sig.abs() as f64 / p_max as f64;
            let expected = gg_value(i);
            let deviation = (estimate - expected as f64).abs();
            Ok(GgRow { i, n, p_max, signature: sig, estimate, expected, deviation, tolerance, pass: deviation <= tolerance })
        })
        .collect()
}
