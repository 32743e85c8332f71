use super::{include, is_identity, BraidWord};
use crate::{Error, Result};

/// The positive half twist `Δ_n = (σ₁…σ_{n-1})(σ₁…σ_{n-2})…(σ₁)`.
pub fn garside(n: usize) -> Result<BraidWord> {
    if n == 0 {
        return Err(Error::NoStrands);
    }
    let letters = (1..n).rev().flat_map(|top| 1..=top as i32).collect();
    BraidWord::new(n, letters)
}

/// `η_{i,n} = σ_{i-1}…σ₂σ₁²σ₂…σ_{i-1} ∈ B_n` for `2 ≤ i ≤ n`.
pub fn eta(i: usize, n: usize) -> Result<BraidWord> {
    if i < 2 || i > n {
        return Err(Error::InvalidParameter(format!("eta needs 2 <= i <= n, got i = {i}, n = {n}")));
    }
    let i = i as i32;
    let mut letters: Vec<i32> = (2..i).rev().collect();
    letters.extend([1, 1]);
    letters.extend(2..i);
    BraidWord::new(n, letters)
}

fn argyle_letters(n: usize, i: usize, alternating: bool) -> Vec<i32> {
    let (n, i) = (n as i32, i as i32);
    let mut letters = Vec::with_capacity((n * n) as usize);
    for k in 1..=n {
        for j in 1..=n {
            let index = i * n - k + j;
            let sign = if alternating && j % 2 == 1 { -1 } else { 1 };
            letters.push(sign * index);
        }
    }
    letters
}

fn check_argyle(n: usize, i: usize) -> Result<()> {
    if n == 0 || i == 0 {
        return Err(Error::InvalidParameter(format!("argyle braid needs n, i >= 1, got n = {n}, i = {i}")));
    }
    Ok(())
}

/// `A_{n,i} = ∏_{k=1}^{n} ∏_{j=1}^{n} σ_{in-k+j}`, swapping the `i`-th block of
/// `n` strands with the `(i+1)`-th.  Lives in `B_{(i+1)n}`.
pub fn argyle(n: usize, i: usize) -> Result<BraidWord> {
    check_argyle(n, i)?;
    BraidWord::new((i + 1) * n, argyle_letters(n, i, false))
}

/// The alternating variant `A'_{n,i}` with exponents `(-1)^j`; `n` even.
pub fn argyle_alt(n: usize, i: usize) -> Result<BraidWord> {
    check_argyle(n, i)?;
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("alternating argyle braid needs even n, got {n}")));
    }
    BraidWord::new((i + 1) * n, argyle_letters(n, i, true))
}

/// `A'_{n,1} A'_{n,2} … A'_{n,m-1} ∈ [B_{mn}, B_{mn}]`.
pub fn displacement(n: usize, m: usize) -> Result<BraidWord> {
    if n == 0 || !n.is_multiple_of(2) || m < 2 {
        return Err(Error::InvalidParameter(format!("displacement needs even n >= 2 and m >= 2, got n = {n}, m = {m}")));
    }
    let strands = m * n;
    let mut letters = Vec::new();
    for i in 1..m {
        letters.extend_from_slice(include(&argyle_alt(n, i)?, strands)?.letters());
    }
    BraidWord::new(strands, letters)
}

/// Pairs `(i, j)` with `0 ≤ i < j ≤ max_power` for which the conjugates
/// `D^i x D^{-i}` and `D^j y D^{-j}` fail to commute, `D = displacement(n, m)`.
/// `x` and `y` are braids on the first `n` strands.
pub fn displacement_violations(
    n: usize,
    m: usize,
    x: &BraidWord,
    y: &BraidWord,
    max_power: usize,
) -> Result<Vec<(usize, usize)>> {
    let d = displacement(n, m)?;
    let strands = d.strands();
    let x = include(x, strands)?;
    let y = include(y, strands)?;
    let conj = |w: &BraidWord, p: usize| w.conjugate(&d.power(p as i64));
    let mut violations = Vec::new();
    for i in 0..=max_power {
        let xi = conj(&x, i)?;
        for j in i + 1..=max_power {
            let yj = conj(&y, j)?;
            if !is_identity(&BraidWord::commutator(&xi, &yj)?) {
                violations.push((i, j));
            }
        }
    }
    Ok(violations)
}
