use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A word in the Artin generators of `B_n`.
///
/// Words are stored exactly as given; only [`BraidWord::compose`] and the
/// derived operations built on it perform free reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NoStrands);
        }
        if let Some(&bad) = letters.iter().find(|&&v| v == 0 || v.unsigned_abs() as usize >= strands) {
            return Err(Error::GeneratorOutOfRange { index: bad, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "B_0 is not a braid group");
        Self { strands, letters: Vec::new() }
    }

    /// The single letter `σ_|v|^sign(v)`.
    pub fn generator(strands: usize, v: i32) -> Result<Self> {
        Self::new(strands, vec![v])
    }

    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&v| v != 0 && (v.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Word length `ℓ(α)`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn check_same_group(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    /// Concatenation followed by free reduction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_group(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters: free_reduce(letters) })
    }

    /// Composes a sequence of words in order.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut letters = Vec::new();
        for w in words {
            if w.strands != strands {
                return Err(Error::StrandMismatch { left: strands, right: w.strands });
            }
            letters.extend_from_slice(&w.letters);
        }
        Ok(Self { strands, letters: free_reduce(letters) })
    }

    pub fn invert(&self) -> BraidWord {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|v| -v).collect() }
    }

    /// Negates every letter in place; the closure is the mirror image.
    pub fn mirror(&self) -> BraidWord {
        Self { strands: self.strands, letters: self.letters.iter().map(|v| -v).collect() }
    }

    /// Exponent sum, i.e. the abelianisation `B_n → ℤ`.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&v| v.signum() as i64).sum()
    }

    pub fn power(&self, p: i64) -> BraidWord {
        let base = if p < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * p.unsigned_abs() as usize);
        for _ in 0..p.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { strands: self.strands, letters: free_reduce(letters) }
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord> {
        BraidWord::product(self.strands, [by, self, &by.invert()])
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<BraidWord> {
        a.check_same_group(b)?;
        BraidWord::product(a.strands, [a, b, &a.invert(), &b.invert()])
    }

    /// The same letters shifted by `offset` strands inside `B_strands`.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<BraidWord> {
        let letters = self
            .letters
            .iter()
            .map(|&v| v.signum() * (v.abs() + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    pub fn freely_reduced(&self) -> BraidWord {
        Self { strands: self.strands, letters: free_reduce(self.letters.clone()) }
    }
}

fn free_reduce(letters: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for v in letters {
        if out.last() == Some(&-v) {
            out.pop();
        } else {
            out.push(v);
        }
    }
    out
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for v in &self.letters {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn line_col(&self, pos: usize) -> (usize, usize) {
        let before = &self.text[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(pos, |nl| pos - nl - 1) + 1;
        (line, column)
    }

    fn error(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.line_col(pos);
        Error::Parse { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn next_token(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        if self.pos >= self.text.len() {
            return None;
        }
        let start = self.pos;
        let rest = &self.text[start..];
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        self.pos += end;
        Some((start, &rest[..end]))
    }
}

/// Parses `Bn: i₁ i₂ …`.
///
/// Tokens are nonzero integers or symbolic letters `s3`, `s2^-1`, `s1^4`
/// (an exponent repeats the letter).  Errors carry 1-based line and column.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut cur = Cursor { text, pos: 0 };
    let (start, head) = cur.next_token().ok_or_else(|| cur.error(0, "empty input, expected `Bn:`"))?;

    // The header may be glued to the first letter ("B3:1") or stand alone.
    let (header, glued) = match head.find(':') {
        Some(i) => (&head[..=i], &head[i + 1..]),
        None => return Err(cur.error(start, format!("expected `Bn:`, found `{head}`"))),
    };
    let digits = header
        .strip_prefix('B')
        .or_else(|| header.strip_prefix('b'))
        .and_then(|h| h.strip_suffix(':'))
        .ok_or_else(|| cur.error(start, format!("expected `Bn:`, found `{header}`")))?;
    let strands: usize = digits
        .parse()
        .map_err(|_| cur.error(start + 1, format!("invalid strand count `{digits}`")))?;
    if strands == 0 {
        return Err(cur.error(start + 1, "strand count must be positive"));
    }

    let mut letters = Vec::new();
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    if !glued.is_empty() {
        tokens.push((start + header.len(), glued));
    }
    while let Some(tok) = cur.next_token() {
        tokens.push(tok);
    }
    for (pos, tok) in tokens {
        let (index, reps) = parse_token(&cur, pos, tok)?;
        if index == 0 {
            return Err(cur.error(pos, "generator index 0 is not allowed"));
        }
        if index.unsigned_abs() as usize >= strands {
            let (line, column) = cur.line_col(pos);
            return Err(Error::ParseRange { line, column, index, strands });
        }
        let v = i32::try_from(index).map_err(|_| cur.error(pos, "generator index too large"))?;
        for _ in 0..reps {
            letters.push(v);
        }
    }
    Ok(BraidWord { strands, letters })
}

/// Returns the signed generator and how many times it repeats.
fn parse_token(cur: &Cursor<'_>, pos: usize, tok: &str) -> Result<(i64, usize)> {
    if let Some(sym) = tok.strip_prefix('s').or_else(|| tok.strip_prefix('S')) {
        let (gen, exp) = match sym.split_once('^') {
            Some((g, e)) => (g, Some(e)),
            None => (sym, None),
        };
        let gen: i64 = gen
            .parse()
            .ok()
            .filter(|g: &i64| *g > 0)
            .ok_or_else(|| cur.error(pos, format!("invalid symbolic letter `{tok}`")))?;
        let exp: i64 = match exp {
            Some(e) => e.parse().map_err(|_| cur.error(pos, format!("invalid exponent in `{tok}`")))?,
            None => 1,
        };
        let sign = if exp < 0 { -1 } else { 1 };
        return Ok((sign * gen, exp.unsigned_abs() as usize));
    }
    let v: i64 = tok
        .parse()
        .map_err(|_| cur.error(pos, format!("expected a nonzero integer, found `{tok}`")))?;
    Ok((v, 1))
}
