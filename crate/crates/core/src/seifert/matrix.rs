use serde::{Deserialize, Serialize};

use crate::braid::{component_count, BraidWord};
use crate::{Error, Result};

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        Self { size, entries: vec![0; size * size] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let size = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::InvalidParameter(format!(
                "matrix is not square: {size} rows but a row of length {}",
                r.len()
            )));
        }
        Ok(Self { size, entries: rows.concat() })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.size + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        if self.size == 0 {
            return Vec::new();
        }
        self.entries.chunks(self.size).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> Self {
        let mut s = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                s.set(i, j, self.get(i, j) + self.get(j, i));
            }
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// Seifert matrix of a braid closure together with the data of the surface.
///
/// The surface is the one from Seifert's algorithm on the closed braid: one
/// disk per strand, one half-twisted band per crossing.  `H₁` has one
/// generator for each pair of consecutive crossings in the same column `i`
/// (the loop running through the two bands between strands `i` and `i+1`).
/// Generators are ordered by column, then by time.
///
/// With `ε` the crossing signs, the entries are pinned as follows:
///
/// * diagonal: `-(ε_a + ε_b)/2` for the generator through crossings `a < b`;
/// * two generators of one column sharing the crossing `e`, the earlier `x`
///   and the later `y`: `V[x][y] = (ε_e + 1)/2`, `V[y][x] = (ε_e - 1)/2`;
/// * `γ` in column `i` through times `s₁ < s₂` and `δ` in column `i+1`
///   through `t₁ < t₂`: `V[γ][δ] = 1` if `s₁ < t₁ < s₂ < t₂`, `-1` if
///   `t₁ < s₁ < t₂ < s₂`, else 0, and `V[δ][γ] = 0`;
/// * all other entries vanish.
///
/// With these rules `σ₁³` gives `[[-1, 1], [0, -1]]` and the right-handed
/// trefoil has signature `-2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub matrix: IntMatrix,
    pub strands: usize,
    pub crossings: usize,
    /// Generator indices `1..n-1` that never occur; each splits off an unknot.
    pub split_unknots: usize,
    pub closure_components: usize,
}

impl SeifertData {
    /// First Betti number of the surface, `c - n + r`.
    pub fn betti(&self) -> usize {
        self.matrix.size()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components == 1
    }

    pub(crate) fn require_knot(&self) -> Result<()> {
        if self.is_knot() {
            Ok(())
        } else {
            Err(Error::NotAKnot { components: self.closure_components })
        }
    }
}

struct Generator {
    column: usize,
    first: usize,
    second: usize,
}

pub fn seifert_matrix(a: &BraidWord) -> SeifertData {
    let n = a.strands();
    let letters = a.letters();
    let sign = |k: usize| letters[k].signum() as i64;

    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, &v) in letters.iter().enumerate() {
        columns[v.unsigned_abs() as usize].push(k);
    }
    let split_unknots = (1..n).filter(|&i| columns[i].is_empty()).count();

    let mut gens = Vec::new();
    let mut column_start = vec![0; n + 1];
    for (i, times) in columns.iter().enumerate() {
        column_start[i] = gens.len();
        gens.extend(times.windows(2).map(|w| Generator { column: i, first: w[0], second: w[1] }));
    }
    column_start[n] = gens.len();

    let mut v = IntMatrix::zeros(gens.len());
    for (x, g) in gens.iter().enumerate() {
        v.set(x, x, -(sign(g.first) + sign(g.second)) / 2);
        let next = x + 1;
        if next < gens.len() && gens[next].column == g.column {
            let e = sign(g.second);
            v.set(x, next, (e + 1) / 2);
            v.set(next, x, (e - 1) / 2);
        }
        if g.column + 1 < n {
            for y in column_start[g.column + 1]..column_start[g.column + 2] {
                let h = &gens[y];
                let (s1, s2, t1, t2) = (g.first, g.second, h.first, h.second);
                if t1 > s2 {
                    break;
                }
                if s1 < t1 && t1 < s2 && s2 < t2 {
                    v.set(x, y, 1);
                } else if t1 < s1 && s1 < t2 && t2 < s2 {
                    v.set(x, y, -1);
                }
            }
        }
    }

    SeifertData {
        matrix: v,
        strands: n,
        crossings: letters.len(),
        split_unknots,
        closure_components: component_count(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(n: usize, l: &[i32]) -> SeifertData {
        seifert_matrix(&BraidWord::new(n, l.to_vec()).unwrap())
    }

    #[test]
    fn trefoil_matrix() {
        let s = sd(2, &[1, 1, 1]);
        assert_eq!(s.matrix.rows(), vec![vec![-1, 1], vec![0, -1]]);
        assert!(s.is_knot());
        let m = sd(2, &[-1, -1, -1]).matrix;
        assert_eq!(m.rows(), vec![vec![1, 0], vec![-1, 1]]);
    }

    #[test]
    fn unknot_and_split() {
        let s = sd(2, &[1]);
        assert_eq!(s.betti(), 0);
        let s = sd(4, &[1, 1]);
        assert_eq!(s.split_unknots, 2);
        assert_eq!(s.closure_components, 4);
        assert_eq!(s.betti(), 1);
    }

    #[test]
    fn betti_number() {
        // c - n + r
        let s = sd(4, &[1, 1, -3, -3, 1, 2, 3]);
        assert_eq!(s.betti(), 4);
        assert_eq!(s.split_unknots, 0);
        let s = sd(5, &[1, 1, 1, 4, 4]);
        assert_eq!(s.betti(), 5 - 5 + 3);
    }

    #[test]
    fn adjacent_columns() {
        // s₁ < t₁ < s₂ < t₂
        let m = sd(3, &[1, 2, 1, 2]).matrix;
        assert_eq!(m.get(0, 1), 1);
        assert_eq!(m.get(1, 0), 0);
        // t₁ < s₁ < t₂ < s₂
        let m = sd(3, &[2, 1, 2, 1]).matrix;
        assert_eq!(m.get(0, 1), -1);
        assert_eq!(m.get(1, 0), 0);
        // nested
        let m = sd(3, &[1, 2, 2, 1]).matrix;
        assert_eq!(m.get(0, 1), 0);
    }

    #[test]
    fn matrix_helpers() {
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.transpose().rows(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(m.symmetrized().rows(), vec![vec![2, 5], vec![5, 8]]);
        assert!(!m.is_symmetric());
        assert!(m.symmetrized().is_symmetric());
        assert!(IntMatrix::from_rows(&[vec![1, 2]]).is_err());
        assert!(IntMatrix::zeros(0).rows().is_empty());
    }
}
