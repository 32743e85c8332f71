use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidWord;

/// The permutation induced by a braid on strand positions.
///
/// `image(i)` is the final position of the strand that starts at position
/// `i` (both 1-based).  Letters act left to right, so for braids `a`, `b`
/// `permutation_of(a·b) == permutation_of(a).then(&permutation_of(b))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self { images: (0..size).collect() }
    }

    /// Builds a permutation from 1-based images; `None` unless bijective.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Self { images: images.iter().map(|i| i - 1).collect() })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// Left-to-right composition: apply `self`, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.size(), next.size(), "permutation sizes differ");
        Permutation { images: self.images.iter().map(|&i| next.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", cycle_decomposition(self))
    }
}

/// Cycles of a permutation, fixed points included.
///
/// Each cycle starts at its minimal element and cycles are sorted by their
/// minimal elements, so the first cycle always contains 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Minimal elements `a_{j,1}` of the cycles, in order.
    pub fn leaders(&self) -> impl Iterator<Item = usize> + '_ {
        self.cycles.iter().map(|c| c[0])
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            write!(f, "(")?;
            for (k, i) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn permutation_of(a: &BraidWord) -> Permutation {
    let n = a.strands();
    // strand_at[q] = strand currently at position q
    let mut strand_at: Vec<usize> = (0..n).collect();
    for &v in a.letters() {
        let i = v.unsigned_abs() as usize - 1;
        strand_at.swap(i, i + 1);
    }
    let mut images = vec![0; n];
    for (q, &s) in strand_at.iter().enumerate() {
        images[s] = q;
    }
    Permutation { images }
}

pub fn cycle_decomposition(p: &Permutation) -> CycleDecomposition {
    let n = p.size();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // Scanning starts in increasing order, so every cycle is discovered at its
    // minimal element and the list comes out sorted.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i + 1);
            i = p.images[i];
        }
        cycles.push(cycle);
    }
    CycleDecomposition { cycles }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn transposition() {
        let p = permutation_of(&w(3, &[1]));
        assert_eq!(cycle_decomposition(&p).cycles, vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn four_cycle() {
        // σ₁σ₂σ₃: strand 1 walks to position 4, the others shift left.
        let p = permutation_of(&w(4, &[1, 2, 3]));
        assert_eq!(p.image(1), 4);
        assert_eq!(p.image(2), 1);
        assert_eq!(cycle_decomposition(&p).cycles, vec![vec![1, 4, 3, 2]]);
    }

    #[test]
    fn composition_convention() {
        let a = w(4, &[1, 2]);
        let b = w(4, &[3, -1]);
        let ab = a.compose(&b).unwrap();
        assert_eq!(permutation_of(&ab), permutation_of(&a).then(&permutation_of(&b)));
        assert_eq!(permutation_of(&a).then(&permutation_of(&a).inverse()), Permutation::identity(4));
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images(&[2, 1, 3]).is_some());
        assert!(Permutation::from_images(&[1, 1, 3]).is_none());
        assert!(Permutation::from_images(&[0, 1]).is_none());
    }

    #[test]
    fn display() {
        let p = permutation_of(&w(4, &[1, -3]));
        assert_eq!(p.to_string(), "(1 2)(3 4)");
    }
}
