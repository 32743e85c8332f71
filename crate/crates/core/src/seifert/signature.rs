use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::{Error, Result};

/// Counts of positive, negative and zero squares in a diagonalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Exact congruence diagonalization `M = L D Lᵀ` over the rationals.
///
/// Zero pivots are handled by a symmetric swap with a later nonzero diagonal
/// entry.  When the whole remaining diagonal vanishes but some off-diagonal
/// entry `b` does not, the hyperbolic block `[[0, b], [b, 0]]` is eliminated
/// in one step; it contributes one positive and one negative square.
pub(crate) struct Reduction {
    pub(crate) inertia: Inertia,
    pub(crate) determinant: BigInt,
}

pub(crate) fn reduce(m: &IntMatrix) -> Result<Reduction> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.size();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(m.get(i, j).into())).collect())
        .collect();
    let mut inertia = Inertia::default();
    let mut det = BigRational::from_integer(1.into());

    let swap = |a: &mut Vec<Vec<BigRational>>, i: usize, j: usize| {
        if i != j {
            a.swap(i, j);
            for row in a.iter_mut() {
                row.swap(i, j);
            }
        }
    };

    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&p| !a[p][p].is_zero()) {
            swap(&mut a, k, p);
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            let col: Vec<BigRational> = (k + 1..n).map(|i| a[i][k].clone()).collect();
            for (ii, ci) in col.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                let factor = ci / &pivot;
                let i = k + 1 + ii;
                for (jj, cj) in col.iter().enumerate().skip(ii) {
                    if cj.is_zero() {
                        continue;
                    }
                    let j = k + 1 + jj;
                    let v = &a[i][j] - &factor * cj;
                    a[j][i] = v.clone();
                    a[i][j] = v;
                }
            }
            det *= pivot;
            k += 1;
            continue;
        }

        // whole remaining diagonal is zero
        let Some((p, q)) = (k..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .find(|&(p, q)| !a[p][q].is_zero())
        else {
            inertia.zero += n - k;
            det = BigRational::zero();
            break;
        };
        swap(&mut a, k, p);
        swap(&mut a, k + 1, q);
        let b = a[k][k + 1].clone();
        inertia.positive += 1;
        inertia.negative += 1;
        // Schur complement with P⁻¹ = [[0, 1/b], [1/b, 0]]
        let u: Vec<BigRational> = (k + 2..n).map(|i| a[i][k].clone()).collect();
        let w: Vec<BigRational> = (k + 2..n).map(|i| a[i][k + 1].clone()).collect();
        for ii in 0..u.len() {
            for jj in ii..u.len() {
                let cross = &u[ii] * &w[jj] + &w[ii] * &u[jj];
                if cross.is_zero() {
                    continue;
                }
                let (i, j) = (k + 2 + ii, k + 2 + jj);
                let v = &a[i][j] - cross / &b;
                a[j][i] = v.clone();
                a[i][j] = v;
            }
        }
        det *= -(&b * &b);
        k += 2;
    }

    Ok(Reduction { inertia, determinant: det.to_integer() })
}

pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    Ok(reduce(m)?.inertia)
}

/// Signature of a symmetric integer matrix, computed exactly.
pub fn symmetric_signature(m: &IntMatrix) -> Result<i64> {
    Ok(reduce(m)?.inertia.signature())
}

/// Exact determinant of a symmetric integer matrix.
pub fn symmetric_determinant(m: &IntMatrix) -> Result<BigInt> {
    Ok(reduce(m)?.determinant)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(symmetric_signature(&mat(&[&[2]])).unwrap(), 1);
        assert_eq!(symmetric_signature(&mat(&[&[-2]])).unwrap(), -1);
        assert_eq!(symmetric_signature(&IntMatrix::zeros(0)).unwrap(), 0);
        assert_eq!(symmetric_determinant(&IntMatrix::zeros(0)).unwrap(), 1.into());
        let t = mat(&[&[-2, 1], &[1, -2]]);
        assert_eq!(symmetric_signature(&t).unwrap(), -2);
        assert_eq!(symmetric_determinant(&t).unwrap(), 3.into());
    }

    #[test]
    fn hyperbolic_blocks() {
        let h = mat(&[&[0, 3], &[3, 0]]);
        assert_eq!(inertia(&h).unwrap(), Inertia { positive: 1, negative: 1, zero: 0 });
        assert_eq!(symmetric_determinant(&h).unwrap(), (-9).into());
        let m = mat(&[&[0, 0, 1], &[0, 0, 2], &[1, 2, 0]]);
        let i = inertia(&m).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
        assert_eq!(symmetric_determinant(&m).unwrap(), 0.into());
        let m = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(inertia(&m).unwrap(), Inertia { positive: 1, negative: 2, zero: 0 });
        assert_eq!(symmetric_determinant(&m).unwrap(), 2.into());
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(symmetric_signature(&mat(&[&[0, 1], &[0, 0]])), Err(Error::NotSymmetric));
    }
}
