use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::{Int, Matrix, SymMatrix};

/// Sylvester inertia of a real symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn is_degenerate(&self) -> bool {
        self.zero > 0
    }
}

/// Signature of a symmetric integer matrix.
pub fn signature_exact<T: Int>(m: &SymMatrix<T>) -> i64 {
    inertia_int(m.matrix()).signature()
}

/// Inertia of a symmetric integer matrix.
///
/// Fraction-free elimination with symmetric pivoting: after step `k` the
/// pivot is a nonzero principal minor of order `k + 1`, and the signs of
/// consecutive minors give the inertia (Jacobi). If every remaining diagonal
/// entry vanishes, the rest is the Schur complement times the last minor and
/// is finished by [`inertia`]. Panics if `m` is not symmetric.
pub fn inertia_int<T: Int>(m: &Matrix<T>) -> Inertia {
    assert!(m.is_square(), "inertia of a non-square matrix");
    assert!(m.is_symmetric(), "inertia of a non-symmetric matrix");
    let n = m.rows();
    let mut a: Vec<Vec<T>> = m.to_rows();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) else {
            let flip = prev.is_negative();
            let rest = Matrix::from_fn(n - k, n - k, |i, j| Ratio::from_integer(a[k + i][k + j].clone()));
            let r = inertia(&rest);
            let (pos, neg) = if flip { (r.negative, r.positive) } else { (r.positive, r.negative) };
            out.positive += pos;
            out.negative += neg;
            out.zero += r.zero;
            return out;
        };
        sym_swap(&mut a, k, p);
        let pivot = a[k][k].clone();
        if pivot.is_positive() == prev.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        for i in k + 1..n {
            for j in i..n {
                let v = (a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
                a[j][i] = v.clone();
                a[i][j] = v;
            }
        }
        prev = pivot;
    }
    out
}

/// Inertia of a symmetric rational matrix by Lagrange congruence
/// diagonalization.
///
/// A nonzero diagonal entry is used as pivot when one exists. Otherwise a
/// nonzero off-diagonal entry `b` spans a hyperbolic block `[[0, b], [b, 0]]`
/// of signature zero, which is split off explicitly. Panics if `m` is not
/// symmetric.
pub fn inertia<T: Int>(m: &Matrix<Ratio<T>>) -> Inertia {
    assert!(m.is_square(), "inertia of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<Vec<Ratio<T>>> = m.to_rows();
    for i in 0..n {
        for j in 0..i {
            assert!(a[i][j] == a[j][i], "inertia of a non-symmetric matrix");
        }
    }
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            sym_swap(&mut a, k, p);
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for r in k + 1..n {
                let f = a[r][k].clone() / pivot.clone();
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a[r][c].clone() - f.clone() * a[k][c].clone();
                    a[r][c] = v;
                }
                for c in k..n {
                    let v = a[c][r].clone() - f.clone() * a[c][k].clone();
                    a[c][r] = v;
                }
            }
            k += 1;
            continue;
        }
        let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((i, j)) = off else {
            out.zero += n - k;
            break;
        };
        sym_swap(&mut a, k, i);
        sym_swap(&mut a, k + 1, j);
        let b = a[k][k + 1].clone();
        // Rows r > k+1: subtract x*row_k + y*row_{k+1} with [x y] [[0 b] [b 0]] = [a_rk a_r,k+1].
        for r in k + 2..n {
            let x = a[r][k + 1].clone() / b.clone();
            let y = a[r][k].clone() / b.clone();
            for c in k..n {
                let v = a[r][c].clone() - x.clone() * a[k][c].clone() - y.clone() * a[k + 1][c].clone();
                a[r][c] = v;
            }
            for c in k..n {
                let v = a[c][r].clone() - x.clone() * a[c][k].clone() - y.clone() * a[c][k + 1].clone();
                a[c][r] = v;
            }
        }
        out.positive += 1;
        out.negative += 1;
        k += 2;
    }
    out
}

fn sym_swap<S: Clone>(a: &mut [Vec<S>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(rows: &[Vec<i64>]) -> i64 {
        signature_exact(&SymMatrix::new(Matrix::<i64>::from_i64_rows(rows).unwrap()).unwrap())
    }

    #[test]
    fn trefoil_form() {
        assert_eq!(sig(&[vec![-2, 1], vec![1, -2]]), -2);
    }

    #[test]
    fn one_by_one() {
        assert_eq!(sig(&[vec![3]]), 1);
    }

    #[test]
    fn hyperbolic_plane() {
        assert_eq!(sig(&[vec![0, 1], vec![1, 0]]), 0);
    }

    #[test]
    fn empty_is_zero() {
        assert_eq!(sig(&[]), 0);
    }

    #[test]
    fn hyperbolic_block_with_tail() {
        // zero diagonal everywhere forces the 2x2 step; eigenvalues 2, -1, -1
        assert_eq!(sig(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), -1);
        let m = Matrix::<i64>::from_i64_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap();
        let i = inertia(&m.map(|x| Ratio::from_integer(*x)));
        assert_eq!(i, Inertia { positive: 1, negative: 2, zero: 0 });
    }

    #[test]
    fn degenerate_counts_zero() {
        let m = Matrix::<i64>::from_i64_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        let i = inertia(&m.map(|x| Ratio::from_integer(*x)));
        assert_eq!(i, Inertia { positive: 1, negative: 0, zero: 1 });
        assert!(i.is_degenerate());
    }
}
