use std::fmt;

use super::{AlgebraError, Int, Matrix};

/// Diagonal of the Smith normal form: the nonzero invariant factors
/// `d_1 | d_2 | ...`, all positive, and their count (the rank).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub factors: Vec<T>,
    pub rank: usize,
}

/// Smith normal form over the integers by alternating row and column
/// reduction with the smallest-magnitude pivot.
pub fn smith_normal_form<T: Int>(m: &Matrix<T>) -> SmithForm<T> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry in the remaining block.
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.get(i, j).is_zero())
            .min_by(|&(i1, j1), &(i2, j2)| a.get(i1, j1).abs().cmp(&a.get(i2, j2).abs()))
        else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a.get(i, t).div_floor(&p);
                if !q.is_zero() {
                    row_axpy(&mut a, i, t, &q);
                }
                if !a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a.get(t, j).div_floor(&p);
                if !q.is_zero() {
                    col_axpy(&mut a, j, t, &q);
                }
                if !a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Pivot must divide the whole remaining block.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).mod_floor(&p).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let one = T::one();
                        row_axpy(&mut a, t, i, &-one);
                        continue;
                    }
                }
            }
            // Move the smallest entry of row/column t into the pivot slot.
            let best_r = (t..rows).filter(|&i| !a.get(i, t).is_zero()).min_by_key(|&i| a.get(i, t).abs());
            let best_c = (t..cols).filter(|&j| !a.get(t, j).is_zero()).min_by_key(|&j| a.get(t, j).abs());
            match (best_r, best_c) {
                (Some(i), Some(j)) if a.get(i, t).abs() <= a.get(t, j).abs() => a.swap_rows(t, i),
                (_, Some(j)) => a.swap_cols(t, j),
                (Some(i), None) => a.swap_rows(t, i),
                (None, None) => unreachable!("pivot row and column cannot both vanish"),
            }
        }
        diag.push(a.get(t, t).abs());
        t += 1;
    }
    SmithForm { rank: diag.len(), factors: diag }
}

/// `row_i -= q * row_k`
fn row_axpy<T: Int>(a: &mut Matrix<T>, i: usize, k: usize, q: &T) {
    for j in 0..a.cols() {
        let v = a.get(i, j).clone() - q.clone() * a.get(k, j).clone();
        a.set(i, j, v);
    }
}

/// `col_j -= q * col_k`
fn col_axpy<T: Int>(a: &mut Matrix<T>, j: usize, k: usize, q: &T) {
    for i in 0..a.rows() {
        let v = a.get(i, j).clone() - q.clone() * a.get(i, k).clone();
        a.set(i, j, v);
    }
}

/// Isomorphism type of a finitely generated abelian group:
/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with `d_1 | ... | d_k`, `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants<T> {
    pub free_rank: usize,
    pub torsion: Vec<T>,
}

impl<T: Int> AbelianInvariants<T> {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone())
    }
}

impl<T: Int> fmt::Display for AbelianInvariants<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Abelian group with `generators` generators and one relation per row of
/// `relations` (each row has one coefficient per generator).
pub fn fp_abelian_invariants<T: Int>(
    generators: usize,
    relations: &Matrix<T>,
) -> Result<AbelianInvariants<T>, AlgebraError> {
    if relations.rows() > 0 && relations.cols() != generators {
        return Err(AlgebraError::Dimension(format!(
            "relation rows have {} entries but there are {generators} generators",
            relations.cols()
        )));
    }
    let snf =
        if relations.rows() == 0 { SmithForm { factors: Vec::new(), rank: 0 } } else { smith_normal_form(relations) };
    Ok(AbelianInvariants {
        free_rank: generators - snf.rank,
        torsion: snf.factors.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[Vec<i64>]) -> SmithForm<i64> {
        smith_normal_form(&Matrix::from_i64_rows(rows).unwrap())
    }

    #[test]
    fn identity_factors() {
        assert_eq!(snf(&[vec![1, 0], vec![0, 1]]), SmithForm { factors: vec![1, 1], rank: 2 });
    }

    #[test]
    fn det_minus_two() {
        assert_eq!(snf(&[vec![1, 1], vec![1, -1]]), SmithForm { factors: vec![1, 2], rank: 2 });
    }

    #[test]
    fn zero_row() {
        assert_eq!(snf(&[vec![0, 0]]), SmithForm { factors: vec![], rank: 0 });
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) has Smith form diag(1, 6)
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]).factors, vec![1, 6]);
        assert_eq!(snf(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]).factors, vec![2, 2, 60]);
    }

    #[test]
    fn klein_ball_homology() {
        let rel = Matrix::<i64>::from_i64_rows(&[vec![-2, 1], vec![0, 1]]).unwrap();
        let g = fp_abelian_invariants(2, &rel).unwrap();
        assert_eq!(g, AbelianInvariants { free_rank: 0, torsion: vec![2] });
        assert_eq!(g.to_string(), "Z/2");
    }

    #[test]
    fn free_cyclic() {
        let rel = Matrix::<i64>::from_rows_with_cols(vec![], 1).unwrap();
        let g = fp_abelian_invariants(1, &rel).unwrap();
        assert_eq!(g.to_string(), "Z");
    }

    #[test]
    fn dimension_mismatch() {
        let rel = Matrix::<i64>::from_i64_rows(&[vec![1, 2, 3]]).unwrap();
        assert!(fp_abelian_invariants(2, &rel).is_err());
    }

    #[test]
    fn display_forms() {
        let g = AbelianInvariants::<i64> { free_rank: 2, torsion: vec![2, 4] };
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(AbelianInvariants::<i64> { free_rank: 0, torsion: vec![] }.to_string(), "0");
    }
}
