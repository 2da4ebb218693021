use std::fmt;

use super::{AlgebraError, ExactRing, Int, LaurentPoly};

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Clone> Matrix<R> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<R>) -> Result<Self, AlgebraError> {
        if data.len() != rows * cols {
            return Err(AlgebraError::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds from rows; an empty list gives the 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, AlgebraError> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// As [`Matrix::from_rows`], but fixes the column count so that a
    /// matrix with zero rows can still have columns.
    pub fn from_rows_with_cols(rows: Vec<Vec<R>>, cols: usize) -> Result<Self, AlgebraError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(AlgebraError::Dimension(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<R: ExactRing> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, R::add)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.zip(rhs, R::sub)
    }

    fn zip(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self, AlgebraError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(AlgebraError::Dimension(format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, k| acc.add(&self.get(i, k).mul(rhs.get(k, j))))
        }))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Self::from_fn(r, c, |i, j| match (i < self.rows, j < self.cols) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - self.rows, j - self.cols).clone(),
            _ => R::zero(),
        })
    }

    /// Determinant by fraction-free Bareiss elimination. The empty matrix
    /// has determinant one. Panics if the matrix is not square.
    pub fn det(&self) -> R {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign_flip = !sign_flip;
                    }
                    None => return R::zero(),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.mul(a.get(i, j)).sub(&a.get(i, k).mul(a.get(k, j)));
                    let v = num.div_exact(&prev).expect("Bareiss step is an exact division");
                    a.set(i, j, v);
                }
                a.set(i, k, R::zero());
            }
            prev = pivot;
        }
        let d = if n == 0 { R::one() } else { a.get(n - 1, n - 1).clone() };
        if sign_flip {
            d.neg()
        } else {
            d
        }
    }
}

impl<T: Int> Matrix<T> {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| T::from_int(v)).collect()).collect())
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_i64()).collect()).collect()
    }
}

impl<R: fmt::Display + Clone> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Symmetric square integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymMatrix<T>(Matrix<T>);

impl<T: Int> SymMatrix<T> {
    pub fn new(m: Matrix<T>) -> Result<Self, AlgebraError> {
        if m.is_symmetric() {
            Ok(Self(m))
        } else {
            Err(AlgebraError::NotSymmetric)
        }
    }

    /// `M + M^T` for any square `M`.
    pub fn symmetrize(m: &Matrix<T>) -> Result<Self, AlgebraError> {
        Ok(Self(m.add(&m.transpose())?))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.0
    }

    pub fn det(&self) -> T {
        self.0.det()
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        Self(self.0.block_diag(&other.0))
    }

    /// `A^T M A`.
    pub fn congruent(&self, a: &Matrix<T>) -> Result<Self, AlgebraError> {
        Ok(Self(a.transpose().mul(&self.0)?.mul(a)?))
    }
}

impl<T: Int> fmt::Display for SymMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact determinant of a square matrix of Laurent polynomials, by
/// fraction-free elimination. The 0x0 matrix has determinant 1.
pub fn det_laurent<T: Int>(m: &Matrix<LaurentPoly<T>>) -> LaurentPoly<T> {
    m.det()
}
