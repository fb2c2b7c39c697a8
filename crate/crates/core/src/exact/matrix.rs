use std::ops::{Mul, Sub};

use super::{Polynomial, RationalFunction, Scalar, TruncatedSeries};
use crate::error::{Error, Result};
use crate::Rational;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("matrix must be nonempty".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let data = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
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

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F, G: Clone>(&self, f: F) -> Matrix<G>
    where
        F: Fn(&E) -> G,
    {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Scalar> Matrix<TruncatedSeries<T>> {
    /// Matrix-vector product, used to check solutions by substitution.
    pub fn mul_vec(&self, v: &[TruncatedSeries<T>]) -> Result<Vec<TruncatedSeries<T>>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let order = self.data.iter().chain(v.iter()).map(|s| s.order()).min().unwrap_or(0);
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(TruncatedSeries::zero(order), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }
}

/// Ring elements usable in Gaussian elimination: a pivot is any element
/// with a multiplicative inverse.
pub trait EliminationRing: Clone {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn try_inverse(&self) -> Option<Self>;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
}

impl<T: Scalar> EliminationRing for TruncatedSeries<T> {
    fn is_zero(&self) -> bool {
        TruncatedSeries::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        TruncatedSeries::zero(self.order())
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
}

impl EliminationRing for RationalFunction {
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
}

/// Solve `m * x = rhs` by Gaussian elimination with invertible pivots.
///
/// Over a power-series ring a system is solvable exactly when the determinant
/// has a nonzero constant term; then every column has a unit pivot after the
/// previous eliminations, so finding none is reported as singular.
pub fn solve_linear_system<R: EliminationRing>(m: &Matrix<R>, rhs: &[R]) -> Result<Vec<R>> {
    let n = m.rows();
    if !m.is_square() || rhs.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            m.rows(),
            m.cols(),
            rhs.len()
        )));
    }
    let mut a: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut b = rhs.to_vec();

    for col in 0..n {
        let (pivot_row, inv) = (col..n)
            .find_map(|r| a[r][col].try_inverse().map(|inv| (r, inv)))
            .ok_or(Error::SingularSystem { column: col })?;
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for j in col..n {
            a[col][j] = a[col][j].mul_ref(&inv);
        }
        b[col] = b[col].mul_ref(&inv);

        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in col..n {
                if !a[col][j].is_zero() {
                    a[r][j] = a[r][j].sub_ref(&factor.mul_ref(&a[col][j]));
                }
            }
            b[r] = b[r].sub_ref(&factor.mul_ref(&b[col]));
        }
    }
    Ok(b)
}

/// Solve a square system whose entries are truncated series.
pub fn solve_series_system<T: Scalar>(
    m: &Matrix<TruncatedSeries<T>>,
    rhs: &[TruncatedSeries<T>],
) -> Result<Vec<TruncatedSeries<T>>> {
    solve_linear_system(m, rhs)
}

/// Row `row` of `(I - x M)^{-1}` as exact rational functions.
///
/// Entry `j` is the generating function, by length, of walks from `row` to `j`
/// when `M` is an adjacency (or weighted transfer) matrix.
pub fn matrix_resolvent_row(m: &Matrix<Polynomial<Rational>>, row: usize) -> Result<Vec<RationalFunction>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("resolvent needs a square matrix".into()));
    }
    let n = m.rows();
    if row >= n {
        return Err(Error::DimensionMismatch(format!("row {row} of a {n}x{n} matrix")));
    }
    let x = Polynomial::<Rational>::x();
    // y^T (I - xM) = e_row^T, solved as (I - xM)^T y = e_row
    let system = Matrix::from_fn(n, n, |i, j| {
        let mut entry = -&(&x * m.get(j, i));
        if i == j {
            entry = &entry + &Polynomial::one();
        }
        RationalFunction::from_poly(entry)
    });
    let rhs: Vec<RationalFunction> = (0..n)
        .map(|i| if i == row { RationalFunction::one() } else { RationalFunction::zero() })
        .collect();
    solve_linear_system(&system, &rhs)
}
