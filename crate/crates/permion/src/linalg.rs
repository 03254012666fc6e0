//! Dense matrices over exact rationals.
//!
//! Every representation-theoretic computation in the crate runs through this
//! module, so all arithmetic is exact: rationals over arbitrary-precision
//! integers, no rounding anywhere. Matrices at desk scale stay small (the
//! regular representation of `S_4` is 24 x 24), so dense storage is fine.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: ({0}x{1}) vs ({2}x{3})")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Lowest-terms string form: `"3"`, `"-1/2"`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_from_str(s: &str) -> Result<Rational, LinAlgError> {
    BigRational::from_str(s).map_err(|_| LinAlgError::BadRational(s.to_string()))
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience constructor from integer literals.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
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

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e += o;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e -= o;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e *= factor;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Exact inverse by Gauss-Jordan elimination with exact pivoting.
    /// Rational normalization after each step keeps entries in lowest terms,
    /// so no intermediate coefficient blowup occurs at desk scale.
    pub fn inverse(&self) -> Result<Matrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            // largest-magnitude pivot keeps the elimination well behaved
            let pivot = (col..n)
                .filter(|&r| !work[(r, col)].is_zero())
                .max_by_key(|&r| work[(r, col)].abs())
                .ok_or(LinAlgError::Singular)?;
            if pivot != col {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let scale = work[(col, col)].recip();
            work.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for row in 0..n {
                if row == col || work[(row, col)].is_zero() {
                    continue;
                }
                let factor = work[(row, col)].clone();
                work.add_scaled_row(col, row, &-&factor);
                inv.add_scaled_row(col, row, &-factor);
            }
        }
        Ok(inv)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<Rational, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).map(|i| &self[(i, i)]).sum())
    }

    /// Extracts the sub-block `[r0..r0+h) x [c0..c0+w)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Matrix {
        let mut out = Matrix::zeros(h, w);
        for i in 0..h {
            for j in 0..w {
                out[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        out
    }

    /// Column rank via elimination on a working copy.
    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        let mut rank = 0;
        for col in 0..work.cols {
            let Some(pivot) = (rank..work.rows).find(|&r| !work[(r, col)].is_zero()) else {
                continue;
            };
            work.swap_rows(pivot, rank);
            let scale = work[(rank, col)].recip();
            work.scale_row(rank, &scale);
            for row in 0..work.rows {
                if row != rank && !work[(row, col)].is_zero() {
                    let factor = -work[(row, col)].clone();
                    work.add_scaled_row(rank, row, &factor);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Rational) {
        for j in 0..self.cols {
            self[(row, j)] *= factor;
        }
    }

    /// row[dst] += factor * row[src]
    fn add_scaled_row(&mut self, src: usize, dst: usize, factor: &Rational) {
        for j in 0..self.cols {
            let add = factor * &self[(src, j)];
            self[(dst, j)] += add;
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", rational_to_string(&self[(i, j)]))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// JSON form: `{"rows": r, "cols": c, "entries": [["p/q", ...], ...]}`.
pub fn matrix_to_json(m: &Matrix) -> serde_json::Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rational_to_string(&m[(i, j)])).collect())
        .collect();
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

pub fn matrix_from_json(v: &serde_json::Value) -> Result<Matrix, LinAlgError> {
    let bad = || LinAlgError::BadRational(v.to_string());
    let rows = v["rows"].as_u64().ok_or_else(bad)? as usize;
    let cols = v["cols"].as_u64().ok_or_else(bad)? as usize;
    let grid = v["entries"].as_array().ok_or_else(bad)?;
    if grid.len() != rows {
        return Err(bad());
    }
    let mut m = Matrix::zeros(rows, cols);
    for (i, row) in grid.iter().enumerate() {
        let row = row.as_array().ok_or_else(bad)?;
        if row.len() != cols {
            return Err(bad());
        }
        for (j, cell) in row.iter().enumerate() {
            let s = cell.as_str().ok_or_else(bad)?;
            m[(i, j)] = rational_from_str(s)?;
        }
    }
    Ok(m)
}
