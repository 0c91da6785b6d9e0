//! Dense matrices over an exact field, with reduced row echelon form,
//! kernels, solving and rank. Everything is exact; fraction-free tricks
//! are not used, matrices at desk scale stay small.

use crate::scalar::{Field, Scalar};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("matrix entries do not share a single field")]
    FieldMismatch,
    #[error("entry count {got} does not match {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A dense row-major matrix over a single exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Validates the shape and that all entries share one field.
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::ShapeMismatch { rows, cols, got: entries.len() });
        }
        let field = entries
            .first()
            .map(|s| s.field())
            .ok_or(LinAlgError::FieldMismatch)
            .or_else(|_| {
                // Empty matrices are allowed but need an explicit field;
                // use `zero` for those. Default to rationals here.
                Ok::<Field, LinAlgError>(Field::Rational)
            })?;
        if entries.iter().any(|s| s.field() != field) {
            return Err(LinAlgError::FieldMismatch);
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from row slices of i64, over the given field.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| field.from_i64(x)))
            .collect();
        Matrix { rows: r, cols: c, field, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| a.mul(s)).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(|a| a.neg()).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn column_matrix(&self, c: usize) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: 1,
            field: self.field,
            entries: self.column(c),
        }
    }

    pub fn from_columns(rows: usize, field: Field, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zero(rows, cols.len(), field);
        for (c, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(self.rows, self.cols + other.cols, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries }
    }

    /// Flattens row-major into a single column vector.
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    /// Reduced row echelon form together with the pivot columns
    /// (strictly increasing).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Find a nonzero pivot in this column at or below `row`.
            let pivot_row = (row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).inv();
            for c in col..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let ca = self.get(a, c).clone();
            let cb = self.get(b, c).clone();
            self.set(a, c, cb);
            self.set(b, c, ca);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A matrix whose columns form a canonical basis of the null space.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(self.cols, free.len(), self.field);
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (prow, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, r.get(prow, fc).neg());
            }
        }
        out
    }

    /// Solves `self * x = rhs` column-wise; `None` when inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        // Inconsistent iff a pivot lands in the rhs block.
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.cols, rhs.cols, self.field);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, r.get(prow, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Matrix::identity(self.rows, self.field))?;
        if self.mul(&sol) == Matrix::identity(self.rows, self.field) {
            Some(sol)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Determinant by elimination.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..m.cols {
            let pr = (col..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pr else { return self.field.zero() };
            if pr != col {
                m.swap_rows(col, pr);
                det = det.neg();
            }
            let pivot = m.get(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv();
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).mul(&inv);
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(col, c)));
                    m.set(r, c, v);
                }
            }
        }
        det
    }

    /// Column span as a canonical matrix: columns are the pivot columns of
    /// the original matrix after rref-identification, expressed in rref
    /// canonical form (rref of the transpose, transposed back).
    pub fn column_space_basis(&self) -> Matrix {
        let (r, pivots) = self.transpose().rref();
        let _ = pivots;
        // Nonzero rows of r are a canonical basis of the row space of the
        // transpose, i.e. the column space of self.
        let rank = r.rank();
        let mut cols = Vec::new();
        for i in 0..rank {
            cols.push((0..r.cols()).map(|c| r.get(i, c).clone()).collect::<Vec<_>>());
        }
        Matrix::from_columns(self.rows, self.field, &cols)
    }

    /// Whether `v` (a column) lies in the column span of `self`.
    pub fn contains_column(&self, v: &Matrix) -> bool {
        self.solve(v).is_some()
    }
}

impl std::fmt::Display for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(2, Field::Rational);
        let (r, p) = m.rref();
        assert_eq!(r, m);
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(Field::Rational, &[&[1, 2], &[2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, Matrix::from_i64(Field::Rational, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_idempotent() {
        let m = Matrix::from_i64(Field::Rational, &[&[2, 4, 1], &[1, 2, 3], &[0, 1, 7]]);
        let (r, _) = m.rref();
        let (rr, _) = r.rref();
        assert_eq!(r, rr);
    }

    #[test]
    fn kernel_dims() {
        let z = Matrix::zero(3, 3, Field::Rational);
        assert_eq!(z.kernel_basis().cols(), 3);
        let id = Matrix::identity(4, Field::Rational);
        assert_eq!(id.kernel_basis().cols(), 0);
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_i64(Field::Rational, &[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_i64(Field::Rational, &[&[1, 2], &[2, 4]]);
        let v = Matrix::from_i64(Field::Rational, &[&[3], &[6]]);
        let x = m.solve(&v).unwrap();
        assert_eq!(m.mul(&x), v);
        let bad = Matrix::from_i64(Field::Rational, &[&[3], &[7]]);
        assert!(m.solve(&bad).is_none());
    }

    #[test]
    fn field_mismatch_rejected() {
        let e = Matrix::new(1, 2, vec![rational(1, 1), Field::Prime(5).one()]);
        assert_eq!(e.unwrap_err(), LinAlgError::FieldMismatch);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(Field::Rational, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, Field::Rational));
        let sing = Matrix::from_i64(Field::Rational, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn det_values() {
        let m = Matrix::from_i64(Field::Rational, &[&[2, 1], &[1, 1]]);
        assert_eq!(m.det(), rational(1, 1));
        let s = Matrix::from_i64(Field::Rational, &[&[1, 2], &[2, 4]]);
        assert!(s.det().is_zero());
    }
}
