//! Dense matrices over an exact scalar ring.
//!
//! The generic layer gives storage, transposition and selection for any
//! scalar; ring arithmetic needs [`Ring`]; elimination-based algorithms
//! (determinant, reduced row echelon form, nullspace, inverse) are provided
//! for rational matrices only, since the other shipped scalars have no field
//! (or no ring) structure.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Ring, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>, // row-major
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Matrix<T> {
        assert!(rows > 0 && cols > 0, "matrix dims must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Matrix<T>> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Shape("matrix dims must be positive".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        let r = rows.len();
        Ok(Matrix::new(r, cols, rows.into_iter().flatten().collect()))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Matrix<T> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(rows, cols, entries)
    }

    pub fn row_vec(&self, r: usize) -> Vec<T> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Selection by 0-based index lists, preserving the given order.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix<T> {
        assert!(!row_idx.is_empty() && !col_idx.is_empty());
        Matrix::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.get(row_idx[r], col_idx[c]).clone()
        })
    }

    /// The (i, j) minor matrix: row i and column j deleted (0-based).
    pub fn minor_matrix(&self, i: usize, j: usize) -> Matrix<T> {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(f).collect())
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Matrix<T> {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Matrix<T> {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.dims() != rhs.dims() {
            return Err(Error::DimMismatch {
                op: "add",
                left: self.dims(),
                right: rhs.dims(),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + rhs.get(r, c).clone()
        }))
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.dims() != rhs.dims() {
            return Err(Error::DimMismatch {
                op: "sub",
                left: self.dims(),
                right: rhs.dims(),
            });
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() - rhs.get(r, c).clone()
        }))
    }

    pub fn neg(&self) -> Matrix<T> {
        self.map(|e| -e.clone())
    }

    pub fn scalar_mul(&self, scalar: &T) -> Matrix<T> {
        self.map(|e| scalar.clone() * e.clone())
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimMismatch {
                op: "mul",
                left: self.dims(),
                right: rhs.dims(),
            });
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(r, k).clone() * rhs.get(k, c).clone();
            }
            acc
        }))
    }

    pub fn pow(&self, exp: usize) -> Result<Matrix<T>> {
        if !self.is_square() {
            return Err(Error::Shape("pow of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.entries[r * self.cols + c])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: serde::Serialize> serde::Serialize for Matrix<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            let row: Vec<&T> = (0..self.cols).map(|c| self.get(r, c)).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// One elementary row operation, recorded 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    Scale(usize, Rational),
    AddMul {
        dst: usize,
        src: usize,
        factor: Rational,
    },
}

impl RowOp {
    pub fn apply(&self, m: &mut Matrix<Rational>) {
        match self {
            RowOp::Swap(a, b) => {
                if a != b {
                    for c in 0..m.cols {
                        let tmp = m.get(*a, c).clone();
                        m.set(*a, c, m.get(*b, c).clone());
                        m.set(*b, c, tmp);
                    }
                }
            }
            RowOp::Scale(r, factor) => {
                for c in 0..m.cols {
                    m.set(*r, c, m.get(*r, c) * factor);
                }
            }
            RowOp::AddMul { dst, src, factor } => {
                for c in 0..m.cols {
                    let v = m.get(*dst, c) + &(m.get(*src, c) * factor);
                    m.set(*dst, c, v);
                }
            }
        }
    }
}

/// Result of a reduction to canonical reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub matrix: Matrix<Rational>,
    pub ops: Vec<RowOp>,
    /// Pivot column per pivot row, in order.
    pub pivots: Vec<usize>,
}

impl Matrix<Rational> {
    /// Exact determinant.
    ///
    /// Small orders expand by cofactors; larger ones clear denominators and
    /// run fraction-free Bareiss elimination over the integers.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n <= 3 {
            return Ok(self.det_cofactor());
        }
        Ok(self.det_bareiss())
    }

    fn det_cofactor(&self) -> Rational {
        let n = self.rows;
        match n {
            1 => self.get(0, 0).clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            _ => {
                let mut acc = Rational::zero();
                for j in 0..n {
                    if self.get(0, j).is_zero() {
                        continue;
                    }
                    let term = self.get(0, j) * &self.minor_matrix(0, j).det_cofactor();
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    fn det_bareiss(&self) -> Rational {
        let n = self.rows;
        // Scale each row to integers; remember the combined factor.
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::one();
            for c in 0..n {
                lcm = lcm.lcm(self.get(r, c).denom());
            }
            scale *= &lcm;
            m.push(
                (0..n)
                    .map(|c| {
                        let q = self.get(r, c);
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect(),
            );
        }
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev; // exact by Bareiss' identity
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det_scaled = if sign < 0 {
            -m[n - 1][n - 1].clone()
        } else {
            m[n - 1][n - 1].clone()
        };
        Rational::from_big(num_rational::BigRational::new(det_scaled, scale))
    }

    /// Canonical reduced row echelon form with the op-log that produces it.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut ops = Vec::new();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let r = match found {
                Some(r) => r,
                None => continue,
            };
            if r != pivot_row {
                let op = RowOp::Swap(pivot_row, r);
                op.apply(&mut m);
                ops.push(op);
            }
            let pivot = m.get(pivot_row, col).clone();
            if pivot != Rational::one() {
                let op = RowOp::Scale(pivot_row, pivot.recip().unwrap());
                op.apply(&mut m);
                ops.push(op);
            }
            for other in 0..m.rows {
                if other == pivot_row || m.get(other, col).is_zero() {
                    continue;
                }
                let op = RowOp::AddMul {
                    dst: other,
                    src: pivot_row,
                    factor: -m.get(other, col),
                };
                op.apply(&mut m);
                ops.push(op);
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Echelon {
            matrix: m,
            ops,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Nullspace basis, one vector per free column of the RREF.
    ///
    /// Each vector is normalized so that its first nonzero entry is positive.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.rref();
        nullspace_from_rref(&ech)
    }

    pub fn inverse(&self) -> Result<Option<Matrix<Rational>>> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        // Reduce [A | I]; A invertible iff the left block reaches I.
        let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let ech = aug.rref();
        aug = ech.matrix;
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(n, n, |r, c| {
            aug.get(r, c + n).clone()
        })))
    }

    /// Particular solution of `self * x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimMismatch {
                op: "solve",
                left: self.dims(),
                right: (rhs.len(), 1),
            });
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs[r].clone()
            }
        });
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None); // pivot in the augmented column
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in ech.pivots.iter().enumerate() {
            x[col] = ech.matrix.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

pub(crate) fn nullspace_from_rref(ech: &Echelon) -> Vec<Vec<Rational>> {
    let m = &ech.matrix;
    let free: Vec<usize> = (0..m.cols()).filter(|c| !ech.pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); m.cols()];
        v[f] = Rational::one();
        for (row, &col) in ech.pivots.iter().enumerate() {
            v[col] = -m.get(row, f);
        }
        if let Some(first) = v.iter().find(|e| !e.is_zero()) {
            if first.is_negative() {
                for e in v.iter_mut() {
                    *e = -e.clone();
                }
            }
        }
        basis.push(v);
    }
    basis
}
