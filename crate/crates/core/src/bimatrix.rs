//! The bimatrix value type and its ring-like operations.
//!
//! A bimatrix is an ordered pair of component matrices over one scalar ring.
//! Equal components do not form a bimatrix; the zero pair is the one
//! coincidence the validating constructor admits. Operations that would
//! produce equal nonzero components raise [`Error::DegenerateCollapse`]
//! instead of silently returning a non-bimatrix.
//!
//! Intermediate computations that legitimately pass through degenerate pairs
//! (`A - A`, `A * A^-1`, the identity pair itself) use the relaxed
//! constructors and operation variants, which skip validation.

use std::fmt;

use crate::error::{Component, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Ring, Scalar};

/// Shape taxonomy of a bimatrix. Exactly one class applies; row and column
/// bimatrices refine the uniform rectangular class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ShapeClass {
    RectangularUniform,
    SquareUniform,
    MixedSquare,
    MixedRectangular,
    Row,
    Column,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ShapeClass::RectangularUniform => "RectangularUniform",
            ShapeClass::SquareUniform => "SquareUniform",
            ShapeClass::MixedSquare => "MixedSquare",
            ShapeClass::MixedRectangular => "MixedRectangular",
            ShapeClass::Row => "Row",
            ShapeClass::Column => "Column",
        };
        write!(f, "{}", s)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BiMatrix<T> {
    first: Matrix<T>,
    second: Matrix<T>,
}

impl<T: Scalar> BiMatrix<T> {
    /// Validating constructor: rejects equal nonzero components.
    pub fn new(first: Matrix<T>, second: Matrix<T>) -> Result<BiMatrix<T>> {
        let b = BiMatrix { first, second };
        b.check_collapse()?;
        Ok(b)
    }

    /// Escape hatch for intermediate values: no degeneracy validation.
    pub fn relaxed(first: Matrix<T>, second: Matrix<T>) -> BiMatrix<T> {
        BiMatrix { first, second }
    }

    pub fn from_rows(first: Vec<Vec<T>>, second: Vec<Vec<T>>) -> Result<BiMatrix<T>> {
        BiMatrix::new(Matrix::from_rows(first)?, Matrix::from_rows(second)?)
    }

    pub fn first(&self) -> &Matrix<T> {
        &self.first
    }

    pub fn second(&self) -> &Matrix<T> {
        &self.second
    }

    pub fn component(&self, which: Component) -> &Matrix<T> {
        match which {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    pub fn into_components(self) -> (Matrix<T>, Matrix<T>) {
        (self.first, self.second)
    }

    pub fn dims(&self) -> ((usize, usize), (usize, usize)) {
        (self.first.dims(), self.second.dims())
    }

    pub fn is_uniform(&self) -> bool {
        self.first.dims() == self.second.dims()
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    /// True when the pair is not a bimatrix: components equal and nonzero.
    pub fn is_degenerate(&self) -> bool {
        self.first == self.second && !self.first.is_zero()
    }

    fn check_collapse(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateCollapse)
        } else {
            Ok(())
        }
    }

    /// Deterministic shape classification.
    pub fn classify_shape(&self) -> ShapeClass {
        let (r1, c1) = self.first.dims();
        let (r2, c2) = self.second.dims();
        if (r1, c1) == (r2, c2) {
            if r1 == c1 {
                ShapeClass::SquareUniform
            } else if r1 == 1 {
                ShapeClass::Row
            } else if c1 == 1 {
                ShapeClass::Column
            } else {
                ShapeClass::RectangularUniform
            }
        } else if r1 == c1 && r2 == c2 {
            ShapeClass::MixedSquare
        } else {
            ShapeClass::MixedRectangular
        }
    }

    /// Selection by four 1-based index sets (strictly increasing, nonempty).
    pub fn subbimatrix(
        &self,
        rows1: &[usize],
        cols1: &[usize],
        rows2: &[usize],
        cols2: &[usize],
    ) -> Result<BiMatrix<T>> {
        let r1 = check_index_set(rows1, self.first.rows(), "rows1")?;
        let c1 = check_index_set(cols1, self.first.cols(), "cols1")?;
        let r2 = check_index_set(rows2, self.second.rows(), "rows2")?;
        let c2 = check_index_set(cols2, self.second.cols(), "cols2")?;
        let b = BiMatrix::relaxed(
            self.first.submatrix(&r1, &c1),
            self.second.submatrix(&r2, &c2),
        );
        b.check_collapse()?;
        Ok(b)
    }

    pub fn transpose(&self) -> BiMatrix<T> {
        BiMatrix::relaxed(self.first.transpose(), self.second.transpose())
    }

    /// Lists every row vector and column vector appearing in both components.
    ///
    /// Defined for uniform-shape bimatrices only. Shared vectors are listed
    /// once each, in order of first appearance in the first component.
    pub fn detect_overlap(&self) -> Result<OverlapReport<T>> {
        if !self.is_uniform() {
            return Err(Error::Shape(
                "overlap detection needs components of equal dimensions".into(),
            ));
        }
        let rows2: Vec<Vec<T>> = (0..self.second.rows())
            .map(|r| self.second.row_vec(r))
            .collect();
        let cols2: Vec<Vec<T>> = (0..self.second.cols())
            .map(|c| self.second.col_vec(c))
            .collect();
        let mut shared_rows: Vec<Vec<T>> = Vec::new();
        for r in 0..self.first.rows() {
            let row = self.first.row_vec(r);
            if rows2.contains(&row) && !shared_rows.contains(&row) {
                shared_rows.push(row);
            }
        }
        let mut shared_cols: Vec<Vec<T>> = Vec::new();
        for c in 0..self.first.cols() {
            let col = self.first.col_vec(c);
            if cols2.contains(&col) && !shared_cols.contains(&col) {
                shared_cols.push(col);
            }
        }
        let class = match (!shared_rows.is_empty(), !shared_cols.is_empty()) {
            (false, false) => OverlapClass::None,
            (true, false) => OverlapClass::RowOverlap,
            (false, true) => OverlapClass::ColumnOverlap,
            (true, true) => OverlapClass::RowColumnOverlap,
        };
        Ok(OverlapReport {
            class,
            shared_rows,
            shared_cols,
        })
    }
}

impl<T: Ring> BiMatrix<T> {
    /// The zero bimatrix: the union of two zero matrices.
    pub fn zero(dims1: (usize, usize), dims2: (usize, usize)) -> BiMatrix<T> {
        BiMatrix::relaxed(
            Matrix::zero(dims1.0, dims1.1),
            Matrix::zero(dims2.0, dims2.1),
        )
    }

    /// The identity bimatrix `I_B`, admitted by the same special concession
    /// the zero bimatrix enjoys.
    pub fn identity(n1: usize, n2: usize) -> BiMatrix<T> {
        BiMatrix::relaxed(Matrix::identity(n1), Matrix::identity(n2))
    }

    /// Componentwise sum with collapse detection.
    pub fn add(&self, rhs: &BiMatrix<T>) -> Result<BiMatrix<T>> {
        let b = self.add_relaxed(rhs)?;
        b.check_collapse()?;
        Ok(b)
    }

    /// Componentwise sum without the collapse check.
    pub fn add_relaxed(&self, rhs: &BiMatrix<T>) -> Result<BiMatrix<T>> {
        Ok(BiMatrix::relaxed(
            self.first.add(&rhs.first)?,
            self.second.add(&rhs.second)?,
        ))
    }

    pub fn sub(&self, rhs: &BiMatrix<T>) -> Result<BiMatrix<T>> {
        let b = self.sub_relaxed(rhs)?;
        b.check_collapse()?;
        Ok(b)
    }

    pub fn sub_relaxed(&self, rhs: &BiMatrix<T>) -> Result<BiMatrix<T>> {
        Ok(BiMatrix::relaxed(
            self.first.sub(&rhs.first)?,
            self.second.sub(&rhs.second)?,
        ))
    }

    pub fn neg(&self) -> BiMatrix<T> {
        BiMatrix::relaxed(self.first.neg(), self.second.neg())
    }

    /// Scales both components. Collapse is only possible when the ring has
    /// zero divisors (or the scalar is zero, which yields the admitted zero
    /// bimatrix).
    pub fn scalar_mul(&self, scalar: &T) -> Result<BiMatrix<T>> {
        let b = BiMatrix::relaxed(
            self.first.scalar_mul(scalar),
            self.second.scalar_mul(scalar),
        );
        b.check_collapse()?;
        Ok(b)
    }

    /// Componentwise product with collapse detection.
    pub fn mul(&self, rhs: &BiMatrix<T>) -> Result<BiMatrix<T>> {
        let b = self.mul_relaxed(rhs)?;
        b.check_collapse()?;
        Ok(b)
    }

    /// Componentwise product without the collapse check.
    pub fn mul_relaxed(&self, rhs: &BiMatrix<T>) -> Result<BiMatrix<T>> {
        Ok(BiMatrix::relaxed(
            self.first.mul(&rhs.first)?,
            self.second.mul(&rhs.second)?,
        ))
    }
}

/// Validates a 1-based, nonempty, strictly increasing index set against a
/// bound and converts it to 0-based indices.
pub(crate) fn check_index_set(set: &[usize], bound: usize, name: &str) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::IndexOutOfRange(format!("{} is empty", name)));
    }
    for w in set.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::IndexOutOfRange(format!(
                "{} is not strictly increasing",
                name
            )));
        }
    }
    if set[0] < 1 || *set.last().unwrap() > bound {
        return Err(Error::IndexOutOfRange(format!(
            "{} exceeds bound {}",
            name, bound
        )));
    }
    Ok(set.iter().map(|&i| i - 1).collect())
}

impl<T: fmt::Debug> fmt::Debug for BiMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, m) in [
            ("component 1:", &self.first),
            ("component 2:", &self.second),
        ] {
            writeln!(f, "{}", label)?;
            write!(f, "{:?}", m)?;
        }
        Ok(())
    }
}

/// Symmetric + skew-symmetric decomposition of a square or mixed-square
/// bimatrix: `S = (A + A')/2`, `K = (A - A')/2`, `S + K = A`.
///
/// The parts are relaxed pairs; halving can make distinct components
/// coincide even when the input is a valid bimatrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSkewPair<T> {
    pub symmetric: BiMatrix<T>,
    pub skew: BiMatrix<T>,
}

impl BiMatrix<crate::scalar::Rational> {
    pub fn sym_skew_decompose(&self) -> Result<SymSkewPair<crate::scalar::Rational>> {
        use crate::scalar::Rational;
        if !self.first.is_square() || !self.second.is_square() {
            return Err(Error::Shape(
                "symmetric/skew decomposition needs square components".into(),
            ));
        }
        let half = Rational::new(1, 2);
        let sym_of = |m: &Matrix<Rational>| m.add(&m.transpose()).unwrap().scalar_mul(&half);
        let skew_of = |m: &Matrix<Rational>| m.sub(&m.transpose()).unwrap().scalar_mul(&half);
        Ok(SymSkewPair {
            symmetric: BiMatrix::relaxed(sym_of(&self.first), sym_of(&self.second)),
            skew: BiMatrix::relaxed(skew_of(&self.first), skew_of(&self.second)),
        })
    }
}

/// Overlap classification of a uniform-shape bimatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum OverlapClass {
    None,
    RowOverlap,
    ColumnOverlap,
    RowColumnOverlap,
}

impl fmt::Display for OverlapClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OverlapClass::None => "None",
            OverlapClass::RowOverlap => "RowOverlap",
            OverlapClass::ColumnOverlap => "ColumnOverlap",
            OverlapClass::RowColumnOverlap => "RowColumnOverlap",
        };
        write!(f, "{}", s)
    }
}

/// Row and column vectors shared by both components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapReport<T> {
    pub class: OverlapClass,
    pub shared_rows: Vec<Vec<T>>,
    pub shared_cols: Vec<Vec<T>>,
}

/// Block partition of a bimatrix: cut positions after the listed 1-based row
/// and column indices, per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub row_cuts1: Vec<usize>,
    pub col_cuts1: Vec<usize>,
    pub row_cuts2: Vec<usize>,
    pub col_cuts2: Vec<usize>,
}

impl Partition {
    fn valid_against(&self, dims: ((usize, usize), (usize, usize))) -> bool {
        let ok = |cuts: &[usize], bound: usize| {
            cuts.windows(2).all(|w| w[0] < w[1]) && cuts.iter().all(|&c| c >= 1 && c < bound)
        };
        ok(&self.row_cuts1, dims.0 .0)
            && ok(&self.col_cuts1, dims.0 .1)
            && ok(&self.row_cuts2, dims.1 .0)
            && ok(&self.col_cuts2, dims.1 .1)
    }
}

/// Block addition is compatible when both bimatrices carry the identical
/// partition and componentwise addition is defined.
pub fn block_add_compatible<T: Ring>(
    a: &BiMatrix<T>,
    pa: &Partition,
    b: &BiMatrix<T>,
    pb: &Partition,
) -> bool {
    a.dims() == b.dims() && pa == pb && pa.valid_against(a.dims()) && pb.valid_against(b.dims())
}

/// Block multiplication is compatible when the column partition of `a`
/// matches the row partition of `b` in each component (and the inner
/// dimensions agree).
pub fn block_mul_compatible<T: Ring>(
    a: &BiMatrix<T>,
    pa: &Partition,
    b: &BiMatrix<T>,
    pb: &Partition,
) -> bool {
    a.first().cols() == b.first().rows()
        && a.second().cols() == b.second().rows()
        && pa.col_cuts1 == pb.row_cuts1
        && pa.col_cuts2 == pb.row_cuts2
        && pa.valid_against(a.dims())
        && pb.valid_against(b.dims())
}
