//! Determinant machinery for square and mixed-square bimatrices.
//!
//! The bideterminant of a square bimatrix is the ordered pair
//! `(det A1, det A2)`. On top of it sit bicofactors, biminors, the biLaplace
//! expansion by an arbitrary row set, the product theorems (including the
//! Cauchy-Binet shaped rectangular-product expansion), the biinverse, and the
//! singularity taxonomy.

use std::fmt;

use crate::bimatrix::{check_index_set, BiMatrix};
use crate::error::{Component, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};

/// The ordered pair `(det A1, det A2)`.
#[derive(Clone, PartialEq, Eq, serde::Serialize)]
pub struct BiDeterminant {
    pub first: Rational,
    pub second: Rational,
}

impl BiDeterminant {
    pub fn new(first: Rational, second: Rational) -> BiDeterminant {
        BiDeterminant { first, second }
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    pub fn componentwise_mul(&self, rhs: &BiDeterminant) -> BiDeterminant {
        BiDeterminant::new(&self.first * &rhs.first, &self.second * &rhs.second)
    }

    pub fn componentwise_add(&self, rhs: &BiDeterminant) -> BiDeterminant {
        BiDeterminant::new(&self.first + &rhs.first, &self.second + &rhs.second)
    }
}

impl fmt::Display for BiDeterminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl fmt::Debug for BiDeterminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Singularity taxonomy: non bisingular (both determinants nonzero),
/// semi bisingular (exactly one zero), bisingular (both zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SingularityClass {
    NonBisingular,
    SemiBisingular { singular: Component },
    Bisingular,
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityClass::NonBisingular => write!(f, "NonBisingular"),
            SingularityClass::SemiBisingular { singular } => {
                write!(f, "SemiBisingular({})", singular)
            }
            SingularityClass::Bisingular => write!(f, "Bisingular"),
        }
    }
}

/// One term of a biLaplace expansion: the biminor from the chosen columns,
/// its signed complementary bicofactor, and their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplaceTerm {
    /// 1-based column choice, increasing.
    pub cols: Vec<usize>,
    pub sign: i8,
    /// `|N_B|`: bideterminant of the selected rows x columns.
    pub minor: BiDeterminant,
    /// `|M_B|`: the complementary bicofactor, sign included.
    pub complement: BiDeterminant,
    /// `|N_B| * |M_B|` componentwise.
    pub term: BiDeterminant,
}

/// A full biLaplace expansion by one shared row set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplaceTermSet {
    /// 1-based row choice, increasing.
    pub row_set: Vec<usize>,
    pub terms: Vec<LaplaceTerm>,
    pub total: BiDeterminant,
}

/// One term of the rectangular-product expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectProductTerm {
    /// 1-based column choice in `a` (equals the row choice in `b`).
    pub cols: Vec<usize>,
    pub a_minor: BiDeterminant,
    pub b_minor: BiDeterminant,
    pub term: BiDeterminant,
}

fn require_square(m: &Matrix<Rational>, which: &str) -> Result<()> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "{} component is {}x{}, not square",
            which,
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// All k-subsets of `{1, ..., n}` in lexicographic order (1-based).
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n, k, &mut current, &mut out);
    out
}

impl BiMatrix<Rational> {
    /// `(det A1, det A2)`, exactly. Components may have different orders.
    pub fn bideterminant(&self) -> Result<BiDeterminant> {
        require_square(self.first(), "first")?;
        require_square(self.second(), "second")?;
        Ok(BiDeterminant::new(
            self.first().det()?,
            self.second().det()?,
        ))
    }

    /// `(-1)^(i+j)` times the bideterminant of the (i, j)-deleted pair.
    /// Both components must be square of the same order; indices are 1-based.
    pub fn bicofactor(&self, i: usize, j: usize) -> Result<BiDeterminant> {
        require_square(self.first(), "first")?;
        require_square(self.second(), "second")?;
        let n = self.first().rows();
        if self.second().rows() != n {
            return Err(Error::Shape(
                "bicofactor at a shared (i, j) requires uniform order".into(),
            ));
        }
        if n < 2 {
            return Err(Error::Shape("bicofactor needs order at least 2".into()));
        }
        if i < 1 || i > n || j < 1 || j > n {
            return Err(Error::IndexOutOfRange(format!(
                "({}, {}) in order {}",
                i, j, n
            )));
        }
        let sign = if (i + j).is_multiple_of(2) {
            Rational::one()
        } else {
            Rational::from_int(-1)
        };
        let d1 = self.first().minor_matrix(i - 1, j - 1).det()?;
        let d2 = self.second().minor_matrix(i - 1, j - 1).det()?;
        Ok(BiDeterminant::new(&sign * &d1, &sign * &d2))
    }

    /// Bideterminant of the k x k selection given by one shared pair of
    /// 1-based index sets, valid in both components.
    pub fn biminor(&self, rows: &[usize], cols: &[usize]) -> Result<BiDeterminant> {
        if rows.len() != cols.len() {
            return Err(Error::Shape(format!(
                "biminor needs |rows| = |cols|, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        let r1 = check_index_set(rows, self.first().rows(), "rows")?;
        let c1 = check_index_set(cols, self.first().cols(), "cols")?;
        let r2 = check_index_set(rows, self.second().rows(), "rows")?;
        let c2 = check_index_set(cols, self.second().cols(), "cols")?;
        Ok(BiDeterminant::new(
            self.first().submatrix(&r1, &c1).det()?,
            self.second().submatrix(&r2, &c2).det()?,
        ))
    }

    /// BiLaplace expansion by one shared row set: every column choice pairs
    /// the biminor `|N_B|` with its complementary bicofactor `|M_B|`; the
    /// signed products sum to the bideterminant.
    pub fn bilaplace_expand(&self, row_set: &[usize]) -> Result<LaplaceTermSet> {
        require_square(self.first(), "first")?;
        require_square(self.second(), "second")?;
        let n = self.first().rows();
        if self.second().rows() != n {
            return Err(Error::Shape(
                "biLaplace expansion requires uniform order; mixed-square bideterminants expand per component".into(),
            ));
        }
        let m = row_set.len();
        if m == 0 || m >= n {
            return Err(Error::IndexOutOfRange(format!(
                "row set size {} must satisfy 1 <= m < {}",
                m, n
            )));
        }
        let rows0 = check_index_set(row_set, n, "row_set")?;
        let comp_rows: Vec<usize> = (0..n).filter(|r| !rows0.contains(r)).collect();
        let row_sum: usize = row_set.iter().sum();
        let mut terms = Vec::new();
        let mut total = BiDeterminant::new(Rational::zero(), Rational::zero());
        for cols in combinations(n, m) {
            let cols0: Vec<usize> = cols.iter().map(|&c| c - 1).collect();
            let comp_cols: Vec<usize> = (0..n).filter(|c| !cols0.contains(c)).collect();
            let minor = BiDeterminant::new(
                self.first().submatrix(&rows0, &cols0).det()?,
                self.second().submatrix(&rows0, &cols0).det()?,
            );
            let complement_minor = BiDeterminant::new(
                self.first().submatrix(&comp_rows, &comp_cols).det()?,
                self.second().submatrix(&comp_rows, &comp_cols).det()?,
            );
            let col_sum: usize = cols.iter().sum();
            let sign: i8 = if (row_sum + col_sum).is_multiple_of(2) { 1 } else { -1 };
            let sign_r = Rational::from_int(sign as i64);
            let complement = BiDeterminant::new(
                &sign_r * &complement_minor.first,
                &sign_r * &complement_minor.second,
            );
            let term = minor.componentwise_mul(&complement);
            total = total.componentwise_add(&term);
            terms.push(LaplaceTerm {
                cols,
                sign,
                minor,
                complement,
                term,
            });
        }
        Ok(LaplaceTermSet {
            row_set: row_set.to_vec(),
            terms,
            total,
        })
    }

    /// Classification by the zero pattern of the bideterminant.
    pub fn singularity_class(&self) -> Result<SingularityClass> {
        let d = self.bideterminant()?;
        Ok(match (d.first.is_zero(), d.second.is_zero()) {
            (false, false) => SingularityClass::NonBisingular,
            (true, true) => SingularityClass::Bisingular,
            (true, false) => SingularityClass::SemiBisingular {
                singular: Component::First,
            },
            (false, true) => SingularityClass::SemiBisingular {
                singular: Component::Second,
            },
        })
    }

    /// `A1^-1 ∪ A2^-1`, exactly. A semi bisingular bimatrix reports which
    /// component is singular (the other one still inverts).
    pub fn biinverse(&self) -> Result<BiMatrix<Rational>> {
        require_square(self.first(), "first")?;
        require_square(self.second(), "second")?;
        let inv1 = self.first().inverse()?;
        let inv2 = self.second().inverse()?;
        match (inv1, inv2) {
            (Some(a), Some(b)) => Ok(BiMatrix::relaxed(a, b)),
            (None, None) => Err(Error::Bisingular),
            (None, Some(_)) => Err(Error::SemiBisingular {
                singular: Component::First,
            }),
            (Some(_), None) => Err(Error::SemiBisingular {
                singular: Component::Second,
            }),
        }
    }

    /// Cauchy-Binet shaped expansion of `|a * b|` for `a` with m x n
    /// components and `b` with n x m components, `m <= n`: each m-column
    /// choice of `a` pairs with the matching m-row choice of `b`, and the
    /// term products sum to the product bideterminant.
    pub fn rectangular_product_bidet(
        &self,
        rhs: &BiMatrix<Rational>,
    ) -> Result<(BiDeterminant, Vec<RectProductTerm>)> {
        let (m, n) = self.first().dims();
        if self.second().dims() != (m, n) {
            return Err(Error::Shape(
                "rectangular product expansion needs uniform components in the left factor".into(),
            ));
        }
        if rhs.first().dims() != (n, m) || rhs.second().dims() != (n, m) {
            return Err(Error::Shape(format!(
                "right factor must be {}x{} in both components",
                n, m
            )));
        }
        if m > n {
            return Err(Error::Shape(format!(
                "left factor is {}x{}; the expansion needs m <= n",
                m, n
            )));
        }
        let all_rows: Vec<usize> = (0..m).collect();
        let all_cols: Vec<usize> = (0..m).collect();
        let mut terms = Vec::new();
        let mut total = BiDeterminant::new(Rational::zero(), Rational::zero());
        for cols in combinations(n, m) {
            let sel: Vec<usize> = cols.iter().map(|&c| c - 1).collect();
            let a_minor = BiDeterminant::new(
                self.first().submatrix(&all_rows, &sel).det()?,
                self.second().submatrix(&all_rows, &sel).det()?,
            );
            let b_minor = BiDeterminant::new(
                rhs.first().submatrix(&sel, &all_cols).det()?,
                rhs.second().submatrix(&sel, &all_cols).det()?,
            );
            let term = a_minor.componentwise_mul(&b_minor);
            total = total.componentwise_add(&term);
            terms.push(RectProductTerm {
                cols,
                a_minor,
                b_minor,
                term,
            });
        }
        Ok((total, terms))
    }
}
