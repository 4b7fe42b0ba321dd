//! Linear-bioperator analysis over exact rationals.
//!
//! Operators are represented concretely as square (or mixed-square)
//! bimatrices. Everything here is decided exactly over Q: spectra that do
//! not split surface as explicit irreducible residual factors, never as
//! approximations.

use std::fmt;

use crate::bimatrix::BiMatrix;
use crate::error::{Component, Error, Result};
use crate::matrix::{Matrix, RowOp};
use crate::poly::{BiPolynomial, Polynomial};
use crate::scalar::{Rational, Ring, Scalar};

// ---------------------------------------------------------------------------
// Row bireduction
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BireduceMode {
    /// Each component is reduced independently to canonical RREF.
    Weak,
    /// One shared operation sequence, applied identically to both components.
    Strong,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BireduceLog {
    Weak {
        first: Vec<RowOp>,
        second: Vec<RowOp>,
    },
    Strong {
        ops: Vec<RowOp>,
        /// Set when some pivot was available in the first component only.
        partial: bool,
    },
}

#[derive(Debug, Clone)]
pub struct Bireduction {
    pub result: BiMatrix<Rational>,
    pub log: BireduceLog,
}

impl BiMatrix<Rational> {
    /// Row bireduction. Weak mode reduces the components independently;
    /// strong mode applies a single op sequence to both, chosen greedily:
    /// scan columns left to right, prefer a pivot row nonzero in both
    /// components (smallest index wins), otherwise take one nonzero in the
    /// first component only and flag the reduction as partial.
    pub fn row_bireduce(&self, mode: BireduceMode) -> Result<Bireduction> {
        match mode {
            BireduceMode::Weak => {
                let e1 = self.first().rref();
                let e2 = self.second().rref();
                Ok(Bireduction {
                    result: BiMatrix::relaxed(e1.matrix, e2.matrix),
                    log: BireduceLog::Weak {
                        first: e1.ops,
                        second: e2.ops,
                    },
                })
            }
            BireduceMode::Strong => {
                if self.first().rows() != self.second().rows() {
                    return Err(Error::Shape(format!(
                        "strong bireduction needs equal row counts, got {} and {}",
                        self.first().rows(),
                        self.second().rows()
                    )));
                }
                let mut m1 = self.first().clone();
                let mut m2 = self.second().clone();
                let rows = m1.rows();
                let mut ops = Vec::new();
                let mut partial = false;
                let apply = |op: RowOp,
                             m1: &mut Matrix<Rational>,
                             m2: &mut Matrix<Rational>,
                             ops: &mut Vec<RowOp>| {
                    op.apply(m1);
                    op.apply(m2);
                    ops.push(op);
                };
                let mut pivot_row = 0;
                for col in 0..m1.cols() {
                    if pivot_row == rows {
                        break;
                    }
                    let both = (pivot_row..rows).find(|&r| {
                        !m1.get(r, col).is_zero() && col < m2.cols() && !m2.get(r, col).is_zero()
                    });
                    let row = match both {
                        Some(r) => r,
                        None => match (pivot_row..rows).find(|&r| !m1.get(r, col).is_zero()) {
                            Some(r) => {
                                partial = true;
                                r
                            }
                            None => continue,
                        },
                    };
                    if row != pivot_row {
                        apply(RowOp::Swap(pivot_row, row), &mut m1, &mut m2, &mut ops);
                    }
                    let pivot = m1.get(pivot_row, col).clone();
                    if pivot != Rational::one() {
                        apply(
                            RowOp::Scale(pivot_row, pivot.recip().unwrap()),
                            &mut m1,
                            &mut m2,
                            &mut ops,
                        );
                    }
                    for other in 0..rows {
                        if other == pivot_row || m1.get(other, col).is_zero() {
                            continue;
                        }
                        apply(
                            RowOp::AddMul {
                                dst: other,
                                src: pivot_row,
                                factor: -m1.get(other, col),
                            },
                            &mut m1,
                            &mut m2,
                            &mut ops,
                        );
                    }
                    pivot_row += 1;
                }
                Ok(Bireduction {
                    result: BiMatrix::relaxed(m1, m2),
                    log: BireduceLog::Strong { ops, partial },
                })
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Linear biequations
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    pub particular: Vec<Rational>,
    /// Canonical nullspace basis (first nonzero entry positive).
    pub nullspace: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSolution {
    pub first: ComponentSolution,
    pub second: ComponentSolution,
    pub homogeneous: bool,
    pub semi_homogeneous: bool,
}

impl BiMatrix<Rational> {
    /// Solves `A1 x = y1` and `A2 x = y2` by exact elimination. The first
    /// inconsistent component (in order) is reported as the error.
    pub fn solve_biequation(&self, y1: &[Rational], y2: &[Rational]) -> Result<BiSolution> {
        let solve_one = |m: &Matrix<Rational>, y: &[Rational], which: Component| {
            if y.len() != m.rows() {
                return Err(Error::DimMismatch {
                    op: "solve_biequation",
                    left: m.dims(),
                    right: (y.len(), 1),
                });
            }
            let particular = m.solve(y)?.ok_or(Error::Inconsistent(which))?;
            Ok(ComponentSolution {
                particular,
                nullspace: m.nullspace(),
            })
        };
        let first = solve_one(self.first(), y1, Component::First)?;
        let second = solve_one(self.second(), y2, Component::Second)?;
        let z1 = y1.iter().all(|v| v.is_zero());
        let z2 = y2.iter().all(|v| v.is_zero());
        Ok(BiSolution {
            first,
            second,
            homogeneous: z1 && z2,
            semi_homogeneous: z1 != z2,
        })
    }
}

// ---------------------------------------------------------------------------
// Characteristic and minimal bipolynomials
// ---------------------------------------------------------------------------

/// Characteristic polynomial `det(xI - A)` by the Faddeev-LeVerrier
/// recurrence; exact over Q and monic by construction.
pub fn char_polynomial(a: &Matrix<Rational>) -> Result<Polynomial> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "characteristic polynomial of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m: Matrix<Rational> = Matrix::zero(n, n);
    for k in 1..=n {
        // M_k = A * M_{k-1} + c_{n-k+1} I
        m = a.mul(&m)?;
        let c = coeffs[n - k + 1].clone();
        for i in 0..n {
            m.set(i, i, m.get(i, i) + &c);
        }
        let am = a.mul(&m)?;
        coeffs[n - k] = -(am.trace() / Rational::from_int(k as i64));
    }
    Ok(Polynomial::new(coeffs))
}

/// Least-degree monic annihilating polynomial, found by the first linear
/// dependence among `I, A, A^2, ...` (flattened); works whether or not the
/// characteristic polynomial splits.
pub fn minimal_polynomial(a: &Matrix<Rational>) -> Result<Polynomial> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "minimal polynomial of a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let flat = |m: &Matrix<Rational>| -> Vec<Rational> {
        let mut v = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                v.push(m.get(r, c).clone());
            }
        }
        v
    };
    let mut powers = vec![Matrix::identity(n)];
    for k in 1..=n {
        powers.push(powers[k - 1].mul(a)?);
        // Try to express A^k over the earlier powers.
        let cols: Vec<Vec<Rational>> = powers[..k].iter().map(&flat).collect();
        let rhs = flat(&powers[k]);
        let system = Matrix::from_fn(n * n, k, |r, c| cols[c][r].clone());
        if let Some(sol) = system.solve(&rhs)? {
            let mut coeffs: Vec<Rational> = sol.into_iter().map(|c| -c).collect();
            coeffs.push(Rational::one());
            return Ok(Polynomial::new(coeffs));
        }
    }
    unreachable!("Cayley-Hamilton guarantees dependence by degree n");
}

impl BiMatrix<Rational> {
    /// The monic pair `(det(xI - A1), det(xI - A2))`.
    pub fn char_bipolynomial(&self) -> Result<BiPolynomial> {
        Ok(BiPolynomial::new(
            char_polynomial(self.first())?,
            char_polynomial(self.second())?,
        ))
    }

    /// The pair of monic least-degree annihilating polynomials.
    pub fn biminimal_polynomial(&self) -> Result<BiPolynomial> {
        Ok(BiPolynomial::new(
            minimal_polynomial(self.first())?,
            minimal_polynomial(self.second())?,
        ))
    }
}

// ---------------------------------------------------------------------------
// Bieigen analysis
// ---------------------------------------------------------------------------

/// One rational eigenvalue with its multiplicities and eigenspace basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenPair {
    pub root: Rational,
    pub algebraic: usize,
    pub geometric: usize,
    pub eigenspace: Vec<Vec<Rational>>,
}

/// Spectrum of one component over Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpectrum {
    /// Rational roots in ascending order.
    pub pairs: Vec<EigenPair>,
    /// Monic factor with no rational roots; 1 exactly when the
    /// characteristic polynomial splits over Q.
    pub residual: Polynomial,
    pub splits: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SpectralClass {
    /// Both characteristic polynomials split into linear factors over Q.
    Full,
    /// Exactly one does.
    Semi(Component),
    /// Neither does.
    None,
}

impl fmt::Display for SpectralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralClass::Full => write!(f, "Full"),
            SpectralClass::Semi(c) => write!(f, "Semi:{}", c),
            SpectralClass::None => write!(f, "None"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiEigenReport {
    pub first: ComponentSpectrum,
    pub second: ComponentSpectrum,
    pub classification: SpectralClass,
}

fn component_spectrum(a: &Matrix<Rational>) -> Result<ComponentSpectrum> {
    let char_poly = char_polynomial(a)?;
    let (roots, residual) = char_poly.rational_roots();
    let n = a.rows();
    let mut pairs = Vec::with_capacity(roots.len());
    for (root, algebraic) in roots {
        let mut shifted = a.clone();
        for i in 0..n {
            shifted.set(i, i, shifted.get(i, i) - &root);
        }
        let eigenspace = shifted.nullspace();
        pairs.push(EigenPair {
            geometric: eigenspace.len(),
            root,
            algebraic,
            eigenspace,
        });
    }
    let splits = residual.degree() == 0;
    Ok(ComponentSpectrum {
        pairs,
        residual,
        splits,
    })
}

impl BiMatrix<Rational> {
    /// Rational spectra of both components with eigenspace bases, the
    /// unfactored residual, and the Full/Semi/None classification.
    pub fn bieigen(&self) -> Result<BiEigenReport> {
        let first = component_spectrum(self.first())?;
        let second = component_spectrum(self.second())?;
        let classification = match (first.splits, second.splits) {
            (true, true) => SpectralClass::Full,
            (true, false) => SpectralClass::Semi(Component::First),
            (false, true) => SpectralClass::Semi(Component::Second),
            (false, false) => SpectralClass::None,
        };
        Ok(BiEigenReport {
            first,
            second,
            classification,
        })
    }
}

// ---------------------------------------------------------------------------
// Bidiagonalizability and biprojections
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagWitness {
    /// Column eigenbases, one per component, when diagonalizable.
    Eigenbases {
        first: Matrix<Rational>,
        second: Matrix<Rational>,
    },
    /// The named component's characteristic polynomial does not split.
    NonSplitting {
        component: Component,
        residual: Polynomial,
    },
    /// The named root is defective in the named component.
    Defective {
        component: Component,
        root: Rational,
        algebraic: usize,
        geometric: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagCheck {
    pub diagonalizable: bool,
    pub witness: DiagWitness,
}

fn eigenbasis(spectrum: &ComponentSpectrum, n: usize) -> Matrix<Rational> {
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for pair in &spectrum.pairs {
        for v in &pair.eigenspace {
            cols.push(v.clone());
        }
    }
    Matrix::from_fn(n, cols.len(), |r, c| cols[c][r].clone())
}

impl BiMatrix<Rational> {
    /// True iff, per component, the characteristic polynomial splits over Q
    /// and every root has equal geometric and algebraic multiplicity. The
    /// witness is the eigenbasis pair on success, the failing component and
    /// reason otherwise.
    pub fn is_bidiagonalizable(&self) -> Result<DiagCheck> {
        let report = self.bieigen()?;
        for (which, spectrum) in [
            (Component::First, &report.first),
            (Component::Second, &report.second),
        ] {
            if !spectrum.splits {
                return Ok(DiagCheck {
                    diagonalizable: false,
                    witness: DiagWitness::NonSplitting {
                        component: which,
                        residual: spectrum.residual.clone(),
                    },
                });
            }
            if let Some(pair) = spectrum.pairs.iter().find(|p| p.geometric != p.algebraic) {
                return Ok(DiagCheck {
                    diagonalizable: false,
                    witness: DiagWitness::Defective {
                        component: which,
                        root: pair.root.clone(),
                        algebraic: pair.algebraic,
                        geometric: pair.geometric,
                    },
                });
            }
        }
        Ok(DiagCheck {
            diagonalizable: true,
            witness: DiagWitness::Eigenbases {
                first: eigenbasis(&report.first, self.first().rows()),
                second: eigenbasis(&report.second, self.second().rows()),
            },
        })
    }
}

/// One spectral projection `E_i` with its eigenvalue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralProjection {
    pub eigenvalue: Rational,
    pub matrix: Matrix<Rational>,
}

/// Spectral resolutions per component: `E_i^2 = E_i`, `E_i E_j = 0`,
/// `sum E_i = I`, `sum c_i E_i = A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiProjectionSet {
    pub first: Vec<SpectralProjection>,
    pub second: Vec<SpectralProjection>,
}

fn component_projections(
    a: &Matrix<Rational>,
    spectrum: &ComponentSpectrum,
) -> Vec<SpectralProjection> {
    let roots: Vec<Rational> = spectrum.pairs.iter().map(|p| p.root.clone()).collect();
    let mut out = Vec::with_capacity(roots.len());
    for (i, c_i) in roots.iter().enumerate() {
        // Lagrange interpolation polynomial with f_i(c_j) = delta_ij.
        let mut f = Polynomial::one();
        for (j, c_j) in roots.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = c_i - c_j;
            let factor = Polynomial::new(vec![-(c_j / &denom), Rational::one() / denom.clone()]);
            f = f.mul(&factor);
        }
        out.push(SpectralProjection {
            eigenvalue: c_i.clone(),
            matrix: f.eval_matrix(a),
        });
    }
    out
}

impl BiMatrix<Rational> {
    /// Spectral decomposition into biprojections, per component. Requires
    /// bidiagonalizability.
    pub fn biprojections(&self) -> Result<BiProjectionSet> {
        let check = self.is_bidiagonalizable()?;
        if !check.diagonalizable {
            let reason = match &check.witness {
                DiagWitness::NonSplitting {
                    component,
                    residual,
                } => {
                    format!(
                        "{} component has irreducible residual {}",
                        component, residual
                    )
                }
                DiagWitness::Defective {
                    component,
                    root,
                    algebraic,
                    geometric,
                } => format!(
                    "{} component root {} has geometric multiplicity {} < algebraic {}",
                    component, root, geometric, algebraic
                ),
                DiagWitness::Eigenbases { .. } => unreachable!(),
            };
            return Err(Error::NotDiagonalizable(reason));
        }
        let report = self.bieigen()?;
        Ok(BiProjectionSet {
            first: component_projections(self.first(), &report.first),
            second: component_projections(self.second(), &report.second),
        })
    }

    /// Per component, true iff the minimal polynomial is a product of linear
    /// factors over Q; no triangularizing basis is constructed.
    pub fn is_bitriangularizable(&self) -> Result<(bool, bool, bool)> {
        let p = self.biminimal_polynomial()?;
        let f = p.first.splits_over_q();
        let s = p.second.splits_over_q();
        Ok((f, s, f && s))
    }

    /// True iff `A_i^order = 0` for both components.
    pub fn is_binilpotent(&self) -> Result<bool> {
        for m in [self.first(), self.second()] {
            if !m.is_square() {
                return Err(Error::Shape(format!(
                    "binilpotence of a {}x{} component",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(self.first().pow(self.first().rows())?.is_zero()
            && self.second().pow(self.second().rows())?.is_zero())
    }
}

// ---------------------------------------------------------------------------
// Similarity witnesses
// ---------------------------------------------------------------------------

fn conjugate(a: &Matrix<Rational>, p: &Matrix<Rational>) -> Result<Option<Matrix<Rational>>> {
    match p.inverse()? {
        Some(p_inv) => Ok(Some(p_inv.mul(a)?.mul(p)?)),
        None => Ok(None),
    }
}

fn check_witness_dims(
    a: &BiMatrix<Rational>,
    b: &BiMatrix<Rational>,
    p: &BiMatrix<Rational>,
) -> Result<()> {
    for (x, y, z) in [
        (a.first(), b.first(), p.first()),
        (a.second(), b.second(), p.second()),
    ] {
        if !x.is_square() || !y.is_square() || !z.is_square() {
            return Err(Error::Shape(
                "similarity check needs square components".into(),
            ));
        }
        if x.dims() != y.dims() || x.dims() != z.dims() {
            return Err(Error::Shape(format!(
                "similarity check needs matching orders, got {}x{}, {}x{}, {}x{}",
                x.rows(),
                x.cols(),
                y.rows(),
                y.cols(),
                z.rows(),
                z.cols()
            )));
        }
    }
    Ok(())
}

impl BiMatrix<Rational> {
    /// True iff `b = p^-1 a p` componentwise; `p` must invert in both
    /// components.
    pub fn check_similarity_witness(
        &self,
        b: &BiMatrix<Rational>,
        p: &BiMatrix<Rational>,
    ) -> Result<bool> {
        check_witness_dims(self, b, p)?;
        let c1 =
            conjugate(self.first(), p.first())?.ok_or(Error::SingularWitness(Component::First))?;
        let c2 = conjugate(self.second(), p.second())?
            .ok_or(Error::SingularWitness(Component::Second))?;
        Ok(c1 == *b.first() && c2 == *b.second())
    }

    /// Semi-similarity: each invertible component of `p` is checked by
    /// conjugation; a singular component instead requires `b_i = a_i`.
    /// At least one component of `p` must invert.
    pub fn check_semi_similarity_witness(
        &self,
        b: &BiMatrix<Rational>,
        p: &BiMatrix<Rational>,
    ) -> Result<bool> {
        check_witness_dims(self, b, p)?;
        let c1 = conjugate(self.first(), p.first())?;
        let c2 = conjugate(self.second(), p.second())?;
        if c1.is_none() && c2.is_none() {
            return Err(Error::SingularWitness(Component::First));
        }
        let ok1 = match c1 {
            Some(m) => m == *b.first(),
            None => b.first() == self.first(),
        };
        let ok2 = match c2 {
            Some(m) => m == *b.second(),
            None => b.second() == self.second(),
        };
        Ok(ok1 && ok2)
    }
}
