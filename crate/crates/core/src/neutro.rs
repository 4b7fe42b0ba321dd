//! Neutrosophic and fuzzy bimatrix layer.
//!
//! Classification of bimatrices whose entries involve the indeterminacy `I`,
//! neutrosophic matrix arithmetic in the ring `Q(I)`, and the I-aware fuzzy
//! max-min composition. Determinant and spectral theory are deliberately not
//! lifted to `Q(I)`: the ring has zero divisors (`I(1-I) = 0`), so the
//! inverse/determinant machinery of the rational layer does not transfer.

use std::fmt;

use crate::bimatrix::{BiMatrix, ShapeClass};
use crate::error::{Component, Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FuzzyNeutroValue, NeutrosophicScalar, Rational, Ring, Scalar};

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum NeutroKind {
    /// Both components contain an entry with nonzero indeterminate part.
    Neutrosophic,
    /// Exactly one does.
    SemiNeutrosophic(Component),
    /// Neither does.
    Ordinary,
}

impl fmt::Display for NeutroKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NeutroKind::Neutrosophic => write!(f, "Neutrosophic"),
            NeutroKind::SemiNeutrosophic(c) => write!(f, "SemiNeutrosophic({})", c),
            NeutroKind::Ordinary => write!(f, "Ordinary"),
        }
    }
}

/// Relation between the ambient neutrosophic fields of the two components,
/// supplied as metadata (entries alone cannot distinguish `Q(I)` from
/// `R(I)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FieldScope {
    /// Same field for both components.
    Plain,
    /// Distinct fields, neither inside the other.
    Strong,
    /// One component's field is a proper subfield of the other's.
    Weak,
}

impl fmt::Display for FieldScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScope::Plain => write!(f, "Plain"),
            FieldScope::Strong => write!(f, "Strong"),
            FieldScope::Weak => write!(f, "Weak"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutroClass {
    pub kind: NeutroKind,
    pub shape: ShapeClass,
    pub field_scope: FieldScope,
}

/// Decides the scope of two field tags. The only subfield relation the token
/// grammar can express is `Q(I)` inside `R(I)`.
pub fn field_scope(tags: Option<(&str, &str)>) -> FieldScope {
    match tags {
        None => FieldScope::Plain,
        Some((a, b)) if a == b => FieldScope::Plain,
        Some(("Q(I)", "R(I)")) | Some(("R(I)", "Q(I)")) => FieldScope::Weak,
        Some(_) => FieldScope::Strong,
    }
}

/// Classifies a bimatrix over `Q(I)` by where indeterminacy occurs, its
/// shape, and the ambient-field scope from the optional tags.
pub fn classify_neutro(
    b: &BiMatrix<NeutrosophicScalar>,
    field_tags: Option<(&str, &str)>,
) -> NeutroClass {
    let has1 = b.first().iter().any(|e| e.has_indeterminacy());
    let has2 = b.second().iter().any(|e| e.has_indeterminacy());
    let kind = match (has1, has2) {
        (true, true) => NeutroKind::Neutrosophic,
        (true, false) => NeutroKind::SemiNeutrosophic(Component::First),
        (false, true) => NeutroKind::SemiNeutrosophic(Component::Second),
        (false, false) => NeutroKind::Ordinary,
    };
    NeutroClass {
        kind,
        shape: b.classify_shape(),
        field_scope: field_scope(field_tags),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FuzzyKind {
    /// All entries of both components are reals in `[0, 1]`.
    Fuzzy,
    /// Exactly one component qualifies.
    SemiFuzzy(Component),
    NotFuzzy,
}

impl fmt::Display for FuzzyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyKind::Fuzzy => write!(f, "Fuzzy"),
            FuzzyKind::SemiFuzzy(c) => write!(f, "SemiFuzzy({})", c),
            FuzzyKind::NotFuzzy => write!(f, "NotFuzzy"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyClass {
    pub kind: FuzzyKind,
    pub shape: ShapeClass,
    /// Per component: entries in `[0,1] ∪ {I}` (pure indeterminacy only).
    pub integral_neutro: (bool, bool),
    /// Per component: entries in `N_s = [0,1] ∪ {tI | t ∈ (0,1]}`.
    pub fuzzy_neutro: (bool, bool),
}

fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= Rational::one()
}

fn entry_fuzzy(e: &NeutrosophicScalar) -> bool {
    e.indeterminate_part().is_zero() && in_unit_interval(e.real_part())
}

fn entry_integral_neutro(e: &NeutrosophicScalar) -> bool {
    entry_fuzzy(e) || (e.real_part().is_zero() && *e.indeterminate_part() == Rational::one())
}

fn entry_fuzzy_neutro(e: &NeutrosophicScalar) -> bool {
    entry_fuzzy(e)
        || (e.real_part().is_zero()
            && e.indeterminate_part() > &Rational::zero()
            && in_unit_interval(e.indeterminate_part()))
}

/// Classifies a bimatrix viewed in `Q(I)` against the fuzzy carriers.
pub fn classify_fuzzy(b: &BiMatrix<NeutrosophicScalar>) -> FuzzyClass {
    let all =
        |m: &Matrix<NeutrosophicScalar>, pred: fn(&NeutrosophicScalar) -> bool| m.iter().all(pred);
    let f1 = all(b.first(), entry_fuzzy);
    let f2 = all(b.second(), entry_fuzzy);
    let kind = match (f1, f2) {
        (true, true) => FuzzyKind::Fuzzy,
        (true, false) => FuzzyKind::SemiFuzzy(Component::First),
        (false, true) => FuzzyKind::SemiFuzzy(Component::Second),
        (false, false) => FuzzyKind::NotFuzzy,
    };
    FuzzyClass {
        kind,
        shape: b.classify_shape(),
        integral_neutro: (
            all(b.first(), entry_integral_neutro),
            all(b.second(), entry_integral_neutro),
        ),
        fuzzy_neutro: (
            all(b.first(), entry_fuzzy_neutro),
            all(b.second(), entry_fuzzy_neutro),
        ),
    }
}

// ---------------------------------------------------------------------------
// Matrix-level products
// ---------------------------------------------------------------------------

/// Ordinary matrix product evaluated in `Q(I)` with `I^2 = I`.
pub fn neutro_matmul(
    a: &Matrix<NeutrosophicScalar>,
    b: &Matrix<NeutrosophicScalar>,
) -> Result<Matrix<NeutrosophicScalar>> {
    a.mul(b)
}

/// Max-min composition `r_ij = max_k min(p_ik, q_kj)` with the indeterminacy
/// absorption rules of the scalar lattice.
pub fn fuzzy_maxmin_compose(
    p: &Matrix<FuzzyNeutroValue>,
    q: &Matrix<FuzzyNeutroValue>,
) -> Result<Matrix<FuzzyNeutroValue>> {
    if p.cols() != q.rows() {
        return Err(Error::DimMismatch {
            op: "fuzzy_maxmin_compose",
            left: p.dims(),
            right: q.dims(),
        });
    }
    Ok(Matrix::from_fn(p.rows(), q.cols(), |r, c| {
        let mut acc = p.get(r, 0).min(q.get(0, c));
        for k in 1..p.cols() {
            acc = acc.max(&p.get(r, k).min(q.get(k, c)));
        }
        acc
    }))
}

// ---------------------------------------------------------------------------
// Bimatrix lifts
// ---------------------------------------------------------------------------

/// Componentwise neutrosophic product with the core collapse policy.
pub fn bimatrix_neutro_mul(
    a: &BiMatrix<NeutrosophicScalar>,
    b: &BiMatrix<NeutrosophicScalar>,
) -> Result<BiMatrix<NeutrosophicScalar>> {
    a.mul(b)
}

/// Componentwise max-min composition with the core collapse policy.
pub fn bimatrix_fuzzy_compose(
    a: &BiMatrix<FuzzyNeutroValue>,
    b: &BiMatrix<FuzzyNeutroValue>,
) -> Result<BiMatrix<FuzzyNeutroValue>> {
    let first = fuzzy_maxmin_compose(a.first(), b.first())?;
    let second = fuzzy_maxmin_compose(a.second(), b.second())?;
    BiMatrix::new(first, second)
}

impl BiMatrix<FuzzyNeutroValue> {
    /// The ring view of a fuzzy bimatrix.
    pub fn to_neutrosophic(&self) -> BiMatrix<NeutrosophicScalar> {
        BiMatrix::relaxed(
            self.first().map(|e| e.to_neutrosophic()),
            self.second().map(|e| e.to_neutrosophic()),
        )
    }
}

impl BiMatrix<Rational> {
    /// Embeds a rational bimatrix into `Q(I)` with zero indeterminate parts.
    pub fn to_neutrosophic(&self) -> BiMatrix<NeutrosophicScalar> {
        BiMatrix::relaxed(
            self.first()
                .map(|e| NeutrosophicScalar::from_real(e.clone())),
            self.second()
                .map(|e| NeutrosophicScalar::from_real(e.clone())),
        )
    }
}
