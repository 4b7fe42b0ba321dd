//! The bimatrix text file format.
//!
//! ```text
//! bimatrix <ring>        # ring in {rational, neutrosophic, fuzzy}
//! component 1 rows=R cols=C [field=Q(I)|R(I)]
//! <R lines of C whitespace-separated scalar tokens>
//! component 2 rows=R' cols=C' [field=...]
//! <R' lines of C' tokens>
//! ```
//!
//! Blank lines and `#` comments are ignored. Formatting is canonical:
//! minimal rational form (`p/q`, never decimals) and `a+bI` with signs
//! normalized, so `format(parse(text))` is a fixpoint.

use std::fmt;

use crate::bimatrix::BiMatrix;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::{FuzzyNeutroValue, NeutrosophicScalar, Rational, Scalar};

/// Scalar ring named in a file header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RingTag {
    Rational,
    Neutrosophic,
    Fuzzy,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Rational => write!(f, "rational"),
            RingTag::Neutrosophic => write!(f, "neutrosophic"),
            RingTag::Fuzzy => write!(f, "fuzzy"),
        }
    }
}

/// A parsed bimatrix of any of the three rings, with optional per-component
/// ambient-field tags.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyBiMatrix {
    Rational(BiMatrix<Rational>),
    Neutrosophic(BiMatrix<NeutrosophicScalar>),
    Fuzzy(BiMatrix<FuzzyNeutroValue>),
}

impl AnyBiMatrix {
    pub fn ring(&self) -> RingTag {
        match self {
            AnyBiMatrix::Rational(_) => RingTag::Rational,
            AnyBiMatrix::Neutrosophic(_) => RingTag::Neutrosophic,
            AnyBiMatrix::Fuzzy(_) => RingTag::Fuzzy,
        }
    }

    /// Every ring embeds into `Q(I)`.
    pub fn to_neutrosophic(&self) -> BiMatrix<NeutrosophicScalar> {
        match self {
            AnyBiMatrix::Rational(b) => b.to_neutrosophic(),
            AnyBiMatrix::Neutrosophic(b) => b.clone(),
            AnyBiMatrix::Fuzzy(b) => b.to_neutrosophic(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedFile {
    pub bimatrix: AnyBiMatrix,
    /// `field=` attributes from the two component headers, if present.
    pub field_tags: (Option<String>, Option<String>),
}

/// Parse failure with 1-based line location.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Either a malformed file or a structurally invalid bimatrix
/// (degenerate pair, bad dims).
#[derive(Debug)]
pub enum FileError {
    Parse(ParseError),
    Invalid(Error),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Parse(e) => write!(f, "{}", e),
            FileError::Invalid(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for FileError {}

struct Lines<'a> {
    rest: std::str::Lines<'a>,
    current: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            rest: text.lines(),
            current: 0,
        }
    }

    /// Next significant line: comments stripped, blanks skipped.
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let line = self.rest.next()?;
            self.current += 1;
            let meat = match line.split_once('#') {
                Some((before, _)) => before,
                None => line,
            }
            .trim();
            if !meat.is_empty() {
                return Some((self.current, meat));
            }
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> FileError {
    FileError::Parse(ParseError {
        line,
        message: message.into(),
    })
}

struct ComponentHeader {
    rows: usize,
    cols: usize,
    field: Option<String>,
}

fn parse_component_header(
    line: usize,
    text: &str,
    index: usize,
) -> Result<ComponentHeader, FileError> {
    let mut words = text.split_whitespace();
    if words.next() != Some("component") {
        return Err(err(line, format!("expected `component {}` header", index)));
    }
    if words.next() != Some(&index.to_string()[..]) {
        return Err(err(line, format!("expected `component {}` header", index)));
    }
    let mut rows = None;
    let mut cols = None;
    let mut field = None;
    for word in words {
        if let Some(v) = word.strip_prefix("rows=") {
            rows = Some(v.parse::<usize>().map_err(|_| err(line, "bad rows="))?);
        } else if let Some(v) = word.strip_prefix("cols=") {
            cols = Some(v.parse::<usize>().map_err(|_| err(line, "bad cols="))?);
        } else if let Some(v) = word.strip_prefix("field=") {
            field = Some(v.to_string());
        } else {
            return Err(err(line, format!("unexpected attribute `{}`", word)));
        }
    }
    let rows = rows.ok_or_else(|| err(line, "missing rows="))?;
    let cols = cols.ok_or_else(|| err(line, "missing cols="))?;
    if rows == 0 || cols == 0 {
        return Err(err(line, "dims must be positive"));
    }
    Ok(ComponentHeader { rows, cols, field })
}

fn parse_component<T: Scalar>(
    lines: &mut Lines<'_>,
    index: usize,
    parse_token: &dyn Fn(&str) -> Result<T, String>,
) -> Result<(Matrix<T>, Option<String>), FileError> {
    let (hline, htext) = lines.next_line().ok_or_else(|| {
        err(
            lines.current + 1,
            format!("missing `component {}` header", index),
        )
    })?;
    let header = parse_component_header(hline, htext, index)?;
    let mut entries = Vec::with_capacity(header.rows * header.cols);
    for _ in 0..header.rows {
        let (rline, rtext) = lines
            .next_line()
            .ok_or_else(|| err(lines.current + 1, "missing matrix row"))?;
        let tokens: Vec<&str> = rtext.split_whitespace().collect();
        if tokens.len() != header.cols {
            return Err(err(
                rline,
                format!("expected {} tokens, found {}", header.cols, tokens.len()),
            ));
        }
        for t in tokens {
            entries.push(parse_token(t).map_err(|m| err(rline, m))?);
        }
    }
    Ok((Matrix::new(header.rows, header.cols, entries), header.field))
}

/// Parses a bimatrix document. The ring comes from the first header line;
/// the collapse policy is applied to the assembled pair.
pub fn parse_bimatrix(text: &str) -> Result<ParsedFile, FileError> {
    let mut lines = Lines::new(text);
    let (hline, htext) = lines
        .next_line()
        .ok_or_else(|| err(1, "empty file: missing `bimatrix <ring>` header"))?;
    let mut words = htext.split_whitespace();
    if words.next() != Some("bimatrix") {
        return Err(err(hline, "expected `bimatrix <ring>` header"));
    }
    let ring = match words.next() {
        Some("rational") => RingTag::Rational,
        Some("neutrosophic") => RingTag::Neutrosophic,
        Some("fuzzy") => RingTag::Fuzzy,
        other => {
            return Err(err(
                hline,
                format!(
                    "unknown ring `{}`: expected rational, neutrosophic or fuzzy",
                    other.unwrap_or("")
                ),
            ))
        }
    };
    if let Some(extra) = words.next() {
        return Err(err(hline, format!("unexpected `{}` after ring", extra)));
    }
    let parsed = match ring {
        RingTag::Rational => {
            let (m1, f1) = parse_component(&mut lines, 1, &Rational::parse)?;
            let (m2, f2) = parse_component(&mut lines, 2, &Rational::parse)?;
            let b = BiMatrix::new(m1, m2).map_err(FileError::Invalid)?;
            ParsedFile {
                bimatrix: AnyBiMatrix::Rational(b),
                field_tags: (f1, f2),
            }
        }
        RingTag::Neutrosophic => {
            let (m1, f1) = parse_component(&mut lines, 1, &NeutrosophicScalar::parse)?;
            let (m2, f2) = parse_component(&mut lines, 2, &NeutrosophicScalar::parse)?;
            let b = BiMatrix::new(m1, m2).map_err(FileError::Invalid)?;
            ParsedFile {
                bimatrix: AnyBiMatrix::Neutrosophic(b),
                field_tags: (f1, f2),
            }
        }
        RingTag::Fuzzy => {
            let (m1, f1) = parse_component(&mut lines, 1, &FuzzyNeutroValue::parse)?;
            let (m2, f2) = parse_component(&mut lines, 2, &FuzzyNeutroValue::parse)?;
            let b = BiMatrix::new(m1, m2).map_err(FileError::Invalid)?;
            ParsedFile {
                bimatrix: AnyBiMatrix::Fuzzy(b),
                field_tags: (f1, f2),
            }
        }
    };
    if let Some((line, _)) = lines.next_line() {
        return Err(err(line, "trailing content after component 2"));
    }
    Ok(parsed)
}

fn format_component<T: Scalar>(out: &mut String, index: usize, m: &Matrix<T>, field: Option<&str>) {
    out.push_str(&format!(
        "component {} rows={} cols={}",
        index,
        m.rows(),
        m.cols()
    ));
    if let Some(f) = field {
        out.push_str(&format!(" field={}", f));
    }
    out.push('\n');
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Canonical document for a bimatrix: `format(parse(x))` is idempotent.
pub fn format_bimatrix(parsed: &ParsedFile) -> String {
    let mut out = String::new();
    out.push_str(&format!("bimatrix {}\n", parsed.bimatrix.ring()));
    let (f1, f2) = (
        parsed.field_tags.0.as_deref(),
        parsed.field_tags.1.as_deref(),
    );
    match &parsed.bimatrix {
        AnyBiMatrix::Rational(b) => {
            format_component(&mut out, 1, b.first(), f1);
            format_component(&mut out, 2, b.second(), f2);
        }
        AnyBiMatrix::Neutrosophic(b) => {
            format_component(&mut out, 1, b.first(), f1);
            format_component(&mut out, 2, b.second(), f2);
        }
        AnyBiMatrix::Fuzzy(b) => {
            format_component(&mut out, 1, b.first(), f1);
            format_component(&mut out, 2, b.second(), f2);
        }
    }
    out
}

/// Canonical document for a plain rational bimatrix.
pub fn format_rational(b: &BiMatrix<Rational>) -> String {
    format_bimatrix(&ParsedFile {
        bimatrix: AnyBiMatrix::Rational(b.clone()),
        field_tags: (None, None),
    })
}
