//! Command-line workbench for exact bimatrix algebra.
//!
//! Every subcommand maps to one library operation, reads bimatrix text
//! files, and emits a canonical report (text by default, `--json` for the
//! mirrored machine-readable form). Exit codes are stable:
//!
//! * 0 success
//! * 1 parse or I/O failure
//! * 2 dimension, shape, or index error
//! * 3 degenerate collapse
//! * 4 domain errors (singular, inconsistent, not diagonalizable, bad ring)

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bimat_core::bimatrix::BiMatrix;
use bimat_core::error::Error;
use bimat_core::format::{parse_bimatrix, AnyBiMatrix, FileError, ParsedFile};
use bimat_core::neutro::{
    bimatrix_fuzzy_compose, bimatrix_neutro_mul, classify_fuzzy, classify_neutro,
};
use bimat_core::operator::BireduceMode;
use bimat_core::scalar::{NeutrosophicScalar, Rational};

#[derive(Parser)]
#[command(name = "bimat", version, about = "Exact bimatrix algebra workbench")]
struct Cli {
    /// Emit the machine-readable mirror of the report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shape classification of a bimatrix.
    Classify { file: PathBuf },
    /// Componentwise sum.
    Add { left: PathBuf, right: PathBuf },
    /// Componentwise product.
    Mul { left: PathBuf, right: PathBuf },
    /// Scale both components by a scalar token.
    Scalarmul {
        file: PathBuf,
        #[arg(long)]
        scalar: String,
    },
    /// Componentwise transpose.
    Transpose { file: PathBuf },
    /// Symmetric + skew symmetric decomposition.
    Symskew { file: PathBuf },
    /// Subbimatrix selection by 1-based index sets.
    Sub {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        rows1: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        cols1: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        rows2: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        cols2: Vec<usize>,
    },
    /// Rows and columns shared by both components.
    Overlap { file: PathBuf },
    /// Bideterminant pair.
    Det { file: PathBuf },
    /// Signed bicofactor at a 1-based position.
    Cofactor {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        at: Vec<usize>,
    },
    /// BiLaplace expansion by a shared row set.
    Laplace {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
    },
    /// Biinverse pair.
    Inverse { file: PathBuf },
    /// Singularity classification.
    Singularity { file: PathBuf },
    /// Rectangular-product bideterminant expansion.
    Rectdet { left: PathBuf, right: PathBuf },
    /// Row bireduction to reduced echelon form.
    Rref {
        file: PathBuf,
        #[arg(long, default_value = "weak")]
        mode: String,
    },
    /// Solve the linear biequation A X = Y.
    Solve { matrix: PathBuf, rhs: PathBuf },
    /// Characteristic bipolynomial.
    Charpoly { file: PathBuf },
    /// Minimal bipolynomial.
    Minpoly { file: PathBuf },
    /// Rational spectra with eigenspaces and classification.
    Eigen { file: PathBuf },
    /// Bidiagonalizability with witness.
    Diagcheck { file: PathBuf },
    /// Spectral biprojections.
    Projections { file: PathBuf },
    /// Bitriangularizability predicate.
    Tricheck { file: PathBuf },
    /// Binilpotence predicate.
    Nilcheck { file: PathBuf },
    /// Similarity witness check: is b = p^-1 a p?
    Simcheck {
        a: PathBuf,
        b: PathBuf,
        p: PathBuf,
        /// Check the semi-similarity variant instead.
        #[arg(long)]
        semi: bool,
    },
    /// Componentwise neutrosophic matrix product.
    #[command(name = "neutro-mul")]
    NeutroMul { left: PathBuf, right: PathBuf },
    /// Componentwise fuzzy max-min composition.
    #[command(name = "fuzzy-compose")]
    FuzzyCompose { left: PathBuf, right: PathBuf },
    /// Neutrosophic classification (kind, shape, field scope).
    #[command(name = "neutro-classify")]
    NeutroClassify { file: PathBuf },
    /// Fuzzy classification (kind, shape, carrier flags).
    #[command(name = "fuzzy-classify")]
    FuzzyClassify { file: PathBuf },
}

enum CliError {
    Io(String),
    File(FileError),
    Op(Error),
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Usage(_) => 1,
            CliError::File(FileError::Parse(_)) => 1,
            CliError::File(FileError::Invalid(e)) => op_code(e),
            CliError::Op(e) => op_code(e),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(m) => m.clone(),
            CliError::File(e) => e.to_string(),
            CliError::Op(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
        }
    }
}

fn op_code(e: &Error) -> u8 {
    match e {
        Error::DimMismatch { .. } | Error::Shape(_) | Error::IndexOutOfRange(_) => 2,
        Error::DegenerateCollapse => 3,
        Error::Bisingular
        | Error::SemiBisingular { .. }
        | Error::Inconsistent(_)
        | Error::NotDiagonalizable(_)
        | Error::SingularWitness(_)
        | Error::Domain(_) => 4,
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Op(e)
    }
}

fn load(path: &PathBuf) -> Result<ParsedFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {}", path.display(), e)))?;
    parse_bimatrix(&text).map_err(CliError::File)
}

fn rational_input(parsed: ParsedFile, verb: &str) -> Result<BiMatrix<Rational>, CliError> {
    match parsed.bimatrix {
        AnyBiMatrix::Rational(b) => Ok(b),
        other => Err(CliError::Op(Error::Domain(format!(
            "{} needs a rational bimatrix, got ring `{}`",
            verb,
            other.ring()
        )))),
    }
}

fn column_of(b: &BiMatrix<Rational>) -> Result<(Vec<Rational>, Vec<Rational>), CliError> {
    if b.first().cols() != 1 || b.second().cols() != 1 {
        return Err(CliError::Op(Error::Shape(
            "right-hand side must have single-column components".into(),
        )));
    }
    Ok((b.first().col_vec(0), b.second().col_vec(0)))
}

struct Report {
    text: String,
    json: serde_json::Value,
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    use render::*;
    let report = match &cli.command {
        Command::Classify { file } => {
            let parsed = load(file)?;
            let (shape, dims) = match &parsed.bimatrix {
                AnyBiMatrix::Rational(b) => (b.classify_shape(), b.dims()),
                AnyBiMatrix::Neutrosophic(b) => (b.classify_shape(), b.dims()),
                AnyBiMatrix::Fuzzy(b) => (b.classify_shape(), b.dims()),
            };
            Report {
                text: classify_text(shape, dims),
                json: classify_json(shape, dims),
            }
        }
        Command::Add { left, right } => {
            let (l, r) = (load(left)?, load(right)?);
            let result = match (l.bimatrix, r.bimatrix) {
                (AnyBiMatrix::Rational(a), AnyBiMatrix::Rational(b)) => {
                    AnyBiMatrix::Rational(a.add(&b)?)
                }
                (AnyBiMatrix::Neutrosophic(a), AnyBiMatrix::Neutrosophic(b)) => {
                    AnyBiMatrix::Neutrosophic(a.add(&b)?)
                }
                _ => {
                    return Err(CliError::Op(Error::Domain(
                        "add needs two files of the same ring with additive structure".into(),
                    )))
                }
            };
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::Mul { left, right } => {
            let (l, r) = (load(left)?, load(right)?);
            let result = match (l.bimatrix, r.bimatrix) {
                (AnyBiMatrix::Rational(a), AnyBiMatrix::Rational(b)) => {
                    AnyBiMatrix::Rational(a.mul(&b)?)
                }
                (AnyBiMatrix::Neutrosophic(a), AnyBiMatrix::Neutrosophic(b)) => {
                    AnyBiMatrix::Neutrosophic(a.mul(&b)?)
                }
                _ => {
                    return Err(CliError::Op(Error::Domain(
                        "mul needs two files of the same ring with ring structure".into(),
                    )))
                }
            };
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::Scalarmul { file, scalar } => {
            let parsed = load(file)?;
            let result = match parsed.bimatrix {
                AnyBiMatrix::Rational(b) => {
                    let s = Rational::parse(scalar)
                        .map_err(|m| CliError::Usage(format!("bad --scalar: {}", m)))?;
                    AnyBiMatrix::Rational(b.scalar_mul(&s)?)
                }
                AnyBiMatrix::Neutrosophic(b) => {
                    let s = NeutrosophicScalar::parse(scalar)
                        .map_err(|m| CliError::Usage(format!("bad --scalar: {}", m)))?;
                    AnyBiMatrix::Neutrosophic(b.scalar_mul(&s)?)
                }
                AnyBiMatrix::Fuzzy(_) => {
                    return Err(CliError::Op(Error::Domain(
                        "fuzzy values have no scalar multiplication".into(),
                    )))
                }
            };
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::Transpose { file } => {
            let parsed = load(file)?;
            let result = match parsed.bimatrix {
                AnyBiMatrix::Rational(b) => AnyBiMatrix::Rational(b.transpose()),
                AnyBiMatrix::Neutrosophic(b) => AnyBiMatrix::Neutrosophic(b.transpose()),
                AnyBiMatrix::Fuzzy(b) => AnyBiMatrix::Fuzzy(b.transpose()),
            };
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::Symskew { file } => {
            let b = rational_input(load(file)?, "symskew")?;
            let pair = b.sym_skew_decompose()?;
            let sym = AnyBiMatrix::Rational(pair.symmetric);
            let skew = AnyBiMatrix::Rational(pair.skew);
            Report {
                text: symskew_text(&sym, &skew),
                json: symskew_json(&sym, &skew),
            }
        }
        Command::Sub {
            file,
            rows1,
            cols1,
            rows2,
            cols2,
        } => {
            let parsed = load(file)?;
            let result = match parsed.bimatrix {
                AnyBiMatrix::Rational(b) => {
                    AnyBiMatrix::Rational(b.subbimatrix(rows1, cols1, rows2, cols2)?)
                }
                AnyBiMatrix::Neutrosophic(b) => {
                    AnyBiMatrix::Neutrosophic(b.subbimatrix(rows1, cols1, rows2, cols2)?)
                }
                AnyBiMatrix::Fuzzy(b) => {
                    AnyBiMatrix::Fuzzy(b.subbimatrix(rows1, cols1, rows2, cols2)?)
                }
            };
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::Overlap { file } => {
            let parsed = load(file)?;
            match parsed.bimatrix {
                AnyBiMatrix::Rational(b) => {
                    let report = b.detect_overlap()?;
                    Report {
                        text: overlap_text(&report),
                        json: overlap_json(&report),
                    }
                }
                AnyBiMatrix::Neutrosophic(b) => {
                    let report = b.detect_overlap()?;
                    Report {
                        text: overlap_text(&report),
                        json: overlap_json(&report),
                    }
                }
                AnyBiMatrix::Fuzzy(b) => {
                    let report = b.detect_overlap()?;
                    Report {
                        text: overlap_text(&report),
                        json: overlap_json(&report),
                    }
                }
            }
        }
        Command::Det { file } => {
            let b = rational_input(load(file)?, "det")?;
            let d = b.bideterminant()?;
            Report {
                text: bidet_text(&d),
                json: bidet_json(&d),
            }
        }
        Command::Cofactor { file, at } => {
            if at.len() != 2 {
                return Err(CliError::Usage("--at needs exactly i,j".into()));
            }
            let b = rational_input(load(file)?, "cofactor")?;
            let d = b.bicofactor(at[0], at[1])?;
            Report {
                text: bicofactor_text(&d),
                json: bidet_json(&d),
            }
        }
        Command::Laplace { file, rows } => {
            let b = rational_input(load(file)?, "laplace")?;
            let set = b.bilaplace_expand(rows)?;
            Report {
                text: laplace_text(&set),
                json: laplace_json(&set),
            }
        }
        Command::Inverse { file } => {
            let b = rational_input(load(file)?, "inverse")?;
            let inv = AnyBiMatrix::Rational(b.biinverse()?);
            Report {
                json: any_bimatrix_json(&inv),
                text: doc_of(&inv),
            }
        }
        Command::Singularity { file } => {
            let b = rational_input(load(file)?, "singularity")?;
            let class = b.singularity_class()?;
            Report {
                text: singularity_text(&class),
                json: serde_json::json!({ "singularity": class.to_string() }),
            }
        }
        Command::Rectdet { left, right } => {
            let a = rational_input(load(left)?, "rectdet")?;
            let b = rational_input(load(right)?, "rectdet")?;
            let (total, terms) = a.rectangular_product_bidet(&b)?;
            Report {
                text: rectdet_text(&total, &terms),
                json: rectdet_json(&total, &terms),
            }
        }
        Command::Rref { file, mode } => {
            let b = rational_input(load(file)?, "rref")?;
            let mode = match mode.as_str() {
                "weak" => BireduceMode::Weak,
                "strong" => BireduceMode::Strong,
                other => {
                    return Err(CliError::Usage(format!(
                        "--mode must be weak or strong, got `{}`",
                        other
                    )))
                }
            };
            let red = b.row_bireduce(mode)?;
            Report {
                text: rref_text(&red),
                json: rref_json(&red),
            }
        }
        Command::Solve { matrix, rhs } => {
            let a = rational_input(load(matrix)?, "solve")?;
            let y = rational_input(load(rhs)?, "solve")?;
            let (y1, y2) = column_of(&y)?;
            let sol = a.solve_biequation(&y1, &y2)?;
            Report {
                text: solve_text(&sol),
                json: solve_json(&sol),
            }
        }
        Command::Charpoly { file } => {
            let b = rational_input(load(file)?, "charpoly")?;
            let p = b.char_bipolynomial()?;
            Report {
                text: bipoly_text(&p),
                json: bipoly_json(&p),
            }
        }
        Command::Minpoly { file } => {
            let b = rational_input(load(file)?, "minpoly")?;
            let p = b.biminimal_polynomial()?;
            Report {
                text: bipoly_text(&p),
                json: bipoly_json(&p),
            }
        }
        Command::Eigen { file } => {
            let b = rational_input(load(file)?, "eigen")?;
            let report = b.bieigen()?;
            Report {
                text: eigen_text(&report),
                json: eigen_json(&report),
            }
        }
        Command::Diagcheck { file } => {
            let b = rational_input(load(file)?, "diagcheck")?;
            let check = b.is_bidiagonalizable()?;
            Report {
                text: diagcheck_text(&check),
                json: diagcheck_json(&check),
            }
        }
        Command::Projections { file } => {
            let b = rational_input(load(file)?, "projections")?;
            let set = b.biprojections()?;
            Report {
                text: projections_text(&set),
                json: projections_json(&set),
            }
        }
        Command::Tricheck { file } => {
            let b = rational_input(load(file)?, "tricheck")?;
            let (first, second, overall) = b.is_bitriangularizable()?;
            Report {
                text: tricheck_text(first, second, overall),
                json: serde_json::json!({
                    "first": first, "second": second, "overall": overall
                }),
            }
        }
        Command::Nilcheck { file } => {
            let b = rational_input(load(file)?, "nilcheck")?;
            let value = b.is_binilpotent()?;
            Report {
                text: nilcheck_text(value),
                json: serde_json::json!({ "binilpotent": value }),
            }
        }
        Command::Simcheck { a, b, p, semi } => {
            let ma = rational_input(load(a)?, "simcheck")?;
            let mb = rational_input(load(b)?, "simcheck")?;
            let mp = rational_input(load(p)?, "simcheck")?;
            let (mode, similar) = if *semi {
                ("semi", ma.check_semi_similarity_witness(&mb, &mp)?)
            } else {
                ("full", ma.check_similarity_witness(&mb, &mp)?)
            };
            Report {
                text: simcheck_text(mode, similar),
                json: serde_json::json!({ "mode": mode, "similar": similar }),
            }
        }
        Command::NeutroMul { left, right } => {
            let to_neutro = |p: ParsedFile, verb: &str| match p.bimatrix {
                AnyBiMatrix::Neutrosophic(b) => Ok(b),
                AnyBiMatrix::Rational(b) => Ok(b.to_neutrosophic()),
                AnyBiMatrix::Fuzzy(_) => Err(CliError::Op(Error::Domain(format!(
                    "{} needs ring entries; fuzzy values compose with fuzzy-compose",
                    verb
                )))),
            };
            let a = to_neutro(load(left)?, "neutro-mul")?;
            let b = to_neutro(load(right)?, "neutro-mul")?;
            let result = AnyBiMatrix::Neutrosophic(bimatrix_neutro_mul(&a, &b)?);
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::FuzzyCompose { left, right } => {
            let as_fuzzy = |p: ParsedFile| match p.bimatrix {
                AnyBiMatrix::Fuzzy(b) => Ok(b),
                other => Err(CliError::Op(Error::Domain(format!(
                    "fuzzy-compose needs fuzzy files, got ring `{}`",
                    other.ring()
                )))),
            };
            let a = as_fuzzy(load(left)?)?;
            let b = as_fuzzy(load(right)?)?;
            let result = AnyBiMatrix::Fuzzy(bimatrix_fuzzy_compose(&a, &b)?);
            Report {
                json: any_bimatrix_json(&result),
                text: doc_of(&result),
            }
        }
        Command::NeutroClassify { file } => {
            let parsed = load(file)?;
            let view = parsed.bimatrix.to_neutrosophic();
            let tags = match (&parsed.field_tags.0, &parsed.field_tags.1) {
                (Some(a), Some(b)) => Some((a.as_str(), b.as_str())),
                _ => None,
            };
            let cls = classify_neutro(&view, tags);
            Report {
                text: neutro_classify_text(&cls),
                json: neutro_classify_json(&cls),
            }
        }
        Command::FuzzyClassify { file } => {
            let parsed = load(file)?;
            let view = parsed.bimatrix.to_neutrosophic();
            let cls = classify_fuzzy(&view);
            Report {
                text: fuzzy_classify_text(&cls),
                json: fuzzy_classify_json(&cls),
            }
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).unwrap());
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
