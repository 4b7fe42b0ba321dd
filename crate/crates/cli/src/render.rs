//! Text and JSON renderers for every report the workbench emits.
//!
//! Text reports are byte-stable for fixed inputs; the JSON form mirrors the
//! text fields one-to-one (scalars and polynomials appear as their canonical
//! token strings, so exactness survives serialization).

use serde_json::{json, Value};

use bimat_core::bimatrix::{BiMatrix, OverlapReport};
use bimat_core::det::{BiDeterminant, LaplaceTermSet, RectProductTerm, SingularityClass};
use bimat_core::format::{format_bimatrix, AnyBiMatrix, ParsedFile, RingTag};
use bimat_core::matrix::{Matrix, RowOp};
use bimat_core::neutro::{FuzzyClass, NeutroClass};
use bimat_core::operator::{
    BiEigenReport, BiProjectionSet, BiSolution, BireduceLog, Bireduction, DiagCheck, DiagWitness,
};
use bimat_core::poly::BiPolynomial;
use bimat_core::scalar::{Rational, Scalar};
use bimat_core::ShapeClass;

pub fn doc_of(any: &AnyBiMatrix) -> String {
    format_bimatrix(&ParsedFile {
        bimatrix: any.clone(),
        field_tags: (None, None),
    })
}

fn matrix_json<T: Scalar>(m: &Matrix<T>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    json!(rows)
}

pub fn bimatrix_json<T: Scalar>(ring: RingTag, b: &BiMatrix<T>) -> Value {
    json!({
        "ring": ring.to_string(),
        "component1": matrix_json(b.first()),
        "component2": matrix_json(b.second()),
    })
}

pub fn any_bimatrix_json(any: &AnyBiMatrix) -> Value {
    match any {
        AnyBiMatrix::Rational(b) => bimatrix_json(RingTag::Rational, b),
        AnyBiMatrix::Neutrosophic(b) => bimatrix_json(RingTag::Neutrosophic, b),
        AnyBiMatrix::Fuzzy(b) => bimatrix_json(RingTag::Fuzzy, b),
    }
}

pub fn classify_text(shape: ShapeClass, dims: ((usize, usize), (usize, usize))) -> String {
    format!(
        "shape={}\ncomponent 1 dims={}x{}\ncomponent 2 dims={}x{}\n",
        shape, dims.0 .0, dims.0 .1, dims.1 .0, dims.1 .1
    )
}

pub fn classify_json(shape: ShapeClass, dims: ((usize, usize), (usize, usize))) -> Value {
    json!({
        "shape": shape.to_string(),
        "component1": {"rows": dims.0.0, "cols": dims.0.1},
        "component2": {"rows": dims.1.0, "cols": dims.1.1},
    })
}

pub fn symskew_text(sym: &AnyBiMatrix, skew: &AnyBiMatrix) -> String {
    format!(
        "# symmetric part\n{}# skew part\n{}",
        doc_of(sym),
        doc_of(skew)
    )
}

pub fn symskew_json(sym: &AnyBiMatrix, skew: &AnyBiMatrix) -> Value {
    json!({
        "symmetric": any_bimatrix_json(sym),
        "skew": any_bimatrix_json(skew),
    })
}

fn vector_text<T: Scalar>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn overlap_text<T: Scalar>(report: &OverlapReport<T>) -> String {
    let mut out = format!("classification={}\n", report.class);
    for row in &report.shared_rows {
        out.push_str(&format!("row: {}\n", vector_text(row)));
    }
    for col in &report.shared_cols {
        out.push_str(&format!("col: {}\n", vector_text(col)));
    }
    out
}

pub fn overlap_json<T: Scalar>(report: &OverlapReport<T>) -> Value {
    let rows: Vec<Vec<String>> = report
        .shared_rows
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect();
    let cols: Vec<Vec<String>> = report
        .shared_cols
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect();
    json!({
        "classification": report.class,
        "shared_rows": rows,
        "shared_cols": cols,
    })
}

pub fn bidet_text(d: &BiDeterminant) -> String {
    format!("bidet={}\n", d)
}

pub fn bidet_json(d: &BiDeterminant) -> Value {
    json!({"first": d.first.to_string(), "second": d.second.to_string()})
}

pub fn bicofactor_text(d: &BiDeterminant) -> String {
    format!("bicofactor={}\n", d)
}

pub fn laplace_text(set: &LaplaceTermSet) -> String {
    let mut out = String::new();
    for term in &set.terms {
        let cols: Vec<String> = term.cols.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "cols={{{}}} sign={}1 |N|={} |M|={} term={}\n",
            cols.join(","),
            if term.sign >= 0 { "+" } else { "-" },
            term.minor,
            term.complement,
            term.term
        ));
    }
    out.push_str(&format!("total={}\n", set.total));
    out
}

pub fn laplace_json(set: &LaplaceTermSet) -> Value {
    let terms: Vec<Value> = set
        .terms
        .iter()
        .map(|t| {
            json!({
                "cols": t.cols,
                "sign": t.sign,
                "minor": {"first": t.minor.first.to_string(), "second": t.minor.second.to_string()},
                "complement": {"first": t.complement.first.to_string(), "second": t.complement.second.to_string()},
                "term": {"first": t.term.first.to_string(), "second": t.term.second.to_string()},
            })
        })
        .collect();
    json!({
        "row_set": set.row_set,
        "terms": terms,
        "total": {"first": set.total.first.to_string(), "second": set.total.second.to_string()},
    })
}

pub fn singularity_text(class: &SingularityClass) -> String {
    format!("singularity={}\n", class)
}

pub fn rectdet_text(total: &BiDeterminant, terms: &[RectProductTerm]) -> String {
    let mut out = String::new();
    for term in terms {
        let cols: Vec<String> = term.cols.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!(
            "cols={{{}}} |A|={} |B|={} term={}\n",
            cols.join(","),
            term.a_minor,
            term.b_minor,
            term.term
        ));
    }
    out.push_str(&format!("total={}\n", total));
    out
}

pub fn rectdet_json(total: &BiDeterminant, terms: &[RectProductTerm]) -> Value {
    let terms: Vec<Value> = terms
        .iter()
        .map(|t| {
            json!({
                "cols": t.cols,
                "a_minor": {"first": t.a_minor.first.to_string(), "second": t.a_minor.second.to_string()},
                "b_minor": {"first": t.b_minor.first.to_string(), "second": t.b_minor.second.to_string()},
                "term": {"first": t.term.first.to_string(), "second": t.term.second.to_string()},
            })
        })
        .collect();
    json!({
        "terms": terms,
        "total": {"first": total.first.to_string(), "second": total.second.to_string()},
    })
}

fn rowop_text(op: &RowOp) -> String {
    match op {
        RowOp::Swap(a, b) => format!("swap {} {}", a + 1, b + 1),
        RowOp::Scale(r, f) => format!("scale {} {}", r + 1, f),
        RowOp::AddMul { dst, src, factor } => format!("addmul {} {} {}", dst + 1, src + 1, factor),
    }
}

fn rowop_json(op: &RowOp) -> Value {
    match op {
        RowOp::Swap(a, b) => json!({"op": "swap", "rows": [a + 1, b + 1]}),
        RowOp::Scale(r, f) => json!({"op": "scale", "row": r + 1, "factor": f.to_string()}),
        RowOp::AddMul { dst, src, factor } => {
            json!({"op": "addmul", "dst": dst + 1, "src": src + 1, "factor": factor.to_string()})
        }
    }
}

pub fn rref_text(red: &Bireduction) -> String {
    let mut out = doc_of(&AnyBiMatrix::Rational(red.result.clone()));
    match &red.log {
        BireduceLog::Weak { first, second } => {
            out.push_str("mode=weak\n");
            for op in first {
                out.push_str(&format!("op1 {}\n", rowop_text(op)));
            }
            for op in second {
                out.push_str(&format!("op2 {}\n", rowop_text(op)));
            }
        }
        BireduceLog::Strong { ops, partial } => {
            out.push_str(&format!("mode=strong partial={}\n", partial));
            for op in ops {
                out.push_str(&format!("op {}\n", rowop_text(op)));
            }
        }
    }
    out
}

pub fn rref_json(red: &Bireduction) -> Value {
    let result = bimatrix_json(RingTag::Rational, &red.result);
    match &red.log {
        BireduceLog::Weak { first, second } => json!({
            "mode": "weak",
            "result": result,
            "oplog1": first.iter().map(rowop_json).collect::<Vec<_>>(),
            "oplog2": second.iter().map(rowop_json).collect::<Vec<_>>(),
        }),
        BireduceLog::Strong { ops, partial } => json!({
            "mode": "strong",
            "partial": partial,
            "result": result,
            "oplog": ops.iter().map(rowop_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn solve_text(sol: &BiSolution) -> String {
    let mut out = format!(
        "homogeneous={}\nsemi_homogeneous={}\n",
        sol.homogeneous, sol.semi_homogeneous
    );
    for (idx, comp) in [(1, &sol.first), (2, &sol.second)] {
        out.push_str(&format!(
            "component {} particular={}\n",
            idx,
            vector_text(&comp.particular)
        ));
        for v in &comp.nullspace {
            out.push_str(&format!("component {} nullspace={}\n", idx, vector_text(v)));
        }
    }
    out
}

pub fn solve_json(sol: &BiSolution) -> Value {
    let comp = |c: &bimat_core::operator::ComponentSolution| {
        json!({
            "particular": c.particular.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "nullspace": c.nullspace.iter()
                .map(|v| v.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    };
    json!({
        "homogeneous": sol.homogeneous,
        "semi_homogeneous": sol.semi_homogeneous,
        "component1": comp(&sol.first),
        "component2": comp(&sol.second),
    })
}

pub fn bipoly_text(p: &BiPolynomial) -> String {
    format!("first={}\nsecond={}\n", p.first, p.second)
}

pub fn bipoly_json(p: &BiPolynomial) -> Value {
    json!({"first": p.first.to_string(), "second": p.second.to_string()})
}

pub fn eigen_text(report: &BiEigenReport) -> String {
    let mut out = String::new();
    for (idx, spectrum) in [(1, &report.first), (2, &report.second)] {
        out.push_str(&format!("component {}\n", idx));
        for pair in &spectrum.pairs {
            out.push_str(&format!(
                "root={} alg={} geo={}\n",
                pair.root, pair.algebraic, pair.geometric
            ));
        }
        out.push_str(&format!("residual={}\n", spectrum.residual));
    }
    out.push_str(&format!("classification={}\n", report.classification));
    out
}

pub fn eigen_json(report: &BiEigenReport) -> Value {
    let side = |s: &bimat_core::operator::ComponentSpectrum| {
        json!({
            "roots": s.pairs.iter().map(|p| json!({
                "root": p.root.to_string(),
                "alg": p.algebraic,
                "geo": p.geometric,
                "eigenspace": p.eigenspace.iter()
                    .map(|v| v.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "residual": s.residual.to_string(),
            "splits": s.splits,
        })
    };
    json!({
        "component1": side(&report.first),
        "component2": side(&report.second),
        "classification": report.classification.to_string(),
    })
}

fn matrix_rows_text(m: &Matrix<Rational>) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn diagcheck_text(check: &DiagCheck) -> String {
    let mut out = format!("bidiagonalizable={}\n", check.diagonalizable);
    match &check.witness {
        DiagWitness::Eigenbases { first, second } => {
            out.push_str("eigenbasis 1:\n");
            out.push_str(&matrix_rows_text(first));
            out.push_str("eigenbasis 2:\n");
            out.push_str(&matrix_rows_text(second));
        }
        DiagWitness::NonSplitting {
            component,
            residual,
        } => {
            out.push_str(&format!("failing={} residual={}\n", component, residual));
        }
        DiagWitness::Defective {
            component,
            root,
            algebraic,
            geometric,
        } => {
            out.push_str(&format!(
                "failing={} root={} alg={} geo={}\n",
                component, root, algebraic, geometric
            ));
        }
    }
    out
}

pub fn diagcheck_json(check: &DiagCheck) -> Value {
    let witness = match &check.witness {
        DiagWitness::Eigenbases { first, second } => json!({
            "eigenbasis1": matrix_json(first),
            "eigenbasis2": matrix_json(second),
        }),
        DiagWitness::NonSplitting {
            component,
            residual,
        } => json!({
            "failing": component,
            "residual": residual.to_string(),
        }),
        DiagWitness::Defective {
            component,
            root,
            algebraic,
            geometric,
        } => json!({
            "failing": component,
            "root": root.to_string(),
            "alg": algebraic,
            "geo": geometric,
        }),
    };
    json!({"bidiagonalizable": check.diagonalizable, "witness": witness})
}

pub fn projections_text(set: &BiProjectionSet) -> String {
    let mut out = String::new();
    for (idx, projs) in [(1, &set.first), (2, &set.second)] {
        for p in projs {
            out.push_str(&format!("component {} eigenvalue={}\n", idx, p.eigenvalue));
            out.push_str(&matrix_rows_text(&p.matrix));
        }
    }
    out
}

pub fn projections_json(set: &BiProjectionSet) -> Value {
    let side = |projs: &[bimat_core::operator::SpectralProjection]| {
        projs
            .iter()
            .map(|p| {
                json!({
                    "eigenvalue": p.eigenvalue.to_string(),
                    "matrix": matrix_json(&p.matrix),
                })
            })
            .collect::<Vec<_>>()
    };
    json!({"component1": side(&set.first), "component2": side(&set.second)})
}

pub fn tricheck_text(first: bool, second: bool, overall: bool) -> String {
    format!("first={}\nsecond={}\noverall={}\n", first, second, overall)
}

pub fn nilcheck_text(value: bool) -> String {
    format!("binilpotent={}\n", value)
}

pub fn simcheck_text(mode: &str, similar: bool) -> String {
    format!("mode={}\nsimilar={}\n", mode, similar)
}

pub fn neutro_classify_text(cls: &NeutroClass) -> String {
    format!(
        "kind={}\nshape={}\nfield_scope={}\n",
        cls.kind, cls.shape, cls.field_scope
    )
}

pub fn neutro_classify_json(cls: &NeutroClass) -> Value {
    json!({
        "kind": cls.kind.to_string(),
        "shape": cls.shape.to_string(),
        "field_scope": cls.field_scope.to_string(),
    })
}

pub fn fuzzy_classify_text(cls: &FuzzyClass) -> String {
    format!(
        "kind={}\nshape={}\nintegral_neutro=({},{})\nfuzzy_neutro=({},{})\n",
        cls.kind,
        cls.shape,
        cls.integral_neutro.0,
        cls.integral_neutro.1,
        cls.fuzzy_neutro.0,
        cls.fuzzy_neutro.1
    )
}

pub fn fuzzy_classify_json(cls: &FuzzyClass) -> Value {
    json!({
        "kind": cls.kind.to_string(),
        "shape": cls.shape.to_string(),
        "integral_neutro": [cls.integral_neutro.0, cls.integral_neutro.1],
        "fuzzy_neutro": [cls.fuzzy_neutro.0, cls.fuzzy_neutro.1],
    })
}
