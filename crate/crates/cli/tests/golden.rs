//! Golden-file tests: every verb runs on the worked-example corpus and must
//! reproduce its report byte-for-byte, with the documented exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn bimat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = bimat(args);
    assert!(
        out.status.success(),
        "expected success for {:?}, stderr: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn expect_exit(args: &[&str], code: i32) {
    let out = bimat(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "args {:?}, stderr: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn classify_golden() {
    let out = stdout_of(&["classify", &data("ex111.bim")]);
    assert_eq!(
        out,
        "shape=RectangularUniform\ncomponent 1 dims=2x3\ncomponent 2 dims=2x3\n"
    );
}

#[test]
fn add_golden() {
    let out = stdout_of(&["add", &data("ex116a.bim"), &data("ex116c.bim")]);
    assert_eq!(
        out,
        "bimatrix rational\n\
         component 1 rows=2 cols=3\n2 1 2\n1 2 1\n\
         component 2 rows=2 cols=3\n7 3 0\n0 3 -3\n"
    );
}

#[test]
fn add_collapse_exit_code() {
    expect_exit(&["add", &data("ex121a.bim"), &data("ex121b.bim")], 3);
}

#[test]
fn mul_golden() {
    let out = stdout_of(&["mul", &data("ex125a.bim"), &data("ex125b.bim")]);
    assert_eq!(
        out,
        "bimatrix rational\n\
         component 1 rows=2 cols=2\n-6 0\n0 0\n\
         component 2 rows=2 cols=2\n2 -1\n0 0\n"
    );
}

#[test]
fn scalarmul_golden() {
    let out = stdout_of(&["scalarmul", &data("ex115.bim"), "--scalar", "3"]);
    assert_eq!(
        out,
        "bimatrix rational\n\
         component 1 rows=2 cols=3\n6 0 3\n9 9 -3\n\
         component 2 rows=2 cols=3\n0 3 -3\n6 3 0\n"
    );
}

#[test]
fn transpose_round_trips_through_format() {
    let once = stdout_of(&["transpose", &data("ex111.bim")]);
    assert_eq!(
        once,
        "bimatrix rational\n\
         component 1 rows=3 cols=2\n3 -1\n0 2\n1 1\n\
         component 2 rows=3 cols=2\n0 1\n2 1\n-1 0\n"
    );
    // write the output to a temp file and transpose again: back to the input
    let tmp = std::env::temp_dir().join("bimat_golden_transpose.bim");
    std::fs::write(&tmp, &once).unwrap();
    let twice = stdout_of(&["transpose", tmp.to_str().unwrap()]);
    let original = std::fs::read_to_string(data("ex111.bim")).unwrap();
    assert_eq!(twice, original);
}

#[test]
fn symskew_golden() {
    let out = stdout_of(&["symskew", &data("ex137.bim")]);
    assert_eq!(
        out,
        "# symmetric part\n\
         bimatrix rational\n\
         component 1 rows=4 cols=4\n\
         3 1 2 -1/2\n1 1 3 1/2\n2 3 -1 1\n-1/2 1/2 1 1\n\
         component 2 rows=4 cols=4\n\
         5 -1/2 1/2 2\n-1/2 1 2 1/2\n1/2 2 0 1/2\n2 1/2 1/2 0\n\
         # skew part\n\
         bimatrix rational\n\
         component 1 rows=4 cols=4\n\
         0 1 -1 -1/2\n-1 0 -1 -1/2\n1 1 0 -1\n1/2 1/2 1 0\n\
         component 2 rows=4 cols=4\n\
         0 -1/2 -1/2 0\n1/2 0 0 1/2\n1/2 0 0 -1/2\n0 -1/2 1/2 0\n"
    );
}

#[test]
fn sub_golden() {
    let out = stdout_of(&[
        "sub",
        &data("ex141.bim"),
        "--rows1",
        "1,3",
        "--cols1",
        "1,2,3",
        "--rows2",
        "1,3,5,6",
        "--cols2",
        "1,2",
    ]);
    assert_eq!(
        out,
        "bimatrix rational\n\
         component 1 rows=2 cols=3\n3 2 1\n-1 6 -1\n\
         component 2 rows=4 cols=2\n3 8\n1 1\n2 1\n-1 4\n"
    );
}

#[test]
fn overlap_golden() {
    let out = stdout_of(&["overlap", &data("ex171.bim")]);
    assert_eq!(
        out,
        "classification=RowOverlap\nrow: (4, 4, 2, 2, 3)\nrow: (0, 1, 1, 1, 1)\n"
    );
}

#[test]
fn det_golden() {
    assert_eq!(stdout_of(&["det", &data("ex151.bim")]), "bidet=(0, 10)\n");
    // a value that hand evaluations often get sign-wrong; the oracle pins +23
    assert_eq!(stdout_of(&["det", &data("ex152.bim")]), "bidet=(-9, 23)\n");
}

#[test]
fn cofactor_golden() {
    assert_eq!(
        stdout_of(&["cofactor", &data("ex163a.bim"), "--at", "1,1"]),
        "bicofactor=(4, 1)\n"
    );
}

#[test]
fn laplace_golden() {
    let out = stdout_of(&["laplace", &data("ex152.bim"), "--rows", "1,4"]);
    assert_eq!(
        out,
        "cols={1,2} sign=+1 |N|=(0, -5) |M|=(0, 0) term=(0, 0)\n\
         cols={1,3} sign=-1 |N|=(3, 1) |M|=(-5, 0) term=(-15, 0)\n\
         cols={1,4} sign=+1 |N|=(6, 0) |M|=(1, 0) term=(6, 0)\n\
         cols={2,3} sign=+1 |N|=(0, 6) |M|=(0, 4) term=(0, 24)\n\
         cols={2,4} sign=-1 |N|=(0, 5) |M|=(0, 0) term=(0, 0)\n\
         cols={3,4} sign=+1 |N|=(0, -1) |M|=(0, 1) term=(0, -1)\n\
         total=(-9, 23)\n"
    );
}

#[test]
fn inverse_golden() {
    assert_eq!(
        stdout_of(&["inverse", &data("ex165.bim")]),
        "bimatrix rational\n\
         component 1 rows=2 cols=2\n1 0\n-2/3 1/3\n\
         component 2 rows=2 cols=2\n1/2 -1\n1/2 0\n"
    );
    assert_eq!(
        stdout_of(&["inverse", &data("ex166.bim")]),
        "bimatrix rational\n\
         component 1 rows=2 cols=2\n5/8 -1/8\n-7/8 3/8\n\
         component 2 rows=3 cols=3\n-3/5 2/5 2/5\n2/5 -3/5 2/5\n2/5 2/5 -3/5\n"
    );
}

#[test]
fn singularity_golden_and_inverse_failures() {
    assert_eq!(
        stdout_of(&["singularity", &data("ex169.bim")]),
        "singularity=Bisingular\n"
    );
    assert_eq!(
        stdout_of(&["singularity", &data("ex1610.bim")]),
        "singularity=SemiBisingular(first)\n"
    );
    expect_exit(&["inverse", &data("ex169.bim")], 4);
    expect_exit(&["inverse", &data("ex1610.bim")], 4);
}

#[test]
fn rectdet_golden() {
    let out = stdout_of(&["rectdet", &data("ex164a.bim"), &data("ex164b.bim")]);
    assert_eq!(
        out,
        "cols={1,2} |A|=(-8, -2) |B|=(6, 2) term=(-48, -4)\n\
         cols={1,3} |A|=(-7, -2) |B|=(21, -6) term=(-147, 12)\n\
         cols={2,3} |A|=(12, 1) |B|=(61, -10) term=(732, -10)\n\
         total=(537, -2)\n"
    );
}

#[test]
fn rref_weak_golden() {
    let out = stdout_of(&["rref", &data("ex222.bim")]);
    assert_eq!(
        out,
        "bimatrix rational\n\
         component 1 rows=3 cols=3\n1 0 1\n0 1 1\n0 0 0\n\
         component 2 rows=3 cols=3\n1 0 0\n0 1 0\n0 0 1\n\
         mode=weak\n\
         op1 scale 1 1/3\n\
         op1 addmul 2 1 -3\n\
         op1 addmul 3 1 -1\n\
         op1 scale 2 1/4\n\
         op1 addmul 1 2 2/3\n\
         op1 addmul 3 2 -2/3\n\
         op2 scale 1 1/6\n\
         op2 addmul 3 1 -1\n\
         op2 scale 2 -1/7\n\
         op2 addmul 1 2 -7/6\n\
         op2 addmul 3 2 7/6\n\
         op2 scale 3 2/3\n\
         op2 addmul 1 3 -1/2\n\
         op2 addmul 2 3 2/7\n"
    );
}

#[test]
fn rref_strong_golden() {
    let out = stdout_of(&["rref", &data("ex222.bim"), "--mode", "strong"]);
    assert_eq!(
        out,
        "bimatrix rational\n\
         component 1 rows=3 cols=3\n1 0 1\n0 1 1\n0 0 0\n\
         component 2 rows=3 cols=3\n1 0 1/2\n-3/2 -7/2 1/4\n0 0 3/2\n\
         mode=strong partial=false\n\
         op scale 1 1/3\n\
         op addmul 2 1 -3\n\
         op addmul 3 1 -1\n\
         op scale 2 1/4\n\
         op addmul 1 2 2/3\n\
         op addmul 3 2 -2/3\n"
    );
}

#[test]
fn solve_golden() {
    let out = stdout_of(&["solve", &data("ex221.bim"), &data("zero3.bim")]);
    assert_eq!(
        out,
        "homogeneous=true\n\
         semi_homogeneous=false\n\
         component 1 particular=(0, 0, 0)\n\
         component 1 nullspace=(0, 1, -1)\n\
         component 2 particular=(0, 0, 0)\n"
    );
}

#[test]
fn charpoly_golden() {
    assert_eq!(
        stdout_of(&["charpoly", &data("ex251.bim")]),
        "first=1 + x^2\nsecond=-4 + 8*x - 5*x^2 + x^3\n"
    );
    assert_eq!(
        stdout_of(&["charpoly", &data("ex252.bim")]),
        "first=-4 + x^2\nsecond=x^2 - 2*x^3 + x^4\n"
    );
}

#[test]
fn minpoly_golden() {
    assert_eq!(
        stdout_of(&["minpoly", &data("ex262.bim")]),
        "first=-4*x + x^3\nsecond=x^2 - 2*x^3 + x^4\n"
    );
}

#[test]
fn eigen_golden() {
    assert_eq!(
        stdout_of(&["eigen", &data("ex251.bim")]),
        "component 1\n\
         residual=1 + x^2\n\
         component 2\n\
         root=1 alg=1 geo=1\n\
         root=2 alg=2 geo=1\n\
         residual=1\n\
         classification=Semi:second\n"
    );
    assert_eq!(
        stdout_of(&["eigen", &data("ex261.bim")]),
        "component 1\n\
         root=1 alg=1 geo=1\n\
         root=3 alg=1 geo=1\n\
         residual=1\n\
         component 2\n\
         root=1 alg=1 geo=1\n\
         root=2 alg=1 geo=1\n\
         root=3 alg=1 geo=1\n\
         residual=1\n\
         classification=Full\n"
    );
}

#[test]
fn diagcheck_golden() {
    assert_eq!(
        stdout_of(&["diagcheck", &data("ex261.bim")]),
        "bidiagonalizable=true\n\
         eigenbasis 1:\n2/5 0\n-1 1\n\
         eigenbasis 2:\n0 1/9 0\n1 1 0\n0 0 1\n"
    );
    assert_eq!(
        stdout_of(&["diagcheck", &data("ex252.bim")]),
        "bidiagonalizable=false\nfailing=second root=0 alg=2 geo=1\n"
    );
}

#[test]
fn projections_golden() {
    assert_eq!(
        stdout_of(&["projections", &data("ex261.bim")]),
        "component 1 eigenvalue=1\n1 0\n-5/2 0\n\
         component 1 eigenvalue=3\n0 0\n5/2 1\n\
         component 2 eigenvalue=1\n0 0 0\n-9 1 0\n0 0 0\n\
         component 2 eigenvalue=2\n1 0 0\n9 0 0\n0 0 0\n\
         component 2 eigenvalue=3\n0 0 0\n0 0 0\n0 0 1\n"
    );
    expect_exit(&["projections", &data("ex252.bim")], 4);
}

#[test]
fn tricheck_golden() {
    assert_eq!(
        stdout_of(&["tricheck", &data("ex262.bim")]),
        "first=true\nsecond=true\noverall=true\n"
    );
    assert_eq!(
        stdout_of(&["tricheck", &data("ex251.bim")]),
        "first=false\nsecond=true\noverall=false\n"
    );
}

#[test]
fn nilcheck_golden() {
    assert_eq!(
        stdout_of(&["nilcheck", &data("nilpotent.bim")]),
        "binilpotent=true\n"
    );
    assert_eq!(
        stdout_of(&["nilcheck", &data("ex262.bim")]),
        "binilpotent=false\n"
    );
}

#[test]
fn simcheck_golden() {
    assert_eq!(
        stdout_of(&[
            "simcheck",
            &data("sim_a.bim"),
            &data("sim_b.bim"),
            &data("sim_p.bim")
        ]),
        "mode=full\nsimilar=true\n"
    );
    assert_eq!(
        stdout_of(&[
            "simcheck",
            &data("sim_a.bim"),
            &data("sim_a.bim"),
            &data("sim_b.bim"),
        ]),
        "mode=full\nsimilar=false\n"
    );
}

#[test]
fn neutro_mul_golden() {
    let out = stdout_of(&["neutro-mul", &data("ex3111a.bim"), &data("ex3111b.bim")]);
    assert_eq!(
        out,
        "bimatrix neutrosophic\n\
         component 1 rows=2 cols=4\n\
         2-6I -1+4I -2-3I I\n\
         4I 3+I 6 12+2I\n\
         component 2 rows=2 cols=4\n\
         0 0 0 0\n0 0 0 0\n"
    );
}

#[test]
fn fuzzy_compose_golden() {
    let out = stdout_of(&["fuzzy-compose", &data("ex3115p.bim"), &data("ex3115q.bim")]);
    assert_eq!(
        out,
        "bimatrix fuzzy\n\
         component 1 rows=3 cols=1\nI\nI\n1/10\n\
         component 2 rows=3 cols=1\n0\n0\n0\n"
    );
}

#[test]
fn neutro_classify_golden() {
    assert_eq!(
        stdout_of(&["neutro-classify", &data("ex321.bim")]),
        "kind=Neutrosophic\nshape=SquareUniform\nfield_scope=Plain\n"
    );
    assert_eq!(
        stdout_of(&["neutro-classify", &data("ex325.bim")]),
        "kind=SemiNeutrosophic(second)\nshape=RectangularUniform\nfield_scope=Plain\n"
    );
}

#[test]
fn fuzzy_classify_golden() {
    assert_eq!(
        stdout_of(&["fuzzy-classify", &data("ex328.bim")]),
        "kind=Fuzzy\nshape=SquareUniform\nintegral_neutro=(true,true)\nfuzzy_neutro=(true,true)\n"
    );
    assert_eq!(
        stdout_of(&["fuzzy-classify", &data("ex3219.bim")]),
        "kind=NotFuzzy\nshape=Column\nintegral_neutro=(true,false)\nfuzzy_neutro=(true,false)\n"
    );
}

#[test]
fn exit_code_table() {
    // 1: parse failure
    expect_exit(&["det", &data("bad.bim")], 1);
    // 1: missing file
    expect_exit(&["det", &data("no_such_file.bim")], 1);
    // 2: shape error
    expect_exit(&["det", &data("ex111.bim")], 2);
    // 2: index out of range
    expect_exit(&["cofactor", &data("ex163a.bim"), "--at", "9,9"], 2);
    // 3: degenerate collapse in a file
    expect_exit(&["det", &data("collapse.bim")], 3);
    // 4: domain errors
    expect_exit(&["solve", &data("ex1610.bim"), &data("rhs21.bim")], 4);
    expect_exit(&["inverse", &data("ex169.bim")], 4);
    expect_exit(&["projections", &data("ex252.bim")], 4);
    expect_exit(&["scalarmul", &data("ex3115p.bim"), "--scalar", "1"], 4);
}

#[test]
fn byte_stable_repeat_runs() {
    for args in [
        vec!["det".to_string(), data("ex151.bim")],
        vec!["eigen".to_string(), data("ex251.bim")],
        vec!["rref".to_string(), data("ex222.bim")],
        vec![
            "laplace".to_string(),
            data("ex152.bim"),
            "--rows".to_string(),
            "1,4".to_string(),
        ],
    ] {
        let refs: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let a = stdout_of(&refs);
        let b = stdout_of(&refs);
        assert_eq!(a, b);
    }
}

#[test]
fn json_mirror_golden() {
    let out = stdout_of(&["det", &data("ex151.bim"), "--json"]);
    assert_eq!(out, "{\n  \"first\": \"0\",\n  \"second\": \"10\"\n}\n");
    let out = stdout_of(&["singularity", &data("ex1610.bim"), "--json"]);
    assert_eq!(out, "{\n  \"singularity\": \"SemiBisingular(first)\"\n}\n");
    let out = stdout_of(&["tricheck", &data("ex262.bim"), "--json"]);
    assert!(out.contains("\"overall\": true"));
    // json for a bimatrix result mirrors the components as token grids
    let out = stdout_of(&["inverse", &data("ex165.bim"), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ring"], "rational");
    assert_eq!(v["component1"][1][0], "-2/3");
}

#[test]
fn round_trip_format_is_canonical() {
    // parse + format of a file with comments and uncanonical tokens is the
    // canonical document; formatting it again is a fixpoint.
    let tmp = std::env::temp_dir().join("bimat_golden_canonical.bim");
    std::fs::write(
        &tmp,
        "# comment\nbimatrix rational\ncomponent 1 rows=1 cols=2\n2/4 0.25\n\ncomponent 2 rows=1 cols=1\n-3/6\n",
    )
    .unwrap();
    let doc = stdout_of(&["transpose", &data("ex111.bim")]);
    let tmp2 = std::env::temp_dir().join("bimat_golden_canonical2.bim");
    std::fs::write(&tmp2, &doc).unwrap();
    let again = stdout_of(&["transpose", tmp2.to_str().unwrap()]);
    let original = std::fs::read_to_string(data("ex111.bim")).unwrap();
    assert_eq!(again, original);
    // uncanonical tokens normalize
    let sub = stdout_of(&[
        "sub",
        tmp.to_str().unwrap(),
        "--rows1",
        "1",
        "--cols1",
        "1,2",
        "--rows2",
        "1",
        "--cols2",
        "1",
    ]);
    assert_eq!(
        sub,
        "bimatrix rational\ncomponent 1 rows=1 cols=2\n1/2 1/4\ncomponent 2 rows=1 cols=1\n-1/2\n"
    );
}

/// One-line summary gate: every verb answers the corpus successfully.
#[test]
fn criterion_5_summary() {
    let ok: &[(&str, Vec<String>)] = &[
        ("classify", vec![data("ex111.bim")]),
        ("add", vec![data("ex116a.bim"), data("ex116c.bim")]),
        ("mul", vec![data("ex125a.bim"), data("ex125b.bim")]),
        (
            "scalarmul",
            vec![data("ex115.bim"), "--scalar".into(), "3".into()],
        ),
        ("transpose", vec![data("ex111.bim")]),
        ("symskew", vec![data("ex137.bim")]),
        (
            "sub",
            vec![
                data("ex141.bim"),
                "--rows1".into(),
                "1,3".into(),
                "--cols1".into(),
                "1,2,3".into(),
                "--rows2".into(),
                "1,3,5,6".into(),
                "--cols2".into(),
                "1,2".into(),
            ],
        ),
        ("overlap", vec![data("ex171.bim")]),
        ("det", vec![data("ex151.bim")]),
        (
            "cofactor",
            vec![data("ex163a.bim"), "--at".into(), "1,1".into()],
        ),
        (
            "laplace",
            vec![data("ex152.bim"), "--rows".into(), "1,4".into()],
        ),
        ("inverse", vec![data("ex165.bim")]),
        ("singularity", vec![data("ex1610.bim")]),
        ("rectdet", vec![data("ex164a.bim"), data("ex164b.bim")]),
        ("rref", vec![data("ex222.bim")]),
        ("solve", vec![data("ex221.bim"), data("zero3.bim")]),
        ("charpoly", vec![data("ex251.bim")]),
        ("minpoly", vec![data("ex262.bim")]),
        ("eigen", vec![data("ex251.bim")]),
        ("diagcheck", vec![data("ex261.bim")]),
        ("projections", vec![data("ex261.bim")]),
        ("tricheck", vec![data("ex262.bim")]),
        ("nilcheck", vec![data("nilpotent.bim")]),
        (
            "simcheck",
            vec![data("sim_a.bim"), data("sim_b.bim"), data("sim_p.bim")],
        ),
        ("neutro-mul", vec![data("ex3111a.bim"), data("ex3111b.bim")]),
        (
            "fuzzy-compose",
            vec![data("ex3115p.bim"), data("ex3115q.bim")],
        ),
        ("neutro-classify", vec![data("ex321.bim")]),
        ("fuzzy-classify", vec![data("ex3219.bim")]),
    ];
    for (verb, args) in ok {
        let mut full: Vec<&str> = vec![verb];
        full.extend(args.iter().map(|s| s.as_str()));
        let out = bimat(&full);
        assert!(
            out.status.success(),
            "verb {} failed: {}",
            verb,
            String::from_utf8_lossy(&out.stderr)
        );
        // the JSON mirror answers too
        let mut with_json = full.clone();
        with_json.push("--json");
        assert!(
            bimat(&with_json).status.success(),
            "verb {} --json failed",
            verb
        );
    }
    println!("PASS: criterion 5 - every verb answers the worked-example corpus (text and json)");
}
