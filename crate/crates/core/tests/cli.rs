use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use axial_core::cli::{cmd_export, AlgebraFile};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn axial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_axial"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("axial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn info_reports_structure() {
    let o = axial(&["info", path(&data("flex2.json"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("dim=3 field=Q flexible=yes commutative=no"),
        "{}",
        stdout(&o)
    );
    let o = axial(&["info", path(&data("2B.json"))]);
    assert!(stdout(&o).contains("commutative=yes"));
}

#[test]
fn malformed_json_is_an_input_error() {
    let p = scratch(
        "bad.json",
        "{\n  \"field\": \"Q\",\n  \"dim\": 2,\n  oops\n}\n",
    );
    let o = axial(&["info", path(&p)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
    let o = axial(&["info", "/nonexistent/algebra.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn axis_verdicts_and_exit_codes() {
    let f = data("flex2.json");
    let o = axial(&["axis", path(&f), "--coords", "1,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: Jordan axis of type (1/3, 2/3)"));

    let o = axial(&["axis", path(&f), "--coords", "1,1,-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("left absolute primitivity"));

    let o = axial(&["axis", path(&f), "--coords", "0,0,0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = axial(&["axis", path(&f), "--coords", "b", "--type", "2/3,1/3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = axial(&["axis", path(&f), "--coords", "b", "--type", "1/3,2/3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = axial(&["axis", path(&f), "--coords", "a", "--type", "1,2/3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_names_the_case() {
    let o = axial(&["classify", path(&data("flex2.json")), "--gens", "a,b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("FLEX2(λ=1/3, δ=2/3)"));
    let expected = [
        ("2B.json", "TWO_B"),
        ("flex1.json", "FLEX1(λ=1/3, δ=2/3)"),
        ("hss_half.json", "HSS_DIM2(λ=1/2)"),
        ("hss_minus_one.json", "HSS_DIM2(λ=-1)"),
        ("bfamily_half.json", "B_FAMILY(λ=1/2, λ′=1/2, γ=1)"),
        ("flex2_gf5.json", "FLEX2(λ=2, δ=4)"),
        ("flex2_generic.json", "FLEX2(λ=t, δ=-t+1)"),
    ];
    for (file, case) in expected {
        let o = axial(&["classify", path(&data(file))]);
        assert_eq!(stdout(&o).lines().next(), Some(case), "{file}");
    }
}

#[test]
fn decompose_and_closure() {
    let f = data("flex2.json");
    let o = axial(&["decompose", path(&f), "--axis", "a"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1/3, 2/3) dim 1"));
    let o = axial(&["closure", path(&f), "--gens", "(1,1,-1)"]);
    assert!(stdout(&o).starts_with("dim=1 of 3"));
    let o = axial(&["closure", path(&f), "--gens", "a,b"]);
    assert!(stdout(&o).starts_with("dim=3 of 3 (whole algebra: yes)"));
}

#[test]
fn idempotents_respect_the_cap() {
    let f = data("flex2_gf5.json");
    let o = axial(&["idempotents", path(&f)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("idempotents: 12 (axes: 10)"));
    let o = Command::new(env!("CARGO_BIN_EXE_axial"))
        .args(["idempotents", path(&f)])
        .env("AXIAL_ENUM_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = axial(&["idempotents", path(&data("flex2.json"))]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_dim2_summary() {
    let o = axial(&["search-dim2", "--field", "GF:5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("survivors: 5 tables; all match"));
}

#[test]
fn json_output_is_stable() {
    let f = data("flex2.json");
    let args = ["--json", "classify", path(&f)];
    let (a, b) = (axial(&args), axial(&args));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["label"], "FLEX2");
    let o = axial(&["search-dim2", "--field", "GF:5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["survivors"].as_array().unwrap().len(), 5);
}

#[test]
fn fixtures_are_canonical_exports() {
    let fixtures = [
        ("flex2.json", "flex2", "Q", Some("1/3"), None, None),
        ("flex1.json", "flex1", "Q", Some("1/3"), None, None),
        ("2B.json", "2B", "Q", None, None, None),
        ("hss_half.json", "hss", "Q", Some("1/2"), None, None),
        ("hss_minus_one.json", "hss", "Q", Some("-1"), None, None),
        (
            "bfamily_half.json",
            "bfamily",
            "Q",
            Some("1/2"),
            Some("1/2"),
            Some("1"),
        ),
        ("flex2_gf5.json", "flex2", "GF:5", Some("2"), None, None),
        ("flex2_generic.json", "flex2", "Qt", None, None, None),
        ("flex1_generic.json", "flex1", "Qt", None, None, None),
    ];
    for (file, family, field, l, lp, g) in fixtures {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let parsed = AlgebraFile::parse(&text).unwrap();
        assert_eq!(parsed.to_json(), text, "{file} is not in canonical form");
        assert_eq!(
            cmd_export(family, field, l, lp, g).unwrap(),
            parsed,
            "{file}"
        );
    }
}

#[test]
fn verify_paper_replays_files_and_catches_mutants() {
    let o = axial(&[
        "verify-paper",
        path(&data("flex2.json")),
        path(&data("bfamily_half.json")),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("seress-left"));

    let mut f = AlgebraFile::parse(&std::fs::read_to_string(data("flex2.json")).unwrap()).unwrap();
    f.table[1][0][2] = "1/3".into(); // ba = λx
    let p = scratch("mutant.json", &f.to_json());
    let o = axial(&["verify-paper", path(&p)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failed:"));
}

#[test]
fn verify_paper_full_suite() {
    let o = axial(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("dim2-search-oracle"));
}
