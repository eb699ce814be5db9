//! Fixture matrix and process helpers shared by the contract tests and the
//! acceptance target.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).expect("fixture readable")
}

pub fn rbla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbla"))
        .args(args)
        .env_remove("RBLA_MAX_DIM")
        .output()
        .expect("binary runs")
}

pub fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// `(fixture, arguments after the file, expected exit code)`. The
/// arguments start with the subcommand; the fixture path goes second.
pub const MATRIX: &[(&str, &[&str], i32)] = &[
    ("fix_sl2.json", &["check", "--what", "rb"], 0),
    ("fix_sl2.json", &["check", "--what", "form"], 0),
    ("fix_sl2.json", &["check", "--what", "admissible", "--q", "Phat"], 0),
    ("fix_sl2.json", &["report"], 0),
    ("fix_sl2.json", &["check", "--what", "cybe"], 2),
    ("fix_sl2.json", &["check", "--what", "no-such-checker"], 2),
    ("fix_sl2.json", &["derive", "--op", "induce-prelie"], 0),
    ("corrupted_jacobi.json", &["check", "--what", "lie"], 1),
    ("corrupted_jacobi.json", &["report"], 1),
    ("decimal_scalar.json", &["check", "--what", "lie"], 2),
    ("sl2_not_rb.json", &["check", "--what", "rb"], 1),
    ("sl2_not_rb.json", &["derive", "--op", "induce-prelie"], 1),
    ("unknown_label.json", &["check", "--what", "rb"], 2),
    ("wrong_format.json", &["check", "--what", "lie"], 2),
    ("duplicate_name.json", &["check", "--what", "rb"], 2),
    ("dimension_mismatch.json", &["check", "--what", "matched-pair"], 2),
    ("too_large.json", &["check", "--what", "lie"], 2),
    ("empty_products.json", &["check", "--what", "lie"], 0),
    ("sl2_published_prelie.json", &["check", "--what", "prelie"], 1),
    ("na2_rep.json", &["check", "--what", "rep"], 0),
    ("na2_rep.json", &["check", "--what", "rb-rep"], 0),
    ("na2_bad_rep.json", &["check", "--what", "rep"], 1),
    ("ab2_weight1.json", &["check", "--what", "rb"], 0),
    ("ab2_weight1.json", &["check", "--what", "cybe"], 0),
    ("ab_matched_pair.json", &["check", "--what", "matched-pair"], 0),
    ("sl2_double_bialgebra.json", &["check", "--what", "rb-bialg"], 0),
    ("sl2_double_bialgebra.json", &["check", "--what", "triple-equivalence"], 0),
    ("sl2_sld_family.json", &["check", "--what", "sld-bialg"], 0),
    ("missing_file.json", &["check", "--what", "lie"], 2),
];

/// Every fixture that parses, for the round-trip property.
pub const PARSEABLE: &[&str] = &[
    "fix_sl2.json",
    "corrupted_jacobi.json",
    "sl2_not_rb.json",
    "empty_products.json",
    "sl2_published_prelie.json",
    "na2_rep.json",
    "na2_bad_rep.json",
    "ab2_weight1.json",
    "ab_matched_pair.json",
    "sl2_double_bialgebra.json",
    "sl2_sld_family.json",
];

/// Runs one matrix row; returns the observed exit code.
pub fn run_row(file: &str, args: &[&str]) -> Output {
    let path = fixture(file);
    let path = path.to_str().expect("utf-8 path");
    let mut full = vec![args[0], path];
    full.extend_from_slice(&args[1..]);
    rbla(&full)
}

/// Rows whose exit code differs from the expected one.
pub fn matrix_failures() -> Vec<String> {
    MATRIX
        .iter()
        .filter_map(|(file, args, expected)| {
            let got = code(&run_row(file, args));
            (got != *expected).then(|| format!("{file} {}: expected {expected}, got {got}", args.join(" ")))
        })
        .collect()
}

/// Fixtures whose parse, serialize, parse cycle changes the document or
/// whose serialized text is not a fixed point.
pub fn round_trip_failures() -> Vec<String> {
    use rbla_cli::document::{parse, serialize};
    PARSEABLE
        .iter()
        .filter_map(|name| {
            let doc = parse(&fixture_text(name)).ok()?;
            let text = serialize(&doc);
            match parse(&text) {
                Ok(again) if again == doc && serialize(&again) == text => None,
                Ok(_) => Some(format!("{name}: round trip changed the document")),
                Err(e) => Some(format!("{name}: serialized form does not parse: {e}")),
            }
        })
        .chain(PARSEABLE.iter().filter(|n| parse(&fixture_text(n)).is_err()).map(|n| format!("{n}: does not parse")))
        .collect()
}
