use rbla_cli::context::{Options, View};
use rbla_cli::document::{parse, Document};
use rbla_cli::registry::{Checker, FnChecker};
use rbla_cli::{CliError, Registry};
use rbla_core::report::Violation;
use rbla_core::CheckReport;

const CHECKERS: [&str; 25] = [
    "lie", "prelie", "ldend", "rb", "rb-prelie", "rep", "rb-rep", "admissible", "form", "lie-coalg", "rb-coalg",
    "lie-bialg", "rb-bialg", "sld-coalg", "sld-bialg", "matched-pair", "matched-pair-rb", "matched-pair-prelie",
    "manin-rb", "manin-prelie", "cybe", "o-operator", "cond-coboundary", "same-construction", "triple-equivalence",
];

const BUILDERS: [&str; 18] = [
    "induce-prelie", "subadjacent", "dual-rep", "adjoint-op", "semidirect", "semidirect-rb", "special-ldend",
    "left-invariant-ldend", "double-manin", "coboundary-delta", "lift-o", "bialgebras-from-o", "canonical-r",
    "induce-sld", "sld-from-o", "cons1", "cons2", "iterate-family",
];

#[test]
fn standard_registry_offers_every_strategy() {
    let r = Registry::standard();
    assert_eq!(r.checker_names(), CHECKERS);
    assert_eq!(r.builder_names(), BUILDERS);
    assert!(r.checkers().all(|c| !c.about().is_empty()));
    assert!(r.builders().all(|b| !b.about().is_empty()));
}

/// Flags every basis vector whose label is longer than one character.
struct LabelLength;

impl Checker for LabelLength {
    fn name(&self) -> &str {
        "short-labels"
    }

    fn about(&self) -> &str {
        "basis labels are single characters"
    }

    fn check(&self, view: &View) -> Result<CheckReport, CliError> {
        let mut report = CheckReport::new(self.name());
        for l in view.space()?.labels() {
            if l.chars().count() > 1 {
                report.push(Violation::new("label-length", &[l]));
            }
        }
        Ok(report.finish())
    }
}

fn doc(labels: &str) -> Document {
    parse(&format!(r#"{{"format":"rbla/1","space":{{"name":"g","basis":{labels}}}}}"#)).unwrap()
}

#[test]
fn custom_checkers_are_selected_by_name() {
    let mut r = Registry::standard();
    r.register_checker(Box::new(LabelLength));
    let opts = Options::default();
    let c = r.checker("short-labels").expect("registered");
    assert!(c.check(&View::new(&doc(r#"["a","b"]"#), &opts)).unwrap().passed());
    let failing = c.check(&View::new(&doc(r#"["a","bb"]"#), &opts)).unwrap();
    assert_eq!(failing.violations[0].witness, ["bb"]);
    assert!(matches!(c.check(&View::new(&Document::default(), &opts)), Err(CliError::Missing(_))));
}

#[test]
fn registering_a_name_again_replaces_it() {
    let mut r = Registry::standard();
    r.register_checker(Box::new(FnChecker {
        name: "lie",
        about: "always fails",
        run: |_| {
            let mut report = CheckReport::new("anything");
            report.push(Violation::new("refused", &[]));
            Ok(report.finish())
        },
    }));
    assert_eq!(r.checker_names().len(), CHECKERS.len());
    let report = r.checker("lie").unwrap().check(&View::new(&doc(r#"["a"]"#), &Options::default())).unwrap();
    assert!(!report.passed());
    assert_eq!(report.name, "lie");
}

#[test]
fn in_process_run_reports_exit_codes() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(rbla_cli::run(["rbla", "list"], &mut out, &mut err), 0);
    assert!(String::from_utf8(out).unwrap().contains("triple-equivalence"));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(rbla_cli::run(["rbla", "check"], &mut out, &mut err), 2);
    assert!(!err.is_empty());
}
