//! Command-line parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rbla_core::lie::adjoint_operator_wrt_form;
use rbla_core::prelie::{induce_prelie, special_from_admissible};
use rbla_core::CheckReport;
use serde_json::{json, Value};

use crate::context::{Options, View};
use crate::document::{self, Document};
use crate::error::CliError;
use crate::output::{operator_table, product_table, report_json};
use crate::registry::{Checker, Registry};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rbla", version, about = "Check and build Rota-Baxter Lie algebra structures exactly")]
struct Cli {
    /// `text` prints a summary before the JSON body; `json` prints only JSON.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one checker on a document.
    Check {
        file: PathBuf,
        /// Checker name; `rbla list` shows them all.
        #[arg(long)]
        what: String,
        #[command(flatten)]
        selection: Selection,
    },
    /// Build a derived structure and write it as a new document.
    Derive {
        file: PathBuf,
        /// Builder name; `rbla list` shows them all.
        #[arg(long)]
        op: String,
        /// Output path; the document goes to stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        selection: Selection,
    },
    /// Run every checker that applies to the document.
    Report {
        file: PathBuf,
        #[command(flatten)]
        selection: Selection,
    },
    /// List the registered checkers and builders.
    List,
}

#[derive(Args, Debug)]
struct Selection {
    /// Companion operator: -P, -P-lid, 0, Phat, or an operator name.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Representation to use when the document has several.
    #[arg(long)]
    rep: Option<String>,
    /// Operator playing the O-operator.
    #[arg(long, default_value = "T")]
    t: String,
    /// Levels for iterate-family.
    #[arg(long, default_value_t = 2)]
    levels: usize,
}

impl Selection {
    fn options(self) -> Options {
        Options { q: self.q, rep: self.rep, t: self.t, levels: self.levels }
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn text(&mut self, s: &str) {
        if self.format == Format::Text {
            let _ = writeln!(self.out, "{s}");
        }
    }

    fn json(&mut self, v: &Value) {
        let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"));
    }

    fn error(&mut self, msg: &str) {
        let _ = writeln!(self.err, "error: {msg}");
    }

    fn report(&mut self, r: &CheckReport) {
        self.text(&r.to_string());
        self.json(&report_json(r));
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let registry = Registry::standard();
    let mut io = Io { out, err, format: cli.format };
    match cli.command {
        Command::Check { file, what, selection } => check(&registry, &mut io, &file, &what, selection.options()),
        Command::Derive { file, op, out, selection } => {
            derive(&registry, &mut io, &file, &op, out.as_deref(), selection.options())
        }
        Command::Report { file, selection } => report(&registry, &mut io, &file, selection.options()),
        Command::List => {
            list(&registry, &mut io);
            EXIT_PASS
        }
    }
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    document::parse(&text).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        e => e,
    })
}

/// Prints the error and, for a refused construction, its report.
fn fail(io: &mut Io, what: &str, e: CliError) -> i32 {
    match &e {
        CliError::Missing(m) => io.error(&format!("{what} needs {m}")),
        _ => io.error(&format!("{what}: {e}")),
    }
    if let Some(r) = e.report() {
        io.report(r);
    }
    e.exit_code()
}

fn check(registry: &Registry, io: &mut Io, file: &Path, what: &str, opts: Options) -> i32 {
    let Some(checker) = registry.checker(what) else {
        io.error(&format!("unknown checker {what:?}; expected one of: {}", registry.checker_names().join(", ")));
        return EXIT_INPUT;
    };
    let doc = match load(file) {
        Ok(d) => d,
        Err(e) => return fail(io, "input", e),
    };
    match check_document(checker, &doc, &opts) {
        Ok(r) => {
            io.report(&r);
            if r.passed() {
                EXIT_PASS
            } else {
                EXIT_VIOLATION
            }
        }
        Err(e) => fail(io, &format!("checker {what:?}"), e),
    }
}

/// Runs a checker on a document, or on every member of a family document
/// that has no space of its own.
pub fn check_document(checker: &dyn Checker, doc: &Document, opts: &Options) -> Result<CheckReport, CliError> {
    if doc.space.is_some() || doc.family.is_empty() {
        return checker.check(&View::new(doc, opts));
    }
    let mut report = CheckReport::new(checker.name());
    for (k, member) in doc.family.iter().enumerate() {
        let mut part = check_document(checker, member, opts)?;
        part.name = format!("family[{k}]");
        report.add_part(part);
    }
    report.note(format!("{} family members", doc.family.len()));
    Ok(report.finish())
}

fn derive(registry: &Registry, io: &mut Io, file: &Path, op: &str, out: Option<&Path>, opts: Options) -> i32 {
    let Some(builder) = registry.builder(op) else {
        io.error(&format!("unknown builder {op:?}; expected one of: {}", registry.builder_names().join(", ")));
        return EXIT_INPUT;
    };
    let doc = match load(file) {
        Ok(d) => d,
        Err(e) => return fail(io, "input", e),
    };
    let built = match builder.build(&View::new(&doc, &opts)) {
        Ok(d) => d,
        Err(e) => return fail(io, &format!("builder {op:?}"), e),
    };
    let text = document::serialize(&built);
    match out {
        None => {
            let _ = write!(io.out, "{text}");
        }
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                io.error(&format!("{}: {e}", path.display()));
                return EXIT_INPUT;
            }
            io.text(&format!("{op}: wrote {}", path.display()));
            io.json(&json!({ "derived": op, "output": path.display().to_string() }));
        }
    }
    EXIT_PASS
}

/// The companion used by `report` when `--q` is absent: `Q`, then `P̂`
/// when a form is present, then `-P`.
fn report_q(doc: &Document) -> Option<String> {
    if doc.operators.contains_key("Q") {
        None
    } else if doc.forms.contains_key("B") {
        Some("Phat".into())
    } else {
        Some("-P".into())
    }
}

/// The induced pre-Lie product, `P̂` and the `◁` of `Q`, as far as the
/// document supports them.
fn tables(view: &View) -> Vec<(&'static str, Vec<String>)> {
    let mut out = Vec::new();
    let Ok(rb) = view.rb_checked() else {
        return out;
    };
    if let Ok(a) = induce_prelie(&rb) {
        out.push(("induced pre-Lie product", product_table(a.product(), "∘")));
    }
    if let Ok(b) = view.form() {
        if let Ok(p_hat) = adjoint_operator_wrt_form(b, rb.p()) {
            out.push(("adjoint of P with respect to B", operator_table(&p_hat, rb.space(), "P̂")));
        }
    }
    if let Ok(q) = view.q() {
        if let Ok(a) = special_from_admissible(&rb, &q) {
            out.push(("◁ of the special L-dendriform algebra", product_table(a.tri_l(), "◁")));
        }
    }
    out
}

fn report(registry: &Registry, io: &mut Io, file: &Path, mut opts: Options) -> i32 {
    let doc = match load(file) {
        Ok(d) => d,
        Err(e) => return fail(io, "input", e),
    };
    if opts.q.is_none() {
        opts.q = report_q(&doc);
    }
    let view = View::new(&doc, &opts);
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut all_pass = true;
    for checker in registry.checkers() {
        match check_document(checker, view.doc, view.opts) {
            Ok(r) => {
                io.text(&r.summary());
                all_pass &= r.passed();
                checks.push(report_json(&r));
            }
            Err(CliError::Core(rbla_core::Error::Rejected(r))) => {
                io.text(&r.summary());
                all_pass = false;
                checks.push(report_json(&r));
            }
            Err(e) => skipped.push(json!({ "check": checker.name(), "reason": e.to_string() })),
        }
    }
    if !skipped.is_empty() {
        let names: Vec<&str> = skipped.iter().filter_map(|s| s["check"].as_str()).collect();
        io.text(&format!("not applicable: {}", names.join(", ")));
    }
    let tables = tables(&view);
    for (title, lines) in &tables {
        io.text(&format!("\n{title}:"));
        for l in lines {
            io.text(&format!("  {l}"));
        }
    }
    let companion = opts.q.clone().unwrap_or_else(|| "Q".into());
    io.json(&json!({
        "document": doc.name,
        "companion": companion,
        "verdict": if all_pass { "pass" } else { "fail" },
        "checks": checks,
        "not_applicable": skipped,
        "tables": tables.iter().map(|(t, l)| json!({ "title": t, "lines": l })).collect::<Vec<_>>(),
    }));
    if all_pass {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    }
}

fn list(registry: &Registry, io: &mut Io) {
    let _ = writeln!(io.out, "checkers (check --what):");
    for c in registry.checkers() {
        let _ = writeln!(io.out, "  {:<22} {}", c.name(), c.about());
    }
    let _ = writeln!(io.out, "builders (derive --op):");
    for b in registry.builders() {
        let _ = writeln!(io.out, "  {:<22} {}", b.name(), b.about());
    }
}
