//! Check reports: every violation of an identity, with the basis witness and
//! the exact nonzero defect.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;

use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Identity that failed, e.g. `"jacobi"` or `"rb-rep"`.
    pub tag: String,
    /// Basis labels the identity was evaluated on.
    pub witness: Vec<String>,
    /// Nonzero coefficients of the defect, keyed by output basis label.
    pub defect: Vec<(String, Scalar)>,
}

impl Violation {
    pub fn new(tag: impl Into<String>, witness: &[&str]) -> Self {
        Self {
            tag: tag.into(),
            witness: witness.iter().map(|s| s.to_string()).collect(),
            defect: Vec::new(),
        }
    }

    /// Builds a violation from a defect vector, or `None` when it vanishes.
    pub fn from_defect(
        tag: &str,
        witness: &[&str],
        defect: &[Scalar],
        labels: &[String],
    ) -> Option<Self> {
        let nonzero: Vec<(String, Scalar)> = defect
            .iter()
            .zip(labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| (l.clone(), c.clone()))
            .collect();
        if nonzero.is_empty() {
            return None;
        }
        let mut v = Self::new(tag, witness);
        v.defect = nonzero;
        Some(v)
    }

    pub fn with_message(tag: &str, witness: &[&str], message: &str) -> Self {
        let mut v = Self::new(tag, witness);
        v.witness.push(message.to_string());
        v
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] at ({})", self.tag, self.witness.join(", "))?;
        if !self.defect.is_empty() {
            let terms: Vec<String> = self
                .defect
                .iter()
                .map(|(l, c)| format!("{}:{}", l, scalar::format(c)))
                .collect();
            write!(f, " defect {{{}}}", terms.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub violations: Vec<Violation>,
    /// Informational lines (derived flags, route agreement, counts).
    pub notes: Vec<String>,
    /// Sub-checks; the report passes only if every part passes.
    pub parts: Vec<CheckReport>,
    pub elapsed: Duration,
    started: Instant,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            violations: Vec::new(),
            notes: Vec::new(),
            parts: Vec::new(),
            elapsed: Duration::ZERO,
            started: Instant::now(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.parts.iter().all(CheckReport::passed)
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn push_opt(&mut self, v: Option<Violation>) {
        if let Some(v) = v {
            self.violations.push(v);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn add_part(&mut self, part: CheckReport) {
        self.parts.push(part);
    }

    pub fn finish(mut self) -> Self {
        self.elapsed = self.started.elapsed();
        self
    }

    /// Every violation in this report and its parts, depth first.
    pub fn all_violations(&self) -> Vec<&Violation> {
        let mut out: Vec<&Violation> = self.violations.iter().collect();
        for p in &self.parts {
            out.extend(p.all_violations());
        }
        out
    }

    pub fn find_part(&self, name: &str) -> Option<&CheckReport> {
        if self.name == name {
            return Some(self);
        }
        self.parts.iter().find_map(|p| p.find_part(name))
    }

    pub fn summary(&self) -> String {
        let n = self.all_violations().len();
        if n == 0 {
            format!("{}: pass", self.name)
        } else {
            format!("{}: FAIL ({} violation{})", self.name, n, if n == 1 { "" } else { "s" })
        }
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        writeln!(f, "{pad}{}", self.summary())?;
        for n in &self.notes {
            writeln!(f, "{pad}  note: {n}")?;
        }
        for v in &self.violations {
            writeln!(f, "{pad}  {v}")?;
        }
        for p in &self.parts {
            p.write_indented(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, 0)
    }
}
