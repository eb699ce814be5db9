//! Named checkers and builders, looked up at run time.

use rbla_core::CheckReport;

use crate::context::View;
use crate::document::Document;
use crate::error::CliError;
use crate::{builders, checkers};

pub trait Checker: Send + Sync {
    fn name(&self) -> &str;
    fn about(&self) -> &str;
    fn check(&self, view: &View) -> Result<CheckReport, CliError>;
}

pub trait Builder: Send + Sync {
    fn name(&self) -> &str;
    fn about(&self) -> &str;
    fn build(&self, view: &View) -> Result<Document, CliError>;
}

/// A checker backed by a plain function.
pub struct FnChecker {
    pub name: &'static str,
    pub about: &'static str,
    pub run: fn(&View) -> Result<CheckReport, CliError>,
}

impl Checker for FnChecker {
    fn name(&self) -> &str {
        self.name
    }

    fn about(&self) -> &str {
        self.about
    }

    fn check(&self, view: &View) -> Result<CheckReport, CliError> {
        let mut report = (self.run)(view)?;
        report.name = self.name.to_string();
        Ok(report)
    }
}

/// A builder backed by a plain function.
pub struct FnBuilder {
    pub name: &'static str,
    pub about: &'static str,
    pub run: fn(&View) -> Result<Document, CliError>,
}

impl Builder for FnBuilder {
    fn name(&self) -> &str {
        self.name
    }

    fn about(&self) -> &str {
        self.about
    }

    fn build(&self, view: &View) -> Result<Document, CliError> {
        (self.run)(view)
    }
}

#[derive(Default)]
pub struct Registry {
    checkers: Vec<Box<dyn Checker>>,
    builders: Vec<Box<dyn Builder>>,
}

impl Registry {
    /// Every checker and builder the command line offers.
    pub fn standard() -> Self {
        let mut r = Self::default();
        for c in checkers::all() {
            r.register_checker(Box::new(c));
        }
        for b in builders::all() {
            r.register_builder(Box::new(b));
        }
        r
    }

    /// Adds a checker; a later registration replaces one of the same name.
    pub fn register_checker(&mut self, c: Box<dyn Checker>) {
        self.checkers.retain(|old| old.name() != c.name());
        self.checkers.push(c);
    }

    pub fn register_builder(&mut self, b: Box<dyn Builder>) {
        self.builders.retain(|old| old.name() != b.name());
        self.builders.push(b);
    }

    pub fn checker(&self, name: &str) -> Option<&dyn Checker> {
        self.checkers.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn builder(&self, name: &str) -> Option<&dyn Builder> {
        self.builders.iter().find(|b| b.name() == name).map(|b| b.as_ref())
    }

    pub fn checkers(&self) -> impl Iterator<Item = &dyn Checker> {
        self.checkers.iter().map(|c| c.as_ref())
    }

    pub fn builders(&self) -> impl Iterator<Item = &dyn Builder> {
        self.builders.iter().map(|b| b.as_ref())
    }

    pub fn checker_names(&self) -> Vec<&str> {
        self.checkers().map(|c| c.name()).collect()
    }

    pub fn builder_names(&self) -> Vec<&str> {
        self.builders().map(|b| b.name()).collect()
    }
}
