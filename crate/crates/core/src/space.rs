//! Named vector spaces with ordered bases.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    name: String,
    labels: Vec<String>,
}

impl Space {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self> {
        let name = name.into();
        if labels.is_empty() {
            return Err(Error::Invalid(format!("space {name:?} has an empty basis")));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Invalid(format!("space {name:?}: duplicate basis label {l:?}")));
            }
        }
        Ok(Self { name, labels })
    }

    /// Convenience constructor for literal label lists.
    pub fn from_labels(name: &str, labels: &[&str]) -> Self {
        Self::new(name, labels.iter().map(|s| s.to_string()).collect())
            .expect("literal basis labels are distinct")
    }

    /// Basis `e1, …, en` under `name`.
    pub fn numbered(name: &str, prefix: &str, n: usize) -> Self {
        Self::new(name, (1..=n).map(|i| format!("{prefix}{i}")).collect())
            .expect("numbered labels are distinct")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Dual space with basis `x*` indexed like the primal basis.
    pub fn dual(&self) -> Space {
        let flip = |l: &String| match l.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{l}*"),
        };
        let name = match self.name.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{}*", self.name),
        };
        let labels: Vec<String> = self.labels.iter().map(flip).collect();
        Space::new(name, labels).unwrap_or_else(|_| self.renamed_dual())
    }

    fn renamed_dual(&self) -> Space {
        Space {
            name: format!("{}*", self.name),
            labels: (0..self.dim()).map(|i| format!("{}#{}", self.labels[i], i)).collect(),
        }
    }

    /// `self ⊕ other` with this basis first. Clashing labels get a suffix.
    pub fn direct_sum(&self, other: &Space) -> Space {
        let mut labels = self.labels.clone();
        let taken: HashSet<&String> = self.labels.iter().collect();
        for l in &other.labels {
            if taken.contains(l) {
                labels.push(format!("{l}'"));
            } else {
                labels.push(l.clone());
            }
        }
        Space::new(format!("{}+{}", self.name, other.name), labels)
            .unwrap_or_else(|_| Space::numbered(&format!("{}+{}", self.name, other.name), "d", self.dim() + other.dim()))
    }

    /// Labels of `V ⊗ W` basis pairs, row-major.
    pub fn tensor_labels(&self, other: &Space) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                out.push(format!("{a}⊗{b}"));
            }
        }
        out
    }

    pub fn tensor3_labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim().pow(3));
        for a in &self.labels {
            for b in &self.labels {
                for c in &self.labels {
                    out.push(format!("{a}⊗{b}⊗{c}"));
                }
            }
        }
        out
    }
}

/// Labels for the entries of a matrix `domain → codomain`, row-major:
/// entry `(i, j)` reads `"e_j→f_i"`.
pub fn map_labels(domain: &Space, codomain: &Space) -> Vec<String> {
    let mut out = Vec::with_capacity(domain.dim() * codomain.dim());
    for f in codomain.labels() {
        for e in domain.labels() {
            out.push(format!("{e}→{f}"));
        }
    }
    out
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.labels.join(","))
    }
}
