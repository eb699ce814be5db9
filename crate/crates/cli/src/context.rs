//! Typed access to the structures of a document, as checkers and builders
//! need them. Absent structures come back as [`CliError::Missing`].

use std::sync::LazyLock;

use rbla_core::lie::{adjoint_operator_wrt_form, BilinearForm, LieAlgebra, Representation};
use rbla_core::linalg::{Matrix, Tensor2};
use rbla_core::prelie::{adjoint_with, LDendriformAlgebra, PreLieAlgebra, PreLieRepresentation};
use rbla_core::product::{BilinearProduct, Coproduct};
use rbla_core::rota_baxter::RBLieAlgebra;
use rbla_core::scalar::zero;
use rbla_core::{Scalar, Space};

use crate::document::{Document, RepData};
use crate::error::CliError;

/// Command-line choices that select among a document's structures.
#[derive(Debug, Clone)]
pub struct Options {
    /// Companion operator: a shortcut (`-P`, `-P-lid`, `0`, `Phat`) or an
    /// operator name. Unset means the operator named `Q`.
    pub q: Option<String>,
    /// Representation name; unset means the only one in the document.
    pub rep: Option<String>,
    /// Operator used as the O-operator `T`.
    pub t: String,
    /// Number of levels for `iterate-family`.
    pub levels: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { q: None, rep: None, t: "T".into(), levels: 2 }
    }
}

pub const Q_SHORTCUTS: [&str; 4] = ["-P", "-P-lid", "0", "Phat"];

pub struct View<'a> {
    pub doc: &'a Document,
    pub opts: &'a Options,
}

fn missing(what: impl Into<String>) -> CliError {
    CliError::Missing(what.into())
}

impl<'a> View<'a> {
    pub fn new(doc: &'a Document, opts: &'a Options) -> Self {
        Self { doc, opts }
    }

    pub fn space(&self) -> Result<&'a Space, CliError> {
        self.doc.space.as_ref().ok_or_else(|| missing("space"))
    }

    pub fn product(&self, name: &str) -> Result<&'a BilinearProduct, CliError> {
        self.doc.products.get(name).ok_or_else(|| missing(format!("product {name:?}")))
    }

    pub fn weight(&self) -> Scalar {
        self.doc.weight.clone().unwrap_or_else(zero)
    }

    pub fn lie(&self) -> Result<LieAlgebra, CliError> {
        Ok(LieAlgebra::unchecked(self.product("bracket")?.clone()))
    }

    /// The Lie algebra, refused with its report when the bracket fails.
    pub fn lie_checked(&self) -> Result<LieAlgebra, CliError> {
        Ok(LieAlgebra::new(self.product("bracket")?.clone())?)
    }

    pub fn prelie(&self) -> Result<PreLieAlgebra, CliError> {
        Ok(PreLieAlgebra::unchecked(self.product("circ")?.clone()))
    }

    pub fn ldendriform(&self) -> Result<LDendriformAlgebra, CliError> {
        Ok(LDendriformAlgebra::unchecked(self.product("tri_r")?.clone(), self.product("tri_l")?.clone())?)
    }

    /// An operator on the document's own space.
    pub fn operator(&self, name: &str) -> Result<Matrix, CliError> {
        let op = self.doc.operators.get(name).ok_or_else(|| missing(format!("operator {name:?}")))?;
        let space = self.space()?;
        if &op.domain != space || &op.codomain != space {
            return Err(CliError::Input(format!("operator {name:?} must map {:?} to itself", space.name())));
        }
        Ok(op.matrix.clone())
    }

    pub fn p(&self) -> Result<Matrix, CliError> {
        self.operator("P")
    }

    pub fn rb(&self) -> Result<RBLieAlgebra, CliError> {
        Ok(RBLieAlgebra::unchecked(self.lie()?, self.weight(), self.p()?)?)
    }

    pub fn rb_checked(&self) -> Result<RBLieAlgebra, CliError> {
        Ok(RBLieAlgebra::new(self.lie_checked()?, self.weight(), self.p()?)?)
    }

    pub fn form(&self) -> Result<&'a BilinearForm, CliError> {
        self.doc.forms.get("B").ok_or_else(|| missing("form \"B\""))
    }

    pub fn coproduct(&self, name: &str) -> Result<&'a Coproduct, CliError> {
        self.doc.coproducts.get(name).ok_or_else(|| missing(format!("coproduct {name:?}")))
    }

    pub fn tensor(&self) -> Result<&'a Tensor2, CliError> {
        self.doc.tensors.get("r").ok_or_else(|| missing("tensor \"r\""))
    }

    /// The companion operator selected by `--q`.
    pub fn q(&self) -> Result<Matrix, CliError> {
        self.shortcut(self.opts.q.as_deref(), "Q")
    }

    fn shortcut(&self, choice: Option<&str>, default: &str) -> Result<Matrix, CliError> {
        let n = self.space()?.dim();
        match choice {
            None => self.operator(default).map_err(|e| match e {
                CliError::Missing(m) => missing(format!("{m} (or pass --q)")),
                e => e,
            }),
            Some("-P") => Ok(-&self.p()?),
            Some("-P-lid") => Ok(&(-&self.p()?) - &Matrix::scalar(n, &self.weight())),
            Some("0") => Ok(Matrix::zeros(n, n)),
            Some("Phat") => Ok(adjoint_operator_wrt_form(self.form()?, &self.p()?)?),
            Some(name) => self.operator(name),
        }
    }

    pub fn t(&self) -> Result<Matrix, CliError> {
        let name = &self.opts.t;
        let op = self.doc.operators.get(name).ok_or_else(|| missing(format!("operator {name:?} (or pass --t)")))?;
        Ok(op.matrix.clone())
    }

    pub fn rep_data(&self) -> Result<(&'a str, &'a RepData), CliError> {
        let reps = &self.doc.representations;
        match &self.opts.rep {
            Some(name) => reps
                .get_key_value(name)
                .map(|(k, v)| (k.as_str(), v))
                .ok_or_else(|| missing(format!("representation {name:?}"))),
            None => match reps.len() {
                0 => Err(missing("representation")),
                1 => reps.iter().next().map(|(k, v)| (k.as_str(), v)).ok_or_else(|| missing("representation")),
                _ => Err(CliError::Input(format!(
                    "several representations ({}); choose one with --rep",
                    reps.keys().cloned().collect::<Vec<_>>().join(", ")
                ))),
            },
        }
    }

    /// The selected Lie representation with its `alpha`/`beta` attached.
    pub fn lie_rep(&self) -> Result<Representation, CliError> {
        let (_, data) = self.rep_data()?;
        let mut rep = Representation::unchecked(self.lie()?, data.module.clone(), data.matrices.clone())?;
        if let Some(a) = &data.alpha {
            rep = rep.with_alpha(a.clone())?;
        }
        if let Some(b) = &data.beta {
            rep = rep.with_beta(b.clone())?;
        }
        Ok(rep)
    }

    /// The selected representation, or the adjoint one with `alpha = P`
    /// when the document declares none.
    pub fn lie_rep_or_adjoint(&self) -> Result<Representation, CliError> {
        if self.doc.representations.is_empty() && self.opts.rep.is_none() {
            return Ok(adjoint_with(&self.rb()?, self.p()?));
        }
        self.lie_rep()
    }

    pub fn prelie_rep(&self) -> Result<PreLieRepresentation, CliError> {
        let (name, data) = self.rep_data()?;
        let right = data
            .right
            .clone()
            .ok_or_else(|| CliError::Input(format!("representation {name:?} has no \"right\" action")))?;
        Ok(PreLieRepresentation::unchecked(self.prelie()?, data.module.clone(), data.matrices.clone(), right)?)
    }

    pub fn is_prelie_rep(&self) -> Result<bool, CliError> {
        Ok(self.rep_data()?.1.right.is_some())
    }

    /// The partner document, read with default options: its own single
    /// representation and its own `Q`.
    pub fn partner(&self) -> Result<View<'a>, CliError> {
        static DEFAULTS: LazyLock<Options> = LazyLock::new(Options::default);
        let p = self.doc.partner.as_deref().ok_or_else(|| missing("partner document"))?;
        Ok(View { doc: p, opts: &DEFAULTS })
    }
}
