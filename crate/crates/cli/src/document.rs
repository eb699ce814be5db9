//! The `rbla/1` JSON structure document: a serde layer that mirrors the
//! file, and a resolved [`Document`] holding exact matrices and tensors.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use rbla_core::lie::BilinearForm;
use rbla_core::linalg::{Matrix, Tensor2};
use rbla_core::product::{BilinearProduct, Coproduct};
use rbla_core::scalar::{self, zero};
use rbla_core::space::Space;
use rbla_core::Scalar;
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::CliError;

pub const FORMAT: &str = "rbla/1";
pub const PRODUCT_NAMES: [&str; 4] = ["bracket", "circ", "tri_r", "tri_l"];
pub const COPRODUCT_NAMES: [&str; 3] = ["delta", "Delta", "Nabla"];
const DEFAULT_MAX_DIM: usize = 16;

/// A JSON object whose keys must be distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct UniqueMap<V>(pub BTreeMap<String, V>);

impl<V> Default for UniqueMap<V> {
    fn default() -> Self {
        Self(BTreeMap::new())
    }
}

impl<V> UniqueMap<V> {
    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for UniqueMap<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Unique<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for Unique<V> {
            type Value = UniqueMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with distinct keys")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((key, value)) = access.next_entry::<String, V>()? {
                    if out.contains_key(&key) {
                        return Err(serde::de::Error::custom(format!("duplicate name {key:?}")));
                    }
                    out.insert(key, value);
                }
                Ok(UniqueMap(out))
            }
        }

        d.deserialize_map(Unique(PhantomData))
    }
}

impl<V: Serialize> Serialize for UniqueMap<V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Coordinates keyed by basis label, scalars as strings.
pub type RawCombination = UniqueMap<String>;
/// Image of each basis vector.
pub type RawColumns = UniqueMap<RawCombination>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSpace {
    pub name: String,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawProductEntry {
    pub left: String,
    pub right: String,
    pub value: RawCombination,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawProduct {
    #[serde(default, skip_serializing_if = "is_false")]
    pub antisymmetrize: bool,
    #[serde(default)]
    pub entries: Vec<RawProductEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOperator {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codomain: Option<String>,
    pub columns: RawColumns,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScalarEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawForm {
    #[serde(default, skip_serializing_if = "is_false")]
    pub symmetrize: bool,
    #[serde(default)]
    pub entries: Vec<RawScalarEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRepresentation {
    pub module: RawSpace,
    /// `ρ(x)` for a Lie representation, `l(x)` for a pre-Lie one.
    pub matrices: UniqueMap<RawColumns>,
    /// `r(x)`, present for pre-Lie representations only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<UniqueMap<RawColumns>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<RawColumns>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<RawColumns>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    pub format: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<RawSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(default, skip_serializing_if = "UniqueMap::is_empty")]
    pub products: UniqueMap<RawProduct>,
    #[serde(default, skip_serializing_if = "UniqueMap::is_empty")]
    pub operators: UniqueMap<RawOperator>,
    #[serde(default, skip_serializing_if = "UniqueMap::is_empty")]
    pub forms: UniqueMap<RawForm>,
    #[serde(default, skip_serializing_if = "UniqueMap::is_empty")]
    pub coproducts: UniqueMap<UniqueMap<Vec<RawScalarEntry>>>,
    #[serde(default, skip_serializing_if = "UniqueMap::is_empty")]
    pub tensors: UniqueMap<Vec<RawScalarEntry>>,
    #[serde(default, skip_serializing_if = "UniqueMap::is_empty")]
    pub representations: UniqueMap<RawRepresentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<Box<RawDocument>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub family: Vec<RawDocument>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// A linear map between two of the document's spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    pub domain: Space,
    pub codomain: Space,
    pub matrix: Matrix,
}

/// Representation data, interpreted as a Lie representation of `bracket`
/// or, when `right` is present, a pre-Lie representation of `circ`.
#[derive(Debug, Clone, PartialEq)]
pub struct RepData {
    pub module: Space,
    pub matrices: Vec<Matrix>,
    pub right: Option<Vec<Matrix>>,
    pub alpha: Option<Matrix>,
    pub beta: Option<Matrix>,
}

/// A validated structure document.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub name: Option<String>,
    pub space: Option<Space>,
    pub weight: Option<Scalar>,
    pub products: BTreeMap<String, BilinearProduct>,
    pub operators: BTreeMap<String, Operator>,
    pub forms: BTreeMap<String, BilinearForm>,
    pub coproducts: BTreeMap<String, Coproduct>,
    pub tensors: BTreeMap<String, Tensor2>,
    pub representations: BTreeMap<String, RepData>,
    pub partner: Option<Box<Document>>,
    pub family: Vec<Document>,
}

impl Document {
    pub fn on(space: Space) -> Self {
        Self { space: Some(space), ..Default::default() }
    }
}

/// Largest accepted dimension, from `RBLA_MAX_DIM`.
pub fn max_dim() -> Result<usize, CliError> {
    match std::env::var("RBLA_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Input(format!("RBLA_MAX_DIM: expected a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

pub fn parse(text: &str) -> Result<Document, CliError> {
    parse_bounded(text, max_dim()?)
}

/// [`parse`] with an explicit dimension bound instead of `RBLA_MAX_DIM`.
pub fn parse_bounded(text: &str, max_dim: usize) -> Result<Document, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed document: {e}")))?;
    resolve(&raw, "$", max_dim)
}

pub fn serialize(doc: &Document) -> String {
    let mut text = serde_json::to_string_pretty(&unresolve(doc)).expect("documents serialize");
    text.push('\n');
    text
}

struct Ctx<'a> {
    path: String,
    spaces: Vec<&'a Space>,
}

impl Ctx<'_> {
    fn at(&self, suffix: impl fmt::Display) -> String {
        format!("{}.{}", self.path, suffix)
    }

    fn space(&self, name: &str, path: &str) -> Result<Space, CliError> {
        self.spaces
            .iter()
            .find(|s| s.name() == name)
            .map(|s| (*s).clone())
            .ok_or_else(|| CliError::Input(format!("{path}: unknown space {name:?}")))
    }
}

fn err(path: &str, msg: impl fmt::Display) -> CliError {
    CliError::Input(format!("{path}: {msg}"))
}

fn scalar_at(text: &str, path: &str) -> Result<Scalar, CliError> {
    scalar::parse(text).map_err(|e| err(path, e))
}

fn index_at(space: &Space, label: &str, path: &str) -> Result<usize, CliError> {
    space
        .index_of(label)
        .ok_or_else(|| err(path, format!("unknown basis label {label:?} in space {:?}", space.name())))
}

fn space_at(raw: &RawSpace, path: &str, max: usize) -> Result<Space, CliError> {
    if raw.basis.len() > max {
        return Err(err(path, format!("dimension {} exceeds RBLA_MAX_DIM = {max}", raw.basis.len())));
    }
    Space::new(raw.name.clone(), raw.basis.clone()).map_err(|e| err(path, e))
}

fn combination(raw: &RawCombination, space: &Space, path: &str) -> Result<Vec<Scalar>, CliError> {
    let mut v = vec![zero(); space.dim()];
    for (label, text) in &raw.0 {
        let p = format!("{path}.{label}");
        v[index_at(space, label, &p)?] = scalar_at(text, &p)?;
    }
    Ok(v)
}

fn columns(raw: &RawColumns, domain: &Space, codomain: &Space, path: &str) -> Result<Matrix, CliError> {
    let mut m = Matrix::zeros(codomain.dim(), domain.dim());
    for (label, image) in &raw.0 {
        let p = format!("{path}.{label}");
        let j = index_at(domain, label, &p)?;
        for (i, c) in combination(image, codomain, &p)?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

fn product(raw: &RawProduct, space: &Space, path: &str) -> Result<BilinearProduct, CliError> {
    let mut p = BilinearProduct::zero(space.clone());
    let mut seen = std::collections::BTreeSet::new();
    for (k, e) in raw.entries.iter().enumerate() {
        let ep = format!("{path}.entries[{k}]");
        let i = index_at(space, &e.left, &format!("{ep}.left"))?;
        let j = index_at(space, &e.right, &format!("{ep}.right"))?;
        if !seen.insert((i, j)) {
            return Err(err(&ep, format!("duplicate entry ({}, {})", e.left, e.right)));
        }
        if raw.antisymmetrize && seen.contains(&(j, i)) && i != j {
            return Err(err(&ep, format!("({}, {}) is implied by antisymmetry", e.left, e.right)));
        }
        for (c, v) in combination(&e.value, space, &format!("{ep}.value"))?.into_iter().enumerate() {
            p.set(i, j, c, v);
        }
    }
    if raw.antisymmetrize {
        p.antisymmetrize_completion();
    }
    Ok(p)
}

fn tensor(entries: &[RawScalarEntry], space: &Space, path: &str) -> Result<Tensor2, CliError> {
    let mut t = Tensor2::zeros(space.dim(), space.dim());
    let mut seen = std::collections::BTreeSet::new();
    for (k, e) in entries.iter().enumerate() {
        let ep = format!("{path}[{k}]");
        let i = index_at(space, &e.left, &format!("{ep}.left"))?;
        let j = index_at(space, &e.right, &format!("{ep}.right"))?;
        if !seen.insert((i, j)) {
            return Err(err(&ep, format!("duplicate entry ({}, {})", e.left, e.right)));
        }
        t.set(i, j, scalar_at(&e.value, &format!("{ep}.value"))?);
    }
    Ok(t)
}

fn matrix_list(raw: &UniqueMap<RawColumns>, g: &Space, v: &Space, path: &str) -> Result<Vec<Matrix>, CliError> {
    let mut out = vec![Matrix::zeros(v.dim(), v.dim()); g.dim()];
    for (label, cols) in &raw.0 {
        let p = format!("{path}.{label}");
        out[index_at(g, label, &p)?] = columns(cols, v, v, &p)?;
    }
    Ok(out)
}

fn resolve(raw: &RawDocument, path: &str, max: usize) -> Result<Document, CliError> {
    if raw.format != FORMAT {
        return Err(err(&format!("{path}.format"), format!("expected {FORMAT:?}, found {:?}", raw.format)));
    }
    let mut doc = Document { name: raw.name.clone(), ..Default::default() };
    if let Some(w) = &raw.weight {
        doc.weight = Some(scalar_at(w, &format!("{path}.weight"))?);
    }
    for (k, member) in raw.family.iter().enumerate() {
        doc.family.push(resolve(member, &format!("{path}.family[{k}]"), max)?);
    }
    if let Some(p) = &raw.partner {
        doc.partner = Some(Box::new(resolve(p, &format!("{path}.partner"), max)?));
    }
    let space = match &raw.space {
        Some(s) => space_at(s, &format!("{path}.space"), max)?,
        None => {
            let has_structure = !raw.products.is_empty()
                || !raw.operators.is_empty()
                || !raw.forms.is_empty()
                || !raw.coproducts.is_empty()
                || !raw.tensors.is_empty()
                || !raw.representations.is_empty();
            if has_structure {
                return Err(err(path, "structures need a \"space\""));
            }
            return Ok(doc);
        }
    };

    let mut modules = BTreeMap::new();
    for (name, rep) in &raw.representations.0 {
        let p = format!("{path}.representations.{name}.module");
        modules.insert(name.clone(), space_at(&rep.module, &p, max)?);
    }
    let mut declared: Vec<(&Space, String)> = vec![(&space, format!("{path}.space"))];
    declared.extend(modules.iter().map(|(n, m)| (m, format!("{path}.representations.{n}.module"))));
    if let Some(p) = doc.partner.as_ref().and_then(|p| p.space.as_ref()) {
        declared.push((p, format!("{path}.partner.space")));
    }
    for (k, (a, at)) in declared.iter().enumerate() {
        if let Some((b, first)) = declared[..k].iter().find(|(b, _)| b.name() == a.name() && b != a) {
            let msg = if a.dim() != b.dim() {
                format!("dimension mismatch: space {:?} has dimension {} here and {} at {first}", a.name(), a.dim(), b.dim())
            } else {
                format!("space {:?} has a different basis at {first}", a.name())
            };
            return Err(err(at, msg));
        }
    }
    let dual = space.dual();
    let module_duals: Vec<Space> = modules.values().map(Space::dual).collect();
    let partner_space = doc.partner.as_ref().and_then(|p| p.space.clone());
    let mut spaces: Vec<&Space> = vec![&space, &dual];
    spaces.extend(modules.values());
    spaces.extend(module_duals.iter());
    spaces.extend(partner_space.iter());
    let ctx = Ctx { path: path.to_string(), spaces };

    for (name, raw_p) in &raw.products.0 {
        let p = ctx.at(format_args!("products.{name}"));
        if !PRODUCT_NAMES.contains(&name.as_str()) {
            return Err(err(&p, format!("unknown product name; expected one of {PRODUCT_NAMES:?}")));
        }
        doc.products.insert(name.clone(), product(raw_p, &space, &p)?);
    }
    if raw.products.is_empty() {
        // a document without products describes the zero algebra
        doc.products.insert("bracket".into(), BilinearProduct::zero(space.clone()));
    }
    for (name, raw_o) in &raw.operators.0 {
        let p = ctx.at(format_args!("operators.{name}"));
        let domain = match &raw_o.domain {
            Some(d) => ctx.space(d, &format!("{p}.domain"))?,
            None => space.clone(),
        };
        let codomain = match &raw_o.codomain {
            Some(c) => ctx.space(c, &format!("{p}.codomain"))?,
            None => space.clone(),
        };
        let matrix = columns(&raw_o.columns, &domain, &codomain, &format!("{p}.columns"))?;
        doc.operators.insert(name.clone(), Operator { domain, codomain, matrix });
    }
    for (name, raw_f) in &raw.forms.0 {
        let p = ctx.at(format_args!("forms.{name}"));
        let mut m = Matrix::zeros(space.dim(), space.dim());
        let mut seen = std::collections::BTreeSet::new();
        for (k, e) in raw_f.entries.iter().enumerate() {
            let ep = format!("{p}.entries[{k}]");
            let i = index_at(&space, &e.left, &format!("{ep}.left"))?;
            let j = index_at(&space, &e.right, &format!("{ep}.right"))?;
            if !seen.insert((i, j)) || (raw_f.symmetrize && i != j && seen.contains(&(j, i))) {
                return Err(err(&ep, format!("duplicate entry ({}, {})", e.left, e.right)));
            }
            let v = scalar_at(&e.value, &format!("{ep}.value"))?;
            if raw_f.symmetrize {
                m.set(j, i, v.clone());
            }
            m.set(i, j, v);
        }
        doc.forms.insert(name.clone(), BilinearForm::new(space.clone(), m).map_err(|e| err(&p, e))?);
    }
    for (name, raw_c) in &raw.coproducts.0 {
        let p = ctx.at(format_args!("coproducts.{name}"));
        if !COPRODUCT_NAMES.contains(&name.as_str()) {
            return Err(err(&p, format!("unknown coproduct name; expected one of {COPRODUCT_NAMES:?}")));
        }
        let mut cols = vec![Tensor2::zeros(space.dim(), space.dim()); space.dim()];
        for (label, entries) in &raw_c.0 {
            let cp = format!("{p}.{label}");
            cols[index_at(&space, label, &cp)?] = tensor(entries, &space, &cp)?;
        }
        doc.coproducts.insert(name.clone(), Coproduct::from_columns(space.clone(), cols).map_err(|e| err(&p, e))?);
    }
    for (name, entries) in &raw.tensors.0 {
        let p = ctx.at(format_args!("tensors.{name}"));
        doc.tensors.insert(name.clone(), tensor(entries, &space, &p)?);
    }
    for (name, raw_r) in &raw.representations.0 {
        let p = ctx.at(format_args!("representations.{name}"));
        let module = modules[name].clone();
        let matrices = matrix_list(&raw_r.matrices, &space, &module, &format!("{p}.matrices"))?;
        let right = match &raw_r.right {
            Some(r) => Some(matrix_list(r, &space, &module, &format!("{p}.right"))?),
            None => None,
        };
        let op = |c: &Option<RawColumns>, key: &str| -> Result<Option<Matrix>, CliError> {
            c.as_ref().map(|c| columns(c, &module, &module, &format!("{p}.{key}"))).transpose()
        };
        let alpha = op(&raw_r.alpha, "alpha")?;
        let beta = op(&raw_r.beta, "beta")?;
        doc.representations.insert(name.clone(), RepData { module, matrices, right, alpha, beta });
    }
    doc.space = Some(space);
    Ok(doc)
}

fn raw_space(s: &Space) -> RawSpace {
    RawSpace { name: s.name().to_string(), basis: s.labels().to_vec() }
}

fn raw_combination(v: &[Scalar], space: &Space) -> RawCombination {
    UniqueMap(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| (space.label(i).to_string(), scalar::format(c)))
            .collect(),
    )
}

fn raw_columns(m: &Matrix, domain: &Space, codomain: &Space) -> RawColumns {
    UniqueMap(
        (0..m.cols())
            .map(|j| (j, raw_combination(&m.column(j), codomain)))
            .filter(|(_, c)| !c.is_empty())
            .map(|(j, c)| (domain.label(j).to_string(), c))
            .collect(),
    )
}

fn raw_tensor(t: &Tensor2, space: &Space) -> Vec<RawScalarEntry> {
    t.nonzeros()
        .map(|(i, j, c)| RawScalarEntry {
            left: space.label(i).to_string(),
            right: space.label(j).to_string(),
            value: scalar::format(c),
        })
        .collect()
}

fn raw_matrix_list(ms: &[Matrix], g: &Space, v: &Space) -> UniqueMap<RawColumns> {
    UniqueMap(
        ms.iter()
            .enumerate()
            .map(|(i, m)| (g.label(i).to_string(), raw_columns(m, v, v)))
            .filter(|(_, c)| !c.is_empty())
            .collect(),
    )
}

/// Canonical serde form: full product tables, nonzero entries only, basis
/// order within each list.
pub fn unresolve(doc: &Document) -> RawDocument {
    let mut raw = RawDocument {
        format: FORMAT.to_string(),
        name: doc.name.clone(),
        space: doc.space.as_ref().map(raw_space),
        weight: doc.weight.as_ref().map(scalar::format),
        products: UniqueMap::default(),
        operators: UniqueMap::default(),
        forms: UniqueMap::default(),
        coproducts: UniqueMap::default(),
        tensors: UniqueMap::default(),
        representations: UniqueMap::default(),
        partner: doc.partner.as_ref().map(|p| Box::new(unresolve(p))),
        family: doc.family.iter().map(unresolve).collect(),
    };
    let Some(space) = &doc.space else {
        return raw;
    };
    for (name, p) in &doc.products {
        let n = space.dim();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let value = raw_combination(&p.basis_product(i, j), space);
                if !value.is_empty() {
                    entries.push(RawProductEntry {
                        left: space.label(i).to_string(),
                        right: space.label(j).to_string(),
                        value,
                    });
                }
            }
        }
        raw.products.0.insert(name.clone(), RawProduct { antisymmetrize: false, entries });
    }
    for (name, op) in &doc.operators {
        let name_of = |s: &Space| (s != space).then(|| s.name().to_string());
        raw.operators.0.insert(
            name.clone(),
            RawOperator {
                domain: name_of(&op.domain),
                codomain: name_of(&op.codomain),
                columns: raw_columns(&op.matrix, &op.domain, &op.codomain),
            },
        );
    }
    for (name, f) in &doc.forms {
        let entries = raw_tensor(&Tensor2::from_coeffs(f.matrix().clone()), space);
        raw.forms.0.insert(name.clone(), RawForm { symmetrize: false, entries });
    }
    for (name, d) in &doc.coproducts {
        let cols = (0..space.dim())
            .map(|i| (space.label(i).to_string(), raw_tensor(d.column(i), space)))
            .filter(|(_, e)| !e.is_empty())
            .collect();
        raw.coproducts.0.insert(name.clone(), UniqueMap(cols));
    }
    for (name, t) in &doc.tensors {
        raw.tensors.0.insert(name.clone(), raw_tensor(t, space));
    }
    for (name, r) in &doc.representations {
        let v = &r.module;
        raw.representations.0.insert(
            name.clone(),
            RawRepresentation {
                module: raw_space(v),
                matrices: raw_matrix_list(&r.matrices, space, v),
                right: r.right.as_ref().map(|m| raw_matrix_list(m, space, v)),
                alpha: r.alpha.as_ref().map(|m| raw_columns(m, v, v)),
                beta: r.beta.as_ref().map(|m| raw_columns(m, v, v)),
            },
        );
    }
    raw
}
