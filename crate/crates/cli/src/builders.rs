//! The `derive --op` strategies. Each returns a new document; builders
//! that stay on the input space keep the input's structures.

use rbla_core::bialgebra::{build_manin_triple_rb, induce_sld_bialgebra, RBLieBialgebra, SLDBialgebra};
use rbla_core::cybe::{
    bialgebras_from_o, canonical_r_from_prelie, coboundary_delta, cor_cons1, cor_cons2, iterate_family,
    lift_o_operator, sld_from_o, CYBESolution,
};
use rbla_core::lie::{adjoint_operator_wrt_form, dual_representation, semidirect_product_lie};
use rbla_core::prelie::{
    dual_prelie_representation, induce_prelie, special_from_admissible, special_from_left_invariant_form,
    subadjacent_lie, PreLieAlgebra, RBPreLieAlgebra,
};
use rbla_core::product::dualize_coproduct;
use rbla_core::rota_baxter::{semidirect_product_rb, RBLieAlgebra};
use rbla_core::{Matrix, Space};

use crate::context::View;
use crate::document::{Document, Operator, RepData};
use crate::error::CliError;
use crate::registry::FnBuilder;

type Built = Result<Document, CliError>;

fn endo(space: &Space, matrix: Matrix) -> Operator {
    Operator { domain: space.clone(), codomain: space.clone(), matrix }
}

fn extended(v: &View) -> Document {
    v.doc.clone()
}

fn rb_doc(rb: &RBLieAlgebra) -> Document {
    let space = rb.space().clone();
    let mut doc = Document::on(space.clone());
    doc.weight = Some(rb.weight().clone());
    doc.products.insert("bracket".into(), rb.bracket().clone());
    doc.operators.insert("P".into(), endo(&space, rb.p().clone()));
    if let Some(q) = rb.q() {
        doc.operators.insert("Q".into(), endo(&space, q.clone()));
    }
    doc
}

fn solution_doc(sol: &CYBESolution) -> Document {
    let mut doc = rb_doc(&sol.rb);
    doc.operators.insert("Q".into(), endo(&sol.rb.space().clone(), sol.q.clone()));
    doc.tensors.insert("r".into(), sol.r.clone());
    doc
}

fn bialgebra_doc(b: &RBLieBialgebra) -> Document {
    let mut doc = rb_doc(b.rb());
    doc.operators.insert("Q".into(), endo(&b.rb().space().clone(), b.q().clone()));
    doc.coproducts.insert("delta".into(), b.delta().clone());
    doc
}

fn sld_doc(b: &SLDBialgebra) -> Document {
    let mut doc = Document::on(b.ldend.space().clone());
    doc.products.insert("tri_r".into(), b.ldend.tri_r().clone());
    doc.products.insert("tri_l".into(), b.ldend.tri_l().clone());
    doc.coproducts.insert("Delta".into(), b.delta.clone());
    doc.coproducts.insert("Nabla".into(), b.nabla.clone());
    doc
}

fn family_doc(v: &View, members: Vec<Document>) -> Document {
    Document { name: v.doc.name.clone(), family: members, ..Default::default() }
}

fn prelie_checked(v: &View) -> Result<PreLieAlgebra, CliError> {
    Ok(PreLieAlgebra::new(v.product("circ")?.clone())?)
}

fn rb_prelie(v: &View) -> Result<RBPreLieAlgebra, CliError> {
    Ok(RBPreLieAlgebra::new(prelie_checked(v)?, v.weight(), v.p()?)?)
}

fn rb_with_q(v: &View) -> Result<RBLieAlgebra, CliError> {
    Ok(v.rb_checked()?.with_q(v.q()?)?)
}

fn induce(v: &View) -> Built {
    let a = induce_prelie(&v.rb_checked()?)?;
    let mut doc = extended(v);
    doc.products.insert("circ".into(), a.product().clone());
    Ok(doc)
}

fn subadjacent(v: &View) -> Built {
    let g = subadjacent_lie(&prelie_checked(v)?);
    let mut doc = extended(v);
    doc.products.insert("bracket".into(), g.bracket().clone());
    Ok(doc)
}

/// Replaces the selected representation by its dual, named with a `*`.
/// The dual's `alpha` is `betaᵀ` and its `beta` is `alphaᵀ`.
fn dual_rep(v: &View) -> Built {
    let (name, data) = v.rep_data()?;
    let dual = if data.right.is_some() {
        let d = dual_prelie_representation(&v.prelie_rep()?);
        let n = d.algebra().dim();
        RepData {
            module: d.module().clone(),
            matrices: (0..n).map(|i| d.l(i).clone()).collect(),
            right: Some((0..n).map(|i| d.r(i).clone()).collect()),
            alpha: None,
            beta: None,
        }
    } else {
        let d = dual_representation(&v.lie_rep()?);
        RepData {
            module: d.module().clone(),
            matrices: d.matrices().to_vec(),
            right: None,
            alpha: data.beta.as_ref().map(Matrix::transpose),
            beta: data.alpha.as_ref().map(Matrix::transpose),
        }
    };
    let mut doc = extended(v);
    doc.representations.clear();
    doc.representations.insert(format!("{name}*"), dual);
    Ok(doc)
}

/// `P̂`, the adjoint of `P` with respect to `B`, stored as `Q`.
fn adjoint_op(v: &View) -> Built {
    let space = v.space()?;
    let p_hat = adjoint_operator_wrt_form(v.form()?, &v.p()?)?;
    let mut doc = extended(v);
    doc.operators.insert("Q".into(), endo(space, p_hat));
    Ok(doc)
}

fn semidirect(v: &View) -> Built {
    let g = semidirect_product_lie(&v.lie_rep()?)?;
    let mut doc = Document::on(g.space().clone());
    doc.products.insert("bracket".into(), g.bracket().clone());
    Ok(doc)
}

fn semidirect_rb(v: &View) -> Built {
    Ok(rb_doc(&semidirect_product_rb(&v.rb_checked()?, &v.lie_rep()?)?))
}

fn with_tables(v: &View, tri_r: &rbla_core::BilinearProduct, tri_l: &rbla_core::BilinearProduct) -> Document {
    let mut doc = extended(v);
    doc.products.insert("tri_r".into(), tri_r.clone());
    doc.products.insert("tri_l".into(), tri_l.clone());
    doc
}

fn special_ldend(v: &View) -> Built {
    let a = special_from_admissible(&v.rb_checked()?, &v.q()?)?;
    Ok(with_tables(v, a.tri_r(), a.tri_l()))
}

fn left_invariant_ldend(v: &View) -> Built {
    let a = special_from_left_invariant_form(&prelie_checked(v)?, v.form()?)?;
    Ok(with_tables(v, a.tri_r(), a.tri_l()))
}

fn double_manin(v: &View) -> Built {
    let g = rb_with_q(v)?;
    let bracket = dualize_coproduct(v.coproduct("delta")?);
    let mt = build_manin_triple_rb(&g, &bracket)?;
    let mut doc = rb_doc(&mt.double);
    doc.forms.insert("B".into(), mt.form.clone());
    Ok(doc)
}

fn coboundary(v: &View) -> Built {
    let delta = coboundary_delta(&v.lie_checked()?, v.tensor()?);
    let mut doc = extended(v);
    doc.coproducts.insert("delta".into(), delta);
    Ok(doc)
}

/// `beta` of the representation when it has one, the companion otherwise.
fn lift_o(v: &View) -> Built {
    let rb = v.rb_checked()?;
    let rep = v.lie_rep_or_adjoint()?;
    let q = v.q()?;
    let beta = rep.beta().cloned().unwrap_or_else(|| q.clone());
    Ok(solution_doc(&lift_o_operator(&rb, &rep, &v.t()?, &q, &beta)?))
}

fn from_o(v: &View) -> Built {
    let family = bialgebras_from_o(&v.rb_checked()?, &v.lie_rep_or_adjoint()?, &v.t()?)?;
    Ok(family_doc(v, family.iter().map(bialgebra_doc).collect()))
}

/// The solution on the double, with its three bialgebras as the family.
fn canonical_r(v: &View) -> Built {
    let (sol, family) = canonical_r_from_prelie(&rb_prelie(v)?)?;
    let mut doc = solution_doc(&sol);
    doc.name = v.doc.name.clone();
    doc.family = family.iter().map(bialgebra_doc).collect();
    Ok(doc)
}

fn induce_sld(v: &View) -> Built {
    let b = RBLieBialgebra::new(rb_with_q(v)?, v.coproduct("delta")?.clone())?;
    Ok(sld_doc(&induce_sld_bialgebra(&b)?))
}

/// Like `lift-o`, a representation without `beta` takes the companion.
fn from_o_sld(v: &View) -> Built {
    let q = v.q()?;
    let mut rep = v.lie_rep_or_adjoint()?;
    if rep.beta().is_none() {
        rep = rep.with_beta(q.clone())?;
    }
    Ok(sld_doc(&sld_from_o(&v.rb_checked()?, &rep, &q, &v.t()?)?))
}

fn cons1(v: &View) -> Built {
    Ok(sld_doc(&cor_cons1(&v.rb_checked()?, &v.q()?)?))
}

fn cons2(v: &View) -> Built {
    let pair = cor_cons2(&rb_prelie(v)?)?;
    Ok(family_doc(v, pair.iter().map(sld_doc).collect()))
}

fn iterate(v: &View) -> Built {
    let family = iterate_family(&v.rb_checked()?, v.opts.levels)?;
    Ok(family_doc(v, family.iter().map(sld_doc).collect()))
}

pub fn all() -> Vec<FnBuilder> {
    let b = |name, about, run| FnBuilder { name, about, run };
    vec![
        b("induce-prelie", "pre-Lie product circ induced by P", induce),
        b("subadjacent", "sub-adjacent bracket of circ", subadjacent),
        b("dual-rep", "dual of the selected representation", dual_rep),
        b("adjoint-op", "adjoint of P with respect to B, stored as Q", adjoint_op),
        b("semidirect", "semidirect product Lie algebra", semidirect),
        b("semidirect-rb", "semidirect product Rota-Baxter Lie algebra", semidirect_rb),
        b("special-ldend", "special L-dendriform algebra from an admissible Q", special_ldend),
        b("left-invariant-ldend", "special L-dendriform algebra from circ and B", left_invariant_ldend),
        b("double-manin", "Manin double of (bracket, P, Q, delta) with its pairing", double_manin),
        b("coboundary-delta", "coboundary coproduct of r", coboundary),
        b("lift-o", "lift of the O-operator T to a solution on the double", lift_o),
        b("bialgebras-from-o", "the three Rota-Baxter Lie bialgebras from T", from_o),
        b("canonical-r", "canonical solution from a Rota-Baxter pre-Lie algebra", canonical_r),
        b("induce-sld", "special L-dendriform bialgebra induced by the bialgebra", induce_sld),
        b("sld-from-o", "special L-dendriform bialgebra from T", from_o_sld),
        b("cons1", "special L-dendriform bialgebra from an admissible Q", cons1),
        b("cons2", "the two special L-dendriform bialgebras of a Rota-Baxter pre-Lie algebra", cons2),
        b("iterate-family", "special L-dendriform bialgebras over --levels levels", iterate),
    ]
}
