//! The `check --what` strategies.

use rbla_core::bialgebra::{
    check_cocycle, check_lie_coalgebra, check_manin_triple_rb, check_rb_lie_bialgebra, check_rb_lie_coalgebra,
    check_sld_bialgebra, check_sld_coalgebra, manin_double_candidate, manin_triple_prelie_from_rb,
    triple_equivalence, ManinTripleRB, RBLieBialgebra, SLDBialgebra,
};
use rbla_core::cybe::{
    check_admissible_cybe, check_o_operator, coboundary_conditions_general, coboundary_delta,
    verify_same_construction, CYBESolution,
};
use rbla_core::lie::{
    check_bilinear_form, check_lie, check_matched_pair_lie, check_representation, FormRequirements, LieAlgebra,
    MatchedPairLie,
};
use rbla_core::prelie::{
    check_ldendriform, check_matched_pair_prelie, check_prelie, check_prelie_representation, check_rb_prelie,
    MatchedPairPreLie,
};
use rbla_core::product::dualize_coproduct;
use rbla_core::rota_baxter::{
    check_admissible, check_matched_pair_rb, check_q_admissible, check_rb_operator, check_rb_representation,
    MatchedPairRB, RBLieAlgebra,
};
use rbla_core::CheckReport;

use crate::context::View;
use crate::error::CliError;
use crate::registry::FnChecker;

type Outcome = Result<CheckReport, CliError>;

fn lie(v: &View) -> Outcome {
    Ok(check_lie(v.product("bracket")?))
}

fn prelie(v: &View) -> Outcome {
    Ok(check_prelie(v.product("circ")?))
}

fn ldend(v: &View) -> Outcome {
    Ok(check_ldendriform(&v.ldendriform()?))
}

fn rb(v: &View) -> Outcome {
    let g = v.lie()?;
    let mut report = check_rb_operator(&g, &v.weight(), &v.p()?);
    report.add_part(check_lie(g.bracket()));
    Ok(report.finish())
}

fn rb_prelie(v: &View) -> Outcome {
    let a = v.prelie()?;
    let mut report = check_rb_prelie(&a, &v.weight(), &v.p()?);
    report.add_part(check_prelie(a.product()));
    Ok(report.finish())
}

fn rep(v: &View) -> Outcome {
    if v.is_prelie_rep()? {
        Ok(check_prelie_representation(&v.prelie_rep()?))
    } else {
        Ok(check_representation(&v.lie_rep()?))
    }
}

fn rb_rep(v: &View) -> Outcome {
    Ok(check_rb_representation(&v.rb()?, &v.lie_rep()?)?)
}

/// A representation's own `beta` when one is selected or present,
/// otherwise the companion `Q` on the adjoint representation.
fn admissible(v: &View) -> Outcome {
    let use_rep = v.opts.q.is_none() && (v.opts.rep.is_some() || !v.doc.representations.is_empty());
    if use_rep {
        Ok(check_admissible(&v.rb()?, &v.lie_rep()?)?)
    } else {
        Ok(check_q_admissible(&v.rb()?, &v.q()?))
    }
}

fn form(v: &View) -> Outcome {
    Ok(check_bilinear_form(&v.lie()?, v.form()?, FormRequirements::ALL))
}

fn lie_coalg(v: &View) -> Outcome {
    Ok(check_lie_coalgebra(v.coproduct("delta")?))
}

fn rb_coalg(v: &View) -> Outcome {
    Ok(check_rb_lie_coalgebra(v.coproduct("delta")?, &v.q()?, &v.weight()))
}

fn lie_bialg(v: &View) -> Outcome {
    let g = v.lie()?;
    let delta = v.coproduct("delta")?;
    let mut report = CheckReport::new("lie-bialgebra");
    report.add_part(check_lie(g.bracket()));
    report.add_part(check_lie_coalgebra(delta));
    report.add_part(check_cocycle(&g, delta));
    Ok(report.finish())
}

fn with_q(v: &View) -> Result<RBLieAlgebra, CliError> {
    Ok(v.rb()?.with_q_unchecked(v.q()?)?)
}

fn rb_bialgebra(v: &View) -> Result<RBLieBialgebra, CliError> {
    Ok(RBLieBialgebra::unchecked(with_q(v)?, v.coproduct("delta")?.clone())?)
}

fn rb_bialg(v: &View) -> Outcome {
    Ok(check_rb_lie_bialgebra(&rb_bialgebra(v)?))
}

fn sld_coalg(v: &View) -> Outcome {
    Ok(check_sld_coalgebra(v.coproduct("Delta")?, v.coproduct("Nabla")?))
}

fn sld_bialg(v: &View) -> Outcome {
    let b = SLDBialgebra::new(v.ldendriform()?, v.coproduct("Delta")?.clone(), v.coproduct("Nabla")?.clone())?;
    Ok(check_sld_bialgebra(&b))
}

fn matched_pair(v: &View) -> Outcome {
    let mp = MatchedPairLie::new(v.lie_rep()?, v.partner()?.lie_rep()?)?;
    Ok(check_matched_pair_lie(&mp))
}

fn matched_pair_rb(v: &View) -> Outcome {
    let other = v.partner()?;
    let mp = MatchedPairRB::new(v.rb()?, other.rb()?, v.lie_rep()?, other.lie_rep()?)?;
    Ok(check_matched_pair_rb(&mp))
}

fn matched_pair_prelie(v: &View) -> Outcome {
    let mp = MatchedPairPreLie::new(v.prelie_rep()?, v.partner()?.prelie_rep()?)?;
    Ok(check_matched_pair_prelie(&mp))
}

/// `(g*, Qᵀ)` with the bracket dual to `delta`.
pub fn dual_side(v: &View) -> Result<(RBLieAlgebra, RBLieAlgebra), CliError> {
    let g = with_q(v)?;
    let bracket = dualize_coproduct(v.coproduct("delta")?).with_space(g.space().dual())?;
    let q = g.q().expect("companion attached").transpose();
    let gstar = RBLieAlgebra::unchecked(LieAlgebra::unchecked(bracket), g.weight().clone(), q)?;
    Ok((g, gstar))
}

fn manin_triple(v: &View) -> Result<ManinTripleRB, CliError> {
    let (g, gstar) = dual_side(v)?;
    Ok(manin_double_candidate(&g, &gstar)?)
}

fn manin_rb(v: &View) -> Outcome {
    Ok(check_manin_triple_rb(&manin_triple(v)?))
}

fn manin_prelie(v: &View) -> Outcome {
    Ok(manin_triple_prelie_from_rb(&manin_triple(v)?)?.1)
}

fn solution(v: &View) -> Result<CYBESolution, CliError> {
    Ok(CYBESolution::new(v.rb()?, v.q()?, v.tensor()?.clone())?)
}

fn cybe(v: &View) -> Outcome {
    Ok(check_admissible_cybe(&solution(v)?))
}

fn o_operator(v: &View) -> Outcome {
    Ok(check_o_operator(&v.rb()?, &v.lie_rep_or_adjoint()?, &v.t()?)?)
}

fn cond_coboundary(v: &View) -> Outcome {
    Ok(coboundary_conditions_general(&v.rb()?, &v.q()?, v.tensor()?)?)
}

/// Uses the document's `delta` when present, the coboundary of `r` otherwise.
fn same_construction(v: &View) -> Outcome {
    let r = v.tensor()?;
    let delta = match v.coproduct("delta") {
        Ok(d) => d.clone(),
        Err(_) => coboundary_delta(&v.lie()?, r),
    };
    let b = RBLieBialgebra::unchecked(with_q(v)?, delta)?;
    Ok(verify_same_construction(&b, r)?)
}

fn equivalence(v: &View) -> Outcome {
    let (g, gstar) = dual_side(v)?;
    Ok(triple_equivalence(&g, &gstar)?)
}

pub fn all() -> Vec<FnChecker> {
    let c = |name, about, run| FnChecker { name, about, run };
    vec![
        c("lie", "antisymmetry and Jacobi identity of bracket", lie),
        c("prelie", "pre-Lie identity of circ", prelie),
        c("ldend", "L-dendriform identities of tri_r and tri_l", ldend),
        c("rb", "Rota-Baxter identity of P on bracket at the document weight", rb),
        c("rb-prelie", "Rota-Baxter identity of P on circ", rb_prelie),
        c("rep", "Lie representation, or pre-Lie representation when right actions are given", rep),
        c("rb-rep", "Rota-Baxter representation with alpha", rb_rep),
        c("admissible", "admissibility of beta, or of the companion Q when --q is given", admissible),
        c("form", "invariance, symmetry and nondegeneracy of B", form),
        c("lie-coalg", "Lie coalgebra delta", lie_coalg),
        c("rb-coalg", "Rota-Baxter Lie coalgebra (delta, Q)", rb_coalg),
        c("lie-bialg", "Lie bialgebra (bracket, delta)", lie_bialg),
        c("rb-bialg", "all axioms of a Rota-Baxter Lie bialgebra", rb_bialg),
        c("sld-coalg", "special L-dendriform coalgebra (Delta, Nabla)", sld_coalg),
        c("sld-bialg", "special L-dendriform bialgebra", sld_bialg),
        c("matched-pair", "Lie matched pair with the partner document", matched_pair),
        c("matched-pair-rb", "Rota-Baxter matched pair with the partner document", matched_pair_rb),
        c("matched-pair-prelie", "pre-Lie matched pair with the partner document", matched_pair_prelie),
        c("manin-rb", "Manin triple of Rota-Baxter Lie algebras on the double", manin_rb),
        c("manin-prelie", "induced Manin triple of pre-Lie algebras", manin_prelie),
        c("cybe", "admissible classical Yang-Baxter equation for r", cybe),
        c("o-operator", "O-operator T on the selected or adjoint representation", o_operator),
        c("cond-coboundary", "conditions for the coboundary of r to be a Rota-Baxter bialgebra", cond_coboundary),
        c("same-construction", "induced and coboundary L-dendriform coproducts agree", same_construction),
        c("triple-equivalence", "Manin triple, matched pair and bialgebra verdicts agree", equivalence),
    ]
}
