//! Biconditional suites over the small corpus and seeded corruptions. Each
//! suite evaluates both sides of an equivalence independently on every
//! instance and records whether the verdicts agree. Shared by the corpus
//! tests and the acceptance target.

#![allow(dead_code)]

use rbla_core::bialgebra::{
    check_rb_lie_bialgebra, check_sld_bialgebra, coadjoint_matched_pair, induce_sld_bialgebra, triple_equivalence,
    RBLieBialgebra,
};
use rbla_core::cybe::{
    build_coboundary_rb_bialgebra, check_admissible_cybe, check_solution_criteria, coboundary_delta, cybe_tensor,
    iterate_family, lift_candidate, lift_o_operator, standard_pairs, verify_same_construction, CYBESolution,
};
use rbla_core::fixtures::{
    ab2, na2_corpus, sl2, sl2_form, sl2_p_hat, sl2_reference_prelie_table, sl2_tri_l_table,
};
use rbla_core::lie::{adjoint_operator_wrt_form, adjoint_rep, dual_representation, LieAlgebra, Representation};
use rbla_core::linalg::{Matrix, Tensor2};
use rbla_core::prelie::{adjoint_with, induce_prelie, special_from_admissible};
use rbla_core::product::dualize_coproduct;
use rbla_core::rota_baxter::*;
use rbla_core::scalar::int;
use rbla_core::CheckReport;

#[derive(Debug, Default)]
pub struct Outcome {
    pub name: &'static str,
    pub instances: usize,
    pub passing: usize,
    pub failing: usize,
    pub disagreements: Vec<String>,
}

impl Outcome {
    fn new(name: &'static str) -> Self {
        Self { name, ..Default::default() }
    }

    fn record(&mut self, label: String, left: bool, right: bool) {
        self.record_all(label, &[left, right]);
    }

    fn record_all(&mut self, label: String, verdicts: &[bool]) {
        self.instances += 1;
        if verdicts.iter().any(|v| *v != verdicts[0]) {
            self.disagreements.push(format!("{label}: {verdicts:?}"));
        } else if verdicts[0] {
            self.passing += 1;
        } else {
            self.failing += 1;
        }
    }

    /// Every instance agrees, and both verdicts actually occur.
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty() && self.passing > 0 && self.failing > 0
    }

    pub fn line(&self) -> String {
        format!(
            "{}: {} instances, {} pass, {} fail, {} disagreements",
            self.name,
            self.instances,
            self.passing,
            self.failing,
            self.disagreements.len()
        )
    }
}

/// The abelian plane with a few operators, every corpus member of the
/// non-abelian plane, and sl(2).
pub fn instances() -> Vec<(String, RBLieAlgebra)> {
    let mut out = Vec::new();
    for w in [0, 1, -1] {
        for p in [[0, 0, 0, 0], [1, 2, -1, 0], [2, 0, 0, -1]] {
            let m = Matrix::from_rows(&[&p[0..2], &p[2..4]]);
            out.push((format!("ab2 w={w} P={p:?}"), ab2(int(w), m)));
        }
    }
    for (k, rb) in na2_corpus().into_iter().enumerate() {
        out.push((format!("na2 #{k} w={}", rb.weight()), rb));
    }
    out.push(("sl2".into(), sl2()));
    out
}

/// Adds one to a single entry chosen by `seed`.
pub fn corrupt(m: &Matrix, seed: usize) -> Matrix {
    let n = m.rows();
    let (i, j) = (seed % n, (seed / n + 1) % m.cols());
    let mut out = m.clone();
    out.set(i, j, m.get(i, j) + int(1));
    out
}

fn part_passed(report: &CheckReport, name: &str) -> bool {
    report.find_part(name).unwrap_or_else(|| panic!("report has no part {name:?}")).passed()
}

/// Candidate companions: the three standard ones and two corruptions.
fn companions(rb: &RBLieAlgebra, seed: usize) -> Vec<Matrix> {
    let mut qs = standard_admissibles(rb);
    qs.push(corrupt(&qs[0], seed));
    qs.push(corrupt(&qs[2], seed + 1));
    qs
}

/// β admissible directly ⇔ `(ρ*, β*)` is a Rota-Baxter representation.
pub fn admissibility_duality() -> Outcome {
    let mut out = Outcome::new("(a) admissible <=> dual rb-representation");
    for (k, (label, rb)) in instances().into_iter().enumerate() {
        for (t, beta) in companions(&rb, k).into_iter().enumerate() {
            let rep = adjoint_rep(rb.lie()).with_beta(beta).unwrap();
            let report = check_admissible(&rb, &rep).unwrap();
            out.record(
                format!("{label} beta#{t}"),
                part_passed(&report, "admissibility"),
                part_passed(&report, "dual rb-representation"),
            );
        }
    }
    out
}

/// The semidirect operator `P + α` is Rota-Baxter ⇔ `(ρ, α)` is a
/// Rota-Baxter representation.
pub fn semidirect_biconditional() -> Outcome {
    let mut out = Outcome::new("(b) semidirect rb <=> rb-representation");
    for (k, (label, rb)) in instances().into_iter().enumerate() {
        let n = rb.dim();
        let mut reps: Vec<Representation> = Vec::new();
        for alpha in [rb.p().clone(), Matrix::zeros(n, n), -&rb.lambda_id(), corrupt(rb.p(), k), Matrix::identity(n)] {
            reps.push(adjoint_rep(rb.lie()).with_alpha(alpha).unwrap());
        }
        for q in companions(&rb, k) {
            reps.push(dual_representation(&adjoint_rep(rb.lie())).with_alpha(q.transpose()).unwrap());
        }
        for (t, rep) in reps.iter().enumerate() {
            let lhs = check_rb_representation(&rb, rep).unwrap().passed();
            let double = semidirect_rb_candidate(&rb, rep).unwrap();
            let rhs = check_rb_operator(double.lie(), double.weight(), double.p()).passed();
            out.record(format!("{label} rep#{t}"), lhs, rhs);
        }
    }
    out
}

/// Two duals for each instance: abelian, and the one dual to the
/// coboundary coproduct of `e1 ∧ e2` (or `x ∧ h` on sl(2)).
fn dual_brackets(rb: &RBLieAlgebra) -> Vec<LieAlgebra> {
    let n = rb.dim();
    let mut r = Tensor2::zeros(n, n);
    r.set(0, 1, int(1));
    r.set(1, 0, int(-1));
    let delta = coboundary_delta(rb.lie(), &r);
    let dual = dualize_coproduct(&delta).with_space(rb.space().dual()).unwrap();
    vec![LieAlgebra::abelian(rb.space().dual()), LieAlgebra::unchecked(dual)]
}

/// `(g ⋈ g*, P + Q*)` is Rota-Baxter ⇔ the coadjoint pair is a matched
/// pair of Rota-Baxter Lie algebras.
pub fn bowtie_biconditional() -> Outcome {
    let mut out = Outcome::new("(c) rb bowtie <=> rb matched pair");
    for (k, (label, rb)) in instances().into_iter().enumerate() {
        for (d, dual) in dual_brackets(&rb).into_iter().enumerate() {
            for (t, q) in companions(&rb, k).into_iter().enumerate() {
                let gstar = RBLieAlgebra::unchecked(dual.clone(), rb.weight().clone(), q.transpose()).unwrap();
                let mp = coadjoint_matched_pair(&rb, &gstar).unwrap();
                let lhs = rbla_core::rota_baxter::check_matched_pair_rb(&mp).passed();
                let rhs = rb_bowtie(&mp).1.passed();
                out.record(format!("{label} dual#{d} Q#{t}"), lhs, rhs);
            }
        }
    }
    out
}

fn solution_verdicts(sol: &CYBESolution) -> (bool, bool) {
    let report = check_solution_criteria(sol).unwrap();
    (part_passed(&report, "tensor route"), part_passed(&report, "operator route"))
}

/// For antisymmetric `r`: admissible CYBE ⇔ `T_r` weak O-operator of
/// `(ad*, Q*)`. Instances are lifts of `P` and of corrupted `P` to the
/// doubles with the three standard companion pairs, plus every
/// antisymmetric `c · e1 ∧ e2` on the plane itself.
pub fn solution_biconditional() -> Outcome {
    let mut out = Outcome::new("(d) admissible cybe <=> weak o-operator");
    for (k, (label, rb)) in instances().into_iter().enumerate() {
        let rep = adjoint_with(&rb, rb.p().clone());
        for (s, t) in [rb.p().clone(), corrupt(rb.p(), k)].iter().enumerate() {
            for (j, (q, beta)) in standard_pairs(&rb, rb.p()).into_iter().enumerate() {
                let sol = lift_candidate(&rb, &rep, t, &q, &beta).unwrap();
                let (a, b) = solution_verdicts(&sol);
                out.record(format!("{label} T#{s} pair#{j}"), a, b);
            }
        }
        if rb.dim() == 2 {
            for c in [1, 2] {
                let mut r = Tensor2::zeros(2, 2);
                r.set(0, 1, int(c));
                r.set(1, 0, int(-c));
                for (t, q) in standard_admissibles(&rb).into_iter().enumerate() {
                    let sol = CYBESolution::new(rb.clone(), q, r.clone()).unwrap();
                    let (a, b) = solution_verdicts(&sol);
                    out.record(format!("{label} r={c} Q#{t}"), a, b);
                }
            }
        }
    }
    out
}

/// Admissibility on `g ⋉_ρ V` ⇔ admissibility on `g ⋉_ρ* V*` ⇔ the four
/// component conditions, over the standard `(Q, β)` pairs and corruptions
/// of each.
pub fn semidirect_admissibility() -> Outcome {
    let mut out = Outcome::new("(e) semidirect admissibility three-way");
    for (k, (label, rb)) in instances().into_iter().enumerate() {
        let n = rb.dim();
        for (a, alpha) in [rb.p().clone(), Matrix::zeros(n, n)].into_iter().enumerate() {
            let mut cases: Vec<(Matrix, Matrix)> = standard_pairs(&rb, &alpha).into_iter().collect();
            let (q0, b0) = cases[2].clone();
            cases.push((corrupt(&q0, k), b0.clone()));
            cases.push((q0, corrupt(&b0, k + 1)));
            for (t, (q, beta)) in cases.into_iter().enumerate() {
                let rep = adjoint_rep(rb.lie()).with_alpha(alpha.clone()).unwrap().with_beta(beta).unwrap();
                let report = check_adm_sd(&rb, &rep, &q).unwrap();
                let c = part_passed(&report, "conditions");
                let s = part_passed(&report, "semidirect");
                let d = part_passed(&report, "dual semidirect");
                out.record_all(format!("{label} alpha#{a} case#{t}"), &[c, s, d]);
            }
        }
    }
    out
}

/// Every standard companion is admissible, and `−α − λ id` is admissible
/// for every Rota-Baxter representation tried. Returns the failures.
pub fn standard_admissible_failures() -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (label, rb) in instances() {
        for (t, q) in standard_admissibles(&rb).into_iter().enumerate() {
            checked += 1;
            if !check_q_admissible(&rb, &q).passed() {
                failures.push(format!("{label} standard#{t}"));
            }
        }
        let n = rb.dim();
        let mut reps = Vec::new();
        for alpha in [rb.p().clone(), Matrix::zeros(n, n), -&rb.lambda_id()] {
            reps.push(adjoint_rep(rb.lie()).with_alpha(alpha).unwrap());
        }
        for q in standard_admissibles(&rb) {
            reps.push(dual_representation(&adjoint_rep(rb.lie())).with_alpha(q.transpose()).unwrap());
        }
        for (t, rep) in reps.into_iter().enumerate() {
            if !check_rb_representation(&rb, &rep).unwrap().passed() {
                failures.push(format!("{label} rep#{t} is not a rota-baxter representation"));
                continue;
            }
            checked += 1;
            let alpha = rep.alpha().unwrap().clone();
            let beta = -&(&alpha + &Matrix::scalar(alpha.rows(), rb.weight()));
            let rep = rep.without_companions().with_beta(beta).unwrap();
            if !check_admissible(&rb, &rep).unwrap().passed() {
                failures.push(format!("{label} rep#{t} -alpha-lambda"));
            }
        }
    }
    (checked, failures)
}

/// A named list of checks that must all hold.
#[derive(Debug, Default)]
pub struct Checklist {
    pub items: Vec<(String, bool)>,
}

impl Checklist {
    fn push(&mut self, label: impl Into<String>, ok: bool) {
        self.items.push((label.into(), ok));
    }

    pub fn ok(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.as_str()).collect()
    }
}

/// Basis pairs where the computed induced product differs from the
/// published sl(2) table.
pub fn published_table_discrepancies() -> Vec<(String, String)> {
    let computed = induce_prelie(&sl2()).unwrap();
    let published = sl2_reference_prelie_table();
    let labels = computed.space().labels().to_vec();
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if computed.product().basis_product(i, j) != published.basis_product(i, j) {
                out.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    out
}

/// The five statements about the sl(2) example.
pub fn sl2_example() -> Checklist {
    let rb = sl2();
    let mut out = Checklist::default();
    out.push("(i) rota-baxter operator", check_rb_operator(rb.lie(), rb.weight(), rb.p()).passed());
    out.push("(ii) induced pre-Lie table", published_table_discrepancies().is_empty());
    let hat = adjoint_operator_wrt_form(&sl2_form(), rb.p());
    out.push("(iii) adjoint operator", hat.as_ref().ok() == Some(&sl2_p_hat()));
    let ld = special_from_admissible(&rb, &sl2_p_hat()).unwrap();
    out.push("(iv) ◁ table", ld.tri_l() == &sl2_tri_l_table());
    let p = rb.p();
    out.push("(v) P̂ commutes with P", (&sl2_p_hat() * p) == (p * &sl2_p_hat()));
    out
}

/// `(ad, P; g) ≅ (ad*, P̂*; g*)` via `φ(v) = B(v, ·)`.
pub fn sl2_equivalence() -> bool {
    let rb = sl2();
    let rep1 = adjoint_with(&rb, rb.p().clone());
    let rep2 = dual_representation(&adjoint_rep(rb.lie())).with_alpha(sl2_p_hat().transpose()).unwrap();
    let phi = sl2_form().matrix().transpose();
    check_rep_equivalence(&rb, &rep1, &rep2, &phi).map(|r| r.passed()).unwrap_or(false)
}

/// The weight-zero chain on sl(2) with `Q = −P`: the lift of `T = P`,
/// the coboundary bialgebra, the triple equivalence, and the induced
/// special L-dendriform bialgebra.
pub struct Chain {
    pub solution: CYBESolution,
    pub bialgebra: RBLieBialgebra,
    pub lift: Checklist,
    pub induction: Checklist,
}

pub fn sl2_chain() -> Chain {
    let rb = sl2();
    let p = rb.p().clone();
    let neg = -&p;
    let rep = adjoint_with(&rb, p.clone());
    let solution = lift_o_operator(&rb, &rep, &p, &neg, &neg).expect("lift of T = P");
    let mut lift = Checklist::default();
    lift.push("double has dimension 6", solution.rb.dim() == 6);
    let c = cybe_tensor(solution.rb.lie(), &solution.r);
    lift.push("cybe tensor has 216 zero coefficients", c.flat().len() == 216 && c.is_zero());
    let adm = check_admissible_cybe(&solution);
    lift.push("side condition P", part_passed(&adm, "side-condition P"));
    lift.push("side condition Q", part_passed(&adm, "side-condition Q"));
    let bialgebra = build_coboundary_rb_bialgebra(&solution).expect("coboundary bialgebra");
    let axioms = check_rb_lie_bialgebra(&bialgebra);
    for name in ["(a) lie bialgebra", "(b) rb algebra", "(c) rb coalgebra", "(d) Q admissible", "(e) compatibility"] {
        lift.push(format!("axiom {name}"), part_passed(&axioms, name));
    }
    let dual = dualize_coproduct(bialgebra.delta()).with_space(bialgebra.rb().space().dual()).unwrap();
    let gstar = RBLieAlgebra::unchecked(LieAlgebra::unchecked(dual), int(0), bialgebra.q().transpose()).unwrap();
    let triple = triple_equivalence(bialgebra.rb(), &gstar).unwrap();
    let all_three = ["(a) manin triple", "(b) matched pair", "(c) rb lie bialgebra"]
        .iter()
        .all(|name| part_passed(&triple, name));
    lift.push("triple equivalence: three passing verdicts", triple.passed() && all_three);

    let mut induction = Checklist::default();
    let sld = induce_sld_bialgebra(&bialgebra).expect("weight zero");
    induction.push("induced special L-dendriform bialgebra", check_sld_bialgebra(&sld).passed());
    let same = verify_same_construction(&bialgebra, &solution.r).unwrap();
    induction.push("coproducts agree on all 6 columns", same.passed() && sld.delta.columns().len() == 6);
    Chain { solution, bialgebra, lift, induction }
}

/// The eight special L-dendriform bialgebras from sl(2) and its
/// sub-adjacent algebra; returns how many were built and how many pass.
pub fn sl2_family() -> (usize, usize) {
    match iterate_family(&sl2(), 2) {
        Ok(family) => {
            let passing = family.iter().filter(|b| check_sld_bialgebra(b).passed()).count();
            (family.len(), passing)
        }
        Err(_) => (0, 0),
    }
}
