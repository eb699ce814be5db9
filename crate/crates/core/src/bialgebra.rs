//! Lie coalgebras and bialgebras with Rota-Baxter operators, Manin triples,
//! special L-dendriform coalgebras and bialgebras, and the passage from
//! weight-zero Rota-Baxter Lie bialgebras to special L-dendriform bialgebras.

use num_traits::Zero;

use crate::error::{ensure_dim, Error, Result};
use crate::lie::{
    adjoint_operator_wrt_form, adjoint_rep, check_bilinear_form, check_lie, dual_representation, BilinearForm,
    FormRequirements, LieAlgebra, MatchedPairLie,
};
use crate::linalg::{unit, Matrix, Tensor2, Tensor3};
use crate::prelie::{
    check_compatible, check_ldendriform, check_left_invariant_form, check_matched_pair_prelie, check_prelie,
    coregular_representation, induced_product, prelie_bowtie, special_from_companion,
    special_from_left_invariant_form, LDendriformAlgebra, MatchedPairPreLie, PreLieAlgebra,
};
use crate::product::{dualize_coproduct, dualize_product, BilinearProduct, Coproduct};
use crate::report::{CheckReport, Violation};
use crate::rota_baxter::{
    check_matched_pair_rb, check_q_admissible, check_rb_operator, pairs, MatchedPairRB, RBLieAlgebra,
};
use crate::scalar::Scalar;
use crate::space::Space;

fn tensor2_labels(space: &Space) -> Vec<String> {
    space.tensor_labels(space)
}

fn push_t2(report: &mut CheckReport, tag: &str, witness: &[&str], t: &Tensor2, labels: &[String]) {
    report.push_opt(Violation::from_defect(tag, witness, &t.flat(), labels));
}

fn push_t3(report: &mut CheckReport, tag: &str, witness: &[&str], t: &Tensor3, labels: &[String]) {
    report.push_opt(Violation::from_defect(tag, witness, t.flat(), labels));
}

/// `(A ⊗ id + id ⊗ A) t`.
fn act2(t: &Tensor2, a: &Matrix) -> Tensor2 {
    &t.map_left(a) + &t.map_right(a)
}

/// Co-antisymmetry and co-Jacobi `(id + σ + σ²)(id ⊗ δ)δ = 0` per basis
/// element.
pub fn check_lie_coalgebra(d: &Coproduct) -> CheckReport {
    let mut report = CheckReport::new("lie-coalgebra");
    let labels = d.space().labels();
    let l2 = tensor2_labels(d.space());
    let l3 = d.space().tensor3_labels();
    for i in 0..d.dim() {
        let col = d.column(i);
        push_t2(&mut report, "co-antisymmetry", &[&labels[i]], &(col + &col.flip()), &l2);
        let t = d.on_second(col);
        let s1 = t.cyclic_shift().expect("cube");
        let s2 = s1.cyclic_shift().expect("cube");
        push_t3(&mut report, "co-jacobi", &[&labels[i]], &(&(&t + &s1) + &s2), &l3);
    }
    report.finish()
}

/// `δ[x,y] = (ad x ⊗ id + id ⊗ ad x)δy − (ad y ⊗ id + id ⊗ ad y)δx`.
pub fn check_cocycle(g: &LieAlgebra, d: &Coproduct) -> CheckReport {
    let mut report = CheckReport::new("cocycle");
    if g.dim() != d.dim() {
        report.push(Violation::with_message("shape", &[], "coproduct and bracket dimensions differ"));
        return report.finish();
    }
    let labels = g.space().labels();
    let l2 = tensor2_labels(g.space());
    let ads: Vec<Matrix> = (0..g.dim()).map(|i| g.ad(i)).collect();
    for (i, j) in pairs(g.dim(), true) {
        let lhs = d.apply_tensor(&g.bracket().basis_product(i, j));
        let rhs = &act2(d.column(j), &ads[i]) - &act2(d.column(i), &ads[j]);
        push_t2(&mut report, "cocycle", &[&labels[i], &labels[j]], &(&lhs - &rhs), &l2);
    }
    report.finish()
}

/// `(Q⊗Q)δx = (Q⊗id + id⊗Q)δ(Qx) + λδ(Qx)`, cross-checked against the
/// Rota-Baxter identity of `Q*` on the dual bracket.
pub fn check_rb_lie_coalgebra(d: &Coproduct, q: &Matrix, lambda: &Scalar) -> CheckReport {
    let mut report = CheckReport::new("rb-coalgebra");
    let mut direct = CheckReport::new("rb-coalgebra identity");
    let labels = d.space().labels();
    let l2 = tensor2_labels(d.space());
    for i in 0..d.dim() {
        let dq = d.apply_tensor(&q.column(i));
        let lhs = d.column(i).map(q, q);
        let rhs = &act2(&dq, q) + &dq.scale(lambda);
        push_t2(&mut direct, "rb-coalgebra", &[&labels[i]], &(&lhs - &rhs), &l2);
    }
    let direct = direct.finish();
    let dual = LieAlgebra::unchecked(dualize_coproduct(d));
    let mut via_dual = check_rb_operator(&dual, lambda, &q.transpose());
    via_dual.name = "dual rb-operator".into();
    if direct.passed() != via_dual.passed() {
        report.push(Violation::with_message("route-disagreement", &[], "direct and dual verdicts differ"));
    }
    report.add_part(direct);
    report.add_part(via_dual);
    report.finish()
}

/// `(P⊗Q)δx + (P⊗id − id⊗Q)δ(Px) + λ(P⊗id)δx = 0`.
pub fn check_bialgebra_compatibility(d: &Coproduct, p: &Matrix, q: &Matrix, lambda: &Scalar) -> CheckReport {
    let mut report = CheckReport::new("operator compatibility");
    let labels = d.space().labels();
    let l2 = tensor2_labels(d.space());
    for i in 0..d.dim() {
        let col = d.column(i);
        let dp = d.apply_tensor(&p.column(i));
        let t = &(&col.map(p, q) + &(&dp.map_left(p) - &dp.map_right(q))) + &col.map_left(p).scale(lambda);
        push_t2(&mut report, "compatibility", &[&labels[i]], &t, &l2);
    }
    report.finish()
}

/// A Lie bracket with `P`, a companion `Q` and a coproduct.
#[derive(Debug, Clone, PartialEq)]
pub struct RBLieBialgebra {
    rb: RBLieAlgebra,
    delta: Coproduct,
}

impl RBLieBialgebra {
    pub fn new(rb: RBLieAlgebra, delta: Coproduct) -> Result<Self> {
        let b = Self::unchecked(rb, delta)?;
        let report = check_rb_lie_bialgebra(&b);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(b)
    }

    /// Requires `Q` to be attached; checks shapes only.
    pub fn unchecked(rb: RBLieAlgebra, delta: Coproduct) -> Result<Self> {
        ensure_dim("coproduct", rb.dim(), delta.dim())?;
        if rb.q().is_none() {
            return Err(Error::Invalid("a Rota-Baxter Lie bialgebra needs the companion operator Q".into()));
        }
        Ok(Self { rb, delta })
    }

    pub fn rb(&self) -> &RBLieAlgebra {
        &self.rb
    }

    pub fn delta(&self) -> &Coproduct {
        &self.delta
    }

    pub fn q(&self) -> &Matrix {
        self.rb.q().expect("enforced by the constructors")
    }

    pub fn dim(&self) -> usize {
        self.rb.dim()
    }
}

/// The five conditions: Lie bialgebra, Rota-Baxter algebra, Rota-Baxter
/// coalgebra, `Q` admissible, and the operator compatibility (with its
/// dual reading as admissibility of `P*` when δ is co-antisymmetric).
pub fn check_rb_lie_bialgebra(b: &RBLieBialgebra) -> CheckReport {
    let rb = b.rb();
    let (p, q, lambda) = (rb.p(), b.q(), rb.weight());
    let mut report = CheckReport::new("rb-lie-bialgebra");

    let mut bialg = CheckReport::new("(a) lie bialgebra");
    bialg.add_part(check_lie(rb.bracket()));
    bialg.add_part(check_lie_coalgebra(b.delta()));
    bialg.add_part(check_cocycle(rb.lie(), b.delta()));
    report.add_part(bialg.finish());

    let mut algebra = check_rb_operator(rb.lie(), lambda, p);
    algebra.name = "(b) rb algebra".into();
    report.add_part(algebra);

    let mut coalgebra = check_rb_lie_coalgebra(b.delta(), q, lambda);
    coalgebra.name = "(c) rb coalgebra".into();
    report.add_part(coalgebra);

    let mut adm = check_q_admissible(rb, q);
    adm.name = "(d) Q admissible".into();
    report.add_part(adm);

    let mut compat = check_bialgebra_compatibility(b.delta(), p, q, lambda);
    compat.name = "(e) compatibility".into();
    let co_antisymmetric = b.delta().columns().iter().all(|c| (c + &c.flip()).is_zero());
    if co_antisymmetric {
        let dual = RBLieAlgebra::unchecked(LieAlgebra::unchecked(dualize_coproduct(b.delta())), lambda.clone(), q.transpose())
            .expect("dual operator fits");
        let mut dual_adm = check_q_admissible(&dual, &p.transpose());
        dual_adm.name = "dual admissibility of P*".into();
        let mut wrapper = CheckReport::new("(e) compatibility");
        if dual_adm.passed() != compat.passed() {
            wrapper.push(Violation::with_message("route-disagreement", &[], "direct and dual verdicts differ"));
        }
        compat.name = "direct".into();
        wrapper.add_part(compat);
        wrapper.add_part(dual_adm);
        report.add_part(wrapper.finish());
    } else {
        compat.note("coproduct not co-antisymmetric; dual admissibility route skipped");
        report.add_part(compat);
    }
    report.finish()
}

/// `((g ⊕ g*, P+Q*), (g, P), (g*, Q*))` with the pairing `B_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct ManinTripleRB {
    pub double: RBLieAlgebra,
    pub g: RBLieAlgebra,
    pub gstar: RBLieAlgebra,
    pub form: BilinearForm,
}

/// `((g,P), (g*,Q*), ad*_g, ad*_{g*})` without verification.
pub fn coadjoint_matched_pair(g: &RBLieAlgebra, gstar: &RBLieAlgebra) -> Result<MatchedPairRB> {
    ensure_dim("dual algebra", g.dim(), gstar.dim())?;
    let rho_g = dual_representation(&adjoint_rep(g.lie()));
    let rho_h = dual_representation(&adjoint_rep(gstar.lie()));
    let g0 = RBLieAlgebra::unchecked(g.lie().clone(), g.weight().clone(), g.p().clone())?;
    MatchedPairRB::new(g0, gstar.clone(), rho_g, rho_h)
}

/// Double of `(g, P, Q)` and a bracket on `g*`, operator `P + Q*`, pairing
/// `B_d`. Refused when the coadjoint Lie matched pair fails.
pub fn build_manin_triple_rb(g: &RBLieAlgebra, gstar_bracket: &BilinearProduct) -> Result<ManinTripleRB> {
    let q = g.q().ok_or_else(|| Error::Invalid("the Manin double needs the companion operator Q".into()))?;
    ensure_dim("bracket on the dual", g.dim(), gstar_bracket.dim())?;
    let gstar_bracket = gstar_bracket.with_space(g.space().dual())?;
    let gstar = RBLieAlgebra::unchecked(LieAlgebra::unchecked(gstar_bracket), g.weight().clone(), q.transpose())?;
    let dual_rb = check_rb_operator(gstar.lie(), gstar.weight(), gstar.p());
    if !dual_rb.passed() {
        return Err(Error::rejected(dual_rb));
    }
    let mt = manin_double_candidate(g, &gstar)?;
    let (_, lie_report) = crate::lie::bowtie_lie(&coadjoint_matched_pair(g, &gstar)?.lie_pair());
    let mp = crate::lie::check_matched_pair_lie(&coadjoint_matched_pair(g, &gstar)?.lie_pair());
    if !mp.passed() || !lie_report.passed() {
        return Err(Error::rejected(mp));
    }
    Ok(mt)
}

/// The Manin double of `g` and `g*` as a candidate, without any checks.
pub fn manin_double_candidate(g: &RBLieAlgebra, gstar: &RBLieAlgebra) -> Result<ManinTripleRB> {
    let mp = coadjoint_matched_pair(g, gstar)?;
    let lie_pair: MatchedPairLie = mp.lie_pair();
    let bracket = crate::lie::bowtie_bracket(&lie_pair);
    let space = bracket.space().clone();
    let op = Matrix::block_diag(g.p(), gstar.p());
    let q = gstar.p().transpose();
    let companion = Matrix::block_diag(&q, &g.p().transpose());
    let double = RBLieAlgebra::unchecked(LieAlgebra::unchecked(bracket), g.weight().clone(), op)?
        .with_q_unchecked(companion)?;
    let g = RBLieAlgebra::unchecked(g.lie().clone(), g.weight().clone(), g.p().clone())?.with_q_unchecked(q)?;
    Ok(ManinTripleRB { double, g, gstar: gstar.clone(), form: BilinearForm::natural_pairing(space)? })
}

fn check_sub_bracket(report: &mut CheckReport, whole: &BilinearProduct, start: usize, part: &BilinearProduct, name: &str) {
    if !whole.closes_on(start, part.dim()) {
        report.push(Violation::with_message("subalgebra", &[name], "not closed under the double product"));
    } else if whole.restrict(start, part.space().clone()) != *part {
        report.push(Violation::with_message("subalgebra", &[name], "restriction differs from the given product"));
    }
}

/// Definition part (Lie double, subalgebras, invariance of `B_d`, the
/// Rota-Baxter identity of `P+Q*`) and consequences part (the adjoint of
/// `P+Q*` is `Q+P*`, and the three admissibilities).
pub fn check_manin_triple_rb(mt: &ManinTripleRB) -> CheckReport {
    let n = mt.g.dim();
    let mut report = CheckReport::new("manin-triple-rb");
    let mut def = CheckReport::new("definition");
    def.add_part(check_lie(mt.double.bracket()));
    let mut subs = CheckReport::new("subalgebras");
    check_sub_bracket(&mut subs, mt.double.bracket(), 0, mt.g.bracket(), "g");
    check_sub_bracket(&mut subs, mt.double.bracket(), n, mt.gstar.bracket(), "g*");
    def.add_part(subs.finish());
    def.add_part(check_bilinear_form(mt.double.lie(), &mt.form, FormRequirements::ALL));
    let mut rb = check_rb_operator(mt.double.lie(), mt.double.weight(), mt.double.p());
    rb.name = "rb-operator P+Q*".into();
    def.add_part(rb);
    report.add_part(def.finish());

    let mut cons = CheckReport::new("consequences");
    let companion = mt.double.q().expect("set by the builder");
    let mut adjoint = CheckReport::new("adjoint of P+Q*");
    match adjoint_operator_wrt_form(&mt.form, mt.double.p()) {
        Ok(hat) => {
            let labels = crate::space::map_labels(mt.double.space(), mt.double.space());
            adjoint.push_opt(Violation::from_defect("adjoint", &[], (&hat - companion).flat(), &labels));
        }
        Err(e) => adjoint.push(Violation::with_message("adjoint", &[], &e.to_string())),
    }
    cons.add_part(adjoint.finish());
    let mut a = check_q_admissible(&mt.double, companion);
    a.name = "Q+P* admissible".into();
    cons.add_part(a);
    let mut b = check_q_admissible(&mt.g, &mt.gstar.p().transpose());
    b.name = "Q admissible".into();
    cons.add_part(b);
    let mut c = check_q_admissible(&mt.gstar, &mt.g.p().transpose());
    c.name = "P* admissible".into();
    cons.add_part(c);
    report.add_part(cons.finish());
    report.finish()
}

/// Evaluates the Manin triple, matched pair and bialgebra statements for
/// `(g, P)` and `(g*, Q*)` independently; disagreement is a violation.
pub fn triple_equivalence(g: &RBLieAlgebra, gstar: &RBLieAlgebra) -> Result<CheckReport> {
    ensure_dim("dual algebra", g.dim(), gstar.dim())?;
    let q = gstar.p().transpose();

    let mt = manin_double_candidate(g, gstar)?;
    let mut manin = check_manin_triple_rb(&mt)
        .find_part("definition")
        .cloned()
        .expect("definition part");
    manin.name = "(a) manin triple".into();

    let mp = coadjoint_matched_pair(g, gstar)?;
    let mut matched = CheckReport::new("(b) matched pair");
    matched.add_part(check_lie(g.bracket()));
    matched.add_part(check_lie(gstar.bracket()));
    matched.add_part(check_rb_operator(g.lie(), g.weight(), g.p()));
    matched.add_part(check_rb_operator(gstar.lie(), gstar.weight(), gstar.p()));
    matched.add_part(check_matched_pair_rb(&mp));
    let matched = matched.finish();

    let delta = dualize_product(gstar.bracket()).with_space(g.space().clone())?;
    let rb = RBLieAlgebra::unchecked(g.lie().clone(), g.weight().clone(), g.p().clone())?.with_q_unchecked(q)?;
    let mut bialg = check_rb_lie_bialgebra(&RBLieBialgebra::unchecked(rb, delta)?);
    bialg.name = "(c) rb lie bialgebra".into();

    let mut report = CheckReport::new("triple-equivalence");
    let verdicts = [manin.passed(), matched.passed(), bialg.passed()];
    report.note(format!(
        "verdicts: manin={} matched-pair={} bialgebra={}",
        verdicts[0], verdicts[1], verdicts[2]
    ));
    if verdicts.iter().any(|v| *v != verdicts[0]) {
        report.push(Violation::with_message("equivalence-disagreement", &[], "the three statements disagree"));
    }
    report.add_part(manin);
    report.add_part(matched);
    report.add_part(bialg);
    Ok(report.finish())
}

/// `(A, ▷, ◁)` with coproducts `Δ` and `∇`.
#[derive(Debug, Clone, PartialEq)]
pub struct SLDBialgebra {
    pub ldend: LDendriformAlgebra,
    pub delta: Coproduct,
    pub nabla: Coproduct,
}

impl SLDBialgebra {
    pub fn new(ldend: LDendriformAlgebra, delta: Coproduct, nabla: Coproduct) -> Result<Self> {
        ensure_dim("Δ", ldend.dim(), delta.dim())?;
        ensure_dim("∇", ldend.dim(), nabla.dim())?;
        let space = ldend.space().clone();
        Ok(Self { delta: delta.with_space(space.clone())?, nabla: nabla.with_space(space)?, ldend })
    }

    /// `◇ = Δ + ∇`.
    pub fn diamond(&self) -> Coproduct {
        self.delta.add(&self.nabla)
    }
}

/// Co-antisymmetry of `∇` and both coalgebra identities, cross-checked
/// against the L-dendriform identities of the dual products.
pub fn check_sld_coalgebra(delta: &Coproduct, nabla: &Coproduct) -> CheckReport {
    let mut report = CheckReport::new("sld-coalgebra");
    let mut direct = CheckReport::new("coalgebra identities");
    if delta.dim() != nabla.dim() {
        report.push(Violation::with_message("shape", &[], "Δ and ∇ dimensions differ"));
        return report.finish();
    }
    let nabla = nabla.with_space(delta.space().clone()).expect("same dimension");
    let diamond = delta.add(&nabla);
    let labels = delta.space().labels();
    let l2 = tensor2_labels(delta.space());
    let l3 = delta.space().tensor3_labels();
    for i in 0..delta.dim() {
        let w = [labels[i].as_str()];
        let n = nabla.column(i);
        let d = diamond.column(i);
        push_t2(&mut direct, "co-antisymmetry", &w, &(n + &n.flip()), &l2);
        // (id⊗∇)∇ + (τ⊗id)(id⊗◇)∇ + (◇⊗id)∇ − (id⊗∇)◇
        let t1 = &(&nabla.on_second(n) + &diamond.on_second(n).flip12()) + &diamond.on_first(n);
        push_t3(&mut direct, "sld-coalgebra-1", &w, &(&t1 - &nabla.on_second(d)), &l3);
        // (◇⊗id)◇ − (id⊗◇)◇ − (τ⊗id)(◇⊗id)◇ + (τ⊗id)(id⊗◇)◇
        let a = &diamond.on_first(d) - &diamond.on_second(d);
        push_t3(&mut direct, "sld-coalgebra-2", &w, &(&a - &a.flip12()), &l3);
    }
    let direct = direct.finish();
    let dual = LDendriformAlgebra::unchecked(dualize_coproduct(delta), dualize_coproduct(&nabla))
        .expect("duals share a space");
    let mut via_dual = check_ldendriform(&dual);
    if !dual.is_special() {
        via_dual.push(Violation::with_message("not-special", &[], "the dual ◁ is not antisymmetric"));
    }
    via_dual.name = "dual special ldendriform".into();
    if direct.passed() != via_dual.passed() {
        report.push(Violation::with_message("route-disagreement", &[], "direct and dual verdicts differ"));
    }
    report.add_part(direct);
    report.add_part(via_dual.finish());
    report.finish()
}

/// The algebra side, the coalgebra side and the three compatibility
/// identities on all basis pairs.
pub fn check_sld_bialgebra(b: &SLDBialgebra) -> CheckReport {
    let mut report = CheckReport::new("sld-bialgebra");
    let mut alg = check_ldendriform(&b.ldend);
    if !b.ldend.is_special() {
        alg.push(Violation::with_message("not-special", &[], "◁ is not antisymmetric"));
    }
    report.add_part(alg.finish());
    report.add_part(check_sld_coalgebra(&b.delta, &b.nabla));

    let space = b.ldend.space();
    let n = b.ldend.dim();
    let labels = space.labels();
    let l2 = tensor2_labels(space);
    let circ = b.ldend.sum();
    let (gt, lt) = (b.ldend.tri_r(), b.ldend.tri_l());
    let l_circ = circ.left_all();
    let r_circ = circ.right_all();
    let l_lt = lt.left_all();
    let l_gt = gt.left_all();
    let diamond = b.diamond();
    let mut compat = CheckReport::new("compatibility");
    let id = Matrix::identity(n);
    for x in 0..n {
        for y in 0..n {
            let w = [labels[x].as_str(), labels[y].as_str()];
            // ◇(x∘y) − (id⊗R∘(y))Δx + (L◁(y)⊗id)∇x − (L▷(x)⊗id + id⊗L∘(x))◇y
            let mut t1 = diamond.apply_tensor(&circ.basis_product(x, y));
            t1 = &t1 - &b.delta.column(x).map_right(&r_circ[y]);
            t1 = &t1 + &b.nabla.column(x).map_left(&l_lt[y]);
            t1 = &t1 - &diamond.column(y).map(&l_gt[x], &id);
            t1 = &t1 - &diamond.column(y).map_right(&l_circ[x]);
            push_t2(&mut compat, "sld-bialgebra-1", &w, &t1, &l2);
            // (τ − id)((id⊗L◁(x))◇y − (id⊗L◁(y))◇x − ◇(x◁y))
            let inner = &(&diamond.column(y).map_right(&l_lt[x]) - &diamond.column(x).map_right(&l_lt[y]))
                - &diamond.apply_tensor(&lt.basis_product(x, y));
            push_t2(&mut compat, "sld-bialgebra-2", &w, &(&inner.flip() - &inner), &l2);
            if x < y {
                // ∇[x,y] + (L∘(y)⊗id + id⊗L∘(y))∇x − (L∘(x)⊗id + id⊗L∘(x))∇y
                let bracket = crate::linalg::vec_sub(&circ.basis_product(x, y), &circ.basis_product(y, x));
                let t3 = &(&b.nabla.apply_tensor(&bracket) + &act2(b.nabla.column(x), &l_circ[y]))
                    - &act2(b.nabla.column(y), &l_circ[x]);
                push_t2(&mut compat, "sld-bialgebra-3", &w, &t3, &l2);
            }
        }
    }
    report.add_part(compat.finish());
    report.finish()
}

/// Weight-zero induction: `◁ = −Q[x,y]`, `▷ = [Px,y] + Q[x,y]`,
/// `∇(x) = −δ(Px)`, `Δ(x) = (Q⊗id)δ(x) + δ(Px)`.
pub fn induce_sld_bialgebra(b: &RBLieBialgebra) -> Result<SLDBialgebra> {
    if !b.rb().weight().is_zero() {
        return Err(Error::Invalid("the induced special L-dendriform bialgebra needs weight zero".into()));
    }
    let p = b.rb().p();
    let q = b.q();
    let ldend = special_from_companion(b.rb().bracket(), p, q);
    let dp = b.delta().pre_map(p);
    let nabla = Coproduct::from_fn(b.rb().space().clone(), |i| -dp.column(i));
    let n = b.dim();
    let id = Matrix::identity(n);
    let delta = b.delta().post_map(q, &id).add(&dp);
    SLDBialgebra::new(ldend, delta, nabla)
}

/// The three conditions under which the induction yields a special
/// L-dendriform bialgebra, each reported separately. The first is read as
/// `(Q⊗id)` applied to the whole bracketed sum.
pub fn check_induction_conditions(b: &RBLieBialgebra) -> CheckReport {
    let rb = b.rb();
    let (p, q) = (rb.p(), b.q());
    let d = b.delta();
    let n = b.dim();
    let labels = rb.space().labels();
    let l2 = tensor2_labels(rb.space());
    let id = Matrix::identity(n);
    let ad = |v: &[Scalar]| rb.lie().ad_by(v);
    let mut c1 = CheckReport::new("condition-1");
    let mut c2 = CheckReport::new("condition-2");
    let mut c3 = CheckReport::new("condition-3");
    for x in 0..n {
        let px = p.column(x);
        let ad_px = ad(&px);
        let d_px = d.apply_tensor(&px);
        for y in 0..n {
            let w = [labels[x].as_str(), labels[y].as_str()];
            let ey = unit(n, y);
            let ad_y = ad(&ey);
            let t = &(&d.apply_tensor(&rb.lie().eval(&px, &ey)) + &act2(&d_px, &ad_y)) - &act2(d.column(y), &ad_px);
            push_t2(&mut c1, "condition-1", &w, &t.map(q, &id), &l2);
            if x < y {
                let ad_x = rb.lie().ad(x);
                let t = &(&d.apply_tensor(&rb.bracket().basis_product(x, y)) + &act2(d.column(x), &ad_y))
                    - &act2(d.column(y), &ad_x);
                push_t2(&mut c2, "condition-2", &w, &t.map(q, q), &l2);
                let py = p.column(y);
                let ad_py = ad(&py);
                let t = &(&d.apply_tensor(&rb.lie().eval(&px, &py)) - &act2(&d.apply_tensor(&py), &ad_px))
                    + &act2(&d_px, &ad_py);
                push_t2(&mut c3, "condition-3", &w, &t, &l2);
            }
        }
    }
    let mut report = CheckReport::new("induction-conditions");
    report.add_part(c1.finish());
    report.add_part(c2.finish());
    report.add_part(c3.finish());
    report.finish()
}

/// `((A ⊕ A*, ∘), (A, ∘_A), (A*, ∘_{A*}))` together with the compatible
/// special L-dendriform structure on the double.
#[derive(Debug, Clone, PartialEq)]
pub struct ManinTriplePreLie {
    pub double: PreLieAlgebra,
    pub a: PreLieAlgebra,
    pub astar: PreLieAlgebra,
    pub ldend: LDendriformAlgebra,
    pub form: BilinearForm,
}

/// Induced pre-Lie Manin triple of a weight-zero Rota-Baxter Manin triple,
/// with the report of every claimed property.
pub fn manin_triple_prelie_from_rb(mt: &ManinTripleRB) -> Result<(ManinTriplePreLie, CheckReport)> {
    if !mt.double.weight().is_zero() {
        return Err(Error::Invalid("induced pre-Lie Manin triples need weight zero".into()));
    }
    let n = mt.g.dim();
    let double = PreLieAlgebra::unchecked(induced_product(mt.double.bracket(), mt.double.p()));
    let a = PreLieAlgebra::unchecked(induced_product(mt.g.bracket(), mt.g.p()));
    let astar = PreLieAlgebra::unchecked(induced_product(mt.gstar.bracket(), mt.gstar.p()));
    let companion = mt.double.q().expect("set by the builder");
    let ldend = special_from_companion(mt.double.bracket(), mt.double.p(), companion);

    let mut report = CheckReport::new("manin-triple-prelie");
    report.add_part(check_prelie(double.product()));
    let mut subs = CheckReport::new("subalgebras");
    check_sub_bracket(&mut subs, double.product(), 0, a.product(), "A");
    check_sub_bracket(&mut subs, double.product(), n, astar.product(), "A*");
    report.add_part(subs.finish());
    report.add_part(check_left_invariant_form(&double, &mt.form));

    let mut ld = check_ldendriform(&ldend);
    if !ldend.is_special() {
        ld.push(Violation::with_message("not-special", &[], "◁ is not antisymmetric"));
    }
    report.add_part(ld.finish());
    report.add_part(check_compatible(&ldend, double.product()));
    let q = mt.gstar.p().transpose();
    let part_g = special_from_companion(mt.g.bracket(), mt.g.p(), &q);
    let part_gstar = special_from_companion(mt.gstar.bracket(), mt.gstar.p(), &mt.g.p().transpose());
    let mut contains = CheckReport::new("ldendriform subalgebras");
    check_sub_bracket(&mut contains, ldend.tri_l(), 0, part_g.tri_l(), "◁ on g");
    check_sub_bracket(&mut contains, ldend.tri_r(), 0, part_g.tri_r(), "▷ on g");
    check_sub_bracket(&mut contains, ldend.tri_l(), n, part_gstar.tri_l(), "◁ on g*");
    check_sub_bracket(&mut contains, ldend.tri_r(), n, part_gstar.tri_r(), "▷ on g*");
    report.add_part(contains.finish());

    let mut pairing = CheckReport::new("pairing route");
    match special_from_left_invariant_form(&double, &mt.form) {
        Ok(other) if other == ldend => {}
        Ok(_) => pairing.push(Violation::with_message("pairing-route", &[], "◁ from B_d differs")),
        Err(e) => pairing.push(Violation::with_message("pairing-route", &[], &e.to_string())),
    }
    report.add_part(pairing.finish());
    let triple = ManinTriplePreLie { double, a, astar, ldend, form: mt.form.clone() };
    Ok((triple, report.finish()))
}

/// Matched pair, bialgebra and Manin-triple statements for a special
/// L-dendriform algebra on A and one on A*; disagreement is a violation.
pub fn check_matched_pair_prelie_duality(a_ld: &LDendriformAlgebra, astar_ld: &LDendriformAlgebra) -> Result<CheckReport> {
    ensure_dim("dual L-dendriform algebra", a_ld.dim(), astar_ld.dim())?;
    let n = a_ld.dim();
    let astar_ld = LDendriformAlgebra::unchecked(
        astar_ld.tri_r().with_space(a_ld.space().dual())?,
        astar_ld.tri_l().with_space(a_ld.space().dual())?,
    )?;
    let circ_a = PreLieAlgebra::unchecked(a_ld.sum());
    let circ_astar = PreLieAlgebra::unchecked(astar_ld.sum());

    let mp = MatchedPairPreLie::new(
        coregular_representation(&circ_a, a_ld.tri_l())?,
        coregular_representation(&circ_astar, astar_ld.tri_l())?,
    )?;
    let mut matched = check_matched_pair_prelie(&mp);
    matched.name = "(a) matched pair".into();

    let sld = SLDBialgebra::new(
        a_ld.clone(),
        dualize_product(astar_ld.tri_r()),
        dualize_product(astar_ld.tri_l()),
    )?;
    let mut bialg = check_sld_bialgebra(&sld);
    bialg.name = "(b) sld bialgebra".into();

    let bowtie = prelie_bowtie(&mp);
    let form = BilinearForm::natural_pairing(bowtie.space().clone())?;
    let mut manin = CheckReport::new("(c) manin triple");
    manin.add_part(check_prelie(bowtie.product()));
    manin.add_part(check_left_invariant_form(&bowtie, &form));
    let mut contains = CheckReport::new("ldendriform subalgebras");
    match special_from_left_invariant_form(&bowtie, &form) {
        Ok(ld) => {
            check_sub_bracket(&mut contains, ld.tri_l(), 0, a_ld.tri_l(), "◁ on A");
            check_sub_bracket(&mut contains, ld.tri_r(), 0, a_ld.tri_r(), "▷ on A");
            check_sub_bracket(&mut contains, ld.tri_l(), n, astar_ld.tri_l(), "◁ on A*");
            check_sub_bracket(&mut contains, ld.tri_r(), n, astar_ld.tri_r(), "▷ on A*");
        }
        Err(e) => contains.push(Violation::with_message("pairing-route", &[], &e.to_string())),
    }
    manin.add_part(contains.finish());
    let manin = manin.finish();

    let mut report = CheckReport::new("prelie-duality");
    let verdicts = [matched.passed(), bialg.passed(), manin.passed()];
    report.note(format!(
        "verdicts: matched-pair={} bialgebra={} manin={}",
        verdicts[0], verdicts[1], verdicts[2]
    ));
    if verdicts.iter().any(|v| *v != verdicts[0]) {
        report.push(Violation::with_message("equivalence-disagreement", &[], "the three statements disagree"));
    }
    report.add_part(matched);
    report.add_part(bialg);
    report.add_part(manin);
    Ok(report.finish())
}
