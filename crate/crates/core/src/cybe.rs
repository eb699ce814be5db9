//! Coboundary coproducts, the classical Yang-Baxter equation and its
//! admissible variant, O-operators and the bialgebras they produce.

use num_traits::Zero;

use crate::bialgebra::{
    check_bialgebra_compatibility, check_rb_lie_coalgebra, check_sld_bialgebra, induce_sld_bialgebra,
    RBLieBialgebra, SLDBialgebra,
};
use crate::error::{ensure_dim, Error, Result};
use crate::lie::{check_lie, dual_representation, semidirect_bracket, LieAlgebra, Representation};
use crate::linalg::{map_from_tensor, Matrix, Tensor2, Tensor3};
use crate::prelie::{
    adjoint_with, induce_prelie, regular_rb_representation, special_from_companion, subadjacent_rb,
    LDendriformAlgebra, RBPreLieAlgebra,
};
use crate::product::{dualize_coproduct, BilinearProduct, Coproduct};
use crate::report::{CheckReport, Violation};
use crate::rota_baxter::{check_adm_sd, check_q_admissible, check_rb_representation, pairs, push_columns, RBLieAlgebra};
use crate::scalar::{int, Scalar};
use crate::space::Space;

fn act2(t: &Tensor2, a: &Matrix) -> Tensor2 {
    &t.map_left(a) + &t.map_right(a)
}

fn act3(t: &Tensor3, a: &Matrix) -> Tensor3 {
    &(&t.map_slot(0, a) + &t.map_slot(1, a)) + &t.map_slot(2, a)
}

/// `δ_r(x) = (ad x ⊗ id + id ⊗ ad x) r`.
pub fn coboundary_delta(g: &LieAlgebra, r: &Tensor2) -> Coproduct {
    Coproduct::from_fn(g.space().clone(), |i| act2(r, &g.ad(i)))
}

/// `Σ r_ij r_kl (e_i·e_k) ⊗ e_j ⊗ e_l`.
fn r12_r13(r: &Tensor2, p: &BilinearProduct) -> Tensor3 {
    let n = r.left_dim();
    let mut out = Tensor3::cube(n);
    for (i, j, a) in r.nonzeros() {
        for (k, l, b) in r.nonzeros() {
            let ab = a * b;
            for (m, c) in p.basis_product(i, k).iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(m, j, l, &(&ab * c));
                }
            }
        }
    }
    out
}

/// `Σ r_ij r_kl e_i ⊗ (e_j·e_k) ⊗ e_l`.
fn r12_r23(r: &Tensor2, p: &BilinearProduct) -> Tensor3 {
    let n = r.left_dim();
    let mut out = Tensor3::cube(n);
    for (i, j, a) in r.nonzeros() {
        for (k, l, b) in r.nonzeros() {
            let ab = a * b;
            for (m, c) in p.basis_product(j, k).iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(i, m, l, &(&ab * c));
                }
            }
        }
    }
    out
}

/// `Σ r_ij r_kl e_i ⊗ e_k ⊗ (e_j·e_l)`.
fn r13_r23(r: &Tensor2, p: &BilinearProduct) -> Tensor3 {
    let n = r.left_dim();
    let mut out = Tensor3::cube(n);
    for (i, j, a) in r.nonzeros() {
        for (k, l, b) in r.nonzeros() {
            let ab = a * b;
            for (m, c) in p.basis_product(j, l).iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(i, k, m, &(&ab * c));
                }
            }
        }
    }
    out
}

/// `[r12,r13] + [r12,r23] + [r13,r23]`.
pub fn cybe_tensor(g: &LieAlgebra, r: &Tensor2) -> Tensor3 {
    let b = g.bracket();
    &(&r12_r13(r, b) + &r12_r23(r, b)) + &r13_r23(r, b)
}

fn push_t2(report: &mut CheckReport, tag: &str, witness: &[&str], t: &Tensor2, labels: &[String]) {
    report.push_opt(Violation::from_defect(tag, witness, &t.flat(), labels));
}

fn push_t3(report: &mut CheckReport, tag: &str, witness: &[&str], t: &Tensor3, labels: &[String]) {
    report.push_opt(Violation::from_defect(tag, witness, t.flat(), labels));
}

/// Invariance of `r + τ(r)` and of the CYBE tensor under every `ad x`: the
/// conditions for `δ_r` to define a Lie bialgebra.
pub fn check_invariance_conditions(g: &LieAlgebra, r: &Tensor2) -> CheckReport {
    let mut report = CheckReport::new("invariance-conditions");
    let labels = g.space().labels();
    let l2 = g.space().tensor_labels(g.space());
    let l3 = g.space().tensor3_labels();
    let sym = r + &r.flip();
    let c = cybe_tensor(g, r);
    for i in 0..g.dim() {
        let ad = g.ad(i);
        push_t2(&mut report, "symmetric-part-invariance", &[&labels[i]], &act2(&sym, &ad), &l2);
        push_t3(&mut report, "cybe-invariance", &[&labels[i]], &act3(&c, &ad), &l3);
    }
    report.finish()
}

/// A Rota-Baxter Lie algebra, a companion `Q` and a candidate `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct CYBESolution {
    pub rb: RBLieAlgebra,
    pub q: Matrix,
    pub r: Tensor2,
}

impl CYBESolution {
    pub fn new(rb: RBLieAlgebra, q: Matrix, r: Tensor2) -> Result<Self> {
        ensure_dim("companion operator", rb.dim(), q.rows())?;
        ensure_dim("companion operator", rb.dim(), q.cols())?;
        ensure_dim("tensor", rb.dim(), r.left_dim())?;
        ensure_dim("tensor", rb.dim(), r.right_dim())?;
        Ok(Self { rb, q, r })
    }
}

/// The CYBE and both side conditions `(P⊗id − id⊗Q)r = 0`,
/// `(Q⊗id − id⊗P)r = 0`. For antisymmetric `r` the two side conditions
/// must agree; a disagreement is a violation.
pub fn check_admissible_cybe(sol: &CYBESolution) -> CheckReport {
    let (g, p, q, r) = (sol.rb.lie(), sol.rb.p(), &sol.q, &sol.r);
    let l2 = g.space().tensor_labels(g.space());
    let l3 = g.space().tensor3_labels();
    let mut report = CheckReport::new("admissible-cybe");
    let mut cybe = CheckReport::new("cybe");
    push_t3(&mut cybe, "cybe", &[], &cybe_tensor(g, r), &l3);
    let mut side_p = CheckReport::new("side-condition P");
    push_t2(&mut side_p, "side-condition-P", &[], &(&r.map_left(p) - &r.map_right(q)), &l2);
    let mut side_q = CheckReport::new("side-condition Q");
    push_t2(&mut side_q, "side-condition-Q", &[], &(&r.map_left(q) - &r.map_right(p)), &l2);
    let (side_p, side_q) = (side_p.finish(), side_q.finish());
    if r.is_antisymmetric() {
        report.note("r is antisymmetric");
        if side_p.passed() != side_q.passed() {
            report.push(Violation::with_message(
                "side-condition-disagreement",
                &[],
                "the side conditions disagree for an antisymmetric tensor",
            ));
        }
    } else {
        report.note("r is not antisymmetric");
    }
    report.add_part(cybe.finish());
    report.add_part(side_p);
    report.add_part(side_q);
    report.finish()
}

/// The two operator identities equivalent to the Rota-Baxter coalgebra
/// condition and the operator compatibility for `δ_r`, each compared with
/// the direct check. `Q(ad x)` is read as the composition `Q∘ad x`.
///
/// In the first identity the `M ⊗ id` term acts on `(id⊗Q − P⊗id)r`:
/// expanding `δ_r` and using admissibility of `Q` turns exactly this form
/// into the coalgebra defect. With `(P⊗id − id⊗Q)r` in that slot the
/// identity disagrees with the coalgebra condition at nonzero weight; its
/// verdict is kept as a note.
///
/// Refused when `Q` is not admissible or `δ_r` does not dualize to a Lie
/// bracket.
pub fn coboundary_conditions_general(rb: &RBLieAlgebra, q: &Matrix, r: &Tensor2) -> Result<CheckReport> {
    let sol = CYBESolution::new(rb.clone(), q.clone(), r.clone())?;
    let (g, p, lambda) = (sol.rb.lie(), sol.rb.p(), sol.rb.weight());
    let adm = check_q_admissible(&sol.rb, q);
    if !adm.passed() {
        return Err(Error::rejected(adm));
    }
    let delta = coboundary_delta(g, r);
    let mut dual = check_lie(&dualize_coproduct(&delta));
    if !dual.passed() {
        dual.name = "dual of the coboundary".into();
        return Err(Error::rejected(dual));
    }
    let n = g.dim();
    let id = Matrix::identity(n);
    let labels = g.space().labels();
    let l2 = g.space().tensor_labels(g.space());
    let a = &r.map_left(q) - &r.map_right(p);
    let b = &r.map_left(p) - &r.map_right(q);
    let mut first = CheckReport::new("coboundary-condition-1");
    let mut printed = CheckReport::new("coboundary-condition-1 as printed");
    let mut second = CheckReport::new("coboundary-condition-2");
    for x in 0..n {
        let ad = g.ad(x);
        let q_ad = q * &ad;
        let ad_q = g.ad_by(&q.column(x));
        let ad_p = g.ad_by(&p.column(x));
        let m = &q_ad - &ad_q;
        let t1 = &a.map_right(&m) - &b.map_left(&m);
        push_t2(&mut first, "coboundary-condition-1", &[&labels[x]], &t1, &l2);
        let t1_printed = &a.map_right(&m) + &b.map_left(&m);
        push_t2(&mut printed, "coboundary-condition-1", &[&labels[x]], &t1_printed, &l2);
        let p_ad = p * &ad;
        let t2 = &(&(&(&b.map_right(&ad_p) + &b.map_left(&ad_p)) + &b.map_right(&q_ad)) - &b.map_left(&p_ad))
            + &b.map(&id, &ad).scale(lambda);
        push_t2(&mut second, "coboundary-condition-2", &[&labels[x]], &t2, &l2);
    }
    let (first, second) = (first.finish(), second.finish());
    let coalgebra = check_rb_lie_coalgebra(&delta, q, lambda);
    let compat = check_bialgebra_compatibility(&delta, p, q, lambda);
    let mut report = CheckReport::new("coboundary-conditions");
    report.note(format!(
        "condition-1={} rb-coalgebra={} condition-2={} compatibility={}",
        first.passed(),
        coalgebra.passed(),
        second.passed(),
        compat.passed()
    ));
    report.note(format!("condition-1 with the printed sign={}", printed.finish().passed()));
    if first.passed() != coalgebra.passed() {
        report.push(Violation::with_message("equivalence-disagreement", &["condition-1"], "differs from the rb coalgebra check"));
    }
    if second.passed() != compat.passed() {
        report.push(Violation::with_message("equivalence-disagreement", &["condition-2"], "differs from the compatibility check"));
    }
    report.add_part(first);
    report.add_part(second);
    Ok(report.finish())
}

/// Outcome of the bounded search for tensors that satisfy the general
/// coboundary conditions (and the Lie bialgebra conditions) while failing
/// the admissible CYBE side conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationSearch {
    pub examined: usize,
    pub separating: Vec<Tensor2>,
}

impl SeparationSearch {
    pub fn summary(&self) -> String {
        if self.separating.is_empty() {
            format!("none found at this scale ({} tensors examined)", self.examined)
        } else {
            format!("{} separating tensors among {} examined", self.separating.len(), self.examined)
        }
    }
}

/// Antisymmetric tensors with coefficients in `[-height, height]` on an
/// algebra of dimension at most 4.
pub fn search_separating_tensors(rb: &RBLieAlgebra, q: &Matrix, height: i64) -> Result<SeparationSearch> {
    let n = rb.dim();
    if n > 4 || height > 2 {
        return Err(Error::Invalid("search is bounded to dimension 4 and height 2".into()));
    }
    let adm = check_q_admissible(rb, q);
    if !adm.passed() {
        return Err(Error::rejected(adm));
    }
    let slots: Vec<(usize, usize)> = pairs(n, true);
    let base = (2 * height + 1) as usize;
    let total = base.pow(slots.len() as u32);
    let mut out = SeparationSearch { examined: 0, separating: Vec::new() };
    for code in 0..total {
        let mut r = Tensor2::zeros(n, n);
        let mut c = code;
        for &(i, j) in &slots {
            let v = int((c % base) as i64 - height);
            c /= base;
            r.set(j, i, -&v);
            r.set(i, j, v);
        }
        out.examined += 1;
        let sol = CYBESolution::new(rb.clone(), q.clone(), r.clone())?;
        let adm = check_admissible_cybe(&sol);
        let sides = adm.find_part("side-condition P").map(|p| p.passed()).unwrap_or(false);
        if sides {
            continue;
        }
        if !check_invariance_conditions(rb.lie(), &r).passed() {
            continue;
        }
        match coboundary_conditions_general(rb, q, &r) {
            Ok(report) => {
                let both = ["coboundary-condition-1", "coboundary-condition-2"]
                    .iter()
                    .all(|name| report.find_part(name).map(|p| p.passed()).unwrap_or(false));
                if both {
                    out.separating.push(r);
                }
            }
            Err(Error::Rejected(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `(g, P, δ_r, Q)` from an antisymmetric solution of the admissible CYBE
/// in a Q-admissible algebra.
pub fn build_coboundary_rb_bialgebra(sol: &CYBESolution) -> Result<RBLieBialgebra> {
    let mut pre = CheckReport::new("coboundary preconditions");
    pre.add_part(check_admissible_cybe(sol));
    if !sol.r.is_antisymmetric() {
        pre.push(Violation::with_message("antisymmetry", &[], "r + τ(r) ≠ 0"));
    }
    pre.add_part(check_q_admissible(&sol.rb, &sol.q));
    if !pre.passed() {
        return Err(Error::rejected(pre.finish()));
    }
    let rb = sol.rb.clone().with_q_unchecked(sol.q.clone())?;
    let delta = coboundary_delta(rb.lie(), &sol.r);
    RBLieBialgebra::new(rb, delta)
}

/// `[Tu,Tv] = T(ρ(Tu)v − ρ(Tv)u)` and `PT = Tα` (weak status, part
/// "weak"), plus the Rota-Baxter representation condition (full status).
pub fn check_o_operator(rb: &RBLieAlgebra, rep: &Representation, t: &Matrix) -> Result<CheckReport> {
    ensure_dim("representation of this algebra", rb.dim(), rep.algebra().dim())?;
    ensure_dim("operator codomain", rb.dim(), t.rows())?;
    ensure_dim("operator domain", rep.module_dim(), t.cols())?;
    let alpha = rep
        .alpha()
        .ok_or_else(|| Error::Invalid("an O-operator check needs the module operator alpha".into()))?;
    let g = rb.lie();
    let g_labels = g.space().labels();
    let v_labels = rep.module().labels();
    let cols: Vec<Vec<Scalar>> = (0..t.cols()).map(|u| t.column(u)).collect();
    let rhos: Vec<Matrix> = cols.iter().map(|c| rep.rho_by(c)).collect();
    let mut bracket = CheckReport::new("bracket");
    for (u, v) in pairs(t.cols(), true) {
        let lhs = g.eval(&cols[u], &cols[v]);
        let inner = crate::linalg::vec_sub(&rhos[u].column(v), &rhos[v].column(u));
        let d = crate::linalg::vec_sub(&lhs, &t.apply(&inner));
        bracket.push_opt(Violation::from_defect("o-operator", &[&v_labels[u], &v_labels[v]], &d, g_labels));
    }
    let mut intertwine = CheckReport::new("intertwine");
    let defect = &(rb.p() * t) - &(t * alpha);
    for u in 0..t.cols() {
        intertwine.push_opt(Violation::from_defect("o-operator-intertwine", &[&v_labels[u]], &defect.column(u), g_labels));
    }
    let mut weak = CheckReport::new("weak");
    weak.add_part(bracket.finish());
    weak.add_part(intertwine.finish());
    let mut report = CheckReport::new("o-operator");
    report.add_part(weak.finish());
    report.add_part(check_rb_representation(rb, rep)?);
    Ok(report.finish())
}

/// Whether the weak part of an O-operator report passed.
pub fn is_weak_o_operator(report: &CheckReport) -> bool {
    report.find_part("weak").map(|p| p.passed()).unwrap_or(false)
}

/// For antisymmetric `r`: the admissible CYBE holds iff `T_r` is a weak
/// O-operator for `(ad*, Q*)`. Both routes are evaluated and compared.
pub fn check_solution_criteria(sol: &CYBESolution) -> Result<CheckReport> {
    let mut tensor = check_admissible_cybe(sol);
    tensor.name = "tensor route".into();
    let coadjoint = dual_representation(&crate::lie::adjoint_rep(sol.rb.lie())).with_alpha(sol.q.transpose())?;
    let t_r = map_from_tensor(&sol.r);
    let o = check_o_operator(&sol.rb, &coadjoint, &t_r)?;
    let mut operator = o.find_part("weak").cloned().expect("weak part");
    operator.name = "operator route".into();
    let mut report = CheckReport::new("solution-criteria");
    if !sol.r.is_antisymmetric() {
        report.push(Violation::with_message("antisymmetry", &[], "the criterion applies to antisymmetric tensors"));
    }
    report.note(format!("tensor={} operator={}", tensor.passed(), operator.passed()));
    if tensor.passed() != operator.passed() {
        report.push(Violation::with_message("route-disagreement", &[], "tensor and operator verdicts differ"));
    }
    report.add_part(tensor);
    report.add_part(operator);
    Ok(report.finish())
}

/// `T − τ(T)` on `g ⊕ V*` with `T` in the `g ⊗ V*` block.
pub fn lift_tensor(t: &Matrix) -> Tensor2 {
    let (n, m) = (t.rows(), t.cols());
    let mut r = Tensor2::zeros(n + m, n + m);
    for (k, a, c) in t.nonzeros() {
        r.set(k, n + a, c.clone());
        r.set(n + a, k, -c);
    }
    r
}

/// `(g ⋉_{ρ*} V*, P + β*)` with companion `Q + α*` and `r = T − τ(T)`,
/// without checking anything.
pub fn lift_candidate(rb: &RBLieAlgebra, rep: &Representation, t: &Matrix, q: &Matrix, beta: &Matrix) -> Result<CYBESolution> {
    let alpha = rep
        .alpha()
        .ok_or_else(|| Error::Invalid("the lift needs the module operator alpha".into()))?;
    ensure_dim("operator codomain", rb.dim(), t.rows())?;
    ensure_dim("operator domain", rep.module_dim(), t.cols())?;
    let dual = dual_representation(rep);
    let lie = LieAlgebra::unchecked(semidirect_bracket(&dual));
    let double = RBLieAlgebra::unchecked(lie, rb.weight().clone(), Matrix::block_diag(rb.p(), &beta.transpose()))?;
    let companion = Matrix::block_diag(q, &alpha.transpose());
    CYBESolution::new(double, companion, lift_tensor(t))
}

/// `Tβ − QT`, one violation per module basis vector.
fn check_commutes(rep: &Representation, t: &Matrix, q: &Matrix, beta: &Matrix, labels: &[String]) -> CheckReport {
    let mut report = CheckReport::new("T beta = Q T");
    let defect = &(t * beta) - &(q * t);
    let v_labels = rep.module().labels();
    for u in 0..defect.cols() {
        report.push_opt(Violation::from_defect("t-beta", &[&v_labels[u]], &defect.column(u), labels));
    }
    report.finish()
}

/// The lift of an O-operator to an antisymmetric solution of the
/// `(Q + α*)`-admissible CYBE in `(g ⋉_{ρ*} V*, P + β*)`. Refused when
/// `Tβ ≠ QT` or `β` is not admissible.
pub fn lift_o_operator(rb: &RBLieAlgebra, rep: &Representation, t: &Matrix, q: &Matrix, beta: &Matrix) -> Result<CYBESolution> {
    ensure_dim("module operator", rep.module_dim(), beta.rows())?;
    let mut pre = CheckReport::new("lift preconditions");
    pre.add_part(check_commutes(rep, t, q, beta, rb.space().labels()));
    let with_beta = rep.without_companions().with_beta(beta.clone())?;
    pre.add_part(crate::rota_baxter::check_admissible(rb, &with_beta)?);
    if !pre.passed() {
        return Err(Error::rejected(pre.finish()));
    }
    lift_candidate(rb, rep, t, q, beta)
}

/// The three `(Q, β)` pairs `(0,0)`, `(−λ id, −λ id)`, `(−P−λ id, −α−λ id)`.
pub fn standard_pairs(rb: &RBLieAlgebra, alpha: &Matrix) -> [(Matrix, Matrix); 3] {
    let n = rb.dim();
    let m = alpha.rows();
    let lambda = rb.weight();
    let lid_g = Matrix::scalar(n, lambda);
    let lid_v = Matrix::scalar(m, lambda);
    [
        (Matrix::zeros(n, n), Matrix::zeros(m, m)),
        (-&lid_g, -&lid_v),
        (-&(rb.p() + &lid_g), -&(alpha + &lid_v)),
    ]
}

/// The three coboundary Rota-Baxter Lie bialgebras of an O-operator.
pub fn bialgebras_from_o(rb: &RBLieAlgebra, rep: &Representation, t: &Matrix) -> Result<[RBLieBialgebra; 3]> {
    let report = check_o_operator(rb, rep, t)?;
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    let alpha = rep.alpha().expect("checked above");
    let [a, b, c] = standard_pairs(rb, alpha);
    let build = |(q, beta): (Matrix, Matrix)| -> Result<RBLieBialgebra> {
        build_coboundary_rb_bialgebra(&lift_o_operator(rb, rep, t, &q, &beta)?)
    };
    Ok([build(a)?, build(b)?, build(c)?])
}

/// `r = Σ e_i ⊗ e_i* − e_i* ⊗ e_i` on `g(A) ⋉_{L*∘} A*` (with companion
/// 0) and the three bialgebras it yields.
pub fn canonical_r_from_prelie(a: &RBPreLieAlgebra) -> Result<(CYBESolution, [RBLieBialgebra; 3])> {
    let rb = subadjacent_rb(a)?;
    let rep = regular_rb_representation(a);
    let id = Matrix::identity(a.dim());
    let zero = Matrix::zeros(a.dim(), a.dim());
    let sol = lift_o_operator(&rb, &rep, &id, &zero, &zero)?;
    let bialgebras = bialgebras_from_o(&rb, &rep, &id)?;
    Ok((sol, bialgebras))
}

/// `r12◁r13 = r12∘r23 + r13∘r23` for a special L-dendriform algebra.
pub fn check_sld_equation(a: &LDendriformAlgebra, r: &Tensor2) -> CheckReport {
    let mut report = CheckReport::new("sld-equation");
    let circ = a.sum();
    let d = &(&r12_r13(r, a.tri_l()) - &r12_r23(r, &circ)) - &r13_r23(r, &circ);
    push_t3(&mut report, "sld-equation", &[], &d, &a.space().tensor3_labels());
    report.finish()
}

/// `Δ(x) = (L▷(x) ⊗ id + id ⊗ ad x) r`, `∇(x) = −(L∘(x) ⊗ id + id ⊗ L∘(x)) r`
/// with `ad` the commutator of `∘ = ▷ + ◁`.
pub fn coboundary_sld_coproducts(a: &LDendriformAlgebra, r: &Tensor2) -> (Coproduct, Coproduct) {
    let circ = a.sum();
    let l_circ = circ.left_all();
    let l_gt = a.tri_r().left_all();
    let ad: Vec<Matrix> = (0..a.dim()).map(|i| &l_circ[i] - &circ.right(i)).collect();
    let neg = -r;
    let space = a.space().clone();
    let delta = Coproduct::from_fn(space.clone(), |i| &r.map_left(&l_gt[i]) + &r.map_right(&ad[i]));
    let nabla = Coproduct::from_fn(space, |i| act2(&neg, &l_circ[i]));
    (delta, nabla)
}

/// The coboundary special L-dendriform bialgebra of an antisymmetric `r`
/// solving [`check_sld_equation`].
pub fn coboundary_sld(a: &LDendriformAlgebra, r: &Tensor2) -> Result<SLDBialgebra> {
    ensure_dim("tensor", a.dim(), r.left_dim())?;
    let mut pre = check_sld_equation(a, r);
    if !r.is_antisymmetric() {
        pre.push(Violation::with_message("antisymmetry", &[], "r + τ(r) ≠ 0"));
    }
    if !pre.passed() {
        return Err(Error::rejected(pre.finish()));
    }
    let (delta, nabla) = coboundary_sld_coproducts(a, r);
    let b = SLDBialgebra::new(a.clone(), delta, nabla)?;
    let report = check_sld_bialgebra(&b);
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    Ok(b)
}

/// For a weight-zero algebra with induced `∘` and `◁ = −Q[·,·]`, and any
/// `r`: `r12∘r23 + r13∘r23 − r12◁r13 = (Q⊗id⊗id)(CYBE tensor) + S`, where
/// `S = [s12, r23] + [s13, r23]` and `s = (id⊗P)r − (Q⊗id)r`. `S` vanishes
/// under the second side condition.
pub fn check_sld_reduction(rb: &RBLieAlgebra, q: &Matrix, r: &Tensor2) -> Result<CheckReport> {
    if !rb.weight().is_zero() {
        return Err(Error::Invalid("the reduction identity needs weight zero".into()));
    }
    let ld = special_from_companion(rb.bracket(), rb.p(), q);
    let circ = ld.sum();
    let lhs = &(&r12_r23(r, &circ) + &r13_r23(r, &circ)) - &r12_r13(r, ld.tri_l());
    let s = &r.map_right(rb.p()) - &r.map_left(q);
    let bracket = rb.bracket();
    let correction = &mixed_r12_r23(&s, r, bracket) + &mixed_r13_r23(&s, r, bracket);
    let rhs = &cybe_tensor(rb.lie(), r).map_slot(0, q) + &correction;
    let mut report = CheckReport::new("sld-reduction");
    push_t3(&mut report, "sld-reduction", &[], &(&lhs - &rhs), &rb.space().tensor3_labels());
    Ok(report.finish())
}

/// `Σ s_ij r_kl e_i ⊗ [e_j, e_k] ⊗ e_l`.
fn mixed_r12_r23(s: &Tensor2, r: &Tensor2, p: &BilinearProduct) -> Tensor3 {
    let n = r.left_dim();
    let mut out = Tensor3::cube(n);
    for (i, j, a) in s.nonzeros() {
        for (k, l, b) in r.nonzeros() {
            let ab = a * b;
            for (m, c) in p.basis_product(j, k).iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(i, m, l, &(&ab * c));
                }
            }
        }
    }
    out
}

/// `Σ s_ij r_kl e_i ⊗ e_k ⊗ [e_j, e_l]`.
fn mixed_r13_r23(s: &Tensor2, r: &Tensor2, p: &BilinearProduct) -> Tensor3 {
    let n = r.left_dim();
    let mut out = Tensor3::cube(n);
    for (i, j, a) in s.nonzeros() {
        for (k, l, b) in r.nonzeros() {
            let ab = a * b;
            for (m, c) in p.basis_product(j, l).iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(i, k, m, &(&ab * c));
                }
            }
        }
    }
    out
}

/// The special L-dendriform bialgebra induced from a weight-zero
/// coboundary bialgebra equals the coboundary one built from the same `r`.
pub fn verify_same_construction(b: &RBLieBialgebra, r: &Tensor2) -> Result<CheckReport> {
    ensure_dim("tensor", b.dim(), r.left_dim())?;
    let mut report = CheckReport::new("same-construction");
    let labels = b.rb().space().labels();
    let l2 = b.rb().space().tensor_labels(b.rb().space());
    let expected = coboundary_delta(b.rb().lie(), r);
    let mut cob = CheckReport::new("coboundary");
    for i in 0..b.dim() {
        push_t2(&mut cob, "coboundary", &[&labels[i]], &(b.delta().column(i) - expected.column(i)), &l2);
    }
    report.add_part(cob.finish());
    let induced = induce_sld_bialgebra(b)?;
    let (delta, nabla) = coboundary_sld_coproducts(&induced.ldend, r);
    let mut eq = CheckReport::new("coproducts");
    for i in 0..b.dim() {
        push_t2(&mut eq, "same-delta", &[&labels[i]], &(induced.delta.column(i) - delta.column(i)), &l2);
        push_t2(&mut eq, "same-nabla", &[&labels[i]], &(induced.nabla.column(i) - nabla.column(i)), &l2);
    }
    report.add_part(eq.finish());
    Ok(report.finish())
}

/// The special L-dendriform bialgebra on `g ⋉_{ρ*} V*` from an O-operator
/// in weight zero. Every hypothesis is checked first; failures are
/// returned itemized.
pub fn sld_from_o(rb: &RBLieAlgebra, rep: &Representation, q: &Matrix, t: &Matrix) -> Result<SLDBialgebra> {
    if !rb.weight().is_zero() {
        return Err(Error::Invalid("this construction needs weight zero".into()));
    }
    let beta = rep
        .beta()
        .ok_or_else(|| Error::Invalid("this construction needs the module operator beta".into()))?
        .clone();
    let mut hyp = CheckReport::new("hypotheses");
    hyp.add_part(check_adm_sd(rb, rep, q)?);
    hyp.add_part(check_o_operator(rb, rep, t)?);
    hyp.add_part(check_commutes(rep, t, q, &beta, rb.space().labels()));
    if !hyp.passed() {
        return Err(Error::rejected(hyp.finish()));
    }
    let sol = lift_candidate(rb, rep, t, q, &beta)?;
    let bialg = build_coboundary_rb_bialgebra(&sol)?;
    let b = induce_sld_bialgebra(&bialg)?;
    let report = check_sld_bialgebra(&b);
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    Ok(b)
}

/// `T = P` on the adjoint representation with companion `Q` (which must
/// commute with `P`); `Q = −P` and `Q = 0` give the two standard families.
pub fn cor_cons1(rb: &RBLieAlgebra, q: &Matrix) -> Result<SLDBialgebra> {
    let mut pre = CheckReport::new("commuting companion");
    let defect = &(q * rb.p()) - &(rb.p() * q);
    push_columns(&mut pre, "commute", "PQ", &defect, rb.space().labels());
    if !pre.passed() {
        return Err(Error::rejected(pre.finish()));
    }
    let rep = adjoint_with(rb, rb.p().clone()).with_beta(q.clone())?;
    sld_from_o(rb, &rep, q, rb.p())
}

/// `T = id` on `(L∘, P; A)` of a weight-zero Rota-Baxter pre-Lie algebra:
/// the families with `(Q, β) = (−P, −P)` and `(0, 0)`.
pub fn cor_cons2(a: &RBPreLieAlgebra) -> Result<[SLDBialgebra; 2]> {
    let rb = subadjacent_rb(a)?;
    let rep = regular_rb_representation(a);
    let id = Matrix::identity(a.dim());
    let neg_p = -a.p();
    let zero = Matrix::zeros(a.dim(), a.dim());
    let first = sld_from_o(&rb, &rep.clone().with_beta(neg_p.clone())?, &neg_p, &id)?;
    let second = sld_from_o(&rb, &rep.with_beta(zero.clone())?, &zero, &id)?;
    Ok([first, second])
}

/// Four special L-dendriform bialgebras from a weight-zero Rota-Baxter Lie
/// algebra: two with `T = P` and two from its induced Rota-Baxter pre-Lie
/// algebra.
pub fn family_level(rb: &RBLieAlgebra) -> Result<[SLDBialgebra; 4]> {
    let neg_p = -rb.p();
    let zero = Matrix::zeros(rb.dim(), rb.dim());
    let a = cor_cons1(rb, &neg_p)?;
    let b = cor_cons1(rb, &zero)?;
    let pre = RBPreLieAlgebra::new(induce_prelie(rb)?, int(0), rb.p().clone())?;
    let [c, d] = cor_cons2(&pre)?;
    Ok([a, b, c, d])
}

/// `levels` rounds of [`family_level`], passing each time to the
/// sub-adjacent Rota-Baxter Lie algebra `[x,y]' = [Px,y] + [x,Py]`.
pub fn iterate_family(rb: &RBLieAlgebra, levels: usize) -> Result<Vec<SLDBialgebra>> {
    let mut out = Vec::new();
    let mut current = rb.clone();
    for level in 0..levels {
        out.extend(family_level(&current)?);
        if level + 1 < levels {
            let pre = RBPreLieAlgebra::new(induce_prelie(&current)?, int(0), current.p().clone())?;
            let next = subadjacent_rb(&pre)?;
            let space = Space::new(format!("{}'", current.space().name()), current.space().labels().to_vec())?;
            current = RBLieAlgebra::new(
                LieAlgebra::unchecked(next.bracket().with_space(space)?),
                int(0),
                next.p().clone(),
            )?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn na2(p: Matrix) -> RBLieAlgebra {
        let mut b = BilinearProduct::zero(Space::numbered("g", "e", 2));
        b.set(0, 1, 1, int(1));
        b.antisymmetrize_completion();
        RBLieAlgebra::new(LieAlgebra::new(b).unwrap(), int(0), p).unwrap()
    }

    #[test]
    fn zero_tensor_everything_vanishes() {
        let rb = na2(Matrix::zeros(2, 2));
        let r = Tensor2::zeros(2, 2);
        assert!(coboundary_delta(rb.lie(), &r).is_zero());
        assert!(cybe_tensor(rb.lie(), &r).is_zero());
        let sol = CYBESolution::new(rb, Matrix::zeros(2, 2), r).unwrap();
        assert!(check_admissible_cybe(&sol).passed());
        assert!(check_solution_criteria(&sol).unwrap().passed());
    }

    #[test]
    fn zero_operator_is_weak_o_operator() {
        let rb = na2(Matrix::zeros(2, 2));
        let rep = adjoint_with(&rb, Matrix::zeros(2, 2));
        let report = check_o_operator(&rb, &rep, &Matrix::zeros(2, 2)).unwrap();
        assert!(is_weak_o_operator(&report));
    }

    #[test]
    fn lifted_tensor_is_antisymmetric() {
        let t = Matrix::from_rows(&[&[1, 2], &[0, 3]]);
        let r = lift_tensor(&t);
        assert!(r.is_antisymmetric());
        assert_eq!(r.get(0, 3), &int(2));
    }
}
