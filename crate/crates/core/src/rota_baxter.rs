//! Rota-Baxter operators of arbitrary weight, Rota-Baxter representations,
//! admissible companion operators, semidirect products and matched pairs.

use crate::error::{ensure_dim, Error, Result};
use crate::lie::{
    adjoint_rep, bowtie_lie, check_matched_pair_lie, check_representation, dual_representation,
    semidirect_bracket, LieAlgebra, MatchedPairLie, Representation,
};
use crate::linalg::{vec_sub, Matrix};
use crate::product::BilinearProduct;
use crate::report::{CheckReport, Violation};
use crate::scalar::Scalar;
use crate::space::Space;

/// Basis pairs on which a bilinear identity must be evaluated: all ordered
/// pairs, or only `i < j` when the identity is alternating.
pub(crate) fn pairs(n: usize, alternating: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if !alternating || i < j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Defect of `R(x)·R(y) = R(x·R(y)) + R(R(x)·y) + λR(x·y)` on every
/// relevant basis pair of an arbitrary product.
pub fn check_rb_identity(name: &str, p: &BilinearProduct, lambda: &Scalar, r: &Matrix) -> CheckReport {
    let mut report = CheckReport::new(name);
    let n = p.dim();
    if r.rows() != n || r.cols() != n {
        report.push(Violation::with_message("shape", &[], "operator does not act on the algebra"));
        return report.finish();
    }
    let labels = p.space().labels();
    let rcols: Vec<Vec<Scalar>> = (0..n).map(|i| r.column(i)).collect();
    for (i, j) in pairs(n, p.is_antisymmetric()) {
        let e_i = crate::linalg::unit(n, i);
        let e_j = crate::linalg::unit(n, j);
        let lhs = p.eval(&rcols[i], &rcols[j]);
        let mut inner = p.eval(&e_i, &rcols[j]);
        inner = crate::linalg::vec_add(&inner, &p.eval(&rcols[i], &e_j));
        let xy = p.basis_product(i, j);
        inner = crate::linalg::vec_add(&inner, &crate::linalg::vec_scale(&xy, lambda));
        let defect = vec_sub(&lhs, &r.apply(&inner));
        report.push_opt(Violation::from_defect("rota-baxter", &[&labels[i], &labels[j]], &defect, labels));
    }
    report.finish()
}

/// `[P x, P y] − P[x, P y] − P[P x, y] − λP[x, y]` on all basis pairs.
pub fn check_rb_operator(g: &LieAlgebra, lambda: &Scalar, p: &Matrix) -> CheckReport {
    check_rb_identity("rb-operator", g.bracket(), lambda, p)
}

/// A Lie algebra with a Rota-Baxter operator of a fixed weight and an
/// optional admissible companion `Q`.
#[derive(Debug, Clone, PartialEq)]
pub struct RBLieAlgebra {
    lie: LieAlgebra,
    weight: Scalar,
    p: Matrix,
    q: Option<Matrix>,
}

impl RBLieAlgebra {
    pub fn new(lie: LieAlgebra, weight: Scalar, p: Matrix) -> Result<Self> {
        let rb = Self::unchecked(lie, weight, p)?;
        let report = check_rb_operator(&rb.lie, &rb.weight, &rb.p);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(rb)
    }

    /// Shape checks only.
    pub fn unchecked(lie: LieAlgebra, weight: Scalar, p: Matrix) -> Result<Self> {
        ensure_dim("operator rows", lie.dim(), p.rows())?;
        ensure_dim("operator columns", lie.dim(), p.cols())?;
        Ok(Self { lie, weight, p, q: None })
    }

    /// Attaches `Q` after verifying it is admissible.
    pub fn with_q(self, q: Matrix) -> Result<Self> {
        let rb = self.with_q_unchecked(q)?;
        let report = check_q_admissible(&rb, rb.q.as_ref().expect("just attached"));
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(rb)
    }

    pub fn with_q_unchecked(mut self, q: Matrix) -> Result<Self> {
        ensure_dim("companion rows", self.dim(), q.rows())?;
        ensure_dim("companion columns", self.dim(), q.cols())?;
        self.q = Some(q);
        Ok(self)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn bracket(&self) -> &BilinearProduct {
        self.lie.bracket()
    }

    pub fn space(&self) -> &Space {
        self.lie.space()
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn q(&self) -> Option<&Matrix> {
        self.q.as_ref()
    }

    /// `λ · id` on the underlying space.
    pub fn lambda_id(&self) -> Matrix {
        Matrix::scalar(self.dim(), &self.weight)
    }
}

fn require<'a>(m: Option<&'a Matrix>, what: &str) -> Result<&'a Matrix> {
    m.ok_or_else(|| Error::Invalid(format!("the representation has no {what} operator")))
}

fn check_rep_algebra(rb: &RBLieAlgebra, rep: &Representation) -> Result<()> {
    ensure_dim("representation of this algebra", rb.dim(), rep.algebra().dim())
}

/// `ρ(Px)α − αρ(Px) − αρ(x)α − λαρ(x) = 0` for every basis element x,
/// evaluated on every module basis vector.
pub fn check_rb_representation(rb: &RBLieAlgebra, rep: &Representation) -> Result<CheckReport> {
    check_rep_algebra(rb, rep)?;
    let alpha = require(rep.alpha(), "alpha")?;
    let mut report = CheckReport::new("rb-representation");
    let g_labels = rb.space().labels();
    let v_labels = rep.module().labels();
    let lambda = rb.weight();
    for i in 0..rb.dim() {
        let rx = rep.rho(i);
        let rpx = rep.rho_by(&rb.p().column(i));
        let a_rpx = alpha * &rpx;
        let defect = &(&(&(&rpx * alpha) - &a_rpx) - &(&(alpha * rx) * alpha)) - &(alpha * rx).scale(lambda);
        push_columns(&mut report, "rb-rep", &g_labels[i], &defect, v_labels);
    }
    Ok(report.finish())
}

/// One violation per nonzero column of a matrix defect, witnessed by the
/// algebra element and the module basis vector.
pub(crate) fn push_columns(report: &mut CheckReport, tag: &str, x: &str, defect: &Matrix, labels: &[String]) {
    for v in 0..defect.cols() {
        report.push_opt(Violation::from_defect(tag, &[x, &labels[v]], &defect.column(v), labels));
    }
}

/// `βρ(Px) − ρ(Px)β − βρ(x)β − λρ(x)β = 0`. The dual route, that
/// `(ρ*, β*)` is a Rota-Baxter representation, is evaluated as a second
/// part; any disagreement between the two is itself a violation.
pub fn check_admissible(rb: &RBLieAlgebra, rep: &Representation) -> Result<CheckReport> {
    check_rep_algebra(rb, rep)?;
    let beta = require(rep.beta(), "beta")?;
    let mut direct = CheckReport::new("admissibility");
    let g_labels = rb.space().labels();
    let v_labels = rep.module().labels();
    let lambda = rb.weight();
    for i in 0..rb.dim() {
        let rx = rep.rho(i);
        let rpx = rep.rho_by(&rb.p().column(i));
        let rx_b = rx * beta;
        let defect = &(&(&(beta * &rpx) - &(&rpx * beta)) - &(beta * &rx_b)) - &rx_b.scale(lambda);
        push_columns(&mut direct, "admissible", &g_labels[i], &defect, v_labels);
    }
    let direct = direct.finish();
    let dual = dual_representation(rep).with_alpha(beta.transpose())?;
    let mut via_dual = check_rb_representation(rb, &dual)?;
    via_dual.name = "dual rb-representation".into();
    let mut report = CheckReport::new("admissible");
    if direct.passed() != via_dual.passed() {
        report.push(Violation::with_message("route-disagreement", &[], "direct and dual verdicts differ"));
    }
    report.add_part(direct);
    report.add_part(via_dual);
    Ok(report.finish())
}

/// Q-admissibility: `Q[Px,y] − [Px,Qy] − Q[x,Qy] − λ[x,Qy] = 0`, the
/// adjoint case of [`check_admissible`].
pub fn check_q_admissible(rb: &RBLieAlgebra, q: &Matrix) -> CheckReport {
    let rep = adjoint_rep(rb.lie()).with_beta(q.clone()).expect("companion has the algebra's shape");
    check_admissible(rb, &rep).expect("adjoint representation with beta")
}

/// `[−P−λ id, −λ id, 0]`, always admissible.
pub fn standard_admissibles(rb: &RBLieAlgebra) -> Vec<Matrix> {
    let lid = rb.lambda_id();
    vec![-&(rb.p() + &lid), -&lid, Matrix::zeros(rb.dim(), rb.dim())]
}

/// `(g ⋉_ρ V, P + α)` without verifying anything.
pub fn semidirect_rb_candidate(rb: &RBLieAlgebra, rep: &Representation) -> Result<RBLieAlgebra> {
    check_rep_algebra(rb, rep)?;
    let alpha = require(rep.alpha(), "alpha")?;
    let lie = LieAlgebra::unchecked(semidirect_bracket(rep));
    RBLieAlgebra::unchecked(lie, rb.weight().clone(), Matrix::block_diag(rb.p(), alpha))
}

/// `(g ⋉_ρ V, P + α)`, refused unless `(ρ, α)` is a Rota-Baxter
/// representation.
pub fn semidirect_product_rb(rb: &RBLieAlgebra, rep: &Representation) -> Result<RBLieAlgebra> {
    let mut report = check_rb_representation(rb, rep)?;
    report.add_part(check_representation(rep));
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    semidirect_rb_candidate(rb, rep)
}

/// `φρ₁(x) = ρ₂(x)φ` on every basis element and `φα₁ = α₂φ`.
pub fn check_rep_equivalence(
    rb: &RBLieAlgebra,
    rep1: &Representation,
    rep2: &Representation,
    phi: &Matrix,
) -> Result<CheckReport> {
    check_rep_algebra(rb, rep1)?;
    check_rep_algebra(rb, rep2)?;
    ensure_dim("phi domain", rep1.module_dim(), phi.cols())?;
    ensure_dim("phi codomain", rep2.module_dim(), phi.rows())?;
    if !phi.is_square() || num_traits::Zero::is_zero(&phi.det()) {
        return Err(Error::Singular("the intertwining map is not invertible".into()));
    }
    let mut report = CheckReport::new("rep-equivalence");
    let g_labels = rb.space().labels();
    let v1 = rep1.module().labels();
    let w = rep2.module().labels();
    for i in 0..rb.dim() {
        let defect = &(phi * rep1.rho(i)) - &(rep2.rho(i) * phi);
        for v in 0..defect.cols() {
            report.push_opt(Violation::from_defect("intertwine-rho", &[&g_labels[i], &v1[v]], &defect.column(v), w));
        }
    }
    match (rep1.alpha(), rep2.alpha()) {
        (Some(a1), Some(a2)) => {
            let defect = &(phi * a1) - &(a2 * phi);
            for v in 0..defect.cols() {
                report.push_opt(Violation::from_defect("intertwine-alpha", &[&v1[v]], &defect.column(v), w));
            }
        }
        (None, None) => report.note("no alpha operators to intertwine"),
        _ => return Err(Error::Invalid("only one representation carries an alpha operator".into())),
    }
    Ok(report.finish())
}

/// `((g, P_g), (h, P_h), ρ_g, ρ_h)`; the alpha slots of the representations
/// are the partner operators.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedPairRB {
    pub g: RBLieAlgebra,
    pub h: RBLieAlgebra,
    pub rho_g: Representation,
    pub rho_h: Representation,
}

impl MatchedPairRB {
    /// Sets `alpha` of `ρ_g` to `P_h` and of `ρ_h` to `P_g`. Weights must
    /// agree.
    pub fn new(g: RBLieAlgebra, h: RBLieAlgebra, rho_g: Representation, rho_h: Representation) -> Result<Self> {
        if g.weight() != h.weight() {
            return Err(Error::Invalid("matched pair of Rota-Baxter Lie algebras with different weights".into()));
        }
        ensure_dim("g acts on h", h.dim(), rho_g.module_dim())?;
        ensure_dim("h acts on g", g.dim(), rho_h.module_dim())?;
        let rho_g = rho_g.with_alpha(h.p().clone())?;
        let rho_h = rho_h.with_alpha(g.p().clone())?;
        Ok(Self { g, h, rho_g, rho_h })
    }

    pub fn lie_pair(&self) -> MatchedPairLie {
        MatchedPairLie {
            g: self.g.lie().clone(),
            h: self.h.lie().clone(),
            rho_g: self.rho_g.without_companions(),
            rho_h: self.rho_h.without_companions(),
        }
    }
}

/// The Lie matched pair plus both Rota-Baxter representation conditions.
pub fn check_matched_pair_rb(mp: &MatchedPairRB) -> CheckReport {
    let mut report = CheckReport::new("matched-pair-rb");
    report.add_part(check_matched_pair_lie(&mp.lie_pair()));
    let mut a = check_rb_representation(&mp.g, &mp.rho_g).expect("alpha set by constructor");
    a.name = "rho_g with P_h".into();
    let mut b = check_rb_representation(&mp.h, &mp.rho_h).expect("alpha set by constructor");
    b.name = "rho_h with P_g".into();
    report.add_part(a);
    report.add_part(b);
    report.finish()
}

/// `(g ⋈ h, P_g + P_h)` with the Rota-Baxter check of the result.
pub fn rb_bowtie(mp: &MatchedPairRB) -> (RBLieAlgebra, CheckReport) {
    let (lie, mut lie_report) = bowtie_lie(&mp.lie_pair());
    let op = Matrix::block_diag(mp.g.p(), mp.h.p());
    let mut report = check_rb_operator(&lie, mp.g.weight(), &op);
    lie_report.name = "bowtie lie".into();
    report.add_part(lie_report);
    let rb = RBLieAlgebra::unchecked(lie, mp.g.weight().clone(), op).expect("block operator fits the sum");
    (rb, report.finish())
}

/// `β(ρ(x)αv) = β(ρ(Qx)v) + ρ(Qx)αv + λρ(Qx)v` on all basis pairs.
pub fn check_adm_sd_compatibility(rb: &RBLieAlgebra, rep: &Representation, q: &Matrix) -> Result<CheckReport> {
    check_rep_algebra(rb, rep)?;
    let alpha = require(rep.alpha(), "alpha")?;
    let beta = require(rep.beta(), "beta")?;
    let mut report = CheckReport::new("semidirect-compatibility");
    let g_labels = rb.space().labels();
    let v_labels = rep.module().labels();
    for i in 0..rb.dim() {
        let rqx = rep.rho_by(&q.column(i));
        let lhs = &(beta * rep.rho(i)) * alpha;
        let rhs = &(&(beta * &rqx) + &(&rqx * alpha)) + &rqx.scale(rb.weight());
        push_columns(&mut report, "compatibility", &g_labels[i], &(&lhs - &rhs), v_labels);
    }
    Ok(report.finish())
}

/// The three equivalent statements about admissibility on semidirect
/// products: (a) `Q+β` admissible to `(g ⋉_ρ V, P+α)`, (b) `Q+α*`
/// admissible to `(g ⋉_ρ* V*, P+β*)`, (c) the four component conditions.
/// Each is a part of the report; disagreement is a violation.
pub fn check_adm_sd(rb: &RBLieAlgebra, rep: &Representation, q: &Matrix) -> Result<CheckReport> {
    check_rep_algebra(rb, rep)?;
    let alpha = require(rep.alpha(), "alpha")?.clone();
    let beta = require(rep.beta(), "beta")?.clone();

    let mut conditions = CheckReport::new("conditions");
    let mut i = check_rb_representation(rb, rep)?;
    i.name = "(i) rb-representation".into();
    let mut ii = check_q_admissible(rb, q);
    ii.name = "(ii) Q admissible".into();
    let mut iii = check_admissible(rb, rep)?;
    iii.name = "(iii) beta admissible".into();
    let mut iv = check_adm_sd_compatibility(rb, rep, q)?;
    iv.name = "(iv) compatibility".into();
    for part in [i, ii, iii, iv] {
        conditions.add_part(part);
    }
    let conditions = conditions.finish();

    let semidirect = semidirect_side(rb, rep, &alpha, &beta, q, "semidirect")?;
    let dual_rep = dual_representation(rep).with_alpha(beta.transpose())?;
    let semidirect_dual = semidirect_side(rb, &dual_rep, &beta.transpose(), &alpha.transpose(), q, "dual semidirect")?;

    let mut report = CheckReport::new("admissible-semidirect");
    let verdicts = [conditions.passed(), semidirect.passed(), semidirect_dual.passed()];
    report.note(format!(
        "verdicts: conditions={} semidirect={} dual-semidirect={}",
        verdicts[0], verdicts[1], verdicts[2]
    ));
    if verdicts.iter().any(|v| *v != verdicts[0]) {
        report.push(Violation::with_message("equivalence-disagreement", &[], "the three statements disagree"));
    }
    report.add_part(conditions);
    report.add_part(semidirect);
    report.add_part(semidirect_dual);
    Ok(report.finish())
}

/// Rota-Baxter identity of `P + op` on `g ⋉_ρ V` and admissibility of
/// `Q + companion` to it.
fn semidirect_side(
    rb: &RBLieAlgebra,
    rep: &Representation,
    op: &Matrix,
    companion: &Matrix,
    q: &Matrix,
    name: &str,
) -> Result<CheckReport> {
    let rep = rep.without_companions().with_alpha(op.clone())?;
    let double = semidirect_rb_candidate(rb, &rep)?;
    let mut report = CheckReport::new(name);
    report.add_part(check_rb_operator(double.lie(), double.weight(), double.p()));
    let big_q = Matrix::block_diag(q, companion);
    report.add_part(check_q_admissible(&double, &big_q));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::adjoint_rep;
    use crate::scalar::int;

    fn na2() -> LieAlgebra {
        let s = Space::numbered("g", "e", 2);
        let mut p = BilinearProduct::zero(s);
        p.set(0, 1, 0, int(1));
        p.antisymmetrize_completion();
        LieAlgebra::new(p).unwrap()
    }

    #[test]
    fn trivial_operators_are_rota_baxter() {
        let g = na2();
        for l in [-1, 0, 1, 3] {
            let lambda = int(l);
            assert!(check_rb_operator(&g, &lambda, &Matrix::zeros(2, 2)).passed());
            assert!(check_rb_operator(&g, &lambda, &Matrix::scalar(2, &-&lambda)).passed());
        }
        assert!(!check_rb_operator(&g, &int(0), &Matrix::identity(2)).passed());
    }

    #[test]
    fn standard_admissibles_pass() {
        let rb = RBLieAlgebra::new(na2(), int(1), Matrix::from_rows(&[&[-1, 2], &[0, 1]])).unwrap();
        for q in standard_admissibles(&rb) {
            assert!(check_q_admissible(&rb, &q).passed());
        }
    }

    #[test]
    fn missing_companion_is_an_error() {
        let rb = RBLieAlgebra::new(na2(), int(0), Matrix::zeros(2, 2)).unwrap();
        assert!(check_rb_representation(&rb, &adjoint_rep(rb.lie())).is_err());
        assert!(check_admissible(&rb, &adjoint_rep(rb.lie())).is_err());
    }
}
