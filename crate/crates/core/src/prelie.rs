//! Pre-Lie algebras, their representations, L-dendriform and special
//! L-dendriform algebras, Rota-Baxter pre-Lie algebras and matched pairs of
//! pre-Lie algebras.

use num_traits::Zero;

use crate::error::{ensure_dim, Error, Result};
use crate::lie::{adjoint_rep, BilinearForm, LieAlgebra, Representation};
use crate::linalg::{unit, vec_add, vec_sub, Matrix};
use crate::product::BilinearProduct;
use crate::report::{CheckReport, Violation};
use crate::rota_baxter::{check_q_admissible, check_rb_identity, check_rb_representation, push_columns, RBLieAlgebra};
use crate::scalar::Scalar;
use crate::space::Space;

/// Left and right multiplication matrices of every basis element.
pub fn multiplication_operators(p: &BilinearProduct) -> (Vec<Matrix>, Vec<Matrix>) {
    (p.left_all(), p.right_all())
}

/// `(x∘y)∘z − x∘(y∘z) = (y∘x)∘z − y∘(x∘z)` on all basis triples.
pub fn check_prelie(p: &BilinearProduct) -> CheckReport {
    let mut report = CheckReport::new("prelie");
    let n = p.dim();
    let labels = p.space().labels();
    let (left, right) = multiplication_operators(p);
    for i in 0..n {
        for j in i + 1..n {
            // the associator difference is alternating in the first two slots
            let xy = p.basis_product(i, j);
            let yx = p.basis_product(j, i);
            for k in 0..n {
                let assoc_xy = vec_sub(&right[k].apply(&xy), &left[i].apply(&p.basis_product(j, k)));
                let assoc_yx = vec_sub(&right[k].apply(&yx), &left[j].apply(&p.basis_product(i, k)));
                let defect = vec_sub(&assoc_xy, &assoc_yx);
                report.push_opt(Violation::from_defect(
                    "left-symmetry",
                    &[&labels[i], &labels[j], &labels[k]],
                    &defect,
                    labels,
                ));
            }
        }
    }
    report.finish()
}

#[derive(Debug, Clone, PartialEq)]
pub struct PreLieAlgebra {
    product: BilinearProduct,
}

impl PreLieAlgebra {
    pub fn new(product: BilinearProduct) -> Result<Self> {
        let report = check_prelie(&product);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(Self { product })
    }

    pub fn unchecked(product: BilinearProduct) -> Self {
        Self { product }
    }

    pub fn product(&self) -> &BilinearProduct {
        &self.product
    }

    pub fn space(&self) -> &Space {
        self.product.space()
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.product.eval(u, v)
    }
}

/// `x∘y = [P(x), y]` on a weight-zero Rota-Baxter Lie algebra.
pub fn induce_prelie(rb: &RBLieAlgebra) -> Result<PreLieAlgebra> {
    if !rb.weight().is_zero() {
        return Err(Error::Invalid("the induced pre-Lie algebra needs weight zero".into()));
    }
    PreLieAlgebra::new(induced_product(rb.bracket(), rb.p()))
}

/// `x∘y = [T(x), y]` for any operator, without checks.
pub(crate) fn induced_product(bracket: &BilinearProduct, t: &Matrix) -> BilinearProduct {
    let cols: Vec<Vec<Scalar>> = (0..bracket.dim()).map(|i| t.column(i)).collect();
    BilinearProduct::from_fn(bracket.space().clone(), |i, j| bracket.eval(&cols[i], &unit(bracket.dim(), j)))
}

/// Commutator of the pre-Lie product.
pub fn subadjacent_lie(p: &PreLieAlgebra) -> LieAlgebra {
    LieAlgebra::unchecked(p.product().commutator())
}

/// `B(x∘y, z) + B(y, x∘z) = 0` on all basis triples.
pub fn check_left_invariant_form(p: &PreLieAlgebra, b: &BilinearForm) -> CheckReport {
    let mut report = CheckReport::new("left-invariance");
    let n = p.dim();
    if b.space().dim() != n {
        report.push(Violation::with_message("shape", &[], "form and algebra dimensions differ"));
        return report.finish();
    }
    let labels = p.space().labels();
    let value = ["B".to_string()];
    for i in 0..n {
        for j in 0..n {
            let xy = p.product().basis_product(i, j);
            for k in 0..n {
                let xz = p.product().basis_product(i, k);
                let d = b.eval(&xy, &unit(n, k)) + b.eval(&unit(n, j), &xz);
                report.push_opt(Violation::from_defect(
                    "left-invariance",
                    &[&labels[i], &labels[j], &labels[k]],
                    &[d],
                    &value,
                ));
            }
        }
    }
    report.finish()
}

/// `(l, r; V)` for a pre-Lie algebra, one matrix per basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct PreLieRepresentation {
    algebra: PreLieAlgebra,
    module: Space,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
}

impl PreLieRepresentation {
    pub fn new(algebra: PreLieAlgebra, module: Space, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        let rep = Self::unchecked(algebra, module, l, r)?;
        let report = check_prelie_representation(&rep);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(rep)
    }

    /// Checks shapes only.
    pub fn unchecked(algebra: PreLieAlgebra, module: Space, l: Vec<Matrix>, r: Vec<Matrix>) -> Result<Self> {
        ensure_dim("one left matrix per basis element", algebra.dim(), l.len())?;
        ensure_dim("one right matrix per basis element", algebra.dim(), r.len())?;
        for m in l.iter().chain(&r) {
            ensure_dim("action matrix rows", module.dim(), m.rows())?;
            ensure_dim("action matrix columns", module.dim(), m.cols())?;
        }
        Ok(Self { algebra, module, l, r })
    }

    /// `(L∘, R∘; A)`.
    pub fn regular(p: &PreLieAlgebra) -> Self {
        let (l, r) = multiplication_operators(p.product());
        Self { algebra: p.clone(), module: p.space().clone(), l, r }
    }

    pub fn algebra(&self) -> &PreLieAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &Space {
        &self.module
    }

    pub fn l(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn r(&self, i: usize) -> &Matrix {
        &self.r[i]
    }

    pub fn l_by(&self, x: &[Scalar]) -> Matrix {
        combine(&self.l, x, self.module.dim())
    }

    pub fn r_by(&self, x: &[Scalar]) -> Matrix {
        combine(&self.r, x, self.module.dim())
    }
}

fn combine(ms: &[Matrix], x: &[Scalar], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (i, xi) in x.iter().enumerate() {
        if !xi.is_zero() {
            out = &out + &ms[i].scale(xi);
        }
    }
    out
}

/// `l(x)l(y) − l(x∘y) = l(y)l(x) − l(y∘x)` and
/// `l(x)r(y) − r(y)l(x) = r(x∘y) − r(y)r(x)` on every module vector.
pub fn check_prelie_representation(rep: &PreLieRepresentation) -> CheckReport {
    let mut report = CheckReport::new("prelie-representation");
    let p = rep.algebra().product();
    let labels = rep.algebra().space().labels();
    let v_labels = rep.module().labels();
    for i in 0..p.dim() {
        for j in 0..p.dim() {
            let xy = p.basis_product(i, j);
            let witness = format!("{},{}", labels[i], labels[j]);
            if i < j {
                let yx = p.basis_product(j, i);
                let lhs = &(rep.l(i) * rep.l(j)) - &rep.l_by(&xy);
                let rhs = &(rep.l(j) * rep.l(i)) - &rep.l_by(&yx);
                push_columns(&mut report, "prelie-rep-1", &witness, &(&lhs - &rhs), v_labels);
            }
            let lhs = &(rep.l(i) * rep.r(j)) - &(rep.r(j) * rep.l(i));
            let rhs = &rep.r_by(&xy) - &(rep.r(j) * rep.r(i));
            push_columns(&mut report, "prelie-rep-2", &witness, &(&lhs - &rhs), v_labels);
        }
    }
    report.finish()
}

/// `(l* − r*, −r*; V*)` where `f*(x) = −f(x)ᵀ`, i.e. `(rᵀ − lᵀ, rᵀ)`.
pub fn dual_prelie_representation(rep: &PreLieRepresentation) -> PreLieRepresentation {
    let l = rep.l.iter().zip(&rep.r).map(|(l, r)| &r.transpose() - &l.transpose()).collect();
    let r = rep.r.iter().map(|r| r.transpose()).collect();
    PreLieRepresentation { algebra: rep.algebra.clone(), module: rep.module.dual(), l, r }
}

/// `l(x) = ρ(P(x))`, `r(x) = −ρ(x)α` for a Rota-Baxter representation of a
/// weight-zero Rota-Baxter Lie algebra.
pub fn induced_prelie_representation(rb: &RBLieAlgebra, rep: &Representation) -> Result<PreLieRepresentation> {
    let report = check_rb_representation(rb, rep)?;
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    let prelie = induce_prelie(rb)?;
    let alpha = rep.alpha().expect("checked above");
    let l = (0..rb.dim()).map(|i| rep.rho_by(&rb.p().column(i))).collect();
    let r = (0..rb.dim()).map(|i| -&(rep.rho(i) * alpha)).collect();
    PreLieRepresentation::unchecked(prelie, rep.module().clone(), l, r)
}

/// `(A, ▷, ◁)`; special when `◁` is antisymmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct LDendriformAlgebra {
    tri_r: BilinearProduct,
    tri_l: BilinearProduct,
}

impl LDendriformAlgebra {
    pub fn new(tri_r: BilinearProduct, tri_l: BilinearProduct) -> Result<Self> {
        let a = Self::unchecked(tri_r, tri_l)?;
        let report = check_ldendriform(&a);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(a)
    }

    pub fn unchecked(tri_r: BilinearProduct, tri_l: BilinearProduct) -> Result<Self> {
        if tri_r.space() != tri_l.space() {
            return Err(Error::Dimension("both products must live on the same space".into()));
        }
        Ok(Self { tri_r, tri_l })
    }

    /// `▷`
    pub fn tri_r(&self) -> &BilinearProduct {
        &self.tri_r
    }

    /// `◁`
    pub fn tri_l(&self) -> &BilinearProduct {
        &self.tri_l
    }

    pub fn space(&self) -> &Space {
        self.tri_r.space()
    }

    pub fn dim(&self) -> usize {
        self.tri_r.dim()
    }

    pub fn is_special(&self) -> bool {
        self.tri_l.is_antisymmetric()
    }

    /// `▷ + ◁`, the sub-adjacent pre-Lie product of a special algebra.
    pub fn sum(&self) -> BilinearProduct {
        self.tri_r.add(&self.tri_l)
    }
}

/// Both L-dendriform identities on all basis triples; notes whether `◁` is
/// antisymmetric.
pub fn check_ldendriform(a: &LDendriformAlgebra) -> CheckReport {
    let mut report = CheckReport::new("ldendriform");
    let n = a.dim();
    let labels = a.space().labels();
    let (gt, lt) = (a.tri_r(), a.tri_l());
    let (gt_l, gt_r) = multiplication_operators(gt);
    let (lt_l, lt_r) = multiplication_operators(lt);
    for i in 0..n {
        for j in 0..n {
            let x_gt_y = gt.basis_product(i, j);
            let x_lt_y = lt.basis_product(i, j);
            let y_lt_x = lt.basis_product(j, i);
            let y_gt_x = gt.basis_product(j, i);
            for k in 0..n {
                let w = [labels[i].as_str(), labels[j].as_str(), labels[k].as_str()];
                let x_gt_z = gt.basis_product(i, k);
                let y_gt_z = gt.basis_product(j, k);
                // (x▷y)▷z + (x◁y)▷z + y▷(x▷z) − (y◁x)▷z − (y▷x)▷z − x▷(y▷z)
                let mut d1 = gt_r[k].apply(&vec_add(&x_gt_y, &x_lt_y));
                d1 = vec_add(&d1, &gt_l[j].apply(&x_gt_z));
                d1 = vec_sub(&d1, &gt_r[k].apply(&vec_add(&y_lt_x, &y_gt_x)));
                d1 = vec_sub(&d1, &gt_l[i].apply(&y_gt_z));
                report.push_opt(Violation::from_defect("ldend-1", &w, &d1, labels));
                // (x▷y)◁z + y◁(x▷z) + y◁(x◁z) − (y◁x)◁z − x▷(y◁z)
                let x_lt_z = lt.basis_product(i, k);
                let mut d2 = lt_r[k].apply(&x_gt_y);
                d2 = vec_add(&d2, &lt_l[j].apply(&vec_add(&x_gt_z, &x_lt_z)));
                d2 = vec_sub(&d2, &lt_r[k].apply(&y_lt_x));
                d2 = vec_sub(&d2, &gt_l[i].apply(&lt.basis_product(j, k)));
                report.push_opt(Violation::from_defect("ldend-2", &w, &d2, labels));
            }
        }
    }
    report.note(format!("special: {}", a.is_special()));
    report.finish()
}

/// `▷ + ◁ = ∘` entrywise.
pub fn check_compatible(a: &LDendriformAlgebra, p: &BilinearProduct) -> CheckReport {
    let mut report = CheckReport::new("compatible");
    let labels = a.space().labels();
    if p.dim() != a.dim() {
        report.push(Violation::with_message("shape", &[], "dimension mismatch"));
        return report.finish();
    }
    let sum = a.sum();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let d = vec_sub(&sum.basis_product(i, j), &p.basis_product(i, j));
            report.push_opt(Violation::from_defect("compatible", &[&labels[i], &labels[j]], &d, labels));
        }
    }
    report.finish()
}

/// Horizontal `x▷y − y◁x` and vertical `x▷y + x◁y` products.
pub fn horizontal_vertical(a: &LDendriformAlgebra) -> (PreLieAlgebra, PreLieAlgebra) {
    let horizontal = a.tri_r().sub(&a.tri_l().opposite());
    (PreLieAlgebra::unchecked(horizontal), PreLieAlgebra::unchecked(a.sum()))
}

/// `x◁(y◁z) + y◁(x∘z) − z◁(x∘y) − x∘(y◁z) = 0`, the condition under which an
/// antisymmetric `◁` splits a pre-Lie product.
pub fn check_split_condition(circ: &BilinearProduct, tri_l: &BilinearProduct) -> CheckReport {
    let mut report = CheckReport::new("split-condition");
    let n = circ.dim();
    let labels = circ.space().labels();
    let (lt_l, _) = multiplication_operators(tri_l);
    let (c_l, _) = multiplication_operators(circ);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut d = lt_l[i].apply(&tri_l.basis_product(j, k));
                d = vec_add(&d, &lt_l[j].apply(&circ.basis_product(i, k)));
                d = vec_sub(&d, &lt_l[k].apply(&circ.basis_product(i, j)));
                d = vec_sub(&d, &c_l[i].apply(&tri_l.basis_product(j, k)));
                report.push_opt(Violation::from_defect(
                    "split",
                    &[&labels[i], &labels[j], &labels[k]],
                    &d,
                    labels,
                ));
            }
        }
    }
    report.finish()
}

/// `(L*∘, L*◁; A*)` with `f*(x) = −f(x)ᵀ`.
pub fn coregular_representation(circ: &PreLieAlgebra, tri_l: &BilinearProduct) -> Result<PreLieRepresentation> {
    ensure_dim("◁ on the pre-Lie algebra", circ.dim(), tri_l.dim())?;
    let l = circ.product().left_all().iter().map(|m| -&m.transpose()).collect();
    let r = tri_l.left_all().iter().map(|m| -&m.transpose()).collect();
    PreLieRepresentation::unchecked(circ.clone(), circ.space().dual(), l, r)
}

/// `x◁y = −Q[x,y]`, `x▷y = [P(x),y] + Q[x,y]` for an admissible `Q`.
pub fn special_from_admissible(rb: &RBLieAlgebra, q: &Matrix) -> Result<LDendriformAlgebra> {
    if !rb.weight().is_zero() {
        return Err(Error::Invalid("special L-dendriform algebras come from weight zero".into()));
    }
    let report = check_q_admissible(rb, q);
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    Ok(special_from_companion(rb.bracket(), rb.p(), q))
}

pub(crate) fn special_from_companion(bracket: &BilinearProduct, p: &Matrix, q: &Matrix) -> LDendriformAlgebra {
    let circ = induced_product(bracket, p);
    let space = bracket.space().clone();
    let tri_l = BilinearProduct::from_fn(space, |i, j| {
        let v = q.apply(&bracket.basis_product(i, j));
        v.iter().map(|c| -c).collect()
    });
    LDendriformAlgebra { tri_r: circ.sub(&tri_l), tri_l }
}

/// Solves `B(x◁y, z) = B(x, z∘y)` for `◁` and sets `▷ = ∘ − ◁`.
pub fn special_from_left_invariant_form(p: &PreLieAlgebra, b: &BilinearForm) -> Result<LDendriformAlgebra> {
    ensure_dim("form on the algebra", p.dim(), b.space().dim())?;
    let b_inv = b.matrix().inverse()?;
    let report = check_left_invariant_form(p, b);
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    let n = p.dim();
    let mut tri_l = BilinearProduct::zero(p.space().clone());
    for y in 0..n {
        // the matrix of x ↦ x◁y is (B R(y) B⁻¹)ᵀ
        let m = (&(b.matrix() * &p.product().right(y)) * &b_inv).transpose();
        for (k, i, c) in m.nonzeros() {
            tri_l.set(i, y, k, c.clone());
        }
    }
    Ok(LDendriformAlgebra { tri_r: p.product().sub(&tri_l), tri_l })
}

/// `x▷y = [P₂P₁x, y]`, `x◁y = [P₁x, P₂y]` for commuting weight-zero
/// Rota-Baxter operators; ◁ is in general not antisymmetric.
pub fn ldendriform_from_commuting_pair(g: &LieAlgebra, p1: &Matrix, p2: &Matrix) -> LDendriformAlgebra {
    let p21 = p2 * p1;
    let tri_r = induced_product(g.bracket(), &p21);
    let tri_l = BilinearProduct::from_fn(g.space().clone(), |i, j| g.eval(&p1.column(i), &p2.column(j)));
    LDendriformAlgebra { tri_r, tri_l }
}

/// The weighted Rota-Baxter identity for a pre-Lie product.
pub fn check_rb_prelie(p: &PreLieAlgebra, lambda: &Scalar, op: &Matrix) -> CheckReport {
    check_rb_identity("rb-prelie", p.product(), lambda, op)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RBPreLieAlgebra {
    prelie: PreLieAlgebra,
    weight: Scalar,
    p: Matrix,
}

impl RBPreLieAlgebra {
    pub fn new(prelie: PreLieAlgebra, weight: Scalar, p: Matrix) -> Result<Self> {
        ensure_dim("operator rows", prelie.dim(), p.rows())?;
        ensure_dim("operator columns", prelie.dim(), p.cols())?;
        let report = check_rb_prelie(&prelie, &weight, &p);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(Self { prelie, weight, p })
    }

    pub fn prelie(&self) -> &PreLieAlgebra {
        &self.prelie
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn dim(&self) -> usize {
        self.prelie.dim()
    }
}

/// `(g(A), [−,−], P)`, verified.
pub fn subadjacent_rb(a: &RBPreLieAlgebra) -> Result<RBLieAlgebra> {
    RBLieAlgebra::new(subadjacent_lie(a.prelie()), a.weight().clone(), a.p().clone())
}

/// `(L∘, P; A)` as a representation of the sub-adjacent Lie algebra.
pub fn regular_rb_representation(a: &RBPreLieAlgebra) -> Representation {
    let lie = subadjacent_lie(a.prelie());
    Representation::unchecked(lie, a.prelie().space().clone(), a.prelie().product().left_all())
        .and_then(|r| r.with_alpha(a.p().clone()))
        .expect("left multiplications act on the algebra itself")
}

/// `u∘v = ρ(T(u))v` with operator `α`, for an O-operator `T`.
pub fn induced_rb_prelie_from_o(rb: &RBLieAlgebra, rep: &Representation, t: &Matrix) -> Result<RBPreLieAlgebra> {
    let report = crate::cybe::check_o_operator(rb, rep, t)?;
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    let product = BilinearProduct::from_fn(rep.module().clone(), |i, j| rep.rho_by(&t.column(i)).column(j));
    let alpha = rep.alpha().expect("checked by the O-operator test").clone();
    RBPreLieAlgebra::new(PreLieAlgebra::unchecked(product), rb.weight().clone(), alpha)
}

/// `(A, B, l_A, r_A, l_B, r_B)`: `act_a = (l_A, r_A; B)` and
/// `act_b = (l_B, r_B; A)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedPairPreLie {
    pub act_a: PreLieRepresentation,
    pub act_b: PreLieRepresentation,
}

impl MatchedPairPreLie {
    pub fn new(act_a: PreLieRepresentation, act_b: PreLieRepresentation) -> Result<Self> {
        ensure_dim("A acts on B", act_b.algebra().dim(), act_a.module().dim())?;
        ensure_dim("B acts on A", act_a.algebra().dim(), act_b.module().dim())?;
        Ok(Self { act_a, act_b })
    }

    pub fn a(&self) -> &PreLieAlgebra {
        self.act_a.algebra()
    }

    pub fn b(&self) -> &PreLieAlgebra {
        self.act_b.algebra()
    }
}

/// The two matched-pair identities whose free algebra element lies in the
/// acting algebra `act.algebra()`, with the partner acting back through
/// `back`. Called once per side.
fn matched_pair_side(report: &mut CheckReport, tag: &str, act: &PreLieRepresentation, back: &PreLieRepresentation) {
    let a = act.algebra().product();
    let b = back.algebra().product();
    let xs = a.space().labels();
    let bs = b.space().labels();
    let (b_left, b_right) = multiplication_operators(b);
    let na = a.dim();
    let nb = b.dim();
    for x in 0..na {
        let ex = unit(na, x);
        for u in 0..nb {
            let la_u_x = back.l(u).apply(&ex);
            let ra_u_x = back.r(u).apply(&ex);
            let side_u = vec_sub(&act.l(x).column(u), &act.r(x).column(u));
            for v in 0..nb {
                let w = [xs[x].as_str(), bs[u].as_str(), bs[v].as_str()];
                // l(x)(u∘v) + l(l'(u)x − r'(u)x)v − (l(x)u − r(x)u)∘v − r(r'(v)x)u − u∘(l(x)v)
                let mut d = act.l(x).apply(&b.basis_product(u, v));
                d = vec_add(&d, &act.l_by(&vec_sub(&la_u_x, &ra_u_x)).column(v));
                d = vec_sub(&d, &b_right[v].apply(&side_u));
                d = vec_sub(&d, &act.r_by(&back.r(v).column(x)).column(u));
                d = vec_sub(&d, &b_left[u].apply(&act.l(x).column(v)));
                report.push_opt(Violation::from_defect(&format!("{tag}-left"), &w, &d, bs));
                if u < v {
                    // r(x)[u,v] − r(l'(v)x)u + r(l'(u)x)v − u∘(r(x)v) + v∘(r(x)u)
                    let bracket = vec_sub(&b.basis_product(u, v), &b.basis_product(v, u));
                    let mut d = act.r(x).apply(&bracket);
                    d = vec_sub(&d, &act.r_by(&back.l(v).column(x)).column(u));
                    d = vec_add(&d, &act.r_by(&back.l(u).column(x)).column(v));
                    d = vec_sub(&d, &b_left[u].apply(&act.r(x).column(v)));
                    d = vec_add(&d, &b_left[v].apply(&act.r(x).column(u)));
                    report.push_opt(Violation::from_defect(&format!("{tag}-right"), &w, &d, bs));
                }
            }
        }
    }
}

/// Both representation conditions and the four compatibility identities.
pub fn check_matched_pair_prelie(mp: &MatchedPairPreLie) -> CheckReport {
    let mut report = CheckReport::new("matched-pair-prelie");
    let mut a = check_prelie_representation(&mp.act_a);
    a.name = "A on B".into();
    let mut b = check_prelie_representation(&mp.act_b);
    b.name = "B on A".into();
    matched_pair_side(&mut report, "in-B", &mp.act_a, &mp.act_b);
    matched_pair_side(&mut report, "in-A", &mp.act_b, &mp.act_a);
    report.add_part(a);
    report.add_part(b);
    report.finish()
}

/// `(x+a)∘(y+b) = x∘y + l_B(a)y + r_B(b)x + a∘b + l_A(x)b + r_A(y)a` on
/// `A ⊕ B`, A first.
pub fn prelie_bowtie(mp: &MatchedPairPreLie) -> PreLieAlgebra {
    let a = mp.a().product();
    let b = mp.b().product();
    let na = a.dim();
    let nb = b.dim();
    let mut p = BilinearProduct::zero(a.space().direct_sum(b.space()));
    for (i, j, k, c) in a.nonzeros() {
        p.set(i, j, k, c.clone());
    }
    for (i, j, k, c) in b.nonzeros() {
        p.set(na + i, na + j, na + k, c.clone());
    }
    for u in 0..nb {
        // l_B(u) y and r_B(u) x land in A
        for (k, y, c) in mp.act_b.l(u).nonzeros() {
            p.add_at(na + u, y, k, c);
        }
        for (k, x, c) in mp.act_b.r(u).nonzeros() {
            p.add_at(x, na + u, k, c);
        }
    }
    for x in 0..na {
        for (k, v, c) in mp.act_a.l(x).nonzeros() {
            p.add_at(x, na + v, na + k, c);
        }
        for (k, u, c) in mp.act_a.r(x).nonzeros() {
            p.add_at(na + u, x, na + k, c);
        }
    }
    PreLieAlgebra::unchecked(p)
}

/// Adjoint representation of a Lie algebra with the operator as `alpha`.
pub fn adjoint_with(rb: &RBLieAlgebra, alpha: Matrix) -> Representation {
    adjoint_rep(rb.lie()).with_alpha(alpha).expect("operator acts on the algebra")
}
