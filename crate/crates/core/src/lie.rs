//! Lie algebras by structure constants, their representations, invariant
//! forms and matched pairs.

use num_traits::Zero;

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{vec_add, vec_sub, Matrix};
use crate::product::BilinearProduct;
use crate::report::{CheckReport, Violation};
use crate::scalar::Scalar;
use crate::space::{map_labels, Space};

/// Antisymmetry on every basis pair and Jacobi on every basis triple.
pub fn check_lie(p: &BilinearProduct) -> CheckReport {
    let mut report = CheckReport::new("lie");
    let n = p.dim();
    let labels = p.space().labels();
    for i in 0..n {
        for j in i..n {
            let defect = vec_add(&p.basis_product(i, j), &p.basis_product(j, i));
            report.push_opt(Violation::from_defect(
                "antisymmetry",
                &[&labels[i], &labels[j]],
                &defect,
                labels,
            ));
        }
    }
    let antisymmetric = report.violations.is_empty();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // for an antisymmetric product the cyclic sum is alternating,
                // so strictly increasing triples cover everything
                if antisymmetric && !(i < j && j < k) {
                    continue;
                }
                let e = |a: usize| crate::linalg::unit(n, a);
                let t1 = p.eval(&p.basis_product(i, j), &e(k));
                let t2 = p.eval(&p.basis_product(j, k), &e(i));
                let t3 = p.eval(&p.basis_product(k, i), &e(j));
                let defect = vec_add(&vec_add(&t1, &t2), &t3);
                report.push_opt(Violation::from_defect(
                    "jacobi",
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
pub struct LieAlgebra {
    bracket: BilinearProduct,
}

impl LieAlgebra {
    /// Verifies antisymmetry and Jacobi; refuses otherwise.
    pub fn new(bracket: BilinearProduct) -> Result<Self> {
        let report = check_lie(&bracket);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(Self { bracket })
    }

    /// Wraps a bracket without checking it, for candidates that are about
    /// to be checked or deliberately corrupted.
    pub fn unchecked(bracket: BilinearProduct) -> Self {
        Self { bracket }
    }

    pub fn abelian(space: Space) -> Self {
        Self { bracket: BilinearProduct::zero(space) }
    }

    pub fn bracket(&self) -> &BilinearProduct {
        &self.bracket
    }

    pub fn space(&self) -> &Space {
        self.bracket.space()
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.bracket.eval(u, v)
    }

    /// `ad(e_i)`.
    pub fn ad(&self, i: usize) -> Matrix {
        self.bracket.left(i)
    }

    /// `ad(x)` for an arbitrary vector.
    pub fn ad_by(&self, x: &[Scalar]) -> Matrix {
        self.bracket.left_by(x)
    }
}

/// `[u, v]` by bilinear extension.
pub fn bracket_eval(g: &LieAlgebra, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
    ensure_dim("left argument", g.dim(), u.len())?;
    ensure_dim("right argument", g.dim(), v.len())?;
    Ok(g.eval(u, v))
}

/// A representation `ρ: g → gl(V)` with optional companion operators.
/// `alpha` makes it a Rota-Baxter representation candidate, `beta` an
/// admissibility candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    algebra: LieAlgebra,
    module: Space,
    rho: Vec<Matrix>,
    alpha: Option<Matrix>,
    beta: Option<Matrix>,
}

impl Representation {
    /// Checks shapes and the homomorphism property.
    pub fn new(algebra: LieAlgebra, module: Space, rho: Vec<Matrix>) -> Result<Self> {
        let rep = Self::unchecked(algebra, module, rho)?;
        let report = check_representation(&rep);
        if !report.passed() {
            return Err(Error::rejected(report));
        }
        Ok(rep)
    }

    /// Checks shapes only.
    pub fn unchecked(algebra: LieAlgebra, module: Space, rho: Vec<Matrix>) -> Result<Self> {
        ensure_dim("one matrix per algebra basis element", algebra.dim(), rho.len())?;
        for m in &rho {
            ensure_dim("representation matrix rows", module.dim(), m.rows())?;
            ensure_dim("representation matrix columns", module.dim(), m.cols())?;
        }
        Ok(Self { algebra, module, rho, alpha: None, beta: None })
    }

    pub fn zero(algebra: LieAlgebra, module: Space) -> Self {
        let m = module.dim();
        let rho = vec![Matrix::zeros(m, m); algebra.dim()];
        Self { algebra, module, rho, alpha: None, beta: None }
    }

    pub fn with_alpha(mut self, alpha: Matrix) -> Result<Self> {
        ensure_dim("alpha rows", self.module.dim(), alpha.rows())?;
        ensure_dim("alpha columns", self.module.dim(), alpha.cols())?;
        self.alpha = Some(alpha);
        Ok(self)
    }

    pub fn with_beta(mut self, beta: Matrix) -> Result<Self> {
        ensure_dim("beta rows", self.module.dim(), beta.rows())?;
        ensure_dim("beta columns", self.module.dim(), beta.cols())?;
        self.beta = Some(beta);
        Ok(self)
    }

    pub fn without_companions(&self) -> Self {
        Self { alpha: None, beta: None, ..self.clone() }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &Space {
        &self.module
    }

    pub fn module_dim(&self) -> usize {
        self.module.dim()
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(x)` for an arbitrary algebra element.
    pub fn rho_by(&self, x: &[Scalar]) -> Matrix {
        let m = self.module.dim();
        let mut out = Matrix::zeros(m, m);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = &out + &self.rho[i].scale(xi);
            }
        }
        out
    }

    pub fn alpha(&self) -> Option<&Matrix> {
        self.alpha.as_ref()
    }

    pub fn beta(&self) -> Option<&Matrix> {
        self.beta.as_ref()
    }
}

/// Adjoint representation `x ↦ ad(x)` on the algebra itself.
pub fn adjoint_rep(g: &LieAlgebra) -> Representation {
    let rho = (0..g.dim()).map(|i| g.ad(i)).collect();
    Representation { algebra: g.clone(), module: g.space().clone(), rho, alpha: None, beta: None }
}

/// `ρ([e_i, e_j]) = [ρ(e_i), ρ(e_j)]` on every basis pair.
pub fn check_representation(rep: &Representation) -> CheckReport {
    let mut report = CheckReport::new("representation");
    let g = rep.algebra();
    let labels = g.space().labels();
    let entry_labels = map_labels(rep.module(), rep.module());
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = rep.rho_by(&g.bracket().basis_product(i, j));
            let rhs = rep.rho(i).commutator(rep.rho(j));
            let defect = &lhs - &rhs;
            report.push_opt(Violation::from_defect(
                "homomorphism",
                &[&labels[i], &labels[j]],
                defect.flat(),
                &entry_labels,
            ));
        }
    }
    report.finish()
}

/// `ρ*(x) = −ρ(x)ᵀ` on the dual module. Companion operators are dropped;
/// callers attach the transposed ones they need.
pub fn dual_representation(rep: &Representation) -> Representation {
    let rho = rep.rho.iter().map(|m| -&m.transpose()).collect();
    Representation {
        algebra: rep.algebra.clone(),
        module: rep.module.dual(),
        rho,
        alpha: None,
        beta: None,
    }
}

/// Bracket of `g ⋉_ρ V`: `[x+u, y+v] = [x,y] + ρ(x)v − ρ(y)u`, with the
/// basis of g first. Built without checking `ρ`.
pub fn semidirect_bracket(rep: &Representation) -> BilinearProduct {
    let g = rep.algebra();
    let n = g.dim();
    let space = g.space().direct_sum(rep.module());
    let mut p = BilinearProduct::zero(space);
    for (i, j, k, c) in g.bracket().nonzeros() {
        p.set(i, j, k, c.clone());
    }
    for i in 0..n {
        for (b, a, c) in rep.rho(i).nonzeros() {
            p.set(i, n + a, n + b, c.clone());
            p.set(n + a, i, n + b, -c);
        }
    }
    p
}

/// `g ⋉_ρ V` as a verified Lie algebra.
pub fn semidirect_product_lie(rep: &Representation) -> Result<LieAlgebra> {
    let report = check_representation(rep);
    if !report.passed() {
        return Err(Error::rejected(report));
    }
    Ok(LieAlgebra::unchecked(semidirect_bracket(rep)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    space: Space,
    matrix: Matrix,
}

impl BilinearForm {
    /// `matrix[i][j] = B(e_i, e_j)`.
    pub fn new(space: Space, matrix: Matrix) -> Result<Self> {
        ensure_dim("form rows", space.dim(), matrix.rows())?;
        ensure_dim("form columns", space.dim(), matrix.cols())?;
        Ok(Self { space, matrix })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let bv = self.matrix.apply(v);
        u.iter().zip(&bv).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { space: self.space.clone(), matrix: self.matrix.scale(s) }
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.matrix.det().is_zero()
    }

    /// The canonical pairing `B_d(x+a*, y+b*) = ⟨x,b*⟩ + ⟨a*,y⟩` on
    /// `V ⊕ V*` with the basis of V first.
    pub fn natural_pairing(space: Space) -> Result<Self> {
        if !space.dim().is_multiple_of(2) {
            return Err(Error::Dimension(format!("pairing needs an even dimension, found {}", space.dim())));
        }
        let n = space.dim() / 2;
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, Scalar::from_integer(1.into()));
            m.set(n + i, i, Scalar::from_integer(1.into()));
        }
        Self::new(space, m)
    }
}

/// Which properties a form is required to have.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FormRequirements {
    pub invariant: bool,
    pub nondegenerate: bool,
    pub symmetric: bool,
}

impl FormRequirements {
    pub const ALL: Self = Self { invariant: true, nondegenerate: true, symmetric: true };
}

/// `B([x,y],z) = B(x,[y,z])` on all basis triples, plus nondegeneracy and
/// symmetry. Properties not required are still reported as notes.
pub fn check_bilinear_form(g: &LieAlgebra, b: &BilinearForm, req: FormRequirements) -> CheckReport {
    let mut report = CheckReport::new("bilinear-form");
    let n = g.dim();
    let labels = g.space().labels();
    let value = vec!["value".to_string()];
    let mut invariant = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let e = |a: usize| crate::linalg::unit(n, a);
                let lhs = b.eval(&g.bracket().basis_product(i, j), &e(k));
                let rhs = b.eval(&e(i), &g.bracket().basis_product(j, k));
                let defect = [lhs - rhs];
                if let Some(v) =
                    Violation::from_defect("invariance", &[&labels[i], &labels[j], &labels[k]], &defect, &value)
                {
                    invariant = false;
                    if req.invariant {
                        report.push(v);
                    }
                }
            }
        }
    }
    let nondegenerate = b.is_nondegenerate();
    let symmetric = b.is_symmetric();
    if req.nondegenerate && !nondegenerate {
        report.push(Violation::with_message("nondegeneracy", &[], "determinant is zero"));
    }
    if req.symmetric && !symmetric {
        for i in 0..n {
            for j in i + 1..n {
                let defect = [b.matrix().get(i, j) - b.matrix().get(j, i)];
                report.push_opt(Violation::from_defect("symmetry", &[&labels[i], &labels[j]], &defect, &value));
            }
        }
    }
    report.note(format!("invariant: {invariant}"));
    report.note(format!("nondegenerate: {nondegenerate}"));
    report.note(format!("symmetric: {symmetric}"));
    report.finish()
}

/// `P̂` with `B(P(x), y) = B(x, P̂(y))`, i.e. `P̂ = B⁻¹ Pᵀ B`.
pub fn adjoint_operator_wrt_form(b: &BilinearForm, p: &Matrix) -> Result<Matrix> {
    ensure_dim("operator", b.space().dim(), p.rows())?;
    let inv = b
        .matrix()
        .inverse()
        .map_err(|_| Error::Singular("the form is degenerate, so the adjoint operator is undefined".into()))?;
    Ok(&(&inv * &p.transpose()) * b.matrix())
}

/// `(g, h, ρ_g, ρ_h)` with `ρ_g` a representation of g on h and `ρ_h` a
/// representation of h on g.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchedPairLie {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    pub rho_g: Representation,
    pub rho_h: Representation,
}

impl MatchedPairLie {
    pub fn new(rho_g: Representation, rho_h: Representation) -> Result<Self> {
        ensure_dim("g acts on h", rho_h.algebra().dim(), rho_g.module_dim())?;
        ensure_dim("h acts on g", rho_g.algebra().dim(), rho_h.module_dim())?;
        Ok(Self { g: rho_g.algebra().clone(), h: rho_h.algebra().clone(), rho_g, rho_h })
    }
}

/// The two compatibility identities of a matched pair, on all basis
/// combinations, together with both representation checks.
pub fn check_matched_pair_lie(mp: &MatchedPairLie) -> CheckReport {
    let mut report = CheckReport::new("matched-pair");
    let mut rg = check_representation(&mp.rho_g);
    rg.name = "rho_g representation".into();
    let mut rh = check_representation(&mp.rho_h);
    rh.name = "rho_h representation".into();
    report.add_part(rg);
    report.add_part(rh);
    let (g, h) = (&mp.g, &mp.h);
    let (ng, nh) = (g.dim(), h.dim());
    let gl = g.space().labels();
    let hl = h.space().labels();
    let eg = |i: usize| crate::linalg::unit(ng, i);
    let eh = |i: usize| crate::linalg::unit(nh, i);
    // ρ_g(x)[a,b] − [ρ_g(x)a,b] − [a,ρ_g(x)b] + ρ_g(ρ_h(a)x)b − ρ_g(ρ_h(b)x)a
    for x in 0..ng {
        let rx = mp.rho_g.rho(x);
        for a in 0..nh {
            for b in a + 1..nh {
                let ab = h.bracket().basis_product(a, b);
                let mut d = rx.apply(&ab);
                d = vec_sub(&d, &h.eval(&rx.column(a), &eh(b)));
                d = vec_sub(&d, &h.eval(&eh(a), &rx.column(b)));
                d = vec_add(&d, &mp.rho_g.rho_by(&mp.rho_h.rho(a).column(x)).column(b));
                d = vec_sub(&d, &mp.rho_g.rho_by(&mp.rho_h.rho(b).column(x)).column(a));
                report.push_opt(Violation::from_defect("matched-pair-h", &[&gl[x], &hl[a], &hl[b]], &d, hl));
            }
        }
    }
    // ρ_h(a)[x,y] − [ρ_h(a)x,y] − [x,ρ_h(a)y] + ρ_h(ρ_g(x)a)y − ρ_h(ρ_g(y)a)x
    for a in 0..nh {
        let ra = mp.rho_h.rho(a);
        for x in 0..ng {
            for y in x + 1..ng {
                let xy = g.bracket().basis_product(x, y);
                let mut d = ra.apply(&xy);
                d = vec_sub(&d, &g.eval(&ra.column(x), &eg(y)));
                d = vec_sub(&d, &g.eval(&eg(x), &ra.column(y)));
                d = vec_add(&d, &mp.rho_h.rho_by(&mp.rho_g.rho(x).column(a)).column(y));
                d = vec_sub(&d, &mp.rho_h.rho_by(&mp.rho_g.rho(y).column(a)).column(x));
                report.push_opt(Violation::from_defect("matched-pair-g", &[&hl[a], &gl[x], &gl[y]], &d, gl));
            }
        }
    }
    report.finish()
}

/// Bracket on `g ⊕ h`:
/// `[x+a, y+b] = [x,y] + ρ_h(a)y − ρ_h(b)x + [a,b] + ρ_g(x)b − ρ_g(y)a`.
pub fn bowtie_bracket(mp: &MatchedPairLie) -> BilinearProduct {
    let (ng, nh) = (mp.g.dim(), mp.h.dim());
    let space = mp.g.space().direct_sum(mp.h.space());
    let mut p = BilinearProduct::zero(space);
    for (i, j, k, c) in mp.g.bracket().nonzeros() {
        p.set(i, j, k, c.clone());
    }
    for (i, j, k, c) in mp.h.bracket().nonzeros() {
        p.set(ng + i, ng + j, ng + k, c.clone());
    }
    for x in 0..ng {
        for a in 0..nh {
            // [x, a] = −ρ_h(a)x + ρ_g(x)a
            let mut v = vec![Scalar::zero(); ng + nh];
            for (k, c) in mp.rho_h.rho(a).column(x).into_iter().enumerate() {
                v[k] -= c;
            }
            for (k, c) in mp.rho_g.rho(x).column(a).into_iter().enumerate() {
                v[ng + k] += c;
            }
            for (k, c) in v.iter().enumerate() {
                p.set(x, ng + a, k, c.clone());
                p.set(ng + a, x, k, -c);
            }
        }
    }
    p
}

/// `g ⋈ h` as a candidate Lie algebra together with its Lie check.
pub fn bowtie_lie(mp: &MatchedPairLie) -> (LieAlgebra, CheckReport) {
    let bracket = bowtie_bracket(mp);
    let report = check_lie(&bracket);
    (LieAlgebra::unchecked(bracket), report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn sl2() -> LieAlgebra {
        let g = Space::from_labels("g", &["x", "h", "y"]);
        let mut p = BilinearProduct::zero(g);
        p.set(1, 0, 0, int(2));
        p.set(1, 2, 2, int(-2));
        p.set(0, 2, 1, int(1));
        p.antisymmetrize_completion();
        LieAlgebra::new(p).unwrap()
    }

    #[test]
    fn adjoint_is_a_representation() {
        let g = sl2();
        let ad = adjoint_rep(&g);
        assert!(check_representation(&ad).passed());
        assert_eq!(ad.rho(1), &Matrix::from_rows(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        let dual = dual_representation(&ad);
        assert!(check_representation(&dual).passed());
        assert_eq!(dual.module().labels(), ["x*", "h*", "y*"]);
    }

    #[test]
    fn semidirect_is_lie() {
        let g = sl2();
        let d = semidirect_product_lie(&dual_representation(&adjoint_rep(&g))).unwrap();
        assert_eq!(d.dim(), 6);
        assert!(check_lie(d.bracket()).passed());
    }
}
