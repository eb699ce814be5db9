//! Reference structures: sl(2) with its Rota-Baxter operator and invariant
//! form, the two-dimensional abelian algebra, and the two-dimensional
//! non-abelian corpus of small integer Rota-Baxter operators.

use crate::lie::{BilinearForm, LieAlgebra};
use crate::linalg::Matrix;
use crate::product::BilinearProduct;
use crate::rota_baxter::{check_rb_operator, RBLieAlgebra};
use crate::scalar::{int, Scalar};
use crate::space::Space;

fn product_from_entries(space: Space, entries: &[(usize, usize, &[i64])], antisymmetric: bool) -> BilinearProduct {
    let mut p = BilinearProduct::zero(space);
    for (i, j, v) in entries {
        for (k, c) in v.iter().enumerate() {
            p.set(*i, *j, k, int(*c));
        }
    }
    if antisymmetric {
        p.antisymmetrize_completion();
    }
    p
}

pub fn sl2_space() -> Space {
    Space::from_labels("sl2", &["x", "h", "y"])
}

/// `[h,x] = 2x`, `[h,y] = −2y`, `[x,y] = h`.
pub fn sl2_lie() -> LieAlgebra {
    let b = product_from_entries(sl2_space(), &[(1, 0, &[2, 0, 0]), (1, 2, &[0, 0, -2]), (0, 2, &[0, 1, 0])], true);
    LieAlgebra::new(b).expect("sl2 satisfies Jacobi")
}

/// `P(x) = x+y`, `P(h) = 2h+4y`, `P(y) = x−2h−3y`.
pub fn sl2_p() -> Matrix {
    Matrix::from_rows(&[&[1, 0, 1], &[0, 2, -2], &[1, 4, -3]])
}

pub fn sl2() -> RBLieAlgebra {
    RBLieAlgebra::new(sl2_lie(), int(0), sl2_p()).expect("weight-zero Rota-Baxter operator")
}

/// `B(x,y) = B(y,x) = 1`, `B(h,h) = 2`.
pub fn sl2_form() -> BilinearForm {
    BilinearForm::new(sl2_space(), Matrix::from_rows(&[&[0, 0, 1], &[0, 2, 0], &[1, 0, 0]])).expect("3×3 form")
}

/// The adjoint of `P` with respect to `B`: `P̂(x) = −3x+2h+y`,
/// `P̂(h) = −4x+2h`, `P̂(y) = x+y`.
pub fn sl2_p_hat() -> Matrix {
    Matrix::from_rows(&[&[-3, -4, 1], &[2, 2, 0], &[1, 0, 1]])
}

/// Reference table for the induced product `x∘y = [Px,y]`, entered
/// verbatim. Its `(y, x)` entry reads `3h − 4y`; the bracket gives
/// `[Py, x] = −4x + 3h`. The other eight entries agree with the bracket.
pub fn sl2_reference_prelie_table() -> BilinearProduct {
    product_from_entries(
        sl2_space(),
        &[
            (0, 0, &[0, -1, 0]),
            (0, 1, &[-2, 0, 2]),
            (0, 2, &[0, 1, 0]),
            (1, 0, &[4, -4, 0]),
            (1, 1, &[0, 0, 8]),
            (1, 2, &[0, 0, -4]),
            (2, 0, &[0, 3, -4]),
            (2, 1, &[-2, 0, -6]),
            (2, 2, &[0, 1, 4]),
        ],
        false,
    )
}

/// Reference table for `◁ = −P̂[·,·]`, antisymmetric.
pub fn sl2_tri_l_table() -> BilinearProduct {
    product_from_entries(
        sl2_space(),
        &[(0, 1, &[-6, 4, 2]), (0, 2, &[4, -2, 0]), (1, 2, &[2, 0, 2])],
        true,
    )
}

pub fn ab2(weight: Scalar, p: Matrix) -> RBLieAlgebra {
    RBLieAlgebra::new(LieAlgebra::abelian(Space::numbered("ab2", "e", 2)), weight, p)
        .expect("every operator is Rota-Baxter on an abelian algebra")
}

pub fn na2_space() -> Space {
    Space::from_labels("na2", &["e1", "e2"])
}

/// `[e1,e2] = e1`.
pub fn na2_lie() -> LieAlgebra {
    LieAlgebra::new(product_from_entries(na2_space(), &[(0, 1, &[1, 0])], true)).expect("two-dimensional Lie algebra")
}

/// Entries `[[a, b], [c, d]]` in row order.
pub fn na2_matrix(entries: [i64; 4]) -> Matrix {
    Matrix::from_rows(&[&entries[0..2], &entries[2..4]])
}

/// Every Rota-Baxter operator on the non-abelian two-dimensional algebra
/// with integer entries in `[-bound, bound]`, for the given weight, in the
/// lexicographic order of `(a, b, c, d)`.
pub fn na2_operators(weight: i64, bound: i64) -> Vec<[i64; 4]> {
    let g = na2_lie();
    let lambda = int(weight);
    let range = -bound..=bound;
    let mut out = Vec::new();
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let e = [a, b, c, d];
                    if check_rb_operator(&g, &lambda, &na2_matrix(e)).passed() {
                        out.push(e);
                    }
                }
            }
        }
    }
    out
}

/// The corpus: all operators with entries in `[-2, 2]` for weights 0, 1, −1.
pub fn na2_corpus() -> Vec<RBLieAlgebra> {
    let mut out = Vec::new();
    for w in [0, 1, -1] {
        for e in na2_operators(w, 2) {
            out.push(RBLieAlgebra::unchecked(na2_lie(), int(w), na2_matrix(e)).expect("2×2 operator"));
        }
    }
    out
}
