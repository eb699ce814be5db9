mod common;

use common::*;
use proptest::prelude::*;
use rbla_core::cybe::{coboundary_delta, lift_tensor};
use rbla_core::fixtures::{sl2_lie, sl2_p};
use rbla_core::linalg::{map_from_tensor, tensor_from_map, Matrix, Tensor2, Tensor3};
use rbla_core::product::Coproduct;
use rbla_core::scalar::{self, frac, int};

const X: usize = 0;
const H: usize = 1;
const Y: usize = 2;

#[test]
fn flip_of_pure_tensor() {
    let t = Tensor2::basis(3, 3, X, H);
    assert_eq!(t.flip(), Tensor2::basis(3, 3, H, X));
}

#[test]
fn flip_negates_antisymmetric() {
    let t = &Tensor2::basis(3, 3, X, H) - &Tensor2::basis(3, 3, H, X);
    assert_eq!(t.flip(), -&t);
    assert!(t.is_antisymmetric());
}

#[test]
fn flip_of_operator_tensor_swaps_coefficients() {
    // P as an element of g ⊗ g*: coefficient of e_i ⊗ e_j* is P's entry (i, j).
    let t = Tensor2::from_coeffs(sl2_p());
    let f = t.flip();
    assert_eq!(f.left_dim(), 3);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(f.get(j, i), &int(sl2_p_rows()[i][j]));
        }
    }
    // coefficient of h* ⊗ x in the flip is that of x ⊗ h* in t
    assert_eq!(f.get(H, X), t.get(X, H));
}

#[test]
fn cyclic_shift_examples() {
    let t = Tensor3::basis([3, 3, 3], X, H, Y);
    let s = t.cyclic_shift().unwrap();
    assert_eq!(s, Tensor3::basis([3, 3, 3], Y, X, H));
    let s3 = s.cyclic_shift().unwrap().cyclic_shift().unwrap();
    assert_eq!(s3, t);
    let s2 = s.cyclic_shift().unwrap();
    let total = &(&t + &s) + &s2;
    let mut expected = vec![0i64; 27];
    for (i, j, k) in [(X, H, Y), (Y, X, H), (H, Y, X)] {
        expected[(i * 3 + j) * 3 + k] += 1;
    }
    assert!(tensor3_eq(&total, &expected, 3));
}

#[test]
fn cyclic_shift_rejects_mixed_factors() {
    assert!(Tensor3::zeros(2, 3, 3).cyclic_shift().is_err());
}

#[test]
fn transpose_examples() {
    assert_eq!(Matrix::identity(3).transpose(), Matrix::identity(3));
    let pt = sl2_p().transpose();
    // ⟨P*(x*), h⟩ = ⟨x*, P(h)⟩ = 0 since P(h) = 2h + 4y.
    assert_eq!(pt.get(H, X), &int(0));
    // ⟨P*(y*), h⟩ = ⟨y*, P(h)⟩ = 4
    assert_eq!(pt.get(H, Y), &int(4));
    let t = Matrix::from_rows(&[&[1, -2, 0], &[3, 1, 4], &[0, 5, -1]]);
    let s = Matrix::from_rows(&[&[2, 0, 1], &[-1, 1, 0], &[3, 2, -2]]);
    let lhs = (&t * &s).transpose();
    // independent product of the transposes, entry by entry
    let expected = Matrix::from_fn(3, 3, |i, j| {
        (0..3).fold(int(0), |acc, k| acc + s.get(k, i) * t.get(j, k))
    });
    assert_eq!(lhs, expected);
    assert_eq!(lhs, &s.transpose() * &t.transpose());
}

#[test]
fn map_from_tensor_examples() {
    assert!(map_from_tensor(&Tensor2::zeros(3, 3)).is_zero());
    let diag = Tensor2::from_coeffs(Matrix::identity(3));
    assert_eq!(map_from_tensor(&diag), Matrix::identity(3));
    // r = id − τ(id) on A ⊕ A* with A two-dimensional
    let r = lift_tensor(&Matrix::identity(2));
    assert!(tensor2_eq(&r, &lift(&[vec![1, 0], vec![0, 1]])));
    let m = map_from_tensor(&r);
    assert_eq!(m.block(2, 0, 2, 2), Matrix::identity(2));
    assert_eq!(m.block(0, 2, 2, 2), -&Matrix::identity(2));
    assert!(m.block(0, 0, 2, 2).is_zero());
    assert!(m.block(2, 2, 2, 2).is_zero());
}

#[test]
fn map_from_tensor_sends_dual_basis_to_rows() {
    let t = Tensor2::from_coeffs(Matrix::from_rows(&[&[1, 2, 0], &[0, -1, 3], &[5, 0, 0]]));
    let m = map_from_tensor(&t);
    for i in 0..3 {
        let image = m.column(i);
        for j in 0..3 {
            assert_eq!(image[j], *t.get(i, j));
        }
    }
}

#[test]
fn apply_coproduct_examples() {
    let space = rbla_core::fixtures::sl2_space();
    let zero = Coproduct::zero(space);
    assert!(zero.apply_tensor(&scalars(&[1, 2, 3])).is_zero());
    let g = sl2_lie();
    assert!(coboundary_delta(&g, &Tensor2::zeros(3, 3)).is_zero());

    let mut r = zeros2(3);
    r[X][H] = 1;
    r[H][X] = -1;
    let d = coboundary_delta(&g, &to_tensor2(&r));
    for v in [vec![1, 0, 0], vec![0, 1, 0], vec![2, -1, 3]] {
        let expected = delta_r(&sl2_bracket, &r, &v);
        assert!(tensor2_eq(&d.apply_tensor(&scalars(&v)), &expected), "δ_r({v:?})");
    }
}

#[test]
fn scalars_are_exact_and_normalized() {
    assert_eq!(frac(6, -4), frac(-3, 2));
    assert_eq!(scalar::format(&frac(6, -4)), "-3/2");
    assert!(scalar::parse("0.5").is_err());
    assert!(scalar::parse("1e3").is_err());
    assert_eq!(scalar::parse("10/4").unwrap(), frac(5, 2));
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        let rows: Vec<&[i64]> = v.chunks(n).collect();
        Matrix::from_rows(&rows)
    })
}

fn small_tensor3(n: usize) -> impl Strategy<Value = Tensor3> {
    prop::collection::vec(-3i64..=3, n * n * n).prop_map(move |v| {
        let mut t = Tensor3::cube(n);
        for (idx, c) in v.iter().enumerate() {
            t.set(idx / (n * n), (idx / n) % n, idx % n, int(*c));
        }
        t
    })
}

proptest! {
    #[test]
    fn flip_is_an_involution(m in small_matrix(3)) {
        let t = Tensor2::from_coeffs(m);
        prop_assert_eq!(t.flip().flip(), t);
    }

    #[test]
    fn cyclic_shift_has_order_three(t in small_tensor3(3)) {
        let s = t.cyclic_shift().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    prop_assert_eq!(s.get(i, j, k), t.get(j, k, i));
                }
            }
        }
        prop_assert_eq!(s.cyclic_shift().unwrap().cyclic_shift().unwrap(), t);
    }

    #[test]
    fn transpose_is_an_involution(m in small_matrix(4)) {
        prop_assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn transpose_reverses_products(a in small_matrix(3), b in small_matrix(3)) {
        prop_assert_eq!((&a * &b).transpose(), &b.transpose() * &a.transpose());
    }

    #[test]
    fn map_and_tensor_round_trip(m in small_matrix(3)) {
        prop_assert_eq!(map_from_tensor(&tensor_from_map(&m)), m.clone());
        let t = Tensor2::from_coeffs(m);
        prop_assert_eq!(tensor_from_map(&map_from_tensor(&t)), t);
    }

    #[test]
    fn inverse_is_exact(m in small_matrix(3)) {
        if let Ok(inv) = m.inverse() {
            prop_assert_eq!(&m * &inv, Matrix::identity(3));
        } else {
            prop_assert_eq!(m.det(), int(0));
        }
    }

    #[test]
    fn scalar_text_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let s = frac(p, q);
        prop_assert_eq!(scalar::parse(&scalar::format(&s)).unwrap(), s);
    }
}
