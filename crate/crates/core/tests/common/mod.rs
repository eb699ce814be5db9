//! Independent oracles for the integration tests. Brackets come from
//! explicit 2×2 matrix realizations, tensors are plain integer arrays, and
//! nothing here calls into the library's algebra code.

#![allow(dead_code)]

use rbla_core::linalg::{Matrix, Tensor2, Tensor3};
use rbla_core::scalar::int;
use rbla_core::Scalar;

pub type V = Vec<i64>;
pub type Bracket = dyn Fn(&[i64], &[i64]) -> V;

type M2 = [[i64; 2]; 2];

fn mul2(a: &M2, b: &M2) -> M2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn commutator2(a: &M2, b: &M2) -> M2 {
    let (ab, ba) = (mul2(a, b), mul2(b, a));
    [[ab[0][0] - ba[0][0], ab[0][1] - ba[0][1]], [ab[1][0] - ba[1][0], ab[1][1] - ba[1][1]]]
}

/// sl(2) as traceless matrices: x = E12, h = E11 − E22, y = E21.
pub fn sl2_bracket(u: &[i64], v: &[i64]) -> V {
    let m = |w: &[i64]| [[w[1], w[0]], [w[2], -w[1]]];
    let c = commutator2(&m(u), &m(v));
    vec![c[0][1], c[0][0], c[1][0]]
}

/// The non-abelian two-dimensional algebra as e1 = E12, e2 = −E11.
pub fn na2_bracket(u: &[i64], v: &[i64]) -> V {
    let m = |w: &[i64]| [[-w[1], w[0]], [0, 0]];
    let c = commutator2(&m(u), &m(v));
    vec![c[0][1], -c[0][0]]
}

pub fn unit(n: usize, i: usize) -> V {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Applies a matrix given by rows.
pub fn apply(rows: &[V], v: &[i64]) -> V {
    rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[i64], s: i64) -> V {
    a.iter().map(|x| x * s).collect()
}

pub fn scalars(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|c| int(*c)).collect()
}

pub fn matrix(rows: &[V]) -> Matrix {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_rows(&refs)
}

/// `g ⊕ g*` with `[x+a, y+b] = [x,y] + ad*(x)b − ad*(y)a`, where
/// `(ad*(x)b)(z) = −b([x,z])`.
pub fn coadjoint_double(br: &Bracket, n: usize) -> impl Fn(&[i64], &[i64]) -> V + '_ {
    move |u: &[i64], v: &[i64]| {
        let (x, a) = u.split_at(n);
        let (y, b) = v.split_at(n);
        let mut out = br(x, y);
        let pair = |f: &[i64], w: &[i64]| -> i64 { f.iter().zip(w).map(|(p, q)| p * q).sum() };
        for k in 0..n {
            let ek = unit(n, k);
            out.push(-pair(b, &br(x, &ek)) + pair(a, &br(y, &ek)));
        }
        out
    }
}

/// Structure constants `c[i][j] = [e_i, e_j]`.
pub fn table(br: &Bracket, n: usize) -> Vec<Vec<V>> {
    (0..n).map(|i| (0..n).map(|j| br(&unit(n, i), &unit(n, j))).collect()).collect()
}

/// Coefficients of a 2-tensor as `t[i][j]`.
pub type T2 = Vec<V>;

pub fn zeros2(n: usize) -> T2 {
    vec![vec![0; n]; n]
}

pub fn flip2(t: &T2) -> T2 {
    let n = t.len();
    (0..n).map(|i| (0..n).map(|j| t[j][i]).collect()).collect()
}

/// `(ad(x) ⊗ id + id ⊗ ad(x)) r`.
pub fn delta_r(br: &Bracket, r: &T2, x: &[i64]) -> T2 {
    let n = r.len();
    let mut out = zeros2(n);
    for i in 0..n {
        for j in 0..n {
            let c = r[i][j];
            if c == 0 {
                continue;
            }
            let xi = br(x, &unit(n, i));
            let xj = br(x, &unit(n, j));
            for k in 0..n {
                out[k][j] += c * xi[k];
                out[i][k] += c * xj[k];
            }
        }
    }
    out
}

/// Flat `n³` array indexed `(i*n + j)*n + k`.
pub type T3 = Vec<i64>;

/// `[r12,r13] + [r12,r23] + [r13,r23]` term by term.
pub fn cybe(br: &Bracket, r: &T2) -> T3 {
    let n = r.len();
    let mut out = vec![0; n * n * n];
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for i in 0..n {
        for j in 0..n {
            if r[i][j] == 0 {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let c = r[i][j] * r[k][l];
                    if c == 0 {
                        continue;
                    }
                    // [r12, r13] = Σ [e_i, e_k] ⊗ e_j ⊗ e_l
                    let b = br(&unit(n, i), &unit(n, k));
                    for (m, bm) in b.iter().enumerate() {
                        out[at(m, j, l)] += c * bm;
                    }
                    // [r12, r23] = Σ e_i ⊗ [e_j, e_k] ⊗ e_l
                    let b = br(&unit(n, j), &unit(n, k));
                    for (m, bm) in b.iter().enumerate() {
                        out[at(i, m, l)] += c * bm;
                    }
                    // [r13, r23] = Σ e_i ⊗ e_k ⊗ [e_j, e_l]
                    let b = br(&unit(n, j), &unit(n, l));
                    for (m, bm) in b.iter().enumerate() {
                        out[at(i, k, m)] += c * bm;
                    }
                }
            }
        }
    }
    out
}

pub fn tensor2_eq(t: &Tensor2, expected: &T2) -> bool {
    let n = expected.len();
    t.left_dim() == n
        && t.right_dim() == n
        && (0..n).all(|i| (0..n).all(|j| *t.get(i, j) == int(expected[i][j])))
}

pub fn tensor3_eq(t: &Tensor3, expected: &T3, n: usize) -> bool {
    t.dims() == [n, n, n]
        && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| *t.get(i, j, k) == int(expected[(i * n + j) * n + k]))))
}

pub fn to_tensor2(t: &T2) -> Tensor2 {
    Tensor2::from_coeffs(matrix(t))
}

/// The lift `T − τ(T)` on `g ⊕ V*` with `T` placed at `(k, n + a)`.
pub fn lift(t_rows: &[V]) -> T2 {
    let n = t_rows.len();
    let m = t_rows[0].len();
    let mut r = zeros2(n + m);
    for k in 0..n {
        for a in 0..m {
            r[k][n + a] = t_rows[k][a];
            r[n + a][k] = -t_rows[k][a];
        }
    }
    r
}

/// Row form of the sl(2) operator: P(x) = x+y, P(h) = 2h+4y,
/// P(y) = x−2h−3y.
pub fn sl2_p_rows() -> Vec<V> {
    vec![vec![1, 0, 1], vec![0, 2, -2], vec![1, 4, -3]]
}

/// Every integer 2×2 matrix with entries in `[-bound, bound]` satisfying
/// the weighted Rota-Baxter identity on the non-abelian algebra. Because
/// the algebra has a single independent basis pair, the identity is the
/// closed-form pair of polynomial equations obtained by expanding it on
/// `(e1, e2)`.
pub fn na2_rb_by_formula(weight: i64, bound: i64) -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    let r = -bound..=bound;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    // P(e1) = a e1 + c e2, P(e2) = b e1 + d e2, [e1,e2] = e1.
                    // [Pe1,Pe2] = (ad − cb) e1.
                    // P[e1,Pe2] = d P(e1); P[Pe1,e2] = a P(e1); λP[e1,e2] = λ P(e1).
                    let lhs = a * d - b * c;
                    let k = d + a + weight;
                    if lhs - k * a == 0 && k * c == 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// `[Px,Py] − P[x,Py] − P[Px,y] − λP[x,y]` on one basis pair.
pub fn rb_defect(br: &Bracket, p_rows: &[V], weight: i64, i: usize, j: usize) -> V {
    let n = p_rows.len();
    let (ei, ej) = (unit(n, i), unit(n, j));
    let (pi, pj) = (apply(p_rows, &ei), apply(p_rows, &ej));
    let inner = add(&add(&br(&ei, &pj), &br(&pi, &ej)), &scale(&br(&ei, &ej), weight));
    sub(&br(&pi, &pj), &apply(p_rows, &inner))
}

pub fn rows_of(e: [i64; 4]) -> Vec<V> {
    vec![vec![e[0], e[1]], vec![e[2], e[3]]]
}
