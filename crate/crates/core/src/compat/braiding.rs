//! The braiding `c(m (x) n) = n_0 (x) n_1 m` on Yetter-Drinfeld objects and
//! the quantum Yang-Baxter / hexagon batteries.
//!
//! The convention is pinned to match the tensor coaction order `n_1 m_1`;
//! it is not assumed correct but enforced by the colinearity, hexagon and
//! QYBE checks, which fail loudly on any object where it breaks.

use super::{same_hopf, tensor, Object, ObjectKind};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub struct BraidingMap {
    /// `(dim N * dim M) x (dim M * dim N)`, mapping `M (x) N -> N (x) M`.
    pub matrix: Matrix,
    pub inverse: Matrix,
}

/// Build and fully check the braiding `M (x) N -> N (x) M`.
pub fn braiding(a: &Object, b: &Object) -> Result<BraidingMap> {
    if a.kind() != ObjectKind::Yd || b.kind() != ObjectKind::Yd || !same_hopf(a.hopf(), b.hopf()) {
        return Err(Error::KindMismatch);
    }
    let h = a.hopf();
    let f = h.field();
    let nh = h.dim();
    let (ma, mb) = (a.dim(), b.dim());
    let mut c = Matrix::zeros(f, mb * ma, ma * mb);
    for i in 0..ma {
        for j in 0..mb {
            // c(v_i (x) w_j) = sum_q (C^B_q w_j) (x) (e_q . v_i)
            for q in 0..nh {
                let w = b.comodule().components[q].col(j);
                let v = a.module().action[q].col(i);
                for (k, x) in w.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (l, y) in v.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let row = k * ma + l;
                        let col = i * mb + j;
                        let cur = c.get(row, col).clone();
                        c.set(row, col, f.add(&cur, &f.mul(x, y)));
                    }
                }
            }
        }
    }
    let inverse = c.inverse().ok_or(Error::BraidingNotColinear)?;
    let ab = tensor(a, b)?;
    let ba = tensor(b, a)?;
    let linear = (0..nh).all(|t| {
        c.mul(&ab.module().action[t]) == ba.module().action[t].mul(&c)
    });
    let colinear = (0..nh).all(|u| {
        ba.comodule().components[u].mul(&c) == c.mul(&ab.comodule().components[u])
    });
    if !linear || !colinear {
        return Err(Error::BraidingNotColinear);
    }
    Ok(BraidingMap { matrix: c, inverse })
}

/// `(c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c)` on
/// `M (x) M (x) M`.
pub fn qybe_check(a: &Object) -> Result<bool> {
    let c = braiding(a, a)?.matrix;
    let f = a.field();
    let m = a.dim();
    let id = Matrix::identity(f, m);
    let c12 = c.kron(&id);
    let c23 = id.kron(&c);
    let lhs = c12.mul(&c23).mul(&c12);
    let rhs = c23.mul(&c12).mul(&c23);
    Ok(lhs == rhs)
}

/// Both hexagon identities:
/// `c_{A, B (x) C} = (id_B (x) c_{A,C})(c_{A,B} (x) id_C)` and
/// `c_{A (x) B, C} = (c_{A,C} (x) id_B)(id_A (x) c_{B,C})`.
pub fn hexagon_check(a: &Object, b: &Object, cc: &Object) -> Result<(bool, bool)> {
    let f = a.field();
    let id_a = Matrix::identity(f, a.dim());
    let id_b = Matrix::identity(f, b.dim());
    let id_c = Matrix::identity(f, cc.dim());
    let bc = tensor(b, cc)?;
    let ab = tensor(a, b)?;
    let c_a_bc = braiding(a, &bc)?.matrix;
    let c_ab = braiding(a, b)?.matrix;
    let c_ac = braiding(a, cc)?.matrix;
    let c_bc = braiding(b, cc)?.matrix;
    let hex1 = c_a_bc == id_b.kron(&c_ac).mul(&c_ab.kron(&id_c));
    let c_ab_c = braiding(&ab, cc)?.matrix;
    let hex2 = c_ab_c == c_ac.kron(&id_b).mul(&id_a.kron(&c_bc));
    Ok((hex1, hex2))
}

/// Naturality in both arguments: for H-linear H-colinear `f : A -> A'` and
/// `g : B -> B'`, `c_{A',B'} (f (x) g) = (g (x) f) c_{A,B}`.
pub fn braiding_is_natural(
    a: &Object,
    a2: &Object,
    b: &Object,
    b2: &Object,
    f_map: &Matrix,
    g_map: &Matrix,
) -> Result<bool> {
    let c = braiding(a, b)?.matrix;
    let c2 = braiding(a2, b2)?.matrix;
    Ok(c2.mul(&f_map.kron(g_map)) == g_map.kron(f_map).mul(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compat::{basis_vector, free, onedim, trivial, ObjectKind};
    use crate::fixtures::{gf2_c2, gf5_c4, sweedler_h4_gf5};
    use crate::linalg::scalars_from_i64;
    use crate::rep::trivial_comodule;

    #[test]
    fn braiding_on_trivial_is_transposition() {
        let h = gf5_c4();
        let f = h.field();
        let t2 = trivial(&h, 2, ObjectKind::Yd);
        let c = braiding(&t2, &t2).unwrap();
        // c(v_i (x) v_j) = v_j (x) v_i
        let mut perm = Matrix::zeros(f, 4, 4);
        for i in 0..2 {
            for j in 0..2 {
                perm.set(j * 2 + i, i * 2 + j, f.one());
            }
        }
        assert_eq!(c.matrix, perm);
        assert!(qybe_check(&t2).unwrap());
    }

    #[test]
    fn braiding_on_onedim_is_the_character_value() {
        // chi(g) = 2, coaction v -> v (x) g: c(v (x) v) = 2 (v (x) v)
        let h = gf5_c4();
        let f = h.field();
        let chi = scalars_from_i64(f, &[1, 2, 4, 3]);
        let obj = onedim(&h, &chi, &basis_vector(f, 4, 1), ObjectKind::Yd).unwrap();
        let c = braiding(&obj, &obj).unwrap();
        assert_eq!(*c.matrix.get(0, 0), f.from_i64(2));
        assert!(qybe_check(&obj).unwrap());
    }

    #[test]
    fn braiding_battery_on_free_gf2() {
        let h = gf2_c2();
        let m = free(&trivial_comodule(&h, 1), ObjectKind::Yd).unwrap();
        let c = braiding(&m, &m).unwrap();
        assert_eq!(c.matrix.rows(), 4);
        assert!(c.matrix.mul(&c.inverse).is_identity());
        assert!(qybe_check(&m).unwrap());
        let t = trivial(&h, 1, ObjectKind::Yd);
        let (h1, h2) = hexagon_check(&m, &t, &m).unwrap();
        assert!(h1 && h2);
        let (h1, h2) = hexagon_check(&m, &m, &m).unwrap();
        assert!(h1 && h2);
    }

    #[test]
    fn braiding_over_noncommutative_sweedler() {
        let h = sweedler_h4_gf5();
        let m = free(&trivial_comodule(&h, 1), ObjectKind::Yd).unwrap();
        let c = braiding(&m, &m).unwrap();
        assert!(c.matrix.mul(&c.inverse).is_identity());
        assert!(qybe_check(&m).unwrap());
        let (h1, h2) = hexagon_check(&m, &m, &m).unwrap();
        assert!(h1 && h2);
    }

    #[test]
    fn braiding_rejects_long_objects() {
        let h = gf5_c4();
        let a = trivial(&h, 1, ObjectKind::Long);
        assert!(braiding(&a, &a).is_err());
    }

    #[test]
    fn naturality_on_identity_and_projection_maps() {
        let h = gf2_c2();
        let m = free(&trivial_comodule(&h, 1), ObjectKind::Yd).unwrap();
        let f = h.field();
        let id = Matrix::identity(f, 2);
        assert!(braiding_is_natural(&m, &m, &m, &m, &id, &id).unwrap());
    }
}
