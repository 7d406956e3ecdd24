//! The Drinfeld double `D(H)` on `H (x) H*` and the algebra `H (x) H*` with
//! componentwise product, together with the category correspondences:
//! Yetter-Drinfeld modules are `D(H)`-modules, Long dimodules are
//! `H (x) H*`-modules, via `h* . m = m_0 h*(m_1)`.
//!
//! Two left-right twists of the double multiplication are implemented; the
//! shipped constant is the one selected empirically by [`select_twist`]: the
//! twist under which `yd_to_double` of the free Yetter-Drinfeld object lands
//! in a verified module over every fixture. The selection test freezes it.

use std::sync::Arc;

use crate::compat::{check_yd, Object, ObjectKind};
use crate::error::{Error, Result};
use crate::hopf::{Hopf, HopfAlgebra, HopfData};
use crate::linalg::{vec_kron, Matrix, Scalar, Vector};
use crate::rep::{verify_comodule, verify_module, ComoduleStructure, ModuleStructure};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DoubleTwist {
    /// `(h (x) f)(h' (x) f') = <f_1, h'_3> <f_3, S^{-1}(h'_1)> h h'_2 (x) f_2 f'`
    /// with the co-opposite comultiplication on the `H*` leg.
    Standard,
    /// The mirrored pairing `<f_1, S^{-1}(h'_3)> <f_3, h'_1>` with the
    /// straight comultiplication; kept as the rejected alternative.
    Mirror,
}

/// Frozen by the convention-selection test.
pub const SELECTED_TWIST: DoubleTwist = DoubleTwist::Standard;

pub struct DoubleAlgebra {
    /// `D(H)` as a verified Hopf algebra of dimension `dim(H)^2`.
    pub hopf: Hopf,
    pub base: Hopf,
    pub twist: DoubleTwist,
    /// Column `p` is the element `e_p (x) eps`.
    pub h_embedding: Matrix,
    /// Column `q` is the element `1 (x) delta_q`.
    pub hstar_embedding: Matrix,
}

/// `H (x) H*` with componentwise multiplication (a Hopf algebra, being the
/// tensor product of two Hopf algebras).
pub struct LongAlgebra {
    pub hopf: Hopf,
    pub base: Hopf,
}

/// Dual-basis multiplication table of `H*`: `dmult[j][s][v]` is the
/// coefficient of `e_j (x) e_s` in `Delta(e_v)`.
fn dual_mult_table(h: &HopfAlgebra) -> Vec<Vec<Vector>> {
    let f = h.field();
    let n = h.dim();
    let mut dmult = vec![vec![vec![f.zero(); n]; n]; n];
    for v in 0..n {
        for (j, s, c) in h.comult_triples(v) {
            dmult[*j][*s][v] = f.add(&dmult[*j][*s][v], c);
        }
    }
    dmult
}

pub fn drinfeld_double(h: &Hopf) -> Result<DoubleAlgebra> {
    drinfeld_double_with(h, SELECTED_TWIST)
}

pub fn drinfeld_double_with(h: &Hopf, twist: DoubleTwist) -> Result<DoubleAlgebra> {
    let f = h.field();
    let n = h.dim();
    let nn = n * n;
    let dmult = dual_mult_table(h);

    // twist tensor: u[r][q] is a sparse list of ((b, j), coefficient) with
    //   delta_q . e_r = sum coeff * e_b (x) delta_j
    let mut u: Vec<Vec<Vec<((usize, usize), Scalar)>>> = vec![vec![Vec::new(); n]; n];
    for r in 0..n {
        let mut dense = vec![vec![f.zero(); n * n]; n];
        for (a, b, d, c) in h.comult2_triples(r) {
            for j in 0..n {
                // one summed dual-basis index weighted by an S^{-1} entry:
                //   Standard: sum_k S^{-1}[k][a] * mu3(d, j, k)[q]
                //   Mirror:   sum_i S^{-1}[i][d] * mu3(i, j, a)[q]
                for w_idx in 0..n {
                    let weight = match twist {
                        DoubleTwist::Standard => h.antipode_inv().get(w_idx, *a).clone(),
                        DoubleTwist::Mirror => h.antipode_inv().get(w_idx, *d).clone(),
                    };
                    if weight.is_zero() {
                        continue;
                    }
                    let triple = match twist {
                        DoubleTwist::Standard => {
                            let v1 = h.product(*d, j).to_vec();
                            h.product_vec(&v1, &h.basis_vector(w_idx))
                        }
                        DoubleTwist::Mirror => {
                            let v1 = h.product(w_idx, j).to_vec();
                            h.product_vec(&v1, &h.basis_vector(*a))
                        }
                    };
                    for (q, x) in triple.iter().enumerate() {
                        if !x.is_zero() {
                            let idx = *b * n + j;
                            let coef = f.mul(c, &f.mul(&weight, x));
                            dense[q][idx] = f.add(&dense[q][idx], &coef);
                        }
                    }
                }
            }
        }
        for q in 0..n {
            for (idx, x) in dense[q].iter().enumerate() {
                if !x.is_zero() {
                    u[r][q].push(((idx / n, idx % n), x.clone()));
                }
            }
        }
    }

    // multiplication table of the double
    let mut mult = vec![vec![vec![f.zero(); nn]; nn]; nn];
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let out = &mut mult[p * n + q][r * n + s];
                    for ((b, j), coef) in &u[r][q] {
                        let left = h.product(p, *b);
                        let right = &dmult[*j][s];
                        for (x, lx) in left.iter().enumerate() {
                            if lx.is_zero() {
                                continue;
                            }
                            for (y, ry) in right.iter().enumerate() {
                                if ry.is_zero() {
                                    continue;
                                }
                                let idx = x * n + y;
                                out[idx] =
                                    f.add(&out[idx], &f.mul(coef, &f.mul(lx, ry)));
                            }
                        }
                    }
                }
            }
        }
    }

    let unit = vec_kron(f, h.unit(), h.counit());
    let mut comult = vec![Vec::new(); nn];
    for p in 0..n {
        for q in 0..n {
            for (p1, p2, c) in h.comult_triples(p) {
                for alpha in 0..n {
                    for beta in 0..n {
                        let w = &h.product(alpha, beta)[q];
                        if w.is_zero() {
                            continue;
                        }
                        let coef = f.mul(c, w);
                        let entry = match twist {
                            // co-opposite on the H* leg
                            DoubleTwist::Standard => {
                                ((p1 * n + beta), (p2 * n + alpha), coef)
                            }
                            DoubleTwist::Mirror => {
                                ((p1 * n + alpha), (p2 * n + beta), coef)
                            }
                        };
                        comult[p * n + q].push(entry);
                    }
                }
            }
        }
    }
    let mut counit = vec![f.zero(); nn];
    for p in 0..n {
        for q in 0..n {
            counit[p * n + q] = f.mul(&h.counit()[p], &h.unit()[q]);
        }
    }

    // antipode through the already-built multiplication:
    // S_D(h (x) f) = (1 (x) f . S^{-1}) (S(h) (x) eps), with S in place of
    // S^{-1} for the mirrored twist
    let names = {
        let mut v = Vec::with_capacity(nn);
        for p in 0..n {
            for q in 0..n {
                v.push(format!(
                    "{}(x){}*",
                    h.basis_names()[p],
                    h.basis_names()[q]
                ));
            }
        }
        v
    };
    let mut data = HopfData {
        field: f,
        basis_names: names,
        mult,
        unit,
        comult,
        counit,
        antipode: Matrix::identity(f, nn),
    };
    let s_on_dual = match twist {
        DoubleTwist::Standard => h.antipode_inv(),
        DoubleTwist::Mirror => h.antipode(),
    };
    let mut antipode = Matrix::zeros(f, nn, nn);
    for p in 0..n {
        for q in 0..n {
            // x = sum_u S+-1[q][u] (1 (x) delta_u)
            let mut x = vec![f.zero(); nn];
            for uu in 0..n {
                let coef = s_on_dual.get(q, uu).clone();
                if coef.is_zero() {
                    continue;
                }
                for (t, un) in h.unit().iter().enumerate() {
                    if !un.is_zero() {
                        x[t * n + uu] = f.add(&x[t * n + uu], &f.mul(&coef, un));
                    }
                }
            }
            // y = sum_v S[v][p] (e_v (x) eps)
            let mut y = vec![f.zero(); nn];
            for v in 0..n {
                let coef = h.antipode().get(v, p).clone();
                if coef.is_zero() {
                    continue;
                }
                for (t, e) in h.counit().iter().enumerate() {
                    if !e.is_zero() {
                        y[v * n + t] = f.add(&y[v * n + t], &f.mul(&coef, e));
                    }
                }
            }
            let img = data.product_vec(&x, &y);
            antipode.set_col(p * n + q, &img);
        }
    }
    data.antipode = antipode;

    let double = Arc::new(data.into_hopf()?);

    let mut h_embedding = Matrix::zeros(f, nn, n);
    for p in 0..n {
        h_embedding.set_col(p, &vec_kron(f, &h.basis_vector(p), h.counit()));
    }
    let mut hstar_embedding = Matrix::zeros(f, nn, n);
    for q in 0..n {
        hstar_embedding.set_col(q, &vec_kron(f, h.unit(), &h.basis_vector(q)));
    }
    let d = DoubleAlgebra {
        hopf: double,
        base: h.clone(),
        twist,
        h_embedding,
        hstar_embedding,
    };
    d.verify_embeddings()?;
    Ok(d)
}

impl DoubleAlgebra {
    /// Both canonical inclusions are algebra maps.
    pub fn verify_embeddings(&self) -> Result<()> {
        let h = &self.base;
        let d = &self.hopf;
        let n = h.dim();
        let dmult = dual_mult_table(h);
        for i in 0..n {
            for j in 0..n {
                let lhs = d.product_vec(&self.h_embedding.col(i), &self.h_embedding.col(j));
                let mut rhs = vec![h.field().zero(); d.dim()];
                for (t, c) in h.product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let e = self.h_embedding.col(t);
                        for (idx, x) in e.iter().enumerate() {
                            rhs[idx] = h.field().add(&rhs[idx], &h.field().mul(c, x));
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::StructureAxioms(vec![format!(
                        "H embedding is not multiplicative at ({i}, {j})"
                    )]));
                }
                let lhs = d.product_vec(
                    &self.hstar_embedding.col(i),
                    &self.hstar_embedding.col(j),
                );
                let mut rhs = vec![h.field().zero(); d.dim()];
                for (t, c) in dmult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        let e = self.hstar_embedding.col(t);
                        for (idx, x) in e.iter().enumerate() {
                            rhs[idx] = h.field().add(&rhs[idx], &h.field().mul(c, x));
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::StructureAxioms(vec![format!(
                        "H* embedding is not multiplicative at ({i}, {j})"
                    )]));
                }
            }
        }
        Ok(())
    }
}

/// Turn a Yetter-Drinfeld object into a `D(H)`-module: `e_p (x) delta_q`
/// acts by `L_p C_q` (the action after the coaction-component operator).
pub fn yd_to_double(d: &DoubleAlgebra, obj: &Object) -> Result<ModuleStructure> {
    if obj.kind() != ObjectKind::Yd || !crate::compat::same_hopf(&d.base, obj.hopf()) {
        return Err(Error::KindMismatch);
    }
    let n = d.base.dim();
    let mut action = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            action.push(obj.module().action[p].mul(&obj.comodule().components[q]));
        }
    }
    let module = ModuleStructure {
        hopf: d.hopf.clone(),
        dim: obj.dim(),
        action,
    };
    let rep = verify_module(&module)?;
    if !rep.passed {
        return Err(Error::NotYd);
    }
    Ok(module)
}

/// Recover the Yetter-Drinfeld object from a `D(H)`-module: the action comes
/// from the `H`-embedding, the coaction components from the `H*`-embedding.
pub fn double_to_yd(d: &DoubleAlgebra, module: &ModuleStructure) -> Result<Object> {
    let h = &d.base;
    let f = h.field();
    let n = h.dim();
    if module.hopf.dim() != n * n {
        return Err(Error::DimensionMismatch("not a module over D(H)".into()));
    }
    let dim = module.dim;
    let op_of = |emb_col: Vector| -> Matrix {
        let mut out = Matrix::zeros(f, dim, dim);
        for (idx, c) in emb_col.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&module.action[idx].scale(c));
            }
        }
        out
    };
    let action: Vec<Matrix> = (0..n).map(|p| op_of(d.h_embedding.col(p))).collect();
    let components: Vec<Matrix> = (0..n).map(|q| op_of(d.hstar_embedding.col(q))).collect();
    let m = ModuleStructure { hopf: h.clone(), dim, action };
    let c = ComoduleStructure { hopf: h.clone(), dim, components };
    if !verify_module(&m)?.passed || !verify_comodule(&c)?.passed || !check_yd(&m, &c).passed {
        return Err(Error::NotYd);
    }
    Object::new(ObjectKind::Yd, m, c)
}

pub fn long_algebra(h: &Hopf) -> Result<LongAlgebra> {
    let dual = h.dual()?;
    let hopf = Arc::new(h.tensor(&dual)?);
    Ok(LongAlgebra { hopf, base: h.clone() })
}

/// Long dimodule to `H (x) H*`-module: `(h (x) h*) . m = h m_0 h*(m_1)`.
/// The two actions commute precisely because of the Long condition.
pub fn long_to_tensor(la: &LongAlgebra, obj: &Object) -> Result<ModuleStructure> {
    if obj.kind() != ObjectKind::Long || !crate::compat::same_hopf(&la.base, obj.hopf()) {
        return Err(Error::KindMismatch);
    }
    let n = la.base.dim();
    let mut action = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            action.push(obj.module().action[p].mul(&obj.comodule().components[q]));
        }
    }
    let module = ModuleStructure {
        hopf: la.hopf.clone(),
        dim: obj.dim(),
        action,
    };
    let rep = verify_module(&module)?;
    if !rep.passed {
        return Err(Error::NotLong);
    }
    Ok(module)
}

pub fn tensor_to_long(la: &LongAlgebra, module: &ModuleStructure) -> Result<Object> {
    let h = &la.base;
    let f = h.field();
    let n = h.dim();
    if module.hopf.dim() != n * n {
        return Err(Error::DimensionMismatch("not a module over H (x) H*".into()));
    }
    let dim = module.dim;
    let op_of = |emb: Vector| -> Matrix {
        let mut out = Matrix::zeros(f, dim, dim);
        for (idx, c) in emb.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&module.action[idx].scale(c));
            }
        }
        out
    };
    let action: Vec<Matrix> = (0..n)
        .map(|p| op_of(vec_kron(f, &h.basis_vector(p), h.counit())))
        .collect();
    let components: Vec<Matrix> = (0..n)
        .map(|q| op_of(vec_kron(f, h.unit(), &h.basis_vector(q))))
        .collect();
    let m = ModuleStructure { hopf: h.clone(), dim, action };
    let c = ComoduleStructure { hopf: h.clone(), dim, components };
    if !verify_module(&m)?.passed || !verify_comodule(&c)?.passed {
        return Err(Error::NotLong);
    }
    Object::new(ObjectKind::Long, m, c).map_err(|_| Error::NotLong)
}

/// Empirical convention selection: the twist under which the double verifies
/// as a Hopf algebra and the free Yetter-Drinfeld object converts to a
/// verified module, over every shipped fixture.
pub fn select_twist() -> Result<DoubleTwist> {
    let fixtures = crate::fixtures::shipped_fixtures();
    'twists: for twist in [DoubleTwist::Standard, DoubleTwist::Mirror] {
        for (_, h) in &fixtures {
            let Ok(d) = drinfeld_double_with(h, twist) else {
                continue 'twists;
            };
            let v = crate::rep::trivial_comodule(h, 1);
            let Ok(free) = crate::compat::free(&v, ObjectKind::Yd) else {
                continue 'twists;
            };
            if yd_to_double(&d, &free).is_err() {
                continue 'twists;
            }
        }
        return Ok(twist);
    }
    Err(Error::StructureAxioms(vec![
        "no double twist is compatible with every fixture".into(),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compat::{basis_vector, free, onedim, trivial};
    use crate::fixtures::{cyclic_names, cyclic_table, gf2_c2, gf5_c4, group_hopf, sweedler_h4_gf5};
    use crate::hopf::verify_hopf;
    use crate::linalg::{scalars_from_i64, Field};
    use crate::rep::trivial_comodule;

    #[test]
    fn double_of_the_ground_field_is_one_dimensional() {
        let h = group_hopf(Field::gf(5).unwrap(), &cyclic_table(1), &cyclic_names(1)).unwrap();
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.hopf.dim(), 1);
    }

    #[test]
    fn double_of_gf5_c4_is_commutative_dim_16() {
        let h = gf5_c4();
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.hopf.dim(), 16);
        assert!(d.hopf.is_commutative());
        assert!(verify_hopf(d.hopf.data()).unwrap().passed);
        // D(H) semisimple iff H semisimple and cosemisimple
        assert!(d.hopf.is_semisimple().unwrap());
    }

    #[test]
    fn double_of_sweedler_is_noncommutative_dim_16() {
        let h = sweedler_h4_gf5();
        let d = drinfeld_double(&h).unwrap();
        assert_eq!(d.hopf.dim(), 16);
        assert!(!d.hopf.is_commutative());
        assert!(verify_hopf(d.hopf.data()).unwrap().passed);
        assert!(!d.hopf.is_semisimple().unwrap());
    }

    #[test]
    fn selected_twist_is_the_frozen_constant() {
        assert_eq!(select_twist().unwrap(), SELECTED_TWIST);
    }

    #[test]
    fn yd_roundtrip_on_free_object() {
        let h = gf2_c2();
        let d = drinfeld_double(&h).unwrap();
        let m = free(&trivial_comodule(&h, 1), ObjectKind::Yd).unwrap();
        let module = yd_to_double(&d, &m).unwrap();
        assert_eq!(module.dim, 2);
        let back = double_to_yd(&d, &module).unwrap();
        assert_eq!(back.module().action, m.module().action);
        assert_eq!(back.comodule().components, m.comodule().components);
    }

    #[test]
    fn trivial_object_acts_through_the_counit_of_the_double() {
        let h = gf5_c4();
        let d = drinfeld_double(&h).unwrap();
        let t = trivial(&h, 1, ObjectKind::Yd);
        let module = yd_to_double(&d, &t).unwrap();
        for (idx, op) in module.action.iter().enumerate() {
            let expected = Matrix::identity(h.field(), 1).scale(&d.hopf.counit()[idx]);
            assert_eq!(op, &expected);
        }
    }

    #[test]
    fn sixteen_onedim_objects_give_distinct_double_characters() {
        let h = gf5_c4();
        let f = h.field();
        let d = drinfeld_double(&h).unwrap();
        let mut chars = Vec::new();
        for z in [1i64, 2, 3, 4] {
            let zz = f.from_i64(z);
            let mut pow = f.one();
            let chi: Vec<_> = (0..4)
                .map(|_| {
                    let c = pow.clone();
                    pow = f.mul(&pow, &zz);
                    c
                })
                .collect();
            for t in 0..4 {
                let obj = onedim(&h, &chi, &basis_vector(f, 4, t), ObjectKind::Yd).unwrap();
                let module = yd_to_double(&d, &obj).unwrap();
                let character: Vec<_> = module
                    .action
                    .iter()
                    .map(|op| op.get(0, 0).clone())
                    .collect();
                assert!(!chars.contains(&character));
                chars.push(character);
                let back = double_to_yd(&d, &module).unwrap();
                assert_eq!(back.module().action, obj.module().action);
                assert_eq!(back.comodule().components, obj.comodule().components);
            }
        }
        assert_eq!(chars.len(), 16);
    }

    #[test]
    fn long_correspondence_roundtrips() {
        let h = crate::fixtures::gf7_s3();
        let la = long_algebra(&h).unwrap();
        assert_eq!(la.hopf.dim(), 36);
        for obj in [
            trivial(&h, 1, ObjectKind::Long),
            free(&trivial_comodule(&h, 1), ObjectKind::Long).unwrap(),
        ] {
            let module = long_to_tensor(&la, &obj).unwrap();
            let back = tensor_to_long(&la, &module).unwrap();
            assert_eq!(back.module().action, obj.module().action);
            assert_eq!(back.comodule().components, obj.comodule().components);
        }
    }

    #[test]
    fn free_long_acts_by_multiplication_with_trivial_costar_action() {
        let h = gf2_c2();
        let la = long_algebra(&h).unwrap();
        let fr = free(&trivial_comodule(&h, 1), ObjectKind::Long).unwrap();
        let module = long_to_tensor(&la, &fr).unwrap();
        // (h (x) delta_q) acts as L_h delta_q(1)
        let n = 2;
        for p in 0..n {
            for q in 0..n {
                let expected = h.left_mult_matrix(p).scale(&h.unit()[q]);
                assert_eq!(module.action[p * n + q], expected);
            }
        }
    }

    #[test]
    fn functoriality_of_yd_to_double_on_hom_spaces() {
        // a map is H-linear and H-colinear iff it is D(H)-linear
        let h = gf2_c2();
        let d = drinfeld_double(&h).unwrap();
        let a = free(&trivial_comodule(&h, 1), ObjectKind::Yd).unwrap();
        let b = trivial(&h, 2, ObjectKind::Yd);
        let da = yd_to_double(&d, &a).unwrap();
        let db = yd_to_double(&d, &b).unwrap();
        let yd_homs = crate::compat::colinear_homs(&a, &b).unwrap();
        let d_homs = crate::compat::module_hom_space(&da, &db);
        assert_eq!(yd_homs, d_homs);
        let yd_homs = crate::compat::colinear_homs(&a, &a).unwrap();
        let d_homs = crate::compat::module_hom_space(&da, &da);
        assert_eq!(yd_homs, d_homs);
    }

    #[test]
    fn scalars_from_i64_sanity() {
        let f = Field::gf(5).unwrap();
        assert_eq!(scalars_from_i64(f, &[-1]), vec![f.from_i64(4)]);
    }

    #[test]
    fn double_semisimple_iff_base_semisimple_and_cosemisimple() {
        for (name, h) in crate::fixtures::shipped_fixtures() {
            let d = drinfeld_double(&h).unwrap();
            let expected = h.is_semisimple().unwrap() && h.is_cosemisimple().unwrap();
            assert_eq!(
                d.hopf.is_semisimple().unwrap(),
                expected,
                "integral criterion disagrees on D({name})"
            );
            // cross-check with the radical oracle wherever it is conclusive
            if let Some(rad) = crate::decomp::radical(&d.hopf).unwrap().dim {
                assert_eq!(rad == 0, expected, "radical oracle disagrees on D({name})");
            }
            if h.is_commutative() && h.is_cocommutative() {
                assert!(d.hopf.is_commutative(), "D({name}) should be commutative");
            }
        }
    }

    #[test]
    fn double_of_gf5_c4_has_sixteen_grouplikes() {
        // commutative cocommutative with 16 grouplikes: the group algebra of
        // C4 x (characters of C4)
        let d = drinfeld_double(&gf5_c4()).unwrap();
        assert!(d.hopf.is_cocommutative());
        let gls = crate::decomp::grouplikes(&d.hopf).unwrap();
        assert!(gls.complete);
        assert_eq!(gls.characters.len(), 16);
    }
}
