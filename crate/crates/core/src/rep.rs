//! Left H-modules, right H-comodules and the maps between them.
//!
//! A module is stored as one operator per basis element of H
//! (`action[i] = L_{e_i}`); a comodule as its coaction components
//! (`components[i] = (id (x) delta_i) . rho`), so `rho(v) = sum_i C_i v (x) e_i`.

use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::linalg::{vec_is_zero, Field, Matrix, Scalar, Subspace, Vector};

#[derive(Clone, Debug)]
pub struct ModuleStructure {
    pub hopf: Hopf,
    pub dim: usize,
    /// `action[i]` is the operator by which `e_i` acts.
    pub action: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct ComoduleStructure {
    pub hopf: Hopf,
    pub dim: usize,
    /// `components[i]` is `(id (x) delta_i) . rho`.
    pub components: Vec<Matrix>,
}

/// Outcome of a structure verification.
#[derive(Clone, Debug)]
pub struct StructReport {
    pub passed: bool,
    pub failures: Vec<String>,
}

impl ModuleStructure {
    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    /// Operator by which the coordinate vector `h` acts.
    pub fn action_of(&self, h: &[Scalar]) -> Matrix {
        let f = self.field();
        let mut out = Matrix::zeros(f, self.dim, self.dim);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }
}

impl ComoduleStructure {
    pub fn field(&self) -> Field {
        self.hopf.field()
    }

    /// `rho(v)` as a dense vector in `M (x) H` coordinates, `(k, i) -> k*n + i`.
    pub fn coaction_vec(&self, v: &[Scalar]) -> Vector {
        let f = self.field();
        let n = self.hopf.dim();
        let mut out = vec![f.zero(); self.dim * n];
        for (i, comp) in self.components.iter().enumerate() {
            let w = comp.apply(v);
            for (k, x) in w.iter().enumerate() {
                if !x.is_zero() {
                    out[k * n + i] = f.add(&out[k * n + i], x);
                }
            }
        }
        out
    }
}

pub fn verify_module(m: &ModuleStructure) -> Result<StructReport> {
    let h = &m.hopf;
    let n = h.dim();
    if m.action.len() != n || m.action.iter().any(|a| a.rows() != m.dim || a.cols() != m.dim) {
        return Err(Error::DimensionMismatch("module action tensor".into()));
    }
    let mut failures = Vec::new();
    if !m.action_of(h.unit()).is_identity() {
        failures.push("action-unit".into());
    }
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = m.action_of(h.product(i, j));
            let rhs = m.action[i].mul(&m.action[j]);
            if lhs != rhs {
                failures.push(format!("action-multiplicativity(e{i}, e{j})"));
                break 'outer;
            }
        }
    }
    Ok(StructReport { passed: failures.is_empty(), failures })
}

pub fn verify_comodule(c: &ComoduleStructure) -> Result<StructReport> {
    let h = &c.hopf;
    let f = h.field();
    let n = h.dim();
    if c.components.len() != n
        || c.components.iter().any(|m| m.rows() != c.dim || m.cols() != c.dim)
    {
        return Err(Error::DimensionMismatch("comodule coaction tensor".into()));
    }
    let mut failures = Vec::new();
    // counit law: sum eps(e_i) C_i = id
    let mut counit_sum = Matrix::zeros(f, c.dim, c.dim);
    for (i, comp) in c.components.iter().enumerate() {
        if !h.counit()[i].is_zero() {
            counit_sum = counit_sum.add(&comp.scale(&h.counit()[i]));
        }
    }
    if !counit_sum.is_identity() {
        failures.push("coaction-counit".into());
    }
    // coassociativity: C_a C_b = sum_i coeff of e_a (x) e_b in Delta(e_i), times C_i
    'outer: for a in 0..n {
        for b in 0..n {
            let lhs = c.components[a].mul(&c.components[b]);
            let mut rhs = Matrix::zeros(f, c.dim, c.dim);
            for i in 0..n {
                for (j, k, coef) in h.comult_triples(i) {
                    if *j == a && *k == b {
                        rhs = rhs.add(&c.components[i].scale(coef));
                    }
                }
            }
            if lhs != rhs {
                failures.push(format!("coaction-coassociativity(delta{a}, delta{b})"));
                break 'outer;
            }
        }
    }
    Ok(StructReport { passed: failures.is_empty(), failures })
}

/// `f(h v) = h f(v)` on all basis pairs.
pub fn is_h_linear(f: &Matrix, src: &ModuleStructure, dst: &ModuleStructure) -> bool {
    src.action
        .iter()
        .zip(&dst.action)
        .all(|(ls, ld)| f.mul(ls) == ld.mul(f))
}

/// `rho_N . f = (f (x) id) . rho_M` on all basis vectors.
pub fn is_h_colinear(f: &Matrix, src: &ComoduleStructure, dst: &ComoduleStructure) -> bool {
    src.components
        .iter()
        .zip(&dst.components)
        .all(|(cs, cd)| cd.mul(f) == f.mul(cs))
}

/// The coinvariants `{m : rho(m) = m (x) 1}`, as the kernel of
/// `m -> rho(m) - m (x) 1`.
pub fn coinvariants(c: &ComoduleStructure) -> Subspace {
    let f = c.field();
    let n = c.hopf.dim();
    let mut stacked = Matrix::zeros(f, 0, c.dim);
    for i in 0..n {
        let mut block = c.components[i].clone();
        let u = &c.hopf.unit()[i];
        if !u.is_zero() {
            for d in 0..c.dim {
                let v = f.sub(block.get(d, d), u);
                block.set(d, d, v);
            }
        }
        stacked = stacked.vstack(&block);
    }
    stacked.kernel()
}

/// Smallest subcomodule containing the given vectors: closure under all
/// coaction components. Terminates because the dimension strictly grows.
pub fn subcomodule_hull(c: &ComoduleStructure, vectors: &[Vector]) -> Subspace {
    let f = c.field();
    let mut basis = crate::linalg::EchelonBasis::new(f, c.dim);
    let mut frontier: Vec<Vector> = Vec::new();
    for v in vectors {
        if basis.insert(v.clone()) {
            frontier.push(v.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for comp in &c.components {
            let w = comp.apply(&v);
            if !vec_is_zero(&w) && basis.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    basis.into_subspace()
}

/// Restrict a comodule to an invariant subspace, in subspace coordinates.
pub fn restrict_comodule(c: &ComoduleStructure, sub: &Subspace) -> Option<ComoduleStructure> {
    let components = c
        .components
        .iter()
        .map(|m| sub.restrict_operator(m))
        .collect::<Option<Vec<_>>>()?;
    Some(ComoduleStructure { hopf: c.hopf.clone(), dim: sub.dim(), components })
}

pub fn restrict_module(m: &ModuleStructure, sub: &Subspace) -> Option<ModuleStructure> {
    let action = m
        .action
        .iter()
        .map(|a| sub.restrict_operator(a))
        .collect::<Option<Vec<_>>>()?;
    Some(ModuleStructure { hopf: m.hopf.clone(), dim: sub.dim(), action })
}

/// Trivial action `h . v = eps(h) v`.
pub fn trivial_module(hopf: &Hopf, dim: usize) -> ModuleStructure {
    let f = hopf.field();
    let action = (0..hopf.dim())
        .map(|i| Matrix::identity(f, dim).scale(&hopf.counit()[i]))
        .collect();
    ModuleStructure { hopf: hopf.clone(), dim, action }
}

/// Trivial coaction `v -> v (x) 1`.
pub fn trivial_comodule(hopf: &Hopf, dim: usize) -> ComoduleStructure {
    let f = hopf.field();
    let components = (0..hopf.dim())
        .map(|i| Matrix::identity(f, dim).scale(&hopf.unit()[i]))
        .collect();
    ComoduleStructure { hopf: hopf.clone(), dim, components }
}

/// H acting on itself by left multiplication.
pub fn regular_module(hopf: &Hopf) -> ModuleStructure {
    let action = (0..hopf.dim()).map(|i| hopf.left_mult_matrix(i)).collect();
    ModuleStructure { hopf: hopf.clone(), dim: hopf.dim(), action }
}

/// `(H, Delta)` as a comodule over itself.
pub fn regular_comodule(hopf: &Hopf) -> ComoduleStructure {
    let f = hopf.field();
    let n = hopf.dim();
    let mut components = vec![Matrix::zeros(f, n, n); n];
    for j in 0..n {
        for (k, i, c) in hopf.comult_triples(j) {
            let v = f.add(components[*i].get(*k, j), c);
            components[*i].set(*k, j, v);
        }
    }
    ComoduleStructure { hopf: hopf.clone(), dim: n, components }
}

/// The left action of the dual Hopf algebra on `Hom_k(M, N)`:
/// `(h* f)(m) = h*( f(m_0)_1 S(m_1) ) f(m_0)_0`.
///
/// `Hom_k(M, N)` is flattened row-major through matrix units, so a map given
/// by a `dim(N) x dim(M)` matrix `F` has coordinates `vec(F)`. The operator of
/// the dual basis element `delta_c` is
/// `F -> sum K^c_{i',i} C^N_{i'} F C^M_i` with `K^c_{i',i}` the coefficient of
/// `e_c` in `e_{i'} S(e_i)`.
pub fn hstar_action_on_homk(
    m: &ComoduleStructure,
    n: &ComoduleStructure,
) -> Result<ModuleStructure> {
    if !std::sync::Arc::ptr_eq(&m.hopf, &n.hopf) && m.hopf.data().mult != n.hopf.data().mult {
        return Err(Error::KindMismatch);
    }
    let h = &m.hopf;
    let f = h.field();
    let nh = h.dim();
    let dim = m.dim * n.dim;
    let dual = h.dual()?;
    let mut ops = vec![Matrix::zeros(f, dim, dim); nh];
    for ip in 0..nh {
        for i in 0..nh {
            let k = h.product_with_antipode(ip, i);
            if vec_is_zero(&k) {
                continue;
            }
            // vec(A F B) = (A (x) B^T) vec(F) for row-major vec
            let block = n.components[ip].kron(&m.components[i].transpose());
            for (c, coef) in k.iter().enumerate() {
                if !coef.is_zero() {
                    ops[c] = ops[c].add(&block.scale(coef));
                }
            }
        }
    }
    Ok(ModuleStructure { hopf: dual, dim, action: ops })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{gf2_c2, gf5_c4};
    use crate::linalg::scalars_from_i64;

    #[test]
    fn trivial_and_regular_structures_verify() {
        for h in [gf2_c2(), gf5_c4(), crate::fixtures::sweedler_h4_gf5()] {
            assert!(verify_module(&trivial_module(&h, 2)).unwrap().passed);
            assert!(verify_module(&regular_module(&h)).unwrap().passed);
            assert!(verify_comodule(&trivial_comodule(&h, 3)).unwrap().passed);
            assert!(verify_comodule(&regular_comodule(&h)).unwrap().passed);
        }
    }

    #[test]
    fn broken_action_fails_verification() {
        let h = gf2_c2();
        let mut m = regular_module(&h);
        // make e_g act as zero: breaks multiplicativity (g * g = 1)
        m.action[1] = Matrix::zeros(h.field(), 2, 2);
        let rep = verify_module(&m).unwrap();
        assert!(!rep.passed);
    }

    #[test]
    fn morphism_checks_on_counit_map() {
        // eps: (H, left mult, Delta) -> trivial object over GF(2)[C2]
        let h = gf2_c2();
        let f = h.field();
        let src_m = regular_module(&h);
        let src_c = regular_comodule(&h);
        let dst_m = trivial_module(&h, 1);
        let dst_c = trivial_comodule(&h, 1);
        let eps = Matrix::from_rows(f, vec![h.counit().to_vec()]);
        assert!(is_h_linear(&eps, &src_m, &dst_m));
        assert!(!is_h_colinear(&eps, &src_c, &dst_c));
        // identity and zero maps
        let id = Matrix::identity(f, 2);
        assert!(is_h_linear(&id, &src_m, &src_m));
        assert!(is_h_colinear(&id, &src_c, &src_c));
        let zero = Matrix::zeros(f, 1, 2);
        assert!(is_h_linear(&zero, &src_m, &dst_m));
        assert!(is_h_colinear(&zero, &src_c, &dst_c));
    }

    #[test]
    fn coinvariants_of_regular_comodule_is_span_of_unit() {
        for h in [gf2_c2(), gf5_c4(), crate::fixtures::sweedler_h4_gf5()] {
            let co = coinvariants(&regular_comodule(&h));
            assert_eq!(co.dim(), 1);
            assert!(co.contains(h.unit()));
        }
    }

    #[test]
    fn coinvariants_trivial_and_grouplike_coactions() {
        let h = gf5_c4();
        assert!(coinvariants(&trivial_comodule(&h, 3)).is_full());
        // coaction v -> v (x) g on k^2: no coinvariants
        let f = h.field();
        let mut components = vec![Matrix::zeros(f, 2, 2); 4];
        components[1] = Matrix::identity(f, 2);
        let c = ComoduleStructure { hopf: h.clone(), dim: 2, components };
        assert!(verify_comodule(&c).unwrap().passed);
        assert_eq!(coinvariants(&c).dim(), 0);
    }

    #[test]
    fn hull_examples() {
        let h = gf2_c2();
        let reg = regular_comodule(&h);
        // single group-like basis vector g: Delta(g) = g (x) g keeps its line
        let g = scalars_from_i64(h.field(), &[0, 1]);
        let hull = subcomodule_hull(&reg, &[g.clone()]);
        assert_eq!(hull.dim(), 1);
        assert!(hull.contains(&g));
        // all basis vectors: everything
        let all = vec![scalars_from_i64(h.field(), &[1, 0]), g];
        assert!(subcomodule_hull(&reg, &all).is_full());
        // a coinvariant vector keeps its line
        let triv = trivial_comodule(&h, 2);
        let v = scalars_from_i64(h.field(), &[1, 1]);
        let hull = subcomodule_hull(&triv, &[v]);
        assert_eq!(hull.dim(), 1);
    }

    #[test]
    fn hull_is_a_closure_operator() {
        let h = gf5_c4();
        let reg = regular_comodule(&h);
        let f = h.field();
        let vs = vec![scalars_from_i64(f, &[1, 2, 0, 0])];
        let hull = subcomodule_hull(&reg, &vs);
        // extensive
        assert!(hull.contains(&vs[0]));
        // idempotent
        let again = subcomodule_hull(&reg, hull.basis());
        assert_eq!(hull, again);
        // monotone
        let bigger = subcomodule_hull(&reg, &[vs[0].clone(), scalars_from_i64(f, &[0, 0, 1, 0])]);
        for b in hull.basis() {
            assert!(bigger.contains(b));
        }
    }

    #[test]
    fn hstar_action_satisfies_module_axioms_over_dual() {
        let h = gf2_c2();
        let reg = regular_comodule(&h);
        let module = hstar_action_on_homk(&reg, &reg).unwrap();
        assert_eq!(module.dim, 4);
        assert!(verify_module(&module).unwrap().passed);
        // unit of H* (= eps in dual coordinates = counit vector) acts as id
        assert!(module.action_of(h.counit()).is_identity());
        // delta_g action: fixes E_{01} and E_{10}, kills the diagonal units
        let dg = &module.action[1];
        let f = h.field();
        let expect = Matrix::from_rows(
            f,
            vec![
                scalars_from_i64(f, &[0, 0, 0, 0]),
                scalars_from_i64(f, &[0, 1, 0, 0]),
                scalars_from_i64(f, &[0, 0, 1, 0]),
                scalars_from_i64(f, &[0, 0, 0, 0]),
            ],
        );
        assert_eq!(dg, &expect);
    }

    #[test]
    fn hstar_action_on_trivial_comodules_is_evaluation_at_one() {
        let h = gf5_c4();
        let m = trivial_comodule(&h, 2);
        let n = trivial_comodule(&h, 2);
        let module = hstar_action_on_homk(&m, &n).unwrap();
        assert!(verify_module(&module).unwrap().passed);
        // delta_c acts by delta_c(1) = unit coordinate c
        for (c, op) in module.action.iter().enumerate() {
            let expected = Matrix::identity(h.field(), 4).scale(&h.unit()[c]);
            assert_eq!(op, &expected);
        }
    }

    #[test]
    fn coinvariants_agree_with_normalized_functional_fixed_spaces() {
        // second route: the intersection of the fixed spaces of
        // m -> m_0 h*(m_1) over functionals normalized by h*(1) = 1
        for h in [gf2_c2(), gf5_c4(), crate::fixtures::sweedler_h4_gf5()] {
            let f = h.field();
            let n = h.dim();
            let reg = regular_comodule(&h);
            let mut normalized: Vec<Vec<crate::linalg::Scalar>> = Vec::new();
            for c in 0..n {
                // delta_c, adjusted by the counit functional so that the
                // value at 1 is one
                let mut fun: Vec<_> = (0..n).map(|i| if i == c { f.one() } else { f.zero() }).collect();
                let at_one = crate::linalg::vec_dot(f, &fun, h.unit());
                let correction = f.sub(&f.one(), &at_one);
                for (i, v) in fun.iter_mut().enumerate() {
                    *v = f.add(v, &f.mul(&correction, &h.counit()[i]));
                }
                debug_assert!(crate::linalg::vec_dot(f, &fun, h.unit()).is_one());
                normalized.push(fun);
            }
            let dim = reg.dim;
            let mut stacked = Matrix::zeros(f, 0, dim);
            for fun in &normalized {
                let mut op = Matrix::zeros(f, dim, dim);
                for (c, coef) in fun.iter().enumerate() {
                    if !coef.is_zero() {
                        op = op.add(&reg.components[c].scale(coef));
                    }
                }
                for d in 0..dim {
                    let v = f.sub(op.get(d, d), &f.one());
                    op.set(d, d, v);
                }
                stacked = stacked.vstack(&op);
            }
            let via_fixed = stacked.kernel();
            assert_eq!(via_fixed, coinvariants(&reg));
        }
    }
}
