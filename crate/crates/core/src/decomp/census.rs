//! Enumeration machinery: algebra characters, grouplike elements,
//! one-dimensional objects, simple counts through central idempotents, and
//! the Jacobson-radical oracle.

use super::{decompose, DecompOptions, GeneratorSet};
use crate::compat::{onedim, ObjectKind};
use crate::error::{Error, Result};
use crate::hopf::Hopf;
use crate::linalg::{
    factor, minpoly, vec_dot, vec_kron, EchelonBasis, Field, Matrix, Scalar, Subspace, Vector,
};
use crate::rep::regular_module;

#[derive(Clone, Debug)]
pub struct CharacterList {
    pub characters: Vec<Vector>,
    /// Whether the enumeration is provably complete.
    pub complete: bool,
}

fn is_character(h: &Hopf, v: &[Scalar]) -> bool {
    let f = h.field();
    if !vec_dot(f, h.unit(), v).is_one() {
        return false;
    }
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            if vec_dot(f, h.product(i, j), v) != f.mul(&v[i], &v[j]) {
                return false;
            }
        }
    }
    true
}

/// All algebra maps `H -> k` as coordinate vectors (values on the basis).
/// Over a small prime field the scan is exhaustive; otherwise characters are
/// read off the one-dimensional summands of the regular module, which is
/// complete exactly when the regular module is semisimple.
pub fn algebra_characters(h: &Hopf) -> Result<CharacterList> {
    let f = h.field();
    let n = h.dim();
    if let Field::Prime(p) = f {
        if (p as u128).pow(n as u32) <= 2_000_000 {
            let mut characters = Vec::new();
            let mut v = vec![0u64; n];
            loop {
                let cand: Vector = v.iter().map(|&x| Scalar::Fp(x)).collect();
                if is_character(h, &cand) {
                    characters.push(cand);
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    v[pos] += 1;
                    if v[pos] < p {
                        break;
                    }
                    v[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            return Ok(CharacterList { characters, complete: true });
        }
    }
    // decomposition route
    let gens = GeneratorSet::from_module(&regular_module(h));
    let report = decompose(&gens, &DecompOptions::default())?;
    let mut characters: Vec<Vector> = Vec::new();
    for s in &report.summands {
        if s.subspace.dim() != 1 {
            continue;
        }
        let w = &s.subspace.basis()[0];
        let lead = w.iter().position(|x| !x.is_zero()).unwrap();
        let lead_inv = f.inv(&w[lead]).unwrap();
        let chi: Vector = (0..n)
            .map(|i| {
                let img = h.left_mult_matrix(i).apply(w);
                f.mul(&img[lead], &lead_inv)
            })
            .collect();
        if is_character(h, &chi) && !characters.contains(&chi) {
            characters.push(chi);
        }
    }
    Ok(CharacterList { characters, complete: report.is_semisimple() })
}

/// Grouplike elements of `H` = algebra characters of `H*`; the character's
/// value vector on the dual basis is the element's coordinate vector.
pub fn grouplikes(h: &Hopf) -> Result<CharacterList> {
    let dual = h.dual()?;
    let list = algebra_characters(&dual)?;
    // sanity: each returned vector really is grouplike
    let f = h.field();
    for t in &list.characters {
        let lhs = h.data().comult_vec(t);
        let rhs = vec_kron(f, t, t);
        debug_assert_eq!(lhs, rhs, "dual character is not grouplike");
    }
    Ok(list)
}

/// All one-dimensional objects `(character, grouplike)` of the kind, filtered
/// by the kind's compatibility law.
pub fn onedim_census(h: &Hopf, kind: ObjectKind) -> Result<(Vec<(Vector, Vector)>, bool)> {
    let chars = algebra_characters(h)?;
    let gls = grouplikes(h)?;
    let mut out = Vec::new();
    for chi in &chars.characters {
        for t in &gls.characters {
            if onedim(h, chi, t, kind).is_ok() {
                out.push((chi.clone(), t.clone()));
            }
        }
    }
    Ok((out, chars.complete && gls.complete))
}

/// Number of simple components of a (semisimple) algebra: primitive
/// idempotents of the center, found by repeatedly splitting blocks along
/// coprime factors of minimal polynomials of multiplication operators.
pub fn simple_count_via_center(h: &Hopf) -> Result<usize> {
    let f = h.field();
    let n = h.dim();
    // center: z with e_i z = z e_i for all i
    let mut stacked = Matrix::zeros(f, 0, n);
    for i in 0..n {
        let li = h.left_mult_matrix(i);
        let mut ri = Matrix::zeros(f, n, n);
        for j in 0..n {
            ri.set_col(j, h.product(j, i));
        }
        stacked = stacked.vstack(&li.sub(&ri));
    }
    let center = stacked.kernel();

    struct Block {
        unit: Vector,
        basis: Subspace,
    }
    let mut blocks = vec![Block { unit: h.unit().to_vec(), basis: center }];
    let mut count = 0usize;
    while let Some(block) = blocks.pop() {
        if block.basis.dim() <= 1 {
            count += 1;
            continue;
        }
        let mut split = None;
        for b in block.basis.basis() {
            let op = super::multiplication_operator(
                &block.basis,
                &|x: &[Scalar], y: &[Scalar]| h.product_vec(x, y),
                b,
            )
            .ok_or_else(|| {
                Error::StructureAxioms(vec!["center block is not multiplicatively closed".into()])
            })?;
            let m = minpoly(&op);
            let factors = factor(&m)?;
            if factors.len() < 2 {
                continue;
            }
            // CRT idempotent for the first factor power
            let (f1, e1) = &factors[0];
            let part = f1.pow(*e1);
            let (cof, _) = m.div_rem(&part);
            let (_, _, v) = part.xgcd(&cof);
            let proj = v.mul(&cof).eval_matrix(&op);
            let unit_coords = block
                .basis
                .coords_of(&block.unit)
                .expect("block unit lies in the block");
            let e_coords = proj.apply(&unit_coords);
            let e_elem = block.basis.embed(&e_coords);
            split = Some(e_elem);
            break;
        }
        match split {
            None => count += 1,
            Some(e) => {
                let f_elem: Vector = block
                    .unit
                    .iter()
                    .zip(&e)
                    .map(|(u, x)| f.sub(u, x))
                    .collect();
                for idem in [e, f_elem] {
                    let vs: Vec<Vector> = block
                        .basis
                        .basis()
                        .iter()
                        .map(|x| h.product_vec(&idem, x))
                        .collect();
                    let sub = Subspace::from_spanning(f, n, &vs);
                    if sub.dim() == 0 {
                        continue;
                    }
                    blocks.push(Block { unit: idem, basis: sub });
                }
            }
        }
    }
    Ok(count)
}

#[derive(Clone, Debug)]
pub struct RadicalOutcome {
    /// Dimension of the Jacobson radical, when certifiable at this scale.
    pub dim: Option<usize>,
    pub route: &'static str,
}

fn span_is_nilpotent_ideal(h: &Hopf, k: &Subspace) -> bool {
    let f = h.field();
    let n = h.dim();
    // ideal
    for x in k.basis() {
        for i in 0..n {
            let e = h.basis_vector(i);
            if !k.contains(&h.product_vec(&e, x)) || !k.contains(&h.product_vec(x, &e)) {
                return false;
            }
        }
    }
    // nilpotent: powers of the subspace shrink to zero
    let mut power = k.clone();
    for _ in 0..n {
        if power.dim() == 0 {
            return true;
        }
        let mut next = EchelonBasis::new(f, n);
        for x in k.basis() {
            for y in power.basis() {
                next.insert(h.product_vec(x, y));
            }
        }
        let next = next.into_subspace();
        if next.dim() == power.dim() && next == power {
            return false;
        }
        power = next;
    }
    power.dim() == 0
}

/// The Jacobson radical of the underlying algebra, computed through the
/// trace form where it is conclusive (always in characteristic 0) and by an
/// exhaustive nilpotent-element scan for small commutative algebras in
/// characteristic p. The radical is always contained in the trace-form
/// kernel; a nilpotent trace-form kernel therefore equals the radical.
pub fn radical(h: &Hopf) -> Result<RadicalOutcome> {
    let f = h.field();
    let n = h.dim();
    let traces: Vector = (0..n).map(|i| h.left_mult_matrix(i).trace()).collect();
    let gram = Matrix::from_fn(f, n, n, |i, j| vec_dot(f, h.product(i, j), &traces));
    let kernel = gram.kernel();
    if kernel.dim() == 0 {
        return Ok(RadicalOutcome { dim: Some(0), route: "trace form nondegenerate" });
    }
    if span_is_nilpotent_ideal(h, &kernel) {
        return Ok(RadicalOutcome {
            dim: Some(kernel.dim()),
            route: "trace-form kernel is a nilpotent ideal",
        });
    }
    if let Field::Prime(p) = f {
        if h.is_commutative() && (p as u128).pow(n as u32) <= 1 << 16 {
            let mut nilpotents = EchelonBasis::new(f, n);
            let mut v = vec![0u64; n];
            loop {
                let cand: Vector = v.iter().map(|&x| Scalar::Fp(x)).collect();
                let mut op = Matrix::zeros(f, n, n);
                for (i, c) in cand.iter().enumerate() {
                    if !c.is_zero() {
                        op = op.add(&h.left_mult_matrix(i).scale(c));
                    }
                }
                if op.pow(n as u32).is_zero() {
                    nilpotents.insert(cand);
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    v[pos] += 1;
                    if v[pos] < p {
                        break;
                    }
                    v[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            let span = nilpotents.into_subspace();
            if span_is_nilpotent_ideal(h, &span) {
                return Ok(RadicalOutcome {
                    dim: Some(span.dim()),
                    route: "exhaustive nilpotent scan",
                });
            }
        }
    }
    Ok(RadicalOutcome { dim: None, route: "inconclusive at this scale" })
}
