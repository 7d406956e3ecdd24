//! Subobjects, complements, certified decomposition into simples, and
//! projectivity via splitting of the canonical free cover.
//!
//! A subspace `W` is a subobject iff it is invariant under every generator of
//! the structure algebra (the action operators together with the coaction
//! components). Complements are found by solving, exactly, for a retraction
//! that commutes with all generators; when the system is inconsistent the
//! Fredholm witness certifies that the extension does not split.

mod census;
mod report;

pub use census::{
    algebra_characters, grouplikes, onedim_census, radical, simple_count_via_center,
    CharacterList, RadicalOutcome,
};
pub use report::{
    semisimplicity_report, SampleResult, SampleSpec, SemisimplicityReport, Verdict,
};

use crate::compat::{colinear_homs, free_cover, Object};
use crate::error::{Error, Result};
use crate::linalg::{
    minpoly, AffineOutcome, EchelonBasis, Field, Matrix, Scalar, Subspace, Vector,
};
use crate::rep::ModuleStructure;

/// The operators whose invariant subspaces are exactly the subobjects.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub field: Field,
    pub dim: usize,
    pub gens: Vec<Matrix>,
}

impl GeneratorSet {
    pub fn from_object(obj: &Object) -> GeneratorSet {
        let mut gens = obj.module().action.clone();
        gens.extend(obj.comodule().components.iter().cloned());
        GeneratorSet { field: obj.field(), dim: obj.dim(), gens }
    }

    pub fn from_module(m: &ModuleStructure) -> GeneratorSet {
        GeneratorSet { field: m.field(), dim: m.dim, gens: m.action.clone() }
    }

    /// Restrict every generator to an invariant subspace, in its coordinates.
    pub fn restrict(&self, sub: &Subspace) -> Result<GeneratorSet> {
        let gens = self
            .gens
            .iter()
            .map(|g| sub.restrict_operator(g))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotASubobject)?;
        Ok(GeneratorSet { field: self.field, dim: sub.dim(), gens })
    }

    pub fn is_invariant(&self, sub: &Subspace) -> bool {
        self.gens
            .iter()
            .all(|g| sub.basis().iter().all(|b| sub.contains(&g.apply(b))))
    }
}

/// The unital subalgebra of endomorphisms generated by the operators, as a
/// canonical subspace of `End(M)` (row-major matrix coordinates).
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    pub generators: Vec<Matrix>,
    pub basis: Subspace,
}

pub fn structure_algebra(gens: &GeneratorSet) -> StructureAlgebra {
    let f = gens.field;
    let m = gens.dim;
    let mut span = EchelonBasis::new(f, m * m);
    let mut frontier: Vec<Matrix> = Vec::new();
    let id = Matrix::identity(f, m);
    span.insert(id.to_vec_coords());
    frontier.push(id);
    while let Some(b) = frontier.pop() {
        for g in &gens.gens {
            let prod = g.mul(&b);
            if span.insert(prod.to_vec_coords()) {
                frontier.push(prod);
            }
        }
    }
    StructureAlgebra { generators: gens.gens.clone(), basis: span.into_subspace() }
}

/// Span of the products `L_p C_q` (the image of `D(H)` in `End(M)` for a
/// Yetter-Drinfeld object, of `H (x) H*` for a Long dimodule). Serves as the
/// independent oracle against [`structure_algebra`].
pub fn double_action_span(obj: &Object) -> Subspace {
    let f = obj.field();
    let m = obj.dim();
    let n = obj.hopf().dim();
    let mut span = EchelonBasis::new(f, m * m);
    for p in 0..n {
        for q in 0..n {
            let prod = obj.module().action[p].mul(&obj.comodule().components[q]);
            span.insert(prod.to_vec_coords());
        }
    }
    span.into_subspace()
}

/// Smallest generator-invariant subspace containing the vectors.
pub fn generated_subobject(gens: &GeneratorSet, vectors: &[Vector]) -> Subspace {
    let mut span = EchelonBasis::new(gens.field, gens.dim);
    let mut frontier: Vec<Vector> = Vec::new();
    for v in vectors {
        if span.insert(v.clone()) {
            frontier.push(v.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        for g in &gens.gens {
            let w = g.apply(&v);
            if span.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    span.into_subspace()
}

/// A retraction `e : M -> W` with `e g = g|_W e` for all generators and
/// `e|_W = id`, or the certificate that none exists.
pub enum ComplementOutcome {
    Split {
        /// `dim W x dim M`, the commuting retraction.
        retraction: Matrix,
        /// `dim M x dim M` idempotent projection onto `W`.
        projection: Matrix,
    },
    NotSplit(NotSplitCertificate),
}

/// Fredholm witness of inconsistency: a combination of the solver's equation
/// rows that is zero on the homogeneous side and nonzero on the target.
#[derive(Clone, Debug)]
pub struct NotSplitCertificate {
    pub witness: Vector,
}

pub fn find_complement(gens: &GeneratorSet, w: &Subspace) -> Result<ComplementOutcome> {
    if !gens.is_invariant(w) {
        return Err(Error::NotASubobject);
    }
    let f = gens.field;
    let c = gens.dim;
    let wd = w.dim();
    let restricted = gens.restrict(w)?;
    // unknown E (wd x c), row-major vec
    let id_w = Matrix::identity(f, wd);
    let id_c = Matrix::identity(f, c);
    let mut lhs = Matrix::zeros(f, 0, wd * c);
    let mut rhs: Vector = Vec::new();
    for (g, gw) in gens.gens.iter().zip(&restricted.gens) {
        // E g - g_W E = 0: (I_w (x) g^T - g_W (x) I_c) vec(E)
        let block = id_w.kron(&g.transpose()).sub(&gw.kron(&id_c));
        for _ in 0..block.rows() {
            rhs.push(f.zero());
        }
        lhs = lhs.vstack(&block);
    }
    // E B^T = I_w: (I_w (x) B) vec E = vec(I_w)
    let affine = id_w.kron(&w.basis_matrix());
    lhs = lhs.vstack(&affine);
    rhs.extend(Matrix::identity(f, wd).to_vec_coords());
    match lhs.solve_affine(&rhs)? {
        AffineOutcome::Solution { particular, .. } => {
            let retraction = Matrix::from_vec_coords(f, wd, c, &particular);
            let projection = w.basis_matrix().transpose().mul(&retraction);
            Ok(ComplementOutcome::Split { retraction, projection })
        }
        AffineOutcome::Inconsistent(witness) => {
            Ok(ComplementOutcome::NotSplit(NotSplitCertificate { witness }))
        }
    }
}

#[derive(Clone, Debug)]
pub enum SimplicityCertificate {
    /// Every nonzero vector of `W` (one per scalar line) generates all of `W`.
    Exhaustive { lines_checked: u64 },
    /// Test-set based: basis vectors, pairwise sums, and a minimal-polynomial
    /// idempotent probe of the commutant found no proper subobject.
    Heuristic { tests: u64 },
}

impl SimplicityCertificate {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, SimplicityCertificate::Exhaustive { .. })
    }
}

pub enum SimplicityOutcome {
    Simple(SimplicityCertificate),
    /// A proper nonzero subobject of `W`, in the caller's coordinates.
    NotSimple { proper: Subspace },
}

#[derive(Clone, Copy, Debug)]
pub struct DecompOptions {
    /// Exhaustive simplicity scan is used when `p^dim <= exhaustive_bound`.
    pub exhaustive_bound: u64,
    pub seed: u64,
}

impl Default for DecompOptions {
    fn default() -> Self {
        DecompOptions { exhaustive_bound: 1_000_000, seed: 0xD1D0 }
    }
}

fn embed_sub(outer: &Subspace, inner: &Subspace) -> Subspace {
    let vs: Vec<Vector> = inner.basis().iter().map(|b| outer.embed(b)).collect();
    Subspace::from_spanning(outer.field(), outer.ambient(), &vs)
}

/// Enumerate one representative per scalar line of GF(p)^dim (first nonzero
/// coordinate normalized to 1); generated subobjects are scale-invariant, so
/// this loses no completeness.
fn for_each_projective_vector(
    field: Field,
    dim: usize,
    mut visit: impl FnMut(&[Scalar]) -> bool,
) -> bool {
    let Field::Prime(p) = field else {
        panic!("projective enumeration needs a prime field");
    };
    let mut v: Vec<u64> = vec![0; dim];
    for lead in 0..dim {
        // coordinates before `lead` are zero, coordinate `lead` is 1
        for x in v.iter_mut() {
            *x = 0;
        }
        v[lead] = 1;
        loop {
            let scalars: Vector = v.iter().map(|&x| Scalar::Fp(x)).collect();
            if !visit(&scalars) {
                return false;
            }
            // odometer over the coordinates after `lead`
            let mut pos = lead + 1;
            loop {
                if pos == dim {
                    break;
                }
                v[pos] += 1;
                if v[pos] < p {
                    break;
                }
                v[pos] = 0;
                pos += 1;
            }
            if pos == dim {
                break;
            }
        }
    }
    true
}

pub fn is_simple(gens: &GeneratorSet, w: &Subspace, opts: &DecompOptions) -> Result<SimplicityOutcome> {
    let f = gens.field;
    let wd = w.dim();
    if wd == 0 {
        return Err(Error::NotASubobject);
    }
    let restricted = gens.restrict(w)?;
    let p = f.characteristic();
    let exhaustive = p > 0 && (p as u128).pow(wd as u32) <= opts.exhaustive_bound as u128;
    if exhaustive {
        let mut lines = 0u64;
        let mut proper: Option<Subspace> = None;
        for_each_projective_vector(f, wd, |v| {
            lines += 1;
            let sub = generated_subobject(&restricted, &[v.to_vec()]);
            if sub.dim() < wd {
                proper = Some(sub);
                false
            } else {
                true
            }
        });
        return Ok(match proper {
            Some(sub) => SimplicityOutcome::NotSimple { proper: embed_sub(w, &sub) },
            None => SimplicityOutcome::Simple(SimplicityCertificate::Exhaustive {
                lines_checked: lines,
            }),
        });
    }
    // heuristic mode: echelon test set, then an idempotent probe
    let mut tests = 0u64;
    let mut test_set: Vec<Vector> = Vec::new();
    for i in 0..wd {
        test_set.push(crate::compat::basis_vector(f, wd, i));
    }
    for i in 0..wd {
        for j in (i + 1)..wd {
            let mut v = crate::compat::basis_vector(f, wd, i);
            v[j] = f.one();
            test_set.push(v);
        }
    }
    for v in &test_set {
        tests += 1;
        let sub = generated_subobject(&restricted, &[v.clone()]);
        if sub.dim() < wd {
            return Ok(SimplicityOutcome::NotSimple { proper: embed_sub(w, &sub) });
        }
    }
    // commutant idempotent probe on a generic element
    let id_w = Matrix::identity(f, wd);
    let mut stacked = Matrix::zeros(f, 0, wd * wd);
    for g in &restricted.gens {
        stacked = stacked.vstack(&id_w.kron(&g.transpose()).sub(&g.kron(&id_w)));
    }
    let commutant = stacked.kernel();
    if commutant.dim() > 1 {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..4 {
            tests += 1;
            let mut gv = vec![f.zero(); wd * wd];
            for b in commutant.basis() {
                let coef = f.from_i64(rng.random_range(1..=7));
                crate::linalg::vec_add_scaled(f, &mut gv, &coef, b);
            }
            let a = Matrix::from_vec_coords(f, wd, wd, &gv);
            if let Some(e) = idempotent_from_minpoly(&a)? {
                let img = image_of(&e);
                if img.dim() > 0 && img.dim() < wd && restricted.is_invariant(&img) {
                    return Ok(SimplicityOutcome::NotSimple { proper: embed_sub(w, &img) });
                }
            }
        }
    }
    Ok(SimplicityOutcome::Simple(SimplicityCertificate::Heuristic { tests }))
}

/// If the minimal polynomial of `a` has at least two coprime factor-powers,
/// produce the corresponding nontrivial idempotent `P(a)` by CRT.
fn idempotent_from_minpoly(a: &Matrix) -> Result<Option<Matrix>> {
    let m = minpoly(a);
    let factors = match crate::linalg::factor(&m) {
        Ok(fs) => fs,
        Err(Error::Unsupported(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if factors.len() < 2 {
        return Ok(None);
    }
    let (f1, e1) = &factors[0];
    let part = f1.pow(*e1);
    let (cof, _) = m.div_rem(&part);
    // u part + v cof = 1; the idempotent is (v cof)(a)
    let (g, _u, v) = part.xgcd(&cof);
    debug_assert_eq!(g.degree(), Some(0));
    let proj_poly = v.mul(&cof);
    let e = proj_poly.eval_matrix(a);
    let e2 = e.mul(&e);
    if e2 != e || e.is_zero() || e.is_identity() {
        return Ok(None);
    }
    Ok(Some(e))
}

fn image_of(m: &Matrix) -> Subspace {
    let cols: Vec<Vector> = (0..m.cols()).map(|j| m.col(j)).collect();
    Subspace::from_spanning(m.field(), m.rows(), &cols)
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub subspace: Subspace,
    pub certificate: SimplicityCertificate,
}

#[derive(Clone, Debug)]
pub enum DecompStatus {
    Semisimple,
    NonSplit {
        witness: Subspace,
        certificate: NotSplitCertificate,
    },
}

pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    /// Idempotent projections onto the summands; empty unless semisimple.
    pub projections: Vec<Matrix>,
    pub status: DecompStatus,
}

impl DecompositionReport {
    pub fn is_semisimple(&self) -> bool {
        matches!(self.status, DecompStatus::Semisimple)
    }

    pub fn summand_dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.subspace.dim()).collect()
    }
}

/// Recursive decomposition: pick a minimal generated subobject from the
/// search set, certify its simplicity (descending into any proper subobject
/// the certifier finds), split off a complement, recurse on it. A failed
/// split ends the recursion with the witness.
pub fn decompose(gens: &GeneratorSet, opts: &DecompOptions) -> Result<DecompositionReport> {
    let f = gens.field;
    let m = gens.dim;
    let mut summands: Vec<Summand> = Vec::new();
    let mut status = DecompStatus::Semisimple;
    let mut current = Subspace::full(f, m);
    while current.dim() > 0 {
        let gens_cur = gens.restrict(&current)?;
        let c = current.dim();
        let mut search: Vec<Vector> = (0..c).map(|i| crate::compat::basis_vector(f, c, i)).collect();
        for i in 0..c {
            for j in (i + 1)..c {
                let mut v = crate::compat::basis_vector(f, c, i);
                v[j] = f.one();
                search.push(v);
            }
        }
        let mut best: Option<Subspace> = None;
        for v in &search {
            let wsub = generated_subobject(&gens_cur, &[v.clone()]);
            if best.as_ref().map_or(true, |b| wsub.dim() < b.dim()) {
                let found_line = wsub.dim() == 1;
                best = Some(wsub);
                if found_line {
                    break;
                }
            }
        }
        let mut w = best.expect("a basis vector generates a nonzero subobject");
        let certificate = loop {
            match is_simple(&gens_cur, &w, opts)? {
                SimplicityOutcome::Simple(cert) => break cert,
                SimplicityOutcome::NotSimple { proper } => w = proper,
            }
        };
        if w.dim() == c {
            summands.push(Summand { subspace: current.clone(), certificate });
            break;
        }
        match find_complement(&gens_cur, &w)? {
            ComplementOutcome::Split { retraction, .. } => {
                summands.push(Summand { subspace: embed_sub(&current, &w), certificate });
                let comp = retraction.kernel();
                current = embed_sub(&current, &comp);
            }
            ComplementOutcome::NotSplit(cert) => {
                status = DecompStatus::NonSplit {
                    witness: embed_sub(&current, &w),
                    certificate: cert,
                };
                break;
            }
        }
    }
    let projections = match status {
        DecompStatus::Semisimple => soundness_projections(gens, &summands)?,
        DecompStatus::NonSplit { .. } => Vec::new(),
    };
    Ok(DecompositionReport { summands, projections, status })
}

/// Projections onto the summands along each other, verified: idempotent,
/// orthogonal, summing to the identity, commuting with every generator.
fn soundness_projections(gens: &GeneratorSet, summands: &[Summand]) -> Result<Vec<Matrix>> {
    let f = gens.field;
    let m = gens.dim;
    let total: usize = summands.iter().map(|s| s.subspace.dim()).sum();
    if total != m {
        return Err(Error::StructureAxioms(vec![
            "summands do not span the object".into(),
        ]));
    }
    let mut u = Matrix::zeros(f, m, m);
    let mut col = 0usize;
    for s in summands {
        for b in s.subspace.basis() {
            u.set_col(col, b);
            col += 1;
        }
    }
    let u_inv = u
        .inverse()
        .ok_or_else(|| Error::StructureAxioms(vec!["summands are not independent".into()]))?;
    let mut projections = Vec::with_capacity(summands.len());
    let mut offset = 0usize;
    for s in summands {
        let d = s.subspace.dim();
        let mut delta = Matrix::zeros(f, m, m);
        for i in offset..offset + d {
            delta.set(i, i, f.one());
        }
        offset += d;
        projections.push(u.mul(&delta).mul(&u_inv));
    }
    // soundness battery
    let mut sum = Matrix::zeros(f, m, m);
    for (i, p) in projections.iter().enumerate() {
        if p.mul(p) != *p {
            return Err(Error::StructureAxioms(vec![format!("projection {i} not idempotent")]));
        }
        for (j, q) in projections.iter().enumerate() {
            if i != j && !p.mul(q).is_zero() {
                return Err(Error::StructureAxioms(vec![format!(
                    "projections {i} and {j} not orthogonal"
                )]));
            }
        }
        for g in &gens.gens {
            if p.mul(g) != g.mul(p) {
                return Err(Error::StructureAxioms(vec![format!(
                    "projection {i} does not commute with a generator"
                )]));
            }
        }
        sum = sum.add(p);
    }
    if !sum.is_identity() {
        return Err(Error::StructureAxioms(vec![
            "projections do not sum to the identity".into(),
        ]));
    }
    Ok(projections)
}

pub fn decompose_object(obj: &Object, opts: &DecompOptions) -> Result<DecompositionReport> {
    decompose(&GeneratorSet::from_object(obj), opts)
}

/// Do two summands (as invariant subspaces of possibly different generator
/// contexts with aligned generator lists) carry isomorphic structures? For
/// certified simples a nonzero equivariant map is automatically invertible.
pub fn isomorphic_substructures(
    gens_a: &GeneratorSet,
    a: &Subspace,
    gens_b: &GeneratorSet,
    b: &Subspace,
) -> Result<bool> {
    if a.dim() != b.dim() {
        return Ok(false);
    }
    let ra = gens_a.restrict(a)?;
    let rb = gens_b.restrict(b)?;
    if ra.gens.len() != rb.gens.len() {
        return Err(Error::KindMismatch);
    }
    let f = gens_a.field;
    let d = a.dim();
    let id = Matrix::identity(f, d);
    let mut stacked = Matrix::zeros(f, 0, d * d);
    for (ga, gb) in ra.gens.iter().zip(&rb.gens) {
        // F ga = gb F
        stacked = stacked.vstack(&id.kron(&ga.transpose()).sub(&gb.kron(&id)));
    }
    let homs = stacked.kernel();
    for h in homs.basis() {
        if Matrix::from_vec_coords(f, d, d, h).inverse().is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Projectivity via splitting of the canonical free cover: search for an
/// H-linear H-colinear section `s` with `pi . s = id`.
pub fn is_projective(obj: &Object) -> Result<bool> {
    let cover = free_cover(obj, None)?;
    let f = obj.field();
    let homs = colinear_homs(obj, &cover.free)?;
    let idv = Matrix::identity(f, obj.dim()).to_vec_coords();
    let mut cols = Matrix::zeros(f, idv.len(), homs.dim());
    for (a, fa) in homs.basis().iter().enumerate() {
        let fa_mat = Matrix::from_vec_coords(f, cover.free.dim(), obj.dim(), fa);
        cols.set_col(a, &cover.projection.mul(&fa_mat).to_vec_coords());
    }
    match cols.solve_affine(&idv)? {
        AffineOutcome::Solution { .. } => Ok(true),
        AffineOutcome::Inconsistent(_) => Ok(false),
    }
}

/// Check a not-split witness against its system: used by reports to confirm
/// the certificate independently of the solver run that produced it.
pub fn verify_not_split_certificate(
    gens: &GeneratorSet,
    w: &Subspace,
    cert: &NotSplitCertificate,
) -> Result<bool> {
    let f = gens.field;
    let c = gens.dim;
    let wd = w.dim();
    let restricted = gens.restrict(w)?;
    let id_w = Matrix::identity(f, wd);
    let mut lhs = Matrix::zeros(f, 0, wd * c);
    let mut rhs: Vector = Vec::new();
    for (g, gw) in gens.gens.iter().zip(&restricted.gens) {
        let block = id_w.kron(&g.transpose()).sub(&gw.kron(&Matrix::identity(f, c)));
        for _ in 0..block.rows() {
            rhs.push(f.zero());
        }
        lhs = lhs.vstack(&block);
    }
    lhs = lhs.vstack(&id_w.kron(&w.basis_matrix()));
    rhs.extend(Matrix::identity(f, wd).to_vec_coords());
    if cert.witness.len() != lhs.rows() {
        return Ok(false);
    }
    let combo = lhs.transpose().apply(&cert.witness);
    let target = crate::linalg::vec_dot(f, &cert.witness, &rhs);
    Ok(crate::linalg::vec_is_zero(&combo) && !target.is_zero())
}

/// Minimal polynomial helper re-exported for census use.
pub(crate) fn multiplication_operator(poly_basis: &Subspace, mult_of: &dyn Fn(&[Scalar], &[Scalar]) -> Vector, b: &[Scalar]) -> Option<Matrix> {
    let f = poly_basis.field();
    let d = poly_basis.dim();
    let mut out = Matrix::zeros(f, d, d);
    for (j, x) in poly_basis.basis().iter().enumerate() {
        let prod = mult_of(b, x);
        let coords = poly_basis.coords_of(&prod)?;
        out.set_col(j, &coords);
    }
    Some(out)
}
