//! Finite-dimensional Hopf algebras presented by structure constants.
//!
//! A Hopf algebra is stored as raw tensors ([`HopfData`]): a dense
//! multiplication table `mult[i][j] = coordinates of e_i * e_j`, the unit
//! vector, a sparse comultiplication `Delta(e_i) = sum c * e_j (x) e_k`
//! given by triples, the counit vector and the antipode matrix (columns are
//! images of basis vectors). [`verify_hopf`] checks the seven axiom families
//! exactly; [`HopfData::into_hopf`] promotes verified data into an immutable
//! [`HopfAlgebra`] with cached antipode inverse, iterated comultiplication
//! and commutativity flags.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{vec_dot, vec_is_zero, Field, Matrix, Scalar, Subspace, Vector};

/// Names of the seven verified axiom families, in report order.
pub const AXIOM_FAMILIES: [&str; 7] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "bialgebra",
    "antipode",
    "antipode-invertible",
];

/// Raw structure constants, shape-checked but not yet verified.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub field: Field,
    pub basis_names: Vec<String>,
    /// `mult[i][j]` = coordinate vector of `e_i * e_j`.
    pub mult: Vec<Vec<Vector>>,
    /// Coordinates of the algebra unit.
    pub unit: Vector,
    /// `comult[i]` = triples `(j, k, c)` with `Delta(e_i) = sum c e_j (x) e_k`.
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vector,
    /// Antipode; column `j` is the coordinate vector of `S(e_j)`.
    pub antipode: Matrix,
}

/// Result of running the axiom checker.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub passed: bool,
    pub failures: Vec<String>,
    pub details: Vec<String>,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let n = self.dim();
        let bad = |what: &str| Err(Error::DimensionMismatch(what.to_string()));
        if n == 0 {
            return bad("empty basis");
        }
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n) {
            return bad("mult table is not n x n");
        }
        if self.mult.iter().flatten().any(|v| v.len() != n) {
            return bad("mult entries are not coordinate vectors of length n");
        }
        if self.unit.len() != n || self.counit.len() != n {
            return bad("unit/counit length");
        }
        if self.comult.len() != n {
            return bad("comult length");
        }
        if self
            .comult
            .iter()
            .flatten()
            .any(|(j, k, _)| *j >= n || *k >= n)
        {
            return bad("comult triple index out of range");
        }
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return bad("antipode shape");
        }
        Ok(())
    }

    /// Product of two coordinate vectors through the multiplication table.
    pub fn product_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = f.mul(x, y);
                for (o, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    *o = f.add(o, &f.mul(&c, m));
                }
            }
        }
        out
    }

    /// `Delta` applied to a coordinate vector, densely as an `n*n` vector with
    /// index `(j, k) -> j*n + k`.
    pub fn comult_vec(&self, a: &[Scalar]) -> Vector {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![f.zero(); n * n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comult[i] {
                let idx = j * n + k;
                out[idx] = f.add(&out[idx], &f.mul(x, c));
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let f = self.field;
        let mut v = vec![f.zero(); self.dim()];
        v[i] = f.one();
        v
    }

    /// Left multiplication operator by `e_i`.
    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for j in 0..n {
            m.set_col(j, &self.mult[i][j]);
        }
        m
    }

    /// Verify the axioms and promote to an immutable, cached algebra.
    pub fn into_hopf(self) -> Result<HopfAlgebra> {
        let report = verify_hopf(&self)?;
        if !report.passed {
            return Err(Error::HopfAxioms(report.failures));
        }
        let antipode_inv = self.antipode.inverse().ok_or(Error::NotBijective)?;
        let comult2 = iterated_comult(&self);
        Ok(HopfAlgebra {
            data: self,
            antipode_inv,
            comult2,
            commutative: report.commutative,
            cocommutative: report.cocommutative,
            dual_cache: OnceLock::new(),
        })
    }
}

fn iterated_comult(data: &HopfData) -> Vec<Vec<(usize, usize, usize, Scalar)>> {
    let f = data.field;
    let n = data.dim();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc: std::collections::BTreeMap<(usize, usize, usize), Scalar> =
            std::collections::BTreeMap::new();
        for (j, k, c) in &data.comult[i] {
            for (a, b, d) in &data.comult[*j] {
                let key = (*a, *b, *k);
                let add = f.mul(c, d);
                let entry = acc.entry(key).or_insert_with(|| f.zero());
                *entry = f.add(entry, &add);
            }
        }
        out.push(
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b, k), c)| (a, b, k, c))
                .collect(),
        );
    }
    out
}

/// Check the seven axiom families on raw structure constants.
pub fn verify_hopf(data: &HopfData) -> Result<VerifyReport> {
    data.check_shapes()?;
    let f = data.field;
    let n = data.dim();
    let mut failures = Vec::new();
    let mut details = Vec::new();
    let fail = |failures: &mut Vec<String>, details: &mut Vec<String>, family: &str, d: String| {
        if !failures.iter().any(|x| x == family) {
            failures.push(family.to_string());
            details.push(format!("{family}: {d}"));
        }
    };

    // associativity
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = data.mult[i][j].clone();
            for k in 0..n {
                let left = data.product_vec(&ij, &data.basis_vector(k));
                let right = data.product_vec(&data.basis_vector(i), &data.mult[j][k]);
                if left != right {
                    fail(
                        &mut failures,
                        &mut details,
                        "associativity",
                        format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"),
                    );
                    break 'assoc;
                }
            }
        }
    }

    // unit
    for i in 0..n {
        let b = data.basis_vector(i);
        if data.product_vec(&data.unit, &b) != b || data.product_vec(&b, &data.unit) != b {
            fail(&mut failures, &mut details, "unit", format!("1 * e{i} or e{i} * 1 != e{i}"));
            break;
        }
    }

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta, densely in n^3
    for i in 0..n {
        let mut left = vec![f.zero(); n * n * n];
        let mut right = vec![f.zero(); n * n * n];
        for (j, k, c) in &data.comult[i] {
            for (a, b, d) in &data.comult[*j] {
                let idx = (a * n + b) * n + k;
                left[idx] = f.add(&left[idx], &f.mul(c, d));
            }
            for (a, b, d) in &data.comult[*k] {
                let idx = (j * n + a) * n + b;
                right[idx] = f.add(&right[idx], &f.mul(c, d));
            }
        }
        if left != right {
            fail(&mut failures, &mut details, "coassociativity", format!("on e{i}"));
            break;
        }
    }

    // counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    for i in 0..n {
        let mut left = vec![f.zero(); n];
        let mut right = vec![f.zero(); n];
        for (j, k, c) in &data.comult[i] {
            left[*k] = f.add(&left[*k], &f.mul(c, &data.counit[*j]));
            right[*j] = f.add(&right[*j], &f.mul(c, &data.counit[*k]));
        }
        let b = data.basis_vector(i);
        if left != b || right != b {
            fail(&mut failures, &mut details, "counit", format!("on e{i}"));
            break;
        }
    }

    // bialgebra: Delta and eps are algebra maps; Delta(1) = 1 (x) 1, eps(1) = 1
    let mut bialgebra_ok = true;
    'bialg: for i in 0..n {
        for j in 0..n {
            let lhs = data.comult_vec(&data.mult[i][j]);
            // Delta(e_i) Delta(e_j) with componentwise product in H (x) H
            let mut rhs = vec![f.zero(); n * n];
            for (a, b, c) in &data.comult[i] {
                for (p, q, d) in &data.comult[j] {
                    let coef = f.mul(c, d);
                    let first = &data.mult[*a][*p];
                    let second = &data.mult[*b][*q];
                    for (u, x) in first.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (v, y) in second.iter().enumerate() {
                            if y.is_zero() {
                                continue;
                            }
                            let idx = u * n + v;
                            rhs[idx] = f.add(&rhs[idx], &f.mul(&coef, &f.mul(x, y)));
                        }
                    }
                }
            }
            if lhs != rhs {
                fail(&mut failures, &mut details, "bialgebra", format!("Delta(e{i} e{j}) != Delta(e{i}) Delta(e{j})"));
                bialgebra_ok = false;
                break 'bialg;
            }
            let eps_prod = vec_dot(f, &data.counit, &data.mult[i][j]);
            if eps_prod != f.mul(&data.counit[i], &data.counit[j]) {
                fail(&mut failures, &mut details, "bialgebra", format!("eps(e{i} e{j}) != eps(e{i}) eps(e{j})"));
                bialgebra_ok = false;
                break 'bialg;
            }
        }
    }
    if bialgebra_ok {
        let mut unit_cm = data.comult_vec(&data.unit);
        for (u, x) in data.unit.iter().enumerate() {
            for (v, y) in data.unit.iter().enumerate() {
                let idx = u * n + v;
                unit_cm[idx] = f.sub(&unit_cm[idx], &f.mul(x, y));
            }
        }
        if !vec_is_zero(&unit_cm) {
            fail(&mut failures, &mut details, "bialgebra", "Delta(1) != 1 (x) 1".into());
        } else if !vec_dot(f, &data.counit, &data.unit).is_one() {
            fail(&mut failures, &mut details, "bialgebra", "eps(1) != 1".into());
        }
    }

    // antipode: mu (S (x) id) Delta = unit . eps = mu (id (x) S) Delta
    for i in 0..n {
        let mut left = vec![f.zero(); n];
        let mut right = vec![f.zero(); n];
        for (j, k, c) in &data.comult[i] {
            let sj = data.antipode.col(*j);
            let sk = data.antipode.col(*k);
            let l = data.product_vec(&sj, &data.basis_vector(*k));
            let r = data.product_vec(&data.basis_vector(*j), &sk);
            for t in 0..n {
                left[t] = f.add(&left[t], &f.mul(c, &l[t]));
                right[t] = f.add(&right[t], &f.mul(c, &r[t]));
            }
        }
        let target: Vector = data.unit.iter().map(|u| f.mul(&data.counit[i], u)).collect();
        if left != target || right != target {
            fail(&mut failures, &mut details, "antipode", format!("on e{i}"));
            break;
        }
    }

    // antipode bijectivity
    if data.antipode.inverse().is_none() {
        fail(&mut failures, &mut details, "antipode-invertible", "S is singular".into());
    }

    let commutative = (0..n).all(|i| (0..n).all(|j| data.mult[i][j] == data.mult[j][i]));
    let cocommutative = (0..n).all(|i| {
        let d = data.comult_vec(&data.basis_vector(i));
        (0..n).all(|j| (0..n).all(|k| d[j * n + k] == d[k * n + j]))
    });

    Ok(VerifyReport {
        passed: failures.is_empty(),
        failures,
        details,
        commutative,
        cocommutative,
    })
}

/// Matrix inverse of the antipode of raw data, without running the full
/// axiom battery first.
pub fn antipode_inverse(data: &HopfData) -> Result<Matrix> {
    data.check_shapes()?;
    data.antipode.inverse().ok_or(Error::NotBijective)
}

/// A verified finite-dimensional Hopf algebra. Immutable after construction
/// and safe to share across threads.
#[derive(Debug)]
pub struct HopfAlgebra {
    data: HopfData,
    antipode_inv: Matrix,
    comult2: Vec<Vec<(usize, usize, usize, Scalar)>>,
    commutative: bool,
    cocommutative: bool,
    dual_cache: OnceLock<Arc<HopfAlgebra>>,
}

/// Shared handle used throughout the crate.
pub type Hopf = Arc<HopfAlgebra>;

/// The 1-dimensional space of left integrals, on one side of the duality.
#[derive(Clone, Debug)]
pub struct IntegralSpace {
    pub side: IntegralSide,
    pub space: Subspace,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IntegralSide {
    LeftInH,
    LeftInDual,
}

impl HopfAlgebra {
    pub fn field(&self) -> Field {
        self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }

    pub fn basis_names(&self) -> &[String] {
        &self.data.basis_names
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.data.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.data.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.data.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.data.mult[i][j]
    }

    pub fn product_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.data.product_vec(a, b)
    }

    pub fn comult_triples(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.data.comult[i]
    }

    /// Triples of `(Delta (x) id) Delta(e_i)`, cached.
    pub fn comult2_triples(&self, i: usize) -> &[(usize, usize, usize, Scalar)] {
        &self.comult2[i]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.data.basis_vector(i)
    }

    pub fn left_mult_matrix(&self, i: usize) -> Matrix {
        self.data.left_mult_matrix(i)
    }

    /// `S(e_i)` as a coordinate vector.
    pub fn antipode_of_basis(&self, i: usize) -> Vector {
        self.data.antipode.col(i)
    }

    /// Coefficient vector of the product `e_i * S(e_j)`.
    pub fn product_with_antipode(&self, i: usize, j: usize) -> Vector {
        self.product_vec(&self.basis_vector(i), &self.antipode_of_basis(j))
    }

    /// Coefficient vector of `e_i * e_j * S^{-1}(e_k)`.
    pub fn product_then_antipode_inv(&self, i: usize, j: usize, k: usize) -> Vector {
        let s_inv_k = self.antipode_inv.col(k);
        let ij = self.data.mult[i][j].clone();
        self.product_vec(&ij, &s_inv_k)
    }

    /// The linear dual on the dual basis; multiplication is the transpose of
    /// comultiplication and vice versa. Cached.
    pub fn dual(&self) -> Result<Hopf> {
        if let Some(d) = self.dual_cache.get() {
            return Ok(d.clone());
        }
        let d = Arc::new(self.build_dual()?);
        let _ = self.dual_cache.set(d.clone());
        Ok(self.dual_cache.get().unwrap().clone())
    }

    fn build_dual(&self) -> Result<HopfAlgebra> {
        let f = self.field();
        let n = self.dim();
        let names = self
            .data
            .basis_names
            .iter()
            .map(|s| format!("{s}*"))
            .collect();
        let mut mult = vec![vec![vec![f.zero(); n]; n]; n];
        for i in 0..n {
            for (j, k, c) in &self.data.comult[i] {
                mult[*j][*k][i] = f.add(&mult[*j][*k][i], c);
            }
        }
        let mut comult = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.data.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        comult[k].push((i, j, c.clone()));
                    }
                }
            }
        }
        let data = HopfData {
            field: f,
            basis_names: names,
            mult,
            unit: self.data.counit.clone(),
            comult,
            counit: self.data.unit.clone(),
            antipode: self.data.antipode.transpose(),
        };
        data.into_hopf()
    }

    /// Tensor product Hopf algebra on basis `(i, j) -> i*dim(other) + j`.
    pub fn tensor(&self, other: &HopfAlgebra) -> Result<HopfAlgebra> {
        if self.field() != other.field() {
            return Err(Error::KindMismatch);
        }
        let f = self.field();
        let (n, m) = (self.dim(), other.dim());
        let nm = n * m;
        let mut names = Vec::with_capacity(nm);
        for i in 0..n {
            for j in 0..m {
                names.push(format!(
                    "{}(x){}",
                    self.data.basis_names[i], other.data.basis_names[j]
                ));
            }
        }
        let mut mult = vec![vec![Vec::new(); nm]; nm];
        for i in 0..n {
            for j in 0..m {
                for p in 0..n {
                    for q in 0..m {
                        let a = &self.data.mult[i][p];
                        let b = &other.data.mult[j][q];
                        mult[i * m + j][p * m + q] = crate::linalg::vec_kron(f, a, b);
                    }
                }
            }
        }
        let unit = crate::linalg::vec_kron(f, &self.data.unit, &other.data.unit);
        let mut comult = vec![Vec::new(); nm];
        for i in 0..n {
            for j in 0..m {
                for (p, q, c) in &self.data.comult[i] {
                    for (r, s, d) in &other.data.comult[j] {
                        comult[i * m + j].push((p * m + r, q * m + s, f.mul(c, d)));
                    }
                }
            }
        }
        let counit = crate::linalg::vec_kron(f, &self.data.counit, &other.data.counit);
        let antipode = self.data.antipode.kron(&other.data.antipode);
        let data = HopfData {
            field: f,
            basis_names: names,
            mult,
            unit,
            comult,
            counit,
            antipode,
        };
        data.into_hopf()
    }

    /// Solve `h L = eps(h) L` for all basis `h`; the space is 1-dimensional
    /// for any genuine finite-dimensional Hopf algebra.
    pub fn left_integrals(&self) -> Result<IntegralSpace> {
        let f = self.field();
        let n = self.dim();
        let mut stacked = Matrix::zeros(f, 0, n);
        for i in 0..n {
            let mut li = self.left_mult_matrix(i);
            for d in 0..n {
                let v = f.sub(li.get(d, d), &f.mul(&self.data.counit[i], &f.one()));
                li.set(d, d, v);
            }
            stacked = stacked.vstack(&li);
        }
        let space = stacked.kernel();
        if space.dim() != 1 {
            return Err(Error::DegenerateIntegralSpace(space.dim()));
        }
        Ok(IntegralSpace {
            side: IntegralSide::LeftInH,
            space,
        })
    }

    /// Larson-Sweedler criterion: semisimple iff `eps(Lambda) != 0`.
    pub fn is_semisimple(&self) -> Result<bool> {
        let ints = self.left_integrals()?;
        let lambda = &ints.space.basis()[0];
        Ok(!vec_dot(self.field(), &self.data.counit, lambda).is_zero())
    }

    /// The same criterion applied in the dual.
    pub fn is_cosemisimple(&self) -> Result<bool> {
        self.dual()?.is_semisimple()
    }
}

/// Group algebra `kG` from a Cayley table (`table[i][j]` = index of `g_i g_j`).
pub fn group_algebra(field: Field, table: &[Vec<usize>], names: &[String]) -> Result<HopfAlgebra> {
    let n = table.len();
    if n == 0 || names.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(Error::NotAGroup("table is not square".into()));
    }
    if table.iter().flatten().any(|&v| v >= n) {
        return Err(Error::NotAGroup("entry out of range".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == identity && table[j][i] == identity) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    let mut mult = vec![vec![vec![field.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j][table[i][j]] = field.one();
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[identity] = field.one();
    let comult = (0..n).map(|i| vec![(i, i, field.one())]).collect();
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zeros(field, n, n);
    for i in 0..n {
        let inv = (0..n).find(|&j| table[i][j] == identity).unwrap();
        antipode.set(inv, i, field.one());
    }
    let data = HopfData {
        field,
        basis_names: names.to_vec(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    };
    data.into_hopf()
}

/// The 4-dimensional Sweedler algebra on `{1, g, x, gx}` with `g^2 = 1`,
/// `x^2 = 0`, `xg = -gx`, `Delta(g) = g (x) g`, `Delta(x) = x (x) 1 + g (x) x`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(
            "the Sweedler algebra needs characteristic != 2".into(),
        ));
    }
    let f = field;
    let names = ["1", "g", "x", "gx"].map(String::from).to_vec();
    let e = |i: usize| -> Vector {
        let mut v = vec![f.zero(); 4];
        v[i] = f.one();
        v
    };
    let neg = |v: Vector| -> Vector { v.iter().map(|x| f.neg(x)).collect() };
    let zero = vec![f.zero(); 4];
    let mult = vec![
        vec![e(0), e(1), e(2), e(3)],
        vec![e(1), e(0), e(3), e(2)],
        vec![e(2), neg(e(3)), zero.clone(), zero.clone()],
        vec![e(3), neg(e(2)), zero.clone(), zero.clone()],
    ];
    let comult = vec![
        vec![(0, 0, f.one())],
        vec![(1, 1, f.one())],
        vec![(2, 0, f.one()), (1, 2, f.one())],
        vec![(3, 1, f.one()), (0, 3, f.one())],
    ];
    let counit = vec![f.one(), f.one(), f.zero(), f.zero()];
    let mut antipode = Matrix::zeros(f, 4, 4);
    antipode.set_col(0, &e(0));
    antipode.set_col(1, &e(1));
    antipode.set_col(2, &neg(e(3)));
    antipode.set_col(3, &e(2));
    let data = HopfData {
        field: f,
        basis_names: names,
        mult,
        unit: e(0),
        comult,
        counit,
        antipode,
    };
    data.into_hopf()
}

/// Every well-formed single-entry mutation of the structure constants: each
/// position of the dense mult/comult/counit/unit/antipode tensors replaced by
/// each other field element. Prime fields only (the mutation fixtures).
pub fn single_entry_mutations(data: &HopfData) -> Vec<HopfData> {
    let Field::Prime(p) = data.field else {
        panic!("mutation scan is defined over prime fields");
    };
    let _f = data.field;
    let n = data.dim();
    let mut out = Vec::new();
    let alternatives = |cur: &Scalar| -> Vec<Scalar> {
        (0..p)
            .map(Scalar::Fp)
            .filter(|v| v != cur)
            .collect()
    };
    // dense comultiplication view for mutation
    let dense_comult: Vec<Vector> = (0..n)
        .map(|i| data.comult_vec(&data.basis_vector(i)))
        .collect();
    let rebuild_comult = |dense: &[Vector]| -> Vec<Vec<(usize, usize, Scalar)>> {
        dense
            .iter()
            .map(|row| {
                let mut triples = Vec::new();
                for (idx, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        triples.push((idx / n, idx % n, c.clone()));
                    }
                }
                triples
            })
            .collect()
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for v in alternatives(&data.mult[i][j][k]) {
                    let mut d = data.clone();
                    d.mult[i][j][k] = v;
                    out.push(d);
                }
            }
        }
    }
    for i in 0..n {
        for idx in 0..n * n {
            for v in alternatives(&dense_comult[i][idx]) {
                let mut dense = dense_comult.clone();
                dense[i][idx] = v;
                let mut d = data.clone();
                d.comult = rebuild_comult(&dense);
                out.push(d);
            }
        }
    }
    for i in 0..n {
        for v in alternatives(&data.counit[i]) {
            let mut d = data.clone();
            d.counit[i] = v;
            out.push(d);
        }
        for v in alternatives(&data.unit[i]) {
            let mut d = data.clone();
            d.unit[i] = v;
            out.push(d);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for v in alternatives(data.antipode.get(i, j)) {
                let mut d = data.clone();
                d.antipode.set(i, j, v);
                out.push(d);
            }
        }
    }
    out
}

#[cfg(test)]
mod concurrency_tests {
    #[test]
    fn shared_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<super::HopfAlgebra>();
        assert_send_sync::<crate::rep::ModuleStructure>();
        assert_send_sync::<crate::rep::ComoduleStructure>();
        assert_send_sync::<crate::compat::Object>();
        assert_send_sync::<crate::linalg::Matrix>();
        assert_send_sync::<crate::linalg::Subspace>();
    }
}
