use super::scalar::{Field, Scalar};
use super::subspace::{EchelonBasis, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Dimensions at desk scale do not justify sparse storage; every operation is
/// a straightforward loop over entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

pub type Vector = Vec<Scalar>;

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(field: Field, a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

pub fn vec_sub(field: Field, a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| field.sub(x, y)).collect()
}

pub fn vec_scale(field: Field, c: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| field.mul(c, x)).collect()
}

/// `a += c * b`, in place.
pub fn vec_add_scaled(field: Field, a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x = field.add(x, &field.mul(c, y));
    }
}

pub fn vec_dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        acc = field.add(&acc, &field.mul(x, y));
    }
    acc
}

/// Kronecker product of coordinate vectors: index `(i, j) -> i * b.len() + j`.
pub fn vec_kron(field: Field, a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(field.mul(x, y));
        }
    }
    out
}

/// Outcome of an affine solve `A x = b`.
pub enum AffineOutcome {
    Solution {
        particular: Vector,
        homogeneous: Subspace,
    },
    /// Fredholm witness: a row combination `y` with `y^T A = 0`, `y^T b != 0`.
    Inconsistent(Vector),
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vector>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        for v in &rows {
            assert_eq!(v.len(), c, "ragged rows");
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(c, self.get(i, j))
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), &f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() {
                    out[i] = f.add(&out[i], &f.mul(a, &v[k]));
                }
            }
        }
        out
    }

    /// Kronecker product; block `(i, j)` is `self[i][j] * other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        Matrix::from_fn(
            f,
            self.rows * other.rows,
            self.cols * other.cols,
            |i, j| {
                let (ia, ib) = (i / other.rows, i % other.rows);
                let (ja, jb) = (j / other.cols, j % other.cols);
                f.mul(self.get(ia, ja), other.get(ib, jb))
            },
        )
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = self.field.add(&acc, self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    /// Row-major flattening, `(i, j) -> i * cols + j`. Inverse of
    /// [`Matrix::from_vec_coords`].
    pub fn to_vec_coords(&self) -> Vector {
        self.entries.clone()
    }

    pub fn from_vec_coords(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix { field, rows, cols, entries: v.to_vec() }
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // first nonzero pivot in column c at or below row r
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(&inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    for j in 0..m.cols {
                        let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// The full null space `{v : A v = 0}` in canonical echelon form.
    /// A matrix with zero rows has the full ambient space as kernel.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = EchelonBasis::new(self.field, self.cols);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = self.field.neg(r.get(row, free));
            }
            basis.insert(v);
        }
        basis.into_subspace()
    }

    /// Solve `A x = b` exactly.
    pub fn solve_affine(&self, b: &[Scalar]) -> Result<AffineOutcome> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve: {} rows vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let f = self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            // Inconsistent; produce a Fredholm witness y with y^T A = 0 and
            // y^T b != 0 from the kernel of the transpose.
            let at = self.transpose();
            let left_null = at.kernel();
            for y in left_null.basis() {
                if !vec_dot(f, y, b).is_zero() {
                    return Ok(AffineOutcome::Inconsistent(y.clone()));
                }
            }
            unreachable!("inconsistent system must admit a Fredholm witness");
        }
        let mut particular = vec![f.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            particular[p] = r.get(row, self.cols).clone();
        }
        Ok(AffineOutcome::Solution {
            particular,
            homogeneous: self.kernel(),
        })
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, f.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |i, j| r.get(i, n + j).clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::scalars_from_i64;

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    fn mat(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| scalars_from_i64(field, r)).collect(),
        )
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Matrix::identity(gf(5), 3).kernel();
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_full() {
        let k = Matrix::zeros(Field::rationals(), 2, 4).kernel();
        assert_eq!(k.dim(), 4);
        // zero-row matrices keep the full-space convention
        let k0 = Matrix::zeros(gf(3), 0, 4).kernel();
        assert_eq!(k0.dim(), 4);
    }

    #[test]
    fn kernel_matches_hand_row_reduction_and_enumeration() {
        // [[1,1],[2,2]] over GF(3): rank 1, kernel spanned by (1,2).
        let f = gf(3);
        let a = mat(f, &[&[1, 1], &[2, 2]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], scalars_from_i64(f, &[1, 2]));
        // independent oracle: enumerate all 9 vectors of GF(3)^2
        let mut members = Vec::new();
        for x in 0..3i64 {
            for y in 0..3i64 {
                let v = scalars_from_i64(f, &[x, y]);
                if vec_is_zero(&a.apply(&v)) {
                    members.push(v);
                }
            }
        }
        assert_eq!(members.len(), 3); // the line through (1,2), including 0
        for v in members {
            assert!(k.contains(&v));
        }
    }

    #[test]
    fn solve_identity_and_zero_cases() {
        let f = gf(7);
        let id = Matrix::identity(f, 3);
        let b = scalars_from_i64(f, &[1, 2, 3]);
        match id.solve_affine(&b).unwrap() {
            AffineOutcome::Solution { particular, homogeneous } => {
                assert_eq!(particular, b);
                assert_eq!(homogeneous.dim(), 0);
            }
            _ => panic!("identity system is consistent"),
        }
        let z = Matrix::zeros(f, 2, 2);
        let b = scalars_from_i64(f, &[1, 0]);
        match z.solve_affine(&b).unwrap() {
            AffineOutcome::Inconsistent(y) => {
                // witness checks out: y^T A = 0, y^T b != 0
                assert!(!vec_dot(f, &y, &b).is_zero());
            }
            _ => panic!("0 x = b with b != 0 is inconsistent"),
        }
    }

    #[test]
    fn solve_underdetermined_gf2() {
        // [[1,1]] x = [0] over GF(2): particular (0,0), homogeneous (1,1).
        let f = gf(2);
        let a = mat(f, &[&[1, 1]]);
        let b = scalars_from_i64(f, &[0]);
        match a.solve_affine(&b).unwrap() {
            AffineOutcome::Solution { particular, homogeneous } => {
                assert_eq!(particular, scalars_from_i64(f, &[0, 0]));
                assert_eq!(homogeneous.dim(), 1);
                assert_eq!(homogeneous.basis()[0], scalars_from_i64(f, &[1, 1]));
                // oracle: enumerate GF(2)^2
                for x in 0..2i64 {
                    for y in 0..2i64 {
                        let v = scalars_from_i64(f, &[x, y]);
                        let solves = vec_is_zero(&a.apply(&v));
                        assert_eq!(solves, homogeneous.contains(&v));
                    }
                }
            }
            _ => panic!("consistent"),
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(5);
        let a = mat(f, &[&[1, 2], &[3, 4]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
        let sing = mat(f, &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn kron_shape_and_values() {
        let f = gf(7);
        let a = mat(f, &[&[1, 2]]);
        let b = mat(f, &[&[3], &[4]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(*k.get(0, 0), f.from_i64(3));
        assert_eq!(*k.get(1, 1), f.from_i64(8 % 7));
    }
}
