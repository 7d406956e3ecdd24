use super::matrix::{vec_is_zero, Matrix, Vector};
use super::scalar::{Field, Scalar};

/// Incrementally maintained reduced echelon basis.
///
/// Rows are kept fully reduced (Gauss-Jordan, leftmost pivots, pivot entries
/// normalized to 1, pivots cleared above and below) and sorted by pivot
/// column, so the basis of a given span is unique. That canonical form is
/// what makes subspace equality a plain `==`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: Field, ambient: usize) -> EchelonBasis {
        EchelonBasis { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Reduce `v` modulo the current span, in place.
    pub fn reduce(&self, v: &mut Vector) {
        let f = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
    }

    /// Insert a vector; returns `true` when the span grew.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let f = self.field;
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("leading entry is nonzero");
        for x in v.iter_mut() {
            *x = f.mul(&inv, x);
        }
        // clear the new pivot column in the existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        vec_is_zero(&w)
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { field: self.field, ambient: self.ambient, basis: self.rows, pivots: self.pivots }
    }
}

/// A linear subspace in canonical reduced-echelon coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        EchelonBasis::new(field, ambient).into_subspace()
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let mut b = EchelonBasis::new(field, ambient);
        for i in 0..ambient {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            b.insert(v);
        }
        b.into_subspace()
    }

    pub fn from_spanning(field: Field, ambient: usize, vectors: &[Vector]) -> Subspace {
        let mut b = EchelonBasis::new(field, ambient);
        for v in vectors {
            b.insert(v.clone());
        }
        b.into_subspace()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.to_echelon().contains(v)
    }

    pub fn to_echelon(&self) -> EchelonBasis {
        EchelonBasis {
            field: self.field,
            ambient: self.ambient,
            rows: self.basis.clone(),
            pivots: self.pivots.clone(),
        }
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    /// Because the basis is reduced with unit pivots, the coordinates are the
    /// entries of `v` at the pivot columns.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Map subspace coordinates back to ambient coordinates.
    pub fn embed(&self, coords: &[Scalar]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let f = self.field;
        let mut out = vec![f.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                for (x, y) in out.iter_mut().zip(row) {
                    *x = f.add(x, &f.mul(c, y));
                }
            }
        }
        out
    }

    /// Basis vectors as the rows of a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.basis.clone())
    }

    /// Rewrite an ambient operator that preserves this subspace in subspace
    /// coordinates; `None` if the subspace is not invariant.
    pub fn restrict_operator(&self, op: &Matrix) -> Option<Matrix> {
        let d = self.dim();
        let mut out = Matrix::zeros(self.field, d, d);
        for (j, b) in self.basis.iter().enumerate() {
            let img = op.apply(b);
            let coords = self.coords_of(&img)?;
            out.set_col(j, &coords);
        }
        Some(out)
    }

    /// Canonical serialized form, one basis row per line.
    pub fn render(&self) -> String {
        let f = self.field;
        self.basis
            .iter()
            .map(|row| {
                row.iter().map(|x| f.render(x)).collect::<Vec<_>>().join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}
