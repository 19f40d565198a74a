//! Exact vectors, matrices and Gaussian elimination.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A coordinate vector in a based space. The length is the dimension of the
/// space it lives in; every operation checks lengths agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Vector {
            coords: vec![field.zero(); dim],
        }
    }

    /// The i-th standard basis vector.
    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        assert!(i < dim);
        let mut v = Self::zero(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn from_integers(field: FieldSpec, entries: &[i64]) -> Self {
        Vector {
            coords: entries
                .iter()
                .map(|&n| Scalar::from_integer(field, n))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector addition across dimensions");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector subtraction across dimensions");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| c * a).collect(),
        }
    }

    /// In-place `self += c * rhs`, the elimination kernel.
    pub fn add_scaled(&mut self, c: &Scalar, rhs: &Vector) {
        assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a = &*a + &(c * b);
        }
    }

    /// Concatenates two blocks, first block first.
    pub fn concat(&self, rhs: &Vector) -> Vector {
        let mut coords = self.coords.clone();
        coords.extend(rhs.coords.iter().cloned());
        Vector { coords }
    }

    /// Extracts `range` as its own vector.
    pub fn block(&self, range: std::ops::Range<usize>) -> Vector {
        Vector {
            coords: self.coords[range].to_vec(),
        }
    }

    pub fn render(&self) -> Vec<String> {
        self.coords.iter().map(Scalar::render).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }
}

/// An exact matrix between based spaces; column j is the image of the j-th
/// basis vector of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Scalar>>, // row-major
}

impl LinearMap {
    pub fn new(field: FieldSpec, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        for row in &entries {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(
                    "ragged matrix rows".to_string(),
                ));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "matrix entry over {}, expected {}",
                        e.field(),
                        field
                    )));
                }
            }
        }
        Ok(LinearMap {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        LinearMap {
            field,
            rows,
            cols,
            entries: vec![vec![field.zero(); cols]; rows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.entries[i][i] = field.one();
        }
        m
    }

    pub fn from_integers(field: FieldSpec, entries: &[&[i64]]) -> Self {
        let rows = entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&n| Scalar::from_integer(field, n))
                    .collect()
            })
            .collect();
        Self::new(field, rows).expect("rectangular integer matrix")
    }

    /// Builds the matrix whose j-th column is `columns[j]`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zero(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), rows);
            for i in 0..rows {
                m.entries[i][j] = col[i].clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        self.entries[i][j] = value;
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.entries[i][j].clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "matrix-vector dimension mismatch");
        let mut out = Vector::zero(self.field, self.rows);
        for (j, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                for i in 0..self.rows {
                    out.coords[i] = &out.coords[i] + &(c * &self.entries[i][j]);
                }
            }
        }
        out
    }

    pub fn compose(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        assert_eq!(self.field, rhs.field);
        let mut out = Self::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    acc = &acc + &(&self.entries[i][k] * &rhs.entries[k][j]);
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, rhs: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, rhs: &LinearMap) -> LinearMap {
        self.add(&rhs.scale(&Scalar::from_integer(self.field, -1)))
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|a| c * a).collect())
            .collect();
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn transpose(&self) -> LinearMap {
        let mut out = Self::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j][i] = self.entries[i][j].clone();
            }
        }
        out
    }

    /// k-th matrix power of a square map; `pow(0)` is the identity.
    pub fn pow(&self, k: u32) -> LinearMap {
        assert!(self.is_square());
        let mut out = Self::identity(self.field, self.rows);
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// Assembles `[[a, b], [c, d]]` from blocks with matching shapes.
    pub fn from_blocks(a: &LinearMap, b: &LinearMap, c: &LinearMap, d: &LinearMap) -> LinearMap {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let field = a.field;
        let mut out = Self::zero(field, a.rows + c.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.entries[i][j] = a.entries[i][j].clone();
            }
            for j in 0..b.cols {
                out.entries[i][a.cols + j] = b.entries[i][j].clone();
            }
        }
        for i in 0..c.rows {
            for j in 0..c.cols {
                out.entries[a.rows + i][j] = c.entries[i][j].clone();
            }
            for j in 0..d.cols {
                out.entries[a.rows + i][a.cols + j] = d.entries[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Scalar::is_zero)
    }

    /// Exact determinant by Gaussian elimination with first-nonzero pivoting.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut det = self.field.one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else {
                return self.field.zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -&det;
            }
            let inv = m[col][col].inverse().expect("nonzero pivot");
            det = &det * &m[col][col];
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &(-&m[r][col]) * &inv;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] = &m[r][c] + &delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination; `SingularForm` if the rank
    /// is deficient.
    pub fn inverse(&self) -> Result<LinearMap> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut inv = Self::identity(self.field, n).entries;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::SingularForm)?;
            m.swap(pivot, col);
            inv.swap(pivot, col);
            let scale = m[col][col].inverse().expect("nonzero pivot");
            for c in 0..n {
                m[col][c] = &m[col][c] * &scale;
                inv[col][c] = &inv[col][c] * &scale;
            }
            for r in 0..n {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let factor = -&m[r][col];
                for c in 0..n {
                    let dm = &factor * &m[col][c];
                    m[r][c] = &m[r][c] + &dm;
                    let di = &factor * &inv[col][c];
                    inv[r][c] = &inv[r][c] + &di;
                }
            }
        }
        Ok(LinearMap {
            field: self.field,
            rows: n,
            cols: n,
            entries: inv,
        })
    }

    /// A nonzero kernel vector in deterministic form, if one exists: the
    /// first free column of the reduced echelon form, back-substituted.
    pub fn kernel_vector(&self) -> Option<Vector> {
        let rref = Echelon::from_rows(
            self.cols,
            (0..self.rows).map(|i| Vector::new(self.entries[i].clone())).collect(),
        );
        let pivots = &rref.pivot_cols;
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = Vector::zero(self.field, self.cols);
        v.coords[free] = self.field.one();
        // each pivot row reads: x_pivot + sum(coeff * x_free) = 0
        for (row, &pc) in rref.rows.iter().zip(pivots) {
            v.coords[pc] = -&row[free];
        }
        Some(v)
    }
}

/// A row-echelon basis of a subspace, with exact membership reduction.
///
/// Elimination pivots on the first nonzero entry of the lowest-index row,
/// so the result is deterministic for a given generator order.
#[derive(Debug, Clone)]
pub struct Echelon {
    ambient_dim: usize,
    rows: Vec<Vector>,      // reduced echelon rows, pivots normalized to 1
    pivot_cols: Vec<usize>, // pivot column of each row, strictly increasing
}

impl Echelon {
    pub fn from_rows(ambient_dim: usize, gens: Vec<Vector>) -> Self {
        let mut basis = Echelon {
            ambient_dim,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        };
        for g in gens {
            basis.insert(g);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the residual is zero exactly when `v`
    /// lies in the span.
    pub fn reduce(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.ambient_dim);
        let mut v = v.clone();
        for (row, &pc) in self.rows.iter().zip(&self.pivot_cols) {
            if !v[pc].is_zero() {
                let factor = -&v[pc];
                v.add_scaled(&factor, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    fn insert(&mut self, v: Vector) {
        let mut v = self.reduce(&v);
        let Some(pc) = v.coords().iter().position(|c| !c.is_zero()) else {
            return;
        };
        let inv = v[pc].inverse().expect("nonzero leading entry");
        v = v.scale(&inv);
        // keep earlier rows reduced against the new pivot
        for row in &mut self.rows {
            if !row[pc].is_zero() {
                let factor = -&row[pc];
                row.add_scaled(&factor, &v);
            }
        }
        let at = self.pivot_cols.partition_point(|&c| c < pc);
        self.rows.insert(at, v);
        self.pivot_cols.insert(at, pc);
    }
}
