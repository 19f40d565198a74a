//! Structure-constant algebras and the generic constructions every other
//! module builds on: associators, opposite and commutator algebras, the
//! scalar-product family, multiplication operators, block direct sums and
//! exact span-closure checking.

use crate::error::{Error, Result};
use crate::linalg::{Echelon, LinearMap, Vector};
use crate::report::CheckReport;
use crate::scalar::{FieldSpec, Scalar};

/// A finite-dimensional algebra given by one bilinear product in structure
/// constants: `table[i][j]` holds the coordinates of `e_i * e_j`.
///
/// No axioms are assumed at construction; which identities hold is always a
/// separate check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<Vec<Vector>>,
    labels: Option<Vec<String>>,
}

impl Algebra {
    pub fn new(field: FieldSpec, table: Vec<Vec<Vector>>) -> Result<Self> {
        let dim = table.len();
        for row in &table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "product table is {}x{}, expected {dim}x{dim}",
                    table.len(),
                    row.len()
                )));
            }
            for v in row {
                if v.dim() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "product coordinates of length {}, expected {dim}",
                        v.dim()
                    )));
                }
                for c in v.coords() {
                    if c.field() != field {
                        return Err(Error::FieldMismatch(format!(
                            "structure constant over {}, expected {}",
                            c.field(),
                            field
                        )));
                    }
                }
            }
        }
        Ok(Algebra {
            field,
            dim,
            table,
            labels: None,
        })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Algebra {
            field,
            dim,
            table: vec![vec![Vector::zero(field, dim); dim]; dim],
            labels: None,
        }
    }

    /// Convenience constructor from an integer table; `table[i][j]` lists
    /// the coordinates of `e_i * e_j`.
    pub fn from_integer_table(field: FieldSpec, table: &[&[&[i64]]]) -> Self {
        let dim = table.len();
        let rows = table
            .iter()
            .map(|row| {
                assert_eq!(row.len(), dim);
                row.iter()
                    .map(|v| {
                        assert_eq!(v.len(), dim);
                        Vector::from_integers(field, v)
                    })
                    .collect()
            })
            .collect();
        Algebra {
            field,
            dim,
            table: rows,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} basis labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The structure-constant vector of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub(crate) fn check_vector(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in algebra of dimension {}",
                v.dim(),
                self.dim
            )));
        }
        for c in v.coords() {
            if c.field() != self.field {
                return Err(Error::FieldMismatch(format!(
                    "vector over {}, algebra over {}",
                    c.field(),
                    self.field
                )));
            }
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.mul_vec(x, y))
    }

    pub(crate) fn mul_vec(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.field, self.dim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), &self.table[i][j]);
            }
        }
        out
    }

    /// `(x*y)*z - x*(y*z)`, the defect of associativity.
    pub fn associator(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        self.check_vector(z)?;
        Ok(self.assoc_vec(x, y, z))
    }

    pub(crate) fn assoc_vec(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let left = self.mul_vec(&self.mul_vec(x, y), z);
        let right = self.mul_vec(x, &self.mul_vec(y, z));
        left.sub(&right)
    }

    /// The algebra with the arguments of the product swapped.
    pub fn opposite(&self) -> Algebra {
        let table = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.table[j][i].clone()).collect())
            .collect();
        Algebra {
            field: self.field,
            dim: self.dim,
            table,
            labels: self.labels.clone(),
        }
    }

    /// The commutator bracket `[x, y] = x*y - y*x` as its own algebra.
    pub fn commutator_algebra(&self) -> Algebra {
        let table = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.table[i][j].sub(&self.table[j][i]))
                    .collect()
            })
            .collect();
        Algebra {
            field: self.field,
            dim: self.dim,
            table,
            labels: self.labels.clone(),
        }
    }

    /// Entrywise sum of two products on the same space.
    pub fn tensor_add(&self, rhs: &Algebra) -> Algebra {
        assert_eq!(self.dim, rhs.dim);
        assert_eq!(self.field, rhs.field);
        let table = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.table[i][j].add(&rhs.table[i][j]))
                    .collect()
            })
            .collect();
        Algebra {
            field: self.field,
            dim: self.dim,
            table,
            labels: None,
        }
    }

    /// Entrywise scaling of the product.
    pub fn tensor_scale(&self, c: &Scalar) -> Algebra {
        let table = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.table[i][j].scale(c)).collect())
            .collect();
        Algebra {
            field: self.field,
            dim: self.dim,
            table,
            labels: None,
        }
    }

    /// Matrix of `y -> x*y`.
    pub fn left_mult(&self, x: &Vector) -> Result<LinearMap> {
        self.check_vector(x)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul_vec(x, &Vector::basis(self.field, self.dim, j)))
            .collect();
        Ok(LinearMap::from_columns(self.field, self.dim, &cols))
    }

    /// Matrix of `y -> y*x`.
    pub fn right_mult(&self, x: &Vector) -> Result<LinearMap> {
        self.check_vector(x)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul_vec(&Vector::basis(self.field, self.dim, j), x))
            .collect();
        Ok(LinearMap::from_columns(self.field, self.dim, &cols))
    }
}

/// Which argument the linear functional scales in the scalar-product family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionalSide {
    /// `x*y = <x,c><y,c>c + L(x) y`
    Left,
    /// `x*y = <x,c><y,c>c + L(y) x`
    Right,
}

/// The scalar-product family of algebras on a based space: a bilinear form,
/// a fixed vector `c`, and a linear functional `L` (given by its coefficient
/// vector) with `L(c) = 0`.
pub fn scalar_product_algebra(
    form: &BilinearForm,
    c: &Vector,
    functional: &Vector,
    side: FunctionalSide,
) -> Result<Algebra> {
    let field = form.field();
    let dim = form.dim();
    if c.dim() != dim || functional.dim() != dim {
        return Err(Error::DimensionMismatch(format!(
            "form of dimension {dim} with c of length {} and functional of length {}",
            c.dim(),
            functional.dim()
        )));
    }
    let eval_l = |x: &Vector| -> Scalar {
        let mut acc = field.zero();
        for (li, xi) in functional.coords().iter().zip(x.coords()) {
            acc = &acc + &(li * xi);
        }
        acc
    };
    if !eval_l(c).is_zero() {
        return Err(Error::ConstraintViolated(
            "the functional must vanish on c".to_string(),
        ));
    }
    let mut table = vec![vec![Vector::zero(field, dim); dim]; dim];
    for i in 0..dim {
        let ei = Vector::basis(field, dim, i);
        let ci = form.eval(&ei, c)?;
        let li = eval_l(&ei);
        for j in 0..dim {
            let ej = Vector::basis(field, dim, j);
            let cj = form.eval(&ej, c)?;
            let mut prod = c.scale(&(&ci * &cj));
            match side {
                FunctionalSide::Left => prod.add_scaled(&li, &ej),
                FunctionalSide::Right => prod.add_scaled(&eval_l(&ej), &ei),
            }
            table[i][j] = prod;
        }
    }
    Algebra::new(field, table)
}

/// A bilinear form in matrix coordinates: `omega[i][j] = w(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    field: FieldSpec,
    dim: usize,
    omega: Vec<Vec<Scalar>>,
}

impl BilinearForm {
    pub fn new(field: FieldSpec, omega: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = omega.len();
        for row in &omega {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(
                    "bilinear form matrix is not square".to_string(),
                ));
            }
            for c in row {
                if c.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "form entry over {}, expected {}",
                        c.field(),
                        field
                    )));
                }
            }
        }
        Ok(BilinearForm { field, dim, omega })
    }

    pub fn from_integers(field: FieldSpec, omega: &[&[i64]]) -> Self {
        let rows = omega
            .iter()
            .map(|r| r.iter().map(|&n| Scalar::from_integer(field, n)).collect())
            .collect();
        Self::new(field, rows).expect("rectangular integer form")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.omega[i][j]
    }

    pub fn eval(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "form of dimension {} applied to vectors of length {} and {}",
                self.dim,
                x.dim(),
                y.dim()
            )));
        }
        let mut acc = self.field.zero();
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc = &acc + &(&(xi * yj) * &self.omega[i][j]);
            }
        }
        Ok(acc)
    }

    pub fn is_skew(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !(&self.omega[i][j] + &self.omega[j][i]).is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn matrix(&self) -> LinearMap {
        LinearMap::new(self.field, self.omega.clone()).expect("validated at construction")
    }
}

/// Offsets of consecutive blocks inside a concatenated coordinate space.
#[derive(Debug, Clone)]
pub struct BlockLayout {
    field: FieldSpec,
    dims: Vec<usize>,
}

impl BlockLayout {
    pub fn new(field: FieldSpec, dims: Vec<usize>) -> Self {
        BlockLayout { field, dims }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn block_dim(&self, block: usize) -> usize {
        self.dims[block]
    }

    fn offset(&self, block: usize) -> usize {
        self.dims[..block].iter().sum()
    }

    /// Places `v` into `block`, zero elsewhere.
    pub fn embed(&self, block: usize, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dims[block] {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} into block of dimension {}",
                v.dim(),
                self.dims[block]
            )));
        }
        let mut out = Vector::zero(self.field, self.total_dim());
        let off = self.offset(block);
        for (k, c) in v.coords().iter().enumerate() {
            out.add_scaled(c, &Vector::basis(self.field, self.total_dim(), off + k));
        }
        Ok(out)
    }

    /// Reads `block` out of an ambient vector.
    pub fn project(&self, block: usize, v: &Vector) -> Result<Vector> {
        if v.dim() != self.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "ambient vector of length {}, layout total {}",
                v.dim(),
                self.total_dim()
            )));
        }
        let off = self.offset(block);
        Ok(v.block(off..off + self.dims[block]))
    }
}

/// Block-diagonal product algebra on the concatenation of two spaces.
pub fn direct_sum_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(format!(
            "direct sum of algebras over {} and {}",
            a.field(),
            b.field()
        )));
    }
    let field = a.field();
    let layout = BlockLayout::new(field, vec![a.dim(), b.dim()]);
    let total = layout.total_dim();
    let mut table = vec![vec![Vector::zero(field, total); total]; total];
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            table[i][j] = layout.embed(0, a.basis_product(i, j))?;
        }
    }
    for i in 0..b.dim() {
        for j in 0..b.dim() {
            table[a.dim() + i][a.dim() + j] = layout.embed(1, b.basis_product(i, j))?;
        }
    }
    Algebra::new(field, table)
}

/// Exact subspace-closure test: row-reduces the generators and verifies that
/// every pairwise product of generators lies back in their span. This is the
/// one engine behind all operator-graph characterizations.
pub fn check_span_closed(a: &Algebra, gens: &[Vector]) -> Result<CheckReport> {
    for g in gens {
        a.check_vector(g)?;
    }
    let span = Echelon::from_rows(a.dim(), gens.to_vec());
    for (i, gi) in gens.iter().enumerate() {
        for (j, gj) in gens.iter().enumerate() {
            let residual = span.reduce(&a.mul_vec(gi, gj));
            if !residual.is_zero() {
                return Ok(CheckReport::fail(
                    "span-closed",
                    "closure",
                    vec![i, j],
                    residual,
                ));
            }
        }
    }
    Ok(CheckReport::pass("span-closed"))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The two-dimensional scalar-product fixture: e1*e1 = e1, e1*e2 = 0,
    /// e2*e1 = e1, e2*e2 = e2.
    pub fn algebra_e(field: FieldSpec) -> Algebra {
        Algebra::from_integer_table(
            field,
            &[
                &[&[1, 0], &[0, 0]],
                &[&[1, 0], &[0, 1]],
            ],
        )
    }

    /// Dual numbers: e1 is the unit, e2 squares to zero.
    pub fn dual_numbers(field: FieldSpec) -> Algebra {
        Algebra::from_integer_table(
            field,
            &[
                &[&[1, 0], &[0, 1]],
                &[&[0, 1], &[0, 0]],
            ],
        )
    }

    /// The nilpotent operator e1 -> e2, e2 -> 0.
    pub fn nilpotent_shift(field: FieldSpec) -> LinearMap {
        LinearMap::from_integers(field, &[&[0, 0], &[1, 0]])
    }
}
