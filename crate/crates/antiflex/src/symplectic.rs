//! Cyclic bilinear forms and the pre-Lie product they induce.

use crate::algebra::{Algebra, BilinearForm};
use crate::error::{Error, Result};
use crate::identities::{check_identity, AlgebraIdentity};
use crate::linalg::Vector;
use crate::report::CheckReport;

fn validate(a: &Algebra, w: &BilinearForm) -> Result<()> {
    if w.dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "form of dimension {} on algebra of dimension {}",
            w.dim(),
            a.dim()
        )));
    }
    if w.field() != a.field() {
        return Err(Error::FieldMismatch(format!(
            "form over {}, algebra over {}",
            w.field(),
            a.field()
        )));
    }
    Ok(())
}

/// A cyclic form must be skew, nondegenerate, and sum to zero over the
/// cyclic rotations of `w(ab, c)`. The report names the clause that failed:
/// `skew` carries the offending matrix pair, `nondegenerate` carries a
/// kernel vector, `cyclic` carries the first failing basis triple.
pub fn check_cyclic_form(a: &Algebra, w: &BilinearForm) -> Result<CheckReport> {
    validate(a, w)?;
    if let Some((i, j)) = w.is_skew() {
        let residual = Vector::new(vec![w.entry(i, j) + w.entry(j, i)]);
        return Ok(CheckReport::fail("cyclic-form", "skew", vec![i, j], residual));
    }
    if let Some(kernel) = w.matrix().kernel_vector() {
        return Ok(CheckReport::fail("cyclic-form", "nondegenerate", vec![], kernel));
    }
    let field = a.field();
    let n = a.dim();
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(field, n, i)).collect();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            for (k, z) in basis.iter().enumerate() {
                let mut acc = w.eval(a.basis_product(i, j), z)?;
                acc = &acc + &w.eval(a.basis_product(j, k), x)?;
                acc = &acc + &w.eval(a.basis_product(k, i), y)?;
                if !acc.is_zero() {
                    return Ok(CheckReport::fail(
                        "cyclic-form",
                        "cyclic",
                        vec![i, j, k],
                        Vector::new(vec![acc]),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass("cyclic-form"))
}

/// The product defined implicitly by `w(a o b, c) = w(b, [c, a])`, solved
/// exactly against the form matrix, one linear solve per basis pair with a
/// single inverse shared across all of them.
///
/// Requires the ambient algebra to pass the anti-flexible check along with
/// the cyclic-form check; `pre_lie_from_symplectic_relaxed` drops the
/// ambient requirement.
pub fn pre_lie_from_symplectic(a: &Algebra, w: &BilinearForm) -> Result<Algebra> {
    solve_pre_lie(a, w, true)
}

/// Same construction without insisting that the ambient algebra be
/// anti-flexible.
pub fn pre_lie_from_symplectic_relaxed(a: &Algebra, w: &BilinearForm) -> Result<Algebra> {
    solve_pre_lie(a, w, false)
}

fn solve_pre_lie(a: &Algebra, w: &BilinearForm, require_ambient: bool) -> Result<Algebra> {
    validate(a, w)?;
    if require_ambient && !check_identity(a, AlgebraIdentity::AntiFlexible).pass {
        return Err(Error::PreconditionFailed(
            "ambient algebra fails the anti-flexible check".to_string(),
        ));
    }
    if !check_cyclic_form(a, w)?.pass {
        return Err(Error::PreconditionFailed(
            "form fails the cyclic-form check".to_string(),
        ));
    }
    let field = a.field();
    let n = a.dim();
    let bracket = a.commutator_algebra();
    // w(v, e_k) = (M v)_k with M the transpose of the form matrix; the
    // cyclic-form check guarantees M is invertible
    let inverse = w.matrix().transpose().inverse()?;
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(field, n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            let mut rhs = Vector::zero(field, n);
            for ek in &basis {
                let value = w.eval(&basis[j], &bracket.mul_vec(ek, &basis[i]))?;
                rhs.add_scaled(&value, ek);
            }
            table[i][j] = inverse.apply(&rhs);
        }
    }
    Algebra::new(field, table)
}
