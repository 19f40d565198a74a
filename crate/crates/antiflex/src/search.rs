//! Exhaustive enumeration of structure-constant tensors and operator
//! matrices over prime fields.
//!
//! Candidates stream in lexicographic order of their flattened digit string,
//! each checked with early exit at the first failing basis tuple. The space
//! is statically partitioned into contiguous index ranges, so the merged
//! output is byte-identical for any worker count.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::identities::{check_identity, AlgebraIdentity};
use crate::linalg::{LinearMap, Vector};
use crate::nijenhuis::check_nijenhuis;
use crate::omod::{check_o_operator, Bimodule, ModuleOperator};
use crate::rota::{check_rota_baxter, WeightedOperator};
use crate::scalar::{FieldSpec, Scalar};

/// Default cap on candidate counts.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Hits in stream order plus the size of the scanned space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub hits: Vec<T>,
    pub scanned: u128,
}

/// Which operator identity to filter matrices by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorKind {
    RotaBaxter(Scalar),
    Nijenhuis,
}

fn prime_of(field: FieldSpec) -> Result<u64> {
    match field {
        FieldSpec::PrimeField { p } => Ok(p),
        FieldSpec::Rationals => Err(Error::ConstraintViolated(
            "enumeration needs a prime field".to_string(),
        )),
    }
}

fn space_size(p: u64, slots: u32, budget: u128) -> Result<u128> {
    let size = (p as u128)
        .checked_pow(slots)
        .ok_or(Error::SearchSpaceTooLarge {
            required: u128::MAX,
            budget,
        })?;
    if size > budget {
        return Err(Error::SearchSpaceTooLarge {
            required: size,
            budget,
        });
    }
    Ok(size)
}

/// Big-endian base-p digits of `index` over `len` slots.
fn digits(mut index: u128, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for slot in (0..len).rev() {
        out[slot] = (index % p as u128) as u64;
        index /= p as u128;
    }
    out
}

fn algebra_from_index(field: FieldSpec, p: u64, dim: usize, index: u128) -> Algebra {
    let ds = digits(index, p, dim * dim * dim);
    let mut table = vec![vec![Vector::zero(field, dim); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let coords = (0..dim)
                .map(|k| Scalar::from_integer(field, ds[(i * dim + j) * dim + k] as i64))
                .collect();
            table[i][j] = Vector::new(coords);
        }
    }
    Algebra::new(field, table).expect("digits are field elements")
}

fn matrix_from_index(field: FieldSpec, p: u64, rows: usize, cols: usize, index: u128) -> LinearMap {
    let ds = digits(index, p, rows * cols);
    let entries = (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| Scalar::from_integer(field, ds[r * cols + c] as i64))
                .collect()
        })
        .collect();
    LinearMap::new(field, entries).expect("digits are field elements")
}

/// Runs `test` over `[0, size)` split into `workers` contiguous ranges and
/// concatenates the per-range hits in range order.
fn partitioned_scan<T, F>(size: u128, workers: usize, test: F) -> Vec<T>
where
    T: Send,
    F: Fn(u128) -> Option<T> + Sync,
{
    let workers = workers.clamp(1, 64) as u128;
    if workers == 1 || size <= workers {
        return (0..size).filter_map(&test).collect();
    }
    let chunk = size.div_ceil(workers);
    let mut buckets: Vec<Vec<T>> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let lo = w * chunk;
            let hi = (lo + chunk).min(size);
            let test = &test;
            handles.push(scope.spawn(move || (lo..hi).filter_map(test).collect::<Vec<T>>()));
        }
        for handle in handles {
            buckets.push(handle.join().expect("scan worker panicked"));
        }
    });
    buckets.into_iter().flatten().collect()
}

/// All structure-constant tensors of the given dimension over F_p, filtered
/// by an identity when one is requested.
pub fn enumerate_algebras(
    field: FieldSpec,
    dim: usize,
    filter: Option<AlgebraIdentity>,
    budget: u128,
    workers: usize,
) -> Result<SearchOutcome<Algebra>> {
    let p = prime_of(field)?;
    let slots = u32::try_from(dim * dim * dim).map_err(|_| Error::SearchSpaceTooLarge {
        required: u128::MAX,
        budget,
    })?;
    let size = space_size(p, slots, budget)?;
    let hits = partitioned_scan(size, workers, |index| {
        let candidate = algebra_from_index(field, p, dim, index);
        match filter {
            Some(identity) if !check_identity(&candidate, identity).pass => None,
            _ => Some(candidate),
        }
    });
    Ok(SearchOutcome {
        hits,
        scanned: size,
    })
}

/// All square matrices on the algebra's space passing the requested
/// operator identity.
pub fn enumerate_operators(
    a: &Algebra,
    kind: &OperatorKind,
    budget: u128,
    workers: usize,
) -> Result<SearchOutcome<LinearMap>> {
    let p = prime_of(a.field())?;
    let n = a.dim();
    let slots = u32::try_from(n * n).expect("desk-scale dimensions");
    let size = space_size(p, slots, budget)?;
    let field = a.field();
    let hits = partitioned_scan(size, workers, |index| {
        let candidate = matrix_from_index(field, p, n, n, index);
        let pass = match kind {
            OperatorKind::RotaBaxter(weight) => {
                let op = WeightedOperator::new(candidate.clone(), weight.clone())
                    .expect("square candidate");
                check_rota_baxter(a, &op).expect("validated candidate").pass
            }
            OperatorKind::Nijenhuis => {
                check_nijenhuis(a, &candidate).expect("validated candidate").pass
            }
        };
        pass.then_some(candidate)
    });
    Ok(SearchOutcome {
        hits,
        scanned: size,
    })
}

/// All module-to-algebra matrices passing the module operator identity.
pub fn enumerate_o_operators(
    b: &Bimodule,
    budget: u128,
    workers: usize,
) -> Result<SearchOutcome<ModuleOperator>> {
    let p = prime_of(b.algebra().field())?;
    let rows = b.algebra().dim();
    let cols = b.moddim();
    let slots = u32::try_from(rows * cols).expect("desk-scale dimensions");
    let size = space_size(p, slots, budget)?;
    let field = b.algebra().field();
    let hits = partitioned_scan(size, workers, |index| {
        let candidate = ModuleOperator::new(matrix_from_index(field, p, rows, cols, index));
        check_o_operator(b, &candidate)
            .expect("validated candidate")
            .pass
            .then_some(candidate)
    });
    Ok(SearchOutcome {
        hits,
        scanned: size,
    })
}
