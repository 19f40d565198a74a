//! Verdict engines for the algebra classes handled by the workbench, plus
//! the two-product splitting structure and its derived one-product algebras.
//!
//! Each named check is a table of formal multilinear clauses evaluated over
//! all basis tuples. Every identity here is multilinear in its vector
//! arguments (operators are fixed linear maps), so quantifying over basis
//! tuples decides the identity on the whole space.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::report::CheckReport;
use crate::scalar::{FieldSpec, Scalar};

/// A formal word in the tuple variables, with one of the ambient products at
/// each internal node.
#[derive(Debug, Clone)]
enum Term {
    Var(usize),
    Prod(usize, Box<Term>, Box<Term>),
}

fn var(i: usize) -> Term {
    Term::Var(i)
}

fn prod(which: usize, a: Term, b: Term) -> Term {
    Term::Prod(which, Box::new(a), Box::new(b))
}

struct Clause {
    label: &'static str,
    terms: Vec<(i64, Term)>,
}

/// A named conjunction of clauses of a common arity.
struct System {
    name: &'static str,
    arity: usize,
    clauses: Vec<Clause>,
}

fn eval_term(products: &[&Algebra], term: &Term, args: &[Vector]) -> Vector {
    match term {
        Term::Var(i) => args[*i].clone(),
        Term::Prod(which, a, b) => {
            let left = eval_term(products, a, args);
            let right = eval_term(products, b, args);
            products[*which].mul_vec(&left, &right)
        }
    }
}

/// Walks basis tuples in lexicographic order and returns the first failing
/// clause, if any. All products must share dimension and field.
fn check_system(products: &[&Algebra], system: &System) -> CheckReport {
    let field = products[0].field();
    let dim = products[0].dim();
    debug_assert!(products.iter().all(|p| p.dim() == dim && p.field() == field));
    let mut tuple = vec![0usize; system.arity];
    if dim == 0 {
        return CheckReport::pass(system.name);
    }
    loop {
        let args: Vec<Vector> = tuple.iter().map(|&i| Vector::basis(field, dim, i)).collect();
        for clause in &system.clauses {
            let mut acc = Vector::zero(field, dim);
            for (coeff, term) in &clause.terms {
                let value = eval_term(products, term, &args);
                acc.add_scaled(&Scalar::from_integer(field, *coeff), &value);
            }
            if !acc.is_zero() {
                return CheckReport::fail(system.name, clause.label, tuple.clone(), acc);
            }
        }
        // lexicographic odometer
        let mut pos = system.arity;
        loop {
            if pos == 0 {
                return CheckReport::pass(system.name);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < dim {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// The one-product identities the workbench can decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraIdentity {
    AntiFlexible,
    Flexible,
    Associative,
    LeftSymmetric,
    RightSymmetric,
    Antisymmetric,
    Jacobi,
    Lie,
    CyclicCondition,
}

impl AlgebraIdentity {
    pub const ALL: [AlgebraIdentity; 9] = [
        AlgebraIdentity::AntiFlexible,
        AlgebraIdentity::Flexible,
        AlgebraIdentity::Associative,
        AlgebraIdentity::LeftSymmetric,
        AlgebraIdentity::RightSymmetric,
        AlgebraIdentity::Antisymmetric,
        AlgebraIdentity::Jacobi,
        AlgebraIdentity::Lie,
        AlgebraIdentity::CyclicCondition,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraIdentity::AntiFlexible => "anti-flexible",
            AlgebraIdentity::Flexible => "flexible",
            AlgebraIdentity::Associative => "associative",
            AlgebraIdentity::LeftSymmetric => "left-symmetric",
            AlgebraIdentity::RightSymmetric => "right-symmetric",
            AlgebraIdentity::Antisymmetric => "antisymmetric",
            AlgebraIdentity::Jacobi => "jacobi",
            AlgebraIdentity::Lie => "lie",
            AlgebraIdentity::CyclicCondition => "cyclic-condition",
        }
    }
}

impl fmt::Display for AlgebraIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        AlgebraIdentity::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

// associator terms of the single product
fn assoc_terms(sign: i64, a: usize, b: usize, c: usize) -> Vec<(i64, Term)> {
    vec![
        (sign, prod(0, prod(0, var(a), var(b)), var(c))),
        (-sign, prod(0, var(a), prod(0, var(b), var(c)))),
    ]
}

fn one_product_system(which: AlgebraIdentity) -> System {
    let mut terms = Vec::new();
    let (arity, label) = match which {
        AlgebraIdentity::AntiFlexible => {
            terms.extend(assoc_terms(1, X, Y, Z));
            terms.extend(assoc_terms(-1, Z, Y, X));
            (3, "associator-center-symmetry")
        }
        AlgebraIdentity::Flexible => {
            terms.extend(assoc_terms(1, X, Y, Z));
            terms.extend(assoc_terms(1, Z, Y, X));
            (3, "associator-antisymmetry")
        }
        AlgebraIdentity::Associative => {
            terms.extend(assoc_terms(1, X, Y, Z));
            (3, "associativity")
        }
        AlgebraIdentity::LeftSymmetric => {
            terms.extend(assoc_terms(1, X, Y, Z));
            terms.extend(assoc_terms(-1, Y, X, Z));
            (3, "associator-left-symmetry")
        }
        AlgebraIdentity::RightSymmetric => {
            terms.extend(assoc_terms(1, X, Y, Z));
            terms.extend(assoc_terms(-1, X, Z, Y));
            (3, "associator-right-symmetry")
        }
        AlgebraIdentity::Antisymmetric => {
            terms.push((1, prod(0, var(X), var(Y))));
            terms.push((1, prod(0, var(Y), var(X))));
            (2, "antisymmetry")
        }
        AlgebraIdentity::Jacobi => {
            terms.push((1, prod(0, prod(0, var(X), var(Y)), var(Z))));
            terms.push((1, prod(0, prod(0, var(Y), var(Z)), var(X))));
            terms.push((1, prod(0, prod(0, var(Z), var(X)), var(Y))));
            (3, "jacobi")
        }
        AlgebraIdentity::CyclicCondition => {
            terms.push((1, prod(0, prod(0, var(X), var(Y)), var(Z))));
            terms.push((1, prod(0, var(Z), prod(0, var(Y), var(X)))));
            (3, "cyclic-sum")
        }
        AlgebraIdentity::Lie => unreachable!("composite check"),
    };
    System {
        name: which.name(),
        arity,
        clauses: vec![Clause { label, terms }],
    }
}

/// Decides the named identity by brute force over basis tuples.
pub fn check_identity(a: &Algebra, which: AlgebraIdentity) -> CheckReport {
    match which {
        AlgebraIdentity::Lie => {
            let anti = check_system(&[a], &one_product_system(AlgebraIdentity::Antisymmetric));
            if !anti.pass {
                let w = anti.witness.unwrap();
                return CheckReport::fail("lie", w.clause, w.indices, w.discrepancy);
            }
            let jac = check_system(&[a], &one_product_system(AlgebraIdentity::Jacobi));
            if !jac.pass {
                let w = jac.witness.unwrap();
                return CheckReport::fail("lie", w.clause, w.indices, w.discrepancy);
            }
            CheckReport::pass("lie")
        }
        _ => check_system(&[a], &one_product_system(which)),
    }
}

/// A two-product splitting structure: one space carrying `prec` and `succ`
/// tensors over a common field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreAntiFlexible {
    prec: Algebra,
    succ: Algebra,
}

impl PreAntiFlexible {
    pub fn new(prec: Algebra, succ: Algebra) -> Result<Self> {
        if prec.dim() != succ.dim() {
            return Err(Error::DimensionMismatch(format!(
                "prec of dimension {} with succ of dimension {}",
                prec.dim(),
                succ.dim()
            )));
        }
        if prec.field() != succ.field() {
            return Err(Error::FieldMismatch(format!(
                "prec over {}, succ over {}",
                prec.field(),
                succ.field()
            )));
        }
        Ok(PreAntiFlexible { prec, succ })
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        PreAntiFlexible {
            prec: Algebra::zero(field, dim),
            succ: Algebra::zero(field, dim),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.prec.field()
    }

    pub fn dim(&self) -> usize {
        self.prec.dim()
    }

    pub fn prec(&self) -> &Algebra {
        &self.prec
    }

    pub fn succ(&self) -> &Algebra {
        &self.succ
    }
}

const PREC: usize = 0;
const SUCC: usize = 1;

/// The two axioms of the splitting structure: the sum of the products must
/// recombine to an anti-flexible algebra.
pub fn check_pre_anti_flexible(p: &PreAntiFlexible) -> CheckReport {
    let system = System {
        name: "pre-anti-flexible",
        arity: 3,
        clauses: vec![
            Clause {
                label: "axiom-1",
                terms: vec![
                    (1, prod(PREC, prod(SUCC, var(X), var(Y)), var(Z))),
                    (-1, prod(SUCC, var(X), prod(PREC, var(Y), var(Z)))),
                    (-1, prod(PREC, prod(SUCC, var(Z), var(Y)), var(X))),
                    (1, prod(SUCC, var(Z), prod(PREC, var(Y), var(X)))),
                ],
            },
            Clause {
                label: "axiom-2",
                terms: vec![
                    (1, prod(SUCC, prod(SUCC, var(X), var(Y)), var(Z))),
                    (1, prod(SUCC, prod(PREC, var(X), var(Y)), var(Z))),
                    (-1, prod(SUCC, var(X), prod(SUCC, var(Y), var(Z)))),
                    (-1, prod(PREC, prod(PREC, var(Z), var(Y)), var(X))),
                    (1, prod(PREC, var(Z), prod(PREC, var(Y), var(X)))),
                    (1, prod(PREC, var(Z), prod(SUCC, var(Y), var(X)))),
                ],
            },
        ],
    };
    check_system(&[p.prec(), p.succ()], &system)
}

/// The three dendriform axioms: both sides of each splitting axiom vanish
/// separately. Dendriform pairs are exactly the splitting pairs whose
/// defects are zero clause by clause.
pub fn check_dendriform(p: &PreAntiFlexible) -> CheckReport {
    let system = System {
        name: "dendriform",
        arity: 3,
        clauses: vec![
            Clause {
                label: "axiom-1",
                terms: vec![
                    (1, prod(PREC, prod(PREC, var(X), var(Y)), var(Z))),
                    (-1, prod(PREC, var(X), prod(PREC, var(Y), var(Z)))),
                    (-1, prod(PREC, var(X), prod(SUCC, var(Y), var(Z)))),
                ],
            },
            Clause {
                label: "axiom-2",
                terms: vec![
                    (1, prod(PREC, prod(SUCC, var(X), var(Y)), var(Z))),
                    (-1, prod(SUCC, var(X), prod(PREC, var(Y), var(Z)))),
                ],
            },
            Clause {
                label: "axiom-3",
                terms: vec![
                    (1, prod(SUCC, prod(PREC, var(X), var(Y)), var(Z))),
                    (1, prod(SUCC, prod(SUCC, var(X), var(Y)), var(Z))),
                    (-1, prod(SUCC, var(X), prod(SUCC, var(Y), var(Z)))),
                ],
            },
        ],
    };
    check_system(&[p.prec(), p.succ()], &system)
}

/// The recombined one-product algebra `x*y = x<y + x>y`.
pub fn sum_algebra(p: &PreAntiFlexible) -> Algebra {
    p.prec().tensor_add(p.succ())
}

/// `x <| y = x>y - y<x`, left-symmetric whenever the pair satisfies the
/// splitting axioms.
pub fn left_sym_from_pre(p: &PreAntiFlexible) -> Algebra {
    let field = p.field();
    let dim = p.dim();
    let mut table = vec![vec![Vector::zero(field, dim); dim]; dim];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = p.succ().basis_product(i, j).sub(p.prec().basis_product(j, i));
        }
    }
    Algebra::new(field, table).expect("well-shaped by construction")
}

/// `x |> y = x<y - y>x`, right-symmetric whenever the pair satisfies the
/// splitting axioms.
pub fn right_sym_from_pre(p: &PreAntiFlexible) -> Algebra {
    let field = p.field();
    let dim = p.dim();
    let mut table = vec![vec![Vector::zero(field, dim); dim]; dim];
    for (i, row) in table.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = p.prec().basis_product(i, j).sub(p.succ().basis_product(j, i));
        }
    }
    Algebra::new(field, table).expect("well-shaped by construction")
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The splitting pair induced on the dual numbers by the nilpotent
    /// shift: e1<e1 = e1>e1 = e2, everything else zero.
    pub fn pair_d(field: FieldSpec) -> PreAntiFlexible {
        let t = Algebra::from_integer_table(
            field,
            &[
                &[&[0, 1], &[0, 0]],
                &[&[0, 0], &[0, 0]],
            ],
        );
        PreAntiFlexible::new(t.clone(), t).unwrap()
    }
}
