//! Command-line surface: identity checks, operator checks, derived
//! constructions, exhaustive searches, and the fixture demo.
//!
//! Reports go to stdout as canonical JSON. Exit codes: 0 all pass, 1 a
//! check failed (witness included in the report), 2 usage or format error,
//! 3 search space over budget. Default output carries no timestamps;
//! `--timing` opts in.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{check_span_closed, Algebra};
use crate::error::{Error, Result};
use crate::identities::{
    check_dendriform, check_identity, check_pre_anti_flexible, left_sym_from_pre, sum_algebra,
    AlgebraIdentity,
};
use crate::json::{
    algebra_to_json, algebra_to_value, bimodule_to_json, linear_map_to_json, linear_map_to_value,
    pair_to_json, parse_algebra, parse_bilinear_form, parse_bimodule, parse_linear_map,
    report_to_value, to_canonical_string, weighted_operator_to_value,
};
use crate::nijenhuis::{
    check_nijenhuis, check_nj_condition, lie_double_with_complex_structure, nj_induced_product,
    nj_left_symmetric, nj_pre_anti_flexible, nj_rb_bridge,
};
use crate::omod::{
    check_bimodule, check_o_operator, dual_bimodule, extended_bimodule, lift_nijenhuis_from_o,
    lift_rb_from_o, o_graph_check, o_induced_module_algebra, o_left_symmetric,
    o_pre_anti_flexible, o_right_symmetric, semidirect_product, Bimodule, LiftVariant,
    ModuleOperator,
};
use crate::rota::{
    check_rb_morphism, check_rota_baxter, rb_associator_expansion, rb_graph_algebra,
    rb_induced_product, rb_left_symmetric, rb_pre_anti_flexible, rb_right_symmetric,
    WeightedOperator,
};
use crate::scalar::{FieldSpec, Scalar};
use crate::search::{
    enumerate_algebras, enumerate_o_operators, enumerate_operators, OperatorKind, DEFAULT_BUDGET,
};
use crate::symplectic::{
    check_cyclic_form, pre_lie_from_symplectic, pre_lie_from_symplectic_relaxed,
};

#[derive(Debug, Parser)]
#[command(name = "antiflex", version, about = "Exact workbench for anti-flexible algebras and their operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a named identity on an algebra file.
    Check {
        /// Algebra file (JSON).
        algebra: PathBuf,
        /// Identity to check, e.g. anti-flexible, associative, lie.
        #[arg(long)]
        identity: String,
    },
    /// Check an operator identity against an algebra or bimodule.
    CheckOp {
        /// Algebra file; required for rb and nijenhuis.
        algebra: Option<PathBuf>,
        #[arg(long)]
        kind: OperatorKindArg,
        /// Operator matrix file (JSON).
        #[arg(long)]
        operator: PathBuf,
        /// Weight for the rb kind, in scalar text form.
        #[arg(long, default_value = "0")]
        weight: String,
        /// Bimodule file; required for the o-operator kind.
        #[arg(long)]
        bimodule: Option<PathBuf>,
    },
    /// Materialize a derived structure and write it as JSON.
    Derive {
        /// Algebra file; required by the algebra-based constructions.
        algebra: Option<PathBuf>,
        #[arg(long)]
        construction: Construction,
        #[arg(long)]
        operator: Option<PathBuf>,
        #[arg(long, default_value = "0")]
        weight: String,
        #[arg(long)]
        bimodule: Option<PathBuf>,
        /// Bilinear form file for symplectic-prelie.
        #[arg(long)]
        form: Option<PathBuf>,
        /// Block shape for lift-nj.
        #[arg(long)]
        variant: Option<LiftVariantArg>,
        /// Skip the ambient anti-flexible requirement of symplectic-prelie.
        #[arg(long)]
        skip_ambient_check: bool,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustively enumerate algebras or operators over a prime field.
    Search {
        #[arg(long)]
        kind: SearchKindArg,
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        bimodule: Option<PathBuf>,
        /// Weight for the rb kind.
        #[arg(long, default_value = "0")]
        weight: String,
        /// Field prime for the algebra kind.
        #[arg(long)]
        p: Option<u64>,
        /// Space dimension for the algebra kind.
        #[arg(long)]
        dim: Option<usize>,
        /// Identity filter for the algebra kind.
        #[arg(long)]
        identity: Option<String>,
        /// Candidate budget; also settable via ANTIFLEX_BUDGET.
        #[arg(long)]
        budget: Option<u128>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Output file (JSON lines); stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Include elapsed milliseconds in the summary record.
        #[arg(long)]
        timing: bool,
        /// Permit the small characteristics 2 and 3 for --p.
        #[arg(long)]
        allow_small_char: bool,
    },
    /// Run every construction over the built-in fixture corpus and print a
    /// concordance report.
    Demo {
        /// Include elapsed milliseconds in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OperatorKindArg {
    Rb,
    Nijenhuis,
    OOperator,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SearchKindArg {
    Rb,
    Nijenhuis,
    OOperator,
    Algebra,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LiftVariantArg {
    Nilpotent,
    Idempotent,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Construction {
    RbProduct,
    RbPre,
    RbLsym,
    RbRsym,
    NjProduct,
    NjPre,
    NjLsym,
    NjDouble,
    OPre,
    OLsym,
    ORsym,
    Semidirect,
    DualBimodule,
    ExtendBimodule,
    LiftRb,
    LiftNj,
    SymplecticPrelie,
}

/// What a command wants the process to do: print `stdout` and exit `code`.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn report(report: &crate::report::CheckReport) -> Outcome {
        Outcome {
            stdout: to_canonical_string(&report_to_value(report)),
            code: i32::from(!report.pass),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::SearchSpaceTooLarge { .. } => 3,
        Error::PreconditionFailed(_) | Error::ConstraintViolated(_) => 1,
        _ => 2,
    }
}

pub fn error_outcome(err: &Error) -> Outcome {
    Outcome {
        stdout: to_canonical_string(&json!({ "error": err.to_string() })),
        code: exit_code(err),
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<Algebra> {
    parse_algebra(&read_file(path)?)
}

fn require<T>(value: Option<T>, what: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parse(format!("missing required input: {what}")))
}

fn resolve_budget(flag: Option<u128>) -> u128 {
    flag.or_else(|| {
        std::env::var("ANTIFLEX_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

/// Executes a parsed command. File writes happen here; the returned outcome
/// carries everything destined for stdout.
pub fn run(cli: Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(err) => error_outcome(&err),
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Check { algebra, identity } => {
            let a = load_algebra(&algebra)?;
            let which: AlgebraIdentity = identity.parse()?;
            Ok(Outcome::report(&check_identity(&a, which)))
        }
        Command::CheckOp {
            algebra,
            kind,
            operator,
            weight,
            bimodule,
        } => {
            let map = parse_linear_map(&read_file(&operator)?)?;
            match kind {
                OperatorKindArg::Rb => {
                    let a = load_algebra(&require(algebra, "algebra file")?)?;
                    let w = Scalar::parse(a.field(), &weight)?;
                    let op = WeightedOperator::new(map, w)?;
                    Ok(Outcome::report(&check_rota_baxter(&a, &op)?))
                }
                OperatorKindArg::Nijenhuis => {
                    let a = load_algebra(&require(algebra, "algebra file")?)?;
                    Ok(Outcome::report(&check_nijenhuis(&a, &map)?))
                }
                OperatorKindArg::OOperator => {
                    let b = parse_bimodule(&read_file(&require(bimodule, "--bimodule")?)?)?;
                    let t = ModuleOperator::new(map);
                    Ok(Outcome::report(&check_o_operator(&b, &t)?))
                }
            }
        }
        Command::Derive {
            algebra,
            construction,
            operator,
            weight,
            bimodule,
            form,
            variant,
            skip_ambient_check,
            output,
        } => {
            let document = derive_document(
                algebra.as_deref(),
                construction,
                operator.as_deref(),
                &weight,
                bimodule.as_deref(),
                form.as_deref(),
                variant,
                skip_ambient_check,
            )?;
            let (text, code) = document;
            match output {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Outcome {
                        stdout: String::new(),
                        code,
                    })
                }
                None => Ok(Outcome { stdout: text, code }),
            }
        }
        Command::Search {
            kind,
            algebra,
            bimodule,
            weight,
            p,
            dim,
            identity,
            budget,
            workers,
            output,
            timing,
            allow_small_char,
        } => {
            let budget = resolve_budget(budget);
            let started = Instant::now();
            let (lines, scanned) = match kind {
                SearchKindArg::Rb => {
                    let a = load_algebra(&require(algebra, "--algebra")?)?;
                    let w = Scalar::parse(a.field(), &weight)?;
                    let out =
                        enumerate_operators(&a, &OperatorKind::RotaBaxter(w), budget, workers)?;
                    let lines: Vec<Value> =
                        out.hits.iter().map(linear_map_to_value).collect();
                    (lines, out.scanned)
                }
                SearchKindArg::Nijenhuis => {
                    let a = load_algebra(&require(algebra, "--algebra")?)?;
                    let out = enumerate_operators(&a, &OperatorKind::Nijenhuis, budget, workers)?;
                    let lines: Vec<Value> =
                        out.hits.iter().map(linear_map_to_value).collect();
                    (lines, out.scanned)
                }
                SearchKindArg::OOperator => {
                    let b = parse_bimodule(&read_file(&require(bimodule, "--bimodule")?)?)?;
                    let out = enumerate_o_operators(&b, budget, workers)?;
                    let lines: Vec<Value> =
                        out.hits.iter().map(|t| linear_map_to_value(t.map())).collect();
                    (lines, out.scanned)
                }
                SearchKindArg::Algebra => {
                    let p = require(p, "--p")?;
                    if (p == 2 || p == 3) && !allow_small_char {
                        return Err(Error::Parse(format!(
                            "characteristic {p} needs --allow-small-char"
                        )));
                    }
                    let field = FieldSpec::prime(p)?;
                    let dim = require(dim, "--dim")?;
                    let filter = identity.map(|s| s.parse()).transpose()?;
                    let out = enumerate_algebras(field, dim, filter, budget, workers)?;
                    let lines: Vec<Value> = out.hits.iter().map(algebra_to_value).collect();
                    (lines, out.scanned)
                }
            };
            let mut text = String::new();
            for line in &lines {
                text.push_str(&serde_json::to_string(line).expect("serializable"));
                text.push('\n');
            }
            let mut summary = json!({ "count": lines.len(), "scanned": scanned.to_string() });
            if timing {
                summary["elapsed_ms"] = json!(started.elapsed().as_millis() as u64);
            }
            text.push_str(&serde_json::to_string(&summary).expect("serializable"));
            text.push('\n');
            match output {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Outcome {
                        stdout: String::new(),
                        code: 0,
                    })
                }
                None => Ok(Outcome {
                    stdout: text,
                    code: 0,
                }),
            }
        }
        Command::Demo { timing } => {
            let started = Instant::now();
            let mut report = demo_report();
            if timing {
                report["elapsed_ms"] = json!(started.elapsed().as_millis() as u64);
            }
            let pass = report["pass"].as_bool().unwrap_or(false);
            Ok(Outcome {
                stdout: to_canonical_string(&report),
                code: i32::from(!pass),
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn derive_document(
    algebra: Option<&Path>,
    construction: Construction,
    operator: Option<&Path>,
    weight: &str,
    bimodule: Option<&Path>,
    form: Option<&Path>,
    variant: Option<LiftVariantArg>,
    skip_ambient_check: bool,
) -> Result<(String, i32)> {
    let load_operator = |field: FieldSpec| -> Result<LinearMapAnd> {
        let map = parse_linear_map(&read_file(require(operator, "--operator")?)?)?;
        let w = Scalar::parse(field, weight)?;
        Ok(LinearMapAnd { map, weight: w })
    };
    let load_bimodule = || -> Result<Bimodule> {
        parse_bimodule(&read_file(require(bimodule, "--bimodule")?)?)
    };
    match construction {
        Construction::RbProduct | Construction::RbPre | Construction::RbLsym
        | Construction::RbRsym => {
            let a = load_algebra(require(algebra, "algebra file")?)?;
            let loaded = load_operator(a.field())?;
            let op = WeightedOperator::new(loaded.map, loaded.weight)?;
            let text = match construction {
                Construction::RbProduct => algebra_to_json(&rb_induced_product(&a, &op)?),
                Construction::RbPre => pair_to_json(&rb_pre_anti_flexible(&a, &op)?),
                Construction::RbLsym => algebra_to_json(&rb_left_symmetric(&a, &op)?),
                _ => algebra_to_json(&rb_right_symmetric(&a, &op)?),
            };
            Ok((text, 0))
        }
        Construction::NjProduct | Construction::NjPre | Construction::NjLsym => {
            let a = load_algebra(require(algebra, "algebra file")?)?;
            let map = parse_linear_map(&read_file(require(operator, "--operator")?)?)?;
            let text = match construction {
                Construction::NjProduct => algebra_to_json(&nj_induced_product(&a, &map)?),
                Construction::NjPre => pair_to_json(&nj_pre_anti_flexible(&a, &map)?),
                _ => algebra_to_json(&nj_left_symmetric(&a, &map)?),
            };
            Ok((text, 0))
        }
        Construction::NjDouble => {
            let a = load_algebra(require(algebra, "algebra file")?)?;
            let double = lie_double_with_complex_structure(&a)?;
            let document = json!({
                "algebra": algebra_to_value(&double.algebra),
                "j": linear_map_to_value(&double.j),
                "report": report_to_value(&double.report),
            });
            Ok((
                to_canonical_string(&document),
                i32::from(!double.report.pass),
            ))
        }
        Construction::OPre | Construction::OLsym | Construction::ORsym
        | Construction::ExtendBimodule | Construction::LiftRb | Construction::LiftNj => {
            let b = load_bimodule()?;
            let map = parse_linear_map(&read_file(require(operator, "--operator")?)?)?;
            let t = ModuleOperator::new(map);
            let text = match construction {
                Construction::OPre => pair_to_json(&o_pre_anti_flexible(&b, &t)?),
                Construction::OLsym => algebra_to_json(&o_left_symmetric(&b, &t)?),
                Construction::ORsym => algebra_to_json(&o_right_symmetric(&b, &t)?),
                Construction::ExtendBimodule => bimodule_to_json(&extended_bimodule(&b, &t)?),
                Construction::LiftRb => {
                    let w = Scalar::parse(b.algebra().field(), weight)?;
                    let lifted = lift_rb_from_o(&b, &t, &w)?;
                    to_canonical_string(&weighted_operator_to_value(&lifted))
                }
                _ => {
                    let v = match require(variant, "--variant")? {
                        LiftVariantArg::Nilpotent => LiftVariant::Nilpotent,
                        LiftVariantArg::Idempotent => LiftVariant::Idempotent,
                    };
                    linear_map_to_json(&lift_nijenhuis_from_o(&b, &t, v)?)
                }
            };
            Ok((text, 0))
        }
        Construction::Semidirect => {
            let b = load_bimodule()?;
            Ok((algebra_to_json(&semidirect_product(&b)), 0))
        }
        Construction::DualBimodule => {
            let a = load_algebra(require(algebra, "algebra file")?)?;
            Ok((bimodule_to_json(&dual_bimodule(&a)), 0))
        }
        Construction::SymplecticPrelie => {
            let a = load_algebra(require(algebra, "algebra file")?)?;
            let w = parse_bilinear_form(&read_file(require(form, "--form")?)?)?;
            let derived = if skip_ambient_check {
                pre_lie_from_symplectic_relaxed(&a, &w)?
            } else {
                pre_lie_from_symplectic(&a, &w)?
            };
            Ok((algebra_to_json(&derived), 0))
        }
    }
}

struct LinearMapAnd {
    map: crate::linalg::LinearMap,
    weight: Scalar,
}

// ---------------------------------------------------------------------------
// demo fixtures and concordance
// ---------------------------------------------------------------------------

const Q: FieldSpec = FieldSpec::Rationals;

/// The scalar-product fixture: e1e1 = e1, e1e2 = 0, e2e1 = e1, e2e2 = e2.
pub fn fixture_e() -> Algebra {
    Algebra::from_integer_table(Q, &[&[&[1, 0], &[0, 0]], &[&[1, 0], &[0, 1]]])
        .with_labels(vec!["e1".to_string(), "e2".to_string()])
        .expect("two labels")
}

/// Dual numbers over the rationals.
pub fn fixture_dual_numbers() -> Algebra {
    Algebra::from_integer_table(Q, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]])
        .with_labels(vec!["e1".to_string(), "e2".to_string()])
        .expect("two labels")
}

/// The nilpotent shift e1 -> e2, e2 -> 0 on the dual numbers.
pub fn fixture_shift() -> crate::linalg::LinearMap {
    crate::linalg::LinearMap::from_integers(Q, &[&[0, 0], &[1, 0]])
}

fn entry(name: &str, pass: bool) -> Value {
    json!({ "name": name, "pass": pass })
}

fn section(name: &str, entries: Vec<Value>) -> Value {
    let pass = entries.iter().all(|e| e["pass"].as_bool().unwrap_or(false));
    json!({ "entries": entries, "name": name, "pass": pass })
}

/// Walks the fixture corpus through the scalar-product family, the weighted
/// operator constructions, the semidirect and module-operator ones, and the
/// torsion-free ones, recording one pass flag per claim. Deterministic
/// output, no timestamps.
pub fn demo_report() -> Value {
    let e = fixture_e();
    let d = fixture_dual_numbers();
    let shift = fixture_shift();
    let weight0 = Scalar::from_integer(Q, 0);
    let rb = WeightedOperator::new(shift.clone(), weight0).expect("square fixture");
    let mut sections = Vec::new();

    // scalar-product family
    {
        let form = crate::algebra::BilinearForm::from_integers(Q, &[&[1, 0], &[0, 1]]);
        let c = crate::linalg::Vector::from_integers(Q, &[1, 0]);
        let l = crate::linalg::Vector::from_integers(Q, &[0, 1]);
        let left = crate::algebra::scalar_product_algebra(
            &form,
            &c,
            &l,
            crate::algebra::FunctionalSide::Left,
        );
        let right = crate::algebra::scalar_product_algebra(
            &form,
            &c,
            &l,
            crate::algebra::FunctionalSide::Right,
        );
        let mut entries = Vec::new();
        let left_ok = matches!(&left, Ok(a) if a.basis_product(1, 0) == e.basis_product(1, 0));
        entries.push(entry("left-variant-reproduces-fixture", left_ok));
        if let (Ok(left), Ok(right)) = (&left, &right) {
            entries.push(entry(
                "both-variants-anti-flexible",
                check_identity(left, AlgebraIdentity::AntiFlexible).pass
                    && check_identity(right, AlgebraIdentity::AntiFlexible).pass,
            ));
            entries.push(entry(
                "right-variant-is-opposite",
                *right == left.opposite(),
            ));
        }
        entries.push(entry(
            "fixture-fails-associativity",
            !check_identity(&e, AlgebraIdentity::Associative).pass,
        ));
        entries.push(entry(
            "commutator-is-lie",
            check_identity(&e.commutator_algebra(), AlgebraIdentity::Lie).pass,
        ));
        sections.push(section("scalar-product-family", entries));
    }

    // weighted operator on the dual numbers
    {
        let mut entries = Vec::new();
        let rb_ok = check_rota_baxter(&d, &rb).map(|r| r.pass).unwrap_or(false);
        entries.push(entry("operator-identity", rb_ok));
        if let Ok(induced) = rb_induced_product(&d, &rb) {
            entries.push(entry(
                "induced-product-anti-flexible",
                check_identity(&induced, AlgebraIdentity::AntiFlexible).pass,
            ));
            let mut expansion_ok = true;
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let x = crate::linalg::Vector::basis(Q, 2, i);
                        let y = crate::linalg::Vector::basis(Q, 2, j);
                        let z = crate::linalg::Vector::basis(Q, 2, k);
                        let direct = induced.associator(&x, &y, &z).expect("fixture dims");
                        let expanded = rb_associator_expansion(&d, &rb, &x, &y, &z)
                            .expect("fixture dims");
                        expansion_ok &= direct == expanded;
                    }
                }
            }
            entries.push(entry("associator-expansion-agrees", expansion_ok));
            let morphism = check_rb_morphism((&induced, &rb), (&d, &rb), rb.map())
                .map(|r| r.pass)
                .unwrap_or(false);
            entries.push(entry("operator-is-homomorphism", morphism));
        }
        if let Ok((ambient, gens)) = rb_graph_algebra(&d, &rb) {
            let closed = check_span_closed(&ambient, &gens)
                .map(|r| r.pass)
                .unwrap_or(false);
            entries.push(entry("graph-closure-matches", closed == rb_ok));
        }
        if let Ok(pair) = rb_pre_anti_flexible(&d, &rb) {
            let pair_ok = check_pre_anti_flexible(&pair).pass;
            entries.push(entry("splitting-pair-valid", pair_ok));
            entries.push(entry("splitting-pair-dendriform", check_dendriform(&pair).pass));
            entries.push(entry(
                "sum-recovers-induced-product",
                rb_induced_product(&d, &rb)
                    .map(|p| sum_algebra(&pair) == p)
                    .unwrap_or(false),
            ));
        }
        sections.push(section("weighted-operator", entries));
    }

    // bimodules and module operators
    {
        let adjoint = Bimodule::adjoint(d.clone());
        let dual = dual_bimodule(&e);
        let t = ModuleOperator::new(shift.clone());
        let mut entries = vec![
            entry("adjoint-actions-valid", check_bimodule(&adjoint).pass),
            entry("dual-actions-valid", check_bimodule(&dual).pass),
        ];
        entries.push(entry(
            "semidirect-adjoint-anti-flexible",
            check_identity(&semidirect_product(&adjoint), AlgebraIdentity::AntiFlexible).pass,
        ));
        entries.push(entry(
            "semidirect-dual-anti-flexible",
            check_identity(&semidirect_product(&dual), AlgebraIdentity::AntiFlexible).pass,
        ));
        let op_ok = check_o_operator(&adjoint, &t).map(|r| r.pass).unwrap_or(false);
        entries.push(entry("module-operator-identity", op_ok));
        entries.push(entry(
            "module-graph-closure-matches",
            o_graph_check(&adjoint, &t).map(|r| r.pass).unwrap_or(false) == op_ok,
        ));
        if let Ok(star) = o_induced_module_algebra(&adjoint, &t) {
            entries.push(entry(
                "module-product-anti-flexible",
                check_identity(&star, AlgebraIdentity::AntiFlexible).pass,
            ));
        }
        if let Ok(pair) = o_pre_anti_flexible(&adjoint, &t) {
            entries.push(entry("module-splitting-pair-valid", check_pre_anti_flexible(&pair).pass));
            entries.push(entry(
                "module-left-symmetric-agrees",
                o_left_symmetric(&adjoint, &t)
                    .map(|lsym| left_sym_from_pre(&pair) == lsym)
                    .unwrap_or(false),
            ));
        }
        entries.push(entry(
            "extended-actions-valid",
            extended_bimodule(&adjoint, &t)
                .map(|ext| check_bimodule(&ext).pass)
                .unwrap_or(false),
        ));
        let lifted_ok = lift_rb_from_o(&adjoint, &t, &Scalar::from_integer(Q, 1))
            .and_then(|lifted| check_rota_baxter(&semidirect_product(&adjoint), &lifted))
            .map(|r| r.pass)
            .unwrap_or(false);
        entries.push(entry("lifted-weighted-operator", lifted_ok));
        sections.push(section("module-operators", entries));
    }

    // torsion-free operators
    {
        let mut entries = Vec::new();
        let nj_ok = check_nijenhuis(&d, &shift).map(|r| r.pass).unwrap_or(false);
        entries.push(entry("torsion-vanishes", nj_ok));
        if let Ok(induced) = nj_induced_product(&d, &shift) {
            entries.push(entry(
                "deformed-product-anti-flexible",
                check_identity(&induced, AlgebraIdentity::AntiFlexible).pass,
            ));
        }
        let condition = check_nj_condition(&d, &shift).map(|r| r.pass).unwrap_or(false);
        let pair_ok = nj_pre_anti_flexible(&d, &shift)
            .map(|pair| check_pre_anti_flexible(&pair).pass)
            .unwrap_or(false);
        entries.push(entry("splitting-condition-matches-pair", condition == pair_ok));
        entries.push(entry(
            "left-symmetric-product",
            nj_left_symmetric(&d, &shift)
                .map(|lsym| check_identity(&lsym, AlgebraIdentity::LeftSymmetric).pass)
                .unwrap_or(false),
        ));
        let bridge = nj_rb_bridge(&d, &shift);
        entries.push(entry(
            "square-zero-bridge-agrees",
            bridge.map(|b| b.applicable() && b.all_agree()).unwrap_or(false),
        ));
        sections.push(section("torsion-free-operators", entries));
    }

    // symplectic construction on the zero algebra
    {
        let zero = Algebra::zero(Q, 2);
        let form = crate::algebra::BilinearForm::from_integers(Q, &[&[0, 1], &[-1, 0]]);
        let mut entries = Vec::new();
        let cyclic = check_cyclic_form(&zero, &form).map(|r| r.pass).unwrap_or(false);
        entries.push(entry("standard-form-is-cyclic-on-zero-algebra", cyclic));
        entries.push(entry(
            "induced-product-left-symmetric",
            pre_lie_from_symplectic(&zero, &form)
                .map(|p| check_identity(&p, AlgebraIdentity::LeftSymmetric).pass)
                .unwrap_or(false),
        ));
        entries.push(entry(
            "fixture-fails-cyclic-form",
            !check_cyclic_form(&e, &form).map(|r| r.pass).unwrap_or(true),
        ));
        sections.push(section("cyclic-forms", entries));
    }

    let pass = sections
        .iter()
        .all(|s| s["pass"].as_bool().unwrap_or(false));
    json!({ "name": "antiflex-demo", "pass": pass, "sections": sections })
}
