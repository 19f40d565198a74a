//! Acceptance suite. Each test covers one numbered criterion, prints a
//! single PASS/FAIL line, and asserts the criterion at exact arithmetic
//! (there are no tolerances anywhere: every comparison is field equality).
//!
//! Criterion 8c is expected to fail and is left failing on purpose: the
//! only-if direction of the bracket-product equivalence is refuted by the
//! exhaustive sweep (see findings and the test body for the counterexample
//! shape). All other criteria pass.

mod common;

use std::process::Command;
use std::sync::OnceLock;

use serde_json::Value;

use antiflex::algebra::{check_span_closed, Algebra};
use antiflex::identities::{
    check_identity, check_pre_anti_flexible, left_sym_from_pre, right_sym_from_pre,
    AlgebraIdentity,
};
use antiflex::json::{algebra_to_value, parse_algebra, to_canonical_string};
use antiflex::linalg::Vector;
use antiflex::nijenhuis::{
    check_nijenhuis, check_nj_condition, nj_associator_expansion, nj_induced_product,
    nj_left_symmetric, nj_pre_anti_flexible, nj_rb_bridge,
};
use antiflex::omod::{
    check_o_operator, dual_bimodule, lift_nijenhuis_from_o, lift_rb_from_o, o_graph_check,
    o_left_symmetric, o_pre_anti_flexible, semidirect_product, Bimodule, LiftVariant,
    ModuleOperator,
};
use antiflex::rota::{
    check_rota_baxter, rb_associator_expansion, rb_graph_algebra, rb_induced_product,
    rb_pre_anti_flexible, WeightedOperator,
};
use antiflex::scalar::Scalar;
use antiflex::search::{enumerate_algebras, enumerate_o_operators, DEFAULT_BUDGET};
use antiflex::symplectic::{check_cyclic_form, pre_lie_from_symplectic};
use antiflex::BilinearForm;

fn af2() -> &'static Vec<Algebra> {
    static CORPUS: OnceLock<Vec<Algebra>> = OnceLock::new();
    CORPUS.get_or_init(|| common::anti_flexible_corpus(2))
}

fn af3() -> &'static Vec<Algebra> {
    static CORPUS: OnceLock<Vec<Algebra>> = OnceLock::new();
    CORPUS.get_or_init(|| common::anti_flexible_corpus(3))
}

fn af5() -> &'static Vec<Algebra> {
    static CORPUS: OnceLock<Vec<Algebra>> = OnceLock::new();
    CORPUS.get_or_init(|| common::anti_flexible_corpus(5))
}

fn golden() -> &'static Value {
    static GOLDEN: OnceLock<Value> = OnceLock::new();
    GOLDEN.get_or_init(|| serde_json::from_str(&common::read_fixture("golden.json")).unwrap())
}

fn verdict(id: &str, name: &str, pass: bool) {
    println!(
        "ACCEPTANCE {id} {name}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
}

fn golden_witness(report: &antiflex::CheckReport, key: &str) -> bool {
    let expected = &golden()[key];
    let w = report.witness.as_ref().expect("failing report has witness");
    let indices: Vec<usize> = expected["indices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap() as usize)
        .collect();
    let discrepancy: Vec<String> = expected["discrepancy"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    w.clause == expected["clause"].as_str().unwrap()
        && w.indices == indices
        && w.discrepancy.render() == discrepancy
}

#[test]
fn acceptance_01_fixture_sanity() {
    let started = std::time::Instant::now();
    let e = parse_algebra(&common::read_fixture("E.json")).unwrap();
    let e_op = parse_algebra(&common::read_fixture("E_opposite.json")).unwrap();
    assert_eq!(e_op, e.opposite());

    let mut pass = check_identity(&e, AlgebraIdentity::AntiFlexible).pass;
    pass &= check_identity(&e_op, AlgebraIdentity::AntiFlexible).pass;
    let assoc = check_identity(&e, AlgebraIdentity::Associative);
    pass &= !assoc.pass && golden_witness(&assoc, "e_associative_witness");
    let cyclic = check_identity(&e, AlgebraIdentity::CyclicCondition);
    pass &= !cyclic.pass && golden_witness(&cyclic, "e_cyclic_condition_witness");
    pass &= started.elapsed() < std::time::Duration::from_secs(1);

    verdict("01", "fixture-sanity", pass);
    assert!(pass);
}

#[test]
fn acceptance_02_opposite_and_commutator_over_f2() {
    // scan all 256 tensors: the opposite must preserve the verdict
    let everything = enumerate_algebras(common::field(2), 2, None, DEFAULT_BUDGET, 4).unwrap();
    let mut pass = everything.scanned == 256;
    let mut hit_count = 0usize;
    for a in &everything.hits {
        let direct = check_identity(a, AlgebraIdentity::AntiFlexible).pass;
        let opposite = check_identity(&a.opposite(), AlgebraIdentity::AntiFlexible).pass;
        pass &= direct == opposite;
        if direct {
            hit_count += 1;
            pass &= check_identity(&a.commutator_algebra(), AlgebraIdentity::Lie).pass;
        }
    }
    let expected = golden()["f2_dim2_anti_flexible_count"].as_u64().unwrap() as usize;
    pass &= hit_count == expected && af2().len() == expected;

    verdict("02", "opposite-and-commutator-over-f2", pass);
    assert!(pass);
}

#[test]
fn acceptance_03_induced_products_over_f3() {
    let f3 = common::field(3);
    assert_eq!(
        af3().len(),
        golden()["f3_dim2_anti_flexible_count"].as_u64().unwrap() as usize
    );
    let basis: Vec<Vector> = (0..2).map(|i| Vector::basis(f3, 2, i)).collect();
    let mut hits = 0usize;
    let mut violations = 0usize;
    for a in af3() {
        for widx in 0..3i64 {
            let w = Scalar::from_integer(f3, widx);
            for index in 0..81u128 {
                let m = common::nth_square_matrix(f3, 3, index);
                let op = WeightedOperator::new(m, w.clone()).unwrap();
                if !check_rota_baxter(a, &op).unwrap().pass {
                    continue;
                }
                hits += 1;
                let induced = rb_induced_product(a, &op).unwrap();
                if !check_identity(&induced, AlgebraIdentity::AntiFlexible).pass {
                    violations += 1;
                    continue;
                }
                'triples: for x in &basis {
                    for y in &basis {
                        for z in &basis {
                            let direct = induced.associator(x, y, z).unwrap();
                            let expanded =
                                rb_associator_expansion(a, &op, x, y, z).unwrap();
                            if direct != expanded {
                                violations += 1;
                                break 'triples;
                            }
                        }
                    }
                }
            }
        }
    }
    let pass = violations == 0 && hits > 0;
    verdict("03", "induced-products-over-f3", pass);
    println!("  weighted-operator hits: {hits}");
    assert!(pass, "{violations} violations over {hits} hits");
}

#[test]
fn acceptance_04_splitting_iff_over_f5() {
    let f5 = common::field(5);
    assert_eq!(
        af5().len(),
        golden()["f5_dim2_anti_flexible_count"].as_u64().unwrap() as usize
    );
    let mut hits = 0usize;
    let mut violations = 0usize;
    let mut nonvacuous = 0usize;
    for a in af5() {
        let cyclic = check_identity(a, AlgebraIdentity::CyclicCondition).pass;
        for widx in 0..5i64 {
            let w = Scalar::from_integer(f5, widx);
            for index in 0..625u128 {
                let m = common::nth_square_matrix(f5, 5, index);
                let op = WeightedOperator::new(m, w.clone()).unwrap();
                if !check_rota_baxter(a, &op).unwrap().pass {
                    continue;
                }
                hits += 1;
                let pair_ok =
                    check_pre_anti_flexible(&rb_pre_anti_flexible(a, &op).unwrap()).pass;
                let condition_ok = widx == 0 || cyclic;
                if pair_ok != condition_ok {
                    violations += 1;
                }
                if widx != 0 && !cyclic {
                    nonvacuous += 1;
                }
            }
        }
    }
    let pass = violations == 0 && nonvacuous > 0;
    verdict("04", "splitting-iff-over-f5", pass);
    println!("  hits: {hits}, non-vacuous only-if cases: {nonvacuous}");
    assert!(pass, "{violations} violations, {nonvacuous} non-vacuous cases");
}

#[test]
fn acceptance_05_graph_equivalences() {
    let f3 = common::field(3);
    let mut violations = 0usize;
    for a in af3() {
        for widx in 0..3i64 {
            let w = Scalar::from_integer(f3, widx);
            for index in 0..81u128 {
                let m = common::nth_square_matrix(f3, 3, index);
                let op = WeightedOperator::new(m, w.clone()).unwrap();
                let direct = check_rota_baxter(a, &op).unwrap().pass;
                let (ambient, gens) = rb_graph_algebra(a, &op).unwrap();
                let closed = check_span_closed(&ambient, &gens).unwrap().pass;
                if direct != closed {
                    violations += 1;
                }
            }
        }
    }

    let f2 = common::field(2);
    for a in af2() {
        for b in [Bimodule::adjoint(a.clone()), dual_bimodule(a)] {
            for index in 0..16u128 {
                let t = ModuleOperator::new(common::nth_square_matrix(f2, 2, index));
                let direct = check_o_operator(&b, &t).unwrap().pass;
                let closed = o_graph_check(&b, &t).unwrap().pass;
                if direct != closed {
                    violations += 1;
                }
            }
        }
    }
    let pass = violations == 0;
    verdict("05", "graph-equivalences", pass);
    assert!(pass, "{violations} graph/operator disagreements");
}

#[test]
fn acceptance_06_operator_chain_over_f2() {
    let mut violations = 0usize;
    let mut operators = 0usize;
    for a in af2() {
        for b in [Bimodule::adjoint(a.clone()), dual_bimodule(a)] {
            for t in enumerate_o_operators(&b, DEFAULT_BUDGET, 1).unwrap().hits {
                operators += 1;
                let pair = o_pre_anti_flexible(&b, &t).unwrap();
                if !check_pre_anti_flexible(&pair).pass {
                    violations += 1;
                }
                let lsym = left_sym_from_pre(&pair);
                let rsym = right_sym_from_pre(&pair);
                if !check_identity(&lsym, AlgebraIdentity::LeftSymmetric).pass {
                    violations += 1;
                }
                if !check_identity(&rsym, AlgebraIdentity::RightSymmetric).pass {
                    violations += 1;
                }
                if lsym != o_left_symmetric(&b, &t).unwrap() {
                    violations += 1;
                }
            }
        }
    }
    let pass = violations == 0 && operators > 0;
    verdict("06", "operator-chain-over-f2", pass);
    println!("  module operators checked: {operators}");
    assert!(pass, "{violations} violations over {operators} operators");
}

#[test]
fn acceptance_07_symplectic_over_f5() {
    let f5 = common::field(5);
    let omega = BilinearForm::from_integers(f5, &[&[0, 1], &[-1, 0]]);
    let committed: Value =
        serde_json::from_str(&common::read_fixture("symplectic_f5_hits.json")).unwrap();

    let mut hits = Vec::new();
    let mut violations = 0usize;
    let basis: Vec<Vector> = (0..2).map(|i| Vector::basis(f5, 2, i)).collect();
    for a in af5() {
        if !check_cyclic_form(a, &omega).unwrap().pass {
            continue;
        }
        hits.push(a);
        let pre_lie = pre_lie_from_symplectic(a, &omega).unwrap();
        if !check_identity(&pre_lie, AlgebraIdentity::LeftSymmetric).pass {
            violations += 1;
        }
        // independent residual check of the defining equation
        let bracket = a.commutator_algebra();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                for z in &basis {
                    let lhs = omega.eval(pre_lie.basis_product(i, j), z).unwrap();
                    let rhs = omega
                        .eval(y, &bracket.multiply(z, x).unwrap())
                        .unwrap();
                    if lhs != rhs {
                        violations += 1;
                    }
                }
            }
        }
        // the cyclic sum over the bracket also vanishes for passing forms
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    let mut acc = omega.eval(&bracket.multiply(x, y).unwrap(), z).unwrap();
                    acc = &acc + &omega.eval(&bracket.multiply(y, z).unwrap(), x).unwrap();
                    acc = &acc + &omega.eval(&bracket.multiply(z, x).unwrap(), y).unwrap();
                    if !acc.is_zero() {
                        violations += 1;
                    }
                }
            }
        }
    }
    let zero_found = hits.iter().any(|a| **a == Algebra::zero(f5, 2));
    let expected_count = golden()["f5_cyclic_form_hit_count"].as_u64().unwrap() as usize;
    let committed_algebras = committed["algebras"].as_array().unwrap();
    let frozen_match = committed_algebras.len() == hits.len()
        && hits
            .iter()
            .zip(committed_algebras)
            .all(|(a, v)| algebra_to_value(a) == *v);

    let pass = violations == 0 && zero_found && hits.len() == expected_count && frozen_match;
    verdict("07", "symplectic-over-f5", pass);
    println!("  cyclic-form hits: {} (zero algebra included)", hits.len());
    assert!(pass);
}

#[test]
fn acceptance_08a_deformed_products_over_f3() {
    let f3 = common::field(3);
    let basis: Vec<Vector> = (0..2).map(|i| Vector::basis(f3, 2, i)).collect();
    let mut violations = 0usize;
    let mut hits = 0usize;
    for a in af3() {
        for index in 0..81u128 {
            let m = common::nth_square_matrix(f3, 3, index);
            if !check_nijenhuis(a, &m).unwrap().pass {
                continue;
            }
            hits += 1;
            let induced = nj_induced_product(a, &m).unwrap();
            if !check_identity(&induced, AlgebraIdentity::AntiFlexible).pass {
                violations += 1;
                continue;
            }
            'triples: for x in &basis {
                for y in &basis {
                    for z in &basis {
                        let direct = induced.associator(x, y, z).unwrap();
                        let expanded = nj_associator_expansion(a, &m, x, y, z).unwrap();
                        if direct != expanded {
                            violations += 1;
                            break 'triples;
                        }
                    }
                }
            }
        }
    }
    let pass = violations == 0 && hits > 0;
    verdict("08a", "deformed-products-over-f3", pass);
    println!("  torsion-free hits: {hits}");
    assert!(pass, "{violations} violations over {hits} hits");
}

#[test]
fn acceptance_08b_deformation_splitting_iff_over_f5() {
    let f5 = common::field(5);
    let mut hits = 0usize;
    let mut violations = 0usize;
    for a in af5() {
        for index in 0..625u128 {
            let m = common::nth_square_matrix(f5, 5, index);
            if !check_nijenhuis(a, &m).unwrap().pass {
                continue;
            }
            hits += 1;
            let pair_ok = check_pre_anti_flexible(&nj_pre_anti_flexible(a, &m).unwrap()).pass;
            let cond_ok = check_nj_condition(a, &m).unwrap().pass;
            if pair_ok != cond_ok {
                violations += 1;
            }
        }
    }
    let pass = violations == 0 && hits > 0;
    verdict("08b", "deformation-splitting-iff-over-f5", pass);
    println!("  torsion-free hits: {hits}");
    assert!(pass, "{violations} violations over {hits} hits");
}

/// EXPECTED RED. The criterion demands an equivalence between left symmetry
/// of the bracket product `x o y = [N(x),y] - (1/2)N([x,y])` and the
/// deformation condition. The forward direction holds (asserted below and
/// passing); the converse is refuted by the sweep: on any commutative base
/// the bracket product vanishes identically, so it is left-symmetric while
/// the condition can still fail -- e.g. the dual numbers mod 5 with
/// N = diag(1,0), a torsion-free operator. This test states the criterion
/// faithfully and is left failing; the counterexample tally is in the
/// assertion message.
#[test]
fn acceptance_08c_bracket_product_iff_over_f5() {
    let f5 = common::field(5);
    let mut hits = 0usize;
    let mut forward_violations = 0usize; // condition holds, product not left-symmetric
    let mut converse_violations = 0usize; // product left-symmetric, condition fails
    let mut first: Option<(usize, u128)> = None;
    for (ai, a) in af5().iter().enumerate() {
        for index in 0..625u128 {
            let m = common::nth_square_matrix(f5, 5, index);
            if !check_nijenhuis(a, &m).unwrap().pass {
                continue;
            }
            hits += 1;
            let cond_ok = check_nj_condition(a, &m).unwrap().pass;
            let lsym_ok = check_identity(
                &nj_left_symmetric(a, &m).unwrap(),
                AlgebraIdentity::LeftSymmetric,
            )
            .pass;
            if cond_ok && !lsym_ok {
                forward_violations += 1;
            }
            if lsym_ok && !cond_ok {
                converse_violations += 1;
                if first.is_none() {
                    first = Some((ai, index));
                }
            }
        }
    }
    assert_eq!(forward_violations, 0, "forward direction must hold");
    let pass = converse_violations == 0;
    verdict("08c", "bracket-product-iff-over-f5", pass);
    assert!(
        pass,
        "equivalence refuted: {converse_violations} of {hits} torsion-free cases are \
         left-symmetric without the deformation condition (first at corpus algebra {}, \
         operator index {}); the bracket product collapses on commutative bases",
        first.unwrap().0,
        first.unwrap().1
    );
}

#[test]
fn acceptance_08d_operator_bridge_over_f5() {
    let f5 = common::field(5);
    let mut applicable = 0usize;
    let mut disagreements = 0usize;
    for a in af5() {
        for index in 0..625u128 {
            let m = common::nth_square_matrix(f5, 5, index);
            let report = nj_rb_bridge(a, &m).unwrap();
            if report.applicable() {
                applicable += 1;
                if !report.all_agree() {
                    disagreements += 1;
                }
            }
        }
    }
    let pass = disagreements == 0 && applicable > 0;
    verdict("08d", "operator-bridge-over-f5", pass);
    println!("  applicable operators: {applicable}");
    assert!(pass, "{disagreements} disagreements over {applicable} cases");
}

#[test]
fn acceptance_08e_lifted_operators_over_f2() {
    let f2 = common::field(2);
    let mut cases = 0usize;
    let mut violations = 0usize;
    for a in af2() {
        for b in [Bimodule::adjoint(a.clone()), dual_bimodule(a)] {
            let ambient = semidirect_product(&b);
            for index in 0..16u128 {
                let t = ModuleOperator::new(common::nth_square_matrix(f2, 2, index));
                let is_op = check_o_operator(&b, &t).unwrap().pass;
                for widx in 0..2i64 {
                    let w = Scalar::from_integer(f2, widx);
                    let lifted = lift_rb_from_o(&b, &t, &w).unwrap();
                    cases += 1;
                    if check_rota_baxter(&ambient, &lifted).unwrap().pass != is_op {
                        violations += 1;
                    }
                }
                for variant in [LiftVariant::Nilpotent, LiftVariant::Idempotent] {
                    let lifted = lift_nijenhuis_from_o(&b, &t, variant).unwrap();
                    cases += 1;
                    if check_nijenhuis(&ambient, &lifted).unwrap().pass != is_op {
                        violations += 1;
                    }
                }
            }
        }
    }
    let pass = violations == 0 && cases > 0;
    verdict("08e", "lifted-operators-over-f2", pass);
    println!("  lifted-operator cases: {cases}");
    assert!(pass, "{violations} violations over {cases} cases");
}

#[test]
fn acceptance_09_power_suites_recorded() {
    let rb_doc = to_canonical_string(&common::rb_power_findings_doc());
    let nj_doc = to_canonical_string(&common::nj_power_findings_doc());
    let converse_doc = to_canonical_string(&common::converse_findings_doc(af3()));
    let prelie_doc = to_canonical_string(&common::prelie_findings_doc());

    let read = |name: &str| {
        let path = common::findings_dir().join(name);
        std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
    };
    let pass = rb_doc == read("rb_power_suite.json")
        && nj_doc == read("nj_power_suite.json")
        && converse_doc == read("rb_splitting_converse.json")
        && prelie_doc == read("pre_lie_deformation.json");
    verdict("09", "power-suites-recorded", pass);
    assert!(pass, "findings are not byte-identical to the committed records");
}

#[test]
fn acceptance_10_determinism() {
    let bin = env!("CARGO_BIN_EXE_antiflex");
    let fixtures = common::fixtures_dir();
    let run = |args: &[&str]| {
        let out = Command::new(bin)
            .args(args)
            .current_dir(&fixtures)
            .output()
            .expect("binary runs");
        (out.status.code().unwrap_or(-1), out.stdout)
    };

    let mut pass = true;

    let (code_a, demo_a) = run(&["demo"]);
    let (code_b, demo_b) = run(&["demo"]);
    pass &= code_a == 0 && code_b == 0 && demo_a == demo_b && !demo_a.is_empty();

    let search_cases: Vec<Vec<&str>> = vec![
        vec!["search", "--kind", "rb", "--algebra", "D_f3.json", "--weight", "0"],
        vec!["search", "--kind", "nijenhuis", "--algebra", "D_f3.json"],
        vec!["search", "--kind", "o-operator", "--bimodule", "dual_E_f3.json"],
        vec![
            "search", "--kind", "algebra", "--p", "2", "--dim", "2", "--identity",
            "anti-flexible", "--allow-small-char",
        ],
    ];
    for case in &search_cases {
        let mut outputs = Vec::new();
        for workers in ["1", "4", "1", "4"] {
            let mut args: Vec<&str> = case.clone();
            args.push("--workers");
            args.push(workers);
            let (code, stdout) = run(&args);
            pass &= code == 0;
            outputs.push(stdout);
        }
        pass &= outputs.windows(2).all(|w| w[0] == w[1]);
    }

    verdict("10", "determinism", pass);
    assert!(pass);
}
