//! Shared helpers for the integration suites: corpus construction, the
//! findings-document builders, and fixture file access. The regeneration
//! tool writes these documents to disk; the acceptance suite rebuilds them
//! and compares byte for byte.

// each test binary uses its own subset of these helpers
#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::{json, Value};

use antiflex::algebra::Algebra;
use antiflex::cli::{fixture_dual_numbers, fixture_shift};
use antiflex::identities::{check_identity, check_pre_anti_flexible, AlgebraIdentity};
use antiflex::json::{algebra_to_value, linear_map_to_value, report_to_value};
use antiflex::linalg::LinearMap;
use antiflex::nijenhuis::{nj_induced_product, nj_power_suite};
use antiflex::report::SuiteReport;
use antiflex::rota::{
    check_rota_baxter, rb_induced_product, rb_power_suite, rb_pre_anti_flexible, WeightedOperator,
};
use antiflex::scalar::{FieldSpec, Scalar};
use antiflex::search::{enumerate_algebras, enumerate_operators, OperatorKind, DEFAULT_BUDGET};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn findings_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("findings")
}

pub fn read_fixture(name: &str) -> String {
    let path = fixtures_dir().join(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
}

pub fn field(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

/// The anti-flexible corpus of a given prime, dimension 2.
pub fn anti_flexible_corpus(p: u64) -> Vec<Algebra> {
    enumerate_algebras(field(p), 2, Some(AlgebraIdentity::AntiFlexible), DEFAULT_BUDGET, 4)
        .unwrap()
        .hits
}

/// Dual numbers reduced mod 3.
pub fn dual_numbers_f3() -> Algebra {
    Algebra::from_integer_table(field(3), &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]])
}

/// The scalar-product fixture reduced mod 3.
pub fn algebra_e_f3() -> Algebra {
    Algebra::from_integer_table(field(3), &[&[&[1, 0], &[0, 0]], &[&[1, 0], &[0, 1]]])
}

/// The index-th 2x2 matrix over F_p in enumeration order (big-endian
/// digits, row-major slots).
pub fn nth_square_matrix(f: FieldSpec, p: u128, index: u128) -> LinearMap {
    let mut digits = [0i64; 4];
    let mut ix = index;
    for slot in (0..4).rev() {
        digits[slot] = (ix % p) as i64;
        ix /= p;
    }
    LinearMap::from_integers(f, &[&[digits[0], digits[1]], &[digits[2], digits[3]]])
}

fn suite_record(label: &str, op_value: Value, suite: &SuiteReport) -> Value {
    json!({
        "algebra": label,
        "failing_claims": suite
            .claims
            .iter()
            .filter(|c| !c.report.pass)
            .map(|c| json!({
                "claim": c.claim,
                "p": c.p,
                "q": c.q,
                "report": report_to_value(&c.report),
            }))
            .collect::<Vec<_>>(),
        "operator": op_value,
        "pass": suite.all_pass(),
    })
}

/// Power-suite findings for the weighted operator claims: the rational
/// fixture plus every weight-zero hit on the reduced dual numbers.
pub fn rb_power_findings_doc() -> Value {
    let q = FieldSpec::Rationals;
    let f3 = field(3);
    let d = fixture_dual_numbers();
    let shift = fixture_shift();
    let mut suites = Vec::new();
    let rb_q = WeightedOperator::new(shift, Scalar::from_integer(q, 0)).unwrap();
    suites.push(suite_record(
        "dual-numbers-q",
        linear_map_to_value(rb_q.map()),
        &rb_power_suite(&d, &rb_q, 3).unwrap(),
    ));
    let d3 = dual_numbers_f3();
    let hits = enumerate_operators(
        &d3,
        &OperatorKind::RotaBaxter(Scalar::from_integer(f3, 0)),
        DEFAULT_BUDGET,
        1,
    )
    .unwrap();
    for hit in &hits.hits {
        let op = WeightedOperator::new(hit.clone(), Scalar::from_integer(f3, 0)).unwrap();
        suites.push(suite_record(
            "dual-numbers-f3",
            linear_map_to_value(hit),
            &rb_power_suite(&d3, &op, 3).unwrap(),
        ));
    }
    json!({
        "maxpq": 3,
        "name": "rb-power-suite-findings",
        "pass": suites.iter().all(|s| s["pass"].as_bool().unwrap()),
        "suites": suites,
    })
}

/// Power-suite findings for the torsion-free claims.
pub fn nj_power_findings_doc() -> Value {
    let d = fixture_dual_numbers();
    let shift = fixture_shift();
    let mut suites = Vec::new();
    suites.push(suite_record(
        "dual-numbers-q",
        linear_map_to_value(&shift),
        &nj_power_suite(&d, &shift, 3).unwrap(),
    ));
    let d3 = dual_numbers_f3();
    let hits = enumerate_operators(&d3, &OperatorKind::Nijenhuis, DEFAULT_BUDGET, 1).unwrap();
    for hit in &hits.hits {
        suites.push(suite_record(
            "dual-numbers-f3",
            linear_map_to_value(hit),
            &nj_power_suite(&d3, hit, 3).unwrap(),
        ));
    }
    json!({
        "maxpq": 3,
        "name": "nj-power-suite-findings",
        "pass": suites.iter().all(|s| s["pass"].as_bool().unwrap()),
        "suites": suites,
    })
}

/// Sweep record for the converse question: over cyclic-condition algebras,
/// how splitting-pair validity relates to the weighted operator identity.
pub fn converse_findings_doc(af3: &[Algebra]) -> Value {
    let f3 = field(3);
    let mut cases = 0usize;
    let mut pair_without_operator = 0usize;
    let mut operator_without_pair = 0usize;
    let mut first: Option<Value> = None;
    for a in af3 {
        if !check_identity(a, AlgebraIdentity::CyclicCondition).pass {
            continue;
        }
        for widx in 0..3i64 {
            let w = Scalar::from_integer(f3, widx);
            for index in 0..81u128 {
                let m = nth_square_matrix(f3, 3, index);
                let op = WeightedOperator::new(m.clone(), w.clone()).unwrap();
                let pair_ok =
                    check_pre_anti_flexible(&rb_pre_anti_flexible(a, &op).unwrap()).pass;
                let rb_ok = check_rota_baxter(a, &op).unwrap().pass;
                cases += 1;
                if pair_ok && !rb_ok {
                    pair_without_operator += 1;
                    if first.is_none() {
                        first = Some(json!({
                            "algebra": algebra_to_value(a),
                            "operator": linear_map_to_value(&m),
                            "weight": w.render(),
                        }));
                    }
                }
                if rb_ok && !pair_ok {
                    operator_without_pair += 1;
                }
            }
        }
    }
    json!({
        "cases": cases,
        "corpus": "F_3 dim-2 anti-flexible algebras passing the cyclic condition, all 81 operators, weights 0..2",
        "first_counterexample": first,
        "name": "rb-splitting-converse-findings",
        "operator_without_pair": operator_without_pair,
        "pair_without_operator": pair_without_operator,
    })
}

/// Sweep record for the module-product converse question: how often the
/// induced module product is anti-flexible without the operator identity.
pub fn module_product_converse_doc(af2: &[Algebra]) -> Value {
    use antiflex::omod::{check_o_operator, dual_bimodule, o_induced_module_algebra, Bimodule,
        ModuleOperator};
    let f2 = field(2);
    let mut cases = 0usize;
    let mut star_without_operator = 0usize;
    let mut operator_without_star = 0usize;
    let mut first: Option<Value> = None;
    for a in af2 {
        for (which, b) in [("adjoint", Bimodule::adjoint(a.clone())), ("dual", dual_bimodule(a))]
        {
            for index in 0..16u128 {
                let t = ModuleOperator::new(nth_square_matrix(f2, 2, index));
                let is_op = check_o_operator(&b, &t).unwrap().pass;
                let star_af = check_identity(
                    &o_induced_module_algebra(&b, &t).unwrap(),
                    AlgebraIdentity::AntiFlexible,
                )
                .pass;
                cases += 1;
                if star_af && !is_op {
                    star_without_operator += 1;
                    if first.is_none() {
                        first = Some(json!({
                            "algebra": algebra_to_value(a),
                            "bimodule": which,
                            "operator": linear_map_to_value(t.map()),
                        }));
                    }
                }
                if is_op && !star_af {
                    operator_without_star += 1;
                }
            }
        }
    }
    json!({
        "cases": cases,
        "corpus": "F_2 dim-2 anti-flexible algebras, adjoint and dual actions, all 16 operators",
        "first_counterexample": first,
        "name": "module-product-converse-findings",
        "operator_without_star": operator_without_star,
        "star_without_operator": star_without_operator,
    })
}

/// Sweep record for the morphism-graph converse question: quadruple-graph
/// closure without the direct morphism conditions.
pub fn morphism_graph_converse_doc() -> Value {
    use antiflex::algebra::check_span_closed;
    use antiflex::omod::{check_o_morphism, o_morphism_graph, Bimodule, ModuleOperator};
    use antiflex::rota::{check_rb_morphism, rb_morphism_graph};

    let f2 = field(2);
    let f3 = field(3);

    let d2 = Algebra::from_integer_table(f2, &[&[&[1, 0], &[0, 1]], &[&[0, 1], &[0, 0]]]);
    let b = Bimodule::adjoint(d2);
    let shift2 = ModuleOperator::new(LinearMap::from_integers(f2, &[&[0, 0], &[1, 0]]));
    let mut o_cases = 0usize;
    let mut o_closed_without_morphism = 0usize;
    let mut o_morphism_without_closure = 0usize;
    for pi in 0..16u128 {
        for qi in 0..16u128 {
            let phi = nth_square_matrix(f2, 2, pi);
            let psi = nth_square_matrix(f2, 2, qi);
            let direct = check_o_morphism((&b, &shift2), (&b, &shift2), &phi, &psi)
                .unwrap()
                .pass;
            let (ambient, gens) =
                o_morphism_graph((&b, &shift2), (&b, &shift2), &phi, &psi).unwrap();
            let closed = check_span_closed(&ambient, &gens).unwrap().pass;
            o_cases += 1;
            if closed && !direct {
                o_closed_without_morphism += 1;
            }
            if direct && !closed {
                o_morphism_without_closure += 1;
            }
        }
    }

    let d3 = dual_numbers_f3();
    let shift3 = LinearMap::from_integers(f3, &[&[0, 0], &[1, 0]]);
    let rb = WeightedOperator::new(shift3, Scalar::from_integer(f3, 0)).unwrap();
    let mut rb_cases = 0usize;
    let mut rb_closed_without_morphism = 0usize;
    let mut rb_morphism_without_closure = 0usize;
    for pi in 0..81u128 {
        let phi = nth_square_matrix(f3, 3, pi);
        let direct = check_rb_morphism((&d3, &rb), (&d3, &rb), &phi).unwrap().pass;
        let (ambient, gens) = rb_morphism_graph((&d3, &rb), (&d3, &rb), &phi).unwrap();
        let closed = check_span_closed(&ambient, &gens).unwrap().pass;
        rb_cases += 1;
        if closed && !direct {
            rb_closed_without_morphism += 1;
        }
        if direct && !closed {
            rb_morphism_without_closure += 1;
        }
    }

    json!({
        "name": "morphism-graph-converse-findings",
        "operator_graph": {
            "cases": o_cases,
            "closed_without_morphism": o_closed_without_morphism,
            "corpus": "nilpotent shift on the adjoint module of the dual numbers mod 2, all 256 map pairs",
            "morphism_without_closure": o_morphism_without_closure,
        },
        "weighted_graph": {
            "cases": rb_cases,
            "closed_without_morphism": rb_closed_without_morphism,
            "corpus": "nilpotent shift at weight 0 on the dual numbers mod 3, all 81 maps",
            "morphism_without_closure": rb_morphism_without_closure,
        },
    })
}

/// Sweep record for deformations of left-symmetric bases: both operator
/// families, induced products checked for left symmetry, plus the
/// deformation homomorphism identity.
pub fn prelie_findings_doc() -> Value {
    let f3 = field(3);
    let lsym3 =
        enumerate_algebras(f3, 2, Some(AlgebraIdentity::LeftSymmetric), DEFAULT_BUDGET, 4)
            .unwrap();
    let mut rb_cases = 0usize;
    let mut rb_violations = 0usize;
    let mut nj_cases = 0usize;
    let mut nj_violations = 0usize;
    for a in &lsym3.hits {
        for widx in 0..3i64 {
            let w = Scalar::from_integer(f3, widx);
            let kind = OperatorKind::RotaBaxter(w.clone());
            for m in enumerate_operators(a, &kind, DEFAULT_BUDGET, 1).unwrap().hits {
                rb_cases += 1;
                let op = WeightedOperator::new(m, w.clone()).unwrap();
                let induced = rb_induced_product(a, &op).unwrap();
                if !check_identity(&induced, AlgebraIdentity::LeftSymmetric).pass {
                    rb_violations += 1;
                }
            }
        }
        for m in enumerate_operators(a, &OperatorKind::Nijenhuis, DEFAULT_BUDGET, 1)
            .unwrap()
            .hits
        {
            nj_cases += 1;
            let induced = nj_induced_product(a, &m).unwrap();
            if !check_identity(&induced, AlgebraIdentity::LeftSymmetric).pass {
                nj_violations += 1;
            }
            for i in 0..2 {
                for j in 0..2 {
                    let lhs = m.apply(induced.basis_product(i, j));
                    let rhs = a.multiply(&m.column(i), &m.column(j)).unwrap();
                    assert_eq!(lhs, rhs, "deformation homomorphism");
                }
            }
        }
    }
    json!({
        "corpus": "F_3 dim-2 left-symmetric algebras, all weighted and torsion-free operator hits",
        "name": "pre-lie-deformation-findings",
        "nijenhuis": { "cases": nj_cases, "left_symmetric_violations": nj_violations },
        "rota_baxter": { "cases": rb_cases, "left_symmetric_violations": rb_violations },
    })
}
