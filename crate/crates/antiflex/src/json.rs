//! Canonical JSON encodings of every on-disk object.
//!
//! Keys are emitted in sorted order and scalars in canonical text form, so
//! printing after parsing reproduces a canonical file byte for byte. Scalars
//! are strings (`"a"`, `"a/b"`, or a residue digit), never JSON numbers.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, BilinearForm};
use crate::error::{Error, Result};
use crate::identities::PreAntiFlexible;
use crate::linalg::{LinearMap, Vector};
use crate::nijenhuis::BridgeReport;
use crate::omod::Bimodule;
use crate::report::{CheckReport, SuiteReport};
use crate::rota::WeightedOperator;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Serialize, Deserialize)]
struct FieldDto {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<String>>,
    dim: usize,
    field: FieldDto,
    product: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct LinearMapDto {
    cols: usize,
    entries: Vec<Vec<String>>,
    field: FieldDto,
    rows: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct BilinearFormDto {
    dim: usize,
    field: FieldDto,
    omega: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct BimoduleDto {
    algebra: AlgebraDto,
    left: Vec<Vec<Vec<String>>>,
    moddim: usize,
    right: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PairDto {
    dim: usize,
    field: FieldDto,
    prec: Vec<Vec<Vec<String>>>,
    succ: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct WeightedOperatorDto {
    operator: LinearMapDto,
    weight: String,
}

fn field_dto(field: FieldSpec) -> FieldDto {
    match field {
        FieldSpec::Rationals => FieldDto {
            kind: "Q".to_string(),
            p: None,
        },
        FieldSpec::PrimeField { p } => FieldDto {
            kind: "Fp".to_string(),
            p: Some(p),
        },
    }
}

fn field_from_dto(dto: &FieldDto) -> Result<FieldSpec> {
    match (dto.kind.as_str(), dto.p) {
        ("Q", None) => Ok(FieldSpec::Rationals),
        ("Q", Some(_)) => Err(Error::Parse("field Q does not take p".to_string())),
        ("Fp", Some(p)) => FieldSpec::prime(p),
        ("Fp", None) => Err(Error::Parse("field Fp needs p".to_string())),
        (other, _) => Err(Error::Parse(format!("unknown field kind `{other}`"))),
    }
}

fn render_tensor(table: &Algebra) -> Vec<Vec<Vec<String>>> {
    (0..table.dim())
        .map(|i| {
            (0..table.dim())
                .map(|j| table.basis_product(i, j).render())
                .collect()
        })
        .collect()
}

fn parse_vector(field: FieldSpec, coords: &[String], dim: usize) -> Result<Vector> {
    if coords.len() != dim {
        return Err(Error::Parse(format!(
            "coordinate list of length {}, expected {dim}",
            coords.len()
        )));
    }
    Ok(Vector::new(
        coords
            .iter()
            .map(|s| Scalar::parse(field, s))
            .collect::<Result<_>>()?,
    ))
}

fn parse_tensor(field: FieldSpec, tensor: &[Vec<Vec<String>>], dim: usize) -> Result<Algebra> {
    if tensor.len() != dim {
        return Err(Error::Parse(format!(
            "product table with {} rows, expected {dim}",
            tensor.len()
        )));
    }
    let mut table = Vec::with_capacity(dim);
    for row in tensor {
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "product row of length {}, expected {dim}",
                row.len()
            )));
        }
        table.push(
            row.iter()
                .map(|coords| parse_vector(field, coords, dim))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Algebra::new(field, table)
}

/// Pretty canonical document plus trailing newline, the on-disk form.
pub fn to_canonical_string(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable value");
    out.push('\n');
    out
}

fn from_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_value<T: Serialize>(dto: &T) -> Value {
    serde_json::to_value(dto).expect("serializable dto")
}

pub fn algebra_to_value(a: &Algebra) -> Value {
    to_value(&AlgebraDto {
        basis: a.labels().map(<[String]>::to_vec),
        dim: a.dim(),
        field: field_dto(a.field()),
        product: render_tensor(a),
    })
}

pub fn algebra_to_json(a: &Algebra) -> String {
    to_canonical_string(&algebra_to_value(a))
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let dto: AlgebraDto = from_str(text)?;
    let field = field_from_dto(&dto.field)?;
    let algebra = parse_tensor(field, &dto.product, dto.dim)?;
    match dto.basis {
        Some(labels) => algebra.with_labels(labels),
        None => Ok(algebra),
    }
}

pub fn linear_map_to_value(m: &LinearMap) -> Value {
    to_value(&LinearMapDto {
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.entry(i, j).render()).collect())
            .collect(),
        field: field_dto(m.field()),
        rows: m.rows(),
    })
}

pub fn linear_map_to_json(m: &LinearMap) -> String {
    to_canonical_string(&linear_map_to_value(m))
}

pub fn parse_linear_map(text: &str) -> Result<LinearMap> {
    let dto: LinearMapDto = from_str(text)?;
    let field = field_from_dto(&dto.field)?;
    if dto.entries.len() != dto.rows {
        return Err(Error::Parse(format!(
            "matrix with {} rows, expected {}",
            dto.entries.len(),
            dto.rows
        )));
    }
    let mut entries = Vec::with_capacity(dto.rows);
    for row in &dto.entries {
        if row.len() != dto.cols {
            return Err(Error::Parse(format!(
                "matrix row of length {}, expected {}",
                row.len(),
                dto.cols
            )));
        }
        entries.push(
            row.iter()
                .map(|s| Scalar::parse(field, s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    LinearMap::new(field, entries)
}

pub fn bilinear_form_to_value(w: &BilinearForm) -> Value {
    to_value(&BilinearFormDto {
        dim: w.dim(),
        field: field_dto(w.field()),
        omega: (0..w.dim())
            .map(|i| (0..w.dim()).map(|j| w.entry(i, j).render()).collect())
            .collect(),
    })
}

pub fn bilinear_form_to_json(w: &BilinearForm) -> String {
    to_canonical_string(&bilinear_form_to_value(w))
}

pub fn parse_bilinear_form(text: &str) -> Result<BilinearForm> {
    let dto: BilinearFormDto = from_str(text)?;
    let field = field_from_dto(&dto.field)?;
    if dto.omega.len() != dto.dim {
        return Err(Error::Parse(format!(
            "form with {} rows, expected {}",
            dto.omega.len(),
            dto.dim
        )));
    }
    let mut rows = Vec::with_capacity(dto.dim);
    for row in &dto.omega {
        if row.len() != dto.dim {
            return Err(Error::Parse(format!(
                "form row of length {}, expected {}",
                row.len(),
                dto.dim
            )));
        }
        rows.push(
            row.iter()
                .map(|s| Scalar::parse(field, s))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    BilinearForm::new(field, rows)
}

pub fn bimodule_to_value(b: &Bimodule) -> Value {
    let render_actions = |tensor: &[Vec<Vector>]| -> Vec<Vec<Vec<String>>> {
        tensor
            .iter()
            .map(|row| row.iter().map(Vector::render).collect())
            .collect()
    };
    to_value(&BimoduleDto {
        algebra: serde_json::from_value(algebra_to_value(b.algebra())).expect("round-trip dto"),
        left: render_actions(b.left_tensor()),
        moddim: b.moddim(),
        right: render_actions(b.right_tensor()),
    })
}

pub fn bimodule_to_json(b: &Bimodule) -> String {
    to_canonical_string(&bimodule_to_value(b))
}

pub fn parse_bimodule(text: &str) -> Result<Bimodule> {
    let dto: BimoduleDto = from_str(text)?;
    let field = field_from_dto(&dto.algebra.field)?;
    let algebra = parse_tensor(field, &dto.algebra.product, dto.algebra.dim)?;
    let algebra = match &dto.algebra.basis {
        Some(labels) => algebra.with_labels(labels.clone())?,
        None => algebra,
    };
    let parse_actions = |tensor: &[Vec<Vec<String>>], rows: usize, cols: usize| -> Result<Vec<Vec<Vector>>> {
        if tensor.len() != rows {
            return Err(Error::Parse(format!(
                "action tensor with {} rows, expected {rows}",
                tensor.len()
            )));
        }
        tensor
            .iter()
            .map(|row| {
                if row.len() != cols {
                    return Err(Error::Parse(format!(
                        "action row of length {}, expected {cols}",
                        row.len()
                    )));
                }
                row.iter()
                    .map(|coords| parse_vector(field, coords, dto.moddim))
                    .collect()
            })
            .collect()
    };
    let left = parse_actions(&dto.left, algebra.dim(), dto.moddim)?;
    let right = parse_actions(&dto.right, dto.moddim, algebra.dim())?;
    Bimodule::new(algebra, dto.moddim, left, right)
}

pub fn pair_to_value(p: &PreAntiFlexible) -> Value {
    to_value(&PairDto {
        dim: p.dim(),
        field: field_dto(p.field()),
        prec: render_tensor(p.prec()),
        succ: render_tensor(p.succ()),
    })
}

pub fn pair_to_json(p: &PreAntiFlexible) -> String {
    to_canonical_string(&pair_to_value(p))
}

pub fn parse_pair(text: &str) -> Result<PreAntiFlexible> {
    let dto: PairDto = from_str(text)?;
    let field = field_from_dto(&dto.field)?;
    PreAntiFlexible::new(
        parse_tensor(field, &dto.prec, dto.dim)?,
        parse_tensor(field, &dto.succ, dto.dim)?,
    )
}

pub fn weighted_operator_to_value(op: &WeightedOperator) -> Value {
    to_value(&WeightedOperatorDto {
        operator: serde_json::from_value(linear_map_to_value(op.map())).expect("round-trip dto"),
        weight: op.weight().render(),
    })
}

pub fn parse_weighted_operator(text: &str) -> Result<WeightedOperator> {
    let dto: WeightedOperatorDto = from_str(text)?;
    let field = field_from_dto(&dto.operator.field)?;
    let map = parse_linear_map(&serde_json::to_string(&dto.operator).expect("dto"))?;
    WeightedOperator::new(map, Scalar::parse(field, &dto.weight)?)
}

pub fn report_to_value(report: &CheckReport) -> Value {
    let mut value = json!({
        "identity": report.identity,
        "pass": report.pass,
    });
    let map = value.as_object_mut().expect("object");
    if let Some(note) = &report.note {
        map.insert("note".to_string(), json!(note));
    }
    if let Some(witness) = &report.witness {
        map.insert(
            "witness".to_string(),
            json!({
                "clause": witness.clause,
                "discrepancy": witness.discrepancy.render(),
                "indices": witness.indices,
            }),
        );
    }
    value
}

pub fn suite_report_to_value(suite: &SuiteReport) -> Value {
    json!({
        "name": suite.name,
        "pass": suite.all_pass(),
        "claims": suite
            .claims
            .iter()
            .map(|c| {
                json!({
                    "claim": c.claim,
                    "p": c.p,
                    "q": c.q,
                    "report": report_to_value(&c.report),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn bridge_report_to_value(report: &BridgeReport) -> Value {
    json!({
        "applicable": report.applicable(),
        "agree": report.all_agree(),
        "nijenhuis_pass": report.nijenhuis_pass,
        "cases": report
            .cases
            .iter()
            .map(|case| {
                json!({
                    "classification": case.classification,
                    "agree": case.agree,
                    "rb_verdicts": case
                        .rb_verdicts
                        .iter()
                        .map(|v| {
                            json!({
                                "operator": v.operator,
                                "pass": v.pass,
                                "weight": v.weight,
                            })
                        })
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}
