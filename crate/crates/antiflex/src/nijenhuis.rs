//! Nijenhuis operators: torsion, the deformed product and its associator
//! expansion, the conditional splitting pair, the induced left-symmetric
//! algebra, correspondences with weighted Rota-Baxter operators, the
//! empirical power suite, and the complex-structure double.

use crate::algebra::{Algebra, BlockLayout};
use crate::error::{Error, Result};
use crate::identities::{check_identity, AlgebraIdentity, PreAntiFlexible};
use crate::linalg::{LinearMap, Vector};
use crate::report::{CheckReport, SuiteClaim, SuiteReport};
use crate::rota::{check_rota_baxter, homomorphism_report, pencil_compatibility, WeightedOperator};
use crate::scalar::Scalar;

fn validate(a: &Algebra, n: &LinearMap) -> Result<()> {
    if !n.is_square() || n.rows() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} on algebra of dimension {}",
            n.rows(),
            n.cols(),
            a.dim()
        )));
    }
    if n.field() != a.field() {
        return Err(Error::FieldMismatch(format!(
            "operator over {}, algebra over {}",
            n.field(),
            a.field()
        )));
    }
    Ok(())
}

fn require_odd_characteristic(a: &Algebra) -> Result<()> {
    if a.field().characteristic() == 2 {
        return Err(Error::CharacteristicObstruction { p: 2, divisor: 2 });
    }
    Ok(())
}

/// `T_N(x,y) = N(x)N(y) - N(N(x)y + xN(y) - N(xy))`, the obstruction to `N`
/// deforming the product.
pub fn nijenhuis_torsion(
    a: &Algebra,
    n: &LinearMap,
    x: &Vector,
    y: &Vector,
) -> Result<Vector> {
    validate(a, n)?;
    a.check_vector(x)?;
    a.check_vector(y)?;
    Ok(torsion_vec(a, n, x, y))
}

fn torsion_vec(a: &Algebra, n: &LinearMap, x: &Vector, y: &Vector) -> Vector {
    let nx = n.apply(x);
    let ny = n.apply(y);
    let mut inner = a.mul_vec(&nx, y).add(&a.mul_vec(x, &ny));
    inner = inner.sub(&n.apply(&a.mul_vec(x, y)));
    a.mul_vec(&nx, &ny).sub(&n.apply(&inner))
}

/// Passes exactly when the torsion vanishes at all basis pairs.
pub fn check_nijenhuis(a: &Algebra, n: &LinearMap) -> Result<CheckReport> {
    validate(a, n)?;
    let dim = a.dim();
    let field = a.field();
    for i in 0..dim {
        let ei = Vector::basis(field, dim, i);
        for j in 0..dim {
            let ej = Vector::basis(field, dim, j);
            let t = torsion_vec(a, n, &ei, &ej);
            if !t.is_zero() {
                return Ok(CheckReport::fail("nijenhuis", "torsion", vec![i, j], t));
            }
        }
    }
    Ok(CheckReport::pass("nijenhuis"))
}

/// The deformed product `x *_N y = N(x)y + xN(y) - N(xy)`. Total for any
/// linear map; anti-flexible when the torsion vanishes.
pub fn nj_induced_product(a: &Algebra, n: &LinearMap) -> Result<Algebra> {
    validate(a, n)?;
    let dim = a.dim();
    let field = a.field();
    let mut table = vec![vec![Vector::zero(field, dim); dim]; dim];
    for i in 0..dim {
        let ei = Vector::basis(field, dim, i);
        let ni = n.column(i);
        for j in 0..dim {
            let ej = Vector::basis(field, dim, j);
            let nj = n.column(j);
            let prod = a
                .mul_vec(&ni, &ej)
                .add(&a.mul_vec(&ei, &nj))
                .sub(&n.apply(a.basis_product(i, j)));
            table[i][j] = prod;
        }
    }
    Algebra::new(field, table)
}

/// The seven-term expansion of the deformed associator: the three doubly
/// decorated associators, the twice-applied operator on the plain
/// associator, minus the operator applied to each singly decorated
/// associator. Cross-check oracle only.
pub fn nj_associator_expansion(
    a: &Algebra,
    n: &LinearMap,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector> {
    validate(a, n)?;
    a.check_vector(x)?;
    a.check_vector(y)?;
    a.check_vector(z)?;
    let nx = n.apply(x);
    let ny = n.apply(y);
    let nz = n.apply(z);
    let mut acc = a.assoc_vec(&nx, &ny, z);
    acc = acc.add(&a.assoc_vec(&nx, y, &nz));
    acc = acc.add(&a.assoc_vec(x, &ny, &nz));
    acc = acc.add(&n.apply(&n.apply(&a.assoc_vec(x, y, z))));
    acc = acc.sub(&n.apply(&a.assoc_vec(&nx, y, z)));
    acc = acc.sub(&n.apply(&a.assoc_vec(x, &ny, z)));
    acc = acc.sub(&n.apply(&a.assoc_vec(x, y, &nz)));
    Ok(acc)
}

/// The splitting pair `x>y = N(x)y - (1/2)N(xy)`, `x<y = xN(y) - (1/2)N(xy)`.
/// Needs characteristic different from 2; validity is equivalent to the
/// deformation condition below.
pub fn nj_pre_anti_flexible(a: &Algebra, n: &LinearMap) -> Result<PreAntiFlexible> {
    validate(a, n)?;
    let half = a.field().one().div_int(2)?;
    let dim = a.dim();
    let field = a.field();
    let mut prec = vec![vec![Vector::zero(field, dim); dim]; dim];
    let mut succ = vec![vec![Vector::zero(field, dim); dim]; dim];
    for i in 0..dim {
        let ei = Vector::basis(field, dim, i);
        let ni = n.column(i);
        for j in 0..dim {
            let ej = Vector::basis(field, dim, j);
            let nj = n.column(j);
            let half_n = n.apply(a.basis_product(i, j)).scale(&half);
            prec[i][j] = a.mul_vec(&ei, &nj).sub(&half_n);
            succ[i][j] = a.mul_vec(&ni, &ej).sub(&half_n);
        }
    }
    PreAntiFlexible::new(Algebra::new(field, prec)?, Algebra::new(field, succ)?)
}

/// The deformation condition `(3/2) N(N(zy)x + xN(yz)) = N^2((zy)x + x(yz))`
/// at all basis triples (x, y, z). In characteristic 3 the scaled side is
/// identically zero; the report is flagged so the vacuity is visible.
pub fn check_nj_condition(a: &Algebra, n: &LinearMap) -> Result<CheckReport> {
    validate(a, n)?;
    require_odd_characteristic(a)?;
    let three_half = Scalar::from_integer(a.field(), 3).div_int(2)?;
    let char3 = a.field().characteristic() == 3;
    let dim = a.dim();
    let field = a.field();
    let basis: Vec<Vector> = (0..dim).map(|i| Vector::basis(field, dim, i)).collect();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            for (k, z) in basis.iter().enumerate() {
                let zy = a.mul_vec(z, y);
                let yz = a.mul_vec(y, z);
                let lhs_inner = a.mul_vec(&n.apply(&zy), x).add(&a.mul_vec(x, &n.apply(&yz)));
                let lhs = n.apply(&lhs_inner).scale(&three_half);
                let rhs_inner = a.mul_vec(&zy, x).add(&a.mul_vec(x, &yz));
                let rhs = n.apply(&n.apply(&rhs_inner));
                let diff = lhs.sub(&rhs);
                if !diff.is_zero() {
                    let report = CheckReport::fail(
                        "nijenhuis-splitting-condition",
                        "deformation-condition",
                        vec![i, j, k],
                        diff,
                    );
                    return Ok(if char3 {
                        report.with_note("characteristic 3: the 3/2-scaled side is identically zero")
                    } else {
                        report
                    });
                }
            }
        }
    }
    let report = CheckReport::pass("nijenhuis-splitting-condition");
    Ok(if char3 {
        report.with_note("characteristic 3: the 3/2-scaled side is identically zero")
    } else {
        report
    })
}

/// `x o y = [N(x),y] - (1/2)N([x,y])` on the commutator bracket;
/// left-symmetric exactly when the deformation condition holds.
pub fn nj_left_symmetric(a: &Algebra, n: &LinearMap) -> Result<Algebra> {
    validate(a, n)?;
    let half = a.field().one().div_int(2)?;
    let bracket = a.commutator_algebra();
    let dim = a.dim();
    let field = a.field();
    let mut table = vec![vec![Vector::zero(field, dim); dim]; dim];
    for i in 0..dim {
        let ni = n.column(i);
        for j in 0..dim {
            let ej = Vector::basis(field, dim, j);
            let prod = bracket
                .mul_vec(&ni, &ej)
                .sub(&n.apply(bracket.basis_product(i, j)).scale(&half));
            table[i][j] = prod;
        }
    }
    Algebra::new(field, table)
}

/// One weighted-operator verdict inside a bridge case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeRbVerdict {
    /// Which operator was tested: `N`, `N+Id` or `N-Id`.
    pub operator: String,
    /// The weight it was tested at, in canonical text form.
    pub weight: String,
    pub pass: bool,
}

/// One applicable correspondence, keyed by how `N^2` degenerates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeCase {
    /// `square-zero`, `idempotent` or `involutive`.
    pub classification: String,
    pub rb_verdicts: Vec<BridgeRbVerdict>,
    /// Whether the Nijenhuis verdict equals every weighted-operator verdict
    /// of this case.
    pub agree: bool,
}

/// Report of the Nijenhuis / Rota-Baxter correspondences for operators with
/// `N^2` in {0, N, Id}. Empty `cases` means no correspondence applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub nijenhuis_pass: bool,
    pub cases: Vec<BridgeCase>,
}

impl BridgeReport {
    pub fn applicable(&self) -> bool {
        !self.cases.is_empty()
    }

    pub fn all_agree(&self) -> bool {
        self.cases.iter().all(|c| c.agree)
    }
}

/// Classifies `N` by the shape of `N^2` and evaluates both sides of each
/// applicable equivalence: square-zero operators against weight 0,
/// idempotents against weight -1, involutions against `N+Id` at weight -2
/// and `N-Id` at weight +2.
pub fn nj_rb_bridge(a: &Algebra, n: &LinearMap) -> Result<BridgeReport> {
    validate(a, n)?;
    let field = a.field();
    let nijenhuis_pass = check_nijenhuis(a, n)?.pass;
    let n2 = n.compose(n);
    let id = LinearMap::identity(field, a.dim());
    let mut cases = Vec::new();

    let mut push_case = |classification: &str, verdicts: Vec<BridgeRbVerdict>| {
        let agree = verdicts.iter().all(|v| v.pass == nijenhuis_pass);
        cases.push(BridgeCase {
            classification: classification.to_string(),
            rb_verdicts: verdicts,
            agree,
        });
    };

    if n2.is_zero() {
        let w = Scalar::from_integer(field, 0);
        let pass = check_rota_baxter(a, &WeightedOperator::new(n.clone(), w.clone())?)?.pass;
        push_case(
            "square-zero",
            vec![BridgeRbVerdict {
                operator: "N".to_string(),
                weight: w.render(),
                pass,
            }],
        );
    }
    if n2 == *n {
        let w = Scalar::from_integer(field, -1);
        let pass = check_rota_baxter(a, &WeightedOperator::new(n.clone(), w.clone())?)?.pass;
        push_case(
            "idempotent",
            vec![BridgeRbVerdict {
                operator: "N".to_string(),
                weight: w.render(),
                pass,
            }],
        );
    }
    if n2 == id {
        let plus = n.add(&id);
        let minus = n.sub(&id);
        let w_minus2 = Scalar::from_integer(field, -2);
        let w_plus2 = Scalar::from_integer(field, 2);
        let pass_plus =
            check_rota_baxter(a, &WeightedOperator::new(plus, w_minus2.clone())?)?.pass;
        let pass_minus =
            check_rota_baxter(a, &WeightedOperator::new(minus, w_plus2.clone())?)?.pass;
        push_case(
            "involutive",
            vec![
                BridgeRbVerdict {
                    operator: "N+Id".to_string(),
                    weight: w_minus2.render(),
                    pass: pass_plus,
                },
                BridgeRbVerdict {
                    operator: "N-Id".to_string(),
                    weight: w_plus2.render(),
                    pass: pass_minus,
                },
            ],
        );
    }
    Ok(BridgeReport {
        nijenhuis_pass,
        cases,
    })
}

/// Empirical mirror of the operator-power suite for Nijenhuis operators;
/// same claim layout, torsion in place of the weighted identity.
pub fn nj_power_suite(a: &Algebra, n: &LinearMap, maxpq: u32) -> Result<SuiteReport> {
    validate(a, n)?;
    if maxpq < 1 {
        return Err(Error::PreconditionFailed(
            "power suite needs maxpq >= 1".to_string(),
        ));
    }
    let mut induced = Vec::new();
    for k in 1..=2 * maxpq {
        induced.push(nj_induced_product(a, &n.pow(k))?);
    }
    let product_of = |p: u32| &induced[(p - 1) as usize];

    let mut claims = Vec::new();
    for p in 1..=maxpq {
        claims.push(SuiteClaim {
            claim: "induced-product-anti-flexible".to_string(),
            p,
            q: 0,
            report: check_identity(product_of(p), AlgebraIdentity::AntiFlexible),
        });
    }
    for p in 1..=maxpq {
        for q in 1..=maxpq {
            claims.push(SuiteClaim {
                claim: "power-is-nijenhuis".to_string(),
                p,
                q,
                report: check_nijenhuis(product_of(p), &n.pow(q))?,
            });
            let iterated = nj_induced_product(product_of(p), &n.pow(q))?;
            claims.push(SuiteClaim {
                claim: "iterated-product-coincides".to_string(),
                p,
                q,
                report: tensor_equal_report(
                    "iterated-product-coincides",
                    &iterated,
                    product_of(p + q),
                ),
            });
            claims.push(SuiteClaim {
                claim: "products-compatible".to_string(),
                p,
                q,
                report: pencil_compatibility(product_of(p), product_of(q)),
            });
            claims.push(SuiteClaim {
                claim: "power-homomorphism".to_string(),
                p,
                q,
                report: homomorphism_report(
                    "power-homomorphism",
                    product_of(p + q),
                    product_of(p),
                    &n.pow(q),
                ),
            });
        }
    }
    Ok(SuiteReport {
        name: "nj-power-suite".to_string(),
        claims,
    })
}

fn tensor_equal_report(name: &str, left: &Algebra, right: &Algebra) -> CheckReport {
    for i in 0..left.dim() {
        for j in 0..left.dim() {
            let diff = left.basis_product(i, j).sub(right.basis_product(i, j));
            if !diff.is_zero() {
                return CheckReport::fail(name, "tensor-equality", vec![i, j], diff);
            }
        }
    }
    CheckReport::pass(name)
}

/// The doubled space with its bracket, the quarter-turn map, and the
/// verified properties.
#[derive(Debug, Clone)]
pub struct ComplexStructureDouble {
    /// Bracket algebra on the doubled space: first block the commutator of
    /// the base product, acting on the second block through left-minus-right
    /// multiplication.
    pub algebra: Algebra,
    /// The quarter-turn `(u, v) -> (-v, u)`.
    pub j: LinearMap,
    /// Lie axioms of the double, `J^2 = -Id`, and the integrability identity.
    pub report: CheckReport,
}

/// Builds the doubled bracket `[(x,a),(y,b)] = ([x,y], (L-R)(x)b - (L-R)(y)a)`
/// and checks that the quarter-turn is an integrable almost-complex map on
/// it. Characteristic 2 is rejected so that `-Id` and `Id` stay distinct.
pub fn lie_double_with_complex_structure(a: &Algebra) -> Result<ComplexStructureDouble> {
    require_odd_characteristic(a)?;
    let field = a.field();
    let n = a.dim();
    let bracket = a.commutator_algebra();
    let layout = BlockLayout::new(field, vec![n, n]);
    let total = layout.total_dim();
    let mut table = vec![vec![Vector::zero(field, total); total]; total];
    for i in 0..n {
        for j in 0..n {
            let br = bracket.basis_product(i, j);
            table[i][j] = layout.embed(0, br)?;
            table[i][n + j] = layout.embed(1, br)?;
            table[n + i][j] = layout.embed(1, br)?;
        }
    }
    let double = Algebra::new(field, table)?;

    let id = LinearMap::identity(field, n);
    let zero = LinearMap::zero(field, n, n);
    let neg_id = id.scale(&Scalar::from_integer(field, -1));
    let j = LinearMap::from_blocks(&zero, &neg_id, &id, &zero);

    let report = complex_structure_report(&double, &j);
    Ok(ComplexStructureDouble {
        algebra: double,
        j,
        report,
    })
}

fn complex_structure_report(double: &Algebra, j: &LinearMap) -> CheckReport {
    let name = "complex-structure-double";
    let anti = check_identity(double, AlgebraIdentity::Antisymmetric);
    if !anti.pass {
        let w = anti.witness.unwrap();
        return CheckReport::fail(name, "antisymmetric", w.indices, w.discrepancy);
    }
    let jac = check_identity(double, AlgebraIdentity::Jacobi);
    if !jac.pass {
        let w = jac.witness.unwrap();
        return CheckReport::fail(name, "jacobi", w.indices, w.discrepancy);
    }
    let field = double.field();
    let total = double.dim();
    let j_squared_plus_id = j.compose(j).add(&LinearMap::identity(field, total));
    for col in 0..total {
        let diff = j_squared_plus_id.column(col);
        if !diff.is_zero() {
            return CheckReport::fail(name, "j-squared", vec![col], diff);
        }
    }
    for i in 0..total {
        let xi = Vector::basis(field, total, i);
        let jx = j.apply(&xi);
        for k in 0..total {
            let yk = Vector::basis(field, total, k);
            let jy = j.apply(&yk);
            let mut lhs = j.apply(double.basis_product(i, k));
            lhs = lhs.sub(&double.mul_vec(&jx, &yk));
            lhs = lhs.sub(&double.mul_vec(&xi, &jy));
            lhs = lhs.sub(&j.apply(&double.mul_vec(&jx, &jy)));
            if !lhs.is_zero() {
                return CheckReport::fail(name, "integrability", vec![i, k], lhs);
            }
        }
    }
    CheckReport::pass(name)
}
