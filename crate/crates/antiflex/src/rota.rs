//! Weighted Rota-Baxter operators: verification, the induced product and its
//! associator expansion, the induced splitting pair and symmetric algebras,
//! operator-graph characterizations, morphisms, and the empirical power
//! suite.

use crate::algebra::{Algebra, BlockLayout};
use crate::error::{Error, Result};
use crate::identities::{check_identity, AlgebraIdentity, PreAntiFlexible};
use crate::linalg::{LinearMap, Vector};
use crate::report::{CheckReport, SuiteClaim, SuiteReport};
use crate::scalar::Scalar;

/// A square operator paired with its weight. Every statement about a
/// Rota-Baxter operator involves both, so they travel together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOperator {
    map: LinearMap,
    weight: Scalar,
}

impl WeightedOperator {
    pub fn new(map: LinearMap, weight: Scalar) -> Result<Self> {
        if !map.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}x{}, expected square",
                map.rows(),
                map.cols()
            )));
        }
        if weight.field() != map.field() {
            return Err(Error::FieldMismatch(format!(
                "weight over {}, operator over {}",
                weight.field(),
                map.field()
            )));
        }
        Ok(WeightedOperator { map, weight })
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    /// Same weight, p-th power of the matrix.
    pub fn power(&self, p: u32) -> WeightedOperator {
        WeightedOperator {
            map: self.map.pow(p),
            weight: self.weight.clone(),
        }
    }

    /// Half the weight, as needed by the splitting constructions. A zero
    /// weight needs no division, so it stays admissible in characteristic 2.
    fn half_weight(&self) -> Result<Scalar> {
        if self.weight.is_zero() {
            Ok(self.weight.clone())
        } else {
            self.weight.div_int(2)
        }
    }
}

fn validate(a: &Algebra, op: &WeightedOperator) -> Result<()> {
    if op.map.rows() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "operator of size {} on algebra of dimension {}",
            op.map.rows(),
            a.dim()
        )));
    }
    if op.map.field() != a.field() {
        return Err(Error::FieldMismatch(format!(
            "operator over {}, algebra over {}",
            op.map.field(),
            a.field()
        )));
    }
    Ok(())
}

/// Decides `R(a)R(b) = R(aR(b) + R(a)b) + w R(ab)` at all basis pairs;
/// bilinearity makes that sufficient.
pub fn check_rota_baxter(a: &Algebra, op: &WeightedOperator) -> Result<CheckReport> {
    validate(a, op)?;
    let n = a.dim();
    let field = a.field();
    let r_cols: Vec<Vector> = (0..n).map(|j| op.map.column(j)).collect();
    for i in 0..n {
        let ei = Vector::basis(field, n, i);
        for j in 0..n {
            let ej = Vector::basis(field, n, j);
            let lhs = a.mul_vec(&r_cols[i], &r_cols[j]);
            let inner = a.mul_vec(&ei, &r_cols[j]).add(&a.mul_vec(&r_cols[i], &ej));
            let mut rhs = op.map.apply(&inner);
            rhs.add_scaled(&op.weight, &op.map.apply(a.basis_product(i, j)));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "rota-baxter",
                    "operator-identity",
                    vec![i, j],
                    diff,
                ));
            }
        }
    }
    Ok(CheckReport::pass("rota-baxter"))
}

/// The deformed product `a *_R b = aR(b) + R(a)b + w ab`. Total for any
/// linear map; it is anti-flexible when the operator identity holds.
pub fn rb_induced_product(a: &Algebra, op: &WeightedOperator) -> Result<Algebra> {
    validate(a, op)?;
    let n = a.dim();
    let field = a.field();
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        let ei = Vector::basis(field, n, i);
        let ri = op.map.column(i);
        for j in 0..n {
            let ej = Vector::basis(field, n, j);
            let rj = op.map.column(j);
            let mut prod = a.mul_vec(&ei, &rj).add(&a.mul_vec(&ri, &ej));
            prod.add_scaled(&op.weight, a.basis_product(i, j));
            table[i][j] = prod;
        }
    }
    Algebra::new(field, table)
}

/// The seven-term expansion of the deformed associator in terms of plain
/// associators with operator-decorated slots. Used as an independent
/// cross-check against the associator of the induced product.
pub fn rb_associator_expansion(
    a: &Algebra,
    op: &WeightedOperator,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector> {
    validate(a, op)?;
    a.check_vector(x)?;
    a.check_vector(y)?;
    a.check_vector(z)?;
    let rx = op.map.apply(x);
    let ry = op.map.apply(y);
    let rz = op.map.apply(z);
    let w = &op.weight;
    let mut acc = a.assoc_vec(x, &ry, &rz);
    acc = acc.add(&a.assoc_vec(&rx, y, &rz));
    acc = acc.add(&a.assoc_vec(&rx, &ry, z));
    acc.add_scaled(w, &a.assoc_vec(&rx, y, z));
    acc.add_scaled(w, &a.assoc_vec(x, &ry, z));
    acc.add_scaled(w, &a.assoc_vec(x, y, &rz));
    acc.add_scaled(&(w * w), &a.assoc_vec(x, y, z));
    Ok(acc)
}

/// The splitting pair `a<b = aR(b) + (w/2)ab`, `a>b = R(a)b + (w/2)ab`.
/// Its validity is a separate check; for nonzero weight in characteristic 2
/// the division by two is obstructed.
pub fn rb_pre_anti_flexible(a: &Algebra, op: &WeightedOperator) -> Result<PreAntiFlexible> {
    validate(a, op)?;
    let half = op.half_weight()?;
    let n = a.dim();
    let field = a.field();
    let mut prec = vec![vec![Vector::zero(field, n); n]; n];
    let mut succ = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        let ei = Vector::basis(field, n, i);
        let ri = op.map.column(i);
        for j in 0..n {
            let ej = Vector::basis(field, n, j);
            let rj = op.map.column(j);
            let mut p = a.mul_vec(&ei, &rj);
            p.add_scaled(&half, a.basis_product(i, j));
            prec[i][j] = p;
            let mut s = a.mul_vec(&ri, &ej);
            s.add_scaled(&half, a.basis_product(i, j));
            succ[i][j] = s;
        }
    }
    PreAntiFlexible::new(Algebra::new(field, prec)?, Algebra::new(field, succ)?)
}

/// `a*b = [R(a),b] + (w/2)[a,b]` on the commutator bracket.
pub fn rb_left_symmetric(a: &Algebra, op: &WeightedOperator) -> Result<Algebra> {
    validate(a, op)?;
    let half = op.half_weight()?;
    let bracket = a.commutator_algebra();
    let n = a.dim();
    let field = a.field();
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        let ri = op.map.column(i);
        for j in 0..n {
            let ej = Vector::basis(field, n, j);
            let mut prod = bracket.mul_vec(&ri, &ej);
            prod.add_scaled(&half, bracket.basis_product(i, j));
            table[i][j] = prod;
        }
    }
    Algebra::new(field, table)
}

/// `a*b = [a,R(b)] + (w/2)[a,b]` on the commutator bracket.
pub fn rb_right_symmetric(a: &Algebra, op: &WeightedOperator) -> Result<Algebra> {
    validate(a, op)?;
    let half = op.half_weight()?;
    let bracket = a.commutator_algebra();
    let n = a.dim();
    let field = a.field();
    let mut table = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        let ei = Vector::basis(field, n, i);
        for j in 0..n {
            let rj = op.map.column(j);
            let mut prod = bracket.mul_vec(&ei, &rj);
            prod.add_scaled(&half, bracket.basis_product(i, j));
            table[i][j] = prod;
        }
    }
    Algebra::new(field, table)
}

/// The ambient block product on `A + A` used by the operator graph:
/// `(u,a)*(v,b) = (uv, av + ub + w ab)`.
pub fn rb_graph_ambient(a: &Algebra, weight: &Scalar) -> Result<Algebra> {
    if weight.field() != a.field() {
        return Err(Error::FieldMismatch(format!(
            "weight over {}, algebra over {}",
            weight.field(),
            a.field()
        )));
    }
    let n = a.dim();
    let field = a.field();
    let layout = BlockLayout::new(field, vec![n, n]);
    let total = layout.total_dim();
    let mut table = vec![vec![Vector::zero(field, total); total]; total];
    for i in 0..n {
        for j in 0..n {
            let prod = a.basis_product(i, j);
            table[i][j] = layout.embed(0, prod)?;
            table[i][n + j] = layout.embed(1, prod)?;
            table[n + i][j] = layout.embed(1, prod)?;
            table[n + i][n + j] = layout.embed(1, &prod.scale(weight))?;
        }
    }
    Algebra::new(field, table)
}

/// The graph construction: the ambient block algebra together with the
/// generators `(R(e_i), e_i)`. Span closure of the generators is equivalent
/// to the operator identity.
pub fn rb_graph_algebra(a: &Algebra, op: &WeightedOperator) -> Result<(Algebra, Vec<Vector>)> {
    validate(a, op)?;
    let ambient = rb_graph_ambient(a, &op.weight)?;
    let n = a.dim();
    let gens = (0..n)
        .map(|i| op.map.column(i).concat(&Vector::basis(a.field(), n, i)))
        .collect();
    Ok((ambient, gens))
}

/// Morphism of weighted operators: an algebra morphism intertwining the two
/// operators. Unequal weights fail (with a distinguishing clause) rather
/// than error; cross-weight morphisms are not part of the theory.
pub fn check_rb_morphism(
    src: (&Algebra, &WeightedOperator),
    dst: (&Algebra, &WeightedOperator),
    phi: &LinearMap,
) -> Result<CheckReport> {
    let (a, r) = src;
    let (b, s) = dst;
    validate(a, r)?;
    validate(b, s)?;
    if phi.rows() != b.dim() || phi.cols() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "morphism is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            b.dim(),
            a.dim()
        )));
    }
    if phi.field() != a.field() || a.field() != b.field() {
        return Err(Error::FieldMismatch(
            "morphism and algebras must share a field".to_string(),
        ));
    }
    if r.weight != s.weight {
        let diff = Vector::new(vec![&r.weight - &s.weight]);
        return Ok(CheckReport::fail("rb-morphism", "weight", vec![], diff));
    }
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(a.basis_product(i, j));
            let rhs = b.mul_vec(&phi.column(i), &phi.column(j));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "rb-morphism",
                    "product",
                    vec![i, j],
                    diff,
                ));
            }
        }
    }
    let left = phi.compose(&r.map);
    let right = s.map.compose(phi);
    for j in 0..n {
        let diff = left.column(j).sub(&right.column(j));
        if !diff.is_zero() {
            return Ok(CheckReport::fail(
                "rb-morphism",
                "intertwine",
                vec![j],
                diff,
            ));
        }
    }
    Ok(CheckReport::pass("rb-morphism"))
}

/// The quadruple graph of a candidate morphism inside the direct sum of the
/// two ambient block algebras; closure is equivalent to the morphism check.
pub fn rb_morphism_graph(
    src: (&Algebra, &WeightedOperator),
    dst: (&Algebra, &WeightedOperator),
    phi: &LinearMap,
) -> Result<(Algebra, Vec<Vector>)> {
    let (a, r) = src;
    let (b, s) = dst;
    let left = rb_graph_ambient(a, &r.weight)?;
    let right = rb_graph_ambient(b, &s.weight)?;
    let ambient = crate::algebra::direct_sum_algebra(&left, &right)?;
    let n = a.dim();
    let field = a.field();
    let gens = (0..n)
        .map(|i| {
            let ei = Vector::basis(field, n, i);
            let ri = r.map.column(i);
            let first = ri.concat(&ei);
            let second = phi.apply(&ri).concat(&phi.apply(&ei));
            first.concat(&second)
        })
        .collect();
    Ok((ambient, gens))
}

/// Pairs (alpha, beta) probing a two-parameter pencil of products. The
/// anti-flexible residual of `alpha*P + beta*Q` is a quadratic form in
/// (alpha, beta); the grid below contains (1,0), (0,1) and (1,1), which
/// already determine all three coefficient tensors, so passing on the grid
/// decides the identity for every scalar pair.
const PENCIL_SAMPLES: [(i64, i64); 16] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, -1),
    (1, 0),
    (1, 1),
    (1, 2),
    (1, -1),
    (2, 0),
    (2, 1),
    (2, 2),
    (2, -1),
    (-1, 0),
    (-1, 1),
    (-1, 2),
    (-1, -1),
];

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

/// Empirically evaluates the power claims for `1 <= p, q <= maxpq`: the
/// induced products of operator powers, the operator property of powers over
/// deformed products, coincidence of iterated and combined deformations,
/// pairwise compatibility, and the homomorphism property. Each power keeps
/// the operator's declared weight. Nothing is assumed; every claim is
/// reported with a witness on failure.
pub fn rb_power_suite(a: &Algebra, op: &WeightedOperator, maxpq: u32) -> Result<SuiteReport> {
    validate(a, op)?;
    if maxpq < 1 {
        return Err(Error::PreconditionFailed(
            "power suite needs maxpq >= 1".to_string(),
        ));
    }
    let mut induced = Vec::new(); // induced[k] pairs with power k+1
    for k in 1..=2 * maxpq {
        induced.push(rb_induced_product(a, &op.power(k))?);
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
                claim: "power-is-rota-baxter".to_string(),
                p,
                q,
                report: check_rota_baxter(product_of(p), &op.power(q))?,
            });
            let iterated = rb_induced_product(product_of(p), &op.power(q))?;
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
                    &op.map.pow(q),
                ),
            });
        }
    }
    Ok(SuiteReport {
        name: "rb-power-suite".to_string(),
        claims,
    })
}

pub(crate) fn pencil_compatibility(left: &Algebra, right: &Algebra) -> CheckReport {
    let field = left.field();
    for (alpha, beta) in PENCIL_SAMPLES {
        let combo = left
            .tensor_scale(&Scalar::from_integer(field, alpha))
            .tensor_add(&right.tensor_scale(&Scalar::from_integer(field, beta)));
        let inner = check_identity(&combo, AlgebraIdentity::AntiFlexible);
        if !inner.pass {
            let w = inner.witness.unwrap();
            return CheckReport::fail(
                "products-compatible",
                format!("combination alpha={alpha} beta={beta}"),
                w.indices,
                w.discrepancy,
            );
        }
    }
    CheckReport::pass("products-compatible")
}

/// Checks `f(x *_src y) = f(x) *_dst f(y)` at all basis pairs.
pub(crate) fn homomorphism_report(
    name: &str,
    src: &Algebra,
    dst: &Algebra,
    f: &LinearMap,
) -> CheckReport {
    let n = src.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(src.basis_product(i, j));
            let rhs = dst.mul_vec(&f.column(i), &f.column(j));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return CheckReport::fail(name, "homomorphism", vec![i, j], diff);
            }
        }
    }
    CheckReport::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_span_closed;
    use crate::algebra::fixtures::{algebra_e, dual_numbers, nilpotent_shift};
    use crate::identities::check_pre_anti_flexible;
    use crate::identities::fixtures::pair_d;
    use crate::scalar::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn weight(n: i64) -> Scalar {
        Scalar::from_integer(Q, n)
    }

    fn rb_fixture() -> (Algebra, WeightedOperator) {
        let d = dual_numbers(Q);
        let r = WeightedOperator::new(nilpotent_shift(Q), weight(0)).unwrap();
        (d, r)
    }

    #[test]
    fn zero_and_identity_operators() {
        let e = algebra_e(Q);
        let zero = WeightedOperator::new(LinearMap::zero(Q, 2, 2), weight(0)).unwrap();
        assert!(check_rota_baxter(&e, &zero).unwrap().pass);
        // R = Id with weight -1 collapses both sides to ab
        let id = WeightedOperator::new(LinearMap::identity(Q, 2), weight(-1)).unwrap();
        assert!(check_rota_baxter(&e, &id).unwrap().pass);
    }

    #[test]
    fn nilpotent_shift_is_weight_zero_operator_on_dual_numbers() {
        let (d, r) = rb_fixture();
        assert!(check_rota_baxter(&d, &r).unwrap().pass);
        // but e1 -> e1, e2 -> 0 is not: at (e1,e1), lhs = e1 vs rhs = 2e1
        let bad = WeightedOperator::new(
            LinearMap::from_integers(Q, &[&[1, 0], &[0, 0]]),
            weight(0),
        )
        .unwrap();
        let report = check_rota_baxter(&d, &bad).unwrap();
        assert!(!report.pass);
        assert_eq!(report.witness.unwrap().indices, vec![0, 0]);
    }

    #[test]
    fn induced_product_cases() {
        let e = algebra_e(Q);
        let zero = WeightedOperator::new(LinearMap::zero(Q, 2, 2), weight(0)).unwrap();
        assert_eq!(rb_induced_product(&e, &zero).unwrap(), Algebra::zero(Q, 2));
        let id = WeightedOperator::new(LinearMap::identity(Q, 2), weight(-1)).unwrap();
        assert_eq!(rb_induced_product(&e, &id).unwrap(), e);

        let (d, r) = rb_fixture();
        let deformed = rb_induced_product(&d, &r).unwrap();
        assert_eq!(
            deformed.basis_product(0, 0),
            &Vector::from_integers(Q, &[0, 2])
        );
        for (i, j) in [(0, 1), (1, 0), (1, 1)] {
            assert!(deformed.basis_product(i, j).is_zero());
        }
        assert!(check_identity(&deformed, AlgebraIdentity::AntiFlexible).pass);
    }

    #[test]
    fn associator_expansion_degenerate_cases() {
        let e = algebra_e(Q);
        let x = Vector::from_integers(Q, &[1, 2]);
        let y = Vector::from_integers(Q, &[3, -1]);
        let z = Vector::from_integers(Q, &[0, 5]);
        // R = 0, weight 1: only the squared-weight term survives
        let zero = WeightedOperator::new(LinearMap::zero(Q, 2, 2), weight(1)).unwrap();
        assert_eq!(
            rb_associator_expansion(&e, &zero, &x, &y, &z).unwrap(),
            e.associator(&x, &y, &z).unwrap()
        );
        // R = Id, weight 0: three pure-operator terms
        let id = WeightedOperator::new(LinearMap::identity(Q, 2), weight(0)).unwrap();
        assert_eq!(
            rb_associator_expansion(&e, &id, &x, &y, &z).unwrap(),
            e.associator(&x, &y, &z)
                .unwrap()
                .scale(&Scalar::from_integer(Q, 3))
        );
    }

    #[test]
    fn expansion_matches_induced_associator_on_fixture() {
        let (d, r) = rb_fixture();
        let deformed = rb_induced_product(&d, &r).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let (x, y, z) = (
                        Vector::basis(Q, 2, i),
                        Vector::basis(Q, 2, j),
                        Vector::basis(Q, 2, k),
                    );
                    assert_eq!(
                        deformed.associator(&x, &y, &z).unwrap(),
                        rb_associator_expansion(&d, &r, &x, &y, &z).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn splitting_pair_of_the_fixture() {
        let (d, r) = rb_fixture();
        let pair = rb_pre_anti_flexible(&d, &r).unwrap();
        assert_eq!(pair, pair_d(Q));
        assert!(check_pre_anti_flexible(&pair).pass);

        let zero_pair = rb_pre_anti_flexible(
            &Algebra::zero(Q, 2),
            &WeightedOperator::new(LinearMap::zero(Q, 2, 2), weight(0)).unwrap(),
        )
        .unwrap();
        assert_eq!(zero_pair, PreAntiFlexible::zero(Q, 2));
    }

    #[test]
    fn char_two_needs_zero_weight() {
        let f2 = FieldSpec::prime(2).unwrap();
        let d2 = dual_numbers(f2);
        let shift = nilpotent_shift(f2);
        let w0 = WeightedOperator::new(shift.clone(), Scalar::from_integer(f2, 0)).unwrap();
        assert!(rb_pre_anti_flexible(&d2, &w0).is_ok());
        let w1 = WeightedOperator::new(shift, Scalar::from_integer(f2, 1)).unwrap();
        assert_eq!(
            rb_pre_anti_flexible(&d2, &w1),
            Err(Error::CharacteristicObstruction { p: 2, divisor: 2 })
        );
    }

    #[test]
    fn symmetric_products_of_commutative_base_vanish() {
        let (d, r) = rb_fixture();
        // dual numbers are commutative, so every bracket term dies
        assert_eq!(rb_left_symmetric(&d, &r).unwrap(), Algebra::zero(Q, 2));
        assert_eq!(rb_right_symmetric(&d, &r).unwrap(), Algebra::zero(Q, 2));
    }

    #[test]
    fn graph_closure_tracks_operator_verdict() {
        let (d, r) = rb_fixture();
        let (ambient, gens) = rb_graph_algebra(&d, &r).unwrap();
        assert_eq!(ambient.dim(), 4);
        assert!(check_span_closed(&ambient, &gens).unwrap().pass);

        let bad = WeightedOperator::new(
            LinearMap::from_integers(Q, &[&[1, 0], &[0, 0]]),
            weight(0),
        )
        .unwrap();
        let (ambient, gens) = rb_graph_algebra(&d, &bad).unwrap();
        assert!(!check_span_closed(&ambient, &gens).unwrap().pass);
        assert!(!check_rota_baxter(&d, &bad).unwrap().pass);
    }

    #[test]
    fn morphism_checks() {
        let (d, r) = rb_fixture();
        let id = LinearMap::identity(Q, 2);
        assert!(check_rb_morphism((&d, &r), (&d, &r), &id).unwrap().pass);
        let zero_map = LinearMap::zero(Q, 2, 2);
        assert!(check_rb_morphism((&d, &r), (&d, &r), &zero_map)
            .unwrap()
            .pass);

        // R itself maps the deformed algebra back into the base one
        let deformed = rb_induced_product(&d, &r).unwrap();
        let report = check_rb_morphism((&deformed, &r), (&d, &r), r.map()).unwrap();
        assert!(report.pass);

        // weights must agree
        let r1 = WeightedOperator::new(nilpotent_shift(Q), weight(1)).unwrap();
        let report = check_rb_morphism((&d, &r), (&d, &r1), &id).unwrap();
        assert!(!report.pass);
        assert_eq!(report.witness.unwrap().clause, "weight");
    }

    #[test]
    fn morphism_graph_agrees_with_direct_check() {
        let (d, r) = rb_fixture();
        let id = LinearMap::identity(Q, 2);
        let (ambient, gens) = rb_morphism_graph((&d, &r), (&d, &r), &id).unwrap();
        assert_eq!(ambient.dim(), 8);
        assert!(check_span_closed(&ambient, &gens).unwrap().pass);

        // a non-morphism: swap the basis vectors of D
        let swap = LinearMap::from_integers(Q, &[&[0, 1], &[1, 0]]);
        let direct = check_rb_morphism((&d, &r), (&d, &r), &swap).unwrap();
        let (ambient, gens) = rb_morphism_graph((&d, &r), (&d, &r), &swap).unwrap();
        let closure = check_span_closed(&ambient, &gens).unwrap();
        assert!(!direct.pass);
        assert!(!closure.pass);
    }

    #[test]
    fn power_suite_trivial_operators() {
        let e = algebra_e(Q);
        let zero = WeightedOperator::new(LinearMap::zero(Q, 2, 2), weight(0)).unwrap();
        let suite = rb_power_suite(&e, &zero, 2).unwrap();
        assert!(suite.all_pass());
        let id = WeightedOperator::new(LinearMap::identity(Q, 2), weight(-1)).unwrap();
        let suite = rb_power_suite(&e, &id, 2).unwrap();
        assert!(suite.all_pass());
    }

    #[test]
    fn power_suite_on_fixture_records_square_zero_collapse() {
        let (d, r) = rb_fixture();
        let suite = rb_power_suite(&d, &r, 3).unwrap();
        // R^2 = 0, so every deformed product with p >= 2 is the zero product
        // and all claims hold on this fixture.
        assert!(suite.all_pass());
        assert_eq!(suite.claims.len(), 3 + 9 * 4);
    }
}
