//! Bimodules over anti-flexible algebras, semidirect products, operators
//! from a module into the algebra and everything they induce: module
//! products, splitting pairs, symmetric algebras, the extended bimodule,
//! morphisms, and the lifted operators on the semidirect product.

use crate::algebra::{check_span_closed, direct_sum_algebra, Algebra, BlockLayout};
use crate::error::{Error, Result};
use crate::identities::PreAntiFlexible;
use crate::linalg::{LinearMap, Vector};
use crate::report::CheckReport;
use crate::rota::WeightedOperator;
use crate::scalar::Scalar;

/// An algebra together with left and right action tensors on a module
/// space: `left[i][alpha] = l(e_i, f_alpha)` and
/// `right[alpha][i] = r(f_alpha, e_i)`, both with module coordinates.
///
/// Whether the actions satisfy the bimodule identities is a separate check,
/// not a construction invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    algebra: Algebra,
    moddim: usize,
    left: Vec<Vec<Vector>>,
    right: Vec<Vec<Vector>>,
}

impl Bimodule {
    pub fn new(
        algebra: Algebra,
        moddim: usize,
        left: Vec<Vec<Vector>>,
        right: Vec<Vec<Vector>>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let field = algebra.field();
        let check = |tensor: &[Vec<Vector>], rows: usize, cols: usize, name: &str| -> Result<()> {
            if tensor.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "{name} action has {} rows, expected {rows}",
                    tensor.len()
                )));
            }
            for row in tensor {
                if row.len() != cols {
                    return Err(Error::DimensionMismatch(format!(
                        "{name} action has {} columns, expected {cols}",
                        row.len()
                    )));
                }
                for v in row {
                    if v.dim() != moddim {
                        return Err(Error::DimensionMismatch(format!(
                            "{name} action value of length {}, expected {moddim}",
                            v.dim()
                        )));
                    }
                    for c in v.coords() {
                        if c.field() != field {
                            return Err(Error::FieldMismatch(format!(
                                "{name} action over {}, algebra over {}",
                                c.field(),
                                field
                            )));
                        }
                    }
                }
            }
            Ok(())
        };
        check(&left, n, moddim, "left")?;
        check(&right, moddim, n, "right")?;
        Ok(Bimodule {
            algebra,
            moddim,
            left,
            right,
        })
    }

    /// Zero actions on a module of the given dimension.
    pub fn zero_actions(algebra: Algebra, moddim: usize) -> Self {
        let n = algebra.dim();
        let field = algebra.field();
        Bimodule {
            left: vec![vec![Vector::zero(field, moddim); moddim]; n],
            right: vec![vec![Vector::zero(field, moddim); n]; moddim],
            algebra,
            moddim,
        }
    }

    /// The algebra acting on itself by its own multiplications.
    pub fn adjoint(algebra: Algebra) -> Self {
        let n = algebra.dim();
        let left = (0..n)
            .map(|i| (0..n).map(|a| algebra.basis_product(i, a).clone()).collect())
            .collect();
        let right = (0..n)
            .map(|a| (0..n).map(|i| algebra.basis_product(a, i).clone()).collect())
            .collect();
        Bimodule {
            algebra,
            moddim: n,
            left,
            right,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn moddim(&self) -> usize {
        self.moddim
    }

    pub fn left_tensor(&self) -> &[Vec<Vector>] {
        &self.left
    }

    pub fn right_tensor(&self) -> &[Vec<Vector>] {
        &self.right
    }

    /// Bilinear extension of the left action.
    pub fn left_action(&self, x: &Vector, m: &Vector) -> Result<Vector> {
        self.algebra.check_vector(x)?;
        self.check_module_vector(m)?;
        Ok(self.l_vec(x, m))
    }

    /// Bilinear extension of the right action.
    pub fn right_action(&self, m: &Vector, x: &Vector) -> Result<Vector> {
        self.algebra.check_vector(x)?;
        self.check_module_vector(m)?;
        Ok(self.r_vec(m, x))
    }

    pub(crate) fn check_module_vector(&self, m: &Vector) -> Result<()> {
        if m.dim() != self.moddim {
            return Err(Error::DimensionMismatch(format!(
                "module vector of length {}, module dimension {}",
                m.dim(),
                self.moddim
            )));
        }
        for c in m.coords() {
            if c.field() != self.algebra.field() {
                return Err(Error::FieldMismatch(format!(
                    "module vector over {}, algebra over {}",
                    c.field(),
                    self.algebra.field()
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn l_vec(&self, x: &Vector, m: &Vector) -> Vector {
        let field = self.algebra.field();
        let mut out = Vector::zero(field, self.moddim);
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (a, ma) in m.coords().iter().enumerate() {
                if ma.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * ma), &self.left[i][a]);
            }
        }
        out
    }

    pub(crate) fn r_vec(&self, m: &Vector, x: &Vector) -> Vector {
        let field = self.algebra.field();
        let mut out = Vector::zero(field, self.moddim);
        for (a, ma) in m.coords().iter().enumerate() {
            if ma.is_zero() {
                continue;
            }
            for (i, xi) in x.coords().iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                out.add_scaled(&(ma * xi), &self.right[a][i]);
            }
        }
        out
    }
}

/// The two bimodule identities at all (algebra, algebra, module) basis
/// triples; for the adjoint actions they reduce to the anti-flexible law
/// and its middle-argument companion.
pub fn check_bimodule(b: &Bimodule) -> CheckReport {
    let a = &b.algebra;
    let n = a.dim();
    let m = b.moddim;
    let field = a.field();
    for i in 0..n {
        let ei = Vector::basis(field, n, i);
        for j in 0..n {
            let ej = Vector::basis(field, n, j);
            for alpha in 0..m {
                let fa = Vector::basis(field, m, alpha);
                // l(e_i e_j, f) - l(e_i, l(e_j, f)) = r(r(f, e_j), e_i) - r(f, e_j e_i)
                let lhs = b
                    .l_vec(a.basis_product(i, j), &fa)
                    .sub(&b.l_vec(&ei, &b.l_vec(&ej, &fa)));
                let rhs = b
                    .r_vec(&b.r_vec(&fa, &ej), &ei)
                    .sub(&b.r_vec(&fa, a.basis_product(j, i)));
                let diff = lhs.sub(&rhs);
                if !diff.is_zero() {
                    return CheckReport::fail(
                        "bimodule",
                        "action-axiom-1",
                        vec![i, j, alpha],
                        diff,
                    );
                }
                // l(e_i, r(f, e_j)) - r(l(e_i, f), e_j)
                //   = l(e_j, r(f, e_i)) - r(l(e_j, f), e_i)
                let lhs = b
                    .l_vec(&ei, &b.r_vec(&fa, &ej))
                    .sub(&b.r_vec(&b.l_vec(&ei, &fa), &ej));
                let rhs = b
                    .l_vec(&ej, &b.r_vec(&fa, &ei))
                    .sub(&b.r_vec(&b.l_vec(&ej, &fa), &ei));
                let diff = lhs.sub(&rhs);
                if !diff.is_zero() {
                    return CheckReport::fail(
                        "bimodule",
                        "action-axiom-2",
                        vec![i, j, alpha],
                        diff,
                    );
                }
            }
        }
    }
    CheckReport::pass("bimodule")
}

/// The dual-space actions `(a.f)(b) = f(b a)` and `(f.a)(b) = f(a b)`: in
/// coordinates, transposes of the right and left multiplication operators.
pub fn dual_bimodule(a: &Algebra) -> Bimodule {
    let n = a.dim();
    let field = a.field();
    let mut left = vec![vec![Vector::zero(field, n); n]; n];
    let mut right = vec![vec![Vector::zero(field, n); n]; n];
    for i in 0..n {
        for alpha in 0..n {
            let mut lv = Vector::zero(field, n);
            let mut rv = Vector::zero(field, n);
            for j in 0..n {
                lv.add_scaled(
                    &a.basis_product(j, i)[alpha],
                    &Vector::basis(field, n, j),
                );
                rv.add_scaled(
                    &a.basis_product(i, j)[alpha],
                    &Vector::basis(field, n, j),
                );
            }
            left[i][alpha] = lv;
            right[alpha][i] = rv;
        }
    }
    Bimodule {
        algebra: a.clone(),
        moddim: n,
        left,
        right,
    }
}

/// The block algebra on `A + M`: `(a,m)*(b,n) = (ab, l(a,n) + r(m,b))`;
/// the module block squares to zero.
pub fn semidirect_product(b: &Bimodule) -> Algebra {
    let a = &b.algebra;
    let n = a.dim();
    let m = b.moddim;
    let field = a.field();
    let layout = BlockLayout::new(field, vec![n, m]);
    let total = layout.total_dim();
    let mut table = vec![vec![Vector::zero(field, total); total]; total];
    for i in 0..n {
        for j in 0..n {
            table[i][j] = layout
                .embed(0, a.basis_product(i, j))
                .expect("algebra block");
        }
        for beta in 0..m {
            table[i][n + beta] = layout.embed(1, &b.left[i][beta]).expect("module block");
        }
    }
    for alpha in 0..m {
        for j in 0..n {
            table[n + alpha][j] = layout.embed(1, &b.right[alpha][j]).expect("module block");
        }
    }
    Algebra::new(field, table).expect("well-shaped by construction")
}

/// A linear map from the module into the algebra, the candidate operator of
/// the graph characterizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOperator {
    map: LinearMap,
}

impl ModuleOperator {
    pub fn new(map: LinearMap) -> Self {
        ModuleOperator { map }
    }

    pub fn map(&self) -> &LinearMap {
        &self.map
    }

    /// Image of the alpha-th module basis vector in the algebra.
    fn column(&self, alpha: usize) -> Vector {
        self.map.column(alpha)
    }
}

fn validate_operator(b: &Bimodule, t: &ModuleOperator) -> Result<()> {
    if t.map.rows() != b.algebra.dim() || t.map.cols() != b.moddim {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, expected {}x{}",
            t.map.rows(),
            t.map.cols(),
            b.algebra.dim(),
            b.moddim
        )));
    }
    if t.map.field() != b.algebra.field() {
        return Err(Error::FieldMismatch(format!(
            "operator over {}, bimodule over {}",
            t.map.field(),
            b.algebra.field()
        )));
    }
    Ok(())
}

/// Decides `T(m)T(n) = T(r(m,T(n)) + l(T(m),n))` at all module basis pairs.
pub fn check_o_operator(b: &Bimodule, t: &ModuleOperator) -> Result<CheckReport> {
    validate_operator(b, t)?;
    let field = b.algebra.field();
    let m = b.moddim;
    for alpha in 0..m {
        let fa = Vector::basis(field, m, alpha);
        let ta = t.column(alpha);
        for beta in 0..m {
            let fb = Vector::basis(field, m, beta);
            let tb = t.column(beta);
            let lhs = b.algebra.mul_vec(&ta, &tb);
            let inner = b.r_vec(&fa, &tb).add(&b.l_vec(&ta, &fb));
            let rhs = t.map.apply(&inner);
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "o-operator",
                    "operator-identity",
                    vec![alpha, beta],
                    diff,
                ));
            }
        }
    }
    Ok(CheckReport::pass("o-operator"))
}

/// The product `m * n = r(m,T(n)) + l(T(m),n)` on the module space. It is
/// anti-flexible exactly when the operator identity holds, and then `T` is a
/// homomorphism onto its image.
pub fn o_induced_module_algebra(b: &Bimodule, t: &ModuleOperator) -> Result<Algebra> {
    validate_operator(b, t)?;
    let field = b.algebra.field();
    let m = b.moddim;
    let mut table = vec![vec![Vector::zero(field, m); m]; m];
    for alpha in 0..m {
        let fa = Vector::basis(field, m, alpha);
        let ta = t.column(alpha);
        for beta in 0..m {
            let fb = Vector::basis(field, m, beta);
            let tb = t.column(beta);
            table[alpha][beta] = b.r_vec(&fa, &tb).add(&b.l_vec(&ta, &fb));
        }
    }
    Algebra::new(field, table)
}

/// Span closure of the operator graph `{(T(m), m)}` inside the semidirect
/// product; equivalent to the operator identity.
pub fn o_graph_check(b: &Bimodule, t: &ModuleOperator) -> Result<CheckReport> {
    validate_operator(b, t)?;
    let ambient = semidirect_product(b);
    let gens = o_graph_generators(b, t);
    check_span_closed(&ambient, &gens)
}

pub fn o_graph_generators(b: &Bimodule, t: &ModuleOperator) -> Vec<Vector> {
    let field = b.algebra.field();
    (0..b.moddim)
        .map(|alpha| t.column(alpha).concat(&Vector::basis(field, b.moddim, alpha)))
        .collect()
}

/// The splitting pair on the module: `m < n = r(m, T(n))`,
/// `m > n = l(T(m), n)`.
pub fn o_pre_anti_flexible(b: &Bimodule, t: &ModuleOperator) -> Result<PreAntiFlexible> {
    validate_operator(b, t)?;
    let field = b.algebra.field();
    let m = b.moddim;
    let mut prec = vec![vec![Vector::zero(field, m); m]; m];
    let mut succ = vec![vec![Vector::zero(field, m); m]; m];
    for alpha in 0..m {
        let fa = Vector::basis(field, m, alpha);
        let ta = t.column(alpha);
        for beta in 0..m {
            let fb = Vector::basis(field, m, beta);
            let tb = t.column(beta);
            prec[alpha][beta] = b.r_vec(&fa, &tb);
            succ[alpha][beta] = b.l_vec(&ta, &fb);
        }
    }
    PreAntiFlexible::new(Algebra::new(field, prec)?, Algebra::new(field, succ)?)
}

/// `m * n = l(T(m), n) - r(n, T(m))` on the module space.
pub fn o_left_symmetric(b: &Bimodule, t: &ModuleOperator) -> Result<Algebra> {
    validate_operator(b, t)?;
    let field = b.algebra.field();
    let m = b.moddim;
    let mut table = vec![vec![Vector::zero(field, m); m]; m];
    for alpha in 0..m {
        let ta = t.column(alpha);
        for beta in 0..m {
            let fb = Vector::basis(field, m, beta);
            table[alpha][beta] = b.l_vec(&ta, &fb).sub(&b.r_vec(&fb, &ta));
        }
    }
    Algebra::new(field, table)
}

/// `m * n = r(n, T(m)) - l(T(m), n)`, the negative of the product above.
/// Both are kept so the pair of statements can be tested independently.
pub fn o_right_symmetric(b: &Bimodule, t: &ModuleOperator) -> Result<Algebra> {
    Ok(o_left_symmetric(b, t)?.tensor_scale(&Scalar::from_integer(b.algebra.field(), -1)))
}

/// The actions `l(m, a) = T(m)a - T(r(m,a))` and `r(a, m) = aT(m) - T(l(a,m))`
/// of the induced module algebra back on the ambient algebra. The operator
/// identity is a genuine precondition here.
pub fn extended_bimodule(b: &Bimodule, t: &ModuleOperator) -> Result<Bimodule> {
    validate_operator(b, t)?;
    if !check_o_operator(b, t)?.pass {
        return Err(Error::PreconditionFailed(
            "extended bimodule needs the operator identity".to_string(),
        ));
    }
    let a = &b.algebra;
    let n = a.dim();
    let m = b.moddim;
    let field = a.field();
    let base = o_induced_module_algebra(b, t)?;
    let mut left = vec![vec![Vector::zero(field, n); n]; m];
    let mut right = vec![vec![Vector::zero(field, n); m]; n];
    for alpha in 0..m {
        let ta = t.column(alpha);
        for i in 0..n {
            let ei = Vector::basis(field, n, i);
            left[alpha][i] = a
                .mul_vec(&ta, &ei)
                .sub(&t.map.apply(&b.right[alpha][i]));
            right[i][alpha] = a
                .mul_vec(&ei, &ta)
                .sub(&t.map.apply(&b.left[i][alpha]));
        }
    }
    Bimodule::new(base, n, left, right)
}

/// Morphism of module operators: an algebra morphism `phi` and a module map
/// `psi` intertwining the operators and both actions.
pub fn check_o_morphism(
    src: (&Bimodule, &ModuleOperator),
    dst: (&Bimodule, &ModuleOperator),
    phi: &LinearMap,
    psi: &LinearMap,
) -> Result<CheckReport> {
    let (b1, t1) = src;
    let (b2, t2) = dst;
    validate_operator(b1, t1)?;
    validate_operator(b2, t2)?;
    let (n1, m1) = (b1.algebra.dim(), b1.moddim);
    let (n2, m2) = (b2.algebra.dim(), b2.moddim);
    if phi.rows() != n2 || phi.cols() != n1 || psi.rows() != m2 || psi.cols() != m1 {
        return Err(Error::DimensionMismatch(format!(
            "morphism pair is {}x{} and {}x{}, expected {n2}x{n1} and {m2}x{m1}",
            phi.rows(),
            phi.cols(),
            psi.rows(),
            psi.cols()
        )));
    }
    if phi.field() != b1.algebra.field() || psi.field() != b1.algebra.field() {
        return Err(Error::FieldMismatch(
            "morphism maps must share the bimodule field".to_string(),
        ));
    }
    for i in 0..n1 {
        for j in 0..n1 {
            let lhs = phi.apply(b1.algebra.basis_product(i, j));
            let rhs = b2.algebra.mul_vec(&phi.column(i), &phi.column(j));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "o-morphism",
                    "algebra-morphism",
                    vec![i, j],
                    diff,
                ));
            }
        }
    }
    let left = phi.compose(&t1.map);
    let right = t2.map.compose(psi);
    for alpha in 0..m1 {
        let diff = left.column(alpha).sub(&right.column(alpha));
        if !diff.is_zero() {
            return Ok(CheckReport::fail(
                "o-morphism",
                "intertwine",
                vec![alpha],
                diff,
            ));
        }
    }
    let field = b1.algebra.field();
    for i in 0..n1 {
        let ei = Vector::basis(field, n1, i);
        for alpha in 0..m1 {
            let fa = Vector::basis(field, m1, alpha);
            let lhs = psi.apply(&b1.l_vec(&ei, &fa));
            let rhs = b2.l_vec(&phi.column(i), &psi.column(alpha));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "o-morphism",
                    "left-action",
                    vec![i, alpha],
                    diff,
                ));
            }
        }
    }
    for alpha in 0..m1 {
        let fa = Vector::basis(field, m1, alpha);
        for i in 0..n1 {
            let ei = Vector::basis(field, n1, i);
            let lhs = psi.apply(&b1.r_vec(&fa, &ei));
            let rhs = b2.r_vec(&psi.column(alpha), &phi.column(i));
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                return Ok(CheckReport::fail(
                    "o-morphism",
                    "right-action",
                    vec![alpha, i],
                    diff,
                ));
            }
        }
    }
    Ok(CheckReport::pass("o-morphism"))
}

/// The quadruple graph `((T(m), m), (phi(T(m)), psi(m)))` inside the direct
/// sum of the two semidirect products; closure is equivalent to the morphism
/// check.
pub fn o_morphism_graph(
    src: (&Bimodule, &ModuleOperator),
    dst: (&Bimodule, &ModuleOperator),
    phi: &LinearMap,
    psi: &LinearMap,
) -> Result<(Algebra, Vec<Vector>)> {
    let (b1, t1) = src;
    let (b2, _) = dst;
    let ambient = direct_sum_algebra(&semidirect_product(b1), &semidirect_product(b2))?;
    let field = b1.algebra.field();
    let gens = (0..b1.moddim)
        .map(|alpha| {
            let fa = Vector::basis(field, b1.moddim, alpha);
            let ta = t1.column(alpha);
            let first = ta.concat(&fa);
            let second = phi.apply(&ta).concat(&psi.apply(&fa));
            first.concat(&second)
        })
        .collect();
    Ok((ambient, gens))
}

/// The block operator `[[0, T], [0, -w Id]]` on the semidirect product; it
/// satisfies the weighted operator identity at weight `w` exactly when `T`
/// satisfies the module operator identity, for every weight.
pub fn lift_rb_from_o(
    b: &Bimodule,
    t: &ModuleOperator,
    weight: &Scalar,
) -> Result<WeightedOperator> {
    validate_operator(b, t)?;
    let field = b.algebra.field();
    if weight.field() != field {
        return Err(Error::FieldMismatch(format!(
            "weight over {}, bimodule over {}",
            weight.field(),
            field
        )));
    }
    let n = b.algebra.dim();
    let m = b.moddim;
    let blocks = LinearMap::from_blocks(
        &LinearMap::zero(field, n, n),
        &t.map,
        &LinearMap::zero(field, m, n),
        &LinearMap::identity(field, m).scale(&-weight),
    );
    WeightedOperator::new(blocks, weight.clone())
}

/// Shape of a lifted torsion-free operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftVariant {
    /// `[[0, T], [0, 0]]`
    Nilpotent,
    /// `[[0, T], [0, Id]]`
    Idempotent,
}

/// The block operators `[[0,T],[0,0]]` and `[[0,T],[0,Id]]` on the
/// semidirect product; each is torsion-free exactly when `T` satisfies the
/// module operator identity.
pub fn lift_nijenhuis_from_o(
    b: &Bimodule,
    t: &ModuleOperator,
    variant: LiftVariant,
) -> Result<LinearMap> {
    validate_operator(b, t)?;
    let field = b.algebra.field();
    let n = b.algebra.dim();
    let m = b.moddim;
    let corner = match variant {
        LiftVariant::Nilpotent => LinearMap::zero(field, m, m),
        LiftVariant::Idempotent => LinearMap::identity(field, m),
    };
    Ok(LinearMap::from_blocks(
        &LinearMap::zero(field, n, n),
        &t.map,
        &LinearMap::zero(field, m, n),
        &corner,
    ))
}
