//! Pullbacks of linear systems along explicit coordinate maps between
//! products of projective spaces, and the linear algebra deciding whether a
//! form on the source is the pullback of a form on the target.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::{CoefficientField, Exponent, Grading, Multidegree, PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BiratError {
    #[error("target factor {factor} expects {expected} coordinates, got {got}")]
    ComponentCount { factor: usize, expected: usize, got: usize },
    #[error("map has {got} target factors, ambient has {expected}")]
    FactorCount { expected: usize, got: usize },
    #[error("components of target factor {0} are not homogeneous of one multidegree")]
    InhomogeneousComponents(usize),
    #[error("components of target factor {0} are all zero")]
    ZeroComponents(usize),
    #[error("polynomial does not live on the expected ambient space")]
    WrongAmbient,
    #[error("degree mismatch: pullback has degree {pulled}, q times cofactor has degree {product}")]
    DegreeMismatch { pulled: Multidegree, product: Multidegree },
    #[error("no nonzero form satisfies the conditions")]
    EmptySpace,
    #[error("condition refers to variable {0} outside the ambient space")]
    BadCondition(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Product of projective spaces given by the coordinate names of each factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<Vec<String>>", into = "Vec<Vec<String>>")]
pub struct Ambient {
    factors: Vec<Vec<String>>,
    grading: Arc<Grading>,
}

impl From<Vec<Vec<String>>> for Ambient {
    fn from(factors: Vec<Vec<String>>) -> Self {
        let refs: Vec<&[String]> = factors.iter().map(Vec::as_slice).collect();
        let grading = Grading::product(&refs);
        Ambient { factors, grading }
    }
}

impl From<Ambient> for Vec<Vec<String>> {
    fn from(a: Ambient) -> Self {
        a.factors
    }
}

impl Ambient {
    pub fn new<S: AsRef<str>>(factors: &[&[S]]) -> Self {
        Ambient::from(
            factors.iter().map(|f| f.iter().map(|s| s.as_ref().to_string()).collect()).collect::<Vec<Vec<String>>>(),
        )
    }

    /// `P^n` with coordinates `{prefix}0..{prefix}n`.
    pub fn projective(n: usize, prefix: &str) -> Self {
        let names: Vec<String> = (0..=n).map(|i| format!("{prefix}{i}")).collect();
        Ambient::from(vec![names])
    }

    pub fn grading(&self) -> &Arc<Grading> {
        &self.grading
    }

    pub fn factors(&self) -> &[Vec<String>] {
        &self.factors
    }

    /// Projective dimensions of the factors.
    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len() - 1).collect()
    }

    pub fn var(&self, field: CoefficientField, name: &str) -> Result<Polynomial, PolyError> {
        Polynomial::var(field, &self.grading, name)
    }

    pub fn vars(&self, field: CoefficientField) -> Vec<Polynomial> {
        (0..self.grading.nvars()).map(|i| Polynomial::var_at(field, &self.grading, i)).collect()
    }
}

/// A rational map given by one tuple of coordinate forms per target factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr")]
pub struct RationalMapSpec {
    source: Ambient,
    target: Ambient,
    components: Vec<Vec<Polynomial>>,
    #[serde(skip)]
    component_degrees: Vec<Multidegree>,
}

#[derive(Deserialize)]
struct MapRepr {
    source: Ambient,
    target: Ambient,
    components: Vec<Vec<Polynomial>>,
}

impl TryFrom<MapRepr> for RationalMapSpec {
    type Error = BiratError;

    fn try_from(r: MapRepr) -> Result<Self, BiratError> {
        RationalMapSpec::new(r.source, r.target, r.components)
    }
}

impl RationalMapSpec {
    pub fn new(source: Ambient, target: Ambient, components: Vec<Vec<Polynomial>>) -> Result<Self, BiratError> {
        if components.len() != target.factors.len() {
            return Err(BiratError::FactorCount { expected: target.factors.len(), got: components.len() });
        }
        let field = components.iter().flatten().next().map(Polynomial::field);
        let mut component_degrees = Vec::new();
        for (i, (comp, names)) in components.iter().zip(&target.factors).enumerate() {
            if comp.len() != names.len() {
                return Err(BiratError::ComponentCount { factor: i, expected: names.len(), got: comp.len() });
            }
            if comp.iter().any(|c| c.grading() != &source.grading || Some(c.field()) != field) {
                return Err(BiratError::WrongAmbient);
            }
            let mut degree = None;
            for c in comp.iter().filter(|c| !c.is_zero()) {
                let d = c.multidegree().map_err(|_| BiratError::InhomogeneousComponents(i))?;
                if degree.get_or_insert(d.clone()) != &d {
                    return Err(BiratError::InhomogeneousComponents(i));
                }
            }
            component_degrees.push(degree.ok_or(BiratError::ZeroComponents(i))?);
        }
        Ok(RationalMapSpec { source, target, components, component_degrees })
    }

    pub fn source(&self) -> &Ambient {
        &self.source
    }

    pub fn target(&self) -> &Ambient {
        &self.target
    }

    pub fn components(&self) -> &[Vec<Polynomial>] {
        &self.components
    }

    pub fn field(&self) -> CoefficientField {
        self.components[0][0].field()
    }

    /// Source multidegree of the pullback of a target form of degree `d`.
    pub fn pulled_degree(&self, d: &Multidegree) -> Result<Multidegree, BiratError> {
        if d.axes() != self.target.factors.len() {
            return Err(PolyError::AxisMismatch(d.clone(), self.target.factors.len()).into());
        }
        let mut out = vec![0u32; self.source.factors.len()];
        for (k, cd) in d.0.iter().zip(&self.component_degrees) {
            for (o, c) in out.iter_mut().zip(&cd.0) {
                *o += k * c;
            }
        }
        Ok(Multidegree(out))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("map spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// `f` with each target coordinate replaced by its component form.
pub fn pullback(map: &RationalMapSpec, f: &Polynomial) -> Result<Polynomial, BiratError> {
    if f.grading() != &map.target.grading || f.field() != map.field() {
        return Err(BiratError::WrongAmbient);
    }
    f.multidegree()?;
    let images: Vec<Polynomial> = map.components.iter().flatten().cloned().collect();
    Ok(f.substitute(&images)?)
}

/// Columns are coefficient vectors of `polys` over the union of their
/// monomials.
pub fn coefficient_matrix(field: CoefficientField, polys: &[Polynomial]) -> Matrix {
    let mut rows: BTreeMap<&Exponent, usize> = BTreeMap::new();
    for p in polys {
        for e in p.terms().keys() {
            let next = rows.len();
            rows.entry(e).or_insert(next);
        }
    }
    let mut m = Matrix::zeros(field, rows.len(), polys.len());
    for (c, p) in polys.iter().enumerate() {
        for (e, v) in p.terms() {
            m.set(rows[e], c, v.clone());
        }
    }
    m
}

fn monomials(field: CoefficientField, grading: &Arc<Grading>, d: &Multidegree) -> Result<Vec<Polynomial>, BiratError> {
    let basis = grading.monomial_basis(d)?;
    if basis.is_empty() {
        return Err(PolyError::EmptyBasis(d.clone()).into());
    }
    Ok(basis.into_iter().map(|e| Polynomial::monomial(field, grading, e, field.from_i64(1))).collect())
}

pub fn pullback_columns(map: &RationalMapSpec, d: &Multidegree) -> Result<Vec<Polynomial>, BiratError> {
    monomials(map.field(), &map.target.grading, d)?.iter().map(|m| pullback(map, m)).collect()
}

/// Dimension of the space of target forms of degree `d` pulling back to 0.
pub fn pullback_kernel_dim(map: &RationalMapSpec, d: &Multidegree) -> Result<usize, BiratError> {
    let cols = pullback_columns(map, d)?;
    Ok(cols.len() - coefficient_matrix(map.field(), &cols).rank())
}

/// Rank of the pullback map on forms of degree `d`.
pub fn pullback_rank(map: &RationalMapSpec, d: &Multidegree) -> Result<usize, BiratError> {
    let cols = pullback_columns(map, d)?;
    Ok(coefficient_matrix(map.field(), &cols).rank())
}

/// Whether `pullback(F) = q * K` has a solution with `F` and `K` nonzero;
/// `K = 1` when `cofactor_degree` is `None`.
///
/// With `P` the pullback matrix and `Q` the matrix of `q` times cofactor
/// monomials, solutions with `K != 0` exist iff
/// `nullity([P | -Q]) > nullity(P)`.
pub fn model_transfer_solvable(
    map: &RationalMapSpec,
    target_degree: &Multidegree,
    q: &Polynomial,
    cofactor_degree: Option<&Multidegree>,
) -> Result<bool, BiratError> {
    if q.grading() != &map.source.grading || q.field() != map.field() {
        return Err(BiratError::WrongAmbient);
    }
    let field = map.field();
    let pulled = map.pulled_degree(target_degree)?;
    let qd = q.multidegree()?;
    let (product, cofactors) = match cofactor_degree {
        None => (qd, vec![Polynomial::one(field, &map.source.grading)]),
        Some(cd) => (qd.add(cd), monomials(field, &map.source.grading, cd)?),
    };
    if pulled != product {
        return Err(BiratError::DegreeMismatch { pulled, product });
    }
    let p_cols = pullback_columns(map, target_degree)?;
    let q_cols: Vec<Polynomial> = cofactors.iter().map(|k| (q * k).neg()).collect();
    let all: Vec<Polynomial> = p_cols.iter().chain(&q_cols).cloned().collect();
    let full = coefficient_matrix(field, &all);
    let nullity_full = all.len() - full.rank();
    let nullity_p = p_cols.len() - coefficient_matrix(field, &p_cols).rank();
    Ok(nullity_full > nullity_p)
}

/// A linear condition on the coefficients of an unknown form. `fixed` lists
/// `(variable index, value)` pairs cutting out a coordinate subvariety.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Condition {
    /// Every first partial derivative vanishes identically along the locus.
    SingularAlong { fixed: Vec<(usize, i64)> },
    /// The form itself vanishes identically along the locus.
    VanishAlong { fixed: Vec<(usize, i64)> },
}

impl Condition {
    /// Node at a point given by all its coordinates.
    pub fn node_at(point: &[i64]) -> Self {
        Condition::SingularAlong { fixed: point.iter().copied().enumerate().collect() }
    }

    fn fixed(&self) -> &[(usize, i64)] {
        match self {
            Condition::SingularAlong { fixed } | Condition::VanishAlong { fixed } => fixed,
        }
    }

    /// Polynomials in the remaining variables whose coefficients must vanish.
    fn images(&self, f: &Polynomial) -> Result<Vec<Polynomial>, BiratError> {
        let field = f.field();
        let values: Vec<(usize, BigRational)> = self.fixed().iter().map(|&(i, v)| (i, field.from_i64(v))).collect();
        match self {
            Condition::VanishAlong { .. } => Ok(vec![f.evaluate_partial(&values)?]),
            Condition::SingularAlong { .. } => (0..f.grading().nvars())
                .map(|i| Ok(f.partial_derivative(i)?.evaluate_partial(&values)?))
                .collect(),
        }
    }
}

/// Forms of one multidegree subject to linear conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearConditionSet {
    pub ambient: Ambient,
    pub field: CoefficientField,
    pub degree: Multidegree,
    pub conditions: Vec<Condition>,
}

impl LinearConditionSet {
    pub fn new(ambient: Ambient, field: CoefficientField, degree: Multidegree, conditions: Vec<Condition>) -> Self {
        LinearConditionSet { ambient, field, degree, conditions }
    }

    fn check(&self) -> Result<(), BiratError> {
        let n = self.ambient.grading.nvars();
        for c in &self.conditions {
            if let Some(&(i, _)) = c.fixed().iter().find(|(i, _)| *i >= n) {
                return Err(BiratError::BadCondition(i));
            }
        }
        Ok(())
    }

    /// Monomial basis and a basis of the solution space as coefficient
    /// vectors over it.
    fn solve(&self) -> Result<(Vec<Polynomial>, Vec<Vec<BigRational>>), BiratError> {
        self.check()?;
        let basis = monomials(self.field, &self.ambient.grading, &self.degree)?;
        // one block of rows per (condition, image polynomial)
        let mut blocks: Vec<Vec<Polynomial>> = Vec::new();
        for m in &basis {
            let mut col = Vec::new();
            for c in &self.conditions {
                col.extend(c.images(m)?);
            }
            blocks.push(col);
        }
        let nblocks = blocks.first().map_or(0, Vec::len);
        let mut row_keys: BTreeMap<(usize, Exponent), usize> = BTreeMap::new();
        for col in &blocks {
            for (b, p) in col.iter().enumerate() {
                for e in p.terms().keys() {
                    let next = row_keys.len();
                    row_keys.entry((b, e.clone())).or_insert(next);
                }
            }
        }
        let mut m = Matrix::zeros(self.field, row_keys.len().max(1), basis.len());
        for (c, col) in blocks.iter().enumerate() {
            debug_assert_eq!(col.len(), nblocks);
            for (b, p) in col.iter().enumerate() {
                for (e, v) in p.terms() {
                    m.set(row_keys[&(b, e.clone())], c, v.clone());
                }
            }
        }
        Ok((basis, m.nullspace()))
    }

    /// Dimension of the space of forms satisfying every condition.
    pub fn dimension(&self) -> Result<usize, BiratError> {
        Ok(self.solve()?.1.len())
    }

    /// Every basis form of the solution space, as polynomials.
    pub fn basis_forms(&self) -> Result<Vec<Polynomial>, BiratError> {
        let (basis, kernel) = self.solve()?;
        kernel.iter().map(|v| combine(self.field, &self.ambient.grading, &basis, v)).collect()
    }

    /// Seeded combination of the solution basis with nonzero integer
    /// weights in `[-1000, 1000]`.
    pub fn sample(&self, seed: u64) -> Result<Polynomial, BiratError> {
        let (basis, kernel) = self.solve()?;
        if kernel.is_empty() {
            return Err(BiratError::EmptySpace);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coeffs = vec![BigRational::zero(); basis.len()];
        for v in &kernel {
            let mag = rng.gen_range(1..=1000i64);
            let w = BigRational::from_integer(BigInt::from(if rng.gen_bool(0.5) { mag } else { -mag }));
            for (acc, x) in coeffs.iter_mut().zip(v) {
                *acc += &w * x;
            }
        }
        let f = combine(self.field, &self.ambient.grading, &basis, &coeffs)?;
        if f.is_zero() {
            return Err(BiratError::EmptySpace);
        }
        Ok(f)
    }
}

fn combine(
    field: CoefficientField,
    grading: &Arc<Grading>,
    basis: &[Polynomial],
    coeffs: &[BigRational],
) -> Result<Polynomial, BiratError> {
    let terms = basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m.terms().keys().next().expect("monomial").clone(), c.clone()));
    Ok(Polynomial::from_terms(field, grading, terms)?)
}

/// Dimension of the constrained space together with a sample drawn from
/// `seed`; the sample is `None` when the space is zero.
pub fn constrained_form_space_dim(
    cond: &LinearConditionSet,
    seed: u64,
) -> Result<(usize, Option<Polynomial>), BiratError> {
    let dim = cond.dimension()?;
    let sample = if dim == 0 { None } else { Some(cond.sample(seed)?) };
    Ok((dim, sample))
}

/// The maps used by the catalog.
pub mod maps {
    use super::*;

    fn p3() -> Ambient {
        Ambient::projective(3, "x")
    }

    /// `P^3 -> P^2 x P^2`, projection from `e0` and from `e1`:
    /// `x -> ([x1:x2:x3], [x0:x2:x3])`.
    pub fn two_point_projection(field: CoefficientField) -> RationalMapSpec {
        let source = p3();
        let target = Ambient::new(&[&["u1", "u2", "u3"], &["v0", "v2", "v3"]]);
        let x = source.vars(field);
        let comps = vec![vec![x[1].clone(), x[2].clone(), x[3].clone()], vec![x[0].clone(), x[2].clone(), x[3].clone()]];
        RationalMapSpec::new(source, target, comps).expect("valid map")
    }

    /// `P^3 -> (P^1)^3`, the three pencils of planes through the edges of
    /// the coordinate triangle `e0 e1 e2`: `x -> ([x2:x3], [x1:x3], [x0:x3])`.
    pub fn trilinear(field: CoefficientField) -> RationalMapSpec {
        let source = p3();
        let target = Ambient::new(&[&["a0", "a1"], &["b0", "b1"], &["c0", "c1"]]);
        let x = source.vars(field);
        let comps = vec![
            vec![x[2].clone(), x[3].clone()],
            vec![x[1].clone(), x[3].clone()],
            vec![x[0].clone(), x[3].clone()],
        ];
        RationalMapSpec::new(source, target, comps).expect("valid map")
    }

    /// `P^1 x P^2 -> (P^1)^3`, `(s,t; x,y,z) -> ([s:t], [x:z], [y:z])`.
    pub fn cremona_product(field: CoefficientField) -> RationalMapSpec {
        let source = Ambient::new(&[&["s", "t"], &["x", "y", "z"]]);
        let target = Ambient::new(&[&["a0", "a1"], &["b0", "b1"], &["c0", "c1"]]);
        let v = source.vars(field);
        let comps = vec![
            vec![v[0].clone(), v[1].clone()],
            vec![v[2].clone(), v[4].clone()],
            vec![v[3].clone(), v[4].clone()],
        ];
        RationalMapSpec::new(source, target, comps).expect("valid map")
    }

    pub fn identity(ambient: &Ambient, field: CoefficientField) -> RationalMapSpec {
        let vars = ambient.vars(field);
        let mut comps = Vec::new();
        let mut k = 0;
        for f in &ambient.factors {
            comps.push(vars[k..k + f.len()].to_vec());
            k += f.len();
        }
        RationalMapSpec::new(ambient.clone(), ambient.clone(), comps).expect("valid map")
    }

    /// Quartics on `P^3` with nodes at the given coordinate points.
    pub fn nodal_quartics(field: CoefficientField, nodes: &[usize]) -> LinearConditionSet {
        let conditions = nodes
            .iter()
            .map(|&i| {
                let mut pt = vec![0i64; 4];
                pt[i] = 1;
                Condition::node_at(&pt)
            })
            .collect();
        LinearConditionSet::new(p3(), field, Multidegree::new(vec![4]), conditions)
    }

    /// Bidegree (2,4) forms on `P^1 x P^2` singular along `P^1 x [1:0:0]`
    /// and `P^1 x [0:1:0]`.
    pub fn singular_along_two_lines(field: CoefficientField) -> LinearConditionSet {
        let ambient = Ambient::new(&[&["s", "t"], &["x", "y", "z"]]);
        let conditions = vec![
            Condition::SingularAlong { fixed: vec![(2, 1), (3, 0), (4, 0)] },
            Condition::SingularAlong { fixed: vec![(2, 0), (3, 1), (4, 0)] },
        ];
        LinearConditionSet::new(ambient, field, Multidegree::new(vec![2, 4]), conditions)
    }
}

#[cfg(test)]
mod tests;
