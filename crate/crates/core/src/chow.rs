//! Finitely presented graded rings standing in for Chow rings.
//!
//! A presentation lists generators with their codimension, rewriting
//! relations `monomial -> combination of lower monomials`, the point class
//! and the canonical class. Reduction applies relations until no term is
//! divisible by a left-hand side; the catalog presentations are confluent,
//! so the normal form is unique.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

use crate::poly::{CoefficientField, Exponent, Grading, PolyError, Polynomial};

const FIELD: CoefficientField = CoefficientField::Rational;
const MAX_REWRITES: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChowError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("class has codimension {found}, expected {expected}")]
    WrongCodimension { expected: u32, found: u32 },
    #[error("class is not homogeneous")]
    Inhomogeneous,
    #[error("normal form {0} is not a multiple of the point class")]
    NotPointMultiple(String),
    #[error("presentation `{name}` has dimension {found}, expected {expected}")]
    DimensionMismatch { name: String, expected: u32, found: u32 },
    #[error("d.(d+K) = {0} is odd; the genus would not be an integer")]
    ParityFailure(i64),
    #[error("classes live in different presentations (`{0}` vs `{1}`)")]
    PresentationMismatch(String, String),
    #[error("reduction did not terminate within {0} rewrites")]
    NonTerminating(usize),
    #[error("non-integral coefficient {0}")]
    NonIntegral(String),
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("malformed presentation text: {0}")]
    Format(String),
}

/// Monomial written as generator name -> exponent.
pub type MonomialSpec = BTreeMap<String, u32>;

/// Integer combination of monomials.
pub type TermList = Vec<(i64, MonomialSpec)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub codim: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSpec {
    pub lhs: MonomialSpec,
    pub rhs: TermList,
}

/// Serialized form of a [`RingPresentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationSpec {
    pub name: String,
    pub generators: Vec<GeneratorSpec>,
    pub relations: Vec<RelationSpec>,
    pub dimension: u32,
    pub point_class: MonomialSpec,
    pub canonical_class: TermList,
}

#[derive(Debug)]
struct Rule {
    lhs: Exponent,
    rhs: Polynomial,
}

/// Validated presentation of a graded ring.
#[derive(Debug)]
pub struct RingPresentation {
    spec: PresentationSpec,
    grading: Arc<Grading>,
    rules: Vec<Rule>,
    point: Exponent,
}

impl RingPresentation {
    pub fn new(spec: PresentationSpec) -> Result<Arc<Self>, ChowError> {
        let names: Vec<String> = spec.generators.iter().map(|g| g.name.clone()).collect();
        let weights = spec.generators.iter().map(|g| vec![g.codim]).collect();
        let grading = Arc::new(Grading::new(names, weights)?);
        let mut rules = Vec::new();
        for rel in &spec.relations {
            let lhs = monomial_exponent(&grading, &rel.lhs)?;
            if lhs.iter().all(|&e| e == 0) {
                return Err(ChowError::Invalid("relation with constant left-hand side".into()));
            }
            let rhs = terms_to_poly(&grading, &rel.rhs)?;
            let lhs_deg = grading.degree_of(&lhs);
            if !rhs.is_zero() && rhs.multidegree()? != lhs_deg {
                return Err(ChowError::Invalid("relation is not homogeneous".into()));
            }
            rules.push(Rule { lhs, rhs });
        }
        let point = monomial_exponent(&grading, &spec.point_class)?;
        let pres = RingPresentation { spec, grading, rules, point };
        let point_deg = pres.grading.degree_of(&pres.point).0[0];
        if point_deg != pres.spec.dimension {
            return Err(ChowError::Invalid(format!(
                "point class has codimension {point_deg}, dimension is {}",
                pres.spec.dimension
            )));
        }
        if pres.rules.iter().any(|r| divides(&r.lhs, &pres.point)) {
            return Err(ChowError::Invalid("point class is not in normal form".into()));
        }
        let k = terms_to_poly(&pres.grading, &pres.spec.canonical_class)?;
        if !k.is_zero() && k.multidegree()?.0[0] != 1 {
            return Err(ChowError::Invalid("canonical class must be a divisor class".into()));
        }
        Ok(Arc::new(pres))
    }

    pub fn from_json(text: &str) -> Result<Arc<Self>, ChowError> {
        let spec: PresentationSpec = serde_json::from_str(text).map_err(|e| ChowError::Format(e.to_string()))?;
        Self::new(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.spec).expect("presentation specs serialize")
    }

    pub fn spec(&self) -> &PresentationSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn dimension(&self) -> u32 {
        self.spec.dimension
    }

    pub fn grading(&self) -> &Arc<Grading> {
        &self.grading
    }

    /// Rewrites `p` until no term is divisible by a relation's left side.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial, ChowError> {
        let mut current = p.clone();
        let mut rewrites = 0;
        loop {
            let hit = current.terms().iter().find_map(|(e, c)| {
                self.rules.iter().find(|r| divides(&r.lhs, e)).map(|r| (e.clone(), c.clone(), r))
            });
            let Some((e, c, rule)) = hit else {
                return Ok(current);
            };
            rewrites += 1;
            if rewrites > MAX_REWRITES {
                return Err(ChowError::NonTerminating(MAX_REWRITES));
            }
            let quotient: Exponent = e.iter().zip(&rule.lhs).map(|(a, b)| a - b).collect();
            let lead = Polynomial::monomial(FIELD, &self.grading, e, c.clone());
            let cofactor = Polynomial::monomial(FIELD, &self.grading, quotient, c);
            current = &(&current - &lead) + &(&cofactor * &rule.rhs);
        }
    }

    pub fn generator(self: &Arc<Self>, name: &str) -> Result<ChowClass, ChowError> {
        let p = Polynomial::var(FIELD, &self.grading, name)
            .map_err(|_| ChowError::UnknownGenerator(name.to_string()))?;
        ChowClass::new(self, p)
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> ChowClass {
        ChowClass::new(self, Polynomial::constant(FIELD, &self.grading, c)).expect("constants reduce")
    }

    pub fn point(self: &Arc<Self>) -> ChowClass {
        let p = Polynomial::monomial(FIELD, &self.grading, self.point.clone(), BigRational::from_integer(1.into()));
        ChowClass { pres: self.clone(), poly: p }
    }

    pub fn canonical(self: &Arc<Self>) -> ChowClass {
        self.combination(&self.spec.canonical_class).expect("validated at construction")
    }

    /// Class of an integer combination of monomials.
    pub fn combination(self: &Arc<Self>, terms: &TermList) -> Result<ChowClass, ChowError> {
        ChowClass::new(self, terms_to_poly(&self.grading, terms)?)
    }

    /// Class `sum c_i g_i` for generator names `g_i`.
    pub fn linear(self: &Arc<Self>, parts: &[(i64, &str)]) -> Result<ChowClass, ChowError> {
        let terms: TermList = parts
            .iter()
            .map(|(c, name)| (*c, MonomialSpec::from([(name.to_string(), 1)])))
            .collect();
        self.combination(&terms)
    }
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec.name)
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn monomial_exponent(grading: &Arc<Grading>, m: &MonomialSpec) -> Result<Exponent, ChowError> {
    let mut e = vec![0; grading.nvars()];
    for (name, &k) in m {
        let i = grading.var_index(name).map_err(|_| ChowError::UnknownGenerator(name.clone()))?;
        e[i] += k;
    }
    Ok(e)
}

fn terms_to_poly(grading: &Arc<Grading>, terms: &TermList) -> Result<Polynomial, ChowError> {
    let items = terms
        .iter()
        .map(|(c, m)| Ok((monomial_exponent(grading, m)?, BigRational::from_integer(BigInt::from(*c)))))
        .collect::<Result<Vec<_>, ChowError>>()?;
    Ok(Polynomial::from_terms(FIELD, grading, items)?)
}

/// Element of a presented ring, kept in normal form.
#[derive(Clone)]
pub struct ChowClass {
    pres: Arc<RingPresentation>,
    poly: Polynomial,
}

impl ChowClass {
    pub fn new(pres: &Arc<RingPresentation>, p: Polynomial) -> Result<Self, ChowError> {
        let poly = pres.reduce(&p)?;
        Ok(ChowClass { pres: pres.clone(), poly })
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.pres
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Codimension of a homogeneous nonzero class.
    pub fn codimension(&self) -> Result<u32, ChowError> {
        match self.poly.multidegree() {
            Ok(d) => Ok(d.0[0]),
            Err(PolyError::ZeroPolynomial) => Ok(0),
            Err(_) => Err(ChowError::Inhomogeneous),
        }
    }

    fn same_ring(&self, other: &ChowClass) -> Result<(), ChowError> {
        if Arc::ptr_eq(&self.pres, &other.pres) {
            Ok(())
        } else {
            Err(ChowError::PresentationMismatch(self.pres.name().into(), other.pres.name().into()))
        }
    }

    pub fn try_add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.same_ring(other)?;
        Ok(ChowClass { pres: self.pres.clone(), poly: &self.poly + &other.poly })
    }

    pub fn try_sub(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.same_ring(other)?;
        Ok(ChowClass { pres: self.pres.clone(), poly: &self.poly - &other.poly })
    }

    pub fn try_mul(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.same_ring(other)?;
        ChowClass::new(&self.pres, &self.poly * &other.poly)
    }

    pub fn scale(&self, c: i64) -> ChowClass {
        ChowClass { pres: self.pres.clone(), poly: self.poly.scale_i64(c) }
    }

    pub fn pow(&self, k: u32) -> ChowClass {
        let mut acc = self.pres.constant(1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl PartialEq for ChowClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) && self.poly == other.poly
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass[{}]({})", self.pres.name(), self.poly)
    }
}

macro_rules! class_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> std::ops::$tr<&'a ChowClass> for &'a ChowClass {
            type Output = ChowClass;
            fn $method(self, rhs: &'a ChowClass) -> ChowClass {
                self.$try(rhs).expect("classes must share a presentation")
            }
        }
    };
}

class_op!(Add, add, try_add);
class_op!(Sub, sub, try_sub);
class_op!(Mul, mul, try_mul);

/// Coefficient of the point class in the normal form of a top-codimension
/// class.
pub fn degree(pres: &Arc<RingPresentation>, c: &ChowClass) -> Result<i64, ChowError> {
    if !Arc::ptr_eq(pres, &c.pres) {
        return Err(ChowError::PresentationMismatch(pres.name().into(), c.pres.name().into()));
    }
    if c.is_zero() {
        return Ok(0);
    }
    let codim = c.codimension()?;
    if codim != pres.dimension() {
        return Err(ChowError::WrongCodimension { expected: pres.dimension(), found: codim });
    }
    if c.poly.num_terms() != 1 || c.poly.terms().keys().next() != Some(&pres.point) {
        return Err(ChowError::NotPointMultiple(c.poly.to_string()));
    }
    let coeff = c.poly.coefficient_of(&pres.point);
    integral(&coeff)
}

fn integral(c: &BigRational) -> Result<i64, ChowError> {
    if !c.is_integer() {
        return Err(ChowError::NonIntegral(c.to_string()));
    }
    c.numer().to_i64().ok_or_else(|| ChowError::NonIntegral(c.to_string()))
}

fn require_surface(surface: &Arc<RingPresentation>) -> Result<(), ChowError> {
    if surface.dimension() != 2 {
        return Err(ChowError::DimensionMismatch {
            name: surface.name().into(),
            expected: 2,
            found: surface.dimension(),
        });
    }
    Ok(())
}

fn require_curve(c: &ChowClass) -> Result<(), ChowError> {
    let codim = c.codimension()?;
    if codim != 1 && !c.is_zero() {
        return Err(ChowError::WrongCodimension { expected: 1, found: codim });
    }
    Ok(())
}

/// `a . b` for curve classes on a surface.
pub fn intersection_number(surface: &Arc<RingPresentation>, a: &ChowClass, b: &ChowClass) -> Result<i64, ChowError> {
    require_surface(surface)?;
    require_curve(a)?;
    require_curve(b)?;
    degree(surface, &a.try_mul(b)?)
}

/// Arithmetic genus `1 + (d.d + d.K) / 2` of a curve class on a surface.
pub fn adjunction_genus(surface: &Arc<RingPresentation>, d: &ChowClass) -> Result<i64, ChowError> {
    let k = surface.canonical();
    let self_int = intersection_number(surface, d, d)?;
    let dk = intersection_number(surface, d, &k)?;
    let total = self_int + dk;
    if total % 2 != 0 {
        return Err(ChowError::ParityFailure(total));
    }
    Ok(1 + total / 2)
}

/// Catalog presentations. Each one is pinned down by the consistency checks
/// in this module's tests rather than derived from a Chern-class convention.
pub mod presentations {
    use super::*;

    fn mono(parts: &[(&str, u32)]) -> MonomialSpec {
        parts.iter().map(|(n, k)| (n.to_string(), *k)).collect()
    }

    fn gens(parts: &[(&str, u32)]) -> Vec<GeneratorSpec> {
        parts.iter().map(|(n, c)| GeneratorSpec { name: n.to_string(), codim: *c }).collect()
    }

    fn build(spec: PresentationSpec) -> Arc<RingPresentation> {
        RingPresentation::new(spec).expect("catalog presentation is valid")
    }

    /// P(V*) for V = O + O(1)^4 over P^1: `h^2 = 0`, `xi^5 = 4 xi^4 h`,
    /// point `xi^4 h`, `K = -5 xi + 2 h`.
    pub fn height22_bundle() -> Arc<RingPresentation> {
        build(PresentationSpec {
            name: "P(O+O(1)^4)/P1".into(),
            generators: gens(&[("xi", 1), ("h", 1)]),
            relations: vec![
                RelationSpec { lhs: mono(&[("h", 2)]), rhs: vec![] },
                RelationSpec { lhs: mono(&[("xi", 5)]), rhs: vec![(4, mono(&[("xi", 4), ("h", 1)]))] },
            ],
            dimension: 5,
            point_class: mono(&[("xi", 4), ("h", 1)]),
            canonical_class: vec![(-5, mono(&[("xi", 1)])), (2, mono(&[("h", 1)]))],
        })
    }

    /// Hirzebruch surface F_1 with `xi` the (-1)-curve and `f` a fiber.
    pub fn hirzebruch_f1() -> Arc<RingPresentation> {
        build(PresentationSpec {
            name: "F1".into(),
            generators: gens(&[("xi", 1), ("f", 1)]),
            relations: vec![
                RelationSpec { lhs: mono(&[("f", 2)]), rhs: vec![] },
                RelationSpec { lhs: mono(&[("xi", 2)]), rhs: vec![(-1, mono(&[("xi", 1), ("f", 1)]))] },
            ],
            dimension: 2,
            point_class: mono(&[("xi", 1), ("f", 1)]),
            canonical_class: vec![(-2, mono(&[("xi", 1)])), (-3, mono(&[("f", 1)]))],
        })
    }

    /// P(O + O(-2)) over P^2 (the blown-up weighted cone): `h^3 = 0`,
    /// `xi^2 = 2 xi h`, point `xi h^2`, `K = -2 xi - h`.
    pub fn veronese_cone_blowup() -> Arc<RingPresentation> {
        build(PresentationSpec {
            name: "P(O+O(-2))/P2".into(),
            generators: gens(&[("xi", 1), ("h", 1)]),
            relations: vec![
                RelationSpec { lhs: mono(&[("h", 3)]), rhs: vec![] },
                RelationSpec { lhs: mono(&[("xi", 2)]), rhs: vec![(2, mono(&[("xi", 1), ("h", 1)]))] },
            ],
            dimension: 3,
            point_class: mono(&[("xi", 1), ("h", 2)]),
            canonical_class: vec![(-2, mono(&[("xi", 1)])), (-1, mono(&[("h", 1)]))],
        })
    }

    /// `P^{n_1} x ... x P^{n_k}` with hyperplane classes `h1..hk` (a single
    /// factor uses the name `h`).
    pub fn product(dims: &[u32]) -> Arc<RingPresentation> {
        let names: Vec<String> = if dims.len() == 1 {
            vec!["h".into()]
        } else {
            (1..=dims.len()).map(|i| format!("h{i}")).collect()
        };
        let name = dims.iter().map(|n| format!("P{n}")).collect::<Vec<_>>().join("x");
        build(PresentationSpec {
            name,
            generators: names.iter().map(|n| GeneratorSpec { name: n.clone(), codim: 1 }).collect(),
            relations: names
                .iter()
                .zip(dims)
                .map(|(n, d)| RelationSpec { lhs: MonomialSpec::from([(n.clone(), d + 1)]), rhs: vec![] })
                .collect(),
            dimension: dims.iter().sum(),
            point_class: names.iter().zip(dims).filter(|(_, d)| **d > 0).map(|(n, d)| (n.clone(), *d)).collect(),
            canonical_class: names
                .iter()
                .zip(dims)
                .map(|(n, d)| (-(*d as i64 + 1), MonomialSpec::from([(n.clone(), 1)])))
                .collect(),
        })
    }

    pub fn plane() -> Arc<RingPresentation> {
        product(&[2])
    }

    pub fn p1xp1() -> Arc<RingPresentation> {
        product(&[1, 1])
    }

    pub fn all() -> Vec<Arc<RingPresentation>> {
        vec![
            height22_bundle(),
            hirzebruch_f1(),
            veronese_cone_blowup(),
            plane(),
            p1xp1(),
            product(&[3]),
            product(&[1, 2]),
            product(&[2, 2]),
            product(&[1, 1, 1]),
        ]
    }
}
