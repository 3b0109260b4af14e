//! Exact sparse multivariate polynomials over `QQ` and prime fields.
//!
//! A [`Polynomial`] carries its [`Grading`] (ordered variable names plus a
//! non-negative weight vector per variable) and its [`CoefficientField`].
//! Terms live in a `BTreeMap` keyed by exponent vectors, which gives a
//! canonical order for equality, hashing and printing. The map order is lex
//! with the first variable most significant; exact division uses it as the
//! monomial order.

mod elim;
mod field;
mod matrix;
mod random;

pub use elim::{discriminant_binary_quadratic, resultant_univariate, sylvester_matrix};
pub use field::{is_prime, CoefficientField};
pub use matrix::PolynomialMatrix;
pub use random::{derive_seed, random_form};

pub(crate) use field::{mod_inverse, mulmod};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{value} is not invertible in characteristic {characteristic}")]
    NotInvertible { value: String, characteristic: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands have different coefficient fields ({0} vs {1})")]
    FieldMismatch(CoefficientField, CoefficientField),
    #[error("operands have different gradings")]
    GradingMismatch,
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("zero polynomial has no multidegree")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous: terms of multidegree {0} and {1}")]
    Inhomogeneous(Multidegree, Multidegree),
    #[error("multidegree {0} has the wrong number of axes (expected {1})")]
    AxisMismatch(Multidegree, usize),
    #[error("divisor does not divide the dividend")]
    NotDivisible,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("`{0}` does not occur with positive degree")]
    ConstantInVariable(String),
    #[error("empty monomial basis for multidegree {0}")]
    EmptyBasis(Multidegree),
    #[error("monomial basis for multidegree {0} is infinite (a variable has zero weight)")]
    InfiniteBasis(Multidegree),
}

/// Exponent vector, one entry per variable of the grading.
pub type Exponent = Vec<u32>;

/// Per-axis degree of a homogeneous polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(pub Vec<u32>);

impl Multidegree {
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        Multidegree(parts.into())
    }

    pub fn axes(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Ordered variables together with their multigrading weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    variables: Vec<String>,
    axes: usize,
    weights: Vec<Vec<u32>>,
}

impl Grading {
    pub fn new(variables: Vec<String>, weights: Vec<Vec<u32>>) -> Result<Self, PolyError> {
        if variables.len() != weights.len() {
            return Err(PolyError::InvalidGrading(format!(
                "{} variables but {} weight vectors",
                variables.len(),
                weights.len()
            )));
        }
        let axes = weights.first().map_or(1, Vec::len);
        if axes == 0 || weights.iter().any(|w| w.len() != axes) {
            return Err(PolyError::InvalidGrading("weight vectors of unequal length".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &variables {
            if !seen.insert(v) {
                return Err(PolyError::InvalidGrading(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Grading { variables, axes, weights })
    }

    /// Single axis, every variable of weight one.
    pub fn standard<S: AsRef<str>>(names: &[S]) -> Arc<Grading> {
        let variables: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let weights = vec![vec![1]; variables.len()];
        Arc::new(Grading::new(variables, weights).expect("standard grading is valid"))
    }

    /// Multigrading of a product of projective spaces: one axis per factor,
    /// factor `i`'s variables get the `i`-th unit weight.
    pub fn product<S: AsRef<str>>(factors: &[&[S]]) -> Arc<Grading> {
        let axes = factors.len();
        let mut variables = Vec::new();
        let mut weights = Vec::new();
        for (i, factor) in factors.iter().enumerate() {
            for name in factor.iter() {
                variables.push(name.as_ref().to_string());
                let mut w = vec![0; axes];
                w[i] = 1;
                weights.push(w);
            }
        }
        Arc::new(Grading::new(variables, weights).expect("product grading is valid"))
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn axes(&self) -> usize {
        self.axes
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weight(&self, var: usize) -> &[u32] {
        &self.weights[var]
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn degree_of(&self, exp: &[u32]) -> Multidegree {
        let mut d = vec![0u32; self.axes];
        for (e, w) in exp.iter().zip(&self.weights) {
            for (acc, wi) in d.iter_mut().zip(w) {
                *acc += e * wi;
            }
        }
        Multidegree(d)
    }

    /// All exponent vectors of multidegree `d`, in increasing lex order.
    pub fn monomial_basis(&self, d: &Multidegree) -> Result<Vec<Exponent>, PolyError> {
        if d.axes() != self.axes {
            return Err(PolyError::AxisMismatch(d.clone(), self.axes));
        }
        if self.weights.iter().any(|w| w.iter().all(|&x| x == 0)) {
            return Err(PolyError::InfiniteBasis(d.clone()));
        }
        let mut out = Vec::new();
        let mut exp = vec![0u32; self.nvars()];
        self.fill_basis(0, &d.0, &mut exp, &mut out);
        out.sort();
        Ok(out)
    }

    fn fill_basis(&self, var: usize, remaining: &[u32], exp: &mut Exponent, out: &mut Vec<Exponent>) {
        if var == self.nvars() {
            if remaining.iter().all(|&r| r == 0) {
                out.push(exp.clone());
            }
            return;
        }
        let w = &self.weights[var];
        let max_e = w
            .iter()
            .zip(remaining)
            .filter(|(wi, _)| **wi > 0)
            .map(|(wi, r)| r / wi)
            .min()
            .unwrap_or(0);
        let mut rem = remaining.to_vec();
        for e in 0..=max_e {
            exp[var] = e;
            self.fill_basis(var + 1, &rem, exp, out);
            for (r, wi) in rem.iter_mut().zip(w) {
                *r = r.saturating_sub(*wi);
            }
        }
        exp[var] = 0;
    }
}

/// Which ring operation [`ring_op`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Pow(i64),
}

/// Exact multivariate polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PolynomialRepr", try_from = "PolynomialRepr")]
pub struct Polynomial {
    field: CoefficientField,
    grading: Arc<Grading>,
    terms: BTreeMap<Exponent, BigRational>,
}

impl Polynomial {
    pub fn zero(field: CoefficientField, grading: &Arc<Grading>) -> Self {
        Polynomial { field, grading: grading.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(field: CoefficientField, grading: &Arc<Grading>, c: i64) -> Self {
        Self::monomial(field, grading, vec![0; grading.nvars()], field.from_i64(c))
    }

    pub fn one(field: CoefficientField, grading: &Arc<Grading>) -> Self {
        Self::constant(field, grading, 1)
    }

    pub fn monomial(
        field: CoefficientField,
        grading: &Arc<Grading>,
        exp: Exponent,
        coeff: BigRational,
    ) -> Self {
        assert_eq!(exp.len(), grading.nvars(), "exponent length must match the grading");
        let mut p = Self::zero(field, grading);
        let c = field.normalize(coeff).expect("coefficient must be a field element");
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn var(field: CoefficientField, grading: &Arc<Grading>, name: &str) -> Result<Self, PolyError> {
        let i = grading.var_index(name)?;
        Ok(Self::var_at(field, grading, i))
    }

    pub fn var_at(field: CoefficientField, grading: &Arc<Grading>, i: usize) -> Self {
        let mut exp = vec![0; grading.nvars()];
        exp[i] = 1;
        Self::monomial(field, grading, exp, BigRational::one())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed and zero sums dropped.
    pub fn from_terms<I>(field: CoefficientField, grading: &Arc<Grading>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut p = Self::zero(field, grading);
        for (exp, c) in terms {
            if exp.len() != grading.nvars() {
                return Err(PolyError::InvalidGrading(format!(
                    "exponent of length {} in a ring with {} variables",
                    exp.len(),
                    grading.nvars()
                )));
            }
            let c = field.normalize(c)?;
            p.add_term(exp, &c);
        }
        Ok(p)
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn grading(&self) -> &Arc<Grading> {
        &self.grading
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn coefficient_of(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, exp: Exponent, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let field = self.field;
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = field.add(o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch(self.field, other.field));
        }
        if !Arc::ptr_eq(&self.grading, &other.grading) && *self.grading != *other.grading {
            return Err(PolyError::GradingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &self.field.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.field, &self.grading);
        let mut exp = vec![0u32; self.grading.nvars()];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                for ((x, a), b) in exp.iter_mut().zip(ea).zip(eb) {
                    *x = a + b;
                }
                out.add_term(exp.clone(), &self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: i64) -> Result<Polynomial, PolyError> {
        if k < 0 {
            return Err(PolyError::NegativeExponent(k));
        }
        let mut acc = Polynomial::one(self.field, &self.grading);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Result<Polynomial, PolyError> {
        let c = self.field.normalize(c.clone())?;
        let mut out = Polynomial::zero(self.field, &self.grading);
        if c.is_zero() {
            return Ok(out);
        }
        for (e, a) in &self.terms {
            let v = self.field.mul(a, &c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn scale_i64(&self, c: i64) -> Polynomial {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
            .expect("integers are field elements")
    }

    /// Common multidegree of all terms.
    pub fn multidegree(&self) -> Result<Multidegree, PolyError> {
        let mut iter = self.terms.keys();
        let first = iter.next().ok_or(PolyError::ZeroPolynomial)?;
        let d = self.grading.degree_of(first);
        for e in iter {
            let d2 = self.grading.degree_of(e);
            if d2 != d {
                return Err(PolyError::Inhomogeneous(d, d2));
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.multidegree().is_ok()
    }

    /// Largest exponent of variable `var` occurring in a term (0 for the zero
    /// polynomial).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Largest total (unweighted) degree of a term.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// The coefficient of `var^k`, as a polynomial free of `var`.
    pub fn coefficient(&self, var: usize, k: u32) -> Polynomial {
        let mut out = Polynomial::zero(self.field, &self.grading);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.grading.nvars() {
            return Err(PolyError::UnknownVariable(format!("#{var}")));
        }
        let mut out = Polynomial::zero(self.field, &self.grading);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            let k = self.field.from_i64(e[var] as i64);
            out.add_term(e2, &self.field.mul(c, &k));
        }
        Ok(out)
    }

    pub fn partial_derivative_by_name(&self, name: &str) -> Result<Polynomial, PolyError> {
        let i = self.grading.var_index(name)?;
        self.partial_derivative(i)
    }

    /// Substitutes `images[i]` for the `i`-th variable. All images must share
    /// one field and grading, which becomes the grading of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        assert_eq!(images.len(), self.grading.nvars(), "one image per variable");
        let first = images.first().ok_or(PolyError::GradingMismatch)?;
        for im in images {
            first.check_compatible(im)?;
        }
        if first.field != self.field {
            return Err(PolyError::FieldMismatch(self.field, first.field));
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(first.field, &first.grading);
        for (e, c) in &self.terms {
            let mut term = Polynomial::monomial(
                first.field,
                &first.grading,
                vec![0; first.grading.nvars()],
                c.clone(),
            );
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, k))
                    .or_insert_with(|| images[i].pow(k as i64).expect("non-negative"));
                term = &term * pw;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Sets the variables listed in `values` to constants.
    pub fn evaluate_partial(&self, values: &[(usize, BigRational)]) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero(self.field, &self.grading);
        let vals: Vec<(usize, BigRational)> = values
            .iter()
            .map(|(i, v)| Ok((*i, self.field.normalize(v.clone())?)))
            .collect::<Result<_, PolyError>>()?;
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e2 = e.clone();
            for (i, v) in &vals {
                let k = e[*i];
                if k > 0 {
                    let mut pw = BigRational::one();
                    for _ in 0..k {
                        pw = self.field.mul(&pw, v);
                    }
                    coeff = self.field.mul(&coeff, &pw);
                    e2[*i] = 0;
                }
            }
            out.add_term(e2, &coeff);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in another grading whose variable list
    /// contains every variable of this one (matched by name).
    pub fn embed(&self, target: &Arc<Grading>) -> Result<Polynomial, PolyError> {
        let map: Vec<usize> = self
            .grading
            .variables()
            .iter()
            .map(|v| target.var_index(v))
            .collect::<Result<_, _>>()?;
        let mut out = Polynomial::zero(self.field, target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.nvars()];
            for (i, &k) in e.iter().enumerate() {
                e2[map[i]] = k;
            }
            out.terms.insert(e2, c.clone());
        }
        Ok(out)
    }

    /// Reduces rational coefficients into another field.
    pub fn to_field(&self, field: CoefficientField) -> Result<Polynomial, PolyError> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.clone()));
        Polynomial::from_terms(field, &self.grading, terms)
    }

    /// Leading term in the map's lex order.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Quotient `q` with `self = q * g`, or an error if `g` does not divide.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(g)?;
        let (g_lead_exp, g_lead_c) = g.leading_term().ok_or(PolyError::DivisionByZero)?;
        let g_lead_exp = g_lead_exp.clone();
        let g_inv = self.field.inv(g_lead_c)?;
        let mut rem = self.clone();
        let mut quotient = Polynomial::zero(self.field, &self.grading);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            if e.iter().zip(&g_lead_exp).any(|(a, b)| a < b) {
                return Err(PolyError::NotDivisible);
            }
            let qe: Exponent = e.iter().zip(&g_lead_exp).map(|(a, b)| a - b).collect();
            let qc = self.field.mul(c, &g_inv);
            for (ge, gc) in &g.terms {
                let exp: Exponent = ge.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(exp, &self.field.neg(&self.field.mul(gc, &qc)));
            }
            quotient.add_term(qe, &qc);
        }
        Ok(quotient)
    }

    /// True when `self = lambda * other` for some nonzero scalar `lambda`.
    pub fn equal_up_to_scalar(&self, other: &Polynomial) -> bool {
        if self.check_compatible(other).is_err() || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.is_zero() {
            return other.is_zero();
        }
        let (e0, c0) = self.leading_term().unwrap();
        let Some(d0) = other.terms.get(e0) else {
            return false;
        };
        // lambda = c0 / d0; compare cross products to avoid inversions
        self.terms.iter().all(|(e, c)| match other.terms.get(e) {
            Some(d) => self.field.mul(c, d0) == self.field.mul(d, c0),
            None => false,
        })
    }

    pub fn neg(&self) -> Polynomial {
        self.scale_i64(-1)
    }
}

/// Applies a ring operation, checking that both operands share one field and
/// grading. `g` is ignored for [`RingOp::Pow`].
pub fn ring_op(f: &Polynomial, g: &Polynomial, op: RingOp) -> Result<Polynomial, PolyError> {
    match op {
        RingOp::Add => f.checked_add(g),
        RingOp::Sub => f.checked_sub(g),
        RingOp::Mul => f.checked_mul(g),
        RingOp::Pow(k) => {
            f.check_compatible(g)?;
            f.pow(k)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> std::ops::$tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("operands must share field and grading")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("operands must share field and grading")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.grading.variables();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = field::is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            let mut wrote = false;
            if is_const || !field::is_one(&abs) {
                write!(f, "{}", field::rational_to_string(&abs))?;
                wrote = true;
            }
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", names[v])?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.field, self)
    }
}

#[cfg(test)]
mod tests;

/// Serialized form: coefficients as decimal strings (`"-3"`, `"5/2"`).
#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    field: CoefficientField,
    grading: Grading,
    terms: Vec<(Exponent, String)>,
}

impl From<Polynomial> for PolynomialRepr {
    fn from(p: Polynomial) -> Self {
        PolynomialRepr {
            field: p.field,
            grading: (*p.grading).clone(),
            terms: p.terms.into_iter().map(|(e, c)| (e, c.to_string())).collect(),
        }
    }
}

impl TryFrom<PolynomialRepr> for Polynomial {
    type Error = String;

    fn try_from(r: PolynomialRepr) -> Result<Self, String> {
        let grading = Arc::new(Grading::new(r.grading.variables, r.grading.weights).map_err(|e| e.to_string())?);
        let mut terms = Vec::with_capacity(r.terms.len());
        for (e, c) in r.terms {
            let c: BigRational = c.parse().map_err(|_| format!("bad coefficient `{c}`"))?;
            terms.push((e, c));
        }
        Polynomial::from_terms(r.field, &grading, terms).map_err(|e| e.to_string())
    }
}
