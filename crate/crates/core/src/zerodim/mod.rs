//! Gröbner bases over prime fields and degree counts of finite projective
//! schemes.

mod fp;

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::{derive_seed, mod_inverse, mulmod, CoefficientField, Grading, PolyError, Polynomial};
use fp::{compare, FpPoly, FpRing, Mono};
pub use fp::OrderKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZeroDimError {
    #[error("Gröbner bases are only computed over prime fields")]
    CharacteristicZero,
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators live over different fields or gradings")]
    Mismatch,
    #[error("generator is not homogeneous")]
    Inhomogeneous,
    #[error("ring is not standard graded")]
    NotStandardGraded,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("exponent too large")]
    ExponentOverflow,
    #[error("invalid variable order")]
    BadVariableOrder,
    #[error("no trial produced a zero-dimensional chart")]
    AllTrialsFailed,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Monomial order. `variable_order[k]` is the grading index of the `k`-th
/// most significant variable; `None` keeps the grading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub variable_order: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::degrevlex()
    }
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, variable_order: None }
    }

    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, variable_order: None }
    }

    pub fn with_variable_order(mut self, order: Vec<usize>) -> Self {
        self.variable_order = Some(order);
        self
    }

    fn permutation(&self, n: usize) -> Result<Vec<usize>, ZeroDimError> {
        match &self.variable_order {
            None => Ok((0..n).collect()),
            Some(v) => {
                let mut seen = vec![false; n];
                if v.len() != n {
                    return Err(ZeroDimError::BadVariableOrder);
                }
                for &i in v {
                    if i >= n || seen[i] {
                        return Err(ZeroDimError::BadVariableOrder);
                    }
                    seen[i] = true;
                }
                Ok(v.clone())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: CoefficientField,
    grading: Arc<Grading>,
    perm: Vec<usize>,
    ring: FpRing,
    polys: Vec<FpPoly>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn grading(&self) -> &Arc<Grading> {
        &self.grading
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Basis elements, monic, sorted by increasing leading monomial.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|f| from_fp(f, self.field, &self.grading, &self.perm)).collect()
    }

    /// Leading exponents, in grading variable order.
    pub fn leading_exponents(&self) -> Vec<Vec<u32>> {
        self.polys.iter().map(|f| unpermute(&f.terms[0].0, &self.perm)).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|f| f.terms[0].0.deg == 0)
    }

    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        s_pairs_vanish(&self.ring, &self.polys)
    }

    /// Monic, and no term of any element is divisible by another element's
    /// leading monomial.
    pub fn is_reduced(&self) -> bool {
        let g = &self.polys;
        g.iter().enumerate().all(|(i, f)| {
            f.terms[0].1 == 1
                && g.iter().enumerate().all(|(j, h)| i == j || f.terms.iter().all(|(m, _)| !h.terms[0].0.divides(m)))
        })
    }
}

fn s_pairs_vanish(ring: &FpRing, g: &[FpPoly]) -> bool {
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| ring.normal_form(&ring.s_poly(&g[i], &g[j]), g).terms.is_empty()))
}

fn check_inputs(gens: &[Polynomial]) -> Result<(u64, Arc<Grading>), ZeroDimError> {
    let first = gens.first().ok_or(ZeroDimError::EmptyGenerators)?;
    let p = match first.field() {
        CoefficientField::Rational => return Err(ZeroDimError::CharacteristicZero),
        CoefficientField::Prime(p) => p,
    };
    for g in gens {
        if g.field() != first.field() || g.grading() != first.grading() {
            return Err(ZeroDimError::Mismatch);
        }
    }
    Ok((p, first.grading().clone()))
}

fn to_fp(f: &Polynomial, ring: &FpRing, perm: &[usize]) -> Result<FpPoly, ZeroDimError> {
    let field = f.field();
    let mut terms = Vec::with_capacity(f.num_terms());
    for (e, c) in f.terms() {
        let mut ex = Vec::with_capacity(perm.len());
        for &src in perm {
            ex.push(u16::try_from(e[src]).map_err(|_| ZeroDimError::ExponentOverflow)?);
        }
        terms.push((Mono::new(ex), field.residue(c)));
    }
    Ok(ring.from_terms(terms))
}

fn unpermute(m: &Mono, perm: &[usize]) -> Vec<u32> {
    let mut e = vec![0u32; perm.len()];
    for (k, &src) in perm.iter().enumerate() {
        e[src] = m.e[k] as u32;
    }
    e
}

fn from_fp(f: &FpPoly, field: CoefficientField, grading: &Arc<Grading>, perm: &[usize]) -> Polynomial {
    let terms = f.terms.iter().map(|(m, c)| (unpermute(m, perm), BigRational::from_integer(BigInt::from(*c))));
    Polynomial::from_terms(field, grading, terms).expect("residues are field elements")
}

pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, ZeroDimError> {
    let (p, grading) = check_inputs(gens)?;
    let perm = order.permutation(grading.nvars())?;
    let ring = FpRing { nvars: grading.nvars(), p, order: order.kind };
    let fps = gens.iter().map(|g| to_fp(g, &ring, &perm)).collect::<Result<Vec<_>, _>>()?;
    let polys = reduced_groebner(&ring, fps);
    Ok(GroebnerBasis { order, field: CoefficientField::Prime(p), grading, perm, ring, polys })
}

fn reduced_groebner(ring: &FpRing, gens: Vec<FpPoly>) -> Vec<FpPoly> {
    let mut g: Vec<FpPoly> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let unit = || vec![ring.constant(1)];

    for f in gens {
        let h = ring.normal_form(&f, &g);
        if h.terms.is_empty() {
            continue;
        }
        if h.terms[0].0.deg == 0 {
            return unit();
        }
        let k = g.len();
        g.push(ring.monic(&h));
        pending.extend((0..k).map(|i| (i, k)));
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm first, ties by index
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = g[a.0].terms[0].0.lcm(&g[a.1].terms[0].0);
                let lb = g[b.0].terms[0].0.lcm(&g[b.1].terms[0].0);
                compare(ring.order, &la, &lb).then(a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        let (li, lj) = (&g[i].terms[0].0, &g[j].terms[0].0);
        if li.coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && g[k].terms[0].0.divides(&l)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = ring.normal_form(&ring.s_poly(&g[i], &g[j]), &g);
        if h.terms.is_empty() {
            continue;
        }
        if h.terms[0].0.deg == 0 {
            return unit();
        }
        let k = g.len();
        g.push(ring.monic(&h));
        pending.extend((0..k).map(|i| (i, k)));
    }

    // minimalize: drop elements whose leading monomial is a multiple of another's
    let mut keep: Vec<FpPoly> = Vec::new();
    for (i, f) in g.iter().enumerate() {
        let lm = &f.terms[0].0;
        let redundant = g.iter().enumerate().any(|(j, h)| {
            let lh = &h.terms[0].0;
            j != i && lh.divides(lm) && (lh != lm || j < i)
        });
        if !redundant {
            keep.push(f.clone());
        }
    }
    // interreduce
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<FpPoly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, f)| f.clone()).collect();
        let lead = FpPoly { terms: vec![keep[i].terms[0].clone()] };
        let tail = FpPoly { terms: keep[i].terms[1..].to_vec() };
        let reduced = ring.add(&lead, &ring.normal_form(&tail, &others));
        out.push(ring.monic(&reduced));
    }
    out.sort_by(|a, b| compare(ring.order, &a.terms[0].0, &b.terms[0].0));
    out
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, ZeroDimError> {
    if f.field() != gb.field || f.grading() != &gb.grading {
        return Err(ZeroDimError::Mismatch);
    }
    let h = gb.ring.normal_form(&to_fp(f, &gb.ring, &gb.perm)?, &gb.polys);
    Ok(from_fp(&h, gb.field, &gb.grading, &gb.perm))
}

/// Number of standard monomials of the basis.
pub fn quotient_dimension(gb: &GroebnerBasis) -> Result<usize, ZeroDimError> {
    staircase_size(gb.ring.nvars, &gb.polys)
}

fn staircase_size(n: usize, polys: &[FpPoly]) -> Result<usize, ZeroDimError> {
    let leads: Vec<&Mono> = polys.iter().map(|f| &f.terms[0].0).collect();
    if leads.iter().any(|m| m.deg == 0) {
        return Ok(0);
    }
    for v in 0..n {
        if !leads.iter().any(|m| m.pure_power_var() == Some(v)) {
            return Err(ZeroDimError::NotZeroDimensional);
        }
    }
    fn count(i: usize, e: &mut Vec<u16>, leads: &[&Mono]) -> usize {
        if i == e.len() {
            return 1;
        }
        let mut total = 0;
        loop {
            let m = Mono::new(e.clone());
            if leads.iter().any(|l| l.divides(&m)) {
                break;
            }
            total += count(i + 1, e, leads);
            e[i] += 1;
        }
        e[i] = 0;
        total
    }
    Ok(count(0, &mut vec![0; n], &leads))
}

/// Outcome of the projective degree protocol.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ProjectiveDegree {
    /// Modal value over successful trials.
    pub degree: usize,
    /// Per-trial quotient dimension; `None` when the chart was not
    /// zero-dimensional.
    pub trials: Vec<Option<usize>>,
    /// Every trial succeeded with the same value.
    pub stable: bool,
    /// Every computed basis passed the S-polynomial check.
    pub verified: bool,
}

/// Degree of the projective scheme cut out by homogeneous `gens`, counted in
/// the affine chart `y_n = 1` after a random linear change of coordinates.
pub fn projective_degree(gens: &[Polynomial], seed: u64, trials: usize) -> Result<ProjectiveDegree, ZeroDimError> {
    let (p, grading) = check_inputs(gens)?;
    if grading.axes() != 1 || (0..grading.nvars()).any(|i| grading.weight(i) != [1]) {
        return Err(ZeroDimError::NotStandardGraded);
    }
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(ZeroDimError::Inhomogeneous);
    }
    let n = grading.nvars();
    let ident: Vec<usize> = (0..n).collect();
    let full = FpRing { nvars: n, p, order: OrderKind::DegRevLex };
    let fps = gens.iter().map(|g| to_fp(g, &full, &ident)).collect::<Result<Vec<_>, _>>()?;

    let results: Vec<(Option<usize>, bool)> = (0..trials.max(1))
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, t as u64));
            let a = random_invertible(n, p, &mut rng);
            let chart = FpRing { nvars: n - 1, p, order: OrderKind::DegRevLex };
            let images: Vec<FpPoly> = (0..n)
                .map(|i| {
                    chart.from_terms((0..n).map(|j| {
                        let mut e = vec![0u16; n - 1];
                        if j < n - 1 {
                            e[j] = 1;
                        }
                        (Mono::new(e), a[i][j])
                    }))
                })
                .collect();
            let affine: Vec<FpPoly> = fps.iter().map(|f| substitute(&chart, f, &images)).collect();
            let gb = reduced_groebner(&chart, affine);
            (staircase_size(n - 1, &gb).ok(), s_pairs_vanish(&chart, &gb))
        })
        .collect();
    let verified = results.iter().all(|r| r.1);
    let results: Vec<Option<usize>> = results.into_iter().map(|r| r.0).collect();

    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in results.iter().flatten() {
        *counts.entry(*v).or_insert(0) += 1;
    }
    let (&degree, _) = counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .ok_or(ZeroDimError::AllTrialsFailed)?;
    let stable = results.iter().all(|r| *r == Some(degree));
    Ok(ProjectiveDegree { degree, trials: results, stable, verified })
}

fn random_invertible(n: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    loop {
        let a: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
        if fp_rank(a.clone(), p) == n {
            return a;
        }
    }
}

fn fp_rank(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let (rows, cols) = (a.len(), a.first().map_or(0, |r| r.len()));
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = mod_inverse(a[rank][c], p);
        for r in rank + 1..rows {
            let f = mulmod(a[r][c], inv, p);
            if f == 0 {
                continue;
            }
            for k in c..cols {
                a[r][k] = (a[r][k] + p - mulmod(f, a[rank][k], p)) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn substitute(ring: &FpRing, f: &FpPoly, images: &[FpPoly]) -> FpPoly {
    let mut powers: Vec<Vec<FpPoly>> = images.iter().map(|g| vec![ring.constant(1), g.clone()]).collect();
    let mut acc = ring.zero();
    for (m, c) in &f.terms {
        let mut t = ring.constant(*c);
        for (i, &k) in m.e.iter().enumerate() {
            let k = k as usize;
            while powers[i].len() <= k {
                let next = ring.mul(powers[i].last().unwrap(), &images[i]);
                powers[i].push(next);
            }
            if k > 0 {
                t = ring.mul(&t, &powers[i][k]);
            }
        }
        acc = ring.add(&acc, &t);
    }
    acc
}

#[cfg(test)]
mod tests;
