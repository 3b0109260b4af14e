//! The executable checks behind each registered claim.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::cases::{cases, prym_ledger, LedgerEntry};
use super::{linear_system_dim, Claim, Comparison, Cost, Kind, Outcome, RunConfig, Status, Value};
use crate::birat::{self, maps, model_transfer_solvable, pullback_kernel_dim, pullback_rank};
use crate::chow::{adjunction_genus, degree, intersection_number, presentations, ChowClass, RingPresentation};
use crate::lattice::{self, catalog as lat};
use crate::poly::{
    derive_seed, discriminant_binary_quadratic, random_form, resultant_univariate, CoefficientField, Grading,
    Multidegree, Polynomial, PolynomialMatrix,
};
use crate::zerodim::{buchberger, normal_form, projective_degree, MonomialOrder};

const Q: CoefficientField = CoefficientField::Rational;

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

fn int(v: i64) -> Result<Outcome, String> {
    Ok(Outcome::stable(Value::Int(v)))
}

fn list(v: Vec<i64>) -> Result<Outcome, String> {
    Ok(Outcome::stable(Value::List(v)))
}

fn boolean(b: bool) -> Result<Outcome, String> {
    Ok(Outcome::stable(Value::Bool(b)))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn md(v: &[u32]) -> Multidegree {
    Multidegree::new(v.to_vec())
}

/// Dimension of `PGL(n+1)`.
fn pgl_dim(n: i64) -> i64 {
    (n + 1) * (n + 1) - 1
}

fn sections(dims: &[i64], d: &[i64]) -> Result<i64, String> {
    Ok(linear_system_dim(dims, d).map_err(err)? + 1)
}

fn ledger_total(entry: LedgerEntry) -> Result<Outcome, String> {
    ensure(entry.holds(), format!("ledger {} fails: terms sum to {}", entry.render(), entry.sum()))?;
    int(entry.sum())
}

// ---------------------------------------------------------------- chow

fn class(pres: &Arc<RingPresentation>, parts: &[(i64, &str)]) -> Result<ChowClass, String> {
    pres.linear(parts).map_err(err)
}

fn genus(pres: &Arc<RingPresentation>, parts: &[(i64, &str)]) -> Result<i64, String> {
    adjunction_genus(pres, &class(pres, parts)?).map_err(err)
}

fn deg(pres: &Arc<RingPresentation>, factors: &[ChowClass]) -> Result<i64, String> {
    let mut acc = pres.constant(1);
    for f in factors {
        acc = acc.try_mul(f).map_err(err)?;
    }
    degree(pres, &acc).map_err(err)
}

fn dp_genus_f1(_: &RunConfig) -> Result<Outcome, String> {
    let f1 = presentations::hirzebruch_f1();
    let v = (3..=6).map(|n| genus(&f1, &[(5, "xi"), (n + 3, "f")])).collect::<Result<_, _>>()?;
    list(v)
}

fn dp_genus_f0(_: &RunConfig) -> Result<Outcome, String> {
    let f0 = presentations::p1xp1();
    let v = (4..=7).map(|n| genus(&f0, &[(n, "h1"), (5, "h2")])).collect::<Result<_, _>>()?;
    list(v)
}

/// Component genera of `D = D1 + D2`, checking `g(D) = g1 + g2 + D1.D2 - 1`.
fn split(pres: &Arc<RingPresentation>, d1: &[(i64, &str)], d2: &[(i64, &str)]) -> Result<(i64, i64), String> {
    let (c1, c2) = (class(pres, d1)?, class(pres, d2)?);
    let g1 = adjunction_genus(pres, &c1).map_err(err)?;
    let g2 = adjunction_genus(pres, &c2).map_err(err)?;
    let meet = intersection_number(pres, &c1, &c2).map_err(err)?;
    let g = adjunction_genus(pres, &c1.try_add(&c2).map_err(err)?).map_err(err)?;
    ensure(meet > 0, "components do not meet")?;
    ensure(g == g1 + g2 + meet - 1, format!("nodal genus mismatch: {g} != {g1} + {g2} + {meet} - 1"))?;
    Ok((g1, g2))
}

fn dp_split_f1(_: &RunConfig) -> Result<Outcome, String> {
    let f1 = presentations::hirzebruch_f1();
    let mut v = Vec::new();
    for n in 3..=6 {
        let (g1, g2) = split(&f1, &[(2, "xi"), (3, "f")], &[(3, "xi"), (n, "f")])?;
        v.extend([g1, g2]);
    }
    list(v)
}

fn dp_split_f0(_: &RunConfig) -> Result<Outcome, String> {
    let f0 = presentations::p1xp1();
    let mut v = Vec::new();
    for n in 4..=7 {
        let (g1, g2) = split(&f0, &[(2, "h1"), (2, "h2")], &[(n - 2, "h1"), (3, "h2")])?;
        v.extend([g1, g2]);
    }
    list(v)
}

fn h22_xi5(_: &RunConfig) -> Result<Outcome, String> {
    let p = presentations::height22_bundle();
    let xi = class(&p, &[(1, "xi")])?;
    int(deg(&p, &[xi.pow(5)])?)
}

/// Classes on P(V*): `H = xi - h` and the two divisors cutting out X.
fn h22_classes() -> Result<(Arc<RingPresentation>, ChowClass, ChowClass, ChowClass), String> {
    let p = presentations::height22_bundle();
    let big_h = class(&p, &[(1, "xi"), (-1, "h")])?;
    let d1 = class(&p, &[(2, "xi")])?;
    let d2 = class(&p, &[(2, "xi"), (-1, "h")])?;
    Ok((p, big_h, d1, d2))
}

fn h22_degphi(_: &RunConfig) -> Result<Outcome, String> {
    let (p, big_h, d1, d2) = h22_classes()?;
    int(deg(&p, &[big_h.pow(3), d1, d2])?)
}

/// `K_X = (K + D1 + D2)|_X` and `R = K_X + 4 H`.
fn h22_ramification() -> Result<(Arc<RingPresentation>, ChowClass, ChowClass, ChowClass, ChowClass), String> {
    let (p, big_h, d1, d2) = h22_classes()?;
    let kx = p.canonical().try_add(&d1).map_err(err)?.try_add(&d2).map_err(err)?;
    let r = kx.try_add(&big_h.scale(4)).map_err(err)?;
    Ok((p, big_h, d1, d2, r))
}

fn h22_ram(_: &RunConfig) -> Result<Outcome, String> {
    let (p, big_h, _, _, r) = h22_ramification()?;
    let kx = r.try_sub(&big_h.scale(4)).map_err(err)?;
    ensure(kx == class(&p, &[(-1, "xi"), (1, "h")])?, format!("K_X = {} differs from -xi + h", kx.polynomial()))?;
    boolean(r == big_h.scale(3))
}

fn h22_branch6(_: &RunConfig) -> Result<Outcome, String> {
    let (p, big_h, d1, d2, r) = h22_ramification()?;
    int(deg(&p, &[r, big_h.pow(2), d1, d2])?)
}

/// Generic-coefficient forms in `y0..y3`: the grading holds `x0, x1, z`,
/// `y0..y3`, then one coefficient variable per monomial of each form.
struct GenericForms {
    grading: Arc<Grading>,
    forms: BTreeMap<&'static str, Polynomial>,
}

impl GenericForms {
    fn new(linear: &[&'static str], quadrics: &[&'static str]) -> Self {
        let mut names: Vec<String> = ["x0", "x1", "z", "y0", "y1", "y2", "y3"].iter().map(|s| s.to_string()).collect();
        for l in linear {
            names.extend((0..4).map(|i| format!("{l}_{i}")));
        }
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect();
        for q in quadrics {
            names.extend(pairs.iter().map(|(i, j)| format!("{q}_{i}{j}")));
        }
        let grading = Grading::standard(&names);
        let v = |n: &str| Polynomial::var(Q, &grading, n).expect("declared variable");
        let y: Vec<Polynomial> = (0..4).map(|i| v(&format!("y{i}"))).collect();
        let mut forms = BTreeMap::new();
        for l in linear {
            let f = (0..4).fold(Polynomial::zero(Q, &grading), |acc, i| &acc + &(&v(&format!("{l}_{i}")) * &y[i]));
            forms.insert(*l, f);
        }
        for q in quadrics {
            let f = pairs.iter().fold(Polynomial::zero(Q, &grading), |acc, &(i, j)| {
                &acc + &(&v(&format!("{q}_{i}{j}")) * &(&y[i] * &y[j]))
            });
            forms.insert(*q, f);
        }
        GenericForms { grading, forms }
    }

    fn var(&self, n: &str) -> Polynomial {
        Polynomial::var(Q, &self.grading, n).expect("declared variable")
    }

    fn get(&self, n: &str) -> &Polynomial {
        &self.forms[n]
    }
}

/// Resultant in `z` → coefficients of the binary form in `x0, x1` →
/// `b^2 - ac` → division by `-L^2`, compared with `det(M)`; every
/// coefficient of `L, Q0, Q1, Q'00, Q'01, Q'11` is an indeterminate.
fn h22_det_m(_: &RunConfig) -> Result<Outcome, String> {
    let g = GenericForms::new(&["L"], &["Q0", "Q1", "P00", "P01", "P11"]);
    let (l, q0, q1) = (g.get("L"), g.get("Q0"), g.get("Q1"));
    let (p00, p01, p11) = (g.get("P00"), g.get("P01"), g.get("P11"));
    let (x0, x1, z) = (g.var("x0"), g.var("x1"), g.var("z"));
    let zi = g.grading.var_index("z").map_err(err)?;
    let (i0, i1) = (0, 1);

    let quad = &(&(p00 * &(&x0 * &x0)) + &(p01 * &(&x0 * &x1)).scale_i64(2)) + &(p11 * &(&x1 * &x1));
    let f1 = &(&z * &z) - &quad;
    let f2 = &(&(q0 * &x0) + &(q1 * &x1)) - &(&z * l);
    let res = resultant_univariate(&f1, &f2, zi).map_err(err)?;

    let l2 = l * l;
    let a_exp = &(p00 * &l2) - &(q0 * q0);
    let b_exp = &(p01 * &l2) - &(q0 * q1);
    let c_exp = &(p11 * &l2) - &(q1 * q1);
    let eliminated =
        &(&(&a_exp * &(&x0 * &x0)) + &(&b_exp * &(&x0 * &x1)).scale_i64(2)) + &(&c_exp * &(&x1 * &x1));
    ensure(res.equal_up_to_scalar(&eliminated), "resultant in z is not the eliminated binary form")?;

    let a = res.coefficient(i0, 2);
    let b = res.coefficient(i0, 1).coefficient(i1, 1).scale(&BigRational::new(BigInt::from(1), BigInt::from(2))).map_err(err)?;
    let c = res.coefficient(i1, 2);
    let disc = discriminant_binary_quadratic(&a, &b, &c).map_err(err)?;

    let displayed = &(&(&l2 * &l2) * &(&(p01 * p01) - &(p00 * p11)))
        + &(&l2 * &(&(&(&(p01 * q0) * q1).scale_i64(-2) + &(p00 * &(q1 * q1))) + &(p11 * &(q0 * q0))));
    ensure(disc == displayed, "discriminant differs from the displayed expansion")?;

    let quotient = disc.exact_divide(&l2.neg()).map_err(err)?;
    let m = PolynomialMatrix::from_rows(vec![
        vec![l2.clone(), q0.clone(), q1.clone()],
        vec![q0.clone(), p00.clone(), p01.clone()],
        vec![q1.clone(), p01.clone(), p11.clone()],
    ])
    .map_err(err)?;
    let det = m.determinant().map_err(err)?;
    boolean(!det.is_zero() && quotient.equal_up_to_scalar(&det))
}

// ---------------------------------------------------------------- zerodim

/// Runs `build` for each of three instance seeds over each of the two
/// primes, taking the projective degree of every instance. Agreement of
/// all six stable values is required; otherwise the modal value is
/// reported as unstable.
fn zerodim_protocol<F>(cfg: &RunConfig, label: u64, build: F) -> Result<(i64, bool), String>
where
    F: Fn(CoefficientField, u64) -> Result<Vec<Polynomial>, String> + Sync,
{
    let jobs: Vec<(u64, u64)> = [cfg.prime, cfg.second_prime].iter().flat_map(|&p| (0..3).map(move |k| (p, k))).collect();
    let runs: Vec<Result<(usize, bool), String>> = jobs
        .par_iter()
        .map(|&(p, k)| {
            let field = CoefficientField::prime(p).map_err(err)?;
            let inst = derive_seed(derive_seed(cfg.seed, label), k);
            let gens = build(field, inst)?;
            let pd = projective_degree(&gens, derive_seed(inst, 0x5eed), cfg.trials).map_err(err)?;
            ensure(pd.verified, "a Gröbner basis failed the S-polynomial check")?;
            Ok((pd.degree, pd.stable))
        })
        .collect();
    let ok: Vec<(usize, bool)> = runs.iter().filter_map(|r| r.as_ref().ok().copied()).collect();
    if ok.is_empty() {
        return Err(runs.into_iter().find_map(Result::err).unwrap_or_default());
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (d, _) in &ok {
        *counts.entry(*d).or_insert(0) += 1;
    }
    let modal = counts.iter().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0))).map(|(d, _)| *d).unwrap();
    let stable = ok.len() == runs.len() && ok.iter().all(|&(d, s)| s && d == modal);
    Ok((modal as i64, !stable))
}

fn zerodim_outcome(r: Result<(i64, bool), String>) -> Result<Outcome, String> {
    let (v, unstable) = r?;
    Ok(Outcome { value: Value::Int(v), unstable })
}

fn form(g: &Arc<Grading>, d: u32, field: CoefficientField, seed: u64, k: u64) -> Result<Polynomial, String> {
    random_form(g, &md(&[d]), field, derive_seed(seed, k)).map_err(err)
}

/// Random instance of `M` over `field` on `P^3`.
fn h22_instance(field: CoefficientField, seed: u64) -> Result<(Polynomial, Polynomial, Polynomial, PolynomialMatrix), String> {
    let g = Grading::standard(&["y0", "y1", "y2", "y3"]);
    let l = form(&g, 1, field, seed, 0)?;
    let q0 = form(&g, 2, field, seed, 1)?;
    let q1 = form(&g, 2, field, seed, 2)?;
    let p00 = form(&g, 2, field, seed, 3)?;
    let p01 = form(&g, 2, field, seed, 4)?;
    let p11 = form(&g, 2, field, seed, 5)?;
    let m = PolynomialMatrix::from_rows(vec![
        vec![&l * &l, q0.clone(), q1.clone()],
        vec![q0.clone(), p00, p01.clone()],
        vec![q1.clone(), p01, p11],
    ])
    .map_err(err)?;
    Ok((l, q0, q1, m))
}

const LABEL_MINORS: u64 = 1;
const LABEL_LQQ: u64 = 2;
const LABEL_JAC: u64 = 3;
const LABEL_D6: u64 = 4;
const LABEL_D8: u64 = 5;

fn minors32(cfg: &RunConfig) -> Result<(i64, bool), String> {
    zerodim_protocol(cfg, LABEL_MINORS, |field, seed| Ok(h22_instance(field, seed)?.3.minors(2)))
}

fn lqq4(cfg: &RunConfig) -> Result<(i64, bool), String> {
    zerodim_protocol(cfg, LABEL_LQQ, |field, seed| {
        let (l, q0, q1, _) = h22_instance(field, seed)?;
        Ok(vec![l, q0, q1])
    })
}

fn h22_minors32(cfg: &RunConfig) -> Result<Outcome, String> {
    zerodim_outcome(minors32(cfg))
}

fn h22_lqq4(cfg: &RunConfig) -> Result<Outcome, String> {
    zerodim_outcome(lqq4(cfg))
}

fn h22_ledger(cfg: &RunConfig) -> Result<Outcome, String> {
    let (m, u1) = minors32(cfg)?;
    let (l, u2) = lqq4(cfg)?;
    let nodes = LedgerEntry::new("h22.nodes", &[("minor-locus nodes", m), ("L=Q0=Q1=0 nodes", l)], 36);
    let hodge = LedgerEntry::new(
        "h22.hodge",
        &[("n", nodes.sum()), ("-r", -2), ("+1", 1), ("h12 of the resolution", 22 - 5)],
        52,
    );
    let value = hodge.sum();
    if u1 || u2 {
        return Ok(Outcome { value: Value::Int(value), unstable: true });
    }
    ensure(nodes.holds(), format!("{} fails", nodes.render()))?;
    ledger_total(hodge)
}

fn h22_jac36(cfg: &RunConfig) -> Result<Outcome, String> {
    zerodim_outcome(zerodim_protocol(cfg, LABEL_JAC, |field, seed| {
        let det = h22_instance(field, seed)?.3.determinant().map_err(err)?;
        (0..4).map(|i| det.partial_derivative(i).map_err(err)).collect()
    }))
}

/// `W = L1*Q0 - L0*Q1`: every partial of `W` lies in `(L0, L1, Q0, Q1)`.
fn singular_along(w: &Polynomial, ideal: &[Polynomial]) -> Result<(), String> {
    let gb = buchberger(ideal, MonomialOrder::default()).map_err(err)?;
    ensure(gb.s_pairs_reduce_to_zero(), "basis failed the S-polynomial check")?;
    for i in 0..w.grading().nvars() {
        let nf = normal_form(&w.partial_derivative(i).map_err(err)?, &gb).map_err(err)?;
        ensure(nf.is_zero(), "determinantal hypersurface is not singular along the base locus")?;
    }
    Ok(())
}

fn d6_nodes8(cfg: &RunConfig) -> Result<Outcome, String> {
    zerodim_outcome(zerodim_protocol(cfg, LABEL_D6, |field, seed| {
        let names: Vec<String> = (0..6).map(|i| format!("x{i}")).collect();
        let g = Grading::standard(&names);
        let (l0, l1) = (form(&g, 1, field, seed, 0)?, form(&g, 1, field, seed, 1)?);
        let (q0, q1) = (form(&g, 2, field, seed, 2)?, form(&g, 2, field, seed, 3)?);
        let q = form(&g, 2, field, seed, 4)?;
        let w = &(&l1 * &q0) - &(&l0 * &q1);
        singular_along(&w, &[l0.clone(), l1.clone(), q0.clone(), q1.clone()])?;
        Ok(vec![l0, l1, q0, q1, q])
    }))
}

fn d8_nodes4(cfg: &RunConfig) -> Result<Outcome, String> {
    zerodim_outcome(zerodim_protocol(cfg, LABEL_D8, |field, seed| {
        let names: Vec<String> = (0..7).map(|i| format!("x{i}")).collect();
        let g = Grading::standard(&names);
        let lin: Vec<Polynomial> = (0..4).map(|k| form(&g, 1, field, seed, k)).collect::<Result<_, _>>()?;
        let (q0, q1) = (form(&g, 2, field, seed, 4)?, form(&g, 2, field, seed, 5)?);
        let w = &(&lin[1] * &lin[2]) - &(&lin[0] * &lin[3]);
        singular_along(&w, &lin)?;
        Ok(vec![lin[0].clone(), lin[1].clone(), lin[2].clone(), lin[3].clone(), q0, q1])
    }))
}

// ---------------------------------------------------------------- elimination

/// Eliminating `s, t` from `s*A0 + t*A1 = s*B0 + t*B1 = 0` gives
/// `A1*B0 - A0*B1`, checked on free symbols and on a seeded instance of the
/// given degrees in `n + 1` variables.
fn elimination(cfg: &RunConfig, n: usize, deg_b: u32, label: u64) -> Result<Outcome, String> {
    let sym = Grading::standard(&["s", "a0", "a1", "b0", "b1"]);
    let v = |i| Polynomial::var_at(Q, &sym, i);
    let (s, a0, a1, b0, b1) = (v(0), v(1), v(2), v(3), v(4));
    let res = resultant_univariate(&(&(&s * &a0) + &a1), &(&(&s * &b0) + &b1), 0).map_err(err)?;
    let target = &(&a1 * &b0) - &(&a0 * &b1);
    ensure(res.equal_up_to_scalar(&target), "symbolic elimination mismatch")?;

    let mut names = vec!["s".to_string()];
    names.extend((0..=n).map(|i| format!("x{i}")));
    let g = Grading::standard(&names);
    let seed = derive_seed(cfg.seed, label);
    let s = Polynomial::var_at(Q, &g, 0);
    let x_only = |d: u32, k: u64| -> Result<Polynomial, String> {
        // forms in the x's only: set s to zero in a random form
        let f = form(&g, d, Q, seed, k)?;
        f.evaluate_partial(&[(0, BigRational::from_integer(BigInt::from(0)))]).map_err(err)
    };
    let (l0, l1) = (x_only(1, 0)?, x_only(1, 1)?);
    let (m0, m1) = (x_only(deg_b, 2)?, x_only(deg_b, 3)?);
    let res = resultant_univariate(&(&(&s * &l0) + &l1), &(&(&s * &m0) + &m1), 0).map_err(err)?;
    let det = PolynomialMatrix::from_rows(vec![vec![l0, l1], vec![m0, m1]]).map_err(err)?.determinant().map_err(err)?;
    boolean(!det.is_zero() && res.equal_up_to_scalar(&det))
}

fn d6_elim(cfg: &RunConfig) -> Result<Outcome, String> {
    elimination(cfg, 5, 2, LABEL_D6)
}

fn d8_elim(cfg: &RunConfig) -> Result<Outcome, String> {
    elimination(cfg, 6, 1, LABEL_D8)
}

fn d8_septic(_: &RunConfig) -> Result<Outcome, String> {
    int(genus(&presentations::plane(), &[(7, "h")])?)
}

// ---------------------------------------------------------------- V1

fn v1_pres(_: &RunConfig) -> Result<Outcome, String> {
    let p = presentations::veronese_cone_blowup();
    let e = class(&p, &[(1, "xi"), (-2, "h")])?;
    let xi = class(&p, &[(1, "xi")])?;
    ensure(xi.try_mul(&e).map_err(err)?.is_zero(), "xi . E is not zero")?;
    int(deg(&p, &[e.pow(3)])?)
}

fn v1_adjunction_class() -> Result<(Arc<RingPresentation>, ChowClass), String> {
    let p = presentations::veronese_cone_blowup();
    let b = class(&p, &[(2, "xi"), (2, "h")])?;
    let kb = p.canonical().try_add(&b).map_err(err)?;
    Ok((p, kb))
}

fn v1_adj(_: &RunConfig) -> Result<Outcome, String> {
    let (p, kb) = v1_adjunction_class()?;
    boolean(kb == class(&p, &[(1, "h")])?)
}

fn v1_conic(_: &RunConfig) -> Result<Outcome, String> {
    let p = presentations::veronese_cone_blowup();
    let b = class(&p, &[(2, "xi"), (2, "h")])?;
    let e = class(&p, &[(1, "xi"), (-2, "h")])?;
    let h = class(&p, &[(1, "h")])?;
    int(deg(&p, &[b, e, h])?)
}

/// Degree of the branch curve of the double cover `B~ -> P^2` from
/// `K_B~ = pi^*(K_P2 + D/2)`.
fn v1_octic_degree() -> Result<i64, String> {
    let (p, kb) = v1_adjunction_class()?;
    let h = class(&p, &[(1, "h")])?;
    let xi = class(&p, &[(1, "xi")])?;
    let c = deg(&p, &[kb.clone(), xi, h.clone()])?;
    ensure(kb == h.scale(c), "K_B~ is not a multiple of h")?;
    let plane = presentations::plane();
    let hp = class(&plane, &[(1, "h")])?;
    let k_plane = degree(&plane, &plane.canonical().try_mul(&hp).map_err(err)?).map_err(err)?;
    Ok(2 * (c - k_plane))
}

fn v1_genus21(_: &RunConfig) -> Result<Outcome, String> {
    let d = v1_octic_degree()?;
    int(genus(&presentations::plane(), &[(d, "h")])?)
}

fn v1_params(_: &RunConfig) -> Result<Outcome, String> {
    let d = v1_octic_degree()?;
    let octics = linear_system_dim(&[2], &[d]).map_err(err)?;
    ledger_total(LedgerEntry::new(
        "v1.params",
        &[("plane octics", octics), ("eight tangency conditions", -(d)), ("unlabeled in source", -3)],
        33,
    ))
}

fn v1_prym(_: &RunConfig) -> Result<Outcome, String> {
    let g = genus(&presentations::plane(), &[(v1_octic_degree()?, "h")])?;
    ledger_total(LedgerEntry::new("v1.prym", &[("genus of the octic", g), ("-1", -1)], 20))
}

// ---------------------------------------------------------------- quartic double solid

fn qds_genus10(_: &RunConfig) -> Result<Outcome, String> {
    int(genus(&presentations::plane(), &[(6, "h")])?)
}

/// `D.C = 2|Z|` and `deg eta = deg O_D(1) - |Z|`; `2 eta = O_D(2) - C|_D`
/// has degree zero as well.
fn qds_eta(_: &RunConfig) -> Result<Outcome, String> {
    let p = presentations::plane();
    let (d, c, h) = (class(&p, &[(6, "h")])?, class(&p, &[(2, "h")])?, class(&p, &[(1, "h")])?);
    let dc = intersection_number(&p, &d, &c).map_err(err)?;
    ensure(dc % 2 == 0, "D.C is odd")?;
    let z = dc / 2;
    let eta = intersection_number(&p, &d, &h).map_err(err)? - z;
    ensure(2 * eta == 2 * intersection_number(&p, &d, &h).map_err(err)? - dc, "2 eta is not O_D(2) - C")?;
    list(vec![dc, eta])
}

// ---------------------------------------------------------------- P1 x P2

fn p12_params(_: &RunConfig) -> Result<Outcome, String> {
    let p1 = sections(&[1], &[2])?;
    let p2 = sections(&[2], &[4])?;
    ensure(p1 * p2 == sections(&[1, 2], &[2, 4])?, "section count of O(2,4) does not factor")?;
    ledger_total(LedgerEntry::new(
        "p12.params",
        &[("3 x 15 sections of O(2,4)", p1 * p2), ("scaling", -1), ("Aut P1", -pgl_dim(1)), ("Aut P2", -pgl_dim(2))],
        33,
    ))
}

fn p12_cremona(_: &RunConfig) -> Result<Outcome, String> {
    let map = maps::cremona_product(Q);
    let d = md(&[2, 2, 2]);
    let cond = maps::singular_along_two_lines(Q);
    let constrained = cond.basis_forms().map_err(err)?;
    let rank = pullback_rank(&map, &d).map_err(err)?;
    ensure(rank as i64 == sections(&[1, 1, 1], &[2, 2, 2])?, "pullback of (2,2,2) forms is not injective")?;
    // span of the images together with the constrained basis
    let mut polys = birat::pullback_columns(&map, &d).map_err(err)?;
    polys.extend(constrained.iter().cloned());
    let joint = birat::coefficient_matrix(Q, &polys).rank();
    list(vec![constrained.len() as i64, rank as i64, joint as i64])
}

// ---------------------------------------------------------------- P2 x P2

fn p22_params(_: &RunConfig) -> Result<Outcome, String> {
    ledger_total(
        LedgerEntry::new(
            "p22.params",
            &[("sections of O(2,2)", sections(&[2, 2], &[2, 2])?), ("scaling", -1), ("Aut P2 x Aut P2", -2 * pgl_dim(2))],
            19,
        )
        .with_note("term decomposition supplied by the implementer"),
    )
}

fn p22_f12params(_: &RunConfig) -> Result<Outcome, String> {
    // (2,2) forms vanishing on F(1,2) are the multiples of its equation
    let vanishing = pullback_kernel_dim(&maps::two_point_projection(Q), &md(&[2, 2])).map_err(err)? as i64;
    ensure(vanishing == sections(&[2, 2], &[1, 1])?, "kernel is not the multiples of the (1,1) equation")?;
    ledger_total(
        LedgerEntry::new(
            "p22.f12params",
            &[
                ("sections of O(2,2)", sections(&[2, 2], &[2, 2])?),
                ("multiples of the (1,1) equation", -vanishing),
                ("scaling", -1),
                ("Aut F(1,2)", -pgl_dim(2)),
            ],
            18,
        )
        .with_note("term decomposition supplied by the implementer"),
    )
}

fn p22_lattice(_: &RunConfig) -> Result<Outcome, String> {
    let emb = lat::phi_embedding();
    ensure(lattice::verify_embedding(&emb), "h - R1, h - R2 does not preserve the form")?;
    let found = lattice::search_embeddings(&lat::phi(), &lat::nodal_quartic(2), 1).map_err(err)?;
    boolean(found.iter().any(|m| m.matrix == emb.matrix))
}

/// Counts seeded samples of the nodal family that transfer, and smooth
/// (dense random) quartics that transfer.
fn transfer_counts(
    cfg: &RunConfig,
    map: &birat::RationalMapSpec,
    target: &Multidegree,
    cofactor: Option<&Multidegree>,
    nodes: &[usize],
    label: u64,
) -> Result<(i64, i64), String> {
    let cond = maps::nodal_quartics(Q, nodes);
    let p3 = map.source().grading().clone();
    let results: Vec<Result<(bool, bool), String>> = (0..5u64)
        .into_par_iter()
        .map(|k| {
            let seed = derive_seed(derive_seed(cfg.seed, label), k);
            let nodal = cond.sample(seed).map_err(err)?;
            let smooth = random_form(&p3, &md(&[4]), Q, derive_seed(seed, 1)).map_err(err)?;
            let a = model_transfer_solvable(map, target, &nodal, cofactor).map_err(err)?;
            let b = model_transfer_solvable(map, target, &smooth, cofactor).map_err(err)?;
            Ok((a, b))
        })
        .collect();
    let mut counts = (0, 0);
    for r in results {
        let (a, b) = r?;
        counts.0 += a as i64;
        counts.1 += b as i64;
    }
    Ok(counts)
}

fn p22_proj(cfg: &RunConfig) -> Result<Outcome, String> {
    let map = maps::two_point_projection(Q);
    let kernel = pullback_kernel_dim(&map, &md(&[1, 1])).map_err(err)? as i64;
    let (nodal, smooth) = transfer_counts(cfg, &map, &md(&[2, 2]), None, &[0, 1], 6)?;
    list(vec![kernel, nodal, smooth])
}

/// Degree of the discriminant of the conic bundle of a (2,2) divisor, its
/// genus, and the Prym dimension.
fn p22_sextic(cfg: &RunConfig) -> Result<Outcome, String> {
    let g = Grading::product(&[&["u0", "u1", "u2"], &["v0", "v1", "v2"]]);
    let f = random_form(&g, &md(&[2, 2]), Q, derive_seed(cfg.seed, 7)).map_err(err)?;
    let mut rows = Vec::new();
    for i in 3..6 {
        let fi = f.partial_derivative(i).map_err(err)?;
        rows.push((3..6).map(|j| fi.partial_derivative(j)).collect::<Result<Vec<_>, _>>().map_err(err)?);
    }
    let det = PolynomialMatrix::from_rows(rows).map_err(err)?.determinant().map_err(err)?;
    let d = det.multidegree().map_err(err)?;
    ensure(d.0[1] == 0, "discriminant depends on the fiber coordinates")?;
    let degree = d.0[0] as i64;
    let gen = genus(&presentations::plane(), &[(degree, "h")])?;
    list(vec![degree, gen, gen - 1])
}

// ---------------------------------------------------------------- (P1)^3

fn v222_params(_: &RunConfig) -> Result<Outcome, String> {
    ledger_total(LedgerEntry::new(
        "v222.params",
        &[("sections of O(2,2,2)", sections(&[1, 1, 1], &[2, 2, 2])?), ("scaling", -1), ("(Aut P1)^3", -3 * pgl_dim(1))],
        17,
    ))
}

fn v222_lattice(_: &RunConfig) -> Result<Outcome, String> {
    let emb = lat::pi_embedding();
    ensure(lattice::verify_embedding(&emb), "E_i = h - R_j - R_k does not preserve the form")?;
    let found = lattice::search_embeddings(&lat::pi(), &lat::nodal_quartic(3), 1).map_err(err)?;
    ensure(found.iter().any(|m| m.matrix == emb.matrix), "search with bound 1 misses the embedding")?;
    let l = lat::nodal_quartic(3);
    let r0 = l.vector(&[(1, "h"), (-1, "R1"), (-1, "R2"), (-1, "R3")]).map_err(err)?;
    ensure(lattice::gram_product(&l, &r0, &r0).map_err(err)? == -2, "R0^2 != -2")?;
    for i in 1..=3 {
        let ri = l.basis_vector(&format!("R{i}")).map_err(err)?;
        let sum: Vec<i64> = r0.iter().zip(&ri).map(|(a, b)| a + b).collect();
        ensure(lattice::class_identity(&l, &sum, &emb.column(i - 1)).map_err(err)?, format!("E{i} != R0 + R{i}"))?;
    }
    boolean(true)
}

fn v222_disc44(cfg: &RunConfig) -> Result<Outcome, String> {
    let g = Grading::product(&[&["a0", "a1"], &["b0", "b1"], &["c0", "c1"]]);
    let f = random_form(&g, &md(&[2, 2, 2]), Q, derive_seed(cfg.seed, 8)).map_err(err)?;
    let (c0, c1) = (4, 5);
    let a = f.coefficient(c0, 2);
    let b = f.coefficient(c0, 1).coefficient(c1, 1).scale(&BigRational::new(BigInt::from(1), BigInt::from(2))).map_err(err)?;
    let c = f.coefficient(c1, 2);
    let disc = discriminant_binary_quadratic(&a, &b, &c).map_err(err)?;
    let d = disc.multidegree().map_err(err)?;
    ensure(d.0[2] == 0, "discriminant depends on the fiber coordinates")?;
    let gen = genus(&presentations::p1xp1(), &[(d.0[0] as i64, "h1"), (d.0[1] as i64, "h2")])?;
    let table = cases().into_iter().find(|c| c.index.is_none() && c.degree == 12 && c.h12 == 8).ok_or("missing (12,8)")?;
    ensure(gen - 1 == table.h12, "genus - 1 differs from h12 of (12,8)")?;
    list(vec![d.0[0] as i64, d.0[1] as i64, gen])
}

/// `eta = E1 + E2 - E3` against `D = 4(E1 + E2)`, and the conjugate pair
/// `E3`, `2(E1+E2) - E3` meeting `D` equally.
fn v222_eta(_: &RunConfig) -> Result<Outcome, String> {
    let l = lat::pi();
    let eta = l.vector(&[(1, "E1"), (1, "E2"), (-1, "E3")]).map_err(err)?;
    let d = l.vector(&[(4, "E1"), (4, "E2")]).map_err(err)?;
    let e3 = l.basis_vector("E3").map_err(err)?;
    let conj = l.vector(&[(2, "E1"), (2, "E2"), (-1, "E3")]).map_err(err)?;
    let gp = |a: &[i64], b: &[i64]| lattice::gram_product(&l, a, b).map_err(err);
    ensure(gp(&e3, &d)? == gp(&conj, &d)?, "conjugate curves meet D differently")?;
    ensure(gp(&e3, &e3)? == gp(&conj, &conj)?, "conjugate curves have different squares")?;
    int(gp(&eta, &d)?)
}

fn v222_trilinear(cfg: &RunConfig) -> Result<Outcome, String> {
    let map = maps::trilinear(Q);
    let d = md(&[2, 2, 2]);
    let rank = pullback_rank(&map, &d).map_err(err)? as i64;
    let (nodal, smooth) = transfer_counts(cfg, &map, &d, Some(&md(&[2])), &[0, 1, 2], 9)?;
    list(vec![rank, nodal, smooth])
}

// ---------------------------------------------------------------- table

fn cases_table(cfg: &RunConfig) -> Result<Outcome, String> {
    let mut out = Vec::new();
    for case in cases() {
        ensure(case.is_valid(), format!("invalid invariants for {}", case.label()))?;
        if case.discriminant_model.is_some() {
            let r = prym_ledger(&case, cfg).map_err(err)?;
            ensure(r.status == Status::Pass, format!("Prym ledger fails for {}: {}", case.label(), r.computed))?;
            match r.computed {
                Value::Int(v) => out.push(v),
                other => return Err(format!("unexpected ledger value {other}")),
            }
        }
    }
    list(out)
}

// ---------------------------------------------------------------- registry

struct Spec {
    id: &'static str,
    description: &'static str,
    paper_ref: &'static str,
    kind: Kind,
    comparison: Comparison,
    expected: Value,
    cost: Cost,
    entry: &'static str,
    check: super::Check,
}

fn claim(s: Spec) -> Claim {
    Claim {
        id: s.id,
        description: s.description,
        paper_ref: s.paper_ref,
        kind: s.kind,
        comparison: s.comparison,
        expected: s.expected,
        cost: s.cost,
        entry: s.entry,
        check: s.check,
    }
}

macro_rules! claims {
    ($( $id:literal, $kind:ident, $cmp:ident, $expected:expr, $cost:ident, $check:ident,
        $entry:literal, $desc:literal, $pref:literal; )*) => {
        vec![$(claim(Spec {
            id: $id,
            description: $desc,
            paper_ref: $pref,
            kind: Kind::$kind,
            comparison: Comparison::$cmp,
            expected: $expected,
            cost: Cost::$cost,
            entry: $entry,
            check: $check,
        })),*]
    };
}

fn l(v: &[i64]) -> Value {
    Value::List(v.to_vec())
}

pub(super) fn claims() -> Vec<Claim> {
    use Value::{Bool, Int};
    claims![
        "dp.genus.f1", Chow, IntegerList, l(&[10, 14, 18, 22]), Fast, dp_genus_f1,
            "chow::adjunction_genus(F1, 5xi+(n+3)f), n=3..6",
            "genus of 5xi+(n+3)f on F1 is h-4 = 4n-2",
            "[D]=5ξ+(n+3)f on 𝔽₁, g(D)=h(𝒳)−4, h(𝒳)=4n+2";
        "dp.genus.f0", Chow, IntegerList, l(&[12, 16, 20, 24]), Fast, dp_genus_f0,
            "chow::adjunction_genus(P1xP1, (n,5)), n=4..7",
            "genus of bidegree (n,5) on P1xP1 is h-4 = 4n-4",
            "D of bidegree (n,5) on 𝔽₀, g(D)=h(𝒳)−4, h(𝒳)=4n";
        "dp.split.f1", Chow, IntegerList, l(&[1, 1, 1, 3, 1, 5, 1, 7]), Fast, dp_split_f1,
            "chow::adjunction_genus(F1, 2xi+3f | 3xi+nf), n=3..6",
            "component genera (1, 2n-5) of 2xi+3f + 3xi+nf, with nodal genus consistency",
            "D₁∈|2ξ+3f|, D₂∈|3ξ+nf|, g(D₂)=2n−5";
        "dp.split.f0", Chow, IntegerList, l(&[1, 2, 1, 4, 1, 6, 1, 8]), Fast, dp_split_f0,
            "chow::adjunction_genus(P1xP1, (2,2) | (n-2,3)), n=4..7",
            "component genera (1, 2n-6) of (2,2) + (n-2,3), with nodal genus consistency",
            "D₁ of bidegree (2,2), D₂ of bidegree (n−2,3), g(D₂)=2n−6";
        "h22.xi5", Chow, ExactInteger, Int(4), Fast, h22_xi5,
            "chow::degree(P(O+O(1)^4), xi^5)",
            "degree of xi^5 on the height-22 projective bundle",
            "ξ⁵=4ξ⁴h";
        "h22.degphi", Chow, ExactInteger, Int(2), Fast, h22_degphi,
            "chow::degree(P(O+O(1)^4), (xi-h)^3 (2xi) (2xi-h))",
            "degree of the projection of X to P^3",
            "deg(φ)=(ξ−h)³(2ξ)(2ξ−h)=2";
        "h22.ram", Chow, Boolean, Bool(true), Fast, h22_ram,
            "chow::ChowClass equality K_X + 4(xi-h) == 3(xi-h)",
            "ramification class of the double cover X -> P^3",
            "R=K_𝒳−φ*K_{ℙ³}=−ξ+h+4(ξ−h)=3(ξ−h)";
        "h22.branch6", Chow, ExactInteger, Int(6), Fast, h22_branch6,
            "chow::degree(P(O+O(1)^4), R (xi-h)^2 (2xi) (2xi-h))",
            "degree of the branch surface B in P^3",
            "B⊂ℙ³ of degree 6";
        "h22.detM", Symbolic, IdentityUpToScalar, Bool(true), Fast, h22_det_m,
            "poly::resultant_univariate + discriminant_binary_quadratic + exact_divide(-L^2) vs det(M), 54 coefficient indeterminates",
            "discriminant of the eliminated binary form divided by -L^2 is det(M)",
            "L⁴((Q′₀₁)²−Q′₀₀Q′₁₁)+L²(−2Q′₀₁Q₀Q₁+Q′₀₀Q₁²+Q′₁₁Q₀²) ÷ (−L²) = det(M)";
        "h22.minors32", Zerodim, ExactInteger, Int(32), Fast, h22_minors32,
            "zerodim::projective_degree(2x2 minors of M), 3 seeds x 2 primes",
            "degree of the 2x2-minor locus of M in P^3",
            "V(2×2 minors of M): 4·2³=32";
        "h22.lqq4", Zerodim, ExactInteger, Int(4), Fast, h22_lqq4,
            "zerodim::projective_degree(L, Q0, Q1), 3 seeds x 2 primes",
            "degree of L=Q0=Q1=0 in P^3",
            "L=Q₀=Q₁=0: 1·2·2=4";
        "h22.ledger", Arithmetic, ExactInteger, Int(52), Fast, h22_ledger,
            "catalog::LedgerEntry(n - r + 1 + h12) with n = minors32 + lqq4",
            "Hodge ledger of the nodal sextic double solid from the computed node counts",
            "52=n−r+1+h¹(Ω²), r=2, n=32+4=36, h¹(Ω²_𝒳)=22−5=17";
        "h22.jac36", Zerodim, ExactInteger, Int(36), Slow, h22_jac36,
            "zerodim::projective_degree(partials of det(M)), 3 seeds x 2 primes",
            "degree of the Jacobian ideal of det(M)",
            "n=36=32+4";
        "d6.elim", Symbolic, IdentityUpToScalar, Bool(true), Fast, d6_elim,
            "poly::resultant_univariate(s L0 + L1, s Q0 + Q1; s) vs det [[L0,L1],[Q0,Q1]]",
            "eliminating s, t from the (1,1) and (1,2) forms",
            "L₁Q₀−L₀Q₁=det(L₀ L₁; Q₀ Q₁)";
        "d6.nodes8", Zerodim, ExactInteger, Int(8), Fast, d6_nodes8,
            "zerodim::projective_degree(L0, L1, Q0, Q1, Q) in P^5, 3 seeds x 2 primes",
            "nodes of the (2,3) complete intersection on C",
            "C∩{Q=0}={p₁,…,p₈}";
        "d8.elim", Symbolic, IdentityUpToScalar, Bool(true), Fast, d8_elim,
            "poly::resultant_univariate(s L0 + L1, s M0 + M1; s) vs det [[L0,L1],[M0,M1]]",
            "eliminating s, t from the two (1,1) forms",
            "L₁M₀−L₀M₁=det(L₀ L₁; M₀ M₁)";
        "d8.nodes4", Zerodim, ExactInteger, Int(4), Fast, d8_nodes4,
            "zerodim::projective_degree(L0, L1, M0, M1, Q0, Q1) in P^6, 3 seeds x 2 primes",
            "nodes of the three-quadric complete intersection",
            "P∩{Q₀=Q₁=0}={p₁,…,p₄}";
        "d8.septic", Chow, ExactInteger, Int(15), Fast, d8_septic,
            "chow::adjunction_genus(P2, 7h)",
            "genus of the septic discriminant",
            "D⊂ℙ² of degree 7";
        "v1.pres", Chow, ExactInteger, Int(4), Fast, v1_pres,
            "chow::degree(P(O+O(-2))/P2, (xi-2h)^3)",
            "self-intersection of the exceptional plane E = xi - 2h",
            "[E]=ξ−2h, E≅ℙ²";
        "v1.adj", Chow, Boolean, Bool(true), Fast, v1_adj,
            "chow::ChowClass equality K + (2xi+2h) == h",
            "adjunction on the proper transform of the branch divisor",
            "K_{B̃}=h|_{B̃}, [B̃]=2ξ+2h";
        "v1.conic", Chow, ExactInteger, Int(2), Fast, v1_conic,
            "chow::degree(P(O+O(-2))/P2, B~ E h)",
            "B~ meets E in a conic",
            "B̃∩E=C, a plane conic";
        "v1.genus21", Chow, ExactInteger, Int(21), Fast, v1_genus21,
            "chow::adjunction_genus(P2, d h), d from K_B~ = pi^*(K_P2 + D/2)",
            "genus of the octic discriminant",
            "D a plane octic of genus 21";
        "v1.params", Arithmetic, ExactInteger, Int(33), Fast, v1_params,
            "catalog::linear_system_dim(P2, 8) - 8 - 3",
            "parameter count of octics eight-tangent to C",
            "44−8−3=33";
        "v1.prym", Arithmetic, ExactInteger, Int(20), Fast, v1_prym,
            "catalog::LedgerEntry(genus(octic) - 1)",
            "Prym dimension of the octic double cover",
            "IJ(Ṽ)=Prym(D′→D), h¹(Ω²_Ṽ)=20";
        "qds.genus10", Chow, ExactInteger, Int(10), Fast, qds_genus10,
            "chow::adjunction_genus(P2, 6h)",
            "genus of the sextic discriminant",
            "D a plane sextic, h¹(Ω²_V)=10";
        "qds.eta", Chow, IntegerList, l(&[12, 0]), Fast, qds_eta,
            "chow::intersection_number(P2, 6h, 2h), deg O_D(1) - |Z|",
            "D.C and the degree of eta = O_D(1)(-Z)",
            "D∩C=2Z, η=𝒪_D(1)⊗ℐ_Z";
        "p12.params", Arithmetic, ExactInteger, Int(33), Fast, p12_params,
            "catalog::linear_system_dim(P1xP2, (2,4)) - 1 - dim PGL2 - dim PGL3",
            "parameter count of (2,4) double covers",
            "3×15−(1+3+8)=33";
        "p12.cremona", Birat, IntegerList, l(&[27, 27, 27]), Fast, p12_cremona,
            "birat::LinearConditionSet(singular along P1x{p,q}) + pullback_rank(id x Cremona, (2,2,2))",
            "(2,4) forms singular along two lines = injective image of (2,2,2) forms",
            "ℙ¹×ℙ²⇢ℙ¹×ℙ¹×ℙ¹, B₀ ↦ (2,2,2)";
        "p22.params", Arithmetic, ExactInteger, Int(19), Fast, p22_params,
            "catalog::linear_system_dim(P2xP2, (2,2)) - 1 - 2 dim PGL3",
            "parameter count of (2,2) divisors in P2xP2",
            "19 parameters";
        "p22.lattice", Lattice, Boolean, Bool(true), Fast, p22_lattice,
            "lattice::verify_embedding(Phi -> <4>+<-2>^2) + search_embeddings(bound 1)",
            "Phi embeds via h - R1, h - R2 and the search rediscovers it",
            "f₁=h−R₁, f₂=h−R₂";
        "p22.proj", Birat, IntegerList, l(&[1, 5, 0]), Fast, p22_proj,
            "birat::pullback_kernel_dim(two-point projection, (1,1)) + model_transfer_solvable x 5 seeds",
            "flag equation, 2-nodal quartics transfer to (2,2), smooth ones do not",
            "ℙ³⇢𝔽(1,2) ⊂ ℙ²×ℙ², (1,1)∩(2,2)";
        "p22.f12params", Arithmetic, ExactInteger, Int(18), Fast, p22_f12params,
            "catalog::LedgerEntry(36 - pullback_kernel_dim((2,2)) - 1 - dim PGL3)",
            "parameter count of double covers of F(1,2)",
            "18 parameters";
        "p22.sextic", Symbolic, IntegerList, l(&[6, 10, 9]), Fast, p22_sextic,
            "poly::PolynomialMatrix::determinant(fiber Hessian of a (2,2) form)",
            "degree and genus of the discriminant, Prym dimension",
            "sextic discriminant, (12,9)";
        "v222.params", Arithmetic, ExactInteger, Int(17), Fast, v222_params,
            "catalog::linear_system_dim((P1)^3, (2,2,2)) - 1 - 3 dim PGL2",
            "parameter count of (2,2,2) double covers",
            "27−1−9=17";
        "v222.lattice", Lattice, Boolean, Bool(true), Fast, v222_lattice,
            "lattice::verify_embedding(Pi -> <4>+<-2>^3) + search_embeddings(bound 1) + class identities",
            "Pi embeds via E_i = h - R_j - R_k, R0^2 = -2, E_i = R0 + R_i",
            "E₁=h−R₂−R₃, R₀=h−R₁−R₂−R₃, Eᵢ=R₀+Rᵢ";
        "v222.disc44", Symbolic, IntegerList, l(&[4, 4, 9]), Fast, v222_disc44,
            "poly::discriminant_binary_quadratic(fiber coefficients of a (2,2,2) form)",
            "bidegree and genus of the discriminant M12^2 - M11 M22",
            "D={det(M)=0} of bidegree (4,4)";
        "v222.eta", Lattice, ExactInteger, Int(0), Fast, v222_eta,
            "lattice::gram_product(Pi, E1+E2-E3, 4(E1+E2))",
            "eta has degree zero on D",
            "D≡4(E₁+E₂), η=E₁+E₂−E₃";
        "v222.trilinear", Birat, IntegerList, l(&[27, 5, 0]), Fast, v222_trilinear,
            "birat::pullback_rank(trilinear, (2,2,2)) + model_transfer_solvable(cofactor 2) x 5 seeds",
            "3-nodal quartics times a quadric are pullbacks of (2,2,2) forms, smooth ones are not",
            "ℙ³⇢ℙ¹×ℙ¹×ℙ¹, x ↦ ([x₂:x₃],[x₁:x₃],[x₀:x₃])";
        "cases.table", Arithmetic, IntegerList, l(&[14, 20, 9, 9, 8]), Fast, cases_table,
            "catalog::prym_ledger over every case with a discriminant model",
            "case invariants valid and genus(D) - 1 = h12 for conic bundle cases",
            "(1,8,14), (6,20), (12,9), (14,9), (12,8)";
    ]
}
