//! Dense-exponent sparse polynomials over a word-sized prime field, used by
//! the Gröbner engine.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::poly::{mod_inverse, mulmod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mono {
    pub deg: u32,
    pub e: Box<[u16]>,
}

impl Mono {
    pub fn new(e: Vec<u16>) -> Self {
        let deg = e.iter().map(|&x| x as u32).sum();
        Mono { deg, e: e.into_boxed_slice() }
    }

    pub fn one(n: usize) -> Self {
        Mono { deg: 0, e: vec![0; n].into_boxed_slice() }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono { deg: self.deg + other.deg, e: self.e.iter().zip(other.e.iter()).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Mono {
        Mono { deg: self.deg - other.deg, e: self.e.iter().zip(other.e.iter()).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono::new(self.e.iter().zip(other.e.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.e.iter().zip(other.e.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable if this is a pure power `x_i^k`, `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &k) in self.e.iter().enumerate() {
            if k > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

pub(crate) fn compare(order: OrderKind, a: &Mono, b: &Mono) -> Ordering {
    match order {
        OrderKind::DegRevLex => a.deg.cmp(&b.deg).then_with(|| {
            for (x, y) in a.e.iter().zip(b.e.iter()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }),
        OrderKind::Lex => a.e.iter().cmp(b.e.iter()),
    }
}

/// Polynomial with terms sorted in decreasing order, coefficients in `[1, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FpPoly {
    pub terms: Vec<(Mono, u64)>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct FpRing {
    pub nvars: usize,
    pub p: u64,
    pub order: OrderKind,
}

impl FpRing {
    pub fn zero(&self) -> FpPoly {
        FpPoly { terms: Vec::new() }
    }

    pub fn constant(&self, c: u64) -> FpPoly {
        let c = c % self.p;
        if c == 0 {
            self.zero()
        } else {
            FpPoly { terms: vec![(Mono::one(self.nvars), c)] }
        }
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Mono, u64)>) -> FpPoly {
        let mut acc: HashMap<Mono, u64> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = (*e + c % self.p) % self.p;
        }
        let mut terms: Vec<(Mono, u64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = self.order;
        terms.sort_by(|a, b| compare(order, &b.0, &a.0));
        FpPoly { terms }
    }

    pub fn add(&self, f: &FpPoly, g: &FpPoly) -> FpPoly {
        self.combine(f, g, 1)
    }

    pub fn sub(&self, f: &FpPoly, g: &FpPoly) -> FpPoly {
        self.combine(f, g, self.p - 1)
    }

    /// `f + s * g` by merging.
    fn combine(&self, f: &FpPoly, g: &FpPoly, s: u64) -> FpPoly {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() || j < g.terms.len() {
            let ord = match (f.terms.get(i), g.terms.get(j)) {
                (Some(a), Some(b)) => compare(self.order, &a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &g.terms[j];
                    out.push((m.clone(), mulmod(*c, s, self.p)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = (f.terms[i].1 + mulmod(g.terms[j].1, s, self.p)) % self.p;
                    if c != 0 {
                        out.push((f.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        FpPoly { terms: out }
    }

    pub fn mul(&self, f: &FpPoly, g: &FpPoly) -> FpPoly {
        let mut acc: HashMap<Mono, u64> = HashMap::with_capacity(f.terms.len() * g.terms.len());
        for (ma, ca) in &f.terms {
            for (mb, cb) in &g.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = (*e + mulmod(*ca, *cb, self.p)) % self.p;
            }
        }
        let mut terms: Vec<(Mono, u64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        let order = self.order;
        terms.sort_by(|a, b| compare(order, &b.0, &a.0));
        FpPoly { terms }
    }

    pub fn monic(&self, f: &FpPoly) -> FpPoly {
        match f.terms.first() {
            None => f.clone(),
            Some((_, c)) => {
                let inv = mod_inverse(*c, self.p);
                FpPoly { terms: f.terms.iter().map(|(m, x)| (m.clone(), mulmod(*x, inv, self.p))).collect() }
            }
        }
    }

    /// `f[start..] - c * m * g`, where the product's leading term is known
    /// to cancel `f[start]`.
    fn sub_term_multiple(&self, f: &[(Mono, u64)], c: u64, m: &Mono, g: &FpPoly) -> Vec<(Mono, u64)> {
        let neg = self.p - c;
        let mut out = Vec::with_capacity(f.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |j: usize| -> Mono { g.terms[j].0.mul(m) };
        let mut gj = if j < g.terms.len() { Some(shifted(0)) } else { None };
        while i < f.len() || gj.is_some() {
            let ord = match (f.get(i), gj.as_ref()) {
                (Some(a), Some(b)) => compare(self.order, &a.0, b),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let mono = gj.take().unwrap();
                    out.push((mono, mulmod(g.terms[j].1, neg, self.p)));
                    j += 1;
                    gj = (j < g.terms.len()).then(|| shifted(j));
                }
                Ordering::Equal => {
                    let v = (f[i].1 + mulmod(g.terms[j].1, neg, self.p)) % self.p;
                    let mono = gj.take().unwrap();
                    if v != 0 {
                        out.push((mono, v));
                    }
                    i += 1;
                    j += 1;
                    gj = (j < g.terms.len()).then(|| shifted(j));
                }
            }
        }
        out
    }

    /// Full reduction of `f` by monic `basis`.
    pub fn normal_form(&self, f: &FpPoly, basis: &[FpPoly]) -> FpPoly {
        let mut rem = Vec::new();
        let mut cur: Vec<(Mono, u64)> = f.terms.clone();
        let mut start = 0;
        while start < cur.len() {
            let (lm, lc) = (&cur[start].0, cur[start].1);
            let reducer = basis.iter().find(|g| g.terms[0].0.divides(lm));
            match reducer {
                Some(g) => {
                    let q = lm.div(&g.terms[0].0);
                    cur = self.sub_term_multiple(&cur[start..], lc, &q, g);
                    start = 0;
                }
                None => {
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        FpPoly { terms: rem }
    }

    pub fn s_poly(&self, f: &FpPoly, g: &FpPoly) -> FpPoly {
        let (lf, lg) = (&f.terms[0].0, &g.terms[0].0);
        let l = lf.lcm(lg);
        let a = self.mul_mono(f, &l.div(lf), mod_inverse(f.terms[0].1, self.p));
        let b = self.mul_mono(g, &l.div(lg), mod_inverse(g.terms[0].1, self.p));
        self.sub(&a, &b)
    }

    fn mul_mono(&self, f: &FpPoly, m: &Mono, c: u64) -> FpPoly {
        FpPoly { terms: f.terms.iter().map(|(x, a)| (x.mul(m), mulmod(*a, c, self.p))).collect() }
    }
}
