use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::PolyError;

/// Coefficient domain of a polynomial: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "characteristic", rename_all = "snake_case")]
pub enum CoefficientField {
    Rational,
    Prime(u64),
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self, PolyError> {
        if is_prime(p) {
            Ok(CoefficientField::Prime(p))
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rational => 0,
            CoefficientField::Prime(p) => *p,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, CoefficientField::Prime(_))
    }

    /// Maps a rational number into the field. Over `F_p` the result is the
    /// integer representative in `[0, p)`.
    pub fn normalize(&self, c: BigRational) -> Result<BigRational, PolyError> {
        match self {
            CoefficientField::Rational => Ok(c),
            CoefficientField::Prime(p) => {
                let p_big = BigInt::from(*p);
                let num = c.numer().mod_floor(&p_big);
                let den = c.denom().mod_floor(&p_big);
                if den.is_zero() {
                    return Err(PolyError::NotInvertible {
                        value: c.to_string(),
                        characteristic: *p,
                    });
                }
                let den_inv = mod_inverse(den.to_u64().unwrap(), *p);
                let v = (num * BigInt::from(den_inv)).mod_floor(&p_big);
                Ok(BigRational::from_integer(v))
            }
        }
    }

    pub fn from_i64(&self, c: i64) -> BigRational {
        self.normalize(BigRational::from_integer(BigInt::from(c)))
            .expect("integers have denominator one")
    }

    pub(crate) fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce_int(a + b)
    }

    pub(crate) fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce_int(a - b)
    }

    pub(crate) fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce_int(a * b)
    }

    pub(crate) fn neg(&self, a: &BigRational) -> BigRational {
        self.reduce_int(-a)
    }

    pub(crate) fn inv(&self, a: &BigRational) -> Result<BigRational, PolyError> {
        if a.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        match self {
            CoefficientField::Rational => Ok(a.recip()),
            CoefficientField::Prime(p) => {
                let v = a.numer().mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                Ok(BigRational::from_integer(BigInt::from(mod_inverse(v, *p))))
            }
        }
    }

    // Inputs are already field elements, so over F_p only the integer
    // residue needs fixing.
    fn reduce_int(&self, c: BigRational) -> BigRational {
        match self {
            CoefficientField::Rational => c,
            CoefficientField::Prime(p) => {
                debug_assert!(c.is_integer());
                BigRational::from_integer(c.numer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    /// `v` as a residue in `[0, p)`; only meaningful over a prime field.
    pub(crate) fn residue(&self, v: &BigRational) -> u64 {
        match self {
            CoefficientField::Rational => panic!("residue requested over the rationals"),
            CoefficientField::Prime(p) => {
                let num = v.numer().mod_floor(&BigInt::from(*p));
                let den = v.denom().mod_floor(&BigInt::from(*p)).to_u64().unwrap();
                let n = num.to_u64().unwrap();
                mulmod(n, mod_inverse(den, *p), *p)
            }
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rational => write!(f, "QQ"),
            CoefficientField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn rational_to_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn is_one(c: &BigRational) -> bool {
    c.is_one()
}

pub(crate) fn is_negative(c: &BigRational) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..2000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(32003));
        assert!(is_prime(31991));
        assert!(!is_prime(32001));
    }

    #[test]
    fn normalize_handles_denominators() {
        let f = CoefficientField::Prime(7);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.normalize(half).unwrap(), BigRational::from_integer(BigInt::from(4)));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(f.normalize(bad).is_err());
        assert_eq!(f.from_i64(-1), BigRational::from_integer(BigInt::from(6)));
    }

    #[test]
    fn rejects_composites() {
        assert!(CoefficientField::prime(6).is_err());
        assert!(CoefficientField::prime(1).is_err());
        assert_eq!(CoefficientField::prime(5).unwrap().characteristic(), 5);
    }
}
