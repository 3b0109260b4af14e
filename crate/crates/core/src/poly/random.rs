use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

use super::{CoefficientField, Grading, Multidegree, PolyError, Polynomial};

/// Largest absolute value of a coefficient drawn over the rationals.
pub const RATIONAL_COEFF_BOUND: i64 = 1000;

/// Dense form of multidegree `d` with coefficients from a ChaCha stream
/// seeded by `seed`.
///
/// Over `F_p` coefficients are uniform in `[0, p)`. Over `QQ` they are
/// nonzero integers in `[-1000, 1000]`, so every monomial of the basis is
/// present.
pub fn random_form(
    grading: &Arc<Grading>,
    d: &Multidegree,
    field: CoefficientField,
    seed: u64,
) -> Result<Polynomial, PolyError> {
    let basis = grading.monomial_basis(d)?;
    if basis.is_empty() {
        return Err(PolyError::EmptyBasis(d.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let terms = basis.into_iter().map(|e| {
        let c = match field {
            CoefficientField::Prime(p) => BigInt::from(rng.gen_range(0..p)),
            CoefficientField::Rational => {
                let mag = rng.gen_range(1..=RATIONAL_COEFF_BOUND);
                BigInt::from(if rng.gen_bool(0.5) { mag } else { -mag })
            }
        };
        (e, BigRational::from_integer(c))
    });
    Polynomial::from_terms(field, grading, terms)
}

/// Mixes a base seed with a label into an independent stream seed
/// (splitmix64 finalizer).
pub fn derive_seed(base: u64, label: u64) -> u64 {
    let mut z = base
        .wrapping_add(label.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
