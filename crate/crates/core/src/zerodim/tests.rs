use super::*;
use crate::poly::{random_form, Multidegree};
use proptest::prelude::*;

const P: u64 = 32003;

fn f7() -> CoefficientField {
    CoefficientField::prime(7).unwrap()
}

fn fp() -> CoefficientField {
    CoefficientField::prime(P).unwrap()
}

fn vars(field: CoefficientField, g: &Arc<Grading>) -> Vec<Polynomial> {
    (0..g.nvars()).map(|i| Polynomial::var_at(field, g, i)).collect()
}

/// Dense polynomial of total degree at most `d`.
fn affine_random(g: &Arc<Grading>, d: u32, field: CoefficientField, seed: u64) -> Polynomial {
    let mut acc = Polynomial::zero(field, g);
    for k in 0..=d {
        acc = &acc + &random_form(g, &Multidegree::new(vec![k]), field, derive_seed(seed, k as u64)).unwrap();
    }
    acc
}

fn forms(g: &Arc<Grading>, degrees: &[u32], seed: u64) -> Vec<Polynomial> {
    degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| random_form(g, &Multidegree::new(vec![d]), fp(), derive_seed(seed, i as u64)).unwrap())
        .collect()
}

#[test]
fn coordinate_ideal() {
    let g = Grading::standard(&["x", "y"]);
    let v = vars(f7(), &g);
    let gb = buchberger(&v, MonomialOrder::default()).unwrap();
    let mut basis = gb.basis();
    basis.sort_by_key(|p| p.to_string());
    assert_eq!(basis, vec![v[0].clone(), v[1].clone()]);
    assert_eq!(quotient_dimension(&gb).unwrap(), 1);
    assert!(gb.is_reduced() && gb.s_pairs_reduce_to_zero());
}

#[test]
fn two_point_ideal_over_f7() {
    let g = Grading::standard(&["x", "y"]);
    let v = vars(f7(), &g);
    let one = Polynomial::one(f7(), &g);
    let (x, y) = (&v[0], &v[1]);
    let gens = vec![&(x * x) - &one, &(x * y) - &one];
    let gb = buchberger(&gens, MonomialOrder::default()).unwrap();
    // points (1,1) and (-1,-1)
    assert_eq!(quotient_dimension(&gb).unwrap(), 2);
    assert!(gb.s_pairs_reduce_to_zero());
    for f in &gens {
        assert!(normal_form(f, &gb).unwrap().is_zero());
    }
    let member = &(&(x * x) * y) - x;
    assert!(normal_form(&member, &gb).unwrap().is_zero());
    assert!(!normal_form(&one, &gb).unwrap().is_zero());
    assert!(!normal_form(&(x - &y.scale_i64(2)), &gb).unwrap().is_zero());

    let lex = buchberger(&gens, MonomialOrder::lex()).unwrap();
    assert_eq!(quotient_dimension(&lex).unwrap(), 2);
    // lex basis is {x - y, y^2 - 1}
    assert_eq!(lex.basis(), vec![&(y * y) - &one, x - y]);
}

#[test]
fn univariate_degree() {
    let g = Grading::standard(&["t"]);
    for d in 1..7 {
        let f = affine_random(&g, d, fp(), d as u64);
        let gb = buchberger(std::slice::from_ref(&f), MonomialOrder::default()).unwrap();
        assert_eq!(quotient_dimension(&gb).unwrap(), f.total_degree() as usize);
    }
}

#[test]
fn unit_ideal_has_empty_staircase() {
    let g = Grading::standard(&["x", "y"]);
    let v = vars(f7(), &g);
    let one = Polynomial::one(f7(), &g);
    let gb = buchberger(&[&v[0] - &one, v[0].clone()], MonomialOrder::default()).unwrap();
    assert!(gb.is_unit_ideal());
    assert_eq!(quotient_dimension(&gb).unwrap(), 0);
}

#[test]
fn two_affine_conics_meet_in_four_points() {
    let g = Grading::standard(&["x", "y"]);
    for seed in 0..5 {
        let gens = [affine_random(&g, 2, fp(), 10 + seed), affine_random(&g, 2, fp(), 20 + seed)];
        let gb = buchberger(&gens, MonomialOrder::default()).unwrap();
        assert!(gb.is_reduced() && gb.s_pairs_reduce_to_zero());
        assert_eq!(quotient_dimension(&gb).unwrap(), 4);
    }
}

#[test]
fn bezout_in_p3() {
    let g = Grading::standard(&["x0", "x1", "x2", "x3"]);
    for (degrees, expected) in [([2, 2, 2], 8), ([1, 2, 2], 4), ([1, 1, 4], 4), ([2, 2, 3], 12)] {
        let pd = projective_degree(&forms(&g, &degrees, 7), 0, 3).unwrap();
        assert_eq!(pd.degree, expected, "{degrees:?}");
        assert!(pd.stable && pd.verified);
    }
}

#[test]
fn projective_degree_is_seed_deterministic() {
    let g = Grading::standard(&["x0", "x1", "x2", "x3"]);
    let gens = forms(&g, &[2, 2, 2], 3);
    assert_eq!(projective_degree(&gens, 11, 2).unwrap(), projective_degree(&gens, 11, 2).unwrap());
}

#[test]
fn positive_dimensional_locus_is_rejected() {
    let g = Grading::standard(&["x", "y", "z"]);
    let gens = forms(&g, &[2], 1);
    assert_eq!(projective_degree(&gens, 0, 2), Err(ZeroDimError::AllTrialsFailed));
    let gb = buchberger(&gens, MonomialOrder::default()).unwrap();
    assert_eq!(quotient_dimension(&gb), Err(ZeroDimError::NotZeroDimensional));
}

#[test]
fn input_errors() {
    let g = Grading::standard(&["x", "y"]);
    let q = vars(CoefficientField::Rational, &g);
    assert_eq!(buchberger(&q, MonomialOrder::default()).unwrap_err(), ZeroDimError::CharacteristicZero);
    assert_eq!(buchberger(&[], MonomialOrder::default()).unwrap_err(), ZeroDimError::EmptyGenerators);
    let v = vars(f7(), &g);
    let w = vars(fp(), &g);
    assert_eq!(buchberger(&[v[0].clone(), w[1].clone()], MonomialOrder::default()).unwrap_err(), ZeroDimError::Mismatch);
    let inhom = &v[0] + &Polynomial::one(f7(), &g);
    assert_eq!(projective_degree(&[inhom], 0, 1).unwrap_err(), ZeroDimError::Inhomogeneous);
    let bi = Grading::product(&[&["a0", "a1"], &["b0", "b1"]]);
    let a = Polynomial::var_at(f7(), &bi, 0);
    assert_eq!(projective_degree(&[a], 0, 1).unwrap_err(), ZeroDimError::NotStandardGraded);
    let order = MonomialOrder::default().with_variable_order(vec![0, 0]);
    assert_eq!(buchberger(&v, order).unwrap_err(), ZeroDimError::BadVariableOrder);
}

#[test]
fn variable_order_permutes_leading_terms() {
    let g = Grading::standard(&["x", "y"]);
    let v = vars(f7(), &g);
    let f = &v[0] + &v[1];
    let gb = buchberger(std::slice::from_ref(&f), MonomialOrder::lex()).unwrap();
    assert_eq!(gb.leading_exponents(), vec![vec![1, 0]]);
    let gb = buchberger(&[f], MonomialOrder::lex().with_variable_order(vec![1, 0])).unwrap();
    assert_eq!(gb.leading_exponents(), vec![vec![0, 1]]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn order_independent_dimension(seed in 0u64..10_000, d1 in 1u32..4, d2 in 1u32..4) {
        let g = Grading::standard(&["x", "y"]);
        let gens = [affine_random(&g, d1, fp(), seed), affine_random(&g, d2, fp(), seed + 1)];
        let a = buchberger(&gens, MonomialOrder::degrevlex()).unwrap();
        let b = buchberger(&gens, MonomialOrder::lex()).unwrap();
        prop_assert!(a.is_reduced() && a.s_pairs_reduce_to_zero());
        prop_assert!(b.is_reduced() && b.s_pairs_reduce_to_zero());
        let da = quotient_dimension(&a).unwrap();
        prop_assert_eq!(da, quotient_dimension(&b).unwrap());
        prop_assert!(da <= (d1 * d2) as usize);
        for f in &gens {
            prop_assert!(normal_form(f, &a).unwrap().is_zero());
        }
    }

    #[test]
    fn products_lie_in_ideal(seed in 0u64..10_000) {
        let g = Grading::standard(&["x", "y", "z"]);
        let gens = [affine_random(&g, 2, f7(), seed), affine_random(&g, 1, f7(), seed + 1)];
        let gb = buchberger(&gens, MonomialOrder::default()).unwrap();
        prop_assert!(gb.s_pairs_reduce_to_zero() && gb.is_reduced());
        let h = affine_random(&g, 2, f7(), seed + 2);
        let member = &(&gens[0] * &h) + &(&gens[1] * &gens[1]);
        prop_assert!(normal_form(&member, &gb).unwrap().is_zero());
    }
}
