use super::*;
use proptest::prelude::*;

const Q: CoefficientField = CoefficientField::Rational;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn vars(field: CoefficientField, g: &Arc<Grading>) -> Vec<Polynomial> {
    (0..g.nvars()).map(|i| Polynomial::var_at(field, g, i)).collect()
}

#[test]
fn binomial_square() {
    let g = Grading::standard(&["x", "y"]);
    let v = vars(Q, &g);
    let d = &v[0] - &v[1];
    let sq = ring_op(&d, &d, RingOp::Mul).unwrap();
    let expected = &(&(&v[0] * &v[0]) - &(&v[0] * &v[1]).scale_i64(2)) + &(&v[1] * &v[1]);
    assert_eq!(sq, expected);
    assert_eq!(sq.to_string(), "x^2 - 2*x*y + y^2");
}

#[test]
fn multiplicative_identity() {
    let g = Grading::standard(&["x", "y", "z"]);
    let f = random_form(&g, &Multidegree::new(vec![3]), Q, 4).unwrap();
    let one = Polynomial::one(Q, &g);
    assert_eq!(ring_op(&f, &one, RingOp::Mul).unwrap(), f);
}

#[test]
fn ramification_factor_expansion() {
    let g = Grading::standard(&["xi", "h"]);
    let v = vars(Q, &g);
    let (xi, h) = (&v[0], &v[1]);
    let lhs = &xi.scale_i64(2) * &(&xi.scale_i64(2) - h);
    let rhs = &(xi * xi).scale_i64(4) - &(xi * h).scale_i64(2);
    assert_eq!(lhs, rhs);
}

#[test]
fn pow_rejects_negative_exponent() {
    let g = Grading::standard(&["x"]);
    let x = Polynomial::var(Q, &g, "x").unwrap();
    assert_eq!(x.pow(-1), Err(PolyError::NegativeExponent(-1)));
    assert_eq!(x.pow(0).unwrap(), Polynomial::one(Q, &g));
}

#[test]
fn mismatched_operands_are_rejected() {
    let g1 = Grading::standard(&["x"]);
    let g2 = Grading::standard(&["y"]);
    let x = Polynomial::var(Q, &g1, "x").unwrap();
    let y = Polynomial::var(Q, &g2, "y").unwrap();
    assert_eq!(ring_op(&x, &y, RingOp::Add), Err(PolyError::GradingMismatch));
    let xp = x.to_field(CoefficientField::Prime(7)).unwrap();
    assert!(matches!(ring_op(&x, &xp, RingOp::Mul), Err(PolyError::FieldMismatch(..))));
}

#[test]
fn multidegree_examples() {
    let g = Grading::product(&[&["x"], &["y"]]);
    let v = vars(Q, &g);
    let f = &(&v[0] * &v[0]) * &v[1];
    assert_eq!(f.multidegree().unwrap(), Multidegree::new(vec![2, 1]));

    let inhom = &(&v[0] * &v[0]) + &v[1];
    assert!(matches!(inhom.multidegree(), Err(PolyError::Inhomogeneous(..))));
    assert_eq!(Polynomial::zero(Q, &g).multidegree(), Err(PolyError::ZeroPolynomial));
}

#[test]
fn symmetric_two_by_two_of_bidegree_two_two_has_bidegree_four_four() {
    let g = Grading::product(&[&["s0", "s1"], &["t0", "t1"]]);
    let field = CoefficientField::Prime(32003);
    let d = Multidegree::new(vec![2, 2]);
    let m11 = random_form(&g, &d, field, 1).unwrap();
    let m12 = random_form(&g, &d, field, 2).unwrap();
    let m22 = random_form(&g, &d, field, 3).unwrap();
    let m = PolynomialMatrix::from_rows(vec![vec![m11, m12.clone()], vec![m12, m22]]).unwrap();
    let det = m.determinant().unwrap();
    assert_eq!(det.multidegree().unwrap(), Multidegree::new(vec![4, 4]));
}

/// Ring in which the entries of the determinantal matrices are themselves
/// variables.
fn entry_ring() -> (Arc<Grading>, Vec<Polynomial>) {
    let g = Grading::standard(&["L", "Q0", "Q1", "P00", "P01", "P11", "L0", "L1"]);
    let v = vars(Q, &g);
    (g, v)
}

#[test]
fn two_by_two_elimination_determinant() {
    let (_, v) = entry_ring();
    let (l0, l1, q0, q1) = (&v[6], &v[7], &v[1], &v[2]);
    let m = PolynomialMatrix::from_rows(vec![vec![l0.clone(), l1.clone()], vec![q0.clone(), q1.clone()]]).unwrap();
    let det = m.determinant().unwrap();
    assert_eq!(det, &(l0 * q1) - &(l1 * q0));
    let printed = &(l1 * q0) - &(l0 * q1);
    assert!(det.equal_up_to_scalar(&printed));
}

#[test]
fn equal_rows_give_zero_determinant() {
    let g = Grading::standard(&["x", "y", "z"]);
    let a = random_form(&g, &Multidegree::new(vec![1]), Q, 1).unwrap();
    let b = random_form(&g, &Multidegree::new(vec![2]), Q, 2).unwrap();
    let c = random_form(&g, &Multidegree::new(vec![1]), Q, 3).unwrap();
    let row = vec![a, b, c];
    let other = vec![
        Polynomial::var_at(Q, &g, 0),
        Polynomial::var_at(Q, &g, 1),
        Polynomial::var_at(Q, &g, 2),
    ];
    let m = PolynomialMatrix::from_rows(vec![row.clone(), other, row]).unwrap();
    assert!(m.determinant().unwrap().is_zero());
}

fn symmetric_m(v: &[Polynomial], corner_entry: &Polynomial) -> PolynomialMatrix {
    let (l, q0, q1, p00, p01, p11) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
    PolynomialMatrix::from_rows(vec![
        vec![l * l, q0.clone(), q1.clone()],
        vec![q0.clone(), p00.clone(), p01.clone()],
        vec![corner_entry.clone(), p01.clone(), p11.clone()],
    ])
    .unwrap()
}

#[test]
fn determinant_of_symmetric_m_matches_hand_expansion() {
    let (_, v) = entry_ring();
    let (l, q0, q1, p00, p01, p11) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
    let det = symmetric_m(&v, q1).determinant().unwrap();
    // L^2 (P00 P11 - P01^2) - P11 Q0^2 + 2 P01 Q0 Q1 - P00 Q1^2
    let expected = &(&(&(&(l * l) * &(&(p00 * p11) - &(p01 * p01))) - &(&(p11 * q0) * q0))
        + (&(&(p01 * q0) * q1).scale_i64(2)))
        - &(&(p00 * q1) * q1);
    assert_eq!(det, expected);

    // cross-check through the discriminant route
    let a = &(p00 * &(l * l)) - &(q0 * q0);
    let b = &(p01 * &(l * l)) - &(q0 * q1);
    let c = &(p11 * &(l * l)) - &(q1 * q1);
    let disc = discriminant_binary_quadratic(&a, &b, &c).unwrap();
    let quotient = disc.exact_divide(&(l * l).neg()).unwrap();
    assert_eq!(quotient, det);

    // with the (3,1) entry printed as Q0 the identity fails
    let asym = symmetric_m(&v, q0).determinant().unwrap();
    assert_ne!(asym, det);
    assert!(!asym.equal_up_to_scalar(&quotient));
}

#[test]
fn resultant_of_linear_polynomials() {
    let g = Grading::standard(&["z", "a", "b"]);
    let v = vars(Q, &g);
    let r = resultant_univariate(&(&v[0] - &v[1]), &(&v[0] - &v[2]), 0).unwrap();
    assert!(r.equal_up_to_scalar(&(&v[1] - &v[2])));
    assert_eq!(r.degree_in(0), 0);
}

#[test]
fn resultant_quadratic_against_linear() {
    let g = Grading::standard(&["z", "P", "L", "B"]);
    let v = vars(Q, &g);
    let (z, p, l, b) = (&v[0], &v[1], &v[2], &v[3]);
    let f = &(z * z) - p;
    let h = &(l * z) - b;
    let r = resultant_univariate(&f, &h, 0).unwrap();
    let expected = &(b * b) - &(&(p * l) * l);
    assert!(r.equal_up_to_scalar(&expected));
}

#[test]
fn resultant_reproduces_the_binary_quadratic_image() {
    let g = Grading::standard(&["z", "x0", "x1", "L", "Q0", "Q1", "P00", "P01", "P11"]);
    let v = vars(Q, &g);
    let (z, x0, x1, l, q0, q1, p00, p01, p11) =
        (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5], &v[6], &v[7], &v[8]);
    let p = &(&(&(p00 * x0) * x0) + (&(&(p01 * x0) * x1).scale_i64(2))) + &(&(p11 * x1) * x1);
    let bform = &(q0 * x0) + &(q1 * x1);
    let f = &(z * z) - &p;
    let h = &(z * l).neg() + &bform;
    let r = resultant_univariate(&f, &h, 0).unwrap();
    let ll = l * l;
    let expected = &(&(&(x0 * x0) * &(&(p00 * &ll) - &(q0 * q0)))
        + &(&(x0 * x1) * &(&(p01 * &ll) - &(q0 * q1))).scale_i64(2))
        + &(&(x1 * x1) * &(&(p11 * &ll) - &(q1 * q1)));
    assert!(r.equal_up_to_scalar(&expected));
}

#[test]
fn resultant_requires_positive_degree() {
    let g = Grading::standard(&["z", "a"]);
    let v = vars(Q, &g);
    assert!(matches!(
        resultant_univariate(&v[1], &v[0], 0),
        Err(PolyError::ConstantInVariable(_))
    ));
}

#[test]
fn discriminant_examples() {
    let g = Grading::standard(&["L", "M"]);
    let v = vars(Q, &g);
    let one = Polynomial::one(Q, &g);
    let zero = Polynomial::zero(Q, &g);
    assert_eq!(
        discriminant_binary_quadratic(&one, &zero, &one).unwrap(),
        Polynomial::constant(Q, &g, -1)
    );
    let (l, m) = (&v[0], &v[1]);
    assert!(discriminant_binary_quadratic(&(l * l), &(l * m), &(m * m)).unwrap().is_zero());
}

#[test]
fn discriminant_matches_displayed_expansion() {
    let (_, v) = entry_ring();
    let (l, q0, q1, p00, p01, p11) = (&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]);
    let ll = l * l;
    let a = &(p00 * &ll) - &(q0 * q0);
    let b = &(p01 * &ll) - &(q0 * q1);
    let c = &(p11 * &ll) - &(q1 * q1);
    let disc = discriminant_binary_quadratic(&a, &b, &c).unwrap();
    let l4 = &ll * &ll;
    let expected = &(&l4 * &(&(p01 * p01) - &(p00 * p11)))
        + &(&ll
            * &(&(&(&(p01 * q0) * q1).scale_i64(-2) + &(&(p00 * q1) * q1)) + &(&(p11 * q0) * q0)));
    assert_eq!(disc, expected);
}

#[test]
fn exact_divide_examples() {
    let g = Grading::standard(&["x", "y"]);
    let f = random_form(&g, &Multidegree::new(vec![3]), Q, 11).unwrap();
    let h = random_form(&g, &Multidegree::new(vec![2]), Q, 12).unwrap();
    assert_eq!((&f * &h).exact_divide(&h).unwrap(), f);

    let x = Polynomial::var(Q, &g, "x").unwrap();
    let x2p1 = &(&x * &x) + &Polynomial::one(Q, &g);
    assert_eq!(x2p1.exact_divide(&x), Err(PolyError::NotDivisible));
    assert_eq!(x2p1.exact_divide(&Polynomial::zero(Q, &g)), Err(PolyError::DivisionByZero));
}

#[test]
fn partial_derivative_examples() {
    let g = Grading::standard(&["x", "y"]);
    let v = vars(Q, &g);
    let f = &(&v[0] * &v[0]) * &v[1];
    assert_eq!(f.partial_derivative(0).unwrap(), (&v[0] * &v[1]).scale_i64(2));
    assert!(matches!(f.partial_derivative_by_name("w"), Err(PolyError::UnknownVariable(_))));

    let f5 = CoefficientField::Prime(5);
    let x = Polynomial::var(f5, &g, "x").unwrap();
    assert!(x.pow(5).unwrap().partial_derivative(0).unwrap().is_zero());
}

fn euler_sum(f: &Polynomial) -> Polynomial {
    let g = f.grading().clone();
    let mut acc = Polynomial::zero(f.field(), &g);
    for i in 0..g.nvars() {
        acc = &acc + &(&Polynomial::var_at(f.field(), &g, i) * &f.partial_derivative(i).unwrap());
    }
    acc
}

#[test]
fn euler_relation_for_random_forms() {
    let g = Grading::standard(&["x0", "x1", "x2", "x3"]);
    for (deg, field) in [(1, Q), (3, Q), (4, CoefficientField::Prime(32003))] {
        let f = random_form(&g, &Multidegree::new(vec![deg]), field, deg as u64).unwrap();
        assert_eq!(euler_sum(&f), f.scale_i64(deg as i64));
    }
}

#[test]
fn random_form_contract() {
    let g = Grading::product(&[&["s", "t"], &["x", "y", "z"]]);
    let field = CoefficientField::Prime(101);
    let d = Multidegree::new(vec![2, 4]);
    let a = random_form(&g, &d, field, 9).unwrap();
    assert_eq!(a, random_form(&g, &d, field, 9).unwrap());
    assert_eq!(a.multidegree().unwrap(), d);

    let mut collisions = 0;
    for trial in 0..100u64 {
        let x = random_form(&g, &d, field, 2 * trial).unwrap();
        let y = random_form(&g, &d, field, 2 * trial + 1).unwrap();
        if x == y {
            collisions += 1;
        }
    }
    assert_eq!(collisions, 0);
}

#[test]
fn random_form_rejects_empty_basis() {
    let g = Grading::product(&[&["s", "t"], &["x", "y"]]);
    assert!(matches!(
        random_form(&g, &Multidegree::new(vec![1]), Q, 0),
        Err(PolyError::AxisMismatch(..))
    ));
    let weighted = Arc::new(Grading::new(vec!["a".into()], vec![vec![2]]).unwrap());
    assert!(matches!(
        random_form(&weighted, &Multidegree::new(vec![3]), Q, 0),
        Err(PolyError::EmptyBasis(_))
    ));
}

#[test]
fn monomial_basis_sizes() {
    let p3 = Grading::standard(&["x0", "x1", "x2", "x3"]);
    assert_eq!(p3.monomial_basis(&Multidegree::new(vec![4])).unwrap().len(), 35);
    let p1p2 = Grading::product(&[&["s", "t"], &["x", "y", "z"]]);
    assert_eq!(p1p2.monomial_basis(&Multidegree::new(vec![2, 4])).unwrap().len(), 45);
}

// ---- property tests -------------------------------------------------------

fn small_poly(field: CoefficientField) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -9i64..10), 0..6).prop_map(move |ts| {
        let g = Grading::standard(&["a", "b", "c"]);
        Polynomial::from_terms(field, &g, ts.into_iter().map(|(e, c)| (e, q(c)))).unwrap()
    })
}

fn any_field() -> impl Strategy<Value = CoefficientField> {
    prop_oneof![Just(Q), Just(CoefficientField::Prime(7)), Just(CoefficientField::Prime(32003))]
}

fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    any_field().prop_flat_map(|f| (small_poly(f), small_poly(f), small_poly(f)))
}

proptest! {
    #[test]
    fn ring_axioms((f, g, h) in triple()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn exact_divide_inverts_multiplication((f, g, _) in triple()) {
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), f);
    }

    #[test]
    fn determinant_is_alternating(entries in prop::collection::vec(small_poly(Q), 9), a in 0usize..3, b in 0usize..3) {
        prop_assume!(a != b);
        let m = PolynomialMatrix::new(3, 3, entries).unwrap();
        let mut swapped = m.clone();
        swapped.swap_rows(a, b);
        prop_assert_eq!(swapped.determinant().unwrap(), m.determinant().unwrap().neg());
    }

    #[test]
    fn resultant_detects_common_roots(r in -5i64..6, s in -5i64..6, t in -5i64..6, u in -5i64..6) {
        let g = Grading::standard(&["z"]);
        let z = Polynomial::var(Q, &g, "z").unwrap();
        let lin = |c: i64| &z - &Polynomial::constant(Q, &g, c);
        let f = &lin(r) * &lin(s);
        let h = &lin(t) * &lin(u);
        let res = resultant_univariate(&f, &h, 0).unwrap();
        let shares = r == t || r == u || s == t || s == u;
        prop_assert_eq!(res.is_zero(), shares);
    }

    #[test]
    fn euler_relation(deg in 1u32..5, seed in any::<u64>()) {
        let g = Grading::standard(&["x", "y", "z"]);
        let f = random_form(&g, &Multidegree::new(vec![deg]), CoefficientField::Prime(32003), seed).unwrap();
        prop_assert_eq!(euler_sum(&f), f.scale_i64(deg as i64));
    }
}

#[test]
fn json_round_trip() {
    let g = Grading::product(&[&["s", "t"], &["x", "y", "z"]]);
    let f = random_form(&g, &Multidegree::new(vec![1, 2]), Q, 9).unwrap().scale(&BigRational::new(BigInt::from(1), BigInt::from(3))).unwrap();
    let text = serde_json::to_string(&f).unwrap();
    let back: Polynomial = serde_json::from_str(&text).unwrap();
    assert_eq!(back, f);
    let bad = r#"{"field":{"kind":"rational"},"grading":{"variables":["x"],"axes":1,"weights":[[1]]},"terms":[[[1],"1/0x"]]}"#;
    assert!(serde_json::from_str::<Polynomial>(bad).is_err());
}
