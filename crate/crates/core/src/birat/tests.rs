use super::maps::*;
use super::*;
use crate::poly::{derive_seed, random_form};
use proptest::prelude::*;

const Q: CoefficientField = CoefficientField::Rational;

fn md(v: &[u32]) -> Multidegree {
    Multidegree::new(v.to_vec())
}

#[test]
fn identity_pullback() {
    let a = Ambient::projective(3, "x");
    let id = identity(&a, Q);
    let f = random_form(a.grading(), &md(&[3]), Q, 1).unwrap();
    assert_eq!(pullback(&id, &f).unwrap(), f);
    assert_eq!(pullback_kernel_dim(&id, &md(&[1])).unwrap(), 0);
}

#[test]
fn flag_equation_pulls_back_to_zero() {
    let map = two_point_projection(Q);
    let t = map.target();
    let u = |n: &str| t.var(Q, n).unwrap();
    let f = &(&u("u2") * &u("v3")) - &(&u("u3") * &u("v2"));
    assert!(pullback(&map, &f).unwrap().is_zero());
    assert_eq!(pullback_kernel_dim(&map, &md(&[1, 1])).unwrap(), 1);
    // the 9 multiples of the flag equation span the (2,2) kernel
    assert_eq!(pullback_kernel_dim(&map, &md(&[2, 2])).unwrap(), 9);
}

#[test]
fn trilinear_pullback_is_injective() {
    let map = trilinear(Q);
    assert_eq!(pullback_rank(&map, &md(&[2, 2, 2])).unwrap(), 27);
    assert_eq!(pullback_kernel_dim(&map, &md(&[2, 2, 2])).unwrap(), 0);
    assert_eq!(map.pulled_degree(&md(&[2, 2, 2])).unwrap(), md(&[6]));
}

#[test]
fn nodal_quartic_dimensions() {
    assert_eq!(nodal_quartics(Q, &[]).dimension().unwrap(), 35);
    assert_eq!(nodal_quartics(Q, &[0, 1]).dimension().unwrap(), 27);
    assert_eq!(nodal_quartics(Q, &[0, 1, 2]).dimension().unwrap(), 23);
    let (dim, sample) = constrained_form_space_dim(&nodal_quartics(Q, &[0, 1, 2]), 5).unwrap();
    assert_eq!(dim, 23);
    let f = sample.unwrap();
    for node in 0..3 {
        let mut pt = [0i64; 4];
        pt[node] = 1;
        let values: Vec<(usize, BigRational)> = pt.iter().enumerate().map(|(i, &v)| (i, Q.from_i64(v))).collect();
        for i in 0..4 {
            assert!(f.partial_derivative(i).unwrap().evaluate_partial(&values).unwrap().is_zero());
        }
    }
}

#[test]
fn two_line_singular_space_matches_222_forms() {
    let cond = singular_along_two_lines(Q);
    assert_eq!(cond.dimension().unwrap(), 27);
    let bare = LinearConditionSet::new(cond.ambient.clone(), Q, md(&[2, 4]), vec![]);
    assert_eq!(bare.dimension().unwrap(), 45);
}

#[test]
fn cremona_image_is_the_constrained_space() {
    let map = cremona_product(Q);
    let d = md(&[2, 2, 2]);
    assert_eq!(map.pulled_degree(&d).unwrap(), md(&[2, 4]));
    assert_eq!(pullback_kernel_dim(&map, &d).unwrap(), 0);
    let cond = singular_along_two_lines(Q);
    let images = pullback_columns(&map, &d).unwrap();
    let constrained = cond.basis_forms().unwrap();
    // every pulled-back form satisfies the singularity conditions
    for img in &images {
        let single = LinearConditionSet::new(cond.ambient.clone(), Q, md(&[2, 4]), cond.conditions.clone());
        for c in &single.conditions {
            assert!(c.images(img).unwrap().iter().all(Polynomial::is_zero));
        }
    }
    let both: Vec<Polynomial> = images.iter().chain(&constrained).cloned().collect();
    assert_eq!(coefficient_matrix(Q, &images).rank(), 27);
    assert_eq!(coefficient_matrix(Q, &both).rank(), 27);
}

#[test]
fn two_nodal_quartics_transfer_to_22_divisors() {
    let map = two_point_projection(Q);
    let cond = nodal_quartics(Q, &[0, 1]);
    for seed in 0..5 {
        let q = cond.sample(derive_seed(100, seed)).unwrap();
        assert!(model_transfer_solvable(&map, &md(&[2, 2]), &q, None).unwrap(), "seed {seed}");
    }
}

#[test]
fn three_nodal_quartics_transfer_to_222_divisors() {
    let map = trilinear(Q);
    let cond = nodal_quartics(Q, &[0, 1, 2]);
    for seed in 0..5 {
        let q = cond.sample(derive_seed(200, seed)).unwrap();
        assert!(model_transfer_solvable(&map, &md(&[2, 2, 2]), &q, Some(&md(&[2]))).unwrap(), "seed {seed}");
    }
}

#[test]
fn smooth_quartics_do_not_transfer() {
    let p3 = Ambient::projective(3, "x");
    for seed in 0..5 {
        let q = random_form(p3.grading(), &md(&[4]), Q, derive_seed(300, seed)).unwrap();
        assert_eq!(q.num_terms(), 35);
        assert!(!model_transfer_solvable(&trilinear(Q), &md(&[2, 2, 2]), &q, Some(&md(&[2]))).unwrap());
        assert!(!model_transfer_solvable(&two_point_projection(Q), &md(&[2, 2]), &q, None).unwrap());
    }
    // one node is not enough for either map
    let one_node = nodal_quartics(Q, &[0]).sample(7).unwrap();
    assert!(!model_transfer_solvable(&two_point_projection(Q), &md(&[2, 2]), &one_node, None).unwrap());
}

#[test]
fn degree_mismatch_is_reported() {
    let p3 = Ambient::projective(3, "x");
    let cubic = random_form(p3.grading(), &md(&[3]), Q, 1).unwrap();
    assert!(matches!(
        model_transfer_solvable(&trilinear(Q), &md(&[2, 2, 2]), &cubic, Some(&md(&[2]))),
        Err(BiratError::DegreeMismatch { .. })
    ));
    let wrong = random_form(trilinear(Q).target().grading(), &md(&[1, 1, 1]), Q, 1).unwrap();
    assert_eq!(pullback(&two_point_projection(Q), &wrong), Err(BiratError::WrongAmbient));
}

#[test]
fn invalid_maps_are_rejected() {
    let source = Ambient::projective(2, "x");
    let target = Ambient::projective(1, "y");
    let x = source.vars(Q);
    let mixed = vec![vec![x[0].clone(), &x[1] * &x[2]]];
    assert_eq!(
        RationalMapSpec::new(source.clone(), target.clone(), mixed),
        Err(BiratError::InhomogeneousComponents(0))
    );
    let zero = vec![vec![Polynomial::zero(Q, source.grading()), Polynomial::zero(Q, source.grading())]];
    assert_eq!(RationalMapSpec::new(source.clone(), target.clone(), zero), Err(BiratError::ZeroComponents(0)));
    let short = vec![vec![x[0].clone()]];
    assert!(matches!(RationalMapSpec::new(source, target, short), Err(BiratError::ComponentCount { .. })));
}

#[test]
fn empty_space_sample_fails() {
    // a conic singular at three general-position coordinate points is zero
    let cond = LinearConditionSet::new(
        Ambient::projective(2, "x"),
        Q,
        md(&[2]),
        vec![Condition::node_at(&[1, 0, 0]), Condition::node_at(&[0, 1, 0]), Condition::node_at(&[0, 0, 1])],
    );
    assert_eq!(cond.dimension().unwrap(), 0);
    assert_eq!(cond.sample(0), Err(BiratError::EmptySpace));
    assert_eq!(constrained_form_space_dim(&cond, 0).unwrap(), (0, None));
    let bad = LinearConditionSet::new(Ambient::projective(2, "x"), Q, md(&[2]), vec![Condition::VanishAlong { fixed: vec![(9, 0)] }]);
    assert_eq!(bad.dimension(), Err(BiratError::BadCondition(9)));
}

#[test]
fn json_round_trips() {
    let map = trilinear(Q);
    assert_eq!(RationalMapSpec::from_json(&map.to_json()).unwrap(), map);
    let cond = singular_along_two_lines(Q);
    let back: LinearConditionSet = serde_json::from_str(&serde_json::to_string(&cond).unwrap()).unwrap();
    assert_eq!(back, cond);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn pullback_is_a_ring_homomorphism(s1 in 0u64..1000, s2 in 0u64..1000) {
        let map = cremona_product(Q);
        let g = map.target().grading().clone();
        let f = random_form(&g, &md(&[1, 1, 0]), Q, s1).unwrap();
        let h = random_form(&g, &md(&[1, 1, 0]), Q, s2).unwrap();
        let k = random_form(&g, &md(&[0, 1, 2]), Q, s2 + 7).unwrap();
        let pf = pullback(&map, &f).unwrap();
        prop_assert_eq!(pullback(&map, &(&f + &h)).unwrap(), &pf + &pullback(&map, &h).unwrap());
        prop_assert_eq!(pullback(&map, &(&f * &k)).unwrap(), &pf * &pullback(&map, &k).unwrap());
    }
}
