use hopfcross::crossed::*;
use hopfcross::field::{Field, Scalar};
use hopfcross::hopf::{cyclic_group_algebra, is_grouplike, map_predicates, s3_group_algebra, sweedler_h4, tensor_hopf, verify_hopf, MapKind};
use hopfcross::linalg::{compose, FinVector, LinMap};
use hopfcross::presets::*;

const Q: Field = Field::Rational;

fn corpus() -> Vec<(&'static str, CertifiedSystem)> {
    hopfcross::presets::corpus(Q)
}

#[test]
fn products_are_hopf_algebras() {
    for (name, s) in corpus() {
        let r = verify_hopf(s.product());
        assert!(r.all_passed(), "{name}: {r}");
        let r = canonical_maps_report(&s);
        assert!(r.all_passed(), "{name}: {r}");
    }
}

#[test]
fn trivial_product_is_tensor_product() {
    let h4 = sweedler_h4(Q).unwrap();
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(h4.clone(), k_c3(Q)).unwrap()).unwrap();
    let t = tensor_hopf(&h4, &k_c3(Q)).unwrap();
    assert!(s.product().algebra.mult.same_matrix(&t.algebra.mult));
    assert!(s.product().antipode.same_matrix(&t.antipode));
    assert_eq!(s.product(), &t);
}

#[test]
fn h4_c3_square_of_a() {
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let p = s.product();
    let one_a = p.basis_vec(s.index(0, 1));
    // (1#a)(1#a) = g#a^2
    assert_eq!(p.mul(&one_a, &one_a), p.basis_vec(s.index(1, 2)));
    // unit acts trivially
    for x in 0..p.dim() {
        assert_eq!(p.mul(p.unit(), &p.basis_vec(x)), p.basis_vec(x));
    }
    let m = canonical_maps(&s);
    let r = map_predicates(&m.i_h, &s.h, p, MapKind::Hopf).unwrap();
    assert!(r.passed("comultiplicative"));
    assert!(!r.passed("multiplicative"));
}

#[test]
fn corrupted_cocycle_is_not_coalgebra_map() {
    let mut f = h4_c3_cocycle();
    f.set(1, 4, Scalar::zero());
    f.set(2, 4, Scalar::one());
    let s = CrossedSystemData::new(sweedler_h4(Q).unwrap(), k_c3(Q), h4_c3_action(), f).unwrap();
    let r = verify_crossed_system(&s);
    let e = r.entry("cocycle_coalgebra_map").unwrap();
    assert!(!e.passed);
    assert_eq!(e.witness_labels.as_deref(), Some(&["a".to_string(), "a".to_string()][..]));
    assert!(matches!(CertifiedSystem::certify(s), Err(CrossedError::SystemNotCertified(_))));
}

#[test]
fn non_multiplicative_action_fails() {
    let mut act = h4_c2_smash(Q).act.clone();
    // s ▷ x = x
    act.set(2, 4 + 2, Scalar::one());
    let s = CrossedSystemData::new(sweedler_h4(Q).unwrap(), cyclic_group_algebra(2, "s", Q), act, h4_c2_smash(Q).cocycle.clone()).unwrap();
    let r = verify_crossed_system(&s);
    assert!(!r.passed("action_multiplicative"), "{r}");
}

#[test]
fn c2_c2_cocycle_gives_c4() {
    let (s, group) = linearize_group_crossed_system(&c2_c2_group_data(), Q).unwrap();
    let p = s.product();
    let one_s = p.basis_vec(s.index(0, 1));
    assert!(is_grouplike(p, &one_s));
    let sq = p.mul(&one_s, &one_s);
    assert_eq!(sq, p.basis_vec(s.index(1, 0)));
    let fourth = p.mul(&sq, &sq);
    assert_eq!(fourth, p.unit());
    assert!(p.is_commutative());
    assert_eq!(group.dim(), 4);
}

#[test]
fn non_normalized_group_cocycle_rejected() {
    let mut g = c2_c2_group_data();
    g.cocycle[0][1] = 1;
    assert!(matches!(linearize_group_crossed_system(&g, Q), Err(CrossedError::GroupAxiomFailure(_))));
}

#[test]
fn factorization_round_trip() {
    for (name, s) in corpus() {
        let m = canonical_maps(&s);
        let w = factorize(s.product(), &m.i_a, &m.i_h, s.a.labels.clone(), s.h.labels.clone()).unwrap();
        assert!(w.recovered.act.same_matrix(&s.act), "{name}");
        assert!(w.recovered.cocycle.same_matrix(&s.cocycle), "{name}");
        assert!(w.recovered.h.algebra == s.h.algebra, "{name}");
        assert!(w.recovered.a == s.a, "{name}");
        assert!(w.iso.same_matrix(&LinMap::identity(vec![s.product_dim()])), "{name}");
    }
}

#[test]
fn factorize_c4() {
    let e = cyclic_group_algebra(4, "s", Q);
    let mut a = LinMap::zeros(vec![2], vec![4]);
    a.set(0, 0, Scalar::one());
    a.set(2, 1, Scalar::one());
    let mut h = LinMap::zeros(vec![2], vec![4]);
    h.set(0, 0, Scalar::one());
    h.set(1, 1, Scalar::one());
    let w = factorize(&e, &a, &h, vec!["1".into(), "t".into()], vec!["1".into(), "s".into()]).unwrap();
    assert!(w.recovered.is_action_trivial());
    assert_eq!(w.recovered.f_vec(1, 1), FinVector::basis(2, 1).coords);
    let expect = linearize_group_crossed_system(&c2_c2_group_data(), Q).unwrap().0;
    assert!(w.recovered.cocycle.same_matrix(&expect.cocycle));
}

#[test]
fn factorize_h4_rejects_span_1_x() {
    let e = sweedler_h4(Q).unwrap();
    let mut a = LinMap::zeros(vec![2], vec![4]);
    a.set(0, 0, Scalar::one());
    a.set(1, 1, Scalar::one());
    let mut h = LinMap::zeros(vec![2], vec![4]);
    h.set(0, 0, Scalar::one());
    h.set(2, 1, Scalar::one());
    let r = factorize(&e, &a, &h, vec!["1".into(), "g".into()], vec!["1".into(), "x".into()]);
    assert!(matches!(r, Err(CrossedError::NotSubcoalgebra(_))), "{r:?}");
}

#[test]
fn factorize_s3_not_normal() {
    let e = s3_group_algebra(Q);
    let mut a = LinMap::zeros(vec![2], vec![6]);
    a.set(0, 0, Scalar::one());
    a.set(1, 1, Scalar::one());
    let mut h = LinMap::zeros(vec![3], vec![6]);
    h.set(0, 0, Scalar::one());
    h.set(2, 1, Scalar::one());
    h.set(3, 2, Scalar::one());
    let r = factorize(&e, &a, &h, vec!["e".into(), "(12)".into()], vec!["e".into(), "(13)".into(), "(23)".into()]);
    assert!(matches!(r, Err(CrossedError::NotNormal(_))), "{r:?}");
}

#[test]
fn coboundary_examples() {
    let h4 = sweedler_h4(Q).unwrap();
    let c2 = cyclic_group_algebra(2, "s", Q);
    let (s, phi) = coboundary_system(h4.clone(), c2.clone(), &gamma_c2_to_h4()).unwrap();
    // s ▷ x = g x g = -x
    assert_eq!(s.act_on(1, &h4.basis_vec(2)), FinVector::from_ints(&[0, 0, -1, 0]).coords);
    let t = tensor_hopf(&h4, &c2).unwrap();
    assert!(map_predicates(&phi, s.product(), &t, MapKind::Iso).unwrap().all_passed());
    let (triv, _) = transform_by_lazy_cocycle(&s, &gamma_c2_to_h4()).unwrap();
    assert!(triv.is_action_trivial() && triv.is_cocycle_trivial());

    // A = H = k[C2], γ = id: f_γ(s, s) = 1
    let (s2, phi2) = coboundary_system(c2.clone(), c2.clone(), &LinMap::identity(vec![2])).unwrap();
    assert!(s2.is_cocycle_trivial() && s2.is_action_trivial());
    assert!(phi2.same_matrix(&LinMap::identity(vec![4])) || !phi2.is_zero());

    // γ = η ε
    let mut ue = LinMap::zeros(vec![2], vec![4]);
    ue.set(0, 0, Scalar::one());
    ue.set(0, 1, Scalar::one());
    let (s3, phi3) = coboundary_system(h4.clone(), c2.clone(), &ue).unwrap();
    assert!(s3.is_action_trivial() && s3.is_cocycle_trivial());
    assert!(phi3.same_matrix(&LinMap::identity(vec![8])));
}

#[test]
fn coboundary_needs_cocommutative_h() {
    let h4 = sweedler_h4(Q).unwrap();
    let r = coboundary_system(h4.clone(), h4.clone(), &LinMap::identity(vec![4]));
    assert!(matches!(r, Err(CrossedError::NotCocommutative)));
}

#[test]
fn lazy_cocycles() {
    let h4 = sweedler_h4(Q).unwrap();
    let r = check_lazy_cocycle(&h4, &h4, &LinMap::identity(vec![4]));
    assert!(!r.passed("lazy"));
    assert!(r.passed("coalgebra_map") && r.passed("unitary"));
    let c3 = k_c3(Q);
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let mut triv = LinMap::zeros(vec![3], vec![4]);
    for j in 0..3 {
        triv.set(0, j, Scalar::one());
    }
    assert!(check_lazy_cocycle(&h4, &c3, &triv).all_passed());
    let (same, phi) = transform_by_lazy_cocycle(&s, &triv).unwrap();
    assert_eq!(same, s);
    assert!(phi.same_matrix(&LinMap::identity(vec![12])));
}

#[test]
fn lazy_transform_round_trip() {
    let s = CertifiedSystem::certify(h4_c2_smash(Q)).unwrap();
    let u = gamma_c2_to_h4();
    let (t, _) = transform_by_lazy_cocycle(&s, &u).unwrap();
    assert_ne!(t, s);
    // u is its own convolution inverse here (g^2 = 1)
    let (back, _) = transform_by_lazy_cocycle(&t, &u).unwrap();
    assert_eq!(back, s);
}

#[test]
fn universal_maps_identity() {
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let m = canonical_maps(&s);
    let p = s.product().clone();
    let w = universal_map_out(&s, &p, &m.i_a, &m.i_h).unwrap();
    assert!(w.same_matrix(&LinMap::identity(vec![12])));
    let w = universal_map_in(&s, &p, &m.pi_a, &m.pi_h).unwrap();
    assert!(w.same_matrix(&LinMap::identity(vec![12])));
}

#[test]
fn universal_map_out_to_h() {
    let s = CertifiedSystem::certify(h4_c2_smash(Q)).unwrap();
    let m = canonical_maps(&s);
    // u = 1_H ε_A, v = id_H
    let mut u = LinMap::zeros(vec![4], vec![2]);
    for i in 0..4 {
        u.set(0, i, s.a.eps_basis(i).clone());
    }
    let w = universal_map_out(&s, &s.h, &u, &LinMap::identity(vec![2])).unwrap();
    assert!(w.same_matrix(&m.pi_h));
}

#[test]
fn universal_map_in_from_a() {
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let m = canonical_maps(&s);
    let mut v = LinMap::zeros(vec![4], vec![3]);
    for i in 0..4 {
        v.set(0, i, s.a.eps_basis(i).clone());
    }
    let w = universal_map_in(&s, &s.a, &LinMap::identity(vec![4]), &v).unwrap();
    assert!(w.same_matrix(&m.i_a));
}

#[test]
fn universal_map_violations() {
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let m = canonical_maps(&s);
    let p = s.product().clone();
    // v(h) = ε(h) 1 ignores the cocycle f(a, a) = g
    let mut v = LinMap::zeros(vec![3], vec![12]);
    for j in 0..3 {
        v.set(0, j, Scalar::one());
    }
    let r = universal_map_out(&s, &p, &m.i_a, &v);
    match r {
        Err(CrossedError::PreconditionFailed { condition, .. }) => assert!(condition.starts_with("(u"), "{condition}"),
        other => panic!("{other:?}"),
    }
    // S_H is a Hopf automorphism of k[C3] compatible with f, so this one is fine
    let v = compose(&m.i_h, &s.h.antipode).unwrap();
    assert!(universal_map_out(&s, &p, &m.i_a, &v).is_ok());
    // u(x#1) = g + x is not counital
    let h4 = sweedler_h4(Q).unwrap();
    let c3 = k_c3(Q);
    let triv = CertifiedSystem::certify(CrossedSystemData::trivial(h4.clone(), c3.clone()).unwrap()).unwrap();
    let t = tensor_hopf(&h4, &c3).unwrap();
    let mt = canonical_maps(&triv);
    let mut u = mt.pi_a.clone();
    u.set(1, 2 * 3, Scalar::one());
    assert!(matches!(universal_map_in(&triv, &t, &u, &mt.pi_h), Err(CrossedError::PreconditionFailed { .. })));
}
