use hopfcross::crossed::{build_crossed_product, CertifiedSystem, CrossedSystemData};
use hopfcross::field::{Field, Scalar};
use hopfcross::hopf::{cyclic_group_algebra, sweedler_h4};
use hopfcross::linalg::FinVector;
use hopfcross::presets::{corpus, h4_c3_system, k_c3};
use hopfcross::structure::*;

const Q: Field = Field::Rational;

#[test]
fn integral_spaces_satisfy_identity() {
    for (name, s) in corpus(Q) {
        for side in [Side::Left, Side::Right] {
            let sp = integrals(s.product(), side);
            assert_eq!(sp.dim(), 1, "{name}");
            for t in &sp.basis {
                assert!(is_integral(s.product(), &t.coords, side), "{name}");
            }
        }
    }
}

#[test]
fn maschke_consistency() {
    for (name, s) in corpus(Q) {
        let lhs = is_semisimple(s.product()).semisimple;
        let rhs = is_semisimple(&s.a).semisimple && is_semisimple(&s.h).semisimple;
        assert_eq!(lhs, rhs, "{name}");
    }
    let c2 = cyclic_group_algebra(2, "s", Q);
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(c2.clone(), k_c3(Q)).unwrap()).unwrap();
    assert!(is_semisimple(s.product()).semisimple);
}

#[test]
fn product_integral_h4_c3() {
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let x_a = FinVector::from_ints(&[0, 0, 1, -1]);
    let x_h = FinVector::from_ints(&[1, 1, 1]);
    let t = product_integral(&s, &x_a, &x_h).unwrap();
    let sp = integrals(s.product(), Side::Right);
    assert_eq!(sp.basis, vec![t.clone()]);
    let z = project_integral(&s, &t, Side::Right).unwrap();
    assert!(z.is_zero);
    let bad = product_integral(&s, &FinVector::from_ints(&[1, 0, 0, 0]), &x_h);
    assert!(matches!(bad, Err(StructureError::NotAnIntegral(m)) if m.contains("x_A")));
    let bad = project_integral(&s, &FinVector::basis(12, 0), Side::Right);
    assert!(bad.is_err());
}

#[test]
fn left_integral_projects_to_a() {
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let sp = integrals(s.product(), Side::Left);
    let z = project_integral(&s, &sp.basis[0], Side::Left).unwrap();
    assert!(!z.is_zero);
    let h4_left = integrals(&s.a, Side::Left).basis[0].clone();
    let lead = z.vector.coords.iter().find(|c| !c.is_zero()).unwrap().clone();
    assert_eq!(h4_left.scale(&lead), z.vector);
}

#[test]
fn tensor_projection_nonzero() {
    let c2 = cyclic_group_algebra(2, "s", Q);
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(c2.clone(), c2.clone()).unwrap()).unwrap();
    let t_a = FinVector::from_ints(&[1, 1]);
    let t = product_integral(&s, &t_a, &t_a).unwrap();
    assert_eq!(t, FinVector::from_ints(&[1, 1, 1, 1]));
    let z = project_integral(&s, &t, Side::Right).unwrap();
    assert_eq!(z.vector, t_a.scale(&Scalar::from_int(2)));
}

#[test]
fn commutativity_equivalence() {
    for (name, s) in corpus(Q) {
        let r = commutativity_criterion(&s);
        assert_eq!(r.all_passed(), is_commutative(s.product()), "{name}: {r}");
    }
    let c2 = cyclic_group_algebra(2, "s", Q);
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(c2, k_c3(Q)).unwrap()).unwrap();
    assert!(commutativity_criterion(&s).all_passed());
    assert!(is_commutative(&build_crossed_product(&s)));
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let r = commutativity_criterion(&s);
    let e = r.entry("action_trivial").unwrap();
    assert!(!e.passed);
    assert_eq!(e.witness_labels.as_deref(), Some(&["a".to_string(), "x".to_string()][..]));
}

#[test]
fn involutory_equivalence() {
    for (name, s) in corpus(Q) {
        let r = involutory_criterion_cocomm(&s).unwrap();
        assert_eq!(r.all_passed(), is_involutory(s.product()), "{name}: {r}");
    }
    let s = CertifiedSystem::certify(h4_c3_system(Q)).unwrap();
    let r = involutory_criterion_cocomm(&s).unwrap();
    assert!(r.passed("involutory_identity"));
    assert!(!r.passed("a_involutory"));
    let h4 = sweedler_h4(Q).unwrap();
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(k_c3(Q), h4).unwrap()).unwrap();
    assert_eq!(involutory_criterion_cocomm(&s), Err(StructureError::NotCocommutative));
    assert!(!is_cocommutative(&s.h) && is_cocommutative(&s.a));
}
