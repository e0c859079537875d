use hopfcross::braiding::*;
use hopfcross::crossed::{CertifiedSystem, CrossedSystemData};
use hopfcross::field::{zeta, Field, Scalar};
use hopfcross::hopf::{cyclic_group_algebra, sweedler_h4};
use hopfcross::presets::*;
use proptest::prelude::*;

fn z3() -> Field {
    Field::cyclotomic(3)
}

fn h4_c3() -> CertifiedSystem {
    CertifiedSystem::certify(h4_c3_system(z3())).unwrap()
}

fn cube_roots() -> Vec<Scalar> {
    (0..3).map(|k| zeta(3, k)).collect()
}

#[test]
fn cyclic_bicharacters() {
    let p = cyclic_bicharacter_braiding(2, &Scalar::from_int(-1)).unwrap();
    assert_eq!(p.get(1, 1), &Scalar::from_int(-1));
    let c2 = cyclic_group_algebra(2, "t", Field::Rational);
    assert!(check_braiding(&c2, &p).all_passed());

    let z = zeta(3, 1);
    let p = cyclic_bicharacter_braiding(3, &z).unwrap();
    assert_eq!(p.get(2, 2), &zeta(3, 4));
    assert!(check_braiding(&cyclic_group_algebra(3, "t", z3()), &p).all_passed());

    let err = cyclic_bicharacter_braiding(3, &Scalar::from_int(2)).unwrap_err();
    assert!(matches!(err, BraidingError::NotRootOfUnity { n: 3, .. }));
}

#[test]
fn cyclic_right_skew() {
    // trivial α: the formula table is υ^{ab}, a bicharacter, valid for υ = 1
    let alpha = vec![vec![0; 3]; 3];
    let u = cyclic_pf_right_skew(2, 3, &alpha, &Scalar::from_int(-1), &Scalar::one()).unwrap();
    assert!(u.entries().iter().all(Scalar::is_one));

    let mut lopsided = vec![vec![0; 3]; 3];
    lopsided[1][2] = 1;
    let err = cyclic_pf_right_skew(2, 3, &lopsided, &Scalar::from_int(-1), &Scalar::one()).unwrap_err();
    assert!(matches!(err, BraidingError::AlphaNotSymmetric(1, 2)));

    let err = cyclic_pf_right_skew(2, 3, &alpha, &Scalar::from_int(-1), &Scalar::from_int(-1)).unwrap_err();
    assert!(matches!(err, BraidingError::UpsilonConditionFailed(_)));
}

#[test]
fn cyclic_stated_condition_is_not_sufficient() {
    // α(1,1) = α(2,2) = 1: the stated condition admits υ = 1 but the table fails RS3
    let mut alpha = vec![vec![0; 3]; 3];
    alpha[1][1] = 1;
    alpha[2][2] = 1;
    let err = cyclic_pf_right_skew(2, 3, &alpha, &Scalar::from_int(-1), &Scalar::one()).unwrap_err();
    match err {
        BraidingError::PostconditionFailed(r) => assert!(r.failed_names().contains(&"RS3".to_string()), "{r}"),
        other => panic!("unexpected {other}"),
    }
}

#[test]
fn reference_quadruple_is_not_certified() {
    let s = h4_c3();
    let r = certify_quadruple(&s, &h4_c3_quadruple_reference(&Scalar::one(), &zeta(3, 1)));
    let failed = r.failed_names();
    for name in ["BR1", "BR3", "SBR1", "SBR3"] {
        assert!(failed.contains(&name.to_string()), "{name} should fail:\n{r}");
    }
    // reference τ alone, with the corrected p
    let q = BraidingQuadruple { tau: c3_tau_reference(&zeta(3, 1)), ..h4_c3_quadruple(&Scalar::one(), &zeta(3, 1)) };
    let r = certify_quadruple(&s, &q);
    assert!(!r.passed("SBR1") && r.passed("BR1"), "{r}");
}

#[test]
fn corrected_family_certifies() {
    let s = h4_c3();
    for alpha in [Scalar::one(), Scalar::from_int(2), Scalar::ratio(-1, 3)] {
        for gamma in cube_roots() {
            let r = certify_quadruple(&s, &h4_c3_quadruple(&alpha, &gamma));
            assert!(r.all_passed(), "alpha {alpha} gamma {gamma}:\n{r}");
        }
    }
}

#[test]
fn search_finds_the_family() {
    let s = h4_c3();
    let t = h4_c3_template();
    let cands = vec![vec![Scalar::one(), Scalar::from_int(2)], cube_roots()];
    let hits = search_braidings(&s, &t, &cands, 100).unwrap();
    assert_eq!(hits.len(), 6);
    assert_eq!(hits[0].assignment, vec![Scalar::one(), Scalar::one()]);
    assert_eq!(hits[5].assignment, vec![Scalar::from_int(2), zeta(3, 2)]);
    for h in &hits {
        assert_eq!(h.quadruple, h4_c3_quadruple(&h.assignment[0], &h.assignment[1]));
    }
    // alpha = 0 is a degenerate but valid member; −1 is not a cube root
    let cands = vec![vec![Scalar::zero()], vec![Scalar::from_int(-1)]];
    assert!(search_braidings(&s, &t, &cands, 100).unwrap().is_empty());
    let cands = vec![vec![], cube_roots()];
    assert!(search_braidings(&s, &t, &cands, 100).unwrap().is_empty());
    let cands = vec![vec![Scalar::one(); 20], vec![Scalar::one(); 20]];
    let err = search_braidings(&s, &t, &cands, 100).unwrap_err();
    assert!(matches!(err, BraidingError::SearchSpaceTooLarge { size: 400, cap: 100 }));
}

#[test]
fn sigma_round_trips() {
    let s = h4_c3();
    for alpha in [Scalar::one(), Scalar::from_int(2)] {
        for gamma in cube_roots() {
            let q = h4_c3_quadruple(&alpha, &gamma);
            let sigma = assemble_sigma(&s, &q).unwrap();
            assert_eq!(decompose_sigma(&s, &sigma).unwrap(), q);
            assert_eq!(assemble_sigma(&s, &decompose_sigma(&s, &sigma).unwrap()).unwrap(), sigma);
            assert!(check_braiding(s.product(), &sigma).all_passed());
        }
    }
    for (name, s, q) in corpus_braidings(z3()) {
        let sigma = assemble_sigma(&s, &q).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(decompose_sigma(&s, &sigma).unwrap(), q, "{name}");
    }
}

#[test]
fn certified_sigma_values() {
    let s = h4_c3();
    let z = zeta(3, 1);
    let sigma = assemble_sigma(&s, &h4_c3_quadruple(&Scalar::one(), &z)).unwrap();
    let p = s.product();
    let at = |l: &str, r: &str| sigma.get(p.index_of(l).unwrap(), p.index_of(r).unwrap()).clone();
    assert_eq!(at("1#a", "1#a"), -&z);
    assert_eq!(at("g#1", "g#1"), Scalar::from_int(-1));
    assert_eq!(at("x#a", "x#a"), z);
    assert_eq!(at("gx#a^2", "gx#a^2"), z);
    // mixed grouplike / nilpotent blocks vanish
    assert!(at("x#1", "g#1").is_zero() && at("g#a", "x#a").is_zero());
}

#[test]
fn decompose_rejects_non_braidings() {
    let s = h4_c3();
    let q = h4_c3_quadruple_reference(&Scalar::one(), &zeta(3, 1));
    let sigma = assemble_sigma_unchecked(&s, &q).unwrap();
    assert!(matches!(decompose_sigma(&s, &sigma), Err(BraidingError::NotABraiding(_))));
    assert!(matches!(assemble_sigma(&s, &q), Err(BraidingError::QuadrupleNotCertified(_))));
}

#[test]
fn tensor_case_corollary() {
    let c2 = |f| cyclic_group_algebra(2, "s", f);
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(c2(Field::Rational), c2(Field::Rational)).unwrap()).unwrap();
    let m1 = Scalar::from_int(-1);
    for (t1, t2) in [(Scalar::one(), m1.clone()), (m1.clone(), m1.clone())] {
        let q = BraidingQuadruple {
            p: cyclic_bicharacter_braiding(2, &t1).unwrap(),
            tau: cyclic_bicharacter_braiding(2, &t2).unwrap(),
            u: PairingData::counit(&s.a, &s.h),
            v: PairingData::counit(&s.h, &s.a),
        };
        let r = corollary_checks(&s, &q).unwrap();
        assert!(r.all_passed(), "{r}");
        assert!(r.passed("tensor_compat1") && r.passed("tensor_cocommutative_trivial"));
        let sigma = assemble_sigma(&s, &q).unwrap();
        // σ(s#s, s#s) = t1 t2
        assert_eq!(sigma.get(3, 3), &(&t1 * &t2));
    }
}

#[test]
fn h4_tensor_braidings() {
    let s = CertifiedSystem::certify(CrossedSystemData::trivial(sweedler_h4(z3()).unwrap(), k_c3(z3())).unwrap()).unwrap();
    let q = BraidingQuadruple {
        p: h4_p(&Scalar::from_int(3)),
        tau: cyclic_bicharacter_braiding(3, &zeta(3, 1)).unwrap(),
        u: PairingData::counit(&s.a, &s.h),
        v: PairingData::counit(&s.h, &s.a),
    };
    let r = corollary_checks(&s, &q).unwrap();
    assert!(r.all_passed(), "{r}");
    assert!(r.passed("tau_braiding") && r.passed("theorem_agrees"));
}

#[test]
fn corollary_needs_special_shape() {
    let s = h4_c3();
    let q = h4_c3_quadruple(&Scalar::one(), &zeta(3, 1));
    assert!(matches!(corollary_checks(&s, &q), Err(BraidingError::ShapeNotSpecial)));
    for (name, s, q) in corpus_braidings(z3()) {
        if name == "h4_c3" {
            continue;
        }
        let r = corollary_checks(&s, &q).unwrap();
        assert!(r.all_passed(), "{name}:\n{r}");
    }
}

#[test]
fn tsv_layout() {
    let s = h4_c3();
    let sigma = assemble_sigma(&s, &h4_c3_quadruple(&Scalar::one(), &Scalar::one())).unwrap();
    let labels = &s.product().labels;
    let tsv = sigma_tsv(&sigma, labels, labels);
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines.len(), 13);
    assert!(lines[0].starts_with("sigma\t1#1\t1#a\t1#a^2\tg#1"));
    assert_eq!(lines[1], "1#1\t1\t1\t1\t1\t1\t1\t0\t0\t0\t0\t0\t0");
}

proptest! {
    #[test]
    fn bicharacters_are_braidings(n in 2usize..6, k in 0i64..6) {
        let f = Field::cyclotomic(n as u32);
        let tau = zeta(n as u32, k);
        let p = cyclic_bicharacter_braiding(n, &tau).unwrap();
        prop_assert!(check_braiding(&cyclic_group_algebra(n, "t", f), &p).all_passed());
    }

    #[test]
    fn pairing_eval_is_bilinear(xs in prop::collection::vec(-3i64..4, 4), ys in prop::collection::vec(-3i64..4, 4), c in -3i64..4) {
        let p = h4_p(&Scalar::from_int(2));
        let x: Vec<Scalar> = xs.iter().map(|v| Scalar::from_int(*v)).collect();
        let y: Vec<Scalar> = ys.iter().map(|v| Scalar::from_int(*v)).collect();
        let cx: Vec<Scalar> = x.iter().map(|v| v * &Scalar::from_int(c)).collect();
        prop_assert_eq!(p.eval(&cx, &y), &p.eval(&x, &y) * &Scalar::from_int(c));
    }
}
