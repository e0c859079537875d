use hopfcross::field::{zeta, Field, Scalar};
use hopfcross::polybraid::*;
use proptest::prelude::*;

fn param_sets() -> Vec<PolySigmaParams> {
    vec![
        PolySigmaParams::from_ints([1, 1, 1, 1]),
        PolySigmaParams::from_ints([1, 2, 3, 5]),
        PolySigmaParams::new(zeta(3, 1), Scalar::ratio(1, 2), Scalar::from_int(-3), zeta(3, 2)),
    ]
}

#[test]
fn closed_form_matches_expansion_low_degree() {
    for p in param_sets() {
        for n in 0..=6u32 {
            for a in 0..=n {
                for c in 0..=n {
                    assert_eq!(
                        closed_form_sigma(&p, a, n - a, c, n - c),
                        assembled_sigma_poly(&p, a, n - a, c, n - c),
                        "{a} {} {c} {}",
                        n - a,
                        n - c
                    );
                }
            }
        }
    }
}

#[test]
fn sigma_respects_grading() {
    let p = PolySigmaParams::from_ints([2, 3, 5, 7]);
    assert!(closed_form_sigma(&p, 2, 1, 1, 1).is_zero());
    assert!(assembled_sigma_poly(&p, 0, 3, 1, 1).is_zero());
}

#[test]
fn bounded_axioms_pass() {
    for p in param_sets() {
        let r = br_axioms_bounded(&p, 3);
        assert!(r.all_passed(), "{r}");
        assert!(r.entry("completeness_unchecked").unwrap().note.is_some());
    }
}

#[test]
fn coproduct_fault_breaks_br1() {
    let p = PolySigmaParams::from_ints([1, 2, 3, 5]);
    let fault = CoproductFault { degree: 2, index: 1, delta: 1 };
    let r = br_axioms_bounded_with(&p, 3, Some(&fault));
    let e = r.entry("BR1").unwrap();
    assert!(!e.passed, "{r}");
    assert_eq!(e.witness_labels.as_ref().unwrap(), &["X^0⊗X^1", "X^0⊗X^1", "X^0⊗X^2"]);
    assert!(!r.passed("BR3"));
}

#[test]
fn params_parse() {
    let p = PolySigmaParams::parse("1, 2, z, -1/2", Field::cyclotomic(3)).unwrap();
    assert_eq!(p, PolySigmaParams::new(Scalar::one(), Scalar::from_int(2), zeta(3, 1), Scalar::ratio(-1, 2)));
    assert!(PolySigmaParams::parse("1,2,3", Field::Rational).is_err());
    assert!(PolySigmaParams::parse("1,2,3,z", Field::Rational).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_agrees_on_random_params(v in prop::array::uniform4(-4i64..5), a in 0u32..5, b in 0u32..5, c in 0u32..5) {
        prop_assume!(c <= a + b);
        let p = PolySigmaParams::from_ints(v);
        let d = a + b - c;
        prop_assert_eq!(closed_form_sigma(&p, a, b, c, d), assembled_sigma_poly(&p, a, b, c, d));
    }

    #[test]
    fn coproduct_is_coassociative(n in 0u32..9) {
        // (Δ ⊗ id)Δ and (id ⊗ Δ)Δ agree on X^n as trinomial coefficients
        let mut left = std::collections::BTreeMap::new();
        for (i, j, c) in poly_coproduct(n) {
            for (k, l, d) in poly_coproduct(i) {
                *left.entry((k, l, j)).or_insert_with(num_bigint::BigInt::default) += &c * &d;
            }
        }
        let mut right = std::collections::BTreeMap::new();
        for (i, j, c) in poly_coproduct(n) {
            for (k, l, d) in poly_coproduct(j) {
                *right.entry((i, k, l)).or_insert_with(num_bigint::BigInt::default) += &c * &d;
            }
        }
        prop_assert_eq!(left, right);
    }
}
