//! Property tests for field arithmetic, the text grammar and exact linear algebra.

use hopfcross::field::{parse_scalar, zeta, Field, Scalar};
use hopfcross::hopf::{cyclic_group_algebra, sweedler_h4, HopfData};
use hopfcross::linalg::{compose, convolution, solve, tensor_map, FinVector, LinMap};
use proptest::prelude::*;

const ORDERS: [u32; 4] = [3, 4, 5, 12];

/// Σ (p_k / q_k) ζ_n^k with small integer data.
fn scalar_in(n: u32) -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-6i64..7, 1i64..5), n as usize)
        .prop_map(move |cs| cs.iter().enumerate().fold(Scalar::zero(), |acc, (k, (p, q))| &acc + &(&Scalar::ratio(*p, *q) * &zeta(n, k as i64))))
}

fn field_and_scalars(count: usize) -> impl Strategy<Value = (u32, Vec<Scalar>)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(move |n| (Just(n), prop::collection::vec(scalar_in(n), count)))
}

fn int_map(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
    prop::collection::vec(-3i64..4, rows * cols)
        .prop_map(move |v| LinMap::new(vec![cols], vec![rows], v.into_iter().map(Scalar::from_int).collect()).expect("shape"))
}

fn hopf_map(h: &HopfData) -> impl Strategy<Value = LinMap> {
    int_map(h.dim(), h.dim())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((_, v) in field_and_scalars(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a + &Scalar::zero(), a.clone());
        prop_assert_eq!(a * &Scalar::one(), a.clone());
        prop_assert!((a - a).is_zero());
        if !a.is_zero() {
            prop_assert!((a * &a.inverse().unwrap()).is_one());
            prop_assert_eq!(&(b / a) * a, b.clone());
        }
    }

    #[test]
    fn parse_inverts_render((n, v) in field_and_scalars(1)) {
        let text = v[0].to_string();
        let back = parse_scalar(&text, Field::cyclotomic(n)).unwrap();
        prop_assert_eq!(&back, &v[0]);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn powers_add((n, v) in field_and_scalars(1), e in -4i64..5, f in -4i64..5) {
        let a = &v[0];
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.pow(e + f).unwrap(), &a.pow(e).unwrap() * &a.pow(f).unwrap());
        prop_assert!(zeta(n, n as i64).is_one());
    }

    #[test]
    fn convolution_is_associative(f in hopf_map(&sweedler_h4(Field::Rational).unwrap()),
                                  g in hopf_map(&sweedler_h4(Field::Rational).unwrap()),
                                  k in hopf_map(&sweedler_h4(Field::Rational).unwrap())) {
        let h = sweedler_h4(Field::Rational).unwrap();
        let (c, a) = (&h.coalgebra, &h.algebra);
        let left = convolution(&convolution(&f, &g, c, a).unwrap(), &k, c, a).unwrap();
        let right = convolution(&f, &convolution(&g, &k, c, a).unwrap(), c, a).unwrap();
        prop_assert!(left.same_matrix(&right));
        // η∘ε is the unit
        let unit = convolution(&h.antipode, &h.identity_map(), c, a).unwrap();
        prop_assert!(convolution(&unit, &f, c, a).unwrap().same_matrix(&f));
    }

    #[test]
    fn tensor_map_composes(f in int_map(2, 3), f2 in int_map(3, 2), g in int_map(2, 2), g2 in int_map(2, 3)) {
        let lhs = compose(&tensor_map(&f, &g), &tensor_map(&f2, &g2)).unwrap();
        let rhs = tensor_map(&compose(&f, &f2).unwrap(), &compose(&g, &g2).unwrap());
        prop_assert!(lhs.same_matrix(&rhs));
    }

    #[test]
    fn solve_invariants(m in int_map(3, 4), x in prop::collection::vec(-3i64..4, 4)) {
        let x = FinVector::from_ints(&x);
        let b = m.apply_vec(&x).unwrap();
        let sol = solve(&m, Some(&b)).unwrap();
        let p = sol.particular.expect("b is in the image");
        prop_assert_eq!(m.apply_vec(&p).unwrap(), b);
        for v in &sol.nullspace_basis {
            prop_assert!(m.apply_vec(v).unwrap().is_zero());
        }
        prop_assert_eq!(hopfcross::linalg::rank(&m) + sol.nullspace_basis.len(), 4);
    }

    #[test]
    fn group_algebra_antipode_is_inverse(n in 2usize..7) {
        let h = cyclic_group_algebra(n, "t", Field::Rational);
        for i in 0..n {
            let prod = h.mul(&h.basis_vec(i), &h.s(&h.basis_vec(i)));
            prop_assert_eq!(prod, h.unit().to_vec());
        }
    }
}
