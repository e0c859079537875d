//! Bundled example data: the H4 / k[C3] crossed system, small group
//! cocycle systems, coboundary data and factorization inputs.

use crate::braiding::{cyclic_bicharacter_braiding, BraidingQuadruple, Monomial, PairingData, PairingTemplate, QuadrupleTemplate};
use crate::crossed::{coboundary_system, linearize_group_crossed_system, CertifiedSystem, CrossedSystemData, GroupCrossedData};
use crate::field::{zeta, Field, Scalar};
use crate::hopf::{cyclic_group_algebra, sweedler_h4, HopfData};
use crate::linalg::LinMap;

/// `k[C3]` with basis `1, a, a^2`.
pub fn k_c3(field: Field) -> HopfData {
    cyclic_group_algebra(3, "a", field)
}

/// `▷` on H4 by k[C3]: `a` and `a^2` fix `1, g` and negate `x, gx`.
pub fn h4_c3_action() -> LinMap {
    let mut m = LinMap::zeros(vec![3, 4], vec![4]);
    for i in 0..4 {
        m.set(i, i, Scalar::one());
    }
    for h in 1..3 {
        for i in 0..4 {
            let sign = if i < 2 { 1 } else { -1 };
            m.set(i, h * 4 + i, Scalar::from_int(sign));
        }
    }
    m
}

/// `f(a, a) = f(a^2, a^2) = g`, all other values `1`.
pub fn h4_c3_cocycle() -> LinMap {
    let mut m = LinMap::zeros(vec![3, 3], vec![4]);
    for x in 0..3 {
        for y in 0..3 {
            let out = if (x, y) == (1, 1) || (x, y) == (2, 2) { 1 } else { 0 };
            m.set(out, x * 3 + y, Scalar::one());
        }
    }
    m
}

/// The crossed system on `(H4, k[C3])`.
pub fn h4_c3_system(field: Field) -> CrossedSystemData {
    let a = sweedler_h4(field).expect("characteristic zero");
    let h = k_c3(field);
    CrossedSystemData::new(a, h, h4_c3_action(), h4_c3_cocycle()).expect("shapes")
}

/// The H4 / k[C3] action with the trivial cocycle. Not a crossed system:
/// `a ▷ (a ▷ x) = x` while `a^2 ▷ x = -x`.
pub fn h4_c3_smash(field: Field) -> CrossedSystemData {
    let a = sweedler_h4(field).expect("characteristic zero");
    let h = k_c3(field);
    let f = CrossedSystemData::trivial_cocycle(&a, &h);
    CrossedSystemData::new(a, h, h4_c3_action(), f).expect("shapes")
}

/// `k[C2]` acting on H4 by `s ▷ x = -x`, `s ▷ gx = -gx`, trivial cocycle.
pub fn h4_c2_smash(field: Field) -> CrossedSystemData {
    let a = sweedler_h4(field).expect("characteristic zero");
    let h = cyclic_group_algebra(2, "s", field);
    let mut act = LinMap::zeros(vec![2, 4], vec![4]);
    for i in 0..4 {
        act.set(i, i, Scalar::one());
        act.set(i, 4 + i, Scalar::from_int(if i < 2 { 1 } else { -1 }));
    }
    let f = CrossedSystemData::trivial_cocycle(&a, &h);
    CrossedSystemData::new(a, h, act, f).expect("shapes")
}

/// `A = <t>`, `H = <s>`, both of order two, trivial action, `f(s, s) = t`.
pub fn c2_c2_group_data() -> GroupCrossedData {
    let c2 = vec![vec![0, 1], vec![1, 0]];
    GroupCrossedData {
        a_table: c2.clone(),
        a_labels: vec!["1".into(), "t".into()],
        h_table: c2,
        h_labels: vec!["1".into(), "s".into()],
        cocycle: vec![vec![0, 0], vec![0, 1]],
        action: vec![vec![0, 1], vec![0, 1]],
    }
}

/// `γ : k[C2] → H4`, `s ↦ g`.
pub fn gamma_c2_to_h4() -> LinMap {
    let mut m = LinMap::zeros(vec![2], vec![4]);
    m.set(0, 0, Scalar::one());
    m.set(1, 1, Scalar::one());
    m
}

/// Braiding on H4 with nilpotent block `p(x, x) = p(x, gx) = p(gx, gx) = α`, `p(gx, x) = −α`.
pub fn h4_p(alpha: &Scalar) -> PairingData {
    h4_p_with(alpha, &-alpha)
}

/// The reference H4 table, with `p(gx, x) = α`; fails BR1 and BR3 unless `α = 0`.
pub fn h4_p_reference(alpha: &Scalar) -> PairingData {
    h4_p_with(alpha, alpha)
}

fn h4_p_with(alpha: &Scalar, gx_x: &Scalar) -> PairingData {
    let mut p = PairingData::zeros(4, 4);
    for (i, j, v) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        p.set(i, j, Scalar::from_int(v));
    }
    p.set(2, 2, alpha.clone());
    p.set(2, 3, alpha.clone());
    p.set(3, 2, gx_x.clone());
    p.set(3, 3, alpha.clone());
    p
}

/// `u(g, a) = u(g, a^2) = −1`, zero on `x, gx`, counit elsewhere.
pub fn h4_c3_u() -> PairingData {
    let mut u = PairingData::zeros(4, 3);
    for j in 0..3 {
        u.set(0, j, Scalar::one());
        u.set(1, j, Scalar::from_int(if j == 0 { 1 } else { -1 }));
    }
    u
}

/// `v(a, g) = v(a^2, g) = −1`, zero on `x, gx`, counit elsewhere.
pub fn h4_c3_v() -> PairingData {
    let mut v = PairingData::zeros(3, 4);
    for i in 0..3 {
        v.set(i, 0, Scalar::one());
        v.set(i, 1, Scalar::from_int(if i == 0 { 1 } else { -1 }));
    }
    v
}

/// Skew braiding on k[C3] for `γ³ = 1`: `τ(a, a) = τ(a^2, a^2) = −γ`, `τ(a, a^2) = τ(a^2, a) = −γ²`.
pub fn c3_tau(gamma: &Scalar) -> PairingData {
    c3_tau_with(&-gamma, gamma)
}

/// The reference k[C3] table, with `τ(a, a) = γ`; fails SBR1 and SBR3.
pub fn c3_tau_reference(gamma: &Scalar) -> PairingData {
    c3_tau_with(gamma, gamma)
}

fn c3_tau_with(aa: &Scalar, gamma: &Scalar) -> PairingData {
    let g2 = -(gamma * gamma);
    let mut t = PairingData::zeros(3, 3);
    for k in 0..3 {
        t.set(0, k, Scalar::one());
        t.set(k, 0, Scalar::one());
    }
    t.set(1, 1, aa.clone());
    t.set(1, 2, g2.clone());
    t.set(2, 1, g2);
    t.set(2, 2, -gamma);
    t
}

/// The certified quadruple on the H4 / k[C3] system.
pub fn h4_c3_quadruple(alpha: &Scalar, gamma: &Scalar) -> BraidingQuadruple {
    BraidingQuadruple { p: h4_p(alpha), tau: c3_tau(gamma), u: h4_c3_u(), v: h4_c3_v() }
}

/// The reference quadruple, kept for diagnostics.
pub fn h4_c3_quadruple_reference(alpha: &Scalar, gamma: &Scalar) -> BraidingQuadruple {
    BraidingQuadruple { p: h4_p_reference(alpha), tau: c3_tau_reference(gamma), u: h4_c3_u(), v: h4_c3_v() }
}

/// The H4 / k[C3] family with unknowns `alpha` (index 0) and `gamma` (index 1).
pub fn h4_c3_template() -> QuadrupleTemplate {
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let mut p = PairingTemplate::fixed(&h4_p(&Scalar::zero()));
    for (i, j) in [(2, 2), (2, 3), (3, 3)] {
        p.set(i, j, vec![Monomial::var(one(), 0, 1)]);
    }
    p.set(3, 2, vec![Monomial::var(neg(), 0, 1)]);
    let mut tau = PairingTemplate::fixed(&c3_tau(&Scalar::zero()));
    tau.set(1, 1, vec![Monomial::var(neg(), 1, 1)]);
    tau.set(1, 2, vec![Monomial::var(neg(), 1, 2)]);
    tau.set(2, 1, vec![Monomial::var(neg(), 1, 2)]);
    tau.set(2, 2, vec![Monomial::var(neg(), 1, 1)]);
    QuadrupleTemplate {
        unknowns: vec!["alpha".into(), "gamma".into()],
        p,
        tau,
        u: PairingTemplate::fixed(&h4_c3_u()),
        v: PairingTemplate::fixed(&h4_c3_v()),
    }
}

/// The certified fixture systems: trivial, smash, group cocycle, coboundary and H4 / k[C3].
pub fn corpus(field: Field) -> Vec<(&'static str, CertifiedSystem)> {
    let h4 = sweedler_h4(field).expect("characteristic zero");
    let c2 = cyclic_group_algebra(2, "s", field);
    let certify = |d| CertifiedSystem::certify(d).expect("fixture certifies");
    vec![
        ("trivial", certify(CrossedSystemData::trivial(h4.clone(), k_c3(field)).expect("shapes"))),
        ("smash", certify(h4_c2_smash(field))),
        ("group_c2_c2", linearize_group_crossed_system(&c2_c2_group_data(), field).expect("fixture").0),
        ("coboundary", coboundary_system(h4, c2, &gamma_c2_to_h4()).expect("fixture").0),
        ("h4_c3", certify(h4_c3_system(field))),
    ]
}

/// `−1` at the pair of second basis elements (the order-two grouplikes), counit elsewhere.
fn sign_pairing(left: &HopfData, right: &HopfData) -> PairingData {
    PairingData::from_fn(left.dim(), right.dim(), |i, j| if (i, j) == (1, 1) { Scalar::from_int(-1) } else { left.eps_basis(i) * right.eps_basis(j) })
}

/// A certified braiding quadruple for each corpus system, nontrivial wherever the system allows.
pub fn corpus_braidings(field: Field) -> Vec<(&'static str, CertifiedSystem, BraidingQuadruple)> {
    let minus = Scalar::from_int(-1);
    corpus(field)
        .into_iter()
        .map(|(name, s)| {
            let q = match name {
                "trivial" => BraidingQuadruple {
                    p: h4_p(&Scalar::one()),
                    tau: cyclic_bicharacter_braiding(3, &zeta(3, 1)).expect("root of unity"),
                    u: PairingData::counit(&s.a, &s.h),
                    v: PairingData::counit(&s.h, &s.a),
                },
                "smash" | "coboundary" => BraidingQuadruple {
                    p: h4_p(&Scalar::one()),
                    tau: cyclic_bicharacter_braiding(2, &minus).expect("root of unity"),
                    u: sign_pairing(&s.a, &s.h),
                    v: sign_pairing(&s.h, &s.a),
                },
                "group_c2_c2" => BraidingQuadruple {
                    p: PairingData::counit(&s.a, &s.a),
                    tau: cyclic_bicharacter_braiding(2, &minus).expect("root of unity"),
                    u: PairingData::counit(&s.a, &s.h),
                    v: PairingData::counit(&s.h, &s.a),
                },
                _ => h4_c3_quadruple(&Scalar::one(), &zeta(3, 1)),
            };
            (name, s, q)
        })
        .collect()
}

/// k[C2] ⊗ H4 with trivial structure maps; H is neither commutative nor cocommutative.
pub fn c2_h4_trivial(field: Field) -> CrossedSystemData {
    CrossedSystemData::trivial(cyclic_group_algebra(2, "s", field), sweedler_h4(field).expect("characteristic zero")).expect("shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::certify_quadruple;
    use crate::crossed::*;
    use crate::hopf::verify_hopf;

    #[test]
    fn h4_c3_is_crossed_system() {
        let s = h4_c3_system(Field::Rational);
        let r = verify_crossed_system(&s);
        assert!(r.all_passed(), "{r}");
        let c = CertifiedSystem::certify(s).unwrap();
        let r = verify_hopf(c.product());
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn smash_systems() {
        let r = verify_crossed_system(&h4_c2_smash(Field::Rational));
        assert!(r.all_passed(), "{r}");
        let r = verify_crossed_system(&h4_c3_smash(Field::Rational));
        assert_eq!(r.failed_names(), vec!["twisted_module".to_string()]);
        assert_eq!(r.entry("twisted_module").unwrap().witness_labels.as_deref(), Some(&["a".to_string(), "a".into(), "x".into()][..]));
    }

    #[test]
    fn corpus_braidings_certify() {
        for (name, s, q) in corpus_braidings(Field::cyclotomic(3)) {
            let r = certify_quadruple(&s, &q);
            assert!(r.all_passed(), "{name}:\n{r}");
        }
    }
}
