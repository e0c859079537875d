//! The polynomial Hopf algebra k[X] on its monomial basis and braidings on
//! `k[X] ⊗ k[X]` induced by four scalars.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::field::{binomial, factorial, parse_scalar, Field, FieldError, Scalar};
use crate::hopf::{check_tuples, AxiomEntry, AxiomReport};

/// A finitely supported polynomial `Σ c_n Xⁿ`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GradedVector {
    terms: BTreeMap<u32, Scalar>,
}

impl GradedVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(n: u32) -> Self {
        Self::from_terms([(n, Scalar::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (n, c) in terms {
            v.add_term(n, &c);
        }
        v
    }

    pub fn add_term(&mut self, n: u32, c: &Scalar) {
        let e = self.terms.entry(n).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn coeff(&self, n: u32) -> Scalar {
        self.terms.get(&n).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }
}

/// `Xᵃ · Xᵇ = X^{a+b}` extended bilinearly.
pub fn poly_product(x: &GradedVector, y: &GradedVector) -> GradedVector {
    let mut out = GradedVector::zero();
    for (a, c) in x.terms() {
        for (b, d) in y.terms() {
            out.add_term(a + b, &(c * d));
        }
    }
    out
}

/// Replaces one binomial coefficient of `Δ(Xⁿ)`; used to test that the checks notice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoproductFault {
    pub degree: u32,
    pub index: u32,
    pub delta: i64,
}

/// `Δ(Xⁿ) = Σᵢ C(n, i) Xⁱ ⊗ X^{n−i}` as `(i, n − i, C(n, i))`.
pub fn poly_coproduct(n: u32) -> Vec<(u32, u32, BigInt)> {
    poly_coproduct_with(n, None)
}

pub fn poly_coproduct_with(n: u32, fault: Option<&CoproductFault>) -> Vec<(u32, u32, BigInt)> {
    (0..=n)
        .map(|i| {
            let mut c = binomial(n as i64, i as i64);
            if let Some(f) = fault.filter(|f| f.degree == n && f.index == i) {
                c += f.delta;
            }
            (i, n - i, c)
        })
        .collect()
}

pub fn poly_counit(n: u32) -> Scalar {
    if n == 0 {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

fn int(n: BigInt) -> Scalar {
    Scalar::from_rational(BigRational::from_integer(n))
}

/// `φ(Xⁱ, Xʲ) = i! αⁱ` when `i = j`, else 0.
pub fn phi_pairing(alpha: &Scalar, i: u32, j: u32) -> Scalar {
    if i != j {
        return Scalar::zero();
    }
    &int(factorial(i as i64)) * &alpha.pow(i as i64).expect("nonnegative power")
}

/// The scalars inducing `p, τ, u, v` (in that order).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolySigmaParams {
    pub s_p: Scalar,
    pub s_tau: Scalar,
    pub s_u: Scalar,
    pub s_v: Scalar,
}

impl PolySigmaParams {
    pub fn new(s_p: Scalar, s_tau: Scalar, s_u: Scalar, s_v: Scalar) -> Self {
        PolySigmaParams { s_p, s_tau, s_u, s_v }
    }

    pub fn from_ints(v: [i64; 4]) -> Self {
        let [p, t, u, w] = v.map(Scalar::from_int);
        Self::new(p, t, u, w)
    }

    /// Parses `s_p,s_tau,s_u,s_v`.
    pub fn parse(text: &str, field: Field) -> Result<Self, FieldError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(FieldError::Parse { text: text.into(), reason: "expected four comma-separated scalars".into() });
        }
        let mut vals = parts.iter().map(|p| parse_scalar(p.trim(), field)).collect::<Result<Vec<_>, _>>()?.into_iter();
        let mut next = || vals.next().expect("four values");
        Ok(Self::new(next(), next(), next(), next()))
    }
}

/// The closed-form sum for `σ(Xᵃ ⊗ Xᵇ, Xᶜ ⊗ Xᵈ)`; zero off the diagonal total degree.
pub fn closed_form_sigma(params: &PolySigmaParams, a: u32, b: u32, c: u32, d: u32) -> Scalar {
    if a + b != c + d {
        return Scalar::zero();
    }
    let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
    let pw = |x: &Scalar, e: i64| x.pow(e).expect("nonnegative power");
    let mut out = Scalar::zero();
    for i in 0.max(a - c)..=a.min(d) {
        let k = binomial(a, i)
            * binomial(b, d - i)
            * binomial(c, a - i)
            * binomial(d, i)
            * factorial(c - a + i)
            * factorial(a - i)
            * factorial(d - i)
            * factorial(i);
        let term = &(&pw(&params.s_p, a - i) * &pw(&params.s_tau, d - i)) * &(&pw(&params.s_u, i) * &pw(&params.s_v, c - a + i));
        out += &(&int(k) * &term);
    }
    out
}

/// `σ(a # h, b # g) = u(a₁, g₁) p(a₂, b₁) τ(h₁, g₂) v(h₂, b₂)` expanded through
/// the coproducts with `a = Xᵃ`, `h = Xᵇ`, `b = Xᶜ`, `g = Xᵈ`.
pub fn assembled_sigma_poly(params: &PolySigmaParams, a: u32, b: u32, c: u32, d: u32) -> Scalar {
    assembled_sigma_with(params, a, b, c, d, None)
}

pub fn assembled_sigma_with(params: &PolySigmaParams, a: u32, b: u32, c: u32, d: u32, fault: Option<&CoproductFault>) -> Scalar {
    let mut out = Scalar::zero();
    let da = poly_coproduct_with(a, fault);
    let dh = poly_coproduct_with(b, fault);
    let db = poly_coproduct_with(c, fault);
    let dg = poly_coproduct_with(d, fault);
    for (a1, a2, ca) in &da {
        for (g1, g2, cg) in &dg {
            let u = phi_pairing(&params.s_u, *a1, *g1);
            if u.is_zero() {
                continue;
            }
            for (h1, h2, ch) in &dh {
                let t = phi_pairing(&params.s_tau, *h1, *g2);
                if t.is_zero() {
                    continue;
                }
                for (b1, b2, cb) in &db {
                    let p = phi_pairing(&params.s_p, *a2, *b1);
                    let v = phi_pairing(&params.s_v, *h2, *b2);
                    if p.is_zero() || v.is_zero() {
                        continue;
                    }
                    let k = int(ca * cg * ch * cb);
                    out += &(&(&k * &u) * &(&(&p * &t) * &v));
                }
            }
        }
    }
    out
}

/// `Σ C Xⁱ ⊗ Xʲ` on k[X] ⊗ k[X], keyed by bidegree.
type Bivector = BTreeMap<(u32, u32), Scalar>;

fn bi_add(v: &mut Bivector, k: (u32, u32), c: Scalar) {
    let e = v.entry(k).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        v.remove(&k);
    }
}

/// (BR1)–(BR5) for the assembled σ on all monomials `Xᵃ ⊗ Xᵇ` with `a + b ≤ D`.
pub fn br_axioms_bounded(params: &PolySigmaParams, max_degree: u32) -> AxiomReport {
    br_axioms_bounded_with(params, max_degree, None)
}

pub fn br_axioms_bounded_with(params: &PolySigmaParams, max_degree: u32, fault: Option<&CoproductFault>) -> AxiomReport {
    let mons: Vec<(u32, u32)> = (0..=max_degree).flat_map(|n| (0..=n).map(move |a| (a, n - a))).collect();
    let labels: Vec<String> = mons.iter().map(|(a, b)| format!("X^{a}⊗X^{b}")).collect();
    let top = 2 * max_degree;
    let idx = |a: u32, b: u32| (a * (top + 1) + b) as usize;
    let side = ((top + 1) * (top + 1)) as usize;
    // σ on every pair of monomials up to bidegree 2D in each slot
    let table: Vec<Scalar> = (0..side * side)
        .into_par_iter()
        .map(|n| {
            let (x, y) = (n / side, n % side);
            let (a, b) = ((x as u32) / (top + 1), (x as u32) % (top + 1));
            let (c, d) = ((y as u32) / (top + 1), (y as u32) % (top + 1));
            if a + b > top || c + d > top {
                Scalar::zero()
            } else {
                assembled_sigma_with(params, a, b, c, d, fault)
            }
        })
        .collect();
    let sigma = |x: (u32, u32), y: (u32, u32)| &table[idx(x.0, x.1) * side + idx(y.0, y.1)];
    type Term = ((u32, u32), (u32, u32), Scalar);
    let delta = |(a, b): (u32, u32)| -> Vec<Term> {
        let mut out = vec![];
        for (a1, a2, c) in poly_coproduct_with(a, fault) {
            for (b1, b2, d) in poly_coproduct_with(b, fault) {
                out.push(((a1, b1), (a2, b2), int(&c * &d)));
            }
        }
        out
    };
    let mul = |x: (u32, u32), y: (u32, u32)| (x.0 + y.0, x.1 + y.1);
    let eps = |x: (u32, u32)| if x == (0, 0) { Scalar::one() } else { Scalar::zero() };
    let m = mons.len();
    let l = &labels[..];
    let mut r = AxiomReport::new();
    r.push(check_tuples("BR1", &[m, m, m], &[l, l, l], |t| {
        let (x, y, z) = (mons[t[0]], mons[t[1]], mons[t[2]]);
        let mut rhs = Scalar::zero();
        for (z1, z2, c) in delta(z) {
            rhs += &(&c * &(sigma(x, z1) * sigma(y, z2)));
        }
        *sigma(mul(x, y), z) == rhs
    }));
    r.push(check_tuples("BR2", &[m], &[l], |t| *sigma((0, 0), mons[t[0]]) == eps(mons[t[0]])));
    r.push(check_tuples("BR3", &[m, m, m], &[l, l, l], |t| {
        let (x, y, z) = (mons[t[0]], mons[t[1]], mons[t[2]]);
        let mut rhs = Scalar::zero();
        for (x1, x2, c) in delta(x) {
            rhs += &(&c * &(sigma(x1, z) * sigma(x2, y)));
        }
        *sigma(x, mul(y, z)) == rhs
    }));
    r.push(check_tuples("BR4", &[m], &[l], |t| *sigma(mons[t[0]], (0, 0)) == eps(mons[t[0]])));
    r.push(check_tuples("BR5", &[m, m], &[l, l], |t| {
        let (x, y) = (mons[t[0]], mons[t[1]]);
        let mut lhs = Bivector::new();
        let mut rhs = Bivector::new();
        for (x1, x2, c) in delta(x) {
            for (y1, y2, d) in delta(y) {
                let cd = &c * &d;
                bi_add(&mut lhs, mul(x2, y2), &cd * sigma(x1, y1));
                bi_add(&mut rhs, mul(y1, x1), &cd * sigma(x2, y2));
            }
        }
        lhs == rhs
    }));
    r.push(AxiomEntry::pass("completeness_unchecked").with_note("whether every braiding on k[X] ⊗ k[X] has this form is not verified"));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_coproducts() {
        let x = GradedVector::monomial(1);
        assert_eq!(poly_product(&x, &x), GradedVector::monomial(2));
        let one_x = GradedVector::from_terms([(0, Scalar::one()), (1, Scalar::one())]);
        let sq = poly_product(&one_x, &one_x);
        assert_eq!(sq.coeff(1), Scalar::from_int(2));
        assert_eq!(poly_product(&GradedVector::monomial(0), &one_x), one_x);
        assert_eq!(poly_coproduct(0), vec![(0, 0, BigInt::from(1))]);
        let d2: Vec<_> = poly_coproduct(2).into_iter().map(|(_, _, c)| c).collect();
        assert_eq!(d2, vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
        assert!(poly_counit(3).is_zero());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi_pairing(&Scalar::from_int(2), 1, 1), Scalar::from_int(2));
        assert!(phi_pairing(&Scalar::one(), 2, 3).is_zero());
        assert_eq!(phi_pairing(&Scalar::one(), 3, 3), Scalar::from_int(6));
    }

    #[test]
    fn low_degree_sigma() {
        let p = PolySigmaParams::from_ints([2, 3, 5, 7]);
        assert_eq!(closed_form_sigma(&p, 1, 0, 1, 0), Scalar::from_int(2));
        assert_eq!(closed_form_sigma(&p, 0, 1, 1, 0), Scalar::from_int(7));
        assert!(closed_form_sigma(&p, 1, 1, 1, 0).is_zero());
        assert_eq!(assembled_sigma_poly(&p, 0, 0, 0, 0), Scalar::one());
    }
}
