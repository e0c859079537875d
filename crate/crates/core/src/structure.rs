//! Integrals, semisimplicity, commutativity and involutivity of crossed products.

use serde::Serialize;
use thiserror::Error;

use crate::crossed::CertifiedSystem;
use crate::field::Scalar;
use crate::hopf::{antipode_squared, check_tuples, AxiomEntry, AxiomReport, HopfData};
use crate::linalg::{axpy, kron, solve, FinVector, LinMap};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StructureError {
    #[error("not an integral: {0}")]
    NotAnIntegral(String),
    #[error("H is not cocommutative")]
    NotCocommutative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("unknown side {s:?}")),
        }
    }
}

/// Full solution space of `t x = ε(x) t` (right) or `x t = ε(x) t` (left).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralSpace {
    pub side: Side,
    pub basis: Vec<FinVector>,
    pub epsilon_values: Vec<Scalar>,
}

impl IntegralSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn side_product(h: &HopfData, t: &[Scalar], x: &[Scalar], side: Side) -> Vec<Scalar> {
    match side {
        Side::Right => h.mul(t, x),
        Side::Left => h.mul(x, t),
    }
}

/// Exact check of the integral identity against every basis element.
pub fn is_integral(h: &HopfData, t: &[Scalar], side: Side) -> bool {
    (0..h.dim()).all(|x| {
        let mut lhs = side_product(h, t, &h.basis_vec(x), side);
        axpy(&mut lhs, &-h.eps_basis(x), t);
        lhs.iter().all(Scalar::is_zero)
    })
}

/// Scales so the first nonzero coordinate is 1.
fn normalize(v: FinVector) -> FinVector {
    match v.coords.iter().find(|c| !c.is_zero()) {
        Some(lead) => v.scale(&lead.inverse().expect("nonzero")),
        None => v,
    }
}

pub fn integrals(h: &HopfData, side: Side) -> IntegralSpace {
    let d = h.dim();
    // row (x, out), column i: coefficient of t_i in (t·x − ε(x)t)[out]
    let mut m = LinMap::zeros(vec![d], vec![d, d]);
    for i in 0..d {
        for x in 0..d {
            let mut col = match side {
                Side::Right => h.mul(&h.basis_vec(i), &h.basis_vec(x)),
                Side::Left => h.mul(&h.basis_vec(x), &h.basis_vec(i)),
            };
            col[i] = &col[i] - h.eps_basis(x);
            for (out, c) in col.into_iter().enumerate() {
                m.set(x * d + out, i, c);
            }
        }
    }
    let sol = solve(&m, None).expect("homogeneous system");
    let basis: Vec<FinVector> = sol.nullspace_basis.into_iter().map(normalize).collect();
    let epsilon_values = basis.iter().map(|t| h.eps(&t.coords)).collect();
    IntegralSpace { side, basis, epsilon_values }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Semisimplicity {
    pub semisimple: bool,
    pub witness: Option<FinVector>,
}

/// Maschke: semisimple iff some right integral has nonzero counit.
pub fn is_semisimple(h: &HopfData) -> Semisimplicity {
    let space = integrals(h, Side::Right);
    let witness = space.basis.iter().zip(&space.epsilon_values).find(|(_, e)| !e.is_zero()).map(|(t, _)| t.clone());
    Semisimplicity { semisimple: witness.is_some(), witness: witness.or_else(|| space.basis.first().cloned()) }
}

/// `x_A # x_H` for right integrals `x_A` of A and `x_H` of H.
pub fn product_integral(s: &CertifiedSystem, x_a: &FinVector, x_h: &FinVector) -> Result<FinVector, StructureError> {
    if x_a.dim() != s.da() || !is_integral(&s.a, &x_a.coords, Side::Right) {
        return Err(StructureError::NotAnIntegral("x_A is not a right integral of A".into()));
    }
    if x_h.dim() != s.dh() || !is_integral(&s.h, &x_h.coords, Side::Right) {
        return Err(StructureError::NotAnIntegral("x_H is not a right integral of H".into()));
    }
    let t = x_a.tensor(x_h);
    if !is_integral(s.product(), &t.coords, Side::Right) {
        return Err(StructureError::NotAnIntegral("x_A # x_H is not a right integral of A # H".into()));
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectedIntegral {
    pub side: Side,
    pub vector: FinVector,
    /// The zero vector is a valid but degenerate integral.
    pub is_zero: bool,
}

/// Right: `(ε_A ⊗ id) t` in H. Left: `(id ⊗ ε_H) t` in A.
pub fn project_integral(s: &CertifiedSystem, t: &FinVector, side: Side) -> Result<ProjectedIntegral, StructureError> {
    if t.dim() != s.product_dim() || !is_integral(s.product(), &t.coords, side) {
        return Err(StructureError::NotAnIntegral(format!("t is not a {side:?} integral of A # H").to_lowercase()));
    }
    let (da, dh) = (s.da(), s.dh());
    let (target, out) = match side {
        Side::Right => {
            let mut z = vec![Scalar::zero(); dh];
            for i in 0..da {
                let e = s.a.eps_basis(i);
                if e.is_zero() {
                    continue;
                }
                for j in 0..dh {
                    z[j] += &(e * &t.coords[s.index(i, j)]);
                }
            }
            (&s.h, z)
        }
        Side::Left => {
            let mut z = vec![Scalar::zero(); da];
            for j in 0..dh {
                let e = s.h.eps_basis(j);
                if e.is_zero() {
                    continue;
                }
                for i in 0..da {
                    z[i] += &(e * &t.coords[s.index(i, j)]);
                }
            }
            (&s.a, z)
        }
    };
    if !is_integral(target, &out, side) {
        return Err(StructureError::NotAnIntegral("projection is not an integral".into()));
    }
    let vector = FinVector::new(out);
    Ok(ProjectedIntegral { side, is_zero: vector.is_zero(), vector })
}

pub fn is_commutative(h: &HopfData) -> bool {
    h.is_commutative()
}

pub fn is_cocommutative(h: &HopfData) -> bool {
    h.is_cocommutative()
}

/// The four conditions whose conjunction is equivalent to commutativity of A # H.
pub fn commutativity_criterion(s: &CertifiedSystem) -> AxiomReport {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let (la, lh) = (&a.labels[..], &h.labels[..]);
    let mut r = AxiomReport::new();
    r.push(check_tuples("a_commutative", &[da, da], &[la, la], |t| a.mul_basis(t[0], t[1]) == a.mul_basis(t[1], t[0])));
    r.push(check_tuples("h_commutative", &[dh, dh], &[lh, lh], |t| h.mul_basis(t[0], t[1]) == h.mul_basis(t[1], t[0])));
    r.push(check_tuples("action_trivial", &[dh, da], &[lh, la], |t| {
        let mut want = vec![Scalar::zero(); da];
        want[t[1]] = h.eps_basis(t[0]).clone();
        s.act_on(t[0], &a.basis_vec(t[1])) == want
    }));
    r.push(check_tuples("cocycle_symmetric", &[dh, dh], &[lh, lh], |t| s.f_vec(t[0], t[1]) == s.f_vec(t[1], t[0])));
    r
}

pub fn is_involutory(h: &HopfData) -> bool {
    antipode_squared(h).same_matrix(&h.identity_map())
}

/// For cocommutative H: A involutory and `g₁ ▷ f(S(g₂), g₃) = f(g₁, S(g₂))`.
pub fn involutory_criterion_cocomm(s: &CertifiedSystem) -> Result<AxiomReport, StructureError> {
    let (a, h) = (&s.a, &s.h);
    if !h.is_cocommutative() {
        return Err(StructureError::NotCocommutative);
    }
    let da = s.da();
    let mut r = AxiomReport::new();
    r.push(AxiomEntry::from_bool("a_involutory", is_involutory(a)));
    r.push(check_tuples("involutory_identity", &[s.dh()], &[&h.labels[..]], |t| {
        let mut lhs = vec![Scalar::zero(); da];
        for (l, c) in h.delta_legs(t[0], 3) {
            let f = s.f(&h.s(&h.basis_vec(l[1])), &h.basis_vec(l[2]));
            axpy(&mut lhs, &c, &s.act(&h.basis_vec(l[0]), &f));
        }
        let mut rhs = vec![Scalar::zero(); da];
        for (x1, x2, c) in h.delta_basis(t[0]) {
            axpy(&mut rhs, c, &s.f(&h.basis_vec(*x1), &h.s(&h.basis_vec(*x2))));
        }
        lhs == rhs
    }));
    Ok(r)
}

/// `x_A ⊗ x_H` as a plain vector; exposed for callers building integrals by hand.
pub fn tensor_vector(x: &FinVector, y: &FinVector) -> FinVector {
    FinVector::new(kron(&x.coords, &y.coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::{cyclic_group_algebra, sweedler_h4};

    #[test]
    fn h4_integrals() {
        let h = sweedler_h4(Field::Rational).unwrap();
        let r = integrals(&h, Side::Right);
        assert_eq!(r.basis, vec![FinVector::from_ints(&[0, 0, 1, -1])]);
        assert!(r.epsilon_values[0].is_zero());
        let l = integrals(&h, Side::Left);
        assert_eq!(l.basis, vec![FinVector::from_ints(&[0, 0, 1, 1])]);
        assert!(!is_semisimple(&h).semisimple);
        assert!(!is_involutory(&h));
    }

    #[test]
    fn group_sum_integral() {
        let h = cyclic_group_algebra(3, "a", Field::Cyclotomic { n: 3 });
        let r = integrals(&h, Side::Right);
        assert_eq!(r.basis, vec![FinVector::from_ints(&[1, 1, 1])]);
        assert_eq!(r.epsilon_values[0], Scalar::from_int(3));
        let s = is_semisimple(&h);
        assert!(s.semisimple);
        assert!(is_involutory(&h));
    }
}
