//! Braidings (coquasitriangular structures) on crossed products: pairings,
//! the BR / RS / LS / SBR axiom families, the compatibilities, assembly and
//! decomposition of σ, cyclic constructions and finite search.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::crossed::{CertifiedSystem, CrossedSystemData};
use crate::field::{Field, FieldError, Scalar};
use crate::hopf::{check_tuples, cyclic_group_algebra, AxiomEntry, AxiomReport, HopfData};
use crate::linalg::{kron, LinMap};

#[derive(Debug, Error)]
pub enum BraidingError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("quadruple is not certified:\n{0}")]
    QuadrupleNotCertified(AxiomReport),
    #[error("not a braiding:\n{0}")]
    NotABraiding(AxiomReport),
    #[error("{scalar} is not a root of unity of order dividing {n}")]
    NotRootOfUnity { scalar: String, n: usize },
    #[error("alpha is not symmetric at ({0}, {1})")]
    AlphaNotSymmetric(usize, usize),
    #[error("upsilon condition fails: {0}")]
    UpsilonConditionFailed(String),
    #[error("constructed table fails verification:\n{0}")]
    PostconditionFailed(AxiomReport),
    #[error("search space has {size} assignments, cap is {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },
    #[error("system has neither a trivial cocycle nor a trivial action")]
    ShapeNotSpecial,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A bilinear form `L ⊗ R → k` as a `left_dim × right_dim` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PairingData {
    pub left_dim: usize,
    pub right_dim: usize,
    entries: Vec<Scalar>,
}

impl PairingData {
    pub fn new(left_dim: usize, right_dim: usize, entries: Vec<Scalar>) -> Result<Self, BraidingError> {
        if entries.len() != left_dim * right_dim {
            return Err(BraidingError::Shape(format!("{} entries for a {left_dim}x{right_dim} pairing", entries.len())));
        }
        Ok(PairingData { left_dim, right_dim, entries })
    }

    pub fn zeros(left_dim: usize, right_dim: usize) -> Self {
        PairingData { left_dim, right_dim, entries: vec![Scalar::zero(); left_dim * right_dim] }
    }

    pub fn from_fn(left_dim: usize, right_dim: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let entries = (0..left_dim * right_dim).map(|n| f(n / right_dim, n % right_dim)).collect();
        PairingData { left_dim, right_dim, entries }
    }

    /// `ε ⊗ ε`.
    pub fn counit(left: &HopfData, right: &HopfData) -> Self {
        Self::from_fn(left.dim(), right.dim(), |i, j| left.eps_basis(i) * right.eps_basis(j))
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.right_dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.right_dim + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut out = Scalar::zero();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let e = self.get(i, j);
                if !e.is_zero() {
                    out += &(&(a * b) * e);
                }
            }
        }
        out
    }

    /// Value on a sparse first argument and a basis second argument.
    fn eval_terms_left(&self, x: &[(usize, Scalar)], j: usize) -> Scalar {
        let mut out = Scalar::zero();
        for (i, c) in x {
            out += &(c * self.get(*i, j));
        }
        out
    }

    fn eval_terms_right(&self, i: usize, y: &[(usize, Scalar)]) -> Scalar {
        let mut out = Scalar::zero();
        for (j, c) in y {
            out += &(c * self.get(i, *j));
        }
        out
    }

    fn check_shape(&self, name: &str, l: usize, r: usize) -> Result<(), BraidingError> {
        if self.left_dim != l || self.right_dim != r {
            return Err(BraidingError::Shape(format!("{name} is {}x{}, expected {l}x{r}", self.left_dim, self.right_dim)));
        }
        Ok(())
    }
}

/// The data `p, τ, u, v` of a braiding on a crossed product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidingQuadruple {
    pub p: PairingData,
    pub tau: PairingData,
    pub u: PairingData,
    pub v: PairingData,
}

impl BraidingQuadruple {
    pub fn counit(s: &CrossedSystemData) -> Self {
        BraidingQuadruple {
            p: PairingData::counit(&s.a, &s.a),
            tau: PairingData::counit(&s.h, &s.h),
            u: PairingData::counit(&s.a, &s.h),
            v: PairingData::counit(&s.h, &s.a),
        }
    }

    fn check_shapes(&self, s: &CrossedSystemData) -> Result<(), BraidingError> {
        let (da, dh) = (s.da(), s.dh());
        self.p.check_shape("p", da, da)?;
        self.tau.check_shape("tau", dh, dh)?;
        self.u.check_shape("u", da, dh)?;
        self.v.check_shape("v", dh, da)
    }
}

fn shape_report(msg: String) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.push(AxiomEntry::from_bool("shape", false).with_note(msg));
    r
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

/// `q(1, z) = ε(z)` and `q(x, 1) = ε(x)` style normalizations.
fn left_unit_entry(name: &str, l: &HopfData, r: &HopfData, q: &PairingData) -> AxiomEntry {
    let unit = sparse(l.unit());
    check_tuples(name, &[r.dim()], &[&r.labels[..]], |t| q.eval_terms_left(&unit, t[0]) == *r.eps_basis(t[0]))
}

fn right_unit_entry(name: &str, l: &HopfData, r: &HopfData, q: &PairingData) -> AxiomEntry {
    let unit = sparse(r.unit());
    check_tuples(name, &[l.dim()], &[&l.labels[..]], |t| q.eval_terms_right(t[0], &unit) == *l.eps_basis(t[0]))
}

/// `q(xy, z) = q(x, z₁) q(y, z₂)` for `q : L ⊗ R → k`.
fn multiplicative_left(name: &str, l: &HopfData, r: &HopfData, q: &PairingData) -> AxiomEntry {
    let (dl, dr) = (l.dim(), r.dim());
    let (ll, lr) = (&l.labels[..], &r.labels[..]);
    check_tuples(name, &[dl, dl, dr], &[ll, ll, lr], |t| {
        let lhs = q.eval_terms_left(l.mul_basis(t[0], t[1]), t[2]);
        let mut rhs = Scalar::zero();
        for (z1, z2, c) in r.delta_basis(t[2]) {
            rhs += &(c * &(q.get(t[0], *z1) * q.get(t[1], *z2)));
        }
        lhs == rhs
    })
}

/// `q(x, yz) = q(x₁, z) q(x₂, y)` for `q : L ⊗ R → k`.
fn multiplicative_right(name: &str, l: &HopfData, r: &HopfData, q: &PairingData) -> AxiomEntry {
    let (dl, dr) = (l.dim(), r.dim());
    let (ll, lr) = (&l.labels[..], &r.labels[..]);
    check_tuples(name, &[dl, dr, dr], &[ll, lr, lr], |t| {
        let lhs = q.eval_terms_right(t[0], r.mul_basis(t[1], t[2]));
        let mut rhs = Scalar::zero();
        for (x1, x2, c) in l.delta_basis(t[0]) {
            rhs += &(c * &(q.get(*x1, t[2]) * q.get(*x2, t[1])));
        }
        lhs == rhs
    })
}

/// `q(x₁, y₁) x₂ y₂ = y₁ x₁ q(x₂, y₂)` as an identity in H.
fn braided_commutativity(name: &str, h: &HopfData, q: &PairingData) -> AxiomEntry {
    let d = h.dim();
    let l = &h.labels[..];
    check_tuples(name, &[d, d], &[l, l], |t| {
        let mut lhs = vec![Scalar::zero(); d];
        let mut rhs = vec![Scalar::zero(); d];
        for (x1, x2, c) in h.delta_basis(t[0]) {
            for (y1, y2, e) in h.delta_basis(t[1]) {
                let ce = c * e;
                let q1 = q.get(*x1, *y1);
                if !q1.is_zero() {
                    for (k, m) in h.mul_basis(*x2, *y2) {
                        lhs[*k] += &(&(&ce * q1) * m);
                    }
                }
                let q2 = q.get(*x2, *y2);
                if !q2.is_zero() {
                    for (k, m) in h.mul_basis(*y1, *x1) {
                        rhs[*k] += &(&(&ce * q2) * m);
                    }
                }
            }
        }
        lhs == rhs
    })
}

/// (BR1)–(BR4) for `q : A ⊗ H → k`.
pub fn check_skew_pairing(a: &HopfData, h: &HopfData, q: &PairingData) -> AxiomReport {
    if let Err(e) = q.check_shape("pairing", a.dim(), h.dim()) {
        return shape_report(e.to_string());
    }
    let mut r = AxiomReport::new();
    r.push(multiplicative_left("BR1", a, h, q));
    r.push(left_unit_entry("BR2", a, h, q));
    r.push(multiplicative_right("BR3", a, h, q));
    r.push(right_unit_entry("BR4", a, h, q));
    r
}

/// (BR1)–(BR5) for `p : H ⊗ H → k`.
pub fn check_braiding(h: &HopfData, p: &PairingData) -> AxiomReport {
    let mut r = check_skew_pairing(h, h, p);
    if r.entry("shape").is_none() {
        r.push(braided_commutativity("BR5", h, p));
    }
    r
}

fn cocycle_columns(f: &LinMap) -> Vec<Vec<(usize, Scalar)>> {
    (0..f.cols()).map(|c| f.column_sparse(c)).collect()
}

/// (RS1)–(RS4): `u` is a `(p, f)`-right skew pairing on `(A, H)`.
pub fn check_pf_right_skew(a: &HopfData, h: &HopfData, f: &LinMap, p: &PairingData, u: &PairingData) -> AxiomReport {
    let (da, dh) = (a.dim(), h.dim());
    if let Err(e) = p.check_shape("p", da, da).and(u.check_shape("u", da, dh)) {
        return shape_report(e.to_string());
    }
    let fc = cocycle_columns(f);
    let (la, lh) = (&a.labels[..], &h.labels[..]);
    let mut r = AxiomReport::new();
    r.push(multiplicative_left("RS1", a, h, u));
    r.push(left_unit_entry("RS2", a, h, u));
    // u(a₁, g₂t₂) p(a₂, f(g₁, t₁)) = u(a₁, t) u(a₂, g)
    r.push(check_tuples("RS3", &[da, dh, dh], &[la, lh, lh], |t| {
        let (ai, g, tt) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (a1, a2, c) in a.delta_basis(ai) {
            rhs += &(c * &(u.get(*a1, tt) * u.get(*a2, g)));
            for (g1, g2, d) in h.delta_basis(g) {
                for (t1, t2, e) in h.delta_basis(tt) {
                    let pf = p.eval_terms_right(*a2, &fc[g1 * dh + t1]);
                    if pf.is_zero() {
                        continue;
                    }
                    let uu = u.eval_terms_right(*a1, h.mul_basis(*g2, *t2));
                    lhs += &(&(&(c * d) * e) * &(&uu * &pf));
                }
            }
        }
        lhs == rhs
    }));
    r.push(right_unit_entry("RS4", a, h, u));
    r
}

/// (LS1)–(LS4): `v` is a `(p, f)`-left skew pairing on `(H, A)`.
pub fn check_pf_left_skew(h: &HopfData, a: &HopfData, f: &LinMap, p: &PairingData, v: &PairingData) -> AxiomReport {
    let (da, dh) = (a.dim(), h.dim());
    if let Err(e) = p.check_shape("p", da, da).and(v.check_shape("v", dh, da)) {
        return shape_report(e.to_string());
    }
    let fc = cocycle_columns(f);
    let (la, lh) = (&a.labels[..], &h.labels[..]);
    let mut r = AxiomReport::new();
    // p(f(h₁, g₁), c₁) v(h₂g₂, c₂) = v(h, c₁) v(g, c₂)
    r.push(check_tuples("LS1", &[dh, dh, da], &[lh, lh, la], |t| {
        let (hi, g, ci) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (c1, c2, c) in a.delta_basis(ci) {
            rhs += &(c * &(v.get(hi, *c1) * v.get(g, *c2)));
            for (h1, h2, d) in h.delta_basis(hi) {
                for (g1, g2, e) in h.delta_basis(g) {
                    let pf = p.eval_terms_left(&fc[h1 * dh + g1], *c1);
                    if pf.is_zero() {
                        continue;
                    }
                    let vv = v.eval_terms_left(h.mul_basis(*h2, *g2), *c2);
                    lhs += &(&(&(c * d) * e) * &(&pf * &vv));
                }
            }
        }
        lhs == rhs
    }));
    r.push(left_unit_entry("LS2", h, a, v));
    r.push(multiplicative_right("LS3", h, a, v));
    r.push(right_unit_entry("LS4", h, a, v));
    r
}

/// (SBR1)–(SBR5): `τ` is a `(u, v)`-skew braiding on H.
pub fn check_uv_skew_braiding(h: &HopfData, f: &LinMap, u: &PairingData, v: &PairingData, tau: &PairingData) -> AxiomReport {
    let dh = h.dim();
    let da = f.rows();
    if let Err(e) = tau.check_shape("tau", dh, dh).and(u.check_shape("u", da, dh)).and(v.check_shape("v", dh, da)) {
        return shape_report(e.to_string());
    }
    let fc = cocycle_columns(f);
    let lh = &h.labels[..];
    let mut r = AxiomReport::new();
    // u(f(h₁, g₁), t₁) τ(h₂g₂, t₂) = τ(h, t₁) τ(g, t₂)
    r.push(check_tuples("SBR1", &[dh, dh, dh], &[lh, lh, lh], |t| {
        let (hi, g, tt) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (t1, t2, c) in h.delta_basis(tt) {
            rhs += &(c * &(tau.get(hi, *t1) * tau.get(g, *t2)));
            for (h1, h2, d) in h.delta_basis(hi) {
                for (g1, g2, e) in h.delta_basis(g) {
                    let uf = u.eval_terms_left(&fc[h1 * dh + g1], *t1);
                    if uf.is_zero() {
                        continue;
                    }
                    let tv = tau.eval_terms_left(h.mul_basis(*h2, *g2), *t2);
                    lhs += &(&(&(c * d) * e) * &(&uf * &tv));
                }
            }
        }
        lhs == rhs
    }));
    r.push(left_unit_entry("SBR2", h, h, tau));
    // τ(h₁, g₂t₂) v(h₂, f(g₁, t₁)) = τ(h₁, t) τ(h₂, g)
    r.push(check_tuples("SBR3", &[dh, dh, dh], &[lh, lh, lh], |t| {
        let (hi, g, tt) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (h1, h2, c) in h.delta_basis(hi) {
            rhs += &(c * &(tau.get(*h1, tt) * tau.get(*h2, g)));
            for (g1, g2, d) in h.delta_basis(g) {
                for (t1, t2, e) in h.delta_basis(tt) {
                    let vf = v.eval_terms_right(*h2, &fc[g1 * dh + t1]);
                    if vf.is_zero() {
                        continue;
                    }
                    let tv = tau.eval_terms_right(*h1, h.mul_basis(*g2, *t2));
                    lhs += &(&(&(c * d) * e) * &(&tv * &vf));
                }
            }
        }
        lhs == rhs
    }));
    r.push(right_unit_entry("SBR4", h, h, tau));
    r.push(braided_commutativity("SBR5", h, tau));
    r
}

/// The seven compatibilities between `p, τ, u, v`, `▷` and `f`, plus the two
/// forms obtained from the first two by applying `ε ⊗ id`.
pub fn check_compatibilities(s: &CrossedSystemData, q: &BraidingQuadruple) -> AxiomReport {
    if let Err(e) = q.check_shapes(s) {
        return shape_report(e.to_string());
    }
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let (la, lh) = (&a.labels[..], &h.labels[..]);
    let (p, tau, u, v) = (&q.p, &q.tau, &q.u, &q.v);
    let mut r = AxiomReport::new();

    // v(h₁, b₁)(h₂ ▷ b₂) ⊗ h₃ = b₁ ⊗ h₁ v(h₂, b₂)
    r.push(check_tuples("compat1", &[dh, da], &[lh, la], |t| {
        let mut lhs = vec![Scalar::zero(); da * dh];
        let mut rhs = vec![Scalar::zero(); da * dh];
        for (b1, b2, c) in a.delta_basis(t[1]) {
            for (legs, d) in h.delta_legs(t[0], 3) {
                let w = v.get(legs[0], *b1);
                if w.is_zero() {
                    continue;
                }
                let k = &(c * &d) * w;
                for (x, e) in s.act_basis(legs[1], *b2) {
                    lhs[x * dh + legs[2]] += &(&k * e);
                }
            }
            for (h1, h2, d) in h.delta_basis(t[0]) {
                rhs[b1 * dh + h1] += &(&(c * d) * v.get(*h2, *b2));
            }
        }
        lhs == rhs
    }));
    // (g₁ ▷ a₁) ⊗ g₂ u(a₂, g₃) = u(a₁, g₁) a₂ ⊗ g₂
    r.push(check_tuples("compat2", &[da, dh], &[la, lh], |t| {
        let mut lhs = vec![Scalar::zero(); da * dh];
        let mut rhs = vec![Scalar::zero(); da * dh];
        for (a1, a2, c) in a.delta_basis(t[0]) {
            for (legs, d) in h.delta_legs(t[1], 3) {
                let w = u.get(*a2, legs[2]);
                if w.is_zero() {
                    continue;
                }
                let k = &(c * &d) * w;
                for (x, e) in s.act_basis(legs[0], *a1) {
                    lhs[x * dh + legs[1]] += &(&k * e);
                }
            }
            for (g1, g2, d) in h.delta_basis(t[1]) {
                rhs[a2 * dh + g2] += &(&(c * d) * u.get(*a1, *g1));
            }
        }
        lhs == rhs
    }));
    // τ(h₁, g₁) f(h₂, g₂) = f(g₁, h₁) τ(h₂, g₂)
    r.push(check_tuples("compat3", &[dh, dh], &[lh, lh], |t| {
        let mut lhs = vec![Scalar::zero(); da];
        let mut rhs = vec![Scalar::zero(); da];
        for (h1, h2, c) in h.delta_basis(t[0]) {
            for (g1, g2, d) in h.delta_basis(t[1]) {
                let cd = c * d;
                for (x, e) in s.f_basis(*h2, *g2) {
                    lhs[*x] += &(&(&cd * tau.get(*h1, *g1)) * e);
                }
                for (x, e) in s.f_basis(*g1, *h1) {
                    rhs[*x] += &(&(&cd * tau.get(*h2, *g2)) * e);
                }
            }
        }
        lhs == rhs
    }));
    // u(a₁, g₂) p(a₂, g₁ ▷ c) = p(a₁, c) u(a₂, g)
    r.push(check_tuples("compat4", &[da, dh, da], &[la, lh, la], |t| {
        let (ai, g, ci) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (a1, a2, c) in a.delta_basis(ai) {
            rhs += &(c * &(p.get(*a1, ci) * u.get(*a2, g)));
            for (g1, g2, d) in h.delta_basis(g) {
                let w = u.get(*a1, *g2);
                if !w.is_zero() {
                    lhs += &(&(&(c * d) * w) * &p.eval_terms_right(*a2, s.act_basis(*g1, ci)));
                }
            }
        }
        lhs == rhs
    }));
    // τ(h₁, g₂) v(h₂, g₁ ▷ c) = v(h₁, c) τ(h₂, g)
    r.push(check_tuples("compat5", &[dh, dh, da], &[lh, lh, la], |t| {
        let (hi, g, ci) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (h1, h2, c) in h.delta_basis(hi) {
            rhs += &(c * &(v.get(*h1, ci) * tau.get(*h2, g)));
            for (g1, g2, d) in h.delta_basis(g) {
                let w = tau.get(*h1, *g2);
                if !w.is_zero() {
                    lhs += &(&(&(c * d) * w) * &v.eval_terms_right(*h2, s.act_basis(*g1, ci)));
                }
            }
        }
        lhs == rhs
    }));
    // p(h₁ ▷ b, c₁) v(h₂, c₂) = v(h, c₁) p(b, c₂)
    r.push(check_tuples("compat6", &[dh, da, da], &[lh, la, la], |t| {
        let (hi, b, ci) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (c1, c2, c) in a.delta_basis(ci) {
            rhs += &(c * &(v.get(hi, *c1) * p.get(b, *c2)));
            for (h1, h2, d) in h.delta_basis(hi) {
                let w = v.get(*h2, *c2);
                if !w.is_zero() {
                    lhs += &(&(&(c * d) * w) * &p.eval_terms_left(s.act_basis(*h1, b), *c1));
                }
            }
        }
        lhs == rhs
    }));
    // u(h₁ ▷ b, t₁) τ(h₂, t₂) = τ(h, t₁) u(b, t₂)
    r.push(check_tuples("compat7", &[dh, da, dh], &[lh, la, lh], |t| {
        let (hi, b, tt) = (t[0], t[1], t[2]);
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (t1, t2, c) in h.delta_basis(tt) {
            rhs += &(c * &(tau.get(hi, *t1) * u.get(b, *t2)));
            for (h1, h2, d) in h.delta_basis(hi) {
                let w = tau.get(*h2, *t2);
                if !w.is_zero() {
                    lhs += &(&(&(c * d) * w) * &u.eval_terms_left(s.act_basis(*h1, b), *t1));
                }
            }
        }
        lhs == rhs
    }));
    // v(h₁, b) h₂ = h₁ v(h₂, b)
    r.push(check_tuples("compat1_counit", &[dh, da], &[lh, la], |t| {
        let mut lhs = vec![Scalar::zero(); dh];
        let mut rhs = vec![Scalar::zero(); dh];
        for (h1, h2, c) in h.delta_basis(t[0]) {
            lhs[*h2] += &(c * v.get(*h1, t[1]));
            rhs[*h1] += &(c * v.get(*h2, t[1]));
        }
        lhs == rhs
    }));
    // g₁ u(a, g₂) = u(a, g₁) g₂
    r.push(check_tuples("compat2_counit", &[da, dh], &[la, lh], |t| {
        let mut lhs = vec![Scalar::zero(); dh];
        let mut rhs = vec![Scalar::zero(); dh];
        for (g1, g2, c) in h.delta_basis(t[1]) {
            lhs[*g1] += &(c * u.get(t[0], *g2));
            rhs[*g2] += &(c * u.get(t[0], *g1));
        }
        lhs == rhs
    }));
    r
}

/// All hypotheses on a quadruple: p a braiding on A, u and v skew pairings
/// relative to `(p, f)`, τ a `(u, v)`-skew braiding, and the compatibilities.
pub fn certify_quadruple(s: &CrossedSystemData, q: &BraidingQuadruple) -> AxiomReport {
    if let Err(e) = q.check_shapes(s) {
        return shape_report(e.to_string());
    }
    let mut r = check_braiding(&s.a, &q.p);
    r.extend(check_pf_right_skew(&s.a, &s.h, &s.cocycle, &q.p, &q.u));
    r.extend(check_pf_left_skew(&s.h, &s.a, &s.cocycle, &q.p, &q.v));
    r.extend(check_uv_skew_braiding(&s.h, &s.cocycle, &q.u, &q.v, &q.tau));
    r.extend(check_compatibilities(s, q));
    r
}

/// `σ(a # h, b # g) = u(a₁, g₁) p(a₂, b₁) τ(h₁, g₂) v(h₂, b₂)` with no checks.
pub fn assemble_sigma_unchecked(s: &CrossedSystemData, q: &BraidingQuadruple) -> Result<PairingData, BraidingError> {
    q.check_shapes(s)?;
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let n = da * dh;
    let entries: Vec<Scalar> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (x, y) = (idx / n, idx % n);
            let (ai, hi, bi, gi) = (x / dh, x % dh, y / dh, y % dh);
            let mut out = Scalar::zero();
            for (a1, a2, c1) in a.delta_basis(ai) {
                for (g1, g2, c2) in h.delta_basis(gi) {
                    let uu = q.u.get(*a1, *g1);
                    if uu.is_zero() {
                        continue;
                    }
                    for (h1, h2, c3) in h.delta_basis(hi) {
                        let tt = q.tau.get(*h1, *g2);
                        if tt.is_zero() {
                            continue;
                        }
                        for (b1, b2, c4) in a.delta_basis(bi) {
                            let k = &(&(c1 * c2) * c3) * c4;
                            out += &(&(&(&k * uu) * q.p.get(*a2, *b1)) * &(tt * q.v.get(*h2, *b2)));
                        }
                    }
                }
            }
            out
        })
        .collect();
    PairingData::new(n, n, entries)
}

/// σ from a certified quadruple; the result is verified as a braiding on A # H.
pub fn assemble_sigma(s: &CertifiedSystem, q: &BraidingQuadruple) -> Result<PairingData, BraidingError> {
    let cert = certify_quadruple(s, q);
    if !cert.all_passed() {
        return Err(BraidingError::QuadrupleNotCertified(cert));
    }
    let sigma = assemble_sigma_unchecked(s, q)?;
    let r = check_braiding(s.product(), &sigma);
    if !r.all_passed() {
        return Err(BraidingError::NotABraiding(r));
    }
    Ok(sigma)
}

/// Restricts a braiding on A # H to `p, τ, u, v` and certifies the pieces.
pub fn decompose_sigma(s: &CertifiedSystem, sigma: &PairingData) -> Result<BraidingQuadruple, BraidingError> {
    let r = check_braiding(s.product(), sigma);
    if !r.all_passed() {
        return Err(BraidingError::NotABraiding(r));
    }
    let q = restrict_sigma(s, sigma);
    let cert = certify_quadruple(s, &q);
    if !cert.all_passed() {
        return Err(BraidingError::QuadrupleNotCertified(cert));
    }
    Ok(q)
}

/// `p(a, b) = σ(a#1, b#1)`, `τ(h, g) = σ(1#h, 1#g)`, `u(a, h) = σ(a#1, 1#h)`, `v(h, a) = σ(1#h, a#1)`.
pub fn restrict_sigma(s: &CrossedSystemData, sigma: &PairingData) -> BraidingQuadruple {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let ia = |i: usize| kron(&a.basis_vec(i), h.unit());
    let ih = |j: usize| kron(a.unit(), &h.basis_vec(j));
    BraidingQuadruple {
        p: PairingData::from_fn(da, da, |i, j| sigma.eval(&ia(i), &ia(j))),
        tau: PairingData::from_fn(dh, dh, |i, j| sigma.eval(&ih(i), &ih(j))),
        u: PairingData::from_fn(da, dh, |i, j| sigma.eval(&ia(i), &ih(j))),
        v: PairingData::from_fn(dh, da, |i, j| sigma.eval(&ih(i), &ia(j))),
    }
}

fn is_root_of_unity(x: &Scalar, n: usize) -> bool {
    x.pow(n as i64).map(|y| y.is_one()).unwrap_or(false)
}

/// `p(tᵃ, tᵇ) = τ^{ab}` on `k[Cₙ]`.
pub fn cyclic_bicharacter_braiding(n: usize, tau: &Scalar) -> Result<PairingData, BraidingError> {
    if n == 0 || !is_root_of_unity(tau, n) {
        return Err(BraidingError::NotRootOfUnity { scalar: tau.to_string(), n });
    }
    let mut pows = vec![Scalar::one(); n * n];
    for k in 1..n * n {
        pows[k] = &pows[k - 1] * tau;
    }
    Ok(PairingData::from_fn(n, n, |a, b| pows[a * b].clone()))
}

/// `f(gⁱ, gʲ) = t^{α(i, j)}` as a map `k[Cₘ] ⊗ k[Cₘ] → k[Cₙ]`.
pub fn cyclic_cocycle(n: usize, m: usize, alpha: &[Vec<usize>]) -> LinMap {
    let mut f = LinMap::zeros(vec![m, m], vec![n]);
    for i in 0..m {
        for j in 0..m {
            f.set(alpha[i][j] % n, i * m + j, Scalar::one());
        }
    }
    f
}

/// `u(tᵃ, gᵇ) = υ^{ab} τ^{−α(1, b−1)}`, indices mod m, under the stated
/// existence conditions on α and υ. The table is then verified against RS1–RS4.
pub fn cyclic_pf_right_skew(n: usize, m: usize, alpha: &[Vec<usize>], tau: &Scalar, upsilon: &Scalar) -> Result<PairingData, BraidingError> {
    if m < 2 || alpha.len() != m || alpha.iter().any(|r| r.len() != m) {
        return Err(BraidingError::Shape(format!("alpha must be {m}x{m} with m >= 2")));
    }
    for i in 0..m {
        for j in 0..i {
            if alpha[i][j] != alpha[j][i] {
                return Err(BraidingError::AlphaNotSymmetric(j, i));
            }
        }
    }
    let p = cyclic_bicharacter_braiding(n, tau)?;
    if !is_root_of_unity(upsilon, n) {
        return Err(BraidingError::UpsilonConditionFailed(format!("{upsilon}^{n} != 1")));
    }
    let rhs = tau.pow(alpha[1][m - 1] as i64)?;
    if upsilon.pow(m as i64)? != rhs {
        return Err(BraidingError::UpsilonConditionFailed(format!("{upsilon}^{m} != {rhs}")));
    }
    let mut u = PairingData::zeros(n, m);
    for a in 0..n {
        for b in 0..m {
            let e = alpha[1][(b + m - 1) % m] as i64;
            u.set(a, b, &upsilon.pow((a * b) as i64)? * &tau.pow(-e)?);
        }
    }
    let field = match tau.order().max(upsilon.order()) {
        1 => Field::Rational,
        n => Field::cyclotomic(n),
    };
    let la = cyclic_group_algebra(n, "t", field);
    let lh = cyclic_group_algebra(m, "g", field);
    let r = check_pf_right_skew(&la, &lh, &cyclic_cocycle(n, m, alpha), &p, &u);
    if !r.all_passed() {
        return Err(BraidingError::PostconditionFailed(r));
    }
    Ok(u)
}

/// A product of powers of the unknowns with a coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub coeff: Scalar,
    pub powers: Vec<u32>,
}

impl Monomial {
    pub fn constant(c: Scalar) -> Self {
        Monomial { coeff: c, powers: vec![] }
    }

    /// `c · x_k^e`.
    pub fn var(c: Scalar, k: usize, e: u32) -> Self {
        let mut powers = vec![0; k + 1];
        powers[k] = e;
        Monomial { coeff: c, powers }
    }

    fn eval(&self, vals: &[Scalar]) -> Scalar {
        let mut out = self.coeff.clone();
        for (k, e) in self.powers.iter().enumerate().filter(|(_, e)| **e > 0) {
            out = &out * &vals[k].pow(*e as i64).expect("nonnegative power");
        }
        out
    }
}

/// A pairing whose entries are polynomials in finitely many unknowns.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingTemplate {
    pub left_dim: usize,
    pub right_dim: usize,
    pub entries: Vec<Vec<Monomial>>,
}

impl PairingTemplate {
    pub fn fixed(p: &PairingData) -> Self {
        let entries = p.entries().iter().map(|c| if c.is_zero() { vec![] } else { vec![Monomial::constant(c.clone())] }).collect();
        PairingTemplate { left_dim: p.left_dim, right_dim: p.right_dim, entries }
    }

    pub fn set(&mut self, i: usize, j: usize, e: Vec<Monomial>) {
        self.entries[i * self.right_dim + j] = e;
    }

    pub fn instantiate(&self, vals: &[Scalar]) -> PairingData {
        let entries = self.entries.iter().map(|e| e.iter().fold(Scalar::zero(), |acc, m| &acc + &m.eval(vals))).collect();
        PairingData { left_dim: self.left_dim, right_dim: self.right_dim, entries }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadrupleTemplate {
    pub unknowns: Vec<String>,
    pub p: PairingTemplate,
    pub tau: PairingTemplate,
    pub u: PairingTemplate,
    pub v: PairingTemplate,
}

impl QuadrupleTemplate {
    pub fn instantiate(&self, vals: &[Scalar]) -> BraidingQuadruple {
        BraidingQuadruple { p: self.p.instantiate(vals), tau: self.tau.instantiate(vals), u: self.u.instantiate(vals), v: self.v.instantiate(vals) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchHit {
    pub assignment: Vec<Scalar>,
    pub quadruple: BraidingQuadruple,
}

/// Every assignment of the unknowns from their candidate lists whose
/// quadruple certifies, in lexicographic order of candidate indices.
pub fn search_braidings(
    s: &CrossedSystemData,
    template: &QuadrupleTemplate,
    candidates: &[Vec<Scalar>],
    cap: u128,
) -> Result<Vec<SearchHit>, BraidingError> {
    if candidates.len() != template.unknowns.len() {
        return Err(BraidingError::Shape(format!("{} candidate lists for {} unknowns", candidates.len(), template.unknowns.len())));
    }
    let size: u128 = candidates.iter().map(|c| c.len() as u128).product();
    if size > cap {
        return Err(BraidingError::SearchSpaceTooLarge { size, cap });
    }
    let decode = |mut n: u128| {
        let mut vals = vec![Scalar::zero(); candidates.len()];
        for k in (0..candidates.len()).rev() {
            let len = candidates[k].len() as u128;
            vals[k] = candidates[k][(n % len) as usize].clone();
            n /= len;
        }
        vals
    };
    let hits: Vec<SearchHit> = (0..size)
        .into_par_iter()
        .filter_map(|n| {
            let assignment = decode(n);
            let quadruple = template.instantiate(&assignment);
            certify_quadruple(s, &quadruple).all_passed().then_some(SearchHit { assignment, quadruple })
        })
        .collect();
    Ok(hits)
}

/// Specialized forms for a trivial cocycle, a trivial action, or both.
pub fn corollary_checks(s: &CertifiedSystem, q: &BraidingQuadruple) -> Result<AxiomReport, BraidingError> {
    q.check_shapes(s)?;
    let (f_triv, act_triv) = (s.is_cocycle_trivial(), s.is_action_trivial());
    if !f_triv && !act_triv {
        return Err(BraidingError::ShapeNotSpecial);
    }
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let (la, lh) = (&a.labels[..], &h.labels[..]);
    let (p, tau, u, v) = (&q.p, &q.tau, &q.u, &q.v);
    let general = certify_quadruple(s, q);
    let compat = check_compatibilities(s, q);
    let mut r = AxiomReport::new();

    if f_triv {
        let sp_u = check_skew_pairing(a, h, u);
        let sp_v = check_skew_pairing(h, a, v);
        let br_tau = check_braiding(h, tau);
        let rs = check_pf_right_skew(a, h, &s.cocycle, p, u);
        let ls = check_pf_left_skew(h, a, &s.cocycle, p, v);
        let sbr = check_uv_skew_braiding(h, &s.cocycle, u, v, tau);
        let pairs = |x: &AxiomReport, y: &AxiomReport| x.entries.iter().zip(&y.entries).all(|(e, d)| e.passed == d.passed);
        r.push(AxiomEntry::from_bool("u_skew_pairing", sp_u.all_passed()));
        r.push(AxiomEntry::from_bool("v_skew_pairing", sp_v.all_passed()));
        r.push(AxiomEntry::from_bool("tau_braiding", br_tau.all_passed()));
        r.push(AxiomEntry::from_bool("right_skew_agrees", pairs(&rs, &sp_u)));
        r.push(AxiomEntry::from_bool("left_skew_agrees", pairs(&ls, &sp_v)));
        r.push(AxiomEntry::from_bool("skew_braiding_agrees", pairs(&sbr, &br_tau)));
        r.push(AxiomEntry::from_bool("compat3", compat.passed("compat3")));
        let special = check_braiding(a, p).all_passed()
            && sp_u.all_passed()
            && sp_v.all_passed()
            && br_tau.all_passed()
            && compat.entries.iter().filter(|e| e.axiom != "compat3").all(|e| e.passed);
        r.push(AxiomEntry::from_bool("theorem_agrees", special == general.all_passed()));
    }

    if act_triv && a.is_commutative() {
        let counit_pieces = *p == PairingData::counit(a, a) && *u == PairingData::counit(a, h) && *v == PairingData::counit(h, a);
        if counit_pieces {
            let sigma = assemble_sigma_unchecked(s, q)?;
            let n = da * dh;
            let expected = PairingData::from_fn(n, n, |x, y| &(a.eps_basis(x / dh) * a.eps_basis(y / dh)) * tau.get(x % dh, y % dh));
            r.push(AxiomEntry::from_bool("sigma_counit_form", sigma == expected));
            r.push(AxiomEntry::from_bool(
                "counit_form_agrees",
                (check_braiding(h, tau).all_passed() && compat.passed("compat3")) == general.all_passed(),
            ));
        }
    }

    if f_triv && act_triv {
        let t = tensor_compatibilities(a, h, q, la, lh);
        let cocomm = a.is_cocommutative() && h.is_cocommutative();
        let general_compat = compat.entries.iter().filter(|e| e.axiom != "compat3").all(|e| e.passed);
        r.push(AxiomEntry::from_bool("tensor_agrees", t.all_passed() == general_compat));
        if cocomm {
            r.push(AxiomEntry::from_bool("tensor_cocommutative_trivial", t.all_passed()));
        }
        r.extend(t);
    }
    Ok(r)
}

/// The compatibilities for a tensor product `A ⊗ H`.
fn tensor_compatibilities(a: &HopfData, h: &HopfData, q: &BraidingQuadruple, la: &[String], lh: &[String]) -> AxiomReport {
    let (da, dh) = (a.dim(), h.dim());
    let (p, tau, u, v) = (&q.p, &q.tau, &q.u, &q.v);
    let mut r = AxiomReport::new();
    // v(h₁, b₁) b₂ ⊗ h₂ = b₁ v(h₂, b₂) ⊗ h₁
    r.push(check_tuples("tensor_compat1", &[dh, da], &[lh, la], |t| {
        let mut lhs = vec![Scalar::zero(); da * dh];
        let mut rhs = vec![Scalar::zero(); da * dh];
        for (b1, b2, c) in a.delta_basis(t[1]) {
            for (h1, h2, d) in h.delta_basis(t[0]) {
                let cd = c * d;
                lhs[b2 * dh + h2] += &(&cd * v.get(*h1, *b1));
                rhs[b1 * dh + h1] += &(&cd * v.get(*h2, *b2));
            }
        }
        lhs == rhs
    }));
    // a₁ ⊗ g₁ u(a₂, g₂) = a₂ ⊗ u(a₁, g₁) g₂
    r.push(check_tuples("tensor_compat2", &[da, dh], &[la, lh], |t| {
        let mut lhs = vec![Scalar::zero(); da * dh];
        let mut rhs = vec![Scalar::zero(); da * dh];
        for (a1, a2, c) in a.delta_basis(t[0]) {
            for (g1, g2, d) in h.delta_basis(t[1]) {
                let cd = c * d;
                lhs[a1 * dh + g1] += &(&cd * u.get(*a2, *g2));
                rhs[a2 * dh + g2] += &(&cd * u.get(*a1, *g1));
            }
        }
        lhs == rhs
    }));
    // u(a₁, g) p(a₂, c) = p(a₁, c) u(a₂, g)
    r.push(check_tuples("tensor_compat3", &[da, dh, da], &[la, lh, la], |t| {
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (a1, a2, c) in a.delta_basis(t[0]) {
            lhs += &(c * &(u.get(*a1, t[1]) * p.get(*a2, t[2])));
            rhs += &(c * &(p.get(*a1, t[2]) * u.get(*a2, t[1])));
        }
        lhs == rhs
    }));
    // τ(h₁, g) v(h₂, c) = v(h₁, c) τ(h₂, g)
    r.push(check_tuples("tensor_compat4", &[dh, dh, da], &[lh, lh, la], |t| {
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (h1, h2, c) in h.delta_basis(t[0]) {
            lhs += &(c * &(tau.get(*h1, t[1]) * v.get(*h2, t[2])));
            rhs += &(c * &(v.get(*h1, t[2]) * tau.get(*h2, t[1])));
        }
        lhs == rhs
    }));
    // p(b, c₁) v(h, c₂) = v(h, c₁) p(b, c₂)
    r.push(check_tuples("tensor_compat5", &[da, da, dh], &[la, la, lh], |t| {
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (c1, c2, c) in a.delta_basis(t[1]) {
            lhs += &(c * &(p.get(t[0], *c1) * v.get(t[2], *c2)));
            rhs += &(c * &(v.get(t[2], *c1) * p.get(t[0], *c2)));
        }
        lhs == rhs
    }));
    // u(b, t₁) τ(h, t₂) = τ(h, t₁) u(b, t₂)
    r.push(check_tuples("tensor_compat6", &[da, dh, dh], &[la, lh, lh], |t| {
        let mut lhs = Scalar::zero();
        let mut rhs = Scalar::zero();
        for (t1, t2, c) in h.delta_basis(t[1]) {
            lhs += &(c * &(u.get(t[0], *t1) * tau.get(t[2], *t2)));
            rhs += &(c * &(tau.get(t[2], *t1) * u.get(t[0], *t2)));
        }
        lhs == rhs
    }));
    r
}

/// Tab-separated table with basis labels on the first row and column.
pub fn sigma_tsv(sigma: &PairingData, row_labels: &[String], col_labels: &[String]) -> String {
    let mut out = String::from("sigma");
    for l in col_labels {
        out.push('\t');
        out.push_str(l);
    }
    out.push('\n');
    for (i, l) in row_labels.iter().enumerate() {
        out.push_str(l);
        for j in 0..sigma.right_dim {
            out.push('\t');
            out.push_str(&sigma.get(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{zeta, Field};
    use crate::hopf::cyclic_group_algebra;

    #[test]
    fn roots_of_unity() {
        assert!(is_root_of_unity(&zeta(6, 2), 3));
        assert!(!is_root_of_unity(&zeta(6, 1), 3));
        assert!(!is_root_of_unity(&Scalar::zero(), 2));
    }

    #[test]
    fn pairing_shape_and_eval() {
        assert!(PairingData::new(2, 2, vec![Scalar::one(); 3]).is_err());
        let p = PairingData::from_fn(2, 3, |i, j| Scalar::from_int((i * 3 + j) as i64));
        assert_eq!(p.get(1, 2), &Scalar::from_int(5));
        let x = [Scalar::one(), Scalar::from_int(2)];
        let y = [Scalar::zero(), Scalar::one(), Scalar::one()];
        // (e0 + 2 e1, e1 + e2) = 1 + 2 + 2·(4 + 5)
        assert_eq!(p.eval(&x, &y), Scalar::from_int(21));
    }

    #[test]
    fn counit_pairing_is_a_braiding_of_group_algebras() {
        let c3 = cyclic_group_algebra(3, "t", Field::Rational);
        let p = PairingData::counit(&c3, &c3);
        assert!(p.entries().iter().all(Scalar::is_one));
        assert!(check_braiding(&c3, &p).all_passed());
    }

    #[test]
    fn template_instantiation() {
        let mut t = PairingTemplate::fixed(&PairingData::zeros(1, 2));
        t.set(0, 1, vec![Monomial::var(Scalar::from_int(3), 1, 2), Monomial::constant(Scalar::one())]);
        let p = t.instantiate(&[Scalar::from_int(7), Scalar::from_int(2)]);
        assert!(p.get(0, 0).is_zero());
        assert_eq!(p.get(0, 1), &Scalar::from_int(13));
    }

    #[test]
    fn cyclic_cocycle_layout() {
        let mut alpha = vec![vec![0; 2]; 2];
        alpha[1][1] = 1;
        let f = cyclic_cocycle(2, 2, &alpha);
        assert!(f.get(1, 3).is_one() && f.get(0, 3).is_zero());
        assert!(f.get(0, 1).is_one());
    }
}
