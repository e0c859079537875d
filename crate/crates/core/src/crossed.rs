//! Crossed systems `(A, H, ▷, f)` and the crossed product Hopf algebra
//! `A # H`, with factorization, lazy-cocycle transforms, coboundaries and
//! the two universal maps.
//!
//! The product basis is `a_i # h_j` at index `i * dim(H) + j`.

use std::ops::Deref;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::field::Scalar;
use crate::hopf::{
    self, check_tuples, common_field, map_predicates, product_labels, tensor_hopf, verify_hopf, AlgebraData, AxiomEntry, AxiomReport, CoalgebraData,
    HopfData, HopfError, MapKind,
};
use crate::linalg::{self, axpy, invert, kron, span_coordinates, FinVector, LinAlgError, LinMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossedError {
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("crossed system is not certified:\n{0}")]
    SystemNotCertified(AxiomReport),
    #[error("group crossed system axiom fails: {0}")]
    GroupAxiomFailure(String),
    #[error("H is not cocommutative")]
    NotCocommutative,
    #[error("not a unitary coalgebra map: {0}")]
    NotCoalgebraMap(String),
    #[error("lazy cocycle check failed:\n{0}")]
    LazyCheckFailed(AxiomReport),
    #[error("multiplication map A ⊗ H → E is not bijective")]
    NotBijective,
    #[error("A is not normal in E: {0}")]
    NotNormal(String),
    #[error("recovered right action is not trivial at {0}")]
    LeftActionNotTrivial(String),
    #[error("image of H is not a subcoalgebra containing 1: {0}")]
    NotSubcoalgebra(String),
    #[error("image of A is not a Hopf subalgebra: {0}")]
    NotHopfSubalgebra(String),
    #[error("embedding is not injective: {0}")]
    NotInjective(String),
    #[error("precondition {condition} fails at {witness}")]
    PreconditionFailed { condition: String, witness: String },
    #[error("constructed map fails verification:\n{0}")]
    MapCheckFailed(AxiomReport),
}

type Terms = Vec<(usize, Scalar)>;

/// A candidate crossed system; nothing is assumed about the maps.
#[derive(Debug, Clone)]
pub struct CrossedSystemData {
    pub a: HopfData,
    pub h: HopfData,
    /// `▷ : H ⊗ A → A`
    pub act: LinMap,
    /// `f : H ⊗ H → A`
    pub cocycle: LinMap,
    act_table: Vec<Terms>,
    f_table: Vec<Terms>,
}

impl PartialEq for CrossedSystemData {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.h == other.h && self.act.same_matrix(&other.act) && self.cocycle.same_matrix(&other.cocycle)
    }
}

impl CrossedSystemData {
    pub fn new(a: HopfData, h: HopfData, act: LinMap, cocycle: LinMap) -> Result<Self, CrossedError> {
        let (da, dh) = (a.dim(), h.dim());
        common_field(a.field, h.field)?;
        if act.rows() != da || act.cols() != dh * da {
            return Err(LinAlgError::ShapeMismatch(format!("action is {}x{}, expected {da}x{}", act.rows(), act.cols(), dh * da)).into());
        }
        if cocycle.rows() != da || cocycle.cols() != dh * dh {
            return Err(LinAlgError::ShapeMismatch(format!("cocycle is {}x{}, expected {da}x{}", cocycle.rows(), cocycle.cols(), dh * dh)).into());
        }
        let act = act.reshape(vec![dh, da], vec![da])?;
        let cocycle = cocycle.reshape(vec![dh, dh], vec![da])?;
        let act_table = (0..dh * da).map(|c| act.column_sparse(c)).collect();
        let f_table = (0..dh * dh).map(|c| cocycle.column_sparse(c)).collect();
        Ok(CrossedSystemData { a, h, act, cocycle, act_table, f_table })
    }

    /// `▷ = ε_H ⊗ id_A`.
    pub fn trivial_action(a: &HopfData, h: &HopfData) -> LinMap {
        let (da, dh) = (a.dim(), h.dim());
        let mut m = LinMap::zeros(vec![dh, da], vec![da]);
        for x in 0..dh {
            let e = h.eps_basis(x);
            if !e.is_zero() {
                for i in 0..da {
                    m.set(i, x * da + i, e.clone());
                }
            }
        }
        m
    }

    /// `f(h, g) = ε(h) ε(g) 1_A`.
    pub fn trivial_cocycle(a: &HopfData, h: &HopfData) -> LinMap {
        let (da, dh) = (a.dim(), h.dim());
        let mut m = LinMap::zeros(vec![dh, dh], vec![da]);
        for x in 0..dh {
            for y in 0..dh {
                let e = h.eps_basis(x) * h.eps_basis(y);
                for (i, u) in a.unit().iter().enumerate() {
                    if !u.is_zero() && !e.is_zero() {
                        m.set(i, x * dh + y, u * &e);
                    }
                }
            }
        }
        m
    }

    /// The tensor-product system.
    pub fn trivial(a: HopfData, h: HopfData) -> Result<Self, CrossedError> {
        let act = Self::trivial_action(&a, &h);
        let f = Self::trivial_cocycle(&a, &h);
        Self::new(a, h, act, f)
    }

    pub fn da(&self) -> usize {
        self.a.dim()
    }

    pub fn dh(&self) -> usize {
        self.h.dim()
    }

    pub fn act_basis(&self, x: usize, i: usize) -> &[(usize, Scalar)] {
        &self.act_table[x * self.da() + i]
    }

    pub fn f_basis(&self, x: usize, y: usize) -> &[(usize, Scalar)] {
        &self.f_table[x * self.dh() + y]
    }

    /// `e_x ▷ a` for a basis element of H.
    pub fn act_on(&self, x: usize, a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.da()];
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, d) in self.act_basis(x, i) {
                out[*k] += &(c * d);
            }
        }
        out
    }

    /// `h ▷ a` for arbitrary vectors.
    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.da()];
        for (x, c) in h.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.act_on(x, a));
            }
        }
        out
    }

    pub fn f_vec(&self, x: usize, y: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.da()];
        for (k, c) in self.f_basis(x, y) {
            out[*k] = c.clone();
        }
        out
    }

    /// `f(h, g)` for arbitrary vectors.
    pub fn f(&self, h: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.da()];
        for (x, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (y, d) in g.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let cd = c * d;
                for (k, e) in self.f_basis(x, y) {
                    out[*k] += &(&cd * e);
                }
            }
        }
        out
    }

    pub fn product_dim(&self) -> usize {
        self.da() * self.dh()
    }

    pub fn is_action_trivial(&self) -> bool {
        self.act.same_matrix(&Self::trivial_action(&self.a, &self.h))
    }

    pub fn is_cocycle_trivial(&self) -> bool {
        self.cocycle.same_matrix(&Self::trivial_cocycle(&self.a, &self.h))
    }
}

/// A crossed system that passed [`verify_crossed_system`].
#[derive(Debug, Clone)]
pub struct CertifiedSystem {
    data: CrossedSystemData,
    product: OnceLock<HopfData>,
}

impl PartialEq for CertifiedSystem {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Deref for CertifiedSystem {
    type Target = CrossedSystemData;
    fn deref(&self) -> &CrossedSystemData {
        &self.data
    }
}

impl CertifiedSystem {
    pub fn certify(data: CrossedSystemData) -> Result<Self, CrossedError> {
        let report = verify_crossed_system(&data);
        if !report.all_passed() {
            return Err(CrossedError::SystemNotCertified(report));
        }
        Ok(CertifiedSystem { data, product: OnceLock::new() })
    }

    pub fn data(&self) -> &CrossedSystemData {
        &self.data
    }

    pub fn into_data(self) -> CrossedSystemData {
        self.data
    }

    /// The crossed product, built once.
    pub fn product(&self) -> &HopfData {
        self.product.get_or_init(|| build_product_unchecked(&self.data).expect("certified system builds"))
    }

    pub fn index(&self, a: usize, h: usize) -> usize {
        a * self.dh() + h
    }
}

/// Checks every condition of a crossed system on basis tuples.
pub fn verify_crossed_system(s: &CrossedSystemData) -> AxiomReport {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let (la, lh) = (&a.labels[..], &h.labels[..]);
    let mut r = AxiomReport::new();

    r.push(check_tuples("action_coalgebra_map", &[dh, da], &[lh, la], |t| {
        let v = s.act_on(t[0], &a.basis_vec(t[1]));
        let lhs = a.coalgebra.delta(&v);
        let mut rhs = vec![Scalar::zero(); da * da];
        for (h1, h2, x) in h.delta_basis(t[0]) {
            for (a1, a2, y) in a.delta_basis(t[1]) {
                let l = s.act_on(*h1, &a.basis_vec(*a1));
                let rr = s.act_on(*h2, &a.basis_vec(*a2));
                axpy(&mut rhs, &(x * y), &kron(&l, &rr));
            }
        }
        lhs == rhs && a.eps(&v) == h.eps_basis(t[0]) * a.eps_basis(t[1])
    }));

    r.push(check_tuples("cocycle_coalgebra_map", &[dh, dh], &[lh, lh], |t| {
        let v = s.f_vec(t[0], t[1]);
        let lhs = a.coalgebra.delta(&v);
        let mut rhs = vec![Scalar::zero(); da * da];
        for (x1, x2, c) in h.delta_basis(t[0]) {
            for (y1, y2, d) in h.delta_basis(t[1]) {
                axpy(&mut rhs, &(c * d), &kron(&s.f_vec(*x1, *y1), &s.f_vec(*x2, *y2)));
            }
        }
        lhs == rhs && a.eps(&v) == h.eps_basis(t[0]) * h.eps_basis(t[1])
    }));

    let one_a = a.unit().to_vec();
    let one_h = h.unit().to_vec();
    r.push(check_tuples("action_unit", &[dh], &[lh], |t| s.act_on(t[0], &one_a) == one_a.iter().map(|u| u * h.eps_basis(t[0])).collect::<Vec<_>>()));
    r.push(check_tuples("unit_action", &[da], &[la], |t| s.act(&one_h, &a.basis_vec(t[0])) == a.basis_vec(t[0])));
    r.push(check_tuples("action_multiplicative", &[dh, da, da], &[lh, la, la], |t| {
        let lhs = s.act_on(t[0], &a.mul(&a.basis_vec(t[1]), &a.basis_vec(t[2])));
        let mut rhs = vec![Scalar::zero(); da];
        for (h1, h2, c) in h.delta_basis(t[0]) {
            let p = a.mul(&s.act_on(*h1, &a.basis_vec(t[1])), &s.act_on(*h2, &a.basis_vec(t[2])));
            axpy(&mut rhs, c, &p);
        }
        lhs == rhs
    }));
    r.push(check_tuples("cocycle_normalized", &[dh], &[lh], |t| {
        let expect: Vec<Scalar> = one_a.iter().map(|u| u * h.eps_basis(t[0])).collect();
        let x = h.basis_vec(t[0]);
        s.f(&x, &one_h) == expect && s.f(&one_h, &x) == expect
    }));

    r.push(check_tuples("twisted_module", &[dh, dh, da], &[lh, lh, la], |t| {
        let (g, k, ai) = (t[0], t[1], t[2]);
        let av = a.basis_vec(ai);
        let mut lhs = vec![Scalar::zero(); da];
        let mut rhs = vec![Scalar::zero(); da];
        for (g1, g2, c) in h.delta_basis(g) {
            for (k1, k2, d) in h.delta_basis(k) {
                let cd = c * d;
                let inner = s.act_on(*g1, &s.act_on(*k1, &av));
                axpy(&mut lhs, &cd, &a.mul(&inner, &s.f_vec(*g2, *k2)));
                let gk = h.mul(&h.basis_vec(*g2), &h.basis_vec(*k2));
                axpy(&mut rhs, &cd, &a.mul(&s.f_vec(*g1, *k1), &s.act(&gk, &av)));
            }
        }
        lhs == rhs
    }));

    r.push(check_tuples("cocycle", &[dh, dh, dh], &[lh, lh, lh], |t| {
        let (g, k, l) = (t[0], t[1], t[2]);
        let mut lhs = vec![Scalar::zero(); da];
        let mut rhs = vec![Scalar::zero(); da];
        for (g1, g2, c) in h.delta_basis(g) {
            for (k1, k2, d) in h.delta_basis(k) {
                let cd = c * d;
                for (l1, l2, e) in h.delta_basis(l) {
                    let w = &cd * e;
                    let left = s.act_on(*g1, &s.f_vec(*k1, *l1));
                    let kl = h.mul(&h.basis_vec(*k2), &h.basis_vec(*l2));
                    axpy(&mut lhs, &w, &a.mul(&left, &s.f(&h.basis_vec(*g2), &kl)));
                }
                let gk = h.mul(&h.basis_vec(*g2), &h.basis_vec(*k2));
                axpy(&mut rhs, &cd, &a.mul(&s.f_vec(*g1, *k1), &s.f(&gk, &h.basis_vec(l))));
            }
        }
        lhs == rhs
    }));

    r.push(check_tuples("action_cosymmetric", &[dh, da], &[lh, la], |t| {
        let av = a.basis_vec(t[1]);
        let mut lhs = vec![Scalar::zero(); dh * da];
        let mut rhs = vec![Scalar::zero(); dh * da];
        for (g1, g2, c) in h.delta_basis(t[0]) {
            axpy(&mut lhs, c, &kron(&h.basis_vec(*g1), &s.act_on(*g2, &av)));
            axpy(&mut rhs, c, &kron(&h.basis_vec(*g2), &s.act_on(*g1, &av)));
        }
        lhs == rhs
    }));

    r.push(check_tuples("cocycle_cosymmetric", &[dh, dh], &[lh, lh], |t| {
        let mut lhs = vec![Scalar::zero(); dh * da];
        let mut rhs = vec![Scalar::zero(); dh * da];
        for (g1, g2, c) in h.delta_basis(t[0]) {
            for (k1, k2, d) in h.delta_basis(t[1]) {
                let cd = c * d;
                let p1 = h.mul(&h.basis_vec(*g1), &h.basis_vec(*k1));
                let p2 = h.mul(&h.basis_vec(*g2), &h.basis_vec(*k2));
                axpy(&mut lhs, &cd, &kron(&p1, &s.f_vec(*g2, *k2)));
                axpy(&mut rhs, &cd, &kron(&p2, &s.f_vec(*g1, *k1)));
            }
        }
        lhs == rhs
    }));
    r
}

/// `(a_i # h_j)(a_k # h_l)` as dense coordinates in `A ⊗ H`.
fn product_of_basis(s: &CrossedSystemData, i: usize, j: usize, k: usize, l: usize) -> Vec<Scalar> {
    let (a, h) = (&s.a, &s.h);
    let dh = s.dh();
    let mut out = vec![Scalar::zero(); s.product_dim()];
    let ai = a.basis_vec(i);
    let ak = a.basis_vec(k);
    for (legs, c) in h.delta_legs(j, 3) {
        let acted = a.mul(&ai, &s.act_on(legs[0], &ak));
        for (l1, l2, d) in h.delta_basis(l) {
            let cd = &c * d;
            let left = a.mul(&acted, &s.f_vec(legs[1], *l1));
            let right = h.mul_basis(legs[2], *l2);
            for (p, x) in left.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let w = &cd * x;
                for (q, y) in right {
                    out[p * dh + q] += &(&w * y);
                }
            }
        }
    }
    out
}

fn product_mul(s: &CrossedSystemData, mult: &LinMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = s.product_dim();
    let mut out = vec![Scalar::zero(); d];
    for (i, a) in x.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = a * b;
            for (k, c) in mult.column_sparse(i * d + j) {
                out[k] += &(&ab * &c);
            }
        }
    }
    out
}

fn build_product_unchecked(s: &CrossedSystemData) -> Result<HopfData, CrossedError> {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let d = da * dh;
    let mut mult = LinMap::zeros(vec![d, d], vec![d]);
    for x in 0..d {
        for y in 0..d {
            let v = product_of_basis(s, x / dh, x % dh, y / dh, y % dh);
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    mult.set(k, x * d + y, c);
                }
            }
        }
    }
    let tensor = tensor_hopf(a, h)?;
    let unit = FinVector::new(kron(a.unit(), h.unit()));
    // S(a#g) = (S_A[f(S_H(g_1), g_2... )] # S_H(g_1)) (S_A(a) # 1)
    let mut s_map = LinMap::zeros(vec![d], vec![d]);
    for i in 0..da {
        let sa = kron(&a.s(&a.basis_vec(i)), h.unit());
        for j in 0..dh {
            let mut left = vec![Scalar::zero(); d];
            for (legs, c) in h.delta_legs(j, 3) {
                let sg1 = h.s(&h.basis_vec(legs[0]));
                let sg2 = h.s(&h.basis_vec(legs[1]));
                let fa = a.s(&s.f(&sg2, &h.basis_vec(legs[2])));
                axpy(&mut left, &c, &kron(&fa, &sg1));
            }
            let col = product_mul(s, &mult, &left, &sa);
            for (k, c) in col.into_iter().enumerate() {
                if !c.is_zero() {
                    s_map.set(k, i * dh + j, c);
                }
            }
        }
    }
    let hopf = HopfData::new(
        format!("{}#{}", a.name, h.name),
        common_field(a.field, h.field)?,
        product_labels(a, h),
        AlgebraData::new(mult, unit)?,
        tensor.coalgebra.clone(),
        s_map,
    )?;
    Ok(hopf)
}

/// The crossed product Hopf algebra of a certified system.
pub fn build_crossed_product(s: &CertifiedSystem) -> HopfData {
    s.product().clone()
}

/// Builds the product of raw data, certifying it first.
pub fn build_from_data(s: CrossedSystemData) -> Result<(CertifiedSystem, HopfData), CrossedError> {
    let c = CertifiedSystem::certify(s)?;
    let p = c.product().clone();
    Ok((c, p))
}

#[derive(Debug, Clone)]
pub struct CanonicalMaps {
    pub i_a: LinMap,
    pub i_h: LinMap,
    pub pi_a: LinMap,
    pub pi_h: LinMap,
}

pub fn canonical_maps(s: &CrossedSystemData) -> CanonicalMaps {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let d = da * dh;
    let cols_ia: Vec<Vec<Scalar>> = (0..da).map(|i| kron(&a.basis_vec(i), h.unit())).collect();
    let cols_ih: Vec<Vec<Scalar>> = (0..dh).map(|j| kron(a.unit(), &h.basis_vec(j))).collect();
    let cols_pa: Vec<Vec<Scalar>> = (0..d).map(|x| a.basis_vec(x / dh).iter().map(|c| c * h.eps_basis(x % dh)).collect()).collect();
    let cols_ph: Vec<Vec<Scalar>> = (0..d).map(|x| h.basis_vec(x % dh).iter().map(|c| c * a.eps_basis(x / dh)).collect()).collect();
    CanonicalMaps {
        i_a: LinMap::from_columns(vec![da], vec![d], &cols_ia).expect("shape"),
        i_h: LinMap::from_columns(vec![dh], vec![d], &cols_ih).expect("shape"),
        pi_a: LinMap::from_columns(vec![d], vec![da], &cols_pa).expect("shape"),
        pi_h: LinMap::from_columns(vec![d], vec![dh], &cols_ph).expect("shape"),
    }
}

/// Checks the properties of the four canonical maps and the kernel of `π_H`.
pub fn canonical_maps_report(s: &CertifiedSystem) -> AxiomReport {
    let p = s.product();
    let m = canonical_maps(s);
    let mut r = AxiomReport::new();
    let pred = |name: &str, phi: &LinMap, src: &HopfData, dst: &HopfData, kind| {
        let rep = map_predicates(phi, src, dst, kind).expect("shapes");
        AxiomEntry::from_bool(name, rep.all_passed())
    };
    r.push(pred("i_A_hopf", &m.i_a, &s.a, p, MapKind::Hopf));
    r.push(pred("pi_H_hopf", &m.pi_h, p, &s.h, MapKind::Hopf));
    r.push(pred("i_H_coalgebra", &m.i_h, &s.h, p, MapKind::Coalgebra));
    r.push(pred("pi_A_coalgebra", &m.pi_a, p, &s.a, MapKind::Coalgebra));
    let id_a = LinMap::identity(vec![s.da()]);
    let id_h = LinMap::identity(vec![s.dh()]);
    r.push(AxiomEntry::from_bool("pi_A_i_A_identity", linalg::compose(&m.pi_a, &m.i_a).expect("shape").same_matrix(&id_a)));
    r.push(AxiomEntry::from_bool("pi_H_i_H_identity", linalg::compose(&m.pi_h, &m.i_h).expect("shape").same_matrix(&id_h)));
    let kernel = p.dim() - linalg::rank(&m.pi_h);
    r.push(AxiomEntry::from_bool("pi_H_kernel_dim", kernel == p.dim() - s.dh()));
    r
}

/// Smash product system: the given action with the trivial cocycle.
pub fn smash_system(a: HopfData, h: HopfData, act: LinMap) -> Result<CertifiedSystem, CrossedError> {
    let f = CrossedSystemData::trivial_cocycle(&a, &h);
    CertifiedSystem::certify(CrossedSystemData::new(a, h, act, f)?)
}

/// A normalized crossed system of finite groups, all maps given by indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct GroupCrossedData {
    /// Cayley table of the group that becomes `A`.
    pub a_table: Vec<Vec<usize>>,
    pub a_labels: Vec<String>,
    /// Cayley table of the group that becomes `H`.
    pub h_table: Vec<Vec<usize>>,
    pub h_labels: Vec<String>,
    /// `cocycle[g][k]` in A.
    pub cocycle: Vec<Vec<usize>>,
    /// `action[g][x]` in A.
    pub action: Vec<Vec<usize>>,
}

fn identity_of(t: &[Vec<usize>]) -> Option<usize> {
    (0..t.len()).find(|&e| (0..t.len()).all(|x| t[e][x] == x && t[x][e] == x))
}

/// Linearizes a group crossed system; also returns the group algebra of the
/// crossed product group, which is identified with `k[A] # k[H]` basis-wise.
pub fn linearize_group_crossed_system(g: &GroupCrossedData, field: crate::field::Field) -> Result<(CertifiedSystem, HopfData), CrossedError> {
    let ka = hopf::group_algebra("kA", field, &g.a_table, None, g.a_labels.clone())?;
    let kh = hopf::group_algebra("kH", field, &g.h_table, None, g.h_labels.clone())?;
    let (na, nh) = (g.a_table.len(), g.h_table.len());
    let bad = |m: String| Err(CrossedError::GroupAxiomFailure(m));
    if g.cocycle.len() != nh || g.cocycle.iter().any(|r| r.len() != nh || r.iter().any(|&x| x >= na)) {
        return bad("cocycle table has wrong shape".into());
    }
    if g.action.len() != nh || g.action.iter().any(|r| r.len() != na || r.iter().any(|&x| x >= na)) {
        return bad("action table has wrong shape".into());
    }
    let ea = identity_of(&g.a_table).expect("checked group");
    let eh = identity_of(&g.h_table).expect("checked group");
    let ma = |x: usize, y: usize| g.a_table[x][y];
    let mh = |x: usize, y: usize| g.h_table[x][y];
    let act = |x: usize, y: usize| g.action[x][y];
    let f = |x: usize, y: usize| g.cocycle[x][y];
    let (la, lh) = (&g.a_labels, &g.h_labels);
    for x in 0..nh {
        if f(x, eh) != ea || f(eh, x) != ea {
            return bad(format!("cocycle not normalized at {}", lh[x]));
        }
        if act(x, ea) != ea {
            return bad(format!("{} does not fix the identity", lh[x]));
        }
        for y in 0..na {
            if act(eh, y) != y {
                return bad(format!("identity acts nontrivially on {}", la[y]));
            }
            for z in 0..na {
                if act(x, ma(y, z)) != ma(act(x, y), act(x, z)) {
                    return bad(format!("action not multiplicative at ({}, {}, {})", lh[x], la[y], la[z]));
                }
            }
        }
    }
    for x in 0..nh {
        for y in 0..nh {
            for z in 0..na {
                if ma(act(x, act(y, z)), f(x, y)) != ma(f(x, y), act(mh(x, y), z)) {
                    return bad(format!("twisted module condition at ({}, {}, {})", lh[x], lh[y], la[z]));
                }
            }
            for z in 0..nh {
                if ma(act(x, f(y, z)), f(x, mh(y, z))) != ma(f(x, y), f(mh(x, y), z)) {
                    return bad(format!("cocycle condition at ({}, {}, {})", lh[x], lh[y], lh[z]));
                }
            }
        }
    }
    let mut act_map = LinMap::zeros(vec![nh, na], vec![na]);
    for x in 0..nh {
        for y in 0..na {
            act_map.set(act(x, y), x * na + y, Scalar::one());
        }
    }
    let mut f_map = LinMap::zeros(vec![nh, nh], vec![na]);
    for x in 0..nh {
        for y in 0..nh {
            f_map.set(f(x, y), x * nh + y, Scalar::one());
        }
    }
    let sys = CertifiedSystem::certify(CrossedSystemData::new(ka, kh, act_map, f_map)?)?;
    // the crossed product group: (a, x)(b, y) = (a (x▷b) f(x, y), xy)
    let n = na * nh;
    let table: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| {
                    let (a1, x) = (p / nh, p % nh);
                    let (b, y) = (q / nh, q % nh);
                    ma(ma(a1, act(x, b)), f(x, y)) * nh + mh(x, y)
                })
                .collect()
        })
        .collect();
    let group = hopf::group_algebra("kG", field, &table, None, product_labels(&sys.a, &sys.h))?;
    let report = map_predicates(&LinMap::identity(vec![n]), &group, sys.product(), MapKind::Iso)?;
    if !report.all_passed() {
        return Err(CrossedError::MapCheckFailed(report));
    }
    Ok((sys, group))
}

fn check_unitary_coalgebra_map(h: &HopfData, a: &HopfData, gamma: &LinMap) -> Result<(), CrossedError> {
    if gamma.cols() != h.dim() || gamma.rows() != a.dim() {
        return Err(LinAlgError::ShapeMismatch("map has the wrong shape".into()).into());
    }
    if gamma.apply(h.unit())? != a.unit() {
        return Err(CrossedError::NotCoalgebraMap("does not preserve the unit".into()));
    }
    let rep = map_predicates(gamma, h, a, MapKind::Coalgebra)?;
    if let Some(e) = rep.failed().first() {
        let at = e.witness_labels.clone().unwrap_or_default().join(", ");
        return Err(CrossedError::NotCoalgebraMap(format!("{} fails at ({at})", e.axiom)));
    }
    Ok(())
}

/// Coboundary system of a unitary coalgebra map `γ : H → A`, H cocommutative.
/// Returns the system and `φ(a # h) = a γ(h_(1)) ⊗ h_(2)` into `A ⊗ H`.
pub fn coboundary_system(a: HopfData, h: HopfData, gamma: &LinMap) -> Result<(CertifiedSystem, LinMap), CrossedError> {
    if !h.is_cocommutative() {
        return Err(CrossedError::NotCocommutative);
    }
    check_unitary_coalgebra_map(&h, &a, gamma)?;
    let (da, dh) = (a.dim(), h.dim());
    let g = |x: usize| gamma.column(x);
    let ginv = |x: usize| a.s(&gamma.column(x));
    let mut act = LinMap::zeros(vec![dh, da], vec![da]);
    for x in 0..dh {
        for i in 0..da {
            let mut v = vec![Scalar::zero(); da];
            for (x1, x2, c) in h.delta_basis(x) {
                axpy(&mut v, c, &a.mul(&a.mul(&g(*x1), &a.basis_vec(i)), &ginv(*x2)));
            }
            for (k, c) in v.into_iter().enumerate() {
                act.set(k, x * da + i, c);
            }
        }
    }
    let mut f = LinMap::zeros(vec![dh, dh], vec![da]);
    for x in 0..dh {
        for y in 0..dh {
            let mut v = vec![Scalar::zero(); da];
            for (x1, x2, c) in h.delta_basis(x) {
                for (y1, y2, d) in h.delta_basis(y) {
                    let xy = h.mul(&h.basis_vec(*x2), &h.basis_vec(*y2));
                    let inv = a.s(&gamma.apply(&xy)?);
                    axpy(&mut v, &(c * d), &a.mul(&a.mul(&g(*x1), &g(*y1)), &inv));
                }
            }
            for (k, c) in v.into_iter().enumerate() {
                f.set(k, x * dh + y, c);
            }
        }
    }
    let sys = CertifiedSystem::certify(CrossedSystemData::new(a, h, act, f)?)?;
    let d = da * dh;
    let mut phi = LinMap::zeros(vec![d], vec![d]);
    for i in 0..da {
        for x in 0..dh {
            let mut v = vec![Scalar::zero(); d];
            for (x1, x2, c) in sys.h.delta_basis(x) {
                let ag = sys.a.mul(&sys.a.basis_vec(i), &g(*x1));
                axpy(&mut v, c, &kron(&ag, &sys.h.basis_vec(*x2)));
            }
            for (k, c) in v.into_iter().enumerate() {
                phi.set(k, i * dh + x, c);
            }
        }
    }
    let tensor = tensor_hopf(&sys.a, &sys.h)?;
    let rep = map_predicates(&phi, sys.product(), &tensor, MapKind::Iso)?;
    if !rep.all_passed() {
        return Err(CrossedError::MapCheckFailed(rep));
    }
    Ok((sys, phi))
}

/// Checks that `u : H → A` is a lazy 1-cocycle.
pub fn check_lazy_cocycle(a: &HopfData, h: &HopfData, u: &LinMap) -> AxiomReport {
    let mut r = AxiomReport::new();
    if u.cols() != h.dim() || u.rows() != a.dim() {
        r.push(AxiomEntry::fail("shape", vec![], vec![]).with_note("map has the wrong shape"));
        return r;
    }
    let (da, dh) = (a.dim(), h.dim());
    let lh = &h.labels[..];
    let co = map_predicates(u, h, a, MapKind::Coalgebra).expect("shape checked");
    r.push(if co.all_passed() {
        AxiomEntry::pass("coalgebra_map")
    } else {
        let e = co.failed()[0].clone();
        AxiomEntry { axiom: "coalgebra_map".into(), ..e }
    });
    r.push(AxiomEntry::from_bool("unitary", u.apply(h.unit()).expect("shape") == a.unit()));
    r.push(check_tuples("lazy", &[dh], &[lh], |t| {
        let mut lhs = vec![Scalar::zero(); dh * da];
        let mut rhs = vec![Scalar::zero(); dh * da];
        for (x1, x2, c) in h.delta_basis(t[0]) {
            axpy(&mut lhs, c, &kron(&h.basis_vec(*x1), &u.column(*x2)));
            axpy(&mut rhs, c, &kron(&h.basis_vec(*x2), &u.column(*x1)));
        }
        lhs == rhs
    }));
    r.push(AxiomEntry::from_bool("convolution_invertible", linalg::convolution_inverse(u, &h.coalgebra, &a.algebra).is_ok()));
    r
}

/// Transformed system `(▷', f')` of a lazy 1-cocycle `u`, together with the
/// equivalence `φ(a # h) = a u(h_(1)) # h_(2)` from the old product to the new.
pub fn transform_by_lazy_cocycle(s: &CertifiedSystem, u: &LinMap) -> Result<(CertifiedSystem, LinMap), CrossedError> {
    let rep = check_lazy_cocycle(&s.a, &s.h, u);
    if !rep.all_passed() {
        return Err(CrossedError::LazyCheckFailed(rep));
    }
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let uinv = linalg::convolution_inverse(u, &h.coalgebra, &a.algebra)?;
    let uc = |x: usize| u.column(x);
    let ui = |x: usize| uinv.column(x);
    let mut act = LinMap::zeros(vec![dh, da], vec![da]);
    for x in 0..dh {
        let legs = h.delta_legs(x, 3);
        for i in 0..da {
            let mut v = vec![Scalar::zero(); da];
            for (l, c) in &legs {
                let mid = s.act_on(l[1], &a.basis_vec(i));
                axpy(&mut v, c, &a.mul(&a.mul(&ui(l[0]), &mid), &uc(l[2])));
            }
            for (k, c) in v.into_iter().enumerate() {
                act.set(k, x * da + i, c);
            }
        }
    }
    let mut f = LinMap::zeros(vec![dh, dh], vec![da]);
    for x in 0..dh {
        let xl = h.delta_legs(x, 4);
        for y in 0..dh {
            let yl = h.delta_legs(y, 3);
            let mut v = vec![Scalar::zero(); da];
            for (lx, c) in &xl {
                for (ly, d) in &yl {
                    let w = c * d;
                    let t1 = ui(lx[0]);
                    let t2 = s.act_on(lx[1], &ui(ly[0]));
                    let t3 = s.f_vec(lx[2], ly[1]);
                    let prod = h.mul(&h.basis_vec(lx[3]), &h.basis_vec(ly[2]));
                    let t4 = u.apply(&prod)?;
                    axpy(&mut v, &w, &a.mul(&a.mul(&a.mul(&t1, &t2), &t3), &t4));
                }
            }
            for (k, c) in v.into_iter().enumerate() {
                f.set(k, x * dh + y, c);
            }
        }
    }
    let new = CertifiedSystem::certify(CrossedSystemData::new(a.clone(), h.clone(), act, f)?)?;
    let phi = equivalence_map(s, u);
    let mut rep = map_predicates(&phi, s.product(), new.product(), MapKind::Iso)?;
    rep.extend(equivalence_compatibilities(s, &phi));
    if !rep.all_passed() {
        return Err(CrossedError::MapCheckFailed(rep));
    }
    Ok((new, phi))
}

/// `a # h ↦ a u(h_(1)) # h_(2)`.
pub fn equivalence_map(s: &CrossedSystemData, u: &LinMap) -> LinMap {
    let (da, dh) = (s.da(), s.dh());
    let d = da * dh;
    let mut phi = LinMap::zeros(vec![d], vec![d]);
    for i in 0..da {
        for x in 0..dh {
            let mut v = vec![Scalar::zero(); d];
            for (x1, x2, c) in s.h.delta_basis(x) {
                let au = s.a.mul(&s.a.basis_vec(i), &u.column(*x1));
                axpy(&mut v, c, &kron(&au, &s.h.basis_vec(*x2)));
            }
            for (k, c) in v.into_iter().enumerate() {
                phi.set(k, i * dh + x, c);
            }
        }
    }
    phi
}

/// Left A-linearity and right H-colinearity of a map between two products
/// on the same `A ⊗ H`.
pub fn equivalence_compatibilities(s: &CrossedSystemData, phi: &LinMap) -> AxiomReport {
    let (da, dh) = (s.da(), s.dh());
    let d = da * dh;
    let (a, h) = (&s.a, &s.h);
    let labels = product_labels(a, h);
    let mut r = AxiomReport::new();
    // the left A-action on A ⊗ H is a·(b # k) = ab # k in every crossed product
    r.push(check_tuples("left_A_linear", &[da, d], &[&a.labels, &labels], |t| {
        let x = kron(&a.mul(&a.basis_vec(t[0]), &a.basis_vec(t[1] / dh)), &h.basis_vec(t[1] % dh));
        let lhs = phi.apply(&x).expect("shape");
        let img = phi.column(t[1]);
        let mut rhs = vec![Scalar::zero(); d];
        for (p, c) in img.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut rhs, c, &kron(&a.mul(&a.basis_vec(t[0]), &a.basis_vec(p / dh)), &h.basis_vec(p % dh)));
            }
        }
        lhs == rhs
    }));
    // coaction a # k ↦ (a # k_(1)) ⊗ k_(2)
    let coact = |v: &[Scalar]| {
        let mut out = vec![Scalar::zero(); d * dh];
        for (p, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k1, k2, e) in h.delta_basis(p % dh) {
                out[((p / dh) * dh + k1) * dh + k2] += &(c * e);
            }
        }
        out
    };
    r.push(check_tuples("right_H_colinear", &[d], &[&labels], |t| {
        let lhs = coact(&phi.column(t[0]));
        let before = coact(&FinVector::basis(d, t[0]).coords);
        let mut rhs = vec![Scalar::zero(); d * dh];
        for (q, c) in before.iter().enumerate() {
            if !c.is_zero() {
                let img = phi.column(q / dh);
                axpy(&mut rhs, c, &kron(&img, &h.basis_vec(q % dh)));
            }
        }
        lhs == rhs
    }));
    r
}

/// Result of recovering a crossed system from a factorization `E ≅ A # H`.
#[derive(Debug, Clone)]
pub struct FactorizationWitness {
    pub e: HopfData,
    pub a_embed: LinMap,
    pub h_embed: LinMap,
    pub u_map: LinMap,
    pub recovered: CertifiedSystem,
    /// `E → A # H`
    pub iso: LinMap,
}

fn injective(m: &LinMap) -> bool {
    linalg::rank(m) == m.cols()
}

fn describe(labels: &[String], v: &[Scalar]) -> String {
    hopf::render_with_labels(v, labels)
}

/// Recovers `(A, H, ▷, f)` from a Hopf algebra `E`, a Hopf subalgebra
/// embedding of `A` and a coalgebra embedding of `H`.
pub fn factorize(
    e: &HopfData,
    a_embed: &LinMap,
    h_embed: &LinMap,
    a_labels: Vec<String>,
    h_labels: Vec<String>,
) -> Result<FactorizationWitness, CrossedError> {
    let de = e.dim();
    if a_embed.rows() != de || h_embed.rows() != de {
        return Err(LinAlgError::ShapeMismatch("embeddings must land in E".into()).into());
    }
    let (da, dh) = (a_embed.cols(), h_embed.cols());
    if a_labels.len() != da || h_labels.len() != dh {
        return Err(LinAlgError::ShapeMismatch("label count differs from embedding rank".into()).into());
    }
    if !injective(a_embed) {
        return Err(CrossedError::NotInjective("A".into()));
    }
    if !injective(h_embed) {
        return Err(CrossedError::NotInjective("H".into()));
    }
    let a_img: Vec<Vec<Scalar>> = (0..da).map(|i| a_embed.column(i)).collect();
    let h_img: Vec<Vec<Scalar>> = (0..dh).map(|i| h_embed.column(i)).collect();
    let coords_a = |v: &[Scalar]| span_coordinates(&a_img, v);
    let coords_h = |v: &[Scalar]| span_coordinates(&h_img, v);

    // A: pull back the Hopf structure along the embedding
    let sub = |what: &str| CrossedError::NotHopfSubalgebra(what.to_string());
    let mut a_mult = LinMap::zeros(vec![da, da], vec![da]);
    for i in 0..da {
        for j in 0..da {
            let c = coords_a(&e.mul(&a_img[i], &a_img[j])).ok_or_else(|| sub("not closed under multiplication"))?;
            for (k, x) in c.into_iter().enumerate() {
                a_mult.set(k, i * da + j, x);
            }
        }
    }
    let a_unit = coords_a(e.unit()).ok_or_else(|| sub("does not contain 1"))?;
    let mut a_delta = LinMap::zeros(vec![da], vec![da, da]);
    let mut a_eps = LinMap::zeros(vec![da], vec![]);
    let mut a_s = LinMap::zeros(vec![da], vec![da]);
    let a_pairs: Vec<Vec<Scalar>> = (0..da * da).map(|p| kron(&a_img[p / da], &a_img[p % da])).collect();
    for i in 0..da {
        let c = span_coordinates(&a_pairs, &e.coalgebra.delta(&a_img[i])).ok_or_else(|| sub("not a subcoalgebra"))?;
        for (k, x) in c.into_iter().enumerate() {
            a_delta.set(k, i, x);
        }
        a_eps.set(0, i, e.eps(&a_img[i]));
        let c = coords_a(&e.s(&a_img[i])).ok_or_else(|| sub("not stable under the antipode"))?;
        for (k, x) in c.into_iter().enumerate() {
            a_s.set(k, i, x);
        }
    }
    let a = HopfData::new("A", e.field, a_labels, AlgebraData::new(a_mult, FinVector::new(a_unit))?, CoalgebraData::new(a_delta, a_eps)?, a_s)?;

    // H: the image must be a subcoalgebra containing 1_E
    let h_pairs: Vec<Vec<Scalar>> = (0..dh * dh).map(|p| kron(&h_img[p / dh], &h_img[p % dh])).collect();
    let mut h_delta = LinMap::zeros(vec![dh], vec![dh, dh]);
    let mut h_eps = LinMap::zeros(vec![dh], vec![]);
    for i in 0..dh {
        let c = span_coordinates(&h_pairs, &e.coalgebra.delta(&h_img[i]))
            .ok_or_else(|| CrossedError::NotSubcoalgebra(format!("Δ({}) leaves the image", describe(&e.labels, &h_img[i]))))?;
        for (k, x) in c.into_iter().enumerate() {
            h_delta.set(k, i, x);
        }
        h_eps.set(0, i, e.eps(&h_img[i]));
    }
    let h_unit = coords_h(e.unit()).ok_or_else(|| CrossedError::NotSubcoalgebra("1 is not in the image".into()))?;

    // normality of A in E
    for x in 0..de {
        for i in 0..da {
            let mut left = vec![Scalar::zero(); de];
            let mut right = vec![Scalar::zero(); de];
            for (x1, x2, c) in e.delta_basis(x) {
                let l = e.mul(&e.mul(&e.basis_vec(*x1), &a_img[i]), &e.s(&e.basis_vec(*x2)));
                axpy(&mut left, c, &l);
                let r = e.mul(&e.mul(&e.s(&e.basis_vec(*x1)), &a_img[i]), &e.basis_vec(*x2));
                axpy(&mut right, c, &r);
            }
            if coords_a(&left).is_none() || coords_a(&right).is_none() {
                return Err(CrossedError::NotNormal(format!("x = {}, a = {}", e.labels[x], a.labels[i])));
            }
        }
    }

    // u(a ⊗ h) = a h
    let d = da * dh;
    if d != de {
        return Err(CrossedError::NotBijective);
    }
    let mut u_map = LinMap::zeros(vec![da, dh], vec![de]);
    for i in 0..da {
        for j in 0..dh {
            for (k, x) in e.mul(&a_img[i], &h_img[j]).into_iter().enumerate() {
                u_map.set(k, i * dh + j, x);
            }
        }
    }
    let u_inv = invert(&u_map).map_err(|_| CrossedError::NotBijective)?;

    // ν(h ⊗ g) = u⁻¹(hg), μ(h ⊗ a) = u⁻¹(ha)
    let nu = |x: usize, y: usize| u_inv.apply(&e.mul(&h_img[x], &h_img[y])).expect("shape");
    let mu = |x: usize, i: usize| u_inv.apply(&e.mul(&h_img[x], &a_img[i])).expect("shape");
    let a_eps_vals: Vec<Scalar> = (0..da).map(|i| a.eps_basis(i).clone()).collect();
    let h_eps_vals: Vec<Scalar> = (0..dh).map(|j| h_eps.get(0, j).clone()).collect();
    let eps_a_id = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dh];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[p % dh] += &(c * &a_eps_vals[p / dh]);
            }
        }
        out
    };
    let id_eps_h = |v: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); da];
        for (p, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out[p / dh] += &(c * &h_eps_vals[p % dh]);
            }
        }
        out
    };
    let mut h_mult = LinMap::zeros(vec![dh, dh], vec![dh]);
    let mut f = LinMap::zeros(vec![dh, dh], vec![da]);
    for x in 0..dh {
        for y in 0..dh {
            let v = nu(x, y);
            for (k, c) in eps_a_id(&v).into_iter().enumerate() {
                h_mult.set(k, x * dh + y, c);
            }
            for (k, c) in id_eps_h(&v).into_iter().enumerate() {
                f.set(k, x * dh + y, c);
            }
        }
    }
    let mut act = LinMap::zeros(vec![dh, da], vec![da]);
    for x in 0..dh {
        for i in 0..da {
            let v = mu(x, i);
            let right = eps_a_id(&v);
            let expect: Vec<Scalar> = h_img_basis(dh, x).iter().map(|c| c * &a_eps_vals[i]).collect();
            if right != expect {
                return Err(CrossedError::LeftActionNotTrivial(format!("({}, {})", h_labels[x], a.labels[i])));
            }
            for (k, c) in id_eps_h(&v).into_iter().enumerate() {
                act.set(k, x * da + i, c);
            }
        }
    }

    let h_alg = AlgebraData::new(h_mult, FinVector::new(h_unit))?;
    let h_coalg = CoalgebraData::new(h_delta, h_eps)?;
    let h = HopfData::with_derived_antipode("H", e.field, h_labels, h_alg, h_coalg)?;
    let recovered = CertifiedSystem::certify(CrossedSystemData::new(a, h, act, f)?)?;
    let iso = u_inv.reshape(vec![de], vec![d])?;
    let rep = map_predicates(&iso, e, recovered.product(), MapKind::Iso)?;
    if !rep.all_passed() {
        return Err(CrossedError::MapCheckFailed(rep));
    }
    Ok(FactorizationWitness {
        e: e.clone(),
        a_embed: a_embed.clone(),
        h_embed: h_embed.clone(),
        u_map: u_map.reshape(vec![da, dh], vec![de])?,
        recovered,
        iso,
    })
}

fn h_img_basis(dh: usize, x: usize) -> Vec<Scalar> {
    FinVector::basis(dh, x).coords
}

fn precondition(rep: &AxiomReport, name: &str) -> Result<(), CrossedError> {
    if let Some(e) = rep.failed().first() {
        return Err(CrossedError::PreconditionFailed {
            condition: format!("{name}: {}", e.axiom),
            witness: e.witness_labels.clone().unwrap_or_default().join(", "),
        });
    }
    Ok(())
}

fn entry_precondition(e: AxiomEntry) -> Result<(), CrossedError> {
    if e.passed {
        return Ok(());
    }
    Err(CrossedError::PreconditionFailed { condition: e.axiom, witness: e.witness_labels.unwrap_or_default().join(", ") })
}

/// `w(a # h) = u(a) v(h)` for a Hopf map `u : A → X` and coalgebra map `v : H → X`.
pub fn universal_map_out(s: &CertifiedSystem, x: &HopfData, u: &LinMap, v: &LinMap) -> Result<LinMap, CrossedError> {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    precondition(&map_predicates(u, a, x, MapKind::Hopf)?, "u is a Hopf map")?;
    precondition(&map_predicates(v, h, x, MapKind::Coalgebra)?, "v is a coalgebra map")?;
    let lh = &h.labels[..];
    entry_precondition(check_tuples("(u1)", &[dh, dh], &[lh, lh], |t| {
        let mut lhs = vec![Scalar::zero(); x.dim()];
        for (h1, h2, c) in h.delta_basis(t[0]) {
            for (g1, g2, d) in h.delta_basis(t[1]) {
                let hg = h.mul(&h.basis_vec(*h2), &h.basis_vec(*g2));
                let term = x.mul(&u.apply(&s.f_vec(*h1, *g1)).expect("shape"), &v.apply(&hg).expect("shape"));
                axpy(&mut lhs, &(c * d), &term);
            }
        }
        lhs == x.mul(&v.column(t[0]), &v.column(t[1]))
    }))?;
    entry_precondition(check_tuples("(u2)", &[dh, da], &[lh, &a.labels], |t| {
        let mut lhs = vec![Scalar::zero(); x.dim()];
        for (h1, h2, c) in h.delta_basis(t[0]) {
            let acted = u.apply(&s.act_on(*h1, &a.basis_vec(t[1]))).expect("shape");
            axpy(&mut lhs, c, &x.mul(&acted, &v.column(*h2)));
        }
        lhs == x.mul(&v.column(t[0]), &u.column(t[1]))
    }))?;
    let d = da * dh;
    let cols: Vec<Vec<Scalar>> = (0..d).map(|p| x.mul(&u.column(p / dh), &v.column(p % dh))).collect();
    let w = LinMap::from_columns(vec![d], vec![x.dim()], &cols)?;
    let mut rep = map_predicates(&w, s.product(), x, MapKind::Hopf)?;
    let m = canonical_maps(s);
    rep.push(AxiomEntry::from_bool("w_i_A", linalg::compose(&w, &m.i_a)?.same_matrix(u)));
    rep.push(AxiomEntry::from_bool("w_i_H", linalg::compose(&w, &m.i_h)?.same_matrix(v)));
    if !rep.all_passed() {
        return Err(CrossedError::MapCheckFailed(rep));
    }
    Ok(w)
}

/// `w(x) = u(x_(1)) # v(x_(2))` for a coalgebra map `u : X → A` and Hopf map `v : X → H`.
pub fn universal_map_in(s: &CertifiedSystem, x: &HopfData, u: &LinMap, v: &LinMap) -> Result<LinMap, CrossedError> {
    let (a, h) = (&s.a, &s.h);
    let (da, dh) = (s.da(), s.dh());
    let dx = x.dim();
    precondition(&map_predicates(v, x, h, MapKind::Hopf)?, "v is a Hopf map")?;
    precondition(&map_predicates(u, x, a, MapKind::Coalgebra)?, "u is a coalgebra map")?;
    let lx = &x.labels[..];
    entry_precondition(check_tuples("(u3)", &[dx], &[lx], |t| {
        let mut lhs = vec![Scalar::zero(); da * dh];
        let mut rhs = vec![Scalar::zero(); da * dh];
        for (x1, x2, c) in x.delta_basis(t[0]) {
            axpy(&mut lhs, c, &kron(&u.column(*x1), &v.column(*x2)));
            axpy(&mut rhs, c, &kron(&u.column(*x2), &v.column(*x1)));
        }
        lhs == rhs
    }))?;
    entry_precondition(check_tuples("(u4)", &[dx, dx], &[lx, lx], |t| {
        let lhs = u.apply(&x.mul(&x.basis_vec(t[0]), &x.basis_vec(t[1]))).expect("shape");
        let mut rhs = vec![Scalar::zero(); da];
        for (l, c) in x.delta_legs(t[0], 3) {
            for (y1, y2, d) in x.delta_basis(t[1]) {
                let acted = s.act(&v.column(l[1]), &u.column(*y1));
                let f = s.f(&v.column(l[2]), &v.column(*y2));
                axpy(&mut rhs, &(&c * d), &a.mul(&a.mul(&u.column(l[0]), &acted), &f));
            }
        }
        lhs == rhs
    }))?;
    let cols: Vec<Vec<Scalar>> = (0..dx)
        .map(|i| {
            let mut out = vec![Scalar::zero(); da * dh];
            for (x1, x2, c) in x.delta_basis(i) {
                axpy(&mut out, c, &kron(&u.column(*x1), &v.column(*x2)));
            }
            out
        })
        .collect();
    let w = LinMap::from_columns(vec![dx], vec![da * dh], &cols)?;
    let mut rep = map_predicates(&w, x, s.product(), MapKind::Hopf)?;
    let m = canonical_maps(s);
    rep.push(AxiomEntry::from_bool("pi_A_w", linalg::compose(&m.pi_a, &w)?.same_matrix(u)));
    rep.push(AxiomEntry::from_bool("pi_H_w", linalg::compose(&m.pi_h, &w)?.same_matrix(v)));
    if !rep.all_passed() {
        return Err(CrossedError::MapCheckFailed(rep));
    }
    Ok(w)
}

/// Verifies the product of a certified system as a Hopf algebra.
pub fn verify_product(s: &CertifiedSystem) -> AxiomReport {
    verify_hopf(s.product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::hopf::{cyclic_group_algebra, sweedler_h4};

    #[test]
    fn identity_detection() {
        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert_eq!(identity_of(&z3), Some(0));
        let no_unit = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(identity_of(&no_unit), None);
    }

    #[test]
    fn shapes_are_validated() {
        let a = sweedler_h4(Field::Rational).unwrap();
        let h = cyclic_group_algebra(2, "s", Field::Rational);
        let act = CrossedSystemData::trivial_action(&a, &h);
        let bad = LinMap::zeros(vec![3], vec![4]);
        assert!(CrossedSystemData::new(a.clone(), h.clone(), act, bad).is_err());
        let s = CrossedSystemData::trivial(a, h).unwrap();
        assert_eq!((s.da(), s.dh(), s.product_dim()), (4, 2, 8));
        assert!(s.is_action_trivial() && s.is_cocycle_trivial());
    }

    #[test]
    fn trivial_data_on_grouplikes() {
        let a = cyclic_group_algebra(3, "t", Field::Rational);
        let h = cyclic_group_algebra(2, "s", Field::Rational);
        let s = CrossedSystemData::trivial(a, h).unwrap();
        // s ▷ t = t and f(s, s) = 1
        assert_eq!(s.act_on(1, &s.a.basis_vec(1)), s.a.basis_vec(1));
        assert_eq!(s.f_vec(1, 1), s.a.unit().to_vec());
        assert!(injective(&LinMap::identity(vec![3])));
        assert!(!injective(&LinMap::zeros(vec![2], vec![3])));
    }
}
