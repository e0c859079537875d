//! Finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants, plus axiom verification and standard presets.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldError, Scalar};
use crate::linalg::{self, axpy, compose, invert, tensor_map, FinVector, LinAlgError, LinMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("field has characteristic two")]
    CharTwo,
    #[error("bialgebra has no antipode")]
    NoAntipode,
    #[error("invalid data: {0}")]
    Invalid(String),
}

/// Sparse view of a product `e_i e_j = Σ c e_k`.
type Terms = Vec<(usize, Scalar)>;
/// Sparse view of `Δ(e_i) = Σ c e_j ⊗ e_k`.
type CoTerms = Vec<(usize, usize, Scalar)>;

#[derive(Debug, Clone)]
pub struct AlgebraData {
    pub dim: usize,
    pub mult: LinMap,
    pub unit: FinVector,
    table: Vec<Terms>,
}

impl PartialEq for AlgebraData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.mult.same_matrix(&other.mult) && self.unit == other.unit
    }
}

impl AlgebraData {
    pub fn new(mult: LinMap, unit: FinVector) -> Result<Self, HopfError> {
        let dim = unit.dim();
        if mult.rows() != dim || mult.cols() != dim * dim {
            return Err(HopfError::Invalid(format!("multiplication is {}x{}, expected {dim}x{}", mult.rows(), mult.cols(), dim * dim)));
        }
        let mult = mult.reshape(vec![dim, dim], vec![dim])?;
        let table = (0..dim * dim).map(|c| mult.column_sparse(c)).collect();
        Ok(AlgebraData { dim, mult, unit, table })
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        FinVector::basis(self.dim, i).coords
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }
}

#[derive(Debug, Clone)]
pub struct CoalgebraData {
    pub dim: usize,
    pub comult: LinMap,
    pub counit: LinMap,
    table: Vec<CoTerms>,
    eps: Vec<Scalar>,
}

impl PartialEq for CoalgebraData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.comult.same_matrix(&other.comult) && self.counit.same_matrix(&other.counit)
    }
}

impl CoalgebraData {
    pub fn new(comult: LinMap, counit: LinMap) -> Result<Self, HopfError> {
        let dim = counit.cols();
        if counit.rows() != 1 || comult.cols() != dim || comult.rows() != dim * dim {
            return Err(HopfError::Invalid("coalgebra maps have inconsistent shapes".into()));
        }
        let comult = comult.reshape(vec![dim], vec![dim, dim])?;
        let counit = counit.reshape(vec![dim], vec![])?;
        let table = (0..dim).map(|i| comult.column_sparse(i).into_iter().map(|(r, c)| (r / dim, r % dim, c)).collect()).collect();
        let eps = (0..dim).map(|i| counit.get(0, i).clone()).collect();
        Ok(CoalgebraData { dim, comult, counit, table, eps })
    }

    pub fn delta_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.table[i]
    }

    pub fn eps_basis(&self, i: usize) -> &Scalar {
        &self.eps[i]
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, e) in x.iter().zip(&self.eps) {
            if !a.is_zero() && !e.is_zero() {
                acc += &(a * e);
            }
        }
        acc
    }

    /// Dense `Δ(x)` in `C ⊗ C`.
    pub fn delta(&self, x: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d * d];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in self.delta_basis(i) {
                out[j * d + k] += &(a * c);
            }
        }
        out
    }

    /// Sparse iterated coproduct of a basis element into `legs` factors.
    pub fn delta_legs(&self, i: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(legs >= 1);
        let mut cur = vec![(vec![i], Scalar::one())];
        for _ in 1..legs {
            let mut next: Vec<(Vec<usize>, Scalar)> = Vec::new();
            for (idx, c) in &cur {
                let last = *idx.last().expect("nonempty");
                for (j, k, d) in self.delta_basis(last) {
                    let mut v = idx[..idx.len() - 1].to_vec();
                    v.push(*j);
                    v.push(*k);
                    next.push((v, c * d));
                }
            }
            cur = merge_terms(next);
        }
        cur
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let d = self.delta_basis(i);
            let mut a: Vec<_> = d.iter().map(|(j, k, c)| ((*j, *k), c.clone())).collect();
            let mut b: Vec<_> = d.iter().map(|(j, k, c)| ((*k, *j), c.clone())).collect();
            a.sort_by_key(|x| x.0);
            b.sort_by_key(|x| x.0);
            a == b
        })
    }
}

/// Sums terms with equal index tuples and drops zeros.
pub fn merge_terms(mut terms: Vec<(Vec<usize>, Scalar)>) -> Vec<(Vec<usize>, Scalar)> {
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Vec<usize>, Scalar)> = Vec::with_capacity(terms.len());
    for (idx, c) in terms {
        match out.last_mut() {
            Some((last, acc)) if *last == idx => *acc += &c,
            _ => out.push((idx, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

#[derive(Debug, Clone)]
pub struct HopfData {
    pub name: String,
    pub field: Field,
    pub labels: Vec<String>,
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: LinMap,
    s_table: Vec<Terms>,
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.coalgebra == other.coalgebra && self.antipode.same_matrix(&other.antipode)
    }
}

impl HopfData {
    pub fn new(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
        antipode: LinMap,
    ) -> Result<Self, HopfError> {
        let dim = algebra.dim;
        if coalgebra.dim != dim || antipode.rows() != dim || antipode.cols() != dim || labels.len() != dim {
            return Err(HopfError::Invalid("algebra, coalgebra, antipode and labels disagree on dimension".into()));
        }
        let antipode = antipode.reshape(vec![dim], vec![dim])?;
        let s_table = (0..dim).map(|i| antipode.column_sparse(i)).collect();
        Ok(HopfData { name: name.into(), field, labels, algebra, coalgebra, antipode, s_table })
    }

    /// Builds a Hopf algebra, deriving the antipode when none is supplied.
    pub fn with_derived_antipode(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
    ) -> Result<Self, HopfError> {
        let s = antipode_of(&algebra, &coalgebra)?;
        Self::new(name, field, labels, algebra, coalgebra, s)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        self.algebra.mul_basis(i, j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul(x, y)
    }

    pub fn delta_basis(&self, i: usize) -> &[(usize, usize, Scalar)] {
        self.coalgebra.delta_basis(i)
    }

    pub fn delta_legs(&self, i: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
        self.coalgebra.delta_legs(i, legs)
    }

    pub fn eps_basis(&self, i: usize) -> &Scalar {
        self.coalgebra.eps_basis(i)
    }

    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        self.coalgebra.eps(x)
    }

    pub fn s_basis(&self, i: usize) -> &[(usize, Scalar)] {
        &self.s_table[i]
    }

    pub fn s(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                for (j, c) in self.s_basis(i) {
                    out[*j] += &(a * c);
                }
            }
        }
        out
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.algebra.unit.coords
    }

    /// Index of the unit if it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        let nz: Vec<usize> = (0..u.len()).filter(|&i| !u[i].is_zero()).collect();
        (nz.len() == 1 && u[nz[0]].is_one()).then(|| nz[0])
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        FinVector::basis(self.dim(), i).coords
    }

    /// `η ∘ ε` applied to `x`: `ε(x) 1`.
    pub fn eps_unit(&self, x: &[Scalar]) -> Vec<Scalar> {
        let e = self.eps(x);
        self.unit().iter().map(|u| u * &e).collect()
    }

    pub fn identity_map(&self) -> LinMap {
        LinMap::identity(vec![self.dim()])
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// Renders a vector with basis labels, e.g. `x-gx`.
    pub fn render(&self, v: &[Scalar]) -> String {
        render_with_labels(v, &self.labels)
    }
}

pub fn render_with_labels(v: &[Scalar], labels: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = c.to_string();
        let term = if c.is_one() {
            labels[i].clone()
        } else if coeff == "-1" {
            format!("-{}", labels[i])
        } else if c.is_rational() {
            format!("{coeff}*{}", labels[i])
        } else {
            format!("({coeff})*{}", labels[i])
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// One checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl AxiomEntry {
    pub fn pass(axiom: impl Into<String>) -> Self {
        AxiomEntry { axiom: axiom.into(), passed: true, witness: None, witness_labels: None, note: None }
    }

    pub fn fail(axiom: impl Into<String>, witness: Vec<usize>, labels: Vec<String>) -> Self {
        AxiomEntry { axiom: axiom.into(), passed: false, witness: Some(witness), witness_labels: Some(labels), note: None }
    }

    pub fn from_bool(axiom: impl Into<String>, ok: bool) -> Self {
        if ok {
            Self::pass(axiom)
        } else {
            Self::fail(axiom, vec![], vec![])
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, e: AxiomEntry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.entries.extend(other.entries);
    }

    /// Copies entries from `other` with a name prefix.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut e in other.entries {
            e.axiom = format!("{prefix}{}", e.axiom);
            self.entries.push(e);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failed(&self) -> Vec<&AxiomEntry> {
        self.entries.iter().filter(|e| !e.passed).collect()
    }

    pub fn entry(&self, axiom: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn passed(&self, axiom: &str) -> bool {
        self.entry(axiom).map(|e| e.passed).unwrap_or(false)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.failed().into_iter().map(|e| e.axiom.clone()).collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{:<4} {}", if e.passed { "ok" } else { "FAIL" }, e.axiom)?;
            if let Some(w) = &e.witness_labels {
                if !w.is_empty() {
                    write!(f, "  at ({})", w.join(", "))?;
                }
            }
            if let Some(n) = &e.note {
                write!(f, "  [{n}]")?;
            }
            writeln!(f)?;
        }
        let bad = self.failed().len();
        write!(f, "{} checked, {} failed", self.entries.len(), bad)
    }
}

/// Checks `pred` on every index tuple of the box `dims` and reports the
/// lexicographically first failure. `labels[k]` names the values of slot k.
pub fn check_tuples<F>(axiom: &str, dims: &[usize], labels: &[&[String]], pred: F) -> AxiomEntry
where
    F: Fn(&[usize]) -> bool + Sync + Send,
{
    let total: usize = dims.iter().product();
    let decode = |mut n: usize| {
        let mut idx = vec![0; dims.len()];
        for k in (0..dims.len()).rev() {
            idx[k] = n % dims[k];
            n /= dims[k];
        }
        idx
    };
    let bad = (0..total).into_par_iter().find_first(|&n| !pred(&decode(n)));
    match bad {
        None => AxiomEntry::pass(axiom),
        Some(n) => {
            let w = decode(n);
            let names = w.iter().enumerate().map(|(k, &i)| labels.get(k).and_then(|l| l.get(i)).cloned().unwrap_or_else(|| i.to_string())).collect();
            AxiomEntry::fail(axiom, w, names)
        }
    }
}

fn default_labels(d: usize) -> Vec<String> {
    (0..d).map(|i| format!("e{i}")).collect()
}

fn algebra_entries(a: &AlgebraData, labels: &[String]) -> AxiomReport {
    let d = a.dim;
    let l = labels;
    let mut r = AxiomReport::new();
    r.push(check_tuples("associativity", &[d, d, d], &[l, l, l], |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut left = vec![Scalar::zero(); d];
        for (m, c) in a.mul_basis(i, j) {
            for (n, e) in a.mul_basis(*m, k) {
                left[*n] += &(c * e);
            }
        }
        let mut right = vec![Scalar::zero(); d];
        for (m, c) in a.mul_basis(j, k) {
            for (n, e) in a.mul_basis(i, *m) {
                right[*n] += &(c * e);
            }
        }
        left == right
    }));
    let unit = &a.unit.coords;
    r.push(check_tuples("left_unit", &[d], &[l], |t| a.mul(unit, &a.basis_vec(t[0])) == a.basis_vec(t[0])));
    r.push(check_tuples("right_unit", &[d], &[l], |t| a.mul(&a.basis_vec(t[0]), unit) == a.basis_vec(t[0])));
    r
}

fn coalgebra_entries(c: &CoalgebraData, labels: &[String]) -> AxiomReport {
    let d = c.dim;
    let l = labels;
    let mut r = AxiomReport::new();
    r.push(check_tuples("coassociativity", &[d], &[l], |t| {
        let mut left = vec![Scalar::zero(); d * d * d];
        let mut right = vec![Scalar::zero(); d * d * d];
        for (j, k, x) in c.delta_basis(t[0]) {
            for (p, q, y) in c.delta_basis(*j) {
                left[(p * d + q) * d + k] += &(x * y);
            }
            for (p, q, y) in c.delta_basis(*k) {
                right[(j * d + p) * d + q] += &(x * y);
            }
        }
        left == right
    }));
    r.push(check_tuples("left_counit", &[d], &[l], |t| {
        let mut v = vec![Scalar::zero(); d];
        for (j, k, x) in c.delta_basis(t[0]) {
            v[*k] += &(x * c.eps_basis(*j));
        }
        v == FinVector::basis(d, t[0]).coords
    }));
    r.push(check_tuples("right_counit", &[d], &[l], |t| {
        let mut v = vec![Scalar::zero(); d];
        for (j, k, x) in c.delta_basis(t[0]) {
            v[*j] += &(x * c.eps_basis(*k));
        }
        v == FinVector::basis(d, t[0]).coords
    }));
    r
}

pub fn verify_algebra(a: &AlgebraData) -> AxiomReport {
    algebra_entries(a, &default_labels(a.dim))
}

pub fn verify_coalgebra(c: &CoalgebraData) -> AxiomReport {
    coalgebra_entries(c, &default_labels(c.dim))
}

/// Δ of a product of basis elements computed as Δ(e_i)Δ(e_j).
fn delta_of_product(h: &HopfData, i: usize, j: usize) -> Vec<Scalar> {
    let d = h.dim();
    let mut out = vec![Scalar::zero(); d * d];
    for (a, b, x) in h.delta_basis(i) {
        for (p, q, y) in h.delta_basis(j) {
            let xy = x * y;
            for (m, c) in h.mul_basis(*a, *p) {
                let cm = &xy * c;
                for (n, e) in h.mul_basis(*b, *q) {
                    out[m * d + n] += &(&cm * e);
                }
            }
        }
    }
    out
}

pub fn verify_hopf(h: &HopfData) -> AxiomReport {
    let d = h.dim();
    let l = &h.labels[..];
    let mut r = algebra_entries(&h.algebra, l);
    r.extend(coalgebra_entries(&h.coalgebra, l));
    r.push(check_tuples("comult_multiplicative", &[d, d], &[l, l], |t| {
        let prod = h.mul(&h.basis_vec(t[0]), &h.basis_vec(t[1]));
        h.coalgebra.delta(&prod) == delta_of_product(h, t[0], t[1])
    }));
    let unit = h.unit();
    r.push(AxiomEntry::from_bool("comult_unit", h.coalgebra.delta(unit) == linalg::kron(unit, unit)));
    r.push(check_tuples("counit_multiplicative", &[d, d], &[l, l], |t| {
        let prod = h.mul(&h.basis_vec(t[0]), &h.basis_vec(t[1]));
        h.eps(&prod) == h.eps_basis(t[0]) * h.eps_basis(t[1])
    }));
    r.push(AxiomEntry::from_bool("counit_unit", h.eps(unit).is_one()));
    r.push(check_tuples("antipode_left", &[d], &[l], |t| {
        let mut v = vec![Scalar::zero(); d];
        for (a, b, x) in h.delta_basis(t[0]) {
            axpy(&mut v, x, &h.mul(&h.s(&h.basis_vec(*a)), &h.basis_vec(*b)));
        }
        v == h.eps_unit(&h.basis_vec(t[0]))
    }));
    r.push(check_tuples("antipode_right", &[d], &[l], |t| {
        let mut v = vec![Scalar::zero(); d];
        for (a, b, x) in h.delta_basis(t[0]) {
            axpy(&mut v, x, &h.mul(&h.basis_vec(*a), &h.s(&h.basis_vec(*b))));
        }
        v == h.eps_unit(&h.basis_vec(t[0]))
    }));
    r
}

fn antipode_of(a: &AlgebraData, c: &CoalgebraData) -> Result<LinMap, HopfError> {
    linalg::convolution_inverse(&LinMap::identity(vec![a.dim]), c, a).map_err(|e| match e {
        LinAlgError::NotConvInvertible => HopfError::NoAntipode,
        other => HopfError::LinAlg(other),
    })
}

/// Convolution inverse of the identity.
pub fn derive_antipode(h: &HopfData) -> Result<LinMap, HopfError> {
    antipode_of(&h.algebra, &h.coalgebra)
}

/// Coefficients of `Δ^{legs-1}(x)` in the `legs`-fold tensor basis, built by
/// repeatedly splitting the last leg.
pub fn sweedler_expand(c: &CoalgebraData, x: &[Scalar], legs: usize) -> Vec<Scalar> {
    assert!(legs >= 1, "at least one leg");
    let d = c.dim;
    let mut cur = x.to_vec();
    for n in 1..legs {
        let prefix = d.pow(n as u32 - 1);
        let mut next = vec![Scalar::zero(); cur.len() * d];
        for p in 0..prefix {
            for i in 0..d {
                let a = &cur[p * d + i];
                if a.is_zero() {
                    continue;
                }
                for (j, k, y) in c.delta_basis(i) {
                    next[(p * d + j) * d + k] += &(a * y);
                }
            }
        }
        cur = next;
    }
    cur
}

/// Same as [`sweedler_expand`] but splitting the first leg each time.
pub fn sweedler_expand_left(c: &CoalgebraData, x: &[Scalar], legs: usize) -> Vec<Scalar> {
    assert!(legs >= 1, "at least one leg");
    let d = c.dim;
    let mut cur = x.to_vec();
    for n in 1..legs {
        let suffix = d.pow(n as u32 - 1);
        let mut next = vec![Scalar::zero(); cur.len() * d];
        for i in 0..d {
            for s in 0..suffix {
                let a = &cur[i * suffix + s];
                if a.is_zero() {
                    continue;
                }
                for (j, k, y) in c.delta_basis(i) {
                    next[(j * d + k) * suffix + s] += &(a * y);
                }
            }
        }
        cur = next;
    }
    cur
}

fn structure_from_tables(
    d: usize,
    mult: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
    unit: usize,
    comult: impl Fn(usize) -> Vec<(usize, usize, Scalar)>,
    counit: impl Fn(usize) -> Scalar,
) -> Result<(AlgebraData, CoalgebraData), HopfError> {
    let mut m = LinMap::zeros(vec![d, d], vec![d]);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in mult(i, j) {
                let cur = m.get(k, i * d + j) + &c;
                m.set(k, i * d + j, cur);
            }
        }
    }
    let mut dl = LinMap::zeros(vec![d], vec![d, d]);
    let mut e = LinMap::zeros(vec![d], vec![]);
    for i in 0..d {
        for (j, k, c) in comult(i) {
            let cur = dl.get(j * d + k, i) + &c;
            dl.set(j * d + k, i, cur);
        }
        e.set(0, i, counit(i));
    }
    Ok((AlgebraData::new(m, FinVector::basis(d, unit))?, CoalgebraData::new(dl, e)?))
}

/// The group algebra of a finite group given by its Cayley table.
pub fn group_algebra(name: &str, field: Field, cayley: &[Vec<usize>], inverse: Option<&[usize]>, labels: Vec<String>) -> Result<HopfData, HopfError> {
    let n = cayley.len();
    if n == 0 || cayley.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(HopfError::NotAGroup("Cayley table is not a square table over 0..n".into()));
    }
    if labels.len() != n {
        return Err(HopfError::NotAGroup("label count differs from group order".into()));
    }
    let e =
        (0..n).find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x)).ok_or_else(|| HopfError::NotAGroup("no identity element".into()))?;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]] {
                    return Err(HopfError::NotAGroup(format!("not associative at ({}, {}, {})", labels[x], labels[y], labels[z])));
                }
            }
        }
    }
    let inv: Vec<usize> = match inverse {
        Some(p) => {
            if p.len() != n || (0..n).any(|x| p[x] >= n || cayley[x][p[x]] != e || cayley[p[x]][x] != e) {
                return Err(HopfError::NotAGroup("supplied inverse map is wrong".into()));
            }
            p.to_vec()
        }
        None => (0..n)
            .map(|x| (0..n).find(|&y| cayley[x][y] == e && cayley[y][x] == e))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| HopfError::NotAGroup("some element has no inverse".into()))?,
    };
    let (alg, coalg) = structure_from_tables(n, |i, j| vec![(cayley[i][j], Scalar::one())], e, |i| vec![(i, i, Scalar::one())], |_| Scalar::one())?;
    let mut s = LinMap::zeros(vec![n], vec![n]);
    for x in 0..n {
        s.set(inv[x], x, Scalar::one());
    }
    HopfData::new(name, field, labels, alg, coalg, s)
}

/// `k[C_n]` with generator label `gen` (basis `1, gen, gen^2, ...`).
pub fn cyclic_group_algebra(n: usize, gen: &str, field: Field) -> HopfData {
    let cayley: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => gen.to_string(),
            _ => format!("{gen}^{i}"),
        })
        .collect();
    group_algebra(&format!("k[C{n}]"), field, &cayley, None, labels).expect("cyclic group table")
}

/// `k[S_3]` on the permutations of {1,2,3}, identity first.
pub fn s3_group_algebra(field: Field) -> HopfData {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let labels: Vec<String> = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    // (pq)(x) = p(q(x))
    let cayley: Vec<Vec<usize>> =
        (0..6).map(|i| (0..6).map(|j| idx([perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]])).collect()).collect();
    group_algebra("k[S3]", field, &cayley, None, labels).expect("S3 table")
}

/// The one-dimensional Hopf algebra k.
pub fn trivial_hopf(field: Field) -> HopfData {
    group_algebra("k", field, &[vec![0]], None, vec!["1".into()]).expect("trivial group")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx`.
pub fn sweedler_h4(field: Field) -> Result<HopfData, HopfError> {
    // every supported field has characteristic zero; keep the guard explicit
    if Scalar::from_int(2).is_zero() {
        return Err(HopfError::CharTwo);
    }
    let one = Scalar::one;
    let neg = || Scalar::from_int(-1);
    let mult = |i: usize, j: usize| -> Vec<(usize, Scalar)> {
        match (i, j) {
            (0, j) => vec![(j, one())],
            (i, 0) => vec![(i, one())],
            (1, 1) => vec![(0, one())],
            (1, 2) => vec![(3, one())],
            (1, 3) => vec![(2, one())],
            (2, 1) => vec![(3, neg())],
            (3, 1) => vec![(2, neg())],
            _ => vec![],
        }
    };
    let comult = |i: usize| -> Vec<(usize, usize, Scalar)> {
        match i {
            0 => vec![(0, 0, one())],
            1 => vec![(1, 1, one())],
            2 => vec![(1, 2, one()), (2, 0, one())],
            _ => vec![(0, 3, one()), (3, 1, one())],
        }
    };
    let counit = |i: usize| if i < 2 { one() } else { Scalar::zero() };
    let (alg, coalg) = structure_from_tables(4, mult, 0, comult, counit)?;
    let mut s = LinMap::zeros(vec![4], vec![4]);
    s.set(0, 0, one());
    s.set(1, 1, one());
    s.set(3, 2, neg());
    s.set(2, 3, one());
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    HopfData::new("H4", field, labels, alg, coalg, s)
}

pub fn common_field(a: Field, b: Field) -> Result<Field, HopfError> {
    match (a, b) {
        (x, y) if x == y => Ok(x),
        (Field::Rational, y) => Ok(y),
        (x, Field::Rational) => Ok(x),
        (x, y) => Err(HopfError::Field(FieldError::FieldMismatch(x.order(), y.order()))),
    }
}

/// Labels `a#h` for the basis of `A ⊗ H`, A-major.
pub fn product_labels(a: &HopfData, h: &HopfData) -> Vec<String> {
    a.labels.iter().flat_map(|x| h.labels.iter().map(move |y| format!("{x}#{y}"))).collect()
}

/// The tensor product Hopf algebra `A ⊗ H`.
pub fn tensor_hopf(a: &HopfData, h: &HopfData) -> Result<HopfData, HopfError> {
    let field = common_field(a.field, h.field)?;
    let (da, dh) = (a.dim(), h.dim());
    let d = da * dh;
    // multiplication: (A⊗A → A) ⊗ (H⊗H → H) precomposed with the middle flip
    let mid = tensor_map(&tensor_map(&LinMap::identity(vec![da]), &LinMap::flip(dh, da)), &LinMap::identity(vec![dh]));
    let mult = compose(&tensor_map(&a.algebra.mult, &h.algebra.mult), &mid)?.reshape(vec![d, d], vec![d])?;
    let unit = FinVector::new(linalg::kron(a.unit(), h.unit()));
    let mid_co = tensor_map(&tensor_map(&LinMap::identity(vec![da]), &LinMap::flip(da, dh)), &LinMap::identity(vec![dh]));
    let comult = compose(&mid_co, &tensor_map(&a.coalgebra.comult, &h.coalgebra.comult))?.reshape(vec![d], vec![d, d])?;
    let counit = tensor_map(&a.coalgebra.counit, &h.coalgebra.counit).reshape(vec![d], vec![])?;
    let s = tensor_map(&a.antipode, &h.antipode).reshape(vec![d], vec![d])?;
    HopfData::new(
        format!("{}#{}", a.name, h.name),
        field,
        product_labels(a, h),
        AlgebraData::new(mult, unit)?,
        CoalgebraData::new(comult, counit)?,
        s,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Algebra,
    Coalgebra,
    Hopf,
    Iso,
}

/// Checks that `phi: A → B` is an algebra / coalgebra / Hopf map or a Hopf isomorphism.
pub fn map_predicates(phi: &LinMap, a: &HopfData, b: &HopfData, kind: MapKind) -> Result<AxiomReport, LinAlgError> {
    if phi.cols() != a.dim() || phi.rows() != b.dim() {
        return Err(LinAlgError::ShapeMismatch(format!("map is {}x{}, expected {}x{}", phi.rows(), phi.cols(), b.dim(), a.dim())));
    }
    let (da, db) = (a.dim(), b.dim());
    let la = &a.labels[..];
    let img: Vec<Vec<Scalar>> = (0..da).map(|i| phi.column(i)).collect();
    let apply = |x: &[Scalar]| phi.apply(x).expect("shape checked");
    let mut r = AxiomReport::new();
    let alg = matches!(kind, MapKind::Algebra | MapKind::Hopf | MapKind::Iso);
    let coalg = matches!(kind, MapKind::Coalgebra | MapKind::Hopf | MapKind::Iso);
    if alg {
        r.push(check_tuples("multiplicative", &[da, da], &[la, la], |t| {
            apply(&a.mul(&a.basis_vec(t[0]), &a.basis_vec(t[1]))) == b.mul(&img[t[0]], &img[t[1]])
        }));
        r.push(AxiomEntry::from_bool("unital", apply(a.unit()) == b.unit()));
    }
    if coalg {
        r.push(check_tuples("comultiplicative", &[da], &[la], |t| {
            let lhs = b.coalgebra.delta(&img[t[0]]);
            let mut rhs = vec![Scalar::zero(); db * db];
            for (j, k, c) in a.delta_basis(t[0]) {
                axpy(&mut rhs, c, &linalg::kron(&img[*j], &img[*k]));
            }
            lhs == rhs
        }));
        r.push(check_tuples("counital", &[da], &[la], |t| b.eps(&img[t[0]]) == *a.eps_basis(t[0])));
    }
    if matches!(kind, MapKind::Hopf | MapKind::Iso) {
        r.push(check_tuples("antipode_commutes", &[da], &[la], |t| apply(&a.s(&a.basis_vec(t[0]))) == b.s(&img[t[0]])));
    }
    if kind == MapKind::Iso {
        r.push(AxiomEntry::from_bool("bijective", da == db && invert(phi).is_ok()));
    }
    Ok(r)
}

pub fn is_grouplike(h: &HopfData, z: &[Scalar]) -> bool {
    h.eps(z).is_one() && h.coalgebra.delta(z) == linalg::kron(z, z)
}

/// `S ∘ S`.
pub fn antipode_squared(h: &HopfData) -> LinMap {
    compose(&h.antipode, &h.antipode).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn presets_verify() {
        for h in [
            cyclic_group_algebra(3, "a", q()),
            cyclic_group_algebra(2, "s", q()),
            s3_group_algebra(q()),
            sweedler_h4(q()).unwrap(),
            trivial_hopf(q()),
        ] {
            let r = verify_hopf(&h);
            assert!(r.all_passed(), "{}: {r}", h.name);
        }
    }

    #[test]
    fn h4_facts() {
        let h = sweedler_h4(q()).unwrap();
        let gx = h.basis_vec(3);
        assert!(h.mul(&gx, &gx).iter().all(Scalar::is_zero));
        assert!(!h.is_commutative());
        assert!(!h.is_cocommutative());
        assert_eq!(h.s(&h.basis_vec(2)), FinVector::from_ints(&[0, 0, 0, -1]).coords);
        assert_eq!(h.s(&h.basis_vec(1)), h.basis_vec(1));
        assert!(is_grouplike(&h, &h.basis_vec(0)));
        assert!(is_grouplike(&h, &h.basis_vec(1)));
        assert!(!is_grouplike(&h, &h.basis_vec(2)));
    }

    #[test]
    fn derived_antipodes_match() {
        let c3 = cyclic_group_algebra(3, "a", q());
        let s = derive_antipode(&c3).unwrap();
        assert_eq!(s.column(1), c3.basis_vec(2));
        let h4 = sweedler_h4(q()).unwrap();
        assert!(derive_antipode(&h4).unwrap().same_matrix(&h4.antipode));
        let t = tensor_hopf(&h4, &c3).unwrap();
        assert!(derive_antipode(&t).unwrap().same_matrix(&t.antipode));
    }

    #[test]
    fn corrupted_h4() {
        let h = sweedler_h4(q()).unwrap();
        // xg = +gx
        let mut m = h.algebra.mult.clone();
        m.set(3, 2 * 4 + 1, Scalar::one());
        let bad = AlgebraData::new(m, h.algebra.unit.clone()).unwrap();
        assert!(!verify_algebra(&bad).passed("associativity"));
        // Δ(x) = x ⊗ x
        let mut d = h.coalgebra.comult.clone();
        d.set(4 + 2, 2, Scalar::zero());
        d.set(2 * 4, 2, Scalar::zero());
        d.set(2 * 4 + 2, 2, Scalar::one());
        let bad = CoalgebraData::new(d, h.coalgebra.counit.clone()).unwrap();
        let r = verify_coalgebra(&bad);
        assert!(!r.passed("left_counit"));
        // S(x) = +gx
        let mut s = h.antipode.clone();
        s.set(3, 2, Scalar::one());
        let bad = HopfData::new("bad", q(), h.labels.clone(), h.algebra.clone(), h.coalgebra.clone(), s).unwrap();
        let r = verify_hopf(&bad);
        assert!(!r.passed("antipode_left") || !r.passed("antipode_right"));
    }

    #[test]
    fn sweedler_expand_h4() {
        let h = sweedler_h4(q()).unwrap();
        let x = h.basis_vec(2);
        assert_eq!(sweedler_expand(&h.coalgebra, &x, 1), x);
        let v = sweedler_expand(&h.coalgebra, &x, 3);
        let mut expect = vec![Scalar::zero(); 64];
        for (a, b, c) in [(1, 1, 2), (1, 2, 0), (2, 0, 0)] {
            expect[(a * 4 + b) * 4 + c] = Scalar::one();
        }
        assert_eq!(v, expect);
        assert_eq!(sweedler_expand_left(&h.coalgebra, &x, 3), expect);
    }

    #[test]
    fn group_checks() {
        assert!(matches!(group_algebra("bad", q(), &[vec![0, 0], vec![0, 1]], None, vec!["a".into(), "b".into()]), Err(HopfError::NotAGroup(_))));
        let s3 = s3_group_algebra(q());
        assert!(s3.is_cocommutative());
        assert!(!s3.is_commutative());
    }

    #[test]
    fn tensor_of_c2s_is_klein() {
        let c2 = cyclic_group_algebra(2, "s", q());
        let t = tensor_hopf(&c2, &c2).unwrap();
        assert!(verify_hopf(&t).all_passed());
        for i in 0..4 {
            assert!(is_grouplike(&t, &t.basis_vec(i)));
            let sq = t.mul(&t.basis_vec(i), &t.basis_vec(i));
            assert_eq!(sq, t.basis_vec(0));
        }
        assert!(t.is_commutative());
    }

    #[test]
    fn map_kinds() {
        let h = sweedler_h4(q()).unwrap();
        let r = map_predicates(&h.identity_map(), &h, &h, MapKind::Iso).unwrap();
        assert!(r.all_passed(), "{r}");
        let zero = LinMap::zeros(vec![4], vec![4]);
        assert!(!map_predicates(&zero, &h, &h, MapKind::Algebra).unwrap().all_passed());
    }
}
