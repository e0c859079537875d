//! JSON documents for Hopf algebras, crossed systems, pairings, braiding
//! quadruples and linear maps.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braiding::{BraidingError, BraidingQuadruple, Monomial, PairingData, PairingTemplate, QuadrupleTemplate};
use crate::crossed::{CrossedError, CrossedSystemData};
use crate::field::{parse_scalar, Field, FieldError, Scalar};
use crate::hopf::{AlgebraData, CoalgebraData, HopfData, HopfError};
use crate::linalg::{FinVector, LinAlgError, LinMap};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error(transparent)]
    Braiding(#[from] BraidingError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopfDoc {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub basis_labels: Vec<String>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, usize, String)>>,
}

/// An inline document or a path relative to the referring file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Path(String),
    Doc(Box<HopfDoc>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossedDoc {
    #[serde(rename = "A")]
    pub a: HopfRef,
    #[serde(rename = "H")]
    pub h: HopfRef,
    pub action: Vec<(usize, usize, usize, String)>,
    pub cocycle: Vec<(usize, usize, usize, String)>,
}

/// Sides are `"A"`, `"H"` or `"A#H"` relative to a crossed system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub left: String,
    pub right: String,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadrupleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub p: PairingDoc,
    pub tau: PairingDoc,
    pub u: PairingDoc,
    pub v: PairingDoc,
}

/// A linear map by images of basis vectors: `[i, j, s]` means `φ(eᵢ) ⊇ s·fⱼ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapDoc {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub entries: Vec<(usize, usize, String)>,
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

fn parse_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|source| IoError::Json { path: path.display().to_string(), source })
}

/// The smaller field containing both, when one of them is Q.
pub fn join_fields(a: Field, b: Field) -> Result<Field, IoError> {
    match (a, b) {
        (Field::Rational, f) | (f, Field::Rational) => Ok(f),
        (f, g) if f == g => Ok(f),
        (f, g) => Err(IoError::Invalid(format!("fields {f:?} and {g:?} differ"))),
    }
}

fn scalar(text: &str, field: Field) -> Result<Scalar, IoError> {
    Ok(parse_scalar(text, field)?)
}

fn check_index(i: usize, bound: usize, what: &str) -> Result<(), IoError> {
    if i >= bound {
        return Err(IoError::Invalid(format!("{what} index {i} out of range 0..{bound}")));
    }
    Ok(())
}

impl HopfDoc {
    /// Builds the Hopf algebra over `field` (the document's field when `None`).
    pub fn to_hopf(&self, field: Option<Field>) -> Result<HopfData, IoError> {
        let field = match field {
            Some(f) => join_fields(self.field, f)?,
            None => self.field,
        };
        let d = self.dim;
        if self.basis_labels.len() != d || self.unit.len() != d || self.counit.len() != d {
            return Err(IoError::Invalid(format!("{}: labels, unit and counit must have length {d}", self.name)));
        }
        let unit = FinVector::new(self.unit.iter().map(|s| scalar(s, field)).collect::<Result<_, _>>()?);
        let mut counit = LinMap::zeros(vec![d], vec![]);
        for (i, s) in self.counit.iter().enumerate() {
            counit.set(0, i, scalar(s, field)?);
        }
        let mut mult = LinMap::zeros(vec![d, d], vec![d]);
        for (i, j, k, s) in &self.mult {
            for x in [i, j, k] {
                check_index(*x, d, "mult")?;
            }
            mult.set(*k, i * d + j, scalar(s, field)?);
        }
        let mut comult = LinMap::zeros(vec![d], vec![d, d]);
        for (i, j, k, s) in &self.comult {
            for x in [i, j, k] {
                check_index(*x, d, "comult")?;
            }
            comult.set(j * d + k, *i, scalar(s, field)?);
        }
        let algebra = AlgebraData::new(mult, unit)?;
        let coalgebra = CoalgebraData::new(comult, counit)?;
        let labels = self.basis_labels.clone();
        match &self.antipode {
            Some(entries) => {
                let mut s_map = LinMap::zeros(vec![d], vec![d]);
                for (i, j, s) in entries {
                    check_index(*i, d, "antipode")?;
                    check_index(*j, d, "antipode")?;
                    s_map.set(*j, *i, scalar(s, field)?);
                }
                Ok(HopfData::new(&self.name, field, labels, algebra, coalgebra, s_map)?)
            }
            None => Ok(HopfData::with_derived_antipode(&self.name, field, labels, algebra, coalgebra)?),
        }
    }

    pub fn from_hopf(h: &HopfData) -> Self {
        let d = h.dim();
        let mut mult = vec![];
        for i in 0..d {
            for j in 0..d {
                let mut terms = h.mul_basis(i, j).to_vec();
                terms.sort_by_key(|(k, _)| *k);
                mult.extend(terms.into_iter().map(|(k, c)| (i, j, k, c.to_string())));
            }
        }
        let mut comult = vec![];
        for i in 0..d {
            let mut terms = h.delta_basis(i).to_vec();
            terms.sort_by_key(|(j, k, _)| (*j, *k));
            comult.extend(terms.into_iter().map(|(j, k, c)| (i, j, k, c.to_string())));
        }
        let mut antipode = vec![];
        for i in 0..d {
            let mut terms = h.s_basis(i).to_vec();
            terms.sort_by_key(|(j, _)| *j);
            antipode.extend(terms.into_iter().map(|(j, c)| (i, j, c.to_string())));
        }
        HopfDoc {
            name: h.name.clone(),
            field: h.field,
            dim: d,
            basis_labels: h.labels.clone(),
            unit: h.unit().iter().map(Scalar::to_string).collect(),
            counit: (0..d).map(|i| h.eps_basis(i).to_string()).collect(),
            mult,
            comult,
            antipode: Some(antipode),
        }
    }
}

fn resolve(r: &HopfRef, base: &Path, field: Option<Field>) -> Result<HopfData, IoError> {
    match r {
        HopfRef::Doc(d) => d.to_hopf(field),
        HopfRef::Path(p) => load_hopf(&base.join(p), field),
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn load_hopf(path: &Path, field: Option<Field>) -> Result<HopfData, IoError> {
    parse_json::<HopfDoc>(path)?.to_hopf(field)
}

pub fn hopf_json(h: &HopfData) -> String {
    to_json(&HopfDoc::from_hopf(h))
}

/// Pretty JSON with a trailing newline; field order is fixed by the types.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

impl CrossedDoc {
    pub fn to_system(&self, base: &Path, field: Option<Field>) -> Result<CrossedSystemData, IoError> {
        let a0 = resolve(&self.a, base, field)?;
        let h0 = resolve(&self.h, base, field)?;
        let f = join_fields(a0.field, h0.field)?;
        let a = resolve(&self.a, base, Some(f))?;
        let h = resolve(&self.h, base, Some(f))?;
        let (da, dh) = (a.dim(), h.dim());
        let mut act = LinMap::zeros(vec![dh, da], vec![da]);
        for (x, i, out, s) in &self.action {
            check_index(*x, dh, "action H")?;
            check_index(*i, da, "action A")?;
            check_index(*out, da, "action output")?;
            act.set(*out, x * da + i, scalar(s, f)?);
        }
        let mut cocycle = LinMap::zeros(vec![dh, dh], vec![da]);
        for (x, y, out, s) in &self.cocycle {
            check_index(*x, dh, "cocycle H")?;
            check_index(*y, dh, "cocycle H")?;
            check_index(*out, da, "cocycle output")?;
            cocycle.set(*out, x * dh + y, scalar(s, f)?);
        }
        Ok(CrossedSystemData::new(a, h, act, cocycle)?)
    }

    pub fn from_system(s: &CrossedSystemData) -> Self {
        let (da, dh) = (s.da(), s.dh());
        let mut action = vec![];
        let mut cocycle = vec![];
        for x in 0..dh {
            for i in 0..da {
                for (out, c) in s.act.column_sparse(x * da + i) {
                    action.push((x, i, out, c.to_string()));
                }
            }
            for y in 0..dh {
                for (out, c) in s.cocycle.column_sparse(x * dh + y) {
                    cocycle.push((x, y, out, c.to_string()));
                }
            }
        }
        CrossedDoc { a: HopfRef::Doc(Box::new(HopfDoc::from_hopf(&s.a))), h: HopfRef::Doc(Box::new(HopfDoc::from_hopf(&s.h))), action, cocycle }
    }
}

pub fn load_system(path: &Path, field: Option<Field>) -> Result<CrossedSystemData, IoError> {
    parse_json::<CrossedDoc>(path)?.to_system(&base_dir(path), field)
}

pub fn system_json(s: &CrossedSystemData) -> String {
    to_json(&CrossedDoc::from_system(s))
}

fn side_dim(side: &str, s: &CrossedSystemData) -> Result<usize, IoError> {
    match side {
        "A" => Ok(s.da()),
        "H" => Ok(s.dh()),
        "A#H" => Ok(s.product_dim()),
        other => Err(IoError::Invalid(format!("unknown pairing side {other:?}; expected A, H or A#H"))),
    }
}

impl PairingDoc {
    pub fn to_pairing(&self, s: &CrossedSystemData, field: Field) -> Result<PairingData, IoError> {
        let (l, r) = (side_dim(&self.left, s)?, side_dim(&self.right, s)?);
        let mut p = PairingData::zeros(l, r);
        for (i, j, v) in &self.entries {
            check_index(*i, l, "pairing left")?;
            check_index(*j, r, "pairing right")?;
            p.set(*i, *j, scalar(v, field)?);
        }
        Ok(p)
    }

    pub fn from_pairing(p: &PairingData, left: &str, right: &str) -> Self {
        let mut entries = vec![];
        for i in 0..p.left_dim {
            for j in 0..p.right_dim {
                let c = p.get(i, j);
                if !c.is_zero() {
                    entries.push((i, j, c.to_string()));
                }
            }
        }
        PairingDoc { field: None, left: left.into(), right: right.into(), entries }
    }

    fn expect_sides(&self, name: &str, left: &str, right: &str) -> Result<(), IoError> {
        if self.left != left || self.right != right {
            return Err(IoError::Invalid(format!("{name} must pair {left} with {right}")));
        }
        Ok(())
    }
}

/// Field of a quadruple document joined with the system's field.
pub fn quadruple_field(path: &Path, s: &CrossedSystemData) -> Result<Field, IoError> {
    let doc: QuadrupleDoc = parse_json(path)?;
    let sys = join_fields(s.a.field, s.h.field)?;
    match doc.field {
        Some(f) => join_fields(sys, f),
        None => Ok(sys),
    }
}

pub fn load_quadruple(path: &Path, s: &CrossedSystemData, field: Field) -> Result<BraidingQuadruple, IoError> {
    let doc: QuadrupleDoc = parse_json(path)?;
    doc.p.expect_sides("p", "A", "A")?;
    doc.tau.expect_sides("tau", "H", "H")?;
    doc.u.expect_sides("u", "A", "H")?;
    doc.v.expect_sides("v", "H", "A")?;
    Ok(BraidingQuadruple {
        p: doc.p.to_pairing(s, field)?,
        tau: doc.tau.to_pairing(s, field)?,
        u: doc.u.to_pairing(s, field)?,
        v: doc.v.to_pairing(s, field)?,
    })
}

pub fn quadruple_json(q: &BraidingQuadruple, field: Option<Field>) -> String {
    to_json(&QuadrupleDoc {
        field,
        p: PairingDoc::from_pairing(&q.p, "A", "A"),
        tau: PairingDoc::from_pairing(&q.tau, "H", "H"),
        u: PairingDoc::from_pairing(&q.u, "A", "H"),
        v: PairingDoc::from_pairing(&q.v, "H", "A"),
    })
}

/// Loads a pairing over `field` joined with the document's own field.
pub fn load_pairing(path: &Path, s: &CrossedSystemData, field: Field) -> Result<PairingData, IoError> {
    let doc: PairingDoc = parse_json(path)?;
    let f = match doc.field {
        Some(g) => join_fields(field, g)?,
        None => field,
    };
    doc.to_pairing(s, f)
}

pub fn pairing_json(p: &PairingData, left: &str, right: &str, field: Option<Field>) -> String {
    to_json(&PairingDoc { field, ..PairingDoc::from_pairing(p, left, right) })
}

impl MapDoc {
    pub fn to_map(&self, field: Field) -> Result<LinMap, IoError> {
        let mut m = LinMap::zeros(vec![self.domain_dim], vec![self.codomain_dim]);
        for (i, j, s) in &self.entries {
            check_index(*i, self.domain_dim, "map domain")?;
            check_index(*j, self.codomain_dim, "map codomain")?;
            m.set(*j, *i, scalar(s, field)?);
        }
        Ok(m)
    }

    pub fn from_map(m: &LinMap, labels: Option<Vec<String>>) -> Self {
        let mut entries = vec![];
        for i in 0..m.cols() {
            for (j, c) in m.column_sparse(i) {
                entries.push((i, j, c.to_string()));
            }
        }
        MapDoc { domain_dim: m.cols(), codomain_dim: m.rows(), labels, entries }
    }
}

pub fn load_map(path: &Path, field: Field) -> Result<(LinMap, Option<Vec<String>>), IoError> {
    let doc: MapDoc = parse_json(path)?;
    Ok((doc.to_map(field)?, doc.labels))
}

pub fn map_json(m: &LinMap, labels: Option<Vec<String>>) -> String {
    to_json(&MapDoc::from_map(m, labels))
}

/// `[i, j, "c", [e0, e1, ...]]` adds `c · x0^e0 · x1^e1 ...` to entry `(i, j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingTemplateDoc {
    pub left: String,
    pub right: String,
    pub entries: Vec<(usize, usize, String, Vec<u32>)>,
}

/// A parametrized quadruple with one candidate list per unknown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TemplateDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Field>,
    pub unknowns: Vec<String>,
    pub candidates: Vec<Vec<String>>,
    pub p: PairingTemplateDoc,
    pub tau: PairingTemplateDoc,
    pub u: PairingTemplateDoc,
    pub v: PairingTemplateDoc,
}

impl PairingTemplateDoc {
    fn to_template(
        &self,
        name: &str,
        left: &str,
        right: &str,
        s: &CrossedSystemData,
        field: Field,
        unknowns: usize,
    ) -> Result<PairingTemplate, IoError> {
        if self.left != left || self.right != right {
            return Err(IoError::Invalid(format!("{name} must pair {left} with {right}")));
        }
        let (l, r) = (side_dim(left, s)?, side_dim(right, s)?);
        let mut t = PairingTemplate { left_dim: l, right_dim: r, entries: vec![vec![]; l * r] };
        for (i, j, c, powers) in &self.entries {
            check_index(*i, l, "template left")?;
            check_index(*j, r, "template right")?;
            if powers.len() > unknowns {
                return Err(IoError::Invalid(format!("{name}: monomial has more exponents than unknowns")));
            }
            t.entries[i * r + j].push(Monomial { coeff: scalar(c, field)?, powers: powers.clone() });
        }
        Ok(t)
    }
}

impl TemplateDoc {
    pub fn field(&self, s: &CrossedSystemData) -> Result<Field, IoError> {
        let sys = join_fields(s.a.field, s.h.field)?;
        self.field.map_or(Ok(sys), |f| join_fields(sys, f))
    }

    pub fn to_template(&self, s: &CrossedSystemData, field: Field) -> Result<(QuadrupleTemplate, Vec<Vec<Scalar>>), IoError> {
        let k = self.unknowns.len();
        if self.candidates.len() != k {
            return Err(IoError::Invalid(format!("{} candidate lists for {k} unknowns", self.candidates.len())));
        }
        let template = QuadrupleTemplate {
            unknowns: self.unknowns.clone(),
            p: self.p.to_template("p", "A", "A", s, field, k)?,
            tau: self.tau.to_template("tau", "H", "H", s, field, k)?,
            u: self.u.to_template("u", "A", "H", s, field, k)?,
            v: self.v.to_template("v", "H", "A", s, field, k)?,
        };
        let candidates =
            self.candidates.iter().map(|c| c.iter().map(|t| scalar(t, field)).collect::<Result<Vec<_>, _>>()).collect::<Result<_, _>>()?;
        Ok((template, candidates))
    }

    pub fn from_template(t: &QuadrupleTemplate, candidates: &[Vec<Scalar>], field: Option<Field>) -> Self {
        let side = |p: &PairingTemplate, left: &str, right: &str| {
            let mut entries = vec![];
            for (n, ms) in p.entries.iter().enumerate() {
                for m in ms {
                    entries.push((n / p.right_dim, n % p.right_dim, m.coeff.to_string(), m.powers.clone()));
                }
            }
            PairingTemplateDoc { left: left.into(), right: right.into(), entries }
        };
        TemplateDoc {
            field,
            unknowns: t.unknowns.clone(),
            candidates: candidates.iter().map(|c| c.iter().map(Scalar::to_string).collect()).collect(),
            p: side(&t.p, "A", "A"),
            tau: side(&t.tau, "H", "H"),
            u: side(&t.u, "A", "H"),
            v: side(&t.v, "H", "A"),
        }
    }
}

pub fn load_template(path: &Path) -> Result<TemplateDoc, IoError> {
    parse_json(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::sweedler_h4;
    use crate::presets::h4_c3_system;

    #[test]
    fn hopf_round_trip() {
        let h = sweedler_h4(Field::Rational).unwrap();
        let text = hopf_json(&h);
        let doc: HopfDoc = serde_json::from_str(&text).unwrap();
        let back = doc.to_hopf(None).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.labels, h.labels);
        assert_eq!(hopf_json(&back), text);
    }

    #[test]
    fn system_round_trip() {
        let s = h4_c3_system(Field::Rational);
        let doc: CrossedDoc = serde_json::from_str(&system_json(&s)).unwrap();
        assert_eq!(doc.to_system(Path::new("."), None).unwrap(), s);
        let lifted = doc.to_system(Path::new("."), Some(Field::cyclotomic(3))).unwrap();
        assert_eq!(lifted.a.field, Field::cyclotomic(3));
    }

    #[test]
    fn field_join() {
        assert!(join_fields(Field::cyclotomic(3), Field::cyclotomic(4)).is_err());
        assert_eq!(join_fields(Field::Rational, Field::cyclotomic(4)).unwrap(), Field::cyclotomic(4));
    }
}
