//! Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).
//!
//! An element of Q(zeta_n) is stored by its coordinates in the power basis
//! `1, z, ..., z^(phi(n)-1)` reduced modulo the n-th cyclotomic polynomial,
//! so equality is coefficient equality. Elements whose value is rational are
//! always stored with order 1; they embed into every cyclotomic field, which
//! is what lets structure constants such as `-1` or `1/2` mix freely with
//! `z` inside one session.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars live in different cyclotomic fields (orders {0} and {1})")]
    FieldMismatch(u32, u32),
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// The ground field of a session.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Cyclotomic { n: u32 },
}

impl Field {
    pub fn cyclotomic(n: u32) -> Self {
        Field::Cyclotomic { n }
    }

    /// The order of the adjoined root of unity (1 for Q).
    pub fn order(&self) -> u32 {
        match *self {
            Field::Rational => 1,
            Field::Cyclotomic { n } => n,
        }
    }

    /// Whether a scalar can be interpreted in this field.
    pub fn contains(&self, x: &Scalar) -> bool {
        x.order == 1 || x.order == self.order()
    }

    pub fn parse(&self, text: &str) -> Result<Scalar, FieldError> {
        parse_scalar(text, *self)
    }

    /// The primitive root `z` of this field, if it has one beyond Q.
    pub fn generator(&self) -> Option<Scalar> {
        match *self {
            Field::Rational => None,
            Field::Cyclotomic { n } => Some(zeta(n, 1)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Field::Rational => write!(f, "rational"),
            Field::Cyclotomic { n } => write!(f, "cyclotomic:{n}"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    /// Accepts `rational`, `q`, `cyclotomic:N` and `qN` (e.g. `q3`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        let bad = |reason: &str| FieldError::Parse { text: s.to_string(), reason: reason.into() };
        if t == "rational" || t == "q" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("cyclotomic:")
            .or_else(|| t.strip_prefix("cyclotomic"))
            .or_else(|| t.strip_prefix('q'))
            .ok_or_else(|| bad("expected `rational` or `cyclotomic:N`"))?;
        let n: u32 = digits.trim().parse().map_err(|_| bad("bad cyclotomic order"))?;
        if n == 0 {
            return Err(bad("cyclotomic order must be positive"));
        }
        Ok(if n == 1 { Field::Rational } else { Field::Cyclotomic { n } })
    }
}

/// Precomputed reduction data for Z[x]/Phi_n.
#[derive(Debug)]
struct CycloRing {
    phi: usize,
    /// `reduce[k]` holds `x^(phi + k) mod Phi_n` as integer coordinates.
    reduce: Vec<Vec<BigInt>>,
}

fn ring(n: u32) -> Arc<CycloRing> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloRing>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(r) = cache.read().expect("cyclotomic cache poisoned").get(&n) {
        return r.clone();
    }
    let built = Arc::new(build_ring(n));
    cache.write().expect("cyclotomic cache poisoned").entry(n).or_insert(built).clone()
}

fn build_ring(n: u32) -> CycloRing {
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    // x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1}) since Phi_n is monic.
    let mut reduce = Vec::with_capacity(phi.saturating_sub(1).max(1));
    let mut cur: Vec<BigInt> = poly[..phi].iter().map(|c| -c).collect();
    for _ in 0..phi.max(1) {
        reduce.push(cur.clone());
        // multiply by x and reduce once
        let top = cur[phi - 1].clone();
        let mut next = vec![BigInt::zero(); phi];
        for i in (1..phi).rev() {
            next[i] = cur[i - 1].clone();
        }
        for i in 0..phi {
            next[i] -= &top * &poly[i];
        }
        cur = next;
    }
    CycloRing { phi, reduce }
}

/// Coefficients (ascending) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = num.len() - 1 - dd;
    let mut q = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, di) in den.iter().enumerate() {
                rem[k + i] -= &c * di;
            }
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An exact scalar in Q or Q(zeta_n).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { order: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar { order: 1, coeffs: vec![q] }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Builds an element of Q(zeta_n) from arbitrary-length power-basis
    /// coordinates, reducing modulo Phi_n.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(n >= 1);
        if n <= 2 {
            // zeta_1 = 1, zeta_2 = -1
            let z = if n == 1 { BigRational::one() } else { -BigRational::one() };
            let mut acc = BigRational::zero();
            let mut pow = BigRational::one();
            for c in coeffs {
                acc += c * &pow;
                pow *= &z;
            }
            return Self::from_rational(acc);
        }
        let r = ring(n);
        let mut low: Vec<BigRational> = vec![BigRational::zero(); r.phi];
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = k % n as usize;
            if e < r.phi {
                low[e] += c;
            } else {
                add_reduced_power(&r, &mut low, e, &c);
            }
        }
        Self::normalize(n, low)
    }

    fn normalize(n: u32, coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            let c = coeffs.into_iter().next().unwrap_or_else(BigRational::zero);
            Scalar { order: 1, coeffs: vec![c] }
        } else {
            Scalar { order: n, coeffs }
        }
    }

    /// Order of the cyclotomic field the value needs (1 when rational).
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length phi(order).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    fn common_order(&self, other: &Scalar) -> Result<u32, FieldError> {
        match (self.order, other.order) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(FieldError::FieldMismatch(a, b)),
        }
    }

    fn lifted(&self, n: u32) -> Vec<BigRational> {
        if self.order == n {
            return self.coeffs.clone();
        }
        let phi = euler_phi(n) as usize;
        let mut v = vec![BigRational::zero(); phi];
        v[0] = self.coeffs[0].clone();
        v
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        let n = self.common_order(other)?;
        if n == 1 {
            return Ok(Self::from_rational(&self.coeffs[0] + &other.coeffs[0]));
        }
        let mut a = self.lifted(n);
        if other.order == 1 {
            a[0] += &other.coeffs[0];
        } else {
            for (x, y) in a.iter_mut().zip(&other.coeffs) {
                *x += y;
            }
        }
        Ok(Self::normalize(n, a))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        let n = self.common_order(other)?;
        if self.order == 1 || other.order == 1 {
            let (r, v) = if self.order == 1 { (&self.coeffs[0], other) } else { (&other.coeffs[0], self) };
            if r.is_zero() {
                return Ok(Scalar::zero());
            }
            let coeffs = v.coeffs.iter().map(|c| c * r).collect();
            return Ok(Self::normalize(v.order, coeffs));
        }
        let r = ring(n);
        let phi = r.phi;
        let mut full = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    full[i + j] += a * b;
                }
            }
        }
        let mut low: Vec<BigRational> = full.drain(..phi).collect();
        for (k, c) in full.into_iter().enumerate() {
            if !c.is_zero() {
                for (slot, t) in low.iter_mut().zip(&r.reduce[k]) {
                    if !t.is_zero() {
                        *slot += &c * BigRational::from_integer(t.clone());
                    }
                }
            }
        }
        Ok(Self::normalize(n, low))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // Solve (multiplication by self) * c = e_0 over Q.
        let n = self.order;
        let phi = self.coeffs.len();
        let z = zeta(n, 1);
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        let mut cur = self.clone();
        for _ in 0..phi {
            cols.push(cur.lifted(n));
            cur = &cur * &z;
        }
        let mut m: Vec<Vec<BigRational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(FieldError::DivisionByZero)?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..=phi {
                        let delta = &factor * &m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        let sol = m.into_iter().map(|row| row[phi].clone()).collect();
        Ok(Self::normalize(n, sol))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Scalar, FieldError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Canonical text: lowest terms, ascending powers of `z`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn add_reduced_power(r: &CycloRing, low: &mut [BigRational], e: usize, c: &BigRational) {
    // x^e with phi <= e: reduce by repeated use of the table.
    let phi = r.phi;
    let mut v = vec![BigRational::zero(); phi];
    v[0] = BigRational::one();
    let mut shift = e;
    // build x^e by stepping through the reduction table in chunks
    let mut cur: Vec<BigRational> = vec![BigRational::zero(); phi];
    if shift < phi {
        cur[shift] = BigRational::one();
    } else {
        cur = r.reduce[0].iter().map(|t| BigRational::from_integer(t.clone())).collect();
        shift -= phi;
        for _ in 0..shift {
            let top = cur[phi - 1].clone();
            let mut next = vec![BigRational::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for (slot, t) in next.iter_mut().zip(&r.reduce[0]) {
                    *slot += &top * BigRational::from_integer(t.clone());
                }
            }
            cur = next;
        }
    }
    drop(v);
    for (slot, t) in low.iter_mut().zip(cur) {
        *slot += t * c;
    }
}

/// `zeta_n^power` in canonical form.
pub fn zeta(n: u32, power: i64) -> Scalar {
    assert!(n >= 1, "zeta order must be positive");
    let e = power.rem_euclid(n as i64) as usize;
    let mut coeffs = vec![BigRational::zero(); e + 1];
    coeffs[e] = BigRational::one();
    Scalar::from_coeffs(n, coeffs)
}

/// Binary operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(x: &Scalar, y: &Scalar, op: ArithOp) -> Result<Scalar, FieldError> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            let term = match k {
                0 => fmt_rational(&mag),
                _ => {
                    let zpart = if k == 1 { "z".to_string() } else { format!("z^{k}") };
                    if mag.is_one() {
                        zpart
                    } else {
                        format!("{}*{}", fmt_rational(&mag), zpart)
                    }
                }
            };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.order == rhs.order && self.order != 1 {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
            if self.coeffs.iter().skip(1).all(Zero::is_zero) {
                self.coeffs.truncate(1);
                self.order = 1;
            }
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self += &-rhs;
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

/// Parses `text` in the field of order `field`. Grammar:
///
/// ```text
/// expr   := term (('+'|'-') term)*
/// term   := ('+'|'-')? factor ('*' factor)*
/// factor := INT ('/' POSINT)? | 'z' ('^' INT)? | '(' expr ')'
/// ```
///
/// `z` denotes zeta_n and is rejected over Q.
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar, FieldError> {
    let norm: String = text.replace('\u{2212}', "-");
    let raw: Vec<char> = norm.chars().collect();
    for w in raw.windows(3) {
        if w[0].is_ascii_alphanumeric() && w[1].is_whitespace() && w[2].is_ascii_alphanumeric() {
            return Err(FieldError::Parse { text: text.to_string(), reason: "missing operator between terms".into() });
        }
    }
    let mut p = Parser { src: text, chars: norm.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, field };
    if p.chars.is_empty() {
        return Err(p.err("empty input"));
    }
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing characters"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    field: Field,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> FieldError {
        FieldError::Parse { text: self.src.to_string(), reason: format!("{reason} at offset {}", self.pos) }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, FieldError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' | '-' => {
                    let t = self.term()?;
                    acc = acc.checked_add(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar, FieldError> {
        let mut negate = false;
        while let Some(c @ ('+' | '-')) = self.peek() {
            if c == '-' {
                negate = !negate;
            }
            self.pos += 1;
        }
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(if negate { -acc } else { acc })
    }

    fn integer(&mut self) -> Result<BigInt, FieldError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&s).map_err(|_| self.err("bad integer"))
    }

    fn factor(&mut self) -> Result<Scalar, FieldError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some('z') => {
                self.pos += 1;
                let n = match self.field {
                    Field::Rational => return Err(self.err("`z` is not available over the rationals")),
                    Field::Cyclotomic { n } => n,
                };
                let mut e: i64 = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some('-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let k = self.integer()?.to_i64().ok_or_else(|| self.err("exponent too large"))?;
                    e = if neg { -k } else { k };
                }
                Ok(zeta(n, e))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(FieldError::ZeroDenominator(self.src.to_string()));
                    }
                    Ok(Scalar::from_rational(BigRational::new(num, den)))
                } else {
                    Ok(Scalar::from_rational(BigRational::from_integer(num)))
                }
            }
            _ => Err(self.err("expected number, `z` or '('")),
        }
    }
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` for `n >= 0`.
pub fn factorial(n: i64) -> BigInt {
    (1..=n.max(0)).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Gcd helper used by tests that want to check reduced forms.
pub fn is_reduced(q: &BigRational) -> bool {
    q.numer().gcd(q.denom()).is_one() && q.denom().is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3(s: &str) -> Scalar {
        parse_scalar(s, Field::cyclotomic(3)).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
    }

    #[test]
    fn cube_roots() {
        let z = zeta(3, 1);
        let z2 = zeta(3, 2);
        assert_eq!(&z * &z2, Scalar::one());
        assert_eq!(&z + &z2, Scalar::from_int(-1));
        assert_eq!(z.coeffs(), &[BigRational::zero(), BigRational::one()]);
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta(4, 2), Scalar::from_int(-1));
        assert_eq!(zeta(3, 3), Scalar::one());
        assert_eq!(zeta(3, -1), zeta(3, 2));
        assert_eq!(zeta(6, 3), Scalar::from_int(-1));
    }

    #[test]
    fn zeta_exact_order() {
        for n in [3u32, 4, 5, 6, 7, 8, 9, 12] {
            let z = zeta(n, 1);
            for k in 1..n {
                assert!(!z.pow(k as i64).unwrap().is_one(), "zeta_{n}^{k} = 1");
            }
            assert!(z.pow(n as i64).unwrap().is_one());
        }
    }

    #[test]
    fn cyclotomic_polys() {
        let p = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_scalar("\u{2212}1/2", Field::Rational).unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(parse_scalar("-1/2", Field::Rational).unwrap(), Scalar::ratio(-1, 2));
        assert!(q3("z^2+z+1").is_zero());
        let v = parse_scalar("2*z", Field::cyclotomic(4)).unwrap();
        assert_eq!(v, &Scalar::from_int(2) * &zeta(4, 1));
        assert_eq!(v.order(), 4);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_scalar("1/0", Field::Rational), Err(FieldError::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("z", Field::Rational), Err(FieldError::Parse { .. })));
        assert!(matches!(parse_scalar("1+", Field::Rational), Err(FieldError::Parse { .. })));
        assert!(matches!(parse_scalar("", Field::Rational), Err(FieldError::Parse { .. })));
        assert!(matches!(parse_scalar("3 4", Field::Rational), Err(FieldError::Parse { .. })));
    }

    #[test]
    fn division_and_mismatch() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(FieldError::DivisionByZero));
        let a = zeta(3, 1);
        let b = zeta(4, 1);
        assert_eq!(a.checked_add(&b), Err(FieldError::FieldMismatch(3, 4)));
        // rationals embed anywhere
        assert!(a.checked_mul(&Scalar::ratio(3, 7)).is_ok());
        assert_eq!(field_arith(&a, &a, ArithOp::Div).unwrap(), Scalar::one());
    }

    #[test]
    fn inverse_in_q5() {
        let x = parse_scalar("1+2*z-z^3", Field::cyclotomic(5)).unwrap();
        assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn render_canonical() {
        assert_eq!(q3("z^2").to_string(), "-1-z");
        assert_eq!(q3("3/6*z").to_string(), "1/2*z");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(q3("-z+2").to_string(), "2-z");
    }

    #[test]
    fn field_names() {
        assert_eq!("q3".parse::<Field>().unwrap(), Field::cyclotomic(3));
        assert_eq!("cyclotomic:12".parse::<Field>().unwrap(), Field::cyclotomic(12));
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert!("cyclotomic:0".parse::<Field>().is_err());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(0), BigInt::one());
    }
}
