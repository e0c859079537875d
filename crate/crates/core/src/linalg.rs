//! Dense exact linear algebra over [`Scalar`]s.
//!
//! Tensor factors are flattened row-major with the leftmost factor most
//! significant: the basis vector `e_i ⊗ e_j` of `V ⊗ W` sits at index
//! `i * dim(W) + j`. A [`LinMap`] stores its matrix row-major with rows
//! indexed by the flattened codomain and columns by the flattened domain.

use serde::Serialize;
use thiserror::Error;

use crate::field::Scalar;
use crate::hopf::{AlgebraData, CoalgebraData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("map is not convolution invertible")]
    NotConvInvertible,
}

/// A dense vector of scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinVector {
    pub coords: Vec<Scalar>,
}

impl FinVector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        FinVector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        FinVector { coords: vec![Scalar::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.coords[i] = Scalar::one();
        v
    }

    pub fn from_ints(v: &[i64]) -> Self {
        FinVector { coords: v.iter().map(|&x| Scalar::from_int(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        FinVector { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &FinVector) -> Self {
        FinVector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &FinVector) -> Self {
        FinVector { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn tensor(&self, other: &FinVector) -> Self {
        FinVector { coords: kron(&self.coords, &other.coords) }
    }

    /// Nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// Kronecker product of two coordinate slices.
pub fn kron(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        if a.is_zero() {
            out.extend(std::iter::repeat_n(Scalar::zero(), y.len()));
        } else {
            out.extend(y.iter().map(|b| a * b));
        }
    }
    out
}

/// `acc += c * v`, skipping zeros.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (slot, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *slot += &(c * x);
        }
    }
}

/// A linear map between tensor products of finite-dimensional spaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinMap {
    domain_dims: Vec<usize>,
    codomain_dims: Vec<usize>,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

fn prod(dims: &[usize]) -> usize {
    dims.iter().product()
}

impl LinMap {
    pub fn new(domain_dims: Vec<usize>, codomain_dims: Vec<usize>, data: Vec<Scalar>) -> Result<Self, LinAlgError> {
        let rows = prod(&codomain_dims);
        let cols = prod(&domain_dims);
        if data.len() != rows * cols {
            return Err(LinAlgError::ShapeMismatch(format!("expected {rows}x{cols} = {} entries, got {}", rows * cols, data.len())));
        }
        Ok(LinMap { domain_dims, codomain_dims, rows, cols, data })
    }

    pub fn zeros(domain_dims: Vec<usize>, codomain_dims: Vec<usize>) -> Self {
        let rows = prod(&codomain_dims);
        let cols = prod(&domain_dims);
        LinMap { domain_dims, codomain_dims, rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    /// Builds the map from its columns (images of domain basis vectors).
    pub fn from_columns(domain_dims: Vec<usize>, codomain_dims: Vec<usize>, cols: &[Vec<Scalar>]) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(domain_dims, codomain_dims);
        if cols.len() != m.cols {
            return Err(LinAlgError::ShapeMismatch(format!("expected {} columns, got {}", m.cols, cols.len())));
        }
        for (c, col) in cols.iter().enumerate() {
            if col.len() != m.rows {
                return Err(LinAlgError::ShapeMismatch(format!("column {c} has length {}", col.len())));
            }
            for (r, x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn identity(dims: Vec<usize>) -> Self {
        let mut m = Self::zeros(dims.clone(), dims);
        for i in 0..m.rows {
            m.data[i * m.cols + i] = Scalar::one();
        }
        m
    }

    /// The flip `V ⊗ W → W ⊗ V`.
    pub fn flip(d1: usize, d2: usize) -> Self {
        let mut m = Self::zeros(vec![d1, d2], vec![d2, d1]);
        for i in 0..d1 {
            for j in 0..d2 {
                m.set(j * d1 + i, i * d2 + j, Scalar::one());
            }
        }
        m
    }

    pub fn domain_dims(&self) -> &[usize] {
        &self.domain_dims
    }

    pub fn codomain_dims(&self) -> &[usize] {
        &self.codomain_dims
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Relabels the tensor factors without touching the matrix.
    pub fn reshape(mut self, domain_dims: Vec<usize>, codomain_dims: Vec<usize>) -> Result<Self, LinAlgError> {
        if prod(&domain_dims) != self.cols || prod(&codomain_dims) != self.rows {
            return Err(LinAlgError::ShapeMismatch("reshape changes flattened size".into()));
        }
        self.domain_dims = domain_dims;
        self.codomain_dims = codomain_dims;
        Ok(self)
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Nonzero entries of column `c`.
    pub fn column_sparse(&self, c: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|r| {
                let x = self.get(r, c);
                (!x.is_zero()).then(|| (r, x.clone()))
            })
            .collect()
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if x.len() != self.cols {
            return Err(LinAlgError::ShapeMismatch(format!("vector of length {} applied to {} columns", x.len(), self.cols)));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let m = self.get(r, c);
                if !m.is_zero() {
                    *slot += &(m * xc);
                }
            }
        }
        Ok(out)
    }

    pub fn apply_vec(&self, x: &FinVector) -> Result<FinVector, LinAlgError> {
        self.apply(&x.coords).map(FinVector::new)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut m = self.clone();
        for x in &mut m.data {
            *x = &*x * c;
        }
        m
    }

    pub fn add(&self, other: &LinMap) -> Result<Self, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::ShapeMismatch("sum of maps of different shapes".into()));
        }
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        Ok(m)
    }

    pub fn sub(&self, other: &LinMap) -> Result<Self, LinAlgError> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Matrix equality ignoring how the factors are grouped.
    pub fn same_matrix(&self, other: &LinMap) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.codomain_dims.clone(), self.domain_dims.clone());
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }
}

/// `g ∘ f`.
pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap, LinAlgError> {
    if g.cols != f.rows {
        return Err(LinAlgError::ShapeMismatch(format!("cannot compose: outer map takes {} inputs, inner map gives {}", g.cols, f.rows)));
    }
    let mut out = LinMap::zeros(f.domain_dims.clone(), g.codomain_dims.clone());
    for k in 0..g.cols {
        for c in 0..f.cols {
            let b = f.get(k, c);
            if b.is_zero() {
                continue;
            }
            for r in 0..g.rows {
                let a = g.get(r, k);
                if !a.is_zero() {
                    let idx = r * out.cols + c;
                    out.data[idx] += &(a * b);
                }
            }
        }
    }
    Ok(out)
}

/// Kronecker product `f ⊗ g`.
pub fn tensor_map(f: &LinMap, g: &LinMap) -> LinMap {
    let dom = [f.domain_dims.clone(), g.domain_dims.clone()].concat();
    let cod = [f.codomain_dims.clone(), g.codomain_dims.clone()].concat();
    let mut out = LinMap::zeros(dom, cod);
    for r1 in 0..f.rows {
        for c1 in 0..f.cols {
            let a = f.get(r1, c1);
            if a.is_zero() {
                continue;
            }
            for r2 in 0..g.rows {
                for c2 in 0..g.cols {
                    let b = g.get(r2, c2);
                    if !b.is_zero() {
                        out.set(r1 * g.rows + r2, c1 * g.cols + c2, a * b);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub particular: Option<FinVector>,
    pub nullspace_basis: Vec<FinVector>,
}

/// Reduced row echelon form of `m` (rows of equal length); returns pivot columns.
/// Forward elimination is fraction-free (Bareiss); the final pass normalizes.
pub fn rref(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..nrows {
            let lead = m[i][c].clone();
            for j in c..m[i].len() {
                let v = &(&piv * &m[i][j]) - &(&lead * &m[r][j]);
                m[i][j] = &v / &prev;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    // back substitution into reduced form
    for (row, &c) in pivots.iter().enumerate().rev() {
        let inv = m[row][c].inverse().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for i in 0..row {
            let factor = m[i][c].clone();
            if factor.is_zero() {
                continue;
            }
            for j in c..m[i].len() {
                if !m[row][j].is_zero() {
                    let delta = &factor * &m[row][j];
                    m[i][j] -= &delta;
                }
            }
        }
    }
    pivots
}

/// Solves `M x = b` (`b = None` means the homogeneous system).
pub fn solve(m: &LinMap, b: Option<&FinVector>) -> Result<SolveResult, LinAlgError> {
    if let Some(b) = b {
        if b.dim() != m.rows {
            return Err(LinAlgError::ShapeMismatch(format!("right-hand side has length {}, expected {}", b.dim(), m.rows)));
        }
    }
    let n = m.cols;
    let mut aug: Vec<Vec<Scalar>> = (0..m.rows)
        .map(|r| {
            let mut row: Vec<Scalar> = (0..n).map(|c| m.get(r, c).clone()).collect();
            row.push(b.map(|b| b.coords[r].clone()).unwrap_or_else(Scalar::zero));
            row
        })
        .collect();
    let pivots = rref(&mut aug, n);
    let consistent = !aug.iter().any(|row| row[..n].iter().all(Scalar::is_zero) && !row[n].is_zero());
    let particular = consistent.then(|| {
        let mut x = FinVector::zeros(n);
        for (row, &c) in pivots.iter().enumerate() {
            x.coords[c] = aug[row][n].clone();
        }
        x
    });
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<Scalar>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -&aug[row][f];
            }
            v
        })
        .collect();
    // the basis itself in reduced echelon form
    rref(&mut basis, n);
    Ok(SolveResult { particular, nullspace_basis: basis.into_iter().map(FinVector::new).collect() })
}

pub fn rank(m: &LinMap) -> usize {
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows).map(|r| (0..m.cols).map(|c| m.get(r, c).clone()).collect()).collect();
    rref(&mut rows, m.cols).len()
}

/// Exact inverse of a square map.
pub fn invert(m: &LinMap) -> Result<LinMap, LinAlgError> {
    if m.rows != m.cols {
        return Err(LinAlgError::ShapeMismatch(format!("cannot invert a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut aug: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            let mut row: Vec<Scalar> = (0..n).map(|c| m.get(r, c).clone()).collect();
            row.extend((0..n).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return Err(LinAlgError::Singular);
    }
    let mut out = LinMap::zeros(m.codomain_dims.clone(), m.domain_dims.clone());
    for (r, row) in aug.iter().enumerate() {
        for c in 0..n {
            out.set(r, c, row[n + c].clone());
        }
    }
    Ok(out)
}

/// Coordinates of `x` in the span of `basis`, if it lies there.
pub fn span_coordinates(basis: &[Vec<Scalar>], x: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = x.len();
    if basis.is_empty() {
        return x.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let cols: Vec<Vec<Scalar>> = basis.to_vec();
    let m = LinMap::from_columns(vec![basis.len()], vec![n], &cols).ok()?;
    let res = solve(&m, Some(&FinVector::new(x.to_vec()))).ok()?;
    res.particular.map(|p| p.coords)
}

/// `η ∘ ε : C → A`.
pub fn unit_counit(c: &CoalgebraData, a: &AlgebraData) -> LinMap {
    compose_unchecked(&unit_map(a), &c.counit)
}

/// The unit `k → A` as a map.
pub fn unit_map(a: &AlgebraData) -> LinMap {
    LinMap::from_columns(vec![], vec![a.dim], std::slice::from_ref(&a.unit.coords)).expect("unit shape")
}

fn compose_unchecked(g: &LinMap, f: &LinMap) -> LinMap {
    compose(g, f).expect("internal shapes agree")
}

/// Convolution `(f ∗ g)(c) = f(c_(1)) g(c_(2))`.
pub fn convolution(f: &LinMap, g: &LinMap, c: &CoalgebraData, a: &AlgebraData) -> Result<LinMap, LinAlgError> {
    for (name, m) in [("left", f), ("right", g)] {
        if m.cols != c.dim || m.rows != a.dim {
            return Err(LinAlgError::ShapeMismatch(format!("{name} factor is {}x{}, expected {}x{}", m.rows, m.cols, a.dim, c.dim)));
        }
    }
    let fg = tensor_map(f, g);
    let inner = compose(&fg, &c.comult)?;
    let out = compose(&a.mult, &inner)?;
    out.reshape(vec![c.dim], vec![a.dim])
}

/// Solves `f ∗ g = η∘ε` for `g` and checks `g ∗ f = η∘ε` as well.
pub fn convolution_inverse(f: &LinMap, c: &CoalgebraData, a: &AlgebraData) -> Result<LinMap, LinAlgError> {
    if f.cols != c.dim || f.rows != a.dim {
        return Err(LinAlgError::ShapeMismatch(format!("map is {}x{}, expected {}x{}", f.rows, f.cols, a.dim, c.dim)));
    }
    let (da, dc) = (a.dim, c.dim);
    // unknown g_{t,k} at index t*dc + k; equation (r, x) at index r*dc + x
    let nvar = da * dc;
    let mut sys = LinMap::zeros(vec![nvar], vec![nvar]);
    for x in 0..dc {
        for (jk, d) in c.comult.column_sparse(x) {
            let (j, k) = (jk / dc, jk % dc);
            for (s, fs) in f.column_sparse(j) {
                let coeff = &d * &fs;
                for t in 0..da {
                    for (r, m) in a.mult.column_sparse(s * da + t) {
                        let row = r * dc + x;
                        let col = t * dc + k;
                        let cur = sys.get(row, col) + &(&coeff * &m);
                        sys.set(row, col, cur);
                    }
                }
            }
        }
    }
    let target = unit_counit(c, a);
    let mut rhs = FinVector::zeros(nvar);
    for r in 0..da {
        for x in 0..dc {
            rhs.coords[r * dc + x] = target.get(r, x).clone();
        }
    }
    let sol = solve(&sys, Some(&rhs))?;
    let p = sol.particular.ok_or(LinAlgError::NotConvInvertible)?;
    let mut g = LinMap::zeros(vec![dc], vec![da]);
    for t in 0..da {
        for k in 0..dc {
            g.set(t, k, p.coords[t * dc + k].clone());
        }
    }
    let left = convolution(&g, f, c, a)?;
    if !left.same_matrix(&target) {
        return Err(LinAlgError::NotConvInvertible);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, v: &[i64]) -> LinMap {
        LinMap::new(vec![cols], vec![rows], v.iter().map(|&x| Scalar::from_int(x)).collect()).unwrap()
    }

    #[test]
    fn flip_is_involution() {
        let f = LinMap::flip(2, 2);
        assert!(compose(&f, &f).unwrap().same_matrix(&LinMap::identity(vec![4])));
        let g = LinMap::flip(2, 3);
        let h = LinMap::flip(3, 2);
        assert!(compose(&h, &g).unwrap().same_matrix(&LinMap::identity(vec![6])));
    }

    #[test]
    fn identity_tensor() {
        let t = tensor_map(&LinMap::identity(vec![2]), &LinMap::identity(vec![3]));
        assert!(t.same_matrix(&LinMap::identity(vec![6])));
        assert_eq!(t.domain_dims(), &[2, 3]);
    }

    #[test]
    fn tensor_on_basis() {
        let f = m(2, 2, &[1, 2, 3, 4]);
        let g = m(2, 2, &[0, 1, 1, 0]);
        let fg = tensor_map(&f, &g);
        for i in 0..2 {
            for j in 0..2 {
                let x = FinVector::basis(2, i).tensor(&FinVector::basis(2, j));
                let lhs = fg.apply_vec(&x).unwrap();
                let rhs = f.apply_vec(&FinVector::basis(2, i)).unwrap().tensor(&g.apply_vec(&FinVector::basis(2, j)).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn compose_shape_error() {
        assert!(matches!(compose(&m(2, 3, &[0; 6]), &m(2, 2, &[0; 4])), Err(LinAlgError::ShapeMismatch(_))));
    }

    #[test]
    fn solve_trivial_cases() {
        let z = m(2, 3, &[0; 6]);
        let r = solve(&z, None).unwrap();
        assert_eq!(r.nullspace_basis.len(), 3);
        assert_eq!(r.nullspace_basis[0], FinVector::basis(3, 0));
        let id = LinMap::identity(vec![3]);
        let r = solve(&id, Some(&FinVector::basis(3, 0))).unwrap();
        assert_eq!(r.particular, Some(FinVector::basis(3, 0)));
        assert!(r.nullspace_basis.is_empty());
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(2, 2, &[1, 1, 1, 1]);
        let r = solve(&a, Some(&FinVector::from_ints(&[1, 2]))).unwrap();
        assert!(r.particular.is_none());
        assert_eq!(r.nullspace_basis.len(), 1);
    }

    #[test]
    fn invert_roundtrip() {
        let a = m(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let inv = invert(&a).unwrap();
        assert!(compose(&inv, &a).unwrap().same_matrix(&LinMap::identity(vec![3])));
        assert_eq!(invert(&m(2, 2, &[1, 2, 2, 4])), Err(LinAlgError::Singular));
        let f = LinMap::flip(2, 2);
        assert!(invert(&f).unwrap().same_matrix(&f));
    }

    #[test]
    fn span_membership() {
        let b = vec![FinVector::from_ints(&[1, 0, 1]).coords, FinVector::from_ints(&[0, 1, 1]).coords];
        let c = span_coordinates(&b, &FinVector::from_ints(&[2, 3, 5]).coords).unwrap();
        assert_eq!(c, vec![Scalar::from_int(2), Scalar::from_int(3)]);
        assert!(span_coordinates(&b, &FinVector::from_ints(&[0, 0, 1]).coords).is_none());
    }
}
