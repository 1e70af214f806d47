//! Dense exact linear algebra: matrices, canonical subspaces and quotients.
//!
//! Linear maps are matrices acting on column vectors, so a map
//! `k^n -> k^m` is an `m x n` matrix. Subspaces are stored by their reduced
//! row echelon basis, which makes equality of subspaces structural.

use std::fmt;

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is not invertible")]
    Singular,
}

pub type Vector<F> = Vec<F>;

pub fn zero_vector<F: Field>(n: usize) -> Vector<F> {
    vec![F::zero(); n]
}

pub fn unit_vector<F: Field>(n: usize, i: usize) -> Vector<F> {
    let mut v: Vector<F> = zero_vector(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vector<F: Field>(v: &[F]) -> bool {
    v.iter().all(Field::is_zero)
}

pub fn vec_add<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale<F: Field>(s: &F, a: &[F]) -> Vector<F> {
    a.iter().map(|x| s.mul(x)).collect()
}

/// `acc += s * v`
pub fn axpy<F: Field>(acc: &mut [F], s: &F, v: &[F]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(s, x);
    }
}

/// Coordinates of `a ⊗ b` in the basis ordering `(i, j) -> i * b.len() + j`.
pub fn tensor_vec<F: Field>(a: &[F], b: &[F]) -> Vector<F> {
    let mut out: Vector<F> = zero_vector(a.len() * b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i * b.len() + j] = x.mul(y);
            }
        }
    }
    out
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

/// `(a ⊗ b) v` without materializing the Kronecker product.
pub fn apply_kron<F: Field>(a: &Matrix<F>, b: &Matrix<F>, v: &[F]) -> Vector<F> {
    assert_eq!(v.len(), a.cols() * b.cols(), "apply_kron: vector length");
    let mut out: Vector<F> = zero_vector(a.rows() * b.rows());
    let bc = b.cols();
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, j) = (idx / bc, idx % bc);
        for k in 0..a.rows() {
            let ak = a.get(k, i);
            if ak.is_zero() {
                continue;
            }
            let s = ak.mul(x);
            for l in 0..b.rows() {
                let bl = b.get(l, j);
                if !bl.is_zero() {
                    out[k * b.rows() + l].add_mul(&s, bl);
                }
            }
        }
    }
    out
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, rows_data: Vec<Vector<F>>) -> Result<Self, LinAlgError> {
        if rows_data.len() != rows {
            return Err(LinAlgError::DimensionMismatch { expected: rows, found: rows_data.len() });
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_data {
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector<F>]) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinAlgError::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Shorthand for tests and constructors; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                r.iter().map(|&x| F::from_i64(x))
            })
            .collect();
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector<F>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    /// `self * v`
    pub fn apply(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.cols, "apply: vector length {} vs {} columns", v.len(), self.cols);
        let mut out: Vector<F> = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                o.add_mul(&self.data[i * self.cols + j], x);
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch { left: self.shape(), right: rhs.shape() });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    out.data[i * rhs.cols + j].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on shape mismatch (an internal invariant).
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matrix product shape")
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape());
        Matrix { rows: self.rows, cols: self.cols, data: vec_add(&self.data, &rhs.data) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape());
        Matrix { rows: self.rows, cols: self.cols, data: vec_sub(&self.data, &rhs.data) }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: vec_scale(s, &self.data) }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &F, other: &Self) {
        assert_eq!(self.shape(), other.shape());
        axpy(&mut self.data, s, &other.data);
    }

    /// Kronecker product: `(A ⊗ B)(e_i ⊗ e_j) = A e_i ⊗ B e_j`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Matrix { rows: self.rows + below.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, right: &Self) -> Self {
        assert_eq!(self.rows, right.rows);
        let cols = self.cols + right.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(right.row(i).iter().cloned());
        }
        Matrix { rows: self.rows, cols, data }
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.cols, self.row_vectors()).dim()
    }

    pub fn inverse(&self) -> Result<Self, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::ShapeMismatch { left: self.shape(), right: self.shape() });
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(n));
        let rref = Subspace::span(2 * n, aug.row_vectors());
        if rref.dim() != n || rref.pivots().iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinAlgError::Singular);
        }
        let rows = rref.basis().iter().map(|r| r[n..].to_vec()).collect();
        Self::from_rows(n, n, rows)
    }

    /// Any `x` with `self * x = b`.
    pub fn solve(&self, b: &[F]) -> Option<Vector<F>> {
        assert_eq!(b.len(), self.rows);
        let rows: Vec<Vector<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let rref = Subspace::span(self.cols + 1, rows);
        if rref.pivots().contains(&self.cols) {
            return None;
        }
        let mut x: Vector<F> = zero_vector(self.cols);
        for (row, &p) in rref.basis().iter().zip(rref.pivots()) {
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let r: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A subspace of `k^ambient_dim` in reduced row echelon form.
///
/// The basis rows are pivot-normalized (pivot entry 1, zeros above and
/// below every pivot) and sorted by pivot column, so two equal subspaces
/// always have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Vec<Vector<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors, reduced to canonical form.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector<F>>,
    {
        let mut s = Self::zero(ambient_dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Adds `v` to the span, keeping the echelon form reduced. Returns
    /// whether the dimension grew.
    pub fn insert(&mut self, mut v: Vector<F>) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "insert: wrong ambient dimension");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let s = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul(&s);
            }
        }
        for row in &mut self.basis {
            let c = row[p].clone();
            if !c.is_zero() {
                let c = c.neg();
                for (r, x) in row.iter_mut().zip(&v).skip(p) {
                    r.add_mul(&c, x);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    /// Subtracts basis components at pivot positions; the result vanishes
    /// at every pivot and is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &mut [F]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            let c = c.neg();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                x.add_mul(&c, r);
            }
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&w)
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vector<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// `ambient_dim x dim` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient_dim, &self.basis).expect("basis lengths")
    }

    /// `dim x ambient_dim` matrix reading coordinates off the pivots; only
    /// meaningful on vectors of the subspace.
    pub fn coordinate_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(), self.ambient_dim);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, F::one());
        }
        m
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinAlgError> {
        check_ambient(self, other)?;
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        Ok(s)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// Image under a linear map.
    pub fn map(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient_dim);
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }
}

impl<F: fmt::Debug> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.basis.len(), self.ambient_dim)?;
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "{{{}}}", rows.join(", "))
    }
}

fn check_ambient<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<(), LinAlgError> {
    if u.ambient_dim != v.ambient_dim {
        return Err(LinAlgError::DimensionMismatch { expected: u.ambient_dim, found: v.ambient_dim });
    }
    Ok(())
}

/// Solution space of `m x = 0`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let rref = Subspace::span(m.cols(), m.row_vectors());
    kernel_of_rref(&rref)
}

fn kernel_of_rref<F: Field>(rref: &Subspace<F>) -> Subspace<F> {
    let n = rref.ambient_dim();
    let mut is_pivot = vec![false; n];
    for &p in rref.pivots() {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = unit_vector(n, f);
        for (row, &p) in rref.basis().iter().zip(rref.pivots()) {
            v[p] = row[f].neg();
        }
        v
    });
    Subspace::span(n, vectors)
}

/// Column space of `m`.
pub fn image<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::span(m.rows(), m.columns())
}

pub fn intersect<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>, LinAlgError> {
    check_ambient(u, v)?;
    if u.dim() == 0 || v.dim() == 0 {
        return Ok(Subspace::zero(u.ambient_dim));
    }
    // x·U = y·V  <=>  [U^T | -V^T] (x, y) = 0
    let ut = u.basis_matrix();
    let vt = v.basis_matrix().scale(&F::one().neg());
    let joint = kernel(&ut.hstack(&vt));
    let vectors = joint.basis().iter().map(|xy| ut.apply(&xy[..u.dim()]));
    Ok(Subspace::span(u.ambient_dim, vectors))
}

/// `k^ambient_dim / relations`, with the complement spanned by the
/// coordinates that are not pivots of the relation basis.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotientSpace<F> {
    ambient_dim: usize,
    relations: Subspace<F>,
    free: Vec<usize>,
    projection: Matrix<F>,
    section: Matrix<F>,
}

impl<F: fmt::Debug> fmt::Debug for QuotientSpace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientSpace({} / {} = {})", self.ambient_dim, self.relations.basis.len(), self.free.len())
    }
}

pub fn quotient<F: Field>(ambient_dim: usize, relations: Subspace<F>) -> Result<QuotientSpace<F>, LinAlgError> {
    if relations.ambient_dim() != ambient_dim {
        return Err(LinAlgError::DimensionMismatch { expected: ambient_dim, found: relations.ambient_dim() });
    }
    let mut is_pivot = vec![false; ambient_dim];
    for &p in relations.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ambient_dim).filter(|&j| !is_pivot[j]).collect();
    let q = free.len();
    let mut projection = Matrix::zeros(q, ambient_dim);
    let mut section = Matrix::zeros(ambient_dim, q);
    for (qi, &j) in free.iter().enumerate() {
        projection.set(qi, j, F::one());
        section.set(j, qi, F::one());
        for (row, &p) in relations.basis().iter().zip(relations.pivots()) {
            if !row[j].is_zero() {
                projection.set(qi, p, row[j].neg());
            }
        }
    }
    Ok(QuotientSpace { ambient_dim, relations, free, projection, section })
}

impl<F: Field> QuotientSpace<F> {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quot_dim(&self) -> usize {
        self.free.len()
    }

    /// Ambient coordinate lifted from each quotient coordinate.
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn relations(&self) -> &Subspace<F> {
        &self.relations
    }

    /// `quot_dim x ambient_dim`
    pub fn projection(&self) -> &Matrix<F> {
        &self.projection
    }

    /// `ambient_dim x quot_dim`, a right inverse of the projection.
    pub fn section(&self) -> &Matrix<F> {
        &self.section
    }

    pub fn project(&self, v: &[F]) -> Vector<F> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        self.relations.reduce(&mut w);
        self.free.iter().map(|&j| w[j].clone()).collect()
    }

    pub fn lift(&self, q: &[F]) -> Vector<F> {
        assert_eq!(q.len(), self.quot_dim());
        let mut v: Vector<F> = zero_vector(self.ambient_dim);
        for (x, &j) in q.iter().zip(&self.free) {
            v[j] = x.clone();
        }
        v
    }

    /// Quotient-coordinate matrix of an ambient-valued map.
    pub fn project_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        assert_eq!(m.rows(), self.ambient_dim);
        let cols: Vec<Vector<F>> = m.columns().iter().map(|c| self.project(c)).collect();
        Matrix::from_columns(self.quot_dim(), &cols).expect("projection shape")
    }

    /// Ambient lift of a quotient-valued map.
    pub fn lift_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        assert_eq!(m.rows(), self.quot_dim());
        let cols: Vec<Vector<F>> = m.columns().iter().map(|c| self.lift(c)).collect();
        Matrix::from_columns(self.ambient_dim, &cols).expect("lift shape")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = Matrix::<Q>::from_i64(&[&[1, 2], &[2, 4]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis()[0], vec![q(1, 1), q(-1, 2)]);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let k = kernel(&Matrix::<Q>::zeros(3, 3));
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn intersect_axes() {
        let u = Subspace::span(2, vec![vec![Q::one(), Q::zero()]]);
        let v = Subspace::span(2, vec![vec![Q::zero(), Q::one()]]);
        assert_eq!(intersect(&u, &v).unwrap(), Subspace::zero(2));
        assert_eq!(intersect(&u, &u).unwrap(), u);
        assert!(matches!(intersect(&u, &Subspace::zero(3)), Err(LinAlgError::DimensionMismatch { .. })));
    }

    #[test]
    fn quotient_by_nothing() {
        let qs = quotient::<Q>(4, Subspace::zero(4)).unwrap();
        assert_eq!(qs.quot_dim(), 4);
        assert!(qs.projection().is_identity());
    }

    #[test]
    fn quotient_identifying_two_axes() {
        let rel = Subspace::span(2, vec![vec![Q::one(), Q::from(-1)]]);
        let qs = quotient(2, rel).unwrap();
        assert_eq!(qs.quot_dim(), 1);
        assert_eq!(qs.project(&[Q::one(), Q::zero()]), qs.project(&[Q::zero(), Q::one()]));
        assert!(qs.projection().mul(qs.section()).is_identity());
    }

    #[test]
    fn quotient_rejects_mismatched_relations() {
        assert!(quotient::<Q>(3, Subspace::zero(2)).is_err());
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::<Q>::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(Matrix::<Q>::from_i64(&[&[1, 2], &[2, 4]]).inverse(), Err(LinAlgError::Singular));
        let x = m.solve(&[Q::from(3), Q::from(2)]).unwrap();
        assert_eq!(m.apply(&x), vec![Q::from(3), Q::from(2)]);
        assert!(Matrix::<Q>::from_i64(&[&[1, 1], &[1, 1]]).solve(&[Q::one(), Q::zero()]).is_none());
    }

    #[test]
    fn kron_acts_on_pure_tensors() {
        let a = Matrix::<Q>::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Matrix::<Q>::from_i64(&[&[3], &[4]]);
        let x = vec![Q::from(1), Q::from(-1)];
        let y = vec![Q::from(2)];
        assert_eq!(a.kron(&b).apply(&tensor_vec(&x, &y)), tensor_vec(&a.apply(&x), &b.apply(&y)));
    }

    #[test]
    fn prime_field_kernel() {
        // x + y = 0 over F_2 identifies (1,1)
        let m = Matrix::<Fp<2>>::from_i64(&[&[1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.basis()[0], vec![Fp::new(1), Fp::new(1)]);
    }
}
