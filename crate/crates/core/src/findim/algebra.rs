use crate::exactlin::{axpy, unit_vector, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::report::{Law, Report};

use crate::error::StructureError;

/// Finite-dimensional unital algebra given by structure constants:
/// `b_i b_j = Σ_k mult(i, j)_k b_k`.
///
/// Products are stored sparsely per basis pair; most corpus algebras have
/// at most one nonzero constant per pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAlgebra<F> {
    basis_names: Vec<String>,
    table: Vec<Vec<(usize, F)>>,
    unit: Vector<F>,
}

fn sparse<F: Field>(v: &[F]) -> Vec<(usize, F)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

impl<F: Field> FinAlgebra<F> {
    /// `products[i * dim + j]` is the coordinate vector of `b_i b_j`.
    pub fn new(basis_names: Vec<String>, products: Vec<Vector<F>>, unit: Vector<F>) -> Result<Self, StructureError> {
        let dim = basis_names.len();
        if products.len() != dim * dim {
            return Err(StructureError::Shape(format!(
                "algebra of dim {dim} needs {} products, got {}",
                dim * dim,
                products.len()
            )));
        }
        if unit.len() != dim || products.iter().any(|p| p.len() != dim) {
            return Err(StructureError::Shape(format!("algebra vectors must have length {dim}")));
        }
        Ok(FinAlgebra { basis_names, table: products.iter().map(|p| sparse(p)).collect(), unit })
    }

    /// Builds the table from a closure on basis pairs.
    pub fn from_fn(basis_names: Vec<String>, unit: Vector<F>, mut f: impl FnMut(usize, usize) -> Vector<F>) -> Self {
        let dim = basis_names.len();
        let products = (0..dim * dim).map(|ij| f(ij / dim, ij % dim)).collect();
        Self::new(basis_names, products, unit).expect("closure produced consistent shapes")
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::new(vec!["1".into()], vec![vec![F::one()]], vec![F::one()]).expect("ground field")
    }

    /// `k^n` with coordinatewise product.
    pub fn diagonal(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("p{i}")).collect();
        Self::from_fn(names, vec![F::one(); n], |i, j| if i == j { unit_vector(n, i) } else { zero_vector(n) })
    }

    /// `M_n(k)` on matrix units `e_xy`, basis index `x * n + y`.
    pub fn matrix_units(n: usize) -> Self {
        let names = (0..n * n).map(|i| format!("e{}{}", i / n + 1, i % n + 1)).collect();
        let mut unit: Vector<F> = zero_vector(n * n);
        for x in 0..n {
            unit[x * n + x] = F::one();
        }
        Self::from_fn(names, unit, |i, j| {
            let (a, b) = (i / n, i % n);
            let (c, d) = (j / n, j % n);
            if b == c {
                unit_vector(n * n, a * n + d)
            } else {
                zero_vector(n * n)
            }
        })
    }

    /// Upper-triangular 2x2 matrices on `e11, e12, e22`.
    pub fn upper_triangular_2() -> Self {
        let names = vec!["e11".to_string(), "e12".to_string(), "e22".to_string()];
        // (row, col) of each basis element
        let pos = [(0, 0), (0, 1), (1, 1)];
        let unit = vec![F::one(), F::zero(), F::one()];
        Self::from_fn(names, unit, |i, j| {
            let (a, b) = pos[i];
            let (c, d) = pos[j];
            let mut v: Vector<F> = zero_vector(3);
            if b == c {
                let k = pos.iter().position(|&p| p == (a, d)).expect("upper triangular");
                v[k] = F::one();
            }
            v
        })
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis(&self, i: usize) -> Vector<F> {
        unit_vector(self.dim(), i)
    }

    /// Nonzero structure constants of `b_i b_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector<F> {
        let mut v: Vector<F> = zero_vector(self.dim());
        for (k, c) in self.product_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vector<F> {
        let n = self.dim();
        let mut out: Vector<F> = zero_vector(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul(y);
                for (k, c) in &self.table[i * n + j] {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.dim(), &cols).expect("square")
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[F]) -> Matrix<F> {
        let cols: Vec<_> = (0..self.dim()).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.dim(), &cols).expect("square")
    }

    /// `dim x dim²` matrix of the multiplication map.
    pub fn mult_matrix(&self) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<_> = (0..n * n).map(|ij| self.basis_product(ij / n, ij % n)).collect();
        Matrix::from_columns(n, &cols).expect("mult shape")
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let names = self.basis_names.iter().map(|s| format!("{s}°")).collect();
        Self::from_fn(names, self.unit.clone(), |i, j| {
            let mut v: Vector<F> = zero_vector(n);
            for (k, c) in &self.table[j * n + i] {
                v[*k] = c.clone();
            }
            v
        })
    }

    /// `self ⊗ other` with the componentwise product.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let names =
            self.basis_names.iter().flat_map(|a| other.basis_names.iter().map(move |b| format!("{a}⊗{b}"))).collect();
        let unit = crate::exactlin::tensor_vec(&self.unit, &other.unit);
        Self::from_fn(names, unit, |ij, kl| {
            let mut v: Vector<F> = zero_vector(n * m);
            let (i, j) = (ij / m, ij % m);
            let (k, l) = (kl / m, kl % m);
            for (p, c) in self.product_terms(i, k) {
                for (q, d) in other.product_terms(j, l) {
                    v[p * m + q] = c.mul(d);
                }
            }
            v
        })
    }

    /// Product in `self ⊗ other` of elements given by ambient coordinates,
    /// without building the tensor algebra.
    pub fn tensor_mul(&self, other: &Self, x: &[F], y: &[F]) -> Vector<F> {
        let (n, m) = (self.dim(), other.dim());
        debug_assert_eq!(x.len(), n * m);
        let mut out: Vector<F> = zero_vector(n * m);
        for (ij, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (i, j) = (ij / m, ij % m);
            for (kl, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (k, l) = (kl / m, kl % m);
                let ab = a.mul(b);
                for (p, c) in self.product_terms(i, k) {
                    let abc = ab.mul(c);
                    for (q, d) in other.product_terms(j, l) {
                        out[p * m + q].add_mul(&abc, d);
                    }
                }
            }
        }
        out
    }

    /// Product in the `k`-fold tensor power, componentwise, on coordinates
    /// `(i_1, ..., i_k) ↦ Σ i_t dim^(k-t)`.
    pub fn tensor_power_mul(&self, k: usize, x: &[F], y: &[F]) -> Vector<F> {
        let n = self.dim();
        let len = n.pow(k as u32);
        debug_assert_eq!(x.len(), len);
        let mut out: Vector<F> = zero_vector(len);
        let digits = |mut idx: usize| {
            let mut d = vec![0; k];
            for t in (0..k).rev() {
                d[t] = idx % n;
                idx /= n;
            }
            d
        };
        for (xi, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let dx = digits(xi);
            for (yi, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let dy = digits(yi);
                // expand the product factor by factor
                let mut terms: Vec<(usize, F)> = vec![(0, a.mul(b))];
                for t in 0..k {
                    let factor = self.product_terms(dx[t], dy[t]);
                    let mut next = Vec::with_capacity(terms.len() * factor.len());
                    for (idx, c) in &terms {
                        for (p, d) in factor {
                            next.push((idx * n + p, c.mul(d)));
                        }
                    }
                    terms = next;
                    if terms.is_empty() {
                        break;
                    }
                }
                for (idx, c) in terms {
                    out[idx] = out[idx].add(&c);
                }
            }
        }
        out
    }

    /// Same basis, product transported by a permutation of basis labels.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.dim();
        let permute = |v: &[F]| {
            let mut w: Vector<F> = zero_vector(n);
            for (i, x) in v.iter().enumerate() {
                w[perm[i]] = x.clone();
            }
            w
        };
        let mut names = vec![String::new(); n];
        for i in 0..n {
            names[perm[i]] = self.basis_names[i].clone();
        }
        let mut inv = vec![0; n];
        for i in 0..n {
            inv[perm[i]] = i;
        }
        Self::from_fn(names, permute(&self.unit), |i, j| permute(&self.basis_product(inv[i], inv[j])))
    }
}

/// Associativity on all basis triples and both unit laws.
pub fn check_algebra<F: Field>(a: &FinAlgebra<F>) -> Report {
    let n = a.dim();
    let mut report = Report::new("algebra");
    let mut assoc = Law::new("associativity");
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for l in 0..n {
                let lhs = a.mul(&ij, &a.basis(l));
                let rhs = a.mul(&a.basis(i), &a.basis_product(j, l));
                assoc.check(&[i, j, l], &lhs, &rhs);
            }
        }
    }
    report.push(assoc.finish());
    let mut left = Law::new("unit.left");
    let mut right = Law::new("unit.right");
    for i in 0..n {
        let b = a.basis(i);
        left.check(&[i], &a.mul(a.unit(), &b), &b);
        right.check(&[i], &a.mul(&b, a.unit()), &b);
    }
    report.push(left.finish());
    report.push(right.finish());
    report
}

/// Linear map between algebras, with the matrix acting on coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap<F> {
    pub source: FinAlgebra<F>,
    pub target: FinAlgebra<F>,
    pub matrix: Matrix<F>,
}

impl<F: Field> AlgebraMap<F> {
    pub fn new(source: FinAlgebra<F>, target: FinAlgebra<F>, matrix: Matrix<F>) -> Result<Self, StructureError> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(StructureError::Shape(format!(
                "map matrix is {:?}, expected {:?}",
                matrix.shape(),
                (target.dim(), source.dim())
            )));
        }
        Ok(AlgebraMap { source, target, matrix })
    }

    /// Multiplicativity and unitality; `anti` checks `f(ab) = f(b) f(a)`.
    pub fn check(&self, anti: bool) -> Report {
        check_algebra_map(&self.source, &self.target, &self.matrix, anti)
    }
}

pub fn check_algebra_map<F: Field>(
    source: &FinAlgebra<F>,
    target: &FinAlgebra<F>,
    f: &Matrix<F>,
    anti: bool,
) -> Report {
    let mut report = Report::new(if anti { "anti-algebra map" } else { "algebra map" });
    let mut mult = Law::new(if anti { "anti_multiplicative" } else { "multiplicative" });
    let images: Vec<_> = (0..source.dim()).map(|i| f.column(i)).collect();
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = f.apply(&source.basis_product(i, j));
            let rhs = if anti { target.mul(&images[j], &images[i]) } else { target.mul(&images[i], &images[j]) };
            mult.check(&[i, j], &lhs, &rhs);
        }
    }
    report.push(mult.finish());
    let mut unit = Law::new("unital");
    unit.check(&[], &f.apply(source.unit()), target.unit());
    report.push(unit.finish());
    report
}

/// `Σ_k r_k ops[k]` for a vector `r` in the acting algebra.
pub fn combine<F: Field>(ops: &[Matrix<F>], r: &[F]) -> Matrix<F> {
    assert_eq!(ops.len(), r.len());
    let (rows, cols) = ops.first().map_or((0, 0), Matrix::shape);
    let mut m = Matrix::zeros(rows, cols);
    for (op, x) in ops.iter().zip(r) {
        if !x.is_zero() {
            m.add_scaled(x, op);
        }
    }
    m
}

/// `Σ_k v_k w_k` over vectors.
pub fn combine_vectors<F: Field>(vs: &[Vector<F>], r: &[F]) -> Vector<F> {
    let mut out: Vector<F> = zero_vector(vs.first().map_or(0, Vec::len));
    for (v, x) in vs.iter().zip(r) {
        axpy(&mut out, x, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn diagonal_and_matrix_algebras_pass() {
        assert!(check_algebra(&FinAlgebra::<Q>::diagonal(2)).passed());
        assert!(check_algebra(&FinAlgebra::<Q>::matrix_units(2)).passed());
        assert!(check_algebra(&FinAlgebra::<Q>::upper_triangular_2()).passed());
    }

    #[test]
    fn perturbed_matrix_units_are_caught() {
        let m2 = FinAlgebra::<Q>::matrix_units(2);
        // e11 · e12 := 0
        let mut products: Vec<_> = (0..16).map(|ij| m2.basis_product(ij / 4, ij % 4)).collect();
        products[1] = zero_vector(4);
        let broken = FinAlgebra::new(m2.basis_names().to_vec(), products, m2.unit().to_vec()).unwrap();
        let r = check_algebra(&broken);
        assert!(!r.passed());
        let w = r.law("associativity").unwrap().witness.clone().unwrap();
        // first triple, in lexicographic order, where the two association
        // orders differ when evaluated directly
        let mut first = None;
        'search: for i in 0..4 {
            for j in 0..4 {
                for l in 0..4 {
                    let lhs = broken.mul(&broken.basis_product(i, j), &broken.basis(l));
                    let rhs = broken.mul(&broken.basis(i), &broken.basis_product(j, l));
                    if lhs != rhs {
                        first = Some(vec![i, j, l]);
                        break 'search;
                    }
                }
            }
        }
        assert_eq!(Some(w.indices.clone()), first);
        // (e11 e12) e21 = 0 while e11 (e12 e21) = e11
        assert_eq!(w.indices, vec![0, 1, 2]);
    }

    #[test]
    fn tensor_and_opposite() {
        let r = FinAlgebra::<Q>::upper_triangular_2();
        let re = r.tensor(&r.opposite());
        assert_eq!(re.dim(), 9);
        assert!(check_algebra(&re).passed());
        let x: Vec<Q> = (0..9).map(|i| Q::from(i as i64 - 3)).collect();
        let y: Vec<Q> = (0..9).map(|i| Q::from((i * i) as i64 % 5)).collect();
        assert_eq!(r.tensor_mul(&r.opposite(), &x, &y), re.mul(&x, &y));
        let rr = r.tensor(&r);
        assert_eq!(r.tensor_power_mul(2, &x, &y), rr.mul(&x, &y));
        let x3: Vec<Q> = (0..27).map(|i| Q::from(i as i64 % 4 - 1)).collect();
        let y3: Vec<Q> = (0..27).map(|i| Q::from(i as i64 % 3)).collect();
        assert_eq!(r.tensor_power_mul(3, &x3, &y3), rr.tensor(&r).mul(&x3, &y3));
    }

    #[test]
    fn inclusion_of_diagonal_is_algebra_map() {
        let d = FinAlgebra::<Q>::diagonal(2);
        let m = FinAlgebra::<Q>::matrix_units(2);
        let f = Matrix::from_columns(4, &[unit_vector(4, 0), unit_vector(4, 3)]).unwrap();
        let map = AlgebraMap::new(d, m, f).unwrap();
        assert!(map.check(false).passed());
        assert!(map.check(true).passed());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(FinAlgebra::<Q>::new(vec!["a".into()], vec![], vec![Q::one()]).is_err());
    }
}
