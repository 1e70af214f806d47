use crate::exactlin::{apply_kron, unit_vector, Matrix, Vector};
use crate::field::Field;
use crate::report::{Law, Report};

use crate::error::StructureError;

/// Coalgebra with `comult` of shape `dim² x dim` (column `i` is `Δ(b_i)`
/// in tensor coordinates `(j, k) ↦ j * dim + k`) and `counit` of shape `1 x dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCoalgebra<F> {
    pub comult: Matrix<F>,
    pub counit: Matrix<F>,
}

impl<F: Field> FinCoalgebra<F> {
    pub fn new(comult: Matrix<F>, counit: Matrix<F>) -> Result<Self, StructureError> {
        let n = comult.cols();
        if comult.rows() != n * n || counit.shape() != (1, n) {
            return Err(StructureError::Shape(format!(
                "coalgebra of dim {n}: comult {:?}, counit {:?}",
                comult.shape(),
                counit.shape()
            )));
        }
        Ok(FinCoalgebra { comult, counit })
    }

    /// `Δ(b_i) = b_i ⊗ b_i`, `ε(b_i) = 1`.
    pub fn grouplike(n: usize) -> Self {
        let cols: Vec<_> = (0..n).map(|i| unit_vector(n * n, i * n + i)).collect();
        let comult = Matrix::from_columns(n * n, &cols).expect("grouplike");
        let counit = Matrix::from_rows(1, n, vec![vec![F::one(); n]]).expect("counit");
        FinCoalgebra { comult, counit }
    }

    /// Matrix coalgebra on `e_xy`: `Δ(e_xy) = Σ_z e_xz ⊗ e_zy`, `ε(e_xy) = δ_xy`.
    pub fn matrix(n: usize) -> Self {
        let d = n * n;
        let cols: Vec<_> = (0..d)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                let mut v = vec![F::zero(); d * d];
                for z in 0..n {
                    v[(x * n + z) * d + z * n + y] = F::one();
                }
                v
            })
            .collect();
        let comult = Matrix::from_columns(d * d, &cols).expect("matrix coalgebra");
        let counit_row = (0..d).map(|i| if i / n == i % n { F::one() } else { F::zero() }).collect();
        let counit = Matrix::from_rows(1, d, vec![counit_row]).expect("counit");
        FinCoalgebra { comult, counit }
    }

    pub fn dim(&self) -> usize {
        self.comult.cols()
    }

    pub fn delta(&self, v: &[F]) -> Vector<F> {
        self.comult.apply(v)
    }

    pub fn epsilon(&self, v: &[F]) -> F {
        self.counit.apply(v).pop().expect("scalar")
    }
}

/// Coassociativity and both counit laws, witnessed by a basis index.
pub fn check_coalgebra<F: Field>(c: &FinCoalgebra<F>) -> Report {
    let n = c.dim();
    let id = Matrix::identity(n);
    let mut report = Report::new("coalgebra");
    let mut coassoc = Law::new("coassociativity");
    let mut left = Law::new("counit.left");
    let mut right = Law::new("counit.right");
    for i in 0..n {
        let d = c.comult.column(i);
        coassoc.check(&[i], &apply_kron(&c.comult, &id, &d), &apply_kron(&id, &c.comult, &d));
        let b = unit_vector(n, i);
        left.check(&[i], &apply_kron(&c.counit, &id, &d), &b);
        right.check(&[i], &apply_kron(&id, &c.counit, &d), &b);
    }
    report.push(coassoc.finish());
    report.push(left.finish());
    report.push(right.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn grouplike_passes() {
        assert!(check_coalgebra(&FinCoalgebra::<Q>::grouplike(3)).passed());
    }

    #[test]
    fn zeroed_counit_caught_at_that_index() {
        let mut c = FinCoalgebra::<Q>::grouplike(3);
        c.counit.set(0, 1, Q::zero());
        let r = check_coalgebra(&c);
        assert!(!r.passed());
        assert_eq!(r.law("counit.left").unwrap().witness.as_ref().unwrap().indices, vec![1]);
        assert!(r.law("coassociativity").unwrap().passed());
    }

    #[test]
    fn matrix_coalgebra_passes() {
        let c = FinCoalgebra::<Q>::matrix(2);
        // Δ(e12) = e11⊗e12 + e12⊗e22
        let d = c.comult.column(1);
        let nonzero: Vec<usize> = (0..16).filter(|&k| !d[k].is_zero()).collect();
        assert_eq!(nonzero, vec![1, 7]);
        assert!(check_coalgebra(&c).passed());
    }
}
