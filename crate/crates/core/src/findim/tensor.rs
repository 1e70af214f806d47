use crate::exactlin::{kernel, quotient, tensor_vec, zero_vector, Matrix, QuotientSpace, Subspace, Vector};
use crate::field::Field;
use crate::report::{Law, LawEntry};

use super::algebra::FinAlgebra;
use super::module::Action;
use crate::error::StructureError;

/// `X ⊗_R Y` as a quotient of `X ⊗ Y` by `x·r ⊗ y − x ⊗ r·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedTensor<F> {
    left_dim: usize,
    right_dim: usize,
    quotient: QuotientSpace<F>,
}

impl<F: Field> BalancedTensor<F> {
    /// `x_right` is the right action on `X`, `y_left` the left action on `Y`.
    pub fn new(x_right: &Action<F>, y_left: &Action<F>) -> Result<Self, StructureError> {
        if x_right.arity() != y_left.arity() {
            return Err(StructureError::BaseMismatch(format!(
                "right leg acted on by a base of dim {}, left leg by dim {}",
                x_right.arity(),
                y_left.arity()
            )));
        }
        let (nx, ny) = (x_right.dim(), y_left.dim());
        let mut relations = Subspace::zero(nx * ny);
        for k in 0..x_right.arity() {
            let (rx, ly) = (x_right.basis_op(k), y_left.basis_op(k));
            for i in 0..nx {
                for j in 0..ny {
                    let mut v: Vector<F> = zero_vector(nx * ny);
                    for a in 0..nx {
                        let c = rx.get(a, i);
                        if !c.is_zero() {
                            v[a * ny + j] = v[a * ny + j].add(c);
                        }
                    }
                    for b in 0..ny {
                        let c = ly.get(b, j);
                        if !c.is_zero() {
                            v[i * ny + b] = v[i * ny + b].sub(c);
                        }
                    }
                    relations.insert(v);
                }
            }
        }
        let quotient = quotient(nx * ny, relations)?;
        Ok(BalancedTensor { left_dim: nx, right_dim: ny, quotient })
    }

    /// Tensor over the ground field: no relations.
    pub fn plain(nx: usize, ny: usize) -> Self {
        let quotient = quotient(nx * ny, Subspace::zero(nx * ny)).expect("dimensions agree");
        BalancedTensor { left_dim: nx, right_dim: ny, quotient }
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.left_dim * self.right_dim
    }

    pub fn quot_dim(&self) -> usize {
        self.quotient.quot_dim()
    }

    pub fn quotient(&self) -> &QuotientSpace<F> {
        &self.quotient
    }

    pub fn relations(&self) -> &Subspace<F> {
        self.quotient.relations()
    }

    pub fn project(&self, v: &[F]) -> Vector<F> {
        self.quotient.project(v)
    }

    pub fn project_pair(&self, x: &[F], y: &[F]) -> Vector<F> {
        self.quotient.project(&tensor_vec(x, y))
    }

    pub fn lift(&self, q: &[F]) -> Vector<F> {
        self.quotient.lift(q)
    }

    /// Basis pair `(i, j)` whose tensor represents quotient coordinate `q`.
    pub fn pair_of(&self, q: usize) -> (usize, usize) {
        let a = self.quotient.free()[q];
        (a / self.right_dim, a % self.right_dim)
    }

    /// Ambient-valued map to quotient coordinates.
    pub fn project_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        self.quotient.project_matrix(m)
    }

    /// Matrix of `f ⊗_R g : self → target`, evaluated on representatives.
    /// Meaningful when `f` and `g` respect the balancing relations.
    pub fn induced(&self, target: &BalancedTensor<F>, f: &Matrix<F>, g: &Matrix<F>) -> Matrix<F> {
        let fc = f.columns();
        let gc = g.columns();
        let cols: Vec<_> = (0..self.quot_dim())
            .map(|q| {
                let (i, j) = self.pair_of(q);
                target.project_pair(&fc[i], &gc[j])
            })
            .collect();
        Matrix::from_columns(target.quot_dim(), &cols).expect("induced shape")
    }

    /// Left action on `X ⊗_R Y` coming from a left action on `X`.
    pub fn induced_left(&self, x_left: &Action<F>) -> Action<F> {
        let id = Matrix::identity(self.right_dim);
        let ops = x_left.ops().iter().map(|op| self.induced(self, op, &id)).collect();
        Action::new(self.quot_dim(), ops).expect("induced action")
    }

    /// Right action on `X ⊗_R Y` coming from a right action on `Y`.
    pub fn induced_right(&self, y_right: &Action<F>) -> Action<F> {
        let id = Matrix::identity(self.left_dim);
        let ops = y_right.ops().iter().map(|op| self.induced(self, &id, op)).collect();
        Action::new(self.quot_dim(), ops).expect("induced action")
    }

    /// Restricts an ambient map to the quotient, recording in `law` every
    /// relation basis vector it fails to kill.
    pub fn descend(&self, m: &Matrix<F>, law: &mut Law) -> Matrix<F> {
        assert_eq!(m.cols(), self.ambient_dim());
        let zero = zero_vector(m.rows());
        for (k, rel) in self.relations().basis().iter().enumerate() {
            law.check(&[k], &m.apply(rel), &zero);
        }
        m.mul(self.quotient.section())
    }

    /// Product of representatives in the tensor algebra `H ⊗ A`, projected back.
    pub fn product(&self, h: &FinAlgebra<F>, a: &FinAlgebra<F>, x: &[F], y: &[F]) -> Vector<F> {
        self.project(&h.tensor_mul(a, &self.lift(x), &self.lift(y)))
    }
}

/// Subspace of `X ⊗_R Y` on which `first_ops[k] ⊗ id` and `id ⊗ second_ops[k]`
/// agree for every `k`: the Takeuchi condition when `first_ops` are right
/// multiplications by target images and `second_ops` right multiplications
/// by source images.
pub fn takeuchi_subspace<F: Field>(
    tensor: &BalancedTensor<F>,
    first_ops: &[Matrix<F>],
    second_ops: &[Matrix<F>],
) -> Result<Subspace<F>, StructureError> {
    if first_ops.len() != second_ops.len() {
        return Err(StructureError::BaseMismatch("condition operators come in pairs".into()));
    }
    let q = tensor.quot_dim();
    let idx = Matrix::identity(tensor.left_dim());
    let idy = Matrix::identity(tensor.right_dim());
    let mut stacked = Matrix::zeros(0, q);
    for (f, g) in first_ops.iter().zip(second_ops) {
        let d = tensor.induced(tensor, f, &idy).sub(&tensor.induced(tensor, &idx, g));
        stacked = stacked.vstack(&d);
    }
    if first_ops.is_empty() {
        return Ok(Subspace::full(q));
    }
    Ok(kernel(&stacked))
}

/// `X ⊗_R Y ⊗_R Z` in both bracketings, with the comparison map verified to
/// be a well-defined isomorphism.
#[derive(Debug, Clone)]
pub struct TripleTensor<F> {
    pub xy: BalancedTensor<F>,
    pub yz: BalancedTensor<F>,
    /// `(X ⊗_R Y) ⊗_R Z`
    pub left: BalancedTensor<F>,
    /// `X ⊗_R (Y ⊗_R Z)`
    pub right: BalancedTensor<F>,
    /// `left → right`
    pub to_right: Matrix<F>,
    pub associator: LawEntry,
}

impl<F: Field> TripleTensor<F> {
    pub fn new(
        x_right: &Action<F>,
        y_left: &Action<F>,
        y_right: &Action<F>,
        z_left: &Action<F>,
    ) -> Result<Self, StructureError> {
        let xy = BalancedTensor::new(x_right, y_left)?;
        let yz = BalancedTensor::new(y_right, z_left)?;
        let left = BalancedTensor::new(&xy.induced_right(y_right), z_left)?;
        let right = BalancedTensor::new(x_right, &yz.induced_left(y_left))?;
        let (ny, nz) = (xy.right_dim(), yz.right_dim());
        let proj = right.quotient().projection();
        let qyz = yz.quot_dim();
        let yz_cols: Vec<Vector<F>> = yz.quotient().projection().columns();
        // x ⊗ y ⊗ z ↦ x ⊗_R [y ⊗_R z]
        let alpha = |x: usize, y: usize, z: usize| -> Vector<F> {
            let w = &yz_cols[y * nz + z];
            let mut out: Vector<F> = zero_vector(right.quot_dim());
            for (k, c) in w.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let col = x * qyz + k;
                for (r, o) in out.iter_mut().enumerate() {
                    o.add_mul(c, proj.get(r, col));
                }
            }
            out
        };
        let mut law = Law::new("associator");
        let zero = zero_vector(right.quot_dim());
        for (k, rel) in xy.relations().basis().iter().enumerate() {
            for z in 0..nz {
                let mut acc = zero.clone();
                for (xyi, c) in rel.iter().enumerate() {
                    if !c.is_zero() {
                        crate::exactlin::axpy(&mut acc, c, &alpha(xyi / ny, xyi % ny, z));
                    }
                }
                law.check(&[k, z], &acc, &zero);
            }
        }
        let a_cols: Vec<Vector<F>> = (0..xy.quot_dim() * nz)
            .map(|wz| {
                let (x, y) = xy.pair_of(wz / nz);
                alpha(x, y, wz % nz)
            })
            .collect();
        let a = Matrix::from_columns(right.quot_dim(), &a_cols).expect("associator shape");
        for (k, rel) in left.relations().basis().iter().enumerate() {
            law.check(&[k], &a.apply(rel), &zero);
        }
        let to_right = a.mul(left.quotient().section());
        let bijective = left.quot_dim() == right.quot_dim() && to_right.rank() == right.quot_dim();
        law.require(&[left.quot_dim(), right.quot_dim()], bijective, "bracketings are not isomorphic");
        Ok(TripleTensor { xy, yz, left, right, to_right, associator: law.finish() })
    }

    /// Moves left-bracketed quotient coordinates to the right bracketing.
    pub fn reassociate(&self, left_coords: &[F]) -> Vector<F> {
        self.to_right.apply(left_coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::findim::Bimodule;

    #[test]
    fn ground_base_gives_plain_tensor() {
        let k = Action::<Q>::scalar(3);
        let l = Action::<Q>::scalar(2);
        let t = BalancedTensor::new(&k, &l).unwrap();
        assert_eq!(t.quot_dim(), 6);
        assert!(t.quotient().projection().is_identity());
    }

    #[test]
    fn unit_object_over_diagonal() {
        let r = FinAlgebra::<Q>::diagonal(2);
        let m = Bimodule::regular(&r);
        let t = BalancedTensor::new(&m.right, &m.left).unwrap();
        assert_eq!(t.quot_dim(), 2);
    }

    #[test]
    fn base_mismatch_is_an_error() {
        let a = Action::<Q>::scalar(2);
        let r = FinAlgebra::<Q>::diagonal(2);
        assert!(matches!(BalancedTensor::new(&a, &Action::left_regular(&r)), Err(StructureError::BaseMismatch(_))));
    }

    #[test]
    fn triple_tensor_of_regular_bimodule() {
        let r = FinAlgebra::<Q>::upper_triangular_2();
        let m = Bimodule::regular(&r);
        let t = TripleTensor::new(&m.right, &m.left, &m.right, &m.left).unwrap();
        assert!(t.associator.passed());
        assert_eq!(t.left.quot_dim(), 3);
        assert_eq!(t.right.quot_dim(), 3);
    }
}
