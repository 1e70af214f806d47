use crate::exactlin::{Matrix, Vector};
use crate::field::Field;
use crate::report::{Law, Report};

use super::algebra::{combine, FinAlgebra};
use crate::error::StructureError;

/// Action of an algebra on a space: `ops[k]` is the operator of the `k`-th
/// basis element. Whether it is a left or right action is up to the owner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action<F> {
    dim: usize,
    ops: Vec<Matrix<F>>,
}

impl<F: Field> Action<F> {
    pub fn new(dim: usize, ops: Vec<Matrix<F>>) -> Result<Self, StructureError> {
        if let Some(m) = ops.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(StructureError::Shape(format!("action operator {:?} on a space of dim {dim}", m.shape())));
        }
        Ok(Action { dim, ops })
    }

    /// Left multiplication of an algebra on itself.
    pub fn left_regular(alg: &FinAlgebra<F>) -> Self {
        let ops = (0..alg.dim()).map(|k| alg.left_mult(&alg.basis(k))).collect();
        Action { dim: alg.dim(), ops }
    }

    /// Right multiplication of an algebra on itself.
    pub fn right_regular(alg: &FinAlgebra<F>) -> Self {
        let ops = (0..alg.dim()).map(|k| alg.right_mult(&alg.basis(k))).collect();
        Action { dim: alg.dim(), ops }
    }

    /// `r ↦ op(f(r))` for an algebra map `f` given by its matrix.
    pub fn pullback(&self, f: &Matrix<F>) -> Self {
        let ops = f.columns().iter().map(|c| self.op(c)).collect();
        Action { dim: self.dim, ops }
    }

    /// Operator of an arbitrary element `r` of the acting algebra.
    pub fn op(&self, r: &[F]) -> Matrix<F> {
        if self.ops.is_empty() {
            return Matrix::zeros(self.dim, self.dim);
        }
        combine(&self.ops, r)
    }

    pub fn basis_op(&self, k: usize) -> &Matrix<F> {
        &self.ops[k]
    }

    pub fn ops(&self) -> &[Matrix<F>] {
        &self.ops
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis elements of the acting algebra.
    pub fn arity(&self) -> usize {
        self.ops.len()
    }

    pub fn act(&self, r: &[F], m: &[F]) -> Vector<F> {
        self.op(r).apply(m)
    }

    /// The trivial action of the one-dimensional ground algebra.
    pub fn scalar(dim: usize) -> Self {
        Action { dim, ops: vec![Matrix::identity(dim)] }
    }
}

fn check_action<F: Field>(alg: &FinAlgebra<F>, act: &Action<F>, right: bool, report: &mut Report, prefix: &str) {
    let mut unit = Law::new(format!("{prefix}.unital"));
    if act.arity() != alg.dim() {
        unit.fail(&[], format!("{} operators for an algebra of dim {}", act.arity(), alg.dim()));
        report.push(unit.finish());
        return;
    }
    let id = Matrix::identity(act.dim());
    unit.check(&[], act.op(alg.unit()).entries(), id.entries());
    report.push(unit.finish());
    let mut assoc = Law::new(format!("{prefix}.associative"));
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let lhs = act.op(&alg.basis_product(i, j));
            let rhs = if right { act.basis_op(j).mul(act.basis_op(i)) } else { act.basis_op(i).mul(act.basis_op(j)) };
            assoc.check(&[i, j], lhs.entries(), rhs.entries());
        }
    }
    report.push(assoc.finish());
}

/// `op(1) = id` and `op(r r') = op(r) op(r')`.
pub fn check_left_action<F: Field>(alg: &FinAlgebra<F>, act: &Action<F>) -> Report {
    let mut report = Report::new("left module");
    check_action(alg, act, false, &mut report, "left");
    report
}

/// `op(1) = id` and `op(r r') = op(r') op(r)`.
pub fn check_right_action<F: Field>(alg: &FinAlgebra<F>, act: &Action<F>) -> Report {
    let mut report = Report::new("right module");
    check_action(alg, act, true, &mut report, "right");
    report
}

/// Bimodule over a single base algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule<F> {
    pub left: Action<F>,
    pub right: Action<F>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(left: Action<F>, right: Action<F>) -> Result<Self, StructureError> {
        if left.dim() != right.dim() || left.arity() != right.arity() {
            return Err(StructureError::Shape("left and right actions disagree on dimensions".into()));
        }
        Ok(Bimodule { left, right })
    }

    /// An algebra as a bimodule over itself.
    pub fn regular(alg: &FinAlgebra<F>) -> Self {
        Bimodule { left: Action::left_regular(alg), right: Action::right_regular(alg) }
    }

    pub fn dim(&self) -> usize {
        self.left.dim()
    }
}

pub fn check_bimodule<F: Field>(base: &FinAlgebra<F>, m: &Bimodule<F>) -> Report {
    let mut report = Report::new("bimodule");
    check_action(base, &m.left, false, &mut report, "left");
    check_action(base, &m.right, true, &mut report, "right");
    let mut commute = Law::new("actions_commute");
    if m.left.arity() == base.dim() && m.right.arity() == base.dim() {
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                let lr = m.left.basis_op(i).mul(m.right.basis_op(j));
                let rl = m.right.basis_op(j).mul(m.left.basis_op(i));
                commute.check(&[i, j], lr.entries(), rl.entries());
            }
        }
    }
    report.push(commute.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn regular_bimodule_passes() {
        let r = FinAlgebra::<Q>::upper_triangular_2();
        assert!(check_bimodule(&r, &Bimodule::regular(&r)).passed());
    }

    #[test]
    fn swapped_sides_fail_for_noncommutative_base() {
        let r = FinAlgebra::<Q>::upper_triangular_2();
        let m = Bimodule { left: Action::right_regular(&r), right: Action::left_regular(&r) };
        let rep = check_bimodule(&r, &m);
        assert!(!rep.passed());
        assert!(!rep.law("left.associative").unwrap().passed());
    }
}
