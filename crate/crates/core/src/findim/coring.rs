use crate::exactlin::{axpy, unit_vector, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::report::{Law, Report};

use super::algebra::FinAlgebra;
use super::module::{check_bimodule, check_left_action, Action, Bimodule};
use super::tensor::{BalancedTensor, TripleTensor};
use crate::error::StructureError;

/// Comonoid in bimodules over `base`. `comult` lands in quotient
/// coordinates of `tensor = C ⊗_R C`; `counit` is `dim R x dim C`.
#[derive(Debug, Clone)]
pub struct Coring<F> {
    pub base: FinAlgebra<F>,
    pub bimodule: Bimodule<F>,
    pub tensor: BalancedTensor<F>,
    pub comult: Matrix<F>,
    pub counit: Matrix<F>,
}

impl<F: Field> Coring<F> {
    pub fn new(
        base: FinAlgebra<F>,
        bimodule: Bimodule<F>,
        comult: Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let tensor = BalancedTensor::new(&bimodule.right, &bimodule.left)?;
        Self::with_tensor(base, bimodule, tensor, comult, counit)
    }

    /// As [`Coring::new`], reusing an already computed `C ⊗_R C`.
    pub fn with_tensor(
        base: FinAlgebra<F>,
        bimodule: Bimodule<F>,
        tensor: BalancedTensor<F>,
        comult: Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let n = bimodule.dim();
        if bimodule.left.arity() != base.dim() {
            return Err(StructureError::BaseMismatch(format!(
                "bimodule over a base of dim {}, coring base has dim {}",
                bimodule.left.arity(),
                base.dim()
            )));
        }
        if comult.shape() != (tensor.quot_dim(), n) || counit.shape() != (base.dim(), n) {
            return Err(StructureError::Shape(format!(
                "coring of dim {n}: comult {:?} (expected {:?}), counit {:?} (expected {:?})",
                comult.shape(),
                (tensor.quot_dim(), n),
                counit.shape(),
                (base.dim(), n)
            )));
        }
        Ok(Coring { base, bimodule, tensor, comult, counit })
    }

    /// Comultiplication given on representatives in `C ⊗ C`.
    pub fn from_ambient(
        base: FinAlgebra<F>,
        bimodule: Bimodule<F>,
        comult: &Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let tensor = BalancedTensor::new(&bimodule.right, &bimodule.left)?;
        if comult.rows() != tensor.ambient_dim() {
            return Err(StructureError::Shape(format!(
                "ambient comult has {} rows, expected {}",
                comult.rows(),
                tensor.ambient_dim()
            )));
        }
        let comult = tensor.project_matrix(comult);
        Self::with_tensor(base, bimodule, tensor, comult, counit)
    }

    /// `R` itself with `Δ(r) = r ⊗_R 1` and `ε = id`.
    pub fn trivial(base: FinAlgebra<F>) -> Self {
        let bimodule = Bimodule::regular(&base);
        let tensor = BalancedTensor::new(&bimodule.right, &bimodule.left).expect("same base");
        let cols: Vec<_> = (0..base.dim()).map(|i| tensor.project_pair(&base.basis(i), base.unit())).collect();
        let comult = Matrix::from_columns(tensor.quot_dim(), &cols).expect("trivial comult");
        let counit = Matrix::identity(base.dim());
        Coring { base, bimodule, tensor, comult, counit }
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn delta(&self, c: &[F]) -> Vector<F> {
        self.comult.apply(c)
    }

    pub fn epsilon(&self, c: &[F]) -> Vector<F> {
        self.counit.apply(c)
    }

    /// Representative of `Δ(c)` in `C ⊗ C`.
    pub fn delta_lift(&self, c: &[F]) -> Vector<F> {
        self.tensor.lift(&self.delta(c))
    }
}

/// `(ε ⊗_R M)(x) = ε(x₁)·x₂` for `x ∈ C ⊗_R M`, evaluated on representatives.
pub fn counit_contract<F: Field>(
    coring: &Coring<F>,
    m_left: &Action<F>,
    tensor: &BalancedTensor<F>,
    x: &[F],
) -> Vector<F> {
    let mut out: Vector<F> = zero_vector(m_left.dim());
    for (q, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (i, j) = tensor.pair_of(q);
        let r = coring.counit.column(i);
        axpy(&mut out, c, &m_left.op(&r).column(j));
    }
    out
}

/// Bimodule laws, linearity of both structure maps, the associator,
/// coassociativity and both counit laws.
pub fn check_coring<F: Field>(c: &Coring<F>) -> Report {
    let mut report = Report::new("coring");
    report.absorb("bimodule", check_bimodule(&c.base, &c.bimodule));
    let n = c.dim();
    let nr = c.base.dim();
    let t = &c.tensor;
    let ind_left = t.induced_left(&c.bimodule.left);
    let ind_right = t.induced_right(&c.bimodule.right);
    let mut dl = Law::new("comult.left_linear");
    let mut dr = Law::new("comult.right_linear");
    let mut el = Law::new("counit.left_linear");
    let mut er = Law::new("counit.right_linear");
    let delta_cols = c.comult.columns();
    let eps_cols = c.counit.columns();
    for k in 0..nr {
        let rk = c.base.basis(k);
        let lm = c.base.left_mult(&rk);
        let rm = c.base.right_mult(&rk);
        let lk = c.bimodule.left.basis_op(k);
        let rtk = c.bimodule.right.basis_op(k);
        for i in 0..n {
            let lc = lk.column(i);
            let rc = rtk.column(i);
            dl.check(&[k, i], &c.delta(&lc), &ind_left.basis_op(k).apply(&delta_cols[i]));
            dr.check(&[k, i], &c.delta(&rc), &ind_right.basis_op(k).apply(&delta_cols[i]));
            el.check(&[k, i], &c.epsilon(&lc), &lm.apply(&eps_cols[i]));
            er.check(&[k, i], &c.epsilon(&rc), &rm.apply(&eps_cols[i]));
        }
    }
    for law in [dl, dr, el, er] {
        report.push(law.finish());
    }
    let left = &c.bimodule.left;
    let right = &c.bimodule.right;
    match TripleTensor::new(right, left, right, left) {
        Ok(triple) => {
            report.push(triple.associator.clone());
            let mut coassoc = Law::new("coassociativity");
            for i in 0..n {
                let (lhs, rhs) = coassociativity_sides(&triple, &delta_cols[i], &delta_cols, &delta_cols, t);
                coassoc.check(&[i], &lhs, &rhs);
            }
            report.push(coassoc.finish());
        }
        Err(e) => {
            let mut law = Law::new("associator");
            law.fail(&[], e.to_string());
            report.push(law.finish());
        }
    }
    let mut cl = Law::new("counit.left");
    let mut cr = Law::new("counit.right");
    for i in 0..n {
        let b = unit_vector(n, i);
        cl.check(&[i], &counit_contract(c, left, t, &delta_cols[i]), &b);
        let mut acc: Vector<F> = zero_vector(n);
        for (q, x) in delta_cols[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (a, j) = t.pair_of(q);
            axpy(&mut acc, x, &right.op(&eps_cols[j]).column(a));
        }
        cr.check(&[i], &acc, &b);
    }
    report.push(cl.finish());
    report.push(cr.finish());
    report
}

/// Both sides of `(Δ ⊗_R id)ρ = (id ⊗_R ρ)ρ` at one element, in right-bracketed
/// coordinates. `rho` is in coordinates of `tensor = C ⊗_R M`, `rho_cols` are the
/// coaction's columns, `delta_cols` the comultiplication's.
fn coassociativity_sides<F: Field>(
    triple: &TripleTensor<F>,
    rho: &[F],
    delta_cols: &[Vector<F>],
    rho_cols: &[Vector<F>],
    tensor: &BalancedTensor<F>,
) -> (Vector<F>, Vector<F>) {
    let nm = tensor.right_dim();
    let mut lhs: Vector<F> = zero_vector(triple.left.quot_dim());
    let mut rhs: Vector<F> = zero_vector(triple.right.quot_dim());
    for (q, x) in rho.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, j) = tensor.pair_of(q);
        axpy(&mut lhs, x, &triple.left.project_pair(&delta_cols[i], &unit_vector(nm, j)));
        axpy(&mut rhs, x, &triple.right.project_pair(&unit_vector(tensor.left_dim(), i), &rho_cols[j]));
    }
    (triple.reassociate(&lhs), rhs)
}

/// Left comodule of a coring: `coaction` lands in quotient coordinates of
/// `tensor = C ⊗_R M`, `module` is the left action of the base on `M`.
#[derive(Debug, Clone)]
pub struct CoringComodule<F> {
    pub coring: Coring<F>,
    pub module: Action<F>,
    pub tensor: BalancedTensor<F>,
    pub coaction: Matrix<F>,
}

impl<F: Field> CoringComodule<F> {
    pub fn new(coring: Coring<F>, module: Action<F>, coaction: Matrix<F>) -> Result<Self, StructureError> {
        let tensor = BalancedTensor::new(&coring.bimodule.right, &module)?;
        if coaction.shape() != (tensor.quot_dim(), module.dim()) {
            return Err(StructureError::Shape(format!(
                "coaction {:?}, expected {:?}",
                coaction.shape(),
                (tensor.quot_dim(), module.dim())
            )));
        }
        Ok(CoringComodule { coring, module, tensor, coaction })
    }

    /// The coring over itself with `ρ = Δ`.
    pub fn regular(coring: Coring<F>) -> Self {
        CoringComodule {
            module: coring.bimodule.left.clone(),
            tensor: coring.tensor.clone(),
            coaction: coring.comult.clone(),
            coring,
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }
}

pub fn check_coring_comodule<F: Field>(m: &CoringComodule<F>) -> Report {
    let mut report = Report::new("coring comodule");
    let c = &m.coring;
    report.absorb("module", check_left_action(&c.base, &m.module));
    let t = &m.tensor;
    let ind_left = t.induced_left(&c.bimodule.left);
    let rho_cols = m.coaction.columns();
    let mut lin = Law::new("coaction.left_linear");
    if m.module.arity() == c.base.dim() {
        for k in 0..c.base.dim() {
            for i in 0..m.dim() {
                let lhs = m.coaction.apply(&m.module.basis_op(k).column(i));
                lin.check(&[k, i], &lhs, &ind_left.basis_op(k).apply(&rho_cols[i]));
            }
        }
    }
    report.push(lin.finish());
    match TripleTensor::new(&c.bimodule.right, &c.bimodule.left, &c.bimodule.right, &m.module) {
        Ok(triple) => {
            report.push(triple.associator.clone());
            let delta_cols = c.comult.columns();
            let mut coassoc = Law::new("coassociativity");
            for i in 0..m.dim() {
                let (lhs, rhs) = coassociativity_sides(&triple, &rho_cols[i], &delta_cols, &rho_cols, t);
                coassoc.check(&[i], &lhs, &rhs);
            }
            report.push(coassoc.finish());
        }
        Err(e) => {
            let mut law = Law::new("associator");
            law.fail(&[], e.to_string());
            report.push(law.finish());
        }
    }
    let mut counit = Law::new("counit");
    for i in 0..m.dim() {
        counit.check(&[i], &counit_contract(c, &m.module, t, &rho_cols[i]), &unit_vector(m.dim(), i));
    }
    report.push(counit.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::findim::FinCoalgebra;

    fn over_ground(c: &FinCoalgebra<Q>) -> Coring<Q> {
        let k = FinAlgebra::ground();
        let n = c.dim();
        let bimodule = Bimodule::new(Action::scalar(n), Action::scalar(n)).unwrap();
        Coring::from_ambient(k, bimodule, &c.comult, c.counit.clone()).unwrap()
    }

    #[test]
    fn trivial_coring_passes() {
        let c = Coring::<Q>::trivial(FinAlgebra::upper_triangular_2());
        assert!(check_coring(&c).passed(), "{}", check_coring(&c));
    }

    #[test]
    fn doubled_counit_fails() {
        let mut c = Coring::<Q>::trivial(FinAlgebra::diagonal(2));
        c.counit = c.counit.scale(&Q::from(2));
        let r = check_coring(&c);
        assert!(!r.law("counit.left").unwrap().passed());
        assert!(r.law("coassociativity").unwrap().passed());
    }

    #[test]
    fn coalgebra_over_ground_field() {
        let c = over_ground(&FinCoalgebra::matrix(2));
        assert_eq!(c.tensor.quot_dim(), 16);
        assert!(check_coring(&c).passed());
    }

    #[test]
    fn comodules() {
        let c = over_ground(&FinCoalgebra::grouplike(2));
        assert!(check_coring_comodule(&CoringComodule::regular(c.clone())).passed());
        let r = Coring::<Q>::trivial(FinAlgebra::diagonal(2));
        let m = CoringComodule::new(r.clone(), r.bimodule.left.clone(), r.comult.clone()).unwrap();
        assert!(check_coring_comodule(&m).passed());
        // ρ ∘ swap is not colinear
        let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let bad = CoringComodule::new(c.clone(), Action::scalar(2), c.comult.mul(&swap)).unwrap();
        let rep = check_coring_comodule(&bad);
        assert!(!rep.law("counit").unwrap().passed());
    }
}
