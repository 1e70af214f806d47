use crate::error::StructureError;
use crate::exactlin::{apply_kron, axpy, unit_vector, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::findim::{
    check_coring_comodule, check_left_action, Action, BalancedTensor, Bimodule, Coring, CoringComodule,
};
use crate::report::{Law, Report};

use super::bialgebroid::DkDatum;
use super::weak::split_terms;

/// Left `A`-module `M` with a coaction `M → C ⊗_R M`.
#[derive(Debug, Clone)]
pub struct DkModule<F> {
    /// `A` acting on `M`.
    pub action: Action<F>,
    /// `C ⊗_R M`, `R` acting on `M` through `s_A`.
    pub tensor: BalancedTensor<F>,
    pub coaction: Matrix<F>,
}

impl<F: Field> DkModule<F> {
    pub fn new(d: &DkDatum<F>, action: Action<F>, coaction: Matrix<F>) -> Result<Self, StructureError> {
        let tensor = BalancedTensor::new(&d.coalgebra.coring.bimodule.right, &action.pullback(&d.algebra.source))?;
        if coaction.shape() != (tensor.quot_dim(), action.dim()) {
            return Err(StructureError::Shape(format!(
                "coaction {:?}, expected {:?}",
                coaction.shape(),
                (tensor.quot_dim(), action.dim())
            )));
        }
        Ok(DkModule { action, tensor, coaction })
    }

    pub fn from_ambient(d: &DkDatum<F>, action: Action<F>, coaction: &Matrix<F>) -> Result<Self, StructureError> {
        let tensor = BalancedTensor::new(&d.coalgebra.coring.bimodule.right, &action.pullback(&d.algebra.source))?;
        if coaction.rows() != tensor.ambient_dim() {
            return Err(StructureError::Shape(format!(
                "ambient coaction has {} rows, expected {}",
                coaction.rows(),
                tensor.ambient_dim()
            )));
        }
        let coaction = tensor.project_matrix(coaction);
        Self::new(d, action, coaction)
    }

    pub fn dim(&self) -> usize {
        self.action.dim()
    }

    fn comodule(&self, d: &DkDatum<F>) -> CoringComodule<F> {
        CoringComodule {
            coring: d.coalgebra.coring.clone(),
            module: self.action.pullback(&d.algebra.source),
            tensor: self.tensor.clone(),
            coaction: self.coaction.clone(),
        }
    }
}

/// `A`-module laws, `C`-comodule laws and `ρ(a·m) = a₋₁·m₋₁ ⊗_R a₀·m₀`.
pub fn check_dk_module<F: Field>(d: &DkDatum<F>, m: &DkModule<F>) -> Report {
    let mut report = Report::new("Doi-Koppinen module");
    report.absorb("action", check_left_action(&d.algebra.algebra, &m.action));
    if m.action.arity() != d.algebra.dim() {
        return report;
    }
    report.absorb("comodule", check_coring_comodule(&m.comodule(d)));
    let (na, nm) = (d.algebra.dim(), m.dim());
    let c_act = &d.coalgebra.action;
    let m_lifts: Vec<_> = (0..nm).map(|j| m.tensor.lift(&m.coaction.column(j))).collect();
    let mut law = Law::new("compatibility");
    for i in 0..na {
        let terms = split_terms(&d.algebra.rho_lift(&unit_vector(na, i)), na);
        let op = m.action.basis_op(i);
        for j in 0..nm {
            let lhs = m.coaction.apply(&op.column(j));
            let mut amb: Vector<F> = zero_vector(m.tensor.ambient_dim());
            for (h, a, w) in &terms {
                axpy(&mut amb, w, &apply_kron(c_act.basis_op(*h), m.action.basis_op(*a), &m_lifts[j]));
            }
            law.check(&[i, j], &lhs, &m.tensor.project(&amb));
        }
    }
    report.push(law.finish());
    report
}

/// `C ⊗_R A` with its `A`-bimodule structure and counit. The full coring,
/// which needs `𝒞 ⊗_A 𝒞`, is built on demand by [`DkCoring::coring`].
#[derive(Debug, Clone)]
pub struct DkCoring<F> {
    pub tensor: BalancedTensor<F>,
    pub bimodule: Bimodule<F>,
    /// `dim A x dim 𝒞`
    pub counit: Matrix<F>,
}

/// `C ⊗_R A` with `a·(c ⊗ a') = a₋₁·c ⊗ a₀a'`, right multiplication, and
/// `ε(c ⊗ a) = s_A(ε_C(c)) a`; verifies that the ambient formulas descend.
pub fn build_dk_coring<F: Field>(d: &DkDatum<F>) -> Result<DkCoring<F>, StructureError> {
    let alg = &d.algebra.algebra;
    let na = alg.dim();
    let c_act = &d.coalgebra.action;
    let tensor = BalancedTensor::new(&d.coalgebra.coring.bimodule.right, &d.algebra.r_module())?;
    let mut report = Report::new("Doi-Koppinen coring");
    let mut left_law = Law::new("left_action.well_defined");
    let mut ops = Vec::with_capacity(na);
    for i in 0..na {
        let terms = split_terms(&d.algebra.rho_lift(&unit_vector(na, i)), na);
        let mut amb = Matrix::zeros(tensor.ambient_dim(), tensor.ambient_dim());
        for (h, a, w) in &terms {
            amb.add_scaled(w, &c_act.basis_op(*h).kron(&alg.left_mult(&alg.basis(*a))));
        }
        let projected = tensor.project_matrix(&amb);
        ops.push(tensor.descend(&projected, &mut left_law));
    }
    report.push(left_law.finish());
    let left = Action::new(tensor.quot_dim(), ops)?;
    let right = tensor.induced_right(&Action::right_regular(alg));
    let eps_c = &d.coalgebra.coring.counit;
    let nc = d.coalgebra.dim();
    let amb_cols: Vec<_> =
        (0..nc * na).map(|ca| alg.mul(&d.algebra.source.apply(&eps_c.column(ca / na)), &alg.basis(ca % na))).collect();
    let mut counit_law = Law::new("counit.well_defined");
    let counit = tensor.descend(&Matrix::from_columns(na, &amb_cols)?, &mut counit_law);
    report.push(counit_law.finish());
    StructureError::from_report(report)?;
    Ok(DkCoring { tensor, bimodule: Bimodule { left, right }, counit })
}

impl<F: Field> DkCoring<F> {
    pub fn dim(&self) -> usize {
        self.tensor.quot_dim()
    }

    /// The `A`-coring `𝒞` with `Δ(c ⊗ a) = (c₁ ⊗ 1) ⊗_A (c₂ ⊗ a)`.
    pub fn coring(&self, d: &DkDatum<F>) -> Result<Coring<F>, StructureError> {
        let alg = &d.algebra.algebra;
        let (nc, na) = (d.coalgebra.dim(), alg.dim());
        let square = BalancedTensor::new(&self.bimodule.right, &self.bimodule.left)?;
        let one = alg.unit();
        let delta_lifts: Vec<_> = (0..nc).map(|c| d.coalgebra.coring.delta_lift(&unit_vector(nc, c))).collect();
        let amb_cols: Vec<_> = (0..nc * na)
            .map(|ca| {
                let (c, a) = (ca / na, ca % na);
                let mut out: Vector<F> = zero_vector(square.quot_dim());
                for (i, j, w) in split_terms(&delta_lifts[c], nc) {
                    let x = self.tensor.project_pair(&unit_vector(nc, i), one);
                    let y = self.tensor.project_pair(&unit_vector(nc, j), &unit_vector(na, a));
                    axpy(&mut out, &w, &square.project_pair(&x, &y));
                }
                out
            })
            .collect();
        let mut law = Law::new("comult.well_defined");
        let comult = self.tensor.descend(&Matrix::from_columns(square.quot_dim(), &amb_cols)?, &mut law);
        let mut report = Report::new("Doi-Koppinen coring");
        report.push(law.finish());
        StructureError::from_report(report)?;
        Coring::with_tensor(alg.clone(), self.bimodule.clone(), square, comult, self.counit.clone())
    }

    /// `𝒞`-comodule to Doi-Koppinen module: `(c ⊗ a) ⊗ m ↦ c ⊗ a·m`.
    pub fn to_dk_module(&self, d: &DkDatum<F>, m: &CoringComodule<F>) -> Result<DkModule<F>, StructureError> {
        let nm = m.dim();
        let nc = d.coalgebra.dim();
        let target = BalancedTensor::new(&d.coalgebra.coring.bimodule.right, &m.module.pullback(&d.algebra.source))?;
        let cols: Vec<_> = (0..nm)
            .map(|j| {
                let lifted = m.tensor.lift(&m.coaction.column(j));
                let mut out: Vector<F> = zero_vector(target.quot_dim());
                for (q, k, w) in split_terms(&lifted, nm) {
                    let (c, a) = self.tensor.pair_of(q);
                    let am = m.module.basis_op(a).column(k);
                    axpy(&mut out, &w, &target.project_pair(&unit_vector(nc, c), &am));
                }
                out
            })
            .collect();
        DkModule::new(d, m.module.clone(), Matrix::from_columns(target.quot_dim(), &cols)?)
    }

    /// Doi-Koppinen module to `𝒞`-comodule: `c ⊗ m ↦ (c ⊗ 1) ⊗ m`.
    pub fn to_comodule(
        &self,
        d: &DkDatum<F>,
        coring: &Coring<F>,
        m: &DkModule<F>,
    ) -> Result<CoringComodule<F>, StructureError> {
        let nm = m.dim();
        let nc = d.coalgebra.dim();
        let target = BalancedTensor::new(&coring.bimodule.right, &m.action)?;
        let one = d.algebra.algebra.unit();
        let cols: Vec<_> = (0..nm)
            .map(|j| {
                let lifted = m.tensor.lift(&m.coaction.column(j));
                let mut out: Vector<F> = zero_vector(target.quot_dim());
                for (c, k, w) in split_terms(&lifted, nm) {
                    let x = self.tensor.project_pair(&unit_vector(nc, c), one);
                    axpy(&mut out, &w, &target.project_pair(&x, &unit_vector(nm, k)));
                }
                out
            })
            .collect();
        CoringComodule::new(coring.clone(), m.action.clone(), Matrix::from_columns(target.quot_dim(), &cols)?)
    }
}
