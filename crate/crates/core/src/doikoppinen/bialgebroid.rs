use crate::bialgebroid::{takeuchi_ops_for, Bialgebroid};
use crate::error::StructureError;
use crate::exactlin::{apply_kron, axpy, unit_vector, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::findim::{
    check_algebra, check_algebra_map, check_coring, check_coring_comodule, check_left_action, takeuchi_subspace,
    Action, BalancedTensor, Bimodule, Coring, CoringComodule, FinAlgebra,
};
use crate::report::{Law, Report};

use super::weak::split_terms;

/// R-ring `(A, s_A)` with a coaction `A → H ⊗_R A` of a bialgebroid.
#[derive(Debug, Clone)]
pub struct ComoduleAlgebra<F> {
    pub algebra: FinAlgebra<F>,
    /// `dim A x dim R`
    pub source: Matrix<F>,
    /// `H ⊗_R A`, `R` acting on `A` through `source`.
    pub tensor: BalancedTensor<F>,
    /// `dim(H ⊗_R A) x dim A`
    pub coaction: Matrix<F>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(
        b: &Bialgebroid<F>,
        algebra: FinAlgebra<F>,
        source: Matrix<F>,
        coaction: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let tensor = Self::tensor_for(b, &algebra, &source)?;
        if coaction.shape() != (tensor.quot_dim(), algebra.dim()) {
            return Err(StructureError::Shape(format!(
                "coaction {:?}, expected {:?}",
                coaction.shape(),
                (tensor.quot_dim(), algebra.dim())
            )));
        }
        Ok(ComoduleAlgebra { algebra, source, tensor, coaction })
    }

    /// Coaction given on representatives in `H ⊗ A`.
    pub fn from_ambient(
        b: &Bialgebroid<F>,
        algebra: FinAlgebra<F>,
        source: Matrix<F>,
        coaction: &Matrix<F>,
    ) -> Result<Self, StructureError> {
        let tensor = Self::tensor_for(b, &algebra, &source)?;
        if coaction.shape() != (tensor.ambient_dim(), algebra.dim()) {
            return Err(StructureError::Shape(format!(
                "ambient coaction {:?}, expected {:?}",
                coaction.shape(),
                (tensor.ambient_dim(), algebra.dim())
            )));
        }
        let coaction = tensor.project_matrix(coaction);
        Ok(ComoduleAlgebra { algebra, source, tensor, coaction })
    }

    fn tensor_for(
        b: &Bialgebroid<F>,
        algebra: &FinAlgebra<F>,
        source: &Matrix<F>,
    ) -> Result<BalancedTensor<F>, StructureError> {
        if source.shape() != (algebra.dim(), b.base_dim()) {
            return Err(StructureError::Shape(format!(
                "source map {:?}, expected {:?}",
                source.shape(),
                (algebra.dim(), b.base_dim())
            )));
        }
        BalancedTensor::new(b.right_action(), &Action::left_regular(algebra).pullback(source))
    }

    /// `H` over itself: `s_A = s_H`, `ρ = Δ`.
    pub fn regular(b: &Bialgebroid<F>) -> Self {
        ComoduleAlgebra {
            algebra: b.total.clone(),
            source: b.source.clone(),
            tensor: b.tensor().clone(),
            coaction: b.coring.comult.clone(),
        }
    }

    /// `R` with `ρ(r) = s(r) ⊗_R 1`.
    pub fn base(b: &Bialgebroid<F>) -> Self {
        let d = b.base_dim();
        let source = Matrix::identity(d);
        let tensor = Self::tensor_for(b, &b.base, &source).expect("base tensor");
        let cols: Vec<_> = (0..d).map(|k| tensor.project_pair(&b.source.column(k), b.base.unit())).collect();
        let coaction = Matrix::from_columns(tensor.quot_dim(), &cols).expect("coaction shape");
        ComoduleAlgebra { algebra: b.base.clone(), source, tensor, coaction }
    }

    /// `R ⊗ R^op` with `s(a) = a ⊗ 1` and `ρ(r ⊗ r') = s_H(r) ⊗_R (1 ⊗ r')`.
    pub fn enveloping(b: &Bialgebroid<F>) -> Self {
        let r = &b.base;
        let d = r.dim();
        let algebra = r.tensor(&r.opposite());
        let one = r.unit();
        let source_cols: Vec<_> = (0..d).map(|k| crate::exactlin::tensor_vec(&r.basis(k), one)).collect();
        let source = Matrix::from_columns(d * d, &source_cols).expect("source shape");
        let cols: Vec<_> = (0..d * d)
            .map(|kl| {
                let left = b.source.column(kl / d);
                crate::exactlin::tensor_vec(&left, &crate::exactlin::tensor_vec(one, &r.basis(kl % d)))
            })
            .collect();
        let coaction = Matrix::from_columns(b.dim() * d * d, &cols).expect("coaction shape");
        Self::from_ambient(b, algebra, source, &coaction).expect("enveloping comodule algebra")
    }

    /// `A ⊗ B` with `s(r) = s_A(r) ⊗ 1` and `ρ(a ⊗ x) = a₋₁ ⊗_R (a₀ ⊗ x)`.
    pub fn tensor_with(&self, b: &Bialgebroid<F>, other: &FinAlgebra<F>) -> Result<Self, StructureError> {
        let (na, nb) = (self.algebra.dim(), other.dim());
        let algebra = self.algebra.tensor(other);
        let source = self.source.kron(&Matrix::from_columns(nb, &[other.unit().to_vec()])?);
        let mut cols = Vec::with_capacity(na * nb);
        for i in 0..na {
            let lifted = self.tensor.lift(&self.coaction.column(i));
            for j in 0..nb {
                let mut v: Vector<F> = zero_vector(b.dim() * na * nb);
                for (h, a, c) in split_terms(&lifted, na) {
                    v[(h * na + a) * nb + j] = v[(h * na + a) * nb + j].add(&c);
                }
                cols.push(v);
            }
        }
        let coaction = Matrix::from_columns(b.dim() * na * nb, &cols)?;
        Self::from_ambient(b, algebra, source, &coaction)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Left action of `R` on `A` through `s_A`.
    pub fn r_module(&self) -> Action<F> {
        Action::left_regular(&self.algebra).pullback(&self.source)
    }

    pub fn rho(&self, a: &[F]) -> Vector<F> {
        self.coaction.apply(a)
    }

    pub fn rho_lift(&self, a: &[F]) -> Vector<F> {
        self.tensor.lift(&self.rho(a))
    }
}

/// R-ring laws, the comodule laws over the coring `H`, Takeuchi membership,
/// multiplicativity and `ρ(1) = 1 ⊗_R 1`.
pub fn check_comodule_algebra<F: Field>(b: &Bialgebroid<F>, a: &ComoduleAlgebra<F>) -> Report {
    let mut report = Report::new("comodule algebra");
    report.absorb("algebra", check_algebra(&a.algebra));
    report.absorb("source", check_algebra_map(&b.base, &a.algebra, &a.source, false));
    let comodule = CoringComodule {
        coring: b.coring.clone(),
        module: a.r_module(),
        tensor: a.tensor.clone(),
        coaction: a.coaction.clone(),
    };
    report.absorb("comodule", check_coring_comodule(&comodule));
    let (first, second) = takeuchi_ops_for(&b.total, &b.target, &a.algebra, &a.source);
    let mut member = Law::new("coaction.takeuchi");
    match takeuchi_subspace(&a.tensor, &first, &second) {
        Ok(sub) => {
            for i in 0..a.dim() {
                member.require(&[i], sub.contains(&a.coaction.column(i)), "ρ leaves H ×_R A");
            }
        }
        Err(e) => member.fail(&[], e.to_string()),
    }
    report.push(member.finish());
    let cols = a.coaction.columns();
    let mut mult = Law::new("coaction.multiplicative");
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = a.rho(&a.algebra.basis_product(i, j));
            let rhs = a.tensor.product(&b.total, &a.algebra, &cols[i], &cols[j]);
            mult.check(&[i, j], &lhs, &rhs);
        }
    }
    report.push(mult.finish());
    let mut unit = Law::new("coaction.unital");
    unit.check(&[], &a.rho(a.algebra.unit()), &a.tensor.project_pair(b.total.unit(), a.algebra.unit()));
    report.push(unit.finish());
    report
}

/// An R-coring `C` with a left `H`-action inducing its bimodule structure.
#[derive(Debug, Clone)]
pub struct ModuleCoalgebra<F> {
    pub coring: Coring<F>,
    pub action: Action<F>,
}

impl<F: Field> ModuleCoalgebra<F> {
    /// `comult` in quotient coordinates of `C ⊗_R C`, `counit` is `dim R x dim C`.
    pub fn new(
        b: &Bialgebroid<F>,
        action: Action<F>,
        comult: Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let coring = Coring::new(b.base.clone(), Self::bimodule_for(b, &action)?, comult, counit)?;
        Ok(ModuleCoalgebra { coring, action })
    }

    pub fn from_ambient(
        b: &Bialgebroid<F>,
        action: Action<F>,
        comult: &Matrix<F>,
        counit: Matrix<F>,
    ) -> Result<Self, StructureError> {
        let coring = Coring::from_ambient(b.base.clone(), Self::bimodule_for(b, &action)?, comult, counit)?;
        Ok(ModuleCoalgebra { coring, action })
    }

    /// `r·c·r' = s(r)t(r')·c`
    pub fn bimodule_for(b: &Bialgebroid<F>, action: &Action<F>) -> Result<Bimodule<F>, StructureError> {
        if action.arity() != b.dim() {
            return Err(StructureError::BaseMismatch(format!(
                "action of an algebra of dim {}, bialgebroid has dim {}",
                action.arity(),
                b.dim()
            )));
        }
        Ok(Bimodule { left: action.pullback(&b.source), right: action.pullback(&b.target) })
    }

    /// `H` acting on itself, with the coring structure of the bialgebroid.
    pub fn regular(b: &Bialgebroid<F>) -> Self {
        ModuleCoalgebra { coring: b.coring.clone(), action: Action::left_regular(&b.total) }
    }

    /// `R` with the trivial coring and the action `▷`.
    pub fn base(b: &Bialgebroid<F>) -> Self {
        let trivial = Coring::trivial(b.base.clone());
        let action = b.triangle_module();
        let bimodule = Self::bimodule_for(b, &action).expect("triangle action arity");
        let coring = Coring::new(b.base.clone(), bimodule, trivial.comult, trivial.counit).expect("trivial coring");
        ModuleCoalgebra { coring, action }
    }

    pub fn dim(&self) -> usize {
        self.coring.dim()
    }
}

/// Module laws, coring laws, the induced bimodule, and
/// `Δ(h·c) = h₁·c₁ ⊗_R h₂·c₂`, `ε(h·c) = h ▷ ε(c)`.
pub fn check_module_coalgebra<F: Field>(b: &Bialgebroid<F>, c: &ModuleCoalgebra<F>) -> Report {
    let mut report = Report::new("module coalgebra");
    report.absorb("action", check_left_action(&b.total, &c.action));
    report.absorb("coring", check_coring(&c.coring));
    let mut induced = Law::new("bimodule.induced");
    match ModuleCoalgebra::bimodule_for(b, &c.action) {
        Ok(bm) => {
            for k in 0..b.base_dim() {
                induced.check(&[0, k], bm.left.basis_op(k).entries(), c.coring.bimodule.left.basis_op(k).entries());
                induced.check(&[1, k], bm.right.basis_op(k).entries(), c.coring.bimodule.right.basis_op(k).entries());
            }
        }
        Err(e) => induced.fail(&[], e.to_string()),
    }
    let induced = induced.finish();
    let broken = !induced.passed();
    report.push(induced);
    if broken {
        return report;
    }
    let (nh, nc) = (b.dim(), c.dim());
    let t = &c.coring.tensor;
    let dc: Vec<_> = (0..nc).map(|i| c.coring.delta_lift(&unit_vector(nc, i))).collect();
    let mut comult = Law::new("comult.compatible");
    let mut counit = Law::new("counit.compatible");
    for x in 0..nh {
        let hx = unit_vector(nh, x);
        let terms = split_terms(&b.coring.delta_lift(&hx), nh);
        let op = c.action.basis_op(x);
        let tri = b.triangle_matrix(&hx);
        for i in 0..nc {
            let lhs = c.coring.delta(&op.column(i));
            let mut amb: Vector<F> = zero_vector(nc * nc);
            for (p, q, w) in &terms {
                axpy(&mut amb, w, &apply_kron(c.action.basis_op(*p), c.action.basis_op(*q), &dc[i]));
            }
            comult.check(&[x, i], &lhs, &t.project(&amb));
            let rhs = tri.apply(&c.coring.counit.column(i));
            counit.check(&[x, i], &c.coring.epsilon(&op.column(i)), &rhs);
        }
    }
    report.push(comult.finish());
    report.push(counit.finish());
    report
}

/// A Doi-Koppinen datum over a bialgebroid.
#[derive(Debug, Clone)]
pub struct DkDatum<F> {
    pub bialgebroid: Bialgebroid<F>,
    pub algebra: ComoduleAlgebra<F>,
    pub coalgebra: ModuleCoalgebra<F>,
}

pub fn check_dk_datum<F: Field>(d: &DkDatum<F>) -> Report {
    let mut report = Report::new("Doi-Koppinen datum");
    report.absorb("comodule_algebra", check_comodule_algebra(&d.bialgebroid, &d.algebra));
    report.absorb("module_coalgebra", check_module_coalgebra(&d.bialgebroid, &d.coalgebra));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::{from_weak_hopf, re_bialgebroid};
    use crate::corpus::pair_groupoid_algebra;
    use crate::field::Q;
    use crate::weakhopf::extract_base;

    fn p2() -> Bialgebroid<Q> {
        let h = pair_groupoid_algebra(2);
        from_weak_hopf(&h, &extract_base(&h).unwrap()).unwrap()
    }

    #[test]
    fn regular_and_base_structures() {
        for b in [p2(), re_bialgebroid(&FinAlgebra::diagonal(2)).unwrap()] {
            for a in [ComoduleAlgebra::regular(&b), ComoduleAlgebra::base(&b), ComoduleAlgebra::enveloping(&b)] {
                let r = check_comodule_algebra(&b, &a);
                assert!(r.passed(), "{r}");
            }
            for c in [ModuleCoalgebra::regular(&b), ModuleCoalgebra::base(&b)] {
                let r = check_module_coalgebra(&b, &c);
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn target_as_source_breaks_linearity() {
        let b = re_bialgebroid(&FinAlgebra::<Q>::diagonal(2)).unwrap();
        let reg = ComoduleAlgebra::regular(&b);
        let ambient = reg.tensor.quotient().section().mul(&reg.coaction);
        let bad = ComoduleAlgebra::from_ambient(&b, b.total.clone(), b.target.clone(), &ambient).unwrap();
        let r = check_comodule_algebra(&b, &bad);
        assert!(!r.law("comodule.coaction.left_linear").unwrap().passed(), "{r}");
    }

    #[test]
    fn antipode_twisted_action_breaks_compatibility() {
        let h = pair_groupoid_algebra::<Q>(2);
        let b = from_weak_hopf(&h, &extract_base(&h).unwrap()).unwrap();
        // S is an anti-automorphism; compose twice with multiplication
        let twisted = Action::left_regular(&b.total).pullback(&h.antipode);
        let c = ModuleCoalgebra { coring: b.coring.clone(), action: twisted };
        assert!(!check_module_coalgebra(&b, &c).passed());
    }

    #[test]
    fn tensor_with_algebra_closure() {
        let b = p2();
        let a = ComoduleAlgebra::regular(&b).tensor_with(&b, &FinAlgebra::upper_triangular_2()).unwrap();
        assert_eq!(a.dim(), 12);
        let r = check_comodule_algebra(&b, &a);
        assert!(r.passed(), "{r}");
    }
}
