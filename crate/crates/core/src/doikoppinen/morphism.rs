use crate::bialgebroid::Bialgebroid;
use crate::exactlin::{unit_vector, Matrix};
use crate::field::Field;
use crate::findim::check_algebra_map;
use crate::report::{Law, Report};
use crate::weakhopf::WeakHopf;

use super::bialgebroid::{ComoduleAlgebra, ModuleCoalgebra};
use super::weak::{WeakComoduleAlgebra, WeakModuleCoalgebra};

fn shape_law<F: Field>(f: &Matrix<F>, expected: (usize, usize)) -> Option<Report> {
    if f.shape() == expected {
        return None;
    }
    let mut report = Report::new("morphism");
    let mut law = Law::new("shape");
    law.fail(&[], format!("map of shape {:?}, expected {:?}", f.shape(), expected));
    report.push(law.finish());
    Some(report)
}

fn columns_agree<F: Field>(name: &str, lhs: &Matrix<F>, rhs: &Matrix<F>) -> crate::report::LawEntry {
    let mut law = Law::new(name);
    for j in 0..lhs.cols() {
        law.check(&[j], &lhs.column(j), &rhs.column(j));
    }
    law.finish()
}

/// Algebra map `f: A → A'` with `(H ⊗ f) ∘ ρ = ρ' ∘ f`.
pub fn check_weak_comodule_algebra_morphism<F: Field>(
    h: &WeakHopf<F>,
    a: &WeakComoduleAlgebra<F>,
    a2: &WeakComoduleAlgebra<F>,
    f: &Matrix<F>,
) -> Report {
    if let Some(r) = shape_law(f, (a2.dim(), a.dim())) {
        return r;
    }
    let mut report = Report::new("weak comodule algebra morphism");
    report.absorb("algebra_map", check_algebra_map(&a.algebra, &a2.algebra, f, false));
    let lhs = Matrix::identity(h.dim()).kron(f).mul(&a.coaction);
    report.push(columns_agree("colinear", &lhs, &a2.coaction.mul(f)));
    report
}

/// Algebra map `f: A → A'` with `f ∘ s_A = s_A'` and `(H ⊗_R f) ∘ ρ = ρ' ∘ f`.
pub fn check_comodule_algebra_morphism<F: Field>(
    b: &Bialgebroid<F>,
    a: &ComoduleAlgebra<F>,
    a2: &ComoduleAlgebra<F>,
    f: &Matrix<F>,
) -> Report {
    if let Some(r) = shape_law(f, (a2.dim(), a.dim())) {
        return r;
    }
    let mut report = Report::new("comodule algebra morphism");
    report.absorb("algebra_map", check_algebra_map(&a.algebra, &a2.algebra, f, false));
    report.push(columns_agree("source", &f.mul(&a.source), &a2.source));
    let induced = a.tensor.induced(&a2.tensor, &Matrix::identity(b.dim()), f);
    report.push(columns_agree("colinear", &induced.mul(&a.coaction), &a2.coaction.mul(f)));
    report
}

fn linear_law<F: Field>(ops: &[Matrix<F>], ops2: &[Matrix<F>], f: &Matrix<F>) -> crate::report::LawEntry {
    let mut law = Law::new("linear");
    for (k, (op, op2)) in ops.iter().zip(ops2).enumerate() {
        let (lhs, rhs) = (f.mul(op), op2.mul(f));
        for j in 0..f.cols() {
            law.check(&[k, j], &lhs.column(j), &rhs.column(j));
        }
    }
    law.finish()
}

/// `H`-linear coalgebra map `f: C → C'`.
pub fn check_weak_module_coalgebra_morphism<F: Field>(
    c: &WeakModuleCoalgebra<F>,
    c2: &WeakModuleCoalgebra<F>,
    f: &Matrix<F>,
) -> Report {
    if let Some(r) = shape_law(f, (c2.dim(), c.dim())) {
        return r;
    }
    let mut report = Report::new("weak module coalgebra morphism");
    report.push(linear_law(c.action.ops(), c2.action.ops(), f));
    let lhs = f.kron(f).mul(&c.coalgebra.comult);
    report.push(columns_agree("comult", &lhs, &c2.coalgebra.comult.mul(f)));
    report.push(columns_agree("counit", &c2.coalgebra.counit.mul(f), &c.coalgebra.counit));
    report
}

/// `H`-linear coring map `f: C → C'`.
pub fn check_module_coalgebra_morphism<F: Field>(
    c: &ModuleCoalgebra<F>,
    c2: &ModuleCoalgebra<F>,
    f: &Matrix<F>,
) -> Report {
    if let Some(r) = shape_law(f, (c2.dim(), c.dim())) {
        return r;
    }
    let mut report = Report::new("module coalgebra morphism");
    report.push(linear_law(c.action.ops(), c2.action.ops(), f));
    let induced = c.coring.tensor.induced(&c2.coring.tensor, f, f);
    report.push(columns_agree("comult", &induced.mul(&c.coring.comult), &c2.coring.comult.mul(f)));
    report.push(columns_agree("counit", &c2.coring.counit.mul(f), &c.coring.counit));
    report
}

/// The inclusion `R → H` between the base and regular comodule algebras.
pub fn base_inclusion<F: Field>(b: &Bialgebroid<F>) -> Matrix<F> {
    b.source.clone()
}

/// `h ↦ ε(h)`, the counit as a map from the regular module coalgebra onto
/// the base one.
pub fn counit_projection<F: Field>(b: &Bialgebroid<F>) -> Matrix<F> {
    let cols: Vec<_> = (0..b.dim()).map(|h| b.epsilon(&unit_vector(b.dim(), h))).collect();
    Matrix::from_columns(b.base_dim(), &cols).expect("counit shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::pair_groupoid_algebra;
    use crate::doikoppinen::{
        comodule_algebra_backward, comodule_algebra_forward, module_coalgebra_backward, WeakSetting,
    };
    use crate::field::Q;

    #[test]
    fn corpus_morphisms_survive_translation() {
        let w = WeakSetting::new(pair_groupoid_algebra::<Q>(2)).unwrap();
        let b = &w.bialgebroid;
        let (base, reg) = (ComoduleAlgebra::base(b), ComoduleAlgebra::regular(b));
        let inc = base_inclusion(b);
        assert!(check_comodule_algebra_morphism(b, &base, &reg, &inc).passed());
        let (wb, wr) = (comodule_algebra_backward(&w, &base).unwrap(), comodule_algebra_backward(&w, &reg).unwrap());
        let r = check_weak_comodule_algebra_morphism(&w.hopf, &wb, &wr, &inc);
        assert!(r.passed(), "{r}");
        let (fb, fr) = (comodule_algebra_forward(&w, &wb).unwrap(), comodule_algebra_forward(&w, &wr).unwrap());
        assert!(check_comodule_algebra_morphism(b, &fb, &fr, &inc).passed());

        let (creg, cbase) = (ModuleCoalgebra::regular(b), ModuleCoalgebra::base(b));
        let pi = counit_projection(b);
        let r = check_module_coalgebra_morphism(&creg, &cbase, &pi);
        assert!(r.passed(), "{r}");
        let (wr, wb) = (module_coalgebra_backward(&w, &creg).unwrap(), module_coalgebra_backward(&w, &cbase).unwrap());
        let r = check_weak_module_coalgebra_morphism(&wr, &wb, &pi);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn non_colinear_map_fails() {
        let w = WeakSetting::new(pair_groupoid_algebra::<Q>(2)).unwrap();
        let b = &w.bialgebroid;
        let reg = ComoduleAlgebra::regular(b);
        // transpose of matrix units: an anti-automorphism, not an algebra map
        let swap = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        let r = check_comodule_algebra_morphism(b, &reg, &reg, &swap);
        assert!(!r.passed());
        assert!(check_comodule_algebra_morphism(b, &reg, &reg, &Matrix::identity(4)).passed());
    }
}
