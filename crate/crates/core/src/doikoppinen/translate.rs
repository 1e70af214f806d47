use crate::bialgebroid::{from_weak_hopf, Bialgebroid};
use crate::error::StructureError;
use crate::exactlin::{unit_vector, zero_vector, Matrix, Vector};
use crate::field::Field;
use crate::findim::FinCoalgebra;
use crate::report::Report;
use crate::weakhopf::{extract_base, section_sigma, BaseAlgebra, WeakHopf};

use super::bialgebroid::{check_comodule_algebra, check_module_coalgebra, ComoduleAlgebra, DkDatum, ModuleCoalgebra};
use super::weak::{
    check_weak_comodule_algebra, check_weak_module_coalgebra, split_terms, WeakComoduleAlgebra, WeakDkDatum,
    WeakModuleCoalgebra,
};

/// A weak Hopf algebra together with its base and its bialgebroid.
#[derive(Debug, Clone)]
pub struct WeakSetting<F> {
    pub hopf: WeakHopf<F>,
    pub base: BaseAlgebra<F>,
    pub bialgebroid: Bialgebroid<F>,
}

impl<F: Field> WeakSetting<F> {
    pub fn new(hopf: WeakHopf<F>) -> Result<Self, StructureError> {
        let base = extract_base(&hopf)?;
        let bialgebroid = from_weak_hopf(&hopf, &base)?;
        Ok(WeakSetting { hopf, base, bialgebroid })
    }

    /// `s_A(r) = ε(1₋₁ r) 1₀` on the base basis.
    pub fn induced_source(&self, a: &WeakComoduleAlgebra<F>) -> Matrix<F> {
        let h = &self.hopf;
        let na = a.dim();
        let unit_terms = a.unit_terms();
        let cols: Vec<Vector<F>> = (0..self.base.dim())
            .map(|k| {
                let r = self.base.inclusion.column(k);
                let mut out: Vector<F> = zero_vector(na);
                for (i, j, y) in &unit_terms {
                    let e = h.epsilon(&h.algebra.mul(&unit_vector(h.dim(), *i), &r));
                    out[*j].add_mul(y, &e);
                }
                out
            })
            .collect();
        Matrix::from_columns(na, &cols).expect("source shape")
    }

    /// `ε̃(c) = ε(1₁·c) 1₂` in base coordinates.
    pub fn induced_counit(&self, c: &WeakModuleCoalgebra<F>) -> Result<Matrix<F>, StructureError> {
        let h = &self.hopf;
        let nh = h.dim();
        let d1 = split_terms(&h.unit_delta(), nh);
        let mut cols = Vec::with_capacity(c.dim());
        for i in 0..c.dim() {
            let mut v: Vector<F> = zero_vector(nh);
            for (p, q, w) in &d1 {
                let e = c.coalgebra.epsilon(&c.action.basis_op(*p).column(i));
                v[*q].add_mul(w, &e);
            }
            let coords = self
                .base
                .coordinates(&v)
                .ok_or_else(|| StructureError::Closure(format!("ε(1₁·c) 1₂ leaves the base at c = {i}")))?;
            cols.push(coords);
        }
        Ok(Matrix::from_columns(self.base.dim(), &cols)?)
    }
}

fn verified<T>(value: T, report: Report) -> Result<T, StructureError> {
    StructureError::from_report(report)?;
    Ok(value)
}

/// Weak comodule algebra to one over the bialgebroid: `s_A` from the unit
/// coaction, `ρ̃ = can ∘ ρ`.
pub fn comodule_algebra_forward<F: Field>(
    w: &WeakSetting<F>,
    a: &WeakComoduleAlgebra<F>,
) -> Result<ComoduleAlgebra<F>, StructureError> {
    let source = w.induced_source(a);
    let out = ComoduleAlgebra::from_ambient(&w.bialgebroid, a.algebra.clone(), source, &a.coaction)?;
    let report = check_comodule_algebra(&w.bialgebroid, &out);
    verified(out, report)
}

/// Comodule algebra over the bialgebroid to a weak one: `ρ = σ ∘ ρ̃`.
pub fn comodule_algebra_backward<F: Field>(
    w: &WeakSetting<F>,
    a: &ComoduleAlgebra<F>,
) -> Result<WeakComoduleAlgebra<F>, StructureError> {
    let sigma = section_sigma(&w.base.idempotent_terms(), w.bialgebroid.right_action(), &a.r_module(), &a.tensor)?;
    let out = WeakComoduleAlgebra::new(&w.hopf, a.algebra.clone(), sigma.mul(&a.coaction))?;
    let report = check_weak_comodule_algebra(&w.hopf, &out);
    verified(out, report)
}

/// Weak module coalgebra to one over the bialgebroid: `Δ̃ = can ∘ Δ`,
/// `ε̃(c) = ε(1₁·c) 1₂`.
pub fn module_coalgebra_forward<F: Field>(
    w: &WeakSetting<F>,
    c: &WeakModuleCoalgebra<F>,
) -> Result<ModuleCoalgebra<F>, StructureError> {
    let counit = w.induced_counit(c)?;
    let out = ModuleCoalgebra::from_ambient(&w.bialgebroid, c.action.clone(), &c.coalgebra.comult, counit)?;
    let report = check_module_coalgebra(&w.bialgebroid, &out);
    verified(out, report)
}

/// Module coalgebra over the bialgebroid to a weak one: `Δ = σ ∘ Δ̃`,
/// `ε = φ ∘ ε̃`.
pub fn module_coalgebra_backward<F: Field>(
    w: &WeakSetting<F>,
    c: &ModuleCoalgebra<F>,
) -> Result<WeakModuleCoalgebra<F>, StructureError> {
    let bm = &c.coring.bimodule;
    let sigma = section_sigma(&w.base.idempotent_terms(), &bm.right, &bm.left, &c.coring.tensor)?;
    let coalgebra = FinCoalgebra::new(sigma.mul(&c.coring.comult), w.base.frobenius.mul(&c.coring.counit))?;
    let out = WeakModuleCoalgebra::new(&w.hopf, coalgebra, c.action.clone())?;
    let report = check_weak_module_coalgebra(&w.hopf, &out);
    verified(out, report)
}

pub fn datum_forward<F: Field>(w: &WeakSetting<F>, d: &WeakDkDatum<F>) -> Result<DkDatum<F>, StructureError> {
    Ok(DkDatum {
        bialgebroid: w.bialgebroid.clone(),
        algebra: comodule_algebra_forward(w, &d.algebra)?,
        coalgebra: module_coalgebra_forward(w, &d.coalgebra)?,
    })
}

pub fn datum_backward<F: Field>(w: &WeakSetting<F>, d: &DkDatum<F>) -> Result<WeakDkDatum<F>, StructureError> {
    Ok(WeakDkDatum {
        hopf: w.hopf.clone(),
        algebra: comodule_algebra_backward(w, &d.algebra)?,
        coalgebra: module_coalgebra_backward(w, &d.coalgebra)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{cyclic_group_algebra, pair_groupoid_algebra};
    use crate::field::Q;

    #[test]
    fn pair_groupoid_forward_matches_closed_forms() {
        let w = WeakSetting::new(pair_groupoid_algebra::<Q>(2)).unwrap();
        let a = comodule_algebra_forward(&w, &WeakComoduleAlgebra::regular(&w.hopf)).unwrap();
        assert_eq!(a.source, w.base.inclusion);
        assert_eq!(a.coaction, w.bialgebroid.coring.comult);
        let c = module_coalgebra_forward(&w, &WeakModuleCoalgebra::regular(&w.hopf)).unwrap();
        assert_eq!(c.coring.counit, w.bialgebroid.coring.counit);
    }

    #[test]
    fn round_trips_on_regular_data() {
        for h in [pair_groupoid_algebra::<Q>(2), cyclic_group_algebra(3)] {
            let w = WeakSetting::new(h).unwrap();
            let weak = WeakDkDatum::regular(&w.hopf);
            let there = datum_forward(&w, &weak).unwrap();
            let back = datum_backward(&w, &there).unwrap();
            assert_eq!(back.algebra, weak.algebra);
            assert_eq!(back.coalgebra, weak.coalgebra);
            let again = datum_forward(&w, &back).unwrap();
            assert_eq!(again.algebra.coaction, there.algebra.coaction);
            assert_eq!(again.algebra.source, there.algebra.source);
            assert_eq!(again.coalgebra.coring.comult, there.coalgebra.coring.comult);
            assert_eq!(again.coalgebra.coring.counit, there.coalgebra.coring.counit);
        }
    }

    #[test]
    fn hopf_case_counit_is_scalar() {
        let w = WeakSetting::new(cyclic_group_algebra::<Q>(2)).unwrap();
        let c = module_coalgebra_forward(&w, &WeakModuleCoalgebra::regular(&w.hopf)).unwrap();
        assert_eq!(c.coring.counit, w.hopf.coalgebra.counit);
        assert_eq!(c.coring.tensor.quot_dim(), 4);
    }

    #[test]
    fn base_structures_go_back() {
        let w = WeakSetting::new(pair_groupoid_algebra::<Q>(2)).unwrap();
        let b = &w.bialgebroid;
        let a = comodule_algebra_backward(&w, &ComoduleAlgebra::base(b)).unwrap();
        // Δ restricted to R
        let delta_on_r = w.hopf.coalgebra.comult.mul(&w.base.inclusion);
        let rows: Vec<_> = (0..2).map(|k| a.rho(&unit_vector(2, k))).collect();
        for k in 0..2 {
            let want =
                crate::exactlin::apply_kron(&Matrix::identity(4), &w.base.coordinate_matrix(), &delta_on_r.column(k));
            assert_eq!(rows[k], want);
        }
        assert!(module_coalgebra_backward(&w, &ModuleCoalgebra::base(b)).is_ok());
    }
}
