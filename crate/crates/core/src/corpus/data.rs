use crate::bialgebroid::{from_weak_hopf, re_bialgebroid, Bialgebroid};
use crate::doikoppinen::{
    check_dk_datum, check_dk_module, datum_backward, ComoduleAlgebra, DkDatum, DkModule, ModuleCoalgebra, WeakDkDatum,
    WeakSetting,
};
use crate::error::StructureError;
use crate::exactlin::{unit_vector, Matrix};
use crate::field::Field;
use crate::findim::{Action, BalancedTensor, FinAlgebra};
use crate::weakhopf::extract_base;

use super::groupoid::{cyclic_group_algebra, pair_groupoid_algebra};

/// A named instance.
#[derive(Debug, Clone)]
pub struct Labeled<T> {
    pub label: String,
    pub value: T,
}

fn labeled<T>(label: impl Into<String>, value: T) -> Labeled<T> {
    Labeled { label: label.into(), value }
}

/// `(H, A, C)` for `A` in `H, R, R^e` and `C` in `H, R`, each verified.
pub fn canonical_dk_data<F: Field>(b: &Bialgebroid<F>) -> Result<Vec<Labeled<DkDatum<F>>>, StructureError> {
    let algebras =
        [("H", ComoduleAlgebra::regular(b)), ("R", ComoduleAlgebra::base(b)), ("Re", ComoduleAlgebra::enveloping(b))];
    let coalgebras = [("H", ModuleCoalgebra::regular(b)), ("R", ModuleCoalgebra::base(b))];
    let mut out = Vec::new();
    for (an, a) in &algebras {
        for (cn, c) in &coalgebras {
            let d = DkDatum { bialgebroid: b.clone(), algebra: a.clone(), coalgebra: c.clone() };
            StructureError::from_report(check_dk_datum(&d))?;
            out.push(labeled(format!("(H,{an},{cn})"), d));
        }
    }
    Ok(out)
}

/// The regular weak datum together with the backward translations of the
/// canonical data over the bialgebroid of `w`.
pub fn weak_dk_data<F: Field>(w: &WeakSetting<F>) -> Result<Vec<Labeled<WeakDkDatum<F>>>, StructureError> {
    let mut out = Vec::new();
    for d in canonical_dk_data(&w.bialgebroid)? {
        out.push(labeled(d.label, datum_backward(w, &d.value)?));
    }
    Ok(out)
}

/// The weak Hopf algebras every suite runs over.
pub fn weak_hopf_corpus<F: Field>() -> Vec<Labeled<crate::weakhopf::WeakHopf<F>>> {
    let mut out = vec![labeled("P2", pair_groupoid_algebra(2)), labeled("P3", pair_groupoid_algebra(3))];
    for n in 1..=6 {
        out.push(labeled(format!("Z{n}"), cyclic_group_algebra(n)));
    }
    out.push(labeled("D2", super::groupoid::discrete_groupoid_algebra(2)));
    out
}

/// Bialgebroids of `P2`, `Z2` and `R^e` over `ℚ × ℚ`.
pub fn bialgebroid_corpus<F: Field>() -> Result<Vec<Labeled<Bialgebroid<F>>>, StructureError> {
    let mut out = Vec::new();
    for (label, h) in [("P2", pair_groupoid_algebra(2)), ("Z2", cyclic_group_algebra(2))] {
        out.push(labeled(label, from_weak_hopf(&h, &extract_base(&h)?)?));
    }
    out.push(labeled("Re(QxQ)", re_bialgebroid(&FinAlgebra::diagonal(2))?));
    Ok(out)
}

fn regular_datum<F: Field>(b: &Bialgebroid<F>) -> DkDatum<F> {
    DkDatum { bialgebroid: b.clone(), algebra: ComoduleAlgebra::regular(b), coalgebra: ModuleCoalgebra::regular(b) }
}

/// `m ↦ 1 ⊗_R m`.
fn unit_coaction<F: Field>(d: &DkDatum<F>, action: &Action<F>) -> Result<Matrix<F>, StructureError> {
    let tensor = BalancedTensor::new(&d.coalgebra.coring.bimodule.right, &action.pullback(&d.algebra.source))?;
    let one = d
        .coalgebra
        .coring
        .counit
        .solve(d.bialgebroid.base.unit())
        .ok_or_else(|| StructureError::Invalid("no element of C with counit 1".into()))?;
    let cols: Vec<_> = (0..action.dim()).map(|m| tensor.project_pair(&one, &unit_vector(action.dim(), m))).collect();
    Ok(Matrix::from_columns(tensor.quot_dim(), &cols)?)
}

/// A datum together with one of its modules.
pub type DatumModule<F> = Labeled<(DkDatum<F>, DkModule<F>)>;

/// Doi-Koppinen modules used by the dictionary suite, each verified.
pub fn dk_module_corpus<F: Field>() -> Result<Vec<DatumModule<F>>, StructureError> {
    let mut out = Vec::new();
    let bialgebroids = bialgebroid_corpus::<F>()?;
    for Labeled { label, value: b } in &bialgebroids {
        let d = regular_datum(b);
        let m = DkModule::new(&d, Action::left_regular(&b.total), b.coring.comult.clone())?;
        out.push(labeled(format!("{label} (H,H,H) M=H"), (d, m)));
    }
    let p2 = &bialgebroids[0].value;
    let d = DkDatum {
        bialgebroid: p2.clone(),
        algebra: ComoduleAlgebra::regular(p2),
        coalgebra: ModuleCoalgebra::base(p2),
    };
    let action = Action::left_regular(&p2.total);
    let coaction = unit_coaction(&d, &action)?;
    out.push(labeled("P2 (H,H,R) M=H", (d.clone(), DkModule::new(&d, action, coaction)?)));
    let d =
        DkDatum { bialgebroid: p2.clone(), algebra: ComoduleAlgebra::base(p2), coalgebra: ModuleCoalgebra::base(p2) };
    let action = Action::left_regular(&p2.base);
    let coaction = unit_coaction(&d, &action)?;
    out.push(labeled("P2 (H,R,R) M=R", (d.clone(), DkModule::new(&d, action, coaction)?)));
    for m in &out {
        StructureError::from_report(check_dk_module(&m.value.0, &m.value.1))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn canonical_data_pass() {
        for b in bialgebroid_corpus::<Q>().unwrap() {
            assert_eq!(canonical_dk_data(&b.value).unwrap().len(), 6, "{}", b.label);
        }
    }

    #[test]
    fn weak_data_and_modules() {
        let w = WeakSetting::new(pair_groupoid_algebra::<Q>(2)).unwrap();
        assert_eq!(weak_dk_data(&w).unwrap().len(), 6);
        assert_eq!(dk_module_corpus::<Q>().unwrap().len(), 5);
    }
}
