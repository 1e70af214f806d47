//! Comodule algebras and module coalgebras in weak and bialgebroid form,
//! the translations between the two, Doi-Koppinen data and modules, the
//! coring `C ⊗_R A`, the weak coring and the separability certificates.

mod bialgebroid;
mod coring;
mod morphism;
mod separability;
mod translate;
mod weak;
mod weak_coring;

pub use bialgebroid::{
    check_comodule_algebra, check_dk_datum, check_module_coalgebra, ComoduleAlgebra, DkDatum, ModuleCoalgebra,
};
pub use coring::{build_dk_coring, check_dk_module, DkCoring, DkModule};
pub use morphism::{
    base_inclusion, check_comodule_algebra_morphism, check_module_coalgebra_morphism,
    check_weak_comodule_algebra_morphism, check_weak_module_coalgebra_morphism, counit_projection,
};
pub use separability::{
    check_forgetful_separable, check_induction_separable, search_forgetful_certificate, search_induction_certificate,
};
pub use translate::{
    comodule_algebra_backward, comodule_algebra_forward, datum_backward, datum_forward, module_coalgebra_backward,
    module_coalgebra_forward, WeakSetting,
};
pub use weak::{
    check_weak_comodule_algebra, check_weak_dk_components, check_weak_module_coalgebra, WeakComoduleAlgebra,
    WeakDkDatum, WeakModuleCoalgebra,
};
pub use weak_coring::{build_weak_coring, check_weak_coring_iso, WeakCoringIso};
