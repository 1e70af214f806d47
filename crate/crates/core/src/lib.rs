//! Exact structure-constant computations for weak Hopf algebras,
//! bialgebroids, corings and Doi-Koppinen data.

#![allow(clippy::needless_range_loop)]

pub mod bialgebroid;
pub mod corpus;
pub mod doikoppinen;
pub mod error;
pub mod exactlin;
pub mod field;
pub mod findim;
pub mod report;
pub mod weakhopf;

pub use bialgebroid::{Bialgebroid, RRing};
pub use doikoppinen::{
    ComoduleAlgebra, DkCoring, DkDatum, DkModule, ModuleCoalgebra, WeakComoduleAlgebra, WeakCoringIso, WeakDkDatum,
    WeakModuleCoalgebra, WeakSetting,
};
pub use error::StructureError;
pub use exactlin::{Matrix, QuotientSpace, Subspace, Vector};
pub use field::{Field, Fp, Q};
pub use findim::{Action, BalancedTensor, Bimodule, Coring, CoringComodule, FinAlgebra, FinCoalgebra};
pub use report::{Law, LawEntry, Report, Status, Witness};
pub use weakhopf::{BaseAlgebra, WeakHopf};
