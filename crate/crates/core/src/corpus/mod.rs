//! Concrete instances: groupoid algebras, `R^e` bialgebroids and the
//! canonical Doi-Koppinen data over a bialgebroid.

mod data;
mod groupoid;

pub use data::{bialgebroid_corpus, canonical_dk_data, dk_module_corpus, weak_dk_data, weak_hopf_corpus, Labeled};

pub use crate::bialgebroid::re_bialgebroid;
pub use groupoid::{
    cyclic_group_algebra, discrete_groupoid_algebra, groupoid_algebra, pair_groupoid_algebra, Arrow, Groupoid,
};
