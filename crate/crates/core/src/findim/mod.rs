//! Algebras, coalgebras, bimodules and corings given by structure constants.

mod algebra;
mod coalgebra;
mod coring;
mod module;
mod tensor;

pub use algebra::{check_algebra, check_algebra_map, combine, combine_vectors, AlgebraMap, FinAlgebra};
pub use coalgebra::{check_coalgebra, FinCoalgebra};
pub use coring::{check_coring, check_coring_comodule, Coring, CoringComodule};
pub use module::{check_bimodule, check_left_action, check_right_action, Action, Bimodule};
pub use tensor::{takeuchi_subspace, BalancedTensor, TripleTensor};
