//! Exact modular representation theory workbench for Schur algebras and
//! symmetric-group quotients in small characteristic.

pub mod algebra;
pub mod crosscheck;
pub mod error;
pub mod homological;
pub mod ledger;
pub mod linalg;
pub mod module;
pub mod partition;
pub mod rel_homology;
pub mod schur_weyl;
pub mod structure;
pub mod suite;
pub mod sym;

pub use algebra::{alg_hom_dim, alg_hom_space, AlgModule, FDAlgebra};
pub use error::{Error, Result};
pub use homological::{ext_dim, ext_dims, pdim_up_to, projective_cover, syzygy, ChainComplex, DimValue};
pub use linalg::{FpMatrix, Rref, Subspace};
pub use module::{hom_dim, hom_space, is_isomorphic, GModule};
pub use partition::{AbacusDisplay, BlockLabel, BlockQuiver, Partition};
pub use ledger::{builtin_ledger, verify_exact_p3, verify_symbolic, Ledger};
pub use rel_homology::{
    addq_dimension, auslander_pair_check, finitistic_and_gorenstein, global_dimension, is_tilting, relative_codomdim,
    relative_domdim, AddCategory,
};
pub use schur_weyl::{basic_schur_p3, exact_model_p3, BasicSchur, ExactModel};
pub use structure::{decompose, AlgebraStructure, Summand};
