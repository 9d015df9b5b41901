//! Integer homology of finite simplicial sets.

pub mod chains;
pub mod snf;

pub use chains::{
    chain_map, compare_map, complex_homology, homology, mapping_cone, normalized_chains, ChainComplex, HomologyResult,
    MapComparison, SparseMatrix,
};
pub use snf::{smith_normal_form, Matrix, Snf};
