//! The Dwyer–Kan free resolution `F_•C` of a finite category on nested
//! words, with the comparison maps between its weights.

pub mod laws;
pub mod psi;
pub mod resolution;
pub mod tau;
pub mod word;

pub use psi::{homotopy_h, k_of, kappa, kappa_map, lambda, psi_simplices, psi_sset, x_op, Coned, PsiModel, PsiSimplex};
pub use resolution::{hom_sset, Resolution, WordModel};
pub use tau::{iota, tau, under_simplex, DoubleCone, UnderString};
pub use word::{Node, Word};
pub use laws::{census, contractibility, extra_degeneracy, homotopy_laws, iota_laws, kappa_identities, kappa_lambda, lambda_simplicial, simplicial_identities, LawReport};
