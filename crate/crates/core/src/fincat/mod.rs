//! Finite categories, posets, comma categories and nerves.

pub mod category;
pub mod comma;
pub mod nerve;
pub mod poset;

pub use category::{FinCategory, Functor, MorphismInfo, Mor, Obj};
pub use comma::{comma, Comma, CommaKind};
pub use nerve::{nerve, nerve_map, NerveModel};
pub use poset::{FinPoset, PosetFile, SubPoset};
