//! Finite simplicial sets in Eilenberg–Zilber form.

pub mod build;
pub mod colimit;
pub mod ez;
pub mod io;
pub mod iso;
pub mod product;
pub mod sset;
pub mod standard;

pub use build::{realize, realize_map, Realized, SimplicialModel};
pub use colimit::{colimit, coequalizer, coproduct, mapping_cylinder, pushout, Colimit, End, MappingCylinder, SetDiagram};
pub use ez::{Ez, SimplexId};
pub use iso::{is_isomorphic, IsoResult};
pub use product::{product, Product};
pub use sset::{SimplicialMap, SimplicialSet};
