//! Homotopy colimits over finite categories through the Dwyer–Kan free
//! resolution, with the comparison maps and the homology needed to check
//! them.

pub mod error;
pub mod fincat;
pub mod freeres;
pub mod homalg;
pub mod hocolim;
pub mod simpset;

pub use error::{Error, Result};
