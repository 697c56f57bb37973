//! Exact computation of Auslander-Reiten translations, syzygies, star and
//! Nakayama functors for finite-dimensional representations of two families
//! of bound quivers: the length-truncated path algebra of the doubly
//! infinite line, and the nontrivial block of quantum SL(2) at a root of
//! unity. All arithmetic is exact rational, all basis choices canonical, so
//! every check is an equality and every run is reproducible.

pub mod arquiver;
mod error;
pub mod exactlin;
pub mod par;
pub mod qsl2;
pub mod quiverrep;
pub mod report;
pub mod serial;

pub use error::{Error, Result};
pub use exactlin::{Rat, RatMatrix};
pub use quiverrep::{AlgebraPresentation, Morphism, Representation};
