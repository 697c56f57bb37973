//! Representations of a bound quiver and the functor stack used as the
//! independent oracle: socle/radical/top, projectives and injectives,
//! minimal covers and envelopes, syzygy and cosyzygy, the star and Nakayama
//! functors, transpose and the Auslander-Reiten translation, hom spaces,
//! isomorphism testing, Krull-Schmidt decomposition and short exact
//! sequence realization.
//!
//! Dictionary: a right comodule over one of the built-in coalgebra families
//! is realized as a representation of the (windowed) quiver of its dual
//! algebra, with each basis path of a coideal placed at its source vertex.
//! Left comodules live over the opposite presentation.

mod budget;
mod decompose;
mod functors;
mod hom;
mod iso;
mod morphism;
mod presentation;
mod rep;
mod ses;
mod structure;
mod quiver;

pub use decompose::{fitting_decompose, Summand};
pub use functors::{dtr, nakayama, star, star_morphism, transpose, vector_dual, vector_dual_morphism};
pub use hom::{hom_basis, hom_dim};
pub use iso::{is_isomorphic, IsoVerdict, NonIsoWitness};
pub use morphism::Morphism;
pub use presentation::{AlgebraPresentation, PathClass, PathClassId, WindowBoundary};
pub use rep::Representation;
pub use ses::{realize_ses, RealizedSes, ShortExactSeq};
pub use structure::{
    cosyzygy, exact_at, injective, injective_envelope, omega_power, projective, projective_cover,
    radical, radical_profile, socle, socle_profile, syzygy, top,
};
pub use quiver::{Arrow, ArrowId, Quiver, Relation, RelationTerm, VertexId};
