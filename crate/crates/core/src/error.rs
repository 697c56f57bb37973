use thiserror::Error;

use crate::quiverrep::VertexId;

/// Errors shared across the crate.
///
/// `WindowExceeded` is the important one operationally: both built-in
/// families live on infinite quivers, and every computation runs on a finite
/// vertex window. Whenever a minimal (co)presentation, a star slot or a
/// syzygy step would need vertices outside the window, the operation fails
/// loudly with this variant instead of silently truncating.
#[derive(Debug, Error)]
pub enum Error {
    #[error("window exceeded: {0}")]
    WindowExceeded(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("presentation mismatch between representations")]
    PresentationMismatch,
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("presentation is not self-projective: {0}")]
    NotSelfProjective(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("injective input: {0}")]
    InjectiveInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
