//! Propositionality detection, base decomposition along the image, section
//! synthesis and excluded-middle certificates.

pub mod certificate;
pub mod decompose;
pub mod propositional;
pub mod section;

use thiserror::Error;

use crate::error::SimplicialError;

pub use certificate::{
    lem_section, verify_certificate, CertificateFile, LemCertificate, Verification,
    NO_PREIMAGE_VERTEX,
};
pub use decompose::{decompose_base, image_complement, vertex_complement, Decomposition};
pub use propositional::{
    is_propositional_homotopy, is_propositional_homotopy_capped, is_propositional_rlp,
    PropositionalityReport, HOMOTOPY_SIZE_CAP,
};
pub use section::trivial_fibration_section;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemError {
    #[error("image is not complemented: `{simplex}` lies outside the image but its face `{face}` lies inside")]
    NotComplemented { simplex: String, face: String },
    #[error("no filler over `{simplex}` in dimension {dim}")]
    NoFiller { dim: usize, simplex: String },
    #[error("pullback over `{simplex}` is not empty")]
    NonEmptyFiber { simplex: String },
    #[error("search space too large: {cells} nondegenerate simplices exceed the cap of {cap}")]
    SizeGuard { cells: usize, cap: usize },
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("certificate failed self-verification: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}
