//! Link diagrams from Conway-style notation, exact determinants, and
//! quasi-alternating certification.
//!
//! The crate is organized around a pipeline: [`conway`] parses bracketed
//! tangle notation into presentations, [`diagram`] turns presentations into
//! planar diagram codes, [`dessin`] and [`treecount`] compute state graphs
//! and spanning-tree counts, [`determinant`] computes link determinants by
//! three independent engines, and [`qacert`] searches for and verifies
//! quasi-alternating certificates. [`catalog`] runs whole tables of knots
//! in batch.

pub mod catalog;
pub mod conway;
pub mod dessin;
pub mod determinant;
pub mod diagram;
pub mod qacert;
pub mod tangle;
pub mod treecount;

pub use conway::{parse_montesinos, parse_tangle_word, MontesinosPresentation, RationalTangleWord};
pub use determinant::{det, Determinant, Engine};
pub use diagram::PlanarDiagram;
pub use qacert::{certify, verify_certificate, Certificate};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("split diagram: {0}")]
    Split(String),
    #[error("dessin genus {found} where {expected} required")]
    GenusMismatch { expected: u32, found: u32 },
    #[error("crossing budget exceeded: {crossings} crossings > budget {budget}")]
    BudgetExceeded { crossings: usize, budget: usize },
    #[error("edge budget exceeded: {edges} edges > budget {budget}")]
    EdgeBudgetExceeded { edges: usize, budget: usize },
    #[error("internal convention bug: {0}")]
    ConventionBug(String),
    #[error("crossing index {index} out of range (diagram has {len})")]
    CrossingOutOfRange { index: usize, len: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("certification error: {0}")]
    Certification(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
