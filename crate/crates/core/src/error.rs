use std::fmt;

use thiserror::Error;

use crate::perturbation::ObstructionCertificate;

pub type Result<T> = std::result::Result<T, Error>;

/// A decision boundary of the classification tree.
///
/// Each boundary separates two branches; a matrix whose test quantity falls
/// within a factor of two of the tolerance is reported as ambiguous rather
/// than silently assigned to one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    Singularity,
    HermitianRankOne,
    CollisionPlus,
    CollisionMinus,
    JordanBlock,
    SignResolution,
}

impl Boundary {
    /// The two branches competing at this boundary.
    pub fn contenders(self) -> (&'static str, &'static str) {
        match self {
            Boundary::Singularity => ("rank one", "nonsingular"),
            Boundary::HermitianRankOne => ("udz", "hyp(0)"),
            Boundary::CollisionPlus => ("pair(l,l)", "pair(m,n)"),
            Boundary::CollisionMinus => ("collided cosquare spectrum", "hyp/pair"),
            Boundary::JordanBlock => ("pair(l,-l)", "delta"),
            Boundary::SignResolution => ("+ branch", "- branch"),
        }
    }
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.contenders();
        write!(f, "{a} / {b}")
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix is singular to working precision")]
    SingularMatrix,

    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,

    #[error("ambiguous classification at the {boundary} boundary (margin {margin:.3e})")]
    AmbiguousClassification { boundary: Boundary, margin: f64 },

    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),

    #[error("no arrow {from} -> {to}: {certificate}")]
    NoArrow {
        from: String,
        to: String,
        certificate: ObstructionCertificate,
    },

    #[error("perturbation bound must be positive, got {0}")]
    DegenerateDelta(f64),

    #[error("no obstruction certificate found for {from} -> {to}")]
    CertificateNotFound { from: String, to: String },

    #[error("arrow {from} -> {to} exists; no obstruction to certify")]
    ArrowExists { from: String, to: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("witness verification failed: {0}")]
    WitnessFailed(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
