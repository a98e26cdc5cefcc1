//! Witnesses for arrows, obstructions for non-arrows, and Monte Carlo
//! probes of neighbourhoods.

mod certificate;
mod neighborhood;
mod witness;

pub use certificate::{cosquare_spectrum, hausdorff, no_arrow_certificate, CertificateKind, ObstructionCertificate};
pub use neighborhood::{
    ball_sample, compatibility_distance, sample_neighborhood, sample_neighborhood_with, Histogram,
    NeighborhoodReport, ParamSummary, MAX_SAMPLES,
};
pub use witness::{
    verification_tol, witness, witness_refinement_check, Witness, CONGRUENCE_CHECK, DEFAULT_REFINEMENT,
    MAX_DELTA, PARAM_AGREEMENT,
};
