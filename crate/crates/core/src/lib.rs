//! *Congruence of 2x2 complex matrices.
//!
//! Two square matrices are *congruent when `B = S* A S` for a nonsingular
//! `S`. This crate classifies 2x2 matrices up to *congruence, computes the
//! real codimension of each class and its miniversal deformation template,
//! decides the closure order between classes (which classes a class
//! degenerates into under arbitrarily small perturbations), and backs every
//! verdict with either an explicit perturbation or a named invariant.
//!
//! ```
//! use starcong::{classify, codimension, CanonicalForm, DEFAULT_TOL};
//! use starcong::linalg::Mat2;
//! use num_complex::Complex64 as C;
//!
//! let one = C::new(1.0, 0.0);
//! let zero = C::new(0.0, 0.0);
//! let a = Mat2::new(zero, one, one, zero).unwrap();
//! let form = classify(&a, DEFAULT_TOL).unwrap().form;
//! assert_eq!(form.to_string(), "pair(1,-1)");
//! assert_eq!(codimension(&form), 4);
//! ```

pub mod canonical;
pub mod closure;
pub mod error;
pub mod exec;
pub mod grid;
pub mod linalg;
pub mod perturbation;
pub mod report;
pub mod selftest;
pub mod stratification;

pub use canonical::{
    classify, is_star_congruent, random_congruence, to_hermitian_pair, CanonicalForm, ClassificationReport,
    Family, PairKind, SubUnit, Unimodular, DEFAULT_TOL,
};
pub use closure::{
    codim_monotone_check, half_plane_ok, hasse_subgraph, in_cone, reachable, to_dot, ArrowQuery, HasseSubgraph,
};
pub use error::{Boundary, Error, Result};
pub use exec::Execution;
pub use perturbation::{
    no_arrow_certificate, sample_neighborhood, witness, witness_refinement_check, CertificateKind,
    NeighborhoodReport, ObstructionCertificate, Witness,
};
pub use stratification::{codimension, stratum_info, tangent_space_dim, versal_profile, StratumInfo, VersalProfile};
