//! Classification of a 2x2 matrix up to *congruence.
//!
//! All tests work on `B = A / ||A||_F` and use quantities that are either
//! *congruence invariants or relative measures of degeneracy:
//!
//! * `|det B|` separates rank one from nonsingular.
//! * For rank one, `min_w ||B - w B*||` separates `l v v*` (udz) from `J_2(0)`.
//! * For nonsingular `B` the cosquare spectrum is governed by the real
//!   invariant `k = c1 / (2 |det B|)` with
//!   `c1 = 2 Re(b11 conj(b22)) - |b12|^2 - |b21|^2`, because
//!   `det(B - x B*) = conj(det B) x^2 - c1 x + det B`. Always `k <= 1`;
//!   `k = 1` is `diag(l, l)`, `-1 < k < 1` a generic pair, `k < -1`
//!   hyperbolic, and `k = -1` either `diag(l, -l)` or `t Delta_2`.
//! * Signs that the spectrum leaves open are read off the trace of the
//!   definite Hermitian combination `r B + conj(r) B*`.

use num_complex::Complex64;

use super::{CanonicalForm, SubUnit, Unimodular};
use crate::error::{Boundary, Error, Result};
use crate::linalg::{c, Mat2};

pub const DEFAULT_TOL: f64 = 1e-9;

/// Decisions whose normalized slack falls below this value are refused.
/// A slack of one half means the test quantity is within a factor of two
/// of the tolerance.
pub const AMBIGUITY_MARGIN: f64 = 0.5;

#[derive(Clone, Copy, Debug)]
pub struct ClassificationReport {
    pub form: CanonicalForm,
    /// Smallest normalized slack `|q - tol| / max(q, tol)` over all threshold
    /// tests taken; in `[AMBIGUITY_MARGIN, 1]`, or infinite for the zero matrix.
    pub margin: f64,
    /// Frobenius norm of the input.
    pub scale: f64,
}

struct Decisions {
    tol: f64,
    margin: f64,
}

impl Decisions {
    /// Whether `q` lies on the degenerate side of the tolerance.
    fn below(&mut self, q: f64, boundary: Boundary) -> Result<bool> {
        let slack = (q - self.tol).abs() / q.max(self.tol);
        self.margin = self.margin.min(slack);
        if slack < AMBIGUITY_MARGIN {
            return Err(Error::AmbiguousClassification { boundary, margin: slack });
        }
        Ok(q <= self.tol)
    }

    /// A sign decision: `q` must be clearly above the tolerance.
    fn resolved(&mut self, q: f64, boundary: Boundary) -> Result<()> {
        if self.below(q, boundary)? {
            return Err(Error::AmbiguousClassification { boundary, margin: 0.0 });
        }
        Ok(())
    }
}

pub fn classify(a: &Mat2, tol: f64) -> Result<ClassificationReport> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::invalid(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    if !a.is_finite() {
        return Err(Error::invalid("matrix entries must be finite"));
    }
    let biggest = a.entries().map(|z| z.norm()).fold(0.0, f64::max);
    if biggest == 0.0 {
        return Ok(ClassificationReport { form: CanonicalForm::Zero, margin: f64::INFINITY, scale: 0.0 });
    }
    let pre = a.scale_re(1.0 / biggest);
    let pre_norm = pre.norm_fro();
    let b = pre.scale_re(1.0 / pre_norm);
    let scale = biggest * pre_norm;

    let mut dec = Decisions { tol, margin: f64::INFINITY };
    let det = b.det();
    let form = if dec.below(det.norm(), Boundary::Singularity)? {
        rank_one(&b, &mut dec)?
    } else {
        nonsingular(&b, det, &mut dec)?
    };
    Ok(ClassificationReport { form, margin: dec.margin, scale })
}

fn rank_one(b: &Mat2, dec: &mut Decisions) -> Result<CanonicalForm> {
    // ||B - w B*||^2 = 2 - 2 Re(w conj(tr B^2)), minimised at w = phase(tr B^2).
    let t2 = (*b * *b).trace();
    let w = if t2.norm() > 0.0 { t2 / t2.norm() } else { c(1.0, 0.0) };
    let q = (*b - b.adjoint().scale(w)).norm_fro();
    if dec.below(q, Boundary::HermitianRankOne)? {
        let lambda = Unimodular::phase_of(b.trace())
            .map_err(|_| Error::AmbiguousClassification { boundary: Boundary::HermitianRankOne, margin: 0.0 })?;
        Ok(CanonicalForm::UnitDirectZero { lambda })
    } else {
        Ok(CanonicalForm::Hyperbolic { sigma: SubUnit::ZERO })
    }
}

fn nonsingular(b: &Mat2, det: Complex64, dec: &mut Decisions) -> Result<CanonicalForm> {
    let m = b.rows();
    let dn = det.norm();
    let phase = det / dn;
    let c1 = 2.0 * (m[0][0] * m[1][1].conj()).re - m[0][1].norm_sqr() - m[1][0].norm_sqr();
    let kappa = c1 / (2.0 * dn);

    if dec.below((1.0 - kappa).abs(), Boundary::CollisionPlus)? {
        // Scalar cosquare l^2 I with l^2 = phase(det).
        let l0 = phase.sqrt();
        let s = definite_sign(b, l0.conj(), dec)?;
        let l = Unimodular::phase_of(l0 * s)?;
        return Ok(CanonicalForm::UnitPair { mu: l, nu: l });
    }

    if dec.below((1.0 + kappa).abs(), Boundary::CollisionMinus)? {
        let xi = -phase;
        let qj = (*b - b.adjoint().scale(xi)).norm_fro();
        if dec.below(qj, Boundary::JordanBlock)? {
            // Scalar cosquare: diag(l, -l), sign immaterial.
            let l = Unimodular::phase_of(xi.sqrt())?;
            return Ok(CanonicalForm::pair_of(l, -l));
        }
        // One Jordan block: B = S* (t Delta_2) S with t^2 = xi. The Hermitian
        // matrix i conj(t) B + c.c. equals S* diag(0, -2) S, so
        // Im(conj(t) tr B) > 0 fixes the sign of t.
        let t0 = xi.sqrt();
        let qs = (t0.conj() * b.trace()).im;
        dec.resolved(qs.abs(), Boundary::SignResolution)?;
        let tau = Unimodular::phase_of(t0 * qs.signum())?;
        return Ok(CanonicalForm::DeltaTau { tau });
    }

    if kappa < -1.0 {
        // Cosquare eigenvalues (k -/+ sqrt(k^2 - 1)) phase(det); the inner one is sigma.
        let root = ((-kappa - 1.0) * (1.0 - kappa)).sqrt();
        let outer = kappa - root;
        let sigma = SubUnit::new(phase / outer)?;
        return Ok(CanonicalForm::Hyperbolic { sigma });
    }

    // Unimodular, distinct cosquare eigenvalues phase(det) e^{+-i theta}, cos theta = k.
    let sin = ((1.0 - kappa) * (1.0 + kappa)).sqrt();
    let m0 = (phase * c(kappa, sin)).sqrt();
    let n0 = phase / m0;
    let bisector = m0 + n0;
    let rho = (bisector / bisector.norm()).conj();
    let s = definite_sign(b, rho, dec)?;
    Ok(CanonicalForm::pair_of(Unimodular::phase_of(m0 * s)?, Unimodular::phase_of(n0 * s)?))
}

/// Sign of the Hermitian matrix `r B + conj(r) B*`, which the branch tests
/// have already shown to be definite. A definite matrix has
/// `|tr H| >= ||H||_F`, so the sign is read off the trace and the ratio
/// serves as the robustness check.
fn definite_sign(b: &Mat2, rho: Complex64, dec: &mut Decisions) -> Result<f64> {
    let h = b.scale(rho) + b.adjoint().scale(rho.conj());
    let tr = h.trace().re;
    dec.resolved(tr.abs() / h.norm_fro(), Boundary::SignResolution)?;
    Ok(tr.signum())
}

/// Whether `A` and `B` classify to the same form with parameters within `tol`.
pub fn is_star_congruent(a: &Mat2, b: &Mat2, tol: f64) -> Result<bool> {
    let fa = classify(a, tol)?.form;
    let fb = classify(b, tol)?.form;
    Ok(fa.approx_eq(&fb, tol))
}
