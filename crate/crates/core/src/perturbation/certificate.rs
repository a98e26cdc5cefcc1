use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::canonical::{CanonicalForm, Family, PairKind};
use crate::closure::{cone_distance, reachable, ArrowQuery};
use crate::error::{Error, Result};
use crate::report::Real;
use crate::stratification::codimension;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    CodimMonotonicity,
    SpectrumGap,
    ConeMargin,
    HalfPlaneMargin,
    DetPhaseGap,
    HermitianRankGap,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A computable invariant separating the source class from the target's
/// closure. `margin` is positive and kind-specific.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ObstructionCertificate {
    pub kind: CertificateKind,
    pub margin: Real,
}

impl fmt::Display for ObstructionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (margin {})", self.kind, crate::canonical::format_complex(self.margin.0.into()))
    }
}

/// Eigenvalues of the cosquare `A^{-*} A` of the canonical matrix, as a set.
/// `hyp(0)` has the singular limit `{0}`; singular families without a
/// limit give `None`.
pub fn cosquare_spectrum(form: &CanonicalForm) -> Option<Vec<Complex64>> {
    match *form {
        CanonicalForm::UnitPair { mu, nu } => {
            Some(vec![mu.value() * mu.value(), nu.value() * nu.value()])
        }
        CanonicalForm::Hyperbolic { sigma } => {
            let s = sigma.value();
            if s == Complex64::new(0.0, 0.0) {
                Some(vec![s])
            } else {
                Some(vec![s, 1.0 / s.conj()])
            }
        }
        CanonicalForm::DeltaTau { tau } => Some(vec![tau.value() * tau.value()]),
        CanonicalForm::Zero | CanonicalForm::UnitDirectZero { .. } => None,
    }
}

/// Hausdorff distance between two finite point sets in the plane.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let directed = |x: &[Complex64], y: &[Complex64]| {
        x.iter()
            .map(|p| y.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

fn det_phase(form: &CanonicalForm) -> Option<Complex64> {
    match *form {
        CanonicalForm::UnitPair { mu, nu } => Some(mu.value() * nu.value()),
        CanonicalForm::DeltaTau { tau } => Some(-tau.value() * tau.value()),
        CanonicalForm::Hyperbolic { sigma } if sigma.value().norm() > 0.0 => {
            let d = -sigma.value();
            Some(d / d.norm())
        }
        _ => None,
    }
}

fn cert(kind: CertificateKind, margin: f64) -> ObstructionCertificate {
    ObstructionCertificate { kind, margin: Real(margin) }
}

/// The first applicable obstruction to `source ⪯ target`.
pub fn no_arrow_certificate(source: &CanonicalForm, target: &CanonicalForm) -> Result<ObstructionCertificate> {
    use CanonicalForm::*;
    if reachable(&ArrowQuery::new(*source, *target)) {
        return Err(Error::ArrowExists { from: source.to_string(), to: target.to_string() });
    }
    let (cm, cn) = (codimension(source), codimension(target));
    if cm <= cn {
        let margin = match source.param_distance(target) {
            Some(d) => d,
            None => (cn - cm + 1) as f64,
        };
        if margin > 0.0 {
            return Ok(cert(CertificateKind::CodimMonotonicity, margin));
        }
    }
    if source.family() == Family::UnitPair && matches!(target.family(), Family::UnitPair | Family::Hyperbolic) {
        if let (Some(a), Some(b)) = (cosquare_spectrum(source), cosquare_spectrum(target)) {
            let gap = hausdorff(&a, &b);
            if gap > 0.0 {
                return Ok(cert(CertificateKind::SpectrumGap, gap));
            }
        }
    }
    match (*source, *target) {
        (UnitDirectZero { lambda }, UnitPair { mu, nu }) => {
            let d = cone_distance(lambda, mu, nu);
            if d > 0.0 {
                return Ok(cert(CertificateKind::ConeMargin, d));
            }
        }
        (UnitDirectZero { lambda }, DeltaTau { tau }) => {
            let m = -(lambda.value() * tau.value().conj()).im;
            if m > 0.0 {
                return Ok(cert(CertificateKind::HalfPlaneMargin, m));
            }
        }
        _ => {}
    }
    if source.family() == Family::UnitPair && target.family() == Family::DeltaTau {
        if let (Some(a), Some(b)) = (det_phase(source), det_phase(target)) {
            let gap = (a * b.conj()).arg().abs();
            if gap > 1e-12 {
                return Ok(cert(CertificateKind::DetPhaseGap, gap));
            }
        }
        if let (UnitPair { mu, .. }, DeltaTau { tau }) = (*source, *target) {
            let ratio = tau.value() / mu.value();
            if source.pair_kind() == Some(PairKind::Equal) && (ratio.re.abs() <= 1e-9) {
                return Ok(cert(CertificateKind::HermitianRankGap, 1.0));
            }
        }
    }
    Err(Error::CertificateNotFound { from: source.to_string(), to: target.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert_of(a: &str, b: &str) -> ObstructionCertificate {
        no_arrow_certificate(&a.parse().unwrap(), &b.parse().unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let c = cert_of("pair(1,1)", "hyp(0.3)");
        assert_eq!(c.kind, CertificateKind::SpectrumGap);
        assert!((c.margin.0 - 7.0 / 3.0).abs() < 1e-12);
        assert_eq!(cert_of("pair(1,1)", "delta(1i)").kind, CertificateKind::HermitianRankGap);
        let c = cert_of("udz(1)", "pair(1i,1i)");
        assert_eq!((c.kind, c.margin.0), (CertificateKind::ConeMargin, 1.0));
        assert_eq!(cert_of("hyp(0.1)", "hyp(0.2)").kind, CertificateKind::CodimMonotonicity);
        let c = cert_of("udz(1)", "delta(1i)");
        assert_eq!((c.kind, c.margin.0), (CertificateKind::HalfPlaneMargin, 1.0));
        assert_eq!(cert_of("pair(1,-1)", "delta(1i)").kind, CertificateKind::DetPhaseGap);
    }

    #[test]
    fn arrow_has_no_certificate() {
        let r = no_arrow_certificate(&"zero".parse().unwrap(), &"hyp(0)".parse().unwrap());
        assert!(matches!(r, Err(Error::ArrowExists { .. })));
    }

    #[test]
    fn hausdorff_sets() {
        let one = [Complex64::new(1.0, 0.0)];
        let two = [Complex64::new(0.3, 0.0), Complex64::new(10.0 / 3.0, 0.0)];
        assert!((hausdorff(&one, &two) - 7.0 / 3.0).abs() < 1e-15);
        assert_eq!(hausdorff(&one, &one), 0.0);
    }
}
