//! *Congruence canonical forms of 2x2 complex matrices.
//!
//! Every 2x2 matrix is *congruent to exactly one of
//!
//! | variant            | canonical matrix            | parameters             |
//! |--------------------|-----------------------------|------------------------|
//! | `Zero`             | `0`                         |                        |
//! | `UnitDirectZero`   | `diag(l, 0)`                | `|l| = 1`              |
//! | `UnitPair`         | `diag(m, n)`                | `|m| = |n| = 1`, unordered |
//! | `Hyperbolic`       | `[0 1; s 0]`                | `|s| < 1`              |
//! | `DeltaTau`         | `t [0 1; 1 i]`              | `|t| = 1`              |
//!
//! Text syntax: `zero | udz(c) | pair(c,c) | hyp(c) | delta(c)`.

mod classify;
mod sampling;
mod text;

use std::fmt;
use std::ops::Neg;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{c, Mat2, I};

pub use classify::{classify, is_star_congruent, ClassificationReport, AMBIGUITY_MARGIN, DEFAULT_TOL};
pub use sampling::random_congruence;
pub use text::{format_complex, format_matrix, parse_complex, parse_matrix};

/// Modulus slack accepted by [`Unimodular::new`].
pub const UNIT_TOL: f64 = 1e-9;

/// A complex number of modulus one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Unimodular(Complex64);

impl Unimodular {
    pub const ONE: Unimodular = Unimodular(Complex64::new(1.0, 0.0));

    /// Accepts `z` with `||z| - 1| <= 1e-9` and stores `z / |z|`, or `z`
    /// itself when it is unimodular to rounding, so printed values read back
    /// bit for bit.
    pub fn new(z: Complex64) -> Result<Self> {
        Self::with_tolerance(z, UNIT_TOL)
    }

    pub(crate) fn with_tolerance(z: Complex64, tol: f64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::invalid("parameter must be finite"));
        }
        if (z.norm() - 1.0).abs() > tol {
            return Err(Error::invalid(format!(
                "parameter {} is not unimodular",
                format_complex(z)
            )));
        }
        let n = z.norm();
        Ok(Unimodular(if (n - 1.0).abs() <= 4.0 * f64::EPSILON { z } else { z / n }))
    }

    /// The phase `z / |z|` of a nonzero finite number.
    pub fn phase_of(z: Complex64) -> Result<Self> {
        let n = z.norm();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::invalid("phase of zero or non-finite number"));
        }
        Ok(Unimodular(z / n))
    }

    pub fn cis(theta: f64) -> Self {
        Unimodular(Complex64::cis(theta))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    /// True when the value lies on the real axis, within `tol`.
    pub fn is_real(self, tol: f64) -> bool {
        self.0.im.abs() <= tol
    }
}

impl Neg for Unimodular {
    type Output = Unimodular;
    fn neg(self) -> Unimodular {
        Unimodular(-self.0)
    }
}

/// A complex number of modulus strictly less than one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SubUnit(Complex64);

impl SubUnit {
    pub const ZERO: SubUnit = SubUnit(Complex64::new(0.0, 0.0));

    pub fn new(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::invalid("parameter must be finite"));
        }
        if z.norm() >= 1.0 {
            return Err(Error::invalid(format!(
                "hyperbolic parameter {} must have modulus < 1",
                format_complex(z)
            )));
        }
        Ok(SubUnit(z))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Zero,
    #[serde(rename = "udz")]
    UnitDirectZero,
    #[serde(rename = "pair")]
    UnitPair,
    #[serde(rename = "hyp")]
    Hyperbolic,
    #[serde(rename = "delta")]
    DeltaTau,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Zero,
        Family::UnitDirectZero,
        Family::UnitPair,
        Family::Hyperbolic,
        Family::DeltaTau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Zero => "zero",
            Family::UnitDirectZero => "udz",
            Family::UnitPair => "pair",
            Family::Hyperbolic => "hyp",
            Family::DeltaTau => "delta",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the two entries of a `UnitPair` relate, compared exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// `diag(l, l)`
    Equal,
    /// `diag(l, -l)`
    Antipodal,
    Generic,
}

#[derive(Clone, Copy, Debug)]
pub enum CanonicalForm {
    Zero,
    UnitDirectZero { lambda: Unimodular },
    UnitPair { mu: Unimodular, nu: Unimodular },
    Hyperbolic { sigma: SubUnit },
    DeltaTau { tau: Unimodular },
}

fn lex_key(z: Complex64) -> (f64, f64) {
    (z.re, z.im)
}

impl CanonicalForm {
    pub fn udz(lambda: Complex64) -> Result<Self> {
        Ok(CanonicalForm::UnitDirectZero { lambda: Unimodular::new(lambda)? })
    }

    pub fn pair(mu: Complex64, nu: Complex64) -> Result<Self> {
        Ok(Self::pair_of(Unimodular::new(mu)?, Unimodular::new(nu)?))
    }

    /// Builds a `UnitPair` in its stored order: real part descending, then
    /// imaginary part descending.
    pub fn pair_of(mu: Unimodular, nu: Unimodular) -> Self {
        let (a, b) = (lex_key(mu.0), lex_key(nu.0));
        if b.0 > a.0 || (b.0 == a.0 && b.1 > a.1) {
            CanonicalForm::UnitPair { mu: nu, nu: mu }
        } else {
            CanonicalForm::UnitPair { mu, nu }
        }
    }

    pub fn hyp(sigma: Complex64) -> Result<Self> {
        Ok(CanonicalForm::Hyperbolic { sigma: SubUnit::new(sigma)? })
    }

    pub fn delta(tau: Complex64) -> Result<Self> {
        Ok(CanonicalForm::DeltaTau { tau: Unimodular::new(tau)? })
    }

    pub fn family(&self) -> Family {
        match self {
            CanonicalForm::Zero => Family::Zero,
            CanonicalForm::UnitDirectZero { .. } => Family::UnitDirectZero,
            CanonicalForm::UnitPair { .. } => Family::UnitPair,
            CanonicalForm::Hyperbolic { .. } => Family::Hyperbolic,
            CanonicalForm::DeltaTau { .. } => Family::DeltaTau,
        }
    }

    pub fn pair_kind(&self) -> Option<PairKind> {
        match *self {
            CanonicalForm::UnitPair { mu, nu } => Some(if mu.0 == nu.0 {
                PairKind::Equal
            } else if mu.0 == -nu.0 {
                PairKind::Antipodal
            } else {
                PairKind::Generic
            }),
            _ => None,
        }
    }

    /// The canonical representative matrix.
    pub fn realize(&self) -> Mat2 {
        let o = c(0.0, 0.0);
        let one = c(1.0, 0.0);
        match *self {
            CanonicalForm::Zero => Mat2::zero(),
            CanonicalForm::UnitDirectZero { lambda } => Mat2::diag(lambda.0, o),
            CanonicalForm::UnitPair { mu, nu } => Mat2::diag(mu.0, nu.0),
            CanonicalForm::Hyperbolic { sigma } => Mat2::raw([[o, one], [sigma.0, o]]),
            CanonicalForm::DeltaTau { tau } => Mat2::raw([[o, tau.0], [tau.0, tau.0 * I]]),
        }
    }

    /// Distance between the parameters of two forms of the same family;
    /// `None` across families. Pairs are compared as unordered pairs.
    pub fn param_distance(&self, other: &CanonicalForm) -> Option<f64> {
        use CanonicalForm::*;
        match (*self, *other) {
            (Zero, Zero) => Some(0.0),
            (UnitDirectZero { lambda: a }, UnitDirectZero { lambda: b }) => Some((a.0 - b.0).norm()),
            (UnitPair { mu: a, nu: b }, UnitPair { mu: x, nu: y }) => {
                let straight = (a.0 - x.0).norm().max((b.0 - y.0).norm());
                let crossed = (a.0 - y.0).norm().max((b.0 - x.0).norm());
                Some(straight.min(crossed))
            }
            (Hyperbolic { sigma: a }, Hyperbolic { sigma: b }) => Some((a.0 - b.0).norm()),
            (DeltaTau { tau: a }, DeltaTau { tau: b }) => Some((a.0 - b.0).norm()),
            _ => None,
        }
    }

    /// Same family with parameters within `tol`.
    pub fn approx_eq(&self, other: &CanonicalForm, tol: f64) -> bool {
        self.param_distance(other).is_some_and(|d| d <= tol)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.param_distance(other) == Some(0.0)
    }
}

/// Splits `A` into Hermitian `P`, `Q` with `A = P + iQ`.
pub fn to_hermitian_pair(a: &Mat2) -> (Mat2, Mat2) {
    let adj = a.adjoint();
    let p = (*a + adj).scale_re(0.5);
    let q = (*a - adj).scale(c(0.0, -0.5));
    (p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::star_congruence;

    #[test]
    fn realize_examples() {
        let d = CanonicalForm::delta(c(1., 0.)).unwrap().realize();
        assert_eq!(d, Mat2::raw([[c(0., 0.), c(1., 0.)], [c(1., 0.), c(0., 1.)]]));
        let h = CanonicalForm::hyp(c(0., 0.)).unwrap().realize();
        assert_eq!(h, Mat2::real([[0., 1.], [0., 0.]]));
        let p = CanonicalForm::pair(c(1., 0.), c(-1., 0.)).unwrap().realize();
        assert_eq!(p, Mat2::real([[1., 0.], [0., -1.]]));
    }

    #[test]
    fn pair_is_unordered_and_sorted() {
        let a = CanonicalForm::pair(c(-1., 0.), c(1., 0.)).unwrap();
        let b = CanonicalForm::pair(c(1., 0.), c(-1., 0.)).unwrap();
        assert_eq!(a, b);
        match a {
            CanonicalForm::UnitPair { mu, nu } => {
                assert_eq!(mu.value(), c(1., 0.));
                assert_eq!(nu.value(), c(-1., 0.));
            }
            _ => unreachable!(),
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let p = CanonicalForm::pair(c(s, -s), c(s, s)).unwrap();
        match p {
            CanonicalForm::UnitPair { mu, .. } => assert!(mu.value().im > 0.0),
            _ => unreachable!(),
        }
        assert_eq!(a.pair_kind(), Some(PairKind::Antipodal));
        assert_eq!(CanonicalForm::pair(I, I).unwrap().pair_kind(), Some(PairKind::Equal));
        assert_eq!(p.pair_kind(), Some(PairKind::Generic));
    }

    #[test]
    fn invariants_enforced() {
        assert!(CanonicalForm::udz(c(2., 0.)).is_err());
        assert!(CanonicalForm::hyp(c(1., 0.)).is_err());
        assert!(CanonicalForm::hyp(c(0.6, 0.8)).is_err());
        assert!(CanonicalForm::delta(c(f64::NAN, 0.)).is_err());
        let near = CanonicalForm::delta(c(1.0 + 1e-10, 0.)).unwrap();
        match near {
            CanonicalForm::DeltaTau { tau } => assert_eq!(tau.value().norm(), 1.0),
            _ => unreachable!(),
        }
    }

    #[test]
    fn hermitian_pair_examples() {
        let (p, q) = to_hermitian_pair(&Mat2::identity());
        assert_eq!(p, Mat2::identity());
        assert_eq!(q.norm_fro(), 0.0);

        let d = CanonicalForm::delta(c(1., 0.)).unwrap().realize();
        let (p, q) = to_hermitian_pair(&d);
        assert_eq!(p, Mat2::real([[0., 1.], [1., 0.]]));
        assert_eq!(q, Mat2::real([[0., 0.], [0., 1.]]));
        assert!((p + q.scale(I)).max_abs_diff(&d) == 0.0);
    }

    #[test]
    fn hermitian_pair_is_equivariant() {
        let a = Mat2::raw([[c(0.3, 1.0), c(-0.2, 0.5)], [c(1.5, -0.7), c(0.0, 0.4)]]);
        let s = Mat2::raw([[c(1.0, 0.2), c(0.3, 0.0)], [c(-0.4, 0.9), c(0.8, -0.1)]]);
        let (p, q) = to_hermitian_pair(&a);
        let (p2, q2) = to_hermitian_pair(&star_congruence(&s, &a));
        assert!(p2.max_abs_diff(&star_congruence(&s, &p)) < 1e-14);
        assert!(q2.max_abs_diff(&star_congruence(&s, &q)) < 1e-14);
    }
}
