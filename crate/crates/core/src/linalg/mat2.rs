use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalars throughout the crate.
pub type ComplexScalar = Complex64;

pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Relative singularity guard for [`inverse2`].
pub const TOL_SINGULAR: f64 = 1e-12;

/// A 2x2 complex matrix with finite entries.
///
/// Entries are private so every value built through [`Mat2::new`] or
/// [`Mat2::from_rows`] is finite. Arithmetic on finite matrices can still
/// overflow; [`Mat2::is_finite`] is rechecked where it matters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    m: [[Complex64; 2]; 2],
}

impl Mat2 {
    pub fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Result<Self> {
        Self::from_rows([[a11, a12], [a21, a22]])
    }

    pub fn from_rows(m: [[Complex64; 2]; 2]) -> Result<Self> {
        let out = Mat2 { m };
        if out.is_finite() {
            Ok(out)
        } else {
            Err(Error::invalid("matrix entries must be finite"))
        }
    }

    pub(crate) const fn raw(m: [[Complex64; 2]; 2]) -> Self {
        Mat2 { m }
    }

    pub(crate) fn real(m: [[f64; 2]; 2]) -> Self {
        Mat2::raw([[c(m[0][0], 0.0), c(m[0][1], 0.0)], [c(m[1][0], 0.0), c(m[1][1], 0.0)]])
    }

    pub const fn zero() -> Self {
        Mat2::raw([[Complex64::new(0.0, 0.0); 2]; 2])
    }

    pub const fn identity() -> Self {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        Mat2::raw([[l, o], [o, l]])
    }

    pub fn diag(a: Complex64, b: Complex64) -> Self {
        let o = Complex64::new(0.0, 0.0);
        Mat2::raw([[a, o], [o, b]])
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.m[i][j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.m[i][j] = v;
    }

    pub fn rows(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Mat2::raw([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn norm_fro(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub(crate) fn norm_sqr(&self) -> f64 {
        self.m.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| z * s)
    }

    pub(crate) fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let m = &self.m;
        Mat2::raw([[f(m[0][0]), f(m[0][1])], [f(m[1][0]), f(m[1][1])]])
    }

    pub(crate) fn entries(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.m.iter().flatten().copied()
    }

    /// Largest entrywise difference, used by tests and verification.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// 2-norm condition number, infinite for singular matrices.
    pub fn condition(&self) -> f64 {
        let f = self.norm_sqr();
        let d = self.det().norm();
        if d == 0.0 {
            return f64::INFINITY;
        }
        let disc = ((f - 2.0 * d) * (f + 2.0 * d)).max(0.0).sqrt();
        (f + disc) / (2.0 * d)
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.m, &rhs.m);
        Mat2::raw([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        self + (-rhs)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.map(|z| -z)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.m, &rhs.m);
        Mat2::raw([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

impl Mul<Complex64> for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Complex64) -> Mat2 {
        self.scale(rhs)
    }
}

/// Returns `S* A S`.
pub fn star_congruence(s: &Mat2, a: &Mat2) -> Mat2 {
    s.adjoint() * *a * *s
}

/// Roots of `det(A - xI)`, ordered by modulus, then real part, then imaginary
/// part, all descending.
pub fn eigenvalues2(a: &Mat2) -> (Complex64, Complex64) {
    let tr = a.trace();
    let det = a.det();
    let m = a.rows();
    // (a11 - a22)^2 + 4 a12 a21 avoids the cancellation in tr^2 - 4 det.
    let diff = m[0][0] - m[1][1];
    let disc = (diff * diff + 4.0 * m[0][1] * m[1][0]).sqrt();
    let sign = if (tr.conj() * disc).re >= 0.0 { 1.0 } else { -1.0 };
    let big = (tr + disc * sign) * 0.5;
    let small = if big.norm() > 0.0 { det / big } else { Complex64::new(0.0, 0.0) };
    let mut pair = [big, small];
    pair.sort_by(|x, y| {
        y.norm()
            .total_cmp(&x.norm())
            .then(y.re.total_cmp(&x.re))
            .then(y.im.total_cmp(&x.im))
    });
    (pair[0], pair[1])
}

pub fn inverse2(a: &Mat2) -> Result<Mat2> {
    let det = a.det();
    if det.norm().is_nan() || det.norm() <= TOL_SINGULAR * a.norm_sqr() {
        return Err(Error::SingularMatrix);
    }
    let m = a.rows();
    let inv = 1.0 / det;
    Ok(Mat2::raw([
        [m[1][1] * inv, -m[0][1] * inv],
        [-m[1][0] * inv, m[0][0] * inv],
    ]))
}

/// The cosquare `(A^{-1})* A`; its similarity class is a *congruence invariant.
pub fn cosquare(a: &Mat2) -> Result<Mat2> {
    Ok(inverse2(a)?.adjoint() * *a)
}

/// Counts of positive, zero and negative eigenvalues of a Hermitian matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

/// Default Hermitian and zero-eigenvalue tolerance for [`inertia2`].
pub const INERTIA_TOL: f64 = 1e-9;

pub fn inertia2(h: &Mat2) -> Result<Inertia> {
    inertia2_with_tol(h, INERTIA_TOL)
}

pub fn inertia2_with_tol(h: &Mat2, tol: f64) -> Result<Inertia> {
    let (hi, lo) = hermitian_eigenvalues(h, tol)?;
    let threshold = tol * h.norm_fro();
    let mut out = Inertia { n_plus: 0, n_zero: 0, n_minus: 0 };
    for ev in [hi, lo] {
        if ev > threshold {
            out.n_plus += 1;
        } else if ev < -threshold {
            out.n_minus += 1;
        } else {
            out.n_zero += 1;
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian 2x2 matrix, larger first.
pub fn hermitian_eigenvalues(h: &Mat2, tol: f64) -> Result<(f64, f64)> {
    if !h.is_finite() {
        return Err(Error::invalid("matrix entries must be finite"));
    }
    if (*h - h.adjoint()).norm_fro() > tol * h.norm_fro() {
        return Err(Error::NotHermitian);
    }
    let m = h.rows();
    let (a, d) = (m[0][0].re, m[1][1].re);
    let b = 0.5 * (m[0][1] + m[1][0].conj());
    let mean = 0.5 * (a + d);
    let rad = (0.5 * (a - d)).hypot(b.norm());
    let hi = mean + rad;
    // Product of eigenvalues is the determinant; avoids cancellation in mean - rad.
    let det = a * d - b.norm_sqr();
    let lo = if hi != 0.0 { det / hi } else { mean - rad };
    Ok((hi.max(lo), hi.min(lo)))
}
