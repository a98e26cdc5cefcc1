use num_complex::Complex64;

use super::no_arrow_certificate;
use crate::canonical::{classify, CanonicalForm, PairKind, Unimodular};
use crate::closure::{cone_coefficients, reachable, ArrowQuery, CONDITION_TOL};
use crate::error::{Error, Result};
use crate::linalg::{c, inverse2, star_congruence, Mat2, Stream};

/// Largest perturbation bound accepted by [`witness`].
pub const MAX_DELTA: f64 = 0.1;

/// Parameter agreement required between the target and the class of `M + E`.
pub const PARAM_AGREEMENT: f64 = 1e-6;

/// Relative accuracy required of `S* realize(N) S = M + E`.
pub const CONGRUENCE_CHECK: f64 = 1e-10;

/// A small perturbation carrying a canonical matrix into another class.
#[derive(Clone, Copy, Debug)]
pub struct Witness {
    pub e: Mat2,
    /// `S` with `S* realize(target) S = realize(source) + E`.
    pub s: Mat2,
    pub norm_e: f64,
    pub delta: f64,
    /// Class of `realize(source) + E` as classified during verification.
    pub achieved: CanonicalForm,
    pub param_error: f64,
    pub verify_tol: f64,
}

/// Classification tolerance used to verify a witness at scale `delta`.
pub fn verification_tol(delta: f64) -> f64 {
    (delta * delta / 100.0).clamp(1e-14, 1e-9)
}

pub fn witness(source: &CanonicalForm, target: &CanonicalForm, delta: f64, seed: u64) -> Result<Witness> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::DegenerateDelta(delta));
    }
    if delta > MAX_DELTA {
        return Err(Error::invalid(format!("delta must be at most {MAX_DELTA}, got {delta}")));
    }
    if source == target {
        return Err(Error::invalid("source and target coincide; the lazy path needs no witness"));
    }
    if !reachable(&ArrowQuery::new(*source, *target)) {
        let certificate = no_arrow_certificate(source, target)?;
        return Err(Error::NoArrow { from: source.to_string(), to: target.to_string(), certificate });
    }
    let phase = Stream::new(seed).uniform(0.0, std::f64::consts::TAU);
    let (e, s) = construct(source, target, delta, phase)?;
    verify(source, target, e, s, delta)
}

fn construct(source: &CanonicalForm, target: &CanonicalForm, delta: f64, phase: f64) -> Result<(Mat2, Mat2)> {
    use CanonicalForm::*;
    let m = source.realize();
    let d = target.realize();
    match (*source, *target) {
        (Zero, _) => {
            let r = d.norm_fro();
            let mut k = delta / r;
            if (d.scale_re(k)).norm_fro() > delta {
                k *= 1.0 - 4.0 * f64::EPSILON;
            }
            Ok((d.scale_re(k), Mat2::identity().scale_re(k.sqrt())))
        }
        (UnitDirectZero { lambda }, UnitPair { mu, nu }) => {
            let (a, b) = cone_coefficients(lambda, mu, nu)
                .ok_or_else(|| Error::WitnessFailed("cone coefficients unavailable".into()))?;
            Ok(second_column(&m, &d, c(a.sqrt(), 0.0), c(b.sqrt(), 0.0), delta, phase))
        }
        (UnitDirectZero { lambda }, Hyperbolic { sigma }) => {
            // x̄z + σ z̄x = l with w = x̄z: (1+α)u + βv = Re l, βu + (1-α)v = Im l.
            let (al, be) = (sigma.value().re, sigma.value().im);
            let l = lambda.value();
            let det = 1.0 - al * al - be * be;
            let u = ((1.0 - al) * l.re - be * l.im) / det;
            let v = ((1.0 + al) * l.im - be * l.re) / det;
            let w = c(u, v);
            let r = w.norm().sqrt();
            Ok(second_column(&m, &d, c(r, 0.0), w / r, delta, phase))
        }
        (UnitDirectZero { lambda }, DeltaTau { tau }) => {
            let q = tau.value().conj() * lambda.value();
            if q.im > CONDITION_TOL {
                let z = q.im.sqrt();
                Ok(second_column(&m, &d, c(q.re / (2.0 * z), 0.0), c(z, 0.0), delta, phase))
            } else {
                boundary_chain(lambda, tau, delta)
            }
        }
        (UnitPair { mu, .. }, DeltaTau { tau }) if source.pair_kind() == Some(PairKind::Antipodal) => {
            let sign = if (tau.value() - mu.value()).norm() <= (tau.value() + mu.value()).norm() { 1.0 } else { -1.0 };
            antipodal_to_delta(mu.value(), sign, 0.45 * delta)
        }
        _ => Err(Error::WitnessFailed(format!("no construction for {source} -> {target}"))),
    }
}

/// `S = [x y; z t]` with a fixed first column solving the (1,1) equation
/// `col1* D col1 = m11` and a small second column `h (0,1)` or `h (1,0)`,
/// whichever keeps `S` nonsingular. The size `|h|` is the largest with
/// `||E|| <= 0.9 delta`, where `E = S* D S - M` is quadratic in `h`.
fn second_column(m: &Mat2, d: &Mat2, x: Complex64, z: Complex64, delta: f64, phase: f64) -> (Mat2, Mat2) {
    let unit = Complex64::cis(phase);
    let build = |h: f64| {
        let col2 = if x.norm() >= z.norm() { [c(0.0, 0.0), unit * h] } else { [unit * h, c(0.0, 0.0)] };
        Mat2::raw([[x, col2[0]], [z, col2[1]]])
    };
    let e1 = star_congruence(&build(1.0), d) - *m;
    let lin = (e1.get(0, 1).norm_sqr() + e1.get(1, 0).norm_sqr()).sqrt();
    let quad = e1.get(1, 1).norm();
    let b = 0.9 * delta;
    let h = (2.0 * b * b / (lin * lin + (lin.powi(4) + 4.0 * quad * quad * b * b).sqrt())).sqrt();
    let s = build(h);
    let mut e = star_congruence(&s, d) - *m;
    if e.get(0, 0).norm() <= 4.0 * f64::EPSILON {
        e.set(0, 0, c(0.0, 0.0));
    }
    (e, s)
}

/// `diag(l,-l) + E'` is *congruent to `± l Delta_2` for
/// `E' = ± i eps l [1 -1; -1 1]`, through `S0 = [1 1/2; 1 -1/2]` and
/// `D = diag(sqrt eps, 1/sqrt eps)`. Returns `(E', S)` with
/// `S* (± l Delta_2) S = diag(l,-l) + E'`.
fn antipodal_to_delta(l: Complex64, sign: f64, eps: f64) -> Result<(Mat2, Mat2)> {
    let k = c(0.0, sign * eps) * l;
    let e = Mat2::raw([[k, -k], [-k, k]]);
    let s0 = Mat2::real([[1.0, 0.5], [1.0, -0.5]]);
    let mut s0_inv = inverse2(&s0)?;
    if sign < 0.0 {
        s0_inv = Mat2::real([[1.0, 0.0], [0.0, -1.0]]) * s0_inv;
    }
    let d_inv = Mat2::real([[1.0 / eps.sqrt(), 0.0], [0.0, eps.sqrt()]]);
    Ok((e, d_inv * s0_inv))
}

/// `udz(l) -> delta(±l)`: first shrink the second diagonal entry of
/// `diag(l, -l)` by `D_h = diag(1, sqrt h)`, then apply the antipodal
/// construction. `E = diag(0, -h l) + D_h E' D_h`.
fn boundary_chain(lambda: Unimodular, tau: Unimodular, delta: f64) -> Result<(Mat2, Mat2)> {
    let l = lambda.value();
    let sign = if (tau.value() - l).norm() <= (tau.value() + l).norm() { 1.0 } else { -1.0 };
    let h = 0.45 * delta;
    let (e_pair, s_pair) = antipodal_to_delta(l, sign, 0.2 * delta)?;
    let d_h = Mat2::real([[1.0, 0.0], [0.0, h.sqrt()]]);
    let e = Mat2::diag(c(0.0, 0.0), -l * h) + d_h * e_pair * d_h;
    Ok((e, s_pair * d_h))
}

fn verify(source: &CanonicalForm, target: &CanonicalForm, e: Mat2, s: Mat2, delta: f64) -> Result<Witness> {
    let norm_e = e.norm_fro();
    if norm_e > delta {
        return Err(Error::WitnessFailed(format!("||E|| = {norm_e:e} exceeds delta = {delta:e}")));
    }
    let perturbed = source.realize() + e;
    let carried = star_congruence(&s, &target.realize());
    let scale = s.norm_fro().powi(2) * target.realize().norm_fro();
    if carried.max_abs_diff(&perturbed) > CONGRUENCE_CHECK * scale {
        return Err(Error::WitnessFailed("S* N S differs from M + E".into()));
    }
    let verify_tol = verification_tol(delta);
    let achieved = classify(&perturbed, verify_tol)
        .map_err(|err| Error::WitnessFailed(format!("M + E does not classify cleanly: {err}")))?
        .form;
    let param_error = achieved
        .param_distance(target)
        .ok_or_else(|| Error::WitnessFailed(format!("M + E classifies as {achieved}, expected {target}")))?;
    if param_error > PARAM_AGREEMENT {
        return Err(Error::WitnessFailed(format!(
            "M + E classifies as {achieved}, off the target by {param_error:e}"
        )));
    }
    Ok(Witness { e, s, norm_e, delta, achieved, param_error, verify_tol })
}

/// Witnesses at every bound in `deltas`, usually [`DEFAULT_REFINEMENT`].
pub fn witness_refinement_check(
    source: &CanonicalForm,
    target: &CanonicalForm,
    deltas: &[f64],
    seed: u64,
) -> Result<bool> {
    for &delta in deltas {
        witness(source, target, delta, seed)?;
    }
    Ok(true)
}

pub const DEFAULT_REFINEMENT: [f64; 3] = [1e-2, 1e-4, 1e-6];
