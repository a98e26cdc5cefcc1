//! Deterministic parameter grids over the five families.
//!
//! Grids stay a fixed distance away from the strata boundaries inside each
//! family (`|s| -> 1`, nearly colliding pair entries) and from very small
//! nonzero `|s|`, where verification at tiny perturbation sizes runs into
//! the floating-point floor.

use std::f64::consts::{PI, TAU};

use crate::canonical::{CanonicalForm, SubUnit, Unimodular};
use crate::linalg::c;

/// Smallest nonzero `|s|` and largest `|s|` used for hyperbolic grids.
pub const HYP_RADII: (f64, f64) = (0.05, 0.95);

/// Minimal angular distance of a generic pair from `m = ±n`.
pub const PAIR_SEPARATION: f64 = 0.1;

fn angle(k: usize, n: usize, offset: f64) -> f64 {
    offset + TAU * k as f64 / n as f64
}

fn with_axes(n: usize, offset: f64) -> Vec<Unimodular> {
    let mut out: Vec<Unimodular> = [c(1., 0.), c(0., 1.), c(-1., 0.), c(0., -1.)]
        .into_iter()
        .map(|z| Unimodular::new(z).unwrap_or(Unimodular::ONE))
        .collect();
    out.extend((0..n.saturating_sub(4)).map(|k| Unimodular::cis(angle(k, n - 4, offset))));
    out
}

pub fn udz_grid(n: usize) -> Vec<CanonicalForm> {
    with_axes(n, 0.123).into_iter().map(|lambda| CanonicalForm::UnitDirectZero { lambda }).collect()
}

pub fn delta_grid(n: usize) -> Vec<CanonicalForm> {
    with_axes(n, 0.321).into_iter().map(|tau| CanonicalForm::DeltaTau { tau }).collect()
}

pub fn equal_pair_grid(n: usize) -> Vec<CanonicalForm> {
    with_axes(n, 0.2).into_iter().map(|l| CanonicalForm::pair_of(l, l)).collect()
}

pub fn antipodal_pair_grid(n: usize) -> Vec<CanonicalForm> {
    with_axes(n, 0.7).into_iter().map(|l| CanonicalForm::pair_of(l, -l)).collect()
}

/// Pairs `(cis a, cis b)` with `b - a` at least [`PAIR_SEPARATION`] away
/// from `0` and `PI`.
pub fn generic_pair_grid(n: usize) -> Vec<CanonicalForm> {
    let span = PI - 2.0 * PAIR_SEPARATION;
    (0..n)
        .map(|k| {
            let a = angle(k, n, 0.05);
            let frac = ((k * 7 + 3) % 23) as f64 / 22.0;
            let mut gap = PAIR_SEPARATION + span * frac;
            if k % 2 == 1 {
                gap += PI;
            }
            CanonicalForm::pair_of(Unimodular::cis(a), Unimodular::cis(a + gap))
        })
        .collect()
}

pub fn hyp_grid(n: usize) -> Vec<CanonicalForm> {
    let (lo, hi) = HYP_RADII;
    let mut out = vec![CanonicalForm::Hyperbolic { sigma: SubUnit::ZERO }];
    let m = n.saturating_sub(1).max(1);
    for k in 0..n.saturating_sub(1) {
        let r = lo + (hi - lo) * ((k * 13) % m) as f64 / (m - 1).max(1) as f64;
        let z = num_complex::Complex64::from_polar(r, angle(k, m, 0.4));
        if let Ok(sigma) = SubUnit::new(z) {
            out.push(CanonicalForm::Hyperbolic { sigma });
        }
    }
    out
}

/// All pair grids together.
pub fn pair_grid(n: usize) -> Vec<CanonicalForm> {
    let mut v = generic_pair_grid(n);
    v.extend(equal_pair_grid(n));
    v.extend(antipodal_pair_grid(n));
    v
}

/// Every family, `n` points each (one for `Zero`).
pub fn all_forms(n: usize) -> Vec<CanonicalForm> {
    let mut v = vec![CanonicalForm::Zero];
    v.extend(udz_grid(n));
    v.extend(pair_grid(n));
    v.extend(hyp_grid(n));
    v.extend(delta_grid(n));
    v
}
