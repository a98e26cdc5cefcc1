use num_complex::Complex64 as C;

use starcong::linalg::{cosquare, eigenvalues2, star_congruence, Mat2, Stream};
use starcong::perturbation::{ball_sample, compatibility_distance, hausdorff, sample_neighborhood_with, verification_tol, DEFAULT_REFINEMENT};
use starcong::selftest::{arrow_grid, pair_grid};
use starcong::{
    classify, grid, no_arrow_certificate, reachable, sample_neighborhood, witness, witness_refinement_check,
    ArrowQuery, CanonicalForm, CertificateKind, Error, Execution, Family, DEFAULT_TOL,
};

#[test]
fn witnesses_are_sound() {
    for (m, n) in arrow_grid(4) {
        for delta in DEFAULT_REFINEMENT {
            let w = witness(&m, &n, delta, 3).unwrap_or_else(|e| panic!("{m} -> {n} at {delta:e}: {e}"));
            assert!(w.e.norm_fro() <= delta);
            let perturbed = m.realize() + w.e;
            let carried = star_congruence(&w.s, &n.realize());
            assert!(carried.max_abs_diff(&perturbed) <= 1e-10 * w.s.norm_fro().powi(2) * n.realize().norm_fro());
            let got = classify(&perturbed, verification_tol(delta)).unwrap().form;
            assert!(got.approx_eq(&n, 1e-6), "{m} -> {n}: {got}");
        }
        assert!(witness_refinement_check(&m, &n, &DEFAULT_REFINEMENT, 3).unwrap());
    }
}

#[test]
fn witness_refusals() {
    let f = |s: &str| s.parse::<CanonicalForm>().unwrap();
    assert!(matches!(witness(&f("pair(1,1)"), &f("hyp(0.3)"), 1e-3, 0), Err(Error::NoArrow { .. })));
    assert!(matches!(witness(&f("zero"), &f("hyp(0.3)"), 0.0, 0), Err(Error::DegenerateDelta(_))));
    assert!(witness(&f("zero"), &f("hyp(0.3)"), 0.5, 0).is_err());
    assert!(witness(&f("udz(1)"), &f("udz(1)"), 1e-3, 0).is_err());
}

fn det_phase(a: &Mat2) -> C {
    let d = a.det();
    d / d.norm()
}

fn spectrum(a: &Mat2) -> Option<[C; 2]> {
    cosquare(a).ok().map(|k| {
        let (p, q) = eigenvalues2(&k);
        [p, q]
    })
}

/// Each certificate names an invariant that moves by less than its margin
/// under small perturbations; check that on samples around the source.
#[test]
fn certificates_hold_up_under_sampling() {
    let mut rng = Stream::new(19);
    let mut checked = 0;
    for (m, n) in pair_grid(3) {
        if reachable(&ArrowQuery::new(m, n)) {
            continue;
        }
        let cert = no_arrow_certificate(&m, &n).unwrap();
        let half = cert.margin.0 / 2.0;
        let base = m.realize();
        for _ in 0..50 {
            let a = base + ball_sample(&mut rng, 1e-4);
            let Ok(r) = classify(&a, DEFAULT_TOL) else { continue };
            let moved = match cert.kind {
                CertificateKind::SpectrumGap => match (spectrum(&base), spectrum(&a)) {
                    (Some(p), Some(q)) => hausdorff(&p, &q),
                    _ => continue,
                },
                CertificateKind::DetPhaseGap => (det_phase(&a) * det_phase(&base).conj()).arg().abs(),
                CertificateKind::ConeMargin | CertificateKind::HalfPlaneMargin if r.form.family() == n.family() => {
                    compatibility_distance(&m, &r.form).unwrap()
                }
                _ => continue,
            };
            checked += 1;
            assert!(moved < half, "{m} -/-> {n} ({cert}): sample {} moved {moved:e}", r.form);
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn spectrum_moves_continuously() {
    for f in grid::all_forms(4) {
        let Some(drift) = sample_neighborhood(&f, 1e-6, 2000, 2).unwrap().max_spectrum_drift else {
            assert!(matches!(f.family(), Family::Zero | Family::UnitDirectZero) || f.realize().det() == C::new(0.0, 0.0));
            continue;
        };
        // Jordan blocks split like the square root of the perturbation.
        assert!(drift.0 <= 0.1 * 1e-6_f64.sqrt() * 100.0, "{f}: {}", drift.0);
    }
}

#[test]
fn generic_classes_fill_the_neighbourhood_of_zero() {
    let r = sample_neighborhood(&CanonicalForm::Zero, 1e-3, 20_000, 4).unwrap();
    let h = r.histogram;
    assert_eq!(h.total(), 20_000);
    assert!(h.zero + h.udz < 200, "{h:?}");
    assert!(h.pair + h.hyp > 19_000, "{h:?}");
}

#[test]
fn near_identity_everything_is_a_pair() {
    let r = sample_neighborhood(&"pair(1,1)".parse().unwrap(), 1e-3, 10_000, 5).unwrap();
    // A handful sit too close to the equal-pair stratum to call.
    assert_eq!(r.histogram.pair + r.histogram.boundary, 10_000);
    assert!(r.histogram.boundary < 20);
    let s = r.summaries.iter().find(|s| s.family == Family::UnitPair).unwrap();
    assert!(s.max.0 <= 1e-2, "pair parameters drift by {}", s.max.0);
}

#[test]
fn report_is_deterministic_across_modes() {
    let source = "delta(1i)".parse().unwrap();
    let a = sample_neighborhood_with(&source, 1e-2, 10_000, 8, DEFAULT_TOL, Execution::Sequential).unwrap();
    let b = sample_neighborhood_with(&source, 1e-2, 10_000, 8, DEFAULT_TOL, Execution::Parallel).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn sampling_rejects_bad_arguments() {
    let z = CanonicalForm::Zero;
    assert!(sample_neighborhood(&z, 0.0, 10, 0).is_err());
    assert!(sample_neighborhood(&z, 0.2, 10, 0).is_err());
    assert!(sample_neighborhood(&z, 1e-3, 10_000_001, 0).is_err());
    let m = Mat2::identity();
    assert_eq!(m.norm_fro(), 2f64.sqrt());
}
