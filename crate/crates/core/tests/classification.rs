use num_complex::Complex64 as C;
use proptest::prelude::*;

use starcong::linalg::{cosquare, eigenvalues2, star_congruence, Mat2};
use starcong::{classify, grid, is_star_congruent, random_congruence, CanonicalForm, Error, DEFAULT_TOL};

fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

fn mat(a: C, b: C, cc: C, d: C) -> Mat2 {
    Mat2::new(a, b, cc, d).unwrap()
}

fn forms() -> Vec<CanonicalForm> {
    grid::all_forms(30)
}

fn form_strategy() -> impl Strategy<Value = CanonicalForm> {
    let all = forms();
    (0..all.len()).prop_map(move |i| all[i])
}

fn same_set(a: [C; 2], b: [C; 2], tol: f64) -> bool {
    let direct = (a[0] - b[0]).norm().max((a[1] - b[1]).norm());
    let crossed = (a[0] - b[1]).norm().max((a[1] - b[0]).norm());
    direct.min(crossed) <= tol
}

#[test]
fn named_matrices() {
    let o = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let cases = [
        (mat(o, o, o, o), "zero"),
        (mat(o, o, o, i), "udz(1i)"),
        (mat(o, one, one, o), "pair(1,-1)"),
        (mat(one, o, o, one).scale(c(3.0, 0.0)), "pair(1,1)"),
        (mat(o, one, c(0.25, 0.0), o), "hyp(0.25)"),
        (mat(o, one, one, i), "delta(1)"),
    ];
    for (a, want) in cases {
        assert_eq!(classify(&a, DEFAULT_TOL).unwrap().form.to_string(), want);
    }
}

#[test]
fn refuses_non_finite_input() {
    let nan = c(f64::NAN, 0.0);
    assert!(Mat2::new(nan, nan, nan, nan).is_err());
}

#[test]
fn delta_isotropic_eigenvector() {
    // The eigenvector x of the cosquare of a delta class satisfies x* A x = 0.
    for f in grid::delta_grid(40) {
        for seed in 0..5 {
            let (_, a) = random_congruence(&f, seed, 10.0).unwrap();
            let k = cosquare(&a).unwrap();
            let (p, q) = eigenvalues2(&k);
            let xi = (p + q) / 2.0;
            let r = (k - Mat2::diag(xi, xi)).rows();
            let row = if r[0][0].norm() + r[0][1].norm() >= r[1][0].norm() + r[1][1].norm() { r[0] } else { r[1] };
            let norm = (row[0].norm_sqr() + row[1].norm_sqr()).sqrt();
            let x = [row[1] / norm, -row[0] / norm];
            let ar = a.rows();
            let ax = [ar[0][0] * x[0] + ar[0][1] * x[1], ar[1][0] * x[0] + ar[1][1] * x[1]];
            let q = x[0].conj() * ax[0] + x[1].conj() * ax[1];
            assert!(q.norm() <= 1e-6 * a.norm_fro(), "{f} seed {seed}: x*Ax = {q}");
        }
    }
}

#[test]
fn hyperbolic_spectrum() {
    for f in grid::hyp_grid(60) {
        let CanonicalForm::Hyperbolic { sigma } = f else { unreachable!() };
        let s = sigma.value();
        if s.norm() == 0.0 {
            continue;
        }
        let (p, q) = eigenvalues2(&cosquare(&f.realize()).unwrap());
        assert!(same_set([p, q], [s, 1.0 / s.conj()], 1e-12), "{f}: {p} {q}");
    }
}

#[test]
fn ambiguous_input_is_refused() {
    // Determinant right at the rank threshold.
    let a = mat(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1e-9, 0.0));
    assert!(matches!(classify(&a, 1e-9), Err(Error::AmbiguousClassification { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn positive_scaling_keeps_the_class(f in form_strategy(), seed in any::<u64>(), log_t in -6.0..6.0f64) {
        let (_, a) = random_congruence(&f, seed, 10.0).unwrap();
        let t = 10f64.powf(log_t);
        let got = classify(&a.scale(c(t, 0.0)), DEFAULT_TOL).unwrap().form;
        prop_assert!(got.approx_eq(&f, 1e-6), "{} became {}", f, got);
    }

    #[test]
    fn text_round_trip(f in form_strategy()) {
        let back: CanonicalForm = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn congruent_matrices_are_recognised(f in form_strategy(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (_, a) = random_congruence(&f, s1, 10.0).unwrap();
        let (_, b) = random_congruence(&f, s2, 10.0).unwrap();
        prop_assert!(is_star_congruent(&a, &b, 1e-6).unwrap());
    }

    #[test]
    fn cosquare_spectrum_is_invariant(f in form_strategy(), seed in any::<u64>()) {
        prop_assume!(!matches!(f.family(), starcong::Family::Zero | starcong::Family::UnitDirectZero));
        prop_assume!(f.realize().det().norm() > 0.0);
        let (s, a) = random_congruence(&f, seed, 10.0).unwrap();
        prop_assert!(a.max_abs_diff(&star_congruence(&s, &f.realize())) < 1e-12 * (1.0 + a.norm_fro()));
        let (p, q) = eigenvalues2(&cosquare(&f.realize()).unwrap());
        let (x, y) = eigenvalues2(&cosquare(&a).unwrap());
        // Jordan blocks split like the square root of the rounding error.
        let tol = if f.family() == starcong::Family::DeltaTau { 1e-5 } else { 1e-8 };
        prop_assert!(same_set([p, q], [x, y], tol), "{}: {} {} vs {} {}", f, p, q, x, y);
    }
}
