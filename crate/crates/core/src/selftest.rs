//! Built-in consistency suites, also exposed through the command line.

use serde::Serialize;

use crate::canonical::{classify, random_congruence, CanonicalForm, PairKind, DEFAULT_TOL};
use crate::closure::{codim_monotone_check, reachable, ArrowQuery};
use crate::exec::Execution;
use crate::grid;
use crate::perturbation::{no_arrow_certificate, witness, DEFAULT_REFINEMENT};
use crate::stratification::{codimension, versal_profile};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const MAX_REPORTED: usize = 5;

fn suite<T: Sync>(name: &'static str, items: &[T], exec: Execution, check: impl Fn(&T) -> Option<String> + Sync + Send) -> SuiteOutcome {
    let results = exec.map_indexed(items.len(), |i| check(&items[i]));
    let failures: Vec<String> = results.into_iter().flatten().collect();
    SuiteOutcome {
        name,
        checked: items.len(),
        failures: failures.into_iter().take(MAX_REPORTED).collect(),
    }
}

/// The codimension each class must have.
pub fn expected_codimension(f: &CanonicalForm) -> usize {
    match f {
        CanonicalForm::Zero => 8,
        CanonicalForm::UnitDirectZero { .. } => 5,
        CanonicalForm::UnitPair { .. } if f.pair_kind() != Some(PairKind::Generic) => 4,
        _ => 2,
    }
}

/// Ordered pairs of forms drawn from a small grid of every family.
pub fn pair_grid(per_family: usize) -> Vec<(CanonicalForm, CanonicalForm)> {
    let forms = grid::all_forms(per_family);
    forms.iter().flat_map(|a| forms.iter().map(move |b| (*a, *b))).collect()
}

/// Ordered pairs `source ⪯ target` with distinct members, from the grid.
pub fn arrow_grid(per_family: usize) -> Vec<(CanonicalForm, CanonicalForm)> {
    let mut forms = grid::all_forms(per_family);
    // Targets sharing a parameter with a udz source exercise boundary cases.
    for l in grid::udz_grid(per_family) {
        if let CanonicalForm::UnitDirectZero { lambda } = l {
            forms.push(CanonicalForm::DeltaTau { tau: lambda });
            forms.push(CanonicalForm::DeltaTau { tau: -lambda });
            forms.push(CanonicalForm::pair_of(lambda, -lambda));
            forms.push(CanonicalForm::pair_of(lambda, crate::canonical::Unimodular::cis(1.0)));
        }
    }
    let mut out = Vec::new();
    for a in &forms {
        for b in &forms {
            if a != b && reachable(&ArrowQuery::new(*a, *b)) {
                out.push((*a, *b));
            }
        }
    }
    out
}

pub fn run(exec: Execution) -> Vec<SuiteOutcome> {
    let forms = grid::all_forms(100);
    let pairs = pair_grid(8);
    let seeds: Vec<(CanonicalForm, u64)> =
        grid::all_forms(10).into_iter().flat_map(|f| (0..20).map(move |s| (f, s))).collect();
    let arrows = arrow_grid(6);
    vec![
        suite("codimension table", &forms, exec, |f| {
            let (got, want) = (codimension(f), expected_codimension(f));
            (got != want).then(|| format!("{f}: codim {got}, expected {want}"))
        }),
        suite("versal consistency", &forms, exec, |f| {
            let p = versal_profile(f);
            let lhs = 2 * p.star_count + p.eps_count;
            (lhs != codimension(f)).then(|| format!("{f}: 2*stars + eps = {lhs}"))
        }),
        suite("realize round trip", &forms, exec, |f| match classify(&f.realize(), DEFAULT_TOL) {
            Ok(r) if r.form.approx_eq(f, 1e-12) => None,
            Ok(r) => Some(format!("{f}: classified as {}", r.form)),
            Err(e) => Some(format!("{f}: {e}")),
        }),
        suite("random congruence round trip", &seeds, exec, |(f, s)| {
            let a = random_congruence(f, *s, 20.0).ok()?.1;
            match classify(&a, DEFAULT_TOL) {
                Ok(r) if r.form.approx_eq(f, 1e-6) => None,
                Ok(r) => Some(format!("{f} seed {s}: classified as {}", r.form)),
                Err(e) => Some(format!("{f} seed {s}: {e}")),
            }
        }),
        suite("arrow witnesses", &arrows, exec, |(m, n)| {
            DEFAULT_REFINEMENT
                .iter()
                .find_map(|&d| witness(m, n, d, 0).err().map(|e| format!("{m} -> {n} at {d:e}: {e}")))
        }),
        suite("certificate completeness", &pairs, exec, |(m, n)| {
            let r = reachable(&ArrowQuery::new(*m, *n));
            match (r, no_arrow_certificate(m, n)) {
                (true, Err(_)) => None,
                (false, Ok(c)) if c.margin.0 > 0.0 => None,
                (_, res) => Some(format!("{m} -> {n}: reachable {r}, certificate {res:?}")),
            }
        }),
        suite("codimension monotonicity", &pairs, exec, |(m, n)| {
            (!codim_monotone_check(&ArrowQuery::new(*m, *n))).then(|| format!("{m} -> {n}"))
        }),
    ]
}
