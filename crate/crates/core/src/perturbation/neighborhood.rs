use serde::Serialize;

use super::certificate::hausdorff;
use crate::canonical::{classify, CanonicalForm, Family, PairKind, DEFAULT_TOL};
use crate::closure::cone_distance;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::linalg::{c, cosquare, eigenvalues2, Mat2, Stream};
use crate::report::Real;

pub const MAX_SAMPLES: u64 = 10_000_000;
const CHUNK: u64 = 4096;

/// Counts per family, plus samples whose classification was refused.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Histogram {
    pub zero: u64,
    pub udz: u64,
    pub pair: u64,
    pub hyp: u64,
    pub delta: u64,
    pub boundary: u64,
}

impl Histogram {
    pub fn get(&self, family: Family) -> u64 {
        match family {
            Family::Zero => self.zero,
            Family::UnitDirectZero => self.udz,
            Family::UnitPair => self.pair,
            Family::Hyperbolic => self.hyp,
            Family::DeltaTau => self.delta,
        }
    }

    fn bump(&mut self, family: Family) {
        match family {
            Family::Zero => self.zero += 1,
            Family::UnitDirectZero => self.udz += 1,
            Family::UnitPair => self.pair += 1,
            Family::Hyperbolic => self.hyp += 1,
            Family::DeltaTau => self.delta += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.zero + self.udz + self.pair + self.hyp + self.delta + self.boundary
    }
}

/// Statistics of [`compatibility_distance`] over the samples of one family.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ParamSummary {
    pub family: Family,
    pub count: u64,
    pub min: Real,
    pub max: Real,
    pub mean: Real,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NeighborhoodReport {
    pub source: String,
    pub delta: Real,
    pub samples: u64,
    pub seed: u64,
    pub tol: Real,
    pub histogram: Histogram,
    pub summaries: Vec<ParamSummary>,
    /// Largest Hausdorff distance between the cosquare spectra of a
    /// nonsingular sample and of the source; absent for singular sources.
    pub max_spectrum_drift: Option<Real>,
}

/// How far `sample` is from the set of classes reachable from `source`
/// within its own family: zero when `source ⪯ sample` holds for its
/// parameters, `None` when no member of the family is reachable.
pub fn compatibility_distance(source: &CanonicalForm, sample: &CanonicalForm) -> Option<f64> {
    use CanonicalForm::*;
    if let Some(d) = source.param_distance(sample) {
        return Some(d);
    }
    match (*source, *sample) {
        (Zero, _) => Some(0.0),
        (UnitDirectZero { .. }, Hyperbolic { .. }) => Some(0.0),
        (UnitDirectZero { lambda }, UnitPair { mu, nu }) => Some(cone_distance(lambda, mu, nu)),
        (UnitDirectZero { lambda }, DeltaTau { tau }) => {
            Some((-(lambda.value() * tau.value().conj()).im).max(0.0))
        }
        (UnitPair { mu, .. }, DeltaTau { tau }) if source.pair_kind() == Some(PairKind::Antipodal) => {
            let (t, m) = (tau.value(), mu.value());
            Some((t - m).norm().min((t + m).norm()))
        }
        _ => None,
    }
}

#[derive(Clone, Copy)]
struct Acc {
    count: u64,
    min: f64,
    max: f64,
    sum: f64,
}

impl Default for Acc {
    fn default() -> Self {
        Acc { count: 0, min: f64::INFINITY, max: f64::NEG_INFINITY, sum: 0.0 }
    }
}

impl Acc {
    fn push(&mut self, x: f64) {
        self.count += 1;
        self.min = self.min.min(x);
        self.max = self.max.max(x);
        self.sum += x;
    }

    fn merge(&mut self, o: &Acc) {
        self.count += o.count;
        self.min = self.min.min(o.min);
        self.max = self.max.max(o.max);
        self.sum += o.sum;
    }
}

#[derive(Clone, Copy, Default)]
struct Partial {
    histogram: Histogram,
    params: [Acc; 5],
    drift: Option<f64>,
}

impl Partial {
    fn merge(&mut self, o: &Partial) {
        let h = &mut self.histogram;
        h.zero += o.histogram.zero;
        h.udz += o.histogram.udz;
        h.pair += o.histogram.pair;
        h.hyp += o.histogram.hyp;
        h.delta += o.histogram.delta;
        h.boundary += o.histogram.boundary;
        for (a, b) in self.params.iter_mut().zip(&o.params) {
            a.merge(b);
        }
        self.drift = match (self.drift, o.drift) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
    }
}

/// A point uniform in the Frobenius ball of radius `delta`, by rejection
/// from the enclosing cube.
pub fn ball_sample(rng: &mut Stream, delta: f64) -> Mat2 {
    loop {
        let v: [f64; 8] = std::array::from_fn(|_| rng.uniform(-1.0, 1.0));
        if v.iter().map(|x| x * x).sum::<f64>() <= 1.0 {
            let e = Mat2::raw([[c(v[0], v[1]), c(v[2], v[3])], [c(v[4], v[5]), c(v[6], v[7])]]);
            return e.scale_re(delta);
        }
    }
}

fn family_index(f: Family) -> usize {
    Family::ALL.iter().position(|&g| g == f).unwrap_or(0)
}

pub fn sample_neighborhood(source: &CanonicalForm, delta: f64, samples: u64, seed: u64) -> Result<NeighborhoodReport> {
    sample_neighborhood_with(source, delta, samples, seed, DEFAULT_TOL, Execution::default())
}

/// Classifies `realize(source) + E` for `samples` draws of `E`; sample `i`
/// uses the sub-stream `(seed, i)`, so the report does not depend on `exec`.
pub fn sample_neighborhood_with(
    source: &CanonicalForm,
    delta: f64,
    samples: u64,
    seed: u64,
    tol: f64,
    exec: Execution,
) -> Result<NeighborhoodReport> {
    if !(delta > 0.0 && delta <= 0.1) {
        return Err(Error::invalid(format!("delta must lie in (0, 0.1], got {delta}")));
    }
    if samples > MAX_SAMPLES {
        return Err(Error::invalid(format!("at most {MAX_SAMPLES} samples, got {samples}")));
    }
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::invalid(format!("tolerance must lie in (0, 1), got {tol}")));
    }
    let m = source.realize();
    let base_spectrum = cosquare(&m).ok().map(|k| {
        let (p, q) = eigenvalues2(&k);
        [p, q]
    });
    let chunks = samples.div_ceil(CHUNK) as usize;
    let partials = exec.map_indexed(chunks, |k| {
        let mut part = Partial::default();
        let start = k as u64 * CHUNK;
        for i in start..(start + CHUNK).min(samples) {
            let mut rng = Stream::substream(seed, i);
            let a = m + ball_sample(&mut rng, delta);
            match classify(&a, tol) {
                Ok(report) => {
                    let family = report.form.family();
                    part.histogram.bump(family);
                    if let Some(d) = compatibility_distance(source, &report.form) {
                        part.params[family_index(family)].push(d);
                    }
                }
                Err(_) => part.histogram.boundary += 1,
            }
            if let (Some(base), Ok(k)) = (base_spectrum, cosquare(&a)) {
                let (p, q) = eigenvalues2(&k);
                let drift = hausdorff(&base, &[p, q]);
                part.drift = Some(part.drift.map_or(drift, |d: f64| d.max(drift)));
            }
        }
        part
    });
    let mut total = Partial::default();
    for p in &partials {
        total.merge(p);
    }
    let summaries = Family::ALL
        .iter()
        .zip(&total.params)
        .filter(|(_, acc)| acc.count > 0)
        .map(|(&family, acc)| ParamSummary {
            family,
            count: acc.count,
            min: Real(acc.min),
            max: Real(acc.max),
            mean: Real(acc.sum / acc.count as f64),
        })
        .collect();
    Ok(NeighborhoodReport {
        source: source.to_string(),
        delta: Real(delta),
        samples,
        seed,
        tol: Real(tol),
        histogram: total.histogram,
        summaries,
        max_spectrum_drift: total.drift.map(Real),
    })
}
