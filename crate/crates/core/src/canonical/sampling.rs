use super::CanonicalForm;
use crate::error::{Error, Result};
use crate::linalg::{c, star_congruence, Mat2, Stream};

/// A random member of the class of `form`: returns `(S, S* realize(form) S)`.
///
/// Entries of `S` are uniform on the square `[-1, 1] x [-1, 1]`; draws whose
/// 2-norm condition number exceeds `cond_max` are rejected.
pub fn random_congruence(form: &CanonicalForm, seed: u64, cond_max: f64) -> Result<(Mat2, Mat2)> {
    if cond_max.is_nan() || cond_max < 4.0 {
        return Err(Error::invalid(format!("cond_max must be at least 4, got {cond_max}")));
    }
    let mut rng = Stream::new(seed);
    let s = loop {
        let mut z = || c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        let s = Mat2::raw([[z(), z()], [z(), z()]]);
        if s.condition() <= cond_max {
            break s;
        }
    };
    Ok((s, star_congruence(&s, &form.realize())))
}
