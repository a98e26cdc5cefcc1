//! Stable JSON encoding of reals.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// A real serialized with 17 significant digits in exponent notation;
/// non-finite values become `null`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Real(pub f64);

impl Real {
    pub fn text(self) -> Option<String> {
        let x = if self.0 == 0.0 { 0.0 } else { self.0 };
        // Explicit exponent sign, as JSON number parsers print it back.
        x.is_finite().then(|| format!("{x:.16e}").replacen("e", "e+", 1).replacen("e+-", "e-", 1))
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.text() {
            Some(t) => RawValue::from_string(t).map_err(serde::ser::Error::custom)?.serialize(s),
            None => s.serialize_none(),
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        let s = serde_json::to_string(&[Real(0.1), Real(-2.5e-300), Real(f64::NAN), Real(-0.0)]).unwrap();
        assert_eq!(
            s,
            "[1.0000000000000001e-1,-2.5000000000000000e-300,null,0.0000000000000000e+0]"
        );
        let back: Vec<Option<f64>> = serde_json::from_str(&s).unwrap();
        assert_eq!(back[0], Some(0.1));
    }
}
