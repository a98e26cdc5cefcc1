//! Complex literals, canonical-form text and matrix input syntax.
//!
//! Complex literals are `a`, `bi`, `a+bi`, `a-bi`, with `i`, `-i` and `a+i`
//! accepted as shorthands. Reals use Rust's decimal float syntax; printed
//! values are the shortest representation that parses back to the same bits.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde_json::Value;

use super::{CanonicalForm, SubUnit, Unimodular};
use crate::error::{Error, Result};
use crate::linalg::{c, Mat2};

/// Modulus slack accepted when reading unimodular parameters from text, so
/// that rounded literals such as `0.7071+0.7071i` are usable.
const TEXT_UNIT_TOL: f64 = 1e-3;

fn format_real(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    let a = x.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn format_complex(z: Complex64) -> String {
    let (re, im) = (z.re, z.im);
    match (re == 0.0, im == 0.0) {
        (_, true) => format_real(re),
        (true, false) => format!("{}i", format_real(im)),
        (false, false) => {
            let sign = if im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", format_real(re), format_real(im.abs()))
        }
    }
}

fn parse_real(s: &str, whole: &str) -> Result<f64> {
    let ok = !s.is_empty()
        && s.chars().all(|ch| ch.is_ascii_digit() || matches!(ch, '.' | 'e' | 'E' | '+' | '-'));
    let x: f64 = if ok { s.parse().ok() } else { None }
        .ok_or_else(|| Error::Parse(format!("bad complex literal `{whole}`")))?;
    if !x.is_finite() {
        return Err(Error::Parse(format!("non-finite value in `{whole}`")));
    }
    Ok(x)
}

/// Coefficient of `i`: empty or a bare sign stands for one.
fn parse_imag(s: &str, whole: &str) -> Result<f64> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(s, whole),
    }
}

pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        return Ok(c(parse_real(&s, text)?, 0.0));
    };
    // The split point is the last sign that does not belong to an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(c(parse_real(&body[..k], text)?, parse_imag(&body[k..], text)?)),
        None => Ok(c(0.0, parse_imag(body, text)?)),
    }
}

pub fn format_matrix(a: &Mat2) -> String {
    let m = a.rows();
    format!(
        "{},{};{},{}",
        format_complex(m[0][0]),
        format_complex(m[0][1]),
        format_complex(m[1][0]),
        format_complex(m[1][1])
    )
}

/// Reads `a11,a12;a21,a22` or `{"m":[[a11,a12],[a21,a22]]}`; JSON entries may
/// be complex-literal strings or plain numbers.
pub fn parse_matrix(text: &str) -> Result<Mat2> {
    let t = text.trim();
    let rows: Vec<Vec<Complex64>> = if t.starts_with('{') {
        parse_json_rows(t)?
    } else {
        t.split(';')
            .map(|row| row.split(',').map(parse_complex).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?
    };
    if rows.len() != 2 || rows.iter().any(|r| r.len() != 2) {
        return Err(Error::Parse(format!("expected a 2x2 matrix, got `{t}`")));
    }
    Mat2::from_rows([[rows[0][0], rows[0][1]], [rows[1][0], rows[1][1]]])
        .map_err(|e| Error::Parse(e.to_string()))
}

fn parse_json_rows(t: &str) -> Result<Vec<Vec<Complex64>>> {
    let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
    let rows = v
        .get("m")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("expected an object with an array field `m`".into()))?;
    rows.iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| Error::Parse("rows must be arrays".into()))?;
            row.iter()
                .map(|e| match e {
                    Value::String(s) => parse_complex(s),
                    Value::Number(n) => n
                        .as_f64()
                        .map(|x| c(x, 0.0))
                        .ok_or_else(|| Error::Parse(format!("bad number {n}"))),
                    other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CanonicalForm::Zero => f.write_str("zero"),
            CanonicalForm::UnitDirectZero { lambda } => write!(f, "udz({})", format_complex(lambda.value())),
            CanonicalForm::UnitPair { mu, nu } => {
                write!(f, "pair({},{})", format_complex(mu.value()), format_complex(nu.value()))
            }
            CanonicalForm::Hyperbolic { sigma } => write!(f, "hyp({})", format_complex(sigma.value())),
            CanonicalForm::DeltaTau { tau } => write!(f, "delta({})", format_complex(tau.value())),
        }
    }
}

fn unit(s: &str) -> Result<Unimodular> {
    Unimodular::with_tolerance(parse_complex(s)?, TEXT_UNIT_TOL).map_err(|e| Error::Parse(e.to_string()))
}

impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
        if s == "zero" {
            return Ok(CanonicalForm::Zero);
        }
        let bad = || Error::Parse(format!("unknown canonical form `{text}`"));
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        match name {
            "udz" => Ok(CanonicalForm::UnitDirectZero { lambda: unit(args)? }),
            "delta" => Ok(CanonicalForm::DeltaTau { tau: unit(args)? }),
            "hyp" => {
                let sigma = SubUnit::new(parse_complex(args)?).map_err(|e| Error::Parse(e.to_string()))?;
                Ok(CanonicalForm::Hyperbolic { sigma })
            }
            "pair" => {
                let (a, b) = args.split_once(',').ok_or_else(bad)?;
                Ok(CanonicalForm::pair_of(unit(a)?, unit(b)?))
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let cases = [
            ("1", c(1., 0.)),
            ("-2.5", c(-2.5, 0.)),
            ("1i", c(0., 1.)),
            ("i", c(0., 1.)),
            ("-i", c(0., -1.)),
            ("0.5-0.25i", c(0.5, -0.25)),
            ("1e-3+2E+2i", c(1e-3, 200.)),
            ("-1e-3-i", c(-1e-3, -1.)),
            (" 3 + 4i ", c(3., 4.)),
        ];
        for (s, z) in cases {
            assert_eq!(parse_complex(s).unwrap(), z, "{s}");
        }
        for bad in ["", "inf", "nan", "1+", "1ii", "abc", "1e999", "1+2j"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn complex_round_trip_is_bit_exact() {
        let samples = [
            c(0.1, -0.2),
            c(1.0 / 3.0, 2.0f64.sqrt()),
            c(-1e-300, 5e17),
            c(0.0, -7.25e-9),
            c(-0.0, 0.0),
            c(f64::MAX, f64::MIN_POSITIVE),
        ];
        for z in samples {
            let back = parse_complex(&format_complex(z)).unwrap();
            assert_eq!(back.re.to_bits(), (z.re + 0.0).to_bits());
            assert_eq!(back.im.to_bits(), (z.im + 0.0).to_bits());
        }
        assert_eq!(format_complex(c(-0.0, -0.0)), "0");
        assert_eq!(format_complex(c(0.0, -1.0)), "-1i");
    }

    #[test]
    fn form_text() {
        let cases = ["zero", "udz(1)", "pair(1,-1)", "hyp(0)", "delta(1)", "hyp(0.3i)", "pair(1i,-1i)"];
        for s in cases {
            let f: CanonicalForm = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        let f: CanonicalForm = "delta(0.7071+0.7071i)".parse().unwrap();
        assert!(f.approx_eq(&CanonicalForm::delta(Complex64::cis(std::f64::consts::FRAC_PI_4)).unwrap(), 1e-4));
        let p: CanonicalForm = "pair(-1,1)".parse().unwrap();
        assert_eq!(p.to_string(), "pair(1,-1)");
        for bad in ["", "udz(2)", "hyp(1)", "pair(1)", "delta", "foo(1)", "udz(1"] {
            assert!(bad.parse::<CanonicalForm>().is_err(), "{bad}");
        }
    }

    #[test]
    fn matrix_syntax() {
        let a = parse_matrix("0,1;1,1i").unwrap();
        assert_eq!(a, CanonicalForm::delta(c(1., 0.)).unwrap().realize());
        let j = parse_matrix(r#"{"m":[["0","1"],[1,"1i"]]}"#).unwrap();
        assert_eq!(j, a);
        assert_eq!(parse_matrix(&format_matrix(&a)).unwrap(), a);
        for bad in ["0,1;1", "0,1,2;1,1", "1;2", r#"{"x":1}"#, "0,1;1,nan"] {
            assert!(parse_matrix(bad).is_err(), "{bad}");
        }
    }
}
