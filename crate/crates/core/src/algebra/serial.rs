//! JSON forms: polynomials as arrays of decimal coefficient strings, low to high.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::Value;

use super::poly::{Poly, PolyRing};
use super::ring::{Integers, Rationals};
use crate::error::{Error, Result};

pub fn rational_to_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(BigInt::from_str(s.trim()).map_err(|_| bad())?)),
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
    }
}

pub fn poly_to_json<E: ToString>(p: &Poly<E>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn rational_poly_to_json(p: &Poly<BigRational>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(rational_to_string(c))).collect())
}

fn strings(v: &Value) -> Result<Vec<&str>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidInput("expected a JSON array".into()))?
        .iter()
        .map(|c| c.as_str().ok_or_else(|| Error::InvalidInput("expected decimal strings".into())))
        .collect()
}

pub fn int_poly_from_json(v: &Value) -> Result<Poly<BigInt>> {
    let coeffs = strings(v)?
        .into_iter()
        .map(|s| BigInt::from_str(s).map_err(|_| Error::InvalidInput(format!("not an integer: {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyRing::new(Integers).from_coeffs(coeffs))
}

pub fn rational_poly_from_json(v: &Value) -> Result<Poly<BigRational>> {
    let coeffs = strings(v)?.into_iter().map(parse_rational).collect::<Result<Vec<_>>>()?;
    Ok(PolyRing::new(Rationals).from_coeffs(coeffs))
}

/// Ascending text form, e.g. `4096 + 12288*a - 126976*a^3`.
pub fn rational_poly_to_text(p: &Poly<BigRational>, var: &str) -> String {
    let mut out = String::new();
    for (n, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match n {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{n}"),
        };
        let coef = rational_to_string(&a);
        match (n, coef.as_str()) {
            (0, _) => out.push_str(&coef),
            (_, "1") => out.push_str(&mono),
            _ => out.push_str(&format!("{coef}*{mono}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
