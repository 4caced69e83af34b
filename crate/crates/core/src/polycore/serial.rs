//! Text and JSON forms of polynomials.
//!
//! Text: terms in decreasing monomial order joined by `" + "`, e.g.
//! `x2 + -1*x1*y1 + 1/2*y1^2`. A unit coefficient is omitted, `-1` is not.
//! JSON: `[{"c": "num/den", "m": {"x1": 1, ...}}, ...]` in the same order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use super::{Monomial, Polynomial, Rational, VariableId};
use crate::error::{Error, Result};

fn rational_text(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d <= BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", rational_text(c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational_text(c))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Polynomial::zero());
        }
        let mut p = Polynomial::zero();
        for term in s.split(" + ") {
            let mut coeff = Rational::one();
            let mut mono = Monomial::one();
            for (n, factor) in term.split('*').enumerate() {
                let first = factor.bytes().next();
                if n == 0 && matches!(first, Some(b'-' | b'0'..=b'9')) {
                    coeff = parse_rational(factor)?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((v, e)) => (
                        v,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let v: VariableId = name.parse()?;
                mono = mono.mul(&Monomial::power(v, exp));
            }
            p.add_term(mono, coeff);
        }
        Ok(p)
    }
}

impl Polynomial {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .rev()
                .map(|(m, c)| {
                    let mut exps = Map::new();
                    for &(v, e) in m.factors() {
                        exps.insert(v.to_string(), json!(e));
                    }
                    json!({ "c": format!("{}/{}", c.numer(), c.denom()), "m": exps })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Polynomial> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let terms = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut p = Polynomial::zero();
        for t in terms {
            let c = t
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing \"c\""))?;
            let m = t
                .get("m")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("missing \"m\""))?;
            let mut mono = Monomial::one();
            for (name, e) in m {
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| bad("bad exponent"))?;
                mono = mono.mul(&Monomial::power(name.parse()?, e));
            }
            p.add_term(mono, parse_rational(c)?);
        }
        Ok(p)
    }
}
