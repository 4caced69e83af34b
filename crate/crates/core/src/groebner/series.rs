//! Exact graded series `N(q, t) / prod_d (1 - q^d)`.
//!
//! `N` is a Laurent polynomial in `q` and `t` with integer coefficients; the
//! denominator is a multiset of positive exponents `d`. Equality is decided by
//! cross-multiplying onto a common denominator, so two series are equal iff
//! they are equal as rational functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in `q` and `t`, keyed by `(q exponent, t exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0, 0)
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: i64, a: i64, b: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(a, b, BigInt::from(c));
        p
    }

    /// `1 - q^d`.
    pub fn one_minus_q(d: i64) -> Self {
        &LaurentPoly::one() - &LaurentPoly::monomial(1, d, 0)
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn coefficient(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn shift(&self, a: i64, b: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), d) in &self.terms {
            out.add_term(a, b, d * c);
        }
        out
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.keys().all(|&(_, b)| b == 0)
    }

    /// Exact division by `1 - q^d`, if it divides.
    pub fn div_one_minus_q(&self, d: i64) -> Option<LaurentPoly> {
        // N = (1 - q^d) Q  =>  Q_a = N_a + Q_{a-d}, slice by slice in t.
        let mut by_t: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            by_t.entry(b).or_default().insert(a, c.clone());
        }
        let mut out = LaurentPoly::zero();
        for (b, slice) in by_t {
            let lo = *slice.keys().next().unwrap();
            let hi = *slice.keys().next_back().unwrap();
            let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
            for a in lo..=hi - d {
                let mut v = slice.get(&a).cloned().unwrap_or_default();
                if let Some(prev) = quot.get(&(a - d)) {
                    v += prev;
                }
                quot.insert(a, v);
            }
            // check the top d coefficients: N_a = Q_a - Q_{a-d} with Q_a = 0 there
            for a in (hi - d + 1).max(lo)..=hi {
                let prev = quot.get(&(a - d)).cloned().unwrap_or_default();
                let n = slice.get(&a).cloned().unwrap_or_default();
                if n != -prev {
                    return None;
                }
            }
            for (a, c) in quot {
                out.add_term(a, b, c);
            }
        }
        Some(out)
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|x, y| y.0 .1.cmp(&x.0 .1).then(x.0 .0.cmp(&y.0 .0)));
        for (n, (&(a, b), c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if a != 0 {
                factors.push(if a == 1 { "q".to_string() } else { format!("q^{a}") });
            }
            if b != 0 {
                factors.push(if b == 1 { "t".to_string() } else { format!("t^{b}") });
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term(a + x, b + y, c * d);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

/// `numerator / prod_{d in den} (1 - q^d)`.
#[derive(Clone, Debug)]
pub struct GradedSeries {
    num: LaurentPoly,
    den: Vec<u32>,
}

impl GradedSeries {
    pub fn new(num: LaurentPoly, mut den: Vec<u32>) -> Self {
        assert!(den.iter().all(|&d| d > 0), "denominator exponents must be positive");
        den.sort_unstable();
        GradedSeries { num, den }
    }

    pub fn zero() -> Self {
        GradedSeries::polynomial(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        GradedSeries::polynomial(LaurentPoly::one())
    }

    pub fn polynomial(num: LaurentPoly) -> Self {
        GradedSeries::new(num, Vec::new())
    }

    /// `c * q^a * t^b`.
    pub fn monomial(c: i64, a: i64, b: i64) -> Self {
        GradedSeries::polynomial(LaurentPoly::monomial(c, a, b))
    }

    /// `1 / prod (1 - q^d)`.
    pub fn free(den: Vec<u32>) -> Self {
        GradedSeries::new(LaurentPoly::one(), den)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplication by `q^a t^b` (the grading shift `{a}` when `b = 0`).
    pub fn shift(&self, a: i64, b: i64) -> GradedSeries {
        GradedSeries {
            num: self.num.shift(a, b),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: i64) -> GradedSeries {
        GradedSeries {
            num: self.num.scale(&BigInt::from(c)),
            den: self.den.clone(),
        }
    }

    fn lift(&self, den: &[u32]) -> LaurentPoly {
        let mut missing = den.to_vec();
        for d in &self.den {
            let pos = missing.iter().position(|x| x == d).expect("common denominator");
            missing.remove(pos);
        }
        missing
            .into_iter()
            .fold(self.num.clone(), |acc, d| &acc * &LaurentPoly::one_minus_q(d as i64))
    }

    fn common_den(&self, other: &GradedSeries) -> Vec<u32> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for s in [&self.den, &other.den] {
            let mut local: BTreeMap<u32, usize> = BTreeMap::new();
            for &d in s {
                *local.entry(d).or_default() += 1;
            }
            for (d, n) in local {
                let e = counts.entry(d).or_default();
                *e = (*e).max(n);
            }
        }
        counts
            .into_iter()
            .flat_map(|(d, n)| std::iter::repeat(d).take(n))
            .collect()
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn normalized(&self) -> GradedSeries {
        if self.num.is_zero() {
            return GradedSeries::zero();
        }
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for &d in self.den.iter().rev() {
            match num.div_one_minus_q(d as i64) {
                Some(q) => num = q,
                None => den.push(d),
            }
        }
        GradedSeries::new(num, den)
    }

    /// Power-series coefficients up to `q^max_q`, keyed by `(q, t)`. For
    /// diagnostics; the series itself is never truncated.
    pub fn expand(&self, max_q: i64) -> BTreeMap<(i64, i64), BigInt> {
        let mut acc: BTreeMap<(i64, i64), BigInt> = self
            .num
            .terms()
            .filter(|&(a, _, _)| a <= max_q)
            .map(|(a, b, c)| ((a, b), c.clone()))
            .collect();
        for &d in &self.den {
            // multiply by 1/(1 - q^d) = sum_j q^{jd}
            let mut next: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
            for (&(a, b), c) in &acc {
                let mut e = a;
                while e <= max_q {
                    *next.entry((e, b)).or_default() += c;
                    e += d as i64;
                }
            }
            acc = next;
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    pub fn to_json(&self) -> Value {
        let num: Vec<Value> = self
            .num
            .terms()
            .map(|(a, b, c)| json!({"c": c.to_string(), "q": a, "t": b}))
            .collect();
        json!({"num": num, "den": self.den})
    }

    pub fn from_json(v: &Value) -> Result<GradedSeries> {
        let bad = |what: &str| Error::Parse(format!("series JSON: {what}"));
        let num = v
            .get("num")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"num\""))?;
        let den = v
            .get("den")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"den\""))?;
        let mut p = LaurentPoly::zero();
        for t in num {
            let c: BigInt = t
                .get("c")
                .and_then(Value::as_str)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad \"c\""))?;
            let a = t.get("q").and_then(Value::as_i64).ok_or_else(|| bad("bad \"q\""))?;
            let b = t.get("t").and_then(Value::as_i64).ok_or_else(|| bad("bad \"t\""))?;
            p.add_term(a, b, c);
        }
        let den = den
            .iter()
            .map(|d| {
                d.as_u64()
                    .and_then(|d| u32::try_from(d).ok())
                    .filter(|&d| d > 0)
                    .ok_or_else(|| bad("bad denominator exponent"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedSeries::new(p, den))
    }
}

impl PartialEq for GradedSeries {
    fn eq(&self, other: &Self) -> bool {
        let den = self.common_den(other);
        self.lift(&den) == other.lift(&den)
    }
}

impl Eq for GradedSeries {}

impl Add for &GradedSeries {
    type Output = GradedSeries;
    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        let den = self.common_den(rhs);
        GradedSeries::new(&self.lift(&den) + &rhs.lift(&den), den)
    }
}

impl Sub for &GradedSeries {
    type Output = GradedSeries;
    fn sub(self, rhs: &GradedSeries) -> GradedSeries {
        let den = self.common_den(rhs);
        GradedSeries::new(&self.lift(&den) - &rhs.lift(&den), den)
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;
    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        let mut den = self.den.clone();
        den.extend_from_slice(&rhs.den);
        GradedSeries::new(&self.num * &rhs.num, den)
    }
}

impl Neg for &GradedSeries {
    type Output = GradedSeries;
    fn neg(self) -> GradedSeries {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<GradedSeries> for GradedSeries {
            type Output = GradedSeries;
            fn $f(self, rhs: GradedSeries) -> GradedSeries {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&GradedSeries> for GradedSeries {
            type Output = GradedSeries;
            fn $f(self, rhs: &GradedSeries) -> GradedSeries {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for GradedSeries {
    fn sum<I: Iterator<Item = GradedSeries>>(iter: I) -> Self {
        iter.fold(GradedSeries::zero(), |acc, s| &acc + &s)
    }
}

/// Normalised human-readable form, e.g. `q^3/(1-q^2)^2`.
impl fmt::Display for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.normalized();
        let multi = s.num.terms.len() > 1;
        if s.den.is_empty() {
            return write!(f, "{}", s.num);
        }
        if multi {
            write!(f, "({})", s.num)?;
        } else {
            write!(f, "{}", s.num)?;
        }
        write!(f, "/")?;
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &d in &s.den {
            match groups.last_mut() {
                Some((e, n)) if *e == d => *n += 1,
                _ => groups.push((d, 1)),
            }
        }
        let product = groups.len() > 1;
        if product {
            write!(f, "(")?;
        }
        for (i, (d, n)) in groups.into_iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "(1-q^{d})")?;
            if n > 1 {
                write!(f, "^{n}")?;
            }
        }
        if product {
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equality_by_cross_multiplication() {
        // (1+q^2)/(1-q^4) == 1/(1-q^2)
        let a = GradedSeries::new(
            &LaurentPoly::one() + &LaurentPoly::monomial(1, 2, 0),
            vec![4],
        );
        let b = GradedSeries::free(vec![2]);
        assert_eq!(a, b);
        assert_ne!(a, GradedSeries::free(vec![4]));
        // (1-q^2) * 1/(1-q^2) == 1
        let c = &GradedSeries::polynomial(LaurentPoly::one_minus_q(2)) * &b;
        assert_eq!(c, GradedSeries::one());
    }

    #[test]
    fn arithmetic_and_display() {
        let r = GradedSeries::free(vec![2, 2]);
        assert_eq!(r.to_string(), "1/(1-q^2)^2");
        assert_eq!(r.shift(3, 0).to_string(), "q^3/(1-q^2)^2");
        let s = &r - &r.shift(3, -1);
        assert_eq!(s.to_string(), "(1 - q^3*t^-1)/(1-q^2)^2");
        assert_eq!(&s + &r.shift(3, -1), r);
        assert_eq!(GradedSeries::zero().to_string(), "0");
    }

    #[test]
    fn normalization_cancels_whole_factors() {
        let s = GradedSeries::new(LaurentPoly::one_minus_q(2), vec![2, 4]);
        let n = s.normalized();
        assert_eq!(n.denominator(), &[4]);
        assert_eq!(n.numerator(), &LaurentPoly::one());
        let t = GradedSeries::new(LaurentPoly::monomial(1, 2, 0), vec![2]);
        assert_eq!(t.normalized().denominator(), &[2]);
    }

    #[test]
    fn expansion() {
        let s = GradedSeries::free(vec![2, 2]);
        let e = s.expand(6);
        assert_eq!(e[&(0, 0)], BigInt::from(1));
        assert_eq!(e[&(2, 0)], BigInt::from(2));
        assert_eq!(e[&(6, 0)], BigInt::from(4));
    }

    #[test]
    fn json_round_trip() {
        let s = GradedSeries::new(
            &LaurentPoly::monomial(3, 2, -1) - &LaurentPoly::monomial(1, 0, 0),
            vec![4, 2, 2],
        );
        let v = s.to_json();
        assert_eq!(v["den"], json!([2, 2, 4]));
        let back = GradedSeries::from_json(&v).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.numerator(), s.numerator());
    }
}
