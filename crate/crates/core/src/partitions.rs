//! Integer partitions and the `k x l` box.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (trailing zeros dropped).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.to_vec()));
        }
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `n` (`n` must be at least the length).
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.parts.len(), "{self} has more than {n} parts");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Multiindex form used by the Schur constructors.
    pub fn to_multiindex(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }

    pub fn fits_box(&self, k: usize, l: usize) -> bool {
        self.parts.len() <= k && self.parts.first().is_none_or(|&p| p as usize <= l)
    }

    /// Transpose of the Young diagram: `mu_i = #{j : alpha_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `(l - alpha_k, ..., l - alpha_1)`, the complement inside the `k x l` box.
    pub fn complement(&self, k: usize, l: usize) -> Result<Partition> {
        if !self.fits_box(k, l) {
            return Err(Error::OutsideBox {
                parts: self.parts.clone(),
                k,
                l,
            });
        }
        let padded = self.padded(k);
        let parts: Vec<u32> = padded.iter().rev().map(|&a| l as u32 - a).collect();
        Partition::new(&parts)
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.parts.clone())
    }

    pub fn from_json(v: &Value) -> Result<Partition> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("partition JSON must be an array".into()))?;
        let parts = arr
            .iter()
            .map(|p| {
                p.as_u64()
                    .and_then(|p| u32::try_from(p).ok())
                    .ok_or_else(|| Error::Parse(format!("bad part {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition {s:?} must be parenthesised")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

/// All partitions with at most `k` parts, each at most `l`, ordered
/// lexicographically (increasing) on their zero-padded length-`k` tuples.
/// There are `C(k+l, k)` of them.
pub fn enumerate_box(k: usize, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill_box(k, l as u32, &mut current, &mut out);
    out.sort_by(|a, b| a.padded(k).cmp(&b.padded(k)));
    out
}

fn fill_box(k: usize, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if current.len() == k {
        out.push(Partition::new(current).expect("decreasing by construction"));
        return;
    }
    for p in 0..=max {
        current.push(p);
        fill_box(k, p, current, out);
        current.pop();
    }
}
