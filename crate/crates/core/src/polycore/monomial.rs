use std::cmp::Ordering;
use std::fmt;

use super::{standard_weight, Grading, VariableId};

/// A power product, stored as `(variable, exponent)` pairs sorted by variable
/// with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VariableId) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    pub fn from_factors<I: IntoIterator<Item = (VariableId, u32)>>(factors: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in factors {
            m = m.mul(&Monomial::power(v, e));
        }
        m
    }

    pub fn power(v: VariableId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial {
                factors: vec![(v, e)],
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        match self.factors.binary_search_by(|(u, _)| u.cmp(&v)) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn variables(&self) -> impl Iterator<Item = VariableId> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    pub fn total_degree(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn weighted_degree(&self, g: &Grading) -> u64 {
        self.factors
            .iter()
            .map(|&(v, e)| e as u64 * g.weight(v) as u64)
            .sum()
    }

    fn standard_degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(v, e)| e as u64 * standard_weight(v) as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        let b = &other.factors;
        for &(v, e) in &self.factors {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            if j < b.len() && b[j].0 == v {
                let d = b[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < b.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = self.factors.clone();
        for &(v, e) in &other.factors {
            match out.binary_search_by(|(u, _)| u.cmp(&v)) {
                Ok(i) => out[i].1 = out[i].1.max(e),
                Err(i) => out.insert(i, (v, e)),
            }
        }
        Monomial { factors: out }
    }

    /// Applies `f` to every variable; factors that land on the same variable merge.
    pub fn rename(&self, f: impl Fn(VariableId) -> VariableId) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }
}

/// Weighted degree (standard grading), then total degree, then reverse
/// lexicographic with the variable order `x < y < xp < yp < z < w`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.standard_degree()
            .cmp(&other.standard_degree())
            .then_with(|| self.total_degree().cmp(&other.total_degree()))
            .then_with(|| revlex(&self.factors, &other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// The last variable where the exponents differ decides; the smaller exponent wins.
fn revlex(a: &[(VariableId, u32)], b: &[(VariableId, u32)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    while i > 0 || j > 0 {
        let va = (i > 0).then(|| a[i - 1]);
        let vb = (j > 0).then(|| b[j - 1]);
        let (ea, eb) = match (va, vb) {
            (Some((u, e)), Some((v, f))) => match u.cmp(&v) {
                Ordering::Equal => {
                    i -= 1;
                    j -= 1;
                    (e, f)
                }
                Ordering::Greater => {
                    i -= 1;
                    (e, 0)
                }
                Ordering::Less => {
                    j -= 1;
                    (0, f)
                }
            },
            (Some((_, e)), None) => {
                i -= 1;
                (e, 0)
            }
            (None, Some((_, f))) => {
                j -= 1;
                (0, f)
            }
            (None, None) => unreachable!(),
        };
        if ea != eb {
            return eb.cmp(&ea);
        }
    }
    Ordering::Equal
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (n, &(v, e)) in self.factors.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
