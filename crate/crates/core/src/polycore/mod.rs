//! Exact sparse multivariate polynomials over the rationals.
//!
//! Variables come in named families (`x`, `y`, their primed copies `xp`, `yp`,
//! the symmetric-function variables `z`, and auxiliary elimination variables
//! `w`). Every family carries a fixed even weight, which defines the `q`-grading
//! used throughout the crate.

mod matrix;
mod monomial;
mod polynomial;
mod random;
mod serial;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use matrix::{det_sum_expansion, det_sum_summands, PolyMatrix};
pub use monomial::Monomial;
pub use polynomial::{Polynomial, Rational};
pub use random::{random_matrix, random_polynomial, RandomShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    X,
    Y,
    XP,
    YP,
    Z,
    Aux,
}

impl Family {
    pub fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::XP => "xp",
            Family::YP => "yp",
            Family::Z => "z",
            Family::Aux => "w",
        }
    }

    /// The family obtained by adding (or removing) a prime.
    pub fn primed(self) -> Family {
        match self {
            Family::X => Family::XP,
            Family::Y => Family::YP,
            Family::XP => Family::X,
            Family::YP => Family::Y,
            other => other,
        }
    }
}

/// A variable: a family together with a positive index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableId {
    pub family: Family,
    pub index: u32,
}

impl VariableId {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        VariableId { family, index }
    }

    pub fn x(i: u32) -> Self {
        Self::new(Family::X, i)
    }

    pub fn y(i: u32) -> Self {
        Self::new(Family::Y, i)
    }

    pub fn xp(i: u32) -> Self {
        Self::new(Family::XP, i)
    }

    pub fn yp(i: u32) -> Self {
        Self::new(Family::YP, i)
    }

    pub fn z(i: u32) -> Self {
        Self::new(Family::Z, i)
    }

    pub fn aux(i: u32) -> Self {
        Self::new(Family::Aux, i)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.index)
    }
}

impl FromStr for VariableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // longest prefixes first so that "xp3" is not read as "x" + "p3"
        let families = [
            Family::XP,
            Family::YP,
            Family::X,
            Family::Y,
            Family::Z,
            Family::Aux,
        ];
        for family in families {
            if let Some(rest) = s.strip_prefix(family.prefix()) {
                if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                    continue;
                }
                let index: u32 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable index in {s:?}")))?;
                if index == 0 || rest.starts_with('0') {
                    return Err(Error::Parse(format!("bad variable index in {s:?}")));
                }
                return Ok(VariableId { family, index });
            }
        }
        Err(Error::Parse(format!("unknown variable {s:?}")))
    }
}

/// Weight function on variables. Every weight is a nonnegative even integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Grading {
    overrides: BTreeMap<VariableId, u32>,
}

impl Grading {
    /// `deg z_i = 2`, `deg x_i = deg y_i = 2i` (primed alike), auxiliaries weight 0.
    pub fn standard() -> Self {
        Grading::default()
    }

    pub fn with_weight(mut self, v: VariableId, weight: u32) -> Self {
        self.overrides.insert(v, weight);
        self
    }

    pub fn weight(&self, v: VariableId) -> u32 {
        if let Some(&w) = self.overrides.get(&v) {
            return w;
        }
        standard_weight(v)
    }
}

pub(crate) fn standard_weight(v: VariableId) -> u32 {
    match v.family {
        Family::Z => 2,
        Family::X | Family::Y | Family::XP | Family::YP => 2 * v.index,
        Family::Aux => 0,
    }
}

/// An ordered list of variables: the ambient polynomial ring of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Vec<VariableId>,
}

impl PolyRing {
    pub fn new(mut vars: Vec<VariableId>) -> Self {
        vars.sort();
        vars.dedup();
        PolyRing { vars }
    }

    /// `C[x_1..x_k, y_1..y_l]`, the ring `R'`.
    pub fn unprimed(k: usize, l: usize) -> Self {
        let mut vars: Vec<_> = (1..=k as u32).map(VariableId::x).collect();
        vars.extend((1..=l as u32).map(VariableId::y));
        PolyRing::new(vars)
    }

    /// `C[x, y, x', y']`, the ambient ring of the presentation `P = R/I`.
    pub fn doubled(k: usize, l: usize) -> Self {
        let mut vars = PolyRing::unprimed(k, l).vars;
        vars.extend((1..=k as u32).map(VariableId::xp));
        vars.extend((1..=l as u32).map(VariableId::yp));
        PolyRing::new(vars)
    }

    pub fn z(n: usize) -> Self {
        PolyRing::new((1..=n as u32).map(VariableId::z).collect())
    }

    pub fn vars(&self) -> &[VariableId] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn position(&self, v: VariableId) -> Option<usize> {
        self.vars.binary_search(&v).ok()
    }

    pub fn contains(&self, v: VariableId) -> bool {
        self.position(v).is_some()
    }

    /// The ring with one extra auxiliary variable, returned alongside it.
    pub fn with_fresh_aux(&self) -> (PolyRing, VariableId) {
        let next = self
            .vars
            .iter()
            .filter(|v| v.family == Family::Aux)
            .map(|v| v.index)
            .max()
            .unwrap_or(0)
            + 1;
        let w = VariableId::aux(next);
        let mut vars = self.vars.clone();
        vars.push(w);
        (PolyRing::new(vars), w)
    }

    pub fn without(&self, drop: &[VariableId]) -> PolyRing {
        PolyRing::new(
            self.vars
                .iter()
                .copied()
                .filter(|v| !drop.contains(v))
                .collect(),
        )
    }
}
