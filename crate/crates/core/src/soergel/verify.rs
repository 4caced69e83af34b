//! The bimodule criterion `(y_j - y'_j) f ∈ I` for every `j`, together with
//! the non-vanishing and the degree of `f`.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{delta_formula, y_difference, SoergelContext};
use crate::error::Result;
use crate::polycore::Grading;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleReport {
    pub k: usize,
    pub l: usize,
    pub delta_terms: usize,
    /// Weighted degree of `f`; `None` if `f` is the zero polynomial.
    pub degree: Option<u64>,
    pub homogeneous: bool,
    /// `membership[j-1]`: `(y_j - y'_j) f ∈ I`.
    pub membership: Vec<bool>,
    /// `f` is nonzero in `P`.
    pub f_nonzero: bool,
}

impl BimoduleReport {
    pub fn expected_degree(&self) -> u64 {
        2 * (self.k * self.l) as u64
    }

    pub fn passed(&self) -> bool {
        self.membership.iter().all(|&b| b)
            && self.f_nonzero
            && self.homogeneous
            && self.degree == Some(self.expected_degree())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "l": self.l,
            "delta_terms": self.delta_terms,
            "degree": self.degree,
            "homogeneous": self.homogeneous,
            "membership": self.membership,
            "f_nonzero": self.f_nonzero,
        })
    }
}

pub fn verify_bimodule(ctx: &SoergelContext) -> Result<BimoduleReport> {
    let delta = delta_formula(ctx.k(), ctx.l());
    let f = delta.to_p();
    let g = Grading::standard();
    let gb = ctx.gb_i();
    let membership = (1..=ctx.l())
        .into_par_iter()
        .map(|j| gb.ideal_member(&(&y_difference(j) * &f)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BimoduleReport {
        k: ctx.k(),
        l: ctx.l(),
        delta_terms: delta.len(),
        degree: f.weighted_degree(&g),
        homogeneous: f.is_homogeneous(&g),
        membership,
        f_nonzero: !gb.normal_form(&f)?.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for (k, l) in [(1, 1), (2, 1), (1, 2)] {
            let r = verify_bimodule(&SoergelContext::new(k, l).unwrap()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.degree, Some(2 * (k * l) as u64));
        }
    }
}
