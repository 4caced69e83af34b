//! The bimodule `B = R_{k,l} (x)_{k+l} R_{k,l}` in its presentation
//! `P = C[x, y, x', y'] / I`, the degree-`2kl` map `Delta`, the matrices whose
//! determinant realises it, and Koszul-complex homology computed directly.

mod koszul;
mod matrices;
mod verify;

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, MonomialOrder};
use crate::partitions::{enumerate_box, Partition};
use crate::polycore::{Family, Grading, PolyRing, Polynomial, VariableId};
use crate::schur::schur_giambelli;

pub use koszul::{hochschild_direct, koszul_step, y_complex, DirectHomology, KoszulStep};
pub use matrices::{
    delta_determinant, matrix_m, matrix_mprime, matrix_s, minor_ideal_ij, minor_ideal_ij_of,
    DeterminantReport,
};
pub use verify::{verify_bimodule, BimoduleReport};

/// Largest `k + l` handled without an explicit override.
pub const DEFAULT_MAX_KL: usize = 5;

/// Variables of `P` allowed without an override: `2 * DEFAULT_MAX_KL`.
pub const DEFAULT_MAX_VARS: usize = 2 * DEFAULT_MAX_KL;

/// The variable budget: `SOERGEL_MAX_VARS` if set to a positive integer,
/// otherwise [`DEFAULT_MAX_VARS`].
pub fn max_vars() -> usize {
    std::env::var("SOERGEL_MAX_VARS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_MAX_VARS)
}

/// Refuses work on `needed` variables above `limit` unless forced.
pub fn check_budget(needed: usize, limit: usize, force: bool) -> Result<()> {
    if needed > limit && !force {
        return Err(Error::ResourceLimit { needed, limit });
    }
    Ok(())
}

/// `sum_{j=0}^{i} a_j b_{i-j}` with `a_0 = b_0 = 1` and out-of-range indices zero.
fn sigma(i: usize, a: Family, ka: usize, b: Family, kb: usize) -> Polynomial {
    (0..=i)
        .filter(|&j| j <= ka && i - j <= kb)
        .map(|j| {
            let left = if j == 0 { Polynomial::one() } else { Polynomial::var(VariableId::new(a, j as u32)) };
            let right = if i == j {
                Polynomial::one()
            } else {
                Polynomial::var(VariableId::new(b, (i - j) as u32))
            };
            &left * &right
        })
        .sum()
}

/// The `k + l` generators `Sigma^{x,y}_i - Sigma^{x',y'}_i` of `I`.
pub fn ideal_i_generators(k: usize, l: usize) -> Vec<Polynomial> {
    (1..=k + l)
        .map(|i| sigma(i, Family::X, k, Family::Y, l) - sigma(i, Family::XP, k, Family::YP, l))
        .collect()
}

/// `y_j - y'_j`.
pub fn y_difference(j: usize) -> Polynomial {
    Polynomial::var(VariableId::y(j as u32)) - Polynomial::var(VariableId::yp(j as u32))
}

/// Adds primes to unprimed variables (`x -> x'`, `y -> y'`).
pub fn prime(p: &Polynomial) -> Polynomial {
    p.rename(|v| match v.family {
        Family::X | Family::Y => VariableId::new(v.family.primed(), v.index),
        _ => v,
    })
}

/// The projection `P -> R'`: `x' -> x`, `y' -> y`.
pub fn unprime(p: &Polynomial) -> Polynomial {
    p.rename(|v| match v.family {
        Family::XP | Family::YP => VariableId::new(v.family.primed(), v.index),
        _ => v,
    })
}

/// Exchanges the roles of `x` and `y` (and of `x'` and `y'`).
pub fn swap_families(p: &Polynomial) -> Polynomial {
    p.rename(|v| {
        let family = match v.family {
            Family::X => Family::Y,
            Family::Y => Family::X,
            Family::XP => Family::YP,
            Family::YP => Family::XP,
            f => f,
        };
        VariableId::new(family, v.index)
    })
}

/// The ring `R'` and the data attached to `B` for one `(k, l)`.
#[derive(Clone, Debug)]
pub struct SoergelContext {
    k: usize,
    l: usize,
    ring: PolyRing,
    gb_i: GroebnerBasis,
}

impl SoergelContext {
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidShape { k, l });
        }
        let ring = PolyRing::doubled(k, l);
        let gb_i = GroebnerBasis::new(&ring, &ideal_i_generators(k, l), &MonomialOrder::standard())?;
        Ok(SoergelContext { k, l, ring, gb_i })
    }

    /// As [`SoergelContext::new`], refusing more than `max_vars` variables in `P`
    /// unless `force` is set.
    pub fn with_limit(k: usize, l: usize, max_vars: usize, force: bool) -> Result<Self> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidShape { k, l });
        }
        check_budget(2 * (k + l), max_vars, force)?;
        SoergelContext::new(k, l)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `C[x, y, x', y']`.
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// `C[x, y]`, the ring `R'`.
    pub fn rprime(&self) -> PolyRing {
        PolyRing::unprimed(self.k, self.l)
    }

    pub fn gb_i(&self) -> &GroebnerBasis {
        &self.gb_i
    }

    /// `f = to_P(Delta(1))`.
    pub fn f(&self) -> Polynomial {
        delta_formula(self.k, self.l).to_p()
    }

    /// Gröbner basis of `I + <y_1 - y'_1, ..., y_t - y'_t>`, presenting `P_t`.
    pub fn gb_p_t(&self, t: usize) -> Result<GroebnerBasis> {
        if t > self.l {
            return Err(Error::IndexOutOfRange {
                index: t,
                lo: 0,
                hi: self.l,
            });
        }
        let extra: Vec<Polynomial> = (1..=t).map(y_difference).collect();
        self.gb_i.with_generators(&extra)
    }

    /// Hilbert series of `P_t` under the standard grading.
    pub fn qdim_p_t(&self, t: usize) -> Result<crate::groebner::GradedSeries> {
        self.gb_p_t(t)?.hilbert_series(&Grading::standard())
    }
}

/// One summand `sign * left (x) right` of a tensor expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub alpha: Partition,
    pub sign: i8,
    pub left: Polynomial,
    pub right: Polynomial,
}

/// A formal sum of elementary tensors over `R_{k,l}`, both factors in `x, y`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorExpr {
    pub terms: Vec<TensorTerm>,
}

impl TensorExpr {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum sign * left * prime(right)`, the image in `P`.
    pub fn to_p(&self) -> Polynomial {
        self.terms
            .iter()
            .map(|t| {
                let p = &t.left * &prime(&t.right);
                if t.sign < 0 {
                    -p
                } else {
                    p
                }
            })
            .sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|t| {
                    json!({
                        "alpha": t.alpha.to_json(),
                        "sign": t.sign,
                        "left": t.left.to_json(),
                        "right": t.right.to_json(),
                    })
                })
                .collect(),
        )
    }
}

fn factor(p: &Polynomial) -> String {
    if p.len() > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.sign < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}⊗{}", factor(&t.left), factor(&t.right))?;
        }
        Ok(())
    }
}

/// `Delta(1) = sum_alpha (-1)^{|alpha|} pi_alpha (x) pi'_{conj(alpha*)}` over the
/// `k x l` box, in box-enumeration order.
pub fn delta_formula(k: usize, l: usize) -> TensorExpr {
    let terms = enumerate_box(k, l)
        .into_iter()
        .map(|alpha| {
            let dual = alpha
                .complement(k, l)
                .expect("enumerated partitions fit the box")
                .conjugate();
            TensorTerm {
                sign: if alpha.weight() % 2 == 0 { 1 } else { -1 },
                left: schur_giambelli(&alpha.to_multiindex(), k, Family::X),
                right: schur_giambelli(&dual.to_multiindex(), l, Family::Y),
                alpha,
            }
        })
        .collect();
    TensorExpr { terms }
}
