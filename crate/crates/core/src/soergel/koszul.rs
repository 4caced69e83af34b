//! Homology of `0 -> R/I --p--> R/I -> 0` and the iterated Koszul complex on
//! the differentials `y_j - y'_j`.

use super::{y_difference, SoergelContext};
use crate::error::{Error, Result};
use crate::groebner::{GradedSeries, GroebnerBasis};
use crate::polycore::{Grading, Polynomial};

/// Kernel and cokernel of multiplication by `p` on `R/I`, both unshifted.
#[derive(Clone, Debug)]
pub struct KoszulStep {
    /// `(I : p) / I`.
    pub kernel: GradedSeries,
    /// `R / <I, p>`.
    pub cokernel: GradedSeries,
    /// Basis of `(I : p)`.
    pub colon: GroebnerBasis,
    /// Basis of `<I, p>`.
    pub quotient: GroebnerBasis,
}

pub fn koszul_step(gb: &GroebnerBasis, p: &Polynomial) -> Result<KoszulStep> {
    let g = Grading::standard();
    if !p.is_homogeneous(&g) {
        return Err(Error::Inhomogeneous);
    }
    let full = gb.hilbert_series(&g)?;
    if gb.ideal_member(p)? {
        let colon = GroebnerBasis::new(gb.ring(), &[Polynomial::one()], gb.order())?;
        return Ok(KoszulStep {
            kernel: full.clone(),
            cokernel: full,
            colon,
            quotient: gb.clone(),
        });
    }
    let colon = gb.colon_ideal(p)?;
    let quotient = gb.with_generators(std::slice::from_ref(p))?;
    Ok(KoszulStep {
        kernel: &full - &colon.hilbert_series(&g)?,
        cokernel: quotient.hilbert_series(&g)?,
        colon,
        quotient,
    })
}

/// `qdim H_{-i}` for `i = 0..=l`, computed stage by stage.
#[derive(Clone, Debug)]
pub struct DirectHomology {
    pub series: Vec<GradedSeries>,
    /// Every kernel found at stage `j` is killed by `y_m - y'_m` for `m > j`,
    /// so the later differentials vanish on it.
    pub annihilated: bool,
}

/// Takes homology with respect to `y_1 - y'_1`, then `y_2 - y'_2`, and so on.
/// At stage `j` only `P_{j-1}` carries a nonzero differential; its kernel
/// enters `H_{-1}` shifted by `q^{2j-1}`, and each `H_{-i}` picks up a shifted
/// copy of the previous `H_{-(i-1)}`.
///
/// For `k < l` the computation runs on the `(l, k)` context, which is the
/// complex on the `x`-differentials of `(k, l)` with `x` and `y` exchanged.
pub fn hochschild_direct(ctx: &SoergelContext) -> Result<DirectHomology> {
    if ctx.k() < ctx.l() {
        return hochschild_direct(&SoergelContext::new(ctx.l(), ctx.k())?);
    }
    y_complex(ctx)
}

/// The iterated complex on `y_1 - y'_1, ..., y_l - y'_l` for any `(k, l)`.
pub fn y_complex(ctx: &SoergelContext) -> Result<DirectHomology> {
    let l = ctx.l();
    let mut h: Vec<GradedSeries> = vec![GradedSeries::zero(); l + 1];
    let mut current = ctx.gb_i().clone();
    let mut annihilated = true;
    for j in 1..=l {
        let step = koszul_step(&current, &y_difference(j))?;
        for m in j + 1..=l {
            let d = y_difference(m);
            for q in step.colon.generators() {
                if !current.ideal_member(&(q * &d))? {
                    annihilated = false;
                }
            }
        }
        let shift = 2 * j as i64 - 1;
        let mut next = h.clone();
        next[1] = &h[1] + &step.kernel.shift(shift, 0);
        for i in 2..=j {
            next[i] = &h[i] + &h[i - 1].shift(shift, 0);
        }
        h = next;
        current = step.quotient;
    }
    h[0] = current.hilbert_series(&Grading::standard())?;
    Ok(DirectHomology {
        series: h.into_iter().map(|s| s.normalized()).collect(),
        annihilated,
    })
}
