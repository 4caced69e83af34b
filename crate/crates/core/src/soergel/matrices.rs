//! The matrices `M`, `S`, `M' = diag(S, 1) M`, the determinant form of `f`
//! and the ideals `I_j` of maximal minors.

use itertools::Itertools;

use super::{swap_families, unprime, SoergelContext};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, MonomialOrder};
use crate::polycore::{Family, PolyMatrix, PolyRing, Polynomial};
use crate::schur::{elementary_var, schur_giambelli};

fn check_shape(k: usize, l: usize) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidShape { k, l });
    }
    if k < l {
        return Err(Error::NeedsKAtLeastL { k, l });
    }
    Ok(())
}

/// `(l + 1 - i, 1^{j-1})` as a multiindex.
fn hook(l: usize, i: usize, j: usize) -> Vec<i64> {
    let mut idx = vec![(l + 1 - i) as i64];
    idx.extend(std::iter::repeat(1).take(j - 1));
    idx
}

/// The `k x k` matrix: rows `1..=l` hold `pi'_{l+1-i,1^{j-1}}(y') - pi_{l+1-i,1^{j-1}}(x)`,
/// the remaining `k - l` rows hold `N_{r,c} = y'_{c-r}`.
pub fn matrix_m(k: usize, l: usize) -> Result<PolyMatrix> {
    check_shape(k, l)?;
    Ok(PolyMatrix::from_fn(k, k, |r, c| {
        let (i, j) = (r + 1, c + 1);
        if i <= l {
            let idx = hook(l, i, j);
            schur_giambelli(&idx, l, Family::YP) - schur_giambelli(&idx, k, Family::X)
        } else {
            let row = i - l;
            elementary_var(Family::YP, j as i64 - row as i64, l)
        }
    }))
}

/// The unitriangular `l x l` matrix `S_{ij} = (-1)^{j-i} x_{j-i}`.
pub fn matrix_s(k: usize, l: usize) -> Result<PolyMatrix> {
    check_shape(k, l)?;
    Ok(PolyMatrix::from_fn(l, l, |r, c| {
        if c < r {
            return Polynomial::zero();
        }
        let d = (c - r) as i64;
        let x = elementary_var(Family::X, d, k);
        if d % 2 == 0 {
            x
        } else {
            -x
        }
    }))
}

/// `M' = diag(S, identity_{k-l}) * M`.
pub fn matrix_mprime(k: usize, l: usize) -> Result<PolyMatrix> {
    let s = matrix_s(k, l)?;
    let block = PolyMatrix::block_diag(&s, &PolyMatrix::identity(k - l));
    block.mul(&matrix_m(k, l)?)
}

/// `I_j` for an arbitrary `k x k` matrix: the maximal minors of its last
/// `k - l + j` rows, projected to `R'` and reduced to a Gröbner basis.
pub fn minor_ideal_ij_of(m: &PolyMatrix, k: usize, l: usize, j: usize) -> Result<GroebnerBasis> {
    check_shape(k, l)?;
    if j == 0 || j > l {
        return Err(Error::IndexOutOfRange { index: j, lo: 1, hi: l });
    }
    let size = k - l + j;
    let rows: Vec<usize> = (k - size..k).collect();
    let minors = (0..k)
        .combinations(size)
        .map(|cols| m.submatrix(&rows, &cols).determinant().map(|d| unprime(&d)))
        .collect::<Result<Vec<_>>>()?;
    GroebnerBasis::new(&PolyRing::unprimed(k, l), &minors, &MonomialOrder::standard())
}

/// `I_j` of `R'`, from the matrix `M`.
pub fn minor_ideal_ij(k: usize, l: usize, j: usize) -> Result<GroebnerBasis> {
    minor_ideal_ij_of(&matrix_m(k, l)?, k, l, j)
}

/// `det M` against `f`. `epsilon` is the sign with `det M = epsilon * f`
/// (modulo `I` when the roles of `x` and `y` had to be exchanged), or `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantReport {
    pub k: usize,
    pub l: usize,
    /// `k < l`: the determinant was taken for `(l, k)` and `x`, `y` exchanged.
    pub swapped: bool,
    pub det: Polynomial,
    pub epsilon: Option<i8>,
    /// `(-1)^{n(n+1)/2}` for the size `n` of `M`.
    pub triangular_sign: i8,
}

impl DeterminantReport {
    pub fn sign_agrees(&self) -> bool {
        self.epsilon == Some(self.triangular_sign)
    }
}

pub fn delta_determinant(ctx: &SoergelContext) -> Result<DeterminantReport> {
    let (k, l) = (ctx.k(), ctx.l());
    let swapped = k < l;
    let n = k.max(l);
    let f = ctx.f();
    let (det, epsilon) = if swapped {
        let det = swap_families(&matrix_m(l, k)?.determinant()?);
        let gb = ctx.gb_i();
        let nd = gb.normal_form(&det)?;
        let nf = gb.normal_form(&f)?;
        (det, sign_between(&nd, &nf))
    } else {
        let det = matrix_m(k, l)?.determinant()?;
        let e = sign_between(&det, &f);
        (det, e)
    };
    Ok(DeterminantReport {
        k,
        l,
        swapped,
        det,
        epsilon,
        triangular_sign: if (n * (n + 1) / 2) % 2 == 0 { 1 } else { -1 },
    })
}

fn sign_between(a: &Polynomial, b: &Polynomial) -> Option<i8> {
    if a.is_zero() || b.is_zero() {
        None
    } else if a == b {
        Some(1)
    } else if *a == -b {
        Some(-1)
    } else {
        None
    }
}
