//! Dense exponent vectors and sorted term lists: the working representation of
//! the Gröbner engine. Polynomials are converted in and out at the boundary.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::MAX_VARS;
use crate::error::{Error, Result};
use crate::polycore::{Monomial, PolyRing, Polynomial, Rational};

pub(crate) type Coeff = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub(crate) struct Exps(pub [u16; MAX_VARS]);

impl Exps {
    pub fn mul(&self, other: &Exps) -> Exps {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a + b;
        }
        Exps(out)
    }

    pub fn divides(&self, other: &Exps) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Exps) -> Exps {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a - b;
        }
        Exps(out)
    }

    pub fn lcm(&self, other: &Exps) -> Exps {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = (*a).max(*b);
        }
        Exps(out)
    }

    pub fn coprime(&self, other: &Exps) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mask(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u32, |m, (i, _)| m | (1 << i))
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// Elimination degree, weighted degree, total degree, then reverse lex on
/// positions (a smaller exponent in the last differing variable is larger).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DenseOrder {
    pub n: usize,
    pub weights: [u32; MAX_VARS],
    pub elim_mask: u32,
}

impl DenseOrder {
    fn key(&self, e: &Exps) -> (u32, u64, u32) {
        let mut elim = 0u32;
        let mut wdeg = 0u64;
        let mut tdeg = 0u32;
        for i in 0..self.n {
            let x = e.0[i] as u32;
            if self.elim_mask & (1 << i) != 0 {
                elim += x;
            }
            wdeg += x as u64 * self.weights[i] as u64;
            tdeg += x;
        }
        (elim, wdeg, tdeg)
    }

    pub fn cmp(&self, a: &Exps, b: &Exps) -> Ordering {
        self.key(a).cmp(&self.key(b)).then_with(|| {
            for i in (0..self.n).rev() {
                if a.0[i] != b.0[i] {
                    return b.0[i].cmp(&a.0[i]);
                }
            }
            Ordering::Equal
        })
    }

    pub fn weighted_degree(&self, e: &Exps) -> u64 {
        (0..self.n)
            .map(|i| e.0[i] as u64 * self.weights[i] as u64)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub e: Exps,
    pub c: Coeff,
}

/// Terms sorted in decreasing order; the leading term is first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct DPoly {
    pub terms: Vec<Term>,
}

impl DPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> &Exps {
        &self.terms[0].e
    }

    pub fn lc(&self) -> &Coeff {
        &self.terms[0].c
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.terms[0].c.is_one() {
            return;
        }
        let inv = self.terms[0].c.recip();
        for t in &mut self.terms {
            t.c = &t.c * &inv;
        }
    }

    pub fn from_unsorted(order: &DenseOrder, mut terms: Vec<Term>) -> DPoly {
        terms.sort_by(|a, b| order.cmp(&b.e, &a.e));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.e == t.e => last.c = &last.c + &t.c,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.c.is_zero());
        DPoly { terms: out }
    }

    pub fn mul_term(&self, e: &Exps, c: &Coeff) -> DPoly {
        DPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    e: t.e.mul(e),
                    c: &t.c * c,
                })
                .collect(),
        }
    }
}

/// `a - c * m * b`, where both inputs are sorted.
pub(crate) fn sub_mul(order: &DenseOrder, a: &[Term], b: &[Term], m: &Exps, c: &Coeff) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<Exps> = b.first().map(|t| t.e.mul(m));
    while i < a.len() {
        let Some(be) = bj else { break };
        match order.cmp(&a[i].e, &be) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    e: be,
                    c: -(&b[j].c * c),
                });
                j += 1;
                bj = b.get(j).map(|t| t.e.mul(m));
            }
            Ordering::Equal => {
                let v = &a[i].c - &(&b[j].c * c);
                if !v.is_zero() {
                    out.push(Term { e: be, c: v });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.e.mul(m));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(Term {
            e: b[j].e.mul(m),
            c: -(&b[j].c * c),
        });
        j += 1;
    }
    out
}

/// Reducers indexed for fast divisor lookup. Polynomials must be monic.
pub(crate) struct Reducers<'a> {
    polys: Vec<&'a DPoly>,
    masks: Vec<u32>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: impl IntoIterator<Item = &'a DPoly>) -> Self {
        let polys: Vec<&DPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let masks = polys.iter().map(|p| p.lt().mask()).collect();
        Reducers { polys, masks }
    }

    pub fn find(&self, e: &Exps) -> Option<&'a DPoly> {
        let m = e.mask();
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(p, &pm)| pm & !m == 0 && p.lt().divides(e))
            .map(|(p, _)| *p)
    }

    /// Complete reduction (`full`) or top reduction only.
    pub fn reduce(&self, order: &DenseOrder, p: DPoly, full: bool) -> DPoly {
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = p.terms;
        let mut start = 0;
        while start < cur.len() {
            let lead = &cur[start];
            match self.find(&lead.e) {
                Some(g) => {
                    let m = lead.e.div(g.lt());
                    let c = &lead.c / g.lc();
                    cur = sub_mul(order, &cur[start + 1..], &g.terms[1..], &m, &c);
                    start = 0;
                }
                None => {
                    if !full {
                        rem.extend(cur.drain(start..));
                        break;
                    }
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        DPoly { terms: rem }
    }
}

/// Conversion between sparse polynomials and dense term lists for one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Codec {
    pub ring: PolyRing,
}

impl Codec {
    pub fn new(ring: &PolyRing) -> Result<Self> {
        if ring.len() > MAX_VARS {
            return Err(Error::TooManyVariables(ring.len()));
        }
        Ok(Codec { ring: ring.clone() })
    }

    pub fn exps(&self, m: &Monomial) -> Result<Exps> {
        let mut e = [0u16; MAX_VARS];
        for &(v, x) in m.factors() {
            let i = self.ring.position(v).ok_or(Error::VariableOutsideRing(v))?;
            e[i] = u16::try_from(x).map_err(|_| Error::Parse(format!("exponent {x} too large")))?;
        }
        Ok(Exps(e))
    }

    pub fn monomial(&self, e: &Exps) -> Monomial {
        Monomial::from_factors(
            self.ring
                .vars()
                .iter()
                .enumerate()
                .filter(|(i, _)| e.0[*i] > 0)
                .map(|(i, &v)| (v, e.0[i] as u32)),
        )
    }

    pub fn encode(&self, order: &DenseOrder, p: &Polynomial) -> Result<DPoly> {
        let terms = p
            .terms()
            .map(|(m, c)| {
                Ok(Term {
                    e: self.exps(m)?,
                    c: c.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DPoly::from_unsorted(order, terms))
    }

    pub fn decode(&self, p: &DPoly) -> Polynomial {
        Polynomial::from_terms(p.terms.iter().map(|t| (self.monomial(&t.e), t.c.clone())))
    }
}
