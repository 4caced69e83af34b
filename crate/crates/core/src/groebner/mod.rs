//! Gröbner bases over the rationals: reduced bases, normal forms, ideal
//! membership, sums, intersections, colon ideals and weighted Hilbert series.
//!
//! Every basis lives in an explicit [`PolyRing`]; the ring fixes the variable
//! positions, so two bases are comparable only when both ring and order agree.

mod buchberger;
mod dense;
mod hilbert;
pub mod series;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polycore::{Grading, Monomial, PolyRing, Polynomial, VariableId};

use dense::{Codec, DPoly, DenseOrder, Reducers};
pub use series::{GradedSeries, LaurentPoly};

/// Largest number of ring variables the dense engine handles.
pub const MAX_VARS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Weighted degree, then total degree, then reverse lexicographic.
    WeightedDegrevlex,
    /// Any monomial with more of the eliminated variables is larger; ties are
    /// broken by the weighted degree-reverse-lexicographic order.
    Elimination(BTreeSet<VariableId>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub grading: Grading,
}

impl MonomialOrder {
    pub fn weighted_degrevlex(grading: Grading) -> Self {
        MonomialOrder {
            kind: OrderKind::WeightedDegrevlex,
            grading,
        }
    }

    pub fn elimination(vars: impl IntoIterator<Item = VariableId>, grading: Grading) -> Self {
        MonomialOrder {
            kind: OrderKind::Elimination(vars.into_iter().collect()),
            grading,
        }
    }

    /// Weighted degrevlex under the standard grading.
    pub fn standard() -> Self {
        MonomialOrder::weighted_degrevlex(Grading::standard())
    }

    fn dense(&self, ring: &PolyRing) -> DenseOrder {
        let mut weights = [0u32; MAX_VARS];
        let mut elim_mask = 0u32;
        for (i, &v) in ring.vars().iter().enumerate() {
            weights[i] = self.grading.weight(v);
            if let OrderKind::Elimination(set) = &self.kind {
                if set.contains(&v) {
                    elim_mask |= 1 << i;
                }
            }
        }
        DenseOrder {
            n: ring.len(),
            weights,
            elim_mask,
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::standard()
    }
}

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing
/// leading monomial. Unique for a given ideal, ring and order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    codec: Codec,
    dorder: DenseOrder,
    basis: Vec<DPoly>,
    generators: Vec<Polynomial>,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    GroebnerBasis::new(ring, gens, order)
}

impl GroebnerBasis {
    pub fn new(ring: &PolyRing, gens: &[Polynomial], order: &MonomialOrder) -> Result<Self> {
        let codec = Codec::new(ring)?;
        let dorder = order.dense(ring);
        let input = gens
            .iter()
            .map(|g| codec.encode(&dorder, g))
            .collect::<Result<Vec<_>>>()?;
        let basis = buchberger::groebner(&dorder, input);
        Ok(GroebnerBasis::from_dense(order.clone(), codec, dorder, basis))
    }

    fn from_dense(order: MonomialOrder, codec: Codec, dorder: DenseOrder, basis: Vec<DPoly>) -> Self {
        let generators = basis.iter().map(|p| codec.decode(p)).collect();
        GroebnerBasis {
            order,
            codec,
            dorder,
            basis,
            generators,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.codec.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The reduced basis, by increasing leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].lt().is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|p| self.codec.monomial(p.lt())).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        let d = self.codec.encode(&self.dorder, p)?;
        let r = Reducers::new(&self.basis).reduce(&self.dorder, d, true);
        Ok(self.codec.decode(&r))
    }

    pub fn ideal_member(&self, p: &Polynomial) -> Result<bool> {
        let d = self.codec.encode(&self.dorder, p)?;
        Ok(Reducers::new(&self.basis)
            .reduce(&self.dorder, d, false)
            .is_zero())
    }

    /// Buchberger's criterion on the stored basis.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        buchberger::is_groebner(&self.dorder, &self.basis)
    }

    /// Basis of `I + <extra>`.
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<GroebnerBasis> {
        let mut input = self.basis.clone();
        for p in extra {
            input.push(self.codec.encode(&self.dorder, p)?);
        }
        let basis = buchberger::groebner(&self.dorder, input);
        Ok(GroebnerBasis::from_dense(
            self.order.clone(),
            self.codec.clone(),
            self.dorder.clone(),
            basis,
        ))
    }

    fn check_compatible(&self, other: &GroebnerBasis) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    /// Basis of `I ∩ J` as the `w`-free part of `<w I, (1 - w) J>`.
    pub fn intersect(&self, other: &GroebnerBasis) -> Result<GroebnerBasis> {
        self.check_compatible(other)?;
        self.intersect_gens(other.generators())
    }

    fn intersect_gens(&self, other: &[Polynomial]) -> Result<GroebnerBasis> {
        let (ext, w) = self.ring().with_fresh_aux();
        let wp = Polynomial::var(w);
        let one_minus_w = &Polynomial::one() - &wp;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| &wp * g).collect();
        gens.extend(other.iter().map(|h| &one_minus_w * h));
        let order = MonomialOrder::elimination([w], self.order.grading.clone().with_weight(w, 0));
        let big = GroebnerBasis::new(&ext, &gens, &order)?;
        let kept: Vec<Polynomial> = big
            .generators
            .into_iter()
            .filter(|g| !g.variables().contains(&w))
            .collect();
        GroebnerBasis::new(self.ring(), &kept, &self.order)
    }

    /// Basis of `(I : p) = {q : pq ∈ I}`.
    pub fn colon_ideal(&self, p: &Polynomial) -> Result<GroebnerBasis> {
        if p.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        self.codec.encode(&self.dorder, p)?;
        let meet = self.intersect_gens(std::slice::from_ref(p))?;
        let quotients = meet
            .generators
            .iter()
            .map(|g| g.div_exact(p).ok_or(Error::NonzeroRemainder))
            .collect::<Result<Vec<_>>>()?;
        GroebnerBasis::new(self.ring(), &quotients, &self.order)
    }

    /// Hilbert series of `ring / I` under `grading`, from the initial ideal.
    pub fn hilbert_series(&self, grading: &Grading) -> Result<GradedSeries> {
        let weights: Vec<u32> = self.ring().vars().iter().map(|&v| grading.weight(v)).collect();
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight(self.ring().vars()[i]));
        }
        if self.generators.iter().any(|g| !g.is_homogeneous(grading)) {
            return Err(Error::Inhomogeneous);
        }
        let leads: Vec<_> = self.basis.iter().map(|p| *p.lt()).collect();
        let num = hilbert::numerator(&leads, &weights);
        Ok(GradedSeries::new(num, weights))
    }
}

/// Same ideal: reduced bases under the same ring and order coincide.
pub fn ideal_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool> {
    a.check_compatible(b)?;
    Ok(a.basis == b.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::VariableId as V;

    fn v(x: V) -> Polynomial {
        Polynomial::var(x)
    }

    fn ideal_i11() -> Vec<Polynomial> {
        vec![
            v(V::x(1)) + v(V::y(1)) - v(V::xp(1)) - v(V::yp(1)),
            v(V::x(1)) * v(V::y(1)) - v(V::xp(1)) * v(V::yp(1)),
        ]
    }

    #[test]
    fn principal_and_unit() {
        let ring = PolyRing::unprimed(1, 1);
        let o = MonomialOrder::standard();
        let gb = buchberger(&ring, &[v(V::x(1))], &o).unwrap();
        assert_eq!(gb.generators(), &[v(V::x(1))]);
        let unit = buchberger(&ring, &[v(V::x(1)) + v(V::y(1)), Polynomial::one()], &o).unwrap();
        assert!(unit.is_unit());
        let zero = buchberger(&ring, &[Polynomial::zero()], &o).unwrap();
        assert!(zero.is_empty());
    }

    #[test]
    fn presentation_ideal_small() {
        let ring = PolyRing::doubled(1, 1);
        let gb = buchberger(&ring, &ideal_i11(), &MonomialOrder::standard()).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.s_pairs_reduce_to_zero());
        let f = v(V::yp(1)) - v(V::x(1));
        let g = &(v(V::y(1)) - v(V::yp(1))) * &f;
        assert!(gb.normal_form(&g).unwrap().is_zero());
        assert!(gb.ideal_member(&g).unwrap());
        assert!(!gb.normal_form(&f).unwrap().is_zero());
        assert!(gb.normal_form(&v(V::z(1))).is_err());
    }

    #[test]
    fn intersections() {
        let ring = PolyRing::unprimed(1, 1);
        let o = MonomialOrder::standard();
        let x = buchberger(&ring, &[v(V::x(1))], &o).unwrap();
        let y = buchberger(&ring, &[v(V::y(1))], &o).unwrap();
        let xy = x.intersect(&y).unwrap();
        assert_eq!(xy.generators(), &[v(V::x(1)) * v(V::y(1))]);
        assert!(ideal_equal(&x.intersect(&x).unwrap(), &x).unwrap());
        let m = buchberger(&ring, &[v(V::x(1)), v(V::y(1))], &o).unwrap();
        let d = buchberger(&ring, &[v(V::x(1)) - v(V::y(1))], &o).unwrap();
        let meet = m.intersect(&d).unwrap();
        // x1 - y1 already lies in <x1, y1>
        assert!(ideal_equal(&meet, &d).unwrap());
    }

    #[test]
    fn colon_ideals() {
        let ring = PolyRing::unprimed(1, 1);
        let o = MonomialOrder::standard();
        let x = buchberger(&ring, &[v(V::x(1))], &o).unwrap();
        assert!(x.colon_ideal(&v(V::x(1))).unwrap().is_unit());
        let xy = buchberger(&ring, &[v(V::x(1)) * v(V::y(1))], &o).unwrap();
        assert_eq!(xy.colon_ideal(&v(V::x(1))).unwrap().generators(), &[v(V::y(1))]);
        assert_eq!(x.colon_ideal(&Polynomial::zero()).unwrap_err(), Error::ZeroDivisor);

        let p = PolyRing::doubled(1, 1);
        let gb = buchberger(&p, &ideal_i11(), &o).unwrap();
        let colon = gb.colon_ideal(&(v(V::y(1)) - v(V::yp(1)))).unwrap();
        assert!(colon.ideal_member(&(v(V::yp(1)) - v(V::x(1)))).unwrap());
        for q in colon.generators() {
            assert!(gb.ideal_member(&(q * &(v(V::y(1)) - v(V::yp(1))))).unwrap());
        }
    }

    #[test]
    fn equality_needs_matching_orders() {
        let ring = PolyRing::unprimed(1, 1);
        let o = MonomialOrder::standard();
        let a = buchberger(&ring, &[v(V::x(1))], &o).unwrap();
        let b = buchberger(&ring, &[Polynomial::integer(2) * v(V::x(1))], &o).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        let e = buchberger(&ring, &[v(V::x(1))], &MonomialOrder::elimination([V::x(1)], Grading::standard())).unwrap();
        assert_eq!(ideal_equal(&a, &e).unwrap_err(), Error::OrderMismatch);
    }

    #[test]
    fn hilbert_series_examples() {
        let g = Grading::standard();
        let o = MonomialOrder::standard();
        let r1 = PolyRing::new(vec![V::x(1)]);
        let free = buchberger(&r1, &[], &o).unwrap();
        assert_eq!(free.hilbert_series(&g).unwrap(), GradedSeries::free(vec![2]));
        let trunc = buchberger(&r1, &[v(V::x(1)).pow(2)], &o).unwrap();
        let expected = &GradedSeries::one() + &GradedSeries::monomial(1, 2, 0);
        assert_eq!(trunc.hilbert_series(&g).unwrap(), expected);

        // regular sequence of degrees 2, 4 in four weight-2 variables
        let p = PolyRing::doubled(1, 1);
        let gb = buchberger(&p, &ideal_i11(), &o).unwrap();
        let hs = gb.hilbert_series(&g).unwrap();
        let expected = GradedSeries::new(
            &LaurentPoly::one_minus_q(2) * &LaurentPoly::one_minus_q(4),
            vec![2, 2, 2, 2],
        );
        assert_eq!(hs, expected);

        let r2 = PolyRing::unprimed(2, 0);
        let bad = buchberger(&r2, &[v(V::x(2)) + v(V::x(1))], &o).unwrap();
        assert_eq!(bad.hilbert_series(&g).unwrap_err(), Error::Inhomogeneous);
        let (ext, w) = r1.with_fresh_aux();
        let z = buchberger(&ext, &[], &o).unwrap();
        assert_eq!(z.hilbert_series(&g).unwrap_err(), Error::ZeroWeight(w));
    }
}
