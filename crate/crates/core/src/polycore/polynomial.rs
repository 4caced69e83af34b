use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Grading, Monomial, VariableId};

pub type Rational = BigRational;

/// A polynomial with exact rational coefficients. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn integer(c: i64) -> Self {
        Polynomial::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: VariableId) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term for the crate-wide display order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (n.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `None` for the zero polynomial, whose degree is undefined.
    pub fn weighted_degree(&self, g: &Grading) -> Option<u64> {
        self.terms.keys().map(|m| m.weighted_degree(g)).max()
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self, g: &Grading) -> bool {
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(g));
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Replaces each variable in `map` by its image; other variables are kept.
    pub fn substitute(&self, map: &HashMap<VariableId, Polynomial>) -> Polynomial {
        let mut powers: HashMap<(VariableId, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                match map.get(&v) {
                    Some(image) => {
                        let pw = powers
                            .entry((v, e))
                            .or_insert_with(|| image.pow(e))
                            .clone();
                        acc = &acc * &pw;
                    }
                    None => kept = kept.mul(&Monomial::power(v, e)),
                }
            }
            out += &acc.mul_monomial(&kept, &Rational::one());
        }
        out
    }

    /// Renames variables (monomials whose variables collide are merged).
    pub fn rename(&self, f: impl Fn(VariableId) -> VariableId) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())))
    }

    /// Exact division: `Some(q)` with `self = q * d`, `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&dm)?;
            let qc = c / &dc;
            rem -= &d.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// The gcd of the numerators over the lcm of the denominators, positive.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Polynomial::zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }
}

impl From<VariableId> for Polynomial {
    fn from(v: VariableId) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::integer(c)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::replace(c, Rational::zero());
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        let mut acc = Polynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }
    fn y(i: u32) -> Polynomial {
        Polynomial::var(VariableId::y(i))
    }
    fn yp(i: u32) -> Polynomial {
        Polynomial::var(VariableId::yp(i))
    }

    #[test]
    fn difference_of_squares() {
        let p = (x(1) + y(1)) * (x(1) - y(1));
        assert_eq!(p, x(1) * x(1) - y(1) * y(1));
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn hand_expansion_matches_termwise_oracle() {
        let p = (yp(1) - x(1)) * (y(1) - yp(1));
        let expected = y(1) * yp(1) - x(1) * y(1) - yp(1) * yp(1) + x(1) * yp(1);
        assert_eq!(p, expected);
        // term-by-term: four distinct products, no cancellation
        assert_eq!(p.len(), 4);
        let m = Monomial::from_factors([(VariableId::x(1), 1), (VariableId::y(1), 1)]);
        assert_eq!(p.coefficient(&m), Rational::from_integer((-1).into()));
    }

    #[test]
    fn weighted_degrees() {
        let g = Grading::standard();
        assert_eq!(x(2).weighted_degree(&g), Some(4));
        let p = x(1) * y(1) + x(2);
        assert_eq!(p.weighted_degree(&g), Some(4));
        assert!(p.is_homogeneous(&g));
        assert_eq!(Polynomial::one().weighted_degree(&g), Some(0));
        assert_eq!(Polynomial::zero().weighted_degree(&g), None);
        assert!(!(x(1) + x(2)).is_homogeneous(&g));
    }

    #[test]
    fn substitution() {
        let mut map = HashMap::new();
        map.insert(VariableId::yp(1), y(1));
        assert_eq!((yp(1) - x(1)).substitute(&map), y(1) - x(1));

        let z = |i| Polynomial::var(VariableId::z(i));
        let mut e = HashMap::new();
        e.insert(VariableId::x(1), z(1) + z(2));
        e.insert(VariableId::x(2), z(1) * z(2));
        assert_eq!(x(1).substitute(&e), z(1) + z(2));
        assert_eq!(x(2).substitute(&e), z(1) * z(2));
        assert_eq!(
            (x(1) * x(1) - x(2)).substitute(&e),
            z(1) * z(1) + z(1) * z(2) + z(2) * z(2)
        );
    }

    #[test]
    fn exact_division() {
        let a = x(1) + y(1);
        let b = x(1) - y(2) * x(1) + Polynomial::integer(3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!((&prod + &Polynomial::one()).div_exact(&a), None);
        assert_eq!(Polynomial::zero().div_exact(&a), Some(Polynomial::zero()));
        assert_eq!(a.div_exact(&Polynomial::zero()), None);
    }

    #[test]
    fn pow_and_content() {
        let p = (x(1) + Polynomial::one()).pow(3);
        assert_eq!(p.len(), 4);
        let q = p.scale(&Rational::new(6.into(), 4.into()));
        assert_eq!(q.content(), Rational::new(3.into(), 2.into()));
        assert_eq!(q.monic().leading_term().unwrap().1, &Rational::one());
    }
}
