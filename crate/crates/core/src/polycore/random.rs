//! Seeded random polynomials and matrices for property suites.

use rand::Rng;

use super::{Monomial, PolyMatrix, Polynomial, Rational, VariableId};

/// Shape of a random polynomial: up to `terms` terms, each a product of at
/// most `support` variables with exponents in `1..=max_exp`, integer
/// coefficients in `-coeff..=coeff`.
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub terms: usize,
    pub support: usize,
    pub max_exp: u32,
    pub coeff: i64,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            terms: 4,
            support: 3,
            max_exp: 2,
            coeff: 3,
        }
    }
}

pub fn random_polynomial<R: Rng + ?Sized>(rng: &mut R, vars: &[VariableId], shape: RandomShape) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..rng.gen_range(0..=shape.terms) {
        let m = if vars.is_empty() || shape.max_exp == 0 {
            Monomial::one()
        } else {
            let factors: Vec<_> = (0..rng.gen_range(0..=shape.support))
                .map(|_| (vars[rng.gen_range(0..vars.len())], rng.gen_range(1..=shape.max_exp)))
                .collect();
            Monomial::from_factors(factors)
        };
        let c = rng.gen_range(-shape.coeff..=shape.coeff);
        p.add_term(m, Rational::from_integer(c.into()));
    }
    p
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, vars: &[VariableId], shape: RandomShape) -> PolyMatrix {
    PolyMatrix::from_fn(n, n, |_, _| random_polynomial(rng, vars, shape))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_output_is_reproducible() {
        let vars = [VariableId::x(1), VariableId::y(1)];
        let a = random_polynomial(&mut ChaCha8Rng::seed_from_u64(3), &vars, RandomShape::default());
        let b = random_polynomial(&mut ChaCha8Rng::seed_from_u64(3), &vars, RandomShape::default());
        assert_eq!(a, b);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let p = random_polynomial(&mut rng, &vars, RandomShape::default());
            assert!(p.variables().iter().all(|v| vars.contains(v)));
            assert!(p.len() <= 4);
        }
    }
}
