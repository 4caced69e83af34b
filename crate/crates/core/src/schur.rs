//! Schur polynomials written in elementary symmetric variables.
//!
//! With `x_i` standing for the `i`-th elementary symmetric polynomial of `n`
//! underlying variables, `pi_lambda = det[x_{mu_i + j - i}]` where `mu` is the
//! conjugate of `lambda`, with `x_0 = 1` and `x_i = 0` outside `0..=n`. Any
//! multiindex that is not weakly decreasing and nonnegative, or that has more
//! than `n` nonzero entries, gives the zero polynomial.
//!
//! The bialternant `det[z_i^{lambda_j + n - j}] / prod_{i<j} (z_i - z_j)` in the
//! `z` variables is kept as an independent oracle.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::polycore::{Family, PolyMatrix, Polynomial, VariableId};

/// `x_i` of the given family, under the `n`-variable boundary conventions.
pub fn elementary_var(family: Family, i: i64, n: usize) -> Polynomial {
    match i {
        0 => Polynomial::one(),
        i if i < 0 || i as usize > n => Polynomial::zero(),
        i => Polynomial::var(VariableId::new(family, i as u32)),
    }
}

/// The partition behind a multiindex, or `None` when the vanishing convention
/// makes the Schur polynomial zero.
pub fn admissible(index: &[i64], n: usize) -> Option<Partition> {
    if index.iter().any(|&a| a < 0) || index.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    let parts: Vec<u32> = index.iter().map(|&a| a as u32).collect();
    let lambda = Partition::new(&parts).ok()?;
    (lambda.length() <= n).then_some(lambda)
}

pub fn giambelli_matrix(lambda: &Partition, n: usize, family: Family) -> PolyMatrix {
    let mu = lambda.conjugate();
    let size = mu.length();
    PolyMatrix::from_fn(size, size, |i, j| {
        elementary_var(family, mu.parts()[i] as i64 + j as i64 - i as i64, n)
    })
}

pub fn schur_giambelli(index: &[i64], n: usize, family: Family) -> Polynomial {
    match admissible(index, n) {
        Some(lambda) => giambelli_matrix(&lambda, n, family)
            .determinant()
            .expect("square"),
        None => Polynomial::zero(),
    }
}

/// `h_m = det[x_{1+j-i}]` (`m x m`); `h_0 = 1`, `h_m = 0` for `m < 0`.
pub fn complete_h(m: i64, n: usize, family: Family) -> Polynomial {
    if m < 0 {
        return Polynomial::zero();
    }
    let m = m as usize;
    PolyMatrix::from_fn(m, m, |i, j| {
        elementary_var(family, 1 + j as i64 - i as i64, n)
    })
    .determinant()
    .expect("square")
}

/// `h_m = sum_{i=1}^{n} (-1)^{i+1} x_i h_{m-i}` in the `x` family.
pub fn h_recursion_check(m: i64, n: usize) -> bool {
    let lhs = complete_h(m, n, Family::X);
    let rhs: Polynomial = (1..=n as i64)
        .map(|i| {
            let t = &elementary_var(Family::X, i, n) * &complete_h(m - i, n, Family::X);
            if i % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum();
    lhs == rhs
}

pub fn dual_giambelli_matrix(lambda: &Partition, n: usize, family: Family) -> PolyMatrix {
    let size = lambda.length();
    PolyMatrix::from_fn(size, size, |i, j| {
        complete_h(lambda.parts()[i] as i64 + j as i64 - i as i64, n, family)
    })
}

/// `pi_lambda = det[h_{lambda_i + j - i}]`.
pub fn schur_dual_giambelli(index: &[i64], n: usize, family: Family) -> Polynomial {
    match admissible(index, n) {
        Some(lambda) => dual_giambelli_matrix(&lambda, n, family)
            .determinant()
            .expect("square"),
        None => Polynomial::zero(),
    }
}

/// `e_j` of the given variables; `e_0 = 1`, zero past the number of variables.
pub fn elementary_in_z(j: usize, vars: &[VariableId]) -> Polynomial {
    // coefficients of prod (1 + v t), built up one factor at a time
    let mut e = vec![Polynomial::one()];
    for &v in vars {
        let x = Polynomial::var(v);
        let mut next = e.clone();
        next.push(Polynomial::zero());
        for i in 0..e.len() {
            next[i + 1] += &(&e[i] * &x);
        }
        e = next;
    }
    e.get(j).cloned().unwrap_or_default()
}

pub fn vandermonde(n: usize) -> Polynomial {
    let mut d = Polynomial::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            d = &d * &(Polynomial::var(VariableId::z(i)) - Polynomial::var(VariableId::z(j)));
        }
    }
    d
}

/// `det[z_i^{lambda_j + n - j}] / prod_{i<j}(z_i - z_j)` in `z_1..z_n`.
pub fn schur_bialternant_oracle(lambda: &Partition, n: usize) -> Result<Polynomial> {
    if lambda.length() > n {
        return Err(Error::IndexOutOfRange {
            index: lambda.length(),
            lo: 0,
            hi: n,
        });
    }
    let parts = lambda.padded(n);
    let alternant = PolyMatrix::from_fn(n, n, |i, j| {
        let e = parts[j] + (n - 1 - j) as u32;
        Polynomial::var(VariableId::z(i as u32 + 1)).pow(e)
    })
    .determinant()?;
    alternant
        .div_exact(&vandermonde(n))
        .ok_or(Error::NonzeroRemainder)
}

/// `pi_{p+q} = sum_{i=0}^{n-1} (-1)^i pi_{p,1^i} pi_{q-i}` with length-`n` multiindices.
pub fn laplace_identity_check(p: i64, q: i64, n: usize) -> bool {
    let lhs = schur_giambelli(&[p + q], n, Family::X);
    let rhs: Polynomial = (0..n as i64)
        .map(|i| {
            let mut hook = vec![p];
            hook.extend(std::iter::repeat(1).take(i as usize));
            hook.resize(n.max(hook.len()), 0);
            let t = &schur_giambelli(&hook, n, Family::X) * &schur_giambelli(&[q - i], n, Family::X);
            if i % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    lhs == rhs
}

/// Write-once memo of Schur polynomials keyed by `(family, n, multiindex)`.
#[derive(Debug, Default)]
pub struct SchurCache {
    memo: Mutex<HashMap<(Family, usize, Vec<i64>), Polynomial>>,
}

impl SchurCache {
    pub fn new() -> Self {
        SchurCache::default()
    }

    pub fn schur(&self, index: &[i64], n: usize, family: Family) -> Polynomial {
        let key = (family, n, trim_zeros(index));
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return p.clone();
        }
        let p = schur_giambelli(index, n, family);
        self.memo
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(p)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn trim_zeros(index: &[i64]) -> Vec<i64> {
    let mut v = index.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(VariableId::x(i))
    }
    fn z(i: u32) -> Polynomial {
        Polynomial::var(VariableId::z(i))
    }
    fn part(p: &[u32]) -> Partition {
        Partition::new(p).unwrap()
    }

    #[test]
    fn column_shapes_are_elementary() {
        for j in 1..=4 {
            let ones = vec![1; j];
            assert_eq!(schur_giambelli(&ones, 4, Family::X), x(j as u32));
        }
        assert!(schur_giambelli(&[1, 1, 1], 2, Family::X).is_zero());
    }

    #[test]
    fn vanishing_convention() {
        assert!(schur_giambelli(&[1, 2], 3, Family::X).is_zero());
        assert!(schur_giambelli(&[0, 1], 3, Family::X).is_zero());
        assert!(schur_giambelli(&[2, -1], 3, Family::X).is_zero());
        assert_eq!(schur_giambelli(&[2, 0, 0], 1, Family::Y), Polynomial::var(VariableId::y(1)).pow(2));
        assert_eq!(schur_giambelli(&[], 2, Family::X), Polynomial::one());
    }

    #[test]
    fn single_row_two_variables() {
        let h2 = x(1) * x(1) - x(2);
        assert_eq!(schur_giambelli(&[2], 2, Family::X), h2);
        assert_eq!(complete_h(2, 2, Family::X), h2);
        assert_eq!(complete_h(1, 5, Family::X), x(1));
        assert_eq!(
            complete_h(3, 1, Family::Y),
            Polynomial::var(VariableId::y(1)).pow(3)
        );
        assert_eq!(complete_h(0, 3, Family::X), Polynomial::one());
        assert!(complete_h(-1, 3, Family::X).is_zero());
    }

    #[test]
    fn recursion_small() {
        assert!(h_recursion_check(2, 2));
        assert!(h_recursion_check(1, 3));
    }

    #[test]
    fn dual_form_agrees() {
        assert_eq!(
            schur_dual_giambelli(&[2, 1], 2, Family::X),
            schur_giambelli(&[2, 1], 2, Family::X)
        );
        assert_eq!(schur_dual_giambelli(&[3], 3, Family::X), complete_h(3, 3, Family::X));
        // the displayed 3x3 matrix for (3,3,1)
        let h = |m| complete_h(m, 3, Family::X);
        let displayed = PolyMatrix::from_rows(vec![
            vec![h(3), h(4), h(5)],
            vec![h(2), h(3), h(4)],
            vec![Polynomial::zero(), Polynomial::one(), h(1)],
        ])
        .unwrap();
        assert_eq!(dual_giambelli_matrix(&part(&[3, 3, 1]), 3, Family::X), displayed);
        assert_eq!(
            displayed.determinant().unwrap(),
            schur_giambelli(&[3, 3, 1], 3, Family::X)
        );
    }

    #[test]
    fn bialternant_small() {
        assert_eq!(schur_bialternant_oracle(&part(&[1]), 2).unwrap(), z(1) + z(2));
        assert_eq!(schur_bialternant_oracle(&part(&[1, 1]), 2).unwrap(), z(1) * z(2));
        assert_eq!(
            schur_bialternant_oracle(&part(&[2]), 2).unwrap(),
            z(1) * z(1) + z(1) * z(2) + z(2) * z(2)
        );
        assert!(schur_bialternant_oracle(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn elementary_generating_function() {
        let vars: Vec<_> = (1..=3).map(VariableId::z).collect();
        assert_eq!(elementary_in_z(0, &vars), Polynomial::one());
        assert_eq!(
            elementary_in_z(2, &vars),
            z(1) * z(2) + z(1) * z(3) + z(2) * z(3)
        );
        assert!(elementary_in_z(4, &vars).is_zero());
        // sum_j e_j t^j = prod (1 + z_i t), with t an extra variable
        let t = Polynomial::var(VariableId::aux(1));
        let lhs: Polynomial = (0..=3).map(|j| &elementary_in_z(j, &vars) * &t.pow(j as u32)).sum();
        let rhs: Polynomial = (1..=3).map(|i| Polynomial::one() + &z(i) * &t).product();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn laplace_small() {
        assert!(laplace_identity_check(0, 3, 3));
        assert!(laplace_identity_check(2, 2, 2));
    }

    #[test]
    fn cache_returns_the_same_value() {
        let cache = SchurCache::new();
        let a = cache.schur(&[2, 1, 0], 3, Family::X);
        let b = cache.schur(&[2, 1], 3, Family::X);
        assert_eq!(a, b);
        assert_eq!(cache.len(), 1);
    }
}
