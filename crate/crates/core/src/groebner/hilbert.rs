//! Hilbert-series numerators of monomial ideals by pivot recursion:
//! `N(G) = N(G + m) + q^{deg m} N(G : m)` for a pivot monomial `m = x^e`.

use std::collections::HashMap;

use super::dense::Exps;
use super::series::LaurentPoly;

/// Numerator `N` with `HS(R / <gens>) = N / prod_v (1 - q^{w_v})`.
pub(crate) fn numerator(gens: &[Exps], weights: &[u32]) -> LaurentPoly {
    let mut memo = HashMap::new();
    recurse(minimize(gens.to_vec()), weights, &mut memo)
}

fn degree(e: &Exps, weights: &[u32]) -> i64 {
    weights
        .iter()
        .zip(e.0.iter())
        .map(|(&w, &x)| w as i64 * x as i64)
        .sum()
}

/// Minimal generators, in a canonical sorted order.
fn minimize(mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.sort_by_key(|e| (e.0.iter().map(|&x| x as u32).sum::<u32>(), *e));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn recurse(gens: Vec<Exps>, weights: &[u32], memo: &mut HashMap<Vec<Exps>, LaurentPoly>) -> LaurentPoly {
    if let Some(n) = memo.get(&gens) {
        return n.clone();
    }
    let n = match pivot(&gens) {
        None => gens.iter().fold(LaurentPoly::one(), |acc, g| {
            &acc * &LaurentPoly::one_minus_q(degree(g, weights))
        }),
        Some((var, e)) => {
            let mut m = Exps::default();
            m.0[var] = e;
            let mut plus = gens.clone();
            plus.push(m);
            let colon: Vec<Exps> = gens
                .iter()
                .map(|g| {
                    let mut q = *g;
                    q.0[var] = q.0[var].saturating_sub(e);
                    q
                })
                .collect();
            let a = recurse(minimize(plus), weights, memo);
            let b = recurse(minimize(colon), weights, memo);
            &a + &b.shift(degree(&m, weights), 0)
        }
    };
    memo.insert(gens, n.clone());
    n
}

/// A pivot `x_var^e` outside the ideal, or `None` if the generators are
/// pairwise coprime. `x_var` is the variable shared by the most generators.
fn pivot(gens: &[Exps]) -> Option<(usize, u16)> {
    let n = gens.first().map_or(0, |g| g.0.len());
    let (var, count) = (0..n)
        .map(|v| (v, gens.iter().filter(|g| g.0[v] > 0).count()))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))?;
    if count < 2 {
        return None;
    }
    let mut exps: Vec<u16> = gens.iter().map(|g| g.0[var]).filter(|&x| x > 0).collect();
    exps.sort_unstable();
    let mut e = exps[(exps.len() - 1) / 2];
    // a pure power x^a in the ideal forces e < a; minimality gives a >= 2
    let pure = gens
        .iter()
        .filter(|g| g.0.iter().enumerate().all(|(i, &x)| i == var || x == 0))
        .map(|g| g.0[var])
        .min();
    if let Some(a) = pure {
        e = e.min(a - 1);
    }
    Some((var, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(v: &[u16]) -> Exps {
        let mut e = Exps::default();
        e.0[..v.len()].copy_from_slice(v);
        e
    }

    /// Count standard monomials degree by degree, for comparison.
    fn brute(gens: &[Exps], weights: &[u32], max: i64) -> Vec<i64> {
        let n = weights.len();
        let mut counts = vec![0i64; max as usize + 1];
        let mut stack = vec![(Exps::default(), 0usize)];
        while let Some((e, start)) = stack.pop() {
            if gens.iter().any(|g| g.divides(&e)) {
                continue;
            }
            counts[degree(&e, weights) as usize] += 1;
            for v in start..n {
                let mut f = e;
                f.0[v] += 1;
                if degree(&f, weights) <= max {
                    stack.push((f, v));
                }
            }
        }
        counts
    }

    #[test]
    fn matches_brute_force_counts() {
        let weights = [2, 4, 2];
        let gens = vec![ex(&[2, 1, 0]), ex(&[1, 0, 3]), ex(&[0, 2, 2]), ex(&[3, 0, 0]), ex(&[1, 1, 1])];
        let num = numerator(&gens, &weights);
        let series = super::super::series::GradedSeries::new(num, weights.to_vec());
        let exp = series.expand(30);
        let counts = brute(&gens, &weights, 30);
        for (d, &c) in counts.iter().enumerate() {
            let got = exp.get(&(d as i64, 0)).cloned().unwrap_or_default();
            assert_eq!(got, c.into(), "degree {d}");
        }
    }

    #[test]
    fn unit_and_empty() {
        assert_eq!(numerator(&[], &[2, 2]), LaurentPoly::one());
        assert!(numerator(&[ex(&[0, 0])], &[2, 2]).is_zero());
    }
}
