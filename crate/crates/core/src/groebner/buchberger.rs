//! Buchberger's algorithm with the Gebauer–Möller pair update. Pairs are taken
//! by increasing weighted degree of their lcm, then by the monomial order; for
//! elimination orders this keeps the computation degree by degree. Output is
//! the reduced (monic, interreduced) basis, sorted by increasing leading
//! monomial.

use super::dense::{sub_mul, DPoly, DenseOrder, Exps, Reducers};

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exps,
}

struct State<'o> {
    order: &'o DenseOrder,
    polys: Vec<DPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'o> State<'o> {
    fn reducers(&self) -> Reducers<'_> {
        Reducers::new(
            self.polys
                .iter()
                .zip(&self.active)
                .filter(|(_, &a)| a)
                .map(|(p, _)| p),
        )
    }

    fn lt(&self, i: usize) -> &Exps {
        self.polys[i].lt()
    }

    fn insert(&mut self, h: DPoly) {
        let hi = self.polys.len();
        let hlt = *h.lt();
        self.polys.push(h);
        self.active.push(true);

        let active: Vec<usize> = (0..hi).filter(|&g| self.active[g]).collect();

        // new pairs (h, g), pruned by the chain criterion among themselves
        let cand: Vec<Pair> = active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hi,
                lcm: self.lt(g).lcm(&hlt),
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (n, p) in cand.iter().enumerate() {
            let coprime = self.lt(p.i).coprime(&hlt);
            let dominated = cand[n + 1..]
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(*p);
            }
        }
        kept.retain(|p| !self.lt(p.i).coprime(&hlt));

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlt.divides(&p.lcm)
                && polys[p.i].lt().lcm(&hlt) != p.lcm
                && polys[p.j].lt().lcm(&hlt) != p.lcm)
        });
        self.pairs.extend(kept);

        for g in active {
            if hlt.divides(self.lt(g)) {
                self.active[g] = false;
            }
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .weighted_degree(&a.lcm)
                    .cmp(&order.weighted_degree(&b.lcm))
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then(a.j.cmp(&b.j))
                    .then(a.i.cmp(&b.i))
            })
            .map(|(n, _)| n)?;
        Some(self.pairs.swap_remove(best))
    }
}

pub(crate) fn s_polynomial(order: &DenseOrder, f: &DPoly, g: &DPoly) -> DPoly {
    let lcm = f.lt().lcm(g.lt());
    let a = f.mul_term(&lcm.div(f.lt()), &g.lc().clone());
    let b = g.mul_term(&lcm.div(g.lt()), &f.lc().clone());
    let one = num_traits::One::one();
    DPoly {
        terms: sub_mul(order, &a.terms, &b.terms, &Exps::default(), &one),
    }
}

pub(crate) fn groebner(order: &DenseOrder, mut input: Vec<DPoly>) -> Vec<DPoly> {
    input.retain(|p| !p.is_zero());
    input.sort_by(|a, b| order.cmp(a.lt(), b.lt()).then_with(|| a.terms.len().cmp(&b.terms.len())));

    let mut st = State {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for p in input {
        let mut h = st.reducers().reduce(order, p, true);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        st.insert(h);
    }

    while let Some(pair) = st.next_pair() {
        let s = s_polynomial(order, &st.polys[pair.i], &st.polys[pair.j]);
        let mut h = st.reducers().reduce(order, s, true);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        st.insert(h);
    }

    let mut basis: Vec<DPoly> = st
        .polys
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    interreduce(order, &mut basis);
    basis
}

/// Minimises and tail-reduces a Gröbner basis in place; the result is sorted.
pub(crate) fn interreduce(order: &DenseOrder, basis: &mut Vec<DPoly>) {
    basis.sort_by(|a, b| order.cmp(a.lt(), b.lt()));
    let mut minimal: Vec<DPoly> = Vec::new();
    for p in basis.drain(..) {
        if !minimal.iter().any(|g| g.lt().divides(p.lt())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others = Reducers::new(
            minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p),
        );
        let p = &minimal[i];
        let lead = DPoly {
            terms: p.terms[..1].to_vec(),
        };
        let tail = others.reduce(
            order,
            DPoly {
                terms: p.terms[1..].to_vec(),
            },
            true,
        );
        let mut r = lead;
        r.terms.extend(tail.terms);
        r.make_monic();
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lt(), b.lt()));
    *basis = out;
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub(crate) fn is_groebner(order: &DenseOrder, basis: &[DPoly]) -> bool {
    let red = Reducers::new(basis.iter());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(order, &basis[i], &basis[j]);
            if !red.reduce(order, s, false).is_zero() {
                return false;
            }
        }
    }
    true
}
