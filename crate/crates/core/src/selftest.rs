//! Every property suite of the crate, run up to a bound on `k + l` with a
//! fixed seed. The rendered report depends only on `(max_kl, seed)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::Result;
use crate::groebner::{ideal_equal, GroebnerBasis};
use crate::partitions::{enumerate_box, Partition};
use crate::polycore::{
    det_sum_expansion, det_sum_summands, random_matrix, random_polynomial, Family, Grading, PolyRing,
    Polynomial, RandomShape, VariableId,
};
use crate::qhomology as qh;
use crate::schur;
use crate::soergel::{self, SoergelContext};

/// Outcome of one suite: how many checks ran and which failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
    /// Measured values worth printing whether or not the suite passes.
    pub notes: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub max_kl: usize,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "selftest max-kl={} seed={}", self.max_kl, self.seed);
        for s in &self.suites {
            let verdict = if s.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict} {} ({} checks)", s.name, s.cases);
            for n in &s.notes {
                let _ = writeln!(out, "  note: {n}");
            }
            for f in &s.failures {
                let _ = writeln!(out, "  failed: {f}");
            }
        }
        let passed = self.suites.iter().filter(|s| s.passed()).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict}: {passed}/{} suites passed", self.suites.len());
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_kl": self.max_kl,
            "seed": self.seed,
            "passed": self.passed(),
            "suites": self.suites.iter().map(|s| json!({
                "name": s.name,
                "passed": s.passed(),
                "checks": s.cases,
                "failures": s.failures,
                "notes": s.notes,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Shared inputs: the seed and one context per `(k, l)` with
/// `k + l <= max_kl`.
struct Env {
    seed: u64,
    contexts: Vec<SoergelContext>,
}

impl Env {
    /// Independent stream per suite, so suites may run in any order.
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn shapes(&self) -> impl Iterator<Item = &SoergelContext> {
        self.contexts.iter()
    }
}

type SuiteFn = fn(&Env, ChaCha8Rng) -> Result<SuiteResult>;

const SUITES: &[SuiteFn] = &[
    ring_axioms,
    determinants,
    det_sum,
    serialization,
    substitution,
    partitions,
    schur_oracle,
    schur_identities,
    groebner_health,
    groebner_hilbert,
    soergel_structure,
    soergel_verify,
    soergel_determinant,
    soergel_uniqueness,
    soergel_minors,
    soergel_direct,
    q_numbers,
    q_formulas,
    q_corollary,
    q_recurrences,
];

/// Runs every suite for `k + l <= max_kl`. Refuses bounds needing more than
/// `max_vars` variables in `P` unless `force` is set.
pub fn run_selftest(max_kl: usize, seed: u64, max_vars: usize, force: bool) -> Result<SelftestReport> {
    soergel::check_budget(2 * max_kl, max_vars, force)?;
    let pairs: Vec<(usize, usize)> = (2..=max_kl)
        .flat_map(|s| (1..s).map(move |k| (k, s - k)))
        .collect();
    let contexts = pairs
        .par_iter()
        .map(|&(k, l)| SoergelContext::new(k, l))
        .collect::<Result<Vec<_>>>()?;
    let env = Env { seed, contexts };
    let suites = SUITES
        .par_iter()
        .enumerate()
        .map(|(i, f)| f(&env, env.rng(i as u64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SelftestReport { max_kl, seed, suites })
}

fn small_vars() -> Vec<VariableId> {
    vec![VariableId::x(1), VariableId::x(2), VariableId::y(1), VariableId::yp(1)]
}

fn ring_axioms(_: &Env, mut rng: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("polycore.ring_axioms");
    let vars = small_vars();
    let shape = RandomShape::default();
    for case in 0..100 {
        let a = random_polynomial(&mut rng, &vars, shape);
        let b = random_polynomial(&mut rng, &vars, shape);
        let c = random_polynomial(&mut rng, &vars, shape);
        let ok = &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &a + &Polynomial::zero() == a
            && (&a - &a).is_zero();
        s.check(ok, || format!("case {case}: a={a}, b={b}, c={c}"));
    }
    Ok(s)
}

fn determinants(_: &Env, mut rng: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("polycore.determinant");
    let vars = small_vars();
    let shape = RandomShape { terms: 3, support: 3, max_exp: 1, coeff: 3 };
    for case in 0..40 {
        let n = rng.gen_range(1..=4);
        let m = random_matrix(&mut rng, n, &vars, shape);
        let det = m.determinant()?;
        s.check(det == m.determinant_cofactor()?, || format!("case {case}: fraction-free and cofactor disagree"));
        if n >= 2 {
            let order: Vec<usize> = [1, 0].into_iter().chain(2..n).collect();
            let swapped = m.submatrix(&order, &(0..n).collect::<Vec<_>>());
            s.check(swapped.determinant()? == -det.clone(), || format!("case {case}: not alternating"));
        }
        // linear in the first row
        let extra = random_matrix(&mut rng, n, &vars, shape);
        let mut other = m.clone();
        let mut sum = m.clone();
        for c in 0..n {
            other.set(0, c, extra.get(0, c).clone());
            sum.set(0, c, m.get(0, c) + extra.get(0, c));
        }
        s.check(sum.determinant()? == &det + &other.determinant()?, || format!("case {case}: not multilinear"));
    }
    Ok(s)
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn det_sum(_: &Env, mut rng: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("polycore.det_sum_expansion");
    let vars = small_vars();
    let shape = RandomShape { terms: 2, support: 3, max_exp: 1, coeff: 4 };
    for case in 0..40 {
        let n = rng.gen_range(1..=4);
        let a = random_matrix(&mut rng, n, &vars, shape);
        let b = random_matrix(&mut rng, n, &vars, shape);
        let count = det_sum_summands(&a, &b)?.len() as u64;
        s.check(count == binomial(2 * n as u64, n as u64), || format!("case {case}: {count} summands at size {n}"));
        s.check(det_sum_expansion(&a, &b)? == a.add(&b)?.determinant()?, || format!("case {case}: expansion differs"));
    }
    Ok(s)
}

fn serialization(_: &Env, mut rng: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("polycore.serialization");
    let vars = small_vars();
    for case in 0..100 {
        let p = random_polynomial(&mut rng, &vars, RandomShape::default());
        let via_json = Polynomial::from_json(&p.to_json())?;
        let text = p.to_string();
        let via_text: Polynomial = text.parse()?;
        s.check(via_json == p && via_text == p && via_text.to_string() == text, || {
            format!("case {case}: {text}")
        });
    }
    Ok(s)
}

fn substitution(_: &Env, mut rng: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("polycore.substitute");
    let vars = small_vars();
    let shape = RandomShape { terms: 2, support: 3, max_exp: 1, coeff: 2 };
    for case in 0..30 {
        let p = random_polynomial(&mut rng, &vars, RandomShape::default());
        let f: HashMap<_, _> = vars.iter().map(|&v| (v, random_polynomial(&mut rng, &vars, shape))).collect();
        let g: HashMap<_, _> = vars.iter().map(|&v| (v, random_polynomial(&mut rng, &vars, shape))).collect();
        let composed: HashMap<_, _> = f.iter().map(|(&v, q)| (v, q.substitute(&g))).collect();
        s.check(p.substitute(&f).substitute(&g) == p.substitute(&composed), || format!("case {case}: p={p}"));
    }
    Ok(s)
}

fn partitions(_: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("partitions");
    for k in 0..=6 {
        for l in 0..=6 {
            let all = enumerate_box(k, l);
            s.check(all.len() as u64 == binomial((k + l) as u64, k as u64), || format!("count ({k},{l})"));
            for a in &all {
                let c = a.complement(k, l)?;
                let shape = c.conjugate();
                s.check(
                    a.conjugate().conjugate() == *a
                        && c.complement(k, l)? == *a
                        && a.weight() + c.weight() == (k * l) as u32
                        && shape.fits_box(l, k),
                    || format!("({k},{l}) alpha={:?}", a.parts()),
                );
            }
        }
    }
    Ok(s)
}

/// `x_i -> e_i(z_1, ..., z_n)`.
pub fn expand_in_z(p: &Polynomial, n: usize) -> Polynomial {
    let z: Vec<VariableId> = (1..=n as u32).map(VariableId::z).collect();
    let map: HashMap<_, _> = (1..=n)
        .map(|i| (VariableId::x(i as u32), schur::elementary_in_z(i, &z)))
        .collect();
    p.substitute(&map)
}

/// Partitions with at most `n` parts and weight at most `max_weight`.
pub fn small_partitions(n: usize, max_weight: u32) -> Vec<Partition> {
    enumerate_box(n, max_weight as usize)
        .into_iter()
        .filter(|p| p.weight() <= max_weight)
        .collect()
}

fn schur_oracle(_: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("schur.bialternant_oracle");
    let cases: Vec<(usize, Partition)> = (1..=4)
        .flat_map(|n| small_partitions(n, 8).into_iter().map(move |p| (n, p)))
        .collect();
    let results = cases
        .par_iter()
        .map(|(n, lambda)| {
            let g = schur::schur_giambelli(&lambda.to_multiindex(), *n, Family::X);
            Ok(expand_in_z(&g, *n) == schur::schur_bialternant_oracle(lambda, *n)?)
        })
        .collect::<Result<Vec<bool>>>()?;
    for ((n, lambda), ok) in cases.iter().zip(results) {
        s.check(ok, || format!("n={n} lambda={:?}", lambda.parts()));
    }
    Ok(s)
}

fn schur_identities(_: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("schur.identities");
    let g = Grading::standard();
    for k in 1..=4 {
        for l in 1..=4 {
            for a in enumerate_box(k, l) {
                let idx = a.to_multiindex();
                let p = schur::schur_giambelli(&idx, k, Family::X);
                s.check(p == schur::schur_dual_giambelli(&idx, k, Family::X), || format!("dual k={k} {:?}", a.parts()));
                s.check(
                    p.is_homogeneous(&g) && p.weighted_degree(&g) == Some(2 * a.weight() as u64),
                    || format!("degree {:?}", a.parts()),
                );
            }
        }
    }
    for n in 1..=4 {
        for m in 1..=8 {
            s.check(schur::h_recursion_check(m, n), || format!("h recursion m={m} n={n}"));
        }
        for p in 0..=5 {
            for q in 0..=5 {
                s.check(schur::laplace_identity_check(p, q, n), || format!("laplace p={p} q={q} n={n}"));
            }
        }
    }
    s.check(schur::schur_giambelli(&[1, 2], 3, Family::X).is_zero(), || "increasing index".into());
    s.check(schur::schur_giambelli(&[1, 1, 1], 2, Family::X).is_zero(), || "too many parts".into());
    Ok(s)
}

/// The ideals built for one context: `I`, `P_t`, `(I : y_1 - y'_1)` and, for
/// `k >= l`, the minor ideals `I_j` of `R'`.
pub fn context_ideals(ctx: &SoergelContext) -> Result<Vec<(String, GroebnerBasis)>> {
    let (k, l) = (ctx.k(), ctx.l());
    let mut out = vec![(format!("I({k},{l})"), ctx.gb_i().clone())];
    for t in 1..=l {
        out.push((format!("P_{t}({k},{l})"), ctx.gb_p_t(t)?));
    }
    out.push((format!("(I:y1-yp1)({k},{l})"), ctx.gb_i().colon_ideal(&soergel::y_difference(1))?));
    if k >= l {
        for j in 1..=l {
            out.push((format!("I_{j}({k},{l})"), soergel::minor_ideal_ij(k, l, j)?));
        }
    }
    Ok(out)
}

/// S-pairs reduce to zero and `normal_form` is idempotent on `samples` random
/// elements of the ring of `gb`.
pub fn basis_health(gb: &GroebnerBasis, samples: usize, rng: &mut impl Rng) -> Result<bool> {
    if !gb.s_pairs_reduce_to_zero() {
        return Ok(false);
    }
    let vars = gb.ring().vars().to_vec();
    let shape = RandomShape { terms: 4, support: 4, max_exp: 3, coeff: 5 };
    let mut previous: Option<(Polynomial, Polynomial)> = None;
    for _ in 0..samples {
        let p = random_polynomial(rng, &vars, shape);
        let nf = gb.normal_form(&p)?;
        if gb.normal_form(&nf)? != nf || !gb.ideal_member(&(&p - &nf))? {
            return Ok(false);
        }
        // linearity against the previous sample: nf(2p - 3q) = 2 nf(p) - 3 nf(q)
        if let Some((q, nq)) = &previous {
            let two = Polynomial::integer(2);
            let three = Polynomial::integer(3);
            let combo = &(&two * &p) - &(&three * q);
            if gb.normal_form(&combo)? != &(&two * &nf) - &(&three * nq) {
                return Ok(false);
            }
        }
        previous = Some((p, nf));
    }
    Ok(true)
}

fn groebner_health(env: &Env, mut rng: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("groebner.basis_health");
    for ctx in env.shapes() {
        for (name, gb) in context_ideals(ctx)? {
            let ok = basis_health(&gb, 20, &mut rng)?;
            s.check(ok, || name);
        }
        // every generator q of (I : p) has p q in I
        let p = soergel::y_difference(1);
        let colon = ctx.gb_i().colon_ideal(&p)?;
        let mut ok = true;
        for q in colon.generators() {
            ok &= ctx.gb_i().ideal_member(&(&p * q))?;
        }
        s.check(ok, || format!("colon generators ({},{})", ctx.k(), ctx.l()));
    }
    // random ideals in three variables
    let vars = vec![VariableId::x(1), VariableId::x(2), VariableId::y(1)];
    let ring = PolyRing::new(vars.clone());
    for case in 0..20 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| random_polynomial(&mut rng, &vars, RandomShape { terms: 3, support: 3, max_exp: 2, coeff: 3 }))
            .collect();
        let gb = GroebnerBasis::new(&ring, &gens, &Default::default())?;
        let mut ok = basis_health(&gb, 20, &mut rng)?;
        for g in &gens {
            ok &= gb.ideal_member(g)?;
        }
        s.check(ok, || format!("random ideal {case}"));
    }
    Ok(s)
}

fn groebner_hilbert(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("groebner.hilbert_series");
    let g = Grading::standard();
    // the generators of I, of degrees 2, 4, ..., 2(k+l), form a regular sequence
    for ctx in env.shapes().filter(|c| c.k() + c.l() <= 4) {
        let (k, l) = (ctx.k(), ctx.l());
        let num = (1..=(k + l) as i64).fold(crate::groebner::LaurentPoly::one(), |acc, i| {
            &acc * &crate::groebner::LaurentPoly::one_minus_q(2 * i)
        });
        let free = &qh::qdim_rprime(k, l) * &qh::qdim_rprime(k, l);
        let expected = &crate::groebner::GradedSeries::polynomial(num) * &free;
        s.check(ctx.gb_i().hilbert_series(&g)? == expected, || format!("regular sequence ({k},{l})"));
    }
    for k in 1..=4 {
        for l in 1..=4 {
            let free = GroebnerBasis::new(&PolyRing::unprimed(k, l), &[], &Default::default())?;
            s.check(free.hilbert_series(&g)? == qh::qdim_rprime(k, l), || format!("free ring ({k},{l})"));
        }
    }
    // <x_1^2> in C[x_1, x_2]: (1 - q^4) / ((1 - q^2)(1 - q^4))
    let x1 = Polynomial::var(VariableId::x(1));
    let gb = GroebnerBasis::new(&PolyRing::unprimed(2, 0), &[&x1 * &x1], &Default::default())?;
    let expected = &qh::quantum_int(2) * &crate::groebner::GradedSeries::free(vec![4]);
    s.check(gb.hilbert_series(&g)? == expected, || "<x1^2>".into());
    Ok(s)
}

fn soergel_structure(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("soergel.structure");
    let g = Grading::standard();
    for ctx in env.shapes() {
        let (k, l) = (ctx.k(), ctx.l());
        let gens = soergel::ideal_i_generators(k, l);
        s.check(gens.len() == k + l, || format!("generator count ({k},{l})"));
        for (i, p) in gens.iter().enumerate() {
            s.check(
                p.is_homogeneous(&g) && p.weighted_degree(&g) == Some(2 * (i as u64 + 1)),
                || format!("generator {} of ({k},{l})", i + 1),
            );
        }
        let delta = soergel::delta_formula(k, l);
        s.check(delta.len() as u64 == binomial((k + l) as u64, k as u64), || format!("term count ({k},{l})"));
        for t in &delta.terms {
            let d = t.left.weighted_degree(&g).unwrap_or(0) + t.right.weighted_degree(&g).unwrap_or(0);
            s.check(d == 2 * (k * l) as u64, || format!("term degree ({k},{l}) {:?}", t.alpha.parts()));
        }
    }
    Ok(s)
}

fn soergel_verify(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("soergel.verify_bimodule");
    for ctx in env.shapes() {
        let r = soergel::verify_bimodule(ctx)?;
        s.check(r.passed(), || format!("({},{}): {:?}", r.k, r.l, r));
    }
    Ok(s)
}

fn soergel_determinant(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("soergel.determinant");
    for ctx in env.shapes() {
        let r = soergel::delta_determinant(ctx)?;
        s.check(r.epsilon.is_some(), || format!("({},{}): det M is not +-f", r.k, r.l));
        if let Some(e) = r.epsilon {
            s.notes.push(format!("({},{}) epsilon={e:+} triangular sign={:+}", r.k, r.l, r.triangular_sign));
        }
        if r.k >= r.l {
            let sdet = soergel::matrix_s(r.k, r.l)?.determinant()?;
            let mp = soergel::matrix_mprime(r.k, r.l)?.determinant()?;
            s.check(sdet.is_one() && mp == r.det, || format!("({},{}): det M' != det M", r.k, r.l));
        }
    }
    Ok(s)
}

fn soergel_uniqueness(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("soergel.kernel_of_y1");
    for ctx in env.shapes() {
        let (k, l) = (ctx.k(), ctx.l());
        let step = soergel::koszul_step(ctx.gb_i(), &soergel::y_difference(1))?;
        let expected = qh::qdim_rprime(k, l).shift(2 * (k * l) as i64, 0);
        s.check(step.kernel == expected, || format!("({k},{l}): kernel {}", step.kernel));
    }
    Ok(s)
}

fn soergel_minors(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("soergel.minor_ideals");
    for ctx in env.shapes().filter(|c| c.k() >= c.l()) {
        let (k, l) = (ctx.k(), ctx.l());
        let rp = ctx.rprime();
        let f = soergel::unprime(&ctx.f());
        let principal = GroebnerBasis::new(&rp, &[f], &Default::default())?;
        s.check(ideal_equal(&soergel::minor_ideal_ij(k, l, l)?, &principal)?, || format!("I_l != <f> ({k},{l})"));
        let mprime = soergel::matrix_mprime(k, l)?;
        for j in 1..=l {
            let a = soergel::minor_ideal_ij(k, l, j)?;
            let b = soergel::minor_ideal_ij_of(&mprime, k, l, j)?;
            s.check(ideal_equal(&a, &b)?, || format!("M vs M' ({k},{l},{j})"));
            let by_basis = &qh::qdim_rprime(k, l) - &a.hilbert_series(&Grading::standard())?;
            s.check(by_basis == qh::qdim_ij_formula(k, l, j)?, || format!("qdim I_{j} ({k},{l})"));
        }
    }
    Ok(s)
}

fn soergel_direct(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("soergel.direct_homology");
    for ctx in env.shapes() {
        let (k, l) = (ctx.k(), ctx.l());
        let direct = soergel::hochschild_direct(ctx)?;
        s.check(direct.annihilated, || format!("({k},{l}): later differentials act"));
        s.check(direct.series == qh::homology_series(k, l)?, || format!("({k},{l}): direct differs from formula"));
    }
    Ok(s)
}

fn q_numbers(_: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("qhomology.quantum_numbers");
    for n in 1..=12 {
        for m in 0..=n {
            s.check(qh::q_pascal_check(n, m), || format!("q-Pascal ({n},{m})"));
        }
    }
    for m in 0..=10 {
        s.check(qh::qbinomial_delta_identity(m), || format!("delta identity m={m}"));
    }
    Ok(s)
}

fn q_formulas(_: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("qhomology.expansions");
    for k in 1..=5 {
        for l in 1..=5 {
            s.check(qh::digon_product(k, l) == qh::digon_expansion(k, l), || format!("expansion ({k},{l})"));
        }
    }
    for k in 1..=4 {
        for l in 1..=k {
            let h = qh::homology_series(k, l)?;
            s.check(h.len() == l + 1 && h[0] == qh::qdim_rprime(k, l), || format!("H_0 ({k},{l})"));
            s.check(qh::max_rule_product_check(k, l)?, || format!("max-rule product ({k},{l})"));
        }
    }
    Ok(s)
}

fn q_corollary(_: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("qhomology.corollary");
    let mut positive = 0;
    for k in 1..=4 {
        for l in 1..=k {
            let r = qh::corollary_check(k, l)?;
            s.check(r.holds && r.expansion_holds, || format!("({k},{l})"));
            positive += r.positive_t_holds as usize;
        }
    }
    s.notes.push(format!("with t^(+i) on the left side: {positive}/10 cases balance"));
    Ok(s)
}

fn q_recurrences(env: &Env, _: ChaCha8Rng) -> Result<SuiteResult> {
    let mut s = SuiteResult::new("qhomology.recurrences");
    for ctx in env.shapes().filter(|c| c.k() + c.l() <= 4) {
        let r = qh::recurrence_checks(ctx)?;
        s.check(r.p_vs_p1, || format!("({},{}) P vs P_1", r.k, r.l));
        s.check(r.shifted.iter().all(|&b| b), || format!("({},{}) shifted form {:?}", r.k, r.l, r.shifted));
        if !r.unshifted.is_empty() {
            s.notes.push(format!("({},{}) unshifted form per t: {:?}", r.k, r.l, r.unshifted));
        }
    }
    Ok(s)
}
