//! One function per subcommand. Each returns the text rendering, the JSON
//! rendering and whether every check passed.

use std::fmt::Write as _;

use serde_json::{json, Value};
use soergel_core::groebner::{GradedSeries, GroebnerBasis};
use soergel_core::polycore::{Grading, PolyRing};
use soergel_core::qhomology as qh;
use soergel_core::selftest::run_selftest;
use soergel_core::soergel::{self, SoergelContext};
use soergel_core::{Error, Result};

use crate::Target;

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

/// `H_0`, `H_-1`, ...
fn group(i: usize) -> String {
    if i == 0 {
        "H_0".to_string()
    } else {
        format!("H_-{i}")
    }
}

fn series_json(s: &[GradedSeries]) -> Value {
    Value::Array(s.iter().map(GradedSeries::to_json).collect())
}

pub fn delta((k, l): (usize, usize)) -> Result<Outcome> {
    let d = soergel::delta_formula(k, l);
    let f = d.to_p();
    let degree = f.weighted_degree(&Grading::standard());
    let degree_text = degree.map_or("undefined".to_string(), |d| d.to_string());
    Ok(Outcome {
        text: format!("{d}\ncount={}\ndegree={degree_text}\n", d.len()),
        json: json!({
            "k": k,
            "l": l,
            "terms": d.to_json(),
            "count": d.len(),
            "degree": degree,
            "p_image": f.to_json(),
        }),
        ok: true,
    })
}

/// `qdim I_j` from its Gröbner basis against the closed formula, and
/// `I_l = <f>`, on the shape with `k >= l`.
fn minor_checks(k: usize, l: usize) -> Result<(Vec<bool>, bool)> {
    let (k, l) = (k.max(l), k.min(l));
    let g = Grading::standard();
    let rprime = qh::qdim_rprime(k, l);
    let mut formula = Vec::new();
    for j in 1..=l {
        let gb = soergel::minor_ideal_ij(k, l, j)?;
        formula.push(&rprime - &gb.hilbert_series(&g)? == qh::qdim_ij_formula(k, l, j)?);
    }
    let f = soergel::unprime(&soergel::delta_formula(k, l).to_p());
    let principal = GroebnerBasis::new(&PolyRing::unprimed(k, l), &[f], &Default::default())?;
    let top = soergel_core::groebner::ideal_equal(&soergel::minor_ideal_ij(k, l, l)?, &principal)?;
    Ok((formula, top))
}

pub fn verify((k, l): (usize, usize), force: bool) -> Result<Outcome> {
    let ctx = SoergelContext::with_limit(k, l, soergel::max_vars(), force)?;
    let r = soergel::verify_bimodule(&ctx)?;
    let det = soergel::delta_determinant(&ctx)?;
    let (formula, top) = minor_checks(k, l)?;
    let ok = r.passed() && det.epsilon.is_some() && formula.iter().all(|&b| b) && top;

    let mut t = String::new();
    let _ = writeln!(t, "verify k={k} l={l}");
    let _ = writeln!(t, "delta terms: {}", r.delta_terms);
    let degree = r.degree.map_or("undefined".to_string(), |d| d.to_string());
    let _ = writeln!(
        t,
        "degree of f: {degree} (expected {}), homogeneous: {}",
        r.expected_degree(),
        yes(r.homogeneous)
    );
    for (j, m) in r.membership.iter().enumerate() {
        let _ = writeln!(t, "(y{0} - yp{0}) f in I: {1}", j + 1, yes(*m));
    }
    let _ = writeln!(t, "f nonzero in P: {}", yes(r.f_nonzero));
    let eps = det.epsilon.map_or("none".to_string(), |e| format!("{e:+}"));
    let swapped = if det.swapped { " (x and y exchanged, modulo I)" } else { "" };
    let _ = writeln!(
        t,
        "det M = epsilon f{swapped}: epsilon={eps}, triangular sign {:+} ({})",
        det.triangular_sign,
        if det.sign_agrees() { "agrees" } else { "differs" }
    );
    for (j, b) in formula.iter().enumerate() {
        let _ = writeln!(t, "qdim I_{} matches its closed formula: {}", j + 1, yes(*b));
    }
    let _ = writeln!(t, "I_l = <f>: {}", yes(top));
    let _ = writeln!(t, "result: {}", verdict(ok));

    let mut j = r.to_json();
    j["sign_epsilon"] = json!(det.epsilon);
    j["sign_paper"] = json!(det.triangular_sign);
    j["determinant_swapped"] = json!(det.swapped);
    j["minor_ideal_formula"] = json!(formula);
    j["top_minor_ideal_is_f"] = json!(top);
    j["passed"] = json!(ok);
    Ok(Outcome { text: t, json: j, ok })
}

pub fn homology((k, l): (usize, usize), direct: bool, force: bool) -> Result<Outcome> {
    let h = qh::homology_series(k, l)?;
    let cor = qh::corollary_check(k.max(l), k.min(l))?;
    let mut ok = cor.holds && cor.expansion_holds;
    let mut t = String::new();
    if k < l {
        let _ = writeln!(t, "(k < l: computed for k={l}, l={k})");
    }
    for (i, s) in h.iter().enumerate() {
        let _ = writeln!(t, "{} = {s}", group(i));
    }
    let _ = writeln!(t, "euler characteristic: {}", cor.lhs);
    let _ = writeln!(t, "corollary: {}", verdict(cor.holds && cor.expansion_holds));
    let mut j = json!({
        "k": k,
        "l": l,
        "homology": series_json(&h),
        "corollary": {
            "holds": cor.holds,
            "expansion_holds": cor.expansion_holds,
            "positive_t_holds": cor.positive_t_holds,
            "lhs": cor.lhs.to_json(),
            "rhs": cor.rhs.to_json(),
        },
    });
    if direct {
        let ctx = SoergelContext::with_limit(k, l, soergel::max_vars(), force)?;
        let d = soergel::hochschild_direct(&ctx)?;
        let agree = d.series == h;
        ok &= agree;
        for (i, (a, b)) in d.series.iter().zip(&h).enumerate() {
            let _ = writeln!(t, "direct {} = {a} ({})", group(i), if a == b { "agrees" } else { "differs" });
        }
        let _ = writeln!(t, "formula and direct computation agree: {}", yes(agree));
        j["direct"] = json!({
            "homology": series_json(&d.series),
            "agrees": agree,
            "annihilated": d.annihilated,
        });
    }
    j["passed"] = json!(ok);
    Ok(Outcome { text: t, json: j, ok })
}

pub fn hilbert(
    (k, l): (usize, usize),
    target: Target,
    t: usize,
    j: usize,
    expand: Option<i64>,
    force: bool,
) -> Result<Outcome> {
    let g = Grading::standard();
    let limit = soergel::max_vars();
    let mut extra = json!({});
    let mut ok = true;
    let (label, series) = match target {
        Target::P => {
            let ctx = SoergelContext::with_limit(k, l, limit, force)?;
            (format!("qdim P_{t}"), ctx.qdim_p_t(t)?)
        }
        Target::Rprime => {
            soergel::check_budget(k + l, limit, force)?;
            let gb = GroebnerBasis::new(&PolyRing::unprimed(k, l), &[], &Default::default())?;
            ("qdim R'".to_string(), gb.hilbert_series(&g)?)
        }
        Target::Ij => {
            soergel::check_budget(k + l, limit, force)?;
            if k < l {
                return Err(Error::NeedsKAtLeastL { k, l });
            }
            let quotient = soergel::minor_ideal_ij(k, l, j)?.hilbert_series(&g)?;
            let ideal = &qh::qdim_rprime(k, l) - &quotient;
            ok = ideal == qh::qdim_ij_formula(k, l, j)?;
            extra = json!({"ideal": ideal.normalized().to_json(), "matches_formula": ok});
            (format!("qdim R'/I_{j}"), quotient)
        }
    };
    let series = series.normalized();
    let mut text = format!("{label} = {series}\n");
    if let Value::Object(m) = &extra {
        if let Some(Value::Bool(b)) = m.get("matches_formula") {
            let _ = writeln!(text, "qdim I_{j} matches its closed formula: {}", yes(*b));
        }
    }
    let mut coefficients = Vec::new();
    if let Some(max_q) = expand {
        for ((a, b), c) in series.expand(max_q) {
            let _ = writeln!(text, "  q^{a} t^{b}: {c}");
            coefficients.push(json!({"q": a, "t": b, "c": c.to_string()}));
        }
    }
    let mut out = json!({
        "k": k,
        "l": l,
        "target": label,
        "series": series.to_json(),
    });
    if expand.is_some() {
        out["expansion"] = Value::Array(coefficients);
    }
    if let Value::Object(m) = extra {
        for (key, v) in m {
            out[key] = v;
        }
    }
    Ok(Outcome { text, json: out, ok })
}

pub fn selftest(max_kl: usize, seed: u64, force: bool) -> Result<Outcome> {
    let r = run_selftest(max_kl, seed, soergel::max_vars(), force)?;
    Ok(Outcome {
        text: r.render_text(),
        json: r.to_json(),
        ok: r.passed(),
    })
}
