//! Text and JSON renderings of reports.
//!
//! Text output is line oriented, `key: value`. JSON carries every
//! polynomial twice: as display text and as an ascending coefficient array
//! (`"p/q"` strings for rationals, `{"re", "im"}` objects for Q(i)).

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::diag::{DiagnosisReport, Verdict};
use crate::exact::{rational_string, GaussianRational, Rational, Ring};
use crate::family::{CandidateSource, ExceptionalLocus, FamilyPoly, RegionCensus};
use crate::poly::{isolate_real_roots, rational_root_in, Poly, RootInterval, PARAM_VAR, SPECTRAL_VAR};

type G = GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn linear_factor(var: &str, r: &Rational) -> String {
    if r.is_zero() {
        return var.to_string();
    }
    let neg = Ring::neg(r);
    if r > &neg {
        format!("({var} - {})", rational_string(r))
    } else {
        format!("({var} + {})", rational_string(&neg))
    }
}

/// `p` with its rational linear factors pulled out, e.g. `(λ - 1)^2(λ - 2)`.
/// Whatever is left is printed expanded.
pub fn factored(p: &Poly<G>, var: &str) -> String {
    if p.is_constant() || !p.has_real_coeffs() {
        return p.display(var).to_string();
    }
    let (re, _) = p.split_re_im();
    let lead = re.leading().expect("nonconstant").clone();
    let mut rest = re.monic();
    let mut pieces = Vec::new();
    let sqf = rest.squarefree_part().expect("nonconstant");
    let width = Rational::from_integer(1.into());
    for iv in isolate_real_roots(&sqf, &width).expect("valid width") {
        let Some(r) = rational_root_in(&sqf, &iv).expect("isolating interval") else {
            continue;
        };
        let lin = Poly::linear_root(&r);
        let mut k = 0;
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            k += 1;
        }
        let base = linear_factor(var, &r);
        pieces.push(if k > 1 { format!("{base}^{k}") } else { base });
    }
    if !rest.is_constant() {
        let text = Poly::from_real(&rest).display(var).to_string();
        pieces.push(if pieces.is_empty() && lead.is_one() {
            text
        } else {
            format!("({text})")
        });
    }
    let body = pieces.concat();
    if lead.is_one() {
        body
    } else {
        format!("{}*{body}", rational_string(&lead))
    }
}

fn rational_json(q: &Rational) -> Value {
    Value::String(rational_string(q))
}

fn gaussian_json(g: &G) -> Value {
    json!({ "re": rational_string(&g.re), "im": rational_string(&g.im) })
}

pub fn poly_json(p: &Poly<G>) -> Value {
    Value::Array(p.coeffs().iter().map(gaussian_json).collect())
}

pub fn real_poly_json(p: &Poly<Rational>) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

pub fn family_poly_json(p: &FamilyPoly) -> Value {
    Value::Array(p.coeffs().iter().map(poly_json).collect())
}

fn approx(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn interval_json(iv: &RootInterval) -> Value {
    json!({
        "lo": rational_string(&iv.lo),
        "hi": rational_string(&iv.hi),
        "approx": approx(&((&iv.lo + &iv.hi) / Rational::from_integer(2.into()))),
    })
}

fn interval_text(iv: &RootInterval) -> String {
    let mid = (&iv.lo + &iv.hi) / Rational::from_integer(2.into());
    format!("{iv} ~ {:.6}", approx(&mid))
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn real_text(p: &Poly<Rational>) -> String {
    Poly::from_real(p).display(PARAM_VAR).to_string()
}

pub fn diagnosis_text(r: &DiagnosisReport) -> String {
    let v = SPECTRAL_VAR;
    let mut out = Vec::new();
    if let Some(e) = &r.parameter {
        out.push(format!("eps: {}", rational_string(e)));
    }
    out.push(format!("char_poly: {}", factored(&r.char_poly, v)));
    out.push(format!("d: {}", factored(&r.d_poly, v)));
    out.push(format!("min_poly: {}", factored(&r.min_poly, v)));
    out.push(format!("p = d * m check: {}", ok(r.factorization_holds())));
    out.push(format!("witness gcd: {}", factored(&r.witness, v)));
    out.push(format!("pt_status: {}", r.pt_status));
    out.push(format!(
        "realness: {}",
        if r.realness_ok {
            "ok"
        } else if r.realness_violated() {
            "VIOLATED"
        } else {
            "non-real coefficients"
        }
    ));
    out.push(verdict_line(r));
    out.join("\n") + "\n"
}

fn verdict_line(r: &DiagnosisReport) -> String {
    match r.verdict {
        Verdict::Diagonalizable => format!("verdict: diagonalizable, m = {}", factored(&r.min_poly, SPECTRAL_VAR)),
        Verdict::Defective => format!(
            "verdict: defective, witness gcd = {}",
            factored(&r.witness, SPECTRAL_VAR)
        ),
    }
}

pub fn diagnosis_json(r: &DiagnosisReport) -> Value {
    let v = SPECTRAL_VAR;
    let mut obj = json!({
        "kind": "analysis",
        "char_poly": r.char_poly.display(v).to_string(),
        "char_poly_coeffs": poly_json(&r.char_poly),
        "d": r.d_poly.display(v).to_string(),
        "d_coeffs": poly_json(&r.d_poly),
        "min_poly": r.min_poly.display(v).to_string(),
        "min_poly_coeffs": poly_json(&r.min_poly),
        "min_poly_factored": factored(&r.min_poly, v),
        "witness": r.witness.display(v).to_string(),
        "witness_coeffs": poly_json(&r.witness),
        "factorization_ok": r.factorization_holds(),
        "verdict": r.verdict.to_string(),
        "pt_status": r.pt_status.to_string(),
        "realness_ok": r.realness_ok,
    });
    if let Some(e) = &r.parameter {
        obj["eps"] = rational_json(e);
    }
    obj
}

fn source_name(s: CandidateSource) -> &'static str {
    match s {
        CandidateSource::Locus => "locus",
        CandidateSource::Degeneracy => "degeneracy",
    }
}

fn census_line(c: &RegionCensus) -> String {
    format!(
        "census eps = {}: n_real: {}, complex_pairs: {}, defective: {}",
        rational_string(&c.sample),
        c.n_real,
        c.n_complex_pairs,
        if c.defective_at_sample { "yes" } else { "no" }
    )
}

pub fn family_text(l: &ExceptionalLocus, census: &[RegionCensus]) -> String {
    let v = SPECTRAL_VAR;
    let g = &l.generic;
    let mut out = vec![
        format!("char_poly: {}", g.char_poly.display(v)),
        format!("d: {}", g.d.display(v)),
        format!("min_poly: {}", g.m.display(v)),
    ];
    out.push(if l.generically_defective {
        "locus: 0 (defective for every eps)".to_string()
    } else if l.is_empty() {
        format!("locus: {} (no exceptional candidates)", real_text(&l.locus))
    } else {
        format!("locus: {}", real_text(&l.locus))
    });
    out.push(format!("real locus roots: {}", l.real_root_intervals.len()));
    for iv in &l.real_root_intervals {
        out.push(format!("root interval: {}", interval_text(iv)));
    }
    for q in &l.degeneracy_polys {
        out.push(format!("degeneracy: {}", real_text(q)));
    }
    for r in &l.confirmed_defective {
        out.push(format!(
            "confirmed defective: eps = {}, m = {}, witness gcd = {}",
            rational_string(r.parameter.as_ref().expect("pointwise report")),
            factored(&r.min_poly, v),
            factored(&r.witness, v)
        ));
    }
    for e in &l.cleared {
        out.push(format!("cleared: eps = {} (diagonalizable)", rational_string(e)));
    }
    for c in &l.unconfirmed_candidates {
        out.push(format!(
            "unconfirmed candidate: {} [{}]",
            interval_text(&c.interval),
            source_name(c.source)
        ));
    }
    out.extend(census.iter().map(census_line));
    out.join("\n") + "\n"
}

pub fn census_json(c: &RegionCensus) -> Value {
    json!({
        "sample": rational_json(&c.sample),
        "n_real": c.n_real,
        "complex_pairs": c.n_complex_pairs,
        "defective": c.defective_at_sample,
    })
}

pub fn family_json(l: &ExceptionalLocus, census: &[RegionCensus]) -> Value {
    let v = SPECTRAL_VAR;
    let g = &l.generic;
    json!({
        "kind": "family",
        "char_poly": g.char_poly.display(v).to_string(),
        "char_poly_coeffs": family_poly_json(&g.char_poly),
        "d": g.d.display(v).to_string(),
        "d_coeffs": family_poly_json(&g.d),
        "min_poly": g.m.display(v).to_string(),
        "min_poly_coeffs": family_poly_json(&g.m),
        "locus": real_text(&l.locus),
        "locus_coeffs": real_poly_json(&l.locus),
        "generically_defective": l.generically_defective,
        "degeneracy_polys": l.degeneracy_polys.iter().map(|q| json!({
            "poly": real_text(q),
            "coeffs": real_poly_json(q),
        })).collect::<Vec<_>>(),
        "real_root_intervals": l.real_root_intervals.iter().map(interval_json).collect::<Vec<_>>(),
        "confirmed_defective": l.confirmed_defective.iter().map(diagnosis_json).collect::<Vec<_>>(),
        "cleared": l.cleared.iter().map(rational_json).collect::<Vec<_>>(),
        "unconfirmed_candidates": l.unconfirmed_candidates.iter().map(|c| {
            let mut o = interval_json(&c.interval);
            o["source"] = json!(source_name(c.source));
            o
        }).collect::<Vec<_>>(),
        "census": census.iter().map(census_json).collect::<Vec<_>>(),
    })
}

/// One named cross-check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub ok: bool,
}

pub fn oracle_text(checks: &[OracleCheck]) -> String {
    let mut out: Vec<String> = checks
        .iter()
        .map(|c| format!("check {}: {}", c.name, ok(c.ok)))
        .collect();
    out.push(format!(
        "oracle: {}",
        if checks.iter().all(|c| c.ok) {
            "agree"
        } else {
            "DISAGREE"
        }
    ));
    out.join("\n") + "\n"
}

pub fn oracle_json(checks: &[OracleCheck]) -> Value {
    json!({
        "kind": "oracle",
        "checks": checks.iter().map(|c| json!({ "name": c.name, "ok": c.ok })).collect::<Vec<_>>(),
        "all_ok": checks.iter().all(|c| c.ok),
    })
}

pub fn json_string(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}
