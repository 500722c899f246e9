use gotzmann::classifiers::{mg_classifier, stanley_filter, upp_check, MgError};
use gotzmann::hilbert_data::HilbertFunctionSpec;
use gotzmann::jsonval;
use gotzmann::numerical_poly::c0_via_genus;
use gotzmann::oracle::{lex_segment, verify_suite, MonomialIdeal};
use gotzmann::{expand as expand_value, green_lower, macaulay_upper, NumericalPolynomial};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// A finished command: JSON payload for stdout, optional human summary for
/// stderr, and whether the verdict is negative (exit code 1).
pub struct Outcome {
    pub json: Value,
    pub summary: Option<String>,
    pub negative: bool,
}

impl Outcome {
    fn ok(json: Value) -> Result<Outcome, String> {
        Ok(Outcome {
            json,
            summary: None,
            negative: false,
        })
    }

    fn verdict(json: Value, summary: String, negative: bool) -> Result<Outcome, String> {
        Ok(Outcome {
            json,
            summary: Some(summary),
            negative,
        })
    }
}

fn parse_positive(text: &str, what: &str) -> Result<BigInt, String> {
    let v = BigInt::parse_bytes(text.as_bytes(), 10)
        .ok_or_else(|| format!("{} must be a decimal integer, got {:?}", what, text))?;
    if v < BigInt::from(1) {
        return Err(format!("{} must be positive, got {}", what, v));
    }
    Ok(v)
}

fn load_json(path: &str) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {}", path, e))?;
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON in {}: {}", path, e))
}

pub fn expand(c: &str, d: u32) -> Result<Outcome, String> {
    let c = parse_positive(c, "c")?;
    if d < 1 {
        return Err("d must be positive".into());
    }
    let e = expand_value(&c, d);
    let tuple = e.difference_tuple();
    Outcome::ok(json!({
        "ks": e.ks().iter().map(jsonval::bigint_to_json).collect::<Vec<_>>(),
        "tuple": tuple.to_json(),
        "low": e.low(),
        "length": tuple.len(),
    }))
}

pub fn bound(kind: &str, c: &str, d: u32) -> Result<Outcome, String> {
    let c = BigInt::parse_bytes(c.as_bytes(), 10)
        .ok_or_else(|| format!("c must be a decimal integer, got {:?}", c))?;
    if c < BigInt::from(0) {
        return Err("c must be non-negative".into());
    }
    if d < 1 {
        return Err("d must be positive".into());
    }
    let value = match kind {
        "upper" => macaulay_upper(&c, d),
        "lower" => green_lower(&c, d),
        other => return Err(format!("unknown bound kind {:?}", other)),
    };
    Outcome::ok(json!({
        "kind": kind,
        "c": jsonval::bigint_to_json(&c),
        "d": d,
        "value": jsonval::bigint_to_json(&value),
    }))
}

pub fn poly_analyze(path: &str) -> Result<Outcome, String> {
    let p = NumericalPolynomial::from_json(&load_json(path)?).map_err(|e| e.to_string())?;
    match p.section_tower() {
        Ok(tower) => {
            let c0 = c0_via_genus(&tower);
            let tabulated = BigInt::from(tower[0].coeffs[0]);
            let json = json!({
                "polynomial": p.to_json(),
                "profile": tower[0].to_json(),
                "tower": tower.iter().map(|t| t.to_json()).collect::<Vec<_>>(),
                "c0_via_genus": jsonval::bigint_to_json(&c0),
                "genus_check": c0 == tabulated,
            });
            let summary = format!(
                "G = {}, coefficients {:?}, dim {}, deg {}, genus {}",
                tower[0].g, tower[0].coeffs, tower[0].dim, tower[0].deg, tower[0].genus
            );
            Outcome::verdict(json, summary, false)
        }
        Err(reason) => Outcome::verdict(
            json!({ "kind": "invalid_polynomial", "reason": reason.to_string() }),
            format!("not a Hilbert polynomial: {}", reason),
            true,
        ),
    }
}

pub fn hf_analyze(path: &str) -> Result<Outcome, String> {
    let spec = HilbertFunctionSpec::from_json(&load_json(path)?).map_err(|e| e.to_string())?;
    let report = spec.growth_report();
    let summary = match report.m_of_x {
        Some(m) => format!("G = {}, M = {}", report.g_of_x, m),
        None => format!("G = {} (M undefined: data not marked saturated)", report.g_of_x),
    };
    Outcome::verdict(report.to_json(), summary, false)
}

pub fn classify_stanley(path: &str) -> Result<Outcome, String> {
    let p = NumericalPolynomial::from_json(&load_json(path)?).map_err(|e| e.to_string())?;
    let verdict = stanley_filter(&p);
    let summary = verdict.kind().to_string();
    let negative = verdict.is_negative();
    Outcome::verdict(verdict.to_json(), summary, negative)
}

pub fn classify_upp(path: &str, ambient: u32) -> Result<Outcome, String> {
    if ambient < 1 {
        return Err("ambient must be at least 1".into());
    }
    let v = load_json(path)?;
    let h = match v.get("h") {
        Some(inner) => jsonval::bigints_from_json(inner),
        None => jsonval::bigints_from_json(&v),
    }
    .map_err(|e| e.to_string())?;
    let verdict = upp_check(&h, ambient);
    let summary = verdict.kind().to_string();
    let negative = verdict.is_negative();
    Outcome::verdict(verdict.to_json(), summary, negative)
}

pub fn classify_mg(path: &str) -> Result<Outcome, String> {
    let spec = HilbertFunctionSpec::from_json(&load_json(path)?).map_err(|e| e.to_string())?;
    match mg_classifier(&spec) {
        Ok(verdict) => {
            let summary = verdict.kind().to_string();
            let negative = verdict.is_negative();
            Outcome::verdict(verdict.to_json(), summary, negative)
        }
        Err(MgError::NotSaturated) => Err("the dichotomy needs a saturated spec".into()),
        Err(e) => Err(e.to_string()),
    }
}

pub fn oracle_lex(path: &str) -> Result<Outcome, String> {
    let v = load_json(path)?;
    let values = jsonval::bigints_from_json(jsonval::field(&v, "prefix").map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let ambient = jsonval::field(&v, "ambient")
        .and_then(jsonval::usize_from_json)
        .map_err(|e| e.to_string())? as u32;
    match lex_segment(&values, ambient) {
        Ok(lex) => Outcome::ok(json!({
            "ideal": lex.ideal().to_json(),
            "max_gen_degree": lex.max_gen_degree(),
            "built_through": lex.built_through(),
        })),
        Err(e) => Outcome::verdict(
            json!({ "kind": "inadmissible", "reason": e.to_string() }),
            e.to_string(),
            true,
        ),
    }
}

pub fn oracle_hilbert(path: &str, degree: u32) -> Result<Outcome, String> {
    let ideal = MonomialIdeal::from_json(&load_json(path)?).map_err(|e| e.to_string())?;
    Outcome::ok(json!({
        "degree": degree,
        "value": ideal.hilbert_value(degree),
    }))
}

pub fn oracle_verify(path: &str, horizon: usize, seed: u64) -> Result<Outcome, String> {
    if horizon < 2 {
        return Err("horizon must be at least 2".into());
    }
    let ideal = MonomialIdeal::from_json(&load_json(path)?).map_err(|e| e.to_string())?;
    let report = verify_suite(&ideal, horizon, seed);
    let negative = !report.all_passed();
    let summary = if negative {
        format!("{} check(s) failed", report.failures().len())
    } else {
        "all checks passed".to_string()
    };
    Outcome::verdict(report.to_json(), summary, negative)
}

