//! Randomized verification of the growth bounds and persistence identities
//! on a monomial ideal: Macaulay's bound, Green's bound via exact-rank
//! generic restriction, persistence of maximal growth, and the saturation
//! formula for the persistence index.

use super::ideal::{hilbert_polynomial_of, MonomialIdeal};
use super::restriction::generic_restriction;
use crate::combinatorics::{green_lower, macaulay_upper};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// The generic-restriction draws are a documented probabilistic shortcut:
/// genericity is an open condition and two agreeing independent draws are
/// accepted, with a hard error on persistent disagreement.
const GENERIC_NOTE: &str = "Green checks use random integer linear forms; two agreeing \
independent draws are accepted as the generic value";

/// How far beyond the requested horizon the saturation comparison may extend
/// before giving up.
const EXTENSION_CAP: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn name(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub kind: &'static str,
    pub degree: Option<usize>,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "degree": self.degree,
            "status": self.status.name(),
            "detail": self.detail,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub horizon: usize,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .collect()
    }

    /// Count of Green checks that were exact equalities / strict inequalities.
    pub fn green_tally(&self) -> (usize, usize) {
        let mut equal = 0;
        let mut strict = 0;
        for c in &self.checks {
            if c.kind == "green_bound" && c.status == CheckStatus::Pass {
                if c.detail.contains("equality") {
                    equal += 1;
                } else {
                    strict += 1;
                }
            }
        }
        (equal, strict)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "horizon": self.horizon,
            "seed": self.seed,
            "all_passed": self.all_passed(),
            "checks": self.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "note": GENERIC_NOTE,
        })
    }
}

/// Least `d >= 1` such that `H(t+1) = H(t)^<t>` for every `t` in
/// `[d, len - 2]`; `len - 1` past the end when even the last step fails.
pub fn persistence_index_scan(values: &[BigInt]) -> usize {
    let mut index = values.len().saturating_sub(1);
    for t in (1..values.len().saturating_sub(1)).rev() {
        if values[t + 1] == macaulay_upper(&values[t], t as u32) {
            index = t;
        } else {
            break;
        }
    }
    index
}

fn seed_for_degree(seed: u64, d: usize) -> u64 {
    seed.wrapping_add((d as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Run the full desk-scale check suite on one ideal:
///
/// 1. Macaulay's growth bound at every degree below the horizon;
/// 2. Green's restriction bound against the exact generic restriction;
/// 3. Gotzmann persistence wherever its generation-degree hypothesis holds;
/// 4. the saturation formula: the persistence index of `R/I` equals
///    `max(persistence index of R/I^sat, saturation degree of I)`, with the
///    comparison window extended past the horizon as needed.
pub fn verify_suite(ideal: &MonomialIdeal, horizon: usize, seed: u64) -> VerificationReport {
    let mut checks = Vec::new();
    let values = ideal.hilbert_values(horizon);

    // (1) Macaulay bound.
    for d in 1..horizon {
        let bound = macaulay_upper(&values[d], d as u32);
        let ok = values[d + 1] <= bound;
        checks.push(CheckRecord {
            kind: "macaulay_bound",
            degree: Some(d),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("H({}) = {} vs bound {}", d + 1, values[d + 1], bound),
        });
    }

    // (2) Green bound via generic restriction.
    for d in 1..horizon {
        match generic_restriction(ideal, d as u32, seed_for_degree(seed, d)) {
            Ok(restricted) => {
                let bound = green_lower(&values[d], d as u32);
                let restricted = BigInt::from(restricted);
                let ok = restricted <= bound;
                let relation = if restricted == bound { "equality" } else { "strict" };
                checks.push(CheckRecord {
                    kind: "green_bound",
                    degree: Some(d),
                    status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
                    detail: format!("restriction {} vs bound {} ({})", restricted, bound, relation),
                });
            }
            Err(e) => checks.push(CheckRecord {
                kind: "green_bound",
                degree: Some(d),
                status: CheckStatus::Skipped,
                detail: e.to_string(),
            }),
        }
    }

    // (3) Gotzmann persistence: generated in degrees <= d+1 and maximal
    // growth at d force maximal growth from d on.
    let maxdeg = ideal.max_gen_degree() as usize;
    for d in 1..horizon {
        if maxdeg > d + 1 {
            continue;
        }
        if values[d + 1] != macaulay_upper(&values[d], d as u32) {
            continue;
        }
        let violation = (d..horizon)
            .find(|&t| values[t + 1] != macaulay_upper(&values[t], t as u32));
        checks.push(CheckRecord {
            kind: "gotzmann_persistence",
            degree: Some(d),
            status: if violation.is_none() { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: match violation {
                None => format!("maximal growth persists from {} through {}", d, horizon),
                Some(t) => format!("maximal growth at {} broken at {}", d, t),
            },
        });
    }

    // (4) Persistence index vs saturation formula.
    checks.push(saturation_formula_check(ideal, horizon));

    VerificationReport {
        horizon,
        seed,
        checks,
    }
}

fn saturation_formula_check(ideal: &MonomialIdeal, horizon: usize) -> CheckRecord {
    let sat = ideal.saturate();
    // Find a horizon at which the saturation comparison stabilizes.
    let base = horizon
        .max(ideal.max_gen_degree() as usize)
        .max(sat.max_gen_degree() as usize);
    let mut sat_degree = None;
    for ext in base..=base + EXTENSION_CAP {
        if let Ok(r) = ideal.saturation_degree(ext) {
            sat_degree = Some(r);
            break;
        }
    }
    let sat_degree = match sat_degree {
        Some(r) => r,
        None => {
            return CheckRecord {
                kind: "saturation_formula",
                degree: None,
                status: CheckStatus::Skipped,
                detail: format!(
                    "saturation agreement did not stabilize within {} degrees",
                    base + EXTENSION_CAP
                ),
            }
        }
    };
    // Size the scan window generously: past the saturation degree and past
    // the Gotzmann number of the saturated quotient's polynomial.
    let sat_g = hilbert_polynomial_of(&sat)
        .ok()
        .filter(|p| !p.is_zero())
        .and_then(|p| p.gotzmann_decompose().ok())
        .map(|t| t.len())
        .unwrap_or(1);
    let window = (horizon.max(sat_degree).max(sat_g) + 2).max(base);
    let full_scan = persistence_index_scan(&ideal.hilbert_values(window));
    let sat_scan = persistence_index_scan(&sat.hilbert_values(window));
    let expected = sat_scan.max(sat_degree);
    CheckRecord {
        kind: "saturation_formula",
        degree: None,
        status: if full_scan == expected { CheckStatus::Pass } else { CheckStatus::Fail },
        detail: format!(
            "persistence index {} vs max(sat index {}, sat degree {})",
            full_scan, sat_scan, sat_degree
        ),
    }
}
