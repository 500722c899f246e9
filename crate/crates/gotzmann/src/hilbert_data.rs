//! Finite Hilbert-function data with an eventual polynomial tail:
//! admissibility (Macaulay's growth theorem), maximal-growth scanning, and
//! the data-level invariants `G` (persistence of maximal growth) and `M`
//! (persistence of equality in Green's restriction bound).

use crate::combinatorics::{difference_tuple, green_lower, macaulay_upper};
use crate::jsonval::{self, JsonError};
use crate::numerical_poly::{InvalidPolynomial, NumericalPolynomial};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;

/// Construction errors for [`HilbertFunctionSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    EmptyPrefix,
    /// `prefix[0]` must be 1 for a standard graded algebra.
    FirstValueNotOne,
    /// `prefix[1]` exceeds `ambient + 1`.
    TooManyLinearForms { got: BigInt, ambient: u32 },
    NegativeValue { index: usize },
    /// `tail_from` must be at most the last prefix index.
    TailFromBeyondPrefix { tail_from: usize, last: usize },
    /// Prefix and tail disagree at an index in `[tail_from, T]`.
    PrefixTailMismatch { index: usize },
    /// The tail is not the Hilbert polynomial of anything.
    InvalidTail(InvalidPolynomial),
    /// The prefix must reach `max(tail_from, g)`; invariant scans would
    /// otherwise be guesses.
    PrefixTooShort { needed: usize, got: usize },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::EmptyPrefix => write!(f, "prefix must be non-empty"),
            SpecError::FirstValueNotOne => write!(f, "H(0) must be 1"),
            SpecError::TooManyLinearForms { got, ambient } => {
                write!(f, "H(1) = {} exceeds ambient bound {}", got, ambient + 1)
            }
            SpecError::NegativeValue { index } => write!(f, "H({}) is negative", index),
            SpecError::TailFromBeyondPrefix { tail_from, last } => {
                write!(f, "tail_from = {} exceeds last prefix index {}", tail_from, last)
            }
            SpecError::PrefixTailMismatch { index } => {
                write!(f, "prefix disagrees with tail at degree {}", index)
            }
            SpecError::InvalidTail(inner) => write!(f, "tail polynomial: {}", inner),
            SpecError::PrefixTooShort { needed, got } => {
                write!(f, "prefix must reach degree {} but stops at {}", needed, got)
            }
        }
    }
}

impl std::error::Error for SpecError {}

/// A Hilbert function given as a finite prefix `H(0), ..., H(T)` plus an
/// eventual polynomial tail valid from `tail_from <= T`, in ambient `P^n`.
///
/// Construction enforces: `H(0) = 1`, `H(1) <= n + 1`, prefix/tail agreement
/// on `[tail_from, T]`, a decomposable tail, and `T >= max(tail_from, g)`
/// where `g` is the tail's Gotzmann number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunctionSpec {
    prefix: Vec<BigInt>,
    tail: NumericalPolynomial,
    tail_from: usize,
    ambient: u32,
    saturated: bool,
    /// Gotzmann number of the tail, cached at construction.
    tail_g: usize,
}

impl HilbertFunctionSpec {
    pub fn new(
        prefix: Vec<BigInt>,
        tail: NumericalPolynomial,
        tail_from: usize,
        ambient: u32,
        saturated: bool,
    ) -> Result<Self, SpecError> {
        if prefix.is_empty() {
            return Err(SpecError::EmptyPrefix);
        }
        if !prefix[0].is_one() {
            return Err(SpecError::FirstValueNotOne);
        }
        for (i, v) in prefix.iter().enumerate() {
            if v.is_negative() {
                return Err(SpecError::NegativeValue { index: i });
            }
        }
        if prefix.len() > 1 && prefix[1] > BigInt::from(ambient) + 1 {
            return Err(SpecError::TooManyLinearForms {
                got: prefix[1].clone(),
                ambient,
            });
        }
        let last = prefix.len() - 1;
        if tail_from > last {
            return Err(SpecError::TailFromBeyondPrefix { tail_from, last });
        }
        for (i, v) in prefix.iter().enumerate().skip(tail_from) {
            if tail.eval(&BigInt::from(i as u64)) != *v {
                return Err(SpecError::PrefixTailMismatch { index: i });
            }
        }
        let tail_g = tail
            .gotzmann_decompose()
            .map_err(SpecError::InvalidTail)?
            .len();
        let needed = tail_from.max(tail_g);
        if last < needed {
            return Err(SpecError::PrefixTooShort {
                needed,
                got: last,
            });
        }
        Ok(HilbertFunctionSpec {
            prefix,
            tail,
            tail_from,
            ambient,
            saturated,
            tail_g,
        })
    }

    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    pub fn tail(&self) -> &NumericalPolynomial {
        &self.tail
    }

    pub fn tail_from(&self) -> usize {
        self.tail_from
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn saturated(&self) -> bool {
        self.saturated
    }

    /// Gotzmann number of the tail polynomial (tuple length).
    pub fn tail_gotzmann_number(&self) -> usize {
        self.tail_g
    }

    /// Last prefix index `T`.
    pub fn last_index(&self) -> usize {
        self.prefix.len() - 1
    }

    /// `H(t)`: prefix value when `t <= T`, tail evaluation beyond.
    pub fn value_at(&self, t: usize) -> BigInt {
        match self.prefix.get(t) {
            Some(v) => v.clone(),
            None => self.tail.eval(&BigInt::from(t as u64)),
        }
    }

    /// Upper end of the invariant scans: `max(g, tail_from) + 1`. Above it,
    /// prefix equals tail and the decomposition identities take over.
    fn scan_top(&self) -> usize {
        self.tail_g.max(self.tail_from) + 1
    }

    /// Data-level Gotzmann number: the least degree from which maximal
    /// growth `H(t+1) = H(t)^<t>` holds for every `t`.
    ///
    /// For `t` above the scan window maximal growth is guaranteed by the
    /// decomposition identity, so the downward scan is complete.
    pub fn gotzmann_number_data(&self) -> usize {
        let mut g = self.scan_top() + 1;
        for t in (1..=self.scan_top()).rev() {
            if self.max_growth_at(t) {
                g = t;
            } else {
                break;
            }
        }
        debug_assert!(g <= self.scan_top());
        g
    }

    /// Does `H(t+1) = H(t)^<t>` hold at degree `t >= 1`?
    pub fn max_growth_at(&self, t: usize) -> bool {
        let here = self.value_at(t);
        let next = self.value_at(t + 1);
        next == macaulay_upper(&here, t as u32)
    }

    /// Does `H(t) - H(t-1) = H(t)_<t>` hold at degree `t >= 1`?
    pub fn green_equality_at(&self, t: usize) -> bool {
        debug_assert!(t >= 1);
        let here = self.value_at(t);
        let prev = self.value_at(t - 1);
        &here - prev == green_lower(&here, t as u32)
    }

    /// The invariant `M`: the least degree from which Green's restriction
    /// inequality is an equality forever. Only meaningful for data whose
    /// first difference is the Hilbert function of a general hyperplane
    /// section, i.e. for saturated coordinate rings.
    pub fn m_invariant(&self) -> Result<usize, MInvariantError> {
        if !self.saturated {
            return Err(MInvariantError::NotSaturated);
        }
        let mut m = self.scan_top() + 1;
        for t in (1..=self.scan_top()).rev() {
            if self.green_equality_at(t) {
                m = t;
            } else {
                break;
            }
        }
        Ok(m)
    }

    /// First difference `h_t = H(t) - H(t-1)` (with `h_0 = 1`), tail
    /// differentiated alongside. The result is an h-vector, not a Hilbert
    /// function: the tail may be the zero polynomial.
    pub fn first_difference(&self) -> FirstDifference {
        let mut values = Vec::with_capacity(self.prefix.len());
        values.push(self.prefix[0].clone());
        for w in self.prefix.windows(2) {
            values.push(&w[1] - &w[0]);
        }
        FirstDifference {
            values,
            tail: self.tail.delta(),
            tail_from: self.tail_from + 1,
        }
    }

    pub fn growth_report(&self) -> GrowthReport {
        let top = self.last_index().saturating_sub(1);
        let mut maximal_growth = Vec::new();
        let mut green_equality = Vec::new();
        for d in 1..=top {
            maximal_growth.push((d, self.max_growth_at(d)));
            green_equality.push((d, self.green_equality_at(d)));
        }
        let g = self.gotzmann_number_data();
        let m = if self.saturated {
            Some(self.m_invariant().expect("saturated"))
        } else {
            None
        };
        // Downward propagation: on saturated data, Green equality at d
        // together with a strictly positive last tuple entry must propagate
        // to d - 1. The implication needs saturation, so it is only a
        // consistency check when the flag is set.
        let mut inconsistencies = Vec::new();
        if self.saturated {
            for d in (2..=top).rev() {
                let here = self.value_at(d);
                if here.is_zero() || !self.green_equality_at(d) {
                    continue;
                }
                let t = difference_tuple(&here, d as u32);
                if t.entries().last().is_none_or(|e| e.is_zero()) {
                    continue;
                }
                let prev = self.value_at(d - 1);
                let prev_positive_end = !prev.is_zero()
                    && difference_tuple(&prev, d as u32 - 1)
                        .entries()
                        .last()
                        .is_some_and(|e| !e.is_zero());
                if !(self.green_equality_at(d - 1) && prev_positive_end) {
                    inconsistencies.push(format!(
                        "green equality with nonzero bottom entry at degree {} does not propagate to {}",
                        d,
                        d - 1
                    ));
                }
            }
        }
        if let Some(m) = m {
            // Proven relations for saturated data; a violation means the
            // input is not the Hilbert function of a saturated ring.
            assert!(m <= g, "M = {} exceeds G = {} on saturated data", m, g);
            assert!(
                m == g || m == 1,
                "saturated data with 1 < M = {} < G = {}",
                m,
                g
            );
        }
        GrowthReport {
            maximal_growth,
            green_equality,
            g_of_x: g,
            m_of_x: m,
            inconsistencies,
        }
    }

    /// JSON form used by the CLI and the oracle.
    pub fn to_json(&self) -> Value {
        json!({
            "prefix": jsonval::bigints_to_json(&self.prefix),
            "tail": self.tail.to_json(),
            "tail_from": self.tail_from,
            "ambient": self.ambient,
            "saturated": self.saturated,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let prefix = jsonval::bigints_from_json(jsonval::field(v, "prefix")?)?;
        let tail = NumericalPolynomial::from_json(jsonval::field(v, "tail")?)?;
        let tail_from = jsonval::usize_from_json(jsonval::field(v, "tail_from")?)?;
        let ambient = jsonval::usize_from_json(jsonval::field(v, "ambient")?)? as u32;
        let saturated = jsonval::field(v, "saturated")?
            .as_bool()
            .ok_or_else(|| JsonError::new("\"saturated\" must be a boolean"))?;
        Self::new(prefix, tail, tail_from, ambient, saturated)
            .map_err(|e| JsonError::new(e.to_string()))
    }
}

/// Computing `M` on data not marked saturated is refused: the first
/// difference is only the hyperplane-section Hilbert function for saturated
/// ideals, so `M` would be meaningless.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MInvariantError {
    NotSaturated,
}

impl fmt::Display for MInvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MInvariantError::NotSaturated => {
                write!(f, "M is undefined for data not marked saturated")
            }
        }
    }
}

impl std::error::Error for MInvariantError {}

/// First difference of a spec: an h-vector with its own (possibly zero) tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstDifference {
    pub values: Vec<BigInt>,
    pub tail: NumericalPolynomial,
    pub tail_from: usize,
}

/// Per-degree growth flags plus the two persistence invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    /// `(d, H(d+1) = H(d)^<d>)` for `1 <= d <= T - 1`.
    pub maximal_growth: Vec<(usize, bool)>,
    /// `(d, delta H(d) = H(d)_<d>)` on the same range.
    pub green_equality: Vec<(usize, bool)>,
    pub g_of_x: usize,
    /// `None` when the spec is not marked saturated.
    pub m_of_x: Option<usize>,
    pub inconsistencies: Vec<String>,
}

impl GrowthReport {
    pub fn to_json(&self) -> Value {
        let flags = |v: &[(usize, bool)]| {
            Value::Array(
                v.iter()
                    .map(|(d, ok)| json!({ "degree": d, "holds": ok }))
                    .collect(),
            )
        };
        json!({
            "maximal_growth": flags(&self.maximal_growth),
            "green_equality": flags(&self.green_equality),
            "g": self.g_of_x,
            "m": self.m_of_x,
            "inconsistencies": self.inconsistencies,
        })
    }
}

/// Admissibility of a finite sequence as the Hilbert function of a standard
/// graded algebra in `n + 1` variables (Macaulay's theorem): `seq[0] = 1`,
/// `seq[1] <= n + 1`, and `seq[d+1] <= seq[d]^<d>` for every `d >= 1`.
///
/// Returns the least violating degree on failure.
pub fn is_admissible(seq: &[BigInt], ambient: u32) -> Result<(), usize> {
    if seq.is_empty() || !seq[0].is_one() {
        return Err(0);
    }
    if seq.len() > 1
        && (seq[1].is_negative() || seq[1] > BigInt::from(ambient) + 1) {
            return Err(1);
        }
    for d in 1..seq.len().saturating_sub(1) {
        if seq[d].is_negative() {
            return Err(d);
        }
        if seq[d + 1].is_negative() || seq[d + 1] > macaulay_upper(&seq[d], d as u32) {
            return Err(d);
        }
    }
    Ok(())
}
