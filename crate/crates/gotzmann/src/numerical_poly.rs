//! Numerical polynomials in the binomial basis `C(z, i)`, their Gotzmann
//! decomposition, and all invariants derivable from a Hilbert polynomial
//! alone: Gotzmann number `G`, Gotzmann coefficients `C_i`, dimension,
//! degree, arithmetic genus, and the hyperplane-section tower.

use crate::combinatorics::{
    binomial, macaulay_upper, signed_binomial, DifferenceTuple,
};
use crate::jsonval::{self, JsonError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;

/// Hard cap on the number of peeling steps in [`NumericalPolynomial::gotzmann_decompose`].
/// A Gotzmann difference set longer than this cannot be materialized; at desk
/// scale genuine Hilbert polynomials stay far below it.
const PEEL_CAP: usize = 1 << 20;

/// Verdict that a polynomial is not the Hilbert polynomial of any standard
/// graded algebra (or that its difference set is too long to materialize).
///
/// This is value-level on purpose: the Stanley filter branches on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvalidPolynomial {
    /// The zero polynomial has no Gotzmann decomposition.
    ZeroPolynomial,
    /// Peeling produced a remainder with a negative leading coefficient.
    NegativeLeadingCoefficient { step: usize, level: usize },
    /// The difference set would exceed the materialization cap.
    PeelLimitExceeded { cap: usize },
}

impl fmt::Display for InvalidPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidPolynomial::ZeroPolynomial => write!(f, "the zero polynomial does not decompose"),
            InvalidPolynomial::NegativeLeadingCoefficient { step, level } => write!(
                f,
                "peeling step {} left a remainder of degree {} with negative leading coefficient",
                step, level
            ),
            InvalidPolynomial::PeelLimitExceeded { cap } => {
                write!(f, "difference set longer than the cap of {} entries", cap)
            }
        }
    }
}

impl std::error::Error for InvalidPolynomial {}

impl InvalidPolynomial {
    pub fn kind(&self) -> &'static str {
        match self {
            InvalidPolynomial::ZeroPolynomial => "zero_polynomial",
            InvalidPolynomial::NegativeLeadingCoefficient { .. } => "negative_leading_coefficient",
            InvalidPolynomial::PeelLimitExceeded { .. } => "peel_limit_exceeded",
        }
    }
}

/// An integer-coefficient polynomial in the binomial basis:
/// `P(z) = sum_i alpha_i * C(z, i)`.
///
/// Canonical representation: the coefficient vector is empty for the zero
/// polynomial and otherwise ends in a nonzero coefficient. Every such `P`
/// takes integer values on all of `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalPolynomial {
    basis_coeffs: Vec<BigInt>,
}

/// Coefficients of `C(z + a, k)` in the binomial basis, by Vandermonde:
/// `C(z + a, k) = sum_i C(a, k - i) * C(z, i)` with the signed binomial.
fn shifted_binomial_coeffs(a: &BigInt, k: u32) -> Vec<BigInt> {
    (0..=k).map(|i| signed_binomial(a, k - i)).collect()
}

impl NumericalPolynomial {
    pub fn zero() -> Self {
        NumericalPolynomial {
            basis_coeffs: Vec::new(),
        }
    }

    /// Build from binomial-basis coefficients `(alpha_0, alpha_1, ...)`;
    /// trailing zeros are stripped.
    pub fn from_binomial_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = NumericalPolynomial {
            basis_coeffs: coeffs,
        };
        p.normalize();
        p
    }

    /// Build from integer power-basis coefficients `(c_0, c_1, ...)` for
    /// `P(z) = sum c_j z^j`, converted exactly to the binomial basis using
    /// `z * C(z, i) = (i + 1) C(z, i+1) + i C(z, i)`.
    pub fn from_power_coeffs(coeffs: &[BigInt]) -> Self {
        let mut acc: Vec<BigInt> = Vec::new();
        // power[j] holds z^j in the binomial basis, built incrementally.
        let mut power: Vec<BigInt> = vec![BigInt::one()];
        for (j, c) in coeffs.iter().enumerate() {
            if j > 0 {
                let mut next = vec![BigInt::zero(); power.len() + 1];
                for (i, coeff) in power.iter().enumerate() {
                    next[i + 1] += coeff * BigInt::from(i as u64 + 1);
                    next[i] += coeff * BigInt::from(i as u64);
                }
                power = next;
            }
            if !c.is_zero() {
                if acc.len() < power.len() {
                    acc.resize(power.len(), BigInt::zero());
                }
                for (i, coeff) in power.iter().enumerate() {
                    acc[i] += c * coeff;
                }
            }
        }
        Self::from_binomial_coeffs(acc)
    }

    /// The polynomial `sum_j C(z - j + c_j, c_j)` attached to a non-increasing
    /// difference tuple `(c_0, c_1, ...)`. This is the inverse of
    /// [`gotzmann_decompose`](Self::gotzmann_decompose).
    ///
    /// Entries must fit in `u32` (they are polynomial degrees).
    pub fn from_difference_tuple(tuple: &DifferenceTuple) -> Self {
        let mut acc: Vec<BigInt> = Vec::new();
        for (j, entry) in tuple.entries().iter().enumerate() {
            let c: u32 = u32::try_from(entry.clone()).expect("tuple entry too large for a polynomial degree");
            let a = BigInt::from(c) - BigInt::from(j as u64);
            let term = shifted_binomial_coeffs(&a, c);
            if acc.len() < term.len() {
                acc.resize(term.len(), BigInt::zero());
            }
            for (i, coeff) in term.into_iter().enumerate() {
                acc[i] += coeff;
            }
        }
        Self::from_binomial_coeffs(acc)
    }

    /// Exact Newton forward-difference interpolation through values at
    /// consecutive integers `t0, t0 + 1, ...`. The result reproduces every
    /// given point exactly.
    pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<Self, JsonError> {
        if points.is_empty() {
            return Err(JsonError::new("interpolation needs at least one point"));
        }
        for w in points.windows(2) {
            if w[1].0 != &w[0].0 + 1 {
                return Err(JsonError::new(
                    "interpolation points must have consecutive integer arguments",
                ));
            }
        }
        let t0 = &points[0].0;
        // Forward differences of the value table.
        let mut column: Vec<BigInt> = points.iter().map(|(_, v)| v.clone()).collect();
        let mut deltas = vec![column[0].clone()];
        while column.len() > 1 {
            column = column.windows(2).map(|w| &w[1] - &w[0]).collect();
            deltas.push(column[0].clone());
        }
        // P(z) = sum_j delta_j * C(z - t0, j)
        let mut acc: Vec<BigInt> = Vec::new();
        let shift = -t0.clone();
        for (j, delta) in deltas.iter().enumerate() {
            if delta.is_zero() {
                continue;
            }
            let term = shifted_binomial_coeffs(&shift, j as u32);
            if acc.len() < term.len() {
                acc.resize(term.len(), BigInt::zero());
            }
            for (i, coeff) in term.into_iter().enumerate() {
                acc[i] += delta * coeff;
            }
        }
        Ok(Self::from_binomial_coeffs(acc))
    }

    fn normalize(&mut self) {
        while self.basis_coeffs.last().is_some_and(|c| c.is_zero()) {
            self.basis_coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.basis_coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.basis_coeffs.len().checked_sub(1)
    }

    /// Binomial-basis coefficients `(alpha_0, ..., alpha_s)`.
    pub fn basis_coeffs(&self) -> &[BigInt] {
        &self.basis_coeffs
    }

    /// Exact evaluation at any integer, via the signed binomial.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.basis_coeffs
            .iter()
            .enumerate()
            .map(|(i, alpha)| alpha * signed_binomial(t, i as u32))
            .sum()
    }

    pub fn eval_at(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// The first difference `Q(z) = P(z) - P(z - 1)`.
    ///
    /// In the binomial basis `C(z, i) - C(z - 1, i) = C(z - 1, i - 1)`, and
    /// `C(z - 1, k)` re-expands with alternating signs.
    pub fn delta(&self) -> NumericalPolynomial {
        let mut acc: Vec<BigInt> = Vec::new();
        let minus_one = BigInt::from(-1);
        for (i, alpha) in self.basis_coeffs.iter().enumerate().skip(1) {
            if alpha.is_zero() {
                continue;
            }
            let term = shifted_binomial_coeffs(&minus_one, i as u32 - 1);
            if acc.len() < term.len() {
                acc.resize(term.len(), BigInt::zero());
            }
            for (m, coeff) in term.into_iter().enumerate() {
                acc[m] += alpha * coeff;
            }
        }
        Self::from_binomial_coeffs(acc)
    }

    /// Gotzmann decomposition by repeated peeling: at step `j`, the next
    /// entry is `c_j = deg` of the current remainder and the term
    /// `C(z - j + c_j, c_j)` is subtracted. Succeeds exactly when
    /// `P(z) = sum_j C(z - j + c_j, c_j)` for a non-increasing, non-negative
    /// tuple; any other polynomial eventually exposes a remainder with a
    /// negative leading coefficient.
    pub fn gotzmann_decompose(&self) -> Result<DifferenceTuple, InvalidPolynomial> {
        if self.is_zero() {
            return Err(InvalidPolynomial::ZeroPolynomial);
        }
        let mut rem = self.clone();
        let mut entries: Vec<BigInt> = Vec::new();
        let mut step = 0usize;
        while !rem.is_zero() {
            if step >= PEEL_CAP {
                return Err(InvalidPolynomial::PeelLimitExceeded { cap: PEEL_CAP });
            }
            let level = rem.degree().expect("nonzero remainder has a degree");
            if rem.basis_coeffs[level].is_negative() {
                return Err(InvalidPolynomial::NegativeLeadingCoefficient { step, level });
            }
            if let Some(prev) = entries.last() {
                // Peeling subtracts a monic-leading term of the same degree,
                // so the remainder degree never increases.
                debug_assert!(BigInt::from(level as u64) <= *prev);
            }
            let a = BigInt::from(level as u64) - BigInt::from(step as u64);
            let term = shifted_binomial_coeffs(&a, level as u32);
            for (i, coeff) in term.into_iter().enumerate() {
                rem.basis_coeffs[i] -= coeff;
            }
            rem.normalize();
            entries.push(BigInt::from(level as u64));
            step += 1;
        }
        Ok(DifferenceTuple::gotzmann(entries))
    }

    /// Full Gotzmann profile; see [`GotzmannProfile`].
    pub fn profile(&self) -> Result<GotzmannProfile, InvalidPolynomial> {
        let diff_set = self.gotzmann_decompose()?;
        let r = self.degree().expect("nonzero by decomposition");
        debug_assert_eq!(diff_set.top().cloned(), Some(BigInt::from(r as u64)));
        let coeffs: Vec<u64> = (0..=r)
            .map(|i| diff_set.multiplicity(&BigInt::from(i as u64)) as u64)
            .collect();
        let deg = coeffs[r];
        let at_zero = self.eval(&BigInt::zero());
        let genus = if r.is_multiple_of(2) {
            at_zero.clone() - 1
        } else {
            BigInt::one() - &at_zero
        };
        Ok(GotzmannProfile {
            diff_set,
            g: 0, // fixed up below
            coeffs,
            dim: r,
            deg,
            genus,
        }
        .with_g())
    }

    /// Profiles of `P, delta P, delta^2 P, ..., delta^r P`: the polynomial of
    /// a scheme, of its general hyperplane section, and so on down to points.
    ///
    /// The tower relations `C_i(X) = C_{i-1}(X ∩ H)`,
    /// `G(X) - G(X ∩ H) = C_0(X)`, and the chain
    /// `deg <= G_r <= ... <= G_0` are identities of the decomposition and are
    /// asserted; a failure is an internal error.
    pub fn section_tower(&self) -> Result<Vec<GotzmannProfile>, InvalidPolynomial> {
        let top = self.profile()?;
        let r = top.dim;
        let mut tower = vec![top];
        let mut current = self.clone();
        for _ in 0..r {
            current = current.delta();
            tower.push(current.profile()?);
        }
        for i in 0..tower.len() - 1 {
            let x = &tower[i];
            let section = &tower[i + 1];
            assert_eq!(
                x.g - section.g,
                x.coeffs[0] as usize,
                "tower identity G(X) - G(X∩H) = C_0(X) failed"
            );
            for j in 1..=x.dim {
                assert_eq!(
                    x.coeffs[j], section.coeffs[j - 1],
                    "tower identity C_i(X) = C_(i-1)(X∩H) failed"
                );
            }
        }
        // deg <= G_r <= ... <= G_0
        let mut prev = tower[0].deg as usize;
        for p in tower.iter().rev() {
            assert!(prev <= p.g, "section tower chain deg <= G_r <= ... <= G_0 failed");
            prev = p.g;
        }
        Ok(tower)
    }

    /// JSON form `{"binomial_basis": [alpha_0, alpha_1, ...]}`.
    pub fn to_json(&self) -> Value {
        json!({ "binomial_basis": jsonval::bigints_to_json(&self.basis_coeffs) })
    }

    /// Accepts `{"binomial_basis": [...]}` or `{"values": [[t, v], ...]}`
    /// (consecutive arguments, exact Newton interpolation).
    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        if let Some(coeffs) = v.get("binomial_basis") {
            return Ok(Self::from_binomial_coeffs(jsonval::bigints_from_json(coeffs)?));
        }
        if let Some(values) = v.get("values") {
            let arr = values
                .as_array()
                .ok_or_else(|| JsonError::new("\"values\" must be an array of [t, v] pairs"))?;
            let mut points = Vec::with_capacity(arr.len());
            for pair in arr {
                let pair = pair
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| JsonError::new("each value must be a [t, v] pair"))?;
                points.push((
                    jsonval::bigint_from_json(&pair[0])?,
                    jsonval::bigint_from_json(&pair[1])?,
                ));
            }
            return Self::interpolate(&points);
        }
        Err(JsonError::new(
            "polynomial JSON needs a \"binomial_basis\" or \"values\" field",
        ))
    }
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, alpha) in self.basis_coeffs.iter().enumerate().rev() {
            if alpha.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", alpha)?;
            } else if alpha.is_one() {
                write!(f, "C(z,{})", i)?;
            } else {
                write!(f, "{}*C(z,{})", alpha, i)?;
            }
        }
        Ok(())
    }
}

/// The Hilbert polynomial of a degree-`d` hypersurface in a linear subspace
/// `P^(r+1)`: the tuple with `d` entries all equal to `r`, i.e.
/// `P(z) = C(r + z, r) + C(r + z - 1, r) + ... + C(r + z - d + 1, r)`.
pub fn hypersurface_polynomial(r: u32, d: u32) -> NumericalPolynomial {
    assert!(r >= 1 && d >= 1, "hypersurface_polynomial: r, d must be positive");
    let entries = vec![BigInt::from(r); d as usize];
    NumericalPolynomial::from_difference_tuple(&DifferenceTuple::gotzmann(entries))
}

/// Gotzmann difference set of a nonzero numerical polynomial plus the derived
/// invariants.
///
/// * `g` — the Gotzmann number, the tuple length;
/// * `coeffs[i]` — the i-th Gotzmann coefficient `C_i`, the multiplicity of
///   `i` in the tuple, for `0 <= i <= dim`;
/// * `dim` — the top entry (the dimension of a scheme with this polynomial);
/// * `deg` — `C_dim`, the degree;
/// * `genus` — the arithmetic genus `(-1)^dim * (P(0) - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GotzmannProfile {
    pub diff_set: DifferenceTuple,
    pub g: usize,
    pub coeffs: Vec<u64>,
    pub dim: usize,
    pub deg: u64,
    pub genus: BigInt,
}

impl GotzmannProfile {
    fn with_g(mut self) -> Self {
        self.g = self.diff_set.len();
        debug_assert_eq!(self.coeffs.iter().sum::<u64>() as usize, self.g);
        debug_assert!(self.deg >= 1);
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "diff_set": self.diff_set.to_json(),
            "g": self.g,
            "coeffs": self.coeffs,
            "dim": self.dim,
            "deg": self.deg,
            "genus": jsonval::bigint_to_json(&self.genus),
        })
    }
}

/// `C_0` recomputed from the arithmetic genus along the section tower:
/// for curves `C_0 = C(deg - 1, 2) - p_a`, and in dimension `r >= 2`
///
/// `C_0 = (-1)^(r+1) [C(G_r - 1, r+1) - p_a]
///        - sum_(s=1)^(r-1) (-1)^s [C(G_s - 1, s+1) - C(G_(s+1) - 1, s+1)]`.
///
/// For a zero-dimensional tower the degree itself is returned (`C_0 = G = deg`).
/// Must agree with the directly tabulated `C_0` of the top profile.
pub fn c0_via_genus(tower: &[GotzmannProfile]) -> BigInt {
    assert!(!tower.is_empty(), "empty tower");
    let top = &tower[0];
    let r = top.dim;
    debug_assert_eq!(tower.len(), r + 1);
    if r == 0 {
        return BigInt::from(top.deg);
    }
    if r == 1 {
        let d = BigInt::from(top.deg);
        return binomial(&(d - 1), 2) - &top.genus;
    }
    // G_s = Gotzmann number of the s-fold section.
    let g_at = |s: usize| BigInt::from(tower[s].g as u64);
    let r_u32 = r as u32;
    let main = binomial(&(g_at(r) - 1), r_u32 + 1) - &top.genus;
    let mut c0 = if r.is_multiple_of(2) { -main } else { main };
    for s in 1..r {
        let term = binomial(&(g_at(s) - 1), s as u32 + 1) - binomial(&(g_at(s + 1) - 1), s as u32 + 1);
        if s % 2 == 1 {
            c0 += term;
        } else {
            c0 -= term;
        }
    }
    c0
}

/// Every nonzero numerical polynomial built from a difference tuple satisfies
/// these growth identities for `t >= g`; exposed for reuse by data-level scans.
pub fn eventual_growth_is_maximal(p: &NumericalPolynomial, t: u32) -> bool {
    let v = p.eval(&BigInt::from(t));
    let next = p.eval(&BigInt::from(t + 1));
    next == macaulay_upper(&v, t)
}
