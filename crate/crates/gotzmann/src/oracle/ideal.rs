//! Monomial ideals: minimal generating sets of exponent tuples, exact
//! Hilbert-function counting by enumeration, colon ideals, saturation, and
//! the exact Hilbert polynomial via the inclusion-exclusion series numerator.

use crate::hilbert_data::HilbertFunctionSpec;
use crate::jsonval::{self, JsonError};
use crate::numerical_poly::NumericalPolynomial;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use std::fmt;

/// Inclusion-exclusion over generator subsets is exponential; this caps it.
const MAX_SERIES_GENS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Counting agreement with the saturation never stabilized within the
    /// supplied horizon.
    HorizonTooSmall { needed_beyond: usize },
    /// Exact-rank restriction is only feasible at desk scale.
    RestrictionTooLarge { nvars: usize, degree: u32 },
    /// Independent random draws kept disagreeing; the sample is flagged
    /// non-generic instead of guessing.
    NonGenericSample { degree: u32 },
    /// The quotient is Artinian: its Hilbert polynomial is zero and carries
    /// no Gotzmann data.
    ArtinianQuotient,
    /// The unit ideal has no standard graded quotient.
    UnitIdeal,
    /// Too many minimal generators for the series numerator.
    TooManyGenerators { count: usize },
    /// An inadmissible target Hilbert function, with the least failing degree.
    Inadmissible { degree: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::HorizonTooSmall { needed_beyond } => {
                write!(f, "horizon too small: agreement not stable through degree {}", needed_beyond)
            }
            OracleError::RestrictionTooLarge { nvars, degree } => write!(
                f,
                "generic restriction limited to 5 variables and degree 8, got {} variables at degree {}",
                nvars, degree
            ),
            OracleError::NonGenericSample { degree } => {
                write!(f, "random linear forms kept disagreeing at degree {}", degree)
            }
            OracleError::ArtinianQuotient => write!(f, "Artinian quotient: zero Hilbert polynomial"),
            OracleError::UnitIdeal => write!(f, "unit ideal"),
            OracleError::TooManyGenerators { count } => {
                write!(f, "{} minimal generators exceed the series cap of {}", count, MAX_SERIES_GENS)
            }
            OracleError::Inadmissible { degree } => {
                write!(f, "sequence violates Macaulay growth at degree {}", degree)
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// A monomial ideal in `nvars` variables, held as its unique minimal
/// generating set of exponent tuples (pairwise non-dividing, sorted).
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// all-zero tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Vec<u32>>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn total_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl MonomialIdeal {
    /// Build from any generating set; redundant generators (multiples of
    /// another) and duplicates are dropped.
    pub fn new(nvars: usize, gens: Vec<Vec<u32>>) -> Self {
        assert!(nvars >= 1, "need at least one variable");
        for g in &gens {
            assert_eq!(g.len(), nvars, "generator arity mismatch");
        }
        let mut minimal: Vec<Vec<u32>> = Vec::new();
        let mut sorted = gens;
        // Sorting by degree first makes a single forward pass sufficient.
        sorted.sort_by_key(|g| (total_degree(g), g.clone()));
        for g in sorted {
            if minimal.iter().any(|m| divides(m, &g)) {
                continue;
            }
            minimal.push(g);
        }
        minimal.sort();
        minimal.dedup();
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal::new(nvars, Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| total_degree(g) == 0)
    }

    /// Largest degree of a minimal generator (0 for the zero ideal).
    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().map(|g| total_degree(g)).max().unwrap_or(0)
    }

    /// Is the monomial with these exponents in the ideal?
    pub fn contains(&self, monomial: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, monomial))
    }

    /// `H(R/I, d)`: the number of degree-`d` monomials outside the ideal,
    /// by exact enumeration.
    pub fn hilbert_value(&self, d: u32) -> u64 {
        let mut count = 0u64;
        let mut exps = vec![0u32; self.nvars];
        self.count_rec(0, d, &mut exps, &mut count);
        count
    }

    fn count_rec(&self, var: usize, remaining: u32, exps: &mut Vec<u32>, count: &mut u64) {
        if var + 1 == self.nvars {
            exps[var] = remaining;
            if !self.contains(exps) {
                *count += 1;
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            self.count_rec(var + 1, remaining - e, exps, count);
        }
        exps[var] = 0;
    }

    /// Hilbert-function values `H(R/I, 0), ..., H(R/I, through)`.
    pub fn hilbert_values(&self, through: usize) -> Vec<BigInt> {
        (0..=through as u32)
            .map(|d| BigInt::from(self.hilbert_value(d)))
            .collect()
    }

    /// The saturated colon `(I : x_i^inf)`: zero out the `x_i` exponent of
    /// every generator.
    pub fn colon_variable(&self, var: usize) -> MonomialIdeal {
        assert!(var < self.nvars);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut g = g.clone();
                g[var] = 0;
                g
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Intersection with another monomial ideal: pairwise generator lcms,
    /// re-minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.nvars, other.nvars);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(lcm_exp(a, b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// The saturation `I^sat = ∩_i (I : x_i^inf)`.
    pub fn saturate(&self) -> MonomialIdeal {
        let mut result = self.colon_variable(0);
        for var in 1..self.nvars {
            result = result.intersect(&self.colon_variable(var));
        }
        result
    }

    pub fn is_saturated(&self) -> bool {
        *self == self.saturate()
    }

    /// Least degree `r` such that `I` and `I^sat` agree in every degree of
    /// `[r, horizon]`, certified by counting. Errors unless the horizon
    /// covers all generator degrees of both ideals and the agreement has
    /// stabilized at the horizon itself (beyond it no new generators exist,
    /// so agreement persists).
    pub fn saturation_degree(&self, horizon: usize) -> Result<usize, OracleError> {
        let sat = self.saturate();
        let needed = self.max_gen_degree().max(sat.max_gen_degree()) as usize;
        if horizon < needed {
            return Err(OracleError::HorizonTooSmall { needed_beyond: needed });
        }
        if self.hilbert_value(horizon as u32) != sat.hilbert_value(horizon as u32) {
            return Err(OracleError::HorizonTooSmall { needed_beyond: horizon });
        }
        let mut r = horizon;
        while r > 0 && self.hilbert_value(r as u32 - 1) == sat.hilbert_value(r as u32 - 1) {
            r -= 1;
        }
        Ok(r)
    }

    /// JSON form `{"nvars": k, "gens": [[e_0, ..., e_(k-1)], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({ "nvars": self.nvars, "gens": self.gens })
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let nvars = jsonval::usize_from_json(jsonval::field(v, "nvars")?)?;
        if nvars == 0 {
            return Err(JsonError::new("nvars must be at least 1"));
        }
        let gens_json = jsonval::field(v, "gens")?
            .as_array()
            .ok_or_else(|| JsonError::new("\"gens\" must be an array"))?;
        let mut gens = Vec::with_capacity(gens_json.len());
        for g in gens_json {
            let exps = g
                .as_array()
                .ok_or_else(|| JsonError::new("each generator must be an exponent array"))?;
            if exps.len() != nvars {
                return Err(JsonError::new(format!(
                    "generator {:?} does not have {} exponents",
                    g, nvars
                )));
            }
            let mut tuple = Vec::with_capacity(nvars);
            for e in exps {
                let e = jsonval::usize_from_json(e)?;
                tuple.push(
                    u32::try_from(e).map_err(|_| JsonError::new("exponent too large"))?,
                );
            }
            gens.push(tuple);
        }
        Ok(MonomialIdeal::new(nvars, gens))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let mut wrote = false;
            for (var, e) in g.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                if *e == 1 {
                    write!(f, "x{}", var)?;
                } else {
                    write!(f, "x{}^{}", var, e)?;
                }
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        write!(f, ")")
    }
}

/// The exact Hilbert polynomial of `R/I` from the Hilbert series: with
/// numerator `N(t) = sum_(S ⊆ gens) (-1)^|S| t^(deg lcm S)` over
/// `(1 - t)^nvars`, the polynomial is `sum_j N_j C(z - j + n, n)` with
/// `n = nvars - 1`; it agrees with the counted values from `deg N` on.
pub fn hilbert_polynomial_of(ideal: &MonomialIdeal) -> Result<NumericalPolynomial, OracleError> {
    let k = ideal.gens.len();
    if k > MAX_SERIES_GENS {
        return Err(OracleError::TooManyGenerators { count: k });
    }
    // Numerator coefficients indexed by degree.
    let mut numerator: Vec<BigInt> = vec![BigInt::zero()];
    for mask in 0u32..(1u32 << k) {
        let mut lcm = vec![0u32; ideal.nvars];
        let mut bits = 0u32;
        for (i, g) in ideal.gens.iter().enumerate() {
            if mask & (1 << i) != 0 {
                bits += 1;
                lcm = lcm_exp(&lcm, g);
            }
        }
        let deg = total_degree(&lcm) as usize;
        if numerator.len() <= deg {
            numerator.resize(deg + 1, BigInt::zero());
        }
        if bits.is_multiple_of(2) {
            numerator[deg] += 1;
        } else {
            numerator[deg] -= 1;
        }
    }
    let n = ideal.nvars as u32 - 1;
    // Each numerator term contributes the shifted simplex polynomial
    // C(z - j + n, n); sum them in the binomial basis via evaluation-free
    // composition through from_difference_tuple-style shifts.
    let mut acc = NumericalPolynomial::zero();
    for (j, coeff) in numerator.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let shift = BigInt::from(n as i64) - BigInt::from(j as i64);
        let term = shifted_simplex(&shift, n);
        acc = add_scaled(&acc, &term, coeff);
    }
    Ok(acc)
}

/// `C(z + a, n)` as a `NumericalPolynomial`.
fn shifted_simplex(a: &BigInt, n: u32) -> NumericalPolynomial {
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|i| crate::combinatorics::signed_binomial(a, n - i))
        .collect();
    NumericalPolynomial::from_binomial_coeffs(coeffs)
}

fn add_scaled(
    p: &NumericalPolynomial,
    q: &NumericalPolynomial,
    scale: &BigInt,
) -> NumericalPolynomial {
    let len = p.basis_coeffs().len().max(q.basis_coeffs().len());
    let mut coeffs = vec![BigInt::zero(); len];
    for (i, c) in p.basis_coeffs().iter().enumerate() {
        coeffs[i] += c;
    }
    for (i, c) in q.basis_coeffs().iter().enumerate() {
        coeffs[i] += c * scale;
    }
    NumericalPolynomial::from_binomial_coeffs(coeffs)
}

/// Package `R/I` as Hilbert-function data: counted prefix, exact polynomial
/// tail, the least index from which prefix and tail agree, and the
/// saturation flag. The prefix is extended as far as the tail's Gotzmann
/// number requires.
pub fn spec_from_ideal(
    ideal: &MonomialIdeal,
    min_horizon: usize,
) -> Result<HilbertFunctionSpec, OracleError> {
    if ideal.is_unit_ideal() {
        return Err(OracleError::UnitIdeal);
    }
    let tail = hilbert_polynomial_of(ideal)?;
    if tail.is_zero() {
        return Err(OracleError::ArtinianQuotient);
    }
    let g = tail
        .gotzmann_decompose()
        .expect("a Hilbert polynomial from counting decomposes")
        .len();
    // Counted values agree with the tail from the numerator degree on
    // (bounded by deg lcm of all generators); scan downward for the true
    // tail_from.
    let all_lcm = ideal
        .gens
        .iter()
        .fold(vec![0u32; ideal.nvars], |acc, g| lcm_exp(&acc, g));
    let guaranteed_deg = total_degree(&all_lcm) as usize;
    let top = min_horizon.max(g).max(guaranteed_deg);
    let prefix = ideal.hilbert_values(top);
    let mut tail_from = guaranteed_deg;
    debug_assert_eq!(
        prefix[tail_from],
        tail.eval(&BigInt::from(tail_from as u64)),
        "counting disagrees with the series polynomial at its guaranteed degree"
    );
    while tail_from > 0 && prefix[tail_from - 1] == tail.eval(&BigInt::from(tail_from as u64 - 1)) {
        tail_from -= 1;
    }
    let ambient = ideal.nvars as u32 - 1;
    let spec = HilbertFunctionSpec::new(prefix, tail, tail_from, ambient, ideal.is_saturated())
        .expect("counted data forms a consistent spec");
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|g| g.to_vec()).collect())
    }

    #[test]
    fn minimalization() {
        let i = ideal(3, &[&[2, 0, 0], &[2, 1, 0], &[0, 3, 0], &[2, 0, 0]]);
        assert_eq!(i.gens(), &[vec![0, 3, 0], vec![2, 0, 0]]);
    }

    #[test]
    fn hilbert_counting_artinian_example() {
        // k[x,y,z]/(x^2, y^3, z^4)
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]);
        assert_eq!(i.hilbert_value(3), 6);
        assert_eq!(i.hilbert_value(4), 5);
        assert_eq!(i.hilbert_value(6), 1);
        assert_eq!(i.hilbert_value(7), 0);
    }

    #[test]
    fn hilbert_counting_zero_ideal() {
        let i = MonomialIdeal::zero(3);
        assert_eq!(i.hilbert_value(2), 6);
        assert_eq!(i.hilbert_value(0), 1);
    }

    #[test]
    fn saturation_of_plane_with_embedded_point() {
        // (x^2, xy, xz) saturates to (x).
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1]]);
        let sat = i.saturate();
        assert_eq!(sat.gens(), &[vec![1, 0, 0]]);
        assert_eq!(i.saturation_degree(8).unwrap(), 2);
        assert!(!i.is_saturated());
        assert!(sat.is_saturated());
    }

    #[test]
    fn saturation_of_irrelevant_power() {
        // m^2 saturates to the unit ideal.
        let gens: Vec<Vec<u32>> = vec![
            vec![2, 0, 0],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![0, 1, 1],
            vec![0, 0, 2],
        ];
        let i = MonomialIdeal::new(3, gens);
        let sat = i.saturate();
        assert!(sat.is_unit_ideal());
        assert_eq!(i.saturation_degree(8).unwrap(), 2);
    }

    #[test]
    fn saturated_principal_ideal() {
        let i = ideal(3, &[&[1, 0, 0]]);
        assert_eq!(i.saturate(), i);
        assert!(i.saturation_degree(8).unwrap() <= 1);
    }

    #[test]
    fn horizon_too_small_detected() {
        // (x^5, y^5) in two variables stabilizes against its saturation (1)
        // only at degree 9.
        let i = ideal(2, &[&[5, 0], &[0, 5]]);
        assert!(matches!(
            i.saturation_degree(8),
            Err(OracleError::HorizonTooSmall { .. })
        ));
        assert_eq!(i.saturation_degree(12).unwrap(), 9);
    }

    #[test]
    fn hilbert_polynomial_from_series() {
        // Twisted-cubic-like line ideal: R/(x) on P^2 has P(z) = z + 1.
        let i = ideal(3, &[&[1, 0, 0]]);
        let p = hilbert_polynomial_of(&i).unwrap();
        for t in 0..6i64 {
            assert_eq!(p.eval_at(t), BigInt::from(t + 1));
        }
        // Full ring.
        let p = hilbert_polynomial_of(&MonomialIdeal::zero(3)).unwrap();
        for t in 0..6i64 {
            assert_eq!(p.eval_at(t), BigInt::from((t + 1) * (t + 2) / 2));
        }
        // Artinian: zero polynomial.
        let p = hilbert_polynomial_of(&ideal(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn series_polynomial_matches_counting() {
        let cases = vec![
            ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1]]),
            ideal(4, &[&[1, 2, 0, 0], &[0, 0, 3, 1]]),
            ideal(2, &[&[3, 1]]),
            ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]),
        ];
        for i in cases {
            let p = hilbert_polynomial_of(&i).unwrap();
            let from = i.max_gen_degree() as i64 * i.nvars() as i64;
            for t in from..from + 6 {
                assert_eq!(
                    p.eval_at(t),
                    BigInt::from(i.hilbert_value(t as u32)),
                    "ideal {} at degree {}",
                    i,
                    t
                );
            }
        }
    }

    #[test]
    fn spec_from_line_ideal() {
        let i = ideal(3, &[&[1, 0, 0]]);
        let spec = spec_from_ideal(&i, 8).unwrap();
        assert!(spec.saturated());
        assert_eq!(spec.tail_from(), 0);
        assert_eq!(spec.gotzmann_number_data(), 1);
        assert_eq!(spec.value_at(4), BigInt::from(5));
    }

    #[test]
    fn spec_from_nonsaturated_ideal() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1]]);
        let spec = spec_from_ideal(&i, 8).unwrap();
        assert!(!spec.saturated());
        // H = (1, 3, 3, 4, 5, ...), P = z + 1 from degree 2 on.
        assert_eq!(spec.prefix()[..4], [1, 3, 3, 4].map(BigInt::from));
        assert_eq!(spec.tail_from(), 2);
        assert_eq!(spec.gotzmann_number_data(), 2);
    }

    #[test]
    fn spec_rejects_artinian() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert!(matches!(
            spec_from_ideal(&i, 8),
            Err(OracleError::ArtinianQuotient)
        ));
    }

    #[test]
    fn json_roundtrip() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0]]);
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
    }
}
