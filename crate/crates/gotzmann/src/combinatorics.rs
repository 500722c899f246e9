//! Exact big-integer binomial arithmetic, d-binomial expansions, Macaulay
//! difference sets, and the two growth functions `c^<d>` (Macaulay) and
//! `c_<d>` (Green).
//!
//! All arithmetic is arbitrary-precision; there is no floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Binomial coefficient `C(n, k)` with the combinatorial convention
/// `C(n, k) = 0` whenever `0 <= n < k`, and `C(n, 0) = 1`.
///
/// Negative `n` also yields 0; for the signed polynomial extension valid at
/// negative arguments use [`signed_binomial`].
pub fn binomial(n: &BigInt, k: u32) -> BigInt {
    if n.is_negative() {
        return BigInt::zero();
    }
    if n < &BigInt::from(k) {
        return BigInt::zero();
    }
    signed_binomial(n, k)
}

/// The falling-factorial binomial `C(t, k) = t(t-1)...(t-k+1) / k!`, exact for
/// every integer `t`, including negative `t`.
///
/// This is the value of the binomial-basis polynomial `b_k(z) = C(z, k)` at
/// `z = t`. Intermediate divisions are exact: after step `i` the accumulator
/// equals `C(t, i+1)`, an integer.
pub fn signed_binomial(t: &BigInt, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (t - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

/// The unique d-binomial expansion of a positive integer `c`:
///
/// `c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta)`
///
/// with `k_d > k_{d-1} > ... > k_delta >= delta >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialExpansion {
    target: BigInt,
    degree: u32,
    ks: Vec<BigInt>,
}

impl BinomialExpansion {
    /// The expanded value `c`.
    pub fn target(&self) -> &BigInt {
        &self.target
    }

    /// The degree `d` the expansion was taken at.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The strictly decreasing sequence `k_d, k_{d-1}, ..., k_delta`.
    pub fn ks(&self) -> &[BigInt] {
        &self.ks
    }

    /// The lowest degree `delta` appearing in the expansion.
    pub fn low(&self) -> u32 {
        self.degree + 1 - self.ks.len() as u32
    }

    /// The binomial degree of the term at position `pos` (position 0 is the
    /// top term, of degree `d`).
    fn term_degree(&self, pos: usize) -> u32 {
        self.degree - pos as u32
    }

    /// The Macaulay difference set `M_d(c) = (k_d - d, ..., k_delta - delta)`.
    pub fn difference_tuple(&self) -> DifferenceTuple {
        let entries = self
            .ks
            .iter()
            .enumerate()
            .map(|(pos, k)| k - BigInt::from(self.term_degree(pos)))
            .collect();
        DifferenceTuple {
            entries,
            degree: Some(self.degree),
        }
    }

    /// Macaulay's upper growth function: `c^<d> = sum C(k_i + 1, i + 1)`.
    pub fn upper(&self) -> BigInt {
        self.ks
            .iter()
            .enumerate()
            .map(|(pos, k)| binomial(&(k + 1u32), self.term_degree(pos) + 1))
            .sum()
    }

    /// Green's lower restriction function: `c_<d> = sum C(k_i - 1, i)`.
    pub fn lower(&self) -> BigInt {
        self.ks
            .iter()
            .enumerate()
            .map(|(pos, k)| binomial(&(k - 1u32), self.term_degree(pos)))
            .sum()
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", self.target)?;
        for (pos, k) in self.ks.iter().enumerate() {
            if pos > 0 {
                write!(f, " +")?;
            }
            write!(f, " C({},{})", k, self.term_degree(pos))?;
        }
        Ok(())
    }
}

/// A Macaulay difference set: a non-increasing tuple of non-negative integers
/// `(a_d, a_{d-1}, ..., a_delta)`.
///
/// When produced from the expansion of a value at a specific degree the
/// degree is attached; Gotzmann difference sets (the eventual tuples of a
/// Hilbert polynomial) carry no degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTuple {
    entries: Vec<BigInt>,
    degree: Option<u32>,
}

impl DifferenceTuple {
    /// Build a degree-free (Gotzmann) tuple. Panics if the entries are not
    /// non-increasing and non-negative.
    pub fn gotzmann(entries: Vec<BigInt>) -> Self {
        let t = DifferenceTuple {
            entries,
            degree: None,
        };
        assert!(t.is_valid(), "difference tuple entries must be non-increasing and non-negative");
        t
    }

    fn is_valid(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
            && self.entries.last().is_none_or(|e| !e.is_negative())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn degree(&self) -> Option<u32> {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The largest entry (the first one).
    pub fn top(&self) -> Option<&BigInt> {
        self.entries.first()
    }

    /// How many entries equal `value`.
    pub fn multiplicity(&self, value: &BigInt) -> usize {
        self.entries.iter().filter(|e| *e == value).count()
    }

    /// Entries as JSON-friendly values.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.entries.iter().map(crate::jsonval::bigint_to_json).collect())
    }
}

impl fmt::Display for DifferenceTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

/// Largest `k` with `C(k, j) <= cap`, for `j >= 1` and `cap >= 1`.
fn largest_k(cap: &BigInt, j: u32) -> BigInt {
    debug_assert!(j >= 1 && cap >= &BigInt::one());
    if j == 1 {
        return cap.clone();
    }
    // Exponential bracket then binary search. C(j, j) = 1 <= cap always.
    let mut lo = BigInt::from(j);
    let mut hi = lo.clone() + 1u32;
    while binomial(&hi, j) <= *cap {
        lo = hi.clone();
        hi *= 2u32;
    }
    // Invariant: C(lo, j) <= cap < C(hi, j).
    while &lo + 1u32 < hi {
        let mid: BigInt = (&lo + &hi) / 2u32;
        if binomial(&mid, j) <= *cap {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Compute the unique d-binomial expansion of `c` by the greedy algorithm:
/// take the largest `k_d` with `C(k_d, d) <= c` and recurse on the remainder
/// in degree `d - 1`.
///
/// Panics if `c < 1` or `d < 1` (usage errors); existence and uniqueness of
/// the expansion are classical.
pub fn expand(c: &BigInt, d: u32) -> BinomialExpansion {
    assert!(c >= &BigInt::one(), "expand: c must be positive, got {}", c);
    assert!(d >= 1, "expand: d must be positive");
    let mut rem = c.clone();
    let mut ks = Vec::new();
    let mut j = d;
    while !rem.is_zero() {
        debug_assert!(j >= 1, "greedy expansion ran below degree 1");
        let k = largest_k(&rem, j);
        rem -= binomial(&k, j);
        if let Some(prev) = ks.last() {
            debug_assert!(&k < prev, "greedy k-sequence must be strictly decreasing");
        }
        ks.push(k);
        j -= 1;
    }
    BinomialExpansion {
        target: c.clone(),
        degree: d,
        ks,
    }
}

/// The Macaulay difference set `M_d(c)` of a positive integer `c`.
pub fn difference_tuple(c: &BigInt, d: u32) -> DifferenceTuple {
    expand(c, d).difference_tuple()
}

/// Error from [`tuple_value`]: the tuple does not fit at the requested degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleValueError {
    /// More entries than the degree allows (`len > d`).
    TooLong { len: usize, degree: u32 },
    /// Entries are not non-increasing or contain a negative value.
    NotMonotone,
    /// The empty tuple has no value.
    Empty,
}

impl fmt::Display for TupleValueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TupleValueError::TooLong { len, degree } => {
                write!(f, "tuple of length {} does not fit at degree {}", len, degree)
            }
            TupleValueError::NotMonotone => {
                write!(f, "tuple entries must be non-increasing and non-negative")
            }
            TupleValueError::Empty => write!(f, "empty tuple has no value"),
        }
    }
}

impl std::error::Error for TupleValueError {}

/// Inverse of [`difference_tuple`]: the unique `c` whose Macaulay difference
/// set at degree `d` equals the given tuple, i.e.
/// `c = C(d + a_d, d) + C((d-1) + a_{d-1}, d-1) + ...`.
pub fn tuple_value(entries: &[BigInt], d: u32) -> Result<BigInt, TupleValueError> {
    if entries.is_empty() {
        return Err(TupleValueError::Empty);
    }
    if entries.len() > d as usize {
        return Err(TupleValueError::TooLong {
            len: entries.len(),
            degree: d,
        });
    }
    let monotone = entries.windows(2).all(|w| w[0] >= w[1])
        && !entries.last().unwrap().is_negative();
    if !monotone {
        return Err(TupleValueError::NotMonotone);
    }
    let mut total = BigInt::zero();
    for (pos, a) in entries.iter().enumerate() {
        let deg = d - pos as u32;
        total += binomial(&(a + BigInt::from(deg)), deg);
    }
    Ok(total)
}

/// Macaulay's growth bound `c^<d>`. By convention `0^<d> = 0` (the zero
/// algebra stays zero); the expansion itself is defined only for `c > 0`.
pub fn macaulay_upper(c: &BigInt, d: u32) -> BigInt {
    assert!(!c.is_negative(), "macaulay_upper: c must be non-negative");
    assert!(d >= 1, "macaulay_upper: d must be positive");
    if c.is_zero() {
        return BigInt::zero();
    }
    expand(c, d).upper()
}

/// Green's restriction bound `c_<d>`, with `0_<d> = 0`.
pub fn green_lower(c: &BigInt, d: u32) -> BigInt {
    assert!(!c.is_negative(), "green_lower: c must be non-negative");
    assert!(d >= 1, "green_lower: d must be positive");
    if c.is_zero() {
        return BigInt::zero();
    }
    expand(c, d).lower()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn tuple(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| bi(v)).collect()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(&bi(6), 4), bi(15));
        assert_eq!(binomial(&bi(1), 2), bi(0));
        assert_eq!(binomial(&bi(40), 20), BigInt::parse_bytes(b"137846528820", 10).unwrap());
        assert_eq!(binomial(&bi(0), 0), bi(1));
        assert_eq!(binomial(&bi(7), 0), bi(1));
        assert_eq!(binomial(&bi(-3), 2), bi(0));
    }

    #[test]
    fn binomial_matches_pascal_recurrence() {
        // Independent oracle: Pascal's triangle, row by row.
        let mut row = vec![bi(1)];
        for n in 1..=40u32 {
            let mut next = vec![bi(1)];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(bi(1));
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(&bi(n as i64), k as u32), v, "C({},{})", n, k);
            }
        }
    }

    #[test]
    fn signed_binomial_negative_arguments() {
        // C(-1, k) = (-1)^k
        for k in 0..8 {
            let expect = if k % 2 == 0 { bi(1) } else { bi(-1) };
            assert_eq!(signed_binomial(&bi(-1), k), expect);
        }
        // C(-2, 3) = (-2)(-3)(-4)/6 = -4
        assert_eq!(signed_binomial(&bi(-2), 3), bi(-4));
        assert_eq!(signed_binomial(&bi(-1), 0), bi(1));
    }

    #[test]
    fn expand_27_at_4() {
        let e = expand(&bi(27), 4);
        assert_eq!(e.ks(), &tuple(&[6, 5, 2, 1])[..]);
        assert_eq!(e.low(), 1);
        assert_eq!(e.difference_tuple().entries(), &tuple(&[2, 2, 0, 0])[..]);
    }

    #[test]
    fn expand_small_examples() {
        let e = expand(&bi(6), 3);
        assert_eq!(e.ks(), &tuple(&[4, 2, 1])[..]);
        assert_eq!(e.low(), 1);

        let e = expand(&bi(13), 3);
        assert_eq!(e.ks(), &tuple(&[5, 3])[..]);
        assert_eq!(e.low(), 2);
        assert_eq!(e.difference_tuple().entries(), &tuple(&[2, 1])[..]);
    }

    #[test]
    fn difference_tuple_112_at_7() {
        let t = difference_tuple(&bi(112), 7);
        assert_eq!(t.entries(), &tuple(&[2, 2, 2, 2, 2, 0, 0])[..]);
    }

    #[test]
    fn tuple_value_inverts_difference_tuple() {
        assert_eq!(tuple_value(&tuple(&[2, 2, 0, 0]), 4).unwrap(), bi(27));
        assert_eq!(tuple_value(&tuple(&[1, 1, 1, 0]), 4).unwrap(), bi(13));
        for d in 1..=10 {
            assert_eq!(tuple_value(&tuple(&[0]), d).unwrap(), bi(1));
        }
        assert!(matches!(
            tuple_value(&tuple(&[1, 1, 1]), 2),
            Err(TupleValueError::TooLong { .. })
        ));
        assert!(matches!(
            tuple_value(&tuple(&[1, 2]), 4),
            Err(TupleValueError::NotMonotone)
        ));
    }

    #[test]
    fn macaulay_upper_values() {
        // 10 -> 15 at d=3, so growth 10 -> 13 is not maximal there.
        assert_eq!(macaulay_upper(&bi(10), 3), bi(15));
        assert_eq!(macaulay_upper(&bi(112), 7), bi(147));
        assert_eq!(macaulay_upper(&bi(27), 4), bi(38));
        assert_eq!(macaulay_upper(&bi(0), 5), bi(0));
    }

    #[test]
    fn green_lower_values() {
        assert_eq!(green_lower(&bi(13), 4), bi(3));
        assert_eq!(green_lower(&bi(112), 7), bi(30));
        assert_eq!(green_lower(&bi(6), 2), bi(3));
        assert_eq!(green_lower(&bi(0), 3), bi(0));
    }

    /// Brute-force count of strictly decreasing expansions of `c` at `d`,
    /// independent of the greedy path.
    fn count_expansions(c: i64, d: u32, k_cap: i64) -> usize {
        fn rec(rem: i64, j: u32, cap: i64) -> usize {
            if rem == 0 {
                return 1;
            }
            if j == 0 {
                return 0;
            }
            let mut found = 0;
            // k ranges over [j, cap); C(k, j) must not exceed rem.
            let mut k = j as i64;
            while k < cap {
                let v = binomial(&BigInt::from(k), j);
                if v > BigInt::from(rem) {
                    break;
                }
                let v: i64 = v.try_into().unwrap();
                found += rec(rem - v, j - 1, k);
                k += 1;
            }
            // A sequence may also stop here (omit degree j entirely) only if
            // rem == 0, handled above.
            found
        }
        rec(c, d, k_cap)
    }

    #[test]
    fn expansion_uniqueness_brute_force() {
        for d in 1..=6u32 {
            for c in 1..=500i64 {
                assert_eq!(count_expansions(c, d, 600), 1, "c={} d={}", c, d);
                let e = expand(&bi(c), d);
                let total: BigInt = e
                    .ks()
                    .iter()
                    .enumerate()
                    .map(|(pos, k)| binomial(k, d - pos as u32))
                    .sum();
                assert_eq!(total, bi(c));
            }
        }
    }

    #[test]
    fn exhaustive_roundtrip_monotonicity_stability() {
        for d in 1..=12u32 {
            let mut prev_upper = bi(0);
            let mut prev_lower = bi(0);
            for c in 1..=10_000i64 {
                let c = bi(c);
                let t = difference_tuple(&c, d);
                assert_eq!(tuple_value(t.entries(), d).unwrap(), c);

                let up = macaulay_upper(&c, d);
                let lo = green_lower(&c, d);
                assert!(up >= prev_upper, "upper not monotone at c={} d={}", c, d);
                assert!(lo >= prev_lower, "lower not monotone at c={} d={}", c, d);
                prev_upper = up.clone();
                prev_lower = lo;

                // Maximal growth leaves the difference set entries unchanged.
                let grown = difference_tuple(&up, d + 1);
                assert_eq!(grown.entries(), t.entries());
            }
        }
    }

    proptest! {
        #[test]
        fn roundtrip_large_values(c in 1i64..1_000_000_000, d in 1u32..20) {
            let c = bi(c);
            let t = difference_tuple(&c, d);
            prop_assert_eq!(tuple_value(t.entries(), d).unwrap(), c);
        }

        #[test]
        fn expansion_sums_back(c in 1i64..1_000_000_000, d in 1u32..20) {
            let e = expand(&bi(c), d);
            let total: BigInt = e
                .ks()
                .iter()
                .enumerate()
                .map(|(pos, k)| binomial(k, d - pos as u32))
                .sum();
            prop_assert_eq!(total, bi(c));
            // ks strictly decreasing, last >= low >= 1
            for w in e.ks().windows(2) {
                prop_assert!(w[0] > w[1]);
            }
            prop_assert!(e.ks().last().unwrap() >= &BigInt::from(e.low()));
            prop_assert!(e.low() >= 1);
        }

        #[test]
        fn upper_stability_random(c in 1i64..5_000_000, d in 1u32..16) {
            let c = bi(c);
            let up = macaulay_upper(&c, d);
            let grown = difference_tuple(&up, d + 1);
            let original = difference_tuple(&c, d);
            prop_assert_eq!(grown.entries(), original.entries());
        }
    }
}
