//! Decision procedures built on the Gotzmann calculus:
//!
//! * the hypersurface characterization (`G = deg` if and only if the scheme
//!   is a hypersurface in a linear subspace),
//! * the Stanley polynomial filter (necessary conditions on the Hilbert
//!   polynomial of a nondegenerate reduced equidimensional scheme of
//!   codimension at least 2: no Gotzmann coefficient vanishes),
//! * the dichotomy classifier (`G = deg` or `G = M` for reduced
//!   equidimensional schemes),
//! * the uniform-position obstruction test on h-vectors.

use crate::combinatorics::{binomial, difference_tuple, macaulay_upper};
use crate::hilbert_data::{is_admissible, HilbertFunctionSpec, MInvariantError};
use crate::numerical_poly::{
    hypersurface_polynomial, GotzmannProfile, InvalidPolynomial, NumericalPolynomial,
};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

/// Positive outcome of [`hypersurface_test`]: the polynomial is that of a
/// degree-`degree` hypersurface inside a linear subspace of dimension
/// `dim + 1`. Constants report the zero-dimensional case (`dim = 0`,
/// `degree` collinear points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypersurfaceMatch {
    pub dim: usize,
    pub degree: u64,
    pub zero_dimensional: bool,
}

/// Test whether `G(P) = deg(P)`.
///
/// On success the two other equivalent characterizations are verified as
/// internal consistency checks: the profile coincides with the model
/// hypersurface profile (all `C_i = 0` below the top), and every section in
/// the genus tower satisfies `p_a = C(d - 1, r - i + 1)`.
pub fn hypersurface_test(
    p: &NumericalPolynomial,
) -> Result<Option<HypersurfaceMatch>, InvalidPolynomial> {
    let profile = p.profile()?;
    if profile.g as u64 != profile.deg {
        return Ok(None);
    }
    let r = profile.dim;
    let d = profile.deg;
    if r >= 1 {
        let model = hypersurface_polynomial(r as u32, d as u32)
            .profile()
            .expect("model hypersurface polynomial decomposes");
        assert_eq!(
            profile, model,
            "G = deg but the profile is not the hypersurface profile"
        );
        let tower = p.section_tower()?;
        for i in 0..r {
            let expected = binomial(&(BigInt::from(d) - 1), (r - i) as u32 + 1);
            assert_eq!(
                tower[i].genus, expected,
                "G = deg but the section genus at level {} is off",
                i
            );
        }
    }
    Ok(Some(HypersurfaceMatch {
        dim: r,
        degree: d,
        zero_dimensional: r == 0,
    }))
}

/// Outcome of the Stanley filter on a numerical polynomial.
///
/// Exactly one of the non-invalid verdicts applies to every decomposable
/// polynomial. `Obstructed` means no nondegenerate reduced equidimensional
/// closed subscheme of codimension >= 2 in any projective space has this
/// Hilbert polynomial. `PassesNecessaryConditions` asserts nothing beyond
/// the necessary conditions holding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StanleyVerdict {
    InvalidPolynomial(InvalidPolynomial),
    HypersurfaceInLinearSubspace {
        dim: usize,
        degree: u64,
        profile: GotzmannProfile,
    },
    Obstructed {
        zero_indices: Vec<usize>,
        profile: GotzmannProfile,
    },
    PassesNecessaryConditions {
        profile: GotzmannProfile,
    },
}

impl StanleyVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            StanleyVerdict::InvalidPolynomial(_) => "invalid_polynomial",
            StanleyVerdict::HypersurfaceInLinearSubspace { .. } => "hypersurface_in_linear_subspace",
            StanleyVerdict::Obstructed { .. } => "obstructed",
            StanleyVerdict::PassesNecessaryConditions { .. } => "passes_necessary_conditions",
        }
    }

    /// Negative verdicts make CLI pipelines branch.
    pub fn is_negative(&self) -> bool {
        matches!(
            self,
            StanleyVerdict::InvalidPolynomial(_) | StanleyVerdict::Obstructed { .. }
        )
    }

    pub fn to_json(&self) -> Value {
        match self {
            StanleyVerdict::InvalidPolynomial(reason) => json!({
                "kind": self.kind(),
                "reason": reason.to_string(),
                "reason_kind": reason.kind(),
            }),
            StanleyVerdict::HypersurfaceInLinearSubspace { dim, degree, profile } => json!({
                "kind": self.kind(),
                "dim": dim,
                "degree": degree,
                "profile": profile.to_json(),
            }),
            StanleyVerdict::Obstructed { zero_indices, profile } => json!({
                "kind": self.kind(),
                "zero_indices": zero_indices,
                "profile": profile.to_json(),
            }),
            StanleyVerdict::PassesNecessaryConditions { profile } => json!({
                "kind": self.kind(),
                "profile": profile.to_json(),
            }),
        }
    }
}

/// The Stanley filter: can this polynomial be the Hilbert polynomial of a
/// nondegenerate reduced equidimensional closed subscheme of codimension
/// >= 2?
///
/// Hypersurfaces in a linear subspace are reported separately (they are the
/// codimension-1 exception with vanishing lower coefficients); otherwise any
/// vanishing Gotzmann coefficient `C_l`, `0 <= l <= r`, is a definitive
/// obstruction.
pub fn stanley_filter(p: &NumericalPolynomial) -> StanleyVerdict {
    let profile = match p.profile() {
        Ok(profile) => profile,
        Err(reason) => return StanleyVerdict::InvalidPolynomial(reason),
    };
    match hypersurface_test(p) {
        Ok(Some(m)) => {
            return StanleyVerdict::HypersurfaceInLinearSubspace {
                dim: m.dim,
                degree: m.degree,
                profile,
            }
        }
        Ok(None) => {}
        Err(reason) => return StanleyVerdict::InvalidPolynomial(reason),
    }
    let zero_indices: Vec<usize> = profile
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == 0)
        .map(|(i, _)| i)
        .collect();
    if zero_indices.is_empty() {
        StanleyVerdict::PassesNecessaryConditions { profile }
    } else {
        StanleyVerdict::Obstructed {
            zero_indices,
            profile,
        }
    }
}

/// Which disjunct of the dichotomy "G = deg or G = M" holds for a saturated
/// reduced equidimensional scheme's data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MgVerdict {
    GEqualsDeg { g: usize, m: usize, deg: u64 },
    GEqualsM { g: usize, m: usize, deg: u64 },
    /// Neither holds: the data cannot be the Hilbert function of a reduced
    /// equidimensional closed subscheme.
    Contradiction { g: usize, m: usize, deg: u64 },
}

impl MgVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            MgVerdict::GEqualsDeg { .. } => "g_equals_deg",
            MgVerdict::GEqualsM { .. } => "g_equals_m",
            MgVerdict::Contradiction { .. } => "contradiction",
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, MgVerdict::Contradiction { .. })
    }

    pub fn parts(&self) -> (usize, usize, u64) {
        match self {
            MgVerdict::GEqualsDeg { g, m, deg }
            | MgVerdict::GEqualsM { g, m, deg }
            | MgVerdict::Contradiction { g, m, deg } => (*g, *m, *deg),
        }
    }

    pub fn to_json(&self) -> Value {
        let (g, m, deg) = self.parts();
        json!({ "kind": self.kind(), "g": g, "m": m, "deg": deg })
    }
}

/// Errors from [`mg_classifier`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MgError {
    NotSaturated,
    InvalidTail(InvalidPolynomial),
}

impl std::fmt::Display for MgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MgError::NotSaturated => write!(f, "the dichotomy needs a saturated spec"),
            MgError::InvalidTail(e) => write!(f, "tail polynomial: {}", e),
        }
    }
}

impl std::error::Error for MgError {}

impl From<MInvariantError> for MgError {
    fn from(_: MInvariantError) -> Self {
        MgError::NotSaturated
    }
}

/// Compute `G`, `M`, `deg` and report which disjunct of the dichotomy holds.
/// The caller asserts the data comes from a reduced equidimensional scheme;
/// `Contradiction` then refutes that assertion.
pub fn mg_classifier(spec: &HilbertFunctionSpec) -> Result<MgVerdict, MgError> {
    let m = spec.m_invariant()?;
    let g = spec.gotzmann_number_data();
    let deg = spec.tail().profile().map_err(MgError::InvalidTail)?.deg;
    Ok(if g as u64 == deg {
        MgVerdict::GEqualsDeg { g, m, deg }
    } else if g == m {
        MgVerdict::GEqualsM { g, m, deg }
    } else {
        MgVerdict::Contradiction { g, m, deg }
    })
}

/// Per-degree findings of the UPP obstruction scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UppDegreeRecord {
    /// Degree with maximal growth `h_{d+1} = h_d^<d>`.
    pub degree: usize,
    /// Macaulay difference set of `h_d` at `d`.
    pub tuple: Vec<BigInt>,
    /// Coefficient table `C_l(h_d, d)` for `0 <= l <= a_d`.
    pub coeff_table: Vec<u64>,
    /// Indices `l < a_d` with `C_l = 0`.
    pub zero_indices: Vec<usize>,
    /// First degree with a form through the points, if any exists up to `d`.
    pub first_form_degree: Option<usize>,
    /// Whether the ideal dimension counts match a principal ideal pattern
    /// and the tuple dimension is consistent with a hypersurface.
    pub hypersurface_escape_possible: bool,
    pub verdict: UppDegreeVerdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum UppDegreeVerdict {
    Clear,
    HypersurfaceCaveat,
    ObstructionFound,
}

impl UppDegreeVerdict {
    fn name(&self) -> &'static str {
        match self {
            UppDegreeVerdict::Clear => "clear",
            UppDegreeVerdict::HypersurfaceCaveat => "hypersurface_caveat",
            UppDegreeVerdict::ObstructionFound => "obstruction_found",
        }
    }
}

/// Verdict of [`upp_check`] on an h-vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UppVerdict {
    /// Not even an O-sequence: no set of points has this h-vector.
    InadmissibleHVector { first_violation: usize },
    /// No degree with maximal growth: the test does not apply.
    NoMaximalGrowth,
    /// The points cannot have the uniform position property.
    ObstructionFound {
        span_dim: u32,
        records: Vec<UppDegreeRecord>,
    },
    /// A vanishing coefficient was found but the data is consistent with the
    /// degree-d part of the ideal being principal; points on an irreducible
    /// hypersurface escape the obstruction, so no verdict is forced.
    HypersurfaceCaveat {
        span_dim: u32,
        records: Vec<UppDegreeRecord>,
    },
    /// Every coefficient in range is nonzero at every maximal-growth degree.
    Clear {
        span_dim: u32,
        records: Vec<UppDegreeRecord>,
    },
}

/// The obstruction relies on the ideal generated through degree d being
/// saturated, which holds under the maximal-growth hypothesis itself; the
/// note travels with every verdict.
const UPP_SATURATION_NOTE: &str = "obstruction verdicts assume the truncated ideal is saturated, \
which follows from the detected maximal growth h_{d+1} = h_d^<d>";

impl UppVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            UppVerdict::InadmissibleHVector { .. } => "inadmissible_h_vector",
            UppVerdict::NoMaximalGrowth => "no_maximal_growth",
            UppVerdict::ObstructionFound { .. } => "obstruction_found",
            UppVerdict::HypersurfaceCaveat { .. } => "hypersurface_caveat",
            UppVerdict::Clear { .. } => "clear",
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(
            self,
            UppVerdict::ObstructionFound { .. } | UppVerdict::InadmissibleHVector { .. }
        )
    }

    pub fn to_json(&self) -> Value {
        let records_json = |records: &[UppDegreeRecord]| {
            Value::Array(
                records
                    .iter()
                    .map(|r| {
                        json!({
                            "degree": r.degree,
                            "tuple": r.tuple.iter().map(crate::jsonval::bigint_to_json).collect::<Vec<_>>(),
                            "coeff_table": r.coeff_table,
                            "zero_indices": r.zero_indices,
                            "first_form_degree": r.first_form_degree,
                            "hypersurface_escape_possible": r.hypersurface_escape_possible,
                            "verdict": r.verdict.name(),
                        })
                    })
                    .collect(),
            )
        };
        match self {
            UppVerdict::InadmissibleHVector { first_violation } => json!({
                "kind": self.kind(),
                "first_violation": first_violation,
            }),
            UppVerdict::NoMaximalGrowth => json!({ "kind": self.kind() }),
            UppVerdict::ObstructionFound { span_dim, records }
            | UppVerdict::HypersurfaceCaveat { span_dim, records }
            | UppVerdict::Clear { span_dim, records } => json!({
                "kind": self.kind(),
                "span_dim": span_dim,
                "records": records_json(records),
                "note": UPP_SATURATION_NOTE,
            }),
        }
    }
}

/// UPP obstruction test on the h-vector (first difference of the Hilbert
/// function) of a finite reduced set of points in `P^n`.
///
/// At every degree `d` with maximal growth `h_{d+1} = h_d^<d>`, the
/// coefficients `C_l(h_d, d)` are the Gotzmann coefficients of the general
/// hyperplane section of the scheme cut out by the forms through the points
/// of degree at most `d`. A vanishing `C_l` with `l < a_d` rules out the
/// uniform position property unless that scheme is an irreducible
/// hypersurface; the escape is assessed by exact dimension counts
/// reconstructed from the h-vector.
///
/// The test works inside the span of the points: `h_1` is the span dimension
/// and degenerate inputs are handled there.
pub fn upp_check(h: &[BigInt], ambient: u32) -> UppVerdict {
    assert!(ambient >= 1, "ambient projective dimension must be at least 1");
    // O-sequence check (the h-vector is the Hilbert function of an Artinian
    // reduction living in `ambient` variables).
    if let Err(first_violation) = is_admissible(h, ambient.saturating_sub(1)) {
        return UppVerdict::InadmissibleHVector { first_violation };
    }
    if h.len() < 3 {
        return UppVerdict::NoMaximalGrowth;
    }
    let span_dim: u32 = u32::try_from(h[1].clone()).expect("h_1 bounded by ambient");
    let mut records = Vec::new();
    for d in 1..h.len() - 1 {
        if h[d].is_zero() {
            continue;
        }
        if h[d + 1] != macaulay_upper(&h[d], d as u32) {
            continue;
        }
        records.push(degree_record(h, d, span_dim));
    }
    if records.is_empty() {
        return UppVerdict::NoMaximalGrowth;
    }
    let strongest = records
        .iter()
        .map(|r| r.verdict)
        .max()
        .expect("records nonempty");
    match strongest {
        UppDegreeVerdict::ObstructionFound => UppVerdict::ObstructionFound { span_dim, records },
        UppDegreeVerdict::HypersurfaceCaveat => UppVerdict::HypersurfaceCaveat { span_dim, records },
        UppDegreeVerdict::Clear => UppVerdict::Clear { span_dim, records },
    }
}

fn degree_record(h: &[BigInt], d: usize, span_dim: u32) -> UppDegreeRecord {
    let tuple = difference_tuple(&h[d], d as u32);
    let a_d = usize::try_from(tuple.top().expect("h_d > 0").clone())
        .expect("top entry bounded by the span dimension");
    let coeff_table: Vec<u64> = (0..=a_d)
        .map(|l| tuple.multiplicity(&BigInt::from(l as u64)) as u64)
        .collect();
    let zero_indices: Vec<usize> = (0..a_d).filter(|&l| coeff_table[l] == 0).collect();

    // Ideal dimension counts in the span: dim (I_Z)_t = C(n + t, n) - H_Z(t).
    let n = span_dim;
    let mut cumulative = BigInt::zero();
    let mut ideal_dims = Vec::with_capacity(d + 1);
    for (t, ht) in h.iter().enumerate().take(d + 1) {
        cumulative += ht;
        ideal_dims.push(binomial(&BigInt::from(n as u64 + t as u64), n) - &cumulative);
    }
    let first_form_degree = ideal_dims.iter().position(|v| v > &BigInt::zero());

    let verdict;
    let mut escape = false;
    if zero_indices.is_empty() {
        verdict = UppDegreeVerdict::Clear;
    } else {
        match first_form_degree {
            None => {
                // No forms through degree d: the truncated ideal is zero and
                // the supporting theorem does not apply. Nothing obstructs.
                verdict = UppDegreeVerdict::Clear;
            }
            Some(e) => {
                // The truncated ideal can be principal, generated by a form
                // of degree e, only if the counts match a free rank-1 module
                // in every degree up to d and the scheme has hypersurface
                // dimension: a_d = dim(X ∩ H) = (n - 1) - 1.
                let counts_principal = (e..=d).all(|t| {
                    ideal_dims[t]
                        == binomial(&BigInt::from(n as u64 + (t - e) as u64), n)
                });
                let dim_matches = n >= 2 && a_d == (n - 2) as usize;
                escape = counts_principal && dim_matches;
                verdict = if escape {
                    UppDegreeVerdict::HypersurfaceCaveat
                } else {
                    UppDegreeVerdict::ObstructionFound
                };
            }
        }
    }
    UppDegreeRecord {
        degree: d,
        tuple: tuple.entries().to_vec(),
        coeff_table,
        zero_indices,
        first_form_degree,
        hypersurface_escape_possible: escape,
        verdict,
    }
}
