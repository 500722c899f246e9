//! Exact combinatorial calculus on Hilbert functions and Hilbert polynomials.
//!
//! The crate implements, in arbitrary-precision integer arithmetic:
//!
//! * d-binomial expansions, Macaulay difference sets, and the Macaulay/Green
//!   growth functions `c^<d>` and `c_<d>` ([`combinatorics`]);
//! * numerical polynomials in the binomial basis `C(z,i)`, their Gotzmann
//!   decomposition, and the invariants derivable from a Hilbert polynomial
//!   alone: Gotzmann number, Gotzmann coefficients, dimension, degree,
//!   arithmetic genus, hyperplane-section tower ([`numerical_poly`]);
//! * finite Hilbert-function data with an eventual polynomial tail,
//!   admissibility checking, and the data-level invariants G and M
//!   ([`hilbert_data`]);
//! * decision procedures: the hypersurface characterization, the Stanley
//!   polynomial filter, and the uniform-position obstruction test
//!   ([`classifiers`]);
//! * a self-contained monomial-ideal oracle with exact Hilbert-function
//!   counting, lex-segment construction, saturation, and generic hyperplane
//!   restriction by exact linear algebra ([`oracle`]).
//!
//! Everything is pure and deterministic; values are immutable and freely
//! shareable across threads.

pub mod classifiers;
pub mod combinatorics;
pub mod hilbert_data;
pub mod jsonval;
pub mod numerical_poly;
pub mod oracle;

pub use combinatorics::{
    binomial, difference_tuple, expand, green_lower, macaulay_upper, signed_binomial, tuple_value,
    BinomialExpansion, DifferenceTuple,
};
pub use numerical_poly::{
    hypersurface_polynomial, GotzmannProfile, InvalidPolynomial, NumericalPolynomial,
};
