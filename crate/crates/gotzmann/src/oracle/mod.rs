//! Ground-truth engine: monomial ideals with exact Hilbert-function
//! counting, lex-segment construction, saturation, generic hyperplane
//! restriction by exact linear algebra, and randomized verification of the
//! growth bounds and persistence identities at desk scale.

mod corpus;
mod ideal;
mod lex;
mod restriction;
mod verify;

pub use corpus::{generate_corpus, CORPUS_COUNT, CORPUS_SEED};
pub use ideal::{hilbert_polynomial_of, spec_from_ideal, MonomialIdeal, OracleError};
pub use lex::{lex_segment, monomials_of_degree, LexIdeal};
pub use restriction::{bareiss_rank, generic_restriction};
pub use verify::{persistence_index_scan, verify_suite, CheckRecord, VerificationReport};
