//! Seed-deterministic random monomial ideals for the verification corpus.
//!
//! The committed corpus is generated with [`CORPUS_SEED`] and checked into
//! the repository; a test asserts the file matches regeneration.

use super::ideal::MonomialIdeal;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed of the committed corpus.
pub const CORPUS_SEED: u64 = 20260811;

/// Size of the committed corpus.
pub const CORPUS_COUNT: usize = 220;

/// Random desk-scale ideals: 2 to 4 variables, at most 6 generators, degrees
/// at most 5. Unit ideals cannot occur (generator degrees are at least 1).
pub fn generate_corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let nvars = rng.gen_range(2..=4usize);
        let gen_count = rng.gen_range(1..=6usize);
        let mut gens = Vec::with_capacity(gen_count);
        for _ in 0..gen_count {
            let degree = rng.gen_range(1..=5u32);
            let mut exps = vec![0u32; nvars];
            for _ in 0..degree {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            gens.push(exps);
        }
        out.push(MonomialIdeal::new(nvars, gens));
    }
    out
}
