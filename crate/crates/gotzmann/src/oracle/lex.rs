//! Lex-segment ideals: degree-by-degree lex-initial construction realizing
//! an admissible Hilbert function, with the maximum generator degree
//! reported (it is the persistence index of the quotient).

use super::ideal::{MonomialIdeal, OracleError};
use crate::combinatorics::binomial;
use crate::hilbert_data::is_admissible;
use num_bigint::BigInt;
use num_traits::Zero;

/// A monomial ideal whose degree-d pieces are lex-initial segments for every
/// degree in the construction range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexIdeal {
    ideal: MonomialIdeal,
    max_gen_degree: Option<usize>,
    built_through: usize,
}

impl LexIdeal {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// Largest degree of a minimal generator; `None` for the zero ideal.
    pub fn max_gen_degree(&self) -> Option<usize> {
        self.max_gen_degree
    }

    /// Last degree the construction covered.
    pub fn built_through(&self) -> usize {
        self.built_through
    }
}

/// Degree-`d` monomials in `nvars` variables, in descending lexicographic
/// order with `x_0 > x_1 > ... ` (exponent tuples compared left to right).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    assert!(nvars >= 1);
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(var: usize, remaining: u32, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if var + 1 == exps.len() {
            exps[var] = remaining;
            out.push(exps.clone());
            exps[var] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            exps[var] = e;
            rec(var + 1, remaining - e, exps, out);
        }
        exps[var] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Build the lex-segment ideal realizing an admissible Hilbert function in
/// `P^ambient`, through the last degree of `seq`.
///
/// In each degree the ideal piece is the lex-initial segment of size
/// `dim R_d - seq[d]`; multiples of earlier generators always form a prefix
/// of it (this is the content of Macaulay's theorem and is asserted), so the
/// counting values of the result reproduce `seq` exactly.
pub fn lex_segment(seq: &[BigInt], ambient: u32) -> Result<LexIdeal, OracleError> {
    if let Err(degree) = is_admissible(seq, ambient) {
        return Err(OracleError::Inadmissible { degree });
    }
    let nvars = ambient as usize + 1;
    let mut gens: Vec<Vec<u32>> = Vec::new();
    let mut max_gen_degree = None;
    for (d, target) in seq.iter().enumerate().skip(1) {
        let dim = binomial(&BigInt::from(nvars as u64 - 1 + d as u64), nvars as u32 - 1);
        let needed = &dim - target;
        debug_assert!(needed >= BigInt::zero(), "admissible values fit the ring");
        let needed = usize::try_from(needed).expect("desk-scale segment size");
        let monomials = monomials_of_degree(nvars, d as u32);
        for (idx, m) in monomials.iter().enumerate() {
            let covered = gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b));
            if idx < needed {
                if !covered {
                    gens.push(m.clone());
                    max_gen_degree = Some(d);
                }
            } else {
                assert!(
                    !covered,
                    "multiples of a lex segment left the next lex segment; the target is not admissible"
                );
            }
        }
    }
    let built_through = seq.len() - 1;
    Ok(LexIdeal {
        ideal: MonomialIdeal::new(nvars, gens),
        max_gen_degree,
        built_through,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn lex_order_is_descending() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(
            ms,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2],
            ]
        );
    }

    #[test]
    fn collinear_points_lex_ideal() {
        let lex = lex_segment(&seq(&[1, 2, 3, 3, 3, 3]), 2).unwrap();
        assert_eq!(
            lex.ideal().gens(),
            &[vec![0, 3, 0], vec![1, 0, 0]],
            "expected (x1^3, x0)"
        );
        assert_eq!(lex.max_gen_degree(), Some(3));
        for (d, v) in [1u64, 2, 3, 3, 3, 3].iter().enumerate() {
            assert_eq!(lex.ideal().hilbert_value(d as u32), *v, "degree {}", d);
        }
    }

    #[test]
    fn full_ring_gives_zero_ideal() {
        let lex = lex_segment(&seq(&[1, 3, 6, 10, 15]), 2).unwrap();
        assert!(lex.ideal().is_zero_ideal());
        assert_eq!(lex.max_gen_degree(), None);
    }

    #[test]
    fn twisted_cubic_lex_ideal() {
        let lex = lex_segment(&seq(&[1, 4, 7, 10, 13, 16, 19]), 3).unwrap();
        assert_eq!(lex.max_gen_degree(), Some(4));
        for (d, v) in [1u64, 4, 7, 10, 13, 16, 19].iter().enumerate() {
            assert_eq!(lex.ideal().hilbert_value(d as u32), *v, "degree {}", d);
        }
    }

    #[test]
    fn inadmissible_rejected_with_degree() {
        assert_eq!(
            lex_segment(&seq(&[1, 3, 3, 5]), 2),
            Err(OracleError::Inadmissible { degree: 2 })
        );
    }

    #[test]
    fn maximal_growth_iff_no_new_lex_generator() {
        // The Macaulay bound is attained at degree d exactly when the lex
        // ideal acquires no generator in degree d + 1.
        use crate::combinatorics::macaulay_upper;
        let corpus = crate::oracle::generate_corpus(crate::oracle::CORPUS_SEED, 80);
        for ideal in &corpus {
            let window = 10usize;
            let values = ideal.hilbert_values(window);
            let ambient = ideal.nvars() as u32 - 1;
            let lex = lex_segment(&values, ambient).expect("counted values are admissible");
            let gen_degrees: std::collections::HashSet<usize> = lex
                .ideal()
                .gens()
                .iter()
                .map(|g| g.iter().sum::<u32>() as usize)
                .collect();
            for d in 1..window {
                let maximal = values[d + 1] == macaulay_upper(&values[d], d as u32);
                assert_eq!(
                    maximal,
                    !gen_degrees.contains(&(d + 1)),
                    "ideal {} at degree {}",
                    ideal,
                    d
                );
            }
        }
    }

    #[test]
    fn artinian_sequence_built() {
        // (1, 2, 3, 4, 5, 4, 3, 2, 1, 0, 0): the lex ideal must reproduce it
        // and acquire its last generator at degree 9.
        let values = seq(&[1, 2, 3, 4, 5, 4, 3, 2, 1, 0, 0]);
        let lex = lex_segment(&values, 1).unwrap();
        for (d, v) in values.iter().enumerate() {
            assert_eq!(
                BigInt::from(lex.ideal().hilbert_value(d as u32)),
                v.clone(),
                "degree {}",
                d
            );
        }
        assert_eq!(lex.max_gen_degree(), Some(9));
    }
}
