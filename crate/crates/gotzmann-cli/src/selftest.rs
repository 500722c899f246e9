//! Golden-example self-test: every worked example the library is built
//! around, run end to end with exact expected values.

use crate::commands::Outcome;
use gotzmann::classifiers::{
    hypersurface_test, mg_classifier, stanley_filter, upp_check, MgVerdict, StanleyVerdict,
    UppVerdict,
};
use gotzmann::hilbert_data::{is_admissible, HilbertFunctionSpec};
use gotzmann::numerical_poly::{c0_via_genus, hypersurface_polynomial, NumericalPolynomial};
use gotzmann::oracle::{lex_segment, MonomialIdeal};
use gotzmann::{binomial, difference_tuple, expand, macaulay_upper, tuple_value};
use num_bigint::BigInt;
use serde_json::json;

fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

fn seq(vals: &[i64]) -> Vec<BigInt> {
    vals.iter().map(|&v| bi(v)).collect()
}

fn poly(coeffs: &[i64]) -> NumericalPolynomial {
    NumericalPolynomial::from_binomial_coeffs(coeffs.iter().map(|&c| bi(c)).collect())
}

fn twisted_cubic_spec() -> HilbertFunctionSpec {
    HilbertFunctionSpec::new(seq(&[1, 4, 7, 10, 13, 16]), poly(&[1, 3]), 0, 3, true).unwrap()
}

fn plane_cubic_spec() -> HilbertFunctionSpec {
    HilbertFunctionSpec::new(seq(&[1, 3, 6, 9, 12]), poly(&[0, 3]), 1, 3, true).unwrap()
}

fn collinear_spec(d: i64) -> HilbertFunctionSpec {
    let mut values: Vec<i64> = (1..=d).collect();
    values.push(d);
    values.push(d);
    HilbertFunctionSpec::new(seq(&values), poly(&[d]), (d - 1) as usize, 2, true).unwrap()
}

type Check = (&'static str, fn() -> bool);

fn checks() -> Vec<Check> {
    vec![
        ("binomial convention C(1,2) = 0", || binomial(&bi(1), 2) == bi(0)),
        ("4-binomial expansion of 27", || {
            let e = expand(&bi(27), 4);
            e.ks() == [bi(6), bi(5), bi(2), bi(1)]
        }),
        ("3-binomial expansion of 6", || {
            expand(&bi(6), 3).ks() == [bi(4), bi(2), bi(1)]
        }),
        ("3-binomial expansion of 13", || {
            expand(&bi(13), 3).ks() == [bi(5), bi(3)]
        }),
        ("M_4(27) = (2,2,0,0)", || {
            difference_tuple(&bi(27), 4).entries() == seq(&[2, 2, 0, 0])
        }),
        ("M_3(13) = (2,1): rational normal curve in P^4 at degree 3", || {
            difference_tuple(&bi(13), 3).entries() == seq(&[2, 1])
        }),
        ("M_7(112) = (2,2,2,2,2,0,0)", || {
            difference_tuple(&bi(112), 7).entries() == seq(&[2, 2, 2, 2, 2, 0, 0])
        }),
        ("tuple (2,2,0,0) at degree 4 has value 27", || {
            tuple_value(&seq(&[2, 2, 0, 0]), 4).unwrap() == bi(27)
        }),
        ("tuple (1,1,1,0) at degree 4 has value 13", || {
            tuple_value(&seq(&[1, 1, 1, 0]), 4).unwrap() == bi(13)
        }),
        ("10^<3> = 15, so growth 10 -> 13 is not maximal", || {
            macaulay_upper(&bi(10), 3) == bi(15)
        }),
        ("112^<7> = 147: maximal growth in degrees 7 and 8", || {
            macaulay_upper(&bi(112), 7) == bi(147)
        }),
        ("(3z+1)(4) = 13", || poly(&[1, 3]).eval_at(4) == bi(13)),
        ("(3z)(0) = 0", || poly(&[0, 3]).eval_at(0) == bi(0)),
        ("Gotzmann difference set of 3z+1 is (1,1,1,0)", || {
            poly(&[1, 3]).gotzmann_decompose().unwrap().entries() == seq(&[1, 1, 1, 0])
        }),
        ("Gotzmann difference set of a constant s is s zeros", || {
            poly(&[5]).gotzmann_decompose().unwrap().entries() == seq(&[0, 0, 0, 0, 0])
        }),
        ("profile of 3z+1: G = 4, C = (1,3), genus 0", || {
            let p = poly(&[1, 3]).profile().unwrap();
            p.g == 4 && p.coeffs == [1, 3] && p.dim == 1 && p.deg == 3 && p.genus == bi(0)
        }),
        ("profile of 3z: C_0 = 0, genus 1", || {
            let p = poly(&[0, 3]).profile().unwrap();
            p.g == 3 && p.coeffs == [0, 3] && p.genus == bi(1)
        }),
        ("hypersurface polynomial (r,d) = (1,3) is 3z", || {
            hypersurface_polynomial(1, 3) == poly(&[0, 3])
        }),
        ("tower of 3z+1: G_0 = 4, G_1 = 3, C_0 = 1", || {
            let tower = poly(&[1, 3]).section_tower().unwrap();
            tower[0].g == 4 && tower[1].g == 3 && tower[0].coeffs[0] == 1
        }),
        ("genus formula on the twisted cubic tower gives C_0 = 1", || {
            c0_via_genus(&poly(&[1, 3]).section_tower().unwrap()) == bi(1)
        }),
        ("genus formula on the plane cubic tower gives C_0 = 0", || {
            c0_via_genus(&poly(&[0, 3]).section_tower().unwrap()) == bi(0)
        }),
        ("(1,2,3,3) is admissible in P^2: collinear points", || {
            is_admissible(&seq(&[1, 2, 3, 3]), 2).is_ok()
        }),
        ("twisted cubic: maximal growth begins in degree 4", || {
            twisted_cubic_spec().gotzmann_number_data() == 4
        }),
        ("plane cubic: G = 3", || plane_cubic_spec().gotzmann_number_data() == 3),
        ("three collinear points: G = 3", || {
            collinear_spec(3).gotzmann_number_data() == 3
        }),
        ("three collinear points: M = 1", || {
            collinear_spec(3).m_invariant().unwrap() == 1
        }),
        ("collinear growth report: Green equality everywhere, growth maximal from 3", || {
            let report = collinear_spec(3).growth_report();
            report.green_equality.iter().all(|(_, ok)| *ok)
                && report
                    .maximal_growth
                    .iter()
                    .all(|(d, ok)| if *d >= 3 { *ok } else { true })
                && report.g_of_x == 3
        }),
        ("h-vector (1,5,12,22,37,57,82,112,147) sums back to H_Z", || {
            let h = seq(&[1, 5, 12, 22, 37, 57, 82, 112, 147]);
            let mut total = bi(0);
            let cumulative: Vec<BigInt> = h
                .iter()
                .map(|v| {
                    total += v;
                    total.clone()
                })
                .collect();
            cumulative[8] == bi(1) + 5 + 12 + 22 + 37 + 57 + 82 + 112 + 147
        }),
        ("hypersurface test accepts 3z as a plane cubic", || {
            matches!(
                hypersurface_test(&poly(&[0, 3])).unwrap(),
                Some(m) if m.dim == 1 && m.degree == 3
            )
        }),
        ("hypersurface test rejects 3z+1", || {
            hypersurface_test(&poly(&[1, 3])).unwrap().is_none()
        }),
        ("constant 5 is the zero-dimensional case (5 collinear points)", || {
            matches!(
                hypersurface_test(&poly(&[5])).unwrap(),
                Some(m) if m.dim == 0 && m.degree == 5 && m.zero_dimensional
            )
        }),
        ("Stanley filter: 3z+1 passes the necessary conditions", || {
            matches!(
                stanley_filter(&poly(&[1, 3])),
                StanleyVerdict::PassesNecessaryConditions { .. }
            )
        }),
        ("Stanley filter: 3z is a hypersurface in a linear subspace", || {
            matches!(
                stanley_filter(&poly(&[0, 3])),
                StanleyVerdict::HypersurfaceInLinearSubspace { dim: 1, degree: 3, .. }
            )
        }),
        ("dichotomy: collinear points give G = deg", || {
            matches!(
                mg_classifier(&collinear_spec(3)).unwrap(),
                MgVerdict::GEqualsDeg { g: 3, m: 1, deg: 3 }
            )
        }),
        ("dichotomy: plane cubic gives G = deg", || {
            matches!(
                mg_classifier(&plane_cubic_spec()).unwrap(),
                MgVerdict::GEqualsDeg { g: 3, m: 1, deg: 3 }
            )
        }),
        ("UPP obstruction on the P^5 example h-vector", || {
            let h = seq(&[1, 5, 12, 22, 37, 57, 82, 112, 147]);
            match upp_check(&h, 5) {
                UppVerdict::ObstructionFound { records, .. } => records
                    .iter()
                    .any(|r| r.degree == 7 && r.coeff_table == [2, 0, 5]),
                _ => false,
            }
        }),
        ("Artinian example: H(A,3) = 6 with tuple (1,0,0)", || {
            let ideal = MonomialIdeal::new(3, vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]);
            let t = difference_tuple(&bi(6), 3);
            ideal.hilbert_value(3) == 6
                && t.entries() == seq(&[1, 0, 0])
                && t.len() == 3
                && t.multiplicity(&bi(1)) == 1
                && t.multiplicity(&bi(0)) == 2
        }),
        ("lex ideal of collinear points is (x0, x1^3) with top degree 3", || {
            match lex_segment(&seq(&[1, 2, 3, 3, 3, 3]), 2) {
                Ok(lex) => {
                    lex.max_gen_degree() == Some(3)
                        && lex.ideal().gens() == [vec![0, 3, 0], vec![1, 0, 0]]
                }
                Err(_) => false,
            }
        }),
    ]
}

pub fn run() -> Result<Outcome, String> {
    let mut results = Vec::new();
    let mut failed = 0usize;
    for (name, check) in checks() {
        let passed = check();
        if !passed {
            failed += 1;
        }
        eprintln!("{} {}", if passed { "PASS" } else { "FAIL" }, name);
        results.push(json!({ "name": name, "passed": passed }));
    }
    let total = results.len();
    Ok(Outcome {
        json: json!({
            "total": total,
            "failed": failed,
            "results": results,
        }),
        summary: Some(format!("{}/{} golden examples passed", total - failed, total)),
        negative: failed > 0,
    })
}
