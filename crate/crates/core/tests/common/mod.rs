//! Property checks shared by the property suite and the acceptance run.
//! Each returns `Err` with a counterexample description on failure.

#![allow(dead_code)]

use curvebound::exactalg::{count_roots_closed, resultant, sylvester_resultant, IntPolynomial, Point};
use curvebound::weilsearch::{self, FactorTable, SearchConstraints, DEFAULT_NODE_CAP};
use curvebound::zeta;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn poly(max_degree: usize) -> impl Strategy<Value = IntPolynomial> {
    (1..=max_degree)
        .prop_flat_map(|d| (prop::collection::vec(-9i64..=9, d), prop_oneof![-9i64..=-1, 1i64..=9]))
        .prop_map(|(mut low, lead)| {
            low.push(lead);
            IntPolynomial::from_i64s(&low)
        })
}

/// Res(f, g) = (−1)^{deg f·deg g} Res(g, f), Res(f·h, g) = Res(f, g)·Res(h, g),
/// and the subresultant value equals the Sylvester determinant.
pub fn resultant_laws(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(poly(5), poly(5), poly(3)), |(f, g, h)| {
            let fg = resultant(&f, &g).unwrap();
            let gf = resultant(&g, &f).unwrap();
            let sign = if (f.degree().unwrap() * g.degree().unwrap()) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(&fg, &(&gf * sign));
            prop_assert_eq!(&fg, &sylvester_resultant(&f, &g).unwrap());
            let fh_g = resultant(&(&f * &h), &g).unwrap();
            prop_assert_eq!(fh_g, &fg * resultant(&h, &g).unwrap());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Sturm counts on `[lo, hi]` against sign changes on the grid of odd
/// quarters, for `c·∏(2t − k)·(t² + s)` with distinct half-integer roots
/// `k/2`. Squaring a factor must not change the count of distinct roots.
pub fn sturm_matches_grid(cases: u32) -> Result<(), String> {
    let strategy = (
        prop::collection::btree_set(-24i64..=24, 0..6),
        1i64..=5,
        -12i64..=11,
        1i64..=12,
        any::<bool>(),
    );
    runner(cases)
        .run(&strategy, |(roots, s, lo, width, square_first)| {
            let hi = (lo + width).min(12);
            let mut p = IntPolynomial::from_i64s(&[s, 0, 1]);
            for &k in &roots {
                p = &p * &IntPolynomial::from_i64s(&[-k, 2]);
            }
            let (lo_pt, hi_pt) = (Point::integer(lo), Point::integer(hi));
            let sturm = count_roots_closed(&p, &lo_pt, &hi_pt);
            let mut changes = 0;
            let four = BigInt::from(4);
            let mut prev = p.eval_homogeneous(&BigInt::from(4 * lo - 1), &four);
            let mut j = 4 * lo + 1;
            while j <= 4 * hi + 1 {
                let v = p.eval_homogeneous(&BigInt::from(j), &four);
                if v.is_zero() || prev.is_zero() {
                    return Err(TestCaseError::fail("grid point hit a root"));
                }
                if v.is_positive() != prev.is_positive() {
                    changes += 1;
                }
                prev = v;
                j += 2;
            }
            prop_assert_eq!(sturm, changes);
            if let Some(&k) = roots.iter().next().filter(|_| square_first) {
                let q = &p * &IntPolynomial::from_i64s(&[-k, 2]);
                prop_assert_eq!(count_roots_closed(&q, &lo_pt, &hi_pt), sturm);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// For `h` with roots in `[−5, 5]` over `F_7`: `h → L → h` is the identity and
/// the two routes to point counts agree.
pub fn zeta_round_trips(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&prop::collection::vec(-5i64..=5, 1..=6), |roots| {
            let h = IntPolynomial::from_roots(&roots);
            let l = zeta::l_from_h(7, &h);
            prop_assert_eq!(zeta::h_from_l(7, &l).unwrap(), h.clone());
            let from_h = zeta::counts_from_h(7, &h, 12).unwrap();
            prop_assert_eq!(&from_h, &zeta::counts_from_l(7, &l, 12));
            let g = roots.len();
            prop_assert_eq!(zeta::l_from_counts(7, g, &from_h[..g]).unwrap(), l);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// The factor-table search against the coefficient-box scan, for every
/// `q ∈ {3, 5, 7}`, `g ≤ 2` and `0 ≤ N ≤ q + 1 + ⌊4√q⌋`.
pub fn search_matches_oracle() -> Result<usize, String> {
    let mut compared = 0;
    for q in [3u64, 5, 7] {
        let top = q + 1 + (16 * q).isqrt();
        for g in 1..=2usize {
            for n in 0..=top as i64 {
                let c = SearchConstraints::new(q, g, n);
                let mut fast: Vec<IntPolynomial> =
                    weilsearch::enumerate_real_weil(&c).map_err(|e| e.to_string())?.into_iter().map(|w| w.h).collect();
                let mut slow = weilsearch::brute_force_oracle(&c).map_err(|e| e.to_string())?;
                fast.sort();
                slow.sort();
                if fast != slow {
                    return Err(format!("q={q} g={g} N={n}: search {fast:?} vs oracle {slow:?}"));
                }
                compared += 1;
            }
        }
    }
    Ok(compared)
}

/// Any permutation of the factor table gives the same candidates.
pub fn table_order_irrelevant(cases: u32) -> Result<(), String> {
    let constraints = [
        SearchConstraints::new(7, 4, 25),
        SearchConstraints::new(7, 4, 24),
        SearchConstraints::new(5, 3, 16),
        SearchConstraints::new(7, 10, 45).with_lower(2, 3),
    ];
    let tables: Vec<(SearchConstraints, FactorTable)> = constraints
        .into_iter()
        .filter_map(|c| {
            let t = FactorTable::for_constraints(&c, DEFAULT_NODE_CAP).ok().flatten()?;
            Some((c, t))
        })
        .collect();
    let expected: Vec<_> = tables.iter().map(|(c, t)| weilsearch::enumerate_with_table(c, t)).collect();
    runner(cases)
        .run(&(0..tables.len(), any::<u64>()), |(i, seed)| {
            let (c, t) = &tables[i];
            let mut order: Vec<usize> = (0..t.len()).collect();
            // Fisher–Yates driven by a simple LCG on `seed`.
            let mut s = seed;
            for k in (1..order.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(k, (s >> 33) as usize % (k + 1));
            }
            prop_assert_eq!(&weilsearch::enumerate_with_table(c, &t.reordered(&order)), &expected[i]);
            Ok(())
        })
        .map_err(|e| e.to_string())
}
