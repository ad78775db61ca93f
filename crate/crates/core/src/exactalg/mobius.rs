use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::AlgError;

/// Möbius function by trial division.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n > 0);
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Place counts from point counts: `a_n = (1/n) Σ_{d|n} μ(n/d) N_d`.
///
/// `counts[i]` is `N_{i+1}`. Fails when some `a_n` is not an integer.
pub fn mobius_a_from_n(counts: &[BigInt]) -> Result<Vec<BigInt>, AlgError> {
    (1..=counts.len() as u64)
        .map(|n| {
            let sum: BigInt = divisors(n)
                .into_iter()
                .map(|d| BigInt::from(mobius(n / d)) * &counts[d as usize - 1])
                .sum();
            let (a, r) = sum.div_rem(&BigInt::from(n));
            if r.is_zero() {
                Ok(a)
            } else {
                Err(AlgError::NonIntegralPlaceCount { degree: n as usize })
            }
        })
        .collect()
}

/// Point counts from place counts: `N_n = Σ_{d|n} d·a_d`.
pub fn n_from_a(places: &[BigInt]) -> Vec<BigInt> {
    (1..=places.len() as u64)
        .map(|n| {
            divisors(n)
                .into_iter()
                .map(|d| BigInt::from(d) * &places[d as usize - 1])
                .sum()
        })
        .collect()
}
