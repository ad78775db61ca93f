//! Resultant criteria on a factored real Weil polynomial.
//!
//! If `h = h₁h₂` with nonconstant coprime factors whose resultant is `±1`,
//! `h` is not the real Weil polynomial of a curve. If `h = (t−μ)h₂` and
//! `r = Res(t−μ, rad h₂) ≠ ±1`, the curve maps to an elliptic curve with real
//! Weil polynomial `t−μ` by a map of degree dividing `r`.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{radical, resultant, IntPolynomial};
use crate::json;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExclusionError {
    #[error("the factors multiply to {product}, not to {expected}")]
    InconsistentFactorization { product: String, expected: String },
    #[error("factor {0} is constant or listed twice")]
    BadFactor(String),
    #[error("t - ({mu}) does not divide {h}")]
    NotARoot { mu: i64, h: String },
    #[error("{mu} is a repeated root of {h}")]
    RepeatedRoot { mu: i64, h: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// `h = h1·h2` with `Res(h1, h2) = ±1`.
    Excluded {
        h1: IntPolynomial,
        h2: IntPolynomial,
        #[serde(serialize_with = "json::serialize_bigint", deserialize_with = "json::deserialize_bigint")]
        resultant: BigInt,
    },
    /// A map of degree dividing `r` to an elliptic curve with real Weil
    /// polynomial `t − mu`.
    EllipticMap {
        mu: i64,
        #[serde(serialize_with = "json::serialize_bigint", deserialize_with = "json::deserialize_bigint")]
        r: BigInt,
    },
    NoConclusion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionVerdict {
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ExclusionVerdict {
    pub fn is_excluded(&self) -> bool {
        matches!(self.verdict, Verdict::Excluded { .. })
    }

    /// Recomputes the witness of an `Excluded` verdict against `h`.
    pub fn witness_holds(&self, h: &IntPolynomial) -> bool {
        match &self.verdict {
            Verdict::Excluded { h1, h2, resultant: r } => {
                !h1.is_constant()
                    && !h2.is_constant()
                    && &(h1 * h2) == h
                    && r.abs().is_one()
                    && resultant(h1, h2).ok().as_ref() == Some(r)
            }
            _ => true,
        }
    }
}

fn product(factors: &[(IntPolynomial, u32)]) -> IntPolynomial {
    factors.iter().fold(IntPolynomial::one(), |acc, (f, m)| &acc * &f.pow(*m))
}

/// Looks for a split `h = h₁h₂` into products of whole prime-power factors
/// with resultant `±1`. Bipartitions are tried in a fixed order, with the
/// smallest factor always in `h₁`, so the result does not depend on the order
/// of `factors`.
pub fn serre_test(h: &IntPolynomial, factors: &[(IntPolynomial, u32)]) -> Result<ExclusionVerdict, ExclusionError> {
    let mut factors = factors.to_vec();
    factors.sort();
    for (i, (f, m)) in factors.iter().enumerate() {
        if f.is_constant() || *m == 0 || factors[..i].iter().any(|(g, _)| g == f) {
            return Err(ExclusionError::BadFactor(f.to_string()));
        }
    }
    let prod = product(&factors);
    if &prod != h {
        return Err(ExclusionError::InconsistentFactorization {
            product: prod.to_string(),
            expected: h.to_string(),
        });
    }
    let k = factors.len();
    let mut notes = Vec::new();
    if k < 2 {
        notes.push("no proper split into coprime factors".to_string());
        return Ok(ExclusionVerdict {
            verdict: Verdict::NoConclusion,
            notes,
        });
    }
    for mask in 1u64..(1 << (k - 1)) {
        let (mut first, mut second) = (vec![factors[0].clone()], Vec::new());
        for (i, f) in factors.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                second.push(f.clone());
            } else {
                first.push(f.clone());
            }
        }
        let (h1, h2) = (product(&first), product(&second));
        let r = resultant(&h1, &h2).expect("nonzero factors");
        if r.abs().is_one() {
            return Ok(ExclusionVerdict {
                verdict: Verdict::Excluded { h1, h2, resultant: r },
                notes,
            });
        }
        notes.push(format!("Res({h1}, {h2}) = {r}"));
    }
    Ok(ExclusionVerdict {
        verdict: Verdict::NoConclusion,
        notes,
    })
}

/// Resultant of `t − μ` with the radical of `h/(t − μ)`.
pub fn howe_lauter_test(h: &IntPolynomial, mu: i64) -> Result<ExclusionVerdict, ExclusionError> {
    let linear = IntPolynomial::linear(mu);
    let Some(rest) = h.div_exact(&linear) else {
        return Err(ExclusionError::NotARoot { mu, h: h.to_string() });
    };
    if rest.eval(&BigInt::from(mu)) == BigInt::from(0) {
        return Err(ExclusionError::RepeatedRoot { mu, h: h.to_string() });
    }
    let rad = if rest.is_constant() {
        IntPolynomial::one()
    } else {
        radical(&rest).map_err(|_| ExclusionError::BadFactor(rest.to_string()))?
    };
    let r = resultant(&linear, &rad).expect("nonzero");
    let notes = vec![format!("Res({linear}, {rad}) = {r}")];
    let verdict = if r.abs().is_one() {
        Verdict::NoConclusion
    } else {
        Verdict::EllipticMap { mu, r }
    };
    Ok(ExclusionVerdict { verdict, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lin(r: i64) -> IntPolynomial {
        IntPolynomial::linear(r)
    }

    #[test]
    fn genus_ten_candidate_is_excluded() {
        let h = &lin(-3).pow(3) * &lin(-4).pow(7);
        let v = serre_test(&h, &[(lin(-4), 7), (lin(-3), 3)]).unwrap();
        let Verdict::Excluded { h1, h2, resultant } = &v.verdict else {
            panic!("expected exclusion, got {v:?}");
        };
        assert_eq!(*h1, lin(-3).pow(3));
        assert_eq!(*h2, lin(-4).pow(7));
        assert!(resultant.abs().is_one());
        assert!(v.witness_holds(&h));
    }

    #[test]
    fn genus_four_candidate() {
        let h = &lin(-2) * &lin(-5).pow(3);
        let v = serre_test(&h, &[(lin(-2), 1), (lin(-5), 3)]).unwrap();
        assert_eq!(v.verdict, Verdict::NoConclusion);
        let v = howe_lauter_test(&h, -2).unwrap();
        assert_eq!(v.verdict, Verdict::EllipticMap { mu: -2, r: BigInt::from(3) });
    }

    #[test]
    fn trivial_cases() {
        let q = IntPolynomial::from_i64s(&[-7, 0, 1]);
        assert_eq!(serre_test(&q, &[(q.clone(), 1)]).unwrap().verdict, Verdict::NoConclusion);
        let h = &lin(-2) * &lin(-3);
        assert_eq!(howe_lauter_test(&h, -2).unwrap().verdict, Verdict::NoConclusion);
        let h = &lin(-2).pow(2) * &lin(-5);
        assert!(matches!(howe_lauter_test(&h, -2), Err(ExclusionError::RepeatedRoot { .. })));
        assert!(matches!(howe_lauter_test(&h, 1), Err(ExclusionError::NotARoot { .. })));
        assert!(matches!(
            serre_test(&h, &[(lin(-2), 1), (lin(-5), 1)]),
            Err(ExclusionError::InconsistentFactorization { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let h = &lin(-3).pow(3) * &lin(-4).pow(7);
        let v = serre_test(&h, &[(lin(-3), 3), (lin(-4), 7)]).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.starts_with(r#"{"verdict":{"status":"EXCLUDED","h1":["#), "{s}");
        assert_eq!(serde_json::from_str::<ExclusionVerdict>(&s).unwrap(), v);
        let v = howe_lauter_test(&(&lin(-2) * &lin(-5).pow(3)), -2).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<ExclusionVerdict>(&s).unwrap(), v);
    }

    proptest! {
        #[test]
        fn two_integer_roots(m in -5i64..=5, n in -5i64..=5, a in 1u32..4, b in 1u32..4) {
            prop_assume!(m != n);
            let h = &lin(m).pow(a) * &lin(n).pow(b);
            let v = serre_test(&h, &[(lin(m), a), (lin(n), b)]).unwrap();
            prop_assert_eq!(v.is_excluded(), (m - n).abs() == 1);
            prop_assert!(v.witness_holds(&h));
            let w = serre_test(&h, &[(lin(n), b), (lin(m), a)]).unwrap();
            prop_assert_eq!(v, w);
        }
    }
}
