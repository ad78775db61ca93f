//! Conversions among point counts `N_n`, the Weil polynomial `L(t)`, the real
//! Weil polynomial `h(t)` and place counts `a_d`.
//!
//! `L(t) = t^g h(qt + 1/t)`, `N_n = q^n + 1 − Σ(α_i^n + ᾱ_i^n)` and
//! `N_n = Σ_{d|n} d·a_d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{mobius_a_from_n, n_from_a, sturm_roots_in_symmetric_interval, IntPolynomial};
use crate::json;

/// Default number of place counts carried in [`WeilData`].
pub const DEFAULT_DEPTH: usize = 10;

/// Place counts shown in summaries.
pub const SUMMARY_LENGTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("expected {expected} point counts, got {found}")]
    WrongCountLength { expected: usize, found: usize },
    #[error("coefficient of t^{index} is not an integer; the point counts are inconsistent")]
    NonIntegralCoefficient { index: usize },
    #[error("the real Weil polynomial must be monic")]
    NotMonic,
    #[error("L(t) must have even degree 2g, found degree {0:?}")]
    BadDegree(Option<usize>),
    #[error("L(t) is not of the form t^g h(qt + 1/t): coefficient of t^{index} is {found}, expected {expected}")]
    NotSymmetric { index: usize, expected: BigInt, found: BigInt },
    #[error("place counts are inconsistent: {0}")]
    Places(String),
}

fn qpow(q: u64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(q), e)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Weil polynomial from `N_1 .. N_g` through
/// `log L(t) = Σ (N_n − q^n − 1) t^n / n`, completed by the functional
/// equation `b_{2g−i} = q^{g−i} b_i`.
pub fn l_from_counts(q: u64, g: usize, counts: &[BigInt]) -> Result<IntPolynomial, ZetaError> {
    if counts.len() != g {
        return Err(ZetaError::WrongCountLength {
            expected: g,
            found: counts.len(),
        });
    }
    let excess: Vec<BigInt> = (1..=g).map(|n| &counts[n - 1] - qpow(q, n) - 1).collect();
    // n·c_n = Σ_{k=1..n} (N_k − q^k − 1)·c_{n−k}
    let mut c = vec![BigInt::one()];
    for n in 1..=g {
        let sum: BigInt = (1..=n).map(|k| &excess[k - 1] * &c[n - k]).sum();
        let (quot, rem) = sum.div_rem(&BigInt::from(n));
        if !rem.is_zero() {
            return Err(ZetaError::NonIntegralCoefficient { index: n });
        }
        c.push(quot);
    }
    for i in (0..g).rev() {
        let b = qpow(q, g - i) * &c[i];
        c.push(b);
    }
    Ok(IntPolynomial::new(c))
}

/// `t^g h(qt + 1/t)` with `g = deg h`.
pub fn l_from_h(q: u64, h: &IntPolynomial) -> IntPolynomial {
    let g = h.degree().unwrap_or(0);
    let mut l = vec![BigInt::zero(); 2 * g + 1];
    for (k, hk) in h.coeffs().iter().enumerate() {
        if hk.is_zero() {
            continue;
        }
        for j in 0..=k {
            l[g + 2 * j - k] += hk * binomial(k, j) * qpow(q, j);
        }
    }
    IntPolynomial::new(l)
}

/// Inverse of [`l_from_h`]. Solves for `h_g, .., h_0` from the coefficients
/// of `t^{2g}, .., t^g`, then checks the lower half.
pub fn h_from_l(q: u64, l: &IntPolynomial) -> Result<IntPolynomial, ZetaError> {
    let deg = l.degree();
    let g = match deg {
        Some(d) if d % 2 == 0 => d / 2,
        _ => return Err(ZetaError::BadDegree(deg)),
    };
    let mut h = vec![BigInt::zero(); g + 1];
    for m in (0..=g).rev() {
        // Coefficient of t^{g+m} is Σ_{k ≥ m, k ≡ m (2)} h_k C(k, (k+m)/2) q^{(k+m)/2}.
        let mut rest = l.coeff(g + m);
        for k in (m + 2..=g).step_by(2) {
            let j = (k + m) / 2;
            rest -= &h[k] * binomial(k, j) * qpow(q, j);
        }
        let (quot, rem) = rest.div_rem(&qpow(q, m));
        if !rem.is_zero() {
            return Err(ZetaError::NonIntegralCoefficient { index: g + m });
        }
        h[m] = quot;
    }
    let h = IntPolynomial::new(h);
    let back = l_from_h(q, &h);
    if let Some(index) = (0..=2 * g).find(|&i| back.coeff(i) != l.coeff(i)) {
        return Err(ZetaError::NotSymmetric {
            index,
            expected: back.coeff(index),
            found: l.coeff(index),
        });
    }
    Ok(h)
}

/// Power sums `s_0 .. s_depth` of the roots of a monic polynomial.
fn power_sums(h: &IntPolynomial, depth: usize) -> Vec<BigInt> {
    let g = h.degree().unwrap_or(0);
    // Coefficient of t^{g-i} is e_i up to sign: h = Σ_i c_i t^{g-i}.
    let c = |i: usize| if i <= g { h.coeff(g - i) } else { BigInt::zero() };
    let mut s = vec![BigInt::from(g)];
    for n in 1..=depth {
        let mut v: BigInt = -(1..n).map(|i| c(i) * &s[n - i]).sum::<BigInt>();
        if n <= g {
            v -= c(n) * BigInt::from(n);
        }
        s.push(v);
    }
    s
}

/// Point counts `N_1 .. N_depth` from the roots `μ_i` of `h`, using
/// `α^n + ᾱ^n = v_n(μ)` with `v_n = μ v_{n−1} − q v_{n−2}`.
pub fn counts_from_h(q: u64, h: &IntPolynomial, depth: usize) -> Result<Vec<BigInt>, ZetaError> {
    if !h.is_monic() {
        return Err(ZetaError::NotMonic);
    }
    let s = power_sums(h, depth);
    let qb = BigInt::from(q);
    // v_n as a polynomial in μ, low-to-high.
    let mut prev: Vec<BigInt> = vec![BigInt::from(2)];
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    let mut out = Vec::with_capacity(depth);
    for n in 1..=depth {
        if n > 1 {
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (k, c) in cur.iter().enumerate() {
                next[k + 1] += c;
            }
            for (k, c) in prev.iter().enumerate() {
                next[k] -= &qb * c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
        let trace: BigInt = cur.iter().zip(&s).map(|(e, sk)| e * sk).sum();
        out.push(qpow(q, n) + 1 - trace);
    }
    Ok(out)
}

/// Place counts `a_1 .. a_depth` of the zeta data with real Weil polynomial `h`.
/// Entries may be negative when `h` is not the real Weil polynomial of a curve.
pub fn a_from_h(q: u64, h: &IntPolynomial, depth: usize) -> Result<Vec<BigInt>, ZetaError> {
    let counts = counts_from_h(q, h, depth)?;
    mobius_a_from_n(&counts).map_err(|e| ZetaError::Places(e.to_string()))
}

/// Point counts `N_1 .. N_depth` from `L(t)` by Newton's identities on its
/// reciprocal roots.
pub fn counts_from_l(q: u64, l: &IntPolynomial, depth: usize) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = vec![BigInt::zero()];
    for n in 1..=depth {
        let mut v = -BigInt::from(n) * l.coeff(n);
        for k in 1..n {
            v -= l.coeff(k) * &p[n - k];
        }
        p.push(v);
    }
    (1..=depth).map(|n| qpow(q, n) + 1 - &p[n]).collect()
}

/// Complete zeta data of a curve (or of a candidate real Weil polynomial).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilData {
    pub q: u64,
    pub g: usize,
    #[serde(rename = "L")]
    pub l: IntPolynomial,
    pub h: IntPolynomial,
    #[serde(
        rename = "N",
        serialize_with = "json::serialize_bigints",
        deserialize_with = "json::deserialize_bigints"
    )]
    pub counts: Vec<BigInt>,
    #[serde(
        rename = "a",
        serialize_with = "json::serialize_bigints",
        deserialize_with = "json::deserialize_bigints"
    )]
    pub places: Vec<BigInt>,
}

impl WeilData {
    /// Builds every representation from `h`. No invariant is checked; see
    /// [`validate`].
    pub fn from_h(q: u64, h: &IntPolynomial, depth: usize) -> Result<Self, ZetaError> {
        let counts = counts_from_h(q, h, depth)?;
        let places = mobius_a_from_n(&counts).map_err(|e| ZetaError::Places(e.to_string()))?;
        Ok(Self {
            q,
            g: h.degree().unwrap_or(0),
            l: l_from_h(q, h),
            h: h.clone(),
            counts,
            places,
        })
    }

    /// Builds every representation from the first `g` point counts.
    pub fn from_counts(q: u64, g: usize, counts: &[BigInt], depth: usize) -> Result<Self, ZetaError> {
        if counts.len() < g {
            return Err(ZetaError::WrongCountLength {
                expected: g,
                found: counts.len(),
            });
        }
        let l = l_from_counts(q, g, &counts[..g])?;
        Self::from_l(q, &l, depth)
    }

    pub fn from_l(q: u64, l: &IntPolynomial, depth: usize) -> Result<Self, ZetaError> {
        let h = h_from_l(q, l)?;
        Self::from_h(q, &h, depth)
    }

    /// The first few place counts, as in `[25, 1, 115, 576, ...]`.
    pub fn places_summary(&self) -> String {
        let shown: Vec<String> = self.places.iter().take(SUMMARY_LENGTH).map(|a| a.to_string()).collect();
        let tail = if self.places.len() > SUMMARY_LENGTH { ", ..." } else { "" };
        format!("[{}{}]", shown.join(", "), tail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

/// Checks every invariant of `wd` and reports each one.
pub fn validate(wd: &WeilData) -> ValidationReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    let (q, g) = (wd.q, wd.g);

    let lead_ok = wd.l.degree() == Some(2 * g) && wd.l.coeff(2 * g) == qpow(q, g);
    push(
        "normalization",
        wd.l.coeff(0).is_one() && lead_ok,
        format!(
            "L(0) = {}, degree {}, leading coefficient {}",
            wd.l.coeff(0),
            wd.l.degree().map_or("-".to_string(), |d| d.to_string()),
            wd.l.leading().cloned().unwrap_or_default()
        ),
    );

    let asym = (0..=g).find(|&i| wd.l.coeff(2 * g - i) != qpow(q, g - i) * wd.l.coeff(i));
    push(
        "functional equation",
        asym.is_none(),
        match asym {
            None => "b_{2g-i} = q^{g-i} b_i for all i".to_string(),
            Some(i) => format!("fails at i = {i}"),
        },
    );

    let h_ok = wd.h.is_monic() && wd.h.degree() == Some(g);
    let transform_ok = h_ok && l_from_h(q, &wd.h) == wd.l;
    push(
        "L(t) = t^g h(qt + 1/t)",
        transform_ok,
        if h_ok { format!("h = {}", wd.h) } else { "h is not monic of degree g".to_string() },
    );

    let predicted = counts_from_l(q, &wd.l, wd.counts.len());
    push(
        "point counts match L",
        predicted == wd.counts,
        format!("N = {}", list(&wd.counts)),
    );

    let consistent = wd.places.len() == wd.counts.len() && n_from_a(&wd.places) == wd.counts;
    push(
        "N_n = sum of d a_d",
        consistent,
        format!("a = {}", list(&wd.places)),
    );

    let negative = wd.places.iter().position(|a| *a < BigInt::zero());
    push(
        "place counts nonnegative",
        negative.is_none(),
        match negative {
            None => "all a_d >= 0".to_string(),
            Some(i) => format!("a_{} = {}", i + 1, wd.places[i]),
        },
    );

    let roots = sturm_roots_in_symmetric_interval(&wd.h, q);
    push(
        "real roots in [-2 sqrt q, 2 sqrt q]",
        matches!(roots, Ok(ref r) if r.all_real_in_interval),
        match roots {
            Ok(r) => format!("{} distinct roots in the interval", r.count),
            Err(e) => e.to_string(),
        },
    );

    ValidationReport { checks }
}

fn list(v: &[BigInt]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lin(r: i64) -> IntPolynomial {
        IntPolynomial::linear(r)
    }

    fn x_candidate() -> IntPolynomial {
        &lin(-2) * &lin(-5).pow(3)
    }

    #[test]
    fn weil_polynomials_from_counts() {
        assert_eq!(l_from_counts(7, 1, &big(&[13])).unwrap(), p(&[1, 5, 7]));
        assert_eq!(l_from_counts(7, 2, &big(&[14, 52])).unwrap(), p(&[1, 6, 19, 42, 49]));
        assert_eq!(&p(&[1, 1, 7]) * &p(&[1, 5, 7]), p(&[1, 6, 19, 42, 49]));
        assert_eq!(l_from_counts(7, 1, &big(&[8])).unwrap(), p(&[1, 0, 7]));
    }

    #[test]
    fn inconsistent_counts_fail() {
        assert_eq!(
            l_from_counts(7, 2, &big(&[13, 50])),
            Err(ZetaError::NonIntegralCoefficient { index: 2 })
        );
        assert!(matches!(l_from_counts(7, 2, &big(&[13])), Err(ZetaError::WrongCountLength { .. })));
    }

    #[test]
    fn h_and_l() {
        assert_eq!(l_from_h(7, &lin(-5)), p(&[1, 5, 7]));
        assert_eq!(l_from_h(7, &p(&[0, 1])), p(&[1, 0, 7]));
        assert_eq!(h_from_l(7, &p(&[1, 5, 7])).unwrap(), lin(-5));
        assert!(matches!(h_from_l(7, &p(&[1, 5, 8])), Err(ZetaError::NonIntegralCoefficient { .. })));
        assert!(matches!(h_from_l(7, &p(&[2, 5, 7])), Err(ZetaError::NotSymmetric { index: 0, .. })));
        assert!(matches!(h_from_l(7, &p(&[1, 5, 7, 1])), Err(ZetaError::BadDegree(Some(3)))));
    }

    #[test]
    fn place_counts() {
        assert_eq!(a_from_h(7, &x_candidate(), 4).unwrap(), big(&[25, 1, 115, 576]));
        let h10 = &lin(-3).pow(3) * &lin(-4).pow(7);
        assert_eq!(a_from_h(7, &h10, 4).unwrap(), big(&[45, 3, 17, 807]));
        let hc = &lin(-1) * &lin(-5).pow(3);
        assert_eq!(a_from_h(7, &hc, 4).unwrap(), big(&[24, 3, 120, 558]));
    }

    #[test]
    fn curve_c_data() {
        let wd = WeilData::from_counts(7, 4, &big(&[24, 30, 384, 2262]), DEFAULT_DEPTH).unwrap();
        let report = validate(&wd);
        assert!(report.passed(), "{:?}", report.failed());
        assert_eq!(wd.places_summary(), "[24, 3, 120, 558, ...]");
        assert!(wd.l.to_string().ends_with("+ 118t^2 + 16t + 1"), "{}", wd.l);
        assert_eq!(wd.places.len(), DEFAULT_DEPTH);
    }

    #[test]
    fn validation_failures() {
        let mut wd = WeilData::from_h(7, &x_candidate(), 4).unwrap();
        wd.places[1] = BigInt::from(-1);
        let report = validate(&wd);
        assert!(report.failed().contains(&"place counts nonnegative"));
        let wd = WeilData::from_h(7, &p(&[-30, 0, 1]), 4).unwrap();
        assert_eq!(validate(&wd).failed(), vec!["real roots in [-2 sqrt q, 2 sqrt q]"]);
    }

    #[test]
    fn json_shape() {
        let wd = WeilData::from_h(7, &lin(-5), 2).unwrap();
        let s = serde_json::to_string(&wd).unwrap();
        assert_eq!(s, r#"{"q":7,"g":1,"L":[1,5,7],"h":[5,1],"N":[13,39],"a":[13,13]}"#);
        let back: WeilData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, wd);
    }

    /// Products of linear factors `t − r` and quadratics `t² − c` whose roots
    /// lie in `[-2√7, 2√7]`.
    fn admissible_h() -> impl Strategy<Value = IntPolynomial> {
        let factor = prop_oneof![
            (-5i64..=5).prop_map(lin),
            (0i64..=28).prop_map(|c| p(&[-c, 0, 1])),
            (-5i64..=5, 0i64..=4).prop_map(|(m, k)| {
                // (t − m)² − k with both roots inside the interval when possible
                p(&[m * m - k, -2 * m, 1])
            }),
        ];
        proptest::collection::vec(factor, 1..=4).prop_filter_map("degree at most 4", |fs| {
            let h = fs.iter().fold(IntPolynomial::one(), |acc, f| &acc * f);
            let ok = h.degree().unwrap() <= 4
                && sturm_roots_in_symmetric_interval(&h, 7).unwrap().all_real_in_interval;
            ok.then_some(h)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn h_l_round_trip(h in admissible_h()) {
            prop_assert_eq!(h_from_l(7, &l_from_h(7, &h)).unwrap(), h);
        }

        #[test]
        fn both_count_routes_agree(h in admissible_h()) {
            let l = l_from_h(7, &h);
            prop_assert_eq!(counts_from_h(7, &h, 8).unwrap(), counts_from_l(7, &l, 8));
            let g = h.degree().unwrap();
            let counts = counts_from_l(7, &l, g);
            prop_assert_eq!(l_from_counts(7, g, &counts).unwrap(), l);
        }
    }
}
