//! Explicit-formula upper bounds on the number of rational points.
//!
//! For Frobenius angles `θ_1..θ_g` of a genus-`g` curve and a trial function
//! `f(θ) = 1 + 2 Σ u_n cos(nθ)` that is nonnegative with `u_n ≥ 0`,
//! `Σ_j f(θ_j) ≥ 0` together with `N_n ≥ N_1` gives
//!
//! ```text
//! N_1 ≤ (g + Σ u_n (q^{n/2} + q^{-n/2})) / Σ u_n q^{-n/2}.
//! ```
//!
//! Nonnegativity of `f` is checked exactly on `P(x) = 1 + 2 Σ u_n T_n(x)`,
//! `x = cos θ`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{count_roots_open, sign_at, IntPolynomial, Point, QuadraticValue};
use crate::json;

pub const MAX_TERMS: usize = 8;
pub const DEFAULT_TERMS: usize = 6;
pub const DEFAULT_BUDGET: usize = 20_000;
const FINEST_STEP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("u_{index} is negative")]
    NegativeWeight { index: usize },
    #[error("at least one u_n must be positive")]
    AllZero,
    #[error("between 1 and {MAX_TERMS} terms are supported, got {0}")]
    BadLength(usize),
    #[error("the trial function takes negative values: {0}")]
    Infeasible(String),
    #[error("q must be at least 2")]
    BadField,
    #[error("no genus up to {cap} reaches {n} points")]
    CapReached { n: u64, cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub q: u64,
    pub g: u64,
    #[serde(serialize_with = "json::serialize_fractions", deserialize_with = "json::deserialize_fractions")]
    pub u: Vec<BigRational>,
    /// The bound is `bound_rational + bound_sqrt·√q`.
    #[serde(serialize_with = "json::serialize_fraction", deserialize_with = "json::deserialize_fraction")]
    pub bound_rational: BigRational,
    #[serde(serialize_with = "json::serialize_fraction", deserialize_with = "json::deserialize_fraction")]
    pub bound_sqrt: BigRational,
    #[serde(serialize_with = "json::serialize_bigint", deserialize_with = "json::deserialize_bigint")]
    pub floor: BigInt,
    /// A positive integer multiple of `P(x)`, coefficients low to high.
    pub witness: IntPolynomial,
}

impl BoundCertificate {
    pub fn bound_f64(&self) -> f64 {
        self.bound_rational.to_f64().unwrap_or(f64::NAN)
            + self.bound_sqrt.to_f64().unwrap_or(f64::NAN) * (self.q as f64).sqrt()
    }

    /// Recomputes the bound, the floor and the nonnegativity check from `u`.
    pub fn verify(&self) -> bool {
        match bound_from_u(self.q, self.g, &self.u) {
            Ok(c) => c == *self,
            Err(_) => false,
        }
    }

    /// Every genus-`g` curve over `F_q` has fewer than `n` points.
    pub fn excludes(&self, n: u64) -> bool {
        self.floor < BigInt::from(n)
    }

    pub fn bound_text(&self) -> String {
        let r = json::fraction_string(&self.bound_rational);
        let s = json::fraction_string(&self.bound_sqrt);
        format!("{r} + {s}*sqrt({}) ≈ {:.4}", self.q, self.bound_f64())
    }
}

fn chebyshev(n: usize) -> IntPolynomial {
    let (mut prev, mut cur) = (IntPolynomial::one(), IntPolynomial::t());
    if n == 0 {
        return prev;
    }
    let two_t = IntPolynomial::monomial(BigInt::from(2), 1);
    for _ in 1..n {
        let next = &(&two_t * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `L·(1 + 2 Σ u_n T_n)` with `L` the common denominator of the `u_n`.
pub fn trial_polynomial(u: &[BigRational]) -> IntPolynomial {
    let l = u.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut p = IntPolynomial::constant(l.clone());
    for (i, x) in u.iter().enumerate() {
        let c = BigInt::from(2) * &l / x.denom() * x.numer();
        p = &p + &chebyshev(i + 1).scale(&c);
    }
    p
}

/// Checks `P ≥ 0` on `[-1, 1]`: no root of odd multiplicity inside, and
/// positive at some interior point that is not a root.
fn check_nonnegative(p: &IntPolynomial) -> Result<(), BoundError> {
    let (lo, hi) = (Point::integer(-1), Point::integer(1));
    for (f, m) in p.squarefree_decomposition() {
        if m % 2 == 1 && count_roots_open(&f, &lo, &hi) > 0 {
            return Err(BoundError::Infeasible(format!(
                "factor {} of multiplicity {m} changes sign in (-1, 1)",
                f.display_var('x')
            )));
        }
    }
    for d in 1i64.. {
        for x in [Point::rational(0, d.max(1)), Point::rational(1, d + 1), Point::rational(-1, d + 1)] {
            match sign_at(p, &x) {
                Ordering::Greater => return Ok(()),
                Ordering::Less => {
                    return Err(BoundError::Infeasible(format!("P is negative at {x:?}")));
                }
                Ordering::Equal => {}
            }
        }
    }
    unreachable!()
}

/// `q^{n/2}` as `(rational, coefficient of √q)`.
fn half_power(q: &BigInt, n: i64, square_root: Option<&BigInt>) -> (BigRational, BigRational) {
    let rat = |x: BigInt| BigRational::from_integer(x);
    let whole = |e: i64| {
        if e >= 0 {
            rat(q.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), q.pow((-e) as u32))
        }
    };
    if n % 2 == 0 {
        return (whole(n / 2), BigRational::zero());
    }
    let w = whole((n - 1) / 2);
    match square_root {
        Some(s) => (w * rat(s.clone()), BigRational::zero()),
        None => (BigRational::zero(), w),
    }
}

fn bound_parts(q: u64, g: u64, u: &[BigRational]) -> (BigRational, BigRational) {
    let qb = BigInt::from(q);
    let root = QuadraticValue::exact_root(&qb);
    let (mut a, mut b) = (BigRational::from_integer(BigInt::from(g)), BigRational::zero());
    let (mut c, mut d) = (BigRational::zero(), BigRational::zero());
    for (i, x) in u.iter().enumerate() {
        let n = i as i64 + 1;
        let (pr, ps) = half_power(&qb, n, root.as_ref());
        let (mr, ms) = half_power(&qb, -n, root.as_ref());
        a += x * (&pr + &mr);
        b += x * (&ps + &ms);
        c += x * &mr;
        d += x * &ms;
    }
    // (a + b√q)/(c + d√q)
    let qr = BigRational::from_integer(qb);
    let den = &c * &c - &d * &d * &qr;
    let r = (&a * &c - &b * &d * &qr) / &den;
    let s = (&b * &c - &a * &d) / &den;
    (r, s)
}

fn floor_of(q: u64, r: &BigRational, s: &BigRational) -> BigInt {
    let l = r.denom().lcm(s.denom());
    let rn = r.numer() * (&l / r.denom());
    let sn = s.numer() * (&l / s.denom());
    QuadraticValue::new(rn, sn, q).floor().div_floor(&l)
}

/// The certificate for a given trial function.
pub fn bound_from_u(q: u64, g: u64, u: &[BigRational]) -> Result<BoundCertificate, BoundError> {
    if q < 2 {
        return Err(BoundError::BadField);
    }
    if u.is_empty() || u.len() > MAX_TERMS {
        return Err(BoundError::BadLength(u.len()));
    }
    if let Some(i) = u.iter().position(|x| x.is_negative()) {
        return Err(BoundError::NegativeWeight { index: i + 1 });
    }
    if u.iter().all(Zero::is_zero) {
        return Err(BoundError::AllZero);
    }
    let witness = trial_polynomial(u);
    check_nonnegative(&witness)?;
    let (r, s) = bound_parts(q, g, u);
    Ok(BoundCertificate {
        q,
        g,
        u: u.to_vec(),
        floor: floor_of(q, &r, &s),
        bound_rational: r,
        bound_sqrt: s,
        witness,
    })
}

fn approx(q: u64, g: u64, u: &[BigRational]) -> f64 {
    let (r, s) = bound_parts(q, g, u);
    r.to_f64().unwrap_or(f64::INFINITY) + s.to_f64().unwrap_or(f64::INFINITY) * (q as f64).sqrt()
}

/// Coefficients of the Fejér kernel, halved: `u_n = (1 − n/(D+1))/2`.
pub fn fejer_seed(terms: usize) -> Vec<BigRational> {
    (1..=terms)
        .map(|n| BigRational::new(BigInt::from(terms + 1 - n), BigInt::from(2 * (terms + 1))))
        .collect()
}

struct Search {
    q: u64,
    g: u64,
    seed: Vec<BigRational>,
    checks: usize,
    budget: usize,
}

impl Search {
    fn feasible(&mut self, u: &[BigRational]) -> bool {
        self.checks += 1;
        !u.iter().any(Signed::is_negative)
            && !u.iter().all(Zero::is_zero)
            && check_nonnegative(&trial_polynomial(u)).is_ok()
    }

    /// `trial` if feasible, else the feasible point `seed + λ(trial − seed)`
    /// with the largest `λ = m/2^12`, snapped to the grid `2^{-20}` when the
    /// snapped point stays feasible.
    fn project(&mut self, trial: Vec<BigRational>) -> Option<Vec<BigRational>> {
        if trial.iter().any(Signed::is_negative) {
            return None;
        }
        if self.feasible(&trial) {
            return Some(trial);
        }
        let seed = self.seed.clone();
        let mix = |lambda: &BigRational| -> Vec<BigRational> {
            seed.iter().zip(&trial).map(|(s, t)| s + lambda * (t - s)).collect()
        };
        let scale = BigInt::one() << FINEST_STEP;
        let (mut lo, mut hi) = (BigInt::zero(), scale.clone());
        while &hi - &lo > BigInt::one() {
            let mid: BigInt = (&lo + &hi) >> 1;
            if self.feasible(&mix(&BigRational::new(mid.clone(), scale.clone()))) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if lo.is_zero() {
            return None;
        }
        let mixed = mix(&BigRational::new(lo, scale));
        let grid = BigInt::one() << 20u32;
        let snapped: Vec<BigRational> = mixed
            .iter()
            .map(|x| BigRational::new((x * &grid).round().to_integer(), grid.clone()))
            .collect();
        if self.feasible(&snapped) {
            Some(snapped)
        } else {
            Some(mixed)
        }
    }

    fn moves(u: &[BigRational], h: &BigRational) -> Vec<Vec<BigRational>> {
        let d = u.len();
        let mut out = Vec::new();
        for i in 0..d {
            for sign in [1, -1] {
                let mut v = u.to_vec();
                v[i] += h * BigInt::from(sign);
                out.push(v);
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = u.to_vec();
                    v[i] += h * BigInt::from(si);
                    v[j] += h * BigInt::from(sj);
                    out.push(v);
                }
            }
        }
        for sign in [1, -1] {
            let factor = BigRational::one() + h * BigInt::from(sign);
            out.push(u.iter().map(|x| x * &factor).collect());
        }
        out
    }

    fn run(&mut self, start: Vec<BigRational>) -> Vec<BigRational> {
        let mut best = start;
        let mut value = approx(self.q, self.g, &best);
        for k in 1..=FINEST_STEP {
            let h = BigRational::new(BigInt::one(), BigInt::one() << k);
            loop {
                let mut improved = false;
                for trial in Self::moves(&best, &h) {
                    if self.checks >= self.budget {
                        return best;
                    }
                    // Skip moves that cannot help before paying for a check.
                    if trial.iter().any(Signed::is_negative)
                        || trial.iter().all(Zero::is_zero)
                        || approx(self.q, self.g, &trial) >= value - 1e-12
                    {
                        continue;
                    }
                    if let Some(v) = self.project(trial) {
                        let val = approx(self.q, self.g, &v);
                        if val < value - 1e-12 {
                            best = v;
                            value = val;
                            improved = true;
                            break;
                        }
                    }
                }
                if !improved {
                    break;
                }
            }
        }
        best
    }
}

/// Deterministic coordinate descent over dyadic steps `2^{-k}`, `k ≤ 12`.
/// Infeasible moves are pulled back toward the Fejér seed. The descent for
/// `terms` starts from the best of the Fejér seed, the single-term function
/// and the optimum for `terms − 1` padded with a zero, so the result never
/// gets worse as `terms` grows. `budget` caps the exact nonnegativity checks
/// of each descent.
pub fn optimize_u(q: u64, g: u64, terms: usize, budget: usize) -> Result<BoundCertificate, BoundError> {
    if terms == 0 || terms > MAX_TERMS {
        return Err(BoundError::BadLength(terms));
    }
    if q < 2 {
        return Err(BoundError::BadField);
    }
    let mut best: Option<Vec<BigRational>> = None;
    for d in 1..=terms {
        let seed = fejer_seed(d);
        let mut weil = vec![BigRational::zero(); d];
        weil[0] = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut starts = vec![seed.clone(), weil];
        if let Some(mut prev) = best.take() {
            prev.push(BigRational::zero());
            starts.push(prev);
        }
        let start = starts
            .into_iter()
            .min_by(|x, y| approx(q, g, x).total_cmp(&approx(q, g, y)))
            .expect("nonempty");
        let mut search = Search {
            q,
            g,
            seed,
            checks: 0,
            budget,
        };
        best = Some(search.run(start));
    }
    bound_from_u(q, g, &best.expect("terms >= 1"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinGenus {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: u64,
    /// Every curve over `F_q` with `n` points has genus at least this.
    pub genus: u64,
    /// One certificate per genus below `genus`, each excluding `n` points.
    pub certificates: Vec<BoundCertificate>,
}

/// Least genus whose optimized bound reaches `n`; all smaller genera carry
/// certificates excluding `n` points.
pub fn min_genus(q: u64, n: u64, terms: usize, g_cap: u64) -> Result<MinGenus, BoundError> {
    let mut certificates = Vec::new();
    if n <= q + 1 {
        return Ok(MinGenus { q, n, genus: 0, certificates });
    }
    for g in 0..=g_cap {
        let cert = optimize_u(q, g, terms, DEFAULT_BUDGET)?;
        if !cert.excludes(n) {
            return Ok(MinGenus { q, n, genus: g, certificates });
        }
        certificates.push(cert);
    }
    Err(BoundError::CapReached { n, cap: g_cap })
}

/// `⌊q + 1 + (√((8q+1)g² + 4(q²−q)g) − g)/2⌋`.
pub fn ihara_bound(q: u64, g: u64) -> BigInt {
    let (qb, gb) = (BigInt::from(q), BigInt::from(g));
    let disc: BigInt = (BigInt::from(8) * &qb + 1) * &gb * &gb + BigInt::from(4) * (&qb * &qb - &qb) * &gb;
    let total: BigInt = BigInt::from(2) * (&qb + 1) - &gb + disc.sqrt();
    total.div_floor(&BigInt::from(2))
}
