//! Sturm sequences and exact real-root counting.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPolynomial;
use super::quadratic::{sign_of, QuadraticValue};
use super::AlgError;

/// An exact evaluation point on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    NegInfinity,
    PosInfinity,
    /// `num / den` with `den > 0`.
    Rational(BigInt, BigInt),
    Quadratic(QuadraticValue),
}

impl Point {
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Point::Rational(n.into(), BigInt::one())
    }

    pub fn rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let (num, den) = (num.into(), den.into());
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            Point::Rational(-num, -den)
        } else {
            Point::Rational(num, den)
        }
    }
}

/// Sign of `p` at an exact point. At ±∞ this is the sign of the dominant term.
pub fn sign_at(p: &IntPolynomial, point: &Point) -> Ordering {
    let Some(n) = p.degree() else {
        return Ordering::Equal;
    };
    let lc_sign = p.leading().expect("nonzero").cmp(&BigInt::zero());
    match point {
        Point::PosInfinity => lc_sign,
        Point::NegInfinity => {
            if n % 2 == 0 {
                lc_sign
            } else {
                lc_sign.reverse()
            }
        }
        Point::Rational(num, den) => p.eval_homogeneous(num, den).cmp(&BigInt::zero()),
        Point::Quadratic(x) => {
            let v = eval_quadratic(p, x);
            sign_of(&v.a, &v.b, &v.d)
        }
    }
}

/// Exact value of `p(a + b√d)` as `A + B√d`.
pub fn eval_quadratic(p: &IntPolynomial, x: &QuadraticValue) -> QuadraticValue {
    let mut acc_a = BigInt::zero();
    let mut acc_b = BigInt::zero();
    for c in p.coeffs().iter().rev() {
        // (acc_a + acc_b√d)(a + b√d) + c
        let na = &acc_a * &x.a + &acc_b * &x.b * &x.d + c;
        let nb = &acc_a * &x.b + &acc_b * &x.a;
        acc_a = na;
        acc_b = nb;
    }
    QuadraticValue {
        a: acc_a,
        b: acc_b,
        d: x.d.clone(),
    }
}

/// The Sturm chain of a polynomial, normalized to primitive parts.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let mut polys = Vec::new();
        if p.is_zero() {
            return Self { polys };
        }
        polys.push(p.primitive_part());
        let dp = p.derivative();
        if dp.is_zero() {
            return Self { polys };
        }
        polys.push(dp.primitive_part());
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(δ+1)·rem, and the next chain element is -rem.
            let delta = a.deg() - b.deg();
            let multiplier_negative =
                b.leading().expect("nonzero").is_negative() && (delta + 1) % 2 == 1;
            let rem_lc_negative = r.leading().expect("nonzero").is_negative() != multiplier_negative;
            let pp = r.primitive_part();
            polys.push(if rem_lc_negative { pp } else { -&pp });
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    /// Number of sign changes at `point`, ignoring zeros.
    pub fn variations(&self, point: &Point) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for p in &self.polys {
            let s = sign_at(p, point);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open(&self, lo: &Point, hi: &Point) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Distinct real roots of `p` in the closed interval `[lo, hi]`.
pub fn count_roots_closed(p: &IntPolynomial, lo: &Point, hi: &Point) -> usize {
    let sqf = super::radical_any(p);
    let chain = SturmChain::new(&sqf);
    let at_lo = usize::from(sign_at(&sqf, lo) == Ordering::Equal && !matches!(lo, Point::NegInfinity));
    chain.count_half_open(lo, hi) + at_lo
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn count_roots_open(p: &IntPolynomial, lo: &Point, hi: &Point) -> usize {
    let sqf = super::radical_any(p);
    let chain = SturmChain::new(&sqf);
    let at_hi = usize::from(sign_at(&sqf, hi) == Ordering::Equal && !matches!(hi, Point::PosInfinity));
    chain.count_half_open(lo, hi) - at_hi
}

/// Result of [`sturm_roots_in_symmetric_interval`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRoots {
    /// Distinct real roots in `[-2√q, 2√q]`.
    pub count: usize,
    /// Every complex root is real and inside `[-2√q, 2√q]`.
    pub all_real_in_interval: bool,
}

/// Counts the distinct real roots of `h` in `[-2√q, 2√q]` and decides whether
/// all of its roots are real and lie there.
pub fn sturm_roots_in_symmetric_interval(
    h: &IntPolynomial,
    q: u64,
) -> Result<IntervalRoots, AlgError> {
    if h.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let (lo, hi) = symmetric_endpoints(q);
    let sqf = super::radical_any(h);
    let chain = SturmChain::new(&sqf);
    let real = chain.count_half_open(&Point::NegInfinity, &Point::PosInfinity);
    let at_lo = usize::from(sign_at(&sqf, &lo) == Ordering::Equal);
    let count = chain.count_half_open(&lo, &hi) + at_lo;
    let d = sqf.deg();
    Ok(IntervalRoots {
        count,
        all_real_in_interval: real == d && count == d,
    })
}

/// `(-2√q, 2√q)` as exact points; rational when `q` is a perfect square.
pub fn symmetric_endpoints(q: u64) -> (Point, Point) {
    let qb = BigInt::from(q);
    match QuadraticValue::exact_root(&qb) {
        Some(s) => (Point::integer(-2 * &s), Point::integer(2 * s)),
        None => (
            Point::Quadratic(QuadraticValue::new(0, -2, q)),
            Point::Quadratic(QuadraticValue::new(0, 2, q)),
        ),
    }
}
