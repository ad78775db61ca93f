use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// An exact real number `a + b·√d` with integer `a`, `b` and `d > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticValue {
    pub a: BigInt,
    pub b: BigInt,
    pub d: BigInt,
}

impl QuadraticValue {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        let d = d.into();
        assert!(d.is_positive(), "radicand must be positive");
        Self {
            a: a.into(),
            b: b.into(),
            d,
        }
    }

    /// `2√q`, the Weil interval endpoint.
    pub fn two_sqrt(q: impl Into<BigInt>) -> Self {
        Self::new(0, 2, q)
    }

    /// `Some(s)` when `d` is a perfect square `s²`.
    pub fn exact_root(d: &BigInt) -> Option<BigInt> {
        let s = d.sqrt();
        (&s * &s == *d).then_some(s)
    }

    pub fn sign(&self) -> Ordering {
        sign_of(&self.a, &self.b, &self.d)
    }

    pub fn cmp_int(&self, n: &BigInt) -> Ordering {
        sign_of(&(&self.a - n), &self.b, &self.d)
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        // floor(a + b√d) = a + floor(b√d); floor(b√d) via integer square roots.
        let t = (&self.b * &self.b * &self.d).sqrt();
        let bsd = if self.b.is_negative() {
            if &t * &t == &self.b * &self.b * &self.d {
                -t
            } else {
                -t - 1
            }
        } else {
            t
        };
        &self.a + bsd
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap_or(f64::NAN)
            + self.b.to_f64().unwrap_or(f64::NAN) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

/// Sign of `a + b√d` for `d > 0`, decided by comparing `a²` with `d·b²`.
pub fn sign_of(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    let sa = a.sign_cmp();
    let sb = b.sign_cmp();
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // Opposite signs: the term with larger magnitude wins.
    match (a * a).cmp(&(d * b * b)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}
