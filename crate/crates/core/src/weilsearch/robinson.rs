//! Enumeration of monic integer polynomials with all roots real in `[lo, hi]`.
//!
//! Coefficients are chosen from the top down. Writing `F_k = P^(k)/k!`, the
//! roots of `F_{k+1}` are the critical points of `F_k`, and `F_k` has all its
//! roots in `[lo, hi]` exactly when its values at those critical points and
//! at `lo`, `hi` alternate in sign. Each such value is `G(r) + c_k`, so every
//! condition is a bound on `c_k`. Floating-point bounds are widened by a
//! margin; callers must confirm candidates exactly.

pub(crate) struct NodeCapExceeded;

/// `(c_{d-1}, c_{d-2})` filter, applied once both are known.
pub(crate) type TopFilter<'a> = &'a dyn Fn(i64, i64) -> bool;

pub(crate) struct Robinson<'a> {
    degree: usize,
    lo: f64,
    hi: f64,
    binom: Vec<Vec<f64>>,
    coeffs: Vec<i64>,
    top_filter: Option<TopFilter<'a>>,
    nodes: u64,
    cap: u64,
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let fa = f(a);
    if fa == 0.0 {
        return a;
    }
    let fb = f(b);
    if fb == 0.0 {
        return b;
    }
    if fa.signum() == fb.signum() {
        // Rounding near a multiple root; either end is as good as the other.
        return if fa.abs() < fb.abs() { a } else { b };
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == fa.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

impl<'a> Robinson<'a> {
    pub(crate) fn new(degree: usize, lo: f64, hi: f64, cap: u64) -> Self {
        let mut binom = vec![vec![0.0; degree + 1]; degree + 1];
        for i in 0..=degree {
            binom[i][0] = 1.0;
            for k in 1..=i {
                binom[i][k] = binom[i - 1][k - 1] + if k < i { binom[i - 1][k] } else { 0.0 };
            }
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = 1;
        Self {
            degree,
            lo,
            hi,
            binom,
            coeffs,
            top_filter: None,
            nodes: 0,
            cap,
        }
    }

    pub(crate) fn with_top_filter(mut self, filter: TopFilter<'a>) -> Self {
        self.top_filter = Some(filter);
        self
    }

    /// Calls `visit` with the coefficients (low-to-high) of every candidate.
    pub(crate) fn run(&mut self, visit: &mut dyn FnMut(&[i64])) -> Result<(), NodeCapExceeded> {
        if self.degree == 0 {
            visit(&self.coeffs);
            return Ok(());
        }
        self.level(self.degree - 1, &[], visit)
    }

    /// `(F_k(x), Σ|terms|)` with the current `c_k` replaced by zero.
    fn eval_without_constant(&self, k: usize, x: f64) -> (f64, f64) {
        let (mut acc, mut mag) = (0.0, 0.0);
        for i in (k + 1..=self.degree).rev() {
            let c = self.binom[i][k] * self.coeffs[i] as f64;
            acc = acc * x + c;
            mag = mag * x.abs() + c.abs();
        }
        (acc * x, mag * x.abs())
    }

    fn eval(&self, k: usize, x: f64) -> f64 {
        let mut acc = 0.0;
        for i in (k..=self.degree).rev() {
            acc = acc * x + self.binom[i][k] * self.coeffs[i] as f64;
        }
        acc
    }

    fn level(&mut self, k: usize, crit: &[f64], visit: &mut dyn FnMut(&[i64])) -> Result<(), NodeCapExceeded> {
        let m = self.degree - k;
        let (mut lower, mut upper) = (f64::NEG_INFINITY, f64::INFINITY);
        // Points where the sign of F_k is prescribed, and whether F_k ≥ 0 there.
        let mut conditions = Vec::with_capacity(m + 1);
        conditions.push((self.hi, true));
        conditions.push((self.lo, m.is_multiple_of(2)));
        for (j, &r) in crit.iter().enumerate() {
            conditions.push((r, (m - (j + 1)).is_multiple_of(2)));
        }
        for (x, nonnegative) in conditions {
            let (g, mag) = self.eval_without_constant(k, x);
            let margin = 1e-6 + 1e-9 * mag;
            if nonnegative {
                lower = lower.max(-g - margin);
            } else {
                upper = upper.min(-g + margin);
            }
        }
        if lower > upper {
            return Ok(());
        }
        let (first, last) = (lower.ceil() as i64, upper.floor() as i64);
        let top = self.degree.saturating_sub(2);
        for c in first..=last {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(NodeCapExceeded);
            }
            self.coeffs[k] = c;
            if k == top {
                if let Some(filter) = self.top_filter {
                    let second = if self.degree >= 2 { self.coeffs[self.degree - 2] } else { 0 };
                    if !filter(self.coeffs[self.degree - 1], second) {
                        continue;
                    }
                }
            }
            if k == 0 {
                visit(&self.coeffs);
                continue;
            }
            let mut brackets = Vec::with_capacity(m + 1);
            brackets.push(self.lo);
            brackets.extend_from_slice(crit);
            brackets.push(self.hi);
            let roots: Vec<f64> = brackets
                .windows(2)
                .map(|w| bisect(|x| self.eval(k, x), w[0], w[1]))
                .collect();
            self.level(k - 1, &roots, visit)?;
        }
        self.coeffs[k] = 0;
        Ok(())
    }
}
