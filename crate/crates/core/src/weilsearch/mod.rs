//! Exhaustive search for real Weil polynomials: monic integer `h` of degree
//! `g` with every root in `[-2√q, 2√q]`, a prescribed number of rational
//! points and lower bounds on the place counts `a_d`.
//!
//! The search multiplies together irreducible factors from a [`FactorTable`]
//! restricted to a root window. The window comes from the `a_2` bound: with
//! `T = Σμ_i` fixed and `Σμ_i² ≤ S`, every root is within
//! `√((g−1)/g · (S − T²/g))` of the mean `T/g`.

mod robinson;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{
    count_roots_closed, sign_of, sturm_roots_in_symmetric_interval, symmetric_endpoints, IntPolynomial, Point,
};
use crate::exclusion;
use crate::json;
use crate::zeta::{self, DEFAULT_DEPTH};
use robinson::Robinson;

/// Default bound on Robinson enumeration nodes per table degree.
pub const DEFAULT_NODE_CAP: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("factor table exceeded {cap} enumeration nodes while building degree {degree}")]
    TableTooLarge { degree: usize, cap: u64 },
    #[error("the brute-force oracle supports genus at most 2, got {0}")]
    OracleTooLarge(usize),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

/// What the search looks for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConstraints {
    pub q: u64,
    pub g: usize,
    /// Prescribed `a_1`, the number of rational points.
    #[serde(rename = "N")]
    pub n: i64,
    /// `d ↦ m` requires `a_d ≥ m`.
    pub a_lower: BTreeMap<usize, i64>,
    /// Number of place counts computed for each candidate.
    pub depth: usize,
    /// Also drop candidates that split into two factors with resultant ±1.
    #[serde(default)]
    pub unit_resultant_filter: bool,
}

impl SearchConstraints {
    /// `a_d ≥ 0` for `2 ≤ d ≤ DEFAULT_DEPTH`.
    pub fn new(q: u64, g: usize, n: i64) -> Self {
        Self {
            q,
            g,
            n,
            a_lower: (2..=DEFAULT_DEPTH).map(|d| (d, 0)).collect(),
            depth: DEFAULT_DEPTH,
            unit_resultant_filter: false,
        }
    }

    pub fn with_unit_resultant_filter(mut self) -> Self {
        self.unit_resultant_filter = true;
        self
    }

    pub fn with_lower(mut self, d: usize, min: i64) -> Self {
        self.a_lower.insert(d, min);
        self.depth = self.depth.max(d);
        self
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self.a_lower.retain(|&d, _| d <= depth);
        self
    }

    /// `Σμ_i = q + 1 − N`.
    pub fn trace(&self) -> i64 {
        self.q as i64 + 1 - self.n
    }

    /// Whether `|q + 1 − N| ≤ 2g√q`.
    pub fn weil_feasible(&self) -> bool {
        let t = self.trace() as i128;
        let g = self.g as i128;
        t * t <= 4 * self.q as i128 * g * g
    }

    /// Upper bound on `Σμ_i²`: from `N_2 = a_1 + 2a_2` when `a_2` is bounded
    /// below, and `4qg` in any case.
    pub fn max_square_sum(&self) -> i128 {
        let (q, g) = (self.q as i128, self.g as i128);
        let trivial = 4 * q * g;
        match self.a_lower.get(&2) {
            Some(&a2) => trivial.min(q * q + 1 + 2 * q * g - self.n as i128 - 2 * a2 as i128),
            None => trivial,
        }
    }

    /// Necessary condition on a sub-multiset of `d` roots with sum `t` and
    /// square sum `s2`: their spread about the mean `T/g`, plus the least
    /// spread the other `g − d` roots can have, fits the square-sum bound.
    pub fn spread_allows(&self, d: usize, t: i64, s2: i64) -> bool {
        let (g, big_t, smax) = (self.g as i128, self.trace() as i128, self.max_square_sum());
        let (d, t, s2) = (d as i128, t as i128, s2 as i128);
        let own = s2 * g * g - 2 * big_t * t * g + d * big_t * big_t;
        let budget = smax * g * g - big_t * big_t * g;
        if d == g {
            return t == big_t && own <= budget;
        }
        let rest = (d * big_t - g * t) * (d * big_t - g * t);
        own * (g - d) + rest <= budget * (g - d)
    }

    /// The closed interval that must contain every root, or `None` when no
    /// polynomial can satisfy the constraints.
    pub fn window(&self) -> Option<SearchWindow> {
        if !self.weil_feasible() || self.g == 0 {
            return None;
        }
        let full = SearchWindow::full(self.q);
        if !self.a_lower.contains_key(&2) {
            return Some(full);
        }
        let g = BigInt::from(self.g);
        let t = BigInt::from(self.trace());
        let variance = BigRational::from_integer(BigInt::from(self.max_square_sum()))
            - BigRational::new(&t * &t, g.clone());
        if variance.is_negative() {
            return None;
        }
        let spread_sq = variance * BigRational::new(&g - 1, g.clone());
        let r = outward_sqrt(&spread_sq);
        let mean = BigRational::new(t, g);
        let lo = rational_point(&(&mean - &r));
        let hi = rational_point(&(&mean + &r));
        let lo = if point_cmp(&lo, &full.lo) == Ordering::Less { full.lo.clone() } else { lo };
        let hi = if point_cmp(&hi, &full.hi) == Ordering::Greater { full.hi.clone() } else { hi };
        if point_cmp(&lo, &hi) == Ordering::Greater {
            return None;
        }
        Some(SearchWindow { lo, hi })
    }

    /// Whether `h` meets every constraint, given its factorization into
    /// irreducibles. Returns the place counts if so.
    pub fn admits(&self, h: &IntPolynomial, factors: &[(IntPolynomial, u32)]) -> Option<Vec<BigInt>> {
        let places = self.admits_unfactored(h)?;
        if self.unit_resultant_filter {
            let verdict = exclusion::serre_test(h, factors).expect("factorization multiplies back");
            if verdict.is_excluded() {
                return None;
            }
        }
        Some(places)
    }

    /// Every check of [`admits`](Self::admits) except the resultant filter.
    pub fn admits_unfactored(&self, h: &IntPolynomial) -> Option<Vec<BigInt>> {
        if !h.is_monic() || h.degree() != Some(self.g) {
            return None;
        }
        let roots = sturm_roots_in_symmetric_interval(h, self.q).ok()?;
        if !roots.all_real_in_interval {
            return None;
        }
        let places = zeta::a_from_h(self.q, h, self.depth.max(1)).ok()?;
        if places[0] != BigInt::from(self.n) {
            return None;
        }
        let ok = self
            .a_lower
            .iter()
            .filter(|(&d, _)| d >= 1 && d <= places.len())
            .all(|(&d, &min)| places[d - 1] >= BigInt::from(min));
        ok.then_some(places)
    }
}

/// Smallest multiple of 1/1000 whose square is at least `x ≥ 0`.
fn outward_sqrt(x: &BigRational) -> BigRational {
    let den = BigInt::from(1000);
    let approx = x.to_f64().unwrap_or(0.0).max(0.0).sqrt();
    let mut num = BigInt::from((approx * 1000.0).ceil() as i64);
    loop {
        let r = BigRational::new(num.clone(), den.clone());
        if &r * &r >= *x {
            return r;
        }
        num += 1;
    }
}

fn rational_point(x: &BigRational) -> Point {
    Point::rational(x.numer().clone(), x.denom().clone())
}

fn point_f64(p: &Point) -> f64 {
    match p {
        Point::Rational(n, d) => n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN),
        Point::Quadratic(v) => v.to_f64(),
        Point::NegInfinity => f64::NEG_INFINITY,
        Point::PosInfinity => f64::INFINITY,
    }
}

/// Compares `x` with `k · p` for a finite point `p`.
fn cmp_scaled(x: &BigInt, k: &BigInt, p: &Point) -> Ordering {
    match p {
        Point::Rational(n, d) => (x * d).cmp(&(k * n)),
        Point::Quadratic(v) => sign_of(&(x - k * &v.a), &(-(k * &v.b)), &v.d),
        Point::NegInfinity => Ordering::Greater,
        Point::PosInfinity => Ordering::Less,
    }
}

fn point_cmp(a: &Point, b: &Point) -> Ordering {
    match (a, b) {
        (Point::Rational(n, d), _) => cmp_scaled(n, d, b),
        (_, Point::Rational(..)) => point_cmp(b, a).reverse(),
        (Point::Quadratic(x), Point::Quadratic(y)) => {
            sign_of(&(&x.a - &y.a), &(&x.b - &y.b), &x.d)
        }
        _ => point_f64(a).total_cmp(&point_f64(b)),
    }
}

/// A closed interval with exact endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchWindow {
    pub lo: Point,
    pub hi: Point,
}

impl SearchWindow {
    /// `[-2√q, 2√q]`.
    pub fn full(q: u64) -> Self {
        let (lo, hi) = symmetric_endpoints(q);
        Self { lo, hi }
    }

    pub fn bounds_f64(&self) -> (f64, f64) {
        (point_f64(&self.lo), point_f64(&self.hi))
    }

    /// Whether the square-free `p` has all its roots in the window.
    fn holds_all_roots(&self, p: &IntPolynomial) -> bool {
        count_roots_closed(p, &self.lo, &self.hi) == p.degree().unwrap_or(0)
    }

    /// Whether `x` lies in `[k·lo, k·hi]`.
    fn scaled_contains(&self, x: i64, k: usize) -> bool {
        let (x, k) = (BigInt::from(x), BigInt::from(k));
        cmp_scaled(&x, &k, &self.lo) != Ordering::Less && cmp_scaled(&x, &k, &self.hi) != Ordering::Greater
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    poly: IntPolynomial,
    coeffs: Vec<i64>,
    degree: usize,
    trace: i64,
    square_sum: i64,
}

impl Entry {
    fn new(coeffs: Vec<i64>) -> Self {
        let degree = coeffs.len() - 1;
        let top = coeffs[degree - 1];
        let second = if degree >= 2 { coeffs[degree - 2] } else { 0 };
        Self {
            poly: IntPolynomial::from_i64s(&coeffs),
            degree,
            trace: -top,
            square_sum: top * top - 2 * second,
            coeffs,
        }
    }
}

/// Monic irreducible integer polynomials whose roots all lie in a window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorTable {
    window: SearchWindow,
    entries: Vec<Entry>,
}

/// Whether the monic `f` divides `p` over the integers. Overflow can only
/// happen when the division is inexact.
fn divides_monic(p: &[i64], f: &[i64]) -> bool {
    let (n, m) = (p.len() - 1, f.len() - 1);
    if m > n {
        return false;
    }
    let mut r: Vec<i128> = p.iter().map(|&c| c as i128).collect();
    for i in (m..=n).rev() {
        let lead = r[i];
        if lead == 0 {
            continue;
        }
        for j in 0..=m {
            let Some(v) = (f[j] as i128).checked_mul(lead).and_then(|v| r[i - m + j].checked_sub(v)) else {
                return false;
            };
            r[i - m + j] = v;
        }
    }
    r[..m].iter().all(|&c| c == 0)
}

impl FactorTable {
    /// Every entry of degree at most `max_degree` over `window`, optionally
    /// restricted to factors that can occur under `constraints`.
    pub fn build(
        window: &SearchWindow,
        max_degree: usize,
        constraints: Option<&SearchConstraints>,
        cap: u64,
    ) -> Result<Self, SearchError> {
        let (lo, hi) = window.bounds_f64();
        let (lo, hi) = (lo - 1e-9, hi + 1e-9);
        let mut entries: Vec<Entry> = Vec::new();
        for d in 1..=max_degree {
            let filter = |top: i64, second: i64| match constraints {
                Some(c) => c.spread_allows(d, -top, top * top - 2 * second),
                None => true,
            };
            let mut found = Vec::new();
            let mut robinson = Robinson::new(d, lo, hi, cap).with_top_filter(&filter);
            let lower: Vec<&Entry> = entries.iter().filter(|e| 2 * e.degree <= d).collect();
            let outcome = robinson.run(&mut |c| {
                if lower.iter().any(|e| divides_monic(c, &e.coeffs)) {
                    return;
                }
                let poly = IntPolynomial::from_i64s(c);
                if window.holds_all_roots(&poly) {
                    found.push(c.to_vec());
                }
            });
            if outcome.is_err() {
                return Err(SearchError::TableTooLarge { degree: d, cap });
            }
            let mut new: Vec<Entry> = found.into_iter().map(Entry::new).collect();
            new.sort_by(|a, b| a.poly.cmp(&b.poly));
            entries.extend(new);
        }
        Ok(Self {
            window: window.clone(),
            entries,
        })
    }

    /// Table for a search: factors of degree at most `g` inside the search
    /// window that are compatible with the square-sum bound.
    pub fn for_constraints(constraints: &SearchConstraints, cap: u64) -> Result<Option<Self>, SearchError> {
        let Some(window) = constraints.window() else {
            return Ok(None);
        };
        Self::build(&window, constraints.g, Some(constraints), cap).map(Some)
    }

    pub fn window(&self) -> &SearchWindow {
        &self.window
    }

    pub fn entries(&self) -> impl Iterator<Item = &IntPolynomial> {
        self.entries.iter().map(|e| &e.poly)
    }

    pub fn of_degree(&self, d: usize) -> impl Iterator<Item = &IntPolynomial> {
        self.entries.iter().filter(move |e| e.degree == d).map(|e| &e.poly)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The same entries visited in the order `order` (a permutation of
    /// `0..len`).
    pub fn reordered(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.entries.len(), "not a permutation");
        Self {
            window: self.window.clone(),
            entries: order.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }
}

/// Full-interval table `[-2√q, 2√q]` up to degree `g_max`.
pub fn build_factor_table(q: u64, g_max: usize) -> Result<FactorTable, SearchError> {
    if q > 32 || g_max > 10 {
        return Err(SearchError::Unsupported(format!("q = {q}, g_max = {g_max}")));
    }
    FactorTable::build(&SearchWindow::full(q), g_max, None, DEFAULT_NODE_CAP)
}

/// A real Weil polynomial found by the search, with its factorization into
/// irreducibles (canonical order) and its place counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilCandidate {
    pub h: IntPolynomial,
    pub factors: Vec<(IntPolynomial, u32)>,
    #[serde(
        rename = "a",
        serialize_with = "json::serialize_bigints",
        deserialize_with = "json::deserialize_bigints"
    )]
    pub places: Vec<BigInt>,
}

impl WeilCandidate {
    /// `(t+3)^3*(t+4)^7` style.
    pub fn factored(&self) -> String {
        self.factors
            .iter()
            .map(|(f, m)| if *m == 1 { format!("({f})") } else { format!("({f})^{m}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Groups a multiset of factors into sorted `(factor, multiplicity)` pairs.
fn group(mut factors: Vec<IntPolynomial>) -> Vec<(IntPolynomial, u32)> {
    factors.sort();
    let mut out: Vec<(IntPolynomial, u32)> = Vec::new();
    for f in factors {
        match out.last_mut() {
            Some((last, m)) if *last == f => *m += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

struct Dfs<'a> {
    c: &'a SearchConstraints,
    table: &'a FactorTable,
    chosen: Vec<usize>,
    out: Vec<WeilCandidate>,
}

impl Dfs<'_> {
    fn run(&mut self, start: usize, degree: usize, trace: i64, square_sum: i64) {
        let remaining = self.c.g - degree;
        if !self.c.spread_allows(degree, trace, square_sum) {
            return;
        }
        if !self.table.window.scaled_contains(self.c.trace() - trace, remaining) {
            return;
        }
        if remaining == 0 {
            self.leaf();
            return;
        }
        for i in start..self.table.entries.len() {
            let e = &self.table.entries[i];
            if e.degree > remaining {
                continue;
            }
            self.chosen.push(i);
            self.run(i, degree + e.degree, trace + e.trace, square_sum + e.square_sum);
            self.chosen.pop();
        }
    }

    fn leaf(&mut self) {
        let factors: Vec<IntPolynomial> = self.chosen.iter().map(|&i| self.table.entries[i].poly.clone()).collect();
        let h = factors.iter().fold(IntPolynomial::one(), |acc, f| &acc * f);
        let factors = group(factors);
        if let Some(places) = self.c.admits(&h, &factors) {
            self.out.push(WeilCandidate { h, factors, places });
        }
    }
}

/// Searches with a caller-supplied table. Entries are combined as multisets
/// in table order, so any ordering of the same table gives the same result.
pub fn enumerate_with_table(constraints: &SearchConstraints, table: &FactorTable) -> Vec<WeilCandidate> {
    if constraints.g == 0 || !constraints.weil_feasible() {
        return Vec::new();
    }
    let mut dfs = Dfs {
        c: constraints,
        table,
        chosen: Vec::new(),
        out: Vec::new(),
    };
    dfs.run(0, 0, 0, 0);
    let mut out = dfs.out;
    out.sort_by(|a, b| a.h.cmp(&b.h));
    out
}

/// Every monic degree-`g` real Weil polynomial meeting the constraints, in
/// canonical order.
pub fn enumerate_real_weil(constraints: &SearchConstraints) -> Result<Vec<WeilCandidate>, SearchError> {
    match FactorTable::for_constraints(constraints, DEFAULT_NODE_CAP)? {
        Some(table) => Ok(enumerate_with_table(constraints, &table)),
        None => Ok(Vec::new()),
    }
}

/// Independent check for `g ≤ 2`: scans the whole box
/// `|e_k| ≤ C(g, k)(2√q)^k` of elementary symmetric functions and applies the
/// same admissibility test.
pub fn brute_force_oracle(constraints: &SearchConstraints) -> Result<Vec<IntPolynomial>, SearchError> {
    let g = constraints.g;
    if g > 2 {
        return Err(SearchError::OracleTooLarge(g));
    }
    if g == 0 {
        return Ok(Vec::new());
    }
    let q = constraints.q;
    // |e_k| ≤ C(g,k)·2^k·q^(k/2)
    let bound = |k: u32| -> i64 {
        let c = if k == 1 { g as i64 } else { 1 };
        let scale = c * (1 << k);
        let value = if k.is_multiple_of(2) {
            BigInt::from(scale * (q as i64).pow(k / 2))
        } else {
            crate::exactalg::QuadraticValue::new(0, scale * (q as i64).pow(k / 2), q).floor()
        };
        value.to_i64().expect("small")
    };
    let b1 = bound(1);
    // Integer roots, found by direct evaluation, give the factorization.
    let factor = |h: &IntPolynomial| -> Vec<(IntPolynomial, u32)> {
        let roots: Vec<i64> = (-b1..=b1).filter(|&m| h.eval(&BigInt::from(m)) == BigInt::from(0)).collect();
        match (g, roots.as_slice()) {
            (2, [m]) if h.derivative().eval(&BigInt::from(*m)) == BigInt::from(0) => {
                vec![(IntPolynomial::linear(*m), 2)]
            }
            (2, [m, n]) => vec![(IntPolynomial::linear(*m), 1), (IntPolynomial::linear(*n), 1)],
            _ => vec![(h.clone(), 1)],
        }
    };
    let mut out = Vec::new();
    let mut consider = |h: IntPolynomial| {
        if constraints.admits(&h, &factor(&h)).is_some() {
            out.push(h);
        }
    };
    for e1 in -b1..=b1 {
        if g == 1 {
            consider(IntPolynomial::from_i64s(&[-e1, 1]));
            continue;
        }
        let b2 = bound(2);
        for e2 in -b2..=b2 {
            consider(IntPolynomial::from_i64s(&[e2, -e1, 1]));
        }
    }
    out.sort();
    Ok(out)
}

/// Independent check without a factor table: enumerates degree-`g`
/// polynomials with the prescribed trace directly inside the search window.
/// The resultant filter is not applied.
pub fn enumerate_direct(constraints: &SearchConstraints, cap: u64) -> Result<Vec<IntPolynomial>, SearchError> {
    let Some(window) = constraints.window() else {
        return Ok(Vec::new());
    };
    let (lo, hi) = window.bounds_f64();
    let g = constraints.g;
    let filter = |top: i64, second: i64| constraints.spread_allows(g, -top, top * top - 2 * second);
    let mut robinson = Robinson::new(g, lo - 1e-9, hi + 1e-9, cap).with_top_filter(&filter);
    let mut out = Vec::new();
    robinson
        .run(&mut |c| {
            let h = IntPolynomial::from_i64s(c);
            if constraints.admits_unfactored(&h).is_some() {
                out.push(h);
            }
        })
        .map_err(|_| SearchError::TableTooLarge { degree: g, cap })?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn lin(r: i64) -> IntPolynomial {
        IntPolynomial::linear(r)
    }

    #[test]
    fn full_table_small_degrees() {
        let table = build_factor_table(7, 2).unwrap();
        let linear: Vec<_> = table.of_degree(1).cloned().collect();
        assert_eq!(linear.len(), 11);
        assert!(linear.contains(&lin(-5)));
        assert!(!linear.contains(&lin(-6)));
        assert!(table.of_degree(2).any(|f| *f == p(&[-7, 0, 1])));
        assert!(!table.of_degree(2).any(|f| *f == p(&[-4, 0, 1])));
        for f in table.entries() {
            assert!(sturm_roots_in_symmetric_interval(f, 7).unwrap().all_real_in_interval, "{f}");
        }
    }

    #[test]
    fn windows() {
        let a = SearchConstraints::new(7, 4, 25);
        let w = a.window().unwrap();
        assert_eq!(w.lo, SearchWindow::full(7).lo);
        // -17/4 + 2.562, the first multiple of 1/1000 with 2.562² ≥ 3/4 · 35/4
        assert_eq!(w.hi, Point::rational(-211, 125));
        let b = SearchConstraints::new(7, 10, 45).with_lower(2, 3);
        let w = b.window().unwrap();
        let (lo, hi) = w.bounds_f64();
        assert!((lo + 5.075).abs() < 1e-3 && (hi + 2.325).abs() < 1e-3, "{lo} {hi}");
        assert!(SearchConstraints::new(7, 1, 14).window().is_none());
    }

    #[test]
    fn genus_one_and_infeasible() {
        let found = enumerate_real_weil(&SearchConstraints::new(7, 1, 13)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].h, lin(-5));
        assert!(enumerate_real_weil(&SearchConstraints::new(7, 1, 14)).unwrap().is_empty());
        assert!(brute_force_oracle(&SearchConstraints::new(7, 2, 20)).unwrap().is_empty());
    }

    #[test]
    fn genus_four_with_twenty_five_points() {
        let plain = SearchConstraints::new(7, 4, 25);
        let all: Vec<_> = enumerate_real_weil(&plain).unwrap().into_iter().map(|w| w.h).collect();
        assert_eq!(all.len(), 4);
        assert_eq!(enumerate_direct(&plain, DEFAULT_NODE_CAP).unwrap(), all);
        let found = enumerate_real_weil(&plain.with_unit_resultant_filter()).unwrap();
        assert_eq!(found.len(), 1);
        let c = &found[0];
        assert_eq!(c.h, &lin(-2) * &lin(-5).pow(3));
        assert_eq!(c.factors, vec![(lin(-2), 1), (lin(-5), 3)]);
        assert_eq!(c.places[..4], [25, 1, 115, 576].map(BigInt::from));
    }

    #[test]
    fn genus_ten_with_forty_five_points() {
        let c = SearchConstraints::new(7, 10, 45).with_lower(2, 3);
        let table = FactorTable::for_constraints(&c, DEFAULT_NODE_CAP).unwrap().unwrap();
        assert_eq!(table.entries().cloned().collect::<Vec<_>>(), vec![lin(-3), lin(-4), lin(-5)]);
        let found = enumerate_with_table(&c, &table);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].factors, vec![(lin(-3), 3), (lin(-4), 7)]);
        assert_eq!(found[0].places[..4], [45, 3, 17, 807].map(BigInt::from));
        assert_eq!(enumerate_direct(&c, DEFAULT_NODE_CAP).unwrap(), vec![found[0].h.clone()]);
    }

    #[test]
    fn divisibility() {
        assert!(divides_monic(&[6, 5, 1], &[2, 1]));
        assert!(!divides_monic(&[6, 5, 1], &[4, 1]));
        assert!(!divides_monic(&[i64::MAX, 0, 0, 1], &[i64::MAX, 1]));
    }

    #[test]
    fn oracle_agrees_in_genus_two() {
        for n in [10, 14, 18, 0] {
            let c = SearchConstraints::new(7, 2, n);
            let fast: Vec<_> = enumerate_real_weil(&c).unwrap().into_iter().map(|w| w.h).collect();
            assert_eq!(fast, brute_force_oracle(&c).unwrap(), "N = {n}");
        }
    }
}
