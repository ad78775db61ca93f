//! Point counts of hyperelliptic-form curves `y² = f(x)` and of biquadratic
//! fiber products `{y² = f(x), z² = g(x)}` over finite fields, plus small
//! elliptic-curve families.

mod count;
mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{mobius_a_from_n, IntPolynomial};
use crate::gfarith::{self, FieldDescriptor, FieldError};

pub use count::{
    affine_system_count, fiber_point_counts, hyperelliptic_count, hyperelliptic_count_bruteforce,
    hyperelliptic_counts, points_at_infinity,
};
pub use parse::{parse_factored, parse_polynomial, parse_raw_curve, Equation, ParseError, RawCurve};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{what} is not square-free over GF({p})")]
    NotSquarefree { what: String, p: u64 },
    #[error("{what} is constant modulo {p}")]
    ConstantRhs { what: String, p: u64 },
    #[error("unsupported curve shape: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveKind {
    HyperellipticForm { f: IntPolynomial },
    FiberProduct { f: IntPolynomial, g: IntPolynomial },
}

/// A validated curve over a prime field. Coefficients are reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    kind: CurveKind,
    field: FieldDescriptor,
    /// Left-hand variable names, for display.
    vars: Vec<String>,
}

fn reduce(f: &IntPolynomial, p: u64) -> IntPolynomial {
    let p = BigInt::from(p);
    IntPolynomial::new(f.coeffs().iter().map(|c| ((c % &p) + &p) % &p).collect())
}

pub(crate) fn small_coeffs(f: &IntPolynomial) -> Vec<i64> {
    f.coeffs()
        .iter()
        .map(|c| c.to_i64().expect("reduced coefficients fit in i64"))
        .collect()
}

fn check_rhs(f: &IntPolynomial, what: &str, p: u64) -> Result<(), CurveError> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(CurveError::ConstantRhs {
            what: what.to_string(),
            p,
        });
    }
    if !gfarith::is_squarefree_mod_p(&small_coeffs(f), p as u32) {
        return Err(CurveError::NotSquarefree {
            what: what.to_string(),
            p,
        });
    }
    Ok(())
}

/// `⌊(deg f − 1)/2⌋` for a square-free `f`.
pub fn hyperelliptic_genus(f: &IntPolynomial) -> u32 {
    (f.degree().unwrap_or(0).saturating_sub(1) / 2) as u32
}

pub(crate) fn product_mod(f: &IntPolynomial, g: &IntPolynomial, p: u64) -> IntPolynomial {
    reduce(&(f * g), p)
}

impl CurveSpec {
    pub fn hyperelliptic(f: &IntPolynomial, p: u64) -> Result<Self, CurveError> {
        let field = gfarith::field(p, 1)?;
        let f = reduce(f, p);
        check_rhs(&f, "right-hand side", p)?;
        Ok(Self {
            kind: CurveKind::HyperellipticForm { f },
            field,
            vars: vec!["y".to_string()],
        })
    }

    pub fn fiber_product(f: &IntPolynomial, g: &IntPolynomial, p: u64) -> Result<Self, CurveError> {
        let field = gfarith::field(p, 1)?;
        let (f, g) = (reduce(f, p), reduce(g, p));
        check_rhs(&f, "first right-hand side", p)?;
        check_rhs(&g, "second right-hand side", p)?;
        check_rhs(&product_mod(&f, &g, p), "product of the right-hand sides", p)?;
        Ok(Self {
            kind: CurveKind::FiberProduct { f, g },
            field,
            vars: vec!["y".to_string(), "z".to_string()],
        })
    }

    pub fn kind(&self) -> &CurveKind {
        &self.kind
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.characteristic() as u64
    }

    pub fn genus(&self) -> u32 {
        match &self.kind {
            CurveKind::HyperellipticForm { f } => hyperelliptic_genus(f),
            CurveKind::FiberProduct { f, g } => {
                hyperelliptic_genus(f)
                    + hyperelliptic_genus(g)
                    + hyperelliptic_genus(&product_mod(f, g, self.p()))
            }
        }
    }

    /// The three quadratic subcovers `y² = f`, `z² = g`, `w² = f·g` of a
    /// fiber product, or the curve itself for the hyperelliptic form.
    pub fn subcovers(&self) -> Vec<CurveSpec> {
        let p = self.p();
        let single = |f: IntPolynomial, var: &str| CurveSpec {
            kind: CurveKind::HyperellipticForm { f },
            field: self.field.clone(),
            vars: vec![var.to_string()],
        };
        match &self.kind {
            CurveKind::HyperellipticForm { .. } => vec![self.clone()],
            CurveKind::FiberProduct { f, g } => vec![
                single(f.clone(), &self.vars[0]),
                single(g.clone(), &self.vars[1]),
                single(product_mod(f, g, p), "w"),
            ],
        }
    }
}

/// Formats a polynomial in `x` in the parser's own syntax.
fn format_rhs(f: &IntPolynomial) -> String {
    let mut terms = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let var = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        let one = *c == BigInt::from(1);
        terms.push(match (i, one) {
            (0, _) => c.to_string(),
            (_, true) => var,
            _ => format!("{c}*{var}"),
        });
    }
    terms.join(" + ")
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CurveKind::HyperellipticForm { f } => write!(out, "{}^2 = {}", self.vars[0], format_rhs(f))?,
            CurveKind::FiberProduct { f, g } => write!(
                out,
                "{}^2 = {}; {}^2 = {}",
                self.vars[0],
                format_rhs(f),
                self.vars[1],
                format_rhs(g)
            )?,
        }
        write!(out, " over GF({})", self.p())
    }
}

/// Parses and validates a curve description such as
/// `y^2 = x^3 + 3; z^2 = -x^3 + 3 over GF(7)`.
pub fn parse_curve(text: &str) -> Result<CurveSpec, CurveError> {
    let raw = parse_raw_curve(text)?;
    let p = raw.p;
    let mut spec = match raw.equations.as_slice() {
        [e] => CurveSpec::hyperelliptic(&e.rhs, p)?,
        [e1, e2] => CurveSpec::fiber_product(&e1.rhs, &e2.rhs, p)?,
        _ => return Err(CurveError::Unsupported("expected one or two equations".into())),
    };
    spec.vars = raw.equations.into_iter().map(|e| e.var).collect();
    Ok(spec)
}

/// Point counts `N_1 .. N_D` over `F_q, .., F_{q^D}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCountVector {
    pub q: u64,
    #[serde(rename = "N")]
    pub counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountVectorError {
    #[error("N_{n} = {count_n} is smaller than N_{m} = {count_m}")]
    NotMonotone { m: usize, n: usize, count_m: u64, count_n: u64 },
    #[error("the number of degree-{degree} places is not a nonnegative integer")]
    BadPlaceCount { degree: usize },
}

impl PointCountVector {
    /// Place counts `a_1 .. a_D` by Möbius inversion.
    pub fn places(&self) -> Result<Vec<BigInt>, CountVectorError> {
        let counts: Vec<BigInt> = self.counts.iter().map(|&c| BigInt::from(c)).collect();
        mobius_a_from_n(&counts).map_err(|e| match e {
            crate::exactalg::AlgError::NonIntegralPlaceCount { degree } => {
                CountVectorError::BadPlaceCount { degree }
            }
            _ => unreachable!("inversion only fails on divisibility"),
        })
    }

    /// Checks divisibility monotonicity and that every place count is a
    /// nonnegative integer.
    pub fn validate(&self) -> Result<(), CountVectorError> {
        for n in 1..=self.counts.len() {
            for m in (1..n).filter(|m| n % m == 0) {
                let (count_m, count_n) = (self.counts[m - 1], self.counts[n - 1]);
                if count_n < count_m {
                    return Err(CountVectorError::NotMonotone { m, n, count_m, count_n });
                }
            }
        }
        let places = self.places()?;
        if let Some(i) = places.iter().position(|a| *a < BigInt::zero()) {
            return Err(CountVectorError::BadPlaceCount { degree: i + 1 });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticFamily {
    /// `y² = x³ + b`, `b ≠ 0`.
    J0,
    /// `y² = x³ + a x + b` with nonzero discriminant.
    Short,
}

/// A short Weierstrass curve `y² = x³ + a x + b` and its number of rational points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EllipticCount {
    pub a: u64,
    pub b: u64,
    pub points: u64,
}

impl EllipticCount {
    pub fn spec(&self, q: u64) -> CurveSpec {
        let f = IntPolynomial::from_i64s(&[self.b as i64, self.a as i64, 0, 1]);
        CurveSpec::hyperelliptic(&f, q).expect("nonsingular by construction")
    }
}

/// Scans a family of elliptic curves over the prime field `F_q`.
pub fn enumerate_elliptic(q: u64, family: EllipticFamily) -> Result<Vec<EllipticCount>, CurveError> {
    gfarith::field(q, 1)?;
    let a_range = match family {
        EllipticFamily::J0 => 0..1,
        EllipticFamily::Short => 0..q,
    };
    let mut out = Vec::new();
    for a in a_range {
        for b in 0..q {
            if (4 * a * a * a + 27 * b * b) % q == 0 {
                continue;
            }
            let entry = EllipticCount { a, b, points: 0 };
            let points = hyperelliptic_count(&entry.spec(q), 1)?;
            out.push(EllipticCount { points, ..entry });
        }
    }
    Ok(out)
}

/// Groups curves into `F_q`-isomorphism classes under `(a, b) ~ (u⁴a, u⁶b)`.
/// Each class is sorted, and classes are ordered by their first member.
pub fn isomorphism_classes(q: u64, curves: &[EllipticCount]) -> Vec<Vec<EllipticCount>> {
    let mut classes: Vec<Vec<EllipticCount>> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut sorted = curves.to_vec();
    sorted.sort();
    for c in &sorted {
        if seen.contains(&(c.a, c.b)) {
            continue;
        }
        let mut class: Vec<EllipticCount> = Vec::new();
        for u in 1..q {
            let u2 = u * u % q;
            let (u4, u6) = (u2 * u2 % q, u2 * u2 % q * u2 % q);
            let key = (u4 * c.a % q, u6 * c.b % q);
            if seen.insert(key) {
                if let Some(member) = sorted.iter().find(|e| (e.a, e.b) == key) {
                    class.push(*member);
                }
            }
        }
        class.sort();
        classes.push(class);
    }
    classes
}
