use crate::exactalg::IntPolynomial;
use crate::gfarith::{self, FieldDescriptor, LogTables};

use super::{product_mod, small_coeffs, CurveError, CurveKind, CurveSpec, PointCountVector};

fn reduced_u32(f: &IntPolynomial) -> Vec<u32> {
    small_coeffs(f).into_iter().map(|c| c as u32).collect()
}

/// `Σ_x χ(f(x))` over all of the tabulated field.
fn character_sum(tables: &LogTables, f: &[u32]) -> i64 {
    let (&lead, rest) = f.split_last().expect("nonconstant");
    let mut sum = 0i64;
    for x in 0..tables.size() {
        let mut acc = lead;
        for &c in rest.iter().rev() {
            acc = tables.add_constant(tables.mul(acc, x), c);
        }
        sum += tables.quadratic_character(acc) as i64;
    }
    sum
}

/// Rational points at infinity of `y² = f(x)`: one for odd degree, and for
/// even degree two or none depending on whether the leading coefficient is a
/// square in the counting field.
fn infinity_points(tables: &LogTables, f: &[u32]) -> i64 {
    if f.len().is_multiple_of(2) {
        1
    } else {
        1 + tables.quadratic_character(*f.last().expect("nonconstant")) as i64
    }
}

fn count_with(tables: &LogTables, f: &[u32]) -> u64 {
    let total = tables.size() as i64 + character_sum(tables, f) + infinity_points(tables, f);
    total as u64
}

fn tables_for(spec: &CurveSpec, n: usize) -> Result<LogTables, CurveError> {
    Ok(gfarith::field(spec.p(), n)?.log_tables()?)
}

fn single_rhs(spec: &CurveSpec) -> Result<&IntPolynomial, CurveError> {
    match spec.kind() {
        CurveKind::HyperellipticForm { f } => Ok(f),
        CurveKind::FiberProduct { .. } => Err(CurveError::Unsupported(
            "expected a single equation y^2 = f(x)".into(),
        )),
    }
}

fn fiber_rhs(spec: &CurveSpec) -> Result<(&IntPolynomial, &IntPolynomial), CurveError> {
    match spec.kind() {
        CurveKind::FiberProduct { f, g } => Ok((f, g)),
        CurveKind::HyperellipticForm { .. } => Err(CurveError::Unsupported(
            "expected a fiber product of two equations".into(),
        )),
    }
}

/// `#X(F_{p^n})` for the smooth projective model of `y² = f(x)`.
pub fn hyperelliptic_count(spec: &CurveSpec, n: usize) -> Result<u64, CurveError> {
    let f = reduced_u32(single_rhs(spec)?);
    Ok(count_with(&tables_for(spec, n)?, &f))
}

/// Counts over `F_p, .., F_{p^depth}`.
pub fn hyperelliptic_counts(spec: &CurveSpec, depth: usize) -> Result<PointCountVector, CurveError> {
    let f = reduced_u32(single_rhs(spec)?);
    let counts = (1..=depth)
        .map(|n| Ok(count_with(&tables_for(spec, n)?, &f)))
        .collect::<Result<_, CurveError>>()?;
    Ok(PointCountVector { q: spec.p(), counts })
}

/// Number of `y ∈ F` with `y² = v`, found by scanning the field.
fn square_roots(field: &FieldDescriptor, v: gfarith::FieldElement) -> Result<u64, CurveError> {
    Ok(field.elements()?.filter(|&y| field.square(y) == v).count() as u64)
}

/// Slow reference count: scans every `(x, y)` pair with generic field
/// arithmetic, then adds the points at infinity.
pub fn hyperelliptic_count_bruteforce(spec: &CurveSpec, n: usize) -> Result<u64, CurveError> {
    let f = single_rhs(spec)?;
    let field = gfarith::field(spec.p(), n)?;
    let coeffs = small_coeffs(f);
    let mut affine = 0;
    for x in field.elements()? {
        affine += square_roots(&field, field.eval_poly(&coeffs, x))?;
    }
    let deg = coeffs.len() - 1;
    let lead = field.from_int(coeffs[deg]);
    let at_infinity = if deg % 2 == 1 {
        1
    } else if field.quadratic_character(lead) == 1 {
        2
    } else {
        0
    };
    Ok(affine + at_infinity)
}

/// Counts of a fiber product over `F_p, .., F_{p^depth}` from its three
/// quadratic subcovers:
/// `N(C) = N(y²=f) + N(z²=g) + N(w²=fg) − 2(q^n + 1)`.
pub fn fiber_point_counts(spec: &CurveSpec, depth: usize) -> Result<PointCountVector, CurveError> {
    let (f, g) = fiber_rhs(spec)?;
    let polys = [f.clone(), g.clone(), product_mod(f, g, spec.p())].map(|h| reduced_u32(&h));
    let mut counts = Vec::with_capacity(depth);
    for n in 1..=depth {
        let tables = tables_for(spec, n)?;
        let subcovers: u64 = polys.iter().map(|h| count_with(&tables, h)).sum();
        counts.push(subcovers - 2 * (tables.size() as u64 + 1));
    }
    Ok(PointCountVector { q: spec.p(), counts })
}

/// Affine solutions `(x, y, z)` of a fiber product over `F_{p^n}`, by scanning.
pub fn affine_system_count(spec: &CurveSpec, n: usize) -> Result<u64, CurveError> {
    let (f, g) = fiber_rhs(spec)?;
    let field = gfarith::field(spec.p(), n)?;
    let (cf, cg) = (small_coeffs(f), small_coeffs(g));
    let mut total = 0;
    for x in field.elements()? {
        let ys = square_roots(&field, field.eval_poly(&cf, x))?;
        if ys > 0 {
            total += ys * square_roots(&field, field.eval_poly(&cg, x))?;
        }
    }
    Ok(total)
}

/// Rational points over `F_{p^n}` lying above `x = ∞` on the smooth model of
/// a fiber product.
///
/// A subcover `v² = h` is ramified at infinity when `deg h` is odd, and is
/// otherwise split or inert according to the squareness of the leading
/// coefficient of `h`. With no ramification the four points are rational
/// exactly when all three subcovers split. With ramification, exactly one
/// subcover is unramified, and the two points are rational when it splits.
pub fn points_at_infinity(spec: &CurveSpec, n: usize) -> Result<u64, CurveError> {
    let (f, g) = fiber_rhs(spec)?;
    let field = gfarith::field(spec.p(), n)?;
    let fg = product_mod(f, g, spec.p());
    let splits = |h: &IntPolynomial| {
        let c = small_coeffs(h);
        field.quadratic_character(field.from_int(*c.last().expect("nonconstant"))) == 1
    };
    let odd = |h: &IntPolynomial| h.degree().expect("nonzero") % 2 == 1;
    let unramified: Vec<&IntPolynomial> = [f, g, &fg].into_iter().filter(|h| !odd(h)).collect();
    Ok(match unramified.as_slice() {
        [_, _, _] if unramified.iter().all(|h| splits(h)) => 4,
        [_, _, _] => 0,
        [k] if splits(k) => 2,
        [_] => 0,
        _ => unreachable!("the degrees of f, g and fg cannot all be odd"),
    })
}
