//! Exact integer polynomial arithmetic: Sturm sequences, root location
//! against `±2√q`, resultants, radicals and Möbius inversion.

mod mobius;
mod poly;
mod quadratic;
mod resultant;
mod sturm;

use thiserror::Error;

pub use mobius::{divisors, mobius, mobius_a_from_n, n_from_a};
pub use poly::IntPolynomial;
pub use quadratic::{sign_of, QuadraticValue};
pub use resultant::{resultant, sylvester_resultant};
pub use sturm::{
    count_roots_closed, count_roots_open, eval_quadratic, sign_at, sturm_roots_in_symmetric_interval,
    symmetric_endpoints, IntervalRoots, Point, SturmChain,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("place count a_{degree} is not an integer; the point counts are inconsistent")]
    NonIntegralPlaceCount { degree: usize },
}

/// Monic square-free part `f / gcd(f, f')`.
pub fn radical(f: &IntPolynomial) -> Result<IntPolynomial, AlgError> {
    if f.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(AlgError::NotMonic);
    }
    Ok(radical_any(f))
}

/// Primitive square-free part with positive leading coefficient.
pub(crate) fn radical_any(f: &IntPolynomial) -> IntPolynomial {
    if f.is_constant() {
        return f.primitive_part();
    }
    let g = f.gcd(&f.derivative()).primitive_part();
    f.primitive_part()
        .div_exact(&g)
        .expect("gcd divides the primitive part")
        .primitive_part()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radicals() {
        let l = |r| IntPolynomial::linear(r);
        assert_eq!(radical(&l(-5).pow(3)).unwrap(), l(-5));
        let f = &l(-3).pow(3) * &l(-4).pow(7);
        assert_eq!(radical(&f).unwrap(), &l(-3) * &l(-4));
        let g = IntPolynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(radical(&g).unwrap(), g);
        assert_eq!(radical(&IntPolynomial::from_i64s(&[1, 2])), Err(AlgError::NotMonic));
    }
}
