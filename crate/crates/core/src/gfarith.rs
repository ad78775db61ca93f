//! Prime fields `F_p` and their extensions `F_{p^n}` for small odd `p`.
//!
//! Elements of `F_{p^n}` are coefficient vectors modulo the lexicographically
//! smallest monic irreducible polynomial of degree `n`. For fields small
//! enough to enumerate, [`LogTables`] give constant-time multiplication and
//! quadratic characters on a packed integer encoding.

use std::fmt;

use thiserror::Error;

pub const MAX_DEGREE: usize = 8;
pub const MAX_CHARACTERISTIC: u32 = 1000;
/// Largest field that may be enumerated or tabulated.
pub const ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("characteristic {0} exceeds the supported maximum {MAX_CHARACTERISTIC}")]
    CharacteristicTooLarge(u64),
    #[error("extension degree {0} is outside 1..={MAX_DEGREE}")]
    DegreeOutOfRange(usize),
    #[error("field of size {size} exceeds the enumeration cap {ENUMERATION_CAP}")]
    TooLargeToEnumerate { size: u128 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// An element of `F_{p^n}`: coefficients `c_0 .. c_{n-1}` of the residue
/// polynomial, each in `[0, p)`. Unused slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement {
    coeffs: [u32; MAX_DEGREE],
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32; MAX_DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// `F_{p^n}` together with its defining modulus.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldDescriptor {
    p: u32,
    n: usize,
    /// Monic modulus, low-to-high, length `n + 1`.
    modulus: Vec<u32>,
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.n, self.modulus)
    }
}

/// Builds `F_{p^n}` with its deterministic modulus.
pub fn field(p: u64, n: usize) -> Result<FieldDescriptor, FieldError> {
    FieldDescriptor::new(p, n)
}

impl FieldDescriptor {
    pub fn new(p: u64, n: usize) -> Result<Self, FieldError> {
        if p > MAX_CHARACTERISTIC as u64 {
            return Err(FieldError::CharacteristicTooLarge(p));
        }
        if p == 2 || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(FieldError::DegreeOutOfRange(n));
        }
        let p = p as u32;
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, n)
        };
        Ok(Self { p, n, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.n as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::default()
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> FieldElement {
        let mut e = FieldElement::default();
        e.coeffs[0] = v.rem_euclid(self.p as i64) as u32;
        e
    }

    /// Element from residue-polynomial coefficients, low-to-high, reduced mod p.
    /// Only the first `n` entries are used.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> FieldElement {
        let mut e = FieldElement::default();
        for (slot, &c) in e.coeffs.iter_mut().zip(coeffs.iter().take(self.n)) {
            *slot = c.rem_euclid(self.p as i64) as u32;
        }
        e
    }

    /// The class of `t` (a constant for `n = 1`, where the modulus is `t`).
    pub fn generator_t(&self) -> FieldElement {
        if self.n == 1 {
            self.zero()
        } else {
            self.from_coeffs(&[0, 1])
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut r = FieldElement::default();
        for i in 0..self.n {
            let s = a.coeffs[i] + b.coeffs[i];
            r.coeffs[i] = if s >= self.p { s - self.p } else { s };
        }
        r
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let mut r = FieldElement::default();
        for i in 0..self.n {
            r.coeffs[i] = if a.coeffs[i] == 0 { 0 } else { self.p - a.coeffs[i] };
        }
        r
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let n = self.n;
        let p = self.p as u64;
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..n {
            let ai = a.coeffs[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + ai * b.coeffs[j] as u64) % p;
            }
        }
        // Reduce modulo the monic modulus from the top.
        for k in (n..2 * n - 1).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[k - n + i] = (prod[k - n + i] + (p - top) * m) % p;
            }
        }
        let mut r = FieldElement::default();
        for i in 0..n {
            r.coeffs[i] = prod[i] as u32;
        }
        r
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut e: u128) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (!a.is_zero()).then(|| self.pow(a, self.size() - 2))
    }

    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u128)
    }

    /// `χ(x) = x^((q-1)/2)` as -1, 0 or +1.
    pub fn quadratic_character(&self, a: FieldElement) -> i8 {
        if a.is_zero() {
            return 0;
        }
        let r = self.pow(a, (self.size() - 1) / 2);
        if r == self.one() {
            1
        } else {
            debug_assert_eq!(r, self.from_int(-1));
            -1
        }
    }

    /// Evaluates an integer polynomial (coefficients low-to-high, reduced mod p).
    pub fn eval_poly(&self, coeffs: &[i64], x: FieldElement) -> FieldElement {
        coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, &c| self.add(self.mul(acc, x), self.from_int(c)))
    }

    fn check_enumerable(&self) -> Result<u64, FieldError> {
        let size = self.size();
        if size > ENUMERATION_CAP as u128 {
            return Err(FieldError::TooLargeToEnumerate { size });
        }
        Ok(size as u64)
    }

    /// Every element exactly once, in lexicographic order of `(c_0, .., c_{n-1})`.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_, FieldError> {
        let size = self.check_enumerable()?;
        let p = self.p as u64;
        let n = self.n;
        Ok((0..size).map(move |mut k| {
            let mut e = FieldElement::default();
            for i in (0..n).rev() {
                e.coeffs[i] = (k % p) as u32;
                k /= p;
            }
            e
        }))
    }

    /// Discrete-log tables for fast arithmetic on the packed encoding.
    pub fn log_tables(&self) -> Result<LogTables, FieldError> {
        let size = self.check_enumerable()? as usize;
        let order = size as u64 - 1;
        let factors = prime_factors(order);
        let one = self.one();
        let generator = self
            .elements()?
            .filter(|e| !e.is_zero())
            .find(|&e| factors.iter().all(|&r| self.pow(e, (order / r) as u128) != one))
            .expect("the multiplicative group is cyclic");
        let mut exp = vec![0u32; size - 1];
        let mut log = vec![u32::MAX; size];
        let mut cur = one;
        for (i, slot) in exp.iter_mut().enumerate() {
            let packed = self.pack(cur);
            *slot = packed;
            log[packed as usize] = i as u32;
            cur = self.mul(cur, generator);
        }
        Ok(LogTables {
            p: self.p,
            order: order as u32,
            exp,
            log,
        })
    }

    /// Packed encoding `Σ c_i p^i`.
    pub fn pack(&self, a: FieldElement) -> u32 {
        a.coeffs[..self.n]
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * self.p + c)
    }
}

/// Exponential and logarithm tables with respect to a fixed primitive element.
pub struct LogTables {
    p: u32,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl LogTables {
    pub fn size(&self) -> u32 {
        self.order + 1
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % self.order as u64) as usize]
    }

    /// Adds a prime-field constant `c ∈ [0, p)` to a packed element.
    #[inline]
    pub fn add_constant(&self, a: u32, c: u32) -> u32 {
        let low = a % self.p;
        let sum = low + c;
        a - low + if sum >= self.p { sum - self.p } else { sum }
    }

    #[inline]
    pub fn quadratic_character(&self, a: u32) -> i8 {
        if a == 0 {
            0
        } else if self.log[a as usize].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

// Polynomial helpers over F_p, coefficients low-to-high.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let inv_lead = inv_mod(m[dm], p) as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let f = r[top] as u64 * inv_lead % p as u64;
        for i in 0..=dm {
            let idx = top - dm + i;
            r[idx] = ((r[idx] as u64 + (p as u64 - f) * m[i] as u64) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    poly_rem(&prod, m, p)
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

/// `f` has no irreducible factor of degree `≤ deg f / 2`, tested by
/// `gcd(f, t^(p^k) - t) = 1` for `k ≤ deg f / 2`.
pub(crate) fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    let t = vec![0, 1];
    let mut power = t.clone();
    for _ in 1..=n / 2 {
        // power ← power^p mod f
        let mut acc = vec![1u32];
        let mut base = power.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, f, p);
            }
            base = poly_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        power = acc;
        let g = poly_gcd(f, &poly_sub(&power, &t, p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Monic degree-`n` irreducible with the smallest coefficient tuple
/// `(c_0, .., c_{n-1})` in lexicographic order.
fn smallest_irreducible(p: u32, n: usize) -> Vec<u32> {
    let total = (p as u64).pow(n as u32);
    for mut k in 0..total {
        let mut f = vec![0u32; n + 1];
        f[n] = 1;
        for i in (0..n).rev() {
            f[i] = (k % p as u64) as u32;
            k /= p as u64;
        }
        if f[0] != 0 && is_irreducible_mod_p(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Square-freeness of an integer polynomial reduced mod p.
pub(crate) fn is_squarefree_mod_p(coeffs: &[i64], p: u32) -> bool {
    let mut f: Vec<u32> = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u32).collect();
    trim(&mut f);
    if f.len() <= 1 {
        return !f.is_empty();
    }
    let mut df: Vec<u32> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| ((i as u64 * c as u64) % p as u64) as u32)
        .collect();
    trim(&mut df);
    if df.is_empty() {
        return false;
    }
    poly_gcd(&f, &df, p).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_t() {
        let f = field(7, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.elements().unwrap().count(), 7);
    }

    #[test]
    fn quadratic_modulus_over_f7() {
        assert_eq!(field(7, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn cubic_modulus_matches_root_scan() {
        // Oracle: a cubic is irreducible iff it has no root in F_7.
        let p = 7u64;
        let expected = (0..p.pow(3))
            .map(|k| [k / 49, (k / 7) % 7, k % 7])
            .find(|c| (0..p).all(|x| (c[0] + c[1] * x + c[2] * x * x + x * x * x) % p != 0))
            .unwrap();
        let m = field(7, 3).unwrap();
        let got: Vec<u64> = m.modulus().iter().map(|&c| c as u64).collect();
        assert_eq!(got, vec![expected[0], expected[1], expected[2], 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(field(9, 1), Err(FieldError::NotOddPrime(9)));
        assert_eq!(field(2, 1), Err(FieldError::NotOddPrime(2)));
        assert_eq!(field(7, 0), Err(FieldError::DegreeOutOfRange(0)));
        assert_eq!(field(7, 9), Err(FieldError::DegreeOutOfRange(9)));
        assert_eq!(field(1009, 1), Err(FieldError::CharacteristicTooLarge(1009)));
        assert!(matches!(
            field(997, 3).unwrap().elements().err(),
            Some(FieldError::TooLargeToEnumerate { .. })
        ));
    }

    #[test]
    fn characters_in_small_fields() {
        let f7 = field(7, 1).unwrap();
        assert_eq!(f7.quadratic_character(f7.from_int(3)), -1);
        assert_eq!(f7.quadratic_character(f7.from_int(2)), 1);
        assert_eq!(f7.quadratic_character(f7.zero()), 0);
        let f49 = field(7, 2).unwrap();
        assert_eq!(f49.quadratic_character(f49.from_int(-1)), 1);
        let i = f49.generator_t();
        assert_eq!(f49.square(i), f49.from_int(-1));
    }

    #[test]
    fn enumeration_sizes() {
        for n in 1..=3 {
            let f = field(7, n).unwrap();
            let all: std::collections::HashSet<_> = f.elements().unwrap().collect();
            assert_eq!(all.len(), 7usize.pow(n as u32));
        }
    }

    #[test]
    fn field_axioms_in_f343() {
        let f = field(7, 3).unwrap();
        let elems: Vec<_> = f.elements().unwrap().collect();
        let one = f.one();
        let mut squares = 0;
        for (k, &x) in elems.iter().enumerate() {
            if !x.is_zero() {
                assert_eq!(f.pow(x, 342), one);
                assert_eq!(f.mul(x, f.inv(x).unwrap()), one);
                let mut y = x;
                for _ in 0..3 {
                    y = f.frobenius(y);
                }
                assert_eq!(y, x);
                if f.quadratic_character(x) == 1 {
                    squares += 1;
                }
            }
            let y = elems[(k * 37 + 11) % elems.len()];
            assert_eq!(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
            assert_eq!(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
            if !x.is_zero() && !y.is_zero() {
                assert_eq!(
                    f.quadratic_character(f.mul(x, y)),
                    f.quadratic_character(x) * f.quadratic_character(y)
                );
            }
        }
        assert_eq!(squares, 171);
    }

    #[test]
    fn log_tables_agree_with_direct_arithmetic() {
        for n in 1..=3 {
            let f = field(7, n).unwrap();
            let t = f.log_tables().unwrap();
            let elems: Vec<_> = f.elements().unwrap().collect();
            for (k, &x) in elems.iter().enumerate() {
                let y = elems[(k * 13 + 5) % elems.len()];
                assert_eq!(t.mul(f.pack(x), f.pack(y)), f.pack(f.mul(x, y)));
                assert_eq!(t.quadratic_character(f.pack(x)), f.quadratic_character(x));
                assert_eq!(
                    t.add_constant(f.pack(x), 4),
                    f.pack(f.add(x, f.from_int(4)))
                );
            }
        }
    }

    #[test]
    fn squarefree_mod_p() {
        assert!(is_squarefree_mod_p(&[3, 0, 0, 1], 7));
        assert!(!is_squarefree_mod_p(&[0, 0, 1], 7));
        // the derivative of x^7 - x is -1 mod 7
        assert!(is_squarefree_mod_p(&[0, -1, 0, 0, 0, 0, 0, 1], 7));
        assert!(!is_squarefree_mod_p(&[0], 7));
        assert!(!is_squarefree_mod_p(&[0, 0, 0, 0, 0, 0, 0, 1], 7));
    }
}
