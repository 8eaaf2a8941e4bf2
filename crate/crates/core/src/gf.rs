//! Arithmetic in GF(2^7) with primitive polynomial x^7 + x^3 + 1.
//!
//! Elements are 7-bit symbols. Addition is XOR; multiplication goes through
//! exp/log tables generated from the primitive element `α = 2`. The tables
//! are built at compile time and shared read-only by every caller.
//!
//! Polynomials ([`GfPoly`]) store coefficients in ascending order, so
//! `coeffs()[i]` is the coefficient of `x^i`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};

use thiserror::Error;

/// x^7 + x^3 + 1 (137 decimal).
pub const PRIMITIVE_POLY: u16 = 0b1000_1001;

/// Number of nonzero field elements, the multiplicative order of `α`.
pub const ORDER: usize = 127;

/// Errors from field operations with no defined result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("value {0} does not fit in a 7-bit field symbol")]
    OutOfRange(u8),
    #[error("no inverse of zero")]
    ZeroInverse,
}

/// An element of GF(2^7).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf(u8);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);
    /// The primitive element `α`, i.e. the polynomial `x`.
    pub const ALPHA: Gf = Gf(2);

    pub fn new(value: u8) -> Result<Gf, FieldError> {
        if value < 128 {
            Ok(Gf(value))
        } else {
            Err(FieldError::OutOfRange(value))
        }
    }

    /// Builds an element from a value already known to be below 128.
    ///
    /// Panics otherwise. Intended for constants and table data.
    pub const fn from_u7(value: u8) -> Gf {
        assert!(value < 128, "field symbol out of range");
        Gf(value)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `α^e` for any integer exponent.
    #[inline]
    pub fn alpha_pow(e: i64) -> Gf {
        TABLES.exp[e.rem_euclid(ORDER as i64) as usize]
    }

    /// Discrete logarithm base `α`, `None` for zero.
    #[inline]
    pub fn log(self) -> Option<u8> {
        if self.is_zero() {
            None
        } else {
            Some(TABLES.log[self.0 as usize])
        }
    }

    pub fn inv(self) -> Result<Gf, FieldError> {
        match self.log() {
            None => Err(FieldError::ZeroInverse),
            Some(l) => Ok(TABLES.exp[ORDER - l as usize]),
        }
    }

    /// `self^e`, where a negative exponent means a power of the inverse.
    ///
    /// `0^0` is taken to be 1.
    pub fn pow(self, e: i64) -> Result<Gf, FieldError> {
        match self.log() {
            None if e < 0 => Err(FieldError::ZeroInverse),
            None if e == 0 => Ok(Gf::ONE),
            None => Ok(Gf::ZERO),
            Some(l) => Ok(Gf::alpha_pow(l as i64 * e.rem_euclid(ORDER as i64))),
        }
    }
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u8> for Gf {
    type Error = FieldError;

    fn try_from(value: u8) -> Result<Gf, FieldError> {
        Gf::new(value)
    }
}

impl From<Gf> for u8 {
    fn from(g: Gf) -> u8 {
        g.0
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Add for Gf {
    type Output = Gf;
    #[inline]
    fn add(self, rhs: Gf) -> Gf {
        Gf(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl AddAssign for Gf {
    #[inline]
    fn add_assign(&mut self, rhs: Gf) {
        self.0 ^= rhs.0;
    }
}

// Characteristic 2: subtraction is addition.
#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Sub for Gf {
    type Output = Gf;
    #[inline]
    fn sub(self, rhs: Gf) -> Gf {
        Gf(self.0 ^ rhs.0)
    }
}

impl Mul for Gf {
    type Output = Gf;
    #[inline]
    fn mul(self, rhs: Gf) -> Gf {
        if self.is_zero() || rhs.is_zero() {
            return Gf::ZERO;
        }
        let l = TABLES.log[self.0 as usize] as usize + TABLES.log[rhs.0 as usize] as usize;
        TABLES.exp[l]
    }
}

impl MulAssign for Gf {
    #[inline]
    fn mul_assign(&mut self, rhs: Gf) {
        *self = *self * rhs;
    }
}

/// Exp/log lookup tables for the field.
///
/// `exp` holds `α^i` for `i` in `0..254`, two full periods, so that the sum
/// of two logarithms can index it without a reduction. `log[a]` is the
/// discrete log of nonzero `a`; `log[0]` is unused.
#[derive(Clone, PartialEq, Eq)]
pub struct GfTables {
    exp: [Gf; 2 * ORDER],
    log: [u8; 128],
}

impl GfTables {
    /// Generates the tables by repeated multiplication by `α`, reducing by
    /// [`PRIMITIVE_POLY`] whenever the degree reaches 7.
    pub const fn build() -> GfTables {
        let mut exp = [Gf(0); 2 * ORDER];
        let mut log = [0u8; 128];
        let mut x: u16 = 1;
        let mut i = 0;
        while i < 2 * ORDER {
            exp[i] = Gf(x as u8);
            if i < ORDER {
                log[x as usize] = i as u8;
            }
            x <<= 1;
            if x & 0x80 != 0 {
                x ^= PRIMITIVE_POLY;
            }
            i += 1;
        }
        GfTables { exp, log }
    }

    pub fn exp(&self) -> &[Gf; 2 * ORDER] {
        &self.exp
    }

    pub fn log(&self) -> &[u8; 128] {
        &self.log
    }
}

impl fmt::Debug for GfTables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GfTables").finish_non_exhaustive()
    }
}

static TABLES: GfTables = GfTables::build();

/// The process-wide field tables.
pub fn tables() -> &'static GfTables {
    &TABLES
}

/// A polynomial over GF(2^7), coefficients in ascending order of degree.
///
/// Trailing zero coefficients are trimmed on construction, so the last
/// stored coefficient is always nonzero and the zero polynomial has no
/// coefficients at all.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GfPoly {
    coeffs: Vec<Gf>,
}

impl GfPoly {
    pub fn new(mut coeffs: Vec<Gf>) -> GfPoly {
        while coeffs.last() == Some(&Gf::ZERO) {
            coeffs.pop();
        }
        GfPoly { coeffs }
    }

    pub fn zero() -> GfPoly {
        GfPoly { coeffs: Vec::new() }
    }

    pub fn one() -> GfPoly {
        GfPoly::constant(Gf::ONE)
    }

    pub fn constant(c: Gf) -> GfPoly {
        GfPoly::new(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: Gf, degree: usize) -> GfPoly {
        let mut coeffs = vec![Gf::ZERO; degree + 1];
        coeffs[degree] = c;
        GfPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Gf] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Gf {
        self.coeffs.get(i).copied().unwrap_or(Gf::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Gf) -> Gf {
        self.coeffs.iter().rev().fold(Gf::ZERO, |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: Gf) -> GfPoly {
        GfPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift(&self, n: usize) -> GfPoly {
        if self.is_zero() {
            return GfPoly::zero();
        }
        let mut coeffs = vec![Gf::ZERO; n];
        coeffs.extend_from_slice(&self.coeffs);
        GfPoly { coeffs }
    }

    /// Remainder modulo `x^n`.
    pub fn truncate(&self, n: usize) -> GfPoly {
        GfPoly::new(self.coeffs.iter().take(n).copied().collect())
    }

    /// Formal derivative. In characteristic 2 the even-degree terms vanish.
    pub fn derivative(&self) -> GfPoly {
        GfPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| if i % 2 == 1 { c } else { Gf::ZERO })
                .collect(),
        )
    }
}

impl fmt::Debug for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl Add for &GfPoly {
    type Output = GfPoly;

    fn add(self, rhs: &GfPoly) -> GfPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        GfPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Mul for &GfPoly {
    type Output = GfPoly;

    fn mul(self, rhs: &GfPoly) -> GfPoly {
        if self.is_zero() || rhs.is_zero() {
            return GfPoly::zero();
        }
        let mut out = vec![Gf::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        GfPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Shift-and-XOR multiply with reduction by the primitive polynomial,
    /// independent of the tables.
    fn slow_mul(a: u8, b: u8) -> u8 {
        let (mut a, mut b) = (a as u16, b as u16);
        let mut acc = 0u16;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & 0x80 != 0 {
                a ^= PRIMITIVE_POLY;
            }
        }
        acc as u8
    }

    fn all() -> impl Iterator<Item = Gf> {
        (0..128).map(Gf::from_u7)
    }

    fn g(v: u8) -> Gf {
        Gf::from_u7(v)
    }

    #[test]
    fn add_examples() {
        assert_eq!(g(114) + g(12), g(126));
        assert_eq!(g(97) + g(4), g(101));
        for x in all() {
            assert_eq!(x + Gf::ZERO, x);
            assert_eq!(x + x, Gf::ZERO);
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(g(2) * g(64), g(9));
        assert_eq!(slow_mul(2, 64), 9);
        for a in all() {
            assert_eq!(a * Gf::ONE, a);
            assert_eq!(a * Gf::ZERO, Gf::ZERO);
        }
    }

    #[test]
    fn table_mul_matches_slow_mul() {
        for a in all() {
            for b in all() {
                assert_eq!((a * b).value(), slow_mul(a.value(), b.value()), "{a} * {b}");
                assert_eq!(a * b, b * a);
            }
        }
    }

    #[test]
    fn distributive_over_full_grid() {
        for a in all() {
            for b in all() {
                for c in all() {
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
    }

    #[test]
    fn inverse() {
        assert_eq!(g(1).inv(), Ok(g(1)));
        assert_eq!(Gf::ZERO.inv(), Err(FieldError::ZeroInverse));
        let brute = (1..128u8).find(|&b| slow_mul(2, b) == 1).unwrap();
        assert_eq!(brute, 68);
        assert_eq!(g(2).inv(), Ok(g(68)));
        for a in all().skip(1) {
            let b = a.inv().unwrap();
            assert_eq!(a * b, Gf::ONE);
            assert_eq!(b.inv().unwrap(), a);
        }
    }

    #[test]
    fn pow() {
        assert_eq!(g(2).pow(7), Ok(g(9)));
        assert_eq!(Gf::ZERO.pow(-1), Err(FieldError::ZeroInverse));
        assert_eq!(Gf::ZERO.pow(3), Ok(Gf::ZERO));
        for a in all().skip(1) {
            assert_eq!(a.pow(0), Ok(Gf::ONE));
            // The multiplicative group has order 127.
            assert_eq!(a.pow(127), Ok(Gf::ONE));
            assert_eq!(a.pow(128), Ok(a));
            assert_eq!(a.pow(126), a.inv());
            assert_eq!(a.pow(126) == Ok(Gf::ONE), a == Gf::ONE);
            assert_eq!(a.pow(-1), a.inv());
            let mut acc = Gf::ONE;
            for e in 0..20 {
                assert_eq!(a.pow(e), Ok(acc));
                acc *= a;
            }
        }
    }

    #[test]
    fn alpha_is_primitive() {
        let mut x = Gf::ONE;
        for k in 1..=127 {
            x *= Gf::ALPHA;
            if x == Gf::ONE {
                assert_eq!(k, 127);
            }
        }
        assert_eq!(x, Gf::ONE);
    }

    #[test]
    fn table_invariants() {
        let t = tables();
        assert_eq!(t.exp()[0], Gf::ONE);
        assert_eq!(t.exp()[7], g(9));
        let mut seen = [false; 128];
        for e in &t.exp()[..ORDER] {
            assert!(!seen[e.value() as usize]);
            seen[e.value() as usize] = true;
        }
        assert!(!seen[0] && seen[1..].iter().all(|&s| s));
        for i in 0..2 * ORDER {
            assert_eq!(t.exp()[i], t.exp()[i % ORDER]);
            assert_eq!(t.log()[t.exp()[i].value() as usize] as usize, i % ORDER);
        }
        for a in 1..128u8 {
            assert_eq!(t.exp()[t.log()[a as usize] as usize].value(), a);
        }
        assert_eq!(GfTables::build(), *t);
    }

    #[test]
    fn range_check() {
        assert_eq!(Gf::new(127), Ok(g(127)));
        assert_eq!(Gf::new(128), Err(FieldError::OutOfRange(128)));
        assert_eq!(Gf::try_from(255u8), Err(FieldError::OutOfRange(255)));
    }

    #[test]
    fn poly_eval() {
        assert_eq!(GfPoly::zero().eval(g(5)), Gf::ZERO);
        assert_eq!(GfPoly::constant(g(33)).eval(g(5)), g(33));
        let p = GfPoly::new(vec![g(1), g(1)]);
        assert_eq!(p.eval(Gf::ONE), Gf::ZERO);

        // Horner against term-by-term powers.
        let q = GfPoly::new(vec![g(3), g(0), g(77), g(12), g(127)]);
        for x in all() {
            let direct = q
                .coeffs()
                .iter()
                .enumerate()
                .fold(Gf::ZERO, |acc, (i, &c)| acc + c * x.pow(i as i64).unwrap());
            assert_eq!(q.eval(x), direct);
        }
    }

    #[test]
    fn poly_mul() {
        let p = GfPoly::new(vec![g(3), g(9), g(100)]);
        assert_eq!(&p * &GfPoly::one(), p);
        assert!((&p * &GfPoly::zero()).is_zero());
        let x1 = GfPoly::new(vec![g(1), g(1)]);
        assert_eq!(&x1 * &x1, GfPoly::new(vec![g(1), g(0), g(1)]));
        let q = GfPoly::new(vec![g(7), g(1)]);
        assert_eq!((&p * &q).degree(), Some(3));
        for x in all() {
            assert_eq!((&p * &q).eval(x), p.eval(x) * q.eval(x));
        }
    }

    #[test]
    fn poly_normalizes() {
        let p = GfPoly::new(vec![g(1), g(0), g(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(GfPoly::new(vec![Gf::ZERO; 4]).degree(), None);
        assert_eq!(GfPoly::monomial(g(5), 3).coeffs(), &[g(0), g(0), g(0), g(5)]);
        assert_eq!(
            GfPoly::new(vec![g(1), g(2), g(3), g(4)]).derivative(),
            GfPoly::new(vec![g(2), g(0), g(4)])
        );
        assert_eq!(GfPoly::new(vec![g(1), g(2), g(3)]).truncate(2).degree(), Some(1));
    }
}
