//! Exact scalar fields: prime fields `F_p` and the rationals.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// An exact field. All arithmetic is exact; there is no floating point anywhere.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// 0 for the rationals, `p` for `F_p`.
    const CHARACTERISTIC: u64;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;

    /// A random element drawn from a small, field-appropriate range.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Candidate eigenvalues to try when splitting endomorphisms. For a finite
    /// field this is every element, so the search is exhaustive.
    fn eigen_candidates() -> Vec<Self>;

    /// `Some(n)` when the element is an integer that fits an `i64`.
    fn to_i64(&self) -> Option<i64>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`
    #[inline]
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.add(&a.mul(b));
    }

    /// `self -= a * b`
    #[inline]
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Residues modulo a prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: u32) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp(v % P)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P as u64;

    #[inline]
    fn zero() -> Self {
        Fp(0)
    }
    #[inline]
    fn one() -> Self {
        Fp::new(1)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 as u64 + rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
    #[inline]
    fn sub(&self, rhs: &Self) -> Self {
        let s = self.0 as u64 + P as u64 - rhs.0 as u64;
        Fp((s % P as u64) as u32)
    }
    #[inline]
    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
    #[inline]
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        self.pow(P as u64 - 2)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u32)
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp::new(rng.gen_range(0..P))
    }
    fn eigen_candidates() -> Vec<Self> {
        if P <= 4096 {
            (0..P).map(Fp::new).collect()
        } else {
            (0..4096).map(Fp::new).collect()
        }
    }
    fn to_i64(&self) -> Option<i64> {
        Some(self.0 as i64)
    }
    #[inline]
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.0 = ((self.0 as u64 + a.0 as u64 * b.0 as u64) % P as u64) as u32;
    }
    #[inline]
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = (a.0 as u64 * b.0 as u64) % P as u64;
        self.0 = ((self.0 as u64 + P as u64 - prod) % P as u64) as u32;
    }
}

/// Rational numbers with arbitrary-precision numerator and denominator,
/// always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero in Q");
        Rational(self.0.recip())
    }
    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Rational::from_i64(rng.gen_range(-9..=9))
    }
    fn eigen_candidates() -> Vec<Self> {
        // Small rationals p/q with |p| <= 24, 1 <= q <= 6, each listed once.
        let mut out = Vec::new();
        for q in 1..=6i64 {
            for p in -24..=24i64 {
                if num_integer::gcd(p, q) == 1 || (p == 0 && q == 1) {
                    out.push(Rational::new(p, q));
                }
            }
        }
        out
    }
    fn to_i64(&self) -> Option<i64> {
        if self.0.denom().is_one() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        self.0 += &a.0 * &b.0;
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        self.0 -= &a.0 * &b.0;
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

/// The default prime field used throughout.
pub type F101 = Fp<101>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_roundtrip() {
        for v in 1..101 {
            let x = F101::new(v);
            assert!(x.mul(&x.inv()).is_one());
        }
    }

    #[test]
    fn fp_negative_literals_wrap() {
        assert_eq!(F101::from_i64(-1), F101::new(100));
        assert_eq!(F101::from_i64(-203), F101::new(100));
    }

    #[test]
    fn rational_lowest_terms() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn add_sub_roundtrip() {
        let a = Rational::new(7, 3);
        let b = Rational::new(-5, 11);
        assert_eq!(a.add(&b).sub(&b), a);
        let x = F101::new(77);
        let y = F101::new(55);
        assert_eq!(x.add(&y).sub(&y), x);
    }

    #[test]
    fn small_field_pow() {
        let x = Fp::<7>::new(3);
        assert_eq!(x.pow(6), Fp::<7>::one());
    }
}
