//! Arithmetic in `Z_{p^t}`, Lee weights and exact rational scalars.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The ring descriptor `q = p^t` with `p` prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus {
    p: u64,
    t: u32,
    q: u64,
}

impl Modulus {
    pub fn new(p: u64, t: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 {
            return Err(Error::ZeroExponent);
        }
        let q = p.checked_pow(t).ok_or(Error::ModulusOverflow { p, t })?;
        Ok(Modulus { p, t, q })
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    /// Factors `q` as a prime power; composite moduli with two distinct
    /// prime factors are rejected.
    pub fn from_order(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let mut p = 2u64;
        while p.saturating_mul(p) <= q && !q.is_multiple_of(p) {
            p += 1;
        }
        if !q.is_multiple_of(p) {
            p = q;
        }
        let mut rest = q;
        let mut t = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            t += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        Ok(Modulus { p, t, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `p^i`, saturating at `q` for `i >= t`.
    pub fn p_pow(&self, i: u32) -> u64 {
        if i >= self.t {
            self.q
        } else {
            self.p.pow(i)
        }
    }

    /// The residue field `Z_p` of this ring.
    pub fn residue_field(&self) -> Modulus {
        Modulus { p: self.p, t: 1, q: self.p }
    }

    pub fn reduce(&self, v: u64) -> u64 {
        v % self.q
    }

    pub fn reduce_signed(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.q as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    /// `min(a, q - a)` for a reduced value `a`.
    pub fn lee_weight(&self, a: u64) -> u64 {
        let a = a % self.q;
        a.min(self.q - a)
    }

    /// `M_L(q) = floor(q/2)`.
    pub fn max_lee_weight(&self) -> u64 {
        self.q / 2
    }

    /// Average Lee weight over the `q - 1` nonzero residues.
    pub fn mean_nonzero_lee_weight(&self) -> Rational {
        let q = self.q as i64;
        if q % 2 == 0 {
            Rational::new(q * q, 4 * (q - 1))
        } else {
            Rational::new(q + 1, 4)
        }
    }

    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    pub fn valuation(&self, a: u64) -> Valuation {
        let mut a = a % self.q;
        if a == 0 {
            return Valuation::Infinite;
        }
        let mut v = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        Valuation::Finite(v)
    }

    /// Inverse of a unit modulo `q`.
    pub fn inverse(&self, a: u64) -> Option<u64> {
        let e = (a as i128).extended_gcd(&(self.q as i128));
        if e.gcd != 1 {
            return None;
        }
        Some(e.x.rem_euclid(self.q as i128) as u64)
    }

    /// Lee weight of every residue, indexed by value.
    pub fn lee_table(&self) -> Vec<u32> {
        (0..self.q).map(|a| self.lee_weight(a) as u32).collect()
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t == 1 {
            write!(f, "Z_{}", self.p)
        } else {
            write!(f, "Z_{}^{}", self.p, self.t)
        }
    }
}

/// p-adic valuation of a residue; zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// An element of `Z_q` carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: u64, modulus: Modulus) -> Self {
        Residue { value: modulus.reduce(value), modulus }
    }

    pub fn from_signed(value: i64, modulus: Modulus) -> Self {
        Residue { value: modulus.reduce_signed(value), modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn check(&self, other: &Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus.q(), right: other.modulus.q() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(Residue { value: self.modulus.add(self.value, other.value), modulus: self.modulus })
    }

    pub fn negate(&self) -> Residue {
        Residue { value: self.modulus.neg(self.value), modulus: self.modulus }
    }

    pub fn multiply(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(Residue { value: self.modulus.mul(self.value, other.value), modulus: self.modulus })
    }

    pub fn is_unit(&self) -> bool {
        self.modulus.is_unit(self.value)
    }

    pub fn p_adic_valuation(&self) -> Valuation {
        self.modulus.valuation(self.value)
    }

    pub fn lee_weight(&self) -> u64 {
        self.modulus.lee_weight(self.value)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Floor as a machine integer; bound values at any realistic parameter
    /// size are far below `i64::MAX`.
    pub fn floor_i64(&self) -> i64 {
        self.floor().to_i64().expect("floor exceeds i64")
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn recip(&self) -> Rational {
        Rational(self.0.recip())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<i64> for Rational {
            type Output = Rational;
            fn $m(self, rhs: i64) -> Rational {
                Rational(self.0.$m(BigRational::from_integer(BigInt::from(rhs))))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}
