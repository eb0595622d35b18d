//! Exact scalars: arbitrary-precision rationals in characteristic 0 and
//! residues modulo an odd prime otherwise.
//!
//! Every algebra carries a [`Characteristic`]; scalars remember theirs so that
//! mixing fields is caught. Arithmetic between scalars of different
//! characteristics is a logic error and panics; the algebra layer checks
//! characteristics before it ever combines coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Characteristic of the ground field: 0 (the rationals) or an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Characteristic(u32);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    /// Accepts 0 or an odd prime below 2^31.
    pub fn new(p: u64) -> Result<Self> {
        if p == 0 {
            return Ok(Self::ZERO);
        }
        if p == 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(Characteristic(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn ensure_same(self, other: Characteristic) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::CharacteristicMismatch(self, other))
        }
    }
}

impl TryFrom<u64> for Characteristic {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Characteristic::new(p)
    }
}

impl From<Characteristic> for u64 {
    fn from(c: Characteristic) -> u64 {
        c.0 as u64
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
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

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(ch: Characteristic) -> Scalar {
        Scalar::from_int(ch, 0)
    }

    pub fn one(ch: Characteristic) -> Scalar {
        Scalar::from_int(ch, 1)
    }

    pub fn from_int(ch: Characteristic, v: i64) -> Scalar {
        if ch.is_zero() {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = ch.0 as i64;
            Scalar::Modular { value: v.rem_euclid(p) as u32, modulus: ch.0 }
        }
    }

    /// `num/den` in the given characteristic; fails when `den` vanishes there.
    pub fn from_ratio(ch: Characteristic, num: BigInt, den: BigInt) -> Result<Scalar> {
        if ch.is_zero() {
            if den.is_zero() {
                return Err(Error::ZeroDenominator(ch));
            }
            return Ok(Scalar::Rational(BigRational::new(num, den)));
        }
        let p = BigInt::from(ch.0);
        let d = den.mod_floor(&p);
        if d.is_zero() {
            return Err(Error::ZeroDenominator(ch));
        }
        let n = num.mod_floor(&p);
        let n = Scalar::Modular { value: n.to_u32().unwrap(), modulus: ch.0 };
        let d = Scalar::Modular { value: d.to_u32().unwrap(), modulus: ch.0 };
        Ok(n / d)
    }

    pub fn frac(ch: Characteristic, num: i64, den: i64) -> Result<Scalar> {
        Scalar::from_ratio(ch, BigInt::from(num), BigInt::from(den))
    }

    /// One half; always defined since the characteristic is never 2.
    pub fn half(ch: Characteristic) -> Scalar {
        Scalar::frac(ch, 1, 2).expect("characteristic is never 2")
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            Scalar::Rational(_) => Characteristic::ZERO,
            Scalar::Modular { modulus, .. } => Characteristic(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_pow(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// Multiplies by `(-1)^k`.
    pub fn signed(self, negate: bool) -> Scalar {
        if negate {
            -self
        } else {
            self
        }
    }

    /// Numerator and denominator of the canonical representative. In
    /// characteristic p the numerator is the residue in `0..p` and the
    /// denominator is 1.
    pub fn numer_denom(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(r) => (r.numer().clone(), r.denom().clone()),
            Scalar::Modular { value, .. } => (BigInt::from(*value), BigInt::one()),
        }
    }

    /// The `"num/den"` form used by the JSON formats.
    pub fn to_fraction_string(&self) -> String {
        let (n, d) = self.numer_denom();
        format!("{n}/{d}")
    }

    /// Parses `"a"` or `"a/b"` with decimal integers.
    pub fn parse(ch: Characteristic, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::ParseScalar { text: text.to_string(), reason: reason.to_string() };
        let t = text.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num = BigInt::from_str(n).map_err(|_| bad("numerator is not a decimal integer"))?;
        let den = BigInt::from_str(d).map_err(|_| bad("denominator is not a decimal integer"))?;
        if den.is_negative() {
            return Err(bad("denominator must be positive"));
        }
        Scalar::from_ratio(ch, num, den)
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(self.characteristic(), other.characteristic(), "scalar arithmetic across characteristics");
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u64 + *b as u64) % *modulus as u64) as u32, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u64 * *b as u64) % *modulus as u64) as u32, modulus: *modulus }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            m => -&m,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::frac(Characteristic::ZERO, n, d).unwrap()
    }

    #[test]
    fn characteristic_validation() {
        assert!(Characteristic::new(0).is_ok());
        assert!(Characteristic::new(3).is_ok());
        assert!(Characteristic::new(5).is_ok());
        assert!(matches!(Characteristic::new(2), Err(Error::InvalidCharacteristic(2))));
        assert!(Characteristic::new(9).is_err());
        assert!(Characteristic::new(1).is_err());
    }

    #[test]
    fn rational_arithmetic() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(1, 2) * q(2, 3), q(1, 3));
        assert_eq!(q(1, 2) - q(1, 2), Scalar::zero(Characteristic::ZERO));
        assert_eq!(q(-3, 4).inv().unwrap(), q(-4, 3));
        assert!(Scalar::zero(Characteristic::ZERO).inv().is_none());
    }

    #[test]
    fn modular_arithmetic() {
        let five = Characteristic::new(5).unwrap();
        let half = Scalar::half(five);
        assert_eq!(half, Scalar::from_int(five, 3));
        assert_eq!(&half + &half, Scalar::one(five));
        assert_eq!(-Scalar::from_int(five, 2), Scalar::from_int(five, 3));
        assert_eq!(Scalar::from_int(five, 4).inv().unwrap(), Scalar::from_int(five, 4));
        assert!(Scalar::frac(five, 1, 10).is_err());
    }

    #[test]
    fn parse_and_print() {
        let ch = Characteristic::ZERO;
        assert_eq!(Scalar::parse(ch, "-1/2").unwrap(), q(-1, 2));
        assert_eq!(Scalar::parse(ch, "4/8").unwrap().to_fraction_string(), "1/2");
        assert_eq!(Scalar::parse(ch, "3").unwrap().to_fraction_string(), "3/1");
        assert!(Scalar::parse(ch, "1/0").is_err());
        assert!(Scalar::parse(ch, "x").is_err());
        let seven = Characteristic::new(7).unwrap();
        assert_eq!(Scalar::parse(seven, "-1/2").unwrap().to_fraction_string(), "3/1");
    }

    #[test]
    #[should_panic(expected = "across characteristics")]
    fn mixing_characteristics_panics() {
        let _ = q(1, 2) + Scalar::one(Characteristic::new(3).unwrap());
    }
}
