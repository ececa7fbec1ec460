//! Exact field elements: arbitrary-precision rationals or residues modulo an
//! odd prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// The ground field. `Prime(p)` always holds an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
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

impl Field {
    /// `F_p` for an odd prime `p` below 2^31.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 {
            return Err(AlgebraError::InvalidField(
                "characteristic 2 is not supported".into(),
            ));
        }
        if !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(AlgebraError::InvalidField(format!("{p} is too large")));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    /// Fails when `n` is zero in this field.
    pub fn require_invertible(self, n: u64, operation: &'static str) -> Result<()> {
        match self {
            Field::Prime(p) if n.is_multiple_of(p) => Err(AlgebraError::Characteristic {
                operation,
                divisor: n,
                characteristic: p,
            }),
            _ => Ok(()),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` as an element of this field.
    pub fn fraction(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Parses `"n"`, `"-n"` or `"p/q"`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let bad = || AlgebraError::ParseScalar(text.to_string());
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |n: &BigInt| -> Scalar {
                    let m = BigInt::from(p);
                    let r = ((n % &m) + &m) % &m;
                    Scalar::Modular {
                        value: r.try_into().expect("residue fits in u64"),
                        modulus: p,
                    }
                };
                reduce(&num).div(&reduce(&den))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = AlgebraError;

    /// Accepts `Q` or `GF(p)`.
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| AlgebraError::InvalidField(s.to_string()))?;
        let p = inner
            .trim()
            .parse::<u64>()
            .map_err(|_| AlgebraError::InvalidField(s.to_string()))?;
        Field::prime(p)
    }
}

/// An exact scalar. Rationals are kept reduced with a positive denominator,
/// residues in `0..p`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
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

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// `self` if `negative` is false, `-self` otherwise.
    pub fn signed(self, negative: bool) -> Scalar {
        if negative {
            -self
        } else {
            self
        }
    }

    /// Representative as a rational number, for fields of characteristic 0.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    fn combine(&self, other: &Scalar, op: impl Fn(u64, u64, u64) -> u64) -> (u64, u64) {
        match (self, other) {
            (
                Scalar::Modular { value: a, modulus: p },
                Scalar::Modular { value: b, modulus: q },
            ) if p == q => (op(*a, *b, *p), *p),
            _ => panic!("{}", AlgebraError::FieldMismatch),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (value, modulus) = self.combine(rhs, |a, b, p| (a + b) % p);
                Scalar::Modular { value, modulus }
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => {
                let (value, modulus) = self.combine(rhs, |a, b, p| (a + p - b) % p);
                Scalar::Modular { value, modulus }
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let (value, modulus) = self.combine(rhs, |a, b, p| a * b % p);
                Scalar::Modular { value, modulus }
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus,
            },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

macro_rules! owned_binop {
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
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Scalar {
    /// True for a negative rational; residues are never negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("2/4").unwrap(), q.fraction(1, 2).unwrap());
        assert_eq!(q.parse_scalar("3/-6").unwrap(), q.fraction(-1, 2).unwrap());
        assert_eq!(q.parse_scalar("-1/2").unwrap().to_string(), "-1/2");
        assert_eq!(q.parse_scalar("7").unwrap().to_string(), "7");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let half = f.fraction(1, 2).unwrap();
        assert_eq!(half, f.from_i64(3));
        assert_eq!(&half + &half, f.one());
        assert_eq!(-f.from_i64(1), f.from_i64(4));
        assert_eq!(f.parse_scalar("1/3").unwrap(), f.from_i64(2));
        assert_eq!(f.parse_scalar("-1").unwrap(), f.from_i64(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Field::Rational.zero().inv(), Err(AlgebraError::DivisionByZero));
        let f = Field::prime(7).unwrap();
        assert_eq!(f.fraction(1, 7), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn only_odd_primes() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(3).is_ok());
        assert_eq!("GF(5)".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert!("GF(4)".parse::<Field>().is_err());
    }

    #[test]
    fn characteristic_guard() {
        let f3 = Field::prime(3).unwrap();
        assert!(f3.require_invertible(2, "t").is_ok());
        assert!(f3.require_invertible(3, "t").is_err());
        assert!(Field::Rational.require_invertible(3, "t").is_ok());
    }
}
