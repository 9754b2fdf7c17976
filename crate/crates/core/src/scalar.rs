//! Gaussian rationals `a + b i` with `a, b` exact rationals.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

pub type Rational = BigRational;

/// Builds a rational from an integer numerator and denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or `p` (denominator must be nonzero).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// An element of the field Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn complex(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRational { re: rat(re.0, re.1), im: rat(im.0, im.1) }
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2 = z * conj(z)`, a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRational { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Integer power, allowing negative exponents for nonzero values.
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            return self.inv().expect("negative power of zero").pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = GaussRational::one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }

    /// The value as a small signed integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        if !self.im.is_zero() || !self.re.is_integer() {
            return None;
        }
        i64::try_from(self.re.to_integer()).ok()
    }

    /// Wire form used in JSON reports: `{"re": "p/q", "im": "p/q"}`.
    pub fn to_wire(&self) -> (String, String) {
        (format_rational(&self.re), format_rational(&self.im))
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::from_rational(Rational::one())
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        GaussRational::from_rational(r)
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        GaussRational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: &GaussRational) -> GaussRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<GaussRational> for &GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational {
                self.$m(&rhs)
            }
        }
    };
}

impl Add<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::from_rational(&self.re * &rhs.re);
        }
        GaussRational { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Div<&GaussRational> for &GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &GaussRational) -> GaussRational {
        if rhs.im.is_zero() {
            assert!(!rhs.re.is_zero(), "division by zero");
            return GaussRational { re: &self.re / &rhs.re, im: &self.im / &rhs.re };
        }
        self * &rhs.inv().expect("division by zero")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for GaussRational {
    fn add_assign(&mut self, rhs: GaussRational) {
        *self += &rhs;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, rhs: &GaussRational) {
        *self = &*self * rhs;
    }
}

impl Sum for GaussRational {
    fn sum<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussRational> for GaussRational {
    fn sum<I: Iterator<Item = &'a GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GaussRational {
    fn product<I: Iterator<Item = GaussRational>>(iter: I) -> Self {
        iter.fold(GaussRational::one(), |acc, x| &acc * &x)
    }
}

fn fmt_rat(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Human-readable form: `3/4`, `-i`, `2i`, `1/2 - (3/2)i`.
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |q: &Rational| -> String {
            if q.is_one() {
                "i".to_string()
            } else if (-q).is_one() {
                "-i".to_string()
            } else if q.is_integer() {
                format!("{}i", q.numer())
            } else if q.is_negative() {
                format!("-({})i", fmt_rat(&-q))
            } else {
                format!("({})i", fmt_rat(q))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}", im_part(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}", fmt_rat(&self.re), sign, im_part(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussRational {
    type Err = Error;

    /// Accepts a plain rational only (`p/q` or `p`); complex values travel as
    /// `{"re", "im"}` pairs.
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_rational(s).map(GaussRational::from_rational)
    }
}

#[derive(Serialize, Deserialize)]
struct WireGauss {
    re: String,
    im: String,
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (re, im) = self.to_wire();
        WireGauss { re, im }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = WireGauss::deserialize(deserializer)?;
        let re = parse_rational(&w.re).map_err(serde::de::Error::custom)?;
        let im = parse_rational(&w.im).map_err(serde::de::Error::custom)?;
        Ok(GaussRational { re, im })
    }
}

/// Serde adapter for plain rationals as `"p/q"` strings.
pub mod rational_string {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}
