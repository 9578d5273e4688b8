//! Exact elements of the real quadratic field Q(√3).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The number `a + b√3` with rational `a` and `b`.
///
/// `BigRational` keeps both parts reduced with positive denominators, so
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadNum {
    a: BigRational,
    b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadNum {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadNum { a, b }
    }

    /// `an/ad + (bn/bd)√3`.
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        QuadNum::new(rat(an, ad), rat(bn, bd))
    }

    pub fn int(n: i64) -> Self {
        QuadNum::new(rat(n, 1), BigRational::zero())
    }

    pub fn rational(n: i64, d: i64) -> Self {
        QuadNum::new(rat(n, d), BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        QuadNum::new(r, BigRational::zero())
    }

    pub fn sqrt3() -> Self {
        QuadNum::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        QuadNum::default()
    }

    pub fn one() -> Self {
        QuadNum::int(1)
    }

    /// Rational part.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of √3.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the √3 part vanishes.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Galois conjugate `a - b√3`.
    pub fn conjugate(&self) -> Self {
        QuadNum::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 3b²`; zero only for zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(3.into()) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InvalidOperand("division by zero in Q(√3)".into()));
        }
        let n = self.norm();
        Ok(QuadNum::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, rhs: &QuadNum) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact sign of the real number `a + b√3`.
    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a² with 3b²
        let a2 = &self.a * &self.a;
        let b2 = BigRational::from_integer(3.into()) * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    /// Greatest integer `n` with `n <= self`.
    pub fn floor(&self) -> BigInt {
        let guess = self.to_f64().floor();
        let mut n = if guess.is_finite() {
            BigInt::from(guess as i128)
        } else {
            // fall back to a crude rational bound
            self.a.floor().to_integer() + (&self.b * BigRational::from_integer(2.into())).floor().to_integer()
        };
        loop {
            let nq = QuadNum::from_rational(BigRational::from_integer(n.clone()));
            if *self < nq {
                n -= 1;
                continue;
            }
            let next = QuadNum::from_rational(BigRational::from_integer(&n + 1));
            if *self >= next {
                n += 1;
                continue;
            }
            return n;
        }
    }

    /// Nearest integer, ties rounded down.
    pub fn round(&self) -> BigInt {
        -(&QuadNum::rational(1, 2) - self).floor()
    }
}

fn sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        QuadNum::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        let three = BigRational::from_integer(3.into());
        QuadNum::new(
            &self.a * &rhs.a + three * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: QuadNum) -> QuadNum {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $m(self, rhs: &QuadNum) -> QuadNum {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::int(n)
    }
}

impl fmt::Display for QuadNum {
    /// Renders as `p/q+r/s*rt3`, dropping zero parts and unit denominators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*rt3", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*rt3", self.a, -self.b.clone())
                } else {
                    write!(f, "{}+{}*rt3", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses a `*rt3` term body, e.g. `1/2*rt3`, `-rt3`, `rt3`.
fn parse_surd(s: &str) -> Option<BigRational> {
    let body = s.trim().strip_suffix("rt3")?.trim();
    let body = body.strip_suffix('*').unwrap_or(body).trim();
    match body {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(body),
    }
}

impl FromStr for QuadNum {
    type Err = Error;

    /// Accepts `p/q`, `r/s*rt3`, and `p/q+r/s*rt3` (or with `-`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse `{s}` as an element of Q(rt3)"));
        let t = s.trim();
        if !t.ends_with("rt3") {
            return parse_rational(t).map(QuadNum::from_rational).ok_or_else(bad);
        }
        // split at the last sign that is not the leading one
        let split = t
            .char_indices()
            .skip(1)
            .filter(|&(i, c)| (c == '+' || c == '-') && !t[..i].ends_with('/') && !t[..i].ends_with('*'))
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => {
                let a = parse_rational(&t[..i]).ok_or_else(bad)?;
                let b = parse_surd(&t[i..]).ok_or_else(bad)?;
                Ok(QuadNum::new(a, b))
            }
            None => Ok(QuadNum::new(BigRational::zero(), parse_surd(t).ok_or_else(bad)?)),
        }
    }
}
