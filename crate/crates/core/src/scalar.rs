//! Exact scalars.
//!
//! Every coefficient in this crate lives in the field `Q(w)`, where `w` is a
//! primitive cube root of unity (`w^2 = -1 - w`). Plain rationals are the
//! elements with vanishing `w` part, so rational input never pays more than
//! a couple of extra zero checks.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// Element `a + b w` of `Q(w)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    re: Rational,
    om: Rational,
}

impl Scalar {
    pub fn new(re: Rational, om: Rational) -> Self {
        Self { re, om }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from(Rational::from_integer(BigInt::from(n)))
    }

    /// The primitive cube root of unity `w`.
    pub fn omega() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn omega_part(&self) -> &Rational {
        &self.om
    }

    pub fn is_rational(&self) -> bool {
        self.om.is_zero()
    }

    /// Field norm `a^2 - ab + b^2`; zero iff the element is zero.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.om + &self.om * &self.om
    }

    /// Image under `w -> w^2`.
    pub fn conj(&self) -> Self {
        Self::new(&self.re - &self.om, -self.om.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(c.re / &n, c.om / n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the denominators of both components.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.om.denom())
    }

    /// Multiply by an integer known to clear all denominators, returning the
    /// two integer components.
    pub(crate) fn scaled_integers(&self, by: &BigInt) -> (BigInt, BigInt) {
        let a = &self.re * Rational::from_integer(by.clone());
        let b = &self.om * Rational::from_integer(by.clone());
        debug_assert!(a.is_integer() && b.is_integer());
        (a.to_integer(), b.to_integer())
    }
}

impl From<Rational> for Scalar {
    fn from(re: Rational) -> Self {
        Self { re, om: Rational::zero() }
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Self::from(Rational::from_integer(n))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::from(Rational::one())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.om + &rhs.om)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.om - &rhs.om)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_rational() && rhs.is_rational() {
            return Scalar::from(&self.re * &rhs.re);
        }
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w
        let bd = &self.om * &rhs.om;
        let re = &self.re * &rhs.re - &bd;
        let om = &self.re * &rhs.om + &self.om * &rhs.re - bd;
        Scalar::new(re, om)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        if self.is_rational() && rhs.is_rational() {
            return Scalar::from(&self.re / &rhs.re);
        }
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.om.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.om.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.om.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.om == -Rational::one() {
            f.write_str("-")?;
        } else if !self.om.is_one() {
            fmt_rational(&self.om, f)?;
        }
        f.write_str("w")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed scalar `{0}`")]
pub struct ParseScalarError(pub String);

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if num.is_empty() || den.is_empty() || den.starts_with(['+', '-']) {
        return None;
    }
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p`, `p/q`, and `a+bw` style tokens such as `w`, `-1-w`,
    /// `1/2+3/4w`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_owned());
        if s.is_empty() {
            return Err(err());
        }
        let Some(body) = s.strip_suffix('w') else {
            return parse_rational(s).map(Scalar::from).ok_or_else(err);
        };
        // split off the rational part at the last sign that is not leading
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, om) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re).ok_or_else(err)?
        };
        let om = match om {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            t => parse_rational(t.strip_prefix('+').unwrap_or(t)).ok_or_else(err)?,
        };
        Ok(Scalar::new(re, om))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = Scalar::omega();
        assert_eq!(w.pow(3), Scalar::one());
        assert_ne!(w, Scalar::one());
        assert_eq!(&(&Scalar::one() + &w) + &w.pow(2), Scalar::zero());
    }

    #[test]
    fn inverse_round_trips() {
        for t in ["3", "-2/7", "w", "1+w", "2/3-5w", "-1-w"] {
            let x = s(t);
            assert_eq!(&x * &x.inv().unwrap(), Scalar::one(), "{t}");
        }
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn token_parsing() {
        assert_eq!(s("-1-w"), Scalar::omega().pow(2));
        assert_eq!(s("4/6"), Scalar::from(Rational::new(2.into(), 3.into())));
        assert_eq!(s("-w"), -Scalar::omega());
        for bad in ["", "1/0", "x", "1/-2", "w1", "1+"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_parses_back() {
        for t in ["0", "-3", "5/2", "w", "-w", "1+w", "-1-w", "2/3-5/7w", "7w"] {
            assert_eq!(s(&s(t).to_string()), s(t));
        }
    }
}
