//! Rational and Gaussian rational scalars.
//!
//! `Rat` is a reduced fraction of big integers with positive denominator;
//! `num_rational` maintains exactly that invariant.  `Gauss` is a pair of
//! `Rat`s representing `re + im*i`, the field Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a nonnegative rational, if one exists.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer().sqrt();
    let den = x.denom().sqrt();
    if &(&num * &num) == x.numer() && &(&den * &den) == x.denom() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}

/// Parses "p", "-p", or "p/q" into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = |pos: usize, expected: &str| Error::Parse {
        position: pos,
        expected: expected.to_string(),
        found: s.to_string(),
    };
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| err(0, "integer numerator"))?;
        let den: BigInt = d.trim().parse().map_err(|_| err(n.len() + 1, "integer denominator"))?;
        if den.is_zero() {
            return Err(err(n.len() + 1, "nonzero denominator"));
        }
        Ok(Rat::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| err(0, "integer"))?;
        Ok(Rat::from_integer(num))
    }
}

/// An element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

pub fn gauss(re: i64, im: i64) -> Gauss {
    Gauss { re: rat_int(re), im: rat_int(im) }
}

/// The imaginary unit.
pub fn gauss_i() -> Gauss {
    gauss(0, 1)
}

impl Gauss {
    pub fn zero() -> Self {
        gauss(0, 0)
    }

    pub fn one() -> Self {
        gauss(1, 0)
    }

    pub fn from_rat(re: Rat) -> Self {
        Gauss { re, im: Rat::zero() }
    }

    pub fn from_parts(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|^2, a rational.
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm_sq();
        Gauss { re: &self.re / &n, im: -&self.im / &n }
    }

    /// Exact square root in Q(i), if one exists.
    ///
    /// For `z = x + yi` a root needs `|z|` rational, then `re` of the root is
    /// `sqrt((x + |z|)/2)` and the imaginary part follows.
    pub fn sqrt(&self) -> Option<Gauss> {
        if self.is_zero() {
            return Some(Gauss::zero());
        }
        let m = rat_sqrt(&self.norm_sq())?;
        let half = rat(1, 2);
        let re2 = (&self.re + &m) * &half;
        if let Some(x) = rat_sqrt(&re2) {
            if !x.is_zero() {
                let y = &self.im / (&x * rat_int(2));
                let cand = Gauss { re: x, im: y };
                if &(&cand * &cand) == self {
                    return Some(cand);
                }
            }
        }
        // Pure imaginary root: z is a negative real.
        let im2 = (-&self.re + &m) * &half;
        if let Some(y) = rat_sqrt(&im2) {
            let cand = Gauss { re: Rat::zero(), im: y };
            if &(&cand * &cand) == self {
                return Some(cand);
            }
        }
        None
    }

    /// Polar split `z = r * u` with `r` rational positive and `|u| = 1`,
    /// available when `|z|` is rational.
    pub fn polar(&self) -> Option<(Rat, Gauss)> {
        if self.is_zero() {
            return None;
        }
        let r = rat_sqrt(&self.norm_sq())?;
        let u = self * &Gauss::from_rat(r.clone()).inv();
        Some((r, u))
    }
}

impl fmt::Debug for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if (-&self.im).is_one() {
                return write!(f, "-i");
            }
            return write!(f, "{}i", self.im);
        }
        let (sign, abs_im) = if self.im.is_negative() { ("-", -&self.im) } else { ("+", self.im.clone()) };
        if abs_im.is_one() {
            write!(f, "{}{}i", self.re, sign)
        } else {
            write!(f, "{}{}{}i", self.re, sign, abs_im)
        }
    }
}

/// Parses Gaussian rational literals: "3", "-1/2", "i", "2i", "3+2i",
/// "3/5-4/5i", "-i".
pub fn parse_gauss(s: &str) -> Result<Gauss> {
    let t = s.trim();
    let err = |expected: &str| Error::Parse {
        position: 0,
        expected: expected.to_string(),
        found: s.to_string(),
    };
    if t.is_empty() {
        return Err(err("scalar literal"));
    }
    if let Some(body) = t.strip_suffix('i') {
        // Either pure imaginary or re+im i; split at the last +/- that is not
        // the leading sign and not inside a fraction.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if bytes[k] == b'+' || bytes[k] == b'-' {
                if bytes[k - 1] == b'/' {
                    continue;
                }
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re = parse_rat(&body[..k])?;
                let imtxt = &body[k..];
                let im = match imtxt {
                    "+" => Rat::one(),
                    "-" => -Rat::one(),
                    _ => parse_rat(imtxt)?,
                };
                Ok(Gauss { re, im })
            }
            None => {
                let im = match body {
                    "" => Rat::one(),
                    "-" => -Rat::one(),
                    "+" => Rat::one(),
                    _ => parse_rat(body)?,
                };
                Ok(Gauss { re: Rat::zero(), im })
            }
        }
    } else {
        Ok(Gauss::from_rat(parse_rat(t)?))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b Gauss> for &'a Gauss {
            type Output = Gauss;
            fn $method(self, rhs: &'b Gauss) -> Gauss {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait<Gauss> for Gauss {
            type Output = Gauss;
            fn $method(self, rhs: Gauss) -> Gauss {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b Gauss> for Gauss {
            type Output = Gauss;
            fn $method(self, rhs: &'b Gauss) -> Gauss {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Gauss> for &'a Gauss {
            type Output = Gauss;
            fn $method(self, rhs: Gauss) -> Gauss {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Gauss { re: &a.re + &b.re, im: &a.im + &b.im });
forward_binop!(Sub, sub, |a, b| Gauss { re: &a.re - &b.re, im: &a.im - &b.im });
forward_binop!(Mul, mul, |a, b| Gauss {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});
forward_binop!(Div, div, |a, b| a * &b.inv());

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -&self.re, im: -&self.im }
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, rhs: &Gauss) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Gauss> for Gauss {
    fn sub_assign(&mut self, rhs: &Gauss) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Gauss> for Gauss {
    fn mul_assign(&mut self, rhs: &Gauss) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_field_ops() {
        let z = gauss(3, 4);
        assert_eq!(z.norm_sq(), rat_int(25));
        assert_eq!(&z * &z.inv(), Gauss::one());
        assert_eq!(z.conj().im, rat_int(-4));
    }

    #[test]
    fn sqrt_of_units() {
        // (3/5 + 4/5 i) is the square of (2/sqrt5 ...) which is irrational,
        // but (-7/25 + 24/25 i) = (3/5 + 4/5 i)^2 has an exact root.
        let u = Gauss::from_parts(rat(3, 5), rat(4, 5));
        let sq = &u * &u;
        let r = sq.sqrt().unwrap();
        assert!(r == u || r == Gauss::zero() - u.clone());
        assert_eq!(gauss(-1, 0).sqrt().unwrap(), gauss_i());
        assert_eq!(gauss(-4, 0).sqrt().unwrap(), gauss(0, 2));
        assert!(gauss(2, 0).sqrt().is_none());
        assert!(gauss_i().sqrt().is_none());
    }

    #[test]
    fn rat_sqrt_cases() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-1, 1)), None);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "3", "-1/2", "i", "-i", "2i", "3+2i", "3/5-4/5i", "-2-i"] {
            let z = parse_gauss(s).unwrap();
            let again = parse_gauss(&z.to_string()).unwrap();
            assert_eq!(z, again, "{s}");
        }
        assert!(parse_gauss("1//2").is_err());
        assert!(parse_gauss("").is_err());
    }
}
