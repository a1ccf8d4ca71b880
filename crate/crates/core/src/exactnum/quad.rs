//! The quadratic extensions Q(sqrt2) and Q(i, sqrt2).
//!
//! The built-in realification table contains two basis changes with sqrt(2)
//! scalings; all products that survive into structure constants are rational
//! again, which the realification code asserts.  These types keep that
//! computation exact instead of special-casing the offending rows.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::scalar::{rat_int, Gauss, Rat};

/// `a + b*sqrt(2)` with `a, b` rational.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadRat {
    pub a: Rat,
    pub b: Rat,
}

impl QuadRat {
    pub fn zero() -> Self {
        QuadRat { a: Rat::zero(), b: Rat::zero() }
    }

    pub fn from_rat(a: Rat) -> Self {
        QuadRat { a, b: Rat::zero() }
    }

    pub fn sqrt2() -> Self {
        QuadRat { a: Rat::zero(), b: rat_int(1) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn inv(&self) -> Self {
        // (a + b r)^-1 = (a - b r)/(a^2 - 2 b^2); the denominator vanishes
        // only at zero since sqrt2 is irrational.
        let den = &self.a * &self.a - rat_int(2) * &self.b * &self.b;
        assert!(!den.is_zero(), "division by zero in Q(sqrt2)");
        QuadRat { a: &self.a / &den, b: -&self.b / &den }
    }
}

impl Add for &QuadRat {
    type Output = QuadRat;
    fn add(self, rhs: &QuadRat) -> QuadRat {
        QuadRat { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &QuadRat {
    type Output = QuadRat;
    fn sub(self, rhs: &QuadRat) -> QuadRat {
        QuadRat { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &QuadRat {
    type Output = QuadRat;
    fn mul(self, rhs: &QuadRat) -> QuadRat {
        QuadRat {
            a: &self.a * &rhs.a + rat_int(2) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        QuadRat { a: -&self.a, b: -&self.b }
    }
}

/// `g + h*sqrt(2)` with `g, h` Gaussian rational, i.e. Q(i, sqrt2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadGauss {
    pub g: Gauss,
    pub h: Gauss,
}

impl QuadGauss {
    pub fn zero() -> Self {
        QuadGauss { g: Gauss::zero(), h: Gauss::zero() }
    }

    pub fn one() -> Self {
        QuadGauss { g: Gauss::one(), h: Gauss::zero() }
    }

    pub fn from_gauss(g: Gauss) -> Self {
        QuadGauss { g, h: Gauss::zero() }
    }

    pub fn sqrt2_times(h: Gauss) -> Self {
        QuadGauss { g: Gauss::zero(), h }
    }

    pub fn is_zero(&self) -> bool {
        self.g.is_zero() && self.h.is_zero()
    }

    pub fn is_gauss(&self) -> bool {
        self.h.is_zero()
    }

    /// Complex conjugation; fixes sqrt2.
    pub fn conj(&self) -> Self {
        QuadGauss { g: self.g.conj(), h: self.h.conj() }
    }

    pub fn re(&self) -> QuadRat {
        QuadRat { a: self.g.re.clone(), b: self.h.re.clone() }
    }

    pub fn im(&self) -> QuadRat {
        QuadRat { a: self.g.im.clone(), b: self.h.im.clone() }
    }

    pub fn inv(&self) -> Self {
        let den = &(&self.g * &self.g) - &(&Gauss::from_rat(rat_int(2)) * &(&self.h * &self.h));
        assert!(!den.is_zero(), "division by zero in Q(i,sqrt2)");
        let d = den.inv();
        QuadGauss { g: &self.g * &d, h: -(&self.h * &d) }
    }
}

impl Add for &QuadGauss {
    type Output = QuadGauss;
    fn add(self, rhs: &QuadGauss) -> QuadGauss {
        QuadGauss { g: &self.g + &rhs.g, h: &self.h + &rhs.h }
    }
}

impl Sub for &QuadGauss {
    type Output = QuadGauss;
    fn sub(self, rhs: &QuadGauss) -> QuadGauss {
        QuadGauss { g: &self.g - &rhs.g, h: &self.h - &rhs.h }
    }
}

impl Mul for &QuadGauss {
    type Output = QuadGauss;
    fn mul(self, rhs: &QuadGauss) -> QuadGauss {
        let two = Gauss::from_rat(rat_int(2));
        QuadGauss {
            g: &(&self.g * &rhs.g) + &(&two * &(&self.h * &rhs.h)),
            h: &(&self.g * &rhs.h) + &(&self.h * &rhs.g),
        }
    }
}

impl Neg for &QuadGauss {
    type Output = QuadGauss;
    fn neg(self) -> QuadGauss {
        QuadGauss { g: -&self.g, h: -&self.h }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::scalar::{gauss, rat};

    #[test]
    fn quad_rat_field() {
        let x = QuadRat { a: rat(1, 2), b: rat(3, 1) };
        let prod = &x * &x.inv();
        assert_eq!(prod, QuadRat::from_rat(rat_int(1)));
        // (1 + sqrt2)(1 - sqrt2) = -1
        let p = QuadRat { a: rat_int(1), b: rat_int(1) };
        let m = QuadRat { a: rat_int(1), b: rat_int(-1) };
        assert_eq!(&p * &m, QuadRat::from_rat(rat_int(-1)));
    }

    #[test]
    fn quad_gauss_field() {
        let z = QuadGauss { g: gauss(1, 1), h: gauss(0, 2) };
        assert_eq!(&z * &z.inv(), QuadGauss::one());
        // (sqrt2/2)^2 = 1/2
        let half_rt2 = QuadGauss::sqrt2_times(Gauss::from_rat(rat(1, 2)));
        let sq = &half_rt2 * &half_rt2;
        assert_eq!(sq, QuadGauss::from_gauss(Gauss::from_rat(rat(1, 2))));
    }
}
