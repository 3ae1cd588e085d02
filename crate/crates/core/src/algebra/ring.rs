//! Minimal commutative-ring interface, enough to state closed-form
//! discriminants once for scalars, univariate and multivariate polynomials.

use super::mpoly::MultiPoly;
use super::rational::Rational;
use super::upoly::UniPoly;

pub trait Ring: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn scale_i64(&self, k: i64) -> Self {
        self.mul(&Self::from_i64(k))
    }

    fn square(&self) -> Self {
        self.mul(self)
    }

    fn cube(&self) -> Self {
        self.mul(self).mul(self)
    }
}

/// `18abcd − 4b³d + b²c² − 4ac³ − 27a²d²` for `ax³ + bx² + cx + d`.
pub fn cubic_discriminant_in<R: Ring>(a: &R, b: &R, c: &R, d: &R) -> R {
    let t1 = a.mul(b).mul(c).mul(d).scale_i64(18);
    let t2 = b.cube().mul(d).scale_i64(4);
    let t3 = b.square().mul(&c.square());
    let t4 = a.mul(&c.cube()).scale_i64(4);
    let t5 = a.square().mul(&d.square()).scale_i64(27);
    t1.sub(&t2).add(&t3).sub(&t4).sub(&t5)
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::constant(Rational::one())
    }
    fn from_i64(n: i64) -> Self {
        UniPoly::constant(Rational::from(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(Rational::from(n))
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
}
