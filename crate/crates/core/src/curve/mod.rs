//! Curves `c·y² = x³ + a₂x² + a₁x + a₀` and their group law over any
//! [`FieldElement`] type, plus the automorphism `ρ(P, Q) = (Q, Q − P)` of
//! `E × E`.

mod order;

use std::fmt;

use serde::Serialize;

use crate::algebra::{Rational, UniPoly};
use crate::numfield::{Automorphism, FieldElement};
use crate::Error;

pub use order::{is_probably_infinite_order, InfiniteOrderCertificate, ORDER_BOUND};

/// `c·y² = x³ + a₂x² + a₁x + a₀`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveModel {
    pub c: Rational,
    pub a2: Rational,
    pub a1: Rational,
    pub a0: Rational,
}

impl CurveModel {
    pub fn new(c: Rational, a2: Rational, a1: Rational, a0: Rational) -> Result<Self, Error> {
        if c.is_zero() {
            return Err(Error::SingularCurve("c = 0".into()));
        }
        let e = CurveModel { c, a2, a1, a0 };
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve(format!("{e}")));
        }
        Ok(e)
    }

    /// `y² = x³ + Ax + B`.
    pub fn weierstrass(a: Rational, b: Rational) -> Result<Self, Error> {
        Self::new(Rational::one(), Rational::zero(), a, b)
    }

    /// The model `c·y² = g(x)` for a cubic `g` (made monic by rescaling `c`).
    pub fn from_cubic(c: Rational, g: &UniPoly) -> Result<Self, Error> {
        if g.degree() != Some(3) {
            return Err(Error::InvalidInput(format!("not a cubic: {g}")));
        }
        let l = g.lead();
        Self::new(&c / &l, g.coeff(2) / &l, g.coeff(1) / &l, g.coeff(0) / &l)
    }

    /// `x³ + a₂x² + a₁x + a₀`.
    pub fn cubic(&self) -> UniPoly {
        UniPoly::new(vec![self.a0.clone(), self.a1.clone(), self.a2.clone(), Rational::one()])
    }

    /// Discriminant of the cubic.
    pub fn discriminant(&self) -> Rational {
        self.cubic().cubic_discriminant().expect("cubic")
    }

    /// Short Weierstrass coefficients `(A, B)` when `c = 1` and `a₂ = 0`.
    pub fn short_coefficients(&self) -> Option<(Rational, Rational)> {
        (self.c.is_one() && self.a2.is_zero()).then(|| (self.a1.clone(), self.a0.clone()))
    }

    /// The quadratic twist by δ, as the model `(c/δ)·y² = g(x)`.
    pub fn twist(&self, delta: &Rational) -> Result<Self, Error> {
        let inv = delta.inv().ok_or(Error::DivisionByZero)?;
        Self::new(&self.c * &inv, self.a2.clone(), self.a1.clone(), self.a0.clone())
    }

    /// `#E(F_p)` including the point at infinity, by a Legendre-symbol sum;
    /// `None` for `p < 5` or bad reduction of this model.
    pub fn count_points_mod(&self, p: u64) -> Option<u64> {
        if p < 5 {
            return None;
        }
        let red = |q: &Rational| crate::numfield::Fp::from_rational(q, p).map(|f| f.v as i128);
        let (c, a2, a1, a0) = (red(&self.c)?, red(&self.a2)?, red(&self.a1)?, red(&self.a0)?);
        let disc = red(&self.discriminant())?;
        if c == 0 || disc == 0 {
            return None;
        }
        let m = p as i128;
        let mut n = 1u64;
        for x in 0..m {
            let g = (((x + a2) % m * x + a1) % m * x + a0) % m;
            n += (1 + crate::algebra::integer::legendre(g * c, p)) as u64;
        }
        Some(n)
    }

    /// `g(x) = x³ + a₂x² + a₁x + a₀` in the field of `x`.
    pub fn rhs<F: FieldElement>(&self, x: &F) -> F {
        let t = x.add(&x.embed(&self.a2));
        let t = t.mul(x).add(&x.embed(&self.a1));
        t.mul(x).add(&x.embed(&self.a0))
    }

    pub fn contains<F: FieldElement>(&self, p: &Point<F>) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => y.square().mul(&y.embed(&self.c)) == self.rhs(x),
        }
    }

    /// An affine point, checked to lie on the curve.
    pub fn point<F: FieldElement>(&self, x: F, y: F) -> Result<Point<F>, Error> {
        let p = Point::Affine { x, y };
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::InvalidInput("point is not on the curve".into()))
        }
    }

    pub fn neg<F: FieldElement>(&self, p: &Point<F>) -> Point<F> {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: x.clone(), y: y.neg() },
        }
    }

    pub fn add<F: FieldElement>(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if y1.add(y2).is_zero() {
                return Point::Infinity;
            }
            // tangent: λ = g′(x)/(2cy)
            let three = x1.embed(&Rational::from(3));
            let two = x1.embed(&Rational::from(2));
            let num = three
                .mul(&x1.square())
                .add(&two.mul(&x1.embed(&self.a2)).mul(x1))
                .add(&x1.embed(&self.a1));
            let den = two.mul(&y1.embed(&self.c)).mul(y1);
            num.mul(&den.inv().expect("2cy ≠ 0"))
        } else {
            y2.sub(y1).mul(&x2.sub(x1).inv().expect("x₂ ≠ x₁"))
        };
        let x3 = lambda
            .square()
            .mul(&lambda.embed(&self.c))
            .sub(&x1.embed(&self.a2))
            .sub(x1)
            .sub(x2);
        let y3 = lambda.mul(&x1.sub(&x3)).sub(y1);
        let r = Point::Affine { x: x3, y: y3 };
        debug_assert!(self.contains(&r));
        r
    }

    pub fn double<F: FieldElement>(&self, p: &Point<F>) -> Point<F> {
        self.add(p, p)
    }

    pub fn sub<F: FieldElement>(&self, p: &Point<F>, q: &Point<F>) -> Point<F> {
        self.add(p, &self.neg(q))
    }

    /// `k·P` by double-and-add.
    pub fn mul<F: FieldElement>(&self, k: i64, p: &Point<F>) -> Point<F> {
        let base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = Point::Infinity;
        let mut run = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &run);
            }
            k >>= 1;
            if k > 0 {
                run = self.double(&run);
            }
        }
        acc
    }

    /// `ρ(P, Q) = (Q, Q − P)`.
    pub fn rho<F: FieldElement>(&self, pair: &PairPoint<F>) -> PairPoint<F> {
        PairPoint { first: pair.second.clone(), second: self.sub(&pair.second, &pair.first) }
    }

    /// `ρⁱ(P, Q)`.
    pub fn rho_pow<F: FieldElement>(&self, i: u32, pair: &PairPoint<F>) -> PairPoint<F> {
        (0..i % 6).fold(pair.clone(), |acc, _| self.rho(&acc))
    }

    /// Stabilizer of a pair in `<ρ>`.
    pub fn stabilizer_class<F: FieldElement>(&self, pair: &PairPoint<F>) -> Stabilizer {
        let mut cur = pair.clone();
        for period in 1..=6u32 {
            cur = self.rho(&cur);
            if cur == *pair {
                return match period {
                    1 => Stabilizer::Full,
                    2 => Stabilizer::Order3,
                    3 => Stabilizer::Order2,
                    _ => Stabilizer::Free,
                };
            }
        }
        unreachable!("ρ has order 6")
    }

    /// `Σ gᵏ(P)` over `k < ord(g)`.
    pub fn trace_under<F: FieldElement, G: Automorphism<F>>(&self, g: &G, p: &Point<F>) -> Point<F> {
        let mut acc = Point::Infinity;
        let mut cur = p.clone();
        for _ in 0..g.order() {
            acc = self.add(&acc, &cur);
            cur = cur.map(|c| g.apply(c));
        }
        acc
    }
}

impl fmt::Display for CurveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_one() {
            write!(f, "y^2 = {}", self.cubic())
        } else {
            write!(f, "{}*y^2 = {}", self.c, self.cubic())
        }
    }
}

/// A point of a curve over `F`; only one point at infinity is needed.
#[derive(Clone, Debug, PartialEq)]
pub enum Point<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F: FieldElement> Point<F> {
    pub fn affine(x: F, y: F) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }

    /// Apply a coordinate map, e.g. a field automorphism.
    pub fn map<G: FieldElement>(&self, f: impl Fn(&F) -> G) -> Point<G> {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine { x: f(x), y: f(y) },
        }
    }
}

/// `(P, Q) ∈ E × E`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairPoint<F> {
    pub first: Point<F>,
    pub second: Point<F>,
}

impl<F> PairPoint<F> {
    pub fn new(first: Point<F>, second: Point<F>) -> Self {
        PairPoint { first, second }
    }
}

/// Stabilizer of a pair in `<ρ> ≅ Z/6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stabilizer {
    /// Trivial stabilizer.
    Free,
    /// All of `<ρ>`: only `(O, O)`.
    Full,
    /// `<ρ²>`: pairs `(T, −T)` with `T` of order 3.
    Order3,
    /// `<ρ³>`: pairs of 2-torsion points.
    Order2,
}

impl fmt::Display for Stabilizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stabilizer::Free => "free",
            Stabilizer::Full => "full",
            Stabilizer::Order3 => "order3",
            Stabilizer::Order2 => "order2",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::numfield::Identity;

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::affine(q(x, 1), q(y, 1))
    }

    fn e31() -> CurveModel {
        CurveModel::weierstrass(q(0, 1), q(1, 1)).unwrap()
    }

    #[test]
    fn doubling_on_x3_plus_1() {
        let e = e31();
        assert_eq!(e.double(&pt(2, 3)), pt(0, 1));
        assert_eq!(e.add(&pt(2, 3), &Point::Infinity), pt(2, 3));
        assert_eq!(e.mul(6, &pt(2, 3)), Point::Infinity);
        assert_eq!(e.mul(-1, &pt(2, 3)), pt(2, -3));
    }

    #[test]
    fn two_torsion_on_160b1() {
        let e = CurveModel::new(q(1, 1), q(-4, 1), q(-1, 1), q(0, 1)).unwrap();
        assert_eq!(e.double(&pt(0, 0)), Point::Infinity);
    }

    #[test]
    fn general_model_matches_scaled() {
        let e = CurveModel::new(q(3, 1), q(0, 1), q(-12, 1), q(-8, 1)).unwrap();
        assert!(!e.contains(&pt(-2, 0)));
        let r = e.point(q(-1, 1), q(1, 1)).unwrap();
        let s = e.mul(3, &r);
        assert!(e.contains(&s));
        assert_eq!(e.sub(&e.add(&r, &s), &s), r);
    }

    #[test]
    fn singular_rejected() {
        assert!(CurveModel::weierstrass(q(0, 1), q(0, 1)).is_err());
        assert!(CurveModel::weierstrass(q(-3, 1), q(2, 1)).is_err());
    }

    #[test]
    fn stabilizers() {
        let e = e31();
        let o = Point::<Rational>::Infinity;
        let cls = |a: &Point<Rational>, b: &Point<Rational>| e.stabilizer_class(&PairPoint::new(a.clone(), b.clone()));
        assert_eq!(cls(&o, &o), Stabilizer::Full);
        assert_eq!(cls(&pt(0, 1), &pt(0, -1)), Stabilizer::Order3);
        assert_eq!(cls(&pt(-1, 0), &pt(-1, 0)), Stabilizer::Order2);
        assert_eq!(cls(&pt(2, 3), &pt(0, 1)), Stabilizer::Free);
    }

    #[test]
    fn rho_identities() {
        let e = e31();
        let pair = PairPoint::new(pt(2, 3), pt(-1, 0));
        assert_eq!(e.rho_pow(6, &pair), pair);
        let r3 = e.rho_pow(3, &pair);
        assert_eq!(r3, PairPoint::new(e.neg(&pair.first), e.neg(&pair.second)));
        let r2 = e.rho_pow(2, &pair);
        assert_eq!(r2, PairPoint::new(e.sub(&pair.second, &pair.first), e.neg(&pair.first)));
    }

    #[test]
    fn trace_of_rational_point() {
        let e = e31();
        assert_eq!(e.trace_under(&Identity, &pt(2, 3)), pt(2, 3));
        assert_eq!(e.trace_under(&Identity, &Point::<Rational>::Infinity), Point::Infinity);
    }
}
