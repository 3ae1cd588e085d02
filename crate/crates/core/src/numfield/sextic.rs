use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::integer::squarefree_part_int;
use crate::algebra::Rational;
use crate::Error;

use super::{Automorphism, CubicElement, CyclicCubicField, FieldElement, Fp, ResidueMap};

/// `K6 = K3(√δ)` with δ a square-free integer other than 0 and 1. Since
/// `[K3:Q]` is odd, δ stays a non-square in `K3` and `[K6:Q] = 6`.
#[derive(Clone)]
pub struct SexticField {
    cubic: Arc<CyclicCubicField>,
    delta: BigInt,
    delta_q: Rational,
}

impl fmt::Debug for SexticField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(√{})", self.cubic, self.delta)
    }
}

impl SexticField {
    pub fn new(cubic: &Arc<CyclicCubicField>, delta: impl Into<BigInt>) -> Result<Arc<Self>, Error> {
        let delta = delta.into();
        if delta == BigInt::from(0) || delta.is_one() || squarefree_part_int(&delta)? != delta {
            return Err(Error::BadDelta { delta });
        }
        let delta_q = Rational::from(&delta);
        Ok(Arc::new(SexticField { cubic: cubic.clone(), delta, delta_q }))
    }

    pub fn cubic(&self) -> &Arc<CyclicCubicField> {
        &self.cubic
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    /// ϱ(a + b√δ) = σ(a) − σ(b)√δ, a generator of order 6.
    pub fn rho(&self, e: &SexticElement) -> SexticElement {
        SexticElement { field: e.field.clone(), a: e.a.sigma(), b: e.b.sigma().neg() }
    }

    fn same(&self, other: &SexticField) -> bool {
        std::ptr::eq(self, other) || (self.delta == other.delta && self.cubic.f() == other.cubic.f())
    }
}

/// `a + b√δ` with `a, b ∈ K3`.
#[derive(Clone)]
pub struct SexticElement {
    field: Arc<SexticField>,
    a: CubicElement,
    b: CubicElement,
}

impl SexticElement {
    pub fn new(field: &Arc<SexticField>, a: CubicElement, b: CubicElement) -> Self {
        SexticElement { field: field.clone(), a, b }
    }

    pub fn from_cubic(field: &Arc<SexticField>, a: CubicElement) -> Self {
        let b = a.zero_like();
        Self::new(field, a, b)
    }

    pub fn from_rational(field: &Arc<SexticField>, q: &Rational) -> Self {
        Self::from_cubic(field, CubicElement::from_rational(&field.cubic, q))
    }

    /// √δ itself.
    pub fn sqrt_delta(field: &Arc<SexticField>) -> Self {
        let one = CubicElement::from_rational(&field.cubic, &Rational::one());
        Self::new(field, one.zero_like(), one)
    }

    pub fn field(&self) -> &Arc<SexticField> {
        &self.field
    }

    /// The `K3` part `a`.
    pub fn a(&self) -> &CubicElement {
        &self.a
    }

    /// The `√δ` coefficient `b`.
    pub fn b(&self) -> &CubicElement {
        &self.b
    }

    pub fn rho(&self) -> Self {
        self.field.rho(self)
    }

    /// Relative norm to `K3`: `a² − δb²`.
    pub fn norm_to_cubic(&self) -> CubicElement {
        self.a.mul(&self.a).sub(&self.b.mul(&self.b).scale(&self.field.delta_q))
    }

    pub fn in_cubic(&self) -> bool {
        self.b.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.field, self.a.scale(k), self.b.scale(k))
    }
}

impl fmt::Debug for SexticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})√{}", self.a, self.b, self.field.delta)
    }
}

impl PartialEq for SexticElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.field.same(&other.field), "elements of different fields");
        self.a == other.a && self.b == other.b
    }
}

impl FieldElement for SexticElement {
    fn zero_like(&self) -> Self {
        Self::new(&self.field, self.a.zero_like(), self.a.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::new(&self.field, self.a.one_like(), self.a.zero_like())
    }
    fn embed(&self, q: &Rational) -> Self {
        Self::new(&self.field, self.a.embed(q), self.a.zero_like())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.field, self.a.add(&rhs.a), self.b.add(&rhs.b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.field, self.a.sub(&rhs.a), self.b.sub(&rhs.b))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.b.is_zero() && rhs.b.is_zero() {
            return Self::new(&self.field, self.a.mul(&rhs.a), self.a.zero_like());
        }
        let ac = self.a.mul(&rhs.a);
        let bd = self.b.mul(&rhs.b).scale(&self.field.delta_q);
        let ad = self.a.mul(&rhs.b);
        let bc = self.b.mul(&rhs.a);
        Self::new(&self.field, ac.add(&bd), ad.add(&bc))
    }
    fn neg(&self) -> Self {
        Self::new(&self.field, self.a.neg(), self.b.neg())
    }
    fn inv(&self) -> Option<Self> {
        if self.b.is_zero() {
            return self.a.inv().map(|ai| Self::new(&self.field, ai, self.a.zero_like()));
        }
        let n = self.norm_to_cubic().inv()?;
        Some(Self::new(&self.field, self.a.mul(&n), self.b.mul(&n).neg()))
    }
    fn height_bits(&self) -> u64 {
        self.a.height_bits().max(self.b.height_bits())
    }
    fn residue_map(&self, p: u64) -> Option<ResidueMap> {
        let mut m = self.a.residue_map(p)?;
        let d = Fp::from_rational(&self.field.delta_q, p)?;
        if d.v == 0 {
            return None;
        }
        m.sqrt_delta = Some(d.sqrt()?.v);
        Some(m)
    }
    fn reduce(&self, map: &ResidueMap) -> Option<Fp> {
        let s = Fp { v: map.sqrt_delta?, p: map.p };
        Some(self.a.reduce(map)?.add(&self.b.reduce(map)?.mul(&s)))
    }
}

/// ϱ, acting on the element's own field.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rho;

impl Automorphism<SexticElement> for Rho {
    fn apply(&self, x: &SexticElement) -> SexticElement {
        x.rho()
    }
    fn order(&self) -> u32 {
        6
    }
}

/// ϱᵏ.
#[derive(Clone, Copy, Debug)]
pub struct RhoPower(pub u32);

impl Automorphism<SexticElement> for RhoPower {
    fn apply(&self, x: &SexticElement) -> SexticElement {
        (0..self.0 % 6).fold(x.clone(), |acc, _| acc.rho())
    }
    fn order(&self) -> u32 {
        let k = self.0 % 6;
        6 / num_integer::gcd(k, 6).max(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, UniPoly};

    #[test]
    fn rho_has_order_six() {
        let k = CyclicCubicField::new(&UniPoly::from_ints(&[1, -4, 1, 1])).unwrap();
        let l = SexticField::new(&k, -26).unwrap();
        let a = CubicElement::alpha(&k);
        let x = SexticElement::new(&l, a.add(&a.embed(&q(3, 2))), a.mul(&a).scale(&q(-1, 5)));
        let r = |e: &SexticElement, n: u32| RhoPower(n).apply(e);
        assert_eq!(r(&x, 6), x);
        assert_ne!(r(&x, 2), x);
        assert_ne!(r(&x, 3), x);
        let conj = SexticElement::new(&l, x.a().clone(), x.b().neg());
        assert_eq!(r(&x, 3), conj);
        let sd = SexticElement::sqrt_delta(&l);
        assert_eq!(r(&sd, 2), sd);
        assert_eq!(sd.mul(&sd), sd.embed(&q(-26, 1)));
        assert_eq!(x.mul(&x.inv().unwrap()), x.one_like());
    }

    #[test]
    fn bad_delta() {
        let k = CyclicCubicField::new(&UniPoly::from_ints(&[1, -4, 1, 1])).unwrap();
        assert!(SexticField::new(&k, 1).is_err());
        assert!(SexticField::new(&k, 12).is_err());
        assert!(SexticField::new(&k, 0).is_err());
    }
}
