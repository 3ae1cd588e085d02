use crate::algebra::integer::{mod_u64, pow_mod};
use crate::algebra::Rational;

use super::{FieldElement, ResidueMap};

/// An element of the prime field `F_p`, `p` an odd prime below 2⁶³.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn new(v: i128, p: u64) -> Self {
        Fp { v: v.rem_euclid(p as i128) as u64, p }
    }

    /// `None` when `p` divides the denominator.
    pub fn from_rational(q: &Rational, p: u64) -> Option<Self> {
        let d = mod_u64(q.denom(), p);
        if d == 0 {
            return None;
        }
        let n = mod_u64(q.numer(), p);
        Some(Fp { v: mul(n, pow_mod(d, p - 2, p), p), p })
    }

    pub fn pow(self, e: u64) -> Self {
        Fp { v: pow_mod(self.v, e, self.p), p: self.p }
    }

    /// Some square root, by exhaustive search; intended for the small primes
    /// used in certificates.
    pub fn sqrt(self) -> Option<Self> {
        if self.v == 0 {
            return Some(self);
        }
        if pow_mod(self.v, (self.p - 1) / 2, self.p) != 1 {
            return None;
        }
        (1..self.p).map(|r| Fp { v: r, p: self.p }).find(|r| r.mul(r).v == self.v)
    }
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl FieldElement for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn embed(&self, q: &Rational) -> Self {
        Fp::from_rational(q, self.p).expect("rational not integral at p")
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp { v: ((self.v as u128 + rhs.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp { v: ((self.v as u128 + (self.p - rhs.v) as u128) % self.p as u128) as u64, p: self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp { v: mul(self.v, rhs.v, self.p), p: self.p }
    }
    fn neg(&self) -> Self {
        Fp { v: (self.p - self.v) % self.p, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        (self.v != 0).then(|| self.pow(self.p - 2))
    }
    fn height_bits(&self) -> u64 {
        64 - self.v.leading_zeros() as u64
    }
    fn residue_map(&self, p: u64) -> Option<ResidueMap> {
        (p == self.p).then_some(ResidueMap { p, alpha: None, sqrt_delta: None })
    }
    fn reduce(&self, map: &ResidueMap) -> Option<Fp> {
        (map.p == self.p).then_some(*self)
    }
}
