//! The tower `K3 = Q[x]/(f)` ⊂ `K6 = K3(√δ)`, prime fields, and the
//! field-element interface the curve arithmetic is generic over.

mod conductor;
mod cubic;
mod fp;
mod iso;
mod sextic;

use std::fmt;

use crate::algebra::Rational;

pub(crate) use conductor::unramified_by_reduction;
pub use conductor::{cubic_conductor_heuristic, is_eisenstein, ConductorReport, PrimeCertificate, PrimeStatus};
pub use cubic::{monic_integral, CubicElement, CyclicCubicField, Sigma};
pub use fp::Fp;
pub use iso::{is_isomorphic_cubic, IsomorphismOutcome, DEFAULT_DENOMINATOR_BITS};
pub use sextic::{Rho, RhoPower, SexticElement, SexticField};

/// Arithmetic shared by Q, K3, K6 and F_p. Elements carry their field, so
/// constants are produced "like" an existing element.
pub trait FieldElement: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Image of a rational in the same field.
    fn embed(&self, q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Largest bit length among the rational components.
    fn height_bits(&self) -> u64;
    /// A homomorphism to `F_p` for this element's field, if `p` admits one
    /// (a root of the defining polynomial and of `δ` mod `p`).
    fn residue_map(&self, p: u64) -> Option<ResidueMap>;
    /// Image under a residue map; `None` when not integral at `p`.
    fn reduce(&self, map: &ResidueMap) -> Option<Fp>;

    fn square(&self) -> Self {
        self.mul(self)
    }
}

/// Where the generators go in `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidueMap {
    pub p: u64,
    pub alpha: Option<u64>,
    pub sqrt_delta: Option<u64>,
}

/// A field automorphism, applied coordinatewise to points.
pub trait Automorphism<F> {
    fn apply(&self, x: &F) -> F;
    fn order(&self) -> u32;
}

/// The identity, order 1; the Galois group of Q.
#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl<F: Clone> Automorphism<F> for Identity {
    fn apply(&self, x: &F) -> F {
        x.clone()
    }
    fn order(&self) -> u32 {
        1
    }
}

impl FieldElement for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn embed(&self, q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
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
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        Rational::inv(self)
    }
    fn height_bits(&self) -> u64 {
        Rational::height_bits(self)
    }
    fn residue_map(&self, p: u64) -> Option<ResidueMap> {
        Some(ResidueMap { p, alpha: None, sqrt_delta: None })
    }
    fn reduce(&self, map: &ResidueMap) -> Option<Fp> {
        Fp::from_rational(self, map.p)
    }
}
