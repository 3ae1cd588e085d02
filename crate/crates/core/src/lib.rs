//! Cyclic sextic fields over which an elliptic curve gains rank.
//!
//! Rational points on the surface `S6(E) = (E×E)/<ρ>`, with
//! `ρ(P, Q) = (Q, Q − P)`, produce points of `E` over cyclic sextic fields
//! `K6 = K3(√δ)`. The crate builds that correspondence with exact arithmetic:
//!
//! * [`algebra`]: rationals, polynomials, discriminants, square classes;
//! * [`numfield`]: the tower `K3 = Q[x]/(f)`, `K6 = K3(√δ)` with Galois generators;
//! * [`curve`]: the group law on `c·y² = x³ + a₂x² + a₁x + a₀` over any of these fields;
//! * [`s6`]: the surface, the point-to-field pipeline, twists and the S3 cover;
//! * [`fibration`]: the elliptic fibration `(U, D, T) ↦ T` and its sections;
//! * [`families`]: three parametrized families of surface points;
//! * [`census`]: counting square-free conductors produced by a family.

pub mod algebra;
pub mod census;
pub mod curve;
mod error;
pub mod json;
pub mod families;
pub mod fibration;
pub mod numfield;
pub mod s6;
pub mod verify;

pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-algebra.md")]
    mod exact_algebra {}
    #[doc = include_str!("../../../book/src/number-fields.md")]
    mod number_fields {}
    #[doc = include_str!("../../../book/src/curves.md")]
    mod curves {}
    #[doc = include_str!("../../../book/src/surface.md")]
    mod surface {}
    #[doc = include_str!("../../../book/src/fibration.md")]
    mod fibration {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
