//! Exact scalars and polynomials: the substrate every formula is written in.

pub mod integer;
pub mod mpoly;
pub mod rational;
pub mod ring;
pub mod upoly;

pub use integer::{factor, is_square, is_squarefree_u64, squarefree_batch, squarefree_part, squarefree_part_int};
pub use mpoly::{multipoly_equal, Monomial, MultiPoly, Var};
pub use rational::{q, Rational};
pub use ring::{cubic_discriminant_in, Ring};
pub use upoly::{RealRoot, SquarefreeDecomposition, UniPoly};

/// Discriminant of a cubic given by its coefficients.
///
/// ```
/// use sextic::algebra::{cubic_discriminant, UniPoly};
/// let f = UniPoly::from_ints(&[1, -4, 1, 1]);
/// assert_eq!(cubic_discriminant(&f).unwrap(), sextic::algebra::q(169, 1));
/// ```
pub fn cubic_discriminant(p: &UniPoly) -> Result<Rational, crate::Error> {
    p.cubic_discriminant()
}

/// Yun decomposition; see [`UniPoly::squarefree_decomposition`].
pub fn squarefree_decomposition(p: &UniPoly) -> Result<SquarefreeDecomposition, crate::Error> {
    p.squarefree_decomposition()
}
