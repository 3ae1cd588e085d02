//! Quadratic twists of the surface and the double cover `S3(E) → S6(E)`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::mpoly::mp::{c, v};
use crate::algebra::{Rational, Var};
use crate::curve::CurveModel;
use crate::Error;

use super::formulas::{s3_rhs_polynomial, s6_equation};
use super::surface::{s6_model, S6Point};

/// Carry a point of `S6(E^δ)` to `S6(E)` by `(U, D, T) ↦ (U/δ, D, T)`, where
/// `E^δ` is `e.twist(δ)`.
///
/// ```
/// use num_bigint::BigInt;
/// use sextic::algebra::q;
/// use sextic::curve::CurveModel;
/// use sextic::s6::{twist_transport, S6Point};
/// let e = CurveModel::new(q(1, 1), q(1, 1), q(-2, 1), q(1, 1)).unwrap();
/// let p = S6Point::new(q(10, 1), q(27, 1), q(1, 1));
/// assert_eq!(twist_transport(&e, &BigInt::from(1), &p).unwrap(), p);
/// ```
pub fn twist_transport(e: &CurveModel, delta: &BigInt, p: &S6Point) -> Result<S6Point, Error> {
    if delta.is_zero() {
        return Err(Error::BadDelta { delta: delta.clone() });
    }
    let d = Rational::from(delta);
    let twisted = e.twist(&d)?;
    let residual = s6_model(&twisted).residual(p)?;
    if !residual.is_zero() {
        return Err(Error::NotOnSurface { residual });
    }
    let out = S6Point::new(&p.u / &d, p.d.clone(), p.t.clone());
    let back = s6_model(e).residual(&out)?;
    if !back.is_zero() {
        return Err(Error::Inconsistency(format!("transported point has residual {back}")));
    }
    Ok(out)
}

/// The inverse of [`twist_transport`]: `(U, D, T) ↦ (δU, D, T)`.
pub fn twist_transport_inverse(e: &CurveModel, delta: &BigInt, p: &S6Point) -> Result<S6Point, Error> {
    if delta.is_zero() {
        return Err(Error::BadDelta { delta: delta.clone() });
    }
    let d = Rational::from(delta);
    let residual = s6_model(e).residual(p)?;
    if !residual.is_zero() {
        return Err(Error::NotOnSurface { residual });
    }
    Ok(S6Point::new(&p.u * &d, p.d.clone(), p.t.clone()))
}

/// `(t, u, d) ↦ (T, U, D) = (−u/t, −ut, −du/t)`.
pub fn s3_cover(t: &Rational, u: &Rational, d: &Rational) -> Result<S6Point, Error> {
    if t.is_zero() {
        return Err(Error::InvalidInput("t = 0".into()));
    }
    if u.is_zero() {
        return Err(Error::ChartBoundary);
    }
    Ok(S6Point::new(-(u * t), -(&(d * u) / t), -(u / t)))
}

/// `d² − S(A, B, t, u)` for the curve `y² = x³ + Ax + B`.
pub fn s3_residual(a: &Rational, b: &Rational, t: &Rational, u: &Rational, d: &Rational) -> Rational {
    let s = s3_rhs_polynomial()
        .eval(&[(Var::A, a.clone()), (Var::B, b.clone()), (Var::SMALL_T, t.clone()), (Var::SMALL_U, u.clone())])
        .expect("fully assigned");
    d * d - s
}

/// Substitute the cover map into `T·D² − R` (denominators cleared) and
/// reduce modulo `d² = S`; the identity holds when nothing is left.
pub fn s3_cover_identity() -> bool {
    let (t, u, d) = (v(Var::SMALL_T), v(Var::SMALL_U), v(Var::SMALL_D));
    let (eq, _) = s6_equation().substitute_fraction(Var::T, &-&u, &t);
    let (eq, _) = eq.substitute_fraction(Var::D, &-&(&d * &u), &t);
    let eq = eq.substitute(Var::U, &(&c(-1) * &(&u * &t)));
    eq.reduce_power(Var::SMALL_D, 2, &s3_rhs_polynomial()).is_zero()
}
