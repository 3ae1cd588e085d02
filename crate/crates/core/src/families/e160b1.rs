//! The curve 160b1, `y² = x(x² − 4x − 1)`, and the rational curve in its
//! surface over the singular fiber `U = 5/4`.
//!
//! Two labelings are in use. [`e160b1_point`] takes the parameter `(m, n)` of
//! the surface curve; [`f_mn`] and [`e160b1_ramification`] take the labels
//! of the cubic, with `F = 3m² + 25n²` and `G = m² + 9n²`. The cubic with
//! labels `(m, n)` comes from the surface point at `(m, 5n)`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{Rational, UniPoly};
use crate::curve::CurveModel;
use crate::numfield::{is_eisenstein, monic_integral, unramified_by_reduction};
use crate::s6::{s6_model, S6Point};
use crate::Error;

/// `y² = x³ − 4x² − x`.
pub fn e160b1_curve() -> CurveModel {
    CurveModel::new(Rational::one(), Rational::from(-4), Rational::from(-1), Rational::zero()).expect("nonsingular")
}

/// `(5/4, mn(245m² + 81n²)/(270(3m² + n²)²), −(25m² + 9n²)/(45(3m² + n²)))`.
///
/// ```
/// use sextic::algebra::q;
/// use sextic::families::e160b1_point;
/// let p = e160b1_point(3, 1).unwrap();
/// assert_eq!((p.u, p.d, p.t), (q(5, 4), q(127, 3920), q(-13, 70)));
/// ```
pub fn e160b1_point(m: i64, n: i64) -> Result<S6Point, Error> {
    if m == 0 && n == 0 {
        return Err(Error::InvalidInput("(m, n) = (0, 0)".into()));
    }
    let (m, n) = (Rational::from(m), Rational::from(n));
    let (m2, n2) = (&m * &m, &n * &n);
    let k = &(Rational::from(3) * &m2) + &n2;
    let d = &m * &n * &(&(Rational::from(245) * &m2) + &(Rational::from(81) * &n2))
        / (Rational::from(270) * &k * &k);
    let t = -(&(Rational::from(25) * &m2) + &(Rational::from(9) * &n2)) / (Rational::from(45) * &k);
    let p = S6Point::new(Rational::new(5, 4), d, t);
    let r = s6_model(&e160b1_curve()).residual(&p)?;
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!("160b1 point has residual {r}")));
    }
    Ok(p)
}

fn fg(m: i64, n: i64) -> (BigInt, BigInt, BigInt) {
    let (m, n) = (BigInt::from(m), BigInt::from(n));
    let (m2, n2) = (&m * &m, &n * &n);
    (3 * &m2 + 25 * &n2, &m2 + 9 * &n2, 11 * &m2 + 81 * &n2)
}

/// `36FG x³ + 9F(11m² + 81n²)x² + 54FG x + 25G²`.
///
/// The constant `25G²` is what makes the discriminant a square and matches
/// the cubics of the surface points; [`f_mn_display`] has `G²`.
pub fn f_mn(m: i64, n: i64) -> UniPoly {
    let (f, g, h) = fg(m, n);
    UniPoly::from_bigints(&[25 * &g * &g, 54 * &f * &g, 9 * &f * &h, 36 * &f * &g])
}

/// The variant with constant term `G²`; its discriminant is not a square
/// in general.
pub fn f_mn_display(m: i64, n: i64) -> UniPoly {
    let (f, g, h) = fg(m, n);
    UniPoly::from_bigints(&[&g * &g, 54 * &f * &g, 9 * &f * &h, 36 * &f * &g])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ramification {
    Ramified,
    Unramified,
    Undetermined,
}

/// Whether `p` ramifies in the cubic field of `f_mn(m, n)`:
/// `p ∥ F` ramifies (reverse Eisenstein), `p ∤ F` does not (a square-free
/// reduction or a simple root mod `p`). `p ∈ {2, 3, 5}` and `p² | F` are
/// left undetermined.
pub fn e160b1_ramification(m: i64, n: i64, p: u64) -> Ramification {
    if matches!(p, 2 | 3 | 5) {
        return Ramification::Undetermined;
    }
    let (f, _, _) = fg(m, n);
    let pb = BigInt::from(p);
    let (_, coeffs) = f_mn(m, n).primitive_integral();
    if (&f % &pb) == BigInt::from(0) {
        if (&f % (&pb * &pb)) == BigInt::from(0) {
            return Ramification::Undetermined;
        }
        let mut rev = coeffs;
        rev.reverse();
        return if is_eisenstein(&rev, &pb) { Ramification::Ramified } else { Ramification::Undetermined };
    }
    let (_, monic) = monic_integral(&f_mn(m, n)).primitive_integral();
    if unramified_by_reduction(&monic, &pb) {
        Ramification::Unramified
    } else {
        Ramification::Undetermined
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::s6::{intersection_cubic, point_to_sextic_field};

    #[test]
    fn points() {
        assert_eq!(e160b1_point(3, 5).unwrap(), S6Point::new(q(5, 4), q(235, 2704), q(-5, 26)));
        assert_eq!(e160b1_point(1, 1).unwrap(), S6Point::new(q(5, 4), q(163, 2160), q(-17, 90)));
    }

    #[test]
    fn cubic_labels_match_surface_labels() {
        for (m, n) in [(3, 1), (5, 1), (1, 2), (7, 3), (2, 9)] {
            let p = e160b1_point(m, 5 * n).unwrap();
            let h = intersection_cubic(&e160b1_curve(), &p.t, &p.u);
            assert_eq!(h.primitive(), f_mn(m, n).primitive(), "({m}, {n})");
        }
    }

    #[test]
    fn discriminants() {
        let d = f_mn(5, 1).primitive().cubic_discriminant().unwrap();
        assert_eq!(d, q(64 * 729 * 289 * 163 * 163, 1));
        assert!(f_mn(3, 1).cubic_discriminant().unwrap().sqrt().is_some());
        assert!(f_mn_display(3, 1).cubic_discriminant().unwrap().sqrt().is_none());
    }

    #[test]
    fn ramification_examples() {
        assert_eq!(e160b1_ramification(3, 1, 13), Ramification::Ramified);
        assert_eq!(e160b1_ramification(5, 1, 17), Ramification::Unramified);
        assert_eq!(e160b1_ramification(3, 1, 3), Ramification::Undetermined);
        assert_eq!(e160b1_ramification(3, 1, 7), Ramification::Unramified);
    }

    #[test]
    fn quadratic_class_is_minus_gf() {
        let c = point_to_sextic_field(&e160b1_curve(), &e160b1_point(1, 1).unwrap()).unwrap();
        assert_eq!(c.delta, BigInt::from(-34));
        let c = point_to_sextic_field(&e160b1_curve(), &e160b1_point(3, 1).unwrap()).unwrap();
        assert_eq!(c.delta, BigInt::from(-182));
    }
}
