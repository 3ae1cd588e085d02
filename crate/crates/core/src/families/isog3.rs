//! Curves with a rational 3-isogeny, `E_{a,b}: y² = x³ + a(x − b)²`, and the
//! surface points on the fiber `T = b`.
//!
//! Parameters follow the `s = 3m/n` convention of `f_{a,b}`; the raw
//! parametrization in `s` is related by `s_raw = b·s/2`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::algebra::{factor, is_squarefree_u64, Rational, UniPoly};
use crate::curve::CurveModel;
use crate::s6::{s6_model, S6Point};
use crate::Error;

/// `y² = x³ + a(x − b)²`.
pub fn isog3_curve(a: i64, b: i64) -> Result<CurveModel, Error> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("E_{a,b} needs a, b nonzero".into()));
    }
    let (a, b) = (Rational::from(a), Rational::from(b));
    CurveModel::new(Rational::one(), a.clone(), Rational::from(-2) * &a * &b, &a * &(&b * &b))
}

pub(crate) fn check_mn(m: i64, n: i64) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidInput("n = 0".into()));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::InvalidInput(format!("gcd({m}, {n}) ≠ 1")));
    }
    Ok(())
}

fn on_surface(e: &CurveModel, p: S6Point) -> Result<S6Point, Error> {
    let r = s6_model(e).residual(&p)?;
    if !r.is_zero() {
        return Err(Error::Inconsistency(format!("family point has residual {r}")));
    }
    Ok(p)
}

/// `(9b²(m² + 3n²)/(4n²) + ab, 27b⁴m(m² + 3n²)/(4n³), b)`.
///
/// ```
/// use sextic::algebra::q;
/// use sextic::families::isog3_point;
/// let p = isog3_point(1, 1, 2, 1).unwrap();
/// assert_eq!((p.u, p.d, p.t), (q(67, 4), q(189, 2), q(1, 1)));
/// ```
pub fn isog3_point(a: i64, b: i64, m: i64, n: i64) -> Result<S6Point, Error> {
    check_mn(m, n)?;
    let e = isog3_curve(a, b)?;
    let (a, b, m, n) = (Rational::from(a), Rational::from(b), Rational::from(m), Rational::from(n));
    let g = &(&m * &m) + &(Rational::from(3) * &n * &n);
    let b2 = &b * &b;
    let u = &(Rational::from(9) * &b2 * &g / (Rational::from(4) * &n * &n)) + &(&a * &b);
    let d = Rational::from(27) * &b2 * &b2 * &m * &g / (Rational::from(4) * &n * &n * &n);
    on_surface(&e, S6Point::new(u, d, b))
}

/// `(s² + ab + 27b²/4, 2bs³ + 27b³s/2, b)`.
pub fn isog3_point_raw(a: i64, b: i64, s: &Rational) -> Result<S6Point, Error> {
    let e = isog3_curve(a, b)?;
    let (a, b) = (Rational::from(a), Rational::from(b));
    let b2 = &b * &b;
    let u = &(&(s * s) + &(&a * &b)) + &(Rational::new(27, 4) * &b2);
    let d = &(Rational::from(2) * &b * s * s * s) + &(Rational::new(27, 2) * &b2 * &b * s);
    on_surface(&e, S6Point::new(u, d, b))
}

/// `12n²x³ − 9(m² + 3n²)x² + 6(m² + 3n²)x − (m² + 3n²)`; it does not depend
/// on `a, b`.
pub fn isog3_cubic(m: i64, n: i64) -> UniPoly {
    let (m, n) = (m as i128, n as i128);
    let g = m * m + 3 * n * n;
    UniPoly::from_bigints(&[-g, 6 * g, -9 * g, 12 * n * n].map(BigInt::from))
}

/// Closed-form conductor data of the sextic field from `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConductorData {
    #[serde(serialize_with = "crate::json::big")]
    pub cubic_conductor: BigInt,
    #[serde(serialize_with = "crate::json::big")]
    pub quad_disc: BigInt,
    #[serde(serialize_with = "crate::json::big")]
    pub product: BigInt,
    /// `|product|` is square-free.
    pub squarefree: bool,
    /// Primes at which the closed forms may be off.
    #[serde(serialize_with = "crate::json::big_vec")]
    pub ambiguous_support: Vec<BigInt>,
}

pub(crate) fn primes_of(n: &BigInt) -> Vec<BigInt> {
    factor(n).map(|f| f.into_iter().map(|(p, _)| BigInt::from(p)).collect()).unwrap_or_default()
}

pub(crate) fn is_squarefree(n: &BigInt) -> bool {
    match u64::try_from(n.magnitude()) {
        Ok(v) => v != 0 && is_squarefree_u64(v),
        Err(_) => factor(n).is_ok_and(|f| f.iter().all(|(_, e)| *e == 1)),
    }
}

/// `m² + 3n²`, `9bm² + (4a + 27b)n²`, their product `g_{a,b}(m, n)`, and the
/// primes of `6ab`.
pub fn isog3_conductors(a: i64, b: i64, m: i64, n: i64) -> ConductorData {
    let (a, b, m, n) = (BigInt::from(a), BigInt::from(b), BigInt::from(m), BigInt::from(n));
    let cubic = &m * &m + 3 * &n * &n;
    let quad = 9 * &b * &m * &m + (4 * &a + 27 * &b) * &n * &n;
    let product = &cubic * &quad;
    ConductorData {
        squarefree: is_squarefree(&product),
        ambiguous_support: primes_of(&(6 * &a * &b)),
        cubic_conductor: cubic,
        quad_disc: quad,
        product,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::s6::{intersection_cubic, point_to_sextic_field};

    #[test]
    fn points() {
        assert_eq!(isog3_point(1, 1, 1, 1).unwrap(), S6Point::new(q(10, 1), q(27, 1), q(1, 1)));
        assert_eq!(isog3_point(1, 1, 2, 1).unwrap(), S6Point::new(q(67, 4), q(189, 2), q(1, 1)));
        assert_eq!(isog3_point(-2, 3, 1, 2).unwrap().t, q(3, 1));
        assert!(isog3_point(1, 1, 2, 2).is_err());
    }

    #[test]
    fn raw_parameter_is_rescaled() {
        for (a, b, m, n) in [(1, 1, 2, 1), (-3, 2, 5, 3), (7, -1, 1, 4)] {
            let s_raw = Rational::new(3 * b * m, 2 * n);
            assert_eq!(isog3_point_raw(a, b, &s_raw).unwrap(), isog3_point(a, b, m, n).unwrap());
        }
    }

    #[test]
    fn cubic_examples() {
        let f = isog3_cubic(1, 1);
        assert_eq!(f, UniPoly::from_ints(&[-4, 24, -36, 12]));
        assert_eq!(f.cubic_discriminant().unwrap(), q(20736, 1));
        assert_eq!(isog3_cubic(2, 1), UniPoly::from_ints(&[-7, 42, -63, 12]));
    }

    #[test]
    fn cubic_is_rescaled_intersection() {
        // x = 3b·x'
        for (a, b, m, n) in [(1, 1, 2, 1), (2, -3, 1, 2), (-5, 2, 3, 4)] {
            let e = isog3_curve(a, b).unwrap();
            let p = isog3_point(a, b, m, n).unwrap();
            let h = intersection_cubic(&e, &p.t, &p.u).scale_var(&q(3 * b, 1));
            assert_eq!(h.primitive(), isog3_cubic(m, n).primitive());
        }
    }

    #[test]
    fn conductors() {
        let c = isog3_conductors(1, 1, 2, 1);
        assert_eq!((c.cubic_conductor, c.quad_disc, c.product.clone(), c.squarefree), (7.into(), 67.into(), 469.into(), true));
        let c = isog3_conductors(1, 1, 1, 1);
        assert_eq!((c.cubic_conductor, c.quad_disc, c.product, c.squarefree), (4.into(), 40.into(), 160.into(), false));
    }

    #[test]
    fn delta_is_quadratic_form() {
        let c = point_to_sextic_field(&isog3_curve(1, 1).unwrap(), &isog3_point(1, 1, 2, 1).unwrap()).unwrap();
        assert_eq!(c.delta, BigInt::from(67));
    }
}
