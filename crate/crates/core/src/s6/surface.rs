use serde::{Deserialize, Serialize};

use crate::algebra::mpoly::mp::{r, v};
use crate::algebra::{cubic_discriminant_in, MultiPoly, Rational, UniPoly, Var};
use crate::curve::CurveModel;
use crate::Error;

/// An affine point `(U, D, T)` of `S6(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S6Point {
    #[serde(rename = "U")]
    pub u: Rational,
    #[serde(rename = "D")]
    pub d: Rational,
    #[serde(rename = "T")]
    pub t: Rational,
}

impl S6Point {
    pub fn new(u: Rational, d: Rational, t: Rational) -> Self {
        S6Point { u, d, t }
    }
}

/// `T·g(x)/c − U(x − T)²`, whose roots are the x-coordinates of `E ∩ C_L`.
///
/// ```
/// use sextic::algebra::{q, UniPoly};
/// use sextic::curve::CurveModel;
/// use sextic::s6::intersection_cubic;
/// let e = CurveModel::weierstrass(q(0, 1), q(1, 1)).unwrap();
/// assert_eq!(intersection_cubic(&e, &q(1, 1), &q(1, 1)), UniPoly::from_ints(&[0, 2, -1, 1]));
/// ```
pub fn intersection_cubic(e: &CurveModel, t: &Rational, u: &Rational) -> UniPoly {
    let conic = UniPoly::new(vec![t * t, Rational::from(-2) * t, Rational::one()]).scale(u);
    &e.cubic().scale(&(t / &e.c)) - &conic
}

/// The surface `T·D² = R(U, T)` attached to a curve `c·y² = g(x)`, with
/// `R = disc_x(T·g − c·U(x − T)²)/T`. For `c = 1`, `g = x³ + Ax + B` this is
/// the closed form in [`super::s6_rhs_polynomial`].
#[derive(Clone, Debug)]
pub struct S6Model {
    curve: CurveModel,
}

/// The surface evaluator of `E`.
pub fn s6_model(e: &CurveModel) -> S6Model {
    S6Model { curve: e.clone() }
}

impl S6Model {
    pub fn curve(&self) -> &CurveModel {
        &self.curve
    }

    /// `R(U, T)`; `T ≠ 0`.
    pub fn rhs(&self, u: &Rational, t: &Rational) -> Result<Rational, Error> {
        if t.is_zero() {
            return Err(Error::ChartBoundary);
        }
        let h = intersection_cubic(&self.curve, t, u).scale(&self.curve.c);
        let c3 = h.coeff(3);
        let disc = cubic_discriminant_in(&c3, &h.coeff(2), &h.coeff(1), &h.coeff(0));
        Ok(disc / t)
    }

    /// `T·D² − R(U, T)`.
    pub fn residual(&self, p: &S6Point) -> Result<Rational, Error> {
        Ok(&p.t * &(&p.d * &p.d) - &self.rhs(&p.u, &p.t)?)
    }

    pub fn contains(&self, p: &S6Point) -> bool {
        self.residual(p).is_ok_and(|r| r.is_zero())
    }

    /// `R` as a polynomial in `U` and `T`.
    pub fn rhs_polynomial(&self) -> MultiPoly {
        let (t, u) = (v(Var::T), v(Var::U));
        let e = &self.curve;
        let cu = &r(&e.c) * &u;
        // T·g − c·U·(x − T)², coefficient by coefficient
        let c3 = t.clone();
        let c2 = &(&t * &r(&e.a2)) - &cu;
        let c1 = &(&t * &r(&e.a1)) + &(&(&cu * &t) * &r(&Rational::from(2)));
        let c0 = &(&t * &r(&e.a0)) - &(&cu * &t.pow(2));
        cubic_discriminant_in(&c3, &c2, &c1, &c0).div_var_power(Var::T, 1).expect("T divides the discriminant")
    }

    /// `T·D² − R(U, T)` as a polynomial in `U, D, T`.
    pub fn equation(&self) -> MultiPoly {
        &(&v(Var::T) * &v(Var::D).pow(2)) - &self.rhs_polynomial()
    }
}

/// Move a point of `S6(E)` to the surface of the short model
/// `y² = x³ + Ax + B` of `E`, via `x' = x + a₂/3`. The chart is not
/// translation invariant: with `T' = T + a₂/3` the point becomes
/// `(cU·T'/T, D·T'/T, T')`.
pub fn to_short_weierstrass(e: &CurveModel, p: &S6Point) -> Result<(CurveModel, S6Point), Error> {
    if p.t.is_zero() {
        return Err(Error::ChartBoundary);
    }
    let s = &e.a2 / &Rational::from(3);
    let a = &e.a1 - &(&e.a2 * &s);
    let b = &(&e.a0 - &(&e.a1 * &s)) + &(Rational::from(2) * &s * &s * &s);
    let short = CurveModel::weierstrass(a, b)?;
    let t = &p.t + &s;
    if t.is_zero() {
        return Err(Error::ChartBoundary);
    }
    let k = &t / &p.t;
    let out = S6Point::new(&(&e.c * &p.u) * &k, &p.d * &k, t);
    debug_assert!(s6_model(&short).contains(&out) == s6_model(e).contains(p));
    Ok((short, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{multipoly_equal, q};
    use crate::s6::formulas::s6_rhs_polynomial;

    #[test]
    fn generic_model_agrees_with_closed_form() {
        for (a, b) in [(0, 1), (-1, 0), (3, -7), (-2, 5)] {
            let e = CurveModel::weierstrass(q(a, 1), q(b, 1)).unwrap();
            let lit = s6_rhs_polynomial().eval_partial(&[(Var::A, q(a, 1)), (Var::B, q(b, 1))]);
            assert!(multipoly_equal(&s6_model(&e).rhs_polynomial(), &lit));
        }
    }

    #[test]
    fn residual_examples() {
        let e = CurveModel::weierstrass(q(0, 1), q(1, 1)).unwrap();
        let m = s6_model(&e);
        assert_eq!(m.residual(&S6Point::new(q(1, 1), q(0, 1), q(1, 1))).unwrap(), q(28, 1));
        assert_eq!(m.residual(&S6Point::new(q(1, 1), q(0, 1), q(0, 1))), Err(Error::ChartBoundary));
        // E_{1,1}: y² = x³ + (x − 1)²
        let e11 = CurveModel::new(q(1, 1), q(1, 1), q(-2, 1), q(1, 1)).unwrap();
        assert!(s6_model(&e11).contains(&S6Point::new(q(10, 1), q(27, 1), q(1, 1))));
        // y² = x(x² − 4x − 1)
        let e160 = CurveModel::new(q(1, 1), q(-4, 1), q(-1, 1), q(0, 1)).unwrap();
        assert!(s6_model(&e160).contains(&S6Point::new(q(5, 4), q(235, 2704), q(-5, 26))));
    }

    #[test]
    fn short_form_of_e11_point() {
        let e11 = CurveModel::new(q(1, 1), q(1, 1), q(-2, 1), q(1, 1)).unwrap();
        let (short, p) = to_short_weierstrass(&e11, &S6Point::new(q(10, 1), q(27, 1), q(1, 1))).unwrap();
        assert_eq!(short.short_coefficients(), Some((q(-7, 3), q(47, 27))));
        assert_eq!(p, S6Point::new(q(40, 3), q(36, 1), q(4, 3)));
        assert!(s6_model(&short).contains(&p));
    }

    #[test]
    fn intersection_cubic_examples() {
        let e160 = CurveModel::new(q(1, 1), q(-4, 1), q(-1, 1), q(0, 1)).unwrap();
        let h = intersection_cubic(&e160, &q(-13, 70), &q(5, 4));
        assert_eq!(h.primitive(), UniPoly::from_ints(&[169, 1092, 1988, 728]));
        let e = CurveModel::weierstrass(q(0, 1), q(1, 1)).unwrap();
        assert_eq!(intersection_cubic(&e, &q(2, 1), &q(0, 1)), e.cubic().scale(&q(2, 1)));
    }
}
