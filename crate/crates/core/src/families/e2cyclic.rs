//! Curves whose 2-torsion field is cyclic cubic, in the model
//! `E_c^b: 3b·y² = x³ − 3s·x − 2s`, `s = 3c² + 1`, whose cubic has
//! discriminant `(18cs)²`.
//!
//! The surface has the section `U = 0, D = 18cs·T`; doubling it on the
//! fibration gives the curve [`e2cyclic_2p_point`].

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::mpoly::mp::{c as k, r, v};
use crate::algebra::{squarefree_part, MultiPoly, Rational, Var};
use crate::curve::CurveModel;
use crate::s6::{s6_model, S6Point};
use crate::Error;

fn s_of(c: &Rational) -> Rational {
    &(Rational::from(3) * c * c) + &Rational::one()
}

/// `3b·y² = x³ − 3(3c² + 1)x − 2(3c² + 1)`.
pub fn e2cyclic_curve(b: &Rational, c: &Rational) -> Result<CurveModel, Error> {
    if b.is_zero() {
        return Err(Error::InvalidInput("b = 0".into()));
    }
    let s = s_of(c);
    CurveModel::new(Rational::from(3) * b, Rational::zero(), Rational::from(-3) * &s, Rational::from(-2) * &s)
}

/// The curve and its section `T ↦ (0, 18c(3c² + 1)T, T)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct E2CyclicModel {
    pub curve: CurveModel,
    /// `18c(3c² + 1)`: the section is `D = section_slope·T`.
    pub section_slope: Rational,
}

pub fn e2cyclic_model(b: &Rational, c: &Rational) -> Result<E2CyclicModel, Error> {
    let curve = e2cyclic_curve(b, c)?;
    Ok(E2CyclicModel { curve, section_slope: Rational::from(18) * c * &s_of(c) })
}

impl E2CyclicModel {
    /// The surface equation along the section, as a polynomial in `T`;
    /// zero when the section lies on the surface.
    pub fn section_residual(&self) -> MultiPoly {
        let eq = s6_model(&self.curve).equation();
        let eq = eq.substitute(Var::U, &MultiPoly::zero());
        eq.substitute(Var::D, &(&r(&self.section_slope) * &v(Var::T)))
    }
}

/// `T·D² − R/9` with the right-hand side in the normalization where the
/// section is `D = 6c(3c² + 1)T`; `D` there is a third of the `D` used
/// everywhere else.
pub fn e2cyclic_surface_display(b: &Rational, c: &Rational) -> MultiPoly {
    let (t, u, d) = (v(Var::T), v(Var::U), v(Var::D));
    let (b, c2) = (r(b), r(&(c * c)));
    let s = &(&k(3) * &c2) + &k(1);
    let sum = |xs: Vec<MultiPoly>| xs.iter().fold(MultiPoly::zero(), |acc, x| &acc + x);
    let u3 = &(&k(12) * &b.pow(3))
        * &sum(vec![t.pow(3), &k(-9) * &(&t * &c2), &k(-6) * &c2, &k(-3) * &t, k(-2)]);
    let u2 = &(&k(-9) * &(&t * &b.pow(2)))
        * &sum(vec![
            &k(3) * &t.pow(4),
            &k(-30) * &(&t.pow(2) * &c2),
            &k(-9) * &c2.pow(2),
            &k(-24) * &(&t * &c2),
            &k(-10) * &t.pow(2),
            &k(-6) * &c2,
            &k(-8) * &t,
            k(-1),
        ]);
    let u1 = &(&(&k(-36) * &t.pow(2)) * &(&s * &b))
        * &sum(vec![&k(6) * &(&t * &c2), t.pow(2), &k(3) * &c2, &k(2) * &t, k(1)]);
    let u0 = &(&k(36) * &c2) * &(&s.pow(2) * &t.pow(3));
    let rhs = sum(vec![&u3 * &u.pow(3), &u2 * &u.pow(2), &u1 * &u, u0]);
    &(&t * &d.pow(2)) - &rhs
}

/// `U = 3sT(T² + 2T − c² + 1)(T² + 2T + s) / (4bc²(T³ − 3sT − 2s))`.
pub fn e2cyclic_2p_u(b: &Rational, c: &Rational, t: &Rational) -> Result<Rational, Error> {
    if c.is_zero() {
        return Err(Error::InvalidInput("c = 0".into()));
    }
    let s = s_of(c);
    let t2 = t * t;
    let two_t = Rational::from(2) * t;
    let den = Rational::from(4) * b * c * c * &(&(&(&t2 * t) - &(Rational::from(3) * &s * t)) - &(Rational::from(2) * &s));
    if den.is_zero() {
        return Err(Error::InvalidInput(format!("T = {t} is a pole of U")));
    }
    let num = Rational::from(3)
        * &s
        * t
        * &(&(&(&t2 + &two_t) - &(c * c)) + &Rational::one())
        * &(&(&t2 + &two_t) + &s);
    Ok(num / den)
}

/// The point of the doubled-section curve over `T = t0`; `D ≥ 0` is the
/// exact square root of `R(U, T₀)/T₀`.
pub fn e2cyclic_2p_point(b: &Rational, c: &Rational, t0: &Rational) -> Result<S6Point, Error> {
    if t0.is_zero() {
        return Err(Error::ChartBoundary);
    }
    let e = e2cyclic_curve(b, c)?;
    let u = e2cyclic_2p_u(b, c, t0)?;
    let d2 = s6_model(&e).rhs(&u, t0)? / t0;
    let d = d2
        .sqrt()
        .ok_or_else(|| Error::Inconsistency(format!("R/T = {d2} is not a rational square")))?;
    Ok(S6Point::new(u, d, t0.clone()))
}

/// Square class of `−3(3c² + 1)(3m² + n²)(m² − n²)·b·m³·(3m³ − 9cm²n − 3mn² + cn³)`,
/// the quadratic field of the point at `T = cn/m − 1`. The `m³` comes from
/// the denominator of `y²`.
pub fn e2cyclic_y_class(b: i64, c: i64, m: i64, n: i64) -> Result<BigInt, Error> {
    let (b, c, m, n) = (BigInt::from(b), BigInt::from(c), BigInt::from(m), BigInt::from(n));
    let v = -3
        * (3 * &c * &c + 1)
        * (3 * &m * &m + &n * &n)
        * (&m * &m - &n * &n)
        * &b
        * &m
        * (3 * &m * &m * &m - 9 * &c * &m * &m * &n - 3 * &m * &n * &n + &c * &n * &n * &n);
    squarefree_part(&Rational::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::s6::{intersection_cubic, point_to_sextic_field};

    #[test]
    fn model_and_section() {
        let m = e2cyclic_model(&q(1, 1), &q(1, 1)).unwrap();
        assert_eq!(m.curve.discriminant(), q(5184, 1));
        assert!(m.section_residual().is_zero());
        assert!(e2cyclic_model(&q(2, 3), &q(-5, 2)).unwrap().section_residual().is_zero());
        assert!(e2cyclic_curve(&q(1, 1), &q(0, 1)).is_err());
        // the 2-torsion field is cyclic cubic for (1, 2)
        let e = e2cyclic_curve(&q(1, 1), &q(2, 1)).unwrap();
        assert!(e.discriminant().sqrt().is_some());
        assert!(e.cubic().rational_roots().is_empty());
    }

    #[test]
    fn display_surface_is_a_ninth() {
        for (b, c) in [(q(1, 1), q(1, 1)), (q(-2, 1), q(3, 2))] {
            let e = e2cyclic_curve(&b, &c).unwrap();
            let generic = s6_model(&e).rhs_polynomial();
            let display = e2cyclic_surface_display(&b, &c);
            let display_rhs = &(&v(Var::T) * &v(Var::D).pow(2)) - &display;
            assert_eq!(generic, display_rhs.scale(&q(9, 1)));
            let slope = &q(6, 1) * &c * &s_of(&c);
            let on = display.substitute(Var::U, &MultiPoly::zero()).substitute(Var::D, &(&r(&slope) * &v(Var::T)));
            assert!(on.is_zero());
        }
    }

    #[test]
    fn doubled_section_points() {
        let p = e2cyclic_2p_point(&q(1, 1), &q(1, 1), &q(2, 1)).unwrap();
        let e = e2cyclic_curve(&q(1, 1), &q(1, 1)).unwrap();
        assert!(s6_model(&e).contains(&p));
        let h = intersection_cubic(&e, &p.t, &p.u);
        assert!(h.cubic_discriminant().unwrap().sqrt().is_some());
    }

    #[test]
    fn y_class_matches_pipeline() {
        for (b, c, m, n) in [(1, 1, 1, 3), (2, 1, 2, 5), (1, 2, 3, 1), (-1, 3, 1, 2)] {
            let (bq, cq) = (q(b, 1), q(c, 1));
            let t0 = &q(c * n, m) - &q(1, 1);
            let p = e2cyclic_2p_point(&bq, &cq, &t0).unwrap();
            let e = e2cyclic_curve(&bq, &cq).unwrap();
            match point_to_sextic_field(&e, &p) {
                Ok(con) => assert_eq!(con.delta, e2cyclic_y_class(b, c, m, n).unwrap(), "{:?}", (b, c, m, n)),
                Err(err) => assert!(err.is_degenerate(), "{err}"),
            }
        }
    }
}
