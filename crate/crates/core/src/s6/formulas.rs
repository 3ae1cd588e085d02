//! Closed forms for a short Weierstrass curve `y² = x³ + Ax + B`: the
//! discriminant Δ(A, B, T, U), the affine surface, the y-sextic and the
//! S3 model, each with an independent oracle.

use crate::algebra::mpoly::mp::{c, v};
use crate::algebra::{cubic_discriminant_in, MultiPoly, Rational, UniPoly, Var};

fn vars() -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    (v(Var::A), v(Var::B), v(Var::T), v(Var::U))
}

/// The four summands of Δ, in the order `U³, U², U, 1`.
pub fn delta_terms() -> [MultiPoly; 4] {
    let (a, b, t, u) = vars();
    let g_t = &(&t.pow(3) + &(&a * &t)) + &b;
    [
        &(&c(4) * &t) * &(&g_t * &u.pow(3)),
        -&(&(&t.pow(2) * &u.pow(2))
            * &(&(&(&(&c(27) * &t.pow(4)) + &(&c(30) * &(&a * &t.pow(2)))) - &a.pow(2)) + &(&c(36) * &(&b * &t)))),
        -&(&(&c(6) * &(&t.pow(3) * &u))
            * &(&(&(&c(4) * &(&a.pow(2) * &t)) - &(&c(9) * &(&b * &t.pow(2)))) + &(&c(3) * &(&a * &b)))),
        -&(&(&(&c(4) * &a.pow(3)) + &(&c(27) * &b.pow(2))) * &t.pow(4)),
    ]
}

/// Δ as a polynomial in `(A, B, T, U)`, assembled from the closed form.
pub fn delta_polynomial() -> MultiPoly {
    delta_terms().iter().fold(MultiPoly::zero(), |acc, t| &acc + t)
}

/// Δ computed independently, as the discriminant of
/// `T x³ − U x² + T(A + 2U) x + T(B − TU)`.
pub fn delta_oracle() -> MultiPoly {
    let (a, b, t, u) = vars();
    let c3 = t.clone();
    let c2 = -&u;
    let c1 = &t * &(&a + &(&c(2) * &u));
    let c0 = &t * &(&b - &(&t * &u));
    cubic_discriminant_in(&c3, &c2, &c1, &c0)
}

/// Δ(A, B, T, U) evaluated directly.
///
/// ```
/// use sextic::algebra::q;
/// use sextic::s6::delta_formula;
/// let d = delta_formula(&q(0, 1), &q(1, 1), &q(1, 1), &q(1, 1));
/// assert_eq!(d, q(-28, 1));
/// ```
pub fn delta_formula(a: &Rational, b: &Rational, t: &Rational, u: &Rational) -> Rational {
    let t2 = t * t;
    let t3 = &t2 * t;
    let t4 = &t3 * t;
    let u2 = u * u;
    let u3 = &u2 * u;
    let g_t = &(&t3 + &(a * t)) + b;
    let k3 = Rational::from(4) * t * &g_t;
    let k2 = -(&t2
        * &(&(&(Rational::from(27) * &t4) + &(Rational::from(30) * a * &t2)) - &(a * a)
            + Rational::from(36) * b * t));
    let k1 = -(Rational::from(6)
        * &t3
        * &(&(Rational::from(4) * a * a * t) - &(Rational::from(9) * b * &t2) + Rational::from(3) * a * b));
    let k0 = -((Rational::from(4) * a * a * a + Rational::from(27) * b * b) * &t4);
    k3 * u3 + k2 * u2 + k1 * u + k0
}

/// The right-hand side `R(A, B, T, U)` of the affine surface `T D² = R`;
/// `T·R = Δ`.
pub fn s6_rhs_polynomial() -> MultiPoly {
    let (a, b, t, u) = vars();
    let g_t = &(&t.pow(3) + &(&a * &t)) + &b;
    let k3 = &c(4) * &g_t;
    let k2 = -&(&t * &(&(&(&(&c(27) * &t.pow(4)) + &(&c(30) * &(&a * &t.pow(2)))) - &a.pow(2)) + &(&c(36) * &(&b * &t))));
    let k1 = -&(&(&c(6) * &t.pow(2))
        * &(&(&(&c(4) * &(&a.pow(2) * &t)) - &(&c(9) * &(&b * &t.pow(2)))) + &(&c(3) * &(&a * &b))));
    let k0 = -&(&(&(&c(4) * &a.pow(3)) + &(&c(27) * &b.pow(2))) * &t.pow(3));
    &(&(&(&k3 * &u.pow(3)) + &(&k2 * &u.pow(2))) + &(&k1 * &u)) + &k0
}

/// `T D² − R(A, B, T, U)` as a polynomial in `(A, B, T, U, D)`.
pub fn s6_equation() -> MultiPoly {
    &(&v(Var::T) * &v(Var::D).pow(2)) - &s6_rhs_polynomial()
}

/// Coefficients `[y⁰, y², y⁴, y⁶]` of the polynomial satisfied by the
/// y-coordinates of `E ∩ C_L`. `printed_y4` selects the display variant
/// whose y⁴ coefficient has `−U²` in place of `+U²`.
fn sextic_coefficients(a: &Rational, b: &Rational, t: &Rational, u: &Rational, printed_y4: bool) -> [Rational; 4] {
    let two = Rational::from(2);
    let three = Rational::from(3);
    let t2 = t * t;
    let t3 = &t2 * t;
    let u2 = u * u;
    let g_t = &(&t3 + &(a * t)) + b;
    let y6 = t3.clone();
    let inner = if printed_y4 {
        &three * &(&t2 * &t2) - &two * &(a + &(&three * u)) * &t2 - &u2
    } else {
        &three * &(&t2 * &t2) - &two * &(a + &(&three * u)) * &t2 + &u2
    };
    let y4 = -(u * &inner);
    let y2 = &u2
        * &(&three * &(&t3 * &t2) + &two * u * &t3 - Rational::from(6) * b * &t2
            + a * &(a + &(&two * u)) * t
            + &two * b * u);
    let y0 = -(&(&g_t * &g_t) * &(&u2 * u));
    [y0, y2, y4, y6]
}

/// The sextic in `y` satisfied by the y-coordinates of the six points of
/// `E ∩ C_L`, with the y⁴ coefficient `−U(3T⁴ − 2(A + 3U)T² + U²)`.
pub fn sextic_poly(a: &Rational, b: &Rational, t: &Rational, u: &Rational) -> UniPoly {
    sextic_from(sextic_coefficients(a, b, t, u, false))
}

/// The sextic as printed, with `− U²` in the y⁴ coefficient. Kept to
/// document the discrepancy; it is not the resultant.
pub fn sextic_poly_printed(a: &Rational, b: &Rational, t: &Rational, u: &Rational) -> UniPoly {
    sextic_from(sextic_coefficients(a, b, t, u, true))
}

fn sextic_from([y0, y2, y4, y6]: [Rational; 4]) -> UniPoly {
    let z = Rational::zero;
    UniPoly::new(vec![y0, z(), y2, z(), y4, z(), y6])
}

/// `Res_x(T(x³ + Ax + B) − U(x − T)², y² − (x³ + Ax + B))` as a polynomial
/// in `y`, computed through the Sylvester determinant with `y²` treated
/// as a parameter: the result is `Res_x(h, g − s)` with `s = y²`.
pub fn sextic_resultant_oracle(a: &Rational, b: &Rational, t: &Rational, u: &Rational) -> UniPoly {
    // h(x) = T x³ − U x² + T(A + 2U) x + T(B − TU); g(x) − s.
    // On h = 0, g(x) = U(x − T)²/T, so Res_x(h, g − s) = T³·∏(U(xᵢ−T)²/T − s),
    // a cubic in s. Interpolate it from four values of s.
    let h = UniPoly::new(vec![t * &(b - &(t * u)), t * &(a + &(Rational::from(2) * u)), -u.clone(), t.clone()]);
    let mut pts = Vec::new();
    for k in 0..4i64 {
        let s = Rational::from(k);
        let g = UniPoly::new(vec![b - &s, a.clone(), Rational::zero(), Rational::one()]);
        pts.push((s, h.resultant(&g)));
    }
    let cubic_in_s = interpolate(&pts);
    let mut coeffs = vec![Rational::zero(); 7];
    for (i, c) in cubic_in_s.coeffs().iter().enumerate() {
        coeffs[2 * i] = c.clone();
    }
    UniPoly::new(coeffs)
}

fn interpolate(pts: &[(Rational, Rational)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = UniPoly::constant(yi.clone());
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                let lin = UniPoly::new(vec![-xj.clone(), Rational::one()]);
                basis = &basis * &lin.scale(&(xi - xj).inv().expect("distinct nodes"));
            }
        }
        acc = &acc + &basis;
    }
    acc
}

/// The S3 model `d² = S(A, B, t, u)`, with the `u`-linear term
/// `−4t(At⁴ − 9Bt² − 6A²)u`.
pub fn s3_rhs_polynomial() -> MultiPoly {
    let (a, b) = (v(Var::A), v(Var::B));
    let (t, u) = (v(Var::SMALL_T), v(Var::SMALL_U));
    let terms = [
        -&(&c(27) * &u.pow(4)),
        -&(&c(4) * &(&t.pow(3) * &u.pow(3))),
        -&(&(&c(6) * &(&(&c(5) * &(&a * &t.pow(2))) - &(&c(9) * &b))) * &u.pow(2)),
        -&(&(&(&c(4) * &t) * &(&(&(&a * &t.pow(4)) - &(&c(9) * &(&b * &t.pow(2)))) - &(&c(6) * &a.pow(2)))) * &u),
        &c(4) * &(&b * &t.pow(6)),
        &a.pow(2) * &t.pow(4),
        -&(&c(18) * &(&a * &(&b * &t.pow(2)))),
        -&(&(&c(4) * &a.pow(3)) + &(&c(27) * &b.pow(2))),
    ];
    terms.iter().fold(MultiPoly::zero(), |acc, t| &acc + t)
}

/// The S3 right-hand side from first principles: the discriminant in `x`
/// of `(tx + u)² − (x³ + Ax + B)`.
pub fn s3_oracle() -> MultiPoly {
    let (a, b) = (v(Var::A), v(Var::B));
    let (t, u) = (v(Var::SMALL_T), v(Var::SMALL_U));
    // (tx + u)² − x³ − Ax − B = −x³ + t²x² + (2tu − A)x + (u² − B)
    cubic_discriminant_in(
        &c(-1),
        &t.pow(2),
        &(&(&c(2) * &(&t * &u)) - &a),
        &(&u.pow(2) - &b),
    )
}
