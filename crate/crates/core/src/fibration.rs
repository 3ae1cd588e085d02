//! The elliptic fibration `(U, D, T) ↦ T` of `S6(E)` for `E: y² = x³ + Ax + B`:
//!
//! `Y² = X³ − 27(p·X + q)²`, `p = 3T² + A`,
//! `q = 4(27AT⁴ + 54BT³ + 18A²T² + 54ABT − A³ + 27B²)`,
//!
//! its sections `P∞` and `T₃`, the discriminant profile in `T`, and a
//! point-count check of the 3-isogeny to `Y² = X³ + (pX + 4g²)²`,
//! `g = T³ + AT + B`.
//!
//! Sections with irrational coordinates are checked through their squares
//! only, so everything stays over Q.

use serde::Serialize;

use crate::algebra::mpoly::mp::{c, r, v};
use crate::algebra::{cubic_discriminant_in, MultiPoly, Rational, UniPoly, Var};
use crate::curve::CurveModel;
use crate::s6::S6Point;
use crate::Error;

/// The Weierstrass model of the fibration for fixed `(A, B)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FibrationModel {
    #[serde(rename = "A")]
    pub a: Rational,
    #[serde(rename = "B")]
    pub b: Rational,
    pub p: UniPoly,
    pub q: UniPoly,
}

/// `p`, `q` and `g = T³ + AT + B` as polynomials in `A, B, T`.
pub fn symbolic_pqg() -> (MultiPoly, MultiPoly, MultiPoly) {
    let (a, b, t) = (v(Var::A), v(Var::B), v(Var::T));
    let p = &(&c(3) * &t.pow(2)) + &a;
    let inner = [
        &c(27) * &(&a * &t.pow(4)),
        &c(54) * &(&b * &t.pow(3)),
        &c(18) * &(&a.pow(2) * &t.pow(2)),
        &c(54) * &(&a * &(&b * &t)),
        -&a.pow(3),
        &c(27) * &b.pow(2),
    ]
    .iter()
    .fold(MultiPoly::zero(), |acc, x| &acc + x);
    let q = &c(4) * &inner;
    let g = &(&t.pow(3) + &(&a * &t)) + &b;
    (p, q, g)
}

/// `−12(3AT² + 9BT − A²)`, the X-coordinate of `P∞`.
fn p_inf_x() -> MultiPoly {
    let (a, b, t) = (v(Var::A), v(Var::B), v(Var::T));
    &c(-12) * &(&(&(&c(3) * &(&a * &t.pow(2))) + &(&c(9) * &(&b * &t))) - &a.pow(2))
}

/// The fibration of `y² = x³ + Ax + B`.
pub fn build_fibration(a: &Rational, b: &Rational) -> Result<FibrationModel, Error> {
    CurveModel::weierstrass(a.clone(), b.clone())?;
    let (p, q, _) = symbolic_pqg();
    let at = |m: &MultiPoly| m.eval_partial(&[(Var::A, a.clone()), (Var::B, b.clone())]).to_upoly(Var::T);
    Ok(FibrationModel { a: a.clone(), b: b.clone(), p: at(&p)?, q: at(&q)? })
}

impl FibrationModel {
    /// `T³ + AT + B`.
    pub fn g(&self) -> UniPoly {
        UniPoly::new(vec![self.b.clone(), self.a.clone(), Rational::zero(), Rational::one()])
    }

    /// `(a₂, a₁, a₀) = (−27p², −54pq, −27q²)` of `Y² = X³ + a₂X² + a₁X + a₀`.
    pub fn coefficients(&self) -> [UniPoly; 3] {
        let k = |n: i64| Rational::from(n);
        [
            (&self.p * &self.p).scale(&k(-27)),
            (&self.p * &self.q).scale(&k(-54)),
            (&self.q * &self.q).scale(&k(-27)),
        ]
    }

    /// Discriminant of the right-hand side in `X`, as a polynomial in `T`.
    pub fn discriminant(&self) -> UniPoly {
        let [a2, a1, a0] = self.coefficients();
        cubic_discriminant_in(&UniPoly::constant(Rational::one()), &a2, &a1, &a0)
    }

    /// The fiber over `T = t0`.
    pub fn specialize(&self, t0: &Rational) -> Result<CurveModel, Error> {
        let [a2, a1, a0] = self.coefficients();
        CurveModel::new(Rational::one(), a2.eval(t0), a1.eval(t0), a0.eval(t0))
            .map_err(|_| Error::SingularFiber(t0.clone()))
    }

    /// The fiber over `T = t0` of `Y² = X³ + (pX + 4g²)²`.
    pub fn isogenous_fiber(&self, t0: &Rational) -> Result<CurveModel, Error> {
        let p = self.p.eval(t0);
        let g = self.g().eval(t0);
        let g2 = &g * &g;
        let a2 = &p * &p;
        let a1 = Rational::from(8) * &p * &g2;
        let a0 = Rational::from(16) * &g2 * &g2;
        CurveModel::new(Rational::one(), a2, a1, a0).map_err(|_| Error::SingularFiber(t0.clone()))
    }

    fn check_chart(&self, t: &Rational) -> Result<Rational, Error> {
        if t.is_zero() {
            return Err(Error::ChartBoundary);
        }
        let g = self.g().eval(t);
        if g.is_zero() {
            return Err(Error::SingularFiber(t.clone()));
        }
        Ok(g)
    }

    /// `(U, D)` on the surface fiber over `T` to `(X, Y)`:
    /// `X = 36gU/T − 12(3AT² + 9BT − A²)`, `Y = 108gD/T`.
    pub fn to_xy(&self, p: &S6Point) -> Result<(Rational, Rational), Error> {
        let g = self.check_chart(&p.t)?;
        let shift = self.p_inf_x(&p.t);
        let x = &(&Rational::from(36) * &g * &p.u / &p.t) + &shift;
        let y = Rational::from(108) * &g * &p.d / &p.t;
        Ok((x, y))
    }

    /// The inverse of [`FibrationModel::to_xy`].
    pub fn to_ud(&self, x: &Rational, y: &Rational, t: &Rational) -> Result<S6Point, Error> {
        let g = self.check_chart(t)?;
        let shift = self.p_inf_x(t);
        let u = &(x - &shift) * t / (Rational::from(36) * &g);
        let d = y * t / (Rational::from(108) * &g);
        Ok(S6Point::new(u, d, t.clone()))
    }

    /// `Y² − X³ + 27(pX + q)²` at `T = t`.
    pub fn residual(&self, x: &Rational, y: &Rational, t: &Rational) -> Rational {
        let inner = &(&self.p.eval(t) * x) + &self.q.eval(t);
        y * y - &(x * x * x) + Rational::from(27) * &inner * &inner
    }

    fn p_inf_x(&self, t: &Rational) -> Rational {
        p_inf_x()
            .eval(&[(Var::A, self.a.clone()), (Var::B, self.b.clone()), (Var::T, t.clone())])
            .expect("assigned")
    }
}

/// Result of an exact identity check, with what was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    /// Terms left over; empty when the identity holds.
    pub remainder: String,
}

impl IdentityCheck {
    fn zero(name: &'static str, m: &MultiPoly) -> Self {
        IdentityCheck { name, holds: m.is_zero(), remainder: if m.is_zero() { String::new() } else { m.to_string() } }
    }
}

fn specialize(m: &MultiPoly, ab: Option<(&Rational, &Rational)>) -> MultiPoly {
    match ab {
        Some((a, b)) => m.eval_partial(&[(Var::A, a.clone()), (Var::B, b.clone())]),
        None => m.clone(),
    }
}

/// The section `T₃ = (0, 12√−3·(−q/4))` has order 3: `ψ₃(0) = 4a₂a₀ − a₁²`
/// vanishes, and `Y(T₃)² = 144·(−3)·(q/4)² = −27q²` matches the curve at
/// `X = 0`. With `None` the identities are checked in `A, B, T`.
pub fn check_t3_torsion(ab: Option<(&Rational, &Rational)>) -> Vec<IdentityCheck> {
    let (p, q, _) = symbolic_pqg();
    let (a2, a1, a0) = (&c(-27) * &p.pow(2), &c(-54) * &(&p * &q), &c(-27) * &q.pow(2));
    let psi3 = &(&c(4) * &(&a2 * &a0)) - &a1.pow(2);
    let y2 = &c(-3 * 144) * &(&q * &r(&Rational::new(1, 4))).pow(2);
    let on_curve = &y2 - &a0;
    vec![
        IdentityCheck::zero("psi3(0) = 4*a2*a0 - a1^2 = 0", &specialize(&psi3, ab)),
        IdentityCheck::zero("Y(T3)^2 = -27*q^2", &specialize(&on_curve, ab)),
    ]
}

/// `P∞ = (−12(3AT² + 9BT − A²), 108√(−4A³ − 27B²)·g)` lies on the curve:
/// `X³ − 27(pX + q)² − Y²` vanishes with `Y²` substituted formally.
pub fn check_p_inf_on_curve(ab: Option<(&Rational, &Rational)>) -> IdentityCheck {
    let (p, q, g) = symbolic_pqg();
    let (a, b) = (v(Var::A), v(Var::B));
    let x = p_inf_x();
    let y2 = &(&c(108 * 108) * &(&(&c(-4) * &a.pow(3)) - &(&c(27) * &b.pow(2)))) * &g.pow(2);
    let rhs = &x.pow(3) - &(&c(27) * &(&(&p * &x) + &q).pow(2));
    IdentityCheck::zero("X^3 - 27(pX+q)^2 - Y^2 = 0 at P_inf", &specialize(&(&rhs - &y2), ab))
}

/// A factor of the discriminant and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberLocus {
    pub locus: UniPoly,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberProfile {
    /// Monic square-free factors with their multiplicities.
    pub loci: Vec<FiberLocus>,
    pub disc_degree: u32,
    /// `24 − deg Δ`.
    pub at_infinity: u32,
    /// The loci are `q` (degree 4, multiplicity 3) and `g` (multiplicity 2).
    pub generic: bool,
}

/// Discriminant multiplicities of the fibration in `T`, including `∞`.
pub fn fiber_profile(a: &Rational, b: &Rational) -> Result<FiberProfile, Error> {
    let m = build_fibration(a, b)?;
    let disc = m.discriminant();
    let deg = disc.degree().ok_or_else(|| Error::Inconsistency("zero discriminant".into()))? as u32;
    if deg > 24 {
        return Err(Error::Inconsistency(format!("discriminant of degree {deg}")));
    }
    let loci: Vec<FiberLocus> = disc
        .squarefree_decomposition()?
        .factors
        .into_iter()
        .map(|(locus, multiplicity)| FiberLocus { locus, multiplicity })
        .collect();
    let expected = [(m.q.monic(), 3), (m.g(), 2)];
    let generic = m.q.degree() == Some(4)
        && loci.len() == 2
        && expected.iter().all(|(f, k)| loci.iter().any(|l| l.locus == *f && l.multiplicity == *k));
    Ok(FiberProfile { loci, disc_degree: deg, at_infinity: 24 - deg, generic })
}

/// Point counts of two fibers over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointCount {
    pub prime: u64,
    pub domain: u64,
    pub codomain: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsogenyCheck {
    pub t0: Rational,
    pub counts: Vec<PointCount>,
    /// Primes of bad reduction for either curve, not used.
    pub skipped: Vec<u64>,
    /// All used primes agree (and at least one was used). A consistency
    /// check, not a proof of isogeny.
    pub agree: bool,
}

/// Compare `#E(F_p)` for two curves over the listed primes.
pub fn compare_point_counts(t0: &Rational, e1: &CurveModel, e2: &CurveModel, primes: &[u64]) -> IsogenyCheck {
    let mut counts = Vec::new();
    let mut skipped = Vec::new();
    for &prime in primes {
        match (e1.count_points_mod(prime), e2.count_points_mod(prime)) {
            (Some(domain), Some(codomain)) => counts.push(PointCount { prime, domain, codomain }),
            _ => skipped.push(prime),
        }
    }
    let agree = !counts.is_empty() && counts.iter().all(|c| c.domain == c.codomain);
    IsogenyCheck { t0: t0.clone(), counts, skipped, agree }
}

/// The fiber over `T₀` and its 3-isogenous partner have the same number of
/// points over `F_p` for each good prime in `primes`.
pub fn isogeny_pointcount_check(a: &Rational, b: &Rational, t0: &Rational, primes: &[u64]) -> Result<IsogenyCheck, Error> {
    let m = build_fibration(a, b)?;
    Ok(compare_point_counts(t0, &m.specialize(t0)?, &m.isogenous_fiber(t0)?, primes))
}

/// Everything the `fibration check` command reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FibrationRecord {
    pub model: FibrationModel,
    pub t3_torsion: Vec<IdentityCheck>,
    pub p_inf_on_curve: IdentityCheck,
    pub profile: FiberProfile,
    pub isogeny: Option<IsogenyCheck>,
}

impl FibrationRecord {
    pub fn all_hold(&self) -> bool {
        self.t3_torsion.iter().all(|c| c.holds)
            && self.p_inf_on_curve.holds
            && self.isogeny.as_ref().is_none_or(|i| i.agree)
    }
}

pub fn fibration_record(a: &Rational, b: &Rational, isogeny: Option<(&Rational, &[u64])>) -> Result<FibrationRecord, Error> {
    let model = build_fibration(a, b)?;
    Ok(FibrationRecord {
        t3_torsion: check_t3_torsion(Some((a, b))),
        p_inf_on_curve: check_p_inf_on_curve(Some((a, b))),
        profile: fiber_profile(a, b)?,
        isogeny: isogeny.map(|(t0, primes)| isogeny_pointcount_check(a, b, t0, primes)).transpose()?,
        model,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::s6::{s6_model, to_short_weierstrass};

    #[test]
    fn coefficients_at_zero_one() {
        let m = build_fibration(&q(0, 1), &q(1, 1)).unwrap();
        assert_eq!(m.q.eval(&q(0, 1)), q(108, 1));
        assert_eq!(m.p, UniPoly::from_ints(&[0, 0, 3]));
        let m = build_fibration(&q(-1, 1), &q(0, 1)).unwrap();
        assert_eq!(m.q, UniPoly::from_ints(&[4, 0, 72, 0, -108]));
        assert!(build_fibration(&q(-3, 1), &q(2, 1)).is_err());
    }

    #[test]
    fn sections_symbolic() {
        assert!(check_t3_torsion(None).iter().all(|c| c.holds));
        assert!(check_p_inf_on_curve(None).holds);
    }

    #[test]
    fn change_of_variables() {
        let e11 = CurveModel::new(q(1, 1), q(1, 1), q(-2, 1), q(1, 1)).unwrap();
        let (short, p) = to_short_weierstrass(&e11, &S6Point::new(q(10, 1), q(27, 1), q(1, 1))).unwrap();
        let (a, b) = short.short_coefficients().unwrap();
        let m = build_fibration(&a, &b).unwrap();
        let (x, y) = m.to_xy(&p).unwrap();
        assert!(m.residual(&x, &y, &p.t).is_zero());
        let back = m.to_ud(&x, &y, &p.t).unwrap();
        assert_eq!(back, p);
        assert!(s6_model(&short).contains(&back));
        // D = 0 goes to Y = 0
        let (_, y0) = m.to_xy(&S6Point::new(q(1, 1), q(0, 1), q(2, 1))).unwrap();
        assert!(y0.is_zero());
        // T = 1 is a root of T³ − T
        let m = build_fibration(&q(-1, 1), &q(0, 1)).unwrap();
        assert_eq!(m.to_ud(&q(0, 1), &q(0, 1), &q(1, 1)), Err(Error::SingularFiber(q(1, 1))));
    }

    #[test]
    fn profiles() {
        let p = fiber_profile(&q(-1, 1), &q(0, 1)).unwrap();
        assert!(p.generic);
        assert_eq!(p.disc_degree, 18);
        assert_eq!(p.at_infinity, 6);
        // A = 0: the quartic locus drops to degree 3
        let p = fiber_profile(&q(0, 1), &q(1, 1)).unwrap();
        assert!(!p.generic);
        assert_eq!(p.at_infinity, 9);
        assert_eq!(p.loci.iter().map(|l| l.multiplicity * l.locus.degree().unwrap() as u32).sum::<u32>(), 15);
    }

    #[test]
    fn isogeny_counts() {
        let c = isogeny_pointcount_check(&q(0, 1), &q(1, 1), &q(2, 1), &[5, 7, 11, 13]).unwrap();
        assert!(c.agree, "{c:?}");
        let c = isogeny_pointcount_check(&q(-1, 1), &q(0, 1), &q(3, 1), &[7, 11, 13]).unwrap();
        assert!(c.agree, "{c:?}");
    }

    #[test]
    fn perturbed_codomain_disagrees() {
        let (a, b, t0) = (q(0, 1), q(1, 1), q(2, 1));
        let m = build_fibration(&a, &b).unwrap();
        let e2 = m.isogenous_fiber(&t0).unwrap();
        let bad = CurveModel::new(e2.c.clone(), e2.a2.clone(), e2.a1.clone(), &e2.a0 + &q(1, 1)).unwrap();
        let c = compare_point_counts(&t0, &m.specialize(&t0).unwrap(), &bad, &[5, 7, 11, 13, 17, 19, 23]);
        assert!(!c.agree, "{c:?}");
    }
}
