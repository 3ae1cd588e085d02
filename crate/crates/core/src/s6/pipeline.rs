//! From a rational point of `S6(E)` to a point of `E` over a cyclic sextic
//! field, with its Galois orbit and certificates.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::Serializer;
use serde::Serialize;

use crate::algebra::{squarefree_part, Rational, UniPoly};
use crate::curve::{is_probably_infinite_order, CurveModel, InfiniteOrderCertificate, Point};
use crate::numfield::{
    cubic_conductor_heuristic, ConductorReport, CubicElement, CyclicCubicField, FieldElement, RhoPower, SexticElement,
    SexticField,
};
use crate::Error;

use super::orbit::{classify_orbit, OrbitCase};
use super::surface::{intersection_cubic, s6_model, S6Point};

/// Checks run on every construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub cubic_irreducible: bool,
    pub disc_square: bool,
    pub on_curve: bool,
    /// `Σ ϱᵏ(P) = O` over `k < 6`.
    pub trace_zero: bool,
    /// `ϱ³(P) = −P`.
    pub rho_cubed_negates: bool,
    /// `P + ϱ²(P) + ϱ⁴(P) = O`: the three points on the line `L`.
    pub collinear_trace_zero: bool,
    /// The six conjugates are distinct.
    pub orbit_distinct: bool,
    pub infinite_order_heuristic: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.cubic_irreducible
            && self.disc_square
            && self.on_curve
            && self.trace_zero
            && self.rho_cubed_negates
            && self.collinear_trace_zero
            && self.orbit_distinct
            && self.infinite_order_heuristic
    }
}

/// The output of [`point_to_sextic_field`].
#[derive(Clone, Debug)]
pub struct SexticConstruction {
    pub curve: CurveModel,
    pub input: S6Point,
    /// `T·g − c·U(x − T)²`, primitive integral with positive leading coefficient.
    pub cubic: UniPoly,
    /// `K3 = Q(α)` with `α = λ·x` a root of the monic integral `f`; this is `λ`.
    pub scale: Rational,
    pub k3: Arc<CyclicCubicField>,
    pub conductor: ConductorReport,
    pub delta: BigInt,
    pub k6: Arc<SexticField>,
    pub point: Point<SexticElement>,
    /// `ϱᵏ(P)` for `k = 0..6`.
    pub orbit: Vec<Point<SexticElement>>,
    pub certificates: Certificates,
    pub infinite_order: InfiniteOrderCertificate,
    pub orbit_case: OrbitCase,
    /// `1` or `5`: the power of ϱ realizing `g(P) = Q`, `g(Q) = Q − P`.
    pub generator_power: u32,
}

/// Build `K3`, `K6 = K3(√δ)` and the point `P ∈ E(K6)` from `(U, D, T)`.
///
/// The x-coordinates of `E ∩ C_L` are the roots of `T·g − c·U(x − T)²`; on
/// `C_L`, `y² = (U/T)(x − T)²`, so `δ` is the square class of `U·T`.
pub fn point_to_sextic_field(e: &CurveModel, p: &S6Point) -> Result<SexticConstruction, Error> {
    if p.t.is_zero() {
        return Err(Error::ChartBoundary);
    }
    let residual = s6_model(e).residual(p)?;
    if !residual.is_zero() {
        return Err(Error::NotOnSurface { residual });
    }
    if p.u.is_zero() {
        return Err(Error::DegenerateLine);
    }
    let h = intersection_cubic(e, &p.t, &p.u).primitive();
    if let Some(root) = h.rational_roots().into_iter().next() {
        return Err(Error::DegenerateRational { root });
    }
    let disc = h.cubic_discriminant()?;
    let disc_square = disc.sqrt().is_some() && !disc.is_zero();
    let ut = &p.u * &p.t;
    let delta = squarefree_part(&ut)?;
    if delta.is_one() {
        return Err(Error::DegenerateCubic);
    }

    let scale = h.coeff(3);
    let f = crate::numfield::monic_integral(&h);
    let k3 = CyclicCubicField::with_models(&f, &[h.clone()])?;
    let conductor = cubic_conductor_heuristic(&k3);
    let k6 = SexticField::new(&k3, delta.clone())?;

    // x = α/λ, y = r·(x − T)·√δ with r² = U/(Tδ)
    let x3 = CubicElement::alpha(&k3).scale(&scale.inv().expect("cubic"));
    let r2 = &ut / &(&(&p.t * &p.t) * &Rational::from(&delta));
    let r = r2.sqrt().ok_or_else(|| Error::Inconsistency(format!("U/(Tδ) = {r2} is not a square")))?;
    let yb = x3.sub(&x3.embed(&p.t)).scale(&r);
    let x = SexticElement::from_cubic(&k6, x3);
    let y = SexticElement::new(&k6, yb.zero_like(), yb);
    let point = Point::affine(x, y);
    let on_curve = e.contains(&point);
    if !on_curve {
        return Err(Error::Inconsistency("lifted point is not on the curve".into()));
    }

    let mut orbit = vec![point.clone()];
    for k in 1..6 {
        orbit.push(orbit[k - 1].map(|c| c.rho()));
    }
    let trace = orbit.iter().fold(Point::Infinity, |acc, q| e.add(&acc, q));
    let rho_cubed_negates = orbit[3] == e.neg(&point);
    let collinear = e.add(&e.add(&orbit[0], &orbit[2]), &orbit[4]);
    let orbit_distinct = (0..6).all(|i| (i + 1..6).all(|j| orbit[i] != orbit[j]));
    let infinite_order = is_probably_infinite_order(e, &point);
    let (orbit_case, generator_power) = classify_orbit(e, &point, &[RhoPower(1), RhoPower(5)])?;

    let certificates = Certificates {
        cubic_irreducible: true,
        disc_square,
        on_curve,
        trace_zero: trace.is_infinity(),
        rho_cubed_negates,
        collinear_trace_zero: collinear.is_infinity(),
        orbit_distinct,
        infinite_order_heuristic: infinite_order.verdict,
    };
    Ok(SexticConstruction {
        curve: e.clone(),
        input: p.clone(),
        cubic: h,
        scale,
        k3,
        conductor,
        delta,
        k6,
        point,
        orbit,
        certificates,
        infinite_order,
        orbit_case,
        generator_power: generator_power.0,
    })
}

impl SexticConstruction {
    /// The machine-readable record.
    pub fn record(&self) -> ConstructionRecord<'_> {
        let comps = |e: &SexticElement| -> Vec<String> {
            e.a().coeffs().iter().chain(e.b().coeffs()).map(|c| c.to_string()).collect()
        };
        let point = match &self.point {
            Point::Affine { x, y } => Some(PointRecord { x: comps(x), y: comps(y) }),
            Point::Infinity => None,
        };
        ConstructionRecord {
            curve: &self.curve,
            input_point: &self.input,
            cubic: &self.cubic,
            k3: K3Record {
                f: self.k3.f(),
                disc: self.k3.disc(),
                conductor_determined: self.conductor.determined.to_string(),
                conductor_ambiguous_support: self.conductor.ambiguous_support.iter().map(|p| p.to_string()).collect(),
            },
            delta: self.delta.to_string(),
            point,
            certificates: &self.certificates,
            infinite_order: &self.infinite_order,
            orbit_case: self.orbit_case,
            generator: format!("rho^{}", self.generator_power),
        }
    }
}

impl Serialize for SexticConstruction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.record().serialize(s)
    }
}

#[derive(Serialize)]
pub struct ConstructionRecord<'a> {
    pub curve: &'a CurveModel,
    pub input_point: &'a S6Point,
    pub cubic: &'a UniPoly,
    pub k3: K3Record<'a>,
    pub delta: String,
    pub point: Option<PointRecord>,
    pub certificates: &'a Certificates,
    pub infinite_order: &'a InfiniteOrderCertificate,
    pub orbit_case: OrbitCase,
    pub generator: String,
}

#[derive(Serialize)]
pub struct K3Record<'a> {
    pub f: &'a UniPoly,
    pub disc: &'a Rational,
    pub conductor_determined: String,
    pub conductor_ambiguous_support: Vec<String>,
}

/// Coordinates as `[a₀, a₁, a₂, b₀, b₁, b₂]` for `a + b√δ`, `a, b ∈ K3`.
#[derive(Serialize)]
pub struct PointRecord {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn e160() -> CurveModel {
        CurveModel::new(q(1, 1), q(-4, 1), q(-1, 1), q(0, 1)).unwrap()
    }

    #[test]
    fn e160b1_at_three_five() {
        let c = point_to_sextic_field(&e160(), &S6Point::new(q(5, 4), q(235, 2704), q(-5, 26))).unwrap();
        assert_eq!(c.delta, BigInt::from(-26));
        assert_eq!(c.conductor.determined, BigInt::from(13));
        assert!(c.certificates.all(), "{:?}", c.certificates);
        assert_eq!(c.orbit_case, OrbitCase::IV);
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["delta"], "-26");
        assert_eq!(json["orbit_case"], "iv");
        assert_eq!(json["input_point"]["D"], "235/2704");
    }

    #[test]
    fn isog3_two_one() {
        let e11 = CurveModel::new(q(1, 1), q(1, 1), q(-2, 1), q(1, 1)).unwrap();
        let c = point_to_sextic_field(&e11, &S6Point::new(q(67, 4), q(189, 2), q(1, 1))).unwrap();
        assert_eq!(c.delta, BigInt::from(67));
        assert_eq!(c.cubic, UniPoly::from_ints(&[-63, 126, -63, 4]));
        assert!(c.certificates.all());
    }

    #[test]
    fn diagnostics() {
        let e = CurveModel::weierstrass(q(0, 1), q(1, 1)).unwrap();
        let err = point_to_sextic_field(&e, &S6Point::new(q(1, 1), q(0, 1), q(1, 1))).unwrap_err();
        assert_eq!(err, Error::NotOnSurface { residual: q(28, 1) });
        let err = point_to_sextic_field(&e, &S6Point::new(q(1, 1), q(0, 1), q(0, 1))).unwrap_err();
        assert_eq!(err, Error::ChartBoundary);
    }
}
