//! Which of the four Galois behaviours a pair `(P, Q)` has: the Galois
//! generator acts on the pair as some `ρⁱ`, and the order of `ρⁱ` is the
//! degree of the field of definition of the pair.

use std::fmt;

use serde::Serialize;

use crate::curve::{CurveModel, PairPoint, Point};
use crate::numfield::{Automorphism, FieldElement};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrbitCase {
    /// Both points rational.
    #[serde(rename = "i")]
    I,
    /// Quadratic: the generator acts as `ρ³`, `(P, Q) ↦ (−P, −Q)`.
    #[serde(rename = "ii")]
    II,
    /// Cyclic cubic: the generator acts as `ρ²`, `(P, Q) ↦ (Q − P, −P)`.
    #[serde(rename = "iii")]
    III,
    /// Cyclic sextic: the generator acts as `ρ`, `P ↦ Q ↦ Q − P`.
    #[serde(rename = "iv")]
    IV,
}

impl OrbitCase {
    fn from_rho_order(order: u32) -> Self {
        match order {
            1 => OrbitCase::I,
            2 => OrbitCase::II,
            3 => OrbitCase::III,
            _ => OrbitCase::IV,
        }
    }
}

impl fmt::Display for OrbitCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitCase::I => "i",
            OrbitCase::II => "ii",
            OrbitCase::III => "iii",
            OrbitCase::IV => "iv",
        })
    }
}

/// The `i` with `g(P, Q) = ρⁱ(P, Q)`, if any (smallest when the pair has a
/// nontrivial stabilizer).
pub fn rho_index<F: FieldElement, G: Automorphism<F>>(e: &CurveModel, pair: &PairPoint<F>, g: &G) -> Option<u32> {
    let image = PairPoint::new(pair.first.map(|c| g.apply(c)), pair.second.map(|c| g.apply(c)));
    let mut cur = pair.clone();
    for i in 0..6 {
        if cur == image {
            return Some(i);
        }
        cur = e.rho(&cur);
    }
    None
}

/// Case of a pair whose field of definition has Galois group generated by
/// `g`.
pub fn classify_pair<F: FieldElement, G: Automorphism<F>>(e: &CurveModel, pair: &PairPoint<F>, g: &G) -> Option<OrbitCase> {
    rho_index(e, pair, g).map(|i| OrbitCase::from_rho_order(6 / num_integer::gcd(i, 6)))
}

/// Classify the pair `(P, g(P))` for each candidate generator `g` in turn;
/// the first generator acting as a power of `ρ` decides. Returns the case
/// and the generator used.
pub fn classify_orbit<F, G>(e: &CurveModel, p: &Point<F>, generators: &[G]) -> Result<(OrbitCase, G), Error>
where
    F: FieldElement,
    G: Automorphism<F> + Clone,
{
    for g in generators {
        let pair = PairPoint::new(p.clone(), p.map(|c| g.apply(c)));
        if let Some(case) = classify_pair(e, &pair, g) {
            return Ok((case, g.clone()));
        }
    }
    Err(Error::ClassificationFailure)
}

/// The case of a pipeline construction, recomputed from its point with the
/// generators ϱ and ϱ⁵.
pub fn orbit_classifier(c: &super::SexticConstruction) -> Result<OrbitCase, Error> {
    use crate::numfield::RhoPower;
    classify_orbit(&c.curve, &c.point, &[RhoPower(1), RhoPower(5)]).map(|(case, _)| case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, Rational, UniPoly};
    use crate::numfield::{CyclicCubicField, Identity, RhoPower, SexticElement, SexticField};

    #[test]
    fn rational_point_is_case_one() {
        let e = CurveModel::weierstrass(q(0, 1), q(-2, 1)).unwrap();
        let p = Point::affine(q(3, 1), q(5, 1));
        let (case, _) = classify_orbit::<Rational, _>(&e, &p, &[Identity]).unwrap();
        assert_eq!(case, OrbitCase::I);
    }

    #[test]
    fn quadratic_point_is_case_two() {
        // (1, √2) on y² = x³ + 1
        let e = CurveModel::weierstrass(q(0, 1), q(1, 1)).unwrap();
        let k3 = CyclicCubicField::new(&UniPoly::from_ints(&[1, -3, 0, 1])).unwrap();
        let k6 = SexticField::new(&k3, 2).unwrap();
        let p = Point::affine(SexticElement::from_rational(&k6, &q(1, 1)), SexticElement::sqrt_delta(&k6));
        assert!(e.contains(&p));
        let (case, _) = classify_orbit(&e, &p, &[RhoPower(1), RhoPower(5)]).unwrap();
        assert_eq!(case, OrbitCase::II);
    }

    #[test]
    fn cubic_pair_is_case_three() {
        // y² = x³ − 3x + 5 meets y = 2 where α³ − 3α + 1 = 0
        let e = CurveModel::weierstrass(q(-3, 1), q(5, 1)).unwrap();
        let k3 = CyclicCubicField::new(&UniPoly::from_ints(&[1, -3, 0, 1])).unwrap();
        let a = crate::numfield::CubicElement::alpha(&k3);
        let p = Point::affine(a.clone(), a.embed(&q(2, 1)));
        assert!(e.contains(&p));
        let sigma = crate::numfield::Sigma;
        let pair = PairPoint::new(p.clone(), e.add(&p, &p.map(|c| sigma.apply(c))));
        assert_eq!(classify_pair(&e, &pair, &sigma), Some(OrbitCase::III));
    }
}
