//! Three parametrized families of rational points on `S6(E)`, each with
//! closed-form cubics and conductor data.

mod e160b1;
mod e2cyclic;
mod isog3;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::Rational;
use crate::curve::CurveModel;
use crate::s6::{point_to_sextic_field, S6Point, SexticConstruction};
use crate::Error;

pub use e160b1::{e160b1_curve, e160b1_point, e160b1_ramification, f_mn, f_mn_display, Ramification};
pub use e2cyclic::{
    e2cyclic_2p_point, e2cyclic_2p_u, e2cyclic_curve, e2cyclic_model, e2cyclic_surface_display, e2cyclic_y_class,
    E2CyclicModel,
};
pub use isog3::{isog3_conductors, isog3_cubic, isog3_curve, isog3_point, isog3_point_raw, ConductorData};

use isog3::{check_mn, is_squarefree, primes_of};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Isog3,
    E160b1,
    E2cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EisensteinOutcome {
    Eisenstein,
    ReverseEisenstein,
    Neither,
}

/// Eisenstein test at `prime` on the primitive integral associate of `p`,
/// then on its reversal.
pub fn eisenstein_check(p: &crate::algebra::UniPoly, prime: &BigInt) -> EisensteinOutcome {
    use crate::numfield::is_eisenstein;
    let (_, mut c) = p.primitive_integral();
    if is_eisenstein(&c, prime) {
        return EisensteinOutcome::Eisenstein;
    }
    c.reverse();
    if is_eisenstein(&c, prime) {
        EisensteinOutcome::ReverseEisenstein
    } else {
        EisensteinOutcome::Neither
    }
}

/// A family point with its construction (or the degenerate diagnostic).
#[derive(Clone, Debug, Serialize)]
pub struct FamilyRecord {
    pub family: Family,
    pub parameters: BTreeMap<&'static str, String>,
    pub curve: CurveModel,
    pub s6point: S6Point,
    pub construction: Option<SexticConstruction>,
    pub diagnostic: Option<String>,
    pub conductor: ConductorData,
}

impl FamilyRecord {
    fn build(
        family: Family,
        parameters: BTreeMap<&'static str, String>,
        curve: CurveModel,
        s6point: S6Point,
        conductor: impl FnOnce(Option<&SexticConstruction>) -> ConductorData,
    ) -> Result<Self, Error> {
        let (construction, diagnostic) = match point_to_sextic_field(&curve, &s6point) {
            Ok(c) => (Some(c), None),
            Err(e) if e.is_degenerate() => (None, Some(e.to_string())),
            Err(e) => return Err(e),
        };
        let conductor = conductor(construction.as_ref());
        Ok(FamilyRecord { family, parameters, curve, s6point, construction, diagnostic, conductor })
    }

    pub fn is_degenerate(&self) -> bool {
        self.construction.is_none()
    }
}

fn params<const N: usize>(kv: [(&'static str, String); N]) -> BTreeMap<&'static str, String> {
    kv.into_iter().collect()
}

pub fn isog3_record(a: i64, b: i64, m: i64, n: i64) -> Result<FamilyRecord, Error> {
    let p = isog3_point(a, b, m, n)?;
    let params = params([("a", a.to_string()), ("b", b.to_string()), ("m", m.to_string()), ("n", n.to_string())]);
    FamilyRecord::build(Family::Isog3, params, isog3_curve(a, b)?, p, |_| isog3_conductors(a, b, m, n))
}

/// Surface labels `(m, n)`; the cubic conductor is `3m² + n²` and the
/// quadratic class that of `−(3m² + n²)(25m² + 9n²)`, up to 2, 3, 5.
pub fn e160b1_record(m: i64, n: i64) -> Result<FamilyRecord, Error> {
    check_mn(m, n)?;
    let p = e160b1_point(m, n)?;
    let (mb, nb) = (BigInt::from(m), BigInt::from(n));
    let cubic: BigInt = 3 * &mb * &mb + &nb * &nb;
    let other: BigInt = 25 * &mb * &mb + 9 * &nb * &nb;
    let form = -(&cubic * &other);
    let quad = crate::algebra::squarefree_part(&Rational::from(form))?;
    let product = &cubic * &quad;
    let data = ConductorData {
        squarefree: is_squarefree(&product),
        ambiguous_support: [2, 3, 5].map(BigInt::from).to_vec(),
        cubic_conductor: cubic,
        quad_disc: quad,
        product,
    };
    FamilyRecord::build(Family::E160b1, params([("m", m.to_string()), ("n", n.to_string())]), e160b1_curve(), p, |_| data)
}

/// Conductor data from the construction: the certified part of the cubic
/// conductor and the quadratic class.
pub fn e2cyclic_record(b: &Rational, c: &Rational, t0: &Rational) -> Result<FamilyRecord, Error> {
    let p = e2cyclic_2p_point(b, c, t0)?;
    let params = params([("b", b.to_string()), ("c", c.to_string()), ("T", t0.to_string())]);
    FamilyRecord::build(Family::E2cyclic, params, e2cyclic_curve(b, c)?, p, |con| match con {
        Some(con) => {
            let product = &con.conductor.determined * &con.delta;
            let mut amb = con.conductor.ambiguous_support.clone();
            for q in primes_of(&con.delta) {
                if q <= BigInt::from(3) && !amb.contains(&q) {
                    amb.push(q);
                }
            }
            amb.sort();
            ConductorData {
                squarefree: is_squarefree(&product),
                ambiguous_support: amb,
                cubic_conductor: con.conductor.determined.clone(),
                quad_disc: con.delta.clone(),
                product,
            }
        }
        None => ConductorData {
            cubic_conductor: BigInt::from(1),
            quad_disc: BigInt::from(1),
            product: BigInt::from(1),
            squarefree: true,
            ambiguous_support: Vec::new(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, UniPoly};

    #[test]
    fn eisenstein_examples() {
        assert_eq!(eisenstein_check(&isog3_cubic(2, 1), &BigInt::from(7)), EisensteinOutcome::Eisenstein);
        assert_eq!(eisenstein_check(&UniPoly::from_ints(&[-2, 0, 0, 1]), &BigInt::from(2)), EisensteinOutcome::Eisenstein);
        // 3·3² + 25·1 = 52 = 4·13
        assert_eq!(eisenstein_check(&f_mn(3, 1), &BigInt::from(13)), EisensteinOutcome::ReverseEisenstein);
        assert_eq!(eisenstein_check(&f_mn(3, 1), &BigInt::from(7)), EisensteinOutcome::Neither);
    }

    #[test]
    fn records() {
        let r = isog3_record(1, 1, 2, 1).unwrap();
        assert_eq!(r.construction.as_ref().unwrap().delta, BigInt::from(67));
        let r = e160b1_record(3, 5).unwrap();
        assert_eq!(r.conductor.quad_disc, BigInt::from(-26));
        assert_eq!(r.construction.as_ref().unwrap().conductor.determined, BigInt::from(13));
        let r = e2cyclic_record(&q(1, 1), &q(1, 1), &q(2, 1)).unwrap();
        assert_eq!(r.family, Family::E2cyclic);
    }
}
