//! Local ramification certificates for cyclic cubic fields.
//!
//! No maximal order is computed. Each prime dividing every model's
//! discriminant gets a certificate from one of the integral models:
//!
//! * a simple root mod `p` lifts to a `p`-adic root (Hensel), giving a prime
//!   above `p` with `e = 1`; in a Galois cubic every prime above `p` then
//!   has `e = 1`;
//! * a triple root `r` with `f(x + r)` Eisenstein, or a reversed model that
//!   is Eisenstein, gives total ramification;
//! * tame ramification in a cyclic cubic forces `p ≡ 1 (mod 3)`.
//!
//! 2 and 3 are never decided.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{factor, Rational, UniPoly};

use super::CyclicCubicField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeStatus {
    Unramified,
    Ramified,
    Ambiguous,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimeCertificate {
    #[serde(serialize_with = "crate::json::big")]
    pub prime: BigInt,
    pub status: PrimeStatus,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConductorReport {
    /// Product of certified ramified primes other than 2 and 3.
    #[serde(serialize_with = "crate::json::big")]
    pub determined: BigInt,
    #[serde(serialize_with = "crate::json::big_vec")]
    pub ramified: Vec<BigInt>,
    /// Primes that may or may not ramify.
    #[serde(serialize_with = "crate::json::big_vec")]
    pub ambiguous_support: Vec<BigInt>,
    pub certificates: Vec<PrimeCertificate>,
}

impl ConductorReport {
    /// Primes absent from the report do not divide the discriminant.
    pub fn status(&self, p: &BigInt) -> PrimeStatus {
        self.certificates
            .iter()
            .find(|c| &c.prime == p)
            .map_or(PrimeStatus::Unramified, |c| c.status)
    }
}

/// Conductor estimate of a cyclic cubic field: the determined part plus the
/// support of what could not be decided.
///
/// ```
/// use sextic::algebra::UniPoly;
/// use sextic::numfield::{cubic_conductor_heuristic, CyclicCubicField};
/// let k = CyclicCubicField::new(&UniPoly::from_ints(&[1, -4, 1, 1])).unwrap();
/// assert_eq!(cubic_conductor_heuristic(&k).determined, 13.into());
/// ```
pub fn cubic_conductor_heuristic(k: &CyclicCubicField) -> ConductorReport {
    let models: Vec<Vec<BigInt>> = k.integral_models().iter().map(|m| m.primitive_integral().1).collect();
    let mut g = BigInt::zero();
    for m in k.integral_models() {
        let d = m.cubic_discriminant().expect("cubic").to_integer().expect("integral model");
        g = g.gcd(&d);
    }
    let mut certificates = Vec::new();
    for (p, _) in factor(&g).expect("nonzero discriminant") {
        let p = BigInt::from(p);
        certificates.push(classify(&models, &p));
    }
    let ramified: Vec<BigInt> = certificates
        .iter()
        .filter(|c| c.status == PrimeStatus::Ramified)
        .map(|c| c.prime.clone())
        .collect();
    let determined = ramified.iter().fold(BigInt::one(), |acc, p| acc * p);
    let ambiguous_support = certificates
        .iter()
        .filter(|c| c.status == PrimeStatus::Ambiguous)
        .map(|c| c.prime.clone())
        .collect();
    ConductorReport { determined, ramified, ambiguous_support, certificates }
}

fn classify(models: &[Vec<BigInt>], p: &BigInt) -> PrimeCertificate {
    let cert = |status, reason: &str| PrimeCertificate { prime: p.clone(), status, reason: reason.to_string() };
    if *p == BigInt::from(2) || *p == BigInt::from(3) {
        return cert(PrimeStatus::Ambiguous, "2 and 3 are not decided");
    }
    let mut unram = None;
    let mut ram = None;
    for m in models {
        match local_pattern(m, p) {
            Local::SimpleRoot => unram = unram.or(Some("simple root mod p")),
            Local::Squarefree => unram = unram.or(Some("p does not divide a model discriminant")),
            Local::Eisenstein => ram = ram.or(Some("Eisenstein after shifting the triple root")),
            Local::ReverseEisenstein => ram = ram.or(Some("reverse Eisenstein")),
            Local::Unknown => {}
        }
    }
    match (unram, ram) {
        (Some(_), Some(_)) => cert(PrimeStatus::Ambiguous, "conflicting local certificates"),
        (Some(r), None) => cert(PrimeStatus::Unramified, r),
        (None, Some(r)) => cert(PrimeStatus::Ramified, r),
        (None, None) if p.mod_floor(&BigInt::from(3)) == BigInt::from(2) => {
            cert(PrimeStatus::Unramified, "p = 2 mod 3 cannot ramify in a cyclic cubic")
        }
        (None, None) => cert(PrimeStatus::Ambiguous, "no local certificate"),
    }
}

enum Local {
    Squarefree,
    SimpleRoot,
    Eisenstein,
    ReverseEisenstein,
    Unknown,
}

/// The reduction of a cubic (coefficients low to high) mod `p` is
/// square-free or has a simple root; for a cyclic cubic field either one
/// makes `p` unramified.
pub(crate) fn unramified_by_reduction(c: &[BigInt], p: &BigInt) -> bool {
    matches!(local_pattern(c, p), Local::Squarefree | Local::SimpleRoot)
}

/// Eisenstein at `p`: `p ∤ lead`, `p` divides the rest, `p² ∤` constant.
pub fn is_eisenstein(c: &[BigInt], p: &BigInt) -> bool {
    let n = c.len();
    if n < 2 {
        return false;
    }
    let div = |x: &BigInt| (x % p).is_zero();
    !div(&c[n - 1]) && c[..n - 1].iter().all(div) && !(&c[0] % (p * p)).is_zero()
}

fn local_pattern(c: &[BigInt], p: &BigInt) -> Local {
    let md = |x: &BigInt| x.mod_floor(p);
    if md(&c[3]).is_zero() {
        let mut rev = c.to_vec();
        rev.reverse();
        return if is_eisenstein(&rev, p) { Local::ReverseEisenstein } else { Local::Unknown };
    }
    // Work with the monic reduction x³ + b₂x² + b₁x + b₀ mod p.
    let inv = c[3].modpow(&(p - 2u32), p);
    let b: Vec<BigInt> = c.iter().map(|x| md(&(x * &inv))).collect();
    let f = b.clone();
    let df = vec![md(&b[1]), md(&(&b[2] * 2u32)), BigInt::from(3u32)];
    match poly_gcd_mod(f, df, p).len() {
        1 => Local::Squarefree,
        2 => Local::SimpleRoot,
        _ => {
            // triple root r = −b₂/3
            let inv3 = BigInt::from(3u32).modpow(&(p - 2u32), p);
            let r = md(&(-&b[2] * inv3));
            let shifted = UniPoly::from_bigints(c).shift(&Rational::from(r));
            let sc: Vec<BigInt> = shifted.coeffs().iter().map(|x| x.to_integer().expect("integral")).collect();
            if is_eisenstein(&sc, p) {
                Local::Eisenstein
            } else {
                Local::Unknown
            }
        }
    }
}

fn trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

/// Monic gcd over `F_p` (coefficients lowest first); length = degree + 1.
fn poly_gcd_mod(a: Vec<BigInt>, b: Vec<BigInt>, p: &BigInt) -> Vec<BigInt> {
    let (mut a, mut b) = (trim(a), trim(b.into_iter().map(|x| x.mod_floor(p)).collect()));
    while !b.is_empty() {
        let inv = b.last().expect("nonempty").modpow(&(p - 2u32), p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let coef = (a.last().expect("nonempty") * &inv).mod_floor(p);
            for (i, bi) in b.iter().enumerate() {
                a[i + shift] = (&a[i + shift] - &coef * bi).mod_floor(p);
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(c: &[i64]) -> ConductorReport {
        cubic_conductor_heuristic(&CyclicCubicField::new(&UniPoly::from_ints(c)).unwrap())
    }

    #[test]
    fn thirteen() {
        let r = report(&[1, -4, 1, 1]);
        assert_eq!(r.determined, BigInt::from(13));
        assert!(r.ambiguous_support.is_empty());
    }

    #[test]
    fn nine_is_ambiguous_at_three() {
        let r = report(&[1, -3, 0, 1]);
        assert_eq!(r.determined, BigInt::from(1));
        assert_eq!(r.ambiguous_support, vec![BigInt::from(3)]);
    }

    #[test]
    fn seven_from_eisenstein() {
        let r = report(&[-7, 42, -63, 12]);
        assert_eq!(r.determined, BigInt::from(7));
        assert!(r.ambiguous_support.iter().all(|p| *p == BigInt::from(2) || *p == BigInt::from(3)));
    }

    #[test]
    fn eisenstein_shapes() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(is_eisenstein(&b(&[-7, 42, -63, 12]), &BigInt::from(7)));
        assert!(is_eisenstein(&b(&[-2, 0, 0, 1]), &BigInt::from(2)));
        assert!(!is_eisenstein(&b(&[-49, 42, -63, 12]), &BigInt::from(7)));
    }
}
