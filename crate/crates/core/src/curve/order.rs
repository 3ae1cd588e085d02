//! A heuristic infinite-order test.
//!
//! `kP ≠ O` for `k ≤ 36` is proved by reduction: at a prime `p` where the
//! curve has good reduction, the field has a degree-one residue map and the
//! coordinates of `P` are `p`-integral, reduction is a group homomorphism, so
//! `k·P̄ ≠ Ō` forces `kP ≠ O`. Multiples not excluded this way are computed
//! exactly. The height comparison of `4P` with `P` is the heuristic part.

use serde::Serialize;

use crate::algebra::integer::primes_between;
use crate::numfield::{FieldElement, Fp, ResidueMap};

use super::{CurveModel, Point};

/// Largest multiple checked; a torsion point of `E(K6)` in the orbit
/// argument satisfies `36P = O`.
pub const ORDER_BOUND: u32 = 36;

const FIRST_PRIME: u64 = 1009;
const PRIME_WINDOW: u64 = 40_000;
const USABLE_PRIMES: usize = 3;

/// What was checked, and the verdict. Always labeled heuristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfiniteOrderCertificate {
    pub verdict: bool,
    pub heuristic: bool,
    /// Primes used for the reduction argument.
    pub primes: Vec<u64>,
    /// Multiples `k` that survived reduction and were computed exactly.
    pub exact_multiples: Vec<u32>,
    /// A `k ≤ 36` with `kP = O`, when one was found.
    pub torsion_multiple: Option<u32>,
    pub height_p: u64,
    pub height_4p: u64,
}

/// Heuristic: `kP ≠ O` for `1 ≤ k ≤ 36` and the naive height of `4P`
/// exceeds that of `P`.
///
/// ```
/// use sextic::algebra::q;
/// use sextic::curve::{is_probably_infinite_order, CurveModel, Point};
/// let e = CurveModel::weierstrass(q(0, 1), q(-2, 1)).unwrap();
/// let cert = is_probably_infinite_order(&e, &Point::affine(q(3, 1), q(5, 1)));
/// assert!(cert.verdict);
/// ```
pub fn is_probably_infinite_order<F: FieldElement>(e: &CurveModel, p: &Point<F>) -> InfiniteOrderCertificate {
    let mut cert = InfiniteOrderCertificate {
        verdict: false,
        heuristic: true,
        primes: Vec::new(),
        exact_multiples: Vec::new(),
        torsion_multiple: None,
        height_p: 0,
        height_4p: 0,
    };
    let Point::Affine { x, .. } = p else {
        cert.torsion_multiple = Some(1);
        return cert;
    };

    let mut candidates: Vec<u32> = (1..=ORDER_BOUND).collect();
    for prime in primes_between(FIRST_PRIME, FIRST_PRIME + PRIME_WINDOW) {
        if candidates.is_empty() || cert.primes.len() == USABLE_PRIMES {
            break;
        }
        let Some(killed) = reduced_torsion_multiples(e, p, x, prime) else { continue };
        cert.primes.push(prime);
        candidates.retain(|k| killed.contains(k));
    }

    for &k in &candidates {
        cert.exact_multiples.push(k);
        if e.mul(k as i64, p).is_infinity() {
            cert.torsion_multiple = Some(k);
            break;
        }
    }

    let four = e.double(&e.double(p));
    cert.height_p = x.height_bits();
    cert.height_4p = four.x().map_or(0, |x| x.height_bits());
    cert.verdict = cert.torsion_multiple.is_none() && cert.height_4p > cert.height_p;
    cert
}

/// The `k ≤ 36` with `k·P̄ = Ō` in `E(F_p)`, or `None` if `p` is unusable.
fn reduced_torsion_multiples<F: FieldElement>(e: &CurveModel, p: &Point<F>, x: &F, prime: u64) -> Option<Vec<u32>> {
    let map: ResidueMap = x.residue_map(prime)?;
    let red = |q: &crate::algebra::Rational| Fp::from_rational(q, prime);
    let (c, a2, a1, a0) = (red(&e.c)?, red(&e.a2)?, red(&e.a1)?, red(&e.a0)?);
    if c.v == 0 || red(&e.discriminant())?.v == 0 {
        return None;
    }
    let pbar = match p {
        Point::Infinity => return None,
        Point::Affine { x, y } => Point::Affine { x: x.reduce(&map)?, y: y.reduce(&map)? },
    };
    // the reduced model c̄·y² = x³ + ā₂x² + ā₁x + ā₀
    let ebar = ReducedCurve { c, a2, a1, a0 };
    let mut killed = Vec::new();
    let mut acc = pbar.clone();
    for k in 1..=ORDER_BOUND {
        if acc.is_infinity() {
            killed.push(k);
        }
        acc = ebar.add(&acc, &pbar);
    }
    Some(killed)
}

struct ReducedCurve {
    c: Fp,
    a2: Fp,
    a1: Fp,
    a0: Fp,
}

impl ReducedCurve {
    fn add(&self, p: &Point<Fp>, q: &Point<Fp>) -> Point<Fp> {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (*x1, *y1, *x2, *y2),
        };
        let lambda = if x1 == x2 {
            if y1.add(&y2).is_zero() {
                return Point::Infinity;
            }
            let num = Fp::new(3, x1.p)
                .mul(&x1.square())
                .add(&Fp::new(2, x1.p).mul(&self.a2).mul(&x1))
                .add(&self.a1);
            num.mul(&Fp::new(2, x1.p).mul(&self.c).mul(&y1).inv().expect("nonzero"))
        } else {
            y2.sub(&y1).mul(&x2.sub(&x1).inv().expect("nonzero"))
        };
        let x3 = lambda.square().mul(&self.c).sub(&self.a2).sub(&x1).sub(&x2);
        let y3 = lambda.mul(&x1.sub(&x3)).sub(&y1);
        debug_assert_eq!(
            self.c.mul(&y3.square()),
            x3.mul(&x3).mul(&x3).add(&self.a2.mul(&x3.square())).add(&self.a1.mul(&x3)).add(&self.a0)
        );
        Point::Affine { x: x3, y: y3 }
    }
}
