//! Field isomorphism between cyclic cubics: numeric proposal from the real
//! embeddings, exact certificate by reduction.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Rational, UniPoly};
use crate::Error;

use super::{cubic_conductor_heuristic, CubicElement, CyclicCubicField, FieldElement, PrimeStatus};

/// Default bound on the bit size of reconstructed denominators.
pub const DEFAULT_DENOMINATOR_BITS: u32 = 96;

#[derive(Clone, Debug)]
pub enum IsomorphismOutcome {
    /// A root of `g` inside `Q[x]/(f)`, certified by exact reduction.
    Embedding(CubicElement),
    /// No embedding with denominators below `2^denominator_bits`; not a
    /// proof that the fields differ.
    NotFound { denominator_bits: u32 },
    /// `prime` is certified ramified in one field and unramified in the
    /// other, so the fields are distinct.
    Distinct { prime: BigInt },
}

impl IsomorphismOutcome {
    pub fn embedding(&self) -> Option<&CubicElement> {
        match self {
            IsomorphismOutcome::Embedding(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        self.embedding().is_some()
    }
}

/// Is `Q[x]/(g)` isomorphic to `Q[x]/(f)`? Both must be cyclic cubics.
///
/// ```
/// use sextic::algebra::UniPoly;
/// use sextic::numfield::{is_isomorphic_cubic, IsomorphismOutcome};
/// let f = UniPoly::from_ints(&[1, -4, 1, 1]);
/// let g = UniPoly::from_ints(&[1, -3, 0, 1]);
/// let out = is_isomorphic_cubic(&f, &g, 64).unwrap();
/// assert!(matches!(out, IsomorphismOutcome::Distinct { .. }));
/// ```
pub fn is_isomorphic_cubic(f: &UniPoly, g: &UniPoly, denominator_bits: u32) -> Result<IsomorphismOutcome, Error> {
    let kf = CyclicCubicField::new(f)?;
    let kg = CyclicCubicField::new(g)?;
    let prec = (3 * denominator_bits + 64).max(256);
    let alphas = roots(kf.f(), prec);
    let betas = roots(kg.f(), prec);
    for perm in PERMS {
        let rhs = [betas[perm[0]].clone(), betas[perm[1]].clone(), betas[perm[2]].clone()];
        let Some(c) = solve_vandermonde(&alphas, &rhs) else { continue };
        let Some(c) = reconstruct_all(&c, denominator_bits) else { continue };
        let e = CubicElement::new(&kf, c);
        if kf.eval_poly(kg.f(), &e).is_zero() {
            return Ok(IsomorphismOutcome::Embedding(e));
        }
    }
    let (rf, rg) = (cubic_conductor_heuristic(&kf), cubic_conductor_heuristic(&kg));
    let mut primes: Vec<&BigInt> = rf.ramified.iter().chain(&rg.ramified).collect();
    primes.sort();
    for p in primes {
        let pair = (rf.status(p), rg.status(p));
        if matches!(
            pair,
            (PrimeStatus::Ramified, PrimeStatus::Unramified) | (PrimeStatus::Unramified, PrimeStatus::Ramified)
        ) {
            return Ok(IsomorphismOutcome::Distinct { prime: p.clone() });
        }
    }
    Ok(IsomorphismOutcome::NotFound { denominator_bits })
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

/// Midpoints of the three real roots, to `prec` bits.
fn roots(f: &UniPoly, prec: u32) -> Vec<Rational> {
    let r: Vec<Rational> = f.real_roots(prec).iter().map(|r| r.midpoint()).collect();
    assert_eq!(r.len(), 3, "a cyclic cubic is totally real");
    r
}

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Solve `c₀ + c₁aᵢ + c₂aᵢ² = bᵢ` by Cramer's rule.
fn solve_vandermonde(a: &[Rational], b: &[Rational; 3]) -> Option<[Rational; 3]> {
    let rows: [[Rational; 3]; 3] = std::array::from_fn(|i| [Rational::one(), a[i].clone(), &a[i] * &a[i]]);
    let d = det3(&rows);
    if d.is_zero() {
        return None;
    }
    Some(std::array::from_fn(|j| {
        let mut m = rows.clone();
        for i in 0..3 {
            m[i][j] = b[i].clone();
        }
        det3(&m) / &d
    }))
}

fn reconstruct_all(c: &[Rational; 3], bits: u32) -> Option<[Rational; 3]> {
    let r0 = reconstruct(&c[0], bits)?;
    let r1 = reconstruct(&c[1], bits)?;
    let r2 = reconstruct(&c[2], bits)?;
    Some([r0, r1, r2])
}

/// Last continued-fraction convergent of `x` with denominator ≤ `2^bits`.
pub fn reconstruct(x: &Rational, bits: u32) -> Option<Rational> {
    let bound = BigInt::one() << bits;
    let (mut h1, mut h2) = (BigInt::one(), BigInt::zero());
    let (mut k1, mut k2) = (BigInt::zero(), BigInt::one());
    let mut rest = x.clone();
    let mut best = None;
    for _ in 0..4 * bits + 8 {
        let a = rest.floor();
        let h = &a * &h1 + &h2;
        let k = &a * &k1 + &k2;
        if k > bound {
            break;
        }
        best = Some(Rational::new(h.clone(), k.clone()));
        (h2, h1) = (h1, h);
        (k2, k1) = (k1, k);
        let frac = &rest - &Rational::from(a);
        match frac.inv() {
            Some(r) => rest = r,
            None => break,
        }
    }
    best
}

/// Square root of `x` in its cubic field, if any.
pub(crate) fn sqrt_in_field(x: &CubicElement) -> Option<CubicElement> {
    let k = x.field();
    let bits = 3 * DEFAULT_DENOMINATOR_BITS + 64 + 2 * x.height_bits() as u32;
    let alphas = roots(k.f(), bits);
    let vals: Vec<Rational> = alphas
        .iter()
        .map(|a| &x.coeffs()[0] + &(&x.coeffs()[1] * a) + &(&x.coeffs()[2] * &(a * a)))
        .collect();
    if vals.iter().any(Rational::is_negative) {
        return None;
    }
    let scale = BigInt::one() << bits;
    let roots: Vec<Rational> = vals
        .iter()
        .map(|v| {
            let n = (v * &Rational::from(&scale * &scale)).floor();
            Rational::new(n.sqrt(), scale.clone())
        })
        .collect();
    for signs in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [-1, 1, 1]] {
        let b: [Rational; 3] =
            std::array::from_fn(|i| if signs[i] > 0 { roots[i].clone() } else { -&roots[i] });
        let Some(c) = solve_vandermonde(&alphas, &b) else { continue };
        let Some(c) = reconstruct_all(&c, DEFAULT_DENOMINATOR_BITS) else { continue };
        let s = CubicElement::new(k, c);
        if s.mul(&s) == *x {
            return Some(if s.coeffs().iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
                s.neg()
            } else {
                s
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn continued_fraction_recovers_small_rationals() {
        let x = q(-355, 113);
        let noisy = &x + &Rational::new(BigInt::one(), BigInt::one() << 300);
        assert_eq!(reconstruct(&noisy, 32), Some(x));
    }

    #[test]
    fn self_isomorphism_is_found() {
        let f = UniPoly::from_ints(&[1, -4, 1, 1]);
        let out = is_isomorphic_cubic(&f, &f, 64).unwrap();
        let e = out.embedding().unwrap();
        let k = e.field();
        assert!(k.eval_poly(k.f(), e).is_zero());
    }

    #[test]
    fn rescaled_generator_is_isomorphic() {
        // 12x^3 - 63x^2 + 42x - 7 and the same field generated by 3x
        let f = UniPoly::from_ints(&[-7, 42, -63, 12]);
        let g = f.scale_var(&q(1, 3));
        assert!(is_isomorphic_cubic(&f, &g, 64).unwrap().is_isomorphic());
    }

    #[test]
    fn squares_in_cubic_field() {
        let k = CyclicCubicField::new(&UniPoly::from_ints(&[1, -4, 1, 1])).unwrap();
        let a = CubicElement::alpha(&k);
        let x = a.add(&a.one_like().scale(&q(3, 1)));
        let sq = x.mul(&x);
        let s = sq.sqrt().unwrap();
        assert_eq!(s.mul(&s), sq);
        assert!(a.sqrt().is_none() || a.sqrt().map(|s| s.mul(&s)) == Some(a.clone()));
        assert!(a.embed(&q(2, 1)).sqrt().is_none());
        assert_eq!(a.embed(&q(9, 4)).sqrt(), Some(a.embed(&q(3, 2))));
    }
}
