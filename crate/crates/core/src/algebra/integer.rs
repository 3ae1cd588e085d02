//! Integer factorization, square classes and square-free tests.
//!
//! Trial division uses a sieve of the primes below 10⁶; larger cofactors go
//! through Miller–Rabin and Brent's variant of Pollard rho.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

use super::rational::{isqrt_exact, Rational};
use crate::Error;

const SIEVE_LIMIT: usize = 1_000_000;

/// All primes below 10⁶, computed once.
pub fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_LIMIT];
        let mut out = Vec::with_capacity(78_498);
        for i in 2..SIEVE_LIMIT {
            if !composite[i] {
                out.push(i as u32);
                let mut j = i * i;
                while j < SIEVE_LIMIT {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller–Rabin with the first twenty prime bases. Exact below 3.3·10²⁴,
/// probabilistic above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &small_primes()[..20] {
        let a = BigUint::from(a);
        if (n % &a).is_zero() {
            return false;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite `n` (Brent's cycle detection).
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let m = 128u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn factor_rec(n: BigUint, out: &mut BTreeMap<BigUint, u32>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        *out.entry(n).or_insert(0) += 1;
        return;
    }
    if let Some(r) = isqrt_exact(&BigInt::from(n.clone())) {
        let r = r.to_biguint().expect("nonnegative");
        let mut sub = BTreeMap::new();
        factor_rec(r, &mut sub);
        for (p, e) in sub {
            *out.entry(p).or_insert(0) += 2 * e;
        }
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    factor_rec(d, out);
    factor_rec(other, out);
}

/// Prime factorization of `|n|`, primes ascending. Zero is rejected.
pub fn factor(n: &BigInt) -> Result<Vec<(BigUint, u32)>, Error> {
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factor zero".into()));
    }
    let mut m = n.magnitude().clone();
    let mut out = BTreeMap::new();
    for &p in small_primes() {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        loop {
            let (qt, r) = m.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            m = qt;
            e += 1;
        }
        if e > 0 {
            out.insert(pb, e);
        }
    }
    factor_rec(m, &mut out);
    Ok(out.into_iter().collect())
}

/// Prime factorization of a machine integer.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for &p in small_primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n > 1 {
        for (p, e) in factor(&BigInt::from(n)).expect("nonzero") {
            out.push((p.to_u64().expect("fits"), e));
        }
        out.sort();
    }
    out
}

/// The square-free integer `s` with `n/s` a perfect square; sign kept.
pub fn squarefree_part_int(n: &BigInt) -> Result<BigInt, Error> {
    let mut s = BigInt::one();
    for (p, e) in factor(n)? {
        if e % 2 == 1 {
            s *= BigInt::from(p);
        }
    }
    if n.sign() == Sign::Minus {
        s = -s;
    }
    Ok(s)
}

/// Square class of a nonzero rational as a signed square-free integer.
///
/// ```
/// use sextic::algebra::{squarefree_part, Rational};
/// let s = squarefree_part(&"-175/26".parse::<Rational>().unwrap()).unwrap();
/// assert_eq!(s, (-182).into());
/// ```
pub fn squarefree_part(q: &Rational) -> Result<BigInt, Error> {
    if q.is_zero() {
        return Err(Error::InvalidInput("square class of zero".into()));
    }
    squarefree_part_int(&(q.numer() * q.denom()))
}

/// True iff `q` is the square of a rational (0 included).
pub fn is_square(q: &Rational) -> bool {
    q.sqrt().is_some()
}

/// Square-free test for machine integers; 0 is not square-free.
pub fn is_squarefree_u64(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    factor_u64(n).iter().all(|&(_, e)| e == 1)
}

/// Square-free flags for a batch: strip every prime up to the cube root of
/// the largest value, then the cofactor is 1, a prime, a product of two
/// distinct primes, or a prime square; only the last fails.
pub fn squarefree_batch(values: &[u64]) -> Vec<bool> {
    let max = values.iter().copied().max().unwrap_or(0);
    let bound = (max as f64).cbrt() as u64 + 2;
    let primes: Vec<u64> = small_primes()
        .iter()
        .map(|&p| p as u64)
        .take_while(|&p| p <= bound)
        .collect();
    values
        .iter()
        .map(|&v| {
            if v == 0 {
                return false;
            }
            let mut m = v;
            for &p in &primes {
                if m % p == 0 {
                    m /= p;
                    if m % p == 0 {
                        return false;
                    }
                }
            }
            let r = m.sqrt();
            !(m > 1 && r * r == m)
        })
        .collect()
}

/// Legendre symbol (a|p) for an odd prime p: -1, 0 or 1.
pub fn legendre(a: i128, p: u64) -> i32 {
    let a = a.rem_euclid(p as i128) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Primes in `[lo, hi)` from the sieve.
pub fn primes_between(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    small_primes()
        .iter()
        .map(|&p| p as u64)
        .skip_while(move |&p| p < lo)
        .take_while(move |&p| p < hi)
}

/// `n mod p` for a big integer, in `[0, p)`.
pub fn mod_u64(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    #[test]
    fn square_classes() {
        assert_eq!(squarefree_part(&q(169, 4)).unwrap(), BigInt::from(1));
        assert_eq!(squarefree_part(&q(-175, 26)).unwrap(), BigInt::from(-182));
        assert_eq!(squarefree_part(&q(67, 4)).unwrap(), BigInt::from(67));
        assert!(squarefree_part(&Rational::zero()).is_err());
    }

    #[test]
    fn squares() {
        assert!(is_square(&q(20736, 1)));
        assert!(is_square(&Rational::zero()));
        assert!(!is_square(&q(-28, 1)));
        assert!(is_square(&q(9, 49)));
        assert!(!is_square(&q(9, 50)));
    }

    #[test]
    fn factors_large_cofactor() {
        // 1000003 * 1000033 * 2^3, both primes above the sieve.
        let n = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64) * 8;
        let f = factor(&n).unwrap();
        let shown: Vec<(u64, u32)> = f.iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect();
        assert_eq!(shown, vec![(2, 3), (1_000_003, 1), (1_000_033, 1)]);
        let sq = BigInt::from(1_000_003u64).pow(2) * 3;
        assert_eq!(squarefree_part_int(&sq).unwrap(), BigInt::from(3));
    }

    #[test]
    fn batch() {
        assert_eq!(squarefree_batch(&[469, 160, 1]), vec![true, false, true]);
        assert_eq!(squarefree_batch(&[4]), vec![false]);
        assert_eq!(squarefree_batch(&[1_000_003 * 999_983]), vec![true]);
        assert_eq!(squarefree_batch(&[1_000_003 * 1_000_003]), vec![false]);
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(561));
        assert!(is_probable_prime(&"170141183460469231731687303715884105727".parse().unwrap()));
    }
}
