//! Dense univariate polynomials over Q, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use super::ring::cubic_discriminant_in;
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

/// `p = content · ∏ factorᵢ^multiplicityᵢ`, factors monic, square-free and
/// pairwise coprime.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition {
    pub content: Rational,
    pub factors: Vec<(UniPoly, u32)>,
}

/// An isolating interval for one real root. `lo == hi` when the root is a
/// dyadic rational found exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub lo: Rational,
    pub hi: Rational,
}

impl RealRoot {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::new(1, 2)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&k| Rational::from(k)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(Rational::from).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lead().inv() {
            Some(l) => self.scale(&l),
            None => Self::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &UniPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose(&Self::new(vec![a.clone(), Rational::one()]))
    }

    /// `self(k·x)`.
    pub fn scale_var(&self, k: &Rational) -> Self {
        let mut pw = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = pw * k;
        }
        Self::new(out)
    }

    /// `xⁿ·self(1/x)` for `n = deg self`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), Error> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let inv = d.lead().inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut qv = vec![Rational::zero(); r.len() - dd];
        for i in (0..qv.len()).rev() {
            let c = &r[i + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &(&c * dc);
                }
            }
            qv[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(qv), Self::new(r)))
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly, Error> {
        Ok(self.divrem(d)?.1)
    }

    /// Quotient when `d` divides `self`, otherwise an error.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly, Error> {
        let (qt, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(qt)
        } else {
            Err(Error::InvalidInput(format!("{d} does not divide {self}")))
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn xgcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let one = Self::constant(Rational::one());
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (qt, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&qt * &s1);
            let t = &t0 - &(&qt * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().inv() {
            Some(l) => (r0.scale(&l), s0.scale(&l), t0.scale(&l)),
            None => (r0, s0, t0),
        }
    }

    /// `(content, P)` with `self = content · P`, `P` integral, primitive and
    /// with positive leading coefficient.
    pub fn primitive_integral(&self) -> (Rational, Vec<BigInt>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * &Rational::from(lcm.clone())).to_integer().expect("cleared"))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, lcm), prim)
    }

    /// The primitive integral associate as a polynomial.
    pub fn primitive(&self) -> UniPoly {
        UniPoly::from_bigints(&self.primitive_integral().1)
    }

    pub fn cubic_discriminant(&self) -> Result<Rational, Error> {
        if self.degree() != Some(3) {
            return Err(Error::InvalidInput(format!("expected a cubic, got {self}")));
        }
        let c = &self.coeffs;
        Ok(cubic_discriminant_in(&c[3], &c[2], &c[1], &c[0]))
    }

    /// Classical resultant over Q.
    pub fn resultant(&self, other: &UniPoly) -> Rational {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return Rational::zero();
        };
        if db == 0 {
            return other.lead().pow(da as i32);
        }
        if da == 0 {
            return self.lead().pow(db as i32);
        }
        let r = self.rem(other).expect("nonzero");
        let Some(dr) = r.degree() else {
            return Rational::zero();
        };
        let sign = if da * db % 2 == 1 { -Rational::one() } else { Rational::one() };
        sign * other.lead().pow((da - dr) as i32) * other.resultant(&r)
    }

    /// `(−1)^{n(n−1)/2} Res(p, p′)/lc(p)`.
    pub fn discriminant(&self) -> Result<Rational, Error> {
        let n = self
            .degree()
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::InvalidInput("discriminant of a constant".into()))?;
        let res = self.resultant(&self.derivative()) / self.lead();
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
    }

    /// Yun's algorithm.
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition, Error> {
        if self.is_zero() {
            return Err(Error::InvalidInput("square-free decomposition of 0".into()));
        }
        let content = self.lead();
        let f = self.monic();
        let mut factors = Vec::new();
        if f.degree() == Some(0) {
            return Ok(SquarefreeDecomposition { content, factors });
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree() != Some(0) {
                factors.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.degree() == Some(0) {
                break;
            }
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(SquarefreeDecomposition { content, factors })
    }

    /// Sturm chain of the square-free part.
    fn sturm_chain(&self) -> Vec<UniPoly> {
        let g = self.gcd(&self.derivative());
        let s = self.exact_div(&g).expect("gcd divides");
        let mut chain = vec![s.clone(), s.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]).expect("nonzero");
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        chain
    }

    /// Real roots, each refined to an interval of width at most `2^-bits`,
    /// ascending.
    pub fn real_roots(&self, bits: u32) -> Vec<RealRoot> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let chain = self.sturm_chain();
        let s = chain[0].clone();
        let variations = |x: &Rational| -> usize {
            let mut last = 0;
            let mut count = 0;
            for p in &chain {
                let v = p.eval(x).signum();
                if v != 0 {
                    if last != 0 && v != last {
                        count += 1;
                    }
                    last = v;
                }
            }
            count
        };
        // Power of two above the Cauchy bound.
        let lc = s.lead();
        let mut m = Rational::one();
        for c in &s.coeffs[..s.coeffs.len() - 1] {
            let r = (c / &lc).abs();
            if r > m {
                m = r;
            }
        }
        let mut bound = Rational::from(2);
        let m = m + Rational::one();
        while bound <= m {
            bound = bound * Rational::from(2);
        }
        let mut out = Vec::new();
        let mut stack = vec![(-&bound, bound.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let n = variations(&lo) - variations(&hi);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push(RealRoot { lo, hi });
                continue;
            }
            let mid = (&lo + &hi) * Rational::new(1, 2);
            if s.eval(&mid).is_zero() {
                out.push(RealRoot { lo: mid.clone(), hi: mid.clone() });
                let mut eps = (&hi - &lo) * Rational::new(1, 4);
                loop {
                    let (a, b) = (&mid - &eps, &mid + &eps);
                    if variations(&a) - variations(&b) == 1
                        && !s.eval(&a).is_zero()
                        && !s.eval(&b).is_zero()
                    {
                        stack.push((lo.clone(), a));
                        stack.push((b, hi.clone()));
                        break;
                    }
                    eps = eps * Rational::new(1, 2);
                }
            } else {
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
        let width = Rational::new(1, BigInt::one() << bits);
        for r in &mut out {
            s.refine(r, &width);
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// Bisect an isolating interval of a square-free polynomial.
    fn refine(&self, r: &mut RealRoot, width: &Rational) {
        if r.is_exact() {
            return;
        }
        let mut slo = self.eval(&r.lo).signum();
        if slo == 0 {
            r.hi = r.lo.clone();
            return;
        }
        if self.eval(&r.hi).is_zero() {
            r.lo = r.hi.clone();
            return;
        }
        let half = Rational::new(1, 2);
        while &(&r.hi - &r.lo) > width {
            let mid = (&r.lo + &r.hi) * &half;
            let sm = self.eval(&mid).signum();
            if sm == 0 {
                r.lo = mid.clone();
                r.hi = mid;
                return;
            }
            if sm == slo {
                r.lo = mid;
                slo = sm;
            } else {
                r.hi = mid;
            }
        }
    }

    /// All rational roots, ascending, each listed once.
    ///
    /// Rational roots of `a·xⁿ + …` (integral, primitive) are `k/a` for
    /// integers `k`, so high-precision real roots are rounded and tested.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let (_, prim) = self.primitive_integral();
        let lc = Rational::from(prim.last().expect("nonzero").clone());
        let bits = lc.height_bits() as u32 + 8;
        let mut out = Vec::new();
        for r in self.real_roots(bits) {
            let k = (&r.midpoint() * &lc).round();
            let cand = Rational::from(k) / &lc;
            if self.eval(&cand).is_zero() && !out.contains(&cand) {
                out.push(cand);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "x")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let body = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if i == 0 {
            write!(f, "{a}")?;
        } else if a.is_one() {
            write!(f, "{body}")?;
        } else if a.is_integer() {
            write!(f, "{a}{body}")?;
        } else {
            write!(f, "({a}){body}")?;
        }
    }
    Ok(())
}

fn zip_with(a: &UniPoly, b: &UniPoly, op: impl Fn(&Rational, &Rational) -> Rational) -> UniPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    UniPoly::new((0..n).map(|i| op(&a.coeff(i), &b.coeff(i))).collect())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn cubic_discriminants() {
        assert_eq!(p(&[1, -4, 1, 1]).cubic_discriminant().unwrap(), q(169, 1));
        assert_eq!(p(&[0, 0, 0, 1]).cubic_discriminant().unwrap(), q(0, 1));
        assert_eq!(p(&[1, -3, 0, 1]).cubic_discriminant().unwrap(), q(81, 1));
        assert!(p(&[1, 1]).cubic_discriminant().is_err());
    }

    #[test]
    fn general_discriminant_matches_cubic_formula() {
        let f = p(&[-7, 42, -63, 12]);
        assert_eq!(f.discriminant().unwrap(), f.cubic_discriminant().unwrap());
        assert_eq!(p(&[1, 0, 1]).discriminant().unwrap(), q(-4, 1));
    }

    #[test]
    fn yun() {
        // (x-1)^3 (x+2)^2
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2);
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.factors, vec![(p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
        let d = p(&[1, 0, 1]).squarefree_decomposition().unwrap();
        assert_eq!(d.factors, vec![(p(&[1, 0, 1]), 1)]);
        let d = p(&[0, 0, 0, 5]).squarefree_decomposition().unwrap();
        assert_eq!(d.factors, vec![(p(&[0, 1]), 3)]);
        assert_eq!(d.content, q(5, 1));
        assert!(UniPoly::zero().squarefree_decomposition().is_err());
    }

    #[test]
    fn roots() {
        // 2x^3 - 3x^2 - 3x + 2 = (x+1)(2x-1)(x-2)
        let f = p(&[2, -3, -3, 2]);
        assert_eq!(f.rational_roots(), vec![q(-1, 1), q(1, 2), q(2, 1)]);
        assert!(p(&[1, -3, 0, 1]).rational_roots().is_empty());
        let r = p(&[1, -3, 0, 1]).real_roots(64);
        assert_eq!(r.len(), 3);
        assert!(p(&[1, 0, 1]).real_roots(10).is_empty());
    }

    #[test]
    fn xgcd_inverse() {
        let f = p(&[1, -4, 1, 1]);
        let a = p(&[0, 1]);
        let (g, s, _) = a.xgcd(&f);
        assert_eq!(g, p(&[1]));
        assert_eq!(s.rem(&f).unwrap(), p(&[4, -1, -1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-7, 42, -63, 12]).to_string(), "12x^3 - 63x^2 + 42x - 7");
        assert_eq!(UniPoly::new(vec![q(1, 2), q(-1, 1)]).to_string(), "-x + 1/2");
    }
}
