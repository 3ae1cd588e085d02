//! Sparse multivariate polynomials over Q with a fixed global variable order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;
use super::upoly::UniPoly;
use crate::Error;

/// A named indeterminate. Variables compare by their position in
/// [`Var::ORDER`], so the term map is canonical.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u8);

impl Var {
    pub const ORDER: [&'static str; 18] = [
        "A", "B", "T", "U", "D", "X", "Y", "a", "b", "c", "t", "u", "d", "m", "n", "s", "x", "y",
    ];

    pub const A: Var = Var(0);
    pub const B: Var = Var(1);
    pub const T: Var = Var(2);
    pub const U: Var = Var(3);
    pub const D: Var = Var(4);
    pub const X: Var = Var(5);
    pub const Y: Var = Var(6);
    pub const SMALL_A: Var = Var(7);
    pub const SMALL_B: Var = Var(8);
    pub const SMALL_C: Var = Var(9);
    pub const SMALL_T: Var = Var(10);
    pub const SMALL_U: Var = Var(11);
    pub const SMALL_D: Var = Var(12);
    pub const SMALL_M: Var = Var(13);
    pub const SMALL_N: Var = Var(14);
    pub const SMALL_S: Var = Var(15);
    pub const SMALL_X: Var = Var(16);
    pub const SMALL_Y: Var = Var(17);

    pub fn named(name: &str) -> Option<Var> {
        Self::ORDER.iter().position(|&n| n == name).map(|i| Var(i as u8))
    }

    pub fn name(self) -> &'static str {
        Self::ORDER[self.0 as usize]
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector: (variable, positive exponent) pairs sorted by variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Split off the power of `v`.
    fn without(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()))
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from(n))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// `Σ cᵢ·vⁱ` from a univariate polynomial.
    pub fn from_upoly(p: &UniPoly, v: Var) -> Self {
        let mut out = Self::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(Monomial::var(v, i as u32), c.clone());
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Rational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::int(1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Variables that occur, in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Coefficients with respect to `v`: `self = Σ coeffs[i]·vⁱ`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Replace `v` by the polynomial `by`.
    pub fn substitute(&self, v: Var, by: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(v);
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * by) + c;
        }
        acc
    }

    /// Substitute `v = num/den` and clear denominators: returns
    /// `den^k · self(v = num/den)` with `k = deg_v self`.
    pub fn substitute_fraction(&self, v: Var, num: &MultiPoly, den: &MultiPoly) -> (Self, u32) {
        let coeffs = self.coefficients_in(v);
        let k = coeffs.len() as u32 - 1;
        let mut acc = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let part = &(c * &num.pow(i as u32)) * &den.pow(k - i as u32);
            acc = &acc + &part;
        }
        (acc, k)
    }

    /// Evaluate the listed variables; others stay symbolic.
    pub fn eval_partial(&self, values: &[(Var, Rational)]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in &m.0 {
                match values.iter().find(|(w, _)| *w == v) {
                    Some((_, val)) => coeff = coeff * val.pow(e as i32),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Full evaluation; every occurring variable must be assigned.
    pub fn eval(&self, values: &[(Var, Rational)]) -> Result<Rational, Error> {
        let p = self.eval_partial(values);
        match p.terms.len() {
            0 => Ok(Rational::zero()),
            1 if p.terms.contains_key(&Monomial::one()) => Ok(p.terms[&Monomial::one()].clone()),
            _ => Err(Error::InvalidInput(format!("unassigned variables {:?}", p.variables()))),
        }
    }

    /// Univariate view when only `v` occurs.
    pub fn to_upoly(&self, v: Var) -> Result<UniPoly, Error> {
        let coeffs = self.coefficients_in(v);
        coeffs
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Ok(Rational::zero())
                } else {
                    c.terms
                        .get(&Monomial::one())
                        .filter(|_| c.terms.len() == 1)
                        .cloned()
                        .ok_or_else(|| Error::InvalidInput(format!("not univariate in {v:?}")))
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(UniPoly::new)
    }

    /// Reduce modulo `v^k − replacement`, i.e. rewrite every `v^e` with
    /// `e ≥ k` using `v^k = replacement`. `replacement` must have lower
    /// degree than `k` in `v`. For a relation monic in `v` this is the
    /// remainder of division by it.
    pub fn reduce_power(&self, v: Var, k: u32, replacement: &MultiPoly) -> Self {
        assert!(replacement.degree_in(v) < k, "replacement must be reduced");
        let mut cur = self.clone();
        loop {
            if cur.degree_in(v) < k {
                return cur;
            }
            let mut next = Self::zero();
            for (m, c) in &cur.terms {
                let (e, rest) = m.without(v);
                if e >= k {
                    let lower = Monomial::var(v, e - k).mul(&rest);
                    let t = &Self::term(c.clone(), lower) * replacement;
                    next = &next + &t;
                } else {
                    next.add_term(m.clone(), c.clone());
                }
            }
            cur = next;
        }
    }

    /// Exact division by `v^k`, when every term is divisible.
    pub fn div_var_power(&self, v: Var, k: u32) -> Result<Self, Error> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.without(v);
            if e < k {
                return Err(Error::InvalidInput(format!("term {m:?} not divisible by {v:?}^{k}")));
            }
            out.add_term(Monomial::var(v, e - k).mul(&rest), c.clone());
        }
        Ok(out)
    }
}

/// Syntactic equality after canonicalization.
pub fn multipoly_equal(p: &MultiPoly, q: &MultiPoly) -> bool {
    p == q
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let a = c.abs();
            if m.0.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{a}*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let slot = acc.entry(ma.mul(mb)).or_insert_with(Rational::zero);
                *slot += &(ca * cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { terms: acc }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly { (&self).$m(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Build polynomials tersely: `mp::v(Var::T) * mp::c(3)`.
pub mod mp {
    use super::*;

    pub fn v(var: Var) -> MultiPoly {
        MultiPoly::var(var)
    }

    pub fn c(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }

    pub fn r(q: &Rational) -> MultiPoly {
        MultiPoly::constant(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::mp::{c, v};
    use super::*;

    #[test]
    fn canonical_equality() {
        let t = v(Var::T);
        let u = v(Var::U);
        let a = &(&t + &u) * &(&t - &u);
        let b = &(&t * &t) - &(&u * &u);
        assert!(multipoly_equal(&a, &b));
        assert!(!multipoly_equal(&a, &(&b + &c(1))));
        assert!(multipoly_equal(&MultiPoly::zero(), &(&a - &b)));
        assert_eq!(MultiPoly::zero().len(), 0);
    }

    #[test]
    fn substitution_and_reduction() {
        let d = v(Var::SMALL_D);
        let t = v(Var::SMALL_T);
        // (d^2 - t) * (d + 1) reduces to 0 mod d^2 = t
        let p = &(&(&d * &d) - &t) * &(&d + &c(1));
        assert!(p.reduce_power(Var::SMALL_D, 2, &t).is_zero());
        let s = (&t * &t).substitute(Var::SMALL_T, &(&d + &c(1)));
        assert_eq!(s, &(&(&d * &d) + &(&d * &c(2))) + &c(1));
        let (f, k) = (&t + &c(1)).substitute_fraction(Var::SMALL_T, &c(1), &d);
        assert_eq!((f, k), (&c(1) + &d, 1));
    }

    #[test]
    fn display_order() {
        let p = &(&v(Var::A) * &c(3)) - &v(Var::SMALL_T);
        assert_eq!(p.to_string(), "3*A - t");
    }
}
