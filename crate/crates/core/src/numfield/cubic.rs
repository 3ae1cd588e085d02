use std::fmt;
use std::sync::Arc;

use crate::algebra::{Rational, UniPoly};
use crate::Error;

use super::{Automorphism, FieldElement, Fp, ResidueMap};

/// `K3 = Q[x]/(f)` for a monic cubic `f` that is irreducible with square
/// discriminant, together with the Galois generator `σ`.
#[derive(Clone)]
pub struct CyclicCubicField {
    f: UniPoly,
    disc: Rational,
    sqrt_disc: Rational,
    /// Coordinates of σ(α) and σ(α)².
    sigma_alpha: [Rational; 3],
    sigma_alpha_sq: [Rational; 3],
    /// Integral cubics defining the same field, used for local certificates.
    models: Vec<UniPoly>,
}

impl fmt::Debug for CyclicCubicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.f)
    }
}

impl CyclicCubicField {
    /// Accepts any cubic; it is made monic (same roots). Fails unless it is
    /// irreducible with nonzero square discriminant.
    pub fn new(f: &UniPoly) -> Result<Arc<Self>, Error> {
        Self::with_models(f, &[])
    }

    /// As [`CyclicCubicField::new`], recording extra integral cubics with a
    /// root generating the same field (e.g. the cubic `f` was derived from).
    pub fn with_models(f: &UniPoly, extra: &[UniPoly]) -> Result<Arc<Self>, Error> {
        if f.degree() != Some(3) {
            return Err(Error::MalformedField(format!("not a cubic: {f}")));
        }
        let f = f.monic();
        if let Some(r) = f.rational_roots().first() {
            return Err(Error::MalformedField(format!("{f} has the rational root {r}")));
        }
        let disc = f.cubic_discriminant()?;
        if disc.is_zero() {
            return Err(Error::MalformedField(format!("{f} has a repeated root")));
        }
        let sqrt_disc = disc
            .sqrt()
            .ok_or_else(|| Error::MalformedField(format!("discriminant {disc} of {f} is not a square")))?;

        let mut models = Vec::new();
        for g in std::iter::once(&f).chain(extra) {
            let prim = g.primitive();
            let monic_integral = monic_integral(&prim);
            for m in [prim.reverse().primitive(), prim, monic_integral] {
                if m.degree() == Some(3) && !models.contains(&m) {
                    models.push(m);
                }
            }
        }

        let mut field = CyclicCubicField {
            f,
            disc,
            sqrt_disc,
            sigma_alpha: [Rational::zero(), Rational::one(), Rational::zero()],
            sigma_alpha_sq: [Rational::zero(), Rational::zero(), Rational::one()],
            models,
        };
        let shell = Arc::new(field.clone());
        let alpha = CubicElement::alpha(&shell);
        let a2 = shell.f.coeff(2);
        let fprime = CubicElement::from_poly(&shell, &shell.f.derivative());
        let fprime_inv = fprime
            .inv()
            .ok_or_else(|| Error::MalformedField("f'(α) is not invertible".into()))?;
        // σ(α) = ((−a₂ − α) + √disc / f′(α)) / 2
        let s = alpha
            .embed(&-&a2)
            .sub(&alpha)
            .add(&fprime_inv.scale(&shell.sqrt_disc))
            .scale(&Rational::new(1, 2));
        let s2 = s.mul(&s);
        field.sigma_alpha = s.c.clone();
        field.sigma_alpha_sq = s2.c;
        let field = Arc::new(field);

        let alpha = CubicElement::alpha(&field);
        let sa = field.sigma(&alpha);
        if !field.eval_f(&sa).is_zero() {
            return Err(Error::MalformedField("σ(α) is not a root of f".into()));
        }
        if sa == alpha || field.sigma(&field.sigma(&sa)) != alpha {
            return Err(Error::MalformedField("σ does not have order 3".into()));
        }
        Ok(field)
    }

    /// The monic defining polynomial.
    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn disc(&self) -> &Rational {
        &self.disc
    }

    /// The positive square root of the discriminant.
    pub fn sqrt_disc(&self) -> &Rational {
        &self.sqrt_disc
    }

    /// Integral cubics (primitive, monic-integral and reversed forms) whose
    /// roots generate this field.
    pub fn integral_models(&self) -> &[UniPoly] {
        &self.models
    }

    /// The generator σ: α ↦ σ(α).
    pub fn sigma(&self, e: &CubicElement) -> CubicElement {
        let [c0, c1, c2] = &e.c;
        let mut out = [c0.clone(), Rational::zero(), Rational::zero()];
        for i in 0..3 {
            out[i] += &(c1 * &self.sigma_alpha[i]);
            out[i] += &(c2 * &self.sigma_alpha_sq[i]);
        }
        CubicElement { field: e.field.clone(), c: out }
    }

    /// σ(α) as an element.
    pub fn galois_generator(self: &Arc<Self>) -> CubicElement {
        CubicElement { field: self.clone(), c: self.sigma_alpha.clone() }
    }

    /// `p(e)` for a rational polynomial `p`.
    pub fn eval_poly(&self, p: &UniPoly, e: &CubicElement) -> CubicElement {
        let mut acc = e.zero_like();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(e).add(&e.embed(c));
        }
        acc
    }

    fn eval_f(&self, e: &CubicElement) -> CubicElement {
        self.eval_poly(&self.f, e)
    }

    fn same(&self, other: &CyclicCubicField) -> bool {
        std::ptr::eq(self, other) || self.f == other.f
    }
}

/// `a₃x³ + a₂x² + a₁x + a₀` ↦ `z³ + a₂z² + a₁a₃z + a₀a₃²` (z = a₃x).
pub fn monic_integral(p: &UniPoly) -> UniPoly {
    let a3 = p.coeff(3);
    UniPoly::new(vec![p.coeff(0) * &a3 * &a3, p.coeff(1) * &a3, p.coeff(2), Rational::one()])
}

/// `c₀ + c₁α + c₂α²` in a cyclic cubic field.
#[derive(Clone)]
pub struct CubicElement {
    field: Arc<CyclicCubicField>,
    c: [Rational; 3],
}

impl CubicElement {
    pub fn new(field: &Arc<CyclicCubicField>, c: [Rational; 3]) -> Self {
        CubicElement { field: field.clone(), c }
    }

    pub fn from_rational(field: &Arc<CyclicCubicField>, q: &Rational) -> Self {
        Self::new(field, [q.clone(), Rational::zero(), Rational::zero()])
    }

    /// The class α of `x`.
    pub fn alpha(field: &Arc<CyclicCubicField>) -> Self {
        Self::new(field, [Rational::zero(), Rational::one(), Rational::zero()])
    }

    /// Reduce a polynomial in α modulo `f`.
    pub fn from_poly(field: &Arc<CyclicCubicField>, p: &UniPoly) -> Self {
        let r = p.rem(&field.f).expect("f nonzero");
        Self::new(field, [r.coeff(0), r.coeff(1), r.coeff(2)])
    }

    pub fn field(&self) -> &Arc<CyclicCubicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.c
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(self.c.to_vec())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.field, [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k])
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    pub fn sigma(&self) -> Self {
        self.field.sigma(self)
    }

    /// Sum of the three conjugates.
    pub fn trace(&self) -> Rational {
        let s = self.sigma();
        let t = self.add(&s).add(&s.sigma());
        debug_assert!(t.is_rational());
        t.c[0].clone()
    }

    /// Product of the three conjugates.
    pub fn norm(&self) -> Rational {
        let s = self.sigma();
        let n = self.mul(&s).mul(&s.sigma());
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    /// Inverse via the extended gcd of the representative with `f`.
    pub fn cubic_invert(&self) -> Result<Self, Error> {
        self.inv().ok_or(Error::DivisionByZero)
    }

    /// A square root in `K3`, if one exists (proposed numerically from the
    /// real embeddings, certified exactly).
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_rational() {
            return self.c[0].sqrt().map(|r| self.embed(&r));
        }
        super::iso::sqrt_in_field(self)
    }

    /// Characteristic polynomial of multiplication by `self` over Q.
    pub fn char_poly(&self) -> UniPoly {
        // t³ − tr t² + e₂ t − N with e₂ = tr(x·σx)… computed from conjugates.
        let s1 = self.sigma();
        let s2 = s1.sigma();
        let e1 = self.add(&s1).add(&s2);
        let e2 = self.mul(&s1).add(&s1.mul(&s2)).add(&s2.mul(self));
        let e3 = self.mul(&s1).mul(&s2);
        UniPoly::new(vec![-e3.c[0].clone(), e2.c[0].clone(), -e1.c[0].clone(), Rational::one()])
    }
}

impl fmt::Debug for CubicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CubicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::algebra::upoly::fmt_terms(f, &self.to_poly().coeffs().to_vec(), "α")
    }
}

impl PartialEq for CubicElement {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.field.same(&other.field), "elements of different fields");
        self.c == other.c
    }
}

impl FieldElement for CubicElement {
    fn zero_like(&self) -> Self {
        Self::from_rational(&self.field, &Rational::zero())
    }
    fn one_like(&self) -> Self {
        Self::from_rational(&self.field, &Rational::one())
    }
    fn embed(&self, q: &Rational) -> Self {
        Self::from_rational(&self.field, q)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.field, [&self.c[0] + &rhs.c[0], &self.c[1] + &rhs.c[1], &self.c[2] + &rhs.c[2]])
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.field, [&self.c[0] - &rhs.c[0], &self.c[1] - &rhs.c[1], &self.c[2] - &rhs.c[2]])
    }
    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.c, &rhs.c);
        let mut e: [Rational; 5] = Default::default();
        for i in 0..3 {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if !b[j].is_zero() {
                    e[i + j] += &(&a[i] * &b[j]);
                }
            }
        }
        // α³ = −f₂α² − f₁α − f₀
        let f = &self.field.f;
        let (f0, f1, f2) = (f.coeff(0), f.coeff(1), f.coeff(2));
        for k in [4usize, 3] {
            let top = std::mem::take(&mut e[k]);
            if top.is_zero() {
                continue;
            }
            e[k - 1] -= &(&f2 * &top);
            e[k - 2] -= &(&f1 * &top);
            e[k - 3] -= &(&f0 * &top);
        }
        let [e0, e1, e2, _, _] = e;
        Self::new(&self.field, [e0, e1, e2])
    }
    fn neg(&self) -> Self {
        Self::new(&self.field, [-&self.c[0], -&self.c[1], -&self.c[2]])
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return self.c[0].inv().map(|r| self.embed(&r));
        }
        let (g, s, _) = self.to_poly().xgcd(&self.field.f);
        debug_assert_eq!(g.degree(), Some(0));
        Some(Self::from_poly(&self.field, &s))
    }
    fn height_bits(&self) -> u64 {
        self.c.iter().map(Rational::height_bits).max().unwrap_or(0)
    }
    fn residue_map(&self, p: u64) -> Option<ResidueMap> {
        cubic_root_mod(&self.field.f, p).map(|r| ResidueMap { p, alpha: Some(r), sqrt_delta: None })
    }
    fn reduce(&self, map: &ResidueMap) -> Option<Fp> {
        let a = Fp { v: map.alpha?, p: map.p };
        let mut acc = Fp { v: 0, p: map.p };
        for c in self.c.iter().rev() {
            acc = acc.mul(&a).add(&Fp::from_rational(c, map.p)?);
        }
        Some(acc)
    }
}

/// A root mod `p` of a monic cubic with `p`-integral coefficients and
/// `p ∤ disc`, by exhaustive search.
pub(crate) fn cubic_root_mod(f: &UniPoly, p: u64) -> Option<u64> {
    let disc = f.cubic_discriminant().ok()?;
    if Fp::from_rational(&disc, p)?.v == 0 {
        return None;
    }
    let c: Vec<Fp> = f.coeffs().iter().map(|c| Fp::from_rational(c, p)).collect::<Option<_>>()?;
    (0..p).find(|&x| {
        let x = Fp { v: x, p };
        c.iter().rev().fold(Fp { v: 0, p }, |acc, k| acc.mul(&x).add(k)).v == 0
    })
}

/// σ, acting on the element's own field.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sigma;

impl Automorphism<CubicElement> for Sigma {
    fn apply(&self, x: &CubicElement) -> CubicElement {
        x.sigma()
    }
    fn order(&self) -> u32 {
        3
    }
}
