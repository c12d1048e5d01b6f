//! Normal-form elements of `A`, of its localization `A[(x1 x2)^-1]`, and of
//! finite tensor products.
//!
//! Every element is stored as `sum_beta f_beta(x3) x^beta` with the
//! coefficient polynomial on the left, so multiplication is the single rule
//!
//! ```text
//! (f x^b)(g x^c) = q^{b2 c1} f(x3) g(x3 - b1 alpha - b2 mu) x^{b + c}
//! ```
//!
//! applied slot by slot in the tensor case.

mod parse;
mod print;
mod xpoly;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

pub use parse::parse_element;
pub use xpoly::XPoly;

use crate::error::{Error, Result};
use crate::presentation::AlgebraParams;
use crate::scalars::{FieldElem, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Mode {
    /// The algebra `A` itself: exponents are non-negative.
    Polynomial,
    /// The localization at `x1 x2`: exponents range over the integers.
    Laurent,
}

/// Eigenvalues of `(omega_x1, omega_x2, ad_x3)` on a weight vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    pub u1: Scalar,
    pub u2: Scalar,
    pub c: Scalar,
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.u1, self.u2, self.c)
    }
}

/// A sparse element in normal form.
#[derive(Clone, Debug)]
pub struct GradedElement {
    alg: AlgebraParams,
    mode: Mode,
    terms: BTreeMap<Vec<i64>, XPoly>,
}

impl PartialEq for GradedElement {
    fn eq(&self, o: &Self) -> bool {
        self.mode == o.mode && self.terms == o.terms && self.alg == o.alg
    }
}

impl GradedElement {
    pub fn zero(alg: &AlgebraParams, mode: Mode) -> Self {
        GradedElement { alg: alg.clone(), mode, terms: BTreeMap::new() }
    }

    pub fn scalar(alg: &AlgebraParams, mode: Mode, c: Scalar) -> Self {
        let n = alg.arity();
        Self::term(alg, mode, vec![0; 2 * n], XPoly::constant(c, n))
    }

    pub fn one(alg: &AlgebraParams, mode: Mode) -> Self {
        Self::scalar(alg, mode, alg.field().one())
    }

    /// `f * x^beta` (no exponent validation).
    fn term(alg: &AlgebraParams, mode: Mode, beta: Vec<i64>, f: XPoly) -> Self {
        let mut e = Self::zero(alg, mode);
        if !f.is_zero() {
            e.terms.insert(beta, f);
        }
        e
    }

    /// `c * x3^k * x^beta` for arity one, or with per-slot `x3` exponents in general.
    pub fn monomial(alg: &AlgebraParams, mode: Mode, c: Scalar, x3: &[u32], beta: &[i64]) -> Result<Self> {
        let n = alg.arity();
        if x3.len() != n || beta.len() != 2 * n {
            return Err(Error::InvalidParams(format!("monomial shape does not match arity {n}")));
        }
        if mode == Mode::Polynomial {
            if let Some(i) = beta.iter().position(|&b| b < 0) {
                return Err(Error::NegativeExponent(generator_name(n, i / 2, i % 2 + 1)));
            }
        }
        Ok(Self::term(alg, mode, beta.to_vec(), XPoly::monomial(c, x3.to_vec())))
    }

    /// `x^beta` with coefficient 1.
    pub fn x_pow(alg: &AlgebraParams, mode: Mode, beta: &[i64]) -> Result<Self> {
        Self::monomial(alg, mode, alg.field().one(), &vec![0; alg.arity()], beta)
    }

    /// The generator `x_{slot, k}` (`k` in 1..=3).
    pub fn generator(alg: &AlgebraParams, mode: Mode, slot: usize, k: usize) -> Self {
        let n = alg.arity();
        let mut beta = vec![0; 2 * n];
        let mut x3 = vec![0; n];
        match k {
            1 => beta[2 * slot] = 1,
            2 => beta[2 * slot + 1] = 1,
            3 => x3[slot] = 1,
            _ => panic!("generator index must be 1, 2 or 3"),
        }
        Self::term(alg, mode, beta, XPoly::monomial(alg.field().one(), x3))
    }

    pub fn x1(alg: &AlgebraParams, mode: Mode) -> Self {
        Self::generator(alg, mode, 0, 1)
    }

    pub fn x2(alg: &AlgebraParams, mode: Mode) -> Self {
        Self::generator(alg, mode, 0, 2)
    }

    pub fn x3(alg: &AlgebraParams, mode: Mode) -> Self {
        Self::generator(alg, mode, 0, 3)
    }

    /// `f(x3)` for a univariate polynomial over `K` (arity one).
    pub fn from_x3_poly(alg: &AlgebraParams, mode: Mode, f: &crate::scalars::Poly<Scalar>) -> Self {
        Self::term(alg, mode, vec![0; 2], XPoly::from_univariate(f))
    }

    /// Builds `sum f_beta x^beta` from graded pieces.
    pub fn from_graded(alg: &AlgebraParams, mode: Mode, pieces: impl IntoIterator<Item = (Vec<i64>, XPoly)>) -> Result<Self> {
        let mut e = Self::zero(alg, mode);
        for (b, f) in pieces {
            if b.len() != 2 * alg.arity() {
                return Err(Error::InvalidParams("exponent vector has the wrong length".into()));
            }
            if mode == Mode::Polynomial {
                if let Some(i) = b.iter().position(|&x| x < 0) {
                    return Err(Error::NegativeExponent(generator_name(alg.arity(), i / 2, i % 2 + 1)));
                }
            }
            e.add_piece(b, f);
        }
        Ok(e)
    }

    fn add_piece(&mut self, beta: Vec<i64>, f: XPoly) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(beta) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&f);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.alg
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn arity(&self) -> usize {
        self.alg.arity()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Graded pieces `(beta, f_beta)` in lexicographic order of `beta`.
    pub fn graded(&self) -> impl Iterator<Item = (&Vec<i64>, &XPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, beta: &[i64]) -> Option<&XPoly> {
        self.terms.get(beta)
    }

    /// Number of `(beta, x3-monomial)` terms.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(|f| f.terms.len()).sum()
    }

    /// Flat list of `(beta, x3 exponents, coefficient)`.
    pub fn flat_terms(&self) -> Vec<(Vec<i64>, Vec<u32>, Scalar)> {
        let mut out = Vec::new();
        for (b, f) in &self.terms {
            for (e, c) in f.terms() {
                out.push((b.clone(), e.clone(), c.clone()));
            }
        }
        out
    }

    /// The value as a scalar, when the element lies in `K`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(self.alg.field().zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let (b, f) = self.terms.iter().next().expect("one piece");
        if b.iter().any(|&x| x != 0) {
            return None;
        }
        f.as_constant().map(|c| c.cloned().unwrap_or_else(|| self.alg.field().zero()))
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.mode != o.mode {
            return Err(Error::ModeMismatch(format!("{:?} vs {:?}", self.mode, o.mode)));
        }
        if self.alg != o.alg {
            return Err(Error::ModeMismatch("elements belong to different algebras".into()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = self.clone();
        for (b, f) in &o.terms {
            r.add_piece(b.clone(), f.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        GradedElement {
            alg: self.alg.clone(),
            mode: self.mode,
            terms: self.terms.iter().map(|(b, f)| (b.clone(), f.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alg, self.mode);
        }
        GradedElement {
            alg: self.alg.clone(),
            mode: self.mode,
            terms: self.terms.iter().map(|(b, f)| (b.clone(), f.scale(c))).collect(),
        }
    }

    /// Scalar factor `prod_i q_i^{b_{2i} c_{2i-1}}` and per-slot shifts `-(b_{2i-1} alpha_i + b_{2i} mu_i)`.
    fn twist(&self, b: &[i64], c: &[i64]) -> Scalar {
        let field = self.alg.field();
        let mut e_total = 0i64;
        for (i, fac) in self.alg.factors().iter().enumerate() {
            e_total += fac.q_power * b[2 * i + 1] * c[2 * i];
        }
        field.q_pow(e_total)
    }

    fn shift_amount(&self, slot: usize, b1: i64, b2: i64) -> Scalar {
        let fac = self.alg.factor(slot);
        let field = self.alg.field();
        let mut s = field.zero();
        if fac.alpha == 1 && b1 != 0 {
            s = s + field.int(b1);
        }
        if b2 != 0 {
            s = s + field.int(b2) * &fac.mu;
        }
        s
    }

    /// `g(x3 - b1 alpha - b2 mu)` slot by slot.
    fn shifted(&self, g: &XPoly, b: &[i64]) -> XPoly {
        let field = self.alg.field();
        let mut r = g.clone();
        for i in 0..self.arity() {
            let s = self.shift_amount(i, b[2 * i], b[2 * i + 1]);
            if !s.is_zero() {
                r = r.shift(field, i, &s.f_neg());
            }
        }
        r
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = Self::zero(&self.alg, self.mode);
        for (b, f) in &self.terms {
            for (c, g) in &o.terms {
                let tw = self.twist(b, c);
                let coeff = f.mul(&self.shifted(g, b)).scale(&tw);
                let sum: Vec<i64> = b.iter().zip(c).map(|(x, y)| x + y).collect();
                r.add_piece(sum, coeff);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.alg, self.mode);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutator(&self, o: &Self) -> Result<Self> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }

    /// `omega_{x_{slot,k}}` for `k` in {1, 2}:
    /// `omega_x1(f x^b) = q^{-b2} f(x3 - alpha) x^b`, `omega_x2(f x^b) = q^{b1} f(x3 - mu) x^b`.
    pub fn omega(&self, k: usize, slot: usize) -> Self {
        let fac = self.alg.factor(slot);
        let field = self.alg.field();
        let mut r = Self::zero(&self.alg, self.mode);
        let shift = if k == 1 { fac.alpha_scalar.f_neg() } else { fac.mu.f_neg() };
        for (b, f) in &self.terms {
            let e = if k == 1 { -b[2 * slot + 1] } else { b[2 * slot] };
            let u = field.q_pow(fac.q_power * e);
            r.add_piece(b.clone(), f.shift(field, slot, &shift).scale(&u));
        }
        r
    }

    /// `ad_{x_{slot,3}}(f x^b) = (b1 alpha + b2 mu) f x^b`.
    pub fn ad_x3(&self, slot: usize) -> Self {
        let mut r = Self::zero(&self.alg, self.mode);
        for (b, f) in &self.terms {
            let c = self.shift_amount(slot, b[2 * slot], b[2 * slot + 1]);
            r.add_piece(b.clone(), f.scale(&c));
        }
        r
    }

    /// Two-sided inverse of `c x^beta` in the localization.
    pub fn invert_monomial(alg: &AlgebraParams, c: &Scalar, beta: &[i64]) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroElement);
        }
        let field = alg.field();
        let mut e = 0i64;
        for (i, fac) in alg.factors().iter().enumerate() {
            e += fac.q_power * beta[2 * i] * beta[2 * i + 1];
        }
        let coeff = c.inv()? * field.q_pow(e);
        let neg: Vec<i64> = beta.iter().map(|b| -b).collect();
        Self::monomial(alg, Mode::Laurent, coeff, &vec![0; alg.arity()], &neg)
    }

    /// Inverse of a unit of the form `c x^beta`, if the element is one.
    pub fn try_inverse(&self) -> Result<Self> {
        if self.mode != Mode::Laurent {
            return Err(Error::ModeMismatch("units other than scalars live in the localization".into()));
        }
        if self.terms.len() == 1 {
            let (b, f) = self.terms.iter().next().expect("one piece");
            if let Some(Some(c)) = f.as_constant() {
                return Self::invert_monomial(&self.alg, c, b);
            }
        }
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Err(Error::NotApplicable("element is not a monomial unit".into()))
    }

    /// Largest `x3`-degree among the coefficients.
    pub fn deg_x3(&self) -> Result<u32> {
        self.terms
            .values()
            .filter_map(|f| f.degree())
            .max()
            .ok_or(Error::ZeroElement)
    }

    /// Sorted exponent support.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree `max (deg_x3 + sum |beta_i|)` used by bounded frames.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms
            .iter()
            .flat_map(|(b, f)| {
                let bd: u64 = b.iter().map(|x| x.unsigned_abs()).sum();
                f.terms().map(move |(e, _)| bd + e.iter().map(|&k| k as u64).sum::<u64>())
            })
            .max()
    }

    pub fn embed_into_laurent(&self) -> Self {
        GradedElement { alg: self.alg.clone(), mode: Mode::Laurent, terms: self.terms.clone() }
    }

    /// Back to the polynomial algebra, when no exponent is negative.
    pub fn to_polynomial(&self) -> Result<Self> {
        for b in self.terms.keys() {
            if let Some(i) = b.iter().position(|&x| x < 0) {
                return Err(Error::NegativeExponent(generator_name(self.arity(), i / 2, i % 2 + 1)));
            }
        }
        Ok(GradedElement { alg: self.alg.clone(), mode: Mode::Polynomial, terms: self.terms.clone() })
    }

    /// Keeps only the graded pieces selected by `keep`.
    pub fn filter_graded(&self, keep: impl Fn(&[i64]) -> bool) -> Self {
        GradedElement {
            alg: self.alg.clone(),
            mode: self.mode,
            terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, f)| (b.clone(), f.clone())).collect(),
        }
    }

    /// Places a single-factor element into `slot` of the tensor algebra `target`.
    pub fn embed_in_slot(&self, target: &AlgebraParams, slot: usize) -> Self {
        let n = target.arity();
        let mut r = Self::zero(target, self.mode);
        for (b, f) in &self.terms {
            let mut beta = vec![0; 2 * n];
            beta[2 * slot] = b[0];
            beta[2 * slot + 1] = b[1];
            let mut g = XPoly::zero();
            for (e, c) in f.terms() {
                let mut ex = vec![0; n];
                ex[slot] = e[0];
                g.add_term(ex, c.clone());
            }
            r.add_piece(beta, g);
        }
        r
    }

    /// Random element with `terms` monomials of total degree at most `deg`.
    pub fn random<R: Rng>(alg: &AlgebraParams, mode: Mode, rng: &mut R, deg: u32, terms: usize) -> Self {
        let n = alg.arity();
        let mut r = Self::zero(alg, mode);
        for _ in 0..terms {
            let mut budget = rng.gen_range(0..=deg) as i64;
            let mut beta = vec![0i64; 2 * n];
            let mut x3 = vec![0u32; n];
            for b in beta.iter_mut() {
                let k = rng.gen_range(0..=budget);
                budget -= k;
                *b = if mode == Mode::Laurent && rng.gen_bool(0.4) { -k } else { k };
            }
            for x in x3.iter_mut() {
                let k = rng.gen_range(0..=budget);
                budget -= k;
                *x = k as u32;
            }
            let c = alg.field().random_scalar(rng);
            r.add_piece(beta, XPoly::monomial(c, x3));
        }
        r
    }
}

/// Name of generator `k` of slot `slot` in the element grammar.
pub(crate) fn generator_name(arity: usize, slot: usize, k: usize) -> String {
    if arity == 1 {
        format!("x{k}")
    } else {
        format!("x{}{k}", slot + 1)
    }
}

/// `lambda_beta = (q^{-beta2}, q^{beta1}, alpha beta1 + mu beta2)` for a single factor.
pub fn weight_of(alg: &AlgebraParams, beta: &[i64]) -> Weight {
    let field = alg.field();
    let fac = alg.factor(0);
    let mut c = field.zero();
    if fac.alpha == 1 {
        c = c + field.int(beta[0]);
    }
    c = c + field.int(beta[1]) * &fac.mu;
    Weight { u1: field.q_pow(-fac.q_power * beta[1]), u2: field.q_pow(fac.q_power * beta[0]), c }
}

macro_rules! elem_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&GradedElement> for &GradedElement {
            type Output = GradedElement;
            /// Panics when the operands belong to different algebras or modes.
            fn $m(self, o: &GradedElement) -> GradedElement {
                self.$f(o).expect("operands from the same algebra and mode")
            }
        }
        impl $tr<GradedElement> for GradedElement {
            type Output = GradedElement;
            fn $m(self, o: GradedElement) -> GradedElement {
                self.$f(&o).expect("operands from the same algebra and mode")
            }
        }
    };
}

elem_op!(Add, add, try_add);
elem_op!(Sub, sub, try_sub);
elem_op!(Mul, mul, try_mul);

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        self.neg_ref()
    }
}

impl Neg for GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests;
