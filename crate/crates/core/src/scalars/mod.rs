//! Exact coefficient fields.
//!
//! A field is a tower `B ⊂ L ⊂ K` where `B` is Q or `F_p`, `L` adjoins `q`
//! (either as a free variable, giving `B(q)`, or as a root of a cyclotomic
//! factor, giving `B[q]/(m)`), and `K` optionally adjoins a free `mu`,
//! giving `L(mu)`. Every level keeps values in a unique reduced form, so
//! equality is structural.

mod base;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub use base::BaseElem;
pub use poly::{Cyc, FieldElem, Poly, RatFunc};

use crate::error::{Error, Result};

/// How `q` enters the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QMode {
    /// `q` is a free variable, hence of infinite multiplicative order.
    Transcendental,
    /// `q` is a primitive `n`-th root of unity, the class of `X` modulo
    /// `modulus` (coefficients low degree first). When `modulus` is `None`
    /// it is computed.
    RootOfUnity { n: u32, modulus: Option<Vec<i64>> },
}

/// How `mu` enters the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuMode {
    PrimeFieldValue(u64),
    RationalValue { num: i64, den: i64 },
    Transcendental,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    pub characteristic: u64,
    pub q_mode: QMode,
    pub mu_mode: MuMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QOrder {
    Infinite,
    Finite(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuClass {
    InPrimeField(u64),
    InQ(BigRational),
    Transcendental,
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative order of `p` modulo `n` (requires `gcd(p, n) = 1`).
fn mult_order(p: u64, n: u64) -> u32 {
    let mut k = 1;
    let mut x = p % n;
    while x != 1 % n {
        x = x * p % n;
        k += 1;
    }
    k
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn qpoly(c: &[BigInt]) -> Poly<BaseElem> {
    Poly::from_coeffs(c.iter().map(|x| BaseElem::Q(BigRational::from_integer(x.clone()))).collect())
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_coeffs(n: u32) -> Vec<BigInt> {
    let mut xn = vec![BigInt::zero(); n as usize + 1];
    xn[0] = BigInt::from(-1);
    xn[n as usize] = BigInt::one();
    let mut f = qpoly(&xn);
    for d in divisors(n) {
        if d < n {
            let phi = qpoly(&cyclotomic_coeffs(d));
            f = f.divrem(&phi).0;
        }
    }
    f.c.iter()
        .map(|c| match c {
            BaseElem::Q(r) => r.to_integer(),
            BaseElem::Fp { .. } => unreachable!(),
        })
        .collect()
}

fn base_poly(c: &[i64], p: u64) -> Poly<BaseElem> {
    Poly::from_coeffs(c.iter().map(|&x| BaseElem::from_i64(x, p)).collect())
}

fn cyclotomic_mod(n: u32, p: u64) -> Poly<BaseElem> {
    let c = cyclotomic_coeffs(n);
    if p == 0 {
        return qpoly(&c);
    }
    let pb = BigInt::from(p);
    Poly::from_coeffs(
        c.iter()
            .map(|x| BaseElem::Fp { v: x.mod_floor(&pb).to_u64().expect("residue fits"), p })
            .collect(),
    )
}

/// Degree of every irreducible factor of the `n`-th cyclotomic polynomial
/// over the prime field of characteristic `p`.
fn factor_degree(n: u32, p: u64) -> usize {
    if p == 0 {
        cyclotomic_coeffs(n).len() - 1
    } else {
        mult_order(p, n as u64) as usize
    }
}

/// First monic factor of the cyclotomic polynomial modulo `p`, in
/// lexicographic order of the lower coefficients.
fn find_cyclotomic_factor(n: u32, p: u64) -> Poly<BaseElem> {
    let phi = cyclotomic_mod(n, p);
    let k = factor_degree(n, p);
    let mut digits = vec![0u64; k];
    loop {
        let mut c: Vec<BaseElem> = digits.iter().map(|&v| BaseElem::Fp { v, p }).collect();
        c.push(BaseElem::Fp { v: 1, p });
        let cand = Poly::from_coeffs(c);
        if phi.rem(&cand).is_zero() {
            return cand;
        }
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < k, "cyclotomic polynomial has a factor of degree ord_n(p)");
        }
    }
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    modulus: Option<Arc<Poly<BaseElem>>>,
}

/// A validated coefficient field. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.0.spec == o.0.spec && self.0.modulus == o.0.modulus)
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Self> {
        let p = spec.characteristic;
        if p != 0 && !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is neither 0 nor prime")));
        }
        if p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!("characteristic {p} is too large")));
        }
        let modulus = match &spec.q_mode {
            QMode::Transcendental => None,
            QMode::RootOfUnity { n, modulus } => {
                let n = *n;
                if n < 2 {
                    return Err(Error::InvalidField("root-of-unity order must be at least 2".into()));
                }
                if p != 0 && (n as u64).is_multiple_of(p) {
                    return Err(Error::InvalidField(format!(
                        "no primitive {n}-th root of unity exists in characteristic {p}"
                    )));
                }
                let m = match modulus {
                    None => {
                        if p == 0 {
                            cyclotomic_mod(n, 0)
                        } else {
                            find_cyclotomic_factor(n, p)
                        }
                    }
                    Some(c) => {
                        let m = base_poly(c, p);
                        let k = factor_degree(n, p);
                        if m.deg() != Some(k) || !m.lead().is_some_and(|l| l.is_one()) {
                            return Err(Error::InvalidField(format!(
                                "modulus must be monic of degree {k} for order {n}"
                            )));
                        }
                        if !cyclotomic_mod(n, p).rem(&m).is_zero() {
                            return Err(Error::InvalidField(format!(
                                "modulus does not divide the {n}-th cyclotomic polynomial"
                            )));
                        }
                        m
                    }
                };
                Some(Arc::new(m))
            }
        };
        match spec.mu_mode {
            MuMode::PrimeFieldValue(r) => {
                if p == 0 {
                    return Err(Error::InvalidField("prime-field value of mu needs p > 0".into()));
                }
                if r >= p {
                    return Err(Error::InvalidField(format!("residue {r} is not reduced modulo {p}")));
                }
            }
            MuMode::RationalValue { num, den } => {
                if p != 0 {
                    return Err(Error::InvalidField("rational value of mu needs p = 0".into()));
                }
                if den == 0 {
                    return Err(Error::InvalidField("mu has zero denominator".into()));
                }
                if num.gcd(&den) != 1 && num != 0 || den < 0 || (num == 0 && den != 1) {
                    return Err(Error::InvalidField(format!("{num}/{den} is not in lowest terms")));
                }
            }
            MuMode::Transcendental => {}
        }
        Ok(Field(Arc::new(FieldInner { spec, modulus })))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.characteristic
    }

    /// The reduction modulus for `q`, low degree first, when `q` has finite order.
    pub fn modulus_text(&self) -> Option<String> {
        self.0.modulus.as_ref().map(|m| poly_text(m, "X", BaseElem::pretty))
    }

    pub fn q_order(&self) -> QOrder {
        match self.0.spec.q_mode {
            QMode::Transcendental => QOrder::Infinite,
            QMode::RootOfUnity { n, .. } => QOrder::Finite(n),
        }
    }

    pub fn mu_classify(&self) -> MuClass {
        match self.0.spec.mu_mode {
            MuMode::PrimeFieldValue(r) => MuClass::InPrimeField(r),
            MuMode::RationalValue { num, den } => {
                MuClass::InQ(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            MuMode::Transcendental => MuClass::Transcendental,
        }
    }

    fn lift(&self, b: BaseElem) -> LElem {
        match &self.0.modulus {
            None => LElem::Frac(RatFunc::constant(b)),
            Some(m) => LElem::Cyc(Cyc::new(Poly::constant(b), m.clone())),
        }
    }

    pub fn base(&self, b: BaseElem) -> Scalar {
        Scalar(Repr::L(self.lift(b)))
    }

    pub fn int(&self, x: i64) -> Scalar {
        self.base(BaseElem::from_i64(x, self.characteristic()))
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// `num/den` mapped into the field.
    pub fn rational(&self, num: i64, den: i64) -> Result<Scalar> {
        self.int(num).checked_div(&self.int(den))
    }

    pub fn big_rational(&self, r: &BigRational) -> Result<Scalar> {
        let p = self.characteristic();
        if p == 0 {
            return Ok(self.base(BaseElem::Q(r.clone())));
        }
        let pb = BigInt::from(p);
        let n = r.numer().mod_floor(&pb).to_i64().expect("residue fits");
        let d = r.denom().mod_floor(&pb).to_i64().expect("residue fits");
        self.rational(n, d)
    }

    pub fn q(&self) -> Scalar {
        let one = BaseElem::from_i64(1, self.characteristic());
        let x = Poly::monomial(one.clone(), 1);
        Scalar(Repr::L(match &self.0.modulus {
            None => LElem::Frac(RatFunc::from_poly(x, one)),
            Some(m) => LElem::Cyc(Cyc::new(x, m.clone())),
        }))
    }

    pub fn q_pow(&self, k: i64) -> Scalar {
        self.q().pow(k).expect("q is a unit")
    }

    /// The symbol `mu` as a scalar (its value when it is not transcendental).
    pub fn mu(&self) -> Scalar {
        match self.0.spec.mu_mode {
            MuMode::PrimeFieldValue(r) => self.int(r as i64),
            MuMode::RationalValue { num, den } => self.rational(num, den).expect("validated denominator"),
            MuMode::Transcendental => {
                let one = self.lift(BaseElem::from_i64(1, self.characteristic()));
                Scalar(Repr::Mu(RatFunc::from_poly(Poly::monomial(one.clone(), 1), one)))
            }
        }
    }

    /// A small random scalar, mixing integers, powers of `q` and `mu` and an
    /// occasional denominator.
    pub fn random_scalar<R: Rng>(&self, rng: &mut R) -> Scalar {
        let mut s = self.zero();
        let terms = rng.gen_range(1..=2);
        for _ in 0..terms {
            let c = self.int(rng.gen_range(-3..=3));
            let t = c * self.q_pow(rng.gen_range(-1..=2));
            let t = if matches!(self.0.spec.mu_mode, MuMode::Transcendental) && rng.gen_bool(0.3) {
                t * self.mu()
            } else {
                t
            };
            s = s + t;
        }
        if rng.gen_bool(0.15) {
            let d = self.q() + self.int(rng.gen_range(1..=2));
            if let Ok(v) = s.checked_div(&d) {
                s = v;
            }
        }
        s
    }
}

/// Middle level of the tower: `B(q)` or `B[q]/(m)`.
#[derive(Clone, PartialEq, Debug)]
pub enum LElem {
    Frac(RatFunc<BaseElem>),
    Cyc(Cyc<BaseElem>),
}

macro_rules! lelem_binop {
    ($name:ident) => {
        fn $name(&self, o: &Self) -> Self {
            match (self, o) {
                (LElem::Frac(a), LElem::Frac(b)) => LElem::Frac(a.$name(b)),
                (LElem::Cyc(a), LElem::Cyc(b)) => LElem::Cyc(a.$name(b)),
                _ => panic!("scalars from different fields"),
            }
        }
    };
}

impl FieldElem for LElem {
    fn zero_like(&self) -> Self {
        match self {
            LElem::Frac(a) => LElem::Frac(a.zero_like()),
            LElem::Cyc(a) => LElem::Cyc(a.zero_like()),
        }
    }
    fn one_like(&self) -> Self {
        match self {
            LElem::Frac(a) => LElem::Frac(a.one_like()),
            LElem::Cyc(a) => LElem::Cyc(a.one_like()),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            LElem::Frac(a) => a.is_zero(),
            LElem::Cyc(a) => a.is_zero(),
        }
    }
    fn is_one(&self) -> bool {
        match self {
            LElem::Frac(a) => a.is_one(),
            LElem::Cyc(a) => a.is_one(),
        }
    }
    lelem_binop!(f_add);
    lelem_binop!(f_sub);
    lelem_binop!(f_mul);
    fn f_neg(&self) -> Self {
        match self {
            LElem::Frac(a) => LElem::Frac(a.f_neg()),
            LElem::Cyc(a) => LElem::Cyc(a.f_neg()),
        }
    }
    fn f_inv(&self) -> Option<Self> {
        match self {
            LElem::Frac(a) => a.f_inv().map(LElem::Frac),
            LElem::Cyc(a) => a.f_inv().map(LElem::Cyc),
        }
    }
}

impl LElem {
    fn as_base(&self) -> Option<BaseElem> {
        match self {
            LElem::Frac(a) => a.as_constant(),
            LElem::Cyc(a) => match a.r.as_constant()? {
                None => Some(a.m.c[0].zero_like()),
                Some(c) => Some(c.clone()),
            },
        }
    }

    fn pretty(&self) -> String {
        match self {
            LElem::Frac(a) => frac_text(&a.num, &a.den, "q", BaseElem::pretty),
            LElem::Cyc(a) => poly_text(&a.r, "q", BaseElem::pretty),
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
enum Repr {
    L(LElem),
    Mu(RatFunc<LElem>),
}

/// An element of the coefficient field `K`.
#[derive(Clone, PartialEq, Debug)]
pub struct Scalar(Repr);

impl Scalar {
    fn promote(&self) -> RatFunc<LElem> {
        match &self.0 {
            Repr::L(a) => RatFunc::constant(a.clone()),
            Repr::Mu(r) => r.clone(),
        }
    }

    fn demote(r: RatFunc<LElem>) -> Scalar {
        match r.as_constant() {
            Some(c) => Scalar(Repr::L(c)),
            None => Scalar(Repr::Mu(r)),
        }
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar> {
        Ok(self.f_mul(&o.inv()?))
    }

    pub fn inv(&self) -> Result<Scalar> {
        self.f_inv().ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, k: i64) -> Result<Scalar> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.f_mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.f_mul(&b);
            }
        }
        Ok(acc)
    }

    /// The value when it lies in the prime field.
    pub fn as_base(&self) -> Option<BaseElem> {
        match &self.0 {
            Repr::L(a) => a.as_base(),
            Repr::Mu(_) => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        match self.as_base()? {
            BaseElem::Q(r) if r.is_integer() => r.to_integer().to_i64(),
            BaseElem::Q(_) => None,
            BaseElem::Fp { v, .. } => Some(v as i64),
        }
    }

    /// Text is a single factor in a product (no top-level sum or quotient).
    fn is_atomic_text(s: &str) -> bool {
        !s.contains(' ') && !s.contains('/')
    }
}

impl FieldElem for Scalar {
    fn zero_like(&self) -> Self {
        match &self.0 {
            Repr::L(a) => Scalar(Repr::L(a.zero_like())),
            Repr::Mu(r) => Scalar(Repr::L(r.den.c[0].zero_like())),
        }
    }
    fn one_like(&self) -> Self {
        match &self.0 {
            Repr::L(a) => Scalar(Repr::L(a.one_like())),
            Repr::Mu(r) => Scalar(Repr::L(r.den.c[0].one_like())),
        }
    }
    fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::L(a) => a.is_zero(),
            Repr::Mu(_) => false,
        }
    }
    fn is_one(&self) -> bool {
        match &self.0 {
            Repr::L(a) => a.is_one(),
            Repr::Mu(_) => false,
        }
    }
    fn f_add(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::L(a), Repr::L(b)) => Scalar(Repr::L(a.f_add(b))),
            _ => Scalar::demote(self.promote().f_add(&o.promote())),
        }
    }
    fn f_sub(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::L(a), Repr::L(b)) => Scalar(Repr::L(a.f_sub(b))),
            _ => Scalar::demote(self.promote().f_sub(&o.promote())),
        }
    }
    fn f_mul(&self, o: &Self) -> Self {
        match (&self.0, &o.0) {
            (Repr::L(a), Repr::L(b)) => Scalar(Repr::L(a.f_mul(b))),
            _ => Scalar::demote(self.promote().f_mul(&o.promote())),
        }
    }
    fn f_neg(&self) -> Self {
        match &self.0 {
            Repr::L(a) => Scalar(Repr::L(a.f_neg())),
            Repr::Mu(r) => Scalar(Repr::Mu(r.f_neg())),
        }
    }
    fn f_inv(&self) -> Option<Self> {
        match &self.0 {
            Repr::L(a) => a.f_inv().map(|x| Scalar(Repr::L(x))),
            Repr::Mu(r) => r.f_inv().map(Scalar::demote),
        }
    }
}

macro_rules! scalar_op {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                self.$f(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
    };
}

scalar_op!(Add, add, f_add);
scalar_op!(Sub, sub, f_sub);
scalar_op!(Mul, mul, f_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.f_neg()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.f_neg()
    }
}

/// Renders a polynomial, highest degree first, e.g. `q^2 - 2*q + 1`.
pub(crate) fn poly_text<F: FieldElem>(p: &Poly<F>, var: &str, coeff: impl Fn(&F) -> String) -> String {
    let mut terms = Vec::new();
    for (k, c) in p.c.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = coeff(c);
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(product_term(&cs, &mono));
    }
    join_terms(&terms)
}

/// `coeff * mono` with unit coefficients elided and compound ones parenthesized.
pub(crate) fn product_term(cs: &str, mono: &str) -> String {
    if mono.is_empty() {
        return cs.to_string();
    }
    match cs {
        "1" => mono.to_string(),
        "-1" => format!("-{mono}"),
        _ if !cs.contains(' ') && !(cs.contains('/') && cs.chars().any(|c| c.is_alphabetic())) => {
            format!("{cs}*{mono}")
        }
        _ => format!("({cs})*{mono}"),
    }
}

pub(crate) fn join_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                s.push_str(" - ");
                s.push_str(rest);
            }
            None => {
                s.push_str(" + ");
                s.push_str(t);
            }
        }
    }
    s
}

fn frac_text<F: FieldElem>(num: &Poly<F>, den: &Poly<F>, var: &str, coeff: impl Fn(&F) -> String) -> String {
    let n = poly_text(num, var, &coeff);
    if den.deg() == Some(0) {
        return n;
    }
    let d = poly_text(den, var, &coeff);
    let n = if n.contains(' ') { format!("({n})") } else { n };
    let d = if d.chars().all(|c| c.is_alphanumeric() || c == '^') { d } else { format!("({d})") };
    format!("{n}/{d}")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::L(a) => write!(f, "{}", a.pretty()),
            Repr::Mu(r) => write!(f, "{}", frac_text(&r.num, &r.den, "mu", LElem::pretty)),
        }
    }
}

impl Scalar {
    /// Whether the printed form can be used as a factor without parentheses.
    pub fn prints_atomic(&self) -> bool {
        Scalar::is_atomic_text(&self.to_string())
    }

    /// True when the value is a negative rational number (used for signs in printing).
    pub fn is_negative_rational(&self) -> bool {
        self.as_base().is_some_and(|b| match b {
            BaseElem::Q(r) => r.is_negative(),
            _ => false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, q: QMode, mu: MuMode) -> Field {
        Field::new(FieldSpec { characteristic: p, q_mode: q, mu_mode: mu }).unwrap()
    }

    #[test]
    fn f3_addition_wraps() {
        let k = field(3, QMode::Transcendental, MuMode::PrimeFieldValue(1));
        assert_eq!(k.int(2) + k.int(2), k.int(1));
    }

    #[test]
    fn polynomial_cancellation() {
        let k = field(0, QMode::Transcendental, MuMode::RationalValue { num: 0, den: 1 });
        let q = k.q();
        let a = (&q * &q - k.one()).checked_div(&(&q - &k.one())).unwrap();
        assert_eq!(a, q + k.one());
    }

    #[test]
    fn square_root_of_unity_over_q() {
        let k = field(0, QMode::RootOfUnity { n: 2, modulus: None }, MuMode::RationalValue { num: 1, den: 1 });
        assert_eq!(k.q() * k.q(), k.one());
        assert_eq!(k.q(), k.int(-1));
        assert_eq!(k.modulus_text().unwrap(), "X + 1");
    }

    #[test]
    fn order_two_in_f3_is_two() {
        let k = field(3, QMode::RootOfUnity { n: 2, modulus: None }, MuMode::PrimeFieldValue(1));
        assert_eq!(k.q_order(), QOrder::Finite(2));
        assert_eq!(k.q(), k.int(2));
        assert_eq!(k.q().pow(2).unwrap(), k.one());
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        for (p, n) in [(0u64, 3u32), (0, 4), (0, 5), (0, 6), (2, 3), (2, 5), (3, 4), (5, 3), (3, 8), (7, 9)] {
            let k = field(p, QMode::RootOfUnity { n, modulus: None }, MuMode::Transcendental);
            assert!(k.q_pow(n as i64).is_one(), "q^{n} = 1 for p = {p}");
            for m in 1..n {
                assert!(!k.q_pow(m as i64).is_one(), "q^{m} != 1 for n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn modulus_validation() {
        let bad = FieldSpec {
            characteristic: 0,
            q_mode: QMode::RootOfUnity { n: 4, modulus: Some(vec![-1, 0, 1]) },
            mu_mode: MuMode::Transcendental,
        };
        assert!(matches!(Field::new(bad), Err(Error::InvalidField(_))));
        let good = FieldSpec {
            characteristic: 5,
            q_mode: QMode::RootOfUnity { n: 4, modulus: Some(vec![-2, 1]) },
            mu_mode: MuMode::Transcendental,
        };
        let k = Field::new(good).unwrap();
        assert_eq!(k.q(), k.int(2));
        let wrong = FieldSpec {
            characteristic: 3,
            q_mode: QMode::RootOfUnity { n: 3, modulus: None },
            mu_mode: MuMode::Transcendental,
        };
        assert!(Field::new(wrong).is_err());
        let composite = FieldSpec { characteristic: 4, q_mode: QMode::Transcendental, mu_mode: MuMode::Transcendental };
        assert!(Field::new(composite).is_err());
    }

    #[test]
    fn classification_of_q_and_mu() {
        let k = field(0, QMode::Transcendental, MuMode::RationalValue { num: -1, den: 2 });
        assert_eq!(k.q_order(), QOrder::Infinite);
        assert_eq!(k.mu_classify(), MuClass::InQ(BigRational::new((-1).into(), 2.into())));
        let k = field(3, QMode::Transcendental, MuMode::PrimeFieldValue(1));
        assert_eq!(k.mu_classify(), MuClass::InPrimeField(1));
        let k = field(3, QMode::Transcendental, MuMode::Transcendental);
        assert_eq!(k.mu_classify(), MuClass::Transcendental);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let k = field(0, QMode::Transcendental, MuMode::Transcendental);
        assert_eq!(k.one().checked_div(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn printing_is_canonical() {
        let k = field(0, QMode::Transcendental, MuMode::Transcendental);
        let q = k.q();
        let mu = k.mu();
        assert_eq!((&q * &q - k.int(2) * &q + k.one()).to_string(), "q^2 - 2*q + 1");
        assert_eq!(k.one().checked_div(&(&q + &k.one())).unwrap().to_string(), "1/(q + 1)");
        assert_eq!((&mu * &q + k.one()).to_string(), "q*mu + 1");
        assert_eq!((&mu * (&q + &k.one())).to_string(), "(q + 1)*mu");
        assert_eq!(k.rational(-1, 2).unwrap().to_string(), "-1/2");
        assert_eq!(mu.checked_div(&q).unwrap().to_string(), "(1/q)*mu");
    }

    #[test]
    fn mu_fraction_normalizes_to_constant() {
        let k = field(2, QMode::Transcendental, MuMode::Transcendental);
        let mu = k.mu();
        let r = (&mu * &mu - &mu).checked_div(&(&mu - &k.one())).unwrap();
        assert_eq!(r, mu);
        let c = (&mu * &k.q()).checked_div(&mu).unwrap();
        assert_eq!(c, k.q());
    }
}
