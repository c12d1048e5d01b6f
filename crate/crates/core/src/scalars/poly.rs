//! Dense univariate polynomials, rational functions and residue rings over a
//! generic exact field. These are the building blocks of the scalar tower.

use std::fmt::Debug;
use std::sync::Arc;

/// Minimal exact-field interface used by the generic containers below.
///
/// Every method takes a receiver so that constants can be derived from an
/// existing element (the characteristic lives inside the values).
pub trait FieldElem: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
    fn f_add(&self, o: &Self) -> Self;
    fn f_sub(&self, o: &Self) -> Self;
    fn f_mul(&self, o: &Self) -> Self;
    fn f_neg(&self) -> Self;
    fn f_inv(&self) -> Option<Self>;
}

/// Polynomial with coefficients stored low degree first and no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F> {
    pub c: Vec<F>,
}

impl<F: FieldElem> Poly<F> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn from_coeffs(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn constant(a: F) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// `a * X^k`
    pub fn monomial(a: F, k: usize) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        let mut c = vec![a.zero_like(); k + 1];
        c[k] = a;
        Poly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&F> {
        self.c.last()
    }

    /// Constant polynomial test; the zero polynomial counts as constant.
    pub fn as_constant(&self) -> Option<Option<&F>> {
        match self.c.len() {
            0 => Some(None),
            1 => Some(Some(&self.c[0])),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (i, b) in short.c.iter().enumerate() {
            c[i] = c[i].f_add(b);
        }
        Self::from_coeffs(c)
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|x| x.f_neg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let z = self.c[0].zero_like();
        let mut c = vec![z; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].f_add(&a.f_mul(b));
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale(&self, a: &F) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Poly { c: self.c.iter().map(|x| x.f_mul(a)).collect() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        match acc {
            Some(a) => a,
            None => match self.c.first() {
                Some(x) => Self::constant(x.one_like()),
                None => panic!("zero polynomial raised to the zeroth power has no coefficient template"),
            },
        }
    }

    /// Division with remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().expect("polynomial division by zero");
        let inv = dl.f_inv().expect("leading coefficient must be invertible");
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![dl.zero_like(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let t = r[k].f_mul(&inv);
            for (j, dc) in d.c.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].f_sub(&t.f_mul(dc));
            }
            q[k - dd] = t;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.f_inv().expect("nonzero lead")),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` and `g` monic.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let one = match (a.lead(), b.lead()) {
            (Some(x), _) | (None, Some(x)) => x.one_like(),
            (None, None) => return (Self::zero(), Self::zero(), Self::zero()),
        };
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::constant(one.clone()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(one));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lead().expect("nonzero gcd").f_inv().expect("invertible lead");
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let mut it = self.c.iter().rev();
        let mut acc = it.next()?.clone();
        for c in it {
            acc = acc.f_mul(x).f_add(c);
        }
        Some(acc)
    }

    /// Composition `self(g(X))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative_is_zero(&self) -> bool {
        self.c.iter().enumerate().skip(1).all(|(i, c)| {
            let mut s = c.zero_like();
            for _ in 0..i {
                s = s.f_add(c);
            }
            s.is_zero()
        })
    }
}

/// Quotient `num/den` with coprime parts, monic denominator, and `0 = 0/1`.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<F> {
    pub num: Poly<F>,
    pub den: Poly<F>,
}

impl<F: FieldElem> RatFunc<F> {
    pub fn from_poly(p: Poly<F>, one: F) -> Self {
        RatFunc { num: p, den: Poly::constant(one) }
    }

    pub fn constant(a: F) -> Self {
        let one = a.one_like();
        Self::from_poly(Poly::constant(a), one)
    }

    /// Builds a normalized fraction; `den` must be nonzero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        let one = den.lead().expect("zero denominator").one_like();
        if num.is_zero() {
            return Self::from_poly(num, one);
        }
        let (num, den) = if den.deg() == Some(0) {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.divrem(&g).0, den.divrem(&g).0)
            }
        };
        let l = den.lead().expect("nonzero").clone();
        if l.is_one() {
            RatFunc { num, den }
        } else {
            let inv = l.f_inv().expect("nonzero lead");
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.deg() == Some(0)
    }

    /// The value as a base constant, when it is one.
    pub fn as_constant(&self) -> Option<F> {
        if !self.is_polynomial() {
            return None;
        }
        match self.num.as_constant()? {
            None => Some(self.den.c[0].zero_like()),
            Some(c) => Some(c.clone()),
        }
    }
}

impl<F: FieldElem> FieldElem for RatFunc<F> {
    fn zero_like(&self) -> Self {
        Self::from_poly(Poly::zero(), self.den.c[0].one_like())
    }
    fn one_like(&self) -> Self {
        Self::constant(self.den.c[0].one_like())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }
    fn f_add(&self, o: &Self) -> Self {
        if self.is_polynomial() && o.is_polynomial() {
            return RatFunc { num: self.num.add(&o.num), den: self.den.clone() };
        }
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn f_sub(&self, o: &Self) -> Self {
        self.f_add(&o.f_neg())
    }
    fn f_mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return RatFunc { num: self.num.mul(&o.num), den: self.den.clone() };
        }
        // Cross-cancel so the product is already reduced.
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let n1 = self.num.divrem(&g1).0;
        let d2 = o.den.divrem(&g1).0;
        let n2 = o.num.divrem(&g2).0;
        let d1 = self.den.divrem(&g2).0;
        Self::new(n1.mul(&n2), d1.mul(&d2))
    }
    fn f_neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn f_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()))
    }
}

/// Residue class modulo a fixed irreducible polynomial.
#[derive(Clone, PartialEq, Debug)]
pub struct Cyc<F> {
    pub r: Poly<F>,
    pub m: Arc<Poly<F>>,
}

impl<F: FieldElem> Cyc<F> {
    pub fn new(r: Poly<F>, m: Arc<Poly<F>>) -> Self {
        let r = if r.c.len() >= m.c.len() { r.rem(&m) } else { r };
        Cyc { r, m }
    }

    fn one_coeff(&self) -> F {
        self.m.c[0].one_like()
    }
}

impl<F: FieldElem> FieldElem for Cyc<F> {
    fn zero_like(&self) -> Self {
        Cyc { r: Poly::zero(), m: self.m.clone() }
    }
    fn one_like(&self) -> Self {
        Cyc { r: Poly::constant(self.one_coeff()), m: self.m.clone() }
    }
    fn is_zero(&self) -> bool {
        self.r.is_zero()
    }
    fn is_one(&self) -> bool {
        self.r.is_one()
    }
    fn f_add(&self, o: &Self) -> Self {
        Cyc { r: self.r.add(&o.r), m: self.m.clone() }
    }
    fn f_sub(&self, o: &Self) -> Self {
        Cyc { r: self.r.sub(&o.r), m: self.m.clone() }
    }
    fn f_mul(&self, o: &Self) -> Self {
        Cyc::new(self.r.mul(&o.r), self.m.clone())
    }
    fn f_neg(&self) -> Self {
        Cyc { r: self.r.neg(), m: self.m.clone() }
    }
    fn f_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = Poly::xgcd(&self.r, &self.m);
        if g.deg() != Some(0) {
            return None;
        }
        Some(Cyc::new(s, self.m.clone()))
    }
}
