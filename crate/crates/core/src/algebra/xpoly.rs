//! Sparse commutative polynomials in the `x3`-variables of each tensor slot.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::scalars::{Field, FieldElem, Poly, Scalar};

/// `C(d, k)` for `k = 0..=d`, mapped into the field.
fn binomial_row(field: &Field, d: u32) -> Vec<Scalar> {
    (0..=d)
        .map(|k| {
            let b = num_integer::binomial(BigInt::from(d), BigInt::from(k));
            field.big_rational(&BigRational::from_integer(b)).expect("integers map into the field")
        })
        .collect()
}

/// Polynomial in `x_{13}, ..., x_{n3}`: exponent vector to nonzero coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct XPoly {
    pub(crate) terms: BTreeMap<Vec<u32>, Scalar>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Scalar, arity: usize) -> Self {
        Self::monomial(c, vec![0; arity])
    }

    pub fn monomial(c: Scalar, e: Vec<u32>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        XPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    /// The constant coefficient, when the polynomial has no positive-degree term.
    pub fn as_constant(&self) -> Option<Option<&Scalar>> {
        match self.terms.len() {
            0 => Some(None),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&k| k == 0).then_some(Some(c))
            }
            _ => None,
        }
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub(crate) fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().f_add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        XPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.f_neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.f_neg());
        }
        r
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        XPoly { terms: self.terms.iter().map(|(e, a)| (e.clone(), a.f_mul(c))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.f_mul(c2));
            }
        }
        r
    }

    /// Substitutes `x_{slot,3} -> x_{slot,3} + s`.
    pub fn shift(&self, field: &Field, slot: usize, s: &Scalar) -> Self {
        if s.is_zero() || self.is_zero() {
            return self.clone();
        }
        let max = self.terms.keys().map(|e| e[slot]).max().unwrap_or(0) as usize;
        let mut pows = vec![field.one()];
        for k in 1..=max {
            let next = pows[k - 1].f_mul(s);
            pows.push(next);
        }
        let mut binoms: BTreeMap<u32, Vec<Scalar>> = BTreeMap::new();
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            let d = e[slot];
            let row = binoms.entry(d).or_insert_with(|| binomial_row(field, d));
            for k in 0..=d {
                let t = c.f_mul(&row[k as usize]).f_mul(&pows[(d - k) as usize]);
                let mut ne = e.clone();
                ne[slot] = k;
                r.add_term(ne, t);
            }
        }
        r
    }

    /// Univariate view (arity 1).
    pub fn to_univariate(&self, field: &Field) -> Poly<Scalar> {
        let deg = self.degree().map(|d| d as usize + 1).unwrap_or(0);
        let mut c = vec![field.zero(); deg];
        for (e, a) in &self.terms {
            c[e[0] as usize] = a.clone();
        }
        Poly::from_coeffs(c)
    }

    pub fn from_univariate(p: &Poly<Scalar>) -> Self {
        let mut r = Self::zero();
        for (k, c) in p.c.iter().enumerate() {
            r.add_term(vec![k as u32], c.clone());
        }
        r
    }

    /// Maps every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }
}
