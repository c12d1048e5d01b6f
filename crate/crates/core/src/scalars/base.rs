//! Prime fields: the rationals and `F_p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::FieldElem;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum BaseElem {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl BaseElem {
    pub fn from_i64(x: i64, p: u64) -> Self {
        if p == 0 {
            BaseElem::Q(BigRational::from_integer(BigInt::from(x)))
        } else {
            BaseElem::Fp { v: x.rem_euclid(p as i64) as u64, p }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseElem::Q(_) => 0,
            BaseElem::Fp { p, .. } => *p,
        }
    }

    /// Canonical text: a reduced fraction over Q, a residue in `0..p` over `F_p`.
    pub fn pretty(&self) -> String {
        match self {
            BaseElem::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            BaseElem::Fp { v, p } if 2 * v > *p => format!("-{}", p - v),
            BaseElem::Fp { v, .. } => v.to_string(),
        }
    }

    /// Negative rationals, and residues printed with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            BaseElem::Q(r) => r.is_negative(),
            BaseElem::Fp { v, p } => 2 * v > *p,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl FieldElem for BaseElem {
    fn zero_like(&self) -> Self {
        match self {
            BaseElem::Q(_) => BaseElem::Q(BigRational::zero()),
            BaseElem::Fp { p, .. } => BaseElem::Fp { v: 0, p: *p },
        }
    }
    fn one_like(&self) -> Self {
        match self {
            BaseElem::Q(_) => BaseElem::Q(BigRational::one()),
            BaseElem::Fp { p, .. } => BaseElem::Fp { v: 1, p: *p },
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            BaseElem::Q(r) => r.is_zero(),
            BaseElem::Fp { v, .. } => *v == 0,
        }
    }
    fn is_one(&self) -> bool {
        match self {
            BaseElem::Q(r) => r.is_one(),
            BaseElem::Fp { v, .. } => *v == 1,
        }
    }
    fn f_add(&self, o: &Self) -> Self {
        match (self, o) {
            (BaseElem::Q(a), BaseElem::Q(b)) => BaseElem::Q(a + b),
            (BaseElem::Fp { v: a, p }, BaseElem::Fp { v: b, .. }) => BaseElem::Fp { v: (a + b) % p, p: *p },
            _ => panic!("mixed characteristics"),
        }
    }
    fn f_sub(&self, o: &Self) -> Self {
        self.f_add(&o.f_neg())
    }
    fn f_mul(&self, o: &Self) -> Self {
        match (self, o) {
            (BaseElem::Q(a), BaseElem::Q(b)) => BaseElem::Q(a * b),
            (BaseElem::Fp { v: a, p }, BaseElem::Fp { v: b, .. }) => {
                BaseElem::Fp { v: (*a as u128 * *b as u128 % *p as u128) as u64, p: *p }
            }
            _ => panic!("mixed characteristics"),
        }
    }
    fn f_neg(&self) -> Self {
        match self {
            BaseElem::Q(a) => BaseElem::Q(-a),
            BaseElem::Fp { v, p } => BaseElem::Fp { v: (p - v) % p, p: *p },
        }
    }
    fn f_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            BaseElem::Q(a) => BaseElem::Q(a.recip()),
            BaseElem::Fp { v, p } => BaseElem::Fp { v: pow_mod(*v, p - 2, *p), p: *p },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_and_negation() {
        let a = BaseElem::from_i64(2, 5);
        assert_eq!(a.f_mul(&a.f_inv().unwrap()), a.one_like());
        assert_eq!(a.f_neg(), BaseElem::from_i64(3, 5));
        assert_eq!(BaseElem::from_i64(-1, 3).pretty(), "-1");
        assert_eq!(BaseElem::from_i64(2, 5).pretty(), "2");
    }

    #[test]
    fn rational_printing() {
        let h = BaseElem::from_i64(1, 0).f_mul(&BaseElem::from_i64(-2, 0).f_inv().unwrap());
        assert_eq!(h.pretty(), "-1/2");
    }
}
