//! The maps `sigma_lambda` and `tau`, their composition, and a bounded check
//! that a triple of images defines an automorphism.
//!
//! An [`Automorphism`] with data `(l1, l2, l3, swap)` is `sigma_l tau^swap`:
//! it sends `x3 -> x3 + l3` and either `x1 -> l1 x1, x2 -> l2 x2` or, with the
//! swap, `x1 -> l2 x2, x2 -> l1 x1`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{GradedElement, Mode};
use crate::error::{Error, Result};
use crate::linalg::{element_vector, Echelon};
use crate::presentation::{require_single, AlgebraParams};
use crate::scalars::{FieldElem, Scalar};
use crate::structure::is_fixed_by_omega;

/// Degree used by [`Automorphism::is_verified`].
pub const DEFAULT_VERIFY_DEGREE: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct Automorphism {
    params: AlgebraParams,
    pub lambda1: Scalar,
    pub lambda2: Scalar,
    pub lambda3: GradedElement,
    pub swap: bool,
}

#[derive(Serialize)]
struct Wire {
    lambda1: String,
    lambda2: String,
    lambda3: String,
    swap: bool,
}

impl Serialize for Automorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            lambda1: self.lambda1.to_string(),
            lambda2: self.lambda2.to_string(),
            lambda3: self.lambda3.to_string(),
            swap: self.swap,
        }
        .serialize(s)
    }
}

/// Whether `q^2 = 1` and `q != 1`.
pub fn swap_allowed(params: &AlgebraParams) -> bool {
    let q = params.q();
    let one = params.field().one();
    *q != one && q.f_mul(q) == one
}

impl Automorphism {
    pub fn new(params: &AlgebraParams, lambda1: Scalar, lambda2: Scalar, lambda3: GradedElement, swap: bool) -> Result<Self> {
        require_single(params)?;
        if lambda1.is_zero() || lambda2.is_zero() {
            return Err(Error::InvalidParams("scaling factors must be nonzero".into()));
        }
        if lambda3.params() != params || lambda3.mode() != Mode::Polynomial {
            return Err(Error::ModeMismatch("shift term must be a polynomial element of the same algebra".into()));
        }
        if !is_fixed_by_omega(&lambda3) {
            return Err(Error::CentralizerViolation(lambda3.to_string()));
        }
        if swap && !swap_allowed(params) {
            return Err(Error::SwapNotAllowed(format!("q = {} and q^2 != 1 or q = 1", params.q())));
        }
        Ok(Automorphism { params: params.clone(), lambda1, lambda2, lambda3, swap })
    }

    pub fn identity(params: &AlgebraParams) -> Result<Self> {
        let one = params.field().one();
        Self::new(params, one.clone(), one, GradedElement::zero(params, Mode::Polynomial), false)
    }

    pub fn sigma(params: &AlgebraParams, lambda1: Scalar, lambda2: Scalar, lambda3: GradedElement) -> Result<Self> {
        Self::new(params, lambda1, lambda2, lambda3, false)
    }

    pub fn tau(params: &AlgebraParams) -> Result<Self> {
        let one = params.field().one();
        Self::new(params, one.clone(), one, GradedElement::zero(params, Mode::Polynomial), true)
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    /// Images of `x1, x2, x3` in `mode`.
    pub fn images(&self, mode: Mode) -> [GradedElement; 3] {
        let p = &self.params;
        let (x1, x2) = (GradedElement::x1(p, mode), GradedElement::x2(p, mode));
        let (y1, y2) = if self.swap {
            (x2.scale(&self.lambda2), x1.scale(&self.lambda1))
        } else {
            (x1.scale(&self.lambda1), x2.scale(&self.lambda2))
        };
        let shift = match mode {
            Mode::Polynomial => self.lambda3.clone(),
            Mode::Laurent => self.lambda3.embed_into_laurent(),
        };
        [y1, y2, &GradedElement::x3(p, mode) + &shift]
    }

    pub fn apply(&self, a: &GradedElement) -> Result<GradedElement> {
        if a.params() != &self.params {
            return Err(Error::ModeMismatch("element belongs to another algebra".into()));
        }
        substitute(a, &self.images(a.mode()))
    }

    /// The scaling-and-shift part `sigma_l` alone.
    fn sigma_part(&self) -> Automorphism {
        Automorphism { swap: false, ..self.clone() }
    }

    /// `tau sigma_l tau = sigma_(l2, l1, tau(l3))`.
    fn conjugate_by_tau(&self) -> Result<Automorphism> {
        let tau = Automorphism::tau(&self.params)?;
        Ok(Automorphism {
            params: self.params.clone(),
            lambda1: self.lambda2.clone(),
            lambda2: self.lambda1.clone(),
            lambda3: tau.apply(&self.lambda3)?,
            swap: false,
        })
    }

    /// The map `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if other.params != self.params {
            return Err(Error::ModeMismatch("automorphisms of different algebras".into()));
        }
        // sigma_a tau^i sigma_c tau^j = sigma_a sigma_b tau^(i+j) with sigma_b = tau^i sigma_c tau^i.
        let b = if self.swap { other.sigma_part().conjugate_by_tau()? } else { other.sigma_part() };
        let a = self.sigma_part();
        let lambda3 = &a.lambda3 + &a.apply(&b.lambda3)?;
        Ok(Automorphism {
            params: self.params.clone(),
            lambda1: a.lambda1.f_mul(&b.lambda1),
            lambda2: a.lambda2.f_mul(&b.lambda2),
            lambda3,
            swap: self.swap != other.swap,
        })
    }

    /// Inverse map. Exists only when the shift term is free of `x3`: otherwise
    /// the image of `x3` has `x3`-degree at least 2 and `x3` is not reached.
    pub fn inverse(&self) -> Result<Automorphism> {
        if self.lambda3.deg_x3().unwrap_or(0) > 0 {
            return Err(Error::NotSurjective(format!("x3 -> x3 + {}", self.lambda3)));
        }
        let (l1, l2) = (self.lambda1.inv()?, self.lambda2.inv()?);
        // sigma_l(b3) = -l3 where sigma_l scales x^beta by l^beta.
        let mut b3 = GradedElement::zero(&self.params, Mode::Polynomial);
        for (beta, x3, c) in self.lambda3.flat_terms() {
            let s = l1.pow(beta[0])?.f_mul(&l2.pow(beta[1])?).f_mul(&c).f_neg();
            b3 = &b3 + &GradedElement::monomial(&self.params, Mode::Polynomial, s, &x3, &beta)?;
        }
        let sigma_inv = Automorphism { params: self.params.clone(), lambda1: l1, lambda2: l2, lambda3: b3, swap: false };
        if self.swap {
            // (sigma tau)^-1 = tau sigma^-1 = (tau sigma^-1 tau) tau
            let mut s = sigma_inv.conjugate_by_tau()?;
            s.swap = true;
            Ok(s)
        } else {
            Ok(sigma_inv)
        }
    }

    pub fn is_identity(&self) -> bool {
        let one = self.params.field().one();
        self.lambda1 == one && self.lambda2 == one && self.lambda3.is_zero() && !self.swap
    }

    /// [`verify_is_automorphism`] on the images at [`DEFAULT_VERIFY_DEGREE`].
    pub fn is_verified(&self) -> Result<bool> {
        verify_is_automorphism(&self.images(Mode::Polynomial), DEFAULT_VERIFY_DEGREE)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma({}, {}, {})", self.lambda1, self.lambda2, self.lambda3)?;
        if self.swap {
            write!(f, " tau")?;
        }
        Ok(())
    }
}

/// The algebra map determined by generator images, applied to `a`: each term
/// `c x3^i x1^b1 x2^b2` goes to `c y3^i y1^b1 y2^b2`.
pub fn substitute(a: &GradedElement, images: &[GradedElement; 3]) -> Result<GradedElement> {
    require_single(a.params())?;
    let mode = a.mode();
    let mut pows: HashMap<(usize, i64), GradedElement> = HashMap::new();
    let mut power = |k: usize, e: i64| -> Result<GradedElement> {
        if let Some(v) = pows.get(&(k, e)) {
            return Ok(v.clone());
        }
        let base = if e < 0 { images[k].try_inverse()? } else { images[k].clone() };
        let v = base.pow(e.unsigned_abs() as u32);
        pows.insert((k, e), v.clone());
        Ok(v)
    };
    let mut out = GradedElement::zero(a.params(), mode);
    for (beta, x3, c) in a.flat_terms() {
        let t = power(2, x3[0] as i64)?.try_mul(&power(0, beta[0])?)?.try_mul(&power(1, beta[1])?)?;
        out = out.try_add(&t.scale(&c))?;
    }
    Ok(out)
}

/// Whether `(y1, y2, y3)` satisfy the three defining relations and the
/// products `y3^i y1^a y2^b` with `i + a + b <= d` span `x1`, `x2` and `x3`.
pub fn verify_is_automorphism(images: &[GradedElement; 3], d: usize) -> Result<bool> {
    let [y1, y2, y3] = images;
    let params = y1.params().clone();
    require_single(&params)?;
    if images.iter().any(|y| y.params() != &params || y.mode() != Mode::Polynomial) {
        return Err(Error::ModeMismatch("images must be polynomial elements of one algebra".into()));
    }
    let one = GradedElement::one(&params, Mode::Polynomial);
    let alpha = one.scale(params.alpha());
    let mu = one.scale(params.mu());
    let relations = [
        y2 * y1 - (y1 * y2).scale(params.q()),
        y3 * y1 - y1 * &(y3 + &alpha),
        y3 * y2 - y2 * &(y3 + &mu),
    ];
    if relations.iter().any(|r| !r.is_zero()) {
        return Ok(false);
    }
    let mut span = Echelon::new();
    for i in 0..=d {
        let a3 = y3.pow(i as u32);
        for a in 0..=(d - i) {
            let a31 = &a3 * &y1.pow(a as u32);
            for b in 0..=(d - i - a) {
                span.insert(element_vector(&(&a31 * &y2.pow(b as u32))));
            }
        }
    }
    let gens = [GradedElement::x1(&params, Mode::Polynomial), GradedElement::x2(&params, Mode::Polynomial), GradedElement::x3(&params, Mode::Polynomial)];
    Ok(gens.iter().all(|g| span.contains(&element_vector(g))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::grid::instance;
    use crate::presentation::CaseTag;

    fn el(p: &AlgebraParams, s: &str) -> GradedElement {
        parse_element(s, p, Mode::Polynomial).unwrap()
    }

    #[test]
    fn apply_examples() {
        let c1 = instance(CaseTag::C1);
        let f = c1.field();
        let s = Automorphism::sigma(&c1, f.int(2), f.int(3), el(&c1, "0")).unwrap();
        assert_eq!(s.apply(&el(&c1, "x1*x2")).unwrap(), el(&c1, "6*x1*x2"));
        let c4 = instance(CaseTag::C4);
        let f = c4.field();
        let s = Automorphism::sigma(&c4, f.int(1), f.int(1), el(&c4, "1")).unwrap();
        assert_eq!(s.apply(&el(&c4, "x3")).unwrap(), el(&c4, "x3 + 1"));
        let t = Automorphism::tau(&c4).unwrap();
        assert_eq!(t.apply(&el(&c4, "x1*x2")).unwrap(), el(&c4, "-x1*x2"));
    }

    #[test]
    fn composition_examples() {
        let c4 = instance(CaseTag::C4);
        let f = c4.field();
        let zero = el(&c4, "0");
        let a = Automorphism::sigma(&c4, f.int(2), f.int(1), zero.clone()).unwrap();
        let b = Automorphism::sigma(&c4, f.int(3), f.int(1), zero.clone()).unwrap();
        assert_eq!(a.compose(&b).unwrap(), Automorphism::sigma(&c4, f.int(6), f.int(1), zero).unwrap());
        let t = Automorphism::tau(&c4).unwrap();
        assert!(t.compose(&t).unwrap().is_identity());

        let s = Automorphism::sigma(&c4, f.int(2), f.int(5), el(&c4, "x2^2 + 3*x1^2")).unwrap();
        let lhs = t.compose(&s).unwrap();
        let swapped = Automorphism::sigma(&c4, f.int(5), f.int(2), t.apply(&s.lambda3).unwrap()).unwrap();
        assert_eq!(lhs, swapped.compose(&t).unwrap());
        assert!(s.compose(&s.inverse().unwrap()).unwrap().is_identity());
        let st = s.compose(&t).unwrap();
        assert!(st.inverse().unwrap().compose(&st).unwrap().is_identity());
    }

    #[test]
    fn verification_examples() {
        let c7a = instance(CaseTag::C7a);
        let x = |s| el(&c7a, s);
        assert!(verify_is_automorphism(&[x("x2"), x("x1"), x("x3")], 3).unwrap());
        assert!(Automorphism::tau(&c7a).unwrap().is_verified().unwrap());

        let c4 = instance(CaseTag::C4);
        let f = c4.field();
        let s = Automorphism::sigma(&c4, f.int(2), f.int(3), el(&c4, "x1^2")).unwrap();
        assert!(s.is_verified().unwrap());
        // x1 <-> x2 breaks the x3 relations unless alpha = mu.
        assert!(!Automorphism::tau(&c4).unwrap().is_verified().unwrap());
    }

    #[test]
    fn swap_requires_involutive_q() {
        let c1 = instance(CaseTag::C1);
        assert!(matches!(Automorphism::tau(&c1), Err(Error::SwapNotAllowed(_))));
        let x = |s| el(&c1, s);
        assert!(!verify_is_automorphism(&[x("x2"), x("x1"), x("x3")], 3).unwrap());
    }

    #[test]
    fn shift_must_centralize() {
        let c4 = instance(CaseTag::C4);
        let f = c4.field();
        let e = Automorphism::sigma(&c4, f.int(1), f.int(1), el(&c4, "x3"));
        assert!(matches!(e, Err(Error::CentralizerViolation(_))));
    }

    #[test]
    fn x3_dependent_shift_is_not_surjective() {
        let c2 = instance(CaseTag::C2);
        let f = c2.field();
        // 3 = 0 in characteristic 3, so the second scaling factor is 2.
        assert!(Automorphism::sigma(&c2, f.int(2), f.int(3), el(&c2, "0")).is_err());
        let s = Automorphism::sigma(&c2, f.int(2), f.int(2), el(&c2, "x3^3 - x3")).unwrap();
        assert!(matches!(s.inverse(), Err(Error::NotSurjective(_))));
        assert!(!s.is_verified().unwrap());
        let y = s.images(Mode::Polynomial);
        assert!(y[2] == el(&c2, "x3^3"));
    }

    #[test]
    fn serializes_as_text() {
        let t = Automorphism::tau(&instance(CaseTag::C7a)).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["swap"], true);
        assert_eq!(v["lambda3"], "0");
    }
}
