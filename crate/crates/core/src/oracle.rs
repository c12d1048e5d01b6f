//! Brute-force ground truth by linear algebra on a bounded monomial frame.
//!
//! Nothing here uses the structure theory: centralizers are kernels of
//! commutator maps, normality and ideal membership are span tests.

use crate::algebra::{GradedElement, Mode};
use crate::error::{Error, Result};
use crate::linalg::{element_vector, kernel, Echelon, SparseVec, TermKey};
use crate::presentation::{require_single, AlgebraParams};

/// All monomials `x3^i x^beta` with `i + |beta1| + |beta2| <= degree`,
/// ordered by degree and then lexicographically by `(i, beta)`.
#[derive(Clone, Debug)]
pub struct MonomialFrame {
    params: AlgebraParams,
    mode: Mode,
    degree: usize,
    monomials: Vec<(u32, Vec<i64>)>,
}

fn monomial_degree(i: u32, beta: &[i64]) -> usize {
    i as usize + beta.iter().map(|b| b.unsigned_abs() as usize).sum::<usize>()
}

impl MonomialFrame {
    pub fn new(params: &AlgebraParams, mode: Mode, degree: usize) -> Result<Self> {
        require_single(params)?;
        let d = degree as i64;
        let lo = if mode == Mode::Laurent { -d } else { 0 };
        let mut monomials = Vec::new();
        for b1 in lo..=d {
            for b2 in lo..=d {
                let used = b1.unsigned_abs() + b2.unsigned_abs();
                if used as i64 > d {
                    continue;
                }
                for i in 0..=(d - used as i64) {
                    monomials.push((i as u32, vec![b1, b2]));
                }
            }
        }
        monomials.sort_by(|a, b| (monomial_degree(a.0, &a.1), a).cmp(&(monomial_degree(b.0, &b.1), b)));
        Ok(MonomialFrame { params: params.clone(), mode, degree, monomials })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    fn element(&self, i: u32, beta: &[i64]) -> GradedElement {
        let one = self.params.field().one();
        GradedElement::monomial(&self.params, self.mode, one, &[i], beta).expect("frame exponents fit the mode")
    }

    /// The basis monomials of degree at most `d` as elements.
    pub fn elements_up_to(&self, d: usize) -> Vec<GradedElement> {
        self.monomials
            .iter()
            .filter(|(i, b)| monomial_degree(*i, b) <= d)
            .map(|(i, b)| self.element(*i, b))
            .collect()
    }

    pub fn elements(&self) -> Vec<GradedElement> {
        self.elements_up_to(self.degree)
    }

    fn combine(&self, coeffs: &SparseVec<usize>, basis: &[GradedElement]) -> GradedElement {
        let mut acc = GradedElement::zero(&self.params, self.mode);
        for (j, c) in coeffs {
            acc = &acc + &basis[*j].scale(c);
        }
        acc
    }
}

fn element_degree(a: &GradedElement) -> usize {
    a.total_degree().unwrap_or(0) as usize
}

/// Basis of `{a in span(frame) : [a, t] = 0 for every target t}`.
pub fn oracle_centralizer(frame: &MonomialFrame, targets: &[GradedElement]) -> Result<Vec<GradedElement>> {
    let basis = frame.elements();
    let mut images = Vec::with_capacity(basis.len());
    for m in &basis {
        let mut v: SparseVec<(usize, TermKey)> = SparseVec::new();
        for (k, t) in targets.iter().enumerate() {
            for (key, c) in element_vector(&m.commutator(t)?) {
                v.insert((k, key), c);
            }
        }
        images.push(v);
    }
    let one = frame.params.field().one();
    Ok(kernel(images, &one).iter().map(|rel| frame.combine(rel, &basis)).collect())
}

/// Basis of the centre intersected with the frame.
pub fn oracle_centre(frame: &MonomialFrame) -> Result<Vec<GradedElement>> {
    let (p, m) = (&frame.params, frame.mode);
    let gens = [GradedElement::x1(p, m), GradedElement::x2(p, m), GradedElement::x3(p, m)];
    oracle_centralizer(frame, &gens)
}

fn span_of(elements: impl IntoIterator<Item = GradedElement>) -> Echelon<TermKey> {
    let mut e = Echelon::new();
    for x in elements {
        e.insert(element_vector(&x));
    }
    e
}

/// Whether `g a in a A` and `a g in A a` for each generator `g`, with the
/// cofactors sought in the frame.
pub fn oracle_is_normal(a: &GradedElement, frame: &MonomialFrame) -> Result<bool> {
    let needed = 2 * element_degree(a) + 2;
    if frame.degree < needed {
        return Err(Error::FrameTooSmall { frame: frame.degree, needed });
    }
    if a.is_zero() {
        return Ok(true);
    }
    let basis = frame.elements();
    let right = span_of(basis.iter().map(|m| a * m));
    let left = span_of(basis.iter().map(|m| m * a));
    let (p, m) = (&frame.params, frame.mode);
    for g in [GradedElement::x1(p, m), GradedElement::x2(p, m), GradedElement::x3(p, m)] {
        if !right.contains(&element_vector(&(&g * a))) || !left.contains(&element_vector(&(a * &g))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `a` lies in the span of `m1 g m2` over frame monomials and
/// generators `g` with total degree within the frame.
pub fn oracle_ideal_membership(a: &GradedElement, generators: &[GradedElement], frame: &MonomialFrame) -> Result<bool> {
    let needed = element_degree(a);
    if frame.degree < needed {
        return Err(Error::FrameTooSmall { frame: frame.degree, needed });
    }
    let mut span = Echelon::new();
    for g in generators {
        let dg = element_degree(g);
        if dg > frame.degree {
            continue;
        }
        let room = frame.degree - dg;
        let left = frame.elements_up_to(room);
        for m1 in &left {
            let m1g = m1 * g;
            let rest = room - element_degree(m1);
            for m2 in frame.elements_up_to(rest) {
                span.insert(element_vector(&(&m1g * &m2)));
            }
        }
    }
    Ok(span.contains(&element_vector(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::grid::instance;
    use crate::linalg::same_span;
    use crate::presentation::CaseTag;

    fn vecs(es: &[GradedElement]) -> Vec<SparseVec<TermKey>> {
        es.iter().map(element_vector).collect()
    }

    fn els(p: &AlgebraParams, mode: Mode, xs: &[&str]) -> Vec<GradedElement> {
        xs.iter().map(|s| parse_element(s, p, mode).unwrap()).collect()
    }

    #[test]
    fn frame_order_and_size() {
        let f = MonomialFrame::new(&instance(CaseTag::C1), Mode::Polynomial, 2).unwrap();
        assert_eq!(f.len(), 10);
        assert_eq!(f.elements()[0].to_string(), "1");
    }

    #[test]
    fn centralizer_examples() {
        let c1 = instance(CaseTag::C1);
        let f = MonomialFrame::new(&c1, Mode::Polynomial, 4).unwrap();
        let t = els(&c1, Mode::Polynomial, &["x1", "x2"]);
        assert!(same_span(&vecs(&oracle_centralizer(&f, &t).unwrap()), &vecs(&els(&c1, Mode::Polynomial, &["1"]))));

        let c4 = instance(CaseTag::C4);
        let f = MonomialFrame::new(&c4, Mode::Polynomial, 4).unwrap();
        let t = els(&c4, Mode::Polynomial, &["x1", "x2"]);
        let want = els(&c4, Mode::Polynomial, &["1", "x1^2", "x2^2", "x1^2*x2^2", "x1^4", "x2^4"]);
        assert!(same_span(&vecs(&oracle_centralizer(&f, &t).unwrap()), &vecs(&want)));

        let t = els(&c4, Mode::Polynomial, &["1"]);
        assert_eq!(oracle_centralizer(&f, &t).unwrap().len(), f.len());
    }

    #[test]
    fn centre_examples() {
        let c4 = instance(CaseTag::C4);
        let f = MonomialFrame::new(&c4, Mode::Polynomial, 4).unwrap();
        let want = els(&c4, Mode::Polynomial, &["1", "x2^2", "x2^4"]);
        assert!(same_span(&vecs(&oracle_centre(&f).unwrap()), &vecs(&want)));
        let c7b = instance(CaseTag::C7b);
        let f = MonomialFrame::new(&c7b, Mode::Laurent, 3).unwrap();
        assert!(same_span(&vecs(&oracle_centre(&f).unwrap()), &vecs(&els(&c7b, Mode::Laurent, &["1"]))));
    }

    #[test]
    fn normality_examples() {
        let c1 = instance(CaseTag::C1);
        let f = MonomialFrame::new(&c1, Mode::Polynomial, 4).unwrap();
        let e = |s| parse_element(s, &c1, Mode::Polynomial).unwrap();
        assert!(oracle_is_normal(&e("x1"), &f).unwrap());
        assert!(!oracle_is_normal(&e("x1 + x2"), &f).unwrap());
        assert!(oracle_is_normal(&e("1"), &f).unwrap());
        assert!(matches!(oracle_is_normal(&e("x1*x2"), &f), Err(Error::FrameTooSmall { .. })));
    }

    #[test]
    fn membership_examples() {
        let c4 = instance(CaseTag::C4);
        let f = MonomialFrame::new(&c4, Mode::Polynomial, 6).unwrap();
        let e = |s| parse_element(s, &c4, Mode::Polynomial).unwrap();
        let g = [e("x2^2 - 1")];
        assert!(oracle_ideal_membership(&g[0], &g, &f).unwrap());
        assert!(!oracle_ideal_membership(&e("1"), &g, &f).unwrap());
        assert!(oracle_ideal_membership(&e("x1*x2^2 - x1"), &g, &f).unwrap());
    }
}
