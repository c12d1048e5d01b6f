//! Ideals generated by central elements, the stratification of the prime
//! spectrum along `x1 x2`, the factor algebras `A/(x1)`, `A/(x2)`, and the
//! dimension formulas for tensor products.

use std::fmt;

use serde::Serialize;

use crate::algebra::{GradedElement, Mode};
use crate::error::{Error, Result};
use crate::linalg::{element_vector, intersect, Echelon, SparseVec, TermKey};
use crate::oracle::MonomialFrame;
use crate::presentation::{require_single, AlgebraParams, CaseTag};
use crate::scalars::FieldElem;
use crate::structure::{centre_generators, decompose_over_centre, is_central, ore_monoid_generators, CaseInfo, CoefficientRing};

/// A finitely generated ideal of `Z(A)` (mode `Polynomial`) or of the
/// centre of the localization (mode `Laurent`).
#[derive(Clone, Debug)]
pub struct CentralIdeal {
    params: AlgebraParams,
    pub mode: Mode,
    pub generators: Vec<GradedElement>,
    /// Primality as asserted by the caller; never checked.
    pub prime: bool,
}

impl CentralIdeal {
    pub fn new(params: &AlgebraParams, mode: Mode, generators: Vec<GradedElement>, prime: bool) -> Result<Self> {
        require_single(params)?;
        for g in &generators {
            if g.mode() != mode || g.params() != params {
                return Err(Error::ModeMismatch(format!("generator {g} does not belong to the ring")));
            }
            if !is_central(g) {
                return Err(Error::NonCentralGenerator(g.to_string()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(CentralIdeal { params: params.clone(), mode, generators, prime })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    /// Name of the ambient central ring.
    pub fn ring_name(&self) -> &'static str {
        match self.mode {
            Mode::Polynomial => "Z(A)",
            Mode::Laurent => "Z(A_x1x2)",
        }
    }

    /// Basis of `p` cut down to degree `d`: the products `g c` with `c` a
    /// central monomial and `deg g + deg c <= d`.
    pub fn truncated_span(&self, d: usize) -> Result<Vec<GradedElement>> {
        let centre = centre_generators(&self.params, self.mode)?;
        let mut out = Vec::new();
        for g in &self.generators {
            let dg = degree(g);
            if dg > d {
                continue;
            }
            for c in centre.span_in_frame(d - dg) {
                out.push(g * &c);
            }
        }
        Ok(out)
    }

    /// Membership of a central element, by linear algebra up to degree `d`.
    pub fn contains_central(&self, z: &GradedElement, d: usize) -> Result<bool> {
        let needed = degree(z);
        if needed > d {
            return Err(Error::DegreeBoundExceeded { bound: d, needed });
        }
        Ok(span(self.truncated_span(d)?).contains(&element_vector(z)))
    }
}

impl fmt::Display for CentralIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({}) in {}", gens.join(", "), self.ring_name())
    }
}

fn degree(a: &GradedElement) -> usize {
    a.total_degree().unwrap_or(0) as usize
}

fn span(elements: impl IntoIterator<Item = GradedElement>) -> Echelon<TermKey> {
    let mut e = Echelon::new();
    for x in elements {
        e.insert(element_vector(&x));
    }
    e
}

/// The localization is simple exactly in cases C1 and C7b.
pub fn is_simple_localized(params: &AlgebraParams) -> Result<bool> {
    let info = CaseInfo::of(params)?;
    Ok(matches!(info.tag, CaseTag::C1 | CaseTag::C7b))
}

/// The two-sided ideal `p A` (or `p A_x1x2`) generated by a central ideal.
#[derive(Clone, Debug)]
pub struct ExtendedIdeal {
    pub central: CentralIdeal,
}

pub fn extend_central_ideal(p: &CentralIdeal) -> ExtendedIdeal {
    ExtendedIdeal { central: p.clone() }
}

impl ExtendedIdeal {
    pub fn contains(&self, a: &GradedElement, d: usize) -> Result<bool> {
        ideal_membership(a, &self.central, d)
    }

    /// Basis of the members `g m` with `m` a frame monomial and total degree at most `d`.
    pub fn truncated_span(&self, d: usize) -> Result<Vec<GradedElement>> {
        let p = &self.central;
        let frame = MonomialFrame::new(&p.params, p.mode, d)?;
        let mut out = Vec::new();
        for g in &p.generators {
            let dg = degree(g);
            if dg > d {
                continue;
            }
            for m in frame.elements_up_to(d - dg) {
                out.push(g * &m);
            }
        }
        Ok(out)
    }
}

/// Whether `a` lies in `p A`: every coordinate of `a` over the centre must
/// lie in `p`. In case C11 inside `A` the coordinates live in a proper
/// subring of the centre, so membership is decided on `span(g m)` directly.
pub fn ideal_membership(a: &GradedElement, p: &CentralIdeal, d: usize) -> Result<bool> {
    if a.mode() != p.mode || a.params() != &p.params {
        return Err(Error::ModeMismatch("element and ideal live in different algebras".into()));
    }
    let needed = degree(a);
    if needed > d {
        return Err(Error::DegreeBoundExceeded { bound: d, needed });
    }
    if a.is_zero() {
        return Ok(true);
    }
    if p.generators.is_empty() {
        return Ok(false);
    }
    let dec = decompose_over_centre(a)?;
    if dec.index.ring == CoefficientRing::Lambda {
        let h = extend_central_ideal(p);
        return Ok(span(h.truncated_span(d)?).contains(&element_vector(a)));
    }
    let members = span(p.truncated_span(d)?);
    for z in dec.coords.values() {
        let needed = degree(z);
        if needed > d {
            return Err(Error::DegreeBoundExceeded { bound: d, needed });
        }
        if !members.contains(&element_vector(z)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Z ∩ I` up to degree `d`, returned as a central ideal whose generators
/// are a basis of the truncated intersection.
pub fn contract_ideal(h: &ExtendedIdeal, d: usize) -> Result<CentralIdeal> {
    let p = &h.central;
    let centre = centre_generators(&p.params, p.mode)?;
    let z: Vec<SparseVec<TermKey>> = centre.span_in_frame(d).iter().map(element_vector).collect();
    let members: Vec<SparseVec<TermKey>> = h.truncated_span(d)?.iter().map(element_vector).collect();
    let one = p.params.field().one();
    let mut gens = Vec::new();
    for v in intersect(&z, &members, &one) {
        let mut e = GradedElement::zero(&p.params, p.mode);
        for ((beta, x3), c) in v {
            e = &e + &GradedElement::monomial(&p.params, p.mode, c, &x3, &beta)?;
        }
        gens.push(e);
    }
    CentralIdeal::new(&p.params, p.mode, gens, p.prime)
}

/// Input to [`stratify`].
#[derive(Clone, Debug)]
pub enum StratifyInput {
    X1,
    X2,
    Central(CentralIdeal),
}

/// Where a prime of `A` sits in `Spec(A) = V(x1) ∪ V(x2) ⊔ Spec_{x1x2}(A)`.
#[derive(Clone, Debug)]
pub enum Stratum {
    ContainsX1,
    ContainsX2,
    /// A prime not containing `x1 x2`, labelled by a prime of `Z(A)` avoiding
    /// `T_A` (branch 1) or of the localized centre (branch 2, cases C7a and C11).
    Localized { ideal: CentralIdeal, branch: u8 },
}

#[derive(Clone, Debug)]
pub struct PrimeDescriptor {
    pub stratum: Stratum,
}

impl fmt::Display for PrimeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.stratum {
            Stratum::ContainsX1 => write!(f, "V(x1), primes of A/(x1)"),
            Stratum::ContainsX2 => write!(f, "V(x2), primes of A/(x2)"),
            Stratum::Localized { ideal, branch } => write!(f, "Spec_x1x2(A) via {ideal} (branch {branch})"),
        }
    }
}

/// Routes a prime-like input to its stratum. Central ideals of `Z(A)` must
/// avoid `T_A`; this is decided at degree `d`.
pub fn stratify(params: &AlgebraParams, input: StratifyInput, d: usize) -> Result<PrimeDescriptor> {
    match input {
        StratifyInput::X1 => Ok(PrimeDescriptor { stratum: Stratum::ContainsX1 }),
        StratifyInput::X2 => Ok(PrimeDescriptor { stratum: Stratum::ContainsX2 }),
        StratifyInput::Central(p) => {
            if p.params() != params {
                return Err(Error::ModeMismatch("ideal belongs to another algebra".into()));
            }
            localized_prime_from_centre(&p, d)
        }
    }
}

/// The prime of `Spec_{x1x2}(A)` attached to a prime of the relevant centre.
pub fn localized_prime_from_centre(p: &CentralIdeal, d: usize) -> Result<PrimeDescriptor> {
    let info = CaseInfo::of(&p.params)?;
    let second = matches!(info.tag, CaseTag::C7a | CaseTag::C11);
    let want = if second { Mode::Laurent } else { Mode::Polynomial };
    if p.mode != want {
        return Err(Error::ModeMismatch(format!(
            "case {} labels localized primes by ideals of {}",
            info.tag,
            if second { "Z(A_x1x2)" } else { "Z(A)" }
        )));
    }
    if !second {
        for t in ore_monoid_generators(&p.params)? {
            if p.contains_central(&t, d.max(degree(&t)))? {
                return Err(Error::MeetsOreSet(t.to_string()));
            }
        }
    }
    Ok(PrimeDescriptor { stratum: Stratum::Localized { ideal: p.clone(), branch: if second { 2 } else { 1 } } })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    X1,
    X2,
}

/// `A/(x1)` or `A/(x2)`: a two-generator algebra, realized inside `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorAlgebra {
    pub by: Generator,
    /// Commutative polynomial ring, as opposed to the skew ring `K[x3][x; x3 -> x3 - 1]`.
    pub commutative: bool,
    pub presentation: String,
}

impl FactorAlgebra {
    /// The quotient map: drops every term divisible by the killed generator.
    pub fn quotient(&self, a: &GradedElement) -> GradedElement {
        let k = match self.by {
            Generator::X1 => 0,
            Generator::X2 => 1,
        };
        a.filter_graded(|b| b[k] == 0)
    }
}

pub fn factor_algebra(params: &AlgebraParams, by: Generator) -> Result<FactorAlgebra> {
    require_single(params)?;
    let (shift, other) = match by {
        Generator::X1 => (params.mu().clone(), "x2"),
        Generator::X2 => (params.alpha().clone(), "x1"),
    };
    let commutative = shift.is_zero();
    let presentation = if commutative {
        format!("K[{other}, x3]")
    } else {
        format!("K<{other}, x3 | {other}*x3 = (x3 - {shift})*{other}>")
    };
    Ok(FactorAlgebra { by, commutative, presentation })
}

/// Gelfand-Kirillov, Krull, classical Krull and global dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dimensions {
    pub gk: usize,
    pub krull: usize,
    pub classical_krull: usize,
    pub global: usize,
}

/// All four dimensions of a tensor product of `n` factors equal `3n`.
pub fn dimensions(n: usize) -> Result<Dimensions> {
    if n == 0 {
        return Err(Error::InvalidParams("need at least one factor".into()));
    }
    let d = 3 * n;
    Ok(Dimensions { gk: d, krull: d, classical_krull: d, global: d })
}

/// Centre of a tensor product: the centres of the factors, slot by slot.
pub fn tensor_centre_generators(params: &AlgebraParams) -> Result<Vec<GradedElement>> {
    let mut out = Vec::new();
    for slot in 0..params.arity() {
        let single = params.single_factor(slot);
        for g in centre_generators(&single, Mode::Polynomial)?.generators() {
            out.push(g.embed_in_slot(params, slot));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::grid::instance;
    use crate::linalg::same_span;

    fn el(p: &AlgebraParams, mode: Mode, s: &str) -> GradedElement {
        parse_element(s, p, mode).unwrap()
    }

    fn principal(p: &AlgebraParams, mode: Mode, s: &str) -> CentralIdeal {
        CentralIdeal::new(p, mode, vec![el(p, mode, s)], true).unwrap()
    }

    #[test]
    fn simplicity() {
        for tag in CaseTag::ALL {
            let want = matches!(tag, CaseTag::C1 | CaseTag::C7b);
            assert_eq!(is_simple_localized(&instance(tag)).unwrap(), want, "{tag}");
        }
    }

    #[test]
    fn membership_examples() {
        let c4 = instance(CaseTag::C4);
        let p = principal(&c4, Mode::Polynomial, "x2^2 - 1");
        let m = |s| ideal_membership(&el(&c4, Mode::Polynomial, s), &p, 6).unwrap();
        assert!(m("x2^2 - 1"));
        assert!(m("x1*(x2^2 - 1)"));
        assert!(!m("x1"));
        assert!(matches!(
            ideal_membership(&el(&c4, Mode::Polynomial, "x1^7"), &p, 6),
            Err(Error::DegreeBoundExceeded { .. })
        ));
    }

    #[test]
    fn extension_contraction_examples() {
        let c4 = instance(CaseTag::C4);
        let p = principal(&c4, Mode::Polynomial, "x2^2 - 1");
        let back = contract_ideal(&extend_central_ideal(&p), 6).unwrap();
        let v = |xs: Vec<GradedElement>| xs.iter().map(element_vector).collect::<Vec<_>>();
        assert!(same_span(&v(back.generators.clone()), &v(p.truncated_span(6).unwrap())));

        let zero = CentralIdeal::new(&c4, Mode::Polynomial, vec![], true).unwrap();
        assert!(!extend_central_ideal(&zero).contains(&el(&c4, Mode::Polynomial, "1"), 6).unwrap());
        let unit = principal(&c4, Mode::Polynomial, "1");
        assert!(extend_central_ideal(&unit).contains(&el(&c4, Mode::Polynomial, "1"), 6).unwrap());
    }

    #[test]
    fn non_central_generator_rejected() {
        let c4 = instance(CaseTag::C4);
        let e = CentralIdeal::new(&c4, Mode::Polynomial, vec![el(&c4, Mode::Polynomial, "x1")], true);
        assert!(matches!(e, Err(Error::NonCentralGenerator(_))));
    }

    #[test]
    fn stratification_examples() {
        let c4 = instance(CaseTag::C4);
        assert!(matches!(stratify(&c4, StratifyInput::X1, 6).unwrap().stratum, Stratum::ContainsX1));
        let p = principal(&c4, Mode::Polynomial, "x2^2 - 1");
        let s = stratify(&c4, StratifyInput::Central(p), 6).unwrap();
        assert!(matches!(s.stratum, Stratum::Localized { branch: 1, .. }));
        let bad = principal(&c4, Mode::Polynomial, "x2^2");
        assert!(matches!(stratify(&c4, StratifyInput::Central(bad), 6), Err(Error::MeetsOreSet(_))));
        let c11 = instance(CaseTag::C11);
        let p = principal(&c11, Mode::Laurent, "x1^-2*x2^2 - 1");
        assert!(matches!(stratify(&c11, StratifyInput::Central(p), 6).unwrap().stratum, Stratum::Localized { branch: 2, .. }));
    }

    #[test]
    fn factor_algebra_examples() {
        let c4 = instance(CaseTag::C4);
        assert!(factor_algebra(&c4, Generator::X1).unwrap().commutative);
        let f = factor_algebra(&c4, Generator::X2).unwrap();
        assert!(!f.commutative);
        let g = factor_algebra(&c4, Generator::X1).unwrap();
        assert_eq!(g.quotient(&el(&c4, Mode::Polynomial, "x1*x2 + x2")).to_string(), "x2");
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimensions(1).unwrap().gk, 3);
        assert_eq!(dimensions(2).unwrap(), Dimensions { gk: 6, krull: 6, classical_krull: 6, global: 6 });
        assert_eq!(dimensions(5).unwrap().global, 15);
        assert!(dimensions(0).is_err());
    }
}
