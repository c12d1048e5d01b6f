//! Structure theory of a single factor: invariants of `K[x3]`, centralizer of
//! `x1, x2`, the centres of `A` and of its localization, free bases over the
//! centre, weights, normal elements and the central Ore monoid.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{weight_of, GradedElement, Mode, Weight, XPoly};
use crate::error::{Error, Result};
use crate::presentation::{classify_case, factor_mu_class, require_single, AlgebraParams, CaseTag};
use crate::scalars::{FieldElem, MuClass, Poly, Scalar};

/// Case data used throughout the module.
#[derive(Clone, Debug)]
pub(crate) struct CaseInfo {
    pub tag: CaseTag,
    pub p: i64,
    /// Order of `q`, 0 when infinite.
    pub n: i64,
    pub mu1: i64,
    pub mu2: i64,
    /// Residue of `mu` in case C11.
    pub mu_res: i64,
    pub xi: Vec<u64>,
}

impl CaseInfo {
    pub fn of(params: &AlgebraParams) -> Result<Self> {
        let c = classify_case(params)?;
        let mu_res = match factor_mu_class(params.field(), params.factor(0))? {
            MuClass::InPrimeField(m) => m as i64,
            _ => 0,
        };
        Ok(CaseInfo {
            tag: c.tag,
            p: c.data.p as i64,
            n: c.data.n.unwrap_or(0) as i64,
            mu1: c.data.mu1.unwrap_or(0) as i64,
            mu2: c.data.mu2.unwrap_or(0) as i64,
            mu_res,
            xi: c.data.xi,
        })
    }
}

fn x_minus(field_one: &Scalar, a: &Scalar) -> Poly<Scalar> {
    Poly::from_coeffs(vec![a.f_neg(), field_one.clone()])
}

/// `x3^p - x3`.
fn artin_schreier(params: &AlgebraParams) -> Poly<Scalar> {
    let field = params.field();
    let p = field.characteristic() as usize;
    Poly::monomial(field.one(), p).sub(&Poly::monomial(field.one(), 1))
}

fn mu_in_prime_field(params: &AlgebraParams) -> bool {
    let mu = params.mu();
    let p = params.characteristic() as i64;
    mu.pow(p).map(|m| &m == mu).unwrap_or(false)
}

/// Generator `theta` of `K[x3]^G`: `1` for `p = 0`, `x3^p - x3` when `mu`
/// lies in the prime field, `f_mu` otherwise.
pub fn invariant_generator(params: &AlgebraParams) -> Result<Poly<Scalar>> {
    require_single(params)?;
    let field = params.field();
    if field.characteristic() == 0 {
        return Ok(Poly::constant(field.one()));
    }
    if params.factor(0).alpha == 0 || mu_in_prime_field(params) {
        return Ok(artin_schreier(params));
    }
    f_mu_closed(params)
}

fn require_positive_characteristic(params: &AlgebraParams) -> Result<()> {
    require_single(params)?;
    if params.characteristic() == 0 {
        return Err(Error::NotApplicable("f_mu is defined in positive characteristic".into()));
    }
    Ok(())
}

/// `f_mu = (x3^p - x3)^p - (mu^p - mu)^{p-1} (x3^p - x3)`.
pub fn f_mu_closed(params: &AlgebraParams) -> Result<Poly<Scalar>> {
    require_positive_characteristic(params)?;
    let p = params.characteristic() as i64;
    let mu = params.mu();
    let t = artin_schreier(params);
    let c = (mu.pow(p)? - mu).pow(p - 1)?;
    Ok(t.pow(p as u64).sub(&t.scale(&c)))
}

/// `f_mu = prod_{a, b in F_p} (x3 - a - b mu)`.
pub fn f_mu_product(params: &AlgebraParams) -> Result<Poly<Scalar>> {
    require_positive_characteristic(params)?;
    let field = params.field();
    let p = params.characteristic() as i64;
    let one = field.one();
    let mut f = Poly::constant(one.clone());
    for a in 0..p {
        for b in 0..p {
            let root = field.int(a) + field.int(b) * params.mu();
            f = f.mul(&x_minus(&one, &root));
        }
    }
    Ok(f)
}

/// Which subalgebra a [`CentreDescription`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subalgebra {
    Centre,
    Centralizer,
}

/// A commutative subalgebra `K[theta][x^delta : delta in M]` where `M` is
/// the monoid (group, in the localization) generated by `monomials`.
#[derive(Clone, Debug)]
pub struct CentreDescription {
    pub tag: CaseTag,
    pub mode: Mode,
    pub kind: Subalgebra,
    params: AlgebraParams,
    /// `theta`, when it is not a constant.
    pub theta: Option<Poly<Scalar>>,
    /// Exponents of the monomial generators (both signs listed in the localization).
    pub monomials: Vec<Vec<i64>>,
    pub xi: Vec<u64>,
}

impl CentreDescription {
    /// Generators as elements: `theta` first, then the monomials.
    pub fn generators(&self) -> Vec<GradedElement> {
        let mut out = Vec::new();
        if let Some(t) = &self.theta {
            out.push(GradedElement::from_x3_poly(&self.params, self.mode, t));
        }
        for d in &self.monomials {
            out.push(GradedElement::x_pow(&self.params, self.mode, d).expect("generator exponents fit the mode"));
        }
        out
    }

    /// Exponents of the monoid (group) generated by `monomials` with `|delta|_1 <= bound`.
    pub fn monomial_exponents(&self, bound: i64) -> Vec<Vec<i64>> {
        let norm = |d: &[i64]| d.iter().map(|x| x.abs()).sum::<i64>();
        let search = if self.mode == Mode::Laurent { 3 * bound } else { bound };
        let mut seen = std::collections::BTreeSet::from([vec![0i64, 0]]);
        let mut frontier = vec![vec![0i64, 0]];
        while let Some(d) = frontier.pop() {
            for g in &self.monomials {
                let e: Vec<i64> = d.iter().zip(g).map(|(a, b)| a + b).collect();
                if norm(&e) <= search && seen.insert(e.clone()) {
                    frontier.push(e);
                }
            }
        }
        seen.into_iter().filter(|d| norm(d) <= bound).collect()
    }

    /// A basis of the subalgebra intersected with the monomial frame of
    /// degree `d`: the products `theta^j x^delta` of degree at most `d`.
    pub fn span_in_frame(&self, d: usize) -> Vec<GradedElement> {
        let dt = self.theta.as_ref().and_then(|t| t.deg()).unwrap_or(0);
        let mut out = Vec::new();
        for delta in self.monomial_exponents(d as i64) {
            let used = delta.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>();
            let mut power = Poly::constant(self.params.field().one());
            let mut j = 0;
            loop {
                if used + j * dt > d {
                    break;
                }
                let piece = XPoly::from_univariate(&power);
                out.push(GradedElement::from_graded(&self.params, self.mode, [(delta.clone(), piece)]).expect("exponents fit the mode"));
                match &self.theta {
                    Some(t) => power = power.mul(t),
                    None => break,
                }
                j += 1;
            }
        }
        out
    }
}

impl fmt::Display for CentreDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        let what = match (self.kind, self.mode) {
            (Subalgebra::Centre, Mode::Polynomial) => "Z(A)",
            (Subalgebra::Centre, Mode::Laurent) => "Z(A_x1x2)",
            (Subalgebra::Centralizer, Mode::Polynomial) => "C_A(x1, x2)",
            (Subalgebra::Centralizer, Mode::Laurent) => "C_A_x1x2(x1, x2)",
        };
        if gens.is_empty() {
            write!(f, "{} ({}): K", what, self.tag)
        } else {
            write!(f, "{} ({}): K[{}]", what, self.tag, gens.join(", "))
        }
    }
}

fn with_inverses(mode: Mode, gens: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    if mode == Mode::Polynomial {
        return gens;
    }
    let mut out = Vec::new();
    for g in gens {
        let neg = g.iter().map(|x| -x).collect();
        out.push(g);
        out.push(neg);
    }
    out
}

fn describe(params: &AlgebraParams, mode: Mode, kind: Subalgebra, info: &CaseInfo, monomials: Vec<Vec<i64>>) -> Result<CentreDescription> {
    let theta = invariant_generator(params)?;
    let theta = (theta.deg() != Some(0)).then_some(theta);
    Ok(CentreDescription {
        tag: info.tag,
        mode,
        kind,
        params: params.clone(),
        theta,
        monomials: with_inverses(mode, monomials),
        xi: if kind == Subalgebra::Centre { info.xi.clone() } else { Vec::new() },
    })
}

/// `C(x1, x2) = K[x3]^G` or `K[x3]^G[x1^{n}, x2^{n}]` (signs `+-` in the localization).
pub fn centralizer_generators(params: &AlgebraParams, mode: Mode) -> Result<CentreDescription> {
    let info = CaseInfo::of(params)?;
    let n = info.n;
    let monomials = if n == 0 { Vec::new() } else { vec![vec![n, 0], vec![0, n]] };
    describe(params, mode, Subalgebra::Centralizer, &info, monomials)
}

/// Monomial generators of the centre; `theta` is added by [`describe`].
fn centre_monomials(info: &CaseInfo, mode: Mode) -> Vec<Vec<i64>> {
    use CaseTag::*;
    let (p, n) = (info.p, info.n);
    match (info.tag, mode) {
        (C1 | C2 | C3 | C7b, _) | (C7a, Mode::Polynomial) => Vec::new(),
        (C7a, Mode::Laurent) => vec![vec![info.mu1 * n, -info.mu2 * n]],
        (C4, _) => vec![vec![0, n]],
        (C5, _) => vec![vec![n, 0]],
        (C6, _) => vec![vec![info.mu1 * n, info.mu2 * n]],
        (C8, _) => vec![vec![p * n, 0], vec![0, n]],
        (C9, _) => vec![vec![n, 0], vec![0, p * n]],
        (C10, _) => vec![vec![p * n, 0], vec![0, p * n]],
        (C11, Mode::Polynomial) => {
            let mut g = vec![vec![p * n, 0]];
            for (i, xi) in info.xi.iter().enumerate() {
                g.push(vec![*xi as i64 * n, (i as i64 + 1) * n]);
            }
            g.push(vec![0, p * n]);
            g
        }
        (C11, Mode::Laurent) => vec![vec![p * n, 0], vec![-info.mu_res * n, n], vec![0, p * n]],
    }
}

/// The centre of `A` (mode `Polynomial`) or of its localization (mode `Laurent`).
pub fn centre_generators(params: &AlgebraParams, mode: Mode) -> Result<CentreDescription> {
    let info = CaseInfo::of(params)?;
    describe(params, mode, Subalgebra::Centre, &info, centre_monomials(&info, mode))
}

/// Fixed by `omega_x1` and `omega_x2` in every slot.
pub fn is_fixed_by_omega(a: &GradedElement) -> bool {
    (0..a.arity()).all(|s| &a.omega(1, s) == a && &a.omega(2, s) == a)
}

/// Fixed by both `omega`s and killed by `ad_x3`, in every slot.
pub fn is_central(a: &GradedElement) -> bool {
    is_fixed_by_omega(a) && (0..a.arity()).all(|s| a.ad_x3(s).is_zero())
}

/// Shape of one coordinate of an exponent set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axis {
    Nat,
    Int,
    /// `0 <= x < m`.
    Below(i64),
}

impl Axis {
    fn contains(self, x: i64) -> bool {
        match self {
            Axis::Nat => x >= 0,
            Axis::Int => true,
            Axis::Below(m) => (0..m).contains(&x),
        }
    }

    fn range(self, bound: i64) -> std::ops::RangeInclusive<i64> {
        match self {
            Axis::Nat => 0..=bound,
            Axis::Int => -bound..=bound,
            Axis::Below(m) => 0..=(m - 1).min(bound),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Nat => write!(f, "N"),
            Axis::Int => write!(f, "Z"),
            Axis::Below(m) => write!(f, "N_<{m}"),
        }
    }
}

/// The exponent set `R` of a free basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExponentSet {
    Product(Axis, Axis),
    /// `N^2 minus (corner + N^2)`.
    Staircase(i64, i64),
}

impl ExponentSet {
    pub fn contains(&self, b: &[i64]) -> bool {
        match *self {
            ExponentSet::Product(a1, a2) => a1.contains(b[0]) && a2.contains(b[1]),
            ExponentSet::Staircase(c1, c2) => b[0] >= 0 && b[1] >= 0 && (b[0] < c1 || b[1] < c2),
        }
    }

    /// Members with `|b1| + |b2| <= bound`.
    pub fn enumerate(&self, bound: i64) -> Vec<Vec<i64>> {
        let (r1, r2) = match *self {
            ExponentSet::Product(a1, a2) => (a1.range(bound), a2.range(bound)),
            ExponentSet::Staircase(..) => (0..=bound, 0..=bound),
        };
        let mut out = Vec::new();
        for b1 in r1 {
            for b2 in r2.clone() {
                let b = vec![b1, b2];
                if b1.abs() + b2.abs() <= bound && self.contains(&b) {
                    out.push(b);
                }
            }
        }
        out
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentSet::Product(a, b) => write!(f, "{a} x {b}"),
            ExponentSet::Staircase(c1, c2) => write!(f, "S({c1}, {c2})"),
        }
    }
}

/// Ring over which a free basis is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoefficientRing {
    /// The centre of the algebra in question.
    Centre,
    /// `K[x3^p - x3][x1^{pn}, x2^{pn}]`, a proper subring of the centre (case C11).
    Lambda,
}

/// `A = sum_{i in I, beta in R} Z x3^i x^beta` as a direct sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeBasisIndex {
    pub tag: CaseTag,
    pub mode: Mode,
    pub ring: CoefficientRing,
    /// `I = N_{<bound}`, or all of `N` when `None`.
    pub x3_bound: Option<u32>,
    pub exponents: ExponentSet,
    /// Whether the algebra is a finitely generated module over its centre.
    pub finitely_generated: bool,
}

impl FreeBasisIndex {
    pub fn contains(&self, i: u32, beta: &[i64]) -> bool {
        self.x3_bound.is_none_or(|m| i < m) && self.exponents.contains(beta)
    }
}

impl fmt::Display for FreeBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self.x3_bound {
            None => "N".to_string(),
            Some(m) => format!("N_<{m}"),
        };
        let ring = match (self.ring, self.mode) {
            (CoefficientRing::Lambda, _) => "Lambda' = K[x3^p - x3][x1^pn, x2^pn]",
            (CoefficientRing::Centre, Mode::Polynomial) => "Z(A)",
            (CoefficientRing::Centre, Mode::Laurent) => "Z(A_x1x2)",
        };
        write!(f, "{} ({:?}): I = {i}, R = {} over {ring}", self.tag, self.mode, self.exponents)?;
        if self.finitely_generated {
            write!(f, "; finitely generated over the centre")?;
        }
        Ok(())
    }
}

/// The index sets `(I, R)` of the free basis over the centre.
pub fn free_basis_index(params: &AlgebraParams, mode: Mode) -> Result<FreeBasisIndex> {
    use Axis::*;
    use CaseTag::*;
    let info = CaseInfo::of(params)?;
    let x3_bound = invariant_generator(params)?.deg().filter(|&d| d > 0).map(|d| d as u32);
    let (p, n) = (info.p, info.n);
    let laurent = mode == Mode::Laurent;
    let free = if laurent { Int } else { Nat };
    let exponents = match info.tag {
        C1 | C2 | C3 | C7b => ExponentSet::Product(free, free),
        C7a if !laurent => ExponentSet::Product(Nat, Nat),
        C7a => ExponentSet::Product(Int, Below(info.mu2 * n)),
        C4 => ExponentSet::Product(free, Below(n)),
        C5 => ExponentSet::Product(Below(n), free),
        C6 if !laurent => ExponentSet::Staircase(info.mu1 * n, info.mu2 * n),
        C6 => ExponentSet::Product(Below(info.mu1 * n), Int),
        C8 => ExponentSet::Product(Below(p * n), Below(n)),
        C9 => ExponentSet::Product(Below(n), Below(p * n)),
        C10 => ExponentSet::Product(Below(p * n), Below(p * n)),
        C11 if !laurent => ExponentSet::Product(Below(p * n), Below(p * n)),
        C11 => ExponentSet::Product(Below(p * n), Below(n)),
    };
    let ring = if info.tag == C11 && !laurent { CoefficientRing::Lambda } else { CoefficientRing::Centre };
    Ok(FreeBasisIndex {
        tag: info.tag,
        mode,
        ring,
        x3_bound,
        exponents,
        finitely_generated: matches!(info.tag, C8 | C9 | C10 | C11),
    })
}

/// Splits `gamma = delta + beta` with `x^delta` in the coefficient ring and `beta in R`.
fn split(info: &CaseInfo, mode: Mode, g: &[i64]) -> (Vec<i64>, Vec<i64>) {
    use CaseTag::*;
    let (p, n) = (info.p, info.n);
    let laurent = mode == Mode::Laurent;
    let delta = match info.tag {
        C1 | C2 | C3 | C7b => vec![0, 0],
        C7a if !laurent => vec![0, 0],
        C7a => {
            let k = g[1].div_euclid(info.mu2 * n);
            vec![-k * info.mu1 * n, k * info.mu2 * n]
        }
        C4 => vec![0, g[1].div_euclid(n) * n],
        C5 => vec![g[0].div_euclid(n) * n, 0],
        C6 => {
            let (c1, c2) = (info.mu1 * n, info.mu2 * n);
            let k = if laurent { g[0].div_euclid(c1) } else { (g[0] / c1).min(g[1] / c2) };
            vec![k * c1, k * c2]
        }
        C8 => vec![g[0].div_euclid(p * n) * p * n, g[1].div_euclid(n) * n],
        C9 => vec![g[0].div_euclid(n) * n, g[1].div_euclid(p * n) * p * n],
        C10 => vec![g[0].div_euclid(p * n) * p * n, g[1].div_euclid(p * n) * p * n],
        C11 if !laurent => vec![g[0].div_euclid(p * n) * p * n, g[1].div_euclid(p * n) * p * n],
        C11 => {
            let k2 = g[1].div_euclid(n);
            let shifted = g[0] + k2 * info.mu_res * n;
            let k1 = shifted.div_euclid(p * n);
            vec![k1 * p * n - k2 * info.mu_res * n, k2 * n]
        }
    };
    let beta = g.iter().zip(&delta).map(|(a, b)| a - b).collect();
    (delta, beta)
}

/// Coordinates of an element in the free basis `{x3^i x^beta}` over the centre.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub index: FreeBasisIndex,
    /// `(i, beta) -> z_{i beta}`, each coordinate an element of the coefficient ring.
    pub coords: BTreeMap<(u32, Vec<i64>), GradedElement>,
}

impl Decomposition {
    /// `sum z_{i beta} x3^i x^beta`, evaluated with the algebra product.
    pub fn recombine(&self, params: &AlgebraParams) -> GradedElement {
        let mode = self.index.mode;
        let x3 = GradedElement::x3(params, mode);
        let mut acc = GradedElement::zero(params, mode);
        for ((i, beta), z) in &self.coords {
            let xb = GradedElement::x_pow(params, mode, beta).expect("basis exponents fit the mode");
            acc = &acc + &(&(z * &x3.pow(*i)) * &xb);
        }
        acc
    }

    /// True when every coordinate sits at `i = 0`.
    pub fn x3_free(&self) -> bool {
        self.coords.keys().all(|(i, _)| *i == 0)
    }
}

/// Unique coordinates of `a` over the centre (over `Lambda'` for C11 in `A`).
pub fn decompose_over_centre(a: &GradedElement) -> Result<Decomposition> {
    let params = a.params();
    let mode = a.mode();
    let info = CaseInfo::of(params)?;
    let index = free_basis_index(params, mode)?;
    let theta = invariant_generator(params)?;
    let dt = theta.deg().unwrap_or(0);
    let field = params.field();
    let q = &params.factor(0).q;
    let mut pieces: BTreeMap<(u32, Vec<i64>), BTreeMap<Vec<i64>, XPoly>> = BTreeMap::new();
    for (gamma, f) in a.graded() {
        let (delta, beta) = split(&info, mode, gamma);
        let twist = q.pow(-delta[1] * beta[0])?;
        let mut rest = f.to_univariate(field).scale(&twist);
        let mut by_i: BTreeMap<u32, Poly<Scalar>> = BTreeMap::new();
        let mut power = Poly::constant(field.one());
        while !rest.is_zero() {
            let r = if dt == 0 {
                std::mem::replace(&mut rest, Poly::zero())
            } else {
                let (quo, r) = rest.divrem(&theta);
                rest = quo;
                r
            };
            for (i, c) in r.c.iter().enumerate() {
                if !c.is_zero() {
                    let e = by_i.entry(i as u32).or_insert_with(Poly::zero);
                    *e = e.add(&power.scale(c));
                }
            }
            if dt > 0 {
                power = power.mul(&theta);
            }
        }
        for (i, g) in by_i {
            let slot = pieces.entry((i, beta.clone())).or_default();
            let cur = slot.remove(&delta).unwrap_or_else(XPoly::zero);
            let next = cur.add(&XPoly::from_univariate(&g));
            if !next.is_zero() {
                slot.insert(delta.clone(), next);
            }
        }
    }
    let mut coords = BTreeMap::new();
    for (key, graded) in pieces {
        let z = GradedElement::from_graded(params, mode, graded)?;
        if !z.is_zero() {
            coords.insert(key, z);
        }
    }
    Ok(Decomposition { index, coords })
}

/// Membership in the eigenalgebra: all coordinates over the centre have `i = 0`.
pub fn in_eigenalgebra(a: &GradedElement) -> Result<bool> {
    Ok(decompose_over_centre(a)?.x3_free())
}

/// Groups the graded pieces of `a` by their weight `lambda_beta`.
pub fn weight_decompose(a: &GradedElement) -> Vec<(Weight, GradedElement)> {
    let params = a.params();
    let mut out: Vec<(Weight, GradedElement)> = Vec::new();
    for (beta, f) in a.graded() {
        let w = weight_of(params, beta);
        let piece = GradedElement::from_graded(params, a.mode(), [(beta.clone(), f.clone())]).expect("piece of a valid element");
        match out.iter_mut().find(|(v, _)| *v == w) {
            Some((_, e)) => *e = &*e + &piece,
            None => out.push((w, piece)),
        }
    }
    out
}

/// Ratio `b / a` read off at the first term of `a`, when `b = ratio * a`.
fn eigenvalue(a: &GradedElement, b: &GradedElement) -> Option<Scalar> {
    let (beta, x3, c) = a.flat_terms().into_iter().next()?;
    let d = b.coefficient(&beta).and_then(|f| f.terms.get(&x3).cloned()).unwrap_or_else(|| c.zero_like());
    let u = d.checked_div(&c).ok()?;
    (a.scale(&u) == *b).then_some(u)
}

/// The common weight when `a` is a simultaneous eigenvector of
/// `(omega_x1, omega_x2, ad_x3)`.
pub fn is_weight_vector(a: &GradedElement) -> Result<Option<Weight>> {
    if a.is_zero() {
        return Err(Error::ZeroElement);
    }
    let u1 = eigenvalue(a, &a.omega(1, 0));
    let u2 = eigenvalue(a, &a.omega(2, 0));
    let c = eigenvalue(a, &a.ad_x3(0));
    Ok(match (u1, u2, c) {
        (Some(u1), Some(u2), Some(c)) => Some(Weight { u1, u2, c }),
        _ => None,
    })
}

/// Normal elements are exactly the weight vectors; zero counts as normal.
pub fn is_normal(a: &GradedElement) -> bool {
    a.is_zero() || matches!(is_weight_vector(a), Ok(Some(_)))
}

/// Coefficient ring of the lines making up a weight space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightLines {
    /// `K`-lines.
    Field,
    /// A single line over `Z(A)`.
    Centre,
    /// Lines over `Lambda'` (case C11).
    Lambda,
}

/// A weight space `A_lambda` as a direct sum of lines `R x^beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSpace {
    pub lines: WeightLines,
    pub exponents: Vec<Vec<i64>>,
}

/// Basis monomials of the weight space of `lambda` with `beta1 + beta2 <= bound`.
pub fn weight_space_basis(params: &AlgebraParams, lambda: &Weight, bound: i64) -> Result<WeightSpace> {
    let info = CaseInfo::of(params)?;
    let total = |b: &Vec<i64>| b[0] + b[1] <= bound;
    match info.tag {
        CaseTag::C7a => {
            let n = info.n;
            let field = params.field();
            for g1 in 0..n {
                for g2 in 0..n {
                    let base = weight_of(params, &[g1, g2]);
                    if base.u1 != lambda.u1 || base.u2 != lambda.u2 {
                        continue;
                    }
                    let kn = (&lambda.c - &base.c).checked_div(&field.int(n))?;
                    let Some(k) = kn.as_integer().filter(|k| *k >= 0) else { continue };
                    let exponents = (0..=k).map(|i| vec![g1 + i * n, g2 + (k - i) * n]).filter(total).collect();
                    return Ok(WeightSpace { lines: WeightLines::Field, exponents });
                }
            }
            Err(Error::WeightNotRealized)
        }
        CaseTag::C11 => {
            let (p, n) = (info.p, info.n);
            let m = p * n;
            for b1 in 0..m {
                for b2 in 0..n {
                    if weight_of(params, &[b1, b2]) != *lambda {
                        continue;
                    }
                    let exponents = (0..p)
                        .map(|i| vec![(b1 - i * n * info.mu_res).rem_euclid(m), (b2 + i * n).rem_euclid(m)])
                        .filter(total)
                        .collect();
                    return Ok(WeightSpace { lines: WeightLines::Lambda, exponents });
                }
            }
            Err(Error::WeightNotRealized)
        }
        _ => {
            let index = free_basis_index(params, Mode::Polynomial)?;
            let beta = index
                .exponents
                .enumerate(bound)
                .into_iter()
                .find(|b| weight_of(params, b) == *lambda)
                .ok_or(Error::WeightNotRealized)?;
            Ok(WeightSpace { lines: WeightLines::Centre, exponents: vec![beta] })
        }
    }
}

/// Generators of the monoid `T_A` of central monomials of `A`.
pub fn ore_monoid_generators(params: &AlgebraParams) -> Result<Vec<GradedElement>> {
    let info = CaseInfo::of(params)?;
    centre_monomials(&info, Mode::Polynomial)
        .iter()
        .map(|d| GradedElement::x_pow(params, Mode::Polynomial, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_element;
    use crate::grid::instance;
    use crate::scalars::{Field, FieldSpec, MuMode, QMode};

    fn el(params: &AlgebraParams, s: &str) -> GradedElement {
        parse_element(s, params, Mode::Polynomial).unwrap()
    }

    fn texts(d: &CentreDescription) -> Vec<String> {
        d.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn invariant_generator_examples() {
        let c1 = instance(CaseTag::C1);
        assert_eq!(invariant_generator(&c1).unwrap().deg(), Some(0));
        let c2 = instance(CaseTag::C2);
        assert_eq!(GradedElement::from_x3_poly(&c2, Mode::Polynomial, &invariant_generator(&c2).unwrap()).to_string(), "x3^3 - x3");
        let c3 = instance(CaseTag::C3);
        assert_eq!(invariant_generator(&c3).unwrap(), f_mu_product(&c3).unwrap());
        assert!(matches!(f_mu_closed(&c1), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn f_mu_at_prime_field_values() {
        for (p, m) in [(2, 0), (3, 1)] {
            let f = Field::new(FieldSpec { characteristic: p, q_mode: QMode::Transcendental, mu_mode: MuMode::PrimeFieldValue(m) }).unwrap();
            let a = AlgebraParams::new(f, 1).unwrap();
            let t = artin_schreier(&a);
            assert_eq!(f_mu_closed(&a).unwrap(), t.pow(p));
            assert_eq!(f_mu_product(&a).unwrap(), t.pow(p));
        }
    }

    #[test]
    fn centre_examples() {
        let c4 = instance(CaseTag::C4);
        assert_eq!(texts(&centre_generators(&c4, Mode::Polynomial).unwrap()), ["x2^2"]);
        let c8 = instance(CaseTag::C8);
        assert_eq!(texts(&centre_generators(&c8, Mode::Polynomial).unwrap()), ["x3^3 - x3", "x1^6", "x2^2"]);
        let c11 = instance(CaseTag::C11);
        assert_eq!(
            texts(&centre_generators(&c11, Mode::Polynomial).unwrap()),
            ["x3^3 - x3", "x1^6", "x1^4*x2^2", "x1^2*x2^4", "x2^6"]
        );
        assert_eq!(
            texts(&centre_generators(&c11, Mode::Laurent).unwrap()),
            ["x3^3 - x3", "x1^6", "x1^-6", "x1^-2*x2^2", "x1^2*x2^-2", "x2^6", "x2^-6"]
        );
        assert!(texts(&centre_generators(&instance(CaseTag::C1), Mode::Polynomial).unwrap()).is_empty());
    }

    #[test]
    fn every_listed_generator_is_central() {
        for tag in CaseTag::ALL {
            let a = instance(tag);
            for mode in [Mode::Polynomial, Mode::Laurent] {
                for g in centre_generators(&a, mode).unwrap().generators() {
                    assert!(is_central(&g), "{tag} {mode:?}: {g}");
                }
                for g in centralizer_generators(&a, mode).unwrap().generators() {
                    assert!(is_fixed_by_omega(&g), "{tag} {mode:?}: {g}");
                }
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        assert!(texts(&centralizer_generators(&instance(CaseTag::C1), Mode::Polynomial).unwrap()).is_empty());
        assert_eq!(texts(&centralizer_generators(&instance(CaseTag::C4), Mode::Polynomial).unwrap()), ["x1^2", "x2^2"]);
        assert_eq!(
            texts(&centralizer_generators(&instance(CaseTag::C8), Mode::Polynomial).unwrap()),
            ["x3^3 - x3", "x1^2", "x2^2"]
        );
    }

    #[test]
    fn central_element_checks() {
        let c4 = instance(CaseTag::C4);
        assert!(is_central(&el(&c4, "x2^2")));
        assert!(!is_central(&el(&c4, "x1")));
        assert!(is_central(&el(&c4, "7")));
    }

    #[test]
    fn free_basis_examples() {
        let f = free_basis_index(&instance(CaseTag::C1), Mode::Polynomial).unwrap();
        assert_eq!((f.x3_bound, f.exponents), (None, ExponentSet::Product(Axis::Nat, Axis::Nat)));
        let f = free_basis_index(&instance(CaseTag::C6), Mode::Polynomial).unwrap();
        assert_eq!(f.exponents, ExponentSet::Staircase(2, 4));
        let f = free_basis_index(&instance(CaseTag::C8), Mode::Polynomial).unwrap();
        assert_eq!((f.x3_bound, f.exponents), (Some(3), ExponentSet::Product(Axis::Below(6), Axis::Below(2))));
        assert!(f.finitely_generated);
        let f = free_basis_index(&instance(CaseTag::C11), Mode::Polynomial).unwrap();
        assert_eq!(f.ring, CoefficientRing::Lambda);
    }

    #[test]
    fn decomposition_examples() {
        let c4 = instance(CaseTag::C4);
        let d = decompose_over_centre(&el(&c4, "x2^3")).unwrap();
        assert_eq!(d.coords.len(), 1);
        assert_eq!(d.coords[&(0, vec![0, 1])].to_string(), "x2^2");
        let c2 = instance(CaseTag::C2);
        let d = decompose_over_centre(&el(&c2, "x3^3")).unwrap();
        assert_eq!(d.coords[&(0, vec![0, 0])].to_string(), "x3^3 - x3");
        assert_eq!(d.coords[&(1, vec![0, 0])].to_string(), "1");
        let one = decompose_over_centre(&el(&c2, "1")).unwrap();
        assert_eq!(one.coords[&(0, vec![0, 0])].to_string(), "1");
        assert!(decompose_over_centre(&el(&c2, "0")).unwrap().coords.is_empty());
    }

    #[test]
    fn weight_examples() {
        let c1 = instance(CaseTag::C1);
        let f = c1.field();
        assert_eq!(weight_of(&c1, &[0, 0]), Weight { u1: f.one(), u2: f.one(), c: f.zero() });
        assert_eq!(weight_of(&c1, &[1, 0]), Weight { u1: f.one(), u2: f.q(), c: f.one() });
        let w = weight_space_basis(&c1, &weight_of(&c1, &[1, 0]), 4).unwrap();
        assert_eq!(w.exponents, vec![vec![1, 0]]);

        let c7a = instance(CaseTag::C7a);
        let f = c7a.field();
        let lambda = Weight { u1: f.one(), u2: f.one(), c: f.int(2) };
        let w = weight_space_basis(&c7a, &lambda, 2).unwrap();
        assert_eq!(w.exponents, vec![vec![0, 2], vec![2, 0]]);

        let c11 = instance(CaseTag::C11);
        let w = weight_space_basis(&c11, &weight_of(&c11, &[0, 0]), 12).unwrap();
        assert_eq!(w.exponents, vec![vec![0, 0], vec![4, 2], vec![2, 4]]);
    }

    #[test]
    fn normal_examples() {
        let c1 = instance(CaseTag::C1);
        assert!(is_normal(&el(&c1, "x1")));
        assert!(!is_normal(&el(&c1, "x1 + x2")));
        assert!(is_normal(&el(&c1, "0")));
        for g in centre_generators(&instance(CaseTag::C11), Mode::Polynomial).unwrap().generators() {
            assert!(is_normal(&g));
        }
    }

    #[test]
    fn ore_monoid_examples() {
        let t = |tag| ore_monoid_generators(&instance(tag)).unwrap().iter().map(|g| g.to_string()).collect::<Vec<_>>();
        assert_eq!(t(CaseTag::C4), ["x2^2"]);
        assert!(t(CaseTag::C7a).is_empty());
        assert_eq!(t(CaseTag::C8), ["x1^6", "x2^2"]);
        assert_eq!(t(CaseTag::C6), ["x1^2*x2^4"]);
    }
}
