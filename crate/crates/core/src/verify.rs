//! Desk-scale verification suites: each structural statement checked on the
//! instance grid against brute-force linear algebra.
//!
//! Every suite is deterministic (fixed seeds) and returns a [`Report`].

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{GradedElement, Mode};
use crate::automorphisms::{verify_is_automorphism, Automorphism};
use crate::error::{Error, Result};
use crate::grid::{self, default_degree};
use crate::linalg::{element_vector, same_span, Echelon, SparseVec, TermKey};
use crate::oracle::{oracle_centralizer, oracle_centre, oracle_is_normal, MonomialFrame};
use crate::presentation::{AlgebraParams, CaseTag};
use crate::scalars::{Field, FieldElem, FieldSpec, MuMode, QMode};
use crate::spectrum::{
    contract_ideal, dimensions, extend_central_ideal, is_simple_localized, stratify, tensor_centre_generators, CentralIdeal,
    StratifyInput, Stratum,
};
use crate::structure::{
    centralizer_generators, centre_generators, decompose_over_centre, f_mu_closed, f_mu_product, is_central, is_normal,
    is_weight_vector, weight_decompose, weight_space_basis, CoefficientRing, WeightLines,
};

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub number: u8,
    pub title: &'static str,
    pub passed: bool,
    /// One entry per failed check.
    pub failures: Vec<String>,
    pub checks: usize,
    pub millis: u128,
}

impl Report {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {:>2}: {} {} ({} checks, {} ms)",
            self.number, verdict, self.title, self.checks, self.millis
        );
        for f in &self.failures {
            s.push_str("\n    - ");
            s.push_str(f);
        }
        s
    }
}

struct Tally {
    failures: Vec<String>,
    checks: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { failures: Vec::new(), checks: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records an error as a failed check.
    fn attempt<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

fn run(number: u8, title: &'static str, body: impl FnOnce(&mut Tally)) -> Report {
    let start = Instant::now();
    let mut t = Tally::new();
    body(&mut t);
    Report { number, title, passed: t.failures.is_empty(), failures: t.failures, checks: t.checks, millis: start.elapsed().as_millis() }
}

fn vectors(es: &[GradedElement]) -> Vec<SparseVec<TermKey>> {
    es.iter().map(element_vector).collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Degree used by a suite: the case default, capped by `cap` when given.
fn degree_for(tag: CaseTag, cap: Option<usize>) -> usize {
    let d = default_degree(tag);
    cap.map_or(d, |c| d.min(c))
}

/// Defining relations vanish and the product is associative.
pub fn relations_and_associativity(triples: usize) -> Report {
    run(1, "relations and associativity", |t| {
        for (tag, p) in grid::all() {
            let m = Mode::Polynomial;
            let (x1, x2, x3) = (GradedElement::x1(&p, m), GradedElement::x2(&p, m), GradedElement::x3(&p, m));
            let one = GradedElement::one(&p, m);
            let rels = [
                &x2 * &x1 - (&x1 * &x2).scale(p.q()),
                &x3 * &x1 - &x1 * &(&x3 + &one.scale(p.alpha())),
                &x3 * &x2 - &x2 * &(&x3 + &one.scale(p.mu())),
            ];
            for (k, r) in rels.iter().enumerate() {
                t.check(r.is_zero(), || format!("{tag}: relation {} leaves {r}", k + 1));
            }
            let mut g = rng(1);
            for _ in 0..triples {
                let [a, b, c] = [0, 1, 2].map(|_| GradedElement::random(&p, m, &mut g, 4, 3));
                let ok = &(&a * &b) * &c == &a * &(&b * &c);
                t.check(ok, || format!("{tag}: (ab)c != a(bc) for a = {a}, b = {b}, c = {c}"));
            }
        }
    })
}

fn compare_spans(t: &mut Tally, what: String, got: &[GradedElement], want: &[GradedElement]) {
    let ok = same_span(&vectors(got), &vectors(want));
    t.check(ok, || format!("{what}: oracle dimension {} vs claimed {}", got.len(), want.len()));
}

/// Claimed centres are central and agree with the oracle on the frame.
pub fn centre_correctness(cap: Option<usize>) -> Report {
    run(2, "centre generators match the oracle centre", |t| {
        for (tag, p) in grid::all() {
            let d = degree_for(tag, cap);
            for mode in [Mode::Polynomial, Mode::Laurent] {
                let Some(desc) = t.attempt(centre_generators(&p, mode), || format!("{tag} {mode:?}")) else { continue };
                for g in desc.generators() {
                    t.check(is_central(&g), || format!("{tag} {mode:?}: generator {g} is not central"));
                }
                let Some(frame) = t.attempt(MonomialFrame::new(&p, mode, d), || format!("{tag}")) else { continue };
                let Some(got) = t.attempt(oracle_centre(&frame), || format!("{tag} {mode:?} oracle")) else { continue };
                compare_spans(t, format!("{tag} {mode:?} d={d}"), &got, &desc.span_in_frame(d));
            }
        }
    })
}

/// Claimed centralizers of `x1, x2` agree with the oracle on the frame.
pub fn centralizer_correctness(cap: Option<usize>) -> Report {
    run(3, "centralizer of x1, x2 matches the oracle", |t| {
        for (tag, p) in grid::all() {
            let d = degree_for(tag, cap);
            for mode in [Mode::Polynomial, Mode::Laurent] {
                let Some(desc) = t.attempt(centralizer_generators(&p, mode), || format!("{tag} {mode:?}")) else { continue };
                let Some(frame) = t.attempt(MonomialFrame::new(&p, mode, d), || format!("{tag}")) else { continue };
                let targets = [GradedElement::x1(&p, mode), GradedElement::x2(&p, mode)];
                let Some(got) = t.attempt(oracle_centralizer(&frame, &targets), || format!("{tag} {mode:?} oracle")) else { continue };
                compare_spans(t, format!("{tag} {mode:?} d={d}"), &got, &desc.span_in_frame(d));
            }
        }
    })
}

fn f_mu_instance(p: u64, mu: MuMode) -> Result<AlgebraParams> {
    // mu = 1 is taken with alpha = 0, since alpha = 1 excludes mu = -1 (= 1 in F_2).
    let alpha = if mu == MuMode::PrimeFieldValue(1) { 0 } else { 1 };
    let field = Field::new(FieldSpec { characteristic: p, q_mode: QMode::Transcendental, mu_mode: mu })?;
    AlgebraParams::new(field, alpha)
}

/// Closed and product forms of `f_mu` coincide.
pub fn f_mu_identity() -> Report {
    run(4, "f_mu closed form equals product form", |t| {
        for p in [2u64, 3] {
            for (name, mu) in [("0", MuMode::PrimeFieldValue(0)), ("1", MuMode::PrimeFieldValue(1)), ("transcendental", MuMode::Transcendental)] {
                let what = || format!("p = {p}, mu = {name}");
                let Some(a) = t.attempt(f_mu_instance(p, mu), what) else { continue };
                let (Some(c), Some(q)) = (t.attempt(f_mu_closed(&a), what), t.attempt(f_mu_product(&a), what)) else { continue };
                t.check(c == q, || format!("p = {p}, mu = {name}: forms differ"));
            }
        }
    })
}

/// Decomposition over the centre followed by recombination is the identity.
pub fn free_basis_roundtrip(samples: usize) -> Report {
    run(5, "free-basis decomposition roundtrip", |t| {
        for (tag, p) in grid::all() {
            for mode in [Mode::Polynomial, Mode::Laurent] {
                let mut g = rng(5);
                for _ in 0..samples {
                    let a = GradedElement::random(&p, mode, &mut g, 12, 4);
                    let Some(dec) = t.attempt(decompose_over_centre(&a), || format!("{tag} {mode:?} {a}")) else { continue };
                    t.check(dec.recombine(&p) == a, || format!("{tag} {mode:?}: recombination of {a} differs"));
                    let in_index = dec.coords.keys().all(|(i, b)| dec.index.contains(*i, b));
                    t.check(in_index, || format!("{tag} {mode:?}: {a} uses a basis element outside the index set"));
                    if dec.index.ring == CoefficientRing::Centre {
                        let central = dec.coords.values().all(is_central);
                        t.check(central, || format!("{tag} {mode:?}: non-central coordinate for {a}"));
                    }
                }
            }
        }
    })
}

/// Random elements `sum z_k x^beta_k` of the eigenalgebra, `z_k` central.
fn random_eigen_element(p: &AlgebraParams, g: &mut ChaCha8Rng, centre: &[GradedElement]) -> GradedElement {
    let mut a = GradedElement::zero(p, Mode::Polynomial);
    for _ in 0..3 {
        let z = &centre[g.gen_range(0..centre.len())];
        let beta = [g.gen_range(0..4), g.gen_range(0..4)];
        let xb = GradedElement::x_pow(p, Mode::Polynomial, &beta).expect("nonnegative exponents");
        a = &a + &(z * &xb).scale(&p.field().random_scalar(g));
    }
    a
}

/// Weight decomposition, weight-space dimensions in C7a, and the C11 exponent lines.
pub fn weight_theory(samples: usize) -> Report {
    run(6, "weight decomposition and weight spaces", |t| {
        for (tag, p) in grid::all() {
            let Some(desc) = t.attempt(centre_generators(&p, Mode::Polynomial), || format!("{tag}")) else { continue };
            let centre = desc.span_in_frame(3);
            let mut g = rng(6);
            for _ in 0..samples {
                let a = random_eigen_element(&p, &mut g, &centre);
                let parts = weight_decompose(&a);
                let mut sum = GradedElement::zero(&p, Mode::Polynomial);
                for (w, e) in &parts {
                    sum = &sum + e;
                    let ok = matches!(is_weight_vector(e), Ok(Some(ref v)) if v == w);
                    t.check(ok, || format!("{tag}: component {e} of {a} is not an eigenvector of weight {w}"));
                }
                t.check(sum == a, || format!("{tag}: components of {a} do not sum to it"));
            }
        }

        let c7a = grid::instance(CaseTag::C7a);
        let n = 2;
        let bound = 4 * n + 2;
        for g1 in 0..n {
            for g2 in 0..n {
                for k in 0..=3 {
                    let base = vec![g1 + k * n, g2];
                    let Some(w) = t.attempt(is_weight_vector(&GradedElement::x_pow(&c7a, Mode::Polynomial, &base).unwrap()), || "C7a".into())
                    else {
                        continue;
                    };
                    let w = w.expect("monomials are weight vectors");
                    let Some(space) = t.attempt(weight_space_basis(&c7a, &w, bound), || format!("C7a weight {w}")) else { continue };
                    let brute = brute_weight_exponents(&c7a, &w, bound, false);
                    t.check(space.lines == WeightLines::Field, || "C7a lines are not K-lines".into());
                    t.check(space.exponents.len() == (k + 1) as usize, || {
                        format!("C7a weight {w}: {} lines, expected {}", space.exponents.len(), k + 1)
                    });
                    t.check(sorted(space.exponents.clone()) == brute, || format!("C7a weight {w}: exponents differ from brute force"));
                }
            }
        }

        let c11 = grid::instance(CaseTag::C11);
        let m = 6;
        for b1 in 0..m {
            for b2 in 0..2 {
                let x = GradedElement::x_pow(&c11, Mode::Polynomial, &[b1, b2]).unwrap();
                let Some(Some(w)) = t.attempt(is_weight_vector(&x), || "C11".into()) else { continue };
                let Some(space) = t.attempt(weight_space_basis(&c11, &w, 2 * m), || format!("C11 weight {w}")) else { continue };
                let brute = brute_weight_exponents(&c11, &w, m - 1, true);
                t.check(sorted(space.exponents.clone()) == brute, || {
                    format!("C11 ({b1}, {b2}): lines {:?}, brute force {:?}", space.exponents, brute)
                });
            }
        }
    })
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v.dedup();
    v
}

/// Exponents `beta` whose monomial is an eigenvector of weight `w`, searched in
/// the triangle `beta1 + beta2 <= bound` or, with `boxed`, in `[0, bound]^2`.
fn brute_weight_exponents(p: &AlgebraParams, w: &crate::algebra::Weight, bound: i64, boxed: bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for b1 in 0..=bound {
        for b2 in 0..=bound {
            if !boxed && b1 + b2 > bound {
                continue;
            }
            let x = GradedElement::x_pow(p, Mode::Polynomial, &[b1, b2]).unwrap();
            let u1 = x.omega(1, 0);
            let u2 = x.omega(2, 0);
            let c = x.ad_x3(0);
            if u1 == x.scale(&w.u1) && u2 == x.scale(&w.u2) && c == x.scale(&w.c) {
                out.push(vec![b1, b2]);
            }
        }
    }
    out
}

/// `is_normal` agrees with the brute-force normality test.
pub fn normal_equals_weight(samples: usize) -> Report {
    run(7, "normal elements are exactly the weight vectors", |t| {
        for (tag, p) in grid::all() {
            let m = Mode::Polynomial;
            let (x1, x2) = (GradedElement::x1(&p, m), GradedElement::x2(&p, m));
            let mut elements = vec![x1.clone(), x2.clone(), &x1 * &x2, &x1 + &x2];
            let mut g = rng(7);
            for _ in 0..samples {
                let terms = g.gen_range(1..=3);
                elements.push(GradedElement::random(&p, m, &mut g, 3, terms));
            }
            for a in elements {
                let d = 2 * a.total_degree().unwrap_or(0) as usize + 2;
                let Some(frame) = t.attempt(MonomialFrame::new(&p, m, d), || format!("{tag}")) else { continue };
                let Some(want) = t.attempt(oracle_is_normal(&a, &frame), || format!("{tag} {a}")) else { continue };
                t.check(is_normal(&a) == want, || format!("{tag}: {a} oracle says normal = {want}"));
            }
        }
    })
}

fn principal(p: &AlgebraParams, mode: Mode, g: GradedElement) -> Result<CentralIdeal> {
    CentralIdeal::new(p, mode, vec![g], true)
}

fn minus_one(x: GradedElement) -> GradedElement {
    let one = GradedElement::one(x.params(), x.mode());
    &x - &one
}

fn laurent_monomial(p: &AlgebraParams, beta: &[i64]) -> GradedElement {
    GradedElement::x_pow(p, Mode::Laurent, beta).expect("Laurent exponents")
}

/// Simplicity of the localization and the extension/contraction bijection.
pub fn simplicity_and_ideals(cap: Option<usize>) -> Report {
    run(8, "simplicity criterion and ideal correspondence", |t| {
        let d = cap.map_or(6, |c| c.min(6));
        for (tag, p) in grid::all() {
            let Some(frame) = t.attempt(MonomialFrame::new(&p, Mode::Laurent, d), || format!("{tag}")) else { continue };
            let Some(centre) = t.attempt(oracle_centre(&frame), || format!("{tag} oracle")) else { continue };
            let trivial = centre.len() == 1 && centre[0].as_scalar().is_some();
            let expected = matches!(tag, CaseTag::C1 | CaseTag::C7b);
            t.check(trivial == expected, || format!("{tag}: oracle centre trivial = {trivial}"));
            let claimed = is_simple_localized(&p).unwrap_or(!expected);
            t.check(claimed == expected, || format!("{tag}: is_simple_localized = {claimed}"));
        }

        let theta = |p: &AlgebraParams| {
            let desc = centre_generators(p, Mode::Laurent).expect("grid instance");
            desc.generators().into_iter().next().expect("theta is present")
        };
        let samples: Vec<(CaseTag, GradedElement)> = vec![
            (CaseTag::C2, theta(&grid::instance(CaseTag::C2))),
            (CaseTag::C4, minus_one(laurent_monomial(&grid::instance(CaseTag::C4), &[0, 2]))),
            (CaseTag::C6, minus_one(laurent_monomial(&grid::instance(CaseTag::C6), &[2, 4]))),
            (CaseTag::C8, minus_one(laurent_monomial(&grid::instance(CaseTag::C8), &[0, 2]))),
            (CaseTag::C11, minus_one(laurent_monomial(&grid::instance(CaseTag::C11), &[-2, 2]))),
        ];
        for (tag, g) in samples {
            let p = g.params().clone();
            let d = degree_for(tag, cap);
            let Some(ideal) = t.attempt(principal(&p, Mode::Laurent, g.clone()), || format!("{tag} ({g})")) else { continue };
            let Some(back) = t.attempt(contract_ideal(&extend_central_ideal(&ideal), d), || format!("{tag} ({g})")) else { continue };
            let Some(want) = t.attempt(ideal.truncated_span(d), || format!("{tag}")) else { continue };
            compare_spans(t, format!("{tag}: contraction of ({g}) A_x1x2 at d={d}"), &back.generators, &want);
        }
    })
}

/// Pure monomials `x^delta`, `delta != 0`, that are central and lie in `ideal` up to degree `d`.
fn meets_monomials(p: &AlgebraParams, ideal: &CentralIdeal, d: usize) -> Result<bool> {
    let frame = MonomialFrame::new(p, Mode::Polynomial, d)?;
    for x in frame.elements() {
        let has_x = x.support().iter().any(|b| b.iter().any(|&e| e != 0));
        let pure = x.deg_x3()? == 0;
        if has_x && pure && is_central(&x) && ideal.contains_central(&x, d)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Sample central ideals for [`stratification`]: `(m)`, `(m - 1)`, `(theta)`.
fn sample_ideals(p: &AlgebraParams, mode: Mode) -> Result<Vec<CentralIdeal>> {
    let desc = centre_generators(p, mode)?;
    let mut out = vec![CentralIdeal::new(p, mode, vec![], true)?];
    let gens = desc.generators();
    for (k, g) in gens.iter().enumerate() {
        let is_theta = k == 0 && desc.theta.is_some();
        if !is_theta && mode == Mode::Polynomial {
            out.push(principal(p, mode, g.clone())?);
        }
        out.push(principal(p, mode, minus_one(g.clone()))?);
        if is_theta {
            out.push(principal(p, mode, g.clone())?);
        }
    }
    Ok(out)
}

/// Routing of primes to strata and omega-stability of extended ideals.
pub fn stratification(cap: Option<usize>) -> Report {
    run(9, "spectrum stratification", |t| {
        for (tag, p) in grid::all() {
            let d = cap.map_or(6, |c| c.min(6));
            let x1 = stratify(&p, StratifyInput::X1, d);
            t.check(matches!(x1, Ok(ref s) if matches!(s.stratum, Stratum::ContainsX1)), || format!("{tag}: x1 misrouted"));
            let x2 = stratify(&p, StratifyInput::X2, d);
            t.check(matches!(x2, Ok(ref s) if matches!(s.stratum, Stratum::ContainsX2)), || format!("{tag}: x2 misrouted"));

            let second = matches!(tag, CaseTag::C7a | CaseTag::C11);
            let mode = if second { Mode::Laurent } else { Mode::Polynomial };
            let Some(ideals) = t.attempt(sample_ideals(&p, mode), || format!("{tag}")) else { continue };
            for ideal in ideals {
                let meets = if second { Ok(false) } else { meets_monomials(&p, &ideal, d) };
                let Some(meets) = t.attempt(meets, || format!("{tag} {ideal}")) else { continue };
                match stratify(&p, StratifyInput::Central(ideal.clone()), d) {
                    Err(Error::MeetsOreSet(_)) => t.check(meets, || format!("{tag}: {ideal} wrongly reported as meeting T_A")),
                    Ok(s) => {
                        let branch = if second { 2 } else { 1 };
                        let routed = matches!(s.stratum, Stratum::Localized { branch: b, .. } if b == branch);
                        t.check(!meets && routed, || format!("{tag}: {ideal} routed to {s} (meets T_A = {meets})"));
                    }
                    Err(e) => t.check(false, || format!("{tag}: {ideal}: {e}")),
                }
                let h = extend_central_ideal(&ideal);
                let Some(members) = t.attempt(h.truncated_span(d), || format!("{tag} {ideal}")) else { continue };
                let mut span = Echelon::new();
                for m in &members {
                    span.insert(element_vector(m));
                }
                let stable = members.iter().all(|m| span.contains(&element_vector(&m.omega(1, 0))) && span.contains(&element_vector(&m.omega(2, 0))));
                t.check(stable, || format!("{tag}: extension of {ideal} is not omega-stable at d={d}"));
            }
        }
    })
}

/// A random element of the centralizer `C(x1, x2)` built from its basis in degree <= 4.
fn random_shift(p: &AlgebraParams, g: &mut ChaCha8Rng) -> Result<GradedElement> {
    let basis = centralizer_generators(p, Mode::Polynomial)?.span_in_frame(4);
    let mut out = GradedElement::zero(p, Mode::Polynomial);
    for _ in 0..2 {
        let b = &basis[g.gen_range(0..basis.len())];
        if b.as_scalar().is_none() {
            out = &out + &b.scale(&p.field().random_scalar(g));
        }
    }
    Ok(out)
}

fn nonzero_scalar(p: &AlgebraParams, g: &mut ChaCha8Rng) -> crate::scalars::Scalar {
    loop {
        let c = p.field().random_scalar(g);
        if !c.is_zero() {
            return c;
        }
    }
}

fn verified(a: &Automorphism) -> Result<bool> {
    let d = (a.lambda3.total_degree().unwrap_or(0) as usize).max(crate::automorphisms::DEFAULT_VERIFY_DEGREE);
    verify_is_automorphism(&a.images(Mode::Polynomial), d)
}

/// The maps `sigma_lambda` and `tau` pass the relation and generation check
/// and satisfy the commutation rule with `tau`.
pub fn automorphism_group(samples: usize) -> Report {
    run(10, "automorphism group", |t| {
        for (tag, p) in grid::all() {
            let mut g = rng(10);
            for _ in 0..samples {
                let Some(l3) = t.attempt(random_shift(&p, &mut g), || format!("{tag}")) else { continue };
                let (l1, l2) = (nonzero_scalar(&p, &mut g), nonzero_scalar(&p, &mut g));
                let Some(s) = t.attempt(Automorphism::sigma(&p, l1.clone(), l2.clone(), l3.clone()), || format!("{tag} sigma")) else { continue };
                let ok = verified(&s).unwrap_or(false);
                t.check(ok, || format!("{tag}: sigma({l1}, {l2}, {l3}) rejected"));
                if p.q().f_mul(p.q()).is_one() {
                    let Some(tau) = t.attempt(Automorphism::tau(&p), || format!("{tag} tau")) else { continue };
                    let Some(tl3) = t.attempt(tau.apply(&l3), || format!("{tag} tau")) else { continue };
                    let lhs = tau.compose(&s);
                    let rhs = Automorphism::sigma(&p, l2.clone(), l1.clone(), tl3).and_then(|r| r.compose(&tau));
                    let same = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
                    t.check(same, || format!("{tag}: tau sigma != sigma' tau for lambda3 = {l3}"));
                }
            }
            if p.q().f_mul(p.q()).is_one() {
                let ok = Automorphism::tau(&p).and_then(|a| verified(&a)).unwrap_or(false);
                t.check(ok, || format!("{tag}: tau rejected (alpha = {}, mu = {})", p.alpha(), p.mu()));
            }
        }

        let Some(field) = t.attempt(
            Field::new(FieldSpec { characteristic: 0, q_mode: QMode::RootOfUnity { n: 3, modulus: None }, mu_mode: MuMode::RationalValue { num: 0, den: 1 } }),
            || "order-3 field".into(),
        ) else {
            return;
        };
        let Some(p) = t.attempt(AlgebraParams::new(field, 1), || "order-3 instance".into()) else { return };
        let m = Mode::Polynomial;
        let images = [GradedElement::x2(&p, m), GradedElement::x1(&p, m), GradedElement::x3(&p, m)];
        t.check(verify_is_automorphism(&images, 3) == Ok(false), || "swap accepted for q of order 3".into());
        t.check(matches!(Automorphism::tau(&p), Err(Error::SwapNotAllowed(_))), || "tau constructed for q of order 3".into());
    })
}

/// Tensor products of two factors over a common field.
fn tensor_instances() -> Result<Vec<(String, AlgebraParams)>> {
    let spec = |p, n, mu| FieldSpec { characteristic: p, q_mode: QMode::RootOfUnity { n, modulus: None }, mu_mode: mu };
    let f0 = Field::new(spec(0, 2, MuMode::RationalValue { num: 1, den: 1 }))?;
    let f3 = Field::new(spec(3, 2, MuMode::PrimeFieldValue(1)))?;
    let f4 = Field::new(spec(0, 4, MuMode::RationalValue { num: 1, den: 1 }))?;
    Ok(vec![
        ("C4 (x) C5".into(), AlgebraParams::tensor(f0.clone(), vec![(1, 1, f0.zero()), (1, 0, f0.one())])?),
        ("C8 (x) C11".into(), AlgebraParams::tensor(f3.clone(), vec![(1, 1, f3.zero()), (1, 1, f3.one())])?),
        ("q^2 (x) q".into(), AlgebraParams::tensor(f4.clone(), vec![(2, 1, f4.zero()), (1, 1, f4.one())])?),
    ])
}

/// Dimension formulas and the centre of tensor products.
pub fn dimension_formulas() -> Report {
    run(11, "dimensions and tensor-product centres", |t| {
        for n in 1..=8 {
            let want = 3 * n;
            let ok = matches!(dimensions(n), Ok(d) if d.gk == want && d.krull == want && d.classical_krull == want && d.global == want);
            t.check(ok, || format!("dimensions({n}) != {want}"));
        }
        let Some(instances) = t.attempt(tensor_instances(), || "tensor instances".into()) else { return };
        for (name, p) in instances {
            let Some(gens) = t.attempt(tensor_centre_generators(&p), || name.clone()) else { continue };
            t.check(!gens.is_empty(), || format!("{name}: no generators"));
            for g in gens {
                t.check(is_central(&g), || format!("{name}: {g} is not central"));
            }
        }
    })
}

/// All suites at their default sizes; `cap` lowers the oracle degree.
pub fn all(cap: Option<usize>) -> Vec<Report> {
    vec![
        relations_and_associativity(200),
        centre_correctness(cap),
        centralizer_correctness(cap),
        f_mu_identity(),
        free_basis_roundtrip(100),
        weight_theory(20),
        normal_equals_weight(50),
        simplicity_and_ideals(cap),
        stratification(cap),
        automorphism_group(5),
        dimension_formulas(),
    ]
}
