//! Randomized invariants over the instance grid.

use biquad_core::algebra::{parse_element, GradedElement, Mode};
use biquad_core::automorphisms::Automorphism;
use biquad_core::grid;
use biquad_core::presentation::{AlgebraParams, CaseTag};
use biquad_core::scalars::{FieldElem, Scalar};
use biquad_core::structure::{centralizer_generators, decompose_over_centre, weight_decompose};
use biquad_core::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tag() -> impl Strategy<Value = CaseTag> {
    prop::sample::select(CaseTag::ALL.to_vec())
}

fn mode() -> impl Strategy<Value = Mode> {
    prop::sample::select(vec![Mode::Polynomial, Mode::Laurent])
}

fn random(p: &AlgebraParams, m: Mode, g: &mut ChaCha8Rng) -> GradedElement {
    let terms = g.gen_range(0..=4);
    GradedElement::random(p, m, g, 5, terms)
}

fn unit(p: &AlgebraParams, g: &mut ChaCha8Rng) -> Scalar {
    loop {
        let c = p.field().random_scalar(g);
        if !c.is_zero() {
            return c;
        }
    }
}

/// A shift in the centralizer; `x3_free` keeps it invertible.
fn shift(p: &AlgebraParams, g: &mut ChaCha8Rng, x3_free: bool) -> GradedElement {
    let basis = centralizer_generators(p, Mode::Polynomial).unwrap().span_in_frame(4);
    let mut out = GradedElement::zero(p, Mode::Polynomial);
    for b in basis {
        if (!x3_free || b.deg_x3().unwrap() == 0) && g.gen_bool(0.3) {
            out = &out + &b.scale(&p.field().random_scalar(g));
        }
    }
    out
}

fn sigma(p: &AlgebraParams, g: &mut ChaCha8Rng, x3_free: bool) -> Automorphism {
    let (l1, l2) = (unit(p, g), unit(p, g));
    Automorphism::sigma(p, l1, l2, shift(p, g, x3_free)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(t in tag(), m in mode(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random(&p, m, g), random(&p, m, g), random(&p, m, g));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn omegas_are_multiplicative(t in tag(), m in mode(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random(&p, m, g), random(&p, m, g));
        for k in [1, 2] {
            prop_assert_eq!((&a * &b).omega(k, 0), &a.omega(k, 0) * &b.omega(k, 0));
        }
    }

    #[test]
    fn printing_round_trips(t in tag(), m in mode(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let a = random(&p, m, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(parse_element(&a.to_string(), &p, m).unwrap(), a);
    }

    #[test]
    fn decomposition_recombines(t in tag(), m in mode(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let a = random(&p, m, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(decompose_over_centre(&a).unwrap().recombine(&p), a);
    }

    #[test]
    fn weight_components_sum_to_input(t in tag(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let a = random(&p, Mode::Polynomial, &mut ChaCha8Rng::seed_from_u64(seed));
        let mut sum = GradedElement::zero(&p, Mode::Polynomial);
        for (_, e) in weight_decompose(&a) {
            sum = &sum + &e;
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn sigma_respects_products(t in tag(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let s = sigma(&p, g, false);
        let (a, b) = (random(&p, Mode::Polynomial, g), random(&p, Mode::Polynomial, g));
        prop_assert_eq!(s.apply(&(&a * &b)).unwrap(), &s.apply(&a).unwrap() * &s.apply(&b).unwrap());
    }

    #[test]
    fn tau_respects_products_when_alpha_equals_mu(
        t in prop::sample::select(vec![CaseTag::C7a, CaseTag::C11]),
        seed in any::<u64>(),
    ) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let tau = Automorphism::tau(&p).unwrap();
        let (a, b) = (random(&p, Mode::Polynomial, g), random(&p, Mode::Polynomial, g));
        prop_assert_eq!(tau.apply(&(&a * &b)).unwrap(), &tau.apply(&a).unwrap() * &tau.apply(&b).unwrap());
    }

    #[test]
    fn composition_is_associative(t in tag(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (sigma(&p, g, false), sigma(&p, g, false), sigma(&p, g, false));
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
    }

    #[test]
    fn composition_matches_application(t in tag(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (sigma(&p, g, false), sigma(&p, g, false));
        let x = random(&p, Mode::Polynomial, g);
        prop_assert_eq!(a.compose(&b).unwrap().apply(&x).unwrap(), a.apply(&b.apply(&x).unwrap()).unwrap());
    }

    #[test]
    fn inverse_undoes(t in tag(), swap in any::<bool>(), seed in any::<u64>()) {
        let p = grid::instance(t);
        let g = &mut ChaCha8Rng::seed_from_u64(seed);
        let mut s = sigma(&p, g, true);
        if swap && t.q_has_finite_order() {
            s = s.compose(&Automorphism::tau(&p).unwrap()).unwrap();
        }
        let inv = s.inverse().unwrap();
        prop_assert!(inv.compose(&s).unwrap().is_identity());
        prop_assert!(s.compose(&inv).unwrap().is_identity());
    }
}

#[test]
fn x3_is_never_a_valid_shift() {
    for (tag, p) in grid::all() {
        let x3 = GradedElement::x3(&p, Mode::Polynomial);
        let one = p.field().one();
        let r = Automorphism::sigma(&p, one.clone(), one, x3);
        assert!(matches!(r, Err(Error::CentralizerViolation(_))), "{tag}");
    }
}
