use super::*;
use crate::grid;
use crate::presentation::CaseTag;

fn p(text: &str, alg: &AlgebraParams) -> GradedElement {
    parse_element(text, alg, Mode::Polynomial).unwrap()
}

fn l(text: &str, alg: &AlgebraParams) -> GradedElement {
    parse_element(text, alg, Mode::Laurent).unwrap()
}

#[test]
fn defining_relations_in_normal_form() {
    let a = grid::instance(CaseTag::C1);
    assert_eq!(p("x2*x1", &a), p("q*x1*x2", &a));
    assert_eq!(p("x1*x3", &a), p("x3*x1 - x1", &a));
    assert_eq!(p("x2^2*x1^3", &a), p("q^6*x1^3*x2^2", &a));
}

#[test]
fn addition_examples() {
    let a = grid::instance(CaseTag::C1);
    assert!(p("x1 + (-1)*x1", &a).is_zero());
    assert_eq!(p("x1 + x1", &a).to_string(), "2*x1");
    let e = p("x3*x1 + x1", &a);
    assert_eq!(e.support(), vec![vec![1, 0]]);
    assert_eq!(e.to_string(), "x3*x1 + x1");
}

#[test]
fn omega_and_ad_examples() {
    let a = grid::instance(CaseTag::C7b);
    let x2 = p("x2", &a);
    assert_eq!(x2.omega(1, 0), x2.scale(&a.field().q_pow(-1)));
    let m = p("x1^2*x2", &a);
    let c = a.field().int(2) + a.field().mu();
    assert_eq!(m.ad_x3(0), m.scale(&c));
    assert!(p("x3^5", &a).ad_x3(0).is_zero());
}

#[test]
fn commutator_examples() {
    let a = grid::instance(CaseTag::C7b);
    let x1 = p("x1", &a);
    let x3 = p("x3", &a);
    assert_eq!(x3.commutator(&x1).unwrap(), x1);
    assert!(x1.commutator(&x1).unwrap().is_zero());
    let m = p("x1*x2", &a);
    let c = a.field().one() + a.field().mu();
    assert_eq!(x3.commutator(&m).unwrap(), m.scale(&c));
}

#[test]
fn monomial_inverses() {
    let a = grid::instance(CaseTag::C1);
    let k = a.field();
    let one = GradedElement::one(&a, Mode::Laurent);
    assert_eq!(GradedElement::invert_monomial(&a, &k.one(), &[1, 0]).unwrap(), l("x1^-1", &a));
    let inv = GradedElement::invert_monomial(&a, &k.one(), &[1, 1]).unwrap();
    assert_eq!(inv, l("q*x1^-1*x2^-1", &a));
    assert_eq!(&l("x1*x2", &a) * &inv, one);
    assert_eq!(&inv * &l("x1*x2", &a), one);
    let inv = GradedElement::invert_monomial(&a, &k.q(), &[0, 1]).unwrap();
    assert_eq!(inv, l("q^-1*x2^-1", &a));
    assert_eq!(GradedElement::invert_monomial(&a, &k.zero(), &[0, 1]), Err(Error::ZeroElement));
}

#[test]
fn degree_support_embedding() {
    let a = grid::instance(CaseTag::C1);
    assert_eq!(p("x3^2*x1 + x2", &a).deg_x3().unwrap(), 2);
    assert_eq!(p("x1 + q*x1*x2", &a).support(), vec![vec![1, 0], vec![1, 1]]);
    assert_eq!(GradedElement::zero(&a, Mode::Polynomial).deg_x3(), Err(Error::ZeroElement));
    let e = p("x1", &a).embed_into_laurent();
    assert_eq!(&e * &e.try_inverse().unwrap(), GradedElement::one(&a, Mode::Laurent));
}

#[test]
fn parse_errors_and_specials() {
    let a = grid::instance(CaseTag::C1);
    assert!(p("0", &a).is_zero());
    assert_eq!(parse_element("x1^-1", &a, Mode::Polynomial), Err(Error::NegativeExponent("x1".into())));
    assert!(matches!(parse_element("x1 + * x2", &a, Mode::Polynomial), Err(Error::Parse { pos: 5, .. })));
    assert!(matches!(parse_element("x4", &a, Mode::Polynomial), Err(Error::Parse { .. })));
    assert!(matches!(parse_element("x1/x2", &a, Mode::Polynomial), Err(Error::Parse { .. })));
    assert_eq!(parse_element("x1/0", &a, Mode::Polynomial), Err(Error::DivisionByZero));
    assert_eq!(p("x1/2 + x1/2", &a), p("x1", &a));
    assert!(matches!(parse_element("(x1 + x2)^-1", &a, Mode::Laurent), Err(Error::Parse { .. })));
}

#[test]
fn mode_mismatch_is_reported() {
    let a = grid::instance(CaseTag::C1);
    let x = p("x1", &a);
    assert!(matches!(x.try_add(&x.embed_into_laurent()), Err(Error::ModeMismatch(_))));
}

#[test]
fn weights_of_small_exponents() {
    let a = grid::instance(CaseTag::C1);
    let k = a.field();
    assert_eq!(weight_of(&a, &[0, 0]), Weight { u1: k.one(), u2: k.one(), c: k.zero() });
    assert_eq!(weight_of(&a, &[1, 0]), Weight { u1: k.one(), u2: k.q(), c: k.one() });
}

#[test]
fn tensor_factors_commute() {
    let a = crate::presentation::AlgebraParams::from_toml_str(
        "q = { root_of_unity = 3 }\nmu = 0\n[[factors]]\nmu = 0\n[[factors]]\nq_power = 2\nalpha = 0\nmu = 1\n",
    )
    .unwrap();
    let u = p("x13*x11 + x12", &a);
    let v = p("x21^2*x23 - x22", &a);
    assert_eq!(&u * &v, &v * &u);
    assert_eq!(p("x22*x21", &a), p("q^2*x21*x22", &a));
    assert_eq!(p("x23*x22 - x22*x23", &a), p("x22", &a));
}

#[test]
fn print_parse_round_trip_on_grid() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (_, a) in grid::all() {
        for mode in [Mode::Polynomial, Mode::Laurent] {
            for _ in 0..20 {
                let e = GradedElement::random(&a, mode, &mut rng, 4, 4);
                let text = e.to_string();
                assert_eq!(parse_element(&text, &a, mode).unwrap(), e, "{text}");
            }
        }
    }
}
