//! Canonical text form of elements, in the same grammar the parser accepts.
//!
//! Each term prints as `c*x3^k*x1^a*x2^b`: the `x3`-part first, so that
//! reading the text back as a product reproduces the stored normal form.

use std::fmt;

use super::{generator_name, GradedElement};
use crate::scalars::{join_terms, product_term};

fn power(name: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.arity();
        let mut terms = Vec::new();
        for (beta, poly) in self.graded() {
            for (e, c) in poly.terms.iter().rev() {
                let mut factors = Vec::new();
                for (slot, &k) in e.iter().enumerate() {
                    factors.extend(power(&generator_name(n, slot, 3), k as i64));
                }
                for slot in 0..n {
                    factors.extend(power(&generator_name(n, slot, 1), beta[2 * slot]));
                    factors.extend(power(&generator_name(n, slot, 2), beta[2 * slot + 1]));
                }
                terms.push(product_term(&c.to_string(), &factors.join("*")));
            }
        }
        write!(f, "{}", join_terms(&terms))
    }
}
