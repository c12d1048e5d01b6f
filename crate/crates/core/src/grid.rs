//! The built-in instance grid: the smallest instance of every case.

use crate::presentation::{AlgebraParams, CaseTag};
use crate::scalars::{Field, FieldSpec, MuMode, QMode};

fn build(p: u64, q: QMode, mu: MuMode, alpha: u8) -> AlgebraParams {
    let field = Field::new(FieldSpec { characteristic: p, q_mode: q, mu_mode: mu }).expect("grid field is valid");
    AlgebraParams::new(field, alpha).expect("grid instance is valid")
}

fn root(n: u32) -> QMode {
    QMode::RootOfUnity { n, modulus: None }
}

fn rat(num: i64, den: i64) -> MuMode {
    MuMode::RationalValue { num, den }
}

/// The grid instance of a case.
pub fn instance(tag: CaseTag) -> AlgebraParams {
    use CaseTag::*;
    match tag {
        C1 => build(0, QMode::Transcendental, rat(0, 1), 1),
        C2 => build(3, QMode::Transcendental, MuMode::PrimeFieldValue(1), 1),
        C3 => build(2, QMode::Transcendental, MuMode::Transcendental, 1),
        C4 => build(0, root(2), rat(0, 1), 1),
        C5 => build(0, root(2), rat(1, 1), 0),
        C6 => build(0, root(2), rat(-1, 2), 1),
        C7a => build(0, root(2), rat(1, 1), 1),
        C7b => build(0, root(2), MuMode::Transcendental, 1),
        C8 => build(3, root(2), MuMode::PrimeFieldValue(0), 1),
        C9 => build(3, root(2), MuMode::PrimeFieldValue(1), 0),
        C10 => build(3, root(2), MuMode::Transcendental, 1),
        C11 => build(3, root(2), MuMode::PrimeFieldValue(1), 1),
    }
}

/// All twelve grid instances in case order.
pub fn all() -> Vec<(CaseTag, AlgebraParams)> {
    CaseTag::ALL.iter().map(|&t| (t, instance(t))).collect()
}

/// Default oracle degree bound for a case: 4 where the `x3`-index set has
/// `p^2` elements, 6 otherwise.
pub fn default_degree(tag: CaseTag) -> usize {
    match tag {
        CaseTag::C3 | CaseTag::C10 => 4,
        _ => 6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::classify_case;

    #[test]
    fn every_grid_instance_has_its_tag() {
        for (tag, p) in all() {
            assert_eq!(classify_case(&p).unwrap().tag, tag);
        }
    }
}
