//! Validated algebra instances, their configuration documents, and the
//! twelve-way case classification.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{BaseElem, Field, FieldElem, FieldSpec, MuClass, MuMode, QMode, QOrder, Scalar};

/// Parameters of one tensor factor: `q_i = q^{q_power}`, `alpha_i`, `mu_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub q_power: i64,
    pub alpha: u8,
    pub q: Scalar,
    pub mu: Scalar,
    pub alpha_scalar: Scalar,
}

/// A validated instance: the field plus one or more factors.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraParams {
    field: Field,
    factors: Arc<Vec<Factor>>,
}

fn check_factor(field: &Field, q_power: i64, alpha: u8, mu: &Scalar) -> Result<()> {
    if alpha > 1 {
        return Err(Error::InvalidParams(format!("alpha must be 0 or 1, got {alpha}")));
    }
    if alpha == 0 && !mu.is_one() {
        return Err(Error::InvalidParams(format!("alpha = 0 requires mu = 1, got mu = {mu}")));
    }
    if alpha == 1 && (mu + &field.one()).is_zero() {
        return Err(Error::InvalidParams("alpha + mu = 0 (mu = -1 with alpha = 1) is not in the family".into()));
    }
    let q = field.q_pow(q_power);
    if q.is_one() {
        return Err(Error::InvalidParams(format!("q^{q_power} = 1 is excluded")));
    }
    Ok(())
}

impl AlgebraParams {
    /// The single-factor algebra `A(q, alpha, mu)` with `q`, `mu` taken from the field.
    pub fn new(field: Field, alpha: u8) -> Result<Self> {
        let mu = field.mu();
        Self::tensor(field.clone(), vec![(1, alpha, mu)])
    }

    /// Tensor product of factors given as `(q_power, alpha, mu)`.
    pub fn tensor(field: Field, factors: Vec<(i64, u8, Scalar)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParams("at least one factor is required".into()));
        }
        let mut out = Vec::with_capacity(factors.len());
        for (e, alpha, mu) in factors {
            check_factor(&field, e, alpha, &mu)?;
            out.push(Factor {
                q_power: e,
                alpha,
                q: field.q_pow(e),
                mu,
                alpha_scalar: field.int(alpha as i64),
            });
        }
        Ok(AlgebraParams { field, factors: Arc::new(out) })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &Factor {
        &self.factors[i]
    }

    pub fn q(&self) -> &Scalar {
        &self.factors[0].q
    }

    pub fn alpha(&self) -> &Scalar {
        &self.factors[0].alpha_scalar
    }

    pub fn mu(&self) -> &Scalar {
        &self.factors[0].mu
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    /// The single-factor algebra of slot `i`.
    pub fn single_factor(&self, i: usize) -> AlgebraParams {
        AlgebraParams { field: self.field.clone(), factors: Arc::new(vec![self.factors[i].clone()]) }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        raw.build()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7a,
    C7b,
    C8,
    C9,
    C10,
    C11,
}

impl CaseTag {
    pub const ALL: [CaseTag; 12] = [
        CaseTag::C1,
        CaseTag::C2,
        CaseTag::C3,
        CaseTag::C4,
        CaseTag::C5,
        CaseTag::C6,
        CaseTag::C7a,
        CaseTag::C7b,
        CaseTag::C8,
        CaseTag::C9,
        CaseTag::C10,
        CaseTag::C11,
    ];

    pub fn q_has_finite_order(self) -> bool {
        !matches!(self, CaseTag::C1 | CaseTag::C2 | CaseTag::C3)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Numerical data attached to a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseData {
    pub p: u64,
    pub n: Option<u32>,
    pub mu1: Option<u64>,
    pub mu2: Option<u64>,
    /// `xi_i` for `i = 1..p-1` (case C11 only).
    pub xi: Vec<u64>,
}

/// Classification record as printed by tools.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub tag: CaseTag,
    #[serde(flatten)]
    pub data: CaseData,
}

pub(crate) fn require_single(params: &AlgebraParams) -> Result<()> {
    if params.arity() != 1 {
        return Err(Error::NotApplicable(format!(
            "operation needs a single factor, instance has {}",
            params.arity()
        )));
    }
    Ok(())
}

/// Multiplicative order of `q_i = q^{q_power}`.
pub(crate) fn factor_q_order(field: &Field, fac: &Factor) -> QOrder {
    match field.q_order() {
        QOrder::Infinite => QOrder::Infinite,
        QOrder::Finite(n) => QOrder::Finite(n / (n as i64).gcd(&fac.q_power).unsigned_abs() as u32),
    }
}

/// Arithmetic nature of `mu_i`: the field's `mu`, or a literal of the prime field.
pub(crate) fn factor_mu_class(field: &Field, fac: &Factor) -> Result<MuClass> {
    if fac.mu == field.mu() {
        return Ok(field.mu_classify());
    }
    match fac.mu.as_base() {
        Some(BaseElem::Q(r)) => Ok(MuClass::InQ(r)),
        Some(BaseElem::Fp { v, .. }) => Ok(MuClass::InPrimeField(v)),
        None => Err(Error::NotApplicable(format!("mu = {} is neither the field's mu nor a prime-field literal", fac.mu))),
    }
}

/// Places a single-factor instance in the case partition.
pub fn classify_case(params: &AlgebraParams) -> Result<Classification> {
    require_single(params)?;
    let field = params.field();
    let p = field.characteristic();
    let fac = params.factor(0);
    let alpha = fac.alpha;
    let order = factor_q_order(field, fac);
    let mu = factor_mu_class(field, fac)?;
    let n = match order {
        QOrder::Infinite => None,
        QOrder::Finite(n) => Some(n),
    };
    let mut data = CaseData { p, n, mu1: None, mu2: None, xi: Vec::new() };
    let tag = match (order, p) {
        (QOrder::Infinite, 0) => CaseTag::C1,
        (QOrder::Infinite, _) => match mu {
            MuClass::Transcendental => CaseTag::C3,
            _ => CaseTag::C2,
        },
        (QOrder::Finite(_), 0) => {
            if alpha == 0 {
                CaseTag::C5
            } else {
                match mu {
                    MuClass::Transcendental => CaseTag::C7b,
                    MuClass::InQ(r) if r.is_zero() => CaseTag::C4,
                    MuClass::InQ(r) => {
                        data.mu1 = r.numer().abs().to_u64();
                        data.mu2 = r.denom().to_u64();
                        if r.is_negative() {
                            CaseTag::C6
                        } else {
                            CaseTag::C7a
                        }
                    }
                    MuClass::InPrimeField(_) => unreachable!("validated field has p = 0"),
                }
            }
        }
        (QOrder::Finite(_), _) => {
            if alpha == 0 {
                CaseTag::C9
            } else {
                match mu {
                    MuClass::Transcendental => CaseTag::C10,
                    MuClass::InPrimeField(0) => CaseTag::C8,
                    MuClass::InPrimeField(m) => {
                        data.xi = (1..p).map(|i| (p - (i * m) % p) % p).collect();
                        CaseTag::C11
                    }
                    MuClass::InQ(_) => unreachable!("validated field has p > 0"),
                }
            }
        }
    };
    Ok(Classification { tag, data })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// `mu = sign * mu1 / mu2` in lowest terms, for rational `mu` with `q` of finite order.
pub fn mu_fraction(params: &AlgebraParams) -> Result<(Sign, u64, u64)> {
    require_single(params)?;
    let field = params.field();
    if field.characteristic() != 0 || field.q_order() == QOrder::Infinite {
        return Err(Error::NotApplicable("mu fraction needs p = 0 and q of finite order".into()));
    }
    match factor_mu_class(field, params.factor(0))? {
        MuClass::InQ(r) if !r.is_zero() => {
            let sign = if r.is_negative() { Sign::Minus } else { Sign::Plus };
            let a = r.numer().abs().to_u64().ok_or_else(|| Error::NotApplicable("numerator too large".into()))?;
            let b = r.denom().to_u64().ok_or_else(|| Error::NotApplicable("denominator too large".into()))?;
            Ok((sign, a, b))
        }
        _ => Err(Error::NotApplicable("mu is not a nonzero rational".into())),
    }
}

/// Scalar value written in a configuration document: an integer, a
/// fraction string such as `"-1/2"`, or a keyword.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RawValue {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum RawQ {
    Keyword(String),
    Root {
        root_of_unity: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<i64>>,
    },
}

#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RawFactor {
    #[serde(default = "one_i64")]
    pub q_power: i64,
    #[serde(default = "one_u8")]
    pub alpha: u8,
    pub mu: RawValue,
}

/// The configuration document. Example:
///
/// ```toml
/// characteristic = 3
/// q = { root_of_unity = 2 }
/// mu = 1
/// alpha = 1
/// ```
///
/// `q` may also be `"transcendental"`; `mu` may be an integer, a fraction
/// string, or `"transcendental"`. An optional `[[factors]]` array builds a
/// tensor product; each entry's `mu` is a literal or the keyword `"mu"`.
#[derive(Clone, Debug, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    #[serde(default)]
    pub characteristic: u64,
    pub q: RawQ,
    pub mu: RawValue,
    #[serde(default = "one_u8")]
    pub alpha: u8,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<RawFactor>,
}

fn one_i64() -> i64 {
    1
}

fn one_u8() -> u8 {
    1
}

fn parse_fraction(s: &str) -> Result<BigRational> {
    let bad = || Error::Config(format!("cannot read `{s}` as a rational number"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn raw_rational(v: &RawValue) -> Result<Option<BigRational>> {
    match v {
        RawValue::Int(i) => Ok(Some(BigRational::from_integer(BigInt::from(*i)))),
        RawValue::Text(t) if t == "transcendental" => Ok(None),
        RawValue::Text(t) => parse_fraction(t).map(Some),
    }
}

fn rational_mod_p(r: &BigRational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb);
    if d.is_zero() {
        return Err(Error::Config(format!("denominator of {r} vanishes modulo {p}")));
    }
    let n = r.numer().mod_floor(&pb);
    let inv = d.modpow(&(&pb - BigInt::from(2)), &pb);
    Ok(((n * inv) % &pb).to_u64().expect("residue fits"))
}

impl RawConfig {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        let p = self.characteristic;
        let q_mode = match &self.q {
            RawQ::Keyword(k) if k == "transcendental" => QMode::Transcendental,
            RawQ::Keyword(k) => return Err(Error::Config(format!("unknown q mode `{k}`"))),
            RawQ::Root { root_of_unity, modulus } => QMode::RootOfUnity { n: *root_of_unity, modulus: modulus.clone() },
        };
        let mu_mode = match raw_rational(&self.mu)? {
            None => MuMode::Transcendental,
            Some(r) if p == 0 => {
                let num = r.numer().to_i64().ok_or_else(|| Error::Config("mu numerator too large".into()))?;
                let den = r.denom().to_i64().ok_or_else(|| Error::Config("mu denominator too large".into()))?;
                MuMode::RationalValue { num, den }
            }
            Some(r) => MuMode::PrimeFieldValue(rational_mod_p(&r, p)?),
        };
        Ok(FieldSpec { characteristic: p, q_mode, mu_mode })
    }

    pub fn build(&self) -> Result<AlgebraParams> {
        let field = Field::new(self.field_spec()?)?;
        if self.factors.is_empty() {
            return AlgebraParams::new(field, self.alpha);
        }
        let mut fs = Vec::new();
        for f in &self.factors {
            let mu = match &f.mu {
                RawValue::Text(t) if t == "mu" => field.mu(),
                v => match raw_rational(v)? {
                    Some(r) => field.big_rational(&r)?,
                    None => return Err(Error::Config("factor mu must be a literal or \"mu\"".into())),
                },
            };
            fs.push((f.q_power, f.alpha, mu));
        }
        AlgebraParams::tensor(field, fs)
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        let q = match field.q_order() {
            QOrder::Infinite => "q transcendental".to_string(),
            QOrder::Finite(n) => format!("q of order {n}"),
        };
        write!(f, "p = {}, {q}", field.characteristic())?;
        for (i, fac) in self.factors.iter().enumerate() {
            let qi = if fac.q_power == 1 { "q".to_string() } else { format!("q^{}", fac.q_power) };
            if self.arity() == 1 {
                write!(f, ", alpha = {}, mu = {}", fac.alpha, fac.mu)?;
            } else {
                write!(f, "; factor {}: q{} = {qi}, alpha = {}, mu = {}", i + 1, i + 1, fac.alpha, fac.mu)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, q: QMode, mu: MuMode, alpha: u8) -> Result<AlgebraParams> {
        AlgebraParams::new(Field::new(FieldSpec { characteristic: p, q_mode: q, mu_mode: mu })?, alpha)
    }

    fn root(n: u32) -> QMode {
        QMode::RootOfUnity { n, modulus: None }
    }

    #[test]
    fn validation_examples() {
        assert!(params(0, QMode::Transcendental, MuMode::RationalValue { num: 0, den: 1 }, 1).is_ok());
        let e = params(0, QMode::Transcendental, MuMode::RationalValue { num: -1, den: 1 }, 1).unwrap_err();
        assert!(matches!(e, Error::InvalidParams(ref m) if m.contains("alpha + mu = 0")));
        assert!(params(0, QMode::Transcendental, MuMode::RationalValue { num: 1, den: 1 }, 0).is_ok());
        assert!(params(0, QMode::Transcendental, MuMode::RationalValue { num: 2, den: 1 }, 0).is_err());
        assert!(params(3, QMode::Transcendental, MuMode::PrimeFieldValue(2), 1).is_err());
    }

    #[test]
    fn classification_examples() {
        let c = classify_case(&params(0, QMode::Transcendental, MuMode::RationalValue { num: 0, den: 1 }, 1).unwrap()).unwrap();
        assert_eq!(c.tag, CaseTag::C1);
        let c = classify_case(&params(0, root(2), MuMode::RationalValue { num: -1, den: 2 }, 1).unwrap()).unwrap();
        assert_eq!(c.tag, CaseTag::C6);
        assert_eq!((c.data.mu1, c.data.mu2), (Some(1), Some(2)));
        let c = classify_case(&params(3, root(2), MuMode::PrimeFieldValue(1), 1).unwrap()).unwrap();
        assert_eq!(c.tag, CaseTag::C11);
        assert_eq!(c.data.xi, vec![2, 1]);
    }

    #[test]
    fn mu_fraction_examples() {
        let f = |num, den| params(0, root(2), MuMode::RationalValue { num, den }, 1).unwrap();
        assert_eq!(mu_fraction(&f(-1, 2)).unwrap(), (Sign::Minus, 1, 2));
        assert_eq!(mu_fraction(&f(3, 1)).unwrap(), (Sign::Plus, 3, 1));
        assert!(matches!(mu_fraction(&f(0, 1)), Err(Error::NotApplicable(_))));
        let raw: RawConfig = toml::from_str("q = { root_of_unity = 2 }\nmu = \"4/6\"").unwrap();
        assert_eq!(mu_fraction(&raw.build().unwrap()).unwrap(), (Sign::Plus, 2, 3));
    }

    #[test]
    fn config_round_trip() {
        let text = "characteristic = 3\nq = { root_of_unity = 2 }\nmu = 1\nalpha = 1\n";
        let raw: RawConfig = toml::from_str(text).unwrap();
        let p = raw.build().unwrap();
        assert_eq!(classify_case(&p).unwrap().tag, CaseTag::C11);
        let again: RawConfig = toml::from_str(&toml::to_string(&raw).unwrap()).unwrap();
        assert_eq!(again, raw);
        let bad = AlgebraParams::from_toml_str("q = \"transcendental\"\nmu = -1\n");
        assert!(matches!(bad, Err(Error::InvalidParams(_))));
    }

    #[test]
    fn tensor_factors_from_config() {
        let text = "q = { root_of_unity = 2 }\nmu = 0\n[[factors]]\nmu = 0\n[[factors]]\nq_power = 3\nalpha = 0\nmu = 1\n";
        let p = AlgebraParams::from_toml_str(text).unwrap();
        assert_eq!(p.arity(), 2);
        assert_eq!(p.factor(1).q, p.field().int(-1));
        assert!(classify_case(&p).is_err());
    }
}
