//! Exact Laurent polynomials in `q` with big-integer coefficients.
//!
//! Every matrix entry of the Fock space operators lives in `Z[q, q^-1]`, so
//! this is the only coefficient ring the crate needs. Values are kept in
//! canonical form: no stored coefficient is ever zero, which makes structural
//! equality the ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division in `Z[q, q^-1]`. Fails with [`Error::InexactDivision`]
    /// when the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (Some(d_lo), Some(d_hi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::InexactDivision);
        };
        let Some(lo) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let lead = &divisor.terms[&d_hi];
        let floor = lo - d_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            let exp = top - d_hi;
            if exp < floor {
                return Err(Error::InexactDivision);
            }
            let c = &rem.terms[&top];
            if !(c % lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let step = Self::monomial(c / lead, exp);
            rem -= &(&step * divisor);
            quot += &step;
        }
        Ok(quot)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `q^2 - q^-2`, `2q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match *e {
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

// Wire format: {"<exp>": <coeff>, ...}. Coefficients that fit in an i64 are
// written as JSON numbers, larger ones as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in self.terms.iter().rev() {
            match i64::try_from(c) {
                Ok(small) => map.serialize_entry(&e.to_string(), &small)?,
                Err(_) => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }

        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from decimal exponents to integer coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((key, value)) = access.next_entry::<String, Coeff>()? {
                    let exp: i64 = key
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent {key:?}")))?;
                    let coeff = match value {
                        Coeff::Int(c) => BigInt::from(c),
                        Coeff::Text(s) => s
                            .trim()
                            .parse()
                            .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?,
                    };
                    p.add_term(exp, coeff);
                }
                Ok(p)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

/// `[m]_{q^s} = (q^{sm} - q^{-sm}) / (q^s - q^{-s})`, expanded as the
/// palindromic sum `q^{s(m-1)} + q^{s(m-3)} + ... + q^{-s(m-1)}`.
pub fn quantum_integer(m: i64, s: i64) -> LaurentPoly {
    if m < 0 {
        return -quantum_integer(-m, s);
    }
    LaurentPoly::from_terms((0..m).map(|t| (s * (m - 1 - 2 * t), 1)))
}

pub fn quantum_factorial(m: u32, s: i64) -> LaurentPoly {
    (1..=i64::from(m)).fold(LaurentPoly::one(), |acc, j| &acc * &quantum_integer(j, s))
}

/// Gaussian binomial `[m choose r]_{q^s}`, computed as an exact quotient of
/// quantum factorials.
pub fn quantum_binomial(m: u32, r: u32, s: i64) -> Result<LaurentPoly> {
    if r > m {
        return Err(Error::Domain(format!("quantum binomial [{m} choose {r}] needs r <= m")));
    }
    let denom = &quantum_factorial(r, s) * &quantum_factorial(m - r, s);
    quantum_factorial(m, s).div_exact(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_pow(e)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&q(1) + &q(-1), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        let prod = &(&q(1) + &q(-1)) * &(&q(1) - &q(-1));
        assert_eq!(prod, LaurentPoly::from_terms([(2, 1), (-2, -1)]));
        let z = &q(1) + &(-q(1));
        assert!(z.is_zero());
        assert_eq!(z.terms().count(), 0);
    }

    #[test]
    fn quantum_integer_examples() {
        assert_eq!(quantum_integer(2, 1), &q(1) + &q(-1));
        assert_eq!(quantum_integer(2, 2), &q(2) + &q(-2));
        assert_eq!(quantum_integer(0, 1), LaurentPoly::zero());
        assert_eq!(quantum_integer(1, 2), LaurentPoly::one());
        assert_eq!(quantum_integer(-2, 1), -(&q(1) + &q(-1)));
        let three_two = &quantum_integer(3, 1) * &quantum_integer(2, 1);
        let expect = &LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)]) * &(&q(1) + &q(-1));
        assert_eq!(three_two, expect);
    }

    #[test]
    fn quantum_binomial_examples() {
        for s in [1, 2] {
            for m in 0..5 {
                assert!(quantum_binomial(m, 0, s).unwrap().is_one());
            }
        }
        assert_eq!(quantum_binomial(2, 1, 1).unwrap(), &q(1) + &q(-1));
        assert_eq!(
            quantum_binomial(3, 1, 1).unwrap(),
            LaurentPoly::from_terms([(2, 1), (0, 1), (-2, 1)])
        );
        assert!(matches!(quantum_binomial(1, 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn division_reports_inexact() {
        let num = &q(1) + &LaurentPoly::one();
        let den = &q(1) - &LaurentPoly::one();
        assert!(matches!(num.div_exact(&den), Err(Error::InexactDivision)));
        assert!(matches!(num.div_exact(&LaurentPoly::zero()), Err(Error::InexactDivision)));
        assert!(LaurentPoly::from(2).div_exact(&LaurentPoly::from(3)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!((&q(2) - &q(-2)).to_string(), "q^2 - q^-2");
        assert_eq!(LaurentPoly::from_terms([(1, 2), (0, -1)]).to_string(), "2q - 1");
        assert_eq!((-q(-1)).to_string(), "-q^-1");
    }

    #[test]
    fn json_wire_format() {
        let p = &q(1) + &q(-1);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v, serde_json::json!({"1": 1, "-1": 1}));
        let back: LaurentPoly = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);

        let big = LaurentPoly::monomial(BigInt::from(i64::MAX) * 4, 3);
        let text = serde_json::to_string(&big).unwrap();
        assert!(text.contains('"'));
        assert_eq!(serde_json::from_str::<LaurentPoly>(&text).unwrap(), big);

        assert!(serde_json::from_str::<LaurentPoly>(r#"{"x": 1}"#).is_err());
    }
}
