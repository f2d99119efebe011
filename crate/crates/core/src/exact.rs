//! Exact strictly positive reals of the form ∏ pᵉ with rational exponents.
//!
//! Products, quotients and k-th roots stay inside the representation, so the
//! geometric means needed to trivialize crossed homomorphisms are exact and
//! equality is decidable.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exponent = Ratio<i64>;

/// A strictly positive real ∏ pᵉᵖ. Primes are strictly increasing and no
/// zero exponent is stored, so the empty product is the number 1 and the
/// representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ExactPositive {
    factors: Vec<(u64, Exponent)>,
}

impl ExactPositive {
    pub fn one() -> Self {
        ExactPositive::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `prime^exponent`; `prime` must be prime.
    pub fn prime_power(prime: u64, exponent: Exponent) -> Self {
        debug_assert!(is_prime(prime));
        if exponent.is_zero() {
            return Self::one();
        }
        ExactPositive {
            factors: vec![(prime, exponent)],
        }
    }

    /// The positive integer `n` (factored).
    pub fn from_integer(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPositive("0".into()));
        }
        let factors = factorize(n)
            .into_iter()
            .map(|(p, e)| (p, Exponent::from_integer(e as i64)))
            .collect();
        Ok(ExactPositive { factors })
    }

    /// The positive rational `num / den`.
    pub fn from_ratio(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidPositive(format!("{num}/{den}")));
        }
        Ok(Self::from_integer(num)?.div(&Self::from_integer(den)?))
    }

    pub fn factors(&self) -> &[(u64, Exponent)] {
        &self.factors
    }

    pub fn exponent_of(&self, prime: u64) -> Exponent {
        self.factors
            .iter()
            .find(|(p, _)| *p == prime)
            .map(|(_, e)| *e)
            .unwrap_or_else(Exponent::zero)
    }

    fn merge(&self, other: &Self, sign: i64) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let a = self.factors.get(i);
            let b = other.factors.get(j);
            match (a, b) {
                (Some(&(p, e)), Some(&(q, _))) if p < q => {
                    out.push((p, e));
                    i += 1;
                }
                (Some(&(p, e)), Some(&(q, f))) if p == q => {
                    let s = e + f * sign;
                    if !s.is_zero() {
                        out.push((p, s));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(&(p, e)), None) => {
                    out.push((p, e));
                    i += 1;
                }
                (_, Some(&(q, f))) => {
                    out.push((q, f * sign));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        ExactPositive { factors: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, 1)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.merge(other, -1)
    }

    pub fn inv(&self) -> Self {
        ExactPositive {
            factors: self.factors.iter().map(|&(p, e)| (p, -e)).collect(),
        }
    }

    pub fn pow(&self, exponent: Exponent) -> Self {
        if exponent.is_zero() {
            return Self::one();
        }
        ExactPositive {
            factors: self.factors.iter().map(|&(p, e)| (p, e * exponent)).collect(),
        }
    }

    /// The positive k-th root; always exact.
    pub fn root(&self, k: u32) -> Self {
        assert!(k > 0, "zeroth root");
        self.pow(Exponent::new(1, k as i64))
    }

    /// Geometric mean of a nonempty collection.
    pub fn geometric_mean<'a>(values: impl IntoIterator<Item = &'a ExactPositive>) -> Self {
        let mut product = Self::one();
        let mut count = 0u32;
        for v in values {
            product = product.mul(v);
            count += 1;
        }
        assert!(count > 0, "geometric mean of an empty collection");
        product.root(count)
    }

    /// True iff all exponents are integers, i.e. the value is rational.
    pub fn is_rational(&self) -> bool {
        self.factors.iter().all(|(_, e)| e.is_integer())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_rational() {
            return None;
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for &(p, e) in &self.factors {
            let k = e.to_integer();
            let power = num_traits::pow(BigInt::from(p), k.unsigned_abs() as usize);
            if k > 0 {
                num *= power;
            } else {
                den *= power;
            }
        }
        Some(BigRational::new(num, den))
    }

    /// Splits into `(r, x)` with `self = r·x`, `r` rational (integer
    /// exponents) and every exponent of `x` in `[0, 1)`.
    pub fn split_rational(&self) -> (ExactPositive, ExactPositive) {
        let mut rational = Vec::new();
        let mut radical = Vec::new();
        for &(p, e) in &self.factors {
            let whole = e.floor();
            let frac = e - whole;
            if !whole.is_zero() {
                rational.push((p, whole));
            }
            if !frac.is_zero() {
                radical.push((p, frac));
            }
        }
        (
            ExactPositive { factors: rational },
            ExactPositive { factors: radical },
        )
    }

    pub fn ln(&self) -> f64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as f64).ln() * (*e.numer() as f64 / *e.denom() as f64))
            .sum()
    }

    pub fn to_f64(&self) -> f64 {
        self.ln().exp()
    }
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

fn fmt_exponent(e: &Exponent) -> String {
    if e.is_integer() {
        if e.is_negative() {
            format!("({})", e.numer())
        } else {
            e.numer().to_string()
        }
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}

/// Renders as `2^(1/2)*3^(-1)`; the number one renders as `1`.
impl fmt::Display for ExactPositive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExactPositive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_exponent(s: &str) -> Option<Exponent> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let den: i64 = b.trim().parse().ok()?;
            (den != 0).then_some(())?;
            Some(Exponent::new(a.trim().parse().ok()?, den))
        }
        None => Some(Exponent::from_integer(s.parse().ok()?)),
    }
}

fn parse_positive_ratio(s: &str) -> Option<ExactPositive> {
    let s = s.trim();
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let num: u64 = a.trim().parse().ok()?;
    let den: u64 = b.trim().parse().ok()?;
    ExactPositive::from_ratio(num, den).ok()
}

/// Accepts positive rationals (`"3"`, `"1/2"`) and products of powers
/// (`"2^(1/2)*3^(-1)"`, `"6^2 * 5/7"`). Zero and negatives are rejected.
impl FromStr for ExactPositive {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPositive(s.to_string());
        if s.trim().is_empty() {
            return Err(bad());
        }
        let mut value = ExactPositive::one();
        for factor in s.split('*') {
            let term = match factor.split_once('^') {
                Some((base, exp)) => {
                    let base = parse_positive_ratio(base).ok_or_else(bad)?;
                    base.pow(parse_exponent(exp).ok_or_else(bad)?)
                }
                None => parse_positive_ratio(factor).ok_or_else(bad)?,
            };
            value = value.mul(&term);
        }
        Ok(value)
    }
}

impl TryFrom<String> for ExactPositive {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ExactPositive> for String {
    fn from(x: ExactPositive) -> Self {
        x.to_string()
    }
}

/// Rounds to a short decimal for display next to the exact form.
pub fn approx_string(x: &ExactPositive) -> String {
    let v = x.to_f64();
    let s = format!("{v:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

impl ExactPositive {
    /// Exact rational value as (numerator, denominator) when it fits in i128.
    pub fn to_i128_ratio(&self) -> Option<(i128, i128)> {
        let r = self.to_rational()?;
        Some((r.numer().to_i128()?, r.denom().to_i128()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ep(s: &str) -> ExactPositive {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_canonical_form() {
        assert_eq!(ep("1/2"), ExactPositive::prime_power(2, Exponent::from_integer(-1)));
        assert_eq!(ep("12/18"), ep("2/3"));
        assert_eq!(ep("4^(1/2)"), ep("2"));
        assert!(ep("1").is_one());
        assert!(ep("7/7").is_one());
        assert_eq!(ep("2^(1/2)*3^(-1)").to_string(), "2^(1/2)*3^(-1)");
        assert_eq!(ep("12").to_string(), "2^2*3");
    }

    #[test]
    fn rejects_zero_and_negative() {
        assert!("0".parse::<ExactPositive>().is_err());
        assert!("-2".parse::<ExactPositive>().is_err());
        assert!("1/0".parse::<ExactPositive>().is_err());
        assert!("".parse::<ExactPositive>().is_err());
        assert!("abc".parse::<ExactPositive>().is_err());
    }

    #[test]
    fn rational_conversion() {
        let x = ep("3/8");
        assert_eq!(x.to_i128_ratio(), Some((3, 8)));
        assert!(ep("2^(1/2)").to_rational().is_none());
        assert!((ep("2^(1/2)").to_f64() - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(approx_string(&ep("1/4")), "0.25");
    }

    #[test]
    fn geometric_mean_of_cocycle_values() {
        // (1 * 2)^(1/2) and (1 * 1/2)^(1/2)
        let a = ExactPositive::geometric_mean([&ep("1"), &ep("2")]);
        let b = ExactPositive::geometric_mean([&ep("1"), &ep("1/2")]);
        assert_eq!(a, ep("2^(1/2)"));
        assert_eq!(b, ep("2^(-1/2)"));
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_prime(97));
        assert!(!is_prime(91));
    }

    fn arb_positive() -> impl Strategy<Value = ExactPositive> {
        prop::collection::vec((prop::sample::select(vec![2u64, 3, 5, 7]), -6i64..=6, 1i64..=4), 0..4)
            .prop_map(|terms| {
                terms.into_iter().fold(ExactPositive::one(), |acc, (p, a, b)| {
                    acc.mul(&ExactPositive::prime_power(p, Exponent::new(a, b)))
                })
            })
    }

    proptest! {
        #[test]
        fn group_laws(x in arb_positive(), y in arb_positive(), z in arb_positive()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert!(x.mul(&x.inv()).is_one());
            prop_assert_eq!(x.div(&y).mul(&y), x.clone());
        }

        #[test]
        fn roots_are_exact(x in arb_positive(), k in 1u32..7) {
            prop_assert_eq!(x.pow(Exponent::from_integer(k as i64)).root(k), x.clone());
            prop_assert_eq!(x.root(k).pow(Exponent::from_integer(k as i64)), x.clone());
        }

        #[test]
        fn display_parses_back(x in arb_positive()) {
            prop_assert_eq!(x.to_string().parse::<ExactPositive>().unwrap(), x);
        }

        #[test]
        fn log_is_additive(x in arb_positive(), y in arb_positive()) {
            prop_assert!((x.mul(&y).ln() - x.ln() - y.ln()).abs() < 1e-9);
        }
    }
}
