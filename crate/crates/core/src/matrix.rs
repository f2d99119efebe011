//! Dense exact matrices over ℚ-linear combinations of [`ExactPositive`]
//! values.
//!
//! Distinct products of rational prime powers are linearly independent over
//! ℚ, so a formal sum `Σ cᵢ·xᵢ` with distinct `xᵢ` is zero iff every `cᵢ` is
//! zero. That makes matrix equality decidable without floating point. This is
//! the generic route used to cross-check the semidirect product law and the
//! covariance of band projections.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::ExactPositive;

/// A finite sum `Σ cᵢ·xᵢ` with rational `cᵢ ≠ 0` and distinct `xᵢ`, each
/// `xᵢ` having all exponents in `[0, 1)` so the form is canonical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RadicalSum {
    terms: BTreeMap<ExactPositive, BigRational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        RadicalSum::default()
    }

    pub fn one() -> Self {
        Self::from(ExactPositive::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rational(q: BigRational) -> Self {
        let mut s = RadicalSum::zero();
        s.add_term(ExactPositive::one(), q);
        s
    }

    fn add_term(&mut self, x: ExactPositive, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let (rational, x) = x.split_rational();
        let c = c * rational.to_rational().expect("integral exponents");
        let entry = self.terms.entry(x).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (x, c) in &self.terms {
            for (y, d) in &other.terms {
                out.add_term(x.mul(y), c * d);
            }
        }
        out
    }

    /// `(x, c)` when the sum is the single term `c·x`.
    pub fn single_term(&self) -> Option<(&ExactPositive, &BigRational)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        let mut total = BigRational::zero();
        for (x, c) in &self.terms {
            total += x.to_rational()? * c;
        }
        Some(total)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(x, c)| x.to_f64() * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

impl From<ExactPositive> for RadicalSum {
    fn from(x: ExactPositive) -> Self {
        let mut s = RadicalSum::zero();
        s.add_term(x, BigRational::one());
        s
    }
}

impl fmt::Debug for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| {
                if x.is_one() {
                    c.to_string()
                } else if c.is_one() {
                    x.to_string()
                } else {
                    format!("{c}*{x}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<RadicalSum>,
}

impl DenseMatrix {
    pub fn zero(n: usize) -> Self {
        DenseMatrix {
            n,
            entries: vec![RadicalSum::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, RadicalSum::one());
        }
        m
    }

    /// Diagonal 0/1 matrix.
    pub fn diagonal_mask(mask: &[bool]) -> Self {
        let mut m = Self::zero(mask.len());
        for (i, &b) in mask.iter().enumerate() {
            if b {
                m.set(i, i, RadicalSum::one());
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &RadicalSum {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RadicalSum) {
        self.entries[row * self.n + col] = value;
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut out = DenseMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let sum = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> RadicalSum {
        (0..self.n).fold(RadicalSum::zero(), |acc, i| acc.add(self.get(i, i)))
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format!("{:?}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(s: &str) -> ExactPositive {
        s.parse().unwrap()
    }

    #[test]
    fn radical_sums_cancel_exactly() {
        let r2 = RadicalSum::from(ep("2^(1/2)"));
        let half = RadicalSum::from(ep("2^(-1/2)"));
        assert_eq!(r2.mul(&half), RadicalSum::one());
        let two = RadicalSum::rational(BigRational::from_integer(2.into()));
        assert_eq!(r2.mul(&r2), two);
        assert_eq!(r2.add(&r2).as_rational(), None);
        assert!((r2.add(&two).to_f64() - (2.0 + 2f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn identity_is_neutral() {
        let mut m = DenseMatrix::zero(2);
        m.set(0, 1, RadicalSum::from(ep("3/2")));
        m.set(1, 0, RadicalSum::from(ep("5^(1/3)")));
        assert_eq!(m.mul(&DenseMatrix::identity(2)), m);
        assert_eq!(DenseMatrix::identity(2).mul(&m), m);
        assert!(m.trace().is_zero());
    }
}
