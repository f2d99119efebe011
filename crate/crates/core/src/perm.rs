//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Composition follows the functional convention: `a.compose(&b)` applies `b`
//! first, then `a`. Cycle strings are 1-based on the outside (`"(1 2)(3 4)"`)
//! and converted to 0-based indices at the boundary.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`; `images[i]` is the image of `i`.
///
/// The derived ordering is lexicographic on the image array, which is the
/// canonical element order used by [`crate::group::PermGroup`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation { images });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree || touched[x] {
                    return Err(Error::InvalidPermutation {
                        images: cycle.clone(),
                    });
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    /// Parses 1-based cycle notation such as `"(1 2)(3 4)"`, `"(1,3)(2,4)"` or
    /// `"(12)(34)"` (digit runs are split only when `degree <= 9`). `"()"`,
    /// `"e"` and `"id"` denote the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "e" || text == "id" || text == "()" {
            return Ok(Permutation::identity(degree));
        }
        let bad = || Error::InvalidPermutation { images: Vec::new() };
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();

            let mut points = Vec::new();
            for token in body.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                if token.len() > 1 && degree <= 9 && !body.contains([' ', ',']) {
                    for c in token.chars() {
                        points.push(c.to_digit(10).ok_or_else(bad)? as usize);
                    }
                } else {
                    points.push(token.parse::<usize>().map_err(|_| bad())?);
                }
            }
            if points.contains(&0) {
                return Err(bad());
            }
            if points.len() > 1 {
                cycles.push(points.into_iter().map(|p| p - 1).collect());
            }
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x)
            .count()
    }

    /// Nontrivial cycles, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The permutation acting on `points` shifted by `offset` inside a larger
    /// set of `degree` points; points outside the window are fixed.
    pub fn embed(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<usize> = (0..degree).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset + x;
        }
        Permutation { images }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// 1-based cycle notation.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
