//! Betti diagrams and pure diagrams.
//!
//! A [`BettiDiagram`] is a sparse table of exact rationals indexed by
//! `(column p, row q)`; the entry at `(p, q)` counts generators of degree
//! `p + q` in the `p`-th step of a resolution. Zero entries are never stored,
//! so two diagrams are equal exactly when their maps are equal.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, format_rational, Rational};

/// A strictly increasing degree sequence `e_0 < e_1 < ... < e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<i64>);

impl DegreeSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(entries));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The length `n` of the resolution shape (one less than the number of entries).
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    pub fn shifted(&self, c: i64) -> Self {
        Self(self.0.iter().map(|e| e + c).collect())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, e) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiDiagram {
    entries: BTreeMap<(usize, i64), Rational>,
}

impl BettiDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a diagram from `(p, q, value)` triples, summing repeated cells.
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut d = Self::new();
        for (p, q, v) in entries {
            d.add_to(p, q, &v);
        }
        d
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// The value at `(p, q)`, exact zero outside the support.
    pub fn entry(&self, p: usize, q: i64) -> Rational {
        self.entries
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn get(&self, p: usize, q: i64) -> Option<&Rational> {
        self.entries.get(&(p, q))
    }

    /// Nonzero entries in `(p, q)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, &Rational)> + '_ {
        self.entries.iter().map(|(&(p, q), v)| (p, q, v))
    }

    /// Largest column holding a nonzero entry.
    pub fn projective_dimension(&self) -> Result<usize> {
        self.entries
            .keys()
            .map(|&(p, _)| p)
            .max()
            .ok_or(Error::EmptyDiagram)
    }

    pub fn row_range(&self) -> Option<(i64, i64)> {
        let min = self.entries.keys().map(|&(_, q)| q).min()?;
        let max = self.entries.keys().map(|&(_, q)| q).max()?;
        Some((min, max))
    }

    /// Columns with a nonzero entry in row `q`, ascending.
    pub fn row_support(&self, q: i64) -> Vec<usize> {
        self.entries
            .keys()
            .filter(|&&(_, row)| row == q)
            .map(|&(p, _)| p)
            .collect()
    }

    /// Smallest row with a nonzero entry in column `p`.
    pub fn top_row(&self, p: usize) -> Option<i64> {
        self.entries
            .range((p, i64::MIN)..=(p, i64::MAX))
            .next()
            .map(|(&(_, q), _)| q)
    }

    pub fn column_sum(&self, p: usize) -> Rational {
        self.entries
            .range((p, i64::MIN)..=(p, i64::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    pub fn add_to(&mut self, p: usize, q: i64, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((p, q)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(p, q));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, q, v) in other.iter() {
            out.add_to(p, q, v);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, q, v) in other.iter() {
            out.add_to(p, q, &-v);
        }
        out
    }

    pub fn all_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    pub fn all_integral(&self) -> bool {
        self.entries.values().all(|v| v.is_integer())
    }
}

/// Writes the diagram as `{(p,q)=v, ...}`.
impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (j, (p, q, v)) in self.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({p},{q})={}", format_rational(v))?;
        }
        write!(f, "}}")
    }
}

/// The pure diagram of `e`: column `p` carries `n! * prod_{i != p} 1/|e_i - e_p|`
/// at row `e_p - p`, and nothing else.
pub fn pure_diagram(e: &DegreeSequence) -> Result<BettiDiagram> {
    let seq = e.entries();
    if seq.len() < 2 {
        return Err(Error::SequenceTooShort(seq.to_vec()));
    }
    let n = e.length() as i64;
    let n_fact = factorial(n);
    let entries = seq.iter().enumerate().map(|(p, &ep)| {
        let denom = seq
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != p)
            .fold(BigInt::from(1), |acc, (_, &ei)| acc * (ei - ep).abs());
        (p, ep - p as i64, Rational::new(n_fact.clone(), denom))
    });
    Ok(BettiDiagram::from_entries(entries))
}
