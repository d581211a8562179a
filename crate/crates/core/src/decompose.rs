//! Boij–Söderberg decomposition.
//!
//! [`greedy_decompose`] peels pure diagrams off the top strand of a diagram
//! until nothing is left. The `pi_k` family indexes the pure diagrams that can
//! occur in the Betti diagram of a `k`-th secant variety of a curve embedded
//! in `P^r`: each is obtained from `{0, ..., r+1}` by removing `{1, ..., k+1}`
//! together with one value `r+1-(i_j+j)` per entry of an index vector.

use std::collections::BTreeSet;
use std::fmt;

use num::{Signed, Zero};

use crate::diagram::{pure_diagram, BettiDiagram, DegreeSequence};
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// A weakly increasing vector `0 <= i_0 <= ... <= i_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVector(Vec<i64>);

impl IndexVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries[0] < 0 || entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidIndexVector(entries));
        }
        Ok(Self(entries))
    }

    /// `(2, ..., 2)` of length `k+1`.
    pub fn all_twos(k: u32) -> Self {
        Self(vec![2; k as usize + 1])
    }

    /// `(1, 2, ..., 2)` of length `k+1`.
    pub fn one_then_twos(k: u32) -> Self {
        let mut v = vec![2; k as usize + 1];
        v[0] = 1;
        Self(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The `k` this vector belongs to (its length minus one).
    pub fn k(&self) -> u32 {
        (self.0.len() - 1) as u32
    }

    /// Length `k+1` and top entry at most 2.
    pub fn is_admissible(&self, k: u32) -> bool {
        self.0.len() == k as usize + 1 && self.0.last().is_some_and(|&top| top <= 2)
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The degree sequence of `pi_k(i; d)` with `r = d - 2`.
pub fn pi_k_sequence(i: &IndexVector, k: u32, d: i64) -> Result<DegreeSequence> {
    let r = d - 2;
    if r < 2 * k as i64 + 3 {
        return Err(Error::InvalidParams { k, r });
    }
    if i.k() != k {
        return Err(Error::NotAdmissible {
            index: i.entries().to_vec(),
            k,
        });
    }
    let overlap = || Error::Overlap {
        index: i.entries().to_vec(),
        k,
        r,
    };

    let low: BTreeSet<i64> = (1..=k as i64 + 1).collect();
    let mut high = BTreeSet::new();
    for (j, &ij) in i.entries().iter().enumerate() {
        let removed = r + 1 - (ij + j as i64);
        if !(1..=r + 1).contains(&removed) || low.contains(&removed) || !high.insert(removed) {
            return Err(overlap());
        }
    }
    let remaining: Vec<i64> = (0..=r + 1)
        .filter(|x| !low.contains(x) && !high.contains(x))
        .collect();
    DegreeSequence::new(remaining)
}

/// All weakly increasing `(i_0, ..., i_k)` with entries in `{0, 1, 2}`, lexicographic.
pub fn enumerate_admissible(k: u32) -> Vec<IndexVector> {
    let len = k as usize + 1;
    let mut out = Vec::new();
    // a weakly increasing vector over {0,1,2} is fixed by how many 0s and 1s it has
    for zeros in 0..=len {
        for ones in 0..=len - zeros {
            let mut v = vec![0; zeros];
            v.extend(std::iter::repeat_n(1, ones));
            v.extend(std::iter::repeat_n(2, len - zeros - ones));
            out.push(IndexVector(v));
        }
    }
    out.sort();
    out
}

/// A nonnegative combination `sum c_e * beta(e)` of pure diagrams.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    terms: Vec<(Rational, DegreeSequence)>,
}

impl Decomposition {
    /// Builds a decomposition, dropping zero terms. Negative coefficients are rejected.
    pub fn new(terms: Vec<(Rational, DegreeSequence)>) -> Result<Self> {
        if let Some((c, e)) = terms.iter().find(|(c, _)| c.is_negative()) {
            return Err(Error::NotInCone {
                reason: format!("negative coefficient {} on {e}", format_rational(c)),
                residual: BettiDiagram::new(),
            });
        }
        Ok(Self {
            terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect(),
        })
    }

    pub fn terms(&self) -> &[(Rational, DegreeSequence)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients. Every pure diagram has multiplicity one, so
    /// this is the multiplicity of the recomposed diagram.
    pub fn total(&self) -> Rational {
        self.terms.iter().map(|(c, _)| c).sum()
    }

    /// Coefficients rescaled to sum to one.
    pub fn normalized(&self) -> Vec<Rational> {
        let total = self.total();
        if total.is_zero() {
            return Vec::new();
        }
        self.terms.iter().map(|(c, _)| c / &total).collect()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((c, e), normalized) in self.terms.iter().zip(self.normalized()) {
            writeln!(
                f,
                "{} {} {}",
                format_rational(c),
                format_rational(&normalized),
                e
            )?;
        }
        Ok(())
    }
}

pub fn recompose(t: &Decomposition) -> Result<BettiDiagram> {
    t.terms.iter().try_fold(BettiDiagram::new(), |acc, (c, e)| {
        Ok(acc.add(&pure_diagram(e)?.scale(c)))
    })
}

/// Greedy elimination along the top strand.
///
/// Each step reads `e_p = p + min{q : b_{p,q} != 0}` off the residual, which
/// must be strictly increasing over the full column range `0..=pdim`, and
/// subtracts the largest multiple of `beta(e)` keeping every entry
/// nonnegative. Every pure diagram used has the projective dimension of the
/// input.
pub fn greedy_decompose(d: &BettiDiagram) -> Result<Decomposition> {
    let pdim = d.projective_dimension()?;
    let not_in_cone = |reason: String, residual: &BettiDiagram| Error::NotInCone {
        reason,
        residual: residual.clone(),
    };
    if !d.all_nonnegative() {
        return Err(not_in_cone("diagram has negative entries".into(), d));
    }
    if pdim == 0 {
        return Err(not_in_cone(
            "projective dimension 0 has no pure resolution shape".into(),
            d,
        ));
    }

    let mut residual = d.clone();
    let mut terms = Vec::new();
    while !residual.is_empty() {
        let mut strand = Vec::with_capacity(pdim + 1);
        for p in 0..=pdim {
            let Some(q) = residual.top_row(p) else {
                return Err(not_in_cone(format!("column {p} is empty"), &residual));
            };
            strand.push(p as i64 + q);
        }
        if residual.projective_dimension()? != pdim {
            return Err(not_in_cone(
                format!("entries beyond column {pdim}"),
                &residual,
            ));
        }
        let e = DegreeSequence::new(strand.clone()).map_err(|_| {
            not_in_cone(
                format!("top strand {strand:?} is not strictly increasing"),
                &residual,
            )
        })?;
        let pure = pure_diagram(&e)?;
        let coefficient = pure
            .iter()
            .map(|(p, q, v)| residual.entry(p, q) / v)
            .min()
            .expect("pure diagram is nonempty");
        residual = residual.sub(&pure.scale(&coefficient));
        terms.push((coefficient, e));
    }
    Decomposition::new(terms)
}
