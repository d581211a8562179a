//! Betti diagrams of secant varieties of genus-2 curves.
//!
//! For a curve of genus 2 embedded in `P^r` by a complete linear system of
//! degree `r + 2`, the `k`-th secant variety `Σ_k` (with `r >= 2k+3`) has a
//! Betti diagram that is `deg(Σ_k)` times a two-term convex combination of
//! the pure diagrams `pi_k((1,2,...,2); r+2)` and `pi_k((2,...,2); r+2)`.
//! This module assembles that diagram from the coefficient formulas and
//! checks it against the independent closed forms for the linear strand,
//! the corner values, the degree and the vanishing pattern.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;

use crate::decompose::{greedy_decompose, pi_k_sequence, IndexVector};
use crate::diagram::{pure_diagram, BettiDiagram};
use crate::error::{Error, Result};
use crate::hilbert::multiplicity;
use crate::rational::{binomial, factorial, format_rational, int, range_product, Rational};

/// Secant order `k` and ambient dimension `r`, with `r >= 2k+3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SecantParams {
    k: u32,
    r: i64,
}

impl SecantParams {
    pub const GENUS: i64 = 2;

    pub fn new(k: u32, r: i64) -> Result<Self> {
        if r < 2 * k as i64 + 3 {
            return Err(Error::InvalidParams { k, r });
        }
        Ok(Self { k, r })
    }

    /// From the degree of the embedding line bundle, `r = deg L - 2`.
    pub fn from_degree(k: u32, degree: i64) -> Result<Self> {
        Self::new(k, degree - Self::GENUS)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn degree_of_line_bundle(&self) -> i64 {
        self.r + Self::GENUS
    }

    fn ki(&self) -> i64 {
        self.k as i64
    }

    /// Last column of the diagram, `r - 2k - 1`.
    pub fn last_column(&self) -> i64 {
        self.r - 2 * self.ki() - 1
    }

    /// Last column of the row-`(k+1)` strand.
    pub fn strand_end(&self) -> i64 {
        if self.k == 0 {
            self.r - 2
        } else {
            self.r - 2 * self.ki() - 3
        }
    }
}

impl fmt::Display for SecantParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} r={}", self.k, self.r)
    }
}

/// `deg(Σ_k)` by the binomial expression (`r + 2` for the curve).
pub fn secant_degree(p: &SecantParams) -> Rational {
    let (k, r) = (p.ki(), p.r);
    if k == 0 {
        return int(r + 2);
    }
    let deg = binomial(r - k, k + 1) + 2 * binomial(r - k - 1, k) + binomial(r - k - 2, k - 1);
    Rational::from_integer(deg)
}

/// `deg(Σ_k)` by the product expression `(r^2+r-2k-2) prod_{j=r-2k}^{r-k-2} j / (k+1)!`.
///
/// Only meaningful for `k >= 1`; for the curve it returns `r + 2` as well.
pub fn secant_degree_product(p: &SecantParams) -> Rational {
    let (k, r) = (p.ki(), p.r);
    if k == 0 {
        return int(r + 2);
    }
    let numer = BigInt::from(r * r + r - 2 * k - 2) * range_product(r - 2 * k, r - k - 2);
    Rational::new(numer, factorial(k + 1))
}

/// The coefficient `c_{i;d}` of `pi_k(i; d)` in the normalized diagram.
pub fn coefficient(i: &IndexVector, p: &SecantParams) -> Result<Rational> {
    let (k, r) = (p.ki(), p.r);
    if !i.is_admissible(p.k) {
        return Err(Error::NotAdmissible {
            index: i.entries().to_vec(),
            k: p.k,
        });
    }
    let top = Rational::new(
        BigInt::from(r * r - 2 * k * r - r),
        BigInt::from(r * r + r - 2 * k - 2),
    );
    Ok(if *i == IndexVector::all_twos(p.k) {
        top
    } else if *i == IndexVector::one_then_twos(p.k) {
        Rational::one() - top
    } else {
        Rational::zero()
    })
}

/// `deg(Σ_k) * (c_(2..2) pi_k((2..2)) + c_(1,2..2) pi_k((1,2..2)))`.
pub fn assemble_betti(p: &SecantParams) -> Result<BettiDiagram> {
    let deg = secant_degree(p);
    let d = p.degree_of_line_bundle();
    [IndexVector::one_then_twos(p.k), IndexVector::all_twos(p.k)]
        .iter()
        .try_fold(BettiDiagram::new(), |acc, i| {
            let c = coefficient(i, p)? * &deg;
            let pure = pure_diagram(&pi_k_sequence(i, p.k, d)?)?;
            Ok(acc.add(&pure.scale(&c)))
        })
}

/// Closed form of `dim K_{i,k+1}` on the linear strand.
pub fn strand_value(i: i64, p: &SecantParams) -> Result<Rational> {
    let (k, r) = (p.ki(), p.r);
    let high = p.strand_end();
    if !(1..=high).contains(&i) {
        return Err(Error::OutOfRange { i, low: 1, high });
    }
    let big = BigInt::from;
    if k == 0 {
        let numer = factorial(r - 1) * big(r * r - i * r - 2 * i - 2);
        let denom = big(i + 1) * factorial(i - 1) * factorial(r - i);
        return Ok(Rational::new(numer, denom));
    }
    let bracket = r * r * r - (i + k + 1) * r * r - (i + k + 2) * r + 2 * (k + 1) * (i + k + 1);
    let numer = factorial(r - k - 2) * big(bracket);
    let denom = factorial(k + 1)
        * big(i + k + 1)
        * factorial(i - 1)
        * factorial(r - i - 2 * k - 3)
        * big(r - i - k - 2)
        * big(r - i - k - 1)
        * big(r - i - k);
    Ok(Rational::new(numer, denom))
}

/// Known values in the bottom-right corner, keyed by `(p, q)`.
pub fn anchor_values(p: &SecantParams) -> BTreeMap<(usize, i64), Rational> {
    let (k, r) = (p.ki(), p.r);
    let col = |c: i64| c as usize;
    BTreeMap::from([
        ((col(r - 2 * k - 1), 2 * k + 2), int(k + 2)),
        ((col(r - 2 * k - 2), 2 * k + 2), int(r - 2 * k - 1)),
        ((col(r - 2 * k - 2), 2 * k + 1), int(r - k - 2)),
        ((col(r - 2 * k - 1), 2 * k + 1), int(0)),
        ((0, 0), int(1)),
    ])
}

/// `(r - g - 2k, r - 1 - 2k)`: the columns where row `2k+2` is nonzero.
pub fn top_row_range(g: i64, k: u32, r: i64) -> (i64, i64) {
    let k = k as i64;
    (r - g - 2 * k, r - 1 - 2 * k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: Rational,
    pub computed: Rational,
    pub passed: bool,
}

impl Check {
    pub fn equal(name: impl Into<String>, expected: Rational, computed: Rational) -> Self {
        let passed = expected == computed;
        Self {
            name: name.into(),
            expected,
            computed,
            passed,
        }
    }

    /// A predicate recorded as a violation count that must be zero.
    pub fn violations(name: impl Into<String>, count: usize) -> Self {
        Self::equal(name, Rational::zero(), int(count as i64))
    }

    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self::equal(name, Rational::one(), int(ok as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: SecantParams,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(params: SecantParams) -> Self {
        Self {
            params,
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// All checks, one per line.
    pub fn detailed(&self) -> String {
        let mut out = format!("{self}\n");
        for c in &self.checks {
            out.push_str(&format!(
                "  {} {}: expected {}, computed {}\n",
                if c.passed { "ok  " } else { "FAIL" },
                c.name,
                format_rational(&c.expected),
                format_rational(&c.computed)
            ));
        }
        out
    }
}

/// One summary line, followed by any failing checks.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} ({}/{} checks passed)",
            self.params,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len() - failed,
            self.checks.len()
        )?;
        for c in self.failures() {
            write!(
                f,
                "\n  FAIL {}: expected {}, computed {}",
                c.name,
                format_rational(&c.expected),
                format_rational(&c.computed)
            )?;
        }
        Ok(())
    }
}

fn count_outside(d: &BettiDiagram, row: i64, allowed: impl Fn(usize) -> bool) -> usize {
    d.row_support(row)
        .into_iter()
        .filter(|&p| !allowed(p))
        .count()
}

/// Shape checks on an assembled diagram; failures are reported, not raised.
pub fn vanishing_predicates(p: &SecantParams, d: &BettiDiagram) -> VerificationReport {
    let (k, r) = (p.ki(), p.r);
    let mut report = VerificationReport::new(*p);

    // row 0 is exactly b_{0,0} = 1, rows 1..=k vanish
    let row0_bad = count_outside(d, 0, |c| c == 0) + usize::from(d.entry(0, 0) != Rational::one());
    let low_rows: usize = (1..=k).map(|q| d.row_support(q).len()).sum();
    report.push(Check::violations(
        "vanishing: row 0 is exactly b00=1",
        row0_bad,
    ));
    report.push(Check::violations(
        "vanishing: rows 1..=k are zero",
        low_rows,
    ));

    // linear strand of weight k+1 supported exactly on 1..=strand_end
    let end = p.strand_end();
    let strand_row = k + 1;
    let in_strand = |c: usize| (1..=end).contains(&(c as i64));
    let mut strand_bad = count_outside(d, strand_row, in_strand);
    strand_bad += (1..=end)
        .filter(|&c| d.get(c as usize, strand_row).is_none())
        .count();
    report.push(Check::violations(
        "vanishing: row k+1 support is exactly 1..=strand_end",
        strand_bad,
    ));

    let middle: usize = (k + 2..=2 * k).map(|q| d.row_support(q).len()).sum();
    report.push(Check::violations(
        "vanishing: rows k+2..=2k are zero",
        middle,
    ));

    // corner rows 2k+1 and 2k+2
    let anchors = anchor_values(p);
    for (&(c, q), value) in &anchors {
        if q > 0 {
            report.push(Check::equal(
                format!("anchor K({c},{q})"),
                value.clone(),
                d.entry(c, q),
            ));
        }
    }
    let (low, high) = top_row_range(SecantParams::GENUS, p.k, r);
    let top_bad = count_outside(d, 2 * k + 2, |c| (low..=high).contains(&(c as i64)));
    report.push(Check::violations(
        "vanishing: row 2k+2 only at anchors",
        top_bad,
    ));
    if k >= 1 {
        let second_bad = count_outside(d, 2 * k + 1, |c| c as i64 == r - 2 * k - 2);
        report.push(Check::violations(
            "vanishing: row 2k+1 only at anchor",
            second_bad,
        ));
    }

    let outside = d
        .iter()
        .filter(|&(c, q, _)| c as i64 > p.last_column() || q > 2 * k + 2 || q < 0)
        .count();
    report.push(Check::violations(
        "vanishing: nothing beyond the corner",
        outside,
    ));
    report
}

/// Full verification of the assembled diagram of `Σ_k`.
pub fn verify(p: &SecantParams) -> VerificationReport {
    let mut report = VerificationReport::new(*p);
    let diagram = match assemble_betti(p) {
        Ok(d) => d,
        Err(e) => {
            report.push(Check::holds(format!("assemble: {e}"), false));
            return report;
        }
    };
    let (k, r) = (p.ki(), p.r);

    let bad_entries = diagram
        .iter()
        .filter(|(_, _, v)| !v.is_integer() || v.is_negative())
        .count();
    report.push(Check::violations(
        "entries are nonnegative integers",
        bad_entries,
    ));

    for i in 1..=p.strand_end() {
        let expected = strand_value(i, p).expect("index is in range");
        report.push(Check::equal(
            format!("strand K({i},{})", k + 1),
            expected,
            diagram.entry(i as usize, k + 1),
        ));
    }

    let degree = secant_degree(p);
    report.push(Check::equal(
        "degree: binomial form = product form",
        degree.clone(),
        secant_degree_product(p),
    ));
    match multiplicity(&diagram) {
        Ok(m) => report.push(Check::equal("multiplicity = degree", degree.clone(), m)),
        Err(e) => report.push(Check::holds(format!("multiplicity: {e}"), false)),
    }

    let first = IndexVector::one_then_twos(p.k);
    let second = IndexVector::all_twos(p.k);
    let c_first = coefficient(&first, p).expect("admissible");
    let c_second = coefficient(&second, p).expect("admissible");
    let in_unit = |c: &Rational| !c.is_negative() && *c <= Rational::one();
    report.push(Check::equal(
        "coefficients sum to 1",
        Rational::one(),
        &c_first + &c_second,
    ));
    report.push(Check::holds(
        "coefficients lie in [0,1]",
        in_unit(&c_first) && in_unit(&c_second),
    ));

    match greedy_decompose(&diagram) {
        Ok(t) => {
            report.push(Check::equal(
                "decomposition: two terms",
                int(2),
                int(t.len() as i64),
            ));
            let d = p.degree_of_line_bundle();
            let expected = [(first, c_first), (second, c_second)];
            for (j, (index, c)) in expected.iter().enumerate() {
                let seq = pi_k_sequence(index, p.k, d).expect("valid parameters");
                let found = t.terms().get(j);
                report.push(Check::holds(
                    format!("decomposition: term {j} is pi_k({index})"),
                    found.is_some_and(|(_, e)| *e == seq),
                ));
                report.push(Check::equal(
                    format!("decomposition: coefficient of pi_k({index})"),
                    c * &degree,
                    found.map(|(c, _)| c.clone()).unwrap_or_default(),
                ));
            }
        }
        Err(e) => report.push(Check::holds(format!("decomposition: {e}"), false)),
    }

    let (low, high) = top_row_range(SecantParams::GENUS, p.k, r);
    let support: Vec<i64> = diagram
        .row_support(2 * k + 2)
        .into_iter()
        .map(|c| c as i64)
        .collect();
    report.push(Check::holds(
        "row 2k+2 support equals top_row_range",
        support == (low..=high).collect::<Vec<_>>(),
    ));

    report.extend(vanishing_predicates(p, &diagram));
    report
}

/// Verifies every `0 <= k <= k_max`, `2k+3 <= r <= 2k+3+r_extra`, ordered by `(k, r)`.
pub fn verify_sweep(k_min: u32, k_max: u32, r_extra: i64) -> Vec<VerificationReport> {
    let grid: Vec<SecantParams> = (k_min..=k_max)
        .flat_map(|k| {
            let base = 2 * k as i64 + 3;
            (base..=base + r_extra).map(move |r| SecantParams { k, r })
        })
        .collect();
    grid.par_iter().map(verify).collect()
}
