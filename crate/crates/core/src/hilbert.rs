//! Hilbert numerators and multiplicity of Betti diagrams.
//!
//! A diagram `b` determines the numerator `K(t) = sum (-1)^p b_{p,q} t^{p+q}`
//! of the Hilbert series over `(1-t)^{#variables}`. Dividing out `(1-t)^c`
//! with `c` the codimension and evaluating at `t = 1` gives the multiplicity.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Polynomial in `t` with exact rational coefficients.
///
/// Exponents are signed so that diagrams with negative rows still produce a
/// numerator; multiplying by a power of `t` changes neither divisibility by
/// `(1-t)` nor the value at `t = 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: BTreeMap<i64, Rational>,
}

impl RatPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = Self::zero();
        for (deg, c) in coeffs {
            out.add_term(deg, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> Rational {
        self.coeffs
            .get(&deg)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, deg: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(deg).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&deg);
        }
    }

    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.values().sum()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .map(|(&d, c)| {
                let power = if d >= 0 {
                    num::pow(t.clone(), d as usize)
                } else {
                    num::pow(t.recip(), (-d) as usize)
                };
                c * power
            })
            .sum()
    }

    /// Product with `(1-t)^c`.
    pub fn mul_one_minus_t_pow(&self, c: usize) -> Self {
        let mut out = self.clone();
        for _ in 0..c {
            let mut next = Self::zero();
            for (d, v) in out.terms() {
                next.add_term(d, v);
                next.add_term(d + 1, &-v);
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (j, (d, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if j == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match d {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rational(&mag))?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `sum_{p,q} (-1)^p b_{p,q} t^{p+q}`.
pub fn alternating_numerator(d: &BettiDiagram) -> Result<RatPolynomial> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    Ok(RatPolynomial::from_coeffs(d.iter().map(|(p, q, v)| {
        let v = if p % 2 == 0 { v.clone() } else { -v };
        (p as i64 + q, v)
    })))
}

/// Exact quotient `poly / (1-t)^c` by repeated synthetic division.
pub fn divide_exact(poly: &RatPolynomial, c: usize) -> Result<RatPolynomial> {
    let mut current = poly.clone();
    for _ in 0..c {
        current = divide_once(&current).ok_or_else(|| Error::NotDivisible {
            numerator: poly.clone(),
            exponent: c,
        })?;
    }
    Ok(current)
}

// p = (1-t) q  <=>  q_j = a_j + q_{j-1}, and the running sum must vanish at the top.
fn divide_once(poly: &RatPolynomial) -> Option<RatPolynomial> {
    let (Some((&lo, _)), Some((&hi, _))) =
        (poly.coeffs.first_key_value(), poly.coeffs.last_key_value())
    else {
        return Some(RatPolynomial::zero());
    };
    let mut quotient = RatPolynomial::zero();
    let mut running = Rational::zero();
    for deg in lo..hi {
        running += poly.coeff(deg);
        quotient.add_term(deg, &running);
    }
    running += poly.coeff(hi);
    running.is_zero().then_some(quotient)
}

/// Multiplicity with the codimension taken to be the projective dimension.
pub fn multiplicity(d: &BettiDiagram) -> Result<Rational> {
    let numerator = alternating_numerator(d)?;
    let codim = d.projective_dimension()?;
    Ok(divide_exact(&numerator, codim)?.eval_at_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{pure_diagram, DegreeSequence};
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn poly(c: &[(i64, i64)]) -> RatPolynomial {
        RatPolynomial::from_coeffs(c.iter().map(|&(d, v)| (d, int(v))))
    }

    fn curve_r3() -> BettiDiagram {
        BettiDiagram::from_entries([
            (0, 0, int(1)),
            (1, 1, int(1)),
            (1, 2, int(2)),
            (2, 2, int(2)),
        ])
    }

    fn pure(v: &[i64]) -> BettiDiagram {
        pure_diagram(&DegreeSequence::new(v.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn numerators() {
        assert_eq!(
            alternating_numerator(&pure(&[0, 1, 2])).unwrap(),
            poly(&[(0, 1), (1, -2), (2, 1)])
        );
        assert_eq!(
            alternating_numerator(&curve_r3()).unwrap(),
            poly(&[(0, 1), (2, -1), (3, -2), (4, 2)])
        );
        assert!(matches!(
            alternating_numerator(&BettiDiagram::new()),
            Err(Error::EmptyDiagram)
        ));
    }

    #[test]
    fn exact_division() {
        let sq = poly(&[(0, 1), (1, -2), (2, 1)]);
        assert_eq!(divide_exact(&sq, 2).unwrap(), poly(&[(0, 1)]));
        let k = poly(&[(0, 1), (2, -1), (3, -2), (4, 2)]);
        assert_eq!(
            divide_exact(&k, 2).unwrap(),
            poly(&[(0, 1), (1, 2), (2, 2)])
        );
        assert!(matches!(
            divide_exact(&poly(&[(0, 1), (1, 1)]), 1),
            Err(Error::NotDivisible { exponent: 1, .. })
        ));
        assert_eq!(divide_exact(&k, 0).unwrap(), k);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&curve_r3()).unwrap(), int(5));
        assert_eq!(multiplicity(&pure(&[0, 1, 2])).unwrap(), int(1));
        assert_eq!(multiplicity(&pure(&[0, 3, 4, 7, 8])).unwrap(), int(1));
        // two linear forms but codimension one
        let bad = BettiDiagram::from_entries([(0, 0, int(1)), (1, 0, int(2))]);
        assert!(matches!(
            multiplicity(&bad),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn negative_rows_are_fine() {
        assert_eq!(multiplicity(&pure(&[-3, -1, 2])).unwrap(), int(1));
    }

    #[test]
    fn display() {
        let k = poly(&[(0, 1), (2, -1), (3, -2), (4, 2)]);
        assert_eq!(k.to_string(), "1 - t^2 - 2*t^3 + 2*t^4");
        assert_eq!(RatPolynomial::zero().to_string(), "0");
        let mut p = RatPolynomial::zero();
        p.add_term(1, &ratio(-1, 2));
        assert_eq!(p.to_string(), "-1/2*t");
    }

    fn zero_based_sequence() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::btree_set(1i64..=40, 1..=12)
            .prop_map(|s| std::iter::once(0).chain(s).collect())
    }

    fn zero_based_sequence_of(n: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::btree_set(1i64..=40, n)
            .prop_map(|s| std::iter::once(0).chain(s).collect())
    }

    proptest! {
        #[test]
        fn pure_diagrams_have_multiplicity_one(v in zero_based_sequence()) {
            prop_assert_eq!(multiplicity(&pure(&v)).unwrap(), int(1));
        }

        // Herzog–Kühl: b_i / b_0 = |prod_{j != i, j >= 1} e_j / (e_j - e_i)|
        #[test]
        fn pure_ratio_matches_product_formula(v in zero_based_sequence()) {
            let d = pure(&v);
            let head = d.entry(0, 0);
            for i in 1..v.len() {
                let ratio_formula: Rational = (1..v.len())
                    .filter(|&j| j != i)
                    .map(|j| ratio(v[j], v[j] - v[i]))
                    .product::<Rational>()
                    .abs();
                prop_assert_eq!(d.entry(i, v[i] - i as i64) / &head, ratio_formula);
            }
        }

        #[test]
        fn multiplicity_is_linear(
            (v, w) in (1usize..=12).prop_flat_map(|n| (zero_based_sequence_of(n), zero_based_sequence_of(n))),
            a in 1i64..30,
            b in 1i64..30,
        ) {
            let combo = pure(&v).scale(&int(a)).add(&pure(&w).scale(&int(b)));
            prop_assert_eq!(multiplicity(&combo).unwrap(), int(a + b));
        }

        #[test]
        fn division_inverts_multiplication(c in prop::collection::vec(-9i64..9, 0..8), e in 0usize..4) {
            let p = RatPolynomial::from_coeffs(c.iter().enumerate().map(|(d, &v)| (d as i64, int(v))));
            prop_assert_eq!(divide_exact(&p.mul_one_minus_t_pow(e), e).unwrap(), p);
        }
    }
}
