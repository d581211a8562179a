//! Independent oracles for the integration tests.
//!
//! Nothing here calls into the library's arithmetic: fractions are plain
//! `i128` pairs, degree sequences are built by literal set removal, and
//! Betti numbers of monomial ideals come from Koszul homology rather than
//! from simplicial restrictions.

#![allow(dead_code)]

use std::collections::BTreeMap;

use betti_core::rational::ratio;
use betti_core::{BettiDiagram, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    pub num: i128,
    pub den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0);
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Self {
            num: s * num / g,
            den: s * den / g,
        }
    }

    pub fn int(n: i128) -> Self {
        Self::new(n, 1)
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn add(self, o: Self) -> Self {
        let g = gcd(self.den, o.den);
        let l = self.den / g;
        let num = self
            .num
            .checked_mul(o.den / g)
            .and_then(|a| o.num.checked_mul(l).and_then(|b| a.checked_add(b)))
            .expect("oracle overflow");
        Self::new(num, l.checked_mul(o.den).expect("oracle overflow"))
    }

    pub fn mul(self, o: Self) -> Self {
        let g1 = gcd(self.num, o.den).max(1);
        let g2 = gcd(o.num, self.den).max(1);
        Self::new(
            (self.num / g1)
                .checked_mul(o.num / g2)
                .expect("oracle overflow"),
            (self.den / g2)
                .checked_mul(o.den / g1)
                .expect("oracle overflow"),
        )
    }

    pub fn neg(self) -> Self {
        Self::new(-self.num, self.den)
    }

    pub fn div(self, o: Self) -> Self {
        self.mul(Self::new(o.den, o.num))
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_rational(self) -> Rational {
        ratio(self.num as i64, self.den as i64)
    }
}

pub fn factorial(n: i128) -> i128 {
    (1..=n).product()
}

/// Pascal-triangle binomial.
pub fn binomial(n: i128, m: i128) -> i128 {
    if m < 0 || n < 0 || m > n {
        return 0;
    }
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[m as usize]
}

pub type Cells = BTreeMap<(usize, i64), Frac>;

/// Pure diagram by direct evaluation: `n! * prod_{i != p} 1/|e_i - e_p|` at `(p, e_p - p)`.
pub fn pure_cells(e: &[i64]) -> Cells {
    let n = e.len() as i128 - 1;
    e.iter()
        .enumerate()
        .map(|(p, &ep)| {
            let mut value = Frac::int(factorial(n));
            for (i, &ei) in e.iter().enumerate() {
                if i != p {
                    value = value.div(Frac::int((ei - ep).abs() as i128));
                }
            }
            ((p, ep - p as i64), value)
        })
        .collect()
}

pub fn add_cells(a: &Cells, b: &Cells, scale_b: Frac) -> Cells {
    let mut out = a.clone();
    for (&key, &v) in b {
        let slot = out.entry(key).or_insert(Frac::zero());
        *slot = slot.add(v.mul(scale_b));
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn cells_to_diagram(c: &Cells) -> BettiDiagram {
    BettiDiagram::from_entries(c.iter().map(|(&(p, q), v)| (p, q, v.to_rational())))
}

/// `{0..r+1}` minus `{1..k+1}` minus `{r+1-(i_j+j)}`.
pub fn pi_sequence(k: i64, r: i64, index: &[i64]) -> Vec<i64> {
    let mut removed: Vec<i64> = (1..=k + 1).collect();
    removed.extend(
        index
            .iter()
            .enumerate()
            .map(|(j, &ij)| r + 1 - (ij + j as i64)),
    );
    (0..=r + 1).filter(|x| !removed.contains(x)).collect()
}

pub fn secant_degree(k: i64, r: i64) -> i128 {
    let (k, r) = (k as i128, r as i128);
    if k == 0 {
        return r + 2;
    }
    binomial(r - k, k + 1) + 2 * binomial(r - k - 1, k) + binomial(r - k - 2, k - 1)
}

/// `(c_(1,2..2), c_(2..2))`.
pub fn secant_coefficients(k: i64, r: i64) -> (Frac, Frac) {
    let (k, r) = (k as i128, r as i128);
    let top = Frac::new(r * r - 2 * k * r - r, r * r + r - 2 * k - 2);
    (Frac::int(1).add(top.neg()), top)
}

/// Assembly of the secant diagram from the oracle pieces.
pub fn secant_cells(k: i64, r: i64) -> Cells {
    let deg = Frac::int(secant_degree(k, r));
    let (c1, c2) = secant_coefficients(k, r);
    let mut ones = vec![2; k as usize + 1];
    ones[0] = 1;
    let twos = vec![2; k as usize + 1];
    let a = pure_cells(&pi_sequence(k, r, &ones));
    let b = pure_cells(&pi_sequence(k, r, &twos));
    add_cells(&add_cells(&Cells::new(), &a, c1.mul(deg)), &b, c2.mul(deg))
}

fn rank(mut m: Vec<Vec<Frac>>) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col];
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].div(p);
                let pivot_row = m[rank].clone();
                for (x, v) in m[i].iter_mut().zip(pivot_row).skip(col) {
                    *x = x.add(v.mul(f).neg());
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers of `S/I` from Koszul homology `H_i(x; S/I)` in every
/// squarefree multidegree. Generators are vertex lists.
pub fn koszul_betti(nvars: usize, generators: &[Vec<usize>]) -> BTreeMap<(usize, i64), i64> {
    let gens: Vec<u32> = generators
        .iter()
        .map(|g| g.iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let in_ideal = |m: u32| gens.iter().any(|&g| g & !m == 0);
    let mut out = BTreeMap::new();
    for sigma in 0u32..1 << nvars {
        // basis of K_i in degree sigma: subsets F of sigma with x^{sigma - F} outside I
        let basis = |i: u32| -> Vec<u32> {
            let mut v = Vec::new();
            let mut f = sigma;
            loop {
                if f.count_ones() == i && !in_ideal(sigma & !f) {
                    v.push(f);
                }
                if f == 0 {
                    break;
                }
                f = (f - 1) & sigma;
            }
            v.sort();
            v
        };
        let size = sigma.count_ones();
        let bases: Vec<Vec<u32>> = (0..=size + 1).map(basis).collect();
        // d_i : K_i -> K_{i-1}, e_F (x) m  ->  sum_j sign e_{F-j} (x) x_j m
        let boundary_rank = |i: usize| -> usize {
            if i == 0 || bases[i].is_empty() || bases[i - 1].is_empty() {
                return 0;
            }
            let rows: Vec<Vec<Frac>> = bases[i]
                .iter()
                .map(|&f| {
                    let mut row = vec![Frac::zero(); bases[i - 1].len()];
                    for (pos, v) in (0..32).filter(|&v| f >> v & 1 == 1).enumerate() {
                        let smaller = f & !(1 << v);
                        if let Ok(c) = bases[i - 1].binary_search(&smaller) {
                            row[c] = Frac::int(if pos % 2 == 0 { 1 } else { -1 });
                        }
                    }
                    row
                })
                .collect();
            rank(rows)
        };
        for (i, basis) in bases.iter().enumerate().take(size as usize + 1) {
            let h = basis.len() - boundary_rank(i) - boundary_rank(i + 1);
            if h > 0 {
                *out.entry((i, size as i64 - i as i64)).or_insert(0) += h as i64;
            }
        }
    }
    out
}

pub fn int_cells_to_diagram(c: &BTreeMap<(usize, i64), i64>) -> BettiDiagram {
    BettiDiagram::from_entries(c.iter().map(|(&(p, q), &v)| (p, q, ratio(v, 1))))
}
