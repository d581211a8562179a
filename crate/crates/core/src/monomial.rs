//! Betti diagrams of squarefree monomial ideals via Hochster's formula.
//!
//! For a squarefree ideal `I` with Stanley–Reisner complex `Δ`,
//! `b_{i,W}(S/I) = dim H̃_{|W|-i-1}(Δ_W)` where `Δ_W` is the restriction of
//! `Δ` to the vertex set `W`. Summing over all `W` gives the graded Betti
//! numbers, placed at column `i` and row `|W| - i`.
//!
//! Vertex sets are bitmasks, so the number of variables is capped at
//! [`MAX_VARS`].

use std::fmt;

use num::{BigInt, Zero};
use rayon::prelude::*;

use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::rational::int;

pub const MAX_VARS: usize = 20;

type Mask = u32;

fn vertices_of(mask: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize)
        .filter(|&v| mask >> v & 1 == 1)
        .collect()
}

fn mask_of(vertices: &[usize]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Squarefree monomial ideal given by a minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    nvars: usize,
    generators: Vec<Mask>,
}

impl SquarefreeIdeal {
    /// Builds the ideal, keeping only the minimal generators.
    ///
    /// The empty monomial (the unit ideal) and out-of-range variables are rejected.
    pub fn new(nvars: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if nvars == 0 || nvars > MAX_VARS {
            return Err(Error::InvalidIdeal(format!(
                "number of variables must be in 1..={MAX_VARS}, got {nvars}"
            )));
        }
        let mut masks = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_empty() {
                return Err(Error::InvalidIdeal(
                    "constant generator (unit ideal)".into(),
                ));
            }
            if let Some(&v) = g.iter().find(|&&v| v >= nvars) {
                return Err(Error::InvalidIdeal(format!(
                    "variable x{v} out of range for {nvars} variables"
                )));
            }
            let mask = mask_of(&g);
            if mask.count_ones() as usize != g.len() {
                return Err(Error::InvalidIdeal(format!("repeated variable in {g:?}")));
            }
            masks.push(mask);
        }
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks.dedup();
        let mut minimal: Vec<Mask> = Vec::new();
        for m in masks {
            if !minimal.iter().any(|&g| is_subset(g, m)) {
                minimal.push(m);
            }
        }
        Ok(Self {
            nvars,
            generators: minimal,
        })
    }

    /// Parses `"x0*x2, x1*x3"` or exponent vectors `"1010,0101"`.
    /// An empty string or `"0"` is the zero ideal.
    pub fn parse(nvars: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Self::new(nvars, Vec::new());
        }
        let generators = text
            .split(',')
            .map(|token| parse_monomial(nvars, token.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, generators)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> Vec<Vec<usize>> {
        self.generators.iter().map(|&m| vertices_of(m)).collect()
    }

    fn contains(&self, monomial: Mask) -> bool {
        self.generators.iter().any(|&g| is_subset(g, monomial))
    }
}

fn parse_monomial(nvars: usize, token: &str) -> Result<Vec<usize>> {
    let bad = |why: &str| Error::Parse(format!("monomial {token:?}: {why}"));
    if token.is_empty() {
        return Err(bad("empty"));
    }
    if token.bytes().all(|b| b.is_ascii_digit()) {
        if token.len() != nvars {
            return Err(bad(&format!("exponent vector must have {nvars} entries")));
        }
        let mut vars = Vec::new();
        for (v, b) in token.bytes().enumerate() {
            match b {
                b'0' => {}
                b'1' => vars.push(v),
                _ => return Err(bad("exponents above 1 are not squarefree")),
            }
        }
        return Ok(vars);
    }
    token
        .split('*')
        .map(|factor| {
            let factor = factor.trim();
            let index = factor
                .strip_prefix('x')
                .ok_or_else(|| bad("expected variables of the form x<index>"))?;
            if let Some((_, exp)) = index.split_once('^') {
                if exp.trim() != "1" {
                    return Err(bad("exponents above 1 are not squarefree"));
                }
            }
            let index = index.split('^').next().unwrap_or(index);
            index
                .parse::<usize>()
                .map_err(|_| bad(&format!("bad variable {factor:?}")))
        })
        .collect()
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|&m| {
                vertices_of(m)
                    .iter()
                    .map(|v| format!("x{v}"))
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// A simplicial complex on vertices `0..nvertices`, stored by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    nvertices: usize,
    facets: Vec<Mask>,
}

impl SimplicialComplex {
    /// Keeps the maximal sets among `facets`. An empty list gives the complex `{∅}`.
    pub fn new(nvertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if nvertices > MAX_VARS {
            return Err(Error::InvalidIdeal(format!(
                "at most {MAX_VARS} vertices are supported"
            )));
        }
        if let Some(v) = facets.iter().flatten().find(|&&v| v >= nvertices) {
            return Err(Error::InvalidIdeal(format!("vertex {v} out of range")));
        }
        Ok(Self::from_masks(
            nvertices,
            facets.iter().map(|f| mask_of(f)).collect(),
        ))
    }

    fn from_masks(nvertices: usize, mut masks: Vec<Mask>) -> Self {
        masks.sort_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
        masks.dedup();
        let mut facets: Vec<Mask> = Vec::new();
        for m in masks {
            if !facets.iter().any(|&f| is_subset(m, f)) {
                facets.push(m);
            }
        }
        if facets.is_empty() {
            facets.push(0);
        }
        facets.sort();
        Self { nvertices, facets }
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| vertices_of(m)).collect()
    }

    /// Dimension of the largest facet; `-1` for `{∅}`.
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|m| m.count_ones() as i64)
            .max()
            .unwrap_or(0)
            - 1
    }

    /// Number of facets of maximal dimension.
    pub fn top_facet_count(&self) -> usize {
        let top = self.dimension() + 1;
        self.facets
            .iter()
            .filter(|m| m.count_ones() as i64 == top)
            .count()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let m = mask_of(face);
        self.facets.iter().any(|&f| is_subset(m, f))
    }

    /// Every face (including `∅`), ascending by mask.
    fn faces(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = Vec::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut sub = f;
            loop {
                out.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The complex whose faces are the squarefree monomials outside `ideal`.
pub fn stanley_reisner(ideal: &SquarefreeIdeal) -> SimplicialComplex {
    let n = ideal.nvars;
    let full: Mask = (1 << n) - 1;
    let maximal: Vec<Mask> = (0..=full)
        .filter(|&m| !ideal.contains(m))
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 1 || ideal.contains(m | 1 << v)))
        .collect();
    SimplicialComplex::from_masks(n, maximal)
}

/// Reduced homology ranks over the rationals, indexed from dimension `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyRanks {
    ranks: Vec<usize>,
}

impl HomologyRanks {
    /// Rank of `H̃_dim`; zero outside the computed range.
    pub fn rank(&self, dim: i64) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|j| self.ranks.get(j).copied())
            .unwrap_or(0)
    }

    /// `(dimension, rank)` for every dimension from `-1` up to the complex's dimension.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .map(|(j, &r)| (j as i64 - 1, r))
    }

    pub fn total(&self) -> usize {
        self.ranks.iter().sum()
    }
}

pub fn reduced_homology_ranks(c: &SimplicialComplex) -> HomologyRanks {
    homology_of_faces(&c.faces())
}

// Faces grouped by size; chain group C_d is spanned by faces of size d+1.
fn homology_of_faces(faces: &[Mask]) -> HomologyRanks {
    let top = faces
        .iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let mut by_size: Vec<Vec<Mask>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; top + 2];
    for s in 1..=top {
        boundary_rank[s] = boundary_matrix_rank(&by_size[s], &by_size[s - 1]);
    }
    let ranks = (0..=top)
        .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect();
    HomologyRanks { ranks }
}

fn boundary_matrix_rank(faces: &[Mask], codim_one: &[Mask]) -> usize {
    if faces.is_empty() || codim_one.is_empty() {
        return 0;
    }
    let mut rows: Vec<Vec<BigInt>> = faces
        .iter()
        .map(|&f| {
            let mut row = vec![BigInt::zero(); codim_one.len()];
            for (j, v) in vertices_of(f).into_iter().enumerate() {
                let g = f & !(1 << v);
                let col = codim_one
                    .binary_search(&g)
                    .expect("boundary face is present");
                row[col] = BigInt::from(if j % 2 == 0 { 1 } else { -1 });
            }
            row
        })
        .collect();
    bareiss_rank(&mut rows)
}

/// Rank by fraction-free (Bareiss) elimination; every division is exact.
fn bareiss_rank(rows: &mut [Vec<BigInt>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Graded Betti diagram of `S/I`.
pub fn hochster_betti(ideal: &SquarefreeIdeal) -> BettiDiagram {
    let complex = stanley_reisner(ideal);
    let faces = complex.faces();
    let n = ideal.nvars;
    let cells: Vec<(usize, i64, i64)> = (0..1u64 << n)
        .into_par_iter()
        .flat_map_iter(|w| {
            let w = w as Mask;
            let restricted: Vec<Mask> =
                faces.iter().copied().filter(|&f| is_subset(f, w)).collect();
            let size = w.count_ones() as i64;
            homology_of_faces(&restricted)
                .iter()
                .filter(|&(_, rank)| rank > 0)
                .map(move |(dim, rank)| {
                    let column = size - dim - 1;
                    (column as usize, size - column, rank as i64)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    BettiDiagram::from_entries(cells.into_iter().map(|(p, q, v)| (p, q, int(v))))
}
