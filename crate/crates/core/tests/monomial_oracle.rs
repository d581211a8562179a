//! Hochster-formula diagrams checked against Koszul homology, and used as
//! Cohen–Macaulay inputs for decomposition and multiplicity.

mod common;

use num::Signed;
use proptest::prelude::*;

use betti_core::rational::int;
use betti_core::{
    greedy_decompose, hochster_betti, multiplicity, recompose, stanley_reisner, SquarefreeIdeal,
};

use common::{int_cells_to_diagram, koszul_betti};

/// Non-edges of the n-gon.
fn cycle(n: usize) -> SquarefreeIdeal {
    let mut gens = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if b - a != 1 && !(a == 0 && b == n - 1) {
                gens.push(vec![a, b]);
            }
        }
    }
    SquarefreeIdeal::new(n, gens).unwrap()
}

/// The d-skeleton of the simplex on n vertices: all (d+2)-subsets are non-faces.
fn skeleton(n: usize, d: usize) -> SquarefreeIdeal {
    let size = d + 2;
    let gens = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == size)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect();
    SquarefreeIdeal::new(n, gens).unwrap()
}

fn cohen_macaulay_instances() -> Vec<(String, SquarefreeIdeal)> {
    let mut out = vec![
        (
            "square".to_string(),
            SquarefreeIdeal::parse(4, "x0*x2, x1*x3").unwrap(),
        ),
        (
            "three points".to_string(),
            SquarefreeIdeal::parse(3, "x0*x1, x1*x2, x0*x2").unwrap(),
        ),
        (
            "octahedron".to_string(),
            SquarefreeIdeal::parse(6, "x0*x1, x2*x3, x4*x5").unwrap(),
        ),
        (
            "complete intersection of mixed degrees".to_string(),
            SquarefreeIdeal::parse(7, "x0*x1*x2, x3*x4, x5").unwrap(),
        ),
        (
            "stacked triangles".to_string(),
            // facets 012, 123, 234: shellable, so CM
            SquarefreeIdeal::parse(5, "x0*x3, x0*x4, x1*x4").unwrap(),
        ),
    ];
    for n in 4..=7 {
        out.push((format!("{n}-gon"), cycle(n)));
    }
    for (n, d) in [(4, 0), (5, 1), (6, 1), (6, 2), (5, 2)] {
        out.push((format!("{d}-skeleton of {n}-simplex"), skeleton(n, d)));
    }
    out
}

#[test]
fn hochster_agrees_with_koszul_homology_on_curated_list() {
    for (name, ideal) in cohen_macaulay_instances() {
        let oracle = int_cells_to_diagram(&koszul_betti(ideal.nvars(), &ideal.generators()));
        assert_eq!(hochster_betti(&ideal), oracle, "{name}");
    }
}

#[test]
fn cohen_macaulay_diagrams_decompose() {
    for (name, ideal) in cohen_macaulay_instances() {
        let d = hochster_betti(&ideal);
        let t = greedy_decompose(&d).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(t.terms().iter().all(|(c, _)| c.is_positive()), "{name}");
        assert_eq!(recompose(&t).unwrap(), d, "{name}");
    }
}

#[test]
fn multiplicity_counts_top_facets() {
    for (name, ideal) in cohen_macaulay_instances() {
        let facets = stanley_reisner(&ideal).top_facet_count();
        let m = multiplicity(&hochster_betti(&ideal)).unwrap();
        assert_eq!(m, int(facets as i64), "{name}");
    }
}

#[test]
fn curated_facet_counts() {
    assert_eq!(stanley_reisner(&cycle(6)).top_facet_count(), 6);
    assert_eq!(stanley_reisner(&skeleton(6, 1)).top_facet_count(), 15);
    assert_eq!(
        stanley_reisner(&SquarefreeIdeal::parse(5, "x0*x3, x0*x4, x1*x4").unwrap()).facets(),
        vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]
    );
}

#[test]
fn non_cohen_macaulay_is_rejected() {
    // two disjoint edges: dimension 1 but disconnected, so not CM
    let ideal = SquarefreeIdeal::parse(4, "x0*x2, x0*x3, x1*x2, x1*x3").unwrap();
    let d = hochster_betti(&ideal);
    let oracle = int_cells_to_diagram(&koszul_betti(4, &ideal.generators()));
    assert_eq!(d, oracle);
    assert!(greedy_decompose(&d).is_err() || multiplicity(&d).is_err());
}

fn small_ideal() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (2usize..=6).prop_flat_map(|n| {
        let generator = prop::collection::btree_set(0..n, 1..=3)
            .prop_map(|s| s.into_iter().collect::<Vec<_>>());
        (Just(n), prop::collection::vec(generator, 0..5))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn hochster_matches_koszul_on_random_ideals((n, gens) in small_ideal()) {
        let ideal = SquarefreeIdeal::new(n, gens).unwrap();
        let oracle = int_cells_to_diagram(&koszul_betti(n, &ideal.generators()));
        prop_assert_eq!(hochster_betti(&ideal), oracle);
    }
}
