//! Property tests for the engine invariants, plus the zero-pruning
//! reference implementation of the minimum search.

use proptest::prelude::*;

use rainbowsat::construct::build_h;
use rainbowsat::graph::{parse_ecg, write_ecg, ColorSet, EdgeColoredGraph};
use rainbowsat::rainbow::{contains_rainbow_path, find_rainbow_path, naive_contains_rainbow_path};
use rainbowsat::saturation::{
    blocked_pendant_colors, is_rainbow_free, saturation_defects, Blocked,
};
use rainbowsat::search::{min_saturated_size, SearchBudget};

fn pairs_of(n: usize) -> Vec<(u32, u32)> {
    (0..n as u32)
        .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
        .collect()
}

fn graph_with(n: usize, t: u32) -> impl Strategy<Value = EdgeColoredGraph> {
    let pairs = pairs_of(n);
    let len = pairs.len();
    proptest::collection::vec(proptest::option::weighted(0.4, 1u32..=t), len).prop_map(
        move |colors| {
            let edges: Vec<(u32, u32, u32)> = pairs
                .iter()
                .zip(colors.iter())
                .filter_map(|(&(u, v), c)| c.map(|c| (u, v, c)))
                .collect();
            EdgeColoredGraph::from_edge_list(n, t, edges).unwrap()
        },
    )
}

fn arb_graph() -> impl Strategy<Value = EdgeColoredGraph> {
    (0usize..=8, 1u32..=8).prop_flat_map(|(n, t)| graph_with(n, t))
}

proptest! {
    #[test]
    fn ecg_round_trip(g in arb_graph()) {
        let text = write_ecg(&g);
        prop_assert_eq!(parse_ecg(&text).unwrap(), g);
    }

    #[test]
    fn union_is_additive(
        parts in (1u32..=6).prop_flat_map(|t| {
            proptest::collection::vec(
                (0usize..=5).prop_flat_map(move |n| graph_with(n, t)),
                1..=3,
            )
        })
    ) {
        let union = EdgeColoredGraph::disjoint_union(&parts).unwrap();
        prop_assert_eq!(union.n(), parts.iter().map(|p| p.n()).sum::<usize>());
        prop_assert_eq!(
            union.edge_count(),
            parts.iter().map(|p| p.edge_count()).sum::<usize>()
        );
        // No cross-part edges: both endpoints land in one part's id range.
        let mut offsets = vec![0usize];
        for p in &parts {
            offsets.push(offsets.last().unwrap() + p.n());
        }
        for e in union.edges() {
            let part = offsets.iter().rposition(|&o| o <= e.u as usize).unwrap();
            prop_assert!((e.v as usize) < offsets[part + 1]);
        }
    }

    #[test]
    fn proper_coloring_is_permutation_invariant(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n();
        if n == 0 { return Ok(()); }
        let mut perm: Vec<u32> = (0..n as u32).collect();
        // Cheap deterministic shuffle from the seed.
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let permuted = g.apply_vertex_permutation(&perm).unwrap();
        prop_assert_eq!(g.is_proper_coloring(), permuted.is_proper_coloring());
    }

    #[test]
    fn rainbow_monotonicity(g in arb_graph()) {
        for k in 3..=g.n() {
            if contains_rainbow_path(&g, k) {
                prop_assert!(contains_rainbow_path(&g, k - 1), "k = {k}");
            }
        }
    }

    #[test]
    fn contains_is_vertex_permutation_invariant(g in arb_graph(), seed in any::<u64>()) {
        let n = g.n();
        if n == 0 { return Ok(()); }
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let permuted = g.apply_vertex_permutation(&perm).unwrap();
        for order in 2..=n.min(6) {
            prop_assert_eq!(
                contains_rainbow_path(&g, order),
                contains_rainbow_path(&permuted, order)
            );
        }
    }

    #[test]
    fn contains_and_blocked_are_color_equivariant(g in arb_graph(), seed in any::<u64>()) {
        let t = g.t();
        let mut perm: Vec<u32> = (1..=t).collect();
        let mut state = seed | 1;
        for i in (1..t as usize).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let recolored = g.apply_color_permutation(&perm).unwrap();
        for order in 2..=g.n().min(5) {
            prop_assert_eq!(
                contains_rainbow_path(&g, order),
                contains_rainbow_path(&recolored, order)
            );
        }
        if g.n() > 0 {
            let order = g.n().min(4);
            let v = (g.n() - 1) as u32;
            let a = blocked_pendant_colors(&g, v, order).unwrap();
            let b = blocked_pendant_colors(&recolored, v, order).unwrap();
            let mapped = match a {
                Blocked::All => Blocked::All,
                Blocked::Colors(s) => Blocked::Colors(ColorSet::from_colors(
                    s.iter().map(|c| perm[c as usize - 1]),
                )),
            };
            prop_assert_eq!(mapped, b);
        }
    }

    #[test]
    fn found_witnesses_are_valid(g in arb_graph()) {
        for order in 1..=g.n().min(6) {
            if let Some(w) = find_rainbow_path(&g, order, None).unwrap() {
                prop_assert!(w.validate(&g).is_ok());
                prop_assert_eq!(w.order(), order);
                prop_assert!(w.is_rainbow());
            }
        }
    }

    /// If G is rainbow-free at some order, a rainbow path in G + e must go
    /// through e: the global check and the through-edge check agree.
    #[test]
    fn new_edge_locality(g in (3usize..=7, 2u32..=6).prop_flat_map(|(n, t)| graph_with(n, t)),
                         choice in any::<u64>()) {
        let order = 3 + (choice % 3) as usize;
        prop_assume!(order <= g.n());
        prop_assume!(is_rainbow_free(&g, order));
        let non_edges = g.non_edges();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[(choice >> 8) as usize % non_edges.len()];
        let color = 1 + ((choice >> 16) as u32 % g.t());
        let aug = g.with_edge(u, v, color).unwrap();
        prop_assert_eq!(
            contains_rainbow_path(&aug, order),
            find_rainbow_path(&aug, order, Some((u, v))).unwrap().is_some()
        );
    }

    /// Saturation verdicts survive color relabeling.
    #[test]
    fn saturation_is_color_permutation_invariant(
        g in (3usize..=5, 2u32..=3).prop_flat_map(|(n, t)| graph_with(n, t)),
        seed in any::<u64>(),
    ) {
        let t = g.t();
        let mut perm: Vec<u32> = (1..=t).collect();
        let mut state = seed | 1;
        for i in (1..t as usize).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let recolored = g.apply_color_permutation(&perm).unwrap();
        let order = 3;
        prop_assert_eq!(
            rainbowsat::saturation::is_saturated(&g, order, t).unwrap(),
            rainbowsat::saturation::is_saturated(&recolored, order, t).unwrap()
        );
    }

    /// Defect scans agree with the naive oracle within its guard.
    #[test]
    fn defect_soundness_against_naive(
        g in (3usize..=6, 2u32..=4).prop_flat_map(|(n, t)| graph_with(n, t)),
        order_pick in 0u8..=1,
    ) {
        let order = 3 + order_pick as usize;
        prop_assume!(order <= g.n());
        prop_assume!(is_rainbow_free(&g, order));
        let defects = saturation_defects(&g, order, g.t()).unwrap();
        let mut expected = Vec::new();
        for (u, v) in g.non_edges() {
            for color in 1..=g.t() {
                let aug = g.with_edge(u, v, color).unwrap();
                if !naive_contains_rainbow_path(&aug, order).unwrap() {
                    expected.push(rainbowsat::saturation::Defect { u, v, color });
                }
            }
        }
        prop_assert_eq!(defects, expected);
    }
}

/// Zero-pruning reference search: every labeled graph (all edge subsets),
/// every coloring (mixed radix), saturation via the naive path oracle.
fn reference_min(n: usize, ell: usize, t: u32) -> Option<usize> {
    let pairs = pairs_of(n);
    let np = pairs.len();
    for m in 0..=np {
        let mut found = false;
        for mask in 0u32..(1u32 << np) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let chosen: Vec<(u32, u32)> = (0..np)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| pairs[i])
                .collect();
            let mut colors = vec![1u32; m];
            loop {
                let edges: Vec<(u32, u32, u32)> = chosen
                    .iter()
                    .zip(&colors)
                    .map(|(&(u, v), &c)| (u, v, c))
                    .collect();
                let g = EdgeColoredGraph::from_edge_list(n, t, edges).unwrap();
                if reference_is_saturated(&g, ell, t) {
                    found = true;
                    break;
                }
                // Next mixed-radix assignment.
                let mut i = 0;
                loop {
                    if i == m {
                        break;
                    }
                    if colors[i] < t {
                        colors[i] += 1;
                        break;
                    }
                    colors[i] = 1;
                    i += 1;
                }
                if i == m {
                    break;
                }
            }
            if found {
                break;
            }
        }
        if found {
            return Some(m);
        }
    }
    None
}

fn reference_is_saturated(g: &EdgeColoredGraph, ell: usize, t: u32) -> bool {
    if naive_contains_rainbow_path(g, ell).unwrap() {
        return false;
    }
    for (u, v) in g.non_edges() {
        for color in 1..=t {
            let aug = g.with_edge(u, v, color).unwrap();
            if !naive_contains_rainbow_path(&aug, ell).unwrap() {
                return false;
            }
        }
    }
    true
}

#[test]
fn search_agrees_with_reference_up_to_four_vertices() {
    let budget = SearchBudget::default();
    for (n, ell, t) in [
        (3usize, 3usize, 1u32),
        (3, 3, 2),
        (4, 3, 2),
        (4, 3, 3),
        (4, 4, 2),
        (4, 4, 3),
    ] {
        let expected = reference_min(n, ell, t);
        let outcome = min_saturated_size(n, ell, t, &budget).unwrap();
        assert!(outcome.exhausted);
        assert_eq!(outcome.minimum, expected, "n={n}, ell={ell}, t={t}");
    }
}

/// The recorded cross-block augmentation: joining the two mid-degree
/// vertices of two order-5 blocks with color 2 yields the exhibited
/// rainbow path on 5 vertices.
#[test]
fn cross_block_augmentation_has_recorded_witness() {
    let g = EdgeColoredGraph::disjoint_union(&[build_h(5).unwrap(), build_h(5).unwrap()]).unwrap();
    let aug = g.with_edge(1, 6, 2).unwrap();
    let witness = find_rainbow_path(&aug, 5, Some((1, 6))).unwrap().unwrap();
    assert!(witness.is_rainbow());
    assert!(witness.uses_edge(1, 6));
    // The exhibited trace v2,v3,v1 | v1',v2' is itself a valid rainbow
    // witness with colors {5,4,2,3}.
    let exhibited = rainbowsat::graph::PathWitness {
        vertices: vec![2, 3, 1, 6, 7],
        colors: vec![5, 4, 2, 3],
    };
    exhibited.validate(&aug).unwrap();
    assert!(exhibited.is_rainbow());
    assert!(exhibited.uses_edge(1, 6));
}
