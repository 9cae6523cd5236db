//! Saturation verdicts and blocked-color analysis.
//!
//! A graph is *saturated* for order `ell` over palette `[t]` when it is
//! rainbow-P_ell-free and the addition of any missing edge, in any color of
//! `[t]`, creates a rainbow path on `ell` vertices. A [`Defect`] is a
//! counterexample: a missing pair plus a color whose addition creates no
//! such path.
//!
//! Since the host graph is rainbow-free, any rainbow path in `G + e` must
//! traverse `e`, so the scan searches only for witnesses through the added
//! edge rather than re-running a global search.

use std::fmt;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{ColorSet, EdgeColoredGraph};
use crate::rainbow::{contains_rainbow_path, find_rainbow_path, walk_rainbow_paths, RainbowError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturationError {
    #[error("graph already contains a rainbow path on {order} vertices")]
    NotRainbowFree { order: usize },
    #[error("palette mismatch: graph has t = {graph_t}, scan asked for t = {asked_t}")]
    PaletteMismatch { graph_t: u32, asked_t: u32 },
    #[error("path order {order} not in 1..={n}")]
    OrderOutOfRange { order: usize, n: usize },
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
}

/// A missing pair and a color whose addition creates no rainbow path on
/// `ell` vertices; the empty defect list certifies saturation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Defect {
    pub u: u32,
    pub v: u32,
    pub color: u32,
}

/// Colors blocked for pendant extension at a vertex: the intersection of
/// the color sets of all rainbow fixed-order paths starting there.
///
/// `All` marks the degenerate case where no such path exists at all; it is
/// kept distinct from the full palette because the intersection of an empty
/// family has no natural value, but it behaves as `[t]` in pendant
/// reasoning (every pendant color is blocked).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Blocked {
    Colors(ColorSet),
    All,
}

impl Blocked {
    /// The blocked set as a concrete color set over `[t]`.
    pub fn as_color_set(self, t: u32) -> ColorSet {
        match self {
            Blocked::Colors(s) => s,
            Blocked::All => ColorSet::full(t),
        }
    }

    pub fn is_empty(self) -> bool {
        matches!(self, Blocked::Colors(s) if s.is_empty())
    }
}

impl fmt::Display for Blocked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Blocked::Colors(s) => write!(f, "{s}"),
            Blocked::All => write!(f, "ALL"),
        }
    }
}

/// True iff the graph contains no rainbow path on `ell` vertices.
pub fn is_rainbow_free(g: &EdgeColoredGraph, ell: usize) -> bool {
    !contains_rainbow_path(g, ell)
}

fn check_scan_preconditions(
    g: &EdgeColoredGraph,
    ell: usize,
    t: u32,
) -> Result<(), SaturationError> {
    if t != g.t() {
        return Err(SaturationError::PaletteMismatch {
            graph_t: g.t(),
            asked_t: t,
        });
    }
    if !is_rainbow_free(g, ell) {
        return Err(SaturationError::NotRainbowFree { order: ell });
    }
    Ok(())
}

fn cell_is_defect(g: &EdgeColoredGraph, ell: usize, u: u32, v: u32, color: u32) -> bool {
    let augmented = g
        .with_edge(u, v, color)
        .expect("non-edge with palette color");
    find_rainbow_path(&augmented, ell, Some((u, v)))
        .expect("edge was just added")
        .is_none()
}

/// The complete defect list over all non-adjacent pairs (including pairs
/// across components) and all colors of `[t]`, in canonical order: pairs
/// lexicographic, colors ascending. Empty iff the graph is saturated.
///
/// The scan distributes cells across threads; the result order is
/// schedule-independent.
pub fn saturation_defects(
    g: &EdgeColoredGraph,
    ell: usize,
    t: u32,
) -> Result<Vec<Defect>, SaturationError> {
    check_scan_preconditions(g, ell, t)?;
    let cells: Vec<(u32, u32, u32)> = g
        .non_edges()
        .into_iter()
        .flat_map(|(u, v)| (1..=t).map(move |c| (u, v, c)))
        .collect();
    Ok(cells
        .par_iter()
        .filter_map(|&(u, v, color)| {
            cell_is_defect(g, ell, u, v, color).then_some(Defect { u, v, color })
        })
        .collect())
}

/// First defect in canonical scan order, or `None` when saturated.
/// Sequential with early exit; used as the cheap saturation test.
pub fn first_defect(
    g: &EdgeColoredGraph,
    ell: usize,
    t: u32,
) -> Result<Option<Defect>, SaturationError> {
    check_scan_preconditions(g, ell, t)?;
    for (u, v) in g.non_edges() {
        for color in 1..=t {
            if cell_is_defect(g, ell, u, v, color) {
                return Ok(Some(Defect { u, v, color }));
            }
        }
    }
    Ok(None)
}

/// True iff the graph is rainbow-P_ell-free and has no defect.
pub fn is_saturated(g: &EdgeColoredGraph, ell: usize, t: u32) -> Result<bool, SaturationError> {
    if t != g.t() {
        return Err(SaturationError::PaletteMismatch {
            graph_t: g.t(),
            asked_t: t,
        });
    }
    if !is_rainbow_free(g, ell) {
        return Ok(false);
    }
    Ok(first_defect(g, ell, t)?.is_none())
}

/// Intersection of the color sets of all rainbow paths on `order` vertices
/// starting at `v`; [`Blocked::All`] when no such path exists.
///
/// A color `c` lies in the result exactly when joining a fresh pendant
/// vertex to `v` with an edge colored `c` creates no rainbow path on
/// `order + 1` vertices ending at the pendant.
pub fn blocked_pendant_colors(
    g: &EdgeColoredGraph,
    v: u32,
    order: usize,
) -> Result<Blocked, SaturationError> {
    if v as usize >= g.n() {
        return Err(SaturationError::Rainbow(RainbowError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }));
    }
    if order == 0 || order > g.n() {
        return Err(SaturationError::OrderOutOfRange { order, n: g.n() });
    }
    let mut acc: Option<ColorSet> = None;
    walk_rainbow_paths(g, [v], order, None, |_, colors| {
        let set = ColorSet::from_colors(colors.iter().copied());
        let next = match acc {
            None => set,
            Some(prev) => prev.intersection(set),
        };
        acc = Some(next);
        if next.is_empty() {
            // The intersection can only shrink; no later path changes it.
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match acc {
        Some(set) => Blocked::Colors(set),
        None => Blocked::All,
    })
}

/// [`blocked_pendant_colors`] for every vertex, indexed by vertex id.
pub fn blocked_table(g: &EdgeColoredGraph, order: usize) -> Result<Vec<Blocked>, SaturationError> {
    (0..g.n() as u32)
        .map(|v| blocked_pendant_colors(g, v, order))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_g_star, build_h, build_h_star, build_rainbow_clique};
    use crate::graph::EdgeColoredGraph;

    fn colors(cs: &[u32]) -> Blocked {
        Blocked::Colors(ColorSet::from_colors(cs.iter().copied()))
    }

    #[test]
    fn rainbow_freeness_examples() {
        assert!(is_rainbow_free(&build_h(6).unwrap(), 6));
        assert!(!is_rainbow_free(&build_rainbow_clique(4, 6).unwrap(), 4));
        assert!(is_rainbow_free(
            &EdgeColoredGraph::edgeless(10, 5).unwrap(),
            5
        ));
    }

    #[test]
    fn edgeless_graph_defects_are_total() {
        let g = EdgeColoredGraph::edgeless(5, 5).unwrap();
        let defects = saturation_defects(&g, 5, 5).unwrap();
        assert_eq!(defects.len(), 50);
        // Canonical order: pairs lexicographic, colors ascending.
        assert_eq!(
            defects[0],
            Defect {
                u: 0,
                v: 1,
                color: 1
            }
        );
        assert_eq!(
            defects[49],
            Defect {
                u: 3,
                v: 4,
                color: 5
            }
        );
    }

    #[test]
    fn two_blocks_of_five_are_saturated() {
        let g = build_g_star(2, 5).unwrap();
        assert_eq!(saturation_defects(&g, 5, 5).unwrap(), vec![]);
        assert!(is_saturated(&g, 5, 5).unwrap());
    }

    #[test]
    fn single_block_seven_is_saturated() {
        let h = build_h(7).unwrap();
        assert_eq!(saturation_defects(&h, 7, 9).unwrap(), vec![]);
    }

    #[test]
    fn monochromatic_triangle_is_saturated() {
        let g = EdgeColoredGraph::from_edge_list(3, 2, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(is_saturated(&g, 3, 2).unwrap());
    }

    #[test]
    fn graph_with_rainbow_path_is_not_saturated() {
        let g = build_rainbow_clique(4, 6).unwrap();
        assert!(!is_saturated(&g, 4, 6).unwrap());
        assert_eq!(
            saturation_defects(&g, 4, 6).unwrap_err(),
            SaturationError::NotRainbowFree { order: 4 }
        );
    }

    #[test]
    fn palette_mismatch_is_an_error() {
        let g = build_h(5).unwrap();
        assert_eq!(
            is_saturated(&g, 5, 9).unwrap_err(),
            SaturationError::PaletteMismatch {
                graph_t: 5,
                asked_t: 9
            }
        );
    }

    #[test]
    fn first_defect_reports_canonical_cell() {
        let g = EdgeColoredGraph::edgeless(5, 5).unwrap();
        assert_eq!(
            first_defect(&g, 5, 5).unwrap(),
            Some(Defect {
                u: 0,
                v: 1,
                color: 1
            })
        );
    }

    #[test]
    fn blocked_sets_for_block5() {
        let hs = build_h_star(5).unwrap();
        assert_eq!(blocked_pendant_colors(&hs, 1, 4).unwrap(), colors(&[2, 5]));
        assert_eq!(blocked_pendant_colors(&hs, 2, 4).unwrap(), colors(&[1, 4]));
        assert_eq!(blocked_pendant_colors(&hs, 0, 4).unwrap(), colors(&[]));
        assert_eq!(blocked_pendant_colors(&hs, 3, 4).unwrap(), colors(&[]));

        let h = build_h(5).unwrap();
        assert_eq!(blocked_pendant_colors(&h, 1, 4).unwrap(), colors(&[2]));
        assert_eq!(blocked_pendant_colors(&h, 2, 4).unwrap(), colors(&[1]));
        assert_eq!(blocked_pendant_colors(&h, 0, 4).unwrap(), colors(&[]));
    }

    #[test]
    fn blocked_tables_for_block6_and_block7() {
        let hs6 = build_h_star(6).unwrap();
        let table = blocked_table(&hs6, 5).unwrap();
        assert_eq!(
            table,
            vec![
                colors(&[]),
                colors(&[]),
                colors(&[1, 7]),
                colors(&[1, 6]),
                colors(&[]),
            ]
        );

        let h6 = build_h(6).unwrap();
        let table = blocked_table(&h6, 5).unwrap();
        assert_eq!(
            table,
            vec![
                colors(&[]),
                colors(&[]),
                colors(&[1]),
                colors(&[1]),
                colors(&[]),
                colors(&[]),
            ]
        );

        let hs7 = build_h_star(7).unwrap();
        let table = blocked_table(&hs7, 6).unwrap();
        assert_eq!(
            table,
            vec![
                colors(&[]),
                colors(&[]),
                colors(&[]),
                colors(&[9]),
                colors(&[8]),
                colors(&[]),
            ]
        );
    }

    #[test]
    fn single_edge_blocks_its_own_color() {
        let g = EdgeColoredGraph::from_edge_list(2, 7, [(0, 1, 7)]).unwrap();
        assert_eq!(blocked_pendant_colors(&g, 0, 2).unwrap(), colors(&[7]));
    }

    #[test]
    fn no_path_means_all_blocked() {
        // Monochromatic two-leaf star: no rainbow path on 3 vertices starts
        // at the center.
        let g = EdgeColoredGraph::from_edge_list(3, 2, [(0, 1, 1), (0, 2, 1)]).unwrap();
        assert_eq!(blocked_pendant_colors(&g, 0, 3).unwrap(), Blocked::All);
        assert_eq!(Blocked::All.as_color_set(2), ColorSet::full(2));
        // An isolated vertex has no order-2 path either.
        let g = EdgeColoredGraph::edgeless(2, 3).unwrap();
        assert_eq!(blocked_pendant_colors(&g, 0, 2).unwrap(), Blocked::All);
    }

    #[test]
    fn blocked_argument_validation() {
        let g = EdgeColoredGraph::edgeless(3, 2).unwrap();
        assert!(matches!(
            blocked_pendant_colors(&g, 5, 2),
            Err(SaturationError::Rainbow(
                RainbowError::VertexOutOfRange { .. }
            ))
        ));
        assert!(matches!(
            blocked_pendant_colors(&g, 0, 4),
            Err(SaturationError::OrderOutOfRange { order: 4, n: 3 })
        ));
    }

    #[test]
    fn pendant_consistency_spot_check() {
        // c blocked at v  <=>  G plus a pendant at v colored c has no
        // rainbow path on order+1 vertices through the pendant edge.
        let g = build_h_star(5).unwrap();
        let order = 4;
        for v in 0..g.n() as u32 {
            let blocked = blocked_pendant_colors(&g, v, order).unwrap();
            for c in 1..=g.t() {
                let (aug, pendant) = g.with_pendant(v, c).unwrap();
                let witness = find_rainbow_path(&aug, order + 1, Some((v, pendant))).unwrap();
                assert_eq!(
                    blocked.as_color_set(g.t()).contains(c),
                    witness.is_none(),
                    "v = {v}, c = {c}"
                );
            }
        }
    }
}
