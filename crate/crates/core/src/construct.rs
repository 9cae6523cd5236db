//! Generators for the saturated graph families.
//!
//! The building block `H` on `ell >= 5` vertices consists of a clique on
//! vertices `0..ell-2` whose edge `{i, j}` is colored `i + j`, plus two
//! extra degree-2 vertices: `ell-2` (joined to `ell-3` and `ell-4`) and
//! `ell-1` (joined to the same pair with the two top colors swapped).
//! Its palette is exactly `[2*ell - 5]`, every color appears, the coloring
//! is proper, and `H` carries no rainbow path on `ell` vertices.
//!
//! `H*` is `H` minus its last vertex; `kH` is the `k`-fold disjoint union.
//! `assemble_theorem_graph` combines copies of `H` with small rainbow
//! leftovers (cliques, one colored edge, an isolated vertex) according to
//! the residue `n mod ell`, yielding the witness families behind the
//! ceiling-form edge-count bound.

use thiserror::Error;

use crate::graph::{EdgeColoredGraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("block order ell = {0} too small (need ell >= 5)")]
    OrderTooSmall(u32),
    #[error("multiplicity k = {0} too small (need k >= 1)")]
    MultiplicityTooSmall(u32),
    #[error("clique order a = {0} too small (need a >= 1)")]
    CliqueTooSmall(u32),
    #[error("rainbow clique on {a} vertices needs {needed} colors, palette has {available}")]
    InsufficientPalette { a: u32, needed: u32, available: u32 },
    #[error("n = {n} too small for block order ell = {ell}")]
    TooFewVertices { n: usize, ell: u32 },
    #[error("recipe for n = {n}, ell = {ell} needs {required_palette} colors, palette has {palette}: {detail}")]
    InfeasibleRecipe {
        n: usize,
        ell: u32,
        required_palette: u32,
        palette: u32,
        detail: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Palette size used by the block family: `2*ell - 5`.
pub fn block_palette(ell: u32) -> u32 {
    2 * ell - 5
}

/// Edge count of one block: `C(ell-2, 2) + 4`.
pub fn block_edge_count(ell: u32) -> usize {
    let m = (ell - 2) as usize;
    m * (m - 1) / 2 + 4
}

fn block_edges(ell: u32) -> Vec<(u32, u32, u32)> {
    let top = 2 * ell - 5;
    let mut edges = Vec::with_capacity(block_edge_count(ell));
    for i in 0..ell - 2 {
        for j in (i + 1)..ell - 2 {
            edges.push((i, j, i + j));
        }
    }
    // The two degree-2 vertices share the top two colors, crossed.
    edges.push((ell - 2, ell - 3, top));
    edges.push((ell - 2, ell - 4, top - 1));
    edges.push((ell - 1, ell - 3, top - 1));
    edges.push((ell - 1, ell - 4, top));
    edges
}

/// The building block `H` on `ell` vertices with palette `[2*ell - 5]`.
pub fn build_h(ell: u32) -> Result<EdgeColoredGraph, ConstructError> {
    if ell < 5 {
        return Err(ConstructError::OrderTooSmall(ell));
    }
    Ok(EdgeColoredGraph::from_edge_list(
        ell as usize,
        block_palette(ell),
        block_edges(ell),
    )?)
}

/// `H` with its last vertex removed: `ell - 1` vertices, two fewer edges,
/// same palette.
pub fn build_h_star(ell: u32) -> Result<EdgeColoredGraph, ConstructError> {
    if ell < 5 {
        return Err(ConstructError::OrderTooSmall(ell));
    }
    let edges: Vec<_> = block_edges(ell)
        .into_iter()
        .filter(|&(u, v, _)| u != ell - 1 && v != ell - 1)
        .collect();
    Ok(EdgeColoredGraph::from_edge_list(
        (ell - 1) as usize,
        block_palette(ell),
        edges,
    )?)
}

/// Disjoint union of `k` copies of `H`. `k = 1` is permitted for testing
/// even though the family is usually taken with `k >= 2`.
pub fn build_g_star(k: u32, ell: u32) -> Result<EdgeColoredGraph, ConstructError> {
    if k < 1 {
        return Err(ConstructError::MultiplicityTooSmall(k));
    }
    let h = build_h(ell)?;
    let parts = vec![h; k as usize];
    Ok(EdgeColoredGraph::disjoint_union(&parts)?)
}

/// Complete graph on `a` vertices with all edge colors distinct: edges in
/// canonical order receive colors `1..=C(a,2)`.
pub fn build_rainbow_clique(a: u32, t: u32) -> Result<EdgeColoredGraph, ConstructError> {
    rainbow_clique_from(a, t, 0)
}

/// Rainbow clique whose colors start above `color_base`, so two cliques
/// with disjoint bases share no color.
fn rainbow_clique_from(
    a: u32,
    t: u32,
    color_base: u32,
) -> Result<EdgeColoredGraph, ConstructError> {
    if a < 1 {
        return Err(ConstructError::CliqueTooSmall(a));
    }
    let needed = color_base + a * (a - 1) / 2;
    if needed > t {
        return Err(ConstructError::InsufficientPalette {
            a,
            needed,
            available: t,
        });
    }
    let mut edges = Vec::new();
    let mut next = color_base + 1;
    for u in 0..a {
        for v in (u + 1)..a {
            edges.push((u, v, next));
            next += 1;
        }
    }
    Ok(EdgeColoredGraph::from_edge_list(a as usize, t, edges)?)
}

/// A leftover component in a residue-case assembly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    /// Rainbow clique on `a` vertices colored `color_base+1 ..`.
    RainbowClique {
        a: u32,
        color_base: u32,
    },
    /// A single edge with a fixed color.
    ColoredEdge {
        color: u32,
    },
    IsolatedVertex,
}

impl Piece {
    fn vertex_count(&self) -> usize {
        match self {
            Piece::RainbowClique { a, .. } => *a as usize,
            Piece::ColoredEdge { .. } => 2,
            Piece::IsolatedVertex => 1,
        }
    }

    fn edge_count(&self) -> usize {
        match self {
            Piece::RainbowClique { a, .. } => (*a as usize) * (*a as usize - 1) / 2,
            Piece::ColoredEdge { .. } => 1,
            Piece::IsolatedVertex => 0,
        }
    }

    /// Highest color the piece draws from the palette.
    fn required_palette(&self) -> u32 {
        match self {
            Piece::RainbowClique { a, color_base } => color_base + a * (a - 1) / 2,
            Piece::ColoredEdge { color } => *color,
            Piece::IsolatedVertex => 0,
        }
    }

    fn build(&self, t: u32) -> Result<EdgeColoredGraph, ConstructError> {
        match self {
            Piece::RainbowClique { a, color_base } => rainbow_clique_from(*a, t, *color_base),
            Piece::ColoredEdge { color } => {
                Ok(EdgeColoredGraph::from_edge_list(2, t, [(0, 1, *color)])?)
            }
            Piece::IsolatedVertex => Ok(EdgeColoredGraph::edgeless(1, t)?),
        }
    }
}

/// A residue-case witness graph together with its recipe metadata.
#[derive(Debug, Clone)]
pub struct Assembly {
    pub graph: EdgeColoredGraph,
    /// Edge count computed from component counts; always equals
    /// `graph.edge_count()`.
    pub expected_edges: usize,
    pub block_copies: usize,
    pub extras: Vec<Piece>,
    /// Palette the graph was built with.
    pub palette: u32,
    /// Present when the palette had to be raised above `2*ell - 5`.
    pub palette_note: Option<String>,
}

/// The leftover pieces for residue `r = n mod ell`.
///
/// For `ell = 5`, the two-triangle leftover must be colored with disjoint
/// palettes (a shared color always leaves a blocked cross edge), so it
/// needs 6 colors; the rainbow `K_4` leftover needs 6 as well. Both exceed
/// `2*ell - 5 = 5`.
fn recipe_extras(n: usize, ell: u32) -> Vec<Piece> {
    let r = (n % ell as usize) as u32;
    match (ell, r) {
        (_, 0) => vec![],
        (5, 1) => vec![
            Piece::RainbowClique {
                a: 3,
                color_base: 0,
            },
            Piece::RainbowClique {
                a: 3,
                color_base: 3,
            },
        ],
        (5, 2) => vec![Piece::ColoredEdge { color: 3 }],
        (5, 3) => vec![Piece::RainbowClique {
            a: 3,
            color_base: 0,
        }],
        (5, 4) => vec![Piece::RainbowClique {
            a: 4,
            color_base: 0,
        }],
        (6, 1) => vec![
            Piece::RainbowClique {
                a: 3,
                color_base: 0,
            },
            Piece::RainbowClique {
                a: 4,
                color_base: 0,
            },
        ],
        (6, 2) => vec![Piece::ColoredEdge { color: 4 }],
        (6, 3) => vec![Piece::RainbowClique {
            a: 3,
            color_base: 0,
        }],
        (6, 4) => vec![Piece::RainbowClique {
            a: 4,
            color_base: 0,
        }],
        (6, 5) => vec![
            Piece::RainbowClique {
                a: 4,
                color_base: 0,
            },
            Piece::RainbowClique {
                a: 4,
                color_base: 0,
            },
            Piece::RainbowClique {
                a: 3,
                color_base: 0,
            },
        ],
        (_, 1) => vec![Piece::IsolatedVertex],
        (_, 2) => vec![Piece::ColoredEdge { color: 1 }],
        (_, a) => vec![Piece::RainbowClique { a, color_base: 0 }],
    }
}

/// Builds the residue-case witness graph for `n` vertices and block order
/// `ell`, at palette `t`. Fails with a structured infeasibility when the
/// recipe draws more colors than `t` provides.
pub fn assemble_with_palette(n: usize, ell: u32, t: u32) -> Result<Assembly, ConstructError> {
    if ell < 5 {
        return Err(ConstructError::OrderTooSmall(ell));
    }
    if n < ell as usize {
        return Err(ConstructError::TooFewVertices { n, ell });
    }
    let extras = recipe_extras(n, ell);
    let extra_vertices: usize = extras.iter().map(Piece::vertex_count).sum();
    if extra_vertices > n || !(n - extra_vertices).is_multiple_of(ell as usize) {
        return Err(ConstructError::TooFewVertices { n, ell });
    }
    let required = extras
        .iter()
        .map(Piece::required_palette)
        .max()
        .unwrap_or(0)
        .max(block_palette(ell));
    if required > t {
        let detail = extras
            .iter()
            .map(|p| match p {
                Piece::RainbowClique { a, color_base } if *color_base > 0 => format!(
                    "rainbow K_{a} on colors {}..{}",
                    color_base + 1,
                    p.required_palette()
                ),
                Piece::RainbowClique { a, .. } => {
                    format!("rainbow K_{a} needs {} colors", p.required_palette())
                }
                Piece::ColoredEdge { color } => format!("edge colored {color}"),
                Piece::IsolatedVertex => "isolated vertex".to_string(),
            })
            .collect::<Vec<_>>()
            .join(", ");
        return Err(ConstructError::InfeasibleRecipe {
            n,
            ell,
            required_palette: required,
            palette: t,
            detail,
        });
    }
    let block_copies = (n - extra_vertices) / ell as usize;
    let block = build_h(ell)?.with_palette(t)?;
    let mut parts = vec![block; block_copies];
    for piece in &extras {
        parts.push(piece.build(t)?);
    }
    let graph = EdgeColoredGraph::disjoint_union(&parts)?;
    let expected_edges =
        block_copies * block_edge_count(ell) + extras.iter().map(Piece::edge_count).sum::<usize>();
    debug_assert_eq!(graph.edge_count(), expected_edges);
    Ok(Assembly {
        graph,
        expected_edges,
        block_copies,
        extras,
        palette: t,
        palette_note: None,
    })
}

/// Builds the residue-case witness graph at the family palette
/// `t = 2*ell - 5`.
///
/// For `ell = 5` the residues `1` and `4` genuinely need a sixth color
/// (disjoint triangles, rainbow `K_4`); those two sub-cases are built at
/// `t = 6` and flagged in `palette_note`. For `ell >= 7` an oversized
/// rainbow clique leftover is reported as infeasible instead, since no
/// palette relaxation is on record for those residues.
pub fn assemble_theorem_graph(n: usize, ell: u32) -> Result<Assembly, ConstructError> {
    let base = block_palette(ell);
    match assemble_with_palette(n, ell, base) {
        Ok(assembly) => Ok(assembly),
        Err(ConstructError::InfeasibleRecipe {
            required_palette, ..
        }) if ell == 5 => {
            let mut assembly = assemble_with_palette(n, ell, required_palette)?;
            assembly.palette_note = Some(format!(
                "palette raised from {base} to {required_palette}: leftover components need \
                 {required_palette} distinct colors"
            ));
            Ok(assembly)
        }
        Err(e) => Err(e),
    }
}

/// The closed-form edge count of the residue-case graph, as an exact
/// integer. Defined for every residue, including the ones whose recipe is
/// infeasible at the family palette.
pub fn closed_form_case_edges(n: usize, ell: u32) -> Option<usize> {
    if ell < 5 || n < ell as usize {
        return None;
    }
    let r = n % ell as usize;
    let numer = match (ell, r) {
        (5, 0) => 7 * n,
        (5, 1) => 7 * n - 12,
        (5, 2) => 7 * n - 9,
        (5, 3) => 7 * n - 6,
        (5, 4) => 7 * n + 2,
        (6, 0) => 5 * n,
        (6, 1) => 5 * n - 8,
        (6, 2) => 5 * n - 7,
        (6, 3) => 5 * n - 6,
        (6, 4) => 5 * n - 2,
        (6, 5) => 5 * n - 10,
        _ => {
            let a = r;
            return Some(
                (n - a) / ell as usize * block_edge_count(ell) + a * a.saturating_sub(1) / 2,
            );
        }
    };
    let denom = if ell == 5 { 5 } else { 3 };
    debug_assert_eq!(numer % denom, 0);
    Some(numer / denom)
}
