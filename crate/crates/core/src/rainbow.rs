//! Rainbow path detection and enumeration.
//!
//! The engine is a depth-first extension of simple paths carrying a
//! visited-vertex set and a used-color bitmask; any branch whose next edge
//! repeats a used color is pruned. Branch order is fixed (start vertices
//! ascending, neighbors ascending by id), so the first witness found is the
//! lexicographically least one and results are schedule-independent.
//!
//! `naive_contains_rainbow_path` is the deliberately unpruned oracle: it
//! enumerates every ordered tuple of distinct vertices and exists solely to
//! cross-validate the engine on small inputs.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{EdgeColoredGraph, PathWitness};

/// Throughout this module `order` counts the *vertices* of a path, so a
/// path of order `k` has `k - 1` edges.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("path order must be at least 1")]
    InvalidOrder,
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("required edge {{{0}, {1}}} is not an edge of the graph")]
    RequiredEdgeMissing(u32, u32),
    #[error("naive oracle guard exceeded (n = {n} > 10 or order = {order} > 9)")]
    NaiveGuardExceeded { n: usize, order: usize },
}

struct Walk<'g> {
    g: &'g EdgeColoredGraph,
    order: usize,
    require: Option<(u32, u32)>,
    path: Vec<u32>,
    colors: Vec<u32>,
    visited: Vec<bool>,
    used_colors: u64,
    require_used: bool,
}

impl<'g> Walk<'g> {
    fn new(g: &'g EdgeColoredGraph, order: usize, require: Option<(u32, u32)>) -> Self {
        Walk {
            g,
            order,
            require,
            path: Vec::with_capacity(order),
            colors: Vec::with_capacity(order.saturating_sub(1)),
            visited: vec![false; g.n()],
            used_colors: 0,
            require_used: false,
        }
    }

    /// Necessary condition for the required edge to still be traversable
    /// from the current state. Exact pruning: a pruned branch can never
    /// complete into a path containing the required edge.
    fn require_feasible(&self) -> bool {
        let Some((a, b)) = self.require else {
            return true;
        };
        if self.require_used {
            return true;
        }
        let head = *self.path.last().expect("non-empty path");
        let remaining = self.order - self.path.len();
        match (self.visited[a as usize], self.visited[b as usize]) {
            // Both endpoints on the path but the edge untraversed: the edge
            // would need a visited head, impossible.
            (true, true) => false,
            // The visited endpoint must still be the head, otherwise it is
            // interior and can never be extended across the edge.
            (true, false) => head == a && remaining >= 1,
            (false, true) => head == b && remaining >= 1,
            (false, false) => remaining >= 2,
        }
    }

    fn extend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32], &[u32]) -> ControlFlow<()>,
    {
        if self.path.len() == self.order {
            if self.require.is_none() || self.require_used {
                return visit(&self.path, &self.colors);
            }
            return ControlFlow::Continue(());
        }
        if !self.require_feasible() {
            return ControlFlow::Continue(());
        }
        let head = *self.path.last().expect("non-empty path");
        let g = self.g;
        for &(w, c) in g.neighbors(head) {
            if self.visited[w as usize] {
                continue;
            }
            let bit = 1u64 << (c - 1);
            if self.used_colors & bit != 0 {
                continue;
            }
            let crosses_required = match self.require {
                Some((a, b)) => (head == a && w == b) || (head == b && w == a),
                None => false,
            };
            self.visited[w as usize] = true;
            self.path.push(w);
            self.colors.push(c);
            self.used_colors |= bit;
            let saved = self.require_used;
            if crosses_required {
                self.require_used = true;
            }
            let flow = self.extend(visit);
            self.require_used = saved;
            self.used_colors &= !bit;
            self.colors.pop();
            self.path.pop();
            self.visited[w as usize] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn run_from<F>(&mut self, start: u32, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32], &[u32]) -> ControlFlow<()>,
    {
        self.visited[start as usize] = true;
        self.path.push(start);
        let flow = self.extend(visit);
        self.path.pop();
        self.visited[start as usize] = false;
        flow
    }
}

/// Visits every rainbow path on exactly `order` vertices, in canonical
/// branch order. `starts` restricts the first vertex; `require` restricts
/// to paths traversing that edge. The visitor can stop the walk early.
pub(crate) fn walk_rainbow_paths<F>(
    g: &EdgeColoredGraph,
    starts: impl IntoIterator<Item = u32>,
    order: usize,
    require: Option<(u32, u32)>,
    mut visit: F,
) where
    F: FnMut(&[u32], &[u32]) -> ControlFlow<()>,
{
    if order == 0 || order > g.n() {
        return;
    }
    let mut walk = Walk::new(g, order, require);
    for s in starts {
        if walk.run_from(s, &mut visit).is_break() {
            return;
        }
    }
}

/// Finds a rainbow path on exactly `order` vertices, optionally required to
/// traverse `require_edge`. Returns the lexicographically least witness (by
/// vertex sequence) or `None` when no such path exists; `order > n` yields
/// `None`, not an error.
pub fn find_rainbow_path(
    g: &EdgeColoredGraph,
    order: usize,
    require_edge: Option<(u32, u32)>,
) -> Result<Option<PathWitness>, RainbowError> {
    if order == 0 {
        return Err(RainbowError::InvalidOrder);
    }
    let require = match require_edge {
        Some((a, b)) => {
            if !g.has_edge(a, b) {
                return Err(RainbowError::RequiredEdgeMissing(a, b));
            }
            Some(if a < b { (a, b) } else { (b, a) })
        }
        None => None,
    };
    let mut found = None;
    walk_rainbow_paths(g, 0..g.n() as u32, order, require, |vs, cs| {
        found = Some(PathWitness {
            vertices: vs.to_vec(),
            colors: cs.to_vec(),
        });
        ControlFlow::Break(())
    });
    Ok(found)
}

/// Boolean form of [`find_rainbow_path`] with no required edge.
pub fn contains_rainbow_path(g: &EdgeColoredGraph, order: usize) -> bool {
    if order == 0 {
        return false;
    }
    find_rainbow_path(g, order, None)
        .expect("no required edge, cannot fail")
        .is_some()
}

/// All rainbow paths on exactly `order` vertices starting at `v`, in
/// canonical branch order. The enumeration is complete.
pub fn enumerate_rainbow_paths_from(
    g: &EdgeColoredGraph,
    v: u32,
    order: usize,
) -> Result<Vec<PathWitness>, RainbowError> {
    if order == 0 {
        return Err(RainbowError::InvalidOrder);
    }
    if v as usize >= g.n() {
        return Err(RainbowError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let mut out = Vec::new();
    walk_rainbow_paths(g, [v], order, None, |vs, cs| {
        out.push(PathWitness {
            vertices: vs.to_vec(),
            colors: cs.to_vec(),
        });
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Unpruned oracle with the same contract as [`contains_rainbow_path`]:
/// enumerates all ordered tuples of distinct vertices and tests each one.
/// Guarded to `n <= 10`, `order <= 9`.
pub fn naive_contains_rainbow_path(
    g: &EdgeColoredGraph,
    order: usize,
) -> Result<bool, RainbowError> {
    if order == 0 {
        return Err(RainbowError::InvalidOrder);
    }
    if g.n() > 10 || order > 9 {
        return Err(RainbowError::NaiveGuardExceeded { n: g.n(), order });
    }
    let mut tuple: Vec<u32> = Vec::with_capacity(order);
    Ok(any_tuple_is_rainbow_path(g, order, &mut tuple))
}

fn any_tuple_is_rainbow_path(g: &EdgeColoredGraph, order: usize, tuple: &mut Vec<u32>) -> bool {
    if tuple.len() == order {
        return tuple_is_rainbow_path(g, tuple);
    }
    for v in 0..g.n() as u32 {
        if tuple.contains(&v) {
            continue;
        }
        tuple.push(v);
        if any_tuple_is_rainbow_path(g, order, tuple) {
            tuple.pop();
            return true;
        }
        tuple.pop();
    }
    false
}

fn tuple_is_rainbow_path(g: &EdgeColoredGraph, tuple: &[u32]) -> bool {
    let mut used = 0u64;
    for pair in tuple.windows(2) {
        match g.color_of(pair[0], pair[1]) {
            None => return false,
            Some(c) => {
                let bit = 1u64 << (c - 1);
                if used & bit != 0 {
                    return false;
                }
                used |= bit;
            }
        }
    }
    true
}
