//! Exhaustive desk-scale search for minimum saturated graphs, plus the
//! closed-form bound calculators.
//!
//! The search iterates `m = 0, 1, 2, ...` over labeled graphs with `m`
//! edges and over colorings in `[t]^m`, with two optional prunings that
//! never change the answer:
//!
//! * canonical-form pruning skips an edge set unless its pair-index bitmask
//!   is minimal over all vertex permutations (a bounded permutation scan,
//!   used for n <= 7; every isomorphism class keeps at least one
//!   representative);
//! * color-symmetry pruning enumerates colorings as restricted-growth
//!   strings (color `c` may appear only after all of `1..c` have), sound
//!   because saturation is invariant under color bijections.
//!
//! Every level is scanned in full, in a fixed order, so completed outcomes
//! are independent of the worker count.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::EdgeColoredGraph;
use crate::saturation::is_saturated;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("path order ell = {ell} too small (need ell >= {min})")]
    OrderTooSmall { ell: usize, min: usize },
    #[error("need n >= ell, got n = {n}, ell = {ell}")]
    TooFewVertices { n: usize, ell: usize },
    #[error("{what} = {value} exceeds budget guard {limit}")]
    BudgetGuard {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("budget exhausted before the search space was covered")]
    BudgetExhausted,
}

/// Limits guarding exhaustive search.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    pub max_n: usize,
    pub max_t: u32,
    pub max_edges: usize,
    pub max_colorings: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_n: 6,
            max_t: 8,
            max_edges: usize::MAX, // capped to C(n,2) at run time
            max_colorings: 10_000_000_000,
            time_limit: Duration::from_secs(600),
        }
    }
}

impl SearchBudget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }
}

/// Pruning switches; both default on. Disabling them multiplies work but
/// must never change the reported minimum.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub canonical_pruning: bool,
    pub color_symmetry_pruning: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            canonical_pruning: true,
            color_symmetry_pruning: true,
        }
    }
}

/// Result of a minimum search.
///
/// `minimum` is present only with a `witness` that is saturated and has
/// exactly that many edges. `exhausted` certifies that no saturated graph
/// with fewer edges exists; when false, the outcome is best-known partial
/// information after a budget stop.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub minimum: Option<usize>,
    pub witness: Option<EdgeColoredGraph>,
    pub exhausted: bool,
    /// Colorings tested; deterministic whenever the search completed.
    pub colorings_tested: u64,
    pub wall: Duration,
}

fn pair_list(n: usize) -> Vec<(u32, u32)> {
    let mut pairs = Vec::with_capacity(n * n.max(1) / 2);
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            pairs.push((u, v));
        }
    }
    pairs
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    fn rec(k: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == current.len() {
            out.push(current.clone());
            return;
        }
        for i in k..current.len() {
            current.swap(k, i);
            rec(k + 1, current, out);
            current.swap(k, i);
        }
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..n as u32).collect();
    rec(0, &mut current, &mut out);
    out
}

/// The map each vertex permutation induces on pair indices. Only built for
/// n <= 7; beyond that the permutation scan is no longer cheap and
/// canonical pruning is skipped.
fn pair_permutations(n: usize, pairs: &[(u32, u32)]) -> Vec<Vec<u16>> {
    if n > 7 {
        return Vec::new();
    }
    let mut index = vec![vec![0u16; n]; n];
    for (k, &(u, v)) in pairs.iter().enumerate() {
        index[u as usize][v as usize] = k as u16;
        index[v as usize][u as usize] = k as u16;
    }
    permutations(n)
        .into_iter()
        .map(|perm| {
            pairs
                .iter()
                .map(|&(u, v)| index[perm[u as usize] as usize][perm[v as usize] as usize])
                .collect()
        })
        .collect()
}

fn remap_mask(mask: u64, map: &[u16]) -> u64 {
    let mut out = 0u64;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1u64 << map[i];
    }
    out
}

fn is_canonical_mask(mask: u64, pair_perms: &[Vec<u16>]) -> bool {
    pair_perms.iter().all(|map| remap_mask(mask, map) >= mask)
}

/// Lexicographic combinations of `m` indices out of `0..total`.
fn combinations(total: usize, m: usize) -> Vec<Vec<u16>> {
    fn rec(start: usize, total: usize, m: usize, current: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        let needed = m - current.len();
        for i in start..=total - needed {
            current.push(i as u16);
            rec(i + 1, total, m, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if m <= total {
        let mut current = Vec::with_capacity(m);
        rec(0, total, m, &mut current, &mut out);
    }
    out
}

struct ScanCtx<'a> {
    n: usize,
    t: u32,
    ell: usize,
    pairs: &'a [(u32, u32)],
    deadline: Instant,
    restricted_colors: bool,
}

struct EdgeSetScan {
    colorings: u64,
    found: Option<EdgeColoredGraph>,
    aborted: bool,
}

/// Tests every coloring of one edge set, in restricted-growth (or full)
/// order, returning the first saturated graph if any.
fn scan_edge_set(ctx: &ScanCtx<'_>, eset: &[u16]) -> EdgeSetScan {
    fn rec(
        ctx: &ScanCtx<'_>,
        eset: &[u16],
        colors: &mut [u32],
        depth: usize,
        max_used: u32,
        scan: &mut EdgeSetScan,
    ) {
        if scan.found.is_some() || scan.aborted {
            return;
        }
        if depth == eset.len() {
            scan.colorings += 1;
            if scan.colorings.is_multiple_of(1024) && Instant::now() >= ctx.deadline {
                scan.aborted = true;
                return;
            }
            let edges: Vec<(u32, u32, u32)> = eset
                .iter()
                .enumerate()
                .map(|(i, &k)| {
                    let (u, v) = ctx.pairs[k as usize];
                    (u, v, colors[i])
                })
                .collect();
            let g = EdgeColoredGraph::from_edge_list(ctx.n, ctx.t, edges)
                .expect("enumerated edges are valid");
            if is_saturated(&g, ctx.ell, ctx.t).expect("palette matches") {
                scan.found = Some(g);
            }
            return;
        }
        let limit = if ctx.restricted_colors {
            (max_used + 1).min(ctx.t)
        } else {
            ctx.t
        };
        for c in 1..=limit {
            colors[depth] = c;
            rec(ctx, eset, colors, depth + 1, max_used.max(c), scan);
            if scan.found.is_some() || scan.aborted {
                return;
            }
        }
    }
    let mut scan = EdgeSetScan {
        colorings: 0,
        found: None,
        aborted: false,
    };
    let mut colors = vec![0u32; eset.len()];
    rec(ctx, eset, &mut colors, 0, 0, &mut scan);
    scan
}

struct LevelOutcome {
    /// First saturated graph in scan order, if the scan got that far
    /// without hitting the deadline.
    found: Option<EdgeColoredGraph>,
    colorings: u64,
    aborted: bool,
}

/// Scans all edge sets with exactly `m` edges, in parallel; the fold over
/// ranked results keeps the outcome schedule-independent.
fn scan_level(
    ell: usize,
    m: usize,
    ctx: &ScanCtx<'_>,
    pair_perms: &[Vec<u16>],
    canonical_pruning: bool,
) -> LevelOutcome {
    debug_assert_eq!(ctx.ell, ell);
    let esets = combinations(ctx.pairs.len(), m);
    let per_set: Vec<EdgeSetScan> = esets
        .par_iter()
        .map(|eset| {
            if Instant::now() >= ctx.deadline {
                return EdgeSetScan {
                    colorings: 0,
                    found: None,
                    aborted: true,
                };
            }
            if canonical_pruning && !pair_perms.is_empty() {
                let mask = eset.iter().fold(0u64, |acc, &i| acc | (1u64 << i));
                if !is_canonical_mask(mask, pair_perms) {
                    return EdgeSetScan {
                        colorings: 0,
                        found: None,
                        aborted: false,
                    };
                }
            }
            scan_edge_set(ctx, eset)
        })
        .collect();
    let mut colorings = 0u64;
    let mut found = None;
    let mut aborted = false;
    for scan in per_set {
        colorings += scan.colorings;
        if found.is_none() {
            // A deadline abort at or before the first hit taints the level.
            if scan.aborted {
                aborted = true;
            }
            if !aborted {
                found = scan.found;
            }
        }
    }
    LevelOutcome {
        found,
        colorings,
        aborted,
    }
}

fn check_guards(n: usize, t: u32, budget: &SearchBudget) -> Result<(), SearchError> {
    if n > budget.max_n {
        return Err(SearchError::BudgetGuard {
            what: "n",
            value: n as u64,
            limit: budget.max_n as u64,
        });
    }
    if t > budget.max_t {
        return Err(SearchError::BudgetGuard {
            what: "t",
            value: t as u64,
            limit: budget.max_t as u64,
        });
    }
    Ok(())
}

/// Least edge count of a saturated `t`-colored graph on `n` labeled
/// vertices, with a witness. Requires `n >= ell >= 3` and budget clearance.
pub fn min_saturated_size(
    n: usize,
    ell: usize,
    t: u32,
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    min_saturated_size_with_options(n, ell, t, budget, SearchOptions::default())
}

/// [`min_saturated_size`] with explicit pruning switches.
pub fn min_saturated_size_with_options(
    n: usize,
    ell: usize,
    t: u32,
    budget: &SearchBudget,
    options: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    if ell < 3 {
        return Err(SearchError::OrderTooSmall { ell, min: 3 });
    }
    if n < ell {
        return Err(SearchError::TooFewVertices { n, ell });
    }
    check_guards(n, t, budget)?;
    let start = Instant::now();
    let pairs = pair_list(n);
    let pair_perms = pair_permutations(n, &pairs);
    let ctx = ScanCtx {
        n,
        t,
        ell,
        pairs: &pairs,
        deadline: start + budget.time_limit,
        restricted_colors: options.color_symmetry_pruning,
    };
    let max_m = pairs.len().min(budget.max_edges);
    let mut colorings_tested = 0u64;
    for m in 0..=max_m {
        let level = scan_level(ell, m, &ctx, &pair_perms, options.canonical_pruning);
        colorings_tested += level.colorings;
        if !level.aborted {
            if let Some(witness) = level.found {
                return Ok(SearchOutcome {
                    minimum: Some(m),
                    witness: Some(witness),
                    exhausted: true,
                    colorings_tested,
                    wall: start.elapsed(),
                });
            }
        }
        if level.aborted || colorings_tested > budget.max_colorings {
            return Ok(SearchOutcome {
                minimum: None,
                witness: None,
                exhausted: false,
                colorings_tested,
                wall: start.elapsed(),
            });
        }
    }
    // Reachable only under a max_edges budget tighter than C(n,2); the
    // monochromatic complete graph is always saturated.
    Ok(SearchOutcome {
        minimum: None,
        witness: None,
        exhausted: false,
        colorings_tested,
        wall: start.elapsed(),
    })
}

/// Certifies that no saturated `t`-colored graph on `n` vertices has at
/// most `n - 2` edges, by exhausting that restricted space. Requires
/// `ell >= 4`.
pub fn verify_lower_bound(
    n: usize,
    ell: usize,
    t: u32,
    budget: &SearchBudget,
) -> Result<bool, SearchError> {
    if ell < 4 {
        return Err(SearchError::OrderTooSmall { ell, min: 4 });
    }
    check_guards(n, t, budget)?;
    let start = Instant::now();
    let pairs = pair_list(n);
    let pair_perms = pair_permutations(n, &pairs);
    let ctx = ScanCtx {
        n,
        t,
        ell,
        pairs: &pairs,
        deadline: start + budget.time_limit,
        restricted_colors: true,
    };
    let mut colorings_tested = 0u64;
    for m in 0..=n.saturating_sub(2).min(pairs.len()) {
        let level = scan_level(ell, m, &ctx, &pair_perms, true);
        colorings_tested += level.colorings;
        if level.aborted || colorings_tested > budget.max_colorings {
            return Err(SearchError::BudgetExhausted);
        }
        if level.found.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn choose2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// Ceiling-form upper bound via blocks of `ell` vertices:
/// `ceil(n/ell) * (C(ell-2,2) + 4)`. Requires `ell >= 5`, `n >= 1`.
pub fn bound_new(n: usize, ell: u32) -> usize {
    assert!(ell >= 5 && n >= 1, "bound_new requires ell >= 5, n >= 1");
    n.div_ceil(ell as usize) * (choose2(ell as usize - 2) + 4)
}

/// Ceiling-form upper bound via rainbow cliques on `ell - 1` vertices:
/// `ceil(n/(ell-1)) * C(ell-1,2)`. Requires `ell >= 2`, `n >= 1`.
pub fn bound_old(n: usize, ell: u32) -> usize {
    assert!(ell >= 2 && n >= 1, "bound_old requires ell >= 2, n >= 1");
    n.div_ceil(ell as usize - 1) * choose2(ell as usize - 1)
}

/// One row of the bound comparison table.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BoundsRow {
    pub ell: u32,
    pub n: usize,
    pub old: usize,
    pub new: usize,
    pub improved: bool,
}

/// Bound comparison at `n = multiplier * ell` for each `ell` in the range.
pub fn bounds_table(ell_from: u32, ell_to: u32, multiplier: usize) -> Vec<BoundsRow> {
    (ell_from.max(5)..=ell_to)
        .map(|ell| {
            let n = multiplier * ell as usize;
            let old = bound_old(n, ell);
            let new = bound_new(n, ell);
            BoundsRow {
                ell,
                n,
                old,
                new,
                improved: new < old,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::write_ecg;

    #[test]
    fn bound_values() {
        assert_eq!(bound_new(10, 5), 14);
        assert_eq!(bound_old(10, 5), 18);
        assert_eq!(bound_new(12, 6), 20);
        assert_eq!(bound_old(12, 6), 30);
        for ell in 5..=12u32 {
            assert_eq!(
                bound_new(ell as usize, ell),
                choose2(ell as usize - 2) + 4,
                "single block at n = ell"
            );
        }
    }

    #[test]
    fn bounds_table_rows() {
        let rows = bounds_table(5, 7, 2);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].n, 10);
        assert_eq!(rows[0].old, 18);
        assert_eq!(rows[0].new, 14);
        assert!(rows.iter().all(|r| r.improved));
    }

    #[test]
    fn smallest_triangle_case() {
        let budget = SearchBudget::default();
        let outcome = min_saturated_size(3, 3, 2, &budget).unwrap();
        assert_eq!(outcome.minimum, Some(3));
        assert!(outcome.exhausted);
        let witness = outcome.witness.unwrap();
        assert_eq!(witness.edge_count(), 3);
        // The only saturated 2-colored graph on 3 vertices with 3 edges is
        // a monochromatic triangle.
        assert_eq!(witness.colors_used().len(), 1);
    }

    #[test]
    fn path4_saturation_number_at_five_vertices() {
        let budget = SearchBudget::default();
        let outcome = min_saturated_size(5, 4, 8, &budget).unwrap();
        assert_eq!(outcome.minimum, Some(4));
        assert!(outcome.exhausted);
        let witness = outcome.witness.unwrap();
        assert_eq!(witness.edge_count(), 4);
        assert!(crate::saturation::is_saturated(&witness, 4, 8).unwrap());
    }

    #[test]
    fn precondition_errors() {
        let budget = SearchBudget::default();
        assert_eq!(
            min_saturated_size(3, 4, 2, &budget).unwrap_err(),
            SearchError::TooFewVertices { n: 3, ell: 4 }
        );
        assert_eq!(
            min_saturated_size(3, 2, 2, &budget).unwrap_err(),
            SearchError::OrderTooSmall { ell: 2, min: 3 }
        );
        assert_eq!(
            min_saturated_size(9, 4, 2, &budget).unwrap_err(),
            SearchError::BudgetGuard {
                what: "n",
                value: 9,
                limit: 6
            }
        );
    }

    #[test]
    fn coloring_budget_stops_early() {
        let budget = SearchBudget {
            max_colorings: 1,
            ..SearchBudget::default()
        };
        let outcome = min_saturated_size(4, 4, 2, &budget).unwrap();
        assert!(!outcome.exhausted);
        assert_eq!(outcome.minimum, None);
    }

    #[test]
    fn pruning_switches_do_not_change_the_minimum() {
        let budget = SearchBudget::default();
        for (n, ell, t) in [(3usize, 3usize, 2u32), (4, 3, 2), (4, 4, 2), (4, 4, 3)] {
            let mut minima = Vec::new();
            for canonical in [false, true] {
                for restricted in [false, true] {
                    let options = SearchOptions {
                        canonical_pruning: canonical,
                        color_symmetry_pruning: restricted,
                    };
                    let outcome =
                        min_saturated_size_with_options(n, ell, t, &budget, options).unwrap();
                    assert!(outcome.exhausted);
                    minima.push(outcome.minimum);
                }
            }
            assert!(minima.windows(2).all(|w| w[0] == w[1]), "{n} {ell} {t}");
        }
    }

    #[test]
    fn exhausted_minimum_respects_tree_lower_bound() {
        // For ell >= 4 an exhausted minimum is never below n - 1.
        let budget = SearchBudget::default();
        for (n, ell, t) in [(4usize, 4usize, 2u32), (4, 4, 3), (5, 4, 8), (5, 5, 5)] {
            let o = min_saturated_size(n, ell, t, &budget).unwrap();
            assert!(o.exhausted);
            assert!(o.minimum.unwrap() >= n - 1, "n={n}, ell={ell}, t={t}");
        }
    }

    #[test]
    fn p5_minimum_at_five_vertices() {
        // New data pinned for regression: six edges suffice at n = 5,
        // one fewer than the block construction uses.
        let o = min_saturated_size(5, 5, 5, &SearchBudget::default()).unwrap();
        assert!(o.exhausted);
        assert_eq!(o.minimum, Some(6));
        assert!(o.minimum.unwrap() <= crate::construct::block_edge_count(5));
    }

    #[test]
    fn lower_bound_certificates() {
        let budget = SearchBudget::default();
        assert!(verify_lower_bound(4, 4, 2, &budget).unwrap());
        assert!(verify_lower_bound(5, 5, 5, &budget).unwrap());
        assert_eq!(
            verify_lower_bound(5, 3, 2, &budget).unwrap_err(),
            SearchError::OrderTooSmall { ell: 3, min: 4 }
        );
    }

    #[test]
    fn outcome_is_worker_count_independent() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                let budget = SearchBudget::default();
                let o = min_saturated_size(4, 3, 3, &budget).unwrap();
                (
                    o.minimum,
                    o.exhausted,
                    o.colorings_tested,
                    o.witness.map(|g| write_ecg(&g)),
                )
            })
        };
        assert_eq!(run(1), run(4));
    }
}
