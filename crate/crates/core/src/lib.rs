//! Rainbow-path saturation toolkit for t-edge-colored graphs.
//!
//! A graph equipped with an edge coloring from the palette `[t] = {1..t}`
//! is *rainbow-P_k-free* when it contains no path on `k` vertices whose
//! edge colors are pairwise distinct, and *saturated* when additionally
//! every missing edge, added in any palette color, creates such a path.
//! This crate provides:
//!
//! * [`graph`] — the edge-colored graph data model and the ECG text format;
//! * [`construct`] — generators for the saturated component families
//!   (`H`, `H*`, `kH`, rainbow cliques, and the residue-case assemblies);
//! * [`rainbow`] — the rainbow-path decision/enumeration engine plus a
//!   deliberately naive oracle used for cross-validation;
//! * [`saturation`] — saturation verdicts, defect scans, blocked-color sets;
//! * [`search`] — exhaustive minimum-saturation search at desk scale and
//!   closed-form bound calculators;
//! * [`claims`] — a machine-readable catalog of checkable statements about
//!   the construction family, executed into a verification report;
//! * [`cli`] — the `rainbowsat` command-line front end.

pub mod claims;
pub mod cli;
pub mod construct;
pub mod graph;
pub mod rainbow;
pub mod saturation;
pub mod search;

pub use graph::{parse_ecg, write_ecg, ColorSet, Edge, EdgeColoredGraph, GraphError, PathWitness};
pub use rainbow::{
    contains_rainbow_path, enumerate_rainbow_paths_from, find_rainbow_path,
    naive_contains_rainbow_path,
};
pub use saturation::{
    blocked_pendant_colors, blocked_table, is_rainbow_free, is_saturated, saturation_defects,
    Blocked, Defect,
};
pub use search::{
    bound_new, bound_old, bounds_table, min_saturated_size, verify_lower_bound, SearchBudget,
    SearchOutcome,
};
