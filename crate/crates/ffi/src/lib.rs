//! C ABI for the rainbowsat toolkit.
//!
//! Graphs are opaque handles created by the `rsat_*` constructors and
//! released with [`rsat_graph_free`]. Every fallible call returns an
//! [`RsatStatus`]; on any non-OK status a thread-local message is
//! available from [`rsat_last_error_message`] until the next failing call
//! on the same thread. Strings returned by the library are released with
//! [`rsat_string_free`].
//!
//! The matching C header is maintained at `include/rainbowsat.h` and kept
//! in sync by the crate's tests.

use std::cell::RefCell;
use std::ffi::{CStr, CString};

use libc::c_char;

use rainbowsat::construct::{
    assemble_theorem_graph, build_g_star, build_h, build_h_star, build_rainbow_clique,
    ConstructError,
};
use rainbowsat::graph::{parse_ecg, write_ecg, EdgeColoredGraph};
use rainbowsat::rainbow::contains_rainbow_path;
use rainbowsat::saturation::{blocked_pendant_colors, is_saturated, saturation_defects, Blocked};
use rainbowsat::search::{bound_new, bound_old};

/// Opaque graph handle.
pub struct RsatGraph(EdgeColoredGraph);

/// Status codes returned by fallible calls.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsatStatus {
    RsatOk = 0,
    RsatNullArgument = 1,
    RsatInvalidUtf8 = 2,
    RsatParseError = 3,
    RsatConstructError = 4,
    RsatInfeasible = 5,
    RsatInvalidArgument = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: RsatStatus, message: impl Into<Vec<u8>>) -> RsatStatus {
    let message = CString::new(message).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
    status
}

/// Message describing the most recent failure on this thread, or NULL.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn rsat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

fn graph_out(out: *mut *mut RsatGraph, g: EdgeColoredGraph) -> RsatStatus {
    if out.is_null() {
        return fail(RsatStatus::RsatNullArgument, "out pointer is NULL");
    }
    unsafe { *out = Box::into_raw(Box::new(RsatGraph(g))) };
    RsatStatus::RsatOk
}

fn construct_out(
    out: *mut *mut RsatGraph,
    built: Result<EdgeColoredGraph, ConstructError>,
) -> RsatStatus {
    match built {
        Ok(g) => graph_out(out, g),
        Err(e @ ConstructError::InfeasibleRecipe { .. }) => {
            fail(RsatStatus::RsatInfeasible, e.to_string())
        }
        Err(e) => fail(RsatStatus::RsatConstructError, e.to_string()),
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_from_ecg(
    text: *const c_char,
    out: *mut *mut RsatGraph,
) -> RsatStatus {
    if text.is_null() {
        return fail(RsatStatus::RsatNullArgument, "text is NULL");
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return fail(RsatStatus::RsatInvalidUtf8, "text is not valid UTF-8");
    };
    match parse_ecg(text) {
        Ok(g) => graph_out(out, g),
        Err(e) => fail(RsatStatus::RsatParseError, e.to_string()),
    }
}

/// Canonical ECG text for the graph; NULL on a NULL handle. Release with
/// `rsat_string_free`.
///
/// # Safety
/// `g` must be a live handle returned by this library (or NULL).
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_to_ecg(g: *const RsatGraph) -> *mut c_char {
    let Some(g) = g.as_ref() else {
        return std::ptr::null_mut();
    };
    CString::new(write_ecg(&g.0)).map_or(std::ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `g` must be a live handle returned by this library (or NULL); it must
/// not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_free(g: *mut RsatGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `s` must be a string returned by this library (or NULL); it must not be
/// used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rsat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_vertex_count(g: *const RsatGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.0.n() as u32)
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_palette(g: *const RsatGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.0.t())
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_edge_count(g: *const RsatGraph) -> u64 {
    g.as_ref().map_or(0, |g| g.0.edge_count() as u64)
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rsat_graph_is_proper(g: *const RsatGraph, out: *mut bool) -> RsatStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return fail(RsatStatus::RsatNullArgument, "NULL argument");
    };
    *out = g.0.is_proper_coloring();
    RsatStatus::RsatOk
}

/// Builds the block H on `ell` vertices.
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn rsat_build_h(ell: u32, out: *mut *mut RsatGraph) -> RsatStatus {
    construct_out(out, build_h(ell))
}

/// Builds H with its last vertex removed.
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn rsat_build_h_star(ell: u32, out: *mut *mut RsatGraph) -> RsatStatus {
    construct_out(out, build_h_star(ell))
}

/// Builds `k` disjoint copies of H.
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn rsat_build_g_star(
    k: u32,
    ell: u32,
    out: *mut *mut RsatGraph,
) -> RsatStatus {
    construct_out(out, build_g_star(k, ell))
}

/// Builds a rainbow complete graph on `a` vertices over palette `[t]`.
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn rsat_build_rainbow_clique(
    a: u32,
    t: u32,
    out: *mut *mut RsatGraph,
) -> RsatStatus {
    construct_out(out, build_rainbow_clique(a, t))
}

/// Builds the residue-case witness graph for `n` vertices and block order
/// `ell`; `RSAT_INFEASIBLE` when the recipe exceeds its palette.
///
/// # Safety
/// `out` must be a valid pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn rsat_assemble_case(
    n: u64,
    ell: u32,
    out: *mut *mut RsatGraph,
) -> RsatStatus {
    construct_out(
        out,
        assemble_theorem_graph(n as usize, ell).map(|a| a.graph),
    )
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rsat_contains_rainbow_path(
    g: *const RsatGraph,
    order: u64,
    out: *mut bool,
) -> RsatStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return fail(RsatStatus::RsatNullArgument, "NULL argument");
    };
    if order == 0 {
        return fail(RsatStatus::RsatInvalidArgument, "order must be >= 1");
    }
    *out = contains_rainbow_path(&g.0, order as usize);
    RsatStatus::RsatOk
}

/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rsat_is_saturated(
    g: *const RsatGraph,
    order: u64,
    t: u32,
    out: *mut bool,
) -> RsatStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return fail(RsatStatus::RsatNullArgument, "NULL argument");
    };
    match is_saturated(&g.0, order as usize, t) {
        Ok(sat) => {
            *out = sat;
            RsatStatus::RsatOk
        }
        Err(e) => fail(RsatStatus::RsatInvalidArgument, e.to_string()),
    }
}

/// Number of (missing pair, color) defects; zero certifies saturation.
///
/// # Safety
/// `g` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn rsat_defect_count(
    g: *const RsatGraph,
    order: u64,
    t: u32,
    out: *mut u64,
) -> RsatStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return fail(RsatStatus::RsatNullArgument, "NULL argument");
    };
    match saturation_defects(&g.0, order as usize, t) {
        Ok(defects) => {
            *out = defects.len() as u64;
            RsatStatus::RsatOk
        }
        Err(e) => fail(RsatStatus::RsatInvalidArgument, e.to_string()),
    }
}

/// Blocked pendant colors at `vertex` for paths on `order` vertices.
/// `out_mask` receives a bitmask with bit `c - 1` set when color `c` is
/// blocked; `out_all_blocked` is set when no rainbow path of that order
/// starts at the vertex at all (the mask is then the full palette).
///
/// # Safety
/// `g` must be a live handle; both out pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn rsat_blocked_colors(
    g: *const RsatGraph,
    vertex: u32,
    order: u64,
    out_mask: *mut u64,
    out_all_blocked: *mut bool,
) -> RsatStatus {
    let (Some(g), false) = (g.as_ref(), out_mask.is_null() || out_all_blocked.is_null()) else {
        return fail(RsatStatus::RsatNullArgument, "NULL argument");
    };
    match blocked_pendant_colors(&g.0, vertex, order as usize) {
        Ok(blocked) => {
            let t = g.0.t();
            *out_all_blocked = matches!(blocked, Blocked::All);
            *out_mask = blocked
                .as_color_set(t)
                .iter()
                .fold(0u64, |m, c| m | (1u64 << (c - 1)));
            RsatStatus::RsatOk
        }
        Err(e) => fail(RsatStatus::RsatInvalidArgument, e.to_string()),
    }
}

/// `ceil(n/ell) * (C(ell-2,2) + 4)`; zero when `ell < 5` or `n < 1`.
#[no_mangle]
pub extern "C" fn rsat_bound_new(n: u64, ell: u32) -> u64 {
    if ell < 5 || n < 1 {
        return 0;
    }
    bound_new(n as usize, ell) as u64
}

/// `ceil(n/(ell-1)) * C(ell-1,2)`; zero when `ell < 2` or `n < 1`.
#[no_mangle]
pub extern "C" fn rsat_bound_old(n: u64, ell: u32) -> u64 {
    if ell < 2 || n < 1 {
        return 0;
    }
    bound_old(n as usize, ell) as u64
}
