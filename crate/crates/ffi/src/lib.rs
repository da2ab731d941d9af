//! C ABI for the `storient` engine.
//!
//! Graphs and orientations are opaque heap handles released with
//! `st_graph_free` / `st_orientation_free`. Strings returned through `char **`
//! out-parameters are owned by the caller and released with `st_string_free`.
//! Every fallible call returns an `StStatus`; on failure a message is kept per
//! thread and can be read with `st_last_error` until the next failing call.
//! Panics never cross the boundary; they surface as `ST_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use storient::census::run_census;
use storient::constructions::{alternation_graph, odd_girth_blowup, product, ProductKind, Word};
use storient::transforms::{add_to_complete, delete_to_empty, lift_to_matching};
use storient::{
    generate, is_semi_transitive, parse_graph6, write_graph6, Error, Family, Graph, Mode,
    Orientation, Solver, Status,
};

/// Opaque undirected graph.
pub struct StGraph {
    inner: Graph,
}

/// Opaque orientation; carries its underlying graph.
pub struct StOrientation {
    inner: Orientation,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Format = 3,
    UnsupportedSize = 4,
    Argument = 5,
    Precondition = 6,
    Resource = 7,
    Internal = 8,
}

pub const ST_MODE_SEMI_TRANSITIVE: u32 = 0;
pub const ST_MODE_TRANSITIVE: u32 = 1;

pub const ST_PRODUCT_CARTESIAN: u32 = 0;
pub const ST_PRODUCT_TENSOR: u32 = 1;
pub const ST_PRODUCT_LEXICOGRAPHIC: u32 = 2;
pub const ST_PRODUCT_STRONG: u32 = 3;

pub const ST_TRANSFORM_TO_EMPTY: u32 = 0;
pub const ST_TRANSFORM_TO_COMPLETE: u32 = 1;
pub const ST_TRANSFORM_TO_MATCHING: u32 = 2;

/// `st_decide` verdicts.
pub const ST_VERDICT_ORIENTABLE: i32 = 1;
pub const ST_VERDICT_NOT_ORIENTABLE: i32 = 0;
pub const ST_VERDICT_FILTERED: i32 = 2;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(StStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let status = match e {
            Error::Format { .. } => StStatus::Format,
            Error::UnsupportedSize(_) => StStatus::UnsupportedSize,
            Error::Argument(_) => StStatus::Argument,
            Error::Precondition(_) => StStatus::Precondition,
            Error::Resource { .. } => StStatus::Resource,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> StStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_last_error(&format!("internal error: {msg}"));
            StStatus::Internal
        }
    }
}

fn null() -> Failure {
    Failure(StStatus::NullPointer, "null pointer argument".to_string())
}

fn arg(msg: impl Into<String>) -> Failure {
    Failure(StStatus::Argument, msg.into())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn utf8_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Failure(
            StStatus::InvalidUtf8,
            "string is not valid UTF-8".to_string(),
        )
    })
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Failure(StStatus::Internal, "nul in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failing call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn st_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn st_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut StGraph,
) -> StStatus {
    guard(|| {
        let g = parse_graph6(utf8_arg(text)?)?;
        put(out, StGraph { inner: g })
    })
}

/// Named graph such as `W5`, `C7`, `K2,3`, `diamond`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_graph_from_name(
    name: *const c_char,
    out: *mut *mut StGraph,
) -> StStatus {
    guard(|| {
        let family: Family = utf8_arg(name)?.parse()?;
        put(
            out,
            StGraph {
                inner: generate(family)?,
            },
        )
    })
}

/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_graph_free(g: *mut StGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_graph_to_graph6(g: *const StGraph, out: *mut *mut c_char) -> StStatus {
    guard(|| put_string(out, write_graph6(&borrow(g)?.inner)?))
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_graph_order(g: *const StGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_graph_edge_count(g: *const StGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// Decides orientability. `verdict` receives one of the `ST_VERDICT_*`
/// values; `filtered_vertex` (optional) receives the filter vertex or -1;
/// `witness` (optional) receives an orientation when one was found, else null.
///
/// # Safety
/// `g` must be a live handle; non-null out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_decide(
    g: *const StGraph,
    mode: u32,
    verdict: *mut i32,
    filtered_vertex: *mut i64,
    witness: *mut *mut StOrientation,
) -> StStatus {
    guard(|| {
        let g = borrow(g)?;
        if verdict.is_null() {
            return Err(null());
        }
        let mode = match mode {
            ST_MODE_SEMI_TRANSITIVE => Mode::SemiTransitive,
            ST_MODE_TRANSITIVE => Mode::Transitive,
            m => return Err(arg(format!("unknown mode {m}"))),
        };
        let result = Solver::from_env().decide(&g.inner, mode)?;
        if !witness.is_null() {
            *witness = ptr::null_mut();
        }
        if !filtered_vertex.is_null() {
            *filtered_vertex = -1;
        }
        match result.status {
            Status::Orientable(o) => {
                *verdict = ST_VERDICT_ORIENTABLE;
                if !witness.is_null() {
                    put(witness, StOrientation { inner: o })?;
                }
            }
            Status::NotOrientable => *verdict = ST_VERDICT_NOT_ORIENTABLE,
            Status::Filtered(v) => {
                *verdict = ST_VERDICT_FILTERED;
                if !filtered_vertex.is_null() {
                    *filtered_vertex = v as i64;
                }
            }
        }
        Ok(())
    })
}

/// Parses digraph text (`n=<k>` then `u->v` lines).
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_orientation_from_text(
    text: *const c_char,
    out: *mut *mut StOrientation,
) -> StStatus {
    guard(|| {
        let o = Orientation::from_digraph_text(utf8_arg(text)?)?;
        put(out, StOrientation { inner: o })
    })
}

/// # Safety
/// `o` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_orientation_to_text(
    o: *const StOrientation,
    out: *mut *mut c_char,
) -> StStatus {
    guard(|| put_string(out, borrow(o)?.inner.to_digraph_text()))
}

/// Copy of the orientation's underlying graph.
///
/// # Safety
/// `o` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_orientation_graph(
    o: *const StOrientation,
    out: *mut *mut StGraph,
) -> StStatus {
    guard(|| {
        let g = borrow(o)?.inner.base().clone();
        put(out, StGraph { inner: g })
    })
}

/// # Safety
/// `o` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_orientation_is_semi_transitive(
    o: *const StOrientation,
    result: *mut bool,
) -> StStatus {
    guard(|| {
        let o = borrow(o)?;
        if result.is_null() {
            return Err(null());
        }
        *result = is_semi_transitive(&o.inner);
        Ok(())
    })
}

/// # Safety
/// `o` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn st_orientation_free(o: *mut StOrientation) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// # Safety
/// `g` and `h` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_product(
    g: *const StGraph,
    h: *const StGraph,
    kind: u32,
    out: *mut *mut StGraph,
) -> StStatus {
    guard(|| {
        let kind = match kind {
            ST_PRODUCT_CARTESIAN => ProductKind::Cartesian,
            ST_PRODUCT_TENSOR => ProductKind::Tensor,
            ST_PRODUCT_LEXICOGRAPHIC => ProductKind::Lexicographic,
            ST_PRODUCT_STRONG => ProductKind::Strong,
            k => return Err(arg(format!("unknown product kind {k}"))),
        };
        let p = product(&borrow(g)?.inner, &borrow(h)?.inner, kind)?;
        put(out, StGraph { inner: p })
    })
}

/// Adds the ends of every simple 3-edge path as an edge.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_blowup(g: *const StGraph, out: *mut *mut StGraph) -> StStatus {
    guard(|| {
        let b = odd_girth_blowup(&borrow(g)?.inner);
        put(out, StGraph { inner: b })
    })
}

/// Alternation graph of a UTF-8 word; vertices are its sorted letters.
///
/// # Safety
/// `word` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_word_graph(word: *const c_char, out: *mut *mut StGraph) -> StStatus {
    guard(|| {
        let w: Word = utf8_arg(word)?.parse()?;
        put(
            out,
            StGraph {
                inner: alternation_graph(&w),
            },
        )
    })
}

/// Runs a pipeline from `o` and returns the trace JSON.
///
/// # Safety
/// `o` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_transform_json(
    o: *const StOrientation,
    mode: u32,
    out: *mut *mut c_char,
) -> StStatus {
    guard(|| {
        let o = &borrow(o)?.inner;
        let trace = match mode {
            ST_TRANSFORM_TO_EMPTY => delete_to_empty(o)?,
            ST_TRANSFORM_TO_COMPLETE => add_to_complete(o)?,
            ST_TRANSFORM_TO_MATCHING => lift_to_matching(o)?,
            m => return Err(arg(format!("unknown transform mode {m}"))),
        };
        put_string(out, trace.to_json()?)
    })
}

/// Census report JSON for `n <= 7` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn st_census_json(
    n: u32,
    connected_only: bool,
    workers: u32,
    out: *mut *mut c_char,
) -> StStatus {
    guard(|| {
        let report = run_census(
            n as usize,
            connected_only,
            workers as usize,
            &Solver::from_env(),
        )?;
        put_string(out, report.to_json())
    })
}
