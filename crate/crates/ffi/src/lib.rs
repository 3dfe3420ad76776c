//! C ABI for `fockspace`.
//!
//! Every fallible function returns an [`FsStatus`]. On failure a message is
//! stored per thread and can be read with [`fs_last_error_message`].
//! Handles are opaque; release them with the matching `_free` function.
//! Strings returned through `char **` outputs must be released with
//! [`fs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fockspace::cartan::Rank;
use fockspace::cli::{apply_ops, parse_ops};
use fockspace::crystal::{bfs_component, e_tilde, epsilon, f_tilde, phi, CrystalGraph};
use fockspace::diagram::Diagram;
use fockspace::error::Error;
use fockspace::fock::{verify_relations, Combination, Convention, FockAction};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidUtf8 = 3,
    InvalidJson = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsConvention {
    Upper = 0,
    Lower = 1,
}

impl From<FsConvention> for Convention {
    fn from(c: FsConvention) -> Self {
        match c {
            FsConvention::Upper => Convention::Upper,
            FsConvention::Lower => Convention::Lower,
        }
    }
}

/// A coloured Young diagram with its rank and charge.
pub struct FsDiagram(Diagram);

/// A truncated crystal graph.
pub struct FsGraph(CrystalGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(FsStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Json(_) => FsStatus::InvalidJson,
            _ => FsStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(FsStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FsStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FsStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(FsStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn into_c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Fail(FsStatus::InvalidArgument, e.to_string()))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn check_colour(y: &Diagram, i: usize) -> Result<(), Fail> {
    y.rank().check_index(i).map(drop).map_err(Fail::from)
}

/// Message for the last failure on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a diagram from `len` column depths, weakly decreasing and positive.
///
/// # Safety
/// `depths` must point to `len` readable values (may be NULL when `len` is 0);
/// `out_diagram` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_new(
    n: i64,
    charge: usize,
    depths: *const usize,
    len: usize,
    out_diagram: *mut *mut FsDiagram,
) -> FsStatus {
    guard(|| {
        let slot = out(out_diagram, "out_diagram")?;
        let depths = match len {
            0 => Vec::new(),
            _ if depths.is_null() => return Err(null("depths")),
            _ => std::slice::from_raw_parts(depths, len).to_vec(),
        };
        let y = Diagram::new(Rank::new(n)?, charge, depths)?;
        *slot = boxed(FsDiagram(y));
        Ok(())
    })
}

/// Parses `{"n":..,"charge":..,"columns":[..]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out_diagram` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_from_json(json: *const c_char, out_diagram: *mut *mut FsDiagram) -> FsStatus {
    guard(|| {
        let slot = out(out_diagram, "out_diagram")?;
        let y: Diagram = serde_json::from_str(read_str(json, "json")?).map_err(Error::from)?;
        *slot = boxed(FsDiagram(y));
        Ok(())
    })
}

/// # Safety
/// `diagram` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_to_json(diagram: *const FsDiagram, out_json: *mut *mut c_char) -> FsStatus {
    guard(|| {
        let y = &deref(diagram, "diagram")?.0;
        let slot = out(out_json, "out_json")?;
        *slot = into_c_string(serde_json::to_string(y).map_err(Error::from)?)?;
        Ok(())
    })
}

/// Number of boxes, or 0 for NULL.
///
/// # Safety
/// `diagram` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_box_count(diagram: *const FsDiagram) -> usize {
    diagram.as_ref().map_or(0, |d| d.0.box_count())
}

/// # Safety
/// `diagram` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_free(diagram: *mut FsDiagram) {
    if !diagram.is_null() {
        drop(Box::from_raw(diagram));
    }
}

/// # Safety
/// `diagram` must be a live handle; `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_epsilon(diagram: *const FsDiagram, i: usize, out_value: *mut usize) -> FsStatus {
    guard(|| {
        let y = &deref(diagram, "diagram")?.0;
        let slot = out(out_value, "out_value")?;
        check_colour(y, i)?;
        *slot = epsilon(y, i);
        Ok(())
    })
}

/// # Safety
/// `diagram` must be a live handle; `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_phi(diagram: *const FsDiagram, i: usize, out_value: *mut usize) -> FsStatus {
    guard(|| {
        let y = &deref(diagram, "diagram")?.0;
        let slot = out(out_value, "out_value")?;
        check_colour(y, i)?;
        *slot = phi(y, i);
        Ok(())
    })
}

/// Writes a new handle, or NULL when the result is zero.
///
/// # Safety
/// `diagram` must be a live handle; `out_diagram` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_e_tilde(
    diagram: *const FsDiagram,
    i: usize,
    out_diagram: *mut *mut FsDiagram,
) -> FsStatus {
    guard(|| {
        let y = &deref(diagram, "diagram")?.0;
        let slot = out(out_diagram, "out_diagram")?;
        check_colour(y, i)?;
        *slot = e_tilde(y, i).map_or(ptr::null_mut(), |z| boxed(FsDiagram(z)));
        Ok(())
    })
}

/// Writes a new handle, or NULL when the result is zero.
///
/// # Safety
/// `diagram` must be a live handle; `out_diagram` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_diagram_f_tilde(
    diagram: *const FsDiagram,
    i: usize,
    out_diagram: *mut *mut FsDiagram,
) -> FsStatus {
    guard(|| {
        let y = &deref(diagram, "diagram")?.0;
        let slot = out(out_diagram, "out_diagram")?;
        check_colour(y, i)?;
        *slot = f_tilde(y, i).map_or(ptr::null_mut(), |z| boxed(FsDiagram(z)));
        Ok(())
    })
}

/// Applies an operator word such as `"E1 F0 T2+ Td"` (rightmost first) and
/// writes the resulting combination as JSON.
///
/// # Safety
/// `diagram` must be a live handle, `ops` NUL-terminated, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_act(
    diagram: *const FsDiagram,
    ops: *const c_char,
    convention: FsConvention,
    out_json: *mut *mut c_char,
) -> FsStatus {
    guard(|| {
        let y = &deref(diagram, "diagram")?.0;
        let word = read_str(ops, "ops")?;
        let slot = out(out_json, "out_json")?;
        let ops = parse_ops(word, y.rank())?;
        let v = apply_ops(&FockAction::new(convention.into()), &ops, Combination::from_diagram(y.clone()))?;
        *slot = into_c_string(serde_json::to_string(&v).map_err(Error::from)?)?;
        Ok(())
    })
}

/// Checks the defining relations on every diagram with at most `max_boxes`
/// boxes. `out_report` may be NULL; otherwise it receives the JSON report.
///
/// # Safety
/// `out_checked` and `out_failures` must be writable; `out_report` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn fs_verify(
    n: i64,
    charge: usize,
    max_boxes: usize,
    convention: FsConvention,
    out_checked: *mut u64,
    out_failures: *mut u64,
    out_report: *mut *mut c_char,
) -> FsStatus {
    guard(|| {
        let checked = out(out_checked, "out_checked")?;
        let failures = out(out_failures, "out_failures")?;
        let report = verify_relations(Rank::new(n)?, charge, max_boxes, convention.into())?;
        if let Some(slot) = out_report.as_mut() {
            *slot = into_c_string(serde_json::to_string(&report).map_err(Error::from)?)?;
        }
        *checked = report.checked;
        *failures = report.failures.len() as u64;
        Ok(())
    })
}

/// Crystal graph of the component of the empty diagram, down to `depth` boxes.
///
/// # Safety
/// `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_new(n: i64, charge: usize, depth: usize, out_graph: *mut *mut FsGraph) -> FsStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        *slot = boxed(FsGraph(bfs_component(Rank::new(n)?, charge, depth)?));
        Ok(())
    })
}

/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_node_count(graph: *const FsGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.nodes().len())
}

/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_edge_count(graph: *const FsGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edges().len())
}

/// Node `index` as a new diagram handle.
///
/// # Safety
/// `graph` must be a live handle; `out_diagram` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_node(graph: *const FsGraph, index: usize, out_diagram: *mut *mut FsDiagram) -> FsStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let slot = out(out_diagram, "out_diagram")?;
        let y = g.nodes().get(index).ok_or_else(|| {
            Fail(FsStatus::InvalidArgument, format!("node {index} out of range ({} nodes)", g.nodes().len()))
        })?;
        *slot = boxed(FsDiagram(y.clone()));
        Ok(())
    })
}

/// # Safety
/// `graph` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_to_json(graph: *const FsGraph, out_json: *mut *mut c_char) -> FsStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let slot = out(out_json, "out_json")?;
        *slot = into_c_string(g.to_json()?)?;
        Ok(())
    })
}

/// # Safety
/// `graph` must be a live handle; `out_dot` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_to_dot(graph: *const FsGraph, out_dot: *mut *mut c_char) -> FsStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let slot = out(out_dot, "out_dot")?;
        *slot = into_c_string(g.to_dot())?;
        Ok(())
    })
}

/// # Safety
/// `graph` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_free(graph: *mut FsGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}
