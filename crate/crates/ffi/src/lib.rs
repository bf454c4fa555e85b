//! C interface to `inertia-bounds`.
//!
//! Graphs live behind the opaque [`IbGraph`] handle. Every fallible function
//! returns an [`IbStatus`]; on failure the message is available from
//! [`ib_last_error_message`] on the same thread until the next call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use inertia_bounds::alpha::{optimize_fixed_k, optimize_k1, optimize_k2, AlphaBoundResult};
use inertia_bounds::chi::{check_applicable, first_bound, optimize_second_fixed_k, optimize_second_k1, optimize_second_k2};
use inertia_bounds::graph::{parse_edge_list, parse_graph6};
use inertia_bounds::{DiagonalProfile, DistinctSpectrum, Error, Graph};

/// Opaque graph handle.
pub struct IbGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    /// The graph is not k-partially walk-regular.
    Inapplicable = 5,
    /// The bound has no value, e.g. a spectrum without negative eigenvalues.
    Undefined = 6,
    /// The instance exceeds a built-in limit.
    Capability = 7,
    Internal = 8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> IbStatus {
    match e {
        Error::Parse { .. } | Error::Catalog { .. } | Error::Io { .. } => IbStatus::Parse,
        Error::Inapplicable { .. } => IbStatus::Inapplicable,
        Error::Undefined(_) | Error::TraceViolated { .. } => IbStatus::Undefined,
        Error::Capability(_) | Error::Skipped { .. } => IbStatus::Capability,
        Error::InvalidArgument(_) | Error::DegreeMismatch { .. } | Error::Contract(_) => IbStatus::InvalidArgument,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (IbStatus, String)>) -> IbStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IbStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (IbStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (IbStatus, String) {
    (IbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, (IbStatus, String)> {
    if s.is_null() {
        return Err(null("input string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (IbStatus::InvalidUtf8, e.to_string()))
}

unsafe fn graph<'a>(g: *const IbGraph) -> Result<&'a Graph, (IbStatus, String)> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph handle"))
}

unsafe fn build(source: *const c_char, out: *mut *mut IbGraph, parse: fn(&str) -> inertia_bounds::Result<Graph>) -> IbStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = ptr::null_mut();
        let g = parse(text(source)?).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IbGraph(g)));
        Ok(())
    })
}

fn spectrum(g: &Graph) -> Result<DistinctSpectrum, (IbStatus, String)> {
    DistinctSpectrum::of_graph(g).map_err(lib_err)
}

fn check_k(k: usize) -> Result<(), (IbStatus, String)> {
    if (1..=inertia_bounds::alpha::MAX_K).contains(&k) {
        Ok(())
    } else {
        Err((IbStatus::InvalidArgument, format!("k must be in 1..={}, got {k}", inertia_bounds::alpha::MAX_K)))
    }
}

fn alpha(g: &Graph, k: usize) -> Result<AlphaBoundResult, (IbStatus, String)> {
    check_k(k)?;
    let spec = spectrum(g)?;
    let prof = DiagonalProfile::new(g, k);
    match k {
        1 => Ok(optimize_k1(&spec)),
        2 => optimize_k2(&spec, &prof).map_err(lib_err),
        _ => optimize_fixed_k(&spec, &prof, k).map_err(lib_err),
    }
}

unsafe fn write_ratio(num: *mut u64, den: *mut u64, r: num_rational::Ratio<u64>) -> Result<(), (IbStatus, String)> {
    if num.is_null() || den.is_null() {
        return Err(null("output pointer"));
    }
    *num = *r.numer();
    *den = *r.denom();
    Ok(())
}

/// Parses one graph6 line into a new handle stored in `*out`.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_graph_from_graph6(source: *const c_char, out: *mut *mut IbGraph) -> IbStatus {
    build(source, out, parse_graph6)
}

/// Parses an edge list (`n=<count>` header, then one `u v` pair per line).
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_graph_from_edge_list(source: *const c_char, out: *mut *mut IbGraph) -> IbStatus {
    build(source, out, parse_edge_list)
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ib_graph_free(g: *mut IbGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ib_graph_vertex_count(g: *const IbGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ib_graph_edge_count(g: *const IbGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Optimized upper bound on the k-independence number.
///
/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ib_alpha_bound(g: *const IbGraph, k: usize, out: *mut usize) -> IbStatus {
    guard(|| {
        let g = graph(g)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        *out = alpha(g, k)?.value;
        Ok(())
    })
}

/// Lower bound `n / mu` on the distance-k chromatic number, as a fraction.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` writable pointers.
#[no_mangle]
pub unsafe extern "C" fn ib_chi_first_bound(g: *const IbGraph, k: usize, num: *mut u64, den: *mut u64) -> IbStatus {
    guard(|| {
        let g = graph(g)?;
        let r = alpha(g, k)?;
        write_ratio(num, den, first_bound(&r, g.vertex_count()))
    })
}

/// Lower bound `1 + n_minus / n_plus` on the distance-k chromatic number.
/// Returns `Inapplicable` unless the graph is k-partially walk-regular.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` writable pointers.
#[no_mangle]
pub unsafe extern "C" fn ib_chi_second_bound(g: *const IbGraph, k: usize, num: *mut u64, den: *mut u64) -> IbStatus {
    guard(|| {
        let g = graph(g)?;
        check_k(k)?;
        let spec = spectrum(g)?;
        let prof = DiagonalProfile::new(g, k);
        check_applicable(&prof, k).map_err(lib_err)?;
        let r = match k {
            1 => optimize_second_k1(&spec),
            2 => optimize_second_k2(&spec, g.edge_count(), g.vertex_count()),
            _ => optimize_second_fixed_k(&spec, &prof, k),
        }
        .map_err(lib_err)?;
        write_ratio(num, den, r.value())
    })
}

/// Message for the last failure on this thread; empty after a success. The
/// pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn ib_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ib_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
