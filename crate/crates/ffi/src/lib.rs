//! C ABI over `groupring`.
//!
//! Groups and reports are opaque handles owned by the caller and released
//! with the matching `*_free`. Every call returns a [`GrStatus`]; on failure
//! `gr_last_error` holds a message for the calling thread. Panics are caught
//! at the boundary and reported as `GR_STATUS_INTERNAL`.

use groupring::components::{count_matrix_components_in, DEFAULT_PROBE_BUDGET, DEFAULT_PROBE_SEED};
use groupring::group::{parse_spec, subgroups, FiniteGroup};
use groupring::props::{is_ncn_in, is_sn_in, is_ssn_in, nd_verdict_with, NdVerdict};
use groupring::report::{analyze_group, AnalyzeOptions};
use groupring::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OrderCapExceeded = 4,
    NotPGroup = 5,
    NotMetabelian = 6,
    Failed = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrNdVerdict {
    HasNd = 0,
    NotNd = 1,
    Unknown = 2,
}

/// A built finite group.
pub struct GrGroup {
    group: Arc<FiniteGroup>,
    spec: String,
}

/// A full analysis, kept as its JSON rendering.
pub struct GrReport {
    json: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> GrStatus {
    match e {
        Error::Parse { .. } | Error::InconsistentSpec(_) => GrStatus::Parse,
        Error::OrderCapExceeded { .. } => GrStatus::OrderCapExceeded,
        Error::NotPGroup => GrStatus::NotPGroup,
        Error::NotMetabelian => GrStatus::NotMetabelian,
        _ => GrStatus::Failed,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (GrStatus, String)>) -> GrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GrStatus::Ok
        }
        Ok(Err((s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            GrStatus::Internal
        }
    }
}

fn lib(e: Error) -> (GrStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (GrStatus, String) {
    (GrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (GrStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (GrStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn group_ref<'a>(g: *const GrGroup) -> Result<&'a GrGroup, (GrStatus, String)> {
    g.as_ref().ok_or_else(|| null("group"))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), (GrStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = v;
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn gr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds the group described by `spec`, refusing orders above `cap`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_new(spec: *const c_char, cap: usize, out: *mut *mut GrGroup) -> GrStatus {
    guard(|| {
        let text = read_str(spec, "spec")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let g = parse_spec(text).and_then(|s| s.build(cap)).map_err(lib)?;
        let h = Box::new(GrGroup { group: Arc::new(g), spec: text.to_string() });
        *out = Box::into_raw(h);
        Ok(())
    })
}

/// # Safety
/// `g` must come from `gr_group_new` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gr_group_free(g: *mut GrGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_order(g: *const GrGroup, out: *mut usize) -> GrStatus {
    guard(|| write_out(out, group_ref(g)?.group.order()))
}

/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_is_sn(g: *const GrGroup, out: *mut bool) -> GrStatus {
    guard(|| {
        let g = &group_ref(g)?.group;
        write_out(out, is_sn_in(g, &subgroups(g)))
    })
}

/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_is_ssn(g: *const GrGroup, out: *mut bool) -> GrStatus {
    guard(|| {
        let g = &group_ref(g)?.group;
        write_out(out, is_ssn_in(g, &subgroups(g)))
    })
}

/// `GR_STATUS_NOT_P_GROUP` unless the group is a `p`-group.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_is_ncn(g: *const GrGroup, out: *mut bool) -> GrStatus {
    guard(|| {
        let g = &group_ref(g)?.group;
        let v = is_ncn_in(g, &subgroups(g)).map_err(lib)?;
        write_out(out, v)
    })
}

/// Bounds `[low, high]` on the number of matrix components of `Q[G]`.
///
/// # Safety
/// `g` must be a live group handle; `low` and `high` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn gr_group_matrix_components(g: *const GrGroup, low: *mut usize, high: *mut usize) -> GrStatus {
    guard(|| {
        let g = &group_ref(g)?.group;
        if low.is_null() || high.is_null() {
            return Err(null("out"));
        }
        let c = count_matrix_components_in(g, &subgroups(g), DEFAULT_PROBE_BUDGET, DEFAULT_PROBE_SEED).map_err(lib)?;
        *low = c.low;
        *high = c.high;
        Ok(())
    })
}

/// ND verdict with a witness search of at most `budget` candidate tests.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_nd_verdict(g: *const GrGroup, budget: usize, out: *mut GrNdVerdict) -> GrStatus {
    guard(|| {
        let g = &group_ref(g)?.group;
        let lat = subgroups(g);
        let count = count_matrix_components_in(g, &lat, DEFAULT_PROBE_BUDGET, DEFAULT_PROBE_SEED).ok();
        let r = nd_verdict_with(g, &lat, count.as_ref(), budget).map_err(lib)?;
        let v = match r.verdict {
            NdVerdict::HasND => GrNdVerdict::HasNd,
            NdVerdict::NotND => GrNdVerdict::NotNd,
            NdVerdict::Unknown => GrNdVerdict::Unknown,
        };
        write_out(out, v)
    })
}

/// Full analysis of `g`; `budget` bounds the ND witness search.
///
/// # Safety
/// `g` must be a live group handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gr_group_analyze(g: *const GrGroup, budget: usize, out: *mut *mut GrReport) -> GrStatus {
    guard(|| {
        let h = group_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let opts = AnalyzeOptions { cap: h.group.order().max(1), witness_budget: budget, ..AnalyzeOptions::default() };
        let rep = analyze_group(&h.group, &h.spec, &opts).map_err(lib)?;
        let json = CString::new(rep.to_json()).map_err(|e| (GrStatus::Internal, e.to_string()))?;
        *out = Box::into_raw(Box::new(GrReport { json }));
        Ok(())
    })
}

/// The report as JSON, owned by the report handle.
///
/// # Safety
/// `r` must be a live report handle or null (which yields null).
#[no_mangle]
pub unsafe extern "C" fn gr_report_json(r: *const GrReport) -> *const c_char {
    match r.as_ref() {
        Some(r) => r.json.as_ptr(),
        None => ptr::null(),
    }
}

/// # Safety
/// `r` must come from `gr_group_analyze` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gr_report_free(r: *mut GrReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
