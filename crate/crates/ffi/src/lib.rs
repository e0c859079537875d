//! C ABI over the hopfcross engine.
//!
//! Handles are opaque and owned by the caller; release them with the matching
//! `_free` function. Strings returned through `out` parameters are
//! heap-allocated and released with `hc_string_free`. On any status other than
//! `HC_STATUS_OK` the message is available from `hc_last_error` until the next call on
//! the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use hopfcross::braiding::{assemble_sigma, sigma_tsv, BraidingError};
use hopfcross::crossed::{build_crossed_product, verify_crossed_system, CertifiedSystem, CrossedError, CrossedSystemData};
use hopfcross::field::Field;
use hopfcross::hopf::{verify_hopf, AxiomReport, HopfData};
use hopfcross::io::{self, IoError};
use hopfcross::polybraid::{closed_form_sigma, PolySigmaParams};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Unreadable or malformed input.
    InvalidInput = 3,
    /// The input is well formed but fails a mathematical requirement.
    MathFailure = 4,
    /// An internal panic was caught at the boundary.
    Panic = 5,
}

/// A finite-dimensional Hopf algebra.
pub struct HcHopf(HopfData);

/// A crossed system, certified or not.
pub struct HcSystem(CrossedSystemData);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Fail(HcStatus, String);

impl From<IoError> for Fail {
    fn from(e: IoError) -> Self {
        Fail(HcStatus::InvalidInput, e.to_string())
    }
}

impl From<CrossedError> for Fail {
    fn from(e: CrossedError) -> Self {
        match e {
            CrossedError::SystemNotCertified(r) => Fail(HcStatus::MathFailure, format!("crossed system is not certified:\n{r}")),
            other => Fail(HcStatus::InvalidInput, other.to_string()),
        }
    }
}

impl From<BraidingError> for Fail {
    fn from(e: BraidingError) -> Self {
        match e {
            BraidingError::QuadrupleNotCertified(_) | BraidingError::NotABraiding(_) => Fail(HcStatus::MathFailure, e.to_string()),
            other => Fail(HcStatus::InvalidInput, other.to_string()),
        }
    }
}

/// Runs `f` with panics contained and errors recorded.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HcStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HcStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(HcStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(HcStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_field(p: *const c_char) -> Result<Option<Field>, Fail> {
    if p.is_null() {
        return Ok(None);
    }
    let t = text(p, "field")?;
    t.parse().map(Some).map_err(|e: hopfcross::field::FieldError| Fail(HcStatus::InvalidInput, e.to_string()))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(HcStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write_out<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(HcStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(HcStatus::InvalidInput, "output contains a NUL byte".into()))?;
    write_out(out, c.into_raw())
}

unsafe fn write_report(r: &AxiomReport, passed: *mut bool, report_json: *mut *mut c_char) -> Result<(), Fail> {
    write_out(passed, r.all_passed())?;
    if !report_json.is_null() {
        write_string(report_json, io::to_json(r))?;
    }
    Ok(())
}

/// Message for the last failure on this thread, or null. Owned by the library.
#[no_mangle]
pub extern "C" fn hc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a Hopf algebra document. `field` may be null.
///
/// # Safety
/// `path` and `field` must be NUL-terminated strings or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_hopf_load(path: *const c_char, field: *const c_char, out: *mut *mut HcHopf) -> HcStatus {
    guard(|| {
        let h = io::load_hopf(Path::new(text(path, "path")?), opt_field(field)?)?;
        write_out(out, Box::into_raw(Box::new(HcHopf(h))))
    })
}

/// Dimension of a Hopf algebra, or 0 for null.
///
/// # Safety
/// `h` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn hc_hopf_dim(h: *const HcHopf) -> usize {
    h.as_ref().map_or(0, |h| h.0.dim())
}

/// Checks every Hopf axiom. `report_json` may be null.
///
/// # Safety
/// `h` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_hopf_verify(h: *const HcHopf, passed: *mut bool, report_json: *mut *mut c_char) -> HcStatus {
    guard(|| write_report(&verify_hopf(&handle(h, "hopf")?.0), passed, report_json))
}

/// Serializes a Hopf algebra in the document format.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_hopf_to_json(h: *const HcHopf, out: *mut *mut c_char) -> HcStatus {
    guard(|| write_string(out, io::hopf_json(&handle(h, "hopf")?.0)))
}

/// # Safety
/// `h` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hc_hopf_free(h: *mut HcHopf) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Loads a crossed system document. `field` may be null.
///
/// # Safety
/// `path` and `field` must be NUL-terminated strings or null; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_system_load(path: *const c_char, field: *const c_char, out: *mut *mut HcSystem) -> HcStatus {
    guard(|| {
        let s = io::load_system(Path::new(text(path, "path")?), opt_field(field)?)?;
        write_out(out, Box::into_raw(Box::new(HcSystem(s))))
    })
}

/// Checks the crossed system axioms. `report_json` may be null.
///
/// # Safety
/// `s` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_system_verify(s: *const HcSystem, passed: *mut bool, report_json: *mut *mut c_char) -> HcStatus {
    guard(|| write_report(&verify_crossed_system(&handle(s, "system")?.0), passed, report_json))
}

/// Certifies the system and builds its crossed product.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hc_system_build(s: *const HcSystem, out: *mut *mut HcHopf) -> HcStatus {
    guard(|| {
        let c = CertifiedSystem::certify(handle(s, "system")?.0.clone())?;
        write_out(out, Box::into_raw(Box::new(HcHopf(build_crossed_product(&c)))))
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hc_system_free(s: *mut HcSystem) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Assembles σ from a quadruple document and renders it as a labelled TSV table.
///
/// # Safety
/// `s` must be a live handle; `quadruple_path` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hc_braid_table(s: *const HcSystem, quadruple_path: *const c_char, out: *mut *mut c_char) -> HcStatus {
    guard(|| {
        let data = &handle(s, "system")?.0;
        let path = Path::new(text(quadruple_path, "quadruple_path")?);
        let field = io::quadruple_field(path, data)?;
        let q = io::load_quadruple(path, data, field)?;
        let c = CertifiedSystem::certify(data.clone())?;
        let sigma = assemble_sigma(&c, &q)?;
        let labels = &c.product().labels;
        write_string(out, sigma_tsv(&sigma, labels, labels))
    })
}

/// Closed-form σ(XᵃYᵇ, XᶜYᵈ) on the polynomial example. `params` is
/// `"s_p,s_tau,s_u,s_v"`; `field` may be null for the rationals.
///
/// # Safety
/// `params` and `field` must be NUL-terminated strings or null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hc_poly_sigma(
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    params: *const c_char,
    field: *const c_char,
    out: *mut *mut c_char,
) -> HcStatus {
    guard(|| {
        let f = opt_field(field)?.unwrap_or(Field::Rational);
        let p = PolySigmaParams::parse(text(params, "params")?, f).map_err(|e| Fail(HcStatus::InvalidInput, e.to_string()))?;
        write_string(out, closed_form_sigma(&p, a, b, c, d).to_string())
    })
}
