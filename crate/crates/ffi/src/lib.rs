//! C ABI for `grpi`.
//!
//! Algebras cross the boundary as opaque [`GrpiAlgebra`] handles built from
//! JSON descriptions; polynomials as grammar strings. Every fallible call
//! returns a [`GrpiStatus`]; the message for the last failure on the calling
//! thread is available from [`grpi_last_error_message`]. Strings returned
//! through out-pointers must be released with [`grpi_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use grpi::algebra::GradedAlgebra;
use grpi::combinatorics::count_d_good;
use grpi::engine::{
    check_identity_general, check_identity_multilinear, codimension, generic_no_identity_check, EngineError,
    EngineOptions, Signature, Target,
};
use grpi::io::parse_algebra;
use grpi::parse::parse_lie;
use grpi::semi::{theorem_degree, DegreeMode, SemiError, DEFAULT_DIGIT_CAP};
use grpi::subspace::SubalgebraPair;

/// Result of a call. `GRPI_STATUS_OK` doubles as a "true" verdict and
/// `GRPI_STATUS_FALSE` as "false".
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrpiStatus {
    Ok = 0,
    False = 1,
    InvalidInput = 2,
    ResourceGuard = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Which space an identity is checked on.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrpiTarget {
    A = 0,
    B = 1,
    C = 2,
}

/// A loaded algebra with its optional subalgebra pair.
pub struct GrpiAlgebra {
    alg: GradedAlgebra,
    pair: Option<SubalgebraPair>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn fail(status: GrpiStatus, msg: impl Into<String>) -> GrpiStatus {
    set_error(msg);
    status
}

fn engine_status(e: EngineError) -> GrpiStatus {
    match e {
        EngineError::ResourceGuard { .. } => fail(GrpiStatus::ResourceGuard, e.to_string()),
        other => fail(GrpiStatus::InvalidInput, other.to_string()),
    }
}

/// Runs `f`, converting panics into `GRPI_STATUS_PANIC`.
fn guarded(f: impl FnOnce() -> GrpiStatus) -> GrpiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(GrpiStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, GrpiStatus> {
    if s.is_null() {
        return Err(fail(GrpiStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(GrpiStatus::InvalidInput, "string is not valid UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn grpi_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn grpi_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grpi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates an algebra description.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn grpi_algebra_load_json(json: *const c_char, out: *mut *mut GrpiAlgebra) -> GrpiStatus {
    guarded(|| {
        if out.is_null() {
            return fail(GrpiStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_algebra(text) {
            Ok((alg, pair)) => {
                *out = Box::into_raw(Box::new(GrpiAlgebra { alg, pair }));
                GrpiStatus::Ok
            }
            Err(e) => fail(GrpiStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Releases an algebra handle.
///
/// # Safety
/// `alg` must be NULL or a handle from [`grpi_algebra_load_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn grpi_algebra_free(alg: *mut GrpiAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra, or 0 for a NULL handle.
///
/// # Safety
/// `alg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn grpi_algebra_dim(alg: *const GrpiAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.alg.dim())
}

/// Whether `poly` is a graded identity of `A`, `B` or `C`: `OK` for true,
/// `FALSE` for false. `budget` 0 selects the default.
///
/// # Safety
/// `alg` must be a live handle and `poly` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn grpi_check_identity(
    alg: *const GrpiAlgebra,
    poly: *const c_char,
    target: GrpiTarget,
    budget: u64,
) -> GrpiStatus {
    guarded(|| {
        let Some(h) = alg.as_ref() else {
            return fail(GrpiStatus::NullPointer, "null algebra handle");
        };
        let text = match read_str(poly) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let f = match parse_lie(text, h.alg.group(), h.alg.field()) {
            Ok(f) => f,
            Err(e) => return fail(GrpiStatus::InvalidInput, e.to_string()),
        };
        let t = match (target, &h.pair) {
            (GrpiTarget::A, _) => Target::Algebra,
            (GrpiTarget::B, Some(p)) => Target::Subspace(&p.b),
            (GrpiTarget::C, Some(p)) => Target::Subspace(&p.c),
            (_, None) => return fail(GrpiStatus::InvalidInput, "algebra has no subalgebra pair"),
        };
        let opts = options(budget);
        let res = if f.multilinear_signature(h.alg.group()).is_some() {
            check_identity_multilinear(&f, &h.alg, t, &opts)
        } else {
            check_identity_general(&f, &h.alg, t, &opts)
        };
        match res {
            Ok(true) => GrpiStatus::Ok,
            Ok(false) => GrpiStatus::False,
            Err(e) => engine_status(e),
        }
    })
}

fn options(budget: u64) -> EngineOptions {
    if budget == 0 {
        EngineOptions::default()
    } else {
        EngineOptions { budget }
    }
}

unsafe fn signature(h: &GrpiAlgebra, counts: *const usize, len: usize) -> Result<Signature, GrpiStatus> {
    if counts.is_null() && len > 0 {
        return Err(fail(GrpiStatus::NullPointer, "null signature"));
    }
    let counts = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(counts, len).to_vec() };
    Signature::new(counts, h.alg.group()).map_err(engine_status)
}

/// Codimension of the multilinear space with `len` per-degree variable counts.
///
/// # Safety
/// `alg` must be a live handle, `counts` must point to `len` values and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn grpi_codimension(
    alg: *const GrpiAlgebra,
    counts: *const usize,
    len: usize,
    budget: u64,
    out: *mut usize,
) -> GrpiStatus {
    guarded(|| {
        let (Some(h), false) = (alg.as_ref(), out.is_null()) else {
            return fail(GrpiStatus::NullPointer, "null algebra handle or output pointer");
        };
        let sig = match signature(h, counts, len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match codimension(&h.alg, &sig, &options(budget)) {
            Ok(r) => {
                *out = r.codimension;
                GrpiStatus::Ok
            }
            Err(e) => engine_status(e),
        }
    })
}

/// Like [`grpi_codimension`] but writes the full JSON report to `*out`.
///
/// # Safety
/// As for [`grpi_codimension`]; the string must be released with [`grpi_string_free`].
#[no_mangle]
pub unsafe extern "C" fn grpi_codimension_report_json(
    alg: *const GrpiAlgebra,
    counts: *const usize,
    len: usize,
    budget: u64,
    out: *mut *mut c_char,
) -> GrpiStatus {
    guarded(|| {
        let (Some(h), false) = (alg.as_ref(), out.is_null()) else {
            return fail(GrpiStatus::NullPointer, "null algebra handle or output pointer");
        };
        *out = ptr::null_mut();
        let sig = match signature(h, counts, len) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match codimension(&h.alg, &sig, &options(budget)) {
            Ok(r) => {
                *out = into_c_string(r.to_json(h.alg.group()).to_string());
                GrpiStatus::Ok
            }
            Err(e) => engine_status(e),
        }
    })
}

/// Rank of the generic 2x2 matrix evaluation for `n0` neutral and `n1`
/// odd variables; `OK` when the rank is `(n0 + n1)!`.
///
/// # Safety
/// `rank` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn grpi_generic_no_identity(n0: usize, n1: usize, rank: *mut usize) -> GrpiStatus {
    guarded(|| match generic_no_identity_check(n0, n1) {
        Ok(g) => {
            if !rank.is_null() {
                *rank = g.rank;
            }
            if g.no_identity {
                GrpiStatus::Ok
            } else {
                GrpiStatus::False
            }
        }
        Err(e) => engine_status(e),
    })
}

/// Number of permutations of `S_n` without a decreasing subsequence of length `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn grpi_count_d_good(n: usize, d: usize, out: *mut u64) -> GrpiStatus {
    guarded(|| {
        if out.is_null() {
            return fail(GrpiStatus::NullPointer, "null output pointer");
        }
        match count_d_good(n, d) {
            Ok(c) => {
                *out = c.good;
                GrpiStatus::Ok
            }
            Err(e) => fail(GrpiStatus::InvalidInput, e.to_string()),
        }
    })
}

/// JSON enclosure of `alpha` and of the degree `ceil(alpha^alpha)`.
///
/// # Safety
/// `out` must be writable; the string must be released with [`grpi_string_free`].
#[no_mangle]
pub unsafe extern "C" fn grpi_theorem_degree_json(
    d1: usize,
    d2: usize,
    elt_order: usize,
    group_order: usize,
    exact: bool,
    out: *mut *mut c_char,
) -> GrpiStatus {
    guarded(|| {
        if out.is_null() {
            return fail(GrpiStatus::NullPointer, "null output pointer");
        }
        *out = ptr::null_mut();
        let mode = if exact { DegreeMode::Exact { digit_cap: DEFAULT_DIGIT_CAP } } else { DegreeMode::Log };
        match theorem_degree(d1, d2, elt_order, group_order, mode) {
            Ok(t) => {
                *out = into_c_string(t.to_json().to_string());
                GrpiStatus::Ok
            }
            Err(SemiError::Engine(e)) => engine_status(e),
            Err(e) => fail(GrpiStatus::InvalidInput, e.to_string()),
        }
    })
}
