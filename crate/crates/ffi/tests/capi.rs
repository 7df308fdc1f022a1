use std::ffi::{CStr, CString};
use std::ptr;

use grpi_ffi::*;

const GROUP_ALGEBRA_Z2: &str = r#"{"group":{"kind":"cyclic","n":2},"basis":["u0","u1"],"grading":{"u0":"0","u1":"1"},
 "mult":[[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"],[1,1,0,"1"]]}"#;

// Upper triangular 2x2 with e12 odd; B = span(e12), C = diagonal.
const UT2: &str = r#"{"group":{"kind":"cyclic","n":2},"basis":["e11","e12","e22"],"grading":{"e11":"0","e12":"1","e22":"0"},
 "mult":[[0,0,0,"1"],[0,1,1,"1"],[1,2,1,"1"],[2,2,2,"1"]],
 "subalgebras":{"B":[["0","1","0"]],"C":[["1","0","0"],["0","0","1"]],"b_is_ideal":true}}"#;

fn load(json: &str) -> *mut GrpiAlgebra {
    let c = CString::new(json).unwrap();
    let mut h = ptr::null_mut();
    let st = unsafe { grpi_algebra_load_json(c.as_ptr(), &mut h) };
    assert_eq!(st, GrpiStatus::Ok, "{:?}", last_error());
    assert!(!h.is_null());
    h
}

fn last_error() -> Option<String> {
    let p = grpi_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { grpi_string_free(p) };
    s
}

#[test]
fn load_and_dimension() {
    let h = load(GROUP_ALGEBRA_Z2);
    assert_eq!(unsafe { grpi_algebra_dim(h) }, 2);
    unsafe { grpi_algebra_free(h) };
    assert_eq!(unsafe { grpi_algebra_dim(ptr::null()) }, 0);
    unsafe { grpi_algebra_free(ptr::null_mut()) };
}

#[test]
fn invalid_json_reports_pointer() {
    let bad = CString::new(r#"{"group":{"kind":"cyclic","n":2},"basis":["u0"],"grading":{}}"#).unwrap();
    let mut h = ptr::null_mut();
    let st = unsafe { grpi_algebra_load_json(bad.as_ptr(), &mut h) };
    assert_eq!(st, GrpiStatus::InvalidInput);
    assert!(h.is_null());
    assert!(last_error().unwrap().contains("/grading/u0"));
    let st = unsafe { grpi_algebra_load_json(ptr::null(), &mut h) };
    assert_eq!(st, GrpiStatus::NullPointer);
}

#[test]
fn identity_verdicts() {
    let h = load(UT2);
    let check = |poly: &str, t: GrpiTarget| {
        let p = CString::new(poly).unwrap();
        unsafe { grpi_check_identity(h, p.as_ptr(), t, 0) }
    };
    assert_eq!(check("x1{1}*x2{1}", GrpiTarget::A), GrpiStatus::Ok);
    assert_eq!(check("x1{0}*x2{1} - x2{1}*x1{0}", GrpiTarget::A), GrpiStatus::False);
    assert_eq!(check("x1{0}*x2{1} - x2{1}*x1{0}", GrpiTarget::B), GrpiStatus::Ok);
    assert_eq!(check("x1{0}*x2{0} - x2{0}*x1{0}", GrpiTarget::C), GrpiStatus::Ok);
    assert_eq!(check("x1{0}*(", GrpiTarget::A), GrpiStatus::InvalidInput);
    assert!(last_error().is_some());
    unsafe { grpi_algebra_free(h) };

    let g = load(GROUP_ALGEBRA_Z2);
    let p = CString::new("x1{0}").unwrap();
    assert_eq!(unsafe { grpi_check_identity(g, p.as_ptr(), GrpiTarget::B, 0) }, GrpiStatus::InvalidInput);
    unsafe { grpi_algebra_free(g) };
}

#[test]
fn codimension_and_report() {
    let h = load(GROUP_ALGEBRA_Z2);
    let counts = [0usize, 2];
    let mut c = 0usize;
    assert_eq!(unsafe { grpi_codimension(h, counts.as_ptr(), 2, 0, &mut c) }, GrpiStatus::Ok);
    assert_eq!(c, 1);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { grpi_codimension_report_json(h, counts.as_ptr(), 2, 0, &mut s) }, GrpiStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["codimension"], 1);
    let bad = [1usize];
    assert_eq!(unsafe { grpi_codimension(h, bad.as_ptr(), 1, 0, &mut c) }, GrpiStatus::InvalidInput);
    unsafe { grpi_algebra_free(h) };
}

#[test]
fn resource_guard_status() {
    let h = load(GROUP_ALGEBRA_Z2);
    let counts = [3usize, 3];
    let mut c = 0usize;
    let st = unsafe { grpi_codimension(h, counts.as_ptr(), 2, 1, &mut c) };
    assert_eq!(st, GrpiStatus::ResourceGuard, "{:?}", last_error());
    unsafe { grpi_algebra_free(h) };
}

#[test]
fn combinatorial_entry_points() {
    let mut good = 0u64;
    assert_eq!(unsafe { grpi_count_d_good(4, 3, &mut good) }, GrpiStatus::Ok);
    assert_eq!(good, 14);
    let mut rank = 0usize;
    assert_eq!(unsafe { grpi_generic_no_identity(1, 2, &mut rank) }, GrpiStatus::Ok);
    assert_eq!(rank, 6);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { grpi_theorem_degree_json(1, 1, 2, 2, true, &mut s) }, GrpiStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["n"], "121088582625159471277495779540");
    assert_eq!(unsafe { grpi_theorem_degree_json(1, 1, 1, 1, false, &mut s) }, GrpiStatus::InvalidInput);
    assert!(s.is_null());
    let ver = unsafe { CStr::from_ptr(grpi_version()) }.to_str().unwrap();
    assert_eq!(ver, env!("CARGO_PKG_VERSION"));
}
