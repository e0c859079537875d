use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::ptr;

use hopfcross_ffi::*;

fn fixture(name: &str) -> CString {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(name);
    CString::new(p.to_str().unwrap()).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    hc_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = hc_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn hopf_round_trip() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hc_hopf_load(fixture("h4.json").as_ptr(), ptr::null(), &mut h), HcStatus::Ok);
        assert_eq!(hc_hopf_dim(h), 4);
        let mut passed = false;
        let mut report = ptr::null_mut();
        assert_eq!(hc_hopf_verify(h, &mut passed, &mut report), HcStatus::Ok);
        assert!(passed);
        assert!(take(report).contains("\"antipode_left\""));
        let mut json = ptr::null_mut();
        assert_eq!(hc_hopf_to_json(h, &mut json), HcStatus::Ok);
        let want = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/h4.json")).unwrap();
        assert_eq!(take(json), want);
        hc_hopf_free(h);
    }
}

#[test]
fn corrupt_algebra_fails_verification() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hc_hopf_load(fixture("h4_corrupt.json").as_ptr(), ptr::null(), &mut h), HcStatus::Ok);
        let mut passed = true;
        assert_eq!(hc_hopf_verify(h, &mut passed, ptr::null_mut()), HcStatus::Ok);
        assert!(!passed);
        hc_hopf_free(h);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(hc_hopf_load(fixture("missing.json").as_ptr(), ptr::null(), &mut h), HcStatus::InvalidInput);
        assert!(h.is_null());
        assert!(last_error().contains("missing.json"));
        assert_eq!(hc_hopf_load(ptr::null(), ptr::null(), &mut h), HcStatus::NullPointer);
        let bad = CString::new("cyclotomic:x").unwrap();
        assert_eq!(hc_hopf_load(fixture("h4.json").as_ptr(), bad.as_ptr(), &mut h), HcStatus::InvalidInput);
        let mut passed = false;
        assert_eq!(hc_hopf_verify(ptr::null(), &mut passed, ptr::null_mut()), HcStatus::NullPointer);
        assert_eq!(hc_hopf_dim(ptr::null()), 0);
        hc_hopf_free(ptr::null_mut());
        hc_string_free(ptr::null_mut());
    }
}

#[test]
fn system_build_and_braid_table() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hc_system_load(fixture("h4_c3_system.json").as_ptr(), ptr::null(), &mut s), HcStatus::Ok);
        let mut passed = false;
        assert_eq!(hc_system_verify(s, &mut passed, ptr::null_mut()), HcStatus::Ok);
        assert!(passed);
        let mut e = ptr::null_mut();
        assert_eq!(hc_system_build(s, &mut e), HcStatus::Ok);
        assert_eq!(hc_hopf_dim(e), 12);
        hc_hopf_free(e);

        let mut table = ptr::null_mut();
        assert_eq!(hc_braid_table(s, fixture("quad_alpha1.json").as_ptr(), &mut table), HcStatus::Ok);
        let table = take(table);
        assert_eq!(table.lines().count(), 13);
        assert!(table.starts_with("sigma\t1#1"));

        let mut none = ptr::null_mut();
        assert_eq!(hc_braid_table(s, fixture("quad_reference.json").as_ptr(), &mut none), HcStatus::MathFailure);
        assert!(last_error().contains("not certified"));
        hc_system_free(s);
    }
}

#[test]
fn uncertified_system_does_not_build() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(hc_system_load(fixture("faults/cocycle.json").as_ptr(), ptr::null(), &mut s), HcStatus::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(hc_system_build(s, &mut e), HcStatus::MathFailure);
        assert!(e.is_null());
        assert!(last_error().contains("FAIL cocycle"));
        hc_system_free(s);
    }
}

#[test]
fn poly_sigma() {
    unsafe {
        let params = CString::new("1,2,z,1").unwrap();
        let field = CString::new("q3").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(hc_poly_sigma(1, 1, 1, 1, params.as_ptr(), field.as_ptr(), &mut out), HcStatus::Ok);
        assert_eq!(take(out), "2+z");
        assert_eq!(hc_poly_sigma(1, 1, 1, 1, params.as_ptr(), ptr::null(), &mut out), HcStatus::InvalidInput);
    }
}
