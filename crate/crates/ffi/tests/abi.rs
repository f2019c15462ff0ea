use std::ffi::{CStr, CString};
use std::ptr;

use holext_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut libc::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    hx_string_free(p);
    s
}

unsafe fn parse(text: &str, dim: usize) -> *mut HxPoly {
    let mut p = ptr::null_mut();
    assert_eq!(hx_poly_parse(cstr(text).as_ptr(), dim, &mut p), HxStatus::Ok);
    p
}

unsafe fn certify_json(text: &str, dim: usize) -> (i32, serde_json::Value) {
    let p = parse(text, dim);
    let mut c = ptr::null_mut();
    assert_eq!(hx_certify(p, &mut c), HxStatus::Ok);
    let extends = hx_certificate_extends(c);
    let mut s = ptr::null_mut();
    assert_eq!(hx_certificate_to_json(c, &mut s), HxStatus::Ok);
    let json = take_string(s);
    hx_certificate_free(c);
    hx_poly_free(p);
    (extends, serde_json::from_str(&json).unwrap())
}

#[test]
fn obstructed_witness_over_abi() {
    unsafe {
        let (extends, v) = certify_json("z1*~z1", 2);
        assert_eq!(extends, 0);
        assert_eq!(v["status"].as_str(), Some("obstructed"));
        assert_eq!(v["N"], 0);
        assert_eq!(v["coefficient"].as_str(), Some("-1"));
    }
}

#[test]
fn extension_over_abi() {
    unsafe {
        let (extends, v) = certify_json("z1*~z1 + z2*~z2 + z1^2", 2);
        assert_eq!(extends, 1);
        assert_eq!(v["extension"].as_str(), Some("z1^2 + 1"));

        let (extends, v) = certify_json("z1*~z1 + z2*~z2 + z3*~z3 - z2", 3);
        assert_eq!(extends, 1);
        assert_eq!(v["slices"]["gluing"].as_str(), Some("agrees"));
    }
}

#[test]
fn round_trip_and_normal_form() {
    unsafe {
        let p = parse("(3/2)*z1^2*z2 - ~z2", 2);
        assert_eq!(hx_poly_dim(p), 2);
        let mut s = ptr::null_mut();
        assert_eq!(hx_poly_to_string(p, &mut s), HxStatus::Ok);
        assert_eq!(take_string(s), "(3/2)*z1^2*z2 - ~z2");
        hx_poly_free(p);

        let p = parse("z2*~z2", 2);
        let mut q = ptr::null_mut();
        assert_eq!(hx_poly_normal_form(p, &mut q), HxStatus::Ok);
        assert_eq!(hx_poly_to_string(q, &mut s), HxStatus::Ok);
        assert_eq!(take_string(s), "-z1*~z1 + 1");
        hx_poly_free(q);
        hx_poly_free(p);
    }
}

#[test]
fn moments_exact_and_quadrature() {
    unsafe {
        let p = parse("z1*~z1", 2);
        let mut s = ptr::null_mut();
        assert_eq!(hx_moment(p, cstr("1").as_ptr(), 0, &mut s), HxStatus::Ok);
        assert_eq!(take_string(s), "-1/4");

        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(hx_moment_quad(p, 1.0, 0.0, 0, 257, &mut re, &mut im), HxStatus::Ok);
        assert!((re + 0.25).abs() < 1e-12 && im.abs() < 1e-12);

        assert_eq!(hx_moment_quad(p, 1.0, 0.0, 0, 3, &mut re, &mut im), HxStatus::InsufficientNodes);
        assert!(!hx_last_error().is_null());
        hx_poly_free(p);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(hx_poly_parse(cstr("z1 + z3").as_ptr(), 2, &mut p), HxStatus::Parse);
        assert!(p.is_null());
        let msg = CStr::from_ptr(hx_last_error()).to_str().unwrap();
        assert!(msg.contains("position 5"), "{msg}");

        assert_eq!(hx_poly_parse(ptr::null(), 2, &mut p), HxStatus::NullPointer);
        assert_eq!(hx_poly_parse(cstr("z1").as_ptr(), 1, &mut p), HxStatus::Dimension);
        let bad = [0xffu8, 0];
        assert_eq!(hx_poly_parse(bad.as_ptr().cast(), 2, &mut p), HxStatus::InvalidUtf8);

        let q = parse("z1*z3", 3);
        let mut s = ptr::null_mut();
        assert_eq!(hx_moment(q, cstr("1").as_ptr(), 0, &mut s), HxStatus::Dimension);
        let r = parse("z1", 2);
        assert_eq!(hx_moment(r, cstr("1/0").as_ptr(), 0, &mut s), HxStatus::Parse);
        hx_poly_free(q);
        hx_poly_free(r);

        let mut c = ptr::null_mut();
        assert_eq!(hx_certify(ptr::null(), &mut c), HxStatus::NullPointer);
        assert_eq!(hx_certificate_extends(ptr::null()), -1);
        assert_eq!(hx_poly_dim(ptr::null()), 0);

        let ok = parse("z1", 2);
        assert!(hx_last_error().is_null());
        hx_poly_free(ok);
        hx_poly_free(ptr::null_mut());
        hx_certificate_free(ptr::null_mut());
        hx_string_free(ptr::null_mut());
    }
}
