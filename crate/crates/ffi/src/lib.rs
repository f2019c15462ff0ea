//! C ABI over `holext`.
//!
//! Every fallible function returns an [`HxStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`hx_last_error`]. Strings returned to the caller must be
//! released with [`hx_string_free`], handles with their `_free` function.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::{c_char, c_int, size_t};

use holext::expr::parse_poly;
use holext::numeric::{moment_quad, Complex64, QuadConfig};
use holext::report::Report;
use holext::slicer::{certify_nd_with, default_planes, BPolyN, NdCertificate, SlicePlane};
use holext::{certify, Certificate, Error, GComplex};

/// Result codes. `HX_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    InvalidArgument = 5,
    InsufficientNodes = 6,
    DegreeLimit = 7,
    Invariant = 8,
    Panic = 9,
}

/// Polynomial boundary data in `z1..zn` and conjugates.
pub struct HxPoly {
    poly: BPolyN,
}

/// Verdict for one polynomial, with its witness or extension.
pub struct HxCertificate {
    report: Report,
    extends: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(HxStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) => HxStatus::Parse,
            Error::Dimension { .. } | Error::ConjugateSecondVariable => HxStatus::Dimension,
            Error::InsufficientNodes { .. } => HxStatus::InsufficientNodes,
            Error::DegreeLimit { .. } => HxStatus::DegreeLimit,
            Error::Invariant(_) => HxStatus::Invariant,
            _ => HxStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> HxStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HxStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside holext".into());
            HxStatus::Panic
        }
    }
}

fn null() -> Fail {
    Fail(HxStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(HxStatus::InvalidUtf8, "string is not valid UTF-8".into()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(HxStatus::InvalidArgument, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Parses `text` as a polynomial in dimension `dim` (at least 2).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_poly_parse(text: *const c_char, dim: size_t, out: *mut *mut HxPoly) -> HxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        if dim < 2 {
            return Err(Fail(HxStatus::Dimension, "dimension must be at least 2".into()));
        }
        let text = read_str(text)?;
        let poly = parse_poly(text, dim).map_err(|e| Fail(HxStatus::Parse, format!("parse error {e}")))?;
        *out = Box::into_raw(Box::new(HxPoly { poly }));
        Ok(())
    })
}

/// # Safety
/// `poly` must come from [`hx_poly_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hx_poly_free(poly: *mut HxPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Dimension of `poly`, or 0 for a null handle.
///
/// # Safety
/// `poly` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hx_poly_dim(poly: *const HxPoly) -> size_t {
    poly.as_ref().map_or(0, |p| p.poly.dim())
}

/// Canonical text of `poly`; parsing it back yields the same polynomial.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_poly_to_string(poly: *const HxPoly, out: *mut *mut c_char) -> HxStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        write_string(out, p.poly.to_string())
    })
}

/// Normal form of `poly` (`|z|² = 1` applied), as a new handle.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_poly_normal_form(poly: *const HxPoly, out: *mut *mut HxPoly) -> HxStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        *out = Box::into_raw(Box::new(HxPoly {
            poly: p.poly.normal_form(),
        }));
        Ok(())
    })
}

fn nd_report(f: &BPolyN, planes: &[SlicePlane], cert: &NdCertificate) -> Report {
    Report::from_nd_certificate(cert, planes, &f.normal_form()).with_input(f.to_string())
}

/// Decides holomorphic extension; in dimension above 2 the default slice
/// family is certified as well.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_certify(poly: *const HxPoly, out: *mut *mut HxCertificate) -> HxStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let cert = if p.poly.dim() == 2 {
            let f = p.poly.to_bpoly2()?;
            let c: Certificate = certify(&f)?;
            HxCertificate {
                extends: c.extends(),
                report: Report::from_certificate(&c).with_input(f.to_string()),
            }
        } else {
            let planes = default_planes(p.poly.dim());
            let c = certify_nd_with(&p.poly, &planes)?;
            HxCertificate {
                extends: c.extends(),
                report: nd_report(&p.poly, &planes, &c),
            }
        };
        *out = Box::into_raw(Box::new(cert));
        Ok(())
    })
}

/// 1 if the data extends, 0 if obstructed, -1 for a null handle.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hx_certificate_extends(cert: *const HxCertificate) -> c_int {
    cert.as_ref().map_or(-1, |c| c.extends as c_int)
}

/// The certificate as a JSON report.
///
/// # Safety
/// `cert` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_certificate_to_json(cert: *const HxCertificate, out: *mut *mut c_char) -> HxStatus {
    guard(|| {
        let c = cert.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        write_string(out, c.report.to_json())
    })
}

/// # Safety
/// `cert` must come from [`hx_certify`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hx_certificate_free(cert: *mut HxCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Exact moment `mu(a, N)` of a 2-dimensional polynomial, written as a
/// Gaussian rational such as `"1/2-3/4i"`. `a` uses the same syntax.
///
/// # Safety
/// `poly` must be a live handle, `a` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hx_moment(poly: *const HxPoly, a: *const c_char, n: u32, out: *mut *mut c_char) -> HxStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let a: GComplex = read_str(a)?
            .parse()
            .map_err(|e: holext::ParseError| Fail(HxStatus::Parse, format!("parse error {e}")))?;
        let f = p.poly.to_bpoly2()?;
        write_string(out, holext::moment::moment(&f, &a, n).mu.to_string())
    })
}

/// Trapezoid approximation of the same moment with `nodes` nodes.
///
/// # Safety
/// `poly` must be a live handle; `out_re` and `out_im` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hx_moment_quad(
    poly: *const HxPoly,
    a_re: f64,
    a_im: f64,
    n: u32,
    nodes: size_t,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HxStatus {
    guard(|| {
        let p = poly.as_ref().ok_or_else(null)?;
        if out_re.is_null() || out_im.is_null() {
            return Err(null());
        }
        let f = p.poly.to_bpoly2()?;
        let cfg = QuadConfig::new(nodes, 0.0);
        let mu = moment_quad(&f, Complex64::new(a_re, a_im), n, &cfg)?;
        *out_re = mu.re;
        *out_im = mu.im;
        Ok(())
    })
}

/// Message for the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn hx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        let code = |e: Error| Fail::from(e).0;
        assert_eq!(code(Error::UndefinedDegree), HxStatus::InvalidArgument);
        assert_eq!(code(Error::Invariant("x".into())), HxStatus::Invariant);
        assert_eq!(code(Error::DegreeLimit { degree: 9, limit: 4 }), HxStatus::DegreeLimit);
        assert_eq!(code(Error::Dimension { expected: 2, got: 3 }), HxStatus::Dimension);
    }

    #[test]
    fn panics_become_status_codes() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, HxStatus::Panic);
        assert!(!hx_last_error().is_null());
        assert_eq!(guard(|| Ok(())), HxStatus::Ok);
        assert!(hx_last_error().is_null());
    }
}
