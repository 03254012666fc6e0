//! C ABI for the permion library.
//!
//! Conventions:
//! - Objects cross the boundary as opaque handles; free them with the
//!   matching `*_free` function.
//! - Fallible calls return a [`PermionStatus`] code and write results through
//!   out-pointers, which are untouched on failure.
//! - Strings returned by the library are NUL-terminated UTF-8 owned by the
//!   library; release them with `permion_string_free`.

use std::ffi::{c_char, CStr, CString};

use permion::perm::{format_cycles, parse_cycles};
use permion::repr::{natural_rep, verify_homomorphism};
use permion::second_quant::{verify_car, verify_ccr};
use permion::Permutation;

/// Error codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PermionStatus {
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// Text input was not valid UTF-8 or not valid cycle notation.
    ParseError = 2,
    /// An argument was outside the supported range.
    InvalidArgument = 3,
    /// The requested verification ran and found a violation.
    VerificationFailed = 4,
}

/// Opaque permutation handle.
pub struct PermionPerm {
    inner: Permutation,
}

fn to_handle(p: Permutation) -> *mut PermionPerm {
    Box::into_raw(Box::new(PermionPerm { inner: p }))
}

/// Parses cycle notation (e.g. "(12)(3,10)" or "e") into a permutation of
/// degree `n`. On success writes a new handle to `out`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_parse(
    text: *const c_char,
    n: usize,
    out: *mut *mut PermionPerm,
) -> PermionStatus {
    if text.is_null() || out.is_null() {
        return PermionStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return PermionStatus::ParseError;
    };
    match parse_cycles(text, n) {
        Ok(p) => {
            *out = to_handle(p);
            PermionStatus::Ok
        }
        Err(_) => PermionStatus::ParseError,
    }
}

/// Builds the identity permutation of degree `n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_identity(
    n: usize,
    out: *mut *mut PermionPerm,
) -> PermionStatus {
    if out.is_null() {
        return PermionStatus::NullArgument;
    }
    if n == 0 {
        return PermionStatus::InvalidArgument;
    }
    *out = to_handle(Permutation::identity(n));
    PermionStatus::Ok
}

/// Composes two permutations of equal degree: `(a ∘ b)(i) = a(b(i))`.
///
/// # Safety
/// `a`, `b`, and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_compose(
    a: *const PermionPerm,
    b: *const PermionPerm,
    out: *mut *mut PermionPerm,
) -> PermionStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return PermionStatus::NullArgument;
    }
    match (*a).inner.compose(&(*b).inner) {
        Ok(p) => {
            *out = to_handle(p);
            PermionStatus::Ok
        }
        Err(_) => PermionStatus::InvalidArgument,
    }
}

/// Writes the inverse of `p` to `out`.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_inverse(
    p: *const PermionPerm,
    out: *mut *mut PermionPerm,
) -> PermionStatus {
    if p.is_null() || out.is_null() {
        return PermionStatus::NullArgument;
    }
    *out = to_handle((*p).inner.inverse());
    PermionStatus::Ok
}

/// Returns the sign of the permutation (+1 or -1); 0 only on NULL input.
///
/// # Safety
/// `p` must be a valid pointer or NULL.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_sign(p: *const PermionPerm) -> i32 {
    if p.is_null() {
        return 0;
    }
    (*p).inner.sign() as i32
}

/// Returns the degree n of the permutation; 0 only on NULL input.
///
/// # Safety
/// `p` must be a valid pointer or NULL.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_degree(p: *const PermionPerm) -> usize {
    if p.is_null() {
        return 0;
    }
    (*p).inner.degree()
}

/// Image of the point `i` (1-based); 0 on NULL input or out-of-range point.
///
/// # Safety
/// `p` must be a valid pointer or NULL.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_apply(p: *const PermionPerm, i: usize) -> usize {
    if p.is_null() || i == 0 || i > (*p).inner.degree() {
        return 0;
    }
    (*p).inner.apply(i)
}

/// Canonical cycle notation of the permutation as an owned string.
///
/// # Safety
/// `p` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_format(
    p: *const PermionPerm,
    out: *mut *mut c_char,
) -> PermionStatus {
    if p.is_null() || out.is_null() {
        return PermionStatus::NullArgument;
    }
    let s = format_cycles(&(*p).inner);
    *out = CString::new(s).expect("no interior NUL").into_raw();
    PermionStatus::Ok
}

/// Releases a permutation handle. NULL is a no-op.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn permion_perm_free(p: *mut PermionPerm) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn permion_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// JSON description of the natural representation matrix of the permutation
/// whose cycle notation is `element`, acting on n points.
///
/// # Safety
/// `element` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn permion_natural_matrix_json(
    element: *const c_char,
    n: usize,
    out: *mut *mut c_char,
) -> PermionStatus {
    if element.is_null() || out.is_null() {
        return PermionStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(element).to_str() else {
        return PermionStatus::ParseError;
    };
    let Ok(p) = parse_cycles(text, n) else {
        return PermionStatus::ParseError;
    };
    let Ok(rep) = natural_rep(n) else {
        return PermionStatus::InvalidArgument;
    };
    let Some(m) = rep.matrix(&p) else {
        return PermionStatus::InvalidArgument;
    };
    let json = serde_json::to_string(&permion::linalg::matrix_to_json(m))
        .expect("serializable");
    *out = CString::new(json).expect("no interior NUL").into_raw();
    PermionStatus::Ok
}

/// Verifies the homomorphism law for the natural representation of S_n.
#[no_mangle]
pub extern "C" fn permion_verify_natural_homomorphism(n: usize) -> PermionStatus {
    let Ok(rep) = natural_rep(n) else {
        return PermionStatus::InvalidArgument;
    };
    match verify_homomorphism(&rep) {
        Ok(report) if report.ok => PermionStatus::Ok,
        Ok(_) => PermionStatus::VerificationFailed,
        Err(_) => PermionStatus::InvalidArgument,
    }
}

/// Verifies the fermionic anticommutation relations on `modes` modes.
#[no_mangle]
pub extern "C" fn permion_verify_car(modes: usize) -> PermionStatus {
    match verify_car(modes) {
        Ok(report) if report.max_violation == 0 => PermionStatus::Ok,
        Ok(_) => PermionStatus::VerificationFailed,
        Err(_) => PermionStatus::InvalidArgument,
    }
}

/// Verifies the bosonic commutation relations on the safe subspace of a
/// truncated basis; writes the observed truncation artifact to `artifact_out`
/// when non-NULL.
///
/// # Safety
/// `artifact_out` must be a valid pointer or NULL.
#[no_mangle]
pub unsafe extern "C" fn permion_verify_ccr(
    modes: usize,
    truncation: u32,
    artifact_out: *mut f64,
) -> PermionStatus {
    match verify_ccr(modes, truncation) {
        Ok(report) => {
            if !artifact_out.is_null() {
                *artifact_out = report.truncation_artifact;
            }
            if report.max_violation_on_safe_subspace < 1e-12 {
                PermionStatus::Ok
            } else {
                PermionStatus::VerificationFailed
            }
        }
        Err(_) => PermionStatus::InvalidArgument,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;
    use std::ptr;

    #[test]
    fn parse_compose_format_round_trip() {
        unsafe {
            let text = CString::new("(12)").unwrap();
            let mut a = ptr::null_mut();
            assert_eq!(permion_perm_parse(text.as_ptr(), 3, &mut a), PermionStatus::Ok);
            let text = CString::new("(23)").unwrap();
            let mut b = ptr::null_mut();
            assert_eq!(permion_perm_parse(text.as_ptr(), 3, &mut b), PermionStatus::Ok);
            let mut c = ptr::null_mut();
            assert_eq!(permion_perm_compose(a, b, &mut c), PermionStatus::Ok);
            let mut s = ptr::null_mut();
            assert_eq!(permion_perm_format(c, &mut s), PermionStatus::Ok);
            let rendered = CStr::from_ptr(s).to_str().unwrap().to_string();
            assert_eq!(rendered, "(123)");
            assert_eq!(permion_perm_sign(c), 1);
            permion_string_free(s);
            permion_perm_free(a);
            permion_perm_free(b);
            permion_perm_free(c);
        }
    }

    #[test]
    fn bad_input_reports_parse_error() {
        unsafe {
            let text = CString::new("(19)").unwrap();
            let mut p = ptr::null_mut();
            assert_eq!(
                permion_perm_parse(text.as_ptr(), 3, &mut p),
                PermionStatus::ParseError
            );
            assert_eq!(
                permion_perm_parse(ptr::null(), 3, &mut p),
                PermionStatus::NullArgument
            );
        }
    }

    #[test]
    fn verification_entry_points() {
        assert_eq!(permion_verify_natural_homomorphism(3), PermionStatus::Ok);
        assert_eq!(permion_verify_car(3), PermionStatus::Ok);
        unsafe {
            let mut artifact = 0.0;
            assert_eq!(permion_verify_ccr(1, 5, &mut artifact), PermionStatus::Ok);
            assert!((artifact + 5.0).abs() < 1e-12);
        }
    }

    #[test]
    fn natural_matrix_json_shape() {
        unsafe {
            let text = CString::new("(12)").unwrap();
            let mut s = ptr::null_mut();
            assert_eq!(
                permion_natural_matrix_json(text.as_ptr(), 3, &mut s),
                PermionStatus::Ok
            );
            let json: serde_json::Value =
                serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
            assert_eq!(json["rows"], 3);
            assert_eq!(json["entries"][0][1], "1");
            permion_string_free(s);
        }
    }
}
