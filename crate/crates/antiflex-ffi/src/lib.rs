//! C ABI for the antiflex workbench.
//!
//! Objects cross the boundary as opaque handles created from the same JSON
//! documents the CLI uses; every entry point returns an [`AfStatus`] and
//! reports through JSON strings. Strings returned by this library must be
//! released with [`af_string_free`], handles with their `_free` function.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use antiflex::algebra::Algebra;
use antiflex::error::Error;
use antiflex::identities::AlgebraIdentity;
use antiflex::json::{
    algebra_to_json, bimodule_to_json, parse_algebra, parse_bimodule, parse_linear_map,
    report_to_value, to_canonical_string,
};
use antiflex::linalg::LinearMap;
use antiflex::omod::{Bimodule, ModuleOperator};
use antiflex::report::CheckReport;
use antiflex::rota::WeightedOperator;
use antiflex::scalar::Scalar;

/// Result of every entry point. `Ok` and `CheckFailed` both mean the call
/// completed; `CheckFailed` is the verdict of a failed identity or operator
/// check, with the witness in the report string.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfStatus {
    Ok = 0,
    CheckFailed = 1,
    ParseError = 2,
    DimensionMismatch = 3,
    FieldMismatch = 4,
    CharacteristicObstruction = 5,
    PreconditionFailed = 6,
    UnknownIdentity = 7,
    BudgetExceeded = 8,
    NullArgument = 9,
    InternalError = 10,
}

/// Opaque handle to an algebra.
#[repr(C)]
pub struct AfAlgebra {
    _private: [u8; 0],
}

/// Opaque handle to an exact matrix.
#[repr(C)]
pub struct AfLinearMap {
    _private: [u8; 0],
}

/// Opaque handle to a bimodule.
#[repr(C)]
pub struct AfBimodule {
    _private: [u8; 0],
}

fn status_of(err: &Error) -> AfStatus {
    match err {
        Error::DimensionMismatch(_) => AfStatus::DimensionMismatch,
        Error::FieldMismatch(_) => AfStatus::FieldMismatch,
        Error::DivisionByZero => AfStatus::ParseError,
        Error::CharacteristicObstruction { .. } => AfStatus::CharacteristicObstruction,
        Error::ConstraintViolated(_) | Error::PreconditionFailed(_) => {
            AfStatus::PreconditionFailed
        }
        Error::UnknownIdentity(_) => AfStatus::UnknownIdentity,
        Error::SearchSpaceTooLarge { .. } => AfStatus::BudgetExceeded,
        Error::SingularForm => AfStatus::PreconditionFailed,
        Error::NotPrime(_) | Error::Parse(_) => AfStatus::ParseError,
    }
}

fn into_algebra_handle(a: Algebra) -> *mut AfAlgebra {
    Box::into_raw(Box::new(a)).cast()
}

fn into_map_handle(m: LinearMap) -> *mut AfLinearMap {
    Box::into_raw(Box::new(m)).cast()
}

fn into_bimodule_handle(b: Bimodule) -> *mut AfBimodule {
    Box::into_raw(Box::new(b)).cast()
}

unsafe fn algebra_ref<'a>(p: *const AfAlgebra) -> &'a Algebra {
    &*p.cast()
}

unsafe fn map_ref<'a>(p: *const AfLinearMap) -> &'a LinearMap {
    &*p.cast()
}

unsafe fn bimodule_ref<'a>(p: *const AfBimodule) -> &'a Bimodule {
    &*p.cast()
}

fn to_c_string(text: String) -> *mut c_char {
    // JSON reports never contain interior NULs
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn c_str<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn guarded(body: impl FnOnce() -> AfStatus) -> AfStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(AfStatus::InternalError)
}

fn report_outcome(report: &CheckReport, out_report: *mut *mut c_char) -> AfStatus {
    if !out_report.is_null() {
        unsafe {
            *out_report = to_c_string(to_canonical_string(&report_to_value(report)));
        }
    }
    if report.pass {
        AfStatus::Ok
    } else {
        AfStatus::CheckFailed
    }
}

/// Short name of a status code, e.g. for log lines.
#[no_mangle]
pub extern "C" fn af_status_name(status: AfStatus) -> *const c_char {
    let name: &'static [u8] = match status {
        AfStatus::Ok => b"ok\0",
        AfStatus::CheckFailed => b"check-failed\0",
        AfStatus::ParseError => b"parse-error\0",
        AfStatus::DimensionMismatch => b"dimension-mismatch\0",
        AfStatus::FieldMismatch => b"field-mismatch\0",
        AfStatus::CharacteristicObstruction => b"characteristic-obstruction\0",
        AfStatus::PreconditionFailed => b"precondition-failed\0",
        AfStatus::UnknownIdentity => b"unknown-identity\0",
        AfStatus::BudgetExceeded => b"budget-exceeded\0",
        AfStatus::NullArgument => b"null-argument\0",
        AfStatus::InternalError => b"internal-error\0",
    };
    name.as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must have been returned by an antiflex function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn af_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses an algebra from its JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_algebra_parse(
    json: *const c_char,
    out: *mut *mut AfAlgebra,
) -> AfStatus {
    guarded(|| {
        let (Some(text), false) = (c_str(json), out.is_null()) else {
            return AfStatus::NullArgument;
        };
        match parse_algebra(text) {
            Ok(algebra) => {
                *out = into_algebra_handle(algebra);
                AfStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Canonical JSON of an algebra; free with [`af_string_free`].
///
/// # Safety
/// `a` must be a live algebra handle or null.
#[no_mangle]
pub unsafe extern "C" fn af_algebra_to_json(a: *const AfAlgebra) -> *mut c_char {
    if a.is_null() {
        return ptr::null_mut();
    }
    to_c_string(algebra_to_json(algebra_ref(a)))
}

/// Dimension of an algebra, or SIZE_MAX for a null handle.
///
/// # Safety
/// `a` must be a live algebra handle or null.
#[no_mangle]
pub unsafe extern "C" fn af_algebra_dim(a: *const AfAlgebra) -> usize {
    if a.is_null() {
        return usize::MAX;
    }
    algebra_ref(a).dim()
}

/// # Safety
/// `a` must be a live algebra handle or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn af_algebra_free(a: *mut AfAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a.cast::<Algebra>()));
    }
}

/// Parses a matrix from its JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_linear_map_parse(
    json: *const c_char,
    out: *mut *mut AfLinearMap,
) -> AfStatus {
    guarded(|| {
        let (Some(text), false) = (c_str(json), out.is_null()) else {
            return AfStatus::NullArgument;
        };
        match parse_linear_map(text) {
            Ok(map) => {
                *out = into_map_handle(map);
                AfStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `m` must be a live matrix handle or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn af_linear_map_free(m: *mut AfLinearMap) {
    if !m.is_null() {
        drop(Box::from_raw(m.cast::<LinearMap>()));
    }
}

/// Parses a bimodule from its JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_bimodule_parse(
    json: *const c_char,
    out: *mut *mut AfBimodule,
) -> AfStatus {
    guarded(|| {
        let (Some(text), false) = (c_str(json), out.is_null()) else {
            return AfStatus::NullArgument;
        };
        match parse_bimodule(text) {
            Ok(bimodule) => {
                *out = into_bimodule_handle(bimodule);
                AfStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `b` must be a live bimodule handle or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn af_bimodule_free(b: *mut AfBimodule) {
    if !b.is_null() {
        drop(Box::from_raw(b.cast::<Bimodule>()));
    }
}

/// Checks a named identity; `out_report` (nullable) receives the report
/// JSON. Returns `Ok` on pass, `CheckFailed` on a witnessed failure.
///
/// # Safety
/// `a` must be a live algebra handle, `identity` a NUL-terminated string;
/// `out_report` may be null.
#[no_mangle]
pub unsafe extern "C" fn af_check_identity(
    a: *const AfAlgebra,
    identity: *const c_char,
    out_report: *mut *mut c_char,
) -> AfStatus {
    guarded(|| {
        let (false, Some(name)) = (a.is_null(), c_str(identity)) else {
            return AfStatus::NullArgument;
        };
        let which: AlgebraIdentity = match name.parse() {
            Ok(which) => which,
            Err(e) => return status_of(&e),
        };
        let report = antiflex::identities::check_identity(algebra_ref(a), which);
        report_outcome(&report, out_report)
    })
}

/// Checks the weighted operator identity; the weight is parsed in the
/// algebra's field from its text form (e.g. "0", "-1", "1/2").
///
/// # Safety
/// `a` and `m` must be live handles, `weight` a NUL-terminated string;
/// `out_report` may be null.
#[no_mangle]
pub unsafe extern "C" fn af_check_rota_baxter(
    a: *const AfAlgebra,
    m: *const AfLinearMap,
    weight: *const c_char,
    out_report: *mut *mut c_char,
) -> AfStatus {
    guarded(|| {
        let (false, false, Some(weight)) = (a.is_null(), m.is_null(), c_str(weight)) else {
            return AfStatus::NullArgument;
        };
        let algebra = algebra_ref(a);
        let run = || -> Result<CheckReport, Error> {
            let w = Scalar::parse(algebra.field(), weight)?;
            let op = WeightedOperator::new(map_ref(m).clone(), w)?;
            antiflex::rota::check_rota_baxter(algebra, &op)
        };
        match run() {
            Ok(report) => report_outcome(&report, out_report),
            Err(e) => status_of(&e),
        }
    })
}

/// Checks that the torsion of the operator vanishes.
///
/// # Safety
/// `a` and `m` must be live handles; `out_report` may be null.
#[no_mangle]
pub unsafe extern "C" fn af_check_nijenhuis(
    a: *const AfAlgebra,
    m: *const AfLinearMap,
    out_report: *mut *mut c_char,
) -> AfStatus {
    guarded(|| {
        if a.is_null() || m.is_null() {
            return AfStatus::NullArgument;
        }
        match antiflex::nijenhuis::check_nijenhuis(algebra_ref(a), map_ref(m)) {
            Ok(report) => report_outcome(&report, out_report),
            Err(e) => status_of(&e),
        }
    })
}

/// Checks the module operator identity against a bimodule.
///
/// # Safety
/// `b` and `m` must be live handles; `out_report` may be null.
#[no_mangle]
pub unsafe extern "C" fn af_check_o_operator(
    b: *const AfBimodule,
    m: *const AfLinearMap,
    out_report: *mut *mut c_char,
) -> AfStatus {
    guarded(|| {
        if b.is_null() || m.is_null() {
            return AfStatus::NullArgument;
        }
        let t = ModuleOperator::new(map_ref(m).clone());
        match antiflex::omod::check_o_operator(bimodule_ref(b), &t) {
            Ok(report) => report_outcome(&report, out_report),
            Err(e) => status_of(&e),
        }
    })
}

/// Builds the deformed product `a*b = aR(b) + R(a)b + w ab` as a new
/// algebra handle.
///
/// # Safety
/// `a` and `m` must be live handles, `weight` a NUL-terminated string;
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_rb_induced_product(
    a: *const AfAlgebra,
    m: *const AfLinearMap,
    weight: *const c_char,
    out: *mut *mut AfAlgebra,
) -> AfStatus {
    guarded(|| {
        let (false, false, Some(weight), false) =
            (a.is_null(), m.is_null(), c_str(weight), out.is_null())
        else {
            return AfStatus::NullArgument;
        };
        let algebra = algebra_ref(a);
        let run = || -> Result<Algebra, Error> {
            let w = Scalar::parse(algebra.field(), weight)?;
            let op = WeightedOperator::new(map_ref(m).clone(), w)?;
            antiflex::rota::rb_induced_product(algebra, &op)
        };
        match run() {
            Ok(product) => {
                *out = into_algebra_handle(product);
                AfStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds the deformed product `x*y = N(x)y + xN(y) - N(xy)` as a new
/// algebra handle.
///
/// # Safety
/// `a` and `m` must be live handles; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_nj_induced_product(
    a: *const AfAlgebra,
    m: *const AfLinearMap,
    out: *mut *mut AfAlgebra,
) -> AfStatus {
    guarded(|| {
        if a.is_null() || m.is_null() || out.is_null() {
            return AfStatus::NullArgument;
        }
        match antiflex::nijenhuis::nj_induced_product(algebra_ref(a), map_ref(m)) {
            Ok(product) => {
                *out = into_algebra_handle(product);
                AfStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds the semidirect product algebra of a bimodule.
///
/// # Safety
/// `b` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_semidirect_product(
    b: *const AfBimodule,
    out: *mut *mut AfAlgebra,
) -> AfStatus {
    guarded(|| {
        if b.is_null() || out.is_null() {
            return AfStatus::NullArgument;
        }
        *out = into_algebra_handle(antiflex::omod::semidirect_product(bimodule_ref(b)));
        AfStatus::Ok
    })
}

/// Builds the dual bimodule of an algebra.
///
/// # Safety
/// `a` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn af_dual_bimodule(
    a: *const AfAlgebra,
    out: *mut *mut AfBimodule,
) -> AfStatus {
    guarded(|| {
        if a.is_null() || out.is_null() {
            return AfStatus::NullArgument;
        }
        *out = into_bimodule_handle(antiflex::omod::dual_bimodule(algebra_ref(a)));
        AfStatus::Ok
    })
}

/// Canonical JSON of a bimodule; free with [`af_string_free`].
///
/// # Safety
/// `b` must be a live bimodule handle or null.
#[no_mangle]
pub unsafe extern "C" fn af_bimodule_to_json(b: *const AfBimodule) -> *mut c_char {
    if b.is_null() {
        return ptr::null_mut();
    }
    to_c_string(bimodule_to_json(bimodule_ref(b)))
}

/// Runs the built-in fixture concordance and returns its JSON report; free
/// with [`af_string_free`].
#[no_mangle]
pub extern "C" fn af_demo_report() -> *mut c_char {
    catch_unwind(|| to_c_string(to_canonical_string(&antiflex::cli::demo_report())))
        .unwrap_or(ptr::null_mut())
}
