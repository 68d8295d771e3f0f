//! C ABI for cfkit. Continued fractions travel as opaque handles; scalars
//! cross the boundary as exact rational strings ("p/q") or decimal strings,
//! never as floats. Every fallible call returns a `CfkitStatus`; on failure
//! a human-readable message is available from `cfkit_last_error_message`
//! until the next failing call on the same thread.
//!
//! Strings returned through `char **` out-parameters are owned by the caller
//! and must be released with `cfkit_string_free`; handles with
//! `cfkit_cf_free`.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;

use cfkit::cf::{self, CFSpec, CoefficientSequence};
use cfkit::diagnostics::classify;
use cfkit::error::ErrorClass;
use cfkit::expr::{parse_constant_expr, parse_sequence_expr};
use cfkit::numerics::{pi_decimal, Rational};
use cfkit::transforms::{apply_equivalence, ScalingSequence};
use cfkit::verify::verify_to_digits;

/// Opaque continued fraction handle.
pub struct CfkitCf(CFSpec);

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CfkitStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Bad input text or arguments (expressions, rationals, presets, files).
    ParseError = 3,
    /// A numeric failure during evaluation (pole, undefined convergent,
    /// uncertifiable bracket).
    NumericError = 4,
    /// The library panicked; state is unchanged but the call did nothing.
    InternalError = 5,
}

/// Verification outcome; `verified` holds exactly when
/// `achieved_decimals >= requested_decimals`. `achieved_decimals` of
/// `UINT32_MAX` encodes an exact rational hit.
#[repr(C)]
pub struct CfkitVerifyResult {
    pub verified: bool,
    pub achieved_decimals: u32,
    pub requested_decimals: u32,
    pub depth_used: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Display) {
    let text = message.to_string().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = Some(CString::new(text).expect("nul-free message"));
    });
}

fn fail(e: &cfkit::Error) -> CfkitStatus {
    set_error(e);
    match e.class() {
        ErrorClass::Usage => CfkitStatus::ParseError,
        ErrorClass::Numeric => CfkitStatus::NumericError,
    }
}

/// Message for the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cfkit_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `p` must be null or a nul-terminated string valid for the call duration.
unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, CfkitStatus> {
    if p.is_null() {
        set_error("null pointer argument");
        return Err(CfkitStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        CfkitStatus::InvalidUtf8
    })
}

fn write_handle(cf: CFSpec, out: *mut *mut CfkitCf) -> CfkitStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return CfkitStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(CfkitCf(cf))) };
    CfkitStatus::Ok
}

fn write_string(s: String, out: *mut *mut c_char) -> CfkitStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return CfkitStatus::NullPointer;
    }
    match CString::new(s) {
        Ok(cs) => {
            unsafe { *out = cs.into_raw() };
            CfkitStatus::Ok
        }
        Err(_) => {
            set_error("result contained an interior nul byte");
            CfkitStatus::InternalError
        }
    }
}

fn guarded(body: impl FnOnce() -> CfkitStatus) -> CfkitStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            CfkitStatus::InternalError
        }
    }
}

/// # Safety
/// `cf` must be null or a handle from this library that has not been freed.
unsafe fn handle_arg<'a>(cf: *const CfkitCf) -> Result<&'a CFSpec, CfkitStatus> {
    if cf.is_null() {
        set_error("null handle");
        return Err(CfkitStatus::NullPointer);
    }
    Ok(&(*cf).0)
}

/// Builds one of the built-in fractions: "conjecture-pi4", "euler-pi4" or
/// "gauss-pi4".
///
/// # Safety
/// `name` must be a valid nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_cf_preset(
    name: *const c_char,
    out: *mut *mut CfkitCf,
) -> CfkitStatus {
    guarded(|| {
        let name = match str_arg(name) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match cf::preset(name) {
            Ok(spec) => write_handle(spec, out),
            Err(e) => fail(&e),
        }
    })
}

/// Builds a fraction from closed forms for a_n and b_n plus an optional
/// leading term b0 ("p/q"; null means 0).
///
/// # Safety
/// Expression pointers must be valid nul-terminated strings (`b0` may be
/// null); `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_cf_from_exprs(
    a_expr: *const c_char,
    b_expr: *const c_char,
    b0: *const c_char,
    out: *mut *mut CfkitCf,
) -> CfkitStatus {
    guarded(|| {
        let a_text = match str_arg(a_expr) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let b_text = match str_arg(b_expr) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let b0_value: Rational = if b0.is_null() {
            Rational::zero()
        } else {
            let text = match str_arg(b0) {
                Ok(s) => s,
                Err(status) => return status,
            };
            match text.parse() {
                Ok(v) => v,
                Err(e) => return fail(&e),
            }
        };
        let build = || -> cfkit::Result<CFSpec> {
            Ok(CFSpec::new(
                b0_value.clone(),
                CoefficientSequence::from_poly(parse_sequence_expr(a_text)?),
                CoefficientSequence::from_poly(parse_sequence_expr(b_text)?),
            ))
        };
        match build() {
            Ok(spec) => write_handle(spec, out),
            Err(e) => fail(&e),
        }
    })
}

/// Parses a CF-spec JSON document (the same format the CLI emits).
///
/// # Safety
/// `json` must be a valid nul-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_cf_from_json(
    json: *const c_char,
    out: *mut *mut CfkitCf,
) -> CfkitStatus {
    guarded(|| {
        let text = match str_arg(json) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match cf::file::from_json(text) {
            Ok(spec) => write_handle(spec, out),
            Err(e) => fail(&e),
        }
    })
}

/// Serializes the fraction as CF-spec JSON.
///
/// # Safety
/// `cf` must be a live handle; `out` a valid pointer. Free the string with
/// `cfkit_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cfkit_cf_to_json(
    cf: *const CfkitCf,
    out: *mut *mut c_char,
) -> CfkitStatus {
    guarded(|| {
        let spec = match handle_arg(cf) {
            Ok(s) => s,
            Err(status) => return status,
        };
        write_string(cf::file::to_json(spec), out)
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `cf` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn cfkit_cf_free(cf: *mut CfkitCf) {
    if !cf.is_null() {
        drop(Box::from_raw(cf));
    }
}

/// Convergent f_depth as an exact rational string "p/q".
///
/// # Safety
/// `cf` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_convergent(
    cf: *const CfkitCf,
    depth: u32,
    out: *mut *mut c_char,
) -> CfkitStatus {
    guarded(|| {
        let spec = match handle_arg(cf) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if depth == 0 {
            set_error("depth must be at least 1");
            return CfkitStatus::ParseError;
        }
        match cf::convergent(spec, depth as usize) {
            Ok(v) => write_string(v.to_string(), out),
            Err(e) => fail(&e),
        }
    })
}

/// Convergent f_depth as a decimal string truncated at `digits` places.
///
/// # Safety
/// `cf` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_convergent_decimal(
    cf: *const CfkitCf,
    depth: u32,
    digits: u32,
    out: *mut *mut c_char,
) -> CfkitStatus {
    guarded(|| {
        let spec = match handle_arg(cf) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if depth == 0 {
            set_error("depth must be at least 1");
            return CfkitStatus::ParseError;
        }
        match cf::convergent(spec, depth as usize) {
            Ok(v) => write_string(v.to_decimal(digits), out),
            Err(e) => fail(&e),
        }
    })
}

/// Applies the equivalence transformation given by the scaling closed form
/// (e.g. "-(2*n-1)"), producing a new handle.
///
/// # Safety
/// `cf` must be a live handle; `scale_expr` a valid nul-terminated string;
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_transform_scale(
    cf: *const CfkitCf,
    scale_expr: *const c_char,
    out: *mut *mut CfkitCf,
) -> CfkitStatus {
    guarded(|| {
        let spec = match handle_arg(cf) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let text = match str_arg(scale_expr) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let run = || -> cfkit::Result<CFSpec> {
            let scaling =
                ScalingSequence::new(CoefficientSequence::from_poly(parse_sequence_expr(text)?));
            apply_equivalence(spec, &scaling)
        };
        match run() {
            Ok(transformed) => write_handle(transformed, out),
            Err(e) => fail(&e),
        }
    })
}

/// Ratio-test diagnostics as a JSON object
/// {"limit", "regime", "rho_monotone_from", "abs_b_sum_diverges"}.
///
/// # Safety
/// `cf` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_diagnose(
    cf: *const CfkitCf,
    probe_depth: u32,
    out: *mut *mut c_char,
) -> CfkitStatus {
    guarded(|| {
        let spec = match handle_arg(cf) {
            Ok(s) => s,
            Err(status) => return status,
        };
        match classify(spec, u64::from(probe_depth.max(2))) {
            Ok(report) => {
                let json = format!(
                    "{{\"limit\":\"{}\",\"regime\":\"{}\",\"rho_monotone_from\":{},\"abs_b_sum_diverges\":{}}}",
                    report.limit,
                    report.regime,
                    report
                        .rho_monotone_from
                        .map_or("null".to_string(), |m| m.to_string()),
                    report.abs_b_sum_diverges,
                );
                write_string(json, out)
            }
            Err(e) => fail(&e),
        }
    })
}

/// Verifies the fraction against a constant target (e.g. "-pi/4") to
/// `digits` certified decimals, searching depths up to `max_depth`. Returns
/// Ok with `result->verified` false when the precision is not reached.
///
/// # Safety
/// `cf` must be a live handle; `target` a valid nul-terminated string;
/// `result` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_verify(
    cf: *const CfkitCf,
    target: *const c_char,
    digits: u32,
    max_depth: u32,
    result: *mut CfkitVerifyResult,
) -> CfkitStatus {
    guarded(|| {
        let spec = match handle_arg(cf) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let target_text = match str_arg(target) {
            Ok(s) => s,
            Err(status) => return status,
        };
        if result.is_null() {
            set_error("null out-pointer");
            return CfkitStatus::NullPointer;
        }
        if digits == 0 || max_depth == 0 {
            set_error("digits and max_depth must be at least 1");
            return CfkitStatus::ParseError;
        }
        let run = || -> cfkit::Result<cfkit::verify::VerificationVerdict> {
            let expr = parse_constant_expr(target_text)?;
            verify_to_digits(spec, &expr, digits, max_depth as usize)
        };
        match run() {
            Ok(verdict) => {
                *result = CfkitVerifyResult {
                    verified: verdict.verified,
                    achieved_decimals: verdict.achieved_decimals,
                    requested_decimals: verdict.requested_decimals,
                    depth_used: verdict.depth_used as u32,
                };
                CfkitStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// π truncated to `digits` decimal places, certified by the interval oracle.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfkit_pi_decimal(digits: u32, out: *mut *mut c_char) -> CfkitStatus {
    guarded(|| {
        if digits == 0 {
            set_error("digits must be at least 1");
            return CfkitStatus::ParseError;
        }
        match pi_decimal(digits) {
            Ok(s) => write_string(s, out),
            Err(e) => fail(&e),
        }
    })
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn cfkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
