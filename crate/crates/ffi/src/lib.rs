//! C interface to `spechtcoh`.
//!
//! Every entry point returns a [`SpechtcohStatus`] whose values match the
//! command-line exit codes, plus two codes for null pointers and internal
//! faults. Results come back through out-pointers as opaque handles that
//! must be released with the matching `_free` function. After a non-OK
//! status, [`spechtcoh_last_error`] describes the failure on the calling
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spechtcoh::cohomology::{h0_direct, h1_nonvanishing, Certificate, CertificateRecord, H1Decision};
use spechtcoh::constructions::{Family, PapaParams, TwoPowerParams};
use spechtcoh::{Error, Limits, Partition, Prime};

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpechtcohStatus {
    Ok = 0,
    VerificationFailed = 1,
    Usage = 2,
    ResourceCap = 3,
    NullPointer = 4,
    Internal = 5,
}

/// Outcome of the H¹ decision for one partition and prime.
pub struct SpechtcohDecision {
    inner: H1Decision,
}

/// A checked candidate vector.
pub struct SpechtcohCertificate {
    inner: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_for(e: &Error) -> SpechtcohStatus {
    match e {
        Error::ResourceCap { .. } => SpechtcohStatus::ResourceCap,
        Error::Unverified(_) | Error::ClosureFailure { .. } => SpechtcohStatus::VerificationFailed,
        Error::NotPrime(_)
        | Error::UnsupportedCharacteristic(_)
        | Error::EvenCharacteristic
        | Error::InvalidPartition(_)
        | Error::PartitionSyntax(_)
        | Error::InvalidPsi { .. }
        | Error::InvalidParameters(_)
        | Error::ShapeMismatch { .. }
        | Error::FieldMismatch(..)
        | Error::TabloidShape(_)
        | Error::IndexOutOfRange { .. }
        | Error::InvalidPermutation(_) => SpechtcohStatus::Usage,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<SpechtcohStatus, Fail>) -> SpechtcohStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_for(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is null"));
            SpechtcohStatus::NullPointer
        }
        Ok(Err(Fail::Usage(msg))) => {
            set_error(msg);
            SpechtcohStatus::Usage
        }
        Err(_) => {
            set_error("internal panic".into());
            SpechtcohStatus::Internal
        }
    }
}

unsafe fn partition(parts: *const usize, len: usize) -> Result<Partition, Fail> {
    if parts.is_null() && len > 0 {
        return Err(Fail::Null("parts"));
    }
    let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(parts, len) };
    Ok(Partition::new(slice.to_vec())?)
}

unsafe fn c_str<'a>(s: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail::Usage(format!("{what} is not UTF-8")))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn spechtcoh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Writes whether `H⁰(Σ_d, S^λ)` is nonzero, i.e. `f_λ ∈ S^λ`.
///
/// # Safety
/// `parts` must point to `len` readable values; `out_nonzero` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_h0(p: u32, parts: *const usize, len: usize, out_nonzero: *mut bool) -> SpechtcohStatus {
    guard(|| {
        if out_nonzero.is_null() {
            return Err(Fail::Null("out_nonzero"));
        }
        let lambda = partition(parts, len)?;
        *out_nonzero = h0_direct(&lambda, Prime::new(p)?, &Limits::default())?;
        Ok(SpechtcohStatus::Ok)
    })
}

/// Decides `H¹(Σ_d, S^λ) ≠ 0` for odd `p` with default limits.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_h1_decide(
    p: u32,
    parts: *const usize,
    len: usize,
    out: *mut *mut SpechtcohDecision,
) -> SpechtcohStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = ptr::null_mut();
        let lambda = partition(parts, len)?;
        let inner = h1_nonvanishing(&lambda, Prime::new(p)?, &Limits::default())?;
        *out = Box::into_raw(Box::new(SpechtcohDecision { inner }));
        Ok(SpechtcohStatus::Ok)
    })
}

/// # Safety
/// `decision` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_decision_nonvanishing(decision: *const SpechtcohDecision) -> bool {
    decision.as_ref().is_some_and(|d| d.inner.nonvanishing)
}

/// `dim W - dim(S^λ + span f_λ)`; only its positivity is established.
///
/// # Safety
/// `decision` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_decision_diagnostic_dim(decision: *const SpechtcohDecision) -> usize {
    decision.as_ref().map_or(0, |d| d.inner.diagnostic_dim)
}

/// # Safety
/// `decision` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_decision_dim_specht(decision: *const SpechtcohDecision) -> usize {
    decision.as_ref().map_or(0, |d| d.inner.dim_s)
}

/// # Safety
/// `decision` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_decision_dim_permutation(decision: *const SpechtcohDecision) -> usize {
    decision.as_ref().map_or(0, |d| d.inner.dim_m)
}

/// Copies out the decision's certificate. Writes null when the answer is zero.
///
/// # Safety
/// `decision` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_decision_certificate(
    decision: *const SpechtcohDecision,
    out: *mut *mut SpechtcohCertificate,
) -> SpechtcohStatus {
    guard(|| {
        let d = decision.as_ref().ok_or(Fail::Null("decision"))?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = d
            .inner
            .certificate
            .clone()
            .map_or(ptr::null_mut(), |inner| Box::into_raw(Box::new(SpechtcohCertificate { inner })));
        Ok(SpechtcohStatus::Ok)
    })
}

/// # Safety
/// `decision` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_decision_free(decision: *mut SpechtcohDecision) {
    if !decision.is_null() {
        drop(Box::from_raw(decision));
    }
}

fn finish_certificate(cert: Certificate, out: *mut *mut SpechtcohCertificate) -> SpechtcohStatus {
    let status = if cert.verified() {
        SpechtcohStatus::Ok
    } else {
        set_error(format!("certificate for {} at p = {} fails verification", cert.lambda, cert.p));
        SpechtcohStatus::VerificationFailed
    };
    // SAFETY: callers check `out` for null before building the certificate.
    unsafe { *out = Box::into_raw(Box::new(SpechtcohCertificate { inner: cert })) };
    status
}

/// Parses a certificate record and re-verifies it. On `OK` or
/// `VERIFICATION_FAILED` a handle is written and must be freed.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_certificate_from_json(
    json: *const c_char,
    out: *mut *mut SpechtcohCertificate,
) -> SpechtcohStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = ptr::null_mut();
        let text = c_str(json, "json")?;
        let record: CertificateRecord =
            serde_json::from_str(text).map_err(|e| Fail::Usage(format!("invalid certificate record: {e}")))?;
        let cert = record.verify(&Limits::default())?;
        let status = finish_certificate(cert, out);
        Ok(status)
    })
}

/// Builds and verifies a named family: `"eq-4.1"` (parameters ignored),
/// `"thm-5.11"` with `p, a, b`, or `"papa"` with `p, a`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_certificate_family(
    name: *const c_char,
    p: u32,
    a: u32,
    b: u32,
    out: *mut *mut SpechtcohCertificate,
) -> SpechtcohStatus {
    guard(|| {
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = ptr::null_mut();
        let family = match c_str(name, "name")? {
            "eq-4.1" => Family::ThreeThree,
            "thm-5.11" => Family::FirstRow(TwoPowerParams::new(Prime::new(p)?, a, b)?),
            "papa" => Family::Papa(PapaParams::new(Prime::new(p)?, a)?),
            other => return Err(Fail::Usage(format!("unknown family {other:?}"))),
        };
        let limits = Limits::default();
        let u = family.vector(&limits)?;
        let cert = spechtcoh::cohomology::verify_certificate(
            &family.lambda(),
            family.prime(),
            &u,
            family.provenance(),
            &limits,
        )?;
        Ok(finish_certificate(cert, out))
    })
}

/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_certificate_verified(cert: *const SpechtcohCertificate) -> bool {
    cert.as_ref().is_some_and(|c| c.inner.verified())
}

/// Ambient dimension of the certificate vector.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_certificate_ambient_dim(cert: *const SpechtcohCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.inner.u.len())
}

/// The certificate record as JSON, to be released with
/// [`spechtcoh_string_free`]; null on a null handle.
///
/// # Safety
/// `cert` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_certificate_to_json(cert: *const SpechtcohCertificate) -> *mut c_char {
    let Some(c) = cert.as_ref() else {
        set_error("cert is null".into());
        return ptr::null_mut();
    };
    match serde_json::to_string(&c.inner.to_record()) {
        Ok(s) => CString::new(s).map_or(ptr::null_mut(), CString::into_raw),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `cert` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_certificate_free(cert: *mut SpechtcohCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn spechtcoh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
