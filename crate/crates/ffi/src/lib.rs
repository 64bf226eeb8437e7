//! C bindings for `knotting`.
//!
//! Every exported function is prefixed with `knotting_`, returns a
//! [`KnottingStatus`] and writes its result through an out-pointer. Handles
//! are opaque and released with the matching `_free` function; strings
//! returned by the library are released with [`knotting_string_free`]. On any
//! status other than `KNOTTING_STATUS_OK` a message is available from
//! [`knotting_last_error`] on the same thread.

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use knotting::fpgroups::{
    abelianize, is_cyclic_of_order, smith_normal_form, todd_coxeter, CyclicVerdict, GroupError, IntMatrix, Presentation,
};
use knotting::knots::{alexander, knot_determinant, knot_parse, KnotError, KnotExpr};
use knotting::laurent::LaurentPoly;
use knotting::nestcurves::{NestCurve, NestError};
use knotting::swcalc::{
    annulus_rim_surgery_sw, basic_classes, distinguish, trefoil_family, verify_trefoil_nonvanishing, SwError,
    SwPolynomial,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnottingStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidKnot = 4,
    InvalidInput = 5,
    Overflow = 6,
    Inconclusive = 7,
    NotNormalized = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnottingVerdict {
    Holds = 0,
    Fails = 1,
    Inconclusive = 2,
}

pub struct KnottingKnot(KnotExpr);
pub struct KnottingLaurent(LaurentPoly);
pub struct KnottingPresentation(Presentation);
pub struct KnottingSw(SwPolynomial);

struct Failure(KnottingStatus, String);

type Res<T> = Result<T, Failure>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

impl From<KnotError> for Failure {
    fn from(e: KnotError) -> Self {
        let status = match e {
            KnotError::Parse { .. } => KnottingStatus::ParseError,
            _ => KnottingStatus::InvalidKnot,
        };
        Failure(status, e.to_string())
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        let status = match e {
            GroupError::Parse { .. } => KnottingStatus::ParseError,
            _ => KnottingStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<NestError> for Failure {
    fn from(e: NestError) -> Self {
        Failure(KnottingStatus::InvalidInput, e.to_string())
    }
}

impl From<SwError> for Failure {
    fn from(e: SwError) -> Self {
        let status = match e {
            SwError::NotNormalized(_) => KnottingStatus::NotNormalized,
            _ => KnottingStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(KnottingStatus::ParseError, format!("{}:{}: {e}", e.line(), e.column()))
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard<F: FnOnce() -> Res<()>>(f: F) -> KnottingStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KnottingStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(format!("internal panic: {msg}"));
            KnottingStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(KnottingStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `p` must be null or a valid nul-terminated string.
unsafe fn read_str<'a>(p: *const c_char) -> Res<&'a str> {
    if p.is_null() {
        return Err(null());
    }
    let c = unsafe { CStr::from_ptr(p) };
    c.to_str()
        .map_err(|e| Failure(KnottingStatus::InvalidUtf8, e.to_string()))
}

/// # Safety
/// `p` must be null or point to a live handle created by this library.
unsafe fn borrow<'a, T>(p: *const T) -> Res<&'a T> {
    unsafe { p.as_ref() }.ok_or_else(null)
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T) -> Res<()> {
    if out.is_null() {
        return Err(null());
    }
    unsafe { out.write(value) };
    Ok(())
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Res<()> {
    let c = CString::new(s).map_err(|e| Failure(KnottingStatus::InvalidInput, e.to_string()))?;
    unsafe { write_out(out, c.into_raw()) }
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Res<()> {
    if out.is_null() {
        return Err(null());
    }
    unsafe { out.write(Box::into_raw(Box::new(value))) };
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn knotting_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn knotting_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn knotting_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

// ---- knots ----

/// Parses a knot expression such as `"trefoil # torus(2,5)"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_knot_parse(text: *const c_char, out: *mut *mut KnottingKnot) -> KnottingStatus {
    guard(|| {
        let k = knot_parse(unsafe { read_str(text)? })?;
        unsafe { write_handle(out, KnottingKnot(k)) }
    })
}

/// # Safety
/// `knot` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn knotting_knot_free(knot: *mut KnottingKnot) {
    if !knot.is_null() {
        drop(unsafe { Box::from_raw(knot) });
    }
}

/// # Safety
/// `knot` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_knot_to_string(knot: *const KnottingKnot, out: *mut *mut c_char) -> KnottingStatus {
    guard(|| {
        let k = unsafe { borrow(knot)? };
        unsafe { write_string(out, k.0.to_string()) }
    })
}

/// Normalized Alexander polynomial.
///
/// # Safety
/// `knot` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_knot_alexander(
    knot: *const KnottingKnot,
    out: *mut *mut KnottingLaurent,
) -> KnottingStatus {
    guard(|| {
        let k = unsafe { borrow(knot)? };
        unsafe { write_handle(out, KnottingLaurent(alexander(&k.0))) }
    })
}

/// `|Δ(-1)|` as a decimal string.
///
/// # Safety
/// `knot` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_knot_determinant(knot: *const KnottingKnot, out: *mut *mut c_char) -> KnottingStatus {
    guard(|| {
        let k = unsafe { borrow(knot)? };
        unsafe { write_string(out, knot_determinant(&k.0).to_string()) }
    })
}

// ---- Laurent polynomials ----

/// # Safety
/// `poly` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn knotting_laurent_free(poly: *mut KnottingLaurent) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Text form, e.g. `t - 1 + t^-1`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_laurent_to_string(
    poly: *const KnottingLaurent,
    out: *mut *mut c_char,
) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(poly)? };
        unsafe { write_string(out, p.0.to_string()) }
    })
}

/// JSON form `{"min_exp": .., "coeffs": [..]}`.
///
/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_laurent_to_json(
    poly: *const KnottingLaurent,
    out: *mut *mut c_char,
) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(poly)? };
        unsafe { write_string(out, serde_json::to_string(&p.0)?) }
    })
}

/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_laurent_term_count(poly: *const KnottingLaurent, out: *mut usize) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(poly)? };
        unsafe { write_out(out, p.0.term_count()) }
    })
}

/// # Safety
/// `poly` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_laurent_degree(poly: *const KnottingLaurent, out: *mut u64) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(poly)? };
        let d =
            p.0.degree()
                .map_err(|e| Failure(KnottingStatus::InvalidInput, e.to_string()))?;
        unsafe { write_out(out, d) }
    })
}

// ---- presentations ----

/// Parses `"gens: a b ; rels: a^6 b^6, ..."` or the JSON form.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_parse(
    text: *const c_char,
    out: *mut *mut KnottingPresentation,
) -> KnottingStatus {
    guard(|| {
        let p = Presentation::parse(unsafe { read_str(text)? })?;
        unsafe { write_handle(out, KnottingPresentation(p)) }
    })
}

/// Complement presentation of the degree-2k maximal nest curve with the
/// given annulus left unpunctured.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_complement(
    k: i64,
    membrane: i64,
    out: *mut *mut KnottingPresentation,
) -> KnottingStatus {
    guard(|| {
        let p = NestCurve::new(k)?.complement_presentation(membrane)?;
        unsafe { write_handle(out, KnottingPresentation(p)) }
    })
}

/// # Safety
/// `p` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_free(p: *mut KnottingPresentation) {
    if !p.is_null() {
        drop(unsafe { Box::from_raw(p) });
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_to_string(
    p: *const KnottingPresentation,
    out: *mut *mut c_char,
) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(p)? };
        unsafe { write_string(out, p.0.to_string()) }
    })
}

/// Abelian invariants as JSON `{"free_rank": .., "torsion": [..]}`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_abelianization_json(
    p: *const KnottingPresentation,
    out: *mut *mut c_char,
) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(p)? };
        unsafe { write_string(out, serde_json::to_string(&abelianize(&p.0))?) }
    })
}

/// Group order by coset enumeration. Returns `KNOTTING_STATUS_OVERFLOW` and
/// leaves `out` untouched when more than `max_cosets` cosets are needed.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_order(
    p: *const KnottingPresentation,
    max_cosets: usize,
    out: *mut usize,
) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(p)? };
        if out.is_null() {
            return Err(null());
        }
        match todd_coxeter(&p.0, max_cosets).order() {
            Some(n) => unsafe { write_out(out, n) },
            None => Err(Failure(
                KnottingStatus::Overflow,
                format!("coset enumeration exceeded {max_cosets} cosets"),
            )),
        }
    })
}

/// Decides whether the group is cyclic of order `n`.
///
/// # Safety
/// `p` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_presentation_is_cyclic(
    p: *const KnottingPresentation,
    n: u64,
    max_cosets: usize,
    out: *mut KnottingVerdict,
) -> KnottingStatus {
    guard(|| {
        let p = unsafe { borrow(p)? };
        let v = match is_cyclic_of_order(&p.0, n, max_cosets) {
            CyclicVerdict::Holds => KnottingVerdict::Holds,
            CyclicVerdict::Fails => KnottingVerdict::Fails,
            CyclicVerdict::Inconclusive => KnottingVerdict::Inconclusive,
        };
        unsafe { write_out(out, v) }
    })
}

// ---- Seiberg-Witten polynomials ----

/// Parses `{"terms": [{"base": .., "n": .., "coeff": ..}, ..]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_sw_from_json(json: *const c_char, out: *mut *mut KnottingSw) -> KnottingStatus {
    guard(|| {
        let sw: SwPolynomial = serde_json::from_str(unsafe { read_str(json)? })?;
        unsafe { write_handle(out, KnottingSw(sw)) }
    })
}

/// Two classes `±beta` with coefficient 1.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_sw_fixture(out: *mut *mut KnottingSw) -> KnottingStatus {
    guard(|| unsafe { write_handle(out, KnottingSw(SwPolynomial::two_class_fixture())) })
}

/// # Safety
/// `sw` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn knotting_sw_free(sw: *mut KnottingSw) {
    if !sw.is_null() {
        drop(unsafe { Box::from_raw(sw) });
    }
}

/// # Safety
/// `sw` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_sw_to_json(sw: *const KnottingSw, out: *mut *mut c_char) -> KnottingStatus {
    guard(|| {
        let sw = unsafe { borrow(sw)? };
        unsafe { write_string(out, serde_json::to_string(&sw.0)?) }
    })
}

/// Annulus rim surgery via `knot`, i.e. multiplication by `Δ_{K#K}`.
///
/// # Safety
/// `sw` and `knot` must be live handles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_sw_annulus_rim_surgery(
    sw: *const KnottingSw,
    knot: *const KnottingKnot,
    out: *mut *mut KnottingSw,
) -> KnottingStatus {
    guard(|| {
        let sw = unsafe { borrow(sw)? };
        let k = unsafe { borrow(knot)? };
        unsafe { write_handle(out, KnottingSw(annulus_rim_surgery_sw(&sw.0, &k.0))) }
    })
}

/// # Safety
/// `sw` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_sw_basic_class_count(sw: *const KnottingSw, out: *mut usize) -> KnottingStatus {
    guard(|| {
        let sw = unsafe { borrow(sw)? };
        unsafe { write_out(out, basic_classes(&sw.0).len()) }
    })
}

// ---- reports ----

/// Basic-class counts for the first `count` connected sums of trefoils as
/// JSON `{"counts", "pairwise_distinct", "citations"}`. `sw` may be null for
/// the two-class fixture.
///
/// # Safety
/// `sw` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_distinguish_trefoil_json(
    count: u32,
    sw: *const KnottingSw,
    out: *mut *mut c_char,
) -> KnottingStatus {
    guard(|| {
        let fixture;
        let sw = match unsafe { sw.as_ref() } {
            Some(h) => &h.0,
            None => {
                fixture = SwPolynomial::two_class_fixture();
                &fixture
            }
        };
        if count == 0 {
            return Err(Failure(KnottingStatus::InvalidInput, "count must be at least 1".into()));
        }
        verify_trefoil_nonvanishing(count)?;
        let report = distinguish(sw, &trefoil_family(count as usize))?;
        unsafe { write_string(out, serde_json::to_string(&report)?) }
    })
}

/// Invariants of the degree-2k maximal nest curve and the cyclicity verdict
/// for each annulus membrane, as JSON. Returns `KNOTTING_STATUS_INCONCLUSIVE`
/// (with `out` still written) when some verdict could not be certified.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_nest_report_json(k: i64, max_cosets: usize, out: *mut *mut c_char) -> KnottingStatus {
    let mut inconclusive = false;
    let status = guard(|| {
        let curve = NestCurve::new(k)?;
        let inv = curve.invariants();
        let verdicts: Vec<serde_json::Value> = curve
            .membranes()
            .map(|m| {
                let p = curve.complement_presentation(m).expect("membrane is an annulus");
                let v = is_cyclic_of_order(&p, inv.expected_pi1_order as u64, max_cosets);
                inconclusive |= v == CyclicVerdict::Inconclusive;
                serde_json::json!({ "membrane": m, "presentation": p.to_string(), "verdict": v })
            })
            .collect();
        let doc = serde_json::json!({
            "invariants": inv,
            "regions": curve.regions(),
            "certifications": verdicts,
        });
        unsafe { write_string(out, serde_json::to_string(&doc)?) }
    });
    if status == KnottingStatus::Ok && inconclusive {
        set_last_error("coset enumeration overflowed for some membrane".into());
        return KnottingStatus::Inconclusive;
    }
    status
}

/// Smith normal form of a JSON integer matrix, as JSON
/// `{"divisors", "u", "v"}` with `U * M * V = diag(divisors)`.
///
/// # Safety
/// `matrix_json` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn knotting_snf_json(matrix_json: *const c_char, out: *mut *mut c_char) -> KnottingStatus {
    guard(|| {
        let m: IntMatrix = serde_json::from_str(unsafe { read_str(matrix_json)? })?;
        unsafe { write_string(out, serde_json::to_string(&smith_normal_form(&m))?) }
    })
}
