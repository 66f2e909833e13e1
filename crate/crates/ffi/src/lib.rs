//! C ABI over `birkhoff-core`.
//!
//! Sets cross the boundary as opaque `BkPermSet` handles owned by the
//! caller and released with [`bk_permset_free`]. Strings returned by the
//! library are released with [`bk_string_free`]. Every call returns a
//! [`BkStatus`]; after a failure, [`bk_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use birkhoff::bounds::bound_report;
use birkhoff::builders::build_g_set;
use birkhoff::constructions::{even_pairing_stabilizer_with, star_clique};
use birkhoff::solvers::{check_clique, check_independent, is_maximal_clique, is_maximal_independent, VerifyMode};
use birkhoff::{adjacent, parse_cycles, Budget, Error, PermSet};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotIndependent = 4,
    BudgetExceeded = 5,
    Unsupported = 6,
    Internal = 7,
}

/// Opaque set of permutations of one degree.
pub struct BkPermSet {
    inner: PermSet,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> BkStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) | Error::Dimacs { .. } | Error::NotBijection(_) | Error::Duplicate(_) => {
            BkStatus::ParseError
        }
        Error::NotIndependent(_, _) => BkStatus::NotIndependent,
        Error::Budget(_) => BkStatus::BudgetExceeded,
        Error::Unsupported(_) => BkStatus::Unsupported,
        _ => BkStatus::InvalidArgument,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (BkStatus, String)>) -> BkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BkStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BkStatus::Internal
        }
    }
}

fn lift<T>(r: birkhoff::Result<T>) -> Result<T, (BkStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null() -> (BkStatus, String) {
    (BkStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (BkStatus, String)> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (BkStatus::ParseError, "string is not UTF-8".into()))
}

unsafe fn set_ref<'a>(p: *const BkPermSet) -> Result<&'a PermSet, (BkStatus, String)> {
    p.as_ref().map(|s| &s.inner).ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (BkStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_set(out: *mut *mut BkPermSet, s: PermSet) -> Result<(), (BkStatus, String)> {
    put(out, Box::into_raw(Box::new(BkPermSet { inner: s })))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (BkStatus, String)> {
    let c = CString::new(s).map_err(|_| (BkStatus::Internal, "interior NUL".into()))?;
    put(out, c.into_raw())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn bk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// An empty set of degree `degree`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_new(degree: usize, out: *mut *mut BkPermSet) -> BkStatus {
    guard(|| {
        if degree == 0 || degree > birkhoff::perm::MAX_DEGREE {
            return Err((BkStatus::InvalidArgument, format!("degree {degree} out of range")));
        }
        put_set(out, PermSet::new(degree))
    })
}

/// Parses a set from its JSON document (`degree` and `elements`).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_from_json(json: *const c_char, out: *mut *mut BkPermSet) -> BkStatus {
    guard(|| {
        let s = lift(PermSet::from_json(text(json)?))?;
        put_set(out, s)
    })
}

/// Releases a set handle. NULL is ignored.
///
/// # Safety
/// `set` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_free(set: *mut BkPermSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Adds a permutation in cycle notation; `inserted` is false for a
/// duplicate.
///
/// # Safety
/// `set` must be a live handle, `cycles` NUL-terminated, `inserted`
/// writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_insert(
    set: *mut BkPermSet,
    cycles: *const c_char,
    inserted: *mut bool,
) -> BkStatus {
    guard(|| {
        let s = set.as_mut().ok_or_else(null)?;
        let p = lift(parse_cycles(text(cycles)?, s.inner.degree()))?;
        let added = lift(s.inner.insert(p))?;
        if !inserted.is_null() {
            inserted.write(added);
        }
        Ok(())
    })
}

/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_len(set: *const BkPermSet, out: *mut usize) -> BkStatus {
    guard(|| put(out, set_ref(set)?.len()))
}

/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_degree(set: *const BkPermSet, out: *mut usize) -> BkStatus {
    guard(|| put(out, set_ref(set)?.degree()))
}

/// Element `index` in cycle notation; free with [`bk_string_free`].
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_element(set: *const BkPermSet, index: usize, out: *mut *mut c_char) -> BkStatus {
    guard(|| {
        let s = set_ref(set)?;
        let p = s
            .get(index)
            .ok_or_else(|| (BkStatus::InvalidArgument, format!("index {index} out of range")))?;
        put_string(out, p.to_string())
    })
}

/// The set as a JSON document; free with [`bk_string_free`].
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_permset_to_json(set: *const BkPermSet, out: *mut *mut c_char) -> BkStatus {
    guard(|| put_string(out, set_ref(set)?.to_json()))
}

/// Whether two permutations of degree `degree` are adjacent.
///
/// # Safety
/// `a` and `b` must be NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_adjacent(degree: usize, a: *const c_char, b: *const c_char, out: *mut bool) -> BkStatus {
    guard(|| {
        let a = lift(parse_cycles(text(a)?, degree))?;
        let b = lift(parse_cycles(text(b)?, degree))?;
        put(out, lift(adjacent(&a, &b))?)
    })
}

/// Pairwise check; sets above 5000 elements are sampled.
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_verify_clique(set: *const BkPermSet, out: *mut bool) -> BkStatus {
    guard(|| {
        put(
            out,
            check_clique(set_ref(set)?, VerifyMode::Auto, &Budget::default()).ok,
        )
    })
}

/// Pairwise check; sets above 5000 elements are sampled.
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_verify_independent(set: *const BkPermSet, out: *mut bool) -> BkStatus {
    guard(|| {
        put(
            out,
            check_independent(set_ref(set)?, VerifyMode::Auto, &Budget::default()).ok,
        )
    })
}

/// Whether the independent set cannot be enlarged within `Sym(ambient)`.
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_is_maximal_independent(set: *const BkPermSet, ambient: usize, out: *mut bool) -> BkStatus {
    guard(|| {
        let r = lift(is_maximal_independent(set_ref(set)?, ambient, &Budget::default()))?;
        put(out, r.maximal)
    })
}

/// Whether the clique cannot be enlarged within `Sym(ambient)`.
///
/// # Safety
/// `set` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bk_is_maximal_clique(set: *const BkPermSet, ambient: usize, out: *mut bool) -> BkStatus {
    guard(|| {
        let r = lift(is_maximal_clique(set_ref(set)?, ambient, &Budget::default()))?;
        put(out, r.maximal)
    })
}

/// The even independent set of size `g(n)` on `n` points.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_build_g_set(n: usize, out: *mut *mut BkPermSet) -> BkStatus {
    guard(|| put_set(out, lift(build_g_set(n, &Budget::default()))?))
}

/// The independent subgroup stabilizing the pairing `{j, j + n/2}` with
/// even swap count, for even `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_pairing_subgroup(n: usize, out: *mut *mut BkPermSet) -> BkStatus {
    guard(|| put_set(out, lift(even_pairing_stabilizer_with(n, &Budget::default()))?.elements))
}

/// The identity with the transposition and 3-cycle stars through point `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_star_clique(n: usize, out: *mut *mut BkPermSet) -> BkStatus {
    guard(|| put_set(out, lift(star_clique(n))?))
}

/// Lower bounds for `α(n)` as JSON with decimal-string values; free with
/// [`bk_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bk_bounds_json(n: usize, out: *mut *mut c_char) -> BkStatus {
    guard(|| put_string(out, lift(bound_report(n))?.to_json()))
}
