//! C ABI for `kfold-core`.
//!
//! Every fallible function returns a [`KfoldStatus`] and writes its result
//! through an out-pointer. On failure, `kfold_last_error()` describes the
//! most recent error on the calling thread.
//!
//! Handles are opaque: create them with the `*_new` functions and release
//! them with the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kfold_core::{ColoringDocument, Error, Family, FamilyParams, KFoldColoring};

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KfoldStatus {
    Ok = 0,
    /// `p ≥ 1`, `n ≥ 2p` or `k ≥ 1` violated, or `k·n` too large to represent.
    InvalidParameters = 1,
    /// The instance exceeds a size limit.
    TooLarge = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// A class index past the last color.
    OutOfRange = 4,
    /// The output buffer is too small; the required length was written.
    BufferTooSmall = 5,
    /// Internal error, including caught panics.
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KfoldFamilyKind {
    Web = 0,
    Antiweb = 1,
}

/// Opaque web or antiweb parameters.
pub struct KfoldFamily {
    params: FamilyParams,
}

/// Opaque k-fold coloring together with the parameters it colors.
pub struct KfoldColoring {
    params: FamilyParams,
    k: i64,
    coloring: KFoldColoring,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> KfoldStatus {
    match err {
        Error::InstanceTooLarge { .. } => KfoldStatus::TooLarge,
        e if e.is_validation() => KfoldStatus::InvalidParameters,
        _ => KfoldStatus::Internal,
    }
}

fn fail(status: KfoldStatus, message: impl Into<String>) -> KfoldStatus {
    set_error(message.into());
    status
}

fn guard(body: impl FnOnce() -> Result<(), KfoldStatus>) -> KfoldStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => KfoldStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(KfoldStatus::Internal, "internal panic"),
    }
}

fn core<T>(r: kfold_core::Result<T>) -> Result<T, KfoldStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, KfoldStatus> {
    p.as_ref()
        .ok_or_else(|| fail(KfoldStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), KfoldStatus> {
    if out.is_null() {
        return Err(fail(KfoldStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failure on this thread, or null if none.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn kfold_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_family_new(
    kind: KfoldFamilyKind,
    n: i64,
    p: i64,
    out: *mut *mut KfoldFamily,
) -> KfoldStatus {
    guard(|| {
        let family = match kind {
            KfoldFamilyKind::Web => Family::Web,
            KfoldFamilyKind::Antiweb => Family::Antiweb,
        };
        let params = core(FamilyParams::new(family, n, p))?;
        write(out, Box::into_raw(Box::new(KfoldFamily { params })))
    })
}

/// # Safety
/// `family` must come from `kfold_family_new` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kfold_family_free(family: *mut KfoldFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_alpha(family: *const KfoldFamily, out: *mut i64) -> KfoldStatus {
    guard(|| write(out, deref(family, "family")?.params.alpha()))
}

/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_omega(family: *const KfoldFamily, out: *mut i64) -> KfoldStatus {
    guard(|| write(out, deref(family, "family")?.params.omega()))
}

/// `χ_k` of the graph.
///
/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_chi_k(family: *const KfoldFamily, k: i64, out: *mut i64) -> KfoldStatus {
    guard(|| {
        let f = deref(family, "family")?;
        write(out, core(kfold_core::chi_k(&f.params, k))?)
    })
}

/// `χ_k` after deleting any one vertex.
///
/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_chi_k_minus_v(family: *const KfoldFamily, k: i64, out: *mut i64) -> KfoldStatus {
    guard(|| {
        let f = deref(family, "family")?;
        write(out, core(kfold_core::chi_k_minus_v(&f.params, k))?)
    })
}

/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_is_critical(family: *const KfoldFamily, k: i64, out: *mut bool) -> KfoldStatus {
    guard(|| {
        let f = deref(family, "family")?;
        write(out, core(kfold_core::is_chik_critical(&f.params, k))?.is_critical)
    })
}

/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_is_chistar_critical(family: *const KfoldFamily, out: *mut bool) -> KfoldStatus {
    guard(|| {
        write(
            out,
            kfold_core::is_chistar_critical(&deref(family, "family")?.params).critical,
        )
    })
}

/// Builds an optimal k-fold coloring.
///
/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_coloring_new(
    family: *const KfoldFamily,
    k: i64,
    out: *mut *mut KfoldColoring,
) -> KfoldStatus {
    guard(|| {
        let params = deref(family, "family")?.params;
        let coloring = core(kfold_core::color(&params, k))?;
        write(out, Box::into_raw(Box::new(KfoldColoring { params, k, coloring })))
    })
}

/// # Safety
/// `coloring` must come from `kfold_coloring_new` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kfold_coloring_free(coloring: *mut KfoldColoring) {
    if !coloring.is_null() {
        drop(Box::from_raw(coloring));
    }
}

/// Number of colors `x`.
///
/// # Safety
/// `coloring` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_coloring_num_colors(coloring: *const KfoldColoring, out: *mut usize) -> KfoldStatus {
    guard(|| write(out, deref(coloring, "coloring")?.coloring.num_colors()))
}

/// Copies the vertices of color class `index` into `buf`.
///
/// `*len` is set to the class size. If it exceeds `capacity`, nothing is
/// copied and `BufferTooSmall` is returned; `buf` may be null to query.
///
/// # Safety
/// `coloring` must be a live handle, `len` valid for writes and `buf`
/// valid for `capacity` writes when non-null.
#[no_mangle]
pub unsafe extern "C" fn kfold_coloring_class(
    coloring: *const KfoldColoring,
    index: usize,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> KfoldStatus {
    guard(|| {
        let c = deref(coloring, "coloring")?;
        let class = c.coloring.classes().get(index).ok_or_else(|| {
            fail(
                KfoldStatus::OutOfRange,
                format!("class {index} out of range for {} colors", c.coloring.num_colors()),
            )
        })?;
        write(len, class.len())?;
        if buf.is_null() || capacity < class.len() {
            return Err(fail(
                KfoldStatus::BufferTooSmall,
                format!("class needs {} entries", class.len()),
            ));
        }
        ptr::copy_nonoverlapping(class.as_ptr(), buf, class.len());
        Ok(())
    })
}

/// The coloring as a JSON document, as printed by `kfold color --json`.
/// Release the string with `kfold_string_free`.
///
/// # Safety
/// `coloring` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn kfold_coloring_to_json(coloring: *const KfoldColoring, out: *mut *mut c_char) -> KfoldStatus {
    guard(|| {
        let c = deref(coloring, "coloring")?;
        let doc = ColoringDocument::new(&c.params, c.k, &c.coloring);
        let text = serde_json::to_string(&doc).map_err(|e| fail(KfoldStatus::Internal, e.to_string()))?;
        let text = CString::new(text).map_err(|e| fail(KfoldStatus::Internal, e.to_string()))?;
        write(out, text.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kfold_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
