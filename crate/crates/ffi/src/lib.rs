//! C ABI for the tfsax library.
//!
//! Every fallible function returns a [`TfsaxStatus`]; on failure a message is available from
//! [`tfsax_last_error_message`] on the same thread. Handles are opaque and must be released with
//! their matching `*_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use tfsax::{ConstantMode, Error, Method, Params, Representation, Representer, TimeSeries};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfsaxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    LengthMismatch = 3,
    ConstantSeries = 4,
    NonFinite = 5,
    ParamMismatch = 6,
    BufferTooSmall = 7,
    Panic = 8,
    Internal = 9,
}

/// Method codes accepted by [`tfsax_encoder_new`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TfsaxMethod {
    Euclid = 0,
    Sax = 1,
    Esax = 2,
    SaxTd = 3,
    Tfsax = 4,
}

// Taken as a plain integer at the boundary: an out-of-range C enum value is not a valid Rust enum.
fn method_from_code(code: u32) -> Option<Method> {
    Some(match code {
        c if c == TfsaxMethod::Euclid as u32 => Method::Euclid,
        c if c == TfsaxMethod::Sax as u32 => Method::Sax,
        c if c == TfsaxMethod::Esax as u32 => Method::Esax,
        c if c == TfsaxMethod::SaxTd as u32 => Method::SaxTd,
        c if c == TfsaxMethod::Tfsax as u32 => Method::Tfsax,
        _ => return None,
    })
}

/// A configured method with its lookup tables.
pub struct TfsaxEncoder(Representer);

/// An encoded series.
pub struct TfsaxWord(Representation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> TfsaxStatus {
    match e {
        Error::LengthMismatch(..) => TfsaxStatus::LengthMismatch,
        Error::ConstantSeries(_) => TfsaxStatus::ConstantSeries,
        Error::NonFinite(_) => TfsaxStatus::NonFinite,
        Error::ParamMismatch(_) => TfsaxStatus::ParamMismatch,
        Error::TooShort(_)
        | Error::InvalidW { .. }
        | Error::InvalidAlpha(_)
        | Error::UnsupportedTrendAlpha(_)
        | Error::SymbolOutOfRange { .. }
        | Error::ZeroEuclidean
        | Error::InvalidArgument(_)
        | Error::WordParse { .. } => TfsaxStatus::InvalidArgument,
        _ => TfsaxStatus::Internal,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (TfsaxStatus, String)>) -> TfsaxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            TfsaxStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TfsaxStatus::Panic
        }
    }
}

fn lib(e: Error) -> (TfsaxStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (TfsaxStatus, String) {
    (TfsaxStatus::NullPointer, format!("{what} is null"))
}

unsafe fn values<'a>(
    p: *const f64,
    len: usize,
    what: &str,
) -> Result<&'a [f64], (TfsaxStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tfsax_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after a successful call.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn tfsax_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates an encoder for a `TfsaxMethod` code. `w`, `alpha` and `alpha_t` are ignored where the
/// method has no use for them.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn tfsax_encoder_new(
    method: u32,
    w: usize,
    alpha: usize,
    alpha_t: usize,
    out: *mut *mut TfsaxEncoder,
) -> TfsaxStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let method = method_from_code(method).ok_or_else(|| {
            (
                TfsaxStatus::InvalidArgument,
                format!("unknown method code {method}"),
            )
        })?;
        let rep = Representer::for_method(method, Params::new(w, alpha, alpha_t)).map_err(lib)?;
        *out = Box::into_raw(Box::new(TfsaxEncoder(rep)));
        Ok(())
    })
}

/// # Safety
/// `encoder` must be null or a handle from [`tfsax_encoder_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tfsax_encoder_free(encoder: *mut TfsaxEncoder) {
    if !encoder.is_null() {
        drop(Box::from_raw(encoder));
    }
}

/// Encodes `len` values as given (no normalization is applied).
///
/// # Safety
/// `encoder` must be a live handle, `values` must point to `len` doubles, `out` to writable storage.
#[no_mangle]
pub unsafe extern "C" fn tfsax_encode(
    encoder: *const TfsaxEncoder,
    values: *const f64,
    len: usize,
    out: *mut *mut TfsaxWord,
) -> TfsaxStatus {
    guard(|| {
        let enc = encoder.as_ref().ok_or_else(|| null("encoder"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let v = self::values(values, len, "values")?;
        let word = enc.0.encode_values(v).map_err(lib)?;
        *out = Box::into_raw(Box::new(TfsaxWord(word)));
        Ok(())
    })
}

/// # Safety
/// `word` must be null or a handle from [`tfsax_encode`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tfsax_word_free(word: *mut TfsaxWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Renders a word as NUL-terminated text into `buf`. `out_len` receives the text length without
/// the terminator; when `buf_len` is too small nothing is written and `BufferTooSmall` is returned,
/// so a call with a null `buf` and zero `buf_len` queries the size.
///
/// # Safety
/// `word` must be a live handle; `buf` must hold `buf_len` bytes; `out_len` may be null.
#[no_mangle]
pub unsafe extern "C" fn tfsax_word_render(
    word: *const TfsaxWord,
    buf: *mut c_char,
    buf_len: usize,
    out_len: *mut usize,
) -> TfsaxStatus {
    guard(|| {
        let word = word.as_ref().ok_or_else(|| null("word"))?;
        let text = word.0.to_string();
        if !out_len.is_null() {
            *out_len = text.len();
        }
        if buf_len < text.len() + 1 {
            return Err((
                TfsaxStatus::BufferTooSmall,
                format!(
                    "buffer of {buf_len} bytes cannot hold {} bytes",
                    text.len() + 1
                ),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        Ok(())
    })
}

/// Distance between two words produced by `encoder`.
///
/// # Safety
/// All pointers must be valid; `a` and `b` must be live word handles.
#[no_mangle]
pub unsafe extern "C" fn tfsax_distance(
    encoder: *const TfsaxEncoder,
    a: *const TfsaxWord,
    b: *const TfsaxWord,
    out: *mut f64,
) -> TfsaxStatus {
    guard(|| {
        let enc = encoder.as_ref().ok_or_else(|| null("encoder"))?;
        let a = a.as_ref().ok_or_else(|| null("a"))?;
        let b = b.as_ref().ok_or_else(|| null("b"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = enc.0.distance(&a.0, &b.0).map_err(lib)?;
        Ok(())
    })
}

/// Euclidean distance between two arrays of `len` doubles.
///
/// # Safety
/// `a` and `b` must point to `len` doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tfsax_euclidean(
    a: *const f64,
    b: *const f64,
    len: usize,
    out: *mut f64,
) -> TfsaxStatus {
    guard(|| {
        let (a, b) = (values(a, len, "a")?, values(b, len, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = tfsax::euclidean(a, b).map_err(lib)?;
        Ok(())
    })
}

/// Z-normalizes `len` values into `out` (which may alias `values`). Constant input fails with
/// `ConstantSeries` unless `zeros_on_constant` is nonzero.
///
/// # Safety
/// `values` must point to `len` doubles and `out` to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn tfsax_znormalize(
    values: *const f64,
    len: usize,
    zeros_on_constant: i32,
    out: *mut f64,
) -> TfsaxStatus {
    guard(|| {
        let v = self::values(values, len, "values")?.to_vec();
        if out.is_null() {
            return Err(null("out"));
        }
        let mode = if zeros_on_constant != 0 {
            ConstantMode::Zeros
        } else {
            ConstantMode::Error
        };
        let series = TimeSeries::new(v).map_err(lib)?;
        let z = tfsax::znormalize(&series, mode).map_err(lib)?;
        ptr::copy_nonoverlapping(z.values().as_ptr(), out, len);
        Ok(())
    })
}
