//! C ABI for the tsax library.
//!
//! Handles are opaque pointers created and released by this library; every
//! fallible call returns a [`TsaxStatus`] and writes results through out
//! pointers. The generated header lives in `include/tsax.h`.

use std::ffi::c_char;
use std::slice;

use tsax::{
    make_breakpoint_table, BreakpointTable, Error, TimeSeries, TsaxDistanceParams,
    TsaxRepresentation,
};

/// Result code of a C API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TsaxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Input data violates a precondition (empty, non-finite, too short).
    InvalidInput = 2,
    /// A configuration value is out of range.
    InvalidParameter = 3,
    /// The two representations cannot be compared.
    Incompatible = 4,
    /// The destination buffer is too small.
    BufferTooSmall = 5,
    /// Serialized bytes are corrupt or truncated.
    DecodeError = 6,
}

impl From<&Error> for TsaxStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidParameter(_) => TsaxStatus::InvalidParameter,
            Error::Incompatible(_) => TsaxStatus::Incompatible,
            Error::Decode(_) => TsaxStatus::DecodeError,
            _ => TsaxStatus::InvalidInput,
        }
    }
}

/// Opaque breakpoint table handle.
pub struct TsaxTable {
    inner: BreakpointTable,
}

/// Opaque representation handle.
pub struct TsaxRepr {
    inner: TsaxRepresentation,
}

/// Builds the breakpoint table for an alphabet of `alpha` symbols
/// (2 <= alpha <= 20) and stores the new handle in `out`.
///
/// # Safety
///
/// `out` must be a valid pointer. The handle must be released with
/// [`tsax_table_free`].
#[no_mangle]
pub unsafe extern "C" fn tsax_table_new(alpha: u32, out: *mut *mut TsaxTable) -> TsaxStatus {
    if out.is_null() {
        return TsaxStatus::NullPointer;
    }
    match make_breakpoint_table(alpha as usize) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(TsaxTable { inner }));
            TsaxStatus::Ok
        }
        Err(e) => TsaxStatus::from(&e),
    }
}

/// Releases a table handle. A null handle is ignored.
///
/// # Safety
///
/// `table` must come from [`tsax_table_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tsax_table_free(table: *mut TsaxTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of symbols the table was built for.
///
/// # Safety
///
/// `table` must be a valid table handle.
#[no_mangle]
pub unsafe extern "C" fn tsax_table_alpha(table: *const TsaxTable) -> u32 {
    if table.is_null() {
        return 0;
    }
    (*table).inner.alpha() as u32
}

/// Transforms `len` measurements into a symbol-plus-trend representation
/// with `segments` segments and stores the new handle in `out`.
///
/// # Safety
///
/// `values` must point to `len` readable doubles; `table` and `out` must be
/// valid. The handle must be released with [`tsax_repr_free`].
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_new(
    values: *const f64,
    len: usize,
    segments: usize,
    table: *const TsaxTable,
    out: *mut *mut TsaxRepr,
) -> TsaxStatus {
    if values.is_null() || table.is_null() || out.is_null() {
        return TsaxStatus::NullPointer;
    }
    let values = slice::from_raw_parts(values, len);
    let series = match TimeSeries::new(values.to_vec()) {
        Ok(s) => s,
        Err(e) => return TsaxStatus::from(&e),
    };
    match tsax::tsax_transform(&series, segments, &(*table).inner) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(TsaxRepr { inner }));
            TsaxStatus::Ok
        }
        Err(e) => TsaxStatus::from(&e),
    }
}

/// Releases a representation handle. A null handle is ignored.
///
/// # Safety
///
/// `repr` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_free(repr: *mut TsaxRepr) {
    if !repr.is_null() {
        drop(Box::from_raw(repr));
    }
}

/// Number of segments (symbols and trend bits).
///
/// # Safety
///
/// `repr` must be a valid representation handle.
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_segment_count(repr: *const TsaxRepr) -> usize {
    if repr.is_null() {
        return 0;
    }
    (*repr).inner.segment_count()
}

/// Length of the series the representation was built from.
///
/// # Safety
///
/// `repr` must be a valid representation handle.
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_series_len(repr: *const TsaxRepr) -> usize {
    if repr.is_null() {
        return 0;
    }
    (*repr).inner.series_len()
}

/// Copies the symbol indices (one byte per segment, values below alpha)
/// into `buf`.
///
/// # Safety
///
/// `repr` must be valid and `buf` writable for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_symbols(
    repr: *const TsaxRepr,
    buf: *mut u8,
    cap: usize,
) -> TsaxStatus {
    if repr.is_null() || buf.is_null() {
        return TsaxStatus::NullPointer;
    }
    let symbols = (*repr).inner.word().symbols();
    if cap < symbols.len() {
        return TsaxStatus::BufferTooSmall;
    }
    slice::from_raw_parts_mut(buf, symbols.len()).copy_from_slice(symbols);
    TsaxStatus::Ok
}

/// Copies the trends (one byte per segment, 1 = upward) into `buf`.
///
/// # Safety
///
/// `repr` must be valid and `buf` writable for `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_trends(
    repr: *const TsaxRepr,
    buf: *mut u8,
    cap: usize,
) -> TsaxStatus {
    if repr.is_null() || buf.is_null() {
        return TsaxStatus::NullPointer;
    }
    let trends = (*repr).inner.trends();
    if cap < trends.len() {
        return TsaxStatus::BufferTooSmall;
    }
    let out = slice::from_raw_parts_mut(buf, trends.len());
    for (slot, trend) in out.iter_mut().zip(trends.iter()) {
        *slot = u8::from(trend.is_up());
    }
    TsaxStatus::Ok
}

/// Lower-bounding word distance between two representations.
///
/// # Safety
///
/// All handles and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tsax_mindist(
    a: *const TsaxRepr,
    b: *const TsaxRepr,
    table: *const TsaxTable,
    out: *mut f64,
) -> TsaxStatus {
    if a.is_null() || b.is_null() || table.is_null() || out.is_null() {
        return TsaxStatus::NullPointer;
    }
    match tsax::sax_mindist((*a).inner.word(), (*b).inner.word(), &(*table).inner) {
        Ok(d) => {
            *out = d;
            TsaxStatus::Ok
        }
        Err(e) => TsaxStatus::from(&e),
    }
}

/// Trend-aware distance between two representations. `rew` weights matching
/// trend pairs (normally negative), `pen` opposing ones. The result may be
/// negative: it is a ranking score, not a metric.
///
/// # Safety
///
/// All handles and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tsax_dist(
    a: *const TsaxRepr,
    b: *const TsaxRepr,
    table: *const TsaxTable,
    rew: f64,
    pen: f64,
    out: *mut f64,
) -> TsaxStatus {
    if a.is_null() || b.is_null() || table.is_null() || out.is_null() {
        return TsaxStatus::NullPointer;
    }
    let params = TsaxDistanceParams { rew, pen };
    match tsax::tsax_dist(&(*a).inner, &(*b).inner, &(*table).inner, &params) {
        Ok(d) => {
            *out = d;
            TsaxStatus::Ok
        }
        Err(e) => TsaxStatus::from(&e),
    }
}

/// Serializes a representation into `buf`. On success `*written` holds the
/// byte count; with a too-small buffer it holds the required size and the
/// call returns `BufferTooSmall`.
///
/// # Safety
///
/// `repr` and `written` must be valid; `buf` must be writable for `cap`
/// bytes (it may be null when `cap` is 0, to query the size).
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_to_bytes(
    repr: *const TsaxRepr,
    buf: *mut u8,
    cap: usize,
    written: *mut usize,
) -> TsaxStatus {
    if repr.is_null() || written.is_null() {
        return TsaxStatus::NullPointer;
    }
    let bytes = (*repr).inner.to_bytes();
    *written = bytes.len();
    if cap < bytes.len() {
        return TsaxStatus::BufferTooSmall;
    }
    if buf.is_null() {
        return TsaxStatus::NullPointer;
    }
    slice::from_raw_parts_mut(buf, bytes.len()).copy_from_slice(&bytes);
    TsaxStatus::Ok
}

/// Deserializes a representation previously written by
/// [`tsax_repr_to_bytes`] and stores the new handle in `out`.
///
/// # Safety
///
/// `bytes` must point to `len` readable bytes; `out` must be valid. The
/// handle must be released with [`tsax_repr_free`].
#[no_mangle]
pub unsafe extern "C" fn tsax_repr_from_bytes(
    bytes: *const u8,
    len: usize,
    out: *mut *mut TsaxRepr,
) -> TsaxStatus {
    if bytes.is_null() || out.is_null() {
        return TsaxStatus::NullPointer;
    }
    let bytes = slice::from_raw_parts(bytes, len);
    match TsaxRepresentation::from_bytes(bytes) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(TsaxRepr { inner }));
            TsaxStatus::Ok
        }
        Err(e) => TsaxStatus::from(&e),
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn tsax_status_message(status: TsaxStatus) -> *const c_char {
    let message: &'static [u8] = match status {
        TsaxStatus::Ok => b"ok\0",
        TsaxStatus::NullPointer => b"null pointer argument\0",
        TsaxStatus::InvalidInput => b"invalid input\0",
        TsaxStatus::InvalidParameter => b"invalid parameter\0",
        TsaxStatus::Incompatible => b"incompatible representations\0",
        TsaxStatus::BufferTooSmall => b"buffer too small\0",
        TsaxStatus::DecodeError => b"corrupt serialized representation\0",
    };
    message.as_ptr().cast()
}
