//! Exercises the C entry points the way a foreign caller would.

use std::ffi::CStr;
use std::ptr;

use tsax_capi::*;

fn table(alpha: u32) -> *mut TsaxTable {
    let mut table = ptr::null_mut();
    let status = unsafe { tsax_table_new(alpha, &mut table) };
    assert_eq!(status, TsaxStatus::Ok);
    assert!(!table.is_null());
    table
}

fn repr(values: &[f64], segments: usize, table: *const TsaxTable) -> *mut TsaxRepr {
    let mut repr = ptr::null_mut();
    let status =
        unsafe { tsax_repr_new(values.as_ptr(), values.len(), segments, table, &mut repr) };
    assert_eq!(status, TsaxStatus::Ok);
    assert!(!repr.is_null());
    repr
}

#[test]
fn transform_and_distances_through_the_abi() {
    let table = table(4);
    assert_eq!(unsafe { tsax_table_alpha(table) }, 4);

    let rising: Vec<f64> = (0..16).map(f64::from).collect();
    let falling: Vec<f64> = (0..16).rev().map(f64::from).collect();
    let a = repr(&rising, 4, table);
    let b = repr(&falling, 4, table);

    assert_eq!(unsafe { tsax_repr_segment_count(a) }, 4);
    assert_eq!(unsafe { tsax_repr_series_len(a) }, 16);

    let mut symbols = [0u8; 4];
    let mut trends = [9u8; 4];
    unsafe {
        assert_eq!(
            tsax_repr_symbols(a, symbols.as_mut_ptr(), symbols.len()),
            TsaxStatus::Ok
        );
        assert_eq!(
            tsax_repr_trends(a, trends.as_mut_ptr(), trends.len()),
            TsaxStatus::Ok
        );
    }
    assert_eq!(symbols, [0, 1, 2, 3]); // "abcd"
    assert_eq!(trends, [1, 1, 1, 1]); // all rising

    let mut mindist = f64::NAN;
    let mut dist = f64::NAN;
    unsafe {
        assert_eq!(tsax_mindist(a, b, table, &mut mindist), TsaxStatus::Ok);
        assert_eq!(tsax_dist(a, b, table, -1.0, 1.0, &mut dist), TsaxStatus::Ok);
    }
    // Mirrored words "abcd"/"dcba" plus four opposing trends.
    assert!(mindist > 0.0);
    assert!((dist - (mindist + 4.0)).abs() < 1e-12);

    // Self-distance under defaults is -m.
    let mut self_dist = f64::NAN;
    unsafe {
        assert_eq!(
            tsax_dist(a, a, table, -1.0, 1.0, &mut self_dist),
            TsaxStatus::Ok
        );
    }
    assert_eq!(self_dist, -4.0);

    unsafe {
        tsax_repr_free(a);
        tsax_repr_free(b);
        tsax_table_free(table);
    }
}

#[test]
fn serialization_through_the_abi() {
    let table = table(4);
    let values: Vec<f64> = (0..32).map(|i| ((i % 7) as f64) * 1.5 - 3.0).collect();
    let a = repr(&values, 8, table);

    // Query the size, then serialize.
    let mut needed = 0usize;
    let status = unsafe { tsax_repr_to_bytes(a, ptr::null_mut(), 0, &mut needed) };
    assert_eq!(status, TsaxStatus::BufferTooSmall);
    assert!(needed > 0);

    let mut buf = vec![0u8; needed];
    let mut written = 0usize;
    let status = unsafe { tsax_repr_to_bytes(a, buf.as_mut_ptr(), buf.len(), &mut written) };
    assert_eq!(status, TsaxStatus::Ok);
    assert_eq!(written, needed);

    let mut back = ptr::null_mut();
    let status = unsafe { tsax_repr_from_bytes(buf.as_ptr(), buf.len(), &mut back) };
    assert_eq!(status, TsaxStatus::Ok);

    let mut d = f64::NAN;
    unsafe {
        assert_eq!(tsax_mindist(a, back, table, &mut d), TsaxStatus::Ok);
    }
    assert_eq!(d, 0.0);

    // Corrupt bytes are rejected (byte 8 is the alphabet size).
    buf[8] = 99;
    let mut bad = ptr::null_mut();
    let status = unsafe { tsax_repr_from_bytes(buf.as_ptr(), buf.len(), &mut bad) };
    assert_eq!(status, TsaxStatus::DecodeError);

    unsafe {
        tsax_repr_free(a);
        tsax_repr_free(back);
        tsax_table_free(table);
    }
}

#[test]
fn error_paths_map_to_status_codes() {
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { tsax_table_new(99, &mut out) },
        TsaxStatus::InvalidParameter
    );
    assert_eq!(
        unsafe { tsax_table_new(4, ptr::null_mut()) },
        TsaxStatus::NullPointer
    );

    let table = table(4);

    // Non-finite input.
    let bad = [1.0, f64::NAN, 2.0, 3.0];
    let mut repr_out = ptr::null_mut();
    assert_eq!(
        unsafe { tsax_repr_new(bad.as_ptr(), bad.len(), 2, table, &mut repr_out) },
        TsaxStatus::InvalidInput
    );

    // Too many segments for the series.
    let values = [1.0, 2.0, 3.0, 4.0];
    assert_eq!(
        unsafe { tsax_repr_new(values.as_ptr(), values.len(), 9, table, &mut repr_out) },
        TsaxStatus::InvalidParameter
    );

    // Incompatible pair: different segment counts.
    let long: Vec<f64> = (0..16).map(f64::from).collect();
    let a = repr(&long, 4, table);
    let b = repr(&long, 8, table);
    let mut d = 0.0;
    assert_eq!(
        unsafe { tsax_mindist(a, b, table, &mut d) },
        TsaxStatus::Incompatible
    );

    // Undersized buffer.
    let mut tiny = [0u8; 2];
    assert_eq!(
        unsafe { tsax_repr_symbols(a, tiny.as_mut_ptr(), tiny.len()) },
        TsaxStatus::BufferTooSmall
    );

    // Messages are readable C strings.
    let msg = unsafe { CStr::from_ptr(tsax_status_message(TsaxStatus::Incompatible)) };
    assert_eq!(msg.to_str().unwrap(), "incompatible representations");

    unsafe {
        tsax_repr_free(a);
        tsax_repr_free(b);
        tsax_table_free(table);
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        tsax_repr_free(ptr::null_mut());
        tsax_table_free(ptr::null_mut());
        assert_eq!(tsax_repr_segment_count(ptr::null()), 0);
        assert_eq!(tsax_repr_series_len(ptr::null()), 0);
        assert_eq!(tsax_table_alpha(ptr::null()), 0);

        let mut d = 0.0;
        assert_eq!(
            tsax_mindist(ptr::null(), ptr::null(), ptr::null(), &mut d),
            TsaxStatus::NullPointer
        );
    }
}
