//! Z-normalization and Piecewise Aggregate Approximation.

use std::ops::Range;

use crate::error::{Error, Result};

/// Threshold below which a series is treated as constant.
const DEGENERATE_STD: f64 = 1e-12;

/// Rescales a series to zero mean and unit population standard deviation.
///
/// A constant series (standard deviation below 1e-12) maps to all zeros
/// instead of failing, which keeps batch pipelines total over real datasets.
pub fn z_normalize(values: &[f64]) -> Result<Vec<f64>> {
    if values.is_empty() {
        return Err(Error::InvalidInput("cannot normalize an empty series".into()));
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "non-finite value at index {i}"
        )));
    }

    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let variance = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let std = variance.sqrt();

    if std < DEGENERATE_STD {
        return Ok(vec![0.0; values.len()]);
    }
    Ok(values.iter().map(|v| (v - mean) / std).collect())
}

/// Splits `n` points into `m` contiguous segments whose sizes differ by at
/// most one, larger segments first. Every point lands in exactly one segment.
pub fn segment_bounds(n: usize, m: usize) -> Vec<Range<usize>> {
    debug_assert!(m >= 1 && m <= n);
    let base = n / m;
    let remainder = n % m;
    let mut bounds = Vec::with_capacity(m);
    let mut start = 0;
    for i in 0..m {
        let size = base + usize::from(i < remainder);
        bounds.push(start..start + size);
        start += size;
    }
    bounds
}

/// Reduces a series to `m` coefficients, each the arithmetic mean of the
/// points in its segment.
pub fn paa_transform(values: &[f64], m: usize) -> Result<Vec<f64>> {
    let n = values.len();
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!(
            "segment count {m} outside [1, {n}]"
        )));
    }
    Ok(segment_bounds(n, m)
        .into_iter()
        .map(|r| {
            let size = r.len() as f64;
            values[r].iter().sum::<f64>() / size
        })
        .collect())
}
