//! Gaussian breakpoints and the symbol-distance lookup table.
//!
//! The breakpoints split the standard normal distribution into `alpha`
//! equiprobable regions; symbol `i` covers the interval between breakpoint
//! `i-1` and breakpoint `i`. The distance between two symbols is zero when
//! they are equal or adjacent, otherwise it is the gap between the inner
//! breakpoints of their regions.

use crate::error::{Error, Result};

/// Smallest accepted alphabet size. 2 is below the usual working range but
/// is kept valid because it exercises the single-breakpoint case.
pub const MIN_ALPHA: usize = 2;
/// Largest accepted alphabet size.
pub const MAX_ALPHA: usize = 20;

/// Breakpoints for one alphabet size plus the precomputed symbol-distance
/// matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct BreakpointTable {
    alpha: usize,
    breakpoints: Vec<f64>,
    symbol_dist: Vec<f64>,
}

impl BreakpointTable {
    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// The `alpha - 1` region boundaries, strictly increasing and symmetric
    /// about zero.
    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    /// Distance between two symbol indices.
    ///
    /// Panics if either index is `>= alpha`.
    pub fn symbol_dist(&self, a: u8, b: u8) -> f64 {
        let (a, b) = (a as usize, b as usize);
        assert!(a < self.alpha && b < self.alpha, "symbol out of range");
        self.symbol_dist[a * self.alpha + b]
    }
}

/// Builds the breakpoint table for an alphabet of `alpha` symbols.
///
/// Breakpoint `i` (1-based) sits at the standard normal quantile `i / alpha`.
/// Only the lower half is computed from the quantile function; the upper half
/// is its exact negation, so the table is symmetric to the bit.
pub fn make_breakpoint_table(alpha: usize) -> Result<BreakpointTable> {
    if !(MIN_ALPHA..=MAX_ALPHA).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "alphabet size {alpha} outside [{MIN_ALPHA}, {MAX_ALPHA}]"
        )));
    }

    let mut breakpoints = vec![0.0; alpha - 1];
    for i in 1..=(alpha - 1) / 2 {
        let b = norm_ppf(i as f64 / alpha as f64);
        breakpoints[i - 1] = b;
        breakpoints[alpha - 1 - i] = -b;
    }
    // For even alpha the middle breakpoint is the median, exactly 0.

    let mut symbol_dist = vec![0.0; alpha * alpha];
    for r in 0..alpha {
        for c in 0..alpha {
            if r.abs_diff(c) > 1 {
                let (lo, hi) = (r.min(c), r.max(c));
                symbol_dist[r * alpha + c] = breakpoints[hi - 1] - breakpoints[lo];
            }
        }
    }

    Ok(BreakpointTable {
        alpha,
        breakpoints,
        symbol_dist,
    })
}

/// Inverse standard normal CDF (Acklam's rational approximation,
/// absolute error below 1.2e-9 over the open unit interval).
fn norm_ppf(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);

    const A: [f64; 6] = [
        -39.696_830_286_653_8,
        220.946_098_424_521,
        -275.928_510_446_969,
        138.357_751_867_269,
        -30.664_798_066_147_2,
        2.506_628_277_459_24,
    ];
    const B: [f64; 5] = [
        -54.476_098_798_224_1,
        161.585_836_858_041,
        -155.698_979_859_887,
        66.801_311_887_719_7,
        -13.280_681_552_885_7,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_29e-3,
        -0.322_396_458_041_136,
        -2.400_758_277_161_84,
        -2.549_732_539_343_73,
        4.374_664_141_464_97,
        2.938_163_982_698_78,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_46e-3,
        0.322_467_129_070_04,
        2.445_134_137_143,
        3.754_408_661_907_42,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}
