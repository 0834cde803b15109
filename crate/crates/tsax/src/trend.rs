//! Per-segment trend extraction and the packed trend-bit vector.

use std::fmt;

use crate::error::{Error, Result};

/// Direction of the least-squares line fitted over one segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trend {
    Up,
    Down,
}

impl Trend {
    pub fn is_up(self) -> bool {
        matches!(self, Trend::Up)
    }
}

impl From<bool> for Trend {
    fn from(up: bool) -> Self {
        if up {
            Trend::Up
        } else {
            Trend::Down
        }
    }
}

impl fmt::Display for Trend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trend::Up => "up",
            Trend::Down => "down",
        })
    }
}

/// Ordinary least-squares trend of one segment, fitted over integer
/// abscissae 1..=len.
///
/// Only the slope sign is needed and the denominator of the slope is always
/// positive, so the sign of the covariance term decides. A zero slope maps
/// to `Up`.
pub fn segment_trend(segment: &[f64]) -> Result<Trend> {
    if segment.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "segment of length {} has no trend",
            segment.len()
        )));
    }
    if let Some(i) = segment.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "non-finite value at index {i}"
        )));
    }

    let len = segment.len() as f64;
    let x_mean = (len + 1.0) / 2.0;
    let y_mean = segment.iter().sum::<f64>() / len;
    let covariance: f64 = segment
        .iter()
        .enumerate()
        .map(|(i, &y)| ((i + 1) as f64 - x_mean) * (y - y_mean))
        .sum();
    Ok(Trend::from(covariance >= 0.0))
}

/// A vector of per-segment trends, stored one bit per segment.
///
/// Bit `i` of byte `i / 8` (least-significant bit first) is 1 for `Up`.
/// Trailing bits of the last byte are always zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrendBits {
    packed: Vec<u8>,
    len: usize,
}

impl TrendBits {
    pub fn new() -> Self {
        Self {
            packed: Vec::new(),
            len: 0,
        }
    }

    pub fn with_capacity(len: usize) -> Self {
        Self {
            packed: Vec::with_capacity(len.div_ceil(8)),
            len: 0,
        }
    }

    pub fn push(&mut self, trend: Trend) {
        let bit = self.len % 8;
        if bit == 0 {
            self.packed.push(0);
        }
        if trend.is_up() {
            *self.packed.last_mut().unwrap() |= 1 << bit;
        }
        self.len += 1;
    }

    pub fn get(&self, index: usize) -> Option<Trend> {
        if index >= self.len {
            return None;
        }
        let up = self.packed[index / 8] >> (index % 8) & 1 == 1;
        Some(Trend::from(up))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Trend> + '_ {
        (0..self.len).map(|i| self.get(i).unwrap())
    }

    /// The packed backing bytes, `ceil(len / 8)` of them.
    pub fn packed_bytes(&self) -> &[u8] {
        &self.packed
    }

    /// Rebuilds from packed bytes. Trailing bits past `len` must be zero so
    /// that equality on the packed form matches logical equality.
    pub fn from_packed(packed: Vec<u8>, len: usize) -> Result<Self> {
        if packed.len() != len.div_ceil(8) {
            return Err(Error::Decode(format!(
                "expected {} packed bytes for {len} trend bits, got {}",
                len.div_ceil(8),
                packed.len()
            )));
        }
        if len % 8 != 0 {
            if let Some(&last) = packed.last() {
                if last >> (len % 8) != 0 {
                    return Err(Error::Decode("nonzero trailing trend bits".into()));
                }
            }
        }
        Ok(Self { packed, len })
    }
}

impl Default for TrendBits {
    fn default() -> Self {
        Self::new()
    }
}

impl FromIterator<Trend> for TrendBits {
    fn from_iter<I: IntoIterator<Item = Trend>>(iter: I) -> Self {
        let mut bits = TrendBits::new();
        for t in iter {
            bits.push(t);
        }
        bits
    }
}
