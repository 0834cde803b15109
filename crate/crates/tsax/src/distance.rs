//! Distances between symbolic representations.
//!
//! `sax_mindist` is the classic lower-bounding word distance. `tsax_dist`
//! adds a reward for every pair of segments whose trends agree and a penalty
//! for every pair whose trends oppose.
//!
//! With the default parameters `tsax_dist` of a representation with itself
//! is `-m`, not zero: it is a ranking score, not a metric. Callers must
//! order candidates by value only and never assume non-negativity or the
//! triangle inequality.

use crate::breakpoints::BreakpointTable;
use crate::error::{Error, Result};
use crate::repr::TsaxRepresentation;
use crate::sax::SaxWord;
use crate::trend::TrendBits;

/// Reward/penalty weights for trend comparison.
///
/// `rew` weights segment pairs with matching trends and should be negative
/// (matching trends pull series closer); `pen` weights opposing pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TsaxDistanceParams {
    pub rew: f64,
    pub pen: f64,
}

impl Default for TsaxDistanceParams {
    fn default() -> Self {
        Self {
            rew: -1.0,
            pen: 1.0,
        }
    }
}

/// How many segment pairs agree and how many oppose. Always sums to the
/// segment count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrendMatchCounts {
    pub matching: usize,
    pub opposite: usize,
}

fn check_words_compatible(a: &SaxWord, b: &SaxWord, table: &BreakpointTable) -> Result<()> {
    if a.segment_count() != b.segment_count() {
        return Err(Error::Incompatible(format!(
            "segment counts {} and {}",
            a.segment_count(),
            b.segment_count()
        )));
    }
    if a.series_len() != b.series_len() {
        return Err(Error::Incompatible(format!(
            "series lengths {} and {}",
            a.series_len(),
            b.series_len()
        )));
    }
    if a.alpha() != b.alpha() || a.alpha() != table.alpha() {
        return Err(Error::Incompatible(format!(
            "alphabets {} and {} against table of {}",
            a.alpha(),
            b.alpha(),
            table.alpha()
        )));
    }
    Ok(())
}

/// Shared radical of both distances: sqrt((n/m) * sum of squared symbol
/// distances), with n/m as a real ratio so uneven segmentations stay
/// consistent.
fn word_radical(a: &SaxWord, b: &SaxWord, table: &BreakpointTable) -> f64 {
    let sum_sq: f64 = a
        .symbols()
        .iter()
        .zip(b.symbols())
        .map(|(&s, &t)| {
            let d = table.symbol_dist(s, t);
            d * d
        })
        .sum();
    let ratio = a.series_len() as f64 / a.segment_count() as f64;
    (ratio * sum_sq).sqrt()
}

/// Lower-bounding distance between two symbol words.
pub fn sax_mindist(a: &SaxWord, b: &SaxWord, table: &BreakpointTable) -> Result<f64> {
    check_words_compatible(a, b, table)?;
    Ok(word_radical(a, b, table))
}

/// Counts matching and opposite trend pairs position by position.
pub fn trend_match_counts(a: &TrendBits, b: &TrendBits) -> Result<TrendMatchCounts> {
    if a.len() != b.len() {
        return Err(Error::Incompatible(format!(
            "trend vectors of lengths {} and {}",
            a.len(),
            b.len()
        )));
    }
    // Trailing bits past the logical length are zero in both, so they never
    // contribute to the XOR popcount.
    let opposite: usize = a
        .packed_bytes()
        .iter()
        .zip(b.packed_bytes())
        .map(|(x, y)| (x ^ y).count_ones() as usize)
        .sum();
    Ok(TrendMatchCounts {
        matching: a.len() - opposite,
        opposite,
    })
}

/// Word distance plus trend reward/penalty terms.
///
/// May be negative; see the module notes. Symmetric in its representation
/// arguments.
pub fn tsax_dist(
    a: &TsaxRepresentation,
    b: &TsaxRepresentation,
    table: &BreakpointTable,
    params: &TsaxDistanceParams,
) -> Result<f64> {
    if !params.rew.is_finite() || !params.pen.is_finite() {
        return Err(Error::InvalidParameter(
            "trend weights must be finite".into(),
        ));
    }
    check_words_compatible(a.word(), b.word(), table)?;
    let counts = trend_match_counts(a.trends(), b.trends())?;
    Ok(word_radical(a.word(), b.word(), table)
        + params.rew * counts.matching as f64
        + params.pen * counts.opposite as f64)
}
