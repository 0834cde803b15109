//! The combined symbol-plus-trend representation.

use crate::breakpoints::BreakpointTable;
use crate::error::{Error, Result};
use crate::paa::{paa_transform, segment_bounds, z_normalize};
use crate::sax::{symbolize, SaxWord};
use crate::series::TimeSeries;
use crate::trend::{segment_trend, TrendBits};

/// A symbol word plus one trend bit per segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsaxRepresentation {
    word: SaxWord,
    trends: TrendBits,
}

impl TsaxRepresentation {
    pub fn new(word: SaxWord, trends: TrendBits) -> Result<Self> {
        if word.segment_count() != trends.len() {
            return Err(Error::Incompatible(format!(
                "word has {} segments but trend vector has {}",
                word.segment_count(),
                trends.len()
            )));
        }
        Ok(Self { word, trends })
    }

    pub fn word(&self) -> &SaxWord {
        &self.word
    }

    pub fn trends(&self) -> &TrendBits {
        &self.trends
    }

    pub fn segment_count(&self) -> usize {
        self.word.segment_count()
    }

    pub fn series_len(&self) -> usize {
        self.word.series_len()
    }

    pub fn alpha(&self) -> usize {
        self.word.alpha()
    }
}

/// Builds the symbol-plus-trend representation of a series.
///
/// The symbolic part is z-normalize -> PAA -> symbolize; the trend part fits
/// a least-squares line over each normalized segment, using the same segment
/// boundaries as PAA. Requires at least two points per segment, so `m` must
/// be at most `n / 2`.
pub fn tsax_transform(
    series: &TimeSeries,
    m: usize,
    table: &BreakpointTable,
) -> Result<TsaxRepresentation> {
    let normalized = z_normalize(series.values())?;
    let paa = paa_transform(&normalized, m)?;
    let word = symbolize(&paa, series.len(), table)?;

    let mut trends = TrendBits::with_capacity(m);
    for range in segment_bounds(series.len(), m) {
        trends.push(segment_trend(&normalized[range])?);
    }
    TsaxRepresentation::new(word, trends)
}
