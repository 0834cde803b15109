//! Discretization of PAA coefficients into symbol words.

use std::fmt;

use crate::breakpoints::BreakpointTable;
use crate::error::{Error, Result};
use crate::paa::{paa_transform, z_normalize};
use crate::series::TimeSeries;

/// A time series reduced to a word of symbol indices.
///
/// Keeps the original series length `n` alongside the symbols because the
/// distance between two words scales with `n / m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaxWord {
    symbols: Vec<u8>,
    n: usize,
    alpha: usize,
}

impl SaxWord {
    /// Symbol indices in `[0, alpha)`, one per segment.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Number of segments (the word length `m`).
    pub fn segment_count(&self) -> usize {
        self.symbols.len()
    }

    /// Length of the series the word was built from.
    pub fn series_len(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// Renders the word with letters, index 0 as 'a'.
    pub fn to_letters(&self) -> String {
        self.symbols.iter().map(|&s| (b'a' + s) as char).collect()
    }

    pub(crate) fn from_parts(symbols: Vec<u8>, n: usize, alpha: usize) -> Self {
        Self { symbols, n, alpha }
    }
}

impl fmt::Display for SaxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters())
    }
}

/// Maps PAA coefficients to symbols using the table's breakpoints.
///
/// A coefficient maps to the smallest symbol whose upper breakpoint is >= the
/// value, so a value sitting exactly on a breakpoint takes the lower symbol.
/// `series_len` is the length of the original (pre-PAA) series.
pub fn symbolize(paa: &[f64], series_len: usize, table: &BreakpointTable) -> Result<SaxWord> {
    if paa.is_empty() || paa.len() > series_len {
        return Err(Error::InvalidInput(format!(
            "PAA length {} outside [1, {series_len}]",
            paa.len()
        )));
    }
    if let Some(i) = paa.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "non-finite PAA coefficient at index {i}"
        )));
    }

    let breakpoints = table.breakpoints();
    let symbols = paa
        .iter()
        .map(|&v| breakpoints.partition_point(|&b| b < v) as u8)
        .collect();
    Ok(SaxWord::from_parts(symbols, series_len, table.alpha()))
}

/// Full SAX pipeline: z-normalize, PAA to `m` segments, symbolize.
pub fn sax_transform(series: &TimeSeries, m: usize, table: &BreakpointTable) -> Result<SaxWord> {
    let normalized = z_normalize(series.values())?;
    let paa = paa_transform(&normalized, m)?;
    symbolize(&paa, series.len(), table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::breakpoints::make_breakpoint_table;

    #[test]
    fn worked_illustration_words() {
        let table = make_breakpoint_table(4).unwrap();
        let word = symbolize(&[-0.700, 0.075, 0.975, -0.200], 16, &table).unwrap();
        assert_eq!(word.to_letters(), "acdb");
        let word = symbolize(&[-0.975, -0.375, 0.425, 1.125], 16, &table).unwrap();
        assert_eq!(word.to_letters(), "abcd");
    }

    #[test]
    fn value_on_breakpoint_takes_lower_symbol() {
        let table = make_breakpoint_table(4).unwrap();
        let word = symbolize(&[0.0, 0.0, 0.0, 0.0], 4, &table).unwrap();
        assert_eq!(word.to_letters(), "bbbb");

        // Same rule on a non-central breakpoint.
        let bp = table.breakpoints()[2];
        let word = symbolize(&[bp], 4, &table).unwrap();
        assert_eq!(word.symbols(), &[2]);
    }

    #[test]
    fn extremes_map_to_outer_symbols() {
        let table = make_breakpoint_table(4).unwrap();
        let word = symbolize(&[-100.0, 100.0], 8, &table).unwrap();
        assert_eq!(word.symbols(), &[0, 3]);
    }

    #[test]
    fn rejects_non_finite_coefficients() {
        let table = make_breakpoint_table(4).unwrap();
        assert!(symbolize(&[f64::NAN], 4, &table).is_err());
    }

    #[test]
    fn sax_transform_composes_pipeline() {
        let table = make_breakpoint_table(4).unwrap();
        let rising = TimeSeries::new((0..16).map(f64::from).collect()).unwrap();
        let word = sax_transform(&rising, 4, &table).unwrap();
        assert_eq!(word.to_letters(), "abcd");
        assert_eq!(word.series_len(), 16);
        assert_eq!(word.alpha(), 4);
    }
}
