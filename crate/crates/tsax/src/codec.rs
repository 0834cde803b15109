//! Compact binary form of a representation, used by the benchmark cache.
//!
//! Layout:
//!
//! ```text
//! u32 LE  series length n
//! u32 LE  segment count m
//! u8      alphabet size
//! u8      flags (bit 0: trend section is run-length framed)
//! m x u8  symbol indices
//! trend section:
//!   raw:  ceil(m / 8) bytes, bit i of byte i/8 (LSB first) is segment i
//!   RLE:  varint run count, then per run one byte (1 = up) and a varint count
//! ```
//!
//! The writer picks whichever trend framing is smaller. Varints are LEB128.

use crate::breakpoints::{MAX_ALPHA, MIN_ALPHA};
use crate::error::{Error, Result};
use crate::repr::TsaxRepresentation;
use crate::rle::{rle_decode, rle_encode, Run};
use crate::sax::SaxWord;
use crate::trend::{Trend, TrendBits};

const FLAG_RLE: u8 = 0b0000_0001;

pub(crate) fn write_varint(buf: &mut Vec<u8>, mut value: u64) {
    loop {
        let byte = (value & 0x7F) as u8;
        value >>= 7;
        if value == 0 {
            buf.push(byte);
            return;
        }
        buf.push(byte | 0x80);
    }
}

pub(crate) fn read_varint(bytes: &[u8], pos: &mut usize) -> Result<u64> {
    let mut value = 0u64;
    let mut shift = 0u32;
    loop {
        let &byte = bytes
            .get(*pos)
            .ok_or_else(|| Error::Decode("truncated varint".into()))?;
        *pos += 1;
        if shift >= 64 || (shift == 63 && byte > 1) {
            return Err(Error::Decode("varint overflows u64".into()));
        }
        value |= u64::from(byte & 0x7F) << shift;
        if byte & 0x80 == 0 {
            return Ok(value);
        }
        shift += 7;
    }
}

fn read_u32(bytes: &[u8], pos: &mut usize) -> Result<u32> {
    let end = *pos + 4;
    let slice = bytes
        .get(*pos..end)
        .ok_or_else(|| Error::Decode("truncated header".into()))?;
    *pos = end;
    Ok(u32::from_le_bytes(slice.try_into().unwrap()))
}

fn read_u8(bytes: &[u8], pos: &mut usize) -> Result<u8> {
    let &byte = bytes
        .get(*pos)
        .ok_or_else(|| Error::Decode("truncated header".into()))?;
    *pos += 1;
    Ok(byte)
}

impl TsaxRepresentation {
    /// Serializes to the cache wire format.
    pub fn to_bytes(&self) -> Vec<u8> {
        let m = self.segment_count();
        let raw_size = m.div_ceil(8);
        let runs = rle_encode(self.trends());
        let mut rle_section = Vec::new();
        write_varint(&mut rle_section, runs.len() as u64);
        for run in &runs {
            rle_section.push(u8::from(run.trend.is_up()));
            write_varint(&mut rle_section, u64::from(run.count));
        }
        let use_rle = rle_section.len() < raw_size;

        let mut buf = Vec::with_capacity(10 + m + raw_size.min(rle_section.len()));
        buf.extend_from_slice(&(self.series_len() as u32).to_le_bytes());
        buf.extend_from_slice(&(m as u32).to_le_bytes());
        buf.push(self.alpha() as u8);
        buf.push(if use_rle { FLAG_RLE } else { 0 });
        buf.extend_from_slice(self.word().symbols());
        if use_rle {
            buf.extend_from_slice(&rle_section);
        } else {
            buf.extend_from_slice(self.trends().packed_bytes());
        }
        buf
    }

    /// Decodes the cache wire format. The whole slice must be consumed.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut pos = 0;
        let n = read_u32(bytes, &mut pos)? as usize;
        let m = read_u32(bytes, &mut pos)? as usize;
        let alpha = read_u8(bytes, &mut pos)? as usize;
        let flags = read_u8(bytes, &mut pos)?;

        if m == 0 || m > n {
            return Err(Error::Decode(format!("segment count {m} outside [1, {n}]")));
        }
        if !(MIN_ALPHA..=MAX_ALPHA).contains(&alpha) {
            return Err(Error::Decode(format!("alphabet size {alpha} out of range")));
        }
        if flags & !FLAG_RLE != 0 {
            return Err(Error::Decode(format!("unknown flags {flags:#04x}")));
        }

        let symbols = bytes
            .get(pos..pos + m)
            .ok_or_else(|| Error::Decode("truncated symbol section".into()))?
            .to_vec();
        pos += m;
        if let Some(&bad) = symbols.iter().find(|&&s| s as usize >= alpha) {
            return Err(Error::Decode(format!(
                "symbol {bad} outside alphabet of {alpha}"
            )));
        }

        let trends = if flags & FLAG_RLE != 0 {
            let run_count = read_varint(bytes, &mut pos)?;
            let mut runs = Vec::new();
            let mut total = 0u64;
            for _ in 0..run_count {
                let bit = read_u8(bytes, &mut pos)?;
                if bit > 1 {
                    return Err(Error::Decode(format!("run direction byte {bit}")));
                }
                let count = read_varint(bytes, &mut pos)?;
                if count == 0 {
                    return Err(Error::Decode("zero-length run".into()));
                }
                total += count;
                runs.push(Run {
                    trend: Trend::from(bit == 1),
                    count: u32::try_from(count)
                        .map_err(|_| Error::Decode("run length overflows u32".into()))?,
                });
            }
            if total != m as u64 {
                return Err(Error::Decode(format!(
                    "runs cover {total} segments, expected {m}"
                )));
            }
            rle_decode(&runs)
        } else {
            let raw_size = m.div_ceil(8);
            let packed = bytes
                .get(pos..pos + raw_size)
                .ok_or_else(|| Error::Decode("truncated trend section".into()))?
                .to_vec();
            pos += raw_size;
            TrendBits::from_packed(packed, m)?
        };

        if pos != bytes.len() {
            return Err(Error::Decode(format!(
                "{} trailing bytes after representation",
                bytes.len() - pos
            )));
        }

        let word = SaxWord::from_parts(symbols, n, alpha);
        TsaxRepresentation::new(word, trends)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::breakpoints::make_breakpoint_table;
    use crate::repr::tsax_transform;
    use crate::series::TimeSeries;

    fn sample(len: usize, m: usize) -> TsaxRepresentation {
        let table = make_breakpoint_table(4).unwrap();
        let values: Vec<f64> = (0..len).map(|i| ((i * 13) % 7) as f64 * 0.5 - 1.0).collect();
        let series = TimeSeries::new(values).unwrap();
        tsax_transform(&series, m, &table).unwrap()
    }

    #[test]
    fn round_trips() {
        for (len, m) in [(16, 4), (251, 62), (64, 16), (9, 2)] {
            let repr = sample(len, m);
            let bytes = repr.to_bytes();
            assert_eq!(TsaxRepresentation::from_bytes(&bytes).unwrap(), repr);
        }
    }

    #[test]
    fn long_constant_trend_section_uses_runs() {
        let table = make_breakpoint_table(4).unwrap();
        let series = TimeSeries::new((0..512).map(f64::from).collect()).unwrap();
        let repr = tsax_transform(&series, 128, &table).unwrap();
        let bytes = repr.to_bytes();
        // All 128 trends rise: one run instead of 16 raw bytes.
        assert_eq!(bytes[9], FLAG_RLE);
        assert_eq!(TsaxRepresentation::from_bytes(&bytes).unwrap(), repr);
    }

    #[test]
    fn rejects_corrupt_input() {
        let repr = sample(16, 4);
        let good = repr.to_bytes();

        assert!(TsaxRepresentation::from_bytes(&good[..good.len() - 1]).is_err());
        assert!(TsaxRepresentation::from_bytes(&[]).is_err());

        let mut trailing = good.clone();
        trailing.push(0);
        assert!(TsaxRepresentation::from_bytes(&trailing).is_err());

        let mut bad_symbol = good.clone();
        bad_symbol[10] = 9; // symbol >= alpha
        assert!(TsaxRepresentation::from_bytes(&bad_symbol).is_err());

        let mut bad_flags = good;
        bad_flags[9] = 0x40;
        assert!(TsaxRepresentation::from_bytes(&bad_flags).is_err());
    }

    #[test]
    fn varint_round_trip() {
        let mut buf = Vec::new();
        let values = [0u64, 1, 127, 128, 300, u32::MAX as u64, u64::MAX];
        for &v in &values {
            buf.clear();
            write_varint(&mut buf, v);
            let mut pos = 0;
            assert_eq!(read_varint(&buf, &mut pos).unwrap(), v);
            assert_eq!(pos, buf.len());
        }
    }
}
