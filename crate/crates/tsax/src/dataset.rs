//! UCR-format dataset files and synthetic fixtures.

use std::fs;
use std::io::Write;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::LabeledDataset;
use crate::error::{Error, Result};
use crate::series::TimeSeries;

/// Parses UCR text content: one series per line, first field the class
/// label, remaining fields the measurements.
///
/// The delimiter is auto-detected from the first data line (tab, then comma,
/// then runs of spaces). Labels may be written as integer-valued reals such
/// as `1.0000000e+00` and are truncated to integers. Blank lines are
/// skipped; every row must have the same number of fields.
pub fn parse_ucr_str(name: &str, content: &str) -> Result<LabeledDataset> {
    let mut delimiter: Option<char> = None;
    let mut expected_fields: Option<usize> = None;
    let mut series = Vec::new();

    for (line_no, line) in content.lines().enumerate() {
        let line_no = line_no + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }

        let delim = *delimiter.get_or_insert_with(|| {
            if trimmed.contains('\t') {
                '\t'
            } else if trimmed.contains(',') {
                ','
            } else {
                ' '
            }
        });
        let mut fields: Vec<&str> = if delim == ' ' {
            trimmed.split_whitespace().collect()
        } else {
            trimmed.split(delim).map(str::trim).collect()
        };
        // Tolerate a trailing delimiter.
        while fields.last() == Some(&"") {
            fields.pop();
        }

        if let Some(expected) = expected_fields {
            if fields.len() != expected {
                return Err(Error::Format {
                    line: line_no,
                    message: format!("row has {} fields, expected {expected}", fields.len()),
                });
            }
        } else {
            if fields.len() < 2 {
                return Err(Error::Format {
                    line: line_no,
                    message: "row needs a label and at least one measurement".into(),
                });
            }
            expected_fields = Some(fields.len());
        }

        let parse_field = |column: usize, token: &str| -> Result<f64> {
            token.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                column,
                message: format!("not a number: {token:?}"),
            })
        };

        let label = parse_field(1, fields[0])?.trunc() as i32;
        let mut values = Vec::with_capacity(fields.len() - 1);
        for (i, token) in fields[1..].iter().enumerate() {
            let value = parse_field(i + 2, token)?;
            if !value.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    column: i + 2,
                    message: format!("non-finite value: {token:?}"),
                });
            }
            values.push(value);
        }
        series.push(TimeSeries::with_label(values, label)?);
    }

    if series.is_empty() {
        return Err(Error::InvalidInput(format!(
            "dataset {name} has no data rows"
        )));
    }
    LabeledDataset::new(name, series)
}

/// Reads a UCR-format file. The dataset name is the file stem with any
/// `_TEST` / `_TRAIN` suffix stripped.
pub fn parse_ucr_file(path: &Path) -> Result<LabeledDataset> {
    let content = fs::read_to_string(path)?;
    parse_ucr_str(&dataset_name_from_path(path), &content)
}

/// Dataset display name for a UCR split file.
pub fn dataset_name_from_path(path: &Path) -> String {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    for suffix in ["_TEST", "_TRAIN", "_test", "_train"] {
        if let Some(stripped) = stem.strip_suffix(suffix) {
            return stripped.to_string();
        }
    }
    stem
}

/// Writes a dataset in tab-delimited UCR format. Values are printed with
/// Rust's shortest round-trip float formatting, so re-parsing reproduces the
/// dataset bit for bit.
pub fn write_ucr_file(dataset: &LabeledDataset, path: &Path) -> Result<()> {
    let mut out = Vec::new();
    for series in dataset.series() {
        write!(out, "{}", series.label().unwrap())?;
        for v in series.values() {
            write!(out, "\t{v}")?;
        }
        writeln!(out)?;
    }
    fs::write(path, out)?;
    Ok(())
}

/// Two-class fixture in which trend direction is the only separating
/// signal.
///
/// Every series repeats a four-point cell; class 1 cells rise, class 2 cells
/// fall. With `noise == 0` a class-1 series and its class-2 mirror (same
/// index) have identical means over any window of whole cells, so their PAA
/// coefficients agree at the default four-point segmentation while every
/// segment trend disagrees. Uniform noise of the given amplitude is added
/// per point; generation is fully determined by `seed`.
pub fn generate_trend_pair_dataset(
    per_class: usize,
    length: usize,
    noise: f64,
    seed: u64,
) -> Result<LabeledDataset> {
    if per_class < 1 {
        return Err(Error::InvalidParameter("per_class must be at least 1".into()));
    }
    if length < 8 {
        return Err(Error::InvalidParameter(format!(
            "length {length} is below the minimum of 8"
        )));
    }
    if !noise.is_finite() || noise < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "noise amplitude {noise} must be finite and non-negative"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut series = Vec::with_capacity(per_class * 2);
    for label in [1, 2] {
        for _ in 0..per_class {
            let values = (0..length)
                .map(|t| {
                    let phase = (t % 4) as f64;
                    let base = if label == 1 { phase } else { 3.0 - phase };
                    let jitter = if noise > 0.0 {
                        rng.random_range(-noise..=noise)
                    } else {
                        0.0
                    };
                    base + jitter
                })
                .collect();
            series.push(TimeSeries::with_label(values, label)?);
        }
    }
    LabeledDataset::new("trend-pair", series)
}
