//! Experiment orchestration: SAX vs TSAX error comparison across datasets.

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::breakpoints::{make_breakpoint_table, BreakpointTable};
use crate::classify::{
    evaluate_loo_precomputed, evaluate_train_test_precomputed, represent_dataset, DistanceKind,
    EvalConfig, LabeledDataset,
};
use crate::dataset::{dataset_name_from_path, generate_trend_pair_dataset, parse_ucr_str};
use crate::distance::TsaxDistanceParams;
use crate::error::{Error, Result};
use crate::repr::TsaxRepresentation;

/// Neighbor-set protocol for the error measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Protocol {
    /// Classify each series against the rest of the same file.
    Loo,
    /// Classify each test series against the companion train file.
    TrainTest,
}

/// Size of the built-in synthetic fixture, per class.
const SYNTHETIC_PER_CLASS: usize = 20;
/// Length of each synthetic series.
const SYNTHETIC_LENGTH: usize = 64;
/// Uniform noise amplitude of the synthetic fixture.
const SYNTHETIC_NOISE: f64 = 0.1;

/// Full configuration of one comparison run. The defaults reproduce the
/// reference setup: alpha 4, four points per segment, rew -1, pen +1,
/// leave-one-out.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub alpha: usize,
    /// Points per segment (n/m).
    pub segment_ratio: usize,
    pub rew: f64,
    pub pen: f64,
    pub protocol: Protocol,
    /// UCR-format files, one dataset each.
    pub data_paths: Vec<PathBuf>,
    /// Run the built-in trend-pair fixture instead of files.
    pub synthetic: bool,
    /// Seed for the synthetic fixture.
    pub seed: u64,
    /// Reuse serialized representations across runs with the same file
    /// content, alpha, and ratio.
    pub use_cache: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            alpha: 4,
            segment_ratio: 4,
            rew: -1.0,
            pen: 1.0,
            protocol: Protocol::Loo,
            data_paths: Vec::new(),
            synthetic: false,
            seed: 7,
            use_cache: true,
        }
    }
}

/// Which method won one dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Winner {
    Tsax,
    Sax,
    Tie,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::Tsax => "TSAX",
            Winner::Sax => "SAX",
            Winner::Tie => "TIE",
        })
    }
}

/// One dataset's comparison outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub dataset: String,
    pub n_series: usize,
    pub class_count: usize,
    pub length: usize,
    pub sax_error: f64,
    pub tsax_error: f64,
}

impl ReportRow {
    pub fn winner(&self) -> Winner {
        if self.tsax_error < self.sax_error {
            Winner::Tsax
        } else if self.sax_error < self.tsax_error {
            Winner::Sax
        } else {
            Winner::Tie
        }
    }
}

/// A dataset that could not be evaluated.
#[derive(Debug, Clone)]
pub struct DatasetFailure {
    pub dataset: String,
    pub message: String,
}

/// All rows of one run plus per-dataset failures. Rows keep input order.
#[derive(Debug, Clone, Default)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
    pub failures: Vec<DatasetFailure>,
}

impl ExperimentReport {
    pub fn tsax_wins(&self) -> usize {
        self.count(Winner::Tsax)
    }

    pub fn sax_wins(&self) -> usize {
        self.count(Winner::Sax)
    }

    pub fn ties(&self) -> usize {
        self.count(Winner::Tie)
    }

    fn count(&self, winner: Winner) -> usize {
        self.rows.iter().filter(|r| r.winner() == winner).count()
    }
}

struct PreparedDataset {
    name: String,
    reps: Vec<TsaxRepresentation>,
    labels: Vec<i32>,
    class_count: usize,
    series_len: usize,
}

impl PreparedDataset {
    fn from_dataset(
        dataset: &LabeledDataset,
        table: &BreakpointTable,
        ratio: usize,
    ) -> Result<Self> {
        let config = EvalConfig {
            alpha: table.alpha(),
            segment_ratio: ratio,
            distance: DistanceKind::Sax,
        };
        let m = config.segment_count(dataset.series_len())?;
        Ok(Self {
            name: dataset.name().to_string(),
            reps: represent_dataset(dataset, table, m)?,
            labels: dataset.labels(),
            class_count: dataset.class_count(),
            series_len: dataset.series_len(),
        })
    }

    fn from_cache_records(name: &str, reps: Vec<TsaxRepresentation>, labels: Vec<i32>) -> Self {
        let mut classes: Vec<i32> = labels.clone();
        classes.sort_unstable();
        classes.dedup();
        let series_len = reps.first().map_or(0, |r| r.series_len());
        Self {
            name: name.to_string(),
            reps,
            labels,
            class_count: classes.len(),
            series_len,
        }
    }
}

/// Runs the SAX-vs-TSAX comparison over every configured dataset.
///
/// Per-dataset failures are recorded in the report instead of aborting the
/// batch. Fails upfront only when no dataset is configured at all.
pub fn run_comparison(config: &ExperimentConfig) -> Result<ExperimentReport> {
    if !config.synthetic && config.data_paths.is_empty() {
        return Err(Error::InvalidParameter(
            "no datasets: pass data files or enable the synthetic fixture".into(),
        ));
    }
    let table = make_breakpoint_table(config.alpha)?;
    if config.segment_ratio == 0 {
        return Err(Error::InvalidParameter("segment ratio is zero".into()));
    }
    if !config.rew.is_finite() || !config.pen.is_finite() {
        return Err(Error::InvalidParameter(
            "trend weights must be finite".into(),
        ));
    }

    let mut report = ExperimentReport::default();
    if config.synthetic {
        match compare_synthetic(config, &table) {
            Ok(row) => report.rows.push(row),
            Err(e) => report.failures.push(DatasetFailure {
                dataset: "trend-pair".into(),
                message: e.to_string(),
            }),
        }
        return Ok(report);
    }

    for path in &config.data_paths {
        match compare_file(config, &table, path) {
            Ok(row) => report.rows.push(row),
            Err(e) => report.failures.push(DatasetFailure {
                dataset: dataset_name_from_path(path),
                message: e.to_string(),
            }),
        }
    }
    Ok(report)
}

fn compare_prepared(
    config: &ExperimentConfig,
    table: &BreakpointTable,
    train: Option<&PreparedDataset>,
    eval: &PreparedDataset,
) -> Result<ReportRow> {
    let sax = DistanceKind::Sax;
    let tsax = DistanceKind::Tsax(TsaxDistanceParams {
        rew: config.rew,
        pen: config.pen,
    });
    let (sax_error, tsax_error) = match train {
        None => (
            evaluate_loo_precomputed(&eval.name, &eval.reps, &eval.labels, table, &sax)?
                .error_rate,
            evaluate_loo_precomputed(&eval.name, &eval.reps, &eval.labels, table, &tsax)?
                .error_rate,
        ),
        Some(train) => (
            evaluate_train_test_precomputed(
                &eval.name,
                &train.reps,
                &train.labels,
                &eval.reps,
                &eval.labels,
                table,
                &sax,
            )?
            .error_rate,
            evaluate_train_test_precomputed(
                &eval.name,
                &train.reps,
                &train.labels,
                &eval.reps,
                &eval.labels,
                table,
                &tsax,
            )?
            .error_rate,
        ),
    };
    Ok(ReportRow {
        dataset: eval.name.clone(),
        n_series: eval.reps.len(),
        class_count: eval.class_count,
        length: eval.series_len,
        sax_error,
        tsax_error,
    })
}

fn compare_synthetic(config: &ExperimentConfig, table: &BreakpointTable) -> Result<ReportRow> {
    let eval_set = generate_trend_pair_dataset(
        SYNTHETIC_PER_CLASS,
        SYNTHETIC_LENGTH,
        SYNTHETIC_NOISE,
        config.seed,
    )?;
    let eval = PreparedDataset::from_dataset(&eval_set, table, config.segment_ratio)?;
    match config.protocol {
        Protocol::Loo => compare_prepared(config, table, None, &eval),
        Protocol::TrainTest => {
            let train_set = generate_trend_pair_dataset(
                SYNTHETIC_PER_CLASS,
                SYNTHETIC_LENGTH,
                SYNTHETIC_NOISE,
                config.seed.wrapping_add(1),
            )?;
            let train = PreparedDataset::from_dataset(&train_set, table, config.segment_ratio)?;
            compare_prepared(config, table, Some(&train), &eval)
        }
    }
}

fn compare_file(
    config: &ExperimentConfig,
    table: &BreakpointTable,
    path: &Path,
) -> Result<ReportRow> {
    let eval = prepare_file(config, table, path)?;
    match config.protocol {
        Protocol::Loo => compare_prepared(config, table, None, &eval),
        Protocol::TrainTest => {
            let train_path = train_sibling(path).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "cannot derive a TRAIN file from {}",
                    path.display()
                ))
            })?;
            let train = prepare_file(config, table, &train_path)?;
            compare_prepared(config, table, Some(&train), &eval)
        }
    }
}

/// Companion train split: the file name with its first TEST marker replaced.
fn train_sibling(path: &Path) -> Option<PathBuf> {
    let name = path.file_name()?.to_str()?;
    let replaced = if name.contains("TEST") {
        name.replacen("TEST", "TRAIN", 1)
    } else if name.contains("test") {
        name.replacen("test", "train", 1)
    } else {
        return None;
    };
    Some(path.with_file_name(replaced))
}

fn prepare_file(
    config: &ExperimentConfig,
    table: &BreakpointTable,
    path: &Path,
) -> Result<PreparedDataset> {
    let bytes = fs::read(path)?;
    let name = dataset_name_from_path(path);

    let cache_path = config.use_cache.then(|| {
        cache_path_for(&bytes, config.alpha, config.segment_ratio)
    });
    if let Some(ref cache_path) = cache_path {
        if let Some((reps, labels)) = load_cache(cache_path, config) {
            return Ok(PreparedDataset::from_cache_records(&name, reps, labels));
        }
    }

    let content = std::str::from_utf8(&bytes)
        .map_err(|_| Error::InvalidInput(format!("{} is not UTF-8 text", path.display())))?;
    let dataset = parse_ucr_str(&name, content)?;
    let prepared = PreparedDataset::from_dataset(&dataset, table, config.segment_ratio)?;

    if let Some(ref cache_path) = cache_path {
        // Best effort: a failed cache write never fails the run.
        let _ = store_cache(cache_path, config, &prepared);
    }
    Ok(prepared)
}

// ---------------------------------------------------------------------------
// Representation cache, keyed by (file content hash, alpha, ratio).

const CACHE_MAGIC: &[u8; 8] = b"TSAXREPS";
const CACHE_VERSION: u8 = 1;

fn cache_path_for(content: &[u8], alpha: usize, ratio: usize) -> PathBuf {
    let digest = Sha256::digest(content);
    let mut key = String::with_capacity(16);
    for byte in digest.iter().take(8) {
        key.push_str(&format!("{byte:02x}"));
    }
    std::env::temp_dir()
        .join("tsax-bench-cache")
        .join(format!("{key}-a{alpha}-r{ratio}.reps"))
}

fn store_cache(path: &Path, config: &ExperimentConfig, prepared: &PreparedDataset) -> Result<()> {
    let mut buf = Vec::new();
    buf.extend_from_slice(CACHE_MAGIC);
    buf.push(CACHE_VERSION);
    buf.push(config.alpha as u8);
    buf.extend_from_slice(&(config.segment_ratio as u32).to_le_bytes());
    buf.extend_from_slice(&(prepared.reps.len() as u32).to_le_bytes());
    for (repr, &label) in prepared.reps.iter().zip(&prepared.labels) {
        let bytes = repr.to_bytes();
        buf.extend_from_slice(&label.to_le_bytes());
        buf.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
        buf.extend_from_slice(&bytes);
    }
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, buf)?;
    Ok(())
}

fn load_cache(path: &Path, config: &ExperimentConfig) -> Option<(Vec<TsaxRepresentation>, Vec<i32>)> {
    let bytes = fs::read(path).ok()?;
    decode_cache(&bytes, config.alpha, config.segment_ratio).ok()
}

fn decode_cache(
    bytes: &[u8],
    alpha: usize,
    ratio: usize,
) -> Result<(Vec<TsaxRepresentation>, Vec<i32>)> {
    let corrupt = |what: &str| Error::Decode(format!("representation cache: {what}"));
    if bytes.len() < 18 || &bytes[..8] != CACHE_MAGIC {
        return Err(corrupt("bad magic"));
    }
    if bytes[8] != CACHE_VERSION {
        return Err(corrupt("unsupported version"));
    }
    if bytes[9] as usize != alpha {
        return Err(corrupt("alpha mismatch"));
    }
    let stored_ratio = u32::from_le_bytes(bytes[10..14].try_into().unwrap()) as usize;
    if stored_ratio != ratio {
        return Err(corrupt("ratio mismatch"));
    }
    let count = u32::from_le_bytes(bytes[14..18].try_into().unwrap()) as usize;

    let mut pos = 18;
    let mut reps = Vec::with_capacity(count);
    let mut labels = Vec::with_capacity(count);
    for _ in 0..count {
        let header = bytes
            .get(pos..pos + 8)
            .ok_or_else(|| corrupt("truncated record header"))?;
        let label = i32::from_le_bytes(header[..4].try_into().unwrap());
        let len = u32::from_le_bytes(header[4..].try_into().unwrap()) as usize;
        pos += 8;
        let record = bytes
            .get(pos..pos + len)
            .ok_or_else(|| corrupt("truncated record"))?;
        pos += len;
        reps.push(TsaxRepresentation::from_bytes(record)?);
        labels.push(label);
    }
    if pos != bytes.len() {
        return Err(corrupt("trailing bytes"));
    }
    if reps.is_empty() {
        return Err(corrupt("no records"));
    }
    Ok((reps, labels))
}

// ---------------------------------------------------------------------------
// Report output.

/// Writes the comparison table: 3-decimal error rates and a trailing comment
/// row with the win tally.
pub fn write_report_csv(report: &ExperimentReport, path: &Path) -> Result<()> {
    if report.rows.is_empty() {
        return Err(Error::InvalidInput("report has no rows".into()));
    }
    let mut out = Vec::new();
    writeln!(
        out,
        "dataset,n_series,classes,length,sax_error,tsax_error,winner"
    )?;
    for row in &report.rows {
        writeln!(
            out,
            "{},{},{},{},{:.3},{:.3},{}",
            row.dataset,
            row.n_series,
            row.class_count,
            row.length,
            row.sax_error,
            row.tsax_error,
            row.winner()
        )?;
    }
    writeln!(
        out,
        "# tsax_wins={},sax_wins={},ties={}",
        report.tsax_wins(),
        report.sax_wins(),
        report.ties()
    )?;
    fs::write(path, out)?;
    Ok(())
}

/// Writes the per-dataset error pairs at full precision, one point per
/// dataset.
pub fn write_scatter_csv(report: &ExperimentReport, path: &Path) -> Result<()> {
    if report.rows.is_empty() {
        return Err(Error::InvalidInput("report has no rows".into()));
    }
    let mut out = Vec::new();
    writeln!(out, "dataset,sax_error,tsax_error")?;
    for row in &report.rows {
        writeln!(out, "{},{},{}", row.dataset, row.sax_error, row.tsax_error)?;
    }
    fs::write(path, out)?;
    Ok(())
}

/// Scatter file companion of a report path: `report.csv` ->
/// `report_scatter.csv`.
pub fn scatter_path_for(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".into());
    out.with_file_name(format!("{stem}_scatter.csv"))
}
