//! Symbolic time-series representations with trend information.
//!
//! A time series is z-normalized, reduced to segment means (PAA), and
//! discretized against Gaussian breakpoints into a symbol word. The trend
//! variant additionally keeps one bit per segment: the sign of the
//! least-squares slope over that segment. Two distances compare the results:
//! the classic lower-bounding word distance, and the trend-aware distance
//! that rewards matching trends and penalizes opposing ones.
//!
//! The crate also ships a 1NN classification harness over UCR-format
//! datasets and the `tsax-bench` binary, which compares the two distances
//! across datasets and writes CSV reports.
//!
//! ```
//! use tsax::{make_breakpoint_table, tsax_transform, tsax_dist, TimeSeries, TsaxDistanceParams};
//!
//! let table = make_breakpoint_table(4).unwrap();
//! let rising = TimeSeries::new((0..16).map(f64::from).collect()).unwrap();
//! let falling = TimeSeries::new((0..16).rev().map(f64::from).collect()).unwrap();
//! let a = tsax_transform(&rising, 4, &table).unwrap();
//! let b = tsax_transform(&falling, 4, &table).unwrap();
//! let d = tsax_dist(&a, &b, &table, &TsaxDistanceParams::default()).unwrap();
//! assert!(d > 0.0);
//! ```

pub mod bench;
pub mod breakpoints;
pub mod classify;
pub mod codec;
pub mod dataset;
pub mod distance;
pub mod error;
pub mod paa;
pub mod repr;
pub mod rle;
pub mod sax;
pub mod series;
pub mod trend;

pub use bench::{
    run_comparison, scatter_path_for, write_report_csv, write_scatter_csv, DatasetFailure,
    ExperimentConfig, ExperimentReport, Protocol, ReportRow, Winner,
};
pub use breakpoints::{make_breakpoint_table, BreakpointTable, MAX_ALPHA, MIN_ALPHA};
pub use classify::{
    classify_1nn, evaluate_loo, evaluate_loo_precomputed, evaluate_train_test,
    evaluate_train_test_precomputed, represent_dataset, DistanceKind, EvalConfig, EvalResult,
    LabeledDataset,
};
pub use dataset::{generate_trend_pair_dataset, parse_ucr_file, parse_ucr_str, write_ucr_file};
pub use distance::{
    sax_mindist, trend_match_counts, tsax_dist, TrendMatchCounts, TsaxDistanceParams,
};
pub use error::{Error, Result};
pub use paa::{paa_transform, segment_bounds, z_normalize};
pub use repr::{tsax_transform, TsaxRepresentation};
pub use rle::{rle_decode, rle_encode, Run};
pub use sax::{sax_transform, symbolize, SaxWord};
pub use series::TimeSeries;
pub use trend::{segment_trend, Trend, TrendBits};
