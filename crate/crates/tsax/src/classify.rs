//! 1-nearest-neighbor classification over symbolic representations.

use rayon::prelude::*;

use crate::breakpoints::{make_breakpoint_table, BreakpointTable};
use crate::distance::{sax_mindist, tsax_dist, TsaxDistanceParams};
use crate::error::{Error, Result};
use crate::repr::{tsax_transform, TsaxRepresentation};
use crate::series::TimeSeries;

/// A named set of labeled, equal-length series.
#[derive(Debug, Clone)]
pub struct LabeledDataset {
    name: String,
    series: Vec<TimeSeries>,
    series_len: usize,
    classes: Vec<i32>,
}

impl LabeledDataset {
    /// Validates that the set is non-empty, every series carries a label,
    /// and all series share one length.
    pub fn new(name: impl Into<String>, series: Vec<TimeSeries>) -> Result<Self> {
        let name = name.into();
        let first = series
            .first()
            .ok_or_else(|| Error::InvalidInput(format!("dataset {name} has no series")))?;
        let series_len = first.len();
        let mut classes = Vec::new();
        for (i, s) in series.iter().enumerate() {
            if s.label().is_none() {
                return Err(Error::InvalidInput(format!(
                    "series {i} of dataset {name} has no label"
                )));
            }
            if s.len() != series_len {
                return Err(Error::InvalidInput(format!(
                    "series {i} of dataset {name} has length {}, expected {series_len}",
                    s.len()
                )));
            }
            let label = s.label().unwrap();
            if !classes.contains(&label) {
                classes.push(label);
            }
        }
        classes.sort_unstable();
        Ok(Self {
            name,
            series,
            series_len,
            classes,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }

    /// Length shared by every series.
    pub fn series_len(&self) -> usize {
        self.series_len
    }

    /// Distinct labels, ascending.
    pub fn classes(&self) -> &[i32] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn labels(&self) -> Vec<i32> {
        self.series.iter().map(|s| s.label().unwrap()).collect()
    }
}

/// Which distance drives the nearest-neighbor search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceKind {
    /// Symbol-word distance only.
    Sax,
    /// Symbol-word distance plus trend reward/penalty.
    Tsax(TsaxDistanceParams),
}

impl DistanceKind {
    fn eval(
        &self,
        a: &TsaxRepresentation,
        b: &TsaxRepresentation,
        table: &BreakpointTable,
    ) -> Result<f64> {
        match self {
            DistanceKind::Sax => sax_mindist(a.word(), b.word(), table),
            DistanceKind::Tsax(params) => tsax_dist(a, b, table, params),
        }
    }
}

/// Representation and distance settings for one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub alpha: usize,
    /// Points per segment (n/m). The segment count is n divided by this,
    /// rounded down, so every segment keeps at least `segment_ratio` points.
    pub segment_ratio: usize,
    pub distance: DistanceKind,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            alpha: 4,
            segment_ratio: 4,
            distance: DistanceKind::Tsax(TsaxDistanceParams::default()),
        }
    }
}

impl EvalConfig {
    /// Segment count for a series of `n` points, at least 1.
    pub fn segment_count(&self, n: usize) -> Result<usize> {
        if self.segment_ratio == 0 {
            return Err(Error::InvalidParameter("segment ratio is zero".into()));
        }
        Ok((n / self.segment_ratio).max(1))
    }
}

/// Outcome of evaluating one dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub dataset: String,
    pub n_series: usize,
    /// Misclassified queries over total queries.
    pub error_rate: f64,
    /// (true label, predicted label) per query, in query order.
    pub per_query: Vec<(i32, i32)>,
}

impl EvalResult {
    fn from_predictions(dataset: &str, truths: &[i32], predictions: &[i32]) -> Self {
        let wrong = truths
            .iter()
            .zip(predictions)
            .filter(|(t, p)| t != p)
            .count();
        EvalResult {
            dataset: dataset.to_string(),
            n_series: truths.len(),
            error_rate: wrong as f64 / truths.len() as f64,
            per_query: truths.iter().copied().zip(predictions.iter().copied()).collect(),
        }
    }
}

/// Label of the reference closest to the query. Ties go to the lowest
/// reference index, which keeps predictions reproducible across runs.
pub fn classify_1nn<D>(
    query: &TsaxRepresentation,
    references: &[TsaxRepresentation],
    labels: &[i32],
    distance: D,
) -> Result<i32>
where
    D: Fn(&TsaxRepresentation, &TsaxRepresentation) -> Result<f64>,
{
    if references.is_empty() {
        return Err(Error::InvalidInput("no references to classify against".into()));
    }
    if references.len() != labels.len() {
        return Err(Error::InvalidInput(format!(
            "{} references but {} labels",
            references.len(),
            labels.len()
        )));
    }
    let mut best: Option<(f64, usize)> = None;
    for (j, reference) in references.iter().enumerate() {
        let d = distance(query, reference)?;
        if best.is_none_or(|(bd, _)| d < bd) {
            best = Some((d, j));
        }
    }
    Ok(labels[best.unwrap().1])
}

/// Transforms every series of a dataset with shared settings.
pub fn represent_dataset(
    dataset: &LabeledDataset,
    table: &BreakpointTable,
    segment_count: usize,
) -> Result<Vec<TsaxRepresentation>> {
    dataset
        .series()
        .par_iter()
        .map(|s| tsax_transform(s, segment_count, table))
        .collect()
}

/// Leave-one-out evaluation: each series is classified against every other
/// series of the same set.
pub fn evaluate_loo(dataset: &LabeledDataset, config: &EvalConfig) -> Result<EvalResult> {
    if dataset.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "dataset {} has {} series; leave-one-out needs at least 2",
            dataset.name(),
            dataset.len()
        )));
    }
    let table = make_breakpoint_table(config.alpha)?;
    let m = config.segment_count(dataset.series_len())?;
    let reps = represent_dataset(dataset, &table, m)?;
    let labels = dataset.labels();
    evaluate_loo_precomputed(dataset.name(), &reps, &labels, &table, &config.distance)
}

/// Leave-one-out over already-transformed representations.
///
/// Queries run in parallel; predictions are collected by query index, so the
/// result never depends on scheduling.
pub fn evaluate_loo_precomputed(
    name: &str,
    reps: &[TsaxRepresentation],
    labels: &[i32],
    table: &BreakpointTable,
    distance: &DistanceKind,
) -> Result<EvalResult> {
    if reps.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "dataset {name} has {} representations; leave-one-out needs at least 2",
            reps.len()
        )));
    }
    if reps.len() != labels.len() {
        return Err(Error::InvalidInput(format!(
            "{} representations but {} labels",
            reps.len(),
            labels.len()
        )));
    }
    let predictions: Vec<i32> = (0..reps.len())
        .into_par_iter()
        .map(|i| {
            let mut best: Option<(f64, usize)> = None;
            for (j, reference) in reps.iter().enumerate() {
                if j == i {
                    continue;
                }
                let d = distance.eval(&reps[i], reference, table)?;
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, j));
                }
            }
            Ok(labels[best.unwrap().1])
        })
        .collect::<Result<_>>()?;
    Ok(EvalResult::from_predictions(name, labels, &predictions))
}

/// Classifies each test series against the training set only.
pub fn evaluate_train_test(
    train: &LabeledDataset,
    test: &LabeledDataset,
    config: &EvalConfig,
) -> Result<EvalResult> {
    if train.series_len() != test.series_len() {
        return Err(Error::Incompatible(format!(
            "train series length {} vs test series length {}",
            train.series_len(),
            test.series_len()
        )));
    }
    let table = make_breakpoint_table(config.alpha)?;
    let m = config.segment_count(test.series_len())?;
    let train_reps = represent_dataset(train, &table, m)?;
    let test_reps = represent_dataset(test, &table, m)?;
    evaluate_train_test_precomputed(
        test.name(),
        &train_reps,
        &train.labels(),
        &test_reps,
        &test.labels(),
        &table,
        &config.distance,
    )
}

/// Train/test split over already-transformed representations.
#[allow(clippy::too_many_arguments)]
pub fn evaluate_train_test_precomputed(
    name: &str,
    train_reps: &[TsaxRepresentation],
    train_labels: &[i32],
    test_reps: &[TsaxRepresentation],
    test_labels: &[i32],
    table: &BreakpointTable,
    distance: &DistanceKind,
) -> Result<EvalResult> {
    if train_reps.is_empty() || test_reps.is_empty() {
        return Err(Error::InvalidInput(
            "train and test sets must be non-empty".into(),
        ));
    }
    if train_reps.len() != train_labels.len() || test_reps.len() != test_labels.len() {
        return Err(Error::InvalidInput(
            "representation and label counts differ".into(),
        ));
    }
    let predictions: Vec<i32> = test_reps
        .par_iter()
        .map(|query| {
            classify_1nn(query, train_reps, train_labels, |a, b| {
                distance.eval(a, b, table)
            })
        })
        .collect::<Result<_>>()?;
    Ok(EvalResult::from_predictions(name, test_labels, &predictions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_series_dataset(label_a: i32, label_b: i32) -> LabeledDataset {
        let values = vec![1.0, 5.0, 2.0, 8.0, 3.0, 9.0, 1.0, 6.0];
        LabeledDataset::new(
            "pair",
            vec![
                TimeSeries::with_label(values.clone(), label_a).unwrap(),
                TimeSeries::with_label(values, label_b).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn dataset_validation() {
        assert!(LabeledDataset::new("empty", vec![]).is_err());
        assert!(LabeledDataset::new(
            "unlabeled",
            vec![TimeSeries::new(vec![1.0, 2.0]).unwrap()]
        )
        .is_err());
        assert!(LabeledDataset::new(
            "ragged",
            vec![
                TimeSeries::with_label(vec![1.0, 2.0], 1).unwrap(),
                TimeSeries::with_label(vec![1.0, 2.0, 3.0], 1).unwrap(),
            ]
        )
        .is_err());

        let ds = two_series_dataset(2, 1);
        assert_eq!(ds.classes(), &[1, 2]);
        assert_eq!(ds.class_count(), 2);
        assert_eq!(ds.series_len(), 8);
    }

    #[test]
    fn exact_match_wins() {
        let table = make_breakpoint_table(4).unwrap();
        let mk = |values: Vec<f64>| {
            tsax_transform(&TimeSeries::new(values).unwrap(), 2, &table).unwrap()
        };
        let query = mk(vec![1.0, 2.0, 8.0, 9.0, 3.0, 2.0, 1.0, 0.5]);
        let refs = vec![
            // Words "ad" vs the query's "cb": strictly positive distance.
            mk(vec![0.0, 0.0, 0.0, 0.0, 9.0, 9.0, 9.0, 9.0]),
            mk(vec![1.0, 2.0, 8.0, 9.0, 3.0, 2.0, 1.0, 0.5]),
        ];
        let label = classify_1nn(&query, &refs, &[7, 3], |a, b| {
            sax_mindist(a.word(), b.word(), &table)
        })
        .unwrap();
        assert_eq!(label, 3);
    }

    #[test]
    fn empty_reference_set_is_rejected() {
        let table = make_breakpoint_table(4).unwrap();
        let query = tsax_transform(
            &TimeSeries::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap(),
            2,
            &table,
        )
        .unwrap();
        assert!(classify_1nn(&query, &[], &[], |a, b| {
            sax_mindist(a.word(), b.word(), &table)
        })
        .is_err());
    }

    #[test]
    fn ties_break_to_lowest_index() {
        let table = make_breakpoint_table(4).unwrap();
        let mk = |values: Vec<f64>| {
            tsax_transform(&TimeSeries::new(values).unwrap(), 2, &table).unwrap()
        };
        // All references identical: every distance ties at zero.
        let values = vec![1.0, 2.0, 8.0, 9.0];
        let query = mk(values.clone());
        let refs = vec![mk(values.clone()), mk(values.clone()), mk(values)];
        let label = classify_1nn(&query, &refs, &[5, 6, 7], |a, b| {
            sax_mindist(a.word(), b.word(), &table)
        })
        .unwrap();
        assert_eq!(label, 5);
    }

    #[test]
    fn loo_identical_pair_same_label() {
        let result = evaluate_loo(&two_series_dataset(1, 1), &EvalConfig::default()).unwrap();
        assert_eq!(result.error_rate, 0.0);
        assert_eq!(result.per_query, vec![(1, 1), (1, 1)]);
    }

    #[test]
    fn loo_identical_pair_different_labels() {
        let result = evaluate_loo(&two_series_dataset(1, 2), &EvalConfig::default()).unwrap();
        assert_eq!(result.error_rate, 1.0);
        assert_eq!(result.per_query, vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn loo_needs_two_series() {
        let ds = LabeledDataset::new(
            "single",
            vec![TimeSeries::with_label(vec![1.0; 8], 1).unwrap()],
        )
        .unwrap();
        assert!(evaluate_loo(&ds, &EvalConfig::default()).is_err());
    }

    #[test]
    fn train_test_trivial_cases() {
        // Two distinguishable series: with train == test each query finds
        // itself at the unique minimum distance.
        let ds = LabeledDataset::new(
            "pair",
            vec![
                TimeSeries::with_label((0..8).map(f64::from).collect(), 1).unwrap(),
                TimeSeries::with_label((0..8).rev().map(f64::from).collect(), 2).unwrap(),
            ],
        )
        .unwrap();
        let result = evaluate_train_test(&ds, &ds, &EvalConfig::default()).unwrap();
        assert_eq!(result.error_rate, 0.0);

        // Identical twins with one shared label are also error-free.
        let twins = two_series_dataset(1, 1);
        let result = evaluate_train_test(&twins, &twins, &EvalConfig::default()).unwrap();
        assert_eq!(result.error_rate, 0.0);

        let single = LabeledDataset::new(
            "one",
            vec![TimeSeries::with_label(vec![1.0, 5.0, 2.0, 8.0, 3.0, 9.0, 1.0, 6.0], 9).unwrap()],
        )
        .unwrap();
        let forced = evaluate_train_test(&single, &ds, &EvalConfig::default()).unwrap();
        assert!(forced.per_query.iter().all(|&(_, p)| p == 9));
    }

    #[test]
    fn train_test_rejects_length_mismatch() {
        let ds = two_series_dataset(1, 2);
        let other = LabeledDataset::new(
            "longer",
            vec![
                TimeSeries::with_label(vec![1.0; 12], 1).unwrap(),
                TimeSeries::with_label(vec![2.0; 12], 2).unwrap(),
            ],
        )
        .unwrap();
        assert!(evaluate_train_test(&ds, &other, &EvalConfig::default()).is_err());
    }

    #[test]
    fn segment_count_from_ratio() {
        let config = EvalConfig::default();
        assert_eq!(config.segment_count(16).unwrap(), 4);
        assert_eq!(config.segment_count(251).unwrap(), 62);
        assert_eq!(config.segment_count(3).unwrap(), 1);

        let bad = EvalConfig {
            segment_ratio: 0,
            ..EvalConfig::default()
        };
        assert!(bad.segment_count(16).is_err());
    }
}
