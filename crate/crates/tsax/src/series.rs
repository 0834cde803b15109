//! Raw time series with an optional class label.

use crate::error::{Error, Result};

/// An ordered vector of real-valued measurements, optionally labeled with a
/// class identifier.
///
/// Construction validates that the series is non-empty and every value is
/// finite, so downstream transforms never see NaN or infinity.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    values: Vec<f64>,
    label: Option<i32>,
}

impl TimeSeries {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        validate(&values)?;
        Ok(Self {
            values,
            label: None,
        })
    }

    pub fn with_label(values: Vec<f64>, label: i32) -> Result<Self> {
        validate(&values)?;
        Ok(Self {
            values,
            label: Some(label),
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn label(&self) -> Option<i32> {
        self.label
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: construction rejects empty series.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn validate(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidInput("time series is empty".into()));
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "non-finite value at index {i}"
        )));
    }
    Ok(())
}
