//! Run-length encoding of trend-bit vectors.
//!
//! Successive segments of real series often share the same trend, so the
//! trend part compresses well as (direction, count) runs.

use crate::trend::{Trend, TrendBits};

/// One maximal run of equal trend bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub trend: Trend,
    pub count: u32,
}

/// Collapses the bit vector into maximal runs. Adjacent runs always carry
/// opposite trends and the counts sum to the input length.
pub fn rle_encode(bits: &TrendBits) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for trend in bits.iter() {
        match runs.last_mut() {
            Some(run) if run.trend == trend => run.count += 1,
            _ => runs.push(Run { trend, count: 1 }),
        }
    }
    runs
}

/// Expands runs back into a bit vector. Exact inverse of [`rle_encode`].
pub fn rle_decode(runs: &[Run]) -> TrendBits {
    let mut bits = TrendBits::new();
    for run in runs {
        for _ in 0..run.count {
            bits.push(run.trend);
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(pattern: &[bool]) -> TrendBits {
        pattern.iter().map(|&b| Trend::from(b)).collect()
    }

    #[test]
    fn collapses_repeats() {
        let runs = rle_encode(&bits(&[true, true, true, false]));
        assert_eq!(
            runs,
            vec![
                Run {
                    trend: Trend::Up,
                    count: 3
                },
                Run {
                    trend: Trend::Down,
                    count: 1
                },
            ]
        );
    }

    #[test]
    fn alternating_input_gets_unit_runs() {
        let runs = rle_encode(&bits(&[true, false, true, false]));
        assert_eq!(runs.len(), 4);
        assert!(runs.iter().all(|r| r.count == 1));
    }

    #[test]
    fn empty_input_empty_runs() {
        assert!(rle_encode(&TrendBits::new()).is_empty());
        assert_eq!(rle_decode(&[]), TrendBits::new());
    }

    #[test]
    fn runs_alternate_and_sum_to_len() {
        let input = bits(&[true, true, false, false, false, true, false, false]);
        let runs = rle_encode(&input);
        for w in runs.windows(2) {
            assert_ne!(w[0].trend, w[1].trend);
        }
        assert_eq!(runs.iter().map(|r| r.count as usize).sum::<usize>(), 8);
        assert_eq!(rle_decode(&runs), input);
    }
}
