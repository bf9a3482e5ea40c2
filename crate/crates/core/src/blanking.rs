//! Receiver-side blanking and the statistics-driven threshold estimate.
//!
//! Blanking zeroes every sample whose envelope exceeds the threshold;
//! samples exactly at the threshold are kept. The estimator derives the
//! threshold from the received envelope's order statistics:
//!
//! ```text
//! INE  = max - mean
//! beta = gamma - (median - mean)
//! OT   = INE / beta
//! ```
//!
//! All statistics operate on the magnitude envelope |r_k|, the only reading
//! compatible with an amplitude threshold. The estimator accepts a record
//! of any length, so callers choose the estimation window — a single
//! symbol or a whole trial's worth of samples.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::signal::{magnitude, TimeBlock};

/// How the blanking threshold is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThresholdSpec {
    /// Blank above a fixed amplitude.
    Fixed { threshold: f64 },
    /// Estimate the threshold from the received block with constant `gamma`.
    Optimized { gamma: f64 },
}

/// Order statistics of a magnitude envelope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeStats {
    pub max: f64,
    pub mean: f64,
    pub median: f64,
}

/// Result of the threshold estimate, with the inputs kept for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdEstimate {
    pub ot: f64,
    pub ine: f64,
    pub beta: f64,
    pub stats: EnvelopeStats,
    /// Set when INE collapsed to zero (e.g. an all-zero record), which
    /// makes the estimate blank everything with a nonzero envelope.
    pub zero_threshold: bool,
}

/// Max, mean and median of |r_k| over the record. The median of an
/// even-length record is the mean of the two middle order statistics.
pub fn envelope_stats(samples: &[Complex64]) -> Result<EnvelopeStats> {
    if samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut mags: Vec<f64> = samples.iter().map(|&z| magnitude(z)).collect();
    mags.sort_by(|a, b| a.partial_cmp(b).expect("finite magnitudes"));
    let n = mags.len();
    let max = mags[n - 1];
    let mean = mags.iter().sum::<f64>() / n as f64;
    let median = if n % 2 == 1 {
        mags[n / 2]
    } else {
        0.5 * (mags[n / 2 - 1] + mags[n / 2])
    };
    Ok(EnvelopeStats { max, mean, median })
}

/// Threshold estimate over `samples` with the given `gamma`.
///
/// A non-positive denominator is an error rather than a clamp: it means
/// gamma is too small for the record's statistics, and clamping would
/// silently corrupt gamma sweeps.
pub fn estimate_ot(samples: &[Complex64], gamma: f64) -> Result<ThresholdEstimate> {
    if gamma <= 0.0 {
        return Err(Error::Config(format!("gamma = {gamma} must be positive")));
    }
    let stats = envelope_stats(samples)?;
    let ine = stats.max - stats.mean;
    let beta = gamma - (stats.median - stats.mean);
    if beta <= 0.0 {
        return Err(Error::DegenerateThreshold { beta, gamma });
    }
    let ot = ine / beta;
    Ok(ThresholdEstimate {
        ot,
        ine,
        beta,
        stats,
        zero_threshold: ine == 0.0,
    })
}

/// Blanking nonlinearity: `y_k = r_k` when `|r_k| <= t`, else 0.
pub fn blank(received: &TimeBlock, t: f64) -> Result<TimeBlock> {
    if t < 0.0 {
        return Err(Error::Config(format!("blanking threshold {t} is negative")));
    }
    Ok(TimeBlock::new(
        received
            .samples()
            .iter()
            .map(|&r| {
                if magnitude(r) <= t {
                    r
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect(),
    ))
}

/// Applies a [`ThresholdSpec`] to one block: fixed mode blanks at the given
/// amplitude, optimized mode estimates the threshold from this block first.
/// Returns the blanked block and the threshold actually applied.
pub fn blank_with_spec(received: &TimeBlock, spec: &ThresholdSpec) -> Result<(TimeBlock, f64)> {
    match *spec {
        ThresholdSpec::Fixed { threshold } => Ok((blank(received, threshold)?, threshold)),
        ThresholdSpec::Optimized { gamma } => {
            let est = estimate_ot(received.samples(), gamma)?;
            Ok((blank(received, est.ot)?, est.ot))
        }
    }
}
