//! Output-SNR accumulation and relative gain.
//!
//! The SNR estimate is the ensemble ratio of accumulated energies — sum
//! the signal energy and the error energy over all symbols, then take one
//! ratio — not a mean of per-symbol ratios. That keeps accumulation
//! associative and stays well-defined when individual symbols have zero
//! error. Zero total error is reported as an infinite-SNR sentinel, which
//! serializes as the literal `inf`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Running sums of signal and error energy over accumulated blocks.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SnrMeasurement {
    signal_energy: f64,
    error_energy: f64,
    samples: u64,
}

impl SnrMeasurement {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one block's contribution: signal energy of `transmitted` and
    /// error energy of `blanked - transmitted`.
    pub fn accumulate(&mut self, transmitted: &[Complex64], blanked: &[Complex64]) -> Result<()> {
        if transmitted.len() != blanked.len() {
            return Err(Error::InputShape(format!(
                "length mismatch: transmitted {} vs blanked {}",
                transmitted.len(),
                blanked.len()
            )));
        }
        for (s, y) in transmitted.iter().zip(blanked) {
            self.signal_energy += s.norm_sqr();
            self.error_energy += (y - s).norm_sqr();
        }
        self.samples += transmitted.len() as u64;
        Ok(())
    }

    /// Field-wise merge of a partial measurement from another worker.
    pub fn merge(&mut self, other: &SnrMeasurement) {
        self.signal_energy += other.signal_energy;
        self.error_energy += other.error_energy;
        self.samples += other.samples;
    }

    pub fn signal_energy(&self) -> f64 {
        self.signal_energy
    }

    pub fn error_energy(&self) -> f64 {
        self.error_energy
    }

    pub fn sample_count(&self) -> u64 {
        self.samples
    }

    /// Linear SNR; `f64::INFINITY` when the error energy is exactly zero.
    pub fn snr_linear(&self) -> Result<f64> {
        if self.samples == 0 {
            return Err(Error::EmptyMeasurement);
        }
        if self.error_energy == 0.0 {
            return Ok(f64::INFINITY);
        }
        Ok(self.signal_energy / self.error_energy)
    }

    /// SNR in dB; infinite when the error energy is exactly zero.
    pub fn snr_db(&self) -> Result<f64> {
        Ok(linear_to_db(self.snr_linear()?))
    }
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Relative gain 10 log10(snr_u / snr_unmod) of one linear SNR over
/// another. Both must be positive; a pair of infinite SNRs compares equal
/// (0 dB), one infinite side saturates to the signed infinity.
pub fn relative_gain_db(snr_u: f64, snr_unmod: f64) -> Result<f64> {
    if !(snr_u > 0.0) || !(snr_unmod > 0.0) {
        return Err(Error::Config(format!(
            "relative gain needs positive SNRs, got {snr_u} and {snr_unmod}"
        )));
    }
    match (snr_u.is_infinite(), snr_unmod.is_infinite()) {
        (true, true) => Ok(0.0),
        (true, false) => Ok(f64::INFINITY),
        (false, true) => Ok(f64::NEG_INFINITY),
        (false, false) => Ok(linear_to_db(snr_u / snr_unmod)),
    }
}
