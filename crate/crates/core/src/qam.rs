//! Gray-coded 16-QAM mapping with unit average symbol power.
//!
//! Each 4-bit group (b3 b2 b1 b0) picks the in-phase level from (b3 b2)
//! and the quadrature level from (b1 b0) through the Gray map
//! 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3, scaled by 1/sqrt(10) so the
//! constellation has unit mean power.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::signal::FrequencyBlock;

/// 16-QAM constellation parameters.
#[derive(Debug, Clone, Copy)]
pub struct QamConfig {
    pub order: usize,
    pub normalization: f64,
}

impl Default for QamConfig {
    fn default() -> Self {
        Self {
            order: 16,
            normalization: QAM16_SCALE,
        }
    }
}

/// 1/sqrt(10): scales the {+-1, +-3} lattice to unit average power.
pub const QAM16_SCALE: f64 = 0.316_227_766_016_837_94;

const LEVELS: [f64; 4] = [-3.0, -1.0, 1.0, 3.0];

fn gray_level(hi: bool, lo: bool) -> f64 {
    match (hi, lo) {
        (false, false) => -3.0,
        (false, true) => -1.0,
        (true, true) => 1.0,
        (true, false) => 3.0,
    }
}

fn level_bits(level: f64) -> (bool, bool) {
    if level == -3.0 {
        (false, false)
    } else if level == -1.0 {
        (false, true)
    } else if level == 1.0 {
        (true, true)
    } else {
        (true, false)
    }
}

/// Nearest lattice level for one axis; exact midpoints round toward the
/// lower level so decisions stay deterministic.
fn slice_level(x: f64) -> f64 {
    if x <= -2.0 {
        -3.0
    } else if x <= 0.0 {
        -1.0
    } else if x <= 2.0 {
        1.0
    } else {
        3.0
    }
}

/// Maps `bits` (length divisible by four) to subcarrier symbols.
pub fn qam16_modulate(bits: &[bool]) -> Result<FrequencyBlock> {
    if bits.len() % 4 != 0 {
        return Err(Error::InputShape(format!(
            "bit count {} is not divisible by 4",
            bits.len()
        )));
    }
    let symbols = bits
        .chunks_exact(4)
        .map(|b| {
            Complex64::new(
                gray_level(b[0], b[1]) * QAM16_SCALE,
                gray_level(b[2], b[3]) * QAM16_SCALE,
            )
        })
        .collect();
    Ok(FrequencyBlock::new(symbols))
}

/// Hard-decision demapping: nearest constellation point in Euclidean
/// distance, returned as 4 bits per symbol.
pub fn qam16_demodulate(block: &FrequencyBlock) -> Vec<bool> {
    let mut bits = Vec::with_capacity(4 * block.len());
    for z in block.symbols() {
        let i = slice_level(z.re / QAM16_SCALE);
        let q = slice_level(z.im / QAM16_SCALE);
        let (b3, b2) = level_bits(i);
        let (b1, b0) = level_bits(q);
        bits.extend_from_slice(&[b3, b2, b1, b0]);
    }
    bits
}

/// All sixteen constellation points (scaled), indexed by the 4-bit symbol
/// value b3 b2 b1 b0.
pub fn constellation() -> [Complex64; 16] {
    let mut pts = [Complex64::new(0.0, 0.0); 16];
    for (v, pt) in pts.iter_mut().enumerate() {
        let b = |k: usize| (v >> (3 - k)) & 1 == 1;
        *pt = Complex64::new(
            gray_level(b(0), b(1)) * QAM16_SCALE,
            gray_level(b(2), b(3)) * QAM16_SCALE,
        );
    }
    pts
}
