//! Signal blocks and OFDM modulation.
//!
//! A [`FrequencyBlock`] holds the N subcarrier symbols of one OFDM symbol,
//! a [`TimeBlock`] the N time-domain samples. Modulation is the unitary
//! inverse FFT, demodulation the unitary forward FFT, so the two domains
//! carry identical energy and no scale bookkeeping is needed anywhere else.

use num_complex::Complex64;

use crate::error::Result;
use crate::fft::{fft_unitary, Direction};

/// Subcarrier symbols of one OFDM symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyBlock {
    symbols: Vec<Complex64>,
}

impl FrequencyBlock {
    pub fn new(symbols: Vec<Complex64>) -> Self {
        Self { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Complex64] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Complex64> {
        self.symbols
    }
}

/// Time-domain samples of one OFDM symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeBlock {
    samples: Vec<Complex64>,
}

impl TimeBlock {
    pub fn new(samples: Vec<Complex64>) -> Self {
        Self { samples }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }
}

/// Sum of |z|^2 over a sample slice.
pub fn energy(samples: &[Complex64]) -> f64 {
    samples.iter().map(|z| z.norm_sqr()).sum()
}

/// Envelope magnitude |z|. This is the definition used by the blanking
/// comparison and the envelope statistics, so both always agree on
/// boundary cases.
pub fn magnitude(z: Complex64) -> f64 {
    (z.re * z.re + z.im * z.im).sqrt()
}

/// Unitary inverse transform: subcarrier symbols to time samples.
///
/// Errors unless the block length is a power of two.
pub fn ofdm_modulate(block: &FrequencyBlock) -> Result<TimeBlock> {
    Ok(TimeBlock::new(fft_unitary(
        block.symbols(),
        Direction::Inverse,
    )?))
}

/// Unitary forward transform: time samples back to subcarrier symbols.
/// Exact inverse of [`ofdm_modulate`] up to floating-point error.
pub fn ofdm_demodulate(block: &TimeBlock) -> Result<FrequencyBlock> {
    Ok(FrequencyBlock::new(fft_unitary(
        block.samples(),
        Direction::Forward,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn random_freq_block(rng: &mut ChaCha12Rng, n: usize) -> FrequencyBlock {
        FrequencyBlock::new(
            (0..n)
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect(),
        )
    }

    #[test]
    fn dc_subcarrier_gives_constant_signal() {
        let n = 64;
        let mut symbols = vec![Complex64::new(0.0, 0.0); n];
        symbols[0] = Complex64::new((n as f64).sqrt(), 0.0);
        let t = ofdm_modulate(&FrequencyBlock::new(symbols)).unwrap();
        for s in t.samples() {
            assert!((s - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn flat_spectrum_gives_impulse() {
        let n = 64;
        let symbols = vec![Complex64::new(1.0, 0.0); n];
        let t = ofdm_modulate(&FrequencyBlock::new(symbols)).unwrap();
        assert!((t.samples()[0] - Complex64::new((n as f64).sqrt(), 0.0)).norm() < 1e-12);
        for s in &t.samples()[1..] {
            assert!(s.norm() < 1e-12);
        }
    }

    #[test]
    fn parseval_holds_both_directions() {
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        for _ in 0..20 {
            let f = random_freq_block(&mut rng, 64);
            let t = ofdm_modulate(&f).unwrap();
            let ef = energy(f.symbols());
            let et = energy(t.samples());
            assert!((ef - et).abs() / ef < 1e-10);
            let f2 = ofdm_demodulate(&t).unwrap();
            assert!((energy(f2.symbols()) - et).abs() / et < 1e-10);
        }
    }

    #[test]
    fn round_trip_recovers_symbols() {
        let mut rng = ChaCha12Rng::seed_from_u64(10);
        let f = random_freq_block(&mut rng, 64);
        let back = ofdm_demodulate(&ofdm_modulate(&f).unwrap()).unwrap();
        let worst = f
            .symbols()
            .iter()
            .zip(back.symbols())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        assert!(worst < 1e-12);
    }

    #[test]
    fn zero_in_zero_out() {
        let t = TimeBlock::new(vec![Complex64::new(0.0, 0.0); 64]);
        let f = ofdm_demodulate(&t).unwrap();
        assert!(f.symbols().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn impulse_spreads_flat() {
        let n = 64;
        let mut samples = vec![Complex64::new(0.0, 0.0); n];
        samples[0] = Complex64::new(1.0, 0.0);
        let f = ofdm_demodulate(&TimeBlock::new(samples)).unwrap();
        let expect = 1.0 / (n as f64).sqrt();
        for z in f.symbols() {
            assert!((z - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn modulation_is_linear() {
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        let s1 = random_freq_block(&mut rng, 64);
        let s2 = random_freq_block(&mut rng, 64);
        let (a, b) = (Complex64::new(1.7, -0.3), Complex64::new(-0.4, 2.1));
        let mixed = FrequencyBlock::new(
            s1.symbols()
                .iter()
                .zip(s2.symbols())
                .map(|(x, y)| a * x + b * y)
                .collect(),
        );
        let lhs = ofdm_modulate(&mixed).unwrap();
        let t1 = ofdm_modulate(&s1).unwrap();
        let t2 = ofdm_modulate(&s2).unwrap();
        for ((l, x), y) in lhs.samples().iter().zip(t1.samples()).zip(t2.samples()) {
            assert!((l - (a * x + b * y)).norm() < 1e-10);
        }
    }

    #[test]
    fn magnitude_matches_norm() {
        let z = Complex64::new(3.0, 4.0);
        assert_eq!(magnitude(z), 5.0);
        assert_eq!(magnitude(Complex64::new(0.0, 0.0)), 0.0);
    }
}
