//! The noisy channel: AWGN plus Bernoulli-Gaussian impulsive noise, applied
//! sample-wise to the transmitted time block.
//!
//! Ratio-to-variance conventions, fixed here once for the whole system:
//! the transmitted signal has unit mean power by construction, SBNR is the
//! ratio of signal power to *total* complex AWGN power, so
//! `sigma_w_sq = 10^(-SBNR/10) / 2` per real component and
//! `E|w|^2 = 2 sigma_w_sq = 10^(-SBNR/10)`. The impulse variance keeps the
//! per-component form `sigma_i_sq = 10^(-SINR/10)`, so an impulse-bearing
//! sample carries `E|g|^2 = 2 sigma_i_sq`.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::signal::TimeBlock;

/// Channel noise parameters derived from the two dB ratios and the
/// impulse probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    pub sbnr_db: f64,
    pub sinr_db: f64,
    pub p: f64,
    /// AWGN variance per real component.
    pub sigma_w_sq: f64,
    /// Impulse variance per real component.
    pub sigma_i_sq: f64,
}

impl ChannelParams {
    pub fn new(sbnr_db: f64, sinr_db: f64, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Config(format!(
                "impulse probability p = {p} outside [0, 1]"
            )));
        }
        Ok(Self {
            sbnr_db,
            sinr_db,
            p,
            sigma_w_sq: 0.5 * 10f64.powf(-sbnr_db / 10.0),
            sigma_i_sq: 10f64.powf(-sinr_db / 10.0),
        })
    }
}

/// One pass of a signal through the channel, keeping the noise components
/// and the impulse mask for diagnostics.
#[derive(Debug, Clone)]
pub struct ChannelRealization {
    pub received: TimeBlock,
    pub impulse_mask: Vec<bool>,
    pub awgn: TimeBlock,
    pub impulses: TimeBlock,
}

/// Circularly symmetric Gaussian noise with variance `sigma_sq` per real
/// component, so `E|w|^2 = 2 sigma_sq`.
pub fn awgn_noise<R: Rng>(n: usize, sigma_sq: f64, rng: &mut R) -> Result<Vec<Complex64>> {
    if sigma_sq < 0.0 {
        return Err(Error::Config(format!("negative variance {sigma_sq}")));
    }
    if sigma_sq == 0.0 {
        return Ok(vec![Complex64::new(0.0, 0.0); n]);
    }
    let sd = sigma_sq.sqrt();
    Ok((0..n)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(sd * re, sd * im)
        })
        .collect())
}

/// Bernoulli-Gaussian impulse train: each sample is hit with probability
/// `p`, and a hit draws a Gaussian with variance `sigma_sq` per component.
/// Returns the noise samples and the hit mask.
pub fn impulsive_noise<R: Rng>(
    n: usize,
    p: f64,
    sigma_sq: f64,
    rng: &mut R,
) -> Result<(Vec<Complex64>, Vec<bool>)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Config(format!(
            "impulse probability p = {p} outside [0, 1]"
        )));
    }
    if sigma_sq < 0.0 {
        return Err(Error::Config(format!("negative variance {sigma_sq}")));
    }
    let sd = sigma_sq.sqrt();
    let mut samples = Vec::with_capacity(n);
    let mut mask = Vec::with_capacity(n);
    for _ in 0..n {
        let hit = rng.random_bool(p);
        mask.push(hit);
        if hit {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            samples.push(Complex64::new(sd * re, sd * im));
        } else {
            samples.push(Complex64::new(0.0, 0.0));
        }
    }
    Ok((samples, mask))
}

/// Passes `signal` through the channel: received = signal + AWGN + impulses,
/// elementwise. The two noise processes draw from separate streams so trials
/// can pair them across transmit arms.
pub fn transmit<R: Rng>(
    signal: &TimeBlock,
    params: &ChannelParams,
    awgn_rng: &mut R,
    impulse_rng: &mut R,
) -> Result<ChannelRealization> {
    let n = signal.len();
    let awgn = awgn_noise(n, params.sigma_w_sq, awgn_rng)?;
    let (impulses, impulse_mask) = impulsive_noise(n, params.p, params.sigma_i_sq, impulse_rng)?;
    let received = signal
        .samples()
        .iter()
        .zip(&awgn)
        .zip(&impulses)
        .map(|((s, w), i)| s + w + i)
        .collect();
    Ok(ChannelRealization {
        received: TimeBlock::new(received),
        impulse_mask,
        awgn: TimeBlock::new(awgn),
        impulses: TimeBlock::new(impulses),
    })
}
