//! Selective mapping: generate U phase-rotated candidates of a frequency
//! block, transmit the one with the lowest PAPR, undo the rotation at the
//! receiver.
//!
//! Phase weights are drawn from {+1, -1, +j, -j} so every rotation is
//! exact in floating point. Vector 0 is always the all-ones identity, which
//! makes U = 1 literally the unmodified system. Sets generated from the
//! same seed are nested: asking for more vectors never changes the first
//! ones, so PAPR can only improve as U grows.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::{derive_stream, Lane};
use crate::signal::{energy, ofdm_modulate, FrequencyBlock, TimeBlock};

const ALPHABET: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(0.0, -1.0),
];

/// A set of U unit-modulus phase vectors of length N.
#[derive(Debug, Clone)]
pub struct PhaseVectorSet {
    u_count: usize,
    n: usize,
    seed: u64,
    vectors: Vec<Vec<Complex64>>,
}

impl PhaseVectorSet {
    pub fn u_count(&self) -> usize {
        self.u_count
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn vector(&self, u: usize) -> &[Complex64] {
        &self.vectors[u]
    }
}

/// Builds the phase-vector set for (`u_count`, `n`, `seed`).
///
/// Vector 0 is all ones; each remaining vector is drawn i.i.d. from the
/// quaternary alphabet on its own derived stream, which is what makes the
/// sets nested across `u_count` for a fixed seed.
pub fn generate_phase_vectors(u_count: usize, n: usize, seed: u64) -> Result<PhaseVectorSet> {
    if u_count == 0 {
        return Err(Error::Config("u_count must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::Config("phase vector length must be at least 1".into()));
    }
    let mut vectors = Vec::with_capacity(u_count);
    vectors.push(vec![Complex64::new(1.0, 0.0); n]);
    for u in 1..u_count {
        let mut rng = derive_stream(seed, u as u64, Lane::Phase);
        vectors.push((0..n).map(|_| ALPHABET[rng.random_range(0..4)]).collect());
    }
    Ok(PhaseVectorSet {
        u_count,
        n,
        seed,
        vectors,
    })
}

/// Peak-to-average power ratio of a time block, as a linear ratio.
///
/// Errors on an all-zero signal, where the ratio is undefined.
pub fn papr(signal: &TimeBlock) -> Result<f64> {
    if signal.is_empty() {
        return Err(Error::EmptyInput);
    }
    let total = energy(signal.samples());
    if total == 0.0 {
        return Err(Error::UndefinedPapr);
    }
    let peak = signal
        .samples()
        .iter()
        .map(|z| z.norm_sqr())
        .fold(0.0f64, f64::max);
    let mean = total / signal.len() as f64;
    Ok(peak / mean)
}

/// Outcome of the candidate selection: the transmitted signal, the index
/// of the winning phase vector and the PAPR of every candidate.
#[derive(Debug, Clone)]
pub struct SlmSelection {
    pub signal: TimeBlock,
    pub chosen_index: usize,
    pub papr: f64,
    pub candidate_paprs: Vec<f64>,
}

/// Rotates `block` by every phase vector, modulates each candidate and
/// returns the one with the smallest PAPR. Ties go to the lowest index.
pub fn slm_select(block: &FrequencyBlock, vectors: &PhaseVectorSet) -> Result<SlmSelection> {
    if block.len() != vectors.n() {
        return Err(Error::InputShape(format!(
            "block length {} does not match phase vector length {}",
            block.len(),
            vectors.n()
        )));
    }
    let mut chosen: Option<(usize, f64, TimeBlock)> = None;
    let mut candidate_paprs = Vec::with_capacity(vectors.u_count());
    for u in 0..vectors.u_count() {
        let rotated = FrequencyBlock::new(
            block
                .symbols()
                .iter()
                .zip(vectors.vector(u))
                .map(|(s, w)| s * w)
                .collect(),
        );
        let candidate = ofdm_modulate(&rotated)?;
        let ratio = papr(&candidate)?;
        candidate_paprs.push(ratio);
        match &chosen {
            Some((_, best, _)) if ratio >= *best => {}
            _ => chosen = Some((u, ratio, candidate)),
        }
    }
    let (chosen_index, papr, signal) = chosen.expect("u_count >= 1");
    Ok(SlmSelection {
        signal,
        chosen_index,
        papr,
        candidate_paprs,
    })
}

/// Undoes the rotation of `chosen_index` by multiplying with the conjugate
/// weights. The receiver is assumed to know the index exactly.
pub fn slm_derotate(
    block: &FrequencyBlock,
    vectors: &PhaseVectorSet,
    chosen_index: usize,
) -> Result<FrequencyBlock> {
    if chosen_index >= vectors.u_count() {
        return Err(Error::InputShape(format!(
            "chosen index {} out of range for {} vectors",
            chosen_index,
            vectors.u_count()
        )));
    }
    if block.len() != vectors.n() {
        return Err(Error::InputShape(format!(
            "block length {} does not match phase vector length {}",
            block.len(),
            vectors.n()
        )));
    }
    Ok(FrequencyBlock::new(
        block
            .symbols()
            .iter()
            .zip(vectors.vector(chosen_index))
            .map(|(s, w)| s * w.conj())
            .collect(),
    ))
}
