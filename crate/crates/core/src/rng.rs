//! Deterministic stream derivation for Monte Carlo trials.
//!
//! Every random draw in an experiment comes from a ChaCha stream addressed
//! by (master seed, index, lane). The master seed fixes the cipher key and
//! the (index, lane) pair selects the 64-bit stream number, so distinct
//! pairs get non-overlapping keystreams and results never depend on worker
//! count or evaluation order.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// What a stream is used for within one trial. Lanes keep data bits, the
/// two noise processes and phase-vector generation independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lane {
    Data = 0,
    Awgn = 1,
    Impulse = 2,
    Phase = 3,
}

const LANES: u64 = 4;

/// Derives the RNG stream for (`master_seed`, `index`, `lane`).
///
/// `index` is the trial index for the data and noise lanes, or the
/// phase-vector index for [`Lane::Phase`].
pub fn derive_stream(master_seed: u64, index: u64, lane: Lane) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(master_seed);
    rng.set_stream(index.wrapping_mul(LANES).wrapping_add(lane as u64));
    rng
}
