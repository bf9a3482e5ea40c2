//! Radix-2 discrete Fourier transforms with unitary scaling.
//!
//! Both directions carry a 1/sqrt(N) factor so energy is identical in the
//! time and frequency domains and a forward/inverse pair is an exact
//! round trip up to floating-point error. Lengths must be powers of two.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Transform direction. `Forward` maps time samples to subcarrier symbols
/// (negative exponent); `Inverse` is the synthesis direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

fn reverse_bits(mut x: usize, bits: u32) -> usize {
    let mut out = 0;
    for _ in 0..bits {
        out = (out << 1) | (x & 1);
        x >>= 1;
    }
    out
}

fn bit_reverse_permute(data: &mut [Complex64]) {
    let n = data.len();
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = reverse_bits(i, bits);
        if i < j {
            data.swap(i, j);
        }
    }
}

/// In-place iterative Cooley-Tukey butterflies, no normalization.
fn transform(data: &mut [Complex64], direction: Direction) {
    let n = data.len();
    bit_reverse_permute(data);

    let sign = match direction {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };

    let mut len = 2;
    while len <= n {
        let step = Complex64::from_polar(1.0, sign * std::f64::consts::TAU / len as f64);
        for group in (0..n).step_by(len) {
            let mut w = Complex64::new(1.0, 0.0);
            for k in 0..len / 2 {
                let a = data[group + k];
                let b = data[group + k + len / 2] * w;
                data[group + k] = a + b;
                data[group + k + len / 2] = a - b;
                w *= step;
            }
        }
        len <<= 1;
    }
}

/// Unitary FFT of `input` in the given direction.
///
/// Errors with a configuration error unless the length is a power of two.
pub fn fft_unitary(input: &[Complex64], direction: Direction) -> Result<Vec<Complex64>> {
    let n = input.len();
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::Config(format!(
            "transform length must be a power of two, got {n}"
        )));
    }
    let mut data = input.to_vec();
    transform(&mut data, direction);
    let scale = 1.0 / (n as f64).sqrt();
    for v in &mut data {
        *v *= scale;
    }
    Ok(data)
}
