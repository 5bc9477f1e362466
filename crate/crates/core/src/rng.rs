//! Deterministic pseudorandom generator for the test harness.
//!
//! A splitmix-style 64-bit state update: the state advances by the constant
//! `0x9E3779B97F4A7C15` and each output is finalized by two xor-shift
//! multiplies. The update is fully specified so that trial sequences
//! reproduce across implementations; see the repository README for the
//! exact constants.

use num_complex::Complex64;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Generator for one trial, derived from the harness seed and the trial
    /// index: `state = mix(seed xor mix(index + 1))`.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        SplitMix64 {
            state: mix(seed ^ mix(trial.wrapping_add(1))),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn next_in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform over the closed disk of the given radius centered at 0.
    pub fn next_complex_in_disk(&mut self, radius: f64) -> Complex64 {
        let r = radius * self.next_f64().sqrt();
        let theta = 2.0 * std::f64::consts::PI * self.next_f64();
        Complex64::from_polar(r, theta)
    }
}
