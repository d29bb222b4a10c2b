//! Deterministic, platform-independent randomness for the experiments.
//!
//! The generator is SplitMix64 (Steele, Lea & Flood's splittable PRNG): pure
//! fixed-width integer arithmetic, so a given seed yields the same stream on
//! every platform. Experiments derive a sub-seed from the master seed and
//! their own label, keeping independent experiments decoupled while the whole
//! run stays reproducible from one number.

use crate::rational::{rat_int, Rational};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n ≤ 2^32 keeps modulo bias negligible for our use;
    /// all call sites use tiny n).
    pub fn next_below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform integer in −9..=9 as a rational, the sampling convention for
    /// every exact-arithmetic experiment in this crate.
    pub fn small_rational(&mut self) -> Rational {
        rat_int(self.next_below(19) as i64 - 9)
    }

    /// Uniform f64 in [-1, 1).
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 52) as f64 * 2.0 - 1.0
    }
}

/// Sub-seed for a labeled experiment: FNV-1a of the label folded into the
/// master seed, then one SplitMix64 scramble.
pub fn sub_seed(master: u64, label: &str) -> u64 {
    let mut h: u64 = 0xCBF2_9CE4_8422_2325;
    for b in label.as_bytes() {
        h ^= *b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    SplitMix64::new(master ^ h).next_u64()
}
