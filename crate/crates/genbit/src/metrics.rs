//! The closed-form bit count, the compression rate, the three named
//! scenarios, and measurement of concrete sequences.
//!
//! For a sequence of `n` bases with tail length `tau = n mod 4` and
//! `upsilon` collapsed fragment pairs, the encoded size in bits is
//!
//! ```text
//! total_bits = 9/4 (n - tau) + 2 tau - 9 upsilon
//! ```
//!
//! and the compression rate is `total_bits / n` in bits per base. The rate
//! spans 1.125 (every fragment collapsed, no tail) up to 2.25, which is
//! attained exactly when `tau = 0` and `upsilon = 0` and approached from
//! below for nonzero tails as `n` grows.

use serde::Serialize;

use crate::codec::{self, NucleotideSequence};
use crate::error::GenBitError;

/// The measurement record for one sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CompressionStats {
    /// Base count.
    pub n: usize,
    /// Tail length, `n mod 4`.
    pub tau: usize,
    /// Collapsed-pair count.
    pub upsilon: usize,
    /// Total encoded bits.
    pub total_bits: usize,
    /// Bits per base, `total_bits / n`.
    pub rate: f64,
}

/// Evaluates the closed form `9/4 (n - tau) + 2 tau - 9 upsilon`.
///
/// `tau` must equal `n mod 4` and `upsilon` may not exceed the pairing
/// maximum `(n - tau) / 8`; the result is an exact integer because the
/// fragment region is a multiple of 4 bases.
pub fn theoretical_total_bits(n: usize, tau: usize, upsilon: usize) -> Result<usize, GenBitError> {
    if tau != n % 4 {
        return Err(GenBitError::Precondition(format!(
            "tau must equal n mod 4; got tau={tau} for n={n}"
        )));
    }
    let fragments = (n - tau) / 4;
    if upsilon > fragments / 2 {
        return Err(GenBitError::Precondition(format!(
            "upsilon={upsilon} exceeds the pairing maximum {} for n={n}",
            fragments / 2
        )));
    }
    Ok(9 * fragments + 2 * tau - 9 * upsilon)
}

/// Bits per base; undefined for an empty sequence.
pub fn compression_rate(total_bits: usize, n: usize) -> Result<f64, GenBitError> {
    if n == 0 {
        return Err(GenBitError::UndefinedRate);
    }
    Ok(total_bits as f64 / n as f64)
}

/// The three analysed input classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scenario {
    /// Every fragment pair collapsed and no tail: requires `8 | n`.
    Best,
    /// Half the fragment pairs collapsed with a 2-base tail: requires
    /// `n mod 4 = 2` and `16 | (n - 2)`.
    Average,
    /// No collapsed pairs at all; defined for every length.
    Worst,
}

/// Stats for a scenario at base count `n`, computed from the closed form.
pub fn scenario_stats(kind: Scenario, n: usize) -> Result<CompressionStats, GenBitError> {
    if n == 0 {
        return Err(GenBitError::UndefinedRate);
    }
    let (tau, upsilon) = match kind {
        Scenario::Best => {
            if n % 8 != 0 {
                return Err(GenBitError::Precondition(format!(
                    "best case requires n divisible by 8; got n={n}"
                )));
            }
            (0, n / 8)
        }
        Scenario::Average => {
            if n % 4 != 2 || (n - 2) % 16 != 0 {
                return Err(GenBitError::Precondition(format!(
                    "average case requires n mod 4 = 2 and n - 2 divisible by 16; got n={n}"
                )));
            }
            (2, (n - 2) / 16)
        }
        Scenario::Worst => (n % 4, 0),
    };
    let total_bits = theoretical_total_bits(n, tau, upsilon)?;
    Ok(CompressionStats {
        n,
        tau,
        upsilon,
        total_bits,
        rate: compression_rate(total_bits, n)?,
    })
}

/// Measures a concrete sequence: counts collapsed pairs, encodes, and
/// asserts that the emitted bit count matches the closed form.
pub fn measure(sequence: &NucleotideSequence) -> Result<CompressionStats, GenBitError> {
    let n = sequence.len();
    if n == 0 {
        return Err(GenBitError::UndefinedRate);
    }
    let tau = n % 4;
    let upsilon = codec::count_collapsed_pairs(sequence);
    let total_bits = codec::encode(sequence).bit_len();
    let formula = theoretical_total_bits(n, tau, upsilon)?;
    assert_eq!(
        total_bits, formula,
        "emitted bit count must match the closed form"
    );
    Ok(CompressionStats {
        n,
        tau,
        upsilon,
        total_bits,
        rate: compression_rate(total_bits, n)?,
    })
}
