//! Lossless DNA sequence compression built on 4-base fragment codes.
//!
//! A sequence over {a, c, g, t} is split into 4-base fragments, each mapped
//! to one of 256 8-bit codes, and every emitted token carries a ninth bit:
//! a repeat flag that collapses one adjacent identical fragment. Leftover
//! bases (fewer than four) are appended as plain 2-bit codes. For `n` bases
//! with tail length `tau = n mod 4` and `upsilon` collapsed pairs the
//! output is exactly `9/4 (n - tau) + 2 tau - 9 upsilon` bits, which lands
//! between 1.125 bits per base (fully paired fragments) and 2.25 (no
//! repeats, no tail).
//!
//! ```
//! use genbit::{decode, encode, measure, NucleotideSequence};
//!
//! # fn main() -> Result<(), genbit::GenBitError> {
//! let sequence = NucleotideSequence::from_text("aaaaaaaa")?;
//! let stream = encode(&sequence);
//! assert_eq!(stream.to_bit_string(), "000000001");
//!
//! let stats = measure(&sequence)?;
//! assert_eq!(stats.total_bits, 9);
//! assert_eq!(stats.rate, 1.125);
//!
//! assert_eq!(decode(&stream, sequence.len())?, sequence);
//! # Ok(())
//! # }
//! ```
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`fragment_codebook`** - the base codes and the fragment code table
//! - **`encode_roundtrip`** - token streams, bit layouts, decoding
//! - **`sequence_stats`** - measurements and the closed-form bit count
//! - **`scenario_rates`** - best, average, and worst case rates by length
//! - **`fasta_to_container`** - FASTA ingestion and GBC1 container files
//! - **`synthetic_bench`** - seeded corpora across repeat densities
//!
//! ```bash
//! cargo run -p genbit --example fragment_codebook
//! cargo run -p genbit --example encode_roundtrip
//! cargo run -p genbit --example sequence_stats
//! cargo run -p genbit --example scenario_rates
//! cargo run -p genbit --example fasta_to_container
//! cargo run -p genbit --example synthetic_bench
//! ```
//!
//! The `genbit` binary wraps the same library behind `encode`, `decode`,
//! `stats`, `bench`, and `selftest` subcommands; see [`cli`].

pub mod bench;
pub mod cli;
pub mod codebook;
pub mod codec;
pub mod container;
mod error;
pub mod ingest;
pub mod metrics;
pub mod selftest;

pub use bench::{generate_synthetic, run_corpus, BenchConfig, BenchReport, CorpusEntry};
pub use codebook::{Base, Fragment};
pub use codec::{
    count_collapsed_pairs, decode, encode, fragmentize, FragmentView, NucleotideSequence,
    TokenStream,
};
pub use container::{pack_bits, read_container, unpack_bits, write_container};
pub use error::GenBitError;
pub use ingest::{normalize, parse_fasta, FastaRecord, NormalizationPolicy};
pub use metrics::{
    compression_rate, measure, scenario_stats, theoretical_total_bits, CompressionStats, Scenario,
};
