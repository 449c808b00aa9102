//! Built-in consistency checks behind the `selftest` CLI subcommand.

use std::str::FromStr;

use crate::bench::{self, BenchConfig, SplitMix64};
use crate::codebook::Fragment;
use crate::codec::{self, NucleotideSequence};
use crate::container;
use crate::metrics;

/// One named check with either a summary detail or a failure reason.
#[derive(Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Result<String, String>,
}

/// Deliberate fault injection, used to exercise the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorruptTarget {
    Codebook,
}

impl FromStr for CorruptTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "codebook" => Ok(CorruptTarget::Codebook),
            _ => Err(format!("unknown corruption target {s:?}")),
        }
    }
}

/// Runs every check, optionally against a corrupted codebook table.
pub fn run(corrupt: Option<CorruptTarget>) -> Vec<CheckResult> {
    let mut table: Vec<Fragment> = (0..=255u8).map(Fragment::from_code).collect();
    if corrupt == Some(CorruptTarget::Codebook) {
        table.swap(0, 255);
    }
    vec![
        CheckResult {
            name: "codebook-bijection",
            outcome: check_codebook_bijection(&table),
        },
        CheckResult {
            name: "best-case-64",
            outcome: check_best_case_64(),
        },
        CheckResult {
            name: "worst-case-67",
            outcome: check_worst_case_67(),
        },
        CheckResult {
            name: "random-roundtrip",
            outcome: check_random_roundtrip(1_000),
        },
    ]
}

/// Every table entry must encode back to its position and its 8-bit code
/// must be the concatenation of its four 2-bit base codes.
pub fn check_codebook_bijection(table: &[Fragment]) -> Result<String, String> {
    if table.len() != 256 {
        return Err(format!("table has {} entries, expected 256", table.len()));
    }
    for (index, fragment) in table.iter().enumerate() {
        if fragment.index() as usize != index {
            return Err(format!(
                "code {index} decodes to a fragment that encodes back to {}",
                fragment.index()
            ));
        }
        let concatenated: String = fragment
            .bases()
            .iter()
            .flat_map(|base| base.code_bits())
            .map(|bit| if bit { '1' } else { '0' })
            .collect();
        if concatenated != format!("{index:08b}") {
            return Err(format!(
                "code {index} is not the concatenation of its base codes"
            ));
        }
    }
    Ok("256/256".into())
}

fn check_best_case_64() -> Result<String, String> {
    // 64 bases: 8 adjacent pairs of identical fragments.
    let mut bases = Vec::with_capacity(64);
    for code in 0..8u8 {
        let fragment = Fragment::from_code(code);
        bases.extend_from_slice(&fragment.bases());
        bases.extend_from_slice(&fragment.bases());
    }
    let stats = metrics::measure(&NucleotideSequence::new(bases)).map_err(|e| e.to_string())?;
    if stats.total_bits != 72 {
        return Err(format!("expected 72 bits, measured {}", stats.total_bits));
    }
    if stats.rate != 1.125 {
        return Err(format!("expected rate 1.125, measured {}", stats.rate));
    }
    Ok(format!("{}", stats.rate))
}

fn check_worst_case_67() -> Result<String, String> {
    let config = BenchConfig {
        length: 67,
        repeat_density: 0.0,
        seed: 1,
        trials: 1,
    };
    let sequence = bench::generate_synthetic(&config).map_err(|e| e.to_string())?;
    let stats = metrics::measure(&sequence).map_err(|e| e.to_string())?;
    if stats.upsilon != 0 {
        return Err(format!("expected no collapsed pairs, measured {}", stats.upsilon));
    }
    if stats.total_bits != 150 {
        return Err(format!("expected 150 bits, measured {}", stats.total_bits));
    }
    if (stats.rate - 2.2388).abs() > 0.0005 {
        return Err(format!("expected rate near 2.2388, measured {:.4}", stats.rate));
    }
    Ok(format!("{:.4}", stats.rate))
}

fn check_random_roundtrip(cases: usize) -> Result<String, String> {
    let densities = [0.0, 0.25, 0.5, 1.0];
    let mut rng = SplitMix64::new(0x5EED);
    for case in 0..cases {
        let config = BenchConfig {
            length: (rng.next_u64() % 1_001) as usize,
            repeat_density: densities[case % densities.len()],
            seed: case as u64,
            trials: 1,
        };
        let sequence = bench::generate_synthetic(&config).map_err(|e| e.to_string())?;
        let stream = codec::encode(&sequence);
        let decoded = codec::decode(&stream, sequence.len()).map_err(|e| e.to_string())?;
        if decoded != sequence {
            return Err(format!("codec round trip failed for case {case}"));
        }
        let bytes = container::write_container(sequence.len() as u64, &stream);
        let (n, read_back) = container::read_container(&bytes).map_err(|e| e.to_string())?;
        if n as usize != sequence.len() || read_back != stream {
            return Err(format!("container round trip failed for case {case}"));
        }
    }
    Ok(format!("{cases}/{cases}"))
}
