//! Synthetic corpus generation with controlled repeat density, plus batch
//! measurement and reporting.
//!
//! Sequences are built fragment by fragment from a SplitMix64 stream, so a
//! given configuration produces the same sequence on every run and platform:
//! the state advances by `0x9E3779B97F4A7C15` per draw and each output is
//! mixed with the multipliers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`
//! and shifts 30, 27, 31. Fragment draws take the low 8 bits, tail bases the
//! low 2 bits, and the repeat decision maps the high 53 bits into [0, 1).
//!
//! With probability `repeat_density` a fragment copies its predecessor,
//! except straight after a forced copy; uniform draws resample until they
//! differ from the predecessor. Collapsed pairs therefore come only from
//! forced copies, so `repeat_density` is also the collapsed-pair density,
//! spanning the whole envelope from 2.25 bits per base (density 0, length a
//! multiple of 4) down to 1.125 (density 1, length a multiple of 8).

use serde::Serialize;

use crate::codebook::{base_from_two_bits, Fragment};
use crate::codec::NucleotideSequence;
use crate::error::GenBitError;
use crate::metrics::{self, CompressionStats, Scenario};

/// SplitMix64; see the module docs for the exact constants.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1), from the high 53 bits.
    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Parameters for one synthetic sequence and the trial count of a bench run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchConfig {
    /// Base count of each generated sequence.
    pub length: usize,
    /// Probability that a fragment copies its predecessor, in [0, 1].
    pub repeat_density: f64,
    /// Seed of the generator; trial `i` of a bench run uses `seed + i`.
    pub seed: u64,
    /// Number of sequences a bench run generates.
    pub trials: usize,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), GenBitError> {
        if !(0.0..=1.0).contains(&self.repeat_density) {
            return Err(GenBitError::Precondition(format!(
                "repeat density must lie in [0, 1]; got {}",
                self.repeat_density
            )));
        }
        if self.trials == 0 {
            return Err(GenBitError::Precondition("trials must be at least 1".into()));
        }
        Ok(())
    }
}

/// Generates one sequence; deterministic for a given configuration.
pub fn generate_synthetic(config: &BenchConfig) -> Result<NucleotideSequence, GenBitError> {
    config.validate()?;
    let mut rng = SplitMix64::new(config.seed);
    let fragment_count = config.length / 4;
    let mut fragments: Vec<Fragment> = Vec::with_capacity(fragment_count);
    let mut previous_forced = false;
    for i in 0..fragment_count {
        let force = i > 0 && !previous_forced && rng.next_f64() < config.repeat_density;
        let fragment = if force {
            fragments[i - 1]
        } else {
            let mut draw = Fragment::from_code(rng.next_u64() as u8);
            while i > 0 && draw == fragments[i - 1] {
                draw = Fragment::from_code(rng.next_u64() as u8);
            }
            draw
        };
        previous_forced = force;
        fragments.push(fragment);
    }
    let mut bases: Vec<_> = fragments
        .iter()
        .flat_map(|fragment| fragment.bases())
        .collect();
    for _ in 0..config.length % 4 {
        bases.push(base_from_two_bits(rng.next_u64() as u8));
    }
    Ok(NucleotideSequence::new(bases))
}

/// A named sequence fed into [`run_corpus`].
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub sequence: NucleotideSequence,
}

/// The scenario rates bracketing a measurement at the same base count:
/// the worst case is defined for every length, the best and average cases
/// only where their divisibility preconditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScenarioEnvelope {
    pub n: usize,
    pub worst_rate: f64,
    pub best_rate: Option<f64>,
    pub average_rate: Option<f64>,
}

/// Scenario envelope for a base count `n >= 1`.
pub fn scenario_envelope(n: usize) -> Result<ScenarioEnvelope, GenBitError> {
    Ok(ScenarioEnvelope {
        n,
        worst_rate: metrics::scenario_stats(Scenario::Worst, n)?.rate,
        best_rate: metrics::scenario_stats(Scenario::Best, n).ok().map(|s| s.rate),
        average_rate: metrics::scenario_stats(Scenario::Average, n)
            .ok()
            .map(|s| s.rate),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub stats: CompressionStats,
    pub envelope: ScenarioEnvelope,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub mean_rate: f64,
}

/// Measures every entry and aggregates the arithmetic mean of the rates.
pub fn run_corpus(entries: &[CorpusEntry]) -> Result<BenchReport, GenBitError> {
    if entries.is_empty() {
        return Err(GenBitError::EmptyCorpus);
    }
    let mut rows = Vec::with_capacity(entries.len());
    let mut rate_sum = 0.0;
    for entry in entries {
        let stats = metrics::measure(&entry.sequence)?;
        rate_sum += stats.rate;
        rows.push(BenchRow {
            name: entry.name.clone(),
            stats,
            envelope: scenario_envelope(stats.n)?,
        });
    }
    let mean_rate = rate_sum / rows.len() as f64;
    Ok(BenchReport { rows, mean_rate })
}

impl BenchReport {
    /// Aligned text table, one row per input, followed by the scenario
    /// envelopes and the mean rate.
    pub fn render_table(&self) -> String {
        let name_width = self
            .rows
            .iter()
            .map(|row| row.name.len())
            .chain(["name".len()])
            .max()
            .unwrap_or(4);
        let mut out = String::new();
        out.push_str(&format!(
            "{:<name_width$} {:>10} {:>4} {:>8} {:>10} {:>7}\n",
            "name", "n", "tau", "upsilon", "bits", "rate"
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "{:<name_width$} {:>10} {:>4} {:>8} {:>10} {:>7.4}\n",
                row.name,
                row.stats.n,
                row.stats.tau,
                row.stats.upsilon,
                row.stats.total_bits,
                row.stats.rate
            ));
        }
        let mut seen = Vec::new();
        for row in &self.rows {
            if seen.contains(&row.envelope.n) {
                continue;
            }
            seen.push(row.envelope.n);
            out.push_str(&format!("envelope n={}:", row.envelope.n));
            if let Some(best) = row.envelope.best_rate {
                out.push_str(&format!(" best={best:.4}"));
            }
            if let Some(average) = row.envelope.average_rate {
                out.push_str(&format!(" average={average:.4}"));
            }
            out.push_str(&format!(" worst={:.4}\n", row.envelope.worst_rate));
        }
        out.push_str(&format!("mean rate: {:.4}\n", self.mean_rate));
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::count_collapsed_pairs;

    fn config(length: usize, density: f64, seed: u64) -> BenchConfig {
        BenchConfig {
            length,
            repeat_density: density,
            seed,
            trials: 1,
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_synthetic(&config(4_000, 0.5, 42)).unwrap();
        let b = generate_synthetic(&config(4_000, 0.5, 42)).unwrap();
        assert_eq!(a, b);
        let c = generate_synthetic(&config(4_000, 0.5, 43)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn density_one_forces_one_collapse_per_pair() {
        let sequence = generate_synthetic(&config(8, 1.0, 7)).unwrap();
        assert_eq!(count_collapsed_pairs(&sequence), 1);
        for seed in 0..10 {
            let sequence = generate_synthetic(&config(64, 1.0, seed)).unwrap();
            assert_eq!(count_collapsed_pairs(&sequence), 8);
            assert_eq!(metrics::measure(&sequence).unwrap().rate, 1.125);
        }
    }

    #[test]
    fn density_zero_forbids_adjacent_equality() {
        for seed in 0..10 {
            let sequence = generate_synthetic(&config(4_000, 0.0, seed)).unwrap();
            assert_eq!(count_collapsed_pairs(&sequence), 0);
            assert_eq!(metrics::measure(&sequence).unwrap().rate, 2.25);
        }
    }

    #[test]
    fn invalid_configs_are_rejected() {
        assert!(matches!(
            generate_synthetic(&config(8, 1.5, 0)),
            Err(GenBitError::Precondition(_))
        ));
        assert!(matches!(
            BenchConfig {
                length: 8,
                repeat_density: 0.5,
                seed: 0,
                trials: 0
            }
            .validate(),
            Err(GenBitError::Precondition(_))
        ));
    }

    #[test]
    fn run_corpus_examples() {
        let entry = |name: &str, text: &str| CorpusEntry {
            name: name.into(),
            sequence: NucleotideSequence::from_text(text).unwrap(),
        };

        let report = run_corpus(&[entry("best", "aaaaaaaa")]).unwrap();
        assert_eq!(report.mean_rate, 1.125);
        assert_eq!(report.rows[0].envelope.best_rate, Some(1.125));
        assert_eq!(report.rows[0].envelope.worst_rate, 2.25);

        let twice = run_corpus(&[entry("x", "aaaaaaaa"), entry("y", "aaaaaaaa")]).unwrap();
        assert_eq!(twice.mean_rate, 1.125);

        assert!(matches!(run_corpus(&[]), Err(GenBitError::EmptyCorpus)));
    }

    #[test]
    fn mean_rate_is_non_increasing_in_density() {
        let densities = [0.0, 0.25, 0.5, 0.75, 1.0];
        let mut means = Vec::new();
        for density in densities {
            let entries: Vec<CorpusEntry> = (0..30)
                .map(|trial| CorpusEntry {
                    name: format!("trial-{trial}"),
                    sequence: generate_synthetic(&config(4_000, density, trial)).unwrap(),
                })
                .collect();
            means.push(run_corpus(&entries).unwrap().mean_rate);
        }
        for pair in means.windows(2) {
            assert!(
                pair[1] <= pair[0] + 0.02,
                "mean rates {means:?} must not increase with density"
            );
        }
    }

    #[test]
    fn table_rendering_lists_rows_and_mean() {
        let entries = vec![CorpusEntry {
            name: "only".into(),
            sequence: NucleotideSequence::from_text("aaaaaaaa").unwrap(),
        }];
        let table = run_corpus(&entries).unwrap().render_table();
        assert!(table.contains("name"));
        assert!(table.contains("only"));
        assert!(table.contains("mean rate: 1.1250"));
        assert!(table.contains("envelope n=8: best=1.1250 worst=2.2500"));
    }
}
