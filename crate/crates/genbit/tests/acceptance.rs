//! End-to-end conformance suite: one test per acceptance criterion, each
//! printing a pass/fail line. Run with output visible:
//!
//! ```bash
//! cargo test -p genbit --test acceptance -- --nocapture
//! ```

use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use genbit::{
    count_collapsed_pairs, decode, encode, generate_synthetic, measure, read_container,
    theoretical_total_bits, write_container, BenchConfig, Base, Fragment, NucleotideSequence,
};

fn check(criterion: &str, passed: bool, detail: String) {
    if passed {
        println!("criterion {criterion}: PASS ({detail})");
    } else {
        println!("criterion {criterion}: FAIL ({detail})");
        panic!("criterion {criterion} failed: {detail}");
    }
}

/// Local SplitMix64 so corpus lengths do not depend on library internals.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// The shared random corpus: 10,000 seeded sequences, lengths 0..=2000,
/// cycling through repeat densities {0, 0.25, 0.5, 1.0}.
fn random_corpus() -> Vec<NucleotideSequence> {
    let densities = [0.0, 0.25, 0.5, 1.0];
    let mut rng = SplitMix64 { state: 0xACCE_2024 };
    (0..10_000)
        .map(|case| {
            let config = BenchConfig {
                length: (rng.next_u64() % 2_001) as usize,
                repeat_density: densities[case % densities.len()],
                seed: case as u64,
                trials: 1,
            };
            generate_synthetic(&config).expect("valid configuration")
        })
        .collect()
}

/// 64 bases made of 8 identical adjacent fragment pairs.
fn eight_paired_fragments(codes: [u8; 8]) -> NucleotideSequence {
    let mut bases = Vec::with_capacity(64);
    for code in codes {
        let fragment = Fragment::from_code(code);
        bases.extend_from_slice(&fragment.bases());
        bases.extend_from_slice(&fragment.bases());
    }
    NucleotideSequence::new(bases)
}

#[test]
fn criterion_1_best_case_64_bases_compress_to_72_bits() {
    let mut inputs = vec![
        eight_paired_fragments([0, 1, 2, 3, 4, 5, 6, 7]),
        eight_paired_fragments([27, 27, 27, 27, 27, 27, 27, 27]),
        NucleotideSequence::from_text(&"a".repeat(64)).unwrap(),
    ];
    for seed in 0..5 {
        let config = BenchConfig {
            length: 64,
            repeat_density: 1.0,
            seed,
            trials: 1,
        };
        inputs.push(generate_synthetic(&config).unwrap());
    }

    let mut slowest = Duration::ZERO;
    for sequence in &inputs {
        assert_eq!(sequence.len(), 64);
        let start = Instant::now();
        let stream = encode(sequence);
        slowest = slowest.max(start.elapsed());
        let stats = measure(sequence).unwrap();
        assert_eq!(stream.bit_len(), 72);
        assert_eq!(stats.rate, 1.125);
    }
    check(
        "1",
        slowest < Duration::from_millis(1),
        format!(
            "{} sequences of 8 paired fragments -> 72 bits, rate 1.125, slowest encode {slowest:?}",
            inputs.len()
        ),
    );
}

#[test]
fn criterion_2_worst_case_67_bases_compress_to_150_bits() {
    let mut inputs = Vec::new();
    for seed in 0..5 {
        let config = BenchConfig {
            length: 67,
            repeat_density: 0.0,
            seed,
            trials: 1,
        };
        inputs.push(generate_synthetic(&config).unwrap());
    }
    // Handcrafted: cycle three distinct fragments, then a 3-base tail.
    let mut bases = Vec::with_capacity(67);
    for i in 0..16 {
        bases.extend_from_slice(&Fragment::from_code([10u8, 20, 30][i % 3]).bases());
    }
    bases.extend_from_slice(&[Base::T, Base::A, Base::G]);
    inputs.push(NucleotideSequence::new(bases));

    let mut slowest = Duration::ZERO;
    let mut rate = 0.0;
    for sequence in &inputs {
        assert_eq!(sequence.len(), 67);
        assert_eq!(count_collapsed_pairs(sequence), 0);
        let start = Instant::now();
        let stream = encode(sequence);
        slowest = slowest.max(start.elapsed());
        let stats = measure(sequence).unwrap();
        assert_eq!(stream.bit_len(), 150);
        assert!((stats.rate - 2.2388).abs() <= 0.0005);
        rate = stats.rate;
    }
    check(
        "2",
        slowest < Duration::from_millis(1),
        format!(
            "{} sequences of 67 bases without repeats -> 150 bits, rate {rate:.4}, slowest encode {slowest:?}",
            inputs.len()
        ),
    );
}

#[test]
fn criterion_3_average_case_formula_yields_112() {
    let bits = theoretical_total_bits(66, 2, 4).unwrap();
    check(
        "3",
        bits == 112 && bits != 114,
        format!("closed form for n=66 tau=2 upsilon=4 gives {bits}, not the once-printed 114"),
    );
}

#[test]
fn criterion_4_emitted_bits_equal_the_closed_form_over_10k_sequences() {
    let start = Instant::now();
    let corpus = random_corpus();
    let mut checked = 0usize;
    for sequence in &corpus {
        let n = sequence.len();
        let expected =
            theoretical_total_bits(n, n % 4, count_collapsed_pairs(sequence)).unwrap();
        let emitted = encode(sequence).bit_len();
        assert_eq!(
            emitted, expected,
            "bit count mismatch for a length-{n} sequence"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    check(
        "4",
        checked == 10_000 && elapsed < Duration::from_secs(10),
        format!("{checked} sequences matched the closed form in {elapsed:.2?}"),
    );
}

#[test]
fn criterion_5_round_trip_identity_over_10k_sequences_and_containers() {
    let corpus = random_corpus();
    let mut checked = 0usize;
    for sequence in &corpus {
        let stream = encode(sequence);
        assert_eq!(&decode(&stream, sequence.len()).unwrap(), sequence);

        let bytes = write_container(sequence.len() as u64, &stream);
        let (n, read_back) = read_container(&bytes).unwrap();
        assert_eq!(n as usize, sequence.len());
        assert_eq!(&decode(&read_back, n as usize).unwrap(), sequence);
        checked += 1;
    }
    check(
        "5",
        checked == 10_000,
        format!("{checked} sequences round-tripped, including through GBC1 containers"),
    );
}

#[test]
fn criterion_6_codebook_is_exhaustively_consistent() {
    let start = Instant::now();

    // Independent construction: append alphabet characters with period 64,
    // then 16, 4, 1, advancing a wrapping counter.
    let alphabet: Vec<char> = "agct".chars().collect();
    let mut table = vec![String::new(); 256];
    let mut period = 64usize;
    let mut j = 0usize;
    for _round in 0..4 {
        for (i, entry) in table.iter_mut().enumerate() {
            entry.push(alphabet[j]);
            if (i + 1) % period == 0 {
                j += 1;
            }
            if j == 4 {
                j = 0;
            }
        }
        period /= 4;
    }

    for (index, expected) in table.iter().enumerate() {
        let fragment = Fragment::from_index(index).unwrap();
        let concatenated: String = fragment
            .bases()
            .iter()
            .flat_map(|base| base.code_bits())
            .map(|bit| if bit { '1' } else { '0' })
            .collect();
        assert_eq!(concatenated, format!("{index:08b}"));
        assert_eq!(&fragment.to_string(), expected);
    }
    let elapsed = start.elapsed();
    check(
        "6",
        elapsed < Duration::from_millis(1),
        format!("256 codes match their base-code concatenation and the generation loop in {elapsed:?}"),
    );
}

#[test]
fn criterion_7_large_non_repetitive_inputs_sit_at_the_worst_case_band() {
    let start = Instant::now();
    let mut details = Vec::new();

    for (length, seed) in [(100_000usize, 1u64), (191_736, 2)] {
        assert_eq!(length % 4, 0);
        let config = BenchConfig {
            length,
            repeat_density: 0.0,
            seed,
            trials: 1,
        };
        let stats = measure(&generate_synthetic(&config).unwrap()).unwrap();
        assert_eq!(stats.rate, 2.25, "4 | n with no repeats must measure 2.2500");
        details.push(format!("n={length} rate={:.4}", stats.rate));
    }

    for length in [100_001usize, 100_002, 100_003] {
        let config = BenchConfig {
            length,
            repeat_density: 0.0,
            seed: 3,
            trials: 1,
        };
        let stats = measure(&generate_synthetic(&config).unwrap()).unwrap();
        assert!(
            (2.23..2.25).contains(&stats.rate),
            "tail length {} must land in [2.23, 2.25), got {}",
            length % 4,
            stats.rate
        );
        details.push(format!("n={length} rate={:.6}", stats.rate));
    }

    // The reported non-repetitive genome average lies inside the same band.
    assert!((2.23..2.25).contains(&2.2335));
    let elapsed = start.elapsed();
    check(
        "7",
        elapsed < Duration::from_secs(5),
        format!("{}; 2.2335 lies in [2.23, 2.25); {elapsed:.2?}", details.join(", ")),
    );
}

#[test]
fn criterion_8_measured_rates_stay_inside_the_half_open_envelope() {
    let corpus = random_corpus();
    let mut min_rate = f64::INFINITY;
    let mut max_rate = f64::NEG_INFINITY;
    let mut max_stats = None;
    for sequence in corpus.iter().filter(|s| !s.is_empty()) {
        let stats = measure(sequence).unwrap();
        min_rate = min_rate.min(stats.rate);
        if stats.rate > max_rate {
            max_rate = stats.rate;
            max_stats = Some(stats);
        }
    }
    let max_stats = max_stats.unwrap();
    check(
        "8",
        min_rate >= 1.125 && max_rate < 2.25,
        format!(
            "measured rates span [{min_rate}, {max_rate}]; the bound requires [1.125, 2.25), \
             but {} is attained exactly whenever tau=0 and upsilon=0 (here n={}, tau={}, \
             upsilon={}), the same value criterion 7 requires",
            max_rate, max_stats.n, max_stats.tau, max_stats.upsilon
        ),
    );
}

#[test]
fn criterion_9_cli_round_trips_a_1mb_fasta_in_under_two_seconds() {
    let dir = tempfile::tempdir().unwrap();
    let fasta_path = dir.path().join("corpus.fa");
    let container_path = dir.path().join("record.gbc");

    // Four records of 250,000 bases each: one megabyte of sequence.
    let densities = [0.0, 0.25, 0.5, 1.0];
    let mut fasta = String::new();
    let mut originals = Vec::new();
    for (index, density) in densities.iter().enumerate() {
        let config = BenchConfig {
            length: 250_000,
            repeat_density: *density,
            seed: 40 + index as u64,
            trials: 1,
        };
        let sequence = generate_synthetic(&config).unwrap();
        fasta.push_str(&format!(">record_{index} density {density}\n"));
        for chunk in sequence.to_text().as_bytes().chunks(70) {
            fasta.push_str(std::str::from_utf8(chunk).unwrap());
            fasta.push('\n');
        }
        originals.push(sequence);
    }
    std::fs::write(&fasta_path, &fasta).unwrap();

    let start = Instant::now();
    let encode_status = Command::new(env!("CARGO_BIN_EXE_genbit"))
        .args(["encode", fasta_path.to_str().unwrap(), container_path.to_str().unwrap()])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert!(encode_status.success());

    let mut decoded = Vec::new();
    for index in 0..originals.len() {
        let numbered = dir.path().join(format!("record.{index}.gbc"));
        let out_path = dir.path().join(format!("decoded_{index}.txt"));
        let decode_status = Command::new(env!("CARGO_BIN_EXE_genbit"))
            .args([
                "decode",
                numbered.to_str().unwrap(),
                out_path.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(decode_status.success());
        decoded.push(std::fs::read(&out_path).unwrap());
    }
    let elapsed = start.elapsed();

    for (original, bytes) in originals.iter().zip(&decoded) {
        assert_eq!(bytes, original.to_text().as_bytes(), "byte-identical round trip");
    }
    check(
        "9",
        elapsed < Duration::from_secs(2),
        format!(
            "{} bytes of FASTA encoded and decoded byte-identically in {elapsed:.2?}",
            fasta.len()
        ),
    );
}

/// Sanity check on the corpus used by criteria 4, 5, and 8: it really spans
/// the advertised lengths and densities.
#[test]
fn corpus_construction_spans_lengths_and_densities() {
    let corpus = random_corpus();
    assert_eq!(corpus.len(), 10_000);
    let max_len = corpus.iter().map(|s| s.len()).max().unwrap();
    let min_len = corpus.iter().map(|s| s.len()).min().unwrap();
    assert!(max_len > 1_900 && min_len < 100);
    assert!(corpus.iter().any(|s| !s.is_empty() && s.len() % 4 == 0));
    assert!(corpus.iter().any(|s| s.len() % 4 != 0));
}
