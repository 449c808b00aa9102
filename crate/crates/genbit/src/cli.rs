//! Command-line interface: `encode`, `decode`, `stats`, `bench`, `selftest`.
//!
//! `-` stands for standard input or output on every subcommand, so the tool
//! composes in pipelines. Exit codes: 0 on success, 1 on data or I/O errors,
//! 2 on usage errors.

use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchConfig, CorpusEntry};
use crate::codec;
use crate::container;
use crate::error::GenBitError;
use crate::ingest::{self, FastaRecord, NormalizationPolicy};
use crate::metrics::{self, CompressionStats};
use crate::selftest::{self, CorruptTarget};

#[derive(Parser)]
#[command(
    name = "genbit",
    version,
    about = "Lossless DNA sequence compression with 4-base fragment codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    /// FASTA records; headerless input falls back to one raw record.
    Fasta,
    /// The whole input is one sequence.
    Raw,
}

#[derive(Subcommand)]
enum Command {
    /// Compress sequence text into GBC1 containers, one per record.
    Encode {
        /// Input path, or - for standard input.
        input: String,
        /// Output path, or - for standard output. Multi-record input writes
        /// numbered files derived from this path.
        output: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Fasta)]
        format: TextFormat,
        /// strict, skip, or substitute=<base>.
        #[arg(long, default_value = "strict")]
        policy: NormalizationPolicy,
    },
    /// Decompress a GBC1 container back into sequence text.
    Decode {
        /// Input path, or - for standard input.
        input: String,
        /// Output path, or - for standard output.
        output: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Raw)]
        format: TextFormat,
        /// Header id used with --format fasta.
        #[arg(long, default_value = "decoded")]
        id: String,
    },
    /// Measure sequences without writing any container.
    Stats {
        /// Input path, or - for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Fasta)]
        format: TextFormat,
        /// Emit one JSON object per record instead of text lines.
        #[arg(long)]
        json: bool,
    },
    /// Generate seeded synthetic sequences and report their rates.
    Bench {
        /// Base count of each generated sequence.
        #[arg(long)]
        length: usize,
        /// Probability that a fragment repeats its predecessor, in [0, 1].
        #[arg(long, default_value_t = 0.0, value_parser = parse_density)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of sequences; trial i uses seed + i.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in consistency checks.
    Selftest {
        #[arg(long, hide = true)]
        corrupt: Option<CorruptTarget>,
    },
}

fn parse_density(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(format!("density must lie in [0, 1]; got {value}"))
    }
}

/// Parses the command line and dispatches; the binary's whole main.
pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => err.exit(),
    };
    let outcome = match cli.command {
        Command::Encode {
            input,
            output,
            format,
            policy,
        } => cmd_encode(&input, &output, format, policy),
        Command::Decode {
            input,
            output,
            format,
            id,
        } => cmd_decode(&input, &output, format, &id),
        Command::Stats {
            input,
            format,
            json,
        } => cmd_stats(&input, format, json),
        Command::Bench {
            length,
            density,
            seed,
            trials,
            json,
        } => cmd_bench(length, density, seed, trials as usize, json),
        Command::Selftest { corrupt } => return cmd_selftest(corrupt),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn read_bytes(path: &str) -> Result<Vec<u8>, GenBitError> {
    if path == "-" {
        let mut bytes = Vec::new();
        std::io::stdin().lock().read_to_end(&mut bytes)?;
        Ok(bytes)
    } else {
        Ok(std::fs::read(path)?)
    }
}

fn read_text(path: &str) -> Result<String, GenBitError> {
    String::from_utf8(read_bytes(path)?)
        .map_err(|_| GenBitError::Precondition("input is not valid UTF-8 text".into()))
}

fn write_bytes(path: &str, bytes: &[u8]) -> Result<(), GenBitError> {
    if path == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(bytes)?;
        stdout.flush()?;
        Ok(())
    } else {
        Ok(std::fs::write(path, bytes)?)
    }
}

fn records_from(text: &str, format: TextFormat) -> Result<Vec<FastaRecord>, GenBitError> {
    match format {
        TextFormat::Fasta => ingest::parse_fasta(text),
        TextFormat::Raw => Ok(vec![FastaRecord {
            id: String::new(),
            description: String::new(),
            sequence_text: text.to_string(),
        }]),
    }
}

fn stats_core_line(id: &str, stats: &CompressionStats) -> String {
    let core = format!(
        "n={} tau={} upsilon={} bits={} rate={:.4}",
        stats.n, stats.tau, stats.upsilon, stats.total_bits, stats.rate
    );
    if id.is_empty() {
        core
    } else {
        format!("id={id} {core}")
    }
}

/// Output path for record `index`; multi-record runs number every file.
fn numbered_output(path: &str, index: usize, total: usize) -> String {
    if total == 1 {
        return path.to_string();
    }
    let p = Path::new(path);
    match p.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{}.{index}.{ext}", p.with_extension("").display()),
        None => format!("{path}.{index}"),
    }
}

fn cmd_encode(
    input: &str,
    output: &str,
    format: TextFormat,
    policy: NormalizationPolicy,
) -> Result<(), GenBitError> {
    let text = read_text(input)?;
    let records = records_from(&text, format)?;
    if records.is_empty() {
        return Err(GenBitError::Precondition(
            "input contains no sequence data".into(),
        ));
    }
    if records.len() > 1 && output == "-" {
        return Err(GenBitError::Precondition(
            "multiple records cannot share standard output; use an output file".into(),
        ));
    }
    for (index, record) in records.iter().enumerate() {
        let sequence = ingest::normalize(&record.sequence_text, policy)?;
        let stats = metrics::measure(&sequence)?;
        let stream = codec::encode(&sequence);
        let bytes = container::write_container(sequence.len() as u64, &stream);
        write_bytes(&numbered_output(output, index, records.len()), &bytes)?;
        eprintln!("{}", stats_core_line(&record.id, &stats));
    }
    Ok(())
}

fn cmd_decode(
    input: &str,
    output: &str,
    format: TextFormat,
    id: &str,
) -> Result<(), GenBitError> {
    let bytes = read_bytes(input)?;
    let (n, stream) = container::read_container(&bytes)?;
    let n = usize::try_from(n).map_err(|_| {
        GenBitError::CorruptStream(format!("base count {n} exceeds addressable memory"))
    })?;
    let sequence = codec::decode(&stream, n)?;
    let rendered = match format {
        TextFormat::Raw => sequence.to_text().into_bytes(),
        TextFormat::Fasta => {
            let mut text = format!(">{id}\n");
            let body = sequence.to_text();
            for chunk in body.as_bytes().chunks(70) {
                text.push_str(std::str::from_utf8(chunk).expect("sequence text is ascii"));
                text.push('\n');
            }
            text.into_bytes()
        }
    };
    write_bytes(output, &rendered)
}

fn cmd_stats(input: &str, format: TextFormat, json: bool) -> Result<(), GenBitError> {
    let text = read_text(input)?;
    let records = records_from(&text, format)?;
    if records.is_empty() {
        return Err(GenBitError::Precondition(
            "input contains no sequence data".into(),
        ));
    }
    for record in &records {
        let sequence = ingest::normalize(&record.sequence_text, NormalizationPolicy::Strict)?;
        let stats = metrics::measure(&sequence)?;
        let envelope = bench::scenario_envelope(stats.n)?;
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "id": record.id,
                    "n": stats.n,
                    "tau": stats.tau,
                    "upsilon": stats.upsilon,
                    "bits": stats.total_bits,
                    "rate": stats.rate,
                    "best_rate": envelope.best_rate,
                    "worst_rate": envelope.worst_rate,
                })
            );
        } else {
            let mut line = stats_core_line(&record.id, &stats);
            if let Some(best) = envelope.best_rate {
                line.push_str(&format!(" best={best:.4}"));
            }
            line.push_str(&format!(" worst={:.4}", envelope.worst_rate));
            println!("{line}");
        }
    }
    Ok(())
}

fn cmd_bench(
    length: usize,
    density: f64,
    seed: u64,
    trials: usize,
    json: bool,
) -> Result<(), GenBitError> {
    let base = BenchConfig {
        length,
        repeat_density: density,
        seed,
        trials,
    };
    base.validate()?;
    let mut entries = Vec::with_capacity(trials);
    for trial in 0..trials {
        let config = BenchConfig {
            seed: seed + trial as u64,
            ..base
        };
        entries.push(CorpusEntry {
            name: format!("trial-{trial}"),
            sequence: bench::generate_synthetic(&config)?,
        });
    }
    let report = bench::run_corpus(&entries)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_table());
    }
    Ok(())
}

fn cmd_selftest(corrupt: Option<CorruptTarget>) -> ExitCode {
    let mut all_ok = true;
    for check in selftest::run(corrupt) {
        match &check.outcome {
            Ok(detail) => println!("{} = {} ... ok", check.name, detail),
            Err(reason) => {
                all_ok = false;
                println!("{} ... FAILED: {reason}", check.name);
            }
        }
    }
    if all_ok {
        println!("all checks passed");
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
