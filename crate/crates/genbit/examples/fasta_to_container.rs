//! FASTA ingestion, normalization policies, and GBC1 container files.
//!
//! ```bash
//! cargo run -p genbit --example fasta_to_container
//! ```

use genbit::{
    decode, encode, normalize, parse_fasta, read_container, write_container, Base,
    NormalizationPolicy,
};

const FASTA: &str = "\
>chr_a demo record
ACGTACGTAGCT
AAAATT
>chr_b second record
TTTTACGT
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let records = parse_fasta(FASTA)?;
    println!("parsed {} records", records.len());

    let dir = std::env::temp_dir();
    for record in &records {
        let sequence = normalize(&record.sequence_text, NormalizationPolicy::Strict)?;
        let bytes = write_container(sequence.len() as u64, &encode(&sequence));

        let path = dir.join(format!("{}.gbc", record.id));
        std::fs::write(&path, &bytes)?;
        println!(
            "{} ({}): {} bases -> {} bytes at {}",
            record.id,
            record.description,
            sequence.len(),
            bytes.len(),
            path.display()
        );

        let (n, stream) = read_container(&std::fs::read(&path)?)?;
        let decoded = decode(&stream, n as usize)?;
        assert_eq!(decoded, sequence);
        println!("  round-tripped: {decoded}");
        std::fs::remove_file(&path)?;
    }

    // Ambiguity handling: strict rejects, skip drops, substitute replaces.
    let messy = "ACGNNTACGT";
    println!("\nnormalizing {messy:?}:");
    println!("  strict     -> {}", normalize(messy, NormalizationPolicy::Strict).unwrap_err());
    println!("  skip       -> {}", normalize(messy, NormalizationPolicy::Skip)?);
    println!(
        "  substitute -> {}",
        normalize(messy, NormalizationPolicy::Substitute(Base::A))?
    );
    Ok(())
}
