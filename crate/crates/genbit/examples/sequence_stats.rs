//! Measurements and the closed-form bit count.
//!
//! ```bash
//! cargo run -p genbit --example sequence_stats
//! ```

use genbit::{count_collapsed_pairs, measure, theoretical_total_bits, NucleotideSequence};

fn main() -> Result<(), genbit::GenBitError> {
    println!(
        "{:<14} {:>3} {:>3} {:>7} {:>5} {:>7}",
        "sequence", "n", "tau", "upsilon", "bits", "rate"
    );
    for text in ["aaaaaaaa", "acgtatgc", "t", "agctaaaatt", "acgtacgtacgt"] {
        let sequence = NucleotideSequence::from_text(text)?;
        let stats = measure(&sequence)?;
        println!(
            "{:<14} {:>3} {:>3} {:>7} {:>5} {:>7.4}",
            text, stats.n, stats.tau, stats.upsilon, stats.total_bits, stats.rate
        );

        // measure() already asserts this identity; show it explicitly.
        let formula = theoretical_total_bits(
            stats.n,
            stats.n % 4,
            count_collapsed_pairs(&sequence),
        )?;
        assert_eq!(stats.total_bits, formula);
    }

    println!("\nclosed form spot checks:");
    println!("  n=64 tau=0 upsilon=8 -> {} bits", theoretical_total_bits(64, 0, 8)?);
    println!("  n=67 tau=3 upsilon=0 -> {} bits", theoretical_total_bits(67, 3, 0)?);
    println!("  n=66 tau=2 upsilon=4 -> {} bits", theoretical_total_bits(66, 2, 4)?);
    Ok(())
}
