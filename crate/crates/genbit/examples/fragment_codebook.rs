//! The base alphabet, its 2-bit codes, and the 256-entry fragment table.
//!
//! ```bash
//! cargo run -p genbit --example fragment_codebook
//! ```

use genbit::{Base, Fragment};

fn bits(code: [bool; 2]) -> String {
    code.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn main() -> Result<(), genbit::GenBitError> {
    println!("base codes (alphabet order a, g, c, t):");
    for base in Base::ALL {
        println!("  {base} -> {}", bits(base.code_bits()));
    }

    println!("\nfirst and last fragment codes:");
    for index in (0..4).chain(252..256) {
        let fragment = Fragment::from_index(index)?;
        println!("  {index:>3} = {index:08b} -> {fragment}");
    }

    println!("\nselected fragments:");
    for text in ["aaaa", "agct", "acgt", "tttt"] {
        let sequence = genbit::NucleotideSequence::from_text(text)?;
        let fragment = genbit::fragmentize(&sequence).fragments[0];
        println!("  {fragment} -> code {:>3} = {:08b}", fragment.index(), fragment.index());
    }

    // The mapping is a bijection: every code value round-trips.
    assert!((0..256).all(|i| Fragment::from_index(i).unwrap().index() as usize == i));
    println!("\nall 256 codes round-trip");
    Ok(())
}
