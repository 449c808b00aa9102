//! Token streams up close: encoding, bit layout, and decoding.
//!
//! ```bash
//! cargo run -p genbit --example encode_roundtrip
//! ```

use genbit::{decode, encode, fragmentize, NucleotideSequence};

fn main() -> Result<(), genbit::GenBitError> {
    for text in ["aaaaaaaa", "acgtatgc", "agctaaaatt", "acgtacgtacgt"] {
        let sequence = NucleotideSequence::from_text(text)?;
        let view = fragmentize(&sequence);
        let stream = encode(&sequence);

        let fragments: Vec<String> = view.fragments.iter().map(|f| f.to_string()).collect();
        let tail: String = view.tail.iter().map(|b| b.to_char()).collect();
        println!("{text}");
        println!("  fragments {fragments:?} tail {tail:?}");
        println!("  {} bits: {}", stream.bit_len(), stream.to_bit_string());

        let decoded = decode(&stream, sequence.len())?;
        assert_eq!(decoded, sequence);
        println!("  decoded back: {decoded}");
    }

    // A repeat flag collapses exactly one adjacent duplicate, so a run of
    // three identical fragments costs two tokens.
    let run = NucleotideSequence::from_text("aaaaaaaaaaaa")?;
    println!("three identical fragments -> {}", encode(&run).to_bit_string());
    Ok(())
}
