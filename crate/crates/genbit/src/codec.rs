//! Encoding and decoding between nucleotide sequences and token bit streams.
//!
//! A sequence of `n` bases is split into consecutive 4-base fragments plus a
//! tail of `n mod 4` leftover bases. Each emitted token is 9 bits: the
//! fragment's 8-bit code, most significant bit first, followed by a repeat
//! flag. Flag 1 means the fragment stands for itself and the identical
//! fragment right after it, so the decoder emits it twice. The encoder scans
//! left to right and a collapse never chains, so a run of identical
//! fragments is consumed two at a time. After the tokens, each tail base is
//! written as one 2-bit code.

use std::fmt;

use crate::codebook::{base_from_two_bits, Base, Fragment};
use crate::error::GenBitError;

/// A validated run of bases over {a, c, g, t}; the codec's domain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NucleotideSequence {
    bases: Vec<Base>,
}

impl NucleotideSequence {
    pub fn new(bases: Vec<Base>) -> Self {
        NucleotideSequence { bases }
    }

    /// Parses text containing only base letters, folding ASCII case. Use
    /// [`crate::ingest::normalize`] for input that may carry whitespace,
    /// digits, or ambiguity characters.
    pub fn from_text(text: &str) -> Result<Self, GenBitError> {
        let mut bases = Vec::with_capacity(text.len());
        for (offset, ch) in text.chars().enumerate() {
            match Base::from_char(ch.to_ascii_lowercase()) {
                Some(base) => bases.push(base),
                None => return Err(GenBitError::InvalidBase { ch, offset }),
            }
        }
        Ok(NucleotideSequence { bases })
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn bases(&self) -> &[Base] {
        &self.bases
    }

    /// Number of tail bases left after fragmentation: `len() mod 4`.
    pub fn tail_len(&self) -> usize {
        self.bases.len() % 4
    }

    pub fn to_text(&self) -> String {
        self.bases.iter().map(|b| b.to_char()).collect()
    }
}

impl fmt::Display for NucleotideSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for base in &self.bases {
            write!(f, "{base}")?;
        }
        Ok(())
    }
}

/// A sequence split into whole fragments plus the leftover tail bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentView {
    pub fragments: Vec<Fragment>,
    pub tail: Vec<Base>,
}

/// An ordered bit sequence: zero or more 9-bit tokens followed by the 2-bit
/// tail codes. Bits are stored packed, most significant bit of each byte
/// first, and padding bits past `bit_len` are always zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenStream {
    bytes: Vec<u8>,
    bit_len: usize,
}

impl TokenStream {
    pub fn new() -> Self {
        TokenStream::default()
    }

    pub fn bit_len(&self) -> usize {
        self.bit_len
    }

    pub fn is_empty(&self) -> bool {
        self.bit_len == 0
    }

    pub fn push_bit(&mut self, bit: bool) {
        if self.bit_len % 8 == 0 {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[self.bit_len / 8] |= 0x80 >> (self.bit_len % 8);
        }
        self.bit_len += 1;
    }

    /// Appends the low `width` bits of `value`, most significant bit first.
    pub fn push_code(&mut self, value: u8, width: usize) {
        debug_assert!(width <= 8);
        for shift in (0..width).rev() {
            self.push_bit(value >> shift & 1 == 1);
        }
    }

    pub fn bit(&self, index: usize) -> Option<bool> {
        (index < self.bit_len).then(|| self.bytes[index / 8] & (0x80 >> (index % 8)) != 0)
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.bit_len).map(|i| self.bit(i).unwrap())
    }

    /// The packed bytes, most significant bit first; the final partial byte,
    /// if any, is zero-padded on the right.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn to_bit_string(&self) -> String {
        self.iter_bits().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// Parses a string of `0` and `1` characters.
    pub fn from_bit_str(text: &str) -> Result<Self, GenBitError> {
        let mut stream = TokenStream::new();
        for ch in text.chars() {
            match ch {
                '0' => stream.push_bit(false),
                '1' => stream.push_bit(true),
                _ => {
                    return Err(GenBitError::Precondition(format!(
                        "bit strings may contain only 0 and 1, found {ch:?}"
                    )))
                }
            }
        }
        Ok(stream)
    }

    /// Caller guarantees `bytes.len() == bit_len.div_ceil(8)` and that bits
    /// past `bit_len` are zero.
    pub(crate) fn from_raw_parts(bytes: Vec<u8>, bit_len: usize) -> Self {
        debug_assert_eq!(bytes.len(), bit_len.div_ceil(8));
        TokenStream { bytes, bit_len }
    }
}

impl fmt::Display for TokenStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

/// Splits a sequence into consecutive non-overlapping 4-base fragments from
/// the left; the `n mod 4` leftover bases become the tail.
pub fn fragmentize(sequence: &NucleotideSequence) -> FragmentView {
    let bases = sequence.bases();
    let split = bases.len() - bases.len() % 4;
    let fragments = bases[..split]
        .chunks_exact(4)
        .map(|c| Fragment::new([c[0], c[1], c[2], c[3]]))
        .collect();
    FragmentView {
        fragments,
        tail: bases[split..].to_vec(),
    }
}

/// Greedy left-to-right pairing: each output entry is one emitted token, the
/// flag saying whether the identical following fragment was consumed with it.
pub(crate) fn pair_tokens(fragments: &[Fragment]) -> Vec<(Fragment, bool)> {
    let mut tokens = Vec::with_capacity(fragments.len());
    let mut i = 0;
    while i < fragments.len() {
        let fragment = fragments[i];
        let collapsed = fragments.get(i + 1) == Some(&fragment);
        tokens.push((fragment, collapsed));
        i += if collapsed { 2 } else { 1 };
    }
    tokens
}

/// Encodes a sequence into its token stream: 9-bit tokens for the fragment
/// region, then one 2-bit code per tail base.
pub fn encode(sequence: &NucleotideSequence) -> TokenStream {
    let view = fragmentize(sequence);
    let mut stream = TokenStream::new();
    for (fragment, collapsed) in pair_tokens(&view.fragments) {
        stream.push_code(fragment.index(), 8);
        stream.push_bit(collapsed);
    }
    for base in &view.tail {
        stream.push_code(base.digit(), 2);
    }
    stream
}

/// Number of flag-1 tokens the encoder emits for this sequence; each one
/// collapses one adjacent pair of identical fragments.
pub fn count_collapsed_pairs(sequence: &NucleotideSequence) -> usize {
    pair_tokens(&fragmentize(sequence).fragments)
        .iter()
        .filter(|(_, collapsed)| *collapsed)
        .count()
}

/// Grammar walk outcome used by both the decoder and the container reader,
/// which map it to different error classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum StreamIssue {
    /// The stream ran out of bits before the grammar was satisfied.
    Exhausted,
    /// A flag-1 token would emit bases past the fragment region.
    Overshoot,
}

/// Walks the token grammar for a sequence of `n` bases and returns the exact
/// payload length in bits: 9 per token plus 2 per tail base.
pub(crate) fn payload_bit_len(stream: &TokenStream, n: u64) -> Result<usize, StreamIssue> {
    let target = n - n % 4;
    let tail_bits = (n % 4) as usize * 2;
    let mut produced = 0u64;
    let mut pos = 0usize;
    while produced < target {
        if stream.bit_len() - pos < 9 {
            return Err(StreamIssue::Exhausted);
        }
        let flag = stream.bit(pos + 8).unwrap();
        pos += 9;
        produced += if flag { 8 } else { 4 };
        if produced > target {
            return Err(StreamIssue::Overshoot);
        }
    }
    if stream.bit_len() - pos < tail_bits {
        return Err(StreamIssue::Exhausted);
    }
    Ok(pos + tail_bits)
}

struct BitCursor<'a> {
    stream: &'a TokenStream,
    pos: usize,
}

impl<'a> BitCursor<'a> {
    fn new(stream: &'a TokenStream) -> Self {
        BitCursor { stream, pos: 0 }
    }

    fn read_bit(&mut self) -> bool {
        let bit = self.stream.bit(self.pos).expect("validated payload");
        self.pos += 1;
        bit
    }

    fn read_code(&mut self, width: usize) -> u8 {
        let mut value = 0u8;
        for _ in 0..width {
            value = value << 1 | self.read_bit() as u8;
        }
        value
    }
}

/// Decodes a token stream back into the sequence of `n` bases it encodes.
///
/// Fails with `CorruptStream` when the bits run out before `n` bases are
/// produced, when a flag-1 token would overshoot the fragment region, or
/// when bits past the payload are nonzero (trailing zeros are accepted as
/// padding). `decode(&encode(s), s.len())` returns `s` for every valid `s`.
pub fn decode(stream: &TokenStream, n: usize) -> Result<NucleotideSequence, GenBitError> {
    let payload = payload_bit_len(stream, n as u64).map_err(|issue| match issue {
        StreamIssue::Exhausted => GenBitError::CorruptStream(format!(
            "bit stream ended before {n} bases were produced"
        )),
        StreamIssue::Overshoot => GenBitError::CorruptStream(
            "repeat flag would overshoot the fragment region".into(),
        ),
    })?;
    for index in payload..stream.bit_len() {
        if stream.bit(index) == Some(true) {
            return Err(GenBitError::CorruptStream(format!(
                "nonzero bit at {index}, beyond the {payload}-bit payload"
            )));
        }
    }

    let fragment_bases = n - n % 4;
    let mut bases = Vec::with_capacity(n);
    let mut cursor = BitCursor::new(stream);
    while bases.len() < fragment_bases {
        let fragment = Fragment::from_code(cursor.read_code(8));
        let repeat = cursor.read_bit();
        bases.extend_from_slice(&fragment.bases());
        if repeat {
            bases.extend_from_slice(&fragment.bases());
        }
    }
    for _ in 0..n % 4 {
        bases.push(base_from_two_bits(cursor.read_code(2)));
    }
    Ok(NucleotideSequence::new(bases))
}
