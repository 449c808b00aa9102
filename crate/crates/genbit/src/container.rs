//! The GBC1 container: bit-exact on-disk framing of an encoded stream.
//!
//! Layout, offsets in bytes:
//!
//! ```text
//! 0   4  magic "GBC1"
//! 4   1  format version, currently 0x01
//! 5   8  base count n, big-endian unsigned
//! 13  ..  payload bits packed MSB-first, zero-padded to a byte boundary
//! ```
//!
//! The payload's bit length is not stored: together with `n`, the token
//! grammar determines it exactly, so the reader re-derives it and rejects
//! containers whose byte count disagrees. Padding bits that round the
//! payload up to a whole byte must be zero.

use crate::codec::{self, StreamIssue, TokenStream};
use crate::error::GenBitError;

pub const MAGIC: [u8; 4] = *b"GBC1";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 13;

/// Packs a bit sequence MSB-first into bytes, zero-padding the final
/// partial byte on the right.
pub fn pack_bits(stream: &TokenStream) -> Vec<u8> {
    stream.as_bytes().to_vec()
}

/// Inverse of [`pack_bits`] for the first `bit_count` bits.
///
/// The byte buffer must be exactly `bit_count.div_ceil(8)` bytes long
/// (`FramingError` otherwise) and the padding bits must be zero
/// (`CorruptStream` otherwise).
pub fn unpack_bits(bytes: &[u8], bit_count: usize) -> Result<TokenStream, GenBitError> {
    if bit_count > bytes.len() * 8 {
        return Err(GenBitError::Framing(format!(
            "{bit_count} bits do not fit in {} bytes",
            bytes.len()
        )));
    }
    if !bytes.is_empty() && bit_count <= (bytes.len() - 1) * 8 {
        return Err(GenBitError::Framing(format!(
            "{bit_count} bits leave whole trailing bytes in a {}-byte buffer",
            bytes.len()
        )));
    }
    if bit_count % 8 != 0 {
        let padding = bytes[bytes.len() - 1] & (0xFF >> (bit_count % 8));
        if padding != 0 {
            return Err(GenBitError::CorruptStream(
                "padding bits after the payload are nonzero".into(),
            ));
        }
    }
    Ok(TokenStream::from_raw_parts(bytes.to_vec(), bit_count))
}

/// Frames an encoded stream: magic, version, base count, packed payload.
pub fn write_container(n: u64, stream: &TokenStream) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(HEADER_LEN + stream.as_bytes().len());
    bytes.extend_from_slice(&MAGIC);
    bytes.push(VERSION);
    bytes.extend_from_slice(&n.to_be_bytes());
    bytes.extend_from_slice(&pack_bits(stream));
    bytes
}

/// Validates the header, re-derives the payload bit length from the token
/// grammar, and returns the declared base count with the exact bit sequence.
pub fn read_container(bytes: &[u8]) -> Result<(u64, TokenStream), GenBitError> {
    if bytes.len() < 4 {
        return Err(GenBitError::TruncatedFile(format!(
            "{} bytes is shorter than the 4-byte magic",
            bytes.len()
        )));
    }
    if bytes[..4] != MAGIC {
        return Err(GenBitError::BadMagic([bytes[0], bytes[1], bytes[2], bytes[3]]));
    }
    if bytes.len() < HEADER_LEN {
        return Err(GenBitError::TruncatedFile(format!(
            "header needs {HEADER_LEN} bytes, found {}",
            bytes.len()
        )));
    }
    if bytes[4] != VERSION {
        return Err(GenBitError::UnsupportedVersion(bytes[4]));
    }
    let n = u64::from_be_bytes(bytes[5..HEADER_LEN].try_into().expect("8 header bytes"));
    let payload = &bytes[HEADER_LEN..];

    let full = TokenStream::from_raw_parts(payload.to_vec(), payload.len() * 8);
    let bit_len = codec::payload_bit_len(&full, n).map_err(|issue| match issue {
        StreamIssue::Exhausted => GenBitError::TruncatedFile(format!(
            "payload ends before the token stream for {n} bases is complete"
        )),
        StreamIssue::Overshoot => GenBitError::CorruptStream(
            "repeat flag would overshoot the fragment region".into(),
        ),
    })?;
    let expected_bytes = bit_len.div_ceil(8);
    if payload.len() > expected_bytes {
        return Err(GenBitError::CorruptStream(format!(
            "{} payload bytes, but the token stream needs only {expected_bytes}",
            payload.len()
        )));
    }
    let stream = unpack_bits(payload, bit_len)?;
    Ok((n, stream))
}
