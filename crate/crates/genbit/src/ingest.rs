//! FASTA and raw text ingestion with configurable handling of characters
//! outside the {a, c, g, t} alphabet.

use std::str::FromStr;

use crate::codebook::Base;
use crate::codec::NucleotideSequence;
use crate::error::GenBitError;

/// One record of FASTA input, or the whole input when no header is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    /// Token after `>`; empty only for headerless raw input.
    pub id: String,
    /// Remainder of the header line.
    pub description: String,
    /// Body lines concatenated with all whitespace removed.
    pub sequence_text: String,
}

/// What to do with characters outside {a, c, g, t} after case folding.
/// Whitespace and digits never reach the policy; they are always dropped so
/// numbered flat-file sequence blocks paste cleanly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormalizationPolicy {
    /// Reject the input, naming the character and offset.
    #[default]
    Strict,
    /// Drop the character.
    Skip,
    /// Replace the character with a fixed base.
    Substitute(Base),
}

impl FromStr for NormalizationPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(NormalizationPolicy::Strict),
            "skip" => Ok(NormalizationPolicy::Skip),
            _ => match s.strip_prefix("substitute=") {
                Some(rest) => {
                    let mut chars = rest.chars();
                    match (chars.next().and_then(Base::from_char), chars.next()) {
                        (Some(base), None) => Ok(NormalizationPolicy::Substitute(base)),
                        _ => Err(format!(
                            "substitute needs a single base from a, c, g, t; got {rest:?}"
                        )),
                    }
                }
                None => Err(format!(
                    "expected strict, skip, or substitute=<base>; got {s:?}"
                )),
            },
        }
    }
}

/// Parses FASTA text into records, one per `>` header. Input with no header
/// at all is treated as a single raw record with an empty id.
pub fn parse_fasta(text: &str) -> Result<Vec<FastaRecord>, GenBitError> {
    if !text.lines().any(|line| line.starts_with('>')) {
        let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if stripped.is_empty() {
            return Ok(Vec::new());
        }
        return Ok(vec![FastaRecord {
            id: String::new(),
            description: String::new(),
            sequence_text: stripped,
        }]);
    }

    let mut records = Vec::new();
    let mut current: Option<FastaRecord> = None;
    for (index, line) in text.lines().enumerate() {
        let line_number = index + 1;
        if let Some(header) = line.strip_prefix('>') {
            if let Some(record) = current.take() {
                records.push(record);
            }
            let header = header.trim_start();
            let (id, description) = match header.split_once(char::is_whitespace) {
                Some((id, rest)) => (id, rest.trim()),
                None => (header, ""),
            };
            if id.is_empty() {
                return Err(GenBitError::Parse {
                    line: line_number,
                    reason: "header has an empty id".into(),
                });
            }
            current = Some(FastaRecord {
                id: id.to_string(),
                description: description.to_string(),
                sequence_text: String::new(),
            });
        } else if let Some(record) = current.as_mut() {
            record
                .sequence_text
                .extend(line.chars().filter(|c| !c.is_whitespace()));
        } else if !line.trim().is_empty() {
            return Err(GenBitError::Parse {
                line: line_number,
                reason: "sequence data before the first '>' header".into(),
            });
        }
    }
    if let Some(record) = current.take() {
        records.push(record);
    }
    Ok(records)
}

/// Validates text into a sequence: whitespace and digits are dropped,
/// letters are folded to lowercase, bases are kept, and anything else is
/// handled per the policy. Offsets in errors refer to the given text.
pub fn normalize(
    text: &str,
    policy: NormalizationPolicy,
) -> Result<NucleotideSequence, GenBitError> {
    let mut bases = Vec::with_capacity(text.len());
    for (offset, ch) in text.chars().enumerate() {
        if ch.is_whitespace() || ch.is_ascii_digit() {
            continue;
        }
        match Base::from_char(ch.to_ascii_lowercase()) {
            Some(base) => bases.push(base),
            None => match policy {
                NormalizationPolicy::Strict => {
                    return Err(GenBitError::InvalidBase { ch, offset })
                }
                NormalizationPolicy::Skip => {}
                NormalizationPolicy::Substitute(base) => bases.push(base),
            },
        }
    }
    Ok(NucleotideSequence::new(bases))
}
