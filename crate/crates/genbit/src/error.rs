use std::fmt;
use std::io;

/// Errors produced by the codec, the container format, ingestion, and the
/// analytics layer.
///
/// `Display` output always starts with the error's name (for example
/// `CorruptStream: ...`), so diagnostics printed by the CLI identify the
/// failure class unambiguously.
#[derive(Debug)]
pub enum GenBitError {
    /// A character outside {a, c, g, t} under the strict policy.
    InvalidBase { ch: char, offset: usize },
    /// Malformed FASTA input.
    Parse { line: usize, reason: String },
    /// A fragment index outside 0..=255.
    IndexOutOfRange(usize),
    /// A bit stream that violates the token grammar or the padding rules.
    CorruptStream(String),
    /// A container that does not start with the `GBC1` magic.
    BadMagic([u8; 4]),
    /// A container version this build does not understand.
    UnsupportedVersion(u8),
    /// A container that ends before the payload its header promises.
    TruncatedFile(String),
    /// A bit count that does not fit its byte buffer.
    Framing(String),
    /// A compression rate requested for an empty sequence.
    UndefinedRate,
    /// A benchmark corpus with no entries.
    EmptyCorpus,
    /// An argument that violates a stated precondition.
    Precondition(String),
    /// An underlying I/O failure.
    Io(io::Error),
}

impl fmt::Display for GenBitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenBitError::InvalidBase { ch, offset } => {
                write!(f, "InvalidBase: {ch:?} at offset {offset}")
            }
            GenBitError::Parse { line, reason } => write!(f, "ParseError: line {line}: {reason}"),
            GenBitError::IndexOutOfRange(index) => {
                write!(f, "IndexOutOfRange: fragment index {index} is not in 0..=255")
            }
            GenBitError::CorruptStream(reason) => write!(f, "CorruptStream: {reason}"),
            GenBitError::BadMagic(found) => {
                write!(f, "BadMagic: expected \"GBC1\", found {found:02x?}")
            }
            GenBitError::UnsupportedVersion(version) => {
                write!(f, "UnsupportedVersion: version {version} (this build reads version 1)")
            }
            GenBitError::TruncatedFile(reason) => write!(f, "TruncatedFile: {reason}"),
            GenBitError::Framing(reason) => write!(f, "FramingError: {reason}"),
            GenBitError::UndefinedRate => {
                write!(f, "UndefinedRate: rate is undefined for an empty sequence")
            }
            GenBitError::EmptyCorpus => write!(f, "EmptyCorpus: no sequences to measure"),
            GenBitError::Precondition(reason) => write!(f, "PreconditionViolated: {reason}"),
            GenBitError::Io(err) => write!(f, "IoError: {err}"),
        }
    }
}

impl std::error::Error for GenBitError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            GenBitError::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for GenBitError {
    fn from(err: io::Error) -> Self {
        GenBitError::Io(err)
    }
}
