//! The fragment codebook: the four-letter base alphabet, the per-base 2-bit
//! codes, and the 256-entry mapping between 4-base fragments and 8-bit code
//! values.
//!
//! The alphabet is ordered `a, g, c, t`. A base's position in that order is
//! its digit, and its 2-bit code is the digit rendered most significant bit
//! first (a=00, g=01, c=10, t=11). A fragment's code value is the base-4
//! number formed by its four digits, most significant digit first, so `aaaa`
//! is code 0, `tttt` is code 255, and a fragment's 8-bit code is exactly the
//! concatenation of its four base codes.

use std::fmt;

use crate::error::GenBitError;

/// One nucleotide. The discriminant is the base's digit in the `agct`
/// alphabet order, which is also the value of its 2-bit tail code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Base {
    A = 0,
    G = 1,
    C = 2,
    T = 3,
}

impl Base {
    /// All four bases in alphabet order.
    pub const ALL: [Base; 4] = [Base::A, Base::G, Base::C, Base::T];

    /// Position of this base in the `agct` alphabet order.
    #[inline]
    pub const fn digit(self) -> u8 {
        self as u8
    }

    /// The 2-bit code, most significant bit first.
    #[inline]
    pub const fn code_bits(self) -> [bool; 2] {
        let digit = self as u8;
        [digit & 0b10 != 0, digit & 0b01 != 0]
    }

    /// Inverse of [`Base::digit`]; `None` for values above 3.
    pub const fn from_digit(digit: u8) -> Option<Base> {
        match digit {
            0 => Some(Base::A),
            1 => Some(Base::G),
            2 => Some(Base::C),
            3 => Some(Base::T),
            _ => None,
        }
    }

    /// Parses a lowercase base letter. Case folding happens at ingestion, so
    /// anything but `a`, `c`, `g`, `t` is rejected here.
    pub const fn from_char(c: char) -> Option<Base> {
        match c {
            'a' => Some(Base::A),
            'g' => Some(Base::G),
            'c' => Some(Base::C),
            't' => Some(Base::T),
            _ => None,
        }
    }

    pub const fn to_char(self) -> char {
        match self {
            Base::A => 'a',
            Base::G => 'g',
            Base::C => 'c',
            Base::T => 't',
        }
    }
}

/// Total mapping from a 2-bit value to a base; the decoder's tail path.
#[inline]
pub(crate) const fn base_from_two_bits(bits: u8) -> Base {
    match bits & 0b11 {
        0 => Base::A,
        1 => Base::G,
        2 => Base::C,
        _ => Base::T,
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Exactly four bases; the unit the encoder assigns an 8-bit code to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fragment([Base; 4]);

impl Fragment {
    pub const fn new(bases: [Base; 4]) -> Self {
        Fragment(bases)
    }

    pub const fn bases(self) -> [Base; 4] {
        self.0
    }

    /// The fragment's 8-bit code value: its four digits read as a base-4
    /// number, most significant digit first.
    #[inline]
    pub fn index(self) -> u8 {
        self.0
            .iter()
            .fold(0u8, |acc, base| (acc << 2) | base.digit())
    }

    /// Total inverse of [`Fragment::index`] over the 8-bit code space.
    #[inline]
    pub const fn from_code(code: u8) -> Fragment {
        Fragment([
            base_from_two_bits(code >> 6),
            base_from_two_bits(code >> 4),
            base_from_two_bits(code >> 2),
            base_from_two_bits(code),
        ])
    }

    /// Checked inverse of [`Fragment::index`]; rejects indexes above 255.
    pub fn from_index(index: usize) -> Result<Fragment, GenBitError> {
        u8::try_from(index)
            .map(Fragment::from_code)
            .map_err(|_| GenBitError::IndexOutOfRange(index))
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for base in self.0 {
            write!(f, "{base}")?;
        }
        Ok(())
    }
}
