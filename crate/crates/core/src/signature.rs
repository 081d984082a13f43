//! Sign vectors in `{±1}^m`.
//!
//! A signature plays every indexing role at once: it is an `h` signature, a
//! `g` signature, an `h∘g` signature, and — under the binary encoding
//! `+1 ↦ 0`, `−1 ↦ 1` with entry 1 as the most significant bit — a row or
//! column index of the isomorphic matrix algebra `F(2^m)`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of Witt pairs. `EfbIndex` packs into 32 bits and
/// dense structures of side `2^m` stay addressable.
pub const MAX_DIMENSION: u8 = 16;

pub(crate) fn validate_m(m: u8) -> Result<()> {
    if m == 0 || m > MAX_DIMENSION {
        Err(Error::DimensionOutOfRange(m as usize))
    } else {
        Ok(())
    }
}

/// An element of `{±1}^m`, bit-packed.
///
/// Bit `m − i` of `bits` is set iff entry `i` (1-based) equals `−1`, so the
/// packed value is exactly the row/column index of the matrix encoding.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    m: u8,
    bits: u32,
}

impl Signature {
    /// All entries `+1`.
    pub fn all_plus(m: u8) -> Result<Self> {
        validate_m(m)?;
        Ok(Signature { m, bits: 0 })
    }

    /// All entries `−1` (the distinguished signature `ē`).
    pub fn all_minus(m: u8) -> Result<Self> {
        validate_m(m)?;
        Ok(Signature {
            m,
            bits: (1u32 << m) - 1,
        })
    }

    pub fn from_bits(m: u8, bits: u32) -> Result<Self> {
        validate_m(m)?;
        if bits >> m != 0 {
            return Err(Error::SignatureOutOfRange { bits, m });
        }
        Ok(Signature { m, bits })
    }

    /// Builds from explicit `±1` entries, entry 1 first.
    pub fn from_entries(entries: &[i8]) -> Result<Self> {
        if entries.is_empty() || entries.len() > MAX_DIMENSION as usize {
            return Err(Error::DimensionOutOfRange(entries.len()));
        }
        let m = entries.len() as u8;
        let mut bits = 0u32;
        for (k, &e) in entries.iter().enumerate() {
            match e {
                1 => {}
                -1 => bits |= 1 << (m as usize - 1 - k),
                other => return Err(Error::BadSignatureEntry(other)),
            }
        }
        Ok(Signature { m, bits })
    }

    /// The binary row/column index of this signature.
    pub fn from_index(m: u8, index: usize) -> Result<Self> {
        let bits =
            u32::try_from(index).map_err(|_| Error::SignatureOutOfRange { bits: u32::MAX, m })?;
        Signature::from_bits(m, bits)
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Row/column index under the binary encoding.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Entry `i` (1-based) as `+1` or `−1`.
    pub fn entry(&self, i: usize) -> i8 {
        assert!(i >= 1 && i <= self.m as usize, "entry index out of range");
        if (self.bits >> (self.m as usize - i)) & 1 == 1 {
            -1
        } else {
            1
        }
    }

    /// Product of all entries: `ε(x) ∈ {±1}`.
    pub fn epsilon(&self) -> i8 {
        if self.bits.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Entrywise negation. Satisfies `ε(−x) = (−1)^m ε(x)`.
    pub fn negated(&self) -> Self {
        Signature {
            m: self.m,
            bits: self.bits ^ ((1u32 << self.m) - 1),
        }
    }

    /// Hadamard (entrywise) product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch(self.m, other.m));
        }
        Ok(Signature {
            m: self.m,
            bits: self.bits ^ other.bits,
        })
    }

    /// Flips entry `i` (1-based).
    pub fn flipped(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.m as usize, "entry index out of range");
        Signature {
            m: self.m,
            bits: self.bits ^ (1 << (self.m as usize - i)),
        }
    }

    pub fn is_all_plus(&self) -> bool {
        self.bits == 0
    }

    pub fn is_all_minus(&self) -> bool {
        self.bits == (1u32 << self.m) - 1
    }

    /// All `2^m` signatures in index order.
    pub fn all(m: u8) -> Result<impl Iterator<Item = Signature>> {
        validate_m(m)?;
        Ok((0u32..1 << m).map(move |bits| Signature { m, bits }))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.m as usize {
            write!(f, "{}", if self.entry(i) == 1 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({self})")
    }
}
