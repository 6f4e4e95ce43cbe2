//! DNA/RNA sequence model: the four-letter alphabet, validated sequences,
//! dinucleotide extraction and transcription.
//!
//! FASTA ingestion lives in [`fasta`], codon translation in [`translation`].

pub mod fasta;
pub mod translation;

use std::fmt;

use crate::error::{Error, Result};

/// A DNA base. The discriminant is the row/column index used by every
/// 4×4 structure in this crate (A, C, G, T order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Base {
    A = 0,
    C = 1,
    G = 2,
    T = 3,
}

impl Base {
    pub const ALL: [Base; 4] = [Base::A, Base::C, Base::G, Base::T];

    /// Accepts upper- or lowercase `ACGT`.
    pub fn from_ascii(byte: u8) -> Option<Base> {
        match byte.to_ascii_uppercase() {
            b'A' => Some(Base::A),
            b'C' => Some(Base::C),
            b'G' => Some(Base::G),
            b'T' => Some(Base::T),
            _ => None,
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An RNA base; `U` takes the place of `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum RnaBase {
    A = 0,
    C = 1,
    G = 2,
    U = 3,
}

impl RnaBase {
    pub const ALL: [RnaBase; 4] = [RnaBase::A, RnaBase::C, RnaBase::G, RnaBase::U];

    pub fn from_ascii(byte: u8) -> Option<RnaBase> {
        match byte.to_ascii_uppercase() {
            b'A' => Some(RnaBase::A),
            b'C' => Some(RnaBase::C),
            b'G' => Some(RnaBase::G),
            b'U' => Some(RnaBase::U),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            RnaBase::A => 'A',
            RnaBase::C => 'C',
            RnaBase::G => 'G',
            RnaBase::U => 'U',
        }
    }
}

/// An identified DNA sequence over `{A,C,G,T}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DnaSequence {
    id: String,
    residues: Vec<Base>,
}

impl DnaSequence {
    pub fn new(id: impl Into<String>, residues: Vec<Base>) -> Self {
        DnaSequence {
            id: id.into(),
            residues,
        }
    }

    /// Parses a residue string; lowercase is canonicalized. `U` and ambiguity
    /// codes are rejected.
    pub fn from_text(id: impl Into<String>, text: &str) -> Result<Self> {
        let id = id.into();
        let mut residues = Vec::with_capacity(text.len());
        for (offset, ch) in text.chars().enumerate() {
            let base = u8::try_from(ch)
                .ok()
                .and_then(Base::from_ascii)
                .ok_or_else(|| Error::InvalidResidue {
                    id: id.clone(),
                    residue: ch,
                    line: 1,
                    column: offset + 1,
                    position: offset + 1,
                })?;
            residues.push(base);
        }
        Ok(DnaSequence { id, residues })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn residues(&self) -> &[Base] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// The same sequence read back to front.
    pub fn reversed(&self) -> DnaSequence {
        let mut residues = self.residues.clone();
        residues.reverse();
        DnaSequence::new(self.id.clone(), residues)
    }

    pub fn count(&self, base: Base) -> usize {
        self.residues.iter().filter(|&&b| b == base).count()
    }

    /// The `n - 1` overlapping adjacent pairs, empty when `n <= 1`.
    pub fn dinucleotides(&self) -> Vec<Dinucleotide> {
        self.residues.windows(2).map(|w| Dinucleotide(w[0], w[1])).collect()
    }

    pub fn transcribe(&self) -> RnaSequence {
        let residues = self
            .residues
            .iter()
            .map(|b| match b {
                Base::A => RnaBase::A,
                Base::C => RnaBase::C,
                Base::G => RnaBase::G,
                Base::T => RnaBase::U,
            })
            .collect();
        RnaSequence {
            id: self.id.clone(),
            residues,
        }
    }
}

impl fmt::Display for DnaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.residues {
            write!(f, "{}", b.as_char())?;
        }
        Ok(())
    }
}

/// An ordered pair of adjacent bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dinucleotide(pub Base, pub Base);

impl Dinucleotide {
    /// All 16 dinucleotides in row-major A, C, G, T order.
    pub fn all() -> impl Iterator<Item = Dinucleotide> {
        Base::ALL
            .into_iter()
            .flat_map(|x| Base::ALL.into_iter().map(move |y| Dinucleotide(x, y)))
    }
}

impl fmt::Display for Dinucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RnaSequence {
    id: String,
    residues: Vec<RnaBase>,
}

impl RnaSequence {
    pub fn new(id: impl Into<String>, residues: Vec<RnaBase>) -> Self {
        RnaSequence {
            id: id.into(),
            residues,
        }
    }

    pub fn from_text(id: impl Into<String>, text: &str) -> Result<Self> {
        let id = id.into();
        let mut residues = Vec::with_capacity(text.len());
        for (offset, ch) in text.chars().enumerate() {
            let base = u8::try_from(ch)
                .ok()
                .and_then(RnaBase::from_ascii)
                .ok_or_else(|| Error::InvalidResidue {
                    id: id.clone(),
                    residue: ch,
                    line: 1,
                    column: offset + 1,
                    position: offset + 1,
                })?;
            residues.push(base);
        }
        Ok(RnaSequence { id, residues })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn residues(&self) -> &[RnaBase] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    /// Inverse of [`DnaSequence::transcribe`] (`U` back to `T`).
    pub fn reverse_transcribe(&self) -> DnaSequence {
        let residues = self
            .residues
            .iter()
            .map(|b| match b {
                RnaBase::A => Base::A,
                RnaBase::C => Base::C,
                RnaBase::G => Base::G,
                RnaBase::U => Base::T,
            })
            .collect();
        DnaSequence::new(self.id.clone(), residues)
    }
}

impl fmt::Display for RnaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.residues {
            write!(f, "{}", b.as_char())?;
        }
        Ok(())
    }
}
