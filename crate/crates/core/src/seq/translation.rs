//! Codon translation with the standard genetic code.

use std::fmt;

use super::{RnaBase, RnaSequence};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AminoAcid {
    Ala,
    Arg,
    Asn,
    Asp,
    Cys,
    Gln,
    Glu,
    Gly,
    His,
    Ile,
    Leu,
    Lys,
    Met,
    Phe,
    Pro,
    Ser,
    Thr,
    Trp,
    Tyr,
    Val,
}

impl AminoAcid {
    pub const ALL: [AminoAcid; 20] = [
        AminoAcid::Ala,
        AminoAcid::Arg,
        AminoAcid::Asn,
        AminoAcid::Asp,
        AminoAcid::Cys,
        AminoAcid::Gln,
        AminoAcid::Glu,
        AminoAcid::Gly,
        AminoAcid::His,
        AminoAcid::Ile,
        AminoAcid::Leu,
        AminoAcid::Lys,
        AminoAcid::Met,
        AminoAcid::Phe,
        AminoAcid::Pro,
        AminoAcid::Ser,
        AminoAcid::Thr,
        AminoAcid::Trp,
        AminoAcid::Tyr,
        AminoAcid::Val,
    ];

    pub fn one_letter(self) -> char {
        use AminoAcid::*;
        match self {
            Ala => 'A',
            Arg => 'R',
            Asn => 'N',
            Asp => 'D',
            Cys => 'C',
            Gln => 'Q',
            Glu => 'E',
            Gly => 'G',
            His => 'H',
            Ile => 'I',
            Leu => 'L',
            Lys => 'K',
            Met => 'M',
            Phe => 'F',
            Pro => 'P',
            Ser => 'S',
            Thr => 'T',
            Trp => 'W',
            Tyr => 'Y',
            Val => 'V',
        }
    }

    pub fn from_one_letter(c: char) -> Option<AminoAcid> {
        AminoAcid::ALL.into_iter().find(|aa| aa.one_letter() == c)
    }

    pub fn three_letter(self) -> &'static str {
        use AminoAcid::*;
        match self {
            Ala => "Ala",
            Arg => "Arg",
            Asn => "Asn",
            Asp => "Asp",
            Cys => "Cys",
            Gln => "Gln",
            Glu => "Glu",
            Gly => "Gly",
            His => "His",
            Ile => "Ile",
            Leu => "Leu",
            Lys => "Lys",
            Met => "Met",
            Phe => "Phe",
            Pro => "Pro",
            Ser => "Ser",
            Thr => "Thr",
            Trp => "Trp",
            Tyr => "Tyr",
            Val => "Val",
        }
    }
}

impl fmt::Display for AminoAcid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.three_letter())
    }
}

/// What a single codon maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodonProduct {
    Amino(AminoAcid),
    Stop,
}

impl CodonProduct {
    pub fn one_letter(self) -> char {
        match self {
            CodonProduct::Amino(aa) => aa.one_letter(),
            CodonProduct::Stop => '*',
        }
    }
}

impl fmt::Display for CodonProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodonProduct::Amino(aa) => aa.fmt(f),
            CodonProduct::Stop => f.write_str("Stop"),
        }
    }
}

pub type Codon = [RnaBase; 3];

/// Mapping from all 64 RNA triplets to an amino acid or stop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodonTable {
    entries: [CodonProduct; 64],
}

// NCBI translation table 1, codons enumerated with U, C, A, G as the digit order.
const STANDARD_CODE: &[u8; 64] = b"FFLLSSSSYY**CC*WLLLLPPPPHHQQRRRRIIIMTTTTNNKKSSRRVVVVAAAADDEEGGGG";
const NCBI_ORDER: [RnaBase; 4] = [RnaBase::U, RnaBase::C, RnaBase::A, RnaBase::G];

fn codon_index(codon: Codon) -> usize {
    codon.iter().fold(0, |acc, &b| acc * 4 + b as usize)
}

impl CodonTable {
    pub fn standard() -> CodonTable {
        let mut entries = [CodonProduct::Stop; 64];
        for (i, &code) in STANDARD_CODE.iter().enumerate() {
            let codon = [NCBI_ORDER[i / 16], NCBI_ORDER[(i / 4) % 4], NCBI_ORDER[i % 4]];
            entries[codon_index(codon)] = match code {
                b'*' => CodonProduct::Stop,
                c => CodonProduct::Amino(
                    AminoAcid::from_one_letter(c as char).expect("table holds valid one-letter codes"),
                ),
            };
        }
        CodonTable { entries }
    }

    pub fn get(&self, codon: Codon) -> CodonProduct {
        self.entries[codon_index(codon)]
    }

    /// All 64 codons with their products, in A, C, G, U order.
    pub fn entries(&self) -> impl Iterator<Item = (Codon, CodonProduct)> + '_ {
        (0..64).map(move |i| {
            let codon = [RnaBase::ALL[i / 16], RnaBase::ALL[(i / 4) % 4], RnaBase::ALL[i % 4]];
            (codon, self.entries[i])
        })
    }
}

impl Default for CodonTable {
    fn default() -> Self {
        CodonTable::standard()
    }
}

/// Offset of the first codon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReadingFrame {
    #[default]
    Zero,
    One,
    Two,
}

impl ReadingFrame {
    pub fn offset(self) -> usize {
        self as usize
    }
}

impl TryFrom<u8> for ReadingFrame {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        match value {
            0 => Ok(ReadingFrame::Zero),
            1 => Ok(ReadingFrame::One),
            2 => Ok(ReadingFrame::Two),
            v => Err(Error::InvalidParameter(format!(
                "reading frame must be 0, 1 or 2, got {v}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub frame: ReadingFrame,
    /// One entry per complete codon, stops included.
    pub products: Vec<CodonProduct>,
    /// Codon indices (0-based, within `products`) that are stops.
    pub stop_positions: Vec<usize>,
    /// Trailing bases that did not fill a codon.
    pub leftover: usize,
}

impl Translation {
    pub fn amino_acids(&self) -> impl Iterator<Item = AminoAcid> + '_ {
        self.products.iter().filter_map(|p| match p {
            CodonProduct::Amino(aa) => Some(*aa),
            CodonProduct::Stop => None,
        })
    }

    /// One-letter rendering with `*` at stops.
    pub fn to_one_letter(&self) -> String {
        self.products.iter().map(|p| p.one_letter()).collect()
    }
}

/// Reads complete triplets from `frame` onward. Translation continues
/// through stop codons; they are flagged in `stop_positions`.
pub fn translate(rna: &RnaSequence, frame: ReadingFrame, table: &CodonTable) -> Translation {
    let residues = rna.residues();
    let start = frame.offset().min(residues.len());
    let body = &residues[start..];
    let chunks = body.chunks_exact(3);
    let leftover = chunks.remainder().len();
    let products: Vec<CodonProduct> = chunks.map(|c| table.get([c[0], c[1], c[2]])).collect();
    let stop_positions = products
        .iter()
        .enumerate()
        .filter(|(_, p)| **p == CodonProduct::Stop)
        .map(|(i, _)| i)
        .collect();
    Translation {
        frame,
        products,
        stop_positions,
        leftover,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn rna(s: &str) -> RnaSequence {
        RnaSequence::from_text("r", s).unwrap()
    }

    #[test]
    fn table_shape() {
        let table = CodonTable::standard();
        let entries: Vec<_> = table.entries().collect();
        assert_eq!(entries.len(), 64);
        let stops: Vec<String> = entries
            .iter()
            .filter(|(_, p)| *p == CodonProduct::Stop)
            .map(|(c, _)| c.iter().map(|b| b.as_char()).collect())
            .collect();
        assert_eq!(stops, ["UAA", "UAG", "UGA"]);
        let aminos: HashSet<AminoAcid> = entries
            .iter()
            .filter_map(|(_, p)| match p {
                CodonProduct::Amino(aa) => Some(*aa),
                CodonProduct::Stop => None,
            })
            .collect();
        assert_eq!(aminos.len(), 20);
    }

    #[test]
    fn met_phe_stop() {
        let t = translate(&rna("AUGUUUUAA"), ReadingFrame::Zero, &CodonTable::standard());
        assert_eq!(
            t.products,
            [
                CodonProduct::Amino(AminoAcid::Met),
                CodonProduct::Amino(AminoAcid::Phe),
                CodonProduct::Stop
            ]
        );
        assert_eq!(t.stop_positions, [2]);
        assert_eq!(t.leftover, 0);
        assert_eq!(t.to_one_letter(), "MF*");
    }

    #[test]
    fn trp_and_short() {
        let table = CodonTable::standard();
        let t = translate(&rna("UGG"), ReadingFrame::Zero, &table);
        assert_eq!(t.products, [CodonProduct::Amino(AminoAcid::Trp)]);
        let t = translate(&rna("AU"), ReadingFrame::Zero, &table);
        assert!(t.products.is_empty());
        assert_eq!(t.leftover, 2);
    }

    #[test]
    fn frames() {
        let table = CodonTable::standard();
        let t = translate(&rna("GAUGUUU"), ReadingFrame::One, &table);
        assert_eq!(t.to_one_letter(), "MF");
        let t = translate(&rna("A"), ReadingFrame::Two, &table);
        assert!(t.products.is_empty());
        assert_eq!(t.leftover, 0);
        assert!(ReadingFrame::try_from(3).is_err());
    }

    #[test]
    fn codon_count_law() {
        let table = CodonTable::standard();
        for n in 0..20usize {
            let s: String = "ACGU".chars().cycle().take(n).collect();
            for f in 0..3u8 {
                let frame = ReadingFrame::try_from(f).unwrap();
                let t = translate(&rna(&s), frame, &table);
                let emitted = t.amino_acids().count() + t.stop_positions.len();
                assert_eq!(emitted, n.saturating_sub(f as usize) / 3);
            }
        }
    }
}
