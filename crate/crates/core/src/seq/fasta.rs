//! FASTA reading and writing.
//!
//! Records start with `>`; the identifier is the first whitespace-delimited
//! token of the header. Sequence lines are trimmed and concatenated, and
//! lowercase residues are folded to uppercase.

use std::io::{BufRead, Write};

use super::{Base, DnaSequence};
use crate::error::{Error, Result};

/// Residues written per line by [`write_fasta`].
pub const LINE_WIDTH: usize = 60;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FastaOptions {
    /// Drop IUPAC ambiguity codes (`N`, `R`, `Y`, ...) instead of failing.
    pub strip_ambiguous: bool,
}

fn is_ambiguity_code(byte: u8) -> bool {
    matches!(
        byte.to_ascii_uppercase(),
        b'N' | b'R' | b'Y' | b'K' | b'M' | b'S' | b'W' | b'B' | b'D' | b'H' | b'V'
    )
}

pub fn parse_fasta<R: BufRead>(reader: R) -> Result<Vec<DnaSequence>> {
    parse_fasta_with(reader, FastaOptions::default())
}

pub fn parse_fasta_str(text: &str) -> Result<Vec<DnaSequence>> {
    parse_fasta(text.as_bytes())
}

pub fn parse_fasta_with<R: BufRead>(reader: R, options: FastaOptions) -> Result<Vec<DnaSequence>> {
    let mut records = Vec::new();
    let mut current: Option<(String, Vec<Base>)> = None;

    let finish = |record: Option<(String, Vec<Base>)>, out: &mut Vec<DnaSequence>| -> Result<()> {
        if let Some((id, residues)) = record {
            if residues.is_empty() {
                return Err(Error::EmptyRecord { id });
            }
            out.push(DnaSequence::new(id, residues));
        }
        Ok(())
    };

    for (line_idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = line_idx + 1;
        let leading = line.len() - line.trim_start().len();
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(header) = trimmed.strip_prefix('>') {
            finish(current.take(), &mut records)?;
            let id = header.split_whitespace().next().unwrap_or("").to_string();
            current = Some((id, Vec::new()));
            continue;
        }
        let Some((id, residues)) = current.as_mut() else {
            return Err(Error::MissingHeader { line: line_no });
        };
        for (offset, ch) in trimmed.char_indices() {
            let base = u8::try_from(ch).ok().and_then(Base::from_ascii);
            match base {
                Some(b) => residues.push(b),
                None if options.strip_ambiguous && u8::try_from(ch).map(is_ambiguity_code).unwrap_or(false) => {}
                None => {
                    return Err(Error::InvalidResidue {
                        id: id.clone(),
                        residue: ch,
                        line: line_no,
                        column: leading + trimmed[..offset].chars().count() + 1,
                        position: residues.len() + 1,
                    })
                }
            }
        }
    }
    finish(current, &mut records)?;
    Ok(records)
}

/// Writes `>id` followed by the residues wrapped at [`LINE_WIDTH`] columns.
pub fn write_fasta<W: Write>(mut out: W, records: &[DnaSequence]) -> std::io::Result<()> {
    for record in records {
        writeln!(out, ">{}", record.id())?;
        for chunk in record.residues().chunks(LINE_WIDTH) {
            let line: String = chunk.iter().map(|b| b.as_char()).collect();
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimal_record() {
        let recs = parse_fasta_str(">x\nACGT").unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].id(), "x");
        assert_eq!(recs[0].to_string(), "ACGT");
    }

    #[test]
    fn joins_lines_and_folds_case() {
        let recs = parse_fasta_str(">a\nAC\nGT\n>b\ntttt").unwrap();
        let got: Vec<(&str, String)> = recs.iter().map(|r| (r.id(), r.to_string())).collect();
        assert_eq!(got, [("a", "ACGT".to_string()), ("b", "TTTT".to_string())]);
    }

    #[test]
    fn header_keeps_first_token_only() {
        let recs = parse_fasta_str(">seq1 some description\n  ACGT  \n\n").unwrap();
        assert_eq!(recs[0].id(), "seq1");
        assert_eq!(recs[0].to_string(), "ACGT");
    }

    #[test]
    fn invalid_residue_reports_location() {
        let err = parse_fasta_str(">x\nACGN").unwrap_err();
        match err {
            Error::InvalidResidue {
                id,
                residue,
                line,
                column,
                position,
            } => {
                assert_eq!(id, "x");
                assert_eq!(residue, 'N');
                assert_eq!((line, column, position), (2, 4, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn position_counts_across_lines() {
        let err = parse_fasta_str(">x\nACGT\n  AXG").unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidResidue {
                line: 3,
                column: 4,
                position: 6,
                residue: 'X',
                ..
            }
        ));
    }

    #[test]
    fn sequence_before_header() {
        let err = parse_fasta_str("ACGT\n>x\nAC").unwrap_err();
        assert!(matches!(err, Error::MissingHeader { line: 1 }));
    }

    #[test]
    fn empty_record() {
        let err = parse_fasta_str(">x\n>y\nAC").unwrap_err();
        assert!(matches!(err, Error::EmptyRecord { ref id } if id == "x"));
        let err = parse_fasta_str(">x\nAC\n>y\n").unwrap_err();
        assert!(matches!(err, Error::EmptyRecord { ref id } if id == "y"));
    }

    #[test]
    fn strip_ambiguous_drops_codes() {
        let opts = FastaOptions { strip_ambiguous: true };
        let recs = parse_fasta_with(">x\nACNNGTry".as_bytes(), opts).unwrap();
        assert_eq!(recs[0].to_string(), "ACGT");
        // U is never an ambiguity code
        assert!(parse_fasta_with(">x\nACU".as_bytes(), opts).is_err());
    }

    #[test]
    fn writes_sixty_columns() {
        let seq = DnaSequence::new("long", vec![Base::G; 130]);
        let mut buf = Vec::new();
        write_fasta(&mut buf, &[seq]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], ">long");
        assert_eq!(lines[1].len(), 60);
        assert_eq!(lines[2].len(), 60);
        assert_eq!(lines[3].len(), 10);
    }

    proptest! {
        #[test]
        fn round_trip(recs in proptest::collection::vec(
            ("[A-Za-z0-9_.]{1,12}", proptest::collection::vec(0u8..4, 1..200)), 1..6)
        ) {
            let records: Vec<DnaSequence> = recs
                .into_iter()
                .map(|(id, v)| DnaSequence::new(id, v.into_iter().map(|i| Base::ALL[i as usize]).collect()))
                .collect();
            let mut buf = Vec::new();
            write_fasta(&mut buf, &records).unwrap();
            let back = parse_fasta(buf.as_slice()).unwrap();
            prop_assert_eq!(back, records);
        }
    }
}
