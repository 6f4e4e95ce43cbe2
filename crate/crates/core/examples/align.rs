// Global and local alignment with a custom scoring scheme.
//
//     cargo run --example align

use seqsim::align::{needleman_wunsch, smith_waterman, ScoringScheme};
use seqsim::DnaSequence;

pub fn run_example() -> seqsim::Result<(String, String)> {
    let a = DnaSequence::from_text("human", "ATGGTGCACCTGACTCCTGAGGAG")?;
    let b = DnaSequence::from_text("mouse", "ATGGTGCACCTGACTGATGCTGAG")?;
    let scheme = ScoringScheme::new(2, -1, -2)?;
    let global = needleman_wunsch(&a, &b, &scheme)?;
    let local = smith_waterman(&a, &b, &scheme)?;
    Ok((global.to_text(a.id(), b.id()), local.to_text(a.id(), b.id())))
}

#[allow(dead_code)]
fn main() -> seqsim::Result<()> {
    let (global, local) = run_example()?;
    print!("{global}\n{local}");
    Ok(())
}
