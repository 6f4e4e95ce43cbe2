// Transcribe a gene to mRNA and translate it in all three reading frames.
//
//     cargo run --example translate

use seqsim::seq::translation::{translate, CodonTable, ReadingFrame};
use seqsim::DnaSequence;

pub fn run_example() -> seqsim::Result<Vec<String>> {
    let gene = DnaSequence::from_text("beta-globin-start", "ATGGTGCACCTGACTCCTGAGGAGAAGTCTGCCGTTACTGCCTGA")?;
    let mrna = gene.transcribe();
    let table = CodonTable::standard();
    let mut lines = vec![format!("mRNA {mrna}")];
    for frame in [ReadingFrame::Zero, ReadingFrame::One, ReadingFrame::Two] {
        let t = translate(&mrna, frame, &table);
        lines.push(format!(
            "frame {} {} stops at {:?}, {} leftover",
            frame.offset(),
            t.to_one_letter(),
            t.stop_positions,
            t.leftover
        ));
    }
    Ok(lines)
}

#[allow(dead_code)]
fn main() -> seqsim::Result<()> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
