// Windowed dot plot of two related sequences, printed as text.
//
//     cargo run --example dotplot -- plot.pbm

use seqsim::align::dot_matrix;
use seqsim::DnaSequence;

pub fn run_example() -> seqsim::Result<(Vec<String>, String)> {
    let a = DnaSequence::from_text("a", "ACGTTGCAACGTAGGCTAGC")?;
    let b = DnaSequence::from_text("b", "ACGTTGCATTTTAGGCTAGC")?;
    let m = dot_matrix(&a, &b, 3, 3)?;
    let rows = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| if m.get(r, c) { '*' } else { '.' }).collect())
        .collect();
    Ok((rows, m.to_pbm()))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (rows, pbm) = run_example()?;
    for row in rows {
        println!("{row}");
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, pbm)?;
        println!("wrote {path}");
    }
    Ok(())
}
