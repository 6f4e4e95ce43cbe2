// Weighted digraph matrix for ACGTATC and the three descriptor distances.
//
//     cargo run --example digraph

use seqsim::digraph::{adjacency_matrix, d1, d2, d3, flatten, matrix_to_csv, total_weight, WeightParams};
use seqsim::DnaSequence;

pub fn run_example() -> seqsim::Result<(String, f64, f64, [f64; 3])> {
    let params = WeightParams::new(0.5)?;
    let x = DnaSequence::from_text("x", "ACGTATC")?;
    let y = DnaSequence::from_text("y", "ACGTTATCCA")?;
    let mx = adjacency_matrix(&x, &params);
    let rx = flatten(&mx);
    let ry = flatten(&adjacency_matrix(&y, &params));
    Ok((
        matrix_to_csv(&mx),
        mx.total(),
        total_weight(x.len(), params.alpha()),
        [d1(&rx, &ry), d2(&rx, &ry)?, d3(&rx, &ry)?],
    ))
}

#[allow(dead_code)]
fn main() -> seqsim::Result<()> {
    let (csv, total, expected, d) = run_example()?;
    print!("{csv}");
    println!("total weight {total:.4} (closed form {expected:.4})");
    println!("d1 {:.4}  d2 {:.4}  d3 {:.4}", d[0], d[1], d[2]);
    Ok(())
}
