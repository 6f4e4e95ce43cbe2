// D-curve of a short sequence: step table, descriptor and an SVG plot.
//
//     cargo run --example dcurve -- dcurve.svg

use seqsim::dcurve::{curve_to_csv, curve_to_svg, dcurve, dcurve_descriptor, dcurve_pcc, DinucleotideCoordMap};
use seqsim::DnaSequence;

pub fn run_example() -> seqsim::Result<(String, [f64; 3], f64, String)> {
    let map = DinucleotideCoordMap::standard();
    let x = DnaSequence::from_text("x", "ATGGTGCACC")?;
    let y = DnaSequence::from_text("y", "ATGGTGCACCTGACTCCTGA")?;
    let cx = dcurve(&x, &map)?;
    let cy = dcurve(&y, &map)?;
    let pcc = dcurve_pcc(&cx, &cy)?;
    Ok((
        curve_to_csv(&cx),
        dcurve_descriptor(&cx)?,
        pcc,
        curve_to_svg(&cy, y.id()),
    ))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (table, descriptor, pcc, svg) = run_example()?;
    print!("{table}");
    println!("descriptor {descriptor:?}");
    println!("curve correlation x~y {pcc:.4}");
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg)?;
        println!("wrote {path}");
    }
    Ok(())
}
