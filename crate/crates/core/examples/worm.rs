// Worm curve: 2-bit encoding, dark spots on the grid and covariance descriptor.
//
//     cargo run --example worm -- worm.svg

use seqsim::worm::{covariance_descriptor, descriptor_distance, encode_binary, spot_set, spots_to_svg, GridWidth};
use seqsim::DnaSequence;

pub fn run_example() -> seqsim::Result<(String, usize, [f64; 4], f64, String)> {
    let a = DnaSequence::from_text("a", "ATGGTGGGA")?;
    let b = DnaSequence::from_text("b", "ATGGTGCACCTGACT")?;
    let bits = encode_binary(&a);
    let sa = spot_set(&bits, GridWidth::Auto);
    let sb = spot_set(&encode_binary(&b), GridWidth::fixed(6)?);
    let da = covariance_descriptor(&sa)?;
    let db = covariance_descriptor(&sb)?;
    Ok((
        bits.to_string(),
        sa.len(),
        da.d,
        descriptor_distance(&da, &db),
        spots_to_svg(&sb, true),
    ))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (bits, spots, d, dist, svg) = run_example()?;
    println!("bits {bits}");
    println!("{spots} dark spots, descriptor {d:?}");
    println!("distance to b {dist:.4}");
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg)?;
        println!("wrote {path}");
    }
    Ok(())
}
