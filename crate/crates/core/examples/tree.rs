// NJ and UPGMA on a small additive matrix, with Newick output and parsing.
//
//     cargo run --example tree -- tree.svg

use seqsim::distance::DistanceMatrix;
use seqsim::phylo::{neighbor_joining, upgma, PhyloTree};

pub fn run_example() -> seqsim::Result<(String, String, usize, String)> {
    let labels = ["human", "chimp", "gorilla", "orangutan", "gibbon"]
        .map(String::from)
        .to_vec();
    let rows = vec![
        vec![0.0, 0.2, 0.5, 0.9, 1.2],
        vec![0.2, 0.0, 0.5, 0.9, 1.2],
        vec![0.5, 0.5, 0.0, 0.8, 1.1],
        vec![0.9, 0.9, 0.8, 0.0, 1.1],
        vec![1.2, 1.2, 1.1, 1.1, 0.0],
    ];
    let m = DistanceMatrix::from_rows(labels, rows)?;
    let nj = neighbor_joining(&m)?;
    let up = upgma(&m)?;
    let parsed = PhyloTree::from_newick(&nj.to_newick())?;
    Ok((nj.to_newick(), up.to_newick(), parsed.leaves().len(), up.to_svg()))
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (nj, up, leaves, svg) = run_example()?;
    println!("nj    {nj}");
    println!("upgma {up}");
    println!("parsed back {leaves} leaves");
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg)?;
        println!("wrote {path}");
    }
    Ok(())
}
