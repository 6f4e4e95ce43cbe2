// Distance matrices for every method/metric pair over a small family of sequences.
//
//     cargo run --example distmat

use seqsim::distance::{distance_matrix, DistanceOptions, Method, MethodParams};
use seqsim::parse_fasta_str;

const FASTA: &str = "\
>alpha
ATGGTGCACCTGACTCCTGAGGAGAAGTCTGCCGTTACTGCC
>beta
ATGGTGCACCTGACTCCTGAGGAGAAGTCTGCGGTTACTGCC
>gamma
ATGGTGCATCTGTCCAGTGAGGAGAAGACTGCCGTCAATGCC
>delta
ATGGTTCACTTGACTGATGCTGAGAAGGCTGCCGTCAGTGGC
";

pub fn run_example() -> seqsim::Result<Vec<(String, String)>> {
    let seqs = parse_fasta_str(FASTA)?;
    let params = MethodParams::default();
    let mut out = Vec::new();
    for method in [Method::DCurve, Method::Worm, Method::Digraph] {
        for &metric in method.supported_metrics() {
            let m = distance_matrix(&seqs, method, metric, &params, DistanceOptions::default())?;
            out.push((format!("{method}/{metric}"), m.to_csv()));
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> seqsim::Result<()> {
    for (name, csv) in run_example()? {
        println!("{name}\n{csv}");
    }
    Ok(())
}
