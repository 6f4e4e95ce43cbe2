// FASTA in, distance matrix and tree out, for each digraph metric.
//
//     cargo run --example pipeline -- genes.fasta

use seqsim::distance::{DistanceOptions, Method, MethodParams, Metric};
use seqsim::pipeline::{pipeline, TreeAlgorithm};
use seqsim::{parse_fasta_str, DnaSequence};

const DEMO: &str = "\
>lemur
ATGACCAACATCCGAAAAACCCACCCACTAGCTAAAATCATCAACAACTCATTCATTGAC
>human
ATGACCCCAATACGCAAAACTAACCCCCTAATAAAATTAATTAACCACTCATTCATCGAC
>chimp
ATGACCCCAATACGCAAAACCAACCCCCTAATAAAATTAATTAACCACTCATTTATCGAC
>gorilla
ATGACCCCTATACGCAAAACTAACCCCCTAGCAAAACTCATTAACCACTCATTCATCGAC
>orangutan
ATGACCCCAATACGCAAAACCAACCCCCTAATAAAACTAATTAACCACTCATTCATTGAC
";

pub fn run_example_on(seqs: &[DnaSequence]) -> seqsim::Result<Vec<(Metric, String, String)>> {
    let params = MethodParams::default();
    let mut out = Vec::new();
    for metric in [Metric::Euclidean, Metric::OneMinusCosine, Metric::OneMinusPcc] {
        let (m, tree) = pipeline(
            seqs,
            Method::Digraph,
            metric,
            &params,
            DistanceOptions::default(),
            TreeAlgorithm::NeighborJoining,
        )?;
        out.push((metric, m.to_csv(), tree.to_newick()));
    }
    Ok(out)
}

pub fn run_example() -> seqsim::Result<Vec<(Metric, String, String)>> {
    run_example_on(&parse_fasta_str(DEMO)?)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let results = match std::env::args().nth(1) {
        Some(path) => run_example_on(&parse_fasta_str(&std::fs::read_to_string(path)?)?)?,
        None => run_example()?,
    };
    for (metric, csv, newick) in results {
        println!("{metric}\n{csv}{newick}\n");
    }
    Ok(())
}
