//! Sequences → distance matrix → tree.

use std::fmt;
use std::str::FromStr;

use crate::distance::{distance_matrix, DistanceMatrix, DistanceOptions, Method, MethodParams, Metric};
use crate::error::{Error, Result};
use crate::phylo::{neighbor_joining, upgma, PhyloTree};
use crate::seq::DnaSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeAlgorithm {
    #[default]
    NeighborJoining,
    Upgma,
}

impl TreeAlgorithm {
    pub fn build(self, m: &DistanceMatrix) -> Result<PhyloTree> {
        match self {
            TreeAlgorithm::NeighborJoining => neighbor_joining(m),
            TreeAlgorithm::Upgma => upgma(m),
        }
    }
}

impl fmt::Display for TreeAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeAlgorithm::NeighborJoining => "nj",
            TreeAlgorithm::Upgma => "upgma",
        })
    }
}

impl FromStr for TreeAlgorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nj" => Ok(TreeAlgorithm::NeighborJoining),
            "upgma" => Ok(TreeAlgorithm::Upgma),
            other => Err(Error::InvalidParameter(format!("unknown tree algorithm {other:?}"))),
        }
    }
}

/// Runs [`distance_matrix`] then the selected tree builder, with nothing in
/// between. Errors are tagged with the failing stage.
pub fn pipeline(
    seqs: &[DnaSequence],
    method: Method,
    metric: Metric,
    params: &MethodParams,
    options: DistanceOptions,
    algorithm: TreeAlgorithm,
) -> Result<(DistanceMatrix, PhyloTree)> {
    let matrix = distance_matrix(seqs, method, metric, params, options).map_err(|e| e.in_stage("distance"))?;
    let tree = algorithm.build(&matrix).map_err(|e| e.in_stage("tree"))?;
    Ok((matrix, tree))
}
