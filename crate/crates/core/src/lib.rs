//! Alignment-free DNA similarity from graphical representations.
//!
//! Three sequence descriptors are provided:
//!
//! * [`dcurve`]: dinucleotides mapped to quadrant coordinates and summed
//!   into a 3-D curve;
//! * [`worm`]: a 2-bit encoding laid out on a grid, summarized by the
//!   covariance of its 1-bits;
//! * [`digraph`]: a 4×4 matrix of distance-weighted base-to-base edges.
//!
//! Alongside them are classic pairwise comparison ([`align`]), a parallel
//! distance-matrix engine ([`distance`]), tree builders ([`phylo`]) and the
//! command-line front end ([`cli`]).

#![allow(clippy::needless_range_loop)]

pub mod align;
pub mod cli;
pub mod dcurve;
pub mod digraph;
pub mod distance;
pub mod error;
pub mod phylo;
pub mod pipeline;
pub mod seq;
mod stats;
mod svg;
pub mod worm;

pub use error::{Error, Result};
pub use seq::fasta::{parse_fasta, parse_fasta_str, write_fasta};
pub use seq::{Base, DnaSequence, RnaSequence};
