//! Weighted-digraph descriptor.
//!
//! Every ordered position pair `i < j` contributes an edge `S_i → S_j` of
//! weight `(j − i)^(−α)`. Parallel edges between the same two bases are
//! merged by summing, which yields a 4×4 matrix over `{A, C, G, T}`; its
//! row-major flattening is a 16-dimensional descriptor compared with
//! Euclidean distance (`d1`), one minus cosine (`d2`) or one minus Pearson
//! correlation (`d3`).
//!
//! The multigraph is never built. Pairs are counted per distance `d`, and
//! the matrix is accumulated as `Σ_d count_d[x][y] · d^(−α)` in a fixed
//! block order, so the result is identical for any number of worker threads
//! and reversing a sequence transposes the matrix bit-for-bit.

use std::fmt::Write as _;
use std::num::NonZeroUsize;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Base, DnaSequence};
use crate::stats;

pub const DEFAULT_ALPHA: f64 = 0.5;

/// Distances per accumulation block.
const BLOCK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightParams {
    alpha: f64,
    max_distance: Option<NonZeroUsize>,
}

impl WeightParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "alpha must be a positive finite number, got {alpha}"
            )));
        }
        Ok(WeightParams {
            alpha,
            max_distance: None,
        })
    }

    /// Ignore pairs further apart than `max_distance` positions.
    pub fn with_max_distance(mut self, max_distance: Option<NonZeroUsize>) -> Self {
        self.max_distance = max_distance;
        self
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn max_distance(&self) -> Option<NonZeroUsize> {
        self.max_distance
    }

    pub fn weight(&self, distance: usize) -> f64 {
        (distance as f64).powf(-self.alpha)
    }
}

impl Default for WeightParams {
    fn default() -> Self {
        WeightParams {
            alpha: DEFAULT_ALPHA,
            max_distance: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix {
    m: [[f64; 4]; 4],
    n: usize,
    alpha: f64,
}

impl WeightMatrix {
    pub fn get(&self, from: Base, to: Base) -> f64 {
        self.m[from.index()][to.index()]
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.m
    }

    pub fn source_len(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn total(&self) -> f64 {
        self.m.iter().flatten().sum()
    }

    pub fn transpose(&self) -> WeightMatrix {
        let mut m = [[0.0; 4]; 4];
        for (x, row) in self.m.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                m[y][x] = v;
            }
        }
        WeightMatrix { m, ..*self }
    }
}

/// `Σ_{d=1}^{n−1} (n − d)·d^(−α)`: the sum of all edge weights of a length-`n`
/// sequence, whatever its composition.
pub fn total_weight(n: usize, alpha: f64) -> f64 {
    (1..n).map(|d| (n - d) as f64 * (d as f64).powf(-alpha)).sum()
}

fn block_sum(codes: &[usize], params: &WeightParams, distances: std::ops::Range<usize>) -> [f64; 16] {
    let mut acc = [0.0; 16];
    let mut counts = [0u64; 16];
    for d in distances {
        counts.fill(0);
        for (&x, &y) in codes.iter().zip(&codes[d..]) {
            counts[x * 4 + y] += 1;
        }
        let w = params.weight(d);
        for (a, &c) in acc.iter_mut().zip(&counts) {
            if c > 0 {
                *a += c as f64 * w;
            }
        }
    }
    acc
}

/// Builds the 4×4 weight matrix. Blocks of distances are evaluated on the
/// current rayon pool.
pub fn adjacency_matrix(seq: &DnaSequence, params: &WeightParams) -> WeightMatrix {
    let n = seq.len();
    let codes: Vec<usize> = seq.residues().iter().map(|b| b.index()).collect();
    let max_d = match params.max_distance {
        Some(limit) => limit.get().min(n.saturating_sub(1)),
        None => n.saturating_sub(1),
    };
    let blocks: Vec<[f64; 16]> = (0..max_d.div_ceil(BLOCK))
        .into_par_iter()
        .map(|b| {
            let start = 1 + b * BLOCK;
            block_sum(&codes, params, start..(start + BLOCK).min(max_d + 1))
        })
        .collect();
    let mut flat = [0.0; 16];
    for block in &blocks {
        for (f, v) in flat.iter_mut().zip(block) {
            *f += v;
        }
    }
    let mut m = [[0.0; 4]; 4];
    for (i, v) in flat.into_iter().enumerate() {
        m[i / 4][i % 4] = v;
    }
    WeightMatrix {
        m,
        n,
        alpha: params.alpha,
    }
}

/// A single multigraph edge, positions 1-based.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub from_pos: usize,
    pub to_pos: usize,
    pub from: Base,
    pub to: Base,
    pub weight: f64,
}

/// Every individual (unmerged) edge, for inspection. Quadratic in length.
pub fn edge_list(seq: &DnaSequence, params: &WeightParams) -> Vec<Edge> {
    let r = seq.residues();
    let limit = params.max_distance.map_or(usize::MAX, NonZeroUsize::get);
    let mut edges = Vec::new();
    for i in 0..r.len() {
        for j in i + 1..r.len() {
            if j - i > limit {
                break;
            }
            edges.push(Edge {
                from_pos: i + 1,
                to_pos: j + 1,
                from: r[i],
                to: r[j],
                weight: params.weight(j - i),
            });
        }
    }
    edges
}

pub fn edges_to_csv(edges: &[Edge]) -> String {
    let mut out = String::from("from_pos,to_pos,from,to,weight\n");
    for e in edges {
        let _ = writeln!(out, "{},{},{},{},{}", e.from_pos, e.to_pos, e.from, e.to, e.weight);
    }
    out
}

/// Row-major flattening of a [`WeightMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DescriptorVector16(pub [f64; 16]);

impl DescriptorVector16 {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

pub fn flatten(m: &WeightMatrix) -> DescriptorVector16 {
    let mut r = [0.0; 16];
    for (x, row) in m.m.iter().enumerate() {
        r[4 * x..4 * x + 4].copy_from_slice(row);
    }
    DescriptorVector16(r)
}

/// Euclidean distance.
pub fn d1(x: &DescriptorVector16, y: &DescriptorVector16) -> f64 {
    stats::euclidean(&x.0, &y.0)
}

/// One minus the cosine of the angle between the vectors.
pub fn d2(x: &DescriptorVector16, y: &DescriptorVector16) -> Result<f64> {
    let dot: f64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
    let nx: f64 = x.0.iter().map(|a| a * a).sum();
    let ny: f64 = y.0.iter().map(|b| b * b).sum();
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    let cos = dot / (nx * ny).sqrt();
    Ok((1.0 - cos).clamp(0.0, 2.0))
}

/// One minus the Pearson correlation over the 16 components.
pub fn d3(x: &DescriptorVector16, y: &DescriptorVector16) -> Result<f64> {
    let r = stats::pearson(&x.0, &y.0).ok_or(Error::ZeroVarianceVector)?;
    Ok((1.0 - r).clamp(0.0, 2.0))
}

pub fn matrix_to_csv(m: &WeightMatrix) -> String {
    let mut out = String::from(",A,C,G,T\n");
    for (base, row) in Base::ALL.iter().zip(&m.m) {
        let _ = writeln!(out, "{base},{},{},{},{}", row[0], row[1], row[2], row[3]);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescriptorRecord {
    pub id: String,
    pub alpha: f64,
    pub r: Vec<f64>,
}

impl DescriptorRecord {
    pub fn new(id: &str, m: &WeightMatrix) -> Self {
        DescriptorRecord {
            id: id.to_string(),
            alpha: m.alpha,
            r: flatten(m).0.to_vec(),
        }
    }
}

pub fn descriptor_to_json(id: &str, m: &WeightMatrix) -> String {
    serde_json::to_string(&DescriptorRecord::new(id, m)).expect("descriptor serializes")
}
