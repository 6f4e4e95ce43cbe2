//! Test-only oracles and generators, independent of the library code paths
//! they check.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::Rng;
use seqsim::align::ScoringScheme;
use seqsim::distance::DistanceMatrix;
use seqsim::phylo::PhyloTree;
use seqsim::{Base, DnaSequence};

pub fn random_dna(rng: &mut StdRng, id: &str, len: usize) -> DnaSequence {
    DnaSequence::new(id, (0..len).map(|_| Base::ALL[rng.gen_range(0..4)]).collect())
}

/// Copies `parent`, substituting each base with probability `rate`.
pub fn mutate(rng: &mut StdRng, parent: &DnaSequence, id: &str, rate: f64) -> DnaSequence {
    let residues = parent
        .residues()
        .iter()
        .map(|&b| {
            if rng.gen_bool(rate) {
                Base::ALL[rng.gen_range(0..4)]
            } else {
                b
            }
        })
        .collect();
    DnaSequence::new(id, residues)
}

fn sub(scheme: &ScoringScheme, a: Base, b: Base) -> i64 {
    if a == b {
        scheme.match_score() as i64
    } else {
        scheme.mismatch() as i64
    }
}

fn enumerate(a: &[Base], b: &[Base], scheme: &ScoringScheme, acc: i64, best: &mut i64) {
    if a.is_empty() && b.is_empty() {
        *best = (*best).max(acc);
        return;
    }
    let gap = scheme.gap() as i64;
    if !a.is_empty() && !b.is_empty() {
        enumerate(&a[1..], &b[1..], scheme, acc + sub(scheme, a[0], b[0]), best);
    }
    if !a.is_empty() {
        enumerate(&a[1..], b, scheme, acc + gap, best);
    }
    if !b.is_empty() {
        enumerate(a, &b[1..], scheme, acc + gap, best);
    }
}

/// Best score over every global alignment, found by walking all of them.
pub fn exhaustive_global(a: &[Base], b: &[Base], scheme: &ScoringScheme) -> i64 {
    let mut best = i64::MIN;
    enumerate(a, b, scheme, 0, &mut best);
    best
}

/// Best global score over all substring pairs (empty included), so never
/// below zero.
pub fn exhaustive_local(a: &[Base], b: &[Base], scheme: &ScoringScheme) -> i64 {
    let mut best = 0;
    for i in 0..=a.len() {
        for j in i..=a.len() {
            for k in 0..=b.len() {
                for l in k..=b.len() {
                    best = best.max(exhaustive_global(&a[i..j], &b[k..l], scheme));
                }
            }
        }
    }
    best
}

/// An unrooted tree as an edge list; leaves are nodes `0..leaves`.
pub struct PlantedTree {
    pub leaves: usize,
    pub edges: Vec<(usize, usize, f64)>,
}

impl PlantedTree {
    /// Random binary unrooted tree built by repeatedly splitting a random
    /// edge to attach a new leaf.
    pub fn random_unrooted(rng: &mut StdRng, leaves: usize) -> Self {
        assert!(leaves >= 3);
        let len = |rng: &mut StdRng| rng.gen_range(0.1..5.0);
        // internal nodes are numbered from `leaves` upward
        let hub = leaves;
        let mut edges = vec![(0, hub, len(rng)), (1, hub, len(rng)), (2, hub, len(rng))];
        for (leaf, mid) in (3..leaves).zip(hub + 1..) {
            let pick = rng.gen_range(0..edges.len());
            let (u, v, _) = edges.swap_remove(pick);
            edges.push((u, mid, len(rng)));
            edges.push((mid, v, len(rng)));
            edges.push((leaf, mid, len(rng)));
        }
        PlantedTree { leaves, edges }
    }

    fn node_count(&self) -> usize {
        self.edges.iter().map(|&(u, v, _)| u.max(v)).max().unwrap() + 1
    }

    fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(u, v, w) in &self.edges {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        adj
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.leaves).map(|i| format!("t{i}")).collect()
    }

    /// Leaf-to-leaf path lengths.
    pub fn distances(&self) -> DistanceMatrix {
        let adj = self.adjacency();
        let mut rows = vec![vec![0.0; self.leaves]; self.leaves];
        for s in 0..self.leaves {
            let mut dist = vec![f64::NAN; adj.len()];
            dist[s] = 0.0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(v, w) in &adj[u] {
                    if dist[v].is_nan() {
                        dist[v] = dist[u] + w;
                        stack.push(v);
                    }
                }
            }
            rows[s].copy_from_slice(&dist[..self.leaves]);
        }
        // force exact symmetry
        for i in 0..self.leaves {
            for j in 0..i {
                rows[i][j] = rows[j][i];
            }
        }
        DistanceMatrix::from_rows(self.labels(), rows).unwrap()
    }

    /// Nontrivial splits, each as the side not holding leaf `t0`.
    pub fn splits(&self) -> BTreeSet<BTreeSet<String>> {
        let adj = self.adjacency();
        let labels = self.labels();
        let mut out = BTreeSet::new();
        for &(u, v, _) in &self.edges {
            // leaves reachable from v without crossing (u, v)
            let mut seen = vec![false; adj.len()];
            seen[u] = true;
            seen[v] = true;
            let mut stack = vec![v];
            let mut side = BTreeSet::new();
            while let Some(x) = stack.pop() {
                if x < self.leaves {
                    side.insert(x);
                }
                for &(y, _) in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if let Some(s) = normalize_split(&side.into_iter().map(|i| labels[i].clone()).collect(), &labels) {
                out.insert(s);
            }
        }
        out
    }
}

fn normalize_split(side: &BTreeSet<String>, labels: &[String]) -> Option<BTreeSet<String>> {
    let all: BTreeSet<String> = labels.iter().cloned().collect();
    let side = if side.contains(&labels[0]) {
        all.difference(side).cloned().collect()
    } else {
        side.clone()
    };
    (side.len() >= 2 && side.len() <= labels.len() - 2).then_some(side)
}

fn clades(tree: &PhyloTree) -> Vec<BTreeSet<String>> {
    let mut below: Vec<BTreeSet<String>> = vec![BTreeSet::new(); tree.nodes().len()];
    let mut order = tree.preorder();
    order.reverse();
    for id in order {
        let node = tree.node(id);
        if node.is_leaf() {
            below[id].insert(node.label.clone().unwrap());
        } else {
            let merged: BTreeSet<String> = node.children.iter().flat_map(|&c| below[c].clone()).collect();
            below[id] = merged;
        }
    }
    below
}

/// Nontrivial splits of a built tree, normalized like [`PlantedTree::splits`].
pub fn tree_splits(tree: &PhyloTree, labels: &[String]) -> BTreeSet<BTreeSet<String>> {
    clades(tree)
        .into_iter()
        .enumerate()
        .filter(|&(id, _)| id != tree.root())
        .filter_map(|(_, c)| normalize_split(&c, labels))
        .collect()
}

/// Rooted clusters (leaf sets under each internal node).
pub fn tree_clusters(tree: &PhyloTree) -> BTreeSet<BTreeSet<String>> {
    clades(tree).into_iter().filter(|c| c.len() >= 2).collect()
}

/// Random rooted ultrametric tree by merging random clusters at increasing
/// heights. Returns the matrix (twice the merge height of each pair's
/// lowest common cluster) and the planted clusters.
pub fn random_ultrametric(rng: &mut StdRng, leaves: usize) -> (DistanceMatrix, BTreeSet<BTreeSet<String>>) {
    let labels: Vec<String> = (0..leaves).map(|i| format!("u{i}")).collect();
    let mut clusters: Vec<Vec<usize>> = (0..leaves).map(|i| vec![i]).collect();
    let mut rows = vec![vec![0.0; leaves]; leaves];
    let mut planted = BTreeSet::new();
    let mut height = 0.0;
    while clusters.len() > 1 {
        height += rng.gen_range(0.1..2.0);
        let i = rng.gen_range(0..clusters.len());
        let a = clusters.swap_remove(i);
        let j = rng.gen_range(0..clusters.len());
        let b = clusters.swap_remove(j);
        for &x in &a {
            for &y in &b {
                rows[x][y] = 2.0 * height;
                rows[y][x] = 2.0 * height;
            }
        }
        let merged: Vec<usize> = a.into_iter().chain(b).collect();
        planted.insert(merged.iter().map(|&i| labels[i].clone()).collect());
        clusters.push(merged);
    }
    (DistanceMatrix::from_rows(labels, rows).unwrap(), planted)
}

/// Largest deviation between a tree's leaf path lengths and a matrix.
pub fn max_path_error(tree: &PhyloTree, m: &DistanceMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in m.labels().iter().enumerate() {
        for (j, b) in m.labels().iter().enumerate() {
            if i < j {
                let la = tree.find_leaf(a).expect("leaf present");
                let lb = tree.find_leaf(b).expect("leaf present");
                worst = worst.max((tree.path_length(la, lb) - m.get(i, j)).abs());
            }
        }
    }
    worst
}

/// Leaf labels as a sorted list, each appearing once per leaf.
pub fn leaf_labels(tree: &PhyloTree) -> Vec<String> {
    let mut v: Vec<String> = tree
        .leaves()
        .into_iter()
        .map(|l| tree.node(l).label.clone().unwrap())
        .collect();
    v.sort();
    v
}
