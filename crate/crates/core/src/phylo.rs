//! Distance-based tree building (UPGMA and neighbor joining) with Newick
//! serialization.

use std::fmt::Write as _;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::svg::SvgDoc;

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub label: Option<String>,
    /// Length of the branch to the parent; 0 at the root.
    pub branch_length: f64,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

impl Node {
    fn leaf(label: &str) -> Self {
        Node {
            label: Some(label.to_string()),
            branch_length: 0.0,
            parent: None,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhyloTree {
    nodes: Vec<Node>,
    root: usize,
    rooted: bool,
    warnings: Vec<String>,
}

impl PhyloTree {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn is_rooted(&self) -> bool {
        self.rooted
    }

    /// Notes produced while building, e.g. clamped negative branch lengths.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Node ids in depth-first preorder.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            order.push(id);
            stack.extend(self.nodes[id].children.iter().rev());
        }
        order
    }

    /// Leaf ids in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        self.preorder()
            .into_iter()
            .filter(|&id| self.nodes[id].is_leaf())
            .collect()
    }

    pub fn find_leaf(&self, label: &str) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.is_leaf() && n.label.as_deref() == Some(label))
    }

    /// Distance from the root to every node.
    pub fn depths(&self) -> Vec<f64> {
        let mut depth = vec![0.0; self.nodes.len()];
        for id in self.preorder() {
            if let Some(p) = self.nodes[id].parent {
                depth[id] = depth[p] + self.nodes[id].branch_length;
            }
        }
        depth
    }

    fn ancestors(&self, mut id: usize) -> Vec<usize> {
        let mut path = vec![id];
        while let Some(p) = self.nodes[id].parent {
            path.push(p);
            id = p;
        }
        path
    }

    /// Sum of branch lengths on the path between two nodes.
    pub fn path_length(&self, a: usize, b: usize) -> f64 {
        self.path_length_with(&self.depths(), a, b)
    }

    fn path_length_with(&self, depth: &[f64], a: usize, b: usize) -> f64 {
        let up_a = self.ancestors(a);
        let lca = self
            .ancestors(b)
            .into_iter()
            .find(|x| up_a.contains(x))
            .expect("nodes share the root");
        (depth[a] - depth[lca]) + (depth[b] - depth[lca])
    }

    /// Leaf-to-leaf path lengths, labeled in leaf order.
    pub fn patristic_distances(&self) -> Result<DistanceMatrix> {
        let depth = self.depths();
        let leaves = self.leaves();
        let labels = leaves
            .iter()
            .map(|&l| self.nodes[l].label.clone().unwrap_or_default())
            .collect();
        let rows = leaves
            .iter()
            .map(|&a| {
                leaves
                    .iter()
                    .map(|&b| {
                        if a == b {
                            0.0
                        } else {
                            self.path_length_with(&depth, a, b)
                        }
                    })
                    .collect()
            })
            .collect();
        DistanceMatrix::from_rows(labels, rows)
    }

    pub fn to_newick(&self) -> String {
        let mut out = String::new();
        self.write_subtree(self.root, &mut out);
        out.push(';');
        out
    }

    fn write_subtree(&self, id: usize, out: &mut String) {
        let node = &self.nodes[id];
        if !node.children.is_empty() {
            out.push('(');
            for (i, &c) in node.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                self.write_subtree(c, out);
            }
            out.push(')');
        }
        if let Some(label) = &node.label {
            out.push_str(&quote_label(label));
        }
        if node.parent.is_some() {
            let _ = write!(out, ":{}", node.branch_length);
        }
    }

    pub fn from_newick(text: &str) -> Result<PhyloTree> {
        NewickParser::new(text).parse()
    }

    /// Rectangular cladogram, leaves equally spaced, x proportional to depth.
    pub fn to_svg(&self) -> String {
        let leaves = self.leaves();
        let (row_h, margin, plot_w, label_w) = (20.0, 20.0, 480.0, 160.0);
        let height = leaves.len().max(1) as f64 * row_h + 2.0 * margin;
        let mut doc = SvgDoc::new(plot_w + label_w + 2.0 * margin, height);
        let depth = self.depths();
        let max_depth = depth.iter().cloned().fold(0.0, f64::max);
        let scale = if max_depth > 0.0 { plot_w / max_depth } else { 0.0 };
        let mut y = vec![0.0; self.nodes.len()];
        for (i, &l) in leaves.iter().enumerate() {
            y[l] = margin + (i as f64 + 0.5) * row_h;
        }
        let mut post = self.preorder();
        post.reverse();
        for &id in &post {
            let kids = &self.nodes[id].children;
            if !kids.is_empty() {
                let first = y[kids[0]];
                let last = y[kids[kids.len() - 1]];
                y[id] = (first + last) / 2.0;
            }
        }
        let x = |id: usize| margin + depth[id] * scale;
        for &id in &post {
            let node = &self.nodes[id];
            if let Some(p) = node.parent {
                doc.line((x(p), y[id]), (x(id), y[id]), "black");
            }
            if !node.children.is_empty() {
                let first = y[node.children[0]];
                let last = y[node.children[node.children.len() - 1]];
                doc.line((x(id), first), (x(id), last), "black");
            }
            if node.is_leaf() {
                let label = node.label.as_deref().unwrap_or("");
                doc.text((x(id) + 4.0, y[id] + 4.0), "start", label);
            }
        }
        doc.finish()
    }
}

fn quote_label(label: &str) -> String {
    let reserved = |c: char| c.is_whitespace() || "()[]':;,".contains(c);
    if label.is_empty() || label.chars().any(reserved) {
        format!("'{}'", label.replace('\'', "''"))
    } else {
        label.to_string()
    }
}

struct NewickParser<'a> {
    text: &'a str,
    pos: usize,
    nodes: Vec<Node>,
}

impl<'a> NewickParser<'a> {
    fn new(text: &'a str) -> Self {
        NewickParser {
            text,
            pos: 0,
            nodes: Vec::new(),
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Newick {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn parse(mut self) -> Result<PhyloTree> {
        self.skip_ws();
        let root = self.subtree()?;
        self.skip_ws();
        if self.peek() != Some(';') {
            return self.error("expected ';'");
        }
        self.pos += 1;
        self.skip_ws();
        if self.pos != self.text.len() {
            return self.error("trailing input after ';'");
        }
        let rooted = self.nodes[root].children.len() == 2;
        Ok(PhyloTree {
            nodes: self.nodes,
            root,
            rooted,
            warnings: Vec::new(),
        })
    }

    fn subtree(&mut self) -> Result<usize> {
        self.skip_ws();
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            self.pos += 1;
            loop {
                children.push(self.subtree()?);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.error("expected ',' or ')'"),
                }
            }
        }
        self.skip_ws();
        let label = self.label()?;
        self.skip_ws();
        let mut branch_length = 0.0;
        if self.peek() == Some(':') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() || "+-.eE".contains(c) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            branch_length = match self.text[start..self.pos].parse() {
                Ok(v) => v,
                Err(_) => return self.error("invalid branch length"),
            };
        }
        if children.is_empty() && label.is_none() {
            return self.error("leaf without a label");
        }
        let id = self.nodes.len();
        for &c in &children {
            self.nodes[c].parent = Some(id);
        }
        self.nodes.push(Node {
            label,
            branch_length,
            parent: None,
            children,
        });
        Ok(id)
    }

    fn label(&mut self) -> Result<Option<String>> {
        if self.peek() == Some('\'') {
            self.pos += 1;
            let mut out = String::new();
            loop {
                match self.peek() {
                    None => return self.error("unterminated quoted label"),
                    Some('\'') => {
                        self.pos += 1;
                        if self.peek() == Some('\'') {
                            out.push('\'');
                            self.pos += 1;
                        } else {
                            return Ok(Some(out));
                        }
                    }
                    Some(c) => {
                        out.push(c);
                        self.pos += c.len_utf8();
                    }
                }
            }
        }
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_whitespace() || "()[]':;,".contains(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        Ok((self.pos > start).then(|| self.text[start..self.pos].to_string()))
    }
}

/// Minimum entry of the active upper triangle; the first (row, column) pair
/// wins ties.
fn argmin_pair(n: usize, value: impl Fn(usize, usize) -> f64) -> (usize, usize) {
    let mut best = (0, 1);
    let mut best_v = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let v = value(i, j);
            if v < best_v {
                best_v = v;
                best = (i, j);
            }
        }
    }
    best
}

fn leaves_from(m: &DistanceMatrix) -> Vec<Node> {
    m.labels().iter().map(|l| Node::leaf(l)).collect()
}

fn attach(nodes: &mut Vec<Node>, children: &[(usize, f64)]) -> usize {
    let id = nodes.len();
    for &(c, len) in children {
        nodes[c].parent = Some(id);
        nodes[c].branch_length = len;
    }
    nodes.push(Node {
        label: None,
        branch_length: 0.0,
        parent: None,
        children: children.iter().map(|&(c, _)| c).collect(),
    });
    id
}

/// Average-linkage clustering. Each merge sits at half the cluster distance;
/// the result is rooted and ultrametric.
pub fn upgma(m: &DistanceMatrix) -> Result<PhyloTree> {
    if m.len() < 2 {
        return Err(Error::TooFewTaxa {
            needed: 2,
            got: m.len(),
        });
    }
    let mut nodes = leaves_from(m);
    // active clusters: (node id, size, height)
    let mut active: Vec<(usize, usize, f64)> = (0..m.len()).map(|i| (i, 1, 0.0)).collect();
    let mut d = m.row_vecs();
    while active.len() > 1 {
        let (i, j) = argmin_pair(active.len(), |i, j| d[i][j]);
        let height = d[i][j] / 2.0;
        let (ni, si, hi) = active[i];
        let (nj, sj, hj) = active[j];
        let id = attach(
            &mut nodes,
            &[(ni, (height - hi).max(0.0)), (nj, (height - hj).max(0.0))],
        );
        let total = (si + sj) as f64;
        for k in 0..active.len() {
            if k != i && k != j {
                let v = (si as f64 * d[i][k] + sj as f64 * d[j][k]) / total;
                d[i][k] = v;
                d[k][i] = v;
            }
        }
        d[i][i] = 0.0;
        active[i] = (id, si + sj, height);
        active.remove(j);
        d.remove(j);
        for row in &mut d {
            row.remove(j);
        }
    }
    Ok(PhyloTree {
        root: active[0].0,
        nodes,
        rooted: true,
        warnings: Vec::new(),
    })
}

/// Neighbor joining with the Q-matrix criterion. The unrooted result is
/// serialized around a trifurcating root. Negative branch lengths are
/// clamped to 0 and reported in [`PhyloTree::warnings`].
pub fn neighbor_joining(m: &DistanceMatrix) -> Result<PhyloTree> {
    if m.len() < 3 {
        return Err(Error::TooFewTaxa {
            needed: 3,
            got: m.len(),
        });
    }
    let mut nodes = leaves_from(m);
    let mut warnings = Vec::new();
    let mut active: Vec<usize> = (0..m.len()).collect();
    let mut d = m.row_vecs();
    let clamp = |len: f64, what: String, warnings: &mut Vec<String>| {
        if len < 0.0 {
            warnings.push(format!("negative branch length {len} for {what} clamped to 0"));
            0.0
        } else {
            len
        }
    };
    let describe = |nodes: &[Node], id: usize| match &nodes[id].label {
        Some(l) => format!("{l:?}"),
        None => format!("internal node {id}"),
    };

    while active.len() > 3 {
        let n = active.len();
        let r: Vec<f64> = d.iter().map(|row| row.iter().sum()).collect();
        let (i, j) = argmin_pair(n, |i, j| (n - 2) as f64 * d[i][j] - r[i] - r[j]);
        let dij = d[i][j];
        let li = dij / 2.0 + (r[i] - r[j]) / (2.0 * (n - 2) as f64);
        let lj = dij - li;
        let li = clamp(li, describe(&nodes, active[i]), &mut warnings);
        let lj = clamp(lj, describe(&nodes, active[j]), &mut warnings);
        let id = attach(&mut nodes, &[(active[i], li), (active[j], lj)]);
        for k in 0..n {
            if k != i && k != j {
                let v = (d[i][k] + d[j][k] - dij) / 2.0;
                d[i][k] = v;
                d[k][i] = v;
            }
        }
        d[i][i] = 0.0;
        active[i] = id;
        active.remove(j);
        d.remove(j);
        for row in &mut d {
            row.remove(j);
        }
    }

    let (a, b, c) = (d[0][1], d[0][2], d[1][2]);
    let lengths = [(a + b - c) / 2.0, (a + c - b) / 2.0, (b + c - a) / 2.0];
    let mut children = Vec::with_capacity(3);
    for (k, len) in lengths.into_iter().enumerate() {
        let len = clamp(len, describe(&nodes, active[k]), &mut warnings);
        children.push((active[k], len));
    }
    let root = attach(&mut nodes, &children);
    Ok(PhyloTree {
        nodes,
        root,
        rooted: false,
        warnings,
    })
}
