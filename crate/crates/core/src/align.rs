//! Dot-matrix comparison and dynamic-programming alignment
//! (Needleman-Wunsch global, Smith-Waterman local) with a linear gap model.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::seq::{Base, DnaSequence};
use crate::svg::SvgDoc;

pub const GAP: char = '-';
pub const DEFAULT_MAX_LEN: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScoringScheme {
    match_score: i32,
    mismatch: i32,
    gap: i32,
}

impl ScoringScheme {
    /// Requires `match_score > 0`, `mismatch <= 0` and `gap <= 0`.
    pub fn new(match_score: i32, mismatch: i32, gap: i32) -> Result<Self> {
        if match_score <= 0 || mismatch > 0 || gap > 0 {
            return Err(Error::InvalidParameter(format!(
                "scoring needs match > 0, mismatch <= 0, gap <= 0 (got {match_score}, {mismatch}, {gap})"
            )));
        }
        Ok(ScoringScheme {
            match_score,
            mismatch,
            gap,
        })
    }

    pub fn match_score(&self) -> i32 {
        self.match_score
    }
    pub fn mismatch(&self) -> i32 {
        self.mismatch
    }
    pub fn gap(&self) -> i32 {
        self.gap
    }

    #[inline]
    pub fn substitution(&self, a: Base, b: Base) -> i32 {
        if a == b {
            self.match_score
        } else {
            self.mismatch
        }
    }
}

impl Default for ScoringScheme {
    fn default() -> Self {
        ScoringScheme {
            match_score: 1,
            mismatch: -1,
            gap: -2,
        }
    }
}

/// An alignment of two sequences. Ranges are 0-based half-open spans of the
/// inputs covered by the alignment (the whole inputs for global mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentResult {
    pub score: i64,
    pub aligned_a: String,
    pub aligned_b: String,
    pub range_a: (usize, usize),
    pub range_b: (usize, usize),
}

impl AlignmentResult {
    /// Column-by-column score of the aligned strings.
    pub fn rescore(&self, scheme: &ScoringScheme) -> i64 {
        self.aligned_a
            .chars()
            .zip(self.aligned_b.chars())
            .map(|(x, y)| {
                if x == GAP || y == GAP {
                    scheme.gap as i64
                } else if x == y {
                    scheme.match_score as i64
                } else {
                    scheme.mismatch as i64
                }
            })
            .sum()
    }

    /// `|` under identical columns, space elsewhere.
    pub fn midline(&self) -> String {
        self.aligned_a
            .chars()
            .zip(self.aligned_b.chars())
            .map(|(x, y)| if x == y && x != GAP { '|' } else { ' ' })
            .collect()
    }

    pub fn to_text(&self, id_a: &str, id_b: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# {id_a} {}-{} vs {id_b} {}-{} score={}",
            self.range_a.0, self.range_a.1, self.range_b.0, self.range_b.1, self.score
        );
        let _ = writeln!(out, "{}", self.aligned_a);
        let _ = writeln!(out, "{}", self.midline());
        let _ = writeln!(out, "{}", self.aligned_b);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlignMode {
    #[default]
    Global,
    Local,
}

/// Scoring plus the per-input length limit guarding the quadratic DP table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aligner {
    pub scheme: ScoringScheme,
    pub max_len: usize,
}

impl Default for Aligner {
    fn default() -> Self {
        Aligner {
            scheme: ScoringScheme::default(),
            max_len: DEFAULT_MAX_LEN,
        }
    }
}

struct Table {
    cols: usize,
    cells: Vec<i32>,
}

impl Table {
    fn new(rows: usize, cols: usize) -> Self {
        Table {
            cols,
            cells: vec![0; rows * cols],
        }
    }
    #[inline]
    fn at(&self, i: usize, j: usize) -> i32 {
        self.cells[i * self.cols + j]
    }
    #[inline]
    fn set(&mut self, i: usize, j: usize, v: i32) {
        self.cells[i * self.cols + j] = v;
    }
}

impl Aligner {
    pub fn new(scheme: ScoringScheme) -> Self {
        Aligner {
            scheme,
            ..Aligner::default()
        }
    }

    fn check_len(&self, seq: &DnaSequence) -> Result<()> {
        if seq.len() > self.max_len {
            return Err(Error::SequenceTooLong {
                id: seq.id().to_string(),
                len: seq.len(),
                limit: self.max_len,
            });
        }
        Ok(())
    }

    pub fn align(&self, s1: &DnaSequence, s2: &DnaSequence, mode: AlignMode) -> Result<AlignmentResult> {
        self.check_len(s1)?;
        self.check_len(s2)?;
        Ok(match mode {
            AlignMode::Global => global(s1.residues(), s2.residues(), &self.scheme),
            AlignMode::Local => local(s1.residues(), s2.residues(), &self.scheme),
        })
    }
}

pub fn needleman_wunsch(s1: &DnaSequence, s2: &DnaSequence, scheme: &ScoringScheme) -> Result<AlignmentResult> {
    Aligner::new(*scheme).align(s1, s2, AlignMode::Global)
}

pub fn smith_waterman(s1: &DnaSequence, s2: &DnaSequence, scheme: &ScoringScheme) -> Result<AlignmentResult> {
    Aligner::new(*scheme).align(s1, s2, AlignMode::Local)
}

/// Walks back from `(i, j)` preferring diagonal, then up (gap in `b`), then
/// left (gap in `a`). Stops at the origin, or for local mode at a zero cell.
fn traceback(
    a: &[Base],
    b: &[Base],
    table: &Table,
    scheme: &ScoringScheme,
    mut i: usize,
    mut j: usize,
    local: bool,
) -> (String, String, usize, usize) {
    let mut ra = Vec::new();
    let mut rb = Vec::new();
    loop {
        let h = table.at(i, j);
        if local && h == 0 {
            break;
        }
        if i == 0 && j == 0 {
            break;
        }
        if i > 0 && j > 0 && h == table.at(i - 1, j - 1) + scheme.substitution(a[i - 1], b[j - 1]) {
            ra.push(a[i - 1].as_char());
            rb.push(b[j - 1].as_char());
            i -= 1;
            j -= 1;
        } else if i > 0 && h == table.at(i - 1, j) + scheme.gap {
            ra.push(a[i - 1].as_char());
            rb.push(GAP);
            i -= 1;
        } else {
            debug_assert!(j > 0 && h == table.at(i, j - 1) + scheme.gap);
            ra.push(GAP);
            rb.push(b[j - 1].as_char());
            j -= 1;
        }
    }
    (ra.into_iter().rev().collect(), rb.into_iter().rev().collect(), i, j)
}

fn global(a: &[Base], b: &[Base], scheme: &ScoringScheme) -> AlignmentResult {
    let (n, m) = (a.len(), b.len());
    let mut t = Table::new(n + 1, m + 1);
    for i in 1..=n {
        t.set(i, 0, i as i32 * scheme.gap);
    }
    for j in 1..=m {
        t.set(0, j, j as i32 * scheme.gap);
    }
    for i in 1..=n {
        for j in 1..=m {
            let diag = t.at(i - 1, j - 1) + scheme.substitution(a[i - 1], b[j - 1]);
            let up = t.at(i - 1, j) + scheme.gap;
            let left = t.at(i, j - 1) + scheme.gap;
            t.set(i, j, diag.max(up).max(left));
        }
    }
    let (aligned_a, aligned_b, _, _) = traceback(a, b, &t, scheme, n, m, false);
    AlignmentResult {
        score: t.at(n, m) as i64,
        aligned_a,
        aligned_b,
        range_a: (0, n),
        range_b: (0, m),
    }
}

fn local(a: &[Base], b: &[Base], scheme: &ScoringScheme) -> AlignmentResult {
    let (n, m) = (a.len(), b.len());
    let mut t = Table::new(n + 1, m + 1);
    let (mut best, mut bi, mut bj) = (0, 0, 0);
    for i in 1..=n {
        for j in 1..=m {
            let diag = t.at(i - 1, j - 1) + scheme.substitution(a[i - 1], b[j - 1]);
            let up = t.at(i - 1, j) + scheme.gap;
            let left = t.at(i, j - 1) + scheme.gap;
            let h = diag.max(up).max(left).max(0);
            t.set(i, j, h);
            // strict comparison keeps the first maximum in row-major order
            if h > best {
                best = h;
                bi = i;
                bj = j;
            }
        }
    }
    let (aligned_a, aligned_b, si, sj) = traceback(a, b, &t, scheme, bi, bj, true);
    AlignmentResult {
        score: best as i64,
        aligned_a,
        aligned_b,
        range_a: (si, bi),
        range_b: (sj, bj),
    }
}

/// Boolean comparison grid; rows follow the second sequence, columns the
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
    window: usize,
    stringency: usize,
}

impl DotMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn window(&self) -> usize {
        self.window
    }
    pub fn stringency(&self) -> usize {
        self.stringency
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.cols + col]
    }

    pub fn dot_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    /// Plain PBM (`P1`): `1` marks a dot.
    pub fn to_pbm(&self) -> String {
        let mut out = format!("P1\n{} {}\n", self.cols, self.rows);
        for r in 0..self.rows {
            let row: Vec<&str> = (0..self.cols).map(|c| if self.get(r, c) { "1" } else { "0" }).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn to_svg(&self, label_cols: &str, label_rows: &str) -> String {
        let cell = 4.0;
        let margin = 24.0;
        let (w, h) = (self.cols as f64 * cell, self.rows as f64 * cell);
        let mut doc = SvgDoc::new(w + 2.0 * margin, h + 2.0 * margin);
        doc.rect((margin, margin), (w, h), "none", "#999999");
        doc.text((margin + w / 2.0, margin - 8.0), "middle", label_cols);
        doc.text((margin - 8.0, margin + h / 2.0), "end", label_rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    let center = (margin + (c as f64 + 0.5) * cell, margin + (r as f64 + 0.5) * cell);
                    doc.circle(center, cell * 0.45, "black");
                }
            }
        }
        doc.finish()
    }
}

/// Cell `(i, j)` is set when at least `stringency` of the `window` aligned
/// positions `s2[i + k] == s1[j + k]` match. Windows running past either end
/// are not evaluated.
pub fn dot_matrix(s1: &DnaSequence, s2: &DnaSequence, window: usize, stringency: usize) -> Result<DotMatrix> {
    if window == 0 || stringency == 0 {
        return Err(Error::InvalidParameter("window and stringency must be positive".into()));
    }
    if stringency > window {
        return Err(Error::InvalidParameter(format!(
            "stringency {stringency} exceeds window {window}"
        )));
    }
    let (x, y) = (s1.residues(), s2.residues());
    let cols = (x.len() + 1).saturating_sub(window);
    let rows = (y.len() + 1).saturating_sub(window);
    let mut cells = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let matches = (0..window).filter(|&k| y[i + k] == x[j + k]).count();
            cells.push(matches >= stringency);
        }
    }
    Ok(DotMatrix {
        rows,
        cols,
        cells,
        window,
        stringency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> DnaSequence {
        DnaSequence::from_text("t", s).unwrap()
    }

    fn strip(s: &str) -> String {
        s.chars().filter(|&c| c != GAP).collect()
    }

    #[test]
    fn scheme_validation() {
        assert!(ScoringScheme::new(0, -1, -1).is_err());
        assert!(ScoringScheme::new(1, 1, -1).is_err());
        assert!(ScoringScheme::new(1, -1, 1).is_err());
        assert!(ScoringScheme::new(2, 0, 0).is_ok());
    }

    #[test]
    fn global_examples() {
        let s = ScoringScheme::default();
        let r = needleman_wunsch(&dna("ACGT"), &dna("ACGT"), &s).unwrap();
        assert_eq!(
            (r.score, r.aligned_a.as_str(), r.aligned_b.as_str()),
            (4, "ACGT", "ACGT")
        );
        let r = needleman_wunsch(&dna("ACGT"), &dna("ACG"), &s).unwrap();
        assert_eq!(r.score, 1);
        assert_eq!((r.aligned_a.as_str(), r.aligned_b.as_str()), ("ACGT", "ACG-"));
        let r = needleman_wunsch(&dna(""), &dna("AC"), &s).unwrap();
        assert_eq!((r.score, r.aligned_a.as_str(), r.aligned_b.as_str()), (-4, "--", "AC"));
        let r = needleman_wunsch(&dna(""), &dna(""), &s).unwrap();
        assert_eq!(r.score, 0);
        assert!(r.aligned_a.is_empty());
    }

    #[test]
    fn local_examples() {
        let s = ScoringScheme::default();
        let r = smith_waterman(&dna("AAAA"), &dna("CCCC"), &s).unwrap();
        assert_eq!(r.score, 0);
        assert!(r.aligned_a.is_empty() && r.aligned_b.is_empty());
        let r = smith_waterman(&dna("GGTT"), &dna("TTGG"), &s).unwrap();
        assert_eq!((r.score, r.aligned_a.as_str(), r.aligned_b.as_str()), (2, "GG", "GG"));
        assert_eq!((r.range_a, r.range_b), ((0, 2), (2, 4)));
        let r = smith_waterman(&dna("ACGTTGCA"), &dna("ACGTTGCA"), &s).unwrap();
        assert_eq!(r.score, 8);
    }

    #[test]
    fn alignment_consistency() {
        let s = ScoringScheme::new(2, -1, -1).unwrap();
        let pairs = [("ACGTACGTTA", "AGTACCGTA"), ("GATTACA", "GCATGCT"), ("TTTT", "A")];
        for (x, y) in pairs {
            let (a, b) = (dna(x), dna(y));
            let g = needleman_wunsch(&a, &b, &s).unwrap();
            assert_eq!(g.aligned_a.len(), g.aligned_b.len());
            assert!(g
                .aligned_a
                .chars()
                .zip(g.aligned_b.chars())
                .all(|(p, q)| !(p == GAP && q == GAP)));
            assert_eq!(strip(&g.aligned_a), x);
            assert_eq!(strip(&g.aligned_b), y);
            assert_eq!(g.rescore(&s), g.score);
            let l = smith_waterman(&a, &b, &s).unwrap();
            assert_eq!(strip(&l.aligned_a), &x[l.range_a.0..l.range_a.1]);
            assert_eq!(strip(&l.aligned_b), &y[l.range_b.0..l.range_b.1]);
            assert_eq!(l.rescore(&s), l.score);
            assert!(l.score >= 0);
        }
    }

    #[test]
    fn length_limit() {
        let aligner = Aligner {
            max_len: 3,
            ..Aligner::default()
        };
        let err = aligner.align(&dna("ACGT"), &dna("A"), AlignMode::Global).unwrap_err();
        assert!(matches!(err, Error::SequenceTooLong { len: 4, limit: 3, .. }));
    }

    #[test]
    fn text_emission() {
        let r = needleman_wunsch(&dna("ACGT"), &dna("ACG"), &ScoringScheme::default()).unwrap();
        assert_eq!(r.to_text("x", "y"), "# x 0-4 vs y 0-3 score=1\nACGT\n||| \nACG-\n");
    }

    #[test]
    fn dot_examples() {
        let m = dot_matrix(&dna("ACA"), &dna("ACA"), 1, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        for i in 0..3 {
            assert!(m.get(i, i));
        }
        assert!(m.get(0, 2) && m.get(2, 0));
        assert_eq!(m.dot_count(), 5);

        let m = dot_matrix(&dna("AAAA"), &dna("CCCC"), 1, 1).unwrap();
        assert_eq!(m.dot_count(), 0);

        let m = dot_matrix(&dna("ACGT"), &dna("ACGT"), 2, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), i == j);
            }
        }
        assert!(dot_matrix(&dna("AC"), &dna("AC"), 1, 2).is_err());
        assert!(dot_matrix(&dna("AC"), &dna("AC"), 0, 0).is_err());
        let m = dot_matrix(&dna("AC"), &dna("ACGT"), 3, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 0));
    }

    #[test]
    fn dot_rows_follow_second_sequence() {
        let m = dot_matrix(&dna("AC"), &dna("CCC"), 1, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 2));
        assert!(!m.get(0, 0) && m.get(0, 1));
        assert_eq!(m.to_pbm(), "P1\n2 3\n0 1\n0 1\n0 1\n");
        assert_eq!(m.to_svg("x", "y").matches("<circle").count(), 3);
    }
}
