//! Worm-curve spot representation and its covariance descriptor.
//!
//! A sequence is written as a bit string (A=00, G=01, C=10, T=11). The bits
//! are wrapped row-major into a grid of width `W`; each 1-bit is a "dark
//! spot" at lattice point `(j mod W, j div W)`. The descriptor is the 2×2
//! population covariance of the spot coordinates, flattened to
//! `D = [M1, M2, M3, M4]`.

use std::fmt;
use std::fmt::Write as _;
use std::num::NonZeroUsize;

use crate::error::{Error, Result};
use crate::seq::{Base, DnaSequence};
use crate::stats;
use crate::svg::SvgDoc;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

impl From<Vec<bool>> for BitString {
    fn from(bits: Vec<bool>) -> Self {
        BitString { bits }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn base_code(base: Base) -> [bool; 2] {
    match base {
        Base::A => [false, false],
        Base::G => [false, true],
        Base::C => [true, false],
        Base::T => [true, true],
    }
}

pub fn encode_binary(seq: &DnaSequence) -> BitString {
    let bits = seq.residues().iter().flat_map(|&b| base_code(b)).collect();
    BitString { bits }
}

/// Grid width for [`spot_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridWidth {
    /// `ceil(sqrt(L))`, at least 1.
    #[default]
    Auto,
    Fixed(NonZeroUsize),
}

impl GridWidth {
    pub fn fixed(width: usize) -> Result<Self> {
        NonZeroUsize::new(width)
            .map(GridWidth::Fixed)
            .ok_or_else(|| Error::InvalidParameter("grid width must be at least 1".into()))
    }

    pub fn resolve(self, bit_len: usize) -> usize {
        match self {
            GridWidth::Fixed(w) => w.get(),
            GridWidth::Auto => ceil_sqrt(bit_len).max(1),
        }
    }
}

fn ceil_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while r * r < n {
        r += 1;
    }
    r
}

/// Lattice points of the 1-bits, in bit order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotSet {
    points: Vec<(i64, i64)>,
    width: usize,
    bit_len: usize,
}

impl SpotSet {
    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of grid rows needed for the source bit string.
    pub fn rows(&self) -> usize {
        self.bit_len.div_ceil(self.width)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn spot_set(bits: &BitString, width: GridWidth) -> SpotSet {
    let w = width.resolve(bits.len());
    let points = bits
        .bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(j, _)| ((j % w) as i64, (j / w) as i64))
        .collect();
    SpotSet {
        points,
        width: w,
        bit_len: bits.len(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceDescriptor {
    /// `[M1, M2, M3, M4]`.
    pub d: [f64; 4],
    pub count: usize,
    pub mean: (f64, f64),
}

impl CovarianceDescriptor {
    /// Central second moments of integer points with 1/m normalization.
    ///
    /// Sums are accumulated exactly in integers, so each moment is the
    /// exact rational `(m·Σxy − Σx·Σy) / m²` rounded once; shifting every
    /// point by a constant leaves the result bit-for-bit unchanged.
    pub fn from_points(points: &[(i64, i64)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptySpotSet);
        }
        let m = points.len() as i128;
        let (mut sa, mut sb, mut saa, mut sab, mut sba, mut sbb) = (0i128, 0i128, 0i128, 0i128, 0i128, 0i128);
        for &(a, b) in points {
            let (a, b) = (a as i128, b as i128);
            sa += a;
            sb += b;
            saa += a * a;
            sab += a * b;
            sba += b * a;
            sbb += b * b;
        }
        let mm = (m * m) as f64;
        let moment = |cross: i128, x: i128, y: i128| (m * cross - x * y) as f64 / mm;
        Ok(CovarianceDescriptor {
            d: [
                moment(saa, sa, sa),
                moment(sab, sa, sb),
                moment(sba, sb, sa),
                moment(sbb, sb, sb),
            ],
            count: points.len(),
            mean: (sa as f64 / m as f64, sb as f64 / m as f64),
        })
    }

    pub fn m1(&self) -> f64 {
        self.d[0]
    }
    pub fn m2(&self) -> f64 {
        self.d[1]
    }
    pub fn m3(&self) -> f64 {
        self.d[2]
    }
    pub fn m4(&self) -> f64 {
        self.d[3]
    }
}

pub fn covariance_descriptor(spots: &SpotSet) -> Result<CovarianceDescriptor> {
    CovarianceDescriptor::from_points(&spots.points)
}

/// Euclidean distance between two descriptor vectors.
pub fn descriptor_distance(x: &CovarianceDescriptor, y: &CovarianceDescriptor) -> f64 {
    stats::euclidean(&x.d, &y.d)
}

pub fn spots_to_csv(spots: &SpotSet) -> String {
    let mut out = String::from("a,b\n");
    for (a, b) in &spots.points {
        let _ = writeln!(out, "{a},{b}");
    }
    out
}

/// One filled circle per spot on a `W`-wide grid of unit cells.
pub fn spots_to_svg(spots: &SpotSet, grid_outline: bool) -> String {
    let cell = 8.0;
    let margin = 10.0;
    let rows = spots.rows().max(1) as f64;
    let cols = spots.width as f64;
    let mut doc = SvgDoc::new(cols * cell + 2.0 * margin, rows * cell + 2.0 * margin);
    if grid_outline {
        doc.rect((margin, margin), (cols * cell, rows * cell), "none", "#999999");
    }
    for &(a, b) in &spots.points {
        let center = (margin + (a as f64 + 0.5) * cell, margin + (b as f64 + 0.5) * cell);
        doc.circle(center, cell * 0.4, "black");
    }
    doc.finish()
}
