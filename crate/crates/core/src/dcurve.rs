//! D-curve representation of a DNA sequence.
//!
//! Each of the 16 dinucleotides is placed at an integer point `(a, b)` with
//! `a, b ∈ {±1, ±2}`: the first base picks the quadrant and the second base
//! picks the magnitudes. Walking the sequence's overlapping dinucleotides
//! gives per-step records `(a, b, k, c = a·b)`; their prefix sums
//! `(a′, b′, c′)` trace the curve.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::seq::{Base, Dinucleotide, DnaSequence};
use crate::stats;
use crate::svg::{PlotArea, SvgDoc};

/// Quadrant coordinates for all 16 dinucleotides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DinucleotideCoordMap {
    coords: [(i64, i64); 16],
}

fn pair_index(d: Dinucleotide) -> usize {
    d.0.index() * 4 + d.1.index()
}

impl DinucleotideCoordMap {
    /// Sign from the first base: A (+,+), G (−,+), C (−,−), T (+,−).
    /// Magnitude from the second base: A (1,1), G (1,2), T (2,1), C (2,2).
    pub fn standard() -> Self {
        let sign = |b: Base| match b {
            Base::A => (1, 1),
            Base::G => (-1, 1),
            Base::C => (-1, -1),
            Base::T => (1, -1),
        };
        let magnitude = |b: Base| match b {
            Base::A => (1, 1),
            Base::G => (1, 2),
            Base::T => (2, 1),
            Base::C => (2, 2),
        };
        let mut coords = [(0, 0); 16];
        for d in Dinucleotide::all() {
            let (sa, sb) = sign(d.0);
            let (ma, mb) = magnitude(d.1);
            coords[pair_index(d)] = (sa * ma, sb * mb);
        }
        DinucleotideCoordMap { coords }
    }

    /// Builds a custom map. Coordinates are indexed row-major by
    /// (first, second) base in A, C, G, T order and must cover `{±1, ±2}²`
    /// exactly once.
    pub fn new(coords: [(i64, i64); 16]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in &coords {
            let ok = |v: i64| matches!(v, -2 | -1 | 1 | 2);
            if !ok(a) || !ok(b) || !seen.insert((a, b)) {
                return Err(Error::InvalidParameter(format!(
                    "coordinate map entry ({a}, {b}) is out of range or repeated"
                )));
            }
        }
        Ok(DinucleotideCoordMap { coords })
    }

    pub fn get(&self, d: Dinucleotide) -> (i64, i64) {
        self.coords[pair_index(d)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Dinucleotide, (i64, i64))> + '_ {
        Dinucleotide::all().map(move |d| (d, self.get(d)))
    }
}

impl Default for DinucleotideCoordMap {
    fn default() -> Self {
        DinucleotideCoordMap::standard()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveStep {
    pub dinucleotide: Dinucleotide,
    pub a: i64,
    pub b: i64,
    /// 1-based step index.
    pub k: usize,
    pub c: i64,
}

/// Running totals `(a′, b′, c′)` after a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CumulativePoint {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DCurve {
    steps: Vec<CurveStep>,
    cumulative: Vec<CumulativePoint>,
}

impl DCurve {
    pub fn steps(&self) -> &[CurveStep] {
        &self.steps
    }

    pub fn cumulative(&self) -> &[CumulativePoint] {
        &self.cumulative
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

pub fn dcurve(seq: &DnaSequence, map: &DinucleotideCoordMap) -> Result<DCurve> {
    if seq.len() < 2 {
        return Err(Error::TooShortForCurve { len: seq.len() });
    }
    let mut steps = Vec::with_capacity(seq.len() - 1);
    let mut cumulative = Vec::with_capacity(seq.len() - 1);
    let mut acc = CumulativePoint::default();
    for (i, d) in seq.dinucleotides().into_iter().enumerate() {
        let (a, b) = map.get(d);
        let c = a * b;
        acc.a += a;
        acc.b += b;
        acc.c += c;
        steps.push(CurveStep {
            dinucleotide: d,
            a,
            b,
            k: i + 1,
            c,
        });
        cumulative.push(acc);
    }
    Ok(DCurve { steps, cumulative })
}

/// Terminal point of the curve divided by its step count.
pub fn dcurve_descriptor(curve: &DCurve) -> Result<[f64; 3]> {
    let last = curve.cumulative.last().ok_or(Error::EmptyCurve)?;
    let m = curve.len() as f64;
    Ok([last.a as f64 / m, last.b as f64 / m, last.c as f64 / m])
}

/// Index into a series of length `len` nearest to position `t` of `target`
/// evenly spaced samples (halves round up).
fn nearest_index(t: usize, target: usize, len: usize) -> usize {
    if target <= 1 {
        return 0;
    }
    (2 * t * (len - 1) + (target - 1)) / (2 * (target - 1))
}

/// Resamples a cumulative series to `target` points by nearest index.
pub fn resample(series: &[CumulativePoint], target: usize) -> Vec<CumulativePoint> {
    (0..target)
        .map(|t| series[nearest_index(t, target, series.len())])
        .collect()
}

/// Mean of the per-component Pearson correlations of two cumulative series
/// after resampling both to the shorter length.
pub fn cumulative_pcc(x: &[CumulativePoint], y: &[CumulativePoint]) -> Result<f64> {
    if x.len() < 2 || y.len() < 2 {
        return Err(Error::InvalidParameter(
            "curve PCC needs at least 2 steps per curve".into(),
        ));
    }
    let m = x.len().min(y.len());
    let (rx, ry) = (resample(x, m), resample(y, m));
    let component = |f: fn(&CumulativePoint) -> i64| -> Result<f64> {
        let xs: Vec<f64> = rx.iter().map(|p| f(p) as f64).collect();
        let ys: Vec<f64> = ry.iter().map(|p| f(p) as f64).collect();
        stats::pearson(&xs, &ys).ok_or(Error::ZeroVarianceSeries)
    };
    let ra = component(|p| p.a)?;
    let rb = component(|p| p.b)?;
    let rc = component(|p| p.c)?;
    Ok((ra + rb + rc) / 3.0)
}

pub fn dcurve_pcc(x: &DCurve, y: &DCurve) -> Result<f64> {
    cumulative_pcc(&x.cumulative, &y.cumulative)
}

pub const CSV_HEADER: &str = "k,a,b,c,a_cum,b_cum,c_cum";

pub fn curve_to_csv(curve: &DCurve) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (s, p) in curve.steps.iter().zip(&curve.cumulative) {
        let _ = writeln!(out, "{},{},{},{},{},{},{}", s.k, s.a, s.b, s.c, p.a, p.b, p.c);
    }
    out
}

/// Two panels: the `(a′, b′)` projection on top and the `k` vs `a′`, `b′`,
/// `c′` traces below. Every polyline starts at the origin.
pub fn curve_to_svg(curve: &DCurve, title: &str) -> String {
    let (w, panel_h, margin) = (640.0, 300.0, 48.0);
    let mut doc = SvgDoc::new(w, 2.0 * panel_h + 3.0 * margin);
    doc.text((w / 2.0, 20.0), "middle", title);

    let mut projection = vec![(0.0, 0.0)];
    projection.extend(curve.cumulative.iter().map(|p| (p.a as f64, p.b as f64)));
    let area = PlotArea::fit(
        projection.iter().copied(),
        (margin, margin),
        (w - 2.0 * margin, panel_h),
    );
    area.draw_axes(&mut doc, "a'", "b'");
    let mapped: Vec<_> = projection.iter().map(|&p| area.map(p)).collect();
    doc.polyline("projection-ab", &mapped, "#1f77b4");

    let trace = |f: fn(&CumulativePoint) -> i64| -> Vec<(f64, f64)> {
        let mut pts = vec![(0.0, 0.0)];
        pts.extend(
            curve
                .cumulative
                .iter()
                .enumerate()
                .map(|(i, p)| ((i + 1) as f64, f(p) as f64)),
        );
        pts
    };
    let traces = [
        ("trace-a", trace(|p| p.a), "#d62728"),
        ("trace-b", trace(|p| p.b), "#2ca02c"),
        ("trace-c", trace(|p| p.c), "#9467bd"),
    ];
    let area = PlotArea::fit(
        traces.iter().flat_map(|(_, pts, _)| pts.iter().copied()),
        (margin, 2.0 * margin + panel_h),
        (w - 2.0 * margin, panel_h),
    );
    area.draw_axes(&mut doc, "k", "a' b' c'");
    for (id, pts, color) in &traces {
        let mapped: Vec<_> = pts.iter().map(|&p| area.map(p)).collect();
        doc.polyline(id, &mapped, color);
    }
    doc.finish()
}
