//! Labeled pairwise distance matrices over a set of sequences, for any
//! supported (representation, metric) combination.

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dcurve::{self, DCurve, DinucleotideCoordMap};
use crate::digraph::{self, DescriptorVector16, WeightParams};
use crate::error::{Error, Result};
use crate::seq::DnaSequence;
use crate::stats;
use crate::worm::{self, CovarianceDescriptor, GridWidth};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    DCurve,
    Worm,
    Digraph,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::DCurve => "dcurve",
            Method::Worm => "worm",
            Method::Digraph => "digraph",
        }
    }

    pub fn supported_metrics(self) -> &'static [Metric] {
        match self {
            Method::DCurve => &[Metric::Euclidean, Metric::OneMinusPcc],
            Method::Worm => &[Metric::Euclidean],
            Method::Digraph => &[Metric::Euclidean, Metric::OneMinusCosine, Metric::OneMinusPcc],
        }
    }

    pub fn check_metric(self, metric: Metric) -> Result<()> {
        if self.supported_metrics().contains(&metric) {
            return Ok(());
        }
        let names: Vec<&str> = self.supported_metrics().iter().map(|m| m.name()).collect();
        Err(Error::InvalidParameter(format!(
            "metric {} is not defined for method {}; use one of: {}",
            metric.name(),
            self.name(),
            names.join(", ")
        )))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dcurve" => Ok(Method::DCurve),
            "worm" => Ok(Method::Worm),
            "digraph" => Ok(Method::Digraph),
            other => Err(Error::InvalidParameter(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Euclidean,
    OneMinusCosine,
    OneMinusPcc,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::Euclidean => "euclidean",
            Metric::OneMinusCosine => "one_minus_cosine",
            Metric::OneMinusPcc => "one_minus_pcc",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" | "d1" => Ok(Metric::Euclidean),
            "one_minus_cosine" | "d2" => Ok(Metric::OneMinusCosine),
            "one_minus_pcc" | "d3" => Ok(Metric::OneMinusPcc),
            other => Err(Error::InvalidParameter(format!("unknown metric {other:?}"))),
        }
    }
}

/// Parameters for every representation; each method reads only its own.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MethodParams {
    pub weights: WeightParams,
    pub width: GridWidth,
    pub coord_map: DinucleotideCoordMap,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Descriptor {
    DCurve { curve: DCurve, vector: [f64; 3] },
    Worm(CovarianceDescriptor),
    Digraph(DescriptorVector16),
}

/// Computes one sequence's descriptor; errors carry the record id.
pub fn describe(seq: &DnaSequence, method: Method, params: &MethodParams) -> Result<Descriptor> {
    let inner = || -> Result<Descriptor> {
        Ok(match method {
            Method::DCurve => {
                let curve = dcurve::dcurve(seq, &params.coord_map)?;
                let vector = dcurve::dcurve_descriptor(&curve)?;
                Descriptor::DCurve { curve, vector }
            }
            Method::Worm => {
                let spots = worm::spot_set(&worm::encode_binary(seq), params.width);
                Descriptor::Worm(worm::covariance_descriptor(&spots)?)
            }
            Method::Digraph => Descriptor::Digraph(digraph::flatten(&digraph::adjacency_matrix(seq, &params.weights))),
        })
    };
    inner().map_err(|e| e.in_record(seq.id()))
}

/// Distance between two descriptors of the same method.
pub fn compare(x: &Descriptor, y: &Descriptor, metric: Metric) -> Result<f64> {
    match (x, y) {
        (Descriptor::DCurve { vector: vx, .. }, Descriptor::DCurve { vector: vy, .. })
            if metric == Metric::Euclidean =>
        {
            Ok(stats::euclidean(vx, vy))
        }
        (Descriptor::DCurve { curve: cx, .. }, Descriptor::DCurve { curve: cy, .. })
            if metric == Metric::OneMinusPcc =>
        {
            Ok((1.0 - dcurve::dcurve_pcc(cx, cy)?).clamp(0.0, 2.0))
        }
        (Descriptor::Worm(dx), Descriptor::Worm(dy)) if metric == Metric::Euclidean => {
            Ok(worm::descriptor_distance(dx, dy))
        }
        (Descriptor::Digraph(rx), Descriptor::Digraph(ry)) => match metric {
            Metric::Euclidean => Ok(digraph::d1(rx, ry)),
            Metric::OneMinusCosine => digraph::d2(rx, ry),
            Metric::OneMinusPcc => digraph::d3(rx, ry),
        },
        _ => Err(Error::InvalidParameter(format!(
            "metric {metric} does not apply to these descriptors"
        ))),
    }
}

/// Square, symmetric, zero-diagonal, nonnegative matrix with labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct DistanceMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    labels: Vec<String>,
    values: Vec<Vec<f64>>,
}

impl TryFrom<MatrixJson> for DistanceMatrix {
    type Error = Error;
    fn try_from(j: MatrixJson) -> Result<Self> {
        DistanceMatrix::from_rows(j.labels, j.values)
    }
}

impl From<DistanceMatrix> for MatrixJson {
    fn from(m: DistanceMatrix) -> Self {
        let values = m.row_vecs();
        MatrixJson {
            labels: m.labels,
            values,
        }
    }
}

impl DistanceMatrix {
    /// Validates the matrix axioms (exact symmetry and zero diagonal).
    pub fn from_rows(labels: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = labels.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "expected a {n}×{n} matrix to match {n} labels"
            )));
        }
        let values: Vec<f64> = rows.into_iter().flatten().collect();
        let m = DistanceMatrix { labels, values };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l) {
                return Err(Error::InvalidMatrix(format!("duplicate label {l:?}")));
            }
        }
        for i in 0..n {
            if self.get(i, i) != 0.0 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry for {:?} is {}, expected 0",
                    self.labels[i],
                    self.get(i, i)
                )));
            }
            for j in 0..n {
                let v = self.get(i, j);
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::InvalidMatrix(format!(
                        "entry ({:?}, {:?}) = {v} is not a finite nonnegative number",
                        self.labels[i], self.labels[j]
                    )));
                }
                if v != self.get(j, i) {
                    return Err(Error::InvalidMatrix(format!(
                        "entries ({0:?}, {1:?}) and ({1:?}, {0:?}) differ",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    pub fn row_vecs(&self) -> Vec<Vec<f64>> {
        let n = self.len();
        (0..n).map(|i| self.values[i * n..(i + 1) * n].to_vec()).collect()
    }

    /// Header row and column of labels; values in shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<&str> = std::iter::once("")
            .chain(self.labels.iter().map(String::as_str))
            .collect();
        w.write_record(&header).expect("in-memory csv write");
        for (i, label) in self.labels.iter().enumerate() {
            let mut row = vec![label.clone()];
            row.extend((0..self.len()).map(|j| self.get(i, j).to_string()));
            w.write_record(&row).expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }

    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(reader);
        let mut records = rdr.records();
        let header = records
            .next()
            .ok_or_else(|| Error::InvalidMatrix("empty CSV".into()))??;
        let labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
        let mut rows = Vec::with_capacity(labels.len());
        for (i, rec) in records.enumerate() {
            let rec = rec?;
            let row_label = rec.get(0).unwrap_or("");
            if labels.get(i).map(String::as_str) != Some(row_label) {
                return Err(Error::InvalidMatrix(format!(
                    "row {} is labeled {row_label:?}, expected the header order",
                    i + 1
                )));
            }
            let row = rec
                .iter()
                .skip(1)
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::InvalidMatrix(format!("row {row_label:?}: bad number {v:?}")))
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        DistanceMatrix::from_rows(labels, rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceOptions {
    /// Worker threads; `None` uses the current rayon pool.
    pub workers: Option<usize>,
    /// Compute each descriptor once up front instead of once per pair.
    pub cache: bool,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            workers: None,
            cache: true,
        }
    }
}

pub fn distance_matrix(
    seqs: &[DnaSequence],
    method: Method,
    metric: Metric,
    params: &MethodParams,
    options: DistanceOptions,
) -> Result<DistanceMatrix> {
    method.check_metric(metric)?;
    if seqs.len() < 2 {
        return Err(Error::TooFewSequences {
            needed: 2,
            got: seqs.len(),
        });
    }
    match options.workers {
        Some(0) => Err(Error::InvalidParameter("workers must be at least 1".into())),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?
            .install(|| compute(seqs, method, metric, params, options.cache)),
        None => compute(seqs, method, metric, params, options.cache),
    }
}

fn compute(
    seqs: &[DnaSequence],
    method: Method,
    metric: Metric,
    params: &MethodParams,
    cache: bool,
) -> Result<DistanceMatrix> {
    let n = seqs.len();
    let descriptors = if cache {
        Some(
            seqs.iter()
                .map(|s| describe(s, method, params))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let results: Vec<Result<f64>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let value = match &descriptors {
                Some(d) => compare(&d[i], &d[j], metric),
                None => {
                    let x = describe(&seqs[i], method, params)?;
                    let y = describe(&seqs[j], method, params)?;
                    compare(&x, &y, metric)
                }
            };
            value.map_err(|e| match e {
                Error::Record { .. } => e,
                e => e.in_pair(seqs[i].id(), seqs[j].id()),
            })
        })
        .collect();
    let mut values = vec![0.0; n * n];
    for (&(i, j), r) in pairs.iter().zip(results) {
        let v = r?;
        values[i * n + j] = v;
        values[j * n + i] = v;
    }
    let labels = seqs.iter().map(|s| s.id().to_string()).collect();
    let m = DistanceMatrix { labels, values };
    m.validate()?;
    Ok(m)
}
