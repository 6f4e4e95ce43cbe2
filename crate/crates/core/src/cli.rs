//! `seqsim` command-line front end.
//!
//! Every subcommand reads FASTA (or, for `tree`, a distance matrix) from
//! `-i` (default stdin) and writes to `-o` (default stdout). File outputs are
//! written to a temporary file and renamed into place only on success.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::align::{dot_matrix, AlignMode, Aligner, ScoringScheme, DEFAULT_MAX_LEN};
use crate::dcurve::{curve_to_csv, curve_to_svg, dcurve, dcurve_descriptor, DinucleotideCoordMap};
use crate::digraph::{self, WeightParams};
use crate::distance::{distance_matrix, DistanceMatrix, DistanceOptions, Method, MethodParams, Metric};
use crate::error::Error;
use crate::pipeline::TreeAlgorithm;
use crate::seq::fasta::{parse_fasta_with, FastaOptions};
use crate::seq::translation::{translate, CodonTable, ReadingFrame};
use crate::seq::DnaSequence;
use crate::worm::{self, GridWidth};

pub use crate::pipeline::pipeline;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DATA: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "seqsim",
    version,
    about = "Alignment-free DNA similarity, pairwise alignment and distance trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input file, `-` for stdin
    #[arg(short, long, default_value = "-")]
    input: PathBuf,
    /// Output file, `-` for stdout
    #[arg(short, long, default_value = "-")]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct FastaIn {
    #[command(flatten)]
    io: Io,
    /// Drop IUPAC ambiguity codes (N, R, Y, ...) instead of failing
    #[arg(long)]
    strip_ambiguous: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transcribe and translate each record with the standard genetic code
    Translate {
        #[command(flatten)]
        input: FastaIn,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        frame: u8,
    },
    /// D-curve step table, projection plot or descriptor
    Dcurve {
        #[command(flatten)]
        input: FastaIn,
        #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
        format: CurveFormat,
        /// Record to use when the input holds several (csv/svg)
        #[arg(long)]
        record: Option<String>,
    },
    /// Worm-curve dark spots or covariance descriptor
    Worm {
        #[command(flatten)]
        input: FastaIn,
        /// Grid width, or `auto` for ceil(sqrt(2n))
        #[arg(long, default_value = "auto", value_parser = parse_width)]
        width: GridWidth,
        #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
        format: CurveFormat,
        /// Draw the grid outline in SVG output
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        record: Option<String>,
    },
    /// Weighted-digraph 4x4 matrix or 16-dim descriptor
    Digraph {
        #[command(flatten)]
        input: FastaIn,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, value_enum, default_value_t = DigraphFormat::Json)]
        format: DigraphFormat,
        /// Also write every individual edge (CSV) to this file
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long)]
        record: Option<String>,
    },
    /// Align the first two records
    Align {
        #[command(flatten)]
        input: FastaIn,
        #[arg(long, value_enum, default_value_t = ModeArg::Global)]
        mode: ModeArg,
        #[arg(long = "match", default_value_t = 1, allow_negative_numbers = true)]
        match_score: i32,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        mismatch: i32,
        #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
        gap: i32,
        /// Reject inputs longer than this many bases
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Dot matrix of the first two records
    Dotplot {
        #[command(flatten)]
        input: FastaIn,
        #[arg(long, default_value_t = NonZeroUsize::MIN)]
        window: NonZeroUsize,
        #[arg(long, default_value_t = NonZeroUsize::MIN)]
        stringency: NonZeroUsize,
        #[arg(long, value_enum, default_value_t = DotFormat::Pbm)]
        format: DotFormat,
    },
    /// Pairwise distance matrix over all records
    Distmat {
        #[command(flatten)]
        input: FastaIn,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// euclidean, one_minus_cosine or one_minus_pcc (aliases d1, d2, d3)
        #[arg(long, value_parser = parse_metric)]
        metric: Metric,
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, default_value = "auto", value_parser = parse_width)]
        width: GridWidth,
        /// Worker threads (default: available parallelism)
        #[arg(long, env = "SEQSIM_WORKERS")]
        workers: Option<NonZeroUsize>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Build a tree from a distance matrix (CSV or JSON)
    Tree {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value_t = AlgoArg::Nj)]
        algo: AlgoArg,
        #[arg(long, value_enum, default_value_t = TreeFormat::Newick)]
        format: TreeFormat,
    },
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// Distance-decay exponent of the edge weights
    #[arg(long, env = "SEQSIM_ALPHA", default_value_t = digraph::DEFAULT_ALPHA, value_parser = parse_alpha)]
    alpha: f64,
    /// Ignore base pairs further apart than this (default: unlimited)
    #[arg(long)]
    max_distance: Option<NonZeroUsize>,
}

impl WeightArgs {
    fn params(&self) -> WeightParams {
        WeightParams::new(self.alpha)
            .expect("alpha validated by the parser")
            .with_max_distance(self.max_distance)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CurveFormat {
    Csv,
    Svg,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DigraphFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DotFormat {
    Pbm,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TreeFormat {
    Newick,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Global,
    Local,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Dcurve,
    Worm,
    Digraph,
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Nj,
    Upgma,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    WeightParams::new(v).map(|p| p.alpha()).map_err(|e| e.to_string())
}

fn parse_width(s: &str) -> Result<GridWidth, String> {
    if s == "auto" {
        return Ok(GridWidth::Auto);
    }
    let w: usize = s
        .parse()
        .map_err(|_| format!("{s:?} is neither `auto` nor a positive integer"))?;
    GridWidth::fixed(w).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Data(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Data(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Data(Error::Io(e))
    }
}

/// Parses `args` (program name first) and runs one subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let _ = if informational {
                write!(stdout, "{}", e.render())
            } else {
                write!(stderr, "{}", e.render())
            };
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    }
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| {
            Failure::Data(Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", path.display()),
            )))
        })
    }
}

fn read_fasta(input: &FastaIn, stdin: &mut dyn Read) -> Result<Vec<DnaSequence>, Failure> {
    let bytes = read_input(&input.io.input, stdin)?;
    let options = FastaOptions {
        strip_ambiguous: input.strip_ambiguous,
    };
    let records = parse_fasta_with(bytes.as_slice(), options)?;
    if records.is_empty() {
        return Err(Error::NoRecords.into());
    }
    Ok(records)
}

/// Writes to stdout, or to a sibling temp file renamed over `path`.
fn write_output(path: &Path, content: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    if path == Path::new("-") {
        stdout.write_all(content)?;
        stdout.flush()?;
        return Ok(());
    }
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(content)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Failure::Data(Error::Io(e.error)))?;
    Ok(())
}

fn pick<'a>(records: &'a [DnaSequence], id: Option<&str>) -> Result<&'a DnaSequence, Failure> {
    match id {
        Some(id) => records
            .iter()
            .find(|r| r.id() == id)
            .ok_or_else(|| Failure::Usage(format!("no record with id {id:?} in input"))),
        None if records.len() == 1 => Ok(&records[0]),
        None => Err(Failure::Usage(format!(
            "input holds {} records; choose one with --record",
            records.len()
        ))),
    }
}

fn first_two(records: &[DnaSequence]) -> Result<(&DnaSequence, &DnaSequence), Failure> {
    match records {
        [a, b, ..] => Ok((a, b)),
        _ => Err(Error::TooFewSequences {
            needed: 2,
            got: records.len(),
        }
        .into()),
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("json output serializes");
    s.push('\n');
    s
}

fn execute(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    match command {
        Command::Translate { input, frame } => {
            let records = read_fasta(&input, stdin)?;
            let frame = ReadingFrame::try_from(frame)?;
            let table = CodonTable::standard();
            let mut out = String::new();
            for rec in &records {
                let t = translate(&rec.transcribe(), frame, &table);
                let stops: Vec<String> = t.stop_positions.iter().map(|p| p.to_string()).collect();
                out.push_str(&format!(
                    ">{} frame={} stops={} leftover={}\n{}\n",
                    rec.id(),
                    frame.offset(),
                    if stops.is_empty() {
                        "-".to_string()
                    } else {
                        stops.join(",")
                    },
                    t.leftover,
                    t.to_one_letter()
                ));
            }
            write_output(&input.io.output, out.as_bytes(), stdout)
        }
        Command::Dcurve { input, format, record } => {
            let records = read_fasta(&input, stdin)?;
            let map = DinucleotideCoordMap::standard();
            let out = match format {
                CurveFormat::Json => {
                    let mut out = String::new();
                    for rec in &records {
                        let curve = dcurve(rec, &map).map_err(|e| e.in_record(rec.id()))?;
                        let descriptor = dcurve_descriptor(&curve)?;
                        out.push_str(&json_line(&serde_json::json!({
                            "id": rec.id(),
                            "steps": curve.len(),
                            "descriptor": descriptor,
                        })));
                    }
                    out
                }
                CurveFormat::Csv | CurveFormat::Svg => {
                    let rec = pick(&records, record.as_deref())?;
                    let curve = dcurve(rec, &map).map_err(|e| e.in_record(rec.id()))?;
                    match format {
                        CurveFormat::Csv => curve_to_csv(&curve),
                        _ => curve_to_svg(&curve, rec.id()),
                    }
                }
            };
            write_output(&input.io.output, out.as_bytes(), stdout)
        }
        Command::Worm {
            input,
            width,
            format,
            grid,
            record,
        } => {
            let records = read_fasta(&input, stdin)?;
            let out = match format {
                CurveFormat::Json => {
                    let mut out = String::new();
                    for rec in &records {
                        let spots = worm::spot_set(&worm::encode_binary(rec), width);
                        let d = worm::covariance_descriptor(&spots).map_err(|e| e.in_record(rec.id()))?;
                        out.push_str(&json_line(&serde_json::json!({
                            "id": rec.id(),
                            "width": spots.width(),
                            "spots": d.count,
                            "mean": [d.mean.0, d.mean.1],
                            "d": d.d,
                        })));
                    }
                    out
                }
                CurveFormat::Csv | CurveFormat::Svg => {
                    let rec = pick(&records, record.as_deref())?;
                    let spots = worm::spot_set(&worm::encode_binary(rec), width);
                    match format {
                        CurveFormat::Csv => worm::spots_to_csv(&spots),
                        _ => worm::spots_to_svg(&spots, grid),
                    }
                }
            };
            write_output(&input.io.output, out.as_bytes(), stdout)
        }
        Command::Digraph {
            input,
            weights,
            format,
            edges,
            record,
        } => {
            let records = read_fasta(&input, stdin)?;
            let params = weights.params();
            let selected: Vec<&DnaSequence> = match (format, record.as_deref()) {
                (DigraphFormat::Json, None) => records.iter().collect(),
                (_, id) => vec![pick(&records, id)?],
            };
            let mut out = String::new();
            for rec in &selected {
                let m = digraph::adjacency_matrix(rec, &params);
                match format {
                    DigraphFormat::Json => out.push_str(&json_line(&digraph::DescriptorRecord::new(rec.id(), &m))),
                    DigraphFormat::Csv => out.push_str(&digraph::matrix_to_csv(&m)),
                }
            }
            if let Some(path) = edges {
                let rec = pick(&records, record.as_deref())?;
                let csv = digraph::edges_to_csv(&digraph::edge_list(rec, &params));
                write_output(&path, csv.as_bytes(), stdout)?;
            }
            write_output(&input.io.output, out.as_bytes(), stdout)
        }
        Command::Align {
            input,
            mode,
            match_score,
            mismatch,
            gap,
            max_len,
        } => {
            let scheme = ScoringScheme::new(match_score, mismatch, gap).map_err(|e| Failure::Usage(e.to_string()))?;
            let records = read_fasta(&input, stdin)?;
            let (a, b) = first_two(&records)?;
            let mode = match mode {
                ModeArg::Global => AlignMode::Global,
                ModeArg::Local => AlignMode::Local,
            };
            let result = Aligner { scheme, max_len }.align(a, b, mode)?;
            write_output(&input.io.output, result.to_text(a.id(), b.id()).as_bytes(), stdout)
        }
        Command::Dotplot {
            input,
            window,
            stringency,
            format,
        } => {
            if stringency > window {
                return Err(Failure::Usage(format!(
                    "--stringency {stringency} exceeds --window {window}"
                )));
            }
            let records = read_fasta(&input, stdin)?;
            let (a, b) = first_two(&records)?;
            let m = dot_matrix(a, b, window.get(), stringency.get())?;
            let out = match format {
                DotFormat::Pbm => m.to_pbm(),
                DotFormat::Svg => m.to_svg(a.id(), b.id()),
            };
            write_output(&input.io.output, out.as_bytes(), stdout)
        }
        Command::Distmat {
            input,
            method,
            metric,
            weights,
            width,
            workers,
            format,
        } => {
            let method = match method {
                MethodArg::Dcurve => Method::DCurve,
                MethodArg::Worm => Method::Worm,
                MethodArg::Digraph => Method::Digraph,
            };
            method.check_metric(metric).map_err(|e| Failure::Usage(e.to_string()))?;
            let records = read_fasta(&input, stdin)?;
            let params = MethodParams {
                weights: weights.params(),
                width,
                ..MethodParams::default()
            };
            let options = DistanceOptions {
                workers: workers.map(NonZeroUsize::get),
                cache: true,
            };
            let m = distance_matrix(&records, method, metric, &params, options)?;
            let out = match format {
                MatrixFormat::Csv => m.to_csv(),
                MatrixFormat::Json => {
                    let mut s = m.to_json();
                    s.push('\n');
                    s
                }
            };
            write_output(&input.io.output, out.as_bytes(), stdout)
        }
        Command::Tree { io, algo, format } => {
            let bytes = read_input(&io.input, stdin)?;
            let text = String::from_utf8(bytes).map_err(|_| Error::InvalidMatrix("input is not UTF-8".into()))?;
            let m = if text.trim_start().starts_with('{') {
                DistanceMatrix::from_json(&text)?
            } else {
                DistanceMatrix::from_csv(text.as_bytes())?
            };
            let algorithm = match algo {
                AlgoArg::Nj => TreeAlgorithm::NeighborJoining,
                AlgoArg::Upgma => TreeAlgorithm::Upgma,
            };
            let tree = algorithm.build(&m)?;
            for w in tree.warnings() {
                let _ = writeln!(stderr, "warning: {w}");
            }
            let out = match format {
                TreeFormat::Newick => tree.to_newick() + "\n",
                TreeFormat::Svg => tree.to_svg(),
            };
            write_output(&io.output, out.as_bytes(), stdout)
        }
    }
}
