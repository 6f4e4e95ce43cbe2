use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: sequence data found before any '>' header")]
    MissingHeader { line: usize },

    #[error(
        "record {id:?}: invalid residue {residue:?} at line {line}, column {column} (residue position {position})"
    )]
    InvalidResidue {
        id: String,
        residue: char,
        line: usize,
        column: usize,
        position: usize,
    },

    #[error("record {id:?} contains no residues")]
    EmptyRecord { id: String },

    #[error("no FASTA records in input")]
    NoRecords,

    #[error("sequence too short for dinucleotide curve (length {len}, need at least 2)")]
    TooShortForCurve { len: usize },

    #[error("curve has no steps")]
    EmptyCurve,

    #[error("PCC undefined for zero-variance series")]
    ZeroVarianceSeries,

    #[error("PCC undefined for zero-variance vector")]
    ZeroVarianceVector,

    #[error("descriptor undefined for empty spot set")]
    EmptySpotSet,

    #[error("angle undefined for zero vector")]
    ZeroVector,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sequence {id:?} has {len} bases, above the alignment limit of {limit}")]
    SequenceTooLong { id: String, len: usize, limit: usize },

    #[error("need at least {needed} sequences, got {got}")]
    TooFewSequences { needed: usize, got: usize },

    #[error("need at least {needed} taxa, got {got}")]
    TooFewTaxa { needed: usize, got: usize },

    #[error("sequence {id:?}: {source}")]
    Record {
        id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("pair ({first:?}, {second:?}): {source}")]
    Pair {
        first: String,
        second: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{stage} stage: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid distance matrix: {0}")]
    InvalidMatrix(String),

    #[error("malformed Newick at byte {offset}: {message}")]
    Newick { offset: usize, message: String },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn in_record(self, id: &str) -> Error {
        Error::Record {
            id: id.to_string(),
            source: Box::new(self),
        }
    }

    pub(crate) fn in_pair(self, first: &str, second: &str) -> Error {
        Error::Pair {
            first: first.to_string(),
            second: second.to_string(),
            source: Box::new(self),
        }
    }

    pub(crate) fn in_stage(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}
