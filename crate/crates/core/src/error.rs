use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A feature cell that is not a finite real. Rows and columns are 1-based
    /// and count data rows only (a header row is not counted).
    #[error("row {row}, column {column}: cannot parse {value:?} as a finite number")]
    Parse {
        row: usize,
        column: usize,
        value: String,
    },

    #[error("malformed dataset: {0}")]
    Format(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// Nearest enemies are undefined when every instance shares one label.
    #[error("no enemy instances: instance {index} has no instance of a different class")]
    NoEnemy { index: usize },

    #[error("seq-Phragmen ran out of approved candidates at iteration {iteration} (target {target})")]
    Exhausted { iteration: usize, target: usize },

    /// The brute-force axiom oracles refuse to enumerate more than `bound`
    /// candidate subsets.
    #[error("enumeration of {count} subsets at level {level} exceeds the bound {bound}")]
    EnumerationBound { level: usize, count: u128, bound: u128 },

    #[error("fold {fold}: {source}")]
    Fold {
        fold: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
