//! Crate-wide error type.

use std::fmt;

/// Errors reported by game construction, parsing, and analysis routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An index or strategy entry is outside its valid range.
    Range(String),
    /// An array has the wrong length for the game it belongs to.
    Shape(String),
    /// The state space (or a graph) exceeds the configured size budget.
    Budget(String),
    /// A theorem or generator hypothesis is violated (for example
    /// `pi(R) > 1/2`, or `delta0 <= 0` for a coordination game).
    Hypothesis(String),
    /// The game admits no exact potential; carries the worst violation found.
    NotPotential {
        max_violation: f64,
        witness: String,
    },
    /// Detailed balance fails, so spectral analysis does not apply.
    NotReversible { max_violation: f64 },
    /// The chain's support graph is not ergodic (strong connectivity or
    /// aperiodicity failed, typically from exponent underflow at huge beta).
    NotErgodic(String),
    /// A linear solve or eigensolve failed to reach its tolerance.
    Numeric(String),
    /// Mixing-time iteration hit its step cap; carries the distance curve.
    Truncated { cap: usize, distances: Vec<f64> },
    /// JSON syntax error, with position information from the parser.
    Syntax(String),
    /// Structurally valid JSON that does not describe a game document.
    Document(String),
    /// Operation is not defined for this game representation.
    Unsupported(String),
    /// Invalid argument (bad permutation, edge not on a path, ...).
    Argument(String),
    /// File system failure in the command-line layer.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Range(msg) => write!(f, "range error: {msg}"),
            Error::Shape(msg) => write!(f, "shape error: {msg}"),
            Error::Budget(msg) => write!(f, "budget exceeded: {msg}"),
            Error::Hypothesis(msg) => write!(f, "hypothesis violated: {msg}"),
            Error::NotPotential {
                max_violation,
                witness,
            } => write!(
                f,
                "not a potential game: worst violation {max_violation:e} at {witness}"
            ),
            Error::NotReversible { max_violation } => write!(
                f,
                "chain is not reversible: max detailed-balance violation {max_violation:e}"
            ),
            Error::NotErgodic(msg) => write!(f, "chain is not ergodic: {msg}"),
            Error::Numeric(msg) => write!(f, "numerical failure: {msg}"),
            Error::Truncated { cap, .. } => {
                write!(f, "mixing-time iteration truncated at cap {cap}")
            }
            Error::Syntax(msg) => write!(f, "syntax error: {msg}"),
            Error::Document(msg) => write!(f, "document error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
