use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters (n={n}, k={k}): need n >= 3 and 0 < k < n/2")]
    InvalidParams { n: i64, k: i64 },

    #[error("no odd cycles: G({n},{k}) is bipartite")]
    NoOddCycles { n: usize, k: usize },

    #[error("{0}")]
    Domain(String),

    #[error("instance too large: {what} is {size}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("search budget exhausted after {expansions} node expansions")]
    BudgetExhausted { expansions: u64 },

    #[error("table is not closed: entry ({row},{col}) = {value} is outside 0..{order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
