use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `position` is 1-based, counted in characters.
    #[error(
        "invalid orientation character {found:?} at position {position} (expected 'F' or 'B')"
    )]
    InvalidFlag { position: usize, found: char },

    #[error("a path needs at least one vertex")]
    EmptyPath,

    #[error("coloring has {coloring} entries but the path has {path} vertices")]
    SizeMismatch { path: usize, coloring: usize },

    #[error("vertex {vertex} out of range for a path on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("exact search refused: n = {n} exceeds the bound {max_n}")]
    TooLarge { n: usize, max_n: usize },

    #[error("closed-form minimum undefined for n = {0} (requires n >= 4)")]
    FormulaUndefined(usize),

    #[error("vertex range {lo}..={hi} is empty or starts below {min}")]
    BadRange { lo: usize, hi: usize, min: usize },

    #[error("{0}")]
    InvalidArgument(String),
}
