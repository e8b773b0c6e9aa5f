use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyDimension { rows: usize, cols: usize },

    #[error("{cols} columns exceed the supported row width of {max}")]
    TooManyColumns { cols: usize, max: usize },

    #[error("{rows} rows exceed the supported maximum of {max}")]
    TooManyRows { rows: usize, max: usize },

    #[error("position ({row}, {col}) lies outside a {rows}x{cols} matrix")]
    PositionOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("duplicate position ({row}, {col})")]
    DuplicatePosition { row: usize, col: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("malformed matrix string: {0}")]
    MalformedMatrix(String),

    #[error("vertex {index} out of range for a side of size {size}")]
    VertexOutOfRange { index: usize, size: usize },

    #[error("k = {k} outside 0..={max}")]
    OnesOutOfRange { k: usize, max: usize },

    #[error("{rows}x{cols} census is outside the supported range (m*n <= {max_cells})")]
    UnsupportedShape {
        rows: usize,
        cols: usize,
        max_cells: usize,
    },

    #[error("C({cells}, {k}) = {count} combinations exceeds the budget of {budget}")]
    BudgetExceeded {
        cells: usize,
        k: usize,
        count: String,
        budget: u64,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("malformed census document: {0}")]
    MalformedDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
