use thiserror::Error;

use crate::diagram::Violation;

/// Errors raised by the library. Input problems and Cauchon violations are
/// kept as separate variants so callers can tell malformed input apart from
/// a well-formed grid that simply fails the Cauchon test.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grid has {found_rows}x{found_cols} cells, expected {rows}x{cols}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },

    #[error("diagram must have at least one row and one column")]
    EmptyShape,

    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    TooLarge(usize),

    #[error("bad character {ch:?} in row {row} (expected '+' or '0')")]
    BadCharacter { row: usize, ch: char },

    #[error("row {row} has {found} cells, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("grid is not a Cauchon diagram ({} violating square(s))", .0.len())]
    NotCauchon(Vec<Violation>),

    #[error("square ({row},{col}) lies outside the {rows}x{cols} grid")]
    SquareOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("border box {k} out of range 1..={max}")]
    BorderBoxOutOfRange { k: usize, max: usize },

    #[error("element {element} outside 1..={bound}")]
    ElementOutOfRange { element: usize, bound: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("permutation is not restricted for (m,n) = ({m},{n})")]
    NotRestricted { m: usize, n: usize },

    #[error("shape mismatch: ({0},{1}) vs ({2},{3})")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("operation requires a square shape, got {m}x{n}")]
    NotSquare { m: usize, n: usize },

    #[error("generating set does not contain the quantum determinant")]
    MissingDeterminant,

    #[error("quantum minor must have at least one row")]
    EmptyMinor,

    #[error("{0} exceeds the supported desk-scale bound")]
    ScaleLimit(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
