use crate::lattice::AxialCoord;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate arithmetic overflowed")]
    Overflow,

    #[error("{what} must be at least {min}, got {value}")]
    TooSmall {
        what: &'static str,
        value: u64,
        min: u64,
    },

    #[error("shape has no coins")]
    EmptyShape,

    #[error("shape file has no coins")]
    EmptyFile,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate coordinate {coord}")]
    DuplicateCoordinate { line: usize, coord: AxialCoord },

    #[error("placement {placement} is not optimal (overlap {overlap}, maximum {max_overlap})")]
    NotOptimal {
        placement: String,
        overlap: usize,
        max_overlap: usize,
    },

    #[error("placement index {index} out of range; valid indices are 0..{count}")]
    PlacementIndexOutOfRange { index: usize, count: usize },
}
