use thiserror::Error;

use crate::volume::Point3;

#[derive(Debug, Error)]
pub enum Error {
    #[error("adjacency must be 6, 18 or 26, got {0}")]
    InvalidAdjacency(u32),
    #[error("volume dimensions must be positive, got {0}x{1}x{2}")]
    InvalidDims(usize, usize, usize),
    #[error("expected {expected} voxels, found {found}")]
    VoxelCount { expected: usize, found: usize },
    #[error("point {0} is outside the volume")]
    OutOfBounds(Point3),
    #[error("point {0} is not an object point")]
    NotObject(Point3),
    #[error("malformed template table, line {line}: {msg}")]
    TemplateTable { line: usize, msg: String },
    #[error("unknown variant `{0}` (expected original, corrected or corrected-errata)")]
    UnknownVariant(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid fixture parameters: {0}")]
    FixtureParams(String),
    #[error("parse error, line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("binary volume: {0}")]
    Binary(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
