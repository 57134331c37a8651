use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i128),
    #[error("form {0:?} does not lie in L2")]
    NotInL2([i64; 4]),
    #[error("form {0:?} has zero discriminant")]
    Degenerate([i64; 4]),
    #[error("invalid lattice index {0}")]
    InvalidLattice(u8),
    #[error("integrity violation: {0}")]
    Integrity(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
