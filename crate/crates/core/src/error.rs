use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed array string: {0}")]
    Syntax(String),
    #[error("array halves have unequal length ({b} b-entries, {c} c-entries)")]
    UnequalHalves { b: usize, c: usize },
    #[error("c1 must be 1, found {0}")]
    FirstC(i64),
    #[error("non-positive entry {value} at {position}")]
    NonPositive { position: String, value: i64 },
    #[error("inadmissible array: a{index} = {value} < 0")]
    Inadmissible { index: usize, value: i64 },
    #[error("failed to isolate {expected} distinct real eigenvalues (found {found})")]
    RootIsolation { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("invalid graph parameters: {0}")]
    GraphParams(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not distance-regular: {0}")]
    NotDistanceRegular(String),
    #[error("no vertex has two non-adjacent neighbours")]
    LocallyComplete,
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
