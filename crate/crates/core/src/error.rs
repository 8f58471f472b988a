use thiserror::Error;

/// Errors produced by betakit operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("binomial({n}, {k}) is undefined: k exceeds n")]
    BinomialRange { n: u64, k: u64 },

    #[error("argument {name} = {value} is outside [0, 1/2]")]
    Domain { name: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular point is not removable: {0}")]
    NotRemovable(String),

    #[error("evaluation budget exceeded: {0}")]
    Budget(String),

    #[error("could not parse rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
