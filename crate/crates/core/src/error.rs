use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("inadmissible rho index {0:?}: parts must be >= 1 and the last part >= 2")]
    InadmissibleRho(Vec<u32>),

    #[error("inadmissible eta index {0:?}: parts must be >= 1 and the weight >= 2")]
    InadmissibleEta(Vec<u32>),

    #[error("pole: denominator {0} vanishes")]
    Pole(String),

    #[error("zeta({0}) diverges; the argument must be >= 2")]
    Divergent(u32),

    #[error("tolerance {tolerance:e} needs {needed} terms, beyond the cap of {cap}")]
    OracleCap { tolerance: f64, needed: u64, cap: u64 },

    #[error("quadrature did not reach {tolerance:e} within {levels} levels (last estimate {estimate:e})")]
    Quadrature { tolerance: f64, levels: u32, estimate: f64 },

    #[error("invalid family parameters: {0}")]
    Family(String),

    #[error("no fixture for weight {0}; shipped tables cover weights 2..=6")]
    FixtureMissing(u32),

    #[error("parse error: {0}")]
    Parse(String),
}
