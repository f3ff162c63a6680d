use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate specialization after {attempts} coordinate changes")]
    DegenerateSpecialization { attempts: usize },
    #[error("convergence error: {0}")]
    Convergence(String),
    #[error("outside supported scope: {0}")]
    Scope(String),
    #[error("inconclusive at precision {precision}; increase precision")]
    IncreasePrecision { precision: usize },
    #[error("degenerate family member: {0}")]
    DegenerateMember(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
