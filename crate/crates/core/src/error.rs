use thiserror::Error;

/// Errors produced by the numerical routines and the file readers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exact oracle out of range: {0}")]
    OracleRange(String),

    /// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
    #[error("quadrature did not converge (last estimates {previous:e} and {last:e})")]
    QuadratureFailure { previous: f64, last: f64 },

    /// A truncated power series needs more terms than the configured cap.
    #[error("truncation budget exceeded: {required} terms needed, cap is {cap}")]
    TruncationBudget { required: usize, cap: usize },

    #[error("enumeration budget exceeded: {tuples} tuples, cap is {cap}")]
    EnumerationBudget { tuples: u128, cap: u128 },

    #[error("matrix is not Hermitian: |a[{row},{col}] - conj(a[{col},{row}])| = {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("power iteration did not converge after {iterations} iterations")]
    EigenNonConvergence { iterations: usize },

    #[error("invalid input file: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::QuadratureFailure { .. }
                | Error::TruncationBudget { .. }
                | Error::EnumerationBudget { .. }
                | Error::EigenNonConvergence { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
