use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are grouped by the kind of failure so a front end can map them
/// onto exit codes: malformed input, a representation that fails
/// validation, a numerical breach, or a mathematical precondition.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element shape mismatch: expected {expected} coordinates, got {got}")]
    ElementShape { expected: usize, got: usize },

    #[error("coordinate {index} = {value} out of range for cyclic factor of order {order}")]
    CoordinateRange { index: usize, value: usize, order: usize },

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    Length { expected: usize, got: usize },

    #[error("{relation} (residual {residual:.3e})")]
    Validation { relation: String, residual: f64 },

    #[error("numerical degeneracy: {what} (residual {residual:.3e})")]
    NumericalDegeneracy { what: String, residual: f64 },

    #[error("degenerate cyclic component: |P(chi)u| = {norm:.3e} on a declared support character")]
    DegenerateComponent { norm: f64 },

    #[error("spectral labels are not real: |Im| = {imag:.3e}")]
    NotSelfAdjoint { imag: f64 },

    #[error("function is not of positive type (min Gram eigenvalue {min_gram_eigenvalue:.6e}, min Fourier value {min_fourier:.6e})")]
    NotPositiveType {
        min_gram_eigenvalue: f64,
        min_fourier: f64,
    },

    #[error("vector is not cyclic: weight vanishes on support character {character:?}")]
    NotCyclic { character: Vec<usize> },

    #[error("character {0:?} is outside the support")]
    OutsideSupport(Vec<usize>),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
