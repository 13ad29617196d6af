use thiserror::Error;

/// Errors raised by exact computations.
///
/// Every variant corresponds to a violated precondition or an internal
/// consistency failure; there are no "approximate" failure modes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("diagram size mismatch: {left} vs {right}")]
    DiagramSizeMismatch { left: usize, right: usize },

    #[error("omega mismatch: element has {element}, representation needs {expected}")]
    OmegaMismatch { element: String, expected: String },

    #[error("element contains a contraction diagram; only the symmetric-group span acts on gl tensors")]
    ContractionUnderGl,

    #[error("shape {shape} violates the bound {bound} for {group}")]
    ShapeBound {
        shape: String,
        bound: String,
        group: String,
    },

    #[error("partition has {length} parts but only {vars} variables are available")]
    TooManyParts { length: usize, vars: usize },

    #[error("symplectic groups need even N, got {n}")]
    OddSymplecticN { n: usize },

    #[error("degenerate group: N = {n} is not supported")]
    DegenerateGroup { n: usize },

    #[error("tensor space dimension {dim} exceeds the guard (10^6); pass force to override")]
    SpaceTooLarge { dim: u128 },

    #[error("polynomial {poly} does not split over half-integers within |root| <= {bound}")]
    NonSplitPolynomial { poly: String, bound: String },

    #[error("content {content} missing from the spectrum {spectrum}; idempotent recursion is inconsistent")]
    SpectrumMissingContent { content: String, spectrum: String },

    #[error("repeated eigenvalue {value} in a spectrum expected to be simple")]
    RepeatedEigenvalue { value: String },

    #[error("polynomial is not symmetric: offending monomial {monomial}")]
    NotSymmetric { monomial: String },

    #[error("trace contains an odd power: monomial {monomial}")]
    OddPower { monomial: String },

    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("invalid skew shape: inner {inner} not contained in outer {outer}")]
    InvalidSkewShape { inner: String, outer: String },

    #[error("{0}")]
    Parse(String),
}
