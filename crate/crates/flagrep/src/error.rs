//! Shared error type for the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The input matrix violates the structural shape of a Cartan matrix
    /// (not square, diagonal != 2, positive off-diagonal entry, broken zero
    /// symmetry, or unparseable text input).
    #[error("invalid Cartan matrix: {0}")]
    InvalidMatrix(String),

    /// The matrix is a well-formed generalized Cartan matrix but not of
    /// finite type: the symmetrized form is not positive definite, no
    /// positive symmetrizer exists, or reflection closure overran its bound.
    #[error("not a finite-type Cartan matrix: {0}")]
    NotFiniteType(String),

    /// A type label such as "A3" or "G2" that names no built-in table.
    #[error("unknown Cartan type label `{0}`")]
    UnknownType(String),

    /// A coordinate vector of the wrong length for the ambient rank.
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A simple-root index outside `0..rank`.
    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// An iteration bound was exceeded; this signals an implementation bug,
    /// not a property of the input.
    #[error("iteration bound exceeded in {0}")]
    NonTermination(&'static str),

    /// A weight required to be regular pairs to zero with some root.
    #[error("weight ({weight}) is singular: it is orthogonal to the root ({root})")]
    SingularWeight { weight: String, root: String },

    /// A weight required to be dominant has a negative pairing with a
    /// positive root.
    #[error("weight ({weight}) is not dominant")]
    NotDominant { weight: String },

    /// A weight required to lie in the weight lattice has a non-integer
    /// coordinate.
    #[error("weight ({weight}) does not have integer coordinates")]
    NonIntegerWeight { weight: String },

    /// An exact computation that must yield an integer produced a proper
    /// fraction; this signals an internal arithmetic bug.
    #[error("non-integer result in {context}: {value}")]
    NonIntegerResult {
        context: &'static str,
        value: String,
    },

    /// An enumeration grew past its configured cap.
    #[error("resource limit exceeded: {what} needs {needed} entries, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// A sampled point violated a duality assertion in the Matsuki model.
    #[error("sample failure at point {point}: {reason}")]
    SampleFailure { point: String, reason: String },

    /// The two cohomology groups of a Serre pair failed the degree/dimension
    /// consistency assertion; this signals an internal bug.
    #[error("Serre duality mismatch for weight ({weight}): {detail}")]
    SerreMismatch { weight: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
