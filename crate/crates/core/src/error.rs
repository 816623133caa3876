//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong during exact computation.
///
/// Mathematical failures (a character sum that is not an integer, a scaling
/// coefficient that is not a root of unity) get their own variants because
/// callers dispatch on them; structural misuse (mismatched conductors or
/// dimensions) is reported with enough context to locate the offending input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two scalars from different cyclotomic fields were combined.
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    /// Division by zero in a cyclotomic field.
    #[error("division by zero in Q(zeta_{0})")]
    DivisionByZero(u32),

    /// A scalar expected to be rational had nonzero root-of-unity part.
    #[error("scalar is not rational")]
    NotRational,

    /// A rational expected to be an integer was not.
    #[error("scalar is not an integer")]
    NotIntegral,

    /// Vector or matrix dimensions do not match.
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    /// An exponent-substitution matrix with determinant other than +-1.
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i128),

    /// A scaling coefficient equal to zero (automorphisms need units).
    #[error("scaling coefficient must be nonzero")]
    ZeroScaling,

    /// Group generation exceeded the configured order bound.
    #[error("group order exceeds limit {0}")]
    OrderExceeded(usize),

    /// A window is not closed under the group's exponent action.
    #[error("window is not closed under the group action")]
    NotClosed,

    /// A subspace is not carried into itself by a group element.
    #[error("subspace is not invariant under the group element")]
    NotInvariant,

    /// The averaged character sum failed to be a nonnegative integer.
    #[error("character sum is not a nonnegative integer: {0}")]
    NonIntegralCharacterSum(String),

    /// A scaling coefficient that is not a root of unity, so no invariant
    /// sublattice of finite index exists.
    #[error("scaling coefficient is not a root of unity")]
    NonTorsionCoefficient,

    /// A sublattice operation that needs full rank received less.
    #[error("sublattice basis is not full rank (rank {0} < {1})")]
    NotFullRank(usize, usize),

    /// Seed data for a recurrence does not match its order.
    #[error("seed length {0} does not match recurrence order {1}")]
    SeedLength(usize, usize),

    /// Textual input that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Invalid argument combinations caught at the API boundary.
    #[error("invalid input: {0}")]
    Validation(String),
}
