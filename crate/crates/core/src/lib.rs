//! Exact analysis of systems of linear partial difference equations on the
//! integer lattice `Z^n` that are invariant under a finite group of ring
//! automorphisms (monomial substitutions combined with scaling by roots of
//! unity).
//!
//! All arithmetic is exact: scalars live in a cyclotomic field `Q(zeta_N)`
//! with rational coefficients, and every dimension reported by this crate is
//! the result of exact elimination, never floating point.
//!
//! Module map:
//!
//! * [`scalars`] - rationals and cyclotomic field elements.
//! * [`laurent`] - Laurent polynomials in `n` variables and module vectors.
//! * [`group`] - the automorphism group `(C^*)^n x| GL_n(Z)` and its action.
//! * [`windows`] - finite windows of the lattice and windowed submodule spans.
//! * [`fixedpoints`] - characters, fixed subspaces, symmetric dimensions.
//! * [`solutions`] - explicit solution functions on windows.
//! * [`lattice`] - invariant sublattices and orbit decompositions.
//! * [`oracle`] - independent brute-force recomputations used as test oracles.

pub mod error;
pub mod fixedpoints;
pub mod group;
pub mod lattice;
pub mod laurent;
mod linalg;
pub mod oracle;
pub mod scalars;
pub mod solutions;
pub mod windows;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
