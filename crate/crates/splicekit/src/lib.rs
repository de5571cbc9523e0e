//! splicekit: exact computation of splice diagrams, discriminant groups,
//! and splice-quotient defining equations for normal surface singularity
//! links, starting from a resolution (plumbing) graph.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! no floating point is used anywhere.
//!
//! The pipeline, end to end:
//!
//! 1. [`graph`] — plumbing graphs, intersection matrices, validation,
//!    continued-fraction arms, star-shaped and quotient-cusp builders.
//! 2. [`lattice`] — the dual lattice, the discriminant group with its
//!    Q/Z pairing, and the diagonal representation on leaf coordinates.
//! 3. [`splice`] — splice diagrams, resolution-to-splice conversion,
//!    edge determinants, weight systems, semigroup conditions, splicing.
//! 4. [`equations`] — admissible monomials, Hamm coefficient matrices,
//!    splice-type equations and the Brieskorn universal abelian cover.
//! 5. [`congruence`] — congruence conditions and splice-quotient
//!    assembly (equations plus group action), and graph classification.
//! 6. [`parse`] — the line-oriented graph and splice-diagram file formats.
//!
//! See the crate examples for one runnable program per capability, and
//! the `splicekit` binary for the command-line front-end.

pub mod congruence;
pub mod equations;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod matrix;
pub mod parse;
pub mod splice;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
