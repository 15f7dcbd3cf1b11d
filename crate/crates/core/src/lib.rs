//! Exact GIT stability computations for hypersurfaces in P³.
//!
//! Monomial configurations are tested with the Hilbert–Mumford criterion
//! against the diagonal torus and coordinate permutations. The crate also
//! carries the Luna-slice weight bookkeeping, SL2 plethysm, sparse rational
//! polynomials and a few closed-form invariants used around quintic
//! surfaces.

pub mod critical;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod luna;
pub mod poly;
pub mod reference;
pub mod sl2;
pub mod stability;
pub mod weights;

pub use error::{Error, Result};
pub use lattice::{ExponentVector, MonomialConfiguration, OneParamSubgroup, Permutation, Rational, RationalPoint4};
pub use weights::WeightMultiset;
