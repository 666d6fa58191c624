//! Exact computations for finite-dimensional simple Lie algebras.
//!
//! The crate covers the arithmetic layer of the Wess–Zumino–Witten /
//! moduli-of-bundles circle of ideas, entirely over exact rationals and
//! arbitrary-precision integers (no floating point anywhere):
//!
//! * [`cartan`] — Cartan matrices, root systems generated by reflection
//!   closure, the invariant form normalized by `(θ, θ) = 2`, and Weyl-group
//!   operations on weights.
//! * [`rep`] — irreducible highest-weight modules: dimension (Weyl),
//!   weight multiplicities (Freudenthal), Dynkin indices, and the search
//!   for the representation of minimal index.
//! * [`fusion`] — level-`ℓ` alcoves, classical tensor decomposition
//!   (Racah–Speiser), fusion coefficients by affine-Weyl folding
//!   (Kac–Walton), and genus-`g` conformal-block dimensions via
//!   factorization.
//! * [`branching`] — restriction of modules along weight-lattice
//!   projections, with the built-in chain `D4 ⊂ F4 ⊂ E6 ⊂ E7 ⊂ E8` and
//!   embedding (Dynkin) indices.
//! * [`verify`] — a claim inventory pinning the published numbers the
//!   crate is expected to reproduce, with a PASS/FAIL report.
//!
//! Everything is deterministic: identical inputs produce identical
//! outputs, across runs and platforms. Caches are internally synchronized
//! and only ever memoize pure functions.

pub mod branching;
pub mod cartan;
mod error;
pub mod fusion;
pub mod rep;
pub mod verify;

pub use cartan::{cartan_data, CartanData, LieType, Rat, Root, Series, Weight};
pub use error::Error;
pub use rep::{minimal_index, HighestWeight, RepSum, WeightSystem};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
