//! Exact computational engine for the derived Picard group machinery of
//! selfinjective Nakayama algebras.
//!
//! The crate provides exact scalar arithmetic over the rationals and prime
//! fields, bounded complexes of projectives over based algebras, the
//! homotopy-category toolbox (hom spaces, homotopies, minimal models,
//! isomorphism search), the standard tilting equivalences and their
//! totalization functor, the companion algebra with its spherical twists,
//! smash-product constructions, and the braid-group word oracles. The
//! [`verify`] module packages all of these into machine-checked certificate
//! suites consumed by the `trpic` CLI.

pub mod algebra;
pub mod braid;
pub mod complex;
pub mod field;
pub mod homotopy;
pub mod linalg;
pub mod nakayama;
pub mod par;
pub mod ralg;
pub mod scaling;
pub mod smash;
pub mod tilting;
pub mod verify;

pub use field::{FieldSpec, Scalar};
