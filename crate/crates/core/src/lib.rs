//! Monoidal deformation cohomology of tensor categories built from algebra sequences.
//!
//! The crate builds the deformation complexes of tensor categories generated by
//! one object from a multiplicative sequence of algebras `A_0, A_1, A_2, ...`,
//! and computes their cohomology with exact rational arithmetic. Three
//! sequences are bundled: group algebras of symmetric groups, skew group
//! algebras `A^{⊗n} ∗ S_n` of a commutative algebra, and degree-sliced
//! degenerate affine Hecke algebras. The [`lierep`] module provides the
//! matching invariant theory of `gl(V)` used to cross-check the answers.

pub mod combinat;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod lierep;
pub mod report;
pub mod seq;
pub mod symgrp;

pub use error::{Error, Result};
pub use exactla::Scalar;
