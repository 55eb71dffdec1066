//! Exact verification kernel for triplets of 2-forms on finite-dimensional
//! Lie algebras: decides the hypersymplectic-with-torsion property, computes
//! every derived object (transition morphisms, pseudo-metric, torsion 3-form,
//! twisted Poisson bivectors, deformed and dual Lie structures, the lift to
//! A (+) A*), and re-verifies the structural theorems instance by instance.
//!
//! All arithmetic is exact, over Q(sqrt(d)) with d = 3 by default.

pub mod algebroid;
pub mod courant;
pub mod error;
pub mod fixtures;
pub mod hst;
pub mod io;
pub mod matrix;
pub mod scalar;
pub mod superalgebra;

pub use error::{Error, Result};
