//! Exact computation in the bi-quadratic algebras `A(q, alpha, mu)`.

pub mod algebra;
pub mod automorphisms;
pub mod error;
pub mod grid;
pub mod linalg;
pub mod oracle;
pub mod presentation;
pub mod scalars;
pub mod spectrum;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
