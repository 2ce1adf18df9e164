//! Exact kernel for restricted Leibniz, diassociative, Zinbiel and pre-Lie
//! structures over prime fields.

pub mod algebra;
pub mod dialgebra;
pub mod document;
pub mod envelope;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod free;
pub mod identities;
pub mod linalg;
pub mod prelie;
pub mod report;
pub mod scalars;
#[cfg(test)]
mod testutil;

pub use algebra::{Algebra, BilinearOp, Element, PMap};
pub use error::{Error, Result};
pub use report::{CheckReport, Mode, Status, SweepConfig};
pub use scalars::PrimeField;
