pub mod algebra;
pub mod axes;
pub mod catalog;
pub mod classify;
pub mod cli;
pub mod error;
pub mod idempotents;
pub mod linalg;
pub mod scalars;
pub mod spectral;

pub use algebra::{Algebra, Element, Operator, Subspace};
pub use error::{Error, Result};
pub use scalars::{Domain, Scalar};
