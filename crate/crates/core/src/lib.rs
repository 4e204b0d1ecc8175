//! Exact prolongation, Spencer cohomology and symmetry computations for
//! graded Lie superalgebras.

pub mod error;
pub mod expr;
pub mod field;
pub mod liesuper;
pub mod oddode;
pub mod prolong;
pub mod spencer;
pub mod superfield;
pub mod superspace;

pub use field::{ExactMatrix, Field, FieldTag, Gaussian, Rational, Span};
pub use superspace::{BasisVector, GradedSuperSpace, Parity, SuperDim};
pub use error::{Error, Result};
pub use liesuper::LieSuperalgebra;
