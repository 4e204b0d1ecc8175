//! Contact calculus on odd jets and symmetries of odd ODEs.

pub mod jet;
mod solve;

pub use jet::{
    cartan_generators, contact_form, contact_vf, lagrange_bracket, prolong_field, JetAlgebra, JetField, JetFn,
    JetMonomial,
};
pub use solve::{
    determine_symmetries, grade, pr_bound, rational_roots, BasisJson, FunctionBasis, OdeJson, OdeSpec, ScalarJson,
    Symmetry, SymmetryResult, DEFAULT_POLY_DEGREE,
};
