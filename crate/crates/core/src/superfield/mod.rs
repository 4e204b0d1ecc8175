//! Polynomial supervector fields, weak derived flags and symbols of
//! superdistributions.

pub mod flag;
pub mod model;
pub mod poly;
pub mod vector;

pub use flag::{
    check_strong_regularity, derived_flag, derived_flag_capped, extract_symbol, extract_symbol_in_frame,
    sample_points, DerivedFlag, DistributionJson, DistributionSpec, FlagLevel, GradedFrame, RegularityReport,
    Witness, DEFAULT_DEGREE_CAP,
};
pub use model::{bernoulli_series, left_invariant_fields, standard_model};
pub use poly::{Monomial, SuperPolynomial};
pub use vector::{bracket_fields, Coordinates, FieldInput, FieldJson, SuperVectorField};
