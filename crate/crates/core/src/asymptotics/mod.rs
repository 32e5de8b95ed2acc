//! Torsion lengths of saturated multi-powers and their asymptotic behavior.

mod bounds;
mod count;
mod fit;
mod table;

pub use bounds::{check_bounds, closed_form_2d, epsilon_estimate, BoundCheck, BoundsReport, CheckStatus};
pub use count::{count_quotient, LengthValue};
pub use fit::{
    fit_eventually, fit_polynomial, fit_polynomial_with, fit_quasipolynomial_ray, interpolate, FitOptions,
    NumericalPolynomial, QuasiPolynomial,
};
pub use table::{length_table, LengthTable, TableMode};
