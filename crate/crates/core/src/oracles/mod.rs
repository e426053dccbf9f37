//! Derivative-free numerical routines that check the closed forms
//! independently: central differences, grid plus golden-section search,
//! trapezoid quadrature, bisection and Monte Carlo simulation.

mod diff;
mod optimize;
mod quadrature;
mod root;
mod simulate;

pub use diff::{finite_diff, posterior_finite_diff, DerivativeOrder};
pub use optimize::{
    golden_section_max, maximize_curvature, GridSearchResult, GOLDEN_SECTION_WIDTH,
};
pub use quadrature::{integrate_curve, trapezoid, QuadratureResult};
pub use root::{bisect_bracket, bisect_root, DEFAULT_BISECTION_TOL};
pub use simulate::{simulate_confusion, SimulationReport, GENERATOR};
