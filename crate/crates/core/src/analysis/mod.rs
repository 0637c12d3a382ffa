//! Sharp constants, root solvers, tangent analysis of quasihyperbolic circles,
//! close-to-convexity deciders, the disconnection example and the radii tables.

mod constants;
mod counterexample;
mod ctc;
mod lambda;
mod roots;
mod sweep;
mod table;

pub use constants::{SharpConstants, KAPPA_LITERATURE, QH_CTC_NUMERIC_BOUND};
pub use counterexample::{
    disconnection_interval, line_ratio, line_ratio_stationary, twice_punctured_plane, verify_disconnection_example,
    DisconnectionReport, MembershipCheck, SeparationCheck,
};
pub use ctc::{
    annular_ctc_check, j_ball_hole_geometry, j_ctc_residual, hole_conditions, qh_ctc_verdict, solve_j_ctc_radius,
    CtcRegime, CtcVerdict, HoleConditions, LAMBDA_SLACK, HOLE_RTOL,
};
pub use lambda::{
    lambda_f, lambda_f_derivative, solve_lambda, solve_lambda_secant, tangent_b_derivative, tangent_components, MIN_TOL,
};
pub use roots::{bisect, secant, Bracket};
pub use sweep::{sweep_bracket, sweep_critical_radius};
pub use table::{radii_table, RadiiTable, RadiusEntry, RadiusRow, RadiusValue, Source};
