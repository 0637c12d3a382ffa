use serde::{Deserialize, Serialize};

use super::lambda::solve_lambda;

/// κ, the sharp starlikeness radius of quasihyperbolic balls in punctured
/// space. Literature value; no defining equation is available here.
pub const KAPPA_LITERATURE: f64 = 2.83;

/// Numerical bound past which quasihyperbolic balls in ℝⁿ ∖ {0} fail to be
/// close-to-convex. Literature value, not recomputed.
pub const QH_CTC_NUMERIC_BOUND: f64 = 3.1116;

/// Radii where ball shapes change character.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SharpConstants {
    /// log 2, j-balls convex in every domain.
    pub j_convexity: f64,
    /// log(1+√2), j-balls starlike w.r.t. the center.
    pub j_starlike: f64,
    /// log(1+√3), j-balls close-to-convex (sharp in the plane).
    pub j_ctc: f64,
    /// log 3, past which punctured-space j-balls are not close-to-convex in any dimension.
    pub j_upper: f64,
    /// 1, quasihyperbolic disks convex in the punctured plane.
    pub qh_convexity: f64,
    /// κ ≈ 2.83 (external).
    pub qh_starlike_punctured: f64,
    /// λ ≈ 2.97169, solved from its defining equation.
    pub qh_ctc: f64,
    /// π/2, starlikeness in general domains (not sharp, external).
    pub qh_general_starlike: f64,
    /// 3.1116 (external numeric bound).
    pub qh_ctc_numeric_bound: f64,
    /// π, past which quasihyperbolic disks are not simply connected.
    pub qh_simply_connected: f64,
}

impl SharpConstants {
    pub fn compute() -> Self {
        let s2 = std::f64::consts::SQRT_2;
        let s3 = 3f64.sqrt();
        Self {
            j_convexity: std::f64::consts::LN_2,
            j_starlike: (1.0 + s2).ln(),
            j_ctc: (1.0 + s3).ln(),
            j_upper: 3f64.ln(),
            qh_convexity: 1.0,
            qh_starlike_punctured: KAPPA_LITERATURE,
            qh_ctc: solve_lambda(1e-14).expect("fixed bracket"),
            qh_general_starlike: std::f64::consts::FRAC_PI_2,
            qh_ctc_numeric_bound: QH_CTC_NUMERIC_BOUND,
            qh_simply_connected: std::f64::consts::PI,
        }
    }
}
