//! Close-to-convexity deciders for quasihyperbolic disks in the punctured plane
//! and for disk-minus-disks regions.

use serde::{Deserialize, Serialize};

use super::lambda::{check_tol, lambda_f, tangent_components};
use super::roots::bisect;
use crate::error::{Error, Result};
use crate::geometry::{Disk, Point, Region, Vec2, Witness};

/// Slack on `f(r) ≥ 0` so that `r = λ` itself counts as holding.
pub const LAMBDA_SLACK: f64 = 1e-12;

/// Relative tolerance of the hole conditions; equality is attained at `log(1+√3)`.
pub const HOLE_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CtcRegime {
    /// Starlike with respect to the center, hence close-to-convex.
    Starlike,
    /// Sign of `b(−1)` on the tangent of the quasihyperbolic circle.
    TangentCriterion,
    /// Position of each hole relative to the outer disk.
    PythagorasCriterion,
    NotSimplyConnected,
    /// A hole sits strictly inside the outer disk.
    InnerDiskEngulfed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CtcVerdict {
    pub holds: bool,
    pub regime: CtcRegime,
    pub witnesses: Vec<Witness>,
    /// False when the failure only means "not established".
    pub conclusive: bool,
}

impl CtcVerdict {
    fn new(holds: bool, regime: CtcRegime, witnesses: Vec<Witness>) -> Self {
        Self {
            holds,
            regime,
            witnesses,
            conclusive: true,
        }
    }
}

/// Close-to-convexity of the quasihyperbolic disk `D_k(x, r)` in a punctured plane.
pub fn qh_ctc_verdict(r: f64) -> Result<CtcVerdict> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidRadius(r));
    }
    if r <= 2.0 {
        return Ok(CtcVerdict::new(true, CtcRegime::Starlike, Vec::new()));
    }
    if r > std::f64::consts::PI {
        return Ok(CtcVerdict::new(
            false,
            CtcRegime::NotSimplyConnected,
            vec![Witness::Inequality {
                name: "pi >= r".into(),
                lhs: std::f64::consts::PI,
                rhs: r,
            }],
        ));
    }
    let (_, b) = tangent_components(r, -1.0)?;
    let f = lambda_f(r)?;
    Ok(CtcVerdict::new(
        f >= -LAMBDA_SLACK,
        CtcRegime::TangentCriterion,
        vec![Witness::Inequality {
            name: "b(-1) >= 0".into(),
            lhs: b,
            rhs: 0.0,
        }],
    ))
}

/// Hole of the punctured-plane j-ball at radius `r > log 2`, center `e₁`:
/// returns `(s, c, R)` with hole radius `s`, hole center `c` on the real
/// axis and outer radius `R`.
fn j_hole(r: f64) -> (f64, f64, f64) {
    let er = r.exp();
    let t = er - 1.0;
    (t / (er * (t - 1.0)), 1.0 / (er * (1.0 - t)), t)
}

/// `s² + |x − c|² − R²` for the punctured-plane j-ball; zero at `log(1+√3)`.
pub fn j_ctc_residual(r: f64) -> f64 {
    let er = r.exp();
    let s = (er - 1.0) / (er * (er - 2.0));
    let d = 1.0 - 1.0 / (er * (2.0 - er));
    s * s + d * d - (er - 1.0) * (er - 1.0)
}

/// The sharp close-to-convexity radius of j-balls in the punctured plane.
pub fn solve_j_ctc_radius(tol: f64) -> Result<f64> {
    check_tol(tol)?;
    let lo = std::f64::consts::LN_2 + 0.05;
    let hi = 3f64.ln();
    let (flo, fhi) = (j_ctc_residual(lo), j_ctc_residual(hi));
    if !(flo > 0.0 && fhi < 0.0) {
        return Err(Error::InvalidBracket(format!("residuals {flo}, {fhi}")));
    }
    Ok(bisect(j_ctc_residual, lo, hi, tol)?.midpoint())
}

/// Per-hole conditions with the outer center as origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HoleConditions {
    /// `|x_i| ≥ R/√2`
    pub far_enough: bool,
    /// `r_i < |x_i|`
    pub excludes_center: bool,
    /// `√(r_i² + |x_i|²) ≥ R` whenever `|x_i| < R`
    pub pythagoras: bool,
    pub center_distance: f64,
    pub hole_radius: f64,
    pub outer_radius: f64,
}

impl HoleConditions {
    pub fn all(&self) -> bool {
        self.far_enough && self.excludes_center && self.pythagoras
    }
}

pub fn hole_conditions(outer_radius: f64, hole: &Disk, origin: Vec2) -> HoleConditions {
    let d = hole.center.distance(origin);
    let (s, big_r) = (hole.radius, outer_radius);
    let slack = HOLE_RTOL * big_r;
    HoleConditions {
        far_enough: d >= big_r / std::f64::consts::SQRT_2 - slack,
        excludes_center: s < d,
        pythagoras: d >= big_r || (s * s + d * d).sqrt() >= big_r - slack,
        center_distance: d,
        hole_radius: s,
        outer_radius: big_r,
    }
}

fn pythagoras_witness(c: &HoleConditions) -> Witness {
    Witness::Inequality {
        name: "s^2 + |x-c|^2 >= R^2".into(),
        lhs: c.hole_radius * c.hole_radius + c.center_distance * c.center_distance,
        rhs: c.outer_radius * c.outer_radius,
    }
}

/// Close-to-convexity of `B(x, R) ∖ ∪ B̄(c_i, s_i)`, or of an intersection of
/// convex constraints, with respect to its outer center `x`.
///
/// Exact for a single hole in the plane and for hole-free regions. With several
/// holes that violate the conditions the answer is "not established" and
/// `conclusive` is false.
pub fn annular_ctc_check(region: &Region, x: &Point) -> Result<CtcVerdict> {
    let xv = x.to_vec2()?;
    let outer = region.outer;
    if xv.distance(outer.center) > 1e-12 * outer.radius.max(1.0) {
        return Err(Error::Unsupported("the outer disk must be centered at x".into()));
    }
    let holes: Vec<&Disk> = region.effective_holes().collect();
    if holes.is_empty() {
        return Ok(CtcVerdict::new(true, CtcRegime::Starlike, Vec::new()));
    }
    if !region.intersected.is_empty() {
        return Err(Error::Unsupported(
            "holes combined with intersected constraints".into(),
        ));
    }
    let conds: Vec<HoleConditions> = holes.iter().map(|h| hole_conditions(outer.radius, h, xv)).collect();
    let witnesses: Vec<Witness> = conds.iter().map(pythagoras_witness).collect();
    if conds.iter().all(HoleConditions::all) {
        return Ok(CtcVerdict::new(true, CtcRegime::PythagorasCriterion, witnesses));
    }
    if let [c] = conds.as_slice() {
        if c.center_distance + c.hole_radius < outer.radius {
            return Ok(CtcVerdict::new(
                false,
                CtcRegime::InnerDiskEngulfed,
                vec![Witness::Inequality {
                    name: "|x-c| + s >= R".into(),
                    lhs: c.center_distance + c.hole_radius,
                    rhs: outer.radius,
                }],
            ));
        }
        if !c.pythagoras {
            return Ok(CtcVerdict::new(false, CtcRegime::PythagorasCriterion, witnesses));
        }
    }
    Ok(CtcVerdict {
        holds: false,
        regime: CtcRegime::PythagorasCriterion,
        witnesses,
        conclusive: false,
    })
}

/// `(s, |x − c|, R)` of the single hole of `B_j(e₁, r)` in the punctured plane.
pub fn j_ball_hole_geometry(r: f64) -> Result<(f64, f64, f64)> {
    if !(r > std::f64::consts::LN_2) || !r.is_finite() {
        return Err(Error::OutOfRange(format!("a hole exists only for r > log 2, got {r}")));
    }
    let (s, c, big_r) = j_hole(r);
    Ok((s, 1.0 - c, big_r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::solve_lambda;
    use crate::balls::j_ball_punctured;

    #[test]
    fn qh_regimes() {
        let v = qh_ctc_verdict(1.5).unwrap();
        assert!(v.holds && v.regime == CtcRegime::Starlike);
        let l = solve_lambda(1e-14).unwrap();
        assert!(qh_ctc_verdict(l - 0.05).unwrap().holds);
        assert!(qh_ctc_verdict(l).unwrap().holds);
        let v = qh_ctc_verdict(l + 0.05).unwrap();
        assert!(!v.holds && v.regime == CtcRegime::TangentCriterion);
        let v = qh_ctc_verdict(3.3).unwrap();
        assert!(!v.holds && v.regime == CtcRegime::NotSimplyConnected);
        assert!(qh_ctc_verdict(2.0).unwrap().holds);
        assert!(qh_ctc_verdict(0.0).is_err());
    }

    #[test]
    fn j_ctc_radius() {
        let r = solve_j_ctc_radius(1e-10).unwrap();
        assert!((r - (1.0 + 3f64.sqrt()).ln()).abs() < 1e-10 + 1e-12);
        assert!(j_ctc_residual(std::f64::consts::LN_2 + 0.05) > 0.0);
        assert!(j_ctc_residual(3f64.ln()) < 0.0);
    }

    #[test]
    fn hole_geometry_matches_residual() {
        for r in [0.8, 1.0, 1.05] {
            let (s, d, big_r) = j_ball_hole_geometry(r).unwrap();
            assert!((s * s + d * d - big_r * big_r - j_ctc_residual(r)).abs() < 1e-9);
        }
    }

    #[test]
    fn j_ball_verdicts() {
        let x = Point::xy(1.0, 0.0);
        let r0 = (1.0 + 3f64.sqrt()).ln();
        let v = annular_ctc_check(&j_ball_punctured(&x, r0).unwrap(), &x).unwrap();
        assert!(v.holds && v.regime == CtcRegime::PythagorasCriterion);
        match &v.witnesses[0] {
            Witness::Inequality { lhs, rhs, .. } => {
                assert!((lhs - 3.0).abs() < 1e-12 && (rhs - 3.0).abs() < 1e-12);
            }
            w => panic!("{w:?}"),
        }
        let v = annular_ctc_check(&j_ball_punctured(&x, r0 + 0.05).unwrap(), &x).unwrap();
        assert!(!v.holds && v.conclusive);
        let v = annular_ctc_check(&j_ball_punctured(&x, 3f64.ln() + 0.1).unwrap(), &x).unwrap();
        assert!(!v.holds && v.regime == CtcRegime::InnerDiskEngulfed);
        for r in [0.3, std::f64::consts::LN_2, 0.8] {
            assert!(annular_ctc_check(&j_ball_punctured(&x, r).unwrap(), &x).unwrap().holds, "{r}");
        }
    }

    #[test]
    fn needs_centered_outer_disk() {
        let region = Region::disk(Disk::new(Vec2::new(0.0, 0.0), 1.0).unwrap());
        assert!(annular_ctc_check(&region, &Point::xy(0.5, 0.0)).is_err());
    }

    #[test]
    fn two_far_holes_hold() {
        let o = Vec2::new(0.0, 0.0);
        let region = Region::disk(Disk::new(o, 1.0).unwrap())
            .subtract(Disk::new(Vec2::new(1.2, 0.0), 0.3).unwrap())
            .subtract(Disk::new(Vec2::new(-1.2, 0.0), 0.3).unwrap());
        let v = annular_ctc_check(&region, &Point::xy(0.0, 0.0)).unwrap();
        assert!(v.holds && v.witnesses.len() == 2);
    }
}
