use super::roots::Bracket;
use crate::error::{Error, Result};

/// Localizes the radius where `checker` flips from true to false by bisection.
///
/// Requires `checker(lo)` true and `checker(hi)` false, and assumes a single flip.
pub fn sweep_critical_radius<F>(mut checker: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<bool>,
{
    Ok(sweep_bracket(&mut checker, lo, hi, tol)?.midpoint())
}

/// Like [`sweep_critical_radius`] but returns the final bracket.
pub fn sweep_bracket<F>(mut checker: F, lo: f64, hi: f64, tol: f64) -> Result<Bracket>
where
    F: FnMut(f64) -> Result<bool>,
{
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidBracket(format!("[{lo}, {hi}] with tol {tol}")));
    }
    if !checker(lo)? {
        return Err(Error::InvalidBracket(format!("property fails at lo = {lo}")));
    }
    if checker(hi)? {
        return Err(Error::InvalidBracket(format!("property holds at hi = {hi}")));
    }
    let (mut a, mut b) = (lo, hi);
    let mut iterations = 0;
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if checker(m)? {
            a = m;
        } else {
            b = m;
        }
        iterations += 1;
    }
    Ok(Bracket { lo: a, hi: b, iterations })
}
