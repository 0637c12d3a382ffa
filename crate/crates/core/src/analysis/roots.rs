use crate::error::{Error, Result};

/// Result of a bracketing root search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

impl Bracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Bisection of a sign change of `f` on `[lo, hi]` down to width `tol`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Bracket> {
    if !(lo < hi) || !(tol > 0.0) {
        return Err(Error::InvalidBracket(format!("[{lo}, {hi}] with tol {tol}")));
    }
    let (flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(Bracket { lo, hi: lo, iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(Bracket { lo: hi, hi, iterations: 0 });
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::InvalidBracket(format!(
            "no sign change: f({lo}) = {flo}, f({hi}) = {fhi}"
        )));
    }
    let positive_at_lo = flo > 0.0;
    let (mut a, mut b) = (lo, hi);
    let mut iterations = 0;
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return Ok(Bracket { lo: m, hi: m, iterations });
        }
        if (fm > 0.0) == positive_at_lo {
            a = m;
        } else {
            b = m;
        }
        iterations += 1;
    }
    Ok(Bracket { lo: a, hi: b, iterations })
}

/// Secant iteration from `x0`, `x1` until the step is below `tol`.
pub fn secant<F: Fn(f64) -> f64>(f: F, mut x0: f64, mut x1: f64, tol: f64, max_iter: usize) -> Result<f64> {
    let (mut f0, mut f1) = (f(x0), f(x1));
    for _ in 0..max_iter {
        if f1 == 0.0 {
            return Ok(x1);
        }
        let denom = f1 - f0;
        if denom == 0.0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / denom;
        if !x2.is_finite() {
            break;
        }
        if (x2 - x1).abs() <= tol {
            return Ok(x2);
        }
        (x0, f0) = (x1, f1);
        x1 = x2;
        f1 = f(x1);
    }
    Err(Error::InvalidBracket(format!("secant did not converge from ({x0}, {x1})")))
}
