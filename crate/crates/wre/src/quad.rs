//! Adaptive Simpson quadrature, with a substitution helper for
//! integrands carrying square-root edge factors.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 60;
// a symmetric integrand can alias the refined composite sum onto the coarse
// one (delta ~ machine epsilon while both are far from the integral), so the
// acceptance test only arms after a few forced bisections
const MIN_DEPTH: u32 = 5;

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    if !flm.is_finite() || !frm.is_finite() {
        return Err(Error::Numerical(format!(
            "integrand not finite near x = {lm} or x = {rm}"
        )));
    }
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth >= MAX_DEPTH || (depth >= MIN_DEPTH && delta.abs() <= 15.0 * tol) {
        return Ok(left + right + delta / 15.0);
    }
    let half_tol = 0.5 * tol;
    Ok(adapt(f, a, m, fa, flm, fm, left, half_tol, depth + 1)?
        + adapt(f, m, b, fm, frm, fb, right, half_tol, depth + 1)?)
}

/// Adaptive Simpson rule with Richardson correction.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Parameter("integration limits must be finite".into()));
    }
    if a == b {
        return Ok(0.0);
    }
    if !(tol > 0.0) {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let m = 0.5 * (lo + hi);
    let flo = f(lo);
    let fm = f(m);
    let fhi = f(hi);
    if !(flo.is_finite() && fm.is_finite() && fhi.is_finite()) {
        return Err(Error::Numerical(
            "integrand not finite at an initial evaluation point".into(),
        ));
    }
    let whole = simpson(flo, fm, fhi, hi - lo);
    Ok(sign * adapt(&f, lo, hi, flo, fm, fhi, whole, tol, 0)?)
}

/// Integrates `f` over `[a, b]` where `f` may behave like
/// `sqrt((x - a)(b - x))` times a smooth factor. Substituting
/// `x = a + (b - a) sin^2(theta)` turns the edge factors into smooth
/// functions of `theta`, so plain Simpson converges fast.
///
/// Degenerate intervals (`b <= a`) integrate to zero, matching the
/// vanishing support of the weight.
pub fn integrate_sqrt_edges<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Parameter("integration limits must be finite".into()));
    }
    if b <= a {
        return Ok(0.0);
    }
    let w = b - a;
    let g = |theta: f64| {
        let s = theta.sin();
        let x = a + w * s * s;
        f(x) * w * (2.0 * theta).sin()
    };
    adaptive_simpson(g, 0.0, std::f64::consts::FRAC_PI_2, tol)
}
