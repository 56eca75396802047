use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::gamma::{gamma, sin_pi};
use super::hurwitz::hurwitz_combination;
use super::{EvalOptions, Method, ZetaValue};
use crate::error::{domain, Result};

/// Half-width of the symmetric stencil used at `s = 1`.
pub(crate) const PERTURB_H: f64 = 1e-6;

fn zeta_e_raw(s: Complex64, x: f64, opts: &EvalOptions) -> Result<(Complex64, f64)> {
    let factor = (-s * LN_2).exp();
    let (v, e) = hurwitz_combination(
        s,
        &[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
        &[x / 2.0, (x + 1.0) / 2.0],
        opts,
    )?;
    Ok((factor * v, factor.norm() * e))
}

/// Hurwitz-type Euler zeta function `zeta_E(s, x) = sum_{n>=0} (-1)^n (n + x)^(-s)`,
/// continued to the whole plane through
/// `zeta_E(s, x) = 2^(-s) (zeta(s, x/2) - zeta(s, (x+1)/2))`.
///
/// Near `s = 1` the value is the average of the evaluations at `1 +- h`
/// with `h = 1e-6`; the reported error is widened by the stencil spread.
pub fn zeta_e(s: Complex64, x: f64, opts: &EvalOptions) -> Result<ZetaValue> {
    if !(x > 0.0) {
        return Err(domain(format!("zeta_e requires x > 0, got {x}")));
    }
    if (s - 1.0).norm() < PERTURB_H {
        let (hi, e_hi) = zeta_e_raw(s + PERTURB_H, x, opts)?;
        let (lo, e_lo) = zeta_e_raw(s - PERTURB_H, x, opts)?;
        return Ok(ZetaValue {
            value: 0.5 * (hi + lo),
            est_error: e_hi.max(e_lo) + PERTURB_H * (hi - lo).norm(),
            method: Method::HurwitzDifferencePerturbed,
        });
    }
    let (value, est_error) = zeta_e_raw(s, x, opts)?;
    Ok(ZetaValue {
        value,
        est_error,
        method: Method::HurwitzDifference,
    })
}

/// Truncated Fourier expansion of `zeta_E(s, x)`, valid for `Re s < 1` and
/// `0 < x <= 1`:
///
/// ```text
/// zeta_E(s, x) = 2 Gamma(1-s) / pi^(1-s) * sum_{n>=0} sin((2n+1) pi x + pi s / 2) / (2n+1)^(1-s)
/// ```
pub fn zeta_e_fourier(s: Complex64, x: f64, terms: usize) -> Result<ZetaValue> {
    if s.re >= 1.0 {
        return Err(domain("zeta_e_fourier requires Re(s) < 1"));
    }
    if !(x > 0.0 && x <= 1.0) {
        return Err(domain(format!("zeta_e_fourier requires 0 < x <= 1, got {x}")));
    }
    let one = Complex64::new(1.0, 0.0);
    let u = one - s;
    let pref = 2.0 * gamma(u)? / (u * PI.ln()).exp();
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..terms {
        let k = (2 * n + 1) as f64;
        // sin((2n+1) pi x + pi s/2) = sin(pi ((2n+1) x + s/2)), reduced exactly
        let arg = Complex64::new(k * x, 0.0) + s / 2.0;
        sum += sin_pi(arg) / (u * k.ln()).exp();
    }
    let next = (2 * terms + 1) as f64;
    let est_error = pref.norm() * next.powf(s.re - 1.0);
    Ok(ZetaValue {
        value: pref * sum,
        est_error,
        method: Method::FourierExpansion,
    })
}

/// `G_E(s, x) = zeta_E(s, x) - zeta_E(s, 1 - x)` for `0 < x < 1`.
pub fn g_e(s: Complex64, x: f64) -> Result<Complex64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("g_e requires 0 < x < 1, got {x}")));
    }
    let opts = EvalOptions::default();
    Ok(zeta_e(s, x, &opts)?.value - zeta_e(s, 1.0 - x, &opts)?.value)
}
