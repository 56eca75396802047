use num_complex::Complex64;

use super::hurwitz::hurwitz_combination;
use super::gamma::{gamma, sin_pi};
use super::{EvalOptions, Method, ZetaValue};
use crate::error::{pole, Result};

/// Cohen–Villegas–Zagier acceleration of `sum_{k>=0} (-1)^k a_k`.
///
/// Exact for alternating sums of moments of a positive measure, and
/// converging like `5.83^(-n)` in general.
pub(crate) fn alternating_sum(n: usize, a: impl Fn(usize) -> Complex64) -> Complex64 {
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        c = b - c;
        sum += a(k) * c;
        let kf = k as f64;
        let nf = n as f64;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

const CVZ_TERMS: usize = 40;

fn odd_power(k: usize, s: Complex64) -> Complex64 {
    (-s * ((2 * k + 1) as f64).ln()).exp()
}

/// Direct odd-denominator series `sum_{n>=0} (2n+1)^(-s)` for large `Re s`.
fn lambda_series(s: Complex64) -> (Complex64, f64) {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut k = 0;
    loop {
        let t = odd_power(k, s);
        sum += t;
        k += 1;
        if t.norm() < 1e-18 * sum.norm() || k > 10_000 {
            // remaining terms are dominated by a geometric tail of ratio < 1
            return (sum, t.norm());
        }
    }
}

/// `lambda(s) - 1 = sum_{n>=1} (2n+1)^(-s)`, accurate in absolute terms.
pub(crate) fn lambda_minus_one(s: Complex64) -> Result<Complex64> {
    if s.re >= 20.0 {
        let (v, _) = lambda_series(s);
        return Ok(v - 1.0);
    }
    Ok(dirichlet_lambda(s)?.value - 1.0)
}

/// Dirichlet lambda function `lambda(s) = (1 - 2^(-s)) zeta(s) = 2^(-s) zeta(s, 1/2)`.
pub fn dirichlet_lambda(s: Complex64) -> Result<ZetaValue> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(pole("dirichlet_lambda has a pole at s = 1"));
    }
    if s.re >= 20.0 {
        let (value, est_error) = lambda_series(s);
        return Ok(ZetaValue {
            value,
            est_error,
            method: Method::DirectSeries,
        });
    }
    if s.re < -0.5 {
        return lambda_reflected(s);
    }
    let factor = (-s * std::f64::consts::LN_2).exp();
    let (v, e) = hurwitz_combination(
        s,
        &[Complex64::new(1.0, 0.0)],
        &[0.5],
        &EvalOptions::default(),
    )?;
    Ok(ZetaValue {
        value: factor * v,
        est_error: factor.norm() * e,
        method: Method::EulerMaclaurin,
    })
}

/// `lambda(s) = (2^s - 1) / (1 - 2^(s-1)) pi^(s-1) sin(pi s/2) Gamma(1-s) lambda(1-s)`.
///
/// Euler–Maclaurin loses a few digits for `Re s` well below zero (the
/// correction terms grow like `Gamma(k - s)`), while the reflected value
/// lives where the series is benign.
fn lambda_reflected(s: Complex64) -> Result<ZetaValue> {
    let u = 1.0 - s;
    let inner = dirichlet_lambda(u)?;
    let two_s = (s * std::f64::consts::LN_2).exp();
    let pi_pow = ((s - 1.0) * std::f64::consts::PI.ln()).exp();
    let factor = (two_s - 1.0) / (1.0 - two_s / 2.0) * pi_pow * sin_pi(s / 2.0) * gamma(u)?;
    Ok(ZetaValue {
        value: factor * inner.value,
        est_error: factor.norm() * inner.est_error + 4.0 * f64::EPSILON * (factor * inner.value).norm(),
        method: Method::FunctionalEquation,
    })
}

/// Dirichlet beta function `beta(s) = sum_{n>=0} (-1)^n (2n+1)^(-s)`, entire.
///
/// Evaluated as `4^(-s) (zeta(s, 1/4) - zeta(s, 3/4))`; within `0.1` of
/// `s = 1` the accelerated alternating series is used instead.
pub fn dirichlet_beta(s: Complex64) -> Result<ZetaValue> {
    if (s - 1.0).norm() < 0.1 {
        let value = alternating_sum(CVZ_TERMS, |k| odd_power(k, s));
        return Ok(ZetaValue {
            value,
            est_error: 1e-15 * value.norm().max(1.0),
            method: Method::AcceleratedSeries,
        });
    }
    let factor = (-s * (4f64).ln()).exp();
    let (v, e) = hurwitz_combination(
        s,
        &[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
        &[0.25, 0.75],
        &EvalOptions::default(),
    )?;
    Ok(ZetaValue {
        value: factor * v,
        est_error: factor.norm() * e,
        method: Method::HurwitzDifference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn lambda_even_values() {
        let l = |s: f64| dirichlet_lambda(c(s)).unwrap().value.re;
        assert_relative_eq!(l(2.0), PI.powi(2) / 8.0, max_relative = 1e-13);
        assert_relative_eq!(l(4.0), PI.powi(4) / 96.0, max_relative = 1e-13);
        assert_relative_eq!(l(6.0), PI.powi(6) / 960.0, max_relative = 1e-13);
        assert!(dirichlet_lambda(c(1.0)).is_err());
    }

    #[test]
    fn lambda_series_and_hurwitz_agree() {
        let s = c(20.5);
        let (series, _) = lambda_series(s);
        let factor = (-s * std::f64::consts::LN_2).exp();
        let (hz, _) = hurwitz_combination(s, &[c(1.0)], &[0.5], &EvalOptions::default()).unwrap();
        assert!((series - factor * hz).norm() < 1e-14);
    }

    #[test]
    fn beta_values() {
        let b = |s: f64| dirichlet_beta(c(s)).unwrap().value.re;
        assert_relative_eq!(b(1.0), PI / 4.0, max_relative = 1e-14);
        assert_relative_eq!(b(3.0), PI.powi(3) / 32.0, max_relative = 1e-14);
        assert_relative_eq!(b(5.0), 5.0 * PI.powi(5) / 1536.0, max_relative = 1e-14);
        assert_relative_eq!(b(2.0), CATALAN, max_relative = 1e-14);
        // beta(-2k) = E_{2k} / 2, beta(0) = 1/2
        assert_relative_eq!(b(0.0), 0.5, max_relative = 1e-14);
        assert_relative_eq!(b(-2.0), -0.5, max_relative = 1e-13);
        assert_relative_eq!(b(-4.0), 2.5, max_relative = 1e-13);
    }

    #[test]
    fn accelerated_series_matches_hurwitz_route() {
        for &s in &[c(1.05), Complex64::new(0.95, 0.05), c(2.0), c(0.5)] {
            let acc = alternating_sum(CVZ_TERMS, |k| odd_power(k, s));
            let factor = (-s * (4f64).ln()).exp();
            let (v, _) = hurwitz_combination(
                s,
                &[c(1.0), c(-1.0)],
                &[0.25, 0.75],
                &EvalOptions::default(),
            )
            .unwrap();
            assert!((acc - factor * v).norm() < 1e-13, "s={s}");
        }
    }

    #[test]
    fn catalan_from_plain_alternating_series() {
        // averaged partial sums of the raw series, an independent oracle
        let n = 200_000;
        let mut partial = 0.0;
        let mut prev = 0.0;
        for k in 0..n {
            prev = partial;
            let t = 1.0 / ((2 * k + 1) as f64).powi(2);
            partial += if k % 2 == 0 { t } else { -t };
        }
        let averaged = 0.5 * (partial + prev);
        assert!((dirichlet_beta(c(2.0)).unwrap().value.re - averaged).abs() < 1e-10);
    }

    #[test]
    fn lambda_minus_one_is_small_for_large_s() {
        let v = lambda_minus_one(c(40.0)).unwrap();
        assert_relative_eq!(v.re, 3f64.powi(-40), max_relative = 1e-6);
    }
}
