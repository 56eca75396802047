use num_complex::Complex64;

use super::dirichlet::lambda_minus_one;
use crate::error::{domain, Result};

/// Largest `|x|` accepted by [`transcendental_f`]; beyond it the geometric
/// tail bound degrades too quickly to certify the truncation.
pub const TRANSCENDENTAL_RADIUS: f64 = 0.95;

/// `F(x, s) = sum_{n>=0} lambda(n + 2 - s) x^n` for `|x| < 0.95`.
///
/// Since `lambda(k) -> 1`, the series is split as
/// `1/(1-x) + sum_n (lambda(n+2-s) - 1) x^n`; the second sum decays like
/// `(|x|/3)^n` and is truncated once its terms drop below `1e-18`.
/// Returns the value together with a bound on the truncation error.
pub fn transcendental_f(x: Complex64, s: Complex64) -> Result<(Complex64, f64)> {
    let r = x.norm();
    if r >= TRANSCENDENTAL_RADIUS {
        return Err(domain(format!(
            "transcendental_f requires |x| < {TRANSCENDENTAL_RADIUS}, got {r}"
        )));
    }
    let one = Complex64::new(1.0, 0.0);
    let mut sum = one / (one - x);
    let mut power = one;
    let mut n = 0usize;
    let mut last;
    loop {
        let k = Complex64::new(n as f64 + 2.0, 0.0) - s;
        let t = lambda_minus_one(k)? * power;
        sum += t;
        last = t.norm();
        n += 1;
        power *= x;
        // once Re(k) > 2, (lambda(k) - 1) shrinks at least by 1/3 per step
        if k.re > 2.0 && (last < 1e-18 * sum.norm().max(1.0) || power.norm() < 1e-300) {
            break;
        }
        if n > 10_000 {
            break;
        }
    }
    let ratio = r / 3.0;
    Ok((sum, last * ratio / (1.0 - ratio) + 4.0 * f64::EPSILON * sum.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::dirichlet_lambda;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn value_at_origin() {
        let (v, _) = transcendental_f(c(0.0), c(0.0)).unwrap();
        assert!((v.re - PI * PI / 8.0).abs() < 1e-14);
        let (v, _) = transcendental_f(c(0.0), c(-1.5)).unwrap();
        let l = dirichlet_lambda(c(3.5)).unwrap().value.re;
        assert!((v.re - l).abs() < 1e-14);
    }

    #[test]
    fn double_sum_oracle() {
        // sum_n x^n sum_j (2j+1)^{-(n+2)} exchanged: sum_j (2j+1)^{-2} / (1 - x/(2j+1))
        let x = 0.5;
        let terms = 2_000_000;
        let oracle: f64 = (0..terms)
            .map(|j| {
                let m = (2 * j + 1) as f64;
                1.0 / (m * m) / (1.0 - x / m)
            })
            .sum::<f64>()
            + 1.0 / (4.0 * terms as f64); // sum_{j>=J} (2j+1)^{-2} ~ 1/(4J)
        let (v, _) = transcendental_f(c(x), c(0.0)).unwrap();
        assert!((v.re - oracle).abs() < 1e-6);
    }

    #[test]
    fn tanh_closed_form() {
        // Re(e^{i pi s/2} F(2it, s)) at s = -2, k = 1:
        // (pi t/2 tanh(pi t) - lambda(2) (2t)^2) / (2t)^4
        let t = 0.25;
        let s = -2.0;
        let (f, _) = transcendental_f(Complex64::new(0.0, 2.0 * t), c(s)).unwrap();
        let lhs = (Complex64::new(0.0, PI * s / 2.0).exp() * f).re;
        let lam2 = PI * PI / 8.0;
        let rhs = (PI * t / 2.0 * (PI * t).tanh() - lam2 * (2.0 * t).powi(2)) / (2.0 * t).powi(4);
        assert!((lhs - rhs).abs() < 1e-12, "{lhs} vs {rhs}");
    }

    #[test]
    fn rejects_large_argument() {
        assert!(transcendental_f(c(0.95), c(0.0)).is_err());
        assert!(transcendental_f(Complex64::new(0.0, 0.96), c(0.0)).is_err());
    }
}
