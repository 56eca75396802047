//! Exact Bernoulli and Euler kernels plus the Apostol–Bernoulli recurrence.

mod numbers;
mod polynomial;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{domain, Result};

pub use numbers::{
    bernoulli_number, bernoulli_polynomial, binomial, euler_number, euler_poly_at_zero,
    euler_polynomial, factorial,
};
pub use polynomial::RationalPolynomial;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Apostol–Bernoulli polynomial `B_m(a, alpha)`, the coefficients of
/// `z e^{az} / (alpha e^z - 1)`.
///
/// For `alpha != 1`, multiplying the generating function through by
/// `alpha e^z - 1` and matching `z^m / m!` gives `B_0 = 0` and
///
/// ```text
/// (alpha - 1) B_m = m a^(m-1) - alpha * sum_{k<m} C(m, k) B_k
/// ```
///
/// When `alpha` is within `1e-12` of one, the classical `B_m(a)` is returned.
pub fn apostol_bernoulli(m: usize, a: f64, alpha: Complex64) -> Complex64 {
    if (alpha - 1.0).norm() < 1e-12 {
        return Complex64::new(bernoulli_polynomial(m).eval_f64(a), 0.0);
    }
    let inv = 1.0 / (alpha - 1.0);
    let mut table = vec![Complex64::new(0.0, 0.0)];
    // binomial row C(n, k) kept as floats; exact up to n ~ 50
    let mut row = vec![1.0_f64];
    for n in 1..=m {
        let mut next = vec![1.0_f64; n + 1];
        for k in 1..n {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, b) in table.iter().enumerate() {
            acc += b * row[k];
        }
        let lead = n as f64 * a.powi(n as i32 - 1);
        table.push((lead - alpha * acc) * inv);
    }
    table[m]
}

/// Rising factorial `(s)_k = s (s+1) ... (s+k-1)`.
pub fn pochhammer(s: Complex64, k: usize) -> Complex64 {
    (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (s + j as f64))
}

/// `delta_2(s) = (1 - 2^(s+1)) / (1 - 2^s)`, undefined at `s = 0`.
pub fn delta2(s: f64) -> Result<f64> {
    if s == 0.0 {
        return Err(domain("delta2 requires s != 0"));
    }
    // expm1 keeps the ratio accurate for s near zero
    let ln2 = std::f64::consts::LN_2;
    Ok((-(ln2 * (s + 1.0)).exp_m1()) / (-(ln2 * s).exp_m1()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Coefficients of `z e^{az} / (alpha e^z - 1)` by complex series division,
    /// scaled by `m!`.
    fn apostol_oracle(n: usize, a: f64, alpha: Complex64) -> Vec<Complex64> {
        let fact = |k: usize| (1..=k).fold(1.0, |acc, j| acc * j as f64);
        // numerator z e^{az}: coefficient of z^k is a^{k-1}/(k-1)!
        let num: Vec<Complex64> = (0..=n + 1)
            .map(|k| {
                if k == 0 {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(a.powi(k as i32 - 1) / fact(k - 1), 0.0)
                }
            })
            .collect();
        let den: Vec<Complex64> = (0..=n + 1)
            .map(|k| alpha / fact(k) - if k == 0 { 1.0 } else { 0.0 })
            .collect();
        let mut q: Vec<Complex64> = Vec::new();
        for k in 0..=n {
            let mut acc = num[k];
            for j in 1..=k {
                acc -= den[j] * q[k - j];
            }
            q.push(acc / den[0]);
        }
        q.iter().enumerate().map(|(k, c)| c * fact(k)).collect()
    }

    #[test]
    fn apostol_first_order_value() {
        let v = apostol_bernoulli(1, 0.5, Complex64::new(-1.0, 0.0));
        assert_relative_eq!(v.re, -0.5, epsilon = 1e-15);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn apostol_matches_series_oracle() {
        for &alpha in &[
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0),
            Complex64::new(0.3, -2.0),
        ] {
            for &a in &[0.0, 0.5, 0.8] {
                let oracle = apostol_oracle(10, a, alpha);
                for (m, o) in oracle.iter().enumerate() {
                    let v = apostol_bernoulli(m, a, alpha);
                    assert!((v - o).norm() <= 1e-10 * o.norm().max(1.0), "m={m} a={a}");
                }
            }
        }
    }

    #[test]
    fn apostol_reduces_at_alpha_one() {
        for m in 0..=6 {
            for &a in &[0.0, 0.5, 1.0] {
                let v = apostol_bernoulli(m, a, Complex64::new(1.0, 0.0));
                let b = bernoulli_polynomial(m).eval_f64(a);
                assert!((v.re - b).abs() <= 1e-12 * b.abs().max(1.0));
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        let s = Complex64::new(0.3, 0.7);
        assert_eq!(pochhammer(s, 0), Complex64::new(1.0, 0.0));
        assert_relative_eq!(pochhammer(Complex64::new(1.0, 0.0), 5).re, 120.0);
        assert_relative_eq!(pochhammer(Complex64::new(-0.5, 0.0), 3).re, -0.375);
    }

    #[test]
    fn delta2_values() {
        assert_relative_eq!(delta2(1.0).unwrap(), 3.0, epsilon = 1e-15);
        assert!(delta2(-1.0).unwrap().abs() < 1e-15);
        assert!(delta2(0.0).is_err());
        assert_relative_eq!(delta2(-2.5).unwrap(), (1.0 - 2f64.powf(-1.5)) / (1.0 - 2f64.powf(-2.5)));
    }
}
