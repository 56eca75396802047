use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{pole, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// `sin(pi z)` with exact zeros at the integers.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = z.re - n;
    // sin(pi (n + r)) = (-1)^n sin(pi r)
    let sign = if n.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
    if z.im == 0.0 {
        return Complex64::new(sign * (PI * r).sin(), 0.0);
    }
    (Complex64::new(r, z.im) * PI).sin() * sign
}

/// `cos(pi z)` with exact zeros at the half-integers.
pub fn cos_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = z.re - n;
    let sign = if n.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
    if z.im == 0.0 {
        // 0.5 - |r| is exact here, which keeps full relative accuracy near the zeros
        let v = if r.abs() > 0.25 { (PI * (0.5 - r.abs())).sin() } else { (PI * r).cos() };
        return Complex64::new(sign * v, 0.0);
    }
    (Complex64::new(r, z.im) * PI).cos() * sign
}

/// Euler gamma function via the Lanczos approximation (g = 7, nine terms),
/// reflected through `Gamma(s) Gamma(1-s) = pi / sin(pi s)` when `Re s < 1/2`.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(pole(format!("gamma has a pole at s = {}", s.re)));
    }
    if s.re < 0.5 {
        let g = gamma_lanczos(Complex64::new(1.0, 0.0) - s);
        return Ok(PI / (sin_pi(s) * g));
    }
    Ok(gamma_lanczos(s))
}

/// Real-argument gamma; a thin wrapper for the many real call sites.
pub fn gamma_real(s: f64) -> Result<f64> {
    gamma(Complex64::new(s, 0.0)).map(|g| g.re)
}

fn gamma_lanczos(s: Complex64) -> Complex64 {
    let z = s - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `B(s, t) = Gamma(s) Gamma(t) / Gamma(s + t)`.
pub fn beta_function(s: Complex64, t: Complex64) -> Result<Complex64> {
    Ok(gamma(s)? * gamma(t)? / gamma(s + t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn half_integer_values() {
        let sqrt_pi = PI.sqrt();
        assert_relative_eq!(gamma(c(0.5)).unwrap().re, sqrt_pi, max_relative = 1e-14);
        for (m, expected) in [(1, 0.5), (2, 0.75), (3, 1.875)] {
            let g = gamma(c(m as f64 + 0.5)).unwrap();
            assert_relative_eq!(g.re, expected * sqrt_pi, max_relative = 1e-14);
        }
        assert_relative_eq!(gamma(c(-0.5)).unwrap().re, -2.0 * sqrt_pi, max_relative = 1e-14);
    }

    #[test]
    fn factorials() {
        assert_relative_eq!(gamma(c(5.0)).unwrap().re, 24.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(c(11.0)).unwrap().re, 3_628_800.0, max_relative = 1e-13);
    }

    #[test]
    fn poles_are_errors() {
        for s in [0.0, -1.0, -2.0, -7.0] {
            assert!(gamma(c(s)).is_err());
        }
    }

    #[test]
    fn complex_reflection_consistency() {
        let s = Complex64::new(0.3, 1.7);
        let lhs = gamma(s).unwrap() * gamma(Complex64::new(1.0, 0.0) - s).unwrap();
        let rhs = PI / sin_pi(s);
        assert!((lhs - rhs).norm() < 1e-13 * rhs.norm());
        // recurrence Gamma(s + 1) = s Gamma(s)
        let g1 = gamma(s + 1.0).unwrap();
        assert!((g1 - s * gamma(s).unwrap()).norm() < 1e-13 * g1.norm());
    }

    #[test]
    fn trig_helpers_have_exact_zeros() {
        assert_eq!(sin_pi(c(3.0)).re, 0.0);
        assert_eq!(cos_pi(c(-2.5)).re, 0.0);
        assert_relative_eq!(sin_pi(c(0.5)).re, 1.0);
        assert_relative_eq!(cos_pi(c(1.0)).re, -1.0);
    }

    #[test]
    fn beta_values() {
        assert_relative_eq!(beta_function(c(1.0), c(1.0)).unwrap().re, 1.0, max_relative = 1e-14);
        assert_relative_eq!(beta_function(c(3.0), c(3.0)).unwrap().re, 1.0 / 30.0, max_relative = 1e-13);
        assert_relative_eq!(beta_function(c(0.5), c(0.5)).unwrap().re, PI, max_relative = 1e-14);
    }
}
