//! Abel-summation oracle for `l_{E,-k}(x) = sum_n e^{(2n+1) pi i x} (2n+1)^k`.
//!
//! The series diverges for `k >= 0`, but its Abel means
//! `A(r) = sum_n r^n e^{(2n+1) pi i x} (2n+1)^k` are rational functions of
//! `z = r e^{2 pi i x}` built from Eulerian numbers:
//!
//! ```text
//! sum_{n>=0} n^j z^n = z sum_{i<j} A(j, i) z^i / (1 - z)^(j+1)     (j >= 1)
//! ```
//!
//! The oracle evaluates `A(r)` on `r = 1 - h` for a geometric sequence of
//! `h` and extrapolates to `h = 0` (Neville), which is the Abel limit. It
//! shares no code with the Apostol–Bernoulli route it is used to validate.

use std::f64::consts::PI;

use num_complex::Complex64;

fn eulerian_row(j: usize) -> Vec<f64> {
    let mut row = vec![1.0];
    for n in 2..=j {
        let mut next = vec![0.0; n];
        for i in 0..n {
            let keep = if i < row.len() { (i + 1) as f64 * row[i] } else { 0.0 };
            let bump = if i >= 1 && i - 1 < row.len() { (n - i) as f64 * row[i - 1] } else { 0.0 };
            next[i] = keep + bump;
        }
        row = next;
    }
    row
}

fn power_sum(j: usize, z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    if j == 0 {
        return one / (one - z);
    }
    let row = eulerian_row(j);
    let mut num = Complex64::new(0.0, 0.0);
    let mut zi = z;
    for a in row {
        num += a * zi;
        zi *= z;
    }
    num / (one - z).powu(j as u32 + 1)
}

/// Abel mean `sum_n r^n e^{(2n+1) pi i x} (2n+1)^k` for `0 < r < 1`.
pub fn abel_lerch_partial(k: u32, x: f64, r: f64) -> Complex64 {
    let z = Complex64::from_polar(r, 2.0 * PI * x);
    let mut total = Complex64::new(0.0, 0.0);
    let mut binom = 1.0;
    for j in 0..=k as usize {
        // (2n + 1)^k = sum_j C(k, j) 2^j n^j
        total += binom * 2f64.powi(j as i32) * power_sum(j, z);
        binom *= (k as f64 - j as f64) / (j as f64 + 1.0);
    }
    Complex64::from_polar(1.0, PI * x) * total
}

/// Abel limit `r -> 1-` of [`abel_lerch_partial`], by polynomial
/// extrapolation in `h = 1 - r` over `h = 0.1 * 2^-i`, `i < 8`.
///
/// `x` must not be an integer (the limit is infinite there for `k = 0`).
pub fn abel_lerch_neg_int(k: u32, x: f64) -> Complex64 {
    const LEVELS: usize = 8;
    let hs: Vec<f64> = (0..LEVELS).map(|i| 0.1 * 0.5f64.powi(i as i32)).collect();
    let mut table: Vec<Complex64> = hs.iter().map(|&h| abel_lerch_partial(k, x, 1.0 - h)).collect();
    // Neville's scheme evaluated at h = 0
    for level in 1..LEVELS {
        for i in (level..LEVELS).rev() {
            let (hi, hj) = (hs[i], hs[i - level]);
            table[i] = (table[i] * hj - table[i - 1] * hi) / (hj - hi);
        }
    }
    table[LEVELS - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{lerch_e, lerch_e_neg_int};

    #[test]
    fn eulerian_numbers() {
        assert_eq!(eulerian_row(3), vec![1.0, 4.0, 1.0]);
        assert_eq!(eulerian_row(4), vec![1.0, 11.0, 11.0, 1.0]);
    }

    #[test]
    fn abel_means_match_truncated_series() {
        let (k, x, r) = (2, 0.3, 0.9_f64);
        let direct: Complex64 = (0..2000)
            .map(|n| {
                let m = (2 * n + 1) as f64;
                Complex64::from_polar(r.powi(n) * m.powi(k as i32), PI * x * m)
            })
            .sum();
        assert!((abel_lerch_partial(k, x, r) - direct).norm() < 1e-9);
    }

    #[test]
    fn limit_at_zero_is_cosecant() {
        for &x in &[0.2, 0.5, 0.75] {
            let v = abel_lerch_neg_int(0, x);
            let expected = Complex64::new(0.0, 0.5 / (PI * x).sin());
            assert!((v - expected).norm() < 1e-10, "x={x} {v}");
        }
    }

    #[test]
    fn agrees_with_apostol_bernoulli_and_continuation() {
        for k in 0..=4 {
            for &x in &[1.0 / 3.0, 0.2, 0.5, 0.8, 0.9] {
                let abel = abel_lerch_neg_int(k, x);
                let ab = lerch_e_neg_int(k, x).unwrap();
                let fe = lerch_e(Complex64::new(-(k as f64), 0.0), x).unwrap();
                let scale = ab.norm().max(1.0);
                assert!((abel - ab).norm() < 1e-8 * scale, "k={k} x={x}: {abel} vs {ab}");
                assert!((fe - ab).norm() < 1e-10 * scale, "k={k} x={x}: {fe} vs {ab}");
            }
        }
    }

    #[test]
    fn reflection_is_minus_conjugate() {
        // l(1 - x) = -conj(l(x)) for real s; the naive l(1 - x) = -l(x) only
        // holds where l is real, e.g. at s = -1
        for k in 0..=3 {
            let x = 0.3;
            let a = abel_lerch_neg_int(k, x);
            let b = abel_lerch_neg_int(k, 1.0 - x);
            assert!((b + a.conj()).norm() < 1e-8 * a.norm().max(1.0));
        }
    }
}
