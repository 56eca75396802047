//! Lerch-type sums `sum_n e^{2 pi i n x} f(n)` with `f(y) = (c y + d)^(-s)`.
//!
//! For a non-integer `x` the ratio `omega = e^{2 pi i x}` differs from one and
//! the tail beyond `N` is handled by Boole summation:
//!
//! ```text
//! sum_{n>=N} omega^n f(n) = omega^N sum_k a_k f^(k)(N),   a_k = [t^k] 1 / (1 - omega e^t)
//! ```
//!
//! The expansion is asymptotic (the generating function has poles at distance
//! `2 pi dist(x, Z)`), so `N` is chosen large enough that the tail terms
//! reach rounding level before they start to grow.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::euler::zeta_e;
use super::gamma::gamma;
use super::hurwitz::hurwitz_combination;
use super::{hurwitz_zeta, EvalOptions};
use crate::error::{domain, Result};
use crate::poly::apostol_bernoulli;

const BOOLE_TERMS: usize = 40;

fn boole_coefficients(omega: Complex64, k_max: usize) -> Vec<Complex64> {
    let inv = 1.0 / (1.0 - omega);
    let mut a = Vec::with_capacity(k_max + 1);
    a.push(inv);
    for k in 1..=k_max {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut inv_fact = 1.0;
        for j in 1..=k {
            inv_fact /= j as f64;
            acc += a[k - j] * inv_fact;
        }
        a.push(omega * acc * inv);
    }
    a
}

fn frac_distance(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Smallest head length `N` for which some Boole tail term falls below
/// `1e-16 * max(1, |f(N)|)`; the tail is truncated at its smallest term.
fn boole_start(a: &[Complex64], c: f64, d: f64, s: Complex64) -> usize {
    let a_norm: Vec<f64> = a.iter().map(|v| v.norm()).collect();
    let smallest_term = |n: usize| -> f64 {
        let y = c * n as f64 + d;
        let lead = y.powf(-s.re);
        let mut factor = lead;
        let mut best = f64::INFINITY;
        let mut prev = f64::INFINITY;
        for (k, ak) in a_norm.iter().enumerate() {
            // pairs of terms, since a_k may vanish for every other k
            let t = ak * factor;
            best = best.min(t.max(prev));
            prev = t;
            factor *= (s + k as f64).norm() * c / y;
        }
        best / lead.max(1.0)
    };
    let ok = |n: usize| smallest_term(n) <= 1e-16;
    if ok(4) {
        return 4;
    }
    let mut hi = 8usize;
    while !ok(hi) && hi < 1 << 24 {
        hi *= 2;
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// `sum_{n>=0} e^{2 pi i n x} (c n + d)^(-s)` for non-integer `x`, `c, d > 0`.
fn boole_sum(x: f64, c: f64, d: f64, s: Complex64) -> (Complex64, f64) {
    let omega = Complex64::from_polar(1.0, 2.0 * PI * x);
    let a = boole_coefficients(omega, BOOLE_TERMS);
    let n = boole_start(&a, c, d, s);

    let mut head = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut phase = Complex64::new(1.0, 0.0);
    for j in 0..n {
        let t = phase * (-s * (c * j as f64 + d).ln()).exp();
        magnitude += t.norm();
        head += t;
        phase *= omega;
    }
    // omega^N recomputed directly to avoid accumulated rounding in `phase`
    let omega_n = Complex64::from_polar(1.0, 2.0 * PI * (x * n as f64).fract());
    let y = c * n as f64 + d;
    let mut deriv = (-s * y.ln()).exp(); // f^(k)(N) = (-1)^k (s)_k c^k y^(-s-k)
    let mut tail = Complex64::new(0.0, 0.0);
    // a_k can vanish for every other k (omega = -1), so growth and
    // convergence are judged on the larger of two consecutive terms
    let mut prev = f64::INFINITY;
    let mut last = f64::INFINITY;
    for (k, ak) in a.iter().enumerate() {
        let t = ak * deriv;
        let size = t.norm();
        if k >= 2 && size.max(last) > prev.max(last) {
            break;
        }
        tail += t;
        prev = last;
        last = size;
        if k >= 1 && size.max(prev) <= 1e-18 * (head + tail).norm().max(1e-300) {
            break;
        }
        deriv *= -(s + k as f64) * (c / y);
    }
    let last = if prev.is_finite() { last.max(prev) } else { last };
    let total = head + omega_n * tail;
    (total, last + 4.0 * f64::EPSILON * magnitude)
}

fn check_open_unit(x: f64, name: &str) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(domain(format!("{name} requires 0 < x < 1, got {x}")));
    }
    Ok(())
}

/// Lerch-type Euler zeta function `l_{E,s}(x) = sum_{n>=0} e^{(2n+1) pi i x} / (2n+1)^s`.
///
/// For `Re s > 1` (and near `s = 1`, where the series is still summable)
/// the series is evaluated directly with a Boole-summation tail; elsewhere
/// it is continued through
///
/// ```text
/// l_{E,s}(x) = Gamma(1-s) / (2 pi^(1-s)) * (e^{pi i (1-s)/2} zeta_E(1-s, x) - e^{-pi i (1-s)/2} zeta_E(1-s, 1-x))
/// ```
pub fn lerch_e(s: Complex64, x: f64) -> Result<Complex64> {
    check_open_unit(x, "lerch_e")?;
    Ok(lerch_e_with_error(s, x)?.0)
}

pub(crate) fn lerch_e_with_error(s: Complex64, x: f64) -> Result<(Complex64, f64)> {
    if s.re > 1.0 || (s - 1.0).norm() < 0.5 {
        return Ok(lerch_e_direct(s, x));
    }
    let u = Complex64::new(1.0, 0.0) - s;
    let opts = EvalOptions::default();
    let pref = gamma(u)? / (2.0 * (u * PI.ln()).exp());
    let rot = Complex64::new(0.0, PI / 2.0) * u;
    let a = zeta_e(u, x, &opts)?;
    let b = zeta_e(u, 1.0 - x, &opts)?;
    let value = pref * (rot.exp() * a.value - (-rot).exp() * b.value);
    let scale = pref.norm() * (rot.exp().norm() + (-rot).exp().norm());
    Ok((value, scale * (a.est_error + b.est_error)))
}

pub(crate) fn lerch_e_direct(s: Complex64, x: f64) -> (Complex64, f64) {
    let (v, e) = boole_sum(x, 2.0, 1.0, s);
    (Complex64::from_polar(1.0, PI * x) * v, e)
}

/// `l_{E,s}(p/q)` as a finite combination of Hurwitz zeta values:
/// `(2q)^(-s) sum_{r=1}^{q} e^{(2r-1) pi i p / q} zeta(s, (2r-1)/(2q))`.
///
/// For `p < q` the coefficients sum to zero and the combination is regular
/// at `s = 1`; `p = q` gives `-lambda(s)` with its pole.
pub fn lerch_e_rational(s: Complex64, p: u32, q: u32) -> Result<Complex64> {
    if p < 1 || p > q {
        return Err(domain(format!("lerch_e_rational requires 1 <= p <= q, got p={p}, q={q}")));
    }
    let qf = q as f64;
    let coeffs: Vec<Complex64> = (1..=q)
        .map(|r| Complex64::from_polar(1.0, PI * ((2 * r - 1) as f64 * p as f64 / qf).rem_euclid(2.0)))
        .collect();
    let a: Vec<f64> = (1..=q).map(|r| (2 * r - 1) as f64 / (2.0 * qf)).collect();
    let (v, _) = hurwitz_combination(s, &coeffs, &a, &EvalOptions::default())?;
    Ok((-s * (2.0 * qf).ln()).exp() * v)
}

/// `l_{E,-m}(x) = -2^m e^{pi i x} B_{m+1}(1/2, e^{2 pi i x}) / (m + 1)`.
pub fn lerch_e_neg_int(m: u32, x: f64) -> Result<Complex64> {
    check_open_unit(x, "lerch_e_neg_int")?;
    let alpha = Complex64::from_polar(1.0, 2.0 * PI * x);
    let b = apostol_bernoulli(m as usize + 1, 0.5, alpha);
    Ok(-(2f64.powi(m as i32)) * Complex64::from_polar(1.0, PI * x) * b / (m as f64 + 1.0))
}

/// Power Dirichlet series `phi(x, a, s) = sum_{n>=0} e^{2 n pi i x} / (n + a)^s`.
///
/// Integer `x` reduces to `zeta(s, a)`; nonpositive integer `s = -m` uses
/// `phi(x, a, -m) = -B_{m+1}(a, e^{2 pi i x}) / (m + 1)`; otherwise the
/// series is summed with a Boole tail, which continues it to all `s`.
pub fn phi_lerch(x: f64, a: f64, s: Complex64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(domain(format!("phi_lerch requires a > 0, got {a}")));
    }
    if frac_distance(x) < 1e-15 {
        return Ok(hurwitz_zeta(s, a, &EvalOptions::default())?.value);
    }
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        let m = (-s.re) as usize;
        let alpha = Complex64::from_polar(1.0, 2.0 * PI * x);
        return Ok(-apostol_bernoulli(m + 1, a, alpha) / (m as f64 + 1.0));
    }
    Ok(boole_sum(x, 1.0, a, s).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::dirichlet_beta;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn value_at_zero() {
        let v = lerch_e(c(0.0), 0.5).unwrap();
        assert!((v - Complex64::new(0.0, 0.5)).norm() < 1e-12);
        let v = lerch_e_neg_int(0, 0.25).unwrap();
        assert!((v - Complex64::new(0.0, 1.0 / 2f64.sqrt())).norm() < 1e-14);
    }

    #[test]
    fn catalan_at_one_half() {
        let g = dirichlet_beta(c(2.0)).unwrap().value.re;
        let v = lerch_e(c(2.0), 0.5).unwrap();
        assert!((v - Complex64::new(0.0, g)).norm() < 1e-13);
    }

    #[test]
    fn direct_series_oracle() {
        // plain partial sums at Re(s) = 3 converge absolutely
        let (s, x) = (3.0, 1.0 / 3.0);
        let n = 200_000;
        let oracle: Complex64 = (0..n)
            .map(|k| {
                let m = (2 * k + 1) as f64;
                Complex64::from_polar(m.powf(-s), PI * (m * x).rem_euclid(2.0))
            })
            .sum();
        let v = lerch_e(c(s), x).unwrap();
        assert!((v - oracle).norm() < 1e-10);
        let r = lerch_e_rational(c(s), 1, 3).unwrap();
        assert!((r - oracle).norm() < 1e-10);
    }

    #[test]
    fn negative_one_values() {
        // derivative oracle: l_{E,-1}(x) = -cos(pi x) / (2 sin^2(pi x))
        for &x in &[1.0 / 3.0, 2.0 / 3.0, 0.2, 0.45] {
            let expected = -(PI * x).cos() / (2.0 * (PI * x).sin().powi(2));
            let v = lerch_e_neg_int(1, x).unwrap();
            assert!((v - c(expected)).norm() < 1e-12, "x={x}");
            let w = lerch_e(c(-1.0), x).unwrap();
            assert!((w - c(expected)).norm() < 1e-11, "x={x}");
        }
        assert!((lerch_e_neg_int(1, 1.0 / 3.0).unwrap().re + 1.0 / 3.0).abs() < 1e-14);
        assert!((lerch_e_neg_int(1, 2.0 / 3.0).unwrap().re - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn routes_agree_across_the_plane() {
        // Boole summation is valid for all s; compare with the continuation route
        for &s in &[c(0.3), c(-1.5), Complex64::new(0.2, 1.0), c(-3.0)] {
            for &x in &[0.2, 0.5, 0.7] {
                let (direct, _) = lerch_e_direct(s, x);
                let (cont, _) = lerch_e_with_error(s, x).unwrap();
                assert!((direct - cont).norm() < 1e-10 * cont.norm().max(1.0), "s={s} x={x}");
            }
        }
    }

    #[test]
    fn rational_route_agrees() {
        for &s in &[c(2.0), c(-1.5), Complex64::new(1.5, 0.5), c(1.0), c(0.5)] {
            for &(p, q) in &[(1u32, 2u32), (1, 3), (2, 3), (2, 5), (4, 5)] {
                let a = lerch_e_rational(s, p, q).unwrap();
                let b = lerch_e(s, p as f64 / q as f64).unwrap();
                assert!((a - b).norm() < 1e-10 * b.norm().max(1.0), "s={s} p={p} q={q}");
            }
        }
        let v = lerch_e_rational(c(-1.0), 1, 3).unwrap();
        assert!((v - lerch_e_neg_int(1, 1.0 / 3.0).unwrap()).norm() < 1e-12);
        assert!(lerch_e_rational(c(1.0), 3, 3).is_err());
    }

    #[test]
    fn half_argument_formula() {
        let s = -1.5;
        let u = 1.0 - s;
        let g = crate::zeta::gamma_real(u).unwrap();
        let z = zeta_e(c(u), 0.5, &EvalOptions::default()).unwrap().value.re;
        let expected = g / PI.powf(u) * (PI * u / 2.0).sin() * z;
        let v = lerch_e(c(s), 0.5).unwrap();
        assert!((v - Complex64::new(0.0, expected)).norm() < 1e-12);
    }

    #[test]
    fn reflection_relations() {
        // l(1 - x) = -l(-x) = -conj(l(x)) for real s
        for &s in &[-2.5, -1.0, 0.5, 2.0, 3.5] {
            for &x in &[0.15, 0.3, 0.5] {
                let a = lerch_e(c(s), x).unwrap();
                let b = lerch_e(c(s), 1.0 - x).unwrap();
                assert!((b + a.conj()).norm() < 1e-10, "s={s} x={x}");
            }
        }
        // the literal odd relation holds where l is real, e.g. s = -1
        let a = lerch_e(c(-1.0), 0.3).unwrap();
        let b = lerch_e(c(-1.0), 0.7).unwrap();
        assert!((a + b).norm() < 1e-12);
    }

    #[test]
    fn phi_relations() {
        let (s, x) = (3.0, 0.3);
        let phi = phi_lerch(x, 0.5, c(s)).unwrap();
        let expected = 2f64.powf(s) * Complex64::from_polar(1.0, -PI * x) * lerch_e(c(s), x).unwrap();
        assert!((phi - expected).norm() < 1e-12);
        let v = phi_lerch(1.0 / 3.0, 0.5, c(-2.0)).unwrap();
        let alpha = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        assert!((v + apostol_bernoulli(3, 0.5, alpha) / 3.0).norm() < 1e-14);
        let z = phi_lerch(0.0, 1.0, c(2.0)).unwrap();
        assert!((z.re - PI * PI / 6.0).abs() < 1e-13);
        // Boole branch vs the Apostol closed form at a nonpositive integer
        let near = boole_sum(0.3, 1.0, 0.7, c(-2.0)).0;
        let alpha = Complex64::from_polar(1.0, 2.0 * PI * 0.3);
        assert!((near + apostol_bernoulli(3, 0.7, alpha) / 3.0).norm() < 1e-10);
        assert!(phi_lerch(0.3, 0.0, c(2.0)).is_err());
    }

    #[test]
    fn domain_checks() {
        assert!(lerch_e(c(2.0), 0.0).is_err());
        assert!(lerch_e(c(2.0), 1.0).is_err());
        assert!(lerch_e_rational(c(2.0), 0, 3).is_err());
    }
}
