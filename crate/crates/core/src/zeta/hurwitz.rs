//! Euler–Maclaurin evaluation of Hurwitz zeta values and of pole-free linear
//! combinations `sum_r c_r zeta(s, a_r)`.
//!
//! All terms of a combination share one tail start `N`. The integral tails
//! `A_r^(1-s) / (s-1)` are folded around a common reference point so that,
//! when the coefficients sum to zero, the `s = 1` pole cancels analytically
//! instead of numerically:
//!
//! ```text
//! (A^u - B^u) / (s - 1) = -B^u ln(A/B) * expm1(u ln(A/B)) / (u ln(A/B)),   u = 1 - s
//! ```

use std::ops::Mul;
use std::sync::LazyLock;

use num_complex::{Complex64, ComplexFloat};
use num_traits::ToPrimitive;

use super::{EvalOptions, Method, ZetaValue};
use crate::error::{domain, pole, Result};
use crate::poly::bernoulli_number;

const MAX_CORRECTIONS: usize = 30;

/// `B_{2k} / (2k)!` for `k = 0..=MAX_CORRECTIONS + 1`.
static CORRECTION: LazyLock<Vec<f64>> = LazyLock::new(|| {
    let mut fact = 1.0_f64;
    let mut out = Vec::with_capacity(MAX_CORRECTIONS + 2);
    for k in 0..=MAX_CORRECTIONS + 1 {
        if k > 0 {
            fact *= (2 * k - 1) as f64 * (2 * k) as f64;
        }
        out.push(bernoulli_number(2 * k).to_f64().unwrap_or(f64::NAN) / fact);
    }
    out
});

/// Scalar types the summation runs over: `f64` for the real fast path and
/// `Complex64` in general.
trait EmScalar: ComplexFloat<Real = f64> + From<f64> + Mul<f64, Output = Self> {
    fn expm1(self) -> Self;
    fn into_complex(self) -> Complex64;
}

impl EmScalar for f64 {
    fn expm1(self) -> Self {
        self.exp_m1()
    }
    fn into_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl EmScalar for Complex64 {
    fn expm1(self) -> Self {
        complex_expm1(self)
    }
    fn into_complex(self) -> Complex64 {
        self
    }
}

/// `e^z - 1` without cancellation near `z = 0`.
pub(crate) fn complex_expm1(z: Complex64) -> Complex64 {
    let half_sin = (0.5 * z.im).sin();
    Complex64::new(
        z.re.exp_m1() * z.im.cos() - 2.0 * half_sin * half_sin,
        z.re.exp() * z.im.sin(),
    )
}

fn lift<T: EmScalar>(x: f64) -> T {
    <T as From<f64>>::from(x)
}

fn expm1_ratio<T: EmScalar>(z: T) -> T {
    if z.abs() < 1e-300 {
        lift(1.0)
    } else {
        z.expm1() / z
    }
}

struct Plan {
    n: usize,
    m: usize,
}

fn nonpositive_integer(s: Complex64) -> Option<usize> {
    (s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()).then(|| (-s.re) as usize)
}

/// Chooses the tail start `N` and correction count `M`.
///
/// `M` grows with `-Re s` so the correction series eventually decreases in
/// `A`; `N` is then the smallest start for which the first omitted term is
/// below `tol * scale` and `A >= |s + 2M + 1| / (2 pi)`.
fn plan(s: Complex64, a: &[f64], weights: &[f64], opts: &EvalOptions) -> Plan {
    let m_req = opts.em_correction_terms.clamp(1, MAX_CORRECTIONS);
    if let Some(k) = nonpositive_integer(s) {
        // (s)_{2j-1} vanishes once 2j - 1 > k: the expansion is exact at N = 0
        let m = (k + 2).div_ceil(2).max(1);
        if m <= MAX_CORRECTIONS {
            return Plan { n: 0, m };
        }
    }
    let m = m_req
        .max(((-s.re).max(0.0) / 2.0).ceil() as usize + 2)
        .min(MAX_CORRECTIONS);
    if let Some(n) = opts.em_tail_start {
        return Plan { n, m };
    }
    let a_min = a.iter().cloned().fold(f64::INFINITY, f64::min);
    let c_next = CORRECTION[m + 1].abs();
    let poch = (0..2 * m + 1).fold(1.0, |acc, j| acc * (s + j as f64).norm());
    let min_a = (s + (2 * m + 1) as f64).norm() / (2.0 * std::f64::consts::PI);
    let scale = a
        .iter()
        .zip(weights)
        .map(|(&ar, &w)| w * ar.powf(-s.re))
        .sum::<f64>()
        .max(1.0);
    let omitted = |n: usize| -> f64 {
        a.iter()
            .zip(weights)
            .map(|(&ar, &w)| {
                let big_a = ar + n as f64;
                w * c_next * poch * big_a.powf(-s.re - (2 * m + 1) as f64)
            })
            .sum()
    };
    let mut n = ((min_a - a_min).ceil().max(0.0)) as usize;
    let cap = opts.max_series_terms.max(1);
    let target = opts.target_abs_tol * scale;
    if omitted(n) > target {
        // exponential search, then bisection
        let mut hi = n.max(1);
        while omitted(hi) > target && hi < cap {
            hi = (hi * 2).min(cap);
        }
        let mut lo = n;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if omitted(mid) > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        n = hi;
    }
    Plan { n, m }
}

fn em_sum<T: EmScalar>(s: T, coeffs: &[T], sum_c: T, a: &[f64], plan: &Plan) -> (T, f64) {
    let zero: T = lift(0.0);
    let one: T = lift(1.0);
    let u = one - s;
    let reference = a[0] + plan.n as f64;
    let ln_ref = reference.ln();
    let ref_pow_u = (u * ln_ref).exp();

    let mut total = zero;
    let mut magnitude = 0.0;
    let mut omitted = 0.0;
    for (&c, &ar) in coeffs.iter().zip(a) {
        for n in 0..plan.n {
            let t = c * (-s * (ar + n as f64).ln()).exp();
            magnitude += t.abs();
            total = total + t;
        }
        let big_a = ar + plan.n as f64;
        let ln_a = big_a.ln();
        let pow_s = (-s * ln_a).exp();
        // pole-free part of the integral tail
        let l = ln_a - ln_ref;
        let z = u * l;
        let tail = -(ref_pow_u * expm1_ratio(z)) * l;
        let mut part = tail + pow_s * 0.5;
        // Bernoulli corrections B_{2k}/(2k)! (s)_{2k-1} A^{-s-2k+1}
        let inv_a2 = 1.0 / (big_a * big_a);
        let mut poch = s;
        let mut power = pow_s * (1.0 / big_a);
        for k in 1..=plan.m {
            let term = poch * power * CORRECTION[k];
            magnitude += (c * term).abs();
            part = part + term;
            let k2 = (2 * k) as f64;
            poch = poch * (s + lift(k2 - 1.0)) * (s + lift(k2));
            power = power * inv_a2;
        }
        omitted += (c * poch * power * CORRECTION[plan.m + 1]).abs();
        magnitude += (c * part).abs();
        total = total + c * part;
    }
    if sum_c.abs() > 0.0 {
        total = total + sum_c * ref_pow_u / (s - one);
    }
    (total, omitted + 4.0 * f64::EPSILON * magnitude)
}

/// Evaluates `sum_r c_r zeta(s, a_r)` by Euler–Maclaurin with a shared tail.
///
/// A pole at `s = 1` is reported only when the coefficients do not sum to
/// zero; otherwise the combination is analytic there and computed directly.
pub(crate) fn hurwitz_combination(
    s: Complex64,
    coeffs: &[Complex64],
    a: &[f64],
    opts: &EvalOptions,
) -> Result<(Complex64, f64)> {
    if let Some(&bad) = a.iter().find(|&&x| !(x > 0.0) || !x.is_finite()) {
        return Err(domain(format!("Hurwitz parameter must be positive, got {bad}")));
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(domain("s must be finite"));
    }
    let sum_c: Complex64 = coeffs.iter().sum();
    let scale: f64 = coeffs.iter().map(|c| c.norm()).sum();
    if s == Complex64::new(1.0, 0.0) && sum_c.norm() > 1e-14 * scale.max(1.0) {
        return Err(pole("zeta(s, a) has a pole at s = 1"));
    }
    let weights: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    let plan = plan(s, a, &weights, opts);
    // a coefficient sum at rounding level is treated as exact cancellation
    let cancel = sum_c.norm() <= 1e-14 * scale.max(1.0);
    let real = s.im == 0.0 && coeffs.iter().all(|c| c.im == 0.0);
    if real {
        let cr: Vec<f64> = coeffs.iter().map(|c| c.re).collect();
        let pole_part = if cancel { 0.0 } else { sum_c.re };
        let (v, e) = em_sum(s.re, &cr, pole_part, a, &plan);
        Ok((v.into_complex(), e))
    } else {
        let pole_part = if cancel { Complex64::new(0.0, 0.0) } else { sum_c };
        let (v, e) = em_sum(s, coeffs, pole_part, a, &plan);
        Ok((v, e))
    }
}

/// Hurwitz zeta function `zeta(s, x) = sum_{n>=0} (n + x)^(-s)`.
pub fn hurwitz_zeta(s: Complex64, x: f64, opts: &EvalOptions) -> Result<ZetaValue> {
    if !(x > 0.0) {
        return Err(domain(format!("hurwitz_zeta requires x > 0, got {x}")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(pole("hurwitz_zeta has a pole at s = 1"));
    }
    let (value, est_error) = hurwitz_combination(s, &[Complex64::new(1.0, 0.0)], &[x], opts)?;
    Ok(ZetaValue {
        value,
        est_error,
        method: Method::EulerMaclaurin,
    })
}

/// Riemann zeta function, `zeta(s, 1)`.
pub fn riemann_zeta(s: Complex64) -> Result<ZetaValue> {
    hurwitz_zeta(s, 1.0, &EvalOptions::default())
}
