//! Closed-form right sides.
//!
//! Formulas carrying `1/Gamma(s) * csc(pi s/2)` or `sec(pi s/2)` are used in
//! their reflected form (`1/Gamma(s) = Gamma(1-s) sin(pi s) / pi`), so
//! nonpositive integers need no limits.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::oracle::abel_lerch_neg_int;
use crate::error::{domain, Result};
use crate::poly::{
    apostol_bernoulli, bernoulli_polynomial, delta2, euler_number, euler_poly_at_zero, euler_polynomial,
    factorial, pochhammer, Rational,
};
use crate::zeta::{
    cos_pi, dirichlet_beta, dirichlet_lambda, gamma, gamma_real, hurwitz_zeta, lerch_e, lerch_e_neg_int,
    sin_pi, transcendental_f, EvalOptions,
};

pub(super) fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub(super) fn cpi(x: f64) -> f64 {
    cos_pi(c(x)).re
}

pub(super) fn spi(x: f64) -> f64 {
    sin_pi(c(x)).re
}

pub(super) fn lam(s: f64) -> Result<f64> {
    Ok(dirichlet_lambda(c(s))?.value.re)
}

fn fact(n: usize) -> f64 {
    factorial(n).to_f64().unwrap_or(f64::INFINITY)
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn require_nonpositive(s: f64, what: &str) -> Result<()> {
    if s <= 0.0 {
        Ok(())
    } else {
        Err(domain(format!("{what} requires s <= 0, got {s}")))
    }
}

/// Which Fourier coefficient of `zeta_E(s, .)` against an odd harmonic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FourierKind {
    Sin,
    Cos,
}

/// `int_0^1 sin((2k+1) pi x) zeta_E(s, x) dx` (or the cosine analogue):
///
/// ```text
/// sin: pi^(s-1) (2k+1)^(s-1) Gamma(1-s) cos(pi s/2)
/// cos: pi^(s-1) (2k+1)^(s-1) Gamma(1-s) sin(pi s/2)
/// ```
pub fn rhs_fourier_coefficient(kind: FourierKind, s: f64, k: usize) -> Result<Complex64> {
    require_nonpositive(s, "rhs_fourier_coefficient")?;
    let base = (PI * (2 * k + 1) as f64).powf(s - 1.0) * gamma_real(1.0 - s)?;
    let trig = match kind {
        FourierKind::Sin => cpi(s / 2.0),
        FourierKind::Cos => spi(s / 2.0),
    };
    Ok(c(base * trig))
}

/// The same coefficient in its unreflected form
/// `pi^s (2k+1)^(s-1) / (2 Gamma(s)) * csc(pi s/2)` (resp. `sec`), finite
/// only away from the integers. Used to test the reflection.
pub(crate) fn fourier_coefficient_unreflected(kind: FourierKind, s: f64, k: usize) -> Result<f64> {
    let trig = match kind {
        FourierKind::Sin => spi(s / 2.0),
        FourierKind::Cos => cpi(s / 2.0),
    };
    if trig == 0.0 {
        return Err(domain("unreflected coefficient has a removable singularity here"));
    }
    Ok(PI.powf(s) * ((2 * k + 1) as f64).powf(s - 1.0) / (2.0 * gamma_real(s)? * trig))
}

/// `2 Gamma(1-s) Gamma(1-s') / pi^(2-s-s') * lambda(2-s-s') * cos(pi (s -+ s')/2)`
/// for any real `s, s'` where the factors are finite. The integral it
/// evaluates only exists for `s, s' <= 0`; see [`rhs_product_integral`].
pub fn product_integral_closed_form(s: f64, sp: f64, reflected: bool) -> Result<f64> {
    let angle = if reflected { (s + sp) / 2.0 } else { (s - sp) / 2.0 };
    let g = gamma_real(1.0 - s)? * gamma_real(1.0 - sp)?;
    Ok(2.0 * g / PI.powf(2.0 - s - sp) * lam(2.0 - s - sp)? * cpi(angle))
}

/// `int_0^1 zeta_E(s', x) zeta_E(s, x) dx`, or with `zeta_E(s, 1-x)` when
/// `reflected`.
pub fn rhs_product_integral(s: f64, sp: f64, reflected: bool) -> Result<Complex64> {
    require_nonpositive(s, "rhs_product_integral")?;
    require_nonpositive(sp, "rhs_product_integral")?;
    Ok(c(product_integral_closed_form(s, sp, reflected)?))
}

/// Beta-function form of the product integral:
/// `delta_2(1-s-s') [cos(pi(s-s')/2) / cos(pi(s+s')/2)] B(1-s, 1-s') lambda(s+s'-1)`,
/// the bracketed ratio being dropped in the reflected case.
pub(crate) fn product_integral_beta_form(s: f64, sp: f64, reflected: bool) -> Result<f64> {
    require_nonpositive(s, "product_integral_beta_form")?;
    require_nonpositive(sp, "product_integral_beta_form")?;
    let ratio = if reflected {
        1.0
    } else {
        let den = cpi((s + sp) / 2.0);
        if den == 0.0 {
            return Err(domain("beta form is 0/0 when s + s' is an odd integer"));
        }
        cpi((s - sp) / 2.0) / den
    };
    let beta = gamma_real(1.0 - s)? * gamma_real(1.0 - sp)? / gamma_real(2.0 - s - sp)?;
    Ok(delta2(1.0 - s - sp)? * ratio * beta * lam(s + sp - 1.0)?)
}

/// `int_0^1 E_{m-1}(x) zeta_E(s, x) dx = (-1)^(m+1) 2 delta_2(m-s) (m-1)! lambda(s-m) / (1-s)_m`.
pub fn rhs_euler_transform(m: usize, s: f64) -> Result<Complex64> {
    require_nonpositive(s, "rhs_euler_transform")?;
    if m < 1 {
        return Err(domain("rhs_euler_transform requires m >= 1"));
    }
    let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
    let poch = pochhammer(c(1.0 - s), m).re;
    Ok(c(sign * 2.0 * delta2(m as f64 - s)? * fact(m - 1) * lam(s - m as f64)? / poch))
}

/// Moments `int_0^1 x^n zeta_E(s, x) dx`, from `x^n = (E_n(x) + E_n(x+1)) / 2`:
///
/// ```text
/// sum_j C(n,j) (-1)^j delta_2(j-s+1) j! lambda(s-j-1) / (1-s)_{j+1}
///   + (-1)^n delta_2(n-s+1) n! lambda(s-n-1) / (1-s)_{n+1}
/// ```
pub fn rhs_moment(n: usize, s: f64) -> Result<Complex64> {
    require_nonpositive(s, "rhs_moment")?;
    let term = |j: usize| -> Result<f64> {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let poch = pochhammer(c(1.0 - s), j + 1).re;
        Ok(sign * delta2(j as f64 - s + 1.0)? * fact(j) * lam(s - j as f64 - 1.0)? / poch)
    };
    let mut total = term(n)?;
    for j in 0..=n {
        total += crate::poly::binomial(n, j).to_f64().unwrap_or(f64::NAN) * term(j)?;
    }
    Ok(c(total))
}

/// Largest `|t|` admitted by [`rhs_exp_transform`]: `F(2it, s)` needs
/// `|2t|` inside the unit disc, with margin for convergence.
pub const EXP_T_MAX: f64 = 0.45;

/// `int_0^1 e^{2 pi t x} zeta_E(s, x) dx
///   = 2 (e^{2 pi t} + 1) Gamma(1-s) / pi^(2-s) * Re(e^{pi i s/2} F(2it, s))`.
///
/// Returns the value and the truncation bound inherited from `F`.
pub fn rhs_exp_transform(t: f64, s: f64) -> Result<(Complex64, f64)> {
    require_nonpositive(s, "rhs_exp_transform")?;
    if !(t.abs() <= EXP_T_MAX) {
        return Err(domain(format!("rhs_exp_transform requires |t| <= {EXP_T_MAX}, got {t}")));
    }
    let (f, err) = transcendental_f(Complex64::new(0.0, 2.0 * t), c(s))?;
    let rot = Complex64::from_polar(1.0, PI * s / 2.0);
    let pref = 2.0 * ((2.0 * PI * t).exp() + 1.0) * gamma_real(1.0 - s)? / PI.powf(2.0 - s);
    Ok((c(pref * (rot * f).re), pref.abs() * err))
}

/// Closed form of `int_0^1 e^{2 pi t x} E_m(x) dx` for `t != 0`:
///
/// ```text
/// (-1)^m 4 (e^{2 pi t} + 1) m! / (2 pi t)^(m+2)
///   * (pi t/2 tanh(pi t) - sum_{r=0}^{floor((m-1)/2)} (-1)^r lambda(2r+2) (2t)^(2r+2))
/// ```
pub(crate) fn exp_euler_closed_form(m: usize, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Err(domain("closed form needs t != 0"));
    }
    let mut bracket = PI * t / 2.0 * (PI * t).tanh();
    if m >= 1 {
        for r in 0..=(m - 1) / 2 {
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            bracket -= sign * lam((2 * r + 2) as f64)? * (2.0 * t).powi(2 * r as i32 + 2);
        }
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * 4.0 * ((2.0 * PI * t).exp() + 1.0) * fact(m) / (2.0 * PI * t).powi(m as i32 + 2) * bracket)
}

/// `(1/2) int_0^1 G_E(s, x) / cos(pi x) dx = 2 Gamma(1-s) / pi^(1-s) * sin(pi s/2) * beta(1-s)`.
pub fn rhs_secant_transform(s: f64) -> Result<Complex64> {
    require_nonpositive(s, "rhs_secant_transform")?;
    let b = dirichlet_beta(c(1.0 - s))?.value.re;
    Ok(c(2.0 * gamma_real(1.0 - s)? / PI.powf(1.0 - s) * spi(s / 2.0) * b))
}

/// Partial sum of the Euler-type series for `beta(2m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaEvenPartialSum {
    pub max_n: usize,
    pub sum: f64,
    /// Magnitude of the `n = max_n` term, the convergence indicator.
    pub last_term: f64,
    pub terms: Vec<f64>,
}

/// Exact inner coefficient `sum_{j=1}^{n} E_{2m+2j-1}(0) / ((2n-2j+1)! (2m+2j-1)!)`.
fn beta_even_inner(m: usize, n: usize) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, j| {
        let den = factorial(2 * n - 2 * j + 1) * factorial(2 * m + 2 * j - 1);
        acc + euler_poly_at_zero(2 * m + 2 * j - 1) / Rational::from_integer(den)
    })
}

/// Terms `n = 1..=max_n` of
///
/// ```text
/// sum_{n>=1} (-1)^(n+m) pi^(2m+2n) E_{2n} / 4 * sum_{j=1}^{n} E_{2m+2j-1}(0) / ((2n-2j+1)! (2m+2j-1)!)
/// ```
///
/// The rational factor is exact; only the power of `pi` is floating point.
pub fn rhs_beta_even_series(m: usize, max_n: usize) -> Result<BetaEvenPartialSum> {
    if m < 1 {
        return Err(domain("rhs_beta_even_series requires m >= 1"));
    }
    let mut terms = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let sign = if (n + m) % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = Rational::from_integer(euler_number(2 * n)) * beta_even_inner(m, n) / Rational::from_integer(4.into());
        terms.push(sign * to_f64(&coeff) * PI.powi((2 * m + 2 * n) as i32));
    }
    Ok(BetaEvenPartialSum {
        max_n,
        sum: terms.iter().sum(),
        last_term: terms.last().map_or(0.0, |t| t.abs()),
        terms,
    })
}

fn check_pq(p: u32, q: u32, strict: bool) -> Result<()> {
    let ok = q >= 1 && p >= 1 && if strict { p < q } else { p <= q };
    if ok {
        Ok(())
    } else {
        let rel = if strict { "<" } else { "<=" };
        Err(domain(format!("requires 1 <= p {rel} q, got p={p}, q={q}")))
    }
}

/// `zeta_E(1-s, p/q) = 2 Gamma(s) / (2 q pi)^s * sum_{r=1}^{q} cos(pi s/2 - (2r-1) pi p/q) zeta(s, (2r-1)/(2q))`.
pub fn rhs_rational_argument(s: Complex64, p: u32, q: u32) -> Result<Complex64> {
    check_pq(p, q, false)?;
    let opts = EvalOptions::default();
    let qf = q as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for r in 1..=q {
        let shift = ((2 * r - 1) as f64 * p as f64 / qf).rem_euclid(2.0);
        let z = hurwitz_zeta(s, (2 * r - 1) as f64 / (2.0 * qf), &opts)?.value;
        sum += cos_pi(s / 2.0 - shift) * z;
    }
    Ok(2.0 * gamma(s)? * (-s * (2.0 * qf * PI).ln()).exp() * sum)
}

/// `l_{E,s}(x)` on `[0, 1]`, with the endpoint values `l(0) = lambda(s)` and
/// `l(1) = -lambda(s)`.
pub(crate) fn lerch_closed(s: Complex64, x: f64) -> Result<Complex64> {
    if x == 0.0 || x == 1.0 {
        let l = dirichlet_lambda(s)?.value;
        return Ok(if x == 0.0 { l } else { -l });
    }
    lerch_e(s, x)
}

/// `(1/q) sum_{r=1}^{q} (2q)^s e^{-(2p-1) pi i r/q} l_{E,s}(r/q)`, which equals
/// `zeta(s, (2p-1)/(2q))`.
pub fn rhs_eisenstein(s: Complex64, p: u32, q: u32) -> Result<Complex64> {
    check_pq(p, q, true)?;
    let qf = q as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for r in 1..=q {
        let phase = -((2 * p - 1) as f64 * r as f64 / qf).rem_euclid(2.0);
        sum += Complex64::from_polar(1.0, PI * phase) * lerch_closed(s, r as f64 / qf)?;
    }
    Ok((s * (2.0 * qf).ln()).exp() * sum / qf)
}

/// `q^m sum_{r=1}^{q} e^{2 (r-1) pi i p/q} B_{m+1}((2r-1)/(2q))`, which equals
/// `B_{m+1}(1/2, e^{2 pi i p/q})`. Bernoulli values are exact; only the
/// roots of unity are floating point.
pub fn rhs_apostol_multiplication(m: usize, p: u32, q: u32) -> Result<Complex64> {
    check_pq(p, q, true)?;
    let b = bernoulli_polynomial(m + 1);
    let mut sum = Complex64::new(0.0, 0.0);
    for r in 1..=q {
        let x = Rational::new(BigInt::from(2 * r - 1), BigInt::from(2 * q));
        let phase = (2.0 * (r - 1) as f64 * p as f64 / q as f64).rem_euclid(2.0);
        sum += Complex64::from_polar(1.0, PI * phase) * to_f64(&b.eval(&x));
    }
    Ok(sum * (q as f64).powi(m as i32))
}

/// `q^-(m+1) sum_{r=1}^{q} e^{-2 (p-1) pi i r/q} B_{m+1}(1/2, e^{2 pi i r/q})`,
/// the `r = q` term being the classical `B_{m+1}(1/2)`.
pub(crate) fn bernoulli_eisenstein(m: usize, p: u32, q: u32) -> Result<Complex64> {
    check_pq(p, q, true)?;
    let qf = q as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for r in 1..=q {
        let alpha = Complex64::from_polar(1.0, 2.0 * PI * (r as f64 / qf).rem_euclid(1.0));
        let phase = -(2.0 * (p - 1) as f64 * r as f64 / qf).rem_euclid(2.0);
        sum += Complex64::from_polar(1.0, PI * phase) * apostol_bernoulli(m + 1, 0.5, alpha);
    }
    Ok(sum / qf.powi(m as i32 + 1))
}

/// Both sides of the exponential-sum identity for `l_{E,1-n}` at `r/m`:
///
/// ```text
/// sum_{r=1}^{m-1} (-1)^r e^{-2 pi i r a/m} l_{E,1-n}(r/m)
///   =? (-1)^(n-1)/4 (m^n E_{n-1}(y) + E_{n-1}(0)) - 1/(2n) (m^n B_n(y) + B_n(0)),   y = {2a/m}
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct ExpSumSides {
    /// Left side with `l` from the Apostol–Bernoulli special values.
    pub lhs: Complex64,
    /// Left side with `l` from the Abel-summation oracle.
    pub lhs_abel: Complex64,
    /// Left side with `l` from the functional-equation continuation.
    pub lhs_continuation: Complex64,
    pub rhs_exact: Rational,
    pub rhs: f64,
}

pub fn exp_sum_sides(m: u32, alpha: i64, n: u32) -> Result<ExpSumSides> {
    if m < 3 || m % 2 == 0 {
        return Err(domain(format!("exp_sum_sides requires an odd m > 1, got {m}")));
    }
    if alpha.rem_euclid(m as i64) == 0 {
        return Err(domain("exp_sum_sides requires alpha not divisible by m"));
    }
    if n < 1 {
        return Err(domain("exp_sum_sides requires n >= 1"));
    }
    let k = n - 1;
    let mf = m as f64;
    let (mut lhs, mut lhs_abel, mut lhs_cont) = (Complex64::zero(), Complex64::zero(), Complex64::zero());
    for r in 1..m {
        let x = r as f64 / mf;
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        let w = sign * Complex64::from_polar(1.0, -2.0 * PI * ((r as i64 * alpha).rem_euclid(m as i64) as f64 / mf));
        lhs += w * lerch_e_neg_int(k, x)?;
        lhs_abel += w * abel_lerch_neg_int(k, x);
        lhs_cont += w * lerch_e(c(-(k as f64)), x)?;
    }
    let y = Rational::new(BigInt::from((2 * alpha).rem_euclid(m as i64)), BigInt::from(m));
    let mn = Rational::from_integer(BigInt::from(m).pow(n));
    let e = euler_polynomial(k as usize);
    let b = bernoulli_polynomial(n as usize);
    let zero = Rational::zero();
    let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    let half_n = Rational::new(BigInt::one(), BigInt::from(2 * n));
    let rhs_exact = sign * quarter * (&mn * e.eval(&y) + e.eval(&zero)) - half_n * (&mn * b.eval(&y) + b.eval(&zero));
    let rhs = to_f64(&rhs_exact);
    Ok(ExpSumSides {
        lhs,
        lhs_abel,
        lhs_continuation: lhs_cont,
        rhs_exact,
        rhs,
    })
}

/// True when `r` is an integer.
/// `|r|` as `f64`, for diagnostics.
#[allow(dead_code)]
pub(crate) fn abs_f64(r: &Rational) -> f64 {
    to_f64(&r.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::{g_e, zeta_e};

    const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932_384_110_774;

    #[test]
    fn fourier_coefficient_examples() {
        for k in 0..4 {
            let v = rhs_fourier_coefficient(FourierKind::Sin, 0.0, k).unwrap().re;
            assert!((v - 1.0 / (PI * (2 * k + 1) as f64)).abs() < 1e-15);
            assert_eq!(rhs_fourier_coefficient(FourierKind::Sin, -1.0, k).unwrap().re, 0.0);
        }
        let v = rhs_fourier_coefficient(FourierKind::Cos, -1.0, 0).unwrap().re;
        assert!((v + 1.0 / (PI * PI)).abs() < 1e-15);
        assert!(rhs_fourier_coefficient(FourierKind::Cos, 0.5, 0).is_err());
    }

    #[test]
    fn reflection_rewrite_matches_original() {
        for &s in &[-0.25, -0.75, -1.5, -2.25, -3.5] {
            for kind in [FourierKind::Sin, FourierKind::Cos] {
                let a = fourier_coefficient_unreflected(kind, s, 2).unwrap();
                let b = rhs_fourier_coefficient(kind, s, 2).unwrap().re;
                assert!((a - b).abs() < 1e-14 * b.abs().max(1e-3), "s={s}");
            }
        }
    }

    #[test]
    fn product_integral_examples() {
        assert!((rhs_product_integral(0.0, 0.0, false).unwrap().re - 0.25).abs() < 1e-15);
        // s = s' = -1/2: 2 ((2m)! / (2^{2m} m!))^2 lambda(3) / pi^2 with m = 1
        let v = rhs_product_integral(-0.5, -0.5, false).unwrap().re;
        let expected = 2.0 * 0.25 * lam(3.0).unwrap() / PI.powi(2);
        assert!((v - expected).abs() < 1e-15);
        // int E_1(x) E_1(1-x) / 4 = -1/48
        let v = rhs_product_integral(-1.0, -1.0, true).unwrap().re;
        assert!((v + 1.0 / 48.0).abs() < 1e-15);
    }

    #[test]
    fn beta_form_agrees_with_lambda_form() {
        for &(s, sp) in &[(-0.5, -1.0), (-1.5, -2.0), (-0.25, -2.5), (0.0, -2.0)] {
            for refl in [false, true] {
                let a = product_integral_beta_form(s, sp, refl).unwrap();
                let b = product_integral_closed_form(s, sp, refl).unwrap();
                assert!((a - b).abs() < 1e-13 * b.abs().max(1.0), "s={s} sp={sp} refl={refl}: {a} vs {b}");
            }
        }
        assert!(product_integral_beta_form(-0.5, -0.5, false).is_err());
    }

    #[test]
    fn euler_transform_examples() {
        // m = 1 is the mean value: int E_2 / 2 = -1/12
        let v = rhs_euler_transform(1, -2.0).unwrap().re;
        assert!((v + 1.0 / 12.0).abs() < 1e-15);
        assert!(rhs_euler_transform(2, 0.0).unwrap().re.abs() < 1e-16);
        // int E_1 * E_1 / 2 = 1/24
        let v = rhs_euler_transform(2, -1.0).unwrap().re;
        assert!((v - 1.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn moment_examples() {
        for &s in &[0.0, -0.5, -2.0] {
            let a = rhs_moment(0, s).unwrap().re;
            let b = rhs_euler_transform(1, s).unwrap().re;
            assert!((a - b).abs() < 1e-15);
        }
        assert!((rhs_moment(1, -1.0).unwrap().re - 1.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn exp_transform_examples() {
        let t = 0.25;
        let v = rhs_exp_transform(t, 0.0).unwrap().0.re;
        let expected = ((2.0 * PI * t).exp() - 1.0) / (4.0 * PI * t);
        assert!((v - expected).abs() < 1e-13);
        assert!(rhs_exp_transform(0.5, 0.0).is_err());
        // t -> 0 gives the mean value
        let v = rhs_exp_transform(0.0, -2.0).unwrap().0.re;
        assert!((v + 1.0 / 12.0).abs() < 1e-13);
        // m = 0 collapses to the tanh identity
        let v = exp_euler_closed_form(0, t).unwrap();
        assert!((v - ((2.0 * PI * t).exp() - 1.0) / (2.0 * PI * t)).abs() < 1e-14);
    }

    #[test]
    fn secant_examples() {
        let v = rhs_secant_transform(-1.0).unwrap().re;
        assert!((v + 2.0 * CATALAN / (PI * PI)).abs() < 1e-15);
        // sanity of the integrand on a point
        let ge = g_e(c(-1.0), 0.2).unwrap().re;
        assert!((ge + 0.3).abs() < 1e-14);
    }

    #[test]
    fn beta_even_first_term() {
        // n = 1, m = 1: pi^4 E_2 / 4 * E_3(0) / (1! 3!) = -pi^4 / 96
        let ps = rhs_beta_even_series(1, 1).unwrap();
        assert!((ps.sum + PI.powi(4) / 96.0).abs() < 1e-13);
    }

    #[test]
    fn rational_argument_examples() {
        let v = rhs_rational_argument(c(2.0), 1, 1).unwrap();
        assert!((v - c(0.25)).norm() < 1e-14);
        let s = Complex64::new(1.5, 0.5);
        for p in 1..=3 {
            let lhs = zeta_e(1.0 - s, p as f64 / 3.0, &EvalOptions::default()).unwrap().value;
            assert!((lhs - rhs_rational_argument(s, p, 3).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn eisenstein_examples() {
        let opts = EvalOptions::default();
        let v = rhs_eisenstein(c(2.0), 1, 2).unwrap();
        assert!((v - hurwitz_zeta(c(2.0), 0.25, &opts).unwrap().value).norm() < 1e-12);
        let v = rhs_eisenstein(c(-1.0), 1, 2).unwrap();
        let b2 = bernoulli_polynomial(2).eval_f64(0.25);
        assert!((v - c(-b2 / 2.0)).norm() < 1e-12);
    }

    #[test]
    fn apostol_multiplication_examples() {
        let omega = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let v = rhs_apostol_multiplication(0, 1, 3).unwrap();
        assert!((v - 1.0 / (omega - 1.0)).norm() < 1e-14);
        let v = rhs_apostol_multiplication(1, 1, 3).unwrap();
        assert!((v - apostol_bernoulli(2, 0.5, omega)).norm() < 1e-13);
    }

    #[test]
    fn exp_sum_oracles_agree() {
        let sides = exp_sum_sides(3, 1, 1).unwrap();
        assert!((sides.lhs - sides.lhs_abel).norm() < 1e-9);
        assert!((sides.lhs - sides.lhs_continuation).norm() < 1e-9);
        assert!((sides.lhs - c(-1.0)).norm() < 1e-12);
        assert_eq!(sides.rhs_exact, Rational::one());
        assert!(sides.rhs_exact.is_integer());
        assert!(exp_sum_sides(4, 1, 1).is_err());
        assert!(exp_sum_sides(3, 3, 1).is_err());
    }
}
