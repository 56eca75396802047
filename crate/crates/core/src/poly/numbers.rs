//! Bernoulli and Euler numbers and polynomials in exact arithmetic.
//!
//! Every table is an append-only cache behind a `RwLock`: readers share the
//! lock, and the first caller that needs a larger index extends the table
//! under the write lock.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, RationalPolynomial};

static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::one()]));
static EULER: LazyLock<RwLock<Vec<BigInt>>> = LazyLock::new(|| RwLock::new(vec![BigInt::one()]));
static BERNOULLI_POLY: LazyLock<RwLock<Vec<RationalPolynomial>>> =
    LazyLock::new(|| RwLock::new(Vec::new()));
static EULER_POLY: LazyLock<RwLock<Vec<RationalPolynomial>>> =
    LazyLock::new(|| RwLock::new(Vec::new()));

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn cached<T: Clone>(
    table: &RwLock<Vec<T>>,
    m: usize,
    extend: impl Fn(&[T]) -> T,
) -> T {
    if let Some(v) = table.read().expect("cache poisoned").get(m) {
        return v.clone();
    }
    let mut w = table.write().expect("cache poisoned");
    while w.len() <= m {
        let next = extend(&w);
        w.push(next);
    }
    w[m].clone()
}

/// Bernoulli number `B_m = B_m(0)`, so `B_1 = -1/2`.
///
/// Uses `sum_{k=0}^{m} C(m+1, k) B_k = 0` for `m >= 1`.
pub fn bernoulli_number(m: usize) -> Rational {
    cached(&BERNOULLI, m, |prev| {
        let n = prev.len();
        let sum = prev
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| {
                acc + Rational::from_integer(binomial(n + 1, k)) * b
            });
        -sum / Rational::from_integer(BigInt::from(n + 1))
    })
}

/// Euler number `E_m = 2^m E_m(1/2)`; zero for odd `m`.
///
/// Even indices come from `sum_{k=0}^{n} C(2n, 2k) E_{2k} = 0`, the
/// coefficient identity behind `sech(z) cosh(z) = 1`.
pub fn euler_number(m: usize) -> BigInt {
    cached(&EULER, m, |prev| {
        let n = prev.len();
        if n % 2 == 1 {
            return BigInt::zero();
        }
        let sum = (0..n)
            .step_by(2)
            .fold(BigInt::zero(), |acc, k| acc + binomial(n, k) * &prev[k]);
        -sum
    })
}

/// Bernoulli polynomial `B_m(x) = sum_k C(m, k) B_k x^(m-k)`.
pub fn bernoulli_polynomial(m: usize) -> RationalPolynomial {
    cached(&BERNOULLI_POLY, m, |prev| {
        let n = prev.len();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for k in 0..=n {
            coeffs[n - k] = Rational::from_integer(binomial(n, k)) * bernoulli_number(k);
        }
        RationalPolynomial::new(coeffs)
    })
}

/// Euler polynomial `E_m(x)`, built from the Euler numbers as
/// `sum_i C(m, i) (E_i / 2^i) (x - 1/2)^(m-i)`.
pub fn euler_polynomial(m: usize) -> RationalPolynomial {
    cached(&EULER_POLY, m, |prev| {
        let n = prev.len();
        let half = Rational::new(BigInt::from(-1), BigInt::from(2));
        let mut out = RationalPolynomial::zero();
        for i in 0..=n {
            let e = euler_number(i);
            if e.is_zero() {
                continue;
            }
            let c = Rational::new(binomial(n, i) * e, BigInt::one() << i);
            out = &out + &RationalPolynomial::binomial_power(&half, n - i).scale(&c);
        }
        out
    })
}

/// `E_m(0) = (2 / (m+1)) (1 - 2^(m+1)) B_{m+1}`.
pub fn euler_poly_at_zero(m: usize) -> Rational {
    let factor = BigInt::one() - (BigInt::one() << (m + 1));
    Rational::new(BigInt::from(2) * factor, BigInt::from(m + 1)) * bernoulli_number(m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    /// Truncated power-series quotient `num / den` over exact rationals.
    fn series_div(num: &[Rational], den: &[Rational], n: usize) -> Vec<Rational> {
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
            for j in 1..=k {
                if let Some(d) = den.get(j) {
                    acc -= d * &q[k - j];
                }
            }
            q.push(acc / &den[0]);
        }
        q
    }

    fn inv_factorials(n: usize) -> Vec<Rational> {
        (0..n)
            .map(|k| Rational::new(BigInt::one(), factorial(k)))
            .collect()
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli_number(0), rat(1, 1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), rat(0, 1));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
    }

    #[test]
    fn bernoulli_numbers_match_series_division_oracle() {
        // z / (e^z - 1): numerator z, denominator sum_{k>=1} z^k / k!
        let n = 21;
        let inv = inv_factorials(n + 2);
        let num = vec![Rational::one()];
        let den: Vec<Rational> = inv[1..].to_vec();
        let q = series_div(&num, &den, n);
        for (m, qm) in q.iter().enumerate() {
            let expected = qm * Rational::from_integer(factorial(m));
            assert_eq!(bernoulli_number(m), expected, "B_{m}");
        }
    }

    #[test]
    fn euler_numbers_match_sech_series_oracle() {
        // 2 e^{z/2} / (e^z + 1) = 1 / cosh(z/2); E_m = 2^m * m! [z^m]
        let n = 21;
        let num = vec![Rational::one()];
        let den: Vec<Rational> = (0..n)
            .map(|k| {
                if k % 2 == 1 {
                    Rational::zero()
                } else {
                    Rational::new(BigInt::one(), factorial(k) << k)
                }
            })
            .collect();
        let q = series_div(&num, &den, n);
        for (m, qm) in q.iter().enumerate() {
            let expected = qm * Rational::from_integer(factorial(m) << m);
            assert_eq!(Rational::from_integer(euler_number(m)), expected, "E_{m}");
        }
    }

    #[test]
    fn euler_number_list() {
        let got: Vec<i64> = (0..=6)
            .map(|m| i64::try_from(euler_number(m)).unwrap())
            .collect();
        assert_eq!(got, vec![1, 0, -1, 0, 5, 0, -61]);
    }

    #[test]
    fn euler_polynomial_low_degrees() {
        assert_eq!(euler_polynomial(0).coeffs(), &[rat(1, 1)]);
        assert_eq!(euler_polynomial(1).coeffs(), &[rat(-1, 2), rat(1, 1)]);
        assert_eq!(euler_polynomial(2).coeffs(), &[rat(0, 1), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn euler_polynomials_match_generating_function() {
        // 2 e^{xz} / (e^z + 1) at x = 1/3, compared coefficientwise
        let n = 13;
        let x = rat(1, 3);
        let inv = inv_factorials(n);
        let num: Vec<Rational> = inv
            .iter()
            .enumerate()
            .map(|(k, c)| c * super::super::polynomial::pow_rational(&x, k) * rat(2, 1))
            .collect();
        let mut den = inv.clone();
        den[0] += Rational::one();
        let q = series_div(&num, &den, n);
        for (m, qm) in q.iter().enumerate() {
            let expected = qm * Rational::from_integer(factorial(m));
            assert_eq!(euler_polynomial(m).eval(&x), expected, "E_{m}(1/3)");
        }
    }

    #[test]
    fn bernoulli_polynomial_endpoints() {
        assert_eq!(bernoulli_polynomial(0).coeffs(), &[rat(1, 1)]);
        assert_eq!(bernoulli_polynomial(1).coeffs(), &[rat(-1, 2), rat(1, 1)]);
        let one = rat(1, 1);
        for m in 0..16 {
            let at_one = bernoulli_polynomial(m).eval(&one);
            if m == 1 {
                assert_eq!(at_one, -bernoulli_number(1));
            } else {
                assert_eq!(at_one, bernoulli_number(m));
            }
        }
    }

    #[test]
    fn euler_at_zero_values() {
        assert_eq!(euler_poly_at_zero(0), rat(1, 1));
        assert_eq!(euler_poly_at_zero(1), rat(-1, 2));
        assert_eq!(euler_poly_at_zero(3), rat(1, 4));
        for m in 0..=20 {
            assert_eq!(euler_poly_at_zero(m), euler_polynomial(m).eval(&Rational::zero()));
        }
    }

    #[test]
    fn euler_reflection_symmetry() {
        for m in 0..=12 {
            let p = euler_polynomial(m);
            let reflected = RationalPolynomial::new(
                p.coeffs().to_vec(),
            );
            // E_m(1 - x) via shift and sign flip of x
            let flipped = RationalPolynomial::new(
                reflected
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                    .collect(),
            )
            .shift(&rat(-1, 1));
            let sign = if m % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            assert_eq!(flipped, p.scale(&sign), "m = {m}");
        }
    }

    #[test]
    fn invariants_up_to_twenty() {
        for m in 0..=20 {
            let p = euler_polynomial(m);
            // E_m(x + 1) + E_m(x) = 2 x^m
            let lhs = &p.shift(&Rational::one()) + &p;
            assert_eq!(lhs, RationalPolynomial::monomial(m).scale(&rat(2, 1)));
            // E_m = 2^m E_m(1/2)
            let mid = p.eval(&rat(1, 2)) * Rational::from_integer(BigInt::one() << m);
            assert_eq!(mid, Rational::from_integer(euler_number(m)));
            if m % 2 == 1 {
                assert!(euler_number(m).is_zero());
            }
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::from(0));
    }

    proptest! {
        #[test]
        fn float_eval_tracks_exact_eval(m in 0usize..16, num in -40i64..40) {
            let x = rat(num, 16);
            let exact = euler_polynomial(m).eval(&x);
            let approx = euler_polynomial(m).eval_f64(num as f64 / 16.0);
            let exact = num_traits::ToPrimitive::to_f64(&exact).unwrap();
            prop_assert!((exact - approx).abs() <= 1e-9 * exact.abs().max(1.0));
        }
    }
}
