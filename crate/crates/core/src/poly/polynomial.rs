use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`; trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Self { coeffs }
    }

    /// `(x + c)^k`, expanded binomially.
    pub fn binomial_power(c: &Rational, k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut binom = BigInt::one();
        for j in 0..=k {
            // coefficient of x^j is C(k, j) c^(k-j)
            let pow = pow_rational(c, k - j);
            coeffs.push(Rational::from_integer(binom.clone()) * pow);
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Index of the highest nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * z + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Coefficients rounded to binary64.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The polynomial `x -> p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out = &out + &Self::binomial_power(c, k).scale(a);
        }
        out
    }

    /// Exact value of the integral over `[0, 1]`.
    pub fn integral_unit(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a / Rational::from_integer(BigInt::from(k + 1)))
            .fold(Rational::zero(), |acc, t| acc + t)
    }
}

pub(crate) fn pow_rational(c: &Rational, k: usize) -> Rational {
    let mut out = Rational::one();
    for _ in 0..k {
        out *= c;
    }
    out
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs.get(k).unwrap_or(&zero) + rhs.coeffs.get(k).unwrap_or(&zero)
            })
            .collect();
        RationalPolynomial::new(coeffs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: Self) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::new(coeffs)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn trims_trailing_zeros() {
        let p = RationalPolynomial::new(vec![rat(1, 2), rat(0, 1), rat(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(RationalPolynomial::new(vec![rat(0, 1)]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn binomial_power_matches_repeated_product() {
        let c = rat(-1, 2);
        let lin = RationalPolynomial::new(vec![c.clone(), rat(1, 1)]);
        let mut prod = RationalPolynomial::constant(rat(1, 1));
        for k in 0..6 {
            assert_eq!(RationalPolynomial::binomial_power(&c, k), prod);
            prod = &prod * &lin;
        }
    }

    #[test]
    fn shift_and_integral() {
        // x^2 shifted by 1 is x^2 + 2x + 1; its integral over [0,1] is 7/3
        let p = RationalPolynomial::monomial(2).shift(&rat(1, 1));
        assert_eq!(p.coeffs(), &[rat(1, 1), rat(2, 1), rat(1, 1)]);
        assert_eq!(p.integral_unit(), rat(7, 3));
    }

    #[test]
    fn display_is_readable() {
        let p = RationalPolynomial::new(vec![rat(1, 6), rat(-1, 1), rat(1, 1)]);
        assert_eq!(p.to_string(), "x^2 - x + 1/6");
    }
}
