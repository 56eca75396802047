use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{euler_number, euler_poly_at_zero, factorial, Rational};
use crate::zeta::{dirichlet_beta, dirichlet_lambda, zeta_e, EvalOptions};

pub const MAX_TABLE_INDEX: usize = 30;
const AGREE_REL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    /// lambda(2m) = r pi^(2m), m = 1..=max
    LambdaEven,
    /// beta(2m+1) = r pi^(2m+1), m = 0..=max
    BetaOdd,
    /// Euler numbers E_0..=E_max
    EulerNumbers,
    /// E_n(0), n = 0..=max
    EulerAtZero,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub index: usize,
    pub closed_form: String,
    pub closed_value: f64,
    pub numeric: f64,
    pub abs_diff: f64,
    pub agree: bool,
}

fn r(n: BigInt, d: BigInt) -> Rational {
    Rational::new(n, d)
}

/// `a pi^k / b` with unit factors dropped.
fn pi_multiple(c: &Rational, k: usize) -> String {
    if c.is_zero() {
        return "0".to_string();
    }
    let sign = if c.is_negative() { "-" } else { "" };
    let (n, d) = (c.numer().abs(), c.denom().clone());
    let num = if n.is_one() { String::new() } else { n.to_string() };
    let pi = if k == 1 { "π".to_string() } else { format!("π^{k}") };
    if d.is_one() {
        format!("{sign}{num}{pi}")
    } else {
        format!("{sign}{num}{pi}/{d}")
    }
}

/// `numeric_err` is the error bound reported by the numerical evaluation.
fn row(index: usize, closed_form: String, closed_value: f64, (numeric, numeric_err): (f64, f64)) -> TableRow {
    let abs_diff = (closed_value - numeric).abs();
    TableRow {
        index,
        closed_form,
        closed_value,
        numeric,
        abs_diff,
        agree: abs_diff <= AGREE_REL * closed_value.abs().max(1.0) + numeric_err,
    }
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed forms next to independently computed values.
pub fn table(kind: TableKind, max_index: usize) -> Result<Vec<TableRow>> {
    if max_index > MAX_TABLE_INDEX {
        return Err(Error::Config(format!("max_index must be <= {MAX_TABLE_INDEX}, got {max_index}")));
    }
    let opts = EvalOptions::default();
    let real = |s: f64| Complex64::new(s, 0.0);
    let mut rows = Vec::new();
    match kind {
        TableKind::LambdaEven => {
            for m in 1..=max_index {
                let c = euler_poly_at_zero(2 * m - 1) * r(sign(m), BigInt::from(4) * factorial(2 * m - 1));
                let closed = c.to_f64().unwrap_or(f64::NAN) * PI.powi(2 * m as i32);
                let v = dirichlet_lambda(real((2 * m) as f64))?;
                let numeric = (v.value.re, v.est_error);
                rows.push(row(m, pi_multiple(&c, 2 * m), closed, numeric));
            }
        }
        TableKind::BetaOdd => {
            for m in 0..=max_index {
                let den = BigInt::from(4).pow(m as u32 + 1) * factorial(2 * m);
                let c = r(sign(m) * euler_number(2 * m), den);
                let closed = c.to_f64().unwrap_or(f64::NAN) * PI.powi(2 * m as i32 + 1);
                let v = dirichlet_beta(real((2 * m + 1) as f64))?;
                let numeric = (v.value.re, v.est_error);
                rows.push(row(m, pi_multiple(&c, 2 * m + 1), closed, numeric));
            }
        }
        TableKind::EulerNumbers => {
            for n in 0..=max_index {
                let e = euler_number(n);
                // E_n = 2^n E_n(1/2) = 2^(n+1) zeta_E(-n, 1/2)
                let v = zeta_e(real(-(n as f64)), 0.5, &opts)?;
                let scale = 2f64.powi(n as i32 + 1);
                let numeric = (scale * v.value.re, scale * v.est_error);
                rows.push(row(n, e.to_string(), e.to_f64().unwrap_or(f64::NAN), numeric));
            }
        }
        TableKind::EulerAtZero => {
            for n in 0..=max_index {
                let e = euler_poly_at_zero(n);
                // E_n(0) = (-1)^n E_n(1) = 2 (-1)^n zeta_E(-n, 1)
                let sgn = if n % 2 == 0 { 2.0 } else { -2.0 };
                let v = zeta_e(real(-(n as f64)), 1.0, &opts)?;
                let numeric = (sgn * v.value.re, 2.0 * v.est_error);
                rows.push(row(n, e.to_string(), e.to_f64().unwrap_or(f64::NAN), numeric));
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(kind: TableKind, n: usize) -> Vec<String> {
        table(kind, n).unwrap().into_iter().map(|r| r.closed_form).collect()
    }

    #[test]
    fn documented_rows() {
        assert_eq!(forms(TableKind::LambdaEven, 3), ["π^2/8", "π^4/96", "π^6/960"]);
        assert_eq!(forms(TableKind::EulerNumbers, 6), ["1", "0", "-1", "0", "5", "0", "-61"]);
        assert_eq!(forms(TableKind::BetaOdd, 2), ["π/4", "π^3/32", "5π^5/1536"]);
        assert_eq!(forms(TableKind::EulerAtZero, 3), ["1", "-1/2", "0", "1/4"]);
    }

    #[test]
    fn every_row_agrees_up_to_the_cap() {
        for kind in [TableKind::LambdaEven, TableKind::BetaOdd, TableKind::EulerNumbers, TableKind::EulerAtZero] {
            for row in table(kind, MAX_TABLE_INDEX).unwrap() {
                assert!(row.agree, "{kind:?} {row:?}");
            }
        }
        assert!(table(TableKind::BetaOdd, 31).is_err());
    }
}
