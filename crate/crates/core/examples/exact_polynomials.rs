//! Exact Bernoulli and Euler numbers and polynomials, and the
//! Apostol–Bernoulli polynomials used for Lerch-type values.

use eulerzeta::poly::{
    apostol_bernoulli, bernoulli_number, bernoulli_polynomial, euler_number, euler_poly_at_zero, euler_polynomial,
    Rational,
};
use eulerzeta::Complex;
use num_bigint::BigInt;

fn main() {
    let e: Vec<String> = (0..=12).map(|n| euler_number(n).to_string()).collect();
    println!("E_0..E_12     = {}", e.join(", "));
    let b: Vec<String> = (0..=10).map(|n| bernoulli_number(n).to_string()).collect();
    println!("B_0..B_10     = {}", b.join(", "));
    let z: Vec<String> = (0..=9).map(|n| euler_poly_at_zero(n).to_string()).collect();
    println!("E_n(0), n<=9  = {}", z.join(", "));

    println!("\nE_5(x) coefficients: {:?}", euler_polynomial(5).coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());

    // exact evaluation at a rational point
    let third = Rational::new(BigInt::from(1), BigInt::from(3));
    println!("E_4(1/3) = {}", euler_polynomial(4).eval(&third));
    println!("B_6(1/3) = {}", bernoulli_polynomial(6).eval(&third));

    // product integral, exactly: int_0^1 E_3 E_2 dx
    let p = &euler_polynomial(3) * &euler_polynomial(2);
    println!("int_0^1 E_3(x) E_2(x) dx = {}", p.integral_unit());

    // Apostol–Bernoulli reduces to Bernoulli at alpha = 1
    let one = Complex::new(1.0, 0.0);
    println!("\nB_3(0.25, 1) = {:.15}  B_3(0.25) = {:.15}", apostol_bernoulli(3, 0.25, one).re, bernoulli_polynomial(3).eval_f64(0.25));
    let alpha = Complex::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    println!("B_2(1/2, e^(2 pi i/3)) = {:.15}", apostol_bernoulli(2, 0.5, alpha));
}
