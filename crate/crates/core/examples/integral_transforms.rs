//! Closed forms for integral transforms of `zeta_E`, each compared with a
//! direct quadrature.

use eulerzeta::identities::{
    rhs_euler_transform, rhs_exp_transform, rhs_fourier_coefficient, rhs_product_integral, FourierKind,
};
use eulerzeta::poly::euler_polynomial;
use eulerzeta::quad::{integrate_oscillatory, integrate_unit, IntegrandSpec};
use eulerzeta::zeta::{zeta_e, EvalOptions};
use eulerzeta::Complex;
use std::f64::consts::PI;

fn ze(s: f64, x: f64) -> f64 {
    zeta_e(Complex::new(s, 0.0), x, &EvalOptions::default()).map_or(f64::NAN, |v| v.value.re)
}

fn quad(f: impl Fn(f64) -> f64) -> f64 {
    let g = |x: f64| Complex::new(f(x), 0.0);
    integrate_unit(&IntegrandSpec::new(&g), 1e-12, 0.0).expect("finite integrand").value.re
}

fn main() -> eulerzeta::Result<()> {
    let s = -1.5;

    let k = 2;
    let g = |x: f64| Complex::new(((2 * k + 1) as f64 * PI * x).sin() * ze(s, x), 0.0);
    let lhs = integrate_oscillatory(&IntegrandSpec::new(&g), 2 * k as u32 + 1, 1e-12)?.value.re;
    println!("sine coefficient k={k}:    {lhs:.15}  closed {:.15}", rhs_fourier_coefficient(FourierKind::Sin, s, k)?.re);

    let sp = -0.5;
    let lhs = quad(|x| ze(sp, x) * ze(s, x));
    println!("product integral:         {lhs:.15}  closed {:.15}", rhs_product_integral(s, sp, false)?.re);
    let lhs = quad(|x| ze(sp, x) * ze(s, 1.0 - x));
    println!("reflected product:        {lhs:.15}  closed {:.15}", rhs_product_integral(s, sp, true)?.re);

    let m = 3;
    let e = euler_polynomial(m - 1);
    let lhs = quad(|x| e.eval_f64(x) * ze(s, x));
    println!("Euler transform m={m}:      {lhs:.15}  closed {:.15}", rhs_euler_transform(m, s)?.re);

    let t = 0.35;
    let lhs = quad(|x| (2.0 * PI * t * x).exp() * ze(s, x));
    let (rhs, err) = rhs_exp_transform(t, s)?;
    println!("exponential t={t}:       {lhs:.15}  closed {:.15} (+- {err:.0e})", rhs.re);
    Ok(())
}
