//! The Hurwitz-type Euler zeta function `zeta_E(s, x) = sum (-1)^n (n + x)^(-s)`.
//!
//! It is entire in `s`; at `s = 1` the evaluator switches to a symmetric
//! stencil around the removable point, and the method field says so.

use eulerzeta::poly::euler_polynomial;
use eulerzeta::zeta::{g_e, zeta_e, zeta_e_fourier, EvalOptions};
use eulerzeta::Complex;

fn main() -> eulerzeta::Result<()> {
    let opts = EvalOptions::default();
    let re = |x: f64| Complex::new(x, 0.0);

    println!("{:>6} {:>6} {:>24} {:>10}  method", "s", "x", "zeta_E(s,x)", "est_error");
    for (s, x) in [(2.0, 0.5), (1.0, 0.3), (0.0, 0.7), (-1.5, 0.25), (-4.5, 0.9)] {
        let v = zeta_e(re(s), x, &opts)?;
        println!("{s:>6} {x:>6} {:>24.16e} {:>10.1e}  {}", v.value.re, v.est_error, v.method);
    }

    // complex s works the same way
    let v = zeta_e(Complex::new(0.5, 10.0), 0.4, &opts)?;
    println!("zeta_E(0.5+10i, 0.4) = {:.12}", v.value);

    // nonpositive integers give Euler polynomials: zeta_E(-m, x) = E_m(x) / 2
    println!("\nm   zeta_E(-m, 0.3)        E_m(0.3)/2");
    for m in 0..=6 {
        let v = zeta_e(re(-(m as f64)), 0.3, &opts)?.value.re;
        println!("{m}  {v:>22.16e} {:>22.16e}", euler_polynomial(m).eval_f64(0.3) / 2.0);
    }

    // the Fourier expansion converges slowly but independently
    let direct = zeta_e(re(-1.5), 0.25, &opts)?.value.re;
    let fourier = zeta_e_fourier(re(-1.5), 0.25, 100_000)?.value.re;
    println!("\nFourier check at s = -1.5, x = 1/4: {direct:.12} vs {fourier:.12}");

    println!("G_E(-1, 0.2) = {:.15}  (= (E_1(0.2) - E_1(0.8)) / 2 = -0.3)", g_e(re(-1.0), 0.2)?.re);
    Ok(())
}
