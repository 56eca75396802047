//! Adaptive quadrature on `[0, 1]`: smooth, oscillatory, split and
//! end-point singular integrands.

use std::f64::consts::PI;

use eulerzeta::quad::{integrate_oscillatory, integrate_unit, IntegrandSpec};
use eulerzeta::zeta::{zeta_e, EvalOptions};
use eulerzeta::Complex;

fn main() -> eulerzeta::Result<()> {
    let show = |name: &str, q: eulerzeta::quad::QuadratureResult, exact: f64| {
        println!(
            "{name:<28} {:>22.16} err {:>9.1e} (actual {:>9.1e}) evals {:>5} subdiv {:>3} converged {}",
            q.value.re,
            q.est_error,
            (q.value.re - exact).abs(),
            q.evaluations,
            q.subdivisions,
            q.converged
        )
    };

    let smooth = |x: f64| Complex::new((x * x).exp(), 0.0);
    show("exp(x^2)", integrate_unit(&IntegrandSpec::new(&smooth), 1e-13, 0.0)?, 1.462_651_745_907_181_6);

    // a fast oscillation: the frequency hint pre-splits the interval
    let osc = |x: f64| Complex::new((41.0 * PI * x).sin() * x, 0.0);
    show("x sin(41 pi x)", integrate_oscillatory(&IntegrandSpec::new(&osc), 41, 1e-13)?, 1.0 / (41.0 * PI));

    // removable 0/0 at x = 1/2, never evaluated
    let sec = |x: f64| Complex::new((0.5 - x) / (PI * x).cos(), 0.0);
    let catalan = 0.915_965_594_177_219;
    show("(1/2 - x) sec(pi x)", integrate_unit(&IntegrandSpec::new(&sec).split_at(0.5), 1e-13, 0.0)?, 4.0 * catalan / (PI * PI));

    // x^(-1/2) singularity at the left end
    let sing = |x: f64| Complex::new(x.powf(-0.5) * (1.0 - x), 0.0);
    show("(1-x)/sqrt(x)", integrate_unit(&IntegrandSpec::new(&sing).singular_left(0.5), 1e-13, 0.0)?, 4.0 / 3.0);

    // the integral that opens the catalog: the mean of zeta_E(s, x)
    let opts = EvalOptions::default();
    let ze = |x: f64| zeta_e(Complex::new(-1.5, 0.0), x, &opts).map(|v| v.value).unwrap_or(Complex::new(f64::NAN, 0.0));
    let q = integrate_unit(&IntegrandSpec::new(&ze), 1e-12, 0.0)?;
    println!("int_0^1 zeta_E(-1.5, x) dx = {:.15}", q.value.re);
    Ok(())
}
