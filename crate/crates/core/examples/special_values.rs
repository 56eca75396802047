//! Closed-form special values next to their numerical evaluation.
//!
//! Run with `cargo run --example special_values`.

use eulerzeta::cli::{table, TableKind};
use eulerzeta::zeta::{dirichlet_beta, dirichlet_lambda, riemann_zeta};
use eulerzeta::Complex;

fn main() -> eulerzeta::Result<()> {
    let s = |x: f64| Complex::new(x, 0.0);

    let lambda2 = dirichlet_lambda(s(2.0))?;
    println!("lambda(2) = {:.15}  (pi^2/8 = {:.15}), via {}", lambda2.value.re, std::f64::consts::PI.powi(2) / 8.0, lambda2.method);

    let catalan = dirichlet_beta(s(2.0))?;
    println!("beta(2)   = {:.15}  (Catalan's constant)", catalan.value.re);

    // lambda at negative arguments goes through the functional equation
    let l = dirichlet_lambda(s(-2.5))?;
    println!("lambda(-2.5) = {:.15e} +- {:.1e}, via {}", l.value.re, l.est_error, l.method);

    let z = riemann_zeta(Complex::new(0.5, 14.134725141734693))?;
    println!("|zeta(1/2 + 14.1347i)| = {:.3e}  (first nontrivial zero)", z.value.norm());

    for (kind, n) in [(TableKind::LambdaEven, 4), (TableKind::BetaOdd, 3), (TableKind::EulerNumbers, 10)] {
        println!("\n{kind:?}");
        for row in table(kind, n)? {
            println!("  {:>2}  {:<14} {:>22.15e} {:>22.15e}  agree={}", row.index, row.closed_form, row.closed_value, row.numeric, row.agree);
        }
    }
    Ok(())
}
