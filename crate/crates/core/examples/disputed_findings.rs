//! Numbers behind the disputed catalog entries: the exponential sum of
//! Lerch-type values and the Euler-type series for even beta values.

use eulerzeta::identities::{exp_sum_sides, rhs_beta_even_series};
use eulerzeta::zeta::dirichlet_beta;
use eulerzeta::Complex;

fn main() -> eulerzeta::Result<()> {
    println!("exponential sum: left side (Apostol-Bernoulli, Abel) vs printed right side");
    println!("{:>2} {:>5} {:>2} {:>16} {:>16} {:>12} {:>16}", "m", "alpha", "n", "lhs", "lhs (Abel)", "rhs exact", "rhs");
    for m in [3u32, 5] {
        for alpha in 1..m as i64 {
            for n in 1..=4 {
                let s = exp_sum_sides(m, alpha, n)?;
                println!(
                    "{m:>2} {alpha:>5} {n:>2} {:>16.12} {:>16.9} {:>12} {:>16.12}",
                    s.lhs.re, s.lhs_abel.re, s.rhs_exact.to_string(), s.rhs
                );
            }
        }
    }

    println!("\neven beta series: terms grow instead of shrinking");
    for m in 1..=3 {
        let beta = dirichlet_beta(Complex::new(2.0 * m as f64, 0.0))?.value.re;
        let ps = rhs_beta_even_series(m, 10)?;
        let terms: Vec<String> = ps.terms.iter().map(|t| format!("{t:.2e}")).collect();
        println!("beta({}) = {beta:.12}; first terms {}", 2 * m, terms.join(" "));
    }
    Ok(())
}
