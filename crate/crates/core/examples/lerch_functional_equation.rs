//! The Lerch-type function `l_{E,s}(x) = sum e^((2n+1) pi i x) / (2n+1)^s`
//! and the functional equation tying it to `zeta_E(1-s, x)`.

use std::f64::consts::PI;

use eulerzeta::identities::abel_lerch_neg_int;
use eulerzeta::zeta::{gamma, lerch_e, lerch_e_neg_int, lerch_e_rational, zeta_e, EvalOptions};
use eulerzeta::Complex;

fn main() -> eulerzeta::Result<()> {
    let (s, x) = (Complex::new(2.5, 0.0), 0.3);

    let direct = lerch_e(s, x)?;
    let reflected = lerch_e(s, 1.0 - x)?;
    let rot = (Complex::new(0.0, PI / 2.0) * s).exp();
    let forward = gamma(s)? / (s * PI.ln()).exp() * (direct / rot - rot * reflected);
    let target = zeta_e(1.0 - s, x, &EvalOptions::default())?.value;
    println!("zeta_E(1-s, x)           = {target:.15}");
    println!("from l_(E,s)(x), l(1-x)  = {forward:.15}");

    // at rational x the function is a finite Hurwitz combination
    println!("\nl_(E,2.5)(1/3): series {:.15}, Hurwitz combination {:.15}", lerch_e(s, 1.0 / 3.0)?, lerch_e_rational(s, 1, 3)?);

    // at nonpositive integers the series diverges; Apostol–Bernoulli values
    // agree with the Abel means
    println!("\nk   Apostol-Bernoulli           Abel summation");
    for k in 0..=4u32 {
        println!("{k}   {:.12}   {:.12}", lerch_e_neg_int(k, 0.2)?, abel_lerch_neg_int(k, 0.2));
    }
    println!("l_(E,0)(x) = i / (2 sin(pi x)): {:.15}", 0.5 / (PI * 0.2).sin());
    Ok(())
}
