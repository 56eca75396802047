//! Randomized invariants of the evaluators and the exact polynomial layer.

use eulerzeta::identities::{catalog, check_identity, read_json_lines, write_json_lines, CheckOptions};
use eulerzeta::poly::{bernoulli_polynomial, euler_polynomial, Rational};
use eulerzeta::zeta::{dirichlet_lambda, g_e, zeta_e, EvalOptions};
use eulerzeta::Complex;
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shift_recurrence(s in -3.5f64..4.0, im in -5.0f64..5.0, x in 0.05f64..2.0) {
        // zeta_E(s, x) + zeta_E(s, x + 1) = x^(-s)
        let s = Complex::new(s, im);
        let opts = EvalOptions::default();
        let a = zeta_e(s, x, &opts).unwrap();
        let b = zeta_e(s, x + 1.0, &opts).unwrap();
        let target = Complex::new(x, 0.0).powc(-s);
        let tol = 1e-10 * target.norm().max(1.0) + a.est_error + b.est_error;
        prop_assert!((a.value + b.value - target).norm() <= tol, "{} vs {}", a.value + b.value, target);
    }

    #[test]
    fn nonpositive_integers_give_euler_polynomials(m in 0usize..10, x in 0.01f64..1.0) {
        let v = zeta_e(Complex::new(-(m as f64), 0.0), x, &EvalOptions::default()).unwrap();
        let expected = euler_polynomial(m).eval_f64(x) / 2.0;
        prop_assert!((v.value.re - expected).abs() <= 1e-10 + v.est_error);
    }

    #[test]
    fn g_e_is_odd_about_one_half(s in -3.0f64..3.0, x in 0.01f64..0.99) {
        let s = Complex::new(s, 0.0);
        let a = g_e(s, x).unwrap();
        let b = g_e(s, 1.0 - x).unwrap();
        prop_assert!((a + b).norm() <= 1e-10 * a.norm().max(1.0));
    }

    #[test]
    fn lambda_is_real_on_the_real_axis(s in -6.0f64..8.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let v = dirichlet_lambda(Complex::new(s, 0.0)).unwrap();
        prop_assert!(v.value.im.abs() <= 1e-12 * v.value.re.abs().max(1.0));
    }

    #[test]
    fn euler_polynomial_symmetries(n in 0usize..16, p in -20i64..20, q in 1i64..12) {
        let x = rational(p, q);
        let e = euler_polynomial(n);
        let one = rational(1, 1);
        // E_n(1 - x) = (-1)^n E_n(x)
        let reflected = e.eval(&(&one - &x));
        let sign = if n % 2 == 0 { one.clone() } else { -one.clone() };
        prop_assert_eq!(reflected, sign * e.eval(&x));
        // E_n(x + 1) + E_n(x) = 2 x^n
        let lhs = e.eval(&(&x + &one)) + e.eval(&x);
        prop_assert_eq!(lhs, rational(2, 1) * num_traits::pow(x.clone(), n));
    }

    #[test]
    fn bernoulli_difference(n in 1usize..16, p in -20i64..20, q in 1i64..12) {
        // B_n(x + 1) - B_n(x) = n x^(n-1)
        let x = rational(p, q);
        let b = bernoulli_polynomial(n);
        let lhs = b.eval(&(&x + &rational(1, 1))) - b.eval(&x);
        prop_assert_eq!(lhs, rational(n as i64, 1) * num_traits::pow(x, n - 1));
    }

    #[test]
    fn reports_round_trip_through_json(index in 0usize..10_000, pick in 0usize..1_000) {
        let specs = catalog();
        let spec = &specs[index % specs.len()];
        let points = spec.domain.points();
        let report = check_identity(spec, &points[pick % points.len()], &CheckOptions::default());
        let mut buf = Vec::new();
        write_json_lines(&mut buf, std::slice::from_ref(&report)).unwrap();
        let back = read_json_lines(buf.as_slice()).unwrap();
        prop_assert_eq!(back, vec![report]);
    }
}
