//! The identity catalog.
//!
//! Left sides are computed independently of the closed forms they are
//! compared with: by quadrature of the defining integral, by a truncated
//! series, or in exact rational arithmetic. Grids stay inside the stated
//! domain of every identity (for instance `s <= 0` wherever the Fourier
//! expansion of `zeta_E` is integrated term by term).

use std::f64::consts::PI;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::grid::{Axis, GridSpec};
use super::oracle::abel_lerch_neg_int;
use super::rhs::{
    bernoulli_eisenstein, c, cpi, exp_euler_closed_form, exp_sum_sides, fourier_coefficient_unreflected, lam,
    lerch_closed, product_integral_beta_form, product_integral_closed_form, rhs_apostol_multiplication,
    rhs_beta_even_series, rhs_eisenstein, rhs_euler_transform, rhs_exp_transform, rhs_fourier_coefficient,
    rhs_moment, rhs_product_integral, rhs_rational_argument, rhs_secant_transform, spi, FourierKind,
};
use super::{IdentitySpec, Point, Side, Status};
use crate::error::{domain, Error, Result};
use crate::poly::{
    apostol_bernoulli, bernoulli_polynomial, binomial, euler_number, euler_poly_at_zero,
    euler_polynomial, factorial, rat, Rational, RationalPolynomial,
};
use crate::quad::{integrate_oscillatory, integrate_unit, IntegrandSpec};
use crate::zeta::{
    cos_pi, dirichlet_beta, g_e, gamma, gamma_real, hurwitz_zeta, lerch_e_direct,
    lerch_e_neg_int, sin_pi, zeta_e, zeta_e_fourier, EvalOptions,
};

const QUAD_TOL: f64 = 1e-12;
/// Terms of the truncated Fourier series in the partial-sum identities.
const FOURIER_TERMS: usize = 10_000;
const FOURIER_TERMS_SLOW: usize = 100_000;

// ---------------------------------------------------------------------------
// evaluation helpers

fn ze(s: f64, x: f64) -> Result<f64> {
    Ok(zeta_e(c(s), x, &EvalOptions::default())?.value.re)
}

fn zec(s: Complex64, x: f64) -> Result<Complex64> {
    Ok(zeta_e(s, x, &EvalOptions::default())?.value)
}

fn hz(s: Complex64, x: f64) -> Result<Complex64> {
    Ok(hurwitz_zeta(s, x, &EvalOptions::default())?.value)
}

fn int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn f64_of(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn expi(theta_over_pi: f64) -> Complex64 {
    Complex64::from_polar(1.0, PI * theta_over_pi)
}

fn cpow(base: f64, s: Complex64) -> Complex64 {
    (s * base.ln()).exp()
}

fn require_nonpositive(p: &Point, name: &str) -> Result<f64> {
    let s = p.real(name)?;
    if s > 0.0 {
        return Err(domain(format!("{name} must be <= 0 for this identity, got {s}")));
    }
    Ok(s)
}

#[derive(Default)]
struct Quad {
    splits: Vec<f64>,
    hint: Option<u32>,
    left: Option<f64>,
}

impl Quad {
    fn split(x: f64) -> Self {
        Self {
            splits: vec![x],
            ..Self::default()
        }
    }

    fn oscillating(hint: u32) -> Self {
        Self {
            hint: Some(hint),
            ..Self::default()
        }
    }

    /// Integrates a real integrand over `[0, 1]`. Evaluation failures inside
    /// the integrand poison the result with NaN and surface as an error.
    fn run(self, f: impl Fn(f64) -> Result<f64>) -> Result<Side> {
        let g = |x: f64| c(f(x).unwrap_or(f64::NAN));
        let mut spec = IntegrandSpec::new(&g);
        for &x in &self.splits {
            spec = spec.split_at(x);
        }
        if let Some(theta) = self.left {
            spec = spec.singular_left(theta);
        }
        let q = match self.hint {
            Some(h) => integrate_oscillatory(&spec, h, QUAD_TOL)?,
            None => integrate_unit(&spec, QUAD_TOL, 0.0)?,
        };
        if !(q.value.re.is_finite() && q.value.im.is_finite()) {
            return Err(domain("integrand could not be evaluated on the whole interval"));
        }
        Ok(Side::quadrature(q))
    }
}

/// `E_m(x)` in floating point, evaluated around `x = 1/2` where it is
/// best conditioned.
fn euler_centered(m: usize) -> impl Fn(f64) -> f64 {
    let q = euler_polynomial(m).shift(&rat(1, 2)).to_f64_coeffs();
    move |x| q.iter().rev().fold(0.0, |acc, a| acc * (x - 0.5) + a)
}

fn exact_integral(p: &RationalPolynomial) -> Side {
    Side::exact(p.integral_unit())
}

// ---------------------------------------------------------------------------
// catalog construction

struct Builder(Vec<IdentitySpec>);

impl Builder {
    #[allow(clippy::too_many_arguments)]
    fn add(
        &mut self,
        id: &'static str,
        title: &'static str,
        reference: &'static str,
        domain: GridSpec,
        tol: (f64, f64),
        lhs: impl Fn(&Point) -> Result<Side> + Send + Sync + 'static,
        rhs: impl Fn(&Point) -> Result<Side> + Send + Sync + 'static,
    ) -> &mut IdentitySpec {
        self.0.push(IdentitySpec {
            id,
            title,
            reference,
            domain,
            default_tol_abs: tol.0,
            default_tol_rel: tol.1,
            status: Status::Asserted,
            note: None,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        });
        self.0.last_mut().expect("just pushed")
    }
}

trait Annotate {
    fn disputed(&mut self, note: &'static str);
    fn note(&mut self, note: &'static str);
}

impl Annotate for IdentitySpec {
    fn disputed(&mut self, note: &'static str) {
        self.status = Status::Disputed;
        self.note = Some(note);
    }

    fn note(&mut self, note: &'static str) {
        self.note = Some(note);
    }
}

fn int_axis(p: &Point, name: &str) -> i64 {
    p.int(name).unwrap_or(i64::MIN)
}

fn real_axis(p: &Point, name: &str) -> f64 {
    p.real(name).unwrap_or(f64::NAN)
}

/// `s` from `lo` to `0` in steps of `step`.
fn s_range(lo: f64, step: f64) -> Axis {
    Axis::range("s", lo, 0.0, step)
}

fn sp_range(lo: f64, step: f64) -> Axis {
    Axis::range("sp", lo, 0.0, step)
}

fn pq_axes(qs: &[i64]) -> Vec<Axis> {
    vec![Axis::ints("q", qs.iter().copied()), Axis::ints("p", 1..=*qs.iter().max().unwrap_or(&1))]
}

fn p_below_q(p: &Point) -> bool {
    int_axis(p, "p") < int_axis(p, "q")
}

fn p_at_most_q(p: &Point) -> bool {
    int_axis(p, "p") <= int_axis(p, "q")
}

fn u32_axis(p: &Point, name: &str) -> Result<u32> {
    u32::try_from(p.nat(name)?).map_err(|_| Error::Config(format!("parameter `{name}` is too large")))
}

static CATALOG: LazyLock<Vec<IdentitySpec>> = LazyLock::new(build);

/// Every registered identity, sorted by id.
pub fn catalog() -> &'static [IdentitySpec] {
    &CATALOG
}

pub fn find_identity(id: &str) -> Result<&'static IdentitySpec> {
    catalog()
        .iter()
        .find(|s| s.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn build() -> Vec<IdentitySpec> {
    let mut b = Builder(Vec::new());
    fourier(&mut b);
    products(&mut b);
    polynomial_layer(&mut b);
    exponential(&mut b);
    secant_and_beta(&mut b);
    lambda_values(&mut b);
    functional_equations(&mut b);
    rational_arguments(&mut b);
    periodic_fourier(&mut b);
    lerch_special_values(&mut b);
    basic_relations(&mut b);
    let mut out = b.0;
    out.sort_by_key(|s| s.id);
    out
}

// ---------------------------------------------------------------------------
// Fourier coefficients and trigonometric transforms

fn fourier(b: &mut Builder) {
    fn coefficient_lhs(kind: FourierKind) -> impl Fn(&Point) -> Result<Side> {
        move |p| {
            let s = require_nonpositive(p, "s")?;
            let k = p.nat("k")?;
            let h = 2 * k as u32 + 1;
            Quad::oscillating(h).run(|x| {
                let trig = match kind {
                    FourierKind::Sin => spi(h as f64 * x),
                    FourierKind::Cos => cpi(h as f64 * x),
                };
                Ok(trig * ze(s, x)?)
            })
        }
    }
    fn coefficient_rhs(kind: FourierKind) -> impl Fn(&Point) -> Result<Side> {
        move |p| Ok(Side::new(rhs_fourier_coefficient(kind, p.real("s")?, p.nat("k")?)?, 0.0))
    }
    let grid = || GridSpec::new(vec![s_range(-4.0, 0.25), Axis::ints("k", [0, 1, 2, 5])]);
    b.add(
        "FOUR-SIN",
        "sine Fourier coefficients of zeta_E",
        "int_0^1 sin((2k+1) pi x) zeta_E(s,x) dx = pi^(s-1) (2k+1)^(s-1) Gamma(1-s) cos(pi s/2),  s <= 0",
        grid(),
        (1e-9, 0.0),
        coefficient_lhs(FourierKind::Sin),
        coefficient_rhs(FourierKind::Sin),
    );
    b.add(
        "FOUR-COS",
        "cosine Fourier coefficients of zeta_E",
        "int_0^1 cos((2k+1) pi x) zeta_E(s,x) dx = pi^(s-1) (2k+1)^(s-1) Gamma(1-s) sin(pi s/2),  s <= 0",
        grid(),
        (1e-9, 0.0),
        coefficient_lhs(FourierKind::Cos),
        coefficient_rhs(FourierKind::Cos),
    );
    b.add(
        "FOUR-REFLECTION",
        "pole-free rewriting of the Fourier coefficients",
        "pi^s (2k+1)^(s-1) / (2 Gamma(s)) * {csc, sec}(pi s/2) = pi^(s-1) (2k+1)^(s-1) Gamma(1-s) {cos, sin}(pi s/2)",
        GridSpec::new(vec![
            Axis::ints("kind", [0, 1]),
            Axis::reals("s", [-3.5, -2.25, -1.5, -0.75, -0.25]),
            Axis::ints("k", [0, 2]),
        ]),
        (1e-13, 1e-13),
        |p| {
            let kind = if p.int("kind")? == 0 { FourierKind::Sin } else { FourierKind::Cos };
            Ok(Side::real(fourier_coefficient_unreflected(kind, p.real("s")?, p.nat("k")?)?))
        },
        |p| {
            let kind = if p.int("kind")? == 0 { FourierKind::Sin } else { FourierKind::Cos };
            Ok(Side::new(rhs_fourier_coefficient(kind, p.real("s")?, p.nat("k")?)?, 0.0))
        },
    )
    .note("kind 0 is the sine coefficient, kind 1 the cosine coefficient");

    fn power_lhs(sine: bool) -> impl Fn(&Point) -> Result<Side> {
        move |p| {
            let s = require_nonpositive(p, "s")?;
            let n = p.nat("n")?;
            if n < 1 {
                return Err(domain("n must be >= 1"));
            }
            let e = 2 * n as i32 - 1;
            Quad::oscillating(e as u32).run(|x| {
                let t = if sine { spi(x) } else { cpi(x) };
                Ok(t.powi(e) * ze(s, x)?)
            })
        }
    }
    fn power_rhs(sine: bool) -> impl Fn(&Point) -> Result<Side> {
        move |p| {
            let s = require_nonpositive(p, "s")?;
            let n = p.nat("n")?;
            let sum: f64 = (0..n)
                .map(|k| {
                    let alt = if sine { sign(k) as f64 } else { 1.0 };
                    alt * binomial(2 * n - 1, n - k - 1).to_f64().unwrap_or(f64::NAN)
                        / ((2 * k + 1) as f64).powf(1.0 - s)
                })
                .sum();
            let trig = if sine { cpi(s / 2.0) } else { spi(s / 2.0) };
            let pref = gamma_real(1.0 - s)? / (PI.powf(1.0 - s) * 4f64.powi(n as i32 - 1));
            Ok(Side::real(pref * trig * sum))
        }
    }
    let grid = || GridSpec::new(vec![Axis::ints("n", [1, 2, 3]), Axis::reals("s", [0.0, -1.5, -3.0])]);
    b.add(
        "SIN-POW",
        "transform of odd powers of sine",
        "int_0^1 sin^(2n-1)(pi x) zeta_E(s,x) dx = Gamma(1-s) cos(pi s/2) / (pi^(1-s) 2^(2n-2)) \
         * sum_{k<n} (-1)^k C(2n-1, n-k-1) / (2k+1)^(1-s)",
        grid(),
        (1e-9, 0.0),
        power_lhs(true),
        power_rhs(true),
    );
    b.add(
        "COS-POW",
        "transform of odd powers of cosine",
        "int_0^1 cos^(2n-1)(pi x) zeta_E(s,x) dx = Gamma(1-s) sin(pi s/2) / (pi^(1-s) 2^(2n-2)) \
         * sum_{k<n} C(2n-1, n-k-1) / (2k+1)^(1-s)",
        grid(),
        (1e-9, 0.0),
        power_lhs(false),
        power_rhs(false),
    );

    b.add(
        "GEN-TRANSFORM",
        "transform of a function through its odd-harmonic expansion",
        "f = sum a_n cos((2n+1) pi x) + b_n sin((2n+1) pi x):  int_0^1 f zeta_E(s,x) dx = Gamma(1-s)/pi^(1-s) \
         (sin(pi s/2) C + cos(pi s/2) S), and with zeta_E(s,1-x): (cos(pi s/2) S - sin(pi s/2) C), \
         C = sum a_n/(2n+1)^(1-s), S = sum b_n/(2n+1)^(1-s)",
        GridSpec::new(vec![
            Axis::ints("case", [0, 1, 2]),
            Axis::ints("reflected", [0, 1]),
            Axis::reals("s", [0.0, -0.5, -1.5, -2.0]),
        ]),
        (1e-9, 0.0),
        |p| {
            let s = require_nonpositive(p, "s")?;
            let case = p.int("case")?;
            let refl = p.int("reflected")? != 0;
            let f = move |x: f64| match case {
                0 => spi(3.0 * x),
                1 => cpi(x),
                _ => x - 0.5,
            };
            let hint = if case == 0 { 3 } else { 1 };
            Quad::oscillating(hint).run(|x| Ok(f(x) * ze(s, if refl { 1.0 - x } else { x })?))
        },
        |p| {
            let s = require_nonpositive(p, "s")?;
            let (cc, ss) = match p.int("case")? {
                0 => (0.0, 3f64.powf(s - 1.0)),
                1 => (1.0, 0.0),
                2 => (-4.0 / (PI * PI) * lam(3.0 - s)?, 0.0),
                other => return Err(domain(format!("unknown case {other}"))),
            };
            let pref = gamma_real(1.0 - s)? / PI.powf(1.0 - s);
            let v = if p.int("reflected")? != 0 {
                cpi(s / 2.0) * ss - spi(s / 2.0) * cc
            } else {
                spi(s / 2.0) * cc + cpi(s / 2.0) * ss
            };
            Ok(Side::real(pref * v))
        },
    )
    .note("case 0: f = sin(3 pi x); case 1: f = cos(pi x); case 2: f = x - 1/2 = -(4/pi^2) sum cos((2n+1) pi x)/(2n+1)^2");
}

// ---------------------------------------------------------------------------
// products of two zeta_E values

fn product_quad(s: f64, sp: f64, reflected: bool) -> Result<Side> {
    Quad::default().run(|x| Ok(ze(sp, x)? * ze(s, if reflected { 1.0 - x } else { x })?))
}

fn products(b: &mut Builder) {
    let grid = || GridSpec::new(vec![s_range(-3.0, 0.5), sp_range(-3.0, 0.5)]);
    for (id, refl, title, reference) in [
        (
            "PROD-SAME",
            false,
            "integral of a product of two zeta_E",
            "int_0^1 zeta_E(s',x) zeta_E(s,x) dx = 2 Gamma(1-s) Gamma(1-s') / pi^(2-s-s') lambda(2-s-s') cos(pi (s-s')/2),  s, s' <= 0",
        ),
        (
            "PROD-REFL",
            true,
            "integral of a product with a reflected zeta_E",
            "int_0^1 zeta_E(s',x) zeta_E(s,1-x) dx = 2 Gamma(1-s) Gamma(1-s') / pi^(2-s-s') lambda(2-s-s') cos(pi (s+s')/2),  s, s' <= 0",
        ),
    ] {
        b.add(
            id,
            title,
            reference,
            grid(),
            (1e-8, 0.0),
            move |p| product_quad(require_nonpositive(p, "s")?, require_nonpositive(p, "sp")?, refl),
            move |p| Ok(Side::new(rhs_product_integral(p.real("s")?, p.real("sp")?, refl)?, 0.0)),
        );
    }

    b.add(
        "PROD-BETAFORM",
        "product integral in beta-function form",
        "int_0^1 zeta_E(s',x) zeta_E(s,x) dx = delta_2(1-s-s') cos(pi(s-s')/2)/cos(pi(s+s')/2) B(1-s,1-s') lambda(s+s'-1); \
         with zeta_E(s,1-x) the cosine ratio is absent",
        GridSpec::new(vec![Axis::ints("reflected", [0, 1]), s_range(-3.0, 0.5), sp_range(-3.0, 0.5)])
            .constrained("s + s' is not an odd integer unless reflected", |p| {
                let t = real_axis(p, "s") + real_axis(p, "sp");
                int_axis(p, "reflected") != 0 || !(t.fract() == 0.0 && (t as i64) % 2 != 0)
            }),
        (1e-8, 0.0),
        |p| {
            product_quad(
                require_nonpositive(p, "s")?,
                require_nonpositive(p, "sp")?,
                p.int("reflected")? != 0,
            )
        },
        |p| Ok(Side::real(product_integral_beta_form(p.real("s")?, p.real("sp")?, p.int("reflected")? != 0)?)),
    )
    .note("the unreflected form is 0/0 when s + s' is an odd integer; those points are excluded");

    for (id, refl, reference) in [
        (
            "SQUARE",
            false,
            "int_0^1 zeta_E(s,x)^2 dx = 2 Gamma(1-s)^2 pi^(2s-2) lambda(2-2s),  s <= 0",
        ),
        (
            "SQUARE-REFL",
            true,
            "int_0^1 zeta_E(s,x) zeta_E(s,1-x) dx = 2 Gamma(1-s)^2 pi^(2s-2) lambda(2-2s) cos(pi s),  s <= 0",
        ),
    ] {
        b.add(
            id,
            "integral of the square of zeta_E",
            reference,
            GridSpec::new(vec![s_range(-3.0, 0.5)]),
            (1e-8, 0.0),
            move |p| {
                let s = require_nonpositive(p, "s")?;
                product_quad(s, s, refl)
            },
            move |p| {
                let s = require_nonpositive(p, "s")?;
                let g = gamma_real(1.0 - s)?;
                let trig = if refl { cpi(s) } else { 1.0 };
                Ok(Side::real(2.0 * g * g * PI.powf(2.0 * s - 2.0) * lam(2.0 - 2.0 * s)? * trig))
            },
        );
    }

    b.add(
        "HALF-INT",
        "square integral at half-integers",
        "int_0^1 zeta_E(1/2 - m, x)^2 dx = 2 ((2m)! / (2^(2m) m!))^2 lambda(2m+1) / pi^(2m)",
        GridSpec::new(vec![Axis::ints("m", [1, 2])]),
        (1e-8, 0.0),
        |p| {
            let s = 0.5 - p.nat("m")? as f64;
            product_quad(s, s, false)
        },
        |p| {
            let m = p.nat("m")?;
            let r = int(factorial(2 * m)) / int(BigInt::from(4).pow(m as u32) * factorial(m));
            let r = f64_of(&r);
            Ok(Side::real(2.0 * r * r * lam((2 * m + 1) as f64)? / PI.powi(2 * m as i32)))
        },
    );
}

// ---------------------------------------------------------------------------
// Euler-polynomial transforms and the exact layer

fn polynomial_layer(b: &mut Builder) {
    b.add(
        "EULER-TRANSFORM",
        "transform of an Euler polynomial",
        "int_0^1 E_{m-1}(x) zeta_E(s,x) dx = (-1)^(m+1) 2 delta_2(m-s) (m-1)! lambda(s-m) / (1-s)_m,  s <= 0, m >= 1",
        GridSpec::new(vec![Axis::ints("m", 1..=5), s_range(-3.0, 0.5)]),
        (1e-8, 0.0),
        |p| {
            let s = require_nonpositive(p, "s")?;
            let m = p.nat("m")?;
            if m < 1 {
                return Err(domain("m must be >= 1"));
            }
            let e = euler_centered(m - 1);
            Quad::default().run(|x| Ok(e(x) * ze(s, x)?))
        },
        |p| Ok(Side::new(rhs_euler_transform(p.nat("m")?, p.real("s")?)?, 0.0)),
    );

    b.add(
        "MEAN",
        "mean value of zeta_E",
        "int_0^1 zeta_E(s,x) dx = 4 Gamma(1-s) / pi^(2-s) cos(pi s/2) lambda(2-s),  s < 1",
        GridSpec::new(vec![Axis::reals(
            "s",
            [-4.0, -3.5, -3.0, -2.5, -2.0, -1.5, -1.0, -0.5, 0.0, 0.25, 0.5],
        )]),
        (1e-8, 0.0),
        |p| {
            let s = p.real("s")?;
            if s >= 1.0 {
                return Err(domain(format!("the mean value needs s < 1, got {s}")));
            }
            let q = Quad {
                // zeta_E(s, x) ~ x^(-s) at the left end
                left: (s > 0.0).then_some(1.0 - s),
                ..Quad::default()
            };
            q.run(|x| ze(s, x))
        },
        |p| {
            let s = p.real("s")?;
            if s >= 1.0 {
                return Err(domain(format!("the mean value needs s < 1, got {s}")));
            }
            Ok(Side::real(4.0 * gamma_real(1.0 - s)? / PI.powf(2.0 - s) * cpi(s / 2.0) * lam(2.0 - s)?))
        },
    );

    b.add(
        "EULER-MEAN",
        "mean value of even Euler polynomials",
        "int_0^1 E_{2m}(x) dx = 8 (2m)! (-1)^m lambda(2m+2) / pi^(2m+2)   (form 0)\n\
         int_0^1 E_{2m}(x) dx = -2 (2m)! / (2m+1)! E_{2m+1}(0)           (form 1, exact)",
        GridSpec::new(vec![Axis::ints("form", [0, 1]), Axis::ints("m", 0..=6)]),
        (1e-12, 1e-12),
        |p| Ok(exact_integral(&euler_polynomial(2 * p.nat("m")?))),
        |p| {
            let m = p.nat("m")?;
            if p.int("form")? == 0 {
                let f = factorial(2 * m).to_f64().unwrap_or(f64::NAN);
                Ok(Side::real(
                    8.0 * f * sign(m) as f64 * lam((2 * m + 2) as f64)? / PI.powi(2 * m as i32 + 2),
                ))
            } else {
                let r = int(BigInt::from(-2)) * euler_poly_at_zero(2 * m + 1) / int(BigInt::from(2 * m + 1));
                Ok(Side::exact(r))
            }
        },
    );

    b.add(
        "EULER-PROD",
        "integral of a product of two Euler polynomials",
        "int_0^1 E_m(x) E_n(x) dx = 2 (-1)^(n+1) m! n! / (m+n+1)! E_{m+n+1}(0)",
        GridSpec::new(vec![Axis::ints("m", 0..=12), Axis::ints("n", 0..=12), Axis::ints("path", [0, 1])])
            .constrained("m + n <= 12 or m, n <= 8; the quadrature path only for m, n <= 3", |p| {
                let (m, n) = (int_axis(p, "m"), int_axis(p, "n"));
                let exact_range = m + n <= 12 || (m <= 8 && n <= 8);
                exact_range && (int_axis(p, "path") == 0 || (m <= 3 && n <= 3))
            }),
        (1e-12, 1e-12),
        |p| {
            let (m, n) = (p.nat("m")?, p.nat("n")?);
            if p.int("path")? == 0 {
                Ok(exact_integral(&(&euler_polynomial(m) * &euler_polynomial(n))))
            } else {
                let (em, en) = (euler_centered(m), euler_centered(n));
                Quad::default().run(|x| Ok(em(x) * en(x)))
            }
        },
        |p| {
            let (m, n) = (p.nat("m")?, p.nat("n")?);
            let r = int(BigInt::from(2 * sign(n + 1)) * factorial(m) * factorial(n)) / int(factorial(m + n + 1))
                * euler_poly_at_zero(m + n + 1);
            Ok(Side::exact(r))
        },
    )
    .note("path 0 compares exact rationals; path 1 integrates the product numerically");

    b.add(
        "MOMENTS",
        "moments of zeta_E",
        "int_0^1 x^n zeta_E(s,x) dx = sum_j C(n,j) (-1)^j delta_2(j-s+1) j! lambda(s-j-1) / (1-s)_{j+1} \
         + (-1)^n delta_2(n-s+1) n! lambda(s-n-1) / (1-s)_{n+1},  s <= 0",
        GridSpec::new(vec![Axis::ints("n", 0..=5), s_range(-3.0, 0.5)]),
        (1e-8, 0.0),
        |p| {
            let s = require_nonpositive(p, "s")?;
            let n = p.nat("n")? as i32;
            Quad::default().run(|x| Ok(x.powi(n) * ze(s, x)?))
        },
        |p| Ok(Side::new(rhs_moment(p.nat("n")?, p.real("s")?)?, 0.0)),
    );

    b.add(
        "XN-EULER",
        "moments of Euler polynomials",
        "int_0^1 x^n E_{m-1}(x) dx = (-1)^m / m (sum_j C(n,j) / C(m+j,j) E_{m+j}(0) + E_{m+n}(0) / C(m+n,n)),  m >= 1",
        GridSpec::new(vec![Axis::ints("m", 1..=12), Axis::ints("n", 0..=11)])
            .constrained("m + n <= 12", |p| int_axis(p, "m") + int_axis(p, "n") <= 12),
        (1e-12, 1e-12),
        |p| {
            let (m, n) = (p.nat("m")?, p.nat("n")?);
            if m < 1 {
                return Err(domain("m must be >= 1"));
            }
            Ok(exact_integral(&(&RationalPolynomial::monomial(n) * &euler_polynomial(m - 1))))
        },
        |p| {
            let (m, n) = (p.nat("m")?, p.nat("n")?);
            let mut acc = Rational::zero();
            for j in 0..=n {
                acc += int(binomial(n, j)) / int(binomial(m + j, j)) * euler_poly_at_zero(m + j);
            }
            acc += euler_poly_at_zero(m + n) / int(binomial(m + n, n));
            Ok(Side::exact(acc * rat(sign(m), m as i64)))
        },
    );

    b.add(
        "REMARK-IDS",
        "sum rules for Euler polynomials at zero",
        "m = 1: sum_j C(n,j) E_{j+1}(0)/(j+1) = -(E_{n+1}(0) + 1)/(n+1)\n\
         m = 2: sum_j C(n,j) E_{j+2}(0)/((j+1)(j+2)) = -(2 E_{n+2}(0) - n)/(2 (n+1)(n+2))",
        GridSpec::new(vec![Axis::ints("m", [1, 2]), Axis::ints("n", 0..=8)]),
        (1e-12, 1e-12),
        |p| {
            let (m, n) = (p.nat("m")?, p.nat("n")?);
            let mut acc = Rational::zero();
            for j in 0..=n {
                let den: i64 = if m == 1 { j as i64 + 1 } else { (j as i64 + 1) * (j as i64 + 2) };
                acc += int(binomial(n, j)) * euler_poly_at_zero(j + m) / rat(den, 1);
            }
            Ok(Side::exact(acc))
        },
        |p| {
            let (m, n) = (p.nat("m")?, p.nat("n")?);
            let (ni, r) = (n as i64, match m {
                1 => -(euler_poly_at_zero(n + 1) + Rational::one()) / rat(n as i64 + 1, 1),
                2 => {
                    let top = rat(2, 1) * euler_poly_at_zero(n + 2) - rat(n as i64, 1);
                    -top / rat(2 * (n as i64 + 1) * (n as i64 + 2), 1)
                }
                _ => return Err(domain("m must be 1 or 2")),
            });
            let _ = ni;
            Ok(Side::exact(r))
        },
    );
}

// ---------------------------------------------------------------------------
// exponential transform

fn exponential(b: &mut Builder) {
    let t_axis = || Axis::reals("t", [0.05, 0.15, 0.25, 0.35, 0.45]);
    b.add(
        "EXP-TRANSFORM",
        "transform of the exponential function",
        "int_0^1 e^(2 pi t x) zeta_E(s,x) dx = 2 (e^(2 pi t) + 1) Gamma(1-s) / pi^(2-s) Re(e^(pi i s/2) F(2it, s)),  \
         F(x,s) = sum_n lambda(n+2-s) x^n,  s <= 0, |t| <= 0.45",
        GridSpec::new(vec![Axis::reals("s", [0.0, -0.5, -1.0, -1.5, -2.0, -3.0]), t_axis()]),
        (1e-8, 0.0),
        |p| {
            let s = require_nonpositive(p, "s")?;
            let t = p.real("t")?;
            Quad::default().run(|x| Ok((2.0 * PI * t * x).exp() * ze(s, x)?))
        },
        |p| {
            let (v, err) = rhs_exp_transform(p.real("t")?, p.real("s")?)?;
            Ok(Side::new(v, err))
        },
    )
    .note("F(2it, s) needs |2t| < 1; the grid stops at |t| = 0.45");

    b.add(
        "EXP-EULER",
        "exponential transform of Euler polynomials",
        "int_0^1 e^(2 pi t x) E_m(x) dx = (-1)^m 4 (e^(2 pi t) + 1) m! / (2 pi t)^(m+2) \
         (pi t/2 tanh(pi t) - sum_{r=0}^{floor((m-1)/2)} (-1)^r lambda(2r+2) (2t)^(2r+2))",
        GridSpec::new(vec![Axis::ints("m", 0..=5), t_axis()]),
        (1e-8, 0.0),
        |p| {
            let t = p.real("t")?;
            let e = euler_centered(p.nat("m")?);
            Quad::default().run(|x| Ok((2.0 * PI * t * x).exp() * e(x)))
        },
        |p| Ok(Side::real(exp_euler_closed_form(p.nat("m")?, p.real("t")?)?)),
    );

    b.add(
        "TANH-COLLAPSE",
        "the m = 0 exponential identity",
        "(e^(2 pi t) - 1) / (2 pi t) = (e^(2 pi t) + 1) tanh(pi t) / (2 pi t)",
        GridSpec::new(vec![Axis::reals("t", [-0.45, -0.25, 0.05, 0.15, 0.25, 0.35, 0.45])]),
        (1e-12, 0.0),
        |p| {
            let t = p.real("t")?;
            Ok(Side::real((2.0 * PI * t).exp_m1() / (2.0 * PI * t)))
        },
        |p| Ok(Side::real(exp_euler_closed_form(0, p.real("t")?)?)),
    );
}

// ---------------------------------------------------------------------------
// secant transforms, Catalan's constant, beta values

fn secant_euler_quad(m: usize) -> Result<Side> {
    let e = euler_centered(2 * m - 1);
    Quad::split(0.5).run(|x| Ok(e(x) / cpi(x)))
}

fn beta_real(s: f64) -> Result<f64> {
    Ok(dirichlet_beta(c(s))?.value.re)
}

fn secant_and_beta(b: &mut Builder) {
    b.add(
        "SEC-TRANSFORM",
        "secant transform of G_E",
        "(1/2) int_0^1 G_E(s,x) / cos(pi x) dx = 2 Gamma(1-s) / pi^(1-s) sin(pi s/2) beta(1-s),  \
         G_E(s,x) = zeta_E(s,x) - zeta_E(s,1-x),  s <= 0",
        GridSpec::new(vec![s_range(-3.0, 0.5)]),
        (1e-8, 0.0),
        |p| {
            let s = require_nonpositive(p, "s")?;
            let half = Quad::split(0.5).run(|x| Ok(g_e(c(s), x)?.re / cpi(x)))?;
            Ok(Side {
                value: half.value * 0.5,
                est_error: half.est_error * 0.5,
                ..half
            })
        },
        |p| Ok(Side::new(rhs_secant_transform(p.real("s")?)?, 0.0)),
    )
    .note("the removable 0/0 at x = 1/2 is handled by splitting the interval there");

    b.add(
        "SEC-EULER",
        "secant transform of odd Euler polynomials",
        "int_0^1 sec(pi x) E_{2m-1}(x) dx = (-1)^m 4 (2m-1)! beta(2m) / pi^(2m),  m >= 1",
        GridSpec::new(vec![Axis::ints("m", 1..=3)]),
        (1e-8, 0.0),
        |p| secant_euler_quad(p.nat("m")?.max(1)),
        |p| {
            let m = p.nat("m")?;
            let f = factorial(2 * m - 1).to_f64().unwrap_or(f64::NAN);
            Ok(Side::real(sign(m) as f64 * 4.0 * f * beta_real((2 * m) as f64)? / PI.powi(2 * m as i32)))
        },
    );

    b.add(
        "CATALAN",
        "Catalan's constant as a secant integral",
        "G = beta(2) = -(pi^2/4) int_0^1 G_E(-1,x) / cos(pi x) dx   (form 0)\n\
         int_0^1 (1/2 - x) / cos(pi x) dx = 4 G / pi^2             (form 1)",
        GridSpec::new(vec![Axis::ints("form", [0, 1])]),
        (1e-9, 0.0),
        |p| {
            if p.int("form")? == 0 {
                let q = Quad::split(0.5).run(|x| Ok(g_e(c(-1.0), x)?.re / cpi(x)))?;
                let k = -PI * PI / 4.0;
                Ok(Side {
                    value: q.value * k,
                    est_error: q.est_error * k.abs(),
                    ..q
                })
            } else {
                Quad::split(0.5).run(|x| Ok((0.5 - x) / cpi(x)))
            }
        },
        |p| {
            let g = beta_real(2.0)?;
            Ok(Side::real(if p.int("form")? == 0 { g } else { 4.0 * g / (PI * PI) }))
        },
    );

    b.add(
        "BETA-EVEN-INT",
        "even beta values as secant integrals",
        "beta(2m) = (-1)^m pi^(2m) / (4 (2m-1)!) int_0^1 sec(pi x) E_{2m-1}(x) dx",
        GridSpec::new(vec![Axis::ints("m", 1..=3)]),
        (1e-8, 0.0),
        |p| Ok(Side::real(beta_real(2.0 * p.nat("m")? as f64)?)),
        |p| {
            let m = p.nat("m")?.max(1);
            let q = secant_euler_quad(m)?;
            let k = sign(m) as f64 * PI.powi(2 * m as i32) / (4.0 * factorial(2 * m - 1).to_f64().unwrap_or(f64::NAN));
            Ok(Side {
                value: q.value * k,
                est_error: q.est_error * k.abs(),
                ..q
            })
        },
    );

    b.add(
        "BETA-EVEN",
        "Euler-type series for even beta values",
        "beta(2m) = sum_{n>=1} (-1)^(n+m) pi^(2m+2n) E_{2n} / 4 * sum_{j=1}^{n} E_{2m+2j-1}(0) / ((2n-2j+1)! (2m+2j-1)!)",
        GridSpec::new(vec![Axis::ints("m", 1..=3)]),
        (1e-6, 0.0),
        |p| Ok(Side::real(beta_real(2.0 * p.nat("m")? as f64)?)),
        |p| {
            let ps = beta_even_truncated(p.nat("m")?)?;
            Ok(Side::real(ps.sum))
        },
    )
    .disputed(
        "the series diverges: it integrates the Taylor series of sec(pi x), whose radius of convergence is 1/2, \
         term by term over [0, 1]; the terms grow geometrically instead of reaching 1e-8",
    );

    b.add(
        "BETA-ODD",
        "odd beta values",
        "beta(2m+1) = (-1)^m E_{2m} pi^(2m+1) / (2^(2m+2) (2m)!)",
        GridSpec::new(vec![Axis::ints("m", 0..=3)]),
        (1e-11, 1e-11),
        |p| Ok(Side::real(beta_real((2 * p.nat("m")? + 1) as f64)?)),
        |p| {
            let m = p.nat("m")?;
            let r = int(euler_number(2 * m) * sign(m)) / int(BigInt::from(4).pow(m as u32 + 1) * factorial(2 * m));
            Ok(Side::real(f64_of(&r) * PI.powi(2 * m as i32 + 1)))
        },
    );
}

/// Maximum truncation level tried for the even-beta series.
pub(crate) const BETA_EVEN_MAX_N: usize = 60;
/// Truncation stops once the last term falls below this.
pub(crate) const BETA_EVEN_TERM_TOL: f64 = 1e-8;

/// Partial sum at the first `n` whose term is below [`BETA_EVEN_TERM_TOL`],
/// or at [`BETA_EVEN_MAX_N`] when that never happens.
pub(crate) fn beta_even_truncated(m: usize) -> Result<super::BetaEvenPartialSum> {
    let full = rhs_beta_even_series(m, BETA_EVEN_MAX_N)?;
    let stop = full
        .terms
        .iter()
        .position(|t| t.abs() < BETA_EVEN_TERM_TOL)
        .map_or(BETA_EVEN_MAX_N, |i| i + 1);
    rhs_beta_even_series(m, stop)
}

// ---------------------------------------------------------------------------
// lambda values

fn lambda_values(b: &mut Builder) {
    b.add(
        "LAMBDA-EVEN",
        "lambda at even integers",
        "lambda(2m) = (-1)^m pi^(2m) / (4 (2m-1)!) E_{2m-1}(0)",
        GridSpec::new(vec![Axis::ints("m", 1..=8)]),
        (1e-12, 1e-12),
        |p| Ok(Side::real(lam(2.0 * p.nat("m")? as f64)?)),
        |p| {
            let m = p.nat("m")?.max(1);
            let r = euler_poly_at_zero(2 * m - 1) * rat(sign(m), 4) / int(factorial(2 * m - 1));
            Ok(Side::real(f64_of(&r) * PI.powi(2 * m as i32)))
        },
    );

    b.add(
        "LAMBDA-NEG",
        "lambda at nonpositive integers",
        "lambda(1-m) = (-1)^(m+1) E_{m-1}(0) / (2 delta_2(m-1)),  m >= 2",
        GridSpec::new(vec![Axis::ints("m", 2..=10)]),
        (1e-12, 1e-12),
        |p| Ok(Side::real(lam(1.0 - p.nat("m")? as f64)?)),
        |p| {
            let m = p.nat("m")?;
            if m < 2 {
                return Err(domain("m must be >= 2"));
            }
            // delta_2(m-1) = (1 - 2^m) / (1 - 2^(m-1))
            let two = BigInt::from(2);
            let d2 = int(BigInt::one() - two.pow(m as u32)) / int(BigInt::one() - two.pow(m as u32 - 1));
            let r = euler_poly_at_zero(m - 1) * rat(sign(m + 1), 2) / d2;
            Ok(Side::exact(r))
        },
    );
}

// ---------------------------------------------------------------------------
// functional equations between zeta_E and the Lerch-type function

/// `Gamma(s)/pi^s (e^{-pi i s/2} l(x) - e^{pi i s/2} l(1-x))`, which equals `zeta_E(1-s, x)`.
fn forward_map(s: Complex64, lx: Complex64, l1x: Complex64) -> Result<Complex64> {
    let rot = (Complex64::new(0.0, PI / 2.0) * s).exp();
    Ok(gamma(s)? / cpow(PI, s) * (lx / rot - rot * l1x))
}

/// `Gamma(1-s)/(2 pi^(1-s)) (e^{pi i (1-s)/2} Z(x) - e^{-pi i (1-s)/2} Z(1-x))`,
/// which equals `l_{E,s}(x)` when `Z = zeta_E(1-s, .)`.
fn inverse_map(s: Complex64, zx: Complex64, z1x: Complex64) -> Result<Complex64> {
    let u = 1.0 - s;
    let rot = (Complex64::new(0.0, PI / 2.0) * u).exp();
    Ok(gamma(u)? / (2.0 * cpow(PI, u)) * (rot * zx - z1x / rot))
}

fn functional_equations(b: &mut Builder) {
    let grid = || {
        GridSpec::new(vec![
            Axis::reals("s", [-2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5, 4.5]),
            Axis::reals("x", [0.1, 0.3, 0.5, 0.7, 0.9]),
        ])
    };
    b.add(
        "FUNC-EQ",
        "functional equation from the Lerch-type function to zeta_E",
        "zeta_E(1-s, x) = Gamma(s) / pi^s (e^(-pi i s/2) l_{E,s}(x) - e^(pi i s/2) l_{E,s}(1-x)),  \
         l_{E,s}(x) = sum_n e^((2n+1) pi i x) / (2n+1)^s",
        grid(),
        (1e-9, 1e-10),
        |p| Ok(Side::new(zec(c(1.0 - p.real("s")?), p.real("x")?)?, 0.0)),
        |p| {
            let (s, x) = (c(p.real("s")?), p.real("x")?);
            let (a, ea) = lerch_e_direct(s, x);
            let (b, eb) = lerch_e_direct(s, 1.0 - x);
            let v = forward_map(s, a, b)?;
            let scale = (gamma(s)? / cpow(PI, s)).norm();
            Ok(Side::new(v, scale * (ea + eb)))
        },
    )
    .note("the Lerch-type values come from the directly summed series, not from the continuation");

    b.add(
        "FUNC-EQ-INV",
        "functional equation from zeta_E to the Lerch-type function",
        "l_{E,s}(x) = Gamma(1-s) / (2 pi^(1-s)) (e^(pi i (1-s)/2) zeta_E(1-s,x) - e^(-pi i (1-s)/2) zeta_E(1-s,1-x))",
        grid(),
        (1e-9, 1e-10),
        |p| {
            let (v, e) = lerch_e_direct(c(p.real("s")?), p.real("x")?);
            Ok(Side::new(v, e))
        },
        |p| {
            let (s, x) = (c(p.real("s")?), p.real("x")?);
            inverse_map(s, zec(1.0 - s, x)?, zec(1.0 - s, 1.0 - x)?).map(|v| Side::new(v, 0.0))
        },
    );

    b.add(
        "FUNC-EQ-ROUNDTRIP",
        "composition of the two functional equations",
        "forward(inverse(zeta_E(1-s, .))) = zeta_E(1-s, .)",
        grid(),
        (1e-10, 0.0),
        |p| Ok(Side::new(zec(c(1.0 - p.real("s")?), p.real("x")?)?, 0.0)),
        |p| {
            let (s, x) = (c(p.real("s")?), p.real("x")?);
            let (zx, z1x) = (zec(1.0 - s, x)?, zec(1.0 - s, 1.0 - x)?);
            let lx = inverse_map(s, zx, z1x)?;
            let l1x = inverse_map(s, z1x, zx)?;
            forward_map(s, lx, l1x).map(|v| Side::new(v, 0.0))
        },
    );

    b.add(
        "FUNC-EQ-ASYM",
        "alternating zeta through lambda",
        "zeta_E(1-s, 1) = -2 Gamma(s) / pi^s cos(pi s/2) lambda(s)",
        GridSpec::new(vec![Axis::reals("s", [-2.5, -1.5, -0.5, 0.5, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0])]),
        (1e-10, 1e-10),
        |p| Ok(Side::new(zec(c(1.0 - p.real("s")?), 1.0)?, 0.0)),
        |p| {
            let s = p.real("s")?;
            Ok(Side::real(-2.0 * gamma_real(s)? / PI.powf(s) * cpi(s / 2.0) * lam(s)?))
        },
    );

    b.add(
        "LERCH-HALF",
        "the Lerch-type function at one half",
        "l_{E,s}(1/2) = i Gamma(1-s) / pi^(1-s) sin(pi (1-s)/2) zeta_E(1-s, 1/2)",
        GridSpec::new(vec![Axis::reals("s", [-2.5, -1.5, -0.5, 0.0, 0.5, 1.5, 2.5, 3.5])]),
        (1e-10, 1e-10),
        |p| {
            let (v, e) = lerch_e_direct(c(p.real("s")?), 0.5);
            Ok(Side::new(v, e))
        },
        |p| {
            let s = p.real("s")?;
            let v = gamma_real(1.0 - s)? / PI.powf(1.0 - s) * spi((1.0 - s) / 2.0) * ze(1.0 - s, 0.5)?;
            Ok(Side::new(Complex64::new(0.0, v), 0.0))
        },
    );

    b.add(
        "ZETA-LERCH-PROD",
        "product integral of zeta_E and the Lerch-type function, by composition",
        "Gamma(1-s)/(2 pi^(1-s)) [e^(pi i (1-s)/2) P(1-s, s') - e^(-pi i (1-s)/2) P_refl(1-s, s')] \
         = pi^(s'-1) Gamma(1-s') e^(pi i (1-s')/2) lambda(1+s-s'),  P, P_refl the product-integral closed forms",
        GridSpec::new(vec![
            Axis::reals("s", [-2.75, -2.25, -1.75, -1.25, -0.75, -0.25]),
            sp_range(-3.0, 0.5),
        ]),
        (1e-10, 1e-10),
        |p| {
            let (s, sp) = (p.real("s")?, p.real("sp")?);
            let same = product_integral_closed_form(1.0 - s, sp, false)?;
            let refl = product_integral_closed_form(1.0 - s, sp, true)?;
            let rot = expi((1.0 - s) / 2.0);
            let pref = gamma_real(1.0 - s)? / (2.0 * PI.powf(1.0 - s));
            Ok(Side::new(pref * (rot * same - refl / rot), 0.0))
        },
        |p| {
            let (s, sp) = (p.real("s")?, p.real("sp")?);
            let v = PI.powf(sp - 1.0) * gamma_real(1.0 - sp)? * lam(1.0 + s - sp)?;
            Ok(Side::new(v * expi((1.0 - sp) / 2.0), 0.0))
        },
    )
    .note(
        "the integrand is not integrable at the endpoints for s <= 0, so the identity is checked by substituting \
         the product-integral closed forms into the continuation of the Lerch-type function",
    );

    let ten = || (0..10).map(|i| -f64::from(3 * i) / 10.0 + 0.0).collect::<Vec<_>>();
    b.add(
        "LERCH-PROD-BRACKET",
        "trigonometric bracket behind the Lerch product integral",
        "e^(-pi i s/2) cos(pi (1-s-s')/2) + e^(pi i s/2) cos(pi (1-s+s')/2) = e^(-pi i s'/2) sin(pi s)",
        GridSpec::new(vec![Axis::reals("s", ten()), Axis::reals("sp", ten())]),
        (1e-12, 0.0),
        |p| {
            let (s, sp) = (p.real("s")?, p.real("sp")?);
            Ok(Side::new(
                expi(-s / 2.0) * cpi((1.0 - s - sp) / 2.0) + expi(s / 2.0) * cpi((1.0 - s + sp) / 2.0),
                0.0,
            ))
        },
        |p| {
            let (s, sp) = (p.real("s")?, p.real("sp")?);
            Ok(Side::new(expi(-sp / 2.0) * spi(s), 0.0))
        },
    );
}

// ---------------------------------------------------------------------------
// rational arguments, multiplication and Eisenstein-type formulas

fn rational_arguments(b: &mut Builder) {
    b.add(
        "RATIONAL-ARG",
        "zeta_E at rational arguments",
        "zeta_E(1-s, p/q) = 2 Gamma(s) / (2 q pi)^s sum_{r=1}^{q} cos(pi s/2 - (2r-1) pi p/q) zeta(s, (2r-1)/(2q))",
        GridSpec::new(
            [
                vec![
                    Axis::reals("s", [-1.5, -0.5, 0.5, 1.5, 2.0, 2.5, 3.0, 4.0]),
                    Axis::reals("si", [0.0, 0.5]),
                ],
                pq_axes(&[1, 2, 3, 5]),
            ]
            .concat(),
        )
        .constrained("1 <= p <= q", p_at_most_q),
        (1e-9, 1e-10),
        |p| {
            let s = Complex64::new(p.real("s")?, p.real("si")?);
            let x = p.nat("p")? as f64 / p.nat("q")? as f64;
            Ok(Side::new(zec(1.0 - s, x)?, 0.0))
        },
        |p| {
            let s = Complex64::new(p.real("s")?, p.real("si")?);
            Ok(Side::new(rhs_rational_argument(s, u32_axis(p, "p")?, u32_axis(p, "q")?)?, 0.0))
        },
    )
    .note("si is the imaginary part of s");

    b.add(
        "EULER-RATIONAL",
        "Euler polynomials at rational arguments",
        "E_m(p/q) = 4 m! / (2 q pi)^(m+1) sum_{r=1}^{q} sin((2r-1) pi p/q - m pi/2) zeta(m+1, (2r-1)/(2q)),  m >= 1",
        GridSpec::new([vec![Axis::ints("m", 1..=4)], pq_axes(&[1, 2, 3, 5])].concat())
            .constrained("1 <= p <= q", p_at_most_q),
        (1e-10, 1e-10),
        |p| {
            let (m, pp, q) = (p.nat("m")?, p.int("p")?, p.int("q")?);
            Ok(Side::exact(euler_polynomial(m).eval(&rat(pp, q))))
        },
        |p| {
            let (m, pp, q) = (p.nat("m")?, p.nat("p")?, p.nat("q")?);
            if m < 1 {
                return Err(domain("m must be >= 1"));
            }
            let qf = q as f64;
            let mut sum = 0.0;
            for r in 1..=q {
                let arg = ((2 * r - 1) as f64 * pp as f64 / qf - m as f64 / 2.0).rem_euclid(2.0);
                sum += spi(arg) * hz(c((m + 1) as f64), (2 * r - 1) as f64 / (2.0 * qf))?.re;
            }
            let f = factorial(m).to_f64().unwrap_or(f64::NAN);
            Ok(Side::real(4.0 * f / (2.0 * qf * PI).powi(m as i32 + 1) * sum))
        },
    );

    let below = |ms: std::ops::RangeInclusive<i64>| {
        GridSpec::new([vec![Axis::ints("m", ms)], pq_axes(&[2, 3, 5])].concat()).constrained("1 <= p < q", p_below_q)
    };
    b.add(
        "APOSTOL-MULT",
        "multiplication formula for Apostol-Bernoulli polynomials",
        "B_{m+1}(1/2, e^(2 pi i p/q)) = q^m sum_{r=1}^{q} e^(2 (r-1) pi i p/q) B_{m+1}((2r-1)/(2q)),  1 <= p < q",
        below(0..=4),
        (1e-12, 1e-12),
        |p| {
            let (m, pp, q) = (p.nat("m")?, p.nat("p")?, p.nat("q")?);
            let alpha = expi(2.0 * pp as f64 / q as f64);
            Ok(Side::new(apostol_bernoulli(m + 1, 0.5, alpha), 0.0))
        },
        |p| Ok(Side::new(rhs_apostol_multiplication(p.nat("m")?, u32_axis(p, "p")?, u32_axis(p, "q")?)?, 0.0)),
    );

    b.add(
        "EISENSTEIN",
        "generalized Eisenstein formula",
        "zeta(s, (2p-1)/(2q)) = (1/q) sum_{r=1}^{q} (2q)^s e^(-(2p-1) pi i r/q) l_{E,s}(r/q),  1 <= p < q",
        GridSpec::new(
            [vec![Axis::reals("s", [-2.5, -1.5, -1.0, -0.5, 0.5, 1.5, 2.0, 3.0])], pq_axes(&[2, 3, 5])].concat(),
        )
        .constrained("1 <= p < q", p_below_q),
        (1e-9, 1e-10),
        |p| {
            let x = (2 * p.nat("p")? - 1) as f64 / (2 * p.nat("q")?) as f64;
            Ok(Side::new(hz(c(p.real("s")?), x)?, 0.0))
        },
        |p| Ok(Side::new(rhs_eisenstein(c(p.real("s")?), u32_axis(p, "p")?, u32_axis(p, "q")?)?, 0.0)),
    )
    .note("the r = q term uses l_{E,s}(1) = -lambda(s)");

    b.add(
        "BERNOULLI-EISEN",
        "Eisenstein formula for Bernoulli polynomials",
        "B_{m+1}((2p-1)/(2q)) = q^-(m+1) sum_{r=1}^{q} e^(-2 (p-1) pi i r/q) B_{m+1}(1/2, e^(2 pi i r/q)),  1 <= p < q",
        below(0..=4),
        (1e-12, 1e-12),
        |p| {
            let (m, pp, q) = (p.nat("m")?, p.int("p")?, p.int("q")?);
            Ok(Side::exact(bernoulli_polynomial(m + 1).eval(&rat(2 * pp - 1, 2 * q))))
        },
        |p| Ok(Side::new(bernoulli_eisenstein(p.nat("m")?, u32_axis(p, "p")?, u32_axis(p, "q")?)?, 0.0)),
    )
    .note("the r = q term is the classical B_{m+1}(1/2)");

    b.add(
        "MUL-DIS",
        "Eisenstein sums against the functional equation",
        "form 1: (1/q) sum_{r=1}^{q} (2q)^s e^(-(2p+1) pi i r/q) l_{E,s}(r/q) \
         = Gamma(1-s)/pi^(1-s) (e^(-pi i (1-s)/2) l_{E,1-s}(x) - e^(pi i (1-s)/2) l_{E,1-s}(1-x)),  x = p/q\n\
         form 2: (2q)^-s sum_{r=1}^{q} e^((2r-1) pi i p/q) zeta(s, (2r-1)/(2q)) \
         = Gamma(1-s)/(2 pi^(1-s)) (e^(pi i (1-s)/2) zeta_E(1-s, p/q) - e^(-pi i (1-s)/2) zeta_E(1-s, 1-p/q))",
        GridSpec::new(
            [
                vec![Axis::ints("form", [1, 2]), Axis::reals("s", [-1.5, -0.5, 0.5, 1.5, 2.5])],
                pq_axes(&[2, 3, 5]),
            ]
            .concat(),
        )
        .constrained("1 <= p < q", p_below_q),
        (1e-9, 1e-10),
        |p| {
            let s = c(p.real("s")?);
            let (pp, q) = (p.nat("p")?, p.nat("q")?);
            let qf = q as f64;
            let mut sum = Complex64::zero();
            if p.int("form")? == 1 {
                for r in 1..=q {
                    let phase = -((2 * pp + 1) as f64 * r as f64 / qf).rem_euclid(2.0);
                    sum += expi(phase) * lerch_closed(s, r as f64 / qf)?;
                }
                Ok(Side::new(cpow(2.0 * qf, s) * sum / qf, 0.0))
            } else {
                for r in 1..=q {
                    let phase = ((2 * r - 1) as f64 * pp as f64 / qf).rem_euclid(2.0);
                    sum += expi(phase) * hz(s, (2 * r - 1) as f64 / (2.0 * qf))?;
                }
                Ok(Side::new(sum / cpow(2.0 * qf, s), 0.0))
            }
        },
        |p| {
            let s = c(p.real("s")?);
            let x = p.nat("p")? as f64 / p.nat("q")? as f64;
            let u = 1.0 - s;
            let rot = expi(u.re / 2.0);
            let g = gamma(u)? / cpow(PI, u);
            if p.int("form")? == 1 {
                let (a, b) = (lerch_closed(u, x)?, lerch_closed(u, 1.0 - x)?);
                Ok(Side::new(g * (a / rot - rot * b), 0.0))
            } else {
                Ok(Side::new(g / 2.0 * (rot * zec(u, x)? - zec(u, 1.0 - x)? / rot), 0.0))
            }
        },
    )
    .disputed(
        "form 1 has x free on its right side; with x = p/q its left side equals zeta(s, (2p+1)/(2q)) and its right \
         side zeta_E(s, p/q), which differ. Form 2 holds.",
    );
}

// ---------------------------------------------------------------------------
// Fourier series of periodic Euler and Bernoulli functions

fn periodic_fourier(b: &mut Builder) {
    let grid = || GridSpec::new(vec![Axis::ints("n", 2..=6), Axis::reals("x", [0.1, 0.25, 0.5, 0.8])]);
    fn euler_exact(p: &Point) -> Result<Side> {
        let n = p.nat("n")?;
        Ok(Side::real(euler_polynomial(n).eval_f64(p.real("x")?)))
    }
    /// Bound on the omitted terms `sum_{k>=N} 1/(2k+1)^(n+1)`.
    fn odd_tail(n: usize) -> f64 {
        (2.0 * FOURIER_TERMS as f64).powi(-(n as i32)) / (2.0 * n as f64)
    }
    b.add(
        "EULER-FOURIER",
        "Fourier series of Euler polynomials",
        "E_n(x) = 4 n! / pi^(n+1) sum_{k>=0} sin((2k+1) pi x - n pi/2) / (2k+1)^(n+1),  0 <= x < 1, n >= 1",
        grid(),
        (1e-5, 0.0),
        euler_exact,
        |p| {
            let (n, x) = (p.nat("n")?, p.real("x")?);
            let sum: f64 = (0..FOURIER_TERMS)
                .map(|k| {
                    let m = (2 * k + 1) as f64;
                    sin_pi(c(m * x - n as f64 / 2.0)).re / m.powi(n as i32 + 1)
                })
                .sum();
            let pref = 4.0 * factorial(n).to_f64().unwrap_or(f64::NAN) / PI.powi(n as i32 + 1);
            Ok(Side::new(c(pref * sum), pref * odd_tail(n)))
        },
    )
    .note("partial sums of 10^4 terms; the truncation bound counts as the right side's error");

    b.add(
        "EULER-FOURIER-COMPLEX",
        "complex form of the Euler Fourier series",
        "E_n(x) = 2 (-i)^(n-1) n! sum_{k>=0} ((-1)^(n-1) e^((2k+1) pi i x) + e^(-(2k+1) pi i x)) / ((2k+1) pi)^(n+1)",
        grid(),
        (1e-5, 0.0),
        euler_exact,
        |p| {
            let (n, x) = (p.nat("n")?, p.real("x")?);
            let alt = sign(n - 1) as f64;
            let mut sum = Complex64::zero();
            for k in 0..FOURIER_TERMS {
                let m = (2 * k + 1) as f64;
                let t = (m * x).rem_euclid(2.0);
                sum += (alt * expi(t) + expi(-t)) / (m * PI).powi(n as i32 + 1);
            }
            let f = factorial(n).to_f64().unwrap_or(f64::NAN);
            let pref = 2.0 * Complex64::new(0.0, -1.0).powu(n as u32 - 1) * f;
            let bound = 4.0 * f / PI.powi(n as i32 + 1) * odd_tail(n);
            Ok(Side::new(pref * sum, bound))
        },
    )
    .disputed(
        "for odd n the printed complex form has the wrong overall sign (at n = 1 it gives +4 cos where -4 cos is \
         needed); it agrees with the real form for even n",
    );

    b.add(
        "BERNOULLI-FOURIER",
        "Fourier series of Bernoulli polynomials",
        "B_n({x}) = -(-i)^n n! sum_{k>=1} (e^(2 pi i k x) + (-1)^n e^(-2 pi i k x)) / (2 pi k)^n,  n >= 2",
        grid(),
        (1e-5, 0.0),
        |p| Ok(Side::real(bernoulli_polynomial(p.nat("n")?).eval_f64(p.real("x")?))),
        |p| {
            let (n, x) = (p.nat("n")?, p.real("x")?);
            let alt = sign(n) as f64;
            let mut sum = Complex64::zero();
            for k in 1..=FOURIER_TERMS {
                let t = (2.0 * k as f64 * x).rem_euclid(2.0);
                sum += (expi(t) + alt * expi(-t)) / (2.0 * PI * k as f64).powi(n as i32);
            }
            let f = factorial(n).to_f64().unwrap_or(f64::NAN);
            let pref = -Complex64::new(0.0, -1.0).powu(n as u32) * f;
            let bound = 2.0 * f / (2.0 * PI).powi(n as i32) / ((n - 1) as f64 * (FOURIER_TERMS as f64).powi(n as i32 - 1));
            Ok(Side::new(pref * sum, bound))
        },
    )
    .note("partial sums of 10^4 terms; the truncation bound counts as the right side's error");
}

// ---------------------------------------------------------------------------
// Lerch-type values at nonpositive integers

fn lerch_special_values(b: &mut Builder) {
    b.add(
        "LERCH-ABEL",
        "Lerch-type values at nonpositive integers against Abel summation",
        "l_{E,-k}(x) = -2^k e^(pi i x) B_{k+1}(1/2, e^(2 pi i x)) / (k+1) = Abel-lim_{r->1} sum_n r^n e^((2n+1) pi i x) (2n+1)^k",
        GridSpec::new(vec![Axis::ints("k", 0..=4), Axis::reals("x", [0.2, 1.0 / 3.0, 0.5, 0.8, 0.9])]),
        (1e-8, 1e-8),
        |p| Ok(Side::new(lerch_e_neg_int(u32_axis(p, "k")?, p.real("x")?)?, 0.0)),
        |p| Ok(Side::new(abel_lerch_neg_int(u32_axis(p, "k")?, p.real("x")?), 0.0)),
    );

    b.add(
        "EXP-SUM",
        "exponential sums of Lerch-type values",
        "sum_{r=1}^{m-1} (-1)^r e^(-2 pi i r a/m) l_{E,1-n}(r/m) \
         = (-1)^(n-1)/4 (m^n E_{n-1}(y) + E_{n-1}(0)) - 1/(2n) (m^n B_n(y) + B_n(0)),  y = {2a/m}, m > 1 odd",
        GridSpec::new(vec![Axis::ints("m", [3, 5]), Axis::ints("alpha", 1..=4), Axis::ints("n", 1..=4)])
            .constrained("1 <= alpha < m", |p| int_axis(p, "alpha") < int_axis(p, "m")),
        (1e-9, 1e-10),
        |p| {
            let sides = exp_sum_sides(u32_axis(p, "m")?, p.int("alpha")?, u32_axis(p, "n")?)?;
            Ok(Side::new(sides.lhs, 0.0))
        },
        |p| {
            let sides = exp_sum_sides(u32_axis(p, "m")?, p.int("alpha")?, u32_axis(p, "n")?)?;
            Ok(Side::real(sides.rhs))
        },
    )
    .disputed(
        "the two sides disagree already at (m, alpha, n) = (3, 1, 1): the left side is -1 with l_{E,0}(x) = \
         i / (2 sin(pi x)), confirmed by Abel summation, while the right side is +1",
    );
}

// ---------------------------------------------------------------------------
// basic relations, special values and expansions of zeta_E

fn basic_relations(b: &mut Builder) {
    b.add(
        "RECURRENCE",
        "shift recurrence",
        "zeta_E(s, x) + zeta_E(s, x+1) = x^(-s)",
        GridSpec::new(vec![
            Axis::reals("s", [-3.5, -1.0, 0.5, 2.0, 3.5]),
            Axis::reals("x", [0.25, 0.5, 1.0, 1.7]),
        ]),
        (1e-11, 1e-11),
        |p| {
            let (s, x) = (p.real("s")?, p.real("x")?);
            Ok(Side::real(ze(s, x)? + ze(s, x + 1.0)?))
        },
        |p| Ok(Side::real(p.real("x")?.powf(-p.real("s")?))),
    );

    b.add(
        "MULT-ODD",
        "multiplication formula for odd factors",
        "zeta_E(s, k x) = k^(-s) sum_{n=0}^{k-1} (-1)^n zeta_E(s, n/k + x),  k odd",
        GridSpec::new(vec![
            Axis::ints("k", [3, 5]),
            Axis::reals("s", [-2.5, -1.0, 0.5, 2.0]),
            Axis::reals("x", [0.2, 0.7]),
        ]),
        (1e-11, 1e-11),
        |p| Ok(Side::real(ze(p.real("s")?, p.nat("k")? as f64 * p.real("x")?)?)),
        |p| {
            let (k, s, x) = (p.nat("k")?, p.real("s")?, p.real("x")?);
            let mut acc = 0.0;
            for n in 0..k {
                acc += sign(n) as f64 * ze(s, n as f64 / k as f64 + x)?;
            }
            Ok(Side::real((k as f64).powf(-s) * acc))
        },
    );

    b.add(
        "TAYLOR",
        "Taylor expansion in x",
        "zeta_E(s, x) - x^(-s) = -sum_{n>=0} C(-s, n) zeta_E(s+n) x^n,  |x| < 1, zeta_E(s) = zeta_E(s, 1)",
        GridSpec::new(vec![Axis::reals("s", [-1.5, 0.5, 2.5]), Axis::reals("x", [0.1, 0.3, 0.5])]),
        (1e-11, 1e-11),
        |p| {
            let (s, x) = (p.real("s")?, p.real("x")?);
            Ok(Side::real(ze(s, x)? - x.powf(-s)))
        },
        |p| {
            let (s, x) = (p.real("s")?, p.real("x")?);
            let (mut binom, mut xn, mut acc) = (1.0, 1.0, 0.0);
            for n in 0..120 {
                acc += binom * ze(s + n as f64, 1.0)? * xn;
                binom *= (-s - n as f64) / (n as f64 + 1.0);
                xn *= x;
            }
            Ok(Side::real(-acc))
        },
    );

    b.add(
        "SPECIAL-EULER",
        "values at nonpositive integers",
        "zeta_E(-m, x) = E_m(x) / 2",
        GridSpec::new(vec![Axis::ints("m", 0..=8), Axis::reals("x", (1..=10).map(|k| k as f64 / 10.0))]),
        (1e-10, 0.0),
        |p| Ok(Side::real(ze(-(p.nat("m")? as f64), p.real("x")?)?)),
        |p| Ok(Side::real(euler_polynomial(p.nat("m")?).eval_f64(p.real("x")?) / 2.0)),
    );

    b.add(
        "ZE-FOURIER",
        "Fourier expansion of zeta_E",
        "zeta_E(s, x) = 2 Gamma(1-s) / pi^(1-s) sum_{n>=0} sin((2n+1) pi x + pi s/2) / (2n+1)^(1-s),  s < 1, 0 < x <= 1",
        GridSpec::new(vec![Axis::reals("s", [-1.5, -0.5]), Axis::reals("x", [0.25, 0.5, 0.75])]),
        (1e-5, 0.0),
        |p| Ok(Side::real(ze(p.real("s")?, p.real("x")?)?)),
        |p| {
            let v = zeta_e_fourier(c(p.real("s")?), p.real("x")?, FOURIER_TERMS_SLOW)?;
            Ok(Side::new(v.value, 0.0))
        },
    )
    .note("partial sums of 10^5 terms");

    b.add(
        "GE-FOURIER",
        "Fourier expansion of G_E",
        "G_E(s, x) = 4 Gamma(1-s) / pi^(1-s) sin(pi s/2) sum_{n>=0} cos((2n+1) pi x) / (2n+1)^(1-s),  s < 0",
        GridSpec::new(vec![Axis::reals("s", [-2.5, -1.5, -0.5]), Axis::reals("x", [0.1, 0.3, 0.7])]),
        (1e-5, 0.0),
        |p| Ok(Side::new(g_e(c(p.real("s")?), p.real("x")?)?, 0.0)),
        |p| {
            let (s, x) = (require_nonpositive(p, "s")?, p.real("x")?);
            let sum: f64 = (0..FOURIER_TERMS_SLOW)
                .map(|n| {
                    let m = (2 * n + 1) as f64;
                    cos_pi(c((m * x).rem_euclid(2.0))).re / m.powf(1.0 - s)
                })
                .sum();
            Ok(Side::real(4.0 * gamma_real(1.0 - s)? / PI.powf(1.0 - s) * spi(s / 2.0) * sum))
        },
    )
    .note("partial sums of 10^5 terms");

    b.add(
        "HZ-FOURIER",
        "Fourier expansion of the Hurwitz zeta function",
        "zeta(s, x) = 2 Gamma(1-s) / (2 pi)^(1-s) sum_{n>=1} sin(2 n pi x + pi s/2) / n^(1-s),  s < 0, 0 < x <= 1",
        GridSpec::new(vec![Axis::reals("s", [-2.5, -1.5, -0.5]), Axis::reals("x", [0.25, 0.4, 0.75])]),
        (1e-6, 0.0),
        |p| Ok(Side::new(hz(c(p.real("s")?), p.real("x")?)?, 0.0)),
        |p| {
            let (s, x) = (require_nonpositive(p, "s")?, p.real("x")?);
            let sum: f64 = (1..=FOURIER_TERMS_SLOW)
                .map(|n| {
                    let arg = (2.0 * n as f64 * x).rem_euclid(2.0) + s / 2.0;
                    sin_pi(c(arg)).re / (n as f64).powf(1.0 - s)
                })
                .sum();
            Ok(Side::real(2.0 * gamma_real(1.0 - s)? / (2.0 * PI).powf(1.0 - s) * sum))
        },
    )
    .note("partial sums of 10^5 terms");

}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_grids_nonempty() {
        let cat = catalog();
        for w in cat.windows(2) {
            assert!(w[0].id < w[1].id, "{} / {}", w[0].id, w[1].id);
        }
        for spec in cat {
            assert!(!spec.domain.points().is_empty(), "{}", spec.id);
        }
        assert!(find_identity("four-sin").is_ok());
        assert!(matches!(find_identity("NOPE"), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn default_grid_sizes() {
        assert_eq!(find_identity("FOUR-SIN").unwrap().domain.points().len(), 68);
        assert_eq!(find_identity("LERCH-PROD-BRACKET").unwrap().domain.points().len(), 100);
        assert_eq!(find_identity("FUNC-EQ-ROUNDTRIP").unwrap().domain.points().len(), 40);
        // 3 + 2 * 2 + 4 * 4 points of (m, alpha) times four n
        assert_eq!(find_identity("EXP-SUM").unwrap().domain.points().len(), 24);
    }

    #[test]
    fn disputed_entries() {
        let disputed: Vec<&str> = catalog().iter().filter(|s| s.status == Status::Disputed).map(|s| s.id).collect();
        assert_eq!(disputed, ["BETA-EVEN", "EULER-FOURIER-COMPLEX", "EXP-SUM", "MUL-DIS"]);
        assert!(catalog().iter().filter(|s| s.status == Status::Disputed).all(|s| s.note.is_some()));
    }
}
