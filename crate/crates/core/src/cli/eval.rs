use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::render::parse_complex;
use crate::error::{domain, Error, Result};
use crate::identities::ComplexValue;
use crate::poly::{apostol_bernoulli, bernoulli_polynomial, euler_polynomial, Rational};
use crate::zeta::{
    dirichlet_beta, dirichlet_lambda, hurwitz_zeta, lerch_e_with_error, riemann_zeta, transcendental_f, zeta_e,
    EvalOptions, Method, ZetaValue,
};

/// Functions reachable through `eval`, with their parameters.
pub const FUNCTIONS: &[(&str, &str)] = &[
    ("zeta", "--s <complex> [--x <real>]"),
    ("zeta-e", "--s <complex> [--x <real>, default 1]"),
    ("lambda", "--s <complex>"),
    ("beta", "--s <complex>"),
    ("lerch-e", "--s <complex> --x <real in (0,1)>"),
    ("euler-poly", "--m <int> --x <rational or decimal>"),
    ("bernoulli-poly", "--m <int> --x <rational or decimal>"),
    ("apostol-bernoulli", "--m <int> --a <real> --alpha <complex>"),
    ("f-transcendental", "--x <complex> --s <complex>"),
];

/// Output of `eval`. The JSON shape is `{"value":{"re","im"},"est_error","method"}`,
/// plus `exact` for the rational polynomial values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub value: ComplexValue,
    pub est_error: f64,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl From<ZetaValue> for Evaluation {
    fn from(z: ZetaValue) -> Self {
        Self {
            value: z.value.into(),
            est_error: z.est_error,
            method: z.method.to_string(),
            exact: None,
        }
    }
}

struct Args<'a> {
    function: &'a str,
    values: BTreeMap<String, String>,
}

impl Args<'_> {
    fn take(&mut self, name: &str) -> Result<Option<String>> {
        Ok(self.values.remove(name))
    }

    fn required(&mut self, name: &str) -> Result<String> {
        self.take(name)?
            .ok_or_else(|| Error::Config(format!("{} needs --{name}", self.function)))
    }

    fn complex(&mut self, name: &str) -> Result<Complex64> {
        parse_complex(&self.required(name)?)
    }

    fn real(&mut self, name: &str) -> Result<f64> {
        let text = self.required(name)?;
        parse_real(&text)
    }

    fn real_or(&mut self, name: &str, default: f64) -> Result<f64> {
        match self.take(name)? {
            Some(t) => parse_real(&t),
            None => Ok(default),
        }
    }

    fn index(&mut self, name: &str) -> Result<usize> {
        let text = self.required(name)?;
        text.parse::<usize>()
            .map_err(|_| Error::Config(format!("--{name} must be a nonnegative integer, got `{text}`")))
    }

    fn finish(self) -> Result<()> {
        match self.values.keys().next() {
            Some(k) => Err(Error::Config(format!("{} takes no parameter --{k}", self.function))),
            None => Ok(()),
        }
    }
}

fn parse_real(text: &str) -> Result<f64> {
    if let Some(r) = parse_rational(text) {
        return Ok(r.to_f64().unwrap_or(f64::NAN));
    }
    text.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Config(format!("not a real number: `{text}`")))
}

/// `p/q`, an integer, or a plain decimal such as `-0.125` (read exactly).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let (p, q) = (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?);
        return (!q.is_zero()).then(|| Rational::new(p, q));
    }
    let (neg, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty()
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let num: BigInt = format!("{int}{frac}").parse().ok()?;
    let r = Rational::new(num, BigInt::from(10).pow(frac.len() as u32));
    Some(if neg { -r } else { r })
}

fn polynomial(exact: Rational) -> Evaluation {
    Evaluation {
        value: Complex64::new(exact.to_f64().unwrap_or(f64::NAN), 0.0).into(),
        est_error: 0.0,
        method: Method::ClosedForm.to_string(),
        exact: Some(exact.to_string()),
    }
}

/// Evaluates `function` with `--name value` parameters.
pub fn evaluate(function: &str, params: BTreeMap<String, String>) -> Result<Evaluation> {
    let mut a = Args { function, values: params };
    let opts = EvalOptions::default();
    let out = match function {
        "zeta" => {
            let s = a.complex("s")?;
            match a.take("x")? {
                Some(x) => hurwitz_zeta(s, parse_real(&x)?, &opts)?.into(),
                None => riemann_zeta(s)?.into(),
            }
        }
        "zeta-e" => {
            let s = a.complex("s")?;
            let x = a.real_or("x", 1.0)?;
            zeta_e(s, x, &opts)?.into()
        }
        "lambda" => dirichlet_lambda(a.complex("s")?)?.into(),
        "beta" => dirichlet_beta(a.complex("s")?)?.into(),
        "lerch-e" => {
            let s = a.complex("s")?;
            let x = a.real("x")?;
            if !(x > 0.0 && x < 1.0) {
                return Err(domain(format!("lerch-e requires 0 < x < 1, got {x}")));
            }
            let (value, est_error) = lerch_e_with_error(s, x)?;
            let method = if s.re > 1.0 || (s - 1.0).norm() < 0.5 {
                Method::DirectSeries
            } else {
                Method::FunctionalEquation
            };
            ZetaValue { value, est_error, method }.into()
        }
        "euler-poly" | "bernoulli-poly" => {
            let m = a.index("m")?;
            let text = a.required("x")?;
            let x = parse_rational(&text)
                .ok_or_else(|| Error::Config(format!("--x must be a rational such as 1/3 or 0.25, got `{text}`")))?;
            let p = if function == "euler-poly" { euler_polynomial(m) } else { bernoulli_polynomial(m) };
            polynomial(p.eval(&x))
        }
        "apostol-bernoulli" => {
            let m = a.index("m")?;
            let x = a.real("a")?;
            let alpha = a.complex("alpha")?;
            Evaluation {
                value: apostol_bernoulli(m, x, alpha).into(),
                est_error: 0.0,
                method: Method::ClosedForm.to_string(),
                exact: None,
            }
        }
        "f-transcendental" => {
            let x = a.complex("x")?;
            let s = a.complex("s")?;
            let (value, est_error) = transcendental_f(x, s)?;
            ZetaValue {
                value,
                est_error,
                method: Method::DirectSeries,
            }
            .into()
        }
        other => {
            let known: Vec<&str> = FUNCTIONS.iter().map(|f| f.0).collect();
            return Err(Error::Config(format!("unknown function `{other}` (known: {})", known.join(", "))));
        }
    };
    a.finish()?;
    Ok(out)
}
