//! Identity verification harness.
//!
//! Every catalog entry pairs an independently computed left side (usually a
//! quadrature or a series) with a closed-form right side, and a parameter
//! grid on which the two are compared. [`run_suite`] walks the catalog,
//! possibly in parallel, and returns one [`IdentityCheckReport`] per grid
//! point in a deterministic order.

mod catalog;
mod grid;
mod oracle;
mod report;
mod rhs;

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::quad::QuadratureResult;

pub use catalog::{catalog, find_identity};
pub use grid::{Axis, GridOverride, GridSpec};
pub(crate) use grid::parse_value;
pub use oracle::{abel_lerch_neg_int, abel_lerch_partial};
pub use report::{catalog_json, read_json_lines, write_csv, write_json_lines};
pub use rhs::{
    exp_sum_sides, product_integral_closed_form, rhs_apostol_multiplication, rhs_beta_even_series,
    rhs_eisenstein, rhs_euler_transform, rhs_exp_transform, rhs_fourier_coefficient, rhs_moment,
    rhs_product_integral, rhs_rational_argument, rhs_secant_transform, BetaEvenPartialSum,
    ExpSumSides, FourierKind,
};

/// Whether an identity is expected to hold as printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Asserted,
    /// Reported side by side but never counted as a failure.
    Disputed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        })
    }
}

/// A grid coordinate. Integer axes stay integers so that exact-rational
/// evaluators can consume them without rounding.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
}

impl ParamValue {
    pub fn as_f64(self) -> f64 {
        match self {
            ParamValue::Int(i) => i as f64,
            ParamValue::Real(x) => x,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Real(x) => write!(f, "{x}"),
        }
    }
}

/// One parameter record, keyed by axis name.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub BTreeMap<String, ParamValue>);

impl Point {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: ParamValue) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<ParamValue> {
        self.0.get(name).copied()
    }

    pub fn real(&self, name: &str) -> Result<f64> {
        self.get(name)
            .map(ParamValue::as_f64)
            .ok_or_else(|| Error::Config(format!("missing parameter `{name}`")))
    }

    pub fn int(&self, name: &str) -> Result<i64> {
        match self.get(name) {
            Some(ParamValue::Int(i)) => Ok(i),
            Some(ParamValue::Real(x)) if x.fract() == 0.0 && x.abs() < 9e15 => Ok(x as i64),
            Some(ParamValue::Real(x)) => Err(Error::Config(format!("parameter `{name}` must be an integer, got {x}"))),
            None => Err(Error::Config(format!("missing parameter `{name}`"))),
        }
    }

    /// Nonnegative integer parameter.
    pub fn nat(&self, name: &str) -> Result<usize> {
        let i = self.int(name)?;
        usize::try_from(i).map_err(|_| Error::Config(format!("parameter `{name}` must be >= 0, got {i}")))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// One evaluated side of an identity.
#[derive(Clone, Debug)]
pub struct Side {
    pub value: Complex64,
    /// Error bound of the evaluation itself (quadrature or truncation).
    pub est_error: f64,
    /// Exact value, when the side was computed in rational arithmetic.
    pub exact: Option<Rational>,
    pub quadrature: Option<QuadratureMeta>,
}

impl Side {
    pub fn new(value: Complex64, est_error: f64) -> Self {
        Self {
            value,
            est_error,
            exact: None,
            quadrature: None,
        }
    }

    pub fn real(value: f64) -> Self {
        Self::new(Complex64::new(value, 0.0), 0.0)
    }

    pub fn exact(value: Rational) -> Self {
        use num_traits::ToPrimitive;
        let f = value.to_f64().unwrap_or(f64::NAN);
        Self {
            value: Complex64::new(f, 0.0),
            est_error: 0.0,
            exact: Some(value),
            quadrature: None,
        }
    }

    pub fn quadrature(q: QuadratureResult) -> Self {
        Self {
            value: q.value,
            est_error: q.est_error,
            exact: None,
            quadrature: Some(QuadratureMeta::from(q)),
        }
    }
}

/// Effort counters of the quadrature behind a left side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureMeta {
    pub evaluations: usize,
    pub subdivisions: usize,
    pub converged: bool,
}

impl From<QuadratureResult> for QuadratureMeta {
    fn from(q: QuadratureResult) -> Self {
        Self {
            evaluations: q.evaluations,
            subdivisions: q.subdivisions,
            converged: q.converged,
        }
    }
}

/// `{"re": .., "im": ..}` on the wire.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for Complex64 {
    fn from(z: ComplexValue) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Exact-arithmetic comparison, present when both sides were rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactComparison {
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// Outcome of one identity at one grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheckReport {
    pub id: String,
    pub status: Status,
    pub point_index: usize,
    pub point: Point,
    pub lhs: Option<ComplexValue>,
    pub rhs: Option<ComplexValue>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub lhs_est_error: Option<f64>,
    pub rhs_est_error: Option<f64>,
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub exact: Option<ExactComparison>,
    pub quadrature: Option<QuadratureMeta>,
    pub verdict: Verdict,
    pub diagnostic: Option<String>,
}

pub(crate) type Evaluator = Box<dyn Fn(&Point) -> Result<Side> + Send + Sync>;

/// One catalog entry.
pub struct IdentitySpec {
    pub id: &'static str,
    pub title: &'static str,
    /// The identity written out, `lhs = rhs`.
    pub reference: &'static str,
    pub domain: GridSpec,
    pub default_tol_abs: f64,
    pub default_tol_rel: f64,
    pub status: Status,
    /// Why a disputed entry is disputed, or what a reader should know.
    pub note: Option<&'static str>,
    pub(crate) lhs: Evaluator,
    pub(crate) rhs: Evaluator,
}

impl fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("status", &self.status)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

impl IdentitySpec {
    pub fn eval_lhs(&self, point: &Point) -> Result<Side> {
        (self.lhs)(point)
    }

    pub fn eval_rhs(&self, point: &Point) -> Result<Side> {
        (self.rhs)(point)
    }
}

/// Tolerance overrides and parallelism for checks and suites.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CheckOptions {
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    /// Worker threads for [`run_suite`]; `None` uses every core.
    pub threads: Option<usize>,
}

fn guarded(f: impl FnOnce() -> Result<Side>) -> std::result::Result<Side, String> {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(side)) => Ok(side),
        Ok(Err(e)) => Err(e.to_string()),
        Err(_) => Err("evaluator panicked".to_string()),
    }
}

/// Evaluates both sides at `point` and compares them.
///
/// The pass threshold is `tol_abs` plus the error estimates reported by the
/// two evaluations; a point also passes when the relative error is within
/// `tol_rel`. Evaluator failures yield [`Verdict::Skipped`] with the
/// diagnostic, never an error.
pub fn check_identity(spec: &IdentitySpec, point: &Point, opts: &CheckOptions) -> IdentityCheckReport {
    check_at(spec, 0, point, opts)
}

fn check_at(spec: &IdentitySpec, point_index: usize, point: &Point, opts: &CheckOptions) -> IdentityCheckReport {
    let tol_abs = opts.tol_abs.unwrap_or(spec.default_tol_abs);
    let tol_rel = opts.tol_rel.unwrap_or(spec.default_tol_rel);
    let mut report = IdentityCheckReport {
        id: spec.id.to_string(),
        status: spec.status,
        point_index,
        point: point.clone(),
        lhs: None,
        rhs: None,
        abs_err: None,
        rel_err: None,
        lhs_est_error: None,
        rhs_est_error: None,
        tol_abs,
        tol_rel,
        exact: None,
        quadrature: None,
        verdict: Verdict::Skipped,
        diagnostic: None,
    };
    let lhs = guarded(|| spec.eval_lhs(point));
    let rhs = guarded(|| spec.eval_rhs(point));
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) => {
            report.diagnostic = Some(format!("lhs: {e}"));
            return report;
        }
        (_, Err(e)) => {
            report.diagnostic = Some(format!("rhs: {e}"));
            return report;
        }
    };
    report.lhs = Some(lhs.value.into());
    report.rhs = Some(rhs.value.into());
    report.lhs_est_error = Some(lhs.est_error);
    report.rhs_est_error = Some(rhs.est_error);
    report.quadrature = lhs.quadrature.or(rhs.quadrature);

    let finite = |z: Complex64| z.re.is_finite() && z.im.is_finite();
    if !finite(lhs.value) || !finite(rhs.value) {
        report.diagnostic = Some("non-finite value".to_string());
        return report;
    }
    let abs_err = (lhs.value - rhs.value).norm();
    let scale = rhs.value.norm();
    // undefined against an exact zero
    let rel_err = if abs_err == 0.0 {
        Some(0.0)
    } else {
        (scale > 0.0).then(|| abs_err / scale)
    };
    report.abs_err = Some(abs_err);
    report.rel_err = rel_err;

    report.verdict = match (&lhs.exact, &rhs.exact) {
        (Some(a), Some(b)) => {
            let equal = a == b;
            report.exact = Some(ExactComparison {
                lhs: a.to_string(),
                rhs: b.to_string(),
                equal,
            });
            if equal {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }
        _ => {
            let threshold = tol_abs + lhs.est_error + rhs.est_error;
            if abs_err <= threshold || rel_err.is_some_and(|r| r <= tol_rel) {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        }
    };
    if let Some(q) = report.quadrature {
        if !q.converged {
            report.diagnostic = Some("quadrature did not reach its tolerance".to_string());
        }
    }
    report
}

/// Pass/fail/skip counts of a suite run. Reports of disputed identities are
/// counted only under `disputed`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub disputed: usize,
}

impl SuiteSummary {
    pub fn from_reports(reports: &[IdentityCheckReport]) -> Self {
        let mut s = SuiteSummary {
            total: reports.len(),
            ..Default::default()
        };
        for r in reports {
            match (r.status, r.verdict) {
                (Status::Disputed, _) => s.disputed += 1,
                (_, Verdict::Pass) => s.pass += 1,
                (_, Verdict::Fail) => s.fail += 1,
                (_, Verdict::Skipped) => s.skipped += 1,
            }
        }
        s
    }

    /// True when no asserted identity failed.
    pub fn ok(&self) -> bool {
        self.fail == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub reports: Vec<IdentityCheckReport>,
    pub summary: SuiteSummary,
}

/// Compiles a comma-separated list of id globs (`*` and `?` wildcards) into
/// one anchored regex. An empty filter matches everything.
pub fn compile_filter(filter: &str) -> Result<Regex> {
    let parts: Vec<String> = filter
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| regex::escape(p).replace(r"\*", ".*").replace(r"\?", "."))
        .collect();
    let pattern = if parts.is_empty() {
        "^.*$".to_string()
    } else {
        format!("^(?:{})$", parts.join("|"))
    };
    Regex::new(&pattern).map_err(|e| Error::Config(format!("bad filter `{filter}`: {e}")))
}

/// Expands the grids of every identity whose id matches `filter`.
///
/// Overrides replace the values of same-named axes; an override naming an
/// axis that no selected identity has is a configuration error, as is a
/// grid that becomes empty after constraint filtering.
pub fn plan_suite(
    filter: &str,
    overrides: &[GridOverride],
) -> Result<Vec<(&'static IdentitySpec, Vec<Point>)>> {
    let re = compile_filter(filter)?;
    let mut selected: Vec<&IdentitySpec> = catalog().iter().filter(|s| re.is_match(s.id)).collect();
    selected.sort_by_key(|s| s.id);
    if selected.is_empty() {
        return Err(Error::Config(format!("filter `{filter}` matches no identity")));
    }
    for o in overrides {
        if !selected.iter().any(|s| s.domain.has_axis(&o.axis)) {
            return Err(Error::Config(format!(
                "grid override `{}` matches no axis of the selected identities",
                o.axis
            )));
        }
    }
    selected
        .into_iter()
        .map(|spec| {
            let points = spec.domain.points_with(overrides);
            if points.is_empty() {
                Err(Error::Config(format!("grid of {} is empty after constraints", spec.id)))
            } else {
                Ok((spec, points))
            }
        })
        .collect()
}

/// Runs every matching identity over its grid.
///
/// Points are evaluated concurrently; the reports are then sorted by id and
/// grid position, so the output does not depend on scheduling.
pub fn run_suite(filter: &str, overrides: &[GridOverride], opts: &CheckOptions) -> Result<SuiteRun> {
    let plan = plan_suite(filter, overrides)?;
    let jobs: Vec<(&IdentitySpec, usize, &Point)> = plan
        .iter()
        .flat_map(|(spec, pts)| pts.iter().enumerate().map(move |(i, p)| (*spec, i, p)))
        .collect();
    let work = || -> Vec<IdentityCheckReport> {
        jobs.par_iter()
            .map(|(spec, i, p)| check_at(spec, *i, p, opts))
            .collect()
    };
    let mut reports = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };
    reports.sort_by(|a, b| a.id.cmp(&b.id).then(a.point_index.cmp(&b.point_index)));
    let summary = SuiteSummary::from_reports(&reports);
    Ok(SuiteRun { reports, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point(pairs: &[(&str, ParamValue)]) -> Point {
        pairs.iter().fold(Point::new(), |p, (k, v)| p.with(k, *v))
    }

    #[test]
    fn filter_globs() {
        let re = compile_filter("EULER-*").unwrap();
        assert!(re.is_match("EULER-PROD"));
        assert!(!re.is_match("XN-EULER"));
        let re = compile_filter("PROD-*, MEAN").unwrap();
        assert!(re.is_match("PROD-SAME") && re.is_match("MEAN") && !re.is_match("MEANS"));
        assert!(compile_filter("").unwrap().is_match("ANYTHING"));
    }

    #[test]
    fn spot_checks() {
        let opts = CheckOptions::default();
        let r = check_identity(
            find_identity("EULER-PROD").unwrap(),
            &point(&[("m", ParamValue::Int(1)), ("n", ParamValue::Int(1)), ("path", ParamValue::Int(0))]),
            &opts,
        );
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!((r.lhs.unwrap().re - 1.0 / 12.0).abs() < 1e-15);
        assert_eq!(r.exact.as_ref().unwrap().lhs, "1/12");

        let r = check_identity(
            find_identity("PROD-SAME").unwrap(),
            &point(&[("s", ParamValue::Real(0.0)), ("sp", ParamValue::Real(0.0))]),
            &opts,
        );
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!((r.rhs.unwrap().re - 0.25).abs() < 1e-14);

        let r = check_identity(
            find_identity("FOUR-SIN").unwrap(),
            &point(&[("s", ParamValue::Real(-1.0)), ("k", ParamValue::Int(3))]),
            &opts,
        );
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(r.lhs.unwrap().re.abs() < 1e-12 && r.rhs.unwrap().re.abs() < 1e-15);
    }

    #[test]
    fn evaluator_errors_become_skips() {
        let spec = find_identity("MEAN").unwrap();
        let r = check_identity(spec, &point(&[("s", ParamValue::Real(2.0))]), &CheckOptions::default());
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.diagnostic.is_some());
    }

    #[test]
    fn checks_are_deterministic() {
        let spec = find_identity("EXP-TRANSFORM").unwrap();
        let p = point(&[("s", ParamValue::Real(-1.5)), ("t", ParamValue::Real(0.35))]);
        let a = check_identity(spec, &p, &CheckOptions::default());
        let b = check_identity(spec, &p, &CheckOptions::default());
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn suite_rejects_bad_configuration() {
        let o: GridOverride = "nope=1,2".parse().unwrap();
        assert!(run_suite("PROD-SAME", &[o], &CheckOptions::default()).is_err());
        assert!(run_suite("NO-SUCH-*", &[], &CheckOptions::default()).is_err());
    }

    #[test]
    fn summary_ignores_disputed_failures() {
        let run = run_suite("EXP-SUM", &[], &CheckOptions::default()).unwrap();
        assert!(run.summary.disputed > 0);
        assert!(run.summary.ok());
    }
}
