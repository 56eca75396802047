//! Adaptive integration over `[0, 1]` for complex-valued integrands.
//!
//! Smooth panels use an adaptive Gauss–Kronrod (7/15) rule driven by a
//! global error queue. Panels that touch a flagged singular endpoint or a
//! split point use tanh–sinh, whose nodes cluster toward the ends without
//! ever sampling them, so removable `0/0` points and integrable power
//! singularities are handled without patching the integrand.

mod gauss_kronrod;
mod tanh_sinh;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use gauss_kronrod::{gk15, Panel, GK_EVALS};
use tanh_sinh::tanh_sinh;

/// Maximum number of Gauss–Kronrod panels (2^12).
pub const MAX_PANELS: usize = 4096;
const MAX_SPLIT_DEPTH: usize = 12;

/// Integral estimate with its error bound and effort counters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub est_error: f64,
    pub evaluations: usize,
    pub subdivisions: usize,
    pub converged: bool,
}

/// An integrand on `[0, 1]` with its known trouble spots.
///
/// Split points are interior points where the integrand may not be
/// evaluated (typically removable `0/0` points); each is handled as a
/// singular end of the two adjacent panels. An endpoint flagged singular
/// carries the exponent hint `theta` of an integrand behaving like
/// `u^(theta - 1)` there, with `theta > 0`.
pub struct IntegrandSpec<'a> {
    evaluator: &'a (dyn Fn(f64) -> Complex64 + 'a),
    split_points: Vec<f64>,
    left: Option<f64>,
    right: Option<f64>,
}

impl<'a> IntegrandSpec<'a> {
    pub fn new(evaluator: &'a (dyn Fn(f64) -> Complex64 + 'a)) -> Self {
        Self {
            evaluator,
            split_points: Vec::new(),
            left: None,
            right: None,
        }
    }

    pub fn split_at(mut self, x: f64) -> Self {
        self.split_points.push(x);
        self
    }

    pub fn singular_left(mut self, theta: f64) -> Self {
        self.left = Some(theta);
        self
    }

    pub fn singular_right(mut self, theta: f64) -> Self {
        self.right = Some(theta);
        self
    }

    pub fn split_points(&self) -> &[f64] {
        &self.split_points
    }

    fn validate(&self) -> Result<Vec<f64>> {
        let mut pts = self.split_points.clone();
        pts.sort_by(f64::total_cmp);
        for w in pts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Config(format!("duplicate split point {}", w[0])));
            }
        }
        if let Some(&p) = pts.iter().find(|&&p| !(p > 0.0 && p < 1.0)) {
            return Err(Error::Config(format!("split point {p} is not strictly inside (0, 1)")));
        }
        for theta in [self.left, self.right].into_iter().flatten() {
            if !(theta > 0.0) {
                return Err(Error::Config(format!(
                    "endpoint exponent hint must be positive (integrable), got {theta}"
                )));
            }
        }
        Ok(pts)
    }
}

/// Adaptive integration over `[0, 1]`.
///
/// The global target is `max(abs_tol, rel_tol * |I|)`. Non-convergence
/// within 2^12 panels is reported through `converged = false`, together
/// with the best estimate available.
pub fn integrate_unit(f: &IntegrandSpec<'_>, abs_tol: f64, rel_tol: f64) -> Result<QuadratureResult> {
    integrate_partitioned(f, &[], abs_tol, rel_tol)
}

/// Integration of oscillatory integrands: `[0, 1]` is first cut into at
/// least `4 * frequency_hint` equal panels so every panel sees at most a
/// quarter period, and then refined adaptively.
pub fn integrate_oscillatory(
    f: &IntegrandSpec<'_>,
    frequency_hint: u32,
    abs_tol: f64,
) -> Result<QuadratureResult> {
    if frequency_hint < 1 {
        return Err(Error::Config("frequency_hint must be at least 1".into()));
    }
    let n = 4 * frequency_hint as usize;
    let cuts: Vec<f64> = (1..n).map(|k| k as f64 / n as f64).collect();
    integrate_partitioned(f, &cuts, abs_tol, 0.0)
}

#[derive(Clone, Copy)]
struct Boundary {
    x: f64,
    singular: bool,
}

struct Queued(Panel);

impl PartialEq for Queued {
    fn eq(&self, other: &Self) -> bool {
        self.0.error == other.0.error
    }
}
impl Eq for Queued {}
impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Queued {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.error.total_cmp(&other.0.error)
    }
}

struct Tally {
    value: Complex64,
    error: f64,
    evaluations: usize,
    subdivisions: usize,
    converged: bool,
}

fn integrate_partitioned(
    spec: &IntegrandSpec<'_>,
    regular_cuts: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    if !(abs_tol > 0.0 || rel_tol > 0.0) {
        return Err(Error::Config("need abs_tol > 0 or rel_tol > 0".into()));
    }
    let splits = spec.validate()?;
    let mut bounds = vec![
        Boundary {
            x: 0.0,
            singular: spec.left.is_some(),
        },
        Boundary {
            x: 1.0,
            singular: spec.right.is_some(),
        },
    ];
    bounds.extend(splits.iter().map(|&x| Boundary { x, singular: true }));
    for &x in regular_cuts {
        if !splits.contains(&x) {
            bounds.push(Boundary { x, singular: false });
        }
    }
    bounds.sort_by(|p, q| p.x.total_cmp(&q.x));

    let f = spec.evaluator;
    let mut tally = Tally {
        value: Complex64::new(0.0, 0.0),
        error: 0.0,
        evaluations: 0,
        subdivisions: 0,
        converged: true,
    };
    let mut regular: Vec<(f64, f64)> = Vec::new();
    for w in bounds.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if lo.singular || hi.singular {
            singular_panel(f, lo, hi, abs_tol, rel_tol, 0, &mut tally, &mut regular);
        } else {
            regular.push((lo.x, hi.x));
        }
    }
    adaptive_gk(f, &regular, abs_tol, rel_tol, &mut tally);
    let target = abs_tol.max(rel_tol * tally.value.norm());
    let finite = tally.value.re.is_finite() && tally.value.im.is_finite();
    Ok(QuadratureResult {
        value: tally.value,
        est_error: tally.error,
        evaluations: tally.evaluations,
        subdivisions: tally.subdivisions,
        converged: tally.converged && finite && tally.error <= target,
    })
}

#[allow(clippy::too_many_arguments)]
fn singular_panel(
    f: &dyn Fn(f64) -> Complex64,
    lo: Boundary,
    hi: Boundary,
    abs_tol: f64,
    rel_tol: f64,
    depth: usize,
    tally: &mut Tally,
    regular: &mut Vec<(f64, f64)>,
) {
    let len = hi.x - lo.x;
    // each singular panel gets a share of the absolute budget proportional to its length
    let tol = (abs_tol * len).max(0.0);
    let ts = tanh_sinh(f, lo.x, hi.x, lo.singular, hi.singular, tol.max(f64::MIN_POSITIVE));
    tally.evaluations += ts.evaluations;
    let rel_ok = rel_tol > 0.0 && ts.error <= rel_tol * ts.value.norm();
    if ts.converged || rel_ok || depth >= MAX_SPLIT_DEPTH {
        if !(ts.converged || rel_ok) {
            tally.converged = false;
        }
        tally.value += ts.value;
        tally.error += ts.error;
        return;
    }
    // split: halves adjacent to a singular end keep the tanh–sinh rule
    tally.subdivisions += 1;
    let mid = Boundary {
        x: 0.5 * (lo.x + hi.x),
        singular: false,
    };
    for (a, b) in [(lo, mid), (mid, hi)] {
        if a.singular || b.singular {
            singular_panel(f, a, b, abs_tol, rel_tol, depth + 1, tally, regular);
        } else {
            regular.push((a.x, b.x));
        }
    }
}

fn adaptive_gk(
    f: &dyn Fn(f64) -> Complex64,
    panels: &[(f64, f64)],
    abs_tol: f64,
    rel_tol: f64,
    tally: &mut Tally,
) {
    if panels.is_empty() {
        return;
    }
    let mut heap: BinaryHeap<Queued> = panels.iter().map(|&(a, b)| Queued(gk15(f, a, b))).collect();
    tally.evaluations += GK_EVALS * panels.len();
    let mut count = panels.len();
    loop {
        let value: Complex64 = heap.iter().map(|q| q.0.value).sum::<Complex64>() + tally.value;
        let error: f64 = heap.iter().map(|q| q.0.error).sum::<f64>() + tally.error;
        let target = abs_tol.max(rel_tol * value.norm());
        if error <= target || !error.is_finite() || count >= MAX_PANELS {
            break;
        }
        let Some(Queued(worst)) = heap.pop() else { break };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval exhausted at machine resolution
            heap.push(Queued(worst));
            break;
        }
        heap.push(Queued(gk15(f, worst.a, mid)));
        heap.push(Queued(gk15(f, mid, worst.b)));
        tally.evaluations += 2 * GK_EVALS;
        tally.subdivisions += 1;
        count += 1;
    }
    for q in heap {
        tally.value += q.0.value;
        tally.error += q.0.error;
    }
}
