use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{ParamValue, Point};
use crate::error::{Error, Result};

/// A named, finite list of parameter values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Axis {
    pub name: String,
    pub values: Vec<ParamValue>,
}

impl Axis {
    pub fn ints(name: &str, values: impl IntoIterator<Item = i64>) -> Self {
        Self {
            name: name.to_string(),
            values: values.into_iter().map(ParamValue::Int).collect(),
        }
    }

    pub fn reals(name: &str, values: impl IntoIterator<Item = f64>) -> Self {
        Self {
            name: name.to_string(),
            values: values.into_iter().map(ParamValue::Real).collect(),
        }
    }

    /// `start, start + step, ..., stop` (inclusive), snapped to the lattice
    /// so that repeated additions do not drift.
    pub fn range(name: &str, start: f64, stop: f64, step: f64) -> Self {
        Self::reals(name, lattice(start, stop, step))
    }
}

fn lattice(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor();
    if !(n >= 0.0) || !n.is_finite() {
        return Vec::new();
    }
    (0..=n as usize).map(|i| start + i as f64 * step).collect()
}

type Constraint = Box<dyn Fn(&Point) -> bool + Send + Sync>;

/// Cartesian product of axes, optionally filtered by a constraint.
pub struct GridSpec {
    pub axes: Vec<Axis>,
    constraint: Option<Constraint>,
    /// Human-readable form of the constraint, for catalog export.
    pub constraint_text: Option<&'static str>,
}

impl fmt::Debug for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GridSpec")
            .field("axes", &self.axes)
            .field("constraint", &self.constraint_text)
            .finish()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.axes.iter().enumerate() {
            if i > 0 {
                f.write_str(" x ")?;
            }
            let vals: Vec<String> = a.values.iter().map(ToString::to_string).collect();
            write!(f, "{} in {{{}}}", a.name, vals.join(", "))?;
        }
        if let Some(t) = self.constraint_text {
            write!(f, " where {t}")?;
        }
        Ok(())
    }
}

impl GridSpec {
    pub fn new(axes: Vec<Axis>) -> Self {
        Self {
            axes,
            constraint: None,
            constraint_text: None,
        }
    }

    pub fn constrained(
        mut self,
        text: &'static str,
        f: impl Fn(&Point) -> bool + Send + Sync + 'static,
    ) -> Self {
        self.constraint = Some(Box::new(f));
        self.constraint_text = Some(text);
        self
    }

    pub fn has_axis(&self, name: &str) -> bool {
        self.axes.iter().any(|a| a.name == name)
    }

    pub fn admits(&self, p: &Point) -> bool {
        self.constraint.as_ref().is_none_or(|c| c(p))
    }

    /// All admissible points, first axis varying slowest.
    pub fn points(&self) -> Vec<Point> {
        self.points_with(&[])
    }

    pub fn points_with(&self, overrides: &[GridOverride]) -> Vec<Point> {
        let axes: Vec<(&str, Vec<ParamValue>)> = self
            .axes
            .iter()
            .map(|a| {
                let values = overrides
                    .iter()
                    .rev()
                    .find(|o| o.axis == a.name)
                    .map(|o| coerce(&o.values, &a.values))
                    .unwrap_or_else(|| a.values.clone());
                (a.name.as_str(), values)
            })
            .collect();
        let mut out = vec![Point::new()];
        for (name, values) in &axes {
            out = out
                .into_iter()
                .flat_map(|p| values.iter().map(move |v| p.clone().with(name, *v)))
                .collect();
        }
        out.retain(|p| self.admits(p));
        out
    }

    /// Completes a partial point with the first value of every missing
    /// axis. Unknown names and points outside the constraint are errors.
    pub fn complete(&self, partial: &Point) -> Result<Point> {
        for name in partial.0.keys() {
            if !self.has_axis(name) {
                return Err(Error::Config(format!("unknown parameter `{name}`")));
            }
        }
        let mut p = Point::new();
        for a in &self.axes {
            let v = match partial.get(&a.name) {
                Some(v) => coerce(&[v], &a.values)[0],
                None => a.values[0],
            };
            p = p.with(&a.name, v);
        }
        if !self.admits(&p) {
            let text = self.constraint_text.unwrap_or("domain constraint");
            return Err(Error::Config(format!("point {p} violates `{text}`")));
        }
        Ok(p)
    }
}

/// Integer axes accept integral reals from the command line.
fn coerce(values: &[ParamValue], like: &[ParamValue]) -> Vec<ParamValue> {
    let int_axis = like.first().is_some_and(|v| matches!(v, ParamValue::Int(_)));
    values
        .iter()
        .map(|&v| match v {
            ParamValue::Real(x) if int_axis && x.fract() == 0.0 => ParamValue::Int(x as i64),
            ParamValue::Int(i) if !int_axis => ParamValue::Real(i as f64),
            other => other,
        })
        .collect()
}

/// `axis=start:stop:step` or `axis=v1,v2,...` from the command line.
#[derive(Clone, Debug, PartialEq)]
pub struct GridOverride {
    pub axis: String,
    pub values: Vec<ParamValue>,
}

pub(crate) fn parse_value(s: &str) -> Result<ParamValue> {
    let s = s.trim();
    if let Ok(i) = s.parse::<i64>() {
        return Ok(ParamValue::Int(i));
    }
    s.parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .map(ParamValue::Real)
        .ok_or_else(|| Error::Config(format!("not a number: `{s}`")))
}

impl FromStr for GridOverride {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (axis, spec) = s
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("grid override `{s}` must look like axis=values")))?;
        let axis = axis.trim();
        if axis.is_empty() {
            return Err(Error::Config(format!("grid override `{s}` has no axis name")));
        }
        let values = if spec.contains(':') {
            let parts: Vec<&str> = spec.split(':').collect();
            if parts.len() != 3 {
                return Err(Error::Config(format!("range `{spec}` must be start:stop:step")));
            }
            let [a, b, c] = [parse_value(parts[0])?, parse_value(parts[1])?, parse_value(parts[2])?];
            let step = c.as_f64();
            if !(step > 0.0) {
                return Err(Error::Config(format!("range step must be positive in `{spec}`")));
            }
            let all_int = [a, b, c].iter().all(|v| matches!(v, ParamValue::Int(_)));
            let vals = lattice(a.as_f64(), b.as_f64(), step);
            if all_int {
                vals.into_iter().map(|x| ParamValue::Int(x as i64)).collect()
            } else {
                vals.into_iter().map(ParamValue::Real).collect()
            }
        } else {
            spec.split(',').map(parse_value).collect::<Result<Vec<_>>>()?
        };
        if values.is_empty() {
            return Err(Error::Config(format!("grid override `{s}` selects no values")));
        }
        Ok(Self {
            axis: axis.to_string(),
            values,
        })
    }
}
