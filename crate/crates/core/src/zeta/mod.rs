//! Numerical evaluation of the zeta family over the whole complex plane.
//!
//! Everything routes through one Euler–Maclaurin kernel for linear
//! combinations of Hurwitz zeta values; differences whose poles cancel
//! (`zeta_E`, `beta`, Lerch sums at rational points) are therefore computed
//! without subtracting large numbers near `s = 1`.

mod dirichlet;
mod euler;
mod gamma;
mod hurwitz;
mod lerch;
mod transcendental;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use dirichlet::{dirichlet_beta, dirichlet_lambda};
pub use euler::{g_e, zeta_e, zeta_e_fourier};
pub use gamma::{beta_function, cos_pi, gamma, gamma_real, sin_pi};
pub use hurwitz::{hurwitz_zeta, riemann_zeta};
pub use lerch::{lerch_e, lerch_e_neg_int, lerch_e_rational, phi_lerch};
pub use transcendental::{transcendental_f, TRANSCENDENTAL_RADIUS};

pub(crate) use lerch::{lerch_e_direct, lerch_e_with_error};

/// Tuning knobs for the series evaluators.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalOptions {
    /// Target absolute error, relative to `max(1, |leading term|)`.
    pub target_abs_tol: f64,
    /// Upper bound on the Euler–Maclaurin head length.
    pub max_series_terms: usize,
    /// Fixed tail start; `None` selects it adaptively.
    pub em_tail_start: Option<usize>,
    /// Bernoulli correction terms (at most 30).
    pub em_correction_terms: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            target_abs_tol: 1e-13,
            max_series_terms: 1_000_000,
            em_tail_start: None,
            em_correction_terms: 15,
        }
    }
}

/// How a [`ZetaValue`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectSeries,
    /// Accelerated alternating series (Cohen–Villegas–Zagier).
    AcceleratedSeries,
    EulerMaclaurin,
    HurwitzDifference,
    /// Hurwitz difference averaged over `s = 1 +- h`.
    HurwitzDifferencePerturbed,
    FourierExpansion,
    ClosedForm,
    FunctionalEquation,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectSeries => "direct-series",
            Method::AcceleratedSeries => "accelerated-series",
            Method::EulerMaclaurin => "euler-maclaurin",
            Method::HurwitzDifference => "hurwitz-difference",
            Method::HurwitzDifferencePerturbed => "hurwitz-difference-perturbed",
            Method::FourierExpansion => "fourier-expansion",
            Method::ClosedForm => "closed-form",
            Method::FunctionalEquation => "functional-equation",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed value with its error estimate and provenance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZetaValue {
    pub value: Complex64,
    pub est_error: f64,
    pub method: Method,
}
