//! Ferrers functions on (-1, 1), Legendre Q on (1, ∞), and Rodrigues-type
//! constructions.
//!
//! Orders are literal: `ferrers_p(nu, mu, x)` evaluates P_ν^μ(x).
mod first_kind;
mod rodrigues;
mod second_kind;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::SeriesResult;

pub use first_kind::{
    ferrers_p, ferrers_p_base, ferrers_p_reciprocal_series, ferrers_p_reduced, ferrers_p_value,
};
pub use rodrigues::{
    rodrigues_ferrers_p, rodrigues_ferrers_q, scaled_derivative, WeightedPolyForm,
};
pub use second_kind::{ferrers_q, ferrers_q_mhalf_scaled, ferrers_q_value, legendre_q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalPath {
    PolynomialGrade,
    GaussSeries,
    TrigClosedForm,
    ParityReflection,
}

/// Degree, literal order and argument of a Ferrers function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FerrersPoint {
    pub nu: f64,
    pub mu: f64,
    pub x: f64,
}

impl FerrersPoint {
    pub fn new(nu: f64, mu: f64, x: f64) -> Result<Self> {
        if !(x.abs() < 1.0) || !nu.is_finite() || !mu.is_finite() {
            return Err(Error::domain(format!(
                "Ferrers functions need finite parameters and -1 < x < 1, got nu = {nu}, mu = {mu}, x = {x}"
            )));
        }
        Ok(FerrersPoint { nu, mu, x })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FerrersEval {
    pub point: FerrersPoint,
    pub path: EvalPath,
    pub series: SeriesResult,
}

impl FerrersEval {
    pub fn value(&self) -> f64 {
        self.series.value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Olver,
    Hobson,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LegendreQArgs {
    pub nu: f64,
    pub mu: f64,
    pub z: f64,
    pub normalization: Normalization,
}

impl LegendreQArgs {
    pub fn olver(nu: f64, mu: f64, z: f64) -> Self {
        LegendreQArgs {
            nu,
            mu,
            z,
            normalization: Normalization::Olver,
        }
    }

    pub fn hobson(nu: f64, mu: f64, z: f64) -> Self {
        LegendreQArgs {
            nu,
            mu,
            z,
            normalization: Normalization::Hobson,
        }
    }
}

/// `Some(s)` with μ = s/2 when μ is within snapping distance of ±½.
pub(crate) fn half_order(mu: f64) -> Option<i8> {
    let t = crate::special::snap(2.0 * mu);
    if t == 1.0 {
        Some(1)
    } else if t == -1.0 {
        Some(-1)
    } else {
        None
    }
}

/// sin θ for x = cos θ, without cancellation near the endpoints.
pub(crate) fn sin_theta(x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).sqrt()
}
