use serde::{Deserialize, Serialize};

use super::dd::Dd;
use super::gamma::{nonpositive_integer, snap};
use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-14;
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Largest |z| accepted by [`gauss_2f1`] for a non-terminating series.
pub const GAUSS_Z_LIMIT: f64 = 0.9;

/// Value of a series together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    pub converged: bool,
    pub last_term_magnitude: f64,
}

impl SeriesResult {
    pub fn exact(value: f64) -> Self {
        SeriesResult {
            value,
            terms_used: 0,
            converged: true,
            last_term_magnitude: 0.0,
        }
    }

    /// Same metadata, value multiplied by `factor`.
    pub fn scaled(self, factor: f64) -> Self {
        SeriesResult {
            value: self.value * factor,
            last_term_magnitude: self.last_term_magnitude * factor.abs(),
            ..self
        }
    }
}

/// Parameters of `rFs(a_1..a_r; b_1..b_s; z)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricSpec {
    pub numerator_params: Vec<f64>,
    pub denominator_params: Vec<f64>,
    pub argument: f64,
}

impl HypergeometricSpec {
    pub fn new(numerator: &[f64], denominator: &[f64], z: f64) -> Self {
        HypergeometricSpec {
            numerator_params: numerator.to_vec(),
            denominator_params: denominator.to_vec(),
            argument: z,
        }
    }

    /// Index of the last non-zero term when some numerator parameter is in -N0.
    pub fn termination_index(&self) -> Option<usize> {
        self.numerator_params
            .iter()
            .filter_map(|&a| nonpositive_integer(a))
            .min()
    }

    fn snapped(&self) -> (Vec<f64>, Vec<f64>) {
        (
            self.numerator_params.iter().map(|&a| snap(a)).collect(),
            self.denominator_params.iter().map(|&b| snap(b)).collect(),
        )
    }

    pub fn validate(&self) -> Result<()> {
        if !self.argument.is_finite() {
            return Err(Error::domain("non-finite hypergeometric argument"));
        }
        let term = self.termination_index();
        for &b in &self.denominator_params {
            if let Some(p) = nonpositive_integer(b) {
                match term {
                    Some(m) if m <= p => {}
                    _ => {
                        return Err(Error::domain(format!(
                            "denominator parameter {b} is a non-positive integer not rescued by termination"
                        )))
                    }
                }
            }
        }
        if term.is_none() {
            let r = self.numerator_params.len();
            let s = self.denominator_params.len();
            if r > s + 1 {
                return Err(Error::domain(format!(
                    "non-terminating {r}F{s} series diverges"
                )));
            }
            if r == s + 1 && self.argument.abs() >= 1.0 {
                return Err(Error::domain(format!(
                    "non-terminating {r}F{s} series requires |z| < 1, got {}",
                    self.argument
                )));
            }
        }
        Ok(())
    }
}

fn sum_series(spec: &HypergeometricSpec, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    spec.validate()?;
    let (a, b) = spec.snapped();
    let z = Dd::from_f64(spec.argument);
    // Terms are formed and accumulated in double-double so that alternating
    // sums with large intermediate terms keep full double accuracy.
    let step = |k: usize, term: Dd| -> Dd {
        let kf = k as f64;
        let mut num = z;
        for &ai in &a {
            num = num.mul(Dd::from_f64(ai).add_f64(kf));
        }
        let mut den = Dd::from_f64(kf + 1.0);
        for &bi in &b {
            den = den.mul(Dd::from_f64(bi).add_f64(kf));
        }
        term.mul(num).div(den)
    };

    if let Some(m) = spec.termination_index() {
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 0..m {
            term = step(k, term);
            sum = sum.add(term);
        }
        return Ok(SeriesResult {
            value: sum.to_f64(),
            terms_used: m + 1,
            converged: true,
            last_term_magnitude: term.abs(),
        });
    }

    if spec.argument == 0.0 {
        return Ok(SeriesResult {
            value: 1.0,
            terms_used: 1,
            converged: true,
            last_term_magnitude: 0.0,
        });
    }

    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut max_term = 1.0f64;
    let mut quiet = 0;
    for k in 0..max_terms.saturating_sub(1) {
        let next = step(k, term);
        sum = sum.add(next);
        let mag = next.abs();
        max_term = max_term.max(mag);
        let ratio = if term.hi != 0.0 {
            mag / term.abs()
        } else {
            0.0
        };
        term = next;
        let tail = if ratio < 1.0 {
            mag / (1.0 - ratio)
        } else {
            f64::INFINITY
        };
        let small = tail <= tol * sum.abs() || mag <= 1e-30 * max_term;
        quiet = if small { quiet + 1 } else { 0 };
        if quiet >= 2 {
            return Ok(SeriesResult {
                value: sum.to_f64(),
                terms_used: k + 2,
                converged: true,
                last_term_magnitude: mag,
            });
        }
    }
    Err(Error::convergence(format!(
        "series not converged after {max_terms} terms (last term {:e}, partial sum {:e})",
        term.abs(),
        sum.to_f64()
    )))
}

/// Generalized hypergeometric series summed term by term.
pub fn hyp_pfq(spec: &HypergeometricSpec, tol: f64, max_terms: usize) -> Result<SeriesResult> {
    sum_series(spec, tol, max_terms)
}

/// Gauss series 2F1(a, b; c; z) with the default term limit.
///
/// Non-terminating series are refused for |z| > 0.9; use
/// [`gauss_2f1_with_max_terms`] to go closer to the unit circle.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, tol: f64) -> Result<SeriesResult> {
    let spec = HypergeometricSpec::new(&[a, b], &[c], z);
    if spec.termination_index().is_none() && z.abs() > GAUSS_Z_LIMIT {
        return Err(Error::domain(format!(
            "|z| = {} exceeds {GAUSS_Z_LIMIT} for a non-terminating 2F1; pass an explicit max_terms",
            z.abs()
        )));
    }
    hyp_pfq(&spec, tol, DEFAULT_MAX_TERMS)
}

pub fn gauss_2f1_with_max_terms(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    hyp_pfq(&HypergeometricSpec::new(&[a, b], &[c], z), tol, max_terms)
}
