use std::f64::consts::{LN_2, PI};

use super::{half_order, sin_theta, EvalPath, FerrersEval, FerrersPoint};
use crate::error::{Error, Result};
use crate::poly::gegenbauer_c;
use crate::special::{
    gauss_2f1_with_max_terms, hyp_pfq, is_integer, log_gamma, nonpositive_integer, pochhammer,
    rgamma, snap, HypergeometricSpec, SeriesResult, DEFAULT_MAX_TERMS, DEFAULT_TOL, GAUSS_Z_LIMIT,
};

/// Term budget for Gauss series whose argument lies beyond [`GAUSS_Z_LIMIT`].
pub(crate) const WIDE_MAX_TERMS: usize = 2_000_000;

pub(crate) fn max_terms_for(z: f64) -> usize {
    if z.abs() > GAUSS_Z_LIMIT {
        WIDE_MAX_TERMS
    } else {
        DEFAULT_MAX_TERMS
    }
}

/// P_λ^{-λ}(x) = (1-x²)^{λ/2} / (2^λ Γ(λ+1)).
pub fn ferrers_p_base(lambda: f64, x: f64) -> f64 {
    if lambda.abs() <= 60.0 {
        return ((1.0 - x) * (1.0 + x)).powf(lambda / 2.0) * rgamma(lambda + 1.0)
            / 2f64.powf(lambda);
    }
    match log_gamma(lambda + 1.0) {
        Ok(g) => {
            let l = 0.5 * lambda * ((1.0 - x) * (1.0 + x)).ln() - lambda * LN_2 - g.log_abs;
            f64::from(g.sign) * l.exp()
        }
        Err(_) => 0.0,
    }
}

/// P_{n+λ}^{-λ}(x) / P_λ^{-λ}(x) = n!/(2λ+1)_n · C_n^{λ+½}(x), finite for large λ.
pub fn ferrers_p_reduced(n: usize, lambda: f64, x: f64) -> f64 {
    // n!/(2λ+1)_n as a running product; both factors overflow separately past n = 170
    let a = 2.0 * lambda + 1.0;
    let ratio: f64 = (1..=n).map(|k| k as f64 / (a + (k - 1) as f64)).product();
    ratio * gegenbauer_c(n, lambda + 0.5, x)
}

/// Non-negative integer n with ν = λ + n or ν = -λ - 1 - n.
fn degree_excess(nu: f64, lambda: f64) -> Option<usize> {
    [nu - lambda, -nu - 1.0 - lambda].into_iter().find_map(|d| {
        let d = snap(d);
        (d >= 0.0 && d == d.round()).then_some(d as usize)
    })
}

/// P_ν^μ(x) for -1 < x < 1 with the literal order μ.
pub fn ferrers_p(nu: f64, mu: f64, x: f64, tol: f64) -> Result<FerrersEval> {
    let point = FerrersPoint::new(nu, mu, x)?;
    let (nu, mu) = (snap(nu), snap(mu));

    if mu > 0.0 && mu == mu.round() {
        let m = mu as usize;
        let c = if m % 2 == 0 { 1.0 } else { -1.0 } * pochhammer(nu - mu + 1.0, 2 * m);
        if c == 0.0 {
            return Ok(FerrersEval {
                point,
                path: EvalPath::PolynomialGrade,
                series: SeriesResult::exact(0.0),
            });
        }
        let inner = ferrers_p(nu, -mu, x, tol)?;
        return Ok(FerrersEval {
            point,
            path: inner.path,
            series: inner.series.scaled(c),
        });
    }

    let lambda = -mu;
    if nonpositive_integer(2.0 * lambda + 1.0).is_none() {
        if let Some(n) = degree_excess(nu, lambda) {
            let sign = if x < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
            let v = sign * ferrers_p_reduced(n, lambda, x.abs()) * ferrers_p_base(lambda, x);
            let path = if x < 0.0 {
                EvalPath::ParityReflection
            } else {
                EvalPath::PolynomialGrade
            };
            let series = SeriesResult {
                terms_used: n + 1,
                ..SeriesResult::exact(v)
            };
            return Ok(FerrersEval {
                point,
                path,
                series,
            });
        }
    }

    if let Some(s) = half_order(mu) {
        let theta = x.acos();
        let a = nu + 0.5;
        let pre = (2.0 / (PI * sin_theta(x))).sqrt();
        let v = if s > 0 {
            pre * (a * theta).cos()
        } else if a == 0.0 {
            pre * theta
        } else {
            pre * (a * theta).sin() / a
        };
        return Ok(FerrersEval {
            point,
            path: EvalPath::TrigClosedForm,
            series: SeriesResult::exact(v),
        });
    }

    let z = (1.0 - x) / 2.0;
    let f = gauss_2f1_with_max_terms(-nu, nu + 1.0, 1.0 - mu, z, tol, max_terms_for(z))?;
    let pre = rgamma(1.0 - mu) * (0.5 * mu * (x.ln_1p() - (-x).ln_1p())).exp();
    Ok(FerrersEval {
        point,
        path: EvalPath::GaussSeries,
        series: f.scaled(pre),
    })
}

pub fn ferrers_p_value(nu: f64, mu: f64, x: f64) -> Result<f64> {
    ferrers_p(nu, mu, x, DEFAULT_TOL).map(|e| e.value())
}

/// P_ν^{order}(x) from the series in 1 - 1/x².
///
/// Requires x > 0 unless ν + order is an integer; non-terminating series need
/// x > 1/√2.
pub fn ferrers_p_reciprocal_series(nu: f64, order: f64, x: f64) -> Result<SeriesResult> {
    FerrersPoint::new(nu, order, x)?;
    let m = -order;
    let d = snap(nu - m);
    if x == 0.0 || (x < 0.0 && !is_integer(d)) {
        return Err(Error::domain(format!(
            "x^(nu-mu) needs x > 0 here, got x = {x}"
        )));
    }
    let pow = if is_integer(d) {
        x.powi(d as i32)
    } else {
        x.powf(d)
    };
    let pre = pow * ferrers_p_base(m, x);
    let z = 1.0 - 1.0 / (x * x);
    let spec = HypergeometricSpec::new(&[(m - nu) / 2.0, (m - nu + 1.0) / 2.0], &[m + 1.0], z);
    Ok(hyp_pfq(&spec, DEFAULT_TOL, max_terms_for(z))?.scaled(pre))
}
