use serde::{Deserialize, Serialize};

use super::orthogonality::{ferrers_p_norm, OrthogonalSystem};
use super::quadrature::{integrate_endpoint_weighted, tanh_sinh_jacobi, HARNESS_TS_TOL};
use super::report::{params, CheckReport, Params};
use crate::error::{Error, Result};
use crate::ferrers::{ferrers_p_value, ferrers_q_value, legendre_q, LegendreQArgs};
use crate::poly::PolynomialCoeffs;
use crate::special::{
    factorial, gamma, gamma_ratio, is_integer, nonpositive_integer, pochhammer, rgamma, DEFAULT_TOL,
};

pub const INTEGRAL_TOL: f64 = 1e-8;
pub const CLOSURE_TOL: f64 = 1e-10;
pub const CLOSURE_SERIES_TOL: f64 = 1e-3;
pub const CLOSURE_SERIES_TERMS: usize = 4000;

const INTEGER_GAMMA_NOTE: &str = "γ ∈ ℤ requires special care";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntegralVariant {
    /// params `lambda`, `gamma`, `n`.
    AskeyRazban,
    /// params `nu`, `mu`, `n`, `z`.
    PowerExpansion,
    /// params `alpha`, `gamma`, `l`, `k`, `t`.
    GenfunIntegral,
}

impl IntegralVariant {
    pub fn name(self) -> &'static str {
        match self {
            IntegralVariant::AskeyRazban => "askey_razban",
            IntegralVariant::PowerExpansion => "power_expansion",
            IntegralVariant::GenfunIntegral => "genfun_integral",
        }
    }
}

fn get(p: &Params, key: &str) -> Result<f64> {
    p.get(key)
        .copied()
        .ok_or_else(|| Error::domain(format!("missing parameter '{key}'")))
}

fn get_index(p: &Params, key: &str) -> Result<usize> {
    let v = get(p, key)?;
    if v < 0.0 || v != v.round() {
        return Err(Error::domain(format!(
            "parameter '{key}' must be a non-negative integer, got {v}"
        )));
    }
    Ok(v as usize)
}

fn one_minus_x2(x: f64) -> f64 {
    (1.0 - x) * (1.0 + x)
}

/// Quadrature of a Ferrers-function integral against its closed form.
pub fn definite_integral_check(variant: IntegralVariant, p: &Params) -> Result<CheckReport> {
    let (lhs, rhs) = match variant {
        IntegralVariant::AskeyRazban => {
            let (l, g, n) = (get(p, "lambda")?, get(p, "gamma")?, get_index(p, "n")?);
            // the full integrand behaves like (1-x)^{λ-γ} (1+x)^λ
            if !(l - g > -1.0) || !(l > -1.0) || nonpositive_integer(2.0 * l + 1.0).is_some() {
                return Err(Error::domain(format!(
                    "non-integrable exponents: lambda = {l}, gamma = {g}"
                )));
            }
            let nu = l + n as f64;
            let q = tanh_sinh_jacobi(
                |x| Ok(ferrers_p_value(nu, -l, x)? / one_minus_x2(x).powf(l / 2.0)),
                l - g,
                l,
                HARNESS_TS_TOL,
            )?;
            let rhs = 2f64.powf(l - g + 1.0)
                * gamma_ratio(l - g + 1.0, 2.0 * l - g + n as f64 + 2.0)?
                * pochhammer(g, n);
            (q.value, rhs)
        }
        IntegralVariant::PowerExpansion => {
            let (nu, mu, n, z) = (
                get(p, "nu")?,
                get(p, "mu")?,
                get_index(p, "n")?,
                get(p, "z")?,
            );
            if !(z > 1.0) || !(mu > -1.0) || nonpositive_integer(2.0 * mu + 1.0).is_some() {
                return Err(Error::domain(format!(
                    "power expansion needs z > 1, mu > -1; got z = {z}, mu = {mu}"
                )));
            }
            let deg = n as f64 + mu;
            let q = tanh_sinh_jacobi(
                |x| {
                    Ok(ferrers_p_value(deg, -mu, x)? * (z - x).powf(-nu)
                        / one_minus_x2(x).powf(mu / 2.0))
                },
                mu,
                mu,
                HARNESS_TS_TOL,
            )?;
            let order = nu - mu - 1.0;
            let qz = legendre_q(LegendreQArgs::olver(deg, order, z), DEFAULT_TOL)?.value;
            let rhs = 2.0 * pochhammer(nu, n) * qz / ((z - 1.0) * (z + 1.0)).powf(order / 2.0);
            (q.value, rhs)
        }
        IntegralVariant::GenfunIntegral => {
            let (a, g, l, k, t) = (
                get(p, "alpha")?,
                get(p, "gamma")?,
                get_index(p, "l")?,
                get_index(p, "k")?,
                get(p, "t")?,
            );
            if is_integer(g) {
                return Err(Error::domain(INTEGER_GAMMA_NOTE));
            }
            if k < l {
                return Err(Error::domain(format!(
                    "the closed form holds for k >= l, got k = {k}, l = {l}"
                )));
            }
            if !(t > 0.0 && t <= 0.5) {
                return Err(Error::domain(format!(
                    "genfun integral needs 0 < t <= 1/2, got {t}"
                )));
            }
            let ord = l as f64 + a;
            if !(ord > -1.0) || nonpositive_integer(2.0 * ord + 1.0).is_some() {
                return Err(Error::domain(format!(
                    "order l + alpha = {ord} out of range"
                )));
            }
            let first_deg = ord - g;
            let q = tanh_sinh_jacobi(
                |x| {
                    let r = 1.0 + t * t - 2.0 * x * t;
                    let y = ((1.0 - x * t) / r.sqrt()).min(1.0 - f64::EPSILON / 2.0);
                    let f1 = r.powf(first_deg / 2.0) * ferrers_p_value(first_deg, -ord, y)?;
                    let f2 = ferrers_p_value(k as f64 + a, -ord, x)?;
                    Ok(f1 * f2 / one_minus_x2(x).powf(ord))
                },
                ord,
                ord,
                HARNESS_TS_TOL,
            )?;
            let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
            let rhs = sign
                * pochhammer(g - l as f64, k)
                * t.powf(a + k as f64)
                * rgamma(2.0 * a + (l + k) as f64 + 1.0)
                / (pochhammer(1.0 - g, l) * (a + k as f64 + 0.5));
            (q.value, rhs)
        }
    };
    Ok(CheckReport::new(
        format!("integrals/{}", variant.name()),
        p.clone(),
        lhs,
        rhs,
        INTEGRAL_TOL,
        0.0,
    )
    .with_note("quadrature=tanh_sinh"))
}

/// Finite-rank expansion of F = f·(1-x²)^{μ/2} in ψ_n = P_{n+μ}^{-μ}.
///
/// Compares Σ a_n ψ_n(x_eval) / (1-x_eval²)^{μ/2} with f(x_eval).
pub fn closure_projection_check(
    mu: f64,
    f: &PolynomialCoeffs,
    x_eval: f64,
    n_max: usize,
) -> Result<CheckReport> {
    if nonpositive_integer(2.0 * mu + 1.0).is_some() && mu != -0.5 {
        return Err(Error::domain(format!(
            "2 mu + 1 is a non-positive integer: mu = {mu}"
        )));
    }
    if !(x_eval > -1.0 && x_eval < 1.0) {
        return Err(Error::domain(format!(
            "x_eval must lie in (-1, 1), got {x_eval}"
        )));
    }
    if n_max < f.degree {
        return Err(Error::domain(format!(
            "n_max = {n_max} below the degree {}",
            f.degree
        )));
    }
    let sys = OrthogonalSystem::ferrers_p(mu)?;
    let mut recon = 0.0;
    for n in 0..=n_max {
        // h_0 is 0/0 at μ = -½; P_{-½}^{½}(cos θ)² = 2/(π sin θ) integrates to 2
        let h = if mu == -0.5 && n == 0 {
            2.0
        } else {
            ferrers_p_norm(mu, n)
        };
        let (m, _) = integrate_endpoint_weighted(
            |x| Ok(f.eval(x) * one_minus_x2(x).powf(mu / 2.0) * sys.eval(n, x)?),
            mu,
            mu,
            f.degree + n + 20 + mu.max(0.0).ceil() as usize,
        )?;
        recon += m / h * sys.eval(n, x_eval)?;
    }
    let lhs = recon / one_minus_x2(x_eval).powf(mu / 2.0);
    let rhs = f.eval(x_eval);
    let echo = params(&[
        ("mu", mu),
        ("degree", f.degree as f64),
        ("x_eval", x_eval),
        ("n_max", n_max as f64),
    ]);
    let r = CheckReport::new("closure/projection", echo, lhs, rhs, CLOSURE_TOL, 1.0);
    finite_rank_guard(r, f.degree, n_max)
}

/// The n_max = degree + 2 reconstruction is exact; a miss there is an orthogonality defect.
fn finite_rank_guard(r: CheckReport, degree: usize, n_max: usize) -> Result<CheckReport> {
    if n_max >= degree + 2 && !r.passed {
        return Err(Error::convergence(format!(
            "finite-rank reconstruction missed by {:e} at n_max = {n_max}",
            r.abs_err
        )));
    }
    Ok(r)
}

/// The same expansion in φ_k = Q_{k+n-½}^{n-½}, n ≥ 1, for F = f·(1-x²)^{(n-½)/2}.
pub fn closure_projection_second_kind(
    n: usize,
    f: &PolynomialCoeffs,
    x_eval: f64,
    n_max: usize,
) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::domain("second-kind closure needs n >= 1"));
    }
    if !(x_eval > -1.0 && x_eval < 1.0) || n_max < f.degree {
        return Err(Error::domain("need |x_eval| < 1 and n_max >= degree"));
    }
    let e = n as f64 - 0.5;
    let phi = |k: usize, x: f64| ferrers_q_value(k as f64 + e, e, x);
    let mut recon = 0.0;
    for k in 0..=n_max {
        let h = std::f64::consts::PI.powi(2) * factorial(2 * n + k - 1)
            / (4.0 * (n + k) as f64 * factorial(k));
        let (m, _) = integrate_endpoint_weighted(
            |x| Ok(f.eval(x) * one_minus_x2(x).powf(e / 2.0) * phi(k, x)?),
            e,
            e,
            f.degree + k + 20,
        )?;
        recon += m / h * phi(k, x_eval)?;
    }
    let lhs = recon / one_minus_x2(x_eval).powf(e / 2.0);
    let echo = params(&[
        ("n", n as f64),
        ("degree", f.degree as f64),
        ("x_eval", x_eval),
        ("n_max", n_max as f64),
    ]);
    let r = CheckReport::new(
        "closure/projection_second_kind",
        echo,
        lhs,
        f.eval(x_eval),
        CLOSURE_TOL,
        1.0,
    );
    finite_rank_guard(r, f.degree, n_max)
}

/// Applies the rank-n Christoffel–Darboux kernel, in closed form, to F = f·(1-x²)^{μ/2}.
pub fn cd_projector_check(
    mu: f64,
    n: usize,
    f: &PolynomialCoeffs,
    x_eval: f64,
) -> Result<CheckReport> {
    if !(mu > -0.5) || n == 0 || f.degree >= n {
        return Err(Error::domain(format!(
            "projector needs mu > -1/2 and deg f < n, got mu = {mu}, n = {n}"
        )));
    }
    if !(x_eval > -1.0 && x_eval < 1.0) {
        return Err(Error::domain(format!(
            "x_eval must lie in (-1, 1), got {x_eval}"
        )));
    }
    let nf = n as f64;
    let psi = |k: usize, x: f64| ferrers_p_value(k as f64 + mu, -mu, x);
    let pre = 0.5 * gamma_ratio(2.0 * mu + nf + 1.0, nf)?;
    let (a, b) = (psi(n, x_eval)?, psi(n - 1, x_eval)?);
    let kernel = |y: f64| -> Result<f64> {
        let (ay, by) = (psi(n, y)?, psi(n - 1, y)?);
        if (x_eval - y).abs() < 1e-12 {
            Ok(pre / one_minus_x2(y)
                * ((nf + 2.0 * mu) * ay * ay + nf * by * by - 2.0 * y * (nf + mu) * ay * by))
        } else {
            Ok(pre / (x_eval - y) * (a * by - b * ay))
        }
    };
    let (v, _) = integrate_endpoint_weighted(
        |y| Ok(kernel(y)? * f.eval(y) * one_minus_x2(y).powf(mu / 2.0)),
        mu,
        mu,
        f.degree + 2 * n + 20 + mu.max(0.0).ceil() as usize,
    )?;
    let lhs = v / one_minus_x2(x_eval).powf(mu / 2.0);
    let echo = params(&[
        ("mu", mu),
        ("n", nf),
        ("degree", f.degree as f64),
        ("x_eval", x_eval),
    ]);
    Ok(CheckReport::new(
        "closure/cd_projector",
        echo,
        lhs,
        f.eval(x_eval),
        CLOSURE_TOL,
        1.0,
    ))
}

/// Σ (λ+n+½)(γ)_n(2λ+1)_n/(n!(2λ-γ+2)_n) P_{n+λ}^{-λ}(x), averaged over the second half of the partial sums.
pub fn closure_series_check(
    lambda: f64,
    gamma_p: f64,
    x: f64,
    n_max: usize,
) -> Result<CheckReport> {
    let l = lambda;
    let g = gamma_p;
    if !(x > -0.8 && x < 0.8) {
        return Err(Error::domain(format!(
            "closure series needs |x| < 0.8, got {x}"
        )));
    }
    if !(l > -0.5) || nonpositive_integer(2.0 * l - g + 2.0).is_some() || n_max < 8 {
        return Err(Error::domain(format!(
            "closure series parameters out of range: lambda = {l}, gamma = {g}"
        )));
    }
    // (2λ+1)_n/n! P_{n+λ}^{-λ} = P_λ^{-λ} C_n^{λ+½}, so each term is (λ+n+½) r_n P_λ^{-λ} C_n^{λ+½}
    let base = ferrers_p_value(l, -l, x)?;
    let lam = l + 0.5;
    let (mut c0, mut c1) = (1.0, 2.0 * lam * x);
    let mut ratio = 1.0;
    let mut partial = 0.0;
    let mut sums = Vec::with_capacity(n_max);
    let mut mags = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let nf = n as f64;
        let c = if n == 0 { c0 } else { c1 };
        let term = (l + nf + 0.5) * ratio * base * c;
        partial += term;
        sums.push(partial);
        mags.push(term.abs());
        ratio *= (g + nf) / (2.0 * l - g + 2.0 + nf);
        if n >= 1 {
            let c2 = (2.0 * (nf + lam) * x * c1 - (nf + 2.0 * lam - 1.0) * c0) / (nf + 1.0);
            c0 = c1;
            c1 = c2;
        }
    }
    let envelope = |a: usize, b: usize| mags[a..b].iter().fold(0.0f64, |m, &v| m.max(v));
    let early = envelope(n_max / 4, n_max / 2);
    let late = envelope(n_max / 2, n_max);
    if !(late < early) {
        return Err(Error::convergence(format!(
            "closure series terms do not decay (envelope {early:e} -> {late:e}) by n = {n_max}"
        )));
    }
    let half = &sums[n_max / 2..];
    let lhs = half.iter().sum::<f64>() / half.len() as f64;
    let rhs = gamma(2.0 * l - g + 2.0)? * (1.0 - x).powf(l / 2.0 - g) * (1.0 + x).powf(l / 2.0)
        / (2f64.powf(l - g + 1.0) * gamma(2.0 * l + 1.0)?)
        * rgamma(l - g + 1.0);
    let echo = params(&[
        ("lambda", l),
        ("gamma", g),
        ("x", x),
        ("n_max", n_max as f64),
    ]);
    Ok(
        CheckReport::new("closure/series", echo, lhs, rhs, CLOSURE_SERIES_TOL, 0.0)
            .with_note(format!("last partial sum {:.10e}", sums[n_max - 1])),
    )
}
