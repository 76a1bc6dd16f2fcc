use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::quadrature::{gauss_legendre_rule, integrate_endpoint_weighted, QuadratureKind};
use super::report::{params, CheckReport, Params};
use crate::error::{Error, Result};
use crate::ferrers::{ferrers_p_value, ferrers_q_mhalf_scaled, ferrers_q_value};
use crate::poly::{gegenbauer_c, gegenbauer_coeffs, PolynomialCoeffs, MAX_COEFF_DEGREE};
use crate::special::{factorial, gamma, gamma_ratio, pochhammer};

/// Diagonal tolerance of quadrature-backed identities.
pub const QUAD_TOL: f64 = 1e-9;
/// Off-diagonal absolute tolerance.
pub const OFF_DIAG_TOL: f64 = 1e-10;
pub const SOBOLEV_TOL: f64 = 1e-8;

const KN_NOTE: &str = "k, k' range over N0, including k = 0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrthFamily {
    /// P_{k+μ}^{-μ}, param `mu`.
    FerrersPMu,
    /// P_{k+n}^{n}, param `n`.
    FerrersPPos,
    /// P_{k+n}^{-n}, param `n`.
    FerrersPNeg,
    /// P_{k+n}^{n} against P_{k'+n}^{-n}, param `n`.
    FerrersMixed,
    /// Q_{k+n-½}^{n-½}, param `n`.
    FerrersQ,
    /// C_k^μ with weight (1-x²)^{μ-½}, param `mu`.
    Gegenbauer,
    /// Trigonometric forms of the n = 0 second-kind system, param `order` = ∓½.
    ChebyshevTrig,
}

impl OrthFamily {
    pub const ALL: [OrthFamily; 7] = [
        OrthFamily::FerrersPMu,
        OrthFamily::FerrersPPos,
        OrthFamily::FerrersPNeg,
        OrthFamily::FerrersMixed,
        OrthFamily::FerrersQ,
        OrthFamily::Gegenbauer,
        OrthFamily::ChebyshevTrig,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrthFamily::FerrersPMu => "ferrers_p_mu",
            OrthFamily::FerrersPPos => "ferrers_p_pos",
            OrthFamily::FerrersPNeg => "ferrers_p_neg",
            OrthFamily::FerrersMixed => "ferrers_mixed",
            OrthFamily::FerrersQ => "ferrers_q",
            OrthFamily::Gegenbauer => "gegenbauer",
            OrthFamily::ChebyshevTrig => "chebyshev_trig",
        }
    }
}

impl fmt::Display for OrthFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrthFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OrthFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown orthogonality family '{s}'")))
    }
}

type Evaluator = Box<dyn Fn(usize, f64) -> Result<f64> + Send + Sync>;

/// A family ψ_n with weight w on (a, b) and norms h_n = ∫ ψ_n² w.
pub struct OrthogonalSystem {
    pub name: String,
    evaluator: Evaluator,
    weight: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub interval: (f64, f64),
    norm: Box<dyn Fn(usize) -> f64 + Send + Sync>,
    /// e such that ψ_m ψ_n w behaves like (1-x²)^e at both endpoints.
    pub endpoint_exponent: f64,
}

impl fmt::Debug for OrthogonalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrthogonalSystem")
            .field("name", &self.name)
            .field("interval", &self.interval)
            .field("endpoint_exponent", &self.endpoint_exponent)
            .finish()
    }
}

impl OrthogonalSystem {
    /// ψ_n = P_{n+μ}^{-μ} with w = 1 and h_n = n!/(Γ(2μ+n+1)(μ+n+½)).
    pub fn ferrers_p(mu: f64) -> Result<Self> {
        if !(mu > -1.0) {
            return Err(Error::domain(format!(
                "ferrers_p system needs mu > -1, got {mu}"
            )));
        }
        Ok(OrthogonalSystem {
            name: format!("ferrers_p(mu={mu})"),
            evaluator: Box::new(move |n, x| ferrers_p_value(n as f64 + mu, -mu, x)),
            weight: Box::new(|_| 1.0),
            interval: (-1.0, 1.0),
            norm: Box::new(move |n| ferrers_p_norm(mu, n)),
            endpoint_exponent: mu,
        })
    }

    /// ψ_n = C_n^μ with w = (1-x²)^{μ-½}.
    pub fn gegenbauer(mu: f64) -> Result<Self> {
        if !(mu > -0.5) || mu == 0.0 {
            return Err(Error::domain(format!(
                "gegenbauer system needs mu > -1/2, mu != 0, got {mu}"
            )));
        }
        Ok(OrthogonalSystem {
            name: format!("gegenbauer(mu={mu})"),
            evaluator: Box::new(move |n, x| Ok(gegenbauer_c(n, mu, x))),
            weight: Box::new(move |x| ((1.0 - x) * (1.0 + x)).powf(mu - 0.5)),
            interval: (-1.0, 1.0),
            norm: Box::new(move |n| gegenbauer_norm(mu, n)),
            endpoint_exponent: mu - 0.5,
        })
    }

    pub fn eval(&self, n: usize, x: f64) -> Result<f64> {
        (self.evaluator)(n, x)
    }

    pub fn weight(&self, x: f64) -> f64 {
        (self.weight)(x)
    }

    pub fn norm(&self, n: usize) -> f64 {
        (self.norm)(n)
    }

    /// ∫ ψ_m ψ_n w over the interval.
    pub fn gram(&self, m: usize, n: usize) -> Result<(f64, QuadratureKind)> {
        let e = self.endpoint_exponent;
        integrate_endpoint_weighted(
            |x| Ok(self.eval(m, x)? * self.eval(n, x)? * self.weight(x)),
            e,
            e,
            gl_nodes(m + n, e),
        )
    }
}

fn gl_nodes(k_sum: usize, e: f64) -> usize {
    k_sum + 20 + e.max(0.0).ceil() as usize
}

pub fn ferrers_p_norm(mu: f64, k: usize) -> f64 {
    let kf = k as f64;
    gamma_ratio(kf + 1.0, 2.0 * mu + kf + 1.0).unwrap_or(f64::NAN) / (mu + kf + 0.5)
}

pub fn gegenbauer_norm(mu: f64, n: usize) -> f64 {
    let nf = n as f64;
    let g = gamma(mu).unwrap_or(f64::NAN);
    PI * gamma(2.0 * mu + nf).unwrap_or(f64::NAN)
        / (2f64.powf(2.0 * mu - 1.0) * (mu + nf) * factorial(n) * g * g)
}

fn require(p: &Params, key: &str) -> Result<f64> {
    p.get(key)
        .copied()
        .ok_or_else(|| Error::domain(format!("missing parameter '{key}'")))
}

fn require_index(p: &Params, key: &str) -> Result<usize> {
    let v = require(p, key)?;
    if v < 0.0 || v != v.round() {
        return Err(Error::domain(format!(
            "parameter '{key}' must be a non-negative integer, got {v}"
        )));
    }
    Ok(v as usize)
}

/// ∫ψ_k ψ_k' over the family's interval against its closed-form norm.
pub fn orthogonality_check(
    family: OrthFamily,
    p: &Params,
    k: usize,
    k_prime: usize,
) -> Result<CheckReport> {
    let kf = k as f64;
    let kpf = k_prime as f64;
    let diag = k == k_prime;
    let mut echo = p.clone();
    echo.insert("k".into(), kf);
    echo.insert("k_prime".into(), kpf);

    // (lhs, norm_k, norm_k', kind, tolerance on the diagonal, plain absolute off-diagonal)
    let (lhs, hk, hkp, kind, tol, plain_abs) = match family {
        OrthFamily::FerrersPMu => {
            let mu = require(p, "mu")?;
            if !(mu > -1.0) || mu + kf + 0.5 == 0.0 || mu + kpf + 0.5 == 0.0 {
                return Err(Error::domain(format!(
                    "ferrers_p_mu needs mu > -1 and mu+k+1/2 != 0, got mu = {mu}"
                )));
            }
            let sys = OrthogonalSystem::ferrers_p(mu)?;
            let (v, kind) = sys.gram(k, k_prime)?;
            (v, sys.norm(k), sys.norm(k_prime), kind, QUAD_TOL, true)
        }
        OrthFamily::FerrersPPos | OrthFamily::FerrersPNeg | OrthFamily::FerrersMixed => {
            let n = require_index(p, "n")?;
            let nf = n as f64;
            let (o1, o2) = match family {
                OrthFamily::FerrersPPos => (nf, nf),
                OrthFamily::FerrersPNeg => (-nf, -nf),
                _ => (nf, -nf),
            };
            let (v, kind) = integrate_endpoint_weighted(
                |x| Ok(ferrers_p_value(kf + nf, o1, x)? * ferrers_p_value(kpf + nf, o2, x)?),
                nf,
                nf,
                gl_nodes(k + k_prime, nf),
            )?;
            let norm = |k: usize| -> f64 {
                let kk = k as f64;
                match family {
                    OrthFamily::FerrersPPos => {
                        factorial(2 * n + k) / (factorial(k) * (nf + kk + 0.5))
                    }
                    OrthFamily::FerrersPNeg => {
                        factorial(k) / (factorial(2 * n + k) * (nf + kk + 0.5))
                    }
                    _ => (if n % 2 == 0 { 1.0 } else { -1.0 }) / (nf + kk + 0.5),
                }
            };
            (v, norm(k), norm(k_prime), kind, QUAD_TOL, false)
        }
        OrthFamily::FerrersQ => {
            let n = require_index(p, "n")?;
            if n == 0 && (k == 0 || k_prime == 0) {
                return Err(Error::domain(
                    "n = 0 needs k, k' >= 1: Q_{-1/2}^{-1/2} is a pole",
                ));
            }
            let nf = n as f64;
            let e = nf - 0.5;
            let (v, kind) = integrate_endpoint_weighted(
                |x| Ok(ferrers_q_value(kf + e, e, x)? * ferrers_q_value(kpf + e, e, x)?),
                e,
                e,
                gl_nodes(k + k_prime, e),
            )?;
            let norm = |k: usize| {
                PI * PI * factorial(2 * n + k - 1) / (4.0 * (nf + k as f64) * factorial(k))
            };
            (v, norm(k), norm(k_prime), kind, QUAD_TOL, false)
        }
        OrthFamily::Gegenbauer => {
            let mu = require(p, "mu")?;
            let sys = OrthogonalSystem::gegenbauer(mu)?;
            let (v, kind) = sys.gram(k, k_prime)?;
            (v, sys.norm(k), sys.norm(k_prime), kind, QUAD_TOL, false)
        }
        OrthFamily::ChebyshevTrig => {
            let order = require(p, "order")?;
            // θ-forms: k Q_{k-½}^{-½}(cos θ)√(2 sin θ/π) = cos kθ, -√(2 sin θ/π) Q_{k+½}^{½}(cos θ) = sin (k+1)θ
            let g = |k: usize, theta: f64| -> Result<f64> {
                let x = theta.cos();
                let s = (2.0 * theta.sin() / PI).sqrt();
                if order < 0.0 {
                    Ok(s * ferrers_q_mhalf_scaled(k as f64 - 0.5, x)?)
                } else {
                    Ok(-s * ferrers_q_value(k as f64 + 0.5, 0.5, x)?)
                }
            };
            if order != 0.5 && order != -0.5 {
                return Err(Error::domain(format!(
                    "chebyshev_trig order must be -1/2 or 1/2, got {order}"
                )));
            }
            let rule = gauss_legendre_rule(k + k_prime + 20)?;
            let h = PI / 2.0;
            let v = h * rule
                .try_integrate(|t| Ok(g(k, h * (t + 1.0))? * g(k_prime, h * (t + 1.0))?))?;
            let norm = |k: usize| if order < 0.0 && k == 0 { PI } else { PI / 2.0 };
            (
                v,
                norm(k),
                norm(k_prime),
                QuadratureKind::GaussLegendre,
                1e-10,
                false,
            )
        }
    };

    let name = format!("orthogonality/{}", family.name());
    let note = format!("quadrature={}", kind.name());
    let report = if diag {
        CheckReport::new(name, echo, lhs, hk, tol, 0.0)
    } else {
        let scale = if plain_abs {
            1.0
        } else {
            (hk * hkp).abs().sqrt()
        };
        CheckReport::new(name, echo, lhs, 0.0, OFF_DIAG_TOL, scale)
    };
    let report = report.with_note(note);
    Ok(if family == OrthFamily::FerrersPMu {
        report.with_note(KN_NOTE)
    } else {
        report
    })
}

fn double_factorial_odd(m: usize) -> f64 {
    // (2m-1)!!
    (1..=m).map(|i| (2 * i - 1) as f64).product()
}

/// h^I_k for k < 2N and h^{II}_k for k ≥ 2N.
pub fn sobolev_norm(n_big: usize, k: usize) -> f64 {
    let nb = n_big as f64;
    let kf = k as f64;
    if k < 2 * n_big {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * (2.0 * nb - 1.0) * factorial(2 * n_big - 1)
            / (factorial(k) * (2.0 * nb - 2.0 * kf - 1.0) * factorial(2 * n_big - k - 1))
    } else {
        let dfo = double_factorial_odd(n_big);
        2.0 * factorial(k) * dfo * dfo / ((1.0 + 2.0 * kf - 2.0 * nb) * factorial(k - 2 * n_big))
    }
}

fn binomial(n: usize, j: usize) -> f64 {
    factorial(n) / (factorial(j) * factorial(n - j))
}

/// Boundary form (F, G)_1 plus the interior term ∫ F^{(2N)} G^{(2N)} (1-x²)^N.
pub fn sobolev_form(n_big: usize, f: &PolynomialCoeffs, g: &PolynomialCoeffs) -> Result<f64> {
    let fg = f.mul(g);
    let mut boundary = 0.0;
    for j in 0..n_big {
        let d = fg.nth_derivative(j);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let w = binomial(n_big - 1, j) * 2f64.powi(j as i32 - 1)
            / pochhammer(2.0 - 2.0 * n_big as f64, j);
        boundary += w * (d.eval(1.0) + sign * d.eval(-1.0));
    }
    let inner = f
        .nth_derivative(2 * n_big)
        .mul(&g.nth_derivative(2 * n_big))
        .mul_one_minus_x2_pow(n_big);
    let rule = gauss_legendre_rule(inner.degree / 2 + 2)?;
    Ok(boundary + rule.integrate(|x| inner.eval(x)))
}

/// B(F_k, F_k') for F_k = C_k^{½-N}, the polynomial (1-x²)^{N/2} P_k^N is proportional to.
pub fn sobolev_bilinear_form(n_big: usize, k: usize, k_prime: usize) -> Result<CheckReport> {
    if n_big == 0 {
        return Err(Error::domain("Sobolev form needs N >= 1"));
    }
    let cap = 2 * n_big + 5;
    if k > cap || k_prime > cap || cap > MAX_COEFF_DEGREE {
        return Err(Error::domain(format!(
            "Sobolev form supports k, k' <= 2N+5 <= {MAX_COEFF_DEGREE}; got N = {n_big}, k = {k}, k' = {k_prime}"
        )));
    }
    let lam = 0.5 - n_big as f64;
    let b = sobolev_form(
        n_big,
        &gegenbauer_coeffs(k, lam),
        &gegenbauer_coeffs(k_prime, lam),
    )?;
    let echo = params(&[
        ("N", n_big as f64),
        ("k", k as f64),
        ("k_prime", k_prime as f64),
    ]);
    let (hk, hkp) = (sobolev_norm(n_big, k), sobolev_norm(n_big, k_prime));
    Ok(if k == k_prime {
        CheckReport::new("sobolev", echo, b, hk, SOBOLEV_TOL, 0.0)
    } else {
        CheckReport::new(
            "sobolev",
            echo,
            b,
            0.0,
            SOBOLEV_TOL,
            (hk * hkp).abs().sqrt(),
        )
    }
    .with_note("F_k = C_k^(1/2-N)"))
}
