use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::report::{params, CheckReport};
use crate::error::{Error, Result};
use crate::ferrers::{ferrers_p_base, ferrers_p_value, ferrers_q_value, legendre_q, LegendreQArgs};
use crate::poly::gegenbauer_c;
use crate::special::{
    factorial, gamma, gamma_ratio, gauss_2f1_with_max_terms, nonpositive_integer, DEFAULT_TOL,
};

pub const CD_TOL: f64 = 1e-10;
pub const POISSON_TOL: f64 = 1e-8;
pub const GENFUN_TOL: f64 = 1e-10;

fn flag(b: bool) -> f64 {
    if b {
        1.0
    } else {
        0.0
    }
}

fn in_open_interval(x: f64) -> bool {
    x > -1.0 && x < 1.0
}

/// Finite Christoffel–Darboux sums against their closed forms.
///
/// First kind: ψ_k = P_{k+μ}^{-μ}, summed over k < n with weights
/// (2μ+2k+1)Γ(2μ+k+1)/k!. Second kind: φ_k = Q_{k+n-½}^{n-½}, weights
/// (n+k)k!/(2n+k-1)!; `mu` is ignored.
pub fn christoffel_darboux_check(
    mu: f64,
    n: usize,
    x: f64,
    x_prime: f64,
    confluent: bool,
    second_kind: bool,
) -> Result<CheckReport> {
    let y = if confluent { x } else { x_prime };
    if !in_open_interval(x) || !in_open_interval(y) {
        return Err(Error::domain(format!(
            "CD check needs |x|, |x'| < 1, got {x}, {y}"
        )));
    }
    if !confluent && x == x_prime {
        return Err(Error::domain("non-confluent CD check needs x != x'"));
    }
    if n == 0 {
        return Err(Error::domain("CD check needs n >= 1"));
    }
    let nf = n as f64;
    let mut terms = Vec::with_capacity(n);
    let (lhs, rhs) = if second_kind {
        let e = nf - 0.5;
        let phi = |k: usize, z: f64| ferrers_q_value(k as f64 + e, e, z);
        for k in 0..n {
            let c = (nf + k as f64) * factorial(k) / factorial(2 * n + k - 1);
            terms.push(c * phi(k, x)? * phi(k, y)?);
        }
        let pre = factorial(n) / (2.0 * factorial(3 * n - 2));
        let (a, b) = (phi(n, x)?, phi(n - 1, x)?);
        let rhs = if confluent {
            pre / ((1.0 - x) * (1.0 + x))
                * (nf * a * a + (3.0 * nf - 1.0) * b * b - x * (4.0 * nf - 1.0) * a * b)
        } else {
            let (ap, bp) = (phi(n, y)?, phi(n - 1, y)?);
            pre / (x - y) * (a * bp - b * ap)
        };
        (terms.iter().sum::<f64>(), rhs)
    } else {
        if !(mu > -0.5) {
            return Err(Error::domain(format!(
                "first-kind CD check needs mu > -1/2, got {mu}"
            )));
        }
        let psi = |k: usize, z: f64| ferrers_p_value(k as f64 + mu, -mu, z);
        for k in 0..n {
            let kf = k as f64;
            let c = (2.0 * mu + 2.0 * kf + 1.0) * gamma_ratio(2.0 * mu + kf + 1.0, kf + 1.0)?;
            terms.push(c * psi(k, x)? * psi(k, y)?);
        }
        let pre = gamma_ratio(2.0 * mu + nf + 1.0, nf)?;
        let (a, b) = (psi(n, x)?, psi(n - 1, x)?);
        let rhs = if confluent {
            pre / ((1.0 - x) * (1.0 + x))
                * ((nf + 2.0 * mu) * a * a + nf * b * b - 2.0 * x * (nf + mu) * a * b)
        } else {
            let (ap, bp) = (psi(n, y)?, psi(n - 1, y)?);
            pre / (x - y) * (a * bp - b * ap)
        };
        (terms.iter().sum::<f64>(), rhs)
    };
    let name = match (second_kind, confluent) {
        (false, false) => "christoffel_darboux/first",
        (false, true) => "christoffel_darboux/first_confluent",
        (true, false) => "christoffel_darboux/second",
        (true, true) => "christoffel_darboux/second_confluent",
    };
    let echo = params(&[
        ("mu", mu),
        ("n", nf),
        ("x", x),
        ("x_prime", y),
        ("confluent", flag(confluent)),
        ("second_kind", flag(second_kind)),
    ]);
    Ok(CheckReport::new(name, echo, lhs, rhs, CD_TOL, 1.0))
}

/// Parameters of a Poisson-kernel evaluation; `chi` is derived.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoissonKernelInstance {
    pub lambda: f64,
    pub t: f64,
    pub theta: f64,
    pub theta_prime: f64,
    pub chi: f64,
}

impl PoissonKernelInstance {
    /// χ = (1 + t² - 2t cos θ cos θ')/(2t sin θ sin θ').
    pub fn new(lambda: f64, t: f64, theta: f64, theta_prime: f64) -> Self {
        let chi = (1.0 + t * t - 2.0 * t * theta.cos() * theta_prime.cos())
            / (2.0 * t * theta.sin() * theta_prime.sin());
        PoissonKernelInstance {
            lambda,
            t,
            theta,
            theta_prime,
            chi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoissonVariant {
    K0,
    K1,
    K2,
    /// Reindexed k0 at integer λ = m in terms of P_n^m.
    Addition,
}

impl PoissonVariant {
    pub fn name(self) -> &'static str {
        match self {
            PoissonVariant::K0 => "k0",
            PoissonVariant::K1 => "k1",
            PoissonVariant::K2 => "k2",
            PoissonVariant::Addition => "addition",
        }
    }
}

pub fn poisson_kernel_check(
    inst: PoissonKernelInstance,
    variant: PoissonVariant,
    n_terms: usize,
) -> Result<CheckReport> {
    let PoissonKernelInstance {
        lambda: l,
        t,
        theta,
        theta_prime,
        ..
    } = inst;
    let lo = 0.2;
    let hi = PI - 0.2;
    if !(t > 0.0 && t <= 0.6) {
        return Err(Error::domain(format!(
            "Poisson kernel needs 0 < t <= 0.6, got {t}"
        )));
    }
    if !(theta > lo && theta < hi && theta_prime > lo && theta_prime < hi) {
        return Err(Error::domain(
            "Poisson kernel needs theta, theta' in (0.2, pi-0.2)",
        ));
    }
    if !(l > -0.5) || n_terms < 40 {
        return Err(Error::domain(format!(
            "Poisson kernel needs lambda > -1/2 and n_terms >= 40, got {l}, {n_terms}"
        )));
    }
    let chi = PoissonKernelInstance::new(l, t, theta, theta_prime).chi;
    if !(chi > 1.0 + 1e-8) {
        return Err(Error::domain(format!("chi = {chi} too close to 1")));
    }
    let (x, y) = (theta.cos(), theta_prime.cos());
    let (sx, sy) = (theta.sin(), theta_prime.sin());
    let hob =
        |m: f64| legendre_q(LegendreQArgs::hobson(l - 0.5, m, chi), DEFAULT_TOL).map(|r| r.value);

    let mut terms = Vec::with_capacity(n_terms);
    let rhs = if variant == PoissonVariant::Addition {
        if l < 0.0 || l != l.round() {
            return Err(Error::domain(format!(
                "addition form needs integer lambda >= 0, got {l}"
            )));
        }
        let m = l as usize;
        for n in m..m + n_terms {
            let c = t.powi(n as i32) / ((n - m + 1)..=(n + m)).map(|j| j as f64).product::<f64>();
            terms.push(c * ferrers_p_value(n as f64, l, x)? * ferrers_p_value(n as f64, l, y)?);
        }
        hob(0.0)? / (PI * (t * sx * sy).sqrt())
    } else {
        let mut c = 1.0;
        for n in 0..n_terms {
            let a = l + n as f64 + 0.5;
            let mult = match variant {
                PoissonVariant::K0 => 1.0,
                PoissonVariant::K1 => a,
                _ => a * (a + 1.0),
            };
            let nu = n as f64 + l;
            terms.push(mult * c * ferrers_p_value(nu, -l, x)? * ferrers_p_value(nu, -l, y)?);
            c *= t * (2.0 * l + 1.0 + n as f64) / (n as f64 + 1.0);
        }
        let g = gamma(2.0 * l + 1.0)?;
        let s32 = (sx * sy).powf(1.5);
        let root = ((chi - 1.0) * (chi + 1.0)).sqrt();
        match variant {
            PoissonVariant::K0 => hob(0.0)? / (PI * g * t.powf(l + 0.5) * (sx * sy).sqrt()),
            PoissonVariant::K1 => {
                -(1.0 - t * t) / (2.0 * PI * g * t.powf(l + 1.5) * s32) * hob(1.0)? / root
            }
            _ => {
                let q2 =
                    (1.0 - t * t).powi(2) * hob(2.0)? / (4.0 * t.powi(3) * sx * sy * root * root);
                (hob(1.0)? / root + q2) / (PI * t.powf(l - 0.5) * g * s32)
            }
        }
    };
    let lhs: f64 = terms.iter().sum();
    let last = terms.last().map_or(0.0, |v| v.abs());
    let tail = last * t / (1.0 - t);
    let echo = params(&[
        ("lambda", l),
        ("t", t),
        ("theta", theta),
        ("theta_prime", theta_prime),
        ("chi", chi),
        ("n_terms", n_terms as f64),
    ]);
    Ok(CheckReport::new(
        format!("poisson/{}", variant.name()),
        echo,
        lhs,
        rhs,
        POISSON_TOL,
        0.0,
    )
    .with_note(format!("tail_estimate={tail:.3e}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenFunVariant {
    Alg0,
    Alg1,
    Alg2,
    P0,
    P1,
    P2,
    Gauss { gamma: f64 },
}

impl GenFunVariant {
    pub fn name(self) -> &'static str {
        match self {
            GenFunVariant::Alg0 => "alg0",
            GenFunVariant::Alg1 => "alg1",
            GenFunVariant::Alg2 => "alg2",
            GenFunVariant::P0 => "p0",
            GenFunVariant::P1 => "p1",
            GenFunVariant::P2 => "p2",
            GenFunVariant::Gauss { .. } => "gauss",
        }
    }
}

/// Partial sums of Gegenbauer and Ferrers generating functions.
///
/// Relative tolerance, with an absolute floor scaled by Σ|terms| to allow for
/// cancellation in the alternating cases.
pub fn generating_function_check(
    lambda: f64,
    t: f64,
    x: f64,
    variant: GenFunVariant,
    n_terms: usize,
) -> Result<CheckReport> {
    let l = lambda;
    if !(t.abs() <= 0.6) || !in_open_interval(x) {
        return Err(Error::domain(format!(
            "generating functions need |t| <= 0.6 and |x| < 1, got t = {t}, x = {x}"
        )));
    }
    if n_terms == 0 {
        return Err(Error::domain("n_terms must be positive"));
    }
    let r = 1.0 + t * t - 2.0 * t * x;
    let mut terms = Vec::with_capacity(n_terms);
    let rhs = match variant {
        GenFunVariant::Alg0 | GenFunVariant::Alg1 | GenFunVariant::Alg2 => {
            for n in 0..n_terms {
                let a = l + n as f64;
                let mult = match variant {
                    GenFunVariant::Alg0 => 1.0,
                    GenFunVariant::Alg1 => a,
                    _ => a * (a + 1.0),
                };
                terms.push(mult * t.powi(n as i32) * gegenbauer_c(n, l, x));
            }
            match variant {
                GenFunVariant::Alg0 => r.powf(-l),
                GenFunVariant::Alg1 => l * (1.0 - t * t) / r.powf(l + 1.0),
                _ => {
                    l * (l + 1.0) * (1.0 - t * t).powi(2) / r.powf(l + 2.0)
                        - 2.0 * l * t * t / r.powf(l + 1.0)
                }
            }
        }
        GenFunVariant::P0 | GenFunVariant::P1 | GenFunVariant::P2 => {
            if nonpositive_integer(2.0 * l + 1.0).is_some() || !(l > -1.0) {
                return Err(Error::domain(format!(
                    "Ferrers generating functions need lambda > -1, 2 lambda + 1 != 0, got {l}"
                )));
            }
            let mut c = 1.0;
            for n in 0..n_terms {
                let a = l + n as f64 + 0.5;
                let mult = match variant {
                    GenFunVariant::P0 => 1.0,
                    GenFunVariant::P1 => a,
                    _ => a * (a + 1.0),
                };
                terms.push(mult * c * ferrers_p_value(n as f64 + l, -l, x)?);
                c *= t * (2.0 * l + 1.0 + n as f64) / (n as f64 + 1.0);
            }
            let pf = ferrers_p_base(l, x);
            let h = l + 0.5;
            match variant {
                GenFunVariant::P0 => pf / r.powf(h),
                GenFunVariant::P1 => pf * h * (1.0 - t * t) / r.powf(h + 1.0),
                _ => {
                    pf * h
                        * ((h + 1.0) * (1.0 - t * t).powi(2) / r.powf(h + 2.0)
                            - 2.0 * t * t / r.powf(h + 1.0))
                }
            }
        }
        GenFunVariant::Gauss { gamma: g } => {
            if nonpositive_integer(2.0 * l).is_some() || nonpositive_integer(l + 0.5).is_some() {
                return Err(Error::domain(format!(
                    "Gauss generating function needs 2 lambda, lambda + 1/2 off the poles, got {l}"
                )));
            }
            let w = t * t * (x * x - 1.0) / (1.0 - x * t).powi(2);
            if !(w.abs() < 1.0) {
                return Err(Error::domain(format!(
                    "series argument {w} outside the unit disc"
                )));
            }
            let mut c = 1.0;
            for n in 0..n_terms {
                terms.push(c * gegenbauer_c(n, l, x));
                c *= t * (g + n as f64) / (2.0 * l + n as f64);
            }
            let f = gauss_2f1_with_max_terms(
                g / 2.0,
                (g + 1.0) / 2.0,
                l + 0.5,
                w,
                DEFAULT_TOL,
                100_000,
            )?;
            (1.0 - x * t).powf(-g) * f.value
        }
    };
    let lhs: f64 = terms.iter().sum();
    let abs_sum: f64 = terms.iter().map(|v| v.abs()).sum();
    let last = terms
        .iter()
        .rev()
        .take(2)
        .fold(0.0f64, |m, v| m.max(v.abs()));
    let tail = last * t.abs() / (1.0 - t.abs());
    if tail > GENFUN_TOL * lhs.abs().max(abs_sum) {
        return Err(Error::convergence(format!(
            "tail estimate {tail:e} exceeds tolerance after {n_terms} terms"
        )));
    }
    let mut echo = params(&[
        ("lambda", l),
        ("t", t),
        ("x", x),
        ("n_terms", n_terms as f64),
    ]);
    if let GenFunVariant::Gauss { gamma: g } = variant {
        echo.insert("gamma".into(), g);
    }
    Ok(CheckReport::new(
        format!("generating/{}", variant.name()),
        echo,
        lhs,
        rhs,
        GENFUN_TOL,
        abs_sum,
    ))
}
