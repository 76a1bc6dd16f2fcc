use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::asymptotics::{hermite_ratio_check, large_lambda_ratio_check, mehler_heine_ratio_check};
use super::integrals::{
    cd_projector_check, closure_projection_check, closure_projection_second_kind,
    closure_series_check, definite_integral_check, IntegralVariant, CLOSURE_SERIES_TERMS,
};
use super::kernels::{
    christoffel_darboux_check, generating_function_check, poisson_kernel_check, GenFunVariant,
    PoissonKernelInstance, PoissonVariant,
};
use super::orthogonality::{orthogonality_check, sobolev_bilinear_form, OrthFamily};
use super::report::{params, CheckReport, Params};
use crate::error::{Error, Result};
use crate::ferrers::{
    ferrers_p_base, ferrers_p_reciprocal_series, ferrers_p_value, ferrers_q_value,
    rodrigues_ferrers_p, rodrigues_ferrers_q,
};
use crate::poly::{
    chebyshev_t, chebyshev_u, connection_expand, gegenbauer_c, linearization_expand, meixner_m,
    PolynomialCoeffs,
};
use crate::special::{factorial, gamma, pochhammer};

/// Tolerance of the closed-form identity checks (Rodrigues, connection, representations).
pub const IDENTITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Orthogonality,
    ChristoffelDarboux,
    Poisson,
    Generating,
    Integrals,
    Asymptotics,
    Sobolev,
    Closure,
    Rodrigues,
    Connection,
    Representations,
    All,
}

impl Suite {
    /// Every concrete suite, in run order; `All` expands to this list.
    pub const CONCRETE: [Suite; 11] = [
        Suite::Orthogonality,
        Suite::ChristoffelDarboux,
        Suite::Poisson,
        Suite::Generating,
        Suite::Integrals,
        Suite::Asymptotics,
        Suite::Sobolev,
        Suite::Closure,
        Suite::Rodrigues,
        Suite::Connection,
        Suite::Representations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::ChristoffelDarboux => "christoffel_darboux",
            Suite::Poisson => "poisson",
            Suite::Generating => "generating",
            Suite::Integrals => "integrals",
            Suite::Asymptotics => "asymptotics",
            Suite::Sobolev => "sobolev",
            Suite::Closure => "closure",
            Suite::Rodrigues => "rodrigues",
            Suite::Connection => "connection",
            Suite::Representations => "representations",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|v| v.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<_> = Suite::CONCRETE.iter().map(|v| v.name()).collect();
                Error::domain(format!(
                    "unknown suite '{s}'; expected one of {}, all",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Reduced grids for a quick pass.
    pub smoke: bool,
    /// Replaces the precision tolerance of every check except the ratio tests
    /// and the slowly convergent closure series.
    pub tol: Option<f64>,
}

type Job = Box<dyn Fn() -> CheckReport + Send + Sync>;

fn job<F>(name: impl Into<String>, p: Params, tol: f64, f: F) -> Job
where
    F: Fn() -> Result<CheckReport> + Send + Sync + 'static,
{
    let name = name.into();
    Box::new(move || {
        f().unwrap_or_else(|e| CheckReport::from_error(name.clone(), p.clone(), tol, &e))
    })
}

fn identity(name: &str, p: Params, lhs: f64, rhs: f64) -> CheckReport {
    CheckReport::new(name, p, lhs, rhs, IDENTITY_TOL, 1.0)
}

fn pick<T: Copy>(smoke: bool, full: &[T], quick: &[T]) -> Vec<T> {
    if smoke { quick } else { full }.to_vec()
}

/// Runs every check of `suite` concurrently; failures are reports, never errors.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Vec<CheckReport> {
    let jobs: Vec<Job> = match suite {
        Suite::All => Suite::CONCRETE
            .iter()
            .flat_map(|&s| jobs_for(s, config.smoke))
            .collect(),
        s => jobs_for(s, config.smoke),
    };
    let reports: Vec<CheckReport> = jobs.par_iter().map(|j| j()).collect();
    match config.tol {
        Some(tol) => reports
            .into_iter()
            .map(|r| {
                if keeps_own_tolerance(&r.check_name) {
                    r
                } else {
                    r.with_tol(tol)
                }
            })
            .collect(),
        None => reports,
    }
}

fn keeps_own_tolerance(name: &str) -> bool {
    name.starts_with("asymptotics/") || name == "closure/series"
}

fn jobs_for(suite: Suite, smoke: bool) -> Vec<Job> {
    match suite {
        Suite::Orthogonality => orthogonality_jobs(smoke),
        Suite::ChristoffelDarboux => cd_jobs(smoke),
        Suite::Poisson => poisson_jobs(smoke),
        Suite::Generating => generating_jobs(smoke),
        Suite::Integrals => integral_jobs(),
        Suite::Asymptotics => asymptotic_jobs(smoke),
        Suite::Sobolev => sobolev_jobs(smoke),
        Suite::Closure => closure_jobs(smoke),
        Suite::Rodrigues => rodrigues_jobs(smoke),
        Suite::Connection => connection_jobs(smoke),
        Suite::Representations => representation_jobs(smoke),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn orth_job(family: OrthFamily, p: Params, k: usize, kp: usize) -> Job {
    let mut echo = p.clone();
    echo.insert("k".into(), k as f64);
    echo.insert("k_prime".into(), kp as f64);
    job(
        format!("orthogonality/{}", family.name()),
        echo,
        1e-9,
        move || orthogonality_check(family, &p, k, kp),
    )
}

fn orthogonality_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let kmax = if smoke { 3 } else { 8 };
    for &mu in &[-0.4, 0.0, 0.5, 1.0, 2.3] {
        for k in 0..=kmax {
            for kp in 0..=kmax {
                out.push(orth_job(
                    OrthFamily::FerrersPMu,
                    params(&[("mu", mu)]),
                    k,
                    kp,
                ));
            }
        }
    }
    let kmax = if smoke { 2 } else { 6 };
    for n in 0..=2usize {
        for family in [
            OrthFamily::FerrersPPos,
            OrthFamily::FerrersPNeg,
            OrthFamily::FerrersMixed,
            OrthFamily::FerrersQ,
        ] {
            let (lo, hi) = match family {
                OrthFamily::FerrersQ if n == 0 => (1, kmax),
                OrthFamily::FerrersPPos | OrthFamily::FerrersPNeg | OrthFamily::FerrersMixed => {
                    (0, kmax.min(4))
                }
                _ => (0, kmax),
            };
            for k in lo..=hi {
                for kp in lo..=hi {
                    out.push(orth_job(family, params(&[("n", n as f64)]), k, kp));
                }
            }
        }
    }
    for &mu in &[0.25, 1.0, 2.3] {
        for k in 0..=kmax.min(5) {
            for kp in k..=kmax.min(5) {
                out.push(orth_job(
                    OrthFamily::Gegenbauer,
                    params(&[("mu", mu)]),
                    k,
                    kp,
                ));
            }
        }
    }
    for &order in &[-0.5, 0.5] {
        for k in 0..=kmax {
            for kp in 0..=kmax {
                out.push(orth_job(
                    OrthFamily::ChebyshevTrig,
                    params(&[("order", order)]),
                    k,
                    kp,
                ));
            }
        }
    }
    out
}

const CD_PAIRS: [(f64, f64); 9] = [
    (-0.7, 0.2),
    (-0.3, 0.55),
    (0.1, 0.9),
    (-0.85, -0.4),
    (0.35, 0.6),
    (-0.1, 0.05),
    (0.5, -0.6),
    (0.75, 0.8),
    (-0.95, 0.3),
];
const CD_CONFLUENT: [f64; 3] = [-0.6, 0.0, 0.45];

fn cd_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let pairs = pick(smoke, &CD_PAIRS, &CD_PAIRS[..3]);
    let nmax = if smoke { 3 } else { 6 };
    let mut push = |mu: f64, n: usize, x: f64, xp: f64, confluent: bool, second: bool| {
        let name = match (second, confluent) {
            (false, false) => "christoffel_darboux/first",
            (false, true) => "christoffel_darboux/first_confluent",
            (true, false) => "christoffel_darboux/second",
            (true, true) => "christoffel_darboux/second_confluent",
        };
        let p = params(&[
            ("mu", mu),
            ("n", n as f64),
            ("x", x),
            ("x_prime", if confluent { x } else { xp }),
        ]);
        out.push(job(name, p, 1e-10, move || {
            christoffel_darboux_check(mu, n, x, xp, confluent, second)
        }));
    };
    for &mu in &[0.0, 0.75, 1.5] {
        for n in 1..=nmax {
            for &(x, xp) in &pairs {
                push(mu, n, x, xp, false, false);
            }
            for &x in &CD_CONFLUENT {
                push(mu, n, x, x, true, false);
            }
        }
    }
    for n in 1..=2 {
        for &(x, xp) in &pairs {
            push(0.0, n, x, xp, false, true);
        }
        for &x in &CD_CONFLUENT {
            push(0.0, n, x, x, true, true);
        }
    }
    out
}

fn poisson_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let angles = pick(smoke, &[(0.7, 1.9), (1.2, 2.5), (2.1, 0.4)], &[(0.7, 1.9)]);
    let ts = pick(smoke, &[0.2, 0.35, 0.5], &[0.35]);
    let mut push = |lambda: f64, t: f64, th: f64, thp: f64, variant: PoissonVariant| {
        let n_terms = if t <= 0.35 { 80 } else { 200 };
        let p = params(&[
            ("lambda", lambda),
            ("t", t),
            ("theta", th),
            ("theta_prime", thp),
            ("n_terms", n_terms as f64),
        ]);
        out.push(job(
            format!("poisson/{}", variant.name()),
            p,
            1e-8,
            move || {
                poisson_kernel_check(
                    PoissonKernelInstance::new(lambda, t, th, thp),
                    variant,
                    n_terms,
                )
            },
        ));
    };
    for &lambda in &[0.5, 1.0, 1.7] {
        for &t in &ts {
            for &(th, thp) in &angles {
                for variant in [PoissonVariant::K0, PoissonVariant::K1, PoissonVariant::K2] {
                    push(lambda, t, th, thp, variant);
                }
            }
        }
    }
    for &t in &ts {
        for &(th, thp) in &angles {
            push(1.0, t, th, thp, PoissonVariant::Addition);
        }
    }
    out
}

fn generating_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let ts = pick(smoke, &[-0.4, 0.25, 0.5], &[0.5]);
    let xs = pick(smoke, &[-0.6, 0.3, 0.8], &[0.3]);
    let variants = [
        GenFunVariant::Alg0,
        GenFunVariant::Alg1,
        GenFunVariant::Alg2,
        GenFunVariant::P0,
        GenFunVariant::P1,
        GenFunVariant::P2,
        GenFunVariant::Gauss { gamma: 0.7 },
        GenFunVariant::Gauss { gamma: 2.3 },
    ];
    for &lambda in &[0.5, 1.0, 1.7] {
        for &t in &ts {
            for &x in &xs {
                for variant in variants {
                    let p = params(&[("lambda", lambda), ("t", t), ("x", x)]);
                    out.push(job(
                        format!("generating/{}", variant.name()),
                        p,
                        1e-10,
                        move || generating_function_check(lambda, t, x, variant, 200),
                    ));
                }
            }
        }
    }
    out
}

/// Six parameter points per definite integral.
pub const ASKEY_RAZBAN_POINTS: [(f64, f64, f64); 6] = [
    (0.0, 0.5, 1.0),
    (1.0, 0.5, 0.0),
    (0.7, 1.3, 3.0),
    (2.0, 0.3, 2.0),
    (0.5, -0.4, 4.0),
    (1.5, 2.2, 1.0),
];
pub const POWER_EXPANSION_POINTS: [(f64, f64, f64, f64); 6] = [
    (1.0, 0.0, 1.0, 2.0),
    (1.3, 0.4, 2.0, 1.7),
    (2.5, 1.5, 3.0, 3.0),
    (0.5, 0.0, 0.0, 1.5),
    (2.0, 1.0, 2.0, 2.5),
    (0.7, -0.3, 1.0, 1.4),
];
pub const GENFUN_INTEGRAL_POINTS: [(f64, f64, f64, f64, f64); 6] = [
    (0.3, 0.4, 0.0, 0.0, 0.3),
    (0.3, 0.4, 1.0, 2.0, 0.5),
    (1.2, 1.7, 2.0, 3.0, 0.4),
    (0.5, 0.25, 1.0, 1.0, 0.35),
    (0.8, 2.6, 0.0, 3.0, 0.45),
    (0.1, -0.3, 2.0, 2.0, 0.2),
];

fn integral_jobs() -> Vec<Job> {
    let mut out = Vec::new();
    let mut push = |variant: IntegralVariant, p: Params| {
        let q = p.clone();
        out.push(job(
            format!("integrals/{}", variant.name()),
            p,
            1e-8,
            move || definite_integral_check(variant, &q),
        ));
    };
    for &(l, g, n) in &ASKEY_RAZBAN_POINTS {
        push(
            IntegralVariant::AskeyRazban,
            params(&[("lambda", l), ("gamma", g), ("n", n)]),
        );
    }
    for &(nu, mu, n, z) in &POWER_EXPANSION_POINTS {
        push(
            IntegralVariant::PowerExpansion,
            params(&[("nu", nu), ("mu", mu), ("n", n), ("z", z)]),
        );
    }
    for &(a, g, l, k, t) in &GENFUN_INTEGRAL_POINTS {
        push(
            IntegralVariant::GenfunIntegral,
            params(&[("alpha", a), ("gamma", g), ("l", l), ("k", k), ("t", t)]),
        );
    }
    out
}

fn asymptotic_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    for &l in &[0.3, 1.0] {
        for &z in &[0.5, 2.0] {
            for &n in &pick(smoke, &[16usize, 32, 64], &[32]) {
                let p = params(&[("lambda", l), ("z", z), ("n", n as f64)]);
                out.push(job("asymptotics/mehler_heine", p, 0.2, move || {
                    mehler_heine_ratio_check(l, z, n)
                }));
            }
        }
    }
    for n in 2..=5usize {
        for &x in &[0.5, 1.0, 1.5] {
            for &l in &[1e2, 1e3] {
                let p = params(&[("n", n as f64), ("x", x), ("lambda", l)]);
                out.push(job("asymptotics/hermite", p, 0.24, move || {
                    hermite_ratio_check(n, x, l)
                }));
            }
        }
    }
    for &n in &[2usize, 3, 4, 6] {
        for &x in &[0.3, 0.5, 0.8] {
            for &l in &[50.0, 100.0, 200.0] {
                let p = params(&[("n", n as f64), ("x", x), ("lambda", l)]);
                out.push(job("asymptotics/large_lambda", p, 0.2, move || {
                    large_lambda_ratio_check(n, x, l)
                }));
            }
        }
    }
    out
}

fn sobolev_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    for big_n in 1..=(if smoke { 1 } else { 2 }) {
        for k in 0..=2 * big_n + 3 {
            for kp in 0..=2 * big_n + 3 {
                let p = params(&[("N", big_n as f64), ("k", k as f64), ("k_prime", kp as f64)]);
                out.push(job("sobolev", p, 1e-8, move || {
                    sobolev_bilinear_form(big_n, k, kp)
                }));
            }
        }
    }
    out
}

/// Σ_{j≤d} (-1)^j x^j/(j+1): a dense test polynomial of degree d.
fn test_polynomial(d: usize) -> PolynomialCoeffs {
    PolynomialCoeffs::new(
        (0..=d)
            .map(|j| if j % 2 == 0 { 1.0 } else { -1.0 } / (j + 1) as f64)
            .collect(),
    )
}

fn closure_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let xs = pick(smoke, &[-0.63, 0.12, 0.81], &[0.12]);
    let dmax = if smoke { 3 } else { 6 };
    for &mu in &[0.0, 0.4, -0.4] {
        for d in 0..=dmax {
            for &x in &xs {
                let p = params(&[("mu", mu), ("degree", d as f64), ("x_eval", x)]);
                out.push(job("closure/projection", p, 1e-10, move || {
                    closure_projection_check(mu, &test_polynomial(d), x, d + 2)
                }));
            }
        }
    }
    for d in 0..=dmax.min(4) {
        for &x in &xs {
            let p = params(&[("mu", -0.5), ("degree", d as f64), ("x_eval", x)]);
            out.push(job("closure/projection", p, 1e-10, move || {
                closure_projection_check(-0.5, &test_polynomial(d), x, d + 2)
            }));
            for n in 1..=2usize {
                let p = params(&[("n", n as f64), ("degree", d as f64), ("x_eval", x)]);
                out.push(job("closure/projection_second_kind", p, 1e-10, move || {
                    closure_projection_second_kind(n, &test_polynomial(d), x, d + 2)
                }));
            }
        }
    }
    for &mu in &[0.0, 0.6] {
        for n in 1..=(if smoke { 3 } else { 8 }) {
            for d in 0..n {
                for &x in &[-0.41, 0.27] {
                    let p = params(&[
                        ("mu", mu),
                        ("n", n as f64),
                        ("degree", d as f64),
                        ("x_eval", x),
                    ]);
                    out.push(job("closure/cd_projector", p, 1e-10, move || {
                        cd_projector_check(mu, n, &test_polynomial(d), x)
                    }));
                }
            }
        }
    }
    for &(l, g, x) in &[(0.5, 0.25, 0.2), (1.0, 0.3, -0.1), (0.8, 0.1, 0.5)] {
        let p = params(&[("lambda", l), ("gamma", g), ("x", x)]);
        out.push(job("closure/series", p, 1e-3, move || {
            closure_series_check(l, g, x, CLOSURE_SERIES_TERMS)
        }));
    }
    out
}

fn rodrigues_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let xs = pick(smoke, &[-0.85, -0.3, 0.1, 0.55, 0.9], &[-0.3, 0.55]);
    for &mu in &[0.0, 1.0, 2.5] {
        for n in 0..=6usize {
            for &x in &xs {
                let p = params(&[("mu", mu), ("n", n as f64), ("x", x)]);
                let q = p.clone();
                out.push(job("rodrigues/first", p, IDENTITY_TOL, move || {
                    let lhs = rodrigues_ferrers_p(n, mu, x)?;
                    Ok(identity(
                        "rodrigues/first",
                        q.clone(),
                        lhs,
                        ferrers_p_value(mu + n as f64, -mu, x)?,
                    ))
                }));
            }
        }
    }
    for k in 0..=5usize {
        for n in 0..=3usize {
            if k + n == 0 {
                continue;
            }
            for &x in &[-0.7, 0.05, 0.6] {
                let p = params(&[("k", k as f64), ("n", n as f64), ("x", x)]);
                let q = p.clone();
                out.push(job("rodrigues/second", p, IDENTITY_TOL, move || {
                    let lhs = rodrigues_ferrers_q(k, n, x)?;
                    let rhs = ferrers_q_value((k + n) as f64 - 0.5, n as f64 - 0.5, x)?;
                    Ok(identity("rodrigues/second", q.clone(), lhs, rhs))
                }));
            }
        }
    }
    out
}

const POLY_GRID: [f64; 5] = [-0.9, -0.35, 0.15, 0.6, 0.95];

fn connection_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let xs = pick(smoke, &POLY_GRID, &POLY_GRID[1..3]);
    for n in 0..=8usize {
        for &(nu, mu) in &[(1.5, 0.5), (2.3, 0.7), (0.4, 1.9), (-0.3, 1.2), (2.0, 1.0)] {
            for &x in &xs {
                let p = params(&[("n", n as f64), ("nu", nu), ("mu", mu), ("x", x)]);
                let q = p.clone();
                out.push(job("connection/connection", p, IDENTITY_TOL, move || {
                    let e = connection_expand(n, nu, mu)?;
                    Ok(identity(
                        "connection/connection",
                        q.clone(),
                        e.reconstruct(x),
                        gegenbauer_c(n, nu, x),
                    ))
                }));
            }
        }
    }
    for m in 0..=4usize {
        for n in 0..=6usize {
            for &lambda in &[0.5, 1.0, 1.7] {
                for &x in &xs {
                    let p = params(&[
                        ("m", m as f64),
                        ("n", n as f64),
                        ("lambda", lambda),
                        ("x", x),
                    ]);
                    let q = p.clone();
                    out.push(job(
                        "connection/linearization",
                        p,
                        IDENTITY_TOL,
                        move || {
                            let e = linearization_expand(m, n, lambda)?;
                            let rhs = gegenbauer_c(m, lambda, x) * gegenbauer_c(n, lambda, x);
                            Ok(identity(
                                "connection/linearization",
                                q.clone(),
                                e.reconstruct(x),
                                rhs,
                            ))
                        },
                    ));
                }
            }
        }
    }
    for &x in &xs {
        // C_2^2 = 3 C_2^1 + C_0^1
        let p = params(&[("x", x)]);
        let q = p.clone();
        out.push(job("connection/spot_c22", p, IDENTITY_TOL, move || {
            let e = connection_expand(2, 2.0, 1.0)?;
            let lhs = 3.0 * gegenbauer_c(2, 1.0, x) + gegenbauer_c(0, 1.0, x);
            let spot = identity(
                "connection/spot_c22",
                q.clone(),
                lhs,
                gegenbauer_c(2, 2.0, x),
            );
            let coeffs_ok =
                (e.coefficients[0] - 3.0).abs() < 1e-14 && (e.coefficients[1] - 1.0).abs() < 1e-14;
            Ok(if coeffs_ok {
                spot
            } else {
                spot.with_tol(0.0)
                    .with_note("coefficients differ from (3, 1)")
            })
        }));
    }
    out
}

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn representation_jobs(smoke: bool) -> Vec<Job> {
    let mut out = Vec::new();
    let mut push =
        |name: &'static str, p: Params, f: Box<dyn Fn() -> Result<(f64, f64)> + Send + Sync>| {
            let q = p.clone();
            out.push(job(name, p, IDENTITY_TOL, move || {
                let (lhs, rhs) = f()?;
                Ok(identity(name, q.clone(), lhs, rhs))
            }));
        };
    // 1-1/x² series of the first kind
    for d in 0..4usize {
        for &mu in &[0.0, 0.6, 1.5] {
            for &x in &pick(smoke, &[0.31, 0.5, 0.7, 0.94], &[0.5]) {
                let nu = mu + d as f64;
                push(
                    "representations/reciprocal_series",
                    params(&[("nu", nu), ("mu", mu), ("x", x)]),
                    Box::new(move || {
                        Ok((
                            ferrers_p_reciprocal_series(nu, -mu, x)?.value,
                            ferrers_p_value(nu, -mu, x)?,
                        ))
                    }),
                );
            }
        }
    }
    for &x in &[0.75, 0.9] {
        push(
            "representations/reciprocal_series",
            params(&[("nu", 1.7), ("mu", 0.4), ("x", x)]),
            Box::new(move || {
                Ok((
                    ferrers_p_reciprocal_series(1.7, -0.4, x)?.value,
                    ferrers_p_value(1.7, -0.4, x)?,
                ))
            }),
        );
    }
    // P_{n+λ}^{-λ} = n!/(2λ+1)_n P_λ^{-λ} C_n^{λ+½}, Gauss series on the left
    for &lam in &[0.2, 1.0, 2.5] {
        for n in pick(smoke, &[0usize, 3, 6, 10], &[3]) {
            for &x in &[-0.95, -0.4, 0.3, 0.95] {
                push(
                    "representations/gegenbauer_route",
                    params(&[("lambda", lam), ("n", n as f64), ("x", x)]),
                    Box::new(move || {
                        let lhs = ferrers_p_reciprocal_series(lam + n as f64, -lam, x.abs())?.value
                            * if x < 0.0 { sign(n) } else { 1.0 };
                        let rhs = factorial(n) / pochhammer(2.0 * lam + 1.0, n)
                            * ferrers_p_base(lam, x)
                            * gegenbauer_c(n, lam + 0.5, x);
                        Ok((lhs, rhs))
                    }),
                );
            }
        }
    }
    // Meixner bridge
    for &lam in &[0.4, 1.2] {
        for n in 0..=8usize {
            for &x in &pick(smoke, &[-0.5, 0.3, 0.8], &[0.3]) {
                push(
                    "representations/meixner",
                    params(&[("lambda", lam), ("n", n as f64), ("x", x)]),
                    Box::new(move || {
                        let nf = n as f64;
                        let m = meixner_m(n, -2.0 * lam - nf - 1.0, lam + 1.0, 2.0 / (1.0 + x))?;
                        Ok((
                            ferrers_p_value(nf + lam, -lam, x)?,
                            ferrers_p_base(lam, x) * m,
                        ))
                    }),
                );
            }
        }
    }
    // Chebyshev bridges in both kinds
    for n in 0..=10usize {
        for &th in &pick(smoke, &[0.25, 1.1, 2.0, 2.85], &[1.1]) {
            let p = params(&[("n", n as f64), ("theta", th)]);
            push(
                "representations/chebyshev_t",
                p.clone(),
                Box::new(move || {
                    let x = th.cos();
                    let v = (PI * th.sin() / 2.0).sqrt() * ferrers_p_value(n as f64 - 0.5, 0.5, x)?;
                    Ok((v, chebyshev_t(n, x)))
                }),
            );
            push(
                "representations/chebyshev_u",
                p,
                Box::new(move || {
                    let x = th.cos();
                    let v =
                        -(2.0 / (PI * th.sin())).sqrt() * ferrers_q_value(n as f64 + 0.5, 0.5, x)?;
                    Ok((v, chebyshev_u(n, x)))
                }),
            );
        }
    }
    // C_n^{½-N} through Ferrers functions of integer order
    for big_n in 1..=2usize {
        let nn = big_n as f64;
        let pre = 2f64.powi(big_n as i32) / PI.sqrt() * gamma(nn + 0.5).unwrap_or(f64::NAN);
        for &x in &[-0.6, 0.1, 0.6] {
            for n in 0..=2 * big_n - 1 {
                push(
                    "representations/gegenbauer_first_kind_pair",
                    params(&[("N", nn), ("n", n as f64), ("x", x)]),
                    Box::new(move || {
                        let d = n as f64 - nn;
                        let w = ((1.0 - x) * (1.0 + x)).powf(nn / 2.0);
                        let s =
                            ferrers_p_value(d, -nn, x)? + sign(n) * ferrers_p_value(d, -nn, -x)?;
                        Ok((0.5 * pre * w * s, gegenbauer_c(n, 0.5 - nn, x)))
                    }),
                );
            }
            for n in [2 * big_n, 2 * big_n + 2] {
                push(
                    "representations/gegenbauer_positive_order",
                    params(&[("N", nn), ("n", n as f64), ("x", x)]),
                    Box::new(move || {
                        let w = ((1.0 - x) * (1.0 + x)).powf(nn / 2.0);
                        let v = sign(big_n) * pre * factorial(n - 2 * big_n) / factorial(n)
                            * w
                            * ferrers_p_value(n as f64 - nn, nn, x)?;
                        Ok((v, gegenbauer_c(n, 0.5 - nn, x)))
                    }),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failures(r: &[CheckReport]) -> Vec<&CheckReport> {
        r.iter().filter(|r| !r.passed).collect()
    }

    #[test]
    fn names_roundtrip() {
        for s in Suite::CONCRETE.iter().chain(std::iter::once(&Suite::All)) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::Domain(_))));
    }

    #[test]
    fn smoke_all_passes() {
        let r = run_suite(
            Suite::All,
            &SuiteConfig {
                smoke: true,
                tol: None,
            },
        );
        assert!(r.len() > 300, "{}", r.len());
        let f = failures(&r);
        assert!(f.is_empty(), "{} failures, first {:?}", f.len(), f.first());
    }

    #[test]
    fn orthogonality_grid_size() {
        let r = run_suite(Suite::Orthogonality, &SuiteConfig::default());
        assert!(r.len() >= 200);
        let f = failures(&r);
        assert!(f.is_empty(), "{} failures, first {:?}", f.len(), f.first());
    }

    #[test]
    fn tolerance_override() {
        let cfg = SuiteConfig {
            smoke: true,
            tol: Some(1e-30),
        };
        let r = run_suite(Suite::Asymptotics, &cfg);
        assert!(r.iter().all(|r| r.passed));
        let r = run_suite(Suite::Integrals, &cfg);
        assert!(r.iter().all(|r| r.tol == 1e-30));
    }
}
