use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::SeriesResult;

pub const MAX_GAUSS_NODES: usize = 500;
pub const TANH_SINH_MAX_LEVEL: usize = 12;

/// Half-width of the tanh-sinh t-range. At t = 6 the distance to the
/// endpoint is about 1e-275, still a normal double.
const T_MAX: f64 = 6.0;

/// Largest double below one.
const ONE_BELOW: f64 = 1.0 - f64::EPSILON / 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadratureKind {
    GaussLegendre,
    TanhSinh,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub kind: QuadratureKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order_or_level: usize,
}

impl QuadratureRule {
    /// ∫_{-1}^{1} f.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    pub fn try_integrate<F: Fn(f64) -> Result<f64>>(&self, f: F) -> Result<f64> {
        let mut s = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(x)?;
        }
        Ok(s)
    }

    /// ∫_a^b f through the affine map of the nodes.
    pub fn integrate_on<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let (c, h) = ((a + b) / 2.0, (b - a) / 2.0);
        h * self.integrate(|x| f(c + h * x))
    }
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

pub fn gauss_legendre_rule(n: usize) -> Result<QuadratureRule> {
    if n == 0 || n > MAX_GAUSS_NODES {
        return Err(Error::domain(format!(
            "Gauss-Legendre needs 1 <= n <= {MAX_GAUSS_NODES}, got {n}"
        )));
    }
    let nf = n as f64;
    let mut pos = Vec::with_capacity(n.div_ceil(2));
    for i in 0..n.div_ceil(2) {
        if n % 2 == 1 && i == n / 2 {
            let (_, dp) = legendre_with_derivative(n, 0.0);
            pos.push((0.0, 2.0 / (dp * dp)));
            continue;
        }
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut steps = 0;
        loop {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            steps += 1;
            if dx.abs() <= 1e-16 {
                break;
            }
            if steps > 100 {
                return Err(Error::convergence(format!(
                    "Newton iteration for node {i} of P_{n} did not settle"
                )));
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        pos.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    let mut pairs: Vec<(f64, f64)> = Vec::with_capacity(n);
    for &(x, w) in &pos {
        pairs.push((x, w));
        if x != 0.0 {
            pairs.push((-x, w));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(QuadratureRule {
        kind: QuadratureKind::GaussLegendre,
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
        order_or_level: n,
    })
}

/// One tanh-sinh node on (-1, 1): abscissa, 1-x, 1+x and dx/dt.
fn ts_node(t: f64) -> (f64, f64, f64, f64) {
    let u = FRAC_PI_2 * t.sinh();
    let ch = u.cosh();
    let small = (-u.abs()).exp() / ch;
    let x = u.tanh().clamp(-ONE_BELOW, ONE_BELOW);
    let (omx, opx) = if u >= 0.0 {
        (small, 1.0 + x)
    } else {
        (1.0 - x, small)
    };
    (x, omx, opx, FRAC_PI_2 * t.cosh() / (ch * ch))
}

/// Level-doubling trapezoid sums of `term(x, 1-x, 1+x)` in the tanh-sinh variable.
fn tanh_sinh_core<F>(term: F, tol: f64) -> Result<SeriesResult>
where
    F: Fn(f64, f64, f64) -> Result<f64>,
{
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    let mut evals = 0;
    let mut prev = f64::NAN;
    for level in 0..=TANH_SINH_MAX_LEVEL {
        let h = 0.5f64.powi(level as i32);
        let (first, stride) = if level == 0 { (0, 1) } else { (1, 2) };
        let mut k = first;
        while k as f64 * h <= T_MAX {
            let t = k as f64 * h;
            let ts: &[f64] = if k == 0 { &[0.0] } else { &[t, -t] };
            for &tt in ts {
                let (x, omx, opx, dxdt) = ts_node(tt);
                if dxdt == 0.0 {
                    continue;
                }
                let v = term(x, omx, opx)? * dxdt;
                evals += 1;
                if !v.is_finite() {
                    return Err(Error::convergence(format!(
                        "non-finite integrand near x = {x}"
                    )));
                }
                sum += v;
                abs_sum += v.abs();
            }
            k += stride;
        }
        let value = h * sum;
        let diff = (value - prev).abs();
        if level >= 3 && diff <= tol * value.abs().max(h * abs_sum) {
            return Ok(SeriesResult {
                value,
                terms_used: evals,
                converged: true,
                last_term_magnitude: diff,
            });
        }
        prev = value;
    }
    Err(Error::convergence(format!(
        "tanh-sinh did not reach tolerance {tol:e} by level {TANH_SINH_MAX_LEVEL}"
    )))
}

/// ∫_a^b f(x) dx, f with at worst integrable algebraic endpoint singularities.
///
/// Nodes that round onto an endpoint are dropped, which limits the accuracy
/// for singular integrands to the mass within one ulp of the endpoint. Use
/// [`tanh_sinh_integrate_complement`] when f can use the endpoint distance.
pub fn tanh_sinh_integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<SeriesResult> {
    tanh_sinh_integrate_complement(
        |x, xc| {
            let inside = if xc < 0.0 { x < b } else { x > a };
            if inside {
                f(x)
            } else {
                0.0
            }
        },
        a,
        b,
        tol,
    )
}

/// ∫_a^b f(x, xc) dx, where xc is the signed distance to the nearer endpoint:
/// xc = x - a > 0 in the lower half and xc = x - b < 0 in the upper half.
pub fn tanh_sinh_integrate_complement<F>(f: F, a: f64, b: f64, tol: f64) -> Result<SeriesResult>
where
    F: Fn(f64, f64) -> f64,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "tanh-sinh needs finite a < b, got ({a}, {b})"
        )));
    }
    let h = (b - a) / 2.0;
    let r = tanh_sinh_core(
        |x, omx, opx| {
            Ok(if x >= 0.0 {
                f(b - h * omx, -h * omx)
            } else {
                f(a + h * opx, h * opx)
            })
        },
        tol,
    )?;
    Ok(r.scaled(h))
}

/// ∫_{-1}^{1} (1-x)^α (1+x)^β g(x) dx, the weight built from exact complements.
pub fn tanh_sinh_jacobi<F>(g: F, alpha: f64, beta: f64, tol: f64) -> Result<SeriesResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::domain(format!(
            "endpoint exponents ({alpha}, {beta}) are not integrable"
        )));
    }
    tanh_sinh_core(
        |x, omx, opx| {
            let w = omx.powf(alpha) * opx.powf(beta);
            if w == 0.0 {
                return Ok(0.0);
            }
            Ok(w * g(x)?)
        },
        tol,
    )
}

/// Tolerance used by the harness for tanh-sinh integrals.
pub(crate) const HARNESS_TS_TOL: f64 = 1e-13;

/// ∫_{-1}^{1} f for f behaving like (1-x)^α (1+x)^β times a smooth factor.
///
/// Non-negative integer exponents go to Gauss–Legendre with `gl_nodes`
/// nodes; otherwise tanh-sinh integrates the weight exactly and evaluates
/// f/weight at the node.
pub(crate) fn integrate_endpoint_weighted<F>(
    f: F,
    alpha: f64,
    beta: f64,
    gl_nodes: usize,
) -> Result<(f64, QuadratureKind)>
where
    F: Fn(f64) -> Result<f64>,
{
    let whole = |e: f64| e >= 0.0 && e == e.round();
    if whole(alpha) && whole(beta) {
        let rule = gauss_legendre_rule(gl_nodes.min(MAX_GAUSS_NODES))?;
        return Ok((rule.try_integrate(f)?, QuadratureKind::GaussLegendre));
    }
    let r = tanh_sinh_jacobi(
        |x| Ok(f(x)? / ((1.0 - x).powf(alpha) * (1.0 + x).powf(beta))),
        alpha,
        beta,
        HARNESS_TS_TOL,
    )?;
    Ok((r.value, QuadratureKind::TanhSinh))
}

impl QuadratureKind {
    pub fn name(self) -> &'static str {
        match self {
            QuadratureKind::GaussLegendre => "gauss_legendre",
            QuadratureKind::TanhSinh => "tanh_sinh",
        }
    }
}
