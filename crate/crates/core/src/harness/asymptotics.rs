use super::report::{params, CheckReport};
use crate::error::{Error, Result};
use crate::ferrers::ferrers_p_reduced;
use crate::poly::hermite_h;
use crate::special::{bessel_j, gamma, pochhammer, DEFAULT_TOL};

/// Residual ratio r(2n)/r(n) for the Mehler–Heine limit.
pub const MEHLER_HEINE_BRACKET: (f64, f64) = (0.4, 0.6);
/// Residual ratio per decade of λ for the Hermite limit.
pub const HERMITE_BRACKET: (f64, f64) = (0.08, 0.13);
/// Residual ratio r(2λ)/r(λ) for the large-λ Gegenbauer limit.
pub const LARGE_LAMBDA_BRACKET: (f64, f64) = (0.2, 0.3);

/// |n^λ P_{n+λ}^{-λ}(1 - z²/(2n²)) - J_λ(z)|.
pub fn mehler_heine_residual(lambda: f64, z: f64, n: usize) -> Result<f64> {
    if n < 4 || !(z >= 0.0 && z < 4.0) || !(lambda > -0.5) {
        return Err(Error::domain(format!(
            "Mehler-Heine needs n >= 4, 0 <= z < 4, lambda > -1/2; got n = {n}, z = {z}, lambda = {lambda}"
        )));
    }
    let nf = n as f64;
    let x = 1.0 - z * z / (2.0 * nf * nf);
    // n^λ (1-x²)^{λ/2} = (z √(1 - z²/(4n²)))^λ, finite at z = 0
    let w = z * (1.0 - z * z / (4.0 * nf * nf)).sqrt();
    let lhs = w.powf(lambda) / (2f64.powf(lambda) * gamma(lambda + 1.0)?)
        * ferrers_p_reduced(n, lambda, x);
    let j = bessel_j(lambda, z, DEFAULT_TOL)?.value;
    Ok((lhs - j).abs())
}

/// |n!/(λ+½)^{n/2} C_n^{λ+½}(x/√(λ+½)) - H_n(x)|.
///
/// The scaled left side equals 2^λ Γ(λ+1) (2λ+1)_n (λ+½)^{-n/2} (1-y²)^{-λ/2} P_{n+λ}^{-λ}(y)
/// at y = x/√(λ+½); the reduced form removes the (1-y²)^{λ/2} underflow.
pub fn hermite_limit_residual(n: usize, x: f64, lambda: f64) -> Result<f64> {
    if n > 8 || !(lambda >= 10.0) {
        return Err(Error::domain(format!(
            "Hermite limit needs n <= 8 and lambda >= 10; got n = {n}, lambda = {lambda}"
        )));
    }
    let s = lambda + 0.5;
    let y = x / s.sqrt();
    if !(y.abs() < 1.0) {
        return Err(Error::domain(format!("scaled argument {y} leaves (-1, 1)")));
    }
    let lhs = pochhammer(2.0 * lambda + 1.0, n) / s.powf(n as f64 / 2.0)
        * ferrers_p_reduced(n, lambda, y);
    Ok((lhs - hermite_h(n, x)).abs())
}

/// |n!/(2λ+1)_n C_n^{λ+½}(x) - x^n (1 - n(n-1)(1-x²)/(4x²λ))|, which is O(1/λ²).
pub fn gegenbauer_large_lambda_residual(n: usize, x: f64, lambda: f64) -> Result<f64> {
    if n > 6 || !(x > 0.2 && x < 0.95) || !(lambda >= 50.0) {
        return Err(Error::domain(format!(
            "large-lambda limit needs n <= 6, 0.2 < x < 0.95, lambda >= 50; got n = {n}, x = {x}, lambda = {lambda}"
        )));
    }
    let nf = n as f64;
    let approx =
        x.powi(n as i32) * (1.0 - nf * (nf - 1.0) * (1.0 - x * x) / (4.0 * x * x * lambda));
    Ok((ferrers_p_reduced(n, lambda, x) - approx).abs())
}

fn ratio_report(
    name: &str,
    p: crate::harness::Params,
    coarse: f64,
    fine: f64,
    bracket: (f64, f64),
) -> CheckReport {
    let center = 0.5 * (bracket.0 + bracket.1);
    let half = 0.5 * (bracket.1 - bracket.0);
    let ratio = fine / coarse;
    CheckReport::new(name, p, ratio, center, half / center, 0.0).with_note(format!(
        "residuals {coarse:.6e} -> {fine:.6e}, bracket [{}, {}]",
        bracket.0, bracket.1
    ))
}

/// Ratio of Mehler–Heine residuals at 2n and n.
pub fn mehler_heine_ratio_check(lambda: f64, z: f64, n: usize) -> Result<CheckReport> {
    let coarse = mehler_heine_residual(lambda, z, n)?;
    let fine = mehler_heine_residual(lambda, z, 2 * n)?;
    let p = params(&[("lambda", lambda), ("z", z), ("n", n as f64)]);
    Ok(ratio_report(
        "asymptotics/mehler_heine",
        p,
        coarse,
        fine,
        MEHLER_HEINE_BRACKET,
    ))
}

/// Ratio of Hermite-limit residuals at 10λ and λ.
pub fn hermite_ratio_check(n: usize, x: f64, lambda: f64) -> Result<CheckReport> {
    let coarse = hermite_limit_residual(n, x, lambda)?;
    let fine = hermite_limit_residual(n, x, 10.0 * lambda)?;
    let p = params(&[("n", n as f64), ("x", x), ("lambda", lambda)]);
    Ok(ratio_report(
        "asymptotics/hermite",
        p,
        coarse,
        fine,
        HERMITE_BRACKET,
    ))
}

/// Ratio of large-λ residuals at 2λ and λ.
pub fn large_lambda_ratio_check(n: usize, x: f64, lambda: f64) -> Result<CheckReport> {
    let coarse = gegenbauer_large_lambda_residual(n, x, lambda)?;
    let fine = gegenbauer_large_lambda_residual(n, x, 2.0 * lambda)?;
    let p = params(&[("n", n as f64), ("x", x), ("lambda", lambda)]);
    Ok(ratio_report(
        "asymptotics/large_lambda",
        p,
        coarse,
        fine,
        LARGE_LAMBDA_BRACKET,
    ))
}
