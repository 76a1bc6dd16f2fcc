use serde::{Deserialize, Serialize};

use super::classical::gegenbauer_c;
use crate::error::{Error, Result};
use crate::special::{factorial, pochhammer};

/// C_n^ν written in the basis C^μ_{n-2k}, k = 0..⌊n/2⌋.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConnectionExpansion {
    pub n: usize,
    pub nu: f64,
    pub mu: f64,
    pub coefficients: Vec<f64>,
}

impl ConnectionExpansion {
    pub fn reconstruct(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, c)| c * gegenbauer_c(self.n - 2 * k, self.mu, x))
            .sum()
    }
}

/// C_m^λ C_n^λ written in the basis C^λ_{m+n-2k}, k = 0..m.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearizationExpansion {
    pub m: usize,
    pub n: usize,
    pub lambda: f64,
    pub coefficients: Vec<f64>,
}

impl LinearizationExpansion {
    pub fn reconstruct(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, b)| b * gegenbauer_c(self.m + self.n - 2 * k, self.lambda, x))
            .sum()
    }
}

pub fn connection_expand(n: usize, nu: f64, mu: f64) -> Result<ConnectionExpansion> {
    if mu == 0.0 {
        return Err(Error::domain("connection coefficients need mu != 0"));
    }
    let coefficients = (0..=n / 2)
        .map(|k| {
            let den = factorial(k) * pochhammer(mu + 1.0, n - k);
            if den == 0.0 {
                return Err(Error::domain(format!(
                    "(mu+1)_(n-k) vanishes: mu = {mu}, n = {n}, k = {k}"
                )));
            }
            let num = (mu + (n - 2 * k) as f64) * pochhammer(nu - mu, k) * pochhammer(nu, n - k);
            Ok(num / (mu * den))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConnectionExpansion {
        n,
        nu,
        mu,
        coefficients,
    })
}

/// Linearization coefficients; the degrees are ordered so that m ≤ n.
pub fn linearization_expand(m: usize, n: usize, lambda: f64) -> Result<LinearizationExpansion> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    let l = lambda;
    let coefficients = (0..=m)
        .map(|k| {
            let s = m + n - 2 * k;
            let den = ((m + n - k) as f64 + l)
                * factorial(k)
                * factorial(m - k)
                * factorial(n - k)
                * pochhammer(l, m + n - k)
                * pochhammer(2.0 * l, s);
            if den == 0.0 {
                return Err(Error::domain(format!(
                    "linearization denominator vanishes: lambda = {l}, m = {m}, n = {n}, k = {k}"
                )));
            }
            let num = (s as f64 + l)
                * factorial(s)
                * pochhammer(l, k)
                * pochhammer(l, m - k)
                * pochhammer(l, n - k)
                * pochhammer(2.0 * l, m + n - k);
            Ok(num / den)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearizationExpansion {
        m,
        n,
        lambda,
        coefficients,
    })
}
