use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use super::first_kind::ferrers_p_value;
use super::FerrersPoint;
use crate::error::{Error, Result};
use crate::poly::PolynomialCoeffs;
use crate::special::{factorial, log_gamma, pochhammer};

/// (1 - x²)^power · poly(x).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightedPolyForm {
    pub power: f64,
    pub poly: PolynomialCoeffs,
}

impl WeightedPolyForm {
    pub fn new(power: f64, poly: PolynomialCoeffs) -> Self {
        WeightedPolyForm { power, poly }
    }

    /// (s, p) → (s - 1, -2s·x·p + (1 - x²)·p').
    pub fn derivative(&self) -> Self {
        let s = self.power;
        let a = self.poly.mul_x().scale(-2.0 * s);
        let b = self.poly.derivative().mul_one_minus_x2_pow(1);
        WeightedPolyForm {
            power: s - 1.0,
            poly: a.add(&b),
        }
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_divided(x, 0.0)
    }

    /// Value divided by (1 - x²)^shift, with the powers combined first.
    pub fn eval_divided(&self, x: f64, shift: f64) -> f64 {
        let e = self.power - shift;
        let w = if e == 0.0 {
            1.0
        } else {
            ((1.0 - x) * (1.0 + x)).powf(e)
        };
        w * self.poly.eval(x)
    }
}

/// P_{n+μ}^{-μ}(x) from the n-th derivative of (1 - x²)^{μ+n}.
pub fn rodrigues_ferrers_p(n: usize, mu: f64, x: f64) -> Result<f64> {
    FerrersPoint::new(mu + n as f64, -mu, x)?;
    let g = log_gamma(mu + n as f64 + 1.0)?;
    let d = WeightedPolyForm::new(mu + n as f64, PolynomialCoeffs::constant(1.0)).nth_derivative(n);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 } * f64::from(g.sign);
    let pre = (-(mu + n as f64) * LN_2 - g.log_abs).exp();
    Ok(sign * pre * d.eval_divided(x, mu / 2.0))
}

/// Q_{k+n-½}^{n-½}(x) from the k-th derivative of (1 - x²)^{k+n-½}.
pub fn rodrigues_ferrers_q(k: usize, n: usize, x: f64) -> Result<f64> {
    let s = (k + n) as f64 - 0.5;
    FerrersPoint::new(s, n as f64 - 0.5, x)?;
    if 2 * n + k == 0 {
        return Err(Error::pole("(2n+k-1)! has a pole at k = n = 0"));
    }
    let g = log_gamma(s + 1.0)?;
    let d = WeightedPolyForm::new(s, PolynomialCoeffs::constant(1.0)).nth_derivative(k);
    let sign = if (n + k) % 2 == 0 { 1.0 } else { -1.0 };
    let pre = PI * factorial(2 * n + k - 1) / factorial(k) * (-(s + 1.0) * LN_2 - g.log_abs).exp();
    Ok(sign * pre * d.eval_divided(x, n as f64 / 2.0 - 0.25))
}

/// dⁿ/dxⁿ [P_ν^{-μ}(x) / (1 - x²)^{μ/2}] through the order-lowered Ferrers function.
pub fn scaled_derivative(nu: f64, mu: f64, n: usize, x: f64) -> Result<f64> {
    FerrersPoint::new(nu, -mu, x)?;
    let c =
        if n % 2 == 0 { 1.0 } else { -1.0 } * pochhammer(nu + mu + 1.0, n) * pochhammer(mu - nu, n);
    if c == 0.0 {
        return Ok(0.0);
    }
    let p = ferrers_p_value(nu, -mu - n as f64, x)?;
    Ok(c * p / ((1.0 - x) * (1.0 + x)).powf((mu + n as f64) / 2.0))
}
