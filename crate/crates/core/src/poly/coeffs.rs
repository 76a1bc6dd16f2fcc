use serde::{Deserialize, Serialize};

/// Default cap on degrees produced by coefficient algebra.
pub const MAX_COEFF_DEGREE: usize = 40;

/// Polynomial in the monomial basis, `coeffs[j]` multiplying `x^j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialCoeffs {
    pub coeffs: Vec<f64>,
    pub degree: usize,
}

impl PolynomialCoeffs {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        let degree = coeffs.len() - 1;
        PolynomialCoeffs { coeffs, degree }
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(j: usize) -> Self {
        let mut c = vec![0.0; j + 1];
        c[j] = 1.0;
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        if self.degree == 0 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| j as f64 * c)
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0.0; len];
        for (j, v) in self.coeffs.iter().enumerate() {
            c[j] += v;
        }
        for (j, v) in other.coeffs.iter().enumerate() {
            c[j] += v;
        }
        Self::new(c)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn mul_x(&self) -> Self {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(0.0);
        c.extend_from_slice(&self.coeffs);
        Self::new(c)
    }

    /// Multiplies by `(1 - x^2)^k`.
    pub fn mul_one_minus_x2_pow(&self, k: usize) -> Self {
        let base = Self::new(vec![1.0, 0.0, -1.0]);
        (0..k).fold(self.clone(), |p, _| p.mul(&base))
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.degree]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = PolynomialCoeffs::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree, 1);
        assert_eq!(PolynomialCoeffs::new(vec![]).degree, 0);
        assert!(PolynomialCoeffs::zero().is_zero());
    }

    #[test]
    fn derivative_and_eval() {
        let p = PolynomialCoeffs::new(vec![1.0, -3.0, 0.0, 2.0]);
        assert_eq!(p.eval(2.0), 11.0);
        assert_eq!(p.derivative().coeffs, vec![-3.0, 0.0, 6.0]);
        assert_eq!(p.nth_derivative(4).degree, 0);
        assert!(p.nth_derivative(4).is_zero());
    }

    #[test]
    fn weight_multiplication() {
        let p = PolynomialCoeffs::constant(1.0).mul_one_minus_x2_pow(2);
        assert_eq!(p.coeffs, vec![1.0, 0.0, -2.0, 0.0, 1.0]);
    }

    proptest! {
        #[test]
        fn product_evaluates_pointwise(a in prop::collection::vec(-3.0f64..3.0, 1..6),
                                       b in prop::collection::vec(-3.0f64..3.0, 1..6),
                                       x in -1.0f64..1.0) {
            let pa = PolynomialCoeffs::new(a);
            let pb = PolynomialCoeffs::new(b);
            let lhs = pa.mul(&pb).eval(x);
            let rhs = pa.eval(x) * pb.eval(x);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }

        #[test]
        fn leibniz_rule(a in prop::collection::vec(-2.0f64..2.0, 1..5),
                        b in prop::collection::vec(-2.0f64..2.0, 1..5),
                        x in -1.0f64..1.0) {
            let pa = PolynomialCoeffs::new(a);
            let pb = PolynomialCoeffs::new(b);
            let lhs = pa.mul(&pb).derivative().eval(x);
            let rhs = pa.derivative().eval(x) * pb.eval(x) + pa.eval(x) * pb.derivative().eval(x);
            prop_assert!((lhs - rhs).abs() <= 1e-11 * (1.0 + rhs.abs()));
        }
    }
}
