use serde::{Deserialize, Serialize};

use super::coeffs::PolynomialCoeffs;
use crate::error::{Error, Result};
use crate::special::{
    factorial, gamma_ratio, gauss_2f1, hyp_pfq, nonpositive_integer, pochhammer,
    HypergeometricSpec, DEFAULT_MAX_TERMS, DEFAULT_TOL,
};

/// Degree and parameter of a Gegenbauer polynomial C_n^λ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GegenbauerParams {
    pub lambda: f64,
    pub n: usize,
}

impl GegenbauerParams {
    pub fn new(n: usize, lambda: f64) -> Self {
        GegenbauerParams { lambda, n }
    }

    pub fn eval(&self, x: f64) -> f64 {
        gegenbauer_c(self.n, self.lambda, x)
    }

    pub fn coeffs(&self) -> PolynomialCoeffs {
        gegenbauer_coeffs(self.n, self.lambda)
    }
}

/// Jacobi polynomial P_n^{(α,β)}(x) from its terminating Gauss series.
///
/// For x < 0 the series is taken at -x with α and β exchanged, which keeps
/// the series argument in [0, ½].
pub fn jacobi_p(n: usize, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if let Some(p) = nonpositive_integer(alpha + 1.0) {
        if p < n {
            return Err(Error::domain(format!(
                "(alpha+1)_n prefactor pole: alpha = {alpha}, n = {n}"
            )));
        }
    }
    if n == 0 {
        return Ok(1.0);
    }
    let reflect = x < 0.0 && nonpositive_integer(beta + 1.0).is_none();
    let (a, b, t) = if reflect {
        (beta, alpha, -x)
    } else {
        (alpha, beta, x)
    };
    let nf = n as f64;
    let s = gauss_2f1(-nf, nf + a + b + 1.0, a + 1.0, (1.0 - t) / 2.0, DEFAULT_TOL)?;
    let v = pochhammer(a + 1.0, n) / factorial(n) * s.value;
    Ok(if reflect && n % 2 == 1 { -v } else { v })
}

/// Jacobi polynomial by the three-term recurrence in n.
pub fn jacobi_p_recurrence(n: usize, alpha: f64, beta: f64, x: f64) -> f64 {
    let mut p0 = 1.0;
    if n == 0 {
        return p0;
    }
    let mut p1 = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let kf = k as f64;
        let s = 2.0 * kf + alpha + beta;
        let a = 2.0 * kf * (kf + alpha + beta) * (s - 2.0);
        let b = (s - 1.0) * (s * (s - 2.0) * x + alpha * alpha - beta * beta);
        let c = 2.0 * (kf + alpha - 1.0) * (kf + beta - 1.0) * s;
        let p2 = (b * p1 - c * p0) / a;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Gegenbauer polynomial C_n^λ(x) by its three-term recurrence; any real λ.
pub fn gegenbauer_c(n: usize, lambda: f64, x: f64) -> f64 {
    let mut c0 = 1.0;
    if n == 0 {
        return c0;
    }
    let mut c1 = 2.0 * lambda * x;
    for k in 2..=n {
        let kf = k as f64;
        let c2 = (2.0 * (kf + lambda - 1.0) * x * c1 - (kf + 2.0 * lambda - 2.0) * c0) / kf;
        c0 = c1;
        c1 = c2;
    }
    c1
}

/// Gegenbauer polynomial from the terminating Gauss series with a gamma-ratio
/// prefactor; requires 2λ ∉ -N0.
pub fn gegenbauer_series(n: usize, lambda: f64, x: f64) -> Result<f64> {
    if nonpositive_integer(2.0 * lambda).is_some() {
        return Err(Error::pole(format!(
            "Gamma(2 lambda) pole at lambda = {lambda}"
        )));
    }
    let t = x.abs();
    let nf = n as f64;
    let pre = gamma_ratio(2.0 * lambda + nf, 2.0 * lambda)? / factorial(n);
    let s = gauss_2f1(
        -nf,
        2.0 * lambda + nf,
        lambda + 0.5,
        (1.0 - t) / 2.0,
        DEFAULT_TOL,
    )?;
    let v = pre * s.value;
    Ok(if x < 0.0 && n % 2 == 1 { -v } else { v })
}

/// Monomial coefficients of C_n^λ from the coefficient form of the recurrence.
pub fn gegenbauer_coeffs(n: usize, lambda: f64) -> PolynomialCoeffs {
    let mut c0 = PolynomialCoeffs::constant(1.0);
    if n == 0 {
        return c0;
    }
    let mut c1 = PolynomialCoeffs::new(vec![0.0, 2.0 * lambda]);
    for k in 2..=n {
        let kf = k as f64;
        let c2 = c1
            .mul_x()
            .scale(2.0 * (kf + lambda - 1.0) / kf)
            .add(&c0.scale(-(kf + 2.0 * lambda - 2.0) / kf));
        c0 = c1;
        c1 = c2;
    }
    c1
}

/// Hermite polynomial H_n(x): terminating 2F0 for x ≠ 0, recurrence at 0.
pub fn hermite_h(n: usize, x: f64) -> f64 {
    if x == 0.0 {
        return hermite_recurrence(n, x);
    }
    let nf = n as f64;
    let spec = HypergeometricSpec::new(&[-nf / 2.0, (1.0 - nf) / 2.0], &[], -1.0 / (x * x));
    let s = hyp_pfq(&spec, DEFAULT_TOL, DEFAULT_MAX_TERMS).expect("Hermite 2F0 always terminates");
    (2.0 * x).powi(n as i32) * s.value
}

pub fn hermite_recurrence(n: usize, x: f64) -> f64 {
    let mut h0 = 1.0;
    if n == 0 {
        return h0;
    }
    let mut h1 = 2.0 * x;
    for k in 1..n {
        let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Meixner polynomial M_n(x; β, c) = 2F1(-n, -x; β; 1 - 1/c).
pub fn meixner_m(n: usize, x: f64, beta: f64, c: f64) -> Result<f64> {
    if c == 0.0 || c == 1.0 {
        return Err(Error::domain(format!(
            "Meixner parameter c = {c} not allowed"
        )));
    }
    Ok(gauss_2f1(-(n as f64), -x, beta, 1.0 - 1.0 / c, DEFAULT_TOL)?.value)
}

pub fn legendre_p(n: usize, x: f64) -> f64 {
    let mut p0 = 1.0;
    if n == 0 {
        return p0;
    }
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    let mut t0 = 1.0;
    if n == 0 {
        return t0;
    }
    let mut t1 = x;
    for _ in 1..n {
        let t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    t1
}

pub fn chebyshev_u(n: usize, x: f64) -> f64 {
    let mut u0 = 1.0;
    if n == 0 {
        return u0;
    }
    let mut u1 = 2.0 * x;
    for _ in 1..n {
        let u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    u1
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_p(0, 0.3, -0.2, 0.7).unwrap(), 1.0);
        assert_relative_eq!(
            jacobi_p(2, 1.0, 0.0, 1.0).unwrap(),
            3.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            jacobi_p(2, 0.5, -0.5, 0.2).unwrap(),
            -0.165,
            max_relative = 1e-14
        );
        assert!(matches!(jacobi_p(3, -2.0, 0.5, 0.1), Err(Error::Domain(_))));
        assert!(jacobi_p(1, -2.0, 0.5, 0.1).is_ok());
    }

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer_c(0, -0.7, 0.3), 1.0);
        assert_relative_eq!(gegenbauer_c(3, 1.0, 1.0), 4.0, max_relative = 1e-15);
        assert_relative_eq!(gegenbauer_c(2, 1.5, 0.5), 0.375, max_relative = 1e-15);
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_h(0, 2.2), 1.0);
        assert_relative_eq!(hermite_h(3, 1.0), -4.0, max_relative = 1e-15);
        assert_eq!(hermite_h(2, 0.0), -2.0);
    }

    #[test]
    fn meixner_examples() {
        assert_eq!(meixner_m(0, 3.0, 1.0, 0.5).unwrap(), 1.0);
        assert_eq!(meixner_m(2, 0.0, 1.5, 0.3).unwrap(), 1.0);
        assert_relative_eq!(
            meixner_m(1, 2.0, 1.0, 0.5).unwrap(),
            -1.0,
            max_relative = 1e-15
        );
        assert!(matches!(meixner_m(1, 2.0, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(meixner_m(1, 2.0, 1.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(
            meixner_m(3, 2.5, -1.0, 0.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn legendre_chebyshev_examples() {
        assert_relative_eq!(legendre_p(2, 0.5), -0.125, max_relative = 1e-15);
        assert_relative_eq!(
            chebyshev_t(3, (PI / 5.0).cos()),
            (3.0 * PI / 5.0).cos(),
            max_relative = 1e-14
        );
        assert_relative_eq!(chebyshev_u(1, 0.4), 0.8, max_relative = 1e-15);
    }

    #[test]
    fn coeff_examples() {
        assert_eq!(gegenbauer_coeffs(1, 2.0).coeffs, vec![0.0, 4.0]);
        assert_eq!(gegenbauer_coeffs(2, 1.0).coeffs, vec![-1.0, 0.0, 4.0]);
        assert_eq!(gegenbauer_coeffs(2, -0.5).coeffs, vec![0.5, 0.0, -0.5]);
    }

    #[test]
    fn series_matches_recurrence() {
        let xs = [-0.9, -0.7, -0.5, -0.3, -0.1, 0.0, 0.1, 0.3, 0.5, 0.7, 0.9];
        for &lam in &[-0.3, 0.5, 1.0, 2.7] {
            for n in 0..=20 {
                for &x in &xs {
                    let r = gegenbauer_c(n, lam, x);
                    let s = gegenbauer_series(n, lam, x).unwrap();
                    let scale = gegenbauer_c(n, lam, 1.0).abs().max(1.0);
                    assert!(
                        (r - s).abs() <= 1e-10 * r.abs().max(1e-6 * scale),
                        "lam={lam} n={n} x={x}: {r} vs {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_series_matches_recurrence() {
        for &(a, b) in &[(0.0, 0.0), (0.5, -0.5), (1.3, 2.1), (-0.4, 0.7)] {
            for n in 0..=30 {
                for i in 0..=20 {
                    let x = -1.0 + 0.1 * i as f64;
                    let r = jacobi_p_recurrence(n, a, b, x);
                    let s = jacobi_p(n, a, b, x).unwrap();
                    let scale = jacobi_p_recurrence(n, a, b, 1.0).abs().max(1.0);
                    assert!(
                        (r - s).abs() <= 1e-11 * r.abs().max(1e-6 * scale),
                        "a={a} b={b} n={n} x={x}: {r} vs {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn gegenbauer_is_symmetric_jacobi() {
        for &lam in &[0.3, 1.0, 2.5] {
            for n in 0..=15 {
                for &x in &[-0.8, -0.2, 0.35, 0.9] {
                    let c = gegenbauer_c(n, lam, x);
                    let j = pochhammer(2.0 * lam, n) / pochhammer(lam + 0.5, n)
                        * jacobi_p(n, lam - 0.5, lam - 0.5, x).unwrap();
                    assert!(
                        close(j, c, 1e-11) || (j - c).abs() < 1e-13,
                        "lam={lam} n={n} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn quadratic_transformations() {
        for &lam in &[0.3, 1.2, 2.0] {
            for n in 0..=8 {
                for &x in &[-0.7, 0.2, 0.55, 0.9] {
                    let y = 2.0 * x * x - 1.0;
                    let even = pochhammer(lam, n) / pochhammer(0.5, n)
                        * jacobi_p(n, lam - 0.5, -0.5, y).unwrap();
                    let c2n = gegenbauer_c(2 * n, lam, x);
                    assert!(
                        (even - c2n).abs() <= 1e-10 * c2n.abs().max(1e-8),
                        "even lam={lam} n={n} x={x}"
                    );
                    let odd = pochhammer(lam, n + 1) / pochhammer(0.5, n + 1)
                        * x
                        * jacobi_p(n, lam - 0.5, 0.5, y).unwrap();
                    let c2n1 = gegenbauer_c(2 * n + 1, lam, x);
                    assert!(
                        (odd - c2n1).abs() <= 1e-10 * c2n1.abs().max(1e-8),
                        "odd lam={lam} n={n} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn meixner_gegenbauer_bridge() {
        for &lam in &[0.4, 1.2] {
            for n in 0..=8 {
                for &w in &[-0.5, 0.3, 0.8] {
                    let c = gegenbauer_c(n, lam, w);
                    let m = pochhammer(2.0 * lam, n) / factorial(n)
                        * meixner_m(n, -2.0 * lam - n as f64, lam + 0.5, 2.0 / (1.0 + w)).unwrap();
                    assert!(
                        (m - c).abs() <= 1e-10 * c.abs().max(1e-8),
                        "lam={lam} n={n} w={w}: {m} vs {c}"
                    );
                }
            }
        }
    }

    #[test]
    fn hermite_matches_recurrence() {
        for n in 0..=12 {
            for i in -20..=20 {
                let x = 0.15 * i as f64;
                let a = hermite_h(n, x);
                let b = hermite_recurrence(n, x);
                let scale = hermite_recurrence(n, x.abs() + 1.0).abs();
                assert!(
                    (a - b).abs() <= 1e-12 * b.abs().max(1e-4 * scale),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn legendre_is_gegenbauer_half() {
        for n in 0..12 {
            for &x in &[-0.9, -0.1, 0.4, 0.77] {
                assert!((legendre_p(n, x) - gegenbauer_c(n, 0.5, x)).abs() < 1e-14);
            }
        }
    }

    proptest! {
        #[test]
        fn parity(n in 0usize..25, lam in -2.0f64..4.0, x in -1.0f64..1.0) {
            let a = gegenbauer_c(n, lam, -x);
            let b = if n % 2 == 0 { 1.0 } else { -1.0 } * gegenbauer_c(n, lam, x);
            prop_assert!((a - b).abs() <= 1e-13 * b.abs().max(1e-300));
        }

        #[test]
        fn coeffs_match_recurrence(n in 0usize..=30, lam in -1.5f64..3.0, x in -1.0f64..1.0) {
            let p = gegenbauer_coeffs(n, lam);
            let a = p.eval(x);
            let b = gegenbauer_c(n, lam, x);
            let scale: f64 = p.coeffs.iter().map(|c| c.abs()).sum();
            prop_assert!((a - b).abs() <= 1e-11 * b.abs().max(1e-4 * scale));
        }

        #[test]
        fn chebyshev_trig(n in 0usize..40, th in 0.01f64..3.13) {
            let x = th.cos();
            prop_assert!((chebyshev_t(n, x) - (n as f64 * th).cos()).abs() < 1e-12);
            let u = ((n as f64 + 1.0) * th).sin() / th.sin();
            prop_assert!((chebyshev_u(n, x) - u).abs() < 1e-11 * (1.0 + u.abs()) / th.sin());
        }
    }
}
