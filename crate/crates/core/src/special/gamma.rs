use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters closer than this to an integer are treated as that integer.
pub const SNAP_EPS: f64 = 1e-12;

/// `log|v|` together with the sign of `v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedLogValue {
    pub log_abs: f64,
    pub sign: i8,
}

impl SignedLogValue {
    pub const ZERO: SignedLogValue = SignedLogValue {
        log_abs: f64::NEG_INFINITY,
        sign: 0,
    };

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else {
            SignedLogValue {
                log_abs: v.abs().ln(),
                sign: if v > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn value(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_abs.exp()
        }
    }

    pub fn mul(self, other: SignedLogValue) -> SignedLogValue {
        if self.sign == 0 || other.sign == 0 {
            return Self::ZERO;
        }
        SignedLogValue {
            log_abs: self.log_abs + other.log_abs,
            sign: self.sign * other.sign,
        }
    }

    pub fn div(self, other: SignedLogValue) -> SignedLogValue {
        if self.sign == 0 {
            return Self::ZERO;
        }
        SignedLogValue {
            log_abs: self.log_abs - other.log_abs,
            sign: self.sign * other.sign,
        }
    }
}

/// Rounds `x` to the nearest integer when it lies within [`SNAP_EPS`] of it.
pub fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= SNAP_EPS {
        r
    } else {
        x
    }
}

/// `Some(m)` when `x` (after snapping) equals `-m` for some `m >= 0`.
pub fn nonpositive_integer(x: f64) -> Option<usize> {
    let s = snap(x);
    if s <= 0.0 && s == s.round() && s > -1e15 {
        Some((-s) as usize)
    } else {
        None
    }
}

pub fn is_integer(x: f64) -> bool {
    let s = snap(x);
    s == s.round()
}

/// sin(πx) without the loss of accuracy that `(PI * x).sin()` suffers for large |x|.
pub fn sin_pi(x: f64) -> f64 {
    if x == x.round() {
        return 0.0;
    }
    let mut r = x % 2.0;
    if r < 0.0 {
        r += 2.0;
    }
    // r in [0, 2)
    let (r, s) = if r > 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    s * (PI * r).sin()
}

pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_log(x: f64) -> f64 {
    // x >= 0.5
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + a.ln()
}

fn factorial_exact(n: usize) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// `log|Γ(x)|` and the sign of `Γ(x)`.
pub fn log_gamma(x: f64) -> Result<SignedLogValue> {
    if x.is_nan() {
        return Err(Error::domain("log_gamma of NaN"));
    }
    if x <= 0.0 && x == x.round() {
        return Err(Error::pole(format!("gamma pole at x = {x}")));
    }
    if x == x.round() && x > 0.0 && x <= 30.0 {
        return Ok(SignedLogValue {
            log_abs: factorial_exact(x as usize - 1).ln(),
            sign: 1,
        });
    }
    if x >= 0.5 {
        return Ok(SignedLogValue {
            log_abs: lanczos_log(x),
            sign: 1,
        });
    }
    let s = sin_pi(x);
    if s == 0.0 {
        return Err(Error::pole(format!("gamma pole at x = {x}")));
    }
    let rest = lanczos_log(1.0 - x);
    Ok(SignedLogValue {
        log_abs: PI.ln() - s.abs().ln() - rest,
        sign: if s > 0.0 { 1 } else { -1 },
    })
}

pub fn gamma(x: f64) -> Result<f64> {
    Ok(log_gamma(x)?.value())
}

/// 1/Γ(x), which is zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    match log_gamma(x) {
        Ok(v) => f64::from(v.sign) * (-v.log_abs).exp(),
        Err(_) => 0.0,
    }
}

/// Γ(a)/Γ(b) through logarithms.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    let num = log_gamma(a)?;
    match log_gamma(b) {
        Ok(den) => Ok(num.div(den).value()),
        Err(_) => Ok(0.0),
    }
}

/// Rising factorial (a)_n = a(a+1)…(a+n-1).
pub fn pochhammer(a: f64, n: usize) -> f64 {
    let mut p = 1.0;
    for k in 0..n {
        p *= a + k as f64;
    }
    p
}

pub fn factorial(n: usize) -> f64 {
    if n <= 30 {
        factorial_exact(n)
    } else {
        lanczos_log(n as f64 + 1.0).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn spot_values() {
        let v = log_gamma(1.0).unwrap();
        assert_eq!(v.log_abs, 0.0);
        assert_eq!(v.sign, 1);
        assert_relative_eq!(
            log_gamma(0.5).unwrap().log_abs,
            0.572_364_942_924_700_1,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            log_gamma(6.0).unwrap().log_abs,
            120f64.ln(),
            max_relative = 1e-15
        );
    }

    #[test]
    fn reference_values() {
        let cases = [
            (0.1, 2.252_712_651_734_206, 1),
            (-2.5, -0.056_243_716_497_674_05, -1),
            (100.3, 360.514_705_729_058_1, 1),
            (-0.3, 1.464_840_050_857_602_5, -1),
            (1e-5, 11.512_919_692_895_826, 1),
            (169.5, 698.871_574_807_384_2, 1),
        ];
        for (x, l, s) in cases {
            let v = log_gamma(x).unwrap();
            assert!(
                (v.log_abs - l).abs() <= 1e-13 * l.abs().max(1.0),
                "x={x}: {} vs {l}",
                v.log_abs
            );
            assert_eq!(v.sign, s);
        }
    }

    #[test]
    fn poles() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(x), Err(Error::Pole(_))));
        }
        assert_eq!(rgamma(-3.0), 0.0);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(3.0, 4), 360.0);
        assert_eq!(pochhammer(-2.0, 3), 0.0);
    }

    #[test]
    fn sin_pi_exact_at_integers() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_relative_eq!(sin_pi(0.5), 1.0);
        assert_relative_eq!(sin_pi(-0.25), -(0.5f64).sqrt(), max_relative = 1e-15);
        assert_relative_eq!(sin_pi(1e6 + 0.5), 1.0, max_relative = 1e-15);
    }

    proptest! {
        #[test]
        fn pochhammer_matches_gamma_ratio(a in 0.01f64..30.0, n in 0usize..=20) {
            let p = pochhammer(a, n);
            let r = (log_gamma(a + n as f64).unwrap().log_abs - log_gamma(a).unwrap().log_abs).exp();
            prop_assert!((p - r).abs() <= 1e-12 * p.abs());
        }

        #[test]
        fn recurrence_gamma(x in -20.0f64..150.0) {
            prop_assume!((x - x.round()).abs() > 1e-3);
            let g0 = log_gamma(x).unwrap();
            let g1 = log_gamma(x + 1.0).unwrap();
            let lhs = g1.log_abs - g0.log_abs;
            prop_assert!((lhs - x.abs().ln()).abs() <= 1e-12 * g1.log_abs.abs().max(1.0));
            prop_assert_eq!(g1.sign * g0.sign, if x > 0.0 { 1 } else { -1 });
        }

        #[test]
        fn signed_log_roundtrip(v in -1e100f64..1e100) {
            let s = SignedLogValue::from_value(v);
            prop_assert!((s.value() - v).abs() <= 1e-13 * v.abs());
        }
    }
}
