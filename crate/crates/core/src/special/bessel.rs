use super::gamma::{is_integer, log_gamma, nonpositive_integer, snap};
use super::hypergeometric::{hyp_pfq, HypergeometricSpec, SeriesResult, DEFAULT_MAX_TERMS};
use crate::error::{Error, Result};

/// Bessel function of the first kind J_λ(z) for real λ and z.
pub fn bessel_j(lambda: f64, z: f64, tol: f64) -> Result<SeriesResult> {
    let lambda = snap(lambda);
    if nonpositive_integer(lambda + 1.0).is_some() {
        return Err(Error::pole(format!(
            "1/Gamma(lambda+1) pole at lambda = {lambda}"
        )));
    }
    if z == 0.0 {
        return if lambda == 0.0 {
            Ok(SeriesResult::exact(1.0))
        } else if lambda > 0.0 {
            Ok(SeriesResult::exact(0.0))
        } else {
            Err(Error::domain("J_lambda(0) is unbounded for lambda < 0"))
        };
    }
    if z < 0.0 {
        if !is_integer(lambda) {
            return Err(Error::domain(
                "J_lambda(z) is complex for z < 0 and non-integer lambda",
            ));
        }
        let sign = if (lambda as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return bessel_j(lambda, -z, tol).map(|r| r.scaled(sign));
    }

    let spec = HypergeometricSpec::new(&[], &[lambda + 1.0], -z * z / 4.0);
    let series = hyp_pfq(&spec, tol, DEFAULT_MAX_TERMS)?;
    let g = log_gamma(lambda + 1.0)?;
    let pre = f64::from(g.sign) * (lambda * (z / 2.0).ln() - g.log_abs).exp();
    Ok(series.scaled(pre))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn j(l: f64, z: f64) -> f64 {
        bessel_j(l, z, 1e-15).unwrap().value
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn spot_values() {
        assert_eq!(j(0.0, 0.0), 1.0);
        assert!(rel(j(0.5, PI / 2.0), 2.0 / PI) < 1e-14);
        assert!(rel(j(1.0, 1.0), 0.440_050_585_744_933_5) < 1e-14);
    }

    #[test]
    fn reference_values() {
        let cases = [
            (0.0, 30.0, -0.086_367_983_581_040_21),
            (0.3, 25.0, 0.028_287_780_084_076_882),
            (2.5, 20.0, -0.172_580_193_843_876_42),
            (-0.7, 3.0, -0.453_138_600_890_572_8),
            (10.0, 5.0, 0.001_467_802_647_310_474),
            (3.0, -2.0, -0.128_943_249_474_402_05),
            (0.4, 12.5, 0.019_633_327_455_349_457),
        ];
        for (l, z, v) in cases {
            assert!(rel(j(l, z), v) < 1e-10, "J_{l}({z}) = {} vs {v}", j(l, z));
        }
    }

    #[test]
    fn half_order_closed_form_over_range() {
        for i in 1..=60 {
            let z = 0.5 * i as f64;
            let exact = (2.0 / (PI * z)).sqrt() * z.sin();
            assert!(
                (j(0.5, z) - exact).abs() <= 1e-10 * exact.abs().max(1e-2),
                "z={z}"
            );
            let exact_m = (2.0 / (PI * z)).sqrt() * z.cos();
            assert!(
                (j(-0.5, z) - exact_m).abs() <= 1e-10 * exact_m.abs().max(1e-2),
                "z={z}"
            );
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(bessel_j(-1.0, 2.0, 1e-14), Err(Error::Pole(_))));
        assert!(matches!(bessel_j(-3.0, 2.0, 1e-14), Err(Error::Pole(_))));
        assert!(matches!(bessel_j(0.5, -2.0, 1e-14), Err(Error::Domain(_))));
    }

    #[test]
    fn recurrence_in_order() {
        for &z in &[0.7, 4.0, 13.0, 27.0] {
            for &l in &[0.2, 1.0, 3.6] {
                let lhs = j(l - 1.0, z) + j(l + 1.0, z);
                let rhs = 2.0 * l / z * j(l, z);
                assert!(
                    (lhs - rhs).abs() <= 1e-10 * (j(l, z).abs() + 1e-3),
                    "l={l} z={z}"
                );
            }
        }
    }
}
