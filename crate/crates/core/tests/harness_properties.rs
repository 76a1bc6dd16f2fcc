use ferrers_core::ferrers::ferrers_p_value;
use ferrers_core::harness::{
    cd_projector_check, christoffel_darboux_check, closure_projection_check, gauss_legendre_rule,
    orthogonality_check, params, tanh_sinh_jacobi, OrthFamily,
};
use ferrers_core::PolynomialCoeffs;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_reconstructs_polynomials(
        coeffs in prop::collection::vec(-2.0f64..2.0, 1..6),
        mu in -0.45f64..2.0,
        x in -0.9f64..0.9,
    ) {
        let f = PolynomialCoeffs::new(coeffs);
        let r = closure_projection_check(mu, &f, x, f.degree + 2).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn cd_identity_holds_off_grid(mu in 0.0f64..2.0, n in 1usize..7, x in -0.9f64..0.9, y in -0.9f64..0.9) {
        prop_assume!((x - y).abs() > 1e-3);
        let r = christoffel_darboux_check(mu, n, x, y, false, false).unwrap();
        prop_assert!(r.passed, "{:?}", r);
        let c = christoffel_darboux_check(mu, n, x, x, true, false).unwrap();
        prop_assert!(c.passed, "{:?}", c);
    }

    #[test]
    fn cd_projector_is_identity_below_rank(mu in 0.0f64..1.5, n in 2usize..8, x in -0.85f64..0.85, seed in 0u64..1000) {
        let d = (seed as usize) % n;
        let coeffs: Vec<f64> = (0..=d).map(|j| ((seed as f64 + 1.0) * (j as f64 + 1.3)).sin()).collect();
        let r = cd_projector_check(mu, n, &PolynomialCoeffs::new(coeffs), x).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn orthogonality_for_generic_order(mu in -0.9f64..3.0, k in 0usize..6, kp in 0usize..6) {
        let r = orthogonality_check(OrthFamily::FerrersPMu, &params(&[("mu", mu)]), k, kp).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn gauss_and_tanh_sinh_agree_on_integer_orders(m in 0usize..4, k in 0usize..5, kp in 0usize..5) {
        let mu = m as f64;
        let psi = |j: usize, x: f64| ferrers_p_value(j as f64 + mu, -mu, x).unwrap();
        let gl = gauss_legendre_rule(k + kp + 2 * m + 10).unwrap().integrate(|x| psi(k, x) * psi(kp, x));
        let ts = tanh_sinh_jacobi(
            |x| Ok(psi(k, x) * psi(kp, x) / ((1.0 - x) * (1.0 + x)).powf(mu)),
            mu,
            mu,
            1e-14,
        )
        .unwrap()
        .value;
        let scale = (psi(k, 0.3) * psi(kp, 0.3)).abs().max(gl.abs()).max(1e-300);
        prop_assert!((gl - ts).abs() <= 1e-11 * gl.abs().max(scale), "gl={} ts={}", gl, ts);
    }
}
