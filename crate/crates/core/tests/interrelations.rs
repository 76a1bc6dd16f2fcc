//! C_n^{½-N} through Ferrers functions of integer order N.

use std::f64::consts::PI;

use ferrers_core::ferrers::{ferrers_p_value, ferrers_q_value};
use ferrers_core::poly::gegenbauer_c;
use ferrers_core::special::{factorial, gamma};

const XS: [f64; 3] = [-0.6, 0.1, 0.6];

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn weight(big_n: usize, x: f64) -> f64 {
    ((1.0 - x) * (1.0 + x)).powf(big_n as f64 / 2.0)
}

fn prefactor(big_n: usize) -> f64 {
    2f64.powi(big_n as i32) / PI.sqrt() * gamma(big_n as f64 + 0.5).unwrap()
}

/// Q_ν^N at integer N, which `ferrers_q` refuses: symmetric difference in the order,
/// Richardson-extrapolated from steps h and h/2.
fn q_integer_order(nu: f64, order: usize, x: f64) -> f64 {
    let m = order as f64;
    let sym = |h: f64| {
        0.5 * (ferrers_q_value(nu, m + h, x).unwrap() + ferrers_q_value(nu, m - h, x).unwrap())
    };
    let h = 1e-3;
    (4.0 * sym(h / 2.0) - sym(h)) / 3.0
}

fn assert_rel(a: f64, b: f64, tol: f64, what: &str) {
    assert!(
        (a - b).abs() <= tol * b.abs().max(1e-12),
        "{what}: {a} vs {b}"
    );
}

#[test]
fn gegenbauer_from_first_kind_pair() {
    for big_n in 1..=2usize {
        let nn = big_n as f64;
        for n in 0..2 * big_n {
            for &x in &XS {
                let d = n as f64 - nn;
                let s = ferrers_p_value(d, -nn, x).unwrap()
                    + sign(n) * ferrers_p_value(d, -nn, -x).unwrap();
                let lhs = 0.5 * prefactor(big_n) * weight(big_n, x) * s;
                assert_rel(
                    lhs,
                    gegenbauer_c(n, 0.5 - nn, x),
                    1e-9,
                    &format!("N={big_n} n={n} x={x}"),
                );
            }
        }
    }
}

#[test]
fn gegenbauer_from_first_and_second_kind() {
    for big_n in 1..=2usize {
        let nn = big_n as f64;
        for n in 0..2 * big_n {
            for &x in &XS {
                let d = n as f64 - nn;
                let c = sign(n + big_n) / (factorial(n) * factorial(2 * big_n - n - 1));
                let s = ferrers_p_value(d, -nn, x).unwrap() + c * q_integer_order(d, big_n, x);
                let lhs = prefactor(big_n) * weight(big_n, x) * s;
                assert_rel(
                    lhs,
                    gegenbauer_c(n, 0.5 - nn, x),
                    1e-9,
                    &format!("N={big_n} n={n} x={x}"),
                );
            }
        }
    }
}

#[test]
fn gegenbauer_from_positive_order() {
    for big_n in 1..=2usize {
        let nn = big_n as f64;
        for n in [2 * big_n, 2 * big_n + 2] {
            for &x in &XS {
                // the displayed relation needs an extra (-1)^N
                let lhs = sign(big_n) * prefactor(big_n) * factorial(n - 2 * big_n) / factorial(n)
                    * weight(big_n, x)
                    * ferrers_p_value(n as f64 - nn, nn, x).unwrap();
                assert_rel(
                    lhs,
                    gegenbauer_c(n, 0.5 - nn, x),
                    1e-9,
                    &format!("N={big_n} n={n} x={x}"),
                );
            }
        }
    }
}

#[test]
fn positive_order_sign_matters_for_odd_order() {
    let x = 0.6;
    let lhs = prefactor(1) * factorial(0) / factorial(2)
        * weight(1, x)
        * ferrers_p_value(1.0, 1.0, x).unwrap();
    let c = gegenbauer_c(2, -0.5, x);
    assert!((lhs + c).abs() < 1e-12 && c.abs() > 0.1);
}
