//! Gamma machinery, hypergeometric series and Bessel J.

mod bessel;
mod dd;
mod gamma;
mod hypergeometric;

pub use bessel::bessel_j;
pub use gamma::{
    cos_pi, factorial, gamma, gamma_ratio, is_integer, log_gamma, nonpositive_integer, pochhammer,
    rgamma, sin_pi, snap, SignedLogValue, SNAP_EPS,
};
pub use hypergeometric::{
    gauss_2f1, gauss_2f1_with_max_terms, hyp_pfq, HypergeometricSpec, SeriesResult,
    DEFAULT_MAX_TERMS, DEFAULT_TOL, GAUSS_Z_LIMIT,
};
