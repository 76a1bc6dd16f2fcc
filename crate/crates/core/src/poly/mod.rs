//! Classical orthogonal polynomials, monomial coefficient algebra, and
//! Gegenbauer connection and linearization coefficients.
mod classical;
mod coeffs;
mod expansion;

pub use classical::{
    chebyshev_t, chebyshev_u, gegenbauer_c, gegenbauer_coeffs, gegenbauer_series, hermite_h,
    hermite_recurrence, jacobi_p, jacobi_p_recurrence, legendre_p, meixner_m, GegenbauerParams,
};
pub use coeffs::{PolynomialCoeffs, MAX_COEFF_DEGREE};
pub use expansion::{
    connection_expand, linearization_expand, ConnectionExpansion, LinearizationExpansion,
};
