//! Ferrers functions of the first and second kind, classical orthogonal
//! polynomials, and a harness of numerical identity checks built on them.

pub mod error;
pub mod ferrers;
pub mod harness;
pub mod poly;
pub mod special;

pub use error::{Error, Result};
pub use ferrers::{
    EvalPath, FerrersEval, FerrersPoint, LegendreQArgs, Normalization, WeightedPolyForm,
};
pub use harness::{CheckReport, Params, QuadratureKind, QuadratureRule, Suite, SuiteConfig};
pub use poly::{ConnectionExpansion, GegenbauerParams, LinearizationExpansion, PolynomialCoeffs};
pub use special::{HypergeometricSpec, SeriesResult, SignedLogValue};
