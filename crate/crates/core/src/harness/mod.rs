mod asymptotics;
mod integrals;
mod kernels;
mod orthogonality;
mod quadrature;
mod report;
mod suites;

pub use asymptotics::*;
pub use integrals::*;
pub use kernels::*;
pub use orthogonality::*;
pub use quadrature::*;
pub use report::*;
pub use suites::*;
