//! Special values of the Dirichlet beta function `β(s) = Σ (−1)^m/(2m+1)^s`.
//!
//! * [`betavalues`]: exact `β(2k+1)` as a rational multiple of `π^{2k+1}`,
//!   an accelerated alternating-series oracle, and decimal rendering.
//! * [`quadrature`]: `β(2k)` from its integral over `[0, 1/2]` of
//!   `E_{2k−1}(t)·sec(πt)`, and the auxiliary integrals `I(k,m)`, `J(k,m)`.
//! * [`telescope`]: the telescoping partial sums and endpoint-extended
//!   functions behind both results.
//! * [`eulerpoly`] and [`exact`]: the exact Euler/Bernoulli machinery.

pub mod betavalues;
pub mod cli;
pub mod error;
pub mod eulerpoly;
pub mod exact;
pub mod hpreal;
pub mod par;
pub mod quadrature;
pub mod telescope;

pub use error::{Error, Result};
pub use par::Execution;
