//! Exact binomial transforms, Euler series transformations and mechanical
//! verification of the Simons, Ljunggren and Munarini binomial identities.
//!
//! - [`rational`]: arbitrary-precision rationals
//! - [`poly`]: sparse polynomials in `alpha, beta, q, x, y, z`
//! - [`series`]: truncated power series in `t` with polynomial coefficients
//! - [`transforms`]: binomial transform pair and Euler-type transformations
//! - [`identities`]: the identity suite and its series-based derivations
//! - [`legendre`]: Legendre polynomials, Rodrigues form and binomial sums
//! - [`accel`]: Euler acceleration of alternating series
//! - [`seqfile`]: the plain-text sequence file format

pub mod accel;
pub mod error;
pub mod exec;
pub mod identities;
pub mod legendre;
pub mod poly;
pub mod rational;
pub mod seqfile;
pub mod series;
pub mod transforms;

pub use error::{Error, Result};
pub use exec::Execution;
pub use identities::{IdentityId, IdentityReport, QMode};
pub use poly::{gen_binomial, MPoly, Monomial, Var};
pub use rational::Rat;
pub use series::Series;
pub use transforms::SeqView;
