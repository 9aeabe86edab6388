//! Exact computation of Stirling numbers of both kinds, Bernoulli numbers and
//! polynomials of the first kind, and Bernoulli numbers of the second kind,
//! together with exact checkers for the identities that relate them.
//!
//! Every quantity is an arbitrary-precision integer or a canonical rational;
//! there is no floating point anywhere and no comparison tolerance.
//!
//! Module map:
//!
//! * [`arith`]: exact scalars, factorials, binomials, falling factorials.
//! * [`polynomials`]: polynomials in the monomial and falling-factorial
//!   bases, the difference/derivative operator calculus, truncated power
//!   series.
//! * [`sequences`]: memoized Stirling triangles and Bernoulli caches, each
//!   Bernoulli family with independent cross-check routes.
//! * [`identities`]: one checker per identity, producing [`IdentityReport`]s.

pub mod arith;
mod error;
pub mod identities;
pub mod polynomials;
pub mod sequences;

pub use arith::{binomial, checked_div, factorial, falling_factorial, int, rat, ExactInt, ExactRational};
pub use error::Error;
pub use identities::{
    run_all, Counterexample, IdentityId, IdentityReport, Status, SuiteConfig, Value,
};
pub use polynomials::{Basis, Polynomial, PowerSeries};
pub use sequences::{
    bernoulli_first, bernoulli_polynomial, bernoulli_second, lambda_coeff, stirling1,
    stirling1_unsigned, stirling2, BernoulliCache, BernoulliKind, StirlingKind,
    StirlingTriangle,
};

pub type Result<T, E = Error> = std::result::Result<T, E>;
