//! Stirling triangles and Bernoulli sequences, memoized process-wide.

mod bernoulli;
mod stirling;

pub use bernoulli::{
    bernoulli_first, bernoulli_first_by_recurrence, bernoulli_polynomial, bernoulli_second,
    bernoulli_second_by_series, bernoulli_second_by_stirling_sum, cache, lambda_coeff,
    BernoulliCache, BernoulliKind,
};
pub use stirling::{
    stirling1, stirling1_unsigned, stirling2, triangle, StirlingKind, StirlingTriangle,
};
