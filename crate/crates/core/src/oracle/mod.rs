//! Finite-length ground truth for the asymptotic bounds: explicit codes,
//! exact and simulated decoding error probabilities, equidistance-set
//! probabilities and exact Krawtchouk values.
//!
//! Everything here works in `f64` or exact integers, independently of the
//! generic analytic code it is used to check.

mod code;
mod decode;
mod krawtchouk;
mod logbinom;
mod sets;

pub use code::{BinaryCode, DistanceDistribution, MAX_LENGTH};
pub use decode::{
    exact_pe_ml, monte_carlo_pe, reverse_union, McEstimate, Region, ReverseUnion, MAX_EXACT_LENGTH,
    MC_BLOCK, MIN_TRIALS, RNG_NAME,
};
pub use krawtchouk::{krawtchouk_exact, krawtchouk_value, KrawtchoukValue};
pub use sets::{
    conditional_set_logprob, joint_set_logprob, pairwise_set_logprob, PairwiseGeometry,
};
