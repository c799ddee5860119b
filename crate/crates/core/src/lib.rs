//! Bounds on the reliability function (the best error exponent of codes of a
//! given rate) of the binary symmetric channel and of the Gaussian channel.
//!
//! The analytic modules are generic over the scalar type through [`Real`];
//! the aliases below fix it to `f64`. The [`oracle`] module evaluates
//! finite-length counterparts of the exponents and is always `f64` or exact.
//!
//! Units: everything on the binary symmetric channel is in bits, everything
//! on the Gaussian channel in nats.
//!
//! ```
//! use reliability::{bsc, Bsc};
//!
//! let ch = Bsc::new(0.01).unwrap();
//! let e0 = bsc::random_coding(0.537, &ch).unwrap();
//! assert!((e0 - 0.2011).abs() < 1e-3);
//! ```

// `!(x >= lo)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod awgn;
pub mod bsc;
pub mod cli;
pub mod entropy;
pub mod error;
pub mod lp;
pub mod numerics;
pub mod oracle;
pub mod poly;
pub mod real;

pub use error::{Error, Result};
pub use real::Real;

/// Binary symmetric channel in double precision.
pub type Bsc = entropy::ChannelBsc<f64>;
/// Gaussian channel in double precision.
pub type Awgn = awgn::ChannelAwgn<f64>;
/// Nested-search resolution in double precision.
pub type Resolution = bsc::Resolution<f64>;
/// Sampled bound curve in double precision.
pub type BoundCurve = bsc::BoundCurve<f64>;
/// Landmark rates of a binary symmetric channel in double precision.
pub type BscLandmarks = bsc::Landmarks<f64>;
/// Landmark rates of a Gaussian channel in double precision.
pub type AwgnLandmarks = awgn::AwgnLandmarks<f64>;
