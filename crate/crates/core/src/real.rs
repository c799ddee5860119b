//! Scalar abstraction shared by every analytic module.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the bound computations are generic over.
///
/// The associated tolerances are the defaults used when a caller does not
/// supply one; they are chosen per type so that `f32` computations still
/// terminate.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Default absolute tolerance of adaptive quadrature.
    const QUAD_TOL: f64;
    /// Default bracket width for bisection.
    const ROOT_TOL: f64;
    /// Default refinement width of one-dimensional optimization.
    const OPT_TOL: f64;
    /// Clamp window for square-root arguments that are negative only by rounding.
    const CLAMP_EPS: f64;

    /// Converts an `f64` constant into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in the scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const QUAD_TOL: f64 = 1e-9;
    const ROOT_TOL: f64 = 1e-12;
    const OPT_TOL: f64 = 1e-9;
    const CLAMP_EPS: f64 = 1e-12;
}

impl Real for f32 {
    const QUAD_TOL: f64 = 1e-5;
    const ROOT_TOL: f64 = 1e-6;
    const OPT_TOL: f64 = 1e-5;
    const CLAMP_EPS: f64 = 1e-6;
}

/// Square root of a quantity that may be negative by rounding noise.
///
/// Returns `None` when the argument is below `-T::CLAMP_EPS`.
#[inline]
pub(crate) fn clamped_sqrt<T: Real>(x: T) -> Option<T> {
    if x >= T::zero() {
        Some(x.sqrt())
    } else if x >= -T::lit(T::CLAMP_EPS) {
        Some(T::zero())
    } else {
        None
    }
}
