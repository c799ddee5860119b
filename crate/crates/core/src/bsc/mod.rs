//! Error-exponent bounds for the binary symmetric channel.
//!
//! All exponents are in bits. Upper bounds on the reliability function live
//! next to the classical lower bounds so that curves and envelopes can be
//! assembled from one place.

mod classical;
mod curve;
mod min_distance;
mod overlap;
mod profile;
mod spectrum;
mod thresholds;

pub use classical::{expurgation, random_coding, sphere_packing, union_bound_low_rate};
pub use curve::{lower_envelope, straight_line, BoundCurve, StraightLine, UpperEnvelope};
pub use min_distance::{min_distance_bound, min_distance_bound_at, MinDistanceBound};
pub use overlap::{overlap_exponent, overlap_exponent_by_search, overlap_maximizer, OverlapMax};
pub use profile::{lp_profile_bound, profile_bound, DistanceProfile, ProfileBound, Quantifier};
pub use spectrum::mu_exponent;
pub use thresholds::{find_r0, find_r0_star, landmarks, Landmarks};

use crate::numerics::Search;
use crate::real::Real;

/// Resolution of the nested searches behind the composite bounds.
///
/// Each nested optimization is a grid scan followed by golden-section
/// refinement of the best cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resolution<T> {
    /// Search over the LP variable `alpha`.
    pub alpha: Search<T>,
    /// Searches over relative distances `omega`, `lambda` and `delta`.
    pub distance: Search<T>,
    /// Bracket width for the overlap variable `eta`.
    pub eta_tol: T,
    /// Absolute tolerance of the Hahn-exponent quadrature.
    pub quad_tol: T,
}

impl<T: Real> Default for Resolution<T> {
    fn default() -> Self {
        Resolution {
            alpha: Search::new(16, T::lit(1e-6).max(T::lit(T::OPT_TOL))),
            distance: Search::new(48, T::lit(1e-8).max(T::lit(T::OPT_TOL))),
            eta_tol: T::lit(T::ROOT_TOL),
            quad_tol: T::lit(1e-10).max(T::lit(T::QUAD_TOL)),
        }
    }
}

impl<T: Real> Resolution<T> {
    /// Cheaper settings for scans over many rates.
    pub fn coarse() -> Self {
        Resolution {
            alpha: Search::new(16, T::lit(1e-5).max(T::lit(T::OPT_TOL))),
            distance: Search::new(24, T::lit(1e-6).max(T::lit(T::OPT_TOL))),
            eta_tol: T::lit(1e-10).max(T::lit(T::ROOT_TOL)),
            quad_tol: T::lit(1e-8).max(T::lit(T::QUAD_TOL)),
        }
    }
}
