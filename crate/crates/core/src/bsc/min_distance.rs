//! Upper bound on the reliability function from the distance distribution
//! estimate combined with the minimum distance bound.

use crate::entropy::ChannelBsc;
use crate::error::{Error, Result};
use crate::lp::{delta_bar, LpPoint};
use crate::numerics::{try_maximize_1d, try_minimize_1d, Interval, Search};
use crate::real::Real;

use super::overlap::overlap_exponent;
use super::spectrum::mu_at;
use super::Resolution;

/// The two competing terms of the bound at a fixed `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinDistanceBound<T> {
    pub alpha: T,
    /// `G(alpha, tau)`, the upper end of the distance range.
    pub g: T,
    /// `max_omega min(-A(min(omega, d)), -mu(omega) - A(omega))`.
    pub spectrum_term: T,
    /// `max_{delta <= d} max_{omega >= delta} min(-A(delta), B(omega, delta) - A(omega))`.
    pub overlap_term: T,
    /// Maximizing `delta` of the overlap term.
    pub delta: T,
}

impl<T: Real> MinDistanceBound<T> {
    pub fn value(&self) -> T {
        self.spectrum_term.max(self.overlap_term)
    }
}

pub(crate) fn check_rate<T: Real>(rate: T, ch: &ChannelBsc<T>) -> Result<()> {
    if rate > T::zero() && rate < ch.capacity() {
        Ok(())
    } else {
        Err(Error::domain("rate", rate, "(0, 1 - h(p))"))
    }
}

/// `max_{delta in [0, d_max]} min(-A(delta), max_{omega in [delta, g]} B(omega, delta) - A(omega))`.
pub(crate) fn overlap_term<T: Real>(
    ch: &ChannelBsc<T>,
    d_max: T,
    g: T,
    res: &Resolution<T>,
) -> Result<(T, T)> {
    let d_max = d_max.min(g);
    let inner = |delta: T| -> Result<T> {
        let best = try_maximize_1d(
            |omega: T| {
                Ok::<T, Error>(overlap_exponent(omega, delta, ch, res.eta_tol)? - ch.a(omega))
            },
            Interval::clamped(delta, g),
            res.distance,
        )?;
        Ok((-ch.a(delta)).min(best.value))
    };
    let best = try_maximize_1d(inner, Interval::clamped(T::zero(), d_max), res.distance)?;
    Ok((best.value, best.arg))
}

/// Both terms of the bound at the given `alpha`, with `tau` on the boundary
/// and `d` the minimum distance bound at this rate.
pub fn min_distance_bound_at<T: Real>(
    rate: T,
    alpha: T,
    d: T,
    ch: &ChannelBsc<T>,
    res: &Resolution<T>,
) -> Result<MinDistanceBound<T>> {
    check_rate(rate, ch)?;
    let point = LpPoint::on_boundary(rate, alpha)?;
    let g = point.g();
    let spectrum = try_maximize_1d(
        |omega: T| -> Result<T> {
            let mu = mu_at(&point, omega, res.quad_tol)?;
            Ok((-ch.a(omega.min(d))).min(-mu - ch.a(omega)))
        },
        Interval::clamped(T::zero(), g),
        res.distance,
    )?;
    let (overlap, delta) = overlap_term(ch, d, g, res)?;
    Ok(MinDistanceBound {
        alpha,
        g,
        spectrum_term: spectrum.value,
        overlap_term: overlap,
        delta,
    })
}

/// The bound minimized over `alpha in [h^{-1}(1-R), 1/2]`, for rates in
/// `(0, 1 - h(p))`.
pub fn min_distance_bound<T: Real>(
    rate: T,
    ch: &ChannelBsc<T>,
    res: &Resolution<T>,
) -> Result<MinDistanceBound<T>> {
    check_rate(rate, ch)?;
    let d = delta_bar(rate, Search::default())?.delta_bar;
    let lo = crate::entropy::h_inv_unchecked(T::one() - rate);
    let mut best: Option<MinDistanceBound<T>> = None;
    let opt = try_minimize_1d(
        |alpha: T| -> Result<T> {
            let parts = min_distance_bound_at(rate, alpha, d, ch, res)?;
            let v = parts.value();
            if best.is_none_or(|b| v < b.value()) {
                best = Some(parts);
            }
            Ok(v)
        },
        Interval::clamped(lo, T::half()),
        res.alpha,
    )?;
    best.filter(|b| b.value() == opt.value)
        .map_or_else(|| min_distance_bound_at(rate, opt.arg, d, ch, res), Ok)
}
