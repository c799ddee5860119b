//! Upper bound on the reliability function of codes with a prescribed
//! distance distribution profile.

use crate::entropy::{gv_distance, h_clamped, ChannelBsc};
use crate::error::{Error, Result};
use crate::lp::{delta_bar, LpPoint};
use crate::numerics::{try_maximize_1d, try_minimize_1d, Interval, OptimResult, Search};
use crate::real::Real;

use super::min_distance::check_rate;
use super::overlap::overlap_exponent;
use super::spectrum::mu_at;
use super::Resolution;

/// How the profile constrains the distance distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    /// `B_{omega n} >= 2^{n beta(omega)}` at every `omega` of the support.
    EveryDistance,
    /// The estimate holds for at least one `omega` of the support, which is
    /// what the linear-programming argument guarantees.
    SomeDistance,
}

type Beta<'a, T> = Box<dyn Fn(T) -> Result<T> + Send + Sync + 'a>;

/// Exponent `beta(omega)` (bits) of the number of codeword pairs at relative
/// distance `omega`, on the support `[delta_min, delta_max]`.
pub struct DistanceProfile<'a, T> {
    beta: Beta<'a, T>,
    delta_min: T,
    delta_max: T,
    quantifier: Quantifier,
}

impl<T: Real> std::fmt::Debug for DistanceProfile<'_, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DistanceProfile")
            .field("delta_min", &self.delta_min)
            .field("delta_max", &self.delta_max)
            .field("quantifier", &self.quantifier)
            .finish_non_exhaustive()
    }
}

impl<'a, T: Real> DistanceProfile<'a, T> {
    /// A profile holding at every distance of `[delta_min, 1]`.
    pub fn new<F>(beta: F, delta_min: T) -> Result<Self>
    where
        F: Fn(T) -> Result<T> + Send + Sync + 'a,
    {
        Self::with_support(beta, delta_min, T::one(), Quantifier::EveryDistance)
    }

    pub fn with_support<F>(
        beta: F,
        delta_min: T,
        delta_max: T,
        quantifier: Quantifier,
    ) -> Result<Self>
    where
        F: Fn(T) -> Result<T> + Send + Sync + 'a,
    {
        if !(delta_min >= T::zero() && delta_min <= delta_max && delta_max <= T::one()) {
            return Err(Error::domain("delta_min", delta_min, "[0, delta_max]"));
        }
        Ok(DistanceProfile {
            beta: Box::new(beta),
            delta_min,
            delta_max,
            quantifier,
        })
    }

    /// Distance distribution of a typical random linear code of rate `rate`:
    /// `beta(omega) = R + h(omega) - 1` above `h^{-1}(1-R)`.
    pub fn binomial(rate: T) -> Result<Self> {
        if !(rate > T::zero() && rate < T::one()) {
            return Err(Error::domain("rate", rate, "(0, 1)"));
        }
        let d = gv_distance(rate)?;
        Self::new(move |w| Ok(rate + h_clamped(w) - T::one()), d)
    }

    /// The estimate `mu(R, alpha, omega)` on `[0, G(alpha, tau)]`.
    pub fn linear_programming(rate: T, alpha: T, quad_tol: T) -> Result<Self> {
        let point = LpPoint::on_boundary(rate, alpha)?;
        let g = point.g();
        Self::with_support(
            move |w| mu_at(&point, w, quad_tol),
            T::zero(),
            g,
            Quantifier::SomeDistance,
        )
    }

    pub fn beta(&self, omega: T) -> Result<T> {
        (self.beta)(omega)
    }

    pub fn delta_min(&self) -> T {
        self.delta_min
    }

    pub fn delta_max(&self) -> T {
        self.delta_max
    }

    pub fn quantifier(&self) -> Quantifier {
        self.quantifier
    }

    fn support(&self) -> Interval<T> {
        Interval::clamped(self.delta_min, self.delta_max)
    }
}

/// Value of the profile bound with the distances that attain it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileBound<T> {
    pub value: T,
    /// The spectrum term `-beta(omega) - A(omega)`, optimized.
    pub spectrum_term: T,
    /// The overlap term `B(omega, lambda) - A(lambda)`, optimized.
    pub overlap_term: T,
    /// Optimizing `omega` (of the overlap term for [`Quantifier::SomeDistance`]).
    pub omega: T,
    /// Optimizing `lambda` of the overlap term.
    pub lambda: T,
}

fn best_lambda<T: Real>(
    omega: T,
    lo: T,
    ch: &ChannelBsc<T>,
    res: &Resolution<T>,
) -> Result<OptimResult<T>> {
    try_maximize_1d(
        |lambda: T| {
            Ok::<T, Error>(overlap_exponent(omega, lambda, ch, res.eta_tol)? - ch.a(lambda))
        },
        Interval::clamped(lo, omega),
        res.distance,
    )
}

/// `max_{lambda in [lo, hi]} max_{omega in [lambda, hi]} B(omega, lambda) - A(lambda)`,
/// returning `(value, omega, lambda)`.
pub(crate) fn overlap_triangle<T: Real>(
    ch: &ChannelBsc<T>,
    lo: T,
    hi: T,
    res: &Resolution<T>,
) -> Result<(T, T, T)> {
    let inner = |lambda: T| -> Result<OptimResult<T>> {
        try_maximize_1d(
            |omega: T| overlap_exponent(omega, lambda, ch, res.eta_tol),
            Interval::clamped(lambda, hi),
            res.distance,
        )
    };
    let outer = try_maximize_1d(
        |lambda: T| Ok::<T, Error>(inner(lambda)?.value - ch.a(lambda)),
        Interval::clamped(lo, hi),
        res.distance,
    )?;
    let omega = inner(outer.arg)?.arg;
    Ok((outer.value, omega, outer.arg))
}

/// Upper bound on the reliability function at rate `rate` for codes whose
/// distance distribution follows `profile`:
///
/// `min_omega max(-beta(omega) - A(omega), max_{delta <= lambda <= omega} B(omega, lambda) - A(lambda))`
/// over the support, where `delta` is the support's lower end. Under
/// [`Quantifier::SomeDistance`] the outer `min` becomes a `max`, since the
/// distance at which the profile holds is not known.
pub fn profile_bound<T: Real>(
    rate: T,
    profile: &DistanceProfile<'_, T>,
    ch: &ChannelBsc<T>,
    res: &Resolution<T>,
) -> Result<ProfileBound<T>> {
    check_rate(rate, ch)?;
    let support = profile.support();
    let delta = profile.delta_min;
    let spectrum = |omega: T| -> Result<T> { Ok(-profile.beta(omega)? - ch.a(omega)) };
    match profile.quantifier {
        Quantifier::EveryDistance => {
            let combined = |omega: T| -> Result<T> {
                let s = spectrum(omega)?;
                let o = best_lambda(omega, delta, ch, res)?.value;
                Ok(s.max(o))
            };
            let best = try_minimize_1d(combined, support, res.distance)?;
            let omega = best.arg;
            let lam = best_lambda(omega, delta, ch, res)?;
            Ok(ProfileBound {
                value: best.value,
                spectrum_term: spectrum(omega)?,
                overlap_term: lam.value,
                omega,
                lambda: lam.arg,
            })
        }
        Quantifier::SomeDistance => {
            let first = try_maximize_1d(spectrum, support, res.distance)?;
            let (second, omega, lambda) = overlap_triangle(ch, delta, support.hi(), res)?;
            Ok(ProfileBound {
                value: first.value.max(second),
                spectrum_term: first.value,
                overlap_term: second,
                omega,
                lambda,
            })
        }
    }
}

/// [`profile_bound`] for the linear-programming profile at the `alpha`
/// minimizing `G(alpha, tau)`, where its support is `[0, d]` with `d` the
/// minimum distance bound. Below the threshold rate this is the union bound
/// [`union_bound_low_rate`](super::union_bound_low_rate); above it the
/// overlap term takes over.
pub fn lp_profile_bound<T: Real>(
    rate: T,
    ch: &ChannelBsc<T>,
    res: &Resolution<T>,
) -> Result<ProfileBound<T>> {
    check_rate(rate, ch)?;
    let d = delta_bar(rate, Search::default())?;
    let profile = DistanceProfile::linear_programming(rate, d.argmin_alpha, res.quad_tol)?;
    profile_bound(rate, &profile, ch, res)
}
