//! The linear-programming bound on relative distance and its inverse.

use crate::entropy::{h_clamped, h_inv_unchecked};
use crate::error::{Error, Result};
use crate::numerics::{minimize_1d, Interval, Search};
use crate::real::Real;

/// `G(alpha, tau) = 2(alpha(1-alpha) - tau(1-tau)) / (1 + 2 sqrt(tau(1-tau)))`.
#[inline]
pub fn distance_g<T: Real>(alpha: T, tau: T) -> T {
    let st = (tau * (T::one() - tau)).sqrt();
    T::two() * (alpha * (T::one() - alpha) - tau * (T::one() - tau)) / (T::one() + T::two() * st)
}

/// A pair `(alpha, tau)` admissible for the distance-distribution estimate at
/// a given rate: `tau <= alpha <= 1/2` and `h(tau) <= h(alpha) - 1 + R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpPoint<T> {
    rate: T,
    alpha: T,
    tau: T,
}

impl<T: Real> LpPoint<T> {
    pub fn new(rate: T, alpha: T, tau: T) -> Result<Self> {
        check_rate(rate)?;
        if !(alpha >= T::zero() && alpha <= T::half()) {
            return Err(Error::domain("alpha", alpha, "[0, 1/2]"));
        }
        if !(tau >= T::zero() && tau <= alpha) {
            return Err(Error::domain("tau", tau, "[0, alpha]"));
        }
        let budget = h_clamped(alpha) - T::one() + rate;
        if h_clamped(tau) > budget + T::lit(1e-9) {
            return Err(Error::domain(
                "h(tau) - h(alpha) + 1 - R",
                h_clamped(tau) - budget,
                "(-inf, 0]",
            ));
        }
        Ok(LpPoint { rate, alpha, tau })
    }

    /// The point with `tau` taken at equality, `h(tau) = h(alpha) - 1 + R`.
    pub fn on_boundary(rate: T, alpha: T) -> Result<Self> {
        check_rate(rate)?;
        if !(alpha >= T::zero() && alpha <= T::half()) {
            return Err(Error::domain("alpha", alpha, "[0, 1/2]"));
        }
        let budget = h_clamped(alpha) - T::one() + rate;
        if budget < -T::lit(1e-9) {
            return Err(Error::domain("h(alpha) - 1 + R", budget, "[0, 1]"));
        }
        Ok(LpPoint {
            rate,
            alpha,
            tau: tau_on_boundary(rate, alpha),
        })
    }

    #[inline]
    pub fn rate(&self) -> T {
        self.rate
    }

    #[inline]
    pub fn alpha(&self) -> T {
        self.alpha
    }

    #[inline]
    pub fn tau(&self) -> T {
        self.tau
    }

    /// `G(alpha, tau)`, the largest relative distance the estimate covers.
    pub fn g(&self) -> T {
        distance_g(self.alpha, self.tau)
    }
}

#[inline]
pub(crate) fn tau_on_boundary<T: Real>(rate: T, alpha: T) -> T {
    h_inv_unchecked((h_clamped(alpha) - T::one() + rate).max(T::zero()))
}

fn check_rate<T: Real>(rate: T) -> Result<()> {
    if rate >= T::zero() && rate <= T::one() {
        Ok(())
    } else {
        Err(Error::domain("rate", rate, "[0, 1]"))
    }
}

/// Outcome of the minimization defining the linear-programming distance bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LpDistance<T> {
    pub delta_bar: T,
    pub argmin_alpha: T,
    pub tau_of_alpha: T,
}

impl<T: Real> LpDistance<T> {
    pub fn point(&self, rate: T) -> LpPoint<T> {
        LpPoint {
            rate,
            alpha: self.argmin_alpha,
            tau: self.tau_of_alpha,
        }
    }
}

/// Linear-programming upper bound on the relative distance of codes of rate
/// `rate`: `min G(alpha, tau)` over `alpha in [h^{-1}(1-R), 1/2]` with
/// `h(tau) = h(alpha) - 1 + R`.
pub fn delta_bar<T: Real>(rate: T, search: Search<T>) -> Result<LpDistance<T>> {
    if !(rate > T::zero() && rate < T::one()) {
        return Err(Error::domain("rate", rate, "(0, 1)"));
    }
    let lo = h_inv_unchecked(T::one() - rate);
    let objective = |alpha: T| distance_g(alpha, tau_on_boundary(rate, alpha));
    let best = minimize_1d(objective, Interval::clamped(lo, T::half()), search);
    Ok(LpDistance {
        delta_bar: best.value,
        argmin_alpha: best.arg,
        tau_of_alpha: tau_on_boundary(rate, best.arg),
    })
}

/// `tau_nu(xi) = (1 - sqrt(1 - 4 (sqrt(nu(1-nu) - xi(1-xi)) - xi)^2)) / 2`.
pub fn tau_nu<T: Real>(nu: T, xi: T) -> Result<T> {
    let gap = nu * (T::one() - nu) - xi * (T::one() - xi);
    let eps = T::lit(T::CLAMP_EPS);
    if gap < -eps {
        return Err(Error::domain("nu(1-nu) - xi(1-xi)", gap, "[0, inf)"));
    }
    let s = gap.max(T::zero()).sqrt() - xi;
    let outer = T::one() - T::lit(4.0) * s * s;
    if outer < -eps {
        return Err(Error::domain("1 - 4(sqrt(..) - xi)^2", outer, "[0, 1]"));
    }
    Ok((T::one() - outer.max(T::zero()).sqrt()) * T::half())
}

/// Inverse of [`delta_bar`]:
/// `1 + min (h(tau_alpha(delta/2)) - h(alpha))` over
/// `alpha in [(1 - sqrt(1 - 2 delta))/2, 1/2]`.
pub fn r_bar<T: Real>(delta: T, search: Search<T>) -> Result<T> {
    if !(delta > T::zero() && delta <= T::half()) {
        return Err(Error::domain("relative distance delta", delta, "(0, 1/2]"));
    }
    let lo = (T::one() - (T::one() - T::two() * delta).max(T::zero()).sqrt()) * T::half();
    let xi = delta * T::half();
    let objective = |alpha: T| match tau_nu(alpha, xi) {
        Ok(t) => h_clamped(t) - h_clamped(alpha),
        Err(_) => T::infinity(),
    };
    let best = minimize_1d(objective, Interval::clamped(lo, T::half()), search);
    if !best.value.is_finite() {
        return Err(Error::Numerical(format!(
            "no admissible alpha for delta = {delta}"
        )));
    }
    Ok(T::one() + best.value)
}
