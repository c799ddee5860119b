//! Exponent `mu(R, alpha, omega)` of the distance distribution guaranteed by
//! the linear-programming argument.

use crate::entropy::h_clamped;
use crate::error::{Error, Result};
use crate::lp::LpPoint;
use crate::poly::hahn_exponent;
use crate::real::Real;

/// `R - 1 + h(tau) + 2h(alpha) - 2q(alpha, tau, omega/2) - omega
/// - (1 - omega) h((alpha - omega/2)/(1 - omega))`, with `tau` on the
/// boundary `h(tau) = h(alpha) - 1 + R`.
///
/// Valid for `0 <= omega <= G(alpha, tau)`.
pub fn mu_exponent<T: Real>(rate: T, alpha: T, omega: T, quad_tol: T) -> Result<T> {
    let point = LpPoint::on_boundary(rate, alpha)?;
    mu_at(&point, omega, quad_tol)
}

pub(crate) fn mu_at<T: Real>(point: &LpPoint<T>, omega: T, quad_tol: T) -> Result<T> {
    let (rate, alpha, tau) = (point.rate(), point.alpha(), point.tau());
    let g = point.g();
    let slack = T::lit(T::CLAMP_EPS);
    if !(omega >= T::zero() && omega <= g + slack) {
        return Err(Error::domain("omega", omega, "[0, G(alpha, tau)]"));
    }
    let omega = omega.min(g);
    let half = omega * T::half();
    let q = hahn_exponent(alpha, tau, half, quad_tol)?;
    let one = T::one();
    Ok(rate - one + h_clamped(tau) + T::two() * h_clamped(alpha)
        - T::two() * q
        - omega
        - (one - omega) * h_clamped((alpha - half) / (one - omega)))
}
