//! Exponents of Krawtchouk and Hahn polynomials.

use crate::entropy::{h, h_clamped};
use crate::error::{Error, Result};
use crate::lp::distance_g;
use crate::numerics::{integrate, try_integrate, Interval};
use crate::real::{clamped_sqrt, Real};

/// Right end `1/2 - sqrt(tau(1-tau))` of the non-oscillatory region of
/// `K_{tau n}(omega n)`.
pub fn krawtchouk_edge<T: Real>(tau: T) -> T {
    T::half() - (tau * (T::one() - tau)).sqrt()
}

/// Exponent `k(tau, omega)` of the Krawtchouk polynomial `K_{tau n}(omega n)`:
///
/// `h(tau) + int_0^omega log2[(1 - 2tau + sqrt((1-2tau)^2 - 4z(1-z))) / (2(1-z))] dz`,
/// valid for `0 <= omega <= 1/2 - sqrt(tau(1-tau))`.
pub fn krawtchouk_exponent<T: Real>(tau: T, omega: T, tol: T) -> Result<T> {
    if !(tau >= T::zero() && tau <= T::half()) {
        return Err(Error::domain("tau", tau, "[0, 1/2]"));
    }
    let edge = krawtchouk_edge(tau);
    let slack = T::lit(T::CLAMP_EPS);
    if !(omega >= T::zero() && omega <= edge + slack) {
        return Err(Error::domain("omega", omega, "[0, 1/2 - sqrt(tau(1-tau))]"));
    }
    let omega = omega.min(edge);
    let b = T::one() - T::two() * tau;
    let four = T::lit(4.0);
    let integrand = |z: T| {
        let disc = (b * b - four * z * (T::one() - z)).max(T::zero());
        ((b + disc.sqrt()) / (T::two() * (T::one() - z))).log2()
    };
    let integral = integrate(integrand, Interval::new(T::zero(), omega)?, tol)?;
    Ok(h_clamped(tau) + integral)
}

/// Exponent `q(alpha, tau, omega)` of the Hahn polynomial
/// `H^{alpha n}_{tau n}(omega n)`:
///
/// `h(tau) + int_0^omega log2[(P + sqrt(P^2 - 4 Q y^2)) / (2Q)] dy` with
/// `P = alpha(1-alpha) - tau(1-tau) - y(1-2y)` and `Q = (alpha-y)(1-alpha-y)`.
///
/// Requires `0 <= tau <= alpha <= 1/2` and `0 <= omega <= G(alpha, tau)/2`;
/// past `G/2` the discriminant is negative and the exponent is not real.
pub fn hahn_exponent<T: Real>(alpha: T, tau: T, omega: T, tol: T) -> Result<T> {
    if !(alpha >= T::zero() && alpha <= T::half()) {
        return Err(Error::domain("alpha", alpha, "[0, 1/2]"));
    }
    if !(tau >= T::zero() && tau <= alpha) {
        return Err(Error::domain("tau", tau, "[0, alpha]"));
    }
    let edge = (distance_g(alpha, tau) * T::half()).min(alpha);
    if !(omega >= T::zero() && omega <= edge + T::lit(T::CLAMP_EPS)) {
        return Err(Error::domain("omega", omega, "[0, G(alpha, tau)/2]"));
    }
    let omega = omega.min(edge);
    let base = alpha * (T::one() - alpha) - tau * (T::one() - tau);
    let four = T::lit(4.0);
    let integrand = |y: T| -> Result<T> {
        let p = base - y * (T::one() - T::two() * y);
        let q = (alpha - y) * (T::one() - alpha - y);
        match clamped_sqrt(p * p - four * q * y * y) {
            Some(s) => Ok(((p + s) / (T::two() * q)).log2()),
            None => Err(Error::Numerical(format!(
                "negative Hahn discriminant at y = {y} (alpha = {alpha}, tau = {tau})"
            ))),
        }
    };
    let integral = try_integrate(integrand, Interval::new(T::zero(), omega)?, tol)?;
    Ok(h(tau)? + integral)
}
