//! Reliability bounds for the additive white Gaussian noise channel with
//! spherical codes. Rates and exponents are in nats.

use crate::error::{Error, Result};
use crate::numerics::{try_find_root, Interval};
use crate::real::Real;

/// Smallest angle accepted by [`psi`]; the function diverges at zero.
pub const MIN_ANGLE: f64 = 1e-6;

/// Lower end of the window searched for the rate where the union bound
/// stops being valid.
pub const R_STAR_WINDOW_LO: f64 = 1e-3;

/// Points of the scan that brackets that rate before bisection.
const R_STAR_SCAN: usize = 256;

/// Gaussian channel with signal-to-noise ratio `a` and its derived constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelAwgn<T> {
    a: T,
    r_x: T,
    theta_x: T,
    r_crit: T,
}

impl<T: Real> ChannelAwgn<T> {
    pub fn new(a: T) -> Result<Self> {
        if !(a > T::zero() && a.is_finite()) {
            return Err(Error::domain("signal-to-noise ratio a", a, "(0, inf)"));
        }
        let half = T::half();
        let root = (T::one() + a * a / T::lit(4.0)).sqrt();
        let r_x = half * (half + half * root).ln();
        let theta_x = (T::one() - (-T::two() * r_x).exp()).sqrt().acos();
        let r_crit = half * (half + a / T::lit(4.0) + half * root).ln();
        Ok(ChannelAwgn {
            a,
            r_x,
            theta_x,
            r_crit,
        })
    }

    #[inline]
    pub fn a(&self) -> T {
        self.a
    }

    #[inline]
    pub fn r_x(&self) -> T {
        self.r_x
    }

    /// Angle `arccos sqrt(1 - e^{-2 R_x})`, in radians.
    #[inline]
    pub fn theta_x(&self) -> T {
        self.theta_x
    }

    #[inline]
    pub fn r_crit(&self) -> T {
        self.r_crit
    }
}

/// Rate of the Kabatiansky-Levenshtein bound on spherical codes with minimum
/// angle `theta`:
/// `-((1 - s)/(2s)) ln((1 - s)/(1 + s)) - ln(2s/(1 + s))`, `s = sin theta`.
pub fn psi<T: Real>(theta: T) -> Result<T> {
    if !(theta >= T::lit(MIN_ANGLE) && theta <= T::FRAC_PI_2()) {
        return Err(Error::domain("angle theta", theta, "[1e-6, pi/2]"));
    }
    Ok(psi_unchecked(theta))
}

fn psi_unchecked<T: Real>(theta: T) -> T {
    let s = theta.sin().min(T::one());
    let one = T::one();
    let first = if s >= one {
        T::zero()
    } else {
        -((one - s) / (T::two() * s)) * ((one - s) / (one + s)).ln()
    };
    first - (T::two() * s / (one + s)).ln()
}

/// Angle `theta` with `psi(theta) = R`.
pub fn theta_bar<T: Real>(rate: T) -> Result<T> {
    if !(rate >= T::zero()) {
        return Err(Error::domain("rate (nats)", rate, "[0, inf)"));
    }
    if rate == T::zero() {
        return Ok(T::FRAC_PI_2());
    }
    let lo = T::lit(MIN_ANGLE);
    let max_rate = psi_unchecked(lo);
    if rate > max_rate {
        return Err(Error::domain("rate (nats)", rate, "[0, psi(1e-6)]"));
    }
    try_find_root(
        |t| Ok(psi_unchecked(t) - rate),
        Interval::new(lo, T::FRAC_PI_2())?,
        T::lit(T::ROOT_TOL),
    )
}

/// Random coding exponent `(a/4)(1 - cos theta_x) + R_x - R`, for
/// `0 <= R <= R_crit`.
pub fn random_coding<T: Real>(rate: T, ch: &ChannelAwgn<T>) -> Result<T> {
    let slack = T::lit(T::CLAMP_EPS);
    if !(rate >= T::zero() && rate <= ch.r_crit + slack) {
        return Err(Error::domain("rate (nats)", rate, "[0, R_crit]"));
    }
    Ok(ch.a / T::lit(4.0) * (T::one() - ch.theta_x.cos()) + ch.r_x - rate)
}

/// Union-bound exponent with the Kabatiansky-Levenshtein distance estimate:
/// `(a/4)(1 - cos theta) - ln sin theta - R` at `theta = theta_bar(R)`.
pub fn union_exponent<T: Real>(rate: T, ch: &ChannelAwgn<T>) -> Result<T> {
    let t = theta_bar(rate)?;
    Ok(ch.a / T::lit(4.0) * (T::one() - t.cos()) - t.sin().ln() - rate)
}

/// `R + ln sin theta_bar(R) - (a/8)(1 - cos theta_bar(R))`; the union bound
/// is valid where this is not positive.
pub fn validity_margin<T: Real>(rate: T, ch: &ChannelAwgn<T>) -> Result<T> {
    let t = theta_bar(rate)?;
    Ok(rate + t.sin().ln() - ch.a / T::lit(8.0) * (T::one() - t.cos()))
}

/// Where the union-bound validity condition changes sign inside
/// `(R_STAR_WINDOW_LO, R_crit]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RStar<T> {
    /// The condition holds up to this rate.
    Root(T),
    /// The condition holds on the whole window, so the rate is at least `R_crit`.
    BeyondWindow,
}

impl<T: Real> RStar<T> {
    /// Whether the condition holds at `rate` (for rates inside the window).
    pub fn covers(&self, rate: T) -> bool {
        match *self {
            RStar::Root(r) => rate <= r,
            RStar::BeyondWindow => true,
        }
    }

    pub fn root(&self) -> Option<T> {
        match *self {
            RStar::Root(r) => Some(r),
            RStar::BeyondWindow => None,
        }
    }
}

/// First root of [`validity_margin`] in `(R_STAR_WINDOW_LO, R_crit]`.
///
/// Fails with [`Error::WindowEmpty`] if the condition already fails at the
/// lower end of the window.
pub fn r_star<T: Real>(ch: &ChannelAwgn<T>) -> Result<RStar<T>> {
    let lo = T::lit(R_STAR_WINDOW_LO);
    let hi = ch.r_crit;
    let f = |r: T| validity_margin(r, ch);
    let mut prev = (lo, f(lo)?);
    if prev.1 > T::zero() {
        return Err(Error::WindowEmpty {
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        });
    }
    let n = T::from_usize(R_STAR_SCAN).unwrap();
    for k in 1..=R_STAR_SCAN {
        let r = lo + (hi - lo) * T::from_usize(k).unwrap() / n;
        let v = f(r)?;
        if v > T::zero() {
            let root = try_find_root(f, Interval::new(prev.0, r)?, T::lit(T::ROOT_TOL))?;
            return Ok(RStar::Root(root));
        }
        prev = (r, v);
    }
    Ok(RStar::BeyondWindow)
}

/// Landmark rates of the Gaussian channel, in nats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AwgnLandmarks<T> {
    pub r_x: T,
    pub theta_x: T,
    pub r_crit: T,
    /// `psi(theta_x)`, where the union exponent meets the random coding exponent.
    pub r1: T,
    pub r_star: RStar<T>,
}

impl<T: Real> AwgnLandmarks<T> {
    /// Whether the random coding exponent is shown tight on `[R1, R_crit]`,
    /// that is `R1 <= R*`.
    pub fn tight_on_window(&self) -> bool {
        self.r_star.covers(self.r1)
    }
}

pub fn landmarks<T: Real>(ch: &ChannelAwgn<T>) -> Result<AwgnLandmarks<T>> {
    Ok(AwgnLandmarks {
        r_x: ch.r_x,
        theta_x: ch.theta_x,
        r_crit: ch.r_crit,
        r1: psi(ch.theta_x)?,
        r_star: r_star(ch)?,
    })
}

/// Largest signal-to-noise ratio in `[lo, hi]` for which `R1 <= R*`, by
/// bisection on `a`. Requires tightness at `lo` and its failure at `hi`.
pub fn tightness_limit<T: Real>(lo: T, hi: T, tol: T) -> Result<T> {
    let margin = |a: T| -> Result<T> {
        let l = landmarks(&ChannelAwgn::new(a)?)?;
        Ok(match l.r_star {
            RStar::Root(r) => r - l.r1,
            RStar::BeyondWindow => l.r_crit - l.r1,
        })
    };
    try_find_root(margin, Interval::new(lo, hi)?, tol)
}

/// Converts nats to bits.
pub fn nats_to_bits<T: Real>(x: T) -> T {
    x / T::LN_2()
}

/// Converts bits to nats.
pub fn bits_to_nats<T: Real>(x: T) -> T {
    x * T::LN_2()
}
