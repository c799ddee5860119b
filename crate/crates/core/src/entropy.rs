//! Binary entropy, divergence and the binary symmetric channel constants.
//!
//! Logarithms on the binary symmetric channel side are base 2.

use crate::error::{Error, Result};
use crate::numerics::{find_root, Interval};
use crate::real::Real;

fn check_unit<T: Real>(what: &'static str, x: T) -> Result<()> {
    if x >= T::zero() && x <= T::one() {
        Ok(())
    } else {
        Err(Error::domain(what, x, "[0, 1]"))
    }
}

/// `x log2 x` with the convention `0 log 0 = 0`.
#[inline]
fn xlog2x<T: Real>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        x * x.log2()
    }
}

/// Binary entropy with the argument clamped to `[0, 1]`.
#[inline]
pub(crate) fn h_clamped<T: Real>(x: T) -> T {
    let x = x.max(T::zero()).min(T::one());
    -xlog2x(x) - xlog2x(T::one() - x)
}

/// Binary entropy `h(x) = -x log2 x - (1-x) log2 (1-x)`.
pub fn h<T: Real>(x: T) -> Result<T> {
    check_unit("entropy argument", x)?;
    Ok(h_clamped(x))
}

/// Inverse of the binary entropy on the branch `[0, 1/2]`.
pub fn h_inv<T: Real>(y: T) -> Result<T> {
    check_unit("entropy value", y)?;
    Ok(h_inv_unchecked(y))
}

pub(crate) fn h_inv_unchecked<T: Real>(y: T) -> T {
    if y <= T::zero() {
        return T::zero();
    }
    if y >= T::one() {
        return T::half();
    }
    let iv = Interval::clamped(T::zero(), T::half());
    find_root(|x| h_clamped(x) - y, iv, T::lit(T::ROOT_TOL))
        .expect("h - y changes sign on [0, 1/2] for y in (0, 1)")
}

/// Binary information divergence `D(x || y)` in bits.
pub fn divergence<T: Real>(x: T, y: T) -> Result<T> {
    check_unit("divergence first argument", x)?;
    if !(y > T::zero() && y < T::one()) {
        return Err(Error::domain("divergence second argument", y, "(0, 1)"));
    }
    let one = T::one();
    Ok(xlog2x(x) - x * y.log2() + xlog2x(one - x) - (one - x) * (one - y).log2())
}

/// `phi(x) = h(1/2 - sqrt(x(1-x)))`, the rate at which the first
/// linear-programming distance bound reaches `x`.
pub fn phi<T: Real>(x: T) -> Result<T> {
    check_unit("phi argument", x)?;
    let s = (x * (T::one() - x)).sqrt();
    Ok(h_clamped(T::half() - s))
}

/// Relative Gilbert-Varshamov distance `h^{-1}(1 - R)`.
pub fn gv_distance<T: Real>(rate: T) -> Result<T> {
    check_unit("rate", rate)?;
    Ok(h_inv_unchecked(T::one() - rate))
}

/// Binary symmetric channel with crossover probability `p` in `(0, 1/2)` and
/// its derived constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelBsc<T> {
    p: T,
    u: T,
    rho: T,
    delta1: T,
    r_crit: T,
    r_x: T,
}

impl<T: Real> ChannelBsc<T> {
    pub fn new(p: T) -> Result<Self> {
        if !(p > T::zero() && p < T::half()) {
            return Err(Error::domain("crossover probability p", p, "(0, 1/2)"));
        }
        let q = T::one() - p;
        let u = T::two() * (p * q).sqrt();
        let rho = p.sqrt() / (p.sqrt() + q.sqrt());
        let delta1 = T::two() * rho * (T::one() - rho);
        Ok(ChannelBsc {
            p,
            u,
            rho,
            delta1,
            r_crit: T::one() - h_clamped(rho),
            r_x: T::one() - h_clamped(delta1),
        })
    }

    #[inline]
    pub fn p(&self) -> T {
        self.p
    }

    /// Bhattacharyya parameter `2 sqrt(p(1-p))`.
    #[inline]
    pub fn u(&self) -> T {
        self.u
    }

    #[inline]
    pub fn rho(&self) -> T {
        self.rho
    }

    /// `2 rho (1 - rho)`: relative distance at which the low-rate union bound
    /// touches the random coding exponent.
    #[inline]
    pub fn delta1(&self) -> T {
        self.delta1
    }

    #[inline]
    pub fn r_crit(&self) -> T {
        self.r_crit
    }

    #[inline]
    pub fn r_x(&self) -> T {
        self.r_x
    }

    /// `1 - h(p)`.
    pub fn capacity(&self) -> T {
        T::one() - h_clamped(self.p)
    }

    /// Exponent of the probability that the received word is equidistant
    /// from two codewords at relative distance `omega`: `omega log2 u`.
    pub fn pairwise_exponent(&self, omega: T) -> Result<T> {
        check_unit("relative distance omega", omega)?;
        Ok(self.a(omega))
    }

    #[inline]
    pub(crate) fn a(&self, omega: T) -> T {
        omega * self.u.log2()
    }
}
