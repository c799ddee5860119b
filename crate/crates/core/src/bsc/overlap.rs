//! The exponent `B(omega, lambda)` of the probability that the received word
//! is closer to a third codeword, given it is equidistant from two others.

use crate::entropy::{h_clamped, ChannelBsc};
use crate::error::{Error, Result};
use crate::numerics::{maximize_1d, Interval, Search};
use crate::real::Real;

/// Maximizing overlap `eta` and the value of `B` it attains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapMax<T> {
    pub eta: T,
    pub value: T,
}

struct Overlap<T> {
    omega: T,
    lambda: T,
    p: T,
    offset: T,
}

impl<T: Real> Overlap<T> {
    fn new(omega: T, lambda: T, ch: &ChannelBsc<T>) -> Result<Self> {
        if !(omega >= T::zero() && omega <= T::one()) {
            return Err(Error::domain("omega", omega, "[0, 1]"));
        }
        let slack = T::lit(T::CLAMP_EPS);
        if !(lambda >= T::zero() && lambda <= T::two() * omega + slack) {
            return Err(Error::domain("lambda", lambda, "[0, 2 omega]"));
        }
        let lambda = lambda.min(T::two() * omega);
        let p = ch.p();
        let offset = -omega - (T::one() - omega) * h_clamped(p);
        Ok(Overlap {
            omega,
            lambda,
            p,
            offset,
        })
    }

    /// Feasible `eta`: the prescribed window intersected with the set where
    /// all three entropy arguments lie in `[0, 1]`.
    fn window(&self) -> Option<(T, T)> {
        let (w, l, p) = (self.omega, self.lambda, self.p);
        let one = T::one();
        let lo = (l * p * T::half())
            .max((l - w) * T::half())
            .max(p * (one - w) - (one - w - l * T::half()))
            .max(T::zero());
        let hi = (l * T::lit(0.25))
            .min(p * (one - w))
            .min(l * T::half())
            .min(w * T::half());
        (lo <= hi).then_some((lo, hi))
    }

    fn objective(&self, eta: T) -> T {
        let (w, l, p) = (self.omega, self.lambda, self.p);
        let one = T::one();
        let mut v = self.offset;
        if l > T::zero() {
            v = v + l * h_clamped(T::two() * eta / l);
        }
        let mid = w - l * T::half();
        if mid > T::zero() {
            v = v + mid * h_clamped((w - T::two() * eta) / (T::two() * w - l));
        }
        let rest = one - w - l * T::half();
        if rest > T::zero() {
            v = v + rest * h_clamped((p * (one - w) - eta) / rest);
        }
        v
    }

    /// Derivative of the objective in `eta`; decreasing since the objective
    /// is a sum of concave terms.
    fn slope(&self, eta: T) -> T {
        let (w, l, p) = (self.omega, self.lambda, self.p);
        let one = T::one();
        let mut s = T::zero();
        if l > T::zero() {
            s = s + T::two() * ((l - T::two() * eta) / (T::two() * eta)).log2();
        }
        if w - l * T::half() > T::zero() {
            s = s - ((w - l + T::two() * eta) / (w - T::two() * eta)).log2();
        }
        if one - w - l * T::half() > T::zero() {
            let num = (one - p) * (one - w) - l * T::half() + eta;
            s = s - (num / (p * (one - w) - eta)).log2();
        }
        s
    }

    fn maximize(&self, tol: T) -> Option<OverlapMax<T>> {
        let (lo, hi) = self.window()?;
        let (mut a, mut b) = (lo, hi);
        let mut iterations = 0;
        while b - a > tol && iterations < 200 {
            iterations += 1;
            let m = (a + b) * T::half();
            let s = self.slope(m);
            if s > T::zero() {
                a = m;
            } else if s < T::zero() {
                b = m;
            } else if s == T::zero() {
                a = m;
                b = m;
            } else {
                break;
            }
        }
        let mid = (a + b) * T::half();

        [lo, mid, hi]
            .into_iter()
            .map(|eta| OverlapMax {
                eta,
                value: self.objective(eta),
            })
            .fold(None::<OverlapMax<T>>, |best, c| match best {
                Some(b) if b.value >= c.value => Some(b),
                _ => Some(c),
            })
    }
}

/// `B(omega, lambda)` in bits, for `0 <= lambda <= 2 omega <= 2`.
///
/// The inner maximum over `eta` uses concavity of the objective: bisection
/// on the sign of its derivative down to `eta_tol`. Returns minus infinity
/// when no `eta` is feasible.
pub fn overlap_exponent<T: Real>(omega: T, lambda: T, ch: &ChannelBsc<T>, eta_tol: T) -> Result<T> {
    Ok(overlap_maximizer(omega, lambda, ch, eta_tol)?.map_or(T::neg_infinity(), |m| m.value))
}

/// Like [`overlap_exponent`], also returning the maximizing `eta`; `None`
/// when the feasible set is empty.
pub fn overlap_maximizer<T: Real>(
    omega: T,
    lambda: T,
    ch: &ChannelBsc<T>,
    eta_tol: T,
) -> Result<Option<OverlapMax<T>>> {
    Ok(Overlap::new(omega, lambda, ch)?.maximize(eta_tol))
}

/// `B(omega, lambda)` with the inner maximum found by a generic grid and
/// golden-section search, without relying on concavity.
pub fn overlap_exponent_by_search<T: Real>(
    omega: T,
    lambda: T,
    ch: &ChannelBsc<T>,
    search: Search<T>,
) -> Result<T> {
    let o = Overlap::new(omega, lambda, ch)?;
    let Some((lo, hi)) = o.window() else {
        return Ok(T::neg_infinity());
    };
    Ok(maximize_1d(|eta| o.objective(eta), Interval::new(lo, hi)?, search).value)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn ch(p: f64) -> ChannelBsc<f64> {
        ChannelBsc::new(p).unwrap()
    }

    fn b(omega: f64, lambda: f64, p: f64) -> f64 {
        overlap_exponent(omega, lambda, &ch(p), TOL).unwrap()
    }

    #[test]
    fn zero_lambda_gives_zero() {
        for w in [0.05, 0.2, 0.7] {
            assert!(b(w, 0.0, 0.1).abs() < 1e-12);
        }
    }

    #[test]
    fn agrees_with_generic_search() {
        let s = Search::new(2000, 1e-13);
        for p in [0.01, 0.1, 0.3] {
            for (w, l) in [
                (0.2, 0.2),
                (0.2, 0.25),
                (0.3, 0.2),
                (0.2, 0.1),
                (0.5, 0.9),
                (0.05, 0.01),
            ] {
                let fast = b(w, l, p);
                let slow = overlap_exponent_by_search(w, l, &ch(p), s).unwrap();
                assert!(
                    (fast - slow).abs() < 1e-10 || fast == slow,
                    "{w} {l} {p}: {fast} vs {slow}"
                );
            }
        }
    }

    #[test]
    fn is_a_log_probability() {
        for p in [0.01, 0.1, 0.3] {
            for i in 1..=20 {
                for j in 1..=20 {
                    let (w, l) = (0.05 * i as f64, 0.05 * j as f64);
                    if l <= 2.0 * w {
                        assert!(b(w, l, p) <= 1e-12, "{w} {l} {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_window_is_minus_infinity() {
        // eta >= (lambda - omega)/2 = 0.075 exceeds p(1 - omega) = 0.04
        let v = b(0.2, 0.35, 0.05);
        assert_eq!(v, f64::NEG_INFINITY);
        assert!(overlap_maximizer(0.2, 0.35, &ch(0.05), TOL)
            .unwrap()
            .is_none());
    }

    #[test]
    fn rejects_out_of_range_arguments() {
        let c = ch(0.1);
        assert!(overlap_exponent(0.2, 0.5, &c, TOL).is_err());
        assert!(overlap_exponent(1.2, 0.5, &c, TOL).is_err());
        assert!(overlap_exponent(0.2, -0.1, &c, TOL).is_err());
        assert!(overlap_exponent(0.2, 0.4, &c, TOL).is_ok());
    }

    #[test]
    fn monotone_in_each_regime() {
        assert!(b(0.2, 0.25, 0.1) <= b(0.2, 0.2, 0.1) + 1e-12);
        assert!(b(0.2, 0.2, 0.1) <= b(0.3, 0.2, 0.1) + 1e-12);
    }

    #[test]
    fn single_precision() {
        let c = ChannelBsc::new(0.1f32).unwrap();
        let v = overlap_exponent(0.2f32, 0.2, &c, 1e-6).unwrap();
        assert!((v as f64 - b(0.2, 0.2, 0.1)).abs() < 1e-4);
    }
}
