//! Threshold rates where the union term stops dominating, and the channel's
//! landmark rates.

use crate::entropy::{h_clamped, ChannelBsc};
use crate::error::{Error, Result};
use crate::lp::{delta_bar, r_bar, LpPoint};
use crate::numerics::{try_find_root, try_maximize_1d, Interval, Search};
use crate::real::Real;

use super::min_distance::overlap_term;
use super::profile::overlap_triangle;
use super::spectrum::mu_at;
use super::Resolution;

/// Step of the scan that brackets a threshold.
const SCAN_STEP: f64 = 1e-3;
/// Bracket width at which bisection stops.
const BISECT_TOL: f64 = 1e-5;

fn union_term<T: Real>(rate: T, d: T, ch: &ChannelBsc<T>) -> T {
    -ch.a(d) - rate + T::one() - h_clamped(d)
}

/// First sign change of `f` on the grid `k * SCAN_STEP` inside `(lo, hi)`,
/// refined by bisection.
fn first_crossing<T, F>(mut f: F, lo: T, hi: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let step = T::lit(SCAN_STEP);
    let mut prev: Option<(T, T)> = None;
    let mut k = 1usize;
    loop {
        let r = lo + step * T::from_usize(k).expect("grid index fits the scalar type");
        if r >= hi {
            break;
        }
        let v = f(r)?;
        if let Some((r0, v0)) = prev {
            if v0 * v <= T::zero() && !(v0 == T::zero() && v == T::zero()) {
                if v0 == T::zero() {
                    return Ok(r0);
                }
                return try_find_root(&mut f, Interval::new(r0, r)?, T::lit(BISECT_TOL));
            }
        }
        prev = Some((r, v));
        k += 1;
    }
    Err(Error::WindowEmpty {
        lo: lo.as_f64(),
        hi: hi.as_f64(),
    })
}

/// Rate at which the overlap term of the minimum-distance bound starts to
/// exceed the union term, searched in `(0, R(delta1))`.
pub fn find_r0<T: Real>(ch: &ChannelBsc<T>, res: &Resolution<T>) -> Result<T> {
    let hi = r_bar(ch.delta1(), Search::default())?;
    first_crossing(
        |rate| {
            let d = delta_bar(rate, Search::default())?.delta_bar;
            let (overlap, _) = overlap_term(ch, d, d, res)?;
            Ok(overlap - union_term(rate, d, ch))
        },
        T::zero(),
        hi,
    )
}

/// Rate at which the maximum of the profile bound for the
/// linear-programming profile moves from the spectrum term to the overlap
/// term, searched in `(0, 1 - h(p))`.
pub fn find_r0_star<T: Real>(ch: &ChannelBsc<T>, res: &Resolution<T>) -> Result<T> {
    first_crossing(
        |rate| profile_term_gap(rate, ch, res),
        T::zero(),
        ch.capacity(),
    )
}

/// Overlap term minus spectrum term of the linear-programming profile bound.
pub(crate) fn profile_term_gap<T: Real>(
    rate: T,
    ch: &ChannelBsc<T>,
    res: &Resolution<T>,
) -> Result<T> {
    let d = delta_bar(rate, Search::default())?;
    let point = LpPoint::on_boundary(rate, d.argmin_alpha)?;
    let g = point.g();
    let first = try_maximize_1d(
        |w: T| -> Result<T> { Ok(-mu_at(&point, w, res.quad_tol)? - ch.a(w)) },
        Interval::clamped(T::zero(), g),
        res.distance,
    )?;
    let (second, _, _) = overlap_triangle(ch, T::zero(), g, res)?;
    Ok(second - first.value)
}

/// Landmark rates of a binary symmetric channel, in bits per channel use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Landmarks<T> {
    pub r_x: T,
    pub r_crit: T,
    pub delta1: T,
    /// Rate at which the minimum distance bound equals `delta1`.
    pub r1: T,
    /// `None` when no crossing exists in the search window.
    pub r0: Option<T>,
    pub r0_star: Option<T>,
}

impl<T: Real> Landmarks<T> {
    /// Share of `[R_x, R_crit]` on which the random coding exponent is
    /// known to be tight, `(R_crit - R1)/(R_crit - R_x)`.
    pub fn tight_window_fraction(&self) -> T {
        ((self.r_crit - self.r1) / (self.r_crit - self.r_x)).max(T::zero())
    }
}

fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::WindowEmpty { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// All landmark rates of `ch`.
pub fn landmarks<T: Real>(ch: &ChannelBsc<T>, res: &Resolution<T>) -> Result<Landmarks<T>> {
    Ok(Landmarks {
        r_x: ch.r_x(),
        r_crit: ch.r_crit(),
        delta1: ch.delta1(),
        r1: r_bar(ch.delta1(), Search::default())?,
        r0: optional(find_r0(ch, res))?,
        r0_star: optional(find_r0_star(ch, res))?,
    })
}
