//! Sampled bound curves, the straight-line bound and composite envelopes.

use rayon::prelude::*;

use crate::entropy::ChannelBsc;
use crate::error::{Error, Result};
use crate::lp::r_bar;
use crate::numerics::{minimize_1d, Interval, Search};
use crate::real::Real;

use super::classical::{check_window, expurgation, random_coding, sphere_packing};
use super::profile::lp_profile_bound;
use super::Resolution;

/// Exponents below zero by at most this much are rounding noise.
const NEGATIVE_SLACK: f64 = 1e-9;

/// A named bound sampled at strictly increasing rates.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve<T> {
    name: String,
    channel: ChannelBsc<T>,
    samples: Vec<(T, T)>,
}

impl<T: Real> BoundCurve<T> {
    pub fn new(
        name: impl Into<String>,
        channel: ChannelBsc<T>,
        samples: Vec<(T, T)>,
    ) -> Result<Self> {
        let mut samples = samples;
        for w in samples.windows(2) {
            if !(w[0].0 < w[1].0) {
                return Err(Error::domain(
                    "rate sequence step",
                    w[1].0 - w[0].0,
                    "(0, inf)",
                ));
            }
        }
        for s in samples.iter_mut() {
            if !s.1.is_finite() || s.1 < -T::lit(NEGATIVE_SLACK) {
                return Err(Error::domain("exponent", s.1, "[0, inf)"));
            }
            s.1 = s.1.max(T::zero());
        }
        Ok(BoundCurve {
            name: name.into(),
            channel,
            samples,
        })
    }

    /// Evaluates `f` at each rate, in parallel.
    pub fn sample<F>(
        name: impl Into<String>,
        channel: ChannelBsc<T>,
        rates: &[T],
        f: F,
    ) -> Result<Self>
    where
        F: Fn(T) -> Result<T> + Sync,
    {
        let samples = rates
            .par_iter()
            .map(|&r| Ok((r, f(r)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, channel, samples)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn channel(&self) -> &ChannelBsc<T> {
        &self.channel
    }

    pub fn samples(&self) -> &[(T, T)] {
        &self.samples
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Chord<T> {
    rate: T,
    value: T,
    slope: T,
    /// Rate where the chord touches the sphere-packing exponent.
    touch: T,
}

/// Straight-line bound: a chord from any point of an upper bound to a point
/// of the sphere-packing exponent at a higher rate bounds the reliability
/// function between the two rates.
#[derive(Debug, Clone, PartialEq)]
pub struct StraightLine<T> {
    channel: ChannelBsc<T>,
    chords: Vec<Chord<T>>,
}

impl<T: Real> StraightLine<T> {
    /// Builds the chords from every sample of `low` lying below the
    /// sphere-packing exponent to its tangent point on that exponent.
    pub fn new(low: &BoundCurve<T>) -> Result<Self> {
        let ch = *low.channel();
        let cap = ch.capacity();
        let search = Search::new(64, T::lit(T::OPT_TOL));
        let mut chords = Vec::new();
        for &(rate, value) in low.samples() {
            if rate >= cap {
                continue;
            }
            let rate = check_window(rate, cap, "[0, 1 - h(p)]")?;
            if value >= sphere_packing(rate, &ch)? - T::lit(T::CLAMP_EPS) {
                continue;
            }
            let slope = |b: T| match sphere_packing(b, &ch) {
                Ok(sp) => (sp - value) / (b - rate),
                Err(_) => T::infinity(),
            };
            let start = rate + (cap - rate) * T::lit(1e-9);
            let best = minimize_1d(slope, Interval::clamped(start, cap), search);
            if !best.value.is_finite() {
                return Err(Error::Numerical(format!(
                    "no tangent to the sphere-packing exponent from rate {rate}"
                )));
            }
            chords.push(Chord {
                rate,
                value,
                slope: best.value,
                touch: best.arg,
            });
        }
        Ok(StraightLine {
            channel: ch,
            chords,
        })
    }

    /// `min(E_sp(R), chords through R)`, for `0 <= R <= 1 - h(p)`.
    pub fn value(&self, rate: T) -> Result<T> {
        let mut v = sphere_packing(rate, &self.channel)?;
        for c in &self.chords {
            if c.rate <= rate && rate <= c.touch {
                v = v.min(c.value + c.slope * (rate - c.rate));
            }
        }
        Ok(v)
    }

    /// Rates `(from, to)` of the chord segments.
    pub fn segments(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.chords.iter().map(|c| (c.rate, c.touch))
    }
}

/// The straight-line bound built on `low`, sampled at the rates of `low`
/// and on a uniform grid up to capacity.
pub fn straight_line<T: Real>(low: &BoundCurve<T>) -> Result<BoundCurve<T>> {
    let line = StraightLine::new(low)?;
    let ch = *low.channel();
    let cap = ch.capacity();
    let first = low.samples().first().map_or(T::zero(), |s| s.0);
    let mut rates: Vec<T> = low
        .samples()
        .iter()
        .map(|s| s.0)
        .filter(|&r| r <= cap)
        .collect();
    let n = 200;
    for i in 0..=n {
        let f = T::from_usize(i).unwrap() / T::from_usize(n).unwrap();
        rates.push(first + (cap - first) * f);
    }
    rates.sort_by(|a, b| a.partial_cmp(b).expect("finite rates"));
    rates.dedup_by(|a, b| (*a - *b).abs() <= T::epsilon());
    let samples = rates
        .into_iter()
        .map(|r| Ok((r, line.value(r)?)))
        .collect::<Result<Vec<_>>>()?;
    BoundCurve::new("straightline", ch, samples)
}

/// Best upper bound on the reliability function assembled here:
/// `min(E_sp, lp profile bound, straight line built on the latter)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UpperEnvelope<T> {
    profile: BoundCurve<T>,
    line: StraightLine<T>,
}

impl<T: Real> UpperEnvelope<T> {
    /// Samples the linear-programming profile bound at `rates` (those
    /// outside `(0, 1 - h(p))` are skipped).
    pub fn new(ch: &ChannelBsc<T>, rates: &[T], res: &Resolution<T>) -> Result<Self> {
        let cap = ch.capacity();
        let mut inside: Vec<T> = rates
            .iter()
            .copied()
            .filter(|&r| r > T::zero() && r < cap)
            .collect();
        inside.sort_by(|a, b| a.partial_cmp(b).expect("finite rates"));
        inside.dedup();
        let profile = BoundCurve::sample("thm6", *ch, &inside, |r| {
            Ok(lp_profile_bound(r, ch, res)?.value)
        })?;
        let line = StraightLine::new(&profile)?;
        Ok(UpperEnvelope { profile, line })
    }

    /// Rates `0.01 k` below capacity together with `R_x` and `R1`.
    pub fn default_rates(ch: &ChannelBsc<T>) -> Result<Vec<T>> {
        let cap = ch.capacity();
        let step = T::lit(0.01);
        let mut rates = Vec::new();
        let mut k = 1;
        loop {
            let r = step * T::from_usize(k).unwrap();
            if r >= cap {
                break;
            }
            rates.push(r);
            k += 1;
        }
        rates.push(ch.r_x());
        let r1 = r_bar(ch.delta1(), Search::default())?;
        if r1 < cap {
            rates.push(r1);
        }
        Ok(rates)
    }

    pub fn with_default_rates(ch: &ChannelBsc<T>, res: &Resolution<T>) -> Result<Self> {
        Self::new(ch, &Self::default_rates(ch)?, res)
    }

    pub fn value(&self, rate: T) -> Result<T> {
        self.line.value(rate)
    }

    pub fn profile_curve(&self) -> &BoundCurve<T> {
        &self.profile
    }

    pub fn straight_line(&self) -> &StraightLine<T> {
        &self.line
    }
}

/// Best classical lower bound: expurgation on `[0, R_x]`, random coding on
/// `[R_x, R_crit]`, sphere packing above.
pub fn lower_envelope<T: Real>(rate: T, ch: &ChannelBsc<T>) -> Result<T> {
    let rate = check_window(rate, ch.capacity(), "[0, 1 - h(p)]")?;
    if rate <= ch.r_x() {
        expurgation(rate, ch)
    } else if rate <= ch.r_crit() {
        random_coding(rate, ch)
    } else {
        sphere_packing(rate, ch)
    }
}
