//! Adaptive quadrature, bracketed one-dimensional optimization and bisection.
//!
//! Every bound in this crate reduces to nested calls of these three
//! primitives. All of them are pure functions of their arguments and can be
//! called concurrently.

use std::convert::Infallible;

use crate::error::{Error, Result};
use crate::real::Real;

/// A closed interval `[lo, hi]` with finite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: Real> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if !lo.is_finite() {
            return Err(Error::domain("interval lower end", lo, "finite"));
        }
        if !hi.is_finite() {
            return Err(Error::domain("interval upper end", hi, "finite"));
        }
        if lo > hi {
            return Err(Error::domain("interval width", hi - lo, "[0, inf)"));
        }
        Ok(Interval { lo, hi })
    }

    /// Builds `[lo, max(lo, hi)]`, collapsing inverted bounds to a point.
    pub(crate) fn clamped(lo: T, hi: T) -> Self {
        Interval {
            lo,
            hi: if hi > lo { hi } else { lo },
        }
    }

    #[inline]
    pub fn lo(&self) -> T {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> T {
        self.hi
    }

    #[inline]
    pub fn width(&self) -> T {
        self.hi - self.lo
    }

    #[inline]
    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Result of a one-dimensional search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimResult<T> {
    /// The maximizing (or minimizing) argument.
    pub arg: T,
    pub value: T,
    /// Number of objective evaluations spent.
    pub evaluations: usize,
}

/// Resolution of a grid-then-refine search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Search<T> {
    /// Number of grid points, endpoints included. Values below 16 are raised to 16.
    pub grid: usize,
    /// Width to which the best grid cell is refined.
    pub tol: T,
}

impl<T: Real> Search<T> {
    pub const MIN_GRID: usize = 16;

    pub fn new(grid: usize, tol: T) -> Self {
        Search { grid, tol }
    }
}

impl<T: Real> Default for Search<T> {
    fn default() -> Self {
        Search {
            grid: 512,
            tol: T::lit(T::OPT_TOL),
        }
    }
}

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Maximum number of bisections before quadrature gives up.
const MAX_SUBDIVISIONS: usize = 2000;

struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn gk15<T: Real, E, F: FnMut(T) -> Result<T, E>>(f: &mut F, a: T, b: T) -> Result<Segment<T>, E> {
    let center = (a + b) * T::half();
    let half = (b - a) * T::half();
    let fc = f(center)?;
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * T::lit(x);
        let pair = f(center - dx)? + f(center + dx)?;
        kronrod = kronrod + pair * T::lit(w);
        if j % 2 == 1 {
            gauss = gauss + pair * T::lit(WG[j / 2]);
        }
    }
    let value = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    Ok(Segment { a, b, value, error })
}

/// Integrates a fallible integrand to absolute tolerance `tol`.
///
/// Globally adaptive Gauss-Kronrod 7/15: the segment with the largest error
/// estimate is bisected until the summed estimate drops below `tol`.
pub fn try_integrate<T, F>(mut f: F, iv: Interval<T>, tol: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    if tol <= T::zero() {
        return Err(Error::domain("quadrature tolerance", tol, "(0, inf)"));
    }
    if iv.width() == T::zero() {
        return Ok(T::zero());
    }
    let first = gk15(&mut f, iv.lo, iv.hi)?;
    if !first.value.is_finite() {
        return Err(Error::Numerical(format!(
            "non-finite integrand on [{}, {}]",
            iv.lo, iv.hi
        )));
    }
    let mut segments = vec![first];
    let min_width = iv.width() * T::epsilon() * T::lit(64.0);
    for _ in 0..MAX_SUBDIVISIONS {
        let total_err = segments.iter().fold(T::zero(), |acc, s| acc + s.error);
        if total_err <= tol {
            return Ok(segments.iter().fold(T::zero(), |acc, s| acc + s.value));
        }
        let worst = segments.iter().enumerate().fold(0, |best, (i, s)| {
            if s.error > segments[best].error {
                i
            } else {
                best
            }
        });
        let seg = segments.swap_remove(worst);
        if seg.b - seg.a <= min_width {
            return Err(Error::Numerical(format!(
                "quadrature cannot subdivide [{}, {}] further (error {})",
                seg.a, seg.b, seg.error
            )));
        }
        let mid = (seg.a + seg.b) * T::half();
        let left = gk15(&mut f, seg.a, mid)?;
        let right = gk15(&mut f, mid, seg.b)?;
        if !(left.value.is_finite() && right.value.is_finite()) {
            return Err(Error::Numerical(format!(
                "non-finite integrand on [{}, {}]",
                seg.a, seg.b
            )));
        }
        segments.push(left);
        segments.push(right);
    }
    Err(Error::Numerical(format!(
        "quadrature on [{}, {}] did not reach tolerance {} after {} subdivisions",
        iv.lo, iv.hi, tol, MAX_SUBDIVISIONS
    )))
}

/// Integrates `f` over `iv` to absolute tolerance `tol`.
pub fn integrate<T, F>(f: F, iv: Interval<T>, tol: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    try_integrate(|x| Ok(f(x)), iv, tol)
}

#[inline]
fn sanitize<T: Real>(v: T) -> T {
    if v.is_nan() {
        T::neg_infinity()
    } else {
        v
    }
}

/// Maximizes a fallible objective: grid scan followed by golden-section
/// refinement of the best grid cell.
///
/// NaN values are treated as minus infinity. Among equal values the smaller
/// argument wins. The returned value is never below any sampled grid value.
pub fn try_maximize_1d<T, E, F>(
    mut f: F,
    iv: Interval<T>,
    search: Search<T>,
) -> Result<OptimResult<T>, E>
where
    T: Real,
    F: FnMut(T) -> Result<T, E>,
{
    let mut evaluations = 0usize;
    let mut eval = |x: T| -> Result<T, E> {
        evaluations += 1;
        f(x).map(sanitize)
    };

    if iv.width() == T::zero() {
        let value = eval(iv.lo)?;
        return Ok(OptimResult {
            arg: iv.lo,
            value,
            evaluations,
        });
    }

    let n = search.grid.max(Search::<T>::MIN_GRID);
    let step = iv.width() / T::from_usize(n - 1).unwrap();
    let at = |i: usize| {
        if i == n - 1 {
            iv.hi
        } else {
            iv.lo + step * T::from_usize(i).unwrap()
        }
    };

    let mut best_i = 0;
    let mut best_v = T::neg_infinity();
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let v = eval(at(i))?;
        values.push(v);
        if i == 0 || v > best_v {
            best_i = i;
            best_v = v;
        }
    }

    let mut best_x = at(best_i);
    let a0 = at(best_i.saturating_sub(1));
    let b0 = at((best_i + 1).min(n - 1));

    // Golden section on [a0, b0]; keeps the best point seen.
    let inv_phi = T::lit(0.618_033_988_749_894_9);
    let (mut a, mut b) = (a0, b0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = eval(c)?;
    let mut fd = eval(d)?;
    let tol = search.tol.max(T::epsilon() * iv.width());
    let mut iterations = 0;
    while b - a > tol && iterations < 300 {
        iterations += 1;
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d)?;
        }
    }
    let (refined_x, refined_v) = if fd > fc { (d, fd) } else { (c, fc) };
    if refined_v > best_v {
        best_x = refined_x;
        best_v = refined_v;
    }

    Ok(OptimResult {
        arg: best_x,
        value: best_v,
        evaluations,
    })
}

/// Maximizes `f` over `iv`. See [`try_maximize_1d`].
pub fn maximize_1d<T, F>(f: F, iv: Interval<T>, search: Search<T>) -> OptimResult<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    match try_maximize_1d(|x| Ok::<T, Infallible>(f(x)), iv, search) {
        Ok(r) => r,
        Err(never) => match never {},
    }
}

/// Minimizes a fallible objective; NaN values count as plus infinity.
pub fn try_minimize_1d<T, E, F>(
    mut f: F,
    iv: Interval<T>,
    search: Search<T>,
) -> Result<OptimResult<T>, E>
where
    T: Real,
    F: FnMut(T) -> Result<T, E>,
{
    let r = try_maximize_1d(|x| f(x).map(|v| -v), iv, search)?;
    Ok(OptimResult {
        value: -r.value,
        ..r
    })
}

/// Minimizes `f` over `iv`.
pub fn minimize_1d<T, F>(f: F, iv: Interval<T>, search: Search<T>) -> OptimResult<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    let r = maximize_1d(|x| -f(x), iv, search);
    OptimResult {
        value: -r.value,
        ..r
    }
}

/// Bisection for a root of a fallible function bracketed by `iv`.
///
/// Stops once the bracket is at most `tol` wide and returns its midpoint.
pub fn try_find_root<T, F>(mut f: F, iv: Interval<T>, tol: T) -> Result<T>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let (mut a, mut b) = (iv.lo, iv.hi);
    let fa = f(a)?;
    let fb = f(b)?;
    if fa.is_nan() || fb.is_nan() || fa * fb > T::zero() {
        return Err(Error::Bracket {
            lo: a.as_f64(),
            hi: b.as_f64(),
            f_lo: fa.as_f64(),
            f_hi: fb.as_f64(),
        });
    }
    let negative_at_a = fa < T::zero() || (fa == T::zero() && fb > T::zero());
    let mut iterations = 0;
    while b - a > tol && iterations < 1100 {
        iterations += 1;
        let m = (a + b) * T::half();
        if m <= a || m >= b {
            break;
        }
        let fm = f(m)?;
        if fm.is_nan() {
            return Err(Error::Numerical(format!("NaN during bisection at {m}")));
        }
        // Keep the sub-bracket whose endpoints still straddle zero.
        let m_on_a_side = if negative_at_a {
            fm < T::zero()
        } else {
            fm > T::zero()
        };
        if m_on_a_side {
            a = m;
        } else {
            b = m;
        }
    }
    Ok((a + b) * T::half())
}

/// Bisection for a root of `f` bracketed by `iv`.
pub fn find_root<T, F>(f: F, iv: Interval<T>, tol: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    try_find_root(|x| Ok(f(x)), iv, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Interval<f64> {
        Interval::new(0.0, 1.0).unwrap()
    }

    #[test]
    fn interval_rejects_inverted_and_infinite() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn integrates_trivial_integrands() {
        assert_eq!(integrate(|_| 0.0, unit(), 1e-9).unwrap(), 0.0);
        let half = Interval::new(0.0f64, 0.5).unwrap();
        assert!((integrate(|_| 1.0, half, 1e-9).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn integrates_log_against_antiderivative() {
        // d/dx [((1-x)ln(1-x) + x)/ln 2] = -log2(1-x)
        let antiderivative = |x: f64| ((1.0 - x) * (1.0 - x).ln() + x) / std::f64::consts::LN_2;
        let exact = antiderivative(0.5) - antiderivative(0.0);
        let got = integrate(
            |x: f64| (1.0 / (1.0 - x)).log2(),
            Interval::new(0.0, 0.5).unwrap(),
            1e-9,
        )
        .unwrap();
        assert!((got - exact).abs() < 1e-9);
        assert!((exact - 0.2213).abs() < 1e-3);
    }

    #[test]
    fn integrates_square_root_endpoint_singularity() {
        let got = integrate(|x: f64| (1.0 - x).max(0.0).sqrt(), unit(), 1e-9).unwrap();
        assert!((got - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn quadrature_reports_failure_on_nonintegrable() {
        let r = integrate(|x: f64| 1.0 / x, unit(), 1e-9);
        assert!(matches!(r, Err(Error::Numerical(_))));
    }

    #[test]
    fn quadrature_error_propagates_from_integrand() {
        let r = try_integrate(
            |x: f64| {
                if x > 0.5 {
                    Err(Error::Numerical("boom".into()))
                } else {
                    Ok(x)
                }
            },
            unit(),
            1e-9,
        );
        assert_eq!(r, Err(Error::Numerical("boom".into())));
    }

    #[test]
    fn maximizes_quadratic() {
        let r = maximize_1d(
            |x: f64| -(x - 0.3) * (x - 0.3),
            unit(),
            Search::new(64, 1e-10),
        );
        assert!((r.arg - 0.3).abs() < 1e-8);
        assert!(r.value.abs() < 1e-15);
        assert!(unit().contains(r.arg));
    }

    #[test]
    fn constant_objective_breaks_tie_toward_lo() {
        let r = maximize_1d(|_: f64| 2.0, unit(), Search::default());
        assert_eq!(r.arg, 0.0);
        assert_eq!(r.value, 2.0);
    }

    #[test]
    fn degenerate_interval_returns_endpoint() {
        let iv = Interval::new(0.25, 0.25).unwrap();
        let r = maximize_1d(|x: f64| x * x, iv, Search::default());
        assert_eq!(r.arg, 0.25);
        assert_eq!(r.value, 0.0625);
        assert_eq!(r.evaluations, 1);
    }

    #[test]
    fn maximum_at_endpoint() {
        let r = maximize_1d(|x: f64| x, unit(), Search::new(16, 1e-12));
        assert_eq!(r.arg, 1.0);
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn nan_counts_as_minus_infinity() {
        let r = maximize_1d(
            |x: f64| if x < 0.5 { f64::NAN } else { 1.0 - x },
            unit(),
            Search::default(),
        );
        assert!((r.arg - 0.5).abs() < 1e-2);
        let all_nan = maximize_1d(|_: f64| f64::NAN, unit(), Search::default());
        assert_eq!(all_nan.value, f64::NEG_INFINITY);
    }

    #[test]
    fn minimizes() {
        let r = minimize_1d(|x: f64| (x - 0.7).powi(2) + 1.0, unit(), Search::default());
        assert!((r.arg - 0.7).abs() < 1e-7);
        assert!((r.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn finds_roots() {
        assert!((find_root(|x: f64| x - 0.5, unit(), 1e-12).unwrap() - 0.5).abs() < 1e-12);
        let err = find_root(|x: f64| x + 1.0, unit(), 1e-12);
        assert!(matches!(err, Err(Error::Bracket { .. })));
    }

    #[test]
    fn root_at_bracket_endpoint() {
        let r = find_root(|x: f64| x, unit(), 1e-12).unwrap();
        assert!(r.abs() < 1e-12);
        let r = find_root(|x: f64| 1.0 - x, unit(), 1e-12).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn works_in_single_precision() {
        let iv = Interval::new(0.0f32, 1.0).unwrap();
        let r = maximize_1d(|x: f32| -(x - 0.3) * (x - 0.3), iv, Search::default());
        assert!((r.arg - 0.3).abs() < 1e-3);
        let root = find_root(|x: f32| x * x - 0.25, iv, 1e-6).unwrap();
        assert!((root - 0.5).abs() < 1e-5);
        let area = integrate(|x: f32| x, iv, 1e-5).unwrap();
        assert!((area - 0.5).abs() < 1e-5);
    }
}
