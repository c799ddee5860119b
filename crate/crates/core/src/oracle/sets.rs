//! Finite-length probabilities of the equidistance sets behind the pairwise
//! and overlap exponents.
//!
//! For codewords `x_i, x_j` at distance `w`, `X_ij` is the set of received
//! words at distance `t = w/2 + s` from both, with `s = p(n - w)` rounded.
//! `x_k` lies at distance `w` from `x_i` and `l` from `x_j`.

use super::logbinom::{log2_sum_exp2, LogFactorial};
use crate::error::{Error, Result};

/// Integer geometry of three codewords and the equidistance level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairwiseGeometry {
    pub n: usize,
    /// `d(x_i, x_j) = d(x_i, x_k)`, even.
    pub w: usize,
    /// `d(x_j, x_k)`, even and at most `2w`.
    pub l: usize,
    /// `round(p(n - w))`, half to even.
    pub s: usize,
}

/// `2 round(x/2)`, the even integer nearest to `x`.
fn nearest_even(x: f64) -> usize {
    (2.0 * (x / 2.0).round_ties_even()) as usize
}

impl PairwiseGeometry {
    pub fn new(n: usize, w: usize, l: usize, s: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n", 0.0, "[1, inf)"));
        }
        if !w.is_multiple_of(2) || w > n {
            return Err(Error::domain("w", w as f64, "even, [0, n]"));
        }
        if !l.is_multiple_of(2) || l > 2 * w || l > n {
            return Err(Error::domain("l", l as f64, "even, [0, min(2w, n)]"));
        }
        if s > n - w {
            return Err(Error::domain("s", s as f64, "[0, n - w]"));
        }
        Ok(PairwiseGeometry { n, w, l, s })
    }

    /// Rounds `omega n` and `lambda n` to even integers and `p(n - w)` to
    /// the nearest integer (ties to even). `l` is then capped at `2w`.
    pub fn from_relative(n: usize, omega: f64, lambda: f64, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&omega) {
            return Err(Error::domain("omega", omega, "[0, 1]"));
        }
        if !(0.0..=2.0).contains(&lambda) {
            return Err(Error::domain("lambda", lambda, "[0, 2 omega]"));
        }
        if !(p > 0.0 && p < 0.5) {
            return Err(Error::domain("crossover probability p", p, "(0, 1/2)"));
        }
        let w = nearest_even(omega * n as f64).min(n - n % 2);
        let l = nearest_even(lambda * n as f64).min(2 * w).min(n - n % 2);
        let s = (p * (n - w) as f64).round_ties_even() as usize;
        Self::new(n, w, l, s)
    }

    /// Distance `w/2 + s` of the set `X_ij` from `x_i` and `x_j`.
    pub fn t(&self) -> usize {
        self.w / 2 + self.s
    }

    /// `log2 p^t (1-p)^(n-t)`, the probability of one word of `X_ij`.
    fn log2_point(&self, p: f64) -> f64 {
        let t = self.t() as f64;
        t * p.log2() + (self.n as f64 - t) * (1.0 - p).log2()
    }
}

fn check_p(p: f64) -> Result<()> {
    if p > 0.0 && p < 0.5 {
        Ok(())
    } else {
        Err(Error::domain("crossover probability p", p, "(0, 1/2)"))
    }
}

/// `(1/n) log2 P_i(X_ij)` with `|X_ij| = C(w, w/2) C(n-w, s)`.
pub fn pairwise_set_logprob(g: &PairwiseGeometry, p: f64) -> Result<f64> {
    check_p(p)?;
    let lf = LogFactorial::new(g.n);
    let (n, w, s) = (g.n as i64, g.w as i64, g.s as i64);
    let count = lf.log2_binom(w, w / 2) + lf.log2_binom(n - w, s);
    Ok((count + g.log2_point(p)) / g.n as f64)
}

/// `(1/n) log2 P_i(X_ik and X_ij)`:
/// `sum_m C(l/2, m)^2 C(w - l/2, w/2 - m) C(n - w - l/2, s - m)` words, each
/// of probability `p^t (1-p)^(n-t)`. Minus infinity when no `m` is feasible.
pub fn joint_set_logprob(g: &PairwiseGeometry, p: f64) -> Result<f64> {
    check_p(p)?;
    let lf = LogFactorial::new(g.n);
    let (n, w, l, s) = (g.n as i64, g.w as i64, g.l as i64, g.s as i64);
    let half_l = l / 2;
    let terms: Vec<f64> = (0..=half_l.min(s))
        .map(|m| {
            2.0 * lf.log2_binom(half_l, m)
                + lf.log2_binom(w - half_l, w / 2 - m)
                + lf.log2_binom(n - w - half_l, s - m)
        })
        .collect();
    let count = log2_sum_exp2(&terms);
    if count == f64::NEG_INFINITY {
        return Ok(count);
    }
    Ok((count + g.log2_point(p)) / g.n as f64)
}

/// `(1/n) log2 P_i(X_ik | X_ij)`, the finite-length counterpart of the
/// overlap exponent.
pub fn conditional_set_logprob(g: &PairwiseGeometry, p: f64) -> Result<f64> {
    let joint = joint_set_logprob(g, p)?;
    if joint == f64::NEG_INFINITY {
        return Ok(joint);
    }
    Ok(joint - pairwise_set_logprob(g, p)?)
}
