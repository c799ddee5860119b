//! Maximum-likelihood decoding error probability of explicit codes on the
//! binary symmetric channel. Ties count as errors throughout.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::code::BinaryCode;
use crate::error::{Error, Result};

/// Largest block length enumerated exactly (`2^26` received words).
pub const MAX_EXACT_LENGTH: usize = 26;

/// Smallest number of Monte Carlo trials accepted.
pub const MIN_TRIALS: u64 = 10_000;

/// Trials per independently seeded Monte Carlo block.
pub const MC_BLOCK: u64 = 1 << 16;

/// Identifier of the generator behind [`monte_carlo_pe`].
pub const RNG_NAME: &str = "ChaCha8 (rand_chacha 0.3), stream = block index";

const CHUNK_BITS: usize = 14;

fn check_p(p: f64) -> Result<()> {
    if (0.0..=0.5).contains(&p) {
        Ok(())
    } else {
        Err(Error::domain("crossover probability p", p, "[0, 1/2]"))
    }
}

fn check_budget(code: &BinaryCode) -> Result<()> {
    if code.n() > MAX_EXACT_LENGTH {
        Err(Error::Budget {
            n: code.n(),
            max: MAX_EXACT_LENGTH,
        })
    } else {
        Ok(())
    }
}

/// `p^d (1-p)^(n-d)` for `d = 0..=n`.
fn weights(n: usize, p: f64) -> Vec<f64> {
    (0..=n)
        .map(|d| p.powi(d as i32) * (1.0 - p).powi((n - d) as i32))
        .collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Distances from `y` to every codeword, minimum and its multiplicity.
#[inline]
fn nearest(words: &[u64], y: u64) -> (u32, usize) {
    let mut best = u32::MAX;
    let mut count = 0;
    for &w in words {
        let d = (w ^ y).count_ones();
        if d < best {
            best = d;
            count = 1;
        } else if d == best {
            count += 1;
        }
    }
    (best, count)
}

/// Exact probability of a maximum-likelihood decoding error, averaged over
/// equiprobable codewords. A received word equally close to the sent
/// codeword and another one counts as an error. Requires `n <= 26`.
///
/// Correct decodings are tallied as integers per distance and the result
/// does not depend on how received words are split between threads.
pub fn exact_pe_ml(code: &BinaryCode, p: f64) -> Result<f64> {
    check_p(p)?;
    check_budget(code)?;
    let n = code.n();
    let words = code.words();
    let total: u64 = 1 << n;
    let chunk = 1u64 << CHUNK_BITS.min(n);
    let correct = (0..total / chunk)
        .into_par_iter()
        .map(|c| {
            let mut counts = vec![0u64; n + 1];
            for y in c * chunk..(c + 1) * chunk {
                let (d, k) = nearest(words, y);
                if k == 1 {
                    counts[d as usize] += 1;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    // Error pairs at distance d: M C(n, d) - correct[d].
    let m = code.len() as u64;
    let w = weights(n, p);
    let pe: f64 = (0..=n)
        .map(|d| (m * binomial(n, d) - correct[d]) as f64 * w[d])
        .sum();
    let m = m as f64;
    Ok((pe / m).clamp(0.0, 1.0))
}

/// Monte Carlo estimate of the decoding error probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    /// Binomial standard error `sqrt(P(1-P)/trials)`.
    pub stderr: f64,
    pub errors: u64,
    pub trials: u64,
    pub seed: u64,
}

/// Transmits uniformly chosen codewords through the channel `trials` times
/// and counts maximum-likelihood errors (ties are errors).
///
/// Trials are split into blocks of [`MC_BLOCK`]; block `b` draws from
/// ChaCha8 seeded with `seed` on stream `b`. Error counts are summed as
/// integers, so the estimate depends only on `(code, p, trials, seed)`.
pub fn monte_carlo_pe(code: &BinaryCode, p: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    check_p(p)?;
    if trials < MIN_TRIALS {
        return Err(Error::domain("trials", trials as f64, "[10000, inf)"));
    }
    let n = code.n();
    let words = code.words();
    let m = words.len();
    let blocks = trials.div_ceil(MC_BLOCK);
    let errors: u64 = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let count = MC_BLOCK.min(trials - b * MC_BLOCK);
            let mut errors = 0u64;
            for _ in 0..count {
                let i = rng.gen_range(0..m);
                let mut noise = 0u64;
                for bit in 0..n {
                    if rng.gen::<f64>() < p {
                        noise |= 1 << bit;
                    }
                }
                let sent = words[i];
                let y = sent ^ noise;
                let own = noise.count_ones();
                if words
                    .iter()
                    .enumerate()
                    .any(|(j, &w)| j != i && (w ^ y).count_ones() <= own)
                {
                    errors += 1;
                }
            }
            errors
        })
        .sum();
    let estimate = errors as f64 / trials as f64;
    Ok(McEstimate {
        estimate,
        stderr: (estimate * (1.0 - estimate) / trials as f64).sqrt(),
        errors,
        trials,
        seed,
    })
}

/// Pairwise error region used by the reverse union bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `{y : d(x_j, y) <= d(x_i, y)}`.
    Voronoi,
    /// `{y : d(x_i, y) = d(x_j, y)}`, the equidistant words.
    Midpoint,
}

/// Second-order lower bounds on the error probability, one per distance.
#[derive(Debug, Clone, PartialEq)]
pub struct ReverseUnion {
    /// Exact error probability.
    pub pe: f64,
    /// `(w, bound)`: `(1/M) sum_i [sum_j P_i(X_ij) - sum_{j<k} P_i(X_ij and X_ik)]`
    /// over neighbors `j, k` of `x_i` at distance `w`.
    pub by_distance: Vec<(usize, f64)>,
}

impl ReverseUnion {
    pub fn best(&self) -> f64 {
        self.by_distance.iter().map(|b| b.1).fold(0.0, f64::max)
    }

    /// Whether no per-distance bound exceeds the exact error probability,
    /// up to `slack`.
    pub fn holds(&self, slack: f64) -> bool {
        self.by_distance.iter().all(|&(_, b)| b <= self.pe + slack)
    }
}

/// Evaluates the per-distance reverse union bounds exactly for codes with
/// `n <= 26`, together with the exact error probability.
pub fn reverse_union(code: &BinaryCode, p: f64, region: Region) -> Result<ReverseUnion> {
    let pe = exact_pe_ml(code, p)?;
    let n = code.n();
    let words = code.words();
    let w = weights(n, p);
    let dist = code.distance_distribution();
    let m = words.len();
    let sums = (0..m)
        .into_par_iter()
        .map(|i| {
            let xi = words[i];
            let mut first = vec![0.0f64; n + 1];
            let mut second = vec![0.0f64; n + 1];
            let mut hits = vec![0u64; n + 1];
            for y in 0u64..1 << n {
                let di = (xi ^ y).count_ones();
                hits.iter_mut().for_each(|h| *h = 0);
                for (j, &xj) in words.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    let dj = (xj ^ y).count_ones();
                    let inside = match region {
                        Region::Voronoi => dj <= di,
                        Region::Midpoint => dj == di,
                    };
                    if inside {
                        hits[(xi ^ xj).count_ones() as usize] += 1;
                    }
                }
                let py = w[di as usize];
                for d in 0..=n {
                    let k = hits[d] as f64;
                    first[d] += py * k;
                    second[d] += py * k * (k - 1.0) / 2.0;
                }
            }
            (first, second)
        })
        .collect::<Vec<_>>();
    let by_distance = (0..=n)
        .filter(|&d| dist.total[d] > 0)
        .map(|d| {
            let s: f64 = sums.iter().map(|(f, s)| f[d] - s[d]).sum();
            (d, s / m as f64)
        })
        .collect();
    Ok(ReverseUnion { pe, by_distance })
}
