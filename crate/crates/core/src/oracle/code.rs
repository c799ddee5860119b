//! Explicit binary codes and their distance distributions.

use std::collections::HashSet;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest block length a [`BinaryCode`] can hold.
pub const MAX_LENGTH: usize = 64;

/// A set of at least two distinct binary words of length `n <= 64`, each
/// stored in the low `n` bits of a `u64` (first character = most
/// significant bit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    words: Vec<u64>,
}

impl BinaryCode {
    pub fn new(n: usize, words: Vec<u64>) -> Result<Self> {
        if n == 0 || n > MAX_LENGTH {
            return Err(Error::domain("block length", n as f64, "[1, 64]"));
        }
        if words.len() < 2 {
            return Err(Error::domain(
                "number of codewords",
                words.len() as f64,
                "[2, inf)",
            ));
        }
        let mask = mask(n);
        let mut seen = HashSet::with_capacity(words.len());
        for (i, &w) in words.iter().enumerate() {
            if w & !mask != 0 {
                return Err(Error::CodeFormat {
                    line: i + 1,
                    msg: format!("word has bits beyond length {n}"),
                });
            }
            if !seen.insert(w) {
                return Err(Error::CodeFormat {
                    line: i + 1,
                    msg: "duplicate codeword".into(),
                });
            }
        }
        Ok(BinaryCode { n, words })
    }

    /// Parses one codeword per line written with the characters `0` and `1`.
    /// Blank lines are skipped; line numbers in errors are 1-based.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut words = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let s = raw.trim();
            if s.is_empty() {
                continue;
            }
            let len = s.chars().count();
            match n {
                None if len > MAX_LENGTH => {
                    return Err(Error::CodeFormat {
                        line,
                        msg: format!("length {len} exceeds {MAX_LENGTH}"),
                    })
                }
                None => n = Some(len),
                Some(m) if m != len => {
                    return Err(Error::CodeFormat {
                        line,
                        msg: format!("length {len} differs from {m}"),
                    })
                }
                _ => {}
            }
            let mut w = 0u64;
            for c in s.chars() {
                w = (w << 1)
                    | match c {
                        '0' => 0,
                        '1' => 1,
                        other => {
                            return Err(Error::CodeFormat {
                                line,
                                msg: format!("unexpected character {other:?}"),
                            })
                        }
                    };
            }
            if !seen.insert(w) {
                return Err(Error::CodeFormat {
                    line,
                    msg: "duplicate codeword".into(),
                });
            }
            words.push(w);
        }
        let Some(n) = n else {
            return Err(Error::CodeFormat {
                line: 0,
                msg: "no codewords".into(),
            });
        };
        if words.len() < 2 {
            return Err(Error::CodeFormat {
                line: 0,
                msg: "a code needs at least two codewords".into(),
            });
        }
        Self::new(n, words)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// The words as `0`/`1` lines, the inverse of [`BinaryCode::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &w in &self.words {
            for b in (0..self.n).rev() {
                out.push(if w >> b & 1 == 1 { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// The two-word repetition code `{0^n, 1^n}`.
    pub fn repetition(n: usize) -> Result<Self> {
        Self::new(n, vec![0, mask(n)])
    }

    /// Span of the rows of a `k x n` generator matrix.
    pub fn linear(n: usize, generator: &[u64]) -> Result<Self> {
        let k = generator.len();
        if k == 0 || k >= 32 {
            return Err(Error::domain("code dimension", k as f64, "[1, 31]"));
        }
        let words = (0u64..1 << k)
            .map(|m| {
                generator
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .fold(0, |acc, (_, &g)| acc ^ g)
            })
            .collect();
        Self::new(n, words)
    }

    /// The `[7, 4]` Hamming code.
    pub fn hamming74() -> Self {
        let g = [0b100_0110, 0b010_0101, 0b001_0011, 0b000_1111];
        Self::linear(7, &g).expect("Hamming generator has full rank")
    }

    /// A random linear `[n, k]` code whose generator rows are drawn with
    /// ChaCha8 from `seed` until they are linearly independent.
    pub fn random_linear(n: usize, k: usize, seed: u64) -> Result<Self> {
        if k == 0 || k > n.min(31) {
            return Err(Error::domain("code dimension", k as f64, "[1, min(n, 31)]"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mask = mask(n);
        'draw: loop {
            let rows: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & mask).collect();
            // Gaussian elimination over GF(2) to test the rank.
            let mut basis: Vec<u64> = Vec::with_capacity(k);
            for &r in &rows {
                let mut v = r;
                for &b in &basis {
                    v = v.min(v ^ b);
                }
                if v == 0 {
                    continue 'draw;
                }
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
            return Self::linear(n, &rows);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false: a code has at least two words.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// `log2(M) / n` in bits.
    pub fn rate(&self) -> f64 {
        (self.len() as f64).log2() / self.n as f64
    }

    /// Local distance distributions `B^i_w` and their sum over `i`.
    pub fn distance_distribution(&self) -> DistanceDistribution {
        let n = self.n;
        let local: Vec<Vec<u64>> = self
            .words
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let mut row = vec![0u64; n + 1];
                for (j, &b) in self.words.iter().enumerate() {
                    if i != j {
                        row[(a ^ b).count_ones() as usize] += 1;
                    }
                }
                row
            })
            .collect();
        let mut total = vec![0u64; n + 1];
        for row in &local {
            for (t, v) in total.iter_mut().zip(row) {
                *t += v;
            }
        }
        DistanceDistribution { local, total }
    }
}

#[inline]
pub(crate) fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Exact distance distribution of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    /// `local[i][w] = |{j != i : d(x_i, x_j) = w}|`.
    pub local: Vec<Vec<u64>>,
    /// `total[w] = sum_i local[i][w]`.
    pub total: Vec<u64>,
}

impl DistanceDistribution {
    /// Average distribution `B_w = total[w] / M`.
    pub fn average(&self) -> Vec<f64> {
        let m = self.local.len() as f64;
        self.total.iter().map(|&t| t as f64 / m).collect()
    }

    /// Whether every word sees the same distribution, as in a linear code.
    pub fn is_distance_invariant(&self) -> bool {
        self.local.windows(2).all(|w| w[0] == w[1])
    }

    pub fn minimum_distance(&self) -> usize {
        self.total.iter().position(|&t| t > 0).unwrap_or(0)
    }
}
