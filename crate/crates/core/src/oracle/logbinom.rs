//! Log-domain binomial coefficients and sums.

/// Table of `ln k!` for `k = 0..=n`.
#[derive(Debug, Clone)]
pub(crate) struct LogFactorial {
    table: Vec<f64>,
}

impl LogFactorial {
    pub(crate) fn new(n: usize) -> Self {
        let mut table = Vec::with_capacity(n + 1);
        let mut acc = 0.0f64;
        table.push(0.0);
        for k in 1..=n {
            acc += (k as f64).ln();
            table.push(acc);
        }
        LogFactorial { table }
    }

    /// `log2 C(n, k)`, minus infinity outside `0 <= k <= n`.
    pub(crate) fn log2_binom(&self, n: i64, k: i64) -> f64 {
        if n < 0 || k < 0 || k > n {
            return f64::NEG_INFINITY;
        }
        let (n, k) = (n as usize, k as usize);
        (self.table[n] - self.table[k] - self.table[n - k]) / std::f64::consts::LN_2
    }
}

/// `log2 sum 2^x_i`; minus infinity for an empty or all-minus-infinity input.
pub(crate) fn log2_sum_exp2(xs: &[f64]) -> f64 {
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + xs.iter().map(|x| (x - max).exp2()).sum::<f64>().log2()
}
