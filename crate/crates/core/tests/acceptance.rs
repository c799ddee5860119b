//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use reliability::awgn::{self, ChannelAwgn, RStar};
use reliability::bsc::{self, DistanceProfile, UpperEnvelope};
use reliability::entropy::{gv_distance, h, ChannelBsc};
use reliability::lp::r_bar;
use reliability::numerics::Search;
use reliability::oracle::{self, BinaryCode, PairwiseGeometry, Region};
use reliability::poly::{hahn_exponent, krawtchouk_exponent};
use reliability::{Resolution, Result};

type Check = fn() -> Result<Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn within(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

fn bsc(p: f64) -> ChannelBsc<f64> {
    ChannelBsc::new(p).expect("valid crossover probability")
}

fn landmarks_p001() -> Result<Outcome> {
    let start = Instant::now();
    let l = bsc::landmarks(&bsc(0.01), &Resolution::default())?;
    let elapsed = start.elapsed();
    let r0 = l.r0.unwrap_or(f64::NAN);
    let r0s = l.r0_star.unwrap_or(f64::NAN);
    let pass = within(l.r_crit, 0.559, 1e-3)
        && within(l.r1, 0.537, 2e-3)
        && within(r0, 0.271, 5e-3)
        && within(r0s, 0.388, 5e-3)
        && elapsed <= Duration::from_secs(120);
    outcome(
        pass,
        format!(
            "r_crit {:.5} (0.559+-1e-3), r1 {:.5} (0.537+-2e-3), r0 {r0:.5} (0.271+-5e-3), \
             r0* {r0s:.5} (0.388+-5e-3) bits; {:.2}s (<=120s)",
            l.r_crit,
            l.r1,
            elapsed.as_secs_f64()
        ),
    )
}

fn awgn_a2() -> Result<Outcome> {
    let start = Instant::now();
    let l = awgn::landmarks(&ChannelAwgn::new(2.0)?)?;
    let elapsed = start.elapsed();
    let r_star = match l.r_star {
        RStar::Root(r) => r,
        RStar::BeyondWindow => f64::NAN,
    };
    let pass = within(l.r_x, 0.094, 1e-3)
        && within(l.r1, 0.199, 1e-3)
        && within(r_star, 0.263, 1e-3)
        && within(l.r_crit, 0.267, 1e-3)
        && elapsed <= Duration::from_secs(1);
    outcome(
        pass,
        format!(
            "R_x {:.5}, R1 {:.5}, R* {r_star:.5}, R_crit {:.5} nats (each +-1e-3); {:.3}s (<=1s)",
            l.r_x,
            l.r1,
            l.r_crit,
            elapsed.as_secs_f64()
        ),
    )
}

fn tangency_identity() -> Result<Outcome> {
    let mut worst_tangent = 0.0f64;
    let mut worst_identity = 0.0f64;
    for p in [0.05, 0.08, 0.10, 0.25] {
        let ch = bsc(p);
        let d1 = ch.delta1();
        let r1 = r_bar(d1, Search::default())?;
        let union = -ch.pairwise_exponent(d1)? - r1 + 1.0 - h(d1)?;
        let e0 = bsc::random_coding(r1, &ch)?;
        worst_tangent = worst_tangent.max((union - e0).abs());

        // Plain f64 evaluation, independent of the library.
        let u = 2.0 * (p * (1.0 - p)).sqrt();
        let d = u / (1.0 + u);
        let hd = -d * d.log2() - (1.0 - d) * (1.0 - d).log2();
        worst_identity = worst_identity.max((hd + d * u.log2() - (1.0 + u).log2()).abs());
    }
    outcome(
        worst_tangent <= 1e-6 && worst_identity <= 1e-9,
        format!(
            "max |union(R1) - E0(R1)| = {worst_tangent:.2e} bits (<=1e-6), \
             max |h(d1) + d1 log2 u - log2(1+u)| = {worst_identity:.2e} (<=1e-9)"
        ),
    )
}

fn gaussian_meeting_point() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for a in [0.5f64, 1.0, 2.0, 4.0] {
        let ch = ChannelAwgn::new(a)?;
        let r = awgn::psi(ch.theta_x())?;
        let gap = awgn::random_coding(r, &ch)? - awgn::union_exponent(r, &ch)?;
        worst = worst.max(gap.abs());
    }
    outcome(
        worst <= 1e-6,
        format!(
            "max |E0 - E_U| at psi(theta_x) = {worst:.2e} nats (<=1e-6), a in {{0.5, 1, 2, 4}}"
        ),
    )
}

fn hahn_krawtchouk() -> Result<Outcome> {
    let points: [(f64, f64); 10] = [
        (0.02, 0.1),
        (0.05, 0.25),
        (0.08, 0.2),
        (0.1, 0.05),
        (0.11, 0.15),
        (0.15, 0.1),
        (0.2, 0.05),
        (0.25, 0.04),
        (0.3, 0.02),
        (0.4, 0.005),
    ];
    let mut worst = 0.0f64;
    for (tau, omega) in points {
        let q = hahn_exponent(0.5, tau, omega / 2.0, 1e-12)?;
        let k = krawtchouk_exponent(tau, omega, 1e-12)?;
        worst = worst.max((q - k).abs());
    }
    outcome(
        worst <= 1e-6,
        format!(
            "max |q(1/2, tau, omega/2) - k(tau, omega)| = {worst:.2e} bits (<=1e-6) on 10 points"
        ),
    )
}

fn oracle_convergence() -> Result<Outcome> {
    let mut k_gap = 0.0f64;
    for (tau, omega) in [(0.11, 0.15), (0.05, 0.2), (0.2, 0.05)] {
        let n = 400;
        let (k, x) = (
            (tau * n as f64).round() as usize,
            (omega * n as f64).round() as usize,
        );
        let finite = oracle::krawtchouk_value(n, k, x)?.normalized_log2(n);
        let target = krawtchouk_exponent(k as f64 / n as f64, x as f64 / n as f64, 1e-12)?;
        k_gap = k_gap.max((finite - target).abs());
    }
    let mut a_gap = 0.0f64;
    for (omega, p) in [(0.15, 0.02), (0.3, 0.01), (0.1, 0.05)] {
        let g = PairwiseGeometry::from_relative(400, omega, 0.0, p)?;
        let finite = oracle::pairwise_set_logprob(&g, p)?;
        let target = bsc(p).pairwise_exponent(g.w as f64 / 400.0)?;
        a_gap = a_gap.max((finite - target).abs());
    }
    let mut b_gap = 0.0f64;
    for (omega, lambda, p) in [(0.2, 0.2, 0.1), (0.2, 0.3, 0.1), (0.15, 0.15, 0.05)] {
        let g = PairwiseGeometry::from_relative(600, omega, lambda, p)?;
        let finite = oracle::conditional_set_logprob(&g, p)?;
        let (w, l) = (g.w as f64 / 600.0, g.l as f64 / 600.0);
        let target = bsc::overlap_exponent(w, l, &bsc(p), 1e-12)?;
        b_gap = b_gap.max((finite - target).abs());
    }
    outcome(
        k_gap <= 0.02 && a_gap <= 0.02 && b_gap <= 0.03,
        format!(
            "max gaps in bits: Krawtchouk n=400 {k_gap:.4} (<=0.02), pairwise n=400 {a_gap:.4} (<=0.02), \
             overlap n=600 {b_gap:.4} (<=0.03)"
        ),
    )
}

fn overlap_monotonicity() -> Result<Outcome> {
    let mut worst = f64::INFINITY;
    let mut checked = 0usize;
    for p in [0.01, 0.1, 0.3] {
        let ch = bsc(p);
        let b = |w: f64, l: f64| bsc::overlap_exponent(w, l, &ch, 1e-12);
        for i in 1..=20 {
            let omega = i as f64 / 40.0;
            for j in 1..=20 {
                let lambda = j as f64 / 20.0;
                let slack = if lambda >= omega && lambda <= 2.0 * omega {
                    b(omega, omega)? - b(omega, lambda)?
                } else if lambda <= omega {
                    b(omega, lambda)? - b(lambda, lambda)?
                } else {
                    continue;
                };
                checked += 1;
                // -inf <= -inf counts as satisfied.
                let slack = if slack.is_nan() { 0.0 } else { slack };
                worst = worst.min(slack);
            }
        }
    }
    outcome(
        worst >= -1e-9,
        format!(
            "{checked} grid pairs over p in {{0.01, 0.1, 0.3}}, min slack {worst:.2e} (>=-1e-9)"
        ),
    )
}

fn union_term_reaches_r1() -> Result<Outcome> {
    let res = Resolution::default();
    let mut required = true;
    let mut parts = Vec::new();
    for p in [0.01, 0.03, 0.046, 0.08, 0.2] {
        let ch = bsc(p);
        let r1 = r_bar(ch.delta1(), Search::default())?;
        let at_r1 = bsc::lp_profile_bound(r1, &ch, &res)?;
        let margin = at_r1.spectrum_term - at_r1.overlap_term;
        let holds = margin > 0.0;
        if p >= 0.046 {
            required &= holds;
        }
        parts.push(format!(
            "p={p}: R1 {r1:.4}, margin {margin:+.4} ({})",
            if holds { "R1<R0*" } else { "R1>=R0*" }
        ));
    }
    outcome(
        required,
        format!(
            "union minus overlap term at R1, bits; required for p>=0.046, reported below: {}",
            parts.join("; ")
        ),
    )
}

fn tight_window_fraction() -> Result<Outcome> {
    let fraction = |p: f64| -> Result<f64> {
        let ch = bsc(p);
        let r1 = r_bar(ch.delta1(), Search::default())?;
        Ok((ch.r_crit() - r1) / (ch.r_crit() - ch.r_x()))
    };
    let ps = [0.05, 0.1, 0.2, 0.3, 0.4];
    let fr = ps
        .iter()
        .map(|&p| fraction(p))
        .collect::<Result<Vec<_>>>()?;
    let monotone = fr.windows(2).all(|w| w[1] > w[0]);
    let last = fraction(0.49)?;
    outcome(
        within(fr[0], 1.0 / 3.0, 0.05) && monotone && last > fr[4],
        format!(
            "fraction at p=0.05 {:.4} (1/3+-0.05); at 0.05..0.4 {:?} increasing: {monotone}; p=0.49 {last:.4}",
            fr[0],
            fr.iter().map(|x| (x * 1e4).round() / 1e4).collect::<Vec<_>>()
        ),
    )
}

fn exact_decoder() -> Result<Outcome> {
    let rep3 = BinaryCode::repetition(3)?;
    let pe = oracle::exact_pe_ml(&rep3, 0.1)?;
    let exact_ok = within(pe, 0.028, 1e-15);
    let mc = oracle::monte_carlo_pe(&rep3, 0.1, 1_000_000, 20_240_601)?;
    let z = (mc.estimate - pe) / mc.stderr;
    let mut reverse_ok = true;
    let mut distances = 0;
    for seed in [3, 11] {
        let code = BinaryCode::random_linear(12, 5, seed)?;
        let ru = oracle::reverse_union(&code, 0.1, Region::Voronoi)?;
        reverse_ok &= ru.holds(1e-12);
        distances += ru.by_distance.len();
    }
    outcome(
        exact_ok && z.abs() <= 4.0 && reverse_ok,
        format!(
            "repetition-3 P_e {pe:.15} (0.028 exact); Monte Carlo {:.6} +- {:.6}, z = {z:+.2} (|z|<=4); \
             reverse union below exact P_e at all {distances} distances of two [12,5] codes: {reverse_ok}",
            mc.estimate, mc.stderr
        ),
    )
}

fn envelope_sandwich() -> Result<Outcome> {
    let res = Resolution::default();
    let mut pass = true;
    let mut parts = Vec::new();
    for p in [0.01, 0.08] {
        let ch = bsc(p);
        let env = UpperEnvelope::with_default_rates(&ch, &res)?;
        let r1 = r_bar(ch.delta1(), Search::default())?;
        let mut rates = UpperEnvelope::default_rates(&ch)?;
        rates.push(ch.r_crit());
        let mut min_gap = f64::INFINITY;
        let mut window_gap = 0.0f64;
        let mut above_gap = 0.0f64;
        for &r in &rates {
            let (up, lo) = (env.value(r)?, bsc::lower_envelope(r, &ch)?);
            min_gap = min_gap.min(up - lo);
            if r >= ch.r_crit() {
                above_gap = above_gap.max(up - lo);
            } else if p == 0.08 && r >= r1 - 1e-12 {
                window_gap = window_gap.max(up - lo);
            }
        }
        pass &= min_gap >= -1e-9 && above_gap <= 2e-3 && window_gap <= 2e-3;
        parts.push(format!(
            "p={p}: min(upper-lower) {min_gap:.2e}, max gap on [r_crit, C) {above_gap:.2e}{}",
            if p == 0.08 {
                format!(", on [r1, r_crit] {window_gap:.2e}")
            } else {
                String::new()
            }
        ));
    }
    outcome(pass, format!("{} bits (tolerance 2e-3)", parts.join("; ")))
}

fn profile_bound_beats_min_distance_bound() -> Result<Outcome> {
    let ch = bsc(0.01);
    let res = Resolution::default();
    let r0 = 0.2709;
    let r1 = r_bar(ch.delta1(), Search::default())?;
    let rates: Vec<f64> = (1..46)
        .map(|k| 0.02 * k as f64)
        .filter(|&r| r < ch.capacity())
        .collect();
    let pairs = rates
        .par_iter()
        .map(|&r| {
            let md = bsc::min_distance_bound(r, &ch, &res)?.value();
            let prof = bsc::lp_profile_bound(r, &ch, &res)?.value;
            Ok((r, md, prof))
        })
        .collect::<Result<Vec<_>>>()?;
    let worst = pairs
        .iter()
        .map(|&(_, md, prof)| prof - md)
        .fold(f64::NEG_INFINITY, f64::max);
    let best_gain = pairs
        .iter()
        .filter(|&&(r, _, _)| r > r0 && r < r1)
        .map(|&(_, md, prof)| md - prof)
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-3 && best_gain > 1e-3,
        format!(
            "{} rates at p=0.01: max(profile - min-distance) {worst:.2e} (<=1e-3); largest improvement in (R0, R1) {best_gain:.4} bits",
            pairs.len()
        ),
    )
}

fn random_linear_profile() -> Result<Outcome> {
    let ch = bsc(0.05);
    let res = Resolution::default();
    let gap = |r: f64| -> Result<f64> {
        let profile = DistanceProfile::binomial(r)?;
        let v = bsc::profile_bound(r, &profile, &ch, &res)?.value;
        Ok(v + ch.pairwise_exponent(gv_distance(r)?)?)
    };
    let g05 = gap(0.05)?;
    let g10 = gap(0.1)?;
    let mut r_double_star = 0.1;
    let mut r = 0.11;
    while r < ch.capacity() && gap(r)?.abs() <= 1e-3 {
        r_double_star = r;
        r += 0.01;
    }
    outcome(
        g05.abs() <= 1e-3 && g10.abs() <= 1e-3,
        format!(
            "profile bound (binomial) + A(d_GV) at R=0.05: {g05:.2e}, R=0.1: {g10:.2e} bits (+-1e-3); \
             agreement holds up to R** ~ {r_double_star:.2} (0.01 grid, reported only)"
        ),
    )
}

fn main() {
    let criteria: [(&str, Check); 13] = [
        ("BSC p=0.01 landmarks", landmarks_p001),
        ("Gaussian a=2 landmarks", awgn_a2),
        ("tangency identity at R1", tangency_identity),
        ("Gaussian E0 = E_U at psi(theta_x)", gaussian_meeting_point),
        ("Hahn at alpha=1/2 equals Krawtchouk", hahn_krawtchouk),
        ("finite-n oracle convergence", oracle_convergence),
        ("overlap exponent monotonicity", overlap_monotonicity),
        ("R1 below R0* for p>=0.046", union_term_reaches_r1),
        ("tight-window fraction", tight_window_fraction),
        ("exact decoder", exact_decoder),
        ("envelope sandwich", envelope_sandwich),
        (
            "profile bound improves min-distance bound",
            profile_bound_beats_min_distance_bound,
        ),
        ("random linear profile", random_linear_profile),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match check() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failures += 1;
        }
        println!(
            "{} {:2} {name}: {detail} [{:.1}s]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
