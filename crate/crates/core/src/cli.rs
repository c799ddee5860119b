//! Command-line front end of the `relbound` binary.
//!
//! Exit codes: 0 on success, 2 for argument or domain errors, 3 for
//! numerical failures.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::awgn::{self, ChannelAwgn, RStar};
use crate::bsc::{self, Resolution, UpperEnvelope};
use crate::entropy::ChannelBsc;
use crate::error::{Error, Result};
use crate::numerics::Search;
use crate::oracle::{self, BinaryCode, KrawtchoukValue, PairwiseGeometry};
use crate::poly::krawtchouk_exponent;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

const RESOLUTION_HELP: &str = "Nested searches over omega, lambda and delta scan a 48-point grid \
and refine the best cell by golden section to 1e-8; alpha uses 16 points refined to 1e-6; the \
overlap variable eta is bracketed to 1e-12; Hahn-exponent quadrature runs to 1e-10 absolute. \
--coarse switches to 24 points / 1e-6, 1e-5, 1e-10 and 1e-8. Threshold rates are bracketed on a \
1e-3 rate grid and bisected to 1e-5.";

#[derive(Debug, Parser)]
#[command(
    name = "relbound",
    version,
    about = "Error-exponent bounds for the binary symmetric and Gaussian channels",
    after_help = RESOLUTION_HELP
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Landmark rates of a binary symmetric channel (bits).
    BscLandmarks(BscLandmarksArgs),
    /// Tabulate binary symmetric channel bounds as CSV `R,bound,value` (bits).
    BscCurves(BscCurvesArgs),
    /// Landmark rates of a Gaussian channel (nats).
    AwgnLandmarks(AwgnLandmarksArgs),
    /// Tabulate Gaussian channel bounds as CSV `R,bound,value` (nats).
    AwgnCurves(AwgnCurvesArgs),
    /// Finite-length oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Args)]
pub struct BscLandmarksArgs {
    /// Crossover probability in (0, 1/2).
    #[arg(long)]
    pub p: f64,
    /// Print `name,value,unit` rows instead of a report.
    #[arg(long)]
    pub csv: bool,
    /// Faster, less precise nested searches.
    #[arg(long)]
    pub coarse: bool,
}

/// A rate grid `start:stop:step`, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl FromStr for RateGrid {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(format!("expected start:stop:step, got {s:?}"));
        };
        let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
        let g = RateGrid {
            start: num(a)?,
            stop: num(b)?,
            step: num(c)?,
        };
        if !(g.start.is_finite() && g.stop.is_finite() && g.step.is_finite()) {
            return Err("grid values must be finite".into());
        }
        if !(g.step > 0.0) {
            return Err("step must be positive".into());
        }
        if !(g.start < g.stop) {
            return Err("start must be below stop".into());
        }
        Ok(g)
    }
}

impl RateGrid {
    pub fn rates(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|k| self.start + k as f64 * self.step)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BscBound {
    /// Sphere-packing exponent.
    Sp,
    /// Random coding exponent (defined up to R_crit).
    E0,
    /// Expurgation exponent (defined up to R_x).
    Ex,
    /// Union bound with the linear-programming minimum distance.
    Union,
    /// Minimum-distance bound with the distance distribution estimate.
    Thm3,
    /// Distance-profile bound with the linear-programming profile.
    Thm6,
    /// Straight-line bound built on thm6.
    Straightline,
    /// Best upper bound: min(sp, thm6, straightline).
    UpperEnv,
    /// Best classical lower bound.
    LowerEnv,
}

impl BscBound {
    fn name(self) -> &'static str {
        match self {
            BscBound::Sp => "sp",
            BscBound::E0 => "e0",
            BscBound::Ex => "ex",
            BscBound::Union => "union",
            BscBound::Thm3 => "thm3",
            BscBound::Thm6 => "thm6",
            BscBound::Straightline => "straightline",
            BscBound::UpperEnv => "upper_env",
            BscBound::LowerEnv => "lower_env",
        }
    }

    const ALL: [BscBound; 9] = [
        BscBound::Sp,
        BscBound::E0,
        BscBound::Ex,
        BscBound::Union,
        BscBound::Thm3,
        BscBound::Thm6,
        BscBound::Straightline,
        BscBound::UpperEnv,
        BscBound::LowerEnv,
    ];
}

#[derive(Debug, Args)]
pub struct BscCurvesArgs {
    #[arg(long)]
    pub p: f64,
    /// Rate grid start:stop:step in bits.
    #[arg(long)]
    pub rates: RateGrid,
    /// Comma-separated bounds: sp, e0, ex, union, thm3, thm6, straightline, upper_env, lower_env.
    #[arg(long, value_delimiter = ',', value_parser = parse_bsc_bound)]
    pub bounds: Vec<BscBound>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub coarse: bool,
}

fn parse_bsc_bound(s: &str) -> std::result::Result<BscBound, String> {
    BscBound::ALL
        .into_iter()
        .find(|b| b.name() == s.trim())
        .ok_or_else(|| format!("unknown bound {s:?}"))
}

#[derive(Debug, Args)]
pub struct AwgnLandmarksArgs {
    /// Signal-to-noise ratio, positive.
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AwgnBound {
    /// Random coding exponent (defined up to R_crit).
    E0,
    /// Union bound with the spherical-code distance estimate.
    Eu,
}

impl AwgnBound {
    fn name(self) -> &'static str {
        match self {
            AwgnBound::E0 => "e0",
            AwgnBound::Eu => "eu",
        }
    }
}

#[derive(Debug, Args)]
pub struct AwgnCurvesArgs {
    #[arg(long)]
    pub a: f64,
    /// Rate grid start:stop:step in nats.
    #[arg(long)]
    pub rates: RateGrid,
    /// Comma-separated bounds: e0, eu.
    #[arg(long, value_delimiter = ',', value_enum)]
    pub bounds: Vec<AwgnBound>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Exact maximum-likelihood error probability (n <= 26).
    Pe {
        /// Code file: one codeword of 0/1 characters per line.
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        p: f64,
    },
    /// Monte Carlo error probability.
    Mc {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Probability of the set equidistant from two codewords, against omega log2 u.
    Pairwise {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        omega: f64,
        #[arg(long)]
        p: f64,
    },
    /// Conditional probability of two overlapping equidistance sets, against B(omega, lambda).
    Joint {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        omega: f64,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        p: f64,
    },
    /// Exact Krawtchouk value K_{tau n}(omega n), against its exponent.
    Krawtchouk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tau: f64,
        #[arg(long)]
        omega: f64,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_USAGE
    } else {
        EXIT_NUMERICAL
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::BscLandmarks(a) => bsc_landmarks(&a, out),
        Command::BscCurves(a) => bsc_curves(&a, out),
        Command::AwgnLandmarks(a) => awgn_landmarks(&a, out),
        Command::AwgnCurves(a) => awgn_curves(&a, out),
        Command::Oracle(o) => oracle_cmd(o, out),
    }
}

fn resolution(coarse: bool) -> Resolution<f64> {
    if coarse {
        Resolution::coarse()
    } else {
        Resolution::default()
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), |x| format!("{x:.6}"))
}

fn bsc_landmarks(a: &BscLandmarksArgs, out: &mut dyn Write) -> Result<()> {
    let ch = ChannelBsc::new(a.p)?;
    let res = resolution(a.coarse);
    let l = bsc::landmarks(&ch, &res)?;
    let applies = l.r0_star.is_some_and(|r| l.r1 < r);
    if a.csv {
        writeln!(out, "name,value,unit")?;
        let rows: [(&str, Option<f64>, &str); 7] = [
            ("r_x", Some(l.r_x), "bits"),
            ("r_crit", Some(l.r_crit), "bits"),
            ("delta1", Some(l.delta1), "relative distance"),
            ("r1", Some(l.r1), "bits"),
            ("r0", l.r0, "bits"),
            ("r0_star", l.r0_star, "bits"),
            (
                "tight_window_fraction",
                Some(l.tight_window_fraction()),
                "ratio",
            ),
        ];
        for (name, v, unit) in rows {
            writeln!(
                out,
                "{name},{},{unit}",
                v.map_or(String::new(), |x| format!("{x:.9}"))
            )?;
        }
        return Ok(());
    }
    writeln!(
        out,
        "binary symmetric channel, p = {} (rates and exponents in bits)",
        a.p
    )?;
    writeln!(out, "R_x      = {:.6} bits  (closed form, +-1e-12)", l.r_x)?;
    writeln!(
        out,
        "R_crit   = {:.6} bits  (closed form, +-1e-12)",
        l.r_crit
    )?;
    writeln!(
        out,
        "delta1   = {:.6}       (relative distance, closed form)",
        l.delta1
    )?;
    writeln!(
        out,
        "R1       = {:.6} bits  (inverse LP bound at delta1, optimizer +-1e-6)",
        l.r1
    )?;
    writeln!(
        out,
        "R0       = {} bits  (bisection +-1e-5; none = no crossing below R1)",
        opt(l.r0)
    )?;
    writeln!(
        out,
        "R0*      = {} bits  (bisection +-1e-5; none = no crossing below capacity)",
        opt(l.r0_star)
    )?;
    writeln!(
        out,
        "tight window [R1, R_crit] = [{:.6}, {:.6}] bits, fraction of [R_x, R_crit] = {:.4}",
        l.r1,
        l.r_crit,
        l.tight_window_fraction()
    )?;
    writeln!(
        out,
        "R1 < R0*: {} -> random coding exponent {} on the window",
        if applies { "yes" } else { "no" },
        if applies && l.r1 < l.r_crit {
            "is tight"
        } else {
            "is not shown tight"
        }
    )?;
    Ok(())
}

fn write_csv(
    rows: Vec<(f64, &'static str, Option<f64>)>,
    path: &Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<()> {
    let mut text = String::from("R,bound,value\n");
    for (r, name, v) in rows {
        text.push_str(&format!(
            "{r:.9},{name},{}\n",
            v.map_or(String::new(), |x| format!("{x:.9}"))
        ));
    }
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            w.write_all(text.as_bytes())?;
            w.flush()?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Maps domain errors to an empty cell and tags numerical failures with
/// the rate and bound.
fn cell(r: f64, name: &str, v: Result<f64>) -> Result<Option<f64>> {
    match v {
        Ok(x) => Ok(Some(x)),
        Err(Error::Domain { .. }) => Ok(None),
        Err(e) => Err(Error::Numerical(format!("{name} at R = {r}: {e}"))),
    }
}

fn bsc_curves(a: &BscCurvesArgs, out: &mut dyn Write) -> Result<()> {
    if a.bounds.is_empty() {
        return Err(Error::domain("number of bounds", 0.0, "[1, 9]"));
    }
    let ch = ChannelBsc::new(a.p)?;
    let res = resolution(a.coarse);
    let rates = a.rates.rates();
    let needs_envelope = a
        .bounds
        .iter()
        .any(|b| matches!(b, BscBound::Straightline | BscBound::UpperEnv));
    let envelope = if needs_envelope {
        let mut grid = UpperEnvelope::default_rates(&ch)?;
        grid.extend(rates.iter().copied());
        Some(UpperEnvelope::new(&ch, &grid, &res)?)
    } else {
        None
    };
    let cap = ch.capacity();
    let inside = |r: f64| -> Result<f64> {
        if r > 0.0 && r < cap {
            Ok(r)
        } else {
            Err(Error::domain("rate", r, "(0, 1 - h(p))"))
        }
    };
    let eval = |r: f64, b: BscBound| -> Result<f64> {
        match b {
            BscBound::Sp => bsc::sphere_packing(r, &ch),
            BscBound::E0 => bsc::random_coding(r, &ch),
            BscBound::Ex => bsc::expurgation(r, &ch),
            BscBound::Union => bsc::union_bound_low_rate(inside(r)?, &ch, Search::default()),
            BscBound::Thm3 => Ok(bsc::min_distance_bound(inside(r)?, &ch, &res)?.value()),
            BscBound::Thm6 => Ok(bsc::lp_profile_bound(inside(r)?, &ch, &res)?.value),
            BscBound::Straightline | BscBound::UpperEnv => envelope
                .as_ref()
                .expect("envelope built for these bounds")
                .value(r),
            BscBound::LowerEnv => bsc::lower_envelope(r, &ch),
        }
    };
    let rows = rates
        .par_iter()
        .map(|&r| {
            a.bounds
                .iter()
                .map(|&b| Ok((r, b.name(), cell(r, b.name(), eval(r, b))?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    write_csv(rows.into_iter().flatten().collect(), &a.out, out)
}

fn awgn_landmarks(a: &AwgnLandmarksArgs, out: &mut dyn Write) -> Result<()> {
    let ch = ChannelAwgn::new(a.a)?;
    let l = awgn::landmarks(&ch)?;
    let tight = l.tight_on_window();
    if a.csv {
        writeln!(out, "name,value,unit")?;
        writeln!(out, "r_x,{:.9},nats", l.r_x)?;
        writeln!(out, "theta_x,{:.9},radians", l.theta_x)?;
        writeln!(out, "r1,{:.9},nats", l.r1)?;
        writeln!(
            out,
            "r_star,{},nats",
            l.r_star.root().map_or(String::new(), |x| format!("{x:.9}"))
        )?;
        writeln!(out, "r_crit,{:.9},nats", l.r_crit)?;
        writeln!(out, "tight_on_window,{},flag", tight)?;
        return Ok(());
    }
    writeln!(
        out,
        "Gaussian channel, a = {} (rates and exponents in nats)",
        a.a
    )?;
    writeln!(out, "R_x      = {:.6} nats  (closed form, +-1e-12)", l.r_x)?;
    writeln!(
        out,
        "theta_x  = {:.6} rad   (closed form, +-1e-12)",
        l.theta_x
    )?;
    writeln!(out, "R1       = {:.6} nats  (closed form, +-1e-12)", l.r1)?;
    match l.r_star {
        RStar::Root(r) => writeln!(out, "R*       = {r:.6} nats  (bisection +-1e-12)")?,
        RStar::BeyondWindow => writeln!(
            out,
            "R*       > R_crit     (validity condition holds on all of ({}, R_crit])",
            awgn::R_STAR_WINDOW_LO
        )?,
    }
    writeln!(
        out,
        "R_crit   = {:.6} nats  (closed form, +-1e-12)",
        l.r_crit
    )?;
    writeln!(
        out,
        "R1 <= R*: {} -> random coding exponent {} on [{:.6}, {:.6}] nats",
        if tight { "yes" } else { "no" },
        if tight {
            "is tight"
        } else {
            "is not shown tight"
        },
        l.r1,
        l.r_crit
    )?;
    Ok(())
}

fn awgn_curves(a: &AwgnCurvesArgs, out: &mut dyn Write) -> Result<()> {
    if a.bounds.is_empty() {
        return Err(Error::domain("number of bounds", 0.0, "[1, 2]"));
    }
    let ch = ChannelAwgn::new(a.a)?;
    let rows = a
        .rates
        .rates()
        .into_iter()
        .flat_map(|r| a.bounds.iter().map(move |&b| (r, b)))
        .map(|(r, b)| {
            let v = match b {
                AwgnBound::E0 => awgn::random_coding(r, &ch),
                AwgnBound::Eu => awgn::union_exponent(r, &ch),
            };
            Ok((r, b.name(), cell(r, b.name(), v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    write_csv(rows, &a.out, out)
}

fn oracle_cmd(cmd: OracleCommand, out: &mut dyn Write) -> Result<()> {
    match cmd {
        OracleCommand::Pe { code, p } => {
            let c = BinaryCode::read(&code)?;
            let pe = oracle::exact_pe_ml(&c, p)?;
            writeln!(
                out,
                "code: n = {}, M = {}, rate = {:.6} bits",
                c.n(),
                c.len(),
                c.rate()
            )?;
            writeln!(
                out,
                "P_e = {pe:.9}  (probability, exact enumeration, ties are errors)"
            )?;
        }
        OracleCommand::Mc {
            code,
            p,
            trials,
            seed,
        } => {
            let c = BinaryCode::read(&code)?;
            let mc = oracle::monte_carlo_pe(&c, p, trials, seed)?;
            writeln!(
                out,
                "code: n = {}, M = {}, rate = {:.6} bits",
                c.n(),
                c.len(),
                c.rate()
            )?;
            writeln!(
                out,
                "P_e ~ {:.9} +- {:.9}  (probability, one standard error; {} errors in {} trials)",
                mc.estimate, mc.stderr, mc.errors, mc.trials
            )?;
            writeln!(out, "rng: {}, seed = {}", oracle::RNG_NAME, mc.seed)?;
        }
        OracleCommand::Pairwise { n, omega, p } => {
            let g = PairwiseGeometry::from_relative(n, omega, 0.0, p)?;
            let finite = oracle::pairwise_set_logprob(&g, p)?;
            let ch = ChannelBsc::new(p)?;
            let target = ch.pairwise_exponent(g.w as f64 / n as f64)?;
            report_gap(
                out,
                &format!("n = {n}, w = {}, t = {}", g.w, g.t()),
                finite,
                "A(w/n)",
                target,
            )?;
        }
        OracleCommand::Joint {
            n,
            omega,
            lambda,
            p,
        } => {
            let g = PairwiseGeometry::from_relative(n, omega, lambda, p)?;
            let finite = oracle::conditional_set_logprob(&g, p)?;
            let ch = ChannelBsc::new(p)?;
            let (w, l) = (g.w as f64 / n as f64, g.l as f64 / n as f64);
            let target = bsc::overlap_exponent(w, l, &ch, 1e-12)?;
            report_gap(
                out,
                &format!("n = {n}, w = {}, l = {}, t = {}", g.w, g.l, g.t()),
                finite,
                "B(w/n, l/n)",
                target,
            )?;
        }
        OracleCommand::Krawtchouk { n, tau, omega } => {
            if !(0.0..=0.5).contains(&tau) {
                return Err(Error::domain("tau", tau, "[0, 1/2]"));
            }
            if !(0.0..=1.0).contains(&omega) {
                return Err(Error::domain("omega", omega, "[0, 1]"));
            }
            let k = (tau * n as f64).round() as usize;
            let x = (omega * n as f64).round() as usize;
            let v = oracle::krawtchouk_value(n, k, x)?;
            let target = krawtchouk_exponent(k as f64 / n as f64, x as f64 / n as f64, 1e-12)?;
            let sign = match v {
                KrawtchoukValue::Zero => "zero",
                KrawtchoukValue::NonZero { negative: true, .. } => "negative",
                KrawtchoukValue::NonZero {
                    negative: false, ..
                } => "positive",
            };
            report_gap(
                out,
                &format!("n = {n}, k = {k}, x = {x}, sign {sign}"),
                v.normalized_log2(n),
                "k(k/n, x/n)",
                target,
            )?;
        }
    }
    Ok(())
}

fn report_gap(
    out: &mut dyn Write,
    what: &str,
    finite: f64,
    name: &str,
    target: f64,
) -> io::Result<()> {
    writeln!(out, "{what}")?;
    writeln!(
        out,
        "finite-n (1/n) log2 = {finite:.9} bits  (exact, log-domain)"
    )?;
    writeln!(out, "asymptotic {name} = {target:.9} bits  (+-1e-10)")?;
    if finite == f64::NEG_INFINITY && target == f64::NEG_INFINITY {
        writeln!(out, "gap = 0 (both sets empty)")
    } else {
        writeln!(out, "gap = {:.9} bits", finite - target)
    }
}
