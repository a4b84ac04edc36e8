//! Timing harness and log-log complexity fits.
//!
//! Only the solver call is timed; instance generation happens outside the
//! clock. Runs faster than 1 ms are repeated in batches until a batch takes
//! more than 10 ms, and the per-run time is the batch time divided by the
//! batch size.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::hint::black_box;
use std::io;
use std::time::{Duration, Instant};

use crate::coloring::{dsatur, welsh_powell};
use crate::error::{Error, Result};
use crate::generators::{gen_conflict_graph, gen_hospital, GenConfig};
use crate::graph::ConflictGraph;
use crate::hospital::{solve, HospitalInstance};

pub const FLOW: &str = "flow";
pub const WELSH_POWELL: &str = "greedy";
pub const DSATUR: &str = "dsatur";

pub const DEFAULT_FLOW_SIZES: [usize; 11] = [20, 40, 60, 80, 100, 150, 200, 250, 300, 350, 400];
pub const DEFAULT_COLORING_SIZES: [usize; 11] = [50, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000];
pub const DEFAULT_TRIALS: usize = 5;

const BATCH_THRESHOLD: Duration = Duration::from_millis(1);
const BATCH_TARGET: Duration = Duration::from_millis(10);

/// One timed solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct TimingRecord {
    pub algorithm: String,
    pub n: usize,
    pub trial: usize,
    pub seconds: f64,
    /// Matching size for flow, colors used for coloring.
    pub quality: usize,
    /// Maximum degree of the conflict graph; absent for flow.
    pub delta: Option<usize>,
}

/// Least-squares line `ln(seconds) = intercept + slope * ln(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegressionFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

/// Wall-clock seconds per call of `f`, batching fast calls.
pub fn measure_seconds(mut f: impl FnMut()) -> f64 {
    let mut single = [Duration::ZERO; 3];
    for s in &mut single {
        let start = Instant::now();
        f();
        *s = start.elapsed();
    }
    single.sort_unstable();
    let median = single[1];
    if median >= BATCH_THRESHOLD {
        return median.as_secs_f64();
    }
    let mut k: u32 = 2;
    loop {
        let start = Instant::now();
        for _ in 0..k {
            f();
        }
        let elapsed = start.elapsed();
        if elapsed > BATCH_TARGET {
            return elapsed.as_secs_f64() / f64::from(k);
        }
        k = k.saturating_mul(2);
    }
}

/// Seed of trial `trial` at size `n`, mixed from the suite seed.
pub fn trial_seed(seed: u64, n: usize, trial: usize) -> u64 {
    // splitmix64 finalizer
    let mut z = seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (trial as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A named solver: returns (quality, delta) for an instance.
pub type Solver<'a, I> = (&'a str, &'a dyn Fn(&I) -> (usize, Option<usize>));

/// Generates one instance per (size, trial) and times every solver on it,
/// sequentially.
pub fn run_suite<I>(
    sizes: &[usize],
    trials: usize,
    seed: u64,
    mut generate: impl FnMut(usize, u64) -> Result<I>,
    solvers: &[Solver<'_, I>],
) -> Result<Vec<TimingRecord>> {
    if sizes.is_empty() {
        return Err(Error::Config("no sizes given".into()));
    }
    if trials == 0 {
        return Err(Error::Config("need at least one trial".into()));
    }
    let mut records = Vec::with_capacity(sizes.len() * trials * solvers.len());
    for &n in sizes {
        for trial in 0..trials {
            let instance = generate(n, trial_seed(seed, n, trial))?;
            for &(name, solver) in solvers {
                let (quality, delta) = solver(&instance);
                let seconds = measure_seconds(|| {
                    black_box(solver(black_box(&instance)));
                });
                records.push(TimingRecord {
                    algorithm: name.to_string(),
                    n,
                    trial,
                    seconds,
                    quality,
                    delta,
                });
            }
        }
    }
    Ok(records)
}

pub fn time_flow_suite(sizes: &[usize], trials: usize, seed: u64) -> Result<Vec<TimingRecord>> {
    let flow = |inst: &HospitalInstance| (solve(inst).admitted_count(), None);
    run_suite(
        sizes,
        trials,
        seed,
        |n, s| gen_hospital(&GenConfig::new(n, s)),
        &[(FLOW, &flow)],
    )
}

pub fn time_coloring_suite(sizes: &[usize], trials: usize, density: f64, seed: u64) -> Result<Vec<TimingRecord>> {
    let wp = |g: &ConflictGraph| (welsh_powell(g).num_colors(), Some(g.max_degree()));
    let ds = |g: &ConflictGraph| (dsatur(g).num_colors(), Some(g.max_degree()));
    run_suite(
        sizes,
        trials,
        seed,
        |n, s| gen_conflict_graph(&GenConfig::new(n, s).with_density(density)),
        &[(WELSH_POWELL, &wp), (DSATUR, &ds)],
    )
}

/// Ordinary least squares of `ln(seconds)` on `ln(n)`.
pub fn fit_power_law(points: &[(f64, f64)]) -> Result<RegressionFit> {
    if points.len() < 3 {
        return Err(Error::TooFewSizes(points.len()));
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(n, s)| (n.ln(), s.ln())).collect();
    let m = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = logs.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = logs.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    // a perfectly flat series is fit exactly
    let r_squared = if syy == 0.0 { 1.0 } else { (1.0 - ss_res / syy).clamp(0.0, 1.0) };
    Ok(RegressionFit {
        slope,
        intercept,
        r_squared,
    })
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[mid - 1] + v[mid]) / 2.0
    } else {
        v[mid]
    }
}

/// Fits mean seconds per size against size for one algorithm.
pub fn loglog_slope(records: &[TimingRecord], algorithm: &str) -> Result<RegressionFit> {
    let mut by_n: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in records.iter().filter(|r| r.algorithm == algorithm) {
        by_n.entry(r.n).or_default().push(r.seconds);
    }
    if by_n.len() < 3 {
        return Err(Error::TooFewSizes(by_n.len()));
    }
    let points: Vec<(f64, f64)> = by_n.iter().map(|(&n, s)| (n as f64, mean(s))).collect();
    fit_power_law(&points)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationRatios {
    /// colors / (Δ + 1) for each coloring record, in input order
    pub per_record: Vec<f64>,
    /// mean ratio keyed by (algorithm, n)
    pub per_size: BTreeMap<(String, usize), f64>,
}

pub fn approximation_ratios(records: &[TimingRecord]) -> ApproximationRatios {
    let mut per_record = Vec::new();
    let mut groups: BTreeMap<(String, usize), Vec<f64>> = BTreeMap::new();
    for r in records {
        let Some(delta) = r.delta else { continue };
        let ratio = r.quality as f64 / (delta + 1) as f64;
        per_record.push(ratio);
        groups.entry((r.algorithm.clone(), r.n)).or_default().push(ratio);
    }
    ApproximationRatios {
        per_record,
        per_size: groups.into_iter().map(|(k, v)| (k, mean(&v))).collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmStats {
    pub mean_seconds: f64,
    pub median_seconds: f64,
    pub mean_quality: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub by_algorithm: BTreeMap<String, AlgorithmStats>,
    pub mean_delta: Option<f64>,
}

/// One row per size, ascending.
pub fn summarize(records: &[TimingRecord]) -> Vec<SummaryRow> {
    let mut by_n: BTreeMap<usize, BTreeMap<&str, Vec<&TimingRecord>>> = BTreeMap::new();
    for r in records {
        by_n.entry(r.n).or_default().entry(&r.algorithm).or_default().push(r);
    }
    by_n.into_iter()
        .map(|(n, algos)| {
            let mut deltas = Vec::new();
            let by_algorithm = algos
                .into_iter()
                .map(|(name, rs)| {
                    let secs: Vec<f64> = rs.iter().map(|r| r.seconds).collect();
                    let quality: Vec<f64> = rs.iter().map(|r| r.quality as f64).collect();
                    deltas.extend(rs.iter().filter_map(|r| r.delta).map(|d| d as f64));
                    let stats = AlgorithmStats {
                        mean_seconds: mean(&secs),
                        median_seconds: median(&secs),
                        mean_quality: mean(&quality),
                    };
                    (name.to_string(), stats)
                })
                .collect();
            SummaryRow {
                n,
                by_algorithm,
                mean_delta: (!deltas.is_empty()).then(|| mean(&deltas)),
            }
        })
        .collect()
}

/// Plain-text table: size, then mean/median seconds and mean quality per
/// algorithm, then mean Δ when present. Colors are reported as counts.
pub fn render_summary(rows: &[SummaryRow]) -> String {
    let algorithms: Vec<&str> = {
        let mut names: Vec<&str> = rows.iter().flat_map(|r| r.by_algorithm.keys().map(String::as_str)).collect();
        names.sort_unstable();
        names.dedup();
        names
    };
    let with_delta = rows.iter().any(|r| r.mean_delta.is_some());

    let mut out = String::new();
    let _ = write!(out, "{:>6}", "n");
    for a in &algorithms {
        let _ = write!(out, " {:>14} {:>14} {:>10}", format!("{a} mean(s)"), format!("{a} med(s)"), format!("{a} q"));
    }
    if with_delta {
        let _ = write!(out, " {:>8}", "delta");
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "{:>6}", row.n);
        for a in &algorithms {
            match row.by_algorithm.get(*a) {
                Some(s) => {
                    let _ = write!(out, " {:>14.6} {:>14.6} {:>10.1}", s.mean_seconds, s.median_seconds, s.mean_quality);
                }
                None => {
                    let _ = write!(out, " {:>14} {:>14} {:>10}", "-", "-", "-");
                }
            }
        }
        if with_delta {
            match row.mean_delta {
                Some(d) => {
                    let _ = write!(out, " {d:>8.1}");
                }
                None => {
                    let _ = write!(out, " {:>8}", "-");
                }
            }
        }
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: &str = "algorithm,n,trial,seconds,quality,delta";

/// CSV with a header row and LF line endings; `delta` is empty for flow.
pub fn write_csv(records: &[TimingRecord], mut w: impl io::Write) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        let delta = r.delta.map(|d| d.to_string()).unwrap_or_default();
        writeln!(w, "{},{},{},{:.9},{},{}", r.algorithm, r.n, r.trial, r.seconds, r.quality, delta)?;
    }
    Ok(())
}
