use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use flowcolor::bench::{self, TimingRecord};
use flowcolor::coloring::{exact_coloring, validate_assignment};
use flowcolor::hospital::{self, Assignment};
use flowcolor::{dsatur, gen_conflict_graph, gen_hospital, welsh_powell, Error, GenConfig};

use crate::formats::{parse_instance, parse_solution, to_json, Instance, InstanceFile, SolutionFile};

pub const EXIT_PARSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INVALID: i32 = 4;
pub const EXIT_BENCH: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "flowcolor", version, about = "Bed assignment by max-flow, course scheduling by graph coloring")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hospital,
    Courses,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Flow,
    Wp,
    Dsatur,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Flow,
    Coloring,
}

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("{p} is not in [0, 1]"))
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a random instance
    Gen {
        #[arg(value_enum)]
        kind: Option<Kind>,
        #[arg(long = "kind", value_enum, id = "kind_flag")]
        kind_flag: Option<Kind>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0.3, value_parser = probability)]
        density: f64,
        #[arg(long, default_value_t = 5)]
        departments: usize,
        #[arg(long, default_value_t = 1)]
        compat_min: usize,
        #[arg(long, default_value_t = 3)]
        compat_max: usize,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve an instance and print the solution
    Solve {
        instance: PathBuf,
        /// flow for hospitals; wp, dsatur or exact for courses
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution against its instance
    Verify { instance: PathBuf, solution: PathBuf },
    /// Time a solver suite and fit its growth rate
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        #[arg(long, default_value_t = bench::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0.3, value_parser = probability)]
        density: f64,
        /// CSV destination; without it the CSV goes to standard output and
        /// the summary to standard error
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn parse(err: anyhow::Error) -> Self {
        Self::new(EXIT_PARSE, format!("{err:#}"))
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

type Outcome = Result<i32, Failure>;

/// Runs one command. Results go to `out`, diagnostics to `err`; the return
/// value is the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Gen {
            kind,
            kind_flag,
            n,
            seed,
            density,
            departments,
            compat_min,
            compat_max,
            out: path,
        } => {
            let kind = match (kind, kind_flag) {
                (Some(a), Some(b)) if a != b => return Err(Failure::new(EXIT_USAGE, "conflicting instance kinds")),
                (Some(k), _) | (None, Some(k)) => k,
                (None, None) => return Err(Failure::new(EXIT_USAGE, "missing instance kind (hospital or courses)")),
            };
            let cfg = GenConfig {
                seed,
                n,
                num_departments: departments,
                compat_min,
                compat_max,
                density,
            };
            let usage = |e: Error| Failure::new(EXIT_USAGE, e.to_string());
            let file = match kind {
                Kind::Hospital => InstanceFile::from_hospital(&gen_hospital(&cfg).map_err(usage)?),
                Kind::Courses => InstanceFile::from_courses(&gen_conflict_graph(&cfg).map_err(usage)?),
            };
            emit(&to_json(&file), path.as_deref(), out)?;
            Ok(0)
        }
        Command::Solve {
            instance,
            algorithm,
            out: path,
        } => {
            let inst = load_instance(&instance)?;
            let solution = solve(&inst, algorithm)?;
            emit(&to_json(&solution), path.as_deref(), out)?;
            Ok(0)
        }
        Command::Verify { instance, solution } => {
            let inst = load_instance(&instance)?;
            let text = read(&solution)?;
            let sol = parse_solution(&text).map_err(Failure::parse)?;
            let violations = verify(&inst, &sol)?;
            if violations.is_empty() {
                writeln!(out, "ok").map_err(io_failure)?;
                Ok(0)
            } else {
                for v in &violations {
                    writeln!(out, "violation: {v}").map_err(io_failure)?;
                }
                Ok(EXIT_INVALID)
            }
        }
        Command::Bench {
            suite,
            sizes,
            trials,
            seed,
            density,
            out: path,
        } => run_bench(suite, sizes, trials, seed, density, path.as_deref(), out, err),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(EXIT_PARSE, format!("i/o error: {e}"))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::parse)
}

fn load_instance(path: &Path) -> Result<Instance, Failure> {
    let text = read(path)?;
    parse_instance(&text)
        .with_context(|| format!("in {}", path.display()))
        .map_err(Failure::parse)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(io_failure),
        None => out.write_all(text.as_bytes()).map_err(io_failure),
    }
}

pub fn solve(inst: &Instance, algorithm: Option<Algorithm>) -> Result<SolutionFile, Failure> {
    match (inst, algorithm) {
        (Instance::Hospital(h), None | Some(Algorithm::Flow)) => Ok(SolutionFile::from_assignment(&hospital::solve(h))),
        (Instance::Courses(g), Some(Algorithm::Wp)) => Ok(SolutionFile::from_coloring(&welsh_powell(g))),
        (Instance::Courses(g), None | Some(Algorithm::Dsatur)) => Ok(SolutionFile::from_coloring(&dsatur(g))),
        (Instance::Courses(g), Some(Algorithm::Exact)) => match exact_coloring(g) {
            Ok(c) => Ok(SolutionFile::from_coloring(&c)),
            Err(e @ Error::OracleGuard { .. }) => Err(Failure::new(EXIT_GUARD, e.to_string())),
            Err(e) => Err(Failure::new(EXIT_PARSE, e.to_string())),
        },
        (inst, Some(a)) => Err(Failure::new(
            EXIT_USAGE,
            format!("algorithm {a:?} does not apply to a {} instance", inst.kind()),
        )),
    }
}

/// Every problem with `sol` as an answer to `inst`, as readable lines.
pub fn verify(inst: &Instance, sol: &SolutionFile) -> Result<Vec<String>, Failure> {
    match (inst, sol) {
        (Instance::Hospital(h), SolutionFile::HospitalSolution { admitted, assignment }) => {
            let a = Assignment {
                assigned: assignment.clone(),
            };
            let mut lines: Vec<String> = hospital::validate(h, &a).violations.iter().map(ToString::to_string).collect();
            if *admitted != a.admitted_count() {
                lines.push(format!("admitted is {admitted} but {} patients are assigned", a.admitted_count()));
            }
            Ok(lines)
        }
        (Instance::Courses(g), SolutionFile::Schedule { num_colors, slots }) => {
            let n = g.num_courses();
            let mut lines = Vec::new();
            let mut partial = vec![None; n];
            for (&course, &slot) in slots {
                if course >= n {
                    lines.push(format!("unknown course {course}"));
                    continue;
                }
                partial[course] = Some(slot);
                if slot >= *num_colors {
                    lines.push(format!("course {course} uses slot {} but num_colors is {num_colors}", slot + 1));
                }
            }
            lines.extend(validate_assignment(g, &partial).violations.iter().map(ToString::to_string));
            Ok(lines)
        }
        (inst, sol) => Err(Failure::new(
            EXIT_USAGE,
            format!("{} solution does not answer a {} instance", sol.instance_kind(), inst.kind()),
        )),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_bench(
    suite: Suite,
    sizes: Option<Vec<usize>>,
    trials: usize,
    seed: u64,
    density: f64,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let usage = |e: Error| Failure::new(EXIT_USAGE, e.to_string());
    let (records, algorithms): (Vec<TimingRecord>, &[&str]) = match suite {
        Suite::Flow => {
            let sizes = sizes.unwrap_or_else(|| bench::DEFAULT_FLOW_SIZES.to_vec());
            (bench::time_flow_suite(&sizes, trials, seed).map_err(usage)?, &[bench::FLOW])
        }
        Suite::Coloring => {
            let sizes = sizes.unwrap_or_else(|| bench::DEFAULT_COLORING_SIZES.to_vec());
            (
                bench::time_coloring_suite(&sizes, trials, density, seed).map_err(usage)?,
                &[bench::WELSH_POWELL, bench::DSATUR],
            )
        }
    };

    let mut csv = Vec::new();
    bench::write_csv(&records, &mut csv).map_err(io_failure)?;

    let mut summary = render_report(&records);
    let mut failures = Vec::new();
    for name in algorithms {
        match bench::loglog_slope(&records, name) {
            Ok(fit) => summary.push_str(&format!(
                "{name}: slope {:.3}, intercept {:.3}, r^2 {:.4}\n",
                fit.slope, fit.intercept, fit.r_squared
            )),
            Err(e) => failures.push(format!("{name}: regression failed: {e}")),
        }
    }

    // the summary goes wherever the CSV does not
    match path {
        Some(p) => {
            fs::write(p, &csv).map_err(io_failure)?;
            out.write_all(summary.as_bytes()).map_err(io_failure)?;
        }
        None => {
            out.write_all(&csv).map_err(io_failure)?;
            err.write_all(summary.as_bytes()).map_err(io_failure)?;
        }
    }
    for f in &failures {
        writeln!(err, "{f}").map_err(io_failure)?;
    }
    Ok(if failures.is_empty() { 0 } else { EXIT_BENCH })
}

/// Summary table, plus approximation ratios when the records are colorings.
pub fn render_report(records: &[TimingRecord]) -> String {
    let mut text = bench::render_summary(&bench::summarize(records));
    let ratios = bench::approximation_ratios(records);
    if !ratios.per_size.is_empty() {
        text.push_str("colors / (delta + 1):\n");
        for ((name, n), r) in &ratios.per_size {
            text.push_str(&format!("  {name} n={n}: {r:.3}\n"));
        }
    }
    text
}
