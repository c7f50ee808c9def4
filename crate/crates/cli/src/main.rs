use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mdc_cli::{export_dot, ColoringDocument, OracleDocument};
use mdc_core::bench::measure_runtime;
use mdc_core::mdc::{run_mdc, MAX_STEPS_PER_VERTEX};
use mdc_core::oracle::{oracle_min_coloring, DEFAULT_MAX_N};
use mdc_core::path::{optimal_orientation, random_orientation};
use mdc_core::survey::{min_over_orientations, Method};
use mdc_core::validate::validate_assignment;
use mdc_core::{Coloring, OrientedPath};
use serde::Serialize;

/// Minimum dominator colorings of oriented paths.
///
/// Orientations are strings over {F, B}: character i is F when the edge
/// between v_i and v_(i+1) points right, B when it points left.
#[derive(Parser)]
#[command(name = "mdc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color an orientation and print the coloring as JSON.
    Color(Source),
    /// Check a coloring given as a list of color ids in vertex order.
    Validate {
        orientation: String,
        /// Comma- or space-separated ids, e.g. "1,0,1,0,2".
        assignment: String,
    },
    /// Exact minimum by exhaustive search (n <= 16 by default).
    Oracle {
        orientation: String,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Minimum over all orientations for each n, compared with the closed form.
    Survey {
        #[arg(long)]
        from: usize,
        /// Defaults to --from.
        #[arg(long)]
        to: Option<usize>,
        #[arg(long, default_value = "fast")]
        method: Method,
    },
    /// Print an orientation of P_n attaining the minimum over all orientations.
    Optimal { n: usize },
    /// Time the coloring algorithm on random orientations.
    Bench {
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "1000,10000,100000,1000000"
        )]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graphviz DOT of an orientation, filled by its coloring.
    ExportDot {
        #[command(flatten)]
        source: Source,
        /// Color with these ids instead of the computed coloring.
        #[arg(long, conflicts_with = "plain")]
        assignment: Option<String>,
        /// Leave nodes unfilled.
        #[arg(long)]
        plain: bool,
    },
}

#[derive(Args)]
struct Source {
    #[arg(required_unless_present = "random")]
    orientation: Option<String>,
    /// Random orientation from N and SEED instead.
    #[arg(long, num_args = 2, value_names = ["N", "SEED"], conflicts_with = "orientation")]
    random: Option<Vec<u64>>,
}

/// Exit statuses: input problems and internal invariant failures.
enum Failure {
    Input(String),
    Internal(String),
}

type CmdResult = Result<(), Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

impl Source {
    fn path(&self) -> Result<OrientedPath, Failure> {
        match (&self.orientation, &self.random) {
            (_, Some(args)) => random_orientation(args[0] as usize, args[1]).map_err(input),
            (Some(text), None) => parse_orientation(text),
            (None, None) => Err(Failure::Input("no orientation given".into())),
        }
    }
}

fn parse_orientation(text: &str) -> Result<OrientedPath, Failure> {
    text.parse().map_err(input)
}

fn parse_assignment(text: &str) -> Result<Vec<usize>, Failure> {
    text.trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::Input(format!("bad color id {s:?}")))
        })
        .collect()
}

// A closed stdout (e.g. piped into `head`) is not an error worth reporting.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn print_json<T: Serialize>(value: &T) {
    out!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn cmd_color(source: &Source) -> CmdResult {
    let path = source.path()?;
    let doc = ColoringDocument::new(&path, &run_mdc(&path));
    print_json(&doc);
    if doc.valid {
        Ok(())
    } else {
        Err(Failure::Internal(
            "computed coloring failed validation".into(),
        ))
    }
}

fn cmd_validate(orientation: &str, assignment: &str) -> CmdResult {
    let path = parse_orientation(orientation)?;
    let ids = parse_assignment(assignment)?;
    let report = validate_assignment(&path, &ids).map_err(input)?;
    print_json(&report);
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Input("not a dominator coloring".into()))
    }
}

fn cmd_oracle(orientation: &str, max_n: usize) -> CmdResult {
    let path = parse_orientation(orientation)?;
    let result = oracle_min_coloring(&path, max_n).map_err(input)?;
    let doc = OracleDocument::new(&path, &result, run_mdc(&path).num_colors());
    print_json(&doc);
    if doc.matches_fast {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "fast algorithm used {} colors, exact minimum is {}",
            doc.fast_colors, doc.min_colors
        )))
    }
}

fn cmd_survey(from: usize, to: Option<usize>, method: Method) -> CmdResult {
    let to = to.unwrap_or(from);
    if from == 0 || from > to {
        return Err(Failure::Input(format!("empty range {from}..={to}")));
    }
    let mut all_agree = true;
    for n in from..=to {
        let r = min_over_orientations(n, method).map_err(input)?;
        let formula = r
            .formula_value
            .map_or_else(|| "-".to_string(), |v| v.to_string());
        out!(
            "n={}\tmin={}\tformula={}\tagrees={}\twitness={}\tmethod={}",
            r.n,
            r.min_colors,
            formula,
            r.agrees,
            r.witness,
            r.method
        );
        all_agree &= r.agrees;
    }
    out!(
        "summary\tfrom={from}\tto={to}\tmethod={method}\t{}",
        if all_agree {
            "all agree"
        } else {
            "DISAGREEMENT"
        }
    );
    if all_agree {
        Ok(())
    } else {
        Err(Failure::Internal(
            "survey disagrees with the closed form".into(),
        ))
    }
}

fn cmd_optimal(n: usize) -> CmdResult {
    let path = optimal_orientation(n).map_err(input)?;
    cmd_color(&Source {
        orientation: Some(path.to_string()),
        random: None,
    })
}

fn cmd_bench(sizes: &[usize], repetitions: usize, seed: u64) -> CmdResult {
    let report = measure_runtime(sizes, repetitions, seed).map_err(input)?;
    out!("n\tmedian_ns\tsteps\tsteps_per_vertex");
    for s in &report.samples {
        out!(
            "{}\t{}\t{}\t{:.3}",
            s.n,
            s.median_nanos,
            s.steps,
            s.steps as f64 / s.n as f64
        );
    }
    out!(
        "summary\ttime_slope={:.4}\tr2={:.4}\tstep_slope={:.4}\tsteps_per_vertex={:.3}\tbound={}",
        report.loglog_slope,
        report.r_squared,
        report.step_slope,
        report.steps_per_vertex,
        MAX_STEPS_PER_VERTEX
    );
    Ok(())
}

fn cmd_export_dot(source: &Source, assignment: Option<&str>, plain: bool) -> CmdResult {
    let path = source.path()?;
    let coloring = match (assignment, plain) {
        (_, true) => None,
        (Some(text), false) => {
            let ids = parse_assignment(text)?;
            if ids.len() != path.n() {
                return Err(Failure::Input(format!(
                    "assignment has {} entries, path has {} vertices",
                    ids.len(),
                    path.n()
                )));
            }
            Some(
                Coloring::from_assignment(ids)
                    .ok_or_else(|| Failure::Input("color ids must be 0..k without gaps".into()))?,
            )
        }
        (None, false) => Some(run_mdc(&path)),
    };
    let _ = std::io::stdout()
        .lock()
        .write_all(export_dot(&path, coloring.as_ref()).as_bytes());
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Color(source) => cmd_color(source),
        Command::Validate {
            orientation,
            assignment,
        } => cmd_validate(orientation, assignment),
        Command::Oracle { orientation, max_n } => cmd_oracle(orientation, *max_n),
        Command::Survey { from, to, method } => cmd_survey(*from, *to, *method),
        Command::Optimal { n } => cmd_optimal(*n),
        Command::Bench {
            sizes,
            repetitions,
            seed,
        } => cmd_bench(sizes, *repetitions, *seed),
        Command::ExportDot {
            source,
            assignment,
            plain,
        } => cmd_export_dot(source, assignment.as_deref(), *plain),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}
