mod error;
mod survey;

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use powercolor::{
    exact_chromatic, from_graph6, greedy_upper, run_improved_procedure, run_main_procedure,
    to_graph6, verify_coloring, Graph, GraphKind, OracleLimits,
};

use crate::error::{CliError, Kind};

#[derive(Parser)]
#[command(name = "powercolor", version, about = "Colorings of graph powers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one graph6 line for a generated graph.
    Generate {
        /// path, cycle, complete, prism, petersen, dary_tree, random_regular
        /// or random_sparse.
        kind: String,
        params: Vec<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Replace every graph6 line on stdin by its k-th power.
    Power {
        #[arg(short)]
        k: usize,
    },
    /// Chromatic number of every graph6 line on stdin (a greedy upper bound
    /// unless --exact).
    Chroma {
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Color the k-th power of the graph6 graph on stdin.
    Color {
        #[arg(short)]
        k: usize,
        /// Ball radius; selects the ball-precoloring procedure.
        #[arg(short)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        /// Fail when a step has fewer nice walks than promised.
        #[arg(long)]
        check_nice: bool,
    },
    /// CSV census of the graph6 stream on stdin.
    Survey {
        #[arg(short)]
        k: usize,
        /// Largest vertex count handed to the exact oracle.
        #[arg(long, default_value_t = 40)]
        max_oracle: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
}

#[derive(clap::Args)]
struct OracleArgs {
    /// Time budget per oracle call, in seconds.
    #[arg(long, default_value_t = 60)]
    oracle_seconds: u64,
    /// Branch budget per oracle call.
    #[arg(long, default_value_t = 50_000_000)]
    oracle_branches: u64,
}

impl OracleArgs {
    fn limits(&self, max_vertices: usize) -> OracleLimits {
        OracleLimits {
            max_vertices,
            time_budget: Duration::from_secs(self.oracle_seconds),
            branch_limit: self.oracle_branches,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match cli.command {
        Command::Generate { kind, params, seed } => generate(&kind, params, seed, &mut out),
        Command::Power { k } => power(k, &mut out),
        Command::Chroma { exact, oracle } => chroma(
            exact,
            &oracle.limits(OracleLimits::default().max_vertices),
            &mut out,
        ),
        Command::Color {
            k,
            s,
            report,
            check_nice,
        } => color(k, s, report, check_nice, &mut out),
        Command::Survey {
            k,
            max_oracle,
            jobs,
            oracle,
        } => run_survey(k, &oracle.limits(max_oracle), jobs, &mut out),
    };
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("powercolor: {e}");
            e.exit_code()
        }
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut input = String::new();
    io::stdin().read_to_string(&mut input)?;
    Ok(input)
}

fn stdin_graphs() -> Result<Vec<Graph>, CliError> {
    read_stdin()?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| from_graph6(l).map_err(CliError::from))
        .collect()
}

fn generate(
    kind: &str,
    mut params: Vec<u64>,
    seed: Option<u64>,
    out: &mut String,
) -> Result<(), CliError> {
    if let Some(seed) = seed {
        if !kind.starts_with("random_") {
            return Err(CliError::new(
                Kind::Precondition,
                format!("{kind} takes no seed"),
            ));
        }
        params.push(seed);
    }
    let g = GraphKind::from_parts(kind, &params)?.generate()?;
    let _ = writeln!(out, "{}", to_graph6(&g)?);
    Ok(())
}

fn power(k: usize, out: &mut String) -> Result<(), CliError> {
    if k == 0 {
        return Err(CliError::new(Kind::Precondition, "k must be at least 1"));
    }
    for g in stdin_graphs()? {
        let _ = writeln!(out, "{}", to_graph6(&g.power(k))?);
    }
    Ok(())
}

fn chroma(exact: bool, limits: &OracleLimits, out: &mut String) -> Result<(), CliError> {
    for g in stdin_graphs()? {
        let chi = if exact {
            exact_chromatic(&g, limits)?
        } else {
            let order: Vec<usize> = (0..g.vertex_count()).collect();
            greedy_upper(&g, &order)?
        };
        let _ = writeln!(out, "{chi}");
    }
    Ok(())
}

fn color(
    k: usize,
    s: Option<usize>,
    format: ReportFormat,
    check_nice: bool,
    out: &mut String,
) -> Result<(), CliError> {
    let input = read_stdin()?;
    let line = input
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| CliError::new(Kind::Malformed, "no graph on stdin"))?;
    let g = from_graph6(line)?;
    if k < 3 {
        return Err(
            powercolor::ProcedureError::from(powercolor::procedures::Precondition::K(k)).into(),
        );
    }
    let (coloring, report) = match s {
        Some(s) => run_improved_procedure(&g, k, s)?,
        None => run_main_procedure(&g, k)?,
    };
    let violations = verify_coloring(&g, k, &coloring)
        .map_err(|e| CliError::new(Kind::Internal, e.to_string()))?;
    if let Some(v) = violations.first() {
        return Err(CliError::new(
            Kind::Internal,
            format!(
                "coloring fails verification: {} and {} share color {} at distance {}",
                v.u, v.v, v.color, v.distance
            ),
        ));
    }
    let colors: Vec<usize> = coloring
        .as_slice()
        .iter()
        .map(|c| c.expect("verified"))
        .collect();
    match format {
        ReportFormat::Text => {
            for (v, c) in colors.iter().enumerate() {
                let _ = writeln!(out, "{v}:{c}");
            }
            out.push_str(&report.to_text());
        }
        ReportFormat::Json => {
            let doc = serde_json::json!({
                "schema": 1,
                "coloring": colors,
                "report": report,
            });
            let _ = writeln!(out, "{doc}");
        }
    }
    let shortfalls = report.nice_shortfalls();
    if check_nice && !shortfalls.is_empty() {
        let listed: Vec<String> = shortfalls
            .iter()
            .map(|s| {
                format!(
                    "vertex {} has {} nice walks (required {}, bound {:?})",
                    s.vertex, s.nice_count, s.required, s.analytic_bound
                )
            })
            .collect();
        return Err(CliError::new(
            Kind::Internal,
            format!("nice-walk check failed: {}", listed.join("; ")),
        ));
    }
    Ok(())
}

fn run_survey(
    k: usize,
    limits: &OracleLimits,
    jobs: usize,
    out: &mut String,
) -> Result<(), CliError> {
    if jobs == 0 {
        return Err(CliError::new(
            Kind::Precondition,
            "--jobs must be at least 1",
        ));
    }
    let input = read_stdin()?;
    let (csv, skipped) = survey::survey(&input, k, limits, jobs)?;
    for line in skipped {
        eprintln!("powercolor: {line}");
    }
    out.push_str(&csv);
    Ok(())
}
