//! `planecheck`: run axiom checks against the models from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use planecheck::angles::{self, AnglePair, TriangleAngles};
use planecheck::engine::{self, check_axiom, run_suite, EngineError, StructureHandle};
use planecheck::literal::{parse_line_literal, AnyLine};
use planecheck::{
    pentaline, prism, punctured, AxiomId, AxiomReport, ModelId, PrismLine, Qs5, Rational, Status,
    Strategy,
};

#[derive(Parser)]
#[command(
    name = "planecheck",
    version,
    about = "Check ordered-plane axioms against exact models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check selected axioms on one model.
    Check {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated axiom names, e.g. `B1,B2,B4star`.
        #[arg(long, value_delimiter = ',', required = true)]
        axioms: Vec<String>,
    },
    /// Check every axiom the model supports.
    Suite {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print a model's known counterexample.
    Counterexample {
        #[arg(long)]
        model: ModelId,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Angle measures of three prism lines and of their triangle.
    Angles {
        #[arg(long, num_args = 3, value_names = ["L1", "L2", "L3"], allow_hyphen_values = true)]
        lines: Vec<String>,
    },
    /// The betweenness table of the five-point line.
    Table {
        #[arg(long, default_value = "pentaline")]
        model: ModelId,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    model: ModelId,
    /// Defaults to exhaustive on finite models and sampled otherwise.
    #[arg(long, value_enum)]
    strategy: Option<StrategyKind>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Write the reports as JSON to this path; `-` for stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// JSON list of `{"axiom", "status"}` entries the run must reproduce.
    #[arg(long)]
    expect: Option<PathBuf>,
    /// Record wall-clock time per check instead of 0.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Pasch,
    T2,
    T3,
    T4,
    T5,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    NotFound(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) | CliError::NotFound(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Deserialize)]
struct Expectation {
    axiom: AxiomId,
    status: Status,
}

fn strategy_for(run: &RunArgs, handle: &StructureHandle) -> Strategy {
    let kind = run.strategy.unwrap_or(if handle.capabilities.enumerable {
        StrategyKind::Exhaustive
    } else {
        StrategyKind::Sampled
    });
    match kind {
        StrategyKind::Exhaustive => Strategy::Exhaustive,
        StrategyKind::Sampled => Strategy::Sampled {
            seed: run.seed,
            samples: run.samples as usize,
        },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn emit_reports(
    run: &RunArgs,
    mut reports: Vec<AxiomReport>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    if !run.timings {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    let to_stdout = run.json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        for r in &reports {
            writeln!(out, "{r}")?;
        }
    }
    if let Some(path) = &run.json {
        let text = to_json(&reports);
        if to_stdout {
            writeln!(out, "{text}")?;
        } else {
            fs::write(path, text + "\n")?;
        }
    }
    if let Some(path) = &run.expect {
        check_expectations(path, &reports)?;
    }
    Ok(())
}

fn check_expectations(path: &PathBuf, reports: &[AxiomReport]) -> Result<(), CliError> {
    let text = fs::read_to_string(path)?;
    let expected: Vec<Expectation> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut problems = Vec::new();
    for e in &expected {
        match reports.iter().find(|r| r.axiom == e.axiom) {
            Some(r) if r.status == e.status => {}
            Some(r) => problems.push(format!(
                "{}: expected {}, got {}",
                e.axiom, e.status, r.status
            )),
            None => problems.push(format!("{}: expected {}, not checked", e.axiom, e.status)),
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(problems.join("\n")))
    }
}

fn check(run: &RunArgs, axioms: &[String], out: &mut impl Write) -> Result<(), CliError> {
    let handle = StructureHandle::new(run.model);
    let strategy = strategy_for(run, &handle);
    let mut reports = Vec::new();
    for name in axioms {
        let axiom: AxiomId = name
            .parse()
            .map_err(|e: engine::UnknownName| CliError::Usage(e.to_string()))?;
        reports.push(check_axiom(&handle, axiom, strategy)?);
    }
    emit_reports(run, reports, out)
}

fn suite(run: &RunArgs, out: &mut impl Write) -> Result<(), CliError> {
    let handle = StructureHandle::new(run.model);
    let strategy = strategy_for(run, &handle);
    if matches!(strategy, Strategy::Exhaustive) && !handle.capabilities.enumerable {
        return Err(EngineError::IncompatibleStrategy { model: run.model }.into());
    }
    let reports = run_suite(&handle, &handle.supported_axioms(), strategy);
    emit_reports(run, reports, out)
}

fn counterexample(model: ModelId, target: Target, out: &mut impl Write) -> Result<(), CliError> {
    let text = match (model, target) {
        (ModelId::Prism, Target::Pasch) => to_json(&prism::pasch_star_witness::<Qs5>()),
        (ModelId::Punctured, Target::Pasch) => to_json(&punctured::q_pasch_witness::<Rational>()),
        _ => {
            let axiom = match target {
                Target::Pasch => AxiomId::B4,
                Target::T2 => AxiomId::T2,
                Target::T3 => AxiomId::T3,
                Target::T4 => AxiomId::T4,
                Target::T5 => AxiomId::T5,
            };
            let handle = StructureHandle::new(model);
            let strategy = if handle.capabilities.enumerable {
                Strategy::Exhaustive
            } else {
                Strategy::Sampled {
                    seed: 42,
                    samples: 1000,
                }
            };
            let report = check_axiom(&handle, axiom, strategy)?;
            match (report.status, report.witness) {
                (Status::Fails, Some(w)) => to_json(&w),
                _ => {
                    return Err(CliError::NotFound(format!(
                        "no {axiom} counterexample found on {model}"
                    )))
                }
            }
        }
    };
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct PairJson {
    lines: [String; 2],
    theta: f64,
    complement: f64,
}

#[derive(Serialize)]
struct AnglesJson {
    pairs: Vec<PairJson>,
    vertices: Vec<String>,
    angles: [f64; 3],
    sum: f64,
    excess: f64,
}

fn prism_line(text: &str) -> Result<PrismLine, CliError> {
    match parse_line_literal(text).map_err(|e| CliError::Usage(format!("`{text}`: {e}")))? {
        AnyLine::Prism(l) => Ok(l),
        AnyLine::Punctured(_) => Err(CliError::Usage(format!("`{text}` is not a prism line"))),
    }
}

fn angles_command(lines: &[String], out: &mut impl Write) -> Result<(), CliError> {
    let ls = lines
        .iter()
        .map(|t| prism_line(t))
        .collect::<Result<Vec<_>, _>>()?;
    let angle_err = |e: angles::AngleError| CliError::Usage(e.to_string());
    let mut pairs = Vec::new();
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        let p: AnglePair<f64> = angles::angle_pair(&ls[i], &ls[j]).map_err(angle_err)?;
        pairs.push(PairJson {
            lines: [ls[i].to_string(), ls[j].to_string()],
            theta: p.theta,
            complement: p.complement,
        });
    }
    let t = angles::triangle_of(&ls[0], &ls[1], &ls[2]).map_err(angle_err)?;
    let a: TriangleAngles<f64> = angles::triangle_angle_sum(&t).map_err(angle_err)?;
    let json = AnglesJson {
        pairs,
        vertices: t.vertices.iter().map(|v| v.to_string()).collect(),
        angles: a.angles,
        sum: a.sum,
        excess: a.excess,
    };
    writeln!(out, "{}", to_json(&json))?;
    Ok(())
}

fn table(model: ModelId, out: &mut impl Write) -> Result<(), CliError> {
    if model != ModelId::Pentaline {
        return Err(CliError::Usage(format!("no betweenness table for {model}")));
    }
    for ([i, j, k], apex) in pentaline::apex_table() {
        let [x, z] = [i, j, k]
            .into_iter()
            .filter(|v| *v != apex)
            .collect::<Vec<_>>()
            .try_into()
            .expect("two endpoints");
        writeln!(out, "{i}{j}{k}: ({x}{apex}{z})")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Check { run, axioms } => check(&run, &axioms, &mut out),
        Command::Suite { run } => suite(&run, &mut out),
        Command::Counterexample { model, target } => counterexample(model, target, &mut out),
        Command::Angles { lines } => angles_command(&lines, &mut out),
        Command::Table { model } => table(model, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("planecheck: {e}");
            ExitCode::from(e.code())
        }
    }
}
