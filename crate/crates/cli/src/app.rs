//! Command dispatch and exit codes.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use quiver_walls::{ErrorKind, Session};
use serde_json::{json, Value};
use thiserror::Error;

use crate::input::{parse_input, parse_stability, InputError};
use crate::output;
use crate::plot::{plot_2d, PlotError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    GenericSubdims,
    SstCone,
    Walls,
    Fan,
    FVector,
    Equivalent,
    Phase,
    SpecialSubdims,
    StrictlySemistable,
    Locate,
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Walls, semistable cones and GIT fans of quiver moduli.
#[derive(Debug, Parser)]
#[command(name = "quiver-walls", version)]
pub struct Args {
    pub command: Command,
    /// Input document; standard input when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Stability parameter as comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Second stability parameter for `equivalent`.
    #[arg(long, allow_hyphen_values = true)]
    pub eta: Option<String>,
    /// 1-based vertex whose coordinate is dropped by `plot`.
    #[arg(long, default_value_t = 1)]
    pub project: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] quiver_walls::Error),
    #[error(transparent)]
    Plot(#[from] PlotError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let kind = |e: &quiver_walls::Error| match e.kind() {
            ErrorKind::Input => EXIT_INPUT,
            ErrorKind::Precondition => EXIT_PRECONDITION,
            ErrorKind::Internal => EXIT_INTERNAL,
        };
        match self {
            CliError::Input(_) | CliError::Io(_) => EXIT_INPUT,
            CliError::Core(e) | CliError::Plot(PlotError::Core(e)) => kind(e),
            CliError::Plot(PlotError::DegenerateProjection(_)) => EXIT_PRECONDITION,
        }
    }
}

fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    value.as_deref().ok_or_else(|| {
        InputError::Field { field: flag.into(), message: "required by this command".into() }.into()
    })
}

/// Computes the output of one command on an input document.
pub fn execute(args: &Args, document: &[u8]) -> Result<String, CliError> {
    let (quiver, d) = parse_input(document)?;
    let n = quiver.vertex_count();
    let session = Session::new(quiver);
    let theta = || parse_stability(required(&args.theta, "--theta")?, "--theta", n).map_err(CliError::from);
    let text = args.format == Format::Text;
    let flag = |value: bool| if value { "true\n".to_string() } else { "false\n".to_string() };
    let vectors = |vs: &[quiver_walls::DimVector]| vs.iter().map(|v| format!("{v}\n")).collect::<String>();

    let (doc, plain): (Value, Option<String>) = match args.command {
        Command::GenericSubdims => {
            let g = session.generic_subdims(&d)?;
            (json!({"generic_subdims": output::dim_vectors(&g)}), text.then(|| vectors(&g)))
        }
        Command::SpecialSubdims => {
            let s = session.special_subdims(&d)?;
            (json!({"special_subdims": output::dim_vectors(&s)}), text.then(|| vectors(&s)))
        }
        Command::SstCone => {
            let c = session.sst_cone(&d)?;
            (output::cone(&c), text.then(|| output::cone_text(&c)))
        }
        Command::Walls => {
            let w = session.all_walls(&d)?;
            (json!({"walls": output::walls(&w)}), text.then(|| output::walls_text(&w)))
        }
        Command::Fan => {
            let f = session.git_fan(&d)?;
            (output::fan(&f), text.then(|| output::fan_text(&f)))
        }
        Command::FVector => {
            let f = session.git_fan(&d)?.f_vector();
            (json!({"f_vector": f}), text.then(|| format!("{f:?}\n")))
        }
        Command::Equivalent => {
            let eta = parse_stability(required(&args.eta, "--eta")?, "--eta", n)?;
            let eq = session.git_equivalent(&d, &theta()?, &eta)?;
            (json!({"equivalent": eq}), text.then(|| flag(eq)))
        }
        Command::Phase => {
            let p = session.has_geometric_phase(&d)?;
            (json!({"geometric_phase": p}), text.then(|| flag(p)))
        }
        Command::StrictlySemistable => {
            let s = session.has_strictly_semistables(&d, &theta()?)?;
            (json!({"strictly_semistable": s}), text.then(|| flag(s)))
        }
        Command::Locate => {
            let fan = session.git_fan(&d)?;
            let i = fan.locate(&theta()?)?;
            let c = &fan.cones()[i];
            (
                json!({"cone_index": i, "dim": c.dim, "ray_indices": c.ray_indices}),
                text.then(|| format!("cone {i} dim {} rays {:?}\n", c.dim, c.ray_indices)),
            )
        }
        Command::Plot => {
            if args.project == 0 || args.project > n {
                return Err(InputError::Field {
                    field: "--project".into(),
                    message: format!("vertex {} not in 1..={n}", args.project),
                }
                .into());
            }
            return Ok(plot_2d(&session, &d, args.project - 1)?);
        }
    };
    Ok(match plain {
        Some(s) => s,
        None => {
            let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
            s.push('\n');
            s
        }
    })
}

/// Runs the command end to end and returns the exit code. Errors are
/// reported on standard error.
pub fn run(args: &Args) -> i32 {
    match run_inner(args) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run_inner(args: &Args) -> Result<(), CliError> {
    let document = match &args.input {
        Some(path) => std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            buf
        }
    };
    let out = execute(args, &document)?;
    match &args.output {
        Some(path) => std::fs::write(path, out).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(out.as_bytes())
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}
