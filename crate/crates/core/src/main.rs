use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ewgeom::cli::{self, dump, Emit, Overrides};
use ewgeom::numeric::Backend;

#[derive(Parser)]
#[command(name = "ewgeom", version, about = "Verify and evaluate two-spinor electroweak geometry")]
struct Args {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

#[derive(clap::Args)]
struct Common {
    /// Scenario JSON; the built-in default when omitted.
    #[arg(long)]
    scenario: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    emit: EmitArg,
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Write the output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Run verification suites; exit status 1 if any check fails.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Comma-separated suite names, or `all`.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate the scenario's fields pointwise.
    Eval {
        #[command(flatten)]
        common: Common,
    },
    /// Write a constant table as JSON.
    Dump {
        #[arg(value_parser = dump::DUMP_KINDS)]
        kind: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(e: EmitArg) -> Emit {
    match e {
        EmitArg::Text => Emit::Text,
        EmitArg::Json => Emit::Json,
    }
}

fn backend(b: Option<BackendArg>) -> Option<Backend> {
    b.map(|b| match b {
        BackendArg::Exact => Backend::Exact,
        BackendArg::Float => Backend::Float,
    })
}

fn write(out: Option<&PathBuf>, text: &str) -> ewgeom::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| ewgeom::Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(args: Args) -> ewgeom::Result<bool> {
    match args.verb {
        Verb::Verify { common, suite, tol } => {
            let sc = cli::load_scenario(common.scenario.as_deref())?;
            let ov = Overrides { suites: suite, backend: backend(common.backend), tol };
            let report = cli::verify(&sc, &ov)?;
            let text = match emit(common.emit) {
                Emit::Text => report.to_text(),
                Emit::Json => report.to_json(),
            };
            write(common.out.as_ref(), &text)?;
            Ok(report.all_passed())
        }
        Verb::Eval { common } => {
            let sc = cli::load_scenario(common.scenario.as_deref())?;
            let v = cli::eval(&sc, backend(common.backend))?;
            write(common.out.as_ref(), &cli::render(&v, emit(common.emit)))?;
            Ok(true)
        }
        Verb::Dump { kind, out } => {
            let v = dump::dump(&kind)?;
            write(out.as_ref(), &cli::render(&v, Emit::Json))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("ewgeom: {e}");
            ExitCode::from(2)
        }
    }
}
