//! `tetra`: build the algebra for a realization config and run checks on it.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 config or usage error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{Session, Suite};
use output::{emit, Format};

const LABEL_HELP: &str = "Group element label. Elements of F4 x| C6 are written \"(j,t^s)\" with j in \
0, 1, w, w2 (also w^2, ω, ω²) and s in 0..6, where \"(j,1)\" and \"(j,t)\" are the short forms. \
Elements of an extension by a cyclic group are written \"(j,t^s)*(c^a)\". \"#k\" addresses the k-th \
element of the Cayley table.";

#[derive(Parser)]
#[command(name = "tetra", version, about = "Pointed Hopf algebras over the tetrahedron rack")]
struct Cli {
    /// Realization config (JSON with a "kind" of affine, extended or table).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Deformation parameter, a rational or cyclotomic literal such as "1/2" or "1 - z^2".
    #[arg(long, global = true, default_value = "1")]
    lambda: String,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for per-weight jobs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the realization, complete the rules and summarize the algebra.
    Build,
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Weights for the tables suite (default: the first with f(g) != 0).
        #[arg(long, help = LABEL_HELP)]
        g: Vec<String>,
    },
    /// List the isomorphism classes of simple modules.
    Simples,
    /// Decompose the Verma modules M_g.
    Decompose {
        #[arg(long, required = true, help = LABEL_HELP)]
        g: Vec<String>,
    },
    /// Compare the printed L1..L6 action tables and weights with the computed modules.
    Tables {
        #[arg(long, help = LABEL_HELP)]
        g: Vec<String>,
    },
}

fn run(cli: &Cli) -> Result<bool, String> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err("--jobs must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    let path = cli.config.as_ref().ok_or("--config <path> is required")?;
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let session = Session::open(&text, &cli.lambda)?;
    let out = match &cli.command {
        Command::Build => commands::build(&session)?,
        Command::Verify { suite, g } => commands::verify(&session, *suite, g)?,
        Command::Simples => commands::simples(&session)?,
        Command::Decompose { g } => commands::decompose_cmd(&session, g)?,
        Command::Tables { g } => commands::tables(&session, g)?,
    };
    emit(&out.render(cli.format), cli.out.as_deref()).map_err(|e| format!("writing output: {e}"))?;
    Ok(out.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
