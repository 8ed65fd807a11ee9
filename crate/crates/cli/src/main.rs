use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use knotbound_cli::{
    cmd_analyze, cmd_conjectures, cmd_verify_table, load_table, AnalyzeOptions, CliError, CommandOutput, KnotInput,
};
use knotbound_core::invariants::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "knotbound", version, about = "Lower bounds for unknotting numbers from exact knot invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and unknotting-number bounds for one knot.
    #[command(group(ArgGroup::new("input").required(true).args(["dt", "pd", "goeritz"])))]
    Analyze {
        /// DT code, e.g. "4 6 2".
        #[arg(long)]
        dt: Option<String>,
        /// File with one "X a b c d" crossing per line.
        #[arg(long)]
        pd: Option<PathBuf>,
        /// File with one Goeritz matrix row per line.
        #[arg(long)]
        goeritz: Option<PathBuf>,
        /// Signature to use with --goeritz.
        #[arg(long, requires = "goeritz", allow_hyphen_values = true)]
        sigma: Option<i64>,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        json: bool,
        /// Evaluate every criterion on the mirror image as well.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        mirror_both: bool,
        /// Largest crossing number for the exponential algorithms.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Recompute every row of a table and compare with its reference values.
    VerifyTable {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check the conjectured relations on every knot of a table.
    Conjectures {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

fn run(cli: Cli) -> Result<CommandOutput, CliError> {
    match cli.command {
        Command::Analyze { dt, pd, goeritz, sigma, name, json, mirror_both, budget } => {
            let input = match (dt, pd, goeritz) {
                (Some(dt), _, _) => KnotInput::Dt(dt),
                (_, Some(pd), _) => KnotInput::pd_file(&pd)?,
                (_, _, Some(g)) => KnotInput::goeritz_file(&g, sigma)?,
                _ => unreachable!("clap requires one input"),
            };
            let opts = AnalyzeOptions { name, mirror_both, budget, json };
            Ok(CommandOutput { stdout: cmd_analyze(&input, &opts)?, stderr: String::new(), exit_code: 0 })
        }
        Command::VerifyTable { table, budget } => Ok(cmd_verify_table(&load_table(&table)?, budget)),
        Command::Conjectures { table, budget } => Ok(cmd_conjectures(&load_table(&table)?, budget)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
