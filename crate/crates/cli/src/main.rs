use bisym::output::render_all;
use bisym::{commands, Allowlist, CliError, Format};
use clap::{Parser, Subcommand};
use triple_catalog::Params;

#[derive(Parser)]
#[command(
    name = "bisym",
    about = "Casimir eigenvalues and Einstein adapted metrics for bisymmetric triples",
    version
)]
struct Cli {
    /// Output format: json, csv, or md.
    #[arg(long, global = true, default_value = "md")]
    format: String,
    /// Largest classical rank to enumerate.
    #[arg(long, global = true, default_value_t = 12)]
    rank_bound: usize,
    /// Path to an allowlist TOML overriding the bundled one.
    #[arg(long, global = true)]
    allowlist: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the catalog of bisymmetric triples.
    List,
    /// Regenerate a result table (coxeter, eigIexc, eigIclass, eigIIexc,
    /// eigIIclass, mIexc, mIclass, bimII, nonbimII, tabgenII, sf2).
    Table { selector: String },
    /// Solve the Einstein adapted-metric equations for one instance
    /// (a catalog label, or `kowalski` with --n and --p).
    Solve {
        label: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Recompute every tabulated eigenvalue and report discrepancies.
    Verify {
        /// Catalog label to verify (omit with --all).
        label: Option<String>,
        /// Verify the whole catalog.
        #[arg(long)]
        all: bool,
        /// Arbitrate disagreements with the numeric structure-constant
        /// oracle (rank ≤ 4 systems).
        #[arg(long)]
        oracle: bool,
    },
}

fn run(cli: &Cli) -> Result<bisym::CommandOutput, CliError> {
    let allow = match &cli.allowlist {
        Some(path) => Allowlist::from_path(path).map_err(CliError::Usage)?,
        None => Allowlist::builtin(),
    };
    match &cli.command {
        Command::List => commands::list(cli.rank_bound),
        Command::Table { selector } => commands::table(selector, cli.rank_bound, &allow),
        Command::Solve { label, n, p, l, s } => {
            let params = Params {
                n: *n,
                p: *p,
                l: *l,
                s: *s,
            };
            commands::solve(label, params)
        }
        Command::Verify { label, all, oracle } => {
            commands::verify(label.as_deref(), *all, *oracle, cli.rank_bound, &allow)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let format: Format = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", render_all(&out.docs, format));
            std::process::exit(if out.clean { 0 } else { 1 });
        }
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        Err(e @ CliError::Unsupported(_)) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}
