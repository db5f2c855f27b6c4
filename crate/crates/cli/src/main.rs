use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qmeixner::{parse_rational, Rational};
use qmeixner_cli::commands::{
    apply_grid_overrides, cmd_eval, cmd_qorder, cmd_qsums, cmd_table, cmd_verify, cmd_zeros,
    OutputFormat,
};
use qmeixner_cli::grid::GridSpec;

/// Exact-arithmetic Meixner polynomials: evaluation, rigorous zero
/// isolation, reference tables and verification sweeps.
#[derive(Parser)]
#[command(name = "qmeixner", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate M_n(x; beta, c) exactly, cross-checking both routes
    Eval {
        #[arg(long)]
        n: usize,
        /// Rational, decimal or scientific (e.g. -3/2, -1.5, 15e-1)
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Isolate and refine all real zeros of M_n(x; beta, c)
    Zeros {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Target interval width
        #[arg(long, default_value = "1e-9")]
        width: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Print a built-in reference table of zero locations (table1, table2)
    Table {
        id: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Run a verification suite over a parameter grid
    Verify {
        /// identities, orthogonal, qo1, qo2, order2-vs-orth,
        /// consecutive-qo2, qsums, monotonicity or all
        suite: String,
        /// Comma-separated beta values overriding the grid
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// Comma-separated c values overriding the grid
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Degree or degree range, e.g. 7 or 3..10
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        width: Option<String>,
        /// JSON grid file (defaults to $QMEIXNER_GRID, then the built-in grid)
        #[arg(long)]
        grid_file: Option<PathBuf>,
        /// Worker threads (records stay in grid order)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include per-record elapsed milliseconds
        #[arg(long)]
        timing: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Quasi-orthogonality order of M_n(x; beta, c) by exact expansion
    Qorder {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        n: usize,
    },
    /// Truncated quasi-orthogonality moments with rigorous tail bounds
    Qsums {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Quasi-orthogonality order (weight shift)
        #[arg(long)]
        r: usize,
        /// Truncation point
        #[arg(long, default_value_t = 200)]
        x_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
}

fn parse_arg(name: &str, value: &str) -> Result<Rational, i32> {
    parse_rational(value).map_err(|e| {
        eprintln!("error: invalid --{name}: {e}");
        2
    })
}

fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { n, beta, c, x } => {
            let (beta, c, x) = match (
                parse_arg("beta", &beta),
                parse_arg("c", &c),
                parse_arg("x", &x),
            ) {
                (Ok(b), Ok(c), Ok(x)) => (b, c, x),
                _ => return 2,
            };
            cmd_eval(n, &beta, &c, &x)
        }
        Command::Zeros {
            n,
            beta,
            c,
            width,
            format,
        } => {
            let (beta, c, width) = match (
                parse_arg("beta", &beta),
                parse_arg("c", &c),
                parse_arg("width", &width),
            ) {
                (Ok(b), Ok(c), Ok(w)) => (b, c, w),
                _ => return 2,
            };
            cmd_zeros(n, &beta, &c, &width, format)
        }
        Command::Table { id, format } => cmd_table(&id, format),
        Command::Verify {
            suite,
            beta,
            c,
            n,
            width,
            grid_file,
            jobs,
            timing,
            format,
        } => {
            let mut grid =
                match grid_file.or_else(|| std::env::var_os("QMEIXNER_GRID").map(PathBuf::from)) {
                    Some(path) => match GridSpec::load(&path) {
                        Ok(g) => g,
                        Err(e) => {
                            eprintln!("error: {e}");
                            return 2;
                        }
                    },
                    None => GridSpec::default(),
                };
            if let Err(e) = apply_grid_overrides(
                &mut grid,
                beta.as_deref(),
                c.as_deref(),
                n.as_deref(),
                width.as_deref(),
            ) {
                eprintln!("error: {e}");
                return 2;
            }
            cmd_verify(&suite, &grid, jobs, timing, format)
        }
        Command::Qorder { beta, c, n } => {
            let (beta, c) = match (parse_arg("beta", &beta), parse_arg("c", &c)) {
                (Ok(b), Ok(c)) => (b, c),
                _ => return 2,
            };
            cmd_qorder(&beta, &c, n)
        }
        Command::Qsums {
            n,
            beta,
            c,
            r,
            x_max,
            format,
        } => {
            let (beta, c) = match (parse_arg("beta", &beta), parse_arg("c", &c)) {
                (Ok(b), Ok(c)) => (b, c),
                _ => return 2,
            };
            cmd_qsums(n, &beta, &c, r, x_max, format)
        }
    }
}

fn main() -> ExitCode {
    // die quietly on closed pipes like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    ExitCode::from(run() as u8)
}
