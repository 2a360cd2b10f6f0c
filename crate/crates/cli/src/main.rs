use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mobius_hosoya_cli::{cmd_graph, cmd_indices, cmd_poly, cmd_verify, CliError, Method, OutputFormat, Source};

/// Hosoya polynomials and distance-based indices of generalized Möbius ladders.
#[derive(Parser)]
#[command(name = "mobius-hosoya", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Bfs,
    Closed,
    Blocks,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Polynomial,
    Closed,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Hosoya polynomial coefficients of M(m,n).
    Poly {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value = "bfs")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Wiener, hyper-Wiener, Harary and TSZ indices.
    Indices {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value = "polynomial")]
        source: SourceArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Cross-check oracle and closed forms over a range of m.
    Verify {
        #[arg(long)]
        m_min: usize,
        #[arg(long)]
        m_max: usize,
        /// Exit nonzero on any mismatch that is not a known discrepancy.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Emit the ladder graph.
    Graph {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Dot => OutputFormat::Dot,
        }
    }
}

fn run(cli: Cli) -> Result<(String, u8), CliError> {
    let out = match cli.command {
        Command::Poly { m, n, method, format } => {
            let method = match method {
                MethodArg::Bfs => Method::Bfs,
                MethodArg::Closed => Method::Closed,
                MethodArg::Blocks => Method::Blocks,
            };
            cmd_poly(m, n, method, format.into())?
        }
        Command::Indices { m, n, source, format } => {
            let source = match source {
                SourceArg::Polynomial => Source::Polynomial,
                SourceArg::Closed => Source::Closed,
                SourceArg::Both => Source::Both,
            };
            cmd_indices(m, n, source, format.into())?
        }
        Command::Verify { m_min, m_max, strict, format } => {
            let outcome = cmd_verify(m_min, m_max, strict, format.into())?;
            return Ok((outcome.output, outcome.exit_code as u8));
        }
        Command::Graph { m, n, format } => cmd_graph(m, n, format.into())?,
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line: Vec<&str> = rendered
                .lines()
                .map(str::trim)
                .take_while(|l| !l.starts_with("Usage:"))
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", line.join(" "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
