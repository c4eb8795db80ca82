use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use grundy::commands::{self, Parts};
use grundy::format::{parse_list, parse_vertices};
use grundy::{exit, CliError, MainFactorSpec, RunReport};
use grundy_core::moddecomp::{SolveOptions, DEFAULT_PRIME_THRESHOLD};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "grundy", version, about = "Grundy domination numbers of graphs and X-join products")]
struct Cli {
    /// Print JSON reports instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exhaustive search on a graph file.
    Exact {
        file: Option<PathBuf>,
        /// Largest order the exhaustive search accepts.
        #[arg(long)]
        max_n: Option<usize>,
        /// File listing one graph path per line.
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Check a vertex sequence for legality.
    Verify {
        file: PathBuf,
        #[arg(long)]
        sequence: String,
    },
    /// X-join with a structured or file-backed main factor.
    Xjoin {
        #[arg(long)]
        main: MainFactorSpec,
        /// Grundy domination numbers of the parts, in main-vertex order.
        #[arg(long, conflicts_with = "parts", required_unless_present = "parts")]
        gammas: Option<String>,
        /// Directory holding part_<v>.gr files; missing parts are single vertices.
        #[arg(long)]
        parts: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PRIME_THRESHOLD)]
        prime_threshold: usize,
    },
    /// Lexicographic product `G ∘ H` from `γ_gr(H)`.
    Lex {
        #[arg(long)]
        main: MainFactorSpec,
        #[arg(long)]
        gamma_h: usize,
    },
    /// Modular decomposition solver.
    Solve {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_PRIME_THRESHOLD)]
        prime_threshold: usize,
        #[arg(long)]
        batch: Option<PathBuf>,
    },
    /// Maximum weight independent set on a path or cycle power.
    Mwis {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Best independent pair instead (cycle powers).
        #[arg(long)]
        pair: bool,
    },
    /// Print the modular decomposition tree.
    Decompose {
        file: Option<PathBuf>,
        #[arg(long)]
        batch: Option<PathBuf>,
    },
}

fn emit(r: &RunReport, json: bool, extra: Option<&str>) -> String {
    if json {
        format!("{}\n", r.to_json())
    } else {
        let mut s = r.to_text();
        if let Some(e) = extra {
            s.push_str(e);
        }
        s
    }
}

/// Runs `f` on one file, or on every file listed in `batch` in parallel,
/// printing results in input order. Returns the largest exit code.
fn per_file<F>(file: Option<PathBuf>, batch: Option<PathBuf>, json: bool, f: F) -> Result<i32, CliError>
where
    F: Fn(&Path) -> Result<(RunReport, Option<String>), CliError> + Sync,
{
    let files: Vec<PathBuf> = match (file, batch) {
        (Some(f), None) => vec![f],
        (None, Some(list)) => {
            let text = fs::read_to_string(&list).map_err(|e| CliError::parse(format!("{}: {e}", list.display())))?;
            text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(PathBuf::from).collect()
        }
        _ => return Err(CliError::parse("give exactly one of FILE or --batch")),
    };
    let single = files.len() == 1;
    let results: Vec<_> = files.par_iter().map(|p| (p, f(p))).collect();
    let mut worst = exit::OK;
    let stdout = std::io::stdout();
    for (path, res) in results {
        match res {
            Ok((r, extra)) => {
                worst = worst.max(r.code);
                let _ = stdout.lock().write_all(emit(&r, json, extra.as_deref()).as_bytes());
            }
            Err(e) if single => return Err(e),
            Err(e) => {
                worst = worst.max(e.code);
                eprintln!("{}: error: {e}", path.display());
            }
        }
    }
    Ok(worst)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let json = cli.json;
    let print = |r: RunReport| {
        print!("{}", emit(&r, json, None));
        r.code
    };
    match cli.cmd {
        Cmd::Exact { file, max_n, batch } => {
            let cfg = commands::oracle_config(max_n)?;
            per_file(file, batch, json, |p| Ok((commands::exact(p, &cfg)?, None)))
        }
        Cmd::Verify { file, sequence } => {
            let seq = parse_vertices(&sequence)?;
            Ok(print(commands::verify(&file, &seq)?))
        }
        Cmd::Xjoin { main, gammas, parts, prime_threshold } => {
            let opts = SolveOptions { prime_threshold, oracle: commands::oracle_config(None)? };
            let r = match (&gammas, &parts) {
                (Some(g), None) => commands::xjoin_cmd(&main, Parts::Gammas(&parse_list(g)?), &opts)?,
                (None, Some(dir)) => commands::xjoin_cmd(&main, Parts::Dir(dir), &opts)?,
                _ => return Err(CliError::parse("give exactly one of --gammas or --parts")),
            };
            Ok(print(r))
        }
        Cmd::Lex { main, gamma_h } => Ok(print(commands::lex(&main, gamma_h)?)),
        Cmd::Solve { file, prime_threshold, batch } => {
            let opts = SolveOptions { prime_threshold, oracle: commands::oracle_config(None)? };
            per_file(file, batch, json, |p| Ok((commands::solve(p, &opts)?, None)))
        }
        Cmd::Mwis { kind, n, m, weights, pair } => {
            let w: Vec<i64> = parse_list(&weights)?;
            Ok(print(commands::mwis(&kind, n, m, &w, pair)?))
        }
        Cmd::Decompose { file, batch } => per_file(file, batch, json, |p| {
            let (r, t) = commands::decompose_cmd(p)?;
            let mut text = String::new();
            commands::tree_text(&t, 0, &mut text);
            let mut r = r;
            if !json {
                r.diagnostics.remove("tree");
            }
            Ok((r, Some(text)))
        }),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
