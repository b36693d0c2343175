use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gpetersen::algebra::{BuiltinTable, OpTable, TableJson};
use gpetersen::cayley::{build_cayley, verify_representation, Construction};
use gpetersen::plane::{classify_row, plane_csv, retraction_dot, retraction_json, scan, verify, Check};
use gpetersen::{Error, GPParams, SearchBudget};

/// Generalized Petersen graph toolkit.
#[derive(Parser)]
#[command(name = "gpk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one G(n,k).
    Classify {
        n: usize,
        k: usize,
        /// Count automorphisms by brute force even above n = 12.
        #[arg(long)]
        brute_aut: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check closed forms against search oracles for all n <= NMAX.
    Verify {
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Comma-separated subset of core,retraction,endo-transitive,aut.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Emit the explicit retraction of a non-core G(n,k).
    Retract {
        n: usize,
        k: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build a named construction and emit its Cayley digraph or representation report.
    Cayley {
        construction: String,
        n: Option<usize>,
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Print a builtin table as JSON.
    Table { name: String },
    /// Analyse a table JSON file, optionally against a target G(n,k).
    CheckTable {
        path: PathBuf,
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        target: Option<Vec<usize>>,
    },
    /// Emit one CSV row per (n,k) with n <= NMAX.
    Scan {
        #[arg(long, default_value_t = 16)]
        nmax: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn params(n: usize, k: usize) -> Result<GPParams, Error> {
    GPParams::new(n, k)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(cmd: Command, budget: SearchBudget) -> Result<ExitCode, Error> {
    match cmd {
        Command::Classify { n, k, brute_aut, json: as_json } => {
            let row = classify_row(params(n, k)?, brute_aut, budget)?;
            if as_json {
                print!("{}", json(&row));
            } else {
                println!("{row}");
            }
        }
        Command::Verify { nmax, checks, json: as_json } => {
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks.iter().map(|c| Check::from_name(c)).collect::<Result<_, _>>()?
            };
            let report = verify(nmax, &checks, budget);
            if as_json {
                print!("{}", json(&report));
            } else {
                print!("{}", report.render());
            }
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
        Command::Retract { n, k, format } => {
            let p = params(n, k)?;
            match format {
                Format::Dot => print!("{}", retraction_dot(p)?),
                Format::Json => print!("{}", json(&retraction_json(p)?)),
            }
        }
        Command::Cayley { construction, n, k, format } => {
            let c = Construction::from_name(&construction)?;
            let p = match (n, k) {
                (Some(n), Some(k)) => Some(params(n, k)?),
                (None, None) => None,
                _ => return Err(Error::Domain("give both n and k or neither".into())),
            };
            let rep = c.build(p)?;
            match format {
                Format::Dot => print!("{}", build_cayley(&rep.table, &rep.connection)?.to_dot(&rep.name)),
                Format::Json => {
                    let target = match (p, c.fixed_target()) {
                        (Some(p), _) => p,
                        (None, Some((n, k))) => params(n, k)?,
                        (None, None) => unreachable!("parametrised constructions need n and k"),
                    };
                    print!("{}", json(&verify_representation(&rep.table, &rep.connection, target, budget)?));
                }
            }
        }
        Command::Table { name } => {
            let b = BuiltinTable::from_name(&name).ok_or_else(|| {
                let names: Vec<_> = BuiltinTable::ALL.iter().map(|b| b.name()).collect();
                Error::Domain(format!("unknown table '{name}'; valid names: {}", names.join(", ")))
            })?;
            print!("{}", b.table().to_json(Some(&b.connection())).to_pretty_string());
        }
        Command::CheckTable { path, target } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?;
            let parsed: TableJson =
                serde_json::from_str(&text).map_err(|e| Error::MalformedTable(e.to_string()))?;
            let table = OpTable::try_from(&parsed)?;
            print!("{}", json(&table.report()));
            if let Some(t) = target {
                let connection = parsed
                    .connection
                    .ok_or_else(|| Error::Domain("--target needs a \"connection\" field".into()))?;
                let report = verify_representation(&table, &connection, params(t[0], t[1])?, budget)?;
                print!("{}", json(&report));
                if !report.realizes_target() {
                    return Ok(ExitCode::from(2));
                }
            }
        }
        Command::Scan { nmax, out } => {
            let csv = plane_csv(&scan(nmax, budget)?);
            match out {
                Some(path) => std::fs::write(&path, csv)
                    .map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command, SearchBudget::from_env()) {
        Ok(code) => code,
        Err(Error::BudgetExhausted { expansions }) => {
            eprintln!("gpk: inconclusive, budget exhausted after {expansions} expansions");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("gpk: {e}");
            ExitCode::from(1)
        }
    }
}
