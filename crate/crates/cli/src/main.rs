use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

mod commands;
mod opspec;

#[derive(Parser, Debug)]
#[command(
    name = "torus",
    version,
    about = "Toric-code workbench on periodic 2D and 3D lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Lattice dimension (2 or 3).
    #[arg(long, global = true)]
    dim: Option<usize>,

    /// Linear size L, or one size per axis as L1,L2[,L3].
    #[arg(long, global = true, value_delimiter = ',')]
    size: Vec<usize>,

    /// Operator spec KIND:edge,...; repeat to multiply several.
    #[arg(long = "op", global = true)]
    ops: Vec<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized demos.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Cell counts, ground energy and stabilizer weights.
    Info,
    /// Logical qubits from the stabilizer rank and from homology.
    Degeneracy,
    /// Excitations created by an operator (random if no --op is given).
    Syndrome,
    /// Canonical braiding demo.
    Braid {
        #[arg(long, value_enum, default_value_t = BraidPair::EM)]
        pair: BraidPair,
    },
    /// Fuse anyons, or print the fusion table.
    Fuse { anyons: Vec<String> },
    /// Dense spectrum of a small lattice.
    Spectrum,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidPair {
    #[value(name = "e-m")]
    EM,
    #[value(name = "e-e")]
    EE,
    #[value(name = "m-m")]
    MM,
}

impl BraidPair {
    fn label(self) -> &'static str {
        match self {
            BraidPair::EM => "e-m",
            BraidPair::EE => "e-e",
            BraidPair::MM => "m-m",
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Resource(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<torus_core::Error> for CliError {
    fn from(e: torus_core::Error) -> Self {
        match e {
            torus_core::Error::TooLarge { .. } => CliError::Resource(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) | CliError::Resource(m) => f.write_str(m),
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Info => "info",
        Command::Degeneracy => "degeneracy",
        Command::Syndrome => "syndrome",
        Command::Braid { .. } => "braid",
        Command::Fuse { .. } => "fuse",
        Command::Spectrum => "spectrum",
    }
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    let mut config = Map::new();
    config.insert("command".into(), json!(command_name(&cli.command)));
    config.insert(
        "format".into(),
        json!(match cli.format {
            Format::Json => "json",
            Format::Table => "table",
        }),
    );
    config.insert("seed".into(), json!(cli.seed));

    let result = if let Command::Fuse { anyons } = &cli.command {
        config.insert("anyons".into(), json!(anyons));
        commands::fuse(anyons)?
    } else {
        let code = commands::build_code(cli.dim, &cli.size)?;
        let c = code.complex();
        config.insert("dimension".into(), json!(c.dimension()));
        config.insert("sizes".into(), json!(c.sizes()));
        match &cli.command {
            Command::Info => commands::info(&code),
            Command::Degeneracy => commands::degeneracy(&code)?,
            Command::Syndrome => {
                let specs = cli
                    .ops
                    .iter()
                    .map(|s| opspec::OpSpec::parse(s, c).map_err(CliError::Validation))
                    .collect::<Result<Vec<_>, _>>()?;
                config.insert(
                    "ops".into(),
                    json!(specs.iter().map(|s| s.canonical()).collect::<Vec<_>>()),
                );
                commands::syndrome(&code, &specs, cli.seed)?
            }
            Command::Braid { pair } => {
                config.insert("pair".into(), json!(pair.label()));
                commands::braid(&code, *pair)?
            }
            Command::Spectrum => commands::spectrum(&code)?,
            Command::Fuse { .. } => unreachable!(),
        }
    };
    Ok(json!({
        "config": Value::Object(config),
        "result": result,
        "tool": "torus",
        "version": env!("CARGO_PKG_VERSION"),
    }))
}

fn render_table(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    walk(&key, x, out);
                }
            }
            Value::String(s) => out.push((prefix.to_string(), s.clone())),
            other => out.push((prefix.to_string(), other.to_string())),
        }
    }
    let mut rows = Vec::new();
    walk("", v, &mut rows);
    let width = rows
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    rows.iter()
        .map(|(k, x)| format!("{k:<width$}  {x}").trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable report"),
                Format::Table => render_table(&report),
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
