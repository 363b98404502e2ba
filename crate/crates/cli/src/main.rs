//! `sqbetti`: classification, Betti tables, extremal corners, b-vectors,
//! constructions and oracle verification for squarefree monomial submodules,
//! over the canonical JSON module encoding.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on
//! malformed or ineligible input.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sqbetti_core::*;

type CornerList = (Vec<(usize, i64)>, Vec<u128>);

#[derive(Parser)]
#[command(
    name = "sqbetti",
    version,
    about = "Squarefree monomial submodules: classify, compute Betti tables, locate extremal corners, verify against a homology oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Table,
    Theorem,
    Criterion,
    All,
}

#[derive(Args)]
struct InputArg {
    /// Path to a module JSON file, inline JSON, or `-` for stdin
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a module as stable / strongly stable / lexicographic
    Check {
        #[command(flatten)]
        input: InputArg,
        /// Raise the degree-slice enumeration cap on n
        #[arg(long, default_value_t = 20)]
        enum_cap: u32,
    },
    /// Betti table of a stable submodule by the closed formula
    Betti {
        #[command(flatten)]
        input: InputArg,
        /// Evaluate the formula without the stability check (the values are
        /// then not Betti numbers unless the module happens to be stable)
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Extremal Betti numbers, by table scan, generator characterization,
    /// or the degree-sequence criterion
    Extremal {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Method::Criterion)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Degree sequence, admissible subsequence and corners
    Corners {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// b-vector of a stable submodule of S^r
    Bvector {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Build canonical lexicographic submodules
    Construct {
        #[command(subcommand)]
        what: ConstructCommand,
    },
    /// Seeded random stable submodule
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        seed: u64,
        /// Build strongly stable components
        #[arg(long)]
        strong: bool,
        /// Per-component generator cap for the draw
        #[arg(long, default_value_t = 10)]
        max_gens: usize,
    },
    /// Betti table via Taylor-strand homology over GF(char)
    Oracle {
        #[command(flatten)]
        input: InputArg,
        #[arg(long = "char", default_value_t = DEFAULT_PRIME)]
        characteristic: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Output::Table)]
        output: Output,
    },
    /// Certify the closed formula against the oracle; exit 1 on mismatch
    Verify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long = "char", default_value_t = DEFAULT_PRIME)]
        characteristic: u64,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Compare formula values even when the module is not stable
        #[arg(long)]
        force: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Lexicographic submodule of S^r with prescribed b-vector support
    LexSupport {
        #[arg(long)]
        n: u32,
        /// Comma-separated indices in 0..n, e.g. `1,2`
        #[arg(long)]
        support: String,
        #[arg(long)]
        r: usize,
    },
    /// Lexicographic submodule of S^r with prescribed super corners
    LexCorners {
        #[arg(long)]
        n: u32,
        /// Comma-separated `k:l` pairs with k+l = n, e.g. `2:2,1:3`
        #[arg(long)]
        pairs: String,
        #[arg(long)]
        r: usize,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_module(input: &str) -> Result<GradedSubmodule> {
    let text = if input == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        buffer
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        bail!("input `{input}` is neither an existing file nor inline JSON");
    };
    let (module, warnings) = GradedSubmodule::from_json(&text)?;
    for w in warnings {
        eprintln!("warning: {w}");
    }
    Ok(module)
}

fn json_num(v: u128) -> Result<serde_json::Value> {
    let v = u64::try_from(v).map_err(|_| anyhow!(Error::ValueTooLarge))?;
    Ok(serde_json::Value::from(v))
}

fn entries_json(table: &BettiTable) -> Result<serde_json::Value> {
    let mut entries = Vec::new();
    for (i, j, v) in table.entries() {
        entries.push(serde_json::json!([i, j, json_num(v)?]));
    }
    Ok(serde_json::Value::Array(entries))
}

fn corners_json(corners: &[(usize, i64)], values: &[u128]) -> Result<serde_json::Value> {
    let mut out = Vec::new();
    for (&(k, l), &v) in corners.iter().zip(values) {
        out.push(serde_json::json!([k, l, json_num(v)?]));
    }
    Ok(serde_json::Value::Array(out))
}

fn format_corner_list(corners: &[(usize, i64)], values: &[u128]) -> String {
    corners
        .iter()
        .zip(values)
        .map(|(&(k, l), v)| format!("({k}, {l}) -> {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check { input, enum_cap } => {
            let module = load_module(&input.input)?;
            let report = classify_module(&module, EnumLimit(enum_cap))?;
            println!("{report}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti {
            input,
            force,
            output,
        } => {
            let module = load_module(&input.input)?;
            let table = if force {
                betti_table_formula(&module)
            } else {
                betti_table(&module)?
            };
            let stable = check_stable_submodule(&module).holds();
            match output {
                Output::Table => {
                    if force && !stable {
                        println!(
                            "formula values (module is not stable; these are not Betti numbers):"
                        );
                    }
                    print!("{}", table.render());
                }
                Output::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("entries".into(), entries_json(&table)?);
                    if stable && !module.is_zero() {
                        let report = corners(&module)?;
                        obj.insert(
                            "corners".into(),
                            corners_json(&report.corners, &report.corner_values)?,
                        );
                    }
                    println!("{}", serde_json::Value::Object(obj));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal {
            input,
            method,
            output,
        } => {
            let module = load_module(&input.input)?;
            let from_table = || -> Result<CornerList> {
                let extremal = betti_table(&module)?.extremal();
                Ok((
                    extremal.iter().map(|&(i, j, _)| (i, j)).collect(),
                    extremal.iter().map(|&(_, _, v)| v).collect(),
                ))
            };
            let via_theorem = || -> Result<CornerList> {
                let positions = extremal_via_theorem(&module)?;
                let values = positions
                    .iter()
                    .map(|&(k, l)| extremal_value(&module, k, l))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                Ok((positions, values))
            };
            let via_criterion = || -> Result<CornerList> {
                let report = corners(&module)?;
                Ok((report.corners, report.corner_values))
            };
            match method {
                Method::All => {
                    let t = from_table()?;
                    let h = via_theorem()?;
                    let c = via_criterion()?;
                    let consistent = t == h && h == c;
                    match output {
                        Output::Table => {
                            println!("table:     {}", format_corner_list(&t.0, &t.1));
                            println!("theorem:   {}", format_corner_list(&h.0, &h.1));
                            println!("criterion: {}", format_corner_list(&c.0, &c.1));
                            println!(
                                "verdict: {}",
                                if consistent {
                                    "CONSISTENT"
                                } else {
                                    "INCONSISTENT"
                                }
                            );
                        }
                        Output::Json => {
                            println!(
                                "{}",
                                serde_json::json!({
                                    "table": corners_json(&t.0, &t.1)?,
                                    "theorem": corners_json(&h.0, &h.1)?,
                                    "criterion": corners_json(&c.0, &c.1)?,
                                    "consistent": consistent,
                                })
                            );
                        }
                    }
                }
                single => {
                    let (positions, values) = match single {
                        Method::Table => from_table()?,
                        Method::Theorem => via_theorem()?,
                        Method::Criterion => via_criterion()?,
                        Method::All => unreachable!(),
                    };
                    match output {
                        Output::Table => {
                            println!("{}", format_corner_list(&positions, &values))
                        }
                        Output::Json => println!(
                            "{}",
                            serde_json::json!({ "corners": corners_json(&positions, &values)? })
                        ),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corners { input, output } => {
            let module = load_module(&input.input)?;
            let report = corners(&module)?;
            let invariants = homological_invariants(&module)?;
            match output {
                Output::Table => {
                    println!(
                        "degrees: ({})",
                        report
                            .degrees
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    println!(
                        "degree sequence: ({})",
                        report
                            .values
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    println!(
                        "admissible subsequence: ({})",
                        report
                            .admissible
                            .iter()
                            .map(|&p| report.values[p].to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    println!(
                        "corners: {}",
                        format_corner_list(&report.corners, &report.corner_values)
                    );
                    println!(
                        "bl = {}, projective dimension = {}, regularity = {}",
                        report.bl, invariants.projective_dimension, invariants.regularity
                    );
                }
                Output::Json => {
                    println!(
                        "{}",
                        serde_json::json!({
                            "degrees": report.degrees,
                            "values": report.values,
                            "admissible": report.admissible,
                            "corners": corners_json(&report.corners, &report.corner_values)?,
                            "bl": report.bl,
                            "projective_dimension": invariants.projective_dimension,
                            "regularity": invariants.regularity,
                            "unique_extremal": invariants.unique_extremal,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bvector { input, output } => {
            let module = load_module(&input.input)?;
            let b = b_vector(&module)?;
            match output {
                Output::Table => {
                    println!("b = {b}");
                    println!(
                        "support = {{{}}}",
                        b.support()
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                Output::Json => {
                    let entries = b
                        .entries()
                        .iter()
                        .map(|&v| json_num(v))
                        .collect::<Result<Vec<_>>>()?;
                    println!(
                        "{}",
                        serde_json::json!({ "b": entries, "support": b.support() })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { what } => {
            let module = match what {
                ConstructCommand::LexSupport { n, support, r } => {
                    let support = parse_usize_list(&support)?;
                    lex_for_support(n, &support, r)?
                }
                ConstructCommand::LexCorners { n, pairs, r } => {
                    let pairs = parse_pairs(&pairs)?;
                    lex_for_corners(&SuperCornerSpec::new(n, pairs, r)?)?
                }
            };
            println!("{}", module.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Random {
            n,
            r,
            seed,
            strong,
            max_gens,
        } => {
            let mut params = RandomModuleParams::new(n, r);
            params.strong = strong;
            params.max_gens = max_gens;
            let module = random_stable_submodule(&params, seed)?;
            println!("{}", module.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            input,
            characteristic,
            cap,
            output,
        } => {
            let module = load_module(&input.input)?;
            let table = betti_oracle_module(&module, characteristic, cap)?;
            match output {
                Output::Table => print!("{}", table.render()),
                Output::Json => println!(
                    "{}",
                    serde_json::json!({ "entries": entries_json(&table)? })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            characteristic,
            cap,
            force,
        } => {
            let module = load_module(&input.input)?;
            if force {
                let formula = betti_table_formula(&module);
                let oracle = betti_oracle_module(&module, characteristic, cap)?;
                if formula == oracle {
                    println!("formula table matches the oracle (char {characteristic})");
                    return Ok(ExitCode::SUCCESS);
                }
                println!("formula table differs from the oracle (char {characteristic}):");
                print_diffs(&formula, &oracle);
                return Ok(ExitCode::from(1));
            }
            let report = certify(&module, characteristic, cap)?;
            if report.certified() {
                println!(
                    "certified: formula table and corners agree with the oracle (char {characteristic})"
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for (i, j, f, o) in &report.diffs {
                    println!("mismatch at ({i}, {j}): formula {f}, oracle {o}");
                }
                if !report.corners_match() {
                    println!(
                        "corner mismatch: criterion {:?} vs oracle {:?}",
                        report.corners_criterion, report.corners_oracle
                    );
                }
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn print_diffs(formula: &BettiTable, oracle: &BettiTable) {
    let mut keys: Vec<(usize, i64)> = formula
        .entries()
        .iter()
        .chain(oracle.entries().iter())
        .map(|&(i, j, _)| (i, j))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    for (i, j) in keys {
        let f = formula.get(i, j);
        let o = oracle.get(i, j);
        if f != o {
            println!("mismatch at ({i}, {j}): formula {f}, oracle {o}");
        }
    }
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("bad index `{t}`"))
        })
        .collect()
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(|t| {
            let (k, l) = t
                .split_once(':')
                .ok_or_else(|| anyhow!("pair `{t}` is not of the form k:l"))?;
            Ok((
                k.trim().parse::<usize>().context("bad k")?,
                l.trim().parse::<usize>().context("bad l")?,
            ))
        })
        .collect()
}
