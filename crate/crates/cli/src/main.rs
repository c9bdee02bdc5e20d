use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hookblock_core::characters::{hook_simple_character, max_hook_index, weyl_character};
use hookblock_core::combinatorics::{hook_partition, mullineux, Partition};
use hookblock_core::oracle::gram_matrix;
use hookblock_core::structure::{
    brauer_tree, ext_quiver, hook_decomposition_matrix, principal_block_diagrams,
    projective_diagram, reciprocity_table, tilting_injective_labels,
};
use hookblock_core::verify::{self, Suite};
use hookblock_core::{block_partition, jantzen_sum, Error, Prime};

#[derive(Parser)]
#[command(
    name = "hookblock",
    version,
    about = "Exact computations in the p-hook block of the Schur algebra S(n, p)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CharKind {
    Weyl,
    Simple,
}

#[derive(Subcommand)]
enum Command {
    /// Partition the weights of S(n, r) into blocks
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: u64,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Formal character of a Weyl module or of a hook simple module
    Char {
        #[arg(value_enum)]
        kind: CharKind,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
    },
    /// Jantzen sum of a Weyl module
    Jantzen {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        /// Emit the root-by-root ledger only
        #[arg(long)]
        ledger: bool,
    },
    /// Image of a p-regular partition under the Mullineux map
    Mullineux {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
    },
    /// Gram matrix of the Specht module and its rank mod p
    Gram {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long)]
        rank_only: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Hook decomposition matrix and reciprocity table
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Module diagrams of the projective indecomposables in the hook block
    Diagrams {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
    },
    /// Brauer tree of the principal block of the symmetric group on p letters
    BrauerTree {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
    },
    /// Run verification suites; exit status 1 if any check fails
    Verify {
        #[arg(long, value_parser = parse_prime)]
        p: Prime,
        /// Defaults to p
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Vec<SuiteArg>,
        #[arg(long, value_enum, default_value = "json")]
        format: VerifyFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Json,
    Text,
}

#[derive(Clone, Copy)]
enum SuiteArg {
    All,
    One(Suite),
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let v: u64 = s
        .parse()
        .map_err(|_| format!("{s:?} is not a non-negative integer"))?;
    Prime::new(v).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s.eq_ignore_ascii_case("all") {
        Ok(SuiteArg::All)
    } else {
        s.parse().map(SuiteArg::One)
    }
}

enum Failure {
    Input(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn kind(e: &Error) -> &'static str {
    match e {
        Error::MalformedPartition { .. } => "malformed-partition",
        Error::NotPrime(_) => "not-prime",
        Error::IndexOutOfRange { .. } => "index-out-of-range",
        Error::LengthExceedsDimension { .. } => "length-exceeds-dimension",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::SizeMismatch { .. } => "size-mismatch",
        Error::NotPRegular { .. } => "not-p-regular",
        Error::SizeGuard { .. } => "size-guard",
        Error::Overflow(_) => "overflow",
        Error::NegativeMultiplicity { .. } => "negative-multiplicity",
        Error::OutOfScope(_) => "out-of-scope",
        Error::Consistency(_) => "consistency",
    }
}

#[derive(Serialize)]
struct OutputEnvelope {
    command: &'static str,
    params: Value,
    result: Value,
    version: &'static str,
}

fn emit(command: &'static str, params: Value, result: impl Serialize) -> Result<(), Failure> {
    let envelope = OutputEnvelope {
        command,
        params,
        result: serde_json::to_value(result).expect("results serialize to JSON"),
        version: env!("CARGO_PKG_VERSION"),
    };
    // round-trip through Value so every object has sorted keys
    let value = serde_json::to_value(envelope).expect("envelope serializes");
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("JSON value prints")
    );
    Ok(())
}

fn tsv_rows<T: ToString>(rows: &[Vec<T>]) {
    for row in rows {
        println!(
            "{}",
            row.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\t")
        );
    }
}

fn hook_index(lambda: &Partition, n: usize, p: Prime) -> Result<usize, Error> {
    let m = max_hook_index(p, n);
    (0..=m)
        .find(|&i| hook_partition(p, i).is_ok_and(|h| &h == lambda))
        .ok_or_else(|| {
            Error::OutOfScope(format!(
                "simple characters are available for the hooks (p−i, 1^i) with 0 ≤ i ≤ min(n−1, p−1) = {m}; {lambda} is not one of them for p = {p}, n = {n}"
            ))
        })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Blocks { n, r, p, format } => {
            let blocks = block_partition(n, r, p)?;
            let members: Vec<&Vec<Partition>> = blocks.iter().map(|b| &b.members).collect();
            match format {
                Format::Json => emit(
                    "blocks",
                    json!({"n": n, "r": r, "p": p}),
                    json!({"n": n, "r": r, "p": p, "blocks": members}),
                ),
                Format::Tsv => {
                    tsv_rows(&members.into_iter().cloned().collect::<Vec<_>>());
                    Ok(())
                }
            }
        }
        Command::Char {
            kind,
            partition,
            n,
            p,
        } => {
            let params = json!({"kind": match kind { CharKind::Weyl => "weyl", CharKind::Simple => "simple" }, "partition": partition, "n": n, "p": p});
            let ch = match kind {
                CharKind::Weyl => weyl_character(&partition, n)?,
                CharKind::Simple => hook_simple_character(p, n, hook_index(&partition, n, p)?)?,
            };
            let dim = ch.dim()?;
            emit("char", params, json!({"character": ch, "dim": dim}))
        }
        Command::Jantzen {
            partition,
            n,
            p,
            ledger,
        } => {
            let sum = jantzen_sum(&partition, n, p)?;
            let params = json!({"partition": partition, "n": n, "p": p, "ledger": ledger});
            if ledger {
                emit("jantzen", params, &sum.ledger)
            } else {
                emit("jantzen", params, &sum)
            }
        }
        Command::Mullineux { partition, p } => {
            let image = mullineux(&partition, p)?;
            emit("mullineux", json!({"partition": partition, "p": p}), image)
        }
        Command::Gram {
            partition,
            p,
            rank_only,
            format,
        } => {
            let g = gram_matrix(&partition)?;
            let rank = g.rank_mod_p(p);
            if let Format::Tsv = format {
                if !rank_only {
                    tsv_rows(g.entries());
                }
                println!("rank\t{rank}");
                return Ok(());
            }
            let params = json!({"partition": partition, "p": p, "rank_only": rank_only});
            if rank_only {
                emit("gram", params, json!({"rank": rank, "size": g.rows()}))
            } else {
                emit(
                    "gram",
                    params,
                    json!({"matrix": g.entries(), "rank": rank, "size": g.rows()}),
                )
            }
        }
        Command::Decompose { n, p, format } => {
            let dec = hook_decomposition_matrix(n, p)?;
            let table = reciprocity_table(n, p)?;
            match format {
                Format::Json => emit(
                    "decompose",
                    json!({"n": n, "p": p}),
                    json!({
                        "decomposition": dec,
                        "cartan": dec.cartan(),
                        "reciprocity": table,
                        "ext_quiver": ext_quiver(n, p)?,
                    }),
                ),
                Format::Tsv => {
                    let mut rows = vec![std::iter::once(String::new())
                        .chain(dec.cols.iter().map(ToString::to_string))
                        .collect::<Vec<_>>()];
                    for (label, row) in dec.rows.iter().zip(&dec.entries) {
                        rows.push(
                            std::iter::once(label.to_string())
                                .chain(row.iter().map(ToString::to_string))
                                .collect(),
                        );
                    }
                    tsv_rows(&rows);
                    Ok(())
                }
            }
        }
        Command::Diagrams { n, p } => {
            let m = hook_decomposition_matrix(n, p)?.size() - 1;
            let projectives = (1..=m)
                .map(|i| projective_diagram(i, n, p))
                .collect::<Result<Vec<_>, _>>()?;
            let tilting = tilting_injective_labels(n, p)?;
            emit(
                "diagrams",
                json!({"n": n, "p": p}),
                json!({"projectives": projectives, "tilting": tilting}),
            )
        }
        Command::BrauerTree { p } => emit(
            "brauer-tree",
            json!({"p": p}),
            json!({"tree": brauer_tree(p), "diagrams": principal_block_diagrams(p)}),
        ),
        Command::Verify {
            p,
            n,
            suite,
            format,
        } => {
            let n = n.unwrap_or(p.as_usize());
            let mut suites: Vec<Suite> = Vec::new();
            for s in suite {
                match s {
                    SuiteArg::All => suites.extend(Suite::ALL),
                    SuiteArg::One(one) => suites.push(one),
                }
            }
            suites.sort();
            suites.dedup();
            let report = verify::run(p, n, &suites)?;
            let names: Vec<&str> = suites.iter().map(|s| s.name()).collect();
            match format {
                VerifyFormat::Json => {
                    emit("verify", json!({"p": p, "n": n, "suites": names}), &report)?
                }
                VerifyFormat::Text => {
                    for c in &report.checks {
                        let mark = if c.passed { "PASS" } else { "FAIL" };
                        println!("{mark}\t{}\t{}\t{}", c.suite, c.name, c.detail);
                    }
                    println!(
                        "{}",
                        if report.passed {
                            "ALL PASS"
                        } else {
                            "SOME CHECKS FAILED"
                        }
                    );
                }
            }
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("hookblock: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(e @ (Error::Consistency(_) | Error::NegativeMultiplicity { .. }))) => {
            eprintln!("hookblock: error[{}]: {e}", kind(&e));
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("hookblock: error[{}]: {e}", kind(&e));
            ExitCode::from(2)
        }
    }
}
