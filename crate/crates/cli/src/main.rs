use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use binmat::bmx::{parse_bmx, to_bmx};
use binmat::catalog::{canonical_relabel, delta4_plus, fano, fano_dual, mk33, mk5, mobius, CatalogId, MobiusKind};
use binmat::deltawye::{delta_y_labels, wye_delta_labels};
use binmat::gen::{generate, Direction, GenFilter};
use binmat::verify::{check_ids, classify, run_checks_with_budget, Evidence};
use binmat::{has_minor, is_isomorphic, BinaryMatroid};

#[derive(Parser)]
#[command(name = "binmat", version, about = "Binary matroid computations and the check suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered checks.
    Check {
        /// Run every check (the default when no ids are given).
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        id: Vec<String>,
        /// Emit one JSON report per line.
        #[arg(long)]
        json: bool,
        /// Per-check time budget in seconds, replacing the registered budgets.
        #[arg(long, value_name = "SECS")]
        time_budget: Option<u64>,
    },
    /// Classify a matroid read from a BMX file.
    Classify { file: PathBuf },
    /// Print a named matroid.
    Catalog {
        /// A catalog name such as `m4_11`, `delta_r(5)` or `wheel(4)`.
        name: String,
        /// Emit BMX with canonical labels instead of the catalog labels.
        #[arg(long)]
        emit: bool,
    },
    /// Test whether the second matroid is a minor of the first.
    Minor { m: PathBuf, n: PathBuf },
    /// Test two matroids for isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Single-element extensions, one per isomorphism class.
    Extend {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
    },
    /// Single-element coextensions, one per isomorphism class.
    Coextend {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        filter: Vec<String>,
    },
    /// Replace a triangle by a triad.
    Deltay {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        triangle: Vec<String>,
    },
    /// Replace a triad by a triangle.
    Wyedelta {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1, required = true)]
        triangle: Vec<String>,
    },
}

/// An input or parse error; exits with 2.
struct Failure(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.into())
    }
}

fn read(path: &Path) -> Result<BinaryMatroid> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_bmx(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_filter(names: &[String]) -> Result<GenFilter> {
    let mut f = GenFilter::new();
    for name in names {
        f = match name.trim() {
            "3c" => f.three_connected(),
            "i4c" => f.internally_4c(),
            "v4c" => f.vertically_4c(),
            "simple" => f.simple(),
            "cosimple" => f.cosimple(),
            "exmk33" => f.excluding(mk33()),
            "exmk5" => f.excluding(mk5()),
            "exf7" => f.excluding(fano()),
            "exf7star" => f.excluding(fano_dual()),
            "exdelta4" => f.excluding(mobius(MobiusKind::Triangular, 4)?),
            "exdelta4plus" => f.excluding(delta4_plus()),
            other => bail!("unknown filter `{other}`"),
        };
    }
    Ok(f)
}

fn emit_all(ms: &[BinaryMatroid]) {
    for (i, m) in ms.iter().enumerate() {
        if i > 0 {
            println!();
        }
        print!("{}", to_bmx(m));
    }
}

fn run_check(all: bool, id: Vec<String>, json: bool, time_budget: Option<u64>) -> Result<bool, Failure> {
    let ids: Vec<&str> = if all || id.is_empty() { check_ids() } else { id.iter().map(String::as_str).collect() };
    let reports = run_checks_with_budget(Some(&ids), time_budget.map(Duration::from_secs))?;
    for r in &reports {
        if json {
            println!("{}", serde_json::to_string(r)?);
        } else {
            let status = if r.pass { "PASS" } else { "FAIL" };
            println!("{status} {} ({} ms) {}", r.id, r.wall_time_ms, r.anchor);
            if !r.pass {
                println!("  expected: {}", r.expected);
                println!("  computed: {}", r.computed);
            }
            if !r.detail.is_empty() {
                println!("  {}", r.detail);
            }
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Check { all, id, json, time_budget } => return run_check(all, id, json, time_budget),
        Command::Classify { file } => {
            let m = read(&file)?;
            let v = classify(&m);
            println!("verdict: {}", serde_json::to_string(&v.kind)?);
            println!("evidence: {}", serde_json::to_string_pretty(&v.evidence)?);
            if !matches!(v.evidence, Evidence::ByTheorem | Evidence::SearchFailed) {
                println!("rechecked: {}", v.recheck(&m));
            }
        }
        Command::Catalog { name, emit } => {
            let id: CatalogId = name.parse()?;
            let m = id.build()?;
            print!("{}", to_bmx(&if emit { canonical_relabel(&m) } else { m }));
        }
        Command::Minor { m, n } => {
            let (m, n) = (read(&m)?, read(&n)?);
            match has_minor(&m, &n) {
                Some(w) => {
                    println!("minor: yes");
                    println!("contract: {}", m.names(w.contract_set).join(" "));
                    println!("delete: {}", m.names(w.delete_set).join(" "));
                }
                None => println!("minor: no"),
            }
        }
        Command::Iso { a, b } => {
            let (a, b) = (read(&a)?, read(&b)?);
            match is_isomorphic(&a, &b) {
                Some(map) => {
                    println!("isomorphic: yes");
                    for (x, y) in map {
                        println!("{x} -> {y}");
                    }
                }
                None => println!("isomorphic: no"),
            }
        }
        Command::Extend { file, filter } => emit_all(&generate(&read(&file)?, Direction::Extend, &parse_filter(&filter)?)),
        Command::Coextend { file, filter } => emit_all(&generate(&read(&file)?, Direction::Coextend, &parse_filter(&filter)?)),
        Command::Deltay { file, triangle } => {
            check_triple(&triangle)?;
            print!("{}", to_bmx(&delta_y_labels(&read(&file)?, &triangle)?));
        }
        Command::Wyedelta { file, triangle } => {
            check_triple(&triangle)?;
            print!("{}", to_bmx(&wye_delta_labels(&read(&file)?, &triangle)?));
        }
    }
    Ok(true)
}

fn check_triple(t: &[String]) -> Result<()> {
    if t.len() != 3 {
        return Err(anyhow!("expected three labels, got {}", t.len()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
