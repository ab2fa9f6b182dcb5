//! `eaforge`: entanglement-assisted quantum code parameters from classical
//! codes over finite fields.
//!
//! ```shell
//! $ eaforge gen hamming -o hamming.json
//! $ eaforge code-info --input hamming.json
//! n=7 k=4 d=3 hull_e=3 dual_containing=true lcd=false
//! $ eaforge construct cyclic-mds-lcd --q 4 --k 2 -o lcd.json
//! $ eaforge verify lcd.json
//! $ eaforge tabulate mds-grs --q 5
//! ```
//!
//! Exit codes: 0 success, 2 validation or parse error, 3 claim mismatch in
//! strict mode or failed verification, 4 distance budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eaforge::code::{LinearCode, DEFAULT_BUDGET};
use eaforge::construct::{realize_candidate, grs_candidates, GrsCandidate};
use eaforge::field::Field;
use eaforge::forge::{self, Params, TableSource, CSV_HEADER};
use eaforge::linalg::{Form, Matrix};
use eaforge::report::{scalar_leaves, tamper_leaf, CodeFile, ConstructionReport, GrsFile, Mode};
use eaforge::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

#[derive(Debug, Parser)]
#[command(name = "eaforge", version, about = "EAQECC parameters from classical codes")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Distance enumeration budget, in codewords
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(10_000..))]
    budget: u64,

    /// Output file (stdout if omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Prints n, k, d, hull dimensions and LCD / dual-containing flags
    CodeInfo {
        #[arg(long)]
        input: PathBuf,
        /// Emit JSON instead of a summary line
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Derives both EAQECCs of a code from its hull
    Derive {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "euclidean")]
        form: Form,
        #[arg(long, default_value = "strict")]
        mode: Mode,
        #[command(flatten)]
        common: Common,
    },
    /// Runs a named construction and writes its report
    Construct {
        /// One of the constructions listed by `eaforge list`
        name: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        c: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        form: Option<Form>,
        /// Adds the point 0 to the GRS hull family
        #[arg(long)]
        extra_point: bool,
        #[arg(long, default_value = "strict")]
        mode: Mode,
        #[command(flatten)]
        common: Common,
    },
    /// Recomputes a stored report and checks every value
    Verify {
        report: PathBuf,
        /// Also check that this many random single-leaf edits are rejected
        #[arg(long, default_value_t = 0)]
        tamper: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(10_000..))]
        budget: u64,
    },
    /// Emits a CSV parameter table
    Tabulate {
        #[command(subcommand)]
        table: Table,
    },
    /// Writes a sample input file
    Gen {
        #[command(subcommand)]
        what: Sample,
    },
    /// Lists construction names
    List,
}

#[derive(Debug, Subcommand)]
enum Table {
    /// MDS EAQECCs from GRS codes over GF(q^2)
    MdsGrs {
        #[arg(long)]
        q: u32,
        /// Print the source report labels and skipped candidates to stderr
        #[arg(long)]
        sources: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
enum Sample {
    /// Binary [7,4,3] Hamming code
    Hamming {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Binary [3,1,3] repetition code
    Repetition {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hermitian dual-containing GRS code over GF(q^2) for the one-ebit extension
    GrsFamily {
        #[arg(long)]
        q: u32,
        /// Candidate family (1..=4); the first realizable one if omitted
        #[arg(long)]
        row: Option<u8>,
        /// Dimension of the dual-containing code
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> Result<LinearCode> {
    let file: CodeFile = serde_json::from_value(read_json(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    file.build()
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(rep: &ConstructionReport, mode: Mode, out: Option<&Path>) -> Result<()> {
    emit(out, &rep.to_json())?;
    for c in rep.claims.iter().filter(|c| !c.matches) {
        eprintln!("claim `{}`: claimed {}, computed {}", c.name, c.claimed, c.computed);
    }
    rep.enforce(mode)
}

fn sample(rows: &[&[u32]], kind: &str) -> Result<String> {
    let f = Field::prime(2)?;
    let m = Matrix::from_rows(&f, rows[0].len(), &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())?;
    let code = if kind == "parity" { LinearCode::from_parity(&m) } else { LinearCode::from_generator(&m)? };
    Ok(serde_json::to_string_pretty(&CodeFile::of(&code)).unwrap() + "\n")
}

fn grs_sample(q: u32, row: Option<u8>, k: Option<usize>) -> Result<String> {
    let wanted = |c: &GrsCandidate| row.is_none_or(|r| r == c.row) && k.is_none_or(|k| k == c.k);
    for cand in grs_candidates(q).into_iter().filter(wanted) {
        if let Ok((spec, _)) = realize_candidate(&cand) {
            return Ok(serde_json::to_string_pretty(&GrsFile::of(&spec)).unwrap() + "\n");
        }
    }
    Err(Error::NoWitness(format!("no realizable GRS candidate at q = {q}")))
}

fn tamper_trials(json: &str, trials: usize, seed: u64, budget: u64) -> Result<()> {
    let v: Value = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let leaves = scalar_leaves(&v);
    if leaves.is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let path = &leaves[rng.gen_range(0..leaves.len())];
        let mut t = v.clone();
        tamper_leaf(&mut t, path);
        if forge::verify(&t.to_string(), budget).is_ok() {
            return Err(Error::VerificationFailed(format!("edit at `{path}` was accepted")));
        }
    }
    eprintln!("{trials} edits rejected");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Command::CodeInfo { input, json, common } => {
            let info = forge::code_info(&read_code(&input)?, common.budget)?;
            let text = if json {
                serde_json::to_string_pretty(&info).unwrap() + "\n"
            } else {
                format!("{info}\n")
            };
            emit(common.output.as_deref(), &text)
        }
        Command::Derive { input, form, mode, common } => {
            let rep = forge::derive(&read_code(&input)?, form, common.budget)?;
            emit_report(&rep, mode, common.output.as_deref())
        }
        Command::Construct { name, input, c, s, q, r, k, form, extra_point, mode, common } => {
            let input = input.as_deref().map(read_json).transpose()?;
            let p = Params { c, s, q, r, k, form, extra_point: extra_point.then_some(true) };
            let rep = forge::run(&name, &p, input.as_ref(), common.budget)?;
            emit_report(&rep, mode, common.output.as_deref())
        }
        Command::Verify { report, tamper, seed, budget } => {
            let json = read(&report)?;
            forge::verify(&json, budget)?;
            eprintln!("{}: ok", report.display());
            tamper_trials(&json, tamper, seed, budget)
        }
        Command::Tabulate { table: Table::MdsGrs { q, sources, common } } => {
            let (rows, srcs) = forge::tabulate_mds_grs(q, common.budget)?;
            let mut text = format!("{CSV_HEADER}\n");
            for r in &rows {
                text += &r.csv();
                text.push('\n');
            }
            if sources {
                for s in &srcs {
                    match s {
                        TableSource::Report(label, _) => eprintln!("{label}: verified"),
                        TableSource::Skipped(label, e) => eprintln!("{label}: skipped ({e})"),
                    }
                }
            }
            emit(common.output.as_deref(), &text)
        }
        Command::Gen { what } => match what {
            Sample::Hamming { output } => emit(
                output.as_deref(),
                &sample(&[&[1, 0, 1, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]], "parity")?,
            ),
            Sample::Repetition { output } => emit(output.as_deref(), &sample(&[&[1, 1, 1]], "generator")?),
            Sample::GrsFamily { q, row, k, output } => emit(output.as_deref(), &grs_sample(q, row, k)?),
        },
        Command::List => {
            println!("derive");
            for name in forge::CONSTRUCTIONS {
                println!("{name}");
            }
            Ok(())
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ClaimMismatch(_) | Error::VerificationFailed(_) => 3,
        Error::BudgetExceeded { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
