//! Command-line driver: generate the non-overlapping families, evaluate
//! their closed-form counts, verify sets exhaustively, and run the
//! expansion-witness checks.
//!
//! Exit codes: 0 success/verified, 1 a property violation or disagreement
//! was found, 2 usage or parse error.

use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use nonoverlap::bitstring::{self, RunParams};
use nonoverlap::counting::{self, CountMode};
use nonoverlap::dyck;
use nonoverlap::format;
use nonoverlap::matrix;
use nonoverlap::verify;
use nonoverlap::{BinaryMatrix, BitString, Error, FamilyParams, OverlapMode, Violation};

#[derive(Parser)]
#[command(name = "nonoverlap", version, about = "Non-overlapping binary string and matrix families: generation, counting, verification, witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family and write it to standard output
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Evaluate closed-form counts, optionally against enumeration
    Count(CountArgs),
    /// Check a built-in family or an input file for overlaps
    Verify(VerifyArgs),
    /// Check the expansion witnesses that show a family can still grow
    Witness(WitnessArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    V,
    D,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Strict,
    FactorTolerant,
}

impl From<ModeArg> for OverlapMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Strict => OverlapMode::Strict,
            ModeArg::FactorTolerant => OverlapMode::FactorTolerant,
        }
    }
}

#[derive(Subcommand)]
enum GenKind {
    /// A string family: one string per line
    Strings {
        #[arg(long)]
        family: FamilyArg,
        /// Forbidden run length (v family only)
        #[arg(long)]
        k: Option<usize>,
        /// Largest string length
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// A matrix family: row lines with a blank line between matrices
    Matrices {
        #[arg(long)]
        family: FamilyArg,
        /// Forbidden run length (v family only)
        #[arg(long)]
        k: Option<usize>,
        /// Largest row count
        #[arg(long)]
        m: usize,
        /// Largest column count
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    family: FamilyArg,
    /// Forbidden run length (v family only)
    #[arg(long)]
    k: Option<usize>,
    /// Largest row count
    #[arg(long)]
    m: usize,
    /// Largest column count
    #[arg(long)]
    n: usize,
    /// Also enumerate each (rows, cols) cell and reconcile
    #[arg(long)]
    compare: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Read the set from this path instead of building a family ("-" for stdin)
    #[arg(long)]
    input: Option<String>,
    /// What an input file contains; inferred from --m for built-in families
    #[arg(long, value_enum)]
    kind: Option<SetKind>,
    #[arg(long)]
    family: Option<FamilyArg>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Strict)]
    mode: ModeArg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SetKind {
    Strings,
    Matrices,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    family: FamilyArg,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
    /// Which witness construction to run; defaults to matrix when --m is given
    #[arg(long, value_enum)]
    kind: Option<WitnessKind>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WitnessKind {
    String,
    Matrix,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Gen { kind } => cmd_gen(kind),
        Command::Count(args) => cmd_count(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Witness(args) => cmd_witness(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run_params(k: Option<usize>) -> Result<RunParams, Error> {
    let k = k.ok_or_else(|| Error::Domain("the v family needs --k".into()))?;
    RunParams::new(k)
}

fn cmd_gen(kind: GenKind) -> Result<ExitCode, Error> {
    match kind {
        GenKind::Strings {
            family,
            k,
            n,
            format,
        } => {
            let set = match family {
                FamilyArg::V => bitstring::v_family(n, run_params(k)?)?,
                FamilyArg::D => dyck::d_family(n)?,
            };
            let rendered = match format {
                FormatArg::Text => format::string_set_to_text(&set),
                FormatArg::Json => format::string_set_to_json_lines(&set),
            };
            print!("{rendered}");
        }
        GenKind::Matrices {
            family,
            k,
            m,
            n,
            format,
        } => {
            let fam = match family {
                FamilyArg::V => matrix::v_matrix_family(m, n, run_params(k)?)?,
                FamilyArg::D => matrix::d_matrix_family(m, n)?,
            };
            let rendered = match format {
                FormatArg::Text => format::matrix_family_to_text(&fam),
                FormatArg::Json => format::matrix_family_to_json_lines(&fam),
            };
            print!("{rendered}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(args: CountArgs) -> Result<ExitCode, Error> {
    let params = match args.family {
        FamilyArg::V => {
            let run = run_params(args.k)?;
            FamilyParams::v(run.k(), args.m, args.n)
        }
        FamilyArg::D => FamilyParams::d(args.m, args.n),
    };

    if !args.compare {
        match (args.family, args.format) {
            (FamilyArg::V, FormatArg::Text) => {
                println!("{}", counting::v_matrix_count(args.m, args.n, params.k.unwrap())?);
            }
            (FamilyArg::V, FormatArg::Json) => {
                let count = counting::v_matrix_count(args.m, args.n, params.k.unwrap())?;
                println!(
                    "{}",
                    serde_json::json!({
                        "family": params.family,
                        "params": params,
                        "count": count.to_string(),
                    })
                );
            }
            (FamilyArg::D, FormatArg::Text) => {
                println!(
                    "corrected: {}",
                    counting::d_matrix_count(args.m, args.n, CountMode::Corrected)?
                );
                println!(
                    "published: {}",
                    counting::d_matrix_count(args.m, args.n, CountMode::Published)?
                );
            }
            (FamilyArg::D, FormatArg::Json) => {
                println!(
                    "{}",
                    serde_json::json!({
                        "family": params.family,
                        "params": params,
                        "corrected": counting::d_matrix_count(args.m, args.n, CountMode::Corrected)?.to_string(),
                        "published": counting::d_matrix_count(args.m, args.n, CountMode::Published)?.to_string(),
                    })
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let report = verify::reconcile_counts(&params)?;
    match args.format {
        FormatArg::Json => println!("{}", report.to_json()),
        FormatArg::Text => {
            for cell in &report.cells {
                let mut line = format!(
                    "rows={} cols={}: enumerated={} formula={} {}",
                    cell.rows,
                    cell.cols,
                    cell.enumerated,
                    cell.formula,
                    if cell.agrees() { "ok" } else { "MISMATCH" }
                );
                if let Some(published) = &cell.published {
                    line.push_str(&format!(
                        " published={published} {}",
                        if cell.published_agrees() == Some(true) {
                            "ok"
                        } else {
                            "flagged"
                        }
                    ));
                }
                println!("{line}");
            }
            println!(
                "total: enumerated={} formula={} {}",
                report.total_enumerated(),
                report.total_formula(),
                if report.agrees() { "ok" } else { "MISMATCH" }
            );
            if let Some(published) = report.total_published() {
                println!("total published: {published}");
            }
        }
    }
    if let Some(total_published) = report.total_published() {
        if total_published != report.total_formula() {
            eprintln!("warning: published formula disagrees with enumeration; the corrected formula is authoritative");
        }
    }
    if report.agrees() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

enum LoadedSet {
    Strings(Vec<BitString>),
    Matrices(Vec<BinaryMatrix>),
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(e.to_string()))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

fn load_set(args: &VerifyArgs) -> Result<(LoadedSet, Option<FamilyParams>), Error> {
    if let Some(path) = &args.input {
        let kind = args
            .kind
            .ok_or_else(|| Error::Domain("--input needs --kind strings|matrices".into()))?;
        let content = read_input(path)?;
        let looks_json = matches!(
            content.trim_start().chars().next(),
            Some('{') | Some('"')
        );
        let set = match (kind, looks_json) {
            (SetKind::Strings, false) => LoadedSet::Strings(format::string_set_from_text(&content)?),
            (SetKind::Strings, true) => {
                LoadedSet::Strings(format::string_set_from_json_lines(&content)?)
            }
            (SetKind::Matrices, false) => {
                LoadedSet::Matrices(format::matrix_family_from_text(&content)?)
            }
            (SetKind::Matrices, true) => {
                LoadedSet::Matrices(format::matrix_family_from_json_lines(&content)?)
            }
        };
        return Ok((set, None));
    }

    let family = args
        .family
        .ok_or_else(|| Error::Domain("give either --input or --family".into()))?;
    let n = args
        .n
        .ok_or_else(|| Error::Domain("built-in families need --n".into()))?;
    let matrices = match args.kind {
        Some(SetKind::Matrices) => true,
        Some(SetKind::Strings) => false,
        None => args.m.is_some(),
    };
    let (set, params) = match (family, matrices) {
        (FamilyArg::V, false) => {
            let run = run_params(args.k)?;
            (
                LoadedSet::Strings(bitstring::v_family(n, run)?),
                FamilyParams::v_strings(run.k(), n),
            )
        }
        (FamilyArg::V, true) => {
            let run = run_params(args.k)?;
            let m = args
                .m
                .ok_or_else(|| Error::Domain("matrix families need --m".into()))?;
            (
                LoadedSet::Matrices(matrix::v_matrix_family(m, n, run)?),
                FamilyParams::v(run.k(), m, n),
            )
        }
        (FamilyArg::D, false) => (
            LoadedSet::Strings(dyck::d_family(n)?),
            FamilyParams::d_strings(n),
        ),
        (FamilyArg::D, true) => {
            let m = args
                .m
                .ok_or_else(|| Error::Domain("matrix families need --m".into()))?;
            (
                LoadedSet::Matrices(matrix::d_matrix_family(m, n)?),
                FamilyParams::d(m, n),
            )
        }
    };
    Ok((set, Some(params)))
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mode: OverlapMode = args.mode.into();
    let (set, params) = load_set(&args)?;
    let violations: Vec<Violation> = match &set {
        LoadedSet::Strings(strings) => verify::verify_string_set(strings)?,
        LoadedSet::Matrices(matrices) => verify::verify_matrix_family(matrices, mode)?,
    };
    if violations.is_empty() {
        println!("OK");
        return Ok(ExitCode::SUCCESS);
    }
    let report = serde_json::json!({
        "family": params.map(|p| p.family),
        "params": params,
        "violations": violations,
    });
    println!("{report}");
    Ok(ExitCode::from(1))
}

fn cmd_witness(args: WitnessArgs) -> Result<ExitCode, Error> {
    if args.family == FamilyArg::D {
        return Err(Error::Domain(
            "witness constructions exist for the v family only".into(),
        ));
    }
    let run = run_params(args.k)?;
    let kind = args.kind.unwrap_or(if args.m.is_some() {
        WitnessKind::Matrix
    } else {
        WitnessKind::String
    });
    let mut all_ok = true;
    match kind {
        WitnessKind::String => {
            for outcome in verify::string_expansion_witnesses(args.n, run)? {
                let ok = outcome.self_ok && outcome.set_ok;
                all_ok &= ok;
                println!(
                    "len={} {}: {}",
                    outcome.candidate.len(),
                    outcome.candidate,
                    if ok { "PASS" } else { "FAIL" }
                );
            }
        }
        WitnessKind::Matrix => {
            let m = args
                .m
                .ok_or_else(|| Error::Domain("matrix witnesses need --m".into()))?;
            for outcome in verify::matrix_expansion_witnesses(m, args.n, run)? {
                let ok = outcome.self_ok && outcome.set_ok;
                all_ok &= ok;
                let rows: Vec<String> = outcome
                    .candidate
                    .rows()
                    .iter()
                    .map(|r| r.to_string())
                    .collect();
                println!(
                    "cols={} {}: {}",
                    outcome.candidate.col_count(),
                    rows.join("|"),
                    if ok { "PASS" } else { "FAIL" }
                );
            }
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
