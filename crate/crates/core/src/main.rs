//! Command-line front end: sequence and table generation, identity
//! verification suites, and OEIS b-file emit/check workflows.
//!
//! Exit codes: 0 success/verified, 1 verification or cross-check mismatch,
//! 2 usage error, 3 I/O error.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use patalan::exact::WholeNumber;
use patalan::matrixlab::{
    matrix_inverse, hadamard_inverse_matrix, verify_factorization,
    verify_hadamard_inverse_integral, verify_involution, ExactMatrix,
};
use patalan::oeis::{self, CheckConfig, CheckOutcome, MappingEntry, ReadOrder};
use patalan::powerseries::{
    verify_comp_inverse, verify_convolution, verify_rubenstein_recurrence, verify_two_var_gf,
};
use patalan::sequences::{
    self, patalan_seq, pq_patalan_seq, super_catalan_row, twisted_transpose_check,
    verify_closed_form, SequenceSlice,
};
use patalan::{Error, Params, Verification};

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(
    name = "patalan",
    version,
    about = "Exact Patalan / super Patalan number arrays and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a number sequence.
    Seq(SeqArgs),
    /// Emit a super Patalan table.
    Table(TableArgs),
    /// Run identity verification suites.
    Verify(VerifyArgs),
    /// Read, write and cross-check OEIS b-files.
    Bfile {
        #[command(subcommand)]
        action: BfileAction,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    Patalan,
    PqPatalan,
    SuperCatalanRow,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Json,
    Bfile,
}

#[derive(Args)]
struct SeqArgs {
    #[arg(long, value_enum)]
    kind: SeqKind,
    /// Order p (patalan, pq-patalan).
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Second parameter q (pq-patalan).
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Row index m (super-catalan-row).
    #[arg(long, default_value_t = 0)]
    row: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Index of the first term in b-file output.
    #[arg(long, default_value_t = 0)]
    offset: i64,
    /// Prepend the extra leading 1 of the alternate OEIS convention.
    #[arg(long)]
    leading_one: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    #[arg(long, default_value_t = 8)]
    rows: usize,
    #[arg(long, default_value_t = 8)]
    cols: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Lift the default 64x64 size cap.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    ClosedForm,
    Transpose,
    Rubenstein,
    Gf2var,
    Involution,
    Factorization,
    Hadamard,
    Convolution,
    CompInverse,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    #[arg(long, default_value_t = 12)]
    size: usize,
    /// Lift the default size caps (table 64, matrices 32).
    #[arg(long)]
    allow_large: bool,
}

#[derive(Subcommand)]
enum BfileAction {
    /// Write a sequence as a b-file.
    Emit(EmitArgs),
    /// Cross-check generated terms against a local reference b-file.
    Check(CheckArgs),
}

#[derive(Args)]
struct EmitArgs {
    #[arg(long, value_enum)]
    kind: SeqKind,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    #[arg(long, default_value_t = 0)]
    row: u64,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    offset: i64,
    #[arg(long)]
    leading_one: bool,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Linearization {
    Antidiagonal,
    Row,
}

#[derive(Args)]
struct CheckArgs {
    /// Reference b-file.
    #[arg(long)]
    file: PathBuf,
    /// Family to generate: patalan | pq-patalan | super-patalan.
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Generated terms (1-D) or table side (2-D); derived from the
    /// reference length when absent.
    #[arg(long)]
    count: Option<usize>,
    /// Leading reference terms to ignore.
    #[arg(long, default_value_t = 0)]
    prefix_skip: usize,
    /// Linearization for 2-D families.
    #[arg(long, value_enum, default_value_t = Linearization::Antidiagonal)]
    order: Linearization,
    /// Look the family up by A-number in a mapping file instead of
    /// passing --family/--p/--q.
    #[arg(long)]
    a_number: Option<String>,
    /// Mapping file for --a-number (see data/oeis_map.cfg).
    #[arg(long)]
    mapping: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Seq(args) => cmd_seq(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bfile { action } => match action {
            BfileAction::Emit(args) => cmd_bfile_emit(args),
            BfileAction::Check(args) => cmd_bfile_check(args),
        },
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::InvalidParams { .. }
        | Error::InvalidArgument(_)
        | Error::Mapping { .. }
        | Error::DimensionMismatch(_)
        | Error::ConstantTermNotZero
        | Error::NotInvertible => EXIT_USAGE,
        // a non-integral step or singular matrix is a failed property of
        // the data, not a usage problem
        Error::NonIntegral { .. } | Error::SingularMatrix | Error::BFile { .. } => EXIT_MISMATCH,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn generate_seq(
    kind: SeqKind,
    p: u32,
    q: u32,
    row: u64,
    count: usize,
    leading_one: bool,
) -> Result<SequenceSlice, Error> {
    if count == 0 {
        return Err(usage("count must be >= 1"));
    }
    // --leading-one counts the prepended 1 toward the requested length
    let body = if leading_one { count - 1 } else { count };
    if body == 0 {
        return Ok(SequenceSlice::new(vec![num_bigint::BigInt::from(1)], sequences::Family::Custom));
    }
    let seq = match kind {
        SeqKind::Patalan => patalan_seq(p, body)?,
        SeqKind::PqPatalan => pq_patalan_seq(Params::new(p, q)?, body)?,
        SeqKind::SuperCatalanRow => super_catalan_row(row, body),
    };
    Ok(if leading_one { seq.with_leading_one() } else { seq })
}

fn decimal_strings(values: &[WholeNumber]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn cmd_seq(args: SeqArgs) -> Result<i32, Error> {
    let seq = generate_seq(args.kind, args.p, args.q, args.row, args.count, args.leading_one)?;
    let strings = decimal_strings(&seq.values);
    match args.format {
        OutputFormat::Plain => println!("{}", strings.join(" ")),
        OutputFormat::Csv => println!("{}", strings.join(",")),
        OutputFormat::Bfile => print!("{}", oeis::write_bfile(&seq, args.offset)),
        OutputFormat::Json => {
            let kind = match args.kind {
                SeqKind::Patalan => "patalan",
                SeqKind::PqPatalan => "pq-patalan",
                SeqKind::SuperCatalanRow => "super-catalan-row",
            };
            let mut obj = json!({ "kind": kind, "values": strings });
            match args.kind {
                SeqKind::SuperCatalanRow => {
                    obj["row"] = json!(args.row);
                }
                SeqKind::Patalan => {
                    obj["p"] = json!(args.p);
                    obj["q"] = json!(1);
                }
                SeqKind::PqPatalan => {
                    obj["p"] = json!(args.p);
                    obj["q"] = json!(args.q);
                }
            }
            println!("{obj}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_table(args: TableArgs) -> Result<i32, Error> {
    if !args.allow_large && (args.rows > 64 || args.cols > 64) {
        return Err(usage(
            "table larger than 64x64; entries grow like p^{2(i+j)}, pass --allow-large to proceed",
        ));
    }
    let params = Params::new(args.p, args.q)?;
    let table = sequences::super_patalan_table(params, args.rows, args.cols)?;
    let rows: Vec<Vec<String>> = (0..table.rows())
        .map(|i| decimal_strings(table.row(i)))
        .collect();
    match args.format {
        OutputFormat::Plain => {
            for row in &rows {
                println!("{}", row.join(" "));
            }
        }
        OutputFormat::Csv => {
            for row in &rows {
                println!("{}", row.join(","));
            }
        }
        OutputFormat::Json => {
            println!(
                "{}",
                json!({ "kind": "super-patalan", "p": args.p, "q": args.q, "rows": rows })
            );
        }
        OutputFormat::Bfile => {
            return Err(usage("b-file output is one-dimensional; use `seq` or `bfile emit`"));
        }
    }
    Ok(EXIT_OK)
}

fn format_integer_matrix(m: &ExactMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn suite_checks(suite: Suite) -> Vec<Suite> {
    match suite {
        Suite::All => vec![
            Suite::ClosedForm,
            Suite::Transpose,
            Suite::Rubenstein,
            Suite::Gf2var,
            Suite::Involution,
            Suite::Factorization,
            Suite::Hadamard,
            Suite::Convolution,
            Suite::CompInverse,
        ],
        other => vec![other],
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    let params = Params::new(args.p, args.q)?;
    if args.size < 2 {
        return Err(usage("size must be >= 2"));
    }
    let mut all_passed = true;
    for check in suite_checks(args.suite) {
        let (name, cap) = match check {
            Suite::ClosedForm => ("closed-form", 64),
            Suite::Transpose => ("transpose", 64),
            Suite::Rubenstein => ("rubenstein", 64),
            Suite::Gf2var => ("gf2var", 64),
            Suite::Involution => ("involution", 32),
            Suite::Factorization => ("factorization", 32),
            Suite::Hadamard => ("hadamard", 32),
            Suite::Convolution => ("convolution", 128),
            Suite::CompInverse => ("comp-inverse", 128),
            Suite::All => unreachable!(),
        };
        if args.size > cap && !args.allow_large {
            return Err(usage(format!(
                "size {} exceeds the {name} cap of {cap}; pass --allow-large to proceed",
                args.size
            )));
        }
        let size = args.size;
        let (effective_q, verification) = match check {
            Suite::ClosedForm => (args.q, verify_closed_form(params, size)?),
            Suite::Transpose => (args.q, twisted_transpose_check(params, size)?),
            Suite::Rubenstein => (args.q, verify_rubenstein_recurrence(params, size)?),
            // the two-variable gf identity is stated for q = 1
            Suite::Gf2var => (1, verify_two_var_gf(Params::new(args.p, 1)?, size)?),
            Suite::Involution => (args.q, verify_involution(params, size)?),
            Suite::Factorization => (args.q, verify_factorization(params, size)?),
            Suite::Hadamard => {
                let mut v = verify_hadamard_inverse_integral(params, size)?;
                if v.passed && size <= 4 {
                    let inv = matrix_inverse(&hadamard_inverse_matrix(params, size)?)?;
                    v = Verification::pass_with("hadamard", format!("H^-1 = {}", format_integer_matrix(&inv)));
                }
                (args.q, v)
            }
            Suite::Convolution => (args.q, verify_convolution(args.p, size)?),
            Suite::CompInverse => (args.q, verify_comp_inverse(args.p, size)?),
            Suite::All => unreachable!(),
        };
        all_passed &= verification.passed;
        println!(
            "CHECK {name} p={} q={} size={} {}",
            args.p, effective_q, size, verification
        );
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_bfile_emit(args: EmitArgs) -> Result<i32, Error> {
    let seq = generate_seq(args.kind, args.p, args.q, args.row, args.count, args.leading_one)?;
    let text = oeis::write_bfile(&seq, args.offset);
    match args.out {
        Some(path) => {
            if let Err(err) = fs::write(&path, text) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return Ok(EXIT_IO);
            }
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

struct CheckTarget {
    family: String,
    p: u32,
    q: u32,
    config: CheckConfig,
}

fn resolve_check_target(args: &CheckArgs) -> Result<CheckTarget, Error> {
    if let Some(a_number) = &args.a_number {
        let path = args
            .mapping
            .as_ref()
            .ok_or_else(|| usage("--a-number requires --mapping <file>"))?;
        let text = fs::read_to_string(path)
            .map_err(|err| usage(format!("cannot read mapping {}: {err}", path.display())))?;
        let entries = oeis::read_mapping(&text)?;
        let entry = entries
            .into_iter()
            .find(|(a, _)| a == a_number)
            .ok_or_else(|| usage(format!("{a_number} not present in mapping file")))?;
        match entry.1 {
            MappingEntry::Known { family, p, q, config } => Ok(CheckTarget { family, p, q, config }),
            MappingEntry::Unverified => Err(usage(format!(
                "{a_number} is marked unverified in the mapping file; fill in its entry first"
            ))),
        }
    } else {
        let family = args
            .family
            .clone()
            .ok_or_else(|| usage("pass --family and --p, or --a-number with --mapping"))?;
        let p = args.p.ok_or_else(|| usage("--family requires --p"))?;
        Ok(CheckTarget {
            family,
            p,
            q: args.q,
            config: CheckConfig {
                offset: 0,
                prefix_skip: args.prefix_skip,
                read_order: match args.order {
                    Linearization::Antidiagonal => ReadOrder::Antidiagonal,
                    Linearization::Row => ReadOrder::Row,
                },
            },
        })
    }
}

fn cmd_bfile_check(args: CheckArgs) -> Result<i32, Error> {
    let target = resolve_check_target(&args)?;
    let text = match fs::read_to_string(&args.file) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", args.file.display());
            return Ok(EXIT_IO);
        }
    };
    let reference = oeis::read_bfile(&text, &args.file.display().to_string())?;
    let needed = reference.pairs.len().saturating_sub(target.config.prefix_skip);
    if needed == 0 {
        println!("CHECK bfile {} inconclusive: reference shorter than prefix-skip", reference.source);
        return Ok(EXIT_OK);
    }
    let generated: Vec<WholeNumber> = match target.family.as_str() {
        "patalan" => patalan_seq(target.p, args.count.unwrap_or(needed.min(500)))?.values,
        "pq-patalan" => {
            pq_patalan_seq(Params::new(target.p, target.q)?, args.count.unwrap_or(needed.min(500)))?.values
        }
        "super-patalan" => {
            let side = args.count.unwrap_or_else(|| {
                // smallest side whose complete antidiagonals cover the reference
                let mut s = 1usize;
                while s * (s + 1) / 2 < needed && s < 64 {
                    s += 1;
                }
                s
            });
            let table = sequences::super_patalan_table(Params::new(target.p, target.q)?, side, side)?;
            match target.config.read_order {
                ReadOrder::Antidiagonal => table.antidiagonal_order(),
                ReadOrder::Row => table.row_major_order(),
            }
        }
        other => return Err(usage(format!("unknown family {other:?}"))),
    };
    let outcome = oeis::cross_check(&generated, &reference, &target.config);
    println!("CHECK bfile {} {outcome}", reference.source);
    Ok(match outcome {
        CheckOutcome::Match { .. } => EXIT_OK,
        CheckOutcome::Mismatch { .. } => EXIT_MISMATCH,
        CheckOutcome::Inconclusive => EXIT_OK,
    })
}
