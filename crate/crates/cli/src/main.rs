//! Command line driver: construct witnesses, verify them against the
//! brute-force oracles, sweep parameter grids into JSON-lines reports, and
//! tabulate the small-intersection classification.
//!
//! Exit codes are a stable contract: 0 success, 2 usage or bounds problems,
//! 3 mathematical verification failure.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pqblocks::Error;

mod sweep;

#[derive(Parser)]
#[command(
    name = "pqblocks",
    version,
    about = "Witness characters in two principal blocks at once",
    after_help = "Exit codes: 0 success, 2 usage/bounds, 3 verification failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a witness label and print it as a JSON record.
    Witness(WitnessArgs),
    /// Construct a witness and check it against the exhaustive oracle.
    Verify(WitnessArgs),
    /// Run a parameter grid and emit one JSON record per tuple.
    Sweep(sweep::SweepArgs),
    /// List the (n, p, q=2) triples whose symmetric-group intersection is
    /// only the two linear characters, cross-checked against the oracle.
    Classify(ClassifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Symmetric groups.
    Sym,
    /// Alternating groups.
    Alt,
    /// Linear and unitary groups (partitions label the characters).
    Typea,
    /// Symplectic and odd orthogonal groups (symbols label the characters).
    Typebc,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Sym => "sym",
            Family::Alt => "alt",
            Family::Typea => "typea",
            Family::Typebc => "typebc",
        }
    }
}

#[derive(Args)]
pub struct WitnessArgs {
    /// Which family of groups to work in.
    #[arg(value_enum)]
    family: Family,
    /// Degree (sym/alt) or rank (typea/typebc).
    #[arg(short)]
    n: u32,
    /// First prime.
    #[arg(short)]
    p: u64,
    /// Second prime.
    #[arg(short)]
    q: u64,
    /// Field size (prime power), required for typea/typebc.
    #[arg(long)]
    field: Option<u64>,
    /// +1 for the linear series, -1 for the unitary one (typea only).
    #[arg(long, allow_hyphen_values = true, default_value = "+1")]
    epsilon: String,
    /// Emit machine-readable JSON (the default output format).
    #[arg(long)]
    json: bool,
}

pub fn parse_epsilon(text: &str) -> Result<i8, Error> {
    match text {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(Error::invalid(format!(
            "epsilon must be +1 or -1, got {other:?}"
        ))),
    }
}

fn require_field(args: &WitnessArgs) -> Result<u64, Error> {
    args.field
        .ok_or_else(|| Error::invalid("--field is required for this family"))
}

fn witness_record(args: &WitnessArgs) -> Result<serde_json::Value, Error> {
    match args.family {
        Family::Sym => {
            Ok(pqblocks::witness_sn::witness_symmetric(args.n, args.p, args.q)?.to_json())
        }
        Family::Alt => {
            Ok(pqblocks::witness_sn::witness_alternating(args.n, args.p, args.q)?.to_json())
        }
        Family::Typea => {
            let ctx = pqblocks::witness_lie::TypeAContext::new(
                args.n,
                require_field(args)?,
                parse_epsilon(&args.epsilon)?,
                args.p,
                args.q,
            )?;
            Ok(pqblocks::witness_lie::witness_type_a(&ctx)?.to_json())
        }
        Family::Typebc => {
            let ctx = pqblocks::witness_lie::TypeBCContext::new(
                args.n,
                require_field(args)?,
                args.p,
                args.q,
            )?;
            Ok(pqblocks::witness_lie::witness_type_bc(&ctx)?.to_json())
        }
    }
}

fn cmd_witness(args: &WitnessArgs) -> Result<(), Error> {
    println!("{}", witness_record(args)?);
    Ok(())
}

fn cmd_verify(args: &WitnessArgs) -> Result<(), Error> {
    let report = match args.family {
        Family::Sym => pqblocks::oracle::intersection_sym(args.n, args.p, args.q)?,
        Family::Alt => pqblocks::oracle::intersection_alt(args.n, args.p, args.q)?,
        Family::Typea => pqblocks::oracle::intersection_type_a(
            args.n,
            require_field(args)?,
            parse_epsilon(&args.epsilon)?,
            args.p,
            args.q,
        )?,
        Family::Typebc => {
            pqblocks::oracle::intersection_type_bc(args.n, require_field(args)?, args.p, args.q)?
        }
    };
    println!("{}", report.to_json());
    if report.witness.is_none() {
        return Err(Error::verification("no witness was constructed"));
    }
    if !report.witness_contained {
        return Err(Error::verification(
            "constructed witness is missing from the exhaustive intersection",
        ));
    }
    if report.cardinality() <= 1 {
        return Err(Error::verification(
            "intersection holds only the trivial label",
        ));
    }
    Ok(())
}

#[derive(Args)]
struct ClassifyArgs {
    /// Largest degree to classify (4..=60).
    #[arg(long = "max-n")]
    max_n: u32,
    /// Emit the table as a JSON array instead of text rows.
    #[arg(long)]
    json: bool,
    /// Skip the exhaustive oracle cross-check for n <= 30.
    #[arg(long)]
    no_oracle: bool,
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), Error> {
    let triples = pqblocks::witness_sn::linear_only_triples(args.max_n)?;
    if !args.no_oracle {
        for n in 4..=args.max_n.min(pqblocks::oracle::MAX_INTERSECTION_N) {
            let scanned = pqblocks::oracle::linear_only_pairs(n)?;
            let primes: Vec<u64> = (2..=n as u64)
                .filter(|&p| pqblocks::numtheory::is_prime(p))
                .collect();
            for (i, &q) in primes.iter().enumerate() {
                for &p in &primes[i + 1..] {
                    let classified = pqblocks::witness_sn::classify_small_intersection(n, p, q)?
                        == pqblocks::witness_sn::Classification::LinearOnly;
                    if classified != scanned.contains(&(q, p)) {
                        return Err(Error::verification(format!(
                            "classification mismatch at n={n} p={p} q={q}"
                        )));
                    }
                }
            }
        }
    }
    if args.json {
        let rows: Vec<serde_json::Value> = triples
            .iter()
            .map(|&(n, p)| serde_json::json!({"n": n, "p": p, "q": 2}))
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else {
        let out = std::io::stdout();
        let mut out = out.lock();
        writeln!(out, "n\tp\tq").ok();
        for &(n, p) in &triples {
            writeln!(out, "{n}\t{p}\t2").ok();
        }
        writeln!(
            out,
            "{} linear-only triples up to n = {}{}",
            triples.len(),
            args.max_n,
            if args.no_oracle {
                ""
            } else {
                " (oracle cross-checked for n <= 30)"
            }
        )
        .ok();
    }
    Ok(())
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Verification(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Witness(args) => cmd_witness(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => sweep::cmd_sweep(args),
        Command::Classify(args) => cmd_classify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
