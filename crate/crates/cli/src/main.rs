use std::fs;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use polyfactor::bench::{self, BenchRow};
use polyfactor::deciders::CoefConvention;
use polyfactor::factorize::DEFAULT_DEGREE_CAP;
use polyfactor::instance::{
    check_verdict, factor_json, parse_factor_input, reduce_instance, run_verdict, ConfigOverrides, InstanceFile, Problem,
};
use polyfactor::poly::parse_bigint;
use polyfactor::reductions::{
    exhaustive_sweep, random_sweep, CertifyOptions, ReductionKind, SweepBounds, CERTIFIED_CONVENTION,
};
use polyfactor::Error;

const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_DISAGREEMENT: u8 = 3;
const BUDGET_VAR: &str = "POLYFACTOR_BUDGET";

#[derive(Parser)]
#[command(name = "polyfactor", version, about = "Exact deciders for constrained-factor problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance file and print a verdict.
    Decide(DecideArgs),
    /// Reduce an instance file to another problem.
    Reduce(ReduceArgs),
    /// Factor a polynomial given as a coefficient array or {"poly": [...]}.
    Factor {
        file: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
    },
    /// Certify a reduction over an exhaustive or seeded random sweep.
    Verify(VerifyArgs),
    /// Run a timing suite and print CSV.
    Bench {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Re-verify a verdict file against its instance file.
    Check { instance: String, verdict: String },
}

#[derive(Args)]
struct DecideArgs {
    file: String,
    /// Exit 0 for yes, 1 for no, 2 for errors.
    #[arg(long)]
    exit_status: bool,
    #[arg(long)]
    strategy: Option<String>,
    /// allowed | forbidden
    #[arg(long)]
    trivial: Option<String>,
    /// monic | allow
    #[arg(long)]
    signed: Option<String>,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    k: String,
    file: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// sp-kfactor | pp-kequal | ssop-fwsc
    #[arg(long)]
    kind: String,
    #[arg(long, conflicts_with_all = ["seed", "count"])]
    exhaustive: bool,
    #[arg(long, requires = "count")]
    seed: Option<u64>,
    #[arg(long, requires = "seed")]
    count: Option<u64>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_a: Option<u64>,
    #[arg(long)]
    max_t: Option<u64>,
    /// Comma-separated shifts k (arities for ssop-fwsc).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Option<Vec<i64>>,
    /// ascending | descending (ssop-fwsc only)
    #[arg(long)]
    convention: Option<String>,
    /// Print only the summary line.
    #[arg(long)]
    summary_only: bool,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn error_json(e: &Error) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

fn read(path: &str) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInstance(format!("cannot read {path}: {e}")))
}

fn parse_json(path: &str) -> Result<Value, Error> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::InvalidInstance(format!("{path}: {e}")))
}

fn budget() -> Result<Option<u128>, Error> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u128>()
            .map(Some)
            .map_err(|_| Error::InvalidInstance(format!("{BUDGET_VAR}={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(None),
    }
}

fn print_json(v: &Value) {
    println!("{v}");
}

fn decide(args: &DecideArgs) -> Result<ExitCode, Error> {
    let inst = InstanceFile::from_json(&read(&args.file)?)?;
    let flags = ConfigOverrides {
        trivial_factors: args.trivial.clone(),
        signed_factors: args.signed.clone(),
        strategy: args.strategy.clone(),
        ..ConfigOverrides::default()
    };
    let mut cfg = inst.resolve(&flags)?;
    if let Some(b) = budget()? {
        cfg = cfg.with_budget(b);
    }
    let verdict = run_verdict(&inst, &cfg)?;
    print_json(&verdict);
    let yes = verdict["answer"] == "yes";
    Ok(if args.exit_status && !yes {
        ExitCode::from(EXIT_NO)
    } else {
        ExitCode::SUCCESS
    })
}

fn reduce(args: &ReduceArgs) -> Result<ExitCode, Error> {
    let inst = InstanceFile::from_json(&read(&args.file)?)?;
    let k: BigInt = parse_bigint(&args.k)?;
    let out = reduce_instance(&inst, Problem::parse(&args.from)?, Problem::parse(&args.to)?, &k)?;
    print_json(&out.to_json());
    Ok(ExitCode::SUCCESS)
}

fn factor(file: &str, cap: usize) -> Result<ExitCode, Error> {
    let p = parse_factor_input(&read(file)?)?;
    print_json(&factor_json(&p, cap)?);
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    let kind = ReductionKind::parse(&args.kind)?;
    let defaults = SweepBounds::default_for(kind);
    let bounds = SweepBounds {
        max_n: args.max_n.unwrap_or(defaults.max_n),
        max_a: args.max_a.unwrap_or(defaults.max_a),
        max_t: args.max_t.unwrap_or(defaults.max_t),
        params: args.params.clone().unwrap_or(defaults.params),
    };
    let convention = match &args.convention {
        Some(c) => c.parse::<CoefConvention>()?,
        None => CERTIFIED_CONVENTION,
    };
    let opts = CertifyOptions {
        convention,
        inject_fault: args.inject_fault,
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut sink = |r: &polyfactor::reductions::ReductionReport| {
        if !args.summary_only {
            let _ = writeln!(out, "{}", r.to_json());
        }
    };
    let summary = match (args.seed, args.count) {
        (Some(seed), Some(count)) => random_sweep(kind, &bounds, seed, count, opts, &mut sink)?,
        _ => exhaustive_sweep(kind, &bounds, opts, &mut sink)?,
    };
    let _ = writeln!(out, "{}", json!({ "summary": summary.to_json(), "kind": kind.as_str() }));
    let _ = out.flush();
    eprintln!(
        "{}: {} instances, {} disagreements, {} witness failures",
        kind.as_str(),
        summary.instances,
        summary.disagreements,
        summary.witness_failures
    );
    Ok(if summary.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREEMENT)
    })
}

fn bench_cmd(suite: &str) -> Result<ExitCode, Error> {
    let rows = bench::run_suite(suite)?;
    println!("{}", BenchRow::HEADER);
    for r in rows {
        println!("{}", r.to_csv());
    }
    Ok(ExitCode::SUCCESS)
}

fn check(instance: &str, verdict: &str) -> Result<ExitCode, Error> {
    let inst = InstanceFile::from_json(&read(instance)?)?;
    let v = parse_json(verdict)?;
    Ok(match check_verdict(&inst, &v) {
        Ok(()) => {
            print_json(&json!({ "valid": true }));
            ExitCode::SUCCESS
        }
        Err(e) => {
            print_json(&json!({ "valid": false, "reason": e.to_string() }));
            ExitCode::from(EXIT_NO)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decide(a) => decide(a),
        Command::Reduce(a) => reduce(a),
        Command::Factor { file, degree_cap } => factor(file, *degree_cap),
        Command::Verify(a) => verify(a),
        Command::Bench { suite } => bench_cmd(suite),
        Command::Check { instance, verdict } => check(instance, verdict),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            print_json(&error_json(&e));
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
