//! Command-line front end: parse a Boolean function, run transforms or a
//! chosen nonlinearity method, enumerate varieties, or benchmark.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 size limit, 4 I/O error.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nlpoly::bench::{self, BenchConfig};
use nlpoly::nlp::{NlpCoefficients, OpCounters};
use nlpoly::symmetric;
use nlpoly::transforms;
use nlpoly::{ideal, AffineFunction, AnfPolynomial, Error, MethodRegistry, TruthTable};

#[derive(Parser)]
#[command(
    name = "nlpoly",
    version,
    about = "Nonlinearity of Boolean functions: nonlinearity polynomial, Walsh transform, ideal varieties, brute force"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Boolean function input: exactly one source format.
#[derive(Args)]
struct FnInput {
    /// Truth table as a '0'/'1' string, leftmost character = point 0
    #[arg(long, group = "source")]
    bin: Option<String>,

    /// Truth table as hex, 4 points per nibble, earliest point in the
    /// most significant bit
    #[arg(long, group = "source")]
    hex: Option<String>,

    /// Algebraic normal form, e.g. "x1*x2+x3+1" (requires -n)
    #[arg(long, group = "source")]
    anf: Option<String>,

    /// Variable count (required for --anf, checked against --bin/--hex)
    #[arg(short, long)]
    n: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the nonlinearity of a Boolean function
    Nl {
        #[command(flatten)]
        input: FnInput,
        /// Algorithm to run (see `methods`)
        #[arg(long, default_value = "nlp")]
        method: String,
        /// Also list every closest affine function
        #[arg(long)]
        closest: bool,
        /// Include per-method detail (Walsh spectrum, polynomial vectors)
        #[arg(long)]
        details: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the registered nonlinearity methods
    Methods,
    /// Algebraic normal form of the function
    Anf {
        #[command(flatten)]
        input: FnInput,
        #[arg(long)]
        json: bool,
    },
    /// Numerical normal form (integer coefficients) of the function
    Nnf {
        #[command(flatten)]
        input: FnInput,
        #[arg(long)]
        json: bool,
    },
    /// Walsh spectrum of the function
    Walsh {
        #[command(flatten)]
        input: FnInput,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of the nonlinearity polynomial
    NlpCoeffs {
        #[command(flatten)]
        input: FnInput,
        #[arg(long)]
        json: bool,
    },
    /// Evaluations of the nonlinearity polynomial (all affine distances)
    NlpEvals {
        #[command(flatten)]
        input: FnInput,
        #[arg(long)]
        json: bool,
    },
    /// Variety of the distance-t ideal; without -t, search t upward and
    /// report the nonlinearity
    Ideal {
        #[command(flatten)]
        input: FnInput,
        /// Ideal degree t (products of t distinct shifted affine entries)
        #[arg(short, long)]
        t: Option<u32>,
        /// Print the materialized generators (guarded by C(2^n,t) <= 10^6)
        #[arg(long)]
        gens: bool,
        /// Print every variety point, not just the first witness
        #[arg(long)]
        points: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare the elementary-symmetric and square-free-monomial varieties
    /// with the Hamming ball of radius t-1 over (F_q)^s
    SymVariety {
        s: u32,
        t: u32,
        q: u32,
        #[arg(long)]
        json: bool,
    },
    /// Time the methods on seeded random functions and report growth rates
    Bench {
        #[arg(long, default_value_t = 6)]
        n_min: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated method names
        #[arg(long, default_value = "fwt,nlp")]
        methods: String,
        /// Write the records as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Lib(Error::SizeLimit(_)) => 3,
        CliError::Lib(_) => 2,
        CliError::Io(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Resolves the function input to a canonical truth table.
fn parse_function(input: &FnInput) -> Result<TruthTable, CliError> {
    let tt = if let Some(bits) = &input.bin {
        TruthTable::from_binary_str(bits)?
    } else if let Some(hex) = &input.hex {
        TruthTable::from_hex_str(hex)?
    } else if let Some(expr) = &input.anf {
        let n = input
            .n
            .ok_or_else(|| Error::Parse("--anf needs an explicit variable count (-n)".into()))?;
        AnfPolynomial::parse(expr, n)?.truth_table()
    } else {
        return Err(Error::Parse("one of --bin, --hex, --anf is required".into()).into());
    };
    if let Some(n) = input.n {
        if n != tt.var_count() {
            return Err(Error::Parse(format!(
                "-n {n} does not match the table length (n={})",
                tt.var_count()
            ))
            .into());
        }
    }
    Ok(tt)
}

fn closest_json(set: &BTreeSet<AffineFunction>) -> serde_json::Value {
    json!(set
        .iter()
        .map(|alpha| json!({
            "coeffs": alpha.coeffs(),
            "anf": alpha.anf_string(),
        }))
        .collect::<Vec<_>>())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Nl {
            input,
            method,
            closest,
            details,
            json,
        } => cmd_nl(&input, &method, closest, details, json),
        Command::Methods => {
            let registry = MethodRegistry::standard();
            for m in registry.iter() {
                println!("{:<6} n<={:<3} {}", m.name(), m.max_vars(), m.summary());
            }
            Ok(())
        }
        Command::Anf { input, json } => {
            let tt = parse_function(&input)?;
            let anf = transforms::mobius(&tt);
            if json {
                let monomials: Vec<Vec<u32>> = anf
                    .monomial_masks()
                    .map(|m| anf.monomial_support(m))
                    .collect();
                print_json(&json!({
                    "n": anf.var_count(),
                    "anf": anf.to_string(),
                    "monomials": monomials,
                }));
            } else {
                println!("{anf}");
            }
            Ok(())
        }
        Command::Nnf { input, json } => {
            let tt = parse_function(&input)?;
            let poly = transforms::nnf_from_truth_table(&tt);
            if json {
                print_json(&json!({
                    "n": poly.var_count(),
                    "coefficients": poly.coeffs(),
                }));
            } else {
                println!("{:?}", poly.coeffs());
            }
            Ok(())
        }
        Command::Walsh { input, json } => {
            let tt = parse_function(&input)?;
            let spectrum = transforms::walsh_spectrum(&tt);
            if json {
                print_json(&json!({
                    "n": spectrum.var_count(),
                    "spectrum": spectrum.values(),
                }));
            } else {
                println!("{:?}", spectrum.values());
            }
            Ok(())
        }
        Command::NlpCoeffs { input, json } => {
            let tt = parse_function(&input)?;
            let mut counters = OpCounters::default();
            let coeffs = NlpCoefficients::from_butterfly(&tt, &mut counters);
            if json {
                print_json(&json!({
                    "n": coeffs.var_count(),
                    "coefficients": coeffs.coeffs(),
                    "sums": counters.sums,
                    "doublings": counters.doublings,
                }));
            } else {
                println!("{:?}", coeffs.coeffs());
            }
            Ok(())
        }
        Command::NlpEvals { input, json } => {
            let tt = parse_function(&input)?;
            let mut counters = OpCounters::default();
            let coeffs = NlpCoefficients::from_butterfly(&tt, &mut counters);
            let evals = coeffs.evaluate_all(&mut counters);
            if json {
                print_json(&json!({
                    "n": evals.var_count(),
                    "evaluations": evals.values(),
                }));
            } else {
                println!("{:?}", evals.values());
            }
            Ok(())
        }
        Command::Ideal {
            input,
            t,
            gens,
            points,
            json,
        } => cmd_ideal(&input, t, gens, points, json),
        Command::SymVariety { s, t, q, json } => cmd_sym_variety(s, t, q, json),
        Command::Bench {
            n_min,
            n_max,
            trials,
            seed,
            methods,
            csv,
            json,
        } => cmd_bench(n_min, n_max, trials, seed, &methods, csv.as_deref(), json),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}

fn cmd_nl(
    input: &FnInput,
    method_name: &str,
    closest: bool,
    details: bool,
    json: bool,
) -> Result<(), CliError> {
    let tt = parse_function(input)?;
    let registry = MethodRegistry::standard();
    let method = registry.get(method_name)?;

    let (value, argmin) = if closest {
        let (v, set) = method.closest_affine(&tt)?;
        (v, Some(set))
    } else {
        (method.nonlinearity(&tt)?, None)
    };

    let mut detail_fields = serde_json::Map::new();
    let mut detail_lines: Vec<String> = Vec::new();
    if details {
        match method_name {
            "fwt" => {
                let spectrum = transforms::walsh_spectrum(&tt);
                detail_lines.push(format!("walsh spectrum: {:?}", spectrum.values()));
                detail_fields.insert("walsh_spectrum".into(), json!(spectrum.values()));
            }
            "nlp" => {
                let mut counters = OpCounters::default();
                let coeffs = NlpCoefficients::from_butterfly(&tt, &mut counters);
                let evals = coeffs.evaluate_all(&mut counters);
                detail_lines.push(format!("coefficients: {:?}", coeffs.coeffs()));
                detail_lines.push(format!("evaluations: {:?}", evals.values()));
                detail_fields.insert("coefficients".into(), json!(coeffs.coeffs()));
                detail_fields.insert("evaluations".into(), json!(evals.values()));
            }
            _ => {}
        }
    }

    if json {
        let mut record = json!({
            "n": tt.var_count(),
            "method": method_name,
            "nonlinearity": value,
        });
        if let Some(set) = &argmin {
            record["closest"] = closest_json(set);
        }
        for (k, v) in detail_fields {
            record[k] = v;
        }
        print_json(&record);
    } else {
        println!("{value}");
        if let Some(set) = &argmin {
            println!("closest affine functions ({}):", set.len());
            for alpha in set {
                println!("  {}  {}", alpha.tuple_string(), alpha.anf_string());
            }
        }
        for line in detail_lines {
            println!("{line}");
        }
    }
    Ok(())
}

fn cmd_ideal(
    input: &FnInput,
    t: Option<u32>,
    gens: bool,
    points: bool,
    json: bool,
) -> Result<(), CliError> {
    let tt = parse_function(input)?;
    match t {
        Some(t) => {
            let witness = ideal::variety_witness_lazy(&tt, t)?;
            let mut record = json!({
                "n": tt.var_count(),
                "t": t,
                "empty": witness.is_none(),
            });
            let mut lines = Vec::new();
            match &witness {
                None => lines.push(format!(
                    "t={t}: no affine function within distance {}",
                    t - 1
                )),
                Some(alpha) => {
                    lines.push(format!(
                        "t={t}: variety nonempty; first witness {} = {}",
                        alpha.tuple_string(),
                        alpha.anf_string()
                    ));
                    record["witness"] =
                        json!({"coeffs": alpha.coeffs(), "anf": alpha.anf_string()});
                }
            }
            if points {
                let set = ideal::variety_points_lazy(&tt, t)?;
                lines.push(format!("variety points ({}):", set.len()));
                for alpha in &set {
                    lines.push(format!(
                        "  {}  {}",
                        alpha.tuple_string(),
                        alpha.anf_string()
                    ));
                }
                record["points"] = closest_json(&set);
            }
            if gens {
                let generators = ideal::distance_ideal_generators(&tt, t)?;
                lines.push(format!(
                    "generators ({}), field equations implied:",
                    generators.generators().len()
                ));
                for g in generators.generators() {
                    lines.push(format!("  {g}"));
                }
                record["generators"] = json!(generators
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>());
            }
            if json {
                print_json(&record);
            } else {
                for line in lines {
                    println!("{line}");
                }
            }
        }
        None => {
            // Search upward like the basic algorithm, reporting each step.
            let mut steps = Vec::new();
            let mut lines = Vec::new();
            let mut t = 1u32;
            let nl = loop {
                let witness = ideal::variety_witness_lazy(&tt, t)?;
                match witness {
                    None => {
                        lines.push(format!(
                            "t={t}: no affine function within distance {}",
                            t - 1
                        ));
                        steps.push(json!({"t": t, "empty": true}));
                        t += 1;
                    }
                    Some(alpha) => {
                        lines.push(format!(
                            "t={t}: witness {} = {}",
                            alpha.tuple_string(),
                            alpha.anf_string()
                        ));
                        steps.push(json!({
                            "t": t,
                            "empty": false,
                            "witness": {"coeffs": alpha.coeffs(), "anf": alpha.anf_string()},
                        }));
                        break t - 1;
                    }
                }
            };
            if json {
                print_json(&json!({
                    "n": tt.var_count(),
                    "steps": steps,
                    "nonlinearity": nl,
                }));
            } else {
                for line in lines {
                    println!("{line}");
                }
                println!("nonlinearity: {nl}");
            }
        }
    }
    Ok(())
}

fn format_point_set(set: &BTreeSet<symmetric::FqVector>) -> String {
    let rendered: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", rendered.join(", "))
}

fn cmd_sym_variety(s: u32, t: u32, q: u32, json: bool) -> Result<(), CliError> {
    if t > s {
        return Err(Error::Invalid(format!("need 1 <= t <= s, got t={t} for s={s}")).into());
    }
    let sym = symmetric::symmetric_variety(s, t, q)?;
    let mono = symmetric::monomial_variety(s, t, q)?;
    let ball = symmetric::weight_ball(s, t - 1, q)?;
    let sym_ok = sym == ball;
    let mono_ok = mono == ball;
    if json {
        let listed = |set: &BTreeSet<symmetric::FqVector>| -> serde_json::Value {
            if set.len() <= 1024 {
                json!(set.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            } else {
                serde_json::Value::Null
            }
        };
        print_json(&json!({
            "s": s, "t": t, "q": q,
            "symmetric": {"count": sym.len(), "points": listed(&sym)},
            "monomial": {"count": mono.len(), "points": listed(&mono)},
            "weight_ball_radius": t - 1,
            "weight_ball_count": ball.len(),
            "symmetric_equals_ball": sym_ok,
            "monomial_equals_ball": mono_ok,
        }));
    } else {
        println!("s={s} t={t} q={q}");
        if sym.len() <= 64 {
            println!(
                "elementary-symmetric variety ({} points): {}",
                sym.len(),
                format_point_set(&sym)
            );
            println!(
                "square-free-monomial variety ({} points): {}",
                mono.len(),
                format_point_set(&mono)
            );
        } else {
            println!("elementary-symmetric variety: {} points", sym.len());
            println!("square-free-monomial variety: {} points", mono.len());
        }
        println!("weight ball of radius {} has {} points", t - 1, ball.len());
        println!("symmetric variety equals ball: {sym_ok}");
        println!("monomial variety equals ball: {mono_ok}");
    }
    Ok(())
}

fn cmd_bench(
    n_min: u32,
    n_max: u32,
    trials: u32,
    seed: u64,
    methods: &str,
    csv: Option<&std::path::Path>,
    json: bool,
) -> Result<(), CliError> {
    let registry = MethodRegistry::standard();
    let config = BenchConfig {
        n_min,
        n_max,
        trials,
        seed,
        methods: methods
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect(),
    };
    let records = if json {
        bench::run(&registry, &config)?
    } else {
        println!("{}", bench::CSV_HEADER);
        bench::run_with_progress(&registry, &config, |r| println!("{}", bench::csv_row(r)))?
    };

    if let Some(path) = csv {
        std::fs::write(path, bench::to_csv(&records))?;
    }

    let growth = bench::growth_table(&records);
    if json {
        print_json(&json!({
            "records": records.iter().map(|r| json!({
                "n": r.n, "method": r.method, "trials": r.trials,
                "mean_ns": r.mean_ns, "sums": r.sums, "doublings": r.doublings,
            })).collect::<Vec<_>>(),
            "growth": growth.iter().map(|row| json!({
                "from_n": row.from_n,
                "theory": row.theory,
                "measured": row.measured.iter()
                    .map(|(name, v)| (name.clone(), json!(v)))
                    .collect::<serde_json::Map<_, _>>(),
            })).collect::<Vec<_>>(),
        }));
    } else if !growth.is_empty() {
        println!();
        println!("growth of mean time, log2(t(n+1)/t(n)):");
        let methods: Vec<&str> = growth[0]
            .measured
            .iter()
            .map(|(name, _)| name.as_str())
            .collect();
        let mut header = format!("{:>8} {:>8}", "n->n+1", "theory");
        for m in &methods {
            header.push_str(&format!(" {m:>8}"));
        }
        println!("{header}");
        for row in &growth {
            let mut line = format!(
                "{:>8} {:>8.2}",
                format!("{}->{}", row.from_n, row.from_n + 1),
                row.theory
            );
            for (_, v) in &row.measured {
                line.push_str(&format!(" {v:>8.2}"));
            }
            println!("{line}");
        }
    }
    Ok(())
}
