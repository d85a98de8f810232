//! `gateforge`: reproducible verification runs for diagonalizing gate
//! sequences.
//!
//! Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
//! 2 = usage error, 3 = resource budget exceeded.

mod report;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gateforge_core::coeffs::{conjectured_v, exact_verify, recurse_coeffs};
use gateforge_core::identities::{lemma_a1, lemma_a2, lemma_a3, ruiz_identity};
use gateforge_core::linsys::{build_mn, inverse_formula, solve_system};
use gateforge_core::sample::{random_su2, trial_rng};
use gateforge_core::tolerances;
use gateforge_core::word::{build_word, compose_words, convergence_report, normalize_word, Convention, GateWord};

use num_traits::ToPrimitive;
use rand::Rng;

use report::{row, Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "gateforge",
    about = "Build, evaluate and verify diagonalizing gate sequences",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Master seed; per-trial generators split off it by stream counter.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

fn parse_odd_p(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if p < 3 || p.is_multiple_of(2) {
        return Err(format!("p must be an odd integer >= 3, got {p}"));
    }
    Ok(p)
}

fn parse_positive(s: &str) -> Result<u32, String> {
    let v: u32 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if v < 1 {
        return Err("value must be >= 1".into());
    }
    Ok(v)
}

#[derive(Debug, Clone, Copy)]
struct ConventionArg(Convention);

impl FromStr for ConventionArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Convention::from_str(s)
            .map(ConventionArg)
            .map_err(|_| format!("`{s}` is not one of: diag1, omega"))
    }
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Odd sequence order p = 2n + 1.
    #[arg(long, value_parser = parse_odd_p)]
    p: u64,

    /// Diagonal convention for D(theta) powers.
    #[arg(long, default_value = "diag1")]
    convention: ConventionArg,

    /// Print the raw D_j form instead of the normalized word.
    #[arg(long)]
    raw: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_odd_p)]
    p: u64,

    /// Number of random inputs.
    #[arg(long, default_value_t = 100, value_parser = parse_positive)]
    trials: u32,

    /// Iterations per input.
    #[arg(long, default_value_t = 3, value_parser = parse_positive)]
    k: u32,

    /// Residual tolerance; defaults to 1e-12 for p <= 7 and 1e-9 beyond.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Debug, Args)]
struct CoeffsArgs {
    /// Order n (p = 2n + 1).
    #[arg(long, value_parser = parse_positive)]
    n: u32,

    /// Also certify each value in exact cyclotomic arithmetic.
    #[arg(long)]
    exact: bool,

    /// Largest n the exact mode will attempt.
    #[arg(long, default_value_t = 6)]
    exact_max_n: u32,

    /// Tolerance for the numeric value comparison.
    #[arg(long, default_value_t = tolerances::TAU_COEFF)]
    tolerance: f64,
}

#[derive(Debug, Args)]
struct SolveMnArgs {
    #[arg(long, value_parser = parse_positive)]
    n: u32,

    /// Also print the matrix and its inverse as integer CSV dumps.
    #[arg(long)]
    dump: bool,
}

#[derive(Debug, Args)]
struct ComposeArgs {
    /// Odd factors, inner first, e.g. `3,5`.
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_odd_p)]
    factors: Vec<u64>,

    #[arg(long, default_value = "diag1")]
    convention: ConventionArg,

    /// Random inputs for the law check |b_1| = |b_0|^N.
    #[arg(long, default_value_t = 100, value_parser = parse_positive)]
    trials: u32,

    #[arg(long, default_value_t = tolerances::PROVEN_LAW)]
    tolerance: f64,
}

#[derive(Debug, Args)]
struct IdentitiesArgs {
    /// Check the identities for every n up to this bound (the product
    /// identities are additionally capped at their meaningful ranges).
    #[arg(long, default_value_t = 100, value_parser = parse_positive)]
    max_n: u32,

    /// Number of random polynomials for the binomial identity.
    #[arg(long, default_value_t = 100)]
    ruiz_polys: u32,

    /// Largest alternating-sum order d for the binomial identity.
    #[arg(long, default_value_t = 30)]
    ruiz_max_d: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the gate word for an odd order p.
    Build(BuildArgs),
    /// Check the one-step convergence law on random inputs.
    Verify(VerifyArgs),
    /// Compute the coefficient table and compare with the predicted values.
    Coeffs(CoeffsArgs),
    /// Solve the integer system M_n v = -e and verify the closed-form inverse.
    SolveMn(SolveMnArgs),
    /// Compose words for a composite order and check the product law.
    Compose(ComposeArgs),
    /// Run the trigonometric and binomial identity checks.
    Identities(IdentitiesArgs),
}

enum Failure {
    /// Bad arguments discovered after clap parsing.
    Usage(String),
    /// A resource budget was exceeded.
    Budget(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let seed = cli.seed;
    let outcome = match cli.command {
        Command::Build(args) => cmd_build(args, format),
        Command::Verify(args) => cmd_verify(args, seed, format),
        Command::Coeffs(args) => cmd_coeffs(args, format),
        Command::SolveMn(args) => cmd_solve_mn(args, format),
        Command::Compose(args) => cmd_compose(args, seed, format),
        Command::Identities(args) => cmd_identities(args, seed, format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

/// Worker cap: GATEFORGE_THREADS if set, else the available parallelism.
fn worker_count() -> usize {
    std::env::var("GATEFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
        .min(64)
}

/// Evaluate independent trials, possibly concurrently; results come back in
/// trial order so aggregation is deterministic.
fn run_trials<R, F>(trials: u32, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync,
{
    let workers = worker_count().min(trials as usize).max(1);
    if workers == 1 {
        return (0..trials as u64).map(f).collect();
    }
    let mut results: Vec<Option<R>> = (0..trials).map(|_| None).collect();
    let chunk = results.len().div_ceil(workers);
    std::thread::scope(|scope| {
        for (w, slice) in results.chunks_mut(chunk).enumerate() {
            let f = &f;
            scope.spawn(move || {
                for (i, slot) in slice.iter_mut().enumerate() {
                    *slot = Some(f((w * chunk + i) as u64));
                }
            });
        }
    });
    results.into_iter().map(|r| r.expect("trial completed")).collect()
}

fn emit(report: &Report, format: Format) {
    print!("{}", report.emit(format));
}

fn cmd_build(args: BuildArgs, format: Format) -> Result<bool, Failure> {
    let n = ((args.p - 1) / 2) as u32;
    let mut word = build_word(n).map_err(|e| Failure::Usage(e.to_string()))?;
    if !args.raw {
        word = normalize_word(&word).expect("built words are in D_j form");
    }
    word.convention = args.convention.0;
    let mut report = Report::new(
        "build",
        json!({
            "p": args.p,
            "convention": args.convention.0.to_string(),
            "raw": args.raw,
        }),
    );
    let text = word.to_string();
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default().to_string();
    let tokens = lines.next().unwrap_or_default().to_string();
    report.push(row(&[("header", json!(header)), ("word", json!(tokens))]));
    emit(&report, format);
    Ok(true)
}

fn law_tolerance(p: u64, explicit: Option<f64>) -> f64 {
    explicit.unwrap_or(if p <= 7 {
        tolerances::PROVEN_LAW
    } else {
        tolerances::CONJECTURED_LAW
    })
}

fn cmd_verify(args: VerifyArgs, seed: u64, format: Format) -> Result<bool, Failure> {
    let n = ((args.p - 1) / 2) as u32;
    let tol = law_tolerance(args.p, args.tolerance);
    if tol <= 0.0 {
        return Err(Failure::Usage("tolerance must be positive".into()));
    }
    let k = args.k;
    let per_trial = run_trials(args.trials, |t| {
        let u0 = random_su2(&mut trial_rng(seed, t));
        let rows = convergence_report(&u0, n, k).expect("k >= 1");
        rows.into_iter().map(|r| r.residual).collect::<Vec<f64>>()
    });
    let mut max_per_k = vec![0.0f64; k as usize];
    for trial in &per_trial {
        for (i, r) in trial.iter().enumerate() {
            max_per_k[i] = max_per_k[i].max(*r);
        }
    }
    let mut report = Report::new(
        "verify",
        json!({
            "p": args.p,
            "trials": args.trials,
            "k": k,
            "seed": seed,
            "tolerance": tol,
        }),
    );
    let mut pass = true;
    for (i, r) in max_per_k.iter().enumerate() {
        let ok = *r <= tol;
        pass &= ok;
        report.push(row(&[
            ("k", json!(i)),
            ("max_residual", json!(r)),
            ("pass", json!(ok)),
        ]));
    }
    report.pass = pass;
    emit(&report, format);
    Ok(pass)
}

fn cmd_coeffs(args: CoeffsArgs, format: Format) -> Result<bool, Failure> {
    if args.tolerance <= 0.0 {
        return Err(Failure::Usage("tolerance must be positive".into()));
    }
    if args.exact && args.n > args.exact_max_n {
        return Err(Failure::Budget(format!(
            "exact mode is budgeted to n <= {} (requested n = {}); raise --exact-max-n to override",
            args.exact_max_n, args.n
        )));
    }
    let n = args.n;
    let table = recurse_coeffs::<f64>(n).map_err(|e| Failure::Usage(e.to_string()))?;
    let conjectured = conjectured_v(n);
    let mut report = Report::new(
        "coeffs",
        json!({
            "n": n,
            "p": 2 * n + 1,
            "exact": args.exact,
            "tolerance": args.tolerance,
        }),
    );
    let mut pass = true;
    for j in 1..=n as usize {
        let beta = table.beta[j];
        let v = table.v[j - 1];
        let cv = conjectured[j - 1].to_f64().unwrap_or(f64::NAN);
        let delta = (v - cv).abs();
        let mut ok = delta <= args.tolerance;
        let exact_pass: Value = if args.exact {
            let cert = exact_verify(n, j as u32).expect("j in range");
            ok &= cert.pass;
            json!(cert.pass)
        } else {
            Value::Null
        };
        pass &= ok;
        report.push(row(&[
            ("n", json!(n)),
            ("j", json!(j)),
            ("re_beta", json!(beta.re)),
            ("im_beta", json!(beta.im)),
            ("v", json!(v)),
            ("conjectured_v", json!(conjectured[j - 1].to_string())),
            ("abs_delta", json!(delta)),
            ("exact_pass", exact_pass),
        ]));
    }
    report.pass = pass;
    emit(&report, format);
    Ok(pass)
}

fn cmd_solve_mn(args: SolveMnArgs, format: Format) -> Result<bool, Failure> {
    let n = args.n as usize;
    let m = build_mn(n);
    let inv = inverse_formula(n);
    let inverse_ok = m.mat_mul(&inv).is_identity() && inv.mat_mul(&m).is_identity();
    let v = solve_system(n);
    let conjectured = conjectured_v(args.n);
    let solves = {
        let rhs = m.mat_vec(&v);
        rhs.iter().all(|x| x.to_i64() == Some(-1))
    };
    let mut pass = inverse_ok && solves;
    let mut report = Report::new(
        "solve-mn",
        json!({
            "n": n,
            "inverse_exact": inverse_ok,
            "solves_system": solves,
        }),
    );
    for j in 1..=n {
        let ok = v[j - 1] == conjectured[j - 1];
        pass &= ok;
        report.push(row(&[
            ("j", json!(j)),
            ("v", json!(v[j - 1].to_string())),
            ("conjectured_v", json!(conjectured[j - 1].to_string())),
            ("match", json!(ok)),
        ]));
    }
    report.pass = pass;
    emit(&report, format);
    if args.dump {
        print!("{}", m.dump_csv());
        print!("{}", inv.dump_csv());
    }
    Ok(pass)
}

fn cmd_compose(args: ComposeArgs, seed: u64, format: Format) -> Result<bool, Failure> {
    if args.factors.len() < 2 {
        return Err(Failure::Usage("need at least two factors".into()));
    }
    if args.tolerance <= 0.0 {
        return Err(Failure::Usage("tolerance must be positive".into()));
    }
    let mut word: Option<GateWord> = None;
    for &p in &args.factors {
        let n = ((p - 1) / 2) as u32;
        let mut next = normalize_word(&build_word(n).map_err(|e| Failure::Usage(e.to_string()))?)
            .expect("built words normalize");
        next.convention = args.convention.0;
        word = Some(match word {
            None => next,
            Some(inner) => compose_words(&inner, &next).map_err(|e| Failure::Usage(e.to_string()))?,
        });
    }
    let word = word.expect("at least two factors");
    let big_n = word.p();
    let exponent = big_n as i32;

    let residuals = run_trials(args.trials, |t| {
        let u0 = random_su2(&mut trial_rng(seed, t));
        let out = word.apply(&u0);
        (out.b_mag() - u0.b_mag().powi(exponent)).abs()
    });
    let max_residual = residuals.into_iter().fold(0.0f64, f64::max);
    let pass = max_residual <= args.tolerance;

    let powers: Vec<i64> = word.diag_powers();
    let text = word.to_string();
    let token_line = text.lines().nth(1).unwrap_or_default().to_string();
    let mut report = Report::new(
        "compose",
        json!({
            "factors": args.factors,
            "N": big_n,
            "convention": args.convention.0.to_string(),
            "trials": args.trials,
            "seed": seed,
            "tolerance": args.tolerance,
        }),
    );
    report.push(row(&[
        ("powers", json!(powers.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" "))),
        ("word", json!(token_line)),
        ("max_residual", json!(max_residual)),
        ("pass", json!(pass)),
    ]));
    report.pass = pass;
    emit(&report, format);
    Ok(pass)
}

fn cmd_identities(args: IdentitiesArgs, seed: u64, format: Format) -> Result<bool, Failure> {
    let mut report = Report::new(
        "identities",
        json!({
            "max_n": args.max_n,
            "ruiz_polys": args.ruiz_polys,
            "ruiz_max_d": args.ruiz_max_d,
            "seed": seed,
        }),
    );
    if args.ruiz_max_d < 1 {
        return Err(Failure::Usage("ruiz-max-d must be >= 1".into()));
    }
    let mut pass = true;
    let mut worst: Vec<(&'static str, u64, f64, bool)> = Vec::new();

    let mut record = |id: &'static str, n: u64, err: f64, ok: bool| {
        if let Some(entry) = worst.iter_mut().find(|w| w.0 == id) {
            entry.3 &= ok;
            if err > entry.2 {
                entry.1 = n;
                entry.2 = err;
            }
        } else {
            worst.push((id, n, err, ok));
        }
    };

    for n in 1..=args.max_n as u64 {
        let r = lemma_a1(n);
        record("lemma_a1", n, r.abs_error, r.pass);
    }
    for n in 1..=args.max_n.min(500) as u64 {
        let r = lemma_a2(n).map_err(|e| Failure::Usage(e.to_string()))?;
        record("lemma_a2", n, r.abs_error, r.pass);
    }
    for n in 1..=args.max_n.min(1000) as u64 {
        let r = lemma_a3(n);
        record("lemma_a3", n, r.abs_error, r.pass);
    }
    {
        let mut rng = trial_rng(seed, 0);
        let mut worst_d = 0u64;
        let mut all = true;
        for _ in 0..args.ruiz_polys {
            let d = rng.random_range(1..=args.ruiz_max_d);
            let deg = rng.random_range(0..d) as usize;
            let coeffs: Vec<num_bigint::BigInt> = (0..=deg)
                .map(|i| {
                    let c = rng.random_range(-1000i64..=1000);
                    num_bigint::BigInt::from(if i == deg && c == 0 { 1 } else { c })
                })
                .collect();
            let r = ruiz_identity(&coeffs, d).expect("degree < d by construction");
            if !r.pass {
                all = false;
            }
            worst_d = worst_d.max(d);
        }
        record("ruiz", worst_d, 0.0, all);
    }

    for (id, n, err, ok) in &worst {
        pass &= ok;
        report.push(row(&[
            ("identity", json!(id)),
            ("n", json!(n)),
            ("error", json!(err)),
            ("pass", json!(ok)),
        ]));
    }
    report.pass = pass;
    emit(&report, format);
    Ok(pass)
}
