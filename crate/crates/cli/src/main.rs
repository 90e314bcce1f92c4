//! Command-line interface to the Lorentz sequence-space toolkit:
//! norms, level sequences, dual norms, sharp constants, inequality
//! check suites, and sharp-constant convergence sweeps.
//!
//! Output is deterministic for fixed arguments and seed.  JSON keys
//! and CSV column order are stable; floating-point values are printed
//! with 17 significant digits in text and CSV, and serialized
//! round-trip exactly in JSON.  Exit status: 0 when everything
//! requested succeeded (for `check`, when every report passed), 1 when
//! a check or convergence failed, 2 on argument errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lorentz_seq::{
    const_zeta_hardy, const_A, const_B, const_S, dual_norm, dual_norm_oracle, level_sequence,
    lorentz_maximal_norm, lorentz_norm, random_decreasing, run_full_suite, sharpness_sweep,
    weighted_lp_norm, CheckReport, Dist, Exponents, PowerWeight, Seq, SuiteConfig, SweepRow,
    SweepTarget, WeightSeq,
};

#[derive(Parser)]
#[command(name = "lorentz-seq", version, about = "Lorentz sequence-space norms, level sequences, and sharp-constant checks", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Standard, maximal, dual, and weighted-l^p norms of a sequence
    Norm(NormArgs),
    /// Level sequence and its pooled-segment decomposition
    Level(LevelArgs),
    /// Dual norm, optionally cross-checked against the ascent oracle
    Dual(DualArgs),
    /// Sharp constants for a pair of exponents
    Constants(ConstantsArgs),
    /// Run the inequality check suite and report results
    Check(CheckArgs),
    /// Convergence sweep of a sharp-constant ratio over a K grid
    Sweep(SweepArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Enclosure tolerance for tail sums and zeta values
    #[arg(long, env = "LORENTZ_SEQ_TOL", default_value_t = 1e-12, global = true)]
    tol: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for generated inputs
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Args)]
struct InputArgs {
    /// Inline sequence, comma-separated: --x 3,2,1
    #[arg(long)]
    x: Option<String>,
    /// File of newline-separated values
    #[arg(long)]
    input: Option<PathBuf>,
    /// Named generator, e.g. --gen random:n=50,dist=heavy-tail
    #[arg(long = "gen")]
    generator: Option<String>,
}

#[derive(Args)]
struct NormArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    s: f64,
    /// Weight exponent of the plain weighted norm l^p(n^a)
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct LevelArgs {
    /// Weight exponent: levels are taken against phi_n = n^{-a}, a < 1
    #[arg(long, default_value_t = 0.0)]
    a: f64,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct DualArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    s: f64,
    /// Also run the projected-ascent oracle and print the relative gap
    #[arg(long)]
    oracle: bool,
    /// Oracle restarts
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    s: f64,
    /// Weight exponent for the Hardy constants (zeta(p-a)^{1/p} needs
    /// 0 <= a < p-1; S_{p,a} needs -1 < a < 0)
    #[arg(long)]
    a: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CheckArgs {
    /// Run only checks whose id starts with this prefix
    /// (pointwise_lemmas, pooling_lemma, reversed_hardy,
    /// norm_equivalences, dual_bounds, holder)
    #[arg(long)]
    only: Option<String>,
    /// Random cases per parameter point
    #[arg(long, default_value_t = 1000)]
    cases: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Ratio to sweep
    #[arg(long, value_enum)]
    target: TargetKind,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
    /// K grid, comma-separated; defaults to the geometric grid 1..2^20
    #[arg(long = "K", value_delimiter = ',')]
    k: Vec<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetKind {
    /// ||C u^K|| / ||u^K|| in l^p(n^a), 0 <= a < p-1
    #[value(name = "hardy_inc", alias = "hardy-inc")]
    HardyInc,
    /// R_K with decreasing weights, -1 < a < 0
    #[value(name = "S_ratio", alias = "s-ratio")]
    SRatio,
    /// ||(u^K)deg|| / ||u^K||* toward B_{p,s}
    #[value(name = "B_ratio", alias = "b-ratio")]
    BRatio,
    /// K / (||u^K||* ||u^K||*_conj) toward A_{p,s}
    #[value(name = "holder_ratio", alias = "holder-ratio")]
    HolderRatio,
}

/// Argument-domain failure: reported with usage hint, exit status 2.
struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

impl From<lorentz_seq::Error> for UsageError {
    fn from(e: lorentz_seq::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn parse_inline(text: &str) -> Result<Seq, UsageError> {
    let values = text
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<Vec<f64>, _>>()
        .map_err(|e| usage(format!("--x: {e}")))?;
    Ok(Seq::new(values)?)
}

fn parse_file(path: &PathBuf) -> Result<Seq, UsageError> {
    let text =
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let values = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<f64>())
        .collect::<Result<Vec<f64>, _>>()
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Seq::new(values)?)
}

fn parse_generator(spec: &str, seed: u64) -> Result<Seq, UsageError> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    if name != "random" {
        return Err(usage(format!("unknown generator '{name}' (expected random)")));
    }
    let mut n: Option<usize> = None;
    let mut dist = Dist::UniformGaps;
    for part in params.split(',').filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("generator parameter '{part}' is not key=value")))?;
        match key {
            "n" => {
                n = Some(
                    value
                        .parse()
                        .map_err(|e| usage(format!("generator n: {e}")))?,
                )
            }
            "dist" => {
                dist = match value {
                    "uniform-gaps" => Dist::UniformGaps,
                    "heavy-tail" => Dist::HeavyTail,
                    "step" => Dist::Step,
                    other => {
                        return Err(usage(format!(
                            "unknown dist '{other}' (uniform-gaps, heavy-tail, step)"
                        )))
                    }
                }
            }
            other => return Err(usage(format!("unknown generator parameter '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| usage("generator needs n=<len>"))?;
    Ok(random_decreasing(n, seed, dist))
}

impl InputArgs {
    fn resolve(&self, seed: u64) -> Result<Seq, UsageError> {
        match (&self.x, &self.input, &self.generator) {
            (Some(text), None, None) => parse_inline(text),
            (None, Some(path), None) => parse_file(path),
            (None, None, Some(spec)) => parse_generator(spec, seed),
            _ => Err(usage("provide exactly one of --x, --input, --gen")),
        }
    }
}

fn enclosure_json(e: &lorentz_seq::Enclosure) -> serde_json::Value {
    json!({ "lo": e.lo(), "hi": e.hi() })
}

fn run_norm(args: &NormArgs) -> Result<bool, UsageError> {
    let e = Exponents::new(args.p, args.s)?;
    let w = PowerWeight::new(args.a)?;
    let x = args.input.resolve(args.common.seed)?;

    let standard = lorentz_norm(&x, &e);
    let maximal = lorentz_maximal_norm(&x, &e, args.common.tol)?;
    let dual = dual_norm(&x, &e)?;
    let weighted = weighted_lp_norm(&x, args.p, w)?;

    match args.common.format {
        Format::Json => {
            let out = json!({
                "p": args.p, "s": args.s, "a": args.a,
                "standard": standard,
                "maximal": enclosure_json(&maximal),
                "dual": dual,
                "weighted_lp": weighted,
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("norm,value_lo,value_hi");
            println!("standard,{0},{0}", fmt17(standard));
            println!("maximal,{},{}", fmt17(maximal.lo()), fmt17(maximal.hi()));
            println!("dual,{0},{0}", fmt17(dual));
            println!("weighted_lp,{0},{0}", fmt17(weighted));
        }
        Format::Text => {
            println!("standard    = {}", fmt17(standard));
            println!(
                "maximal     = [{}, {}]",
                fmt17(maximal.lo()),
                fmt17(maximal.hi())
            );
            println!("dual        = {}", fmt17(dual));
            println!("weighted_lp = {}  (a = {})", fmt17(weighted), args.a);
        }
    }
    Ok(true)
}

fn run_level(args: &LevelArgs) -> Result<bool, UsageError> {
    let phi = WeightSeq::power(args.a)?;
    let x = args.input.resolve(args.common.seed)?;
    let (xo, decomp) = level_sequence(&x, &phi)?;

    match args.common.format {
        Format::Json => {
            let segments: Vec<_> = decomp
                .segments
                .iter()
                .map(|s| json!({ "start": s.start, "end": s.end, "lambda": s.lambda }))
                .collect();
            let out = json!({ "a": args.a, "xo": xo.values(), "segments": segments });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("n,x,xo");
            for i in 1..=x.len().max(xo.len()) {
                println!("{i},{},{}", fmt17(x.get(i)), fmt17(xo.get(i)));
            }
        }
        Format::Text => {
            let rendered: Vec<String> = xo.values().iter().map(|&v| fmt17(v)).collect();
            println!("xo = [{}]", rendered.join(", "));
            if decomp.segments.is_empty() {
                println!("no pooled segments (x/phi already nonincreasing)");
            }
            for s in &decomp.segments {
                println!(
                    "segment [{}..{}]  lambda = {}",
                    s.start,
                    s.end,
                    fmt17(s.lambda)
                );
            }
        }
    }
    Ok(true)
}

fn run_dual(args: &DualArgs) -> Result<bool, UsageError> {
    let e = Exponents::new(args.p, args.s)?;
    let x = args.input.resolve(args.common.seed)?;
    let dual = dual_norm(&x, &e)?;

    let oracle = if args.oracle {
        match dual_norm_oracle(&x, &e, args.restarts, args.common.tol.max(1e-8)) {
            Ok(v) => Some(v),
            Err(err) => {
                eprintln!("oracle failed: {err}");
                return Ok(false);
            }
        }
    } else {
        None
    };
    let rel_gap = oracle.map(|o| (dual - o).abs() / dual.max(f64::MIN_POSITIVE));

    match args.common.format {
        Format::Json => {
            let mut out = json!({ "p": args.p, "s": args.s, "dual": dual });
            if let (Some(o), Some(g)) = (oracle, rel_gap) {
                out["oracle"] = json!(o);
                out["rel_gap"] = json!(g);
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("quantity,value");
            println!("dual,{}", fmt17(dual));
            if let (Some(o), Some(g)) = (oracle, rel_gap) {
                println!("oracle,{}", fmt17(o));
                println!("rel_gap,{}", fmt17(g));
            }
        }
        Format::Text => {
            println!("dual    = {}", fmt17(dual));
            if let (Some(o), Some(g)) = (oracle, rel_gap) {
                println!("oracle  = {}", fmt17(o));
                println!("rel gap = {}", fmt17(g));
            }
        }
    }
    Ok(true)
}

fn run_constants(args: &ConstantsArgs) -> Result<bool, UsageError> {
    let e = Exponents::new(args.p, args.s)?;
    let b = const_B(&e)?;
    let a_const = const_A(&e);

    // Hardy constants only where the weight exponent is in-window.
    let mut zeta_hardy = None;
    let mut s_const = None;
    if let Some(a) = args.a {
        if a >= 0.0 {
            zeta_hardy = Some(const_zeta_hardy(args.p, a, args.common.tol)?);
        } else {
            s_const = Some(const_S(args.p, a)?);
        }
    }

    match args.common.format {
        Format::Json => {
            let mut out = json!({ "p": args.p, "s": args.s, "B": b, "A": a_const });
            if let Some(a) = args.a {
                out["a"] = json!(a);
            }
            if let Some(z) = &zeta_hardy {
                out["zeta_hardy"] = enclosure_json(z);
            }
            if let Some(sv) = s_const {
                out["S"] = json!(sv);
            }
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        Format::Csv => {
            println!("constant,value_lo,value_hi");
            println!("B,{0},{0}", fmt17(b));
            println!("A,{0},{0}", fmt17(a_const));
            if let Some(z) = &zeta_hardy {
                println!("zeta_hardy,{},{}", fmt17(z.lo()), fmt17(z.hi()));
            }
            if let Some(sv) = s_const {
                println!("S,{0},{0}", fmt17(sv));
            }
        }
        Format::Text => {
            println!("B_{{p,s}} = {}", fmt17(b));
            println!("A_{{p,s}} = {}", fmt17(a_const));
            if let Some(z) = &zeta_hardy {
                println!(
                    "zeta(p-a)^(1/p) = [{}, {}]",
                    fmt17(z.lo()),
                    fmt17(z.hi())
                );
            }
            if let Some(sv) = s_const {
                println!("S_{{p,a}} = {}", fmt17(sv));
            }
        }
    }
    Ok(true)
}

fn print_check_text(report: &CheckReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let params: Vec<String> = report
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    println!(
        "{status} {} [{}] {}/{} worst_margin={:.3e}",
        report.check_id,
        params.join(", "),
        report.n_pass,
        report.n_cases,
        report.worst_margin
    );
    for w in &report.witnesses {
        println!("    {} (margin {:.3e})", w.case, w.margin);
    }
}

fn run_check(args: &CheckArgs) -> Result<bool, UsageError> {
    let config = SuiteConfig {
        seed: args.common.seed,
        tol: args.common.tol,
        cases_per_point: args.cases,
        ..SuiteConfig::default()
    };
    let mut reports = run_full_suite(&config);
    if let Some(only) = &args.only {
        reports.retain(|r| r.check_id.starts_with(only.as_str()));
        if reports.is_empty() {
            return Err(usage(format!(
                "--only {only} matches no check (pointwise_lemmas, pooling_lemma, \
                 reversed_hardy, norm_equivalences, dual_bounds, holder)"
            )));
        }
    }

    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).unwrap()),
        Format::Csv => {
            println!("check_id,n_cases,n_pass,worst_margin");
            for r in &reports {
                println!(
                    "{},{},{},{}",
                    r.check_id,
                    r.n_cases,
                    r.n_pass,
                    fmt17(r.worst_margin)
                );
            }
        }
        Format::Text => {
            for r in &reports {
                print_check_text(r);
            }
        }
    }
    Ok(reports.iter().all(CheckReport::passed))
}

fn print_sweep(rows: &[SweepRow], format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(rows).unwrap()),
        Format::Csv => {
            println!("K,lhs,rhs,ratio,target,gap");
            for r in rows {
                println!(
                    "{},{},{},{},{},{}",
                    r.k,
                    fmt17(r.lhs),
                    fmt17(r.rhs),
                    fmt17(r.ratio),
                    fmt17(r.target),
                    fmt17(r.gap)
                );
            }
        }
        Format::Text => {
            for r in rows {
                println!(
                    "K = {:>8}  ratio = {}  target = {}  gap = {:.3e}",
                    r.k,
                    fmt17(r.ratio),
                    fmt17(r.target),
                    r.gap
                );
            }
        }
    }
}

fn run_sweep(args: &SweepArgs) -> Result<bool, UsageError> {
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| usage(format!("this sweep target needs --{name}")))
    };
    let target = match args.target {
        TargetKind::HardyInc => SweepTarget::HardyInc {
            p: args.p,
            a: need(args.a, "a")?,
        },
        TargetKind::SRatio => SweepTarget::SRatio {
            p: args.p,
            a: need(args.a, "a")?,
        },
        TargetKind::BRatio => SweepTarget::BRatio(Exponents::new(args.p, need(args.s, "s")?)?),
        TargetKind::HolderRatio => {
            SweepTarget::HolderRatio(Exponents::new(args.p, need(args.s, "s")?)?)
        }
    };
    let rows = sharpness_sweep(&target, &args.k, args.common.tol)?;
    print_sweep(&rows, args.common.format);
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Norm(args) => run_norm(args),
        Command::Level(args) => run_level(args),
        Command::Dual(args) => run_dual(args),
        Command::Constants(args) => run_constants(args),
        Command::Check(args) => run_check(args),
        Command::Sweep(args) => run_sweep(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run with --help for usage");
            ExitCode::from(2)
        }
    }
}
