//! Command-line front end. Exit codes: 0 when every hard check passes,
//! 1 on a mathematical failure, 2 on a usage or configuration error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::autocorr::{sigma_decomposition, x_alpha_all_from_table};
use crate::auxcurve;
use crate::boolfn::{reduce_difference, truth_table, QuinticCurve, TracePoly};
use crate::bounds::{
    check_divisibility, check_linf_lower, check_linf_upper, check_sigma4_deviation, BoundCheck,
};
use crate::classify7::{classify_all, count_from_classifications, XClass};
use crate::field::{format_modulus, parse_modulus, FieldCtx};
use crate::genus2;
use crate::rng::trace_poly_corpus;
use crate::spectrum::fwht;

pub const SCHEMA: &str = "walsh-forge/1";

/// Degrees from which the autocorrelation-based checks need `--slow`.
const SLOW_DEGREE: u32 = 13;

#[derive(Parser, Debug)]
#[command(
    name = "walsh-forge",
    version,
    about = "Walsh spectra and autocorrelation of trace functions over GF(2^m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectrum, autocorrelation, shift classes and bounds for one G.
    Analyze(AnalyzeArgs),
    /// Seeded corpus of random G with per-row statistics and aggregates.
    Scan(ScanArgs),
    /// Shift classifier against brute-force X_alpha, plus auxiliary-curve bounds.
    Verify(VerifyArgs),
    /// Radical, predicted and counted points of one genus-2 curve.
    Curve(CurveArgs),
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Extension degree m.
    #[arg(long)]
    m: u32,
    /// Irreducible modulus as hex bitmask, e.g. 0x25.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; results do not depend on it.
    #[arg(long)]
    threads: Option<usize>,
    /// Allow autocorrelation-based checks for m >= 13.
    #[arg(long)]
    slow: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct CorpusArgs {
    /// G as inline JSON or a path to a JSON file.
    #[arg(long = "g", alias = "G")]
    g: Option<String>,
    /// Largest b index of generated G.
    #[arg(long, default_value_t = 0)]
    s: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of generated G.
    #[arg(long, alias = "trials", default_value_t = 1)]
    count: usize,
    /// Comma-separated subset of spectrum,autocorr,predictor,bounds,auxcurve,genus2.
    #[arg(long)]
    checks: Option<String>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    corpus: CorpusArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    corpus: CorpusArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    corpus: CorpusArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Flip one prediction to confirm that mismatches are detected.
    #[arg(long)]
    selftest_negative: bool,
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Curve as inline JSON {"a","b","c","d"} or a path to a JSON file.
    #[arg(long)]
    curve: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Check {
    Spectrum,
    Autocorr,
    Predictor,
    Bounds,
    Auxcurve,
    Genus2,
}

impl Check {
    fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "spectrum" => Check::Spectrum,
            "autocorr" => Check::Autocorr,
            "predictor" => Check::Predictor,
            "bounds" => Check::Bounds,
            "auxcurve" => Check::Auxcurve,
            "genus2" => Check::Genus2,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Check::Spectrum => "spectrum",
            Check::Autocorr => "autocorr",
            Check::Predictor => "predictor",
            Check::Bounds => "bounds",
            Check::Auxcurve => "auxcurve",
            Check::Genus2 => "genus2",
        }
    }
}

#[derive(Debug)]
enum Failure {
    /// Bad flags or inputs; exit code 2.
    Usage(String),
    /// A computation reported an inconsistency; exit code 1.
    Math(String),
}

impl From<crate::error::Error> for Failure {
    fn from(e: crate::error::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Math(e.to_string())
    }
}

type Usage<T> = std::result::Result<T, Failure>;

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(msg.to_string())
}

/// Outcome of a command before serialization.
struct Outcome {
    command: &'static str,
    result: Value,
    checks: Vec<BoundCheck>,
    csv: String,
}

impl Outcome {
    fn passed(&self) -> bool {
        !self.checks.iter().any(BoundCheck::failed_hard)
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn execute(cli: Cli) -> Usage<i32> {
    let output = match &cli.command {
        Command::Analyze(a) => a.output.clone(),
        Command::Scan(a) => a.output.clone(),
        Command::Verify(a) => a.output.clone(),
        Command::Curve(a) => a.output.clone(),
    };
    let pool = build_pool(output.threads)?;
    let threads = pool.current_num_threads();
    let start = Instant::now();
    let outcome = pool.install(|| match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Curve(a) => cmd_curve(a),
    })?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let text = match output.format {
        Format::Json => {
            let report = render_report(&outcome, elapsed_ms, threads);
            serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
        }
        Format::Csv => outcome.csv.clone(),
    };
    emit(&text, output.out.as_deref())?;
    Ok(if outcome.passed() { 0 } else { 1 })
}

fn build_pool(threads: Option<usize>) -> Usage<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        if n == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(usage)
}

fn emit(text: &str, out: Option<&Path>) -> Usage<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// SHA-256 of the compact JSON of a value; object keys serialize sorted.
pub fn determinism_hash(result: &Value) -> String {
    hex::encode(Sha256::digest(result.to_string().as_bytes()))
}

fn render_report(outcome: &Outcome, elapsed_ms: u64, threads: usize) -> Value {
    json!({
        "schema": SCHEMA,
        "tool": "walsh-forge",
        "version": env!("CARGO_PKG_VERSION"),
        "command": outcome.command,
        "pass": outcome.passed(),
        "result": outcome.result,
        "checks": outcome.checks,
        "determinism_hash": determinism_hash(&json!({
            "result": outcome.result,
            "checks": outcome.checks,
        })),
        "metadata": { "elapsed_ms": elapsed_ms, "threads": threads },
    })
}

fn checks_csv(checks: &[BoundCheck]) -> String {
    let mut out = String::from("name,lhs,relation,rhs,pass,hard\n");
    for c in checks {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            c.name, c.lhs, c.relation, c.rhs, c.pass, c.hard
        ));
    }
    out
}

fn field_ctx(args: &FieldArgs) -> Usage<FieldCtx> {
    Ok(match &args.modulus {
        Some(text) => FieldCtx::new(args.m, parse_modulus(text).map_err(usage)?).map_err(usage)?,
        None => FieldCtx::with_default_modulus(args.m).map_err(usage)?,
    })
}

fn field_json(ctx: &FieldCtx) -> Value {
    json!({ "m": ctx.m(), "modulus": format_modulus(ctx.modulus()) })
}

/// Inline JSON when the text starts with '{', otherwise a file path.
fn read_json_arg(text: &str) -> Usage<String> {
    if text.trim_start().starts_with('{') {
        Ok(text.to_string())
    } else {
        std::fs::read_to_string(text).map_err(|e| usage(format!("cannot read {text}: {e}")))
    }
}

fn corpus(ctx: &FieldCtx, args: &CorpusArgs) -> Usage<Vec<TracePoly>> {
    match &args.g {
        Some(text) => {
            let g = TracePoly::from_json(ctx, &read_json_arg(text)?).map_err(usage)?;
            g.validate(ctx).map_err(usage)?;
            Ok(vec![g])
        }
        None => {
            if args.count == 0 {
                return Err(usage("--count must be at least 1"));
            }
            Ok(trace_poly_corpus(ctx, args.s, args.count, args.seed, false))
        }
    }
}

fn corpus_json(args: &CorpusArgs) -> Value {
    match &args.g {
        Some(_) => json!({ "source": "explicit" }),
        None => {
            json!({ "source": "generated", "seed": args.seed, "count": args.count, "s": args.s })
        }
    }
}

fn parse_checks(list: Option<&str>, default: &[Check]) -> Usage<BTreeSet<Check>> {
    match list {
        None => Ok(default.iter().copied().collect()),
        Some(text) => text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Check::parse(s).ok_or_else(|| usage(format!("unknown check {s:?}"))))
            .collect(),
    }
}

fn require_odd_for(ctx: &FieldCtx, checks: &BTreeSet<Check>) -> Usage<()> {
    if ctx.is_odd_degree() {
        return Ok(());
    }
    for c in [Check::Predictor, Check::Auxcurve] {
        if checks.contains(&c) {
            return Err(usage(format!(
                "check {} requires odd m, got m = {}",
                c.name(),
                ctx.m()
            )));
        }
    }
    Ok(())
}

fn require_slow_for(ctx: &FieldCtx, checks: &BTreeSet<Check>, slow: bool) -> Usage<()> {
    if slow || ctx.m() < SLOW_DEGREE {
        return Ok(());
    }
    for c in [Check::Autocorr, Check::Predictor, Check::Auxcurve] {
        if checks.contains(&c) {
            return Err(usage(format!(
                "check {} at m = {} needs --slow",
                c.name(),
                ctx.m()
            )));
        }
    }
    Ok(())
}

fn equality(name: &str, lhs: u128, rhs: u128) -> BoundCheck {
    BoundCheck::new(name, lhs, "==", rhs, lhs == rhs, true)
}

/// Per-G analysis shared by `analyze` and `scan`.
fn analyze_one(
    ctx: &FieldCtx,
    g: &TracePoly,
    checks: &BTreeSet<Check>,
) -> Usage<(Value, Vec<BoundCheck>)> {
    let odd = ctx.is_odd_degree();
    let q = ctx.q();
    let mut out = serde_json::Map::new();
    let mut list = Vec::new();
    out.insert("g".into(), g.to_json_value());

    let table = truth_table(ctx, g);
    let spectrum = fwht(&table);
    let summary = spectrum.summary(g.binary_degree());
    let sigma_spec = spectrum.l4_fourth();
    if checks.contains(&Check::Spectrum) || checks.contains(&Check::Bounds) {
        out.insert("spectrum".into(), serde_json::to_value(&summary)?);
        out.insert(
            "divisibility".into(),
            serde_json::to_value(spectrum.divisibility_check(g.binary_degree()))?,
        );
        list.push(BoundCheck::new(
            "parseval",
            spectrum.sum_squares(),
            "==",
            (q as u128).pow(2),
            summary.parseval_ok,
            true,
        ));
    }

    if checks.contains(&Check::Autocorr) {
        let xt = x_alpha_all_from_table(&table);
        let sigma_auto = xt.sigma4();
        let mut a = json!({
            "sigma4_spectrum": sigma_spec,
            "sigma4_autocorr": sigma_auto.to_string(),
            "histogram": xt
                .histogram()
                .into_iter()
                .map(|(k, v)| (k.to_string(), Value::from(v)))
                .collect::<serde_json::Map<_, _>>(),
        });
        list.push(equality(
            "sigma4_spectrum_eq_autocorr",
            sigma_spec as u128,
            sigma_auto,
        ));
        if odd {
            let outside = xt
                .entries()
                .filter(|&(_, x)| XClass::from_value(x, q).is_none())
                .count() as u128;
            list.push(equality("x_alpha_outside_{0,2q,8q}", outside, 0));
            if let Ok(d) = sigma_decomposition(&xt) {
                a["decomposition"] = serde_json::to_value(d)?;
                list.push(BoundCheck::new(
                    "sigma4_eq_3q2+8q(N-q/8)+2q(N0-q/2)",
                    sigma_spec as u128,
                    "==",
                    d.sigma4_centred(q) as u128,
                    sigma_spec as i128 == d.sigma4_centred(q),
                    true,
                ));
            }
        }
        out.insert("autocorr".into(), a);
    }

    if checks.contains(&Check::Predictor) {
        let all = classify_all(ctx, g)?;
        let report = count_from_classifications(ctx, g, &all);
        out.insert(
            "shift_classes".into(),
            json!({
                "n0": report.n0,
                "n": report.n,
                "z": report.z,
                "lambda_zero_count": report.lambda_zero_count,
            }),
        );
        if checks.contains(&Check::Bounds) {
            list.extend(report.checks);
        }
        let predicted = (q as u128).pow(2)
            + all
                .iter()
                .map(|c| c.predicted.value(q) as u128)
                .sum::<u128>();
        list.push(equality(
            "sigma4_spectrum_eq_predicted",
            sigma_spec as u128,
            predicted,
        ));
    }

    if checks.contains(&Check::Bounds) {
        let mut b = vec![
            check_sigma4_deviation(ctx, g.s(), sigma_spec),
            check_linf_upper(ctx, summary.linf),
            check_divisibility(ctx, g.binary_degree(), summary.linf),
        ];
        if odd {
            b.extend(check_linf_lower(ctx, g.s(), summary.linf));
        } else {
            // The amplitude bounds are stated for odd m.
            for c in &mut b {
                c.hard = false;
            }
        }
        list.extend(b);
    }

    if checks.contains(&Check::Auxcurve) {
        let aux = auxcurve::analyze(ctx, g)?;
        list.extend(aux.checks.iter().cloned());
        out.insert("auxcurve".into(), aux_json(&aux));
    }

    if checks.contains(&Check::Genus2) {
        // X_alpha = (#C_alpha - q - 1)^2 for the reduced curve of each shift.
        let xt = x_alpha_all_from_table(&table);
        let outside = ctx
            .nonzero_elements()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&alpha| {
                let curve = reduce_difference(ctx, g, alpha)?;
                let data = genus2::classify(ctx, &curve)?;
                let x = xt.get(alpha) as i128;
                let hit = data
                    .predicted_counts
                    .iter()
                    .any(|&c| (c as i128 - q as i128 - 1).pow(2) == x);
                Ok(!hit as u128)
            })
            .collect::<crate::error::Result<Vec<u128>>>()?
            .into_iter()
            .sum();
        list.push(equality("x_alpha_outside_curve_predictions", outside, 0));
    }
    Ok((Value::Object(out), list))
}

fn aux_json(aux: &auxcurve::AuxCounts) -> Value {
    json!({
        "n1": aux.n1,
        "n2": aux.n2,
        "n3": aux.n3,
        "ground": aux.ground,
        "count_total": aux.count_total,
        "s7": aux.s7,
        "both_one": aux.both_one,
        "n_from_lemma": aux.n_from_lemma,
        "bounds_skipped": aux.bounds_skipped,
    })
}

fn cmd_analyze(args: &AnalyzeArgs) -> Usage<Outcome> {
    let ctx = field_ctx(&args.field)?;
    let default: &[Check] = if ctx.is_odd_degree() {
        &[
            Check::Spectrum,
            Check::Autocorr,
            Check::Predictor,
            Check::Bounds,
        ]
    } else {
        &[Check::Spectrum, Check::Autocorr, Check::Bounds]
    };
    let checks = parse_checks(args.corpus.checks.as_deref(), default)?;
    require_odd_for(&ctx, &checks)?;
    require_slow_for(&ctx, &checks, args.output.slow)?;
    let gs = corpus(&ctx, &args.corpus)?;
    let mut entries = Vec::new();
    let mut all_checks = Vec::new();
    for (i, g) in gs.iter().enumerate() {
        let (value, checks) = analyze_one(&ctx, g, &checks)?;
        entries.push(value);
        all_checks.extend(tag(i, gs.len(), checks));
    }
    Ok(Outcome {
        command: "analyze",
        result: json!({
            "field": field_json(&ctx),
            "corpus": corpus_json(&args.corpus),
            "checks_run": checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "entries": entries,
        }),
        csv: checks_csv(&all_checks),
        checks: all_checks,
    })
}

/// Prefixes check names with the corpus index when there is more than one G.
fn tag(i: usize, n: usize, checks: Vec<BoundCheck>) -> Vec<BoundCheck> {
    if n == 1 {
        return checks;
    }
    checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("g{i}:{}", c.name);
            c
        })
        .collect()
}

fn cmd_scan(args: &ScanArgs) -> Usage<Outcome> {
    let ctx = field_ctx(&args.field)?;
    let checks = parse_checks(
        args.corpus.checks.as_deref(),
        &[Check::Spectrum, Check::Bounds],
    )?;
    require_odd_for(&ctx, &checks)?;
    require_slow_for(&ctx, &checks, args.output.slow)?;
    let gs = corpus(&ctx, &args.corpus)?;
    let mut rows = Vec::new();
    let mut csv = String::from("index,a7,s,linf,nl,sigma4,hard_failures\n");
    let mut failures = Vec::new();
    let (mut min_linf, mut max_linf) = (u64::MAX, 0u64);
    for (i, g) in gs.iter().enumerate() {
        let (value, list) = analyze_one(&ctx, g, &checks)?;
        let summary = fwht(&truth_table(&ctx, g)).summary(g.binary_degree());
        min_linf = min_linf.min(summary.linf);
        max_linf = max_linf.max(summary.linf);
        let failed: Vec<BoundCheck> = list.into_iter().filter(BoundCheck::failed_hard).collect();
        csv.push_str(&format!(
            "{i},{},{},{},{},{},{}\n",
            g.a7(),
            g.s(),
            summary.linf,
            summary.nl,
            summary.sigma4,
            failed.len()
        ));
        rows.push(json!({ "index": i, "entry": value, "hard_failures": failed.len() }));
        failures.extend(tag(i, gs.len(), failed));
    }
    let q = ctx.q();
    Ok(Outcome {
        command: "scan",
        result: json!({
            "field": field_json(&ctx),
            "corpus": corpus_json(&args.corpus),
            "checks_run": checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "rows": rows,
            "aggregate": {
                "count": gs.len(),
                "min_linf": min_linf,
                "max_linf": max_linf,
                "min_nl": q / 2 - max_linf / 2,
                "max_nl": q / 2 - min_linf / 2,
                "hard_failures": failures.len(),
            },
        }),
        csv,
        checks: failures,
    })
}

fn cmd_verify(args: &VerifyArgs) -> Usage<Outcome> {
    let ctx = field_ctx(&args.field)?;
    if !ctx.is_odd_degree() {
        return Err(usage(format!("verify requires odd m, got m = {}", ctx.m())));
    }
    let checks = parse_checks(
        args.corpus.checks.as_deref(),
        &[
            Check::Autocorr,
            Check::Predictor,
            Check::Bounds,
            Check::Auxcurve,
        ],
    )?;
    require_slow_for(&ctx, &checks, args.output.slow)?;
    let gs = corpus(&ctx, &args.corpus)?;
    let q = ctx.q();
    let mut entries = Vec::new();
    let mut all_checks = Vec::new();
    let mut csv = String::from("g,alpha,predicted,measured\n");
    for (i, g) in gs.iter().enumerate() {
        let table = truth_table(&ctx, g);
        let xt = x_alpha_all_from_table(&table);
        let mut classes = classify_all(&ctx, g)?;
        if args.selftest_negative && i == 0 {
            let c = &mut classes[0];
            c.predicted = match c.predicted {
                XClass::Zero => XClass::TwoQ,
                _ => XClass::Zero,
            };
        }
        let mismatches: Vec<Value> = classes
            .iter()
            .filter(|c| c.predicted.value(q) != xt.get(c.alpha))
            .map(|c| {
                json!({
                    "alpha": c.alpha,
                    "predicted": c.predicted.value(q),
                    "measured": xt.get(c.alpha),
                })
            })
            .collect();
        for m in &mismatches {
            csv.push_str(&format!(
                "{i},{},{},{}\n",
                m["alpha"].as_str().unwrap_or(""),
                m["predicted"],
                m["measured"]
            ));
        }
        let mut list = vec![equality(
            "predictor_mismatches",
            mismatches.len() as u128,
            0,
        )];
        let counts = count_from_classifications(&ctx, g, &classes);
        let mut entry = json!({
            "g": g.to_json_value(),
            "alphas": q - 1,
            "mismatch_count": mismatches.len(),
            "mismatches": mismatches.iter().take(20).collect::<Vec<_>>(),
            "shift_classes": { "n0": counts.n0, "n": counts.n, "z": counts.z },
        });
        if checks.contains(&Check::Bounds) {
            list.extend(counts.checks.iter().cloned());
        }
        if checks.contains(&Check::Autocorr) {
            let sigma_spec = fwht(&table).l4_fourth();
            list.push(equality(
                "sigma4_spectrum_eq_autocorr",
                sigma_spec as u128,
                xt.sigma4(),
            ));
        }
        if checks.contains(&Check::Auxcurve) {
            let aux = auxcurve::analyze(&ctx, g)?;
            list.extend(aux.checks.iter().cloned());
            list.push(equality(
                "n_from_lemma_eq_predicted_n",
                aux.n_from_lemma as u128,
                counts.n as u128,
            ));
            entry["auxcurve"] = aux_json(&aux);
        }
        entries.push(entry);
        all_checks.extend(tag(i, gs.len(), list));
    }
    Ok(Outcome {
        command: "verify",
        result: json!({
            "field": field_json(&ctx),
            "corpus": corpus_json(&args.corpus),
            "checks_run": checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "selftest_negative": args.selftest_negative,
            "entries": entries,
        }),
        csv,
        checks: all_checks,
    })
}

fn cmd_curve(args: &CurveArgs) -> Usage<Outcome> {
    let ctx = field_ctx(&args.field)?;
    let curve = QuinticCurve::from_json(&ctx, &read_json_arg(&args.curve)?).map_err(usage)?;
    if curve.a.is_zero() {
        return Err(usage("curve coefficient a must be nonzero"));
    }
    let data = genus2::classify(&ctx, &curve)?;
    let count = genus2::count_points(&ctx, &curve);
    let mut checks = vec![
        BoundCheck::new(
            "count_in_predicted_set",
            count as u128,
            "in",
            data.predicted_counts.len() as u128,
            data.predicts(count),
            true,
        ),
        equality(
            "w_mod_2_eq_m_mod_2",
            (data.w % 2) as u128,
            (ctx.m() % 2) as u128,
        ),
    ];
    let mut result = json!({
        "field": field_json(&ctx),
        "curve": curve.to_json_value(),
        "w": data.w,
        "radical_basis": data.w_basis,
        "v_equals_w": data.v_equals_w,
        "predicted_counts": data.predicted_counts,
        "count": count,
        "member": data.predicts(count),
    });
    if ctx.is_odd_degree() {
        if let Some((normalized, mu)) = genus2::normalize_equal_coefficients(&ctx, &curve)? {
            if let Some(&z) = genus2::p_roots(&ctx, &normalized)?.first() {
                let mn = genus2::maisner_nart_w(&ctx, &normalized, z)?;
                checks.push(equality(
                    "trace_criterion_w_eq_radical_w",
                    mn.w as u128,
                    data.w as u128,
                ));
                result["normalization"] = json!({ "mu": mu, "root": z, "ell": mn.ell, "w": mn.w });
            }
        }
    }
    Ok(Outcome {
        command: "curve",
        result,
        csv: checks_csv(&checks),
        checks,
    })
}
