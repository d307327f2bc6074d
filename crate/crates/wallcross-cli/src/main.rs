//! `wallcross` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
//! arithmetic failure.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wallcross::blocks::{pvir, Curve};
use wallcross::cks::{u_series, Multigraph};
use wallcross::genfun::{fmot, fvir, g_series, ph_polynomial, Mode};
use wallcross::pairs::{chamber_of_sigma, critical_values, pair_dimension, pair_genfun_motivic, pair_motive};
use wallcross::report::{all_passed, Report};
use wallcross::ring::{parse_rational, LaurentPoly, QSeries, VAR_NAMES};
use wallcross::triples::{
    poles_dimension, poles_motive, triple_dimension, triple_is_smooth, triple_motive_chamber, Regime,
};
use wallcross::verify::{default_order, run_suite, Suite};
use wallcross::Error;

#[derive(Parser)]
#[command(name = "wallcross", version, about = "Exact motives of rank-2 Bradlow-Higgs moduli spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Motive of a moduli space as a polynomial in x, y.
    Motive(SpaceArgs),
    /// Virtual Poincare polynomial of a moduli space.
    Pvir(SpaceArgs),
    /// Generating function truncated at --order.
    Genfun(GenfunArgs),
    /// Runs a verification suite.
    Verify(VerifyArgs),
    /// CKS weight series of a graph.
    Cks(CksArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Triples,
    Pairs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Fmot,
    Fvir,
    G,
    Hmb,
    Pairs,
}

#[derive(Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(long)]
    genus: i64,
    #[arg(long, allow_hyphen_values = true)]
    degree: i64,
    /// Stability parameter, an integer, fraction or decimal.
    #[arg(long, conflicts_with = "chamber")]
    sigma: Option<String>,
    /// Chamber index, 0 being the chamber next to sigma = 0.
    #[arg(long)]
    chamber: Option<usize>,
    /// Pole order; selects the moduli space with poles.
    #[arg(long)]
    gamma: Option<i64>,
    /// Which family of moduli spaces.
    #[arg(long, value_enum, default_value = "triples")]
    space: Space,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GenfunArgs {
    #[arg(long, value_enum)]
    which: Which,
    #[arg(long)]
    genus: i64,
    /// Truncation order; defaults to WALLCROSS_ORDER or 10 * genus.
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    genus: i64,
    /// Truncation order; defaults to WALLCROSS_ORDER or 10 * genus.
    #[arg(long)]
    order: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CksArgs {
    /// `banana:k`, `rose:k` or inline JSON `{"vertices":n,"edges":[[u,v],...]}`.
    #[arg(long)]
    graph: String,
    /// Number of series coefficients.
    #[arg(long = "max-n")]
    max_n: usize,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    Usage(String),
    Internal(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NonExactDivision(_)
            | Error::BadDenominator(_)
            | Error::NonIntegral(_)
            | Error::NegativeCoefficient(_)
            | Error::TruncationNotZero(_)
            | Error::NegativeExponent(_)
            | Error::SeriesVarMismatch(_, _)
            | Error::Substitution(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Motive(a) => cmd_space(a, false),
        Command::Pvir(a) => cmd_space(a, true),
        Command::Genfun(a) => cmd_genfun(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Cks(a) => cmd_cks(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn resolve_order(flag: Option<usize>, curve: &Curve) -> CliResult<usize> {
    let order = match flag {
        Some(o) => o,
        None => match std::env::var("WALLCROSS_ORDER") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("WALLCROSS_ORDER must be a positive integer, got {v:?}")))?,
            Err(_) => default_order(curve),
        },
    };
    if order == 0 {
        return Err(Failure::Usage("order must be at least 1".into()));
    }
    Ok(order)
}

fn emit(output: &Output, text: String) -> CliResult<()> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn poly_csv(p: &LaurentPoly) -> String {
    let mut s = format!("{},coefficient\n", VAR_NAMES.join(","));
    for (e, c) in p.terms() {
        s.push_str(&format!("{},{},{},{},{}\n", e[0], e[1], e[2], e[3], c));
    }
    s
}

fn series_csv(series: &QSeries) -> String {
    let mut s = format!("{}_degree,t_poly\n", series.var().name());
    for (k, c) in series.coeffs().iter().enumerate() {
        s.push_str(&format!("{k},\"{c}\"\n"));
    }
    s
}

fn series_text(series: &QSeries) -> String {
    let var = series.var().name();
    series.coeffs().iter().enumerate().map(|(k, c)| format!("{var}^{k}: {c}\n")).collect()
}

/// Chamber index from `--sigma` or `--chamber`, defaulting to chamber 0.
fn resolve_chamber(args: &SpaceArgs) -> CliResult<usize> {
    match (&args.sigma, args.chamber) {
        (Some(s), _) => {
            let sigma = parse_rational(s)?;
            Ok(chamber_of_sigma(args.degree, &sigma)?)
        }
        (None, Some(k)) => {
            let walls = critical_values(args.degree).len();
            if k > walls {
                return Err(Failure::Usage(format!(
                    "degree {} has {walls} walls, so chambers run from 0 to {walls}",
                    args.degree
                )));
            }
            Ok(k)
        }
        (None, None) => Ok(0),
    }
}

fn cmd_space(args: SpaceArgs, virtual_poincare: bool) -> CliResult<()> {
    let curve = Curve::new(args.genus)?;
    let d = args.degree;
    let chamber = resolve_chamber(&args)?;
    let last = critical_values(d).len();
    let (motive, dim, smooth, space, regime) = match (args.space, args.gamma) {
        (Space::Pairs, Some(_)) => return Err(Failure::Usage("--gamma applies to triples only".into())),
        (Space::Pairs, None) => (pair_motive(&curve, d, chamber)?, pair_dimension(&curve, d), true, "pairs", None),
        (Space::Triples, None) => (
            triple_motive_chamber(&curve, d, chamber)?,
            triple_dimension(&curve, d),
            triple_is_smooth(&curve, d, chamber),
            "triples",
            None,
        ),
        (Space::Triples, Some(gamma)) => {
            let regime = if chamber == 0 {
                Regime::Eps
            } else if chamber == last {
                Regime::Infinity
            } else {
                return Err(Failure::Usage(
                    "with poles only chamber 0 and the chamber past the last wall are available".into(),
                ));
            };
            let smooth = matches!(regime, Regime::Eps);
            (poles_motive(&curve, d, gamma, regime)?, poles_dimension(&curve, d, gamma), smooth, "poles", Some(regime))
        }
    };
    let result = if virtual_poincare { pvir(&motive, dim)? } else { motive };
    let text = match args.output.format {
        Format::Json => {
            let mut meta = json!({
                "space": space,
                "genus": args.genus,
                "degree": d,
                "chamber": chamber,
                "dimension": dim,
                "smooth": smooth,
            });
            if let (Some(gamma), Some(regime)) = (args.gamma, regime) {
                meta["gamma"] = json!(gamma);
                meta["regime"] = json!(match regime {
                    Regime::Eps => "eps",
                    Regime::Infinity => "infinity",
                });
            }
            let key = if virtual_poincare { "pvir" } else { "motive" };
            pretty(&json!({ "meta": meta, key: result.to_json() }))
        }
        Format::Csv => poly_csv(&result),
        Format::Text => format!("{result}\n"),
    };
    emit(&args.output, text)
}

fn cmd_genfun(args: GenfunArgs) -> CliResult<()> {
    let curve = Curve::new(args.genus)?;
    let series = match args.which {
        Which::Fmot => fmot(&curve, resolve_order(args.order, &curve)?, Mode::Direct)?,
        Which::Fvir => fvir(&curve, resolve_order(args.order, &curve)?, Mode::Direct)?,
        Which::G => g_series(&curve, resolve_order(args.order, &curve)?)?,
        Which::Pairs => pair_genfun_motivic(&curve, resolve_order(args.order, &curve)?)?,
        Which::Hmb => {
            let ph = ph_polynomial(&curve)?;
            match args.order {
                Some(o) => ph.truncate(o),
                None => ph,
            }
        }
    };
    let text = match args.output.format {
        Format::Json => pretty(&series.to_json()),
        Format::Csv => series_csv(&series),
        Format::Text => series_text(&series),
    };
    emit(&args.output, text)
}

fn report_output(reports: &[Report], format: Format) -> String {
    match format {
        Format::Json => pretty(&json!({
            "passed": all_passed(reports),
            "checks": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("name,passed,detail\n");
            for r in reports {
                let detail = r.detail.clone().unwrap_or_default().replace('"', "\"\"");
                s.push_str(&format!("\"{}\",{},\"{detail}\"\n", r.name, r.passed));
            }
            s
        }
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    }
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    let suite: Suite = args.suite.parse()?;
    let curve = Curve::new(args.genus)?;
    let order = resolve_order(args.order, &curve)?;
    let reports = run_suite(suite, &curve, order)?;
    emit(&args.output, report_output(&reports, args.output.format))?;
    match reports.iter().find(|r| !r.passed) {
        None => Ok(()),
        Some(bad) => Err(Failure::Verification(bad.to_string())),
    }
}

fn cmd_cks(args: CksArgs) -> CliResult<()> {
    let graph: Multigraph = args.graph.parse()?;
    let series = u_series(&graph, args.max_n);
    let text = match args.output.format {
        Format::Json => pretty(&json!({ "graph": graph.to_json(), "series": series.to_json() })),
        Format::Csv => series_csv(&series),
        Format::Text => series_text(&series),
    };
    emit(&args.output, text)
}
