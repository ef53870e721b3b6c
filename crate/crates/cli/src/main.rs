//! `noncrossing`: command-line front end for exact counting, the partition
//! to braid duality, verification suites and the ρ₃ routes.
//!
//! Exit status is 0 on success, 1 on usage or input errors and 2 when a
//! verification or route comparison fails. Reports go to standard output as
//! JSON; errors go to standard error as JSON with a reason code.

mod render;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use noncrossing::duality::{theta_inverse_direct, theta_restricted, theta_restricted_inverse};
use noncrossing::enumerate::{self, bell_numbers, count_table, BRUTE_FORCE_LIMIT};
use noncrossing::verify::{run_suite, SuiteParams, SUITES};
use noncrossing::walks::{self, asymptotics};
use noncrossing::{theta_direct, theta_tableau, ArcDiagram, BraidDiagram, Class, CountTable, PartitionDiagram, Route};

/// Largest n for the kernel constant-term route.
const KERNEL_CAP: usize = 80;
/// Largest n for the walk dynamic programme.
const WALK_CAP: usize = 400;
/// Largest n for which `asympt` computes the exact value.
const EXACT_CAP: usize = 5000;
/// Brute-force cap used when `rho3 --route all` compares routes.
const BRUTE_CAP_ALL: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "noncrossing",
    version,
    about = "Exact counting for k-noncrossing partitions and braids"
)]
struct Cli {
    /// Worker threads for exhaustive enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count a diagram class for n = 0..=N.
    Count(CountArgs),
    /// List every diagram of a class over [n].
    Enum(EnumArgs),
    /// Apply the duality to a diagram.
    Map(MapArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Evaluate rho3 by one or all routes.
    Rho3(Rho3Args),
    /// Asymptotic estimate of rho3(n).
    Asympt(AsymptArgs),
    /// Draw a diagram as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
    Text,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_parser = parse_class)]
    class: Class,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long = "n-max", visible_alias = "n")]
    n_max: usize,
    #[arg(long, default_value = "brute", value_parser = parse_route)]
    route: Route,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct EnumArgs {
    #[arg(long, value_parser = parse_class)]
    class: Class,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapRoute {
    Direct,
    Tableau,
}

#[derive(Args, Debug)]
struct MapArgs {
    /// Diagram in text form, e.g. "n=2; arcs=(1,2)".
    #[arg(long = "in")]
    input: String,
    /// Map a braid back to a partition.
    #[arg(long)]
    inverse: bool,
    /// Use the restriction to 2-regular partitions; needs --k.
    #[arg(long, requires = "k")]
    restricted: bool,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value_t = MapRoute::Direct)]
    route: MapRoute,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long = "n-max", visible_alias = "n", default_value_t = 7)]
    n_max: usize,
    /// Restrict to one k; both 3 and 4 by default.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args, Debug)]
struct Rho3Args {
    #[arg(long = "n-max", visible_alias = "n")]
    n_max: usize,
    /// brute, kernel, closed, recurrence, walk or all.
    #[arg(long, default_value = "all")]
    route: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct AsymptArgs {
    #[arg(long)]
    n: usize,
    /// Leading constant; the quoted value by default.
    #[arg(long)]
    constant: Option<String>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[arg(long = "in")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
}

fn parse_class(s: &str) -> Result<Class, String> {
    s.parse().map_err(|e: noncrossing::Error| e.to_string())
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: noncrossing::Error| e.to_string())
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    agreement: Option<bool>,
    elapsed_ms: u128,
    version: &'static str,
}

/// What a command produced.
enum Output {
    Report { results: Value, agreement: Option<bool> },
    Raw(String),
}

enum Failure {
    Usage(String),
    Engine(noncrossing::Error),
}

impl From<noncrossing::Error> for Failure {
    fn from(e: noncrossing::Error) -> Self {
        Failure::Engine(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check_format(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(
            format!("--format {format:?} is not supported here; use one of {allowed:?}").to_lowercase(),
        ))
    }
}

fn decimal_map(values: impl IntoIterator<Item = (usize, BigUint)>) -> BTreeMap<String, String> {
    // keys sort numerically once padded, but JSON consumers expect plain keys
    values
        .into_iter()
        .map(|(n, v)| (n.to_string(), v.to_string()))
        .collect()
}

fn table_json(t: &CountTable) -> Value {
    serde_json::to_value(t).expect("count tables serialize")
}

fn csv_rows(rows: impl IntoIterator<Item = [String; 5]>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["class", "k", "route", "n", "count"])
        .expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}

fn table_csv(t: &CountTable) -> String {
    csv_rows(t.entries.iter().map(|(n, v)| {
        [
            t.class.name().to_string(),
            t.k.to_string(),
            t.route.name().to_string(),
            n.to_string(),
            v.to_string(),
        ]
    }))
}

fn count(a: &CountArgs) -> Result<Output, Failure> {
    check_format(a.format, &[Format::Json, Format::Csv])?;
    let table = count_table(a.class, a.k, a.n_max, a.route)?;
    Ok(match a.format {
        Format::Csv => Output::Raw(table_csv(&table)),
        _ => Output::Report {
            results: table_json(&table),
            agreement: None,
        },
    })
}

fn enumerate_class(a: &EnumArgs) -> Result<Output, Failure> {
    check_format(a.format, &[Format::Json, Format::Text])?;
    let bell = &bell_numbers(a.n)[a.n];
    if *bell > BigUint::from(BRUTE_FORCE_LIMIT) {
        return Err(
            noncrossing::Error::RangeGuard(format!("Bell({}) = {bell} exceeds {BRUTE_FORCE_LIMIT}", a.n)).into(),
        );
    }
    let (n, k) = (a.n, a.k);
    let lines: Vec<String> = match a.class {
        Class::Partitions => enumerate::gen_partitions_k(n, k).map(|d| d.to_string()).collect(),
        Class::TwoRegular => enumerate::gen_2regular_k(n, k).map(|d| d.to_string()).collect(),
        Class::Braids => enumerate::gen_braids(n, k).map(|d| d.to_string()).collect(),
        Class::BraidsNoIsolated => enumerate::gen_braids_no_isolated(n, k).map(|d| d.to_string()).collect(),
    };
    Ok(match a.format {
        Format::Text => Output::Raw(lines.iter().map(|l| format!("{l}\n")).collect()),
        _ => Output::Report {
            results: json!({ "class": a.class.name(), "k": k, "n": n, "count": lines.len(), "diagrams": lines }),
            agreement: None,
        },
    })
}

fn map(a: &MapArgs) -> Result<Output, Failure> {
    check_format(a.format, &[Format::Json, Format::Text])?;
    if a.inverse && a.route == MapRoute::Tableau {
        return Err(usage("--route tableau computes the forward map only"));
    }
    let image = if a.inverse {
        let b: BraidDiagram = a.input.parse()?;
        match (a.restricted, a.k) {
            (true, Some(k)) => theta_restricted_inverse(&b, k)?.to_string(),
            _ => theta_inverse_direct(&b).to_string(),
        }
    } else {
        let p: PartitionDiagram = a.input.parse()?;
        match (a.restricted, a.k, a.route) {
            (true, Some(k), _) => theta_restricted(&p, k)?.to_string(),
            (_, _, MapRoute::Tableau) => theta_tableau(&p)?.to_string(),
            _ => theta_direct(&p)?.to_string(),
        }
    };
    Ok(match a.format {
        Format::Text => Output::Raw(format!("{image}\n")),
        _ => Output::Report {
            results: json!({ "input": a.input, "inverse": a.inverse, "restricted": a.restricted, "image": image }),
            agreement: None,
        },
    })
}

fn verify(a: &VerifyArgs) -> Result<Output, Failure> {
    let names: Vec<&str> = if a.suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&a.suite.as_str()) {
        vec![a.suite.as_str()]
    } else {
        return Err(usage(format!(
            "unknown suite {:?}; known: all, {}",
            a.suite,
            SUITES.join(", ")
        )));
    };
    if let Some(k) = a.k.filter(|&k| k < 2) {
        return Err(usage(format!("--k {k} must be at least 2")));
    }
    let params = SuiteParams {
        n_max: a.n_max,
        ks: a.k.map_or(vec![3, 4], |k| vec![k]),
    };
    let reports = names
        .iter()
        .map(|n| run_suite(n, &params))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = reports.iter().all(|r| r.passed);
    Ok(Output::Report {
        results: serde_json::to_value(&reports).expect("reports serialize"),
        agreement: Some(passed),
    })
}

fn rho3(a: &Rho3Args) -> Result<Output, Failure> {
    check_format(a.format, &[Format::Json, Format::Csv])?;
    let routes: Vec<Route> = if a.route == "all" {
        Route::ALL.to_vec()
    } else {
        vec![parse_route(&a.route).map_err(Failure::Usage)?]
    };
    let all = routes.len() > 1;
    let mut tables = Vec::new();
    for route in routes {
        let cap = match route {
            Route::Brute if all => BRUTE_CAP_ALL,
            Route::KernelCt => KERNEL_CAP,
            Route::WalkDp => WALK_CAP,
            _ => usize::MAX,
        };
        if !all && a.n_max > cap {
            return Err(
                noncrossing::Error::RangeGuard(format!("route {} is limited to n <= {cap}", route.name())).into(),
            );
        }
        tables.push(count_table(Class::BraidsNoIsolated, 3, a.n_max.min(cap), route)?);
    }
    let agreement = all.then(|| {
        (0..=a.n_max).all(|n| {
            let mut values = tables.iter().filter_map(|t| t.get(n));
            let first = values.next();
            values.all(|v| Some(v) == first)
        })
    });
    if a.format == Format::Csv {
        let rows = tables.iter().flat_map(|t| {
            t.entries.iter().map(|(n, v)| {
                [
                    "braids-noiso".to_string(),
                    "3".to_string(),
                    t.route.name().to_string(),
                    n.to_string(),
                    v.to_string(),
                ]
            })
        });
        return Ok(Output::Raw(csv_rows(rows.collect::<Vec<_>>())));
    }
    let routes: BTreeMap<&str, BTreeMap<String, String>> = tables
        .iter()
        .map(|t| (t.route.name(), decimal_map(t.entries.clone())))
        .collect();
    Ok(Output::Report {
        results: json!({ "n_max": a.n_max, "routes": routes }),
        agreement,
    })
}

fn asympt(a: &AsymptArgs) -> Result<Output, Failure> {
    let mut params = asymptotics::characteristic_analysis();
    if let Some(k) = &a.constant {
        params = params.with_k(asymptotics::parse_decimal(k).map_err(|e| usage(e.to_string()))?);
    }
    let estimate = asymptotics::asymptotic_estimate(a.n, &params)?;
    let mut results = json!({
        "n": a.n,
        "params": params.report(),
        "estimate": asymptotics::to_significant(&estimate, 50),
    });
    if a.n <= EXACT_CAP {
        let exact = walks::rho3_recurrence_from_closed_form(a.n)?
            .pop()
            .expect("nonempty table");
        let err = asymptotics::relative_error(a.n, &params, &exact)?;
        results["exact"] = json!(exact.to_string());
        results["relative_error"] = json!(asymptotics::to_significant(&err, 50));
        if a.n >= 50 {
            let fitted = asymptotics::fit_k(a.n, &params, &exact)?;
            results["fitted_constant"] = json!(asymptotics::to_significant(&fitted, 50));
        }
    }
    Ok(Output::Report {
        results,
        agreement: None,
    })
}

fn render_cmd(a: &RenderArgs) -> Result<Output, Failure> {
    check_format(a.format, &[Format::Svg])?;
    let d: ArcDiagram = a.input.parse()?;
    Ok(Output::Raw(render::svg(&d)))
}

fn emit_error(code: &str, message: &str) {
    let err = json!({ "error": { "code": code, "message": message } });
    eprintln!("{err}");
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            emit_error("usage", e.to_string().trim());
            return ExitCode::from(1);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            emit_error("usage", "--jobs must be at least 1");
            return ExitCode::from(1);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Count(a) => count(a),
        Command::Enum(a) => enumerate_class(a),
        Command::Map(a) => map(a),
        Command::Verify(a) => verify(a),
        Command::Rho3(a) => rho3(a),
        Command::Asympt(a) => asympt(a),
        Command::Render(a) => render_cmd(a),
    };
    let mut stdout = std::io::stdout().lock();
    match outcome {
        Ok(Output::Raw(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Output::Report { results, agreement }) => {
            let report = RunReport {
                command: argv[1..].join(" "),
                results,
                agreement,
                elapsed_ms: start.elapsed().as_millis(),
                version: env!("CARGO_PKG_VERSION"),
            };
            let _ = writeln!(
                stdout,
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            if agreement == Some(false) {
                emit_error(
                    "verification_failed",
                    "a check or route comparison failed; see the report",
                );
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            emit_error("usage", &msg);
            ExitCode::from(1)
        }
        Err(Failure::Engine(e)) => {
            emit_error(e.code(), &e.to_string());
            ExitCode::from(1)
        }
    }
}
