//! The `p2q2` command line: `list`, `verify`, `table` and `build`.
//!
//! Exit codes: 0 when every verdict is `Match` or `Skipped`, 1 when any
//! verdict is a mismatch or an incomplete construction, 2 on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::autom::{predicted, verify, AutReport, VerifyOptions, DEFAULT_BUDGET};
use crate::catalog::{
    admissible, build, enumerate_admissible, n_exp_range, type_info, Admissibility, GroupSpec, TypeParams, TYPE_COUNT,
};
use crate::group::{abelian_invariants, center, derived_subgroup, order_histogram};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Md,
}

/// Parse a budget such as `100000000`, `1e8` or `2.5e6`.
pub fn parse_budget(s: &str) -> Result<u64, String> {
    let s = s.trim().replace('_', "");
    let bad = || format!("invalid budget {s:?}; use an integer such as 100000000 or 1e8");
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m.to_string(), e.parse::<u32>().map_err(|_| bad())?),
        None => (s.clone(), 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((&mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let frac_len = frac_part.len() as u32;
    if frac_len > exp {
        return Err(bad());
    }
    let digits: u64 = format!("{int_part}{frac_part}").parse().map_err(|_| bad())?;
    10u64.checked_pow(exp - frac_len).and_then(|scale| digits.checked_mul(scale)).filter(|&b| b > 0).ok_or_else(bad)
}

#[derive(Debug, Parser)]
#[command(name = "p2q2", version, about = "Groups of order p^2 q^2 and their automorphism groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Node budget of the exhaustive search.
    #[arg(long, env = "P2Q2_BUDGET", value_parser = parse_budget, global = true)]
    pub budget: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the 36 types with relations and conditions.
    List,
    /// Compare predicted, exhaustive and constructed automorphism groups.
    Verify {
        /// Specs such as t19:p=5,q=2 or t27:p=11,q=5,n=2.
        specs: Vec<String>,
        /// Verify every admissible spec within --pmax/--qmax.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 7)]
        pmax: u64,
        #[arg(long, default_value_t = 3)]
        qmax: u64,
        /// Exponent n for types 27 and 28.
        #[arg(long)]
        n: Option<u64>,
        /// Skip the explicit Q ⋊ R construction.
        #[arg(long)]
        no_construct: bool,
        #[arg(long, hide = true)]
        test_corrupt_predicted: bool,
    },
    /// Render table 1 (pq = 6) or table 2 (pq ≠ 6) with orders substituted.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        kind: u8,
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Build one group and print its presentation and invariants.
    Build {
        spec: String,
        #[arg(long)]
        n: Option<u64>,
    },
}

/// Resolved settings of one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub budget: u64,
    pub threads: Option<usize>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_spec(s: &str, n: Option<u64>) -> Result<GroupSpec, CliError> {
    let mut spec = GroupSpec::parse(s).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(n) = n {
        if spec.params.n_exp.is_some() && !s.contains("n=") {
            spec = GroupSpec::with_n_exp(spec.type_id as u32, spec.p, spec.q, n)
                .map_err(|e| CliError::Usage(e.to_string()))?;
        }
    }
    Ok(spec)
}

fn emit(config: &RunConfig, text: &str) -> Result<(), CliError> {
    match &config.out {
        Some(path) => File::create(path)?.write_all(text.as_bytes())?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(io::Error::other(e)))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n|{}|\n", header.join(" | "), vec!["---"; header.len()].join("|"));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
        s.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    s
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ListRow {
    type_id: u8,
    structure: &'static str,
    relations: &'static str,
    condition: &'static str,
}

fn cmd_list(config: &RunConfig) -> Result<i32, CliError> {
    let rows: Vec<ListRow> = (1..=TYPE_COUNT as u32)
        .map(|t| {
            let i = type_info(t).expect("known type");
            ListRow { type_id: i.type_id, structure: i.structure, relations: i.relations, condition: i.condition }
        })
        .collect();
    let text = match config.format {
        Format::Json => json(&rows),
        Format::Csv => to_csv(&rows)?,
        Format::Md => md_table(
            &["type", "group", "relations", "condition"],
            &rows
                .iter()
                .map(|r| vec![r.type_id.to_string(), r.structure.into(), r.relations.into(), r.condition.into()])
                .collect::<Vec<_>>(),
        ),
    };
    emit(config, &text)?;
    Ok(EXIT_OK)
}

/// Flat per-report row for CSV output.
#[derive(Serialize)]
struct ReportRow {
    spec: String,
    type_id: u8,
    p: u64,
    q: u64,
    group_order: u64,
    predicted_expr: String,
    predicted_order: u64,
    brute_order: Option<u64>,
    brute_ms: Option<u64>,
    q_order: Option<u64>,
    r_order: Option<u64>,
    qr_order: Option<u64>,
    main_theorem_ok: Option<bool>,
    verdict: String,
    verdict_reason: String,
}

fn report_row(r: &AutReport) -> ReportRow {
    let c = r.constructed.as_ref();
    ReportRow {
        spec: r.spec.to_string(),
        type_id: r.spec.type_id,
        p: r.spec.p,
        q: r.spec.q,
        group_order: r.group_order,
        predicted_expr: r.predicted.expr.clone(),
        predicted_order: r.predicted.order,
        brute_order: r.brute.as_ref().map(|b| b.order),
        brute_ms: r.brute.as_ref().map(|b| b.elapsed_ms),
        q_order: c.map(|c| c.q_order),
        r_order: c.map(|c| c.r_order),
        qr_order: c.map(|c| c.qr_order),
        main_theorem_ok: c.map(|c| c.main_theorem_ok),
        verdict: format!("{:?}", r.verdict),
        verdict_reason: r.verdict_reason.clone().unwrap_or_default(),
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn render_reports(reports: &[AutReport], format: Format) -> String {
    match format {
        Format::Json => json(reports),
        Format::Csv => {
            let rows: Vec<ReportRow> = reports.iter().map(report_row).collect();
            to_csv(&rows).expect("in-memory csv")
        }
        Format::Md => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(report_row)
                .map(|r| {
                    vec![
                        r.spec,
                        r.group_order.to_string(),
                        r.predicted_expr,
                        r.predicted_order.to_string(),
                        opt(r.brute_order),
                        opt(r.qr_order),
                        if r.verdict_reason.is_empty() {
                            r.verdict
                        } else {
                            format!("{} ({})", r.verdict, r.verdict_reason)
                        },
                    ]
                })
                .collect();
            md_table(&["spec", "order", "Aut(G)", "predicted", "oracle", "QR", "verdict"], &rows)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    config: &RunConfig,
    specs: &[String],
    sweep: bool,
    pmax: u64,
    qmax: u64,
    n: Option<u64>,
    no_construct: bool,
    corrupt: bool,
) -> Result<i32, CliError> {
    let mut list = Vec::new();
    for s in specs {
        list.push(parse_spec(s, n)?);
    }
    if sweep {
        if pmax < 2 || qmax < 2 {
            return Err(CliError::Usage("--pmax and --qmax must be at least 2".into()));
        }
        for mut spec in enumerate_admissible(pmax, qmax) {
            if let Some(n) = n {
                if spec.params.n_exp.is_some() && n_exp_range(spec.type_id, spec.q).contains(&n) {
                    spec.params.n_exp = Some(n);
                }
            }
            list.push(spec);
        }
    }
    if list.is_empty() {
        return Err(CliError::Usage("verify needs at least one spec or --sweep".into()));
    }
    let reports: Vec<AutReport> = list
        .par_iter()
        .map(|spec| {
            let mut opts =
                VerifyOptions { budget: config.budget, construct: !no_construct, ..VerifyOptions::default() };
            if corrupt {
                let (_, order) = predicted(spec).expect("catalog spec");
                opts.predicted_order_override = Some(order as u64 + 1);
            }
            verify(spec, &opts)
        })
        .collect();
    emit(config, &render_reports(&reports, config.format))?;
    Ok(if reports.iter().all(|r| r.verdict.is_ok()) { EXIT_OK } else { EXIT_MISMATCH })
}

#[derive(Serialize)]
struct TableRow {
    type_id: u8,
    group: String,
    aut_structure: String,
    aut_order: Option<u64>,
    note: Option<String>,
}

fn cmd_table(config: &RunConfig, kind: u8, p: u64, q: u64) -> Result<i32, CliError> {
    let (range, (p, q)) = if kind == 1 { (1..=14u32, (3, 2)) } else { (15..=36u32, (p, q)) };
    let mut rows = Vec::new();
    for t in range {
        let info = type_info(t).expect("known type");
        let adm = admissible(t, p, q).map_err(|e| CliError::Usage(e.to_string()))?;
        let row = match adm {
            Admissibility::Admissible => {
                let spec = GroupSpec::new(t, p, q).map_err(|e| CliError::Usage(e.to_string()))?;
                let (expr, order) = predicted(&spec).expect("catalog spec");
                TableRow {
                    type_id: t as u8,
                    group: info.structure.into(),
                    aut_structure: expr.to_string(),
                    aut_order: Some(order as u64),
                    note: None,
                }
            }
            Admissibility::Inadmissible(reason) => TableRow {
                type_id: t as u8,
                group: info.structure.into(),
                aut_structure: "n/a".into(),
                aut_order: None,
                note: Some(format!("n/a ({reason})")),
            },
        };
        rows.push(row);
    }
    let text = match config.format {
        Format::Json => json(&rows),
        Format::Csv => to_csv(&rows)?,
        Format::Md => md_table(
            &["type", "G", "Aut(G)", "Aut order"],
            &rows
                .iter()
                .map(|r| {
                    vec![
                        r.type_id.to_string(),
                        r.group.clone(),
                        r.note.clone().unwrap_or_else(|| r.aut_structure.clone()),
                        opt(r.aut_order),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(config, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BuildSummary {
    spec: GroupSpec,
    params: TypeParams,
    presentation: String,
    order: usize,
    abelian: bool,
    center_order: usize,
    derived_order: usize,
    abelian_invariants: Vec<u64>,
    order_histogram: BTreeMap<u64, usize>,
}

fn cmd_build(config: &RunConfig, spec: &str, n: Option<u64>) -> Result<i32, CliError> {
    let spec = parse_spec(spec, n)?;
    let built = build(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let g = &built.group;
    let s = BuildSummary {
        params: spec.params.clone(),
        spec,
        presentation: g.presentation().to_string(),
        order: g.order(),
        abelian: g.is_abelian(),
        center_order: center(g).order(),
        derived_order: derived_subgroup(g).order(),
        abelian_invariants: abelian_invariants(g),
        order_histogram: order_histogram(g),
    };
    let text = match config.format {
        Format::Json => json(&s),
        Format::Csv => {
            let row = [(
                s.spec.to_string(),
                s.order,
                s.center_order,
                s.derived_order,
                format!("{:?}", s.abelian_invariants),
                s.presentation.clone(),
            )];
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["spec", "order", "center_order", "derived_order", "abelian_invariants", "presentation"])
                .map_err(|e| CliError::Io(io::Error::other(e)))?;
            for r in row {
                w.serialize(r).map_err(|e| CliError::Io(io::Error::other(e)))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Io(io::Error::other(e.to_string())))?)
                .expect("utf-8")
        }
        Format::Md => {
            let hist: Vec<String> = s.order_histogram.iter().map(|(o, c)| format!("{o}:{c}")).collect();
            md_table(
                &["field", "value"],
                &[
                    vec!["spec".into(), s.spec.to_string()],
                    vec!["presentation".into(), s.presentation.clone()],
                    vec!["order".into(), s.order.to_string()],
                    vec!["abelian".into(), s.abelian.to_string()],
                    vec!["center order".into(), s.center_order.to_string()],
                    vec!["derived order".into(), s.derived_order.to_string()],
                    vec!["abelian invariants".into(), format!("{:?}", s.abelian_invariants)],
                    vec!["order histogram".into(), hist.join(" ")],
                ],
            )
        }
    };
    emit(config, &text)?;
    Ok(EXIT_OK)
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    let config = RunConfig {
        format: cli.format,
        out: cli.out,
        budget: cli.budget.unwrap_or(DEFAULT_BUDGET),
        threads: cli.threads,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::List => cmd_list(&config),
        Command::Verify { specs, sweep, pmax, qmax, n, no_construct, test_corrupt_predicted } => {
            cmd_verify(&config, specs, *sweep, *pmax, *qmax, *n, *no_construct, *test_corrupt_predicted)
        }
        Command::Table { kind, p, q } => cmd_table(&config, *kind, *p, *q),
        Command::Build { spec, n } => cmd_build(&config, spec, *n),
    })
}

/// Run the CLI on `args` (including the program name) and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
