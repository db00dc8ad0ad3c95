//! `ci-invariants`: command-line front end.
//!
//! Exit codes: 0 success, 1 an internal check or scan assertion failed,
//! 2 usage or parse error.

mod records;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use ci_invariants::ci_topology::{
    chi22_closed_form, chi22_sum, expansion_identity_sides, parse_degrees, CIType,
};
use ci_invariants::classification::{
    homogeneous_parity_report, lemma_classify, scan_lemma_with, scan_theorem_with, theorem_verdict,
    ClassificationError, HomogeneousRoute, ScanOptions, ScanReport,
};
use ci_invariants::lines_fibers::{fiber_type, line_geometry, LinesError};
use ci_invariants::InvariantReport;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use records::{
    ClassifyRecord, FiberRecord, IdentitiesRecord, IdentityRow, InvariantsRecord, ScanRowRecord,
    ScanSummaryRecord,
};

const THREADS_ENV: &str = "CI_INVARIANTS_THREADS";

#[derive(Parser)]
#[command(
    name = "ci-invariants",
    version,
    about = "Topological invariants and convexity classification of complete intersections"
)]
struct Cli {
    /// Suppress the human-readable summary on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct TypeArgs {
    /// Ambient projective dimension n of P^n.
    #[arg(long)]
    n: u32,
    /// Comma-separated degrees, e.g. `1,2`; empty or omitted for P^n itself.
    #[arg(long = "type", default_value = "")]
    type_spec: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic, Betti numbers, Poincaré polynomial and p(i).
    Invariants(TypeArgs),
    /// Obstruction verdict, lemma case and parity bookkeeping.
    Classify(TypeArgs),
    /// Line geometry and the fiber of lines through a general point.
    Fiber(TypeArgs),
    /// Exhaustive theorem and lemma scans.
    Scan {
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write the data to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the (2,2) Euler characteristic sum and the (t-1) expansion identity.
    VerifyIdentities {
        #[arg(long)]
        max_k: u32,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Include both sides of the expansion identity for each k.
        #[arg(long)]
        show_sides: bool,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

/// Command output: data for stdout (or `--out`), an optional summary for
/// stderr, and whether every check held.
struct Output {
    data: String,
    summary: Option<String>,
    clean: bool,
}

impl Output {
    fn data(data: String) -> Self {
        Self {
            data,
            summary: None,
            clean: true,
        }
    }
}

fn parse_type(args: &TypeArgs) -> Result<CIType, Failure> {
    let degrees = parse_degrees(&args.type_spec).map_err(|e| Failure::Usage(e.to_string()))?;
    CIType::new(args.n, degrees).map_err(|e| Failure::Usage(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).context("serializing JSON")?;
    s.push('\n');
    Ok(s)
}

fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).context("writing CSV")?;
    for row in rows {
        w.write_record(row).context("writing CSV")?;
    }
    let bytes = w.into_inner().context("flushing CSV")?;
    Ok(String::from_utf8(bytes).context("CSV is UTF-8")?)
}

fn kv_table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

/// Key/value rows rendered as a table or a one-row CSV.
fn render_rows(rows: &[(&str, String)], format: Format) -> Result<String, Failure> {
    match format {
        Format::Table => Ok(kv_table(rows)),
        Format::Csv => {
            let header: Vec<&str> = rows.iter().map(|(k, _)| *k).collect();
            let values: Vec<String> = rows.iter().map(|(_, v)| v.clone()).collect();
            to_csv(&header, &[values])
        }
        Format::Json => unreachable!("JSON is rendered from records"),
    }
}

fn invariant_rows(r: &InvariantReport) -> Vec<(&'static str, String)> {
    vec![
        ("type", r.ci.to_string()),
        ("dimension_k", r.dimension_k.to_string()),
        ("euler_char", r.euler_char.to_string()),
        ("middle_betti", r.middle_betti.to_string()),
        ("betti_sum", r.betti_sum().to_string()),
        ("poincare", r.poincare.to_string()),
        ("p(i)", r.value_at_i.to_string()),
    ]
}

fn cmd_invariants(args: &TypeArgs) -> Result<Output, Failure> {
    let ci = parse_type(args)?;
    let report = InvariantReport::compute(&ci);
    let data = match args.format {
        Format::Json => to_json(&InvariantsRecord::from(&report))?,
        f => render_rows(&invariant_rows(&report), f)?,
    };
    Ok(Output::data(data))
}

fn classification_failure(e: ClassificationError) -> Failure {
    match e {
        ClassificationError::NoAmbient
        | ClassificationError::NotHomogeneous(_)
        | ClassificationError::Topology(_) => Failure::Usage(e.to_string()),
        _ => Failure::Violation(e.to_string()),
    }
}

fn cmd_classify(args: &TypeArgs) -> Result<Output, Failure> {
    let ci = parse_type(args)?;
    let verdict = theorem_verdict(&ci).map_err(classification_failure)?;
    let case = lemma_classify(&ci).map_err(classification_failure)?;
    let parity = if verdict.reason.route == Some(HomogeneousRoute::LineFibration) {
        Some(homogeneous_parity_report(&ci).map_err(classification_failure)?)
    } else {
        None
    };
    let data = match args.format {
        Format::Json => to_json(&ClassifyRecord::new(&verdict, case.name(), parity))?,
        f => {
            let r = &verdict.reason;
            let mut rows = vec![
                ("type", ci.to_string()),
                ("verdict", verdict.kind.to_string()),
                ("route", r.route.map_or("-", |x| x.name()).to_string()),
                ("reason", verdict.explanation()),
                ("dimension", r.dimension.to_string()),
                ("d", r.total_degree.to_string()),
                ("n", r.ambient_dim.to_string()),
                ("deg_N_L", r.normal_degree.to_string()),
                ("p_X(i)", r.x_at_i.to_string()),
                (
                    "p_F(i)",
                    r.f_at_i
                        .as_ref()
                        .map_or("-".to_string(), ToString::to_string),
                ),
                ("lemma_case", case.to_string()),
            ];
            if let Some(p) = parity {
                rows.push(("p_X(i)=0", p.x_vanishes.to_string()));
                rows.push(("p_F(i)=0", p.f_vanishes.to_string()));
            }
            render_rows(&rows, f)?
        }
    };
    Ok(Output::data(data))
}

fn cmd_fiber(args: &TypeArgs) -> Result<Output, Failure> {
    let ci = parse_type(args)?;
    let geometry = line_geometry(&ci).map_err(|e| Failure::Usage(e.to_string()))?;
    let fiber = match fiber_type(&ci) {
        Ok(f) => Some(InvariantReport::compute(&f)),
        Err(LinesError::NegativeFiberDimension { .. }) => None,
        Err(e) => return Err(Failure::Violation(e.to_string())),
    };
    let data = match args.format {
        Format::Json => to_json(&FiberRecord::new(&geometry, fiber.as_ref()))?,
        f => {
            let mut rows = vec![
                ("type", ci.to_string()),
                ("moduli_dim", geometry.moduli_dim.to_string()),
                ("fiber_dim", geometry.fiber_dim.to_string()),
                ("normal_degree", geometry.normal_degree.to_string()),
                (
                    "rationally_connected",
                    geometry.rationally_connected.to_string(),
                ),
            ];
            match &fiber {
                Some(report) => {
                    rows.push(("status", "ok".to_string()));
                    rows.extend(
                        invariant_rows(report)
                            .into_iter()
                            .map(|(k, v)| (fiber_key(k), v)),
                    );
                }
                None => rows.push(("status", "negative_fiber_dimension".to_string())),
            }
            render_rows(&rows, f)?
        }
    };
    Ok(Output::data(data))
}

fn fiber_key(k: &str) -> &'static str {
    match k {
        "type" => "fiber_type",
        "dimension_k" => "fiber_dimension_k",
        "euler_char" => "fiber_euler_char",
        "middle_betti" => "fiber_middle_betti",
        "betti_sum" => "fiber_betti_sum",
        "poincare" => "fiber_poincare",
        _ => "fiber_p(i)",
    }
}

fn scan_options() -> Result<ScanOptions, Failure> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|e| {
            Failure::Usage(format!("{THREADS_ENV}={v:?} is not a thread count: {e}"))
        })?),
        Err(_) => None,
    };
    Ok(ScanOptions {
        threads: threads.filter(|&t| t > 0),
    })
}

const SCAN_HEADER: [&str; 9] = [
    "scan", "n", "degrees", "k", "d", "b_k", "p_x_at_i", "p_f_at_i", "outcome",
];

fn scan_rows(report: &ScanReport) -> Vec<Vec<String>> {
    report
        .records
        .iter()
        .map(|r| {
            let row = ScanRowRecord::new(report.kind.name(), r);
            vec![
                row.scan,
                row.n,
                row.degrees,
                row.k,
                row.d,
                row.b_k,
                row.p_x_at_i,
                row.p_f_at_i,
                row.outcome,
            ]
        })
        .collect()
}

#[derive(Serialize)]
struct ScanDocument {
    scans: Vec<ScanSummaryRecord>,
}

fn cmd_scan(max_n: u32, max_degree: u32, format: Format) -> Result<Output, Failure> {
    if max_n < 1 || max_degree < 1 {
        return Err(Failure::Usage(
            "--max-n and --max-degree must be at least 1".into(),
        ));
    }
    let options = scan_options()?;
    let theorem = scan_theorem_with(max_n, max_degree, &options).map_err(classification_failure)?;
    let lemma = scan_lemma_with(max_n, max_degree, &options).map_err(classification_failure)?;
    let reports = [&theorem, &lemma];
    let data = match format {
        Format::Table => reports.iter().map(|r| r.to_lines()).collect(),
        Format::Json => to_json(&ScanDocument {
            scans: reports
                .iter()
                .map(|r| ScanSummaryRecord::from(*r))
                .collect(),
        })?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports.iter().flat_map(|r| scan_rows(r)).collect();
            to_csv(&SCAN_HEADER, &rows)?
        }
    };
    let summary = reports
        .iter()
        .map(|r| {
            let counts: Vec<String> = r.counts().iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!(
                "{} scan (n <= {max_n}, degrees <= {max_degree}): {} types, {} violations [{}]\n",
                r.kind.name(),
                r.records.len(),
                r.violations.len(),
                counts.join(" ")
            )
        })
        .collect();
    Ok(Output {
        data,
        summary: Some(summary),
        clean: theorem.is_clean() && lemma.is_clean(),
    })
}

fn cmd_verify_identities(max_k: u32, format: Format, show_sides: bool) -> Result<Output, Failure> {
    let mut results = Vec::with_capacity(max_k as usize + 1);
    for k in 0..=max_k {
        let (lhs, rhs) = expansion_identity_sides(k);
        let sum = chi22_sum(k);
        let closed = chi22_closed_form(k);
        results.push(IdentityRow {
            k: k.to_string(),
            expansion_holds: lhs == rhs,
            chi22_agrees: sum == closed,
            chi22_sum: sum.to_string(),
            chi22_closed_form: closed.to_string(),
            lhs: show_sides.then(|| lhs.to_string()),
            rhs: show_sides.then(|| rhs.to_string()),
        });
    }
    let failures: Vec<&IdentityRow> = results
        .iter()
        .filter(|r| !(r.expansion_holds && r.chi22_agrees))
        .collect();
    let all_hold = failures.is_empty();
    let summary = if all_hold {
        format!("verify-identities: all hold for 0 <= k <= {max_k}\n")
    } else {
        let ks: Vec<&str> = failures.iter().map(|r| r.k.as_str()).collect();
        format!("verify-identities: failures at k = {}\n", ks.join(", "))
    };
    let data = match format {
        Format::Json => to_json(&IdentitiesRecord {
            max_k: max_k.to_string(),
            all_hold,
            results,
        })?,
        Format::Csv => {
            let mut header = vec![
                "k",
                "expansion_holds",
                "chi22_sum",
                "chi22_closed_form",
                "chi22_agrees",
            ];
            if show_sides {
                header.extend(["lhs", "rhs"]);
            }
            let rows: Vec<Vec<String>> = results
                .into_iter()
                .map(|r| {
                    let mut row = vec![
                        r.k,
                        r.expansion_holds.to_string(),
                        r.chi22_sum,
                        r.chi22_closed_form,
                        r.chi22_agrees.to_string(),
                    ];
                    row.extend(r.lhs);
                    row.extend(r.rhs);
                    row
                })
                .collect();
            to_csv(&header, &rows)?
        }
        Format::Table => results
            .iter()
            .map(|r| {
                let mut line = format!(
                    "k={} expansion={} chi22_sum={} closed_form={} agree={}",
                    r.k,
                    if r.expansion_holds { "ok" } else { "FAIL" },
                    r.chi22_sum,
                    r.chi22_closed_form,
                    if r.chi22_agrees { "ok" } else { "FAIL" },
                );
                if let (Some(lhs), Some(rhs)) = (&r.lhs, &r.rhs) {
                    line.push_str(&format!(" lhs={lhs} rhs={rhs}"));
                }
                line.push('\n');
                line
            })
            .collect(),
    };
    Ok(Output {
        data,
        summary: Some(summary),
        clean: all_hold,
    })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Invariants(args) => cmd_invariants(args),
        Command::Classify(args) => cmd_classify(args),
        Command::Fiber(args) => cmd_fiber(args),
        Command::Scan {
            max_n,
            max_degree,
            format,
            ..
        } => cmd_scan(*max_n, *max_degree, *format),
        Command::VerifyIdentities {
            max_k,
            format,
            show_sides,
        } => cmd_verify_identities(*max_k, *format, *show_sides),
    }
}

fn emit(cli: &Cli, output: &Output) -> anyhow::Result<()> {
    let out_path = match &cli.command {
        Command::Scan { out, .. } => out.as_ref(),
        _ => None,
    };
    match out_path {
        Some(path) => std::fs::write(path, &output.data)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(output.data.as_bytes())?;
            stdout.flush()?;
        }
    }
    if let (Some(summary), false) = (&output.summary, cli.quiet) {
        eprint!("{summary}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Err(e) = emit(&cli, &output) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if output.clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
